//! Upper and lower bounds on the zero forcing number, evaluated exactly.
//!
//! Every value is a [`Rational`]. The one irrational ingredient, `log2(n)`,
//! enters comparisons through exact integer power tests and enters displayed
//! values through a certified dyadic overestimate.

pub mod log2;
pub mod rational;
mod report;
mod table;

use num_bigint::BigInt;
use serde::Serialize;

use crate::exceptional::identify_exceptional;
use crate::{Error, Graph, Result};
use log2::{log2_at_least, log2_enclosure, DEFAULT_DIGITS};
use rational::integer;
pub use rational::Rational;
pub use report::{bounds_report, bounds_report_with, BoundReport, GraphStats, ReportOptions};
pub use table::{classify_vertex, cubic_type_bound, type_counts, VertexType, TYPE_PROBABILITIES};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum BoundKind {
    Upper,
    Lower,
}

/// Whether a violated entry is a defect (`Proven`), a discovery
/// (`Conjectured`) or neither (`Informational`).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum BoundStatus {
    Proven,
    Conjectured,
    Informational,
}

/// One bound evaluated on one graph. Inapplicable entries carry no value.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct BoundEntry {
    pub name: &'static str,
    pub kind: BoundKind,
    #[serde(serialize_with = "rational::serialize_opt")]
    pub value: Option<Rational>,
    pub applicable: bool,
    pub applicability_reason: String,
    pub status: BoundStatus,
    /// The formula, in words and symbols.
    pub source: &'static str,
}

impl BoundEntry {
    fn new(
        name: &'static str,
        kind: BoundKind,
        status: BoundStatus,
        source: &'static str,
        applicable: std::result::Result<String, String>,
        value: impl FnOnce() -> Result<Rational>,
    ) -> Result<Self> {
        let (applicable, applicability_reason, value) = match applicable {
            Ok(why) => (true, why, Some(value()?)),
            Err(why) => (false, why, None),
        };
        Ok(Self {
            name,
            kind,
            value,
            applicable,
            applicability_reason,
            status,
            source,
        })
    }
}

fn need_delta(delta: usize, min: usize) -> Result<()> {
    if delta < min {
        return Err(Error::InvalidParams(format!(
            "maximum degree must be at least {min}, got {delta}"
        )));
    }
    Ok(())
}

fn frac(num: usize, den: usize) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

/// `Δn/(Δ+1)`.
pub fn max_degree_bound(n: usize, delta: usize) -> Result<Rational> {
    need_delta(delta, 2)?;
    Ok(frac(delta * n, delta + 1))
}

/// `((Δ-2)n + 2)/(Δ-1)`.
pub fn additive_bound(n: usize, delta: usize) -> Result<Rational> {
    need_delta(delta, 2)?;
    Ok(frac((delta - 2) * n + 2, delta - 1))
}

/// `(Δ-2)n/(Δ-1) + 2/(Δ+1)`. Smaller than [`additive_bound`]; the cycles
/// (`Δ = 2`, value `2/3`) show it is not an upper bound as written.
pub fn additive_bound_display(n: usize, delta: usize) -> Result<Rational> {
    need_delta(delta, 2)?;
    Ok(frac((delta - 2) * n, delta - 1) + frac(2, delta + 1))
}

/// `(Δ-1)n/Δ`.
pub fn noncomplete_bound(n: usize, delta: usize) -> Result<Rational> {
    need_delta(delta, 1)?;
    Ok(frac((delta - 1) * n, delta))
}

/// `(Δ-2)n/(Δ-1)`.
pub fn nonexceptional_value(n: usize, delta: usize) -> Result<Rational> {
    need_delta(delta, 2)?;
    Ok(frac((delta - 2) * n, delta - 1))
}

/// `(Δ-2)n/(Δ-1)`, applicable to connected graphs with `Δ >= 3` other than
/// `K_{Δ+1}`, `K_{Δ,Δ}`, `K_{Δ-1,Δ}` and the two small exceptional graphs.
pub fn nonexceptional_bound(g: &Graph) -> Result<BoundEntry> {
    let (n, delta) = (g.n(), g.max_degree());
    let app = if !g.is_connected() {
        Err("disconnected".to_string())
    } else if delta < 3 {
        Err(format!("maximum degree {delta} < 3"))
    } else if let Some(kind) = identify_exceptional(g) {
        Err(format!("exceptional graph {}", kind.name()))
    } else {
        Ok("connected, Δ >= 3, not exceptional".to_string())
    };
    BoundEntry::new(
        "nonexceptional",
        BoundKind::Upper,
        BoundStatus::Proven,
        "(Δ-2)n/(Δ-1)",
        app,
        || nonexceptional_value(n, delta),
    )
}

/// `n/2 - n/(24 log2(n) + 6) + 2` with `log2(n)` replaced by a certified
/// overestimate at most `2^-32` too large; the result is therefore never
/// below the true value. Exact when `n` is a power of two.
pub fn subcubic_girth5_bound(n: usize) -> Result<Rational> {
    if n < 2 {
        return Err(Error::InvalidParams(format!("order must be at least 2, got {n}")));
    }
    let l = log2_enclosure(n as u64, DEFAULT_DIGITS).upper;
    let n = integer(n);
    Ok(&n / integer(2) - &n / (l * integer(24) + integer(6)) + integer(2))
}

/// `size <= n/2 - n/(24 log2(n) + 6) + 2`, decided exactly.
pub fn subcubic_girth5_holds(n: usize, size: usize) -> bool {
    // with p = n + 4 - 2 size this is p > 0 and n - 3p <= 12 p log2(n)
    let p = n as i64 + 4 - 2 * size as i64;
    if p <= 0 {
        return false;
    }
    let lhs = n as i64 - 3 * p;
    lhs <= 0 || log2_at_least(n as u64, lhs, 12 * p as u64)
}

/// `∏_{i=1..r} (1 - 1/(ri+1))`.
pub fn regular_girth5_factor(r: usize) -> Result<Rational> {
    if r == 0 {
        return Err(Error::InvalidParams("degree must be at least 1".into()));
    }
    Ok((1..=r).map(|i| frac(r * i, r * i + 1)).product())
}

/// `H_r = 1 + 1/2 + ... + 1/r`.
pub fn harmonic(r: usize) -> Result<Rational> {
    if r == 0 {
        return Err(Error::InvalidParams("index must be at least 1".into()));
    }
    Ok((1..=r).map(|i| frac(1, i)).sum())
}

fn regular_girth5_applicability(g: &Graph) -> std::result::Result<(usize, String), String> {
    let r = match g.regularity() {
        Some(r) if r >= 1 => r,
        Some(_) => return Err("edgeless".into()),
        None => return Err("not regular".into()),
    };
    match g.girth() {
        Some(girth) if girth < 5 => Err(format!("girth {girth} < 5")),
        _ => Ok((r, format!("{r}-regular, girth >= 5"))),
    }
}

/// `n ∏_{i=1..r} (1 - 1/(ri+1))` for `r`-regular graphs of girth at least 5.
pub fn regular_girth5_bound(g: &Graph) -> Result<BoundEntry> {
    let app = regular_girth5_applicability(g);
    let r = app.as_ref().map(|a| a.0).unwrap_or(0);
    BoundEntry::new(
        "regular_girth5",
        BoundKind::Upper,
        BoundStatus::Proven,
        "n ∏_{i=1..r} (1 - 1/(ri+1))",
        app.map(|a| a.1),
        || Ok(regular_girth5_factor(r)? * integer(g.n())),
    )
}

/// `(1 - H_r/r) n`, the first-order form of [`regular_girth5_bound`]; not a
/// bound by itself.
pub fn regular_girth5_first_order(g: &Graph) -> Result<BoundEntry> {
    let app = regular_girth5_applicability(g);
    let r = app.as_ref().map(|a| a.0).unwrap_or(0);
    BoundEntry::new(
        "regular_girth5_first_order",
        BoundKind::Upper,
        BoundStatus::Informational,
        "(1 - H_r/r) n",
        app.map(|a| a.1),
        || Ok((integer(1) - harmonic(r)? / integer(r)) * integer(g.n())),
    )
}

/// `(g-2)(δ-2) + 2`. Proven for girth 3 through 6, conjectured beyond.
pub fn girth_lower_bound(girth: Option<usize>, min_degree: usize) -> Result<BoundEntry> {
    let app = match girth {
        None => Err("acyclic".to_string()),
        Some(_) if min_degree < 2 => Err(format!("minimum degree {min_degree} < 2")),
        Some(g) => Ok(format!("girth {g}, δ = {min_degree}")),
    };
    let status = match girth {
        Some(3..=6) | None => BoundStatus::Proven,
        Some(_) => BoundStatus::Conjectured,
    };
    let g = girth.unwrap_or(0);
    BoundEntry::new("girth_lower", BoundKind::Lower, status, "(g-2)(δ-2) + 2", app, || {
        Ok(integer((g - 2) * (min_degree - 2) + 2))
    })
}

/// `z <= n/3 + 2`, the conjectured bound for connected graphs with `Δ = 3`.
pub fn one_third_conjecture_holds(g: &Graph, z: usize) -> bool {
    3 * z <= g.n() + 6
}

/// `n/3 + 2` for connected graphs with `Δ = 3`.
pub fn one_third_entry(g: &Graph) -> Result<BoundEntry> {
    let app = if !g.is_connected() {
        Err("disconnected".to_string())
    } else if g.max_degree() != 3 {
        Err(format!("maximum degree {} != 3", g.max_degree()))
    } else {
        Ok("connected, Δ = 3".to_string())
    };
    BoundEntry::new(
        "one_third",
        BoundKind::Upper,
        BoundStatus::Conjectured,
        "n/3 + 2",
        app,
        || Ok(frac(g.n(), 3) + integer(2)),
    )
}

/// Entries depending only on `n` and `Δ` plus connectivity.
fn degree_entries(g: &Graph) -> Result<Vec<BoundEntry>> {
    let (n, delta, connected) = (g.n(), g.max_degree(), g.is_connected());
    let basic = |min: usize| -> std::result::Result<String, String> {
        if !connected {
            Err("disconnected".into())
        } else if delta < min {
            Err(format!("maximum degree {delta} < {min}"))
        } else {
            Ok(format!("connected, Δ >= {min}"))
        }
    };
    let noncomplete = match basic(3) {
        Ok(_) if g.is_complete() => Err("complete graph".to_string()),
        Ok(_) => Ok("connected, Δ >= 3, not complete".to_string()),
        e => e,
    };
    Ok(vec![
        BoundEntry::new(
            "max_degree",
            BoundKind::Upper,
            BoundStatus::Proven,
            "Δn/(Δ+1)",
            basic(2),
            || max_degree_bound(n, delta),
        )?,
        BoundEntry::new(
            "additive",
            BoundKind::Upper,
            BoundStatus::Proven,
            "((Δ-2)n + 2)/(Δ-1)",
            basic(2),
            || additive_bound(n, delta),
        )?,
        BoundEntry::new(
            "additive_display",
            BoundKind::Upper,
            BoundStatus::Informational,
            "(Δ-2)n/(Δ-1) + 2/(Δ+1)",
            basic(2),
            || additive_bound_display(n, delta),
        )?,
        BoundEntry::new(
            "noncomplete",
            BoundKind::Upper,
            BoundStatus::Proven,
            "(Δ-1)n/Δ",
            noncomplete,
            || noncomplete_bound(n, delta),
        )?,
    ])
}

fn subcubic_girth5_entry(g: &Graph) -> Result<BoundEntry> {
    let app = if !g.is_connected() {
        Err("disconnected".to_string())
    } else if g.max_degree() != 3 {
        Err(format!("maximum degree {} != 3", g.max_degree()))
    } else {
        match g.girth() {
            Some(girth) if girth < 5 => Err(format!("girth {girth} < 5")),
            _ => Ok("connected, Δ = 3, girth >= 5".to_string()),
        }
    };
    BoundEntry::new(
        "subcubic_girth5",
        BoundKind::Upper,
        BoundStatus::Proven,
        "n/2 - n/(24 log2(n) + 6) + 2",
        app,
        || subcubic_girth5_bound(g.n()),
    )
}

fn expectation_entry(g: &Graph) -> Result<BoundEntry> {
    let limit = crate::heuristics::MAX_EXPECTATION_DEGREE;
    let app = if g.max_degree() > limit {
        Err(format!("maximum degree {} > {limit}", g.max_degree()))
    } else {
        Ok("any graph".to_string())
    };
    BoundEntry::new(
        "random_order_expectation",
        BoundKind::Upper,
        BoundStatus::Proven,
        "Σ_u Σ_{I ⊆ N(u)} (-1)^|I| / |{u} ∪ ⋃_{v∈I} N[v]|",
        app,
        || crate::heuristics::expected_size(g),
    )
}

/// Every bound entry for `g`, in a fixed order.
pub fn all_entries(g: &Graph) -> Result<Vec<BoundEntry>> {
    let mut out = degree_entries(g)?;
    out.push(nonexceptional_bound(g)?);
    out.push(subcubic_girth5_entry(g)?);
    out.push(expectation_entry(g)?);
    out.push(regular_girth5_bound(g)?);
    out.push(regular_girth5_first_order(g)?);
    out.push(cubic_type_bound(g)?);
    out.push(one_third_entry(g)?);
    out.push(girth_lower_bound(g.girth(), g.min_degree())?);
    Ok(out)
}

/// Exact check of one entry against a known `Z(G)`: `None` when the entry
/// makes no claim, otherwise whether the claim holds.
pub fn entry_holds(entry: &BoundEntry, n: usize, z: usize) -> Option<bool> {
    let value = entry.value.as_ref()?;
    Some(match (entry.kind, entry.name) {
        (BoundKind::Upper, "subcubic_girth5") => subcubic_girth5_holds(n, z),
        (BoundKind::Upper, _) => integer(z) <= *value,
        (BoundKind::Lower, _) => *value <= integer(z),
    })
}

#[cfg(test)]
mod tests {
    use super::rational::ratio;
    use super::*;
    use crate::NamedFamily;

    #[test]
    fn degree_formulas() {
        assert_eq!(max_degree_bound(4, 3).unwrap(), ratio(3, 1));
        assert_eq!(max_degree_bound(10, 3).unwrap(), ratio(15, 2));
        assert_eq!(max_degree_bound(6, 2).unwrap(), ratio(4, 1));
        for n in 3..20 {
            assert_eq!(additive_bound(n, 2).unwrap(), ratio(2, 1));
        }
        assert_eq!(additive_bound(8, 4).unwrap(), ratio(6, 1));
        assert_eq!(additive_bound(4, 3).unwrap(), ratio(3, 1));
        assert_eq!(additive_bound_display(5, 2).unwrap(), ratio(2, 3));
        assert_eq!(noncomplete_bound(10, 3).unwrap(), ratio(20, 3));
        assert_eq!(noncomplete_bound(6, 3).unwrap(), ratio(4, 1));
        assert!(max_degree_bound(4, 1).is_err());
    }

    #[test]
    fn nonexceptional_applicability() {
        let p = nonexceptional_bound(&NamedFamily::Petersen.generate().unwrap()).unwrap();
        assert!(p.applicable);
        assert_eq!(p.value, Some(ratio(5, 1)));
        let k33 = nonexceptional_bound(&NamedFamily::CompleteBipartite(3, 3).generate().unwrap()).unwrap();
        assert!(!k33.applicable && k33.value.is_none());
        let five = nonexceptional_bound(&NamedFamily::ExceptionalFive.generate().unwrap()).unwrap();
        assert!(!five.applicable);
    }

    #[test]
    fn subcubic_girth5_value() {
        let v = rational::to_f64(&subcubic_girth5_bound(10).unwrap());
        let l = 10f64.log2();
        let want = 5.0 - 10.0 / (24.0 * l + 6.0) + 2.0;
        assert!((v - want).abs() < 1e-6 && v >= want - 1e-12, "{v} {want}");
        assert_eq!(subcubic_girth5_bound(4).unwrap(), integer(4) - ratio(2, 27));
        assert_eq!(
            subcubic_girth5_bound(16).unwrap(),
            ratio(8, 1) - ratio(16, 102) + ratio(2, 1)
        );
    }

    #[test]
    fn subcubic_girth5_exact_check() {
        for n in 4..300usize {
            let l = (n as f64).log2();
            let b = n as f64 / 2.0 - n as f64 / (24.0 * l + 6.0) + 2.0;
            for size in 0..=n {
                if (size as f64 - b).abs() > 1e-9 {
                    assert_eq!(subcubic_girth5_holds(n, size), size as f64 <= b, "{n} {size}");
                }
            }
            // the overestimated value never flips an exact "no"
            let over = subcubic_girth5_bound(n).unwrap();
            for size in 0..=n {
                if subcubic_girth5_holds(n, size) {
                    assert!(integer(size) <= over);
                }
            }
        }
    }

    #[test]
    fn factors() {
        assert_eq!(regular_girth5_factor(3).unwrap(), ratio(81, 140));
        assert_eq!(regular_girth5_factor(4).unwrap(), ratio(2048, 3315));
        assert_eq!(regular_girth5_factor(5).unwrap(), ratio(15625, 24024));
        assert_eq!(regular_girth5_factor(2).unwrap(), ratio(8, 15));
        for r in 4..=50 {
            assert!(regular_girth5_factor(r).unwrap() < frac(r - 2, r - 1), "{r}");
        }
        assert_eq!(harmonic(1).unwrap(), ratio(1, 1));
        assert_eq!(harmonic(3).unwrap(), ratio(11, 6));
        assert_eq!(harmonic(5).unwrap(), ratio(137, 60));
    }

    #[test]
    fn regular_entries() {
        let p = regular_girth5_bound(&NamedFamily::Petersen.generate().unwrap()).unwrap();
        assert_eq!(p.value, Some(ratio(81, 14)));
        let c7 = regular_girth5_bound(&NamedFamily::Cycle(7).generate().unwrap()).unwrap();
        assert_eq!(c7.value, Some(ratio(56, 15)));
        let k4 = regular_girth5_bound(&NamedFamily::Complete(4).generate().unwrap()).unwrap();
        assert!(!k4.applicable);
    }

    #[test]
    fn girth_lower_values() {
        let e = |g, d| girth_lower_bound(Some(g), d).unwrap();
        assert_eq!(e(5, 3).value, Some(ratio(5, 1)));
        assert_eq!(e(6, 3).value, Some(ratio(6, 1)));
        assert_eq!(e(5, 2).value, Some(ratio(2, 1)));
        assert_eq!(e(5, 3).status, BoundStatus::Proven);
        assert_eq!(e(7, 3).status, BoundStatus::Conjectured);
        assert!(!girth_lower_bound(None, 3).unwrap().applicable);
        assert!(!e(5, 1).applicable);
    }

    #[test]
    fn one_third() {
        let p = NamedFamily::Petersen.generate().unwrap();
        assert!(one_third_conjecture_holds(&p, 5));
        assert!(!one_third_conjecture_holds(&p, 6));
        let k4 = NamedFamily::Complete(4).generate().unwrap();
        assert!(one_third_conjecture_holds(&k4, 3));
    }
}
