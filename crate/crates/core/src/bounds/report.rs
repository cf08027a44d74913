//! All bounds for one graph, optionally checked against the exact value.

use serde::Serialize;

use super::{all_entries, entry_holds, BoundEntry, BoundStatus};
use crate::exact::MAX_COMPONENT_ORDER;
use crate::{zero_forcing_number, ExactResult, Graph, Result};

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GraphStats {
    pub n: usize,
    pub edges: usize,
    pub max_degree: usize,
    pub min_degree: usize,
    pub girth: Option<usize>,
    pub connected: bool,
    pub regular: Option<usize>,
}

impl GraphStats {
    pub fn of(g: &Graph) -> Self {
        Self {
            n: g.n(),
            edges: g.edge_count(),
            max_degree: g.max_degree(),
            min_degree: g.min_degree(),
            girth: g.girth(),
            connected: g.is_connected(),
            regular: g.regularity(),
        }
    }
}

/// When to run the exact solver.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ReportOptions {
    pub exact: bool,
    /// Largest order for which the exact value is attempted.
    pub exact_max_n: usize,
    /// Closure evaluations allowed; on exhaustion no exact value is attached.
    pub budget: Option<u64>,
}

impl Default for ReportOptions {
    fn default() -> Self {
        Self {
            exact: true,
            exact_max_n: MAX_COMPONENT_ORDER,
            budget: Some(50_000_000),
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct BoundReport {
    #[serde(flatten)]
    pub stats: GraphStats,
    pub entries: Vec<BoundEntry>,
    pub exact: Option<ExactResult>,
    /// Proven entries contradicted by the exact value; always a defect.
    pub violations: Vec<String>,
    /// Conjectured entries contradicted by the exact value.
    pub conjecture_flags: Vec<String>,
}

/// See [`bounds_report_with`]; `with_exact` uses the default limits.
pub fn bounds_report(g: &Graph, with_exact: bool) -> Result<BoundReport> {
    bounds_report_with(
        g,
        ReportOptions {
            exact: with_exact,
            ..Default::default()
        },
    )
}

/// Evaluates every entry and, if requested and within limits, compares each
/// applicable one with `Z(G)`.
pub fn bounds_report_with(g: &Graph, opts: ReportOptions) -> Result<BoundReport> {
    let entries = all_entries(g)?;
    let fits = g.components().iter().all(|c| c.len() <= MAX_COMPONENT_ORDER);
    let exact = if opts.exact && g.n() <= opts.exact_max_n && fits {
        zero_forcing_number(g, opts.budget)?.into_exact()
    } else {
        None
    };
    let mut violations = Vec::new();
    let mut conjecture_flags = Vec::new();
    if let Some(ex) = &exact {
        for e in &entries {
            if entry_holds(e, g.n(), ex.value) == Some(false) {
                match e.status {
                    BoundStatus::Proven => violations.push(e.name.to_string()),
                    BoundStatus::Conjectured => conjecture_flags.push(e.name.to_string()),
                    BoundStatus::Informational => {}
                }
            }
        }
    }
    Ok(BoundReport {
        stats: GraphStats::of(g),
        entries,
        exact,
        violations,
        conjecture_flags,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bounds::rational::ratio;
    use crate::NamedFamily;

    #[test]
    fn petersen_report() {
        let g = NamedFamily::Petersen.generate().unwrap();
        let r = bounds_report(&g, true).unwrap();
        assert_eq!(r.exact.as_ref().unwrap().value, 5);
        assert!(r.violations.is_empty(), "{:?}", r.violations);
        assert!(r.conjecture_flags.is_empty());
        let get = |name: &str| r.entries.iter().find(|e| e.name == name).unwrap();
        assert_eq!(get("girth_lower").value, Some(ratio(5, 1)));
        assert_eq!(get("random_order_expectation").value, Some(ratio(81, 14)));
        assert_eq!(get("cubic_types").value, get("random_order_expectation").value);
        assert_eq!(get("regular_girth5").value, get("random_order_expectation").value);
        let json = serde_json::to_value(&r).unwrap();
        assert_eq!(json["n"], 10);
        assert_eq!(json["entries"][0]["value"]["den"], 2);
    }

    #[test]
    fn display_form_fails_on_cycles_without_violation() {
        let g = NamedFamily::Cycle(6).generate().unwrap();
        let r = bounds_report(&g, true).unwrap();
        let disp = r.entries.iter().find(|e| e.name == "additive_display").unwrap();
        assert_eq!(entry_holds(disp, 6, 2), Some(false));
        assert!(r.violations.is_empty());
    }

    #[test]
    fn exceptional_graphs_exceed_nonexceptional_value() {
        use crate::bounds::nonexceptional_value;
        use crate::bounds::rational::integer;
        for fam in [
            NamedFamily::Complete(4),
            NamedFamily::ExceptionalFive,
            NamedFamily::ExceptionalSeven,
            NamedFamily::CompleteBipartite(3, 3),
            NamedFamily::CompleteBipartite(2, 3),
        ] {
            let g = fam.generate().unwrap();
            let r = bounds_report(&g, true).unwrap();
            let z = r.exact.unwrap().value;
            assert!(
                integer(z) > nonexceptional_value(g.n(), g.max_degree()).unwrap(),
                "{fam}"
            );
        }
    }
}
