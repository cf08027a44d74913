//! Vertex types of cubic triangle-free graphs, told apart by the exact
//! probability that the vertex lands in the random-order forcing set.

use serde::Serialize;

use super::rational::{self, ratio, Rational};
use super::{BoundEntry, BoundKind, BoundStatus};
use crate::heuristics::inclusion_probability;
use crate::{Error, Graph, Result};

/// `(index, numerator, denominator)`; the seven probabilities are distinct.
pub const TYPE_PROBABILITIES: [(u8, i64, i64); 7] = [
    (1, 81, 140),
    (2, 149, 252),
    (3, 5, 8),
    (4, 171, 280),
    (5, 101, 168),
    (6, 269, 420),
    (7, 17, 28),
];

/// The local shape of a vertex's distance-2 neighborhood, with its inclusion
/// probability.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VertexType {
    pub index: u8,
    #[serde(serialize_with = "rational::serialize")]
    pub probability: Rational,
}

fn check_cubic_triangle_free(g: &Graph) -> Result<()> {
    if g.regularity() != Some(3) {
        return Err(Error::Precondition("graph must be cubic".into()));
    }
    if g.girth() == Some(3) {
        return Err(Error::Precondition("graph must be triangle-free".into()));
    }
    Ok(())
}

/// Type of `u` in a cubic triangle-free graph whose component at `u` is not
/// `K_{3,3}`.
pub fn classify_vertex(g: &Graph, u: usize) -> Result<VertexType> {
    check_cubic_triangle_free(g)?;
    let p = inclusion_probability(g, u)?;
    TYPE_PROBABILITIES
        .iter()
        .find(|&&(_, a, b)| ratio(a, b) == p)
        .map(|&(index, _, _)| VertexType {
            index,
            probability: p.clone(),
        })
        .ok_or_else(|| {
            Error::Precondition(format!(
                "inclusion probability {} of vertex {u} matches no type (K_{{3,3}} component?)",
                rational::display(&p)
            ))
        })
}

/// `n_i`, the number of vertices of each type `i = 1..=7`.
pub fn type_counts(g: &Graph) -> Result<[usize; 7]> {
    let mut counts = [0; 7];
    for u in 0..g.n() {
        counts[classify_vertex(g, u)?.index as usize - 1] += 1;
    }
    Ok(counts)
}

/// `Σ p_i n_i` for cubic triangle-free graphs without a `K_{3,3}` component.
pub fn cubic_type_bound(g: &Graph) -> Result<BoundEntry> {
    let app = match check_cubic_triangle_free(g) {
        Err(Error::Precondition(why)) => Err(why),
        Err(e) => return Err(e),
        Ok(()) if g.has_k33_component() => Err("has a K_{3,3} component".to_string()),
        Ok(()) => Ok("cubic, triangle-free, no K_{3,3} component".to_string()),
    };
    BoundEntry::new(
        "cubic_types",
        BoundKind::Upper,
        BoundStatus::Proven,
        "Σ_i p_i n_i over the seven vertex types",
        app,
        || {
            let counts = type_counts(g)?;
            Ok(TYPE_PROBABILITIES
                .iter()
                .zip(counts)
                .map(|(&(_, a, b), c)| ratio(a, b) * rational::integer(c))
                .sum())
        },
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::heuristics::expected_size;
    use crate::NamedFamily;

    fn cube() -> Graph {
        let mut edges = Vec::new();
        for v in 0..8usize {
            for b in [1, 2, 4] {
                if v & b == 0 {
                    edges.push((v, v | b));
                }
            }
        }
        Graph::from_edges(8, edges).unwrap()
    }

    #[test]
    fn probabilities_distinct() {
        for (i, a) in TYPE_PROBABILITIES.iter().enumerate() {
            for b in &TYPE_PROBABILITIES[i + 1..] {
                assert_ne!(ratio(a.1, a.2), ratio(b.1, b.2));
            }
        }
    }

    #[test]
    fn petersen_all_first_type() {
        let g = NamedFamily::Petersen.generate().unwrap();
        assert_eq!(type_counts(&g).unwrap(), [10, 0, 0, 0, 0, 0, 0]);
        let e = cubic_type_bound(&g).unwrap();
        assert_eq!(e.value, Some(ratio(81, 14)));
    }

    #[test]
    fn fourth_type_sum() {
        // 1 - 3/4 + 1/5 + 2/7 - 1/8
        let p = ratio(1, 1) - ratio(3, 4) + ratio(1, 5) + ratio(2, 7) - ratio(1, 8);
        assert_eq!(p, ratio(171, 280));
    }

    #[test]
    fn cube_matches_expectation() {
        let g = cube();
        let e = cubic_type_bound(&g).unwrap();
        assert!(e.applicable);
        assert_eq!(e.value.unwrap(), expected_size(&g).unwrap());
    }

    #[test]
    fn k33_rejected() {
        let g = NamedFamily::CompleteBipartite(3, 3).generate().unwrap();
        assert!(matches!(classify_vertex(&g, 0), Err(Error::Precondition(_))));
        assert!(!cubic_type_bound(&g).unwrap().applicable);
        let k4 = NamedFamily::Complete(4).generate().unwrap();
        assert!(classify_vertex(&k4, 0).is_err());
    }
}
