//! Cayley graphs of finite quotients and the 1-skeleton of the
//! corresponding cover, plus the exact cut-size threshold that forces
//! positive first Betti number of the cover.

use num_rational::Ratio;

use crate::cover::CoverTriangulation;
use crate::graph::MultiGraph;
use crate::presentation::FiniteQuotient;

/// Cayley graph of the quotient with respect to the generator images:
/// one edge g -- g*x per element g and generator image x, as an
/// undirected multigraph (loops arise from trivial images).
pub fn cayley_graph(quotient: &FiniteQuotient) -> MultiGraph {
    let n = quotient.degree();
    let mut graph = MultiGraph::new(n);
    for g in 0..n {
        for &x in &quotient.images {
            graph
                .add_edge(g, quotient.group.mul(g, x), 1)
                .expect("elements are in range");
        }
    }
    graph
}

/// 1-skeleton of the cover: vertices are group elements, and edge `i` is
/// lifted edge class `i` (so cut boundaries translate directly into
/// supports on the cover's edges). Isomorphic to `cayley_graph` of the
/// same quotient.
pub fn one_skeleton(cover: &CoverTriangulation) -> MultiGraph {
    let mut graph = MultiGraph::new(cover.degree());
    for class in 0..cover.skeleton.edge_count {
        let (tail, head) = cover.skeleton.edge_endpoints(class);
        graph
            .add_edge(
                cover.element_of_vertex_class(tail),
                cover.element_of_vertex_class(head),
                1,
            )
            .expect("vertex classes biject with elements");
    }
    graph
}

/// Exact test of the small-cut criterion: a cut quotient h on a graph
/// with n vertices forces positive first Betti number of the cover when
/// h^2 * 3n < 2, compared exactly as 3 n p^2 < 2 q^2.
pub fn forces_positive_b1(ratio: Ratio<u64>, vertex_count: usize) -> bool {
    let p = *ratio.numer() as u128;
    let q = *ratio.denom() as u128;
    // An overflowing left-hand side is certainly not below the threshold.
    let lhs = (3 * vertex_count as u128)
        .checked_mul(p)
        .and_then(|x| x.checked_mul(p));
    match lhs {
        Some(lhs) => lhs < 2 * q * q,
        None => false,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::census;
    use crate::cover::build_cover;
    use crate::graph::{cheeger_exact, EXACT_VERTEX_LIMIT};
    use crate::presentation::{cyclic_quotients, presentation_from};
    use crate::skeleton::build_skeleton;
    use crate::triangulation::Triangulation;

    fn cyclic_quotient(t: &Triangulation, n: usize) -> crate::presentation::FiniteQuotient {
        let s = build_skeleton(t).unwrap();
        let p = presentation_from(&s).unwrap();
        cyclic_quotients(&p, n).remove(0)
    }

    #[test]
    fn skeleton_matches_cayley_graph() {
        for (t, n) in [
            (census::s2xs1(), 5),
            (census::t3(), 2),
            (census::l3_1(), 3),
        ] {
            let q = cyclic_quotient(&t, n);
            let cover = build_cover(&t, &q).unwrap();
            let from_cover = one_skeleton(&cover);
            let from_group = cayley_graph(&q);
            assert_eq!(from_cover.vertex_count(), from_group.vertex_count());
            assert_eq!(from_cover.canonical_edges(), from_group.canonical_edges());
        }
    }

    #[test]
    fn skeleton_edge_count_scales_with_degree() {
        let t = census::s2xs1();
        let base_edges = build_skeleton(&t).unwrap().edge_count;
        for n in 2..=6 {
            let q = cyclic_quotient(&t, n);
            let cover = build_cover(&t, &q).unwrap();
            let g = one_skeleton(&cover);
            assert_eq!(g.vertex_count(), n);
            assert_eq!(g.edges().len(), base_edges * n);
        }
    }

    #[test]
    fn cyclic_cayley_cheeger_shrinks_with_degree() {
        // Covers of S2 x S1 give cycle-like Cayley graphs whose Cheeger
        // constant decays, eventually crossing the forcing threshold.
        let t = census::s2xs1();
        let mut last = None;
        for n in [3usize, 6, 12] {
            let q = cyclic_quotient(&t, n);
            let cover = build_cover(&t, &q).unwrap();
            let g = one_skeleton(&cover);
            let cut = cheeger_exact(&g, EXACT_VERTEX_LIMIT).unwrap();
            if let Some(prev) = last {
                assert!(cut.ratio <= prev);
            }
            last = Some(cut.ratio);
        }
    }

    #[test]
    fn forcing_threshold_is_exact() {
        // h = 1/2 on 2 vertices: 3*2*1 = 6 < 2*4 = 8, so forced.
        assert!(forces_positive_b1(Ratio::new(1, 2), 2));
        // Boundary case h^2 * 3n == 2 must not count as forced.
        assert!(!forces_positive_b1(Ratio::new(1, 1), 1));
        assert!(forces_positive_b1(Ratio::new(0, 1), 100));
        assert!(!forces_positive_b1(Ratio::new(2, 1), 4));
        // Large values must not overflow.
        assert!(!forces_positive_b1(
            Ratio::new(u64::MAX, 1),
            usize::MAX
        ));
    }
}
