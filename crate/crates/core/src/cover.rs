//! Finite regular covers: lift a 1-vertex triangulation through a finite
//! quotient of its fundamental group.
//!
//! Lifted tetrahedra are pairs (base tet, group element), indexed as
//! `base_tet * degree + element`. Corner `v` of copy `(t, g)` lies over the
//! group element `g * lambda(t, v)`, where `lambda(t, v)` is the image of
//! the edge path `0 -> v` inside tet `t`. Crossing a face composes the
//! label with the image of the edge generators crossed, on the right.

use crate::presentation::{presentation_from, validate_quotient, FiniteQuotient};
use crate::skeleton::{build_skeleton, edge_index, Skeleton};
use crate::triangulation::{Triangulation, FACE_VERTICES};

#[derive(Debug, thiserror::Error)]
pub enum CoverError {
    #[error("base triangulation failed validation: {0}")]
    InvalidBase(String),
    #[error("base triangulation must have exactly one vertex class, found {0}")]
    NotOneVertex(usize),
    #[error("quotient failed validation: {0}")]
    InvalidQuotient(String),
    #[error("unknown group element {0}")]
    UnknownElement(usize),
}

/// A cell of the lifted triangulation, by class id.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Cell {
    Tet(usize),
    Vertex(usize),
    Edge(usize),
    Face(usize),
}

/// A built regular cover with its deck action.
#[derive(Clone, Debug)]
pub struct CoverTriangulation {
    pub base: Triangulation,
    pub base_skeleton: Skeleton,
    pub quotient: FiniteQuotient,
    pub lifted: Triangulation,
    pub skeleton: Skeleton,
    /// lambda(t, v): group element over corner v of the identity copy of t.
    corner_label: Vec<[usize; 4]>,
    /// Lifted vertex class of each group element, and its inverse map.
    vertex_of_element: Vec<usize>,
    element_of_vertex: Vec<usize>,
}

impl CoverTriangulation {
    pub fn degree(&self) -> usize {
        self.quotient.degree()
    }

    pub fn lifted_tet(&self, base_tet: usize, element: usize) -> usize {
        base_tet * self.degree() + element
    }

    /// (base tet, group element) of a lifted tetrahedron.
    pub fn label(&self, lifted_tet: usize) -> (usize, usize) {
        (lifted_tet / self.degree(), lifted_tet % self.degree())
    }

    pub fn vertex_class_of_element(&self, g: usize) -> usize {
        self.vertex_of_element[g]
    }

    pub fn element_of_vertex_class(&self, class: usize) -> usize {
        self.element_of_vertex[class]
    }

    /// Group element over corner `v` of a lifted tetrahedron.
    pub fn corner_element(&self, lifted_tet: usize, v: usize) -> usize {
        let (base_tet, g) = self.label(lifted_tet);
        self.quotient.group.mul(g, self.corner_label[base_tet][v])
    }

    /// Base edge class under a lifted edge class.
    pub fn project_edge(&self, lifted_class: usize) -> usize {
        let (tet, a, b) = self.skeleton.edge_rep[lifted_class];
        let (base_tet, _) = self.label(tet);
        self.base_skeleton.edge_class[base_tet][edge_index(a, b)]
    }

    /// Deck translation of a cell by a group element: copy `(t, g)` maps to
    /// `(t, a * g)`. Applying `a` then `b` equals applying `b * a`.
    pub fn deck_translate(&self, a: usize, cell: Cell) -> Result<Cell, CoverError> {
        if a >= self.degree() {
            return Err(CoverError::UnknownElement(a));
        }
        let group = &self.quotient.group;
        Ok(match cell {
            Cell::Tet(tet) => {
                let (base_tet, g) = self.label(tet);
                Cell::Tet(self.lifted_tet(base_tet, group.mul(a, g)))
            }
            Cell::Vertex(class) => {
                let e = self.element_of_vertex_class(class);
                Cell::Vertex(self.vertex_class_of_element(group.mul(a, e)))
            }
            Cell::Edge(class) => Cell::Edge(self.translate_edge(a, class).0),
            Cell::Face(class) => {
                let (tet, face) = self.skeleton.face_rep[class];
                let Cell::Tet(tet2) = self.deck_translate(a, Cell::Tet(tet))? else {
                    unreachable!()
                };
                Cell::Face(self.skeleton.face_class[tet2][face])
            }
        })
    }

    /// Deck translation of an edge class, with the sign relating the
    /// translated class orientation to the original one.
    pub fn translate_edge(&self, a: usize, class: usize) -> (usize, i64) {
        let (tet, va, vb) = self.skeleton.edge_rep[class];
        let (base_tet, g) = self.label(tet);
        let tet2 = self.lifted_tet(base_tet, self.quotient.group.mul(a, g));
        let (class2, sign2) = self.skeleton.directed_edge(tet2, va, vb);
        // The rep itself has sign +1 in its own class, so sign2 already
        // relates translated orientation to the original.
        (class2, sign2)
    }

    /// Companion label file: `lift <tet'> = <base-tet> <element>` per line.
    pub fn labels_to_text(&self) -> String {
        let mut out = String::new();
        for tet in 0..self.lifted.tet_count() {
            let (b, g) = self.label(tet);
            out.push_str(&format!("lift {} = {} {}\n", tet, b, g));
        }
        out
    }
}

/// Build the regular cover defined by a finite quotient of the edge
/// presentation. The base must be valid, connected and 1-vertex.
pub fn build_cover(
    base: &Triangulation,
    quotient: &FiniteQuotient,
) -> Result<CoverTriangulation, CoverError> {
    let report = base.validate();
    if !report.all_pass() {
        let failed: Vec<&str> = report
            .checks
            .iter()
            .filter(|c| !c.pass)
            .map(|c| c.name)
            .collect();
        return Err(CoverError::InvalidBase(failed.join(", ")));
    }
    let base_skeleton =
        build_skeleton(base).map_err(|e| CoverError::InvalidBase(e.to_string()))?;
    if base_skeleton.vertex_count != 1 {
        return Err(CoverError::NotOneVertex(base_skeleton.vertex_count));
    }
    let presentation = presentation_from(&base_skeleton)
        .map_err(|e| CoverError::InvalidBase(e.to_string()))?;
    let qreport = validate_quotient(&presentation, quotient);
    if !qreport.all_pass() {
        let failed: Vec<&str> = qreport
            .checks
            .iter()
            .filter(|c| !c.pass)
            .map(|c| c.name)
            .collect();
        return Err(CoverError::InvalidQuotient(failed.join(", ")));
    }

    let group = &quotient.group;
    let degree = group.order();
    let n = base.tet_count();

    // Image in the quotient of the directed edge a -> b inside tet t.
    let edge_image = |t: usize, a: usize, b: usize| -> usize {
        let (class, sign) = base_skeleton.directed_edge(t, a, b);
        let img = quotient.images[class];
        if sign >= 0 {
            img
        } else {
            group.inv(img)
        }
    };

    // Corner labels lambda(t, v) = image of the path 0 -> v in tet t.
    let mut corner_label = vec![[0usize; 4]; n];
    for t in 0..n {
        for v in 1..4 {
            corner_label[t][v] = edge_image(t, 0, v);
        }
        // Path-independence inside the tet: the relators of the four faces
        // die in the quotient, so 0->a->b must agree with 0->b.
        for a in 0..4 {
            for b in 0..4 {
                if a != b {
                    debug_assert_eq!(
                        group.mul(corner_label[t][a], edge_image(t, a, b)),
                        corner_label[t][b]
                    );
                }
            }
        }
    }

    // Lifted gluings: ((t, g), f) -> ((t', g * delta(t, f)), f', perm).
    let mut lifted = Triangulation::empty(n * degree);
    for t in 0..n {
        for f in 0..4 {
            let g = base.gluing(t, f).unwrap();
            // delta is independent of which face vertex we read it from.
            let mut delta = None;
            for &w in &FACE_VERTICES[f] {
                let (_, w2) = base.map_vertex(t, f, w).unwrap();
                let d = group.mul(corner_label[t][w], group.inv(corner_label[g.tet][w2]));
                match delta {
                    None => delta = Some(d),
                    Some(prev) => assert_eq!(prev, d, "inconsistent face label shift"),
                }
            }
            let delta = delta.unwrap();
            for elt in 0..degree {
                let src = t * degree + elt;
                if lifted.gluing(src, f).is_some() {
                    continue;
                }
                let dst = g.tet * degree + group.mul(elt, delta);
                lifted.glue(src, f, dst, g.face, g.perm).unwrap();
            }
        }
    }

    let lifted_report = lifted.validate();
    assert!(
        lifted_report.all_pass(),
        "lifted triangulation failed validation: {:?}",
        lifted_report
    );
    let skeleton = build_skeleton(&lifted).expect("lifted skeleton");
    assert_eq!(
        skeleton.vertex_count, degree,
        "lifted vertex classes must biject with group elements"
    );
    assert_eq!(skeleton.euler_characteristic(), 0);

    // Vertex class <-> group element bijection, checked on every corner.
    let mut vertex_of_element = vec![usize::MAX; degree];
    let mut element_of_vertex = vec![usize::MAX; degree];
    for t in 0..n {
        for elt in 0..degree {
            let tet = t * degree + elt;
            for v in 0..4 {
                let over = group.mul(elt, corner_label[t][v]);
                let class = skeleton.vertex_class[tet][v];
                if vertex_of_element[over] == usize::MAX {
                    vertex_of_element[over] = class;
                    element_of_vertex[class] = over;
                } else {
                    assert_eq!(vertex_of_element[over], class, "fiber labeling broken");
                }
            }
        }
    }

    Ok(CoverTriangulation {
        base: base.clone(),
        base_skeleton,
        quotient: quotient.clone(),
        lifted,
        skeleton,
        corner_label,
        vertex_of_element,
        element_of_vertex,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::census;
    use crate::homology::homology;
    use crate::presentation::{cyclic_quotients, presentation_from, FiniteQuotient, GroupTable};

    fn quotients(t: &Triangulation, n: usize) -> Vec<FiniteQuotient> {
        let s = build_skeleton(t).unwrap();
        let p = presentation_from(&s).unwrap();
        cyclic_quotients(&p, n)
    }

    #[test]
    fn trivial_cover_is_the_base() {
        let t = census::t3();
        let s = build_skeleton(&t).unwrap();
        let p = presentation_from(&s).unwrap();
        let q = FiniteQuotient {
            group: GroupTable::trivial(),
            images: vec![0; p.generator_count],
        };
        let c = build_cover(&t, &q).unwrap();
        assert_eq!(c.lifted.tet_count(), t.tet_count());
        assert_eq!(homology(&c.lifted).unwrap(), homology(&t).unwrap());
    }

    #[test]
    fn t3_double_cover_is_t3() {
        let t = census::t3();
        for q in quotients(&t, 2) {
            let c = build_cover(&t, &q).unwrap();
            assert_eq!(c.lifted.tet_count(), 12);
            let h = homology(&c.lifted).unwrap();
            assert_eq!(h.betti, [1, 3, 3, 1], "cover of T3 must be T3");
        }
    }

    #[test]
    fn cyclic_covers_of_s2xs1() {
        let t = census::s2xs1();
        for n in 2..=6 {
            let qs = quotients(&t, n);
            assert_eq!(qs.len(), 1);
            let c = build_cover(&t, &qs[0]).unwrap();
            assert_eq!(c.lifted.tet_count(), 2 * n);
            let h = homology(&c.lifted).unwrap();
            assert_eq!(h.betti, [1, 1, 1, 1], "cyclic cover of S2xS1, n = {}", n);
        }
    }

    #[test]
    fn rp3_double_cover_is_s3() {
        let t = census::rp3();
        let qs = quotients(&t, 2);
        assert_eq!(qs.len(), 1);
        let c = build_cover(&t, &qs[0]).unwrap();
        let h = homology(&c.lifted).unwrap();
        assert_eq!(h.betti, [1, 0, 0, 1]);
        assert!(h.torsion[1].is_empty());
    }

    #[test]
    fn deck_action_is_free_and_transitive_on_fibers() {
        let t = census::s2xs1();
        let q = quotients(&t, 3).remove(0);
        let c = build_cover(&t, &q).unwrap();
        for tet in 0..c.lifted.tet_count() {
            assert_eq!(c.deck_translate(0, Cell::Tet(tet)).unwrap(), Cell::Tet(tet));
        }
        // Nontrivial elements move every tet; fibers are single orbits.
        for a in 1..c.degree() {
            for tet in 0..c.lifted.tet_count() {
                let Cell::Tet(im) = c.deck_translate(a, Cell::Tet(tet)).unwrap() else {
                    unreachable!()
                };
                assert_ne!(im, tet);
                assert_eq!(c.label(im).0, c.label(tet).0);
            }
        }
        // g then g^{-1} is the identity.
        let g = 1;
        let ginv = c.quotient.group.inv(g);
        for tet in 0..c.lifted.tet_count() {
            let Cell::Tet(x) = c.deck_translate(g, Cell::Tet(tet)).unwrap() else {
                unreachable!()
            };
            assert_eq!(
                c.deck_translate(ginv, Cell::Tet(x)).unwrap(),
                Cell::Tet(tet)
            );
        }
    }

    #[test]
    fn z2_deck_swaps_the_two_lifts() {
        let t = census::t3();
        let q = quotients(&t, 2).remove(0);
        let c = build_cover(&t, &q).unwrap();
        for tet in 0..c.lifted.tet_count() {
            let Cell::Tet(im) = c.deck_translate(1, Cell::Tet(tet)).unwrap() else {
                unreachable!()
            };
            assert_ne!(im, tet);
            let Cell::Tet(back) = c.deck_translate(1, Cell::Tet(im)).unwrap() else {
                unreachable!()
            };
            assert_eq!(back, tet);
        }
    }

    #[test]
    fn unknown_element_rejected() {
        let t = census::s2xs1();
        let q = quotients(&t, 2).remove(0);
        let c = build_cover(&t, &q).unwrap();
        assert!(matches!(
            c.deck_translate(5, Cell::Tet(0)),
            Err(CoverError::UnknownElement(5))
        ));
    }

    #[test]
    fn multi_vertex_base_rejected() {
        let mut t = Triangulation::empty(2);
        for f in 0..4 {
            t.glue(0, f, 1, f, crate::perm::Perm3::IDENTITY).unwrap();
        }
        let q = FiniteQuotient {
            group: GroupTable::trivial(),
            images: vec![0; 6],
        };
        assert!(matches!(
            build_cover(&t, &q),
            Err(CoverError::NotOneVertex(4))
        ));
    }
}
