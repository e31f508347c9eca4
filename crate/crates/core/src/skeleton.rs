//! Vertex, edge and face classes of a triangulation under the gluing
//! equivalence, with canonical edge orientations.

use crate::triangulation::{Triangulation, FACE_VERTICES, TET_EDGES};
use crate::union_find::UnionFind;

#[derive(Debug, thiserror::Error)]
pub enum SkeletonError {
    #[error("triangulation is not closed or gluings are not an involution")]
    NotClosed,
    #[error("edge {edge} of tet {tet} is identified with itself reversing orientation")]
    ReversedEdge { tet: usize, edge: usize },
}

/// The cell classes of a closed triangulation.
///
/// Edge classes carry a canonical orientation: the lowest `(tet, edge)`
/// instance, directed from its smaller to its larger vertex, is positive.
/// `edge_sign` records how each instance's low-to-high direction compares
/// with the class orientation.
#[derive(Clone, Debug)]
pub struct Skeleton {
    pub vertex_count: usize,
    pub edge_count: usize,
    pub face_count: usize,
    pub tet_count: usize,
    /// Per (tet, corner 0..3): vertex class id.
    pub vertex_class: Vec<[usize; 4]>,
    /// Per (tet, edge index 0..6 into `TET_EDGES`): edge class id.
    pub edge_class: Vec<[usize; 6]>,
    /// Per (tet, edge index): +1 if low-to-high agrees with the class orientation.
    pub edge_sign: Vec<[i64; 6]>,
    /// Per (tet, face 0..3): face class id.
    pub face_class: Vec<[usize; 4]>,
    /// Per (tet, face): sign of this instance's sorted-vertex orientation
    /// relative to the class representative's.
    pub face_sign: Vec<[i64; 4]>,
    /// Tetrahedron-edge incidences per edge class, with multiplicity.
    pub edge_valence: Vec<usize>,
    /// Lowest representative per edge class: (tet, tail vertex, head vertex).
    pub edge_rep: Vec<(usize, usize, usize)>,
    /// Lowest representative per face class.
    pub face_rep: Vec<(usize, usize)>,
}

pub fn edge_index(a: usize, b: usize) -> usize {
    let (lo, hi) = if a < b { (a, b) } else { (b, a) };
    TET_EDGES.iter().position(|&e| e == (lo, hi)).unwrap()
}

/// Compute the cell classes of a closed triangulation.
pub fn build_skeleton(t: &Triangulation) -> Result<Skeleton, SkeletonError> {
    let n = t.tet_count();
    for tet in 0..n {
        for f in 0..4 {
            match t.gluing(tet, f) {
                Some(g) if (g.tet, g.face) != (tet, f) => {
                    let back = t.gluing(g.tet, g.face).ok_or(SkeletonError::NotClosed)?;
                    if back.tet != tet || back.face != f || back.perm != g.perm.inverse() {
                        return Err(SkeletonError::NotClosed);
                    }
                }
                _ => return Err(SkeletonError::NotClosed),
            }
        }
    }

    // Vertex classes.
    let mut vuf = UnionFind::new(4 * n);
    for tet in 0..n {
        for f in 0..4 {
            for &v in &FACE_VERTICES[f] {
                let (tet2, v2) = t.map_vertex(tet, f, v).unwrap();
                vuf.union(tet * 4 + v, tet2 * 4 + v2);
            }
        }
    }
    let (vids, vertex_count) = vuf.class_ids();
    let vertex_class: Vec<[usize; 4]> = (0..n)
        .map(|tet| [vids[4 * tet], vids[4 * tet + 1], vids[4 * tet + 2], vids[4 * tet + 3]])
        .collect();

    // Directed edge classes: item ((tet, edge) index, direction).
    // Direction 0 runs low-to-high through `TET_EDGES`.
    let mut euf = UnionFind::new(12 * n);
    let didx = |tet: usize, ei: usize, dir: usize| (tet * 6 + ei) * 2 + dir;
    for tet in 0..n {
        for f in 0..4 {
            for (k, &(a, b)) in TET_EDGES.iter().enumerate() {
                if a == f || b == f {
                    continue;
                }
                let (t2, a2) = t.map_vertex(tet, f, a).unwrap();
                let (_, b2) = t.map_vertex(tet, f, b).unwrap();
                let k2 = edge_index(a2, b2);
                // (a -> b) maps to (a2 -> b2); dir on the target is 0 iff a2 < b2.
                let dir2 = if a2 < b2 { 0 } else { 1 };
                euf.union(didx(tet, k, 0), didx(t2, k2, dir2));
                euf.union(didx(tet, k, 1), didx(t2, k2, 1 - dir2));
            }
        }
    }
    for tet in 0..n {
        for k in 0..6 {
            if euf.same(didx(tet, k, 0), didx(tet, k, 1)) {
                return Err(SkeletonError::ReversedEdge { tet, edge: k });
            }
        }
    }
    // Collapse directed classes to undirected ones; orientation from the
    // lowest instance's low-to-high direction.
    let (dids, _) = euf.class_ids();
    let mut undirected_of_directed = vec![usize::MAX; 12 * n];
    let mut edge_count = 0;
    let mut positive_directed: Vec<usize> = Vec::new();
    let mut edge_rep: Vec<(usize, usize, usize)> = Vec::new();
    for tet in 0..n {
        for (k, &(a, b)) in TET_EDGES.iter().enumerate() {
            let fwd = dids[didx(tet, k, 0)];
            if undirected_of_directed[fwd] == usize::MAX {
                let rev = dids[didx(tet, k, 1)];
                undirected_of_directed[fwd] = edge_count;
                undirected_of_directed[rev] = edge_count;
                positive_directed.push(fwd);
                edge_rep.push((tet, a, b));
                edge_count += 1;
            }
        }
    }
    let mut edge_class = vec![[0usize; 6]; n];
    let mut edge_sign = vec![[0i64; 6]; n];
    let mut edge_valence = vec![0usize; edge_count];
    for tet in 0..n {
        for k in 0..6 {
            let fwd = dids[didx(tet, k, 0)];
            let class = undirected_of_directed[fwd];
            edge_class[tet][k] = class;
            edge_sign[tet][k] = if fwd == positive_directed[class] { 1 } else { -1 };
            edge_valence[class] += 1;
        }
    }

    // Face classes: instances come in partner pairs.
    let mut face_class = vec![[usize::MAX; 4]; n];
    let mut face_sign = vec![[0i64; 4]; n];
    let mut face_rep: Vec<(usize, usize)> = Vec::new();
    let mut face_count = 0;
    for tet in 0..n {
        for f in 0..4 {
            if face_class[tet][f] != usize::MAX {
                continue;
            }
            let g = t.gluing(tet, f).unwrap();
            face_class[tet][f] = face_count;
            face_sign[tet][f] = 1;
            face_class[g.tet][g.face] = face_count;
            face_sign[g.tet][g.face] = g.perm.sign();
            face_rep.push((tet, f));
            face_count += 1;
        }
    }

    Ok(Skeleton {
        vertex_count,
        edge_count,
        face_count,
        tet_count: n,
        vertex_class,
        edge_class,
        edge_sign,
        face_class,
        face_sign,
        edge_valence,
        edge_rep,
        face_rep,
    })
}

impl Skeleton {
    /// V - E + F - T; zero for every closed 3-manifold.
    pub fn euler_characteristic(&self) -> i64 {
        self.vertex_count as i64 - self.edge_count as i64 + self.face_count as i64
            - self.tet_count as i64
    }

    /// Maximal valence over edge classes.
    pub fn max_edge_valence(&self) -> usize {
        self.edge_valence.iter().copied().max().unwrap_or(0)
    }

    /// Class and sign of the directed edge `a -> b` in `tet`.
    pub fn directed_edge(&self, tet: usize, a: usize, b: usize) -> (usize, i64) {
        let k = edge_index(a, b);
        let sign = if a < b { 1 } else { -1 };
        (self.edge_class[tet][k], sign * self.edge_sign[tet][k])
    }

    /// Vertex classes at the tail and head of an edge class's orientation.
    pub fn edge_endpoints(&self, class: usize) -> (usize, usize) {
        let (tet, a, b) = self.edge_rep[class];
        (self.vertex_class[tet][a], self.vertex_class[tet][b])
    }

    /// The three signed edge incidences of one face instance, read from its
    /// sorted vertex triple `[w0, w1, w2]` as the 2-simplex boundary
    /// `[w1,w2] - [w0,w2] + [w0,w1]`.
    pub fn face_boundary(&self, tet: usize, face: usize) -> [(usize, i64); 3] {
        let [w0, w1, w2] = FACE_VERTICES[face];
        let (c0, s0) = self.directed_edge(tet, w1, w2);
        let (c1, s1) = self.directed_edge(tet, w0, w2);
        let (c2, s2) = self.directed_edge(tet, w0, w1);
        [(c0, s0), (c1, -s1), (c2, s2)]
    }

    /// Signed boundary of a face class, read at its representative.
    pub fn face_class_boundary(&self, class: usize) -> [(usize, i64); 3] {
        let (tet, face) = self.face_rep[class];
        self.face_boundary(tet, face)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::perm::Perm3;
    use crate::triangulation::Triangulation;

    // Two tetrahedra glued face-to-face by identity permutations along all
    // four faces. Not a manifold we rely on topologically, but classes and
    // counts are easy to reason about.
    fn doubled_tet() -> Triangulation {
        let mut t = Triangulation::empty(2);
        for f in 0..4 {
            t.glue(0, f, 1, f, Perm3::IDENTITY).unwrap();
        }
        t
    }

    #[test]
    fn doubled_tet_classes() {
        let t = doubled_tet();
        let s = build_skeleton(&t).unwrap();
        // Identity gluings identify corner v of tet 0 with corner v of tet 1
        // and nothing else: 4 vertex classes, 6 edge classes, 4 face classes.
        assert_eq!(s.vertex_count, 4);
        assert_eq!(s.edge_count, 6);
        assert_eq!(s.face_count, 4);
        assert_eq!(s.euler_characteristic(), 0);
        // Every edge lies in both tets: valence 2 throughout.
        assert!(s.edge_valence.iter().all(|&v| v == 2));
        assert_eq!(s.max_edge_valence(), 2);
    }

    #[test]
    fn open_triangulation_rejected() {
        let mut t = Triangulation::empty(1);
        t.glue(0, 0, 0, 1, Perm3::IDENTITY).unwrap();
        assert!(matches!(build_skeleton(&t), Err(SkeletonError::NotClosed)));
    }

    #[test]
    fn directed_edge_signs_are_antisymmetric() {
        let t = doubled_tet();
        let s = build_skeleton(&t).unwrap();
        for tet in 0..2 {
            for &(a, b) in &TET_EDGES {
                let (c1, s1) = s.directed_edge(tet, a, b);
                let (c2, s2) = s.directed_edge(tet, b, a);
                assert_eq!(c1, c2);
                assert_eq!(s1, -s2);
            }
        }
    }
}
