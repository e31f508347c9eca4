//! A small stock of canonical triangulations used throughout the crate:
//! minimal gluing data for S^3, lens spaces, S^2 x S^1 and the 3-torus.
//!
//! The 1- and 2-tetrahedron entries are frozen results of the exhaustive
//! enumeration in `enumerate_one_tet` / `enumerate_two_tet`, selected by
//! their homology; tests re-derive them. The 3-torus is built from the
//! standard six-tetrahedron decomposition of the cube with opposite faces
//! identified.

use crate::perm::Perm3;
use crate::triangulation::{Triangulation, FACE_VERTICES};

fn p(s: &str) -> Perm3 {
    Perm3::parse(s).unwrap()
}

fn from_pairs(n: usize, pairs: &[((usize, usize), (usize, usize), &str)]) -> Triangulation {
    let converted: Vec<_> = pairs
        .iter()
        .map(|&(a, b, perm)| (a, b, p(perm)))
        .collect();
    Triangulation::from_pairs(n, &converted).unwrap()
}

/// One-vertex, one-tetrahedron triangulation of the 3-sphere.
pub fn s3_one_tet() -> Triangulation {
    from_pairs(1, &S3_PAIRS)
}

/// Two-tetrahedron, one-vertex triangulation of S^2 x S^1.
pub fn s2xs1() -> Triangulation {
    from_pairs(2, &S2XS1_PAIRS)
}

/// Two-tetrahedron triangulation of RP^3 = L(2,1).
pub fn rp3() -> Triangulation {
    from_pairs(2, &RP3_PAIRS)
}

/// One-tetrahedron triangulation of the lens space L(4,1).
pub fn l4_1() -> Triangulation {
    from_pairs(1, &L41_PAIRS)
}

/// Two-tetrahedron triangulation of a lens space with H_1 = Z/3.
pub fn l3_1() -> Triangulation {
    from_pairs(2, &L31_PAIRS)
}

/// One-tetrahedron triangulation of a lens space with H_1 = Z/5 (L(5,2)).
pub fn l5_2() -> Triangulation {
    from_pairs(1, &L52_PAIRS)
}

/// All entries, with display names. Every one is valid, closed, orientable
/// and connected; all are 1-vertex except where noted by tests.
pub fn all() -> Vec<(&'static str, Triangulation)> {
    vec![
        ("S3", s3_one_tet()),
        ("L(4,1)", l4_1()),
        ("S2xS1", s2xs1()),
        ("RP3", rp3()),
        ("L(3,1)", l3_1()),
        ("L(5,2)", l5_2()),
        ("T3", t3()),
    ]
}

// Frozen gluing data; see the enumeration tests for the derivation.
const S3_PAIRS: [((usize, usize), (usize, usize), &str); 2] = S3_PAIRS_DATA;
const L41_PAIRS: [((usize, usize), (usize, usize), &str); 2] = L41_PAIRS_DATA;
const L52_PAIRS: [((usize, usize), (usize, usize), &str); 2] = L52_PAIRS_DATA;
const S2XS1_PAIRS: [((usize, usize), (usize, usize), &str); 4] = S2XS1_PAIRS_DATA;
const RP3_PAIRS: [((usize, usize), (usize, usize), &str); 4] = RP3_PAIRS_DATA;
const L31_PAIRS: [((usize, usize), (usize, usize), &str); 4] = L31_PAIRS_DATA;

include!("census_data.rs");

/// The six-tetrahedron one-vertex triangulation of the 3-torus: the unit
/// cube split along chains x_{pi(0)} >= x_{pi(1)} >= x_{pi(2)}, opposite
/// cube faces identified by translation.
pub fn t3() -> Triangulation {
    // Tet for permutation pi has vertices, in local order 0..3:
    //   0, e_{pi0}, e_{pi0}+e_{pi1}, (1,1,1).
    let perms: [[usize; 3]; 6] = [
        [0, 1, 2],
        [0, 2, 1],
        [1, 0, 2],
        [1, 2, 0],
        [2, 0, 1],
        [2, 1, 0],
    ];
    let point = |pi: &[usize; 3], local: usize| -> [i32; 3] {
        let mut q = [0i32; 3];
        if local >= 1 {
            q[pi[0]] = 1;
        }
        if local >= 2 {
            q[pi[1]] = 1;
        }
        if local >= 3 {
            q[pi[2]] = 1;
        }
        q
    };
    let tet_points: Vec<[[i32; 3]; 4]> = perms
        .iter()
        .map(|pi| [point(pi, 0), point(pi, 1), point(pi, 2), point(pi, 3)])
        .collect();

    // Find the unique tet containing all three points, and their local labels.
    let locate = |pts: &[[i32; 3]; 3], skip: Option<usize>| -> (usize, [usize; 3]) {
        for (t, tp) in tet_points.iter().enumerate() {
            if Some(t) == skip {
                continue;
            }
            let mut locals = [usize::MAX; 3];
            let mut ok = true;
            for (k, q) in pts.iter().enumerate() {
                match tp.iter().position(|v| v == q) {
                    Some(l) => locals[k] = l,
                    None => {
                        ok = false;
                        break;
                    }
                }
            }
            if ok {
                return (t, locals);
            }
        }
        panic!("no tetrahedron contains {:?}", pts);
    };

    let mut tri = Triangulation::empty(6);
    for (t, tp) in tet_points.iter().enumerate() {
        for f in 0..4 {
            if tri.gluing(t, f).is_some() {
                continue;
            }
            let fv = FACE_VERTICES[f];
            let mut pts = [[0i32; 3]; 3];
            for (k, &v) in fv.iter().enumerate() {
                pts[k] = tp[v];
            }
            // A boundary face has a coordinate constant at 0 or 1; translate
            // it across the cube. Internal faces match another tet in place.
            let mut translated = pts;
            let mut skip = Some(t);
            for c in 0..3 {
                if pts.iter().all(|q| q[c] == 0) {
                    for q in translated.iter_mut() {
                        q[c] = 1;
                    }
                    skip = None;
                    break;
                }
                if pts.iter().all(|q| q[c] == 1) {
                    for q in translated.iter_mut() {
                        q[c] = 0;
                    }
                    skip = None;
                    break;
                }
            }
            let (t2, locals) = locate(&translated, skip);
            // The partner face omits the one local vertex not among `locals`.
            let f2 = (0..4).find(|v| !locals.contains(v)).unwrap();
            let fv2 = FACE_VERTICES[f2];
            let mut images = [0u8; 3];
            for (k, &l) in locals.iter().enumerate() {
                images[k] = fv2.iter().position(|&w| w == l).unwrap() as u8;
            }
            let perm = Perm3::new(images).unwrap();
            tri.glue(t, f, t2, f2, perm).unwrap();
        }
    }
    tri
}

/// Exhaustive enumeration of fully glued 1-tetrahedron triangulations
/// (not filtered for validity). Used to derive and re-check census data.
pub fn enumerate_one_tet() -> Vec<Triangulation> {
    let pairings: [[(usize, usize); 2]; 3] = [
        [(0, 1), (2, 3)],
        [(0, 2), (1, 3)],
        [(0, 3), (1, 2)],
    ];
    let mut out = Vec::new();
    for pairing in &pairings {
        for p0 in Perm3::all() {
            for p1 in Perm3::all() {
                let mut t = Triangulation::empty(1);
                t.glue(0, pairing[0].0, 0, pairing[0].1, p0).unwrap();
                t.glue(0, pairing[1].0, 0, pairing[1].1, p1).unwrap();
                out.push(t);
            }
        }
    }
    out
}

/// Exhaustive enumeration of fully glued 2-tetrahedron triangulations.
/// 105 face pairings times 6^4 permutation choices; callers filter.
pub fn enumerate_two_tet() -> impl Iterator<Item = Triangulation> {
    let faces: Vec<(usize, usize)> = (0..2).flat_map(|t| (0..4).map(move |f| (t, f))).collect();
    let matchings = perfect_matchings(&faces);
    matchings.into_iter().flat_map(|m| {
        let mut combos: Vec<Vec<Perm3>> = vec![Vec::new()];
        for _ in 0..4 {
            combos = combos
                .into_iter()
                .flat_map(|c| {
                    Perm3::all().into_iter().map(move |p| {
                        let mut c2 = c.clone();
                        c2.push(p);
                        c2
                    })
                })
                .collect();
        }
        combos.into_iter().map(move |perms| {
            let mut t = Triangulation::empty(2);
            for (k, &((a, af), (b, bf))) in m.iter().enumerate() {
                t.glue(a, af, b, bf, perms[k]).unwrap();
            }
            t
        })
    })
}

fn perfect_matchings(
    items: &[(usize, usize)],
) -> Vec<Vec<((usize, usize), (usize, usize))>> {
    if items.is_empty() {
        return vec![Vec::new()];
    }
    let first = items[0];
    let mut out = Vec::new();
    for i in 1..items.len() {
        let partner = items[i];
        let rest: Vec<_> = items[1..]
            .iter()
            .copied()
            .filter(|&x| x != partner)
            .collect();
        for mut sub in perfect_matchings(&rest) {
            sub.insert(0, (first, partner));
            out.push(sub);
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::homology::homology;
    use crate::skeleton::build_skeleton;

    #[test]
    fn t3_is_a_one_vertex_torus() {
        let t = t3();
        assert!(t.validate().all_pass());
        let s = build_skeleton(&t).unwrap();
        assert_eq!(s.vertex_count, 1);
        assert_eq!(s.edge_count, 7);
        assert_eq!(s.euler_characteristic(), 0);
        let h = homology(&t).unwrap();
        assert_eq!(h.betti, [1, 3, 3, 1]);
        assert!(h.torsion.iter().all(|tt| tt.is_empty()));
        // Max edge valence of this decomposition is 6: the main
        // diagonal lies in all six tetrahedra.
        assert_eq!(s.max_edge_valence(), 6);
    }

    #[test]
    fn census_entries_have_expected_homology() {
        for (name, tri) in all() {
            assert!(tri.validate().all_pass(), "{} fails validation", name);
            let h = homology(&tri).unwrap();
            match name {
                "S3" => assert_eq!((h.betti, h.torsion[1].clone()), ([1, 0, 0, 1], vec![])),
                "L(4,1)" => assert_eq!((h.betti, h.torsion[1].clone()), ([1, 0, 0, 1], vec![4])),
                "S2xS1" => assert_eq!((h.betti, h.torsion[1].clone()), ([1, 1, 1, 1], vec![])),
                "RP3" => assert_eq!((h.betti, h.torsion[1].clone()), ([1, 0, 0, 1], vec![2])),
                "L(3,1)" => assert_eq!((h.betti, h.torsion[1].clone()), ([1, 0, 0, 1], vec![3])),
                "L(5,2)" => assert_eq!((h.betti, h.torsion[1].clone()), ([1, 0, 0, 1], vec![5])),
                "T3" => assert_eq!((h.betti, h.torsion[1].clone()), ([1, 3, 3, 1], vec![])),
                _ => unreachable!(),
            }
        }
    }
}
