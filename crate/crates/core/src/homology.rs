//! Exact simplicial homology of closed triangulations via integer Smith
//! normal form. No floating point anywhere.

use crate::skeleton::{build_skeleton, Skeleton, SkeletonError};
use crate::snf::{smith_diagonal, IntMatrix};
use crate::triangulation::Triangulation;

#[derive(Debug, thiserror::Error)]
pub enum HomologyError {
    #[error("triangulation failed validation: {0}")]
    Invalid(String),
    #[error("triangulation is disconnected")]
    Disconnected,
    #[error(transparent)]
    Skeleton(#[from] SkeletonError),
}

/// Betti numbers and torsion coefficients of a closed orientable 3-manifold.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HomologyProfile {
    pub betti: [usize; 4],
    /// Elementary divisors > 1 of H_k, for k = 0..3.
    pub torsion: [Vec<i128>; 4],
}

impl HomologyProfile {
    pub fn b1(&self) -> usize {
        self.betti[1]
    }
}

/// The three boundary matrices of the simplicial chain complex:
/// `d1: C1 -> C0`, `d2: C2 -> C1`, `d3: C3 -> C2`, rows indexing the target.
pub fn boundary_matrices(s: &Skeleton) -> (IntMatrix, IntMatrix, IntMatrix) {
    let mut d1 = IntMatrix::zeros(s.vertex_count, s.edge_count);
    for e in 0..s.edge_count {
        let (tail, head) = s.edge_endpoints(e);
        d1.add(head, e, 1);
        d1.add(tail, e, -1);
    }

    let mut d2 = IntMatrix::zeros(s.edge_count, s.face_count);
    for f in 0..s.face_count {
        for (e, sign) in s.face_class_boundary(f) {
            d2.add(e, f, sign as i128);
        }
    }

    let mut d3 = IntMatrix::zeros(s.face_count, s.tet_count);
    for tet in 0..s.tet_count {
        for f in 0..4 {
            let sign = if f % 2 == 0 { 1 } else { -1 };
            d3.add(
                s.face_class[tet][f],
                tet,
                (sign * s.face_sign[tet][f]) as i128,
            );
        }
    }

    (d1, d2, d3)
}

/// Homology of a valid connected closed triangulation.
pub fn homology(t: &Triangulation) -> Result<HomologyProfile, HomologyError> {
    let report = t.validate();
    if !report.all_pass() {
        // Distinguish the disconnected case when everything else passes.
        if report
            .checks
            .iter()
            .all(|c| c.pass || c.name == "connectedness")
        {
            return Err(HomologyError::Disconnected);
        }
        let failed: Vec<&str> = report
            .checks
            .iter()
            .filter(|c| !c.pass)
            .map(|c| c.name)
            .collect();
        return Err(HomologyError::Invalid(failed.join(", ")));
    }
    let s = build_skeleton(t)?;
    Ok(homology_of_skeleton(&s))
}

pub fn homology_of_skeleton(s: &Skeleton) -> HomologyProfile {
    let (d1, d2, d3) = boundary_matrices(s);
    let sd1 = smith_diagonal(&d1);
    let sd2 = smith_diagonal(&d2);
    let sd3 = smith_diagonal(&d3);
    let (r1, r2, r3) = (sd1.len(), sd2.len(), sd3.len());
    let betti = [
        s.vertex_count - r1,
        s.edge_count - r1 - r2,
        s.face_count - r2 - r3,
        s.tet_count - r3,
    ];
    let tors = |d: &[i128]| d.iter().copied().filter(|&x| x > 1).collect::<Vec<_>>();
    let torsion = [tors(&sd1), tors(&sd2), tors(&sd3), Vec::new()];
    HomologyProfile { betti, torsion }
}
