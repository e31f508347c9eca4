//! Integer 1-cocycles on the skeleton of a triangulation, coboundary
//! testing with explicit witnesses, and the search for cut-supported
//! cocycle certificates of positive first Betti number.
//!
//! A 1-cochain assigns an integer to each oriented edge class. It is a
//! cocycle when it sums to zero around every face class, and a coboundary
//! when it is the difference of a vertex potential. A cocycle that is not
//! a coboundary certifies b1 > 0 with integer coefficients.

use crate::cover::CoverTriangulation;
use crate::report::{Check, ValidationReport};
use crate::skeleton::Skeleton;

#[derive(Debug, thiserror::Error)]
pub enum CertificateError {
    #[error("support has {0} edges, search limited to {1}")]
    SupportTooLarge(usize, usize),
    #[error("support edge class {0} out of range")]
    OutOfRange(usize),
    #[error("parse error on line {line}: {msg}")]
    Parse { line: usize, msg: String },
}

/// An integer 1-cochain, indexed by oriented edge class.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Cocycle {
    pub values: Vec<i64>,
}

/// Outcome of the coboundary test: either a vertex potential whose
/// difference realizes the cochain, or a cycle on which it sums to a
/// nonzero value (impossible for coboundaries).
#[derive(Clone, Debug)]
pub enum CoboundaryResult {
    Coboundary { potential: Vec<i64> },
    Witness { cycle: Vec<(usize, i64)>, pairing: i64 },
}

impl Cocycle {
    pub fn zero(skeleton: &Skeleton) -> Self {
        Cocycle {
            values: vec![0; skeleton.edge_count],
        }
    }

    pub fn is_zero(&self) -> bool {
        self.values.iter().all(|&v| v == 0)
    }

    pub fn support(&self) -> Vec<usize> {
        (0..self.values.len())
            .filter(|&e| self.values[e] != 0)
            .collect()
    }

    /// Nonzero entries only, as `edge <class> <value>` records.
    pub fn to_text(&self) -> String {
        let mut out = format!("cocycle {}\n", self.values.len());
        for (e, &v) in self.values.iter().enumerate() {
            if v != 0 {
                out.push_str(&format!("edge {} {}\n", e, v));
            }
        }
        out
    }

    pub fn parse(text: &str) -> Result<Self, CertificateError> {
        let err = |line: usize, msg: &str| CertificateError::Parse {
            line,
            msg: msg.to_string(),
        };
        let mut values: Option<Vec<i64>> = None;
        for (i, raw) in text.lines().enumerate() {
            let line = i + 1;
            let trimmed = raw.trim();
            if trimmed.is_empty() || trimmed.starts_with('#') {
                continue;
            }
            let fields: Vec<&str> = trimmed.split_whitespace().collect();
            match fields[0] {
                "cocycle" => {
                    if values.is_some() {
                        return Err(err(line, "duplicate cocycle header"));
                    }
                    if fields.len() != 2 {
                        return Err(err(line, "expected: cocycle <edge-count>"));
                    }
                    let n = fields[1].parse().map_err(|_| err(line, "bad edge count"))?;
                    values = Some(vec![0; n]);
                }
                "edge" => {
                    let vals = values
                        .as_mut()
                        .ok_or_else(|| err(line, "edge before cocycle header"))?;
                    if fields.len() != 3 {
                        return Err(err(line, "expected: edge <class> <value>"));
                    }
                    let e: usize = fields[1].parse().map_err(|_| err(line, "bad class"))?;
                    let v: i64 = fields[2].parse().map_err(|_| err(line, "bad value"))?;
                    if e >= vals.len() {
                        return Err(err(line, "edge class out of range"));
                    }
                    vals[e] = v;
                }
                other => return Err(err(line, &format!("unknown record '{}'", other))),
            }
        }
        values
            .map(|values| Cocycle { values })
            .ok_or_else(|| err(0, "missing cocycle header"))
    }
}

/// Coboundary of a vertex potential: value f(head) - f(tail) per edge.
pub fn coboundary_of(skeleton: &Skeleton, potential: &[i64]) -> Cocycle {
    let values = (0..skeleton.edge_count)
        .map(|e| {
            let (tail, head) = skeleton.edge_endpoints(e);
            potential[head] - potential[tail]
        })
        .collect();
    Cocycle { values }
}

/// True when the cochain sums to zero around every face class.
pub fn is_cocycle(skeleton: &Skeleton, c: &Cocycle) -> bool {
    (0..skeleton.face_count).all(|f| {
        skeleton
            .face_class_boundary(f)
            .iter()
            .map(|&(e, s)| s * c.values[e])
            .sum::<i64>()
            == 0
    })
}

/// Decide whether a cochain is a coboundary by integrating it along a
/// spanning tree of the 1-skeleton; a failing non-tree edge closes a
/// cycle that pairs nontrivially with the cochain.
pub fn coboundary_witness(skeleton: &Skeleton, c: &Cocycle) -> CoboundaryResult {
    let n = skeleton.vertex_count;
    // Undirected adjacency: (neighbor, edge class, +1 if traversed
    // tail -> head).
    let mut adj: Vec<Vec<(usize, usize, i64)>> = vec![Vec::new(); n];
    for e in 0..skeleton.edge_count {
        let (tail, head) = skeleton.edge_endpoints(e);
        adj[tail].push((head, e, 1));
        adj[head].push((tail, e, -1));
    }
    let mut potential = vec![0i64; n];
    let mut parent: Vec<Option<(usize, usize, i64)>> = vec![None; n];
    let mut seen = vec![false; n];
    let mut queue = std::collections::VecDeque::new();
    seen[0] = true;
    queue.push_back(0usize);
    while let Some(v) = queue.pop_front() {
        for &(u, e, dir) in &adj[v] {
            if !seen[u] {
                seen[u] = true;
                potential[u] = potential[v] + dir * c.values[e];
                parent[u] = Some((v, e, dir));
                queue.push_back(u);
            }
        }
    }
    debug_assert!(seen.iter().all(|&s| s), "skeleton must be connected");

    for e in 0..skeleton.edge_count {
        let (tail, head) = skeleton.edge_endpoints(e);
        if potential[head] - potential[tail] == c.values[e] {
            continue;
        }
        // Close the cycle: tree path root -> tail, edge e, then the
        // reversed tree path head -> root.
        let mut coeff = vec![0i64; skeleton.edge_count];
        let walk = |mut v: usize, sign: i64, coeff: &mut Vec<i64>| {
            while let Some((p, pe, dir)) = parent[v] {
                coeff[pe] += sign * dir;
                v = p;
            }
        };
        walk(tail, 1, &mut coeff);
        coeff[e] += 1;
        walk(head, -1, &mut coeff);
        let cycle: Vec<(usize, i64)> = coeff
            .into_iter()
            .enumerate()
            .filter(|&(_, z)| z != 0)
            .collect();
        let pairing = cycle.iter().map(|&(ce, z)| z * c.values[ce]).sum();
        debug_assert_ne!(pairing, 0);
        return CoboundaryResult::Witness { cycle, pairing };
    }
    CoboundaryResult::Coboundary { potential }
}

/// Lifted edge classes with exactly one endpoint in the given set of
/// group elements, sorted ascending. Loops never cross.
pub fn cut_boundary_edges(cover: &CoverTriangulation, side: &[usize]) -> Vec<usize> {
    let mut inside = vec![false; cover.degree()];
    for &g in side {
        inside[g] = true;
    }
    (0..cover.skeleton.edge_count)
        .filter(|&e| {
            let (tail, head) = cover.skeleton.edge_endpoints(e);
            inside[cover.element_of_vertex_class(tail)]
                != inside[cover.element_of_vertex_class(head)]
        })
        .collect()
}

pub const SEARCH_SUPPORT_LIMIT: usize = 40;

/// Search for a cocycle supported on the given edge classes, with values
/// in {-1, 0, +1}, that is not a coboundary. Returns the first such in
/// lexicographic order (-1 < 0 < +1 per support slot), or None when every
/// supported cocycle is a coboundary (always the case when b1 = 0).
pub fn search_certificate(
    skeleton: &Skeleton,
    support: &[usize],
    cap: usize,
) -> Result<Option<Cocycle>, CertificateError> {
    if support.len() > cap {
        return Err(CertificateError::SupportTooLarge(support.len(), cap));
    }
    let mut slot_of = vec![usize::MAX; skeleton.edge_count];
    for (i, &e) in support.iter().enumerate() {
        if e >= skeleton.edge_count {
            return Err(CertificateError::OutOfRange(e));
        }
        slot_of[e] = i;
    }

    // Per face class: support slots with signs, and how many of its three
    // boundary edges lie on the support. Off-support edges are pinned to 0,
    // so faces touching the support constrain the slot values to sum to 0.
    let mut face_slots: Vec<Vec<(usize, i64)>> = Vec::new();
    for f in 0..skeleton.face_count {
        let slots: Vec<(usize, i64)> = skeleton
            .face_class_boundary(f)
            .iter()
            .filter(|&&(e, _)| slot_of[e] != usize::MAX)
            .map(|&(e, s)| (slot_of[e], s))
            .collect();
        if !slots.is_empty() {
            face_slots.push(slots);
        }
    }
    // Lexicographic DFS with per-face feasibility pruning: a face still
    // open in k support slots can move its partial sum by at most k, so
    // any larger partial sum can never return to zero.
    struct Search<'a> {
        skeleton: &'a Skeleton,
        support: &'a [usize],
        faces_of_slot: Vec<Vec<(usize, i64)>>,
        face_sum: Vec<i64>,
        face_open: Vec<usize>,
        assign: Vec<i64>,
    }

    impl Search<'_> {
        fn dfs(&mut self, slot: usize) -> Option<Cocycle> {
            if slot == self.support.len() {
                if self.assign.iter().all(|&v| v == 0) {
                    return None;
                }
                let mut c = Cocycle::zero(self.skeleton);
                for (i, &e) in self.support.iter().enumerate() {
                    c.values[e] = self.assign[i];
                }
                debug_assert!(is_cocycle(self.skeleton, &c));
                return match coboundary_witness(self.skeleton, &c) {
                    CoboundaryResult::Witness { .. } => Some(c),
                    CoboundaryResult::Coboundary { .. } => None,
                };
            }
            'values: for v in [-1i64, 0, 1] {
                for &(fi, sign) in &self.faces_of_slot[slot] {
                    let sum = self.face_sum[fi] + sign * v;
                    if sum.unsigned_abs() as usize > self.face_open[fi] - 1 {
                        continue 'values;
                    }
                }
                self.assign[slot] = v;
                for &(fi, sign) in &self.faces_of_slot[slot] {
                    self.face_sum[fi] += sign * v;
                    self.face_open[fi] -= 1;
                }
                let found = self.dfs(slot + 1);
                for &(fi, sign) in &self.faces_of_slot[slot] {
                    self.face_sum[fi] -= sign * v;
                    self.face_open[fi] += 1;
                }
                if found.is_some() {
                    return found;
                }
            }
            None
        }
    }

    let mut faces_of_slot: Vec<Vec<(usize, i64)>> = vec![Vec::new(); support.len()];
    for (fi, slots) in face_slots.iter().enumerate() {
        for &(slot, sign) in slots {
            faces_of_slot[slot].push((fi, sign));
        }
    }
    let face_open = face_slots.iter().map(Vec::len).collect();
    let mut search = Search {
        skeleton,
        support,
        faces_of_slot,
        face_sum: vec![0; face_slots.len()],
        face_open,
        assign: vec![0; support.len()],
    };
    Ok(search.dfs(0))
}

/// Outcome of the end-to-end small-cut criterion.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Verdict {
    /// Certificate found and homology confirms b1 > 0.
    Agree,
    /// Certificate found but homology reports b1 = 0: an implementation
    /// bug, since verified certificates are sound.
    Disagree,
    /// No certificate on this cut, but the cut was not small enough for
    /// the criterion to promise one.
    Inconclusive,
    /// The cut satisfies the threshold yet no certificate exists on it:
    /// impossible if everything is implemented correctly.
    Violation,
}

impl std::fmt::Display for Verdict {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Verdict::Agree => "AGREE",
            Verdict::Disagree => "DISAGREE",
            Verdict::Inconclusive => "INCONCLUSIVE",
            Verdict::Violation => "THEOREM_VIOLATION",
        })
    }
}

#[derive(Clone, Debug)]
pub struct CutCriterionOutcome {
    pub threshold_forced: bool,
    pub support: Vec<usize>,
    pub certificate: Option<Cocycle>,
    pub b1: usize,
    pub verdict: Verdict,
}

/// Full small-cut pipeline on a built cover: test the exact threshold,
/// search the cut boundary for a certificate, and cross-check against
/// the homology oracle.
pub fn verify_cut_criterion(
    cover: &CoverTriangulation,
    cut: &crate::graph::CutCertificate,
    cap: usize,
) -> Result<CutCriterionOutcome, CertificateError> {
    let threshold_forced = crate::cayley::forces_positive_b1(cut.ratio, cover.degree());
    let support = cut_boundary_edges(cover, &cut.side);
    let certificate = search_certificate(&cover.skeleton, &support, cap)?;
    let b1 = crate::homology::homology_of_skeleton(&cover.skeleton).b1();
    let verdict = match (&certificate, threshold_forced) {
        (Some(_), _) => {
            if b1 > 0 {
                Verdict::Agree
            } else {
                Verdict::Disagree
            }
        }
        (None, true) => Verdict::Violation,
        (None, false) => Verdict::Inconclusive,
    };
    Ok(CutCriterionOutcome {
        threshold_forced,
        support,
        certificate,
        b1,
        verdict,
    })
}

/// Checks that a claimed certificate really certifies b1 > 0: nonzero,
/// closed around every face, and not an integer coboundary.
pub fn verify_certificate(skeleton: &Skeleton, c: &Cocycle) -> ValidationReport {
    let mut checks = Vec::new();
    let nonzero = !c.is_zero();
    checks.push(Check {
        name: "nonzero",
        pass: nonzero,
        detail: if nonzero {
            format!("support size {}", c.support().len())
        } else {
            "all edge values are zero".to_string()
        },
    });
    let closed = is_cocycle(skeleton, c);
    checks.push(Check {
        name: "cocycle",
        pass: closed,
        detail: if closed {
            "sums to zero around every face class".to_string()
        } else {
            let f = (0..skeleton.face_count)
                .find(|&f| {
                    skeleton
                        .face_class_boundary(f)
                        .iter()
                        .map(|&(e, s)| s * c.values[e])
                        .sum::<i64>()
                        != 0
                })
                .unwrap();
            format!("nonzero sum around face class {}", f)
        },
    });
    let (pass, detail) = match coboundary_witness(skeleton, c) {
        CoboundaryResult::Witness { cycle, pairing } => (
            true,
            format!(
                "pairs to {} with a cycle through {} edges",
                pairing,
                cycle.len()
            ),
        ),
        CoboundaryResult::Coboundary { .. } => {
            (false, "realized by a vertex potential".to_string())
        }
    };
    checks.push(Check {
        name: "not_coboundary",
        pass,
        detail,
    });
    ValidationReport { checks }
}
