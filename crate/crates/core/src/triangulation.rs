//! Tetrahedron gluing data for closed orientable 3-manifolds.
//!
//! A triangulation is a set of abstract tetrahedra `0..tet_count` together
//! with face gluings. Face `f` of a tetrahedron is the face opposite
//! vertex `f`; its three vertices are listed in increasing order, and a
//! gluing permutation maps positions in the source face's sorted vertex
//! list to positions in the target face's sorted vertex list.

use std::collections::HashMap;
use std::fmt;

use crate::perm::Perm3;
use crate::report::{Check, ValidationReport};

/// Vertices of face `f` (opposite vertex `f`), in increasing order.
pub const FACE_VERTICES: [[usize; 3]; 4] = [[1, 2, 3], [0, 2, 3], [0, 1, 3], [0, 1, 2]];

/// The six edges of a tetrahedron as vertex pairs `(a, b)` with `a < b`.
pub const TET_EDGES: [(usize, usize); 6] = [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)];

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct Gluing {
    pub tet: usize,
    pub face: usize,
    pub perm: Perm3,
}

#[derive(Clone, PartialEq, Eq)]
pub struct Triangulation {
    tet_count: usize,
    gluings: Vec<[Option<Gluing>; 4]>,
}

#[derive(Debug, thiserror::Error)]
pub enum FormatError {
    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error("line {line}: duplicate gluing entry for tet {tet} face {face}")]
    Duplicate { line: usize, tet: usize, face: usize },
    #[error("tet {tet} or face {face} out of range")]
    OutOfRange { tet: usize, face: usize },
}


impl Triangulation {
    /// An unglued triangulation on `tet_count` tetrahedra.
    pub fn empty(tet_count: usize) -> Triangulation {
        Triangulation {
            tet_count,
            gluings: vec![[None; 4]; tet_count],
        }
    }

    /// Build from face pairs, installing each gluing in both directions.
    pub fn from_pairs(
        tet_count: usize,
        pairs: &[((usize, usize), (usize, usize), Perm3)],
    ) -> Result<Triangulation, FormatError> {
        let mut t = Triangulation::empty(tet_count);
        for &((a, af), (b, bf), perm) in pairs {
            t.glue(a, af, b, bf, perm)?;
        }
        Ok(t)
    }

    /// Install a gluing and its partner.
    pub fn glue(
        &mut self,
        tet: usize,
        face: usize,
        other: usize,
        other_face: usize,
        perm: Perm3,
    ) -> Result<(), FormatError> {
        for &(t, f) in &[(tet, face), (other, other_face)] {
            if t >= self.tet_count || f > 3 {
                return Err(FormatError::OutOfRange { tet: t, face: f });
            }
        }
        self.gluings[tet][face] = Some(Gluing {
            tet: other,
            face: other_face,
            perm,
        });
        self.gluings[other][other_face] = Some(Gluing {
            tet,
            face,
            perm: perm.inverse(),
        });
        Ok(())
    }

    pub fn tet_count(&self) -> usize {
        self.tet_count
    }

    pub fn gluing(&self, tet: usize, face: usize) -> Option<Gluing> {
        self.gluings[tet][face]
    }

    /// Image of vertex `v` of `tet` under the gluing along `face`.
    /// `v` must lie on the face (`v != face`).
    pub fn map_vertex(&self, tet: usize, face: usize, v: usize) -> Option<(usize, usize)> {
        debug_assert_ne!(v, face);
        let g = self.gluings[tet][face]?;
        let pos = FACE_VERTICES[face].iter().position(|&w| w == v).unwrap();
        Some((g.tet, FACE_VERTICES[g.face][g.perm.apply(pos)]))
    }

    /// Parse the structured-text format: `tets N` then `g t f -> t' f' perm` lines.
    pub fn parse(input: &str) -> Result<Triangulation, FormatError> {
        let mut tri: Option<Triangulation> = None;
        let mut seen: HashMap<(usize, usize), usize> = HashMap::new();
        for (idx, raw) in input.lines().enumerate() {
            let line_no = idx + 1;
            let line = raw.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let mut tokens = line.split_whitespace();
            match tokens.next() {
                Some("tets") => {
                    if tri.is_some() {
                        return Err(FormatError::Parse {
                            line: line_no,
                            msg: "repeated 'tets' header".into(),
                        });
                    }
                    let n: usize = tokens
                        .next()
                        .and_then(|s| s.parse().ok())
                        .ok_or_else(|| FormatError::Parse {
                            line: line_no,
                            msg: "expected 'tets N'".into(),
                        })?;
                    tri = Some(Triangulation::empty(n));
                }
                Some("g") => {
                    let t = tri.as_mut().ok_or_else(|| FormatError::Parse {
                        line: line_no,
                        msg: "gluing before 'tets' header".into(),
                    })?;
                    let parts: Vec<&str> = tokens.collect();
                    if parts.len() != 6 || parts[2] != "->" {
                        return Err(FormatError::Parse {
                            line: line_no,
                            msg: "expected 'g <tet> <face> -> <tet> <face> <perm>'".into(),
                        });
                    }
                    let parse_num = |s: &str| {
                        s.parse::<usize>().map_err(|_| FormatError::Parse {
                            line: line_no,
                            msg: format!("bad number '{}'", s),
                        })
                    };
                    let (a, af) = (parse_num(parts[0])?, parse_num(parts[1])?);
                    let (b, bf) = (parse_num(parts[3])?, parse_num(parts[4])?);
                    let perm = Perm3::parse(parts[5]).ok_or_else(|| FormatError::Parse {
                        line: line_no,
                        msg: format!("bad permutation '{}'", parts[5]),
                    })?;
                    if a >= t.tet_count || af > 3 || b >= t.tet_count || bf > 3 {
                        return Err(FormatError::Parse {
                            line: line_no,
                            msg: "tet or face index out of range".into(),
                        });
                    }
                    if seen.insert((a, af), line_no).is_some() {
                        return Err(FormatError::Duplicate {
                            line: line_no,
                            tet: a,
                            face: af,
                        });
                    }
                    t.gluings[a][af] = Some(Gluing {
                        tet: b,
                        face: bf,
                        perm,
                    });
                }
                Some(other) => {
                    return Err(FormatError::Parse {
                        line: line_no,
                        msg: format!("unknown directive '{}'", other),
                    });
                }
                None => unreachable!(),
            }
        }
        tri.ok_or(FormatError::Parse {
            line: 0,
            msg: "missing 'tets' header".into(),
        })
    }

    /// Emit the structured-text format, both directions of every gluing,
    /// in (tet, face) order. Deterministic.
    pub fn to_text(&self) -> String {
        let mut out = format!("tets {}\n", self.tet_count);
        for t in 0..self.tet_count {
            for f in 0..4 {
                if let Some(g) = self.gluings[t][f] {
                    out.push_str(&format!("g {} {} -> {} {} {}\n", t, f, g.tet, g.face, g.perm));
                }
            }
        }
        out
    }

    /// Structural checks: closedness, involution, orientability, connectedness.
    pub fn validate(&self) -> ValidationReport {
        let mut checks = Vec::new();

        // Closedness: every face glued.
        let mut unglued = Vec::new();
        for t in 0..self.tet_count {
            for f in 0..4 {
                if self.gluings[t][f].is_none() {
                    unglued.push((t, f));
                }
            }
        }
        let closed = unglued.is_empty();
        checks.push(Check {
            name: "closedness",
            pass: closed,
            detail: if closed {
                "all faces glued".into()
            } else {
                format!("unglued faces: {:?}", unglued)
            },
        });

        // Involution: no fixed points, and partner composition is the identity.
        let mut bad = Vec::new();
        for t in 0..self.tet_count {
            for f in 0..4 {
                if let Some(g) = self.gluings[t][f] {
                    if (g.tet, g.face) == (t, f) {
                        bad.push((t, f));
                        continue;
                    }
                    match self.gluings[g.tet][g.face] {
                        Some(back)
                            if back.tet == t
                                && back.face == f
                                && back.perm == g.perm.inverse() => {}
                        _ => bad.push((t, f)),
                    }
                }
            }
        }
        let involution = bad.is_empty();
        checks.push(Check {
            name: "involution",
            pass: involution,
            detail: if involution {
                "gluing map is a fixed-point-free involution".into()
            } else {
                format!("offending faces: {:?}", bad)
            },
        });

        // Orientability: 2-colour tetrahedra so every gluing reverses orientation.
        let orientable = if closed && involution {
            self.orientations().is_some()
        } else {
            false
        };
        checks.push(Check {
            name: "orientability",
            pass: orientable,
            detail: if orientable {
                "consistent tetrahedron orientations found".into()
            } else if closed && involution {
                "no consistent orientation assignment exists".into()
            } else {
                "skipped (closedness or involution failed)".into()
            },
        });

        // Connectedness across glued faces.
        let components = self.component_count();
        checks.push(Check {
            name: "connectedness",
            pass: components == 1,
            detail: format!("{} component(s)", components),
        });

        ValidationReport { checks }
    }

    /// Tetrahedron orientations `+1/-1` making every gluing
    /// orientation-reversing on the shared face, or `None`.
    ///
    /// For a gluing of face `f` of `t` to face `f'` of `t'` with position
    /// permutation `p`, compatibility requires
    /// `o(t) * o(t') = -(-1)^(f+f') * sign(p)`.
    pub fn orientations(&self) -> Option<Vec<i64>> {
        let mut orient = vec![0i64; self.tet_count];
        for start in 0..self.tet_count {
            if orient[start] != 0 {
                continue;
            }
            orient[start] = 1;
            let mut stack = vec![start];
            while let Some(t) = stack.pop() {
                for f in 0..4 {
                    let g = match self.gluings[t][f] {
                        Some(g) => g,
                        None => continue,
                    };
                    let parity = if (f + g.face) % 2 == 0 { 1 } else { -1 };
                    let required = -parity * g.perm.sign() * orient[t];
                    if orient[g.tet] == 0 {
                        orient[g.tet] = required;
                        stack.push(g.tet);
                    } else if orient[g.tet] != required {
                        return None;
                    }
                }
            }
        }
        Some(orient)
    }

    pub fn is_connected(&self) -> bool {
        self.component_count() == 1
    }

    fn component_count(&self) -> usize {
        if self.tet_count == 0 {
            return 0;
        }
        let mut seen = vec![false; self.tet_count];
        let mut components = 0;
        for start in 0..self.tet_count {
            if seen[start] {
                continue;
            }
            components += 1;
            seen[start] = true;
            let mut stack = vec![start];
            while let Some(t) = stack.pop() {
                for f in 0..4 {
                    if let Some(g) = self.gluings[t][f] {
                        if !seen[g.tet] {
                            seen[g.tet] = true;
                            stack.push(g.tet);
                        }
                    }
                }
            }
        }
        components
    }
}

impl fmt::Debug for Triangulation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_text())
    }
}
