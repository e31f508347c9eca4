//! Edge-generated fundamental group presentations of 1-vertex
//! triangulations, and finite quotients defining regular covers.
//!
//! Generators are the oriented edge classes; each face class contributes a
//! length-3 relator read around its representative's boundary. Finite
//! groups are explicit multiplication tables with identity 0, so the deck
//! group of the resulting cover is the quotient group itself.

use std::collections::HashMap;

use crate::report::{Check, ValidationReport};
use crate::skeleton::Skeleton;
use crate::snf::{smith_diagonal, IntMatrix};
use crate::triangulation::FACE_VERTICES;

#[derive(Debug, thiserror::Error)]
pub enum PresentationError {
    #[error("presentation extraction requires a 1-vertex triangulation, found {0} vertex classes")]
    MultipleVertices(usize),
}

#[derive(Debug, thiserror::Error)]
pub enum GroupError {
    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error("multiplication table is not a group: {0}")]
    NotAGroup(String),
    #[error("generator {0} has no image")]
    MissingImage(usize),
}

/// A word in the generators: a sequence of (generator, exponent +1/-1).
pub type Word = Vec<(usize, i64)>;

/// Presentation of the fundamental group of a 1-vertex triangulation.
#[derive(Clone, Debug)]
pub struct Presentation {
    pub generator_count: usize,
    /// One length-3 relator per face class.
    pub relators: Vec<Word>,
}

/// Rank and torsion of the abelianized presentation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Abelianization {
    pub rank: usize,
    pub torsion: Vec<i128>,
}

/// Finite group as a multiplication table over `0..n` with identity 0.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroupTable {
    n: usize,
    table: Vec<usize>,
}

impl GroupTable {
    /// Build from rows; checks group axioms exactly (associativity in full,
    /// which is fine at desk scale).
    pub fn new(rows: Vec<Vec<usize>>) -> Result<GroupTable, GroupError> {
        let n = rows.len();
        if n == 0 {
            return Err(GroupError::NotAGroup("empty table".into()));
        }
        let mut table = Vec::with_capacity(n * n);
        for row in &rows {
            if row.len() != n {
                return Err(GroupError::NotAGroup("table is not square".into()));
            }
            for &v in row {
                if v >= n {
                    return Err(GroupError::NotAGroup(format!("entry {} out of range", v)));
                }
                table.push(v);
            }
        }
        let g = GroupTable { n, table };
        g.check_axioms()?;
        Ok(g)
    }

    /// The cyclic group Z/n.
    pub fn cyclic(n: usize) -> GroupTable {
        let mut table = Vec::with_capacity(n * n);
        for i in 0..n {
            for j in 0..n {
                table.push((i + j) % n);
            }
        }
        GroupTable { n, table }
    }

    /// The trivial group.
    pub fn trivial() -> GroupTable {
        GroupTable::cyclic(1)
    }

    fn check_axioms(&self) -> Result<(), GroupError> {
        let n = self.n;
        for x in 0..n {
            if self.mul(0, x) != x || self.mul(x, 0) != x {
                return Err(GroupError::NotAGroup(format!("0 is not an identity at {}", x)));
            }
        }
        for x in 0..n {
            if !(0..n).any(|y| self.mul(x, y) == 0 && self.mul(y, x) == 0) {
                return Err(GroupError::NotAGroup(format!("{} has no inverse", x)));
            }
        }
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    if self.mul(self.mul(a, b), c) != self.mul(a, self.mul(b, c)) {
                        return Err(GroupError::NotAGroup(format!(
                            "associativity fails at ({}, {}, {})",
                            a, b, c
                        )));
                    }
                }
            }
        }
        Ok(())
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.table[a * self.n + b]
    }

    pub fn inv(&self, a: usize) -> usize {
        (0..self.n).find(|&b| self.mul(a, b) == 0).unwrap()
    }

    /// Subgroup generated by `gens`, as a sorted element list.
    pub fn generated_subgroup(&self, gens: &[usize]) -> Vec<usize> {
        let mut seen = vec![false; self.n];
        seen[0] = true;
        let mut frontier = vec![0usize];
        while let Some(x) = frontier.pop() {
            for &g in gens {
                for y in [self.mul(x, g), self.mul(x, self.inv(g))] {
                    if !seen[y] {
                        seen[y] = true;
                        frontier.push(y);
                    }
                }
            }
        }
        (0..self.n).filter(|&x| seen[x]).collect()
    }
}

/// A surjection from the presentation onto a finite group, defining a
/// connected regular cover of that degree.
#[derive(Clone, Debug)]
pub struct FiniteQuotient {
    pub group: GroupTable,
    /// Image of each generator (indexed by edge class).
    pub images: Vec<usize>,
}

impl FiniteQuotient {
    pub fn degree(&self) -> usize {
        self.group.order()
    }

    /// Image of a word under the quotient map.
    pub fn word_image(&self, word: &Word) -> usize {
        let mut acc = 0;
        for &(gen, exp) in word {
            let img = self.images[gen];
            let factor = if exp >= 0 { img } else { self.group.inv(img) };
            for _ in 0..exp.unsigned_abs() {
                acc = self.group.mul(acc, factor);
            }
        }
        acc
    }
}

/// Extract the edge-generated presentation. Requires a 1-vertex skeleton.
pub fn presentation_from(s: &Skeleton) -> Result<Presentation, PresentationError> {
    if s.vertex_count != 1 {
        return Err(PresentationError::MultipleVertices(s.vertex_count));
    }
    let mut relators = Vec::with_capacity(s.face_count);
    for class in 0..s.face_count {
        let (tet, face) = s.face_rep[class];
        let [w0, w1, w2] = FACE_VERTICES[face];
        // Traverse the triangle boundary w0 -> w1 -> w2 -> w0.
        let word: Word = [(w0, w1), (w1, w2), (w2, w0)]
            .iter()
            .map(|&(a, b)| s.directed_edge(tet, a, b))
            .collect();
        relators.push(word);
    }
    Ok(Presentation {
        generator_count: s.edge_count,
        relators,
    })
}

/// Exponent matrix of the relators (rows) in the generators (columns).
pub fn exponent_matrix(p: &Presentation) -> IntMatrix {
    let mut m = IntMatrix::zeros(p.relators.len(), p.generator_count);
    for (i, word) in p.relators.iter().enumerate() {
        for &(gen, exp) in word {
            m.add(i, gen, exp as i128);
        }
    }
    m
}

/// Smith normal form of the exponent matrix: rank and torsion of H_1.
pub fn abelianization(p: &Presentation) -> Abelianization {
    let diag = smith_diagonal(&exponent_matrix(p));
    Abelianization {
        rank: p.generator_count - diag.len(),
        torsion: diag.into_iter().filter(|&d| d > 1).collect(),
    }
}

/// All surjections onto Z/n factoring through the abelianization, up to
/// automorphism of Z/n. Empty if none exist.
pub fn cyclic_quotients(p: &Presentation, n: usize) -> Vec<FiniteQuotient> {
    assert!(n >= 2, "cyclic_quotients requires n >= 2");
    let gens = p.generator_count;
    let total = (n as u128).checked_pow(gens as u32).expect("search space overflow");
    assert!(total <= 100_000_000, "cyclic quotient search space too large");
    let units: Vec<usize> = (1..n).filter(|&u| gcd(u, n) == 1).collect();
    let mut out = Vec::new();
    let mut images = vec![0usize; gens];
    'outer: for code in 0..total {
        let mut c = code;
        for img in images.iter_mut() {
            *img = (c % n as u128) as usize;
            c /= n as u128;
        }
        // Relators must die in Z/n.
        for word in &p.relators {
            let mut sum = 0i64;
            for &(gen, exp) in word {
                sum += exp * images[gen] as i64;
            }
            if sum.rem_euclid(n as i64) != 0 {
                continue 'outer;
            }
        }
        // Surjectivity onto Z/n.
        let g = images.iter().fold(n, |acc, &v| gcd(acc, v));
        if g != 1 {
            continue;
        }
        // Keep only the canonical representative of the unit orbit.
        let canonical = units
            .iter()
            .map(|&u| images.iter().map(|&v| (u * v) % n).collect::<Vec<usize>>())
            .min()
            .unwrap();
        if canonical != images {
            continue;
        }
        out.push(FiniteQuotient {
            group: GroupTable::cyclic(n),
            images: images.clone(),
        });
    }
    out
}

/// Check relator kill and surjectivity for an arbitrary quotient.
pub fn validate_quotient(p: &Presentation, q: &FiniteQuotient) -> ValidationReport {
    let mut checks = Vec::new();

    let image_count_ok = q.images.len() == p.generator_count;
    checks.push(Check {
        name: "generator_images",
        pass: image_count_ok,
        detail: format!(
            "{} images for {} generators",
            q.images.len(),
            p.generator_count
        ),
    });

    let mut first_bad = None;
    if image_count_ok {
        for (i, word) in p.relators.iter().enumerate() {
            if q.word_image(word) != 0 {
                first_bad = Some(i);
                break;
            }
        }
    }
    checks.push(Check {
        name: "relators_killed",
        pass: image_count_ok && first_bad.is_none(),
        detail: match first_bad {
            None => "all relators map to the identity".into(),
            Some(i) => format!("relator {} does not map to the identity", i),
        },
    });

    let generated = if image_count_ok {
        q.group.generated_subgroup(&q.images).len()
    } else {
        0
    };
    checks.push(Check {
        name: "surjectivity",
        pass: generated == q.group.order(),
        detail: format!(
            "images generate a subgroup of order {} in a group of order {}",
            generated,
            q.group.order()
        ),
    });

    ValidationReport { checks }
}

/// Parse the quotient file format: `group N` header, N table rows,
/// `images`, then `gen <edge-class-id> -> <element>` lines.
pub fn parse_quotient(input: &str) -> Result<FiniteQuotient, GroupError> {
    enum State {
        Start,
        Table(usize),
        Images,
    }
    let mut state = State::Start;
    let mut rows: Vec<Vec<usize>> = Vec::new();
    let mut image_map: HashMap<usize, usize> = HashMap::new();
    for (idx, raw) in input.lines().enumerate() {
        let line_no = idx + 1;
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        match state {
            State::Start => {
                let mut tokens = line.split_whitespace();
                if tokens.next() != Some("group") {
                    return Err(GroupError::Parse {
                        line: line_no,
                        msg: "expected 'group N' header".into(),
                    });
                }
                let n: usize = tokens
                    .next()
                    .and_then(|s| s.parse().ok())
                    .ok_or_else(|| GroupError::Parse {
                        line: line_no,
                        msg: "expected 'group N' header".into(),
                    })?;
                state = State::Table(n);
            }
            State::Table(n) => {
                if line == "images" {
                    if rows.len() != n {
                        return Err(GroupError::Parse {
                            line: line_no,
                            msg: format!("expected {} table rows, found {}", n, rows.len()),
                        });
                    }
                    state = State::Images;
                    continue;
                }
                let row: Result<Vec<usize>, _> = line
                    .split_whitespace()
                    .map(|s| {
                        s.parse::<usize>().map_err(|_| GroupError::Parse {
                            line: line_no,
                            msg: format!("bad table entry '{}'", s),
                        })
                    })
                    .collect();
                rows.push(row?);
                if rows.len() > n {
                    return Err(GroupError::Parse {
                        line: line_no,
                        msg: "too many table rows".into(),
                    });
                }
            }
            State::Images => {
                let parts: Vec<&str> = line.split_whitespace().collect();
                if parts.len() != 4 || parts[0] != "gen" || parts[2] != "->" {
                    return Err(GroupError::Parse {
                        line: line_no,
                        msg: "expected 'gen <edge-class-id> -> <element>'".into(),
                    });
                }
                let gen: usize = parts[1].parse().map_err(|_| GroupError::Parse {
                    line: line_no,
                    msg: format!("bad generator id '{}'", parts[1]),
                })?;
                let elt: usize = parts[3].parse().map_err(|_| GroupError::Parse {
                    line: line_no,
                    msg: format!("bad element '{}'", parts[3]),
                })?;
                if image_map.insert(gen, elt).is_some() {
                    return Err(GroupError::Parse {
                        line: line_no,
                        msg: format!("duplicate image for generator {}", gen),
                    });
                }
            }
        }
    }
    if matches!(state, State::Start) {
        return Err(GroupError::Parse {
            line: 0,
            msg: "missing 'group N' header".into(),
        });
    }
    let group = GroupTable::new(rows)?;
    let gen_count = image_map.keys().map(|&g| g + 1).max().unwrap_or(0);
    let mut images = Vec::with_capacity(gen_count);
    for g in 0..gen_count {
        images.push(*image_map.get(&g).ok_or(GroupError::MissingImage(g))?);
    }
    Ok(FiniteQuotient { group, images })
}

/// Emit the quotient file format. Deterministic.
pub fn quotient_to_text(q: &FiniteQuotient) -> String {
    let n = q.group.order();
    let mut out = format!("group {}\n", n);
    for i in 0..n {
        let row: Vec<String> = (0..n).map(|j| q.group.mul(i, j).to_string()).collect();
        out.push_str(&row.join(" "));
        out.push('\n');
    }
    out.push_str("images\n");
    for (g, &e) in q.images.iter().enumerate() {
        out.push_str(&format!("gen {} -> {}\n", g, e));
    }
    out
}

fn gcd(a: usize, b: usize) -> usize {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::census;
    use crate::homology::homology;
    use crate::skeleton::build_skeleton;

    fn presentation_of(t: &crate::triangulation::Triangulation) -> Presentation {
        presentation_from(&build_skeleton(t).unwrap()).unwrap()
    }

    #[test]
    fn t3_abelianization_is_z3() {
        let t = census::t3();
        let p = presentation_of(&t);
        let ab = abelianization(&p);
        assert_eq!(ab.rank, 3);
        assert!(ab.torsion.is_empty());
        assert_eq!(ab.rank, homology(&t).unwrap().b1());
    }

    #[test]
    fn s3_abelianization_is_trivial() {
        let p = presentation_of(&census::s3_one_tet());
        let ab = abelianization(&p);
        assert_eq!(ab.rank, 0);
        assert!(ab.torsion.is_empty());
    }

    #[test]
    fn rp3_abelianization_is_z2() {
        let p = presentation_of(&census::rp3());
        assert_eq!(
            abelianization(&p),
            Abelianization {
                rank: 0,
                torsion: vec![2]
            }
        );
    }

    #[test]
    fn free_presentation_abelianizes_freely() {
        let p = Presentation {
            generator_count: 2,
            relators: vec![],
        };
        assert_eq!(abelianization(&p).rank, 2);
    }

    #[test]
    fn multi_vertex_rejected() {
        // Doubled tetrahedron has 4 vertex classes.
        let mut t = crate::triangulation::Triangulation::empty(2);
        for f in 0..4 {
            t.glue(0, f, 1, f, crate::perm::Perm3::IDENTITY).unwrap();
        }
        let s = build_skeleton(&t).unwrap();
        assert!(matches!(
            presentation_from(&s),
            Err(PresentationError::MultipleVertices(4))
        ));
    }

    #[test]
    fn t3_has_seven_mod2_quotients() {
        let p = presentation_of(&census::t3());
        let quotients = cyclic_quotients(&p, 2);
        assert_eq!(quotients.len(), 7);
        for q in &quotients {
            assert!(validate_quotient(&p, &q).all_pass());
        }
    }

    #[test]
    fn s3_admits_no_cyclic_quotients() {
        let p = presentation_of(&census::s3_one_tet());
        for n in 2..8 {
            assert!(cyclic_quotients(&p, n).is_empty());
        }
    }

    #[test]
    fn s2xs1_has_one_quotient_per_degree() {
        // b1 = 1 with no torsion: exactly one surjection onto Z/n up to units.
        let p = presentation_of(&census::s2xs1());
        for n in [2usize, 3, 5, 7] {
            assert_eq!(cyclic_quotients(&p, n).len(), 1, "n = {}", n);
        }
    }

    #[test]
    fn trivial_images_fail_surjectivity() {
        let p = presentation_of(&census::s2xs1());
        let q = FiniteQuotient {
            group: GroupTable::cyclic(2),
            images: vec![0; p.generator_count],
        };
        let report = validate_quotient(&p, &q);
        assert!(report.check("relators_killed").unwrap().pass);
        assert!(!report.check("surjectivity").unwrap().pass);
    }

    #[test]
    fn relator_violation_reported_with_index() {
        let p = Presentation {
            generator_count: 1,
            relators: vec![vec![(0, 1)]],
        };
        let q = FiniteQuotient {
            group: GroupTable::cyclic(2),
            images: vec![1],
        };
        let report = validate_quotient(&p, &q);
        let check = report.check("relators_killed").unwrap();
        assert!(!check.pass);
        assert!(check.detail.contains("relator 0"));
    }

    #[test]
    fn quotient_text_round_trip() {
        let p = presentation_of(&census::t3());
        let q = &cyclic_quotients(&p, 3)[0];
        let parsed = parse_quotient(&quotient_to_text(q)).unwrap();
        assert_eq!(parsed.images, q.images);
        assert_eq!(parsed.group, q.group);
    }

    #[test]
    fn bad_group_table_rejected() {
        // Identity is fine, but 1 has no inverse.
        let rows = vec![vec![0, 1], vec![1, 1]];
        assert!(GroupTable::new(rows).is_err());
    }
}
