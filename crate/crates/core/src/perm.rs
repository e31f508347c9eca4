//! Permutations of three symbols, as used in face gluings.

use std::fmt;

/// A permutation of `{0, 1, 2}`, mapping position to image.
///
/// In a gluing line `g 0 1 -> 1 2 021`, the string `021` means position 0
/// maps to 0, position 1 to 2 and position 2 to 1. Positions index the
/// sorted vertex list of the source face; images index the sorted vertex
/// list of the target face.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct Perm3([u8; 3]);

impl Perm3 {
    pub const IDENTITY: Perm3 = Perm3([0, 1, 2]);

    pub fn new(images: [u8; 3]) -> Option<Perm3> {
        let mut seen = [false; 3];
        for &i in &images {
            if i > 2 || seen[i as usize] {
                return None;
            }
            seen[i as usize] = true;
        }
        Some(Perm3(images))
    }

    /// All six permutations, in lexicographic order of their image strings.
    pub fn all() -> [Perm3; 6] {
        [
            Perm3([0, 1, 2]),
            Perm3([0, 2, 1]),
            Perm3([1, 0, 2]),
            Perm3([1, 2, 0]),
            Perm3([2, 0, 1]),
            Perm3([2, 1, 0]),
        ]
    }

    pub fn apply(&self, pos: usize) -> usize {
        self.0[pos] as usize
    }

    pub fn inverse(&self) -> Perm3 {
        let mut inv = [0u8; 3];
        for (pos, &img) in self.0.iter().enumerate() {
            inv[img as usize] = pos as u8;
        }
        Perm3(inv)
    }

    /// `self` after `other`: `(self * other)(x) = self(other(x))`.
    pub fn compose(&self, other: &Perm3) -> Perm3 {
        Perm3([
            self.0[other.0[0] as usize],
            self.0[other.0[1] as usize],
            self.0[other.0[2] as usize],
        ])
    }

    pub fn sign(&self) -> i64 {
        let mut s = 1;
        for i in 0..3 {
            for j in (i + 1)..3 {
                if self.0[i] > self.0[j] {
                    s = -s;
                }
            }
        }
        s
    }

    pub fn parse(s: &str) -> Option<Perm3> {
        let bytes = s.as_bytes();
        if bytes.len() != 3 {
            return None;
        }
        let mut images = [0u8; 3];
        for (k, &b) in bytes.iter().enumerate() {
            if !(b'0'..=b'2').contains(&b) {
                return None;
            }
            images[k] = b - b'0';
        }
        Perm3::new(images)
    }
}

impl fmt::Display for Perm3 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}{}", self.0[0], self.0[1], self.0[2])
    }
}

impl fmt::Debug for Perm3 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Perm3({})", self)
    }
}

/// Parity of a bijection of `{0,1,2,3}`, `+1` even, `-1` odd.
pub fn sign4(map: [usize; 4]) -> i64 {
    let mut s = 1;
    for i in 0..4 {
        for j in (i + 1)..4 {
            if map[i] > map[j] {
                s = -s;
            }
        }
    }
    s
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn inverse_composes_to_identity() {
        for p in Perm3::all() {
            assert_eq!(p.compose(&p.inverse()), Perm3::IDENTITY);
            assert_eq!(p.inverse().compose(&p), Perm3::IDENTITY);
        }
    }

    #[test]
    fn parse_round_trip() {
        for p in Perm3::all() {
            assert_eq!(Perm3::parse(&p.to_string()), Some(p));
        }
        assert_eq!(Perm3::parse("013"), None);
        assert_eq!(Perm3::parse("001"), None);
        assert_eq!(Perm3::parse("01"), None);
    }

    #[test]
    fn sign_matches_transposition_count() {
        assert_eq!(Perm3::IDENTITY.sign(), 1);
        assert_eq!(Perm3::parse("021").unwrap().sign(), -1);
        assert_eq!(Perm3::parse("120").unwrap().sign(), 1);
        assert_eq!(sign4([0, 1, 2, 3]), 1);
        assert_eq!(sign4([1, 0, 2, 3]), -1);
        assert_eq!(sign4([1, 0, 3, 2]), 1);
    }
}
