//! Smith normal form of integer matrices.
//!
//! Dense, exact, i128 arithmetic. Inputs here are boundary matrices and
//! relator exponent matrices of desk-scale triangulations, so no effort is
//! made to control coefficient growth beyond smallest-pivot selection.

/// Dense integer matrix, row major.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntMatrix {
    pub rows: usize,
    pub cols: usize,
    data: Vec<i128>,
}

impl IntMatrix {
    pub fn zeros(rows: usize, cols: usize) -> IntMatrix {
        IntMatrix {
            rows,
            cols,
            data: vec![0; rows * cols],
        }
    }

    pub fn from_rows(rows: &[Vec<i128>]) -> IntMatrix {
        let r = rows.len();
        let c = rows.first().map_or(0, |row| row.len());
        let mut m = IntMatrix::zeros(r, c);
        for (i, row) in rows.iter().enumerate() {
            assert_eq!(row.len(), c);
            for (j, &v) in row.iter().enumerate() {
                m[(i, j)] = v;
            }
        }
        m
    }

    pub fn add(&mut self, i: usize, j: usize, v: i128) {
        self[(i, j)] += v;
    }
}

impl std::ops::Index<(usize, usize)> for IntMatrix {
    type Output = i128;
    fn index(&self, (i, j): (usize, usize)) -> &i128 {
        &self.data[i * self.cols + j]
    }
}

impl std::ops::IndexMut<(usize, usize)> for IntMatrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut i128 {
        &mut self.data[i * self.cols + j]
    }
}

/// The nonzero diagonal of the Smith normal form: `d1 | d2 | ... | dr`,
/// all positive. The length is the rank.
pub fn smith_diagonal(m: &IntMatrix) -> Vec<i128> {
    let mut a = m.clone();
    let (rows, cols) = (a.rows, a.cols);
    let mut diag = Vec::new();
    let mut k = 0;
    while k < rows.min(cols) {
        // Smallest nonzero entry in the remaining submatrix.
        let mut pivot: Option<(usize, usize)> = None;
        for i in k..rows {
            for j in k..cols {
                if a[(i, j)] != 0
                    && pivot.is_none_or(|(pi, pj)| a[(i, j)].abs() < a[(pi, pj)].abs())
                {
                    pivot = Some((i, j));
                }
            }
        }
        let (pi, pj) = match pivot {
            Some(p) => p,
            None => break,
        };
        swap_rows(&mut a, k, pi);
        swap_cols(&mut a, k, pj);

        loop {
            // Clear column k with row operations, keeping remainders.
            let mut dirty = false;
            for i in (k + 1)..rows {
                if a[(i, k)] != 0 {
                    let q = a[(i, k)].div_euclid(a[(k, k)]);
                    for j in k..cols {
                        let v = a[(k, j)];
                        a[(i, j)] -= q * v;
                    }
                    if a[(i, k)] != 0 {
                        // Remainder became the new, smaller pivot.
                        swap_rows(&mut a, k, i);
                        dirty = true;
                    }
                }
            }
            for j in (k + 1)..cols {
                if a[(k, j)] != 0 {
                    let q = a[(k, j)].div_euclid(a[(k, k)]);
                    for i in k..rows {
                        let v = a[(i, k)];
                        a[(i, j)] -= q * v;
                    }
                    if a[(k, j)] != 0 {
                        swap_cols(&mut a, k, j);
                        dirty = true;
                    }
                }
            }
            if !dirty {
                break;
            }
        }

        // Enforce divisibility of the rest of the submatrix by the pivot.
        let p = a[(k, k)];
        let mut fixed = true;
        'scan: for i in (k + 1)..rows {
            for j in (k + 1)..cols {
                if a[(i, j)] % p != 0 {
                    for jj in k..cols {
                        let v = a[(i, jj)];
                        a[(k, jj)] += v;
                    }
                    fixed = false;
                    break 'scan;
                }
            }
        }
        if !fixed {
            continue; // redo pivot k with the merged row
        }
        diag.push(p.abs());
        k += 1;
    }
    diag
}

pub fn rank(m: &IntMatrix) -> usize {
    smith_diagonal(m).len()
}

/// Elementary divisors greater than one, i.e. the torsion coefficients.
pub fn torsion_divisors(m: &IntMatrix) -> Vec<i128> {
    smith_diagonal(m).into_iter().filter(|&d| d > 1).collect()
}

fn swap_rows(a: &mut IntMatrix, r1: usize, r2: usize) {
    if r1 == r2 {
        return;
    }
    for j in 0..a.cols {
        let tmp = a[(r1, j)];
        a[(r1, j)] = a[(r2, j)];
        a[(r2, j)] = tmp;
    }
}

fn swap_cols(a: &mut IntMatrix, c1: usize, c2: usize) {
    if c1 == c2 {
        return;
    }
    for i in 0..a.rows {
        let tmp = a[(i, c1)];
        a[(i, c1)] = a[(i, c2)];
        a[(i, c2)] = tmp;
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn diagonal_of_known_matrices() {
        // SNF of [[2,4,4],[-6,6,12],[10,-4,-16]] is diag(2, 6, 12).
        let m = IntMatrix::from_rows(&[
            vec![2, 4, 4],
            vec![-6, 6, 12],
            vec![10, -4, -16],
        ]);
        assert_eq!(smith_diagonal(&m), vec![2, 6, 12]);

        let id = IntMatrix::from_rows(&[vec![1, 0], vec![0, 1]]);
        assert_eq!(smith_diagonal(&id), vec![1, 1]);

        let z = IntMatrix::zeros(3, 2);
        assert_eq!(smith_diagonal(&z), Vec::<i128>::new());
    }

    #[test]
    fn rank_deficient() {
        let m = IntMatrix::from_rows(&[vec![1, 2], vec![2, 4]]);
        assert_eq!(rank(&m), 1);
        assert_eq!(torsion_divisors(&m), Vec::<i128>::new());
    }

    #[test]
    fn torsion_of_multiplication_by_two() {
        let m = IntMatrix::from_rows(&[vec![2]]);
        assert_eq!(torsion_divisors(&m), vec![2]);
    }

    #[test]
    fn divisibility_chain_holds_on_random_small_matrices() {
        // Deterministic pseudo-random fill; checks d1 | d2 | ... | dr.
        let mut state = 0x9e3779b97f4a7c15u64;
        let mut next = move || {
            state ^= state << 13;
            state ^= state >> 7;
            state ^= state << 17;
            (state % 11) as i128 - 5
        };
        for _ in 0..50 {
            let mut m = IntMatrix::zeros(4, 5);
            for i in 0..4 {
                for j in 0..5 {
                    m[(i, j)] = next();
                }
            }
            let d = smith_diagonal(&m);
            for w in d.windows(2) {
                assert_eq!(w[1] % w[0], 0, "divisibility broken: {:?}", d);
            }
        }
    }
}
