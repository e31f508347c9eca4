//! Arithmetic bookkeeping for stacks of surfaces arising from thinned
//! handle decompositions: an alternating list of surface Euler
//! characteristics chi(F_1), ..., chi(F_n) refining a single splitting
//! surface F, with the telescoping identity
//!
//!   |chi(F)| = (chi_0 - chi_1)/2 + (chi_2 - chi_1)/2 + (chi_2 - chi_3)/2 + ...
//!
//! (chi_0 = chi_{n+1} = 0), every term at least 1, plus the derived
//! quadratic and component-count bounds and the pigeonhole degree bound
//! for disjoint translates.

use crate::report::{Check, ValidationReport};

#[derive(Debug, thiserror::Error)]
pub enum LedgerError {
    #[error("parse error: {0}")]
    Parse(String),
    #[error("term list must alternate to zero: {0}")]
    UnbalancedTerms(String),
}

/// Euler characteristics of the stacked surfaces and of the original
/// splitting surface.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SplittingProfile {
    pub chi_list: Vec<i64>,
    pub chi_f: i64,
}

/// Euler data of one compression body H: its negative boundary, positive
/// boundary, and total boundary component count.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CompressionBodyStats {
    pub chi_minus: i64,
    pub chi_plus: i64,
    pub boundary_components: i64,
}

impl SplittingProfile {
    /// The n+1 telescoping terms: differences of consecutive chi values
    /// (padded with 0 at both ends), halved, signed so that admissible
    /// stacks make every term positive. None when a difference is odd.
    pub fn star_terms(&self) -> Option<Vec<i64>> {
        let n = self.chi_list.len();
        let chi = |j: usize| -> i64 {
            if j == 0 || j == n + 1 {
                0
            } else {
                self.chi_list[j - 1]
            }
        };
        let mut terms = Vec::with_capacity(n + 1);
        for j in 0..=n {
            let diff = if j % 2 == 0 {
                chi(j) - chi(j + 1)
            } else {
                chi(j + 1) - chi(j)
            };
            if diff % 2 != 0 {
                return None;
            }
            terms.push(diff / 2);
        }
        Some(terms)
    }

    pub fn to_text(&self) -> String {
        let chis: Vec<String> = self.chi_list.iter().map(|c| c.to_string()).collect();
        format!("splitting chiF={} chis={}\n", self.chi_f, chis.join(","))
    }

    pub fn parse(text: &str) -> Result<Self, LedgerError> {
        let err = |msg: &str| LedgerError::Parse(msg.to_string());
        let line = text
            .lines()
            .map(str::trim)
            .find(|l| !l.is_empty() && !l.starts_with('#'))
            .ok_or_else(|| err("empty input"))?;
        let fields: Vec<&str> = line.split_whitespace().collect();
        if fields.len() != 3 || fields[0] != "splitting" {
            return Err(err("expected: splitting chiF=<int> chis=<int,int,...>"));
        }
        let chi_f = fields[1]
            .strip_prefix("chiF=")
            .and_then(|s| s.parse().ok())
            .ok_or_else(|| err("bad chiF field"))?;
        let chi_list = fields[2]
            .strip_prefix("chis=")
            .ok_or_else(|| err("bad chis field"))?
            .split(',')
            .map(|s| s.trim().parse().map_err(|_| err("bad chi entry")))
            .collect::<Result<Vec<i64>, _>>()?;
        Ok(SplittingProfile { chi_list, chi_f })
    }
}

/// Rebuild a profile from prescribed telescoping terms (each >= 1). The
/// terms must alternate back to zero (even-position sum equals
/// odd-position sum), which forces an odd-length chi list.
pub fn profile_from_terms(terms: &[i64]) -> Result<SplittingProfile, LedgerError> {
    if terms.len() < 2 || terms.iter().any(|&t| t < 1) {
        return Err(LedgerError::UnbalancedTerms(
            "need at least two terms, all >= 1".to_string(),
        ));
    }
    let mut chi = 0i64;
    let mut chi_list = Vec::new();
    for (j, &t) in terms.iter().enumerate() {
        chi += if j % 2 == 0 { -2 * t } else { 2 * t };
        if j + 1 < terms.len() {
            chi_list.push(chi);
        }
    }
    if chi != 0 {
        return Err(LedgerError::UnbalancedTerms(format!(
            "terms telescope to {} instead of 0",
            chi / 2
        )));
    }
    let chi_f = -terms.iter().sum::<i64>();
    Ok(SplittingProfile { chi_list, chi_f })
}

/// Verify the telescoping identity: all terms integral and >= 1, their
/// sum equal to |chi(F)|, no sphere entries, every |chi(F_j)| bounded by
/// |chi(F)|, and the length bound n + 1 <= |chi(F)|.
pub fn verify_star(p: &SplittingProfile) -> ValidationReport {
    let mut checks = Vec::new();
    let n = p.chi_list.len();
    checks.push(Check {
        name: "nonempty",
        pass: n > 0,
        detail: format!("{} surfaces", n),
    });

    let sphere = p.chi_list.iter().position(|&c| c > 0);
    checks.push(Check {
        name: "no_spheres",
        pass: sphere.is_none(),
        detail: match sphere {
            None => "all surfaces have chi <= 0".to_string(),
            Some(j) => format!("surface {} has chi = {} > 0", j + 1, p.chi_list[j]),
        },
    });

    let oversized = p
        .chi_list
        .iter()
        .position(|&c| c.abs() > p.chi_f.abs());
    checks.push(Check {
        name: "surface_bound",
        pass: oversized.is_none(),
        detail: match oversized {
            None => format!("every |chi| <= {}", p.chi_f.abs()),
            Some(j) => format!(
                "surface {} has |chi| = {} > {}",
                j + 1,
                p.chi_list[j].abs(),
                p.chi_f.abs()
            ),
        },
    });

    match p.star_terms() {
        None => {
            checks.push(Check {
                name: "terms_integral",
                pass: false,
                detail: "a consecutive chi difference is odd".to_string(),
            });
        }
        Some(terms) => {
            checks.push(Check {
                name: "terms_integral",
                pass: true,
                detail: format!(
                    "terms ({})",
                    terms
                        .iter()
                        .map(|t| t.to_string())
                        .collect::<Vec<_>>()
                        .join(", ")
                ),
            });
            let zero = terms.iter().position(|&t| t < 1);
            checks.push(Check {
                name: "terms_positive",
                pass: zero.is_none(),
                detail: match zero {
                    None => "every term >= 1".to_string(),
                    Some(j) => format!(
                        "term {} is {} (adjacent surfaces are parallel)",
                        j, terms[j]
                    ),
                },
            });
            let sum: i64 = terms.iter().sum();
            checks.push(Check {
                name: "sum",
                pass: sum == p.chi_f.abs(),
                detail: format!("terms sum to {}, |chi(F)| = {}", sum, p.chi_f.abs()),
            });
            checks.push(Check {
                name: "length",
                pass: (n as i64 + 1) <= p.chi_f.abs(),
                detail: format!("{} terms vs |chi(F)| = {}", n + 1, p.chi_f.abs()),
            });
        }
    }
    ValidationReport { checks }
}

/// Floor of (3/2)|chi(F)|: the largest number of components any surface
/// in an admissible stack can have.
pub fn component_bound(chi_f: i64) -> i64 {
    3 * chi_f.abs() / 2
}

/// Derived bounds for an admissible profile: the total Euler mass of the
/// stack is at most n|chi(F)|, which stays below |chi(F)| squared.
pub fn corollary4_bounds(p: &SplittingProfile) -> ValidationReport {
    let n = p.chi_list.len() as i64;
    let total: i64 = p.chi_list.iter().map(|c| c.abs()).sum();
    let cf = p.chi_f.abs();
    let mut checks = Vec::new();
    checks.push(Check {
        name: "total_bound",
        pass: total <= n * cf,
        detail: format!("sum |chi(F_j)| = {} vs n|chi(F)| = {}", total, n * cf),
    });
    checks.push(Check {
        name: "quadratic_bound",
        pass: n * cf < cf * cf,
        detail: format!("n|chi(F)| = {} vs |chi(F)|^2 = {}", n * cf, cf * cf),
    });
    checks.push(Check {
        name: "component_bound",
        pass: true,
        detail: format!("at most {} components per surface", component_bound(p.chi_f)),
    });
    ValidationReport { checks }
}

/// Consistency checks for one compression body. `trivial_body` marks the
/// exceptional shapes (3-ball, solid torus, product) exempt from the
/// boundary-count bound.
pub fn verify_compression_body(
    s: &CompressionBodyStats,
    trivial_body: bool,
) -> ValidationReport {
    let diff = s.chi_minus - s.chi_plus;
    let mut checks = Vec::new();
    checks.push(Check {
        name: "even_difference",
        pass: diff % 2 == 0,
        detail: format!("chi difference {}", diff),
    });
    checks.push(Check {
        name: "nonnegative_difference",
        pass: diff >= 0,
        detail: format!("chi difference {}", diff),
    });
    let bound_ok = trivial_body || 2 * s.boundary_components <= 3 * diff;
    checks.push(Check {
        name: "boundary_bound",
        pass: bound_ok,
        detail: if trivial_body {
            "exceptional body, bound waived".to_string()
        } else {
            format!(
                "{} boundary components vs bound {}",
                s.boundary_components,
                3 * diff / 2
            )
        },
    });
    ValidationReport { checks }
}

/// Largest cover degree for which m translates of a compact set need not
/// be pairwise disjoint: C(m,2)|C|^2 + m|C||D|.
pub fn pigeonhole_bound(m: u64, c_size: u64, d_size: u64) -> u64 {
    debug_assert!(m >= 2);
    let (m, c, d) = (m as u128, c_size as u128, d_size as u128);
    let value = m * (m - 1) / 2 * c * c + m * c * d;
    u64::try_from(value).expect("pigeonhole bound fits in 64 bits")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn single_genus_one_surface() {
        let p = SplittingProfile {
            chi_list: vec![-2],
            chi_f: -2,
        };
        assert_eq!(p.star_terms(), Some(vec![1, 1]));
        assert!(verify_star(&p).all_pass());
        assert!(corollary4_bounds(&p).all_pass());
    }

    #[test]
    fn three_surface_stack() {
        let p = SplittingProfile {
            chi_list: vec![-4, -2, -4],
            chi_f: -6,
        };
        assert_eq!(p.star_terms(), Some(vec![2, 1, 1, 2]));
        let report = verify_star(&p);
        assert!(report.all_pass(), "{:?}", report);
        let bounds = corollary4_bounds(&p);
        assert!(bounds.all_pass());
        // Sum of |chi| is 10, strictly below 36.
        assert!(bounds.check("total_bound").unwrap().detail.contains("10"));
        assert_eq!(component_bound(-6), 9);
    }

    #[test]
    fn parallel_adjacent_surfaces_flagged() {
        let p = SplittingProfile {
            chi_list: vec![-2, -2, -2],
            chi_f: -4,
        };
        let report = verify_star(&p);
        assert!(!report.check("terms_positive").unwrap().pass);
    }

    #[test]
    fn unit_chi_is_out_of_model() {
        let p = SplittingProfile {
            chi_list: vec![-1],
            chi_f: -1,
        };
        let report = corollary4_bounds(&p);
        assert!(!report.check("quadratic_bound").unwrap().pass);
    }

    #[test]
    fn sphere_entries_rejected() {
        let p = SplittingProfile {
            chi_list: vec![-2, 2, -2],
            chi_f: -4,
        };
        assert!(!verify_star(&p).check("no_spheres").unwrap().pass);
    }

    #[test]
    fn pigeonhole_values() {
        assert_eq!(pigeonhole_bound(2, 1, 0), 1);
        assert_eq!(pigeonhole_bound(9, 10, 100), 12600);
        assert_eq!(pigeonhole_bound(2, 0, 5), 0);
        // Monotone in each argument.
        for (m, c, d) in [(2u64, 3u64, 4u64), (5, 7, 2), (9, 10, 100)] {
            assert!(pigeonhole_bound(m + 1, c, d) >= pigeonhole_bound(m, c, d));
            assert!(pigeonhole_bound(m, c + 1, d) >= pigeonhole_bound(m, c, d));
            assert!(pigeonhole_bound(m, c, d + 1) >= pigeonhole_bound(m, c, d));
        }
    }

    #[test]
    fn profiles_from_balanced_terms_are_admissible() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(23);
        let mut built = 0;
        while built < 200 {
            let pairs = rng.gen_range(1..=4usize);
            let len = 2 * pairs;
            let mut terms: Vec<i64> = (0..len).map(|_| rng.gen_range(1..=5)).collect();
            // Balance the alternating sum by adjusting the last term.
            let imbalance: i64 = terms[..len - 1]
                .iter()
                .enumerate()
                .map(|(j, &t)| if j % 2 == 0 { t } else { -t })
                .sum();
            if imbalance < 1 {
                continue;
            }
            terms[len - 1] = imbalance;
            let p = profile_from_terms(&terms).unwrap();
            // Reject walks that wander above zero.
            if p.chi_list.iter().any(|&c| c > 0) {
                continue;
            }
            built += 1;
            let report = verify_star(&p);
            assert!(report.all_pass(), "{:?} from {:?}", report, terms);
            assert!(corollary4_bounds(&p).all_pass());
            assert!((p.chi_list.len() as i64) + 1 <= p.chi_f.abs());
        }
    }

    #[test]
    fn compression_body_checks() {
        let ok = CompressionBodyStats {
            chi_minus: -2,
            chi_plus: -6,
            boundary_components: 3,
        };
        assert!(verify_compression_body(&ok, false).all_pass());
        let crowded = CompressionBodyStats {
            chi_minus: -2,
            chi_plus: -4,
            boundary_components: 4,
        };
        assert!(!verify_compression_body(&crowded, false)
            .check("boundary_bound")
            .unwrap()
            .pass);
        assert!(verify_compression_body(&crowded, true).all_pass());
        let odd = CompressionBodyStats {
            chi_minus: 1,
            chi_plus: 0,
            boundary_components: 1,
        };
        assert!(!verify_compression_body(&odd, false)
            .check("even_difference")
            .unwrap()
            .pass);
    }

    #[test]
    fn text_round_trip() {
        let p = SplittingProfile {
            chi_list: vec![-4, -2, -4],
            chi_f: -6,
        };
        let text = p.to_text();
        assert_eq!(text, "splitting chiF=-6 chis=-4,-2,-4\n");
        assert_eq!(SplittingProfile::parse(&text).unwrap(), p);
        assert!(SplittingProfile::parse("splitting chis=-2\n").is_err());
        assert!(SplittingProfile::parse("splitting chiF=x chis=-2\n").is_err());
    }

    #[test]
    fn unbalanced_terms_rejected() {
        assert!(profile_from_terms(&[1, 2]).is_err());
        assert!(profile_from_terms(&[2]).is_err());
        assert!(profile_from_terms(&[1, 0, 1, 2]).is_err());
        let p = profile_from_terms(&[2, 1, 1, 2]).unwrap();
        assert_eq!(p.chi_list, vec![-4, -2, -4]);
        assert_eq!(p.chi_f, -6);
    }
}
