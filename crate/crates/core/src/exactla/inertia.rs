use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};

use super::SymRatMatrix;
use crate::rational::Rational;

/// Numbers of positive, zero and negative eigenvalues (with multiplicity).
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Inertia {
    pub positive: usize,
    pub zero: usize,
    pub negative: usize,
}

impl Inertia {
    pub fn new(positive: usize, zero: usize, negative: usize) -> Self {
        Inertia {
            positive,
            zero,
            negative,
        }
    }

    pub fn dim(&self) -> usize {
        self.positive + self.zero + self.negative
    }

    pub fn is_singular(&self) -> bool {
        self.zero > 0
    }

    pub fn has_negative(&self) -> bool {
        self.negative > 0
    }

    pub fn has_nonpositive(&self) -> bool {
        self.negative + self.zero > 0
    }

    pub fn is_positive_semidefinite(&self) -> bool {
        self.negative == 0
    }
}

/// Inertia by symmetric congruence reduction with 1×1 and 2×2 pivots.
///
/// A nonzero diagonal entry is eliminated as a 1×1 pivot. When the whole
/// remaining diagonal vanishes, a nonzero off-diagonal pair `b` forms the
/// pivot block `[[0, b], [b, 0]]`, which contributes one positive and one
/// negative eigenvalue. Both steps keep the Schur complement rational.
pub fn inertia(a: &SymRatMatrix) -> Inertia {
    let mut m: Vec<Vec<Rational>> = a.to_rows();
    let mut out = Inertia::default();
    while !m.is_empty() {
        let n = m.len();
        if let Some(i) = (0..n).find(|&i| !m[i][i].is_zero()) {
            let d = m[i][i].clone();
            if d.is_positive() {
                out.positive += 1;
            } else {
                out.negative += 1;
            }
            let keep: Vec<usize> = (0..n).filter(|&r| r != i).collect();
            m = keep
                .iter()
                .map(|&r| {
                    keep.iter()
                        .map(|&c| {
                            if m[r][i].is_zero() || m[i][c].is_zero() {
                                m[r][c].clone()
                            } else {
                                &m[r][c] - &m[r][i] * &m[i][c] / &d
                            }
                        })
                        .collect()
                })
                .collect();
            continue;
        }
        let pair = (0..n)
            .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
            .find(|&(i, j)| !m[i][j].is_zero());
        let Some((i, j)) = pair else {
            out.zero += n;
            break;
        };
        out.positive += 1;
        out.negative += 1;
        let b = m[i][j].clone();
        let keep: Vec<usize> = (0..n).filter(|&r| r != i && r != j).collect();
        m = keep
            .iter()
            .map(|&r| {
                keep.iter()
                    .map(|&c| &m[r][c] - (&m[r][i] * &m[j][c] + &m[r][j] * &m[i][c]) / &b)
                    .collect()
            })
            .collect();
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::int;

    fn sym(rows: &[&[i64]]) -> SymRatMatrix {
        SymRatMatrix::from_rows(rows.iter().map(|r| r.iter().map(|&v| int(v)).collect()).collect())
            .unwrap()
    }

    #[test]
    fn identity() {
        assert_eq!(inertia(&SymRatMatrix::identity(3)), Inertia::new(3, 0, 0));
    }

    #[test]
    fn zero_diagonal_needs_block_pivot() {
        assert_eq!(inertia(&sym(&[&[0, 1], &[1, 0]])), Inertia::new(1, 0, 1));
        assert_eq!(
            inertia(&sym(&[&[0, 1, 1], &[1, 0, 1], &[1, 1, 0]])),
            Inertia::new(1, 0, 2)
        );
    }

    #[test]
    fn family_matrix_examples() {
        // eigenvalues 1, 1 ± √2
        assert_eq!(
            inertia(&sym(&[&[1, -1, 0], &[-1, 1, -1], &[0, -1, 1]])),
            Inertia::new(2, 0, 1)
        );
        // characteristic polynomial x(x² - 3x + 1)
        assert_eq!(
            inertia(&sym(&[&[1, -1, 0], &[-1, 2, 0], &[0, 0, 0]])),
            Inertia::new(2, 1, 0)
        );
        assert_eq!(inertia(&SymRatMatrix::zeros(2)), Inertia::new(0, 2, 0));
    }
}
