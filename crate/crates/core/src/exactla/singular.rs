//! Supersingularity and weak singularity in the canonical basis.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::matrix::normalize_vector;
use super::{RatMatrix, SymRatMatrix};
use crate::error::{Error, Result};
use crate::rational::{self, Rational};

/// Largest dimension for which the weak-singularity subset search runs.
pub const DEFAULT_SUBSET_CAP: usize = 24;

/// A kernel vector with every coordinate nonzero, if one exists.
///
/// Such a vector exists iff no coordinate vanishes on the whole kernel, since
/// a vector space over an infinite field is not a finite union of proper
/// subspaces. The witness is `Σ tⁱ kᵢ` over the kernel basis for the first
/// integer `t ≥ 1` that avoids every coordinate hyperplane; each coordinate
/// is a nonzero polynomial in `t` of degree `< dim ker`, so a suitable `t`
/// is at most `n (dim ker - 1) + 1`.
pub fn is_supersingular(a: &SymRatMatrix) -> Option<Vec<Rational>> {
    supersingular_witness(a.as_matrix())
}

pub(crate) fn supersingular_witness(a: &RatMatrix) -> Option<Vec<Rational>> {
    let basis = a.kernel_basis();
    if basis.is_empty() {
        return None;
    }
    let n = a.cols();
    if (0..n).any(|v| basis.iter().all(|k| k[v].is_zero())) {
        return None;
    }
    for t in 1i64.. {
        let t = rational::int(t);
        let mut x = vec![Rational::zero(); n];
        let mut weight = Rational::one();
        for k in &basis {
            for (xv, kv) in x.iter_mut().zip(k) {
                *xv += &weight * kv;
            }
            weight *= &t;
        }
        if x.iter().all(|c| !c.is_zero()) {
            return Some(normalize_vector(&x));
        }
    }
    unreachable!()
}

/// A nonzero `x` with `(Ax)_v = 0` on the support of `x`, if one exists.
///
/// Such an `x` exists iff some principal submatrix `A[S, S]` is singular: a
/// kernel vector of `A[S, S]` extended by zeros is a witness (its support
/// lies inside `S`), and the support of any witness indexes a singular
/// principal submatrix. Supports are visited from the largest size down,
/// lexicographically within a size. For the first singular `S` the witness
/// is a full-support kernel vector of `A[S, S]` when one exists, otherwise
/// the first kernel basis vector.
pub fn is_weakly_singular(a: &SymRatMatrix, cap: usize) -> Result<Option<Vec<Rational>>> {
    let n = a.dim();
    if n > cap {
        return Err(Error::SubsetCapExceeded { n, cap });
    }
    let scale = rational::common_denominator(a.as_matrix().to_rows().iter().flatten());
    let ints: Vec<Vec<BigInt>> = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| {
                    let q = a.get(i, j);
                    q.numer() * (&scale / q.denom())
                })
                .collect()
        })
        .collect();
    for size in (1..=n).rev() {
        let mut subset: Vec<usize> = (0..size).collect();
        loop {
            if integer_minor_is_zero(&ints, &subset) {
                let sub = a.principal_submatrix(&subset);
                let local = supersingular_witness(sub.as_matrix())
                    .unwrap_or_else(|| sub.kernel_basis().swap_remove(0));
                let mut x = vec![Rational::zero(); n];
                for (&v, value) in subset.iter().zip(local) {
                    x[v] = value;
                }
                return Ok(Some(x));
            }
            if !next_combination(&mut subset, n) {
                break;
            }
        }
    }
    Ok(None)
}

/// Advances to the next `k`-subset of `0..n` in lexicographic order.
pub(crate) fn next_combination(subset: &mut [usize], n: usize) -> bool {
    let k = subset.len();
    let mut i = k;
    while i > 0 {
        i -= 1;
        if subset[i] < n - k + i {
            subset[i] += 1;
            for j in i + 1..k {
                subset[j] = subset[j - 1] + 1;
            }
            return true;
        }
    }
    false
}

fn integer_minor_is_zero(ints: &[Vec<BigInt>], subset: &[usize]) -> bool {
    let k = subset.len();
    let mut m: Vec<Vec<BigInt>> = subset
        .iter()
        .map(|&i| subset.iter().map(|&j| ints[i][j].clone()).collect())
        .collect();
    let mut prev = BigInt::one();
    for c in 0..k {
        let Some(p) = (c..k).find(|&i| !m[i][c].is_zero()) else {
            return true;
        };
        m.swap(p, c);
        for i in c + 1..k {
            for j in c + 1..k {
                m[i][j] = (&m[c][c] * &m[i][j] - &m[i][c] * &m[c][j]) / &prev;
            }
            m[i][c] = BigInt::zero();
        }
        prev = m[c][c].clone();
    }
    false
}
