use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::rational::{self, Rational};

/// Dense rectangular matrix over ℚ, row-major.
#[derive(Clone, PartialEq, Eq)]
pub struct RatMatrix {
    rows: usize,
    cols: usize,
    data: Vec<Rational>,
}

impl RatMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        RatMatrix {
            rows,
            cols,
            data: vec![Rational::zero(); rows * cols],
        }
    }

    pub fn from_rows(rows: Vec<Vec<Rational>>) -> Result<Self> {
        let r = rows.len();
        let c = rows.first().map_or(0, |row| row.len());
        if let Some(bad) = rows.iter().find(|row| row.len() != c) {
            return Err(Error::DimensionMismatch {
                expected: c,
                got: bad.len(),
            });
        }
        Ok(RatMatrix {
            rows: r,
            cols: c,
            data: rows.into_iter().flatten().collect(),
        })
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> Rational) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        RatMatrix { rows, cols, data }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &Rational {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, value: Rational) {
        self.data[i * self.cols + j] = value;
    }

    pub fn add_to(&mut self, i: usize, j: usize, value: &Rational) {
        self.data[i * self.cols + j] += value;
    }

    pub fn row(&self, i: usize) -> &[Rational] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn to_rows(&self) -> Vec<Vec<Rational>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Zero::is_zero)
    }

    pub fn mul_vec(&self, x: &[Rational]) -> Result<Vec<Rational>> {
        if x.len() != self.cols {
            return Err(Error::DimensionMismatch {
                expected: self.cols,
                got: x.len(),
            });
        }
        Ok((0..self.rows)
            .map(|i| {
                self.row(i)
                    .iter()
                    .zip(x)
                    .filter(|(a, b)| !a.is_zero() && !b.is_zero())
                    .fold(Rational::zero(), |acc, (a, b)| acc + a * b)
            })
            .collect())
    }

    pub fn mul(&self, other: &RatMatrix) -> Result<RatMatrix> {
        if self.cols != other.rows {
            return Err(Error::DimensionMismatch {
                expected: self.cols,
                got: other.rows,
            });
        }
        Ok(RatMatrix::from_fn(self.rows, other.cols, |i, j| {
            (0..self.cols).fold(Rational::zero(), |acc, k| {
                acc + self.get(i, k) * other.get(k, j)
            })
        }))
    }

    pub fn transpose(&self) -> RatMatrix {
        RatMatrix::from_fn(self.cols, self.rows, |i, j| self.get(j, i).clone())
    }

    /// Each row scaled by the lcm of its denominators.
    fn integer_rows(&self) -> Vec<Vec<BigInt>> {
        (0..self.rows)
            .map(|i| {
                let row = self.row(i);
                let l = rational::common_denominator(row);
                row.iter()
                    .map(|q| q.numer() * (&l / q.denom()))
                    .collect()
            })
            .collect()
    }

    /// Fraction-free (Bareiss) row echelon form of the integerized rows.
    fn echelon(&self) -> Echelon {
        bareiss(self.integer_rows(), self.cols)
    }

    pub fn rank(&self) -> usize {
        self.echelon().pivots.len()
    }

    /// Exact determinant of a square matrix.
    pub fn determinant(&self) -> Result<Rational> {
        if self.rows != self.cols {
            return Err(Error::DimensionMismatch {
                expected: self.rows,
                got: self.cols,
            });
        }
        let n = self.rows;
        if n == 0 {
            return Ok(Rational::one());
        }
        let scale = (0..n).fold(BigInt::one(), |acc, i| {
            acc * rational::common_denominator(self.row(i))
        });
        let ech = self.echelon();
        if ech.pivots.len() < n {
            return Ok(Rational::zero());
        }
        let mut det = ech.rows[n - 1][n - 1].clone();
        if ech.swaps % 2 == 1 {
            det = -det;
        }
        Ok(Rational::new(det, scale))
    }

    /// Basis of the right kernel: one vector per free column, each scaled
    /// to coprime integers with first nonzero coordinate positive.
    pub fn kernel_basis(&self) -> Vec<Vec<Rational>> {
        let ech = self.echelon();
        let mut is_pivot = vec![false; self.cols];
        for &p in &ech.pivots {
            is_pivot[p] = true;
        }
        let mut basis = Vec::new();
        for free in (0..self.cols).filter(|&c| !is_pivot[c]) {
            let mut x = vec![Rational::zero(); self.cols];
            x[free] = Rational::one();
            for (k, &p) in ech.pivots.iter().enumerate().rev() {
                let row = &ech.rows[k];
                let s = (p + 1..self.cols)
                    .filter(|&j| !row[j].is_zero() && !x[j].is_zero())
                    .fold(Rational::zero(), |acc, j| {
                        acc + Rational::from_integer(row[j].clone()) * &x[j]
                    });
                x[p] = -s / Rational::from_integer(row[p].clone());
            }
            basis.push(normalize_vector(&x));
        }
        basis
    }

    /// The unique `x` with `Ax = b`, or `None` when `A` is singular.
    pub fn solve(&self, b: &[Rational]) -> Result<Option<Vec<Rational>>> {
        let n = self.rows;
        if self.cols != n || b.len() != n {
            return Err(Error::DimensionMismatch {
                expected: n,
                got: if self.cols != n { self.cols } else { b.len() },
            });
        }
        let mut m: Vec<Vec<Rational>> = (0..n)
            .map(|i| {
                let mut row = self.row(i).to_vec();
                row.push(b[i].clone());
                row
            })
            .collect();
        for c in 0..n {
            let Some(p) = (c..n).find(|&r| !m[r][c].is_zero()) else {
                return Ok(None);
            };
            m.swap(c, p);
            let pivot = m[c][c].clone();
            for r in 0..n {
                if r == c || m[r][c].is_zero() {
                    continue;
                }
                let f = &m[r][c] / &pivot;
                for j in c..=n {
                    let delta = &f * &m[c][j];
                    m[r][j] -= delta;
                }
            }
        }
        Ok(Some((0..n).map(|i| &m[i][n] / &m[i][i]).collect()))
    }
}

impl fmt::Debug for RatMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "RatMatrix {}x{} [", self.rows, self.cols)?;
        for i in 0..self.rows {
            let cells: Vec<String> = self.row(i).iter().map(rational::format).collect();
            writeln!(f, "  [{}]", cells.join(", "))?;
        }
        write!(f, "]")
    }
}

struct Echelon {
    rows: Vec<Vec<BigInt>>,
    pivots: Vec<usize>,
    swaps: usize,
}

fn bareiss(mut m: Vec<Vec<BigInt>>, cols: usize) -> Echelon {
    let rows = m.len();
    let mut prev = BigInt::one();
    let mut pivots = Vec::new();
    let mut swaps = 0;
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        if p != r {
            m.swap(p, r);
            swaps += 1;
        }
        for i in r + 1..rows {
            for j in c + 1..cols {
                let v = (&m[r][c] * &m[i][j] - &m[i][c] * &m[r][j]) / &prev;
                m[i][j] = v;
            }
            m[i][c] = BigInt::zero();
        }
        prev = m[r][c].clone();
        pivots.push(c);
        r += 1;
    }
    Echelon {
        rows: m,
        pivots,
        swaps,
    }
}

/// Scales a nonzero vector to coprime integer coordinates whose first
/// nonzero entry is positive. The zero vector is returned unchanged.
pub fn normalize_vector(x: &[Rational]) -> Vec<Rational> {
    use num_integer::Integer;
    let l = rational::common_denominator(x);
    let ints: Vec<BigInt> = x.iter().map(|q| q.numer() * (&l / q.denom())).collect();
    let g = ints.iter().fold(BigInt::zero(), |acc, v| acc.gcd(v));
    if g.is_zero() {
        return x.to_vec();
    }
    let first_negative = ints
        .iter()
        .find(|v| !v.is_zero())
        .is_some_and(|v| v.is_negative());
    let g = if first_negative { -g } else { g };
    ints.into_iter()
        .map(|v| Rational::from_integer(v / &g))
        .collect()
}

/// Symmetric square matrix over ℚ; index `i` is vertex `i`.
#[derive(Clone, PartialEq, Eq)]
pub struct SymRatMatrix(RatMatrix);

impl SymRatMatrix {
    pub fn new(m: RatMatrix) -> Result<Self> {
        if m.rows != m.cols {
            return Err(Error::DimensionMismatch {
                expected: m.rows,
                got: m.cols,
            });
        }
        for i in 0..m.rows {
            for j in i + 1..m.rows {
                if m.get(i, j) != m.get(j, i) {
                    return Err(Error::NotSymmetric);
                }
            }
        }
        Ok(SymRatMatrix(m))
    }

    pub fn from_rows(rows: Vec<Vec<Rational>>) -> Result<Self> {
        SymRatMatrix::new(RatMatrix::from_rows(rows)?)
    }

    pub fn zeros(n: usize) -> Self {
        SymRatMatrix(RatMatrix::zeros(n, n))
    }

    pub fn identity(n: usize) -> Self {
        SymRatMatrix(RatMatrix::from_fn(n, n, |i, j| {
            if i == j {
                Rational::one()
            } else {
                Rational::zero()
            }
        }))
    }

    pub fn dim(&self) -> usize {
        self.0.rows
    }

    pub fn get(&self, i: usize, j: usize) -> &Rational {
        self.0.get(i, j)
    }

    /// Adds `value` at `(i, j)` and, off the diagonal, at `(j, i)`.
    pub fn add_symmetric(&mut self, i: usize, j: usize, value: &Rational) {
        self.0.add_to(i, j, value);
        if i != j {
            self.0.add_to(j, i, value);
        }
    }

    pub fn as_matrix(&self) -> &RatMatrix {
        &self.0
    }

    pub fn to_rows(&self) -> Vec<Vec<Rational>> {
        self.0.to_rows()
    }

    pub fn mul_vec(&self, x: &[Rational]) -> Result<Vec<Rational>> {
        self.0.mul_vec(x)
    }

    /// `(Ax, x)`
    pub fn quadratic_form(&self, x: &[Rational]) -> Result<Rational> {
        let ax = self.mul_vec(x)?;
        Ok(ax.iter().zip(x).fold(Rational::zero(), |acc, (a, b)| acc + a * b))
    }

    pub fn principal_submatrix(&self, indices: &[usize]) -> SymRatMatrix {
        SymRatMatrix(RatMatrix::from_fn(indices.len(), indices.len(), |i, j| {
            self.get(indices[i], indices[j]).clone()
        }))
    }

    /// `PᵀAP`
    pub fn congruent(&self, p: &RatMatrix) -> Result<SymRatMatrix> {
        SymRatMatrix::new(p.transpose().mul(&self.0)?.mul(p)?)
    }

    pub fn determinant(&self) -> Rational {
        self.0.determinant().expect("square by construction")
    }

    pub fn kernel_basis(&self) -> Vec<Vec<Rational>> {
        self.0.kernel_basis()
    }
}

impl fmt::Debug for SymRatMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}
