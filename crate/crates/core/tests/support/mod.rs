//! Independent oracles and generators shared by the integration tests.
//!
//! Nothing here calls the library's linear algebra: inertia comes from the
//! characteristic polynomial (Faddeev–LeVerrier, Yun square-free split,
//! Sturm counts) and weak singularity from plain Gauss–Jordan over every
//! support.

#![allow(dead_code)]

use gmspectral::exactla::SymRatMatrix;
use gmspectral::rational::{int, ratio};
use gmspectral::{Cocycle, Edge, LabeledGraph, Rational, Sign};
use num_traits::{One, Signed, Zero};
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn rows(m: &[&[i64]]) -> Vec<Vec<Rational>> {
    m.iter().map(|r| r.iter().map(|&x| int(x)).collect()).collect()
}

// ---------------------------------------------------------------- polynomials

/// Coefficients, lowest degree first, no trailing zeros.
#[derive(Clone, Debug, PartialEq)]
pub struct Poly(pub Vec<Rational>);

impl Poly {
    fn trim(mut c: Vec<Rational>) -> Poly {
        while c.last().is_some_and(Zero::is_zero) {
            c.pop();
        }
        Poly(c)
    }

    pub fn degree(&self) -> Option<usize> {
        self.0.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    fn lead(&self) -> &Rational {
        self.0.last().expect("nonzero polynomial")
    }

    fn derivative(&self) -> Poly {
        Poly::trim(
            self.0
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * int(i as i64))
                .collect(),
        )
    }

    fn sub(&self, other: &Poly) -> Poly {
        let n = self.0.len().max(other.0.len());
        Poly::trim(
            (0..n)
                .map(|i| {
                    let a = self.0.get(i).cloned().unwrap_or_else(Rational::zero);
                    let b = other.0.get(i).cloned().unwrap_or_else(Rational::zero);
                    a - b
                })
                .collect(),
        )
    }

    fn neg(&self) -> Poly {
        Poly(self.0.iter().map(|c| -c).collect())
    }

    /// Quotient and remainder.
    fn div_rem(&self, d: &Poly) -> (Poly, Poly) {
        let dd = d.degree().expect("division by zero polynomial");
        let mut r = self.0.clone();
        let mut q = vec![Rational::zero(); r.len().saturating_sub(dd).max(1)];
        while r.len() > dd && !r.is_empty() {
            let shift = r.len() - 1 - dd;
            let f = r.last().unwrap() / d.lead();
            for (i, c) in d.0.iter().enumerate() {
                r[shift + i] -= &f * c;
            }
            q[shift] = f;
            r.pop();
            while r.last().is_some_and(Zero::is_zero) {
                r.pop();
            }
        }
        (Poly::trim(q), Poly::trim(r))
    }

    fn monic(&self) -> Poly {
        let l = self.lead().clone();
        Poly(self.0.iter().map(|c| c / &l).collect())
    }

    fn gcd(a: &Poly, b: &Poly) -> Poly {
        let (mut a, mut b) = (a.clone(), b.clone());
        while !b.is_zero() {
            let r = a.div_rem(&b).1;
            a = b;
            b = r;
        }
        a.monic()
    }

    fn sign_at_zero(&self) -> i32 {
        self.0.first().map_or(0, gmspectral::rational::sign)
    }

    fn sign_at_infinity(&self, positive: bool) -> i32 {
        let s = gmspectral::rational::sign(self.lead());
        let odd = self.degree().unwrap() % 2 == 1;
        if !positive && odd {
            -s
        } else {
            s
        }
    }
}

/// `det(xI - A)` by Faddeev–LeVerrier.
pub fn char_poly(a: &[Vec<Rational>]) -> Poly {
    let n = a.len();
    let mul = |x: &[Vec<Rational>], y: &[Vec<Rational>]| -> Vec<Vec<Rational>> {
        (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| (0..n).fold(Rational::zero(), |s, k| s + &x[i][k] * &y[k][j]))
                    .collect()
            })
            .collect()
    };
    let mut coeffs = vec![Rational::zero(); n + 1];
    coeffs[n] = Rational::one();
    let mut m: Vec<Vec<Rational>> = vec![vec![Rational::zero(); n]; n];
    for k in 1..=n {
        let mut next = mul(a, &m);
        for (i, row) in next.iter_mut().enumerate() {
            row[i] += &coeffs[n - k + 1];
        }
        let am = mul(a, &next);
        let trace = (0..n).fold(Rational::zero(), |s, i| s + &am[i][i]);
        coeffs[n - k] = -trace / int(k as i64);
        m = next;
    }
    Poly::trim(coeffs)
}

/// Square-free factors `f = Π fᵢ^i`, returned as `(fᵢ, i)`.
fn yun(f: &Poly) -> Vec<(Poly, usize)> {
    let f = f.monic();
    let df = f.derivative();
    if df.is_zero() {
        return Vec::new();
    }
    let a0 = Poly::gcd(&f, &df);
    let mut b = f.div_rem(&a0).0;
    let c = df.div_rem(&a0).0;
    let mut d = c.sub(&b.derivative());
    let mut out = Vec::new();
    let mut i = 1;
    while b.degree() != Some(0) {
        let a = Poly::gcd(&b, &d);
        b = b.div_rem(&a).0;
        let c = d.div_rem(&a).0;
        d = c.sub(&b.derivative());
        if a.degree().unwrap() > 0 {
            out.push((a, i));
        }
        i += 1;
    }
    out
}

fn sturm_chain(p: &Poly) -> Vec<Poly> {
    let mut chain = vec![p.clone(), p.derivative()];
    loop {
        let n = chain.len();
        if chain[n - 1].is_zero() {
            chain.pop();
            return chain;
        }
        let r = chain[n - 2].div_rem(&chain[n - 1]).1.neg();
        chain.push(r);
    }
}

fn variations(signs: impl Iterator<Item = i32>) -> usize {
    let nonzero: Vec<i32> = signs.filter(|&s| s != 0).collect();
    nonzero.windows(2).filter(|w| w[0] != w[1]).count()
}

/// `(positive, zero, negative)` root counts with multiplicity.
pub fn sturm_inertia(a: &[Vec<Rational>]) -> (usize, usize, usize) {
    let p = char_poly(a);
    let zero = p.0.iter().take_while(|c| c.is_zero()).count();
    let q = Poly(p.0[zero..].to_vec());
    let (mut pos, mut neg) = (0, 0);
    for (factor, mult) in yun(&q) {
        let chain = sturm_chain(&factor);
        let at0 = variations(chain.iter().map(Poly::sign_at_zero));
        let at_pinf = variations(chain.iter().map(|c| c.sign_at_infinity(true)));
        let at_ninf = variations(chain.iter().map(|c| c.sign_at_infinity(false)));
        pos += (at0 - at_pinf) * mult;
        neg += (at_ninf - at0) * mult;
    }
    (pos, zero, neg)
}

// ------------------------------------------------------- weak singularity

/// Kernel basis by textbook Gauss–Jordan.
pub fn naive_kernel(a: &[Vec<Rational>]) -> Vec<Vec<Rational>> {
    let n = a.len();
    let mut m: Vec<Vec<Rational>> = a.to_vec();
    let mut pivots = Vec::new();
    let mut row = 0;
    for col in 0..n {
        let Some(p) = (row..n).find(|&r| !m[r][col].is_zero()) else {
            continue;
        };
        m.swap(row, p);
        let inv = Rational::one() / &m[row][col];
        for x in m[row].iter_mut() {
            *x *= &inv;
        }
        for r in 0..n {
            if r != row && !m[r][col].is_zero() {
                let f = m[r][col].clone();
                for c in 0..n {
                    let delta = &f * &m[row][c];
                    m[r][c] -= delta;
                }
            }
        }
        pivots.push(col);
        row += 1;
    }
    (0..n)
        .filter(|c| !pivots.contains(c))
        .map(|free| {
            let mut x = vec![Rational::zero(); n];
            x[free] = Rational::one();
            for (r, &pc) in pivots.iter().enumerate() {
                x[pc] = -&m[r][free];
            }
            x
        })
        .collect()
}

/// The kernel avoids every coordinate hyperplane.
pub fn naive_supersingular(a: &[Vec<Rational>]) -> bool {
    let k = naive_kernel(a);
    !a.is_empty() && (0..a.len()).all(|v| k.iter().any(|x| !x[v].is_zero()))
}

/// Some nonempty support `S` has supersingular `A[S, S]`; all `2ⁿ - 1`
/// supports are tried.
pub fn brute_weakly_singular(a: &[Vec<Rational>]) -> bool {
    let n = a.len();
    (1u32..(1 << n)).any(|mask| {
        let s: Vec<usize> = (0..n).filter(|&i| mask >> i & 1 == 1).collect();
        let sub: Vec<Vec<Rational>> = s
            .iter()
            .map(|&i| s.iter().map(|&j| a[i][j].clone()).collect())
            .collect();
        naive_supersingular(&sub)
    })
}

/// `x ≠ 0` and `(Ax)_v = 0` on the support of `x`.
pub fn is_weak_witness(a: &[Vec<Rational>], x: &[Rational]) -> bool {
    x.iter().any(|c| !c.is_zero())
        && (0..a.len()).all(|v| {
            x[v].is_zero()
                || (0..a.len())
                    .fold(Rational::zero(), |s, j| s + &a[v][j] * &x[j])
                    .is_zero()
        })
}

// ----------------------------------------------------------- generators

fn small_rational<R: Rng>(rng: &mut R, range: i64) -> Rational {
    let den = rng.gen_range(1..=4);
    ratio(rng.gen_range(-range * den..=range * den), den)
}

/// Random symmetric matrix, `n ≤ max_n`. A third of them are built as
/// `B D Bᵀ` with a short `B`, so zero eigenvalues show up often.
pub fn random_symmetric<R: Rng>(rng: &mut R, max_n: usize) -> Vec<Vec<Rational>> {
    let n = rng.gen_range(1..=max_n);
    if rng.gen_bool(1.0 / 3.0) {
        let k = rng.gen_range(0..n);
        let b: Vec<Vec<Rational>> = (0..n)
            .map(|_| (0..k).map(|_| small_rational(rng, 2)).collect())
            .collect();
        let d: Vec<Rational> = (0..k).map(|_| small_rational(rng, 2)).collect();
        return (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| (0..k).fold(Rational::zero(), |s, l| s + &b[i][l] * &d[l] * &b[j][l]))
                    .collect()
            })
            .collect();
    }
    let mut m = vec![vec![Rational::zero(); n]; n];
    for i in 0..n {
        for j in i..n {
            let x = if rng.gen_bool(0.3) {
                Rational::zero()
            } else {
                small_rational(rng, 3)
            };
            m[i][j] = x.clone();
            m[j][i] = x;
        }
    }
    m
}

/// Unit lower-triangular times a permutation, so always invertible.
pub fn random_invertible<R: Rng>(rng: &mut R, n: usize) -> Vec<Vec<Rational>> {
    let mut perm: Vec<usize> = (0..n).collect();
    for i in (1..n).rev() {
        perm.swap(i, rng.gen_range(0..=i));
    }
    (0..n)
        .map(|i| {
            (0..n)
                .map(|j| {
                    let r = perm[i];
                    if j == r {
                        Rational::one()
                    } else if j < r {
                        small_rational(rng, 2)
                    } else {
                        Rational::zero()
                    }
                })
                .collect()
        })
        .collect()
}

pub fn sym(m: Vec<Vec<Rational>>) -> SymRatMatrix {
    SymRatMatrix::from_rows(m).expect("symmetric")
}

/// Connected labeled graph: `|V| ≤ max_v`, charges with denominators at
/// most 4 in `[-2, 2]`, `1 ≤ |b| ≤ 3`, optional random `ρ`. About a
/// fifth of the charges are zero and some graphs have one sign only.
pub fn random_graph<R: Rng>(rng: &mut R, max_v: usize) -> LabeledGraph {
    let n = rng.gen_range(1..=max_v);
    let mut edges = Vec::new();
    for v in 1..n {
        edges.push(Edge::new(rng.gen_range(0..v), v, rng.gen_range(1..=3)));
    }
    for _ in 0..rng.gen_range(0..=3) {
        let (t, h) = (rng.gen_range(0..n), rng.gen_range(0..n));
        edges.push(Edge::new(t, h, rng.gen_range(1..=3)));
    }
    let mode = rng.gen_range(0..4);
    let charges = (0..n)
        .map(|_| {
            if rng.gen_bool(0.2) {
                return Rational::zero();
            }
            let den = rng.gen_range(1..=4);
            let q = ratio(rng.gen_range(-2 * den..=2 * den), den);
            match mode {
                0 => q.abs(),
                1 => -q.abs(),
                _ => q,
            }
        })
        .collect();
    let rho = rng.gen_bool(0.5).then(|| {
        Cocycle::new(
            (0..edges.len())
                .map(|_| if rng.gen_bool(0.5) { Sign::Plus } else { Sign::Minus })
                .collect(),
        )
    });
    LabeledGraph::new(charges, edges, rho).expect("endpoints in range")
}

pub fn malpha(m: [i64; 4]) -> LabeledGraph {
    gmspectral::malpha::build_malpha(&gmspectral::malpha::GluingMatrix::from_array(m).unwrap())
}
