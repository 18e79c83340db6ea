//! The family `M(α)`: a linear graph `v₁ - v₂ - v₃` determined by a gluing
//! matrix `α = [[a, b], [c, d]]` with `ad - bc = -1`, together with the
//! charge formula for framed Seifert blocks.

use num_integer::Integer;
use rand::Rng;

use crate::error::{Error, Result};
use crate::graph::{Cocycle, Edge, LabeledGraph};
use crate::rational::{self, Rational};

/// The five worked examples of the family, by name.
pub const EXAMPLE_MATRICES: [(&str, [i64; 4]); 5] = [
    ("no-property", [1, 1, 4, 3]),
    ("immersed-only", [-1, 1, 2, -1]),
    ("virtually-embedded", [-3, 2, -1, 1]),
    ("singular-h", [0, 1, 1, 2]),
    ("virtually-fibered", [0, 1, 1, 1]),
];

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct GluingMatrix {
    pub a: i64,
    pub b: i64,
    pub c: i64,
    pub d: i64,
}

impl GluingMatrix {
    pub fn new(a: i64, b: i64, c: i64, d: i64) -> Result<Self> {
        let det = a * d - b * c;
        if det != -1 {
            return Err(Error::BadDeterminant(det));
        }
        if b == 0 {
            return Err(Error::ZeroGluingB);
        }
        Ok(GluingMatrix { a, b, c, d })
    }

    pub fn from_array(m: [i64; 4]) -> Result<Self> {
        GluingMatrix::new(m[0], m[1], m[2], m[3])
    }

    /// Parses `"a,b,c,d"`.
    pub fn parse(text: &str) -> Result<Self> {
        let parts: Vec<i64> = text
            .split(',')
            .map(|p| {
                p.trim()
                    .parse()
                    .map_err(|_| Error::Schema(format!("bad matrix entry {p:?}")))
            })
            .collect::<Result<_>>()?;
        let m: [i64; 4] = parts
            .try_into()
            .map_err(|_| Error::Schema("matrix needs four entries a,b,c,d".into()))?;
        GluingMatrix::from_array(m)
    }

    /// Charges `(1, d/b, -a/b)`.
    pub fn charges(&self) -> [Rational; 3] {
        [
            rational::int(1),
            rational::ratio(self.d, self.b),
            rational::ratio(-self.a, self.b),
        ]
    }
}

/// The labeled graph of `M(α)`: indices `(1, |b|)`, trivial `ρ`.
pub fn build_malpha(m: &GluingMatrix) -> LabeledGraph {
    let edges = vec![Edge::new(0, 1, 1), Edge::new(1, 2, m.b.unsigned_abs())];
    LabeledGraph::new(m.charges().to_vec(), edges, Some(Cocycle::trivial(2)))
        .expect("three vertices, two edges")
}

/// `Σ d_w / b_w`.
pub fn charge_from_framing(terms: &[(i64, i64)]) -> Result<Rational> {
    terms
        .iter()
        .enumerate()
        .try_fold(rational::int(0), |acc, (i, &(b, d))| {
            if b == 0 {
                Err(Error::ZeroIndex(i))
            } else {
                Ok(acc + rational::ratio(d, b))
            }
        })
}

/// Random gluing matrix with `1 ≤ |b| ≤ bound` and `|a| ≤ bound`.
///
/// Picks `a` coprime to `b`, solves `ad - bc = -1` with the extended
/// Euclidean algorithm and shifts `(c, d)` by a random multiple of `(a, b)`.
pub fn sample_gluing<R: Rng + ?Sized>(rng: &mut R, bound: i64) -> GluingMatrix {
    let bound = bound.max(1);
    loop {
        let b = rng.gen_range(1..=bound) * if rng.gen_bool(0.5) { 1 } else { -1 };
        let a = rng.gen_range(-bound..=bound);
        let eg = a.extended_gcd(&b);
        if eg.gcd.abs() != 1 {
            continue;
        }
        // a x + b y = g = ±1, so a (-g x) - b (g y) = -1
        let (mut d, mut c) = (-eg.gcd * eg.x, eg.gcd * eg.y);
        let k = rng.gen_range(-2..=2);
        d += k * b;
        c += k * a;
        return GluingMatrix::new(a, b, c, d).expect("determinant is -1 by construction");
    }
}
