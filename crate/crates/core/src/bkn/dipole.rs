//! Dipoles: two vertices joined by one edge. A positive-length solution
//! splits into one dipole per edge, the vertex charge being shared out
//! among its half-edges.

use num_traits::{One, Signed, Zero};

use super::BknSolution;
use crate::error::{Error, Result};
use crate::graph::{HalfEdge, LabeledGraph};
use crate::rational::{self, Rational};

/// Charges `k_w` (at `w⁻`) and `k_{-w}` (at `w⁺`), index `|b|`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Dipole {
    pub k_w: Rational,
    pub k_minus_w: Rational,
    pub b: u64,
}

impl Dipole {
    pub fn new(k_w: Rational, k_minus_w: Rational, b: u64) -> Self {
        Dipole { k_w, k_minus_w, b }
    }

    /// `k_w k_{-w} b²`
    pub fn product(&self) -> Rational {
        let b = rational::int(self.b as i64);
        &self.k_w * &self.k_minus_w * &b * &b
    }
}

/// NPC solutions of a dipole.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum DipoleNpc {
    /// Both charges zero: `γ = 0` and any positive lengths.
    Unconstrained,
    /// `γ² = k_w k_{-w} b²`, `γ` has the sign of the charges, and
    /// `(a_{w⁻} / a_{w⁺})² = k_{-w} / k_w`.
    Constrained {
        gamma_sq: Rational,
        ratio_sq: Rational,
        sign: i32,
    },
}

impl DipoleNpc {
    /// Rational interval of width below `tol` around `γ`, or `[0, 0]`
    /// for the unconstrained case.
    pub fn gamma_interval(&self, tol: &Rational) -> (Rational, Rational) {
        match self {
            DipoleNpc::Unconstrained => (Rational::zero(), Rational::zero()),
            DipoleNpc::Constrained { gamma_sq, sign, .. } => {
                let (lo, hi) = rational::sqrt_interval(gamma_sq, tol).expect("nonnegative");
                if *sign < 0 {
                    (-hi, -lo)
                } else {
                    (lo, hi)
                }
            }
        }
    }
}

/// The NPC solution set of a dipole: none for charges of opposite signs,
/// for exactly one zero charge, or for `k_w k_{-w} b² ≥ 1`.
pub fn dipole_npc(d: &Dipole) -> Option<DipoleNpc> {
    match (d.k_w.is_zero(), d.k_minus_w.is_zero()) {
        (true, true) => return Some(DipoleNpc::Unconstrained),
        (true, false) | (false, true) => return None,
        _ => {}
    }
    let p = d.product();
    if p.is_negative() || p >= Rational::one() {
        return None;
    }
    Some(DipoleNpc::Constrained {
        gamma_sq: p,
        ratio_sq: &d.k_minus_w / &d.k_w,
        sign: rational::sign(&d.k_w),
    })
}

/// One edge of a decomposed solution.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DipolePiece {
    pub edge: usize,
    pub dipole: Dipole,
    /// `(a_{w⁻}, a_{w⁺})` for the forward orientation `w`.
    pub lengths: (Rational, Rational),
    /// `(γ_w, γ_{-w})`.
    pub angles: (Rational, Rational),
}

impl DipolePiece {
    /// Residuals of the two dipole equations
    /// `k_w a_{w⁻} = γ_w a_{w⁺} / |b|` and its reverse.
    pub fn residual(&self) -> (Rational, Rational) {
        let b = rational::int(self.dipole.b as i64);
        let (a0, a1) = &self.lengths;
        let (g0, g1) = &self.angles;
        (
            &self.dipole.k_w * a0 - g0 * a1 / &b,
            &self.dipole.k_minus_w * a1 - g1 * a0 / &b,
        )
    }
}

/// Splits a positive-length solution into dipoles with charges
/// `k_w = γ_w a_{w⁺} / (|b_w| a_{w⁻})`.
pub fn dipole_decomposition(g: &LabeledGraph, sol: &BknSolution) -> Result<Vec<DipolePiece>> {
    sol.check_dims(g)?;
    if !sol.a.iter().all(|x| x.is_positive()) {
        return Err(Error::Precondition(
            "dipole decomposition needs positive lengths".into(),
        ));
    }
    let k = |w: HalfEdge| {
        sol.gamma_at(w) * &sol.a[g.head(w)] / (g.abs_index(w) * &sol.a[g.tail(w)])
    };
    Ok((0..g.n_edges())
        .map(|e| {
            let (f, r) = (HalfEdge::new(e, true), HalfEdge::new(e, false));
            DipolePiece {
                edge: e,
                dipole: Dipole::new(k(f), k(r), g.edge(e).index),
                lengths: (sol.a[g.tail(f)].clone(), sol.a[g.head(f)].clone()),
                angles: (sol.gamma_at(f).clone(), sol.gamma_at(r).clone()),
            }
        })
        .collect())
}

/// Half-edge charges of a decomposition, indexed like `γ`.
pub fn half_edge_charges(pieces: &[DipolePiece]) -> Vec<Rational> {
    pieces
        .iter()
        .flat_map(|p| [p.dipole.k_w.clone(), p.dipole.k_minus_w.clone()])
        .collect()
}

/// `Σ_{w∈∂v} k_w - k_v` for every vertex.
pub fn check_vertex_balance(g: &LabeledGraph, k_w: &[Rational]) -> Result<Vec<Rational>> {
    if k_w.len() != g.n_half_edges() {
        return Err(Error::DimensionMismatch {
            expected: g.n_half_edges(),
            got: k_w.len(),
        });
    }
    Ok((0..g.n_vertices())
        .map(|v| {
            g.star(v)
                .iter()
                .fold(-g.charge(v), |acc, w| acc + &k_w[w.index()])
        })
        .collect())
}
