//! The BKN difference equation
//!
//! ```text
//! k_v a_v = Σ_{w ∈ ∂v} γ_w a_{w⁺} / |b_w|
//! ```
//!
//! with length function `a` on vertices and angle function `γ` on oriented
//! edges. Solutions are checked and classified exactly; the witness
//! constructors turn kernel vectors of the spectral operators into
//! solutions.

mod dipole;
mod symmetrized;
mod witness;

pub use dipole::{
    check_vertex_balance, dipole_decomposition, dipole_npc, half_edge_charges, Dipole, DipoleNpc,
    DipolePiece,
};
pub use symmetrized::{solve_lengths_given_angles, symmetrized_check, SymmetrizedReport};
pub use witness::{
    component_witness, deformation_witness, witness_from_kernel, witness_from_weak_singularity,
    ComponentWitness, DeformationWitness, KernelMode,
};

use num_traits::{One, Signed, Zero};
use serde::Serialize;
use serde_json::{json, Value};

use crate::cohomology::is_coboundary;
use crate::error::{Error, Result};
use crate::graph::{Cocycle, HalfEdge, LabeledGraph, Sign};
use crate::json::{rational_vec_from_value, rational_vec_to_value};
use crate::rational::{self, Rational};

/// A candidate solution; `gamma` is indexed by half-edge index, so
/// `gamma[2e]` is the forward orientation of edge `e` and `gamma[2e + 1]`
/// the reverse one.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BknSolution {
    pub a: Vec<Rational>,
    pub gamma: Vec<Rational>,
}

impl BknSolution {
    pub fn new(a: Vec<Rational>, gamma: Vec<Rational>) -> Self {
        BknSolution { a, gamma }
    }

    /// Symmetric angle function from one value per nonoriented edge.
    pub fn symmetric(a: Vec<Rational>, per_edge: &[Rational]) -> Self {
        let gamma = per_edge
            .iter()
            .flat_map(|g| [g.clone(), g.clone()])
            .collect();
        BknSolution { a, gamma }
    }

    /// `a ≡ 1`, `γ ≡ 0`.
    pub fn unit_lengths(g: &LabeledGraph) -> Self {
        BknSolution {
            a: vec![Rational::one(); g.n_vertices()],
            gamma: vec![Rational::zero(); g.n_half_edges()],
        }
    }

    /// Length concentrated at one vertex, zero angles.
    pub fn point(g: &LabeledGraph, v: usize) -> Self {
        let mut a = vec![Rational::zero(); g.n_vertices()];
        a[v] = Rational::one();
        BknSolution {
            a,
            gamma: vec![Rational::zero(); g.n_half_edges()],
        }
    }

    pub fn gamma_at(&self, w: HalfEdge) -> &Rational {
        &self.gamma[w.index()]
    }

    fn check_dims(&self, g: &LabeledGraph) -> Result<()> {
        if self.a.len() != g.n_vertices() {
            return Err(Error::DimensionMismatch {
                expected: g.n_vertices(),
                got: self.a.len(),
            });
        }
        if self.gamma.len() != g.n_half_edges() {
            return Err(Error::DimensionMismatch {
                expected: g.n_half_edges(),
                got: self.gamma.len(),
            });
        }
        Ok(())
    }

    pub fn to_value(&self) -> Value {
        json!({
            "a": rational_vec_to_value(&self.a),
            "gamma": rational_vec_to_value(&self.gamma),
        })
    }

    pub fn from_value(value: &Value) -> Result<Self> {
        let field = |name: &str| {
            value
                .get(name)
                .ok_or_else(|| Error::Schema(format!("solution lacks {name:?}")))
        };
        Ok(BknSolution {
            a: rational_vec_from_value(field("a")?)?,
            gamma: rational_vec_from_value(field("gamma")?)?,
        })
    }
}

/// `k_v a_v - Σ_{w∈∂v} γ_w a_{w⁺} / |b_w|` for every vertex.
pub fn residual(g: &LabeledGraph, sol: &BknSolution) -> Result<Vec<Rational>> {
    sol.check_dims(g)?;
    Ok((0..g.n_vertices())
        .map(|v| {
            let mut r = g.charge(v) * &sol.a[v];
            for &w in g.star(v) {
                let gw = sol.gamma_at(w);
                if !gw.is_zero() {
                    r -= gw * &sol.a[g.head(w)] / g.abs_index(w);
                }
            }
            r
        })
        .collect())
}

/// Largest `|r_v|` of the residual.
pub fn residual_norm(g: &LabeledGraph, sol: &BknSolution) -> Result<Rational> {
    Ok(residual(g, sol)?
        .into_iter()
        .map(|r| r.abs())
        .max()
        .unwrap_or_else(Rational::zero))
}

/// The three compatibility requirements on `(a, γ)` alone, without the
/// equation: `a ≥ 0, a ≢ 0`; `|γ| ≤ 1` with `γ_w = γ_{-w} = ±1` whenever
/// `|γ_w γ_{-w}| = 1`; vanishing angles around zero-length vertices.
pub fn compatibility_conditions(g: &LabeledGraph, sol: &BknSolution) -> Result<bool> {
    sol.check_dims(g)?;
    let one = Rational::one();
    if sol.a.iter().any(|x| x.is_negative()) || sol.a.iter().all(|x| x.is_zero()) {
        return Ok(false);
    }
    if sol.gamma.iter().any(|x| x.abs() > one) {
        return Ok(false);
    }
    for e in 0..g.n_edges() {
        let (f, r) = (&sol.gamma[2 * e], &sol.gamma[2 * e + 1]);
        if (f * r).abs() == one && f != r {
            return Ok(false);
        }
    }
    for v in (0..g.n_vertices()).filter(|&v| sol.a[v].is_zero()) {
        for &w in g.star(v) {
            if !sol.gamma_at(w).is_zero() || !sol.gamma_at(w.reverse()).is_zero() {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Exact classification of a candidate solution.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct SolutionClass {
    pub satisfies_equation: bool,
    /// Solves the equation and meets the compatibility conditions.
    pub compatible: bool,
    pub symmetric: bool,
    pub positive_length: bool,
    /// Compatible, symmetric, positive, and `|γ| < 1` everywhere.
    pub npc: bool,
    /// `γ_w = γ_{-w} = ±1` wherever `a_{w⁻} a_{w⁺} ≠ 0`.
    pub e_shaped: bool,
    /// `γ` takes values `±1`, is symmetric with `[γ] = ρ`, and `a > 0`;
    /// `None` when the graph carries no `ρ`.
    pub f_shaped: Option<bool>,
}

pub fn classify(g: &LabeledGraph, sol: &BknSolution) -> Result<SolutionClass> {
    let satisfies_equation = residual(g, sol)?.iter().all(Zero::is_zero);
    let compatible = satisfies_equation && compatibility_conditions(g, sol)?;
    let symmetric = (0..g.n_edges()).all(|e| sol.gamma[2 * e] == sol.gamma[2 * e + 1]);
    let positive_length = sol.a.iter().all(|x| x.is_positive());
    let one = Rational::one();
    let npc = compatible && symmetric && positive_length && sol.gamma.iter().all(|x| x.abs() < one);
    let e_shaped = (0..g.n_edges()).all(|e| {
        let edge = g.edge(e);
        if (&sol.a[edge.tail] * &sol.a[edge.head]).is_zero() {
            return true;
        }
        let (f, r) = (&sol.gamma[2 * e], &sol.gamma[2 * e + 1]);
        f == r && f.abs() == one
    });
    let f_shaped = g.rho().map(|rho| {
        positive_length
            && symmetric
            && sol.gamma.iter().all(|x| x.abs() == one)
            && is_coboundary(g, &angle_cocycle(g, sol).times(rho)).is_some()
    });
    Ok(SolutionClass {
        satisfies_equation,
        compatible,
        symmetric,
        positive_length,
        npc,
        e_shaped,
        f_shaped,
    })
}

/// Sign pattern of the forward angles; meaningful when `γ` is symmetric
/// with values `±1`.
fn angle_cocycle(g: &LabeledGraph, sol: &BknSolution) -> Cocycle {
    Cocycle::new(
        (0..g.n_edges())
            .map(|e| {
                if sol.gamma[2 * e].is_negative() {
                    Sign::Minus
                } else {
                    Sign::Plus
                }
            })
            .collect(),
    )
}

fn sign_product(x: &[Rational], w_tail: usize, w_head: usize) -> i32 {
    rational::sign(&x[w_tail]) * rational::sign(&x[w_head])
}
