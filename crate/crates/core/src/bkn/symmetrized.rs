//! Linear views of the equation: lengths for fixed angles, and the
//! symmetrized form `A = I(D)` through the vertex-edge incidence matrix.

use num_traits::{Signed, Zero};
use serde::Serialize;

use super::BknSolution;
use crate::error::{Error, Result};
use crate::exactla::RatMatrix;
use crate::graph::LabeledGraph;
use crate::rational::{self, Rational};

/// Basis of `{a : (a, γ) solves the equation}` for a fixed angle function.
pub fn solve_lengths_given_angles(g: &LabeledGraph, gamma: &[Rational]) -> Result<Vec<Vec<Rational>>> {
    if gamma.len() != g.n_half_edges() {
        return Err(Error::DimensionMismatch {
            expected: g.n_half_edges(),
            got: gamma.len(),
        });
    }
    let n = g.n_vertices();
    let mut m = RatMatrix::zeros(n, n);
    for v in 0..n {
        m.add_to(v, v, g.charge(v));
        for &w in g.star(v) {
            let term = -&gamma[w.index()] / g.abs_index(w);
            m.add_to(v, g.head(w), &term);
        }
    }
    Ok(m.kernel_basis())
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SymmetrizedReport {
    /// `A_v = Σ_e I_{v,e} D_e` holds for every vertex.
    pub holds: bool,
    pub incidence_rank: usize,
    /// `|V|` for non-bipartite Γ, `|V| - 1` for bipartite Γ.
    pub predicted_rank: usize,
    pub rank_matches: bool,
}

/// Checks `A = I(D)` with `A_v = k_v a_v²` and
/// `D_e = γ_w a_{w⁺} a_{w⁻} / |b_w|`, where `I` is the unsigned incidence
/// matrix (a loop meets its vertex twice).
pub fn symmetrized_check(g: &LabeledGraph, sol: &BknSolution) -> Result<SymmetrizedReport> {
    sol.check_dims(g)?;
    g.require_decidable()?;
    if (0..g.n_edges()).any(|e| sol.gamma[2 * e] != sol.gamma[2 * e + 1]) {
        return Err(Error::Precondition("solution must be symmetric".into()));
    }
    if !sol.a.iter().all(|x| x.is_positive()) {
        return Err(Error::Precondition(
            "solution must have positive lengths".into(),
        ));
    }
    let n = g.n_vertices();
    let mut incidence = RatMatrix::zeros(n, g.n_edges());
    let one = rational::int(1);
    let d: Vec<Rational> = g
        .edges()
        .iter()
        .enumerate()
        .map(|(e, edge)| {
            incidence.add_to(edge.tail, e, &one);
            incidence.add_to(edge.head, e, &one);
            &sol.gamma[2 * e] * &sol.a[edge.tail] * &sol.a[edge.head]
                / rational::int(edge.index as i64)
        })
        .collect();
    let id = incidence.mul_vec(&d)?;
    let holds = (0..n).all(|v| (g.charge(v) * &sol.a[v] * &sol.a[v] - &id[v]).is_zero());
    let incidence_rank = incidence.rank();
    let predicted_rank = if g.is_bipartite() { n - 1 } else { n };
    Ok(SymmetrizedReport {
        holds,
        incidence_rank,
        predicted_rank,
        rank_matches: incidence_rank == predicted_rank,
    })
}
