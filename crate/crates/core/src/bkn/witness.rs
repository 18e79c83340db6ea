//! Turning spectral data into solutions of the BKN equation.

use num_traits::{One, Signed, Zero};

use super::{residual, sign_product, BknSolution};
use crate::error::{Error, Result};
use crate::exactla::{inertia, RatMatrix, SymRatMatrix};
use crate::graph::{Cocycle, HalfEdge, LabeledGraph};
use crate::operators::{
    build_a_lambda, build_a_plus, build_h, sign_components, ComponentSign, SFunction,
    SignDecomposition,
};
use crate::rational::{self, Rational};

/// Which operator a kernel vector belongs to.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum KernelMode {
    /// `A⁺`; requires all charges of one sign. Gives a compatible solution.
    APlus,
    /// `H` for an admissible `s`. Gives a compatible symmetric solution.
    H(SFunction),
    /// `A_ρ`; requires `ρ` and a fully supported vector. Gives an
    /// F-shaped solution.
    ARho,
}

fn angles(g: &LabeledGraph, mut f: impl FnMut(HalfEdge) -> Rational) -> Vec<Rational> {
    g.half_edges().map(&mut f).collect()
}

fn abs_vec(x: &[Rational]) -> Vec<Rational> {
    x.iter().map(|v| v.abs()).collect()
}

fn check_vector(g: &LabeledGraph, x: &[Rational]) -> Result<()> {
    if x.len() != g.n_vertices() {
        return Err(Error::DimensionMismatch {
            expected: g.n_vertices(),
            got: x.len(),
        });
    }
    if x.iter().all(Zero::is_zero) {
        return Err(Error::Precondition("witness vector is zero".into()));
    }
    Ok(())
}

fn ensure_solves(g: &LabeledGraph, sol: BknSolution, why: &str) -> Result<BknSolution> {
    if residual(g, &sol)?.iter().all(Zero::is_zero) {
        Ok(sol)
    } else {
        Err(Error::Precondition(why.into()))
    }
}

/// Solution built from `x ∈ ker(operator)`: lengths `|x|`, angles carrying
/// the signs of `x` at both ends of each edge.
pub fn witness_from_kernel(
    g: &LabeledGraph,
    mode: &KernelMode,
    x: &[Rational],
) -> Result<BknSolution> {
    check_vector(g, x)?;
    let op = match mode {
        KernelMode::APlus => build_a_plus(g)?,
        KernelMode::H(s) => build_h(g, s)?,
        KernelMode::ARho => {
            let rho = g
                .rho()
                .ok_or_else(|| Error::Precondition("A_rho needs the form rho".into()))?;
            build_a_lambda(g, rho)?
        }
    };
    if !op.mul_vec(x)?.iter().all(Zero::is_zero) {
        return Err(Error::NotInKernel);
    }
    let gamma = match mode {
        KernelMode::APlus => {
            let has_pos = g.charges().iter().any(|k| k.is_positive());
            let has_neg = g.charges().iter().any(|k| k.is_negative());
            if has_pos && has_neg {
                return Err(Error::Precondition(
                    "A+ witness needs all charges of one sign".into(),
                ));
            }
            let sigma = if has_neg { -1 } else { 1 };
            angles(g, |w| {
                rational::from_sign(sigma * sign_product(x, g.tail(w), g.head(w)))
            })
        }
        KernelMode::H(s) => {
            let d = sign_components(g);
            angles(g, |w| {
                let (t, h) = (g.tail(w), g.head(w));
                if d.same_component(t, h) {
                    let su = i32::from(s.value(d.component_of(t)));
                    rational::from_sign(su * sign_product(x, t, h))
                } else {
                    Rational::zero()
                }
            })
        }
        KernelMode::ARho => {
            if x.iter().any(Zero::is_zero) {
                return Err(Error::Precondition(
                    "A_rho witness needs a fully supported vector".into(),
                ));
            }
            let rho = g.rho().unwrap();
            angles(g, |w| {
                let r = rho.value(w.edge()).value();
                rational::from_sign(r * sign_product(x, g.tail(w), g.head(w)))
            })
        }
    };
    ensure_solves(
        g,
        BknSolution::new(abs_vec(x), gamma),
        "kernel vector of H meets a component with s = 0 and nonzero charge",
    )
}

/// E-shaped solution from `x` with `(A_λ x)_v = 0` on the support of `x`:
/// `a = |x|`, `γ_w = λ_w sign(x_{w⁻} x_{w⁺})`.
pub fn witness_from_weak_singularity(
    g: &LabeledGraph,
    lambda: &Cocycle,
    x: &[Rational],
) -> Result<BknSolution> {
    check_vector(g, x)?;
    let ax = build_a_lambda(g, lambda)?.mul_vec(x)?;
    if x.iter().zip(&ax).any(|(xv, yv)| !xv.is_zero() && !yv.is_zero()) {
        return Err(Error::NotInKernel);
    }
    let gamma = angles(g, |w| {
        let l = lambda.value(w.edge()).value();
        rational::from_sign(l * sign_product(x, g.tail(w), g.head(w)))
    });
    ensure_solves(g, BknSolution::new(abs_vec(x), gamma), "internal: E witness")
}

/// Solution from the family `A⁺_t = D⁺ - tJ`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DeformationWitness {
    pub solution: BknSolution,
    /// The deformation parameter; `|γ_w| = t` on every edge.
    pub t: Rational,
    /// Exact upper bound on `max_v |r_v|`; zero when `exact`.
    pub residual_bound: Rational,
    pub exact: bool,
}

fn deformation_family(g: &LabeledGraph) -> Result<(Vec<Rational>, SymRatMatrix)> {
    let a_plus = build_a_plus(g)?;
    let d: Vec<Rational> = g.charges().iter().map(|k| k.abs()).collect();
    let n = g.n_vertices();
    let j = RatMatrix::from_fn(n, n, |r, c| {
        let diag = if r == c { d[r].clone() } else { Rational::zero() };
        diag - a_plus.get(r, c)
    });
    Ok((d, SymRatMatrix::new(j).expect("J is symmetric")))
}

fn family_at(d: &[Rational], j: &SymRatMatrix, t: &Rational) -> SymRatMatrix {
    let n = d.len();
    let m = RatMatrix::from_fn(n, n, |r, c| {
        let diag = if r == c { d[r].clone() } else { Rational::zero() };
        diag - t * j.get(r, c)
    });
    SymRatMatrix::new(m).expect("family is symmetric")
}

/// Positive length function with angles `t · sign(k_{w⁻})` from an
/// (approximate) kernel vector `x > 0` of `A⁺_t`.
fn deformation_solution(g: &LabeledGraph, x: Vec<Rational>, t: &Rational) -> BknSolution {
    let gamma = angles(g, |w| {
        let s = rational::sign(g.charge(g.tail(w))) * sign_product(&x, g.tail(w), g.head(w));
        t * rational::from_sign(s)
    });
    BknSolution::new(abs_vec(&x), gamma)
}

/// Bisects `t ∈ (0, 1)` on the exact inertia of `A⁺_t = D⁺ - tJ` to locate
/// the parameter where its smallest eigenvalue crosses zero.
///
/// For a connected graph with nonzero charges `A⁺_0 = D⁺` is positive
/// definite and the smallest eigenvalue is concave in `t`, so it has a
/// single zero `t₀` in `(0, 1)` once `A⁺` has a negative eigenvalue. If a
/// bisection point hits `t₀` exactly, the (positive, Perron) kernel vector
/// gives an exact solution. Otherwise two steps of inverse iteration at the
/// lower end of the final bracket, where `A⁺_t` is a positive definite
/// M-matrix with entrywise positive inverse, produce `x > 0` with
/// `‖x‖∞ = 1`; the residual is then bounded by `max |(A⁺_t x)_v|`.
///
/// Mixed charge signs are allowed; the angles then carry `sign(k_{w⁻})`
/// and are symmetric only on edges whose ends have equal charge sign.
pub fn deformation_witness(g: &LabeledGraph, tol: &Rational) -> Result<DeformationWitness> {
    g.require_decidable()?;
    if !tol.is_positive() {
        return Err(Error::Precondition("tolerance must be positive".into()));
    }
    if g.charges().iter().any(Zero::is_zero) {
        return Err(Error::Precondition(
            "deformation needs every charge nonzero".into(),
        ));
    }
    let (d, j) = deformation_family(g)?;
    if !inertia(&family_at(&d, &j, &Rational::one())).has_negative() {
        return Err(Error::Precondition(
            "deformation needs A+ with a negative eigenvalue".into(),
        ));
    }
    let two = rational::int(2);
    let (mut lo, mut hi) = (Rational::zero(), Rational::one());
    while &hi - &lo >= *tol {
        let mid = (&lo + &hi) / &two;
        let a = family_at(&d, &j, &mid);
        let inr = inertia(&a);
        if inr.is_singular() && !inr.has_negative() {
            let x = a.kernel_basis().swap_remove(0);
            let x = if x.iter().any(|v| v.is_negative()) {
                x.iter().map(|v| -v).collect()
            } else {
                x
            };
            let solution = deformation_solution(g, x, &mid);
            return Ok(DeformationWitness {
                solution,
                t: mid,
                residual_bound: Rational::zero(),
                exact: true,
            });
        }
        if inr.has_negative() || inr.is_singular() {
            hi = mid;
        } else {
            lo = mid;
        }
    }

    let a = family_at(&d, &j, &lo);
    let ones = vec![Rational::one(); g.n_vertices()];
    let y = a.as_matrix().solve(&ones)?.expect("positive definite");
    let y = a.as_matrix().solve(&y)?.expect("positive definite");
    let top = y.iter().max().cloned().expect("nonempty");
    let x: Vec<Rational> = y.iter().map(|v| v / &top).collect();
    let residual_bound = a
        .mul_vec(&x)?
        .into_iter()
        .map(|v| v.abs())
        .max()
        .unwrap_or_else(Rational::zero);
    let solution = deformation_solution(g, x, &lo);
    Ok(DeformationWitness {
        solution,
        t: lo,
        residual_bound,
        exact: false,
    })
}

/// A solution supported on a single sign component.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ComponentWitness {
    pub component: usize,
    pub solution: BknSolution,
    pub residual_bound: Rational,
    /// Deformation parameter, when one was used.
    pub t: Option<Rational>,
}

/// Compatible symmetric solution supported on the component `u`, when the
/// restriction of `A⁺` to `u` has a nonpositive eigenvalue (always the
/// case for a zero-charge vertex). `None` otherwise.
pub fn component_witness(
    g: &LabeledGraph,
    d: &SignDecomposition,
    u: usize,
    tol: &Rational,
) -> Result<Option<ComponentWitness>> {
    let vertices = &d.components()[u];
    if d.sign(u) == ComponentSign::Zero {
        return Ok(Some(ComponentWitness {
            component: u,
            solution: BknSolution::point(g, vertices[0]),
            residual_bound: Rational::zero(),
            t: None,
        }));
    }
    let (sub, kept) = g.induced_subgraph(vertices);
    let inr = inertia(&build_a_plus(&sub)?);
    let (local, bound, t) = if inr.is_singular() {
        let x = build_a_plus(&sub)?.kernel_basis().swap_remove(0);
        (
            witness_from_kernel(&sub, &KernelMode::APlus, &x)?,
            Rational::zero(),
            None,
        )
    } else if inr.has_negative() {
        let dw = deformation_witness(&sub, tol)?;
        (dw.solution, dw.residual_bound, Some(dw.t))
    } else {
        return Ok(None);
    };
    let mut a = vec![Rational::zero(); g.n_vertices()];
    for (i, &v) in vertices.iter().enumerate() {
        a[v] = local.a[i].clone();
    }
    let mut gamma = vec![Rational::zero(); g.n_half_edges()];
    for (jl, &e) in kept.iter().enumerate() {
        gamma[2 * e] = local.gamma[2 * jl].clone();
        gamma[2 * e + 1] = local.gamma[2 * jl + 1].clone();
    }
    Ok(Some(ComponentWitness {
        component: u,
        solution: BknSolution::new(a, gamma),
        residual_bound: bound,
        t,
    }))
}
