//! When A⁺ has a negative eigenvalue the kernel of `D⁺ - tJ` at the
//! crossing `t₀` gives a solution; `t₀` is usually irrational, so the
//! witness comes with an exact residual bound.

use gmspectral::bkn::{classify, deformation_witness, residual_norm};
use gmspectral::rational::{self, int, ratio};
use gmspectral::{Edge, LabeledGraph};

fn main() -> gmspectral::Result<()> {
    let cases = [
        ("dipole, exact crossing", vec![ratio(1, 2), ratio(1, 2)], vec![Edge::new(0, 1, 1)]),
        ("dipole, irrational crossing", vec![ratio(1, 3), ratio(1, 2)], vec![Edge::new(0, 1, 1)]),
        ("path", vec![int(1); 3], vec![Edge::new(0, 1, 1), Edge::new(1, 2, 1)]),
    ];
    for tol in [ratio(1, 100), ratio(1, 1 << 20)] {
        println!("tolerance {}", rational::format(&tol));
        for (name, charges, edges) in &cases {
            let g = LabeledGraph::new(charges.clone(), edges.clone(), None)?;
            let w = deformation_witness(&g, &tol)?;
            let c = classify(&g, &w.solution)?;
            println!(
                "    {name:<28} t = {:.8}  exact {:<5} bound {:.3e}  measured {:.3e}  symmetric positive {}",
                rational::approx(&w.t),
                w.exact,
                rational::approx(&w.residual_bound),
                rational::approx(&residual_norm(&g, &w.solution)?),
                c.symmetric && c.positive_length,
            );
        }
    }
    Ok(())
}
