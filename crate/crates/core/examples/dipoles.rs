//! Dipoles: the NPC condition on a single edge and the decomposition of a
//! positive solution into dipoles that balance at every vertex.

use gmspectral::bkn::{
    check_vertex_balance, dipole_decomposition, dipole_npc, half_edge_charges, BknSolution, Dipole,
    DipoleNpc,
};
use gmspectral::rational::{self, int, ratio};
use gmspectral::{Edge, LabeledGraph};

fn main() -> gmspectral::Result<()> {
    let tol = ratio(1, 1_000_000);
    for (k1, k2, b) in [(ratio(1, 2), ratio(1, 2), 1), (ratio(1, 3), ratio(1, 2), 1), (int(0), int(0), 4), (int(1), int(-1), 2)] {
        let d = Dipole::new(k1.clone(), k2.clone(), b);
        let label = format!("k = ({}, {}), |b| = {b}", rational::format(&k1), rational::format(&k2));
        match dipole_npc(&d) {
            None => println!("{label}: no NPC solution"),
            Some(DipoleNpc::Unconstrained) => println!("{label}: every angle works"),
            Some(c @ DipoleNpc::Constrained { .. }) => {
                let (lo, hi) = c.gamma_interval(&tol);
                println!("{label}: gamma in [{:.6}, {:.6}]", rational::approx(&lo), rational::approx(&hi));
            }
        }
    }

    // a path with one loop, solved by hand: a ≡ 1, γ = 1/2
    let g = LabeledGraph::new(
        vec![ratio(1, 2), int(1), ratio(1, 2)],
        vec![Edge::new(0, 1, 1), Edge::new(1, 2, 1)],
        None,
    )?;
    let sol = BknSolution::symmetric(vec![int(1); 3], &[ratio(1, 2), ratio(1, 2)]);
    let pieces = dipole_decomposition(&g, &sol)?;
    for p in &pieces {
        println!(
            "edge {}: k_w = {}, k_-w = {}, residual ({}, {})",
            p.edge,
            rational::format(&p.dipole.k_w),
            rational::format(&p.dipole.k_minus_w),
            rational::format(&p.residual().0),
            rational::format(&p.residual().1)
        );
    }
    let defect = check_vertex_balance(&g, &half_edge_charges(&pieces))?;
    println!("vertex defects {:?}", defect.iter().map(rational::format).collect::<Vec<_>>());
    Ok(())
}
