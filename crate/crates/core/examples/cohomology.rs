//! Z₂ cohomology of a graph with loops: a spanning tree, one class per
//! subset of non-tree edges, and reduction of an arbitrary cocycle to its
//! class.

use gmspectral::cohomology::{form_rho_from_signs, is_coboundary, CohomologyBasis};
use gmspectral::rational::int;
use gmspectral::{Cocycle, Edge, LabeledGraph, Sign};

fn main() -> gmspectral::Result<()> {
    // a triangle with a loop on vertex 2
    let g = LabeledGraph::new(
        vec![int(1); 3],
        vec![Edge::new(0, 1, 1), Edge::new(1, 2, 1), Edge::new(2, 0, 1), Edge::new(2, 2, 1)],
        None,
    )?;
    let basis = CohomologyBasis::new(&g)?;
    println!(
        "edges {}, cyclomatic number {}, classes {}",
        g.n_edges(),
        basis.cyclomatic(),
        basis.class_count()?
    );
    println!("non-tree edges {:?}", basis.non_tree_edges());

    let flip_vertex_1 = Cocycle::coboundary(&g, &[Sign::Plus, Sign::Minus, Sign::Plus]);
    println!(
        "coboundary of a sign flip at v1: minus on {:?}, class {}",
        flip_vertex_1.minus_edges(),
        basis.class_index(&g, &flip_vertex_1)
    );
    println!("recovered potential {:?}", is_coboundary(&g, &flip_vertex_1));

    for lambda in basis.classes()? {
        let moved = lambda.times(&flip_vertex_1);
        println!(
            "class {} minus on {:?}; shifted representative minus on {:?} has class {}",
            basis.class_index(&g, &lambda),
            lambda.minus_edges(),
            moved.minus_edges(),
            basis.class_index(&g, &moved)
        );
    }

    // signed intersection indices carry ρ in their sign
    let (rho, b) = form_rho_from_signs(&[2, -1, 3])?;
    println!("indices (2, -1, 3) -> |b| = {b:?}, rho minus on {:?}", rho.minus_edges());
    Ok(())
}
