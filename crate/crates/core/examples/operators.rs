//! Builds A⁺, every A_λ and every admissible H for a small graph with a
//! loop and a double edge, and prints their inertia.

use gmspectral::cohomology::CohomologyBasis;
use gmspectral::exactla::{inertia, SymRatMatrix};
use gmspectral::operators::{admissible_s_functions, build_a_lambda, build_a_plus, build_h, sign_components};
use gmspectral::rational::{self, int, ratio};
use gmspectral::{Edge, LabeledGraph};

fn show(name: &str, m: &SymRatMatrix) {
    let i = inertia(m);
    println!("{name}  inertia (+{}, 0:{}, -{})", i.positive, i.zero, i.negative);
    for row in m.to_rows() {
        let cells: Vec<String> = row.iter().map(|x| format!("{:>5}", rational::format(x))).collect();
        println!("    [{}]", cells.join(" "));
    }
}

fn main() -> gmspectral::Result<()> {
    let g = LabeledGraph::new(
        vec![int(1), ratio(-1, 2), int(0)],
        vec![
            Edge::new(0, 1, 1),
            Edge::new(0, 1, 2),
            Edge::new(1, 2, 3),
            Edge::new(2, 2, 1),
        ],
        None,
    )?;

    show("A+", &build_a_plus(&g)?);

    let basis = CohomologyBasis::new(&g)?;
    for (i, lambda) in basis.classes()?.enumerate() {
        show(&format!("A_lambda[{i}] minus on {:?}", lambda.minus_edges()), &build_a_lambda(&g, &lambda)?);
    }

    let d = sign_components(&g);
    println!("sign components: {:?} with signs {:?}", d.components(), d.signs());
    for s in admissible_s_functions(&d) {
        show(&format!("H[s = {:?}]", s.values()), &build_h(&g, &s)?);
    }
    Ok(())
}
