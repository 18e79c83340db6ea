//! Turning kernel vectors into solutions of the BKN equation and checking
//! them exactly.

use gmspectral::bkn::{classify, residual, witness_from_kernel, witness_from_weak_singularity, KernelMode};
use gmspectral::cohomology::CohomologyBasis;
use gmspectral::exactla::{is_weakly_singular, DEFAULT_SUBSET_CAP};
use gmspectral::malpha::{build_malpha, GluingMatrix};
use gmspectral::operators::{admissible_s_functions, build_a_lambda, build_h, sign_components};
use gmspectral::rational;
use gmspectral::Rational;

fn fmt(v: &[Rational]) -> String {
    v.iter().map(rational::format).collect::<Vec<_>>().join(", ")
}

fn main() -> gmspectral::Result<()> {
    let g = build_malpha(&GluingMatrix::new(0, 1, 1, 1)?);

    // supersingular H: full-support kernel vector, symmetric solution
    let s = admissible_s_functions(&sign_components(&g)).remove(0);
    let h = build_h(&g, &s)?;
    let x = gmspectral::exactla::is_supersingular(&h).expect("H is supersingular");
    let sol = witness_from_kernel(&g, &KernelMode::H(s), &x)?;
    println!("H kernel x = ({})", fmt(&x));
    println!("    a = ({}), gamma = ({})", fmt(&sol.a), fmt(&sol.gamma));
    println!("    residual ({})", fmt(&residual(&g, &sol)?));
    println!("    {:?}", classify(&g, &sol)?);

    // weakly singular A_λ: E-shaped solution with angles ±1
    let lambda = CohomologyBasis::new(&g)?.representative(0)?;
    let a = build_a_lambda(&g, &lambda)?;
    let x = is_weakly_singular(&a, DEFAULT_SUBSET_CAP)?.expect("weakly singular");
    let sol = witness_from_weak_singularity(&g, &lambda, &x)?;
    println!("A_lambda weak witness x = ({})", fmt(&x));
    println!("    a = ({}), gamma = ({})", fmt(&sol.a), fmt(&sol.gamma));
    println!("    residual ({})", fmt(&residual(&g, &sol)?));
    println!("    e_shaped = {}", classify(&g, &sol)?.e_shaped);
    Ok(())
}
