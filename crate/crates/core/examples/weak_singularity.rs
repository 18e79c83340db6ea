//! Singular, weakly singular and supersingular matrices, with witnesses
//! checked by exact multiplication.

use gmspectral::exactla::{inertia, is_supersingular, is_weakly_singular, SymRatMatrix, DEFAULT_SUBSET_CAP};
use gmspectral::rational::{self, int};
use gmspectral::Rational;

fn fmt(v: &[Rational]) -> String {
    let parts: Vec<String> = v.iter().map(rational::format).collect();
    format!("({})", parts.join(", "))
}

fn main() -> gmspectral::Result<()> {
    let examples = [
        ("A_lambda, embedded example", vec![vec![1, -1, 0], vec![-1, 1, -1], vec![0, -1, 0]]),
        ("H, fibered example", vec![vec![1, -1, 0], vec![-1, 1, 0], vec![0, 0, 0]]),
        ("H, singular only", vec![vec![1, -1, 0], vec![-1, 2, 0], vec![0, 0, 0]]),
        ("identity", vec![vec![1, 0, 0], vec![0, 1, 0], vec![0, 0, 1]]),
    ];
    for (name, rows) in examples {
        let a = SymRatMatrix::from_rows(rows.into_iter().map(|r| r.into_iter().map(int).collect()).collect())?;
        let i = inertia(&a);
        println!("{name}: inertia ({}, {}, {}), det {}", i.positive, i.zero, i.negative, rational::format(&a.determinant()));
        match is_supersingular(&a) {
            Some(x) => println!("    supersingular, A x = 0 for x = {}", fmt(&x)),
            None => println!("    not supersingular"),
        }
        match is_weakly_singular(&a, DEFAULT_SUBSET_CAP)? {
            Some(x) => println!("    weakly singular: x = {}, A x = {}", fmt(&x), fmt(&a.mul_vec(&x)?)),
            None => println!("    not weakly singular"),
        }
    }
    Ok(())
}
