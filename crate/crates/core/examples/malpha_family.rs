//! The five worked members of the `M(α)` family and their seven verdicts.
//!
//! ```bash
//! cargo run --example malpha_family
//! ```

use gmspectral::decide::{decide_all, DecideOptions, Property};
use gmspectral::exactla::inertia;
use gmspectral::malpha::{build_malpha, GluingMatrix, EXAMPLE_MATRICES};
use gmspectral::operators::build_a_plus;
use gmspectral::rational;

fn main() -> gmspectral::Result<()> {
    print!("{:<20} {:>14}  A+ inertia ", "example", "charges");
    for p in Property::ALL {
        print!("{:>4}", p.name());
    }
    println!();
    for (name, m) in EXAMPLE_MATRICES {
        let g = build_malpha(&GluingMatrix::from_array(m)?);
        let report = decide_all(&g, &DecideOptions::default())?;
        let charges: Vec<String> = g.charges().iter().map(rational::format).collect();
        let i = inertia(&build_a_plus(&g.normalize_orientation().0)?);
        print!(
            "{name:<20} {:>14}  ({}, {}, {})  ",
            charges.join(" "),
            i.positive,
            i.zero,
            i.negative
        );
        for p in Property::ALL {
            let v = report.verdict(p).as_str();
            print!("{:>4}", &v[..v.len().min(3)]);
        }
        println!();
        assert!(report.is_consistent());
    }
    Ok(())
}
