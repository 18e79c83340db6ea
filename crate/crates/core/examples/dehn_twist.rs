//! Mapping tori of Dehn twists: one vertex, one loop, charge `2/|b|`.
//! Here H is the zero 1×1 matrix while s is nonzero, and the manifold has
//! no NPC metric.

use gmspectral::decide::{decide_all, DecideOptions, Property};
use gmspectral::operators::{admissible_s_functions, build_h, sign_components};
use gmspectral::rational::{self, ratio};
use gmspectral::{Edge, LabeledGraph};

fn main() -> gmspectral::Result<()> {
    for b in 1..=3u64 {
        let g = LabeledGraph::new(vec![ratio(2, b as i64)], vec![Edge::new(0, 0, b)], None)?;
        let s = admissible_s_functions(&sign_components(&g)).remove(0);
        let h = build_h(&g, &s)?;
        let report = decide_all(&g, &DecideOptions::default())?;
        println!(
            "|b| = {b}: charge {}, s = {:?}, H = [[{}]], I {}, VE {}, VF {}, NPC {}",
            rational::format(g.charge(0)),
            s.values(),
            rational::format(h.get(0, 0)),
            report.verdict(Property::I),
            report.verdict(Property::VE),
            report.verdict(Property::VF),
            report.verdict(Property::NPC),
        );
        for note in report.notes() {
            println!("    note: {note}");
        }
    }
    Ok(())
}
