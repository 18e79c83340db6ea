//! Reading a labeled graph from JSON, deciding it, and writing the report
//! back as JSON with exact `"p/q"` numbers.

use gmspectral::decide::{decide_all, DecideOptions};
use gmspectral::json::{labeled_graph_to_value, parse_labeled_graph};

const DOCUMENT: &str = r#"{
  "vertices": [
    {"id": 0, "charge": "1/2"},
    {"id": 1, "charge": "-3/4"},
    {"id": 2, "charge": "0"}
  ],
  "edges": [
    {"id": 0, "tail": 0, "head": 1, "b": 2},
    {"id": 1, "tail": 1, "head": 2, "b": -1},
    {"id": 2, "tail": 2, "head": 0, "b": 1}
  ]
}"#;

fn main() -> gmspectral::Result<()> {
    let g = parse_labeled_graph(DOCUMENT)?;
    println!("parsed: {} vertices, {} edges, rho {:?}", g.n_vertices(), g.n_edges(), g.rho().map(|r| r.minus_edges()));
    println!("{}", serde_json::to_string_pretty(&labeled_graph_to_value(&g)).unwrap());

    let report = decide_all(&g, &DecideOptions::default())?;
    println!("{}", serde_json::to_string_pretty(&report.to_value(&g, true, false, false)).unwrap());

    match parse_labeled_graph(r#"{"vertices": [{"id": 0, "charge": "1"}], "edges": [{"id": 0, "tail": 0, "head": 3, "b": 1}]}"#) {
        Ok(_) => unreachable!(),
        Err(e) => println!("rejected: {e}"),
    }
    Ok(())
}
