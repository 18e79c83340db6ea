//! JSON form of a labeled graph.
//!
//! ```json
//! {
//!   "vertices": [{"id": 0, "charge": "2/3"}, {"id": 1, "charge": -1}],
//!   "edges": [{"id": 0, "tail": 0, "head": 1, "b": -2, "rho": -1}],
//!   "rho": [0]
//! }
//! ```
//!
//! * vertex ids must be exactly `0..n`, in any order;
//! * edge ids must be distinct; edges are stored sorted by id;
//! * `charge` is an integer or a `"p/q"` string;
//! * `b` is a nonzero integer; its sign contributes to `ρ`;
//! * an edge-level `"rho": ±1` overrides the sign of `b` for that edge;
//! * a top-level `"rho"` lists the ids of the edges where `ρ = -1`.
//!
//! `ρ` is present when any `b` is negative or any `rho` key appears. The
//! top-level list must agree with the per-edge values it covers.

use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::graph::{Cocycle, Edge, LabeledGraph, Sign};
use crate::rational::{self, Rational};

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct GraphDoc {
    #[serde(default)]
    #[allow(dead_code)]
    name: Option<String>,
    vertices: Vec<VertexDoc>,
    edges: Vec<EdgeDoc>,
    #[serde(default)]
    rho: Option<Vec<usize>>,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct VertexDoc {
    id: usize,
    charge: ChargeDoc,
}

#[derive(Debug, Deserialize, Serialize)]
#[serde(untagged)]
enum ChargeDoc {
    Int(i64),
    Text(String),
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct EdgeDoc {
    id: usize,
    tail: usize,
    head: usize,
    b: i64,
    #[serde(default)]
    rho: Option<i32>,
}

pub fn parse_labeled_graph(document: &str) -> Result<LabeledGraph> {
    let doc: GraphDoc =
        serde_json::from_str(document).map_err(|e| Error::Schema(e.to_string()))?;
    from_doc(doc)
}

pub fn labeled_graph_from_value(value: Value) -> Result<LabeledGraph> {
    let doc: GraphDoc = serde_json::from_value(value).map_err(|e| Error::Schema(e.to_string()))?;
    from_doc(doc)
}

fn from_doc(doc: GraphDoc) -> Result<LabeledGraph> {
    let n = doc.vertices.len();
    let mut charges: Vec<Option<Rational>> = vec![None; n];
    for v in doc.vertices {
        if v.id >= n {
            return Err(Error::Schema(format!(
                "vertex id {} out of range 0..{n}",
                v.id
            )));
        }
        if charges[v.id].is_some() {
            return Err(Error::Schema(format!("duplicate vertex id {}", v.id)));
        }
        charges[v.id] = Some(match v.charge {
            ChargeDoc::Int(k) => rational::int(k),
            ChargeDoc::Text(s) => rational::parse(&s)?,
        });
    }
    let charges: Vec<Rational> = charges.into_iter().map(|c| c.unwrap()).collect();

    let mut edges = doc.edges;
    edges.sort_by_key(|e| e.id);
    if let Some(w) = edges.windows(2).find(|w| w[0].id == w[1].id) {
        return Err(Error::Schema(format!("duplicate edge id {}", w[0].id)));
    }
    let position = |id: usize| edges.iter().position(|e| e.id == id);

    let mut rho: Vec<Option<Sign>> = vec![None; edges.len()];
    let mut rho_given = false;
    let mut assign = |slot: &mut Option<Sign>, s: Sign, id: usize| -> Result<()> {
        rho_given = true;
        match *slot {
            Some(prev) if prev != s => Err(Error::Schema(format!(
                "conflicting rho values on edge {id}"
            ))),
            _ => {
                *slot = Some(s);
                Ok(())
            }
        }
    };
    for (i, e) in edges.iter().enumerate() {
        if e.b == 0 {
            return Err(Error::ZeroIndex(e.id));
        }
        if let Some(r) = e.rho {
            let s = Sign::from_value(r)
                .ok_or_else(|| Error::Schema(format!("edge {}: rho must be 1 or -1", e.id)))?;
            assign(&mut rho[i], s, e.id)?;
        } else if e.b < 0 {
            assign(&mut rho[i], Sign::Minus, e.id)?;
        }
    }
    if let Some(minus) = &doc.rho {
        let mut flagged = vec![false; edges.len()];
        for &id in minus {
            let i = position(id)
                .ok_or_else(|| Error::Schema(format!("rho lists unknown edge id {id}")))?;
            flagged[i] = true;
        }
        for (i, slot) in rho.iter_mut().enumerate() {
            let s = if flagged[i] { Sign::Minus } else { Sign::Plus };
            assign(slot, s, edges[i].id)?;
        }
    }

    let structural: Vec<Edge> = edges
        .iter()
        .map(|e| Edge::new(e.tail, e.head, e.b.unsigned_abs()))
        .collect();
    let cocycle = rho_given.then(|| {
        Cocycle::new(rho.into_iter().map(|s| s.unwrap_or(Sign::Plus)).collect())
    });
    LabeledGraph::new(charges, structural, cocycle).map_err(|err| match err {
        Error::DanglingEndpoint { edge, vertex, n } => Error::DanglingEndpoint {
            edge: edges[edge].id,
            vertex,
            n,
        },
        other => other,
    })
}

/// Canonical JSON form; `b` is written as `|b|` and `ρ` per edge when present.
pub fn labeled_graph_to_value(g: &LabeledGraph) -> Value {
    let vertices: Vec<Value> = g
        .charges()
        .iter()
        .enumerate()
        .map(|(i, k)| json!({"id": i, "charge": rational::format(k)}))
        .collect();
    let edges: Vec<Value> = g
        .edges()
        .iter()
        .enumerate()
        .map(|(i, e)| {
            let mut obj = json!({"id": i, "tail": e.tail, "head": e.head, "b": e.index});
            if let Some(r) = g.rho() {
                obj["rho"] = json!(r.value(i).value());
            }
            obj
        })
        .collect();
    json!({"vertices": vertices, "edges": edges})
}

pub fn rational_vec_to_value(values: &[Rational]) -> Value {
    Value::Array(
        values
            .iter()
            .map(|q| Value::String(rational::format(q)))
            .collect(),
    )
}

pub fn rational_vec_from_value(value: &Value) -> Result<Vec<Rational>> {
    let arr = value
        .as_array()
        .ok_or_else(|| Error::Schema("expected an array of rationals".into()))?;
    arr.iter()
        .map(|v| match v {
            Value::String(s) => rational::parse(s),
            Value::Number(n) => n
                .as_i64()
                .map(rational::int)
                .ok_or_else(|| Error::MalformedRational(n.to_string())),
            other => Err(Error::MalformedRational(other.to_string())),
        })
        .collect()
}
