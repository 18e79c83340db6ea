//! Operator invariants of a labeled graph, all symmetric on ℚ^V.
//!
//! Every J-type sum runs over oriented edges, so a nonoriented edge between
//! distinct vertices fills both off-diagonal slots and a loop at `v` adds
//! `2/|b|` to the `(v, v)` entry of `J`.

use std::collections::VecDeque;

use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exactla::SymRatMatrix;
use crate::graph::{Cocycle, LabeledGraph};
use crate::rational::{self, Rational};

/// `(Jx, x) = Σ_{w ∈ W} weight(w) x_{w⁻} x_{w⁺} / |b_w|`, restricted to the
/// edges accepted by `keep`.
fn subtract_j(
    m: &mut SymRatMatrix,
    g: &LabeledGraph,
    weight: impl Fn(usize) -> i32,
    keep: impl Fn(usize) -> bool,
) {
    for (i, e) in g.edges().iter().enumerate() {
        if !keep(i) {
            continue;
        }
        let w = weight(i);
        let mut term = rational::ratio(-i64::from(w), e.index as i64);
        if e.is_loop() {
            term *= rational::int(2);
        }
        m.add_symmetric(e.tail, e.head, &term);
    }
}

fn diagonal(values: impl Iterator<Item = Rational>, n: usize) -> SymRatMatrix {
    let mut m = SymRatMatrix::zeros(n);
    for (v, k) in values.enumerate() {
        m.add_symmetric(v, v, &k);
    }
    m
}

/// `A⁺ = D⁺ - J`.
pub fn build_a_plus(g: &LabeledGraph) -> Result<SymRatMatrix> {
    g.require_decidable()?;
    let mut m = diagonal(g.charges().iter().map(|k| k.abs()), g.n_vertices());
    subtract_j(&mut m, g, |_| 1, |_| true);
    Ok(m)
}

/// `A_λ = D - J^λ`.
pub fn build_a_lambda(g: &LabeledGraph, lambda: &Cocycle) -> Result<SymRatMatrix> {
    g.require_decidable()?;
    if lambda.len() != g.n_edges() {
        return Err(Error::DimensionMismatch {
            expected: g.n_edges(),
            got: lambda.len(),
        });
    }
    let mut m = diagonal(g.charges().iter().cloned(), g.n_vertices());
    subtract_j(&mut m, g, |e| lambda.value(e).value(), |_| true);
    Ok(m)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum ComponentSign {
    Positive,
    Negative,
    Zero,
}

/// Partition of the vertices into sign components together with the graph
/// `G` obtained by contracting each component.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SignDecomposition {
    components: Vec<Vec<usize>>,
    component_of: Vec<usize>,
    signs: Vec<ComponentSign>,
    contracted_edges: Vec<usize>,
    g_edges: Vec<(usize, usize)>,
    colouring: Option<Vec<bool>>,
    g_components: Vec<Vec<usize>>,
}

impl SignDecomposition {
    /// Components ordered by their smallest vertex; vertices sorted.
    pub fn components(&self) -> &[Vec<usize>] {
        &self.components
    }

    /// The projection `p: V → U`.
    pub fn component_of(&self, v: usize) -> usize {
        self.component_of[v]
    }

    pub fn sign(&self, u: usize) -> ComponentSign {
        self.signs[u]
    }

    pub fn signs(&self) -> &[ComponentSign] {
        &self.signs
    }

    /// `E₀`: ids of the edges of Γ joining different components.
    pub fn contracted_edges(&self) -> &[usize] {
        &self.contracted_edges
    }

    /// Edges of `G` as pairs of component indices, parallel to
    /// [`contracted_edges`](Self::contracted_edges).
    pub fn g_edges(&self) -> &[(usize, usize)] {
        &self.g_edges
    }

    pub fn is_bipartite(&self) -> bool {
        self.colouring.is_some()
    }

    /// `U = U₀`
    pub fn all_zero(&self) -> bool {
        self.signs.iter().all(|&s| s == ComponentSign::Zero)
    }

    /// Connected components of `G`, as sorted lists of component indices.
    pub fn g_components(&self) -> &[Vec<usize>] {
        &self.g_components
    }

    /// Whether `v` and `v'` lie in the same sign component.
    pub fn same_component(&self, v: usize, w: usize) -> bool {
        self.component_of[v] == self.component_of[w]
    }
}

pub fn sign_components(g: &LabeledGraph) -> SignDecomposition {
    let n = g.n_vertices();
    let sign_of = |k: &Rational| {
        if k.is_zero() {
            ComponentSign::Zero
        } else if k.is_positive() {
            ComponentSign::Positive
        } else {
            ComponentSign::Negative
        }
    };
    let mut component_of = vec![usize::MAX; n];
    let mut components = Vec::new();
    let mut signs = Vec::new();
    for root in 0..n {
        if component_of[root] != usize::MAX {
            continue;
        }
        let id = components.len();
        let s = sign_of(g.charge(root));
        component_of[root] = id;
        let mut members = vec![root];
        if s != ComponentSign::Zero {
            let mut queue = VecDeque::from([root]);
            while let Some(v) = queue.pop_front() {
                for &w in g.star(v) {
                    let u = g.head(w);
                    if component_of[u] == usize::MAX && sign_of(g.charge(u)) == s {
                        component_of[u] = id;
                        members.push(u);
                        queue.push_back(u);
                    }
                }
            }
        }
        members.sort_unstable();
        components.push(members);
        signs.push(s);
    }

    let mut contracted_edges = Vec::new();
    let mut g_edges = Vec::new();
    for (i, e) in g.edges().iter().enumerate() {
        let (a, b) = (component_of[e.tail], component_of[e.head]);
        if a != b {
            contracted_edges.push(i);
            g_edges.push((a, b));
        }
    }

    let m = components.len();
    let mut adj = vec![Vec::new(); m];
    for &(a, b) in &g_edges {
        adj[a].push(b);
        adj[b].push(a);
    }
    let mut colour: Vec<Option<bool>> = vec![None; m];
    let mut bipartite = true;
    let mut g_components = Vec::new();
    for root in 0..m {
        if colour[root].is_some() {
            continue;
        }
        colour[root] = Some(false);
        let mut members = vec![root];
        let mut queue = VecDeque::from([root]);
        while let Some(u) = queue.pop_front() {
            let c = colour[u].unwrap();
            for &x in &adj[u] {
                match colour[x] {
                    None => {
                        colour[x] = Some(!c);
                        members.push(x);
                        queue.push_back(x);
                    }
                    Some(cx) if cx == c => bipartite = false,
                    Some(_) => {}
                }
            }
        }
        members.sort_unstable();
        g_components.push(members);
    }
    let colouring = bipartite.then(|| colour.into_iter().map(|c| c.unwrap()).collect());

    SignDecomposition {
        components,
        component_of,
        signs,
        contracted_edges,
        g_edges,
        colouring,
        g_components,
    }
}

/// The function `s: U → {0, ±1}`, indexed by component.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct SFunction(Vec<i8>);

impl SFunction {
    pub fn new(values: Vec<i8>) -> Self {
        SFunction(values)
    }

    pub fn values(&self) -> &[i8] {
        &self.0
    }

    pub fn value(&self, u: usize) -> i8 {
        self.0[u]
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&v| v == 0)
    }
}

/// Every admissible `s`, canonical one first.
///
/// When `G` is not bipartite or every component has zero charge the only
/// choice is `s ≡ 0`. Otherwise each connected component of `G` can be
/// oriented two ways; the canonical orientation puts the component of the
/// smallest positive vertex into `P`, and in the other parts of `G` the
/// component with the smallest vertex. The remaining choices follow in
/// binary order of the flipped parts, and only those with `P ∩ U₊ ≠ ∅`
/// are kept. The list is empty only for graphs whose charges are all
/// nonpositive and not all zero, i.e. graphs that are not normalized.
pub fn admissible_s_functions(d: &SignDecomposition) -> Vec<SFunction> {
    let m = d.components.len();
    let Some(colour) = d.colouring.as_ref().filter(|_| !d.all_zero()) else {
        return vec![SFunction(vec![0; m])];
    };
    let first_positive = (0..m).find(|&u| d.signs[u] == ComponentSign::Positive);
    let anchors: Vec<usize> = d
        .g_components
        .iter()
        .map(|part| {
            first_positive
                .filter(|u| part.contains(u))
                .unwrap_or(part[0])
        })
        .collect();
    let part_of: Vec<usize> = {
        let mut p = vec![0; m];
        for (i, part) in d.g_components.iter().enumerate() {
            for &u in part {
                p[u] = i;
            }
        }
        p
    };
    let parts = d.g_components.len();
    let mut out = Vec::new();
    for mask in 0u64..(1u64 << parts.min(63)) {
        let s: Vec<i8> = (0..m)
            .map(|u| {
                let i = part_of[u];
                let same_side = colour[u] == colour[anchors[i]];
                let flipped = mask >> i & 1 == 1;
                if same_side != flipped {
                    1
                } else {
                    -1
                }
            })
            .collect();
        if (0..m).any(|u| s[u] == 1 && d.signs[u] == ComponentSign::Positive) {
            out.push(SFunction(s));
        }
    }
    out
}

/// `H = ⊕_u (D_u - J_u)` where `(D_u x, x) = s(u) Σ_{v∈u} k_v x_v²` and
/// `J_u` only sees edges inside `u`.
pub fn build_h(g: &LabeledGraph, s: &SFunction) -> Result<SymRatMatrix> {
    g.require_decidable()?;
    let d = sign_components(g);
    if !admissible_s_functions(&d).contains(s) {
        return Err(Error::InadmissibleS);
    }
    Ok(build_h_unchecked(g, &d, s))
}

pub(crate) fn build_h_unchecked(
    g: &LabeledGraph,
    d: &SignDecomposition,
    s: &SFunction,
) -> SymRatMatrix {
    let diag = g
        .charges()
        .iter()
        .enumerate()
        .map(|(v, k)| k * rational::int(i64::from(s.value(d.component_of(v)))));
    let mut m = diagonal(diag, g.n_vertices());
    subtract_j(
        &mut m,
        g,
        |_| 1,
        |e| {
            let edge = g.edge(e);
            d.same_component(edge.tail, edge.head)
        },
    );
    m
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Edge;
    use crate::rational::{int, ratio};

    fn path(charges: Vec<Rational>, b: &[u64]) -> LabeledGraph {
        let edges = b
            .iter()
            .enumerate()
            .map(|(i, &bi)| Edge::new(i, i + 1, bi))
            .collect();
        LabeledGraph::new(charges, edges, None).unwrap()
    }

    fn sym(rows: Vec<Vec<Rational>>) -> SymRatMatrix {
        SymRatMatrix::from_rows(rows).unwrap()
    }

    #[test]
    fn a_plus_of_first_example() {
        let g = path(vec![int(1), int(3), int(-1)], &[1, 1]);
        let expect = sym(vec![
            vec![int(1), int(-1), int(0)],
            vec![int(-1), int(3), int(-1)],
            vec![int(0), int(-1), int(1)],
        ]);
        assert_eq!(build_a_plus(&g).unwrap(), expect);
    }

    #[test]
    fn loop_contributes_twice() {
        let g = LabeledGraph::new(vec![ratio(2, 3)], vec![Edge::new(0, 0, 3)], None).unwrap();
        assert_eq!(build_a_plus(&g).unwrap(), sym(vec![vec![int(0)]]));
    }

    #[test]
    fn a_lambda_trivial_class() {
        let g = path(vec![int(1), ratio(1, 2), ratio(3, 2)], &[1, 2]);
        let a = build_a_lambda(&g, &Cocycle::trivial(2)).unwrap();
        let expect = sym(vec![
            vec![int(1), int(-1), int(0)],
            vec![int(-1), ratio(1, 2), ratio(-1, 2)],
            vec![int(0), ratio(-1, 2), ratio(3, 2)],
        ]);
        assert_eq!(a, expect);
        assert_eq!(build_a_plus(&g).unwrap(), expect);
    }

    #[test]
    fn disconnected_rejected() {
        let g = LabeledGraph::new(vec![int(1), int(1)], vec![], None).unwrap();
        assert_eq!(build_a_plus(&g), Err(Error::Disconnected));
    }

    #[test]
    fn sign_component_examples() {
        let d = sign_components(&path(vec![int(1), int(2), int(0)], &[1, 1]));
        assert_eq!(d.components(), &[vec![0, 1], vec![2]]);
        assert_eq!(d.sign(1), ComponentSign::Zero);
        assert_eq!(d.contracted_edges(), &[1]);

        let d = sign_components(&path(vec![int(1), int(2), int(5)], &[1, 1]));
        assert_eq!(d.components().len(), 1);
        assert!(d.g_edges().is_empty());
        assert_eq!(admissible_s_functions(&d), vec![SFunction::new(vec![1])]);

        let d = sign_components(&path(vec![int(1), int(-1)], &[1]));
        assert_eq!(d.components().len(), 2);
        assert!(d.is_bipartite());
        assert_eq!(admissible_s_functions(&d), vec![SFunction::new(vec![1, -1])]);
    }

    #[test]
    fn s_function_examples() {
        let d = sign_components(&path(vec![int(0), int(0)], &[1]));
        assert_eq!(admissible_s_functions(&d), vec![SFunction::new(vec![0, 0])]);

        // positive next to zero: the flip leaves P without a positive component
        let d = sign_components(&path(vec![int(0), int(3)], &[1]));
        assert_eq!(admissible_s_functions(&d), vec![SFunction::new(vec![-1, 1])]);

        // positives on both sides of the bipartition: both orientations admissible
        let d = sign_components(&path(vec![int(1), int(0), int(0), int(1)], &[1, 1, 1]));
        assert_eq!(
            admissible_s_functions(&d),
            vec![
                SFunction::new(vec![1, -1, 1, -1]),
                SFunction::new(vec![-1, 1, -1, 1])
            ]
        );

        // odd cycle of components
        let tri = LabeledGraph::new(
            vec![int(1), int(0), int(-1)],
            vec![Edge::new(0, 1, 1), Edge::new(1, 2, 1), Edge::new(2, 0, 1)],
            None,
        )
        .unwrap();
        let d = sign_components(&tri);
        assert!(!d.is_bipartite());
        assert_eq!(admissible_s_functions(&d), vec![SFunction::new(vec![0, 0, 0])]);
    }

    #[test]
    fn h_examples() {
        let g = path(vec![int(1), int(2), int(0)], &[1, 1]);
        let s = admissible_s_functions(&sign_components(&g)).remove(0);
        let expect = sym(vec![
            vec![int(1), int(-1), int(0)],
            vec![int(-1), int(2), int(0)],
            vec![int(0), int(0), int(0)],
        ]);
        assert_eq!(build_h(&g, &s).unwrap(), expect);

        for b in 1..=3 {
            let g = LabeledGraph::new(vec![ratio(2, b)], vec![Edge::new(0, 0, b as u64)], None)
                .unwrap();
            let s = admissible_s_functions(&sign_components(&g)).remove(0);
            assert_eq!(s, SFunction::new(vec![1]));
            assert_eq!(build_h(&g, &s).unwrap(), SymRatMatrix::zeros(1));
        }

        assert_eq!(
            build_h(&g, &SFunction::new(vec![-1, 1])),
            Err(Error::InadmissibleS)
        );
    }

    #[test]
    fn zero_vertex_keeps_its_loop() {
        let g = LabeledGraph::new(
            vec![int(1), int(0)],
            vec![Edge::new(0, 1, 1), Edge::new(1, 1, 2)],
            None,
        )
        .unwrap();
        let s = admissible_s_functions(&sign_components(&g)).remove(0);
        let h = build_h(&g, &s).unwrap();
        assert_eq!(h.get(1, 1), &int(-1));
        assert_eq!(h.get(0, 1), &int(0));
    }
}
