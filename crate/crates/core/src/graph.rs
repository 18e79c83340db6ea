//! Labeled multigraphs: vertices carry rational charges, nonoriented edges
//! carry a positive intersection index, and an optional Z₂ cocycle records
//! the form of intersection indices.
//!
//! Every nonoriented edge `e` is stored once and exposes two oriented
//! half-edges, `2e` (tail → head) and `2e + 1` (head → tail). A loop at `v`
//! therefore appears twice in the star of `v`, once per orientation.

use std::collections::VecDeque;
use std::fmt;
use std::ops::Mul;

use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::rational::Rational;

/// An oriented edge `w`; `w.reverse()` is `-w`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct HalfEdge(usize);

impl HalfEdge {
    pub fn new(edge: usize, forward: bool) -> Self {
        HalfEdge(2 * edge + usize::from(!forward))
    }

    pub fn from_index(index: usize) -> Self {
        HalfEdge(index)
    }

    pub fn index(self) -> usize {
        self.0
    }

    pub fn edge(self) -> usize {
        self.0 / 2
    }

    pub fn is_forward(self) -> bool {
        self.0 % 2 == 0
    }

    pub fn reverse(self) -> Self {
        HalfEdge(self.0 ^ 1)
    }
}

/// Element of Z₂ written multiplicatively.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    pub fn value(self) -> i32 {
        match self {
            Sign::Plus => 1,
            Sign::Minus => -1,
        }
    }

    pub fn from_value(v: i32) -> Option<Self> {
        match v {
            1 => Some(Sign::Plus),
            -1 => Some(Sign::Minus),
            _ => None,
        }
    }

    pub fn to_rational(self) -> Rational {
        crate::rational::int(self.value() as i64)
    }
}

impl Mul for Sign {
    type Output = Sign;

    fn mul(self, rhs: Sign) -> Sign {
        if self == rhs {
            Sign::Plus
        } else {
            Sign::Minus
        }
    }
}

/// Symmetric Z₂-valued function on the nonoriented edges.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Cocycle(Vec<Sign>);

impl Cocycle {
    pub fn new(values: Vec<Sign>) -> Self {
        Cocycle(values)
    }

    pub fn trivial(n_edges: usize) -> Self {
        Cocycle(vec![Sign::Plus; n_edges])
    }

    /// The all-`-1` cocycle.
    pub fn negative(n_edges: usize) -> Self {
        Cocycle(vec![Sign::Minus; n_edges])
    }

    pub fn from_minus_edges(n_edges: usize, minus: &[usize]) -> Self {
        let mut values = vec![Sign::Plus; n_edges];
        for &e in minus {
            values[e] = Sign::Minus;
        }
        Cocycle(values)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn value(&self, edge: usize) -> Sign {
        self.0[edge]
    }

    pub fn values(&self) -> &[Sign] {
        &self.0
    }

    pub fn is_trivial(&self) -> bool {
        self.0.iter().all(|&s| s == Sign::Plus)
    }

    pub fn minus_edges(&self) -> Vec<usize> {
        (0..self.0.len())
            .filter(|&e| self.0[e] == Sign::Minus)
            .collect()
    }

    pub fn times(&self, other: &Cocycle) -> Cocycle {
        Cocycle(self.0.iter().zip(&other.0).map(|(&a, &b)| a * b).collect())
    }

    /// The coboundary `σ_w = ε_{w⁻} ε_{w⁺}` of a vertex potential.
    pub fn coboundary(g: &LabeledGraph, potential: &[Sign]) -> Cocycle {
        Cocycle(
            g.edges()
                .iter()
                .map(|e| potential[e.tail] * potential[e.head])
                .collect(),
        )
    }
}

/// A nonoriented edge. `index` is the absolute intersection index `|b|`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Edge {
    pub tail: usize,
    pub head: usize,
    pub index: u64,
}

impl Edge {
    pub fn new(tail: usize, head: usize, index: u64) -> Self {
        Edge { tail, head, index }
    }

    pub fn is_loop(&self) -> bool {
        self.tail == self.head
    }
}

/// Structural problem reported by [`LabeledGraph::validate`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Diagnostic {
    Empty,
    Disconnected,
    ZeroIndex { edge: usize },
}

impl fmt::Display for Diagnostic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Diagnostic::Empty => write!(f, "graph has no vertices"),
            Diagnostic::Disconnected => write!(f, "graph not connected"),
            Diagnostic::ZeroIndex { edge } => write!(f, "edge {edge}: intersection index must be nonzero"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LabeledGraph {
    charges: Vec<Rational>,
    edges: Vec<Edge>,
    rho: Option<Cocycle>,
    star: Vec<Vec<HalfEdge>>,
}

impl LabeledGraph {
    /// Builds a labeled graph. Only structural errors (dangling endpoints,
    /// a cocycle of the wrong length) are rejected here; everything else is
    /// reported by [`validate`](Self::validate).
    pub fn new(charges: Vec<Rational>, edges: Vec<Edge>, rho: Option<Cocycle>) -> Result<Self> {
        let n = charges.len();
        for (i, e) in edges.iter().enumerate() {
            for vertex in [e.tail, e.head] {
                if vertex >= n {
                    return Err(Error::DanglingEndpoint { edge: i, vertex, n });
                }
            }
        }
        if let Some(r) = &rho {
            if r.len() != edges.len() {
                return Err(Error::DimensionMismatch {
                    expected: edges.len(),
                    got: r.len(),
                });
            }
        }
        let mut star = vec![Vec::new(); n];
        for (i, e) in edges.iter().enumerate() {
            star[e.tail].push(HalfEdge::new(i, true));
            star[e.head].push(HalfEdge::new(i, false));
        }
        for s in &mut star {
            s.sort();
        }
        Ok(LabeledGraph {
            charges,
            edges,
            rho,
            star,
        })
    }

    pub fn n_vertices(&self) -> usize {
        self.charges.len()
    }

    pub fn n_edges(&self) -> usize {
        self.edges.len()
    }

    pub fn charges(&self) -> &[Rational] {
        &self.charges
    }

    pub fn charge(&self, v: usize) -> &Rational {
        &self.charges[v]
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn edge(&self, e: usize) -> &Edge {
        &self.edges[e]
    }

    pub fn rho(&self) -> Option<&Cocycle> {
        self.rho.as_ref()
    }

    pub fn with_rho(mut self, rho: Option<Cocycle>) -> Result<Self> {
        if let Some(r) = &rho {
            if r.len() != self.edges.len() {
                return Err(Error::DimensionMismatch {
                    expected: self.edges.len(),
                    got: r.len(),
                });
            }
        }
        self.rho = rho;
        Ok(self)
    }

    pub fn with_charges(&self, charges: Vec<Rational>) -> Result<Self> {
        if charges.len() != self.n_vertices() {
            return Err(Error::DimensionMismatch {
                expected: self.n_vertices(),
                got: charges.len(),
            });
        }
        LabeledGraph::new(charges, self.edges.clone(), self.rho.clone())
    }

    /// Subgraph spanned by `vertices` (sorted, distinct) and the edges with
    /// both ends among them. Returns it together with the original id of
    /// each kept edge; vertex `i` of the subgraph is `vertices[i]`.
    pub fn induced_subgraph(&self, vertices: &[usize]) -> (LabeledGraph, Vec<usize>) {
        let mut local = vec![usize::MAX; self.n_vertices()];
        for (i, &v) in vertices.iter().enumerate() {
            local[v] = i;
        }
        let kept: Vec<usize> = (0..self.n_edges())
            .filter(|&e| {
                let edge = &self.edges[e];
                local[edge.tail] != usize::MAX && local[edge.head] != usize::MAX
            })
            .collect();
        let edges = kept
            .iter()
            .map(|&e| {
                let edge = &self.edges[e];
                Edge::new(local[edge.tail], local[edge.head], edge.index)
            })
            .collect();
        let rho = self
            .rho
            .as_ref()
            .map(|r| Cocycle::new(kept.iter().map(|&e| r.value(e)).collect()));
        let charges = vertices.iter().map(|&v| self.charges[v].clone()).collect();
        let sub = LabeledGraph::new(charges, edges, rho).expect("induced subgraph is well formed");
        (sub, kept)
    }

    pub fn n_half_edges(&self) -> usize {
        2 * self.edges.len()
    }

    pub fn half_edges(&self) -> impl Iterator<Item = HalfEdge> {
        (0..self.n_half_edges()).map(HalfEdge::from_index)
    }

    /// `w⁻`
    pub fn tail(&self, w: HalfEdge) -> usize {
        let e = &self.edges[w.edge()];
        if w.is_forward() {
            e.tail
        } else {
            e.head
        }
    }

    /// `w⁺`
    pub fn head(&self, w: HalfEdge) -> usize {
        self.tail(w.reverse())
    }

    /// `|b_w|` as a rational.
    pub fn abs_index(&self, w: HalfEdge) -> Rational {
        crate::rational::int(self.edges[w.edge()].index as i64)
    }

    /// `∂v`: half-edges leaving `v`; loops are listed once per orientation.
    pub fn star(&self, v: usize) -> &[HalfEdge] {
        &self.star[v]
    }

    /// Connected components as sorted vertex lists, ordered by smallest vertex.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let n = self.n_vertices();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for root in 0..n {
            if seen[root] {
                continue;
            }
            seen[root] = true;
            let mut comp = vec![root];
            let mut queue = VecDeque::from([root]);
            while let Some(v) = queue.pop_front() {
                for &w in self.star(v) {
                    let u = self.head(w);
                    if !seen[u] {
                        seen[u] = true;
                        comp.push(u);
                        queue.push_back(u);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.n_vertices() > 0 && self.components().len() == 1
    }

    /// Proper two-colouring of the vertices, or `None` when an odd cycle
    /// (a loop included) exists.
    pub fn bipartition(&self) -> Option<Vec<bool>> {
        let n = self.n_vertices();
        let mut colour: Vec<Option<bool>> = vec![None; n];
        for root in 0..n {
            if colour[root].is_some() {
                continue;
            }
            colour[root] = Some(false);
            let mut queue = VecDeque::from([root]);
            while let Some(v) = queue.pop_front() {
                let c = colour[v].unwrap();
                for &w in self.star(v) {
                    let u = self.head(w);
                    match colour[u] {
                        None => {
                            colour[u] = Some(!c);
                            queue.push_back(u);
                        }
                        Some(cu) if cu == c => return None,
                        Some(_) => {}
                    }
                }
            }
        }
        Some(colour.into_iter().map(|c| c.unwrap()).collect())
    }

    pub fn is_bipartite(&self) -> bool {
        self.bipartition().is_some()
    }

    /// Everything that keeps the graph out of the decision procedures.
    /// An empty list means connected with every intersection index nonzero.
    pub fn validate(&self) -> Vec<Diagnostic> {
        let mut out = Vec::new();
        if self.n_vertices() == 0 {
            out.push(Diagnostic::Empty);
        } else if !self.is_connected() {
            out.push(Diagnostic::Disconnected);
        }
        for (i, e) in self.edges.iter().enumerate() {
            if e.index == 0 {
                out.push(Diagnostic::ZeroIndex { edge: i });
            }
        }
        out
    }

    /// Fails unless [`validate`](Self::validate) is clean.
    pub fn require_decidable(&self) -> Result<()> {
        let diags = self.validate();
        match diags.as_slice() {
            [] => Ok(()),
            [Diagnostic::Disconnected] => Err(Error::Disconnected),
            _ => Err(Error::Invalid(diags.iter().map(|d| d.to_string()).collect())),
        }
    }

    /// Reversing the manifold orientation negates every charge and every
    /// intersection index sign, so `ρ` is multiplied by the all-`-1` cocycle.
    pub fn flip_orientation(&self) -> LabeledGraph {
        let charges = self.charges.iter().map(|k| -k).collect();
        let rho = self
            .rho
            .as_ref()
            .map(|r| r.times(&Cocycle::negative(self.n_edges())));
        LabeledGraph {
            charges,
            edges: self.edges.clone(),
            rho,
            star: self.star.clone(),
        }
    }

    /// Orients so that some charge is positive whenever some charge is
    /// nonzero. Returns the graph and whether a flip happened.
    pub fn normalize_orientation(&self) -> (LabeledGraph, bool) {
        let any_nonzero = self.charges.iter().any(|k| !k.is_zero());
        let any_positive = self.charges.iter().any(|k| k.is_positive());
        if any_nonzero && !any_positive {
            (self.flip_orientation(), true)
        } else {
            (self.clone(), false)
        }
    }
}
