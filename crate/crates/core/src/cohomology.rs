//! H¹(Γ; Z₂) through a spanning tree: a cocycle class is determined by its
//! values on the non-tree edges once it has been made trivial on the tree.

use std::collections::VecDeque;

use crate::error::{Error, Result};
use crate::graph::{Cocycle, LabeledGraph, Sign};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CohomologyBasis {
    n_edges: usize,
    tree: Vec<bool>,
    non_tree: Vec<usize>,
}

impl CohomologyBasis {
    /// Breadth-first spanning tree rooted at vertex 0.
    pub fn new(g: &LabeledGraph) -> Result<Self> {
        if !g.is_connected() {
            return Err(Error::Disconnected);
        }
        let mut tree = vec![false; g.n_edges()];
        let mut seen = vec![false; g.n_vertices()];
        seen[0] = true;
        let mut queue = VecDeque::from([0]);
        while let Some(v) = queue.pop_front() {
            for &w in g.star(v) {
                let u = g.head(w);
                if !seen[u] {
                    seen[u] = true;
                    tree[w.edge()] = true;
                    queue.push_back(u);
                }
            }
        }
        let non_tree = (0..g.n_edges()).filter(|&e| !tree[e]).collect();
        Ok(CohomologyBasis {
            n_edges: g.n_edges(),
            tree,
            non_tree,
        })
    }

    pub fn is_tree_edge(&self, e: usize) -> bool {
        self.tree[e]
    }

    /// Non-tree edges in increasing order; bit `j` of a class index refers
    /// to `non_tree_edges()[j]`.
    pub fn non_tree_edges(&self) -> &[usize] {
        &self.non_tree
    }

    /// `|E| - |V| + 1`
    pub fn cyclomatic(&self) -> usize {
        self.non_tree.len()
    }

    pub fn class_count(&self) -> Result<usize> {
        let c = self.cyclomatic();
        if c >= usize::BITS as usize - 1 {
            return Err(Error::OutOfRange {
                index: c,
                limit: usize::BITS as usize - 2,
            });
        }
        Ok(1usize << c)
    }

    /// The cocycle equal to `-1` exactly on the non-tree edges selected by
    /// the bits of `index`.
    pub fn representative(&self, index: usize) -> Result<Cocycle> {
        let count = self.class_count()?;
        if index >= count {
            return Err(Error::OutOfRange {
                index,
                limit: count,
            });
        }
        let minus: Vec<usize> = self
            .non_tree
            .iter()
            .enumerate()
            .filter(|(j, _)| index >> j & 1 == 1)
            .map(|(_, &e)| e)
            .collect();
        Ok(Cocycle::from_minus_edges(self.n_edges, &minus))
    }

    pub fn classes(&self) -> Result<impl Iterator<Item = Cocycle> + '_> {
        let count = self.class_count()?;
        Ok((0..count).map(move |i| self.representative(i).unwrap()))
    }

    /// Index of the class of `lambda`.
    pub fn class_index(&self, g: &LabeledGraph, lambda: &Cocycle) -> usize {
        let eps = tree_potential(g, &self.tree, lambda);
        let reduced = lambda.times(&Cocycle::coboundary(g, &eps));
        self.non_tree
            .iter()
            .enumerate()
            .filter(|&(_, &e)| reduced.value(e) == Sign::Minus)
            .fold(0, |acc, (j, _)| acc | 1 << j)
    }
}

/// Potential `ε` with `λ_e ε_tail ε_head = +1` on every tree edge, `ε_0 = +1`.
fn tree_potential(g: &LabeledGraph, tree: &[bool], lambda: &Cocycle) -> Vec<Sign> {
    let mut eps = vec![None; g.n_vertices()];
    for root in 0..g.n_vertices() {
        if eps[root].is_some() {
            continue;
        }
        eps[root] = Some(Sign::Plus);
        let mut queue = VecDeque::from([root]);
        while let Some(v) = queue.pop_front() {
            for &w in g.star(v) {
                let u = g.head(w);
                if tree[w.edge()] && eps[u].is_none() {
                    eps[u] = Some(eps[v].unwrap() * lambda.value(w.edge()));
                    queue.push_back(u);
                }
            }
        }
    }
    eps.into_iter().map(|s| s.unwrap()).collect()
}

/// Basis plus the `2^(|E|-|V|+1)` class representatives.
pub fn cohomology_classes(g: &LabeledGraph) -> Result<(CohomologyBasis, Vec<Cocycle>)> {
    let basis = CohomologyBasis::new(g)?;
    let classes = basis.classes()?.collect();
    Ok((basis, classes))
}

/// A potential `ε` with `λ_w = ε_{w⁻} ε_{w⁺}` on every edge, if one exists.
/// Each connected component gets `ε = +1` at its smallest vertex.
pub fn is_coboundary(g: &LabeledGraph, lambda: &Cocycle) -> Option<Vec<Sign>> {
    let mut eps: Vec<Option<Sign>> = vec![None; g.n_vertices()];
    for root in 0..g.n_vertices() {
        if eps[root].is_some() {
            continue;
        }
        eps[root] = Some(Sign::Plus);
        let mut queue = VecDeque::from([root]);
        while let Some(v) = queue.pop_front() {
            let ev = eps[v].unwrap();
            for &w in g.star(v) {
                let u = g.head(w);
                let want = ev * lambda.value(w.edge());
                match eps[u] {
                    None => {
                        eps[u] = Some(want);
                        queue.push_back(u);
                    }
                    Some(eu) if eu != want => return None,
                    Some(_) => {}
                }
            }
        }
    }
    Some(eps.into_iter().map(|s| s.unwrap()).collect())
}

/// Splits signed intersection indices into the cocycle `sign b` and `|b|`.
pub fn form_rho_from_signs(signed: &[i64]) -> Result<(Cocycle, Vec<u64>)> {
    let mut signs = Vec::with_capacity(signed.len());
    let mut magnitudes = Vec::with_capacity(signed.len());
    for (e, &b) in signed.iter().enumerate() {
        if b == 0 {
            return Err(Error::ZeroIndex(e));
        }
        signs.push(if b > 0 { Sign::Plus } else { Sign::Minus });
        magnitudes.push(b.unsigned_abs());
    }
    Ok((Cocycle::new(signs), magnitudes))
}
