use super::Graph;
use crate::error::{Error, Result};
use crate::limits::Limits;

/// Orderings of the two colour classes witnessing that a bipartite graph is
/// a permutation graph: whenever `i < i'` in `left`, `j < j'` in `right` and
/// `{i,j}`, `{i',j'}` are edges, so are `{i,j'}` and `{i',j}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PermutationWitness {
    pub left: Vec<usize>,
    pub right: Vec<usize>,
}

impl PermutationWitness {
    pub fn check(&self, g: &Graph) -> bool {
        let adj = g.adjacency_matrix();
        for (a, &i) in self.left.iter().enumerate() {
            for &i2 in &self.left[a + 1..] {
                for (b, &j) in self.right.iter().enumerate() {
                    for &j2 in &self.right[b + 1..] {
                        if adj[i][j] && adj[i2][j2] && !(adj[i][j2] && adj[i2][j]) {
                            return false;
                        }
                    }
                }
            }
        }
        true
    }
}

/// Searches for orderings certifying that bipartite `g` is a permutation graph.
///
/// Every ordering of the canonical left side is tried (with prefix pruning);
/// for a fixed left ordering the admissible right orderings are exactly the
/// linear extensions of a forced-precedence relation, found by topological
/// sort.
pub fn is_bipartite_permutation(g: &Graph, limits: &Limits) -> Result<Option<PermutationWitness>> {
    let b = g
        .bipartition()
        .ok_or_else(|| Error::precondition("graph is not bipartite"))?;
    let bound = limits.permutation_side_bound;
    if b.left.len().max(b.right.len()) > bound {
        return Err(Error::ResourceLimit {
            what: "bipartite permutation search side size",
            limit: bound as u64,
        });
    }
    let adj = g.adjacency_matrix();
    let mut search = Search { adj: &adj, left: &b.left, right: &b.right, order: Vec::new(), used: vec![false; b.left.len()] };
    Ok(search.run().map(|(left, right)| PermutationWitness { left, right }))
}

struct Search<'a> {
    adj: &'a [Vec<bool>],
    left: &'a [usize],
    right: &'a [usize],
    order: Vec<usize>,
    used: Vec<bool>,
}

impl Search<'_> {
    fn run(&mut self) -> Option<(Vec<usize>, Vec<usize>)> {
        if self.order.len() == self.left.len() {
            return self.right_order().map(|r| (self.order.clone(), r));
        }
        for idx in 0..self.left.len() {
            if self.used[idx] {
                continue;
            }
            self.order.push(self.left[idx]);
            self.used[idx] = true;
            if self.right_order().is_some() {
                if let Some(found) = self.run() {
                    return Some(found);
                }
            }
            self.used[idx] = false;
            self.order.pop();
        }
        None
    }

    // For the current (possibly partial) left order, find a right order
    // avoiding every forbidden precedence.
    fn right_order(&self) -> Option<Vec<usize>> {
        let n = self.right.len();
        // forbid[x][y]: right[x] may not precede right[y]
        let mut forbid = vec![vec![false; n]; n];
        for (a, &i) in self.order.iter().enumerate() {
            for &i2 in &self.order[a + 1..] {
                for x in 0..n {
                    for y in 0..n {
                        if x == y {
                            continue;
                        }
                        let (j, j2) = (self.right[x], self.right[y]);
                        if self.adj[i][j] && self.adj[i2][j2] && !(self.adj[i][j2] && self.adj[i2][j]) {
                            forbid[x][y] = true;
                        }
                    }
                }
            }
        }
        // forbid[x][y] forces y before x
        let mut indegree = vec![0usize; n];
        for x in 0..n {
            for y in 0..n {
                if forbid[x][y] {
                    if forbid[y][x] {
                        return None;
                    }
                    indegree[x] += 1;
                }
            }
        }
        let mut placed = vec![false; n];
        let mut out = Vec::with_capacity(n);
        while out.len() < n {
            let next = (0..n).find(|&x| !placed[x] && indegree[x] == 0)?;
            placed[next] = true;
            out.push(self.right[next]);
            for x in 0..n {
                if forbid[x][next] {
                    indegree[x] -= 1;
                }
            }
        }
        Some(out)
    }
}
