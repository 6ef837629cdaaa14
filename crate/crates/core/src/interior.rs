//! Hypergraphs, hypertrees and interior polynomials, together with the
//! three routes to the h*-polynomial of `B_G`.

use std::collections::{BTreeSet, HashMap};

use num_bigint::BigInt;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::graphs::{canonical_form, matching_profile, Bipartition, Graph};
use crate::limits::Limits;
use crate::poly::{gamma_substitute, IntPolynomial};
use crate::polytope::{edge_polytope, ehrhart_hstar};

/// Hypergraph on vertices `1..=vertex_count` with an ordered list of
/// hyperedges. Hyperedges are sorted vertex lists and may repeat.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Hypergraph {
    vertex_count: usize,
    hyperedges: Vec<Vec<usize>>,
}

impl Hypergraph {
    /// Fails unless every hyperedge is nonempty and the incidence graph is
    /// connected.
    pub fn new(vertex_count: usize, hyperedges: Vec<Vec<usize>>) -> Result<Self> {
        if vertex_count == 0 || hyperedges.is_empty() {
            return Err(Error::precondition("hypergraph needs a vertex and a hyperedge"));
        }
        let mut hyperedges = hyperedges;
        for e in &mut hyperedges {
            e.sort_unstable();
            e.dedup();
            if e.is_empty() {
                return Err(Error::invalid("empty hyperedge"));
            }
            if e.iter().any(|&v| v == 0 || v > vertex_count) {
                return Err(Error::invalid("hyperedge vertex out of range"));
            }
        }
        let h = Hypergraph { vertex_count, hyperedges };
        if !h.incidence_graph().is_connected() {
            return Err(Error::precondition("incidence graph is disconnected"));
        }
        Ok(h)
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    pub fn hyperedges(&self) -> &[Vec<usize>] {
        &self.hyperedges
    }

    /// `Bip H`: vertices keep their labels, hyperedge `j` (0-based) becomes
    /// vertex `vertex_count + j + 1`.
    pub fn incidence_graph(&self) -> Graph {
        let n = self.vertex_count;
        let edges = self
            .hyperedges
            .iter()
            .enumerate()
            .flat_map(|(j, e)| e.iter().map(move |&v| (v, n + j + 1)));
        Graph::new(n + self.hyperedges.len(), edges).expect("incidence edges are valid")
    }

    /// The same hypergraph with hyperedges listed as `order[0], order[1], …`.
    pub fn reordered(&self, order: &[usize]) -> Result<Hypergraph> {
        check_permutation(order, self.hyperedges.len())?;
        Ok(Hypergraph {
            vertex_count: self.vertex_count,
            hyperedges: order.iter().map(|&j| self.hyperedges[j].clone()).collect(),
        })
    }
}

/// Degree vector of a spanning tree of `Bip H` on the hyperedge side,
/// lowered by one.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct Hypertree {
    pub f: Vec<usize>,
}

/// Reads a connected bipartite graph as a hypergraph whose hyperedges are
/// the vertices listed in `edge_side`, in ascending label order. The other
/// side, relabelled `1..` in ascending order, supplies the vertices.
pub fn hypergraph_from_bipartite(b: &Graph, edge_side: &[usize]) -> Result<Hypergraph> {
    if !b.is_connected() {
        return Err(Error::precondition("bipartite graph must be connected"));
    }
    let mut right = edge_side.to_vec();
    right.sort_unstable();
    right.dedup();
    let left: Vec<usize> = (1..=b.d()).filter(|v| right.binary_search(v).is_err()).collect();
    let sides = Bipartition { left, right };
    sides.validate(b)?;
    let mut label = vec![0; b.d() + 1];
    for (i, &v) in sides.left.iter().enumerate() {
        label[v] = i + 1;
    }
    let nbrs = b.neighbors();
    let hyperedges = sides
        .right
        .iter()
        .map(|&e| nbrs[e].iter().map(|&v| label[v]).collect())
        .collect();
    Hypergraph::new(sides.left.len(), hyperedges)
}

/// All hypertrees, collected from every spanning tree of `Bip H`.
pub fn hypertrees(h: &Hypergraph, limits: &Limits) -> Result<BTreeSet<Hypertree>> {
    let n = h.vertex_count;
    let edges: Vec<(usize, usize)> = h
        .hyperedges
        .iter()
        .enumerate()
        .flat_map(|(j, e)| e.iter().map(move |&v| (v - 1, n + j)))
        .collect();
    let mut search = TreeSearch {
        edges: &edges,
        nodes: n + h.hyperedges.len(),
        vertex_count: n,
        budget: limits.tree_budget,
        trees: 0,
        chosen: Vec::new(),
        found: BTreeSet::new(),
    };
    let comp: Vec<usize> = (0..search.nodes).collect();
    search.descend(0, comp)?;
    Ok(search.found)
}

struct TreeSearch<'a> {
    edges: &'a [(usize, usize)],
    nodes: usize,
    vertex_count: usize,
    budget: u64,
    trees: u64,
    chosen: Vec<usize>,
    found: BTreeSet<Hypertree>,
}

impl TreeSearch<'_> {
    // Decides edges in order; `comp` labels the components of the chosen forest.
    fn descend(&mut self, i: usize, comp: Vec<usize>) -> Result<()> {
        if self.chosen.len() + 1 == self.nodes {
            self.trees += 1;
            if self.trees > self.budget {
                return Err(Error::ResourceLimit { what: "spanning trees", limit: self.budget });
            }
            let mut f = vec![0usize; self.nodes - self.vertex_count];
            for &k in &self.chosen {
                f[self.edges[k].1 - self.vertex_count] += 1;
            }
            f.iter_mut().for_each(|x| *x -= 1);
            self.found.insert(Hypertree { f });
            return Ok(());
        }
        if i == self.edges.len() {
            return Ok(());
        }
        let (u, v) = self.edges[i];
        if comp[u] != comp[v] {
            let (from, to) = (comp[v], comp[u]);
            let merged = comp.iter().map(|&c| if c == from { to } else { c }).collect();
            self.chosen.push(i);
            self.descend(i + 1, merged)?;
            self.chosen.pop();
        }
        if self.still_spans(i + 1, &comp) {
            self.descend(i + 1, comp)?;
        }
        Ok(())
    }

    fn still_spans(&self, from: usize, comp: &[usize]) -> bool {
        let mut parent: Vec<usize> = comp.to_vec();
        fn root(p: &mut [usize], mut x: usize) -> usize {
            while p[x] != x {
                p[x] = p[p[x]];
                x = p[x];
            }
            x
        }
        let mut pieces = comp.iter().enumerate().filter(|(i, &c)| *i == c).count();
        for &(u, v) in &self.edges[from..] {
            let (a, b) = (root(&mut parent, comp[u]), root(&mut parent, comp[v]));
            if a != b {
                parent[a] = b;
                pieces -= 1;
            }
        }
        pieces == 1
    }
}

/// Interior polynomial from hypertree activities, hyperedges taken in their
/// listed order.
pub fn interior_polynomial_oracle(h: &Hypergraph, limits: &Limits) -> Result<IntPolynomial> {
    let trees = hypertrees(h, limits)?;
    let mut counts = vec![0u64; h.hyperedges.len()];
    for t in &trees {
        counts[internal_inactivity(&t.f, &trees)] += 1;
    }
    Ok(IntPolynomial::from_u64s(&counts))
}

/// [`interior_polynomial_oracle`] with hyperedges ranked by `order`:
/// `order[0]` is the smallest.
pub fn interior_polynomial_with_order(
    h: &Hypergraph,
    order: &[usize],
    limits: &Limits,
) -> Result<IntPolynomial> {
    interior_polynomial_oracle(&h.reordered(order)?, limits)
}

fn internal_inactivity(f: &[usize], trees: &BTreeSet<Hypertree>) -> usize {
    let mut probe = Hypertree { f: f.to_vec() };
    let mut inactive = 0;
    for j in 1..f.len() {
        if f[j] == 0 {
            continue;
        }
        probe.f[j] -= 1;
        let hit = (0..j).any(|k| {
            probe.f[k] += 1;
            let found = trees.contains(&probe);
            probe.f[k] -= 1;
            found
        });
        probe.f[j] += 1;
        if hit {
            inactive += 1;
        }
    }
    inactive
}

fn check_permutation(order: &[usize], n: usize) -> Result<()> {
    let mut seen = vec![false; n];
    if order.len() != n {
        return Err(Error::invalid("ordering must list every hyperedge once"));
    }
    for &j in order {
        if j >= n || std::mem::replace(&mut seen[j], true) {
            return Err(Error::invalid("ordering must list every hyperedge once"));
        }
    }
    Ok(())
}

/// `Σ_k |M(G,k)| x^k`, the interior polynomial of the hat graph of `g`.
pub fn interior_hat_via_matchings(g: &Graph, limits: &Limits) -> Result<IntPolynomial> {
    if !g.is_bipartite() {
        return Err(Error::precondition("graph is not bipartite"));
    }
    Ok(IntPolynomial::from_u64s(&matching_profile(g, limits)?.set_counts))
}

/// `h*(B_G)` for bipartite `g`, as `Σ_k 4^k |M(G,k)| x^k (1+x)^(d-2k)`.
pub fn hstar_bg_fast(g: &Graph, limits: &Limits) -> Result<IntPolynomial> {
    let interior = interior_hat_via_matchings(g, limits)?;
    gamma_substitute(&interior, g.d())
}

/// Memo of `h*(P_{H̃})` keyed by the canonical form of `H`.
#[derive(Debug, Default, Clone)]
pub struct TildeHstarCache {
    map: HashMap<Graph, IntPolynomial>,
}

impl TildeHstarCache {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn len(&self) -> usize {
        self.map.len()
    }

    pub fn is_empty(&self) -> bool {
        self.map.is_empty()
    }

    fn get(&mut self, h: &Graph, limits: &Limits) -> Result<IntPolynomial> {
        let key = canonical_form(h);
        if let Some(p) = self.map.get(&key) {
            return Ok(p.clone());
        }
        let p = ehrhart_hstar(&edge_polytope(&key.tilde())?, limits)?.hstar;
        self.map.insert(key, p.clone());
        Ok(p)
    }
}

/// `h*(B_G) = Σ_j 2^j (x-1)^(d-j) Σ_{|S|=j} h*(P_{G[S]~})`, each inner term
/// from lattice-point counting. Works for any graph.
pub fn hstar_bg_subgraph_formula(g: &Graph, limits: &Limits) -> Result<IntPolynomial> {
    hstar_bg_subgraph_formula_cached(g, &mut TildeHstarCache::new(), limits)
}

/// [`hstar_bg_subgraph_formula`] sharing a cache across calls.
pub fn hstar_bg_subgraph_formula_cached(
    g: &Graph,
    cache: &mut TildeHstarCache,
    limits: &Limits,
) -> Result<IntPolynomial> {
    let d = g.d();
    if d >= 32 {
        return Err(Error::precondition("subgraph expansion supports fewer than 32 vertices"));
    }
    let mut inner = vec![IntPolynomial::zero(); d + 1];
    inner[0] = IntPolynomial::one();
    for mask in 1u32..(1 << d) {
        let vertices: Vec<usize> = (1..=d).filter(|v| mask >> (v - 1) & 1 == 1).collect();
        let h = g.induced_subgraph(&vertices)?;
        let j = vertices.len();
        inner[j] = &inner[j] + &cache.get(&h, limits)?;
    }
    let mut total = IntPolynomial::zero();
    for (j, sum) in inner.iter().enumerate() {
        let weight = IntPolynomial::linear_power(-1, d - j).scale(&(BigInt::from(1) << j));
        total = &total + &(&weight * sum);
    }
    Ok(total)
}
