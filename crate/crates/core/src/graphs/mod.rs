//! Finite simple graphs on `1..=d`, the looped apex and two-apex
//! constructions, and the graph-side predicates.

mod cycles;
mod families;
mod io;
mod matching;
mod permutation;

use std::collections::VecDeque;
use std::fmt;

use crate::error::{Error, Result};

pub use cycles::{chordless_cycles, is_chordal_bipartite, satisfies_occ};
pub use families::{all_graphs, canonical_form, isomorphism_classes, is_forest};
pub use io::{parse_edge_list, write_edge_list};
pub use matching::{matching_profile, MatchingProfile};
pub use permutation::{is_bipartite_permutation, PermutationWitness};

/// A finite simple undirected graph on the vertex set `1..=d`.
///
/// Edges are stored as `(u, v)` with `u < v`, sorted and deduplicated, so two
/// graphs with the same vertex count and edge set compare equal.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Graph {
    d: usize,
    edges: Vec<(usize, usize)>,
}

impl Graph {
    /// Builds a graph, rejecting loops, repeated edges and out-of-range endpoints.
    pub fn new(d: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        if d == 0 {
            return Err(Error::invalid("a graph needs at least one vertex"));
        }
        let mut canon = Vec::new();
        for (u, v) in edges {
            if u == v {
                return Err(Error::invalid(format!("loop at vertex {u}")));
            }
            if u == 0 || v == 0 || u > d || v > d {
                return Err(Error::invalid(format!("edge {{{u},{v}}} outside 1..={d}")));
            }
            canon.push((u.min(v), u.max(v)));
        }
        canon.sort_unstable();
        let before = canon.len();
        canon.dedup();
        if canon.len() != before {
            return Err(Error::invalid("duplicate edge"));
        }
        Ok(Graph { d, edges: canon })
    }

    /// The edgeless graph on `d` vertices.
    pub fn empty(d: usize) -> Self {
        assert!(d > 0, "a graph needs at least one vertex");
        Graph { d, edges: Vec::new() }
    }

    pub fn path(d: usize) -> Self {
        Graph::new(d, (1..d).map(|i| (i, i + 1))).expect("path is simple")
    }

    pub fn cycle(d: usize) -> Self {
        assert!(d >= 3, "cycles need at least three vertices");
        Graph::new(d, (1..=d).map(|i| (i, i % d + 1))).expect("cycle is simple")
    }

    pub fn complete(d: usize) -> Self {
        let edges = (1..=d).flat_map(|u| (u + 1..=d).map(move |v| (u, v)));
        Graph::new(d, edges).expect("complete graph is simple")
    }

    /// `K_{p,q}` with sides `1..=p` and `p+1..=p+q`.
    pub fn complete_bipartite(p: usize, q: usize) -> Self {
        let edges = (1..=p).flat_map(|u| (p + 1..=p + q).map(move |v| (u, v)));
        Graph::new(p + q, edges).expect("complete bipartite graph is simple")
    }

    /// Star with centre 1 and `leaves` leaves.
    pub fn star(leaves: usize) -> Self {
        Graph::new(leaves + 1, (2..=leaves + 1).map(|v| (1, v))).expect("star is simple")
    }

    /// Vertex-disjoint union; vertices of `other` are shifted by `self.d()`.
    pub fn disjoint_union(&self, other: &Graph) -> Graph {
        let shift = self.d;
        let edges = self
            .edges
            .iter()
            .copied()
            .chain(other.edges.iter().map(|&(u, v)| (u + shift, v + shift)));
        Graph::new(self.d + other.d, edges).expect("union of simple graphs is simple")
    }

    /// Number of vertices.
    pub fn d(&self) -> usize {
        self.d
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        let key = (u.min(v), u.max(v));
        self.edges.binary_search(&key).is_ok()
    }

    /// Adjacency lists indexed by vertex label; index 0 is unused.
    pub fn neighbors(&self) -> Vec<Vec<usize>> {
        let mut adj = vec![Vec::new(); self.d + 1];
        for &(u, v) in &self.edges {
            adj[u].push(v);
            adj[v].push(u);
        }
        for list in &mut adj {
            list.sort_unstable();
        }
        adj
    }

    /// Dense adjacency matrix indexed by vertex label; row/column 0 unused.
    pub fn adjacency_matrix(&self) -> Vec<Vec<bool>> {
        let mut m = vec![vec![false; self.d + 1]; self.d + 1];
        for &(u, v) in &self.edges {
            m[u][v] = true;
            m[v][u] = true;
        }
        m
    }

    /// Subgraph induced on `vertices` (1-indexed labels), relabelled to
    /// `1..=k` in the order the vertices are given.
    pub fn induced_subgraph(&self, vertices: &[usize]) -> Result<Graph> {
        let mut position = vec![0usize; self.d + 1];
        for (i, &v) in vertices.iter().enumerate() {
            if v == 0 || v > self.d {
                return Err(Error::invalid(format!("vertex {v} outside 1..={}", self.d)));
            }
            if position[v] != 0 {
                return Err(Error::invalid(format!("vertex {v} repeated")));
            }
            position[v] = i + 1;
        }
        let edges = self
            .edges
            .iter()
            .filter(|&&(u, v)| position[u] != 0 && position[v] != 0)
            .map(|&(u, v)| (position[u], position[v]));
        Graph::new(vertices.len(), edges)
    }

    /// Graph with the same vertices whose edges are exactly the non-edges of `self`.
    pub fn complement(&self) -> Graph {
        let adj = self.adjacency_matrix();
        let edges = (1..=self.d)
            .flat_map(|u| (u + 1..=self.d).map(move |v| (u, v)))
            .filter(|&(u, v)| !adj[u][v]);
        Graph::new(self.d, edges).expect("complement is simple")
    }

    /// Canonical bipartition, or `None` if the graph has an odd cycle.
    ///
    /// Within each component the side holding the smallest vertex is `left`.
    pub fn bipartition(&self) -> Option<Bipartition> {
        let adj = self.neighbors();
        let mut side: Vec<Option<bool>> = vec![None; self.d + 1];
        for start in 1..=self.d {
            if side[start].is_some() {
                continue;
            }
            side[start] = Some(false);
            let mut queue = VecDeque::from([start]);
            while let Some(u) = queue.pop_front() {
                let su = side[u].expect("queued vertices are coloured");
                for &v in &adj[u] {
                    match side[v] {
                        None => {
                            side[v] = Some(!su);
                            queue.push_back(v);
                        }
                        Some(sv) if sv == su => return None,
                        Some(_) => {}
                    }
                }
            }
        }
        let (mut left, mut right) = (Vec::new(), Vec::new());
        for v in 1..=self.d {
            if side[v] == Some(false) {
                left.push(v);
            } else {
                right.push(v);
            }
        }
        Some(Bipartition { left, right })
    }

    pub fn is_bipartite(&self) -> bool {
        self.bipartition().is_some()
    }

    /// Connected components in order of their smallest vertex.
    pub fn components(&self) -> Vec<Component> {
        let adj = self.neighbors();
        let mut seen = vec![false; self.d + 1];
        let mut out = Vec::new();
        for start in 1..=self.d {
            if seen[start] {
                continue;
            }
            seen[start] = true;
            let mut members = vec![start];
            let mut stack = vec![start];
            while let Some(u) = stack.pop() {
                for &v in &adj[u] {
                    if !seen[v] {
                        seen[v] = true;
                        members.push(v);
                        stack.push(v);
                    }
                }
            }
            members.sort_unstable();
            let graph = self
                .induced_subgraph(&members)
                .expect("component vertices are valid and distinct");
            out.push(Component { graph, vertices: members });
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.components().len() == 1
    }

    /// Adds an apex `d+1` joined to every vertex and carrying a loop.
    pub fn tilde(&self) -> LoopGraph {
        let apex = self.d + 1;
        let mut edges = self.edges.clone();
        edges.extend((1..=self.d).map(|i| (i, apex)));
        LoopGraph::new(apex, edges, [apex]).expect("apex construction is valid")
    }

    /// [`Graph::tilde`] without the loop: a simple graph on `d+1` vertices.
    pub fn cone(&self) -> Graph {
        let apex = self.d + 1;
        let mut edges = self.edges.clone();
        edges.extend((1..=self.d).map(|i| (i, apex)));
        Graph::new(apex, edges).expect("apex construction is valid")
    }

    /// The connected bipartite graph on `d+2` vertices obtained by joining
    /// `d+1` to the left side and `d+2` to the right side and to `d+1`.
    pub fn hat(&self, b: &Bipartition) -> Result<Graph> {
        b.validate(self)?;
        let (a1, a2) = (self.d + 1, self.d + 2);
        let mut edges = self.edges.clone();
        edges.extend(b.left.iter().map(|&i| (i, a1)));
        edges.extend(b.right.iter().map(|&j| (j, a2)));
        edges.push((a1, a2));
        Graph::new(self.d + 2, edges)
    }

    /// [`Graph::hat`] with the canonical bipartition.
    pub fn hat_canonical(&self) -> Result<Graph> {
        let b = self
            .bipartition()
            .ok_or_else(|| Error::precondition("graph is not bipartite"))?;
        self.hat(&b)
    }
}

impl fmt::Display for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "G(d={}; ", self.d)?;
        for (i, (u, v)) in self.edges.iter().enumerate() {
            if i > 0 {
                write!(f, " ")?;
            }
            write!(f, "{u}-{v}")?;
        }
        write!(f, ")")
    }
}

/// A connected component together with the original labels of its vertices:
/// vertex `i` of `graph` is `vertices[i - 1]` in the parent graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Component {
    pub graph: Graph,
    pub vertices: Vec<usize>,
}

/// Graph on `1..=d` whose edge set may contain loops.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct LoopGraph {
    d: usize,
    edges: Vec<(usize, usize)>,
    loops: Vec<usize>,
}

impl LoopGraph {
    pub fn new(
        d: usize,
        edges: impl IntoIterator<Item = (usize, usize)>,
        loops: impl IntoIterator<Item = usize>,
    ) -> Result<Self> {
        let simple = Graph::new(d, edges)?;
        let mut loops: Vec<usize> = loops.into_iter().collect();
        if loops.iter().any(|&v| v == 0 || v > d) {
            return Err(Error::invalid("loop vertex out of range"));
        }
        loops.sort_unstable();
        let before = loops.len();
        loops.dedup();
        if loops.len() != before {
            return Err(Error::invalid("at most one loop per vertex"));
        }
        Ok(LoopGraph { d, edges: simple.edges, loops })
    }

    pub fn d(&self) -> usize {
        self.d
    }

    /// Non-loop edges, `(u, v)` with `u < v`.
    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn loops(&self) -> &[usize] {
        &self.loops
    }
}

impl From<&Graph> for LoopGraph {
    fn from(g: &Graph) -> Self {
        LoopGraph { d: g.d, edges: g.edges.clone(), loops: Vec::new() }
    }
}

/// The two colour classes of a bipartite graph.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Bipartition {
    pub left: Vec<usize>,
    pub right: Vec<usize>,
}

impl Bipartition {
    /// Checks that the sides partition `1..=d` and every edge crosses.
    pub fn validate(&self, g: &Graph) -> Result<()> {
        let mut side = vec![None; g.d() + 1];
        for (vertices, tag) in [(&self.left, false), (&self.right, true)] {
            for &v in vertices {
                if v == 0 || v > g.d() {
                    return Err(Error::precondition(format!("vertex {v} outside the graph")));
                }
                if side[v].is_some() {
                    return Err(Error::precondition(format!("vertex {v} on both sides")));
                }
                side[v] = Some(tag);
            }
        }
        if side[1..].iter().any(Option::is_none) {
            return Err(Error::precondition("bipartition does not cover every vertex"));
        }
        for &(u, v) in g.edges() {
            if side[u] == side[v] {
                return Err(Error::precondition(format!("edge {{{u},{v}}} inside one side")));
            }
        }
        Ok(())
    }

    pub fn swapped(&self) -> Bipartition {
        Bipartition { left: self.right.clone(), right: self.left.clone() }
    }
}
