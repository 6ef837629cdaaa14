#![allow(dead_code)]

use bgpoly::graphs::{all_graphs, isomorphism_classes};
use bgpoly::Graph;
use rand::Rng;
use rand_chacha::ChaCha8Rng;

/// Labelled graphs on 1..=max_d vertices.
pub fn labelled_graphs_up_to(max_d: usize) -> Vec<Graph> {
    (1..=max_d).flat_map(all_graphs).collect()
}

/// Isomorphism-class representatives on 1..=max_d vertices.
pub fn classes_up_to(max_d: usize) -> Vec<Graph> {
    (1..=max_d).flat_map(isomorphism_classes).collect()
}

/// Every forest whose vertices can be ordered so each vertex's parent comes
/// earlier. This reaches every isomorphism class of forests on `d` vertices.
pub fn forests(d: usize) -> Vec<Graph> {
    let mut out = Vec::new();
    let mut parent = vec![0usize; d + 1];
    fill_parents(d, 2, &mut parent, &mut out);
    out
}

fn fill_parents(d: usize, v: usize, parent: &mut [usize], out: &mut Vec<Graph>) {
    if v > d {
        let edges = (2..=d).filter(|&u| parent[u] != 0).map(|u| (parent[u], u));
        out.push(Graph::new(d, edges).unwrap());
        return;
    }
    for p in 0..v {
        parent[v] = p;
        fill_parents(d, v + 1, parent, out);
    }
}

/// Random connected bipartite graph with sides 1..=a and a+1..=a+b.
pub fn random_connected_bipartite(rng: &mut ChaCha8Rng, a: usize, b: usize, p: f64) -> Graph {
    loop {
        let edges: Vec<(usize, usize)> = (1..=a)
            .flat_map(|u| (a + 1..=a + b).map(move |v| (u, v)))
            .filter(|_| rng.gen_bool(p))
            .collect();
        let g = Graph::new(a + b, edges).unwrap();
        if g.is_connected() {
            return g;
        }
    }
}

/// Random permutation of 0..n.
pub fn shuffled(rng: &mut ChaCha8Rng, n: usize) -> Vec<usize> {
    use rand::seq::SliceRandom;
    let mut v: Vec<usize> = (0..n).collect();
    v.shuffle(rng);
    v
}
