use std::collections::BTreeMap;

use super::Graph;

/// Every labelled simple graph on `1..=d`, ordered by edge bitmask.
///
/// There are `2^(d(d-1)/2)` of them; intended for `d <= 6`.
pub fn all_graphs(d: usize) -> Vec<Graph> {
    assert!(d >= 1 && d <= 7, "exhaustive graph lists are limited to d <= 7");
    let pairs: Vec<(usize, usize)> = (1..=d)
        .flat_map(|u| (u + 1..=d).map(move |v| (u, v)))
        .collect();
    (0u64..1 << pairs.len())
        .map(|mask| {
            let edges = pairs
                .iter()
                .enumerate()
                .filter(|(i, _)| mask >> i & 1 == 1)
                .map(|(_, &e)| e);
            Graph::new(d, edges).expect("pairs are distinct and loop-free")
        })
        .collect()
}

/// Lexicographically smallest relabelling of `g` over all vertex permutations.
///
/// Brute force over `d!` permutations.
pub fn canonical_form(g: &Graph) -> Graph {
    let d = g.d();
    let mut perm: Vec<usize> = (0..d).collect();
    let mut best: Option<Vec<(usize, usize)>> = None;
    loop {
        let mut edges: Vec<(usize, usize)> = g
            .edges()
            .iter()
            .map(|&(u, v)| {
                let (a, b) = (perm[u - 1] + 1, perm[v - 1] + 1);
                (a.min(b), a.max(b))
            })
            .collect();
        edges.sort_unstable();
        if best.as_ref().map_or(true, |b| edges < *b) {
            best = Some(edges);
        }
        if !next_permutation(&mut perm) {
            break;
        }
    }
    Graph::new(d, best.unwrap_or_default()).expect("relabelling preserves simplicity")
}

/// One representative per isomorphism class of graphs on `d` vertices.
pub fn isomorphism_classes(d: usize) -> Vec<Graph> {
    let mut classes = BTreeMap::new();
    for g in all_graphs(d) {
        classes.entry(canonical_form(&g)).or_insert(());
    }
    classes.into_keys().collect()
}

pub fn is_forest(g: &Graph) -> bool {
    g.edge_count() + g.components().len() == g.d()
}

fn next_permutation(p: &mut [usize]) -> bool {
    let n = p.len();
    if n < 2 {
        return false;
    }
    let mut i = n - 1;
    while i > 0 && p[i - 1] >= p[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = n - 1;
    while p[j] <= p[i - 1] {
        j -= 1;
    }
    p.swap(i - 1, j);
    p[i..].reverse();
    true
}
