use super::Graph;
use crate::error::{Error, Result};
use crate::limits::Limits;

/// All chordless (induced) cycles of length at least `min_len`.
///
/// Each cycle is reported once, starting at its smallest vertex and oriented
/// so that the second vertex is smaller than the last. The output is sorted.
pub fn chordless_cycles(g: &Graph, min_len: usize, limits: &Limits) -> Result<Vec<Vec<usize>>> {
    if min_len < 3 {
        return Err(Error::precondition("min_len must be at least 3"));
    }
    let adj = g.adjacency_matrix();
    let nbrs = g.neighbors();
    let mut search = CycleSearch {
        adj: &adj,
        nbrs: &nbrs,
        min_len,
        cap: limits.max_cycles,
        found: Vec::new(),
        path: Vec::new(),
        on_path: vec![false; g.d() + 1],
    };
    for start in 1..=g.d() {
        search.path.clear();
        search.path.push(start);
        search.on_path[start] = true;
        search.extend(start)?;
        search.on_path[start] = false;
    }
    let mut cycles = search.found;
    cycles.sort();
    Ok(cycles)
}

struct CycleSearch<'a> {
    adj: &'a [Vec<bool>],
    nbrs: &'a [Vec<usize>],
    min_len: usize,
    cap: u64,
    found: Vec<Vec<usize>>,
    path: Vec<usize>,
    on_path: Vec<bool>,
}

impl CycleSearch<'_> {
    // The path s = p0, p1, ..., pk is induced and every vertex exceeds s.
    fn extend(&mut self, start: usize) -> Result<()> {
        let last = *self.path.last().expect("path is never empty");
        let k = self.path.len() - 1;
        for &v in &self.nbrs[last] {
            if v <= start || self.on_path[v] {
                continue;
            }
            // v may touch only the last vertex and (to close) the start.
            if self.path[1..k.max(1)].iter().any(|&p| self.adj[p][v]) {
                continue;
            }
            if k >= 1 && self.adj[start][v] {
                // closes p0 .. pk v; report each cycle in one orientation only
                if self.path[1] < v && self.path.len() + 1 >= self.min_len {
                    let mut cycle = self.path.clone();
                    cycle.push(v);
                    self.found.push(cycle);
                    if self.found.len() as u64 > self.cap {
                        return Err(Error::ResourceLimit { what: "chordless cycles", limit: self.cap });
                    }
                }
                continue;
            }
            self.path.push(v);
            self.on_path[v] = true;
            self.extend(start)?;
            self.on_path[v] = false;
            self.path.pop();
        }
        Ok(())
    }
}

/// Odd cycle condition: any two vertex-disjoint odd cycles lying in the same
/// component are joined by an edge.
///
/// Checked on chordless odd cycles only; every odd cycle contains a
/// chordless odd cycle on a subset of its vertices.
pub fn satisfies_occ(g: &Graph, limits: &Limits) -> Result<bool> {
    if g.is_bipartite() {
        return Ok(true);
    }
    let adj = g.adjacency_matrix();
    for comp in g.components() {
        let odd: Vec<Vec<usize>> = chordless_cycles(&comp.graph, 3, limits)?
            .into_iter()
            .filter(|c| c.len() % 2 == 1)
            .map(|c| c.into_iter().map(|v| comp.vertices[v - 1]).collect())
            .collect();
        for (i, c1) in odd.iter().enumerate() {
            for c2 in &odd[i + 1..] {
                if c1.iter().any(|v| c2.contains(v)) {
                    continue;
                }
                let bridged = c1.iter().any(|&u| c2.iter().any(|&v| adj[u][v]));
                if !bridged {
                    return Ok(false);
                }
            }
        }
    }
    Ok(true)
}

/// Bipartite, and every cycle of length at least six has a chord.
pub fn is_chordal_bipartite(g: &Graph, limits: &Limits) -> Result<bool> {
    if !g.is_bipartite() {
        return Ok(false);
    }
    Ok(chordless_cycles(g, 6, limits)?.is_empty())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graphs::all_graphs;

    fn lim() -> Limits {
        Limits::default()
    }

    // Independent check: a vertex subset carries a chordless cycle iff its
    // induced subgraph is connected and 2-regular.
    fn brute_force_count(g: &Graph, min_len: usize) -> usize {
        let d = g.d();
        let mut count = 0;
        for mask in 1u32..(1 << d) {
            let verts: Vec<usize> = (1..=d).filter(|v| mask >> (v - 1) & 1 == 1).collect();
            if verts.len() < min_len.max(3) {
                continue;
            }
            let h = g.induced_subgraph(&verts).unwrap();
            let adj = h.neighbors();
            if (1..=h.d()).all(|v| adj[v].len() == 2) && h.is_connected() {
                count += 1;
            }
        }
        count
    }

    #[test]
    fn six_cycle_is_its_own_chordless_cycle() {
        let cycles = chordless_cycles(&Graph::cycle(6), 3, &lim()).unwrap();
        assert_eq!(cycles, vec![vec![1, 2, 3, 4, 5, 6]]);
    }

    #[test]
    fn chorded_square_has_no_long_chordless_cycle() {
        let g = Graph::new(4, [(1, 2), (2, 3), (3, 4), (1, 4), (1, 3)]).unwrap();
        assert!(chordless_cycles(&g, 4, &lim()).unwrap().is_empty());
        assert_eq!(chordless_cycles(&g, 3, &lim()).unwrap().len(), 2);
    }

    #[test]
    fn k4_has_four_triangles() {
        let cycles = chordless_cycles(&Graph::complete(4), 3, &lim()).unwrap();
        assert_eq!(
            cycles,
            vec![vec![1, 2, 3], vec![1, 2, 4], vec![1, 3, 4], vec![2, 3, 4]]
        );
    }

    #[test]
    fn matches_subset_brute_force() {
        for d in 1..=5 {
            for g in all_graphs(d) {
                for min_len in [3, 4, 5] {
                    let fast = chordless_cycles(&g, min_len, &lim()).unwrap();
                    assert_eq!(fast.len(), brute_force_count(&g, min_len), "{g} min {min_len}");
                }
            }
        }
    }

    #[test]
    fn bipartite_iff_no_odd_chordless_cycle() {
        for g in all_graphs(5) {
            let odd = chordless_cycles(&g, 3, &lim())
                .unwrap()
                .iter()
                .any(|c| c.len() % 2 == 1);
            assert_eq!(g.is_bipartite(), !odd, "{g}");
        }
    }

    #[test]
    fn cycle_cap_is_enforced() {
        let small = Limits { max_cycles: 2, ..Limits::default() };
        let err = chordless_cycles(&Graph::complete(4), 3, &small).unwrap_err();
        assert!(matches!(err, Error::ResourceLimit { .. }));
        assert!(chordless_cycles(&Graph::cycle(4), 2, &lim()).is_err());
    }

    #[test]
    fn occ_examples() {
        let two = Graph::complete(3).disjoint_union(&Graph::complete(3));
        // disconnected: the condition only concerns cycles in one component
        assert!(satisfies_occ(&two, &lim()).unwrap());

        // joined through a 7th vertex, no direct edge between the triangles
        let mut edges = two.edges().to_vec();
        edges.extend([(1, 7), (4, 7)]);
        let via_path = Graph::new(7, edges).unwrap();
        assert!(!satisfies_occ(&via_path, &lim()).unwrap());

        let mut edges = two.edges().to_vec();
        edges.push((3, 4));
        let bridged = Graph::new(6, edges).unwrap();
        assert!(satisfies_occ(&bridged, &lim()).unwrap());

        for g in all_graphs(5).into_iter().filter(Graph::is_bipartite) {
            assert!(satisfies_occ(&g, &lim()).unwrap());
        }
    }

    #[test]
    fn chordal_bipartite_examples() {
        assert!(!is_chordal_bipartite(&Graph::cycle(6), &lim()).unwrap());
        assert!(is_chordal_bipartite(&Graph::cycle(4), &lim()).unwrap());
        assert!(is_chordal_bipartite(&Graph::path(7), &lim()).unwrap());
        assert!(!is_chordal_bipartite(&Graph::complete(3), &lim()).unwrap());
        assert!(is_chordal_bipartite(&Graph::complete_bipartite(3, 3), &lim()).unwrap());
    }
}
