use std::collections::HashSet;

use serde::Serialize;

use super::Graph;
use crate::error::{Error, Result};
use crate::limits::Limits;

/// Matching statistics of a graph, indexed by matching size `k`.
///
/// `set_counts[k]` is the number of distinct vertex sets covered by some
/// `k`-matching; `matching_counts[k]` is the number of `k`-matchings.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct MatchingProfile {
    pub set_counts: Vec<u64>,
    pub matching_counts: Vec<u64>,
}

impl MatchingProfile {
    /// Size of a maximum matching.
    pub fn matching_number(&self) -> usize {
        self.matching_counts.len() - 1
    }
}

/// Exhaustively enumerates all matchings of `g`.
pub fn matching_profile(g: &Graph, limits: &Limits) -> Result<MatchingProfile> {
    if g.d() > 64 {
        return Err(Error::precondition("matching enumeration supports at most 64 vertices"));
    }
    let nbrs = g.neighbors();
    let mut walk = Walk {
        nbrs: &nbrs,
        d: g.d(),
        budget: limits.matching_budget,
        visited: 0,
        sets: vec![HashSet::from([0u64])],
        counts: vec![1],
    };
    walk.descend(1, 0, 0)?;
    Ok(MatchingProfile {
        set_counts: walk.sets.iter().map(|s| s.len() as u64).collect(),
        matching_counts: walk.counts,
    })
}

struct Walk<'a> {
    nbrs: &'a [Vec<usize>],
    d: usize,
    budget: u64,
    visited: u64,
    sets: Vec<HashSet<u64>>,
    counts: Vec<u64>,
}

impl Walk<'_> {
    // Vertices below `v` are decided; `used` marks matched vertices.
    fn descend(&mut self, v: usize, used: u64, size: usize) -> Result<()> {
        let mut v = v;
        while v <= self.d && used >> (v - 1) & 1 == 1 {
            v += 1;
        }
        if v > self.d {
            return Ok(());
        }
        // v stays unmatched
        self.descend(v + 1, used, size)?;
        for &u in &self.nbrs[v] {
            if u < v || used >> (u - 1) & 1 == 1 {
                continue;
            }
            let next = used | 1 << (v - 1) | 1 << (u - 1);
            self.record(next, size + 1)?;
            self.descend(v + 1, next, size + 1)?;
        }
        Ok(())
    }

    fn record(&mut self, set: u64, k: usize) -> Result<()> {
        self.visited += 1;
        if self.visited > self.budget {
            return Err(Error::ResourceLimit { what: "matchings", limit: self.budget });
        }
        if self.sets.len() <= k {
            self.sets.push(HashSet::new());
            self.counts.push(0);
        }
        self.sets[k].insert(set);
        self.counts[k] += 1;
        Ok(())
    }
}
