//! Resource budgets shared by every enumeration in the crate.
//!
//! Every budget can be overridden from the environment using the
//! `BGPOLY_` prefix, e.g. `BGPOLY_POINT_BUDGET=1000000`.

use std::env;

use crate::error::{Error, Result};

/// Prefix for budget environment variables.
pub const ENV_PREFIX: &str = "BGPOLY_";

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Limits {
    /// Maximum number of chordless cycles reported by one enumeration.
    pub max_cycles: u64,
    /// Largest side size accepted by the bipartite-permutation search.
    pub permutation_side_bound: usize,
    /// Largest ambient dimension accepted by the convex hull.
    pub max_hull_dim: usize,
    /// Maximum number of candidate coordinates tried in one lattice-point
    /// scan; also caps Minkowski sum point sets.
    pub point_budget: u64,
    /// Maximum number of spanning trees visited while collecting hypertrees.
    pub tree_budget: u64,
    /// Maximum number of linear extensions enumerated.
    pub extension_budget: u64,
    /// Maximum number of matchings enumerated.
    pub matching_budget: u64,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            max_cycles: 1_000_000,
            permutation_side_bound: 8,
            max_hull_dim: 10,
            point_budget: 100_000_000,
            tree_budget: 10_000_000,
            extension_budget: 10_000_000,
            matching_budget: 10_000_000,
        }
    }
}

impl Limits {
    /// Defaults, overridden by any `BGPOLY_*` variables that are set.
    pub fn from_env() -> Result<Self> {
        let mut limits = Limits::default();
        read_var("MAX_CYCLES", &mut limits.max_cycles)?;
        read_var("PERMUTATION_SIDE_BOUND", &mut limits.permutation_side_bound)?;
        read_var("MAX_HULL_DIM", &mut limits.max_hull_dim)?;
        read_var("POINT_BUDGET", &mut limits.point_budget)?;
        read_var("TREE_BUDGET", &mut limits.tree_budget)?;
        read_var("EXTENSION_BUDGET", &mut limits.extension_budget)?;
        read_var("MATCHING_BUDGET", &mut limits.matching_budget)?;
        Ok(limits)
    }
}

fn read_var<T: std::str::FromStr>(name: &str, slot: &mut T) -> Result<()> {
    let key = format!("{ENV_PREFIX}{name}");
    match env::var(&key) {
        Ok(raw) => {
            *slot = raw
                .trim()
                .parse()
                .map_err(|_| Error::invalid(format!("{key}={raw} is not a valid number")))?;
            Ok(())
        }
        Err(_) => Ok(()),
    }
}
