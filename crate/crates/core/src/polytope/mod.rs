//! Lattice polytopes given by generating points, with an exact facet
//! description computed on demand.

mod ehrhart;
mod hull;
mod lattice;

use std::sync::OnceLock;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graphs::{Graph, LoopGraph};
use crate::limits::Limits;

pub use ehrhart::{ehrhart_hstar, is_idp, is_reflexive, normalized_volume, EhrhartData, IdpOutcome};
pub use lattice::{count_lattice_points, lattice_points};

pub type Point = Vec<i64>;

/// `normal . x <= rhs`, with a primitive integer normal.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct Halfspace {
    pub normal: Vec<i64>,
    pub rhs: i64,
}

impl Halfspace {
    pub fn contains(&self, x: &[i64]) -> bool {
        dot(&self.normal, x) <= self.rhs as i128
    }
}

/// `normal . x = rhs`, with a primitive integer normal.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct Equation {
    pub normal: Vec<i64>,
    pub rhs: i64,
}

/// Exact irredundant H-description of a polytope inside its affine span.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FacetDescription {
    pub affine_dim: usize,
    pub facets: Vec<Halfspace>,
    pub equations: Vec<Equation>,
}

impl FacetDescription {
    pub fn contains(&self, x: &[i64]) -> bool {
        self.equations.iter().all(|e| dot(&e.normal, x) == e.rhs as i128)
            && self.facets.iter().all(|h| h.contains(x))
    }
}

/// Convex hull of finitely many integer points.
#[derive(Debug, Clone)]
pub struct LatticePolytope {
    ambient_dim: usize,
    generators: Vec<Point>,
    facets: OnceLock<FacetDescription>,
}

impl PartialEq for LatticePolytope {
    fn eq(&self, other: &Self) -> bool {
        self.ambient_dim == other.ambient_dim && self.generators == other.generators
    }
}

impl Eq for LatticePolytope {}

impl LatticePolytope {
    /// Sorts and deduplicates the generators.
    pub fn new(ambient_dim: usize, generators: impl IntoIterator<Item = Point>) -> Result<Self> {
        let mut generators: Vec<Point> = generators.into_iter().collect();
        if generators.is_empty() {
            return Err(Error::invalid("a polytope needs at least one generator"));
        }
        if let Some(bad) = generators.iter().find(|p| p.len() != ambient_dim) {
            return Err(Error::invalid(format!(
                "generator {bad:?} does not live in dimension {ambient_dim}"
            )));
        }
        generators.sort();
        generators.dedup();
        Ok(LatticePolytope { ambient_dim, generators, facets: OnceLock::new() })
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn generators(&self) -> &[Point] {
        &self.generators
    }

    /// Computes (once) and returns the facet description.
    pub fn facet_description(&self, limits: &Limits) -> Result<&FacetDescription> {
        if let Some(f) = self.facets.get() {
            return Ok(f);
        }
        if self.ambient_dim > limits.max_hull_dim {
            return Err(Error::ResourceLimit {
                what: "convex hull ambient dimension",
                limit: limits.max_hull_dim as u64,
            });
        }
        let computed = hull::facet_description(self.ambient_dim, &self.generators)?;
        let _ = self.facets.set(computed);
        Ok(self.facets.get().expect("just set"))
    }

    pub fn affine_dim(&self, limits: &Limits) -> Result<usize> {
        Ok(self.facet_description(limits)?.affine_dim)
    }

    /// Convex hull of the generators lying in the closed orthant given by
    /// `signs` (each entry `1` or `-1`).
    pub fn orthant_restriction(&self, signs: &[i64]) -> Result<LatticePolytope> {
        if signs.len() != self.ambient_dim || signs.iter().any(|s| s.abs() != 1) {
            return Err(Error::invalid("signs must be a +-1 vector of the ambient dimension"));
        }
        let kept = self
            .generators
            .iter()
            .filter(|p| p.iter().zip(signs).all(|(x, s)| x * s >= 0))
            .cloned();
        LatticePolytope::new(self.ambient_dim, kept)
    }

    /// Point reflection through the origin.
    pub fn negated(&self) -> LatticePolytope {
        LatticePolytope::new(
            self.ambient_dim,
            self.generators.iter().map(|p| p.iter().map(|x| -x).collect()),
        )
        .expect("negation keeps generators valid")
    }
}

fn unit(d: usize, i: usize, s: i64) -> Point {
    let mut p = vec![0; d];
    p[i] = s;
    p
}

/// Convex hull of `0`, `+-e_i` and `+-e_i +- e_j` over the edges `{i,j}` of `g`.
pub fn build_bg(g: &Graph) -> LatticePolytope {
    let d = g.d();
    let mut pts = vec![vec![0; d]];
    for i in 0..d {
        pts.push(unit(d, i, 1));
        pts.push(unit(d, i, -1));
    }
    for &(u, v) in g.edges() {
        for su in [1, -1] {
            for sv in [1, -1] {
                let mut p = vec![0; d];
                p[u - 1] = su;
                p[v - 1] = sv;
                pts.push(p);
            }
        }
    }
    LatticePolytope::new(d, pts).expect("generators are well formed")
}

/// Cross-polytope `conv(+-e_i)` together with the origin.
pub fn cross_polytope(d: usize) -> LatticePolytope {
    build_bg(&Graph::empty(d))
}

/// Convex hull of `e_i + e_j` over edges and `2 e_i` over loops.
pub fn edge_polytope(h: &LoopGraph) -> Result<LatticePolytope> {
    let d = h.d();
    if h.edges().is_empty() && h.loops().is_empty() {
        return Err(Error::invalid("edge polytope of an edgeless graph"));
    }
    let mut pts = Vec::new();
    for &(u, v) in h.edges() {
        let mut p = vec![0; d];
        p[u - 1] = 1;
        p[v - 1] = 1;
        pts.push(p);
    }
    for &v in h.loops() {
        pts.push(unit(d, v - 1, 2));
    }
    LatticePolytope::new(d, pts)
}

pub(crate) fn dot(a: &[i64], x: &[i64]) -> i128 {
    a.iter().zip(x).map(|(&p, &q)| p as i128 * q as i128).sum()
}
