use std::collections::HashSet;

use num_bigint::BigInt;
use num_traits::{Signed, Zero};
use serde::Serialize;

use super::lattice::{count_lattice_points, lattice_points};
use super::{LatticePolytope, Point};
use crate::error::{Error, Result};
use crate::limits::Limits;
use crate::poly::{binomial, IntPolynomial};

/// Lattice-point counts of the dilates `0..=D` and the resulting h*-polynomial,
/// where `D` is the affine dimension.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct EhrhartData {
    pub dimension: usize,
    pub counts: Vec<u64>,
    pub hstar: IntPolynomial,
}

impl EhrhartData {
    /// `L(n) = sum_i h*_i C(n + D - i, D)`, valid for every `n >= 0`.
    pub fn ehrhart_value(&self, n: usize) -> BigInt {
        let d = self.dimension;
        self.hstar
            .coeffs()
            .iter()
            .enumerate()
            .filter(|(i, _)| n + d >= *i)
            .map(|(i, h)| h * binomial(n + d - i, d))
            .sum()
    }

    pub fn normalized_volume(&self) -> BigInt {
        self.hstar.eval_at_one()
    }
}

/// Ehrhart h*-polynomial by counting lattice points of `n * p` for
/// `n = 1..=D` and applying `h*_k = sum_i (-1)^i C(D+1, i) L(k-i)`.
pub fn ehrhart_hstar(p: &LatticePolytope, limits: &Limits) -> Result<EhrhartData> {
    let dimension = p.affine_dim(limits)?;
    let mut counts = vec![1u64];
    for n in 1..=dimension as u64 {
        counts.push(count_lattice_points(p, n, limits)?);
    }
    let mut hstar = Vec::with_capacity(dimension + 1);
    for k in 0..=dimension {
        let mut h = BigInt::zero();
        for i in 0..=k {
            let term = binomial(dimension + 1, i) * BigInt::from(counts[k - i]);
            if i % 2 == 0 {
                h += term;
            } else {
                h -= term;
            }
        }
        if h.is_negative() {
            return Err(Error::integrity(format!("negative h*-coefficient {h} at degree {k}")));
        }
        hstar.push(h);
    }
    let data = EhrhartData { dimension, counts, hstar: IntPolynomial::new(hstar) };
    for (n, &c) in data.counts.iter().enumerate() {
        if data.ehrhart_value(n) != BigInt::from(c) {
            return Err(Error::integrity(format!("h* does not reproduce L({n})")));
        }
    }
    Ok(data)
}

/// `h*(1)`: the normalized volume relative to the affine lattice.
pub fn normalized_volume(p: &LatticePolytope, limits: &Limits) -> Result<BigInt> {
    Ok(ehrhart_hstar(p, limits)?.normalized_volume())
}

/// Every primitive facet inequality has right-hand side exactly 1.
///
/// Requires a full-dimensional polytope with the origin in its interior.
pub fn is_reflexive(p: &LatticePolytope, limits: &Limits) -> Result<bool> {
    let desc = p.facet_description(limits)?;
    if desc.affine_dim != p.ambient_dim() {
        return Err(Error::precondition("reflexivity needs a full-dimensional polytope"));
    }
    if desc.facets.iter().any(|h| h.rhs <= 0) {
        return Err(Error::precondition("the origin is not an interior point"));
    }
    Ok(desc.facets.iter().all(|h| h.rhs == 1))
}

/// Result of the bounded integer-decomposition check.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct IdpOutcome {
    /// Largest dilation checked.
    pub kmax: u64,
    /// `(k, x)`: `x` lies in `k * P` but is not a sum of `k` lattice points of `P`.
    pub witness: Option<(u64, Point)>,
}

impl IdpOutcome {
    pub fn holds(&self) -> bool {
        self.witness.is_none()
    }
}

/// Checks the integer decomposition property for dilations `2..=kmax`.
///
/// The sums of `k` lattice points are built as iterated Minkowski sums of
/// point sets and compared with the lattice points of `k * P`.
pub fn is_idp(p: &LatticePolytope, kmax: u64, limits: &Limits) -> Result<IdpOutcome> {
    if kmax < 2 {
        return Err(Error::precondition("kmax must be at least 2"));
    }
    let base = lattice_points(p, 1, limits)?;
    let mut sums: HashSet<Point> = base.iter().cloned().collect();
    for k in 2..=kmax {
        let mut next = HashSet::with_capacity(sums.len() * 2);
        for s in &sums {
            for b in &base {
                next.insert(s.iter().zip(b).map(|(x, y)| x + y).collect::<Point>());
            }
            if next.len() as u64 > limits.point_budget {
                return Err(Error::ResourceLimit { what: "Minkowski sum point set", limit: limits.point_budget });
            }
        }
        sums = next;
        for x in lattice_points(p, k, limits)? {
            if !sums.contains(&x) {
                return Ok(IdpOutcome { kmax, witness: Some((k, x)) });
            }
        }
    }
    Ok(IdpOutcome { kmax, witness: None })
}
