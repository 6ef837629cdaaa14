//! Exact facet enumeration by the double description method.
//!
//! Points are first projected onto a coordinate subset on which their affine
//! span projects isomorphically, so the hull is always computed for a
//! full-dimensional point set. Facets of `conv(y_i)` are the extreme rays of
//! the cone `{(b, a) : b - a.y_i >= 0 for all i}`, which is grown one
//! constraint at a time from a simplex, using the combinatorial adjacency
//! test on tight-constraint sets.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};

use super::{Equation, FacetDescription, Halfspace, Point};
use crate::error::{Error, Result};

pub(super) fn facet_description(ambient: usize, points: &[Point]) -> Result<FacetDescription> {
    let base = &points[0];
    let diffs: Vec<Vec<BigRational>> = points
        .iter()
        .map(|p| p.iter().zip(base).map(|(a, b)| rat(a - b)).collect())
        .collect();
    let (rref, pivots) = row_reduce(diffs, ambient);
    let affine_dim = pivots.len();

    let mut equations = Vec::new();
    for free in (0..ambient).filter(|c| !pivots.contains(c)) {
        let mut normal = vec![BigRational::zero(); ambient];
        normal[free] = BigRational::one();
        for (row, &pc) in rref.iter().zip(&pivots) {
            normal[pc] = -row[free].clone();
        }
        let normal = primitive_from_rationals(&normal)?;
        let rhs = super::dot(&normal, base);
        equations.push(Equation { normal, rhs: to_i64(rhs)? });
    }
    equations.sort();

    let projected: Vec<Point> = points
        .iter()
        .map(|p| pivots.iter().map(|&c| p[c]).collect())
        .collect();
    let mut facets: Vec<Halfspace> = dd_facets(affine_dim, &projected)?
        .into_iter()
        .map(|(a, b)| {
            let mut normal = vec![0; ambient];
            for (k, &c) in pivots.iter().enumerate() {
                normal[c] = a[k];
            }
            Halfspace { normal, rhs: b }
        })
        .collect();
    facets.sort();
    Ok(FacetDescription { affine_dim, facets, equations })
}

fn rat(x: i64) -> BigRational {
    BigRational::from(BigInt::from(x))
}

fn to_i64<T: ToPrimitive + std::fmt::Debug>(x: T) -> Result<i64> {
    x.to_i64()
        .ok_or_else(|| Error::integrity(format!("hull coefficient {x:?} overflows 64 bits")))
}

/// Reduced row echelon form of the row space; returns the nonzero rows and
/// their pivot columns.
fn row_reduce(mut rows: Vec<Vec<BigRational>>, cols: usize) -> (Vec<Vec<BigRational>>, Vec<usize>) {
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        let Some(sel) = (r..rows.len()).find(|&i| !rows[i][c].is_zero()) else {
            continue;
        };
        rows.swap(r, sel);
        let inv = rows[r][c].recip();
        for x in rows[r].iter_mut() {
            *x *= &inv;
        }
        let pivot_row = rows[r].clone();
        for (i, row) in rows.iter_mut().enumerate() {
            if i != r && !row[c].is_zero() {
                let f = row[c].clone();
                for (x, p) in row.iter_mut().zip(&pivot_row) {
                    *x -= &f * p;
                }
            }
        }
        pivots.push(c);
        r += 1;
        if r == rows.len() {
            break;
        }
    }
    rows.truncate(r);
    (rows, pivots)
}

fn primitive_from_rationals(v: &[BigRational]) -> Result<Vec<i64>> {
    let lcm = v.iter().fold(BigInt::one(), |l, x| l.lcm(x.denom()));
    let ints: Vec<BigInt> = v.iter().map(|x| (x * BigRational::from(lcm.clone())).to_integer()).collect();
    let g = ints.iter().fold(BigInt::zero(), |g, x| g.gcd(x));
    ints.iter().map(|x| to_i64(x / &g)).collect()
}

#[derive(Clone)]
struct Ray {
    coords: Vec<i128>,
    zeros: Vec<u64>,
}

fn set_bit(bits: &mut [u64], i: usize) {
    bits[i / 64] |= 1 << (i % 64);
}

fn popcount(bits: &[u64]) -> u32 {
    bits.iter().map(|w| w.count_ones()).sum()
}

fn is_subset(a: &[u64], b: &[u64]) -> bool {
    a.iter().zip(b).all(|(x, y)| x & !y == 0)
}

fn gcd_i128(a: i128, b: i128) -> i128 {
    let (mut a, mut b) = (a.abs(), b.abs());
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

fn reduce(v: &mut [i128]) {
    let g = v.iter().fold(0, |g, &x| gcd_i128(g, x));
    if g > 1 {
        for x in v.iter_mut() {
            *x /= g;
        }
    }
}

fn constraint_value(point: &[i64], ray: &[i128]) -> Result<i128> {
    // b - a.y
    let mut acc = ray[0];
    for (y, a) in point.iter().zip(&ray[1..]) {
        acc = a
            .checked_mul(*y as i128)
            .and_then(|t| acc.checked_sub(t))
            .ok_or_else(|| Error::integrity("double description overflow"))?;
    }
    Ok(acc)
}

/// Facets `a.y <= b` (primitive `a`) of a full-dimensional point set in `Z^dim`.
fn dd_facets(dim: usize, points: &[Point]) -> Result<Vec<(Vec<i64>, i64)>> {
    if dim == 0 {
        return Ok(Vec::new());
    }
    let words = points.len().div_ceil(64);

    // affinely independent starting simplex, chosen greedily in input order
    let mut chosen: Vec<usize> = vec![0];
    let mut basis: Vec<Vec<BigRational>> = Vec::new();
    for (i, p) in points.iter().enumerate().skip(1) {
        let mut row: Vec<BigRational> = p.iter().zip(&points[0]).map(|(a, b)| rat(a - b)).collect();
        for b in &basis {
            let lead = b.iter().position(|x| !x.is_zero()).expect("basis rows are nonzero");
            if !row[lead].is_zero() {
                let f = &row[lead] / &b[lead];
                for (x, y) in row.iter_mut().zip(b) {
                    *x -= &f * y;
                }
            }
        }
        if row.iter().any(|x| !x.is_zero()) {
            basis.push(row);
            chosen.push(i);
            if chosen.len() == dim + 1 {
                break;
            }
        }
    }
    if chosen.len() != dim + 1 {
        return Err(Error::integrity("projected points are not full-dimensional"));
    }

    // rows (1, -y) of the simplex constraints; rays are the inverse columns
    let m: Vec<Vec<BigRational>> = chosen
        .iter()
        .map(|&i| {
            std::iter::once(BigRational::one())
                .chain(points[i].iter().map(|&y| rat(-y)))
                .collect()
        })
        .collect();
    let inv = invert(&m)?;
    let mut rays: Vec<Ray> = Vec::with_capacity(dim + 1);
    for k in 0..=dim {
        let column: Vec<BigRational> = (0..=dim).map(|r| inv[r][k].clone()).collect();
        let coords: Vec<i128> = primitive_from_rationals(&column)?
            .into_iter()
            .map(i128::from)
            .collect();
        let mut zeros = vec![0u64; words];
        for (j, &i) in chosen.iter().enumerate() {
            if j != k {
                set_bit(&mut zeros, i);
            }
        }
        rays.push(Ray { coords, zeros });
    }

    let mut in_simplex = vec![false; points.len()];
    for &i in &chosen {
        in_simplex[i] = true;
    }
    for (t, point) in points.iter().enumerate() {
        if in_simplex[t] {
            continue;
        }
        let values: Vec<i128> = rays
            .iter()
            .map(|r| constraint_value(point, &r.coords))
            .collect::<Result<_>>()?;
        if values.iter().all(|&v| v >= 0) {
            for (r, &v) in rays.iter_mut().zip(&values) {
                if v == 0 {
                    set_bit(&mut r.zeros, t);
                }
            }
            continue;
        }
        let pos: Vec<usize> = (0..rays.len()).filter(|&i| values[i] > 0).collect();
        let neg: Vec<usize> = (0..rays.len()).filter(|&i| values[i] < 0).collect();
        let mut next: Vec<Ray> = Vec::new();
        for &p in &pos {
            for &n in &neg {
                let common: Vec<u64> = rays[p]
                    .zeros
                    .iter()
                    .zip(&rays[n].zeros)
                    .map(|(a, b)| a & b)
                    .collect();
                if (popcount(&common) as usize) + 1 < dim {
                    continue;
                }
                let adjacent = rays
                    .iter()
                    .enumerate()
                    .all(|(o, r)| o == p || o == n || !is_subset(&common, &r.zeros));
                if !adjacent {
                    continue;
                }
                let (vp, vn) = (values[p], -values[n]);
                let mut coords = Vec::with_capacity(dim + 1);
                for (x, y) in rays[p].coords.iter().zip(&rays[n].coords) {
                    let c = vn
                        .checked_mul(*x)
                        .zip(vp.checked_mul(*y))
                        .and_then(|(a, b)| a.checked_add(b))
                        .ok_or_else(|| Error::integrity("double description overflow"))?;
                    coords.push(c);
                }
                reduce(&mut coords);
                let mut zeros = common;
                set_bit(&mut zeros, t);
                next.push(Ray { coords, zeros });
            }
        }
        for (i, mut r) in rays.into_iter().enumerate() {
            match values[i].signum() {
                1 => next.push(r),
                0 => {
                    set_bit(&mut r.zeros, t);
                    next.push(r);
                }
                _ => {}
            }
        }
        rays = next;
    }

    let mut facets = Vec::with_capacity(rays.len());
    for r in rays {
        let a = &r.coords[1..];
        let g = a.iter().fold(0, |g, &x| gcd_i128(g, x));
        if g == 0 {
            return Err(Error::integrity("degenerate facet normal"));
        }
        let normal: Vec<i64> = a.iter().map(|x| to_i64(x / g)).collect::<Result<_>>()?;
        let tight = (0..points.len())
            .find(|&i| r.zeros[i / 64] >> (i % 64) & 1 == 1)
            .ok_or_else(|| Error::integrity("facet without tight points"))?;
        let rhs = to_i64(super::dot(&normal, &points[tight]))?;
        facets.push((normal, rhs));
    }
    Ok(facets)
}

fn invert(m: &[Vec<BigRational>]) -> Result<Vec<Vec<BigRational>>> {
    let n = m.len();
    let mut a: Vec<Vec<BigRational>> = m
        .iter()
        .enumerate()
        .map(|(i, row)| {
            let mut r = row.clone();
            r.extend((0..n).map(|j| if i == j { BigRational::one() } else { BigRational::zero() }));
            r
        })
        .collect();
    for c in 0..n {
        let sel = (c..n)
            .find(|&i| !a[i][c].is_zero())
            .ok_or_else(|| Error::integrity("singular simplex matrix"))?;
        a.swap(c, sel);
        let inv = a[c][c].recip();
        for x in a[c].iter_mut() {
            *x *= &inv;
        }
        let pivot = a[c].clone();
        for (i, row) in a.iter_mut().enumerate() {
            if i != c && !row[c].is_zero() {
                let f = row[c].clone();
                for (x, p) in row.iter_mut().zip(&pivot) {
                    *x -= &f * p;
                }
            }
        }
    }
    Ok(a.into_iter().map(|row| row[n..].to_vec()).collect())
}
