use super::{LatticePolytope, Point};
use crate::error::{Error, Result};
use crate::limits::Limits;

/// Integer points of the `n`-th dilate, in lexicographic order.
pub fn lattice_points(p: &LatticePolytope, n: u64, limits: &Limits) -> Result<Vec<Point>> {
    let mut out = Vec::new();
    scan(p, n, limits, |x| out.push(x.to_vec()))?;
    Ok(out)
}

/// Number of integer points of the `n`-th dilate.
pub fn count_lattice_points(p: &LatticePolytope, n: u64, limits: &Limits) -> Result<u64> {
    let mut count = 0u64;
    scan(p, n, limits, |_| count += 1)?;
    Ok(count)
}

struct Row {
    normal: Vec<i64>,
    rhs: i128,
    equality: bool,
    // suffix_min[k] / suffix_max[k]: extreme values of sum_{i >= k} a_i x_i over the box
    suffix_min: Vec<i128>,
    suffix_max: Vec<i128>,
}

/// Scans the bounding box of `n * p` coordinate by coordinate, pruning a
/// prefix as soon as some constraint cannot be met by any completion. Every
/// coordinate value tried counts against the point budget.
fn scan(p: &LatticePolytope, n: u64, limits: &Limits, mut visit: impl FnMut(&[i64])) -> Result<()> {
    let desc = p.facet_description(limits)?;
    let dim = p.ambient_dim();
    let scale = n as i64;
    if n == 0 {
        visit(&vec![0; dim]);
        return Ok(());
    }
    let mut lo = vec![i64::MAX; dim];
    let mut hi = vec![i64::MIN; dim];
    for g in p.generators() {
        for i in 0..dim {
            lo[i] = lo[i].min(g[i] * scale);
            hi[i] = hi[i].max(g[i] * scale);
        }
    }
    let mut rows: Vec<Row> = Vec::new();
    let mut push = |normal: &[i64], rhs: i64, equality: bool| {
        let mut suffix_min = vec![0i128; dim + 1];
        let mut suffix_max = vec![0i128; dim + 1];
        for k in (0..dim).rev() {
            let a = normal[k] as i128;
            let (x, y) = (a * lo[k] as i128, a * hi[k] as i128);
            suffix_min[k] = suffix_min[k + 1] + x.min(y);
            suffix_max[k] = suffix_max[k + 1] + x.max(y);
        }
        rows.push(Row {
            normal: normal.to_vec(),
            rhs: rhs as i128 * n as i128,
            equality,
            suffix_min,
            suffix_max,
        });
    };
    for e in &desc.equations {
        push(&e.normal, e.rhs, true);
    }
    for h in &desc.facets {
        push(&h.normal, h.rhs, false);
    }

    let mut walk = Walk {
        lo: &lo,
        hi: &hi,
        rows: &rows,
        point: vec![0i64; dim],
        partial: vec![0i128; rows.len()],
        tried: 0,
        budget: limits.point_budget,
    };
    walk.recurse(0, &mut visit)
}

struct Walk<'a> {
    lo: &'a [i64],
    hi: &'a [i64],
    rows: &'a [Row],
    point: Vec<i64>,
    partial: Vec<i128>,
    tried: u64,
    budget: u64,
}

impl Walk<'_> {
    fn recurse(&mut self, k: usize, visit: &mut impl FnMut(&[i64])) -> Result<()> {
        let dim = self.lo.len();
        let rows = self.rows;
        for x in self.lo[k]..=self.hi[k] {
            self.tried += 1;
            if self.tried > self.budget {
                return Err(Error::ResourceLimit { what: "lattice point scan", limit: self.budget });
            }
            self.point[k] = x;
            let feasible = rows.iter().zip(&self.partial).all(|(row, p)| {
                let s = p + row.normal[k] as i128 * x as i128;
                s + row.suffix_min[k + 1] <= row.rhs && !(row.equality && s + row.suffix_max[k + 1] < row.rhs)
            });
            if !feasible {
                continue;
            }
            if k + 1 == dim {
                visit(&self.point);
                continue;
            }
            for (p, row) in self.partial.iter_mut().zip(rows) {
                *p += row.normal[k] as i128 * x as i128;
            }
            self.recurse(k + 1, visit)?;
            for (p, row) in self.partial.iter_mut().zip(rows) {
                *p -= row.normal[k] as i128 * x as i128;
            }
        }
        Ok(())
    }
}
