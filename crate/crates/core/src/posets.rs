//! Naturally labeled posets, linear extensions, P-Eulerian and order
//! polynomials, and the closed forms for two disjoint chains.

use std::fmt::Write as _;

use num_bigint::BigInt;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::graphs::Graph;
use crate::limits::Limits;
use crate::poly::{binomial, IntPolynomial};

/// Strict partial order on `1..=d` in which `u < v` in the order implies
/// `u < v` as integers.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct Poset {
    d: usize,
    covers: Vec<(usize, usize)>,
    #[serde(skip)]
    below: Vec<u64>,
}

impl Poset {
    /// Builds the order generated by `relations`. Rejects labels that are not
    /// natural.
    pub fn new(d: usize, relations: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        if d > 64 {
            return Err(Error::invalid("posets are limited to 64 elements"));
        }
        let mut below = vec![0u64; d + 1];
        for (u, v) in relations {
            if u == 0 || v == 0 || u > d || v > d {
                return Err(Error::invalid(format!("relation {u} < {v} outside 1..={d}")));
            }
            if u >= v {
                return Err(Error::invalid(format!(
                    "relation {u} < {v} is not naturally labeled (needs the smaller label below)"
                )));
            }
            below[v] |= 1 << (u - 1);
        }
        for v in 1..=d {
            let mut acc = below[v];
            for u in 1..v {
                if acc >> (u - 1) & 1 == 1 {
                    acc |= below[u];
                }
            }
            below[v] = acc;
        }
        let mut covers = Vec::new();
        for v in 1..=d {
            for u in 1..v {
                if below[v] >> (u - 1) & 1 == 1
                    && !(u + 1..v).any(|w| below[v] >> (w - 1) & 1 == 1 && below[w] >> (u - 1) & 1 == 1)
                {
                    covers.push((u, v));
                }
            }
        }
        covers.sort_unstable();
        Ok(Poset { d, covers, below })
    }

    /// Relabels an arbitrary acyclic relation so that it becomes naturally
    /// labeled. Returns the poset and `new_label[old]` (index 0 unused).
    /// The labeling changes W(P) in general.
    pub fn natural_relabeling(
        d: usize,
        relations: &[(usize, usize)],
    ) -> Result<(Poset, Vec<usize>)> {
        let mut indegree = vec![0usize; d + 1];
        let mut out = vec![Vec::new(); d + 1];
        for &(u, v) in relations {
            if u == 0 || v == 0 || u > d || v > d || u == v {
                return Err(Error::invalid(format!("relation {u} < {v} is not valid")));
            }
            out[u].push(v);
            indegree[v] += 1;
        }
        let mut label = vec![0usize; d + 1];
        let mut next = 1;
        while next <= d {
            let Some(v) = (1..=d).find(|&v| label[v] == 0 && indegree[v] == 0) else {
                return Err(Error::invalid("relations contain a cycle"));
            };
            label[v] = next;
            next += 1;
            for &w in &out[v] {
                indegree[w] -= 1;
            }
        }
        let poset = Poset::new(d, relations.iter().map(|&(u, v)| (label[u], label[v])))?;
        Ok((poset, label))
    }

    pub fn chain(d: usize) -> Poset {
        Poset::new(d, (1..d).map(|i| (i, i + 1))).expect("chain is naturally labeled")
    }

    pub fn antichain(d: usize) -> Poset {
        Poset::new(d, []).expect("antichain is valid")
    }

    pub fn d(&self) -> usize {
        self.d
    }

    /// Cover relations `(u, v)`, sorted.
    pub fn covers(&self) -> &[(usize, usize)] {
        &self.covers
    }

    /// `u < v` in the order.
    pub fn less(&self, u: usize, v: usize) -> bool {
        u < v && self.below[v] >> (u - 1) & 1 == 1
    }

    pub fn comparable(&self, u: usize, v: usize) -> bool {
        self.less(u, v) || self.less(v, u)
    }
}

/// Disjoint chains `1 < … < p` and `p+1 < … < p+q`.
pub fn two_chain_poset(p: usize, q: usize) -> Result<Poset> {
    if p == 0 || q == 0 {
        return Err(Error::precondition("both chains need at least one element"));
    }
    let first = (1..p).map(|i| (i, i + 1));
    let second = (p + 1..p + q).map(|i| (i, i + 1));
    Poset::new(p + q, first.chain(second))
}

/// Every naturally labeled poset on `1..=d`.
pub fn all_naturally_labeled_posets(d: usize) -> Vec<Poset> {
    assert!(d <= 7, "enumeration is limited to 7 elements");
    let pairs: Vec<(usize, usize)> =
        (1..=d).flat_map(|v| (1..v).map(move |u| (u, v))).collect();
    let mut out = Vec::new();
    for mask in 0u64..(1 << pairs.len()) {
        let rel: Vec<(usize, usize)> =
            pairs.iter().enumerate().filter(|(i, _)| mask >> i & 1 == 1).map(|(_, &e)| e).collect();
        let closed = rel.iter().all(|&(u, v)| {
            rel.iter().filter(|&&(a, _)| a == v).all(|&(_, w)| rel.contains(&(u, w)))
        });
        if closed {
            out.push(Poset::new(d, rel).expect("pairs are naturally labeled"));
        }
    }
    out
}

/// Graph whose edges are the incomparable pairs of `p`.
pub fn complement_comparability_graph(p: &Poset) -> Graph {
    let edges = (1..=p.d)
        .flat_map(|v| (1..v).map(move |u| (u, v)))
        .filter(|&(u, v)| !p.comparable(u, v));
    Graph::new(p.d, edges).expect("pairs are valid edges")
}

/// `Σ_π x^des(π)` over linear extensions, where a descent is a position
/// with `π(i) > π(i+1)`.
pub fn eulerian_polynomial(p: &Poset, limits: &Limits) -> Result<IntPolynomial> {
    let mut walk = Extensions {
        poset: p,
        budget: limits.extension_budget,
        seen: 0,
        counts: vec![0; p.d.max(1)],
    };
    walk.descend(0, 0, 0)?;
    Ok(IntPolynomial::from_u64s(&walk.counts))
}

/// Number of linear extensions.
pub fn linear_extension_count(p: &Poset, limits: &Limits) -> Result<u64> {
    Ok(eulerian_polynomial(p, limits)?.coeffs().iter().map(|c| u64::try_from(c).unwrap_or(0)).sum())
}

struct Extensions<'a> {
    poset: &'a Poset,
    budget: u64,
    seen: u64,
    counts: Vec<u64>,
}

impl Extensions<'_> {
    fn descend(&mut self, placed: u64, last: usize, descents: usize) -> Result<()> {
        let d = self.poset.d;
        if placed.count_ones() as usize == d {
            self.seen += 1;
            if self.seen > self.budget {
                return Err(Error::ResourceLimit { what: "linear extensions", limit: self.budget });
            }
            self.counts[descents] += 1;
            return Ok(());
        }
        for v in 1..=d {
            let bit = 1u64 << (v - 1);
            if placed & bit == 0 && self.poset.below[v] & !placed == 0 {
                let step = usize::from(last > v);
                self.descend(placed | bit, v, descents + step)?;
            }
        }
        Ok(())
    }
}

/// `Ω(P, m)` for `m = 1..=m_max`: order-preserving maps `σ: P → [m]`
/// with `u < v ⇒ σ(u) <= σ(v)`.
pub fn order_polynomial_values(p: &Poset, m_max: usize, limits: &Limits) -> Result<Vec<BigInt>> {
    let mut out = Vec::with_capacity(m_max);
    for m in 1..=m_max {
        let mut sigma = vec![0usize; p.d + 1];
        let mut visited = 0u64;
        out.push(BigInt::from(count_maps(p, m, 1, &mut sigma, &mut visited, limits.extension_budget)?));
    }
    Ok(out)
}

fn count_maps(
    p: &Poset,
    m: usize,
    v: usize,
    sigma: &mut [usize],
    visited: &mut u64,
    budget: u64,
) -> Result<u64> {
    if v > p.d {
        return Ok(1);
    }
    *visited += 1;
    if *visited > budget {
        return Err(Error::ResourceLimit { what: "order-preserving maps", limit: budget });
    }
    let low = (1..v).filter(|&u| p.less(u, v)).map(|u| sigma[u]).max().unwrap_or(1);
    let mut total = 0;
    for value in low..=m {
        sigma[v] = value;
        total += count_maps(p, m, v + 1, sigma, visited, budget)?;
    }
    Ok(total)
}

/// W(P) recovered from order-polynomial values: the series
/// `Σ_m Ω(P, m+1) x^m` times `(1-x)^(d+1)`, truncated to degree `d`.
pub fn eulerian_via_order_polynomial(p: &Poset, limits: &Limits) -> Result<IntPolynomial> {
    let d = p.d;
    let omega = order_polynomial_values(p, d + 1, limits)?;
    let series = IntPolynomial::new(omega);
    let product = &series * &IntPolynomial::linear_power(-1, d + 1).scale(&BigInt::from((-1i64).pow(d as u32 + 1)));
    Ok(IntPolynomial::new(product.coeffs().iter().take(d + 1).cloned().collect()))
}

/// `Σ_i C(p,i) C(q,i) x^i`, the P-Eulerian polynomial of two disjoint chains.
pub fn kpq_eulerian(p: usize, q: usize) -> IntPolynomial {
    IntPolynomial::new((0..=p.min(q)).map(|i| binomial(p, i) * binomial(q, i)).collect())
}

/// `Σ_i 4^i C(p,i) C(q,i) x^i (x+1)^(p+q-2i)`.
pub fn kpq_hstar(p: usize, q: usize) -> Result<IntPolynomial> {
    if p == 0 || q == 0 {
        return Err(Error::precondition("p and q must be positive"));
    }
    let mut total = IntPolynomial::zero();
    for i in 0..=p.min(q) {
        let c = binomial(p, i) * binomial(q, i) * (BigInt::from(1) << (2 * i));
        let term = &IntPolynomial::monomial(c, i) * &IntPolynomial::linear_power(1, p + q - 2 * i);
        total = &total + &term;
    }
    Ok(total)
}

/// Reads `d` followed by lines `u < v`. `#` starts a comment.
pub fn parse_poset(text: &str) -> Result<Poset> {
    let mut d = None;
    let mut relations = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let lineno = i + 1;
        match d {
            None => {
                d = Some(line.parse::<usize>().map_err(|_| Error::parse(lineno, "expected element count"))?);
            }
            Some(_) => {
                let (a, b) = line
                    .split_once('<')
                    .ok_or_else(|| Error::parse(lineno, "expected a relation `u < v`"))?;
                let u = a.trim().parse().map_err(|_| Error::parse(lineno, "bad element label"))?;
                let v = b.trim().parse().map_err(|_| Error::parse(lineno, "bad element label"))?;
                relations.push((lineno, u, v));
            }
        }
    }
    let d = d.ok_or_else(|| Error::parse(0, "missing element count"))?;
    for &(lineno, u, v) in &relations {
        if u == 0 || v == 0 || u > d || v > d {
            return Err(Error::parse(lineno, format!("element out of range 1..={d}")));
        }
        if u >= v {
            return Err(Error::parse(
                lineno,
                format!("{u} < {v} is not naturally labeled; relabel so smaller elements get smaller labels"),
            ));
        }
    }
    Poset::new(d, relations.into_iter().map(|(_, u, v)| (u, v)))
}

/// Writes the cover relations in the format read by [`parse_poset`].
pub fn write_poset(p: &Poset) -> String {
    let mut s = format!("{}\n", p.d);
    for (u, v) in &p.covers {
        let _ = writeln!(s, "{u} < {v}");
    }
    s
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::interior::interior_hat_via_matchings;
    use crate::poly::gamma_substitute;

    fn lim() -> Limits {
        Limits::default()
    }

    fn p(c: &[i64]) -> IntPolynomial {
        IntPolynomial::from_i64s(c)
    }

    fn permutations(d: usize) -> Vec<Vec<usize>> {
        if d == 0 {
            return vec![vec![]];
        }
        let mut out = Vec::new();
        for perm in permutations(d - 1) {
            for pos in 0..=perm.len() {
                let mut next = perm.clone();
                next.insert(pos, d);
                out.push(next);
            }
        }
        out
    }

    // Filters all permutations of 1..=d rather than building extensions.
    fn eulerian_by_permutations(poset: &Poset) -> IntPolynomial {
        let d = poset.d();
        let mut counts = vec![0u64; d.max(1)];
        for w in permutations(d) {
            let ok = (0..d).all(|i| (i + 1..d).all(|j| !poset.less(w[j], w[i])));
            if ok {
                counts[w.windows(2).filter(|x| x[0] > x[1]).count()] += 1;
            }
        }
        IntPolynomial::from_u64s(&counts)
    }

    #[test]
    fn construction() {
        let q = Poset::new(4, [(1, 2), (2, 3), (1, 3), (1, 4)]).unwrap();
        assert_eq!(q.covers(), &[(1, 2), (1, 4), (2, 3)]);
        assert!(q.less(1, 3));
        assert!(!q.comparable(3, 4));
        assert!(matches!(Poset::new(2, [(2, 1)]), Err(Error::InvalidInput(_))));
        assert!(Poset::new(2, [(1, 1)]).is_err());
        assert!(Poset::new(2, [(1, 3)]).is_err());
    }

    #[test]
    fn natural_relabeling() {
        let (q, label) = Poset::natural_relabeling(3, &[(3, 1), (1, 2)]).unwrap();
        assert_eq!(label[1..], [2, 3, 1]);
        assert_eq!(q.covers(), &[(1, 2), (2, 3)]);
        assert!(Poset::natural_relabeling(2, &[(1, 2), (2, 1)]).is_err());
    }

    #[test]
    fn eulerian_examples() {
        assert_eq!(eulerian_polynomial(&Poset::chain(5), &lim()).unwrap(), p(&[1]));
        assert_eq!(eulerian_polynomial(&Poset::antichain(2), &lim()).unwrap(), p(&[1, 1]));
        assert_eq!(eulerian_polynomial(&two_chain_poset(2, 2).unwrap(), &lim()).unwrap(), p(&[1, 4, 1]));
        assert_eq!(eulerian_polynomial(&Poset::antichain(3), &lim()).unwrap(), p(&[1, 4, 1]));
        let tight = Limits { extension_budget: 5, ..lim() };
        assert!(matches!(
            eulerian_polynomial(&Poset::antichain(3), &tight),
            Err(Error::ResourceLimit { .. })
        ));
    }

    #[test]
    fn eulerian_matches_permutation_filter() {
        for d in 1..=5 {
            for poset in all_naturally_labeled_posets(d) {
                assert_eq!(eulerian_polynomial(&poset, &lim()).unwrap(), eulerian_by_permutations(&poset));
            }
        }
    }

    #[test]
    fn naturally_labeled_counts() {
        let counts: Vec<usize> = (1..=4).map(|d| all_naturally_labeled_posets(d).len()).collect();
        assert_eq!(counts, vec![1, 2, 7, 40]);
    }

    #[test]
    fn order_polynomial_examples() {
        let one = BigInt::from(1);
        assert_eq!(order_polynomial_values(&Poset::chain(2), 2, &lim()).unwrap()[1], BigInt::from(3));
        assert_eq!(order_polynomial_values(&Poset::antichain(2), 2, &lim()).unwrap()[1], BigInt::from(4));
        for poset in all_naturally_labeled_posets(3) {
            assert_eq!(order_polynomial_values(&poset, 1, &lim()).unwrap(), vec![one.clone()]);
        }
    }

    #[test]
    fn order_polynomial_bridge() {
        for d in 1..=5 {
            for poset in all_naturally_labeled_posets(d) {
                assert_eq!(
                    eulerian_via_order_polynomial(&poset, &lim()).unwrap(),
                    eulerian_polynomial(&poset, &lim()).unwrap()
                );
            }
        }
    }

    #[test]
    fn two_chain_examples() {
        assert_eq!(two_chain_poset(1, 1).unwrap(), Poset::antichain(2));
        assert_eq!(two_chain_poset(2, 1).unwrap().covers(), &[(1, 2)]);
        assert_eq!(two_chain_poset(2, 2).unwrap().covers(), &[(1, 2), (3, 4)]);
        assert!(two_chain_poset(0, 2).is_err());
    }

    #[test]
    fn complement_examples() {
        for (a, b) in [(1, 1), (2, 3), (3, 2)] {
            let g = complement_comparability_graph(&two_chain_poset(a, b).unwrap());
            assert_eq!(g, Graph::complete_bipartite(a, b));
        }
        assert_eq!(complement_comparability_graph(&Poset::chain(4)), Graph::empty(4));
        assert_eq!(complement_comparability_graph(&Poset::antichain(4)), Graph::complete(4));
    }

    #[test]
    fn kpq_examples() {
        assert_eq!(kpq_hstar(1, 1).unwrap(), p(&[1, 6, 1]));
        assert_eq!(kpq_hstar(2, 2).unwrap(), p(&[1, 20, 54, 20, 1]));
        for a in 1..=4 {
            for b in 1..=4 {
                let h = kpq_hstar(a, b).unwrap();
                assert_eq!(h.eval_at_one(), (BigInt::from(1) << (a + b)) * binomial(a + b, a));
                assert_eq!(h, gamma_substitute(&kpq_eulerian(a, b), a + b).unwrap());
            }
        }
    }

    #[test]
    fn eulerian_equals_hat_interior_for_narrow_posets() {
        for d in 1..=5 {
            for poset in all_naturally_labeled_posets(d) {
                let g = complement_comparability_graph(&poset);
                if g.is_bipartite() {
                    assert_eq!(
                        interior_hat_via_matchings(&g, &lim()).unwrap(),
                        eulerian_polynomial(&poset, &lim()).unwrap(),
                        "{:?}",
                        poset.covers()
                    );
                }
            }
        }
    }

    #[test]
    fn text_format() {
        let q = parse_poset("# two chains\n4\n1 < 2\n3 < 4\n").unwrap();
        assert_eq!(q, two_chain_poset(2, 2).unwrap());
        assert_eq!(parse_poset(&write_poset(&q)).unwrap(), q);
        let err = parse_poset("3\n2 < 1\n").unwrap_err();
        assert!(matches!(err, Error::Parse { line: 2, .. }));
        assert!(err.to_string().contains("naturally labeled"));
        assert!(parse_poset("3\n1 2\n").is_err());
        assert!(parse_poset("").is_err());
    }
}
