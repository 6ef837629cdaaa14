//! Sturm sequences, squarefree decomposition, exact root isolation and the
//! interlacing test. No floating point is used anywhere.

use std::cmp::Ordering;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Serialize, Serializer};

use super::IntPolynomial;
use crate::error::{Error, Result};

/// Open rational interval `(lo, hi)` containing exactly one real root.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RootInterval {
    pub lo: BigRational,
    pub hi: BigRational,
}

impl Serialize for RootInterval {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        [self.lo.to_string(), self.hi.to_string()].serialize(s)
    }
}

/// Outcome of an exact real-root analysis.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RootCountCertificate {
    pub total_degree: usize,
    /// Distinct real roots (those of the squarefree part).
    pub distinct_real_roots: usize,
    pub is_real_rooted: bool,
    /// One interval per distinct real root, in increasing order.
    pub isolating_intervals: Vec<RootInterval>,
}

/// Sturm sequence of a polynomial, reduced by positive contents at each step.
#[derive(Debug, Clone)]
pub struct SturmSequence {
    seq: Vec<IntPolynomial>,
}

impl SturmSequence {
    pub fn new(f: &IntPolynomial) -> Self {
        let mut seq = vec![reduce_content(f)];
        if f.degree().unwrap_or(0) == 0 {
            return SturmSequence { seq };
        }
        seq.push(reduce_content(&f.derivative()));
        loop {
            let n = seq.len();
            let r = signed_remainder(&seq[n - 2], &seq[n - 1]);
            if r.is_zero() {
                break;
            }
            seq.push(reduce_content(&-&r));
        }
        SturmSequence { seq }
    }

    pub fn len(&self) -> usize {
        self.seq.len()
    }

    pub fn is_empty(&self) -> bool {
        self.seq.is_empty()
    }

    fn variations<I: Iterator<Item = Ordering>>(signs: I) -> usize {
        let mut last = Ordering::Equal;
        let mut count = 0;
        for s in signs.filter(|s| *s != Ordering::Equal) {
            if last != Ordering::Equal && s != last {
                count += 1;
            }
            last = s;
        }
        count
    }

    /// Sign changes of the sequence evaluated at `x`.
    pub fn variations_at(&self, x: &BigRational) -> usize {
        Self::variations(self.seq.iter().map(|p| sign_at(p, x)))
    }

    fn variations_at_infinity(&self, positive: bool) -> usize {
        Self::variations(self.seq.iter().map(|p| {
            let lc = p.leading_coeff().map_or(Ordering::Equal, |c| c.sign_ordering());
            let deg = p.degree().unwrap_or(0);
            if positive || deg % 2 == 0 {
                lc
            } else {
                lc.reverse()
            }
        }))
    }

    /// Distinct roots in `(a, b]`, for `a < b` and `a` not a root.
    pub fn count_in(&self, a: &BigRational, b: &BigRational) -> usize {
        self.variations_at(a).saturating_sub(self.variations_at(b))
    }

    /// Distinct real roots on the whole line.
    pub fn count_real(&self) -> usize {
        self.variations_at_infinity(false)
            .saturating_sub(self.variations_at_infinity(true))
    }
}

trait SignOrdering {
    fn sign_ordering(&self) -> Ordering;
}

impl SignOrdering for BigInt {
    fn sign_ordering(&self) -> Ordering {
        self.cmp(&BigInt::zero())
    }
}

/// Sign of `f(x)` for rational `x`, computed on the homogenised numerator.
fn sign_at(f: &IntPolynomial, x: &BigRational) -> Ordering {
    let (p, q) = (x.numer(), x.denom());
    let c = f.coeffs();
    if c.is_empty() {
        return Ordering::Equal;
    }
    // q > 0, so sign(sum a_i p^i q^(n-i)) = sign(f(p/q))
    let mut acc = BigInt::zero();
    let mut q_pow = BigInt::one();
    let mut terms = Vec::with_capacity(c.len());
    for _ in 0..c.len() {
        terms.push(q_pow.clone());
        q_pow *= q;
    }
    let n = c.len() - 1;
    for (i, a) in c.iter().enumerate().rev() {
        acc = acc * p + a * &terms[n - i];
    }
    acc.sign_ordering()
}

fn reduce_content(f: &IntPolynomial) -> IntPolynomial {
    let g = f.content();
    if g.is_zero() || g.is_one() {
        return f.clone();
    }
    IntPolynomial::new(f.coeffs().iter().map(|c| c / &g).collect())
}

/// Remainder of `a` by `b` up to a positive constant factor.
fn signed_remainder(a: &IntPolynomial, b: &IntPolynomial) -> IntPolynomial {
    let db = b.degree().expect("divisor is nonzero");
    let lb = b.leading_coeff().expect("divisor is nonzero").clone();
    let (lb_abs, lb_neg) = (lb.abs(), lb.is_negative());
    let mut r = a.clone();
    while let Some(dr) = r.degree() {
        if dr < db {
            break;
        }
        let lr = r.leading_coeff().expect("nonzero").clone();
        let factor = if lb_neg { -lr } else { lr };
        let shifted = &IntPolynomial::monomial(factor, dr - db) * b;
        r = &r.scale(&lb_abs) - &shifted;
        r = reduce_content(&r);
    }
    r
}

/// Greatest common divisor, primitive with positive leading coefficient.
fn gcd(a: &IntPolynomial, b: &IntPolynomial) -> IntPolynomial {
    let (mut x, mut y) = (a.primitive_part(), b.primitive_part());
    if x.degree() < y.degree() {
        std::mem::swap(&mut x, &mut y);
    }
    while !y.is_zero() {
        let r = signed_remainder(&x, &y).primitive_part();
        x = y;
        y = r;
    }
    x.primitive_part()
}

/// `a / b` up to a constant, when `b` divides `a` over the rationals.
fn divide_exact(a: &IntPolynomial, b: &IntPolynomial) -> IntPolynomial {
    let db = b.degree().expect("divisor is nonzero");
    let mut rem: Vec<BigRational> = a.coeffs().iter().map(|c| BigRational::from(c.clone())).collect();
    let lb = BigRational::from(b.leading_coeff().expect("nonzero").clone());
    let da = match a.degree() {
        Some(da) if da >= db => da,
        _ => return IntPolynomial::zero(),
    };
    let mut quot = vec![BigRational::zero(); da - db + 1];
    for k in (0..=da - db).rev() {
        let coef = &rem[k + db] / &lb;
        for (j, bj) in b.coeffs().iter().enumerate() {
            rem[k + j] -= &coef * BigRational::from(bj.clone());
        }
        quot[k] = coef;
    }
    debug_assert!(rem.iter().all(Zero::is_zero), "inexact division");
    let lcm = quot.iter().fold(BigInt::one(), |l, c| l.lcm(c.denom()));
    IntPolynomial::new(
        quot.iter()
            .map(|c| (c * BigRational::from(lcm.clone())).to_integer())
            .collect(),
    )
    .primitive_part()
}

fn squarefree_part(f: &IntPolynomial) -> IntPolynomial {
    if f.degree().unwrap_or(0) == 0 {
        return f.primitive_part();
    }
    divide_exact(f, &gcd(f, &f.derivative()))
}

/// Factors `(m, p_m)` with `f = c * prod p_m^m`, each `p_m` squarefree,
/// pairwise coprime and of positive degree.
///
/// Built by repeated squarefree reduction: `g_0 = f`, `g_{i+1} = gcd(g_i, g_i')`;
/// `g_{i-1}/g_i` collects the roots of multiplicity at least `i`.
pub fn squarefree_decomposition(f: &IntPolynomial) -> Vec<(usize, IntPolynomial)> {
    let mut gs = vec![f.primitive_part()];
    while gs.last().and_then(IntPolynomial::degree).unwrap_or(0) > 0 {
        let g = gs.last().expect("nonempty");
        gs.push(gcd(g, &g.derivative()));
    }
    // at_least[i-1]: product of distinct roots with multiplicity >= i
    let at_least: Vec<IntPolynomial> = gs.windows(2).map(|w| divide_exact(&w[0], &w[1])).collect();
    let mut out = Vec::new();
    for (i, h) in at_least.iter().enumerate() {
        let exact = match at_least.get(i + 1) {
            Some(next) => divide_exact(h, next),
            None => h.clone(),
        };
        if exact.degree().unwrap_or(0) > 0 {
            out.push((i + 1, exact));
        }
    }
    out
}

/// Integer `B` with every complex root of `f` strictly inside `|z| < B`.
pub fn cauchy_bound(f: &IntPolynomial) -> BigInt {
    let lc = f.leading_coeff().map(BigInt::abs).unwrap_or_else(BigInt::one);
    let max = f
        .coeffs()
        .iter()
        .rev()
        .skip(1)
        .map(BigInt::abs)
        .max()
        .unwrap_or_default();
    BigInt::from(2) + max / lc
}

/// Isolating intervals (increasing) for the real roots of squarefree `f`.
fn isolate(f: &IntPolynomial) -> Vec<RootInterval> {
    let sturm = SturmSequence::new(f);
    let b = BigRational::from(cauchy_bound(f));
    let lo = -b.clone();
    let total = sturm.count_in(&lo, &b);
    let mut out = Vec::new();
    let mut stack = vec![(lo, b, total)];
    while let Some((lo, hi, count)) = stack.pop() {
        match count {
            0 => {}
            1 => out.push(RootInterval { lo, hi }),
            _ => {
                let mid = split_point(f, &lo, &hi);
                let left = sturm.count_in(&lo, &mid);
                stack.push((mid.clone(), hi, count - left));
                stack.push((lo, mid, left));
            }
        }
    }
    out.sort_by(|a, b| a.lo.cmp(&b.lo));
    out
}

// A point strictly between lo and hi that is not a root of f.
fn split_point(f: &IntPolynomial, lo: &BigRational, hi: &BigRational) -> BigRational {
    let width = hi - lo;
    let mut denom = 2i64;
    loop {
        for num in 1..denom {
            let t = BigRational::new(num.into(), denom.into());
            let m = lo + &width * t;
            if sign_at(f, &m) != Ordering::Equal {
                return m;
            }
        }
        denom += 1;
    }
}

/// Exact distinct-real-root count and real-rootedness of a nonzero `f`.
pub fn real_root_certificate(f: &IntPolynomial) -> Result<RootCountCertificate> {
    let total_degree = f
        .degree()
        .ok_or_else(|| Error::precondition("the zero polynomial has no root certificate"))?;
    let sqf = squarefree_part(f);
    let sqf_deg = sqf.degree().unwrap_or(0);
    let isolating_intervals = isolate(&sqf);
    let distinct_real_roots = SturmSequence::new(&sqf).count_real();
    if distinct_real_roots != isolating_intervals.len() {
        return Err(Error::integrity("Sturm count disagrees with root isolation"));
    }
    let by_factor = squarefree_decomposition(f)
        .iter()
        .all(|(_, p)| SturmSequence::new(p).count_real() == p.degree().unwrap_or(0));
    let is_real_rooted = distinct_real_roots == sqf_deg;
    if by_factor != is_real_rooted {
        return Err(Error::integrity("squarefree factors disagree on real-rootedness"));
    }
    Ok(RootCountCertificate { total_degree, distinct_real_roots, is_real_rooted, isolating_intervals })
}

/// Real roots with multiplicity, largest first, as indices into the list of
/// distinct roots of `f * g` sorted decreasingly.
fn root_ranks(f: &IntPolynomial, intervals_desc: &[RootInterval]) -> Vec<usize> {
    let mut ranks = Vec::new();
    let factors: Vec<(usize, SturmSequence)> = squarefree_decomposition(f)
        .into_iter()
        .map(|(m, p)| (m, SturmSequence::new(&p)))
        .collect();
    for (rank, iv) in intervals_desc.iter().enumerate() {
        for (m, sturm) in &factors {
            if sturm.count_in(&iv.lo, &iv.hi) > 0 {
                ranks.extend(std::iter::repeat(rank).take(*m));
            }
        }
    }
    ranks
}

/// Whether the roots of `f` (a_1 >= a_2 >= ...) and `g` (b_1 >= b_2 >= ...)
/// alternate.
///
/// Equal degrees: `a_1 >= b_1 >= a_2 >= b_2 >= ... >= a_n >= b_n`.
/// `deg g = deg f + 1`: `b_1 >= a_1 >= b_2 >= ... >= a_n >= b_{n+1}`.
/// Roots are counted with multiplicity and compared exactly.
pub fn interlaces(f: &IntPolynomial, g: &IntPolynomial) -> Result<bool> {
    let (df, dg) = match (f.degree(), g.degree()) {
        (Some(a), Some(b)) => (a, b),
        _ => return Err(Error::precondition("interlacing needs nonzero polynomials")),
    };
    if dg != df && dg != df + 1 {
        return Err(Error::precondition(format!(
            "degrees {df} and {dg} must be equal or differ by one"
        )));
    }
    for (name, p) in [("first", f), ("second", g)] {
        if !real_root_certificate(p)?.is_real_rooted {
            return Err(Error::precondition(format!("{name} polynomial {p} is not real-rooted")));
        }
    }
    let mut intervals = isolate(&squarefree_part(&(f * g)));
    intervals.reverse();
    let a = root_ranks(f, &intervals);
    let b = root_ranks(g, &intervals);
    if a.len() != df || b.len() != dg {
        return Err(Error::integrity("root multiplicities do not add up to the degree"));
    }
    // a rank no larger means a root no smaller
    let ge = |x: usize, y: usize| x <= y;
    let ok = if dg == df {
        (0..df).all(|i| ge(a[i], b[i]) && (i + 1 == df || ge(b[i], a[i + 1])))
    } else {
        (0..df).all(|i| ge(b[i], a[i]) && ge(a[i], b[i + 1]))
    };
    Ok(ok)
}
