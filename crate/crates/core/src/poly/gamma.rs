use num_bigint::BigInt;
use num_traits::{Signed, Zero};
use serde::Serialize;

use super::IntPolynomial;
use crate::error::{Error, Result};

/// Coefficients of a palindromic polynomial in the basis
/// `x^i (1+x)^(d-2i)`, `i = 0..=d/2`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GammaVector {
    #[serde(serialize_with = "super::serialize_decimal")]
    pub gammas: Vec<BigInt>,
    pub degree: usize,
}

impl GammaVector {
    /// `sum_i gamma_i x^i (1+x)^(d-2i)`
    pub fn reconstruct(&self) -> IntPolynomial {
        self.gammas
            .iter()
            .enumerate()
            .fold(IntPolynomial::zero(), |acc, (i, g)| {
                &acc + &basis(i, self.degree).scale(g)
            })
    }

    pub fn is_positive(&self) -> bool {
        self.gammas.iter().all(|g| !g.is_negative())
    }

    /// The gamma-polynomial `sum_i gamma_i x^i`.
    pub fn as_polynomial(&self) -> IntPolynomial {
        IntPolynomial::new(self.gammas.clone())
    }
}

fn basis(i: usize, d: usize) -> IntPolynomial {
    let mut p = IntPolynomial::linear_power(1, d - 2 * i);
    p = &IntPolynomial::monomial(BigInt::from(1), i) * &p;
    p
}

/// Writes a palindromic `f` (with respect to `d`) in the gamma basis.
pub fn gamma_extract(f: &IntPolynomial, d: usize) -> Result<GammaVector> {
    if !f.is_palindromic(d)? {
        return Err(Error::precondition(format!("{f} is not palindromic of degree {d}")));
    }
    let mut rest = f.clone();
    let mut gammas = Vec::with_capacity(d / 2 + 1);
    for i in 0..=d / 2 {
        let g = rest.coeff(i);
        if !g.is_zero() {
            rest = &rest - &basis(i, d).scale(&g);
        }
        gammas.push(g);
    }
    if !rest.is_zero() {
        return Err(Error::integrity(format!("gamma expansion left remainder {rest}")));
    }
    while gammas.last().is_some_and(Zero::is_zero) {
        gammas.pop();
    }
    Ok(GammaVector { gammas, degree: d })
}

/// `(x+1)^d g(4x/(x+1)^2) = sum_k g_k 4^k x^k (x+1)^(d-2k)`.
pub fn gamma_substitute(g: &IntPolynomial, d: usize) -> Result<IntPolynomial> {
    if let Some(deg) = g.degree() {
        if 2 * deg > d {
            return Err(Error::precondition(format!(
                "twice the degree {deg} exceeds {d}"
            )));
        }
    }
    let mut out = IntPolynomial::zero();
    let mut four_k = BigInt::from(1);
    for (k, c) in g.coeffs().iter().enumerate() {
        if !c.is_zero() {
            out = &out + &basis(k, d).scale(&(c * &four_k));
        }
        four_k *= 4;
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(c: &[i64]) -> IntPolynomial {
        IntPolynomial::from_i64s(c)
    }

    fn big(c: &[i64]) -> Vec<BigInt> {
        c.iter().map(|&x| BigInt::from(x)).collect()
    }

    #[test]
    fn extract_examples() {
        assert_eq!(gamma_extract(&p(&[1, 6, 1]), 2).unwrap().gammas, big(&[1, 4]));
        for d in 0..8 {
            let g = gamma_extract(&IntPolynomial::linear_power(1, d), d).unwrap();
            assert_eq!(g.gammas, big(&[1]));
        }
        assert!(matches!(gamma_extract(&p(&[1, 2]), 1), Err(Error::Precondition(_))));
    }

    #[test]
    fn substitute_examples() {
        assert_eq!(gamma_substitute(&p(&[1]), 3).unwrap(), p(&[1, 3, 3, 1]));
        assert_eq!(gamma_substitute(&p(&[1, 1]), 2).unwrap(), p(&[1, 6, 1]));
        assert!(gamma_substitute(&p(&[1, 1]), 1).is_err());
        assert!(gamma_substitute(&IntPolynomial::zero(), 0).unwrap().is_zero());
    }

    #[test]
    fn gamma_vector_reconstructs() {
        let f = p(&[1, 20, 54, 20, 1]);
        let g = gamma_extract(&f, 4).unwrap();
        assert_eq!(g.gammas, big(&[1, 16, 16]));
        assert!(g.is_positive());
        assert_eq!(g.reconstruct(), f);
        let neg = gamma_extract(&p(&[1, 1, 1]), 2).unwrap();
        assert_eq!(neg.gammas, big(&[1, -1]));
        assert!(!neg.is_positive());
    }
}
