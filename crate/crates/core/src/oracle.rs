//! Brute-force coefficient oracle.
//!
//! Coefficients are read straight out of literal polynomial expansions,
//! `(1+x)^n` and `(1+x+x^2)^n`, using schoolbook convolution. Nothing here
//! touches the recurrences in [`crate::coeff`].

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::coeff::Coefficient;
use crate::error::{non_negative, Result};

/// Dense polynomial with exact integer coefficients, index = power of x.
///
/// Always canonical: no trailing zero coefficients, so the zero polynomial
/// has an empty coefficient list.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct IntegerPolynomial {
    coeffs: Vec<BigInt>,
}

impl IntegerPolynomial {
    pub fn new(coeffs: Vec<BigInt>) -> Self {
        let mut p = IntegerPolynomial { coeffs };
        p.trim();
        p
    }

    pub fn from_i64s(coeffs: &[i64]) -> Self {
        IntegerPolynomial::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn zero() -> Self {
        IntegerPolynomial::default()
    }

    pub fn one() -> Self {
        IntegerPolynomial {
            coeffs: vec![BigInt::one()],
        }
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Coefficient of `x^power`; zero for negative or out-of-range powers.
    pub fn coefficient(&self, power: i64) -> BigInt {
        usize::try_from(power)
            .ok()
            .and_then(|p| self.coeffs.get(p))
            .cloned()
            .unwrap_or_default()
    }

    pub fn is_palindrome(&self) -> bool {
        self.coeffs.iter().eq(self.coeffs.iter().rev())
    }

    fn trim(&mut self) {
        while self.coeffs.last().is_some_and(Zero::is_zero) {
            self.coeffs.pop();
        }
    }
}

/// Exact convolution product.
pub fn poly_mul(a: &IntegerPolynomial, b: &IntegerPolynomial) -> IntegerPolynomial {
    if a.is_zero() || b.is_zero() {
        return IntegerPolynomial::zero();
    }
    let mut out = vec![BigInt::zero(); a.coeffs.len() + b.coeffs.len() - 1];
    for (i, x) in a.coeffs.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.coeffs.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    IntegerPolynomial::new(out)
}

/// `base^n` by binary exponentiation; `base^0 = 1`.
pub fn poly_pow(base: &IntegerPolynomial, n: i64) -> Result<IntegerPolynomial> {
    let mut n = non_negative("exponent", n)?;
    let mut result = IntegerPolynomial::one();
    let mut square = base.clone();
    while n > 0 {
        if n & 1 == 1 {
            result = poly_mul(&result, &square);
        }
        n >>= 1;
        if n > 0 {
            square = poly_mul(&square, &square);
        }
    }
    Ok(result)
}

/// `(1+x)^n`.
pub fn binomial_expansion(n: i64) -> Result<IntegerPolynomial> {
    poly_pow(&IntegerPolynomial::from_i64s(&[1, 1]), n)
}

/// `(1+x+x^2)^n`, which is `x^n (1+x+1/x)^n`.
pub fn trinomial_expansion(n: i64) -> Result<IntegerPolynomial> {
    poly_pow(&IntegerPolynomial::from_i64s(&[1, 1, 1]), n)
}

/// Coefficient of `x^(n+k)` in `(1+x+x^2)^n`.
pub fn trinomial_oracle(n: i64, k: i64) -> Result<Coefficient> {
    let expansion = trinomial_expansion(n)?;
    Ok(to_coefficient(expansion.coefficient(n.saturating_add(k))))
}

/// Coefficient of `x^k` in `(1+x)^n`.
pub fn binomial_oracle(n: i64, k: i64) -> Result<Coefficient> {
    let expansion = binomial_expansion(n)?;
    Ok(to_coefficient(expansion.coefficient(k)))
}

pub(crate) fn to_coefficient(value: BigInt) -> Coefficient {
    // Expansions of polynomials with non-negative coefficients never go negative.
    debug_assert!(!value.is_negative());
    Coefficient::from(value.magnitude().clone())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ints(p: &IntegerPolynomial) -> Vec<i64> {
        p.coeffs().iter().map(|c| i64::try_from(c).unwrap()).collect()
    }

    #[test]
    fn mul_examples() {
        let t = IntegerPolynomial::from_i64s(&[1, 1, 1]);
        assert_eq!(ints(&poly_mul(&t, &t)), vec![1, 2, 3, 2, 1]);
        assert_eq!(poly_mul(&t, &IntegerPolynomial::one()), t);
        let a = IntegerPolynomial::from_i64s(&[1, 1]);
        let b = IntegerPolynomial::from_i64s(&[1, -1]);
        assert_eq!(ints(&poly_mul(&a, &b)), vec![1, 0, -1]);
    }

    #[test]
    fn mul_by_zero() {
        let t = IntegerPolynomial::from_i64s(&[1, 1, 1]);
        assert!(poly_mul(&t, &IntegerPolynomial::zero()).is_zero());
        assert_eq!(IntegerPolynomial::zero().degree(), None);
    }

    #[test]
    fn canonical_trailing_zeros() {
        let p = IntegerPolynomial::from_i64s(&[3, 0, 0]);
        assert_eq!(p.degree(), Some(0));
        assert!(IntegerPolynomial::from_i64s(&[0, 0]).is_zero());
    }

    #[test]
    fn pow_examples() {
        let t = IntegerPolynomial::from_i64s(&[1, 1, 1]);
        assert_eq!(ints(&poly_pow(&t, 2).unwrap()), vec![1, 2, 3, 2, 1]);
        assert_eq!(poly_pow(&t, 0).unwrap(), IntegerPolynomial::one());
        assert_eq!(
            poly_pow(&IntegerPolynomial::zero(), 0).unwrap(),
            IntegerPolynomial::one()
        );
        assert_eq!(
            ints(&binomial_expansion(8).unwrap()),
            vec![1, 8, 28, 56, 70, 56, 28, 8, 1]
        );
        assert!(poly_pow(&t, -1).is_err());
    }

    #[test]
    fn oracle_examples() {
        assert_eq!(trinomial_oracle(6, 2).unwrap(), 90);
        assert_eq!(trinomial_oracle(2, 0).unwrap(), 3);
        assert_eq!(trinomial_oracle(4, -4).unwrap(), 1);
        assert_eq!(trinomial_oracle(4, -5).unwrap(), 0);
        assert_eq!(trinomial_oracle(4, 5).unwrap(), 0);
        assert_eq!(binomial_oracle(8, 3).unwrap(), 56);
        assert_eq!(binomial_oracle(8, 9).unwrap(), 0);
        assert!(trinomial_oracle(-1, 0).is_err());
        assert!(binomial_oracle(-2, 0).is_err());
    }

    #[test]
    fn constant_term_is_one() {
        for n in 0..=60 {
            assert_eq!(binomial_oracle(n, 0).unwrap(), 1);
        }
    }

    #[test]
    fn binomial_ten_five_by_repeated_mul() {
        // independent of binary exponentiation
        let base = IntegerPolynomial::from_i64s(&[1, 1]);
        let p = (0..10).fold(IntegerPolynomial::one(), |acc, _| poly_mul(&acc, &base));
        assert_eq!(p.coefficient(5), BigInt::from(252));
        assert_eq!(binomial_oracle(10, 5).unwrap(), 252);
    }
}
