//! Pluggable coefficient providers for the identity evaluators.
//!
//! [`ExactCoefficients`] reads memoized recurrence rows; [`OracleCoefficients`]
//! reads literal polynomial expansions. Running the same identity through
//! both gives two independent routes to every value.

use std::collections::HashMap;
use std::sync::{Arc, Mutex};

use crate::coeff::{global_cache, Coefficient, RowCache};
use crate::oracle::{binomial_expansion, to_coefficient, trinomial_expansion, IntegerPolynomial};

pub trait CoefficientSource: Send + Sync {
    /// Zero-extended `C(n, k)`.
    fn binomial(&self, n: i64, k: i64) -> Coefficient;

    /// Zero-extended trinomial coefficient.
    fn trinomial(&self, n: i64, k: i64) -> Coefficient;

    /// Zero-extended multinomial, as a running product of this source's
    /// binomials.
    fn multinomial(&self, n: i64, parts: &[i64]) -> Coefficient {
        if n < 0 || parts.iter().any(|&p| p < 0) {
            return Coefficient::zero();
        }
        if parts.iter().try_fold(0i64, |acc, &p| acc.checked_add(p)) != Some(n) {
            return Coefficient::zero();
        }
        let mut acc = num_bigint::BigUint::from(1u32);
        let mut placed = 0i64;
        for &p in parts {
            placed += p;
            acc *= self.binomial(placed, p).into_inner();
        }
        Coefficient::from(acc)
    }
}

/// Recurrence rows from a [`RowCache`].
#[derive(Clone, Copy, Debug)]
pub struct ExactCoefficients<'a> {
    cache: &'a RowCache,
}

impl<'a> ExactCoefficients<'a> {
    pub fn new(cache: &'a RowCache) -> Self {
        ExactCoefficients { cache }
    }
}

impl ExactCoefficients<'static> {
    pub fn global() -> Self {
        ExactCoefficients::new(global_cache())
    }
}

impl Default for ExactCoefficients<'static> {
    fn default() -> Self {
        ExactCoefficients::global()
    }
}

impl CoefficientSource for ExactCoefficients<'_> {
    fn binomial(&self, n: i64, k: i64) -> Coefficient {
        self.cache.binomial(n, k)
    }

    fn trinomial(&self, n: i64, k: i64) -> Coefficient {
        self.cache.trinomial(n, k)
    }
}

type Expansions = Mutex<HashMap<i64, Arc<IntegerPolynomial>>>;

/// Coefficients extracted from `(1+x)^n` and `(1+x+x^2)^n`. Each expansion
/// is computed once per `n` and kept.
#[derive(Debug, Default)]
pub struct OracleCoefficients {
    binomial: Expansions,
    trinomial: Expansions,
}

impl OracleCoefficients {
    pub fn new() -> Self {
        OracleCoefficients::default()
    }
}

fn expansion(memo: &Expansions, n: i64, build: fn(i64) -> crate::Result<IntegerPolynomial>) -> Arc<IntegerPolynomial> {
    if let Some(p) = memo.lock().unwrap_or_else(|e| e.into_inner()).get(&n) {
        return Arc::clone(p);
    }
    // built outside the lock; a racing duplicate is harmless
    let p = Arc::new(build(n).expect("n checked non-negative"));
    let mut memo = memo.lock().unwrap_or_else(|e| e.into_inner());
    Arc::clone(memo.entry(n).or_insert(p))
}

impl CoefficientSource for OracleCoefficients {
    fn binomial(&self, n: i64, k: i64) -> Coefficient {
        if n < 0 {
            return Coefficient::zero();
        }
        to_coefficient(expansion(&self.binomial, n, binomial_expansion).coefficient(k))
    }

    fn trinomial(&self, n: i64, k: i64) -> Coefficient {
        if n < 0 {
            return Coefficient::zero();
        }
        let power = n.checked_add(k).unwrap_or(-1);
        to_coefficient(expansion(&self.trinomial, n, trinomial_expansion).coefficient(power))
    }
}
