//! Both sides of every hockey-stick identity, evaluated term by term, and
//! exhaustive parameter sweeps over them.
//!
//! Identities covered, with `C` binomial and `T` trinomial coefficients:
//!
//! * little stick: `sum_{i=0..k} C(n+i, i) = C(n+k+1, k)`
//! * big stick and puck: `C(n,0)+C(n+2,1)+C(n+4,2)+C(n+6,3) = C(n+7,3) - C(n+6,1)`
//! * Pascal hockey stick:
//!   `sum_{i=0..k} C(n+2i, i) = sum_{j=0..k/2} (-1)^j C(n+2k-j+1, k-2j)`
//! * trinomial hockey stick:
//!   `sum_{i=0..k} T(n+i, n) = sum_{s=0..k/2} (-1)^s T(n+k+1, n+2s+1)`
//! * Pascal pyramid form of the trinomial identity, where every trinomial
//!   coefficient is replaced by a diagonal sum of multinomials.

use std::fmt;
use std::str::FromStr;
use std::time::Instant;

use num_bigint::BigInt;
use num_traits::Zero;
use rayon::prelude::*;

use crate::error::{non_negative, Error, Result};
use crate::source::{CoefficientSource, ExactCoefficients};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Family {
    LittleStick,
    BigStickPuck,
    PascalHockey,
    TrinomialHockey,
    Pyramid,
}

impl Family {
    pub const ALL: [Family; 5] = [
        Family::LittleStick,
        Family::BigStickPuck,
        Family::PascalHockey,
        Family::TrinomialHockey,
        Family::Pyramid,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Family::LittleStick => "little-stick",
            Family::BigStickPuck => "big-stick-puck",
            Family::PascalHockey => "pascal-hockey",
            Family::TrinomialHockey => "trinomial-hockey",
            Family::Pyramid => "pyramid",
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Family::ALL
            .into_iter()
            .find(|f| f.name() == s)
            .ok_or_else(|| Error::Usage(format!("unknown identity family `{s}`")))
    }
}

/// One `(family, n, k)` instance. Big-stick-and-puck cases always carry `k = 3`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct IdentityCase {
    pub family: Family,
    pub n: u64,
    pub k: u64,
}

impl IdentityCase {
    pub fn new(family: Family, n: u64, k: u64) -> Self {
        let k = if family == Family::BigStickPuck { 3 } else { k };
        IdentityCase { family, n, k }
    }
}

/// Signed summands of one side of an identity, in order, with their sum.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SideEvaluation {
    terms: Vec<BigInt>,
    total: BigInt,
}

impl SideEvaluation {
    pub fn from_terms(terms: Vec<BigInt>) -> Self {
        let total = terms.iter().sum();
        SideEvaluation { terms, total }
    }

    pub fn terms(&self) -> &[BigInt] {
        &self.terms
    }

    pub fn total(&self) -> &BigInt {
        &self.total
    }

    /// `1+3+10+35`, or `56-7` for signed sides.
    pub fn expression(&self) -> String {
        let mut out = String::new();
        for (i, t) in self.terms.iter().enumerate() {
            if i > 0 && t.sign() != num_bigint::Sign::Minus {
                out.push('+');
            }
            out.push_str(&t.to_string());
        }
        if out.is_empty() {
            out.push('0');
        }
        out
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CaseResult {
    pub case: IdentityCase,
    pub lhs: SideEvaluation,
    pub rhs: SideEvaluation,
    pub equal: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VerificationReport {
    pub family: Family,
    pub n_max: u64,
    pub k_max: u64,
    pub cases: Vec<CaseResult>,
    pub checked: usize,
    pub failed: usize,
    pub elapsed_ms: u64,
}

impl VerificationReport {
    pub fn passed(&self) -> bool {
        self.failed == 0
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct SweepOptions {
    /// Stop at the first failing case. Forces sequential evaluation.
    pub fail_fast: bool,
}

fn signed(negative: bool, c: crate::Coefficient) -> BigInt {
    let v = c.to_bigint();
    if negative {
        -v
    } else {
        v
    }
}

fn alternating(j: u64) -> bool {
    j % 2 == 1
}

// Largest index touched by any identity is n + 2k + 2; keep it inside i64.
fn check_bounds(n: i64, k: i64) -> Result<(i64, i64)> {
    non_negative("n", n)?;
    non_negative("k", k)?;
    k.checked_mul(2)
        .and_then(|k2| k2.checked_add(n))
        .and_then(|v| v.checked_add(2))
        .ok_or_else(|| Error::InvalidArgument(format!("indices too large: n={n}, k={k}")))?;
    Ok((n, k))
}

/// Evaluates identities against one [`CoefficientSource`].
#[derive(Clone, Copy)]
pub struct Evaluator<'a> {
    source: &'a dyn CoefficientSource,
}

impl fmt::Debug for Evaluator<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Evaluator").finish_non_exhaustive()
    }
}

impl<'a> Evaluator<'a> {
    pub fn new(source: &'a dyn CoefficientSource) -> Self {
        Evaluator { source }
    }

    pub fn pascal_hockey_lhs(&self, n: i64, k: i64) -> Result<SideEvaluation> {
        let (n, k) = check_bounds(n, k)?;
        Ok(SideEvaluation::from_terms(
            (0..=k)
                .map(|i| self.source.binomial(n + 2 * i, i).to_bigint())
                .collect(),
        ))
    }

    pub fn pascal_hockey_rhs(&self, n: i64, k: i64) -> Result<SideEvaluation> {
        let (n, k) = check_bounds(n, k)?;
        Ok(SideEvaluation::from_terms(
            (0..=k / 2)
                .map(|j| {
                    signed(
                        alternating(j as u64),
                        self.source.binomial(n + 2 * k - j + 1, k - 2 * j),
                    )
                })
                .collect(),
        ))
    }

    pub fn trinomial_hockey_lhs(&self, n: i64, k: i64) -> Result<SideEvaluation> {
        let (n, k) = check_bounds(n, k)?;
        Ok(SideEvaluation::from_terms(
            (0..=k).map(|i| self.source.trinomial(n + i, n).to_bigint()).collect(),
        ))
    }

    /// Every term comes from row `n + k + 1`.
    pub fn trinomial_hockey_rhs(&self, n: i64, k: i64) -> Result<SideEvaluation> {
        let (n, k) = check_bounds(n, k)?;
        Ok(SideEvaluation::from_terms(
            (0..=k / 2)
                .map(|s| signed(alternating(s as u64), self.source.trinomial(n + k + 1, n + 2 * s + 1)))
                .collect(),
        ))
    }

    /// Returns `(lhs, rhs)`; the right side is built from its own closed form,
    /// not from [`Self::pascal_hockey_rhs`].
    pub fn big_stick_puck(&self, n: i64) -> Result<(SideEvaluation, SideEvaluation)> {
        let lhs = self.pascal_hockey_lhs(n, 3)?;
        let rhs = SideEvaluation::from_terms(vec![
            self.source.binomial(n + 7, 3).to_bigint(),
            -self.source.binomial(n + 6, 1).to_bigint(),
        ]);
        Ok((lhs, rhs))
    }

    /// Column sum `sum_{i=0..k} C(n+i, i) = C(n+k+1, k)`.
    pub fn little_stick(&self, n: i64, k: i64) -> Result<(SideEvaluation, SideEvaluation)> {
        let (n, k) = check_bounds(n, k)?;
        let lhs = SideEvaluation::from_terms((0..=k).map(|i| self.source.binomial(n + i, i).to_bigint()).collect());
        let rhs = SideEvaluation::from_terms(vec![self.source.binomial(n + k + 1, k).to_bigint()]);
        Ok((lhs, rhs))
    }

    // sum over 2r + s = diagonal, s >= 0, of multinomial(top; r, s, r - shift)
    fn pyramid_block(&self, top: i64, diagonal: i64, shift: i64) -> BigInt {
        let mut acc = BigInt::zero();
        for s in (diagonal % 2..=diagonal).step_by(2) {
            let r = (diagonal - s) / 2;
            let c = self.source.multinomial(top, &[r, s, r - shift]);
            if !c.is_zero() {
                acc += c.to_bigint();
            }
        }
        acc
    }

    /// Term `i` is `sum_{2r+s=2n+i} multinomial(n+i; r, s, r-n)`.
    pub fn pyramid_lhs(&self, n: i64, k: i64) -> Result<SideEvaluation> {
        let (n, k) = check_bounds(n, k)?;
        Ok(SideEvaluation::from_terms(
            (0..=k).map(|i| self.pyramid_block(n + i, 2 * n + i, n)).collect(),
        ))
    }

    /// Term `j` is `(-1)^j sum_{2r+s=2n+k+2j+2} multinomial(n+k+1; r, s, r-n-2j-1)`.
    pub fn pyramid_rhs(&self, n: i64, k: i64) -> Result<SideEvaluation> {
        let (n, k) = check_bounds(n, k)?;
        Ok(SideEvaluation::from_terms(
            (0..=k / 2)
                .map(|j| {
                    let block = self.pyramid_block(n + k + 1, 2 * n + k + 2 * j + 2, n + 2 * j + 1);
                    if alternating(j as u64) {
                        -block
                    } else {
                        block
                    }
                })
                .collect(),
        ))
    }

    pub fn evaluate(&self, case: IdentityCase) -> Result<CaseResult> {
        let n = i64::try_from(case.n).map_err(|_| Error::InvalidArgument(format!("n={} too large", case.n)))?;
        let k = i64::try_from(case.k).map_err(|_| Error::InvalidArgument(format!("k={} too large", case.k)))?;
        let (lhs, rhs) = match case.family {
            Family::LittleStick => self.little_stick(n, k)?,
            Family::BigStickPuck => self.big_stick_puck(n)?,
            Family::PascalHockey => (self.pascal_hockey_lhs(n, k)?, self.pascal_hockey_rhs(n, k)?),
            Family::TrinomialHockey => (self.trinomial_hockey_lhs(n, k)?, self.trinomial_hockey_rhs(n, k)?),
            Family::Pyramid => (self.pyramid_lhs(n, k)?, self.pyramid_rhs(n, k)?),
        };
        let equal = lhs.total == rhs.total;
        Ok(CaseResult { case, lhs, rhs, equal })
    }

    /// Checks every `(n, k)` in `[0, n_max] x [0, k_max]` (big stick and
    /// puck only varies `n`). Cases come back ordered by `(n, k)`.
    pub fn verify_family(&self, family: Family, n_max: i64, k_max: i64) -> Result<VerificationReport> {
        self.verify_family_with(family, n_max, k_max, SweepOptions::default())
    }

    pub fn verify_family_with(
        &self,
        family: Family,
        n_max: i64,
        k_max: i64,
        options: SweepOptions,
    ) -> Result<VerificationReport> {
        let n_max_u = non_negative("n-max", n_max)?;
        let k_max_u = non_negative("k-max", k_max)?;
        let k_probe = if family == Family::BigStickPuck { 3 } else { k_max };
        check_bounds(n_max, k_probe)?;

        let cases: Vec<IdentityCase> = match family {
            Family::BigStickPuck => (0..=n_max_u).map(|n| IdentityCase::new(family, n, 3)).collect(),
            _ => (0..=n_max_u)
                .flat_map(|n| (0..=k_max_u).map(move |k| IdentityCase::new(family, n, k)))
                .collect(),
        };

        let start = Instant::now();
        let results: Vec<CaseResult> = if options.fail_fast {
            let mut out = Vec::new();
            for case in cases {
                let r = self.evaluate(case)?;
                let stop = !r.equal;
                out.push(r);
                if stop {
                    break;
                }
            }
            out
        } else {
            cases
                .into_par_iter()
                .map(|case| self.evaluate(case))
                .collect::<Result<_>>()?
        };
        let elapsed_ms = u64::try_from(start.elapsed().as_millis()).unwrap_or(u64::MAX);

        let failed = results.iter().filter(|r| !r.equal).count();
        Ok(VerificationReport {
            family,
            n_max: n_max_u,
            k_max: k_max_u,
            checked: results.len(),
            failed,
            cases: results,
            elapsed_ms,
        })
    }
}

fn exact() -> ExactCoefficients<'static> {
    ExactCoefficients::global()
}

pub fn pascal_hockey_lhs(n: i64, k: i64) -> Result<SideEvaluation> {
    Evaluator::new(&exact()).pascal_hockey_lhs(n, k)
}

pub fn pascal_hockey_rhs(n: i64, k: i64) -> Result<SideEvaluation> {
    Evaluator::new(&exact()).pascal_hockey_rhs(n, k)
}

pub fn trinomial_hockey_lhs(n: i64, k: i64) -> Result<SideEvaluation> {
    Evaluator::new(&exact()).trinomial_hockey_lhs(n, k)
}

pub fn trinomial_hockey_rhs(n: i64, k: i64) -> Result<SideEvaluation> {
    Evaluator::new(&exact()).trinomial_hockey_rhs(n, k)
}

pub fn big_stick_puck(n: i64) -> Result<(SideEvaluation, SideEvaluation)> {
    Evaluator::new(&exact()).big_stick_puck(n)
}

pub fn little_stick(n: i64, k: i64) -> Result<(SideEvaluation, SideEvaluation)> {
    Evaluator::new(&exact()).little_stick(n, k)
}

pub fn pyramid_lhs(n: i64, k: i64) -> Result<SideEvaluation> {
    Evaluator::new(&exact()).pyramid_lhs(n, k)
}

pub fn pyramid_rhs(n: i64, k: i64) -> Result<SideEvaluation> {
    Evaluator::new(&exact()).pyramid_rhs(n, k)
}

pub fn verify_family(family: Family, n_max: i64, k_max: i64) -> Result<VerificationReport> {
    Evaluator::new(&exact()).verify_family(family, n_max, k_max)
}
