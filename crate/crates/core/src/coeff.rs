//! Exact binomial, trinomial and multinomial coefficients.
//!
//! Every coefficient function is total: indices outside the valid range
//! evaluate to zero. Point binomials use the multiplicative formula; whole
//! rows come from the additive recurrences and are memoized in a
//! [`RowCache`].

use std::fmt;
use std::iter::Sum;
use std::ops::{Add, AddAssign};
use std::str::FromStr;
use std::sync::{Arc, OnceLock, RwLock};

use num_bigint::{BigInt, BigUint, ParseBigIntError};
use num_traits::{One, Zero};

use crate::error::{non_negative, Result};

/// An exact, non-negative triangle entry.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Coefficient(BigUint);

impl Coefficient {
    pub fn zero() -> Self {
        Coefficient(BigUint::zero())
    }

    pub fn one() -> Self {
        Coefficient(BigUint::one())
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn as_biguint(&self) -> &BigUint {
        &self.0
    }

    pub fn into_inner(self) -> BigUint {
        self.0
    }

    pub fn to_bigint(&self) -> BigInt {
        BigInt::from(self.0.clone())
    }
}

impl From<BigUint> for Coefficient {
    fn from(value: BigUint) -> Self {
        Coefficient(value)
    }
}

impl From<u64> for Coefficient {
    fn from(value: u64) -> Self {
        Coefficient(BigUint::from(value))
    }
}

impl PartialEq<u64> for Coefficient {
    fn eq(&self, other: &u64) -> bool {
        self.0 == BigUint::from(*other)
    }
}

impl fmt::Display for Coefficient {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(&self.0, f)
    }
}

impl FromStr for Coefficient {
    type Err = ParseBigIntError;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        s.parse().map(Coefficient)
    }
}

impl<'a> Add<&'a Coefficient> for &'a Coefficient {
    type Output = Coefficient;

    fn add(self, rhs: &'a Coefficient) -> Coefficient {
        Coefficient(&self.0 + &rhs.0)
    }
}

impl Add for Coefficient {
    type Output = Coefficient;

    fn add(self, rhs: Coefficient) -> Coefficient {
        Coefficient(self.0 + rhs.0)
    }
}

impl<'a> AddAssign<&'a Coefficient> for Coefficient {
    fn add_assign(&mut self, rhs: &'a Coefficient) {
        self.0 += &rhs.0;
    }
}

impl Sum for Coefficient {
    fn sum<I: Iterator<Item = Coefficient>>(iter: I) -> Self {
        iter.fold(Coefficient::zero(), |acc, c| acc + c)
    }
}

impl<'a> Sum<&'a Coefficient> for Coefficient {
    fn sum<I: Iterator<Item = &'a Coefficient>>(iter: I) -> Self {
        iter.fold(Coefficient::zero(), |mut acc, c| {
            acc += c;
            acc
        })
    }
}

/// Position `(n, k)` in Pascal's triangle. Any pair is storable; only
/// `0 <= k <= n` addresses a non-zero entry.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct PascalIndex {
    pub n: i64,
    pub k: i64,
}

impl PascalIndex {
    pub fn new(n: i64, k: i64) -> Self {
        PascalIndex { n, k }
    }

    pub fn is_valid(&self) -> bool {
        self.n >= 0 && (0..=self.n).contains(&self.k)
    }
}

/// Position `(n, k)` in the trinomial triangle, valid for `-n <= k <= n`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct TrinomialIndex {
    pub n: i64,
    pub k: i64,
}

impl TrinomialIndex {
    pub fn new(n: i64, k: i64) -> Self {
        TrinomialIndex { n, k }
    }

    pub fn is_valid(&self) -> bool {
        self.n >= 0 && self.k.checked_abs().is_some_and(|a| a <= self.n)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum TriangleKind {
    Pascal,
    Trinomial,
}

impl TriangleKind {
    pub fn name(self) -> &'static str {
        match self {
            TriangleKind::Pascal => "pascal",
            TriangleKind::Trinomial => "trinomial",
        }
    }

    /// Lowest valid position in row `n`.
    pub fn first_position(self, n: u64) -> i64 {
        match self {
            TriangleKind::Pascal => 0,
            TriangleKind::Trinomial => -(n as i64),
        }
    }
}

/// One full row of a triangle. Pascal rows hold positions `0..=n`,
/// trinomial rows hold positions `-n..=n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TriangleRow {
    pub kind: TriangleKind,
    pub n: u64,
    pub entries: Vec<Coefficient>,
}

impl TriangleRow {
    /// Entry at triangle position `k`, zero outside the row.
    pub fn get(&self, k: i64) -> Coefficient {
        let offset = k - self.kind.first_position(self.n);
        usize::try_from(offset)
            .ok()
            .and_then(|i| self.entries.get(i))
            .cloned()
            .unwrap_or_default()
    }

    /// Iterates `(position, entry)` pairs left to right.
    pub fn positions(&self) -> impl Iterator<Item = (i64, &Coefficient)> {
        let first = self.kind.first_position(self.n);
        self.entries.iter().enumerate().map(move |(i, c)| (first + i as i64, c))
    }

    pub fn sum(&self) -> Coefficient {
        self.entries.iter().sum()
    }

    pub fn is_palindrome(&self) -> bool {
        self.entries.iter().eq(self.entries.iter().rev())
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }
}

type Row = Arc<[Coefficient]>;

/// Append-only memo of Pascal rows and trinomial half-rows.
///
/// Rows are built by recurrence up to the highest index requested. Readers
/// get shared handles, so a row stays usable while the cache grows.
#[derive(Debug, Default)]
pub struct RowCache {
    pascal: RwLock<Vec<Row>>,
    trinomial: RwLock<Vec<Row>>,
}

impl RowCache {
    pub fn new() -> Self {
        RowCache::default()
    }

    /// Pascal row `n`, positions `0..=n`.
    pub fn pascal(&self, n: u64) -> Row {
        fetch_or_extend(&self.pascal, n, next_pascal_row)
    }

    /// Non-negative half of trinomial row `n`, positions `0..=n`.
    pub fn trinomial_half(&self, n: u64) -> Row {
        fetch_or_extend(&self.trinomial, n, next_trinomial_half_row)
    }

    /// Number of cached rows of the given kind.
    pub fn cached_rows(&self, kind: TriangleKind) -> usize {
        let lock = match kind {
            TriangleKind::Pascal => &self.pascal,
            TriangleKind::Trinomial => &self.trinomial,
        };
        lock.read().unwrap_or_else(|e| e.into_inner()).len()
    }

    /// Zero-extended binomial read from the cached rows.
    pub fn binomial(&self, n: i64, k: i64) -> Coefficient {
        if !PascalIndex::new(n, k).is_valid() {
            return Coefficient::zero();
        }
        self.pascal(n as u64)[k as usize].clone()
    }

    /// Zero-extended trinomial read from the cached half-rows.
    pub fn trinomial(&self, n: i64, k: i64) -> Coefficient {
        if !TrinomialIndex::new(n, k).is_valid() {
            return Coefficient::zero();
        }
        self.trinomial_half(n as u64)[k.unsigned_abs() as usize].clone()
    }
}

fn fetch_or_extend(lock: &RwLock<Vec<Row>>, n: u64, next: fn(&[Coefficient]) -> Vec<Coefficient>) -> Row {
    let n = usize::try_from(n).expect("row index exceeds address space");
    {
        let rows = lock.read().unwrap_or_else(|e| e.into_inner());
        if let Some(row) = rows.get(n) {
            return Arc::clone(row);
        }
    }
    let mut rows = lock.write().unwrap_or_else(|e| e.into_inner());
    if rows.is_empty() {
        rows.push(Arc::from(vec![Coefficient::one()]));
    }
    while rows.len() <= n {
        let row = next(rows.last().expect("apex present"));
        rows.push(Arc::from(row));
    }
    Arc::clone(&rows[n])
}

fn next_pascal_row(prev: &[Coefficient]) -> Vec<Coefficient> {
    let mut row = Vec::with_capacity(prev.len() + 1);
    row.push(Coefficient::one());
    row.extend(prev.windows(2).map(|w| &w[0] + &w[1]));
    row.push(Coefficient::one());
    row
}

// prev holds positions 0..=m of row m; the result holds 0..=m+1 of row m+1.
fn next_trinomial_half_row(prev: &[Coefficient]) -> Vec<Coefficient> {
    let m = prev.len() as i64 - 1;
    let at = |j: i64| -> Option<&Coefficient> {
        if j.abs() <= m {
            Some(&prev[j.unsigned_abs() as usize])
        } else {
            None
        }
    };
    (0..=m + 1)
        .map(|k| {
            let mut acc = Coefficient::zero();
            for j in [k - 1, k, k + 1] {
                if let Some(c) = at(j) {
                    acc += c;
                }
            }
            acc
        })
        .collect()
}

/// Process-wide cache behind [`trinomial`], [`pascal_row`] and
/// [`trinomial_row`].
pub fn global_cache() -> &'static RowCache {
    static CACHE: OnceLock<RowCache> = OnceLock::new();
    CACHE.get_or_init(RowCache::new)
}

/// `C(n, k)`, or 0 when `k < 0`, `k > n` or `n < 0`.
///
/// Uses the multiplicative formula with an exact division after every step,
/// so no earlier rows are built.
pub fn binomial(n: i64, k: i64) -> Coefficient {
    if !PascalIndex::new(n, k).is_valid() {
        return Coefficient::zero();
    }
    let (n, k) = (n as u64, k as u64);
    let k = k.min(n - k);
    let mut acc = BigUint::one();
    for i in 1..=k {
        acc *= n - k + i;
        acc /= i;
    }
    Coefficient(acc)
}

pub fn pascal_row(n: i64) -> Result<TriangleRow> {
    let n = non_negative("row index", n)?;
    Ok(TriangleRow {
        kind: TriangleKind::Pascal,
        n,
        entries: global_cache().pascal(n).to_vec(),
    })
}

/// Trinomial coefficient: the coefficient of `x^(n+k)` in `(1+x+x^2)^n`,
/// or 0 when `|k| > n` or `n < 0`.
pub fn trinomial(n: i64, k: i64) -> Coefficient {
    global_cache().trinomial(n, k)
}

pub fn trinomial_row(n: i64) -> Result<TriangleRow> {
    let n = non_negative("row index", n)?;
    let half = global_cache().trinomial_half(n);
    let entries = half.iter().rev().chain(half.iter().skip(1)).cloned().collect();
    Ok(TriangleRow {
        kind: TriangleKind::Trinomial,
        n,
        entries,
    })
}

/// `n! / (p1! p2! ...)` when every part is non-negative and the parts sum
/// to `n`, else 0. Built as a running product of binomials.
pub fn multinomial(n: i64, parts: &[i64]) -> Coefficient {
    if n < 0 || parts.iter().any(|&p| p < 0) {
        return Coefficient::zero();
    }
    let total = parts.iter().try_fold(0i64, |acc, &p| acc.checked_add(p));
    if total != Some(n) {
        return Coefficient::zero();
    }
    let mut acc = BigUint::one();
    let mut placed = 0i64;
    for &p in parts {
        placed += p;
        acc *= binomial(placed, p).into_inner();
    }
    Coefficient(acc)
}
