//! Brute-force helpers shared by the integration tests. None of these call
//! into the recurrences or the polynomial oracle of the library.

#![allow(dead_code)]

use std::collections::BTreeMap;

use num_bigint::{BigInt, BigUint};
use num_traits::One;
use stickkit::Coefficient;

pub fn factorial(n: u64) -> BigUint {
    (1..=n).fold(BigUint::one(), |acc, i| acc * i)
}

/// n! / (k! (n-k)!) from full factorials.
pub fn factorial_binomial(n: u64, k: u64) -> Coefficient {
    if k > n {
        return Coefficient::zero();
    }
    Coefficient::from(factorial(n) / (factorial(k) * factorial(n - k)))
}

/// n! / prod(parts!) from full factorials; zero unless parts sum to n.
pub fn factorial_multinomial(n: u64, parts: &[u64]) -> Coefficient {
    if parts.iter().sum::<u64>() != n {
        return Coefficient::zero();
    }
    let denom = parts.iter().fold(BigUint::one(), |acc, &p| acc * factorial(p));
    Coefficient::from(factorial(n) / denom)
}

/// Sparse expansion of (1 + x + 1/x)^n keyed by exponent.
pub fn laurent_trinomial(n: u32) -> BTreeMap<i64, BigInt> {
    let mut acc: BTreeMap<i64, BigInt> = BTreeMap::from([(0, BigInt::one())]);
    for _ in 0..n {
        let mut next: BTreeMap<i64, BigInt> = BTreeMap::new();
        for (e, c) in &acc {
            for step in [-1, 0, 1] {
                *next.entry(e + step).or_default() += c;
            }
        }
        acc = next;
    }
    acc
}

/// Row-by-row addition of the three cells above, kept as full rows -n..=n.
pub fn trinomial_rows_by_addition(max_n: usize) -> Vec<Vec<BigUint>> {
    let mut rows = vec![vec![BigUint::one()]];
    for n in 1..=max_n {
        let prev = &rows[n - 1];
        let get = |i: isize| -> BigUint {
            if i < 0 || i as usize >= prev.len() {
                BigUint::default()
            } else {
                prev[i as usize].clone()
            }
        };
        let row = (0..(2 * n + 1) as isize)
            .map(|i| get(i - 2) + get(i - 1) + get(i))
            .collect();
        rows.push(row);
    }
    rows
}
