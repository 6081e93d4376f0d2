mod common;

use num_bigint::BigInt;
use proptest::prelude::*;
use stickkit::oracle::trinomial_expansion;
use stickkit::{
    binomial, binomial_oracle, pascal_row, poly_mul, poly_pow, trinomial, trinomial_oracle, Coefficient,
    IntegerPolynomial,
};

use common::laurent_trinomial;

#[test]
fn laurent_form_matches_shifted_expansion() {
    for n in 0..=40u32 {
        let laurent = laurent_trinomial(n);
        let n = n as i64;
        for k in -n - 2..=n + 2 {
            let expected = laurent.get(&k).cloned().unwrap_or_default();
            let got = trinomial_oracle(n, k).unwrap();
            assert_eq!(got.to_bigint(), expected, "n={n} k={k}");
        }
    }
}

#[test]
fn trinomial_expansion_is_palindromic() {
    for n in 0..=60 {
        let p = trinomial_expansion(n).unwrap();
        assert!(p.is_palindrome(), "n={n}");
        assert_eq!(p.degree(), Some(2 * n as usize));
    }
}

#[test]
fn binary_pow_equals_iterated_mul() {
    let bases = [
        IntegerPolynomial::from_i64s(&[1, 1]),
        IntegerPolynomial::from_i64s(&[1, 1, 1]),
        IntegerPolynomial::from_i64s(&[2, -3, 0, 5]),
        IntegerPolynomial::from_i64s(&[0, 1]),
    ];
    for base in &bases {
        let mut iterated = IntegerPolynomial::one();
        for n in 0..=20 {
            assert_eq!(poly_pow(base, n).unwrap(), iterated, "n={n}");
            iterated = poly_mul(&iterated, base);
        }
    }
}

#[test]
fn pow_of_one_plus_x_is_pascal_row() {
    let p = poly_pow(&IntegerPolynomial::from_i64s(&[1, 1]), 8).unwrap();
    let row = pascal_row(8).unwrap();
    let expected: Vec<BigInt> = row.entries.iter().map(Coefficient::to_bigint).collect();
    assert_eq!(p.coeffs(), expected.as_slice());
}

#[test]
fn oracle_agrees_with_recurrences() {
    for n in 0..=60i64 {
        let tri = trinomial_expansion(n).unwrap();
        for k in -n..=n {
            assert_eq!(trinomial(n, k).to_bigint(), tri.coefficient(n + k), "T({n},{k})");
        }
        for k in 0..=n {
            assert_eq!(binomial(n, k), binomial_oracle(n, k).unwrap(), "C({n},{k})");
        }
    }
}

fn small_poly() -> impl Strategy<Value = IntegerPolynomial> {
    proptest::collection::vec(-20i64..20, 0..7).prop_map(|c| IntegerPolynomial::from_i64s(&c))
}

proptest! {
    #[test]
    fn mul_commutes_and_adds_degrees(a in small_poly(), b in small_poly()) {
        let ab = poly_mul(&a, &b);
        prop_assert_eq!(&ab, &poly_mul(&b, &a));
        match (a.degree(), b.degree()) {
            (Some(da), Some(db)) => prop_assert_eq!(ab.degree(), Some(da + db)),
            _ => prop_assert!(ab.is_zero()),
        }
        if let Some(last) = ab.coeffs().last() {
            prop_assert_ne!(last, &BigInt::default());
        }
    }

    #[test]
    fn pow_adds_exponents(a in small_poly(), m in 0i64..5, n in 0i64..5) {
        let lhs = poly_pow(&a, m + n).unwrap();
        let rhs = poly_mul(&poly_pow(&a, m).unwrap(), &poly_pow(&a, n).unwrap());
        prop_assert_eq!(lhs, rhs);
    }
}
