//! Exact binomial, trinomial and multinomial coefficients, and term-by-term
//! verification of hockey-stick identities in Pascal's triangle, the
//! trinomial triangle and Pascal's pyramid.
//!
//! ```
//! use stickkit::{binomial, trinomial, identity};
//!
//! assert_eq!(binomial(8, 3), 56);
//! assert_eq!(trinomial(6, 0), 141);
//! let lhs = identity::trinomial_hockey_lhs(1, 4).unwrap();
//! let rhs = identity::trinomial_hockey_rhs(1, 4).unwrap();
//! assert_eq!(lhs.total(), rhs.total());
//! ```

pub mod cli;
pub mod coeff;
mod error;
pub mod identity;
pub mod oracle;
pub mod render;
pub mod report;
pub mod source;

pub use coeff::{
    binomial, multinomial, pascal_row, trinomial, trinomial_row, Coefficient, PascalIndex, RowCache, TriangleKind,
    TriangleRow, TrinomialIndex,
};
pub use error::{Error, Result};
pub use identity::{Evaluator, Family, IdentityCase, SideEvaluation, VerificationReport};
pub use oracle::{binomial_oracle, poly_mul, poly_pow, trinomial_oracle, IntegerPolynomial};
pub use source::{CoefficientSource, ExactCoefficients, OracleCoefficients};
