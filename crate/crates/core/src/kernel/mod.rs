//! Exact arithmetic: rationals, sparse Laurent polynomials, fractions.

pub mod format;
pub mod fraction;
pub mod linalg;
pub mod monomial;
pub mod poly;
pub mod var;

pub use fraction::Fraction;
pub use monomial::Monomial;
pub use poly::{int, qfactorial, qint, rat, LaurentPoly, Rational, Value};
pub use var::Var;
