//! Exact coefficients: Laurent polynomials in `a, s` and their fraction field.

mod gcd;
mod laurent;
mod parse;
mod ratfunc;

pub use gcd::{gcd, prs_gcd};
pub use laurent::{LaurentPoly, Monomial};
pub use parse::parse_ratfunc;
pub use ratfunc::RatFunc;
