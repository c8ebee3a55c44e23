//! Exact arithmetic substrate: the knot parameters, the symmetric Alexander
//! polynomial, rational Taylor series of `z·τ(z)`, and the working-precision
//! helpers shared by the numerical modules.

pub(crate) mod knot;
mod laurent;
pub mod precision;
mod series;

pub use knot::TorusKnot;
pub use laurent::{alexander_polynomial, SymmetricLaurentPolynomial};
pub use precision::Precision;
pub use series::{a_coefficients, tau_series, RationalSeries};
