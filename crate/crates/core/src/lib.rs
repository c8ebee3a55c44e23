//! Exact and high-precision engine for the large-`N` expansion of the quantum
//! hyperbolic invariant `⟨T(p,q)⟩_N` of torus knots.
//!
//! The pipeline:
//!
//! - [`exact`]: knot parameters, the Alexander polynomial, exact Taylor data
//!   of `z·τ(z)` and the finite-type coefficients `a_n`.
//! - [`charvar`]: the non-abelian character-variety components and their
//!   bifurcation parameters, areas and signs.
//! - [`torsion`]: abelian torsion, its residues, the non-abelian torsion.
//! - [`chern_simons`]: Kirk–Klassen bundle arithmetic and Chern–Simons values.
//! - [`asymptotics`]: residue terms, the asymptotic tail, `Z_N` and the
//!   identities relating them.
//! - [`quadrature`]: an independent contour-integral evaluation of `⟨K⟩_N`.
//! - [`verify`]: named suites of pass/fail checks.
//!
//! Numerics use MPFR/MPC through `rug`; exact quantities are `rug::Rational`.

pub mod asymptotics;
pub mod charvar;
pub mod chern_simons;
pub mod error;
pub mod exact;
pub mod quadrature;
pub mod torsion;
pub mod verify;

pub use error::{Error, Result};
pub use exact::{Precision, TorusKnot};
