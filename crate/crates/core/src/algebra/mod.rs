//! Exact scalars, polynomials and linear algebra.

pub mod linalg;
pub mod mpoly;
pub mod resultant;
pub mod scalar;
pub mod upoly;

pub use mpoly::{MPoly, Monomial};
pub use resultant::resultant;
pub use scalar::{int, parse_rational, rat, rat_from_f64, rat_to_f64, CRational, Rational};
pub use upoly::{QPoly, UPoly};
