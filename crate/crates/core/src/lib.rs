pub mod algebra;
pub mod arrangement;
pub mod constructions;
pub mod error;
pub mod hyperbolicity;
pub mod improj;
pub mod realroots;
pub mod structured;

pub use algebra::{CRational, MPoly, Monomial, QPoly, Rational, UPoly};
pub use error::{Error, Result};
pub use structured::{Structure, StructuredPoly};
