//! Exact coefficient arithmetic: Gaussian rationals, polynomials and rational
//! functions in formal symbols, and reduction modulo declared relations.

mod coefficient;
mod gaussian;
pub mod poly;
mod relations;
mod symbol;

pub use coefficient::Coefficient;
pub use gaussian::GaussianRational;
pub use poly::{Monomial, Poly};
pub use relations::{Relation, RelationSet};
pub use symbol::Symbol;
