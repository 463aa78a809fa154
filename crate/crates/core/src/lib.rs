//! Exact star-product engine: geometric algebra as a deformed Grassmann
//! algebra, Moyal phase-space quantum mechanics, Kustaanheimo-Stiefel
//! regularization and the spacetime algebra.
//!
//! The algebra core is generic over the coefficient ring through
//! [`Scalar`]; the aliases below cover the common choices.

pub mod error;
pub mod geometric;
pub mod grassmann;
pub mod mechanics;
pub mod moyal;
pub mod scalar;
pub mod scalars;
pub mod spacetime;

pub use error::{Error, Result};
pub use grassmann::{AlgebraSpec, Blade, Multivector};
pub use scalar::{Field, Scalar};
pub use scalars::{Coefficient, GaussianRational, Poly, RelationSet, Symbol};

/// Multivector with exact symbolic coefficients.
pub type ExactMultivector = Multivector<Coefficient>;
/// Algebra spec with exact symbolic form entries.
pub type ExactAlgebra = AlgebraSpec<Coefficient>;
/// Multivector over binary64 floats.
pub type F64Multivector = Multivector<f64>;
/// Multivector over binary32 floats.
pub type F32Multivector = Multivector<f32>;
/// Multivector over arbitrary-precision rationals.
pub type RationalMultivector = Multivector<num_rational::BigRational>;
