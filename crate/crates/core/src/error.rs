use thiserror::Error;

/// Errors raised by the algebra engine.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("denominator vanishes identically")]
    ZeroDenominator,
    #[error("expression is not polynomial in `{0}`")]
    NotPolynomialInSymbol(String),
    #[error("invalid relation: {0}")]
    InvalidRelation(String),
    #[error("bilinear form is not symmetric at ({0}, {1})")]
    AsymmetricForm(usize, usize),
    #[error("bilinear form must be {0}x{0}")]
    FormShape(usize),
    #[error("operands belong to different algebras")]
    AlgebraMismatch,
    #[error("grade {grade} out of range for dimension {dim}")]
    GradeOutOfRange { grade: usize, dim: usize },
    #[error("expected a multivector of grade {expected}")]
    GradeMismatch { expected: usize },
    #[error("generator index {0} out of range")]
    IndexOutOfRange(usize),
    #[error("vector is not a unit vector: u*u = {0}")]
    NonUnitVector(String),
    #[error("bivector square is not a scalar")]
    NotDecomposable,
    #[error("element is not invertible under the star product")]
    NotInvertible,
    #[error("coefficient is not polynomial in the phase-space variables")]
    NotPolynomial,
    #[error("phase-space integral diverges or its convergence cannot be established")]
    DivergentIntegral,
    #[error("operands of the genvalue check belong to different classes")]
    ClassMismatch,
    #[error("H*H is not the square of a coefficient")]
    NotSpectral,
    #[error("invalid quantum number {0}")]
    InvalidQuantumNumber(i64),
    #[error("unknown kind `{0}`")]
    UnknownKind(String),
    #[error("invalid orbit parameters: {0}")]
    InvalidOrbitParams(String),
    #[error("four-velocity is not normalized: u*u = {0}")]
    NotNormalized(String),
    #[error("invalid spin vector: {0}")]
    InvalidSpinVector(String),
    #[error("rotor check failed: U*rev(U) = {0}")]
    NotARotor(String),
}

pub type Result<T> = std::result::Result<T, Error>;
