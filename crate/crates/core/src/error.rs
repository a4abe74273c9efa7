use thiserror::Error;

/// Errors raised by the symmetry engine.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("basis is linearly dependent: rank {rank} < {len} generators")]
    DependentBasis { rank: usize, len: usize },

    #[error("a subalgebra basis needs between 1 and 6 generators, got {0}")]
    BasisSize(usize),

    #[error("generator index {0} is outside 1..=6")]
    GeneratorIndex(usize),

    #[error("adjoint word parameter {0} is not finite")]
    NonFiniteParameter(f64),

    #[error("the zero element has no one-dimensional representative")]
    ZeroElement,

    #[error("total derivative would exceed jet order 2 in monomial `{0}`")]
    OrderOverflow(String),

    #[error("derivative of `{0}` would need a third derivative of f")]
    SourceDerivativeOverflow(String),

    #[error("point vector field component depends on `{0}`")]
    JetInVectorField(String),

    #[error("parse error at byte {pos}: {msg}")]
    Parse { pos: usize, msg: String },

    #[error("flow integration produced a non-finite state at step {step}")]
    NonFiniteFlow { step: usize },

    #[error("stencil around ({x}, {y}, {z}) leaves the test box [-1, 1]^3")]
    OutsideBox { x: f64, y: f64, z: f64 },

    #[error("invalid argument: {0}")]
    InvalidArgument(String),
}

pub type Result<T> = std::result::Result<T, Error>;
