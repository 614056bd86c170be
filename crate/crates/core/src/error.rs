use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("syntax error at position {position}: {message}")]
    Syntax { position: usize, message: String },
    #[error("unknown identifier '{name}' at position {position}")]
    UnknownIdentifier { position: usize, name: String },
    #[error("exponent overflow (> 2^31) at position {position}")]
    ExponentOverflow { position: usize },
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error(transparent)]
    Parse(#[from] ParseError),
    #[error("invalid input: {0}")]
    InvalidInput(String),
    #[error("polynomial is not quasi-homogeneous for the given weights")]
    NotQuasiHomogeneous,
    #[error("polynomial is not weighted-homogeneous (mixed degrees)")]
    MixedDegree,
    #[error("degenerate singularity: the critical point at the origin is not isolated")]
    DegenerateSingularity,
    #[error("degenerate family member at u = [{0}]")]
    DegenerateMember(String),
    #[error("S-pair budget of {budget} reductions exceeded")]
    BudgetExceeded { budget: usize },
    #[error("quotient ring is infinite-dimensional and no degree cap was given")]
    InfiniteQuotient,
    #[error("not a Calabi-Yau case: degree {degree} differs from variable count {nvars}")]
    NotCalabiYau { degree: u32, nvars: usize },
    #[error("polynomial is not homogeneous")]
    NotHomogeneous,
    #[error("socle component is not proportional to the Hessian class")]
    ProportionalityViolation,
    #[error("polynomial is not separable into univariate parts")]
    NotSeparable,
    #[error("standard-monomial basis changes across the stencil")]
    BasisJump,
    #[error("deformation direction {0} is not marginal")]
    NotMarginal(usize),
    #[error("internal invariant violated: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;
