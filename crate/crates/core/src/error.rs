use thiserror::Error;

/// Every failure the toolkit can report. Variant names double as the stable
/// diagnostic identifiers printed by the command-line front end.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,
    #[error("polynomial degree {degree} exceeds factorization cap {cap}")]
    DegreeCapExceeded { degree: usize, cap: usize },
    #[error("input involves more than one variable")]
    MultivariateInput,
    #[error("input is zero")]
    ZeroInput,
    #[error("modulus is not irreducible over the rationals")]
    ReducibleModulus,
    #[error("matrix is not square ({rows}x{cols})")]
    NonSquare { rows: usize, cols: usize },
    #[error("generated algebra exceeds dimension cap {cap}")]
    DimensionCapExceeded { cap: usize },
    #[error("derivation is not in the span of the basis")]
    NotInSpan,
    #[error("derivation is not a member of the algebra")]
    NotMember,
    #[error("adjoint spectrum is not rational")]
    NonRationalSpectrum,
    #[error("no constant ratio mu satisfies mu*phi'*psi = phi*psi'")]
    NotProportional,
    #[error("irreducible supports differ: {0}")]
    FactorMismatch(String),
    #[error("input is constant")]
    ConstantInput,
    #[error("no irreducible witness found")]
    NoWitness,
    #[error("bad parameters: {0}")]
    BadParameters(String),
    #[error("no adjustment within the normalization family: {0}")]
    NoMatchWithinFamily(String),
    #[error("not in catalog: {0}")]
    NotInCatalog(String),
    #[error("syntax error at {position}: expected {expected}")]
    SyntaxError { position: usize, expected: String },
    #[error("{0}")]
    InvalidInput(String),
}

impl Error {
    /// Stable variant name, used on the diagnostic stream.
    pub fn name(&self) -> &'static str {
        match self {
            Error::DivisionByZero => "DivisionByZero",
            Error::DegreeCapExceeded { .. } => "DegreeCapExceeded",
            Error::MultivariateInput => "MultivariateInput",
            Error::ZeroInput => "ZeroInput",
            Error::ReducibleModulus => "ReducibleModulus",
            Error::NonSquare { .. } => "NonSquare",
            Error::DimensionCapExceeded { .. } => "DimensionCapExceeded",
            Error::NotInSpan => "NotInSpan",
            Error::NotMember => "NotMember",
            Error::NonRationalSpectrum => "NonRationalSpectrum",
            Error::NotProportional => "NotProportional",
            Error::FactorMismatch(_) => "FactorMismatch",
            Error::ConstantInput => "ConstantInput",
            Error::NoWitness => "NoWitness",
            Error::BadParameters(_) => "BadParameters",
            Error::NoMatchWithinFamily(_) => "NoMatchWithinFamily",
            Error::NotInCatalog(_) => "NotInCatalog",
            Error::SyntaxError { .. } => "SyntaxError",
            Error::InvalidInput(_) => "InvalidInput",
        }
    }

    /// Syntax errors are usage failures; everything else is a domain failure.
    pub fn is_usage(&self) -> bool {
        matches!(self, Error::SyntaxError { .. } | Error::InvalidInput(_))
    }
}

pub type Result<T> = std::result::Result<T, Error>;
