use thiserror::Error;

/// Failures of the exact-arithmetic layer.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AlgebraError {
    #[error("zero denominator")]
    ZeroDenominator,
    #[error("division by zero")]
    DivisionByZero,
    #[error("cannot parse rational from {0:?}")]
    ParseRational(String),
    #[error("no value bound for variable {0:?}")]
    MissingVariable(String),
    #[error("linear system is not rectangular: {0}")]
    Shape(String),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error(transparent)]
    Algebra(#[from] AlgebraError),

    #[error("moduli space M({g},{n}) is not stable")]
    UnstableSpace { g: u32, n: u32 },

    #[error("at most {max} marked labels are supported, got {n}")]
    TooManyLabels { n: u32, max: u32 },

    #[error("boundary index ({i}, {subset}) is unstable on M({g},{n})")]
    UnstableIndex {
        g: u32,
        n: u32,
        i: u32,
        subset: String,
    },

    #[error("boundary index ({i}, {subset}) is not in canonical form on M({g},{n})")]
    NonCanonicalIndex {
        g: u32,
        n: u32,
        i: u32,
        subset: String,
    },

    #[error("label {label} is outside 1..={n}")]
    LabelOutOfRange { label: u32, n: u32 },

    #[error("space mismatch: M({0},{1}) vs M({2},{3})")]
    SpaceMismatch(u32, u32, u32, u32),

    #[error("coefficient of {0} is not exact; the result needs its value")]
    InsufficientInformation(String),

    #[error("argument out of range: {0}")]
    OutOfRange(String),

    #[error("malformed document: {0}")]
    Malformed(String),

    #[error("malformed clutching map: {0}")]
    MalformedMap(String),

    #[error("unknown generator {0:?}")]
    UnknownGenerator(String),

    #[error("linear system is infeasible")]
    Infeasible,

    #[error("linear system is underdetermined")]
    Underdetermined,

    #[error("solution violates positivity: {0}")]
    NegativeCoefficient(String),

    #[error("psi coefficients of {0} are not symmetric across labels")]
    AsymmetricPsi(String),

    #[error("no catalog entry named {0:?}")]
    UnknownCatalogEntry(String),

    #[error("no certificate recipe for M({g},{n})")]
    NoRecipe { g: u32, n: u32 },

    #[error("empty family")]
    EmptyFamily,

    #[error("i/o error: {0}")]
    Io(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
