use thiserror::Error;

/// Crate-wide error type. Every refusal carries enough context to be
/// reported verbatim by the CLI.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,

    #[error("zero input where a nonzero value is required")]
    ZeroInput,

    #[error("denominator must be nonzero in `{input}`")]
    BadRational { input: String },

    #[error("expected exactly one real root, found {found}")]
    NotUniqueRealRoot { found: usize },

    #[error("minimal polynomial must be monic of degree 1..=3 (got degree {degree}, monic: {monic})")]
    UnsupportedMinPoly { degree: usize, monic: bool },

    #[error("polynomial is reducible over Q: rational root {root}")]
    Reducible { root: String },

    #[error("polynomial has no real root; only real embeddings are supported")]
    NoRealRoot,

    #[error("operands belong to different fields ({left} vs {right})")]
    FieldMismatch { left: String, right: String },

    #[error("point is not on E_{n}: residual y^2 - x^3 + n^2*x = {residual}")]
    NotOnCurve { n: u64, residual: String },

    #[error("points belong to different curves")]
    CurveMismatch,

    #[error("division polynomial index must be >= 1, got {m}")]
    InvalidIndex { m: i64 },

    #[error("sides violate a^2 + b^2 = c^2 (residual {residual})")]
    NotRightTriangle { residual: String },

    #[error("triangle has area {area}, expected {expected}")]
    WrongArea { area: String, expected: u64 },

    #[error("triangle side {which} = {side} is not positive under the real embedding")]
    NonPositiveSide { which: char, side: String },

    #[error("point is torsion (infinity or y = 0); it corresponds to no triangle")]
    TorsionInput,

    #[error("point failed the non-torsion certificate: order divides {order_divides}")]
    NotCertified { order_divides: u32 },

    #[error("found only {got} distinct triangles within the iteration cap of {cap}")]
    GenerationStalled { got: usize, cap: usize },

    #[error("polynomial identity violated at ({x}, {y}): residual {residual}")]
    IdentityViolated { x: String, y: String, residual: String },

    #[error(
        "exceptional torsion pair (n, s) = ({n}, {s}): the torsion of E_{n} over Q(sqrt({s})) \
         is not reduced to the 2-torsion; choose another b"
    )]
    ExceptionalTorsionPair { n: u64, s: i64 },

    #[error(
        "n = 4 is degenerate for the cubic construction: the cubic factors at lambda = -1/2, \
         so 1 + 2*lambda = 0 and n^2 - 16 = 0 and both coordinate formulas are singular; \
         use the quadratic construction instead"
    )]
    DegenerateN4,
}

pub type Result<T> = std::result::Result<T, Error>;
