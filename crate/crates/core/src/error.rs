use crate::forms::Rat;
use thiserror::Error;

/// Broad class of a failure, used by the command-line front end to pick an
/// exit code.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ErrorClass {
    /// Malformed input (files, flags).
    Parse,
    /// A mathematical precondition does not hold for the given input.
    Math,
    /// An internal invariant was violated. Always a bug.
    Internal,
}

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("degree mismatch: {0} vs {1}")]
    DegreeMismatch(usize, usize),
    #[error("divisor does not divide the dividend exactly")]
    NonDivisible,
    #[error("all coordinate forms are zero")]
    AllZero,
    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },
    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("m = {m} is not coprime to d/2 = {half}")]
    NotCoprime { m: usize, half: usize },
    #[error("radii ({0}, {1}) are not a nonzero rational point on the unit circle")]
    BadRadii(Rat, Rat),
    #[error("curve does not lie on the quadric x0*x3 = x1*x2")]
    NotOnSegreQuadric,
    #[error("parametrization has a positive-dimensional coincidence locus (not birational)")]
    PositiveDimensional,
    #[error("degenerate coincidence: {0}")]
    Degenerate(String),
    #[error("chart coefficient {0} vanishes")]
    BadChart(usize),
    #[error("coefficient matrix is singular; curve lies on hyperplane {0:?}")]
    NotInvertible(Vec<Rat>),

    #[error("pencil has no definite member")]
    NoEmptyMember,
    #[error("auxiliary point choice is degenerate")]
    DegenerateChoice,

    #[error("projection center is not on the sphere")]
    CenterNotOnSphere,
    #[error("conic condition failed: {on_conic} of {total} points at infinity lie on the empty conic, expected {expected}")]
    ConicConditionFailed {
        on_conic: usize,
        total: usize,
        expected: usize,
    },
    #[error("curve is contained in the plane")]
    CurveInPlane,
    #[error("tangent lines at the meeting point are dependent")]
    TangentsDependent,
    #[error("curves meet in {0} real points, expected exactly one")]
    MultipleIntersections(usize),
    #[error("joined curve is still singular at epsilon = {0}")]
    StillSingular(Rat),

    #[error("projection center is not generic: {0}")]
    NonGenericCenter(String),
    #[error("refinement budget exhausted")]
    PrecisionExhausted,
    #[error("curves intersect in real points")]
    CurvesIntersect,
    #[error("no common affine chart contains both curves")]
    NoCommonAffineChart,

    #[error("parse error: {0}")]
    Parse(String),
    #[error("internal invariant violated: {0}")]
    Internal(String),
}

impl Error {
    pub fn class(&self) -> ErrorClass {
        match self {
            Error::Parse(_) => ErrorClass::Parse,
            Error::Internal(_) => ErrorClass::Internal,
            _ => ErrorClass::Math,
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
