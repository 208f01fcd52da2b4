use core::fmt;

/// Everything that can go wrong in this crate.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Error {
    /// The curve has fewer points than the operation needs.
    TooFewPoints { needed: usize, got: usize },
    /// A coordinate is NaN or infinite.
    NonFinite,
    /// `[r_{k-1}, r_k, r_{k+1}]` vanished at vertex `k` (1-based).
    NotAdmissible { k: usize },
    /// A profile entry at vertex `k` has no second curvature.
    UndefinedKappaBar { k: usize },
    /// Inverting a chain step needs a nonzero first curvature.
    NonInvertibleStep,
    /// The initial points are collinear or repeated.
    DegenerateInit,
    /// A construction was asked for a step outside its domain.
    StepOutOfRange { step: u32, min: u32, max: u32 },
    /// A 1-based index is outside `1..=len`.
    IndexOutOfRange { index: u64, len: u64 },
    /// A closed chain did not return to its initial points.
    ClosureFailed,
    /// Two objects with different dimension or closedness were compared.
    ShapeMismatch,
    /// No affinely independent subset of points exists.
    DegeneratePoints,
    /// A curvature array has a length no Hilbert step produces.
    InvalidKappaLength { len: usize },
    /// A vertex pair does not carry the curvature values of a code element.
    Undecodable { k: usize },
    /// The equivalence mode does not fit the curve dimension.
    ModeMismatch,
}

pub type Result<T> = core::result::Result<T, Error>;

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::TooFewPoints { needed, got } => {
                write!(f, "need at least {needed} points, got {got}")
            }
            Error::NonFinite => f.write_str("coordinate is not finite"),
            Error::NotAdmissible { k } => {
                write!(f, "curve is not centroaffine admissible at k={k}")
            }
            Error::UndefinedKappaBar { k } => {
                write!(f, "second curvature is undefined at k={k}")
            }
            Error::NonInvertibleStep => f.write_str("chain step with zero curvature is not invertible"),
            Error::DegenerateInit => f.write_str("initial points are collinear or coincide"),
            Error::StepOutOfRange { step, min, max } => {
                write!(f, "step {step} outside {min}..={max}")
            }
            Error::IndexOutOfRange { index, len } => {
                write!(f, "index {index} outside 1..={len}")
            }
            Error::ClosureFailed => f.write_str("closed chain does not return to its initial points"),
            Error::ShapeMismatch => f.write_str("dimension or closedness differ"),
            Error::DegeneratePoints => f.write_str("points do not span an affine frame"),
            Error::InvalidKappaLength { len } => {
                write!(f, "{len} curvatures do not match any Hilbert step")
            }
            Error::Undecodable { k } => write!(f, "vertex pair at k={k} is not a code element"),
            Error::ModeMismatch => f.write_str("equivalence mode does not match curve dimension"),
        }
    }
}

impl core::error::Error for Error {}
