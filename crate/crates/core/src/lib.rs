//! Discrete centroaffine moving frames on polygonal curves, and the affine
//! codes of Koch curves, Koch snowflakes and Hilbert curves built on them.
//!
//! The crate is `no_std` (it needs `alloc`). Every construction is generic
//! over [`Scalar`], so the same code runs in exact rational arithmetic, where
//! the fractal identities hold with equality, or in `f64`.
//!
//! - [`frame`]: curvatures `κ`, `κ̄`, torsion `τ` and the chain recurrences.
//! - [`koch`], [`snowflake`], [`hilbert`]: codes, index formulas, generators.
//! - [`equivalence`]: deciding affine/centroaffine equivalence.
//! - [`oracle`]: classical constructions used to cross-check the generators.
#![no_std]

extern crate alloc;
#[cfg(test)]
extern crate std;

pub mod curve;
pub mod equivalence;
mod counting;
mod error;
pub mod frame;
pub mod hilbert;
pub mod koch;
pub mod oracle;
pub mod point;
pub mod scalar;
pub mod snowflake;

pub use curve::{DiscreteCurve, EdgeTangent, PlanarCurve, SpaceCurve};
pub use counting::MAX_COUNT_STEP;
pub use error::{Error, Result};
pub use frame::{InvariantProfile, PlanarStep, ProfileEntry, SpaceStep};
pub use point::{det2, det3, Point, Point2, Point3};
pub use scalar::{ratio, Rational, Scalar, Tolerance};
