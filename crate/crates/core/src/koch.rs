//! Affine Koch curves.
//!
//! At step `n` a Koch curve has `4^(n-1) + 1` vertices. Dropping the first
//! vertex and the last two, the remaining ones group into consecutive pairs
//! whose curvatures are one of two fixed patterns: a *sharp* pair (code `1`)
//! or an *obtuse* pair (code `0`). The resulting bit string obeys
//! `C_{n+1} = C_n 0 C_n 1 C_n 0 C_n` with `C_2 = 1`, and the curve is
//! regenerated from any three non-collinear points by running the planar
//! chain through the code.

use alloc::vec::Vec;
use core::fmt;

use rand_core::RngCore;

use crate::counting::{check_index, check_step, fmt_bits, pow4, strip_fours};
use crate::curve::{DiscreteCurve, PlanarCurve, SpaceCurve};
use crate::error::{Error, Result};
use crate::frame::{
    ensure_planar_frame, push_step, Admissibility, InvariantProfile, PlanarStep, ProfileEntry,
};
use crate::point::{Point2, Point3};
use crate::scalar::Scalar;

/// `sin(π/3)`, correctly rounded.
pub const SIN_60: f64 = 0.866_025_403_784_438_6;

/// The two vertex-pair types of a Koch curve.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum AnglePair {
    /// Code `1`: `(κ, κ̄) = (-1, -1), (-1, 1)`.
    Sharp,
    /// Code `0`: `(κ, κ̄) = (1, 1), (1, 1)`.
    Obtuse,
}

impl AnglePair {
    pub fn from_bit(bit: bool) -> Self {
        if bit {
            AnglePair::Sharp
        } else {
            AnglePair::Obtuse
        }
    }

    pub fn bit(self) -> bool {
        self == AnglePair::Sharp
    }

    /// `(κ, κ̄)` at the two vertices of the pair.
    pub fn values(self) -> [(i64, i64); 2] {
        match self {
            AnglePair::Sharp => [(-1, -1), (-1, 1)],
            AnglePair::Obtuse => [(1, 1), (1, 1)],
        }
    }

    pub fn steps<S: Scalar>(self) -> [PlanarStep<S>; 2] {
        self.values()
            .map(|(k, kb)| PlanarStep::new(S::from_i64(k), S::from_i64(kb)))
    }

    /// Identifies the pair type of two consecutive profile entries.
    pub fn classify<S: Scalar>(first: &ProfileEntry<S>, second: &ProfileEntry<S>, tol: &S) -> Option<Self> {
        [AnglePair::Sharp, AnglePair::Obtuse].into_iter().find(|pair| {
            pair.values().iter().zip([first, second]).all(|(&(k, kb), e)| {
                e.kappa.within(&S::from_i64(k), tol)
                    && e
                        .kappa_bar
                        .as_ref()
                        .is_some_and(|v| v.within(&S::from_i64(kb), tol))
            })
        })
    }
}

/// Chain coefficients for both vertices of each pair type, precomputed.
pub(crate) struct PairCoefficients<S> {
    sharp: [(S, S, S); 2],
    obtuse: [(S, S, S); 2],
}

impl<S: Scalar> PairCoefficients<S> {
    pub(crate) fn new() -> Self {
        PairCoefficients {
            sharp: AnglePair::Sharp.steps::<S>().map(|s| s.coefficients()),
            obtuse: AnglePair::Obtuse.steps::<S>().map(|s| s.coefficients()),
        }
    }

    pub(crate) fn push(&self, points: &mut Vec<Point2<S>>, sharp: bool) {
        let c = if sharp { &self.sharp } else { &self.obtuse };
        push_step(points, &c[0]);
        push_step(points, &c[1]);
    }
}

/// Reads a run of profile entries two at a time as code bits.
pub fn decode_pairs<S: Scalar>(entries: &[ProfileEntry<S>], tol: &S) -> Result<Vec<bool>> {
    if entries.len() % 2 != 0 {
        return Err(Error::Undecodable {
            k: entries.last().map_or(0, |e| e.k),
        });
    }
    entries
        .chunks_exact(2)
        .map(|pair| {
            AnglePair::classify(&pair[0], &pair[1], tol)
                .map(AnglePair::bit)
                .ok_or(Error::Undecodable { k: pair[0].k })
        })
        .collect()
}

/// The bit code of a Koch curve at some step.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KochCode {
    step: u32,
    bits: Vec<bool>,
}

impl KochCode {
    pub fn step(&self) -> u32 {
        self.step
    }

    pub fn bits(&self) -> &[bool] {
        &self.bits
    }

    pub fn len(&self) -> usize {
        self.bits.len()
    }

    pub fn is_empty(&self) -> bool {
        self.bits.is_empty()
    }

    pub fn ones(&self) -> usize {
        self.bits.iter().filter(|&&b| b).count()
    }

    pub fn zeros(&self) -> usize {
        self.len() - self.ones()
    }
}

impl fmt::Display for KochCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt_bits(&self.bits, f)
    }
}

/// `2·4^(n-2) - 1`.
pub fn element_count(n: u32) -> Result<u64> {
    check_step(n, 2)?;
    Ok(2 * pow4(n - 2) - 1)
}

/// The code at step `n ≥ 2`, built by the self-similar recursion.
pub fn koch_code(n: u32) -> Result<KochCode> {
    let len = element_count(n)? as usize;
    let mut bits = Vec::with_capacity(len);
    bits.push(true);
    for _ in 2..n {
        let prev = bits.clone();
        for sep in [false, true, false] {
            bits.push(sep);
            bits.extend_from_slice(&prev);
        }
    }
    debug_assert_eq!(bits.len(), len);
    Ok(KochCode { step: n, bits })
}

/// 1-based index `idx` carries a `1` iff `idx = 4^i (2k - 1)`.
pub(crate) fn sharp_index(idx: u64) -> bool {
    strip_fours(idx).1 % 2 == 1
}

/// Whether element `idx` (1-based) of the step-`n` code is `1`.
pub fn is_sharp_element(n: u32, idx: u64) -> Result<bool> {
    check_index(idx, element_count(n)?)?;
    Ok(sharp_index(idx))
}

/// Vertex indices of the sharp points, `4^(n-2-i)(4j - 2) + 1`.
pub fn sharp_point_positions(n: u32) -> Result<Vec<u64>> {
    check_step(n, 2)?;
    let mut out = Vec::new();
    for i in 0..=n - 2 {
        for j in 1..=pow4(i) {
            out.push(pow4(n - 2 - i) * (4 * j - 2) + 1);
        }
    }
    out.sort_unstable();
    out.dedup();
    Ok(out)
}

/// Closed-form sizes of a step-`n` Koch curve.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct KochCounts {
    pub points: u64,
    pub sharp_pairs: u64,
    pub obtuse_pairs: u64,
    pub elements: u64,
}

pub fn koch_counts(n: u32) -> Result<KochCounts> {
    let elements = element_count(n)?;
    let p = pow4(n - 1);
    Ok(KochCounts {
        points: p + 1,
        sharp_pairs: (p - 1) / 3,
        obtuse_pairs: (p - 4) / 6,
        elements,
    })
}

/// Generates the step-`n` affine Koch curve from three non-collinear points.
///
/// Element `idx` of the code appends two points, so vertex `2·idx` and
/// `2·idx + 1` carry that element's curvature pair.
pub fn generate_koch<S: Scalar>(init: &[Point2<S>; 3], n: u32) -> Result<PlanarCurve<S>> {
    ensure_planar_frame(init)?;
    let elements = element_count(n)?;
    let coeffs = PairCoefficients::new();
    let mut points = Vec::with_capacity(3 + 2 * elements as usize);
    points.extend_from_slice(init);
    for idx in 1..=elements {
        coeffs.push(&mut points, sharp_index(idx));
    }
    DiscreteCurve::open(points)
}

/// Chains a planar Koch code in space with `τ = tau_ratio · κ`.
pub fn extend_space_koch<S: Scalar>(
    init: &[Point3<S>; 3],
    n: u32,
    tau_ratio: S,
    admissibility: Admissibility,
) -> Result<SpaceCurve<S>> {
    let code = koch_code(n)?;
    let steps: Vec<_> = code
        .bits()
        .iter()
        .flat_map(|&b| AnglePair::from_bit(b).steps::<S>())
        .map(|s| {
            let tau = tau_ratio.clone() * s.kappa.clone();
            s.with_tau(tau)
        })
        .collect();
    crate::frame::reconstruct_space(init, &steps, admissibility)
}

/// The third point making `r_1, r_2, r_3` the start of a standard Koch curve:
/// `r_2 + Rot(π/3)(r_2 - r_1)`.
pub fn standard_koch_init(r1: &Point2<f64>, r2: &Point2<f64>) -> Result<Point2<f64>> {
    if r1 == r2 {
        return Err(Error::DegenerateInit);
    }
    let d = r2.sub(r1);
    Ok(Point2::new([
        r2[0] + 0.5 * d[0] - SIN_60 * d[1],
        r2[1] + SIN_60 * d[0] + 0.5 * d[1],
    ]))
}

/// Recovers the code bits from the profile of an open Koch curve.
pub fn decode_koch<S: Scalar>(profile: &InvariantProfile<S>, tol: &S) -> Result<Vec<bool>> {
    if profile.closed || profile.dim != 2 {
        return Err(Error::ShapeMismatch);
    }
    decode_pairs(&profile.entries, tol)
}

/// A step-`n` code with the same numbers of `1`s and `0`s as [`koch_code`],
/// in random order.
pub fn stochastic_code<R: RngCore + ?Sized>(n: u32, rng: &mut R) -> Result<KochCode> {
    let mut code = koch_code(n)?;
    let bits = &mut code.bits;
    for i in (1..bits.len()).rev() {
        let j = (rng.next_u64() % (i as u64 + 1)) as usize;
        bits.swap(i, j);
    }
    Ok(code)
}

/// Runs the chain through an arbitrary bit code.
pub fn generate_from_bits<S: Scalar>(init: &[Point2<S>; 3], bits: &[bool]) -> Result<PlanarCurve<S>> {
    ensure_planar_frame(init)?;
    let coeffs = PairCoefficients::new();
    let mut points = Vec::with_capacity(3 + 2 * bits.len());
    points.extend_from_slice(init);
    for &b in bits {
        coeffs.push(&mut points, b);
    }
    DiscreteCurve::open(points)
}
