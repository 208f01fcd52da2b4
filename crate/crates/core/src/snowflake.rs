//! Affine Koch snowflakes.
//!
//! The snowflake is a closed curve with `3·4^(n-1)` vertices, all of which
//! belong to sharp or obtuse pairs. Its cyclic code starts at `111111` and
//! grows by appending `101` after every element of the previous step.

use alloc::vec::Vec;
use core::fmt;

use crate::counting::{check_index, check_step, fmt_bits, pow4, strip_fours};
use crate::curve::PlanarCurve;
use crate::error::{Error, Result};
use crate::frame::{close_chain, ensure_planar_frame, InvariantProfile};
use crate::koch::{decode_pairs, PairCoefficients};
use crate::point::Point2;
use crate::scalar::Scalar;

/// Cyclic bit code of a snowflake.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SnowflakeCode {
    step: u32,
    bits: Vec<bool>,
}

impl SnowflakeCode {
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

    /// 1-based positions holding `1`.
    pub fn one_positions(&self) -> Vec<u64> {
        positions(&self.bits)
    }
}

impl fmt::Display for SnowflakeCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt_bits(&self.bits, f)
    }
}

fn positions(bits: &[bool]) -> Vec<u64> {
    bits.iter()
        .enumerate()
        .filter(|(_, &b)| b)
        .map(|(i, _)| i as u64 + 1)
        .collect()
}

/// `6·4^(n-2)`.
pub fn element_count(n: u32) -> Result<u64> {
    check_step(n, 2)?;
    Ok(6 * pow4(n - 2))
}

/// Vertex count `3·4^(n-1)`.
pub fn point_count(n: u32) -> Result<u64> {
    check_step(n, 2)?;
    Ok(3 * pow4(n - 1))
}

pub fn snowflake_code(n: u32) -> Result<SnowflakeCode> {
    let len = element_count(n)? as usize;
    let mut bits = Vec::with_capacity(len);
    bits.extend_from_slice(&[true; 6]);
    for _ in 2..n {
        bits = bits
            .iter()
            .flat_map(|&e| [e, true, false, true])
            .collect();
    }
    Ok(SnowflakeCode { step: n, bits })
}

/// Whether element `idx` (1-based) of the step-`n` code is `1`.
///
/// Either `idx ∈ {1, 4^(n-1)/2 + 1, 4^(n-1) + 1}` or `idx - 1 = 4^l (2k - 1)`.
pub fn is_one_element(n: u32, idx: u64) -> Result<bool> {
    check_index(idx, element_count(n)?)?;
    Ok(one_index(n, idx))
}

fn one_index(n: u32, idx: u64) -> bool {
    let q = pow4(n - 1);
    if idx == 1 || idx == q / 2 + 1 || idx == q + 1 {
        return true;
    }
    strip_fours(idx - 1).1 % 2 == 1
}

/// Positions of `1` in the step-`n` code, from the closed-form families
/// `4^l (2k-1) + 1` and `4^(n-1)(k-1)/2 + 1`.
pub fn snowflake_one_positions(n: u32) -> Result<Vec<u64>> {
    check_step(n, 2)?;
    let mut out = Vec::new();
    for l in 0..=n - 2 {
        for k in 1..=3 * pow4(n - 2 - l) {
            out.push(pow4(l) * (2 * k - 1) + 1);
        }
    }
    for k in 1..=3 {
        out.push(pow4(n - 1) * (k - 1) / 2 + 1);
    }
    out.sort_unstable();
    out.dedup();
    Ok(out)
}

/// Sharp-point vertex indices, from `4^l (4k-2) + 1` and `4^(n-1)(k-1) + 1`.
///
/// These use the reference labeling, in which element `idx` covers vertices
/// `2·idx - 2, 2·idx - 1` (mod `3·4^(n-1)`); [`generate_snowflake`] instead
/// starts element 1 at vertex 2. The two differ by a cyclic shift of two.
pub fn snowflake_sharp_positions(n: u32) -> Result<Vec<u64>> {
    check_step(n, 2)?;
    let mut out = Vec::new();
    for l in 0..=n - 2 {
        for k in 1..=3 * pow4(n - 2 - l) {
            out.push(pow4(l) * (4 * k - 2) + 1);
        }
    }
    for k in 1..=3 {
        out.push(pow4(n - 1) * (k - 1) + 1);
    }
    out.sort_unstable();
    out.dedup();
    Ok(out)
}

/// Generates the closed step-`n` affine snowflake.
///
/// The chain produces `3·4^(n-1) + 3` points; the last three must land back
/// on `init` and are dropped.
pub fn generate_snowflake<S: Scalar>(init: &[Point2<S>; 3], n: u32) -> Result<PlanarCurve<S>> {
    ensure_planar_frame(init)?;
    let elements = element_count(n)?;
    let p = point_count(n)? as usize;
    let coeffs = PairCoefficients::new();
    let mut points = Vec::with_capacity(p + 3);
    points.extend_from_slice(init);
    for idx in 1..=elements {
        coeffs.push(&mut points, one_index(n, idx));
    }
    close_chain(points, p)
}

/// Reads a closed profile as code bits, pairing vertices `(2j, 2j+1)`.
///
/// Falls back to pairing `(2j-1, 2j)` when the first alignment fails.
pub fn decode_snowflake<S: Scalar>(profile: &InvariantProfile<S>, tol: &S) -> Result<Vec<bool>> {
    if !profile.closed || profile.dim != 2 {
        return Err(Error::ShapeMismatch);
    }
    let mut entries = profile.entries.clone();
    if entries.is_empty() {
        return Ok(Vec::new());
    }
    entries.rotate_left(1);
    decode_pairs(&entries, tol).or_else(|_| decode_pairs(&profile.entries, tol))
}

/// Whether `a` equals `b` read from some starting offset.
pub fn is_cyclic_shift(a: &[bool], b: &[bool]) -> bool {
    a.len() == b.len()
        && (a.is_empty() || (0..a.len()).any(|s| a.iter().cycle().skip(s).zip(b).all(|(x, y)| x == y)))
}
