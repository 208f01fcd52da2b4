//! Deciding whether two curves differ by an affine or centroaffine map.
//!
//! The decision is made on invariant profiles. An explicit map is then
//! recovered from the points as a witness; when the two disagree in float
//! mode the profile verdict stands.

use alloc::vec::Vec;
use core::fmt;

use crate::curve::DiscreteCurve;
use crate::error::{Error, Result};
use crate::frame::{planar_curvatures, space_invariants, InvariantProfile, ProfileEntry};
use crate::point::Point;
use crate::scalar::Scalar;

/// Which group the comparison is taken over.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum EquivalenceMode {
    /// `x ↦ Ax + b` on planar curves; compares `κ, κ̄`.
    PlanarAffine,
    /// `x ↦ Ax` on space curves; compares `κ, κ̄, τ`.
    Centroaffine,
    /// Closed curves in either dimension, up to a change of starting vertex.
    Cyclic,
}

impl EquivalenceMode {
    pub fn as_str(self) -> &'static str {
        match self {
            EquivalenceMode::PlanarAffine => "planar-affine",
            EquivalenceMode::Centroaffine => "centroaffine",
            EquivalenceMode::Cyclic => "cyclic",
        }
    }
}

impl fmt::Display for EquivalenceMode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// `x ↦ matrix · x + translation`.
#[derive(Clone, Debug, PartialEq)]
pub struct AffineMap<S, const D: usize> {
    /// Row-major.
    pub matrix: [[S; D]; D],
    pub translation: Point<S, D>,
}

impl<S: Scalar, const D: usize> AffineMap<S, D> {
    pub fn identity() -> Self {
        AffineMap {
            matrix: core::array::from_fn(|i| core::array::from_fn(|j| if i == j { S::one() } else { S::zero() })),
            translation: Point::origin(),
        }
    }

    pub fn apply(&self, p: &Point<S, D>) -> Point<S, D> {
        Point::new(core::array::from_fn(|i| {
            (0..D).fold(self.translation[i].clone(), |acc, j| {
                acc + self.matrix[i][j].clone() * p[j].clone()
            })
        }))
    }

    pub fn apply_curve(&self, curve: &DiscreteCurve<S, D>) -> DiscreteCurve<S, D> {
        curve.map(|p| self.apply(p))
    }

    pub fn is_linear(&self) -> bool {
        self.translation.is_zero()
    }

    /// Largest coordinate error of `self(a_i)` against `b_i`.
    pub fn residual(&self, a: &[Point<S, D>], b: &[Point<S, D>]) -> f64 {
        a.iter()
            .zip(b)
            .map(|(p, q)| self.apply(p).sub(q).magnitude())
            .fold(0.0, f64::max)
    }
}

/// Outcome of [`are_equivalent`].
#[derive(Clone, Debug, PartialEq)]
pub struct EquivalenceReport<S, const D: usize> {
    pub equivalent: bool,
    pub mode: EquivalenceMode,
    /// A map carrying the first curve onto the second, when one was found.
    pub witness: Option<AffineMap<S, D>>,
    /// Largest entrywise profile difference at the best alignment; infinite
    /// when the profiles cannot be aligned at all.
    pub max_deviation: f64,
    /// Starting-vertex offset of the second curve at the best alignment.
    pub shift: usize,
}

#[derive(Clone, Copy, Debug)]
struct Alignment {
    equal: bool,
    shift: usize,
    deviation: f64,
}

fn entry_deviation<S: Scalar>(a: &ProfileEntry<S>, b: &ProfileEntry<S>, tol: &S) -> (bool, f64) {
    let mut equal = true;
    let mut dev: f64 = 0.0;
    let mut check = |x: &Option<S>, y: &Option<S>| match (x, y) {
        (None, None) => {}
        (Some(x), Some(y)) => {
            equal &= x.within(y, tol);
            dev = dev.max((x.clone() - y.clone()).abs().to_f64());
        }
        _ => {
            equal = false;
            dev = f64::INFINITY;
        }
    };
    check(&Some(a.kappa.clone()), &Some(b.kappa.clone()));
    check(&a.kappa_bar, &b.kappa_bar);
    check(&a.tau, &b.tau);
    (equal, dev)
}

fn align<S: Scalar>(
    a: &InvariantProfile<S>,
    b: &InvariantProfile<S>,
    tol: &S,
    cyclic: bool,
) -> Result<Alignment> {
    if a.dim != b.dim {
        return Err(Error::ShapeMismatch);
    }
    let unaligned = Alignment {
        equal: false,
        shift: 0,
        deviation: f64::INFINITY,
    };
    if a.entries.len() != b.entries.len() {
        return Ok(unaligned);
    }
    if a.closed != b.closed {
        return Err(Error::ShapeMismatch);
    }
    let len = a.entries.len();
    let shifts = if cyclic && a.closed { len.max(1) } else { 1 };
    let mut best = unaligned;
    for shift in 0..shifts {
        let mut equal = true;
        let mut deviation: f64 = 0.0;
        for (i, ea) in a.entries.iter().enumerate() {
            let (eq, dev) = entry_deviation(ea, &b.entries[(i + shift) % len], tol);
            equal &= eq;
            deviation = deviation.max(dev);
            if !equal && S::EXACT {
                break;
            }
        }
        if equal {
            return Ok(Alignment {
                equal,
                shift,
                deviation,
            });
        }
        if deviation < best.deviation {
            best = Alignment {
                equal,
                shift,
                deviation,
            };
        }
    }
    Ok(best)
}

/// Entrywise comparison of two profiles.
///
/// Exact for rationals, `|Δ| ≤ tol` for floats. An undefined `κ̄` only matches
/// another undefined `κ̄`. With `cyclic` set, closed profiles are also
/// compared under every rotation. Profiles of different length are unequal;
/// a dimension or closedness mismatch is an error.
pub fn profiles_equal<S: Scalar>(
    a: &InvariantProfile<S>,
    b: &InvariantProfile<S>,
    tol: &S,
    cyclic: bool,
) -> Result<bool> {
    Ok(align(a, b, tol, cyclic)?.equal)
}

/// Curves whose invariant profile is defined by this crate.
pub trait Profiled<S: Scalar, const D: usize> {
    fn profile(curve: &DiscreteCurve<S, D>) -> Result<InvariantProfile<S>>;
}

/// Selects the profile for a dimension.
pub struct Dim;

impl<S: Scalar> Profiled<S, 2> for Dim {
    fn profile(curve: &DiscreteCurve<S, 2>) -> Result<InvariantProfile<S>> {
        planar_curvatures(curve)
    }
}

impl<S: Scalar> Profiled<S, 3> for Dim {
    fn profile(curve: &DiscreteCurve<S, 3>) -> Result<InvariantProfile<S>> {
        space_invariants(curve)
    }
}

/// Decides equivalence of `a` and `b` and, when equivalent, tries to recover
/// the map.
///
/// `PlanarAffine` needs planar curves and `Centroaffine` space curves;
/// `Cyclic` accepts either but only closed curves are rotated.
pub fn are_equivalent<S: Scalar, const D: usize>(
    a: &DiscreteCurve<S, D>,
    b: &DiscreteCurve<S, D>,
    mode: EquivalenceMode,
    tol: &S,
) -> Result<EquivalenceReport<S, D>>
where
    Dim: Profiled<S, D>,
{
    match (mode, D) {
        (EquivalenceMode::PlanarAffine, 2) | (EquivalenceMode::Centroaffine, 3) | (EquivalenceMode::Cyclic, _) => {}
        _ => return Err(Error::ModeMismatch),
    }
    let pa = Dim::profile(a)?;
    let pb = Dim::profile(b)?;
    let alignment = align(&pa, &pb, tol, mode == EquivalenceMode::Cyclic)?;
    let witness = if alignment.equal {
        let b = b.rotated(alignment.shift);
        let recovered = if D == 3 {
            recover_linear_map(a.points(), b.points())
        } else {
            recover_affine_map(a.points(), b.points())
        };
        recovered.ok().flatten()
    } else {
        None
    };
    Ok(EquivalenceReport {
        equivalent: alignment.equal,
        mode,
        witness,
        max_deviation: alignment.deviation,
        shift: alignment.shift,
    })
}

fn verify_tolerance<S: Scalar, const D: usize>(a: &[Point<S, D>], b: &[Point<S, D>]) -> S {
    let scale = a.iter().chain(b).map(Point::magnitude).fold(1.0, f64::max);
    S::tolerance(1e-9 * scale)
}

/// Inverts a square matrix by Gauss-Jordan elimination with partial pivoting.
fn invert<S: Scalar, const D: usize>(m: &[[S; D]; D]) -> Option<[[S; D]; D]> {
    let mut a: Vec<Vec<S>> = m.iter().map(|r| r.to_vec()).collect();
    let mut inv: Vec<Vec<S>> = (0..D)
        .map(|i| (0..D).map(|j| if i == j { S::one() } else { S::zero() }).collect())
        .collect();
    let scale = m.iter().flatten().map(|x| x.abs().to_f64()).fold(0.0, f64::max);
    for col in 0..D {
        let pivot = (col..D).max_by(|&i, &j| {
            a[i][col]
                .abs()
                .to_f64()
                .partial_cmp(&a[j][col].abs().to_f64())
                .unwrap_or(core::cmp::Ordering::Equal)
        })?;
        if a[pivot][col].is_negligible(scale, Default::default()) {
            return None;
        }
        a.swap(col, pivot);
        inv.swap(col, pivot);
        let p = a[col][col].clone();
        for j in 0..D {
            a[col][j] = a[col][j].clone() / p.clone();
            inv[col][j] = inv[col][j].clone() / p.clone();
        }
        for row in 0..D {
            if row == col || a[row][col].is_zero() {
                continue;
            }
            let f = a[row][col].clone();
            for j in 0..D {
                a[row][j] = a[row][j].clone() - f.clone() * a[col][j].clone();
                inv[row][j] = inv[row][j].clone() - f.clone() * inv[col][j].clone();
            }
        }
    }
    Some(core::array::from_fn(|i| core::array::from_fn(|j| inv[i][j].clone())))
}

/// Picks `D` of `vectors` that are linearly independent, greedily in order.
fn independent_subset<S: Scalar, const D: usize>(vectors: &[Point<S, D>]) -> Option<Vec<usize>> {
    let mut chosen = Vec::new();
    let mut basis: Vec<(Point<S, D>, usize)> = Vec::new();
    for (idx, v) in vectors.iter().enumerate() {
        let mut r = v.clone();
        for (b, lead) in &basis {
            let f = r[*lead].clone() / b[*lead].clone();
            r = r.sub(&b.scale(&f));
        }
        let scale = v.magnitude();
        if let Some(lead) = (0..D).find(|&i| !r[i].is_negligible(scale, Default::default())) {
            basis.push((r, lead));
            chosen.push(idx);
            if chosen.len() == D {
                return Some(chosen);
            }
        }
    }
    None
}

fn check_counts<S: Scalar, const D: usize>(a: &[Point<S, D>], b: &[Point<S, D>], needed: usize) -> Result<()> {
    if a.len() != b.len() {
        return Err(Error::ShapeMismatch);
    }
    if a.len() < needed {
        return Err(Error::TooFewPoints {
            needed,
            got: a.len(),
        });
    }
    Ok(())
}

/// Solves `M · cols(a_sel) = cols(b_sel)` for `M`.
fn solve_matrix<S: Scalar, const D: usize>(
    a_sel: &[Point<S, D>],
    b_sel: &[Point<S, D>],
) -> Option<[[S; D]; D]> {
    let a_cols: [[S; D]; D] = core::array::from_fn(|i| core::array::from_fn(|j| a_sel[j][i].clone()));
    let inv = invert(&a_cols)?;
    Some(core::array::from_fn(|i| {
        core::array::from_fn(|j| {
            (0..D).fold(S::zero(), |acc, k| acc + b_sel[k][i].clone() * inv[k][j].clone())
        })
    }))
}

fn verified<S: Scalar, const D: usize>(
    map: AffineMap<S, D>,
    a: &[Point<S, D>],
    b: &[Point<S, D>],
) -> Option<AffineMap<S, D>> {
    let tol = verify_tolerance(a, b);
    a.iter()
        .zip(b)
        .all(|(p, q)| map.apply(p).within(q, &tol))
        .then_some(map)
}

/// Finds `x ↦ Ax + t` with `A·a_i + t = b_i` for every `i`.
///
/// The map is fixed by the first affinely independent `D + 1` points of `a`
/// and then checked against every pair; `None` if any pair disagrees.
pub fn recover_affine_map<S: Scalar, const D: usize>(
    a: &[Point<S, D>],
    b: &[Point<S, D>],
) -> Result<Option<AffineMap<S, D>>> {
    check_counts(a, b, D + 1)?;
    let diffs: Vec<_> = a[1..].iter().map(|p| p.sub(&a[0])).collect();
    let picked = independent_subset(&diffs).ok_or(Error::DegeneratePoints)?;
    let a_sel: Vec<_> = picked.iter().map(|&i| diffs[i].clone()).collect();
    let b_sel: Vec<_> = picked.iter().map(|&i| b[i + 1].sub(&b[0])).collect();
    let Some(matrix) = solve_matrix(&a_sel, &b_sel) else {
        return Err(Error::DegeneratePoints);
    };
    let mut map = AffineMap {
        matrix,
        translation: Point::origin(),
    };
    map.translation = b[0].sub(&map.apply(&a[0]));
    Ok(verified(map, a, b))
}

/// Finds a linear `x ↦ Ax` with `A·a_i = b_i` for every `i`.
pub fn recover_linear_map<S: Scalar, const D: usize>(
    a: &[Point<S, D>],
    b: &[Point<S, D>],
) -> Result<Option<AffineMap<S, D>>> {
    check_counts(a, b, D)?;
    let picked = independent_subset(a).ok_or(Error::DegeneratePoints)?;
    let a_sel: Vec<_> = picked.iter().map(|&i| a[i].clone()).collect();
    let b_sel: Vec<_> = picked.iter().map(|&i| b[i].clone()).collect();
    let Some(matrix) = solve_matrix(&a_sel, &b_sel) else {
        return Err(Error::DegeneratePoints);
    };
    let map = AffineMap {
        matrix,
        translation: Point::origin(),
    };
    Ok(verified(map, a, b))
}
