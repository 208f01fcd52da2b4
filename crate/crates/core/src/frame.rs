//! Discrete centroaffine invariants and the chain recurrences that invert them.
//!
//! For a planar curve the invariants at vertex `k` are ratios of edge-tangent
//! determinants,
//!
//! ```text
//! κ_k = [t_k, t_{k+1}] / [t_{k-1}, t_k]     κ̄_k = [t_{k-1}, t_{k+1}] / [t_{k-1}, t_k]
//! ```
//!
//! and the curve is recovered from any three consecutive points by
//! `r_{k+2} = κ_k r_{k-1} + (-κ_k - κ̄_k) r_k + (1 + κ̄_k) r_{k+1}`.
//!
//! Space curves use position-vector determinants normalized by
//! `[r_{k-1}, r_k, r_{k+1}]`, adding the torsion `τ_k`; the recurrence gains a
//! `τ_k r_{k+1}` term.

use alloc::vec::Vec;

use crate::curve::{DiscreteCurve, PlanarCurve, SpaceCurve};
use crate::error::{Error, Result};
use crate::point::{det2, det3, Point, Point2, Point3};
use crate::scalar::{Scalar, Tolerance};

/// Invariants at one vertex.
#[derive(Clone, Debug, PartialEq)]
pub struct ProfileEntry<S> {
    /// 1-based vertex index.
    pub k: usize,
    pub kappa: S,
    /// `None` where `[t_{k-1}, t_k]` vanished (planar curves only).
    pub kappa_bar: Option<S>,
    /// Present for space curves only.
    pub tau: Option<S>,
}

/// Per-vertex invariants of a whole curve.
///
/// Open curves with `M` points cover `k = 2..=M-2`; closed curves cover every
/// vertex `k = 1..=p`.
#[derive(Clone, Debug, PartialEq)]
pub struct InvariantProfile<S> {
    pub dim: usize,
    pub closed: bool,
    pub entries: Vec<ProfileEntry<S>>,
}

/// One step of the planar chain.
#[derive(Clone, Debug, PartialEq)]
pub struct PlanarStep<S> {
    pub kappa: S,
    pub kappa_bar: S,
}

/// One step of the space chain.
#[derive(Clone, Debug, PartialEq)]
pub struct SpaceStep<S> {
    pub kappa: S,
    pub kappa_bar: S,
    pub tau: S,
}

impl<S: Scalar> PlanarStep<S> {
    pub fn new(kappa: S, kappa_bar: S) -> Self {
        PlanarStep { kappa, kappa_bar }
    }

    /// Coefficients `(c1, c2, c3)` with `r_{k+2} = c1 r_{k-1} + c2 r_k + c3 r_{k+1}`.
    pub fn coefficients(&self) -> (S, S, S) {
        (
            self.kappa.clone(),
            -self.kappa.clone() - self.kappa_bar.clone(),
            S::one() + self.kappa_bar.clone(),
        )
    }

    pub fn with_tau(&self, tau: S) -> SpaceStep<S> {
        SpaceStep::new(self.kappa.clone(), self.kappa_bar.clone(), tau)
    }
}

impl<S: Scalar> SpaceStep<S> {
    pub fn new(kappa: S, kappa_bar: S, tau: S) -> Self {
        SpaceStep {
            kappa,
            kappa_bar,
            tau,
        }
    }

    pub fn coefficients(&self) -> (S, S, S) {
        (
            self.kappa.clone(),
            -self.kappa.clone() - self.kappa_bar.clone(),
            self.tau.clone() + self.kappa_bar.clone() + S::one(),
        )
    }
}

impl<S: Scalar> InvariantProfile<S> {
    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn kappas(&self) -> impl Iterator<Item = &S> + '_ {
        self.entries.iter().map(|e| &e.kappa)
    }

    /// Chain steps, failing on the first undefined `κ̄`.
    pub fn planar_steps(&self) -> Result<Vec<PlanarStep<S>>> {
        self.entries
            .iter()
            .map(|e| {
                let kappa_bar = e.kappa_bar.clone().ok_or(Error::UndefinedKappaBar { k: e.k })?;
                Ok(PlanarStep::new(e.kappa.clone(), kappa_bar))
            })
            .collect()
    }

    /// Space chain steps; a missing `τ` counts as zero.
    pub fn space_steps(&self) -> Result<Vec<SpaceStep<S>>> {
        self.entries
            .iter()
            .map(|e| {
                let kappa_bar = e.kappa_bar.clone().ok_or(Error::UndefinedKappaBar { k: e.k })?;
                Ok(SpaceStep::new(
                    e.kappa.clone(),
                    kappa_bar,
                    e.tau.clone().unwrap_or_else(S::zero),
                ))
            })
            .collect()
    }
}

fn vertex_range(curve_len: usize, closed: bool, open_min: usize, closed_min: usize) -> Result<core::ops::RangeInclusive<usize>> {
    let needed = if closed { closed_min } else { open_min };
    if curve_len < needed {
        return Err(Error::TooFewPoints {
            needed,
            got: curve_len,
        });
    }
    Ok(if closed { 1..=curve_len } else { 2..=curve_len - 2 })
}

/// Affine curvatures `κ`, `κ̄` of a planar curve, default tolerance.
pub fn planar_curvatures<S: Scalar>(curve: &PlanarCurve<S>) -> Result<InvariantProfile<S>> {
    planar_curvatures_with(curve, Tolerance::default())
}

/// Affine curvatures with an explicit float zero test.
///
/// Where `[t_{k-1}, t_k] = 0` the vertex is locally straight: `κ = 0` and `κ̄`
/// is left undefined.
pub fn planar_curvatures_with<S: Scalar>(
    curve: &PlanarCurve<S>,
    tol: Tolerance,
) -> Result<InvariantProfile<S>> {
    let range = vertex_range(curve.len(), curve.is_closed(), 4, 3)?;
    let mut entries = Vec::with_capacity(range.clone().count());
    let mut prev = curve.tangent(*range.start() as isize - 1);
    let mut cur = curve.tangent(*range.start() as isize);
    for k in range {
        let next = curve.tangent(k as isize + 1);
        let d = det2(&prev, &cur);
        let scale = prev.magnitude() * cur.magnitude();
        let entry = if d.is_negligible(scale, tol) {
            ProfileEntry {
                k,
                kappa: S::zero(),
                kappa_bar: None,
                tau: None,
            }
        } else {
            ProfileEntry {
                k,
                kappa: det2(&cur, &next) / d.clone(),
                kappa_bar: Some(det2(&prev, &next) / d),
                tau: None,
            }
        };
        entries.push(entry);
        prev = cur;
        cur = next;
    }
    Ok(InvariantProfile {
        dim: 2,
        closed: curve.is_closed(),
        entries,
    })
}

/// Centroaffine curvatures and torsion of a space curve, default tolerance.
pub fn space_invariants<S: Scalar>(curve: &SpaceCurve<S>) -> Result<InvariantProfile<S>> {
    space_invariants_with(curve, Tolerance::default())
}

/// Centroaffine curvatures and torsion with an explicit float zero test.
///
/// ```text
/// D_k = [r_{k-1}, r_k, r_{k+1}]
/// κ_k = [r_k, r_{k+1}, r_{k+2}] / D_k
/// κ̄_k = [r_{k+1}, t_{k-1}, r_{k+2}] / D_k
/// τ_k = [t_{k-1}, t_k, t_{k+1}] / D_k
/// ```
pub fn space_invariants_with<S: Scalar>(
    curve: &SpaceCurve<S>,
    tol: Tolerance,
) -> Result<InvariantProfile<S>> {
    let range = vertex_range(curve.len(), curve.is_closed(), 4, 4)?;
    let mut entries = Vec::with_capacity(range.clone().count());
    for k in range {
        let k_i = k as isize;
        let (r_prev, r, r_next, r_next2) = (
            curve.vertex(k_i - 1),
            curve.vertex(k_i),
            curve.vertex(k_i + 1),
            curve.vertex(k_i + 2),
        );
        let d = det3(r_prev, r, r_next);
        let scale = r_prev.magnitude() * r.magnitude() * r_next.magnitude();
        if d.is_negligible(scale, tol) {
            return Err(Error::NotAdmissible { k });
        }
        let t_prev = r.sub(r_prev);
        let t = r_next.sub(r);
        let t_next = r_next2.sub(r_next);
        entries.push(ProfileEntry {
            k,
            kappa: det3(r, r_next, r_next2) / d.clone(),
            kappa_bar: Some(det3(r_next, &t_prev, r_next2) / d.clone()),
            tau: Some(det3(&t_prev, &t, &t_next) / d),
        });
    }
    Ok(InvariantProfile {
        dim: 3,
        closed: curve.is_closed(),
        entries,
    })
}

/// Advances a chain by one point from the three most recent ones.
pub fn advance<S: Scalar, const D: usize>(window: [&Point<S, D>; 3], c: &(S, S, S)) -> Point<S, D> {
    Point::combine3(&c.0, window[0], &c.1, window[1], &c.2, window[2])
}

pub(crate) fn push_step<S: Scalar, const D: usize>(points: &mut Vec<Point<S, D>>, c: &(S, S, S)) {
    let n = points.len();
    let next = advance([&points[n - 3], &points[n - 2], &points[n - 1]], c);
    points.push(next);
}

/// Fails unless `r_1, r_2, r_3` span the plane.
pub(crate) fn ensure_planar_frame<S: Scalar>(init: &[Point2<S>; 3]) -> Result<()> {
    let a = init[1].sub(&init[0]);
    let b = init[2].sub(&init[1]);
    let scale = a.magnitude() * b.magnitude();
    if scale == 0.0 || det2(&a, &b).is_negligible(scale, Tolerance::default()) {
        return Err(Error::DegenerateInit);
    }
    Ok(())
}

fn distinct<S: Scalar, const D: usize>(init: &[Point<S, D>; 3]) -> bool {
    init[0] != init[1] && init[1] != init[2] && init[0] != init[2]
}

/// Rebuilds an open planar curve from three points and its affine curvatures.
///
/// The output has `3 + steps.len()` points; step `j` consumes the three most
/// recent points.
pub fn reconstruct_planar<S: Scalar>(
    init: &[Point2<S>; 3],
    steps: &[PlanarStep<S>],
) -> Result<PlanarCurve<S>> {
    if !distinct(init) {
        return Err(Error::DegenerateInit);
    }
    let mut points = Vec::with_capacity(3 + steps.len());
    points.extend_from_slice(init);
    for step in steps {
        push_step(&mut points, &step.coefficients());
    }
    DiscreteCurve::open(points)
}

/// Rebuilds a closed planar curve of period `p = steps.len()`.
///
/// `steps[i]` holds the invariants at vertex `i + 1`. The chain is run to
/// `r_{p+3}` and the three surplus points must reproduce `init` (exactly for
/// rationals, within `1e-9` relative for floats).
pub fn reconstruct_planar_closed<S: Scalar>(
    init: &[Point2<S>; 3],
    steps: &[PlanarStep<S>],
) -> Result<PlanarCurve<S>> {
    let p = steps.len();
    if p < 3 {
        return Err(Error::TooFewPoints { needed: 3, got: p });
    }
    if !distinct(init) {
        return Err(Error::DegenerateInit);
    }
    let mut points = Vec::with_capacity(p + 3);
    points.extend_from_slice(init);
    // vertices 2..=p then vertex 1 again, producing r_4..=r_{p+3}
    for k in (2..=p).chain(core::iter::once(1)) {
        push_step(&mut points, &steps[k - 1].coefficients());
    }
    close_chain(points, p)
}

/// Checks that `points[p..p+3]` repeats `points[..3]`, then drops them.
pub(crate) fn close_chain<S: Scalar>(mut points: Vec<Point2<S>>, p: usize) -> Result<PlanarCurve<S>> {
    debug_assert_eq!(points.len(), p + 3);
    let scale = points[..3].iter().map(Point::magnitude).fold(1.0, f64::max);
    let tol = S::tolerance(1e-9 * scale);
    let closes = (0..3).all(|i| points[p + i].within(&points[i], &tol));
    if !closes {
        return Err(Error::ClosureFailed);
    }
    points.truncate(p);
    DiscreteCurve::closed(points)
}

/// Whether the chain should reject a degenerate initial frame.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum Admissibility {
    /// Require `[r_1, r_2, r_3] ≠ 0`.
    Enforce,
    /// Run the recurrence on any input.
    #[default]
    Skip,
}

/// Rebuilds a space curve from three points and `(κ, κ̄, τ)` steps.
pub fn reconstruct_space<S: Scalar>(
    init: &[Point3<S>; 3],
    steps: &[SpaceStep<S>],
    admissibility: Admissibility,
) -> Result<SpaceCurve<S>> {
    if admissibility == Admissibility::Enforce {
        let d = det3(&init[0], &init[1], &init[2]);
        let scale = init.iter().map(Point::magnitude).product();
        if d.is_negligible(scale, Tolerance::default()) {
            return Err(Error::NotAdmissible { k: 2 });
        }
    }
    let mut points = Vec::with_capacity(3 + steps.len());
    points.extend_from_slice(init);
    for step in steps {
        push_step(&mut points, &step.coefficients());
    }
    DiscreteCurve::open(points)
}

/// Runs the chain backwards: recovers `r_{k-1}` from `(r_k, r_{k+1}, r_{k+2})`.
///
/// `r_{k-1} = (1/κ) r_{k+2} - ((τ + 1 + κ̄)/κ) r_{k+1} + (1 + κ̄/κ) r_k`.
/// Planar chains are the case `τ = 0`.
pub fn inverse_step<S: Scalar, const D: usize>(
    window: [&Point<S, D>; 3],
    step: &SpaceStep<S>,
) -> Result<Point<S, D>> {
    if step.kappa.is_zero() {
        return Err(Error::NonInvertibleStep);
    }
    let k = &step.kappa;
    let c_next2 = S::one() / k.clone();
    let c_next = -(step.tau.clone() + S::one() + step.kappa_bar.clone()) / k.clone();
    let c_cur = S::one() + step.kappa_bar.clone() / k.clone();
    Ok(Point::combine3(
        &c_next2, window[2], &c_next, window[1], &c_cur, window[0],
    ))
}
