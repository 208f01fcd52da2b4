//! Discrete curves and their edge tangents.

use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::point::{Point, Point2, Point3};
use crate::scalar::Scalar;

/// An ordered polygon, open or periodic.
///
/// Vertex indices in the public API are 1-based: vertex `k` is
/// `points()[k - 1]`. For a closed curve with `p` points, indices wrap mod `p`.
#[derive(Clone, Debug, PartialEq)]
pub struct DiscreteCurve<S, const D: usize> {
    points: Vec<Point<S, D>>,
    closed: bool,
}

pub type PlanarCurve<S> = DiscreteCurve<S, 2>;
pub type SpaceCurve<S> = DiscreteCurve<S, 3>;

/// `t_k = r_{k+1} - r_k`.
#[derive(Clone, Debug, PartialEq)]
pub struct EdgeTangent<S, const D: usize> {
    /// 1-based edge index.
    pub index: usize,
    pub vector: Point<S, D>,
}

impl<S: Scalar, const D: usize> DiscreteCurve<S, D> {
    /// An open curve. Needs at least one point.
    pub fn open(points: Vec<Point<S, D>>) -> Result<Self> {
        Self::build(points, false, 1)
    }

    /// A periodic curve; the period is the number of points (at least 3).
    pub fn closed(points: Vec<Point<S, D>>) -> Result<Self> {
        Self::build(points, true, 3)
    }

    fn build(points: Vec<Point<S, D>>, closed: bool, needed: usize) -> Result<Self> {
        if points.len() < needed {
            return Err(Error::TooFewPoints {
                needed,
                got: points.len(),
            });
        }
        if !points.iter().all(Point::is_finite) {
            return Err(Error::NonFinite);
        }
        Ok(DiscreteCurve { points, closed })
    }

    pub fn points(&self) -> &[Point<S, D>] {
        &self.points
    }

    pub fn into_points(self) -> Vec<Point<S, D>> {
        self.points
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn is_closed(&self) -> bool {
        self.closed
    }

    pub fn dim(&self) -> usize {
        D
    }

    /// Vertex `k` (1-based). Wraps for closed curves; panics out of range
    /// for open ones.
    pub fn vertex(&self, k: isize) -> &Point<S, D> {
        let len = self.points.len() as isize;
        let i = if self.closed {
            (k - 1).rem_euclid(len)
        } else {
            k - 1
        };
        &self.points[i as usize]
    }

    /// `t_k = r_{k+1} - r_k` for the same indexing as [`vertex`](Self::vertex).
    pub fn tangent(&self, k: isize) -> Point<S, D> {
        self.vertex(k + 1).sub(self.vertex(k))
    }

    /// All edge tangents: `t_1..t_{M-1}` when open, `t_1..t_p` when closed.
    pub fn edge_tangents(&self) -> Result<Vec<EdgeTangent<S, D>>> {
        if self.points.len() < 2 {
            return Err(Error::TooFewPoints {
                needed: 2,
                got: self.points.len(),
            });
        }
        let count = if self.closed {
            self.points.len()
        } else {
            self.points.len() - 1
        };
        Ok((1..=count)
            .map(|index| EdgeTangent {
                index,
                vector: self.tangent(index as isize),
            })
            .collect())
    }

    /// The same polygon traversed backwards.
    pub fn reversed(&self) -> Self {
        let mut points = self.points.clone();
        points.reverse();
        DiscreteCurve {
            points,
            closed: self.closed,
        }
    }

    /// Applies `f` to every point.
    pub fn map<T: Scalar, const E: usize>(
        &self,
        f: impl FnMut(&Point<S, D>) -> Point<T, E>,
    ) -> DiscreteCurve<T, E> {
        DiscreteCurve {
            points: self.points.iter().map(f).collect(),
            closed: self.closed,
        }
    }

    /// Rotates the start vertex forward by `shift` (closed curves).
    pub fn rotated(&self, shift: usize) -> Self {
        let mut points = self.points.clone();
        if !points.is_empty() {
            let len = points.len();
            points.rotate_left(shift % len);
        }
        DiscreteCurve {
            points,
            closed: self.closed,
        }
    }

    pub fn to_f64(&self) -> DiscreteCurve<f64, D> {
        self.map(Point::to_f64)
    }

    /// Largest absolute coordinate over the curve.
    pub fn magnitude(&self) -> f64 {
        self.points.iter().map(Point::magnitude).fold(0.0, f64::max)
    }
}

impl<S: Scalar> PlanarCurve<S> {
    /// Embeds the curve in the plane `z = 1`.
    pub fn lift(&self) -> SpaceCurve<S> {
        self.map(Point2::lift)
    }
}

impl<S: Scalar> SpaceCurve<S> {
    /// Drops the third coordinate.
    pub fn project(&self) -> PlanarCurve<S> {
        self.map(Point3::project)
    }
}
