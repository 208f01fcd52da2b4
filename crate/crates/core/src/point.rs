use core::array;
use core::ops::Index;

use crate::scalar::Scalar;

/// A position (or edge) vector with `D` coordinates.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Point<S, const D: usize>(pub [S; D]);

pub type Point2<S> = Point<S, 2>;
pub type Point3<S> = Point<S, 3>;

impl<S: Scalar, const D: usize> Point<S, D> {
    pub fn new(coords: [S; D]) -> Self {
        Point(coords)
    }

    pub fn origin() -> Self {
        Point(array::from_fn(|_| S::zero()))
    }

    pub fn from_i64(coords: [i64; D]) -> Self {
        Point(coords.map(S::from_i64))
    }

    pub fn coords(&self) -> &[S; D] {
        &self.0
    }

    pub fn sub(&self, other: &Self) -> Self {
        Point(array::from_fn(|i| self.0[i].clone() - other.0[i].clone()))
    }

    pub fn add(&self, other: &Self) -> Self {
        Point(array::from_fn(|i| self.0[i].clone() + other.0[i].clone()))
    }

    pub fn scale(&self, factor: &S) -> Self {
        Point(array::from_fn(|i| self.0[i].clone() * factor.clone()))
    }

    /// `a·p + b·q + c·r`, the shape of every chain recurrence.
    pub fn combine3(a: &S, p: &Self, b: &S, q: &Self, c: &S, r: &Self) -> Self {
        Point(array::from_fn(|i| {
            a.clone() * p.0[i].clone() + b.clone() * q.0[i].clone() + c.clone() * r.0[i].clone()
        }))
    }

    /// Largest absolute coordinate, as a float. Used only to scale tolerances.
    pub fn magnitude(&self) -> f64 {
        self.0
            .iter()
            .map(|c| c.to_f64().abs())
            .fold(0.0, f64::max)
    }

    pub fn is_finite(&self) -> bool {
        self.0.iter().all(Scalar::is_finite)
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(Scalar::is_zero)
    }

    /// Coordinatewise [`Scalar::within`].
    pub fn within(&self, other: &Self, tol: &S) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a.within(b, tol))
    }

    pub fn to_f64(&self) -> Point<f64, D> {
        Point(array::from_fn(|i| self.0[i].to_f64()))
    }
}

impl<S, const D: usize> Index<usize> for Point<S, D> {
    type Output = S;

    fn index(&self, i: usize) -> &S {
        &self.0[i]
    }
}

impl<S: Scalar> Point2<S> {
    /// `(x, y) ↦ (x, y, 1)`.
    pub fn lift(&self) -> Point3<S> {
        Point([self.0[0].clone(), self.0[1].clone(), S::one()])
    }
}

impl<S: Scalar> Point3<S> {
    /// Drops the third coordinate.
    pub fn project(&self) -> Point2<S> {
        Point([self.0[0].clone(), self.0[1].clone()])
    }
}

/// Determinant of the 2×2 matrix with columns `a`, `b`.
pub fn det2<S: Scalar>(a: &Point2<S>, b: &Point2<S>) -> S {
    a.0[0].clone() * b.0[1].clone() - a.0[1].clone() * b.0[0].clone()
}

/// Determinant of the 3×3 matrix with columns `a`, `b`, `c`.
pub fn det3<S: Scalar>(a: &Point3<S>, b: &Point3<S>, c: &Point3<S>) -> S {
    let [a0, a1, a2] = a.0.clone();
    let [b0, b1, b2] = b.0.clone();
    let [c0, c1, c2] = c.0.clone();
    a0 * (b1.clone() * c2.clone() - b2.clone() * c1.clone())
        - a1 * (b0.clone() * c2 - b2 * c0.clone())
        + a2 * (b0 * c1 - b1 * c0)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{ratio, Rational};

    #[test]
    fn determinants_of_unit_frames() {
        let e1 = Point3::<Rational>::from_i64([1, 0, 0]);
        let e2 = Point3::<Rational>::from_i64([0, 1, 0]);
        let e3 = Point3::<Rational>::from_i64([0, 0, 1]);
        assert_eq!(det3(&e1, &e2, &e3), ratio(1, 1));
        assert_eq!(det3(&e2, &e1, &e3), ratio(-1, 1));
        let x = Point2::<f64>::new([1.0, 0.0]);
        let y = Point2::<f64>::new([0.0, 1.0]);
        assert_eq!(det2(&x, &y), 1.0);
        assert_eq!(det2(&y, &x), -1.0);
    }

    #[test]
    fn lift_then_project_is_identity() {
        let p = Point2::new([ratio(1, 2), ratio(-3, 7)]);
        assert_eq!(p.lift().project(), p);
        assert_eq!(p.lift()[2], ratio(1, 1));
    }
}
