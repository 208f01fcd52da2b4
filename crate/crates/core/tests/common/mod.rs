#![allow(dead_code)]

use affframe::{det2, det3, ratio, DiscreteCurve, Point2, Point3, Rational, Scalar};
use proptest::prelude::*;

pub fn rational() -> impl Strategy<Value = Rational> {
    (-30i64..=30, 1i64..=6).prop_map(|(p, q)| ratio(p, q))
}

pub fn nonzero_rational() -> impl Strategy<Value = Rational> {
    rational().prop_filter("nonzero", |r| !r.is_zero())
}

pub fn point2() -> impl Strategy<Value = Point2<Rational>> {
    [rational(), rational()].prop_map(Point2::new)
}

pub fn point3() -> impl Strategy<Value = Point3<Rational>> {
    [rational(), rational(), rational()].prop_map(Point3::new)
}

pub fn turns(a: &Point2<Rational>, b: &Point2<Rational>, c: &Point2<Rational>) -> bool {
    !det2(&b.sub(a), &c.sub(b)).is_zero()
}

/// Three points that are not collinear.
pub fn planar_init() -> impl Strategy<Value = [Point2<Rational>; 3]> {
    [point2(), point2(), point2()].prop_filter("non-collinear", |[a, b, c]| turns(a, b, c))
}

/// Three points spanning space.
pub fn space_init() -> impl Strategy<Value = [Point3<Rational>; 3]> {
    [point3(), point3(), point3()].prop_filter("spanning", |[a, b, c]| !det3(a, b, c).is_zero())
}

/// An open planar curve turning at every interior vertex.
pub fn turning_curve(len: std::ops::Range<usize>) -> impl Strategy<Value = DiscreteCurve<Rational, 2>> {
    prop::collection::vec(point2(), len)
        .prop_filter("turns everywhere", |pts| pts.windows(3).all(|w| turns(&w[0], &w[1], &w[2])))
        .prop_map(|pts| DiscreteCurve::open(pts).unwrap())
}

/// An open space curve whose consecutive position triples all span space.
pub fn admissible_space_curve(len: std::ops::Range<usize>) -> impl Strategy<Value = DiscreteCurve<Rational, 3>> {
    prop::collection::vec(point3(), len)
        .prop_filter("admissible", |pts| pts.windows(3).all(|w| !det3(&w[0], &w[1], &w[2]).is_zero()))
        .prop_map(|pts| DiscreteCurve::open(pts).unwrap())
}

pub fn invertible2() -> impl Strategy<Value = [[Rational; 2]; 2]> {
    [[rational(), rational()], [rational(), rational()]].prop_filter("invertible", |m| {
        !(m[0][0].clone() * m[1][1].clone() - m[0][1].clone() * m[1][0].clone()).is_zero()
    })
}

pub fn invertible3() -> impl Strategy<Value = [[Rational; 3]; 3]> {
    [
        [rational(), rational(), rational()],
        [rational(), rational(), rational()],
        [rational(), rational(), rational()],
    ]
    .prop_filter("invertible", |m| {
        let col = |j: usize| Point3::new([m[0][j].clone(), m[1][j].clone(), m[2][j].clone()]);
        !det3(&col(0), &col(1), &col(2)).is_zero()
    })
}
