//! Classical constructions used as independent references in tests.

use alloc::vec::Vec;

use crate::curve::{DiscreteCurve, PlanarCurve};
use crate::koch::SIN_60;
use crate::point::{det2, Point2};
use crate::scalar::Scalar;

/// Step-`n` Koch polyline on the unit segment from `(0,0)` to `(1,0)`, built
/// by replacing the middle third of every segment with two sides of an
/// equilateral triangle pointing left of the travel direction.
///
/// `n = 1` is the bare segment. `n = 0` is treated as `1`.
pub fn classical_koch_oracle(n: u32) -> PlanarCurve<f64> {
    let mut points = alloc::vec![Point2::new([0.0, 0.0]), Point2::new([1.0, 0.0])];
    for _ in 1..n.max(1) {
        let mut next = Vec::with_capacity(4 * points.len());
        for w in points.windows(2) {
            let (a, b) = (&w[0], &w[1]);
            let dx = (b[0] - a[0]) / 3.0;
            let dy = (b[1] - a[1]) / 3.0;
            let p = Point2::new([a[0] + dx, a[1] + dy]);
            let apex = Point2::new([p[0] + 0.5 * dx - SIN_60 * dy, p[1] + SIN_60 * dx + 0.5 * dy]);
            let q = Point2::new([a[0] + 2.0 * dx, a[1] + 2.0 * dy]);
            next.extend([a.clone(), p, apex, q]);
        }
        next.push(points[points.len() - 1].clone());
        points = next;
    }
    DiscreteCurve::open(points).expect("oracle points are finite")
}

/// Cell `d` of the `2^order × 2^order` Hilbert traversal.
fn hilbert_cell(order: u32, d: u64) -> (i64, i64) {
    let (mut x, mut y) = (0i64, 0i64);
    let mut t = d;
    let mut s = 1i64;
    while s < (1i64 << order) {
        let rx = (1 & (t / 2)) as i64;
        let ry = (1 & (t ^ rx as u64)) as i64;
        if ry == 0 {
            if rx == 1 {
                x = s - 1 - x;
                y = s - 1 - y;
            }
            core::mem::swap(&mut x, &mut y);
        }
        x += s * rx;
        y += s * ry;
        t /= 4;
        s *= 2;
    }
    (x, y)
}

/// Step-`n` classical Hilbert curve on the integer lattice, keeping only its
/// endpoints and turning vertices. `n = 0` is treated as `1`.
pub fn classical_hilbert_oracle<S: Scalar>(n: u32) -> PlanarCurve<S> {
    let order = n.max(1);
    let cells: Vec<(i64, i64)> = (0..1u64 << (2 * order))
        .map(|d| hilbert_cell(order, d))
        .collect();
    let mut kept = Vec::new();
    kept.push(cells[0]);
    for w in cells.windows(3) {
        let a = (w[1].0 - w[0].0, w[1].1 - w[0].1);
        let b = (w[2].0 - w[1].0, w[2].1 - w[1].1);
        if a.0 * b.1 - a.1 * b.0 != 0 {
            kept.push(w[1]);
        }
    }
    kept.push(cells[cells.len() - 1]);
    let points = kept
        .iter()
        .map(|&(x, y)| Point2::new([S::from_i64(x), S::from_i64(y)]))
        .collect();
    DiscreteCurve::open(points).expect("oracle points are finite")
}

/// Whether the polyline `a, b, c` turns at `b`.
pub fn turns<S: Scalar>(a: &Point2<S>, b: &Point2<S>, c: &Point2<S>) -> bool {
    !det2(&b.sub(a), &c.sub(b)).is_zero()
}
