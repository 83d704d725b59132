//! Points, arcs and rigid motions on the unit sphere, with angles in units of π.

use std::f64::consts::PI;

use nalgebra::{Matrix3, Rotation3, Unit, Vector3};

pub type UnitVec = Vector3<f64>;

/// Point at colatitude `theta` and longitude `phi`.
pub fn from_polar(theta: f64, phi: f64) -> UnitVec {
    let (st, ct) = (theta * PI).sin_cos();
    let (sp, cp) = (phi * PI).sin_cos();
    Vector3::new(st * cp, st * sp, ct)
}

/// Length of the minor great-circle arc from `p` to `q`.
pub fn arc(p: &UnitVec, q: &UnitVec) -> f64 {
    p.cross(q).norm().atan2(p.dot(q)) / PI
}

/// Unit tangent at `p` pointing along the minor arc towards `q`.
pub fn tangent_towards(p: &UnitVec, q: &UnitVec) -> UnitVec {
    (q - p * p.dot(q)).normalize()
}

/// Angle in `[0, 2)` swept counterclockwise about `p` (seen from outside)
/// from tangent `t1` to tangent `t2`.
pub fn ccw_angle(p: &UnitVec, t1: &UnitVec, t2: &UnitVec) -> f64 {
    let x = t1.cross(t2).dot(p).atan2(t1.dot(t2)) / PI;
    x.rem_euclid(2.0)
}

/// Move distance `s` along the great circle through `p` with heading `h`.
pub fn advance(p: &UnitVec, h: &UnitVec, s: f64) -> (UnitVec, UnitVec) {
    let (sn, cs) = (s * PI).sin_cos();
    (p * cs + h * sn, -p * sn + h * cs)
}

/// Rotation by `angle` (π units) about the axis through `axis`.
pub fn rotation(axis: &UnitVec, angle: f64) -> Rotation3<f64> {
    Rotation3::from_axis_angle(&Unit::new_normalize(*axis), angle * PI)
}

/// Orthonormal frame with first axis `u` and second axis in the plane of `u`, `v`.
pub fn frame(u: &UnitVec, v: &UnitVec) -> Matrix3<f64> {
    let e1 = u.normalize();
    let e2 = (v - e1 * e1.dot(v)).normalize();
    Matrix3::from_columns(&[e1, e2, e1.cross(&e2)])
}

/// Points along the edge from `p` to `q` of length `len`, taking the major arc
/// when `len > 1`; `segments + 1` points including both ends.
pub fn sample_edge(p: &UnitVec, q: &UnitVec, len: f64, segments: usize) -> Vec<UnitVec> {
    let mut h = tangent_towards(p, q);
    if len > 1.0 {
        h = -h;
    }
    (0..=segments)
        .map(|i| {
            if i == segments {
                *q
            } else {
                advance(p, &h, len * i as f64 / segments as f64).0
            }
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_abs_diff_eq;

    #[test]
    fn quarter_arcs() {
        let (x, y, z) = (Vector3::x(), Vector3::y(), Vector3::z());
        assert_abs_diff_eq!(arc(&x, &y), 0.5, epsilon = 1e-15);
        assert_abs_diff_eq!(ccw_angle(&z, &x, &y), 0.5, epsilon = 1e-15);
        assert_abs_diff_eq!(ccw_angle(&z, &y, &x), 1.5, epsilon = 1e-15);
        let (p, h) = advance(&z, &x, 0.5);
        assert_abs_diff_eq!((p - x).norm(), 0.0, epsilon = 1e-15);
        assert_abs_diff_eq!((h + z).norm(), 0.0, epsilon = 1e-15);
    }

    #[test]
    fn point_reflection_is_a_half_turn() {
        let e = from_polar(0.5, 0.0);
        let d = from_polar(0.6, 0.1);
        let b = rotation(&e, 1.0) * d;
        assert_abs_diff_eq!(arc(&b, &e), arc(&d, &e), epsilon = 1e-14);
        assert_abs_diff_eq!(arc(&b, &d), 2.0 * arc(&d, &e), epsilon = 1e-14);
    }

    #[test]
    fn major_arc_sampling() {
        let (p, q) = (Vector3::x(), Vector3::y());
        let pts = sample_edge(&p, &q, 1.5, 3);
        assert_eq!(pts.len(), 4);
        assert_abs_diff_eq!((pts[1] + q).norm(), 0.0, epsilon = 1e-15);
    }
}
