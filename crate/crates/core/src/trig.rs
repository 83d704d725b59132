//! Spherical trigonometry of the a3b quadrilateral.
//!
//! All angles and arc lengths are stored in units of pi: `2.0 / 3.0` stands
//! for 2pi/3 radians. Conversion to radians happens only where a
//! trigonometric function is evaluated.
//!
//! Corner and side layout: corners alpha, beta, gamma, delta in cyclic order,
//! sides alpha-beta, beta-gamma and gamma-delta of length `a`, side
//! delta-alpha of length `b`.

use std::f64::consts::PI;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Tolerance for linear identities such as the angle sum.
pub const LINEAR_TOL: f64 = 1e-12;
/// Tolerance for the trigonometric identities.
pub const TRIG_TOL: f64 = 1e-10;
/// `|sin(alpha)|` or `|sin(delta)|` below this makes the two-way cosine formula singular.
pub const SINGULAR_GUARD: f64 = 1e-9;

#[inline]
pub(crate) fn sin_pi(x: f64) -> f64 {
    (x * PI).sin()
}

#[inline]
pub(crate) fn cos_pi(x: f64) -> f64 {
    (x * PI).cos()
}

/// `acos` returning a value in pi units, with the argument clamped to [-1, 1].
#[inline]
pub(crate) fn acos_pi(x: f64) -> f64 {
    x.clamp(-1.0, 1.0).acos() / PI
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct AngleQuad {
    pub alpha: f64,
    pub beta: f64,
    pub gamma: f64,
    pub delta: f64,
}

impl AngleQuad {
    pub const fn new(alpha: f64, beta: f64, gamma: f64, delta: f64) -> Self {
        Self {
            alpha,
            beta,
            gamma,
            delta,
        }
    }

    pub fn as_array(&self) -> [f64; 4] {
        [self.alpha, self.beta, self.gamma, self.delta]
    }

    pub fn sum(&self) -> f64 {
        self.alpha + self.beta + self.gamma + self.delta
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct EdgePair {
    pub a: f64,
    pub b: f64,
}

/// A tile shape together with the number of tiles `f` in the tiling it belongs to.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Quadrilateral {
    pub angles: AngleQuad,
    pub edges: EdgePair,
    pub f: u32,
}

impl Quadrilateral {
    pub fn new(angles: AngleQuad, edges: EdgePair, f: u32) -> Self {
        Self { angles, edges, f }
    }
}

pub(crate) fn check_tile_count(f: u32) -> Result<()> {
    if f < 6 || f % 2 != 0 {
        return Err(Error::InvalidParameter(format!(
            "tile count f = {f} must be an even integer >= 6"
        )));
    }
    Ok(())
}

/// `alpha + beta + gamma + delta - (2 + 4/f)`.
pub fn angle_sum_residual(angles: &AngleQuad, f: u32) -> Result<f64> {
    check_tile_count(f)?;
    Ok(angles.sum() - (2.0 + 4.0 / f as f64))
}

/// Right-hand side of the cosine relation for the `b` edge. For a genuine a3b
/// quadrilateral with side `a` this equals `cos(b pi)`.
pub fn cos_b(angles: &AngleQuad, a: f64) -> f64 {
    let ca = cos_pi(a);
    let (sb, cb) = (sin_pi(angles.beta), cos_pi(angles.beta));
    let (sg, cg) = (sin_pi(angles.gamma), cos_pi(angles.gamma));
    ca.powi(3) * (1.0 - cb) * (1.0 - cg) - ca * ca * sb * sg + ca * (cb + cg - cb * cg) + sb * sg
}

/// The two expressions for `cos(a pi)`, one built around delta and gamma, the
/// other around alpha and beta.
pub fn cos_a_two_ways(angles: &AngleQuad) -> Result<(f64, f64)> {
    let (sa, sd) = (sin_pi(angles.alpha), sin_pi(angles.delta));
    if sa.abs() < SINGULAR_GUARD || sd.abs() < SINGULAR_GUARD {
        return Err(Error::SingularConfiguration(format!(
            "alpha = {} or delta = {} is a multiple of pi",
            angles.alpha, angles.delta
        )));
    }
    let half_g = sin_pi(angles.gamma / 2.0);
    let half_b = sin_pi(angles.beta / 2.0);
    if half_g.abs() < SINGULAR_GUARD || half_b.abs() < SINGULAR_GUARD {
        return Err(Error::SingularConfiguration(
            "beta or gamma vanishes".to_string(),
        ));
    }
    let first = (sa + cos_pi(angles.delta) * sin_pi(angles.gamma)) / (2.0 * sd * half_g * half_g);
    let second = (sd + cos_pi(angles.alpha) * sin_pi(angles.beta)) / (2.0 * sa * half_b * half_b);
    Ok((first, second))
}

/// Residuals `(r7, r8)` of the two alternative diagonal identities. A genuine
/// a3b quadrilateral makes at least one of them vanish.
pub fn coolsaet_residuals(angles: &AngleQuad) -> (f64, f64) {
    let AngleQuad {
        alpha,
        beta,
        gamma,
        delta,
    } = *angles;
    let r7 = sin_pi(alpha - gamma / 2.0) * sin_pi(beta / 2.0)
        - sin_pi(gamma / 2.0) * sin_pi(delta - beta / 2.0);
    let r8 = sin_pi(alpha + gamma / 2.0) * sin_pi(beta / 2.0)
        + sin_pi(gamma / 2.0) * sin_pi(delta + beta / 2.0);
    (r7, r8)
}

/// Every residual of a candidate quadrilateral and the verdict at `tol`.
#[derive(Debug, Clone, PartialEq)]
pub struct ResidualReport {
    pub tol: f64,
    pub angle_sum: f64,
    /// `cos_b(angles, a) - cos(b pi)`.
    pub cos_b: f64,
    /// Deviations of the two `cos a` expressions from `cos(a pi)`; `None` when singular.
    pub cos_a: Option<(f64, f64)>,
    pub r7: f64,
    pub r8: f64,
    pub passed: bool,
    pub failures: Vec<&'static str>,
}

impl ResidualReport {
    pub fn min_coolsaet(&self) -> f64 {
        self.r7.abs().min(self.r8.abs())
    }

    /// Largest residual among the trigonometric identities.
    pub fn max_trig(&self) -> f64 {
        let mut worst = self.cos_b.abs().max(self.min_coolsaet());
        if let Some((x, y)) = self.cos_a {
            worst = worst.max(x.abs()).max(y.abs());
        }
        worst
    }
}

pub fn check_quad(q: &Quadrilateral, tol: f64) -> ResidualReport {
    let angle_sum = q.angles.sum() - (2.0 + 4.0 / q.f as f64);
    let cos_b_res = cos_b(&q.angles, q.edges.a) - cos_pi(q.edges.b);
    let ca = cos_pi(q.edges.a);
    let cos_a = cos_a_two_ways(&q.angles)
        .ok()
        .map(|(x, y)| (x - ca, y - ca));
    let (r7, r8) = coolsaet_residuals(&q.angles);

    let mut failures = Vec::new();
    if q.f < 6 || q.f % 2 != 0 {
        failures.push("tile count");
    }
    if !(angle_sum.abs() <= tol) {
        failures.push("angle sum");
    }
    if !(cos_b_res.abs() <= tol) {
        failures.push("cos b");
    }
    if let Some((x, y)) = cos_a {
        if !(x.abs() <= tol && y.abs() <= tol) {
            failures.push("cos a");
        }
    }
    if !(r7.abs().min(r8.abs()) <= tol) {
        failures.push("diagonal identity");
    }
    ResidualReport {
        tol,
        angle_sum,
        cos_b: cos_b_res,
        cos_a,
        r7,
        r8,
        passed: failures.is_empty(),
        failures,
    }
}
