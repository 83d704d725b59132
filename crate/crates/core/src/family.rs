//! The one-parameter family of a3b tiles admitting 2-layer earth map tilings.
//!
//! For each even `f >= 6` the tile is fixed by `beta`: `gamma = 4/f`,
//! `cos a = -cos beta / (1 - cos beta)`, and `b`, `alpha`, `delta` follow.
//! The same tiles are parametrised by the longitude offset `t = (1 - beta)/2`
//! of the apex `D` in the moduli picture, where `cos t = 1 / (2 sin(a/2))`.

use std::f64::consts::PI;

use crate::error::{Error, Result};
use crate::trig::{
    acos_pi, check_tile_count, cos_b, cos_pi, sin_pi, AngleQuad, EdgePair, Quadrilateral,
};

/// `|beta - excluded| < EXCLUSION_TOL` counts as hitting an excluded value.
pub const EXCLUSION_TOL: f64 = 1e-12;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FamilyParams {
    pub f: u32,
    pub beta: f64,
}

impl FamilyParams {
    pub fn new(f: u32, beta: f64) -> Result<Self> {
        let p = Self { f, beta };
        p.validate()?;
        Ok(p)
    }

    /// Open interval of admissible `beta`.
    pub fn beta_interval(f: u32) -> (f64, f64) {
        if f == 6 {
            (1.0 / 3.0, 1.5)
        } else {
            (0.5, 1.5)
        }
    }

    fn validate(&self) -> Result<()> {
        check_tile_count(self.f)?;
        let (lo, hi) = Self::beta_interval(self.f);
        if !(self.beta > lo && self.beta < hi) {
            return Err(Error::BetaOutOfRange {
                f: self.f,
                beta: self.beta,
                lo,
                hi,
            });
        }
        if self.f == 6 && (self.beta - 2.0 / 3.0).abs() < EXCLUSION_TOL {
            return Err(Error::DegenerateBeta { beta: self.beta });
        }
        if (self.beta - (1.0 - 2.0 / self.f as f64)).abs() < EXCLUSION_TOL {
            return Err(Error::RhombusReduction {
                f: self.f,
                beta: self.beta,
            });
        }
        Ok(())
    }
}

/// Earth map tile for `(f, beta)`.
pub fn emt_quad(f: u32, beta: f64) -> Result<Quadrilateral> {
    FamilyParams::new(f, beta)?;
    Ok(family_tile(f, beta))
}

/// The tile formulas without the exclusion checks; callers guarantee `f`
/// is valid and `beta` lies in the closed admissible range.
pub(crate) fn family_tile(f: u32, beta: f64) -> Quadrilateral {
    let fr = f as f64;
    let gamma = 4.0 / fr;
    let (sb, cb) = (sin_pi(beta), cos_pi(beta));
    let a = acos_pi(-cb / (1.0 - cb));

    // cos b from the general cosine relation with gamma = 4/f; b/2 is the
    // arc from D to the midpoint F of the b edge, which fixes the branch.
    let mut b = acos_pi(cos_b(&AngleQuad::new(0.0, beta, gamma, 0.0), a));
    let t = (1.0 - beta) / 2.0;
    if cos_pi(2.0 / fr - t) < 0.0 {
        b = 2.0 - b;
    }

    let (s4, s2) = (sin_pi(gamma), sin_pi(2.0 / fr));
    let num = cb * ((cb - 1.0) * s4 + 2.0 * sb * s2 * s2);
    let den = (s4 * sb - 1.0) * (cb - 1.0) - 2.0 * cb * cb * s2 * s2;
    let alpha = resolve_alpha_branch(num.atan2(den) / PI, beta, cos_alpha_cross(f, a, b));
    let delta = 2.0 - alpha - beta;
    Quadrilateral::new(
        AngleQuad::new(alpha, beta, gamma, delta),
        EdgePair { a, b },
        f,
    )
}

/// `cos alpha` from the half-edge triangle at the midpoint of the `b` edge.
pub fn cos_alpha_cross(f: u32, a: f64, b: f64) -> f64 {
    (cos_pi(2.0 / f as f64) - cos_pi(a / 2.0) * cos_pi(b / 2.0))
        / (sin_pi(a / 2.0) * sin_pi(b / 2.0))
}

/// `tan` only fixes alpha modulo 1; pick the representative in (0, 2) whose
/// cosine matches the cross-check, preferring a positive delta on ties.
fn resolve_alpha_branch(atan_value: f64, beta: f64, cross: f64) -> f64 {
    let base = atan_value.rem_euclid(1.0);
    let candidates = [base, base + 1.0];
    let score = |alpha: f64| {
        let delta_ok = (2.0 - alpha - beta) > 0.0;
        ((cos_pi(alpha) - cross).abs(), !delta_ok)
    };
    let (s0, s1) = (score(candidates[0]), score(candidates[1]));
    if (s0.0 - s1.0).abs() < 1e-9 {
        if s0.1 && !s1.1 {
            candidates[1]
        } else {
            candidates[0]
        }
    } else if s0.0 < s1.0 {
        candidates[0]
    } else {
        candidates[1]
    }
}

/// A point on the a3b curve of the earth map moduli.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ModuliPoint {
    pub f: u32,
    pub t: f64,
}

impl ModuliPoint {
    pub fn t_interval(f: u32) -> (f64, f64) {
        if f == 6 {
            (-0.25, 1.0 / 3.0)
        } else {
            (-0.25, 0.25)
        }
    }

    pub fn beta(&self) -> f64 {
        1.0 - 2.0 * self.t
    }
}

/// Tile at a moduli point. Unlike [`emt_quad`] the rhombus point `t = 1/f`
/// is accepted.
pub fn moduli_point_quad(p: ModuliPoint) -> Result<Quadrilateral> {
    check_tile_count(p.f)?;
    let (lo, hi) = ModuliPoint::t_interval(p.f);
    if !(p.t > lo && p.t < hi) {
        return Err(Error::ModuliOutOfRange {
            f: p.f,
            t: p.t,
            lo,
            hi,
        });
    }
    Ok(family_tile(p.f, p.beta()))
}

/// `a` recovered from `t` on the a3b curve: `sin(a/2) = 1 / (2 cos t)`.
pub fn moduli_edge_a(t: f64) -> f64 {
    2.0 * (1.0 / (2.0 * cos_pi(t))).clamp(-1.0, 1.0).asin() / PI
}

// ---------------------------------------------------------------------------
// Flip admissibility

/// Row of the flip classification, by the position of `m` in `(f/8, 3f/8)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum FlipRow {
    /// `f/8 < m <= f/6`
    UpToSixth,
    /// `f/6 < m < f/4`
    SixthToQuarter,
    /// `m = f/4`, and the rhombus point `m = (f+2)/4`
    Quarter,
    /// `(f+4)/4 <= m < f/3`
    QuarterToThird,
    /// `f/3 <= m < 3f/8`
    ThirdToThreeEighths,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Degeneracy {
    None,
    /// `m = f/4`: `beta = 1`, the tile is a triangle.
    BetaEqOneTriangle,
    /// `m = (f+2)/4`: `a = b`, the tile is a rhombus.
    RhombusA4,
    /// `m = (f+4)/4`: `delta = 1`, the tile is a triangle.
    DeltaEqOneTriangle,
}

/// Which reflection axis a basic flip uses.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum FlipKind {
    /// `beta < 1`: a block of `f/2 - m` zones is reflected; its pole corner
    /// trades places with a beta corner.
    BetaBelowOne,
    /// `beta >= 1`: a block of `m` zones is reflected; its pole corner trades
    /// places with an alpha-delta corner.
    BetaAtLeastOne,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FlipCase {
    pub f: u32,
    pub m: u32,
    pub row: FlipRow,
    pub degeneracy: Degeneracy,
    pub kind: FlipKind,
}

impl FlipCase {
    /// Classify an integer `m` for tile count `f`.
    pub fn new(f: u32, m: u32) -> Result<Self> {
        check_tile_count(f)?;
        if f < 8 {
            return Err(Error::InvalidFlip(format!(
                "flips need f >= 8, got f = {f}"
            )));
        }
        // Compare 24m against multiples of f to stay in integers.
        let (f24, m24) = (f as u64, 24 * m as u64);
        if !(m24 > 3 * f24 && m24 < 9 * f24) {
            return Err(Error::InvalidFlip(format!(
                "m = {m} outside (f/8, 3f/8) for f = {f}"
            )));
        }
        let (m4, f_) = (4 * m as u64, f as u64);
        let degeneracy = if m4 == f_ {
            Degeneracy::BetaEqOneTriangle
        } else if m4 == f_ + 2 {
            Degeneracy::RhombusA4
        } else if m4 == f_ + 4 {
            Degeneracy::DeltaEqOneTriangle
        } else {
            Degeneracy::None
        };
        let row = if m24 <= 4 * f24 {
            FlipRow::UpToSixth
        } else if m4 < f_ {
            FlipRow::SixthToQuarter
        } else if m4 <= f_ + 2 {
            FlipRow::Quarter
        } else if 3 * m as u64 >= f_ {
            FlipRow::ThirdToThreeEighths
        } else {
            FlipRow::QuarterToThird
        };
        let kind = if m4 <= f_ {
            FlipKind::BetaAtLeastOne
        } else {
            FlipKind::BetaBelowOne
        };
        Ok(Self {
            f,
            m,
            row,
            degeneracy,
            kind,
        })
    }

    /// `beta = (f/2 - m) gamma`.
    pub fn beta(&self) -> f64 {
        (self.f as f64 / 2.0 - self.m as f64) * 4.0 / self.f as f64
    }

    /// Zones per flipped block: `min(m, f/2 - m)`.
    pub fn block_zones(&self) -> u32 {
        self.m.min(self.f / 2 - self.m)
    }

    /// Largest number of simultaneous flips.
    pub fn max_flips(&self) -> u32 {
        if self.degeneracy == Degeneracy::RhombusA4 {
            return 1;
        }
        match self.row {
            FlipRow::UpToSixth | FlipRow::ThirdToThreeEighths => 3,
            _ => 2,
        }
    }

    /// Unflipped zones left over by `n` blocks.
    pub fn gap_total(&self, n: u32) -> Option<u32> {
        (self.f / 2).checked_sub(n * self.block_zones())
    }
}

/// The flip case when `beta` is an integer multiple of `gamma = 4/f` with
/// `m = f/2 - beta f/4` in `(f/8, 3f/8)`.
pub fn flip_admissible(f: u32, beta: f64) -> Option<FlipCase> {
    if check_tile_count(f).is_err() || f < 8 {
        return None;
    }
    let m = f as f64 / 2.0 - beta * f as f64 / 4.0;
    let rounded = m.round();
    if (m - rounded).abs() > 1e-9 || rounded < 1.0 {
        return None;
    }
    FlipCase::new(f, rounded as u32).ok()
}

// ---------------------------------------------------------------------------
// Shortest b edge

/// Minimum of `b` over the admissible `beta` interval, with the minimising `beta`.
///
/// A grid of spacing 1e-4 brackets the minimum, then golden-section search
/// refines it. If `b` is monotone the infimum sits at an end of the open
/// interval and the closest grid point is returned.
pub fn b_min(f: u32) -> Result<(f64, f64)> {
    check_tile_count(f)?;
    let (lo, hi) = FamilyParams::beta_interval(f);
    let b_of = |beta: f64| family_tile(f, beta).edges.b;
    let step = 1e-4;
    let n = ((hi - lo) / step).floor() as usize;
    let grid: Vec<f64> = (1..n).map(|i| lo + i as f64 * step).collect();
    let (imin, _) = grid
        .iter()
        .map(|&x| b_of(x))
        .enumerate()
        .fold((0, f64::INFINITY), |acc, (i, v)| if v < acc.1 { (i, v) } else { acc });
    if imin == 0 || imin + 1 == grid.len() {
        let beta = grid[imin];
        return Ok((b_of(beta), beta));
    }
    let beta = golden_section(b_of, grid[imin - 1], grid[imin + 1], 1e-12);
    Ok((b_of(beta), beta))
}

fn golden_section(g: impl Fn(f64) -> f64, mut lo: f64, mut hi: f64, tol: f64) -> f64 {
    let inv_phi = (5f64.sqrt() - 1.0) / 2.0;
    let mut x1 = hi - inv_phi * (hi - lo);
    let mut x2 = lo + inv_phi * (hi - lo);
    let (mut g1, mut g2) = (g(x1), g(x2));
    while hi - lo > tol {
        if g1 < g2 {
            hi = x2;
            x2 = x1;
            g2 = g1;
            x1 = hi - inv_phi * (hi - lo);
            g1 = g(x1);
        } else {
            lo = x1;
            x1 = x2;
            g1 = g2;
            x2 = lo + inv_phi * (hi - lo);
            g2 = g(x2);
        }
    }
    (lo + hi) / 2.0
}

// ---------------------------------------------------------------------------
// Geometric predicates

/// Cross-checks of the inequality lemmas for simple a3b quadrilaterals.
#[derive(Debug, Clone, PartialEq)]
pub struct PredicateReport {
    pub beta_lt_gamma: bool,
    pub alpha_gt_delta: bool,
    /// `(beta < gamma) <=> (alpha > delta)`.
    pub beta_gamma_equivalence: bool,
    /// `(beta > delta) <=> (alpha < gamma)`, evaluated when every angle is below 1.
    pub beta_delta_equivalence: Option<bool>,
    /// `2 alpha + beta > 1` and `beta + 2 gamma > 1`, evaluated when `delta <= 1`.
    pub delta_small_bounds: Option<bool>,
    /// The four sum inequalities for convex tiles with all angles below 1.
    pub convex_relations: Option<[bool; 4]>,
    /// Number of angles `>= 1`; at most one can occur in a tiling.
    pub angles_at_least_one: usize,
    pub violations: Vec<&'static str>,
}

impl PredicateReport {
    pub fn consistent(&self) -> bool {
        self.violations.is_empty()
    }
}

pub fn quad_predicates(q: &Quadrilateral) -> PredicateReport {
    let AngleQuad {
        alpha,
        beta,
        gamma,
        delta,
    } = q.angles;
    let mut violations = Vec::new();
    let beta_lt_gamma = beta < gamma;
    let alpha_gt_delta = alpha > delta;
    let beta_gamma_equivalence = beta_lt_gamma == alpha_gt_delta;
    if !beta_gamma_equivalence {
        violations.push("beta < gamma iff alpha > delta");
    }
    let all_small = q.angles.as_array().iter().all(|&x| x < 1.0);
    let beta_delta_equivalence = all_small.then(|| (beta > delta) == (alpha < gamma));
    if beta_delta_equivalence == Some(false) {
        violations.push("beta > delta iff alpha < gamma");
    }
    let delta_small_bounds =
        (delta <= 1.0).then(|| 2.0 * alpha + beta > 1.0 && beta + 2.0 * gamma > 1.0);
    if delta_small_bounds == Some(false) {
        violations.push("2 alpha + beta > 1 and beta + 2 gamma > 1");
    }
    let convex_relations = all_small.then(|| {
        [
            alpha + delta < 1.0 + beta,
            alpha + delta < 1.0 + gamma,
            alpha + beta < 1.0 + delta,
            gamma + delta < 1.0 + alpha,
        ]
    });
    if let Some(rel) = convex_relations {
        if rel.iter().any(|ok| !ok) {
            violations.push("convex sum relations");
        }
    }
    let angles_at_least_one = q.angles.as_array().iter().filter(|&&x| x >= 1.0).count();
    if angles_at_least_one >= 2 {
        violations.push("two angles >= 1");
    }
    PredicateReport {
        beta_lt_gamma,
        alpha_gt_delta,
        beta_gamma_equivalence,
        beta_delta_equivalence,
        delta_small_bounds,
        convex_relations,
        angles_at_least_one,
        violations,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::trig::{check_quad, cos_a_two_ways};
    use approx::assert_abs_diff_eq;

    #[test]
    fn rational_point_f12() {
        let q = emt_quad(12, 2.0 / 3.0).unwrap();
        let want = [1.0 / 3.0, 2.0 / 3.0, 1.0 / 3.0, 1.0];
        for (got, want) in q.angles.as_array().iter().zip(want) {
            assert_abs_diff_eq!(*got, want, epsilon = 1e-12);
        }
        assert_abs_diff_eq!(cos_pi(q.edges.a), 1.0 / 3.0, epsilon = 1e-14);
    }

    #[test]
    fn beta_one_at_f8() {
        let q = emt_quad(8, 1.0).unwrap();
        assert_abs_diff_eq!(q.edges.a, 1.0 / 3.0, epsilon = 1e-14);
        assert_abs_diff_eq!(q.angles.gamma, 0.5, epsilon = 1e-15);
        assert_abs_diff_eq!((q.angles.alpha * PI).tan(), 2.0, epsilon = 1e-12);
        let (x, y) = cos_a_two_ways(&q.angles).unwrap();
        assert_abs_diff_eq!(x, 0.5, epsilon = 1e-12);
        assert_abs_diff_eq!(y, 0.5, epsilon = 1e-12);
    }

    #[test]
    fn beta_range_errors() {
        assert!(matches!(
            emt_quad(8, 0.5),
            Err(Error::BetaOutOfRange { .. })
        ));
        assert!(matches!(
            emt_quad(6, 2.0 / 3.0),
            Err(Error::DegenerateBeta { .. })
        ));
        assert!(matches!(
            emt_quad(10, 0.8),
            Err(Error::RhombusReduction { .. })
        ));
        assert!(emt_quad(7, 1.0).is_err());
    }

    #[test]
    fn cos_b_agrees_with_table_formula_at_f8() {
        // Table form of cos b, written out independently of the kernel.
        let f = 8.0;
        let beta: f64 = 1.0;
        let ca: f64 = 0.5;
        let (sb, cb) = ((beta * PI).sin(), (beta * PI).cos());
        let (s4, c4) = ((4.0 * PI / f).sin(), (4.0 * PI / f).cos());
        let table = ca.powi(3) * (1.0 - cb) * (1.0 - c4) - ca * ca * sb * s4
            + ca * (cb + c4 - cb * c4)
            + sb * s4;
        let q = emt_quad(8, 1.0).unwrap();
        assert_abs_diff_eq!(cos_b(&q.angles, q.edges.a), table, epsilon = 1e-12);
        assert_abs_diff_eq!(cos_pi(q.edges.b), table, epsilon = 1e-12);
    }

    #[test]
    fn f6_long_b_edge() {
        for beta in [4.0 / 3.0 + 1e-6, 1.4, 1.49] {
            let q = emt_quad(6, beta).unwrap();
            assert!(q.edges.b >= 1.0 && q.edges.b < 7.0 / 6.0, "{q:?}");
            assert!(check_quad(&q, 1e-9).passed);
        }
    }

    #[test]
    fn moduli_special_points() {
        let q = moduli_point_quad(ModuliPoint { f: 10, t: 0.0 }).unwrap();
        assert_abs_diff_eq!(q.angles.beta, 1.0, epsilon = 1e-15);
        assert_abs_diff_eq!(q.edges.a, 1.0 / 3.0, epsilon = 1e-14);
        for f in [6, 8, 10, 14, 20] {
            let t = 1.0 / f as f64;
            let q = moduli_point_quad(ModuliPoint { f, t }).unwrap();
            assert_abs_diff_eq!(q.angles.beta, 1.0 - 2.0 / f as f64, epsilon = 1e-15);
            assert!((q.edges.a - q.edges.b).abs() < 1e-10, "f = {f}: {q:?}");
            assert_abs_diff_eq!(moduli_edge_a(t), q.edges.a, epsilon = 1e-12);
        }
        let q = moduli_point_quad(ModuliPoint { f: 10, t: 0.1 }).unwrap();
        assert!(check_quad(&q, 1e-10).passed);
        assert!(moduli_point_quad(ModuliPoint { f: 8, t: 0.25 }).is_err());
        assert!(moduli_point_quad(ModuliPoint { f: 6, t: 0.3 }).is_ok());
    }

    #[test]
    fn flip_classification_examples() {
        let c = flip_admissible(16, 0.75).unwrap();
        assert_eq!((c.m, c.row, c.degeneracy), (5, FlipRow::QuarterToThird, Degeneracy::DeltaEqOneTriangle));
        assert_eq!(c.kind, FlipKind::BetaBelowOne);
        assert_eq!(c.block_zones(), 3);

        let c = flip_admissible(14, 4.0 / 7.0).unwrap();
        assert_eq!((c.m, c.row, c.degeneracy), (5, FlipRow::ThirdToThreeEighths, Degeneracy::None));

        assert!(flip_admissible(10, 0.77).is_none());

        let c = FlipCase::new(8, 2).unwrap();
        assert_eq!((c.row, c.degeneracy), (FlipRow::Quarter, Degeneracy::BetaEqOneTriangle));
        let c = FlipCase::new(14, 4).unwrap();
        assert_eq!((c.row, c.degeneracy, c.max_flips()), (FlipRow::Quarter, Degeneracy::RhombusA4, 1));
        let c = FlipCase::new(12, 4).unwrap();
        assert_eq!((c.row, c.degeneracy), (FlipRow::ThirdToThreeEighths, Degeneracy::DeltaEqOneTriangle));
        let c = FlipCase::new(12, 2).unwrap();
        assert_eq!((c.row, c.kind, c.block_zones()), (FlipRow::UpToSixth, FlipKind::BetaAtLeastOne, 2));
        assert!(FlipCase::new(16, 2).is_err());
        assert!(FlipCase::new(16, 6).is_err());
        assert!(FlipCase::new(6, 1).is_err());
    }

    #[test]
    fn flip_m_stays_inside_open_range() {
        for f in (8..=80).step_by(2) {
            for k in 1..(f / 2) {
                let beta = k as f64 * 4.0 / f as f64;
                if let Some(c) = flip_admissible(f, beta) {
                    assert!(8 * c.m > f && 8 * c.m < 3 * f);
                    assert_abs_diff_eq!(c.beta(), beta, epsilon = 1e-12);
                }
            }
        }
    }

    #[test]
    fn b_min_f6() {
        let (b, beta) = b_min(6).unwrap();
        // Closed forms: arccos((59 + 73 sqrt 73)/768) and arctan((5 sqrt 3 + sqrt 219)/2).
        let b_exact = acos_pi((59.0 + 73.0 * 73f64.sqrt()) / 768.0);
        let beta_exact = ((5.0 * 3f64.sqrt() + 219f64.sqrt()) / 2.0).atan() / PI;
        assert_abs_diff_eq!(b, b_exact, epsilon = 1e-10);
        assert_abs_diff_eq!(beta, beta_exact, epsilon = 1e-6);
        assert_abs_diff_eq!(b, 0.1514, epsilon = 1e-4);
    }

    #[test]
    fn b_min_f8_and_large_f() {
        let (b, _) = b_min(8).unwrap();
        assert!(b >= 0.0 && b < 1.0);
        let (b, beta) = b_min(1000).unwrap();
        let a = emt_quad(1000, beta).unwrap().edges.a;
        assert!((b - a).abs() < 1e-2);
    }

    #[test]
    fn predicates_on_family_tile() {
        let q = emt_quad(8, 1.0).unwrap();
        let r = quad_predicates(&q);
        assert!(!r.beta_lt_gamma && !r.alpha_gt_delta);
        assert!(r.consistent(), "{r:?}");
    }

    #[test]
    fn predicates_flag_fabricated_violation() {
        let q = Quadrilateral::new(
            AngleQuad::new(0.3, 0.4, 0.6, 0.9),
            EdgePair { a: 0.3, b: 0.3 },
            12,
        );
        let r = quad_predicates(&q);
        assert!(!r.beta_gamma_equivalence);
        assert!(!r.consistent());
    }
}
