//! Root finding for quadrilaterals inside one-parameter linear angle families.

use std::f64::consts::PI;

use num_rational::Ratio;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::exact::{ratio_to_f64, Q};
use crate::geometry::walk;
use crate::tiling::Chirality;
use crate::trig::{acos_pi, check_tile_count, cos_a_two_ways, cos_b, coolsaet_residuals, AngleQuad, EdgePair, Quadrilateral};

pub const GRID_POINTS: usize = 10_000;
pub const BISECTION_TOL: f64 = 1e-13;
pub const DEDUP_TOL: f64 = 1e-9;
/// A sampled residual below this everywhere means the family is degenerate.
const IDENTICALLY_ZERO: f64 = 1e-12;
/// Largest residual accepted at a tangential (double) root.
const DOUBLE_ROOT_TOL: f64 = 1e-10;

/// `theta_i(alpha) = c0 + c1 alpha` for each of the four angles.
#[derive(Debug, Clone, PartialEq)]
pub struct LinearFamily {
    pub coeffs: [(Q, Q); 4],
    pub f: u32,
    pub interval: (f64, f64),
}

impl LinearFamily {
    /// `beta`, `gamma`, `delta` as `(constant, alpha coefficient)` pairs.
    pub fn new(beta: (Q, Q), gamma: (Q, Q), delta: (Q, Q), f: u32, interval: (f64, f64)) -> Result<Self> {
        check_tile_count(f)?;
        let coeffs = [(Q::zero(), Q::one()), beta, gamma, delta];
        let c0: Q = coeffs.iter().map(|c| c.0).sum();
        let c1: Q = coeffs.iter().map(|c| c.1).sum();
        if c1 != Q::zero() || c0 != Q::new(2 * f as i64 + 4, f as i64) {
            return Err(Error::InvalidParameter(format!(
                "angle sum {c0} + {c1} alpha is not 2 + 4/{f}"
            )));
        }
        if !(interval.0 < interval.1) {
            return Err(Error::InvalidParameter(format!("empty interval {interval:?}")));
        }
        Ok(Self { coeffs, f, interval })
    }

    pub fn angles(&self, alpha: f64) -> AngleQuad {
        let [a, b, c, d] = self.coeffs.map(|(c0, c1)| ratio_to_f64(c0) + ratio_to_f64(c1) * alpha);
        AngleQuad::new(a, b, c, d)
    }
}

/// Shorthand for building families from small fractions.
pub fn q(n: i64, d: i64) -> Q {
    Ratio::new(n, d)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Equation {
    /// `sin(α−γ/2)sin(β/2) = sin(γ/2)sin(δ−β/2)`
    R7,
    /// `sin(α+γ/2)sin(β/2) = −sin(γ/2)sin(δ+β/2)`
    R8,
    Both,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct AlphaRoot {
    pub alpha: f64,
    pub equation: Equation,
    /// Found as a tangency rather than a sign change.
    pub double: bool,
}

fn roots_of(g: impl Fn(f64) -> f64, lo: f64, hi: f64) -> Vec<(f64, bool)> {
    let xs: Vec<f64> = (0..=GRID_POINTS)
        .map(|j| lo + (hi - lo) * j as f64 / GRID_POINTS as f64)
        .collect();
    let ys: Vec<f64> = xs.iter().map(|&x| g(x)).collect();
    let mut out = Vec::new();
    // Endpoints are excluded: the interval is open.
    for j in 1..GRID_POINTS {
        if ys[j] == 0.0 {
            out.push((xs[j], false));
        } else if ys[j] * ys[j + 1] < 0.0 && j + 1 < GRID_POINTS {
            out.push((bisect(&g, xs[j], xs[j + 1]), false));
        } else if ys[j].abs() < ys[j - 1].abs()
            && ys[j].abs() <= ys[j + 1].abs()
            && ys[j - 1] * ys[j] > 0.0
            && ys[j] * ys[j + 1] > 0.0
        {
            // |g| has a local minimum without a sign change: a candidate
            // double root where the derivative changes sign.
            let x = golden_min(|x| g(x).abs(), xs[j - 1], xs[j + 1]);
            if g(x).abs() < DOUBLE_ROOT_TOL {
                out.push((x, true));
            }
        }
    }
    out
}

fn bisect(g: &impl Fn(f64) -> f64, mut lo: f64, mut hi: f64) -> f64 {
    let glo = g(lo);
    while hi - lo > BISECTION_TOL {
        let mid = 0.5 * (lo + hi);
        let gm = g(mid);
        if gm == 0.0 {
            return mid;
        }
        if (gm < 0.0) == (glo < 0.0) {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    0.5 * (lo + hi)
}

fn golden_min(g: impl Fn(f64) -> f64, mut lo: f64, mut hi: f64) -> f64 {
    let r = (5f64.sqrt() - 1.0) / 2.0;
    while hi - lo > BISECTION_TOL {
        let (x1, x2) = (hi - r * (hi - lo), lo + r * (hi - lo));
        if g(x1) < g(x2) {
            hi = x2;
        } else {
            lo = x1;
        }
    }
    0.5 * (lo + hi)
}

/// Every `alpha` in the open interval where `r7` or `r8` vanishes.
pub fn alpha_roots(family: &LinearFamily, _tol: f64) -> Result<Vec<AlphaRoot>> {
    let (lo, hi) = family.interval;
    let r7 = |x: f64| coolsaet_residuals(&family.angles(x)).0;
    let r8 = |x: f64| coolsaet_residuals(&family.angles(x)).1;
    for (name, g) in [("r7", &r7 as &dyn Fn(f64) -> f64), ("r8", &r8)] {
        let degenerate = (0..=100)
            .map(|j| lo + (hi - lo) * (j as f64 + 0.5) / 101.0)
            .all(|x| g(x).abs() < IDENTICALLY_ZERO);
        if degenerate {
            return Err(Error::DegenerateFamily(format!(
                "{name} vanishes identically on ({lo}, {hi})"
            )));
        }
    }
    let mut roots: Vec<AlphaRoot> = Vec::new();
    for (eq, g) in [(Equation::R7, &r7 as &dyn Fn(f64) -> f64), (Equation::R8, &r8)] {
        for (alpha, double) in roots_of(g, lo, hi) {
            match roots.iter_mut().find(|r| (r.alpha - alpha).abs() < DEDUP_TOL) {
                Some(r) if r.equation != eq => r.equation = Equation::Both,
                Some(_) => {}
                None => roots.push(AlphaRoot {
                    alpha,
                    equation: eq,
                    double,
                }),
            }
        }
    }
    roots.sort_by(|a, b| a.alpha.total_cmp(&b.alpha));
    Ok(roots)
}

/// Edge lengths for the given angles: `a` from the two-way cosine, `b` from
/// the cosine relation, with the branch of `b` fixed by closing the boundary.
pub fn complete_quadrilateral(angles: AngleQuad, f: u32) -> Result<Quadrilateral> {
    check_tile_count(f)?;
    let (c1, c2) = cos_a_two_ways(&angles)?;
    if (c1 - c2).abs() > 1e-8 || c1.abs() > 1.0 + 1e-12 {
        return Err(Error::NoQuadrilateral(format!(
            "the two cosines of a disagree: {c1} vs {c2}"
        )));
    }
    let a = acos_pi(0.5 * (c1 + c2));
    let b0 = acos_pi(cos_b(&angles, a));
    let mut best: Option<(f64, Quadrilateral)> = None;
    for b in [b0, 2.0 - b0] {
        let candidate = Quadrilateral::new(angles, EdgePair { a, b }, f);
        for chirality in [Chirality::Plus, Chirality::Minus] {
            let closure = walk(&candidate, chirality).1;
            if best.as_ref().is_none_or(|(c, _)| closure < *c) {
                best = Some((closure, candidate));
            }
        }
    }
    let (closure, quad) = best.expect("two candidates");
    if closure > 1e-8 {
        return Err(Error::InconsistentQuadrilateral { closure });
    }
    Ok(quad)
}

/// One sporadic row: its linear family and the closed-form values.
#[derive(Debug, Clone)]
pub struct SporadicRow {
    pub name: &'static str,
    pub family: LinearFamily,
    pub alpha: f64,
    pub a: f64,
    pub b: f64,
}

fn asin_pi(x: f64) -> f64 {
    x.asin() / PI
}

/// The five sporadic quadrilaterals with their closed-form `alpha`, `a`, `b`.
pub fn sporadic_rows() -> Vec<SporadicRow> {
    let (r2, r3, r5, r10) = (2f64.sqrt(), 3f64.sqrt(), 5f64.sqrt(), 10f64.sqrt());
    let fam = |beta, gamma, delta, f, lo: f64| {
        LinearFamily::new(beta, gamma, delta, f, (lo, 1.0)).expect("valid sporadic family")
    };
    let k = |c: f64| 1.0 - asin_pi(c);
    let s = 2.0 * r2 + 1.0;
    vec![
        SporadicRow {
            name: "emt12_a2b_c3",
            family: fam((q(2, 1), q(-2, 1)), (q(2, 3), q(0, 1)), (q(-1, 3), q(1, 1)), 12, 1.0 / 3.0),
            alpha: k(6f64.sqrt() / 4.0),
            a: acos_pi((2.0 * r5 - 3.0) / 3.0),
            b: acos_pi(3.0 * r5 - 6.0),
        },
        SporadicRow {
            name: "emt16_a2b_bcd2",
            family: fam((q(2, 1), q(-2, 1)), (q(1, 2), q(0, 1)), (q(-1, 4), q(1, 1)), 16, 0.25),
            alpha: k((3.0 * r10 - 3.0 * r5 - 3.0 * r2 + 15.0).sqrt() / 6.0),
            a: acos_pi((r10 + r5 - r2 - 3.0) / 2.0),
            b: acos_pi(
                ((27.0 * r5 - 43.0) * r2 + 23.0 * r5 - 27.0)
                    / ((196.0 * r5 - 420.0) * r2 - 267.0 * r5 + 623.0),
            ),
        },
        SporadicRow {
            name: "emt16_bd2_a2c2",
            family: fam((q(1, 2), q(0, 1)), (q(1, 1), q(-1, 1)), (q(3, 4), q(0, 1)), 16, 0.0),
            alpha: k(s.sqrt() / 2.0),
            a: acos_pi(1.0 / s.sqrt()),
            b: acos_pi(7.0 / s.powf(1.5)),
        },
        SporadicRow {
            name: "f16_bc2_a2d2",
            family: fam((q(1, 2), q(0, 1)), (q(3, 4), q(0, 1)), (q(1, 1), q(-1, 1)), 16, 0.0),
            alpha: k((10.0 + 4.0 * r2).sqrt() / 17f64.sqrt()),
            a: 0.25,
            b: acos_pi((2.0 * r2 - 1.0) / 4.0),
        },
        SporadicRow {
            name: "octa24_b3",
            family: fam((q(2, 3), q(0, 1)), (q(1, 1), q(-1, 1)), (q(1, 2), q(0, 1)), 24, 0.0),
            alpha: asin_pi((4.0 + r3).sqrt() / 6f64.sqrt()),
            a: asin_pi(r2 / (4.0 + r3).sqrt()),
            b: 0.5 - asin_pi(r2 / (4.0 + r3).sqrt()),
        },
    ]
}

/// The quartic `A x^4 + B x^2 + C = 0` in `x = cos alpha` for parameter `k`.
#[derive(Debug, Clone, PartialEq)]
pub struct QuarticCase {
    pub k: u32,
    pub a: f64,
    pub b: f64,
    pub c: f64,
    /// `x1, x2 = ±cos(π/k)` and `x3, x4 = ±(2c² + c − 2)/√A`.
    pub roots: [f64; 4],
    pub residuals: [f64; 4],
}

impl QuarticCase {
    pub fn eval(&self, x: f64) -> f64 {
        let x2 = x * x;
        (self.a * x2 + self.b) * x2 + self.c
    }

    /// Distinct `alpha = arccos(x)` in `(0, 1)`, with multiplicities.
    pub fn alphas(&self) -> Vec<(f64, usize)> {
        let mut out: Vec<(f64, usize)> = Vec::new();
        let mut all: Vec<f64> = self.roots.iter().map(|&x| acos_pi(x)).collect();
        all.sort_by(f64::total_cmp);
        for x in all {
            match out.last_mut() {
                Some((y, n)) if (x - *y).abs() < 1e-9 => *n += 1,
                _ => out.push((x, 1)),
            }
        }
        out
    }
}

pub fn quartic_case(k: u32) -> Result<QuarticCase> {
    if k < 3 {
        return Err(Error::InvalidParameter(format!("k = {k} < 3")));
    }
    let c = (PI / k as f64).cos();
    let a = 8.0 * c.powi(3) - 4.0 * c * c - 8.0 * c + 5.0;
    // The x² coefficient is fixed by Vieta from the closed-form roots; the
    // commonly quoted form has `c²` where `2c²` is needed.
    let b = -8.0 * c.powi(5) + 4.0 * c.powi(3) + 2.0 * c * c + 4.0 * c - 4.0;
    let cc = c * c * (2.0 * c * c + c - 2.0).powi(2);
    let r = (2.0 * c * c + c - 2.0) / a.sqrt();
    let mut case = QuarticCase {
        k,
        a,
        b,
        c: cc,
        roots: [c, -c, r, -r],
        residuals: [0.0; 4],
    };
    case.residuals = case.roots.map(|x| case.eval(x));
    if let Some(worst) = case.residuals.iter().map(|r| r.abs()).reduce(f64::max) {
        if worst > 1e-10 {
            return Err(Error::SingularConfiguration(format!(
                "quartic root residual {worst:e} for k = {k}"
            )));
        }
    }
    Ok(case)
}

/// `min(|x1,2|, |x3,4|) − cos((1/2 − 1/k)π)`; positive means no admissible alpha.
pub fn nonexistence_margin(k: u32) -> Result<f64> {
    if k < 6 {
        return Err(Error::Precondition(format!(
            "the margin only applies for k >= 6, got {k}"
        )));
    }
    let case = quartic_case(k)?;
    let m = case.roots[0].abs().min(case.roots[2].abs());
    Ok(m - ((0.5 - 1.0 / k as f64) * PI).cos())
}
