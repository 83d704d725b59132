//! Vertex types admitted by given angle values, the irrational angle
//! determinant test, and vertex multiplicities.

use num_rational::Ratio;

use crate::error::{Error, Result};
use crate::exact::AngleBook;
use crate::tiling::VertexVector;
use crate::trig::{check_tile_count, Quadrilateral};

/// Default tolerance for a vertex angle sum that is not decided exactly.
pub const VERTEX_SUM_TOL: f64 = 1e-9;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct AngleAssignment {
    pub theta: [f64; 4],
    pub f: u32,
}

impl AngleAssignment {
    pub fn new(theta: [f64; 4], f: u32) -> Result<Self> {
        check_tile_count(f)?;
        if theta.iter().any(|&t| !(t > 0.0 && t < 2.0)) {
            return Err(Error::InvalidParameter(format!("angles {theta:?} outside (0, 2)")));
        }
        let residual = theta.iter().sum::<f64>() - (2.0 + 4.0 / f as f64);
        if residual.abs() > VERTEX_SUM_TOL {
            return Err(Error::InvalidParameter(format!(
                "angle sum misses 2 + 4/{f} by {residual:e}"
            )));
        }
        Ok(Self { theta, f })
    }

    pub fn from_quad(q: &Quadrilateral) -> Result<Self> {
        Self::new(q.angles.as_array(), q.f)
    }

    /// `ceil(2 / min theta)`: no vertex can hold more corners.
    pub fn default_max_degree(&self) -> u32 {
        let min = self.theta.iter().copied().fold(f64::INFINITY, f64::min);
        ((2.0 / min) - 1e-9).ceil().max(3.0) as u32
    }
}

/// All vertex vectors of degree `3..=max_degree` whose angle sum is 2, that
/// satisfy the parity lemma and do not contain all four angles.
pub fn enumerate_vertex_types(
    assign: &AngleAssignment,
    tol: f64,
    max_degree: Option<u32>,
) -> Vec<VertexVector> {
    let max_degree = max_degree.unwrap_or_else(|| assign.default_max_degree());
    let book = AngleBook::from_angles(assign.theta, assign.f);
    let two = Ratio::from_integer(2);
    let th = assign.theta;
    let mut out = Vec::new();
    // Partial sums prune the search; the slack absorbs rounding.
    let over = |s: f64| s > 2.0 + tol.max(1e-12);
    for n1 in 0..=max_degree {
        let s1 = n1 as f64 * th[0];
        if over(s1) {
            break;
        }
        for n2 in 0..=max_degree - n1 {
            let s2 = s1 + n2 as f64 * th[1];
            if over(s2) {
                break;
            }
            for n3 in 0..=max_degree - n1 - n2 {
                let s3 = s2 + n3 as f64 * th[2];
                if over(s3) {
                    break;
                }
                for n4 in 0..=max_degree - n1 - n2 - n3 {
                    let v = VertexVector::new(n1, n2, n3, n4);
                    if over(s3 + n4 as f64 * th[3]) {
                        break;
                    }
                    if v.degree() >= 3
                        && v.parity_ok()
                        && !v.has_all_four()
                        && book.vertex_sum(v.0).equals(two, tol)
                    {
                        out.push(v);
                    }
                }
            }
        }
    }
    out
}

/// The balance lemma as a filter: unless both `α²⋯` and `δ²⋯` occur among
/// the candidate types, a vertex holds either no α, δ or exactly `αδ`.
pub fn balance_filter(types: &[VertexVector]) -> Vec<VertexVector> {
    let has_a2 = types.iter().any(|v| v.0[0] >= 2);
    let has_d2 = types.iter().any(|v| v.0[3] >= 2);
    if has_a2 && has_d2 {
        return types.to_vec();
    }
    types
        .iter()
        .copied()
        .filter(|v| matches!((v.0[0], v.0[3]), (0, 0) | (1, 1)))
        .collect()
}

/// Determinant of a 4x4 integer matrix by permutation expansion.
pub fn det4(rows: [[i64; 4]; 4]) -> i128 {
    let mut det = 0i128;
    let mut perm = [0usize, 1, 2, 3];
    // Heap's algorithm tracks the sign by the parity of swaps.
    let mut c = [0usize; 4];
    let mut sign = 1i128;
    let term = |p: &[usize; 4]| (0..4).map(|i| rows[i][p[i]] as i128).product::<i128>();
    det += sign * term(&perm);
    let mut i = 0;
    while i < 4 {
        if c[i] < i {
            if i % 2 == 0 {
                perm.swap(0, i);
            } else {
                perm.swap(c[i], i);
            }
            sign = -sign;
            det += sign * term(&perm);
            c[i] += 1;
            i = 0;
        } else {
            c[i] = 0;
            i += 1;
        }
    }
    det
}

fn rank3(rows: [[i64; 4]; 3]) -> bool {
    // Rank 3 iff some 3x3 minor is nonzero.
    (0..4).any(|skip| {
        let cols: Vec<usize> = (0..4).filter(|&c| c != skip).collect();
        let m = |r: usize, c: usize| rows[r][cols[c]] as i128;
        m(0, 0) * (m(1, 1) * m(2, 2) - m(1, 2) * m(2, 1))
            - m(0, 1) * (m(1, 0) * m(2, 2) - m(1, 2) * m(2, 0))
            + m(0, 2) * (m(1, 0) * m(2, 1) - m(1, 1) * m(2, 0))
            != 0
    })
}

/// The irrational angle lemma's test: with `l`, `m` and `u = (1,1,1,1)`
/// independent, vertex `n` is compatible with `l` and `m` only if
/// `det(u, l, m, n) = 0`.
pub fn coplanarity_check(l: VertexVector, m: VertexVector, n: VertexVector) -> Result<bool> {
    let row = |v: VertexVector| v.0.map(i64::from);
    let u = [1i64; 4];
    if !rank3([u, row(l), row(m)]) {
        return Err(Error::Precondition(format!(
            "{l}, {m} and (1,1,1,1) are linearly dependent"
        )));
    }
    Ok(det4([u, row(l), row(m), row(n)]) == 0)
}

/// All non-negative integer `x` with `sum x_v n_v = (f, f, f, f)`.
pub fn solve_multiplicities(types: &[VertexVector], f: u32) -> Vec<Vec<u32>> {
    fn rec(types: &[VertexVector], k: usize, rest: [u32; 4], x: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if k == types.len() {
            if rest == [0; 4] {
                out.push(x.clone());
            }
            return;
        }
        let v = types[k].0;
        let bound = (0..4)
            .filter(|&i| v[i] > 0)
            .map(|i| rest[i] / v[i])
            .min()
            .unwrap_or(0);
        for c in 0..=bound {
            x.push(c);
            rec(types, k + 1, std::array::from_fn(|i| rest[i] - c * v[i]), x, out);
            x.pop();
        }
    }
    let mut out = Vec::new();
    if types.iter().all(|v| v.degree() > 0) {
        rec(types, 0, [f; 4], &mut Vec::new(), &mut out);
    }
    out
}
