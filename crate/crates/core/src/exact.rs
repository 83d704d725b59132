//! Exact bookkeeping of vertex angle sums.
//!
//! Many tilings use angles that are individually irrational but whose
//! relevant combinations are rational (for instance `gamma = 4/f` and
//! `alpha + delta = m gamma` in the flip families). An [`AngleBook`] records
//! every 0/1 combination of the four angles whose value is recognisably a
//! fraction with denominator dividing `12 f`, together with the identity
//! `alpha + beta + gamma + delta = 2 + 4/f`. A vertex whose vector lies in the
//! rational span of these relations is summed exactly; any other vertex falls
//! back to compensated floating-point summation.

use num_rational::Ratio;
use num_traits::{One, Zero};

use crate::trig::Quadrilateral;

pub type Q = Ratio<i64>;

/// Distance under which a float is taken to be the nearby fraction.
pub const RECOGNITION_TOL: f64 = 1e-11;

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum VertexSum {
    Exact(Q),
    Approx(f64),
}

impl VertexSum {
    pub fn value(&self) -> f64 {
        match *self {
            VertexSum::Exact(q) => *q.numer() as f64 / *q.denom() as f64,
            VertexSum::Approx(x) => x,
        }
    }

    /// Whether the sum equals `target`: exactly, or within `tol` for floats.
    pub fn equals(&self, target: Q, tol: f64) -> bool {
        match *self {
            VertexSum::Exact(q) => q == target,
            VertexSum::Approx(x) => (x - ratio_to_f64(target)).abs() <= tol,
        }
    }

    pub fn is_exact(&self) -> bool {
        matches!(self, VertexSum::Exact(_))
    }
}

pub fn ratio_to_f64(q: Q) -> f64 {
    *q.numer() as f64 / *q.denom() as f64
}

#[derive(Debug, Clone)]
struct Row {
    coeffs: [Q; 4],
    value: Q,
    pivot: usize,
}

#[derive(Debug, Clone)]
pub struct AngleBook {
    angles: [f64; 4],
    basis: Vec<Row>,
}

impl AngleBook {
    pub fn recognize(q: &Quadrilateral) -> Self {
        Self::from_angles(q.angles.as_array(), q.f)
    }

    pub fn from_angles(angles: [f64; 4], f: u32) -> Self {
        let denom = 12 * f as i64;
        let mut book = Self {
            angles,
            basis: Vec::new(),
        };
        book.insert([1, 1, 1, 1], Q::new(2 * f as i64 + 4, f as i64));
        for mask in 1u8..15 {
            let v: [i64; 4] = std::array::from_fn(|i| ((mask >> i) & 1) as i64);
            let s: f64 = (0..4).map(|i| v[i] as f64 * angles[i]).sum();
            let p = (s * denom as f64).round();
            if (s - p / denom as f64).abs() < RECOGNITION_TOL {
                book.insert(v, Q::new(p as i64, denom));
            }
        }
        book
    }

    /// Number of independent exact relations (1 to 4).
    pub fn rank(&self) -> usize {
        self.basis.len()
    }

    /// Exact value of `v . angles` if `v` is in the span of known relations.
    pub fn exact(&self, v: [i64; 4]) -> Option<Q> {
        let (rest, value) = self.reduce(v.map(Q::from_integer));
        rest.iter().all(Zero::is_zero).then_some(value)
    }

    pub fn vertex_sum(&self, n: [u32; 4]) -> VertexSum {
        match self.exact(n.map(i64::from)) {
            Some(q) => VertexSum::Exact(q),
            None => VertexSum::Approx(neumaier(
                (0..4).map(|i| n[i] as f64 * self.angles[i]),
            )),
        }
    }

    fn reduce(&self, mut v: [Q; 4]) -> ([Q; 4], Q) {
        let mut value = Q::zero();
        for row in &self.basis {
            let k = v[row.pivot] / row.coeffs[row.pivot];
            if k.is_zero() {
                continue;
            }
            for i in 0..4 {
                v[i] -= k * row.coeffs[i];
            }
            value += k * row.value;
        }
        (v, value)
    }

    fn insert(&mut self, v: [i64; 4], value: Q) {
        let (rest, reduced) = self.reduce(v.map(Q::from_integer));
        // A dependent relation carries no new information; an inconsistent one
        // means a spurious recognition, which is dropped.
        let Some(pivot) = rest.iter().position(|c| !c.is_zero()) else {
            return;
        };
        let scale = Q::one() / rest[pivot];
        let row = Row {
            coeffs: rest.map(|c| c * scale),
            value: (value - reduced) * scale,
            pivot,
        };
        // Keep the basis fully reduced so `reduce` is a single pass.
        for other in &mut self.basis {
            let k = other.coeffs[pivot];
            if !k.is_zero() {
                for i in 0..4 {
                    other.coeffs[i] -= k * row.coeffs[i];
                }
                other.value -= k * row.value;
            }
        }
        self.basis.push(row);
    }
}

/// Neumaier's compensated summation.
pub fn neumaier(terms: impl IntoIterator<Item = f64>) -> f64 {
    let (mut sum, mut c) = (0.0f64, 0.0f64);
    for x in terms {
        let t = sum + x;
        c += if sum.abs() >= x.abs() {
            (sum - t) + x
        } else {
            (x - t) + sum
        };
        sum = t;
    }
    sum + c
}
