//! Flip modifications of the earth map.
//!
//! A block of `l` consecutive time zones is bounded by a hexagon of six a
//! edges `N, P_i, Q_i, S, Q_{i+l}, P_{i+l}`. A basic flip reflects the block
//! across an axis of that hexagon: for `beta < 1` the axis separates `N` from
//! `P_i`, for `beta >= 1` it separates `N` from `P_{i+l}`. Interior vertices
//! keep their ids, the hexagon corners are permuted and the block's tiles
//! change chirality.
//!
//! Tilings with `n` blocks are identified by the multiset of the `n` gaps of
//! unflipped zones between consecutive blocks; for `n <= 3` this is the same
//! as quotienting the cyclic arrangement by rotations and reflections.

use crate::error::{Error, Result};
use crate::family::{emt_quad, moduli_point_quad, Degeneracy, FlipCase, FlipKind, FlipRow, ModuliPoint};
use crate::tiling::{Tile, Tiling};
use crate::trig::Quadrilateral;

use super::emt::EarthMap;

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FlipSpec {
    pub f: u32,
    pub m: u32,
    /// Unflipped zones after each block, in placement order.
    pub gaps: Vec<u32>,
}

impl FlipSpec {
    pub fn n(&self) -> usize {
        self.gaps.len()
    }
}

fn check_flip_number(case: &FlipCase, n: u32) -> Result<()> {
    if n == 0 || n > case.max_flips() {
        return Err(Error::InvalidFlip(format!(
            "{n} flips requested; f = {}, m = {} allows 1 to {}",
            case.f,
            case.m,
            case.max_flips()
        )));
    }
    Ok(())
}

/// Unflipped zones `f/2 - n l` left by `n` blocks.
fn gap_total(case: &FlipCase, n: u32) -> Result<u32> {
    check_flip_number(case, n)?;
    case.gap_total(n).ok_or_else(|| {
        Error::InvalidFlip(format!(
            "{n} blocks of {} zones do not fit into {} zones",
            case.block_zones(),
            case.f / 2
        ))
    })
}

/// The tile of the flip case: `beta = (f/2 - m) 4/f` on the earth map family,
/// or the rhombus at that value.
pub fn flip_quad(f: u32, m: u32) -> Result<Quadrilateral> {
    let case = FlipCase::new(f, m)?;
    if case.degeneracy == Degeneracy::RhombusA4 {
        moduli_point_quad(ModuliPoint {
            f,
            t: (1.0 - case.beta()) / 2.0,
        })
    } else {
        emt_quad(f, case.beta())
    }
}

pub fn apply_flips(f: u32, m: u32, gaps: &[u32]) -> Result<Tiling> {
    let case = FlipCase::new(f, m)?;
    let g = gap_total(&case, gaps.len() as u32)?;
    if gaps.iter().sum::<u32>() != g {
        return Err(Error::InvalidFlip(format!(
            "gaps {gaps:?} must sum to f/2 - n l = {g}"
        )));
    }
    let map = EarthMap { f };
    let l = case.block_zones() as usize;
    let mut tiles = map.tiles();
    let mut start = 0usize;
    for &gap in gaps {
        let i = start;
        let (n, s) = (map.north(), map.south());
        let (pi, qi, pl, ql) = (map.p(i), map.q(i), map.p(i + l), map.q(i + l));
        let swaps = match case.kind {
            FlipKind::BetaBelowOne => [(n, pi), (qi, pl), (s, ql)],
            FlipKind::BetaAtLeastOne => [(n, pl), (pi, ql), (qi, s)],
        };
        let sigma = |v: usize| {
            swaps
                .iter()
                .find_map(|&(x, y)| {
                    if v == x {
                        Some(y)
                    } else if v == y {
                        Some(x)
                    } else {
                        None
                    }
                })
                .unwrap_or(v)
        };
        for zone in i..i + l {
            for id in [2 * (zone % map.zones()), 2 * (zone % map.zones()) + 1] {
                let t = &tiles[id];
                tiles[id] = Tile::new(id, t.chirality.flipped(), t.corners.map(sigma));
            }
        }
        start += l + gap as usize;
    }
    Tiling::from_tiles(tiles)
}

/// Multisets of `n` non-negative integers summing to `total`, each sorted
/// ascending, in lexicographic order.
pub fn gap_multisets(total: u32, n: u32) -> Vec<Vec<u32>> {
    fn rec(total: u32, n: u32, min: u32, prefix: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if n == 1 {
            if total >= min {
                prefix.push(total);
                out.push(prefix.clone());
                prefix.pop();
            }
            return;
        }
        let mut x = min;
        while x * n <= total {
            prefix.push(x);
            rec(total - x, n - 1, x, prefix, out);
            prefix.pop();
            x += 1;
        }
    }
    let mut out = Vec::new();
    if n > 0 {
        rec(total, n, 0, &mut Vec::new(), &mut out);
    }
    out
}

pub fn enumerate_flip_tilings(f: u32, m: u32) -> Result<Vec<FlipSpec>> {
    let case = FlipCase::new(f, m)?;
    Ok((1..=case.max_flips())
        .filter_map(|n| case.gap_total(n).map(|g| (n, g)))
        .flat_map(|(n, g)| gap_multisets(g, n))
        .map(|gaps| FlipSpec { f, m, gaps })
        .collect())
}

/// Number of tilings with exactly `n` flips: partitions of the gap total into
/// at most `n` parts.
pub fn count_flip_tilings(f: u32, m: u32, n: u32) -> Result<u64> {
    let case = FlipCase::new(f, m)?;
    check_flip_number(&case, n)?;
    let Some(g) = case.gap_total(n) else {
        return Ok(0);
    };
    let g = g as u64;
    Ok(match n {
        1 => 1,
        2 => g / 2 + 1,
        _ => nearest((g + 3) * (g + 3), 12),
    })
}

/// The count as printed in the flip table for the row of `(f, m)`, when the
/// table prints one.
pub fn printed_count(f: u32, m: u32, n: u32) -> Option<u64> {
    let case = FlipCase::new(f, m).ok()?;
    if n > case.max_flips() || case.gap_total(n).is_none() {
        return None;
    }
    let (f, m) = (f as i64, m as i64);
    let floor4 = |x: i64| x.div_euclid(4) as u64;
    let l_is_m = case.kind == FlipKind::BetaAtLeastOne;
    match (n, case.row) {
        (1, _) => Some(1),
        (2, _) if l_is_m => Some(floor4(f - 4 * m + 4)),
        (2, _) => Some(floor4(4 * m - f + 4)),
        (3, FlipRow::UpToSixth) => {
            let x = f - 6 * m;
            Some(floor4(x + 4) + nearest((x * x) as u64, 48))
        }
        (3, FlipRow::ThirdToThreeEighths) => {
            let x = 3 * m - f;
            Some((x + 2).div_euclid(2) as u64 + nearest((x * x) as u64, 12))
        }
        _ => None,
    }
}

/// `<p/q>`, the nearest integer; a half-integer never reaches it.
fn nearest(p: u64, q: u64) -> u64 {
    assert!((2 * p) % (2 * q) != q, "tie in nearest integer of {p}/{q}");
    (2 * p + q) / (2 * q)
}
