//! Placing tiles on the sphere.

use std::collections::{BTreeMap, VecDeque};

use nalgebra::{Matrix3, Vector3};

use crate::error::{Error, Result};
use crate::family::emt_quad;
use crate::generator::{build_emt, EarthMap};
use crate::tiling::{Chirality, Tiling};
use crate::trig::{EdgePair, Quadrilateral};

use super::sphere::{advance, arc, ccw_angle, frame, from_polar, rotation, tangent_towards, UnitVec};

/// Walk closure above which a quadrilateral is rejected.
pub const CLOSURE_FAIL: f64 = 1e-8;
/// Largest disagreement between copies of a vertex in a realized tiling.
pub const PROPAGATION_TOL: f64 = 1e-8;

#[derive(Debug, Clone, PartialEq)]
pub struct Placement {
    pub tile: usize,
    /// Positions of the alpha, beta, gamma, delta corners.
    pub corners: [UnitVec; 4],
    pub chirality: Chirality,
}

impl Placement {
    /// Side lengths `alpha-beta, beta-gamma, gamma-delta, delta-alpha`, each
    /// measured along the minor arc.
    pub fn arcs(&self) -> [f64; 4] {
        std::array::from_fn(|k| arc(&self.corners[k], &self.corners[(k + 1) % 4]))
    }

    /// Interior angles, measured on the side the chirality puts inside.
    pub fn angles(&self) -> [f64; 4] {
        std::array::from_fn(|k| {
            let p = &self.corners[k];
            let prev = tangent_towards(p, &self.corners[(k + 3) % 4]);
            let next = tangent_towards(p, &self.corners[(k + 1) % 4]);
            match self.chirality {
                Chirality::Plus => ccw_angle(p, &prev, &next),
                Chirality::Minus => ccw_angle(p, &next, &prev),
            }
        })
    }

    /// Interior angle sum minus 2, the area over pi.
    pub fn excess(&self) -> f64 {
        self.angles().iter().sum::<f64>() - 2.0
    }

    pub fn transformed(&self, m: &Matrix3<f64>) -> Placement {
        Placement {
            corners: self.corners.map(|c| m * c),
            ..self.clone()
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct Mesh {
    pub positions: BTreeMap<usize, UnitVec>,
    pub placements: Vec<Placement>,
    pub edges: EdgePair,
    /// Largest distance between two placements of the same vertex.
    pub discrepancy: f64,
}

impl Mesh {
    pub fn empty() -> Self {
        Self {
            positions: BTreeMap::new(),
            placements: Vec::new(),
            edges: EdgePair { a: 0.0, b: 0.0 },
            discrepancy: 0.0,
        }
    }

    pub fn total_excess(&self) -> f64 {
        self.placements.iter().map(Placement::excess).sum()
    }
}

/// Boundary walk of `q` in the given chirality: from alpha at the north pole
/// heading along the prime meridian, turning by the exterior angle at each
/// corner. Returns the corners and the distance by which the walk misses its
/// starting point.
pub fn walk(q: &Quadrilateral, chirality: Chirality) -> ([UnitVec; 4], f64) {
    let lens = [q.edges.a, q.edges.a, q.edges.a, q.edges.b];
    let angles = q.angles.as_array();
    // Plus tiles are clockwise from outside: interior on the right.
    let turn = match chirality {
        Chirality::Plus => -1.0,
        Chirality::Minus => 1.0,
    };
    let mut p = Vector3::z();
    let mut h = Vector3::x();
    let mut corners = [p; 4];
    for k in 0..4 {
        corners[k] = p;
        (p, h) = advance(&p, &h, lens[k]);
        let next = (k + 1) % 4;
        h = rotation(&p, turn * (1.0 - angles[next])) * h;
    }
    (corners, (p - corners[0]).norm())
}

pub fn canonical_tile(q: &Quadrilateral) -> Result<Placement> {
    canonical_placement(q, Chirality::Plus, 0)
}

fn canonical_placement(q: &Quadrilateral, chirality: Chirality, tile: usize) -> Result<Placement> {
    let (corners, closure) = walk(q, chirality);
    if closure > CLOSURE_FAIL {
        return Err(Error::InconsistentQuadrilateral { closure });
    }
    Ok(Placement {
        tile,
        corners,
        chirality,
    })
}

/// Proper rotation taking `(u0, v0)` to `(u1, v1)`, assuming equal arcs.
fn motion(u0: &UnitVec, v0: &UnitVec, u1: &UnitVec, v1: &UnitVec) -> Matrix3<f64> {
    frame(u1, v1) * frame(u0, v0).transpose()
}

/// Places every tile by walking the adjacency graph from `seed`: each
/// neighbour is the congruent copy of its chirality whose two corners on the
/// shared side land on the already placed endpoints.
pub fn realize_by_propagation(t: &Tiling, q: &Quadrilateral, seed: &Placement) -> Result<Mesh> {
    let tiles = t.tiles();
    if tiles.is_empty() {
        return Ok(Mesh::empty());
    }
    let first = &tiles[seed.tile];
    if first.chirality != seed.chirality {
        return Err(Error::Precondition(format!(
            "seed chirality {:?} differs from tile {}",
            seed.chirality, seed.tile
        )));
    }
    let plus = canonical_placement(q, Chirality::Plus, 0)?;
    let minus = canonical_placement(q, Chirality::Minus, 0)?;
    let mut placed: Vec<Option<Placement>> = vec![None; tiles.len()];
    let mut copies: BTreeMap<usize, Vec<UnitVec>> = BTreeMap::new();
    let record = |p: &Placement, copies: &mut BTreeMap<usize, Vec<UnitVec>>| {
        for (k, c) in p.corners.iter().enumerate() {
            copies.entry(tiles[p.tile].corners[k]).or_default().push(*c);
        }
    };
    record(seed, &mut copies);
    placed[seed.tile] = Some(seed.clone());
    let mut queue = VecDeque::from([seed.tile]);
    while let Some(i) = queue.pop_front() {
        let here = placed[i].clone().expect("queued tiles are placed");
        for (k, j, s) in t.neighbours(i) {
            if placed[j].is_some() {
                continue;
            }
            let u = tiles[i].corners[k];
            let pos = |id: usize| {
                if id == u {
                    here.corners[k]
                } else {
                    here.corners[(k + 1) % 4]
                }
            };
            let canon = match tiles[j].chirality {
                Chirality::Plus => &plus,
                Chirality::Minus => &minus,
            };
            let (c0, c1) = (s, (s + 1) % 4);
            let m = motion(
                &canon.corners[c0],
                &canon.corners[c1],
                &pos(tiles[j].corners[c0]),
                &pos(tiles[j].corners[c1]),
            );
            let mut p = canon.transformed(&m);
            p.tile = j;
            record(&p, &mut copies);
            placed[j] = Some(p);
            queue.push_back(j);
        }
    }
    let placements: Vec<Placement> = placed
        .into_iter()
        .enumerate()
        .map(|(i, p)| p.ok_or_else(|| Error::Precondition(format!("tile {i} is not connected to the seed"))))
        .collect::<Result<_>>()?;
    let discrepancy = copies
        .values()
        .flat_map(|c| c.iter().map(move |x| (x - c[0]).norm()))
        .fold(0.0, f64::max);
    if discrepancy >= PROPAGATION_TOL {
        return Err(Error::GeometricInconsistency { discrepancy });
    }
    Ok(Mesh {
        positions: copies.into_iter().map(|(v, c)| (v, c[0])).collect(),
        placements,
        edges: q.edges,
        discrepancy,
    })
}

/// Seed for [`realize_by_propagation`]: tile 0 in canonical position.
pub fn default_seed(t: &Tiling, q: &Quadrilateral) -> Result<Placement> {
    let tile = t
        .tiles()
        .first()
        .ok_or_else(|| Error::Precondition("empty tiling".into()))?;
    canonical_placement(q, tile.chirality, 0)
}

/// Realizes a tiling from the default seed.
pub fn realize(t: &Tiling, q: &Quadrilateral) -> Result<Mesh> {
    if t.tiles().is_empty() {
        return Ok(Mesh::empty());
    }
    realize_by_propagation(t, q, &default_seed(t, q)?)
}

/// Largest corner distance after the best proper rotation of the canonical
/// tile onto `p`.
pub fn tile_fit_residual(p: &Placement, q: &Quadrilateral) -> Result<f64> {
    let canon = canonical_placement(q, p.chirality, p.tile)?;
    let fit = procrustes(&canon.corners, &p.corners, false);
    Ok(fit.max_residual)
}

/// The direct earth map construction: apex `A` at the north pole, `E` and `F`
/// on the equator `2/f` apart, `D` at colatitude `1 - a` and longitude `t`,
/// `B` and `C` the half-turns of `D` about `E` and `F`; zones repeat by
/// rotation through `4/f` about the polar axis.
pub fn emt_coordinates(f: u32, beta: f64) -> Result<Mesh> {
    let q = emt_quad(f, beta)?;
    let t = (1.0 - beta) / 2.0;
    let e = from_polar(0.5, 0.0);
    let d = from_polar(1.0 - q.edges.a, t);
    let b = rotation(&e, 1.0) * d;
    let map = EarthMap { f };
    let tiling = build_emt(f)?;
    let mut positions = BTreeMap::new();
    positions.insert(map.north(), Vector3::z());
    positions.insert(map.south(), -Vector3::z());
    for i in 0..map.zones() {
        let r = rotation(&Vector3::z(), 4.0 * i as f64 / f as f64);
        positions.insert(map.p(i), r * b);
        positions.insert(map.q(i), r * d);
    }
    let placements: Vec<Placement> = tiling
        .tiles()
        .iter()
        .map(|tile| Placement {
            tile: tile.id,
            corners: tile.corners.map(|v| positions[&v]),
            chirality: tile.chirality,
        })
        .collect();
    let mut discrepancy: f64 = 0.0;
    for p in &placements {
        discrepancy = discrepancy.max(tile_fit_residual(p, &q)?);
    }
    if discrepancy >= PROPAGATION_TOL {
        return Err(Error::GeometricInconsistency { discrepancy });
    }
    Ok(Mesh {
        positions,
        placements,
        edges: q.edges,
        discrepancy,
    })
}

#[derive(Debug, Clone, PartialEq)]
pub struct Alignment {
    /// Orthogonal matrix taking the source points onto the target.
    pub matrix: Matrix3<f64>,
    pub max_residual: f64,
    pub rms: f64,
}

/// Best orthogonal map of `from` onto `to` (Kabsch). With `allow_reflection`
/// the map may reverse orientation.
pub fn procrustes(from: &[UnitVec], to: &[UnitVec], allow_reflection: bool) -> Alignment {
    let h: Matrix3<f64> = from
        .iter()
        .zip(to)
        .map(|(x, y)| y * x.transpose())
        .sum();
    let svd = h.svd(true, true);
    let (u, v_t) = (svd.u.expect("u requested"), svd.v_t.expect("v requested"));
    let mut d = Matrix3::identity();
    if !allow_reflection && (u * v_t).determinant() < 0.0 {
        d[(2, 2)] = -1.0;
    }
    let matrix = u * d * v_t;
    let residuals: Vec<f64> = from.iter().zip(to).map(|(x, y)| (matrix * x - y).norm()).collect();
    let max_residual = residuals.iter().copied().fold(0.0, f64::max);
    let rms = (residuals.iter().map(|r| r * r).sum::<f64>() / residuals.len().max(1) as f64).sqrt();
    Alignment {
        matrix,
        max_residual,
        rms,
    }
}
