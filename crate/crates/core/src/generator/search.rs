//! Backtracking search for tilings by congruent copies of one quadrilateral.
//!
//! Tiles are placed as actual spherical quadrilaterals. The search always
//! extends the open vertex with the largest covered angle, attaching a tile
//! along the first free ray counterclockwise from the covered sectors. A
//! candidate is kept only if its angle sectors do not overlap existing ones,
//! every partial vertex fits under an admissible vertex type, no vertex falls
//! inside another tile and no two edges cross.

use crate::error::{Error, Result};
use crate::geometry::sphere::{arc, ccw_angle, frame, tangent_towards, UnitVec};
use crate::geometry::{walk, CLOSURE_FAIL};
use crate::tiling::{Chirality, Tile, Tiling, VertexVector};
use crate::trig::Quadrilateral;

const SAME_POINT: f64 = 1e-7;
const ANGLE_EPS: f64 = 1e-7;

#[derive(Debug, Clone)]
struct Placed {
    chirality: Chirality,
    ids: [usize; 4],
    pos: [UnitVec; 4],
}

#[derive(Debug, Clone, Default)]
struct VertexState {
    pos: UnitVec,
    /// Reference tangent for measuring sector directions.
    reference: UnitVec,
    counts: [u32; 4],
    /// `(start, width)` of covered sectors, counterclockwise from outside.
    sectors: Vec<(f64, f64)>,
    /// For each sector, the vertex at the far end of its counterclockwise ray.
    ray_ends: Vec<usize>,
    covered: f64,
}

#[derive(Debug, Clone)]
struct State {
    tiles: Vec<Placed>,
    vertices: Vec<VertexState>,
}

/// Canonical corners and the interior sector geometry of each corner.
struct Shape {
    corners: [[UnitVec; 4]; 2],
    angles: [f64; 4],
    lens: [f64; 4],
}

fn chir_index(c: Chirality) -> usize {
    match c {
        Chirality::Plus => 0,
        Chirality::Minus => 1,
    }
}

/// Tangent directions `(start, end)` of the interior sector at corner `k`.
fn sector_rays(pos: &[UnitVec; 4], k: usize, c: Chirality) -> (UnitVec, UnitVec, usize, usize) {
    let p = &pos[k];
    let (prev, next) = ((k + 3) % 4, (k + 1) % 4);
    let tp = tangent_towards(p, &pos[prev]);
    let tn = tangent_towards(p, &pos[next]);
    match c {
        Chirality::Plus => (tp, tn, prev, next),
        Chirality::Minus => (tn, tp, next, prev),
    }
}

fn det3(a: &UnitVec, b: &UnitVec, c: &UnitVec) -> f64 {
    a.cross(b).dot(c)
}

/// Whether `x` lies in the closed convex tile, away from its corners.
fn strictly_covers(pos: &[UnitVec; 4], c: Chirality, x: &UnitVec) -> bool {
    if pos.iter().any(|p| (p - x).norm() < SAME_POINT) {
        return false;
    }
    // Plus tiles run clockwise from outside, so the interior is on the right.
    let sign = match c {
        Chirality::Plus => -1.0,
        Chirality::Minus => 1.0,
    };
    (0..4).all(|k| sign * det3(&pos[k], &pos[(k + 1) % 4], x) > -1e-9)
}

/// Whether minor arcs `p1q1` and `p2q2` cross at a point interior to both.
fn arcs_cross(p1: &UnitVec, q1: &UnitVec, p2: &UnitVec, q2: &UnitVec) -> bool {
    let ends = [p1, q1, p2, q2];
    let n1 = p1.cross(q1);
    let n2 = p2.cross(q2);
    let d = n1.cross(&n2);
    if d.norm() < 1e-12 {
        return false;
    }
    let d = d.normalize();
    for x in [d, -d] {
        if ends.iter().any(|e| (*e - x).norm() < SAME_POINT) {
            continue;
        }
        let within = |p: &UnitVec, q: &UnitVec| (arc(p, &x) + arc(&x, q) - arc(p, q)).abs() < 1e-10;
        if within(p1, q1) && within(p2, q2) {
            return true;
        }
    }
    false
}

fn sectors_overlap(a: (f64, f64), b: (f64, f64)) -> bool {
    let d = (b.0 - a.0).rem_euclid(2.0);
    !(d >= a.1 - ANGLE_EPS && d + b.1 <= 2.0 + ANGLE_EPS)
}

struct Search<'a> {
    shape: Shape,
    types: &'a [VertexVector],
    f: usize,
    limit: usize,
    found: Vec<Tiling>,
}

impl Search<'_> {
    fn fits(&self, counts: [u32; 4], closed: bool) -> bool {
        self.types.iter().any(|t| {
            if closed {
                t.0 == counts
            } else {
                (0..4).all(|i| counts[i] <= t.0[i])
            }
        })
    }

    fn lookup(&self, st: &State, x: &UnitVec) -> Option<usize> {
        st.vertices.iter().position(|v| (v.pos - x).norm() < SAME_POINT)
    }

    /// Tries to add the placement; returns the extended state if consistent.
    fn try_place(&self, st: &State, c: Chirality, pos: [UnitVec; 4]) -> Option<State> {
        let mut next = st.clone();
        let mut ids = [0usize; 4];
        for k in 0..4 {
            ids[k] = match self.lookup(st, &pos[k]) {
                Some(id) => id,
                None => {
                    if st.tiles.iter().any(|t| strictly_covers(&t.pos, t.chirality, &pos[k])) {
                        return None;
                    }
                    let reference = tangent_towards(&pos[k], &pos[(k + 1) % 4]);
                    next.vertices.push(VertexState {
                        pos: pos[k],
                        reference,
                        ..Default::default()
                    });
                    next.vertices.len() - 1
                }
            };
        }
        let mut distinct = ids.to_vec();
        distinct.sort_unstable();
        distinct.dedup();
        if distinct.len() < 4 {
            return None;
        }
        for (i, v) in st.vertices.iter().enumerate() {
            if !ids.contains(&i) && strictly_covers(&pos, c, &v.pos) {
                return None;
            }
        }
        for t in &st.tiles {
            for k in 0..4 {
                for j in 0..4 {
                    let (p2, q2) = (&t.pos[j], &t.pos[(j + 1) % 4]);
                    if arcs_cross(&pos[k], &pos[(k + 1) % 4], p2, q2) {
                        return None;
                    }
                }
            }
        }
        for k in 0..4 {
            let (start, end, _, far) = sector_rays(&pos, k, c);
            let v = &mut next.vertices[ids[k]];
            let s = ccw_angle(&v.pos, &v.reference, &start);
            let width = self.shape.angles[k];
            debug_assert!((ccw_angle(&v.pos, &start, &end) - width).abs() < 1e-6);
            if v.sectors.iter().any(|&o| sectors_overlap(o, (s, width))) {
                return None;
            }
            v.sectors.push((s, width));
            v.ray_ends.push(ids[far]);
            v.counts[k] += 1;
            v.covered += width;
            let closed = v.covered > 2.0 - 1e-6;
            if v.covered > 2.0 + 1e-6 {
                return None;
            }
            let counts = v.counts;
            if !self.fits(counts, closed) {
                return None;
            }
        }
        next.tiles.push(Placed { chirality: c, ids, pos });
        Some(next)
    }

    fn candidates(&self, st: &State, v: usize, ray: usize, start: f64) -> Vec<State> {
        let vs = &st.vertices[v];
        let (p1, q1) = (vs.pos, st.vertices[ray].pos);
        let len = arc(&p1, &q1);
        let mut out = Vec::new();
        for c in [Chirality::Plus, Chirality::Minus] {
            let canon = &self.shape.corners[chir_index(c)];
            for k in 0..4 {
                if (self.shape.lens[k] - len).abs() > 1e-7 {
                    continue;
                }
                for (at_v, at_w) in [(k, (k + 1) % 4), ((k + 1) % 4, k)] {
                    let m = frame(&p1, &q1) * frame(&canon[at_v], &canon[at_w]).transpose();
                    let pos = canon.map(|x| m * x);
                    let (s_dir, _, _, _) = sector_rays(&pos, at_v, c);
                    let s = ccw_angle(&vs.pos, &vs.reference, &s_dir);
                    let diff = (s - start).rem_euclid(2.0);
                    if diff.min(2.0 - diff) > 1e-6 {
                        continue;
                    }
                    if let Some(next) = self.try_place(st, c, pos) {
                        out.push(next);
                    }
                }
            }
        }
        out
    }

    fn run(&mut self, st: State) {
        if self.found.len() >= self.limit {
            return;
        }
        let open = st
            .vertices
            .iter()
            .enumerate()
            .filter(|(_, v)| v.covered < 2.0 - 1e-6)
            .max_by(|a, b| a.1.covered.total_cmp(&b.1.covered));
        let Some((v, vs)) = open else {
            if st.tiles.len() == self.f {
                let tiles = st
                    .tiles
                    .iter()
                    .enumerate()
                    .map(|(i, t)| Tile::new(i, t.chirality, t.ids))
                    .collect();
                if let Ok(t) = Tiling::from_tiles(tiles) {
                    self.found.push(t);
                }
            }
            return;
        };
        if st.tiles.len() >= self.f {
            return;
        }
        // First sector whose counterclockwise ray is not the start of another.
        let mut free = None;
        for (i, &(s, w)) in vs.sectors.iter().enumerate() {
            let end = (s + w).rem_euclid(2.0);
            let taken = vs.sectors.iter().any(|&(s2, _)| {
                let d = (s2 - end).rem_euclid(2.0);
                d.min(2.0 - d) < 1e-6
            });
            if !taken {
                free = Some((vs.ray_ends[i], end));
                break;
            }
        }
        let Some((ray, start)) = free else { return };
        for next in self.candidates(&st, v, ray, start) {
            self.run(next);
        }
    }
}

/// Up to `limit` edge-to-edge tilings by copies of `q` whose vertices all have
/// one of the given types. The first tile is the canonical Plus copy, so
/// mirror images and rotations of one tiling may both appear.
pub fn search_tilings(q: &Quadrilateral, types: &[VertexVector], limit: usize) -> Result<Vec<Tiling>> {
    let mut corners = [[UnitVec::zeros(); 4]; 2];
    for c in [Chirality::Plus, Chirality::Minus] {
        let (pos, closure) = walk(q, c);
        if closure > CLOSURE_FAIL {
            return Err(Error::InconsistentQuadrilateral { closure });
        }
        corners[chir_index(c)] = pos;
    }
    let shape = Shape {
        corners,
        angles: q.angles.as_array(),
        lens: [q.edges.a, q.edges.a, q.edges.a, q.edges.b],
    };
    let mut search = Search {
        shape,
        types,
        f: q.f as usize,
        limit,
        found: Vec::new(),
    };
    let empty = State {
        tiles: Vec::new(),
        vertices: Vec::new(),
    };
    let first = search.shape.corners[0];
    if let Some(st) = search.try_place(&empty, Chirality::Plus, first) {
        search.run(st);
    }
    Ok(search.found)
}

