//! Combinatorial tilings by a³b tiles and their validator.
//!
//! A tile lists the vertex ids at its corners in the fixed order
//! `alpha, beta, gamma, delta`; side `k` joins corner `k` to corner `k + 1`,
//! so the side labels are `a, a, a, b`. A [`Chirality::Plus`] tile runs
//! `alpha -> beta -> gamma -> delta` clockwise when seen from outside the
//! sphere, a [`Chirality::Minus`] tile is its mirror image.

use std::collections::{BTreeMap, HashMap};
use std::fmt;

use num_rational::Ratio;

use crate::error::{Error, Result};
use crate::exact::AngleBook;
use crate::trig::Quadrilateral;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Corner {
    Alpha,
    Beta,
    Gamma,
    Delta,
}

impl Corner {
    pub const ALL: [Corner; 4] = [Corner::Alpha, Corner::Beta, Corner::Gamma, Corner::Delta];

    pub fn index(self) -> usize {
        self as usize
    }

    pub fn from_index(i: usize) -> Corner {
        Self::ALL[i % 4]
    }

    pub fn symbol(self) -> char {
        ['α', 'β', 'γ', 'δ'][self.index()]
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum EdgeLabel {
    A,
    B,
}

/// Side labels every tile must carry.
pub const SIDE_PATTERN: [EdgeLabel; 4] = [EdgeLabel::A, EdgeLabel::A, EdgeLabel::A, EdgeLabel::B];

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Chirality {
    Plus,
    Minus,
}

impl Chirality {
    pub fn flipped(self) -> Self {
        match self {
            Chirality::Plus => Chirality::Minus,
            Chirality::Minus => Chirality::Plus,
        }
    }

    pub fn sign(self) -> &'static str {
        match self {
            Chirality::Plus => "+",
            Chirality::Minus => "-",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Tile {
    pub id: usize,
    pub chirality: Chirality,
    /// Vertex ids at the alpha, beta, gamma, delta corners.
    pub corners: [usize; 4],
    pub sides: [EdgeLabel; 4],
}

impl Tile {
    pub fn new(id: usize, chirality: Chirality, corners: [usize; 4]) -> Self {
        Self {
            id,
            chirality,
            corners,
            sides: SIDE_PATTERN,
        }
    }

    /// Endpoints of side `k`, from corner `k` to corner `k + 1`.
    pub fn side(&self, k: usize) -> (usize, usize) {
        (self.corners[k % 4], self.corners[(k + 1) % 4])
    }

    /// Side `k` as traversed in the tile's clockwise boundary orientation.
    fn directed_side(&self, k: usize) -> (usize, usize) {
        let (u, v) = self.side(k);
        match self.chirality {
            Chirality::Plus => (u, v),
            Chirality::Minus => (v, u),
        }
    }
}

/// Counts `(n1, n2, n3, n4)` of alpha, beta, gamma, delta at a vertex.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct VertexVector(pub [u32; 4]);

impl VertexVector {
    pub fn new(n1: u32, n2: u32, n3: u32, n4: u32) -> Self {
        Self([n1, n2, n3, n4])
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn parity_ok(&self) -> bool {
        (self.0[0] + self.0[3]) % 2 == 0
    }

    pub fn has_all_four(&self) -> bool {
        self.0.iter().all(|&n| n > 0)
    }
}

impl fmt::Display for VertexVector {
    /// Monomial notation, e.g. `αβδ` or `α^2γ^2`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (c, &n) in Corner::ALL.iter().zip(&self.0) {
            match n {
                0 => {}
                1 => write!(f, "{}", c.symbol())?,
                _ => write!(f, "{}^{}", c.symbol(), n)?,
            }
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Vertex {
    pub id: usize,
    /// Declared vertex type; the validator checks it against the incidences.
    pub vector: VertexVector,
    /// `(tile id, corner)` pairs, in cyclic order when the orientation allows.
    pub incidences: Vec<(usize, Corner)>,
}

#[derive(Debug, Clone, PartialEq)]
pub struct Tiling {
    tiles: Vec<Tile>,
    vertices: Vec<Vertex>,
}

impl Tiling {
    /// Builds a tiling whose vertex ids are `0..v`, deriving vertex types.
    pub fn from_tiles(tiles: Vec<Tile>) -> Result<Self> {
        let v = tiles
            .iter()
            .flat_map(|t| t.corners)
            .max()
            .map_or(0, |m| m + 1);
        Self::assemble(tiles, None, v)
    }

    /// Builds a tiling with explicitly declared vertex types, as read back from
    /// serialized data. Mismatches are left for the validator to report.
    pub fn with_vertex_vectors(tiles: Vec<Tile>, declared: Vec<VertexVector>) -> Result<Self> {
        let v = declared.len();
        Self::assemble(tiles, Some(declared), v)
    }

    fn assemble(tiles: Vec<Tile>, declared: Option<Vec<VertexVector>>, v: usize) -> Result<Self> {
        for (i, t) in tiles.iter().enumerate() {
            if t.id != i {
                return Err(Error::Format(format!("tile at position {i} has id {}", t.id)));
            }
            if let Some(&c) = t.corners.iter().find(|&&c| c >= v) {
                return Err(Error::Format(format!("tile {i} refers to vertex {c} of {v}")));
            }
        }
        let mut incidences = vec![Vec::new(); v];
        for t in &tiles {
            for (k, &c) in t.corners.iter().enumerate() {
                incidences[c].push((t.id, Corner::from_index(k)));
            }
        }
        let vertices = incidences
            .into_iter()
            .enumerate()
            .map(|(id, inc)| {
                let inc = cyclic_order(&tiles, &inc).unwrap_or(inc);
                let vector = match &declared {
                    Some(d) => d[id],
                    None => vector_of(&inc),
                };
                Vertex {
                    id,
                    vector,
                    incidences: inc,
                }
            })
            .collect();
        Ok(Self { tiles, vertices })
    }

    pub fn tiles(&self) -> &[Tile] {
        &self.tiles
    }

    pub fn vertices(&self) -> &[Vertex] {
        &self.vertices
    }

    pub fn f(&self) -> usize {
        self.tiles.len()
    }

    /// Undirected edges as `(u, v)` with `u < v`, each listing the tile sides on it.
    pub fn edges(&self) -> BTreeMap<(usize, usize), Vec<(usize, usize)>> {
        let mut edges: BTreeMap<_, Vec<_>> = BTreeMap::new();
        for t in &self.tiles {
            for k in 0..4 {
                let (u, v) = t.side(k);
                edges.entry((u.min(v), u.max(v))).or_default().push((t.id, k));
            }
        }
        edges
    }

    /// Tiles sharing a side with `tile`, as `(own side, neighbour, neighbour side)`.
    pub fn neighbours(&self, tile: usize) -> Vec<(usize, usize, usize)> {
        let edges = self.edges();
        (0..4)
            .filter_map(|k| {
                let (u, v) = self.tiles[tile].side(k);
                edges[&(u.min(v), u.max(v))]
                    .iter()
                    .find(|&&(t, _)| t != tile)
                    .map(|&(t, s)| (k, t, s))
            })
            .collect()
    }

    /// Whether a relabelling of tiles and vertices, possibly combined with a
    /// reflection that reverses every chirality, turns `self` into `other`.
    /// Assumes both tilings are connected.
    pub fn is_isomorphic(&self, other: &Tiling) -> bool {
        if self.f() != other.f() || self.vertices.len() != other.vertices.len() || self.f() == 0 {
            return false;
        }
        let t0 = &self.tiles[0];
        other.tiles.iter().any(|start| {
            let mirror = start.chirality != t0.chirality;
            self.map_from(other, start.id, mirror)
        })
    }

    fn map_from(&self, other: &Tiling, start: usize, mirror: bool) -> bool {
        let want = |c: Chirality| if mirror { c.flipped() } else { c };
        let mut vmap = vec![None; self.vertices.len()];
        let mut used = vec![false; other.vertices.len()];
        let mut tmap = vec![None; self.f()];
        let mut taken = vec![false; other.f()];
        let mut assign = |src: &Tile, dst: &Tile, vmap: &mut Vec<Option<usize>>| -> bool {
            for k in 0..4 {
                let (a, b) = (src.corners[k], dst.corners[k]);
                match vmap[a] {
                    Some(x) if x != b => return false,
                    Some(_) => {}
                    None if used[b] => return false,
                    None => {
                        vmap[a] = Some(b);
                        used[b] = true;
                    }
                }
            }
            true
        };
        tmap[0] = Some(start);
        taken[start] = true;
        if !assign(&self.tiles[0], &other.tiles[start], &mut vmap) {
            return false;
        }
        let mut progress = true;
        while progress {
            progress = false;
            for src in &self.tiles {
                if tmap[src.id].is_some() {
                    continue;
                }
                let Some(k) = (0..4).find(|&k| {
                    let (u, w) = src.side(k);
                    vmap[u].is_some() && vmap[w].is_some()
                }) else {
                    continue;
                };
                let (u, w) = src.side(k);
                let (mu, mw) = (vmap[u], vmap[w]);
                let Some(dst) = other.tiles.iter().find(|d| {
                    !taken[d.id]
                        && d.chirality == want(src.chirality)
                        && Some(d.corners[k]) == mu
                        && Some(d.corners[(k + 1) % 4]) == mw
                }) else {
                    return false;
                };
                if !assign(src, dst, &mut vmap) {
                    return false;
                }
                tmap[src.id] = Some(dst.id);
                taken[dst.id] = true;
                progress = true;
            }
        }
        tmap.iter().all(Option::is_some)
    }

    /// A copy with one field damaged, for exercising the validator.
    pub fn corrupted(&self, c: Corruption) -> Tiling {
        let mut t = self.clone();
        match c {
            Corruption::FlipSideLabel { tile, side } => {
                let s = &mut t.tiles[tile].sides[side];
                *s = match s {
                    EdgeLabel::A => EdgeLabel::B,
                    EdgeLabel::B => EdgeLabel::A,
                };
            }
            Corruption::FlipChirality { tile } => {
                t.tiles[tile].chirality = t.tiles[tile].chirality.flipped();
            }
            Corruption::MoveCorner {
                tile,
                corner,
                vertex,
            } => {
                let old = t.tiles[tile].corners[corner.index()];
                t.tiles[tile].corners[corner.index()] = vertex;
                t.vertices[old].incidences.retain(|&(ti, k)| (ti, k) != (tile, corner));
                t.vertices[vertex].incidences.push((tile, corner));
            }
            Corruption::BumpVertexVector {
                vertex,
                corner,
                delta,
            } => {
                let n = &mut t.vertices[vertex].vector.0[corner.index()];
                *n = n.saturating_add_signed(delta);
            }
        }
        t
    }
}

/// Single-field damage applied by [`Tiling::corrupted`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Corruption {
    FlipSideLabel { tile: usize, side: usize },
    FlipChirality { tile: usize },
    MoveCorner { tile: usize, corner: Corner, vertex: usize },
    BumpVertexVector { vertex: usize, corner: Corner, delta: i32 },
}

fn vector_of(inc: &[(usize, Corner)]) -> VertexVector {
    let mut n = [0u32; 4];
    for &(_, c) in inc {
        n[c.index()] += 1;
    }
    VertexVector(n)
}

/// Orders the corners around a vertex by following the oriented tile
/// boundaries. Returns `None` unless they close up into a single cycle.
fn cyclic_order(tiles: &[Tile], inc: &[(usize, Corner)]) -> Option<Vec<(usize, Corner)>> {
    // Each corner leaves the vertex along one side and enters along another; the next
    // corner around it is the one entering from where this one leaves.
    let mut by_prev = HashMap::new();
    let mut next_of = Vec::with_capacity(inc.len());
    for (i, &(t, c)) in inc.iter().enumerate() {
        let tile = &tiles[t];
        let k = c.index();
        let (prev, next) = match tile.chirality {
            Chirality::Plus => (tile.corners[(k + 3) % 4], tile.corners[(k + 1) % 4]),
            Chirality::Minus => (tile.corners[(k + 1) % 4], tile.corners[(k + 3) % 4]),
        };
        if by_prev.insert(prev, i).is_some() {
            return None;
        }
        next_of.push(next);
    }
    let mut order = Vec::with_capacity(inc.len());
    let mut i = 0;
    for _ in 0..inc.len() {
        order.push(inc[i]);
        i = *by_prev.get(&next_of[i])?;
    }
    (i == 0 && !inc.is_empty()).then_some(order)
}

// ---------------------------------------------------------------------------
// Validation

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Check {
    EdgeMatching,
    TilePattern,
    VertexAngleSum,
    AngleCount,
    Parity,
    Euler,
    CountingIdentities,
    NoVertexWithAllFour,
}

impl Check {
    pub const ALL: [Check; 8] = [
        Check::EdgeMatching,
        Check::TilePattern,
        Check::VertexAngleSum,
        Check::AngleCount,
        Check::Parity,
        Check::Euler,
        Check::CountingIdentities,
        Check::NoVertexWithAllFour,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Check::EdgeMatching => "edge matching",
            Check::TilePattern => "tile pattern",
            Check::VertexAngleSum => "vertex angle sum",
            Check::AngleCount => "angle count",
            Check::Parity => "parity",
            Check::Euler => "euler",
            Check::CountingIdentities => "counting identities",
            Check::NoVertexWithAllFour => "no vertex with all four angles",
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct CheckResult {
    pub check: Check,
    pub passed: bool,
    /// First few problems found, empty on success.
    pub problems: Vec<String>,
}

#[derive(Debug, Clone, PartialEq)]
pub struct ValidationReport {
    pub checks: Vec<CheckResult>,
    /// Vertices whose angle sum was decided in exact arithmetic.
    pub exact_vertices: usize,
}

impl ValidationReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn failed(&self) -> Vec<Check> {
        self.checks.iter().filter(|c| !c.passed).map(|c| c.check).collect()
    }

    pub fn get(&self, check: Check) -> &CheckResult {
        self.checks.iter().find(|c| c.check == check).expect("all checks run")
    }
}

impl fmt::Display for ValidationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in &self.checks {
            write!(f, "{:<32} {}", c.check.name(), if c.passed { "ok" } else { "FAIL" })?;
            if let Some(p) = c.problems.first() {
                write!(f, "  ({p})")?;
            }
            writeln!(f)?;
        }
        Ok(())
    }
}

const MAX_PROBLEMS: usize = 5;

#[derive(Default)]
struct Problems(Vec<String>);

impl Problems {
    fn push(&mut self, s: impl FnOnce() -> String) {
        if self.0.len() < MAX_PROBLEMS {
            self.0.push(s());
        }
        // Keep counting silently past the cap by recording a sentinel once.
        else if self.0.len() == MAX_PROBLEMS {
            self.0.push("...".into());
        }
    }

    fn finish(self, check: Check) -> CheckResult {
        CheckResult {
            check,
            passed: self.0.is_empty(),
            problems: self.0,
        }
    }
}

pub fn validate(t: &Tiling, q: &Quadrilateral, tol: f64) -> ValidationReport {
    let derived: Vec<VertexVector> = t.vertices.iter().map(|v| vector_of(&v.incidences)).collect();
    let edges = t.edges();
    let mut checks = Vec::with_capacity(8);

    // (i) edge-to-edge: every side shared by exactly two tiles with equal
    // labels, and the corners at each vertex closing up into one cycle.
    let mut p = Problems::default();
    for (&(u, v), halves) in &edges {
        if halves.len() != 2 {
            p.push(|| format!("edge {u}-{v} has {} sides", halves.len()));
            continue;
        }
        let [(t0, s0), (t1, s1)] = [halves[0], halves[1]];
        if t.tiles[t0].sides[s0] != t.tiles[t1].sides[s1] {
            p.push(|| format!("edge {u}-{v}: labels differ between tiles {t0} and {t1}"));
        }
    }
    for v in &t.vertices {
        if v.incidences.len() < 3 {
            p.push(|| format!("vertex {} has degree {}", v.id, v.incidences.len()));
        } else if cyclic_order(&t.tiles, &v.incidences).is_none() {
            p.push(|| format!("corners at vertex {} do not form one cycle", v.id));
        }
    }
    checks.push(p.finish(Check::EdgeMatching));

    // (ii) tile pattern: side labels, distinct corners, declared vertex types
    // and chirality consistent with a single orientation of the sphere.
    let mut p = Problems::default();
    for tile in &t.tiles {
        if tile.sides != SIDE_PATTERN {
            p.push(|| format!("tile {} has side labels {:?}", tile.id, tile.sides));
        }
        let mut c = tile.corners;
        c.sort_unstable();
        if c.windows(2).any(|w| w[0] == w[1]) {
            p.push(|| format!("tile {} repeats a vertex", tile.id));
        }
    }
    for (v, d) in t.vertices.iter().zip(&derived) {
        if v.vector != *d {
            p.push(|| format!("vertex {} declared {} but has {}", v.id, v.vector, d));
        }
    }
    let mut directed = HashMap::new();
    for tile in &t.tiles {
        for k in 0..4 {
            if let Some(other) = directed.insert(tile.directed_side(k), tile.id) {
                p.push(|| format!("tiles {other} and {} run along a shared side in the same direction", tile.id));
            }
        }
    }
    checks.push(p.finish(Check::TilePattern));

    // (iii) angle sum 2 at every vertex.
    let book = AngleBook::recognize(q);
    let two = Ratio::from_integer(2);
    let mut p = Problems::default();
    let mut exact_vertices = 0;
    for v in &t.vertices {
        let s = book.vertex_sum(v.vector.0);
        exact_vertices += s.is_exact() as usize;
        if !s.equals(two, tol) {
            p.push(|| format!("vertex {} ({}) sums to {:.12}", v.id, v.vector, s.value()));
        }
    }
    checks.push(p.finish(Check::VertexAngleSum));

    // (iv) each angle appears f times.
    let f = t.f() as u32;
    let mut p = Problems::default();
    if f != q.f {
        p.push(|| format!("{f} tiles for a quadrilateral with f = {}", q.f));
    }
    let mut totals = [0u32; 4];
    for v in &t.vertices {
        for i in 0..4 {
            totals[i] += v.vector.0[i];
        }
    }
    if totals != [f; 4] {
        p.push(|| format!("angle totals {totals:?}, expected {f} each"));
    }
    checks.push(p.finish(Check::AngleCount));

    // (v) parity lemma.
    let mut p = Problems::default();
    for v in t.vertices.iter().filter(|v| !v.vector.parity_ok()) {
        p.push(|| format!("vertex {} ({}) has odd alpha + delta", v.id, v.vector));
    }
    checks.push(p.finish(Check::Parity));

    // (vi) Euler.
    let (nv, ne, nf) = (t.vertices.len() as i64, edges.len() as i64, f as i64);
    let mut p = Problems::default();
    if nv - ne + nf != 2 {
        p.push(|| format!("v - e + f = {nv} - {ne} + {nf} = {}", nv - ne + nf));
    }
    checks.push(p.finish(Check::Euler));

    // (vii) f = 6 + sum (k-3) v_k and v_3 = 8 + sum (k-4) v_k over k >= 5.
    let mut p = Problems::default();
    let degrees = t.vertices.iter().map(|v| v.vector.degree() as i64);
    let excess3: i64 = degrees.clone().map(|k| k - 3).sum();
    let v3 = degrees.clone().filter(|&k| k == 3).count() as i64;
    let excess4: i64 = degrees.filter(|&k| k >= 5).map(|k| k - 4).sum();
    if nf != 6 + excess3 {
        p.push(|| format!("f = {nf} but 6 + sum (k-3) v_k = {}", 6 + excess3));
    }
    if v3 != 8 + excess4 {
        p.push(|| format!("v_3 = {v3} but 8 + sum (k-4) v_k = {}", 8 + excess4));
    }
    checks.push(p.finish(Check::CountingIdentities));

    // (viii) no vertex holds all four angles.
    let mut p = Problems::default();
    for v in t.vertices.iter().filter(|v| v.vector.has_all_four()) {
        p.push(|| format!("vertex {} is {}", v.id, v.vector));
    }
    checks.push(p.finish(Check::NoVertexWithAllFour));

    ValidationReport {
        checks,
        exact_vertices,
    }
}

/// Vertex types with multiplicities, sorted by vector.
pub fn vertex_census(t: &Tiling) -> Vec<(VertexVector, usize)> {
    let mut census = BTreeMap::new();
    for v in &t.vertices {
        *census.entry(v.vector).or_insert(0) += 1;
    }
    census.into_iter().collect()
}

/// `12αβδ, 2γ^6`-style rendering of a census, largest multiplicity first.
pub fn census_string(census: &[(VertexVector, usize)]) -> String {
    let mut items = census.to_vec();
    items.sort_by(|a, b| b.1.cmp(&a.1).then(a.0.cmp(&b.0)));
    items
        .iter()
        .map(|(v, n)| format!("{n}{v}"))
        .collect::<Vec<_>>()
        .join(",")
}

/// `f (alpha + beta + gamma + delta - 2)`, the area of the sphere over pi.
pub fn total_excess(q: &Quadrilateral) -> f64 {
    q.f as f64 * (q.angles.sum() - 2.0)
}
