//! The 2-layer earth map tiling `T(f αβδ, 2γ^{f/2})`.
//!
//! Vertex ids: the north pole is `0`, the south pole `f + 1`; time zone `i`
//! has an upper meridian point `P_i = 2i + 1` and a lower one `Q_i = 2i + 2`.
//! Zone `i` holds the upper tile `2i` with corners `(Q_i, P_i, N, P_{i+1})` and
//! the lower tile `2i + 1` with corners `(P_{i+1}, Q_{i+1}, S, Q_i)`; the two
//! are related by a half-turn about the midpoint of their shared b edge, so
//! every tile has the same chirality.

use crate::error::Result;
use crate::tiling::{Chirality, Tile, Tiling};
use crate::trig::check_tile_count;

/// Vertex-id layout of the earth map for `f` tiles.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct EarthMap {
    pub f: u32,
}

impl EarthMap {
    pub fn zones(&self) -> usize {
        self.f as usize / 2
    }

    pub fn north(&self) -> usize {
        0
    }

    pub fn south(&self) -> usize {
        self.f as usize + 1
    }

    pub fn p(&self, i: usize) -> usize {
        2 * (i % self.zones()) + 1
    }

    pub fn q(&self, i: usize) -> usize {
        2 * (i % self.zones()) + 2
    }

    pub fn upper(&self, i: usize) -> [usize; 4] {
        [self.q(i), self.p(i), self.north(), self.p(i + 1)]
    }

    pub fn lower(&self, i: usize) -> [usize; 4] {
        [self.p(i + 1), self.q(i + 1), self.south(), self.q(i)]
    }

    pub fn tiles(&self) -> Vec<Tile> {
        (0..self.zones())
            .flat_map(|i| {
                [
                    Tile::new(2 * i, Chirality::Plus, self.upper(i)),
                    Tile::new(2 * i + 1, Chirality::Plus, self.lower(i)),
                ]
            })
            .collect()
    }
}

pub fn build_emt(f: u32) -> Result<Tiling> {
    check_tile_count(f)?;
    Tiling::from_tiles(EarthMap { f }.tiles())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::family::emt_quad;
    use crate::tiling::{validate, vertex_census, VertexVector};

    #[test]
    fn f6_census_and_euler() {
        let t = build_emt(6).unwrap();
        assert_eq!(t.f(), 6);
        assert_eq!(t.vertices().len(), 8);
        assert_eq!(t.edges().len(), 12);
        assert_eq!(
            vertex_census(&t),
            vec![(VertexVector::new(0, 0, 3, 0), 2), (VertexVector::new(1, 1, 0, 1), 6)]
        );
        let r = validate(&t, &emt_quad(6, 0.9).unwrap(), 1e-10);
        assert!(r.passed(), "{r}");
    }

    #[test]
    fn f8_and_f10_census() {
        for f in [8u32, 10] {
            let census = vertex_census(&build_emt(f).unwrap());
            assert_eq!(
                census,
                vec![
                    (VertexVector::new(0, 0, f / 2, 0), 2),
                    (VertexVector::new(1, 1, 0, 1), f as usize)
                ]
            );
        }
    }

    #[test]
    fn odd_f_rejected() {
        assert!(build_emt(5).is_err());
        assert!(build_emt(4).is_err());
    }
}
