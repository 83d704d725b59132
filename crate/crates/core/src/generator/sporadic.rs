//! The five tilings whose quadrilateral is fixed by its vertex types.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::existence::sporadic_rows;
use crate::tiling::{Chirality, Tile, Tiling};
use crate::trig::{EdgePair, Quadrilateral};

use super::sporadic_data::{self as data, Row};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum SporadicId {
    /// `f = 12`, vertices `6α²β, 2γ³, 6βγδ²`.
    Emt12A2bC3,
    /// `f = 16`, vertices `8α²β, 8βγδ², 2γ⁴`.
    Emt16A2bBcd2,
    /// `f = 16`, vertices `8βδ², 8α²γ², 2β⁴`.
    Emt16Bd2A2c2,
    /// `f = 16`, vertices `8βγ², 6α²δ², 4αβ²δ`.
    F16Bc2A2d2,
    /// `f = 24`, vertices `8β³, 12α²γ², 6δ⁴`; a subdivided octahedron.
    Octa24B3,
}

impl SporadicId {
    pub const ALL: [SporadicId; 5] = [
        SporadicId::Emt12A2bC3,
        SporadicId::Emt16A2bBcd2,
        SporadicId::Emt16Bd2A2c2,
        SporadicId::F16Bc2A2d2,
        SporadicId::Octa24B3,
    ];

    pub fn name(self) -> &'static str {
        match self {
            SporadicId::Emt12A2bC3 => "emt12_a2b_c3",
            SporadicId::Emt16A2bBcd2 => "emt16_a2b_bcd2",
            SporadicId::Emt16Bd2A2c2 => "emt16_bd2_a2c2",
            SporadicId::F16Bc2A2d2 => "f16_bc2_a2d2",
            SporadicId::Octa24B3 => "octa24_b3",
        }
    }

    fn index(self) -> usize {
        self as usize
    }

    fn rows(self) -> &'static [Row] {
        match self {
            SporadicId::Emt12A2bC3 => &data::EMT12_A2B_C3,
            SporadicId::Emt16A2bBcd2 => &data::EMT16_A2B_BCD2,
            SporadicId::Emt16Bd2A2c2 => &data::EMT16_BD2_A2C2,
            SporadicId::F16Bc2A2d2 => &data::F16_BC2_A2D2,
            SporadicId::Octa24B3 => &data::OCTA24_B3,
        }
    }
}

impl fmt::Display for SporadicId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for SporadicId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        SporadicId::ALL
            .into_iter()
            .find(|id| id.name() == s)
            .ok_or_else(|| Error::InvalidParameter(format!("unknown sporadic tiling {s:?}")))
    }
}

/// The quadrilateral at its closed-form values.
pub fn sporadic_quad(id: SporadicId) -> Quadrilateral {
    let row = &sporadic_rows()[id.index()];
    Quadrilateral::new(
        row.family.angles(row.alpha),
        EdgePair { a: row.a, b: row.b },
        row.family.f,
    )
}

/// The quadrilateral and its tilings (one for each of the five).
pub fn sporadic(id: SporadicId) -> Result<(Quadrilateral, Vec<Tiling>)> {
    let tiles = id
        .rows()
        .iter()
        .enumerate()
        .map(|(i, &(c, corners))| {
            let chirality = if c == '+' { Chirality::Plus } else { Chirality::Minus };
            Tile::new(i, chirality, corners)
        })
        .collect();
    Ok((sporadic_quad(id), vec![Tiling::from_tiles(tiles)?]))
}
