//! Edge-to-edge tilings of the sphere by congruent a³b quadrilaterals.

pub mod cli;
pub mod error;
pub mod exact;
pub mod existence;
pub mod family;
pub mod generator;
pub mod geometry;
pub mod json;
pub mod tiling;
pub mod trig;
pub mod vertex;

pub use error::{Error, Result};
