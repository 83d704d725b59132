//! Coordinates for tilings on the unit sphere and mesh export.

mod obj;
mod realize;
pub mod sphere;

pub use obj::export_obj;
pub use realize::{
    canonical_tile, default_seed, emt_coordinates, procrustes, realize, realize_by_propagation,
    tile_fit_residual, walk, Alignment, Mesh, Placement, CLOSURE_FAIL, PROPAGATION_TOL,
};
pub use sphere::UnitVec;
