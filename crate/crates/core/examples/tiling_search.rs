// Search for every tiling by a given quadrilateral.

use a3b_tiling::generator::{search_tilings, sporadic, SporadicId};
use a3b_tiling::tiling::{census_string, vertex_census};
use a3b_tiling::vertex::{enumerate_vertex_types, AngleAssignment};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let (q, known) = sporadic(SporadicId::Emt12A2bC3)?;
    let types = enumerate_vertex_types(&AngleAssignment::from_quad(&q)?, 1e-9, None);
    let found = search_tilings(&q, &types, 10)?;
    for t in &found {
        println!(
            "{}  same as the known tiling: {}",
            census_string(&vertex_census(t)),
            t.is_isomorphic(&known[0])
        );
    }
    assert!(found.iter().all(|t| t.is_isomorphic(&known[0])));
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
