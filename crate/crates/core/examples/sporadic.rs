// The five sporadic tilings, validated and realized.

use a3b_tiling::generator::{sporadic, SporadicId};
use a3b_tiling::geometry::realize;
use a3b_tiling::tiling::{census_string, validate, vertex_census};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    for id in SporadicId::ALL {
        let (q, tilings) = sporadic(id)?;
        for t in &tilings {
            assert!(validate(t, &q, 1e-9).passed());
            let mesh = realize(t, &q)?;
            println!(
                "{:16} f={:2} {:28} discrepancy {:.1e} excess {:.12}",
                id.name(),
                q.f,
                census_string(&vertex_census(t)),
                mesh.discrepancy,
                mesh.total_excess()
            );
        }
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
