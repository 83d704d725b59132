// Build the earth map tiling, validate it and put it on the sphere.

use a3b_tiling::family::emt_quad;
use a3b_tiling::generator::build_emt;
use a3b_tiling::geometry::{emt_coordinates, export_obj, procrustes, realize};
use a3b_tiling::tiling::{census_string, validate, vertex_census};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let (f, beta) = (8, 0.9);
    let q = emt_quad(f, beta)?;
    let t = build_emt(f)?;
    println!("{} tiles, vertices {}", t.f(), census_string(&vertex_census(&t)));

    let report = validate(&t, &q, 1e-9);
    print!("{report}");
    assert!(report.passed());

    // Propagating tile by tile agrees with the closed-form coordinates.
    let mesh = realize(&t, &q)?;
    let closed = emt_coordinates(f, beta)?;
    let ids: Vec<usize> = closed.positions.keys().copied().collect();
    let from: Vec<_> = ids.iter().map(|i| mesh.positions[i]).collect();
    let to: Vec<_> = ids.iter().map(|i| closed.positions[i]).collect();
    let fit = procrustes(&from, &to, true);
    println!(
        "discrepancy {:.1e}, excess {:.12}, procrustes residual {:.1e}",
        mesh.discrepancy,
        mesh.total_excess(),
        fit.max_residual
    );
    assert!(fit.max_residual < 1e-7);

    let obj = export_obj(&mesh, 8);
    println!("OBJ export: {} lines", obj.lines().count());
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
