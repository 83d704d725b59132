// Admissible vertices for given angles and the censuses they allow.

use a3b_tiling::tiling::VertexVector;
use a3b_tiling::vertex::{coplanarity_check, enumerate_vertex_types, solve_multiplicities, AngleAssignment};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    // (alpha, 1/2, 1 - alpha, 3/4) with f = 16.
    let alpha = 1.0 - ((2.0 * 2f64.sqrt() + 1.0).sqrt() / 2.0).asin() / std::f64::consts::PI;
    let assign = AngleAssignment::new([alpha, 0.5, 1.0 - alpha, 0.75], 16)?;
    let types = enumerate_vertex_types(&assign, 1e-9, Some(8));
    let names: Vec<String> = types.iter().map(ToString::to_string).collect();
    println!("vertex types: {}", names.join(", "));

    for n in solve_multiplicities(&types, 16) {
        let terms: Vec<String> = n.iter().zip(&types).filter(|(k, _)| **k > 0).map(|(k, v)| format!("{k}{v}")).collect();
        println!("census: {}", terms.join(" + "));
    }

    // With an irrational angle, any three vertex types together with the
    // angle sum identity have a vanishing determinant.
    let v = VertexVector::new;
    println!("coplanar: {}", coplanarity_check(v(2, 1, 0, 0), v(0, 0, 3, 0), v(0, 1, 1, 2))?);
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
