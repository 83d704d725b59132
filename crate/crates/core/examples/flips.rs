// Flip modifications of the earth map for f = 14, m = 5.

use a3b_tiling::family::FlipCase;
use a3b_tiling::generator::{apply_flips, count_flip_tilings, enumerate_flip_tilings, flip_quad};
use a3b_tiling::geometry::realize;
use a3b_tiling::tiling::{census_string, validate, vertex_census};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let (f, m) = (14, 5);
    let case = FlipCase::new(f, m)?;
    println!("{case:?}, beta = {:.6}", case.beta());

    let q = flip_quad(f, m)?;
    let specs = enumerate_flip_tilings(f, m)?;
    for spec in &specs {
        let t = apply_flips(f, m, &spec.gaps)?;
        assert!(validate(&t, &q, 1e-9).passed());
        let mesh = realize(&t, &q)?;
        println!(
            "gaps {:?}: {}  (discrepancy {:.1e})",
            spec.gaps,
            census_string(&vertex_census(&t)),
            mesh.discrepancy
        );
    }
    let counts: Vec<u64> = (1..=case.max_flips())
        .map(|n| count_flip_tilings(f, m, n))
        .collect::<Result<_, _>>()?;
    assert_eq!(counts, [1, 2, 1]);
    assert_eq!(specs.len(), 4);
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
