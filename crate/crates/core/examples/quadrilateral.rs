// The earth map tile for a given `(f, beta)`: angles, edges and the
// trigonometric identities it satisfies.

use a3b_tiling::family::{emt_quad, quad_predicates, FamilyParams};
use a3b_tiling::trig::check_quad;

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let (lo, hi) = FamilyParams::beta_interval(10);
    println!("f = 10 admits beta in ({lo:.4}, {hi:.4})");

    let q = emt_quad(10, 0.7)?;
    let a = q.angles;
    println!(
        "alpha={:.6} beta={:.6} gamma={:.6} delta={:.6}  a={:.6} b={:.6}",
        a.alpha, a.beta, a.gamma, a.delta, q.edges.a, q.edges.b
    );

    let report = check_quad(&q, 1e-9);
    println!(
        "angle sum residual {:.1e}, worst trig residual {:.1e}",
        report.angle_sum,
        report.max_trig()
    );
    assert!(report.passed);
    assert!(quad_predicates(&q).consistent());

    // 1 - 2/f turns the tile into a rhombus and is rejected.
    assert!(emt_quad(10, 0.8).is_err());
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
