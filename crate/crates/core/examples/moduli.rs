// Walk along the a3b curve of the earth map moduli.

use a3b_tiling::family::{b_min, moduli_edge_a, moduli_point_quad, ModuliPoint};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let f = 10;
    let (lo, hi) = ModuliPoint::t_interval(f);
    println!("t,beta,a,b");
    for j in 1..=9 {
        let t = lo + (hi - lo) * j as f64 / 10.0;
        let q = moduli_point_quad(ModuliPoint { f, t })?;
        assert!((q.edges.a - moduli_edge_a(t)).abs() < 1e-9);
        println!("{t:.4},{:.6},{:.6},{:.6}", q.angles.beta, q.edges.a, q.edges.b);
    }
    let (b, beta) = b_min(f)?;
    println!("shortest b = {b:.6} at beta = {beta:.6}");
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
