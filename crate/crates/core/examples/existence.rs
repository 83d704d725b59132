// Solving for the quadrilateral inside a one-parameter angle family, and
// the quartic that rules out one family for large k.

use a3b_tiling::existence::{alpha_roots, complete_quadrilateral, nonexistence_margin, quartic_case, sporadic_rows};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    for row in sporadic_rows() {
        let roots = alpha_roots(&row.family, 1e-13)?;
        let alpha = roots[0].alpha;
        let q = complete_quadrilateral(row.family.angles(alpha), row.family.f)?;
        println!(
            "{:16} alpha={alpha:.10} a={:.6} b={:.6}  ({:?})",
            row.name, q.edges.a, q.edges.b, roots[0].equation
        );
        assert!((alpha - row.alpha).abs() < 1e-10);
    }

    for k in [4, 5] {
        let alphas: Vec<String> = quartic_case(k)?.alphas().iter().map(|(a, n)| format!("{a:.4}x{n}")).collect();
        println!("k={k}: alpha in {}", alphas.join(", "));
    }
    let worst = (6..=100).map(nonexistence_margin).collect::<Result<Vec<_>, _>>()?;
    println!("smallest margin for 6 <= k <= 100: {:.6}", worst.iter().copied().fold(f64::INFINITY, f64::min));
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
