// How many a3b quadrilaterals admit flips, split into rational and general ones.

use a3b_tiling::generator::{q1, q_table};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    println!("   f  Q1 Q2 Q3");
    for f in (8..=32).step_by(2) {
        let (a, b, c) = q_table(f)?;
        println!("{f:4} {a:3} {b:2} {c:2}");
    }
    assert_eq!(q_table(18)?, (3, 1, 2));
    assert_eq!(q1(8)?, 1);
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
