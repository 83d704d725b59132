// Exact vertex angle sums from recognised rational angle combinations.

use a3b_tiling::exact::{AngleBook, VertexSum};
use a3b_tiling::generator::flip_quad;

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    // f = 18, m = 6: alpha is irrational but alpha + delta = 4/3.
    let q = flip_quad(18, 6)?;
    let book = AngleBook::recognize(&q);
    println!("independent exact relations: {}", book.rank());
    for n in [[1, 0, 3, 1], [0, 3, 0, 0], [2, 0, 0, 0]] {
        match book.vertex_sum(n) {
            VertexSum::Exact(v) => println!("{n:?}: exactly {v}"),
            VertexSum::Approx(x) => println!("{n:?}: approximately {x:.15}"),
        }
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
