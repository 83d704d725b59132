// Write a realized tiling as canonical JSON and read it back.

use a3b_tiling::generator::{sporadic, SporadicId};
use a3b_tiling::geometry::realize;
use a3b_tiling::json::{export_json, parse_json};
use a3b_tiling::tiling::validate;

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let (q, tilings) = sporadic(SporadicId::F16Bc2A2d2)?;
    let mesh = realize(&tilings[0], &q)?;
    let text = export_json(&tilings[0], &q, Some(&mesh));
    println!("{} bytes of JSON", text.len());

    let doc = parse_json(&text)?;
    assert!(validate(&doc.tiling, &doc.quad, 1e-9).passed());
    assert_eq!(export_json(&doc.tiling, &doc.quad, doc.mesh.as_ref()), text);
    println!("round trip is byte-identical");
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
