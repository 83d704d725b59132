//! Wavefront OBJ export of tile boundaries as sampled great-circle polylines.

use std::fmt::Write;

use super::realize::Mesh;
use super::sphere::sample_edge;

/// One `g tile_<id>` group per tile, holding its four sides (in corner order
/// alpha, beta, gamma, delta) as `l` polylines of `segments_per_arc + 1` points.
pub fn export_obj(mesh: &Mesh, segments_per_arc: usize) -> String {
    let segments = segments_per_arc.max(1);
    let lens = [mesh.edges.a, mesh.edges.a, mesh.edges.a, mesh.edges.b];
    let mut out = String::new();
    let mut next = 1usize;
    for p in &mesh.placements {
        let _ = writeln!(out, "g tile_{}", p.tile);
        for k in 0..4 {
            let pts = sample_edge(&p.corners[k], &p.corners[(k + 1) % 4], lens[k], segments);
            for v in &pts {
                let _ = writeln!(out, "v {:.12} {:.12} {:.12}", v.x, v.y, v.z);
            }
            let idx: Vec<String> = (next..next + pts.len()).map(|i| i.to_string()).collect();
            let _ = writeln!(out, "l {}", idx.join(" "));
            next += pts.len();
        }
    }
    out
}
