//! Canonical JSON for a tiling, its quadrilateral and an optional mesh.
//!
//! Keys are sorted, floats use the shortest representation that reads back
//! exactly, and the text ends with a newline, so equal inputs give
//! byte-identical files.

use std::collections::BTreeMap;

use nalgebra::Vector3;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::geometry::{Mesh, Placement};
use crate::tiling::{census_string, vertex_census, Chirality, Tile, Tiling, VertexVector};
use crate::trig::{AngleQuad, EdgePair, Quadrilateral};

// Field order is alphabetical throughout: serde writes fields in declaration order.

#[derive(Serialize, Deserialize)]
struct Angles {
    alpha: f64,
    beta: f64,
    delta: f64,
    gamma: f64,
}

#[derive(Serialize, Deserialize)]
struct Edges {
    a: f64,
    b: f64,
}

#[derive(Serialize, Deserialize)]
struct TileRec {
    chirality: String,
    corners: [usize; 4],
    id: usize,
}

#[derive(Serialize, Deserialize)]
struct VertexRec {
    id: usize,
    vector: [u32; 4],
}

#[derive(Serialize, Deserialize)]
struct MeshRec {
    discrepancy: f64,
    positions: BTreeMap<String, [f64; 3]>,
}

#[derive(Serialize, Deserialize)]
struct Doc {
    angles: Angles,
    /// Informational; recomputed on read.
    #[serde(default)]
    census: BTreeMap<String, usize>,
    edges: Edges,
    f: u32,
    mesh: Option<MeshRec>,
    tiles: Vec<TileRec>,
    #[serde(rename = "type")]
    kind: String,
    vertices: Vec<VertexRec>,
}

/// A parsed document.
#[derive(Debug, Clone)]
pub struct Document {
    pub quad: Quadrilateral,
    pub tiling: Tiling,
    pub mesh: Option<Mesh>,
}

pub fn export_json(t: &Tiling, q: &Quadrilateral, mesh: Option<&Mesh>) -> String {
    let census = vertex_census(t)
        .into_iter()
        .map(|(v, n)| (v.to_string(), n))
        .collect();
    let doc = Doc {
        angles: Angles {
            alpha: q.angles.alpha,
            beta: q.angles.beta,
            delta: q.angles.delta,
            gamma: q.angles.gamma,
        },
        census,
        edges: Edges {
            a: q.edges.a,
            b: q.edges.b,
        },
        f: q.f,
        mesh: mesh.map(|m| MeshRec {
            discrepancy: m.discrepancy,
            positions: m
                .positions
                .iter()
                .map(|(id, p)| (id.to_string(), [p.x, p.y, p.z]))
                .collect(),
        }),
        tiles: t
            .tiles()
            .iter()
            .map(|tile| TileRec {
                chirality: tile.chirality.sign().to_string(),
                corners: tile.corners,
                id: tile.id,
            })
            .collect(),
        kind: "a3b".to_string(),
        vertices: t
            .vertices()
            .iter()
            .map(|v| VertexRec {
                id: v.id,
                vector: v.vector.0,
            })
            .collect(),
    };
    let mut s = serde_json::to_string_pretty(&doc).expect("plain data serializes");
    s.push('\n');
    s
}

fn chirality(s: &str) -> Result<Chirality> {
    match s {
        "+" => Ok(Chirality::Plus),
        "-" | "\u{2212}" => Ok(Chirality::Minus),
        _ => Err(Error::Format(format!("chirality {s:?} is not + or -"))),
    }
}

pub fn parse_json(text: &str) -> Result<Document> {
    let doc: Doc = serde_json::from_str(text).map_err(|e| Error::Format(e.to_string()))?;
    if doc.kind != "a3b" {
        return Err(Error::Format(format!("type {:?} is not a3b", doc.kind)));
    }
    let quad = Quadrilateral::new(
        AngleQuad::new(doc.angles.alpha, doc.angles.beta, doc.angles.gamma, doc.angles.delta),
        EdgePair {
            a: doc.edges.a,
            b: doc.edges.b,
        },
        doc.f,
    );
    let tiles = doc
        .tiles
        .iter()
        .map(|r| Ok(Tile::new(r.id, chirality(&r.chirality)?, r.corners)))
        .collect::<Result<Vec<_>>>()?;
    let mut declared = vec![None; doc.vertices.len()];
    for v in &doc.vertices {
        let slot = declared
            .get_mut(v.id)
            .ok_or_else(|| Error::Format(format!("vertex id {} out of range", v.id)))?;
        if slot.replace(VertexVector(v.vector)).is_some() {
            return Err(Error::Format(format!("vertex id {} repeated", v.id)));
        }
    }
    let declared = declared.into_iter().map(|v| v.expect("all ids filled")).collect();
    let tiling = Tiling::with_vertex_vectors(tiles, declared)?;
    let mesh = doc.mesh.map(|m| mesh_from(&m, &tiling, &quad)).transpose()?;
    Ok(Document { quad, tiling, mesh })
}

fn mesh_from(m: &MeshRec, t: &Tiling, q: &Quadrilateral) -> Result<Mesh> {
    let mut positions = BTreeMap::new();
    for (k, p) in &m.positions {
        let id: usize = k
            .parse()
            .map_err(|_| Error::Format(format!("position key {k:?} is not a vertex id")))?;
        positions.insert(id, Vector3::new(p[0], p[1], p[2]));
    }
    let placements = t
        .tiles()
        .iter()
        .map(|tile| {
            let corners = tile
                .corners
                .iter()
                .map(|c| {
                    positions
                        .get(c)
                        .copied()
                        .ok_or_else(|| Error::Format(format!("no position for vertex {c}")))
                })
                .collect::<Result<Vec<_>>>()?;
            Ok(Placement {
                tile: tile.id,
                corners: [corners[0], corners[1], corners[2], corners[3]],
                chirality: tile.chirality,
            })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(Mesh {
        positions,
        placements,
        edges: q.edges,
        discrepancy: m.discrepancy,
    })
}

/// The census as one line, for summaries.
pub fn census_line(t: &Tiling) -> String {
    census_string(&vertex_census(t))
}
