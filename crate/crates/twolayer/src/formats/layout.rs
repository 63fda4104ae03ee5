//! JSON layout documents. Coordinates are decimal strings, never floats:
//! straight-line cycle embeddings can stretch far past what a double holds,
//! and the document must round-trip exactly.

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use super::{ParseError, ParsedGraph};
use crate::decompose::{Layer, LayerPartition};
use crate::embed::{BendKind, Drawing, DrawingKind, DrawnEdge, EdgeGeometry};
use crate::geom::Point;
use crate::graph::Graph;
use crate::verify::VerificationReport;

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq)]
pub struct LayoutVerification {
    pub ok: bool,
    pub violations: usize,
    pub max_coordinate: String,
    pub cross_layer_overlaps: usize,
}

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq)]
pub struct LayoutMeta {
    pub algorithm: String,
    pub mode: String,
    pub grid_extent: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub verification: Option<LayoutVerification>,
}

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq)]
pub struct LayoutVertex {
    pub label: String,
    pub x: String,
    pub y: String,
}

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq)]
pub struct LayoutEdge {
    pub source: String,
    pub target: String,
    pub layer: u8,
    pub geometry: String,
    pub temporary: bool,
}

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq)]
pub struct LayoutDocument {
    pub meta: LayoutMeta,
    pub vertices: Vec<LayoutVertex>,
    pub edges: Vec<LayoutEdge>,
}

fn geometry_name(g: &EdgeGeometry) -> &'static str {
    match g {
        EdgeGeometry::Segment => "segment",
        EdgeGeometry::Ortho { kind: BendKind::VH } => "ortho-VH",
        EdgeGeometry::Ortho { kind: BendKind::HV } => "ortho-HV",
    }
}

/// Builds the document for a drawing. `algorithm` names the pipeline that
/// produced it (for example "deg3-straight").
pub fn layout_document(
    drawing: &Drawing,
    g: &Graph,
    labels: &[String],
    algorithm: &str,
    report: Option<&VerificationReport>,
) -> LayoutDocument {
    let vertices = (0..g.vertex_count())
        .map(|v| LayoutVertex {
            label: labels[v].clone(),
            x: drawing.positions[v].x.to_string(),
            y: drawing.positions[v].y.to_string(),
        })
        .collect();
    let edges = drawing
        .edges
        .iter()
        .map(|e| {
            let (u, v) = g.edge(e.id);
            LayoutEdge {
                source: labels[u as usize].clone(),
                target: labels[v as usize].clone(),
                layer: e.layer.index() as u8,
                geometry: geometry_name(&e.geometry).to_string(),
                temporary: false,
            }
        })
        .collect();
    LayoutDocument {
        meta: LayoutMeta {
            algorithm: algorithm.to_string(),
            mode: match drawing.kind {
                DrawingKind::Straight => "straight".to_string(),
                DrawingKind::Orthogonal => "orthogonal".to_string(),
            },
            grid_extent: drawing.extent.to_string(),
            verification: report.map(|r| LayoutVerification {
                ok: r.ok,
                violations: r.violations.len(),
                max_coordinate: r.max_coordinate.to_string(),
                cross_layer_overlaps: r.cross_layer_overlaps,
            }),
        },
        vertices,
        edges,
    }
}

/// Serializes with stable key order and a trailing newline.
pub fn write_layout(doc: &LayoutDocument) -> String {
    let mut s = serde_json::to_string_pretty(doc).expect("layout document serializes");
    s.push('\n');
    s
}

fn parse_bigint(s: &str, what: &str) -> Result<BigInt, ParseError> {
    s.parse().map_err(|_| ParseError::Unsupported(format!(
        "{what} '{s}' is not a decimal integer"
    )))
}

/// Reconstructs the graph, drawing and partition a document describes.
pub fn read_layout(
    text: &str,
) -> Result<(LayoutDocument, ParsedGraph, Drawing, LayerPartition), ParseError> {
    let doc: LayoutDocument =
        serde_json::from_str(text).map_err(|e| ParseError::MalformedAt {
            offset: e.column(),
            message: format!("layout JSON: {e}"),
        })?;

    let mut labels = Vec::with_capacity(doc.vertices.len());
    let mut index = std::collections::HashMap::new();
    let mut positions = Vec::with_capacity(doc.vertices.len());
    for v in &doc.vertices {
        if index.contains_key(&v.label) {
            return Err(ParseError::Unsupported(format!(
                "duplicate vertex label '{}'",
                v.label
            )));
        }
        index.insert(v.label.clone(), labels.len() as u32);
        labels.push(v.label.clone());
        positions.push(Point {
            x: parse_bigint(&v.x, "x coordinate")?,
            y: parse_bigint(&v.y, "y coordinate")?,
        });
    }

    let mut pairs = Vec::new();
    let mut drawn = Vec::new();
    let mut layer_of = Vec::new();
    let mut kind = DrawingKind::Straight;
    for (i, e) in doc.edges.iter().enumerate() {
        let lookup = |label: &str| {
            index.get(label).copied().ok_or_else(|| {
                ParseError::Unsupported(format!("edge references undeclared vertex '{label}'"))
            })
        };
        if e.temporary {
            return Err(ParseError::Unsupported(
                "temporary edges do not belong in finished layouts".into(),
            ));
        }
        pairs.push((lookup(&e.source)?, lookup(&e.target)?));
        let layer = match e.layer {
            0 => Layer::A,
            1 => Layer::B,
            other => {
                return Err(ParseError::Unsupported(format!(
                    "edge layer {other} is not 0 or 1"
                )))
            }
        };
        let geometry = match e.geometry.as_str() {
            "segment" => EdgeGeometry::Segment,
            "ortho-VH" => {
                kind = DrawingKind::Orthogonal;
                EdgeGeometry::Ortho { kind: BendKind::VH }
            }
            "ortho-HV" => {
                kind = DrawingKind::Orthogonal;
                EdgeGeometry::Ortho { kind: BendKind::HV }
            }
            other => {
                return Err(ParseError::Unsupported(format!(
                    "unknown geometry '{other}'"
                )))
            }
        };
        layer_of.push(layer);
        drawn.push(DrawnEdge {
            id: i,
            layer,
            geometry,
        });
    }

    let graph = Graph::new(labels.len(), &pairs).map_err(ParseError::Graph)?;
    let extent = parse_bigint(&doc.meta.grid_extent, "grid extent")?;
    let drawing = Drawing {
        kind,
        positions,
        edges: drawn,
        extent,
    };
    Ok((
        doc,
        ParsedGraph { graph, labels },
        drawing,
        LayerPartition::new(layer_of),
    ))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::embed::embed_degree3;

    #[test]
    fn single_edge_document_shape() {
        let g = Graph::new(2, &[(0, 1)]).unwrap();
        let (d, _) = embed_degree3(&g).unwrap();
        let labels = vec!["0".to_string(), "1".to_string()];
        let doc = layout_document(&d, &g, &labels, "deg3-straight", None);
        assert_eq!(doc.vertices.len(), 2);
        assert_eq!(doc.edges.len(), 1);
        assert_eq!(doc.edges[0].layer, 0);
        assert_eq!(doc.edges[0].geometry, "segment");
    }

    #[test]
    fn round_trip_is_exact() {
        let g = crate::instances::petersen();
        let (d, _) = embed_degree3(&g).unwrap();
        let labels: Vec<String> = (0..10).map(|v| format!("v{v}")).collect();
        let doc = layout_document(&d, &g, &labels, "deg3-straight", None);
        let text = write_layout(&doc);
        let (doc2, parsed, d2, _) = read_layout(&text).unwrap();
        assert_eq!(doc, doc2);
        assert_eq!(parsed.labels, labels);
        assert_eq!(d2.positions, d.positions);
        assert_eq!(write_layout(&doc2), text);
    }

    #[test]
    fn huge_coordinates_survive() {
        let big: BigInt = BigInt::from(10).pow(50) + 7;
        let doc = LayoutDocument {
            meta: LayoutMeta {
                algorithm: "deg4-straight".into(),
                mode: "straight".into(),
                grid_extent: big.to_string(),
                verification: None,
            },
            vertices: vec![
                LayoutVertex {
                    label: "a".into(),
                    x: "0".into(),
                    y: big.to_string(),
                },
                LayoutVertex {
                    label: "b".into(),
                    x: big.to_string(),
                    y: "0".into(),
                },
            ],
            edges: vec![LayoutEdge {
                source: "a".into(),
                target: "b".into(),
                layer: 0,
                geometry: "segment".into(),
                temporary: false,
            }],
        };
        let (_, _, d, _) = read_layout(&write_layout(&doc)).unwrap();
        assert_eq!(d.positions[0].y, big);
        assert_eq!(d.positions[1].x, big);
    }

    #[test]
    fn bad_layer_rejected() {
        let text = write_layout(&LayoutDocument {
            meta: LayoutMeta {
                algorithm: "x".into(),
                mode: "straight".into(),
                grid_extent: "1".into(),
                verification: None,
            },
            vertices: vec![
                LayoutVertex {
                    label: "a".into(),
                    x: "0".into(),
                    y: "0".into(),
                },
                LayoutVertex {
                    label: "b".into(),
                    x: "1".into(),
                    y: "1".into(),
                },
            ],
            edges: vec![LayoutEdge {
                source: "a".into(),
                target: "b".into(),
                layer: 2,
                geometry: "segment".into(),
                temporary: false,
            }],
        });
        assert!(read_layout(&text).is_err());
    }
}
