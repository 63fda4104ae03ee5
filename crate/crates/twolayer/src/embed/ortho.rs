//! Orthogonal two-layer embedding: the same interleaved rank placement as
//! the straight-line algorithm, kept at unit spacing, with every edge drawn
//! as exactly two axis-aligned segments. Cycles owning x-blocks draw their
//! forward edges vertical-then-horizontal and their back edge the opposite
//! way; y-block cycles mirror this. Everything fits the n-by-n grid.

use num_bigint::BigInt;
use num_traits::Zero;

use super::cycles::{order_and_assign, structural_edges, Assigned, CoordAssignment, OrientedCycle};
use super::{BendKind, Drawing, DrawingKind, DrawnEdge, EdgeGeometry};
use crate::decompose::{cycle_structure, Cycle, CycleEdge, Layer, LayerPartition};
use crate::geom::Point;
use crate::graph::Graph;
use crate::Error;

// Read from the traversal source, every edge of an x-block cycle starts
// vertically; the back edge, read from the cycle's start vertex instead,
// runs horizontally first along the cycle's bottom row, which is the same
// two segments. y-block cycles mirror this.
fn bend_kind(role_x: bool) -> BendKind {
    if role_x {
        BendKind::VH
    } else {
        BendKind::HV
    }
}

/// Orthogonal embedding of two maximum-degree-two layers of `g`.
pub fn embed_pair_ortho(g: &Graph, partition: &LayerPartition) -> Result<Drawing, Error> {
    let n = g.vertex_count();
    if n == 0 {
        return Ok(Drawing {
            kind: DrawingKind::Orthogonal,
            positions: vec![],
            edges: vec![],
            extent: BigInt::zero(),
        });
    }
    let cs_a = cycle_structure(partition, g, Layer::A)?;
    let cs_b = cycle_structure(partition, g, Layer::B)?;

    let ca = match order_and_assign(g, &cs_a, &cs_b)? {
        Assigned::Ordered(ca) => ca,
        Assigned::TwoSpanningCycles => {
            // Cut both spanning cycles at vertex 0; the rank placement and
            // the drawing rules below need nothing else.
            two_spanning_assignment(n, &cs_a.cycles[0], &cs_b.cycles[0], cs_a.layer, cs_b.layer)
        }
    };

    let positions: Vec<Point> = (0..n)
        .map(|v| Point::new(ca.x_rank[v] as i64, ca.y_rank[v] as i64))
        .collect();

    let mut edges: Vec<DrawnEdge> = Vec::new();
    for se in structural_edges(&ca) {
        if let CycleEdge::Real(id) = se.kind {
            if partition.layer_of[id] != se.layer {
                return Err(Error::InvariantViolation(format!(
                    "edge {id} drawn on the wrong layer"
                )));
            }
            // Geometry is directed from the traversal source, so the stored
            // endpoints decide which endpoint anchors the first segment.
            let (u, _) = g.edge(id);
            let kind = bend_kind(ca.order[se.cycle].role_x);
            let kind = if u == se.from {
                kind
            } else {
                // The graph stores the edge the other way round; flipping the
                // direction swaps which endpoint the first segment leaves.
                match kind {
                    BendKind::VH => BendKind::HV,
                    BendKind::HV => BendKind::VH,
                }
            };
            edges.push(DrawnEdge {
                id,
                layer: se.layer,
                geometry: EdgeGeometry::Ortho { kind },
            });
        }
    }
    edges.sort_by_key(|e| e.id);
    if edges.len() != g.edge_count() {
        return Err(Error::InvariantViolation(format!(
            "orthogonal drawing holds {} of {} edges",
            edges.len(),
            g.edge_count()
        )));
    }

    Ok(Drawing {
        kind: DrawingKind::Orthogonal,
        positions,
        edges,
        extent: BigInt::from(n - 1),
    })
}

fn two_spanning_assignment(
    n: usize,
    a: &Cycle,
    b: &Cycle,
    layer_a: Layer,
    layer_b: Layer,
) -> CoordAssignment {
    let rotate = |c: &Cycle| -> (Vec<u32>, Vec<CycleEdge>) {
        let pos = c.vertices.iter().position(|&v| v == 0).unwrap_or(0);
        let len = c.vertices.len();
        let verts: Vec<u32> = (0..len).map(|j| c.vertices[(pos + j) % len]).collect();
        let edges: Vec<CycleEdge> = (0..len).map(|j| c.edges[(pos + j) % len]).collect();
        (verts, edges)
    };
    let (va, ea) = rotate(a);
    let (vb, eb) = rotate(b);
    let mut x_rank = vec![0usize; n];
    let mut y_rank = vec![0usize; n];
    for (i, &v) in va.iter().enumerate() {
        x_rank[v as usize] = i;
    }
    for (i, &v) in vb.iter().enumerate() {
        y_rank[v as usize] = i;
    }
    CoordAssignment {
        n,
        x_rank,
        y_rank,
        order: vec![
            OrientedCycle {
                layer: layer_a,
                role_x: true,
                verts: va,
                edges: ea,
                block_start: 0,
            },
            OrientedCycle {
                layer: layer_b,
                role_x: false,
                verts: vb,
                edges: eb,
                block_start: 0,
            },
        ],
    }
}
