//! Grid embeddings: two spanning paths (degree three), two cycle forests
//! (degree four, straight-line), and the orthogonal one-bend variant.

pub mod cycles;
pub mod ortho;
pub mod paths;

use num_bigint::BigInt;
use num_traits::Zero;

use crate::decompose::{
    cycle_structure, forests_to_paths, linear_forests_deg3, paths_and_cycles_deg4, Layer,
    LayerPartition,
};
use crate::geom::{Point, Segment};
use crate::graph::Graph;
use crate::Error;

/// Shared vertex placement with its grid extent bound.
#[derive(Debug, Clone)]
pub struct Embedding {
    pub position: Vec<Point>,
    pub extent: BigInt,
}

/// Drawing flavour.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DrawingKind {
    Straight,
    Orthogonal,
}

/// Orientation of an orthogonal edge's two segments, read from its source:
/// vertical-then-horizontal or horizontal-then-vertical.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BendKind {
    VH,
    HV,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum EdgeGeometry {
    Segment,
    Ortho { kind: BendKind },
}

/// One drawn (real) edge.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DrawnEdge {
    pub id: usize,
    pub layer: Layer,
    pub geometry: EdgeGeometry,
}

/// Finished two-layer drawing: a shared placement plus per-layer geometry.
/// Temporary connector edges never appear here.
#[derive(Debug, Clone)]
pub struct Drawing {
    pub kind: DrawingKind,
    pub positions: Vec<Point>,
    pub edges: Vec<DrawnEdge>,
    pub extent: BigInt,
}

impl Drawing {
    /// The one or two segments realizing a drawn edge.
    pub fn segments_of(&self, g: &Graph, e: &DrawnEdge) -> Vec<Segment> {
        let (u, v) = g.edge(e.id);
        let pu = self.positions[u as usize].clone();
        let pv = self.positions[v as usize].clone();
        match &e.geometry {
            EdgeGeometry::Segment => vec![Segment::new(pu, pv)],
            EdgeGeometry::Ortho { kind } => {
                let bend = match kind {
                    BendKind::VH => Point::new(pu.x.clone(), pv.y.clone()),
                    BendKind::HV => Point::new(pv.x.clone(), pu.y.clone()),
                };
                vec![
                    Segment::new(pu, bend.clone()),
                    Segment::new(bend, pv),
                ]
            }
        }
    }

    pub fn bend_of(&self, g: &Graph, e: &DrawnEdge) -> Option<Point> {
        let (u, v) = g.edge(e.id);
        match &e.geometry {
            EdgeGeometry::Segment => None,
            EdgeGeometry::Ortho { kind } => Some(match kind {
                BendKind::VH => Point::new(
                    self.positions[u as usize].x.clone(),
                    self.positions[v as usize].y.clone(),
                ),
                BendKind::HV => Point::new(
                    self.positions[v as usize].x.clone(),
                    self.positions[u as usize].y.clone(),
                ),
            }),
        }
    }

    pub fn layer_edges(&self, layer: Layer) -> impl Iterator<Item = &DrawnEdge> {
        self.edges.iter().filter(move |e| e.layer == layer)
    }
}

/// Pipeline selection.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Mode {
    Deg3,
    Deg4Straight,
    Deg4Ortho,
    Auto,
}

impl Mode {
    /// Auto resolves to the degree-three pipeline exactly when it applies.
    pub fn resolve(self, g: &Graph) -> Mode {
        match self {
            Mode::Auto => {
                if g.max_degree() <= 3 {
                    Mode::Deg3
                } else {
                    Mode::Deg4Straight
                }
            }
            m => m,
        }
    }
}

/// Degree-three pipeline on a connected graph: linear forests, spanning
/// paths, one placement from the two path orders. Grid extent is n-1.
pub fn embed_degree3(g: &Graph) -> Result<(Drawing, LayerPartition), Error> {
    let partition = linear_forests_deg3(g)?;
    let spanning = forests_to_paths(&partition, g)?;
    let orders = paths::PathOrders::from_sequences(&spanning.order[0], &spanning.order[1])?;
    let emb = paths::embed_two_paths(&orders)?;
    let edges = (0..g.edge_count())
        .map(|id| DrawnEdge {
            id,
            layer: partition.layer_of[id],
            geometry: EdgeGeometry::Segment,
        })
        .collect();
    Ok((
        Drawing {
            kind: DrawingKind::Straight,
            positions: emb.position,
            edges,
            extent: emb.extent,
        },
        partition,
    ))
}

/// Degree-four straight-line pipeline on a connected graph.
pub fn embed_degree4(g: &Graph) -> Result<(Drawing, LayerPartition), Error> {
    let partition = paths_and_cycles_deg4(g)?;
    let drawing = embed_pair(g, &partition)?;
    Ok((drawing, partition))
}

/// Simultaneous straight-line embedding of two maximum-degree-two layers of
/// `g` sharing one placement: the pair theorem this crate is built around.
pub fn embed_pair(g: &Graph, partition: &LayerPartition) -> Result<Drawing, Error> {
    if g.vertex_count() == 0 {
        return Ok(Drawing {
            kind: DrawingKind::Straight,
            positions: vec![],
            edges: vec![],
            extent: BigInt::zero(),
        });
    }
    let cs_a = cycle_structure(partition, g, Layer::A)?;
    let cs_b = cycle_structure(partition, g, Layer::B)?;
    cycles::embed_cycle_forests(g, partition, &cs_a, &cs_b, false).map(|(d, _)| d)
}

/// Like [`embed_pair`] but also returns the run trace (shift events,
/// wedge snapshots, intermediate placements) for structural checks.
pub fn embed_pair_logged(
    g: &Graph,
    partition: &LayerPartition,
) -> Result<(Drawing, cycles::CycleRun), Error> {
    let cs_a = cycle_structure(partition, g, Layer::A)?;
    let cs_b = cycle_structure(partition, g, Layer::B)?;
    cycles::embed_cycle_forests(g, partition, &cs_a, &cs_b, true)
}

/// Degree-four orthogonal pipeline on a connected graph: one bend per edge,
/// exact n-by-n grid.
pub fn embed_degree4_ortho(g: &Graph) -> Result<(Drawing, LayerPartition), Error> {
    let partition = paths_and_cycles_deg4(g)?;
    let drawing = ortho::embed_pair_ortho(g, &partition)?;
    Ok((drawing, partition))
}

/// Embeds a possibly disconnected graph by laying out each connected
/// component separately and stacking the bounding boxes along the diagonal.
pub fn embed_components(g: &Graph, mode: Mode) -> Result<(Drawing, LayerPartition), Error> {
    let mode = mode.resolve(g);
    let comps = g.components();
    if comps.len() <= 1 {
        return embed_connected(g, mode);
    }

    let mut positions = vec![Point::new(0, 0); g.vertex_count()];
    let mut layer_of = vec![Layer::A; g.edge_count()];
    let mut edges = Vec::with_capacity(g.edge_count());
    let mut offset = BigInt::zero();
    let mut kind = DrawingKind::Straight;
    for comp in comps {
        let mut local_id = vec![u32::MAX; g.vertex_count()];
        for (i, &v) in comp.iter().enumerate() {
            local_id[v as usize] = i as u32;
        }
        let mut pairs = Vec::new();
        let mut edge_ids = Vec::new();
        for (eid, &(u, v)) in g.edges().iter().enumerate() {
            if local_id[u as usize] != u32::MAX && local_id[v as usize] != u32::MAX {
                pairs.push((local_id[u as usize], local_id[v as usize]));
                edge_ids.push(eid);
            }
        }
        let sub = Graph::new(comp.len(), &pairs)?;
        let (d, p) = embed_connected(&sub, mode)?;
        kind = d.kind;
        for (i, &v) in comp.iter().enumerate() {
            positions[v as usize] = Point::new(
                &d.positions[i].x + &offset,
                &d.positions[i].y + &offset,
            );
        }
        for de in &d.edges {
            let orig = edge_ids[de.id];
            layer_of[orig] = de.layer;
            edges.push(DrawnEdge {
                id: orig,
                layer: de.layer,
                geometry: de.geometry.clone(),
            });
        }
        for (local, &orig) in edge_ids.iter().enumerate() {
            layer_of[orig] = p.layer_of[local];
        }
        offset += &d.extent + 1;
    }
    edges.sort_by_key(|e| e.id);
    let extent = if offset.is_zero() {
        BigInt::zero()
    } else {
        offset - 1
    };
    Ok((
        Drawing {
            kind,
            positions,
            edges,
            extent,
        },
        LayerPartition::new(layer_of),
    ))
}

fn embed_connected(g: &Graph, mode: Mode) -> Result<(Drawing, LayerPartition), Error> {
    match mode.resolve(g) {
        Mode::Deg3 => embed_degree3(g),
        Mode::Deg4Straight => embed_degree4(g),
        Mode::Deg4Ortho => embed_degree4_ortho(g),
        Mode::Auto => unreachable!("resolved above"),
    }
}
