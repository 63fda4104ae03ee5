//! Simultaneous straight-line embedding of two cycle forests on one vertex
//! set.
//!
//! Cycles are ordered and given consecutive coordinate blocks: a cycle of the
//! x-role forest owns a consecutive run of x-ranks (its y-ranks scatter), and
//! vice versa. All edges except each cycle's closing "back" edge then form
//! monotone open paths. Back edges are inserted in reverse cycle order; when
//! the cycle's start vertex cannot see its end vertex, the grid gap directly
//! above (or right of) the start vertex is stretched by the exact minimal
//! integer amount that clears every blocker. The two first cycles share their
//! start vertex, which is finally relocated into the intersection of its
//! visibility wedges, computed with exact rational arithmetic and rescaled
//! back onto an integer grid.

use std::cmp::Reverse;
use std::collections::BinaryHeap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::{Drawing, DrawingKind, DrawnEdge, EdgeGeometry, Embedding};
use crate::decompose::{Cycle, CycleEdge, CycleStructure, Layer, LayerPartition};
use crate::geom::{segments_cross, Point, SegRelation, Segment};
use crate::graph::Graph;
use crate::Error;

/// A cycle with a chosen start vertex and direction. `verts[0]` is the start
/// vertex, `verts.last()` the end; `edges[j]` joins `verts[j]` to
/// `verts[j+1]`, and the final slot is the back edge closing the cycle.
#[derive(Debug, Clone)]
pub struct OrientedCycle {
    pub layer: Layer,
    /// True when this cycle owns a block of x-ranks.
    pub role_x: bool,
    pub verts: Vec<u32>,
    pub edges: Vec<CycleEdge>,
    pub block_start: usize,
}

impl OrientedCycle {
    pub fn len(&self) -> usize {
        self.verts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.verts.is_empty()
    }

    pub fn start(&self) -> u32 {
        self.verts[0]
    }

    pub fn end(&self) -> u32 {
        *self.verts.last().unwrap()
    }
}

/// Interleaved rank assignment: each axis is a bijection onto `0..n`.
#[derive(Debug, Clone)]
pub struct CoordAssignment {
    pub n: usize,
    pub x_rank: Vec<usize>,
    pub y_rank: Vec<usize>,
    pub order: Vec<OrientedCycle>,
}

/// Result of the ordering step.
#[derive(Debug)]
pub enum Assigned {
    Ordered(CoordAssignment),
    /// Both forests are single spanning cycles; handled by the dedicated
    /// two-cycle routine.
    TwoSpanningCycles,
}

fn rotate_cycle(c: &Cycle, start_pos: usize, forward: bool) -> (Vec<u32>, Vec<CycleEdge>) {
    let len = c.vertices.len();
    let mut verts = Vec::with_capacity(len);
    let mut edges = Vec::with_capacity(len);
    for j in 0..len {
        if forward {
            verts.push(c.vertices[(start_pos + j) % len]);
            edges.push(c.edges[(start_pos + j) % len]);
        } else {
            verts.push(c.vertices[(start_pos + len - j) % len]);
            edges.push(c.edges[(start_pos + len - 1 - j) % len]);
        }
    }
    (verts, edges)
}

/// Start-vertex and direction choices for the initial cycle: adjacent pairs
/// (v0, w0) whose members sit in different cycles of the other forest, listed
/// deterministically (cycles by smallest member, vertices by id, the
/// backward neighbour before the forward one).
fn initial_cycle_candidates(
    x_cs: &CycleStructure,
    y_cycle_of: &[usize],
) -> Vec<(usize, usize, bool)> {
    let mut out = Vec::new();
    for (ci, c) in x_cs.cycles.iter().enumerate() {
        let len = c.vertices.len();
        if len < 2 {
            continue;
        }
        let mut by_id: Vec<usize> = (0..len).collect();
        by_id.sort_by_key(|&pos| c.vertices[pos]);
        for &pos in &by_id {
            let v = c.vertices[pos];
            let pred = c.vertices[(pos + len - 1) % len];
            let succ = c.vertices[(pos + 1) % len];
            if y_cycle_of[pred as usize] != y_cycle_of[v as usize] {
                out.push((ci, pos, true));
            }
            if len > 2 && y_cycle_of[succ as usize] != y_cycle_of[v as usize] {
                out.push((ci, pos, false));
            }
        }
    }
    out
}

/// Orders the cycles of both forests and assigns every vertex an x-rank and
/// a y-rank. `choice` selects among the deterministic initial-cycle
/// candidates; `0` is the canonical run. Returns `Ok(None)` when `choice`
/// runs past the candidate list.
pub fn order_and_assign_nth(
    g: &Graph,
    cs_a: &CycleStructure,
    cs_b: &CycleStructure,
    choice: usize,
) -> Result<Option<Assigned>, Error> {
    let n = g.vertex_count();
    // The start cycle must straddle more than one cycle of the other forest,
    // which requires the other forest to be split at all.
    let (x_cs, y_cs) = if cs_b.cycles.len() >= 2 {
        (cs_a, cs_b)
    } else if cs_a.cycles.len() >= 2 {
        (cs_b, cs_a)
    } else {
        return Ok(if choice == 0 {
            Some(Assigned::TwoSpanningCycles)
        } else {
            None
        });
    };
    let x_cycle_of = x_cs.cycle_of(n);
    let y_cycle_of = y_cs.cycle_of(n);

    let candidates = initial_cycle_candidates(x_cs, &y_cycle_of);
    let Some(&(c0_idx, c0_pos, c0_fwd)) = candidates.get(choice) else {
        if candidates.is_empty() {
            return Err(Error::InvariantViolation(
                "no admissible start cycle; the forests cannot interleave".into(),
            ));
        }
        return Ok(None);
    };

    let mut x_rank: Vec<Option<usize>> = vec![None; n];
    let mut y_rank: Vec<Option<usize>> = vec![None; n];
    let mut x_done = vec![false; x_cs.cycles.len()];
    let mut y_done = vec![false; y_cs.cycles.len()];
    let mut next_x = 0usize;
    let mut next_y = 0usize;
    let mut order: Vec<OrientedCycle> = Vec::new();
    // Vertices holding exactly one coordinate, keyed by that coordinate.
    let mut pool_y: BinaryHeap<Reverse<(usize, u32)>> = BinaryHeap::new();
    let mut pool_x: BinaryHeap<Reverse<(usize, u32)>> = BinaryHeap::new();

    let place = |cyc: OrientedCycle,
                     x_rank: &mut Vec<Option<usize>>,
                     y_rank: &mut Vec<Option<usize>>,
                     next_x: &mut usize,
                     next_y: &mut usize,
                     pool_x: &mut BinaryHeap<Reverse<(usize, u32)>>,
                     pool_y: &mut BinaryHeap<Reverse<(usize, u32)>>,
                     order: &mut Vec<OrientedCycle>| {
        for &v in &cyc.verts {
            if cyc.role_x {
                debug_assert!(x_rank[v as usize].is_none());
                x_rank[v as usize] = Some(*next_x);
                if y_rank[v as usize].is_none() {
                    pool_x.push(Reverse((*next_x, v)));
                }
                *next_x += 1;
            } else {
                debug_assert!(y_rank[v as usize].is_none());
                y_rank[v as usize] = Some(*next_y);
                if x_rank[v as usize].is_none() {
                    pool_y.push(Reverse((*next_y, v)));
                }
                *next_y += 1;
            }
        }
        order.push(cyc);
    };

    let c0 = &x_cs.cycles[c0_idx];
    let (verts, edges) = rotate_cycle(c0, c0_pos, c0_fwd);
    x_done[c0_idx] = true;
    place(
        OrientedCycle {
            layer: x_cs.layer,
            role_x: true,
            verts,
            edges,
            block_start: 0,
        },
        &mut x_rank,
        &mut y_rank,
        &mut next_x,
        &mut next_y,
        &mut pool_x,
        &mut pool_y,
        &mut order,
    );

    loop {
        // Smallest assigned y first; smallest assigned x as the fallback.
        let mut pick: Option<(u32, bool)> = None;
        while let Some(&Reverse((_, v))) = pool_y.peek() {
            if x_rank[v as usize].is_some() {
                pool_y.pop();
            } else {
                pick = Some((v, true));
                break;
            }
        }
        if pick.is_none() {
            while let Some(&Reverse((_, v))) = pool_x.peek() {
                if y_rank[v as usize].is_some() {
                    pool_x.pop();
                } else {
                    pick = Some((v, false));
                    break;
                }
            }
        }
        let Some((vi, needs_x)) = pick else { break };

        let (cs, done, cyc_idx, role_x, block_start) = if needs_x {
            let ci = x_cycle_of[vi as usize];
            (x_cs, &mut x_done, ci, true, next_x)
        } else {
            let ci = y_cycle_of[vi as usize];
            (y_cs, &mut y_done, ci, false, next_y)
        };
        if done[cyc_idx] {
            return Err(Error::InvariantViolation(
                "selected vertex's remaining cycle was already placed".into(),
            ));
        }
        done[cyc_idx] = true;
        let c = &cs.cycles[cyc_idx];
        let pos = c.vertices.iter().position(|&v| v == vi).unwrap();
        let len = c.vertices.len();
        let forward = if len <= 2 {
            true
        } else {
            c.vertices[(pos + 1) % len] < c.vertices[(pos + len - 1) % len]
        };
        let (verts, edges) = rotate_cycle(c, pos, forward);
        place(
            OrientedCycle {
                layer: cs.layer,
                role_x,
                verts,
                edges,
                block_start,
            },
            &mut x_rank,
            &mut y_rank,
            &mut next_x,
            &mut next_y,
            &mut pool_x,
            &mut pool_y,
            &mut order,
        );
    }

    if next_x != n || next_y != n {
        return Err(Error::InvariantViolation(format!(
            "rank assignment incomplete: {next_x} x-ranks, {next_y} y-ranks for {n} vertices"
        )));
    }
    let x_rank: Vec<usize> = x_rank.into_iter().map(Option::unwrap).collect();
    let y_rank: Vec<usize> = y_rank.into_iter().map(Option::unwrap).collect();
    Ok(Some(Assigned::Ordered(CoordAssignment {
        n,
        x_rank,
        y_rank,
        order,
    })))
}

/// Canonical ordering run.
pub fn order_and_assign(
    g: &Graph,
    cs_a: &CycleStructure,
    cs_b: &CycleStructure,
) -> Result<Assigned, Error> {
    order_and_assign_nth(g, cs_a, cs_b, 0).map(|o| o.expect("choice 0 always exists"))
}

/// Grid gaps per axis; coordinates are realized lazily as prefix sums.
#[derive(Debug, Clone)]
struct CoordState {
    xgap: Vec<BigInt>,
    ygap: Vec<BigInt>,
    x_of: Vec<BigInt>,
    y_of: Vec<BigInt>,
}

impl CoordState {
    fn unit(n: usize) -> CoordState {
        let gaps = vec![BigInt::one(); n.saturating_sub(1)];
        let mut s = CoordState {
            xgap: gaps.clone(),
            ygap: gaps,
            x_of: Vec::new(),
            y_of: Vec::new(),
        };
        s.realize_x();
        s.realize_y();
        s
    }

    fn realize_x(&mut self) {
        let mut acc = BigInt::zero();
        self.x_of = Vec::with_capacity(self.xgap.len() + 1);
        self.x_of.push(acc.clone());
        for gapped in &self.xgap {
            acc += gapped;
            self.x_of.push(acc.clone());
        }
    }

    fn realize_y(&mut self) {
        let mut acc = BigInt::zero();
        self.y_of = Vec::with_capacity(self.ygap.len() + 1);
        self.y_of.push(acc.clone());
        for gapped in &self.ygap {
            acc += gapped;
            self.y_of.push(acc.clone());
        }
    }

    fn bump_x(&mut self, gap: usize, delta: &BigInt) {
        self.xgap[gap] += delta;
        self.realize_x();
    }

    fn bump_y(&mut self, gap: usize, delta: &BigInt) {
        self.ygap[gap] += delta;
        self.realize_y();
    }

    fn position(&self, ca: &CoordAssignment, v: u32) -> Point {
        Point {
            x: self.x_of[ca.x_rank[v as usize]].clone(),
            y: self.y_of[ca.y_rank[v as usize]].clone(),
        }
    }

    fn positions(&self, ca: &CoordAssignment) -> Vec<Point> {
        (0..ca.n as u32).map(|v| self.position(ca, v)).collect()
    }
}

/// One structural edge of the oriented cycles, temporaries included.
#[derive(Debug, Clone)]
pub struct StructEdge {
    pub cycle: usize,
    pub layer: Layer,
    pub from: u32,
    pub to: u32,
    pub kind: CycleEdge,
    pub back: bool,
}

/// All drawable cycle edges (cycles of length one carry none).
pub fn structural_edges(ca: &CoordAssignment) -> Vec<StructEdge> {
    let mut out = Vec::new();
    for (ci, cyc) in ca.order.iter().enumerate() {
        let len = cyc.len();
        if len < 2 {
            continue;
        }
        for j in 0..len {
            out.push(StructEdge {
                cycle: ci,
                layer: cyc.layer,
                from: cyc.verts[j],
                to: cyc.verts[(j + 1) % len],
                kind: cyc.edges[j],
                back: j == len - 1,
            });
        }
    }
    out
}

/// Unit-spacing placement together with the open (non-back) edges.
pub fn place_without_back_edges(ca: &CoordAssignment) -> (Embedding, Vec<StructEdge>) {
    let state = CoordState::unit(ca.n);
    let position = state.positions(ca);
    let extent = BigInt::from(ca.n.saturating_sub(1));
    let open: Vec<StructEdge> = structural_edges(ca)
        .into_iter()
        .filter(|e| !e.back)
        .collect();
    (Embedding { position, extent }, open)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Axis {
    X,
    Y,
}

/// One spacing insertion, with the resulting placement when logging is on.
#[derive(Debug, Clone)]
pub struct ShiftEvent {
    pub owner: usize,
    pub axis: Axis,
    pub gap: usize,
    pub delta: BigInt,
    pub positions_after: Vec<Point>,
}

/// Boundary rays of the visibility wedge of the first cycle's end vertex:
/// one ray per blocker, each stored as a reduced direction from the apex.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WedgeRecord {
    pub apex: u32,
    pub rays: Vec<(u32, BigInt, BigInt)>,
    pub binding: Option<u32>,
}

/// Trace of one embedding run, for the lemma-level checks.
#[derive(Debug, Clone, Default)]
pub struct ShiftLog {
    pub initial_positions: Vec<Point>,
    pub events: Vec<ShiftEvent>,
    pub cb_index: Option<usize>,
    pub wedge_at_cb: Option<WedgeRecord>,
    pub wedge_at_endgame: Option<WedgeRecord>,
    pub relocation: Option<(Point, Point)>,
}

/// Everything a run exposes besides the drawing itself.
#[derive(Debug, Clone)]
pub struct CycleRun {
    pub degenerate: bool,
    pub assignment: CoordAssignment,
    pub unit_positions: Vec<Point>,
    pub struct_edges: Vec<StructEdge>,
    pub final_positions: Vec<Point>,
    pub log: ShiftLog,
}

fn reduced_direction(from: &Point, to: &Point) -> (BigInt, BigInt) {
    let mut dy = &to.y - &from.y;
    let mut dx = &to.x - &from.x;
    if dx.is_negative() || (dx.is_zero() && dy.is_negative()) {
        dx = -dx;
        dy = -dy;
    }
    let g = dy.gcd(&dx);
    if g.is_zero() {
        (dy, dx)
    } else {
        (dy / &g, dx / &g)
    }
}

fn wedge_record(state: &CoordState, ca: &CoordAssignment) -> Option<WedgeRecord> {
    let c0 = &ca.order[0];
    if c0.len() < 2 {
        return None;
    }
    let w0 = c0.end();
    let apex = state.position(ca, w0);
    let mut rays = Vec::new();
    let mut binding: Option<(u32, BigInt, BigInt)> = None;
    for &q in &c0.verts[1..c0.len() - 1] {
        let pq = state.position(ca, q);
        let (dy, dx) = reduced_direction(&apex, &pq);
        // Track the steepest ray; dx is positive for every blocker.
        let steeper = match &binding {
            None => true,
            Some((_, bdy, bdx)) => &dy * bdx > bdy * &dx,
        };
        if steeper {
            binding = Some((q, dy.clone(), dx.clone()));
        }
        rays.push((q, dy, dx));
    }
    Some(WedgeRecord {
        apex: w0,
        rays,
        binding: binding.map(|(q, _, _)| q),
    })
}

/// Minimal integer stretch that makes the cycle's start vertex see its end
/// vertex past every blocker, computed from the blocking constraints.
fn minimal_shift(state: &CoordState, ca: &CoordAssignment, cyc: &OrientedCycle) -> BigInt {
    let len = cyc.len();
    if len <= 2 {
        return BigInt::zero();
    }
    let v = state.position(ca, cyc.start());
    let w = state.position(ca, cyc.end());
    let mut delta = BigInt::zero();
    for &qv in &cyc.verts[1..len - 1] {
        let q = state.position(ca, qv);
        let base = (&w.x - &v.x) * (&q.y - &v.y) - (&w.y - &v.y) * (&q.x - &v.x);
        let need = if cyc.role_x {
            // Need orientation(v, w, q) > 0; stretching the gap above v
            // grows it at rate (w.x - q.x) > 0.
            let rate = &w.x - &q.x;
            debug_assert!(rate.is_positive());
            if base.is_positive() {
                BigInt::zero()
            } else {
                (-base).div_floor(&rate) + 1
            }
        } else {
            // Need orientation(v, w, q) < 0; stretching right of v shrinks
            // it at rate (w.y - q.y) > 0.
            let rate = &w.y - &q.y;
            debug_assert!(rate.is_positive());
            if base.is_negative() {
                BigInt::zero()
            } else {
                base.div_floor(&rate) + 1
            }
        };
        delta = delta.max(need);
    }
    delta
}

/// A linear constraint on the relocated point p: sign(c + kx*px + ky*py)
/// must be strictly positive (or strictly negative).
struct LinCon {
    c: BigInt,
    kx: BigInt,
    ky: BigInt,
    positive: bool,
}

fn pencil_constraints(
    state: &CoordState,
    ca: &CoordAssignment,
    cyc: &OrientedCycle,
    positive: bool,
) -> Vec<LinCon> {
    let len = cyc.len();
    if len < 3 {
        return Vec::new();
    }
    let w = state.position(ca, cyc.end());
    cyc.verts[1..len - 1]
        .iter()
        .map(|&qv| {
            let q = state.position(ca, qv);
            LinCon {
                c: &w.x * &q.y - &w.y * &q.x,
                kx: &w.y - &q.y,
                ky: &q.x - &w.x,
                positive,
            }
        })
        .collect()
}

fn floor_strict(r: &BigRational) -> BigInt {
    if r.is_integer() {
        r.to_integer() - 1
    } else {
        r.floor().to_integer()
    }
}

/// Feasible py interval at a fixed px, from the pencil constraints plus
/// py < ceiling. Returns (lower, upper), both exclusive, lower possibly
/// absent.
fn py_interval(
    cons: &[LinCon],
    px: &BigInt,
    ceiling: &BigInt,
) -> Option<(Option<BigRational>, BigRational)> {
    let mut hi = BigRational::from_integer(ceiling.clone());
    let mut lo: Option<BigRational> = None;
    for con in cons {
        let cprime = &con.c + &con.kx * px;
        // expr = cprime + ky * py, required strictly positive or negative.
        let (num, den, upper) = if con.positive {
            if con.ky.is_zero() {
                if !cprime.is_positive() {
                    return None;
                }
                continue;
            }
            // ky*py > -cprime
            (-&cprime, con.ky.clone(), con.ky.is_negative())
        } else {
            if con.ky.is_zero() {
                if !cprime.is_negative() {
                    return None;
                }
                continue;
            }
            // ky*py < -cprime
            (-&cprime, con.ky.clone(), con.ky.is_positive())
        };
        let bound = BigRational::new(num, den);
        if upper {
            if bound < hi {
                hi = bound;
            }
        } else {
            lo = Some(match lo {
                None => bound,
                Some(old) => old.max(bound),
            });
        }
    }
    if let Some(l) = &lo {
        if *l >= hi {
            return None;
        }
    }
    Some((lo, hi))
}

/// Moved targets incident to the shared start vertex, deduplicated.
fn endgame_targets(ca: &CoordAssignment) -> Vec<(u32, Layer)> {
    let mut targets = Vec::new();
    for cyc in ca.order.iter().take(2) {
        if cyc.len() < 2 {
            continue;
        }
        for t in [cyc.verts[1], cyc.end()] {
            if !targets.contains(&(t, cyc.layer)) {
                targets.push((t, cyc.layer));
            }
        }
    }
    targets
}

/// Exact check that placing the start vertex at the rational point p keeps
/// every moved segment crossing-free within its layer.
fn candidate_ok(
    state: &CoordState,
    ca: &CoordAssignment,
    struct_edges: &[StructEdge],
    px: &BigRational,
    py: &BigRational,
) -> bool {
    let v0 = ca.order[0].start();
    let scale = {
        let d = px.denom().gcd(py.denom());
        px.denom() / &d * py.denom()
    };
    let scaled = |p: &Point| Point {
        x: &p.x * &scale,
        y: &p.y * &scale,
    };
    let p0 = Point {
        x: (px * BigRational::from_integer(scale.clone())).to_integer(),
        y: (py * BigRational::from_integer(scale.clone())).to_integer(),
    };
    let targets = endgame_targets(ca);
    let moved: Vec<(Segment, Layer)> = targets
        .iter()
        .map(|&(t, layer)| {
            (
                Segment::new(p0.clone(), scaled(&state.position(ca, t))),
                layer,
            )
        })
        .collect();

    for (i, (seg, layer)) in moved.iter().enumerate() {
        for (other, other_layer) in moved.iter().skip(i + 1) {
            if layer == other_layer
                && !matches!(
                    segments_cross(seg, other),
                    Ok(SegRelation::SharedEndpointOnly)
                )
            {
                return false;
            }
        }
        for se in struct_edges {
            if se.layer != *layer || se.from == v0 || se.to == v0 {
                continue;
            }
            let stat = Segment::new(
                scaled(&state.position(ca, se.from)),
                scaled(&state.position(ca, se.to)),
            );
            match segments_cross(seg, &stat) {
                Ok(SegRelation::Disjoint) | Ok(SegRelation::SharedEndpointOnly) => {}
                _ => return false,
            }
        }
    }
    true
}

/// Searches for a relocated start vertex, in two regions. First strictly
/// left of the old column and strictly below every other vertex, where both
/// visibility wedges reduce to exact pencil constraints. Then, if that
/// region is blocked, inside the horizontal band between the first y-cycle's
/// top vertex and the next y-cycle's bottom, where the sightline to the
/// first y-cycle's end is free of obstructions. Every candidate is
/// re-verified against every same-layer segment before being accepted.
fn find_relocation(
    state: &CoordState,
    ca: &CoordAssignment,
    struct_edges: &[StructEdge],
) -> Option<(BigRational, BigRational)> {
    let mut cons = pencil_constraints(state, ca, &ca.order[0], true);
    if ca.order.len() > 1 && !ca.order[1].role_x {
        cons.extend(pencil_constraints(state, ca, &ca.order[1], false));
    }
    // Everything except the start vertex sits at y-rank one or higher.
    let ceiling = state.y_of[1.min(state.y_of.len() - 1)].clone();
    for exp in 0..64u32 {
        let px_int = -(BigInt::one() << exp);
        let px_rat = BigRational::from_integer(px_int.clone());
        let Some((lo, hi)) = py_interval(&cons, &px_int, &ceiling) else {
            continue;
        };
        let mut cands: Vec<BigRational> = Vec::new();
        let int_cand = BigRational::from_integer(floor_strict(&hi));
        let above_lo = |v: &BigRational| lo.as_ref().map_or(true, |l| v > l);
        if above_lo(&int_cand) {
            cands.push(int_cand);
        }
        match &lo {
            Some(l) => cands.push((l + &hi) / BigRational::from_integer(BigInt::from(2))),
            None => cands.push(&hi - BigRational::from_integer(BigInt::one())),
        }
        cands.dedup();
        for py in cands {
            if py >= BigRational::from_integer(ceiling.clone()) || !above_lo(&py) {
                continue;
            }
            if candidate_ok(state, ca, struct_edges, &px_rat, &py) {
                return Some((px_rat, py));
            }
        }
    }

    // The region below everything is blocked; go high instead. Far up and
    // left, every sightline drops along the drawing's left edge and swoops
    // to its target at the last moment, so it only needs to clear the lines
    // fanning left out of the first cycle's end vertex and to cross into
    // positive x low enough to duck under the blocks above its targets.
    high_region(state, ca, struct_edges)
}

/// Placement above and left of the whole drawing. The constraints are
/// linear: stay above every line through the first cycle's end vertex and a
/// blocker of that cycle, and let each y-layer sightline cross the axis
/// x = 0 below the first occupied row above its target.
fn high_region(
    state: &CoordState,
    ca: &CoordAssignment,
    struct_edges: &[StructEdge],
) -> Option<(BigRational, BigRational)> {
    let c0 = &ca.order[0];
    let mut cons: Vec<LinCon> = Vec::new();
    // Descending sightline to the end of the first cycle: every blocker of
    // that cycle must fall strictly below the line.
    if c0.len() >= 3 {
        let w = state.position(ca, c0.end());
        for &qv in &c0.verts[1..c0.len() - 1] {
            let q = state.position(ca, qv);
            cons.push(LinCon {
                c: &w.x * &q.y - &w.y * &q.x,
                kx: &w.y - &q.y,
                ky: &q.x - &w.x,
                positive: false,
            });
        }
    }
    // The y-layer sightlines must enter x >= 0 below the next occupied row
    // above their targets, so the swoop stays inside a horizontal corridor
    // that holds no other edges of that layer.
    if ca.order.len() > 1 && !ca.order[1].role_x {
        let c1 = &ca.order[1];
        if c1.len() >= 2 {
            let mut corridors: Vec<(u32, usize)> = vec![(c1.end(), ca.y_rank[c1.end() as usize])];
            if c1.len() >= 3 {
                let u1 = c1.verts[1];
                corridors.push((u1, ca.y_rank[u1 as usize]));
            }
            for (t, rank) in corridors {
                if rank + 1 >= state.y_of.len() {
                    continue;
                }
                let tp = state.position(ca, t);
                let ceiling = &state.y_of[rank + 1];
                // Crossing height below the ceiling, linearized with the
                // negative multiplier (px - x_t) flipped.
                cons.push(LinCon {
                    c: ceiling * &tp.x,
                    kx: &tp.y - ceiling,
                    ky: -&tp.x,
                    positive: true,
                });
            }
        }
    }

    for exp in 0..64u32 {
        let px_int = -(BigInt::one() << exp);
        let px_rat = BigRational::from_integer(px_int.clone());
        let mut lo: Option<BigRational> = None;
        let mut hi: Option<BigRational> = None;
        let mut dead = false;
        for con in &cons {
            let cprime = &con.c + &con.kx * &px_int;
            let (bound_num, bound_den, upper) = if con.positive {
                if con.ky.is_zero() {
                    if !cprime.is_positive() {
                        dead = true;
                        break;
                    }
                    continue;
                }
                (-&cprime, con.ky.clone(), con.ky.is_negative())
            } else {
                if con.ky.is_zero() {
                    if !cprime.is_negative() {
                        dead = true;
                        break;
                    }
                    continue;
                }
                (-&cprime, con.ky.clone(), con.ky.is_positive())
            };
            let bound = BigRational::new(bound_num, bound_den);
            if upper {
                hi = Some(match hi {
                    None => bound,
                    Some(h) => h.min(bound),
                });
            } else {
                lo = Some(match lo {
                    None => bound,
                    Some(l) => l.max(bound),
                });
            }
        }
        if dead {
            continue;
        }
        // The point must clear the whole drawing vertically as well.
        let top = BigRational::from_integer(state.y_of.last().unwrap().clone());
        let lo = Some(match lo {
            None => top.clone(),
            Some(l) => l.max(top),
        });
        let mut cands: Vec<BigRational> = Vec::new();
        match (&lo, &hi) {
            (Some(l), Some(h)) => {
                if l >= h {
                    continue;
                }
                let int_cand = BigRational::from_integer(floor_strict(h));
                if &int_cand > l {
                    cands.push(int_cand);
                }
                cands.push((l + h) / BigRational::from_integer(BigInt::from(2)));
            }
            (Some(l), None) => {
                cands.push(BigRational::from_integer(l.floor().to_integer() + 1));
            }
            _ => unreachable!("lower bound always set"),
        }
        for py in cands {
            if candidate_ok(state, ca, struct_edges, &px_rat, &py) {
                return Some((px_rat, py));
            }
        }
    }
    None
}

/// Rescales every coordinate so the rational relocation lands on integers,
/// moves the start vertex, and translates the drawing into the first
/// quadrant.
fn apply_relocation(
    state: &CoordState,
    ca: &CoordAssignment,
    px: &BigRational,
    py: &BigRational,
) -> Vec<Point> {
    let v0 = ca.order[0].start();
    let scale = {
        let d = px.denom().gcd(py.denom());
        px.denom() / &d * py.denom()
    };
    let mut positions = state.positions(ca);
    for p in &mut positions {
        p.x *= &scale;
        p.y *= &scale;
    }
    let sx = (px * BigRational::from_integer(scale.clone())).to_integer();
    let sy = (py * BigRational::from_integer(scale.clone())).to_integer();
    positions[v0 as usize] = Point { x: sx, y: sy };
    let min_x = positions.iter().map(|p| p.x.clone()).min().unwrap();
    let min_y = positions.iter().map(|p| p.y.clone()).min().unwrap();
    for p in &mut positions {
        p.x -= &min_x;
        p.y -= &min_y;
    }
    positions
}

struct SweepOutcome {
    positions: Vec<Point>,
    log: ShiftLog,
}

/// One full back-edge sweep with the given endgame pre-stretches. `delta_e1`
/// widens the gap just below the second y-role cycle at the moment that
/// cycle is processed; `xi_e2` widens the gap above the second vertex of the
/// first y-role cycle at endgame time.
fn sweep(
    ca: &CoordAssignment,
    struct_edges: &[StructEdge],
    delta_e1: &BigInt,
    xi_e2: &BigInt,
    collect: bool,
) -> Result<SweepOutcome, String> {
    let n = ca.n;
    let mut state = CoordState::unit(n);
    let mut log = ShiftLog {
        initial_positions: state.positions(ca),
        ..ShiftLog::default()
    };

    let cb = ca
        .order
        .iter()
        .enumerate()
        .skip(2)
        .find(|(_, c)| !c.role_x)
        .map(|(i, _)| i);
    log.cb_index = cb;

    let record = |log: &mut ShiftLog,
                      state: &CoordState,
                      owner: usize,
                      axis: Axis,
                      gap: usize,
                      delta: BigInt| {
        log.events.push(ShiftEvent {
            owner,
            axis,
            gap,
            delta,
            positions_after: if collect {
                state.positions(ca)
            } else {
                Vec::new()
            },
        });
    };

    for i in (2..ca.order.len()).rev() {
        let cyc = &ca.order[i];
        let delta = minimal_shift(&state, ca, cyc);
        if delta.is_positive() {
            if cyc.role_x {
                let gap = ca.y_rank[cyc.start() as usize];
                state.bump_y(gap, &delta);
                record(&mut log, &state, i, Axis::Y, gap, delta);
            } else {
                let gap = ca.x_rank[cyc.start() as usize];
                state.bump_x(gap, &delta);
                record(&mut log, &state, i, Axis::X, gap, delta);
            }
        }
        if Some(i) == cb {
            if delta_e1.is_positive() {
                let gap = ca.order[i].block_start - 1;
                state.bump_y(gap, delta_e1);
                record(&mut log, &state, i, Axis::Y, gap, delta_e1.clone());
            }
            log.wedge_at_cb = wedge_record(&state, ca);
        }
    }
    log.wedge_at_endgame = wedge_record(&state, ca);

    // Endgame pre-stretch above the second vertex of the first y-role cycle.
    let c1 = &ca.order[1];
    if xi_e2.is_positive() && !c1.role_x && c1.len() >= 2 && n >= 3 {
        let u1 = c1.verts[1];
        let owner = if ca.order[0].verts.contains(&u1) {
            1
        } else {
            ca.order
                .iter()
                .position(|c| c.role_x && c.start() == u1)
                .unwrap_or(1)
        };
        let gap = ca.y_rank[u1 as usize];
        state.bump_y(gap, xi_e2);
        record(&mut log, &state, owner, Axis::Y, gap, xi_e2.clone());
    }

    // Relocate the shared start vertex, trying progressively larger corner
    // stretches: widening the two gaps at the start vertex pushes the rest
    // of the drawing rigidly up and right, which raises both wedge
    // intercepts and the ceiling under the other vertices. Bumps scale with
    // the current extent so they can outgrow any accumulated blocking slope.
    let v0 = ca.order[0].start();
    for corner in 0..6u32 {
        if corner > 0 && n >= 2 {
            let span = state.x_of.last().unwrap().max(state.y_of.last().unwrap()) + 1;
            let bump = span << corner;
            state.bump_x(0, &bump);
            state.bump_y(0, &bump);
            record(&mut log, &state, 0, Axis::X, 0, bump.clone());
            record(&mut log, &state, 0, Axis::Y, 0, bump);
        }
        if let Some((px, py)) = find_relocation(&state, ca, struct_edges) {
            let old = state.position(ca, v0);
            let positions = apply_relocation(&state, ca, &px, &py);
            log.relocation = Some((old, positions[v0 as usize].clone()));
            return Ok(SweepOutcome { positions, log });
        }
    }
    Err(format!(
        "wedge intersection stayed empty for start vertex {v0} (n={n})"
    ))
}

const ATTEMPTS: [(u32, u32); 6] = [(0, 0), (1, 0), (0, 1), (1, 1), (4, 4), (8, 8)];

/// Embeds two cycle forests. `choice_limit` bounds how many alternative
/// initial-cycle selections are tried before giving up.
pub fn embed_cycle_forests(
    g: &Graph,
    partition: &LayerPartition,
    cs_a: &CycleStructure,
    cs_b: &CycleStructure,
    collect: bool,
) -> Result<(Drawing, CycleRun), Error> {
    let n = g.vertex_count();
    let unit_extent = BigInt::from(n.max(2) - 1);
    let mut last_err = String::new();
    for choice in 0..64usize {
        let assigned = match order_and_assign_nth(g, cs_a, cs_b, choice)? {
            Some(a) => a,
            None => break,
        };
        let ca = match assigned {
            Assigned::TwoSpanningCycles => {
                return embed_two_spanning(g, partition, cs_a, cs_b, collect);
            }
            Assigned::Ordered(ca) => ca,
        };
        let struct_edges = structural_edges(&ca);
        for &(e1, e2) in &ATTEMPTS {
            let d1 = if e1 == 0 {
                BigInt::zero()
            } else {
                &unit_extent * BigInt::from(e1)
            };
            let d2 = if e2 == 0 {
                BigInt::zero()
            } else {
                &unit_extent * BigInt::from(e2)
            };
            match sweep(&ca, &struct_edges, &d1, &d2, collect) {
                Ok(outcome) => {
                    let drawing = drawing_from(g, partition, &outcome.positions, &struct_edges)?;
                    let unit_positions = CoordState::unit(n).positions(&ca);
                    let run = CycleRun {
                        degenerate: false,
                        assignment: ca,
                        unit_positions,
                        struct_edges,
                        final_positions: outcome.positions,
                        log: outcome.log,
                    };
                    return Ok((drawing, run));
                }
                Err(e) => last_err = e,
            }
        }
    }
    Err(Error::WedgeSearchFailed(last_err))
}

fn drawing_from(
    g: &Graph,
    partition: &LayerPartition,
    positions: &[Point],
    struct_edges: &[StructEdge],
) -> Result<Drawing, Error> {
    let mut edges: Vec<DrawnEdge> = Vec::with_capacity(g.edge_count());
    for se in struct_edges {
        if let CycleEdge::Real(id) = se.kind {
            if partition.layer_of[id] != se.layer {
                return Err(Error::InvariantViolation(format!(
                    "edge {id} drawn on the wrong layer"
                )));
            }
            edges.push(DrawnEdge {
                id,
                layer: se.layer,
                geometry: EdgeGeometry::Segment,
            });
        }
    }
    edges.sort_by_key(|e| e.id);
    if edges.len() != g.edge_count() {
        return Err(Error::InvariantViolation(format!(
            "drawing holds {} of {} edges",
            edges.len(),
            g.edge_count()
        )));
    }
    let extent = positions
        .iter()
        .flat_map(|p| [p.x.clone(), p.y.clone()])
        .max()
        .unwrap_or_else(BigInt::zero);
    Ok(Drawing {
        kind: DrawingKind::Straight,
        positions: positions.to_vec(),
        edges,
        extent,
    })
}

/// Both forests are single spanning cycles: cut both at one shared vertex,
/// place by the two-path rule, close the two back edges with minimal corner
/// stretches, and relocate the cut vertex if the closures interfere.
fn embed_two_spanning(
    g: &Graph,
    partition: &LayerPartition,
    cs_a: &CycleStructure,
    cs_b: &CycleStructure,
    collect: bool,
) -> Result<(Drawing, CycleRun), Error> {
    let n = g.vertex_count();
    let ca_cycle = &cs_a.cycles[0];
    let cb_cycle = &cs_b.cycles[0];
    let mut last_err = String::new();

    let unit_extent = BigInt::from(n.max(2) - 1);
    for v0 in 0..n as u32 {
        let pos_a = ca_cycle.vertices.iter().position(|&v| v == v0).unwrap();
        let pos_b = cb_cycle.vertices.iter().position(|&v| v == v0).unwrap();
        for dir_a in [true, false] {
            for dir_b in [true, false] {
                let (va, ea) = rotate_cycle(ca_cycle, pos_a, dir_a);
                let (vb, eb) = rotate_cycle(cb_cycle, pos_b, dir_b);
                // Distinct end vertices let the end-gap stretches decouple
                // the two wedges; with three or more vertices some direction
                // combination always provides that.
                if n >= 3 && va.last() == vb.last() {
                    continue;
                }
                let mut x_rank = vec![0usize; n];
                let mut y_rank = vec![0usize; n];
                for (i, &v) in va.iter().enumerate() {
                    x_rank[v as usize] = i;
                }
                for (i, &v) in vb.iter().enumerate() {
                    y_rank[v as usize] = i;
                }
                let ca = CoordAssignment {
                    n,
                    x_rank,
                    y_rank,
                    order: vec![
                        OrientedCycle {
                            layer: cs_a.layer,
                            role_x: true,
                            verts: va,
                            edges: ea,
                            block_start: 0,
                        },
                        OrientedCycle {
                            layer: cs_b.layer,
                            role_x: false,
                            verts: vb,
                            edges: eb,
                            block_start: 0,
                        },
                    ],
                };
                let struct_edges = structural_edges(&ca);
                for stretch_exp in 0..6u32 {
                    let stretch = if stretch_exp == 0 {
                        BigInt::zero()
                    } else {
                        &unit_extent << (2 * stretch_exp)
                    };
                    match two_spanning_attempt(&ca, &struct_edges, &stretch, collect) {
                        Ok(outcome) => {
                            let drawing =
                                drawing_from(g, partition, &outcome.positions, &struct_edges)?;
                            let unit_positions = CoordState::unit(n).positions(&ca);
                            let run = CycleRun {
                                degenerate: true,
                                assignment: ca,
                                unit_positions,
                                struct_edges,
                                final_positions: outcome.positions,
                                log: outcome.log,
                            };
                            return Ok((drawing, run));
                        }
                        Err(e) => last_err = e,
                    }
                }
                if n < 2 {
                    break;
                }
            }
            if n < 2 {
                break;
            }
        }
    }
    Err(Error::WedgeSearchFailed(last_err))
}

fn two_spanning_attempt(
    ca: &CoordAssignment,
    struct_edges: &[StructEdge],
    stretch: &BigInt,
    collect: bool,
) -> Result<SweepOutcome, String> {
    let n = ca.n;
    let mut state = CoordState::unit(n);
    let mut log = ShiftLog {
        initial_positions: state.positions(ca),
        ..ShiftLog::default()
    };
    let record = |log: &mut ShiftLog,
                      state: &CoordState,
                      owner: usize,
                      axis: Axis,
                      gap: usize,
                      delta: BigInt| {
        log.events.push(ShiftEvent {
            owner,
            axis,
            gap,
            delta,
            positions_after: if collect {
                state.positions(ca)
            } else {
                Vec::new()
            },
        });
    };

    // Flatten the visibility wedges before closing anything: stretching the
    // gap just left of one path's end and just below the other's grows the
    // blocking denominators while the numerators stay put. Both layers are
    // monotone open paths at this point, so every stretch is safe; the back
    // edges get validated from scratch below. No back edges exist yet, hence
    // the out-of-range owner index.
    if stretch.is_positive() && n >= 2 {
        state.bump_x(n - 2, stretch);
        record(&mut log, &state, ca.order.len(), Axis::X, n - 2, stretch.clone());
        state.bump_y(n - 2, stretch);
        record(&mut log, &state, ca.order.len(), Axis::Y, n - 2, stretch.clone());
    }

    if n >= 3 {
        let dy = minimal_shift(&state, ca, &ca.order[0]);
        if dy.is_positive() {
            state.bump_y(0, &dy);
            record(&mut log, &state, 0, Axis::Y, 0, dy);
        }
        let dx = minimal_shift(&state, ca, &ca.order[1]);
        if dx.is_positive() {
            state.bump_x(0, &dx);
            record(&mut log, &state, 1, Axis::X, 0, dx);
        }
    }

    // With both closures in place the cut vertex may already see everything.
    let v0 = ca.order[0].start();
    let home = state.position(ca, v0);
    let home_rat = (
        BigRational::from_integer(home.x.clone()),
        BigRational::from_integer(home.y.clone()),
    );
    if candidate_ok(&state, ca, struct_edges, &home_rat.0, &home_rat.1) {
        return Ok(SweepOutcome {
            positions: state.positions(ca),
            log,
        });
    }

    if let Some((px, py)) = find_relocation(&state, ca, struct_edges) {
        let old = state.position(ca, v0);
        let positions = apply_relocation(&state, ca, &px, &py);
        log.relocation = Some((old, positions[v0 as usize].clone()));
        return Ok(SweepOutcome { positions, log });
    }
    Err(format!(
        "two-spanning-cycle placement found no admissible corner (start {v0})"
    ))
}

#[cfg(test)]
mod debug_tests {
    use super::*;
    use crate::decompose::cycle_structure;

    fn first_block(state: &CoordState, ca: &CoordAssignment, struct_edges: &[StructEdge], px: &BigRational, py: &BigRational) -> Option<(usize, usize)> {
        let v0 = ca.order[0].start();
        let scale = {
            let d = px.denom().gcd(py.denom());
            px.denom() / &d * py.denom()
        };
        let scaled = |p: &Point| Point { x: &p.x * &scale, y: &p.y * &scale };
        let p0 = Point {
            x: (px * BigRational::from_integer(scale.clone())).to_integer(),
            y: (py * BigRational::from_integer(scale.clone())).to_integer(),
        };
        let targets = endgame_targets(ca);
        for (ti, &(t, layer)) in targets.iter().enumerate() {
            let seg = Segment::new(p0.clone(), scaled(&state.position(ca, t)));
            for (si, se) in struct_edges.iter().enumerate() {
                if se.layer != layer || se.from == v0 || se.to == v0 { continue; }
                let stat = Segment::new(scaled(&state.position(ca, se.from)), scaled(&state.position(ca, se.to)));
                match segments_cross(&seg, &stat) {
                    Ok(SegRelation::Disjoint) | Ok(SegRelation::SharedEndpointOnly) => {}
                    _ => return Some((ti, si)),
                }
            }
        }
        None
    }

    #[test]
    #[ignore]
    fn dissect_seed43() {
        let g = crate::gen::random_regular_connected(38, 4, 43);
        let p = crate::decompose::paths_and_cycles_deg4(&g).unwrap();
        let cs_a = cycle_structure(&p, &g, Layer::A).unwrap();
        let cs_b = cycle_structure(&p, &g, Layer::B).unwrap();
        let Some(Assigned::Ordered(ca)) = order_and_assign_nth(&g, &cs_a, &cs_b, 0).unwrap() else { panic!() };
        println!("order: {:?}", ca.order.iter().map(|c| (c.role_x, c.len())).collect::<Vec<_>>());
        let struct_edges = structural_edges(&ca);
        let mut state = CoordState::unit(ca.n);
        for i in (2..ca.order.len()).rev() {
            let cyc = &ca.order[i];
            let delta = minimal_shift(&state, &ca, cyc);
            if delta.is_positive() {
                if cyc.role_x {
                    state.bump_y(ca.y_rank[cyc.start() as usize], &delta);
                } else {
                    state.bump_x(ca.x_rank[cyc.start() as usize], &delta);
                }
            }
        }
        let targets = endgame_targets(&ca);
        println!("targets: {:?}", targets);
        println!("band strip: {:?}", band_strip_index(&ca));
        let half = BigRational::from_integer(BigInt::from(2));
        for r in 0..ca.n - 1 {
            let lo = BigRational::from_integer(state.y_of[r].clone());
            let hi = BigRational::from_integer(state.y_of[r + 1].clone());
            let py = (&lo + &hi) / &half;
            let mut line = format!("strip {r}:");
            for exp in [0u32, 2, 6, 12, 24, 48] {
                let px = BigRational::from_integer(-(BigInt::one() << exp));
                match first_block(&state, &ca, &struct_edges, &px, &py) {
                    None => line.push_str(&format!(" 2^{exp}:OK")),
                    Some((ti, si)) => {
                        let se = &struct_edges[si];
                        line.push_str(&format!(" 2^{exp}:t{ti}x({},{})", se.from, se.to));
                    }
                }
            }
            println!("{line}");
        }
    }
}
