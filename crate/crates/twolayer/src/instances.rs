//! Named graphs used by the demos and the test corpus.

use crate::decompose::{Layer, LayerPartition};
use crate::graph::Graph;

pub fn k4() -> Graph {
    complete(4)
}

pub fn k5() -> Graph {
    complete(5)
}

pub fn complete(n: usize) -> Graph {
    let pairs: Vec<(u32, u32)> = (0..n as u32)
        .flat_map(|u| ((u + 1)..n as u32).map(move |v| (u, v)))
        .collect();
    Graph::new(n, &pairs).expect("complete graph is simple")
}

pub fn cycle(n: usize) -> Graph {
    let pairs: Vec<(u32, u32)> = (0..n as u32).map(|u| (u, (u + 1) % n as u32)).collect();
    Graph::new(n, &pairs).expect("cycle is simple")
}

/// The 4-regular octahedron: three pairs of opposite vertices, everything
/// else adjacent.
pub fn octahedron() -> Graph {
    let mut pairs = Vec::new();
    for u in 0..6u32 {
        for v in (u + 1)..6 {
            if v != u + 3 || u >= 3 {
                pairs.push((u, v));
            }
        }
    }
    Graph::new(6, &pairs).expect("octahedron is simple")
}

/// Petersen graph: outer 5-cycle, inner pentagram, five spokes.
pub fn petersen() -> Graph {
    let mut pairs = Vec::new();
    for i in 0..5u32 {
        pairs.push((i, (i + 1) % 5));
        pairs.push((5 + i, 5 + (i + 2) % 5));
        pairs.push((i, 5 + i));
    }
    Graph::new(10, &pairs).expect("petersen is simple")
}

/// Coxeter graph: three heptagonal rings with chord steps 1, 2 and 3, plus
/// a seventh of hubs joined to one vertex of each ring. Cubic, 28 vertices.
pub fn coxeter() -> Graph {
    let mut pairs = Vec::new();
    let ring = |base: u32, step: u32, pairs: &mut Vec<(u32, u32)>| {
        for i in 0..7u32 {
            pairs.push((base + i, base + (i + step) % 7));
        }
    };
    ring(0, 1, &mut pairs);
    ring(7, 2, &mut pairs);
    ring(14, 3, &mut pairs);
    for i in 0..7u32 {
        pairs.push((21 + i, i));
        pairs.push((21 + i, 7 + i));
        pairs.push((21 + i, 14 + i));
    }
    Graph::new(28, &pairs).expect("coxeter is simple")
}

/// Twelve-vertex demonstration system of two cycle forests on one vertex
/// set: forest A is three squares over consecutive vertices, forest B three
/// squares weaving between them. Every vertex has degree four, and neither
/// forest alone spans.
pub fn interleaved_cycles12() -> (Graph, LayerPartition) {
    let a_edges: [(u32, u32); 12] = [
        (0, 1),
        (1, 2),
        (2, 3),
        (3, 0),
        (4, 5),
        (5, 6),
        (6, 7),
        (7, 4),
        (8, 9),
        (9, 10),
        (10, 11),
        (11, 8),
    ];
    let b_edges: [(u32, u32); 12] = [
        (0, 5),
        (5, 10),
        (10, 4),
        (4, 0),
        (1, 8),
        (8, 3),
        (3, 11),
        (11, 1),
        (2, 6),
        (6, 9),
        (9, 7),
        (7, 2),
    ];
    let mut pairs = Vec::new();
    pairs.extend_from_slice(&a_edges);
    pairs.extend_from_slice(&b_edges);
    let graph = Graph::new(12, &pairs).expect("demo system is simple");
    let mut layer_of = vec![Layer::A; 12];
    layer_of.extend(vec![Layer::B; 12]);
    (graph, LayerPartition::new(layer_of))
}

/// Looks up a named demo instance.
pub fn by_name(name: &str) -> Option<Graph> {
    match name {
        "k4" => Some(k4()),
        "k5" => Some(k5()),
        "c4" => Some(cycle(4)),
        "octahedron" => Some(octahedron()),
        "petersen" => Some(petersen()),
        "coxeter" => Some(coxeter()),
        "cycles12" => Some(interleaved_cycles12().0),
        _ => None,
    }
}

pub const DEMO_NAMES: [&str; 7] = [
    "k4",
    "k5",
    "c4",
    "octahedron",
    "petersen",
    "coxeter",
    "cycles12",
];

#[cfg(test)]
mod tests {
    use super::*;

    fn girth(g: &Graph) -> usize {
        // Shortest cycle by BFS from every vertex.
        let n = g.vertex_count();
        let mut best = usize::MAX;
        for s in 0..n as u32 {
            let mut dist = vec![usize::MAX; n];
            let mut parent = vec![u32::MAX; n];
            dist[s as usize] = 0;
            let mut q = std::collections::VecDeque::from([s]);
            while let Some(v) = q.pop_front() {
                for &(w, _) in g.neighbors(v) {
                    if dist[w as usize] == usize::MAX {
                        dist[w as usize] = dist[v as usize] + 1;
                        parent[w as usize] = v;
                        q.push_back(w);
                    } else if parent[v as usize] != w {
                        best = best.min(dist[v as usize] + dist[w as usize] + 1);
                    }
                }
            }
        }
        best
    }

    #[test]
    fn octahedron_is_four_regular() {
        let g = octahedron();
        assert_eq!(g.vertex_count(), 6);
        assert_eq!(g.edge_count(), 12);
        assert!((0..6).all(|v| g.degree(v) == 4));
        assert!(g.is_connected());
    }

    #[test]
    fn petersen_shape() {
        let g = petersen();
        assert_eq!(g.vertex_count(), 10);
        assert!((0..10).all(|v| g.degree(v) == 3));
        assert_eq!(girth(&g), 5);
    }

    #[test]
    fn coxeter_shape() {
        let g = coxeter();
        assert_eq!(g.vertex_count(), 28);
        assert_eq!(g.edge_count(), 42);
        assert!((0..28).all(|v| g.degree(v) == 3));
        assert!(g.is_connected());
        assert_eq!(girth(&g), 7);
    }

    #[test]
    fn demo_cycle_system_is_four_regular_with_valid_layers() {
        let (g, p) = interleaved_cycles12();
        assert!((0..12).all(|v| g.degree(v) == 4));
        assert!(g.is_connected());
        for l in [Layer::A, Layer::B] {
            assert_eq!(p.layer_max_degree(&g, l), 2);
            assert_eq!(p.layer_cycles(&g, l).len(), 3);
        }
    }
}
