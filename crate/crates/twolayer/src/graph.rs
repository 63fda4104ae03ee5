//! Simple undirected graphs with stable edge ids, plus the traversal
//! primitives everything downstream leans on: depth-first search and
//! Euler tours over an even-degree multigraph working copy.

use crate::Error;

/// Immutable undirected simple graph. Vertices are dense ids `0..n`,
/// edge ids follow input order, adjacency lists preserve input order.
#[derive(Debug, Clone)]
pub struct Graph {
    n: usize,
    edges: Vec<(u32, u32)>,
    adj: Vec<Vec<(u32, usize)>>,
}

impl Graph {
    /// Builds a graph, rejecting self-loops, duplicate edges and
    /// out-of-range endpoints.
    pub fn new(n: usize, pairs: &[(u32, u32)]) -> Result<Graph, Error> {
        let mut adj: Vec<Vec<(u32, usize)>> = vec![Vec::new(); n];
        let mut edges = Vec::with_capacity(pairs.len());
        let mut seen = std::collections::HashSet::with_capacity(pairs.len());
        for (id, &(u, v)) in pairs.iter().enumerate() {
            if u as usize >= n || v as usize >= n {
                return Err(Error::VertexOutOfRange { u, v, n });
            }
            if u == v {
                return Err(Error::SelfLoop { v });
            }
            let key = (u.min(v), u.max(v));
            if !seen.insert(key) {
                return Err(Error::DuplicateEdge { u, v });
            }
            adj[u as usize].push((v, id));
            adj[v as usize].push((u, id));
            edges.push((u, v));
        }
        Ok(Graph { n, edges, adj })
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[(u32, u32)] {
        &self.edges
    }

    pub fn edge(&self, id: usize) -> (u32, u32) {
        self.edges[id]
    }

    pub fn neighbors(&self, v: u32) -> &[(u32, usize)] {
        &self.adj[v as usize]
    }

    pub fn degree(&self, v: u32) -> usize {
        self.adj[v as usize].len()
    }

    pub fn max_degree(&self) -> usize {
        (0..self.n).map(|v| self.adj[v].len()).max().unwrap_or(0)
    }

    /// Vertex sets of the connected components, each sorted ascending;
    /// components ordered by smallest member.
    pub fn components(&self) -> Vec<Vec<u32>> {
        let mut seen = vec![false; self.n];
        let mut out = Vec::new();
        for start in 0..self.n {
            if seen[start] {
                continue;
            }
            let mut comp = vec![start as u32];
            seen[start] = true;
            let mut queue = std::collections::VecDeque::from([start as u32]);
            while let Some(v) = queue.pop_front() {
                for &(w, _) in self.neighbors(v) {
                    if !seen[w as usize] {
                        seen[w as usize] = true;
                        comp.push(w);
                        queue.push_back(w);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.components().len() <= 1
    }
}

/// Rooted DFS tree over a connected graph.
#[derive(Debug, Clone)]
pub struct DfsTree {
    pub root: u32,
    /// `parent[v] = (parent vertex, tree edge id)`, `None` for the root.
    pub parent: Vec<Option<(u32, usize)>>,
    pub depth: Vec<u32>,
    /// Discovery time per vertex (0 for the root).
    pub disc: Vec<u32>,
    /// Non-tree edge ids ordered by discovery of their bottom endpoints,
    /// ties broken by adjacency order at the bottom endpoint.
    pub non_tree_edges: Vec<usize>,
}

impl DfsTree {
    pub fn tree_edge_count(&self) -> usize {
        self.parent.iter().filter(|p| p.is_some()).count()
    }

    /// The endpoint of a non-tree edge discovered later ("bottom").
    pub fn bottom_of(&self, g: &Graph, edge_id: usize) -> u32 {
        let (u, v) = g.edge(edge_id);
        if self.disc[u as usize] > self.disc[v as usize] {
            u
        } else {
            v
        }
    }
}

/// Iterative DFS; adjacency lists are scanned in input order so the result
/// is deterministic. Errors if some vertex is unreachable from the root.
pub fn dfs(g: &Graph, root: u32) -> Result<DfsTree, Error> {
    let n = g.vertex_count();
    assert!((root as usize) < n, "root out of range");
    let mut parent = vec![None; n];
    let mut depth = vec![0u32; n];
    let mut disc = vec![u32::MAX; n];
    let mut order = Vec::with_capacity(n);
    let mut clock = 0u32;

    // Stack holds (vertex, adjacency cursor).
    let mut stack = vec![(root, 0usize)];
    disc[root as usize] = 0;
    order.push(root);
    clock += 1;
    while let Some(top) = stack.last_mut() {
        let v = top.0;
        let adj = g.neighbors(v);
        if top.1 >= adj.len() {
            stack.pop();
            continue;
        }
        let (w, eid) = adj[top.1];
        top.1 += 1;
        if disc[w as usize] == u32::MAX {
            disc[w as usize] = clock;
            clock += 1;
            order.push(w);
            depth[w as usize] = depth[v as usize] + 1;
            parent[w as usize] = Some((v, eid));
            stack.push((w, 0));
        }
    }

    if let Some(unreached) = (0..n).find(|&v| disc[v] == u32::MAX) {
        return Err(Error::Disconnected {
            unreached: unreached as u32,
        });
    }

    // Collect non-tree edges in discovery order of their bottom endpoints.
    let mut non_tree_edges = Vec::new();
    let tree_edge = |v: u32| parent[v as usize].map(|(_, e)| e);
    for &v in &order {
        for &(w, eid) in g.neighbors(v) {
            if tree_edge(v) == Some(eid) || tree_edge(w) == Some(eid) {
                continue;
            }
            if disc[w as usize] < disc[v as usize] {
                non_tree_edges.push(eid);
            }
        }
    }

    Ok(DfsTree {
        root,
        parent,
        depth,
        disc,
        non_tree_edges,
    })
}

/// Multigraph working copy used for eulerization; parallel edges allowed.
/// Edge ids `0..real_edge_count` coincide with the source graph's ids.
#[derive(Debug, Clone)]
pub struct Multigraph {
    pub n: usize,
    pub edges: Vec<(u32, u32)>,
    adj: Vec<Vec<(u32, usize)>>,
}

impl Multigraph {
    pub fn new(n: usize) -> Multigraph {
        Multigraph {
            n,
            edges: Vec::new(),
            adj: vec![Vec::new(); n],
        }
    }

    pub fn from_graph(g: &Graph) -> Multigraph {
        let mut m = Multigraph::new(g.vertex_count());
        for &(u, v) in g.edges() {
            m.add_edge(u, v);
        }
        m
    }

    pub fn add_vertex(&mut self) -> u32 {
        self.adj.push(Vec::new());
        self.n += 1;
        (self.n - 1) as u32
    }

    pub fn add_edge(&mut self, u: u32, v: u32) -> usize {
        let id = self.edges.len();
        self.edges.push((u, v));
        self.adj[u as usize].push((v, id));
        self.adj[v as usize].push((u, id));
        id
    }

    /// Removes the most recently added edge. Supports eulerization's
    /// subdivision step only; ids of earlier edges are untouched.
    pub fn pop_edge(&mut self) {
        let (u, v) = self.edges.pop().expect("pop on empty edge list");
        let id = self.edges.len();
        self.adj[u as usize].retain(|&(_, e)| e != id);
        self.adj[v as usize].retain(|&(_, e)| e != id);
    }

    pub fn degree(&self, v: u32) -> usize {
        self.adj[v as usize].len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }
}

/// Closed Euler tour: edge ids in traversal order.
#[derive(Debug, Clone)]
pub struct EulerTour {
    pub sequence: Vec<usize>,
    pub start: u32,
    pub is_closed: bool,
}

/// Hierholzer's algorithm. Requires every degree even and all edges in one
/// connected component; runs in time linear in the edge count.
pub fn euler_tour(mg: &Multigraph) -> Result<EulerTour, Error> {
    if let Some(v) = (0..mg.n).find(|&v| mg.degree(v as u32) % 2 != 0) {
        return Err(Error::OddDegree { v: v as u32 });
    }
    let start = match (0..mg.n).find(|&v| mg.degree(v as u32) > 0) {
        Some(v) => v as u32,
        None => {
            return Ok(EulerTour {
                sequence: Vec::new(),
                start: 0,
                is_closed: true,
            })
        }
    };

    let m = mg.edge_count();
    let mut used = vec![false; m];
    let mut cursor = vec![0usize; mg.n];
    // (vertex, edge that led here)
    let mut stack: Vec<(u32, Option<usize>)> = vec![(start, None)];
    let mut circuit: Vec<(u32, Option<usize>)> = Vec::with_capacity(m + 1);
    while let Some(&(v, ein)) = stack.last() {
        let adj = &mg.adj[v as usize];
        let mut cur = cursor[v as usize];
        while cur < adj.len() && used[adj[cur].1] {
            cur += 1;
        }
        cursor[v as usize] = cur;
        if cur == adj.len() {
            circuit.push((v, ein));
            stack.pop();
        } else {
            let (w, eid) = adj[cur];
            used[eid] = true;
            stack.push((w, Some(eid)));
        }
    }

    if let Some(unused) = used.iter().position(|u| !u) {
        let (u, _) = mg.edges[unused];
        return Err(Error::Disconnected { unreached: u });
    }

    circuit.reverse();
    let sequence: Vec<usize> = circuit.iter().filter_map(|&(_, e)| e).collect();
    debug_assert_eq!(sequence.len(), m);
    let is_closed = circuit.first().map(|&(v, _)| v) == circuit.last().map(|&(v, _)| v);
    Ok(EulerTour {
        sequence,
        start,
        is_closed,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    pub(crate) fn k4() -> Graph {
        Graph::new(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]).unwrap()
    }

    #[test]
    fn k4_builds_with_degree_three() {
        let g = k4();
        assert_eq!(g.vertex_count(), 4);
        assert_eq!(g.edge_count(), 6);
        assert!((0..4).all(|v| g.degree(v) == 3));
    }

    #[test]
    fn single_edge_degrees() {
        let g = Graph::new(2, &[(0, 1)]).unwrap();
        assert_eq!(g.degree(0), 1);
        assert_eq!(g.degree(1), 1);
    }

    #[test]
    fn duplicate_edge_rejected() {
        let err = Graph::new(3, &[(0, 1), (0, 1)]).unwrap_err();
        assert!(matches!(err, Error::DuplicateEdge { u: 0, v: 1 }));
        let err = Graph::new(3, &[(0, 1), (1, 0)]).unwrap_err();
        assert!(matches!(err, Error::DuplicateEdge { .. }));
    }

    #[test]
    fn self_loop_and_range_rejected() {
        assert!(matches!(
            Graph::new(3, &[(1, 1)]),
            Err(Error::SelfLoop { v: 1 })
        ));
        assert!(matches!(
            Graph::new(2, &[(0, 2)]),
            Err(Error::VertexOutOfRange { .. })
        ));
    }

    #[test]
    fn dfs_k4_edge_counts() {
        let g = k4();
        let t = dfs(&g, 0).unwrap();
        assert_eq!(t.tree_edge_count(), 3);
        assert_eq!(t.non_tree_edges.len(), 3);
    }

    #[test]
    fn dfs_path_depths() {
        let g = Graph::new(3, &[(0, 1), (1, 2)]).unwrap();
        let t = dfs(&g, 0).unwrap();
        assert_eq!(t.depth, vec![0, 1, 2]);
        assert!(t.non_tree_edges.is_empty());
    }

    #[test]
    fn dfs_triangle_closes_at_root() {
        let g = Graph::new(3, &[(0, 1), (0, 2), (1, 2)]).unwrap();
        let t = dfs(&g, 0).unwrap();
        assert_eq!(t.tree_edge_count(), 2);
        assert_eq!(t.non_tree_edges.len(), 1);
        let nt = t.non_tree_edges[0];
        let (u, v) = g.edge(nt);
        assert!(u == 0 || v == 0, "the non-tree edge closes at the root");
    }

    #[test]
    fn dfs_disconnected_names_unreached() {
        let g = Graph::new(4, &[(0, 1), (2, 3)]).unwrap();
        let err = dfs(&g, 0).unwrap_err();
        assert!(matches!(err, Error::Disconnected { unreached: 2 }));
    }

    #[test]
    fn euler_tour_c4() {
        let g = Graph::new(4, &[(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap();
        let tour = euler_tour(&Multigraph::from_graph(&g)).unwrap();
        assert_eq!(tour.sequence.len(), 4);
        assert!(tour.is_closed);
        let mut ids = tour.sequence.clone();
        ids.sort_unstable();
        assert_eq!(ids, vec![0, 1, 2, 3]);
    }

    #[test]
    fn euler_tour_k5_closed_length_ten() {
        let mut pairs = Vec::new();
        for u in 0..5u32 {
            for v in (u + 1)..5 {
                pairs.push((u, v));
            }
        }
        let g = Graph::new(5, &pairs).unwrap();
        let tour = euler_tour(&Multigraph::from_graph(&g)).unwrap();
        assert_eq!(tour.sequence.len(), 10);
        assert!(tour.is_closed);
    }

    #[test]
    fn euler_tour_star_odd_degree() {
        let g = Graph::new(4, &[(0, 1), (0, 2), (0, 3)]).unwrap();
        let err = euler_tour(&Multigraph::from_graph(&g)).unwrap_err();
        assert!(matches!(err, Error::OddDegree { .. }));
    }

    #[test]
    fn euler_tour_replay_consistency() {
        // Consecutive tour edges share a vertex and the walk closes up.
        let mut pairs = Vec::new();
        for u in 0..5u32 {
            for v in (u + 1)..5 {
                pairs.push((u, v));
            }
        }
        let g = Graph::new(5, &pairs).unwrap();
        let mg = Multigraph::from_graph(&g);
        let tour = euler_tour(&mg).unwrap();
        let mut at = tour.start;
        for &eid in &tour.sequence {
            let (u, v) = mg.edges[eid];
            at = if u == at {
                v
            } else {
                assert_eq!(v, at, "tour edges must chain");
                u
            };
        }
        assert_eq!(at, tour.start);
    }
}
