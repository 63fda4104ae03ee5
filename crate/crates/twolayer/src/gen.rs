//! Seeded random graph generators for tests, benchmarks and the examples.
//! Everything is deterministic in the seed.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::decompose::{Layer, LayerPartition};
use crate::graph::Graph;

/// Connected graph with every degree at most `max_degree` (at least a tree).
pub fn random_connected_bounded(n: usize, max_degree: usize, seed: u64) -> Graph {
    assert!(n >= 1 && max_degree >= 2);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut deg = vec![0usize; n];
    let mut pairs: Vec<(u32, u32)> = Vec::new();
    let mut in_tree: Vec<u32> = vec![0];
    let mut outside: Vec<u32> = (1..n as u32).collect();
    outside.shuffle(&mut rng);
    // Random tree first, respecting the cap.
    for &v in &outside {
        let candidates: Vec<u32> = in_tree
            .iter()
            .copied()
            .filter(|&u| deg[u as usize] < max_degree.min(3))
            .collect();
        let u = *candidates
            .choose(&mut rng)
            .or_else(|| in_tree.last())
            .unwrap();
        pairs.push((u, v));
        deg[u as usize] += 1;
        deg[v as usize] += 1;
        in_tree.push(v);
    }
    // Sprinkle extra edges under the cap.
    let extra_attempts = n * max_degree;
    let mut seen: std::collections::HashSet<(u32, u32)> = pairs
        .iter()
        .map(|&(u, v)| (u.min(v), u.max(v)))
        .collect();
    for _ in 0..extra_attempts {
        let u = rng.gen_range(0..n as u32);
        let v = rng.gen_range(0..n as u32);
        if u == v || deg[u as usize] >= max_degree || deg[v as usize] >= max_degree {
            continue;
        }
        let key = (u.min(v), u.max(v));
        if seen.insert(key) {
            pairs.push((u, v));
            deg[u as usize] += 1;
            deg[v as usize] += 1;
        }
    }
    Graph::new(n, &pairs).expect("generator keeps the graph simple")
}

/// Connected d-regular graph by repeated pairing; panics only if n*d is odd
/// or n is too small for the degree.
pub fn random_regular_connected(n: usize, d: usize, seed: u64) -> Graph {
    assert!(n > d && (n * d) % 2 == 0, "no {d}-regular graph on {n} vertices");
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    'outer: for _ in 0..10_000 {
        // Configuration model: shuffle degree stubs, pair them up.
        let mut stubs: Vec<u32> = (0..n as u32).flat_map(|v| std::iter::repeat(v).take(d)).collect();
        stubs.shuffle(&mut rng);
        let mut seen = std::collections::HashSet::new();
        let mut pairs = Vec::with_capacity(n * d / 2);
        for chunk in stubs.chunks(2) {
            let (u, v) = (chunk[0], chunk[1]);
            if u == v || !seen.insert((u.min(v), u.max(v))) {
                continue 'outer;
            }
            pairs.push((u, v));
        }
        let g = Graph::new(n, &pairs).expect("pairing is simple");
        if g.is_connected() {
            return g;
        }
    }
    panic!("failed to sample a connected {d}-regular graph on {n} vertices");
}

/// Two maximum-degree-two layers on the same vertex set whose union is a
/// connected simple graph: the raw input of the pair embedder.
pub fn random_two_layer_pair(n: usize, seed: u64) -> (Graph, LayerPartition) {
    assert!(n >= 2);
    let _rng = ChaCha8Rng::seed_from_u64(seed);
    for round in 0..10_000u64 {
        let mut rng = ChaCha8Rng::seed_from_u64(seed.wrapping_add(round.wrapping_mul(0x9e37)));
        let mut pairs: Vec<(u32, u32)> = Vec::new();
        let mut layers: Vec<Layer> = Vec::new();
        let mut seen = std::collections::HashSet::new();
        for layer in [Layer::A, Layer::B] {
            // A random union of paths and cycles: shuffle, cut into pieces,
            // close some pieces into cycles.
            let mut verts: Vec<u32> = (0..n as u32).collect();
            verts.shuffle(&mut rng);
            let mut at = 0usize;
            while at < n {
                let remaining = n - at;
                let len = rng.gen_range(1..=remaining);
                let piece = &verts[at..at + len];
                for w in piece.windows(2) {
                    pairs.push((w[0], w[1]));
                    layers.push(layer);
                }
                if len >= 3 && rng.gen_bool(0.5) {
                    pairs.push((piece[len - 1], piece[0]));
                    layers.push(layer);
                }
                at += len;
            }
        }
        for &(u, v) in &pairs {
            if !seen.insert((u.min(v), u.max(v))) {
                pairs.clear();
                break;
            }
        }
        if pairs.is_empty() {
            continue;
        }
        let g = Graph::new(n, &pairs).expect("deduplicated");
        if g.is_connected() {
            return (g, LayerPartition::new(layers));
        }
    }
    panic!("failed to sample a connected two-layer pair on {n} vertices");
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn bounded_generator_respects_cap() {
        for seed in 0..20 {
            let g = random_connected_bounded(40, 3, seed);
            assert!(g.is_connected());
            assert!(g.max_degree() <= 3);
        }
    }

    #[test]
    fn regular_generator_is_regular() {
        let g = random_regular_connected(20, 4, 7);
        assert!(g.is_connected());
        assert!((0..20).all(|v| g.degree(v) == 4));
    }

    #[test]
    fn two_layer_pairs_are_valid() {
        for seed in 0..20 {
            let (g, p) = random_two_layer_pair(12, seed);
            assert!(g.is_connected());
            assert!(p.layer_max_degree(&g, Layer::A) <= 2);
            assert!(p.layer_max_degree(&g, Layer::B) <= 2);
        }
    }

    #[test]
    fn generators_are_deterministic() {
        let a = random_connected_bounded(30, 3, 5);
        let b = random_connected_bounded(30, 3, 5);
        assert_eq!(a.edges(), b.edges());
    }
}
