use twolayer::decompose::{cycle_structure, paths_and_cycles_deg4, Layer};
use twolayer::embed::embed_degree4_ortho;
use twolayer::instances;

fn main() {
    let g = instances::k4();
    let p = paths_and_cycles_deg4(&g).unwrap();
    for l in [Layer::A, Layer::B] {
        println!("layer {:?}: {:?}", l, p.layer_edges(l).iter().map(|&e| g.edge(e)).collect::<Vec<_>>());
        let cs = cycle_structure(&p, &g, l).unwrap();
        for c in &cs.cycles {
            println!("  cycle verts={:?} edges={:?}", c.vertices, c.edges);
        }
    }
    let (d, _) = embed_degree4_ortho(&g).unwrap();
    for v in 0..4 {
        println!("pos[{v}] = {}", d.positions[v]);
    }
    for e in &d.edges {
        println!("edge {} {:?} layer={:?} geom={:?} segs={:?}", e.id, g.edge(e.id), e.layer, e.geometry,
            d.segments_of(&g, e).iter().map(|s| format!("{}-{}", s.a, s.b)).collect::<Vec<_>>());
    }
}
