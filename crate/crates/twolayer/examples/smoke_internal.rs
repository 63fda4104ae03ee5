use twolayer::decompose::Layer;
use twolayer::embed::{embed_degree4, embed_degree4_ortho, embed_pair, embed_pair_logged};
use twolayer::verify::{verify_drawing, VerifyRules};
use twolayer::{gen, instances};

fn main() {
    // K5 (degenerate two-spanning-cycle case expected)
    for (name, g) in [
        ("k5", instances::k5()),
        ("octahedron", instances::octahedron()),
        ("c4", instances::cycle(4)),
        ("k4", instances::k4()),
    ] {
        let (d, p) = embed_degree4(&g).expect(name);
        let r = verify_drawing(&d, &g, &p, VerifyRules::degree4()).unwrap();
        println!("{name}: extent={} ok={} violations={}", d.extent, r.ok, r.violations.len());
        for v in r.violations.iter().take(4) { println!("   {:?} {}", v.kind, v.detail); }
        let (d2, _) = embed_degree4_ortho(&g).expect(name);
        let r2 = verify_drawing(&d2, &g, &p, VerifyRules::degree4()).unwrap();
        println!("{name} ortho: extent={} ok={}", d2.extent, r2.ok);
        for v in r2.violations.iter().take(4) { println!("   {:?} {}", v.kind, v.detail); }
    }
    // the 12-vertex demo system with its fixed partition
    let (g, p) = instances::interleaved_cycles12();
    let (d, run) = embed_pair_logged(&g, &p).expect("cycles12");
    let r = verify_drawing(&d, &g, &p, VerifyRules::degree4()).unwrap();
    println!("cycles12: extent={} ok={} degenerate={}", d.extent, r.ok, run.degenerate);
    for v in r.violations.iter().take(8) { println!("   {:?} {}", v.kind, v.detail); }
    println!("cycle order:");
    for (i, c) in run.assignment.order.iter().enumerate() {
        println!("  c{i}: layer={:?} role_x={} verts={:?}", c.layer, c.role_x, c.verts);
    }
    // random 4-regular
    let mut fails = 0;
    for seed in 0..50u64 {
        let g = gen::random_regular_connected(20, 4, seed);
        let (d, p) = embed_degree4(&g).unwrap();
        let r = verify_drawing(&d, &g, &p, VerifyRules::degree4()).unwrap();
        if !r.ok { fails += 1; if fails < 3 { println!("seed {seed} FAIL: {:?}", r.violations.iter().take(3).map(|v| &v.detail).collect::<Vec<_>>()); } }
    }
    println!("random 4-regular n=20: fails={fails}/50");
    // random two-layer pairs
    let mut fails = 0;
    for seed in 0..50u64 {
        let (g, p) = gen::random_two_layer_pair(15, seed);
        let d = embed_pair(&g, &p).unwrap();
        let r = verify_drawing(&d, &g, &p, VerifyRules::degree4()).unwrap();
        if !r.ok { fails += 1; if fails < 3 { println!("pair seed {seed} FAIL: {:?}", r.violations.iter().take(3).map(|v| &v.detail).collect::<Vec<_>>()); } }
        let _ = Layer::A;
    }
    println!("random pairs n=15: fails={fails}/50");
}
