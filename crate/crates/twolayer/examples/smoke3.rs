use twolayer::embed::{embed_degree3, embed_degree4, embed_degree4_ortho};
use twolayer::verify::{verify_drawing, VerifyRules};
use twolayer::{gen, Graph};

fn enumerate_connected(n: usize, max_deg: usize, mut f: impl FnMut(&Graph)) {
    let slots: Vec<(u32, u32)> = (0..n as u32)
        .flat_map(|u| ((u + 1)..n as u32).map(move |v| (u, v)))
        .collect();
    let m = slots.len();
    for mask in 0u64..(1u64 << m) {
        let pairs: Vec<(u32, u32)> = (0..m)
            .filter(|i| (mask >> i) & 1 == 1)
            .map(|i| slots[i])
            .collect();
        let Ok(g) = Graph::new(n, &pairs) else { continue };
        if g.max_degree() > max_deg || !g.is_connected() {
            continue;
        }
        f(&g);
    }
}

fn main() {
    let t0 = std::time::Instant::now();
    // exhaustive deg-4 n<=6 (n=7 saved for the real acceptance run in release)
    let mut count = 0usize;
    let mut fails = 0usize;
    for n in 2..=6usize {
        enumerate_connected(n, 4, |g| {
            count += 1;
            let (d, p) = embed_degree4(g).expect("embed");
            let r = verify_drawing(&d, g, &p, VerifyRules::degree4()).unwrap();
            if !r.ok { fails += 1; if fails <= 3 { eprintln!("D4 FAIL {:?}: {}", g.edges(), r.violations[0].detail); } }
            let (d2, p2) = embed_degree4_ortho(g).expect("ortho");
            let r2 = verify_drawing(&d2, g, &p2, VerifyRules::degree4()).unwrap();
            if !r2.ok { fails += 1; if fails <= 6 { eprintln!("OR FAIL {:?}: {}", g.edges(), r2.violations[0].detail); } }
        });
    }
    println!("exhaustive deg4 n<=6: {count} graphs, {fails} fails [{:?}]", t0.elapsed());

    let t0 = std::time::Instant::now();
    let mut count = 0usize;
    let mut fails = 0usize;
    for n in 2..=7usize {
        enumerate_connected(n, 3, |g| {
            count += 1;
            let (d, p) = embed_degree3(g).expect("embed3");
            let r = verify_drawing(&d, g, &p, VerifyRules::degree3()).unwrap();
            if !r.ok { fails += 1; if fails <= 3 { eprintln!("D3 FAIL {:?}: {}", g.edges(), r.violations[0].detail); } }
        });
    }
    println!("exhaustive deg3 n<=7: {count} graphs, {fails} fails [{:?}]", t0.elapsed());

    // random 4-regular up to n=100
    let t0 = std::time::Instant::now();
    let mut fails = 0;
    for seed in 0..100u64 {
        let n = 10 + (seed as usize * 7) % 91;
        let g = gen::random_regular_connected(n, 4, seed);
        let (d, p) = embed_degree4(&g).unwrap();
        let r = verify_drawing(&d, &g, &p, VerifyRules::degree4()).unwrap();
        if !r.ok { fails += 1; eprintln!("4reg n={n} seed={seed}: {}", r.violations[0].detail); }
    }
    println!("random 4-regular up to n=100: fails={fails}/100 [{:?}]", t0.elapsed());

    // random cubic-ish large for deg3
    let t0 = std::time::Instant::now();
    let mut fails = 0;
    for seed in 0..100u64 {
        let n = 4 + (seed as usize * 13) % 197;
        let g = gen::random_connected_bounded(n, 3, seed);
        let (d, p) = embed_degree3(&g).unwrap();
        let r = verify_drawing(&d, &g, &p, VerifyRules::degree3()).unwrap();
        if !r.ok { fails += 1; }
    }
    println!("random deg3 up to n=200: fails={fails}/100 [{:?}]", t0.elapsed());
}
