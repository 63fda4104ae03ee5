use twolayer::embed::{embed_degree4, embed_degree4_ortho, embed_pair};
use twolayer::verify::{verify_drawing, VerifyRules};
use twolayer::{gen, Graph};
use rayon::prelude::*;

fn main() {
    // exhaustive n=7 deg<=4 straight+ortho (the big one)
    let t0 = std::time::Instant::now();
    let slots: Vec<(u32, u32)> = (0..7u32).flat_map(|u| ((u + 1)..7).map(move |v| (u, v))).collect();
    let m = slots.len();
    let fails: usize = (0u64..(1u64 << m)).into_par_iter().map(|mask| {
        let pairs: Vec<(u32, u32)> = (0..m).filter(|i| (mask >> i) & 1 == 1).map(|i| slots[i]).collect();
        let Ok(g) = Graph::new(7, &pairs) else { return 0 };
        if g.max_degree() > 4 || !g.is_connected() { return 0; }
        let mut bad = 0;
        let (d, p) = embed_degree4(&g).expect("embed");
        if !verify_drawing(&d, &g, &p, VerifyRules::degree4()).unwrap().ok { bad += 1; }
        let (d2, p2) = embed_degree4_ortho(&g).expect("ortho");
        if !verify_drawing(&d2, &g, &p2, VerifyRules::degree4()).unwrap().ok { bad += 1; }
        bad
    }).sum();
    println!("exhaustive deg4 n=7 both modes: fails={fails} [{:?}]", t0.elapsed());

    // 500 random pairs n=50
    let t0 = std::time::Instant::now();
    let fails: usize = (0u64..500).into_par_iter().map(|seed| {
        let (g, p) = gen::random_two_layer_pair(50, seed);
        let d = embed_pair(&g, &p).unwrap();
        let r = verify_drawing(&d, &g, &p, VerifyRules::degree4()).unwrap();
        (!r.ok) as usize
    }).sum();
    println!("pairs n=50 x500: fails={fails} [{:?}]", t0.elapsed());

    // 1000 random 4-regular n<=100
    let t0 = std::time::Instant::now();
    let results: Vec<(usize, u64, bool, usize)> = (0u64..1000).into_par_iter().map(|seed| {
        let n = 6 + (seed as usize * 13) % 95;
        let g = gen::random_regular_connected(n, 4, seed);
        let (d, p) = embed_degree4(&g).unwrap();
        let r = verify_drawing(&d, &g, &p, VerifyRules::degree4()).unwrap();
        let bits = d.extent.bits() as usize;
        (n, seed, r.ok, bits)
    }).collect();
    let fails = results.iter().filter(|r| !r.2).count();
    let maxbits = results.iter().map(|r| r.3).max().unwrap();
    println!("4-regular x1000 n<=100: fails={fails} max extent bits={maxbits} [{:?}]", t0.elapsed());
}
