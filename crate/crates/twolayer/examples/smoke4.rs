use twolayer::decompose::{cycle_structure, paths_and_cycles_deg4, Layer};
use twolayer::embed::cycles::{order_and_assign_nth, Assigned};
use twolayer::gen;

fn main() {
    // find the failing seed
    for seed in 0..100u64 {
        let n = 10 + (seed as usize * 7) % 91;
        if n != 38 { continue; }
        let g = gen::random_regular_connected(n, 4, seed);
        if twolayer::embed::embed_degree4(&g).is_ok() { continue; }
        println!("seed={seed} n={n} fails");
        let p = paths_and_cycles_deg4(&g).unwrap();
        let cs_a = cycle_structure(&p, &g, Layer::A).unwrap();
        let cs_b = cycle_structure(&p, &g, Layer::B).unwrap();
        println!("A cycles: {:?}", cs_a.cycles.iter().map(|c| c.vertices.len()).collect::<Vec<_>>());
        println!("B cycles: {:?}", cs_b.cycles.iter().map(|c| c.vertices.len()).collect::<Vec<_>>());
        let mut choices = 0;
        while let Ok(Some(a)) = order_and_assign_nth(&g, &cs_a, &cs_b, choices) {
            match a {
                Assigned::Ordered(ca) => {
                    if choices == 0 {
                        println!("order: {:?}", ca.order.iter().map(|c| (c.role_x, c.len())).collect::<Vec<_>>());
                        println!("c0 len={} c1 len={}", ca.order[0].len(), ca.order[1].len());
                    }
                }
                Assigned::TwoSpanningCycles => println!("two-spanning"),
            }
            choices += 1;
        }
        println!("total c0 choices: {choices}");
        break;
    }
}
