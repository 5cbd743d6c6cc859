use ctxgraph::graph::Graph;
use ctxgraph::eprinciple::{e_bound, EBudget};
use std::time::Instant;

fn main() {
    let budget = EBudget::default();
    for (name, g, m) in [
        ("C5^*2", Graph::cycle(5).unwrap(), 2u32),
        ("C7^*2", Graph::cycle(7).unwrap(), 2),
        ("C7^*3", Graph::cycle(7).unwrap(), 3),
        ("C~7^*2", Graph::cycle(7).unwrap().complement(), 2),
    ] {
        let t0 = Instant::now();
        let (v, p) = e_bound(&g, m, &budget).unwrap();
        println!("{name}: p={p} value={v:.6} in {:?}", t0.elapsed());
    }
}
