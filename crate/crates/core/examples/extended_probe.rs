use ctxgraph::graph::Graph;
use ctxgraph::eprinciple::{e_bound, EBudget};
use std::time::Instant;

fn main() {
    let g = Graph::cycle(7).unwrap().complement();
    let t0 = Instant::now();
    match e_bound(&g, 3, &EBudget::extended()) {
        Ok((v, p)) => println!("C~7^*3: p={p} value={v:.7} (want 2.1823611) in {:?}", t0.elapsed()),
        Err(e) => println!("C~7^*3 failed after {:?}: {e}", t0.elapsed()),
    }
}
