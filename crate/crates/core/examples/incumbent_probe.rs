use ctxgraph::graph::Graph;
use ctxgraph::invariants::max_clique_pinned;
use std::time::Instant;

fn main() {
    let g = Graph::cycle(7).unwrap().complement();
    let p2 = g.disjunctive_power(2).unwrap();
    let c2 = max_clique_pinned(&p2, None, None).unwrap();
    println!("omega(power2) = {}", c2.len());
    let p3 = p2.disjunctive_product(&g).unwrap();
    println!("built power3: {} vertices", p3.n());
    let t0 = Instant::now();
    let c3 = max_clique_pinned(&p3, None, None).unwrap();
    println!("omega(power3) = {} in {:?}", c3.len(), t0.elapsed());
}
