use ctxgraph::graph::Graph;
use ctxgraph::theta::{theta_cycle, theta_anticycle, theta_sdp};
use std::time::Instant;

fn main() {
    for n in [5usize, 7, 9, 11] {
        let g = Graph::cycle(n).unwrap();
        let t0 = Instant::now();
        let t = theta_sdp(&g, 1e-6).unwrap();
        let cf = theta_cycle(n).unwrap().value;
        println!("C{n}: sdp={:.8} cf={:.8} err={:.2e} gap={:.2e} in {:?}", t.value, cf, (t.value-cf).abs(), t.certified_gap, t0.elapsed());
    }
    for n in [7usize, 9, 11] {
        let g = Graph::cycle(n).unwrap().complement();
        let t0 = Instant::now();
        let t = theta_sdp(&g, 1e-6).unwrap();
        let cf = theta_anticycle(n).unwrap().value;
        println!("C~{n}: sdp={:.8} cf={:.8} err={:.2e} gap={:.2e} in {:?}", t.value, cf, (t.value-cf).abs(), t.certified_gap, t0.elapsed());
    }
    let g = Graph::circulant(8, &[1,4]).unwrap();
    let t0 = Instant::now();
    let t = theta_sdp(&g, 1e-6).unwrap();
    println!("Ci8(1,4): sdp={:.8} want={:.8} gap={:.2e} in {:?}", t.value, 2.0+2f64.sqrt(), t.certified_gap, t0.elapsed());
    // a structureless graph: petersen (no shift symmetry)
    let pet = Graph::johnson(5,2).unwrap().complement();
    let t0 = Instant::now();
    let t = theta_sdp(&pet, 1e-6).unwrap();
    println!("petersen: sdp={:.8} want=4 gap={:.2e} in {:?}", t.value, t.certified_gap, t0.elapsed());
    // larger: mermin graph n=16
    let mer = Graph::shrikhande().complement();
    let t0 = Instant::now();
    let t = theta_sdp(&mer, 1e-6).unwrap();
    println!("mermin16: sdp={:.8} gap={:.2e} in {:?}", t.value, t.certified_gap, t0.elapsed());
    // product C5*C5 (25 vertices)
    let c5 = Graph::cycle(5).unwrap();
    let p = c5.disjunctive_product(&c5).unwrap();
    let t0 = Instant::now();
    let t = theta_sdp(&p, 1e-6).unwrap();
    println!("C5*C5 (25): sdp={:.8} want=5 gap={:.2e} in {:?}", t.value, t.certified_gap, t0.elapsed());
}
