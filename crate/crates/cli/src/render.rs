//! Human-readable output for every subcommand (the JSON path serializes the
//! same structures directly).

use ctxgraph::census::CensusReport;
use ctxgraph::eprinciple::EChain;
use ctxgraph::events::{Family, InequalityInstance};
use ctxgraph::orthorep::{handle_value, FaithfulnessReport, OrthonormalRepresentation};
use ctxgraph::report::AnalysisReport;
use ctxgraph::theta::{ThetaMethod, Verdict};

pub fn analysis(r: &AnalysisReport) {
    println!("graph: {} ({} vertices, {} edges)", r.graph, r.n, r.edges);
    if let Some(a) = r.alpha {
        println!("alpha (independence number): {a}");
    }
    if let Some(w) = r.omega {
        println!("omega (clique number): {w}");
    }
    if let Some(c) = r.chi {
        println!("chi (chromatic number): {c}");
    }
    if let Some(c) = &r.classification {
        let method = match c.theta.method {
            ThetaMethod::ClosedForm => "closed-form",
            ThetaMethod::Sdp => "sdp",
        };
        println!(
            "theta (Lovasz number): {:.7} ({method}, gap {:.1e})",
            c.theta.value, c.theta.certified_gap
        );
        let verdict = match c.verdict {
            Verdict::Qcg => "QCG (quantum contextual)",
            Verdict::Qncg => "QNCG (quantum noncontextual)",
            Verdict::Undecided => "undecided",
        };
        println!("classification: {verdict}, margin {:.7}", c.margin);
    }
    if let Some(p) = r.perfect {
        println!("perfect: {p}");
    }
    if let Some(m) = r.minimally_imperfect {
        println!("minimally imperfect: {m}");
    }
    match &r.hole {
        Some(w) => println!("smallest odd hole: {:?}", w.vertices),
        None if r.perfect.is_some() => println!("smallest odd hole: none"),
        None => {}
    }
    match &r.antihole {
        Some(w) => println!("smallest odd antihole (cycle in complement): {:?}", w.vertices),
        None if r.perfect.is_some() => println!("smallest odd antihole: none"),
        None => {}
    }
    if let Some(d) = &r.dimension {
        println!("quantum dimension lower bound: {}", d.bound);
        for p in &d.provenance {
            println!("  - {p}");
        }
    }
    if !r.skipped.is_empty() {
        println!("skipped stages:");
        for s in &r.skipped {
            println!("  - {s}");
        }
    }
    let total: f64 = r.elapsed_ms.values().sum();
    println!("elapsed: {total:.1} ms");
}

pub fn census_table(reports: &[CensusReport]) {
    if reports.is_empty() {
        return;
    }
    let targets: Vec<&String> = reports[0].counts.keys().collect();
    let width = reports.iter().map(|r| r.graph.len()).max().unwrap_or(8).max(8);
    print!("{:width$}", "graph");
    for t in &targets {
        print!(" {t:>7}");
    }
    println!();
    for r in reports {
        print!("{:width$}", r.graph);
        for t in &targets {
            print!(" {:>7}", r.counts.get(*t).copied().unwrap_or(0));
        }
        println!();
    }
}

pub fn orthorep(rep: &OrthonormalRepresentation, verification: &FaithfulnessReport) {
    println!(
        "orthonormal representation of {} in dimension {}",
        rep.target.display_name(),
        rep.dimension()
    );
    println!("handle value (sum of squared handle overlaps): {:.7}", handle_value(rep));
    println!(
        "verification: {} (max |dot| on edges {:.2e}, min |dot| off edges {:.2e}, max norm error {:.2e})",
        if verification.pass { "pass" } else { "FAIL" },
        verification.max_adjacent_dot,
        verification.min_nonadjacent_dot,
        verification.max_norm_error,
    );
    println!("vectors (vertex: components):");
    for (j, v) in rep.vectors.iter().enumerate() {
        let comps: Vec<String> = v.iter().map(|x| format!("{x:+.10}")).collect();
        println!("  {:>3}: [{}]", j + 1, comps.join(", "));
    }
}

pub fn inequality(inst: &InequalityInstance) {
    let family = match inst.family {
        Family::Chsh => "CHSH".to_string(),
        Family::SCycle { n } => format!("S(C_{n})"),
        Family::SAnticycle { n } => format!("S(complement of C_{n})"),
    };
    println!("inequality family: {family}");
    println!("events ({}):", inst.events.len());
    for (i, e) in inst.events.iter().enumerate() {
        println!("  {:>3}: P({})", i + 1, e.text());
    }
    println!(
        "exclusivity graph: {} vertices, {} edges",
        inst.exclusivity_graph.n(),
        inst.exclusivity_graph.edge_count()
    );
    println!("noncontextual (NCHV) bound: {}", inst.nchv_bound);
    println!("quantum bound: {:.5}", inst.quantum_bound);
}

pub fn echain(chain: &EChain) {
    println!("graph: {}", chain.graph);
    println!("noncontextual (NCHV) bound: {}", chain.nchv);
    println!("quantum bound: {:.5}", chain.quantum);
    for e in &chain.e {
        println!("E{}: {:.5}  (packing number of power {} = {})", e.m, e.value, e.m, e.p);
    }
    for s in &chain.skipped {
        println!("E{}: skipped ({})", s.m, s.reason);
    }
}

pub fn catalog() {
    println!("graph descriptor grammar:");
    println!("  cycle:N                 the cycle C_N (N >= 3)");
    println!("  anticycle:N             complement of cycle:N");
    println!("  circulant:N:a,b,...     circulant graph Ci_N(a,b,...)");
    println!("  johnson:N:K             Johnson graph J(N,K)");
    println!("  shrikhande              the Shrikhande graph (16 vertices)");
    println!("  complete:N              the complete graph K_N");
    println!("  complement(SPEC)        complement of SPEC");
    println!("  product(SPEC, SPEC)     disjunctive product");
    println!("  power(SPEC, M)          M-fold disjunctive power");
    println!("  file:PATH               edge-list file (first line: vertex");
    println!("                          count; then 'u v' per line; '#' comments)");
    println!();
    println!("named inequality graphs:");
    println!("  KCBS        cycle:5");
    println!("  CHSH        circulant:8:1,4");
    println!("  KCBS-twin   johnson:5:2");
    println!("  Mermin      complement(shrikhande)");
}
