//! Exclusivity-principle bounds over disjunctive powers.
//!
//! The exclusivity principle applied to m independent copies of an experiment
//! bounds the inequality value by `(p(G^{*m}))^{1/m}`, where `p` is the
//! fractional packing (Rosenfeld) number of the m-fold disjunctive power.
//! For vertex-transitive graphs `p(G^{*m}) = n^m / ω(G^{*m})` exactly, so the
//! whole series reduces to clique numbers of powers, computed here by branch
//! and bound with an incumbent seeded from the product of smaller cliques.

use std::time::{Duration, Instant};

use num_bigint::BigInt;
use num_traits::ToPrimitive;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::invariants::{independence_number, max_clique_pinned};
use crate::lp::{fractional_packing_string, Rational};
use crate::theta::theta;

/// Compute budget for the e-bound series.
#[derive(Clone, Copy, Debug)]
pub struct EBudget {
    /// Largest allowed power graph.
    pub vertex_cap: usize,
    /// Wall-clock limit per clique search.
    pub clique_time_limit: Duration,
}

impl Default for EBudget {
    fn default() -> Self {
        EBudget {
            vertex_cap: 343,
            clique_time_limit: Duration::from_secs(600),
        }
    }
}

impl EBudget {
    /// The extended tier: same size cap, one hour of clique search. Covers
    /// the dense 343-vertex anticycle cube, which the default tier skips.
    pub fn extended() -> Self {
        EBudget {
            vertex_cap: 343,
            clique_time_limit: Duration::from_secs(3600),
        }
    }
}

/// One entry of the e-bound series.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct EEntry {
    pub m: u32,
    pub value: f64,
    /// Exact packing number of the m-th power, printed as a fraction.
    #[serde(with = "fractional_packing_string")]
    pub p: Rational,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SkippedEntry {
    pub m: u32,
    pub reason: String,
}

/// A classical/quantum/exclusivity bound chain for one graph.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct EChain {
    pub graph: String,
    pub nchv: usize,
    pub quantum: f64,
    pub e: Vec<EEntry>,
    pub skipped: Vec<SkippedEntry>,
}

/// The m-copy exclusivity bound `(p(G^{*m}))^{1/m}`.
///
/// Vertex-transitive graphs use the `n^m/ω` reduction at any m (some maximum
/// clique of a vertex-transitive graph contains vertex 0, so the search is
/// pinned there and seeded with the product of the smaller powers' cliques).
/// Non-transitive graphs fall back to the packing LP for m = 1 and refuse
/// higher m.
pub fn e_bound(g: &Graph, m: u32, budget: &EBudget) -> Result<(f64, Rational)> {
    if m < 1 {
        return Err(Error::invalid_parameter("e_bound needs m >= 1"));
    }
    if g.n() == 0 {
        return Err(Error::invalid_parameter("e_bound needs a nonempty graph"));
    }
    if g.vertex_transitive() != Some(true) {
        if m == 1 {
            let p = crate::invariants::fractional_packing_lp(g)?;
            let value = rational_to_f64(&p);
            return Ok((value, p));
        }
        return Err(Error::InvalidInput(
            "multi-copy e-bounds need a vertex-transitive graph".into(),
        ));
    }
    let (_, p) = power_clique(g, m, budget)?;
    let value = mth_root(&p, m);
    Ok((value, p))
}

/// Clique of `G^{*m}` containing vertex 0 and the exact packing number
/// `n^m/ω`; cliques of lower powers seed the incumbent (cliques multiply
/// under the disjunctive product).
fn power_clique(g: &Graph, m: u32, budget: &EBudget) -> Result<(Vec<usize>, Rational)> {
    let deadline = Instant::now() + budget.clique_time_limit;
    let base = g.clone();
    let mut power = g.clone();
    let mut clique = max_clique_pinned(&base, None, Some(deadline))?;
    for _ in 1..m {
        power = power.disjunctive_product_capped(&base, budget.vertex_cap)?;
        // Product seed: pairs (a, b) over the previous clique and the base
        // clique form a clique of the product, flat index a*|V(base)| + b.
        let base_clique = max_clique_pinned(&base, None, Some(deadline))?;
        let base_n = base.n();
        let seed: Vec<usize> = {
            let mut s: Vec<usize> = clique
                .iter()
                .flat_map(|&a| base_clique.iter().map(move |&b| a * base_n + b))
                .collect();
            s.sort_unstable();
            s
        };
        clique = max_clique_pinned(&power, Some(&seed), Some(deadline))?;
    }
    let omega = clique.len();
    let p = Rational::new(BigInt::from(g.n()).pow(m), BigInt::from(omega));
    Ok((clique, p))
}

fn rational_to_f64(r: &Rational) -> f64 {
    r.numer()
        .to_f64()
        .and_then(|n| r.denom().to_f64().map(|d| n / d))
        .unwrap_or(f64::NAN)
}

fn mth_root(p: &Rational, m: u32) -> f64 {
    let x = rational_to_f64(p);
    match m {
        1 => x,
        2 => x.sqrt(),
        3 => x.cbrt(),
        _ => x.powf(1.0 / m as f64),
    }
}

/// Assembles α(G), ϑ(G), and the e-bound series for m = 1..max_m, recording
/// skipped entries (size cap or time budget) instead of failing.
pub fn chain_report(g: &Graph, max_m: u32, budget: &EBudget) -> Result<EChain> {
    let nchv = independence_number(g)?;
    let quantum = theta(g)?.value;
    let mut e = Vec::new();
    let mut skipped = Vec::new();
    for m in 1..=max_m {
        match e_bound(g, m, budget) {
            Ok((value, p)) => e.push(EEntry { m, value, p }),
            Err(Error::ResourceCap(reason)) => skipped.push(SkippedEntry { m, reason }),
            Err(other) => return Err(other),
        }
    }
    Ok(EChain {
        graph: g.display_name(),
        nchv,
        quantum,
        e,
        skipped,
    })
}
