//! Event model for noncontextuality inequalities.
//!
//! An event assigns outcomes to a tuple of measurements; two events are
//! exclusive when some shared measurement receives different outcomes. The
//! exclusivity graph has one vertex per event and an edge per exclusive pair.
//!
//! Three families are built here:
//!
//! - the CHSH sum of eight probabilities, whose exclusivity graph is the
//!   circulant Ci_8(1,4);
//! - `S(C_n) = Σ_i P(1,0 | i, i+⌊n/2⌋)`, exclusivity graph `C_n`;
//! - `S(C̄_n) = Σ_i P(1,0,...,0 | i, i+2, i+4, ..., i+n−3)` (indices mod n,
//!   step 2), exclusivity graph `C̄_n`. The step-2 context also makes the
//!   measurement co-occurrence structure coincide with the exclusivity
//!   structure, as it does for the cycle family.

use std::collections::HashSet;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{is_isomorphic, Graph};
use crate::invariants::independence_number;
use crate::orthorep::{handle_value, OrthonormalRepresentation};
use crate::theta::{theta_anticycle, theta_cycle, theta_sdp, DEFAULT_SDP_TOL};

/// An outcome tuple given a measurement tuple. Stored sorted by measurement
/// identifier, so equality and hashing are structural.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Event {
    measurements: Vec<u32>,
    outcomes: Vec<i32>,
}

impl Event {
    /// Builds an event; measurement identifiers must be distinct and the two
    /// tuples must have equal length.
    pub fn new(measurements: Vec<u32>, outcomes: Vec<i32>) -> Result<Event> {
        if measurements.len() != outcomes.len() {
            return Err(Error::InvalidInput(format!(
                "{} measurements but {} outcomes",
                measurements.len(),
                outcomes.len()
            )));
        }
        let mut pairs: Vec<(u32, i32)> = measurements.into_iter().zip(outcomes).collect();
        pairs.sort_unstable();
        if pairs.windows(2).any(|w| w[0].0 == w[1].0) {
            return Err(Error::InvalidInput(
                "duplicate measurement identifier within one event".into(),
            ));
        }
        let (measurements, outcomes) = pairs.into_iter().unzip();
        Ok(Event {
            measurements,
            outcomes,
        })
    }

    pub fn measurements(&self) -> &[u32] {
        &self.measurements
    }

    pub fn outcomes(&self) -> &[i32] {
        &self.outcomes
    }

    pub fn outcome_for(&self, measurement: u32) -> Option<i32> {
        self.measurements
            .binary_search(&measurement)
            .ok()
            .map(|i| self.outcomes[i])
    }

    /// Text form `o1,o2,...|m1,m2,...`.
    pub fn text(&self) -> String {
        let os: Vec<String> = self.outcomes.iter().map(|o| o.to_string()).collect();
        let ms: Vec<String> = self.measurements.iter().map(|m| m.to_string()).collect();
        format!("{}|{}", os.join(","), ms.join(","))
    }
}

impl std::str::FromStr for Event {
    type Err = Error;

    fn from_str(s: &str) -> Result<Event> {
        let (os, ms) = s
            .split_once('|')
            .ok_or_else(|| Error::Parse(format!("event {s:?} lacks '|'")))?;
        let outcomes: std::result::Result<Vec<i32>, _> =
            os.split(',').map(|x| x.trim().parse()).collect();
        let measurements: std::result::Result<Vec<u32>, _> =
            ms.split(',').map(|x| x.trim().parse()).collect();
        Event::new(
            measurements.map_err(|e| Error::Parse(format!("bad measurement in {s:?}: {e}")))?,
            outcomes.map_err(|e| Error::Parse(format!("bad outcome in {s:?}: {e}")))?,
        )
    }
}

/// Two events are exclusive iff some measurement occurs in both with
/// different assigned outcomes. Symmetric and irreflexive.
pub fn exclusive(a: &Event, b: &Event) -> bool {
    // Both sides are sorted by measurement id; merge-scan the overlap.
    let (mut i, mut j) = (0, 0);
    while i < a.measurements.len() && j < b.measurements.len() {
        match a.measurements[i].cmp(&b.measurements[j]) {
            std::cmp::Ordering::Less => i += 1,
            std::cmp::Ordering::Greater => j += 1,
            std::cmp::Ordering::Equal => {
                if a.outcomes[i] != b.outcomes[j] {
                    return true;
                }
                i += 1;
                j += 1;
            }
        }
    }
    false
}

/// The exclusivity graph: one vertex per event, in list order; an edge per
/// exclusive pair. Events must be pairwise distinct.
pub fn exclusivity_graph(events: &[Event]) -> Result<Graph> {
    let distinct: HashSet<&Event> = events.iter().collect();
    if distinct.len() != events.len() {
        return Err(Error::InvalidInput("duplicate events".into()));
    }
    let mut edges = Vec::new();
    for i in 0..events.len() {
        for j in i + 1..events.len() {
            if exclusive(&events[i], &events[j]) {
                edges.push((i, j));
            }
        }
    }
    Graph::from_edges(events.len(), &edges)
}

/// Which inequality family an instance belongs to.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "family", rename_all = "snake_case")]
pub enum Family {
    Chsh,
    SCycle { n: usize },
    SAnticycle { n: usize },
}

/// A noncontextuality inequality: events, exclusivity graph, and its
/// classical (α) and quantum (ϑ) bounds.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct InequalityInstance {
    pub family: Family,
    pub events: Vec<Event>,
    pub exclusivity_graph: Graph,
    pub nchv_bound: usize,
    pub quantum_bound: f64,
}

/// The CHSH inequality as a sum of eight event probabilities. A-side
/// measurements use identifiers 0,1 and B-side 2,3, so the identifier ranges
/// are disjoint.
pub fn build_chsh_events() -> Result<InequalityInstance> {
    const A0: u32 = 0;
    const A1: u32 = 1;
    const B0: u32 = 2;
    const B1: u32 = 3;
    let spec: [([u32; 2], [i32; 2]); 8] = [
        ([A0, B0], [1, 1]),
        ([A0, B0], [-1, -1]),
        ([A0, B1], [1, 1]),
        ([A0, B1], [-1, -1]),
        ([A1, B0], [1, 1]),
        ([A1, B0], [-1, -1]),
        ([A1, B1], [1, -1]),
        ([A1, B1], [-1, 1]),
    ];
    let events: Vec<Event> = spec
        .iter()
        .map(|(m, o)| Event::new(m.to_vec(), o.to_vec()))
        .collect::<Result<_>>()?;
    let graph = exclusivity_graph(&events)?.with_label("chsh-exclusivity");
    let nchv_bound = independence_number(&graph)?;
    debug_assert_eq!(nchv_bound, 3);
    let quantum_bound = theta_sdp(&graph, DEFAULT_SDP_TOL)?.value;
    Ok(InequalityInstance {
        family: Family::Chsh,
        events,
        exclusivity_graph: graph,
        nchv_bound,
        quantum_bound,
    })
}

fn wrap_1_based(i: usize, n: usize) -> u32 {
    ((i - 1) % n + 1) as u32
}

/// `S(C_n)`: event i assigns outcome 1 to measurement i and 0 to measurement
/// i+⌊n/2⌋ (mod n), for i = 1..n. Exclusivity graph isomorphic to `C_n`,
/// classical bound (n−1)/2, quantum bound ϑ(C_n).
pub fn build_s_cycle(n: usize) -> Result<InequalityInstance> {
    if n < 5 || n % 2 == 0 {
        return Err(Error::invalid_parameter(format!(
            "build_s_cycle needs odd n >= 5, got {n}"
        )));
    }
    let k = n / 2;
    let events: Vec<Event> = (1..=n)
        .map(|i| {
            Event::new(
                vec![wrap_1_based(i, n), wrap_1_based(i + k, n)],
                vec![1, 0],
            )
        })
        .collect::<Result<_>>()?;
    let graph = exclusivity_graph(&events)?.with_label(format!("s_cycle:{n}"));
    Ok(InequalityInstance {
        family: Family::SCycle { n },
        events,
        exclusivity_graph: graph,
        nchv_bound: (n - 1) / 2,
        quantum_bound: theta_cycle(n)?.value,
    })
}

/// `S(C̄_n)`: event i assigns outcome 1 to measurement i and 0 to
/// measurements i+2, i+4, ..., i+n−3 (mod n), for i = 1..n. Exclusivity
/// graph isomorphic to `C̄_n`, classical bound 2, quantum bound ϑ(C̄_n).
/// For n = 5 this delegates to the cycle family (C_5 ≅ C̄_5).
pub fn build_s_anticycle(n: usize) -> Result<InequalityInstance> {
    if n < 5 || n % 2 == 0 {
        return Err(Error::invalid_parameter(format!(
            "build_s_anticycle needs odd n >= 5, got {n}"
        )));
    }
    if n == 5 {
        return build_s_cycle(5);
    }
    let events: Vec<Event> = (1..=n)
        .map(|i| {
            let mut measurements = vec![wrap_1_based(i, n)];
            let mut outcomes = vec![1];
            let mut offset = 2;
            while offset <= n - 3 {
                measurements.push(wrap_1_based(i + offset, n));
                outcomes.push(0);
                offset += 2;
            }
            Event::new(measurements, outcomes)
        })
        .collect::<Result<_>>()?;
    let graph = exclusivity_graph(&events)?.with_label(format!("s_anticycle:{n}"));
    Ok(InequalityInstance {
        family: Family::SAnticycle { n },
        events,
        exclusivity_graph: graph,
        nchv_bound: 2,
        quantum_bound: theta_anticycle(n)?.value,
    })
}

/// Value the inequality reaches on a concrete orthonormal representation:
/// Σ_j ⟨v_j, ψ⟩². The representation's target must match the instance's
/// exclusivity graph (up to relabeling).
pub fn quantum_value(inst: &InequalityInstance, rep: &OrthonormalRepresentation) -> Result<f64> {
    let same = rep.target == inst.exclusivity_graph
        || is_isomorphic(&rep.target, &inst.exclusivity_graph)?;
    if !same {
        return Err(Error::InvalidInput(
            "representation target does not match the exclusivity graph".into(),
        ));
    }
    Ok(handle_value(rep))
}

/// Graph on measurement identifiers with an edge where two measurements
/// co-occur in some event's context. For the families built here this is
/// isomorphic to the exclusivity graph.
pub fn measurement_cooccurrence_graph(inst: &InequalityInstance) -> Result<Graph> {
    let mut ids: Vec<u32> = inst
        .events
        .iter()
        .flat_map(|e| e.measurements().iter().copied())
        .collect();
    ids.sort_unstable();
    ids.dedup();
    let index = |m: u32| ids.binary_search(&m).expect("id present");
    let mut edges = HashSet::new();
    for e in &inst.events {
        let ms = e.measurements();
        for i in 0..ms.len() {
            for j in i + 1..ms.len() {
                let (a, b) = (index(ms[i]), index(ms[j]));
                edges.insert((a.min(b), a.max(b)));
            }
        }
    }
    let mut edges: Vec<(usize, usize)> = edges.into_iter().collect();
    edges.sort_unstable();
    Graph::from_edges(ids.len(), &edges)
}
