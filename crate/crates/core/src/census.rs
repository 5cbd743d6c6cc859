//! Induced-subgraph census and hole detection.
//!
//! Odd holes (induced odd cycles of length >= 5) and odd antiholes (their
//! complements) are the minimal obstructions to perfectness, so counting and
//! finding them drives both the perfectness tests and the classification
//! reports. Counting enumerates vertex subsets with edge-count and
//! degree-multiset pre-filters before the full isomorphism test; subset
//! enumeration is partitioned by leading vertex and the partitions run in
//! parallel.

use std::collections::BTreeMap;
use std::time::Instant;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::bitset::BitSet;
use crate::error::{Error, Result};
use crate::graph::Graph;

/// Census targets larger than this are refused (subset growth).
pub const DEFAULT_TARGET_CAP: usize = 12;
/// Vertex cap for the minimal-imperfection test.
pub const MINIMAL_IMPERFECT_CAP: usize = 16;

/// Per-graph census result: induced-subgraph counts keyed by target name.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CensusReport {
    pub graph: String,
    pub counts: BTreeMap<String, u64>,
    pub elapsed_ms: BTreeMap<String, f64>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum HoleKind {
    Hole,
    Antihole,
}

/// An induced odd cycle, listed in cycle order (0-based vertices of the host
/// graph). For `kind == Antihole` the cycle lives in the complement.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HoleWitness {
    pub kind: HoleKind,
    pub vertices: Vec<usize>,
}

impl HoleWitness {
    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }
}

/// A named census target (e.g. `C5`, `C7bar`).
#[derive(Clone, Debug)]
pub struct Target {
    pub name: String,
    pub graph: Graph,
}

impl Target {
    /// Parses `C<n>` (odd cycle) or `C<n>bar` (its complement), n >= 3.
    pub fn parse(name: &str) -> Result<Target> {
        let body = name.strip_prefix('C').ok_or_else(|| {
            Error::Parse(format!("unknown census target {name:?} (want C<n> or C<n>bar)"))
        })?;
        let (digits, bar) = match body.strip_suffix("bar") {
            Some(d) => (d, true),
            None => (body, false),
        };
        let n: usize = digits
            .parse()
            .map_err(|e| Error::Parse(format!("bad census target {name:?}: {e}")))?;
        let cycle = Graph::cycle(n)?;
        let graph = if bar { cycle.complement() } else { cycle };
        Ok(Target {
            name: name.to_string(),
            graph,
        })
    }

    /// The default target set: C5, C7, C7bar, C9, C9bar.
    pub fn defaults() -> Vec<Target> {
        ["C5", "C7", "C7bar", "C9", "C9bar"]
            .iter()
            .map(|s| Target::parse(s).expect("default targets parse"))
            .collect()
    }
}

/// Number of vertex subsets of `g` inducing a subgraph isomorphic to `h`.
/// Returns 0 when `h` has more vertices than `g`.
pub fn count_induced(g: &Graph, h: &Graph) -> Result<u64> {
    if h.n() > DEFAULT_TARGET_CAP {
        return Err(Error::resource_cap(format!(
            "census target capped at {DEFAULT_TARGET_CAP} vertices, got {}",
            h.n()
        )));
    }
    let k = h.n();
    if k > g.n() {
        return Ok(0);
    }
    if k == 0 {
        return Ok(1); // the empty subset
    }
    let profile = TargetProfile::new(h);
    // Partition by leading vertex; partitions are independent and summed.
    let counts: u64 = (0..=g.n() - k)
        .into_par_iter()
        .map(|first| {
            let mut chosen = Vec::with_capacity(k);
            chosen.push(first);
            let mut count = 0u64;
            enumerate(g, &profile, &mut chosen, 0, &mut count);
            count
        })
        .sum();
    Ok(counts)
}

struct TargetProfile {
    k: usize,
    edge_count: usize,
    degree_multiset: Vec<usize>,
    rows: Vec<u16>,
}

impl TargetProfile {
    fn new(h: &Graph) -> TargetProfile {
        let mut degs = h.degrees();
        degs.sort_unstable();
        TargetProfile {
            k: h.n(),
            edge_count: h.edge_count(),
            degree_multiset: degs,
            rows: small_rows(h, &(0..h.n()).collect::<Vec<_>>()),
        }
    }
}

/// Adjacency of the subgraph induced by `verts` packed into u16 rows
/// (positions follow `verts` order).
fn small_rows(g: &Graph, verts: &[usize]) -> Vec<u16> {
    debug_assert!(verts.len() <= 16);
    verts
        .iter()
        .map(|&u| {
            let mut row = 0u16;
            for (j, &v) in verts.iter().enumerate() {
                if g.has_edge(u, v) {
                    row |= 1 << j;
                }
            }
            row
        })
        .collect()
}

fn enumerate(
    g: &Graph,
    profile: &TargetProfile,
    chosen: &mut Vec<usize>,
    partial_edges: usize,
    count: &mut u64,
) {
    if chosen.len() == profile.k {
        if partial_edges == profile.edge_count && matches_target(g, profile, chosen) {
            *count += 1;
        }
        return;
    }
    let start = chosen.last().copied().map_or(0, |v| v + 1);
    let remaining = profile.k - chosen.len();
    for v in start..=(g.n() - remaining) {
        let added = chosen.iter().filter(|&&u| g.has_edge(u, v)).count();
        let edges = partial_edges + added;
        if edges > profile.edge_count {
            continue; // induced edges only grow
        }
        chosen.push(v);
        enumerate(g, profile, chosen, edges, count);
        chosen.pop();
    }
}

fn matches_target(g: &Graph, profile: &TargetProfile, subset: &[usize]) -> bool {
    let rows = small_rows(g, subset);
    let mut degs: Vec<usize> = rows.iter().map(|r| r.count_ones() as usize).collect();
    degs.sort_unstable();
    if degs != profile.degree_multiset {
        return false;
    }
    small_iso(&rows, &profile.rows)
}

/// Isomorphism test on packed adjacency rows (k <= 16), backtracking in
/// degree-compatible candidate order.
fn small_iso(a: &[u16], b: &[u16]) -> bool {
    let k = a.len();
    debug_assert_eq!(k, b.len());
    let deg = |rows: &[u16], v: usize| rows[v].count_ones();
    let mut image = vec![usize::MAX; k];
    let mut used = 0u16;

    fn assign(a: &[u16], b: &[u16], v: usize, image: &mut [usize], used: &mut u16) -> bool {
        let k = a.len();
        if v == k {
            return true;
        }
        for w in 0..k {
            if *used >> w & 1 == 1 || a[v].count_ones() != b[w].count_ones() {
                continue;
            }
            let consistent = (0..v).all(|u| (a[v] >> u & 1) == (b[w] >> image[u] & 1));
            if consistent {
                image[v] = w;
                *used |= 1 << w;
                if assign(a, b, v + 1, image, used) {
                    return true;
                }
                *used &= !(1 << w);
                image[v] = usize::MAX;
            }
        }
        false
    }

    // Quick degree-multiset check is done by the caller; still cheap to bail
    // early when degree counts differ.
    let _ = deg;
    assign(a, b, 0, &mut image, &mut used)
}

/// Shortest induced odd hole of length >= `min_len` (default 5), searching by
/// increasing length and, within a length, lexicographic vertex sets.
pub fn find_odd_hole(g: &Graph) -> Option<HoleWitness> {
    find_odd_hole_min_len(g, 5)
}

pub fn find_odd_hole_min_len(g: &Graph, min_len: usize) -> Option<HoleWitness> {
    let start = if min_len % 2 == 0 { min_len + 1 } else { min_len };
    let mut len = start.max(5);
    while len <= g.n() {
        if let Some(subset) = find_induced_cycle_of_len(g, len) {
            return Some(HoleWitness {
                kind: HoleKind::Hole,
                vertices: trace_cycle(g, &subset),
            });
        }
        len += 2;
    }
    None
}

/// Longest induced odd hole length (>= 5), or None. Used for antihole-based
/// dimension bounds, where the largest structure matters.
pub fn largest_odd_hole_len(g: &Graph) -> Option<usize> {
    let mut len = g.n();
    if len % 2 == 0 {
        len -= 1;
    }
    while len >= 5 {
        if find_induced_cycle_of_len(g, len).is_some() {
            return Some(len);
        }
        len -= 2;
    }
    None
}

/// First (lexicographic) k-subset inducing a connected 2-regular subgraph.
fn find_induced_cycle_of_len(g: &Graph, k: usize) -> Option<Vec<usize>> {
    if k > g.n() {
        return None;
    }
    let mut chosen = Vec::with_capacity(k);
    rec_cycle(g, k, &mut chosen)
}

fn rec_cycle(g: &Graph, k: usize, chosen: &mut Vec<usize>) -> Option<Vec<usize>> {
    if chosen.len() == k {
        return induces_cycle(g, chosen).then(|| chosen.clone());
    }
    let start = chosen.last().copied().map_or(0, |v| v + 1);
    let remaining = k - chosen.len();
    'outer: for v in start..=(g.n() - remaining) {
        // In a cycle every vertex has induced degree exactly 2; degrees only
        // grow as vertices are added.
        let mut v_deg = 0;
        for &u in chosen.iter() {
            if g.has_edge(u, v) {
                v_deg += 1;
                let u_deg = chosen.iter().filter(|&&w| g.has_edge(u, w)).count() + 1;
                if u_deg > 2 {
                    continue 'outer;
                }
            }
        }
        if v_deg > 2 {
            continue;
        }
        chosen.push(v);
        if let Some(hit) = rec_cycle(g, k, chosen) {
            return Some(hit);
        }
        chosen.pop();
    }
    None
}

fn induces_cycle(g: &Graph, subset: &[usize]) -> bool {
    let mut in_subset = BitSet::new(g.n());
    for &v in subset {
        in_subset.insert(v);
    }
    let mut edge_count = 0;
    for &v in subset {
        let d = g.row(v).intersection_count(&in_subset);
        if d != 2 {
            return false;
        }
        edge_count += d;
    }
    debug_assert_eq!(edge_count, 2 * subset.len());
    // 2-regular and connected == a single cycle.
    g.induced(subset).is_connected()
}

/// Cycle order of a subset known to induce a cycle: starts at the smallest
/// vertex and walks toward its smaller neighbor.
fn trace_cycle(g: &Graph, subset: &[usize]) -> Vec<usize> {
    let mut in_subset = BitSet::new(g.n());
    for &v in subset {
        in_subset.insert(v);
    }
    let start = *subset.iter().min().expect("nonempty cycle");
    let nbrs: Vec<usize> = g
        .neighbors(start)
        .filter(|&u| in_subset.contains(u))
        .collect();
    let mut order = vec![start, *nbrs.iter().min().expect("cycle degree 2")];
    while order.len() < subset.len() {
        let cur = *order.last().unwrap();
        let prev = order[order.len() - 2];
        let next = g
            .neighbors(cur)
            .find(|&u| in_subset.contains(u) && u != prev)
            .expect("cycle degree 2");
        order.push(next);
    }
    order
}

/// Whether the complement contains an induced odd hole (length >= 5). Since
/// `C_5` is self-complementary it registers as both hole and antihole.
pub fn has_odd_antihole(g: &Graph) -> bool {
    find_odd_hole(&g.complement()).is_some()
}

/// Odd antihole witness, when one exists: an induced odd cycle of the
/// complement, reported with `kind = Antihole`.
pub fn find_odd_antihole(g: &Graph) -> Option<HoleWitness> {
    find_odd_hole(&g.complement()).map(|w| HoleWitness {
        kind: HoleKind::Antihole,
        vertices: w.vertices,
    })
}

/// Perfectness via the odd-hole/antihole characterization: `g` is perfect iff
/// neither `g` nor its complement contains an induced odd hole.
pub fn is_perfect(g: &Graph) -> bool {
    find_odd_hole(g).is_none() && !has_odd_antihole(g)
}

/// True iff `g` is imperfect but deleting any single vertex leaves a perfect
/// graph. Exactly the odd holes and odd antiholes have this property.
pub fn is_minimally_imperfect(g: &Graph) -> Result<bool> {
    if g.n() > MINIMAL_IMPERFECT_CAP {
        return Err(Error::resource_cap(format!(
            "minimal-imperfection test capped at {MINIMAL_IMPERFECT_CAP} vertices, got {}",
            g.n()
        )));
    }
    if is_perfect(g) {
        return Ok(false);
    }
    Ok((0..g.n()).all(|v| is_perfect(&g.delete_vertex(v))))
}

/// Census of `g` against a target list.
pub fn census(g: &Graph, targets: &[Target]) -> Result<CensusReport> {
    let mut counts = BTreeMap::new();
    let mut elapsed = BTreeMap::new();
    for t in targets {
        let started = Instant::now();
        let c = count_induced(g, &t.graph)?;
        counts.insert(t.name.clone(), c);
        elapsed.insert(t.name.clone(), started.elapsed().as_secs_f64() * 1e3);
    }
    Ok(CensusReport {
        graph: g.display_name(),
        counts,
        elapsed_ms: elapsed,
    })
}

/// The bundled census over the four graph-defined inequality rows (KCBS,
/// CHSH, KCBS-twin, Mermin) against the default targets.
pub fn table1_census() -> Result<Vec<CensusReport>> {
    let rows: Vec<(&str, Graph)> = vec![
        ("KCBS (cycle:5)", Graph::cycle(5)?),
        ("CHSH (circulant:8:1,4)", Graph::circulant(8, &[1, 4])?),
        ("KCBS-twin (johnson:5:2)", Graph::johnson(5, 2)?),
        (
            "Mermin (complement(shrikhande))",
            Graph::shrikhande().complement(),
        ),
    ];
    let targets = Target::defaults();
    rows.into_iter()
        .map(|(name, g)| {
            let mut report = census(&g, &targets)?;
            report.graph = name.to_string();
            Ok(report)
        })
        .collect()
}
