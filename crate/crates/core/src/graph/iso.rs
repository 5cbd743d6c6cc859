//! Small-graph isomorphism by backtracking with degree and
//! neighborhood-degree pruning. Intended for graphs up to ~16 vertices;
//! larger inputs are rejected with a resource-cap error.

use crate::bitset::BitSet;
use crate::error::{Error, Result};
use crate::graph::Graph;

/// Default vertex cap for the isomorphism search.
pub const DEFAULT_ISO_CAP: usize = 16;

/// True iff an adjacency-preserving bijection `G -> H` exists.
/// Graphs of different orders are simply not isomorphic.
pub fn is_isomorphic(g: &Graph, h: &Graph) -> Result<bool> {
    is_isomorphic_capped(g, h, DEFAULT_ISO_CAP)
}

pub fn is_isomorphic_capped(g: &Graph, h: &Graph, cap: usize) -> Result<bool> {
    if g.n() != h.n() {
        return Ok(false);
    }
    if g.n() > cap {
        return Err(Error::resource_cap(format!(
            "isomorphism search capped at {cap} vertices, got {}",
            g.n()
        )));
    }
    if g.edge_count() != h.edge_count() {
        return Ok(false);
    }
    Ok(search(g, h, None))
}

/// Exhaustive vertex-transitivity test: for every vertex `v` there must be an
/// automorphism mapping vertex 0 to `v` (the orbit of 0 is then everything).
pub fn is_vertex_transitive(g: &Graph) -> Result<bool> {
    if g.n() > DEFAULT_ISO_CAP {
        return Err(Error::resource_cap(format!(
            "transitivity test capped at {DEFAULT_ISO_CAP} vertices, got {}",
            g.n()
        )));
    }
    if g.n() <= 1 {
        return Ok(true);
    }
    let d0 = g.degree(0);
    for v in 1..g.n() {
        if g.degree(v) != d0 || !search(g, g, Some((0, v))) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Signature used to prune candidate images: degree plus the sorted multiset
/// of neighbor degrees.
fn signatures(g: &Graph) -> Vec<(usize, Vec<usize>)> {
    let degs = g.degrees();
    (0..g.n())
        .map(|v| {
            let mut nd: Vec<usize> = g.neighbors(v).map(|u| degs[u]).collect();
            nd.sort_unstable();
            (degs[v], nd)
        })
        .collect()
}

fn search(g: &Graph, h: &Graph, pinned: Option<(usize, usize)>) -> bool {
    let n = g.n();
    if n == 0 {
        return true;
    }
    let sig_g = signatures(g);
    let sig_h = signatures(h);

    // Candidate images per g-vertex.
    let mut candidates: Vec<BitSet> = Vec::with_capacity(n);
    for v in 0..n {
        let mut c = BitSet::new(n);
        for w in 0..n {
            if sig_g[v] == sig_h[w] {
                c.insert(w);
            }
        }
        if c.is_empty() {
            return false;
        }
        candidates.push(c);
    }
    if let Some((v, w)) = pinned {
        if !candidates[v].contains(w) {
            return false;
        }
        let mut only = BitSet::new(n);
        only.insert(w);
        candidates[v] = only;
    }

    // Assign g-vertices in an order that keeps the partial map connected
    // where possible: pinned vertex (or 0) first, then prefer vertices with
    // already-assigned neighbors, tie-broken by fewest candidates.
    let mut order: Vec<usize> = Vec::with_capacity(n);
    let mut placed = vec![false; n];
    let start = pinned.map_or(0, |(v, _)| v);
    order.push(start);
    placed[start] = true;
    while order.len() < n {
        let mut best: Option<(usize, usize, usize)> = None; // (neg anchored, cand count, v)
        for v in 0..n {
            if placed[v] {
                continue;
            }
            let anchored = g.neighbors(v).filter(|&u| placed[u]).count();
            let key = (usize::MAX - anchored, candidates[v].count(), v);
            if best.map_or(true, |b| key < b) {
                best = Some(key);
            }
        }
        let v = best.unwrap().2;
        order.push(v);
        placed[v] = true;
    }

    let mut image = vec![usize::MAX; n]; // g -> h
    let mut used = BitSet::new(n);
    assign(g, h, &order, 0, &candidates, &mut image, &mut used)
}

fn assign(
    g: &Graph,
    h: &Graph,
    order: &[usize],
    depth: usize,
    candidates: &[BitSet],
    image: &mut [usize],
    used: &mut BitSet,
) -> bool {
    if depth == order.len() {
        return true;
    }
    let v = order[depth];
    let choices: Vec<usize> = candidates[v].iter().filter(|&w| !used.contains(w)).collect();
    'next: for w in choices {
        for &u in &order[..depth] {
            if g.has_edge(v, u) != h.has_edge(w, image[u]) {
                continue 'next;
            }
        }
        image[v] = w;
        used.insert(w);
        if assign(g, h, order, depth + 1, candidates, image, used) {
            return true;
        }
        used.remove(w);
        image[v] = usize::MAX;
    }
    false
}
