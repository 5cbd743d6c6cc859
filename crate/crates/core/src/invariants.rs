//! Classical graph invariants: independence number, clique number, chromatic
//! number, maximal-clique enumeration, and the fractional packing number.
//!
//! The clique search is a bitset branch and bound with a greedy-coloring
//! upper bound (highest-color-first branching, ties broken by lowest vertex
//! index), which is strong on the dense disjunctive-product graphs this crate
//! cares about.

use std::sync::atomic::{AtomicUsize, Ordering};
use std::sync::Mutex;
use std::time::Instant;

use num_bigint::BigInt;
use num_traits::Zero;
use rayon::prelude::*;

use crate::bitset::BitSet;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::lp::{simplex_max, LinearProgram, Rational};

/// Practical vertex cap for the clique / independence searches.
pub const DEFAULT_SEARCH_VERTEX_CAP: usize = 500;
/// Vertex cap for the chromatic-number search (NP-hard; only small graphs).
pub const DEFAULT_CHROMATIC_VERTEX_CAP: usize = 32;
/// Output cap for maximal-clique enumeration.
pub const DEFAULT_CLIQUE_COUNT_CAP: usize = 1_000_000;

/// A family of cliques `Γ` of a host graph.
#[derive(Clone, Debug)]
pub struct CliqueFamily {
    /// Each member sorted ascending; the list is in lexicographic order.
    pub cliques: Vec<Vec<usize>>,
    /// Whether this is exactly the family of all maximal cliques.
    pub all_maximal: bool,
}

/// α(G): size of the largest pairwise non-adjacent vertex set.
pub fn independence_number(g: &Graph) -> Result<usize> {
    check_search_cap(g)?;
    Ok(max_clique(&g.complement())?.len())
}

/// ω(G): size of the largest clique.
pub fn clique_number(g: &Graph) -> Result<usize> {
    check_search_cap(g)?;
    Ok(max_clique(g)?.len())
}

fn check_search_cap(g: &Graph) -> Result<()> {
    if g.n() > DEFAULT_SEARCH_VERTEX_CAP {
        return Err(Error::resource_cap(format!(
            "clique search capped at {DEFAULT_SEARCH_VERTEX_CAP} vertices, got {}",
            g.n()
        )));
    }
    Ok(())
}

/// A maximum clique (sorted ascending).
pub fn max_clique(g: &Graph) -> Result<Vec<usize>> {
    max_clique_with(g, None, None)
}

/// Maximum clique search with an optional starting incumbent (must be a valid
/// clique) and an optional wall-clock deadline.
///
/// Large instances (n >= [`PARALLEL_CLIQUE_THRESHOLD`]) strengthen the
/// incumbent by a deterministic drop-and-refill local search and explore the
/// root branches concurrently; the incumbent is shared and only improves, so
/// the returned clique size is schedule-independent.
pub fn max_clique_with(
    g: &Graph,
    seed: Option<&[usize]>,
    deadline: Option<Instant>,
) -> Result<Vec<usize>> {
    if g.n() == 0 {
        return Ok(Vec::new());
    }
    let mut incumbent: Vec<usize> = match seed {
        Some(s) => {
            debug_assert!(is_clique(g, s), "seed is not a clique");
            s.to_vec()
        }
        None => greedy_clique(g),
    };
    let large = g.n() >= PARALLEL_CLIQUE_THRESHOLD;
    if !large {
        let best_len = AtomicUsize::new(incumbent.len());
        let best = Mutex::new(incumbent);
        let mut search = CliqueSearch {
            g,
            best_len: &best_len,
            best: &best,
            current: Vec::new(),
            deadline,
            nodes: 0,
        };
        search.expand(BitSet::full(g.n()))?;
        let mut out = best.into_inner().expect("clique mutex");
        out.sort_unstable();
        return Ok(out);
    }

    let refined = local_search_clique(g, &incumbent, 40, 400);
    if refined.len() > incumbent.len() {
        incumbent = refined;
    }
    // Relabel by reverse degeneracy order: greedy colorings over index order
    // then use few classes, which tightens the branching bound everywhere.
    let old_of = reverse_degeneracy_order(g);
    let mut new_of = vec![0usize; g.n()];
    for (new, &old) in old_of.iter().enumerate() {
        new_of[old] = new;
    }
    let relabeled_edges: Vec<(usize, usize)> = g
        .edges()
        .iter()
        .map(|&(u, v)| {
            let (a, b) = (new_of[u], new_of[v]);
            (a.min(b), a.max(b))
        })
        .collect();
    let h = Graph::from_edges(g.n(), &relabeled_edges).expect("relabeling keeps simplicity");
    let seed_new: Vec<usize> = incumbent.iter().map(|&v| new_of[v]).collect();

    let best_len = AtomicUsize::new(seed_new.len());
    let best = Mutex::new(seed_new);
    expand_root_parallel(&h, &best_len, &best, deadline)?;
    let found = best.into_inner().expect("clique mutex");
    let mut out: Vec<usize> = found.into_iter().map(|v| old_of[v]).collect();
    out.sort_unstable();
    Ok(out)
}

/// Peeling order reversed: index 0 gets the vertex peeled last (highest
/// core). Greedy coloring along this order uses at most degeneracy+1 classes.
fn reverse_degeneracy_order(g: &Graph) -> Vec<usize> {
    let n = g.n();
    let mut alive = BitSet::full(n);
    let mut peel = Vec::with_capacity(n);
    for _ in 0..n {
        let v = alive
            .iter()
            .min_by_key(|&v| g.row(v).intersection_count(&alive))
            .expect("alive nonempty");
        peel.push(v);
        alive.remove(v);
    }
    peel.reverse();
    peel
}

/// Above this order the search goes parallel with a local-search incumbent.
pub const PARALLEL_CLIQUE_THRESHOLD: usize = 120;

/// Splits the root of the branch-and-bound tree across threads. Branch `i`
/// explores cliques whose highest-ordered root vertex is `order[i]`, exactly
/// mirroring one iteration of the sequential root loop.
fn expand_root_parallel(
    g: &Graph,
    best_len: &AtomicUsize,
    best: &Mutex<Vec<usize>>,
    deadline: Option<Instant>,
) -> Result<()> {
    let p = BitSet::full(g.n());
    let scratch = CliqueSearch {
        g,
        best_len,
        best,
        current: Vec::new(),
        deadline,
        nodes: 0,
    };
    let (order, colors) = scratch.color_order(&p, best_len.load(Ordering::Relaxed));
    // Candidate sets per root branch: vertices ordered before v, within N(v).
    let jobs: Vec<(usize, usize)> = (0..order.len()).map(|i| (order[i], colors[i])).collect();
    let prefix: Vec<BitSet> = {
        let mut acc = BitSet::new(g.n());
        let mut out = Vec::with_capacity(order.len());
        for &v in &order {
            out.push(acc.clone());
            acc.insert(v);
        }
        out
    };
    // Deeper branches (larger color bound) first; they carry most of the work.
    jobs.into_par_iter()
        .enumerate()
        .rev()
        .map(|(i, (v, color))| -> Result<()> {
            if color <= best_len.load(Ordering::Relaxed) {
                return Ok(());
            }
            let mut candidates = prefix[i].clone();
            candidates.intersect_with(g.row(v));
            let mut search = CliqueSearch {
                g,
                best_len,
                best,
                current: vec![v],
                deadline,
                nodes: 0,
            };
            if candidates.is_empty() {
                search.offer_current();
                return Ok(());
            }
            search.expand(candidates)
        })
        .collect::<Result<()>>()
}

/// Deterministic xorshift generator for heuristic tie-breaking.
struct XorShift(u64);

impl XorShift {
    fn next_u64(&mut self) -> u64 {
        let mut x = self.0;
        x ^= x << 13;
        x ^= x >> 7;
        x ^= x << 17;
        self.0 = x;
        x
    }

    fn below(&mut self, n: usize) -> usize {
        (self.next_u64() % n as u64) as usize
    }
}

/// Drop-and-refill plateau search: repeatedly remove a random vertex from the
/// clique and refill greedily with random tie-breaks, keeping non-worsening
/// moves. Purely heuristic; used to prime the branch-and-bound incumbent.
fn local_search_clique(g: &Graph, start: &[usize], restarts: usize, steps: usize) -> Vec<usize> {
    let mut rng = XorShift(0x9E3779B97F4A7C15);
    let mut best = start.to_vec();
    for restart in 0..restarts {
        let mut clique: Vec<usize> = if restart == 0 {
            start.to_vec()
        } else {
            vec![rng.below(g.n())]
        };
        refill(g, &mut clique, &mut rng);
        for _ in 0..steps {
            let mut trial = clique.clone();
            if !trial.is_empty() {
                trial.swap_remove(rng.below(trial.len()));
                if !trial.is_empty() && rng.below(4) == 0 {
                    trial.swap_remove(rng.below(trial.len()));
                }
            }
            refill(g, &mut trial, &mut rng);
            if trial.len() >= clique.len() {
                clique = trial;
            }
            if clique.len() > best.len() {
                best = clique.clone();
            }
        }
    }
    best
}

/// Greedily extends `clique` to a maximal one, breaking ties at random among
/// the candidates with the most candidate neighbors.
fn refill(g: &Graph, clique: &mut Vec<usize>, rng: &mut XorShift) {
    let mut cand = BitSet::full(g.n());
    for &v in clique.iter() {
        cand.intersect_with(g.row(v));
    }
    while !cand.is_empty() {
        let mut top: Vec<usize> = Vec::new();
        let mut top_score = 0;
        for v in cand.iter() {
            let score = g.row(v).intersection_count(&cand);
            if score > top_score || top.is_empty() {
                top_score = score;
                top.clear();
                top.push(v);
            } else if score == top_score {
                top.push(v);
            }
        }
        let v = top[rng.below(top.len())];
        clique.push(v);
        cand.intersect_with(g.row(v));
    }
}

/// For a vertex-transitive graph some maximum clique contains vertex 0, so
/// `ω(G) = 1 + ω(G[N(0)])`. Returns a maximum clique containing vertex 0.
/// The seed, when given, must be a clique containing 0.
pub fn max_clique_pinned(
    g: &Graph,
    seed: Option<&[usize]>,
    deadline: Option<Instant>,
) -> Result<Vec<usize>> {
    if g.vertex_transitive() != Some(true) {
        return Err(Error::InvalidInput(
            "pinned clique search requires a vertex-transitive graph".into(),
        ));
    }
    if g.n() == 0 {
        return Ok(Vec::new());
    }
    let nbrs: Vec<usize> = g.neighbors(0).collect();
    let sub = g.induced(&nbrs);
    let sub_seed: Option<Vec<usize>> = seed.map(|s| {
        debug_assert!(s.contains(&0));
        s.iter()
            .filter(|&&v| v != 0)
            .map(|&v| nbrs.binary_search(&v).expect("seed must lie in N(0)"))
            .collect()
    });
    let inner = max_clique_with(&sub, sub_seed.as_deref(), deadline)?;
    let mut clique: Vec<usize> = inner.into_iter().map(|i| nbrs[i]).collect();
    clique.push(0);
    clique.sort_unstable();
    Ok(clique)
}

fn is_clique(g: &Graph, verts: &[usize]) -> bool {
    verts
        .iter()
        .enumerate()
        .all(|(i, &u)| verts[i + 1..].iter().all(|&v| g.has_edge(u, v)))
}

/// Cheap incumbent: grow a clique greedily from the densest vertex.
fn greedy_clique(g: &Graph) -> Vec<usize> {
    let mut cand = BitSet::full(g.n());
    let mut clique = Vec::new();
    loop {
        let Some(v) = cand.iter().max_by_key(|&v| g.row(v).intersection_count(&cand)) else {
            break;
        };
        clique.push(v);
        cand.intersect_with(g.row(v));
    }
    clique.sort_unstable();
    clique
}

struct CliqueSearch<'a> {
    g: &'a Graph,
    /// Shared monotone incumbent size; reads prune, writes only improve.
    best_len: &'a AtomicUsize,
    best: &'a Mutex<Vec<usize>>,
    current: Vec<usize>,
    deadline: Option<Instant>,
    nodes: u64,
}

impl CliqueSearch<'_> {
    /// Greedy sequential coloring of `p`; returns vertices grouped by color
    /// class, colors ascending (the color of a vertex bounds any clique in
    /// the candidates up to and including it).
    ///
    /// Vertices whose greedy color would exceed `threshold` (the branching
    /// cutoff) get a recoloring attempt: when some low class conflicts with
    /// the vertex through a single member `w` and `w` fits in another low
    /// class, `w` moves and the vertex takes the freed class, so it no
    /// longer needs branching.
    fn color_order(&self, p: &BitSet, threshold: usize) -> (Vec<usize>, Vec<usize>) {
        let n = self.g.n();
        let mut classes: Vec<BitSet> = Vec::new();
        for v in p.iter() {
            let mut c = match classes.iter().position(|cl| !cl.intersects(self.g.row(v))) {
                Some(c) => c,
                None => {
                    classes.push(BitSet::new(n));
                    classes.len() - 1
                }
            };
            if c + 1 > threshold && threshold >= 2 {
                'renumber: for c1 in 0..threshold - 1 {
                    let mut conflict = classes[c1].clone();
                    conflict.intersect_with(self.g.row(v));
                    if conflict.count() == 1 {
                        let w = conflict.first().expect("single conflict");
                        for c2 in c1 + 1..threshold.min(classes.len()) {
                            if !classes[c2].intersects(self.g.row(w)) {
                                classes[c1].remove(w);
                                classes[c2].insert(w);
                                c = c1;
                                break 'renumber;
                            }
                        }
                    }
                }
            }
            classes[c].insert(v);
        }
        let count = p.count();
        let mut order = Vec::with_capacity(count);
        let mut colors = Vec::with_capacity(count);
        let mut color = 0;
        for class in classes.iter().filter(|c| !c.is_empty()) {
            color += 1;
            for v in class.iter() {
                order.push(v);
                colors.push(color);
            }
        }
        (order, colors)
    }

    fn offer_current(&self) {
        if self.current.len() > self.best_len.load(Ordering::Relaxed) {
            let mut best = self.best.lock().expect("clique mutex");
            if self.current.len() > best.len() {
                *best = self.current.clone();
                self.best_len.store(best.len(), Ordering::Relaxed);
            }
        }
    }

    fn expand(&mut self, p: BitSet) -> Result<()> {
        self.nodes += 1;
        if self.nodes % 4096 == 0 {
            if let Some(d) = self.deadline {
                if Instant::now() > d {
                    return Err(Error::resource_cap("clique search budget exhausted"));
                }
            }
        }
        let threshold = self
            .best_len
            .load(Ordering::Relaxed)
            .saturating_sub(self.current.len());
        let (order, colors) = self.color_order(&p, threshold);
        let mut avail = p;
        for i in (0..order.len()).rev() {
            if self.current.len() + colors[i] <= self.best_len.load(Ordering::Relaxed) {
                return Ok(()); // all remaining candidates have lower color
            }
            let v = order[i];
            avail.remove(v);
            self.current.push(v);
            let mut next = avail.clone();
            next.intersect_with(self.g.row(v));
            if next.is_empty() {
                self.offer_current();
            } else {
                self.expand(next)?;
            }
            self.current.pop();
        }
        Ok(())
    }
}

/// χ(G) by DSATUR-seeded branch and bound. The maximum clique is precolored
/// to break color symmetry and provides the lower bound.
pub fn chromatic_number(g: &Graph) -> Result<usize> {
    if g.n() > DEFAULT_CHROMATIC_VERTEX_CAP {
        return Err(Error::resource_cap(format!(
            "chromatic number capped at {DEFAULT_CHROMATIC_VERTEX_CAP} vertices, got {}",
            g.n()
        )));
    }
    if g.n() == 0 {
        return Ok(0);
    }
    if g.edge_count() == 0 {
        return Ok(1);
    }
    let clique = max_clique(g)?;
    let lower = clique.len();
    let upper = dsatur_greedy(g);
    if lower == upper {
        return Ok(lower);
    }

    let mut colors: Vec<Option<usize>> = vec![None; g.n()];
    for (c, &v) in clique.iter().enumerate() {
        colors[v] = Some(c);
    }
    let mut best = upper;
    branch_coloring(g, &mut colors, lower, lower, &mut best);
    Ok(best)
}

/// Greedy DSATUR coloring; returns the number of colors used.
fn dsatur_greedy(g: &Graph) -> usize {
    let mut colors: Vec<Option<usize>> = vec![None; g.n()];
    for _ in 0..g.n() {
        let v = next_dsatur_vertex(g, &colors).expect("uncolored vertex exists");
        let used: Vec<usize> = g.neighbors(v).filter_map(|u| colors[u]).collect();
        let c = (0..).find(|c| !used.contains(c)).unwrap();
        colors[v] = Some(c);
    }
    colors.iter().map(|c| c.unwrap() + 1).max().unwrap_or(0)
}

/// Uncolored vertex with maximum saturation (distinct neighbor colors), ties
/// broken by degree then index.
fn next_dsatur_vertex(g: &Graph, colors: &[Option<usize>]) -> Option<usize> {
    (0..g.n())
        .filter(|&v| colors[v].is_none())
        .max_by_key(|&v| {
            let mut seen: Vec<usize> = g.neighbors(v).filter_map(|u| colors[u]).collect();
            seen.sort_unstable();
            seen.dedup();
            (seen.len(), g.degree(v), usize::MAX - v)
        })
}

fn branch_coloring(
    g: &Graph,
    colors: &mut Vec<Option<usize>>,
    used: usize,
    lower: usize,
    best: &mut usize,
) {
    if used >= *best {
        return;
    }
    let Some(v) = next_dsatur_vertex(g, colors) else {
        *best = used;
        return;
    };
    let forbidden: Vec<usize> = g.neighbors(v).filter_map(|u| colors[u]).collect();
    let limit = (used + 1).min(*best - 1);
    for c in 0..limit {
        if !forbidden.contains(&c) {
            colors[v] = Some(c);
            branch_coloring(g, colors, used.max(c + 1), lower, best);
            colors[v] = None;
            if *best == lower {
                return;
            }
        }
    }
}

/// All maximal cliques via pivoting Bron–Kerbosch.
pub fn maximal_cliques(g: &Graph) -> Result<CliqueFamily> {
    maximal_cliques_capped(g, DEFAULT_CLIQUE_COUNT_CAP)
}

pub fn maximal_cliques_capped(g: &Graph, cap: usize) -> Result<CliqueFamily> {
    let mut out = Vec::new();
    if g.n() > 0 {
        let mut r = Vec::new();
        let mut p = BitSet::full(g.n());
        let mut x = BitSet::new(g.n());
        bron_kerbosch(g, &mut r, &mut p, &mut x, &mut out, cap)?;
    }
    out.sort();
    Ok(CliqueFamily {
        cliques: out,
        all_maximal: true,
    })
}

fn bron_kerbosch(
    g: &Graph,
    r: &mut Vec<usize>,
    p: &mut BitSet,
    x: &mut BitSet,
    out: &mut Vec<Vec<usize>>,
    cap: usize,
) -> Result<()> {
    if p.is_empty() && x.is_empty() {
        if out.len() >= cap {
            return Err(Error::resource_cap(format!(
                "more than {cap} maximal cliques"
            )));
        }
        let mut clique = r.clone();
        clique.sort_unstable();
        out.push(clique);
        return Ok(());
    }
    // Tomita pivot: maximize |P ∩ N(u)| over u ∈ P ∪ X.
    let pivot = p
        .iter()
        .chain(x.iter())
        .max_by_key(|&u| p.intersection_count(g.row(u)))
        .expect("P ∪ X nonempty");
    let mut candidates = p.clone();
    candidates.difference_with(g.row(pivot));
    for v in candidates.iter() {
        let mut p2 = p.clone();
        p2.intersect_with(g.row(v));
        let mut x2 = x.clone();
        x2.intersect_with(g.row(v));
        r.push(v);
        bron_kerbosch(g, r, &mut p2, &mut x2, out, cap)?;
        r.pop();
        p.remove(v);
        x.insert(v);
    }
    Ok(())
}

/// Fractional packing number α*(G, Γ) with Γ = all maximal cliques; when Γ
/// is all cliques this is the Rosenfeld number p(G).
///
/// Vertex-transitive graphs take the exact shortcut `n/ω(G)` (the packing LP
/// of a vertex-transitive graph is optimized by the uniform solution);
/// everything else solves the LP.
pub fn fractional_packing(g: &Graph) -> Result<Rational> {
    if g.n() == 0 {
        return Ok(Rational::zero());
    }
    if g.vertex_transitive() == Some(true) {
        let omega = clique_number(g)?;
        return Ok(Rational::new(BigInt::from(g.n()), BigInt::from(omega)));
    }
    fractional_packing_lp(g)
}

/// LP route for the fractional packing number, usable on any graph within the
/// clique-enumeration cap. Kept separate so the vertex-transitive shortcut
/// can be cross-checked against it.
pub fn fractional_packing_lp(g: &Graph) -> Result<Rational> {
    if g.n() == 0 {
        return Ok(Rational::zero());
    }
    let family = maximal_cliques(g)?;
    let lp = LinearProgram::packing(g.n(), &family.cliques);
    Ok(simplex_max(&lp)?.value)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lp::rat;

    #[test]
    fn independence_of_odd_cycles() {
        for n in [5usize, 7, 9, 11] {
            let g = Graph::cycle(n).unwrap();
            assert_eq!(independence_number(&g).unwrap(), (n - 1) / 2);
        }
    }

    #[test]
    fn independence_of_anticycles_is_two() {
        for n in [7usize, 9, 11, 13, 15] {
            let g = Graph::cycle(n).unwrap().complement();
            assert_eq!(independence_number(&g).unwrap(), 2);
        }
    }

    #[test]
    fn chsh_alpha_is_three() {
        let g = Graph::circulant(8, &[1, 4]).unwrap();
        assert_eq!(independence_number(&g).unwrap(), 3);
    }

    #[test]
    fn clique_numbers() {
        assert_eq!(clique_number(&Graph::complete(7)).unwrap(), 7);
        assert_eq!(clique_number(&Graph::cycle(7).unwrap()).unwrap(), 2);
        assert_eq!(clique_number(&Graph::cycle(5).unwrap()).unwrap(), 2);
    }

    #[test]
    fn alpha_equals_omega_of_complement() {
        for g in [
            Graph::cycle(9).unwrap(),
            Graph::johnson(5, 2).unwrap(),
            Graph::circulant(8, &[1, 4]).unwrap(),
        ] {
            assert_eq!(
                independence_number(&g).unwrap(),
                clique_number(&g.complement()).unwrap()
            );
        }
    }

    #[test]
    fn chromatic_basics() {
        assert_eq!(chromatic_number(&Graph::cycle(5).unwrap()).unwrap(), 3);
        assert_eq!(chromatic_number(&Graph::cycle(6).unwrap()).unwrap(), 2);
        assert_eq!(chromatic_number(&Graph::complete(6)).unwrap(), 6);
        assert_eq!(chromatic_number(&Graph::edgeless(4)).unwrap(), 1);
        assert_eq!(chromatic_number(&Graph::johnson(5, 2).unwrap()).unwrap(), 5);
    }

    #[test]
    fn maximal_cliques_of_cycle_are_edges() {
        let fam = maximal_cliques(&Graph::cycle(5).unwrap()).unwrap();
        assert_eq!(fam.cliques.len(), 5);
        assert!(fam.cliques.iter().all(|c| c.len() == 2));
    }

    #[test]
    fn maximal_cliques_of_complete() {
        let fam = maximal_cliques(&Graph::complete(4)).unwrap();
        assert_eq!(fam.cliques, vec![vec![0, 1, 2, 3]]);
    }

    #[test]
    fn anticycle7_maximal_cliques_are_triangles() {
        let fam = maximal_cliques(&Graph::cycle(7).unwrap().complement()).unwrap();
        assert_eq!(fam.cliques.len(), 7);
        assert!(fam.cliques.iter().all(|c| c.len() == 3));
    }

    #[test]
    fn packing_values() {
        assert_eq!(
            fractional_packing(&Graph::cycle(5).unwrap()).unwrap(),
            rat(5, 2)
        );
        assert_eq!(
            fractional_packing(&Graph::cycle(7).unwrap()).unwrap(),
            rat(7, 2)
        );
        assert_eq!(
            fractional_packing(&Graph::cycle(7).unwrap().complement()).unwrap(),
            rat(7, 3)
        );
        assert_eq!(fractional_packing(&Graph::complete(6)).unwrap(), rat(1, 1));
    }

    #[test]
    fn packing_lp_agrees_with_transitive_shortcut() {
        for g in [
            Graph::cycle(5).unwrap(),
            Graph::cycle(9).unwrap(),
            Graph::cycle(7).unwrap().complement(),
            Graph::circulant(8, &[1, 4]).unwrap(),
            Graph::johnson(5, 2).unwrap(),
        ] {
            assert_eq!(
                fractional_packing(&g).unwrap(),
                fractional_packing_lp(&g).unwrap(),
                "mismatch for {}",
                g.display_name()
            );
        }
    }

    #[test]
    fn pinned_clique_matches_plain_search() {
        for g in [
            Graph::cycle(7).unwrap().complement(),
            Graph::circulant(8, &[1, 4]).unwrap(),
            Graph::johnson(5, 2).unwrap(),
        ] {
            let pinned = max_clique_pinned(&g, None, None).unwrap();
            assert!(pinned.contains(&0));
            assert!(is_clique(&g, &pinned));
            assert_eq!(pinned.len(), clique_number(&g).unwrap());
        }
    }

    #[test]
    fn search_cap_is_enforced() {
        let g = Graph::edgeless(501);
        assert!(matches!(
            independence_number(&g),
            Err(Error::ResourceCap(_))
        ));
    }
}
