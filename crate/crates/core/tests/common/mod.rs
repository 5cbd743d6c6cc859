//! Shared test support: independent oracles and deterministic random graphs.
//!
//! The oracles deliberately take different algorithmic routes from the
//! library (plain enumeration and vertex branching instead of bitset
//! branch-and-bound with coloring bounds; a variational vector search instead
//! of the SDP), so agreement is meaningful.

#![allow(dead_code)]

use ctxgraph::graph::Graph;
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

/// Erdős–Rényi graph with edge probability `p`, deterministic in the seed.
pub fn random_graph(n: usize, p: f64, rng: &mut ChaCha8Rng) -> Graph {
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.random_bool(p) {
                edges.push((u, v));
            }
        }
    }
    Graph::from_edges(n, &edges).expect("generated edges are simple")
}

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Maximum independent set size by plain include/exclude vertex branching
/// (only the trivial counting bound, no coloring).
pub fn alpha_oracle(g: &Graph) -> usize {
    fn rec(g: &Graph, alive: &mut Vec<bool>, chosen: usize, best: &mut usize) {
        let remaining = alive.iter().filter(|&&a| a).count();
        if chosen + remaining <= *best {
            return;
        }
        let Some(v) = (0..g.n()).find(|&v| alive[v]) else {
            *best = (*best).max(chosen);
            return;
        };
        // Include v.
        let mut removed = vec![v];
        alive[v] = false;
        for u in g.neighbors(v) {
            if alive[u] {
                alive[u] = false;
                removed.push(u);
            }
        }
        rec(g, alive, chosen + 1, best);
        for &u in &removed {
            alive[u] = true;
        }
        // Exclude v.
        alive[v] = false;
        rec(g, alive, chosen, best);
        alive[v] = true;
    }
    let mut alive = vec![true; g.n()];
    let mut best = 0;
    rec(g, &mut alive, 0, &mut best);
    best
}

pub fn omega_oracle(g: &Graph) -> usize {
    alpha_oracle(&g.complement())
}

/// Chromatic number by direct k-coloring backtracking for k = lower..
pub fn chi_oracle(g: &Graph) -> usize {
    if g.n() == 0 {
        return 0;
    }
    fn colorable(g: &Graph, k: usize, colors: &mut Vec<usize>, v: usize) -> bool {
        if v == g.n() {
            return true;
        }
        // Symmetry break: vertex v may only open one new color.
        let used = colors[..v].iter().copied().max().map_or(0, |m| m + 1);
        for c in 0..k.min(used + 1) {
            if g.neighbors(v).all(|u| u >= v || colors[u] != c) {
                colors[v] = c;
                if colorable(g, k, colors, v + 1) {
                    return true;
                }
            }
        }
        false
    }
    for k in 1..=g.n() {
        let mut colors = vec![usize::MAX; g.n()];
        if colorable(g, k, &mut colors, 0) {
            return k;
        }
    }
    unreachable!("n colors always suffice")
}

/// Berge's definition of perfectness, checked literally: ω(H) = χ(H) for
/// every induced subgraph H. Exponential; keep n small.
pub fn perfect_berge_oracle(g: &Graph) -> bool {
    let n = g.n();
    for mask in 0u32..(1 << n) {
        let verts: Vec<usize> = (0..n).filter(|&v| mask >> v & 1 == 1).collect();
        if verts.len() < 2 {
            continue;
        }
        let h = g.induced(&verts);
        if omega_oracle(&h) != chi_oracle(&h) {
            return false;
        }
    }
    true
}

/// The eight CHSH events as (A index, B index, A outcome, B outcome).
const CHSH_EVENTS: [(usize, usize, i32, i32); 8] = [
    (0, 0, 1, 1),
    (0, 0, -1, -1),
    (0, 1, 1, 1),
    (0, 1, -1, -1),
    (1, 0, 1, 1),
    (1, 0, -1, -1),
    (1, 1, 1, -1),
    (1, 1, -1, 1),
];

/// Variational lower bound on ϑ of the CHSH exclusivity graph by a see-saw
/// over four-dimensional states and projectors.
///
/// Each event vector is a tensor product of qubit measurement eigenvectors
/// (angles parametrize the measurements), so exclusive events are orthogonal
/// *by construction* and the resulting value Σ_j ⟨v_j, ψ⟩² is a certified
/// lower bound whatever the angles. The see-saw alternates the optimal state
/// (top eigenvector of Σ v vᵀ) with coordinate ascent on the four angles.
/// Returns (best value, worst orthogonality residual over exclusive pairs).
pub fn chsh_seesaw_lower_bound(restarts: u64) -> (f64, f64) {
    let mut best_value = 0.0;
    let mut best_residual = f64::INFINITY;
    for seed in 0..restarts {
        let mut rng = ChaCha8Rng::seed_from_u64(0xBEE5 + seed);
        let mut angles: [f64; 4] = std::array::from_fn(|_| {
            rng.random_range(0.0..(2.0 * std::f64::consts::PI))
        });
        let mut psi = [0.5f64; 4];
        for _ in 0..40 {
            // State update: power iteration on Σ v vᵀ (4x4).
            let vectors = chsh_vectors(&angles);
            for _ in 0..60 {
                let mut next = [0.0f64; 4];
                for v in &vectors {
                    let o = dot4(v, &psi);
                    for k in 0..4 {
                        next[k] += o * v[k];
                    }
                }
                let n = dot4(&next, &next).sqrt();
                if n < 1e-15 {
                    break;
                }
                for x in &mut next {
                    *x /= n;
                }
                psi = next;
            }
            // Projector update: coordinate ascent, one angle at a time.
            for k in 0..4 {
                let mut best_theta = angles[k];
                let mut best = chsh_value(&angles, &psi);
                let steps = 720;
                for s in 0..steps {
                    let theta = 2.0 * std::f64::consts::PI * s as f64 / steps as f64;
                    let mut trial = angles;
                    trial[k] = theta;
                    let value = chsh_value(&trial, &psi);
                    if value > best {
                        best = value;
                        best_theta = theta;
                    }
                }
                // Golden-section refinement around the best sample.
                let span = 2.0 * std::f64::consts::PI / steps as f64;
                let (mut lo, mut hi) = (best_theta - span, best_theta + span);
                for _ in 0..60 {
                    let m1 = lo + (hi - lo) * 0.381966;
                    let m2 = hi - (hi - lo) * 0.381966;
                    let f = |theta: f64| {
                        let mut trial = angles;
                        trial[k] = theta;
                        chsh_value(&trial, &psi)
                    };
                    if f(m1) < f(m2) {
                        lo = m1;
                    } else {
                        hi = m2;
                    }
                }
                angles[k] = 0.5 * (lo + hi);
            }
        }
        let vectors = chsh_vectors(&angles);
        let mut residual = 0.0f64;
        for i in 0..8 {
            for j in i + 1..8 {
                if chsh_exclusive(i, j) {
                    residual = residual.max(dot4(&vectors[i], &vectors[j]).abs());
                }
            }
        }
        let value = chsh_value(&angles, &psi);
        if residual < 1e-9 && value > best_value {
            best_value = value;
            best_residual = residual;
        }
    }
    (best_value, best_residual)
}

fn chsh_exclusive(i: usize, j: usize) -> bool {
    let (ai, bi, oai, obi) = CHSH_EVENTS[i];
    let (aj, bj, oaj, obj) = CHSH_EVENTS[j];
    (ai == aj && oai != oaj) || (bi == bj && obi != obj)
}

/// Eigenvector of the qubit observable cos(θ)Z + sin(θ)X for the ±1 outcome.
fn qubit_eigvec(theta: f64, outcome: i32) -> [f64; 2] {
    let half = theta / 2.0;
    if outcome == 1 {
        [half.cos(), half.sin()]
    } else {
        [-half.sin(), half.cos()]
    }
}

fn chsh_vectors(angles: &[f64; 4]) -> [[f64; 4]; 8] {
    std::array::from_fn(|e| {
        let (a, b, oa, ob) = CHSH_EVENTS[e];
        let u = qubit_eigvec(angles[a], oa);
        let w = qubit_eigvec(angles[2 + b], ob);
        [u[0] * w[0], u[0] * w[1], u[1] * w[0], u[1] * w[1]]
    })
}

fn chsh_value(angles: &[f64; 4], psi: &[f64; 4]) -> f64 {
    chsh_vectors(angles)
        .iter()
        .map(|v| dot4(v, psi).powi(2))
        .sum()
}

fn dot4(a: &[f64; 4], b: &[f64; 4]) -> f64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}
