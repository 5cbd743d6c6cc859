//! Lovász-optimum orthonormal representations and quantum-dimension bounds.
//!
//! An orthonormal representation (OR) of a graph assigns unit vectors to the
//! vertices with ⟨v_i, v_j⟩ = 0 exactly when i ~ j; it is Lovász-optimum
//! when a unit handle ψ achieves Σ_j ⟨v_j, ψ⟩² = ϑ(G).
//!
//! For odd cycles the construction is the classic three-dimensional umbrella
//!
//! ```text
//! v_j = (cos φ, sin φ cos(2πj/n), sin φ sin(2πj/n)),   cos²φ = ϑ(C_n)/n,
//! ```
//!
//! with handle (1,0,0); vectors j and j ± (n−1)/2 (mod n) are orthogonal. For
//! odd anticycles the vectors live in dimension n−2:
//!
//! ```text
//! v_{j,0}    = sqrt(ϑ(C̄_n)/n)
//! v_{j,2m−1} = T_{j,m} cos(R_{j,m}),   v_{j,2m} = T_{j,m} sin(R_{j,m})
//! T_{j,m}    = (−1)^{j(m+1)} sqrt(2 (cos(π/n) + (−1)^{m+1} cos((m+1)π/n)) / (n cos(π/n)))
//! R_{j,m}    = j (m+1) π / n
//! ```
//!
//! for m = 1..(n−3)/2, with handle (1,0,...,0); vectors are orthogonal
//! exactly for non-consecutive indices.

use serde::ser::SerializeStruct;
use serde::{Deserialize, Serialize};

use crate::census::{find_odd_hole, largest_odd_hole_len};
use crate::error::{Error, Result};
use crate::graph::{is_isomorphic, Graph};
use crate::invariants::max_clique;
use crate::theta::{theta_anticycle, theta_cycle};

/// Default verification thresholds; the constructions are exact formulas, so
/// these only absorb rounding.
#[derive(Clone, Copy, Debug)]
pub struct VerifyThresholds {
    /// |⟨v_i, v_j⟩| must not exceed this on edges.
    pub adjacency: f64,
    /// |⟨v_i, v_j⟩| must be at least this off edges.
    pub nonadjacency: f64,
    /// | ‖v‖ − 1 | must not exceed this.
    pub norm: f64,
    /// Distinct vertices must receive vectors at least this far apart.
    pub distinctness: f64,
}

impl Default for VerifyThresholds {
    fn default() -> Self {
        VerifyThresholds {
            adjacency: 1e-9,
            nonadjacency: 1e-6,
            norm: 1e-12,
            distinctness: 1e-6,
        }
    }
}

/// Practical vertex cap for the hole searches inside the dimension bound.
pub const DIMENSION_BOUND_VERTEX_CAP: usize = 18;

/// Unit vectors plus handle realizing a graph's orthogonality pattern.
///
/// Serializes as `{"dimension", "handle", "vectors", "graph"}` where `graph`
/// is the target's display name.
#[derive(Clone, Debug, PartialEq)]
pub struct OrthonormalRepresentation {
    pub vectors: Vec<Vec<f64>>,
    pub handle: Vec<f64>,
    pub target: Graph,
}

impl Serialize for OrthonormalRepresentation {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut st = s.serialize_struct("OrthonormalRepresentation", 4)?;
        st.serialize_field("dimension", &self.dimension())?;
        st.serialize_field("handle", &self.handle)?;
        st.serialize_field("vectors", &self.vectors)?;
        st.serialize_field("graph", &self.target.display_name())?;
        st.end()
    }
}

impl OrthonormalRepresentation {
    pub fn dimension(&self) -> usize {
        self.handle.len()
    }

    pub fn n(&self) -> usize {
        self.vectors.len()
    }
}

fn dot(a: &[f64], b: &[f64]) -> f64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

fn require_odd_ge(n: usize, min: usize, what: &str) -> Result<()> {
    if n < min || n % 2 == 0 {
        return Err(Error::invalid_parameter(format!(
            "{what} needs odd n >= {min}, got {n}"
        )));
    }
    Ok(())
}

/// The 3-dimensional umbrella OR of `C_n` (odd n >= 5). Vectors are stored
/// 0-based in construction order, where orthogonality sits at index offset
/// ±(n−1)/2; faithfulness against the target `C_n` is up to relabeling.
pub fn build_or_cycle(n: usize) -> Result<OrthonormalRepresentation> {
    require_odd_ge(n, 5, "build_or_cycle")?;
    let theta = theta_cycle(n)?.value;
    let cos_phi = (theta / n as f64).sqrt();
    let sin_phi = (1.0 - theta / n as f64).sqrt();
    let vectors = (0..n)
        .map(|j| {
            let angle = 2.0 * std::f64::consts::PI * j as f64 / n as f64;
            vec![cos_phi, sin_phi * angle.cos(), sin_phi * angle.sin()]
        })
        .collect();
    Ok(OrthonormalRepresentation {
        vectors,
        handle: vec![1.0, 0.0, 0.0],
        target: Graph::cycle(n)?,
    })
}

/// The (n−2)-dimensional OR of `C̄_n` (odd n >= 7; n = 5 delegates to the
/// cycle construction since C_5 and C̄_5 are isomorphic). Orthogonality holds
/// exactly for non-consecutive indices, matching C̄_n vertex-for-vertex.
pub fn build_or_anticycle(n: usize) -> Result<OrthonormalRepresentation> {
    require_odd_ge(n, 5, "build_or_anticycle")?;
    if n == 5 {
        let mut rep = build_or_cycle(5)?;
        rep.target = Graph::cycle(5)?.complement();
        return Ok(rep);
    }
    let theta = theta_anticycle(n)?.value;
    let nf = n as f64;
    let pi = std::f64::consts::PI;
    let cos_pi_n = (pi / nf).cos();
    let dim = n - 2;
    let mut vectors = Vec::with_capacity(n);
    for j in 0..n {
        let mut v = vec![0.0; dim];
        v[0] = (theta / nf).sqrt();
        for m in 1..=(n - 3) / 2 {
            let sign_t = if (j * (m + 1)) % 2 == 0 { 1.0 } else { -1.0 };
            let sign_m = if (m + 1) % 2 == 0 { 1.0 } else { -1.0 };
            let radicand =
                2.0 * (cos_pi_n + sign_m * ((m as f64 + 1.0) * pi / nf).cos()) / (nf * cos_pi_n);
            let t = sign_t * radicand.sqrt();
            let r = j as f64 * (m as f64 + 1.0) * pi / nf;
            v[2 * m - 1] = t * r.cos();
            v[2 * m] = t * r.sin();
        }
        vectors.push(v);
    }
    let mut handle = vec![0.0; dim];
    handle[0] = 1.0;
    Ok(OrthonormalRepresentation {
        vectors,
        handle,
        target: Graph::cycle(n)?.complement(),
    })
}

/// Σ_j ⟨v_j, ψ⟩², which equals ϑ of the target for a Lovász-optimum OR.
pub fn handle_value(rep: &OrthonormalRepresentation) -> f64 {
    rep.vectors
        .iter()
        .map(|v| dot(v, &rep.handle).powi(2))
        .sum()
}

/// Faithfulness verification result with the measured residuals.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct FaithfulnessReport {
    pub pass: bool,
    /// max |⟨v_i, v_j⟩| over orthogonal (pattern-adjacent) pairs.
    pub max_adjacent_dot: f64,
    /// min |⟨v_i, v_j⟩| over non-orthogonal pairs (f64::INFINITY if none).
    pub min_nonadjacent_dot: f64,
    /// max | ‖v‖ − 1 |.
    pub max_norm_error: f64,
    /// min pairwise distance between assigned vectors.
    pub min_vector_distance: f64,
    /// Whether the orthogonality pattern matches the target graph (up to
    /// relabeling).
    pub pattern_matches_target: bool,
}

/// Checks unit norms, the orthogonality pattern, and that the pattern graph
/// matches the target up to isomorphism. Nothing is thrown: failures are
/// reported in the result.
pub fn verify_faithful(rep: &OrthonormalRepresentation) -> FaithfulnessReport {
    verify_faithful_with(rep, &VerifyThresholds::default())
}

pub fn verify_faithful_with(
    rep: &OrthonormalRepresentation,
    thresholds: &VerifyThresholds,
) -> FaithfulnessReport {
    let n = rep.n();
    let mut max_norm_error: f64 = 0.0;
    for v in &rep.vectors {
        max_norm_error = max_norm_error.max((dot(v, v).sqrt() - 1.0).abs());
    }

    // Orthogonality pattern from the measured dots.
    let mut max_adj: f64 = 0.0;
    let mut min_nonadj = f64::INFINITY;
    let mut min_dist = f64::INFINITY;
    let mut pattern_edges = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            let d = dot(&rep.vectors[i], &rep.vectors[j]).abs();
            if d <= thresholds.adjacency {
                pattern_edges.push((i, j));
                max_adj = max_adj.max(d);
            } else {
                min_nonadj = min_nonadj.min(d);
            }
            let dist: f64 = rep.vectors[i]
                .iter()
                .zip(&rep.vectors[j])
                .map(|(a, b)| (a - b) * (a - b))
                .sum::<f64>()
                .sqrt();
            min_dist = min_dist.min(dist);
        }
    }
    let separated = min_nonadj.is_infinite() || min_nonadj >= thresholds.nonadjacency;

    let pattern = Graph::from_edges(n, &pattern_edges).expect("pattern edges are simple");
    let pattern_matches_target = pattern_matches(&pattern, &rep.target);

    FaithfulnessReport {
        pass: max_norm_error <= thresholds.norm
            && separated
            && min_dist >= thresholds.distinctness
            && pattern_matches_target,
        max_adjacent_dot: max_adj,
        min_nonadjacent_dot: min_nonadj,
        max_norm_error,
        min_vector_distance: min_dist,
        pattern_matches_target,
    }
}

/// Pattern-vs-target match: exact equality first, then the known circulant
/// relabeling (covers the cycle construction at any size), then a full
/// isomorphism search for small graphs.
fn pattern_matches(pattern: &Graph, target: &Graph) -> bool {
    if pattern.n() != target.n() {
        return false;
    }
    if pattern == target {
        return true;
    }
    let n = pattern.n();
    if n % 2 == 1 {
        // The umbrella's native orthogonality offset is s = (n−1)/2; the map
        // t -> t·s (mod n) carries the target cycle onto that pattern.
        let s = (n - 1) / 2;
        let perm: Vec<usize> = (0..n).map(|t| (t * s) % n).collect();
        let relabeled: Vec<(usize, usize)> = target
            .edges()
            .iter()
            .map(|&(u, v)| {
                let (a, b) = (perm[u], perm[v]);
                (a.min(b), a.max(b))
            })
            .collect();
        if let Ok(g) = Graph::from_edges(n, &relabeled) {
            if g == *pattern {
                return true;
            }
        }
    }
    matches!(is_isomorphic(pattern, target), Ok(true))
}

/// Which residue case of the antihole witness construction applies.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum WitnessCase {
    C1,
    C2,
    C3,
}

/// A dimension witness inside C̄_n: a vertex set inducing a complete graph
/// minus a (near-)perfect matching, forcing dimension ⌊2n/3⌋.
///
/// `vertex_set` uses 1-based labels matching the usual numbering of C̄_n.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DimensionWitness {
    pub n: usize,
    pub case: WitnessCase,
    pub vertex_set: Vec<usize>,
    pub bound: usize,
}

/// Builds and verifies the witness for odd n >= 5. Cases by n mod 3:
/// n = 3m picks {1,2,4,5,...,3(m−1)+1,3(m−1)+2} (K_{2m} minus m edges);
/// n = 3m+1 the same; n = 3m+2 additionally takes 3m+1 (K_{2m+1} minus m).
pub fn dimension_witness(n: usize) -> Result<DimensionWitness> {
    require_odd_ge(n, 5, "dimension_witness")?;
    let m = n / 3;
    let case = match n % 3 {
        0 => WitnessCase::C1,
        1 => WitnessCase::C2,
        _ => WitnessCase::C3,
    };
    let mut vertex_set: Vec<usize> = (0..m).flat_map(|i| [3 * i + 1, 3 * i + 2]).collect();
    if case == WitnessCase::C3 {
        vertex_set.push(3 * m + 1);
    }
    let bound = 2 * n / 3;
    debug_assert_eq!(bound, vertex_set.len());

    // The induced subgraph of C̄_n on the witness must be K_k minus ⌊k/2⌋
    // disjoint edges.
    let anticycle = Graph::cycle(n)?.complement();
    let zero_based: Vec<usize> = vertex_set.iter().map(|v| v - 1).collect();
    let induced = anticycle.induced(&zero_based);
    let expected = Graph::complete_minus_matching(vertex_set.len())?;
    let ok = if induced.n() <= 16 {
        is_isomorphic(&induced, &expected)?
    } else {
        // Same order, size, and degree multiset; the matching structure is
        // forced for complete-minus-matching graphs.
        complete_minus_matching_shape(&induced)
    };
    if !ok {
        return Err(Error::Internal(format!(
            "witness subgraph for n={n} is not complete-minus-matching"
        )));
    }
    Ok(DimensionWitness {
        n,
        case,
        vertex_set,
        bound,
    })
}

fn complete_minus_matching_shape(g: &Graph) -> bool {
    let k = g.n();
    let expected_edges = k * (k - 1) / 2 - k / 2;
    if g.edge_count() != expected_edges {
        return false;
    }
    // Every vertex misses at most one other vertex.
    g.vertices().all(|v| g.degree(v) >= k - 2)
}

/// A quantum-dimension lower bound with its provenance.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct DimensionBound {
    pub bound: usize,
    pub provenance: Vec<String>,
}

/// Lower bound on the dimension needed to realize the exclusivity structure
/// of `g` faithfully: the maximum of
///
/// - ω(G), since a clique forces that many mutually orthogonal vectors
///   (standard linear algebra, not specific to holes);
/// - 3 when any induced odd hole is present;
/// - ⌊2n/3⌋ for the largest induced odd antihole C̄_n.
pub fn dimension_lower_bound(g: &Graph) -> Result<DimensionBound> {
    if g.n() > DIMENSION_BOUND_VERTEX_CAP {
        return Err(Error::resource_cap(format!(
            "dimension bound capped at {DIMENSION_BOUND_VERTEX_CAP} vertices, got {}",
            g.n()
        )));
    }
    let mut provenance = Vec::new();
    let mut candidates: Vec<(usize, String)> = Vec::new();

    let omega = max_clique(g)?.len();
    if omega > 0 {
        candidates.push((
            omega,
            format!("clique of size {omega} forces {omega} mutually orthogonal vectors [standard linear algebra]"),
        ));
    }
    if let Some(hole) = find_odd_hole(g) {
        candidates.push((
            3,
            format!("induced odd hole of length {} is realizable in dimension 3", hole.len()),
        ));
    }
    if let Some(len) = largest_odd_hole_len(&g.complement()) {
        candidates.push((
            2 * len / 3,
            format!(
                "largest induced odd antihole has {len} vertices: bound floor(2*{len}/3) = {}",
                2 * len / 3
            ),
        ));
    }
    let bound = candidates.iter().map(|(b, _)| *b).max().unwrap_or(0);
    for (b, desc) in candidates {
        let marker = if b == bound { " <- winner" } else { "" };
        provenance.push(format!("{desc}{marker}"));
    }
    Ok(DimensionBound { bound, provenance })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn anticycle(n: usize) -> Graph {
        Graph::cycle(n).unwrap().complement()
    }

    #[test]
    fn cycle_rep_handle_and_projections() {
        let rep = build_or_cycle(5).unwrap();
        assert_eq!(rep.dimension(), 3);
        assert!((handle_value(&rep) - 5f64.sqrt()).abs() < 1e-9);
        let expected = 5f64.sqrt() / 5.0;
        for v in &rep.vectors {
            assert!((dot(v, &rep.handle).powi(2) - expected).abs() < 1e-12);
        }
    }

    #[test]
    fn cycle_rep_native_orthogonality_offset() {
        let rep = build_or_cycle(7).unwrap();
        assert!(dot(&rep.vectors[0], &rep.vectors[3]).abs() < 1e-12);
        assert!(dot(&rep.vectors[0], &rep.vectors[1]).abs() > 1e-3);
    }

    #[test]
    fn anticycle_rep_values() {
        let rep = build_or_anticycle(7).unwrap();
        assert_eq!(rep.dimension(), 5);
        assert!((handle_value(&rep) - theta_anticycle(7).unwrap().value).abs() < 1e-9);
        let rep9 = build_or_anticycle(9).unwrap();
        assert!((handle_value(&rep9) - theta_anticycle(9).unwrap().value).abs() < 1e-9);
        assert!((handle_value(&rep9) - 2.0641777724759327).abs() < 1e-9);
    }

    #[test]
    fn anticycle_rep_orthogonality_pattern() {
        let rep = build_or_anticycle(9).unwrap();
        let mut orthogonal = 0;
        let mut adjacentish = 0;
        for i in 0..9 {
            for j in i + 1..9 {
                let d = dot(&rep.vectors[i], &rep.vectors[j]).abs();
                let consecutive = (j - i == 1) || (i == 0 && j == 8);
                if consecutive {
                    assert!(d > 1e-6, "consecutive pair ({i},{j}) has dot {d}");
                    adjacentish += 1;
                } else {
                    assert!(d < 1e-9, "non-consecutive pair ({i},{j}) has dot {d}");
                    orthogonal += 1;
                }
            }
        }
        assert_eq!(orthogonal, 27);
        assert_eq!(adjacentish, 9);
    }

    #[test]
    fn faithfulness_families() {
        for n in (5..=15).step_by(2) {
            let rep = build_or_cycle(n).unwrap();
            let report = verify_faithful(&rep);
            assert!(report.pass, "cycle n={n}: {report:?}");
            let rep = build_or_anticycle(n).unwrap();
            let report = verify_faithful(&rep);
            assert!(report.pass, "anticycle n={n}: {report:?}");
        }
    }

    #[test]
    fn negating_a_vector_preserves_faithfulness() {
        let mut rep = build_or_cycle(7).unwrap();
        for x in rep.vectors[2].iter_mut() {
            *x = -*x;
        }
        assert!(verify_faithful(&rep).pass);
    }

    #[test]
    fn wrong_target_fails() {
        let mut rep = build_or_cycle(7).unwrap();
        rep.target = anticycle(7);
        let report = verify_faithful(&rep);
        assert!(!report.pass);
        assert!(!report.pattern_matches_target);
    }

    #[test]
    fn handle_orthogonal_to_everything_gives_zero() {
        let mut rep = build_or_cycle(5).unwrap();
        // No vector of the umbrella has a pure e_z ... third coordinates are
        // sin φ sin(2πj/5) which are nonzero except j=0; use a vector
        // orthogonal to the span check instead: zero handle components.
        rep.handle = vec![0.0, 0.0, 0.0];
        assert_eq!(handle_value(&rep), 0.0);
    }

    #[test]
    fn witness_cases() {
        let w = dimension_witness(7).unwrap();
        assert_eq!(w.case, WitnessCase::C2);
        assert_eq!(w.vertex_set, vec![1, 2, 4, 5]);
        assert_eq!(w.bound, 4);

        let w = dimension_witness(9).unwrap();
        assert_eq!(w.case, WitnessCase::C1);
        assert_eq!(w.vertex_set, vec![1, 2, 4, 5, 7, 8]);
        assert_eq!(w.bound, 6);

        let w = dimension_witness(5).unwrap();
        assert_eq!(w.case, WitnessCase::C3);
        assert_eq!(w.vertex_set, vec![1, 2, 4]);
        assert_eq!(w.bound, 3);

        assert!(dimension_witness(4).is_err());
    }

    #[test]
    fn witness_edge_counts() {
        for n in (5..=15).step_by(2) {
            let w = dimension_witness(n).unwrap();
            assert_eq!(w.bound, 2 * n / 3);
            let k = w.vertex_set.len();
            let zero_based: Vec<usize> = w.vertex_set.iter().map(|v| v - 1).collect();
            let induced = anticycle(n).induced(&zero_based);
            assert_eq!(induced.edge_count(), k * (k - 1) / 2 - k / 2);
        }
    }

    #[test]
    fn dimension_bounds() {
        assert_eq!(dimension_lower_bound(&anticycle(7)).unwrap().bound, 4);
        assert_eq!(dimension_lower_bound(&anticycle(9)).unwrap().bound, 6);
        assert_eq!(dimension_lower_bound(&Graph::cycle(5).unwrap()).unwrap().bound, 3);
        assert_eq!(dimension_lower_bound(&Graph::complete(4)).unwrap().bound, 4);
    }

    #[test]
    fn dimension_bound_provenance_names_winner() {
        let b = dimension_lower_bound(&anticycle(9)).unwrap();
        assert!(b.provenance.iter().any(|p| p.contains("winner")));
    }
}
