//! The Lovász number ϑ(G).
//!
//! Odd cycles and their complements have closed forms:
//!
//! ```text
//! ϑ(C_n)  = n cos(π/n) / (1 + cos(π/n))        (n odd)
//! ϑ(C̄_n) = (1 + cos(π/n)) / cos(π/n)
//! ```
//!
//! so ϑ(C_n)·ϑ(C̄_n) = n. Everything else goes through a small-graph SDP:
//!
//! ```text
//! ϑ(G) = max ⟨J, X⟩   s.t.  tr X = 1,  X_ij = 0 (ij ∈ E),  X ⪰ 0
//! ```
//!
//! solved by a first-order splitting scheme that alternates projection onto
//! the affine constraints with projection onto the PSD cone (eigendecomposition),
//! plus over-relaxation. The reported value carries a certified primal-dual
//! gap: a feasible `X` gives a lower bound, and any edge-supported dual `Y`
//! gives the upper bound λ_max(J − Y).

use nalgebra::{DMatrix, DVector};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::invariants::{chromatic_number, clique_number, independence_number};

/// Default certified-gap target for the SDP.
pub const DEFAULT_SDP_TOL: f64 = 1e-6;
/// Verdict tolerance for the QCG/QNCG decision.
pub const QCG_DECISION_TOL: f64 = 1e-4;
/// Vertex cap for the SDP solver.
pub const DEFAULT_SDP_VERTEX_CAP: usize = 64;
/// Iteration cap for the splitting scheme.
const MAX_ITERATIONS: usize = 200_000;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum ThetaMethod {
    #[serde(rename = "closed-form")]
    ClosedForm,
    #[serde(rename = "sdp")]
    Sdp,
}

/// A ϑ estimate: `value` is guaranteed within `certified_gap` of the truth
/// (gap 0 for closed forms).
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct ThetaValue {
    pub value: f64,
    pub method: ThetaMethod,
    #[serde(rename = "gap")]
    pub certified_gap: f64,
}

fn require_odd_ge(n: usize, min: usize, what: &str) -> Result<()> {
    if n < min || n % 2 == 0 {
        return Err(Error::invalid_parameter(format!(
            "{what} needs odd n >= {min}, got {n}"
        )));
    }
    Ok(())
}

/// ϑ(C_n) for odd n >= 5, in closed form.
pub fn theta_cycle(n: usize) -> Result<ThetaValue> {
    require_odd_ge(n, 5, "theta_cycle")?;
    let c = (std::f64::consts::PI / n as f64).cos();
    Ok(ThetaValue {
        value: n as f64 * c / (1.0 + c),
        method: ThetaMethod::ClosedForm,
        certified_gap: 0.0,
    })
}

/// ϑ(C̄_n) for odd n >= 5, in closed form.
pub fn theta_anticycle(n: usize) -> Result<ThetaValue> {
    require_odd_ge(n, 5, "theta_anticycle")?;
    let c = (std::f64::consts::PI / n as f64).cos();
    Ok(ThetaValue {
        value: (1.0 + c) / c,
        method: ThetaMethod::ClosedForm,
        certified_gap: 0.0,
    })
}

/// Recognizes odd cycles / odd anticycles structurally (a connected 2-regular
/// graph of odd order is a cycle), so closed forms apply at any size.
fn recognize(g: &Graph) -> Option<ThetaValue> {
    let n = g.n();
    if n >= 5 && n % 2 == 1 {
        if g.vertices().all(|v| g.degree(v) == 2) && g.is_connected() {
            return theta_cycle(n).ok();
        }
        if g.vertices().all(|v| g.degree(v) == n - 3) {
            let c = g.complement();
            if c.is_connected() {
                return theta_anticycle(n).ok();
            }
        }
    }
    None
}

/// ϑ(G): closed form when `g` is an odd cycle or anticycle, SDP otherwise.
pub fn theta(g: &Graph) -> Result<ThetaValue> {
    match recognize(g) {
        Some(t) => Ok(t),
        None => theta_sdp(g, DEFAULT_SDP_TOL),
    }
}

/// ϑ(G) by the splitting scheme described in the module docs. Returns once
/// the certified gap reaches `tol`; hitting the iteration cap returns the
/// best bounds found (callers can see the larger gap).
pub fn theta_sdp(g: &Graph, tol: f64) -> Result<ThetaValue> {
    let n = g.n();
    if n > DEFAULT_SDP_VERTEX_CAP {
        return Err(Error::resource_cap(format!(
            "theta SDP capped at {DEFAULT_SDP_VERTEX_CAP} vertices, got {n}"
        )));
    }
    if n == 0 {
        return Ok(ThetaValue {
            value: 0.0,
            method: ThetaMethod::Sdp,
            certified_gap: 0.0,
        });
    }

    let edges = g.edges();
    let solver = ThetaSdp {
        n,
        edges,
        shift_symmetric: g.shift_symmetric(),
        relaxation: 1.6,
    };
    let (value, gap) = solver.solve(tol);
    Ok(ThetaValue {
        value,
        method: ThetaMethod::Sdp,
        certified_gap: gap,
    })
}

struct ThetaSdp {
    n: usize,
    edges: Vec<(usize, usize)>,
    shift_symmetric: bool,
    relaxation: f64,
}

impl ThetaSdp {
    /// Projection onto {tr X = 1, X_ij = 0 on edges}: the constraint sets are
    /// orthogonal, so zeroing edges then shifting the diagonal is exact.
    fn project_affine(&self, x: &mut DMatrix<f64>) {
        for &(i, j) in &self.edges {
            x[(i, j)] = 0.0;
            x[(j, i)] = 0.0;
        }
        let shift = (1.0 - x.trace()) / self.n as f64;
        for i in 0..self.n {
            x[(i, i)] += shift;
        }
    }

    /// Averages X over the cyclic shift i -> i+1 (an automorphism when the
    /// graph is circulant); preserves feasibility and the optimum, and speeds
    /// convergence considerably.
    fn symmetrize(&self, x: &mut DMatrix<f64>) {
        let n = self.n;
        let mut diag_mean = vec![0.0; n];
        for d in 0..n {
            let mut s = 0.0;
            for i in 0..n {
                s += x[(i, (i + d) % n)];
            }
            diag_mean[d] = s / n as f64;
        }
        for i in 0..n {
            for j in 0..n {
                x[(i, j)] = diag_mean[(n + j - i) % n];
            }
        }
    }

    fn project_psd(x: &DMatrix<f64>) -> DMatrix<f64> {
        let eig = x.clone().symmetric_eigen();
        let clamped = DVector::from_iterator(
            x.nrows(),
            eig.eigenvalues.iter().map(|&l| l.max(0.0)),
        );
        &eig.eigenvectors * DMatrix::from_diagonal(&clamped) * eig.eigenvectors.transpose()
    }

    /// Lower bound: repair the affine-feasible X into a PSD-feasible point by
    /// mixing with the identity, then evaluate the objective.
    fn lower_bound(&self, x: &DMatrix<f64>) -> f64 {
        let eig = x.clone().symmetric_eigen();
        let lambda_min = eig.eigenvalues.min();
        let eps = (-lambda_min).max(0.0) * (1.0 + 1e-9) + 1e-300;
        let obj = x.sum();
        (obj + eps * self.n as f64) / (1.0 + eps * self.n as f64)
    }

    /// Upper bound: λ_max(A) where A agrees with the all-ones matrix off the
    /// edge set and carries the current dual estimate on the edges.
    fn upper_bound(&self, u: &DMatrix<f64>, rho: f64) -> f64 {
        let mut a = DMatrix::from_element(self.n, self.n, 1.0);
        for &(i, j) in &self.edges {
            a[(i, j)] = rho * u[(i, j)];
            a[(j, i)] = rho * u[(j, i)];
        }
        a.symmetric_eigen().eigenvalues.max()
    }

    /// Returns (value, certified_gap).
    fn solve(&self, tol: f64) -> (f64, f64) {
        let n = self.n;
        let nf = n as f64;
        let mut rho = 1.0;
        let mut z = DMatrix::from_diagonal_element(n, n, 1.0 / nf);
        let mut u = DMatrix::zeros(n, n);
        let mut x = DMatrix::zeros(n, n);
        let mut best: Option<(f64, f64)> = None; // (lower, upper)

        for iter in 0..MAX_ITERATIONS {
            // (a) affine projection of Z - U + J/ρ
            for i in 0..n {
                for j in 0..n {
                    x[(i, j)] = z[(i, j)] - u[(i, j)] + 1.0 / rho;
                }
            }
            self.project_affine(&mut x);
            if self.shift_symmetric {
                self.symmetrize(&mut x);
            }
            // (b) PSD projection with over-relaxation
            let a = self.relaxation;
            let x_relaxed = &x * a + &z * (1.0 - a);
            let z_prev = z.clone();
            z = Self::project_psd(&(&x_relaxed + &u));
            u += &x_relaxed - &z;

            if iter % 25 == 24 || iter == MAX_ITERATIONS - 1 {
                let lower = self.lower_bound(&x);
                let upper = self.upper_bound(&u, rho);
                let improved = match best {
                    None => true,
                    Some((bl, bu)) => upper - lower < bu - bl,
                };
                if improved {
                    best = Some((lower, upper));
                }
                let (bl, bu) = best.unwrap();
                if bu - bl <= tol {
                    break;
                }
                // Residual balancing keeps ρ in a productive range.
                let r_primal = (&x - &z).norm();
                let r_dual = (&z - &z_prev).norm() * rho;
                if r_primal > 10.0 * r_dual && rho < 1e4 {
                    rho *= 2.0;
                    u /= 2.0;
                } else if r_dual > 10.0 * r_primal && rho > 1e-4 {
                    rho /= 2.0;
                    u *= 2.0;
                }
            }
        }

        let (lower, upper) = best.expect("at least one bound evaluation");
        let gap = (upper - lower).max(0.0);
        let mut value = 0.5 * (lower + upper);
        if n >= 1 {
            value = value.max(1.0); // ϑ >= 1 for any nonempty graph
        }
        (value, gap)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Verdict {
    #[serde(rename = "QCG")]
    Qcg,
    #[serde(rename = "QNCG")]
    Qncg,
    #[serde(rename = "undecided")]
    Undecided,
}

/// α-versus-ϑ classification: a quantum contextual graph (QCG) has
/// α(G) < ϑ(G); a quantum noncontextual graph (QNCG) has α(G) = ϑ(G).
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ContextualityClass {
    pub alpha: usize,
    pub theta: ThetaValue,
    pub verdict: Verdict,
    pub margin: f64,
}

/// Classifies `g` as QCG / QNCG / undecided with decision tolerance
/// [`QCG_DECISION_TOL`]; the verdict is never QCG when the SDP gap could
/// explain the whole margin.
pub fn classify(g: &Graph) -> Result<ContextualityClass> {
    let alpha = independence_number(g)?;
    let theta = theta(g)?;
    let margin = theta.value - alpha as f64;
    let verdict = if margin > QCG_DECISION_TOL && margin > theta.certified_gap {
        Verdict::Qcg
    } else if margin.abs() <= QCG_DECISION_TOL && theta.certified_gap <= QCG_DECISION_TOL {
        Verdict::Qncg
    } else {
        Verdict::Undecided
    };
    Ok(ContextualityClass {
        alpha,
        theta,
        verdict,
        margin,
    })
}

/// Sandwich inequality ω(G) <= ϑ(Ḡ) <= χ(G), checked within numeric
/// tolerance plus the certified SDP gap.
pub fn sandwich_check(g: &Graph) -> Result<bool> {
    let omega = clique_number(g)? as f64;
    let chi = chromatic_number(g)? as f64;
    let th = theta(&g.complement())?;
    let slack = 1e-6 + th.certified_gap;
    Ok(omega <= th.value + slack && th.value <= chi + slack)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn closed_form_values() {
        assert!((theta_cycle(5).unwrap().value - 5f64.sqrt()).abs() < 1e-12);
        assert!((theta_cycle(7).unwrap().value - 3.317667207394096).abs() < 1e-12);
        assert!((theta_anticycle(7).unwrap().value - 2.109916264174742).abs() < 1e-12);
        assert!((theta_anticycle(5).unwrap().value - 5f64.sqrt()).abs() < 1e-12);
        assert!(theta_cycle(4).is_err());
        assert!(theta_cycle(3).is_err());
        assert!(theta_anticycle(6).is_err());
    }

    #[test]
    fn cycle_theta_stays_below_half_n() {
        for n in (5..=101).step_by(2) {
            assert!(theta_cycle(n).unwrap().value < n as f64 / 2.0);
        }
    }

    #[test]
    fn product_identity() {
        for n in (5..=101).step_by(2) {
            let p = theta_cycle(n).unwrap().value * theta_anticycle(n).unwrap().value;
            assert!((p - n as f64).abs() < 1e-12, "n={n}: {p}");
        }
    }

    #[test]
    fn sdp_on_pentagon() {
        let t = theta_sdp(&Graph::cycle(5).unwrap(), 1e-6).unwrap();
        assert!(t.certified_gap <= 1e-6);
        assert!((t.value - 5f64.sqrt()).abs() < 1e-5);
    }

    #[test]
    fn sdp_on_complete_graphs() {
        for n in [2usize, 4, 6] {
            let t = theta_sdp(&Graph::complete(n), 1e-6).unwrap();
            assert!((t.value - 1.0).abs() < 1e-5, "K_{n}: {}", t.value);
        }
    }

    #[test]
    fn sdp_on_edgeless() {
        let t = theta_sdp(&Graph::edgeless(6), 1e-6).unwrap();
        assert!((t.value - 6.0).abs() < 1e-5);
    }

    #[test]
    fn recognition_dispatch() {
        let t = theta(&Graph::cycle(15).unwrap()).unwrap();
        assert_eq!(t.method, ThetaMethod::ClosedForm);
        let t = theta(&Graph::cycle(9).unwrap().complement()).unwrap();
        assert_eq!(t.method, ThetaMethod::ClosedForm);
        assert!((t.value - theta_anticycle(9).unwrap().value).abs() < 1e-15);
        let t = theta(&Graph::complete(4)).unwrap();
        assert_eq!(t.method, ThetaMethod::Sdp);
    }

    #[test]
    fn classify_pentagon_is_qcg() {
        let c = classify(&Graph::cycle(5).unwrap()).unwrap();
        assert_eq!(c.verdict, Verdict::Qcg);
        assert_eq!(c.alpha, 2);
        assert!((c.margin - (5f64.sqrt() - 2.0)).abs() < 1e-9);
    }

    #[test]
    fn classify_even_cycle_and_clique_are_qncg() {
        let c = classify(&Graph::cycle(6).unwrap()).unwrap();
        assert_eq!(c.verdict, Verdict::Qncg);
        assert_eq!(c.alpha, 3);
        let c = classify(&Graph::complete(5)).unwrap();
        assert_eq!(c.verdict, Verdict::Qncg);
        assert_eq!(c.alpha, 1);
    }

    #[test]
    fn sandwich_on_small_graphs() {
        assert!(sandwich_check(&Graph::cycle(7).unwrap()).unwrap());
        assert!(sandwich_check(&Graph::complete(4)).unwrap());
        assert!(sandwich_check(&Graph::johnson(5, 2).unwrap()).unwrap());
    }

    #[test]
    fn sdp_cap() {
        let g = Graph::edgeless(65);
        assert!(matches!(
            theta_sdp(&g, 1e-6),
            Err(Error::ResourceCap(_))
        ));
    }
}
