//! Exact-rational linear programming: a dense primal simplex with Bland's
//! anti-cycling rule, used for fractional-packing LPs. Optima like 5/2 or 7/3
//! come out as exact fractions, so downstream tests are equality checks.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Exact fraction of arbitrary-precision integers, always in lowest terms
/// with a positive denominator.
pub type Rational = num_rational::BigRational;

/// Convenience constructor for small rationals.
pub fn rat(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

/// Serde adapter printing a [`Rational`] as `"p/q"` (or `"p"` for integers).
pub mod fractional_packing_string {
    use super::Rational;
    use serde::{Deserialize, Deserializer, Serializer};
    use std::str::FromStr;

    pub fn serialize<S: Serializer>(r: &Rational, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&r.to_string())
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Rational, D::Error> {
        let text = String::deserialize(d)?;
        Rational::from_str(&text).map_err(serde::de::Error::custom)
    }
}

/// Maximization LP in the form
///
/// ```text
/// max c·w   s.t.   A w <= b,   w >= 0
/// ```
///
/// All right-hand sides must be nonnegative, so `w = 0` is feasible. Upper
/// bounds `w_i <= 1` for packing problems are ordinary rows.
#[derive(Clone, Debug)]
pub struct LinearProgram {
    objective: Vec<Rational>,
    rows: Vec<Vec<Rational>>,
    rhs: Vec<Rational>,
}

impl LinearProgram {
    pub fn new(
        objective: Vec<Rational>,
        rows: Vec<Vec<Rational>>,
        rhs: Vec<Rational>,
    ) -> Result<LinearProgram> {
        if rows.len() != rhs.len() {
            return Err(Error::InvalidInput(format!(
                "{} rows but {} right-hand sides",
                rows.len(),
                rhs.len()
            )));
        }
        if rows.iter().any(|r| r.len() != objective.len()) {
            return Err(Error::InvalidInput(
                "constraint row width differs from objective".into(),
            ));
        }
        if rhs.iter().any(|b| b.is_negative()) {
            return Err(Error::InvalidInput(
                "right-hand sides must be nonnegative".into(),
            ));
        }
        Ok(LinearProgram {
            objective,
            rows,
            rhs,
        })
    }

    /// The fractional-packing LP of a clique family: maximize `Σ w_i` subject
    /// to `Σ_{i∈C} w_i <= 1` for every clique `C` and `0 <= w_i <= 1`.
    pub fn packing(num_vars: usize, cliques: &[Vec<usize>]) -> LinearProgram {
        let one = Rational::one();
        let mut rows = Vec::with_capacity(cliques.len() + num_vars);
        let mut rhs = Vec::with_capacity(cliques.len() + num_vars);
        for clique in cliques {
            let mut row = vec![Rational::zero(); num_vars];
            for &i in clique {
                row[i] = one.clone();
            }
            rows.push(row);
            rhs.push(one.clone());
        }
        for i in 0..num_vars {
            let mut row = vec![Rational::zero(); num_vars];
            row[i] = one.clone();
            rows.push(row);
            rhs.push(one.clone());
        }
        LinearProgram {
            objective: vec![one; num_vars],
            rows,
            rhs,
        }
    }

    pub fn num_vars(&self) -> usize {
        self.objective.len()
    }
}

/// An optimal vertex solution together with the exact optimum.
#[derive(Clone, Debug, PartialEq)]
pub struct LpSolution {
    pub value: Rational,
    pub solution: Vec<Rational>,
}

/// Solves the LP by primal simplex with Bland's rule (entering: lowest-index
/// improving column; leaving: lowest basic index among minimum ratios), which
/// guarantees termination. The reported optimum is re-certified against the
/// original data via an exact dual solution before it is returned.
pub fn simplex_max(lp: &LinearProgram) -> Result<LpSolution> {
    let nv = lp.num_vars();
    let m = lp.rows.len();
    let total = nv + m;

    // Dense tableau: m rows of [A | I | b], basis starts at the slacks.
    let mut tab: Vec<Vec<Rational>> = Vec::with_capacity(m);
    for (row, b) in lp.rows.iter().zip(&lp.rhs) {
        let mut t = Vec::with_capacity(total + 1);
        t.extend(row.iter().cloned());
        for i in 0..m {
            t.push(if tab.len() == i {
                Rational::one()
            } else {
                Rational::zero()
            });
        }
        t.push(b.clone());
        tab.push(t);
    }
    let mut basis: Vec<usize> = (nv..total).collect();
    // Reduced-cost row (costs of slacks are zero).
    let mut rc: Vec<Rational> = lp
        .objective
        .iter()
        .cloned()
        .chain(std::iter::repeat(Rational::zero()).take(m))
        .collect();

    loop {
        let Some(enter) = rc.iter().position(|c| c.is_positive()) else {
            break;
        };
        // Ratio test.
        let mut leave: Option<usize> = None;
        let mut best_ratio: Option<Rational> = None;
        for i in 0..m {
            let a = &tab[i][enter];
            if a.is_positive() {
                let ratio = &tab[i][total] / a;
                let better = match &best_ratio {
                    None => true,
                    Some(r) => {
                        ratio < *r || (ratio == *r && basis[i] < basis[leave.unwrap()])
                    }
                };
                if better {
                    best_ratio = Some(ratio);
                    leave = Some(i);
                }
            }
        }
        let Some(piv_row) = leave else {
            return Err(Error::Unbounded);
        };

        // Pivot on (piv_row, enter).
        let piv = tab[piv_row][enter].clone();
        for x in tab[piv_row].iter_mut() {
            *x /= &piv;
        }
        for i in 0..m {
            if i != piv_row && !tab[i][enter].is_zero() {
                let factor = tab[i][enter].clone();
                for j in 0..=total {
                    let delta = &factor * &tab[piv_row][j];
                    tab[i][j] -= delta;
                }
            }
        }
        if !rc[enter].is_zero() {
            let factor = rc[enter].clone();
            for j in 0..total {
                let delta = &factor * &tab[piv_row][j];
                rc[j] -= delta;
            }
        }
        basis[piv_row] = enter;
    }

    let mut solution = vec![Rational::zero(); nv];
    for (i, &b) in basis.iter().enumerate() {
        if b < nv {
            solution[b] = tab[i][total].clone();
        }
    }
    let value: Rational = lp
        .objective
        .iter()
        .zip(&solution)
        .map(|(c, x)| c * x)
        .sum();

    certify(lp, &basis, &solution, &value)?;
    Ok(LpSolution { value, solution })
}

/// Independent optimality certificate: recovers the dual `y` from the final
/// basis using a fresh Gaussian solve on the *original* data, then checks
/// primal feasibility, dual feasibility, and equality of objectives.
fn certify(
    lp: &LinearProgram,
    basis: &[usize],
    solution: &[Rational],
    value: &Rational,
) -> Result<()> {
    let nv = lp.num_vars();
    let m = lp.rows.len();
    let fail = |msg: &str| Err(Error::Internal(format!("simplex certificate: {msg}")));

    // Primal feasibility.
    if solution.iter().any(|x| x.is_negative()) {
        return fail("negative variable");
    }
    for (row, b) in lp.rows.iter().zip(&lp.rhs) {
        let lhs: Rational = row.iter().zip(solution).map(|(a, x)| a * x).sum();
        if lhs > *b {
            return fail("violated constraint");
        }
    }

    // Dual solve: Bᵀ y = c_B where B's columns are original constraint
    // columns (or slack unit columns) indexed by the basis.
    let col = |j: usize, i: usize| -> Rational {
        if j < nv {
            lp.rows[i][j].clone()
        } else if j - nv == i {
            Rational::one()
        } else {
            Rational::zero()
        }
    };
    let mut aug: Vec<Vec<Rational>> = (0..m)
        .map(|r| {
            // Row r of Bᵀ is (column basis[r])ᵀ over constraint index.
            let mut row: Vec<Rational> = (0..m).map(|i| col(basis[r], i)).collect();
            row.push(if basis[r] < nv {
                lp.objective[basis[r]].clone()
            } else {
                Rational::zero()
            });
            row
        })
        .collect();
    let y = gaussian_solve(&mut aug).ok_or_else(|| {
        Error::Internal("simplex certificate: singular basis".into())
    })?;

    // Dual feasibility: y >= 0 and yᵀA >= c (slack columns give y_i >= 0).
    for yi in &y {
        if yi.is_negative() {
            return fail("negative dual");
        }
    }
    for j in 0..nv {
        let reduced: Rational = (0..m).map(|i| &y[i] * &lp.rows[i][j]).sum();
        if reduced < lp.objective[j] {
            return fail("positive reduced cost at optimum");
        }
    }
    let dual_value: Rational = y.iter().zip(&lp.rhs).map(|(yi, b)| yi * b).sum();
    if dual_value != *value {
        return fail("duality gap");
    }
    Ok(())
}

/// Solves the square augmented system `[M | rhs]` in place; returns `None`
/// when `M` is singular.
fn gaussian_solve(aug: &mut [Vec<Rational>]) -> Option<Vec<Rational>> {
    let m = aug.len();
    for c in 0..m {
        let pivot = (c..m).find(|&r| !aug[r][c].is_zero())?;
        aug.swap(c, pivot);
        let p = aug[c][c].clone();
        for x in aug[c].iter_mut() {
            *x /= &p;
        }
        for r in 0..m {
            if r != c && !aug[r][c].is_zero() {
                let f = aug[r][c].clone();
                for j in 0..=m {
                    let delta = &f * &aug[c][j];
                    aug[r][j] -= delta;
                }
            }
        }
    }
    Some(aug.iter().map(|row| row[m].clone()).collect())
}
