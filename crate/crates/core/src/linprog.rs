//! Dense two-phase simplex over a generic scalar.
//!
//! Instantiated with `BigRational` the solver is exact; with `f64` it uses
//! the scalar's tie tolerance for pivot decisions. Bland's rule is used
//! throughout, so the exact instantiation cannot cycle. Problems in this
//! crate are tiny (tens of variables), so no effort is spent on sparsity.

use crate::scalar::Scalar;

/// Minimize `objective · x` subject to `eq` (a·x = b), `le` (a·x ≤ b), x ≥ 0.
#[derive(Clone, Debug, Default)]
pub struct Problem<S> {
    pub objective: Vec<S>,
    pub eq: Vec<(Vec<S>, S)>,
    pub le: Vec<(Vec<S>, S)>,
}

#[derive(Clone, Debug, PartialEq)]
pub enum Solution<S> {
    Optimal { x: Vec<S>, value: S },
    Infeasible,
    Unbounded,
}

impl<S: Scalar> Solution<S> {
    pub fn optimal(self) -> Option<(Vec<S>, S)> {
        match self {
            Solution::Optimal { x, value } => Some((x, value)),
            _ => None,
        }
    }
}

struct Tableau<S> {
    // rows[r] has layout: [structural..., artificial..., rhs]
    rows: Vec<Vec<S>>,
    cost: Vec<S>, // reduced-cost row, same layout
    basis: Vec<usize>,
    n_struct: usize,
    tol: S,
}

impl<S: Scalar> Tableau<S> {
    fn pivot(&mut self, row: usize, col: usize) {
        let piv = self.rows[row][col].clone();
        for v in self.rows[row].iter_mut() {
            *v = v.clone() / piv.clone();
        }
        let pivot_row = self.rows[row].clone();
        for r in 0..self.rows.len() {
            if r == row {
                continue;
            }
            let factor = self.rows[r][col].clone();
            if !factor.is_zero() {
                for (v, p) in self.rows[r].iter_mut().zip(&pivot_row) {
                    *v = v.clone() - factor.clone() * p.clone();
                }
            }
        }
        let factor = self.cost[col].clone();
        if !factor.is_zero() {
            for (v, p) in self.cost.iter_mut().zip(&pivot_row) {
                *v = v.clone() - factor.clone() * p.clone();
            }
        }
        self.basis[row] = col;
    }

    /// Bland's rule: entering = lowest-index column with negative reduced
    /// cost, leaving = lowest-index basic row among minimal ratios.
    fn run(&mut self, allowed_cols: usize) -> bool {
        loop {
            let neg_tol = S::zero() - self.tol.clone();
            let Some(col) = (0..allowed_cols).find(|&j| self.cost[j] < neg_tol) else {
                return true; // optimal
            };
            let rhs = self.rows[0].len() - 1;
            let mut leave: Option<(usize, S)> = None;
            for r in 0..self.rows.len() {
                let a = self.rows[r][col].clone();
                if a > self.tol {
                    let ratio = self.rows[r][rhs].clone() / a;
                    let better = match &leave {
                        None => true,
                        Some((lr, lv)) => {
                            ratio < *lv || (ratio == *lv && self.basis[r] < self.basis[*lr])
                        }
                    };
                    if better {
                        leave = Some((r, ratio));
                    }
                }
            }
            let Some((row, _)) = leave else {
                return false; // unbounded in this column
            };
            self.pivot(row, col);
        }
    }
}

pub fn solve<S: Scalar>(p: &Problem<S>) -> Solution<S> {
    let n = p.objective.len();
    let n_slack = p.le.len();
    let m = p.eq.len() + p.le.len();
    let n_struct = n + n_slack;
    let tol = S::tie_tol();

    if m == 0 {
        // No constraints: x = 0 is optimal unless some cost is negative.
        if p.objective.iter().any(|c| *c < S::zero()) {
            return Solution::Unbounded;
        }
        return Solution::Optimal {
            x: vec![S::zero(); n],
            value: S::zero(),
        };
    }

    // Assemble rows with slacks, flipping signs so every rhs is nonnegative.
    let mut rows: Vec<Vec<S>> = Vec::with_capacity(m);
    let mut assemble = |coeffs: &[S], b: &S, slack: Option<usize>| {
        let mut row = vec![S::zero(); n_struct + m + 1];
        let flip = *b < S::zero();
        for (j, c) in coeffs.iter().enumerate() {
            row[j] = if flip { S::zero() - c.clone() } else { c.clone() };
        }
        if let Some(s) = slack {
            row[n + s] = if flip {
                S::zero() - S::one()
            } else {
                S::one()
            };
        }
        let rhs = if flip { S::zero() - b.clone() } else { b.clone() };
        *row.last_mut().unwrap() = rhs;
        rows.push(row);
    };
    for (coeffs, b) in &p.eq {
        assert_eq!(coeffs.len(), n, "constraint arity mismatch");
        assemble(coeffs, b, None);
    }
    for (s, (coeffs, b)) in p.le.iter().enumerate() {
        assert_eq!(coeffs.len(), n, "constraint arity mismatch");
        assemble(coeffs, b, Some(s));
    }

    // Phase 1: artificial basis, minimize the sum of artificials.
    let mut basis = Vec::with_capacity(m);
    for (r, row) in rows.iter_mut().enumerate() {
        row[n_struct + r] = S::one();
        basis.push(n_struct + r);
    }
    let mut cost = vec![S::zero(); n_struct + m + 1];
    for r in 0..m {
        // reduced costs of phase-1 objective against the artificial basis
        for j in 0..=n_struct + m {
            cost[j] = cost[j].clone() - rows[r][j].clone();
        }
    }
    for j in n_struct..n_struct + m {
        cost[j] = S::zero();
    }
    let mut t = Tableau {
        rows,
        cost,
        basis,
        n_struct,
        tol: tol.clone(),
    };
    if !t.run(n_struct) {
        // phase-1 objective is bounded below by construction
        return Solution::Infeasible;
    }
    let rhs = t.rows[0].len() - 1;
    let phase1 = S::zero() - t.cost[rhs].clone();
    if phase1 > crate::scalar::comparison_slack(&S::one()) {
        return Solution::Infeasible;
    }

    // Drive any artificial still in the basis out (or drop a redundant row).
    for r in 0..t.rows.len() {
        if t.basis[r] >= t.n_struct {
            if let Some(col) = (0..t.n_struct).find(|&j| t.rows[r][j].abs() > tol) {
                t.pivot(r, col);
            }
        }
    }

    // Phase 2: real objective expressed through the current basis.
    let mut cost = vec![S::zero(); n_struct + m + 1];
    for (j, c) in p.objective.iter().enumerate() {
        cost[j] = c.clone();
    }
    for r in 0..t.rows.len() {
        let b = t.basis[r];
        let c_b = cost[b].clone();
        if !c_b.is_zero() {
            for j in 0..=n_struct + m {
                cost[j] = cost[j].clone() - c_b.clone() * t.rows[r][j].clone();
            }
        }
    }
    t.cost = cost;
    if !t.run(n_struct) {
        return Solution::Unbounded;
    }

    let mut x = vec![S::zero(); n];
    for (r, &b) in t.basis.iter().enumerate() {
        if b < n {
            x[b] = t.rows[r][rhs].clone();
        }
    }
    let value = p
        .objective
        .iter()
        .zip(&x)
        .fold(S::zero(), |acc, (c, v)| acc + c.clone() * v.clone());
    Solution::Optimal { x, value }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_rational::BigRational;

    fn q(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    #[test]
    fn exact_degenerate_square() {
        // min -x - y on the unit square intersected with x + y <= 1.
        let p = Problem {
            objective: vec![q(-1, 1), q(-1, 1)],
            eq: vec![],
            le: vec![
                (vec![q(1, 1), q(0, 1)], q(1, 1)),
                (vec![q(0, 1), q(1, 1)], q(1, 1)),
                (vec![q(1, 1), q(1, 1)], q(1, 1)),
            ],
        };
        let (_, value) = solve(&p).optimal().unwrap();
        assert_eq!(value, q(-1, 1));
    }

    #[test]
    fn equality_and_infeasible() {
        // x + y = 2, x,y >= 0, x <= 0.5, y <= 0.5: infeasible.
        let p = Problem {
            objective: vec![q(1, 1), q(1, 1)],
            eq: vec![(vec![q(1, 1), q(1, 1)], q(2, 1))],
            le: vec![
                (vec![q(1, 1), q(0, 1)], q(1, 2)),
                (vec![q(0, 1), q(1, 1)], q(1, 2)),
            ],
        };
        assert_eq!(solve(&p), Solution::Infeasible);
    }

    #[test]
    fn unbounded_detected() {
        let p = Problem {
            objective: vec![q(-1, 1)],
            eq: vec![],
            le: vec![],
        };
        assert_eq!(solve(&p), Solution::Unbounded);
    }

    #[test]
    fn convex_combination_certificate() {
        // (1,1) as a convex combination of (0,0), (3,0), (0,3):
        // weights (1/3, 1/3, 1/3).
        let pts = [[0i64, 0], [3, 0], [0, 3]];
        let target = [1i64, 1];
        let mut eq = Vec::new();
        for d in 0..2 {
            let row: Vec<BigRational> = pts.iter().map(|p| q(p[d], 1)).collect();
            eq.push((row, q(target[d], 1)));
        }
        eq.push((vec![q(1, 1); 3], q(1, 1)));
        let p = Problem {
            objective: vec![q(0, 1); 3],
            eq,
            le: vec![],
        };
        let (x, _) = solve(&p).optimal().unwrap();
        let total: BigRational = x.iter().cloned().sum();
        assert_eq!(total, q(1, 1));
        for d in 0..2 {
            let got: BigRational = x
                .iter()
                .zip(&pts)
                .map(|(l, p)| l.clone() * q(p[d], 1))
                .sum();
            assert_eq!(got, q(target[d], 1));
        }
    }

    #[test]
    fn float_instance_matches_rational() {
        let p = Problem::<f64> {
            objective: vec![-3.0, -5.0],
            eq: vec![],
            le: vec![
                (vec![1.0, 0.0], 4.0),
                (vec![0.0, 2.0], 12.0),
                (vec![3.0, 2.0], 18.0),
            ],
        };
        let (x, value) = solve(&p).optimal().unwrap();
        assert!((value + 36.0).abs() < 1e-9);
        assert!((x[0] - 2.0).abs() < 1e-9 && (x[1] - 6.0).abs() < 1e-9);
    }
}
