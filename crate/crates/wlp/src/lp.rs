//! Exact rational linear programming over systems in standard form
//! `{x : Ax = b, x >= 0}` via the two-phase dense tableau simplex method with
//! Bland's anti-cycling rule. Everything is `BigRational`; no tolerances.

use num_traits::{Signed, Zero};

use crate::arith::Rat;
use crate::linalg::RatMat;

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Sense {
    Min,
    Max,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum LpOutcome {
    /// Optimal value and an optimal basic solution (a vertex when the feasible
    /// region is pointed, which `x >= 0` guarantees).
    Optimal { value: Rat, witness: Vec<Rat> },
    Infeasible,
    Unbounded,
}

struct Tableau {
    /// Row-major body, each row has `cols + 1` entries, the last being the rhs.
    rows: Vec<Vec<Rat>>,
    /// Reduced-cost row, same width; last entry tracks minus the objective.
    obj: Vec<Rat>,
    /// Basic variable of each row.
    basis: Vec<usize>,
    cols: usize,
}

impl Tableau {
    fn pivot(&mut self, r: usize, j: usize) {
        let inv = self.rows[r][j].clone();
        for v in self.rows[r].iter_mut() {
            if !v.is_zero() {
                *v /= &inv;
            }
        }
        let prow = self.rows[r].clone();
        for (i, row) in self.rows.iter_mut().enumerate() {
            if i == r || row[j].is_zero() {
                continue;
            }
            let f = row[j].clone();
            for (v, p) in row.iter_mut().zip(&prow) {
                if !p.is_zero() {
                    *v -= &f * p;
                }
            }
        }
        if !self.obj[j].is_zero() {
            let f = self.obj[j].clone();
            for (v, p) in self.obj.iter_mut().zip(&prow) {
                if !p.is_zero() {
                    *v -= &f * p;
                }
            }
        }
        self.basis[r] = j;
    }

    /// Bland's rule minimization: smallest-index entering column with negative
    /// reduced cost; leaving row = min ratio, ties broken by smallest basic
    /// variable index. Returns false when the current objective is unbounded.
    fn run_simplex(&mut self, enterable: usize) -> bool {
        loop {
            let Some(j) = (0..enterable).find(|&j| self.obj[j].is_negative()) else {
                return true;
            };
            let mut leave: Option<usize> = None;
            let mut best: Option<Rat> = None;
            for i in 0..self.rows.len() {
                if self.rows[i][j].is_positive() {
                    let ratio = &self.rows[i][self.cols] / &self.rows[i][j];
                    let better = match &best {
                        None => true,
                        Some(b) => {
                            ratio < *b
                                || (ratio == *b
                                    && self.basis[i] < self.basis[leave.unwrap()])
                        }
                    };
                    if better {
                        best = Some(ratio);
                        leave = Some(i);
                    }
                }
            }
            match leave {
                Some(r) => self.pivot(r, j),
                None => return false,
            }
        }
    }

    /// Rebuild the reduced-cost row for cost vector `c` (indexed over all
    /// columns) against the current basis.
    fn set_objective(&mut self, c: &[Rat]) {
        self.obj = c.to_vec();
        self.obj.push(Rat::zero());
        for (i, row) in self.rows.iter().enumerate() {
            let cb = c[self.basis[i]].clone();
            if cb.is_zero() {
                continue;
            }
            for (v, p) in self.obj.iter_mut().zip(row) {
                if !p.is_zero() {
                    *v -= &cb * p;
                }
            }
        }
    }
}

/// Solve `opt c.x  s.t.  Ax = b, x >= 0` exactly.
pub fn lp_solve(a: &RatMat, b: &[Rat], c: &[Rat], sense: Sense) -> LpOutcome {
    assert_eq!(a.rows(), b.len(), "rhs length mismatch");
    assert_eq!(a.cols(), c.len(), "objective length mismatch");
    let n = a.cols();
    let m = a.rows();

    let minimize: Vec<Rat> = match sense {
        Sense::Min => c.to_vec(),
        Sense::Max => c.iter().map(|v| -v).collect(),
    };

    if m == 0 {
        // Feasible region is the whole nonnegative orthant.
        if minimize.iter().any(|v| v.is_negative()) {
            return LpOutcome::Unbounded;
        }
        return LpOutcome::Optimal {
            value: Rat::zero(),
            witness: vec![Rat::zero(); n],
        };
    }

    // Phase I with artificial variables; rows normalized to b >= 0.
    let total = n + m;
    let mut rows = Vec::with_capacity(m);
    for (i, bi) in b.iter().enumerate() {
        let neg = bi.is_negative();
        let mut row: Vec<Rat> = Vec::with_capacity(total + 1);
        for j in 0..n {
            let v = a.get(i, j).clone();
            row.push(if neg { -v } else { v });
        }
        for k in 0..m {
            row.push(if k == i { Rat::from_integer(1.into()) } else { Rat::zero() });
        }
        row.push(if neg { -bi.clone() } else { bi.clone() });
        rows.push(row);
    }
    let mut t = Tableau {
        rows,
        obj: Vec::new(),
        basis: (n..total).collect(),
        cols: total,
    };
    let mut phase1_cost = vec![Rat::zero(); total];
    for cj in phase1_cost.iter_mut().skip(n) {
        *cj = Rat::from_integer(1.into());
    }
    t.set_objective(&phase1_cost);
    let bounded = t.run_simplex(total);
    debug_assert!(bounded, "phase I objective is bounded below by 0");
    // Objective value is -obj[rhs].
    if t.obj[total].is_negative() {
        return LpOutcome::Infeasible;
    }
    // Drive remaining artificials (necessarily at value 0) out of the basis;
    // rows with no original-column support are redundant and get dropped.
    let mut keep = vec![true; t.rows.len()];
    for (i, k) in keep.iter_mut().enumerate() {
        if t.basis[i] >= n {
            match (0..n).find(|&j| !t.rows[i][j].is_zero()) {
                Some(j) => t.pivot(i, j),
                None => *k = false,
            }
        }
    }
    if keep.iter().any(|&k| !k) {
        let mut rows = Vec::new();
        let mut basis = Vec::new();
        for (i, k) in keep.iter().enumerate() {
            if *k {
                rows.push(std::mem::take(&mut t.rows[i]));
                basis.push(t.basis[i]);
            }
        }
        t.rows = rows;
        t.basis = basis;
    }

    // Phase II over the original columns only.
    let mut phase2_cost = minimize.clone();
    phase2_cost.extend(std::iter::repeat_with(Rat::zero).take(m));
    t.set_objective(&phase2_cost);
    if !t.run_simplex(n) {
        return LpOutcome::Unbounded;
    }
    let mut witness = vec![Rat::zero(); n];
    for (i, &bv) in t.basis.iter().enumerate() {
        if bv < n {
            witness[bv] = t.rows[i][t.cols].clone();
        }
    }
    let mut value = Rat::zero();
    for (cj, xj) in c.iter().zip(&witness) {
        if !cj.is_zero() && !xj.is_zero() {
            value += cj * xj;
        }
    }
    LpOutcome::Optimal { value, witness }
}

/// Feasibility check only (phase I).
pub fn lp_feasible(a: &RatMat, b: &[Rat]) -> bool {
    let c = vec![Rat::zero(); a.cols()];
    !matches!(lp_solve(a, b, &c, Sense::Min), LpOutcome::Infeasible)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::{int, rat, Int, Rat};
    use crate::linalg::{IntMat, RatMat};
    use num_traits::Zero;

    fn rmat(rows: &[Vec<i64>]) -> RatMat {
        IntMat::from_rows(rows).to_rat()
    }

    fn rv(v: &[i64]) -> Vec<Rat> {
        v.iter().map(|&x| rat(x, 1)).collect()
    }

    #[test]
    fn simplex_on_triangle() {
        // max x1 + x2 over x1 + x2 + s = 2 -> 2.
        let a = rmat(&[vec![1, 1, 1]]);
        match lp_solve(&a, &rv(&[2]), &rv(&[1, 1, 0]), Sense::Max) {
            LpOutcome::Optimal { value, .. } => assert_eq!(value, rat(2, 1)),
            o => panic!("unexpected {o:?}"),
        }
    }

    #[test]
    fn infeasible_system() {
        // x1 + x2 = -1, x >= 0.
        let a = rmat(&[vec![1, 1]]);
        assert_eq!(
            lp_solve(&a, &rv(&[-1]), &rv(&[0, 0]), Sense::Min),
            LpOutcome::Infeasible
        );
    }

    #[test]
    fn unbounded_ray() {
        // max x1 with x1 - x2 = 0: the ray x1 = x2 -> unbounded.
        let a = rmat(&[vec![1, -1]]);
        assert_eq!(
            lp_solve(&a, &rv(&[0]), &rv(&[1, 0]), Sense::Max),
            LpOutcome::Unbounded
        );
    }

    #[test]
    fn fractional_optimum_is_exact() {
        // max x1 s.t. 2x1 + s = 1 -> 1/2 at vertex.
        let a = rmat(&[vec![2, 1]]);
        match lp_solve(&a, &rv(&[1]), &rv(&[1, 0]), Sense::Max) {
            LpOutcome::Optimal { value, witness } => {
                assert_eq!(value, rat(1, 2));
                assert_eq!(witness[0], rat(1, 2));
            }
            o => panic!("unexpected {o:?}"),
        }
    }

    #[test]
    fn degenerate_redundant_rows() {
        // Duplicate constraint rows must not break phase I cleanup.
        let a = rmat(&[vec![1, 1, 1], vec![1, 1, 1], vec![2, 2, 2]]);
        match lp_solve(&a, &rv(&[3, 3, 6]), &rv(&[1, 2, 0]), Sense::Max) {
            LpOutcome::Optimal { value, .. } => assert_eq!(value, rat(6, 1)),
            o => panic!("unexpected {o:?}"),
        }
    }

    /// Brute-force optimum by enumerating all basic feasible solutions.
    fn vertex_optimum(a: &RatMat, b: &[Rat], c: &[Rat], sense: Sense) -> Option<Rat> {
        let n = a.cols();
        let r = crate::linalg::rank(a);
        let mut best: Option<Rat> = None;
        let idx: Vec<usize> = (0..n).collect();
        fn combos(idx: &[usize], k: usize) -> Vec<Vec<usize>> {
            if k == 0 {
                return vec![vec![]];
            }
            if idx.len() < k {
                return vec![];
            }
            let mut out = Vec::new();
            for (i, &f) in idx.iter().enumerate() {
                for mut rest in combos(&idx[i + 1..], k - 1) {
                    rest.insert(0, f);
                    out.push(rest);
                }
            }
            out
        }
        for cols in combos(&idx, r) {
            // Solve the full system with nonbasic coordinates pinned to zero.
            let sub = RatMat::from_fn(a.rows(), r, |i, j| a.get(i, cols[j]).clone());
            if crate::linalg::rank(&sub) < r {
                continue;
            }
            // Least-squares-free approach: solve sub * xb = b uniquely on a row basis.
            let Some(xb) = solve_unique_rect(&sub, b) else { continue };
            if xb.iter().any(|v| v.is_negative()) {
                continue;
            }
            let mut full = vec![Rat::zero(); n];
            for (j, &cj) in cols.iter().enumerate() {
                full[cj] = xb[j].clone();
            }
            // Check all rows (row basis may have dropped some).
            if a.mul_vec(&full) != b {
                continue;
            }
            let val: Rat = c
                .iter()
                .zip(&full)
                .map(|(ci, xi)| ci * xi)
                .fold(Rat::zero(), |s, v| s + v);
            best = Some(match best {
                None => val,
                Some(old) => match sense {
                    Sense::Min => old.min(val),
                    Sense::Max => old.max(val),
                },
            });
        }
        best
    }

    /// Unique solution of a full-column-rank rectangular system, if consistent.
    fn solve_unique_rect(a: &RatMat, b: &[Rat]) -> Option<Vec<Rat>> {
        match crate::linalg::solve_linear(a, b) {
            crate::linalg::LinSolve::Solution {
                particular,
                nullspace,
            } if nullspace.is_empty() => Some(particular),
            _ => None,
        }
    }

    #[test]
    fn matches_vertex_enumeration_on_random_instances() {
        // Deterministic LCG so failures reproduce.
        let mut state: u64 = 0x9E3779B97F4A7C15;
        let mut next = move || {
            state = state.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            (state >> 33) as i64
        };
        let mut solved = 0;
        for _case in 0..60 {
            let n = 2 + (next().unsigned_abs() as usize % 5); // 2..=6
            let s = 1 + (next().unsigned_abs() as usize % 3); // 1..=3
            let mut rows = Vec::new();
            for i in 0..s {
                let mut row: Vec<i64> = (0..n).map(|_| next().rem_euclid(7) - 3).collect();
                if i == 0 {
                    // All-positive row keeps the region bounded.
                    for v in row.iter_mut() {
                        *v = 1 + v.rem_euclid(3);
                    }
                }
                rows.push(row);
            }
            let a = rmat(&rows);
            // rhs from a random nonnegative point -> feasible.
            let x0: Vec<Rat> = (0..n).map(|_| rat(next().rem_euclid(4), 1)).collect();
            let b = a.mul_vec(&x0);
            let c: Vec<Rat> = (0..n).map(|_| rat(next().rem_euclid(9) - 4, 1)).collect();
            for sense in [Sense::Min, Sense::Max] {
                let got = lp_solve(&a, &b, &c, sense);
                let want = vertex_optimum(&a, &b, &c, sense);
                match (got, want) {
                    (LpOutcome::Optimal { value, witness }, Some(w)) => {
                        assert_eq!(value, w, "LP vs vertex enumeration");
                        // Witness feasibility.
                        assert_eq!(a.mul_vec(&witness), b);
                        assert!(witness.iter().all(|v| !v.is_negative()));
                        solved += 1;
                    }
                    (LpOutcome::Optimal { .. }, None) => {
                        panic!("LP found optimum, enumeration found none")
                    }
                    (o, w) => panic!("mismatch: lp={o:?}, vertices={w:?}"),
                }
            }
        }
        assert!(solved >= 100, "enough instances exercised");
    }

    #[test]
    fn zero_variable_edge_cases() {
        let a = RatMat::zeros(1, 0);
        assert_eq!(
            lp_solve(&a, &[Rat::zero()], &[], Sense::Min),
            LpOutcome::Optimal { value: Rat::zero(), witness: vec![] }
        );
        let b = vec![Rat::from_integer(Int::from(2))];
        assert_eq!(lp_solve(&a, &b, &[], Sense::Min), LpOutcome::Infeasible);
        let _ = int(0);
    }
}
