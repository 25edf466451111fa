//! Rational polytopes in standard form `{x : Ax = b, x >= 0}` with integer
//! data, plus H-form polytopes `{x : Gx <= h, Ex = f}` and the standardization
//! bridge between them (translation by exact LP lower bounds, slack variables,
//! sign-splitting as a fallback for coordinates unbounded below).

use num_traits::{One, Signed, Zero};

use crate::arith::{lcm_pos, Int, Rat};
use crate::error::{Error, Result};
use crate::linalg::{clear_denominators, rref, solve_unique, IntMat, RatMat};
use crate::lp::{lp_solve, LpOutcome, Sense};
use crate::poly::Polynomial;

/// `{x : Ax = b, x >= 0}` with integer `A`, `b`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct StandardPolytope {
    a: IntMat,
    b: Vec<Int>,
}

impl StandardPolytope {
    pub fn new(a: IntMat, b: Vec<Int>) -> Self {
        assert_eq!(a.rows(), b.len(), "rhs length must match row count");
        StandardPolytope { a, b }
    }

    pub fn a(&self) -> &IntMat {
        &self.a
    }

    pub fn b(&self) -> &[Int] {
        &self.b
    }

    /// Ambient dimension (number of variables).
    pub fn n(&self) -> usize {
        self.a.cols()
    }

    pub fn rows(&self) -> usize {
        self.a.rows()
    }

    /// The standard simplex `Delta_k = {y in R^{k+1} : sum y = 1, y >= 0}`.
    pub fn standard_simplex(k: usize) -> Self {
        let a = IntMat::from_fn(1, k + 1, |_, _| Int::one());
        StandardPolytope::new(a, vec![Int::one()])
    }

    /// The unit d-cube `{0 <= x_i <= 1}` in standard form (`d` slack columns).
    pub fn unit_cube(d: usize) -> Self {
        let a = IntMat::from_fn(d, 2 * d, |i, j| {
            if j == i || j == d + i {
                Int::one()
            } else {
                Int::zero()
            }
        });
        StandardPolytope::new(a, vec![Int::one(); d])
    }

    /// Dilation `tP = {x : Ax = t b, x >= 0}`, defined for any integer `t`
    /// (negative dilations are generally empty but are first-class citizens).
    pub fn dilate(&self, t: &Int) -> Self {
        StandardPolytope {
            a: self.a.clone(),
            b: self.b.iter().map(|v| v * t).collect(),
        }
    }

    /// Cartesian product as a block-diagonal system.
    pub fn block_product(parts: &[&StandardPolytope]) -> Self {
        let blocks: Vec<&IntMat> = parts.iter().map(|p| &p.a).collect();
        let a = IntMat::block_diag(&blocks);
        let b = parts.iter().flat_map(|p| p.b.iter().cloned()).collect();
        StandardPolytope::new(a, b)
    }

    pub fn rat_system(&self) -> (RatMat, Vec<Rat>) {
        (
            self.a.to_rat(),
            self.b.iter().map(|v| Rat::from_integer(v.clone())).collect(),
        )
    }

    pub fn is_feasible(&self) -> bool {
        let (a, b) = self.rat_system();
        crate::lp::lp_feasible(&a, &b)
    }

    /// Membership test for an integer point.
    pub fn contains_point(&self, x: &[Int]) -> bool {
        x.len() == self.n()
            && x.iter().all(|v| !v.is_negative())
            && self.a.mul_vec(x) == self.b
    }

    /// Exact LP range of coordinate `j` over the polytope.
    pub fn coordinate_bounds(&self, j: usize) -> CoordBounds {
        assert!(j < self.n());
        let (a, b) = self.rat_system();
        let mut c = vec![Rat::zero(); self.n()];
        c[j] = Rat::one();
        let lo = match lp_solve(&a, &b, &c, Sense::Min) {
            LpOutcome::Infeasible => return CoordBounds::Infeasible,
            LpOutcome::Unbounded => unreachable!("coordinate bounded below by 0"),
            LpOutcome::Optimal { value, .. } => value,
        };
        match lp_solve(&a, &b, &c, Sense::Max) {
            LpOutcome::Infeasible => CoordBounds::Infeasible,
            LpOutcome::Unbounded => CoordBounds::Unbounded,
            LpOutcome::Optimal { value, .. } => CoordBounds::Range(lo, value),
        }
    }

    /// A positive integer multiple of the denominator of `P`: the lcm of the
    /// coordinate denominators over all vertices (basic feasible solutions).
    /// The Ehrhart period divides this. Errors with `PeriodBudgetExceeded`
    /// when the number of candidate column bases exceeds `budget`.
    pub fn period_bound(&self, budget: u128) -> Result<Int> {
        let n = self.n();
        let (a, b) = self.rat_system();
        // Row-reduce [A | b]; inconsistent or trivial systems have period 1.
        let mut w = RatMat::from_fn(a.rows(), n + 1, |i, j| {
            if j < n {
                a.get(i, j).clone()
            } else {
                b[i].clone()
            }
        });
        let pivots = rref(&mut w, 1);
        let r = pivots.len();
        for i in r..w.rows() {
            if !w.get(i, n).is_zero() {
                return Ok(Int::one()); // empty polytope
            }
        }
        if r == 0 || n == 0 {
            return Ok(Int::one());
        }
        let combos = n_choose_k_u128(n, r);
        if combos > budget {
            return Err(Error::PeriodBudgetExceeded(combos));
        }
        let ared = RatMat::from_fn(r, n, |i, j| w.get(i, j).clone());
        let bred: Vec<Rat> = (0..r).map(|i| w.get(i, n).clone()).collect();
        let mut l = Int::one();
        let mut cols: Vec<usize> = (0..r).collect();
        loop {
            let sub = RatMat::from_fn(r, r, |i, j| ared.get(i, cols[j]).clone());
            if let Some(xb) = solve_unique(&sub, &bred) {
                if xb.iter().all(|v| !v.is_negative()) {
                    for v in &xb {
                        l = lcm_pos(&l, v.denom());
                    }
                }
            }
            // Next r-combination of {0..n-1} in lexicographic order.
            let mut i = r;
            loop {
                if i == 0 {
                    return Ok(l);
                }
                i -= 1;
                if cols[i] != i + n - r {
                    break;
                }
            }
            cols[i] += 1;
            for k in i + 1..r {
                cols[k] = cols[k - 1] + 1;
            }
        }
    }
}

fn n_choose_k_u128(n: usize, k: usize) -> u128 {
    let mut acc: u128 = 1;
    for i in 0..k.min(n - k) {
        acc = acc.saturating_mul((n - i) as u128) / (i as u128 + 1);
    }
    acc
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CoordBounds {
    Infeasible,
    Unbounded,
    Range(Rat, Rat),
}

/// Coordinate range over an H-polytope; either side may be open.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum HCoordBounds {
    Infeasible,
    Range(Option<Rat>, Option<Rat>),
}

/// `{x : Gx <= h, Ex = f}` with integer data. Rational rows are cleared by
/// per-row lcm scaling in the builders.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HPolytope {
    g: IntMat,
    h: Vec<Int>,
    eq: IntMat,
    f: Vec<Int>,
    n: usize,
}

impl HPolytope {
    pub fn new(g: IntMat, h: Vec<Int>, eq: IntMat, f: Vec<Int>) -> Result<Self> {
        if g.rows() != h.len() || eq.rows() != f.len() {
            return Err(Error::DimensionMismatch(
                "inequality/equality rhs length".into(),
            ));
        }
        let n = if g.rows() > 0 { g.cols() } else { eq.cols() };
        if (g.rows() > 0 && g.cols() != n) || (eq.rows() > 0 && eq.cols() != n) {
            return Err(Error::DimensionMismatch(
                "G and E column counts differ".into(),
            ));
        }
        Ok(HPolytope { g, h, eq, f, n })
    }

    /// Build from possibly-rational rows; each row is scaled by the lcm of its
    /// denominators (a positive factor, so the set is unchanged).
    pub fn from_rat_rows(
        g: Vec<(Vec<Rat>, Rat)>,
        eq: Vec<(Vec<Rat>, Rat)>,
        n: usize,
    ) -> Result<Self> {
        let clear = |rows: Vec<(Vec<Rat>, Rat)>| -> (Vec<Vec<Int>>, Vec<Int>) {
            let mut mat = Vec::new();
            let mut rhs = Vec::new();
            for (mut row, r) in rows {
                row.push(r);
                let (_, ints) = clear_denominators(&row);
                let mut ints = ints;
                let last = ints.pop().unwrap();
                mat.push(ints);
                rhs.push(last);
            }
            (mat, rhs)
        };
        for (row, _) in g.iter().chain(eq.iter()) {
            if row.len() != n {
                return Err(Error::DimensionMismatch("row length".into()));
            }
        }
        let (gm, h) = clear(g);
        let (em, f) = clear(eq);
        let gmat = if gm.is_empty() {
            IntMat::zeros(0, n)
        } else {
            IntMat::from_int_rows(gm)
        };
        let emat = if em.is_empty() {
            IntMat::zeros(0, n)
        } else {
            IntMat::from_int_rows(em)
        };
        HPolytope::new(gmat, h, emat, f)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn g(&self) -> &IntMat {
        &self.g
    }

    pub fn h(&self) -> &[Int] {
        &self.h
    }

    pub fn eq(&self) -> &IntMat {
        &self.eq
    }

    pub fn f(&self) -> &[Int] {
        &self.f
    }

    /// Does `x` satisfy all constraints?
    pub fn contains(&self, x: &[Int]) -> bool {
        let gx = self.g.mul_vec(x);
        if gx.iter().zip(&self.h).any(|(v, h)| v > h) {
            return false;
        }
        let ex = self.eq.mul_vec(x);
        ex.iter().zip(&self.f).all(|(v, f)| v == f)
    }

    /// Exact LP min/max of coordinate `j` over the H-polytope, via a
    /// sign-split standard-form encoding (the split ray `u,v += 1` keeps the
    /// objective invariant, so boundedness of the coordinate is preserved).
    /// `None` on a side means unbounded in that direction.
    pub fn coordinate_bounds(&self, j: usize) -> HCoordBounds {
        let (a, b) = self.split_system();
        let mut c = vec![Rat::zero(); 2 * self.n + self.g.rows()];
        c[j] = Rat::one();
        c[self.n + j] = -Rat::one();
        let lo = match lp_solve(&a, &b, &c, Sense::Min) {
            LpOutcome::Infeasible => return HCoordBounds::Infeasible,
            LpOutcome::Unbounded => None,
            LpOutcome::Optimal { value, .. } => Some(value),
        };
        let hi = match lp_solve(&a, &b, &c, Sense::Max) {
            LpOutcome::Infeasible => return HCoordBounds::Infeasible,
            LpOutcome::Unbounded => None,
            LpOutcome::Optimal { value, .. } => Some(value),
        };
        HCoordBounds::Range(lo, hi)
    }

    /// Standard-form encoding with `x = u - v` and one slack per inequality:
    /// `[G -G I](u,v,s) = h`, `[E -E 0](u,v,s) = f`.
    fn split_system(&self) -> (RatMat, Vec<Rat>) {
        let n = self.n;
        let gi = self.g.rows();
        let cols = 2 * n + gi;
        let rows = gi + self.eq.rows();
        let a = RatMat::from_fn(rows, cols, |i, j| {
            let v = if i < gi {
                if j < n {
                    self.g.get(i, j).clone()
                } else if j < 2 * n {
                    -self.g.get(i, j - n).clone()
                } else if j - 2 * n == i {
                    Int::one()
                } else {
                    Int::zero()
                }
            } else {
                let e = i - gi;
                if j < n {
                    self.eq.get(e, j).clone()
                } else if j < 2 * n {
                    -self.eq.get(e, j - n).clone()
                } else {
                    Int::zero()
                }
            };
            Rat::from_integer(v)
        });
        let b = self
            .h
            .iter()
            .chain(self.f.iter())
            .map(|v| Rat::from_integer(v.clone()))
            .collect();
        (a, b)
    }
}

/// Where each original coordinate went during standardization.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum VarMap {
    /// `x_orig = x_std[col] + offset` with integer offset.
    Shift { col: usize, offset: Int },
    /// `x_orig = x_std[pos] - x_std[neg]`.
    Split { pos: usize, neg: usize },
}

/// Records how an H-polytope was rewritten into standard form; maps lattice
/// points (and polynomials) between the two coordinate systems.
#[derive(Clone, Debug)]
pub struct AffineChange {
    pub var_map: Vec<VarMap>,
    pub slack_cols: Vec<usize>,
    pub n_std: usize,
}

impl AffineChange {
    /// Recover the original coordinates of a standard-form lattice point.
    pub fn original_point(&self, std_pt: &[Int]) -> Vec<Int> {
        self.var_map
            .iter()
            .map(|m| match m {
                VarMap::Shift { col, offset } => &std_pt[*col] + offset,
                VarMap::Split { pos, neg } => &std_pt[*pos] - &std_pt[*neg],
            })
            .collect()
    }

    /// Rewrite a polynomial in the original variables as a polynomial in the
    /// standard-form variables (exact substitution).
    pub fn transform_polynomial(&self, p: &Polynomial) -> Polynomial {
        assert_eq!(p.n_vars(), self.var_map.len(), "polynomial arity");
        let images: Vec<Polynomial> = self
            .var_map
            .iter()
            .map(|m| match m {
                VarMap::Shift { col, offset } => {
                    Polynomial::var(*col, self.n_std)
                        + Polynomial::constant(Rat::from_integer(offset.clone()), self.n_std)
                }
                VarMap::Split { pos, neg } => {
                    Polynomial::var(*pos, self.n_std) - Polynomial::var(*neg, self.n_std)
                }
            })
            .collect();
        p.substitute(&images)
    }

    /// Columns of the standard form that carry the original variables, for
    /// parametric families that need to read them (split variables get two
    /// entries with signs).
    pub fn parameter_columns(&self) -> Vec<Vec<(usize, i8)>> {
        self.var_map
            .iter()
            .map(|m| match m {
                VarMap::Shift { col, .. } => vec![(*col, 1)],
                VarMap::Split { pos, neg } => vec![(*pos, 1), (*neg, -1)],
            })
            .collect()
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FreeVarStrategy {
    /// Translate when bounded below, sign-split otherwise.
    Auto,
    /// Translate only; error on coordinates unbounded below.
    TranslateOnly,
}

/// Rewrite an H-polytope in standard form. Lattice points are in bijection
/// via the returned `AffineChange` (for translated variables the continuous
/// polytopes agree too, since the shift is `floor(min x_j)`).
pub fn standardize(hp: &HPolytope) -> Result<(StandardPolytope, AffineChange)> {
    standardize_with(hp, FreeVarStrategy::Auto)
}

pub fn standardize_with(
    hp: &HPolytope,
    strategy: FreeVarStrategy,
) -> Result<(StandardPolytope, AffineChange)> {
    let n = hp.n;
    // Lower bound per coordinate; None = unbounded below; if the region is
    // empty use zero shifts (the standard form is then infeasible, which is
    // the faithful answer).
    let mut lows: Vec<Option<Rat>> = Vec::with_capacity(n);
    let (split_a, split_b) = hp.split_system();
    let mut feasible = true;
    for j in 0..n {
        if !feasible {
            lows.push(Some(Rat::zero()));
            continue;
        }
        let mut c = vec![Rat::zero(); split_a.cols()];
        c[j] = Rat::one();
        c[n + j] = -Rat::one();
        match lp_solve(&split_a, &split_b, &c, Sense::Min) {
            LpOutcome::Infeasible => {
                feasible = false;
                lows.push(Some(Rat::zero()));
            }
            LpOutcome::Unbounded => lows.push(None),
            LpOutcome::Optimal { value, .. } => lows.push(Some(value)),
        }
    }

    let mut var_map = Vec::with_capacity(n);
    let mut next = 0usize;
    for (j, lo) in lows.iter().enumerate() {
        match lo {
            Some(v) => {
                let offset = v.floor().to_integer();
                var_map.push(VarMap::Shift { col: next, offset });
                next += 1;
            }
            None => {
                if strategy == FreeVarStrategy::TranslateOnly {
                    return Err(Error::UnboundedCoordinate(j));
                }
                var_map.push(VarMap::Split {
                    pos: next,
                    neg: next + 1,
                });
                next += 2;
            }
        }
    }
    let body_cols = next;

    // Transform a row's coefficients into std coordinates and the rhs shift.
    let transform_row = |coeffs: &[Int], rhs: &Int| -> (Vec<Int>, Int) {
        let mut out = vec![Int::zero(); body_cols];
        let mut r = rhs.clone();
        for (j, m) in var_map.iter().enumerate() {
            let c = &coeffs[j];
            if c.is_zero() {
                continue;
            }
            match m {
                VarMap::Shift { col, offset } => {
                    out[*col] += c;
                    r -= c * offset;
                }
                VarMap::Split { pos, neg } => {
                    out[*pos] += c;
                    out[*neg] -= c;
                }
            }
        }
        (out, r)
    };

    // Keep only inequality rows that are not implied by x_std >= 0.
    let mut kept_ineq: Vec<(Vec<Int>, Int)> = Vec::new();
    for i in 0..hp.g.rows() {
        let (row, rhs) = transform_row(hp.g.row(i), &hp.h[i]);
        let nz: Vec<usize> = (0..body_cols).filter(|&j| !row[j].is_zero()).collect();
        let redundant = match nz.len() {
            0 => !rhs.is_negative(),
            1 => row[nz[0]].is_negative() && !rhs.is_negative(),
            _ => false,
        };
        if !redundant {
            kept_ineq.push((row, rhs));
        }
    }
    let s = kept_ineq.len();
    let n_std = body_cols + s;
    let mut rows: Vec<Vec<Int>> = Vec::new();
    let mut b = Vec::new();
    for (k, (row, rhs)) in kept_ineq.into_iter().enumerate() {
        let mut full = row;
        full.resize(n_std, Int::zero());
        full[body_cols + k] = Int::one();
        rows.push(full);
        b.push(rhs);
    }
    for i in 0..hp.eq.rows() {
        let (row, rhs) = transform_row(hp.eq.row(i), &hp.f[i]);
        let mut full = row;
        full.resize(n_std, Int::zero());
        rows.push(full);
        b.push(rhs);
    }
    let a = if rows.is_empty() {
        IntMat::zeros(0, n_std)
    } else {
        IntMat::from_int_rows(rows)
    };
    Ok((
        StandardPolytope::new(a, b),
        AffineChange {
            var_map,
            slack_cols: (body_cols..n_std).collect(),
            n_std,
        },
    ))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::{int, rat};

    fn hp(g: &[Vec<i64>], h: &[i64], eq: &[Vec<i64>], f: &[i64], n: usize) -> HPolytope {
        let gm = if g.is_empty() {
            IntMat::zeros(0, n)
        } else {
            IntMat::from_rows(g)
        };
        let em = if eq.is_empty() {
            IntMat::zeros(0, n)
        } else {
            IntMat::from_rows(eq)
        };
        HPolytope::new(
            gm,
            h.iter().map(|&v| int(v)).collect(),
            em,
            f.iter().map(|&v| int(v)).collect(),
        )
        .unwrap()
    }

    #[test]
    fn unit_square_standardizes_to_two_slacks() {
        // 0 <= x_i <= 1 as four inequality rows.
        let square = hp(
            &[vec![1, 0], vec![0, 1], vec![-1, 0], vec![0, -1]],
            &[1, 1, 0, 0],
            &[],
            &[],
            2,
        );
        let (p, ac) = standardize(&square).unwrap();
        assert_eq!(p.n(), 4, "2 original + 2 slack variables");
        assert_eq!(ac.slack_cols, vec![2, 3]);
        assert_eq!(p.b(), &[int(1), int(1)]);
        assert!(matches!(&ac.var_map[0], VarMap::Shift { offset, .. } if offset.is_zero()));
    }

    #[test]
    fn negative_box_gets_translated() {
        // -2 <= x <= 3.
        let seg = hp(&[vec![1], vec![-1]], &[3, 2], &[], &[], 1);
        let (p, ac) = standardize(&seg).unwrap();
        assert_eq!(p.n(), 2); // x' and one slack; the lower-bound row is absorbed
        assert_eq!(p.b(), &[int(5)]);
        match &ac.var_map[0] {
            VarMap::Shift { col, offset } => {
                assert_eq!(*col, 0);
                assert_eq!(*offset, int(-2));
            }
            other => panic!("unexpected {other:?}"),
        }
        // Round-trip a point: std (4, 1) -> original 2.
        assert_eq!(ac.original_point(&[int(4), int(1)]), vec![int(2)]);
    }

    #[test]
    fn empty_hpolytope_standardizes_to_infeasible() {
        // x <= -1 and -x <= 0 is empty.
        let e = hp(&[vec![1], vec![-1]], &[-1, 0], &[], &[], 1);
        let (p, _) = standardize(&e).unwrap();
        assert!(!p.is_feasible());
    }

    #[test]
    fn fractional_lower_bound_keeps_continuous_shape() {
        // 1/2 <= x <= 3/2 via 2x >= 1, 2x <= 3: floor(1/2) = 0 shift.
        let seg = hp(&[vec![-2], vec![2]], &[-1, 3], &[], &[], 1);
        let (p, ac) = standardize(&seg).unwrap();
        match &ac.var_map[0] {
            VarMap::Shift { offset, .. } => assert_eq!(*offset, int(0)),
            other => panic!("unexpected {other:?}"),
        }
        // Both constraint rows survive (neither is implied by x >= 0).
        assert_eq!(p.rows(), 2);
    }

    #[test]
    fn unbounded_below_splits_in_auto_and_errors_in_translate_only() {
        // x1 + x2 = 0 with x1 <= 5: x2 unbounded below? No: x2 = -x1 >= -5.
        // Use x1 - x2 <= 0 only: both coordinates unbounded.
        let w = hp(&[vec![1, -1]], &[0], &[], &[], 2);
        let (_, ac) = standardize(&w).unwrap();
        assert!(matches!(ac.var_map[0], VarMap::Split { .. }));
        assert!(matches!(
            standardize_with(&w, FreeVarStrategy::TranslateOnly),
            Err(Error::UnboundedCoordinate(_))
        ));
    }

    #[test]
    fn dilation_scales_rhs_including_negative() {
        let p = StandardPolytope::standard_simplex(1);
        assert_eq!(p.dilate(&int(3)).b(), &[int(3)]);
        assert_eq!(p.dilate(&int(-2)).b(), &[int(-2)]);
        assert!(!p.dilate(&int(-2)).is_feasible());
    }

    #[test]
    fn block_product_shape() {
        let p = StandardPolytope::standard_simplex(1);
        let q = StandardPolytope::unit_cube(1);
        let pq = StandardPolytope::block_product(&[&p, &q]);
        assert_eq!(pq.n(), 4);
        assert_eq!(pq.rows(), 2);
        assert_eq!(pq.b(), &[int(1), int(1)]);
    }

    #[test]
    fn coordinate_bounds_on_simplex() {
        let p = StandardPolytope::standard_simplex(2).dilate(&int(4));
        assert_eq!(
            p.coordinate_bounds(0),
            CoordBounds::Range(rat(0, 1), rat(4, 1))
        );
    }

    #[test]
    fn coordinate_bounds_detect_unbounded_and_infeasible() {
        // {x1 - x2 = 0} is an unbounded ray in 2 vars.
        let p = StandardPolytope::new(IntMat::from_rows(&[vec![1, -1]]), vec![int(0)]);
        assert_eq!(p.coordinate_bounds(0), CoordBounds::Unbounded);
        let e = StandardPolytope::new(IntMat::from_rows(&[vec![1, 1]]), vec![int(-1)]);
        assert_eq!(e.coordinate_bounds(0), CoordBounds::Infeasible);
    }

    #[test]
    fn period_bound_examples() {
        // {2x = 1}: single vertex at 1/2 -> bound 2.
        let half = StandardPolytope::new(IntMat::from_rows(&[vec![2]]), vec![int(1)]);
        assert_eq!(half.period_bound(1000).unwrap(), int(2));
        // Integral simplex -> 1.
        let d2 = StandardPolytope::standard_simplex(2);
        assert_eq!(d2.period_bound(1000).unwrap(), int(1));
        // {3x + 2y = 1} vertices (1/3, 0), (0, 1/2) -> lcm 6.
        let p = StandardPolytope::new(IntMat::from_rows(&[vec![3, 2]]), vec![int(1)]);
        assert_eq!(p.period_bound(1000).unwrap(), int(6));
        // Budget refusal.
        let cube = StandardPolytope::unit_cube(8);
        assert!(matches!(
            cube.period_bound(2),
            Err(Error::PeriodBudgetExceeded(_))
        ));
    }

    #[test]
    fn rational_rows_are_cleared() {
        // x/2 + y/3 <= 1 scales to 3x + 2y <= 6.
        let h = HPolytope::from_rat_rows(
            vec![(vec![rat(1, 2), rat(1, 3)], rat(1, 1))],
            vec![],
            2,
        )
        .unwrap();
        assert_eq!(h.g().row(0), &[int(3), int(2)]);
        assert_eq!(h.h(), &[int(6)]);
    }
}
