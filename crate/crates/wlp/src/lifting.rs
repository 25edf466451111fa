//! Weight lifting: turn weighted lattice-point sums into unweighted counts.
//!
//! A `ParametricFamily` `Q(x) = {y : Cy = Dx + e, y >= 0}` assigns to each
//! lattice point `x` of a standard-form polytope `P` the counting weight
//! `w(x) = |Q(x) cap Z^m|`. The lifted polytope
//!
//! ```text
//!   P* = { (x, y) >= 0 : Ax = b,  Dx - Cy = -e }
//! ```
//!
//! has exactly `sum_{x in P} w(x)` lattice points: its fiber over each `x`
//! is a copy of `Q(x)`. When `e = 0` the construction commutes with dilation,
//! so weighted Ehrhart quasi-polynomials of `(P, w)` are plain Ehrhart
//! quasi-polynomials of `P*`.
//!
//! Polynomial weights are not counting weights, but they decompose exactly
//! into signed rational combinations of counting weights in three bases:
//! products of cube counts `x^a = |(x-1) Cube_a|`, rising binomials
//! `C(x+k, k) = |x Delta_k|`, and falling binomials `C(x, k) =
//! |(x-k) Delta_k|` (a late-dilated family).

use num_traits::{One, Zero};

use crate::arith::{binomial, int, rat_int, Int, Rat};
use crate::counter::{count, for_each_point, CountResult, EnumConfig};
use crate::error::{Error, Result};
use crate::linalg::{solve_unique, IntMat, RatMat};
use crate::poly::Polynomial;
use crate::polytope::StandardPolytope;

/// `Q(x) = {y in R^m : Cy = Dx + e, y >= 0}` for `x in R^n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParametricFamily {
    c: IntMat,
    d: IntMat,
    e: Vec<Int>,
}

impl ParametricFamily {
    pub fn new(c: IntMat, d: IntMat, e: Vec<Int>) -> Result<Self> {
        if c.rows() != d.rows() || c.rows() != e.len() {
            return Err(Error::DimensionMismatch(
                "family blocks must agree on row count".into(),
            ));
        }
        Ok(ParametricFamily { c, d, e })
    }

    /// The weight `w == 1`: zero rows, zero fiber variables.
    pub fn trivial(n: usize) -> Self {
        ParametricFamily {
            c: IntMat::zeros(0, 0),
            d: IntMat::zeros(0, n),
            e: vec![],
        }
    }

    pub fn c(&self) -> &IntMat {
        &self.c
    }

    pub fn d(&self) -> &IntMat {
        &self.d
    }

    pub fn e(&self) -> &[Int] {
        &self.e
    }

    /// Parameter dimension `n`.
    pub fn n(&self) -> usize {
        self.d.cols()
    }

    /// Fiber dimension `m`.
    pub fn m(&self) -> usize {
        self.c.cols()
    }

    pub fn rows(&self) -> usize {
        self.c.rows()
    }

    /// Product weight `w1(x) * w2(x)` over a shared parameter space:
    /// block-diagonal `C`, stacked `D` and `e`.
    pub fn product(&self, other: &ParametricFamily) -> Result<Self> {
        if self.n() != other.n() {
            return Err(Error::DimensionMismatch(
                "product factors must share the parameter space".into(),
            ));
        }
        let c = IntMat::block_diag(&[&self.c, &other.c]);
        let d = IntMat::from_fn(self.rows() + other.rows(), self.n(), |i, j| {
            if i < self.rows() {
                self.d.get(i, j).clone()
            } else {
                other.d.get(i - self.rows(), j).clone()
            }
        });
        let mut e = self.e.clone();
        e.extend(other.e.iter().cloned());
        ParametricFamily::new(c, d, e)
    }

    /// Re-route parameters: old parameter `i` becomes the signed combination
    /// `sum (col, sign)` of columns of a `new_n`-dimensional space. Used when
    /// the base polytope was standardized (slack columns read nothing,
    /// split variables read `u - v`).
    pub fn with_parameter_columns(&self, map: &[Vec<(usize, i8)>], new_n: usize) -> Self {
        assert_eq!(map.len(), self.n(), "parameter map arity");
        let mut d = IntMat::zeros(self.rows(), new_n);
        for i in 0..self.rows() {
            for (old, routes) in map.iter().enumerate() {
                let v = self.d.get(i, old);
                if v.is_zero() {
                    continue;
                }
                for &(col, sign) in routes {
                    let cur = d.get(i, col).clone();
                    d.set(i, col, if sign >= 0 { cur + v } else { cur - v });
                }
            }
        }
        ParametricFamily {
            c: self.c.clone(),
            d,
            e: self.e.clone(),
        }
    }

    /// The fiber `Q(x)` as a standard-form polytope in `y`.
    pub fn fiber(&self, x: &[Int]) -> StandardPolytope {
        assert_eq!(x.len(), self.n(), "parameter arity");
        let dx = self.d.mul_vec(x);
        let b: Vec<Int> = dx.iter().zip(&self.e).map(|(a, b)| a + b).collect();
        StandardPolytope::new(self.c.clone(), b)
    }
}

/// One late-dilated factor `w(x) = |(x_arg - shift) Q cap Z^{m}|` with
/// `Q = {y : C y = d}`.
#[derive(Clone, Debug)]
pub struct LateDilatedFactor {
    pub c_mat: IntMat,
    pub d: Vec<Int>,
    pub shift: Int,
    pub arg: usize,
}

impl LateDilatedFactor {
    /// Cube factor: `x^k = |(x-1) Cube_k cap Z^{2k}|` via `[I | I] y = t 1`.
    pub fn cube(k: usize, arg: usize) -> Self {
        let c_mat = IntMat::from_fn(k, 2 * k, |i, j| {
            if j == i || j == k + i {
                Int::one()
            } else {
                Int::zero()
            }
        });
        LateDilatedFactor {
            c_mat,
            d: vec![Int::one(); k],
            shift: Int::one(),
            arg,
        }
    }

    /// Rising factor with `b >= 1` fiber variables:
    /// `C(x + b - 1, b - 1) = |x Delta_{b-1} cap Z^b|`.
    pub fn rising(b: usize, arg: usize) -> Self {
        assert!(b >= 1);
        LateDilatedFactor {
            c_mat: IntMat::from_fn(1, b, |_, _| Int::one()),
            d: vec![Int::one()],
            shift: Int::zero(),
            arg,
        }
    }

    /// Falling factor with `b >= 1` fiber variables:
    /// `C(x, b - 1) = |(x - (b-1)) Delta_{b-1} cap Z^b|`.
    pub fn falling(b: usize, arg: usize) -> Self {
        assert!(b >= 1);
        LateDilatedFactor {
            c_mat: IntMat::from_fn(1, b, |_, _| Int::one()),
            d: vec![Int::one()],
            shift: int(b as i64 - 1),
            arg,
        }
    }
}

/// Assemble a product-of-factors family over `n` parameters:
/// `w(x) = prod_i |(x_{arg_i} - shift_i) Q_i cap Z^{m_i}|`.
pub fn family_from_factors(factors: &[LateDilatedFactor], n: usize) -> Result<ParametricFamily> {
    let rows: usize = factors.iter().map(|f| f.c_mat.rows()).sum();
    let cblocks: Vec<&IntMat> = factors.iter().map(|f| &f.c_mat).collect();
    let c = if cblocks.is_empty() {
        IntMat::zeros(0, 0)
    } else {
        IntMat::block_diag(&cblocks)
    };
    let mut d = IntMat::zeros(rows, n);
    let mut e = Vec::with_capacity(rows);
    let mut ro = 0;
    for f in factors {
        if f.arg >= n {
            return Err(Error::DimensionMismatch(format!(
                "factor argument {} out of range (n = {n})",
                f.arg
            )));
        }
        if f.c_mat.rows() != f.d.len() {
            return Err(Error::DimensionMismatch("factor d length".into()));
        }
        for (i, di) in f.d.iter().enumerate() {
            d.set(ro + i, f.arg, di.clone());
            e.push(-(&f.shift * di));
        }
        ro += f.d.len();
    }
    ParametricFamily::new(c, d, e)
}

/// The cube encoding of the monomial `x^alpha`: `m = 2 |alpha|`.
pub fn family_for_monomial(alpha: &[u32], n: usize) -> Result<ParametricFamily> {
    assert_eq!(alpha.len(), n, "exponent arity");
    let factors: Vec<LateDilatedFactor> = alpha
        .iter()
        .enumerate()
        .filter(|(_, &a)| a > 0)
        .map(|(i, &a)| LateDilatedFactor::cube(a as usize, i))
        .collect();
    family_from_factors(&factors, n)
}

/// `prod_i C(x_i + beta_i - 1, beta_i - 1)` with `m = |beta|`; entries with
/// `beta_i = 0` contribute the constant factor 1.
pub fn family_rising(beta: &[u32], n: usize) -> Result<ParametricFamily> {
    assert_eq!(beta.len(), n);
    let factors: Vec<LateDilatedFactor> = beta
        .iter()
        .enumerate()
        .filter(|(_, &b)| b > 0)
        .map(|(i, &b)| LateDilatedFactor::rising(b as usize, i))
        .collect();
    family_from_factors(&factors, n)
}

/// `prod_i C(x_i, beta_i - 1)` with `m = |beta|` (late-dilated simplices).
pub fn family_falling(beta: &[u32], n: usize) -> Result<ParametricFamily> {
    assert_eq!(beta.len(), n);
    let factors: Vec<LateDilatedFactor> = beta
        .iter()
        .enumerate()
        .filter(|(_, &b)| b > 0)
        .map(|(i, &b)| LateDilatedFactor::falling(b as usize, i))
        .collect();
    family_from_factors(&factors, n)
}

/// A weight lifting polytope together with the `(n, m)` coordinate split.
#[derive(Clone, Debug)]
pub struct LiftedPolytope {
    pub base: StandardPolytope,
    pub n_vars: usize,
    pub m_vars: usize,
}

impl LiftedPolytope {
    /// Project a lifted lattice point to its `x` block.
    pub fn project(&self, point: &[Int]) -> Vec<Int> {
        point[..self.n_vars].to_vec()
    }
}

/// Build `P* = {(x,y) >= 0 : Ax = b, Dx - Cy = -e}`.
pub fn lift(p: &StandardPolytope, f: &ParametricFamily) -> Result<LiftedPolytope> {
    lift_dilated(p, f, &Int::one())
}

/// Lift the dilation `tP`: rhs becomes `(t b, -e)`. For `e = 0` this is
/// exactly `t * lift(P, F)`, i.e. lifting commutes with dilation.
pub fn lift_dilated(
    p: &StandardPolytope,
    f: &ParametricFamily,
    t: &Int,
) -> Result<LiftedPolytope> {
    if p.n() != f.n() {
        return Err(Error::DimensionMismatch(format!(
            "polytope has {} variables, family expects {}",
            p.n(),
            f.n()
        )));
    }
    let (n, m) = (p.n(), f.m());
    let (s, r) = (p.rows(), f.rows());
    let a = IntMat::from_fn(s + r, n + m, |i, j| {
        if i < s {
            if j < n {
                p.a().get(i, j).clone()
            } else {
                Int::zero()
            }
        } else {
            let fr = i - s;
            if j < n {
                f.d().get(fr, j).clone()
            } else {
                -f.c().get(fr, j - n).clone()
            }
        }
    });
    let mut b: Vec<Int> = p.b().iter().map(|v| v * t).collect();
    b.extend(f.e().iter().map(|v| -v.clone()));
    Ok(LiftedPolytope {
        base: StandardPolytope::new(a, b),
        n_vars: n,
        m_vars: m,
    })
}

/// `w(x) = |Q(x) cap Z^m|` by direct counting of the fiber.
pub fn weight_eval(f: &ParametricFamily, x: &[Int], cfg: &EnumConfig) -> Result<Int> {
    Ok(count(&f.fiber(x), cfg)?.count)
}

/// Which basis a polynomial weight is compiled into.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Basis {
    /// Monomials as cube counts, `m = 2 |alpha|` per term.
    CubeMonomial,
    /// Rising binomials `C(x+k, k)`, `m = |beta|` per term.
    RisingBinomial,
    /// Falling binomials `C(x, k)`, `m = |beta|` per term (late dilation).
    FallingBinomial,
}

/// A finite signed combination of counting weights, with optional polynomial
/// provenance (kept for oracles and degree bookkeeping).
#[derive(Clone, Debug)]
pub struct WeightExpr {
    pub terms: Vec<(Rat, ParametricFamily)>,
    pub n: usize,
    /// Upper bound on the degree of the weight as a function of `x`.
    pub degree_bound: usize,
    pub origin: Option<Polynomial>,
}

impl WeightExpr {
    pub fn from_family(f: ParametricFamily, degree_bound: usize) -> Self {
        WeightExpr {
            n: f.n(),
            terms: vec![(Rat::one(), f)],
            degree_bound,
            origin: None,
        }
    }

    /// Evaluate through the counting route (each family counted exactly).
    pub fn eval(&self, x: &[Int], cfg: &EnumConfig) -> Result<Rat> {
        let mut acc = Rat::zero();
        for (coef, fam) in &self.terms {
            let w = weight_eval(fam, x, cfg)?;
            acc += coef * rat_int(&w);
        }
        Ok(acc)
    }

    /// The family of a pure counting weight (single term, coefficient 1).
    pub fn as_single_family(&self) -> Option<&ParametricFamily> {
        match self.terms.as_slice() {
            [(c, f)] if c.is_one() => Some(f),
            _ => None,
        }
    }
}

/// Univariate change of basis: coefficients `c_0..c_a` with
/// `x^a = sum_k c_k v_k(x)`, where `v_k` is the rising or falling binomial of
/// degree `k`. Solved from evaluations at `x = 0..=a` and self-verified at
/// three extra points.
fn monomial_in_binomial_basis(a: usize, falling: bool) -> Vec<Rat> {
    let v = |k: usize, x: i64| -> Int {
        if falling {
            binomial(&int(x), &int(k as i64))
        } else {
            binomial(&int(x + k as i64), &int(k as i64))
        }
    };
    let mat = RatMat::from_fn(a + 1, a + 1, |i, k| rat_int(&v(k, i as i64)));
    let rhs: Vec<Rat> = (0..=a as i64)
        .map(|i| rat_int(&int(i).pow(a as u32)))
        .collect();
    let coeffs = solve_unique(&mat, &rhs).expect("binomial basis is triangularizable");
    for x in (a as i64 + 1)..=(a as i64 + 3) {
        let mut acc = Rat::zero();
        for (k, c) in coeffs.iter().enumerate() {
            acc += c * rat_int(&v(k, x));
        }
        assert_eq!(acc, rat_int(&int(x).pow(a as u32)), "basis change check");
    }
    coeffs
}

/// Compile a polynomial weight into an exact signed combination of counting
/// families. Evaluating the result at any integer point `x >= 0` reproduces
/// `poly(x)` exactly.
pub fn compile_polynomial(poly: &Polynomial, basis: Basis) -> WeightExpr {
    let n = poly.n_vars();
    let mut terms: Vec<(Rat, ParametricFamily)> = Vec::new();
    match basis {
        Basis::CubeMonomial => {
            for (exps, coef) in poly.terms() {
                let fam = family_for_monomial(exps, n).expect("arity checked");
                terms.push((coef.clone(), fam));
            }
        }
        Basis::RisingBinomial | Basis::FallingBinomial => {
            let falling = basis == Basis::FallingBinomial;
            // Cache univariate tables up to the max exponent present.
            let max_deg = poly
                .terms()
                .flat_map(|(e, _)| e.iter().copied())
                .max()
                .unwrap_or(0) as usize;
            let tables: Vec<Vec<Rat>> = (0..=max_deg)
                .map(|a| monomial_in_binomial_basis(a, falling))
                .collect();
            // Aggregate coefficients per basis degree vector.
            let mut agg: std::collections::BTreeMap<Vec<u32>, Rat> =
                std::collections::BTreeMap::new();
            for (exps, coef) in poly.terms() {
                // Walk the product of per-variable expansions.
                let support: Vec<usize> =
                    (0..n).filter(|&i| exps[i] > 0).collect();
                let mut beta = vec![0u32; n];
                walk_expansions(
                    &support,
                    exps,
                    &tables,
                    0,
                    coef.clone(),
                    &mut beta,
                    &mut |beta, c| {
                        let entry = agg.entry(beta.to_vec()).or_insert_with(Rat::zero);
                        *entry += c;
                    },
                );
            }
            for (beta, coef) in agg {
                if coef.is_zero() {
                    continue;
                }
                // Degree vector -> fiber sizes: degree k needs k+1 simplex vars.
                let sizes: Vec<u32> = beta.iter().map(|&k| if k > 0 { k + 1 } else { 0 }).collect();
                let fam = if falling {
                    family_falling(&sizes, n).expect("arity checked")
                } else {
                    family_rising(&sizes, n).expect("arity checked")
                };
                terms.push((coef, fam));
            }
        }
    }
    WeightExpr {
        terms,
        n,
        degree_bound: poly.degree(),
        origin: Some(poly.clone()),
    }
}

/// Recursive product walk over per-variable basis expansions.
fn walk_expansions(
    support: &[usize],
    exps: &[u32],
    tables: &[Vec<Rat>],
    pos: usize,
    coef: Rat,
    beta: &mut Vec<u32>,
    out: &mut impl FnMut(&[u32], Rat),
) {
    if coef.is_zero() {
        return;
    }
    if pos == support.len() {
        out(beta, coef);
        return;
    }
    let var = support[pos];
    let a = exps[var] as usize;
    for (k, ck) in tables[a].iter().enumerate() {
        if ck.is_zero() {
            continue;
        }
        beta[var] = k as u32;
        walk_expansions(support, exps, tables, pos + 1, &coef * ck, beta, out);
    }
    beta[var] = 0;
}

/// `sum_{x in tP cap Z^n} w(x)` through weight lifting: one exact count per
/// term, negative dilations welcome (the sum over an empty set is 0).
pub fn weighted_sum(
    p: &StandardPolytope,
    w: &WeightExpr,
    t: &Int,
    cfg: &EnumConfig,
) -> Result<Rat> {
    if w.n != p.n() {
        return Err(Error::DimensionMismatch(
            "weight arity vs polytope".into(),
        ));
    }
    let mut acc = Rat::zero();
    for (coef, fam) in &w.terms {
        let lifted = lift_dilated(p, fam, t)?;
        let c = count(&lifted.base, cfg)?;
        acc += coef * rat_int(&c.count);
    }
    Ok(acc)
}

/// Independent oracle: enumerate `tP` and evaluate the weight pointwise
/// (polynomial origin evaluates the polynomial; families count fibers
/// directly). Never builds a lifted polytope.
pub fn weighted_sum_bruteforce(
    p: &StandardPolytope,
    w: &WeightExpr,
    t: &Int,
    cfg: &EnumConfig,
) -> Result<Rat> {
    if w.n != p.n() {
        return Err(Error::DimensionMismatch(
            "weight arity vs polytope".into(),
        ));
    }
    let dil = p.dilate(t);
    let mut acc = Rat::zero();
    let mut inner_err: Option<Error> = None;
    let _: CountResult = for_each_point(&dil, cfg, |x| {
        if inner_err.is_some() {
            return;
        }
        let contribution = match &w.origin {
            Some(poly) => poly.eval_int(x),
            None => match w.eval(x, cfg) {
                Ok(v) => v,
                Err(e) => {
                    inner_err = Some(e);
                    return;
                }
            },
        };
        acc += contribution;
    })?;
    match inner_err {
        Some(e) => Err(e),
        None => Ok(acc),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::rat;
    use crate::counter::count_default;

    fn cfg() -> EnumConfig {
        EnumConfig::default()
    }

    #[test]
    fn lift_reproduces_linear_weight_sum() {
        // P = 2 Delta_1, w(x) = x1: sum = 0 + 1 + 2 = 3.
        let p = StandardPolytope::standard_simplex(1).dilate(&int(2));
        let fam = family_for_monomial(&[1, 0], 2).unwrap();
        let lifted = lift(&p, &fam).unwrap();
        assert_eq!(count_default(&lifted.base).unwrap(), int(3));
        assert_eq!(lifted.n_vars, 2);
        assert_eq!(lifted.m_vars, 2);
    }

    #[test]
    fn fiber_counts_equal_weights() {
        let fam = family_for_monomial(&[2], 1).unwrap();
        for x in 0..6i64 {
            let w = weight_eval(&fam, &[int(x)], &cfg()).unwrap();
            assert_eq!(w, int(x * x), "x = {x}");
        }
    }

    #[test]
    fn monomial_family_sizes() {
        let fam = family_for_monomial(&[2, 0, 3], 3).unwrap();
        assert_eq!(fam.m(), 10, "m = 2|alpha|");
        let fam = family_rising(&[2, 1], 2).unwrap();
        assert_eq!(fam.m(), 3, "m = |beta|");
        let fam = family_falling(&[4], 1).unwrap();
        assert_eq!(fam.m(), 4, "m = |beta|");
    }

    #[test]
    fn rising_and_falling_factor_values() {
        // C(x+2, 2) for the rising factor with 3 fiber variables.
        let fam = family_rising(&[3], 1).unwrap();
        for x in 0..5i64 {
            assert_eq!(
                weight_eval(&fam, &[int(x)], &cfg()).unwrap(),
                binomial(&int(x + 2), &int(2))
            );
        }
        // C(x, 2) for the falling one, zero below the shift.
        let fam = family_falling(&[3], 1).unwrap();
        for x in 0..6i64 {
            assert_eq!(
                weight_eval(&fam, &[int(x)], &cfg()).unwrap(),
                binomial(&int(x), &int(2))
            );
        }
    }

    #[test]
    fn zero_dilation_of_cube_family_kills_positives() {
        // At x = 0 the cube factor dilates by -1: empty fiber.
        let fam = family_for_monomial(&[3], 1).unwrap();
        assert_eq!(weight_eval(&fam, &[int(0)], &cfg()).unwrap(), int(0));
    }

    #[test]
    fn compile_round_trip_all_bases() {
        // p(x, y) = 3/2 x^2 y - 2 x + 5
        let x = Polynomial::var(0, 2);
        let y = Polynomial::var(1, 2);
        let p = &(&(&x * &x) * &y).scale(&rat(3, 2))
            + &(&x.scale(&rat(-2, 1)) + &Polynomial::constant(rat(5, 1), 2));
        for basis in [Basis::CubeMonomial, Basis::RisingBinomial, Basis::FallingBinomial] {
            let w = compile_polynomial(&p, basis);
            for (a, b) in [(0i64, 0i64), (1, 0), (0, 1), (2, 3), (4, 1), (3, 3)] {
                let got = w.eval(&[int(a), int(b)], &cfg()).unwrap();
                assert_eq!(got, p.eval_int(&[int(a), int(b)]), "{basis:?} at ({a},{b})");
            }
        }
    }

    #[test]
    fn constant_polynomial_compiles_to_trivial_family() {
        let p = Polynomial::one(2);
        let w = compile_polynomial(&p, Basis::CubeMonomial);
        assert_eq!(w.terms.len(), 1);
        assert_eq!(w.terms[0].1.m(), 0);
        assert_eq!(w.terms[0].0, rat(1, 1));
    }

    #[test]
    fn weighted_sum_matches_bruteforce_small() {
        let p = StandardPolytope::standard_simplex(2);
        let x = Polynomial::var(0, 3);
        let z = Polynomial::var(2, 3);
        let poly = &(&x * &x) + &(&x * &z.scale(&rat(2, 1)));
        let w = compile_polynomial(&poly, Basis::RisingBinomial);
        for t in [0i64, 1, 2, 3, 5, -1] {
            let a = weighted_sum(&p, &w, &int(t), &cfg()).unwrap();
            let b = weighted_sum_bruteforce(&p, &w, &int(t), &cfg()).unwrap();
            assert_eq!(a, b, "t = {t}");
        }
    }

    #[test]
    fn dilation_commutes_structurally_when_e_is_zero() {
        let p = StandardPolytope::standard_simplex(1);
        let fam = family_rising(&[2, 1], 2).unwrap();
        assert!(fam.e().iter().all(|v| v.is_zero()));
        for t in [-2i64, -1, 0, 1, 2, 5] {
            let a = lift_dilated(&p, &fam, &int(t)).unwrap().base;
            let b = lift(&p, &fam).unwrap().base.dilate(&int(t));
            assert_eq!(a, b, "t = {t}");
        }
    }

    #[test]
    fn product_family_multiplies_weights() {
        let f1 = family_rising(&[2], 1).unwrap();
        let f2 = family_for_monomial(&[1], 1).unwrap();
        let prod = f1.product(&f2).unwrap();
        for x in 0..5i64 {
            let w1 = weight_eval(&f1, &[int(x)], &cfg()).unwrap();
            let w2 = weight_eval(&f2, &[int(x)], &cfg()).unwrap();
            let wp = weight_eval(&prod, &[int(x)], &cfg()).unwrap();
            assert_eq!(wp, w1 * w2);
        }
    }

    #[test]
    fn parameter_rerouting() {
        // w(x) = x0 rerouted to read column 2 of a 4-column space minus column 3.
        let fam = family_for_monomial(&[1], 1).unwrap();
        let routed = fam.with_parameter_columns(&[vec![(2, 1), (3, -1)]], 4);
        let w = weight_eval(&routed, &[int(9), int(9), int(7), int(3)], &cfg()).unwrap();
        assert_eq!(w, int(4));
    }
}
