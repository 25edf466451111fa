//! Ehrhart quasi-polynomials, fitted exactly from counts of dilations.
//!
//! For a rational polytope `P` the counting function `t -> |tP cap Z^n|`
//! agrees with a quasi-polynomial for integers `t >= 1`: polynomial
//! coefficients that depend only on `t mod q` for some period `q` dividing
//! the lcm of the vertex coordinate denominators. Fitting is exact rational
//! interpolation; every candidate `(degree, period)` must also reproduce a
//! set of holdout samples before it is accepted, so a wrong period or an
//! undershot degree is rejected rather than silently absorbed.
//!
//! Weighted counting functions `t -> sum_{x in tP} w(x)` are fitted the same
//! way. When the weight is a combination of families with `e = 0`, the sum
//! is literally the Ehrhart function of the lifted polytopes and is handled
//! by combining their quasi-polynomials; otherwise the weighted sums are
//! sampled directly.

use std::collections::BTreeMap;

use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::arith::{int, lcm_pos, rat_int, Int, Rat};
use crate::counter::{count, EnumConfig};
use crate::error::{Error, Result};
use crate::lifting::{lift, lift_dilated, WeightExpr};
use crate::linalg::{rank, solve_unique, RatMat};
use crate::lp::{lp_solve, LpOutcome, Sense};
use crate::polytope::StandardPolytope;

/// `q(t) = sum_m coeffs[m][t mod period] * t^m`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuasiPolynomial {
    degree: usize,
    period: u32,
    /// `coeffs[m][r]` is the coefficient of `t^m` on the class `t = r (mod period)`.
    coeffs: Vec<Vec<Rat>>,
}

impl QuasiPolynomial {
    pub fn new(degree: usize, period: u32, coeffs: Vec<Vec<Rat>>) -> Result<Self> {
        if period == 0 {
            return Err(Error::InvalidInput("period must be positive".into()));
        }
        if coeffs.len() != degree + 1 || coeffs.iter().any(|row| row.len() != period as usize) {
            return Err(Error::DimensionMismatch(
                "coefficient table must be (degree+1) x period".into(),
            ));
        }
        Ok(QuasiPolynomial {
            degree,
            period,
            coeffs,
        })
    }

    pub fn zero() -> Self {
        QuasiPolynomial {
            degree: 0,
            period: 1,
            coeffs: vec![vec![Rat::zero()]],
        }
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn period(&self) -> u32 {
        self.period
    }

    /// Coefficient of `t^m` on the residue class `r`.
    pub fn coefficient(&self, m: usize, r: u32) -> &Rat {
        &self.coeffs[m][(r % self.period) as usize]
    }

    pub fn coefficients(&self) -> &[Vec<Rat>] {
        &self.coeffs
    }

    pub fn eval(&self, t: &Int) -> Rat {
        let r = t.mod_floor(&int(self.period as i64));
        let r: usize = r.to_string().parse().expect("residue fits");
        let tr = rat_int(t);
        let mut acc = Rat::zero();
        for m in (0..=self.degree).rev() {
            acc = acc * &tr + &self.coeffs[m][r];
        }
        acc
    }

    /// The top coefficient, which must not depend on the residue class
    /// (it equals the normalized volume for honest counting functions).
    pub fn leading_coefficient(&self) -> Result<Rat> {
        let top = &self.coeffs[self.degree];
        if top.iter().any(|c| c != &top[0]) {
            return Err(Error::ResidueDependentLeading);
        }
        Ok(top[0].clone())
    }

    /// Drop trailing degree rows that are identically zero (keeping degree 0).
    fn trimmed(mut self) -> Self {
        while self.degree > 0 && self.coeffs[self.degree].iter().all(|c| c.is_zero()) {
            self.coeffs.pop();
            self.degree -= 1;
        }
        self
    }

    /// Exact linear combination: lcm period, max degree, then trim.
    pub fn combine(terms: &[(Rat, &QuasiPolynomial)]) -> QuasiPolynomial {
        if terms.is_empty() {
            return QuasiPolynomial::zero();
        }
        let period = terms
            .iter()
            .fold(1u32, |acc, (_, qp)| {
                let l = lcm_pos(&int(acc as i64), &int(qp.period as i64));
                l.to_string().parse().expect("period fits in u32")
            });
        let degree = terms.iter().map(|(_, qp)| qp.degree).max().unwrap_or(0);
        let mut coeffs = vec![vec![Rat::zero(); period as usize]; degree + 1];
        for (scale, qp) in terms {
            for (m, src_row) in qp.coeffs.iter().enumerate() {
                for r in 0..period {
                    let src = &src_row[(r % qp.period) as usize];
                    coeffs[m][r as usize] += scale * src;
                }
            }
        }
        QuasiPolynomial {
            degree,
            period,
            coeffs,
        }
        .trimmed()
    }
}

/// Fit a quasi-polynomial of the given degree bound and period from a sample
/// source. Per residue class this takes `degree + 1` interpolation points at
/// `t >= 1` plus `holdout` extra points that the fitted polynomial must
/// reproduce exactly.
pub fn fit_quasi_polynomial(
    sample: &mut dyn FnMut(&Int) -> Result<Rat>,
    degree: usize,
    period: u32,
    holdout: usize,
) -> Result<QuasiPolynomial> {
    if period == 0 {
        return Err(Error::InvalidInput("period must be positive".into()));
    }
    let mut coeffs = vec![vec![Rat::zero(); period as usize]; degree + 1];
    for r in 0..period {
        let first = if r == 0 { period as i64 } else { r as i64 };
        let ts: Vec<i64> = (0..(degree + 1 + holdout) as i64)
            .map(|k| first + k * period as i64)
            .collect();
        let vals: Vec<Rat> = ts
            .iter()
            .map(|&t| sample(&int(t)))
            .collect::<Result<_>>()?;
        let vand = RatMat::from_fn(degree + 1, degree + 1, |i, j| {
            rat_int(&int(ts[i]).pow(j as u32))
        });
        let sol = solve_unique(&vand, &vals[..degree + 1]).ok_or_else(|| {
            Error::InvalidInput("degenerate interpolation system".into())
        })?;
        for (k, &t) in ts.iter().enumerate().skip(degree + 1) {
            let tr = rat_int(&int(t));
            let mut acc = Rat::zero();
            for m in (0..=degree).rev() {
                acc = acc * &tr + &sol[m];
            }
            if acc != vals[k] {
                return Err(Error::InconsistentSamples {
                    degree,
                    period,
                    at: t.to_string(),
                });
            }
        }
        for m in 0..=degree {
            coeffs[m][r as usize] = sol[m].clone();
        }
    }
    Ok(QuasiPolynomial {
        degree,
        period,
        coeffs,
    }
    .trimmed())
}

/// Affine dimension of a standard-form polytope: coordinates whose maximum
/// over `P` is zero are pinned, and the dimension is the nullity of the
/// remaining column system.
pub fn polytope_dim(p: &StandardPolytope) -> Result<usize> {
    let a = p.a().to_rat();
    let brat: Vec<Rat> = p.b().iter().map(rat_int).collect();
    let mut free_cols: Vec<usize> = Vec::new();
    for j in 0..p.n() {
        let mut c = vec![Rat::zero(); p.n()];
        c[j] = Rat::one();
        match lp_solve(&a, &brat, &c, Sense::Max) {
            LpOutcome::Infeasible => return Err(Error::EmptyPolytope),
            LpOutcome::Unbounded => return Err(Error::UnboundedCoordinate(j)),
            LpOutcome::Optimal { value, .. } => {
                if value.is_positive() {
                    free_cols.push(j);
                }
            }
        }
    }
    let sub = RatMat::from_fn(p.rows(), free_cols.len(), |i, j| {
        a.get(i, free_cols[j]).clone()
    });
    Ok(free_cols.len() - rank(&sub))
}

/// How the fitting period is chosen.
#[derive(Clone, Debug)]
pub enum PeriodStrategy {
    /// Use exactly this period (errors if the samples disagree with it).
    Hint(u32),
    /// Compute the vertex denominator lcm within the given basis enumeration
    /// budget and try its divisors in increasing order; if the budget is
    /// exhausted, fall back to trial periods up to the cap.
    Detect { budget: u128, trial_cap: u32 },
}

impl Default for PeriodStrategy {
    fn default() -> Self {
        PeriodStrategy::Detect {
            budget: 2_000_000,
            trial_cap: 64,
        }
    }
}

#[derive(Clone, Debug, Default)]
pub struct EhrhartOptions {
    pub period: PeriodStrategy,
    pub holdout: usize,
    pub counter: EnumConfig,
}

impl EhrhartOptions {
    fn holdout_or_default(&self) -> usize {
        if self.holdout == 0 {
            2
        } else {
            self.holdout
        }
    }
}

fn sorted_divisors(q: u32) -> Vec<u32> {
    let mut out = Vec::new();
    for d in 1..=q {
        if q.is_multiple_of(d) {
            out.push(d);
        }
    }
    out
}

fn candidate_periods(p: &StandardPolytope, opts: &EhrhartOptions) -> Result<Vec<u32>> {
    match opts.period {
        PeriodStrategy::Hint(q) => {
            if q == 0 {
                return Err(Error::InvalidInput("period hint must be positive".into()));
            }
            Ok(vec![q])
        }
        PeriodStrategy::Detect { budget, trial_cap } => match p.period_bound(budget) {
            Ok(q) => {
                let q: u32 = q.to_string().parse().map_err(|_| {
                    Error::InvalidInput(format!("period bound {q} does not fit in u32"))
                })?;
                Ok(sorted_divisors(q))
            }
            Err(Error::PeriodBudgetExceeded(_)) => Ok((1..=trial_cap).collect()),
            Err(e) => Err(e),
        },
    }
}

fn fit_with_candidates(
    sample: &mut dyn FnMut(&Int) -> Result<Rat>,
    degree: usize,
    candidates: &[u32],
    holdout: usize,
) -> Result<QuasiPolynomial> {
    let single = candidates.len() == 1;
    for &q in candidates {
        match fit_quasi_polynomial(sample, degree, q, holdout) {
            Ok(qp) => return Ok(qp),
            Err(Error::InconsistentSamples { .. }) if !single => continue,
            Err(e) => return Err(e),
        }
    }
    Err(Error::PeriodSearchExhausted(candidates.len()))
}

/// The Ehrhart quasi-polynomial of `P`, exact for all integers `t >= 1`.
pub fn ehrhart_qp(p: &StandardPolytope, opts: &EhrhartOptions) -> Result<QuasiPolynomial> {
    let degree = match polytope_dim(p) {
        Ok(d) => d,
        Err(Error::EmptyPolytope) => return Ok(QuasiPolynomial::zero()),
        Err(e) => return Err(e),
    };
    let mut cache: BTreeMap<Int, Rat> = BTreeMap::new();
    let cfg = opts.counter.clone();
    let mut sample = |t: &Int| -> Result<Rat> {
        if let Some(v) = cache.get(t) {
            return Ok(v.clone());
        }
        let c = count(&p.dilate(t), &cfg)?;
        let v = rat_int(&c.count);
        cache.insert(t.clone(), v.clone());
        Ok(v)
    };
    let candidates = candidate_periods(p, opts)?;
    fit_with_candidates(&mut sample, degree, &candidates, opts.holdout_or_default())
}

/// The weighted Ehrhart quasi-polynomial `t -> sum_{x in tP cap Z^n} w(x)`,
/// exact for all integers `t >= 1`.
///
/// Families with `e = 0` are handled structurally (the sum is the Ehrhart
/// function of the lifted polytope); anything else is sampled through the
/// lifting and fitted with the polytope's period candidates and degree bound
/// `dim P + deg w`.
pub fn weighted_ehrhart_qp(
    p: &StandardPolytope,
    w: &WeightExpr,
    opts: &EhrhartOptions,
) -> Result<QuasiPolynomial> {
    if w.n != p.n() {
        return Err(Error::DimensionMismatch("weight arity vs polytope".into()));
    }
    let dim = match polytope_dim(p) {
        Ok(d) => d,
        Err(Error::EmptyPolytope) => return Ok(QuasiPolynomial::zero()),
        Err(e) => return Err(e),
    };
    if w.terms.iter().all(|(_, f)| f.e().iter().all(|v| v.is_zero())) {
        let mut parts: Vec<(Rat, QuasiPolynomial)> = Vec::new();
        for (coef, fam) in &w.terms {
            let lifted = lift(p, fam)?;
            parts.push((coef.clone(), ehrhart_qp(&lifted.base, opts)?));
        }
        let refs: Vec<(Rat, &QuasiPolynomial)> =
            parts.iter().map(|(c, qp)| (c.clone(), qp)).collect();
        return Ok(QuasiPolynomial::combine(&refs));
    }
    let degree = dim + w.degree_bound;
    let cfg = opts.counter.clone();
    let mut cache: BTreeMap<Int, Rat> = BTreeMap::new();
    let mut sample = |t: &Int| -> Result<Rat> {
        if let Some(v) = cache.get(t) {
            return Ok(v.clone());
        }
        let mut acc = Rat::zero();
        for (coef, fam) in &w.terms {
            let lifted = lift_dilated(p, fam, t)?;
            let c = count(&lifted.base, &cfg)?;
            acc += coef * rat_int(&c.count);
        }
        cache.insert(t.clone(), acc.clone());
        Ok(acc)
    };
    let candidates = candidate_periods(p, opts)?;
    fit_with_candidates(&mut sample, degree, &candidates, opts.holdout_or_default())
}
