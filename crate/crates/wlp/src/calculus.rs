//! Exact integration and maximization through counting.
//!
//! Integration: for a homogeneous polynomial `w` of degree `M` on a
//! `d`-dimensional rational polytope `P`, the coefficient of `t^(d+M)` in the
//! weighted Ehrhart quasi-polynomial of `(P, w)` equals `int_P w` with
//! respect to the lattice measure on the affine hull of `P` (plain Lebesgue
//! measure when `P` is full-dimensional). General polynomials split into
//! homogeneous components, one coefficient extraction each.
//!
//! Maximization: for a counting weight `w(x) = |Q(x) cap Z^m|`, the power
//! sums `S_k = sum_{x in P} w(x)^k` are themselves unweighted counts of
//! lifted polytopes (k-fold products of the family). With `N = |P cap Z^n|`,
//!
//! ```text
//!   ceil((S_k / N)^(1/k))  <=  max w  <=  floor(S_k^(1/k))
//! ```
//!
//! and the two integer bounds meet after about `max * ln N` rounds. All root
//! extraction is exact integer arithmetic, so the certificate is exact.

use num_integer::Integer;
use num_traits::Zero;

use crate::arith::{factorial, int_kth_root_floor, rat_int, Int, Rat};
use crate::counter::{count, EnumConfig};
use crate::ehrhart::{polytope_dim, weighted_ehrhart_qp, EhrhartOptions};
use crate::error::{Error, Result};
use crate::lifting::{compile_polynomial, lift, Basis, ParametricFamily, WeightExpr};
use crate::poly::Polynomial;
use crate::polytope::{standardize_with, FreeVarStrategy, HPolytope, StandardPolytope};

/// Relative lattice volume of `P` (Lebesgue volume when full-dimensional):
/// the leading Ehrhart coefficient.
pub fn volume(p: &StandardPolytope, opts: &EhrhartOptions) -> Result<Rat> {
    let qp = crate::ehrhart::ehrhart_qp(p, opts)?;
    let dim = match polytope_dim(p) {
        Ok(d) => d,
        Err(Error::EmptyPolytope) => return Ok(Rat::zero()),
        Err(e) => return Err(e),
    };
    if qp.degree() < dim {
        return Ok(Rat::zero());
    }
    qp.leading_coefficient()
}

/// `int_P f` exactly. The polynomial lives on the standard-form coordinates
/// of `P`; the measure is the lattice measure on the affine hull.
pub fn integrate(p: &StandardPolytope, f: &Polynomial, opts: &EhrhartOptions) -> Result<Rat> {
    if f.n_vars() != p.n() {
        return Err(Error::DimensionMismatch(
            "integrand arity vs polytope".into(),
        ));
    }
    let dim = match polytope_dim(p) {
        Ok(d) => d,
        Err(Error::EmptyPolytope) => return Ok(Rat::zero()),
        Err(e) => return Err(e),
    };
    let mut total = Rat::zero();
    for (m, component) in f.homogeneous_components() {
        let w = compile_polynomial(&component, Basis::RisingBinomial);
        let qp = weighted_ehrhart_qp(p, &w, opts)?;
        let target = dim + m;
        if qp.degree() < target {
            continue;
        }
        let first = qp.coefficient(target, 0).clone();
        for r in 1..qp.period() {
            if qp.coefficient(target, r) != &first {
                return Err(Error::ResidueDependentLeading);
            }
        }
        total += first;
    }
    Ok(total)
}

/// Dirichlet's closed form for monomials over the standard simplex:
/// `int_{x >= 0, sum x <= 1} prod x_i^{alpha_i} dx
///  = prod alpha_i! / (n + sum alpha)!` with `n = len(alpha)`.
/// Serves as the independent oracle for the counting-based integrator.
pub fn dirichlet_simplex_integral(alpha: &[u64]) -> Rat {
    let n = alpha.len() as u64;
    let total: u64 = alpha.iter().sum();
    let mut num = rat_int(&factorial(0));
    for &a in alpha {
        num *= rat_int(&factorial(a));
    }
    num / rat_int(&factorial(n + total))
}

/// Integrate over an inequality-form polytope. The region must be bounded
/// (standardization translates, it never splits), and the integrand lives on
/// the original coordinates.
pub fn integrate_h(h: &HPolytope, f: &Polynomial, opts: &EhrhartOptions) -> Result<Rat> {
    if f.n_vars() != h.n() {
        return Err(Error::DimensionMismatch(
            "integrand arity vs polytope".into(),
        ));
    }
    let (std, change) = standardize_with(h, FreeVarStrategy::TranslateOnly)?;
    let g = change.transform_polynomial(f);
    integrate(&std, &g, opts)
}

/// One sandwich round of the maximization loop.
#[derive(Clone, Debug)]
pub struct MaxStep {
    pub k: u32,
    pub power_sum: Int,
    pub lower: Int,
    pub upper: Int,
}

/// An exact maximum together with the trace that certifies it.
#[derive(Clone, Debug)]
pub struct MaxCertificate {
    pub maximum: Int,
    pub k_reached: u32,
    pub n_points: Int,
    pub steps: Vec<MaxStep>,
}

#[derive(Clone, Debug)]
pub struct MaxOptions {
    pub k_max: u32,
    pub counter: EnumConfig,
}

impl Default for MaxOptions {
    fn default() -> Self {
        MaxOptions {
            k_max: 64,
            counter: EnumConfig::default(),
        }
    }
}

/// Smallest integer `r >= 0` with `r^k * n >= s` (so `r = ceil((s/n)^(1/k))`).
fn kth_root_ceil_of_ratio(s: &Int, n: &Int, k: u32) -> Result<Int> {
    let mut r = int_kth_root_floor(&s.clone().div_floor(n), k)?;
    while &r.pow(k) * n < *s {
        r += 1;
    }
    Ok(r)
}

/// `max_{x in P cap Z^n} |Q(x) cap Z^m|` with an exact certificate.
pub fn maximize(
    p: &StandardPolytope,
    fam: &ParametricFamily,
    opts: &MaxOptions,
) -> Result<MaxCertificate> {
    if fam.n() != p.n() {
        return Err(Error::DimensionMismatch("weight arity vs polytope".into()));
    }
    let n_points = count(p, &opts.counter)?.count;
    if n_points.is_zero() {
        return Err(Error::EmptyPolytope);
    }
    let mut steps: Vec<MaxStep> = Vec::new();
    let mut power: Option<ParametricFamily> = None;
    for k in 1..=opts.k_max {
        let next = match &power {
            None => fam.clone(),
            Some(prev) => prev.product(fam)?,
        };
        let lifted = lift(p, &next)?;
        let s_k = count(&lifted.base, &opts.counter)?.count;
        power = Some(next);
        if s_k.is_zero() {
            steps.push(MaxStep {
                k,
                power_sum: s_k,
                lower: Int::zero(),
                upper: Int::zero(),
            });
            return Ok(MaxCertificate {
                maximum: Int::zero(),
                k_reached: k,
                n_points,
                steps,
            });
        }
        let lower = kth_root_ceil_of_ratio(&s_k, &n_points, k)?;
        let upper = int_kth_root_floor(&s_k, k)?;
        let done = lower == upper;
        steps.push(MaxStep {
            k,
            power_sum: s_k,
            lower: lower.clone(),
            upper,
        });
        if done {
            return Ok(MaxCertificate {
                maximum: lower,
                k_reached: k,
                n_points,
                steps,
            });
        }
    }
    let last = steps.last().expect("k_max >= 1 yields at least one step");
    Err(Error::MaxIterations {
        k_max: opts.k_max,
        lo: last.lower.to_string(),
        hi: last.upper.to_string(),
    })
}

/// Maximize a weight expression. Only pure counting weights (a single family
/// with coefficient one) admit the power-sum certificate.
pub fn maximize_weight(
    p: &StandardPolytope,
    w: &WeightExpr,
    opts: &MaxOptions,
) -> Result<MaxCertificate> {
    let fam = w.as_single_family().ok_or_else(|| {
        Error::NonCountingWeight(
            "maximization needs a single counting family with coefficient 1".into(),
        )
    })?;
    maximize(p, fam, opts)
}
