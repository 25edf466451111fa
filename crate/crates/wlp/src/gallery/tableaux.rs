//! Tableau counts as lattice points: Gelfand-Tsetlin patterns for Kostka
//! numbers, transportation polytopes for the RSK identity, and hives for
//! Littlewood-Richardson and Newell-Littlewood coefficients.
//!
//! Each counting polytope also exists in a parametric form whose parameters
//! are a border of the pattern (the top row of a GT pattern, an edge of a
//! hive). Identities that sum a product of coefficients over a partition
//! then become single unweighted counts of lifted polytopes.

use std::collections::BTreeMap;

use crate::arith::{int, Int};
use crate::calculus::{maximize, MaxCertificate, MaxOptions};
use crate::counter::{count, EnumConfig, VarOrder};
use crate::error::{Error, Result};
use crate::gallery::partitions::{partitions_of, skew_kostka_bruteforce, Partition};
use crate::lifting::{lift, ParametricFamily};
use crate::linalg::IntMat;
use crate::polytope::StandardPolytope;

/// A pattern border: either fixed values or references to parameter columns
/// of a base polytope. Fixed borders shorter than the pattern are padded
/// with zeros; parameter borders must name one column per entry.
#[derive(Clone, Copy, Debug)]
pub enum GtBorder<'a> {
    Fixed(&'a [u64]),
    Param(&'a [usize]),
}

/// Hive edges use the same fixed-or-parametric representation.
pub type HiveEdge<'a> = GtBorder<'a>;

/// A linear expression in interior variables or base parameters.
enum Term {
    Interior(usize),
    Affine(Vec<(usize, i64)>, Int),
}

/// Counting configuration for lifted polytopes: branch the base parameters
/// first (they come first in the lifted coordinate order), so that once a
/// parameter point is pinned the product-family blocks fall apart into
/// independent components and their counts multiply. Interval propagation
/// alone fathoms interlacing patterns quickly, so the exact-rational LP
/// gate is not worth its cost on these wide systems.
fn lifted_cfg(cfg: &EnumConfig) -> EnumConfig {
    EnumConfig {
        order: VarOrder::InputOrder,
        lp_fathom: false,
        ..cfg.clone()
    }
}

impl GtBorder<'_> {
    /// The border entry at position `j`.
    fn entry(&self, j: usize) -> Term {
        match self {
            GtBorder::Fixed(v) => {
                Term::Affine(Vec::new(), Int::from(v.get(j).copied().unwrap_or(0)))
            }
            GtBorder::Param(cols) => Term::Affine(vec![(cols[j], 1)], int(0)),
        }
    }

    /// The sum of the first `upto` border entries.
    fn partial(&self, upto: usize) -> Term {
        match self {
            GtBorder::Fixed(v) => {
                let s: u64 = v.iter().take(upto).sum();
                Term::Affine(Vec::new(), Int::from(s))
            }
            GtBorder::Param(cols) => {
                assert!(upto <= cols.len(), "parameter border too short");
                Term::Affine(cols[..upto].iter().map(|&c| (c, 1)).collect(), int(0))
            }
        }
    }

    fn check_len(&self, size: usize) {
        match self {
            GtBorder::Fixed(v) => assert!(v.len() <= size, "fixed border longer than pattern"),
            GtBorder::Param(cols) => {
                assert_eq!(cols.len(), size, "parameter border must match pattern size")
            }
        }
    }
}

/// One structural row of a family under construction: an equation
/// `sum coeff * term (- slack) = 0` over interior variables, parameters,
/// and constants.
struct RowSpec {
    c: BTreeMap<usize, Int>,
    d: BTreeMap<usize, Int>,
    e: Int,
    slack: bool,
}

impl RowSpec {
    fn add(&mut self, term: &Term, coeff: i64) {
        match term {
            Term::Interior(k) => {
                let v = self.c.entry(*k).or_insert_with(|| int(0));
                *v += coeff;
            }
            Term::Affine(params, c0) => {
                for &(col, mult) in params {
                    let v = self.d.entry(col).or_insert_with(|| int(0));
                    *v -= coeff * mult;
                }
                self.e -= c0 * coeff;
            }
        }
    }
}

/// Accumulates structural rows and materializes a `ParametricFamily` whose
/// fiber variables are the interiors followed by one slack per inequality.
struct FamilyBuilder {
    n: usize,
    interiors: usize,
    rows: Vec<RowSpec>,
}

impl FamilyBuilder {
    fn new(n: usize, interiors: usize) -> Self {
        FamilyBuilder {
            n,
            interiors,
            rows: Vec::new(),
        }
    }

    fn row(&mut self, slack: bool) -> &mut RowSpec {
        self.rows.push(RowSpec {
            c: BTreeMap::new(),
            d: BTreeMap::new(),
            e: int(0),
            slack,
        });
        self.rows.last_mut().unwrap()
    }

    fn build(self) -> Result<ParametricFamily> {
        let n_slacks = self.rows.iter().filter(|r| r.slack).count();
        let m = self.interiors + n_slacks;
        let mut c_rows = Vec::with_capacity(self.rows.len());
        let mut d_rows = Vec::with_capacity(self.rows.len());
        let mut e = Vec::with_capacity(self.rows.len());
        let mut next_slack = self.interiors;
        for row in self.rows {
            let mut c = vec![int(0); m];
            for (k, v) in row.c {
                c[k] = v;
            }
            if row.slack {
                c[next_slack] = int(-1);
                next_slack += 1;
            }
            let mut d = vec![int(0); self.n];
            for (k, v) in row.d {
                d[k] = v;
            }
            c_rows.push(c);
            d_rows.push(d);
            e.push(row.e);
        }
        let c = if c_rows.is_empty() {
            IntMat::zeros(0, m)
        } else {
            IntMat::from_int_rows(c_rows)
        };
        let d = if d_rows.is_empty() {
            IntMat::zeros(0, self.n)
        } else {
            IntMat::from_int_rows(d_rows)
        };
        ParametricFamily::new(c, d, e)
    }
}

/// Gelfand-Tsetlin patterns of a given size as a parametric family over `n`
/// base variables. Rows are indexed top down: row 0 is the border `top`
/// (length `size`), rows `1 .. size` are fiber variables, and row `r` has
/// `size - r` entries. The constraints are the interlacing inequalities and
/// the row-sum equations `sum(row r) = content_1 + .. + content_{size-r}`.
///
/// The top-row sum equation (`sum(top) = sum(content)`) is intentionally
/// not a row here; for fixed borders the callers check it, and in lifted
/// identities the base polytope enforces it.
pub fn gt_family(
    n: usize,
    size: usize,
    top: GtBorder<'_>,
    content: GtBorder<'_>,
) -> Result<ParametricFamily> {
    assert!(size >= 1, "pattern size must be positive");
    top.check_len(size);
    content.check_len(size);
    let interiors: usize = (1..size).map(|r| size - r).sum();
    let idx = |r: usize, j: usize| -> usize {
        debug_assert!(r >= 1 && j < size - r);
        (1..r).map(|q| size - q).sum::<usize>() + j
    };
    let entry = |r: usize, j: usize| -> Term {
        if r == 0 {
            top.entry(j)
        } else {
            Term::Interior(idx(r, j))
        }
    };
    let mut b = FamilyBuilder::new(n, interiors);
    for r in 0..size.saturating_sub(1) {
        for j in 0..size - r - 1 {
            let row = b.row(true);
            row.add(&entry(r, j), 1);
            row.add(&entry(r + 1, j), -1);
            let row = b.row(true);
            row.add(&entry(r + 1, j), 1);
            row.add(&entry(r, j + 1), -1);
        }
    }
    for r in 1..size {
        let row = b.row(false);
        for j in 0..size - r {
            row.add(&entry(r, j), 1);
        }
        row.add(&content.partial(size - r), -1);
    }
    b.build()
}

/// The GT polytope for fixed shape and content, in standard form.
pub fn gt_polytope(lambda: &[u64], alpha: &[u64]) -> Result<StandardPolytope> {
    let size = alpha.len();
    assert!(size >= 1, "content must have at least one class");
    assert!(
        lambda.len() <= size,
        "shape has more rows than content classes"
    );
    assert_eq!(
        lambda.iter().sum::<u64>(),
        alpha.iter().sum::<u64>(),
        "shape and content sizes differ"
    );
    let fam = gt_family(0, size, GtBorder::Fixed(lambda), GtBorder::Fixed(alpha))?;
    Ok(fam.fiber(&[]))
}

/// Kostka number `K_{lambda, alpha}` as a lattice-point count.
pub fn kostka(lambda: &Partition, alpha: &[u64], cfg: &EnumConfig) -> Result<Int> {
    if lambda.size() != alpha.iter().sum::<u64>() || lambda.len() > alpha.len() {
        return Ok(int(0));
    }
    if alpha.is_empty() {
        return Ok(int(1));
    }
    let p = gt_polytope(lambda.parts(), alpha)?;
    Ok(count(&p, cfg)?.count)
}

/// Maximize `K_{lambda, alpha}` over all contents `alpha` (nonnegative
/// vectors of length `len` summing to `|lambda|`), with an exact
/// root-bound certificate. When `len >= |lambda|` the maximum is attained
/// at `alpha = (1,..,1)`, where the Kostka number counts standard Young
/// tableaux.
pub fn kostka_max(lambda: &Partition, len: usize, opts: &MaxOptions) -> Result<MaxCertificate> {
    assert!(!lambda.is_empty(), "the empty shape has nothing to maximize");
    assert!(
        len >= lambda.len(),
        "content length must cover the shape rows"
    );
    let a = IntMat::from_int_rows(vec![vec![int(1); len]]);
    let base = StandardPolytope::new(a, vec![Int::from(lambda.size())]);
    let cols: Vec<usize> = (0..len).collect();
    let fam = gt_family(
        len,
        len,
        GtBorder::Fixed(lambda.parts()),
        GtBorder::Param(&cols),
    )?;
    let opts = MaxOptions {
        k_max: opts.k_max,
        counter: lifted_cfg(&opts.counter),
    };
    maximize(&base, &fam, &opts)
}

/// Partitions of `total` with at most `len` parts, in standard form:
/// variables `x_1 .. x_len` followed by difference slacks. Returns the
/// polytope and the columns holding the parts, for use as parameters.
pub fn partition_polytope(total: u64, len: usize) -> (StandardPolytope, Vec<usize>) {
    assert!(len >= 1, "need at least one part slot");
    let n = 2 * len - 1;
    let mut rows = Vec::new();
    let mut rhs = Vec::new();
    for i in 0..len - 1 {
        let mut row = vec![int(0); n];
        row[i] = int(1);
        row[i + 1] = int(-1);
        row[len + i] = int(-1);
        rows.push(row);
        rhs.push(int(0));
    }
    let mut sum = vec![int(0); n];
    for c in sum.iter_mut().take(len) {
        *c = int(1);
    }
    rows.push(sum);
    rhs.push(Int::from(total));
    (
        StandardPolytope::new(IntMat::from_int_rows(rows), rhs),
        (0..len).collect(),
    )
}

/// Nonnegative integer matrices with row sums `mu` and column sums `nu`,
/// in standard form (one variable per matrix entry).
pub fn transportation_polytope(mu: &[u64], nu: &[u64]) -> StandardPolytope {
    let (r, c) = (mu.len(), nu.len());
    let n = r * c;
    let mut rows = Vec::new();
    let mut rhs = Vec::new();
    for (i, &m) in mu.iter().enumerate() {
        let mut row = vec![int(0); n];
        for j in 0..c {
            row[i * c + j] = int(1);
        }
        rows.push(row);
        rhs.push(Int::from(m));
    }
    for (j, &v) in nu.iter().enumerate() {
        let mut row = vec![int(0); n];
        for i in 0..r {
            row[i * c + j] = int(1);
        }
        rows.push(row);
        rhs.push(Int::from(v));
    }
    StandardPolytope::new(IntMat::from_int_rows(rows), rhs)
}

/// The three counts whose equality is the RSK identity:
/// `sum_lambda K_{lambda mu} K_{lambda nu}` (a sum of products of GT
/// counts), the number of contingency tables with margins `mu, nu`, and a
/// single unweighted count of a lifted polytope over the partition simplex.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RskReport {
    pub lhs: Int,
    pub rhs: Int,
    pub lifted: Int,
}

pub fn rsk_check(mu: &Partition, nu: &Partition, cfg: &EnumConfig) -> Result<RskReport> {
    if mu.size() != nu.size() {
        return Err(Error::InvalidInput(
            "margins must have equal sizes".into(),
        ));
    }
    let n = mu.size();
    if n == 0 {
        let one = int(1);
        return Ok(RskReport {
            lhs: one.clone(),
            rhs: one.clone(),
            lifted: one,
        });
    }
    let size = n as usize;
    let mu_pad = mu.padded(size);
    let nu_pad = nu.padded(size);

    let mut lhs = int(0);
    for lam in partitions_of(n) {
        lhs += kostka(&lam, &mu_pad, cfg)? * kostka(&lam, &nu_pad, cfg)?;
    }

    let rhs = count(&transportation_polytope(mu.parts(), nu.parts()), cfg)?.count;

    let (base, cols) = partition_polytope(n, size);
    let f_mu = gt_family(
        base.n(),
        size,
        GtBorder::Param(&cols),
        GtBorder::Fixed(&mu_pad),
    )?;
    let f_nu = gt_family(
        base.n(),
        size,
        GtBorder::Param(&cols),
        GtBorder::Fixed(&nu_pad),
    )?;
    let fam = f_mu.product(&f_nu)?;
    let lifted = count(&lift(&base, &fam)?.base, &lifted_cfg(cfg))?.count;

    Ok(RskReport { lhs, rhs, lifted })
}

/// Hives of the given size as a parametric family: triangular arrays
/// `h[i][j]` (`0 <= j <= i <= size`) with `h[0][0] = 0`, border partial
/// sums given by the three edges, and every rhombus inequality (three
/// orientations) as a slack row. Fiber variables are the interior entries
/// plus one slack per rhombus.
pub fn hive_family(
    n: usize,
    size: usize,
    left: HiveEdge<'_>,
    bottom: HiveEdge<'_>,
    right: HiveEdge<'_>,
) -> Result<ParametricFamily> {
    assert!(size >= 1, "hive size must be positive");
    left.check_len(size);
    bottom.check_len(size);
    right.check_len(size);
    let interiors = if size >= 2 {
        (size - 1) * (size - 2) / 2
    } else {
        0
    };
    let idx = |i: usize, j: usize| -> usize {
        debug_assert!(i >= 2 && i < size && j >= 1 && j < i);
        (i - 2) * (i - 1) / 2 + (j - 1)
    };
    let mut b = FamilyBuilder::new(n, interiors);
    let add_entry = |row: &mut RowSpec, i: usize, j: usize, coeff: i64| {
        if i == 0 {
            return;
        }
        if j == i {
            row.add(&right.partial(i), coeff);
        } else if j == 0 {
            row.add(&left.partial(i), coeff);
        } else if i == size {
            row.add(&left.partial(size), coeff);
            row.add(&bottom.partial(j), coeff);
        } else {
            row.add(&Term::Interior(idx(i, j)), coeff);
        }
    };
    // Right-leaning rhombi: h[i][j] + h[i+1][j+1] >= h[i+1][j] + h[i][j+1].
    for i in 1..size {
        for j in 0..i {
            let row = b.row(true);
            add_entry(row, i, j, 1);
            add_entry(row, i + 1, j + 1, 1);
            add_entry(row, i + 1, j, -1);
            add_entry(row, i, j + 1, -1);
        }
    }
    // Vertical rhombi: h[i+1][j] + h[i+1][j+1] >= h[i][j] + h[i+2][j+1].
    for i in 0..size.saturating_sub(1) {
        for j in 0..=i {
            let row = b.row(true);
            add_entry(row, i + 1, j, 1);
            add_entry(row, i + 1, j + 1, 1);
            add_entry(row, i, j, -1);
            add_entry(row, i + 2, j + 1, -1);
        }
    }
    // Left-leaning rhombi: h[i][j] + h[i+1][j] >= h[i][j-1] + h[i+1][j+1].
    for i in 1..size {
        for j in 1..=i {
            let row = b.row(true);
            add_entry(row, i, j, 1);
            add_entry(row, i + 1, j, 1);
            add_entry(row, i, j - 1, -1);
            add_entry(row, i + 1, j + 1, -1);
        }
    }
    b.build()
}

/// The hive polytope whose lattice points are counted by
/// `c^{lambda}_{mu, nu}`, in standard form. The border reads `mu` down the
/// left edge, `nu` along the bottom, and `lambda` down the right edge, all
/// as partial sums.
pub fn hive_polytope(
    lambda: &Partition,
    mu: &Partition,
    nu: &Partition,
) -> Result<StandardPolytope> {
    if mu.size() + nu.size() != lambda.size() {
        return Err(Error::InvalidInput(
            "hive border sizes are inconsistent".into(),
        ));
    }
    let size = lambda.len().max(mu.len()).max(nu.len());
    if size == 0 {
        return Ok(StandardPolytope::new(IntMat::zeros(0, 0), vec![]));
    }
    let fam = hive_family(
        0,
        size,
        HiveEdge::Fixed(mu.parts()),
        HiveEdge::Fixed(nu.parts()),
        HiveEdge::Fixed(lambda.parts()),
    )?;
    Ok(fam.fiber(&[]))
}

/// Littlewood-Richardson coefficient as a hive count.
pub fn lr_coefficient(
    lambda: &Partition,
    mu: &Partition,
    nu: &Partition,
    cfg: &EnumConfig,
) -> Result<Int> {
    if mu.size() + nu.size() != lambda.size() {
        return Ok(int(0));
    }
    let p = hive_polytope(lambda, mu, nu)?;
    Ok(count(&p, cfg)?.count)
}

/// The three counts whose equality expresses the skew expansion
/// `K_{lambda/mu, alpha} = sum_nu c^{lambda}_{mu nu} K_{nu alpha}`:
/// a direct enumeration of skew tableaux, the coefficient-by-coefficient
/// sum (hive counts times GT counts), and one unweighted count of a lifted
/// polytope whose weight is the product of a hive family and a GT family
/// sharing the parameter `nu`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LrIdentityReport {
    pub lhs: Int,
    pub rhs: Int,
    pub lifted: Int,
}

pub fn lr_identity_check(
    lambda: &Partition,
    mu: &Partition,
    alpha: &[u64],
    cfg: &EnumConfig,
) -> Result<LrIdentityReport> {
    let s: u64 = alpha.iter().sum();
    if lambda.size() != mu.size() + s {
        return Err(Error::InvalidInput(
            "skew shape and content sizes differ".into(),
        ));
    }
    let lhs = skew_kostka_bruteforce(lambda, mu, alpha);
    if s == 0 {
        let v = if mu.contained_in(lambda) && lambda.contained_in(mu) {
            int(1)
        } else {
            int(0)
        };
        return Ok(LrIdentityReport {
            lhs,
            rhs: v.clone(),
            lifted: v,
        });
    }

    let mut rhs = int(0);
    for nu in partitions_of(s) {
        let c = lr_coefficient(lambda, mu, &nu, cfg)?;
        if !num_traits::Zero::is_zero(&c) {
            rhs += c * kostka(&nu, alpha, cfg)?;
        }
    }

    let size = lambda
        .len()
        .max(mu.len())
        .max(alpha.len())
        .max(s as usize)
        .max(1);
    let (base, cols) = partition_polytope(s, size);
    let alpha_pad: Vec<u64> = {
        let mut v = alpha.to_vec();
        v.resize(size, 0);
        v
    };
    let hive = hive_family(
        base.n(),
        size,
        HiveEdge::Fixed(mu.parts()),
        HiveEdge::Param(&cols),
        HiveEdge::Fixed(lambda.parts()),
    )?;
    let gt = gt_family(
        base.n(),
        size,
        GtBorder::Param(&cols),
        GtBorder::Fixed(&alpha_pad),
    )?;
    let fam = hive.product(&gt)?;
    let lifted = count(&lift(&base, &fam)?.base, &lifted_cfg(cfg))?.count;

    Ok(LrIdentityReport { lhs, rhs, lifted })
}

/// Newell-Littlewood coefficient
/// `N_{mu nu lambda} = sum c^{mu}_{alpha beta} c^{nu}_{alpha gamma}
/// c^{lambda}_{beta gamma}` as one unweighted count: the base polytope
/// ranges over the triple `(alpha, beta, gamma)` and the weight is a
/// product of three parametric hive families.
pub fn newell_littlewood(
    mu: &Partition,
    nu: &Partition,
    lambda: &Partition,
    cfg: &EnumConfig,
) -> Result<Int> {
    let (sm, sn, sl) = (
        mu.size() as i64,
        nu.size() as i64,
        lambda.size() as i64,
    );
    let (da, db, dg) = (sm + sn - sl, sm + sl - sn, sn + sl - sm);
    if da < 0 || db < 0 || dg < 0 || da % 2 != 0 || db % 2 != 0 || dg % 2 != 0 {
        return Ok(int(0));
    }
    let (sa, sb, sg) = ((da / 2) as u64, (db / 2) as u64, (dg / 2) as u64);
    let k = mu.len().max(nu.len()).max(lambda.len()).max(1);

    let (pa, _) = partition_polytope(sa, k);
    let (pb, _) = partition_polytope(sb, k);
    let (pg, _) = partition_polytope(sg, k);
    let base = StandardPolytope::block_product(&[&pa, &pb, &pg]);
    let block = 2 * k - 1;
    let cols_a: Vec<usize> = (0..k).collect();
    let cols_b: Vec<usize> = (block..block + k).collect();
    let cols_g: Vec<usize> = (2 * block..2 * block + k).collect();

    let h_mu = hive_family(
        base.n(),
        k,
        HiveEdge::Param(&cols_a),
        HiveEdge::Param(&cols_b),
        HiveEdge::Fixed(mu.parts()),
    )?;
    let h_nu = hive_family(
        base.n(),
        k,
        HiveEdge::Param(&cols_a),
        HiveEdge::Param(&cols_g),
        HiveEdge::Fixed(nu.parts()),
    )?;
    let h_lam = hive_family(
        base.n(),
        k,
        HiveEdge::Param(&cols_b),
        HiveEdge::Param(&cols_g),
        HiveEdge::Fixed(lambda.parts()),
    )?;
    let fam = h_mu.product(&h_nu)?.product(&h_lam)?;
    Ok(count(&lift(&base, &fam)?.base, &lifted_cfg(cfg))?.count)
}
