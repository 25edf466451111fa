//! Exact lattice-point counting and enumeration for standard-form polytopes.
//!
//! Depth-first search over one variable at a time with exact interval
//! propagation on the equality system, optional LP fathoming every few
//! levels, and connected-component splitting (independent blocks multiply).
//! Arithmetic runs on machine integers when a precomputed bound proves that
//! no intermediate quantity can overflow, and on `BigInt` otherwise; both
//! paths are exact.

use std::collections::VecDeque;

use num_integer::Integer;
use num_traits::{Signed, ToPrimitive, Zero};

use crate::arith::{Int, Rat};
use crate::error::{Error, Result};
use crate::linalg::RatMat;
use crate::lp::{lp_solve, LpOutcome, Sense};
use crate::polytope::{CoordBounds, StandardPolytope};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum VarOrder {
    InputOrder,
    /// Ascending root interval width, ties by index. Default.
    TightestBoundsFirst,
}

#[derive(Clone, Debug)]
pub struct EnumConfig {
    pub order: VarOrder,
    /// Run an LP feasibility check and branch-variable tightening at depths
    /// divisible by `lp_every`.
    pub lp_fathom: bool,
    pub lp_every: usize,
    /// Hard cap on explored search nodes.
    pub node_budget: u64,
    /// Multiply counts of independent row/variable blocks instead of
    /// enumerating their product (counting mode only).
    pub split_components: bool,
    /// Explore root subtrees in parallel (counting mode only). Counts are
    /// identical to the sequential run.
    pub parallel: bool,
}

impl Default for EnumConfig {
    fn default() -> Self {
        EnumConfig {
            order: VarOrder::TightestBoundsFirst,
            lp_fathom: true,
            lp_every: 3,
            node_budget: 2_000_000_000,
            split_components: true,
            parallel: false,
        }
    }
}

#[derive(Clone, Debug)]
pub struct CountResult {
    pub count: Int,
    /// Search nodes explored (diagnostic; depends on configuration).
    pub nodes: u64,
}

/// Count the lattice points of `P`. Errors when some coordinate is unbounded
/// over a nonempty region, or when the node budget runs out.
pub fn count(p: &StandardPolytope, cfg: &EnumConfig) -> Result<CountResult> {
    match Prepared::build(p, cfg)? {
        None => Ok(CountResult {
            count: Int::zero(),
            nodes: 0,
        }),
        Some(prep) => {
            if prep.vars.is_empty() {
                // Everything pinned by emptiness of the variable list.
                return run_scalar(&prep, cfg, None);
            }
            if cfg.parallel {
                return count_parallel(p, &prep, cfg);
            }
            run_scalar(&prep, cfg, None)
        }
    }
}

/// Convenience wrapper returning just the count with default configuration.
pub fn count_default(p: &StandardPolytope) -> Result<Int> {
    Ok(count(p, &EnumConfig::default())?.count)
}

/// Visit every lattice point exactly once. The visit order is lexicographic
/// in the configured variable order; component splitting and parallelism are
/// disabled so points stream one by one.
pub fn for_each_point(
    p: &StandardPolytope,
    cfg: &EnumConfig,
    mut f: impl FnMut(&[Int]),
) -> Result<CountResult> {
    match Prepared::build(p, cfg)? {
        None => Ok(CountResult {
            count: Int::zero(),
            nodes: 0,
        }),
        Some(prep) => run_scalar(&prep, cfg, Some(&mut f)),
    }
}

/// All lattice points, lexicographic in input variable order.
pub fn enumerate(p: &StandardPolytope) -> Result<Vec<Vec<Int>>> {
    let cfg = EnumConfig {
        order: VarOrder::InputOrder,
        ..EnumConfig::default()
    };
    let mut out = Vec::new();
    for_each_point(p, &cfg, |pt| out.push(pt.to_vec()))?;
    Ok(out)
}

/// Root data shared by both scalar engines.
struct Prepared {
    a: crate::linalg::IntMat,
    b: Vec<Int>,
    lo: Vec<Int>,
    hi: Vec<Int>,
    vars: Vec<usize>,
    /// max over rows of |b_i| + sum_j |a_ij| * max(|lo_j|, |hi_j|).
    magnitude: Int,
}

impl Prepared {
    /// Returns `None` when the polytope is plainly empty.
    fn build(p: &StandardPolytope, cfg: &EnumConfig) -> Result<Option<Prepared>> {
        let n = p.n();
        if n == 0 {
            return Ok(if p.b().iter().all(|v| v.is_zero()) {
                Some(Prepared {
                    a: p.a().clone(),
                    b: p.b().to_vec(),
                    lo: vec![],
                    hi: vec![],
                    vars: vec![],
                    magnitude: Int::zero(),
                })
            } else {
                None
            });
        }
        let (lo, hi) = match root_boxes(p)? {
            Some(boxes) => boxes,
            None => return Ok(None),
        };
        let mut vars: Vec<usize> = (0..n).collect();
        if cfg.order == VarOrder::TightestBoundsFirst {
            vars.sort_by(|&x, &y| {
                let wx = &hi[x] - &lo[x];
                let wy = &hi[y] - &lo[y];
                wx.cmp(&wy).then(x.cmp(&y))
            });
        }
        let mut magnitude = Int::zero();
        for i in 0..p.rows() {
            let mut acc = p.b()[i].abs();
            for j in 0..n {
                let m = lo[j].abs().max(hi[j].abs());
                acc += p.a().get(i, j).abs() * m;
            }
            magnitude = magnitude.max(acc);
        }
        Ok(Some(Prepared {
            a: p.a().clone(),
            b: p.b().to_vec(),
            lo,
            hi,
            vars,
            magnitude,
        }))
    }
}

/// Finite root boxes for every coordinate: nonnegativity plus interval
/// propagation over the equality rows, with an exact LP fallback for any
/// coordinate the rows alone fail to bound above. `None` = provably empty.
///
/// Propagation is far cheaper than one LP pair per coordinate and already
/// bounds the systems produced by lifting; the fallback keeps generality.
fn root_boxes(p: &StandardPolytope) -> Result<Option<(Vec<Int>, Vec<Int>)>> {
    let n = p.n();
    let rows = p.rows();
    let nz: Vec<Vec<usize>> = (0..rows)
        .map(|i| (0..n).filter(|&j| !p.a().get(i, j).is_zero()).collect())
        .collect();
    let mut lo: Vec<Int> = vec![Int::zero(); n];
    // `None` = no finite upper bound derived yet.
    let mut hi: Vec<Option<Int>> = vec![None; n];
    for _round in 0..n + 64 {
        let mut changed = false;
        for (i, nzi) in nz.iter().enumerate() {
            // Finite parts of the row's range plus counts of terms whose
            // minimum (resp. maximum) is unbounded.
            let mut smin = Int::zero();
            let mut smax = Int::zero();
            let mut inf_min = 0usize;
            let mut inf_max = 0usize;
            for &j in nzi {
                let a = p.a().get(i, j);
                if a.is_positive() {
                    smin += a * &lo[j];
                    match &hi[j] {
                        Some(h) => smax += a * h,
                        None => inf_max += 1,
                    }
                } else {
                    match &hi[j] {
                        Some(h) => smin += a * h,
                        None => inf_min += 1,
                    }
                    smax += a * &lo[j];
                }
            }
            let b = &p.b()[i];
            if (inf_min == 0 && &smin > b) || (inf_max == 0 && &smax < b) {
                return Ok(None);
            }
            for &j in nzi {
                let a = p.a().get(i, j);
                let own_inf_min = !a.is_positive() && hi[j].is_none();
                let own_inf_max = a.is_positive() && hi[j].is_none();
                // Minimum of the row without x_j's term, when finite.
                if inf_min == usize::from(own_inf_min) {
                    let rest_min = if own_inf_min {
                        smin.clone()
                    } else {
                        let t = if a.is_positive() {
                            a * &lo[j]
                        } else {
                            a * hi[j].as_ref().expect("finite by case")
                        };
                        &smin - t
                    };
                    // a * x_j <= b - rest_min.
                    let num = b - rest_min;
                    if a.is_positive() {
                        let nh = num.div_floor(a);
                        if hi[j].as_ref().is_none_or(|h| &nh < h) {
                            hi[j] = Some(nh);
                            changed = true;
                        }
                    } else {
                        let nl = num.div_ceil(a);
                        if nl > lo[j] {
                            lo[j] = nl;
                            changed = true;
                        }
                    }
                }
                // Maximum of the row without x_j's term, when finite.
                if inf_max == usize::from(own_inf_max) {
                    let rest_max = if own_inf_max {
                        smax.clone()
                    } else {
                        let t = if a.is_positive() {
                            a * hi[j].as_ref().expect("finite by case")
                        } else {
                            a * &lo[j]
                        };
                        &smax - t
                    };
                    // a * x_j >= b - rest_max.
                    let num = b - rest_max;
                    if a.is_positive() {
                        let nl = num.div_ceil(a);
                        if nl > lo[j] {
                            lo[j] = nl;
                            changed = true;
                        }
                    } else {
                        let nh = num.div_floor(a);
                        if hi[j].as_ref().is_none_or(|h| &nh < h) {
                            hi[j] = Some(nh);
                            changed = true;
                        }
                    }
                }
                if let Some(h) = &hi[j] {
                    if &lo[j] > h {
                        return Ok(None);
                    }
                }
            }
        }
        if !changed {
            break;
        }
    }
    let mut out_hi = Vec::with_capacity(n);
    for j in 0..n {
        match hi[j].take() {
            Some(h) => out_hi.push(h),
            None => match p.coordinate_bounds(j) {
                CoordBounds::Infeasible => return Ok(None),
                CoordBounds::Unbounded => return Err(Error::UnboundedCoordinate(j)),
                CoordBounds::Range(l, h) => {
                    let li = l.ceil().to_integer();
                    let hf = h.floor().to_integer();
                    if li > lo[j] {
                        lo[j] = li;
                    }
                    if lo[j] > hf {
                        return Ok(None);
                    }
                    out_hi.push(hf);
                }
            },
        }
    }
    Ok(Some((lo, out_hi)))
}

/// Optional per-point callback threaded through the search.
type Emit<'a> = Option<&'a mut dyn FnMut(&[Int])>;

fn run_scalar(prep: &Prepared, cfg: &EnumConfig, emit: Emit<'_>) -> Result<CountResult> {
    // 4x headroom over the worst intermediate quantity.
    let fits = prep.magnitude.to_i64().is_some_and(|m| m < (1i64 << 60));
    if fits {
        Engine::<i64>::new(prep, cfg).run(&prep.vars, emit)
    } else {
        Engine::<Int>::new(prep, cfg).run(&prep.vars, emit)
    }
}

fn count_parallel(
    p: &StandardPolytope,
    prep: &Prepared,
    cfg: &EnumConfig,
) -> Result<CountResult> {
    use rayon::prelude::*;
    let v = prep.vars[0];
    let mut tasks = Vec::new();
    let mut val = prep.lo[v].clone();
    while val <= prep.hi[v] {
        tasks.push(val.clone());
        val += 1;
    }
    let sub_cfg = EnumConfig {
        parallel: false,
        ..cfg.clone()
    };
    let results: Vec<Result<CountResult>> = tasks
        .par_iter()
        .map(|val| {
            // Pin x_v = val: drop the column, fold it into the rhs.
            let n = p.n();
            let a = crate::linalg::IntMat::from_fn(p.rows(), n - 1, |i, j| {
                let jj = if j < v { j } else { j + 1 };
                p.a().get(i, jj).clone()
            });
            let b: Vec<Int> = (0..p.rows())
                .map(|i| &p.b()[i] - p.a().get(i, v) * val)
                .collect();
            count(&StandardPolytope::new(a, b), &sub_cfg)
        })
        .collect();
    let mut total = Int::zero();
    let mut nodes = 1u64;
    for r in results {
        let r = r?;
        total += r.count;
        nodes = nodes.saturating_add(r.nodes);
    }
    Ok(CountResult {
        count: total,
        nodes,
    })
}

/// Scalar abstraction so the search runs on i64 (fast path, overflow excluded
/// by the magnitude precheck) or BigInt with the same code.
trait Scalar: Clone + Ord + std::fmt::Debug {
    fn s_zero() -> Self;
    fn from_int(v: &Int) -> Self;
    fn to_int(&self) -> Int;
    fn add_assign_ref(&mut self, o: &Self);
    fn sub_assign_ref(&mut self, o: &Self);
    fn mul_ref(&self, o: &Self) -> Self;
    fn sub_ref(&self, o: &Self) -> Self;
    fn div_floor_ref(&self, o: &Self) -> Self;
    fn div_ceil_ref(&self, o: &Self) -> Self;
    fn is_zero_(&self) -> bool;
    fn is_pos(&self) -> bool;
    fn inc(&mut self);
}

impl Scalar for i64 {
    fn s_zero() -> Self {
        0
    }
    fn from_int(v: &Int) -> Self {
        v.to_i64().expect("magnitude precheck admits i64")
    }
    fn to_int(&self) -> Int {
        Int::from(*self)
    }
    fn add_assign_ref(&mut self, o: &Self) {
        *self += o;
    }
    fn sub_assign_ref(&mut self, o: &Self) {
        *self -= o;
    }
    fn mul_ref(&self, o: &Self) -> Self {
        self * o
    }
    fn sub_ref(&self, o: &Self) -> Self {
        self - o
    }
    fn div_floor_ref(&self, o: &Self) -> Self {
        self.div_floor(o)
    }
    fn div_ceil_ref(&self, o: &Self) -> Self {
        self.div_ceil(o)
    }
    fn is_zero_(&self) -> bool {
        *self == 0
    }
    fn is_pos(&self) -> bool {
        *self > 0
    }
    fn inc(&mut self) {
        *self += 1;
    }
}

impl Scalar for Int {
    fn s_zero() -> Self {
        Zero::zero()
    }
    fn from_int(v: &Int) -> Self {
        v.clone()
    }
    fn to_int(&self) -> Int {
        self.clone()
    }
    fn add_assign_ref(&mut self, o: &Self) {
        *self += o;
    }
    fn sub_assign_ref(&mut self, o: &Self) {
        *self -= o;
    }
    fn mul_ref(&self, o: &Self) -> Self {
        self * o
    }
    fn sub_ref(&self, o: &Self) -> Self {
        self - o
    }
    fn div_floor_ref(&self, o: &Self) -> Self {
        Integer::div_floor(self, o)
    }
    fn div_ceil_ref(&self, o: &Self) -> Self {
        Integer::div_ceil(self, o)
    }
    fn is_zero_(&self) -> bool {
        self.is_zero()
    }
    fn is_pos(&self) -> bool {
        self.is_positive()
    }
    fn inc(&mut self) {
        *self += 1;
    }
}

/// What changed since the bounds at the current level last reached a
/// propagation fixpoint, i.e. which rows need re-examination.
#[derive(Clone, Copy)]
enum Seed {
    /// First propagation of the search: every row.
    All,
    /// One variable was assigned or stepped: the rows it appears in.
    Var(usize),
    /// Nothing (re-entry after a component split): skip.
    Settled,
}

struct Engine<'a, S: Scalar> {
    n: usize,
    rows: usize,
    /// Column-major coefficients.
    col: Vec<Vec<S>>,
    rows_of_var: Vec<Vec<usize>>,
    vars_of_row: Vec<Vec<usize>>,
    rhs: Vec<S>,
    /// Bound stacks indexed by level.
    lo: Vec<Vec<S>>,
    hi: Vec<Vec<S>>,
    assigned: Vec<bool>,
    assignment: Vec<S>,
    /// Propagation worklist (row indices) and its membership flags.
    queue: VecDeque<usize>,
    queued: Vec<bool>,
    nodes: u64,
    cfg: &'a EnumConfig,
    emitting: bool,
}

impl<'a, S: Scalar> Engine<'a, S> {
    fn new(prep: &Prepared, cfg: &'a EnumConfig) -> Self {
        let n = prep.a.cols();
        let rows = prep.a.rows();
        let col: Vec<Vec<S>> = (0..n)
            .map(|j| (0..rows).map(|i| S::from_int(prep.a.get(i, j))).collect())
            .collect();
        let rows_of_var: Vec<Vec<usize>> = (0..n)
            .map(|j| (0..rows).filter(|&i| !col[j][i].is_zero_()).collect())
            .collect();
        let vars_of_row: Vec<Vec<usize>> = (0..rows)
            .map(|i| (0..n).filter(|&j| !col[j][i].is_zero_()).collect())
            .collect();
        let base_lo: Vec<S> = prep.lo.iter().map(S::from_int).collect();
        let base_hi: Vec<S> = prep.hi.iter().map(S::from_int).collect();
        let lo = vec![base_lo; n + 2];
        let hi = vec![base_hi; n + 2];
        Engine {
            n,
            rows,
            col,
            rows_of_var,
            vars_of_row,
            rhs: prep.b.iter().map(S::from_int).collect(),
            lo,
            hi,
            assigned: vec![false; n],
            assignment: vec![S::s_zero(); n],
            queue: VecDeque::with_capacity(rows),
            queued: vec![false; rows],
            nodes: 0,
            cfg,
            emitting: false,
        }
    }

    fn run(mut self, order: &[usize], mut emit: Emit<'_>) -> Result<CountResult> {
        self.emitting = emit.is_some();
        let count = self.dfs(0, order, &mut emit, Seed::All)?;
        Ok(CountResult {
            count,
            nodes: self.nodes,
        })
    }

    fn dfs(&mut self, level: usize, vars: &[usize], emit: &mut Emit<'_>, seed: Seed) -> Result<Int> {
        self.nodes += 1;
        if self.nodes > self.cfg.node_budget {
            return Err(Error::BudgetExceeded(self.cfg.node_budget));
        }
        if !self.propagate(level, seed) {
            return Ok(Int::zero());
        }
        if vars.is_empty() {
            if let Some(f) = emit {
                let pt: Vec<Int> = self.assignment.iter().map(S::to_int).collect();
                f(&pt);
            }
            return Ok(Int::from(1u8));
        }
        if self.cfg.lp_fathom
            && self.cfg.lp_every > 0
            && level > 0
            && level.is_multiple_of(self.cfg.lp_every)
            && !self.lp_gate(level, vars)
        {
            return Ok(Int::zero());
        }
        if !self.emitting && self.cfg.split_components && vars.len() >= 2 {
            if let Some(groups) = self.components(vars) {
                let mut prod = Int::from(1u8);
                for g in groups {
                    if prod.is_zero() {
                        break;
                    }
                    prod *= self.dfs(level, &g, emit, Seed::Settled)?;
                }
                return Ok(prod);
            }
        }
        let v = vars[0];
        let rest = &vars[1..];
        let lo_v = self.lo[level][v].clone();
        let hi_v = self.hi[level][v].clone();
        debug_assert!(lo_v <= hi_v);
        self.apply_mul(v, &lo_v, true);
        self.assigned[v] = true;
        let mut val = lo_v;
        let mut acc = Int::zero();
        let result = loop {
            self.copy_bounds(level);
            if self.emitting {
                self.assignment[v] = val.clone();
            }
            match self.dfs(level + 1, rest, emit, Seed::Var(v)) {
                Ok(c) => acc += c,
                Err(e) => break Err(e),
            }
            if val == hi_v {
                break Ok(());
            }
            val.inc();
            self.apply_once(v, true);
        };
        self.assigned[v] = false;
        self.apply_mul(v, &val, false);
        result?;
        Ok(acc)
    }

    /// rhs -= col_v * f (sub = true) or rhs += col_v * f.
    fn apply_mul(&mut self, v: usize, f: &S, sub: bool) {
        if f.is_zero_() {
            return;
        }
        for &r in &self.rows_of_var[v] {
            let t = self.col[v][r].mul_ref(f);
            if sub {
                self.rhs[r].sub_assign_ref(&t);
            } else {
                self.rhs[r].add_assign_ref(&t);
            }
        }
    }

    fn apply_once(&mut self, v: usize, sub: bool) {
        for &r in &self.rows_of_var[v] {
            let t = self.col[v][r].clone();
            if sub {
                self.rhs[r].sub_assign_ref(&t);
            } else {
                self.rhs[r].add_assign_ref(&t);
            }
        }
    }

    fn copy_bounds(&mut self, level: usize) {
        let (head, tail) = self.lo.split_at_mut(level + 1);
        tail[0].clone_from(&head[level]);
        let (head, tail) = self.hi.split_at_mut(level + 1);
        tail[0].clone_from(&head[level]);
    }

    fn enqueue(&mut self, i: usize) {
        if !self.queued[i] {
            self.queued[i] = true;
            self.queue.push_back(i);
        }
    }

    fn enqueue_rows_of(&mut self, j: usize) {
        for idx in 0..self.rows_of_var[j].len() {
            let i = self.rows_of_var[j][idx];
            self.enqueue(i);
        }
    }

    /// Exact interval propagation at `level`; false = infeasible.
    ///
    /// Worklist driven: only rows whose right-hand side or variable bounds
    /// moved since the last fixpoint are examined. The seed names what moved;
    /// a tightened bound re-enqueues the rows of that variable.
    fn propagate(&mut self, level: usize, seed: Seed) -> bool {
        match seed {
            Seed::Settled => return true,
            Seed::All => {
                for i in 0..self.rows {
                    self.enqueue(i);
                }
            }
            Seed::Var(v) => self.enqueue_rows_of(v),
        }
        // Same worst case as 64 full passes over the system.
        let budget = 64usize.saturating_mul(self.rows.max(1));
        let mut visits = 0usize;
        let mut feasible = true;
        'work: while let Some(i) = self.queue.pop_front() {
            self.queued[i] = false;
            visits += 1;
            if visits > budget {
                break;
            }
            let mut smin = S::s_zero();
            let mut smax = S::s_zero();
            let mut active = 0usize;
            for &j in &self.vars_of_row[i] {
                if self.assigned[j] {
                    continue;
                }
                active += 1;
                let a = &self.col[j][i];
                let (tlo, thi) = if a.is_pos() {
                    (a.mul_ref(&self.lo[level][j]), a.mul_ref(&self.hi[level][j]))
                } else {
                    (a.mul_ref(&self.hi[level][j]), a.mul_ref(&self.lo[level][j]))
                };
                smin.add_assign_ref(&tlo);
                smax.add_assign_ref(&thi);
            }
            if smin > self.rhs[i] || smax < self.rhs[i] {
                feasible = false;
                break;
            }
            if active == 0 {
                continue;
            }
            for jj in 0..self.vars_of_row[i].len() {
                let j = self.vars_of_row[i][jj];
                if self.assigned[j] {
                    continue;
                }
                let a = self.col[j][i].clone();
                let (tlo, thi) = if a.is_pos() {
                    (a.mul_ref(&self.lo[level][j]), a.mul_ref(&self.hi[level][j]))
                } else {
                    (a.mul_ref(&self.hi[level][j]), a.mul_ref(&self.lo[level][j]))
                };
                // a * x_j in [rhs - (smax - thi), rhs - (smin - tlo)]
                let lo_num = self.rhs[i].sub_ref(&smax.sub_ref(&thi));
                let hi_num = self.rhs[i].sub_ref(&smin.sub_ref(&tlo));
                let (nlo, nhi) = if a.is_pos() {
                    (lo_num.div_ceil_ref(&a), hi_num.div_floor_ref(&a))
                } else {
                    (hi_num.div_ceil_ref(&a), lo_num.div_floor_ref(&a))
                };
                let mut moved = false;
                if nlo > self.lo[level][j] {
                    self.lo[level][j] = nlo;
                    moved = true;
                }
                if nhi < self.hi[level][j] {
                    self.hi[level][j] = nhi;
                    moved = true;
                }
                if self.lo[level][j] > self.hi[level][j] {
                    feasible = false;
                    break 'work;
                }
                if moved {
                    self.enqueue_rows_of(j);
                }
            }
        }
        for idx in 0..self.queue.len() {
            let i = self.queue[idx];
            self.queued[i] = false;
        }
        self.queue.clear();
        feasible
    }

    /// Split the remaining variables into independent components (no shared
    /// rows); `None` when connected.
    fn components(&self, vars: &[usize]) -> Option<Vec<Vec<usize>>> {
        let mut parent: Vec<usize> = (0..self.n).collect();
        fn find(parent: &mut [usize], mut x: usize) -> usize {
            while parent[x] != x {
                parent[x] = parent[parent[x]];
                x = parent[x];
            }
            x
        }
        for i in 0..self.rows {
            let mut first: Option<usize> = None;
            for &j in &self.vars_of_row[i] {
                if self.assigned[j] {
                    continue;
                }
                match first {
                    None => first = Some(j),
                    Some(f) => {
                        let (a, b) = (find(&mut parent, f), find(&mut parent, j));
                        if a != b {
                            parent[a] = b;
                        }
                    }
                }
            }
        }
        let mut groups: Vec<(usize, Vec<usize>)> = Vec::new();
        for &v in vars {
            let r = find(&mut parent, v);
            match groups.iter_mut().find(|(root, _)| *root == r) {
                Some((_, g)) => g.push(v),
                None => groups.push((r, vec![v])),
            }
        }
        if groups.len() < 2 {
            return None;
        }
        Some(groups.into_iter().map(|(_, g)| g).collect())
    }

    /// LP feasibility on the residual system plus bound tightening for the
    /// next branch variable. Returns false when the node is infeasible.
    ///
    /// The relaxation spans every unassigned variable, not just the ones in
    /// the current component: every residual row must stay satisfiable.
    fn lp_gate(&mut self, level: usize, vars: &[usize]) -> bool {
        let free: Vec<usize> = (0..self.n).filter(|&j| !self.assigned[j]).collect();
        let a = RatMat::from_fn(self.rows, free.len(), |i, j| {
            Rat::from_integer(self.col[free[j]][i].to_int())
        });
        let b: Vec<Rat> = self
            .rhs
            .iter()
            .map(|v| Rat::from_integer(v.to_int()))
            .collect();
        let mut c = vec![Rat::zero(); free.len()];
        let v = vars[0];
        let pos = free.iter().position(|&j| j == v).expect("branch var is free");
        c[pos] = Rat::from_integer(Int::from(1u8));
        match lp_solve(&a, &b, &c, Sense::Min) {
            LpOutcome::Infeasible => return false,
            LpOutcome::Optimal { value, .. } => {
                let nlo = S::from_int(&value.ceil().to_integer());
                if nlo > self.lo[level][v] {
                    self.lo[level][v] = nlo;
                }
            }
            LpOutcome::Unbounded => {}
        }
        match lp_solve(&a, &b, &c, Sense::Max) {
            LpOutcome::Infeasible => return false,
            LpOutcome::Optimal { value, .. } => {
                let nhi = S::from_int(&value.floor().to_integer());
                if nhi < self.hi[level][v] {
                    self.hi[level][v] = nhi;
                }
            }
            LpOutcome::Unbounded => {}
        }
        self.lo[level][v] <= self.hi[level][v]
    }
}
