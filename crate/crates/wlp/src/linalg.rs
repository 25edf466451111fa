//! Dense exact matrices over `Int` / `Rat` and Gauss-Jordan elimination.
//!
//! Sizes here are "desk scale" (tens of rows/columns), so dense row-major
//! storage and textbook elimination are the right tools.

use num_traits::{One, Signed, Zero};

use crate::arith::{Int, Rat};

/// Dense integer matrix, row-major.
#[derive(Clone, PartialEq, Eq)]
pub struct IntMat {
    rows: usize,
    cols: usize,
    data: Vec<Int>,
}

impl IntMat {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        IntMat {
            rows,
            cols,
            data: vec![Int::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, Int::one());
        }
        m
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> Int) -> Self {
        let mut m = Self::zeros(rows, cols);
        for i in 0..rows {
            for j in 0..cols {
                m.set(i, j, f(i, j));
            }
        }
        m
    }

    /// Build from machine-integer rows; ragged input panics.
    pub fn from_rows(rows: &[Vec<i64>]) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, |x| x.len());
        assert!(rows.iter().all(|x| x.len() == c), "ragged rows");
        IntMat {
            rows: r,
            cols: c,
            data: rows.iter().flatten().map(|&v| Int::from(v)).collect(),
        }
    }

    pub fn from_int_rows(rows: Vec<Vec<Int>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, |x| x.len());
        assert!(rows.iter().all(|x| x.len() == c), "ragged rows");
        IntMat {
            rows: r,
            cols: c,
            data: rows.into_iter().flatten().collect(),
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &Int {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: Int) {
        self.data[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[Int] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn mul_vec(&self, x: &[Int]) -> Vec<Int> {
        assert_eq!(x.len(), self.cols);
        (0..self.rows)
            .map(|i| {
                let mut acc = Int::zero();
                for (a, xv) in self.row(i).iter().zip(x) {
                    if !a.is_zero() {
                        acc += a * xv;
                    }
                }
                acc
            })
            .collect()
    }

    /// Block-diagonal stack of the given matrices.
    pub fn block_diag(blocks: &[&IntMat]) -> Self {
        let rows = blocks.iter().map(|b| b.rows).sum();
        let cols = blocks.iter().map(|b| b.cols).sum();
        let mut m = Self::zeros(rows, cols);
        let (mut ro, mut co) = (0, 0);
        for b in blocks {
            for i in 0..b.rows {
                for j in 0..b.cols {
                    m.set(ro + i, co + j, b.get(i, j).clone());
                }
            }
            ro += b.rows;
            co += b.cols;
        }
        m
    }

    pub fn to_rat(&self) -> RatMat {
        RatMat {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|v| Rat::from_integer(v.clone())).collect(),
        }
    }
}

impl std::fmt::Debug for IntMat {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        writeln!(f, "IntMat {}x{} [", self.rows, self.cols)?;
        for i in 0..self.rows {
            writeln!(f, "  {:?}", self.row(i).iter().map(|v| v.to_string()).collect::<Vec<_>>())?;
        }
        write!(f, "]")
    }
}

/// Dense rational matrix, row-major.
#[derive(Clone, PartialEq, Eq)]
pub struct RatMat {
    rows: usize,
    cols: usize,
    data: Vec<Rat>,
}

impl RatMat {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        RatMat {
            rows,
            cols,
            data: vec![Rat::zero(); rows * cols],
        }
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> Rat) -> Self {
        let mut m = Self::zeros(rows, cols);
        for i in 0..rows {
            for j in 0..cols {
                m.set(i, j, f(i, j));
            }
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &Rat {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: Rat) {
        self.data[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[Rat] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn mul_vec(&self, x: &[Rat]) -> Vec<Rat> {
        assert_eq!(x.len(), self.cols);
        (0..self.rows)
            .map(|i| {
                let mut acc = Rat::zero();
                for (a, xv) in self.row(i).iter().zip(x) {
                    if !a.is_zero() {
                        acc += a * xv;
                    }
                }
                acc
            })
            .collect()
    }
}

impl std::fmt::Debug for RatMat {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        writeln!(f, "RatMat {}x{} [", self.rows, self.cols)?;
        for i in 0..self.rows {
            writeln!(f, "  {:?}", self.row(i).iter().map(|v| v.to_string()).collect::<Vec<_>>())?;
        }
        write!(f, "]")
    }
}

/// Reduced row echelon form computed in place; returns the pivot columns.
/// `aug` marks how many trailing columns are augmentation (excluded from
/// pivot selection).
pub fn rref(m: &mut RatMat, aug: usize) -> Vec<usize> {
    let pivot_cols_end = m.cols - aug;
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..pivot_cols_end {
        if r == m.rows {
            break;
        }
        // Find a pivot row at or below r.
        let Some(p) = (r..m.rows).find(|&i| !m.get(i, c).is_zero()) else {
            continue;
        };
        if p != r {
            for j in 0..m.cols {
                let a = m.get(r, j).clone();
                let b = m.get(p, j).clone();
                m.set(r, j, b);
                m.set(p, j, a);
            }
        }
        let inv = m.get(r, c).clone();
        for j in 0..m.cols {
            let v = m.get(r, j) / &inv;
            m.set(r, j, v);
        }
        for i in 0..m.rows {
            if i != r && !m.get(i, c).is_zero() {
                let f = m.get(i, c).clone();
                for j in 0..m.cols {
                    let v = m.get(i, j) - &f * m.get(r, j);
                    m.set(i, j, v);
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    pivots
}

/// Rank of a rational matrix.
pub fn rank(m: &RatMat) -> usize {
    let mut w = m.clone();
    rref(&mut w, 0).len()
}

/// Outcome of an exact linear solve.
pub enum LinSolve {
    /// A particular solution plus a basis of the nullspace of `A`.
    Solution {
        particular: Vec<Rat>,
        nullspace: Vec<Vec<Rat>>,
    },
    Inconsistent,
}

/// Solve `A x = b` exactly over the rationals.
pub fn solve_linear(a: &RatMat, b: &[Rat]) -> LinSolve {
    assert_eq!(a.rows(), b.len(), "rhs length");
    let n = a.cols();
    let mut w = RatMat::from_fn(a.rows(), n + 1, |i, j| {
        if j < n {
            a.get(i, j).clone()
        } else {
            b[i].clone()
        }
    });
    let pivots = rref(&mut w, 1);
    // Inconsistent iff some row is all-zero on A but nonzero on b.
    for i in pivots.len()..a.rows() {
        if !w.get(i, n).is_zero() {
            return LinSolve::Inconsistent;
        }
    }
    let mut particular = vec![Rat::zero(); n];
    for (r, &c) in pivots.iter().enumerate() {
        particular[c] = w.get(r, n).clone();
    }
    let pivot_set: std::collections::HashSet<usize> = pivots.iter().copied().collect();
    let mut nullspace = Vec::new();
    for free in (0..n).filter(|j| !pivot_set.contains(j)) {
        let mut v = vec![Rat::zero(); n];
        v[free] = Rat::one();
        for (r, &c) in pivots.iter().enumerate() {
            v[c] = -w.get(r, free).clone();
        }
        nullspace.push(v);
    }
    LinSolve::Solution {
        particular,
        nullspace,
    }
}

/// Solve a square system `A x = b`; `None` when `A` is singular or inconsistent
/// in a way that leaves free variables (used for vertex computations where a
/// unique solution is required).
pub fn solve_unique(a: &RatMat, b: &[Rat]) -> Option<Vec<Rat>> {
    match solve_linear(a, b) {
        LinSolve::Solution {
            particular,
            nullspace,
        } if nullspace.is_empty() => Some(particular),
        _ => None,
    }
}

/// Signed lcm-clearing: smallest positive integer `s` such that `s*x` is
/// integral for every entry, returned with the cleared integer vector.
pub fn clear_denominators(xs: &[Rat]) -> (Int, Vec<Int>) {
    let mut l = Int::one();
    for x in xs {
        l = crate::arith::lcm_pos(&l, x.denom());
    }
    let ints = xs
        .iter()
        .map(|x| (x * Rat::from_integer(l.clone())).to_integer())
        .collect();
    (l.abs(), ints)
}
