//! Exact weighted lattice-point sums over rational polytopes.
//!
//! The central construction: given a polytope `P = {x : Ax = b, x >= 0}` and a
//! parametric family of polytopes `Q(x) = {y : Cy = Dx + e, y >= 0}`, the weight
//! `w(x) = |Q(x) cap Z^m|` satisfies
//!
//! ```text
//!   sum_{x in P cap Z^n} w(x)  =  | P* cap Z^{n+m} |
//! ```
//!
//! where `P*` is the *weight lifting polytope* `{(x,y) : Ax = b, Cy = Dx + e,
//! x,y >= 0}`. Polynomial weights are compiled into signed combinations of such
//! counting families, which turns weighted Ehrhart quasi-polynomials, exact
//! polynomial integration (leading coefficients) and exact weight maximization
//! (k-th root sandwich on power sums) into plain lattice-point counting.
//!
//! Everything is exact: `BigInt` / `BigRational` throughout, counting by
//! depth-first enumeration with interval propagation and LP fathoming.

pub mod arith;
pub mod calculus;
pub mod counter;
pub mod ehrhart;
pub mod error;
pub mod gallery;
pub mod io;
pub mod lifting;
pub mod linalg;
pub mod lp;
pub mod poly;
pub mod polytope;

pub use arith::{Int, Rat};
pub use error::{Error, Result};
