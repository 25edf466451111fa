//! Simultaneous core partitions.
//!
//! For coprime `a, b` the `(a, b)`-cores (partitions with no hook length
//! divisible by `a` or by `b`) are finite in number, and they biject with
//! lattice points of a rational simplex cut out by cyclic difference
//! constraints. The size of a core becomes a quadratic weight on that
//! simplex, so counts, total size, and average size all fall out of the
//! weighted-sum machinery.

use crate::arith::{int, rat, rat_int, Int, Rat};
use crate::counter::{count, EnumConfig};
use crate::error::Result;
use crate::gallery::partitions::{partitions_of, Partition};
use crate::lifting::{compile_polynomial, weighted_sum, Basis};
use crate::linalg::IntMat;
use crate::poly::Polynomial;
use crate::polytope::{standardize_with, FreeVarStrategy, HPolytope};

/// The polytope whose lattice points index `(a, b)`-cores, in `a` variables
/// `c_0 .. c_{a-1}`: the coordinates sum to zero and satisfy
/// `c_{(i+b) mod a} - c_i <= floor((b + i) / a)` for each `i`.
pub fn core_polytope(a: u64, b: u64) -> Result<HPolytope> {
    assert!(a >= 2 && b >= 2, "need a, b >= 2");
    assert!(num_integer::gcd(a, b) == 1, "a and b must be coprime");
    let n = a as usize;
    let mut ineq_rows: Vec<Vec<Int>> = Vec::new();
    let mut ineq_rhs: Vec<Int> = Vec::new();
    for i in 0..n {
        let j = (i + b as usize) % n;
        // c_j - c_i <= floor((b + i) / a), written as a row of G x <= h.
        let mut row = vec![int(0); n];
        row[j] += 1;
        row[i] -= 1;
        ineq_rows.push(row);
        ineq_rhs.push(Int::from((b + i as u64) / a));
    }
    let g = IntMat::from_int_rows(ineq_rows);
    let eq = IntMat::from_int_rows(vec![vec![int(1); n]]);
    HPolytope::new(g, ineq_rhs, eq, vec![int(0)])
}

/// The size statistic as a polynomial in the `c` coordinates:
/// `(a/2) * sum c_i^2 + sum i * c_i`.
pub fn core_size_weight(a: u64) -> Polynomial {
    let n = a as usize;
    let mut w = Polynomial::constant(Rat::from(int(0)), n);
    let half_a = rat(a as i64, 2);
    for i in 0..n {
        let mut sq = vec![0u32; n];
        sq[i] = 2;
        w = &w + &Polynomial::monomial(sq, half_a.clone());
        if i > 0 {
            let mut lin = vec![0u32; n];
            lin[i] = 1;
            w = &w + &Polynomial::monomial(lin, rat_int(&int(i as i64)));
        }
    }
    w
}

/// Exact count, total size, and average size of the `(a, b)`-cores.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoreStats {
    pub count: Int,
    pub total_size: Int,
    pub average: Rat,
}

/// Compute the `(a, b)`-core statistics by standardizing the core polytope
/// and evaluating the size weight as a lifted count.
pub fn core_statistics(a: u64, b: u64, cfg: &EnumConfig) -> Result<CoreStats> {
    let h = core_polytope(a, b)?;
    let (p, change) = standardize_with(&h, FreeVarStrategy::TranslateOnly)?;
    let w = change.transform_polynomial(&core_size_weight(a));
    let count = count(&p, cfg)?.count;
    let expr = compile_polynomial(&w, Basis::CubeMonomial);
    let total = weighted_sum(&p, &expr, &int(1), cfg)?;
    assert!(total.is_integer(), "total core size must be an integer");
    let total_size = total.to_integer();
    let average = Rat::new(total_size.clone(), count.clone());
    Ok(CoreStats {
        count,
        total_size,
        average,
    })
}

/// Enumerate the `(a, b)`-cores directly via hook lengths. The largest
/// `(a, b)`-core has size `(a^2 - 1)(b^2 - 1) / 24`, so the search over
/// partition sizes is finite.
pub fn cores_bruteforce(a: u64, b: u64) -> Vec<Partition> {
    assert!(num_integer::gcd(a, b) == 1, "a and b must be coprime");
    let max_size = (a * a - 1) * (b * b - 1) / 24;
    let mut out = Vec::new();
    for n in 0..=max_size {
        for p in partitions_of(n) {
            if p.is_core(a) && p.is_core(b) {
                out.push(p);
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::binom_i64;

    fn anderson_count(a: u64, b: u64) -> Int {
        binom_i64((a + b) as i64, a as i64) / Int::from(a + b)
    }

    fn johnson_average(a: u64, b: u64) -> Rat {
        rat(
            ((a + b + 1) * (a - 1) * (b - 1)) as i64,
            24,
        )
    }

    #[test]
    fn bruteforce_matches_known_small_sets() {
        let cores = cores_bruteforce(3, 4);
        let mut sizes: Vec<u64> = cores.iter().map(|p| p.size()).collect();
        sizes.sort_unstable();
        assert_eq!(sizes, vec![0, 1, 2, 2, 5]);
        assert_eq!(cores_bruteforce(2, 3).len(), 2);
        assert_eq!(cores_bruteforce(2, 5).len(), 3);
    }

    #[test]
    fn polytope_count_matches_bruteforce() {
        let cfg = EnumConfig::default();
        for (a, b) in [(2, 3), (3, 4), (4, 5), (3, 5), (2, 7)] {
            let h = core_polytope(a, b).unwrap();
            let (p, _) = standardize_with(&h, FreeVarStrategy::TranslateOnly).unwrap();
            let count = count(&p, &cfg).unwrap().count;
            let expect = Int::from(cores_bruteforce(a, b).len() as u64);
            assert_eq!(count, expect, "({a},{b})");
            assert_eq!(count, anderson_count(a, b), "({a},{b}) vs closed form");
        }
    }

    #[test]
    fn weighted_statistics_match_bruteforce() {
        let cfg = EnumConfig::default();
        for (a, b) in [(2, 3), (3, 4), (2, 5), (3, 5)] {
            let stats = core_statistics(a, b, &cfg).unwrap();
            let cores = cores_bruteforce(a, b);
            let total: u64 = cores.iter().map(|p| p.size()).sum();
            assert_eq!(stats.count, Int::from(cores.len() as u64), "({a},{b})");
            assert_eq!(stats.total_size, Int::from(total), "({a},{b})");
            assert_eq!(stats.average, johnson_average(a, b), "({a},{b})");
        }
    }

    #[test]
    fn triangular_numbers_for_two_cores() {
        // The 2-cores are the staircases with triangular sizes; the
        // staircase (k, .., 1) survives the 9-core condition only while its
        // largest hook 2k - 1 stays below 9.
        let cores = cores_bruteforce(2, 9);
        let mut sizes: Vec<u64> = cores.iter().map(|p| p.size()).collect();
        sizes.sort_unstable();
        assert_eq!(sizes, vec![0, 1, 3, 6, 10]);
    }

    #[test]
    fn weight_polynomial_is_integer_on_lattice_points() {
        // h_a(c) at c = (1, -1, 0): (3/2)(1 + 1) + (0*1 + 1*(-1)) = 2.
        let w = core_size_weight(3);
        assert_eq!(
            w.eval_int(&[int(1), int(-1), int(0)]),
            rat_int(&int(2))
        );
        // c = (-1, 0, 1): (3/2)(2) + (0 - 0 + 2) = 5.
        assert_eq!(
            w.eval_int(&[int(-1), int(0), int(1)]),
            rat_int(&int(5))
        );
    }
}
