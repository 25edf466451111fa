//! Numerical semigroups through Kunz coordinates.
//!
//! A numerical semigroup containing `m` is determined by its Kunz
//! coordinates `k_1 .. k_{m-1}`, where `k_i * m + i` is the smallest element
//! congruent to `i` mod `m`. The admissible coordinate vectors are exactly
//! the nonnegative integer points of a polyhedron cut out by the additive
//! closure conditions, genus-`g` semigroups being the slice `sum k_i = g`.
//! The weight statistic is a quadratic polynomial in the coordinates, so
//! counts and weight totals per genus come from (weighted) lattice counts.

use crate::arith::{int, rat, rat_int, Int, Rat};
use crate::counter::{count, for_each_point, EnumConfig};
use crate::error::Result;
use crate::lifting::{compile_polynomial, weighted_sum, Basis};
use crate::linalg::IntMat;
use crate::poly::Polynomial;
use crate::polytope::StandardPolytope;
use num_traits::Zero;

/// A concrete numerical semigroup, stored as a membership table out to a
/// window that covers everything past the Frobenius number.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Semigroup {
    member: Vec<bool>,
    frobenius: i64,
    genus: u64,
}

impl Semigroup {
    /// The full semigroup of all nonnegative integers, with room to remove
    /// generators down to genus `g_max`.
    fn natural(g_max: u64) -> Self {
        let window = (2 * g_max + 2) as usize;
        Semigroup {
            member: vec![true; window],
            frobenius: -1,
            genus: 0,
        }
    }

    pub fn genus(&self) -> u64 {
        self.genus
    }

    pub fn frobenius(&self) -> i64 {
        self.frobenius
    }

    pub fn contains(&self, x: u64) -> bool {
        match self.member.get(x as usize) {
            Some(&m) => m,
            // The window always covers the Frobenius number.
            None => true,
        }
    }

    /// The gaps, in increasing order.
    pub fn gaps(&self) -> Vec<u64> {
        (0..self.member.len())
            .filter(|&x| !self.member[x])
            .map(|x| x as u64)
            .collect()
    }

    /// Smallest nonzero element.
    pub fn multiplicity(&self) -> u64 {
        (1..self.member.len())
            .find(|&x| self.member[x])
            .expect("window always contains elements") as u64
    }

    /// Sum of gaps minus the staircase sum `g(g+1)/2`: how far the gap set
    /// sits above the minimal configuration `1..g`.
    pub fn weight(&self) -> Int {
        let s: u64 = self.gaps().iter().sum();
        Int::from(s) - Int::from(self.genus * (self.genus + 1) / 2)
    }

    /// Kunz coordinates with respect to `m`, when `m` is an element.
    pub fn kunz_coordinates(&self, m: u64) -> Option<Vec<u64>> {
        if !self.contains(m) || m == 0 {
            return None;
        }
        let mut coords = Vec::with_capacity(m as usize - 1);
        for i in 1..m {
            let mut j = i;
            while !(j as i64 > self.frobenius || self.member[j as usize]) {
                j += m;
            }
            coords.push((j - i) / m);
        }
        Some(coords)
    }

    fn is_minimal_generator(&self, x: usize) -> bool {
        if x == 0 || !self.member[x] {
            return false;
        }
        !(1..=x / 2).any(|s| self.member[s] && self.member[x - s])
    }
}

/// All numerical semigroups of genus exactly `g`, by walking the semigroup
/// tree: children remove one minimal generator larger than the Frobenius
/// number, so every semigroup appears exactly once.
pub fn semigroups_bruteforce(g: u64) -> Vec<Semigroup> {
    let mut out = Vec::new();
    let mut root = Semigroup::natural(g);
    fn walk(s: &mut Semigroup, target: u64, out: &mut Vec<Semigroup>) {
        if s.genus == target {
            out.push(s.clone());
            return;
        }
        let window = s.member.len();
        let lo = (s.frobenius + 1).max(1) as usize;
        for x in lo..window {
            if s.is_minimal_generator(x) {
                let old_frob = s.frobenius;
                s.member[x] = false;
                s.frobenius = x as i64;
                s.genus += 1;
                walk(s, target, out);
                s.genus -= 1;
                s.frobenius = old_frob;
                s.member[x] = true;
            }
        }
    }
    walk(&mut root, g, &mut out);
    out
}

/// The Kunz polytope slice for semigroups containing `m` with genus `g`, in
/// standard form. The first `m - 1` columns are the Kunz coordinates; the
/// remaining columns are slacks for the closure conditions
/// `k_i + k_j >= k_{i+j}` (indices mod `m`, with `+1` on wrapped rows).
pub fn kunz_polytope(m: u64, g: u64) -> StandardPolytope {
    assert!(m >= 2, "need m >= 2");
    let n = (m - 1) as usize;
    let mut rows: Vec<Vec<Int>> = Vec::new();
    let mut rhs: Vec<Int> = Vec::new();
    let mut slacks = 0usize;
    for i in 1..m {
        for j in i..m {
            if i + j == m {
                continue;
            }
            let mut row = vec![int(0); n];
            row[(i - 1) as usize] += 1;
            row[(j - 1) as usize] += 1;
            if i + j < m {
                row[(i + j - 1) as usize] -= 1;
                rhs.push(int(0));
            } else {
                row[(i + j - m - 1) as usize] -= 1;
                rhs.push(int(-1));
            }
            rows.push(row);
            slacks += 1;
        }
    }
    // Genus slice.
    let mut sum_row = vec![int(1); n];
    sum_row.extend(std::iter::repeat_n(int(0), slacks));
    for (r, row) in rows.iter_mut().enumerate() {
        for s in 0..slacks {
            row.push(if s == r { int(-1) } else { int(0) });
        }
    }
    rows.push(sum_row);
    rhs.push(Int::from(g));
    StandardPolytope::new(IntMat::from_int_rows(rows), rhs)
}

/// The weight statistic as a polynomial in the Kunz coordinates (the first
/// `m - 1` of `arity` variables):
/// `(m/2) sum k_i (k_i - 1) + sum i k_i - (1/2) (sum k_i)(1 + sum k_i)`.
pub fn semigroup_weight_poly(m: u64, arity: usize) -> Polynomial {
    let n = (m - 1) as usize;
    assert!(arity >= n);
    let zero = Polynomial::constant(rat(0, 1), arity);
    let mut quad = zero.clone();
    let mut lin = zero.clone();
    let mut total = zero.clone();
    for i in 1..=n {
        let v = Polynomial::var(i - 1, arity);
        quad = &quad + &(&(&v * &v) - &v);
        lin = &lin + &v.scale(&rat_int(&int(i as i64)));
        total = &total + &v;
    }
    let half_m = rat(m as i64, 2);
    let mut w = &quad.scale(&half_m) + &lin;
    let staircase = &total + &(&total * &total);
    w = &w - &staircase.scale(&rat(1, 2));
    w
}

/// Which counting route the per-genus series should take.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SemigroupRoute {
    /// Enumerate Kunz points and evaluate the weight directly.
    Direct,
    /// Compile the weight into lifting families and count lifted polytopes.
    Lifted,
}

/// One genus row of the semigroup series.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SemigroupSeriesRow {
    pub m: u64,
    pub g: u64,
    pub count: Int,
    pub total_weight: Int,
    pub average: Option<Rat>,
    pub average_over_g2: Option<Rat>,
}

/// Count and total-weight series for semigroups containing `m`, for each
/// genus `1 ..= g_max`.
pub fn semigroup_series(
    m: u64,
    g_max: u64,
    route: SemigroupRoute,
    cfg: &EnumConfig,
) -> Result<Vec<SemigroupSeriesRow>> {
    let mut out = Vec::with_capacity(g_max as usize);
    for g in 1..=g_max {
        let (n, w) = genus_row(m, g, route, cfg)?;
        let average = if n.is_zero() {
            None
        } else {
            Some(Rat::new(w.clone(), n.clone()))
        };
        let average_over_g2 = average
            .clone()
            .map(|a| a / rat_int(&Int::from(g * g)));
        out.push(SemigroupSeriesRow {
            m,
            g,
            count: n,
            total_weight: w,
            average,
            average_over_g2,
        });
    }
    Ok(out)
}

fn genus_row(m: u64, g: u64, route: SemigroupRoute, cfg: &EnumConfig) -> Result<(Int, Int)> {
    let p = kunz_polytope(m, g);
    match route {
        SemigroupRoute::Direct => {
            let w = semigroup_weight_poly(m, p.n());
            let mut total = rat(0, 1);
            let res = for_each_point(&p, cfg, |x| {
                total += w.eval_int(x);
            })?;
            debug_assert!(total.is_integer());
            Ok((res.count, total.to_integer()))
        }
        SemigroupRoute::Lifted => {
            let n = count(&p, cfg)?.count;
            let w = semigroup_weight_poly(m, p.n());
            let expr = compile_polynomial(&w, Basis::CubeMonomial);
            let total = weighted_sum(&p, &expr, &int(1), cfg)?;
            debug_assert!(total.is_integer());
            Ok((n, total.to_integer()))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::BTreeSet;

    #[test]
    fn tree_counts_match_the_genus_sequence() {
        // Numbers of numerical semigroups by genus.
        let expect = [1u64, 1, 2, 4, 7, 12, 23, 39, 67, 118, 204, 343, 592];
        for (g, &e) in expect.iter().enumerate() {
            assert_eq!(
                semigroups_bruteforce(g as u64).len() as u64,
                e,
                "genus {g}"
            );
        }
    }

    #[test]
    fn gap_weights_match_the_definition() {
        // <3,5,7> has gaps {1,2,4}: weight 7 - 6 = 1.
        let all = semigroups_bruteforce(3);
        let s = all
            .iter()
            .find(|s| s.gaps() == vec![1, 2, 4])
            .expect("semigroup <3,5,7>");
        assert_eq!(s.weight(), int(1));
        assert_eq!(s.multiplicity(), 3);
        assert_eq!(s.frobenius(), 4);
        // <3,4> has gaps {1,2,5}: weight 8 - 6 = 2.
        let s = all
            .iter()
            .find(|s| s.gaps() == vec![1, 2, 5])
            .expect("semigroup <3,4>");
        assert_eq!(s.weight(), int(2));
    }

    #[test]
    fn kunz_coordinates_recover_the_weight_polynomial() {
        for g in 0..=7u64 {
            for s in semigroups_bruteforce(g) {
                for m in 2..=6u64 {
                    let Some(k) = s.kunz_coordinates(m) else {
                        continue;
                    };
                    assert_eq!(k.iter().sum::<u64>(), g, "genus from coordinates");
                    let w = semigroup_weight_poly(m, (m - 1) as usize);
                    let kx: Vec<Int> = k.iter().map(|&v| Int::from(v)).collect();
                    assert_eq!(
                        w.eval_int(&kx),
                        rat_int(&s.weight()),
                        "m={m} gaps={:?}",
                        s.gaps()
                    );
                }
            }
        }
    }

    #[test]
    fn kunz_points_biject_with_semigroups() {
        let cfg = EnumConfig::default();
        for m in 2..=5u64 {
            for g in 0..=8u64 {
                let expect: BTreeSet<Vec<u64>> = semigroups_bruteforce(g)
                    .iter()
                    .filter_map(|s| s.kunz_coordinates(m))
                    .collect();
                let p = kunz_polytope(m, g);
                let pts = crate::counter::enumerate(&p).unwrap();
                let got: BTreeSet<Vec<u64>> = pts
                    .iter()
                    .map(|x| {
                        x[..(m - 1) as usize]
                            .iter()
                            .map(|v| u64::try_from(v).unwrap())
                            .collect()
                    })
                    .collect();
                assert_eq!(got.len(), pts.len(), "slack columns are determined");
                assert_eq!(got, expect, "m={m} g={g}");
                let _ = cfg;
            }
        }
    }

    #[test]
    fn direct_and_lifted_routes_agree() {
        let cfg = EnumConfig::default();
        for m in 2..=4u64 {
            let direct = semigroup_series(m, 6, SemigroupRoute::Direct, &cfg).unwrap();
            let lifted = semigroup_series(m, 6, SemigroupRoute::Lifted, &cfg).unwrap();
            assert_eq!(direct, lifted, "m={m}");
        }
    }

    #[test]
    fn series_matches_bruteforce_totals() {
        let cfg = EnumConfig::default();
        for m in 2..=6u64 {
            let series = semigroup_series(m, 8, SemigroupRoute::Direct, &cfg).unwrap();
            for row in &series {
                let all = semigroups_bruteforce(row.g);
                let filtered: Vec<&Semigroup> =
                    all.iter().filter(|s| s.contains(m)).collect();
                assert_eq!(
                    row.count,
                    Int::from(filtered.len() as u64),
                    "count m={m} g={}",
                    row.g
                );
                let total: Int = filtered.iter().map(|s| s.weight()).sum();
                assert_eq!(row.total_weight, total, "weight m={m} g={}", row.g);
            }
        }
    }

    #[test]
    fn maximum_weight_is_attained_exactly_by_halving_semigroups() {
        // w(S) <= g(g-1)/2, with equality exactly when 2 is an element.
        for g in 1..=9u64 {
            let bound = Int::from(g * (g - 1) / 2);
            for s in semigroups_bruteforce(g) {
                let w = s.weight();
                assert!(w <= bound, "gaps {:?}", s.gaps());
                assert_eq!(w == bound, s.contains(2), "gaps {:?}", s.gaps());
            }
        }
    }
}
