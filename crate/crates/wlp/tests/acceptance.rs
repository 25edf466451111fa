//! Acceptance gate: twelve end-to-end checks, one per load-bearing guarantee
//! of the crate. Each check prints a single `ACCEPTANCE [..] ... PASS|FAIL`
//! line (visible under `cargo test --test acceptance -- --nocapture`) and
//! fails the build when its guarantee breaks.
//!
//! Randomized suites use a fixed-seed generator so failures reproduce.

use std::collections::HashMap;
use std::panic::{catch_unwind, resume_unwind, AssertUnwindSafe};
use std::process::Command;
use std::time::Instant;

use wlp::arith::{binom_i64, binomial, int, rat, Int, Rat};
use wlp::calculus::{dirichlet_simplex_integral, integrate, maximize, MaxOptions};
use wlp::counter::{count, enumerate, EnumConfig};
use wlp::ehrhart::EhrhartOptions;
use wlp::gallery::{
    compositions, core_statistics, cores_bruteforce, lr_bruteforce, lr_coefficient,
    lr_identity_check, newell_littlewood, partitions_of, rsk_check, semigroup_series,
    semigroups_bruteforce, SemigroupRoute,
};
use wlp::io::{semigroup_series_csv, SEMIGROUP_CSV_HEADER};
use wlp::lifting::{
    compile_polynomial, lift, weight_eval, weighted_sum, weighted_sum_bruteforce, Basis,
    ParametricFamily, WeightExpr,
};
use wlp::linalg::IntMat;
use wlp::poly::Polynomial;
use wlp::polytope::StandardPolytope;

fn check(id: u32, name: &str, body: impl FnOnce()) {
    let start = Instant::now();
    match catch_unwind(AssertUnwindSafe(body)) {
        Ok(()) => println!(
            "ACCEPTANCE [{id:02}] {name}: PASS ({:.1}s)",
            start.elapsed().as_secs_f64()
        ),
        Err(payload) => {
            println!("ACCEPTANCE [{id:02}] {name}: FAIL");
            resume_unwind(payload);
        }
    }
}

/// Small deterministic generator (PCG-style multiplier) for the random
/// suites; the seed is part of the test, so failures replay exactly.
struct Lcg(u64);

impl Lcg {
    fn next(&mut self) -> u64 {
        self.0 = self
            .0
            .wrapping_mul(6364136223846793005)
            .wrapping_add(1442695040888963407);
        self.0 >> 33
    }

    fn below(&mut self, n: u64) -> u64 {
        self.next() % n
    }

    fn range(&mut self, lo: i64, hi: i64) -> i64 {
        lo + self.below((hi - lo + 1) as u64) as i64
    }
}

/// A bounded random polytope in standard form: the first row has strictly
/// positive coefficients, so every coordinate is bounded; an optional second
/// row cuts further (possibly to emptiness, which the suites tolerate).
fn random_polytope(rng: &mut Lcg, max_n: usize, max_b: i64) -> StandardPolytope {
    let n = 1 + rng.below(max_n as u64) as usize;
    let mut rows = vec![(0..n).map(|_| rng.range(1, 3)).collect::<Vec<_>>()];
    let mut b = vec![rng.range(0, max_b)];
    if rng.below(2) == 0 {
        rows.push((0..n).map(|_| rng.range(0, 2)).collect());
        b.push(rng.range(0, max_b));
    }
    StandardPolytope::new(
        IntMat::from_rows(&rows),
        b.into_iter().map(Int::from).collect(),
    )
}

/// A random counting family whose fibers are always bounded: the first row of
/// `C` is strictly positive, so `y` is boxed whatever `x` is. Fibers may be
/// empty (weight zero), which is part of what the suites exercise.
fn random_family(rng: &mut Lcg, n: usize, max_m: usize) -> ParametricFamily {
    let m = 1 + rng.below(max_m as u64) as usize;
    let q = 1 + rng.below(2) as usize;
    let mut c_rows = vec![(0..m).map(|_| rng.range(1, 2)).collect::<Vec<_>>()];
    let mut d_rows = vec![(0..n).map(|_| rng.range(-1, 1)).collect::<Vec<_>>()];
    let mut e = vec![rng.range(-2, 2)];
    for _ in 1..q {
        c_rows.push((0..m).map(|_| rng.range(0, 2)).collect());
        d_rows.push((0..n).map(|_| rng.range(-1, 1)).collect());
        e.push(rng.range(-1, 2));
    }
    ParametricFamily::new(
        IntMat::from_rows(&c_rows),
        IntMat::from_rows(&d_rows),
        e.into_iter().map(Int::from).collect(),
    )
    .unwrap()
}

/// A random polynomial with a few terms of bounded total degree and small
/// rational coefficients.
fn random_poly(rng: &mut Lcg, n: usize, max_total_deg: u64, max_terms: u64) -> Polynomial {
    let mut f = Polynomial::zero(n);
    for _ in 0..1 + rng.below(max_terms) {
        let mut exps = vec![0u32; n];
        for _ in 0..rng.below(max_total_deg + 1) {
            exps[rng.below(n as u64) as usize] += 1;
        }
        let c = rat(rng.range(-3, 3), rng.range(1, 2));
        f = &f + &Polynomial::monomial(exps, c);
    }
    f
}

fn abs_rat(x: &Rat) -> Rat {
    if *x < rat(0, 1) {
        -x.clone()
    } else {
        x.clone()
    }
}

fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

#[test]
fn criterion_01_lifting_equivalence() {
    check(1, "lifted counts equal brute-force weighted sums", || {
        let cfg = EnumConfig::default();
        let mut rng = Lcg(0x01);
        for case in 0..200u32 {
            let p = random_polytope(&mut rng, 4, 4);
            let fam = random_family(&mut rng, p.n(), 4);
            let t = int(rng.range(0, 5));
            let w = WeightExpr::from_family(fam, 1);
            let lifted = weighted_sum(&p, &w, &t, &cfg).unwrap();
            let direct = weighted_sum_bruteforce(&p, &w, &t, &cfg).unwrap();
            assert_eq!(lifted, direct, "case {case} at t = {t}");
        }
    });
}

#[test]
fn criterion_02_fiber_structure() {
    check(2, "lift fibers over each point match its weight", || {
        let cfg = EnumConfig::default();
        let mut rng = Lcg(0x02);
        for case in 0..50u32 {
            let p = random_polytope(&mut rng, 4, 4);
            let fam = random_family(&mut rng, p.n(), 4);
            let lifted = lift(&p, &fam).unwrap();
            let mut fibers: HashMap<Vec<Int>, u64> = HashMap::new();
            for q in enumerate(&lifted.base).unwrap() {
                *fibers.entry(lifted.project(&q)).or_insert(0) += 1;
            }
            let points = enumerate(&p).unwrap();
            let mut covered = 0usize;
            for x in &points {
                let w = weight_eval(&fam, x, &cfg).unwrap();
                let f = fibers.get(x.as_slice()).copied().unwrap_or(0);
                assert_eq!(w, int(f as i64), "case {case}, point {x:?}");
                if f > 0 {
                    covered += 1;
                }
            }
            // Every fiber class sits over a point of P: no strays.
            assert_eq!(covered, fibers.len(), "case {case}: stray fibers");
        }
    });
}

#[test]
fn criterion_03_ehrhart_identities() {
    check(3, "simplex and cube Ehrhart counts hit closed forms", || {
        let cfg = EnumConfig::default();
        for m in 1..=5usize {
            let p = StandardPolytope::standard_simplex(m - 1);
            for t in 0..=10i64 {
                let got = count(&p.dilate(&int(t)), &cfg).unwrap().count;
                let want = binom_i64(t + m as i64 - 1, m as i64 - 1);
                assert_eq!(got, want, "simplex m = {m}, t = {t}");
            }
        }
        for d in 1..=4usize {
            let p = StandardPolytope::unit_cube(d);
            for t in 0..=10i64 {
                let got = count(&p.dilate(&int(t)), &cfg).unwrap().count;
                let mut want = int(1);
                for _ in 0..d {
                    want *= int(t + 1);
                }
                assert_eq!(got, want, "cube d = {d}, t = {t}");
            }
        }
    });
}

#[test]
fn criterion_04_integration() {
    check(4, "integrals match the Dirichlet oracle; bases agree; linear", || {
        let cfg = EnumConfig::default();
        let eo = EhrhartOptions::default();

        // Every monomial of total degree <= 4 over every simplex up to dim 4.
        for n in 1..=4usize {
            let p = StandardPolytope::standard_simplex(n);
            for s in 0..=4u64 {
                for alpha in compositions(s, n) {
                    let mut exps: Vec<u32> = alpha.iter().map(|&a| a as u32).collect();
                    exps.push(0); // slack column carries no weight
                    let f = Polynomial::monomial(exps, rat(1, 1));
                    let got = integrate(&p, &f, &eo).unwrap();
                    let want = dirichlet_simplex_integral(&alpha);
                    assert_eq!(got, want, "n = {n}, alpha = {alpha:?}");
                }
            }
        }

        // The three weight compilations agree with each other and with the
        // polynomial, pointwise and in weighted sums.
        let bases = [Basis::CubeMonomial, Basis::RisingBinomial, Basis::FallingBinomial];
        let mut rng = Lcg(0x04);
        for case in 0..20u32 {
            let n = 1 + rng.below(3) as usize;
            let f = random_poly(&mut rng, n, 3, 3);
            let compiled: Vec<WeightExpr> =
                bases.iter().map(|&b| compile_polynomial(&f, b)).collect();
            for _ in 0..4 {
                let x: Vec<Int> = (0..n).map(|_| int(rng.range(0, 4))).collect();
                let direct = f.eval_int(&x);
                for (w, b) in compiled.iter().zip(bases) {
                    assert_eq!(w.eval(&x, &cfg).unwrap(), direct, "case {case} {b:?} at {x:?}");
                }
            }
            let p = StandardPolytope::standard_simplex(n - 1);
            let sums: Vec<Rat> = compiled
                .iter()
                .map(|w| weighted_sum(&p, w, &int(3), &cfg).unwrap())
                .collect();
            assert!(sums.windows(2).all(|s| s[0] == s[1]), "case {case}: {sums:?}");
        }

        // Linearity of the integral on 50 random instances.
        let mut rng = Lcg(0x44);
        for case in 0..50u32 {
            let p = if rng.below(2) == 0 {
                StandardPolytope::standard_simplex(1 + rng.below(3) as usize)
            } else {
                StandardPolytope::unit_cube(1 + rng.below(2) as usize)
            };
            let f = random_poly(&mut rng, p.n(), 2, 2);
            let g = random_poly(&mut rng, p.n(), 2, 2);
            let a = rat(rng.range(-3, 3), rng.range(1, 2));
            let b = rat(rng.range(-3, 3), rng.range(1, 2));
            let combo = &f.scale(&a) + &g.scale(&b);
            let lhs = integrate(&p, &combo, &eo).unwrap();
            let rhs = a * integrate(&p, &f, &eo).unwrap() + b * integrate(&p, &g, &eo).unwrap();
            assert_eq!(lhs, rhs, "case {case}");
        }
    });
}

#[test]
fn criterion_05_maximization() {
    check(5, "power-sum maxima match brute force with closed sandwiches", || {
        let cfg = EnumConfig::default();
        let opts = MaxOptions::default();
        let mut rng = Lcg(0x05);
        let mut done = 0u32;
        let mut attempts = 0u32;
        while done < 50 {
            attempts += 1;
            assert!(attempts < 2000, "generator starved");
            let p = random_polytope(&mut rng, 3, 5);
            let n_points = count(&p, &cfg).unwrap().count;
            if n_points == int(0) {
                continue;
            }
            let fam = random_family(&mut rng, p.n(), 2);
            let cert = maximize(&p, &fam, &opts).unwrap();
            let best = enumerate(&p)
                .unwrap()
                .iter()
                .map(|x| weight_eval(&fam, x, &cfg).unwrap())
                .max()
                .unwrap();
            assert_eq!(cert.maximum, best, "instance {done}");
            assert_eq!(cert.n_points, n_points, "instance {done}");
            assert!(!cert.steps.is_empty());
            let mut prev_k = 0u32;
            for step in &cert.steps {
                assert!(step.k > prev_k, "instance {done}: k not increasing");
                prev_k = step.k;
                assert!(
                    step.lower <= cert.maximum && cert.maximum <= step.upper,
                    "instance {done}: step k = {} does not sandwich",
                    step.k
                );
            }
            let last = cert.steps.last().unwrap();
            assert_eq!(last.lower, last.upper, "instance {done}: sandwich open");
            assert_eq!(last.k, cert.k_reached);
            done += 1;
        }
    });
}

#[test]
fn criterion_06_core_counts() {
    check(6, "simultaneous core counts hit the Catalan-type formula", || {
        let cfg = EnumConfig::default();
        // The polytope model needs a >= 2; for a = 1 the only core is empty.
        for a in 2..=6u64 {
            for b in (a + 1)..=(12 - a) {
                if gcd(a, b) != 1 {
                    continue;
                }
                let stats = core_statistics(a, b, &cfg).unwrap();
                let want = binomial(&int((a + b) as i64), &int(a as i64)) / int((a + b) as i64);
                assert_eq!(stats.count, want, "({a},{b})");
                let brute = cores_bruteforce(a, b);
                assert_eq!(stats.count, int(brute.len() as i64), "({a},{b}) vs brute force");
            }
        }
        let spot = [((2u64, 3u64), 2i64), ((3, 4), 5), ((3, 5), 7), ((4, 5), 14)];
        for ((a, b), n) in spot {
            assert_eq!(core_statistics(a, b, &cfg).unwrap().count, int(n));
        }
    });
}

#[test]
fn criterion_07_core_averages() {
    check(7, "average core sizes hit the closed form", || {
        let cfg = EnumConfig::default();
        for a in 2..=6u64 {
            for b in (a + 1)..=(12 - a) {
                if gcd(a, b) != 1 {
                    continue;
                }
                let stats = core_statistics(a, b, &cfg).unwrap();
                let want = rat(((a + b + 1) * (a - 1) * (b - 1)) as i64, 24);
                assert_eq!(stats.average, want, "({a},{b})");
                let brute = cores_bruteforce(a, b);
                let total: Int = brute.iter().fold(int(0), |acc, p| acc + int(p.size() as i64));
                assert_eq!(stats.total_size, total, "({a},{b}) vs brute force");
            }
        }
        let spot = [((2u64, 3u64), rat(1, 2)), ((3, 4), rat(2, 1)), ((3, 5), rat(3, 1)), ((4, 5), rat(5, 1))];
        for ((a, b), avg) in spot {
            assert_eq!(core_statistics(a, b, &cfg).unwrap().average, avg);
        }
    });
}

#[test]
fn criterion_08_semigroup_counts_and_weights() {
    check(8, "Kunz counts and weights match gap-set enumeration", || {
        let cfg = EnumConfig::default();
        let by_genus: Vec<Vec<_>> = (0..=12u64).map(semigroups_bruteforce).collect();
        for m in 2..=6u64 {
            let rows = semigroup_series(m, 12, SemigroupRoute::Direct, &cfg).unwrap();
            assert_eq!(rows.len(), 12);
            for row in &rows {
                let wanted: Vec<_> = by_genus[row.g as usize]
                    .iter()
                    .filter(|s| s.contains(m))
                    .collect();
                assert_eq!(row.count, int(wanted.len() as i64), "m = {m}, g = {}", row.g);
                let total = wanted.iter().fold(int(0), |acc, s| acc + s.weight());
                assert_eq!(row.total_weight, total, "m = {m}, g = {}", row.g);
            }
        }
        // Both counting routes tell the same story.
        for m in 3..=4u64 {
            let direct = semigroup_series(m, 8, SemigroupRoute::Direct, &cfg).unwrap();
            let lifted = semigroup_series(m, 8, SemigroupRoute::Lifted, &cfg).unwrap();
            assert_eq!(direct, lifted, "m = {m}");
        }
        // Weight bound: w(S) <= g(g-1)/2 with equality exactly when 2 in S.
        for (g, sgs) in by_genus.iter().enumerate().skip(1) {
            let cap = int((g * (g - 1) / 2) as i64);
            for s in sgs {
                let w = s.weight();
                assert!(w <= cap, "genus {g}: weight above cap");
                assert_eq!(w == cap, s.contains(2), "genus {g}: cap equality");
            }
        }
    });
}

#[test]
fn criterion_09_semigroup_average_trend() {
    check(9, "average weight over g^2 trends to 5/18", || {
        let cfg = EnumConfig::default();
        for m in 3..=6u64 {
            let rows = semigroup_series(m, 60, SemigroupRoute::Direct, &cfg).unwrap();
            assert_eq!(rows.len(), 60);
            assert!(rows.iter().all(|r| r.average_over_g2.is_some()), "m = {m}");
        }
        let rows = semigroup_series(3, 200, SemigroupRoute::Direct, &cfg).unwrap();
        assert_eq!(rows.len(), 200);
        let csv = semigroup_series_csv(&rows);
        let mut lines = csv.lines();
        assert_eq!(lines.next(), Some(SEMIGROUP_CSV_HEADER));
        assert_eq!(lines.count(), 200);
        let limit = rat(5, 18);
        let at = |g: usize| rows[g - 1].average_over_g2.clone().unwrap();
        let err200 = abs_rat(&(at(200) - &limit));
        let err100 = abs_rat(&(at(100) - &limit));
        assert!(err200 < rat(1, 100), "still {err200} away at g = 200");
        assert!(err200 <= err100, "not tightening: {err100} -> {err200}");
    });
}

#[test]
fn criterion_10_rsk_margins() {
    check(10, "contingency counts equal Kostka convolutions, lifted too", || {
        let cfg = EnumConfig::default();
        for n in 0..=5u64 {
            for mu in partitions_of(n) {
                for nu in partitions_of(n) {
                    let rep = rsk_check(&mu, &nu, &cfg).unwrap();
                    assert_eq!(rep.lhs, rep.rhs, "mu = {mu:?}, nu = {nu:?}");
                    assert_eq!(rep.lhs, rep.lifted, "mu = {mu:?}, nu = {nu:?}");
                }
            }
        }
    });
}

#[test]
fn criterion_11_littlewood_richardson() {
    check(11, "hive counts, skew identity, Newell-Littlewood parity", || {
        let cfg = EnumConfig::default();
        for k in 0..=5u64 {
            for lambda in partitions_of(k) {
                for j in 0..=k {
                    for mu in partitions_of(j) {
                        for nu in partitions_of(k - j) {
                            let got = lr_coefficient(&lambda, &mu, &nu, &cfg).unwrap();
                            let want = lr_bruteforce(&lambda, &mu, &nu);
                            assert_eq!(got, want, "{lambda:?} / {mu:?} * {nu:?}");
                        }
                    }
                }
            }
        }
        for k in 1..=5u64 {
            for lambda in partitions_of(k) {
                for j in 0..k {
                    for mu in partitions_of(j) {
                        if !mu.contained_in(&lambda) {
                            continue;
                        }
                        for alpha in compositions(k - j, 3.min((k - j) as usize)) {
                            let rep = lr_identity_check(&lambda, &mu, &alpha, &cfg).unwrap();
                            assert_eq!(rep.lhs, rep.rhs, "{lambda:?}/{mu:?}, {alpha:?}");
                            assert_eq!(rep.lhs, rep.lifted, "{lambda:?}/{mu:?}, {alpha:?}");
                        }
                    }
                }
            }
        }
        for a in 0..=3u64 {
            for b in 0..=3u64 {
                for c in 0..=3u64 {
                    if (a + b + c) % 2 == 0 {
                        continue;
                    }
                    for mu in partitions_of(a) {
                        for nu in partitions_of(b) {
                            for lambda in partitions_of(c) {
                                let n = newell_littlewood(&mu, &nu, &lambda, &cfg).unwrap();
                                assert_eq!(n, int(0), "{mu:?}, {nu:?}, {lambda:?}");
                            }
                        }
                    }
                }
            }
        }
    });
}

#[test]
fn criterion_12_bench_oracle_gate() {
    check(12, "bench grid verifies every integral before timing", || {
        let bin = env!("CARGO_BIN_EXE_wlp");
        let grid = |args: &[&str]| {
            let out = Command::new(bin).args(args).output().unwrap();
            assert_eq!(out.status.code(), Some(0), "bench exited nonzero: {out:?}");
            let text = String::from_utf8(out.stdout).unwrap();
            let mut rows: Vec<Vec<String>> = text
                .lines()
                .map(|l| l.split(',').map(str::to_string).collect())
                .collect();
            let header = rows.remove(0);
            (header, rows)
        };

        let (header, rows) = grid(&["bench", "--dims", "1,2,3,4", "--degrees", "0,1,2,3"]);
        assert_eq!(header, vec!["degree\\dim", "1", "2", "3", "4"]);
        assert_eq!(rows.len(), 4);
        for row in &rows {
            assert_eq!(row.len(), 5);
            for cell in &row[1..] {
                assert!(cell.parse::<f64>().is_ok(), "cell {cell:?} not a timing");
            }
        }

        let (_, rows) = grid(&[
            "bench", "--dims", "1,2", "--degrees", "1,2", "--weight-kind", "linear-power",
        ]);
        assert!(rows
            .iter()
            .all(|r| r[1..].iter().all(|c| c.parse::<f64>().is_ok())));

        // With a starved node budget every cell degrades to "-" and the grid
        // still comes back cleanly.
        let (_, rows) = grid(&["bench", "--dims", "2", "--degrees", "2", "--budget", "4"]);
        assert_eq!(rows.len(), 1);
        assert_eq!(rows[0][1], "-");
    });
}
