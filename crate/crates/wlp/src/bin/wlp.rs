//! Command-line front end: exact weighted lattice-point sums, Ehrhart
//! quasi-polynomials, polynomial integration, weight maximization, and the
//! combinatorial applications, over polytopes read from LattE-style or JSON
//! files.
//!
//! Exit codes: 0 on success, 1 on usage errors (bad flags, malformed files,
//! dimension mismatches), 2 on computation errors (budgets, unbounded
//! regions, certificates that fail to close).

use std::fmt::Write as _;
use std::path::PathBuf;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use wlp::arith::{Int, Rat};
use wlp::calculus::{
    dirichlet_simplex_integral, integrate, integrate_h, maximize_weight, MaxCertificate,
    MaxOptions,
};
use wlp::counter::{count, EnumConfig};
use wlp::ehrhart::{ehrhart_qp, weighted_ehrhart_qp, EhrhartOptions, PeriodStrategy};
use wlp::error::Error;
use wlp::gallery::{
    core_statistics, kostka, kostka_max, lr_coefficient, lr_identity_check, newell_littlewood,
    rsk_check, semigroup_series, Partition, SemigroupRoute,
};
use wlp::io::{
    int_value, polytope_to_json, qp_to_json, rat_decimal, rat_string, read_polytope, read_weight,
    semigroup_series_csv, PolytopeInput, WeightSpec,
};
use wlp::lifting::{lift, lift_dilated, Basis, WeightExpr};
use wlp::poly::Polynomial;
use wlp::polytope::{standardize, AffineChange, StandardPolytope, VarMap};

const DECIMAL_PLACES: u32 = 10;

#[derive(Parser)]
#[command(
    name = "wlp",
    version,
    about = "Exact weighted lattice-point sums via weight lifting polytopes"
)]
struct Cli {
    /// Worker threads for the documented parallel maps (1 = sequential).
    #[arg(long, global = true, default_value_t = 1)]
    jobs: usize,
    /// Node budget for every exact enumeration.
    #[arg(long, global = true, default_value_t = 2_000_000_000)]
    budget: u64,
    #[command(subcommand)]
    command: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Count lattice points of a polytope file.
    Count(CountArgs),
    /// Lift (P, w) to the weight lifting polytope and write it as JSON.
    Lift(LiftArgs),
    /// Ehrhart quasi-polynomial of a polytope, optionally weighted.
    Ehrhart(EhrhartArgs),
    /// Integrate a polynomial weight over a polytope.
    Integrate(IntegrateArgs),
    /// Maximize a counting weight over the lattice points of a polytope.
    Maximize(MaximizeArgs),
    /// Combinatorial applications.
    #[command(subcommand)]
    App(AppCmd),
    /// Benchmark grid of simplex integrals, every cell oracle-checked.
    Bench(BenchArgs),
}

#[derive(Args)]
struct CountArgs {
    /// Polytope file (LattE H-representation or JSON).
    polytope: PathBuf,
}

#[derive(Args)]
struct LiftArgs {
    /// Polytope file (LattE H-representation or JSON).
    polytope: PathBuf,
    /// Weight file (JSON; kind polynomial, family, or factors).
    weight: PathBuf,
    /// Late dilation: lift t*P while the weight dilates structurally.
    #[arg(long)]
    t: Option<i64>,
    /// Compilation basis for polynomial weights.
    #[arg(long, value_enum, default_value_t = BasisArg::Cube)]
    basis: BasisArg,
}

#[derive(Args)]
struct EhrhartArgs {
    /// Polytope file (LattE H-representation or JSON).
    polytope: PathBuf,
    /// Optional weight file; the result is then the weighted sum over t*P.
    #[arg(long)]
    weight: Option<PathBuf>,
    /// Use exactly this period instead of detecting one.
    #[arg(long)]
    period: Option<u32>,
    /// Compilation basis for polynomial weights.
    #[arg(long, value_enum, default_value_t = BasisArg::Cube)]
    basis: BasisArg,
}

#[derive(Args)]
struct IntegrateArgs {
    /// Polytope file (LattE H-representation or JSON).
    polytope: PathBuf,
    /// Weight file; must be of kind polynomial.
    weight: PathBuf,
}

#[derive(Args)]
struct MaximizeArgs {
    /// Polytope file (LattE H-representation or JSON).
    polytope: PathBuf,
    /// Weight file; must be a single counting family (kind family or
    /// factors, or a polynomial that compiles to one).
    weight: PathBuf,
    /// Compilation basis for polynomial weights.
    #[arg(long, value_enum, default_value_t = BasisArg::Cube)]
    basis: BasisArg,
    /// Cap on sandwich rounds.
    #[arg(long, default_value_t = 64)]
    kmax: u32,
}

#[derive(Subcommand)]
enum AppCmd {
    /// Simultaneous (a, b)-core partitions: count and average size.
    Cores {
        #[arg(long)]
        a: u64,
        #[arg(long)]
        b: u64,
    },
    /// Numerical semigroups containing m: count/weight series over genus.
    Semigroups {
        #[arg(long)]
        m: u64,
        #[arg(long)]
        gmax: u64,
        /// direct: enumerate Kunz points and evaluate the weight;
        /// lifted: one unweighted count per genus through weight lifting.
        #[arg(long, value_enum, default_value_t = RouteArg::Direct)]
        route: RouteArg,
        /// Emit the plot-ready CSV series instead of JSON.
        #[arg(long)]
        csv: bool,
    },
    /// Kostka numbers via Gelfand-Tsetlin counts, or their maximum.
    Kostka {
        /// Partition lambda, weakly decreasing, e.g. 2,1.
        #[arg(long)]
        lambda: String,
        /// Content composition alpha, e.g. 1,1,1.
        #[arg(long, conflicts_with = "max_len", required_unless_present = "max_len")]
        alpha: Option<String>,
        /// Maximize K_{lambda,alpha} over compositions alpha of this length.
        #[arg(long)]
        max_len: Option<usize>,
    },
    /// RSK identity: sum of K_{lambda,mu} K_{lambda,nu} three ways.
    Rsk {
        #[arg(long)]
        mu: String,
        #[arg(long)]
        nu: String,
    },
    /// Littlewood-Richardson coefficient (with --nu) or the skew expansion
    /// identity (with --alpha).
    Lr {
        #[arg(long)]
        lambda: String,
        #[arg(long)]
        mu: String,
        #[arg(long, conflicts_with = "alpha", required_unless_present = "alpha")]
        nu: Option<String>,
        #[arg(long)]
        alpha: Option<String>,
    },
    /// Newell-Littlewood coefficient.
    Nl {
        #[arg(long)]
        mu: String,
        #[arg(long)]
        nu: String,
        #[arg(long)]
        lambda: String,
    },
}

#[derive(Args)]
struct BenchArgs {
    /// Simplex dimensions (columns), each at most 5.
    #[arg(long, default_value = "1,2,3,4")]
    dims: String,
    /// Weight degrees (rows), each at most 4.
    #[arg(long, default_value = "0,1,2,3")]
    degrees: String,
    #[arg(long, value_enum, default_value_t = WeightKind::Monomial)]
    weight_kind: WeightKind,
    /// Seed for the random linear forms of --weight-kind linear-power.
    #[arg(long, default_value_t = 7)]
    seed: u64,
}

#[derive(Clone, Copy, ValueEnum)]
enum BasisArg {
    Cube,
    Rising,
    Falling,
}

impl From<BasisArg> for Basis {
    fn from(b: BasisArg) -> Basis {
        match b {
            BasisArg::Cube => Basis::CubeMonomial,
            BasisArg::Rising => Basis::RisingBinomial,
            BasisArg::Falling => Basis::FallingBinomial,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum RouteArg {
    Direct,
    Lifted,
}

#[derive(Clone, Copy, ValueEnum)]
enum WeightKind {
    Monomial,
    LinearPower,
}

struct Failure {
    code: i32,
    message: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Failure {
        let code = match e {
            Error::BudgetExceeded(_)
            | Error::PeriodBudgetExceeded(_)
            | Error::Unbounded
            | Error::UnboundedCoordinate(_)
            | Error::MaxIterations { .. }
            | Error::PeriodSearchExhausted(_)
            | Error::InconsistentSamples { .. }
            | Error::ResidueDependentLeading
            | Error::EmptyPolytope
            | Error::NegativeRoot => 2,
            Error::DimensionMismatch(_)
            | Error::NonCountingWeight(_)
            | Error::InvalidInput(_)
            | Error::Parse { .. }
            | Error::Io(_) => 1,
        };
        Failure {
            code,
            message: e.to_string(),
        }
    }
}

fn main() {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            // help/version are successes; everything else is a usage error
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            std::process::exit(code);
        }
    };
    if let Err(f) = run(cli) {
        eprintln!("error: {}", f.message);
        std::process::exit(f.code);
    }
}

fn run(cli: Cli) -> Result<(), Failure> {
    if cli.jobs == 0 {
        return Err(Failure {
            code: 1,
            message: "--jobs must be at least 1".into(),
        });
    }
    if cli.jobs > 1 {
        let _ = rayon::ThreadPoolBuilder::new()
            .num_threads(cli.jobs)
            .build_global();
    }
    let cfg = EnumConfig {
        node_budget: cli.budget,
        parallel: cli.jobs > 1,
        ..EnumConfig::default()
    };
    match cli.command {
        Cmd::Count(a) => cmd_count(a, &cfg),
        Cmd::Lift(a) => cmd_lift(a, &cfg),
        Cmd::Ehrhart(a) => cmd_ehrhart(a, &cfg),
        Cmd::Integrate(a) => cmd_integrate(a, &cfg),
        Cmd::Maximize(a) => cmd_maximize(a, &cfg),
        Cmd::App(a) => cmd_app(a, &cfg),
        Cmd::Bench(a) => cmd_bench(a, &cfg),
    }
}

fn emit(v: Value) {
    println!("{}", serde_json::to_string_pretty(&v).expect("serializable"));
}

fn load(path: &PathBuf) -> Result<String, Failure> {
    std::fs::read_to_string(path).map_err(|e| Failure {
        code: 1,
        message: format!("{}: {e}", path.display()),
    })
}

/// Read a polytope file into standard form, remembering the coordinate
/// change when the input was an H-representation.
fn load_polytope(path: &PathBuf) -> Result<(StandardPolytope, Option<AffineChange>), Failure> {
    match read_polytope(&load(path)?)? {
        PolytopeInput::Standard(p) => Ok((p, None)),
        PolytopeInput::H(h) => {
            let (p, change) = standardize(&h)?;
            Ok((p, Some(change)))
        }
    }
}

/// Dilating the standardized system matches dilating the input exactly when
/// standardization never translated a coordinate (slack variables and sign
/// splits are linear, shifts are not).
fn require_dilation_safe(change: &Option<AffineChange>) -> Result<(), Failure> {
    let safe = change.as_ref().is_none_or(|c| {
        c.var_map.iter().all(|m| match m {
            VarMap::Shift { offset, .. } => offset == &Int::from(0u8),
            VarMap::Split { .. } => true,
        })
    });
    if safe {
        Ok(())
    } else {
        Err(Failure {
            code: 1,
            message: "input needs a coordinate translation during standardization; \
                      provide a standard-form polytope ({\"A\", \"b\"}) for this command"
                .into(),
        })
    }
}

/// Turn a parsed weight into a weight expression on the standard-form
/// coordinates of the polytope it will be paired with.
fn adapt_weight(
    spec: WeightSpec,
    change: &Option<AffineChange>,
    n_std: usize,
    basis: Basis,
) -> Result<WeightExpr, Failure> {
    match (spec, change) {
        (WeightSpec::Polynomial(p), Some(c)) => {
            check_arity(p.n_vars(), c.var_map.len(), "weight")?;
            Ok(wlp::lifting::compile_polynomial(&c.transform_polynomial(&p), basis))
        }
        (spec, Some(c)) => {
            let expr = spec.to_expr(basis)?;
            check_arity(expr.n, c.var_map.len(), "weight")?;
            require_dilation_safe(change)?;
            let fam = expr
                .as_single_family()
                .expect("family and factor specs are single counting families")
                .with_parameter_columns(&c.parameter_columns(), n_std);
            Ok(WeightExpr::from_family(fam, expr.degree_bound))
        }
        (spec, None) => {
            let expr = spec.to_expr(basis)?;
            check_arity(expr.n, n_std, "weight")?;
            Ok(expr)
        }
    }
}

fn check_arity(got: usize, want: usize, what: &str) -> Result<(), Failure> {
    if got == want {
        Ok(())
    } else {
        Err(Failure {
            code: 1,
            message: format!("{what} has {got} variables, polytope has {want}"),
        })
    }
}

fn cmd_count(args: CountArgs, cfg: &EnumConfig) -> Result<(), Failure> {
    let (p, _) = load_polytope(&args.polytope)?;
    let start = Instant::now();
    let res = count(&p, cfg)?;
    emit(json!({
        "count": int_value(&res.count),
        "nodes": res.nodes,
        "ms": start.elapsed().as_millis() as u64,
    }));
    Ok(())
}

fn cmd_lift(args: LiftArgs, _cfg: &EnumConfig) -> Result<(), Failure> {
    let (p, change) = load_polytope(&args.polytope)?;
    if change.is_some() {
        require_dilation_safe(&change)?;
    }
    let expr = adapt_weight(
        read_weight(&load(&args.weight)?)?,
        &change,
        p.n(),
        args.basis.into(),
    )?;
    let Some(fam) = expr.as_single_family() else {
        return Err(Failure {
            code: 1,
            message: "lift needs a single counting family; use a weight of kind \
                      family or factors (or a coefficient-1 monomial)"
                .into(),
        });
    };
    let lifted = match args.t {
        Some(t) => lift_dilated(&p, fam, &Int::from(t))?,
        None => lift(&p, fam)?,
    };
    let mut v = polytope_to_json(&lifted.base);
    v["n_vars"] = json!(lifted.n_vars);
    v["m_vars"] = json!(lifted.m_vars);
    emit(v);
    Ok(())
}

fn cmd_ehrhart(args: EhrhartArgs, cfg: &EnumConfig) -> Result<(), Failure> {
    let (p, change) = load_polytope(&args.polytope)?;
    require_dilation_safe(&change)?;
    let opts = EhrhartOptions {
        period: match args.period {
            Some(q) => PeriodStrategy::Hint(q),
            None => PeriodStrategy::default(),
        },
        counter: cfg.clone(),
        ..EhrhartOptions::default()
    };
    let qp = match args.weight {
        None => ehrhart_qp(&p, &opts)?,
        Some(wpath) => {
            let expr = adapt_weight(
                read_weight(&load(&wpath)?)?,
                &change,
                p.n(),
                args.basis.into(),
            )?;
            weighted_ehrhart_qp(&p, &expr, &opts)?
        }
    };
    emit(qp_to_json(&qp));
    Ok(())
}

fn cmd_integrate(args: IntegrateArgs, cfg: &EnumConfig) -> Result<(), Failure> {
    let text = load(&args.polytope)?;
    let spec = read_weight(&load(&args.weight)?)?;
    let WeightSpec::Polynomial(f) = spec else {
        return Err(Failure {
            code: 1,
            message: "integration needs a weight of kind polynomial".into(),
        });
    };
    let opts = EhrhartOptions {
        counter: cfg.clone(),
        ..EhrhartOptions::default()
    };
    let value = match read_polytope(&text)? {
        PolytopeInput::Standard(p) => integrate(&p, &f, &opts)?,
        PolytopeInput::H(h) => integrate_h(&h, &f, &opts)?,
    };
    emit(json!({
        "integral": rat_string(&value),
        "integral_dec": rat_decimal(&value, DECIMAL_PLACES),
    }));
    Ok(())
}

fn certificate_json(cert: &MaxCertificate) -> Value {
    let steps: Vec<Value> = cert
        .steps
        .iter()
        .map(|s| {
            json!({
                "k": s.k,
                "power_sum": int_value(&s.power_sum),
                "lower": int_value(&s.lower),
                "upper": int_value(&s.upper),
            })
        })
        .collect();
    json!({
        "maximum": int_value(&cert.maximum),
        "k_reached": cert.k_reached,
        "n_points": int_value(&cert.n_points),
        "steps": steps,
    })
}

fn cmd_maximize(args: MaximizeArgs, cfg: &EnumConfig) -> Result<(), Failure> {
    let (p, change) = load_polytope(&args.polytope)?;
    if change.is_some() {
        require_dilation_safe(&change)?;
    }
    let expr = adapt_weight(
        read_weight(&load(&args.weight)?)?,
        &change,
        p.n(),
        args.basis.into(),
    )?;
    let opts = MaxOptions {
        k_max: args.kmax,
        counter: cfg.clone(),
    };
    let cert = maximize_weight(&p, &expr, &opts)?;
    emit(certificate_json(&cert));
    Ok(())
}

/// Partitions arrive as comma-separated part lists; weakly decreasing is
/// required (`Partition` would assert otherwise, we validate first).
fn parse_partition(s: &str, what: &str) -> Result<Partition, Failure> {
    let parts = parse_u64_list(s, what)?;
    if parts.windows(2).any(|w| w[0] < w[1]) {
        return Err(Failure {
            code: 1,
            message: format!("{what} must be weakly decreasing, got {s:?}"),
        });
    }
    Ok(Partition::new(parts))
}

fn parse_u64_list(s: &str, what: &str) -> Result<Vec<u64>, Failure> {
    s.split(',')
        .map(|t| {
            t.trim().parse::<u64>().map_err(|_| Failure {
                code: 1,
                message: format!("{what}: bad entry {t:?} in {s:?}"),
            })
        })
        .collect()
}

fn parts_json(p: &Partition) -> Value {
    json!(p.parts())
}

fn cmd_app(app: AppCmd, cfg: &EnumConfig) -> Result<(), Failure> {
    match app {
        AppCmd::Cores { a, b } => {
            let stats = core_statistics(a, b, cfg)?;
            emit(json!({
                "a": a,
                "b": b,
                "count": int_value(&stats.count),
                "total_size": int_value(&stats.total_size),
                "average": rat_string(&stats.average),
                "average_dec": rat_decimal(&stats.average, DECIMAL_PLACES),
            }));
        }
        AppCmd::Semigroups { m, gmax, route, csv } => {
            let route = match route {
                RouteArg::Direct => SemigroupRoute::Direct,
                RouteArg::Lifted => SemigroupRoute::Lifted,
            };
            let rows = semigroup_series(m, gmax, route, cfg)?;
            if csv {
                print!("{}", semigroup_series_csv(&rows));
            } else {
                let items: Vec<Value> = rows
                    .iter()
                    .map(|r| {
                        json!({
                            "m": r.m,
                            "g": r.g,
                            "count": int_value(&r.count),
                            "total_weight": int_value(&r.total_weight),
                            "average": r.average.as_ref().map(rat_string),
                            "average_over_g2": r.average_over_g2.as_ref().map(rat_string),
                            "average_dec":
                                r.average.as_ref().map(|v| rat_decimal(v, DECIMAL_PLACES)),
                            "average_over_g2_dec":
                                r.average_over_g2.as_ref().map(|v| rat_decimal(v, DECIMAL_PLACES)),
                        })
                    })
                    .collect();
                emit(Value::Array(items));
            }
        }
        AppCmd::Kostka { lambda, alpha, max_len } => {
            let lam = parse_partition(&lambda, "--lambda")?;
            if let Some(alpha) = alpha {
                let content = parse_u64_list(&alpha, "--alpha")?;
                let k = kostka(&lam, &content, cfg)?;
                emit(json!({
                    "lambda": parts_json(&lam),
                    "alpha": content,
                    "kostka": int_value(&k),
                }));
            } else {
                let len = max_len.expect("clap enforces one of --alpha/--max-len");
                if lam.is_empty() || len < lam.len() {
                    return Err(Failure {
                        code: 1,
                        message: "--max-len must be at least the number of parts \
                                  of a nonempty lambda"
                            .into(),
                    });
                }
                let opts = MaxOptions {
                    k_max: 64,
                    counter: cfg.clone(),
                };
                let cert = kostka_max(&lam, len, &opts)?;
                let mut v = certificate_json(&cert);
                v["lambda"] = parts_json(&lam);
                v["length"] = json!(len);
                emit(v);
            }
        }
        AppCmd::Rsk { mu, nu } => {
            let mu = parse_partition(&mu, "--mu")?;
            let nu = parse_partition(&nu, "--nu")?;
            let rep = rsk_check(&mu, &nu, cfg)?;
            let ok = rep.lhs == rep.rhs && rep.rhs == rep.lifted;
            emit(json!({
                "mu": parts_json(&mu),
                "nu": parts_json(&nu),
                "lhs": int_value(&rep.lhs),
                "rhs": int_value(&rep.rhs),
                "lifted": int_value(&rep.lifted),
                "ok": ok,
            }));
        }
        AppCmd::Lr { lambda, mu, nu, alpha } => {
            let lam = parse_partition(&lambda, "--lambda")?;
            let mu = parse_partition(&mu, "--mu")?;
            if let Some(nu) = nu {
                let nu = parse_partition(&nu, "--nu")?;
                let c = lr_coefficient(&lam, &mu, &nu, cfg)?;
                emit(json!({
                    "lambda": parts_json(&lam),
                    "mu": parts_json(&mu),
                    "nu": parts_json(&nu),
                    "coefficient": int_value(&c),
                }));
            } else {
                let alpha = parse_u64_list(&alpha.expect("clap enforces one"), "--alpha")?;
                let rep = lr_identity_check(&lam, &mu, &alpha, cfg)?;
                let ok = rep.lhs == rep.rhs && rep.rhs == rep.lifted;
                emit(json!({
                    "lambda": parts_json(&lam),
                    "mu": parts_json(&mu),
                    "alpha": alpha,
                    "lhs": int_value(&rep.lhs),
                    "rhs": int_value(&rep.rhs),
                    "lifted": int_value(&rep.lifted),
                    "ok": ok,
                }));
            }
        }
        AppCmd::Nl { mu, nu, lambda } => {
            let mu = parse_partition(&mu, "--mu")?;
            let nu = parse_partition(&nu, "--nu")?;
            let lam = parse_partition(&lambda, "--lambda")?;
            let n = newell_littlewood(&mu, &nu, &lam, cfg)?;
            emit(json!({
                "mu": parts_json(&mu),
                "nu": parts_json(&nu),
                "lambda": parts_json(&lam),
                "coefficient": int_value(&n),
            }));
        }
    }
    Ok(())
}

/// Splitmix-style generator for the bench linear forms; reproducible per
/// --seed, independent of cell evaluation order.
struct Lcg(u64);

impl Lcg {
    fn next(&mut self) -> u64 {
        self.0 = self.0.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
        self.0 >> 33
    }
}

/// A seeded integrand of total degree `degree` in `dim` variables: either a
/// random monomial or a random positive linear form raised to the degree.
fn bench_weight(kind: WeightKind, dim: usize, degree: u32, seed: u64) -> Polynomial {
    let mut rng = Lcg(seed ^ ((dim as u64) << 32) ^ degree as u64);
    match kind {
        WeightKind::Monomial => {
            let mut exps = vec![0u32; dim];
            for _ in 0..degree {
                exps[(rng.next() % dim as u64) as usize] += 1;
            }
            Polynomial::monomial(exps, Rat::from_integer(1.into()))
        }
        WeightKind::LinearPower => {
            let mut form = Polynomial::zero(dim);
            for j in 0..dim {
                let c = 1 + (rng.next() % 3) as i64;
                form = &form + &Polynomial::var(j, dim).scale(&Rat::from_integer(c.into()));
            }
            form.pow(degree)
        }
    }
}

fn oracle_integral(f: &Polynomial) -> Rat {
    let mut acc = Rat::from_integer(0.into());
    for (exps, coeff) in f.terms() {
        let alpha: Vec<u64> = exps.iter().map(|&e| e as u64).collect();
        acc += coeff * dirichlet_simplex_integral(&alpha);
    }
    acc
}

/// Re-express `f` in `n` variables, the extra trailing ones unused.
fn pad_weight(f: &Polynomial, n: usize) -> Polynomial {
    let mut g = Polynomial::zero(n);
    for (exps, coeff) in f.terms() {
        let mut e = exps.clone();
        e.resize(n, 0);
        g = &g + &Polynomial::monomial(e, coeff.clone());
    }
    g
}

fn cmd_bench(args: BenchArgs, cfg: &EnumConfig) -> Result<(), Failure> {
    let dims = parse_u64_list(&args.dims, "--dims")?;
    let degrees = parse_u64_list(&args.degrees, "--degrees")?;
    if dims.is_empty() || dims.iter().any(|&d| d == 0 || d > 5) {
        return Err(Failure {
            code: 1,
            message: "--dims must list dimensions in 1..=5".into(),
        });
    }
    if degrees.iter().any(|&d| d > 4) {
        return Err(Failure {
            code: 1,
            message: "--degrees must list degrees in 0..=4".into(),
        });
    }
    let opts = EhrhartOptions {
        counter: cfg.clone(),
        ..EhrhartOptions::default()
    };
    let mut out = String::from("degree\\dim");
    for d in &dims {
        let _ = write!(out, ",{d}");
    }
    out.push('\n');
    for &deg in &degrees {
        let _ = write!(out, "{deg}");
        for &dim in &dims {
            let f = bench_weight(args.weight_kind, dim as usize, deg as u32, args.seed);
            let want = oracle_integral(&f);
            let p = StandardPolytope::standard_simplex(dim as usize);
            let padded = pad_weight(&f, dim as usize + 1);
            let start = Instant::now();
            match integrate(&p, &padded, &opts) {
                Ok(value) => {
                    let elapsed = start.elapsed();
                    if value != want {
                        return Err(Failure {
                            code: 2,
                            message: format!(
                                "bench cell dim {dim} degree {deg}: integrator returned {}, \
                                 oracle says {}",
                                rat_string(&value),
                                rat_string(&want)
                            ),
                        });
                    }
                    let _ = write!(out, ",{:.3}", elapsed.as_secs_f64() * 1e3);
                }
                Err(Error::BudgetExceeded(_)) | Err(Error::PeriodBudgetExceeded(_)) => {
                    out.push_str(",-");
                }
                Err(e) => return Err(e.into()),
            }
        }
        out.push('\n');
    }
    print!("{out}");
    Ok(())
}
