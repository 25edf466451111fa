//! File formats: LattE-style H-representations, JSON encodings of polytopes,
//! weights and quasi-polynomials, and CSV emission for series data.
//!
//! Exactness rules: rationals travel as `"p"` or `"p/q"` strings, integers as
//! JSON numbers when they fit an `i64` and as strings otherwise. Parsers
//! accept both encodings everywhere an integer is expected.
//!
//! JSON shapes:
//!
//! - standard-form polytope: `{"A": [[..]], "b": [..]}`
//! - H-form polytope: `{"G": [[..]], "h": [..], "Eq": [[..]], "f": [..]}`
//!   (any subset; missing blocks default to empty, `"vars"` pins the
//!   dimension when every block is empty)
//! - weight: `{"kind": "polynomial", "vars": n, "terms": [{"coeff": "p/q",
//!   "exponents": [..]}]}`, `{"kind": "family", "C": [[..]], "D": [[..]],
//!   "e": [..]}`, or `{"kind": "factors", "vars": n, "factors": [{"form":
//!   "cube"|"rising"|"falling", "var": j, "power"|"bound": k}]}`
//! - quasi-polynomial: `{"degree": d, "period": p, "coeffs": [[..]]}` where
//!   `coeffs[m]` lists the coefficient of `t^m` per residue class.

use std::fmt::Write as _;
use std::str::FromStr;

use num_traits::{One, Signed, Zero};
use serde_json::{json, Value};

use crate::arith::{rat_int, Int, Rat};
use crate::ehrhart::QuasiPolynomial;
use crate::error::{Error, Result};
use crate::gallery::SemigroupSeriesRow;
use crate::lifting::{
    compile_polynomial, family_from_factors, Basis, LateDilatedFactor, ParametricFamily,
    WeightExpr,
};
use crate::linalg::IntMat;
use crate::poly::Polynomial;
use crate::polytope::{HPolytope, StandardPolytope};

/// `"p"` when integral, `"p/q"` otherwise (denominator always positive).
pub fn rat_string(r: &Rat) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Parse `"p"` or `"p/q"`.
pub fn parse_rat(s: &str) -> Result<Rat> {
    let bad = || Error::InvalidInput(format!("not a rational: {s:?}"));
    let mut it = s.splitn(2, '/');
    let p = it.next().ok_or_else(bad)?;
    let numer = Int::from_str(p.trim()).map_err(|_| bad())?;
    match it.next() {
        None => Ok(rat_int(&numer)),
        Some(q) => {
            let denom = Int::from_str(q.trim()).map_err(|_| bad())?;
            if denom.is_zero() {
                return Err(bad());
            }
            Ok(Rat::new(numer, denom))
        }
    }
}

/// Exact decimal rendering with `places` digits, rounding half away from
/// zero. Plot consumers get a fixed-width column; the exact value travels in
/// the neighbouring rational column.
pub fn rat_decimal(r: &Rat, places: u32) -> String {
    let num = r.numer().abs();
    let den = r.denom().clone();
    let scaled = num * Int::from(10u8).pow(places);
    // round(scaled / den) half away from zero, both operands nonnegative
    let q = (scaled * 2u8 + &den) / (den * 2u8);
    let digits = q.to_string();
    let places = places as usize;
    let whole_len = digits.len().saturating_sub(places);
    let (whole, frac) = if digits.len() <= places {
        ("0".to_string(), format!("{digits:0>places$}"))
    } else {
        (digits[..whole_len].to_string(), digits[whole_len..].to_string())
    };
    let sign = if r.is_negative() && !q.is_zero() { "-" } else { "" };
    if places == 0 {
        format!("{sign}{whole}")
    } else {
        format!("{sign}{whole}.{frac}")
    }
}

/// Integer as a JSON number when it fits an `i64`, a string otherwise.
pub fn int_value(v: &Int) -> Value {
    match i64::try_from(v) {
        Ok(x) => json!(x),
        Err(_) => json!(v.to_string()),
    }
}

pub fn parse_int_value(v: &Value) -> Result<Int> {
    match v {
        Value::Number(n) => n
            .as_i64()
            .map(Int::from)
            .ok_or_else(|| Error::InvalidInput(format!("not an exact integer: {n}"))),
        Value::String(s) => {
            Int::from_str(s.trim()).map_err(|_| Error::InvalidInput(format!("not an integer: {s:?}")))
        }
        other => Err(Error::InvalidInput(format!("expected integer, got {other}"))),
    }
}

pub fn parse_rat_value(v: &Value) -> Result<Rat> {
    match v {
        Value::Number(_) => Ok(rat_int(&parse_int_value(v)?)),
        Value::String(s) => parse_rat(s),
        other => Err(Error::InvalidInput(format!("expected rational, got {other}"))),
    }
}

fn int_row_values(row: &[Int]) -> Value {
    Value::Array(row.iter().map(int_value).collect())
}

fn mat_values(m: &IntMat) -> Value {
    Value::Array((0..m.rows()).map(|i| int_row_values(m.row(i))).collect())
}

fn parse_int_vec(v: &Value, what: &str) -> Result<Vec<Int>> {
    let arr = v
        .as_array()
        .ok_or_else(|| Error::InvalidInput(format!("{what} must be an array")))?;
    arr.iter().map(parse_int_value).collect()
}

/// Rows-of-integers matrix; `cols` pins the width when there are no rows.
fn parse_mat(v: &Value, what: &str, cols: Option<usize>) -> Result<IntMat> {
    let arr = v
        .as_array()
        .ok_or_else(|| Error::InvalidInput(format!("{what} must be an array of rows")))?;
    let mut rows: Vec<Vec<Int>> = Vec::with_capacity(arr.len());
    for row in arr {
        rows.push(parse_int_vec(row, what)?);
    }
    if let Some(w) = rows.first().map(Vec::len) {
        if rows.iter().any(|r| r.len() != w) {
            return Err(Error::InvalidInput(format!("{what} rows have mixed widths")));
        }
        if let Some(c) = cols {
            if w != c {
                return Err(Error::InvalidInput(format!(
                    "{what} has {w} columns, expected {c}"
                )));
            }
        }
        Ok(IntMat::from_int_rows(rows))
    } else {
        Ok(IntMat::zeros(0, cols.unwrap_or(0)))
    }
}

// ---------------------------------------------------------------------------
// LattE-style H-representation
// ---------------------------------------------------------------------------

/// Read the LattE H-representation dialect: a `"m d+1"` header, then `m` rows
/// `b_i -a_{i1} .. -a_{id}` each encoding `b_i - a.x >= 0`, plus an optional
/// `linearity k i1 .. ik` line (anywhere after the header) turning the listed
/// 1-based rows into equalities. Errors carry 1-based line numbers.
pub fn read_latte(text: &str) -> Result<HPolytope> {
    let perr = |line: usize, msg: String| Error::Parse { line, msg };
    let mut header: Option<(usize, usize)> = None;
    let mut raw_rows: Vec<Vec<Int>> = Vec::new();
    let mut linearity: Option<Vec<usize>> = None;
    let mut last_line = 0usize;
    for (idx, line) in text.lines().enumerate() {
        let lineno = idx + 1;
        last_line = lineno;
        let toks: Vec<&str> = line.split_whitespace().collect();
        if toks.is_empty() {
            continue;
        }
        let Some((m, cols)) = header else {
            if toks.len() != 2 {
                return Err(perr(lineno, "expected header \"m d+1\"".into()));
            }
            let m: usize = toks[0]
                .parse()
                .map_err(|_| perr(lineno, format!("bad row count {:?}", toks[0])))?;
            let c: usize = toks[1]
                .parse()
                .map_err(|_| perr(lineno, format!("bad column count {:?}", toks[1])))?;
            if c == 0 {
                return Err(perr(lineno, "column count must be at least 1".into()));
            }
            header = Some((m, c));
            continue;
        };
        if toks[0] == "linearity" {
            if linearity.is_some() {
                return Err(perr(lineno, "duplicate linearity line".into()));
            }
            let k: usize = toks
                .get(1)
                .and_then(|t| t.parse().ok())
                .ok_or_else(|| perr(lineno, "linearity needs a count".into()))?;
            if toks.len() != k + 2 {
                return Err(perr(
                    lineno,
                    format!("linearity lists {} indices, expected {k}", toks.len() - 2),
                ));
            }
            let mut idxs = Vec::with_capacity(k);
            for t in &toks[2..] {
                let i: usize = t
                    .parse()
                    .map_err(|_| perr(lineno, format!("bad linearity index {t:?}")))?;
                if i == 0 || i > m {
                    return Err(perr(lineno, format!("linearity index {i} out of 1..={m}")));
                }
                if idxs.contains(&i) {
                    return Err(perr(lineno, format!("repeated linearity index {i}")));
                }
                idxs.push(i);
            }
            linearity = Some(idxs);
            continue;
        }
        if raw_rows.len() == m {
            return Err(perr(lineno, format!("more than {m} matrix rows")));
        }
        if toks.len() != cols {
            return Err(perr(
                lineno,
                format!("row has {} entries, expected {cols}", toks.len()),
            ));
        }
        let mut row = Vec::with_capacity(cols);
        for t in &toks {
            row.push(
                Int::from_str(t).map_err(|_| perr(lineno, format!("bad integer {t:?}")))?,
            );
        }
        raw_rows.push(row);
    }
    let (m, cols) = header.ok_or_else(|| perr(last_line.max(1), "empty input".into()))?;
    if raw_rows.len() != m {
        return Err(perr(
            last_line.max(1),
            format!("found {} matrix rows, expected {m}", raw_rows.len()),
        ));
    }
    let d = cols - 1;
    let lin = linearity.unwrap_or_default();
    let mut g_rows: Vec<Vec<Int>> = Vec::new();
    let mut h: Vec<Int> = Vec::new();
    let mut eq_rows: Vec<Vec<Int>> = Vec::new();
    let mut f: Vec<Int> = Vec::new();
    for (i, raw) in raw_rows.into_iter().enumerate() {
        // stored as [b, -a]; b - a.x >= 0 is a.x <= b
        let b = raw[0].clone();
        let a: Vec<Int> = raw[1..].iter().map(|e| -e).collect();
        if lin.contains(&(i + 1)) {
            eq_rows.push(a);
            f.push(b);
        } else {
            g_rows.push(a);
            h.push(b);
        }
    }
    let g = if g_rows.is_empty() {
        IntMat::zeros(0, d)
    } else {
        IntMat::from_int_rows(g_rows)
    };
    let eq = if eq_rows.is_empty() {
        IntMat::zeros(0, d)
    } else {
        IntMat::from_int_rows(eq_rows)
    };
    HPolytope::new(g, h, eq, f)
}

/// Inverse of [`read_latte`]: inequalities first, equalities after, one
/// trailing linearity line when equalities exist.
pub fn write_latte(hp: &HPolytope) -> String {
    let d = hp.n();
    let m = hp.g().rows() + hp.eq().rows();
    let mut out = format!("{m} {}\n", d + 1);
    let mut push_row = |b: &Int, a: &[Int]| {
        let mut line = b.to_string();
        for v in a {
            let _ = write!(line, " {}", -v);
        }
        out.push_str(&line);
        out.push('\n');
    };
    for i in 0..hp.g().rows() {
        push_row(&hp.h()[i], hp.g().row(i));
    }
    for i in 0..hp.eq().rows() {
        push_row(&hp.f()[i], hp.eq().row(i));
    }
    if hp.eq().rows() > 0 {
        let _ = write!(out, "linearity {}", hp.eq().rows());
        for i in 0..hp.eq().rows() {
            let _ = write!(out, " {}", hp.g().rows() + i + 1);
        }
        out.push('\n');
    }
    out
}

// ---------------------------------------------------------------------------
// JSON polytopes
// ---------------------------------------------------------------------------

/// A polytope file is either already in standard form or an H-form that
/// still needs standardization.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum PolytopeInput {
    Standard(StandardPolytope),
    H(HPolytope),
}

pub fn polytope_to_json(p: &StandardPolytope) -> Value {
    json!({
        "A": mat_values(p.a()),
        "b": int_row_values(p.b()),
    })
}

pub fn polytope_from_json(v: &Value) -> Result<StandardPolytope> {
    let obj = v
        .as_object()
        .ok_or_else(|| Error::InvalidInput("polytope must be a JSON object".into()))?;
    let vars = obj.get("vars").map(|n| parse_usize(n, "vars")).transpose()?;
    let a = parse_mat(
        obj.get("A")
            .ok_or_else(|| Error::InvalidInput("missing \"A\"".into()))?,
        "A",
        vars,
    )?;
    let b = parse_int_vec(
        obj.get("b")
            .ok_or_else(|| Error::InvalidInput("missing \"b\"".into()))?,
        "b",
    )?;
    if b.len() != a.rows() {
        return Err(Error::DimensionMismatch(format!(
            "A has {} rows but b has {} entries",
            a.rows(),
            b.len()
        )));
    }
    Ok(StandardPolytope::new(a, b))
}

pub fn hpolytope_to_json(hp: &HPolytope) -> Value {
    json!({
        "G": mat_values(hp.g()),
        "h": int_row_values(hp.h()),
        "Eq": mat_values(hp.eq()),
        "f": int_row_values(hp.f()),
        "vars": hp.n(),
    })
}

pub fn hpolytope_from_json(v: &Value) -> Result<HPolytope> {
    let obj = v
        .as_object()
        .ok_or_else(|| Error::InvalidInput("polytope must be a JSON object".into()))?;
    let vars = obj.get("vars").map(|n| parse_usize(n, "vars")).transpose()?;
    let g = match obj.get("G") {
        Some(m) => Some(parse_mat(m, "G", vars)?),
        None => None,
    };
    let eq = match obj.get("Eq") {
        Some(m) => Some(parse_mat(m, "Eq", vars.or_else(|| g.as_ref().map(IntMat::cols)))?),
        None => None,
    };
    let d = vars
        .or_else(|| g.as_ref().map(IntMat::cols))
        .or_else(|| eq.as_ref().map(IntMat::cols))
        .ok_or_else(|| {
            Error::InvalidInput("cannot infer dimension: give \"G\", \"Eq\" or \"vars\"".into())
        })?;
    let g = g.unwrap_or_else(|| IntMat::zeros(0, d));
    let eq = eq.unwrap_or_else(|| IntMat::zeros(0, d));
    let h = match obj.get("h") {
        Some(v) => parse_int_vec(v, "h")?,
        None => vec![],
    };
    let f = match obj.get("f") {
        Some(v) => parse_int_vec(v, "f")?,
        None => vec![],
    };
    HPolytope::new(g, h, eq, f)
}

/// Sniff the format: JSON objects with `"A"` are standard form, other JSON
/// objects are H-form, anything else is the LattE dialect.
pub fn read_polytope(text: &str) -> Result<PolytopeInput> {
    if text.trim_start().starts_with('{') {
        let v: Value = serde_json::from_str(text)
            .map_err(|e| Error::Parse { line: e.line(), msg: e.to_string() })?;
        if v.get("A").is_some() {
            Ok(PolytopeInput::Standard(polytope_from_json(&v)?))
        } else {
            Ok(PolytopeInput::H(hpolytope_from_json(&v)?))
        }
    } else {
        Ok(PolytopeInput::H(read_latte(text)?))
    }
}

fn parse_usize(v: &Value, what: &str) -> Result<usize> {
    parse_int_value(v)?
        .try_into()
        .map_err(|_| Error::InvalidInput(format!("{what} must be a nonnegative machine integer")))
}

// ---------------------------------------------------------------------------
// JSON weights
// ---------------------------------------------------------------------------

/// Parsed weight file. Polynomials compile into counting families on demand;
/// families and factor products are counting weights already.
#[derive(Clone, Debug)]
pub enum WeightSpec {
    Polynomial(Polynomial),
    Family(ParametricFamily),
    Factors { vars: usize, factors: Vec<LateDilatedFactor> },
}

impl WeightSpec {
    pub fn vars(&self) -> usize {
        match self {
            WeightSpec::Polynomial(p) => p.n_vars(),
            WeightSpec::Family(f) => f.n(),
            WeightSpec::Factors { vars, .. } => *vars,
        }
    }

    /// The counting form: compiled in `basis` for polynomials, as-is
    /// otherwise.
    pub fn to_expr(&self, basis: Basis) -> Result<WeightExpr> {
        match self {
            WeightSpec::Polynomial(p) => Ok(compile_polynomial(p, basis)),
            WeightSpec::Family(f) => Ok(WeightExpr::from_family(f.clone(), f.m())),
            WeightSpec::Factors { vars, factors } => {
                let fam = family_from_factors(factors, *vars)?;
                Ok(WeightExpr::from_family(fam, factors.len()))
            }
        }
    }
}

pub fn read_weight(text: &str) -> Result<WeightSpec> {
    let v: Value = serde_json::from_str(text)
        .map_err(|e| Error::Parse { line: e.line(), msg: e.to_string() })?;
    weight_from_json(&v)
}

pub fn weight_from_json(v: &Value) -> Result<WeightSpec> {
    let obj = v
        .as_object()
        .ok_or_else(|| Error::InvalidInput("weight must be a JSON object".into()))?;
    let kind = obj
        .get("kind")
        .and_then(Value::as_str)
        .ok_or_else(|| Error::InvalidInput("weight needs a \"kind\" string".into()))?;
    match kind {
        "polynomial" => {
            let vars = parse_usize(
                obj.get("vars")
                    .ok_or_else(|| Error::InvalidInput("polynomial weight needs \"vars\"".into()))?,
                "vars",
            )?;
            let terms = obj
                .get("terms")
                .and_then(Value::as_array)
                .ok_or_else(|| Error::InvalidInput("polynomial weight needs \"terms\"".into()))?;
            let mut poly = Polynomial::zero(vars);
            for term in terms {
                let coeff = parse_rat_value(
                    term.get("coeff")
                        .ok_or_else(|| Error::InvalidInput("term needs \"coeff\"".into()))?,
                )?;
                let exps_v = term
                    .get("exponents")
                    .and_then(Value::as_array)
                    .ok_or_else(|| Error::InvalidInput("term needs \"exponents\"".into()))?;
                let mut exps = Vec::with_capacity(vars);
                for e in exps_v {
                    let e: u32 = parse_int_value(e)?
                        .try_into()
                        .map_err(|_| Error::InvalidInput("exponent out of range".into()))?;
                    exps.push(e);
                }
                if exps.len() != vars {
                    return Err(Error::DimensionMismatch(format!(
                        "term has {} exponents, weight has {vars} vars",
                        exps.len()
                    )));
                }
                poly = &poly + &Polynomial::monomial(exps, coeff);
            }
            Ok(WeightSpec::Polynomial(poly))
        }
        "family" => {
            let c = parse_mat(
                obj.get("C")
                    .ok_or_else(|| Error::InvalidInput("family weight needs \"C\"".into()))?,
                "C",
                None,
            )?;
            let d = parse_mat(
                obj.get("D")
                    .ok_or_else(|| Error::InvalidInput("family weight needs \"D\"".into()))?,
                "D",
                None,
            )?;
            let e = parse_int_vec(
                obj.get("e")
                    .ok_or_else(|| Error::InvalidInput("family weight needs \"e\"".into()))?,
                "e",
            )?;
            Ok(WeightSpec::Family(ParametricFamily::new(c, d, e)?))
        }
        "factors" => {
            let vars = parse_usize(
                obj.get("vars")
                    .ok_or_else(|| Error::InvalidInput("factor weight needs \"vars\"".into()))?,
                "vars",
            )?;
            let list = obj
                .get("factors")
                .and_then(Value::as_array)
                .ok_or_else(|| Error::InvalidInput("factor weight needs \"factors\"".into()))?;
            let mut factors = Vec::with_capacity(list.len());
            for fv in list {
                let form = fv
                    .get("form")
                    .and_then(Value::as_str)
                    .ok_or_else(|| Error::InvalidInput("factor needs a \"form\"".into()))?;
                let var = parse_usize(
                    fv.get("var")
                        .ok_or_else(|| Error::InvalidInput("factor needs \"var\"".into()))?,
                    "var",
                )?;
                if var >= vars {
                    return Err(Error::InvalidInput(format!(
                        "factor var {var} out of range for {vars} vars"
                    )));
                }
                let param = |key: &str| -> Result<usize> {
                    parse_usize(
                        fv.get(key).ok_or_else(|| {
                            Error::InvalidInput(format!("{form} factor needs \"{key}\""))
                        })?,
                        key,
                    )
                };
                factors.push(match form {
                    "cube" => LateDilatedFactor::cube(param("power")?, var),
                    "rising" => {
                        let b = param("bound")?;
                        if b == 0 {
                            return Err(Error::InvalidInput("rising bound must be >= 1".into()));
                        }
                        LateDilatedFactor::rising(b, var)
                    }
                    "falling" => {
                        let b = param("bound")?;
                        if b == 0 {
                            return Err(Error::InvalidInput("falling bound must be >= 1".into()));
                        }
                        LateDilatedFactor::falling(b, var)
                    }
                    other => {
                        return Err(Error::InvalidInput(format!("unknown factor form {other:?}")))
                    }
                });
            }
            Ok(WeightSpec::Factors { vars, factors })
        }
        other => Err(Error::InvalidInput(format!("unknown weight kind {other:?}"))),
    }
}

pub fn family_to_json(f: &ParametricFamily) -> Value {
    json!({
        "kind": "family",
        "C": mat_values(f.c()),
        "D": mat_values(f.d()),
        "e": int_row_values(f.e()),
    })
}

pub fn polynomial_to_json(p: &Polynomial) -> Value {
    let terms: Vec<Value> = p
        .terms()
        .map(|(exps, coeff)| {
            json!({
                "coeff": rat_string(coeff),
                "exponents": exps,
            })
        })
        .collect();
    json!({ "kind": "polynomial", "vars": p.n_vars(), "terms": terms })
}

// ---------------------------------------------------------------------------
// JSON quasi-polynomials
// ---------------------------------------------------------------------------

pub fn qp_to_json(q: &QuasiPolynomial) -> Value {
    let coeffs: Vec<Value> = q
        .coefficients()
        .iter()
        .map(|row| Value::Array(row.iter().map(|c| json!(rat_string(c))).collect()))
        .collect();
    json!({
        "degree": q.degree(),
        "period": q.period(),
        "coeffs": coeffs,
    })
}

pub fn qp_from_json(v: &Value) -> Result<QuasiPolynomial> {
    let obj = v
        .as_object()
        .ok_or_else(|| Error::InvalidInput("quasi-polynomial must be a JSON object".into()))?;
    let degree = parse_usize(
        obj.get("degree")
            .ok_or_else(|| Error::InvalidInput("missing \"degree\"".into()))?,
        "degree",
    )?;
    let period: u32 = parse_usize(
        obj.get("period")
            .ok_or_else(|| Error::InvalidInput("missing \"period\"".into()))?,
        "period",
    )?
    .try_into()
    .map_err(|_| Error::InvalidInput("period out of range".into()))?;
    let rows = obj
        .get("coeffs")
        .and_then(Value::as_array)
        .ok_or_else(|| Error::InvalidInput("missing \"coeffs\"".into()))?;
    let mut coeffs = Vec::with_capacity(rows.len());
    for row in rows {
        let row = row
            .as_array()
            .ok_or_else(|| Error::InvalidInput("coeffs rows must be arrays".into()))?;
        coeffs.push(row.iter().map(parse_rat_value).collect::<Result<Vec<_>>>()?);
    }
    QuasiPolynomial::new(degree, period, coeffs)
}

// ---------------------------------------------------------------------------
// CSV
// ---------------------------------------------------------------------------

/// Semigroup series header: the six data columns plus fixed-width decimal
/// twins of the two rational columns for plotting.
pub const SEMIGROUP_CSV_HEADER: &str =
    "m,g,count,total_weight,average,average_over_g2,average_dec,average_over_g2_dec";

const CSV_DECIMAL_PLACES: u32 = 10;

/// One CSV line per series row; empty rational cells when a genus has no
/// semigroups (count zero means no average exists).
pub fn semigroup_series_csv(rows: &[SemigroupSeriesRow]) -> String {
    let mut out = String::from(SEMIGROUP_CSV_HEADER);
    out.push('\n');
    for row in rows {
        let avg = row.average.as_ref().map(rat_string).unwrap_or_default();
        let avg2 = row.average_over_g2.as_ref().map(rat_string).unwrap_or_default();
        let avg_dec = row
            .average
            .as_ref()
            .map(|r| rat_decimal(r, CSV_DECIMAL_PLACES))
            .unwrap_or_default();
        let avg2_dec = row
            .average_over_g2
            .as_ref()
            .map(|r| rat_decimal(r, CSV_DECIMAL_PLACES))
            .unwrap_or_default();
        let _ = writeln!(
            out,
            "{},{},{},{},{},{},{},{}",
            row.m, row.g, row.count, row.total_weight, avg, avg2, avg_dec, avg2_dec
        );
    }
    out
}
