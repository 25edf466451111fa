//! Exact integer and rational scalars plus the handful of number-theoretic
//! helpers the rest of the crate leans on.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// Arbitrary-precision integer.
pub type Int = BigInt;
/// Arbitrary-precision rational, always kept in reduced form by `num-rational`.
pub type Rat = BigRational;

/// Shorthand for `Int` from a machine integer.
pub fn int(v: i64) -> Int {
    Int::from(v)
}

/// Shorthand for `p/q` as a reduced rational. Panics on `q == 0`.
pub fn rat(p: i64, q: i64) -> Rat {
    Rat::new(Int::from(p), Int::from(q))
}

/// Integer promoted to a rational.
pub fn rat_int(v: &Int) -> Rat {
    Rat::from_integer(v.clone())
}

/// `n!` as an exact integer.
pub fn factorial(n: u64) -> Int {
    let mut acc = Int::one();
    for k in 2..=n {
        acc *= Int::from(k);
    }
    acc
}

/// Generalized binomial coefficient `C(n, k)` for any integer `n` and `k >= 0`
/// via the falling-factorial product; `k < 0` gives 0. Always an integer.
pub fn binomial(n: &Int, k: &Int) -> Int {
    if k.is_negative() {
        return Int::zero();
    }
    let k = match k.to_u64() {
        Some(k) => k,
        None => panic!("binomial: k too large"),
    };
    // For nonnegative n smaller than k the product hits zero; fine either way.
    let mut num = Int::one();
    for i in 0..k {
        num *= n - Int::from(i);
    }
    num / factorial(k)
}

/// `C(n, k)` with machine-sized arguments, for test tables.
pub fn binom_i64(n: i64, k: i64) -> Int {
    binomial(&int(n), &int(k))
}

/// lcm that treats 0 as identity-ish: lcm(0, x) = x, matching the use for
/// denominators (never 0) and period accumulation.
pub fn lcm_pos(a: &Int, b: &Int) -> Int {
    if a.is_zero() {
        return b.clone();
    }
    if b.is_zero() {
        return a.clone();
    }
    a.lcm(b)
}

/// Largest integer `r >= 0` with `r^k <= s`. Requires `s >= 0`, `k >= 1`.
pub fn int_kth_root_floor(s: &Int, k: u32) -> Result<Int> {
    if s.is_negative() {
        return Err(Error::NegativeRoot);
    }
    assert!(k >= 1, "int_kth_root_floor: k must be >= 1");
    if s.is_zero() || s.is_one() || k == 1 {
        return Ok(s.clone());
    }
    // Binary search on [0, 2^(ceil(bits/k)+1)).
    let bits = s.bits();
    let mut hi = Int::one() << ((bits / u64::from(k)) + 2);
    let mut lo = Int::zero();
    // Invariant: lo^k <= s < hi^k.
    while &lo + 1u8 < hi {
        let mid: Int = (&lo + &hi) >> 1;
        if mid.pow(k) <= *s {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    Ok(lo)
}

/// Render a rational as a plain decimal with `places` digits after the point,
/// truncated toward zero, e.g. `5/18 -> "0.2777777777"`.
pub fn rat_to_decimal(x: &Rat, places: usize) -> String {
    let sign = if x.is_negative() { "-" } else { "" };
    let num = x.numer().abs();
    let den = x.denom().clone();
    let (ipart, rem) = num.div_rem(&den);
    let scaled = rem * Int::from(10u32).pow(places as u32) / den;
    let mut frac = scaled.to_string();
    while frac.len() < places {
        frac.insert(0, '0');
    }
    if places == 0 {
        format!("{sign}{ipart}")
    } else {
        format!("{sign}{ipart}.{frac}")
    }
}

/// Parse `"p/q"`, `"p"`, or a decimal-free integer string into a rational.
pub fn parse_rat(s: &str) -> Result<Rat> {
    let s = s.trim();
    let bad = |m: &str| Error::InvalidInput(format!("bad rational '{s}': {m}"));
    if let Some((p, q)) = s.split_once('/') {
        let p: Int = p.trim().parse().map_err(|_| bad("numerator"))?;
        let q: Int = q.trim().parse().map_err(|_| bad("denominator"))?;
        if q.is_zero() {
            return Err(bad("zero denominator"));
        }
        Ok(Rat::new(p, q))
    } else {
        let p: Int = s.parse().map_err(|_| bad("integer"))?;
        Ok(Rat::from_integer(p))
    }
}

/// Render a rational as `"p/q"` (or `"p"` when integral).
pub fn rat_to_string(x: &Rat) -> String {
    if x.is_integer() {
        x.numer().to_string()
    } else {
        format!("{}/{}", x.numer(), x.denom())
    }
}
