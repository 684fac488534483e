//! JSON encodings of the core types.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Signed;
use serde_json::{json, Value};

use univoque_core::algebraic::AlgebraicReal;
use univoque_core::components::{BaseSpec, Component, Enclosure};
use univoque_core::Word;

pub fn rational(r: &BigRational) -> String {
    if r.is_integer() {
        r.to_integer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// `r` rounded down to `places` decimals.
pub fn decimal(r: &BigRational, places: usize) -> String {
    fixed(r, places, false)
}

/// `r` rounded up to `places` decimals.
pub fn decimal_up(r: &BigRational, places: usize) -> String {
    fixed(r, places, true)
}

fn fixed(r: &BigRational, places: usize, up: bool) -> String {
    let scale = num_traits::pow(BigInt::from(10), places);
    let x = r * BigRational::from_integer(scale);
    let scaled = if up { x.ceil() } else { x.floor() }.to_integer();
    let neg = scaled.is_negative();
    let digits = scaled.abs().to_string();
    let digits = format!("{digits:0>width$}", width = places + 1);
    let (int, frac) = digits.split_at(digits.len() - places);
    let sign = if neg { "-" } else { "" };
    if places == 0 {
        format!("{sign}{int}")
    } else {
        format!("{sign}{int}.{frac}")
    }
}

pub fn algebraic(q: &AlgebraicReal) -> Value {
    let eps = BigRational::new(1.into(), BigInt::from(10).pow(12));
    let (lo, _) = q.approx(&eps);
    let coeffs: Vec<String> = q.poly().integer_coeffs().iter().map(ToString::to_string).collect();
    json!({
        "poly": coeffs,
        "lo": rational(q.lo()),
        "hi": rational(q.hi()),
        "approx": decimal(&lo, 10),
    })
}

pub fn base_spec(s: &BaseSpec) -> Value {
    match s {
        BaseSpec::Integer(n) => json!({"kind": "integer", "value": n, "text": n.to_string()}),
        BaseSpec::Alpha(a) => json!({"kind": "alpha", "text": a.to_string()}),
    }
}

pub fn component(c: &Component) -> Value {
    json!({"q1": base_spec(&c.q1), "q2": c.q2.to_string(), "kind": "Interval"})
}

/// Rational bounds of an enclosure, each end within `eps` of exact.
pub fn enclosure(e: &Enclosure, eps: &BigRational) -> Value {
    let (lo, hi) = e.rational_bounds(eps);
    json!({
        "lower": rational(&lo),
        "upper": rational(&hi),
        "lower_decimal": decimal(&lo, 12),
        "upper_decimal": decimal_up(&hi, 12),
        "depth": e.depth,
    })
}

pub fn words(ws: &[Word]) -> Value {
    Value::Array(ws.iter().map(|w| Value::String(w.to_string())).collect())
}
