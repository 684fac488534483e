//! Text forms accepted on the command line for bases, points and numbers.
//!
//! Base specs are tried in this order:
//!
//! 1. `{"poly": [c0, ...], "lo": "a/b", "hi": "c/d"}`: a root given as JSON;
//! 2. `[c0,c1,...]@lo,hi`: the root of `c0 + c1 x + ...` in `(lo, hi)`, or
//!    the unique root above 1 when `@lo,hi` is omitted;
//! 3. anything containing `(`: the quasi-greedy expansion of 1, e.g. `(10)`;
//! 4. `G`, `q'`, `q''`, `q^(n)`: named constants;
//! 5. an integer, fraction or decimal, read as the exact rational it denotes.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use univoque_core::algebraic::AlgebraicReal;
use univoque_core::components::{BaseInput, BaseSpec};
use univoque_core::expansion::seq_value;
use univoque_core::field::FieldElem;
use univoque_core::{EpSeq, Error};

/// A parsed base together with a description of how it was read.
#[derive(Clone, Debug)]
pub struct BaseArg {
    pub input: BaseInput,
    /// `alpha`, `polynomial`, `named` or `rational`.
    pub form: &'static str,
    pub interpreted: String,
}

impl BaseArg {
    /// The base as an exact algebraic number; `q'` and `q''` have none.
    pub fn value(&self) -> Result<AlgebraicReal, Error> {
        match &self.input {
            BaseInput::Alpha(a) => univoque_core::base_from_alpha(a),
            BaseInput::Value(q) => Ok(q.clone()),
            BaseInput::SmallestUnivoque(n) => Err(Error::Unsupported(format!(
                "q^({n}) is only known through enclosures; give a polynomial or alpha instead"
            ))),
        }
    }
}

pub fn parse_rational(s: &str) -> Result<BigRational, Error> {
    let t = s.trim();
    let bad = || Error::Parse(format!("not a number: {s:?}"));
    if let Some((n, d)) = t.split_once('/') {
        let n: BigInt = n.trim().parse().map_err(|_| bad())?;
        let d: BigInt = d.trim().parse().map_err(|_| bad())?;
        if d.is_zero() {
            return Err(Error::Parse(format!("zero denominator in {s:?}")));
        }
        return Ok(BigRational::new(n, d));
    }
    let (mant, exp) = match t.find(['e', 'E']) {
        Some(i) => (&t[..i], t[i + 1..].parse::<i32>().map_err(|_| bad())?),
        None => (t, 0),
    };
    let (neg, mant) = match mant.strip_prefix('-') {
        Some(rest) => (true, rest),
        None => (false, mant.strip_prefix('+').unwrap_or(mant)),
    };
    let (int, frac) = mant.split_once('.').unwrap_or((mant, ""));
    if int.is_empty() && frac.is_empty()
        || !int.chars().chain(frac.chars()).all(|c| c.is_ascii_digit())
    {
        return Err(bad());
    }
    let digits: BigInt = format!("{int}{frac}").parse().map_err(|_| bad())?;
    let scale = exp - frac.len() as i32;
    let ten = BigInt::from(10);
    let mut r = BigRational::from_integer(digits);
    if scale >= 0 {
        r *= BigRational::from_integer(num_traits::pow(ten, scale as usize));
    } else {
        r /= BigRational::from_integer(num_traits::pow(ten, (-scale) as usize));
    }
    Ok(if neg { -r } else { r })
}

fn parse_int_list(s: &str) -> Result<Vec<BigInt>, Error> {
    let inner = s
        .trim()
        .strip_prefix('[')
        .and_then(|r| r.strip_suffix(']'))
        .ok_or_else(|| Error::Parse(format!("expected [c0,c1,...], got {s:?}")))?;
    inner
        .split(',')
        .map(|c| {
            c.trim()
                .parse::<BigInt>()
                .map_err(|_| Error::Parse(format!("bad coefficient {c:?}")))
        })
        .collect()
}

fn poly_text(c: &[BigInt]) -> String {
    let parts: Vec<String> = c.iter().map(ToString::to_string).collect();
    format!("[{}]", parts.join(","))
}

fn rational_text(r: &BigRational) -> String {
    if r.is_integer() {
        r.to_integer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

fn polynomial_base(coeffs: Vec<BigInt>, bounds: Option<(BigRational, BigRational)>) -> Result<BaseArg, Error> {
    let (q, interpreted) = match bounds {
        Some((lo, hi)) => {
            let text = format!(
                "root of {} in ({}, {})",
                poly_text(&coeffs),
                rational_text(&lo),
                rational_text(&hi)
            );
            (AlgebraicReal::new(&coeffs, lo, hi)?, text)
        }
        None => (
            AlgebraicReal::root_above_one(&coeffs)?,
            format!("the root above 1 of {}", poly_text(&coeffs)),
        ),
    };
    Ok(BaseArg {
        input: BaseInput::Value(q),
        form: "polynomial",
        interpreted,
    })
}

pub fn parse_base(s: &str) -> Result<BaseArg, Error> {
    let t = s.trim();
    if t.starts_with('{') {
        let v: serde_json::Value =
            serde_json::from_str(t).map_err(|e| Error::Parse(format!("bad JSON base: {e}")))?;
        let poly = v
            .get("poly")
            .and_then(|p| p.as_array())
            .ok_or_else(|| Error::Parse("JSON base needs a \"poly\" array".into()))?;
        let coeffs = poly
            .iter()
            .map(|c| match c {
                serde_json::Value::Number(n) => n.to_string().parse::<BigInt>().ok(),
                serde_json::Value::String(s) => s.parse::<BigInt>().ok(),
                _ => None,
            })
            .collect::<Option<Vec<_>>>()
            .ok_or_else(|| Error::Parse("poly coefficients must be integers".into()))?;
        let bound = |k: &str| -> Result<BigRational, Error> {
            match v.get(k) {
                Some(serde_json::Value::String(s)) => parse_rational(s),
                Some(serde_json::Value::Number(n)) => parse_rational(&n.to_string()),
                _ => Err(Error::Parse(format!("JSON base needs \"{k}\""))),
            }
        };
        return polynomial_base(coeffs, Some((bound("lo")?, bound("hi")?)));
    }
    if t.starts_with('[') {
        let (poly, bounds) = match t.split_once('@') {
            Some((p, b)) => {
                let (lo, hi) = b
                    .split_once(',')
                    .ok_or_else(|| Error::Parse(format!("expected @lo,hi in {s:?}")))?;
                (p, Some((parse_rational(lo)?, parse_rational(hi)?)))
            }
            None => (t, None),
        };
        return polynomial_base(parse_int_list(poly)?, bounds);
    }
    if t.contains('(') && !t.starts_with("q^") {
        let a = EpSeq::parse(t, None)?;
        let interpreted = format!("base with quasi-greedy expansion of 1 equal to {a}");
        return Ok(BaseArg {
            input: BaseInput::Alpha(a),
            form: "alpha",
            interpreted,
        });
    }
    let named = |n: u32, what: &str| BaseArg {
        input: BaseInput::SmallestUnivoque(n),
        form: "named",
        interpreted: format!("{what}, the least univoque number in ({n}, {})", n + 1),
    };
    match t {
        "G" => {
            return Ok(BaseArg {
                input: BaseInput::Alpha(EpSeq::periodic(1, vec![1, 0])?),
                form: "named",
                interpreted: "the golden ratio, alpha = (10)".into(),
            })
        }
        "q'" => return Ok(named(1, "q'")),
        "q''" => return Ok(named(2, "q''")),
        _ => {}
    }
    if let Some(n) = t.strip_prefix("q^(").and_then(|r| r.strip_suffix(')')) {
        let n: u32 = n
            .trim()
            .parse()
            .map_err(|_| Error::Parse(format!("bad index in {s:?}")))?;
        if n == 0 {
            return Err(Error::Parse("q^(n) needs n >= 1".into()));
        }
        return Ok(named(n, &format!("q^({n})")));
    }
    let r = parse_rational(t)?;
    let exact = if t.contains('.') || t.contains(['e', 'E']) {
        format!("the rational {} (decimal {t} read exactly)", rational_text(&r))
    } else {
        format!("the rational {}", rational_text(&r))
    };
    Ok(BaseArg {
        input: BaseInput::Value(AlgebraicReal::from_rational(r)),
        form: "rational",
        interpreted: exact,
    })
}

/// A left endpoint: a positive integer, `G` or an `alpha` sequence.
pub fn parse_left(s: &str) -> Result<BaseSpec, Error> {
    let t = s.trim();
    if t == "G" {
        return Ok(BaseSpec::Alpha(EpSeq::periodic(1, vec![1, 0])?));
    }
    if t.contains('(') {
        return Ok(BaseSpec::Alpha(EpSeq::parse(t, None)?).normalized());
    }
    let n: u32 = t
        .parse()
        .map_err(|_| Error::Parse(format!("expected a positive integer, G or alpha, got {s:?}")))?;
    if n == 0 {
        return Err(Error::Parse("the integer must be positive".into()));
    }
    Ok(BaseSpec::Integer(n))
}

/// Parses a point `x` in base `q`: a sequence (valued in base `q`), a
/// polynomial expression in `q` such as `q^-1+q^-2+2/3*q^-3`, or a rational.
pub fn parse_point(s: &str, q: &AlgebraicReal) -> Result<FieldElem, Error> {
    let t = s.trim();
    if t.contains('(') && !t.contains('q') {
        let m = q.alphabet_max()?;
        let c = EpSeq::parse(t, Some(m))?;
        return Ok(seq_value(q, &c));
    }
    if t.contains('q') {
        return parse_field_expr(t, q);
    }
    Ok(FieldElem::from_rational(q, parse_rational(t)?))
}

/// Sum of terms `[c][*]q[^k]` with rational `c` and integer `k`.
pub fn parse_field_expr(s: &str, q: &AlgebraicReal) -> Result<FieldElem, Error> {
    let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
    if compact.is_empty() {
        return Err(Error::Parse("empty expression".into()));
    }
    let mut terms = Vec::new();
    let mut start = 0;
    let b = compact.as_bytes();
    for i in 1..b.len() {
        // a sign starts a new term unless it belongs to an exponent
        if (b[i] == b'+' || b[i] == b'-') && b[i - 1] != b'^' && b[i - 1] != b'(' && b[i - 1] != b'e' {
            terms.push(&compact[start..i]);
            start = i;
        }
    }
    terms.push(&compact[start..]);
    let mut acc = FieldElem::zero(q);
    for term in terms {
        acc = &acc + &parse_term(term, q)?;
    }
    Ok(acc)
}

fn parse_term(t: &str, q: &AlgebraicReal) -> Result<FieldElem, Error> {
    let bad = || Error::Parse(format!("bad term {t:?}"));
    let (sign, body) = match t.strip_prefix('-') {
        Some(r) => (-BigRational::one(), r),
        None => (BigRational::one(), t.strip_prefix('+').unwrap_or(t)),
    };
    let Some(qi) = body.find('q') else {
        return Ok(FieldElem::from_rational(q, sign * parse_rational(body)?));
    };
    let coef = body[..qi].trim_end_matches('*');
    let coef = if coef.is_empty() {
        BigRational::one()
    } else {
        parse_rational(coef)?
    };
    let rest = &body[qi + 1..];
    let exp: i64 = if rest.is_empty() {
        1
    } else {
        let e = rest.strip_prefix('^').ok_or_else(bad)?;
        let e = e
            .strip_prefix('(')
            .and_then(|r| r.strip_suffix(')'))
            .unwrap_or(e);
        e.parse().map_err(|_| bad())?
    };
    let c = sign * coef;
    if c.is_negative() || c.is_positive() {
        Ok(FieldElem::q_pow(q, exp).scale(&c))
    } else {
        Ok(FieldElem::zero(q))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::cmp::Ordering;

    fn r(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    #[test]
    fn rationals() {
        assert_eq!(parse_rational("3/2").unwrap(), r(3, 2));
        assert_eq!(parse_rational("1.8").unwrap(), r(9, 5));
        assert_eq!(parse_rational("-0.25").unwrap(), r(-1, 4));
        assert_eq!(parse_rational("1e-3").unwrap(), r(1, 1000));
        assert_eq!(parse_rational("2.5E2").unwrap(), r(250, 1));
        assert_eq!(parse_rational("7").unwrap(), r(7, 1));
        for bad in ["", "1/0", "abc", "1.2.3", "."] {
            assert!(parse_rational(bad).is_err(), "{bad}");
        }
    }

    #[test]
    fn base_precedence() {
        assert_eq!(parse_base("(10)").unwrap().form, "alpha");
        assert_eq!(parse_base("[-1,-1,1]@1,2").unwrap().form, "polynomial");
        assert_eq!(parse_base("[-1,-1,1]").unwrap().form, "polynomial");
        let j = parse_base(r#"{"poly":[-1,-1,1],"lo":"1","hi":"2"}"#).unwrap();
        assert_eq!(j.form, "polynomial");
        let d = parse_base("1.8").unwrap();
        assert_eq!(d.form, "rational");
        assert!(d.interpreted.contains("9/5"));
        assert_eq!(parse_base("q'").unwrap().form, "named");
        assert!(matches!(parse_base("q^(3)").unwrap().input, BaseInput::SmallestUnivoque(3)));
        assert!(parse_base("[1,2").is_err());
        assert!(parse_base("(1x)").is_err());
    }

    #[test]
    fn polynomial_and_alpha_forms_agree() {
        let a = parse_base("(10)").unwrap().value().unwrap();
        let p = parse_base("[-1,-1,1]@1,2").unwrap().value().unwrap();
        assert_eq!(a.compare(&p), Ordering::Equal);
    }

    #[test]
    fn field_expressions() {
        let g = parse_base("G").unwrap().value().unwrap();
        let x = parse_point("q^-1+q^-2+q^-3", &g).unwrap();
        assert!(x == FieldElem::digit_sum(&g, &[1, 1, 1]));
        let y = parse_point("2*q^(-2) - 1/2 + q", &g).unwrap();
        let expect = &(&FieldElem::q_pow(&g, -2).scale(&r(2, 1)) - &FieldElem::from_rational(&g, r(1, 2)))
            + &FieldElem::q(&g);
        assert!(y == expect);
        // 1 = (10) in base G
        assert!(parse_point("(10)", &g).unwrap() == FieldElem::one(&g));
        assert!(parse_point("q^", &g).is_err());
    }

    #[test]
    fn left_specs() {
        assert_eq!(parse_left("2").unwrap(), BaseSpec::Integer(2));
        assert_eq!(parse_left("(1)").unwrap(), BaseSpec::Integer(2));
        assert!(parse_left("0").is_err());
        assert!(matches!(parse_left("G").unwrap(), BaseSpec::Alpha(_)));
    }
}
