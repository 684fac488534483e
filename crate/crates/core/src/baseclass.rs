//! Classification of bases and points, certified recovery of `alpha(q)`, and
//! the families of all expansions of 1.

use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::cmp::Ordering;

use crate::algebraic::{base_from_alpha, check_alpha, AlgebraicReal};
use crate::error::{Error, Result};
use crate::expansion::{is_greedy, is_quasi_greedy, is_univoque, quasi_greedy_digits, seq_value};
use crate::field::FieldElem;
use crate::sequence::{all_conjugate_shifts_le, Digit, DigitGuard, EpSeq, Word};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum BaseVariant {
    Univoque,
    ClosureOnly,
    VOnly,
    OutsideV,
}

impl BaseVariant {
    pub fn name(self) -> &'static str {
        match self {
            BaseVariant::Univoque => "Univoque",
            BaseVariant::ClosureOnly => "ClosureOnly",
            BaseVariant::VOnly => "VOnly",
            BaseVariant::OutsideV => "OutsideV",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BaseClass {
    pub variant: BaseVariant,
    pub is_integer: bool,
    pub alpha: EpSeq,
    /// For `VOnly`: least `k` with `alpha = (a_1..a_k conj(a_1..a_k))^inf`.
    pub minimal_k: Option<usize>,
}

impl BaseClass {
    /// `alpha_1 = ceil(q) - 1`.
    pub fn alphabet_max(&self) -> Digit {
        self.alpha.first()
    }

    pub fn in_v(&self) -> bool {
        self.variant != BaseVariant::OutsideV
    }

    pub fn in_closure_u(&self) -> bool {
        matches!(self.variant, BaseVariant::Univoque | BaseVariant::ClosureOnly)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ExpansionCount {
    One,
    Two,
    CountablyInfinite,
    UndeterminedOutsideV,
}

impl ExpansionCount {
    pub fn name(self) -> &'static str {
        match self {
            ExpansionCount::One => "One",
            ExpansionCount::Two => "Two",
            ExpansionCount::CountablyInfinite => "CountablyInfinite",
            ExpansionCount::UndeterminedOutsideV => "UndeterminedOutsideV",
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct PointClass {
    pub in_uq: bool,
    pub in_vq: bool,
    /// The greedy expansion of the point is finite.
    pub greedy_finite: bool,
    pub count: ExpansionCount,
}

/// Outcome of recovering `alpha(q)` from a numeric base.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum AlphaOfOne {
    /// Eventually periodic, and certified by `base_from_alpha(alpha) == q`.
    Certified(EpSeq),
    /// No candidate period could be certified within the digit budget.
    Prefix(Word),
}

/// Proposes eventually periodic continuations of `digits` in order of
/// increasing description length, returning the first that `certify`
/// accepts.
pub fn detect_period<F>(digits: &[Digit], m: Digit, mut certify: F) -> Option<EpSeq>
where
    F: FnMut(&EpSeq) -> bool,
{
    let n = digits.len();
    let mut seen: Vec<EpSeq> = Vec::new();
    for total in 1..=n / 2 {
        for p in 1..=total {
            let r = total - p;
            if (r + p..n).any(|i| digits[i] != digits[i - p]) {
                continue;
            }
            let Ok(cand) = EpSeq::new(m, digits[..r].to_vec(), digits[r..r + p].to_vec()) else {
                continue;
            };
            if seen.contains(&cand) {
                continue;
            }
            if certify(&cand) {
                return Some(cand);
            }
            seen.push(cand);
        }
    }
    None
}

/// The quasi-greedy expansion of 1 in base `q`, certified when eventually
/// periodic.
pub fn alpha_of_one(q: &AlgebraicReal, max_digits: usize) -> Result<AlphaOfOne> {
    let m = q.alphabet_max()?;
    let one = FieldElem::one(q);
    let w = quasi_greedy_digits(&one, q, max_digits)?;
    let found = detect_period(w.digits(), m, |cand| {
        base_from_alpha(cand).is_ok_and(|b| b.compare(q) == Ordering::Equal)
    });
    Ok(match found {
        Some(a) => AlphaOfOne::Certified(a),
        None => AlphaOfOne::Prefix(w),
    })
}

fn is_constant_max(alpha: &EpSeq) -> bool {
    alpha.preperiod().is_empty() && alpha.period() == [alpha.alphabet_max()]
}

/// Least `k >= 1` with `conj(a_{k+1} a_{k+2} ...) = alpha`.
fn conjugate_return(alpha: &EpSeq) -> Option<usize> {
    (1..=alpha.preperiod().len() + alpha.period().len())
        .find(|&k| alpha.shift(k).conjugate() == *alpha)
}

/// Four-way classification of the base whose `alpha(q)` is `alpha`.
pub fn classify_base(alpha: &EpSeq) -> Result<BaseClass> {
    check_alpha(alpha)?;
    let is_integer = is_constant_max(alpha);
    let in_v = all_conjugate_shifts_le(alpha, alpha, false, 1, DigitGuard::Always)?;
    let in_closure = in_v && all_conjugate_shifts_le(alpha, alpha, true, 1, DigitGuard::Always)?;
    let variant = if in_closure && is_univoque(alpha, alpha)? {
        BaseVariant::Univoque
    } else if in_closure {
        BaseVariant::ClosureOnly
    } else if in_v {
        BaseVariant::VOnly
    } else {
        BaseVariant::OutsideV
    };
    let minimal_k = match variant {
        BaseVariant::VOnly => Some(conjugate_return(alpha).ok_or_else(|| {
            Error::Unclassifiable(format!("{alpha}: V equality without a conjugate return"))
        })?),
        _ => None,
    };
    Ok(BaseClass {
        variant,
        is_integer,
        alpha: alpha.clone(),
        minimal_k,
    })
}

/// Recovers `alpha(q)` and classifies; fails if no period is certified.
pub fn classify_base_value(q: &AlgebraicReal, max_digits: usize) -> Result<BaseClass> {
    match alpha_of_one(q, max_digits)? {
        AlphaOfOne::Certified(a) => classify_base(&a),
        AlphaOfOne::Prefix(w) => Err(Error::Unclassifiable(format!(
            "alpha(q) not certified within {} digits; prefix {w}",
            w.len()
        ))),
    }
}

/// Whether a prefix of `alpha(q)` already shows `q` outside `V`: some
/// conjugated factor exceeds the prefix of the same length.
pub fn prefix_outside_v(w: &Word, alphabet_max: Digit) -> bool {
    let d = w.digits();
    (1..d.len()).any(|k| {
        for (i, &x) in d[k..].iter().enumerate() {
            let c = alphabet_max - x;
            if c != d[i] {
                return c > d[i];
            }
        }
        false
    })
}

/// The greedy expansion of 1: finite exactly when `alpha` is purely
/// periodic and not the integer-base sequence.
pub fn greedy_of_one(alpha: &EpSeq) -> Result<EpSeq> {
    check_alpha(alpha)?;
    if is_constant_max(alpha) || !alpha.is_purely_periodic() {
        return Ok(alpha.clone());
    }
    let mut w = alpha.period().to_vec();
    let last = w.len() - 1;
    w[last] += 1;
    EpSeq::new(alpha.alphabet_max(), w, alloc::vec![0])
}

/// The position `n` with `a = b_1 .. b_{n-1} (b_n - 1) alpha` for a finite
/// greedy `b`, if any.
fn finite_greedy_split(a: &EpSeq, alpha: &EpSeq) -> Result<Option<usize>> {
    let m = alpha.first();
    for n in 1..=a.preperiod().len() + a.period().len() {
        if a.digit(n - 1) >= m || a.shift(n) != *alpha {
            continue;
        }
        let mut head = a.prefix(n).into_digits();
        head[n - 1] += 1;
        let b = EpSeq::new(a.alphabet_max(), head, alloc::vec![0])?;
        if is_greedy(&b, alpha)? {
            return Ok(Some(n));
        }
        return Ok(None);
    }
    Ok(None)
}

/// Classifies the point whose quasi-greedy expansion is `a`.
pub fn classify_point(a: &EpSeq, alpha: &EpSeq) -> Result<PointClass> {
    if !is_quasi_greedy(a, alpha)? {
        return Err(Error::NotQuasiGreedy);
    }
    let base = classify_base(alpha)?;
    let in_vq = all_conjugate_shifts_le(a, alpha, false, 1, DigitGuard::Above(0))?;
    let in_uq = is_univoque(a, alpha)?;
    let greedy_finite = finite_greedy_split(a, alpha)?.is_some();
    let count = if in_uq {
        ExpansionCount::One
    } else if !in_vq {
        ExpansionCount::UndeterminedOutsideV
    } else {
        match base.variant {
            BaseVariant::Univoque => ExpansionCount::Two,
            BaseVariant::ClosureOnly | BaseVariant::VOnly => ExpansionCount::CountablyInfinite,
            BaseVariant::OutsideV => {
                return Err(Error::Unclassifiable(format!(
                    "{a} lies in V_q but not U_q although the base is outside V"
                )))
            }
        }
    };
    Ok(PointClass {
        in_uq: in_uq && in_vq,
        in_vq,
        greedy_finite,
        count,
    })
}

/// Outcome of classifying a numerically given point.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum PointOutcome {
    Classified { a: EpSeq, class: PointClass },
    /// The quasi-greedy digits could not be certified as eventually
    /// periodic; the prefix is returned with the diagnostic.
    Undetermined { prefix: Word, diagnostic: String },
}

/// Convenience wrapper: digits of `x`, certified period detection, then
/// [`classify_point`].
pub fn classify_point_value(
    x: &FieldElem,
    q: &AlgebraicReal,
    max_digits: usize,
) -> Result<PointOutcome> {
    let alpha = match alpha_of_one(q, max_digits)? {
        AlphaOfOne::Certified(a) => a,
        AlphaOfOne::Prefix(w) => {
            return Ok(PointOutcome::Undetermined {
                prefix: w,
                diagnostic: "alpha(q) is not certified as eventually periodic".into(),
            })
        }
    };
    let w = quasi_greedy_digits(x, q, max_digits)?;
    let m = alpha.alphabet_max();
    let found = detect_period(w.digits(), m, |cand| {
        (cand.is_infinite() || cand.is_zero()) && seq_value(q, cand) == *x
    });
    match found {
        Some(a) => Ok(PointOutcome::Classified {
            class: classify_point(&a, &alpha)?,
            a,
        }),
        None => Ok(PointOutcome::Undetermined {
            prefix: w,
            diagnostic: "quasi-greedy digits are not certified as eventually periodic".into(),
        }),
    }
}

/// `block^N tail`, one parameterized family of expansions of 1.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Family {
    pub head: Word,
    pub period_block: Word,
    pub tail: EpSeq,
    pub parameter: &'static str,
}

impl Family {
    pub fn member(&self, n: usize) -> Result<EpSeq> {
        let mut pre = self.head.digits().to_vec();
        for _ in 0..n {
            pre.extend_from_slice(self.period_block.digits());
        }
        self.tail.prepend(&pre)
    }
}

/// All expansions of 1 in a base of class `U`, `closure(U) \ U` or `V \ closure(U)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExpansionFamily {
    pub alpha: EpSeq,
    pub families: Vec<Family>,
}

impl ExpansionFamily {
    /// `alpha` followed by the `n`-th member of each family.
    pub fn materialize(&self, n: usize) -> Result<Vec<EpSeq>> {
        let mut out = alloc::vec![self.alpha.clone()];
        for f in &self.families {
            out.push(f.member(n)?);
        }
        Ok(out)
    }
}

fn bumped(w: &[Digit], delta: i8) -> Vec<Digit> {
    let mut v = w.to_vec();
    let last = v.len() - 1;
    v[last] = (v[last] as i16 + delta as i16) as Digit;
    v
}

pub fn expansions_of_one(cls: &BaseClass) -> Result<ExpansionFamily> {
    let alpha = &cls.alpha;
    let m = alpha.alphabet_max();
    let families = match cls.variant {
        BaseVariant::Univoque => Vec::new(),
        BaseVariant::ClosureOnly => {
            if !alpha.is_purely_periodic() {
                return Err(Error::Unsupported(format!(
                    "{alpha} is not purely periodic"
                )));
            }
            let block = alpha.period();
            alloc::vec![Family {
                head: Word::empty(),
                period_block: Word::new(block.to_vec()),
                tail: EpSeq::new(m, bumped(block, 1), alloc::vec![0])?,
                parameter: "N",
            }]
        }
        BaseVariant::VOnly => {
            let k = cls.minimal_k.ok_or_else(|| Error::NotVOnly(alpha.to_string()))?;
            let block = alpha.prefix(2 * k).into_digits();
            let half = bumped(&alpha.prefix(k).into_digits(), -1);
            alloc::vec![
                Family {
                    head: Word::empty(),
                    period_block: Word::new(block.clone()),
                    tail: EpSeq::new(m, bumped(&block, 1), alloc::vec![0])?,
                    parameter: "N",
                },
                Family {
                    head: Word::empty(),
                    period_block: Word::new(block),
                    tail: EpSeq::new(m, half, alloc::vec![m])?,
                    parameter: "N",
                },
            ]
        }
        BaseVariant::OutsideV => {
            return Err(Error::Unsupported(
                "no enumeration of the expansions of 1 outside V".into(),
            ))
        }
    };
    Ok(ExpansionFamily {
        alpha: alpha.clone(),
        families,
    })
}

/// The quasi-greedy expansion of `alpha_1/(q-1) - x`.
pub fn reflect(a: &EpSeq, alpha: &EpSeq) -> Result<EpSeq> {
    if !is_quasi_greedy(a, alpha)? {
        return Err(Error::NotQuasiGreedy);
    }
    if !all_conjugate_shifts_le(a, alpha, false, 1, DigitGuard::Above(0))? {
        return Err(Error::NotInV);
    }
    Ok(a.conjugate())
}

/// Block lengths `m` with `conj(alpha_{k+1}..alpha_m) < alpha_1..alpha_{m-k}`
/// for every `0 <= k < m`, in `from..=to`.
pub fn approximation_lengths(alpha: &EpSeq, from: usize, to: usize) -> Vec<usize> {
    let a = alpha.prefix(to).into_digits();
    let top = alpha.alphabet_max();
    (from.max(1)..=to)
        .filter(|&m| {
            (0..m).all(|k| {
                let tail = a[k..m].iter().map(|&d| top - d);
                tail.cmp(a[..m - k].iter().copied()) == Ordering::Less
            })
        })
        .collect()
}

/// Unique expansions converging to the quasi-greedy expansion
/// `b_1..b_n^- alpha` of a point of `V_q \ U_q` with finite greedy
/// expansion `b`, for `q` in `closure(U)`: the `i`-th member is
/// `b_1..b_n^- (alpha_1..alpha_m conj(alpha_1..alpha_m))^inf` with the
/// `i`-th admissible `m > n`.
pub fn univoque_approximants(b: &Word, alpha: &EpSeq, count: usize, max_m: usize) -> Result<Vec<EpSeq>> {
    if !classify_base(alpha)?.in_closure_u() {
        return Err(Error::Unsupported(format!("{alpha} is not in closure(U)")));
    }
    let n = b.len();
    let mut head = b.digits().to_vec();
    match head.last_mut() {
        Some(d) if *d > 0 => *d -= 1,
        _ => return Err(Error::NotFiniteGreedy),
    }
    let top = alpha.alphabet_max();
    approximation_lengths(alpha, n + 1, max_m)
        .into_iter()
        .take(count)
        .map(|m| {
            let blk = alpha.prefix(m);
            let mut per = blk.digits().to_vec();
            per.extend(blk.conjugate(top).digits());
            EpSeq::new(top, head.clone(), per)
        })
        .collect()
}
