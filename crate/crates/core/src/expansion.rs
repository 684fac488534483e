//! Greedy and quasi-greedy digit generation, and the lexicographic tests for
//! greedy, quasi-greedy and univoque sequences.

use alloc::vec::Vec;
use core::cmp::Ordering;

use crate::algebraic::{check_alpha, AlgebraicReal};
use crate::error::{Error, Result};
use crate::field::{j_q_max, FieldElem};
use crate::sequence::{all_conjugate_shifts_le, all_shifts_le, Digit, DigitGuard, EpSeq, Word};

/// The state after running a digit algorithm for `digits.len()` steps.
#[derive(Clone, Debug)]
pub struct DigitRun {
    pub base: AlgebraicReal,
    pub x: FieldElem,
    pub digits: Word,
    /// `x - sum digits_i q^{-i}`.
    pub residual: FieldElem,
}

/// Checks `0 <= x <= alpha_1/(q-1)` and returns `alpha_1`.
pub fn check_in_j_q(x: &FieldElem, q: &AlgebraicReal) -> Result<Digit> {
    let m = q.alphabet_max()?;
    let mut qq = q.clone();
    if x.sign_with(&mut qq) == Ordering::Less {
        return Err(Error::OutOfRange);
    }
    let top = &j_q_max(q, m) - x;
    if top.sign_with(&mut qq) == Ordering::Less {
        return Err(Error::OutOfRange);
    }
    Ok(m)
}

/// Runs the greedy (`strict = false`) or quasi-greedy (`strict = true`)
/// algorithm for `n` steps.
pub fn run_digits(x: &FieldElem, q: &AlgebraicReal, n: usize, strict: bool) -> Result<DigitRun> {
    let m = check_in_j_q(x, q)?;
    let mut qq = q.clone();
    let qe = FieldElem::q(q);
    let mut digits = Vec::with_capacity(n);
    // r = q^j (x - sum_{i<=j} d_i q^{-i})
    let mut r = x.clone();
    if x.sign_with(&mut qq) != Ordering::Equal {
        for _ in 0..n {
            let t = &qe * &r;
            let fits = |d: Digit, qq: &mut AlgebraicReal| {
                let s = (&t - &FieldElem::from_integer(q, d as i64)).sign_with(qq);
                if strict {
                    s == Ordering::Greater
                } else {
                    s != Ordering::Less
                }
            };
            let (mut lo, mut hi) = (0u8, m);
            if !fits(0, &mut qq) {
                // cannot happen inside J_q; kept as a guard against misuse
                return Err(Error::OutOfRange);
            }
            while lo < hi {
                let mid = lo + (hi - lo).div_ceil(2);
                if fits(mid, &mut qq) {
                    lo = mid;
                } else {
                    hi = mid - 1;
                }
            }
            digits.push(lo);
            r = &t - &FieldElem::from_integer(q, lo as i64);
        }
    } else {
        digits.resize(n, 0);
    }
    let residual = &r * &FieldElem::q_pow(q, -(n as i64));
    Ok(DigitRun {
        base: q.clone(),
        x: x.clone(),
        digits: Word::new(digits),
        residual,
    })
}

/// First `n` digits of the quasi-greedy expansion of `x` in base `q`.
pub fn quasi_greedy_digits(x: &FieldElem, q: &AlgebraicReal, n: usize) -> Result<Word> {
    run_digits(x, q, n, true).map(|r| r.digits)
}

/// First `n` digits of the greedy expansion of `x` in base `q`.
pub fn greedy_digits(x: &FieldElem, q: &AlgebraicReal, n: usize) -> Result<Word> {
    run_digits(x, q, n, false).map(|r| r.digits)
}

fn admissible(alpha: &EpSeq) -> Result<Digit> {
    check_alpha(alpha).map_err(|e| match e {
        Error::NotQuasiGreedyAlpha(s) => Error::AlphaInvalid(s),
        other => other,
    })?;
    Ok(alpha.first())
}

/// Every tail following a digit below `alpha_1` is strictly below `alpha`.
pub fn is_greedy(b: &EpSeq, alpha: &EpSeq) -> Result<bool> {
    let m = admissible(alpha)?;
    all_shifts_le(b, alpha, true, 1, DigitGuard::Below(m))
}

/// Infinite (or `0^inf`), and every tail following a digit below
/// `alpha_1` is at most `alpha`.
pub fn is_quasi_greedy(a: &EpSeq, alpha: &EpSeq) -> Result<bool> {
    let m = admissible(alpha)?;
    if !a.is_infinite() && !a.is_zero() {
        if a.alphabet_max() != alpha.alphabet_max() {
            return Err(Error::AlphabetMismatch {
                left: a.alphabet_max(),
                right: m,
            });
        }
        return Ok(false);
    }
    all_shifts_le(a, alpha, false, 1, DigitGuard::Below(m))
}

/// The two guarded strict tests characterizing unique expansions.
pub fn is_univoque(c: &EpSeq, alpha: &EpSeq) -> Result<bool> {
    let m = admissible(alpha)?;
    Ok(all_shifts_le(c, alpha, true, 1, DigitGuard::Below(m))?
        && all_conjugate_shifts_le(c, alpha, true, 1, DigitGuard::Above(0))?)
}

/// `b_1 ... b_{n-1} (b_n - 1) alpha` for a finite greedy `b` with last
/// nonzero digit `b_n`.
pub fn quasi_from_finite_greedy(b: &EpSeq, alpha: &EpSeq) -> Result<EpSeq> {
    let n = match b.last_nonzero() {
        Some(n) if !b.is_infinite() => n,
        _ => return Err(Error::NotFiniteGreedy),
    };
    if !is_greedy(b, alpha)? {
        return Err(Error::NotFiniteGreedy);
    }
    let mut head = b.prefix(n).into_digits();
    head[n - 1] -= 1;
    alpha.prepend(&head)
}

/// Value of a finite word, `sum w_i q^{-i}`.
pub fn word_value(q: &AlgebraicReal, w: &[Digit]) -> FieldElem {
    FieldElem::digit_sum(q, w)
}

/// Exact value of an eventually periodic sequence in base `q`.
pub fn seq_value(q: &AlgebraicReal, s: &EpSeq) -> FieldElem {
    let r = s.preperiod().len() as i64;
    let p = s.period().len() as i64;
    let head = FieldElem::digit_sum(q, s.preperiod());
    let per = FieldElem::digit_sum(q, s.period());
    // tail = q^{-r} * per / (1 - q^{-p})
    let one = FieldElem::one(q);
    let denom = &one - &FieldElem::q_pow(q, -p);
    let tail = &(&per * &denom.inv().expect("q > 1")) * &FieldElem::q_pow(q, -r);
    &head + &tail
}
