//! Eventually periodic digit sequences and their lexicographic machinery.
//!
//! An [`EpSeq`] is a preperiod word followed by a repeating period word over
//! the alphabet `{0, ..., alphabet_max}`. Values are always kept in canonical
//! form (primitive period, minimal preperiod), so structural equality is
//! sequence equality.

use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;
use core::str::FromStr;

use num_integer::Integer;

use crate::error::{Error, Result};

pub type Digit = u8;

/// A finite block of digits.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Word(Vec<Digit>);

impl Word {
    pub fn new(digits: Vec<Digit>) -> Self {
        Word(digits)
    }

    pub fn empty() -> Self {
        Word(Vec::new())
    }

    pub fn digits(&self) -> &[Digit] {
        &self.0
    }

    pub fn into_digits(self) -> Vec<Digit> {
        self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn push(&mut self, d: Digit) {
        self.0.push(d);
    }

    pub fn prefix(&self, n: usize) -> Word {
        Word(self.0[..n.min(self.0.len())].to_vec())
    }

    /// Digit-wise `alphabet_max - d`.
    pub fn conjugate(&self, alphabet_max: Digit) -> Word {
        Word(self.0.iter().map(|&d| alphabet_max - d).collect())
    }

    /// Parses `1101` or, for multi-digit alphabets, `10.2.3`.
    pub fn parse(s: &str) -> Result<Word> {
        parse_digits(s.trim()).map(Word)
    }
}

impl From<Vec<Digit>> for Word {
    fn from(v: Vec<Digit>) -> Self {
        Word(v)
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let sep = self.0.iter().any(|&d| d > 9);
        write_digits(f, &self.0, sep)
    }
}

/// Which positions an [`all_shifts_le`] test quantifies over, keyed on the
/// digit `s_k` that precedes the tail `s_{k+1} s_{k+2} ...`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum DigitGuard {
    Always,
    Below(Digit),
    Above(Digit),
}

impl DigitGuard {
    fn admits(self, d: Digit) -> bool {
        match self {
            DigitGuard::Always => true,
            DigitGuard::Below(b) => d < b,
            DigitGuard::Above(b) => d > b,
        }
    }
}

/// An eventually periodic sequence `pre (period)^inf` in canonical form.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct EpSeq {
    alphabet_max: Digit,
    pre: Vec<Digit>,
    period: Vec<Digit>,
}

impl EpSeq {
    pub fn new(alphabet_max: Digit, pre: Vec<Digit>, period: Vec<Digit>) -> Result<Self> {
        if alphabet_max == 0 {
            return Err(Error::InvalidSequence("alphabet_max must be at least 1".into()));
        }
        if period.is_empty() {
            return Err(Error::InvalidSequence("period must be nonempty".into()));
        }
        if let Some(&d) = pre.iter().chain(period.iter()).find(|&&d| d > alphabet_max) {
            return Err(Error::DigitOutOfRange {
                digit: d as u32,
                alphabet_max: alphabet_max as u32,
            });
        }
        let mut s = EpSeq {
            alphabet_max,
            pre,
            period,
        };
        s.canonicalize();
        Ok(s)
    }

    /// Purely periodic `(period)^inf`.
    pub fn periodic(alphabet_max: Digit, period: Vec<Digit>) -> Result<Self> {
        Self::new(alphabet_max, Vec::new(), period)
    }

    /// The constant sequence `d^inf`.
    pub fn constant(alphabet_max: Digit, d: Digit) -> Result<Self> {
        Self::new(alphabet_max, Vec::new(), alloc::vec![d])
    }

    pub fn zero(alphabet_max: Digit) -> Self {
        EpSeq {
            alphabet_max: alphabet_max.max(1),
            pre: Vec::new(),
            period: alloc::vec![0],
        }
    }

    /// `word 0^inf`.
    pub fn finite(alphabet_max: Digit, word: &Word) -> Result<Self> {
        Self::new(alphabet_max, word.digits().to_vec(), alloc::vec![0])
    }

    /// `word` followed by `tail`, over `tail`'s alphabet.
    pub fn prepend(&self, word: &[Digit]) -> Result<Self> {
        let mut pre = word.to_vec();
        pre.extend_from_slice(&self.pre);
        Self::new(self.alphabet_max, pre, self.period.clone())
    }

    /// Re-embeds the digits into a different alphabet.
    pub fn with_alphabet(&self, alphabet_max: Digit) -> Result<Self> {
        Self::new(alphabet_max, self.pre.clone(), self.period.clone())
    }

    pub fn alphabet_max(&self) -> Digit {
        self.alphabet_max
    }

    pub fn preperiod(&self) -> &[Digit] {
        &self.pre
    }

    pub fn period(&self) -> &[Digit] {
        &self.period
    }

    /// Digit at 0-based position `i`, i.e. the 1-based digit `i + 1`.
    pub fn digit(&self, i: usize) -> Digit {
        if i < self.pre.len() {
            self.pre[i]
        } else {
            self.period[(i - self.pre.len()) % self.period.len()]
        }
    }

    pub fn first(&self) -> Digit {
        self.digit(0)
    }

    pub fn prefix(&self, n: usize) -> Word {
        Word((0..n).map(|i| self.digit(i)).collect())
    }

    pub fn is_infinite(&self) -> bool {
        self.period.iter().any(|&d| d != 0)
    }

    pub fn is_zero(&self) -> bool {
        self.pre.is_empty() && self.period == [0]
    }

    pub fn is_purely_periodic(&self) -> bool {
        self.pre.is_empty()
    }

    /// For a finite sequence, the 1-based index of its last nonzero digit
    /// (`None` for `0^inf` and for infinite sequences).
    pub fn last_nonzero(&self) -> Option<usize> {
        if self.is_infinite() {
            return None;
        }
        self.pre.iter().rposition(|&d| d != 0).map(|i| i + 1)
    }

    /// `s_{k+1} s_{k+2} ...`
    pub fn shift(&self, k: usize) -> EpSeq {
        let (pre, period) = if k <= self.pre.len() {
            (self.pre[k..].to_vec(), self.period.clone())
        } else {
            let r = (k - self.pre.len()) % self.period.len();
            let mut p = self.period[r..].to_vec();
            p.extend_from_slice(&self.period[..r]);
            (Vec::new(), p)
        };
        let mut s = EpSeq {
            alphabet_max: self.alphabet_max,
            pre,
            period,
        };
        s.canonicalize();
        s
    }

    pub fn conjugate(&self) -> EpSeq {
        let m = self.alphabet_max;
        EpSeq {
            alphabet_max: m,
            pre: self.pre.iter().map(|&d| m - d).collect(),
            period: self.period.iter().map(|&d| m - d).collect(),
        }
    }

    /// Exact lexicographic comparison on integer digits; alphabets may differ.
    pub fn lex_cmp(&self, other: &EpSeq) -> Ordering {
        cmp_tails(self, 0, false, other)
    }

    fn canonicalize(&mut self) {
        let p = self.period.len();
        if let Some(d) = (1..p).find(|d| p.is_multiple_of(*d) && is_power_of_prefix(&self.period, *d)) {
            self.period.truncate(d);
        }
        while let Some(&last) = self.pre.last() {
            if last != *self.period.last().unwrap() {
                break;
            }
            self.pre.pop();
            self.period.rotate_right(1);
        }
    }

    /// Parses `pre(period)`; with `alphabet_max = None` the alphabet is the
    /// largest digit present (at least 1).
    pub fn parse(s: &str, alphabet_max: Option<Digit>) -> Result<EpSeq> {
        let s = s.trim();
        let open = s
            .find('(')
            .ok_or_else(|| Error::Parse(alloc::format!("missing '(' in {s:?}")))?;
        if !s.ends_with(')') {
            return Err(Error::Parse(alloc::format!("missing trailing ')' in {s:?}")));
        }
        let pre = parse_digits(&s[..open])?;
        let period = parse_digits(&s[open + 1..s.len() - 1])?;
        if period.is_empty() {
            return Err(Error::Parse("empty period".into()));
        }
        let m = match alphabet_max {
            Some(m) => m,
            None => pre.iter().chain(period.iter()).copied().max().unwrap_or(1).max(1),
        };
        EpSeq::new(m, pre, period)
    }
}

fn is_power_of_prefix(w: &[Digit], d: usize) -> bool {
    (d..w.len()).all(|i| w[i] == w[i - d])
}

fn parse_digits(s: &str) -> Result<Vec<Digit>> {
    if s.is_empty() {
        return Ok(Vec::new());
    }
    if s.contains('.') {
        s.split('.')
            .map(|t| {
                t.parse::<Digit>()
                    .map_err(|_| Error::Parse(alloc::format!("bad digit {t:?}")))
            })
            .collect()
    } else {
        s.chars()
            .map(|c| {
                c.to_digit(10)
                    .map(|d| d as Digit)
                    .ok_or_else(|| Error::Parse(alloc::format!("bad digit {c:?}")))
            })
            .collect()
    }
}

fn write_digits(f: &mut fmt::Formatter<'_>, digits: &[Digit], sep: bool) -> fmt::Result {
    for (i, d) in digits.iter().enumerate() {
        if sep && i > 0 {
            f.write_str(".")?;
        }
        write!(f, "{d}")?;
    }
    Ok(())
}

impl fmt::Display for EpSeq {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let sep = self.alphabet_max > 9;
        write_digits(f, &self.pre, sep)?;
        f.write_str("(")?;
        write_digits(f, &self.period, sep)?;
        f.write_str(")")
    }
}

impl FromStr for EpSeq {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        EpSeq::parse(s, None)
    }
}

/// Compares `s_{k+1} s_{k+2} ...` (conjugated when `conj`) against `t`.
///
/// Two eventually periodic sequences that agree on their first
/// `pre_a + pre_b + 2 lcm(per_a, per_b)` digits are equal.
fn cmp_tails(s: &EpSeq, k: usize, conj: bool, t: &EpSeq) -> Ordering {
    let pre_s = s.pre.len().saturating_sub(k);
    let ps = s.period.len();
    let pt = t.period.len();
    let bound = pre_s + t.pre.len() + 2 * ps.lcm(&pt);
    let m = s.alphabet_max;
    for i in 0..bound {
        let mut a = s.digit(k + i);
        if conj {
            a = m - a;
        }
        match a.cmp(&t.digit(i)) {
            Ordering::Equal => continue,
            o => return o,
        }
    }
    Ordering::Equal
}

/// `lex_cmp` as a free function.
pub fn lex_cmp(a: &EpSeq, b: &EpSeq) -> Ordering {
    a.lex_cmp(b)
}

/// Tests `shift(s, k) <= t` (or `<` when `strict`) for every `k >= from`
/// whose digit `s_k` passes `guard`.
///
/// Only finitely many distinct (digit, tail) pairs occur, so the check
/// ranges over `k <= max(from, |pre| + 1) + |period| - 1`.
pub fn all_shifts_le(
    s: &EpSeq,
    t: &EpSeq,
    strict: bool,
    from: usize,
    guard: DigitGuard,
) -> Result<bool> {
    all_tails_le(s, t, strict, from, guard, false)
}

/// As [`all_shifts_le`], but compares the conjugated tails
/// `conj(s_{k+1} s_{k+2} ...)` against `t`.
pub fn all_conjugate_shifts_le(
    s: &EpSeq,
    t: &EpSeq,
    strict: bool,
    from: usize,
    guard: DigitGuard,
) -> Result<bool> {
    all_tails_le(s, t, strict, from, guard, true)
}

fn all_tails_le(
    s: &EpSeq,
    t: &EpSeq,
    strict: bool,
    from: usize,
    guard: DigitGuard,
    conj: bool,
) -> Result<bool> {
    if s.alphabet_max != t.alphabet_max {
        return Err(Error::AlphabetMismatch {
            left: s.alphabet_max,
            right: t.alphabet_max,
        });
    }
    let from = from.max(1);
    let end = from.max(s.pre.len() + 1) + s.period.len() - 1;
    for k in from..=end {
        if !guard.admits(s.digit(k - 1)) {
            continue;
        }
        let ok = match cmp_tails(s, k, conj, t) {
            Ordering::Less => true,
            Ordering::Equal => !strict,
            Ordering::Greater => false,
        };
        if !ok {
            return Ok(false);
        }
    }
    Ok(true)
}
