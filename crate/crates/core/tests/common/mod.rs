//! Randomized checks shared by the property tests and the acceptance suite.
//! Every check is seeded, so a failure reproduces exactly.
#![allow(dead_code)]

use std::cmp::Ordering;

use num_bigint::BigInt;
use num_rational::BigRational;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use univoque_core::algebraic::{base_from_alpha, check_alpha, AlgebraicReal};
use univoque_core::baseclass::{classify_base, BaseVariant};
use univoque_core::components::{BaseInput, BaseSpec};
use univoque_core::expansion::{greedy_digits, is_greedy, is_univoque};
use univoque_core::field::FieldElem;
use univoque_core::sft::{forbidden_blocks, forbidden_blocks_of, subshift_member};
use univoque_core::{Digit, EpSeq, Word};

pub const CASES: usize = 500;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn ep(s: &str) -> EpSeq {
    EpSeq::parse(s, None).unwrap()
}

pub fn rat(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

pub fn random_digits(r: &mut ChaCha8Rng, m: Digit, len: usize) -> Vec<Digit> {
    (0..len).map(|_| r.gen_range(0..=m)).collect()
}

pub fn random_epseq(r: &mut ChaCha8Rng, m: Digit) -> EpSeq {
    let pre = r.gen_range(0..=4);
    let per = r.gen_range(1..=6);
    let pre = random_digits(r, m, pre);
    let per = random_digits(r, m, per);
    EpSeq::new(m, pre, per).unwrap()
}

/// An admissible `alpha` (a valid quasi-greedy expansion of 1).
pub fn random_alpha(r: &mut ChaCha8Rng, m: Digit) -> EpSeq {
    loop {
        let len = r.gen_range(1..=7);
        let mut per = random_digits(r, m, len);
        per[0] = m;
        let pre = if r.gen_bool(0.3) {
            let n = r.gen_range(1..=3);
            let mut p = random_digits(r, m, n);
            p[0] = m;
            per[0] = r.gen_range(0..=m);
            p
        } else {
            Vec::new()
        };
        let Ok(s) = EpSeq::new(m, pre, per) else { continue };
        if s.first() == m && check_alpha(&s).is_ok() {
            return s;
        }
    }
}

/// Digit-by-digit comparison over a prefix long enough to decide.
fn naive_cmp(a: &EpSeq, b: &EpSeq) -> Ordering {
    let n = a.preperiod().len().max(b.preperiod().len()) + a.period().len() * b.period().len() + 1;
    a.prefix(n).digits().cmp(b.prefix(n).digits())
}

pub fn prop_lex_order(seed: u64, cases: usize) {
    let mut r = rng(seed);
    for _ in 0..cases {
        let m = r.gen_range(1..=3);
        let (a, b, c) = (random_epseq(&mut r, m), random_epseq(&mut r, m), random_epseq(&mut r, m));
        let ab = a.lex_cmp(&b);
        assert_eq!(ab, naive_cmp(&a, &b), "{a} vs {b}");
        assert_eq!(ab, b.lex_cmp(&a).reverse());
        assert_eq!(ab == Ordering::Equal, a == b);
        assert_eq!(a.lex_cmp(&a), Ordering::Equal);
        if ab != Ordering::Greater && b.lex_cmp(&c) != Ordering::Greater {
            assert_ne!(a.lex_cmp(&c), Ordering::Greater, "{a} {b} {c}");
        }
    }
}

pub fn prop_conjugate(seed: u64, cases: usize) {
    let mut r = rng(seed);
    for _ in 0..cases {
        let m = r.gen_range(1..=3);
        let a = random_epseq(&mut r, m);
        let b = random_epseq(&mut r, m);
        assert_eq!(a.conjugate().conjugate(), a);
        assert_eq!(a.conjugate().lex_cmp(&b.conjugate()), a.lex_cmp(&b).reverse());
        let w = Word::new(random_digits(&mut r, m, 5));
        assert_eq!(w.conjugate(m).conjugate(m), w);
    }
}

pub fn prop_base_monotone(seed: u64, cases: usize) {
    let mut r = rng(seed);
    for _ in 0..cases {
        let m = r.gen_range(1..=2);
        let a = random_alpha(&mut r, m);
        let b = random_alpha(&mut r, m);
        let qa = base_from_alpha(&a).unwrap();
        let qb = base_from_alpha(&b).unwrap();
        assert_eq!(qa.compare(&qb), a.lex_cmp(&b), "{a} vs {b}");
    }
}

/// Bases with a certified eventually periodic `alpha`.
pub fn fixture_alphas() -> Vec<EpSeq> {
    ["(10)", "(1100)", "(110)", "(1110)", "(11010010)", "(20)", "(2101)", "(1)", "(2)", "(210)", "(2110)"]
        .iter()
        .map(|s| ep(s))
        .collect()
}

pub fn prop_truncation_greedy(seed: u64, cases: usize) {
    let mut r = rng(seed);
    let bases: Vec<(EpSeq, AlgebraicReal)> = fixture_alphas()
        .into_iter()
        .map(|a| {
            let q = base_from_alpha(&a).unwrap();
            (a, q)
        })
        .collect();
    for _ in 0..cases {
        let (alpha, q) = &bases[r.gen_range(0..bases.len())];
        let den = r.gen_range(1..=40);
        let num = r.gen_range(0..=den);
        let x = FieldElem::from_rational(q, rat(num, den));
        let n = r.gen_range(1..=10);
        let d = greedy_digits(&x, q, n).unwrap();
        let t = EpSeq::finite(alpha.alphabet_max(), &d).unwrap();
        assert!(is_greedy(&t, alpha).unwrap(), "{num}/{den} in base {alpha}: {d}");
    }
}

pub fn prop_partial_sums(seed: u64, cases: usize) {
    let mut r = rng(seed);
    let bases: Vec<(EpSeq, AlgebraicReal)> = fixture_alphas()
        .into_iter()
        .map(|a| {
            let q = base_from_alpha(&a).unwrap();
            (a, q)
        })
        .collect();
    for _ in 0..cases {
        let (alpha, q) = &bases[r.gen_range(0..bases.len())];
        let n = r.gen_range(1..=32);
        let s = FieldElem::digit_sum(q, alpha.prefix(n).digits());
        let lhs = &s + &FieldElem::q_pow(q, -(n as i64));
        assert_ne!(lhs.cmp(&FieldElem::one(q)), Ordering::Less, "{alpha}, n = {n}");
    }
}

pub fn prop_univoque_symmetry(seed: u64, cases: usize) {
    let mut r = rng(seed);
    let alphas = fixture_alphas();
    for _ in 0..cases {
        let alpha = &alphas[r.gen_range(0..alphas.len())];
        let c = random_epseq(&mut r, alpha.alphabet_max());
        assert_eq!(
            is_univoque(&c, alpha).unwrap(),
            is_univoque(&c.conjugate(), alpha).unwrap(),
            "{c} in base {alpha}"
        );
    }
}

/// Components `(q1, q2)` of `(1, inf) \ V` used as fixtures.
pub fn fixture_components() -> Vec<(BaseSpec, EpSeq)> {
    vec![
        (BaseSpec::Integer(1), ep("(10)")),
        (BaseSpec::Alpha(ep("(10)")), ep("(1100)")),
        (BaseSpec::Alpha(ep("(1100)")), ep("(11010010)")),
        (BaseSpec::Alpha(ep("(110)")), ep("(111000)")),
        (BaseSpec::Integer(2), ep("(20)")),
        (BaseSpec::Alpha(ep("(20)")), ep("(2101)")),
    ]
}

/// An admissible sequence strictly between `lo` and `hi`, or `None`.
fn sample_between(r: &mut ChaCha8Rng, lo: &EpSeq, hi: &EpSeq) -> Option<EpSeq> {
    let m = hi.alphabet_max();
    let j = r.gen_range(1..=hi.period().len() + hi.preperiod().len() + 2);
    let mut pre = hi.prefix(j).into_digits();
    if pre[j - 1] > 0 && r.gen_bool(0.7) {
        pre[j - 1] -= 1;
    }
    let len = r.gen_range(1..=5);
    let per = random_digits(r, m, len);
    let s = EpSeq::new(m, pre, per).ok()?;
    let inside = lo.lex_cmp(&s) == Ordering::Less && s.lex_cmp(hi) == Ordering::Less;
    (inside && check_alpha(&s).is_ok()).then_some(s)
}

pub fn prop_stability_invariance(seed: u64, cases: usize) {
    let mut r = rng(seed);
    let comps = fixture_components();
    let expected: Vec<_> = comps.iter().map(|(_, q2)| forbidden_blocks_of(q2).unwrap()).collect();
    let mut done = 0;
    let mut tries = 0;
    while done < cases {
        tries += 1;
        assert!(tries < 200 * cases, "sampler starved");
        let i = r.gen_range(0..comps.len());
        let (q1, q2) = &comps[i];
        let lo = q1.alpha().unwrap();
        let Some(s) = sample_between(&mut r, &lo, q2) else { continue };
        // no element of V lies strictly inside a component
        assert_eq!(classify_base(&s).unwrap().variant, BaseVariant::OutsideV, "{s}");
        assert_eq!(forbidden_blocks(&BaseInput::Alpha(s)).unwrap(), expected[i]);
        done += 1;
    }
    // a few numeric bases as well
    for (i, (q1, q2)) in comps.iter().enumerate() {
        let eps = rat(1, 1_000_000);
        let (_, lo) = q1.value().unwrap().approx(&eps);
        let (hi, _) = base_from_alpha(q2).unwrap().approx(&eps);
        for t in 1..=3 {
            let q = &lo + &(&(&hi - &lo) * rat(t, 4));
            let f = forbidden_blocks(&BaseInput::Value(AlgebraicReal::from_rational(q))).unwrap();
            assert_eq!(f, expected[i]);
        }
    }
}

/// `is_univoque` against `alpha(q2)` agrees with avoiding the forbidden
/// blocks, on random {0,1} sequences.
pub fn sft_soundness(seed: u64, q2: &EpSeq, cases: usize) {
    let mut r = rng(seed);
    let f = forbidden_blocks_of(q2).unwrap();
    let m = q2.alphabet_max();
    for _ in 0..cases {
        let c = random_epseq(&mut r, m);
        assert_eq!(
            is_univoque(&c, q2).unwrap(),
            subshift_member(&c, &f).unwrap(),
            "{c} against {q2}"
        );
    }
}
