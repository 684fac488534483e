mod common;

use common::*;
use univoque_core::algebraic::base_from_alpha;
use univoque_core::baseclass::{classify_base, expansions_of_one};
use univoque_core::components::{left_endpoint, right_endpoint, BaseSpec};
use univoque_core::expansion::{quasi_greedy_digits, run_digits, seq_value};
use univoque_core::field::FieldElem;
use univoque_core::oracle::count_at_depth;

use rand::Rng;
use std::cmp::Ordering;

#[test]
fn lexicographic_order_is_total() {
    prop_lex_order(11, CASES);
}

#[test]
fn conjugation_is_an_order_reversing_involution() {
    prop_conjugate(12, CASES);
}

#[test]
fn base_from_alpha_is_increasing() {
    prop_base_monotone(13, CASES);
}

#[test]
fn truncated_greedy_expansions_are_greedy() {
    prop_truncation_greedy(14, CASES);
}

#[test]
fn partial_sums_of_alpha_plus_tail_bound_reach_one() {
    prop_partial_sums(15, CASES);
}

#[test]
fn univoque_test_is_conjugation_symmetric() {
    prop_univoque_symmetry(16, CASES);
}

#[test]
fn forbidden_blocks_are_constant_on_stability_intervals() {
    prop_stability_invariance(17, CASES);
}

#[test]
fn forbidden_blocks_decide_univoque_sequences() {
    for (i, (_, q2)) in fixture_components().iter().enumerate() {
        sft_soundness(100 + i as u64, q2, CASES);
    }
}

#[test]
fn quasi_greedy_residual_stays_in_window() {
    let mut r = rng(18);
    let alphas = fixture_alphas();
    for _ in 0..CASES {
        let alpha = &alphas[r.gen_range(0..alphas.len())];
        let q = base_from_alpha(alpha).unwrap();
        let den = r.gen_range(1..=30);
        let num = r.gen_range(1..=den);
        let x = FieldElem::from_rational(&q, rat(num, den));
        let n = r.gen_range(1..=8);
        let run = run_digits(&x, &q, n, true).unwrap();
        // 0 < residual <= q^{-n} alpha_1/(q-1)
        assert_eq!(run.residual.sign(), Ordering::Greater);
        let m = alpha.alphabet_max();
        let top = &univoque_core::field::j_q_max(&q, m) * &FieldElem::q_pow(&q, -(n as i64));
        assert_ne!((&top - &run.residual).sign(), Ordering::Less);
    }
}

#[test]
fn alpha_values_sum_to_one() {
    let mut r = rng(19);
    for _ in 0..CASES / 5 {
        let m = r.gen_range(1..=2);
        let a = random_alpha(&mut r, m);
        let q = base_from_alpha(&a).unwrap();
        assert!(seq_value(&q, &a) == FieldElem::one(&q), "{a}");
        assert_eq!(quasi_greedy_digits(&FieldElem::one(&q), &q, 12).unwrap(), a.prefix(12));
    }
}

#[test]
fn endpoint_maps_are_inverse() {
    let mut specs = vec![BaseSpec::Integer(1), BaseSpec::Integer(2), BaseSpec::Integer(3)];
    for k in 1..=4usize {
        let mut per = vec![1u8; k];
        per.extend(std::iter::repeat_n(0, k));
        specs.push(BaseSpec::Alpha(univoque_core::EpSeq::periodic(1, per).unwrap()));
    }
    for s in specs {
        let r = right_endpoint(&s).unwrap();
        assert_eq!(left_endpoint(&r).unwrap(), s);
        let v1 = s.value().unwrap();
        let v2 = base_from_alpha(&r).unwrap();
        assert_eq!(v1.compare(&v2), Ordering::Less);
    }
}

#[test]
fn expansion_counts_agree_with_oracle() {
    // one expansion at integer bases for interior univoque points, two at
    // a univoque base for points of V_q \ U_q, growing counts otherwise
    let two = univoque_core::AlgebraicReal::from_integer(2);
    let x = FieldElem::from_rational(&two, rat(1, 3));
    assert_eq!(count_at_depth(&x, &two, 14).unwrap(), 1);
    let x = FieldElem::from_rational(&two, rat(1, 2));
    assert_eq!(count_at_depth(&x, &two, 14).unwrap(), 2);
    for a in ["(1100)", "(110)"] {
        let alpha = ep(a);
        let q = base_from_alpha(&alpha).unwrap();
        let fam = expansions_of_one(&classify_base(&alpha).unwrap()).unwrap();
        let c10 = count_at_depth(&FieldElem::one(&q), &q, 10).unwrap();
        let c14 = count_at_depth(&FieldElem::one(&q), &q, 14).unwrap();
        assert!(c10 < c14, "{a}: {c10} {c14}");
        let mut expected = std::collections::BTreeSet::new();
        for n in 0..14 {
            for s in fam.materialize(n).unwrap() {
                expected.insert(s.prefix(14));
            }
        }
        assert_eq!(c14, expected.len());
    }
}
