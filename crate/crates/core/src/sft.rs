//! Forbidden blocks describing `U'_q` as a subshift of finite type outside
//! `closure(U)`, and the topology of `U_q`.

use alloc::collections::BTreeSet;
use alloc::format;
use alloc::vec::Vec;
use core::fmt;

use crate::baseclass::{classify_base, BaseVariant};
use crate::components::{
    closure_component, resolve, stability_interval, BaseInput, BaseSpec, Component, Resolved,
    Stability, DEFAULT_K_MAX,
};
use crate::error::{Error, Result};
use crate::expansion::{is_quasi_greedy, is_univoque};
use crate::sequence::{all_conjugate_shifts_le, Digit, DigitGuard, EpSeq, Word};

/// `F ∪ conj(F)` with `F = { j a_1..a_k : j < alpha_1, a_1..a_k >= alpha_1..alpha_k }`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ForbiddenSet {
    pub alphabet_max: Digit,
    pub blocks: BTreeSet<Word>,
}

impl ForbiddenSet {
    /// Common block length `k + 1`.
    pub fn block_len(&self) -> usize {
        self.blocks.iter().next().map_or(0, Word::len)
    }

    pub fn conjugate(&self) -> ForbiddenSet {
        ForbiddenSet {
            alphabet_max: self.alphabet_max,
            blocks: self.blocks.iter().map(|b| b.conjugate(self.alphabet_max)).collect(),
        }
    }
}

impl fmt::Display for ForbiddenSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for b in &self.blocks {
            writeln!(f, "{b}")?;
        }
        Ok(())
    }
}

/// Component of a base outside `closure(U)`; errors inside it.
fn component(input: &BaseInput) -> Result<Component> {
    match stability_interval(input)? {
        Stability::Singleton(_) => Err(Error::InClosureU),
        Stability::Interval(c) => Ok(c),
    }
}

/// All words of length `k` over `{0..m}` that are `>= w` lexicographically.
fn words_at_least(w: &[Digit], m: Digit) -> Vec<Vec<Digit>> {
    let mut out = Vec::new();
    let mut cur = w.to_vec();
    loop {
        out.push(cur.clone());
        // increment as a base-(m+1) counter
        let mut i = cur.len();
        loop {
            if i == 0 {
                return out;
            }
            i -= 1;
            if cur[i] < m {
                cur[i] += 1;
                for d in &mut cur[i + 1..] {
                    *d = 0;
                }
                break;
            }
        }
    }
}

/// Forbidden blocks for the stability interval containing `q`.
pub fn forbidden_blocks(input: &BaseInput) -> Result<ForbiddenSet> {
    let comp = component(input)?;
    forbidden_blocks_of(&comp.q2)
}

/// Forbidden blocks built from a right endpoint `q2` in `V \ closure(U)`.
pub fn forbidden_blocks_of(q2: &EpSeq) -> Result<ForbiddenSet> {
    let cls = classify_base(q2)?;
    if cls.variant != BaseVariant::VOnly {
        return Err(Error::NotVOnly(format!("{q2} is {}", cls.variant.name())));
    }
    let k = cls.minimal_k.expect("VOnly carries k");
    let m = q2.alphabet_max();
    let head = q2.prefix(k);
    let mut blocks = BTreeSet::new();
    for tail in words_at_least(head.digits(), m) {
        for j in 0..m {
            let mut b = Vec::with_capacity(k + 1);
            b.push(j);
            b.extend_from_slice(&tail);
            let w = Word::new(b);
            blocks.insert(w.conjugate(m));
            blocks.insert(w);
        }
    }
    Ok(ForbiddenSet {
        alphabet_max: m,
        blocks,
    })
}

fn contains_window(digits: impl Fn(usize) -> Digit, starts: usize, f: &ForbiddenSet) -> bool {
    let n = f.block_len();
    let mut buf = Vec::with_capacity(n);
    for s in 0..starts {
        buf.clear();
        buf.extend((s..s + n).map(&digits));
        if f.blocks.contains(&Word::new(buf.clone())) {
            return true;
        }
    }
    false
}

/// Whether no window of `c` is a forbidden block.
pub fn subshift_member(c: &EpSeq, f: &ForbiddenSet) -> Result<bool> {
    check_alphabet(c.alphabet_max(), f)?;
    if f.blocks.is_empty() {
        return Ok(true);
    }
    // every window starting past the preperiod repeats with the period
    let starts = c.preperiod().len() + c.period().len();
    Ok(!contains_window(|i| c.digit(i), starts, f))
}

/// Finite-word variant: windows lying fully inside `w`.
pub fn word_member(w: &Word, f: &ForbiddenSet) -> Result<bool> {
    if let Some(&d) = w.digits().iter().find(|&&d| d > f.alphabet_max) {
        return Err(Error::DigitOutOfRange {
            digit: d as u32,
            alphabet_max: f.alphabet_max as u32,
        });
    }
    let n = f.block_len();
    if f.blocks.is_empty() || w.len() < n {
        return Ok(true);
    }
    let d = w.digits();
    Ok(!contains_window(|i| d[i], w.len() - n + 1, f))
}

fn check_alphabet(m: Digit, f: &ForbiddenSet) -> Result<()> {
    if m != f.alphabet_max {
        return Err(Error::AlphabetMismatch {
            left: m,
            right: f.alphabet_max,
        });
    }
    Ok(())
}

/// Summary of the topology of `U_q`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BaseTopology {
    /// `q` is an integer: neither `U_q` nor its closure is a Cantor set.
    NotCantorInteger,
    /// `q` in `closure(U) \ N`: `U_q` is not closed, its closure is Cantor.
    ClosureIsCantor,
    Cantor,
    /// Isolated points exist and are dense in `U_q`.
    IsolatedDense,
}

impl BaseTopology {
    pub fn name(self) -> &'static str {
        match self {
            BaseTopology::NotCantorInteger => "NotCantorInteger",
            BaseTopology::ClosureIsCantor => "ClosureIsCantor",
            BaseTopology::Cantor => "Cantor",
            BaseTopology::IsolatedDense => "IsolatedDense",
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PointTopology {
    Isolated,
    Accumulation,
    Condensation,
}

impl PointTopology {
    pub fn name(self) -> &'static str {
        match self {
            PointTopology::Isolated => "Isolated",
            PointTopology::Accumulation => "Accumulation",
            PointTopology::Condensation => "Condensation",
        }
    }
}

pub fn base_topology(input: &BaseInput) -> Result<BaseTopology> {
    match resolve(input, DEFAULT_K_MAX)? {
        Resolved::Limit(_) => return Ok(BaseTopology::ClosureIsCantor),
        Resolved::Class(cls) if cls.is_integer => return Ok(BaseTopology::NotCantorInteger),
        Resolved::Class(cls) if cls.in_closure_u() => return Ok(BaseTopology::ClosureIsCantor),
        _ => {}
    }
    let comp = component(input)?;
    Ok(match comp.q1 {
        BaseSpec::Integer(1 | 2) => BaseTopology::IsolatedDense,
        BaseSpec::Integer(_) => BaseTopology::Cantor,
        BaseSpec::Alpha(a) => match classify_base(&a)?.variant {
            BaseVariant::VOnly => BaseTopology::IsolatedDense,
            _ => BaseTopology::Cantor,
        },
    })
}

/// Topological type of the point of `U_q` whose unique expansion is `c`.
pub fn point_topology(c: &EpSeq, input: &BaseInput) -> Result<PointTopology> {
    let comp = match resolve(input, DEFAULT_K_MAX)? {
        Resolved::Limit(n) => {
            return Err(Error::Unsupported(format!(
                "q^({n}) has no eventually periodic alpha to test against"
            )))
        }
        Resolved::Class(cls) if cls.in_closure_u() => {
            if !is_univoque(c, &cls.alpha)? {
                return Err(Error::NotUnivoque);
            }
            return Ok(PointTopology::Condensation);
        }
        _ => component(input)?,
    };
    // U'_q is constant on (q1, q2]
    if !is_univoque(c, &comp.q2)? {
        return Err(Error::NotUnivoque);
    }
    let cc = closure_component(input)?;
    let trivial = matches!(cc.p1, BaseSpec::Integer(1 | 2));
    if !trivial && is_univoque(c, &cc.r)? {
        return Ok(PointTopology::Condensation);
    }
    let isolated = match &comp.q1 {
        BaseSpec::Integer(1) => true,
        BaseSpec::Integer(2) => !(c.is_zero() || *c == EpSeq::constant(2, 2)?),
        BaseSpec::Integer(_) => false,
        BaseSpec::Alpha(a1) => {
            classify_base(a1)?.variant == BaseVariant::VOnly
                && is_quasi_greedy(c, a1)?
                && all_conjugate_shifts_le(c, a1, false, 1, DigitGuard::Above(0))?
                && !is_univoque(c, a1)?
        }
    };
    Ok(if isolated {
        PointTopology::Isolated
    } else {
        PointTopology::Accumulation
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebraic::AlgebraicReal;
    use num_rational::BigRational;

    fn ep(s: &str) -> EpSeq {
        EpSeq::parse(s, None).unwrap()
    }

    fn set(m: Digit, words: &[&str]) -> ForbiddenSet {
        ForbiddenSet {
            alphabet_max: m,
            blocks: words.iter().map(|w| Word::parse(w).unwrap()).collect(),
        }
    }

    #[test]
    fn forbidden_block_examples() {
        let f = forbidden_blocks(&BaseInput::Alpha(ep("(1100)"))).unwrap();
        assert_eq!(f, set(1, &["011", "100"]));
        let f = forbidden_blocks(&BaseInput::Alpha(ep("(20)"))).unwrap();
        assert_eq!(f, set(2, &["02", "12", "20", "10"]));
        let f = forbidden_blocks(&BaseInput::Alpha(ep("(11010010)"))).unwrap();
        assert_eq!(
            f,
            set(1, &["01101", "01110", "01111", "10010", "10001", "10000"])
        );
        // 3/2 sits in (1, G]
        let q = AlgebraicReal::from_rational(BigRational::new(3.into(), 2.into()));
        let f = forbidden_blocks(&BaseInput::Value(q)).unwrap();
        assert_eq!(f, set(1, &["01", "10"]));
        assert_eq!(
            forbidden_blocks(&BaseInput::Alpha(ep("(110)"))),
            Err(Error::InClosureU)
        );
    }

    #[test]
    fn forbidden_sets_are_conjugation_closed() {
        for a in ["(10)", "(1100)", "(20)", "(11010010)", "(2101)"] {
            let f = forbidden_blocks(&BaseInput::Alpha(ep(a))).unwrap();
            assert_eq!(f.conjugate(), f);
        }
    }

    #[test]
    fn membership_examples() {
        let f = set(1, &["011", "100"]);
        assert!(subshift_member(&ep("(10)"), &f).unwrap());
        assert!(!subshift_member(&ep("1(0)"), &f).unwrap());
        assert!(subshift_member(&ep("(0)"), &f).unwrap());
        assert!(subshift_member(&ep("0(10)"), &f).unwrap());
        assert!(!subshift_member(&ep("0(1100)"), &f).unwrap());
        assert!(!subshift_member(&ep("(1110)"), &f).unwrap());
        assert!(word_member(&Word::parse("1010").unwrap(), &f).unwrap());
        assert!(!word_member(&Word::parse("1100").unwrap(), &f).unwrap());
        assert!(subshift_member(&ep("(2)"), &f).is_err());
    }

    #[test]
    fn membership_matches_univoque_test() {
        let f = forbidden_blocks_of(&ep("(1100)")).unwrap();
        let alpha = ep("(1100)");
        for s in ["(10)", "0(1100)", "(110)", "01(0)", "(1)", "00(01)", "1(10)", "(101100)"] {
            let c = ep(s).with_alphabet(1).unwrap();
            assert_eq!(
                subshift_member(&c, &f).unwrap(),
                is_univoque(&c, &alpha).unwrap(),
                "{s}"
            );
        }
    }

    #[test]
    fn base_topology_examples() {
        let t = |s: &str| base_topology(&BaseInput::Alpha(ep(s))).unwrap();
        assert_eq!(
            base_topology(&BaseInput::Value(AlgebraicReal::from_integer(3))).unwrap(),
            BaseTopology::NotCantorInteger
        );
        assert_eq!(t("(1100)"), BaseTopology::IsolatedDense);
        assert_eq!(t("(30)"), BaseTopology::Cantor);
        assert_eq!(t("(110)"), BaseTopology::ClosureIsCantor);
        assert_eq!(t("(1110)"), BaseTopology::ClosureIsCantor);
        assert_eq!(t("(10)"), BaseTopology::IsolatedDense);
        assert_eq!(t("(20)"), BaseTopology::IsolatedDense);
        // (p(3), q(3)] has q1 = p(3) = (110) ClosureOnly
        assert_eq!(t("(111000)"), BaseTopology::Cantor);
        assert_eq!(
            base_topology(&BaseInput::SmallestUnivoque(1)).unwrap(),
            BaseTopology::ClosureIsCantor
        );
    }

    #[test]
    fn point_topology_examples() {
        let r2 = BaseInput::Alpha(ep("(11010010)"));
        assert_eq!(
            point_topology(&ep("0(1100)"), &r2).unwrap(),
            PointTopology::Isolated
        );
        assert_eq!(point_topology(&ep("(0)"), &r2).unwrap(), PointTopology::Accumulation);
        assert_eq!(
            point_topology(&ep("(1110)"), &r2),
            Err(Error::NotUnivoque)
        );
        // q in (r(3), s(3)]: p1 = p(3), r = q(3) = (111000)
        let s3 = right_endpoint_of("(111001000110)");
        let q = BaseInput::Alpha(s3);
        assert_eq!(point_topology(&ep("(10)"), &q).unwrap(), PointTopology::Condensation);
        assert_eq!(
            point_topology(&ep("(10)"), &BaseInput::Alpha(ep("(110)"))).unwrap(),
            PointTopology::Condensation
        );
        // (1, G]: only the endpoints, both isolated
        let q = BaseInput::Value(AlgebraicReal::from_rational(BigRational::new(3.into(), 2.into())));
        assert_eq!(point_topology(&ep("(1)"), &q).unwrap(), PointTopology::Isolated);
        // (2, (20)]: 0^n 1^inf isolated, 0^inf an accumulation point
        let q = BaseInput::Alpha(ep("(20)"));
        assert_eq!(point_topology(&ep("0(1)").with_alphabet(2).unwrap(), &q).unwrap(), PointTopology::Isolated);
        assert_eq!(point_topology(&EpSeq::zero(2), &q).unwrap(), PointTopology::Accumulation);
    }

    fn right_endpoint_of(s: &str) -> EpSeq {
        crate::components::right_endpoint(&BaseSpec::Alpha(ep(s))).unwrap()
    }

    #[test]
    fn p_q_r_chain_for_k3() {
        // p(3) = (110), q(3) = (111000), r(3) = (111011000100)
        assert_eq!(
            crate::components::right_endpoint(&BaseSpec::Alpha(ep("(110)"))).unwrap(),
            ep("(111000)")
        );
        assert_eq!(right_endpoint_of("(111000)"), ep("(111001000110)"));
    }
}
