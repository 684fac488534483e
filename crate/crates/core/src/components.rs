//! Connected components of `(1, inf) \ V`: endpoint maps, maximal stability
//! intervals, the doubling construction and the smallest univoque numbers,
//! and the cardinality of `U_q`.

use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;

use crate::algebraic::{base_from_alpha, solve_expansion_of_one, AlgebraicReal};
use crate::baseclass::{alpha_of_one, classify_base, greedy_of_one, AlphaOfOne, BaseClass, BaseVariant};
use crate::error::{Error, Result};
use crate::expansion::quasi_greedy_digits;
use crate::field::FieldElem;
use crate::poly::Poly;
use crate::sequence::{Digit, EpSeq, Word};

/// Default bound on the half-period searched when locating a component.
pub const DEFAULT_K_MAX: usize = 64;

/// Default number of doublings used when deciding cardinality near `q'`
/// and `q''`.
pub const DEFAULT_DEPTH: usize = 6;

/// A left endpoint: a positive integer (`1` standing for `0^inf`) or a base
/// given by its quasi-greedy expansion of 1.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum BaseSpec {
    Integer(u32),
    Alpha(EpSeq),
}

impl BaseSpec {
    /// `alpha(q)`, with `1 ~ 0^inf`.
    pub fn alpha(&self) -> Result<EpSeq> {
        match self {
            BaseSpec::Integer(1) => Ok(EpSeq::zero(1)),
            BaseSpec::Integer(n) => {
                let d = digit_of(*n - 1)?;
                EpSeq::constant(d, d)
            }
            BaseSpec::Alpha(a) => Ok(a.clone()),
        }
    }

    pub fn value(&self) -> Result<AlgebraicReal> {
        match self {
            BaseSpec::Integer(n) => Ok(AlgebraicReal::from_integer(*n as i64)),
            BaseSpec::Alpha(a) => base_from_alpha(a),
        }
    }

    /// Integers are reported as such even when given as `(n-1)^inf`.
    pub fn normalized(self) -> BaseSpec {
        match &self {
            BaseSpec::Alpha(a)
                if a.preperiod().is_empty() && a.period() == [a.alphabet_max()] =>
            {
                BaseSpec::Integer(a.alphabet_max() as u32 + 1)
            }
            _ => self,
        }
    }
}

impl fmt::Display for BaseSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BaseSpec::Integer(n) => write!(f, "{n}"),
            BaseSpec::Alpha(a) => write!(f, "{a}"),
        }
    }
}

fn digit_of(n: u32) -> Result<Digit> {
    Digit::try_from(n).map_err(|_| Error::Unsupported(format!("digit {n} exceeds 255")))
}

/// A base as accepted by the component queries.
#[derive(Clone, Debug)]
pub enum BaseInput {
    Alpha(EpSeq),
    Value(AlgebraicReal),
    /// The least univoque number in `(n, n+1)`; `n = 1` is `q'`, `n = 2`
    /// is `q''`.
    SmallestUnivoque(u32),
}

/// `alpha(q2)` for the least element `q2` of `V` above `q1`.
pub fn right_endpoint(q1: &BaseSpec) -> Result<EpSeq> {
    let a = match q1 {
        BaseSpec::Integer(0) => return Err(Error::NotLeftEndpoint("0".into())),
        BaseSpec::Integer(n) => {
            let d = digit_of(*n)?;
            return EpSeq::periodic(d, vec![d, 0]);
        }
        BaseSpec::Alpha(a) => a,
    };
    let cls = classify_base(a)?;
    if cls.is_integer {
        return right_endpoint(&BaseSpec::Integer(a.alphabet_max() as u32 + 1));
    }
    match cls.variant {
        BaseVariant::ClosureOnly | BaseVariant::VOnly => {}
        v => {
            return Err(Error::NotLeftEndpoint(format!("{a} is {}", v.name())));
        }
    }
    let beta = greedy_of_one(a)?;
    let m = beta.last_nonzero().ok_or(Error::NotFiniteGreedy)?;
    let b = beta.prefix(m);
    let mut per = b.digits().to_vec();
    per.extend_from_slice(b.conjugate(a.alphabet_max()).digits());
    EpSeq::periodic(a.alphabet_max(), per)
}

/// The left endpoint `q1` of the component of `(1, inf) \ V` whose right
/// endpoint has quasi-greedy expansion `q2_alpha`.
pub fn left_endpoint(q2_alpha: &EpSeq) -> Result<BaseSpec> {
    let cls = classify_base(q2_alpha)?;
    if cls.variant != BaseVariant::VOnly {
        return Err(Error::NotVOnly(format!("{q2_alpha} is {}", cls.variant.name())));
    }
    let k = cls.minimal_k.expect("VOnly carries k");
    let mut w = q2_alpha.prefix(k).into_digits();
    w[k - 1] -= 1;
    let s = EpSeq::periodic(q2_alpha.alphabet_max(), w)?;
    if s.is_zero() {
        return Ok(BaseSpec::Integer(1));
    }
    if s.preperiod().is_empty() && s.period().len() == 1 {
        return Ok(BaseSpec::Integer(s.period()[0] as u32 + 1));
    }
    Ok(BaseSpec::Alpha(s))
}

/// `tau_1 ... tau_n` of the truncated Thue-Morse sequence.
pub fn thue_morse_prefix(n: usize) -> Word {
    let mut t: Vec<Digit> = Vec::with_capacity(n);
    for i in 1..=n {
        if i.is_power_of_two() {
            t.push(1);
        } else {
            let p = 1usize << (usize::BITS - 1 - i.leading_zeros());
            t.push(1 - t[i - p - 1]);
        }
    }
    Word::new(t)
}

/// `lambda_i = tau_i + tau_{2i-1}`.
pub fn lambda_prefix(n: usize) -> Word {
    let t = thue_morse_prefix(2 * n);
    let t = t.digits();
    Word::new((1..=n).map(|i| t[i - 1] + t[2 * i - 2]).collect())
}

/// Output of [`doubling_construction`].
#[derive(Clone, Debug)]
pub struct Doubling {
    pub alphabet_max: Digit,
    /// Length of the seed block `beta_1 ... beta_m`.
    pub m: usize,
    /// `c_1 ... c_{2^K m}`.
    pub prefix: Word,
    /// `chain[i]` is the quasi-greedy expansion of 1 at the `i+1`-th right
    /// endpoint above the seed; its greedy expansion of 1 is
    /// `c_1 ... c_{2^{i+1} m} 0^inf`.
    pub chain: Vec<EpSeq>,
}

/// The seed block `beta_1 ... beta_m`. An integer `n` stands for the least
/// element `(n0)^inf` of `V` above it.
fn doubling_seed(seed: &BaseSpec) -> Result<(EpSeq, Word)> {
    let alpha = match seed {
        BaseSpec::Integer(_) => right_endpoint(seed)?,
        BaseSpec::Alpha(a) => {
            let cls = classify_base(a)?;
            if cls.is_integer {
                return doubling_seed(&BaseSpec::Integer(a.alphabet_max() as u32 + 1));
            }
            if !matches!(cls.variant, BaseVariant::ClosureOnly | BaseVariant::VOnly) {
                return Err(Error::NotLeftEndpoint(format!("{a} is {}", cls.variant.name())));
            }
            a.clone()
        }
    };
    let beta = greedy_of_one(&alpha)?;
    let m = beta.last_nonzero().ok_or(Error::NotFiniteGreedy)?;
    Ok((alpha, beta.prefix(m)))
}

/// `c_{L+1} ... c_{2L-1} = conj(c_1 ... c_{L-1})`, `c_{2L} = conj(c_L) + 1`.
fn double_once(c: &mut Vec<Digit>, m: Digit) {
    let l = c.len();
    for i in 0..l - 1 {
        c.push(m - c[i]);
    }
    c.push(m - c[l - 1] + 1);
}

pub fn doubling_construction(seed: &BaseSpec, k: usize) -> Result<Doubling> {
    let (alpha, beta) = doubling_seed(seed)?;
    let m = alpha.alphabet_max();
    let mut c = beta.into_digits();
    let seed_len = c.len();
    let mut chain = Vec::with_capacity(k);
    let mut cur = BaseSpec::Alpha(alpha);
    for _ in 0..k {
        double_once(&mut c, m);
        let next = right_endpoint(&cur)?;
        chain.push(next.clone());
        cur = BaseSpec::Alpha(next);
    }
    Ok(Doubling {
        alphabet_max: m,
        m: seed_len,
        prefix: Word::new(c),
        chain,
    })
}

/// Rigorous bounds `lower < q* < upper` on the limit of a doubling chain.
#[derive(Clone, Debug)]
pub struct Enclosure {
    /// The last chain base.
    pub lower: AlgebraicReal,
    /// The root of `sum_{i <= L} c_i Q^{-i} + Q^{-L} = 1`.
    pub upper: AlgebraicReal,
    pub depth: usize,
}

impl Enclosure {
    /// Rational bounds, each end within `eps` of the algebraic one.
    pub fn rational_bounds(&self, eps: &BigRational) -> (BigRational, BigRational) {
        let (lo, _) = self.lower.approx(eps);
        let (_, hi) = self.upper.approx(eps);
        (lo, hi)
    }
}

fn enclosure_from(d: &Doubling) -> Result<Enclosure> {
    let k = d.chain.len();
    let last = d.chain.last().ok_or_else(|| Error::Unsupported("depth must be >= 1".into()))?;
    let lower = base_from_alpha(last)?;
    let c = d.prefix.digits();
    let mut w = c.to_vec();
    let l = w.len();
    w[l - 1] += 1;
    let top = d.alphabet_max.max(w[l - 1]);
    let upper = solve_expansion_of_one(&EpSeq::new(top, w, vec![0])?)?;
    // The tail after position L starts with conj(c_1) = 0, so it is worth
    // at most m / (Q (Q - 1)) in units of Q^{-L}; that is below 1 as soon as
    // m < Q (Q - 1), and Q (Q - 1) is increasing, so checking at the lower
    // bound suffices.
    let m = BigRational::from_integer(BigInt::from(d.alphabet_max));
    let check = Poly::new(vec![-m, BigRational::from_integer((-1).into()), BigRational::from_integer(1.into())]);
    let mut lo = lower.clone();
    if lo.sign_of(&check) != Ordering::Greater {
        return Err(Error::Unsupported(format!(
            "enclosure certificate fails at depth {k}"
        )));
    }
    Ok(Enclosure {
        lower,
        upper,
        depth: k,
    })
}

/// Doubling chain from `seed` with a certified enclosure of its limit.
pub fn limit_enclosure(seed: &BaseSpec, depth: usize) -> Result<Enclosure> {
    enclosure_from(&doubling_construction(seed, depth)?)
}

/// The least univoque number `q^(n)` in `(n, n+1)`: the first `digits`
/// digits of its unique expansion of 1, and an enclosure from `depth`
/// doublings.
pub fn smallest_univoque(n: u32, digits: usize, depth: usize) -> Result<(Enclosure, Word)> {
    if n == 0 {
        return Err(Error::OutOfRange);
    }
    let seed = BaseSpec::Integer(n);
    let mut k = depth.max(1);
    while 2usize << k < digits {
        k += 1;
    }
    let d = doubling_construction(&seed, k)?;
    let word = d.prefix.prefix(digits);
    let enc = if k == depth.max(1) {
        enclosure_from(&d)?
    } else {
        limit_enclosure(&seed, depth.max(1))?
    };
    Ok((enc, word))
}

/// A component `(q1, q2)` of `(1, inf) \ V`; `(q1, q2]` is a maximal
/// stability interval.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Component {
    pub q1: BaseSpec,
    pub q2: EpSeq,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Stability {
    /// `q` lies in `closure(U)`.
    Singleton(String),
    Interval(Component),
}

/// The classification of a base input, where available.
#[derive(Clone, Debug)]
pub enum Resolved {
    Class(BaseClass),
    /// `q^(n)`, univoque with an aperiodic `alpha`.
    Limit(u32),
    /// `alpha(q)` is not eventually periodic within the budget; the prefix
    /// is kept for the component search.
    Aperiodic { q: AlgebraicReal, prefix: Word },
}

pub fn resolve(input: &BaseInput, k_max: usize) -> Result<Resolved> {
    match input {
        BaseInput::Alpha(a) => Ok(Resolved::Class(classify_base(a)?)),
        BaseInput::SmallestUnivoque(n) => {
            if *n == 0 {
                return Err(Error::OutOfRange);
            }
            Ok(Resolved::Limit(*n))
        }
        BaseInput::Value(q) => match alpha_of_one(q, 2 * k_max + 2)? {
            AlphaOfOne::Certified(a) => Ok(Resolved::Class(classify_base(&a)?)),
            AlphaOfOne::Prefix(w) => Ok(Resolved::Aperiodic {
                q: q.clone(),
                prefix: w,
            }),
        },
    }
}

/// Searches `w = (u conj(u))^inf` with `u` one of `prefix[..k]`,
/// `prefix[..k]^+`, keeping the first `w` for which `accept` certifies
/// `q in (left_endpoint(w), w]`.
fn locate_component<F>(prefix: &[Digit], m: Digit, k_max: usize, mut accept: F) -> Result<Component>
where
    F: FnMut(&BaseSpec, &EpSeq) -> Result<bool>,
{
    for k in 1..=k_max.min(prefix.len()) {
        let base = &prefix[..k];
        let mut cands = vec![base.to_vec()];
        if base[k - 1] < m {
            let mut up = base.to_vec();
            up[k - 1] += 1;
            cands.push(up);
        }
        for u in cands {
            let mut per = u.clone();
            per.extend(u.iter().map(|&d| m - d));
            let w = EpSeq::periodic(m, per)?;
            let Ok(cls) = classify_base(&w) else { continue };
            if cls.variant != BaseVariant::VOnly {
                continue;
            }
            let left = left_endpoint(&w)?;
            if accept(&left, &w)? {
                return Ok(Component { q1: left, q2: w });
            }
        }
    }
    Err(Error::Unclassifiable(format!(
        "no component found with half-period up to {k_max}"
    )))
}

/// Component of `(1, inf) \ V` containing a base outside `V` given by its
/// eventually periodic `alpha`.
fn component_of_alpha(alpha: &EpSeq, k_max: usize) -> Result<Component> {
    let m = alpha.alphabet_max();
    let prefix = alpha.prefix(k_max + 1);
    locate_component(prefix.digits(), m, k_max, |left, w| {
        let la = left.alpha()?;
        Ok(la.lex_cmp(alpha) == Ordering::Less && alpha.lex_cmp(w) == Ordering::Less)
    })
}

fn component_of_value(q: &AlgebraicReal, prefix: &Word, k_max: usize) -> Result<Component> {
    let m = q.alphabet_max()?;
    locate_component(prefix.digits(), m, k_max, |left, w| {
        let lv = left.value()?;
        if lv.compare(q) != Ordering::Less {
            return Ok(false);
        }
        Ok(base_from_alpha(w)?.compare(q) != Ordering::Less)
    })
}

/// The maximal stability interval containing `q`.
pub fn stability_interval(input: &BaseInput) -> Result<Stability> {
    stability_interval_with(input, DEFAULT_K_MAX)
}

pub fn stability_interval_with(input: &BaseInput, k_max: usize) -> Result<Stability> {
    match resolve(input, k_max)? {
        Resolved::Limit(n) => Ok(Stability::Singleton(format!("q^({n})"))),
        Resolved::Class(cls) => match cls.variant {
            BaseVariant::Univoque | BaseVariant::ClosureOnly => {
                Ok(Stability::Singleton(BaseSpec::Alpha(cls.alpha).normalized().to_string()))
            }
            BaseVariant::VOnly => Ok(Stability::Interval(Component {
                q1: left_endpoint(&cls.alpha)?,
                q2: cls.alpha,
            })),
            BaseVariant::OutsideV => {
                Ok(Stability::Interval(component_of_alpha(&cls.alpha, k_max)?))
            }
        },
        Resolved::Aperiodic { q, prefix } => {
            Ok(Stability::Interval(component_of_value(&q, &prefix, k_max)?))
        }
    }
}


/// The component `(p1, p2)` of `(1, inf) \ closure(U)` containing `q`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClosureComponent {
    pub p1: BaseSpec,
    /// From the stability right endpoint down to the last `V \ closure(U)`
    /// base above `p1`, via iterated [`left_endpoint`].
    pub chain: Vec<EpSeq>,
    /// The least element of `(p1, p2) ∩ V`.
    pub r: EpSeq,
}

pub fn closure_component(input: &BaseInput) -> Result<ClosureComponent> {
    let comp = match stability_interval(input)? {
        Stability::Singleton(_) => return Err(Error::InClosureU),
        Stability::Interval(c) => c,
    };
    let mut chain = vec![comp.q2.clone()];
    let mut left = comp.q1;
    loop {
        let a = match &left {
            BaseSpec::Integer(_) => break,
            BaseSpec::Alpha(a) => a.clone(),
        };
        let cls = classify_base(&a)?;
        if cls.variant != BaseVariant::VOnly {
            break;
        }
        chain.push(a.clone());
        left = left_endpoint(&a)?;
    }
    let p1 = left.normalized();
    let r = right_endpoint(&p1)?;
    Ok(ClosureComponent { p1, chain, r })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Cardinality {
    EndpointsOnly,
    CountablyInfinite,
    Continuum,
}

impl Cardinality {
    pub fn name(self) -> &'static str {
        match self {
            Cardinality::EndpointsOnly => "EndpointsOnly",
            Cardinality::CountablyInfinite => "CountablyInfinite",
            Cardinality::Continuum => "Continuum",
        }
    }
}

/// Decides `q < q^(n)` or `q > q^(n)` by refining the doubling enclosure.
fn side_of_limit(q: &AlgebraicReal, n: u32, max_depth: usize) -> Result<Ordering> {
    let seed = BaseSpec::Integer(n);
    let (alpha, beta) = doubling_seed(&seed)?;
    let m = alpha.alphabet_max();
    let mut d = Doubling {
        alphabet_max: m,
        m: beta.len(),
        prefix: beta,
        chain: Vec::new(),
    };
    let mut cur = BaseSpec::Alpha(alpha);
    let mut c = d.prefix.clone().into_digits();
    for _ in 0..max_depth {
        double_once(&mut c, m);
        let next = right_endpoint(&cur)?;
        d.chain.push(next.clone());
        d.prefix = Word::new(c.clone());
        cur = BaseSpec::Alpha(next);
        let enc = enclosure_from(&d)?;
        if q.compare(&enc.lower) != Ordering::Greater {
            return Ok(Ordering::Less);
        }
        if q.compare(&enc.upper) != Ordering::Less {
            return Ok(Ordering::Greater);
        }
    }
    Err(Error::UndecidedAtPrecision(format!(
        "q lies inside the depth-{max_depth} enclosure of q^({n})"
    )))
}

/// The cardinality of `U_q`: endpoints only on `(1, G]`, countably
/// infinite on `(G, q') ∪ (2, q'')`, continuum on `[q', 2] ∪ [q'', inf)`.
pub fn cardinality_of_uq(input: &BaseInput, max_depth: usize) -> Result<Cardinality> {
    let q = match input {
        BaseInput::SmallestUnivoque(n) if *n >= 1 => return Ok(Cardinality::Continuum),
        BaseInput::SmallestUnivoque(_) => return Err(Error::OutOfRange),
        BaseInput::Alpha(a) => base_from_alpha(a)?,
        BaseInput::Value(q) => q.clone(),
    };
    let one = BigRational::from_integer(1.into());
    if q.cmp_rational(&one) != Ordering::Greater {
        return Err(Error::OutOfRange);
    }
    let g = golden_ratio();
    if q.compare(&g) != Ordering::Greater {
        return Ok(Cardinality::EndpointsOnly);
    }
    let two = BigRational::from_integer(2.into());
    let three = BigRational::from_integer(3.into());
    let below = |n| -> Result<Cardinality> {
        Ok(match side_of_limit(&q, n, max_depth)? {
            Ordering::Less => Cardinality::CountablyInfinite,
            _ => Cardinality::Continuum,
        })
    };
    match q.cmp_rational(&two) {
        Ordering::Less => below(1),
        Ordering::Equal => Ok(Cardinality::Continuum),
        Ordering::Greater if q.cmp_rational(&three) == Ordering::Less => below(2),
        Ordering::Greater => Ok(Cardinality::Continuum),
    }
}

/// The golden ratio, `alpha(G) = (10)^inf`.
pub fn golden_ratio() -> AlgebraicReal {
    base_from_alpha(&EpSeq::periodic(1, vec![1, 0]).expect("valid")).expect("admissible")
}

/// `G`, `q'` and `q''` with their generating prefixes.
#[derive(Clone, Debug)]
pub struct Constants {
    pub g: AlgebraicReal,
    pub q_prime: Enclosure,
    pub q_double_prime: Enclosure,
    pub tau: Word,
    pub lambda: Word,
}

pub fn constants(depth: usize, digits: usize) -> Result<Constants> {
    let (qp, tau) = smallest_univoque(1, digits, depth)?;
    let (qpp, lambda) = smallest_univoque(2, digits, depth)?;
    Ok(Constants {
        g: golden_ratio(),
        q_prime: qp,
        q_double_prime: qpp,
        tau,
        lambda,
    })
}

/// Numeric alpha prefix of `q`, exposed for diagnostics.
pub fn alpha_prefix(q: &AlgebraicReal, n: usize) -> Result<Word> {
    quasi_greedy_digits(&FieldElem::one(q), q, n)
}
