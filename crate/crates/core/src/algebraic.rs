//! Real algebraic numbers given by a square-free defining polynomial and an
//! isolating rational interval.

use alloc::format;
use core::cmp::Ordering;
use core::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::poly::Poly;
use crate::sequence::{all_shifts_le, Digit, DigitGuard, EpSeq};

/// A real root of `poly` isolated in `(lo, hi)`.
///
/// Either `lo == hi` and the number is that rational (with `poly` the monic
/// linear factor), or `lo < hi`, `poly` is square-free, changes sign
/// strictly between the endpoints, and has exactly one root inside.
#[derive(Clone, Debug)]
pub struct AlgebraicReal {
    poly: Poly,
    lo: BigRational,
    hi: BigRational,
    lo_sign: Ordering,
}

fn int(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

fn half(a: &BigRational, b: &BigRational) -> BigRational {
    (a + b) / int(2)
}

impl AlgebraicReal {
    pub fn from_rational(r: BigRational) -> Self {
        AlgebraicReal {
            poly: Poly::new(alloc::vec![-r.clone(), BigRational::one()]),
            lo: r.clone(),
            hi: r,
            lo_sign: Ordering::Equal,
        }
    }

    pub fn from_integer(n: i64) -> Self {
        Self::from_rational(int(n))
    }

    /// Validated constructor from integer coefficients (ascending) and an
    /// interval that must contain exactly one root of the polynomial.
    pub fn new(coeffs: &[BigInt], lo: BigRational, hi: BigRational) -> Result<Self> {
        let p = Poly::from_bigints(coeffs);
        if p.degree().unwrap_or(0) == 0 {
            return Err(Error::InvalidPolynomial("degree must be at least 1".into()));
        }
        if lo > hi {
            return Err(Error::NoIsolatedRoot("empty interval".into()));
        }
        let p = p.square_free_part().primitive();
        if lo == hi {
            if p.eval(&lo).is_zero() {
                return Ok(Self::from_rational(lo));
            }
            return Err(Error::NoIsolatedRoot(format!("{lo} is not a root")));
        }
        let hi_root = usize::from(p.eval(&hi).is_zero());
        let n = p.count_roots(&lo, &hi) - hi_root;
        if n != 1 {
            return Err(Error::NoIsolatedRoot(format!(
                "polynomial has {n} roots in ({lo}, {hi})"
            )));
        }
        Ok(Self::isolate(p, lo, hi))
    }

    /// The unique root greater than 1, if there is exactly one.
    pub fn root_above_one(coeffs: &[BigInt]) -> Result<Self> {
        let p = Poly::from_bigints(coeffs);
        if p.degree().unwrap_or(0) == 0 {
            return Err(Error::InvalidPolynomial("degree must be at least 1".into()));
        }
        let bound = p.root_bound();
        Self::new(coeffs, int(1), bound)
    }

    /// Shrinks an interval with exactly one root of `p` in the open
    /// interval until the endpoints are non-roots with a strict sign change.
    fn isolate(p: Poly, mut lo: BigRational, mut hi: BigRational) -> Self {
        let open_count = |p: &Poly, a: &BigRational, b: &BigRational| {
            p.count_roots(a, b) - usize::from(p.eval(b).is_zero())
        };
        if p.eval(&lo).is_zero() {
            let mut step = (&hi - &lo) / int(2);
            loop {
                let cand = &lo + &step;
                if !p.eval(&cand).is_zero() && open_count(&p, &cand, &hi) == 1 {
                    lo = cand;
                    break;
                }
                step /= int(2);
            }
        }
        if p.eval(&hi).is_zero() {
            let mut step = (&hi - &lo) / int(2);
            loop {
                let cand = &hi - &step;
                if !p.eval(&cand).is_zero() && open_count(&p, &lo, &cand) == 1 {
                    hi = cand;
                    break;
                }
                step /= int(2);
            }
        }
        let mut a = Self::from_bracket(p, lo, hi);
        a.snap_integer_root();
        a
    }

    /// `p` has a unique, simple root in `(lo, hi)` and does not vanish at
    /// the endpoints.
    pub(crate) fn from_bracket(p: Poly, lo: BigRational, hi: BigRational) -> Self {
        let lo_sign = p.sign_at(&lo);
        debug_assert!(lo_sign != Ordering::Equal && lo_sign != p.sign_at(&hi));
        AlgebraicReal {
            poly: p,
            lo,
            hi,
            lo_sign,
        }
    }

    fn snap_integer_root(&mut self) {
        if self.is_rational() {
            return;
        }
        let mut n = self.lo.ceil();
        while n <= self.hi {
            if self.poly.eval(&n).is_zero() {
                *self = Self::from_rational(n);
                return;
            }
            n += BigRational::one();
        }
    }

    pub fn poly(&self) -> &Poly {
        &self.poly
    }

    pub fn lo(&self) -> &BigRational {
        &self.lo
    }

    pub fn hi(&self) -> &BigRational {
        &self.hi
    }

    pub fn is_rational(&self) -> bool {
        self.lo == self.hi
    }

    pub fn as_rational(&self) -> Option<&BigRational> {
        self.is_rational().then_some(&self.lo)
    }

    pub fn is_integer(&self) -> bool {
        self.as_rational().is_some_and(|r| r.is_integer())
    }

    /// One bisection step of the isolating interval.
    pub fn bisect(&mut self) {
        if self.is_rational() {
            return;
        }
        let mid = half(&self.lo, &self.hi);
        match self.poly.sign_at(&mid) {
            Ordering::Equal => *self = Self::from_rational(mid),
            s if s == self.lo_sign => self.lo = mid,
            _ => self.hi = mid,
        }
    }

    /// Refines until the isolating interval is narrower than `eps`.
    pub fn refine_to(&mut self, eps: &BigRational) {
        while !self.is_rational() && &(&self.hi - &self.lo) >= eps {
            self.bisect();
        }
    }

    /// An interval of width below `eps` containing the number.
    pub fn approx(&self, eps: &BigRational) -> (BigRational, BigRational) {
        let mut a = self.clone();
        a.refine_to(eps);
        (a.lo, a.hi)
    }

    /// Floating-point approximation, for display only.
    pub fn to_f64(&self) -> f64 {
        let (lo, hi) = self.approx(&BigRational::new(BigInt::one(), BigInt::from(1u64 << 53)));
        half(&lo, &hi).to_f64().unwrap_or(f64::NAN)
    }

    /// Exact sign of `p` evaluated at this number, refining the isolating
    /// interval in place as needed. The represented number is unchanged.
    pub fn sign_of(&mut self, p: &Poly) -> Ordering {
        if self.is_rational() {
            return p.sign_at(&self.lo);
        }
        let r = p.rem(&self.poly);
        if r.is_zero() {
            return Ordering::Equal;
        }
        if let Some(s) = self.interval_sign(&r) {
            return s;
        }
        let g = Poly::gcd(&r, &self.poly);
        if g.degree().unwrap_or(0) >= 1 && g.sign_at(&self.lo) != g.sign_at(&self.hi) {
            // the root lies on the common factor; keep the smaller modulus
            let g = g.primitive();
            self.lo_sign = g.sign_at(&self.lo);
            self.poly = g;
            return Ordering::Equal;
        }
        loop {
            self.bisect();
            if self.is_rational() {
                return r.sign_at(&self.lo);
            }
            if let Some(s) = self.interval_sign(&r) {
                return s;
            }
        }
    }

    fn interval_sign(&self, r: &Poly) -> Option<Ordering> {
        let (a, b) = r.eval_interval(&self.lo, &self.hi);
        if a.is_positive() {
            Some(Ordering::Greater)
        } else if b.is_negative() {
            Some(Ordering::Less)
        } else {
            None
        }
    }

    /// Exact comparison against a rational.
    pub fn cmp_rational(&self, r: &BigRational) -> Ordering {
        let mut a = self.clone();
        let p = Poly::new(alloc::vec![-r.clone(), BigRational::one()]);
        a.sign_of(&p)
    }

    /// Exact order of two algebraic reals.
    pub fn compare(&self, other: &AlgebraicReal) -> Ordering {
        if let Some(r) = other.as_rational() {
            return self.cmp_rational(r);
        }
        if let Some(r) = self.as_rational() {
            return other.cmp_rational(r).reverse();
        }
        let mut a = self.clone();
        let mut b = other.clone();
        if a.hi > b.lo && b.hi > a.lo {
            let g = Poly::gcd(&a.poly, &b.poly);
            if g.degree().unwrap_or(0) >= 1 {
                let lo = (&a.lo).max(&b.lo);
                let hi = (&a.hi).min(&b.hi);
                if g.sign_at(lo) != g.sign_at(hi) {
                    return Ordering::Equal;
                }
            }
        }
        loop {
            if a.hi <= b.lo {
                return Ordering::Less;
            }
            if b.hi <= a.lo {
                return Ordering::Greater;
            }
            if (&a.hi - &a.lo) >= (&b.hi - &b.lo) {
                a.bisect();
            } else {
                b.bisect();
            }
            if a.is_rational() || b.is_rational() {
                return a.compare(&b);
            }
        }
    }

    /// A common defining polynomial for two representations of the same
    /// number, or `None` when they are different numbers.
    pub(crate) fn common_modulus(&self, other: &AlgebraicReal) -> Option<AlgebraicReal> {
        if self.poly == other.poly && self.lo == other.lo && self.hi == other.hi {
            return Some(self.clone());
        }
        if self.compare(other) != Ordering::Equal {
            return None;
        }
        if self.is_rational() {
            return Some(self.clone());
        }
        if other.is_rational() {
            return Some(other.clone());
        }
        let g = Poly::gcd(&self.poly, &other.poly).primitive();
        let lo = (&self.lo).max(&other.lo).clone();
        let hi = (&self.hi).min(&other.hi).clone();
        Some(Self::from_bracket(g, lo, hi))
    }

    /// Replaces the modulus with a factor that still carries the root.
    pub(crate) fn with_factor(&self, factor: &Poly) -> AlgebraicReal {
        Self::from_bracket(factor.primitive(), self.lo.clone(), self.hi.clone())
    }

    /// `ceil(q) - 1`, the largest admissible digit in base `q > 1`.
    pub fn alphabet_max(&self) -> Result<Digit> {
        if self.cmp_rational(&int(1)) != Ordering::Greater {
            return Err(Error::OutOfRange);
        }
        let m = if let Some(r) = self.as_rational() {
            r.ceil() - BigRational::one()
        } else {
            let mut a = self.clone();
            while a.lo.floor() != a.hi.floor() || a.hi.is_integer() {
                a.bisect();
                if let Some(r) = a.as_rational() {
                    let m = r.ceil() - BigRational::one();
                    return to_digit(&m);
                }
            }
            a.lo.floor()
        };
        to_digit(&m)
    }
}

fn to_digit(m: &BigRational) -> Result<Digit> {
    m.to_integer()
        .to_u8()
        .ok_or_else(|| Error::Unsupported(format!("alphabet maximum {m} exceeds 255")))
}

impl fmt::Display for AlgebraicReal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.as_rational() {
            Some(r) => write!(f, "{r}"),
            None => write!(f, "root of {} in ({}, {})", self.poly, self.lo, self.hi),
        }
    }
}

/// Polynomial whose roots above 1 are the solutions of
/// `sum s_i q^{-i} = 1`, with denominators cleared.
pub fn expansion_polynomial(s: &EpSeq) -> Poly {
    let r = s.preperiod().len();
    let p = s.period().len();
    let horner = |w: &[Digit]| {
        let n = w.len();
        Poly::new(
            (0..n)
                .map(|i| BigRational::from_integer(BigInt::from(w[n - 1 - i])))
                .collect(),
        )
    };
    let u = horner(s.preperiod());
    let v = horner(s.period());
    let qp_minus_1 = &Poly::monomial(BigRational::one(), p) - &Poly::one();
    let qr = Poly::monomial(BigRational::one(), r);
    let lhs = &qp_minus_1 * &(&qr - &u);
    &lhs - &v
}

/// The unique `q > 1` with `sum s_i q^{-i} = 1`.
pub fn solve_expansion_of_one(s: &EpSeq) -> Result<AlgebraicReal> {
    let total = (0..s.preperiod().len() + s.period().len()).map(|i| s.digit(i) as u64);
    let max_digit = total.clone().max().unwrap_or(0);
    if s.is_zero() {
        return Err(Error::NoIsolatedRoot("0^inf sums to 0 in every base".into()));
    }
    if !s.is_infinite() && total.sum::<u64>() <= 1 {
        return Err(Error::NoIsolatedRoot(format!("{s} has value <= 1 in every base q > 1")));
    }
    let poly = expansion_polynomial(s).square_free_part().primitive();
    let lo = int(s.first().max(1) as i64);
    let hi = int(max_digit as i64 + 1);
    if poly.eval(&hi).is_zero() {
        return Ok(AlgebraicReal::from_rational(hi));
    }
    if lo > int(1) && poly.eval(&lo).is_zero() {
        return Ok(AlgebraicReal::from_rational(lo));
    }
    let mut lo = lo;
    let hi_sign = poly.sign_at(&hi);
    if poly.sign_at(&lo) == hi_sign || poly.eval(&lo).is_zero() {
        // only when lo = 1: walk towards the root from above 1
        let mut step = (&hi - &lo) / int(2);
        loop {
            let cand = &lo + &step;
            let sc = poly.sign_at(&cand);
            if sc == Ordering::Equal {
                return Ok(AlgebraicReal::from_rational(cand));
            }
            if sc != hi_sign {
                lo = cand;
                break;
            }
            step /= int(2);
            if step < BigRational::new(BigInt::one(), BigInt::from(1u64 << 62)) {
                return Err(Error::NoIsolatedRoot(format!("no root above 1 for {s}")));
            }
        }
    }
    let mut a = AlgebraicReal::from_bracket(poly, lo, hi);
    a.snap_integer_root();
    Ok(a)
}

/// Tests the admissibility conditions for a quasi-greedy expansion of 1:
/// `alphabet_max = alpha_1 >= 1`, infinite, and every shift `<= alpha`.
pub fn check_alpha(alpha: &EpSeq) -> Result<()> {
    if alpha.first() == 0 || alpha.first() != alpha.alphabet_max() {
        return Err(Error::NotQuasiGreedyAlpha(format!(
            "{alpha}: first digit must equal alphabet_max >= 1"
        )));
    }
    if !alpha.is_infinite() {
        return Err(Error::NotQuasiGreedyAlpha(format!("{alpha} is finite")));
    }
    if !all_shifts_le(alpha, alpha, false, 1, DigitGuard::Always)? {
        return Err(Error::NotQuasiGreedyAlpha(format!(
            "{alpha} has a shift exceeding itself"
        )));
    }
    Ok(())
}

/// The base `q > 1` whose quasi-greedy expansion of 1 is `alpha`.
pub fn base_from_alpha(alpha: &EpSeq) -> Result<AlgebraicReal> {
    check_alpha(alpha)?;
    solve_expansion_of_one(alpha)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(n: i64, d: i64) -> BigRational {
        BigRational::new(BigInt::from(n), BigInt::from(d))
    }

    fn ep(s: &str) -> EpSeq {
        EpSeq::parse(s, None).unwrap()
    }

    fn golden() -> AlgebraicReal {
        AlgebraicReal::new(&[(-1).into(), (-1).into(), 1.into()], r(1, 1), r(2, 1)).unwrap()
    }

    #[test]
    fn golden_ratio_from_alpha() {
        let g = base_from_alpha(&ep("(10)")).unwrap();
        assert_eq!(g.poly(), &Poly::from_ints(&[-1, -1, 1]));
        assert_eq!(g.compare(&golden()), Ordering::Equal);
        let (lo, hi) = g.approx(&r(1, 1000));
        assert!(lo < r(1618034, 1000000) && r(1618033, 1000000) < hi);
    }

    #[test]
    fn integer_bases_are_rational() {
        for k in 1..5u8 {
            let q = base_from_alpha(&EpSeq::constant(k, k).unwrap()).unwrap();
            assert_eq!(q.as_rational(), Some(&int(k as i64 + 1)));
        }
        let q3 = AlgebraicReal::from_integer(3);
        assert_eq!(q3.approx(&r(1, 10)), (int(3), int(3)));
    }

    #[test]
    fn two_zero_period_is_one_plus_sqrt2() {
        let q = base_from_alpha(&ep("(20)")).unwrap();
        assert_eq!(q.poly(), &Poly::from_ints(&[-1, -2, 1]));
        let (lo, hi) = q.approx(&r(1, 10000));
        assert!(lo < r(24143, 10000) && r(24142, 10000) < hi);
    }

    #[test]
    fn rejects_bad_alpha() {
        assert!(matches!(
            base_from_alpha(&ep("111(0)")),
            Err(Error::NotQuasiGreedyAlpha(_))
        ));
        assert!(matches!(
            base_from_alpha(&ep("(0110)")),
            Err(Error::NotQuasiGreedyAlpha(_))
        ));
        assert!(base_from_alpha(&EpSeq::parse("(1011)", None).unwrap()).is_err());
    }

    #[test]
    fn compare_examples() {
        let g = golden();
        assert_eq!(g.compare(&AlgebraicReal::from_integer(2)), Ordering::Less);
        let a = base_from_alpha(&ep("(10)")).unwrap();
        let b = base_from_alpha(&ep("(10)")).unwrap();
        assert_eq!(a.compare(&b), Ordering::Equal);
        let q4 = base_from_alpha(&ep("(1100)")).unwrap();
        assert_eq!(q4.compare(&g), Ordering::Greater);
    }

    #[test]
    fn sign_of_defining_relation() {
        let mut g = golden();
        assert_eq!(g.sign_of(&Poly::from_ints(&[-1, -1, 1])), Ordering::Equal);
        assert_eq!(g.sign_of(&Poly::from_ints(&[-1, 1])), Ordering::Greater);
        // q^3 - q^2 - q - 1 < 0 at G since q^3 = 2q + 1
        assert_eq!(g.sign_of(&Poly::from_ints(&[-1, -1, -1, 1])), Ordering::Less);
    }

    #[test]
    fn validated_constructor() {
        // x^2 - 2 has one root in (0, 2) but two in (-2, 2)
        let c = [(-2).into(), 0.into(), 1.into()];
        assert!(AlgebraicReal::new(&c, r(0, 1), r(2, 1)).is_ok());
        assert!(AlgebraicReal::new(&c, r(-2, 1), r(2, 1)).is_err());
        // repeated factor is stripped: (x-2)^2 (x+3), root 2 snaps to rational
        let c = [12.into(), (-8).into(), (-1).into(), 1.into()];
        let a = AlgebraicReal::new(&c, r(1, 1), r(5, 2)).unwrap();
        assert!(a.is_integer());
        let above = AlgebraicReal::root_above_one(&[(-1).into(), (-1).into(), 1.into()]).unwrap();
        assert_eq!(above.compare(&golden()), Ordering::Equal);
    }

    #[test]
    fn alphabet_max_examples() {
        assert_eq!(golden().alphabet_max().unwrap(), 1);
        assert_eq!(AlgebraicReal::from_integer(3).alphabet_max().unwrap(), 2);
        assert_eq!(AlgebraicReal::from_rational(r(5, 2)).alphabet_max().unwrap(), 2);
        assert!(AlgebraicReal::from_integer(1).alphabet_max().is_err());
    }
}
