//! Arithmetic in the field generated by a base `q`.

use core::cmp::Ordering;
use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::algebraic::AlgebraicReal;
use crate::error::{Error, Result};
use crate::poly::Poly;

/// A polynomial in `q` with rational coefficients, reduced modulo the
/// defining polynomial of `q`.
#[derive(Clone, Debug)]
pub struct FieldElem {
    base: AlgebraicReal,
    coeffs: Poly,
}

impl FieldElem {
    pub fn from_poly(base: &AlgebraicReal, p: &Poly) -> Self {
        FieldElem {
            coeffs: p.rem(base.poly()),
            base: base.clone(),
        }
    }

    pub fn from_rational(base: &AlgebraicReal, r: BigRational) -> Self {
        Self::from_poly(base, &Poly::constant(r))
    }

    pub fn from_integer(base: &AlgebraicReal, n: i64) -> Self {
        Self::from_rational(base, BigRational::from_integer(BigInt::from(n)))
    }

    pub fn zero(base: &AlgebraicReal) -> Self {
        Self::from_poly(base, &Poly::zero())
    }

    pub fn one(base: &AlgebraicReal) -> Self {
        Self::from_integer(base, 1)
    }

    /// The generator `q` itself.
    pub fn q(base: &AlgebraicReal) -> Self {
        Self::from_poly(base, &Poly::x())
    }

    /// `q^k` for any integer `k`; `q` is nonzero so negative powers exist.
    pub fn q_pow(base: &AlgebraicReal, k: i64) -> Self {
        let g = Self::q(base);
        let g = if k < 0 { g.inv().expect("q > 0") } else { g };
        let mut acc = Self::one(base);
        let mut b = g;
        let mut e = k.unsigned_abs();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &b;
            }
            b = &b * &b;
            e >>= 1;
        }
        acc
    }

    pub fn base(&self) -> &AlgebraicReal {
        &self.base
    }

    pub fn coeffs(&self) -> &Poly {
        &self.coeffs
    }

    /// Structurally zero. The modulus need not be irreducible, so a nonzero
    /// remainder can still vanish at `q`; `==` and [`FieldElem::sign`] are exact.
    pub fn is_zero(&self) -> bool {
        self.coeffs.is_zero()
    }

    pub fn as_rational(&self) -> Option<BigRational> {
        match self.coeffs.degree() {
            None => Some(BigRational::zero()),
            Some(0) => Some(self.coeffs.coeffs()[0].clone()),
            _ => None,
        }
    }

    /// Exact sign. Refines a private copy of the base.
    pub fn sign(&self) -> Ordering {
        let mut q = self.base.clone();
        q.sign_of(&self.coeffs)
    }

    /// Exact sign, refining `q` in place. `q` must be the same number as
    /// this element's base; callers running many sign tests keep one `q`.
    pub fn sign_with(&self, q: &mut AlgebraicReal) -> Ordering {
        q.sign_of(&self.coeffs)
    }

    /// Not `Ord`: elements of different bases are incomparable.
    #[allow(clippy::should_implement_trait)]
    pub fn cmp(&self, other: &FieldElem) -> Ordering {
        (self - other).sign()
    }

    pub fn scale(&self, c: &BigRational) -> FieldElem {
        FieldElem {
            base: self.base.clone(),
            coeffs: self.coeffs.scale(c),
        }
    }

    /// Multiplicative inverse. When the modulus is reducible the result may
    /// live over a smaller defining polynomial for the same number.
    pub fn inv(&self) -> Result<FieldElem> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let p = self.base.poly();
        let (g, s) = Poly::gcd_inverse(&self.coeffs, p);
        if g.degree() == Some(0) {
            let c = g.coeffs()[0].clone();
            return Ok(Self::from_poly(&self.base, &s.scale(&(BigRational::one() / c))));
        }
        // g and p share roots; the base is a root of exactly one of g, p/g
        let mut q = self.base.clone();
        if q.sign_of(&g) == Ordering::Equal {
            return Err(Error::DivisionByZero);
        }
        let (cofactor, _) = p.div_rem(&g);
        let base = self.base.with_factor(&cofactor);
        Self::from_poly(&base, &self.coeffs).inv()
    }

    fn unify(a: &FieldElem, b: &FieldElem) -> (AlgebraicReal, Poly, Poly) {
        if a.base.poly() == b.base.poly() {
            return (a.base.clone(), a.coeffs.clone(), b.coeffs.clone());
        }
        let base = a
            .base
            .common_modulus(&b.base)
            .expect("field elements over different bases");
        let pa = a.coeffs.rem(base.poly());
        let pb = b.coeffs.rem(base.poly());
        (base, pa, pb)
    }

    /// Evaluates `sum_i digits_i q^{-i}`.
    pub fn digit_sum(base: &AlgebraicReal, digits: &[u8]) -> FieldElem {
        // Horner in q^{-1}: (((d_n/q + d_{n-1})/q + ...) + d_1)/q
        let qi = Self::q_pow(base, -1);
        let mut acc = Self::zero(base);
        for &d in digits.iter().rev() {
            acc = &(&acc + &Self::from_integer(base, d as i64)) * &qi;
        }
        acc
    }
}

impl PartialEq for FieldElem {
    fn eq(&self, other: &Self) -> bool {
        (self - other).sign() == Ordering::Equal
    }
}

impl Add for &FieldElem {
    type Output = FieldElem;
    fn add(self, rhs: &FieldElem) -> FieldElem {
        let (base, a, b) = FieldElem::unify(self, rhs);
        FieldElem {
            coeffs: &a + &b,
            base,
        }
    }
}

impl Sub for &FieldElem {
    type Output = FieldElem;
    fn sub(self, rhs: &FieldElem) -> FieldElem {
        let (base, a, b) = FieldElem::unify(self, rhs);
        FieldElem {
            coeffs: &a - &b,
            base,
        }
    }
}

impl Mul for &FieldElem {
    type Output = FieldElem;
    fn mul(self, rhs: &FieldElem) -> FieldElem {
        let (base, a, b) = FieldElem::unify(self, rhs);
        let coeffs = (&a * &b).rem(base.poly());
        FieldElem { coeffs, base }
    }
}

impl Neg for &FieldElem {
    type Output = FieldElem;
    fn neg(self) -> FieldElem {
        FieldElem {
            base: self.base.clone(),
            coeffs: -&self.coeffs,
        }
    }
}

impl fmt::Display for FieldElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let c = self.coeffs.coeffs();
        if c.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, a) in c.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match i {
                0 => write!(f, "{a}")?,
                1 => write!(f, "({a})*q")?,
                _ => write!(f, "({a})*q^{i}")?,
            }
        }
        Ok(())
    }
}

/// `alpha_1 / (q - 1)`, the right end of `J_q`.
pub fn j_q_max(base: &AlgebraicReal, alphabet_max: u8) -> FieldElem {
    let qm1 = &FieldElem::q(base) - &FieldElem::one(base);
    let inv = qm1.inv().expect("q > 1");
    inv.scale(&BigRational::from_integer(BigInt::from(alphabet_max)))
}
