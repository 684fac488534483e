//! Dense univariate polynomials over the rationals.

use alloc::vec;
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// Coefficients in ascending order, with no trailing zeros.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Poly(Vec<BigRational>);

fn rat(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

impl Poly {
    pub fn new(mut coeffs: Vec<BigRational>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        Poly(coeffs)
    }

    pub fn zero() -> Self {
        Poly(Vec::new())
    }

    pub fn one() -> Self {
        Poly(vec![BigRational::one()])
    }

    pub fn constant(c: BigRational) -> Self {
        Poly::new(vec![c])
    }

    /// The indeterminate `x`.
    pub fn x() -> Self {
        Poly(vec![BigRational::zero(), BigRational::one()])
    }

    /// `c * x^k`
    pub fn monomial(c: BigRational, k: usize) -> Self {
        let mut v = vec![BigRational::zero(); k + 1];
        v[k] = c;
        Poly::new(v)
    }

    pub fn from_ints(coeffs: &[i64]) -> Self {
        Poly::new(coeffs.iter().map(|&c| rat(c)).collect())
    }

    pub fn from_bigints(coeffs: &[BigInt]) -> Self {
        Poly::new(coeffs.iter().map(|c| BigRational::from_integer(c.clone())).collect())
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.0.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<&BigRational> {
        self.0.last()
    }

    pub fn eval(&self, x: &BigRational) -> BigRational {
        let mut acc = BigRational::zero();
        for c in self.0.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    pub fn sign_at(&self, x: &BigRational) -> Ordering {
        sign(&self.eval(x))
    }

    /// Interval Horner evaluation over `[lo, hi]`; the result encloses
    /// `{ p(t) : lo <= t <= hi }`.
    pub fn eval_interval(&self, lo: &BigRational, hi: &BigRational) -> (BigRational, BigRational) {
        let mut a = BigRational::zero();
        let mut b = BigRational::zero();
        for c in self.0.iter().rev() {
            let (na, nb) = if !lo.is_negative() {
                if !a.is_negative() {
                    (&a * lo, &b * hi)
                } else if !b.is_positive() {
                    (&a * hi, &b * lo)
                } else {
                    (&a * hi, &b * hi)
                }
            } else {
                let p = [&a * lo, &a * hi, &b * lo, &b * hi];
                let mn = p.iter().min().unwrap().clone();
                let mx = p.iter().max().unwrap().clone();
                (mn, mx)
            };
            a = na + c;
            b = nb + c;
        }
        (a, b)
    }

    pub fn derivative(&self) -> Poly {
        Poly::new(
            self.0
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * rat(i as i64))
                .collect(),
        )
    }

    pub fn scale(&self, c: &BigRational) -> Poly {
        Poly::new(self.0.iter().map(|a| a * c).collect())
    }

    /// `self * x`
    pub fn shift_up(&self) -> Poly {
        if self.is_zero() {
            return Poly::zero();
        }
        let mut v = Vec::with_capacity(self.0.len() + 1);
        v.push(BigRational::zero());
        v.extend_from_slice(&self.0);
        Poly(v)
    }

    /// Euclidean division.
    ///
    /// # Panics
    /// If `d` is zero.
    pub fn div_rem(&self, d: &Poly) -> (Poly, Poly) {
        let dd = d.degree().expect("division by zero polynomial");
        let lead = d.0[dd].clone();
        let mut r = self.0.clone();
        if r.len() <= dd {
            return (Poly::zero(), self.clone());
        }
        let mut q = vec![BigRational::zero(); r.len() - dd];
        for i in (dd..r.len()).rev() {
            if r[i].is_zero() {
                continue;
            }
            let f = &r[i] / &lead;
            for (j, dc) in d.0.iter().enumerate() {
                let t = &f * dc;
                r[i - dd + j] -= t;
            }
            q[i - dd] = f;
        }
        r.truncate(dd);
        (Poly::new(q), Poly::new(r))
    }

    pub fn rem(&self, d: &Poly) -> Poly {
        if self.0.len() <= d.0.len().saturating_sub(1) {
            return self.clone();
        }
        self.div_rem(d).1
    }

    pub fn monic(&self) -> Poly {
        match self.leading() {
            Some(l) => {
                let inv = l.recip();
                self.scale(&inv)
            }
            None => Poly::zero(),
        }
    }

    /// Monic greatest common divisor (zero iff both are zero).
    pub fn gcd(a: &Poly, b: &Poly) -> Poly {
        let mut a = a.clone();
        let mut b = b.clone();
        while !b.is_zero() {
            let r = a.rem(&b);
            a = b;
            b = r.monic();
        }
        a.monic()
    }

    /// Extended Euclid: returns `(g, s)` with `s * a = g (mod m)`, `g` monic.
    pub fn gcd_inverse(a: &Poly, m: &Poly) -> (Poly, Poly) {
        let (mut r0, mut r1) = (m.clone(), a.rem(m));
        let (mut s0, mut s1) = (Poly::zero(), Poly::one());
        while !r1.is_zero() {
            let (q, r) = r0.div_rem(&r1);
            let s = &s0 - &(&q * &s1);
            r0 = r1;
            r1 = r;
            s0 = s1;
            s1 = s;
        }
        let lead = r0.leading().cloned().unwrap_or_else(BigRational::one).recip();
        (r0.scale(&lead), s0.scale(&lead).rem(m))
    }

    /// `p / gcd(p, p')`
    pub fn square_free_part(&self) -> Poly {
        if self.degree().unwrap_or(0) == 0 {
            return self.clone();
        }
        let g = Poly::gcd(self, &self.derivative());
        if g.degree() == Some(0) {
            self.clone()
        } else {
            self.div_rem(&g).0
        }
    }

    /// Scales to integer coefficients with content 1 and positive leading
    /// coefficient.
    pub fn primitive(&self) -> Poly {
        Poly::from_bigints(&self.integer_coeffs())
    }

    /// The primitive integer coefficient vector of `self`.
    pub fn integer_coeffs(&self) -> Vec<BigInt> {
        if self.is_zero() {
            return Vec::new();
        }
        let den = self.0.iter().fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
        let mut ints: Vec<BigInt> = self.0.iter().map(|c| (c * &den).to_integer()).collect();
        let content = ints.iter().fold(BigInt::zero(), |acc, c| acc.gcd(c));
        let neg = ints.last().unwrap().is_negative();
        for c in ints.iter_mut() {
            *c = &*c / &content;
            if neg {
                *c = -&*c;
            }
        }
        ints
    }

    fn sturm_sequence(&self) -> Vec<Poly> {
        let mut seq = vec![self.clone(), self.derivative()];
        loop {
            let n = seq.len();
            if seq[n - 1].is_zero() {
                seq.pop();
                break;
            }
            let r = seq[n - 2].rem(&seq[n - 1]);
            if r.is_zero() {
                break;
            }
            seq.push(-r);
        }
        seq
    }

    /// Number of distinct real roots in the half-open interval `(lo, hi]`.
    pub fn count_roots(&self, lo: &BigRational, hi: &BigRational) -> usize {
        let seq = self.sturm_sequence();
        let var = |x: &BigRational| {
            let mut last = Ordering::Equal;
            let mut n = 0usize;
            for p in &seq {
                let s = p.sign_at(x);
                if s == Ordering::Equal {
                    continue;
                }
                if last != Ordering::Equal && s != last {
                    n += 1;
                }
                last = s;
            }
            n
        };
        var(lo).saturating_sub(var(hi))
    }

    /// Cauchy bound: every real root has absolute value below it.
    pub fn root_bound(&self) -> BigRational {
        let lead = self.leading().expect("nonzero polynomial").abs();
        let m = self.0.iter().map(|c| c.abs() / &lead).max().unwrap_or_default();
        m + BigRational::one()
    }
}

pub(crate) fn sign(x: &BigRational) -> Ordering {
    if x.is_positive() {
        Ordering::Greater
    } else if x.is_negative() {
        Ordering::Less
    } else {
        Ordering::Equal
    }
}

impl Add for &Poly {
    type Output = Poly;
    fn add(self, o: &Poly) -> Poly {
        let n = self.0.len().max(o.0.len());
        let z = BigRational::zero();
        Poly::new(
            (0..n)
                .map(|i| self.0.get(i).unwrap_or(&z) + o.0.get(i).unwrap_or(&z))
                .collect(),
        )
    }
}

impl Sub for &Poly {
    type Output = Poly;
    fn sub(self, o: &Poly) -> Poly {
        let n = self.0.len().max(o.0.len());
        let z = BigRational::zero();
        Poly::new(
            (0..n)
                .map(|i| self.0.get(i).unwrap_or(&z) - o.0.get(i).unwrap_or(&z))
                .collect(),
        )
    }
}

impl Mul for &Poly {
    type Output = Poly;
    fn mul(self, o: &Poly) -> Poly {
        if self.is_zero() || o.is_zero() {
            return Poly::zero();
        }
        let mut v = vec![BigRational::zero(); self.0.len() + o.0.len() - 1];
        for (i, a) in self.0.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in o.0.iter().enumerate() {
                v[i + j] += a * b;
            }
        }
        Poly::new(v)
    }
}

impl Neg for Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        Poly(self.0.into_iter().map(|c| -c).collect())
    }
}

impl Neg for &Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        -self.clone()
    }
}

/// Renders as `[c0,c1,...,cn]`, ascending.
impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        for (i, c) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{c}")?;
        }
        f.write_str("]")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(n: i64, d: i64) -> BigRational {
        BigRational::new(BigInt::from(n), BigInt::from(d))
    }

    #[test]
    fn division_and_gcd() {
        // (x-1)(x-2) and (x-1)(x+3)
        let a = Poly::from_ints(&[2, -3, 1]);
        let b = Poly::from_ints(&[-3, 2, 1]);
        assert_eq!(Poly::gcd(&a, &b), Poly::from_ints(&[-1, 1]));
        let (q, rem) = a.div_rem(&Poly::from_ints(&[-1, 1]));
        assert_eq!(q, Poly::from_ints(&[-2, 1]));
        assert!(rem.is_zero());
    }

    #[test]
    fn square_free_and_sturm() {
        // (x-1)^2 (x-3)
        let p = &(&Poly::from_ints(&[-1, 1]) * &Poly::from_ints(&[-1, 1])) * &Poly::from_ints(&[-3, 1]);
        let s = p.square_free_part();
        assert_eq!(s.degree(), Some(2));
        assert_eq!(s.count_roots(&r(0, 1), &r(4, 1)), 2);
        assert_eq!(s.count_roots(&r(2, 1), &r(4, 1)), 1);
        let golden = Poly::from_ints(&[-1, -1, 1]);
        assert_eq!(golden.count_roots(&r(-10, 1), &r(10, 1)), 2);
        assert_eq!(golden.count_roots(&r(1, 1), &r(2, 1)), 1);
    }

    #[test]
    fn inverse_mod() {
        let m = Poly::from_ints(&[-1, -1, 1]);
        let (g, s) = Poly::gcd_inverse(&Poly::x(), &m);
        assert_eq!(g, Poly::one());
        // 1/q = q - 1 modulo q^2 - q - 1
        assert_eq!(s, Poly::from_ints(&[-1, 1]));
    }

    #[test]
    fn interval_eval_encloses() {
        let p = Poly::from_ints(&[-1, -1, 1]);
        let (a, b) = p.eval_interval(&r(3, 2), &r(17, 10));
        assert!(a <= p.eval(&r(8, 5)) && p.eval(&r(8, 5)) <= b);
        assert!(a.is_negative() && b.is_positive());
    }

    #[test]
    fn primitive_form() {
        let p = Poly::new(vec![r(1, 2), r(-3, 4)]);
        assert_eq!(p.integer_coeffs(), vec![BigInt::from(-2), BigInt::from(3)]);
    }
}
