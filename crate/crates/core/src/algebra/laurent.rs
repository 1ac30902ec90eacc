//! Sparse Laurent polynomials over a field scalar: the ring Q[t, t^-1].

use super::poly::Poly;
use super::scalar::{DivExact, OrderedScalar, Scalar};
use num_traits::{One, Zero};
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

/// Laurent polynomial in canonical form: no zero coefficients stored,
/// the zero polynomial is the empty map.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct LaurentPoly<T> {
    terms: BTreeMap<i64, T>,
}

impl<T: Scalar> LaurentPoly<T> {
    pub fn zero() -> Self {
        LaurentPoly {
            terms: BTreeMap::new(),
        }
    }

    pub fn one() -> Self {
        Self::monomial(T::one(), 0)
    }

    pub fn constant(c: T) -> Self {
        Self::monomial(c, 0)
    }

    /// c * t^k
    pub fn monomial(c: T, k: i64) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(k, c);
        }
        LaurentPoly { terms }
    }

    pub fn from_terms(pairs: impl IntoIterator<Item = (i64, T)>) -> Self {
        let mut out = Self::zero();
        for (k, c) in pairs {
            out.add_term(k, c);
        }
        out
    }

    fn add_term(&mut self, k: i64, c: T) {
        if c.is_zero() {
            return;
        }
        match self.terms.remove(&k) {
            None => {
                self.terms.insert(k, c);
            }
            Some(old) => {
                let s = old + c;
                if !s.is_zero() {
                    self.terms.insert(k, s);
                }
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Units of Q[t, t^-1] are the nonzero monomials c * t^k.
    pub fn is_unit(&self) -> bool {
        self.terms.len() == 1
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms.get(&0).map_or(false, |c| c.is_one())
    }

    pub fn min_exp(&self) -> Option<i64> {
        self.terms.keys().next().copied()
    }

    pub fn max_exp(&self) -> Option<i64> {
        self.terms.keys().next_back().copied()
    }

    /// Degree span max_exp - min_exp; the Euclidean size. None for zero.
    pub fn span(&self) -> Option<i64> {
        Some(self.max_exp()? - self.min_exp()?)
    }

    pub fn coeff(&self, k: i64) -> T {
        self.terms.get(&k).cloned().unwrap_or_else(T::zero)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&i64, &T)> {
        self.terms.iter()
    }

    pub fn leading_coeff(&self) -> T {
        self.max_exp().map(|k| self.coeff(k)).unwrap_or_else(T::zero)
    }

    pub fn scale(&self, c: &T) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        LaurentPoly {
            terms: self
                .terms
                .iter()
                .map(|(k, a)| (*k, a.clone() * c.clone()))
                .collect(),
        }
    }

    pub fn mul_t_pow(&self, k: i64) -> Self {
        LaurentPoly {
            terms: self.terms.iter().map(|(e, c)| (e + k, c.clone())).collect(),
        }
    }

    /// The involution t -> t^-1.
    pub fn involution(&self) -> Self {
        LaurentPoly {
            terms: self.terms.iter().map(|(e, c)| (-e, c.clone())).collect(),
        }
    }

    /// Evaluation at a nonzero scalar.
    pub fn eval(&self, x: &T) -> T {
        assert!(!x.is_zero(), "Laurent evaluation at 0");
        let mut acc = T::zero();
        for (k, c) in &self.terms {
            acc = acc + c.clone() * scalar_pow(x, *k);
        }
        acc
    }

    /// Sum of coefficients = value at t = 1.
    pub fn eval_at_one(&self) -> T {
        self.terms
            .values()
            .fold(T::zero(), |acc, c| acc + c.clone())
    }

    /// (polynomial part, shift): self = t^shift * poly with poly(0) != 0.
    pub fn to_poly(&self) -> (Poly<T>, i64) {
        match self.min_exp() {
            None => (Poly::zero(), 0),
            Some(m) => {
                let deg = (self.max_exp().unwrap() - m) as usize;
                let mut coeffs = vec![T::zero(); deg + 1];
                for (k, c) in &self.terms {
                    coeffs[(k - m) as usize] = c.clone();
                }
                (Poly::from_coeffs(coeffs), m)
            }
        }
    }

    pub fn from_poly(p: &Poly<T>, shift: i64) -> Self {
        Self::from_terms(
            p.coeffs()
                .iter()
                .enumerate()
                .map(|(i, c)| (i as i64 + shift, c.clone())),
        )
    }

    /// Euclidean division by degree span: self = q * d + r, r zero or
    /// span(r) < span(d).
    pub fn divrem(&self, d: &Self) -> (Self, Self) {
        assert!(!d.is_zero(), "Laurent division by zero");
        if self.is_zero() {
            return (Self::zero(), Self::zero());
        }
        let (a, ma) = self.to_poly();
        let (b, mb) = d.to_poly();
        let (q, r) = a.divrem(&b);
        (
            Self::from_poly(&q, ma - mb),
            Self::from_poly(&r, ma),
        )
    }

    pub fn gcd(&self, other: &Self) -> Self {
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let r = a.divrem(&b).1;
            a = b;
            b = r;
        }
        a.unit_normalized()
    }

    /// Canonical associate: minimal exponent 0 and leading coefficient 1.
    pub fn unit_normalized(&self) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let shifted = self.mul_t_pow(-self.min_exp().unwrap());
        let lead = shifted.leading_coeff();
        shifted.scale(&(T::one() / lead))
    }

    /// The unit u with self = u * self.unit_normalized().
    pub fn unit_part(&self) -> Self {
        if self.is_zero() {
            return Self::one();
        }
        Self::monomial(self.leading_coeff(), self.min_exp().unwrap())
    }
}

fn scalar_pow<T: Scalar>(x: &T, k: i64) -> T {
    let mut acc = T::one();
    let base = if k >= 0 {
        x.clone()
    } else {
        T::one() / x.clone()
    };
    for _ in 0..k.unsigned_abs() {
        acc = acc * base.clone();
    }
    acc
}

impl<T: Scalar> DivExact for LaurentPoly<T> {
    fn div_exact(&self, rhs: &Self) -> Option<Self> {
        if rhs.is_zero() {
            return None;
        }
        let (q, r) = self.divrem(rhs);
        if r.is_zero() {
            Some(q)
        } else {
            None
        }
    }
}

impl<T: Scalar> Zero for LaurentPoly<T> {
    fn zero() -> Self {
        LaurentPoly::zero()
    }
    fn is_zero(&self) -> bool {
        LaurentPoly::is_zero(self)
    }
}

impl<T: Scalar> One for LaurentPoly<T> {
    fn one() -> Self {
        LaurentPoly::one()
    }
}

impl<T: Scalar> Add for LaurentPoly<T> {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        let mut out = self;
        for (k, c) in rhs.terms {
            out.add_term(k, c);
        }
        out
    }
}

impl<T: Scalar> Sub for LaurentPoly<T> {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        self + (-rhs)
    }
}

impl<T: Scalar> Neg for LaurentPoly<T> {
    type Output = Self;
    fn neg(self) -> Self {
        LaurentPoly {
            terms: self.terms.into_iter().map(|(k, c)| (k, -c)).collect(),
        }
    }
}

impl<T: Scalar> Mul for LaurentPoly<T> {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        let mut out = LaurentPoly::zero();
        for (i, a) in &self.terms {
            for (j, b) in &rhs.terms {
                out.add_term(i + j, a.clone() * b.clone());
            }
        }
        out
    }
}

impl<T: OrderedScalar + fmt::Display> fmt::Display for LaurentPoly<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.terms.iter().rev() {
            let neg = c.is_negative();
            let mag = c.abs();
            if first {
                if neg {
                    write!(f, "-")?;
                }
                first = false;
            } else if neg {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let coeff_is_one = mag.is_one();
            match (*k, coeff_is_one) {
                (0, _) => write!(f, "{}", mag)?,
                (1, true) => write!(f, "t")?,
                (1, false) => write!(f, "{}*t", mag)?,
                (e, true) => write!(f, "t^{}", e)?,
                (e, false) => write!(f, "{}*t^{}", mag, e)?,
            }
        }
        Ok(())
    }
}

impl<T: fmt::Debug> fmt::Debug for LaurentPoly<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Laurent{:?}", self.terms)
    }
}
