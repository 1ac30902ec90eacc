//! Rational functions: reduced quotients of Laurent polynomials.

use super::laurent::LaurentPoly;
use super::scalar::{OrderedScalar, Scalar};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

/// A reduced fraction num/den of Laurent polynomials; den is nonzero and
/// unit-normalized, gcd(num, den) is a unit.
#[derive(Clone, PartialEq, Eq)]
pub struct RationalFunction<T> {
    num: LaurentPoly<T>,
    den: LaurentPoly<T>,
}

impl<T: Scalar> RationalFunction<T> {
    pub fn new(num: LaurentPoly<T>, den: LaurentPoly<T>) -> Self {
        assert!(!den.is_zero(), "rational function with zero denominator");
        RationalFunction { num, den }.reduced()
    }

    pub fn from_laurent(p: LaurentPoly<T>) -> Self {
        RationalFunction {
            num: p,
            den: LaurentPoly::one(),
        }
    }

    pub fn zero() -> Self {
        Self::from_laurent(LaurentPoly::zero())
    }

    fn reduced(self) -> Self {
        if self.num.is_zero() {
            return RationalFunction {
                num: LaurentPoly::zero(),
                den: LaurentPoly::one(),
            };
        }
        let g = self.num.gcd(&self.den);
        let num = self.num.div_exact_by(&g);
        let den = self.den.div_exact_by(&g);
        // push the denominator's unit into the numerator
        let u = den.unit_part();
        let den = den.unit_normalized();
        let (unum, ushift) = {
            let (p, s) = u.to_poly();
            (p.coeff(0), s)
        };
        let num = num
            .scale(&(T::one() / unum))
            .mul_t_pow(-ushift);
        RationalFunction { num, den }
    }

    pub fn num(&self) -> &LaurentPoly<T> {
        &self.num
    }

    pub fn den(&self) -> &LaurentPoly<T> {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    /// Applies t -> t^-1 to the whole fraction.
    pub fn involution(&self) -> Self {
        Self::new(self.num.involution(), self.den.involution())
    }
}

trait DivExactBy {
    fn div_exact_by(&self, g: &Self) -> Self;
}

impl<T: Scalar> DivExactBy for LaurentPoly<T> {
    fn div_exact_by(&self, g: &Self) -> Self {
        use super::scalar::DivExact;
        self.div_exact(g).expect("gcd division is exact")
    }
}

impl<T: Scalar> Add for RationalFunction<T> {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        Self::new(
            self.num.clone() * rhs.den.clone() + rhs.num * self.den.clone(),
            self.den * rhs.den,
        )
    }
}

impl<T: Scalar> Sub for RationalFunction<T> {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        self + (-rhs)
    }
}

impl<T: Scalar> Neg for RationalFunction<T> {
    type Output = Self;
    fn neg(self) -> Self {
        RationalFunction {
            num: -self.num,
            den: self.den,
        }
    }
}

impl<T: Scalar> Mul for RationalFunction<T> {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        Self::new(self.num * rhs.num, self.den * rhs.den)
    }
}

impl<T: OrderedScalar + fmt::Display> fmt::Display for RationalFunction<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({}) / ({})", self.num, self.den)
        }
    }
}

impl<T: OrderedScalar + fmt::Display> fmt::Debug for RationalFunction<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "RatFn({})", self)
    }
}
