//! Real algebraic numbers as (defining polynomial, isolating interval),
//! certified by Sturm counts.

use super::interval::QInterval;
use super::poly::{refine_root, SturmChain};
use crate::error::{Error, Result};
use crate::{QPoly, Rational};
use num_traits::Zero;
use std::cmp::Ordering;
use std::fmt;

/// A real algebraic number: the unique root of `poly` inside the open
/// rational interval (lo, hi).
#[derive(Clone, PartialEq)]
pub struct AlgebraicNumber {
    poly: QPoly,
    lo: Rational,
    hi: Rational,
}

impl AlgebraicNumber {
    /// Certifies (by a Sturm count of 1) that `poly` has exactly one real
    /// root in (lo, hi); endpoints must not be roots.
    pub fn new(poly: QPoly, lo: Rational, hi: Rational) -> Result<Self> {
        if poly.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        if poly.eval(&lo).is_zero() || poly.eval(&hi).is_zero() {
            return Err(Error::Domain(
                "isolating interval endpoints must not be roots".into(),
            ));
        }
        let chain = SturmChain::new(&poly);
        if chain.count_open(&poly, &lo, &hi) != 1 {
            return Err(Error::Domain(
                "interval does not isolate exactly one root".into(),
            ));
        }
        Ok(AlgebraicNumber { poly, lo, hi })
    }

    /// Wraps a rational as the root of a linear polynomial.
    pub fn rational(q: Rational) -> Self {
        use super::poly::Poly;
        let poly = Poly::from_coeffs(vec![-q.clone(), Rational::from_integer(1.into())]);
        let one = Rational::from_integer(1.into());
        AlgebraicNumber {
            poly,
            lo: &q - &one,
            hi: &q + &one,
        }
    }

    pub fn poly(&self) -> &QPoly {
        &self.poly
    }

    pub fn interval(&self) -> (Rational, Rational) {
        (self.lo.clone(), self.hi.clone())
    }

    /// Shrinks the isolating interval to the requested width, in place.
    pub fn refine_to(&mut self, width: &Rational) {
        if &(&self.hi - &self.lo) <= &width.clone() {
            return;
        }
        let (lo, hi) = refine_root(&self.poly, &self.lo, &self.hi, width);
        self.lo = lo;
        self.hi = hi;
    }

    /// An enclosure of the value, refined to about `bits` bits.
    pub fn enclosure(&self, bits: u32) -> QInterval {
        let mut me = self.clone();
        let width = Rational::new(1.into(), num_bigint::BigInt::from(1) << bits);
        me.refine_to(&width);
        QInterval::new(me.lo, me.hi)
    }

    /// Exact comparison with a rational.
    pub fn cmp_rational(&self, q: &Rational) -> Ordering {
        if self.is_rational_value(q) {
            return Ordering::Equal;
        }
        let mut me = self.clone();
        loop {
            if q <= &me.lo {
                return Ordering::Greater;
            }
            if q >= &me.hi {
                return Ordering::Less;
            }
            let width = (&me.hi - &me.lo) / Rational::from_integer(4.into());
            me.refine_to(&width);
        }
    }

    /// Whether the value equals the rational `q` exactly.
    pub fn is_rational_value(&self, q: &Rational) -> bool {
        self.lo < *q && *q < self.hi && self.poly.eval(q).is_zero()
    }

    /// Exact sign of the value.
    pub fn sign(&self) -> i8 {
        match self.cmp_rational(&Rational::zero()) {
            Ordering::Less => -1,
            Ordering::Equal => 0,
            Ordering::Greater => 1,
        }
    }

    /// Approximate value for display purposes only.
    pub fn approx_f64(&self) -> f64 {
        let e = self.enclosure(60);
        let mid = e.midpoint();
        rational_to_f64(&mid)
    }
}

pub(crate) fn rational_to_f64(q: &Rational) -> f64 {
    let num = q.numer();
    let den = q.denom();
    // scale down big integers in tandem to stay in f64 range
    let bits = num.bits().max(den.bits());
    if bits <= 52 {
        let n: f64 = num.to_string().parse().unwrap_or(f64::NAN);
        let d: f64 = den.to_string().parse().unwrap_or(f64::NAN);
        return n / d;
    }
    let shift = bits - 52;
    let n = num >> shift;
    let d = den >> shift;
    let nf: f64 = n.to_string().parse().unwrap_or(f64::NAN);
    let df: f64 = d.to_string().parse().unwrap_or(f64::NAN);
    nf / df
}

impl fmt::Debug for AlgebraicNumber {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "AlgebraicNumber(~{:.6}, root of {} in ({}, {}))",
            self.approx_f64(),
            self.poly,
            self.lo,
            self.hi
        )
    }
}
