//! Certified rational interval arithmetic for the few transcendental
//! evaluations the toolkit needs: pi, arctangent and arccosine.
//!
//! All endpoints are exact rationals, rounded outward to dyadics to keep
//! denominators bounded; every returned interval is guaranteed to contain
//! the true value.

use crate::{rat, Integer, Rational};
use num_traits::{One, Signed, Zero};

#[derive(Clone, Debug, PartialEq)]
pub struct QInterval {
    pub lo: Rational,
    pub hi: Rational,
}

impl QInterval {
    pub fn new(lo: Rational, hi: Rational) -> Self {
        assert!(lo <= hi, "inverted interval");
        QInterval { lo, hi }
    }

    pub fn point(q: Rational) -> Self {
        QInterval {
            lo: q.clone(),
            hi: q,
        }
    }

    pub fn zero() -> Self {
        Self::point(Rational::zero())
    }

    pub fn width(&self) -> Rational {
        &self.hi - &self.lo
    }

    pub fn midpoint(&self) -> Rational {
        (&self.lo + &self.hi) / rat(2)
    }

    pub fn radius(&self) -> Rational {
        self.width() / rat(2)
    }

    pub fn contains(&self, q: &Rational) -> bool {
        &self.lo <= q && q <= &self.hi
    }

    pub fn add(&self, rhs: &QInterval) -> QInterval {
        QInterval {
            lo: &self.lo + &rhs.lo,
            hi: &self.hi + &rhs.hi,
        }
    }

    pub fn sub(&self, rhs: &QInterval) -> QInterval {
        QInterval {
            lo: &self.lo - &rhs.hi,
            hi: &self.hi - &rhs.lo,
        }
    }

    pub fn neg(&self) -> QInterval {
        QInterval {
            lo: -self.hi.clone(),
            hi: -self.lo.clone(),
        }
    }

    pub fn scale(&self, c: &Rational) -> QInterval {
        if c.is_negative() {
            QInterval {
                lo: &self.hi * c,
                hi: &self.lo * c,
            }
        } else {
            QInterval {
                lo: &self.lo * c,
                hi: &self.hi * c,
            }
        }
    }

    /// Outward rounding to denominators 2^bits.
    pub fn compress(&self, bits: u32) -> QInterval {
        QInterval {
            lo: dyadic_floor(&self.lo, bits),
            hi: dyadic_ceil(&self.hi, bits),
        }
    }
}

fn pow2(bits: u32) -> Integer {
    Integer::one() << bits
}

fn dyadic_floor(q: &Rational, bits: u32) -> Rational {
    let scaled = q * Rational::from_integer(pow2(bits));
    Rational::new(scaled.floor().to_integer(), pow2(bits))
}

fn dyadic_ceil(q: &Rational, bits: u32) -> Rational {
    let scaled = q * Rational::from_integer(pow2(bits));
    Rational::new(scaled.ceil().to_integer(), pow2(bits))
}

/// Enclosure of sqrt(x) for a nonnegative interval, endpoints dyadic.
pub fn sqrt_outward(x: &QInterval, bits: u32) -> QInterval {
    assert!(!x.lo.is_negative(), "sqrt of a negative interval");
    let scale = pow2(2 * bits);
    let lo_scaled = (&x.lo * Rational::from_integer(scale.clone()))
        .floor()
        .to_integer();
    let hi_scaled = (&x.hi * Rational::from_integer(scale)).ceil().to_integer();
    let lo_root = lo_scaled.sqrt(); // floor sqrt
    let hi_root = hi_scaled.sqrt() + Integer::one();
    QInterval {
        lo: Rational::new(lo_root, pow2(bits)),
        hi: Rational::new(hi_root, pow2(bits)),
    }
}

/// atan(1/m) for integer m >= 2, by the alternating Taylor series.
fn atan_inv_int(m: i64, bits: u32) -> QInterval {
    let mm = rat(m * m);
    let mut term = Rational::one() / rat(m);
    let mut sum = Rational::zero();
    let eps = Rational::new(Integer::one(), pow2(bits + 4));
    let mut k: i64 = 0;
    loop {
        let contrib = &term / rat(2 * k + 1);
        if k % 2 == 0 {
            sum += &contrib;
        } else {
            sum -= &contrib;
        }
        term /= &mm;
        k += 1;
        let next = &term / rat(2 * k + 1);
        if next < eps {
            // alternating series: error bounded by the first omitted term
            return QInterval::new(&sum - &next, &sum + &next).compress(bits + 2);
        }
    }
}

/// Enclosure of pi via Machin's formula.
pub fn pi(bits: u32) -> QInterval {
    let a = atan_inv_int(5, bits + 8).scale(&rat(16));
    let b = atan_inv_int(239, bits + 8).scale(&rat(4));
    a.sub(&b).compress(bits)
}

/// Taylor enclosure of atan(z) for rational 0 <= z <= 1/2.
fn atan_taylor_small(z: &Rational, bits: u32) -> QInterval {
    debug_assert!(!z.is_negative() && z <= &Rational::new(Integer::one(), Integer::from(2)));
    if z.is_zero() {
        return QInterval::zero();
    }
    let zz = z * z;
    let mut term = z.clone();
    let mut sum = Rational::zero();
    let eps = Rational::new(Integer::one(), pow2(bits + 4));
    let mut k: i64 = 0;
    loop {
        let contrib = &term / rat(2 * k + 1);
        if k % 2 == 0 {
            sum += &contrib;
        } else {
            sum -= &contrib;
        }
        term *= &zz;
        term = dyadic_ceil(&term, 4 * bits); // keep denominators bounded
        k += 1;
        let next = &term / rat(2 * k + 1);
        if next < eps {
            return QInterval::new(&sum - &next, &sum + &next).compress(bits + 2);
        }
    }
}

/// Enclosure of atan(q) at a rational point.
pub fn atan_point(q: &Rational, bits: u32) -> QInterval {
    if q.is_negative() {
        return atan_point(&-q.clone(), bits).neg();
    }
    if q > &Rational::one() {
        // atan(q) = pi/2 - atan(1/q)
        let half_pi = pi(bits + 6).scale(&Rational::new(Integer::one(), Integer::from(2)));
        return half_pi.sub(&atan_point(&(Rational::one() / q.clone()), bits + 4)).compress(bits);
    }
    // argument halving: atan(z) = 2 atan(z / (1 + sqrt(1 + z^2)))
    let work = bits + 16;
    let mut z = QInterval::point(q.clone());
    let half = Rational::new(Integer::one(), Integer::from(2));
    let mut doublings = 0u32;
    while z.hi > half {
        let zz = QInterval::new(&z.lo * &z.lo, &z.hi * &z.hi);
        let one_plus = QInterval::new(rat(1) + zz.lo, rat(1) + zz.hi);
        let root = sqrt_outward(&one_plus, work);
        let denom_lo = rat(1) + root.lo;
        let denom_hi = rat(1) + root.hi;
        z = QInterval::new(&z.lo / &denom_hi, &z.hi / &denom_lo).compress(work);
        doublings += 1;
    }
    // Lipschitz constant of atan is 1: interval width carries through
    let mid = z.midpoint();
    let base = atan_taylor_small(&mid, bits + 8);
    let slack = z.radius();
    let enclosed = QInterval::new(base.lo - &slack, base.hi + &slack);
    enclosed
        .scale(&Rational::from_integer(pow2(doublings)))
        .compress(bits)
}

/// Enclosure of arccos(x/2) for rational x in [-2, 2].
pub fn acos_half(x: &Rational, bits: u32) -> QInterval {
    assert!(x.abs() <= rat(2), "acos_half outside [-2, 2]");
    let y = x / rat(2);
    if y.is_zero() {
        return pi(bits + 2).scale(&Rational::new(Integer::one(), Integer::from(2)));
    }
    if y == Rational::one() {
        return QInterval::zero();
    }
    if y == -Rational::one() {
        return pi(bits);
    }
    if y.is_negative() {
        // acos(y) = pi - acos(-y)
        let p = pi(bits + 4);
        return p.sub(&acos_half(&-x.clone(), bits + 2)).compress(bits);
    }
    // 0 < y < 1: acos(y) = atan(sqrt(1 - y^2) / y), monotone in the argument
    let work = bits + 8;
    let r = sqrt_outward(&QInterval::point(rat(1) - &y * &y), work);
    let lo_arg = &r.lo / &y;
    let hi_arg = &r.hi / &y;
    let lo = atan_point(&lo_arg, work).lo;
    let hi = atan_point(&hi_arg, work).hi;
    QInterval::new(lo, hi).compress(bits)
}

/// Enclosure of arccos(x/2) over an x-interval (arccos is decreasing).
pub fn acos_half_interval(xlo: &Rational, xhi: &Rational, bits: u32) -> QInterval {
    let upper = acos_half(xlo, bits);
    let lower = acos_half(xhi, bits);
    QInterval::new(lower.lo, upper.hi)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ratio;
    use std::str::FromStr;

    fn decimal(s: &str) -> Rational {
        // "3.14159..." -> exact rational
        let (int_part, frac) = s.split_once('.').unwrap();
        let num = Integer::from_str(&format!("{}{}", int_part, frac)).unwrap();
        let den = Integer::from(10u32).pow(frac.len() as u32);
        Rational::new(num, den)
    }

    const PI_50: &str = "3.14159265358979323846264338327950288419716939937510";

    #[test]
    fn pi_matches_reference_digits() {
        // the reference is a 50-digit truncation, so ask for fewer bits
        let p = pi(150);
        let reference = decimal(PI_50);
        assert!(p.contains(&reference));
        assert!(p.width() < ratio(1, 10).pow(40));
    }

    #[test]
    fn atan_one_is_quarter_pi() {
        let a = atan_point(&rat(1), 120);
        let quarter = pi(140).scale(&ratio(1, 4));
        assert!(a.lo <= quarter.hi && quarter.lo <= a.hi);
        assert!(a.width() < ratio(1, 10).pow(30));
    }

    #[test]
    fn acos_half_of_one_is_pi_over_three() {
        // arccos(1/2) = pi/3
        let a = acos_half(&rat(1), 120);
        let third = pi(140).scale(&ratio(1, 3));
        assert!(a.lo <= third.hi && third.lo <= a.hi);
        assert!(a.width() < ratio(1, 10).pow(30));
    }

    #[test]
    fn acos_endpoints() {
        assert_eq!(acos_half(&rat(2), 64), QInterval::zero());
        let at_minus_two = acos_half(&rat(-2), 64);
        assert!(at_minus_two.contains(&decimal(PI_50)));
        let at_zero = acos_half(&rat(0), 100);
        let half_pi = decimal(PI_50) / rat(2);
        assert!(at_zero.contains(&half_pi));
    }

    #[test]
    fn acos_monotone_interval() {
        let i = acos_half_interval(&ratio(9, 10), &ratio(11, 10), 100);
        let lo_val = acos_half(&ratio(11, 10), 100);
        let hi_val = acos_half(&ratio(9, 10), 100);
        assert!(i.lo <= lo_val.lo && hi_val.hi <= i.hi);
    }

    #[test]
    fn sqrt_two_digits() {
        let s = sqrt_outward(&QInterval::point(rat(2)), 140);
        let reference = decimal("1.41421356237309504880168872420969807856967187537694");
        assert!(s.contains(&reference));
        assert!(s.width() < ratio(1, 10).pow(40));
    }
}
