//! Dense univariate polynomials over a field scalar, with Sturm-chain
//! real-root isolation.

use super::scalar::{OrderedScalar, Scalar};
use crate::error::{Error, Result};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

/// Polynomial stored low-to-high; no trailing zero coefficients.
/// The zero polynomial is the empty coefficient vector.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Poly<T> {
    coeffs: Vec<T>,
}

impl<T: Scalar> Poly<T> {
    pub fn zero() -> Self {
        Poly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Poly::constant(T::one())
    }

    pub fn constant(c: T) -> Self {
        Poly { coeffs: vec![c] }.normalized()
    }

    /// Builds from low-to-high coefficients, trimming trailing zeros.
    pub fn from_coeffs(coeffs: Vec<T>) -> Self {
        Poly { coeffs }.normalized()
    }

    /// The monomial c * x^k.
    pub fn monomial(c: T, k: usize) -> Self {
        if c.is_zero() {
            return Poly::zero();
        }
        let mut coeffs = vec![T::zero(); k + 1];
        coeffs[k] = c;
        Poly { coeffs }
    }

    fn normalized(mut self) -> Self {
        while self.coeffs.last().map_or(false, |c| c.is_zero()) {
            self.coeffs.pop();
        }
        self
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    /// Degree; the zero polynomial reports degree 0 here, guard with `is_zero`.
    pub fn degree(&self) -> usize {
        self.coeffs.len().saturating_sub(1)
    }

    pub fn coeff(&self, k: usize) -> T {
        self.coeffs.get(k).cloned().unwrap_or_else(T::zero)
    }

    pub fn coeffs(&self) -> &[T] {
        &self.coeffs
    }

    pub fn leading(&self) -> T {
        self.coeffs.last().cloned().unwrap_or_else(T::zero)
    }

    pub fn eval(&self, x: &T) -> T {
        let mut acc = T::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x.clone() + c.clone();
        }
        acc
    }

    pub fn scale(&self, c: &T) -> Self {
        if c.is_zero() {
            return Poly::zero();
        }
        Poly {
            coeffs: self.coeffs.iter().map(|a| a.clone() * c.clone()).collect(),
        }
        .normalized()
    }

    pub fn derivative(&self) -> Self {
        if self.coeffs.len() <= 1 {
            return Poly::zero();
        }
        let mut out = Vec::with_capacity(self.coeffs.len() - 1);
        let mut k = T::one();
        for c in &self.coeffs[1..] {
            out.push(c.clone() * k.clone());
            k = k + T::one();
        }
        Poly { coeffs: out }.normalized()
    }

    /// Euclidean division: self = q * d + r with deg r < deg d.
    pub fn divrem(&self, d: &Self) -> (Self, Self) {
        assert!(!d.is_zero(), "polynomial division by zero");
        if self.is_zero() || self.degree() < d.degree() {
            return (Poly::zero(), self.clone());
        }
        let mut rem = self.coeffs.clone();
        let dd = d.degree();
        let lead = d.leading();
        let mut quot = vec![T::zero(); self.degree() - dd + 1];
        for k in (dd..rem.len()).rev() {
            let c = rem[k].clone();
            if c.is_zero() {
                continue;
            }
            let q = c / lead.clone();
            quot[k - dd] = q.clone();
            for (i, dc) in d.coeffs.iter().enumerate() {
                let idx = k - dd + i;
                rem[idx] = rem[idx].clone() - q.clone() * dc.clone();
            }
        }
        (
            Poly { coeffs: quot }.normalized(),
            Poly { coeffs: rem }.normalized(),
        )
    }

    pub fn rem(&self, d: &Self) -> Self {
        self.divrem(d).1
    }

    /// Monic gcd; gcd(0, 0) = 0.
    pub fn gcd(&self, other: &Self) -> Self {
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let r = a.rem(&b);
            a = b;
            b = r;
        }
        a.monic()
    }

    pub fn monic(&self) -> Self {
        if self.is_zero() {
            return Poly::zero();
        }
        let lead = self.leading();
        let inv = T::one() / lead;
        self.scale(&inv)
    }

    /// Square-free part self / gcd(self, self').
    pub fn squarefree_part(&self) -> Self {
        if self.is_zero() || self.degree() == 0 {
            return self.clone();
        }
        let g = self.gcd(&self.derivative());
        if g.degree() == 0 {
            return self.clone();
        }
        self.divrem(&g).0
    }

    /// Coefficient reversal x^deg * p(1/x).
    pub fn reversed(&self) -> Self {
        let mut coeffs = self.coeffs.clone();
        coeffs.reverse();
        Poly { coeffs }.normalized()
    }

    /// Exact square root of a monic even-degree polynomial, by coefficient
    /// recursion from the leading term. `None` when no square root exists.
    pub fn sqrt_monic(&self) -> Option<Self> {
        if self.is_zero() {
            return Some(Poly::zero());
        }
        if !self.leading().is_one() || self.degree() % 2 != 0 {
            return None;
        }
        let n = self.degree() / 2;
        let mut q = vec![T::zero(); n + 1];
        q[n] = T::one();
        // Matching the coefficient of x^(2n - k) determines q[n - k].
        for k in 1..=n {
            let mut s = T::zero();
            for i in 1..k {
                s = s + q[n - i].clone() * q[n - (k - i)].clone();
            }
            let two = T::one() + T::one();
            q[n - k] = (self.coeff(2 * n - k) - s) / two;
        }
        let cand = Poly { coeffs: q }.normalized();
        let sq = cand.clone() * cand.clone();
        if sq == *self {
            Some(cand)
        } else {
            None
        }
    }
}

impl<T: Scalar> Add for Poly<T> {
    type Output = Poly<T>;
    fn add(self, rhs: Poly<T>) -> Poly<T> {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut out = Vec::with_capacity(n);
        for i in 0..n {
            let a = self.coeffs.get(i).cloned().unwrap_or_else(T::zero);
            let b = rhs.coeffs.get(i).cloned().unwrap_or_else(T::zero);
            out.push(a + b);
        }
        Poly { coeffs: out }.normalized()
    }
}

impl<T: Scalar> Sub for Poly<T> {
    type Output = Poly<T>;
    fn sub(self, rhs: Poly<T>) -> Poly<T> {
        self + (-rhs)
    }
}

impl<T: Scalar> Neg for Poly<T> {
    type Output = Poly<T>;
    fn neg(self) -> Poly<T> {
        Poly {
            coeffs: self.coeffs.into_iter().map(|c| -c).collect(),
        }
    }
}

impl<T: Scalar> Mul for Poly<T> {
    type Output = Poly<T>;
    fn mul(self, rhs: Poly<T>) -> Poly<T> {
        if self.is_zero() || rhs.is_zero() {
            return Poly::zero();
        }
        let mut out = vec![T::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] = out[i + j].clone() + a.clone() * b.clone();
            }
        }
        Poly { coeffs: out }.normalized()
    }
}

impl<T: Scalar + fmt::Display> fmt::Display for Poly<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match k {
                0 => write!(f, "{}", c)?,
                1 => write!(f, "{}*x", c)?,
                _ => write!(f, "{}*x^{}", c, k)?,
            }
        }
        Ok(())
    }
}

impl<T: fmt::Debug> fmt::Debug for Poly<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Poly{:?}", self.coeffs)
    }
}

// ---------------------------------------------------------------------------
// Sturm chains and root isolation.
// ---------------------------------------------------------------------------

fn sign<T: OrderedScalar>(x: &T) -> i8 {
    if x.is_zero() {
        0
    } else if x.is_positive() {
        1
    } else {
        -1
    }
}

/// The canonical Sturm chain of the square-free part of `p`.
pub struct SturmChain<T> {
    chain: Vec<Poly<T>>,
}

impl<T: OrderedScalar> SturmChain<T> {
    pub fn new(p: &Poly<T>) -> Self {
        let p0 = p.squarefree_part();
        let mut chain = vec![p0.clone()];
        if p0.degree() >= 1 {
            chain.push(p0.derivative());
            loop {
                let n = chain.len();
                let r = chain[n - 2].rem(&chain[n - 1]);
                if r.is_zero() {
                    break;
                }
                chain.push(-r);
            }
        }
        SturmChain { chain }
    }

    fn variations_at(&self, x: &T) -> usize {
        let mut count = 0;
        let mut last = 0i8;
        for q in &self.chain {
            let s = sign(&q.eval(x));
            if s != 0 {
                if last != 0 && s != last {
                    count += 1;
                }
                last = s;
            }
        }
        count
    }

    /// Number of distinct real roots in the half-open interval (lo, hi].
    pub fn count_half_open(&self, lo: &T, hi: &T) -> usize {
        self.variations_at(lo) - self.variations_at(hi)
    }

    /// Number of distinct real roots in the open interval (lo, hi).
    pub fn count_open(&self, p: &Poly<T>, lo: &T, hi: &T) -> usize {
        let mut n = self.count_half_open(lo, hi);
        if p.eval(hi).is_zero() {
            n -= 1;
        }
        n
    }
}

/// Isolates the distinct real roots of `p` in the open interval (lo, hi).
///
/// Returns disjoint open intervals with rational non-root endpoints, one per
/// root, in increasing order.
pub fn sturm_isolate<T: OrderedScalar>(p: &Poly<T>, lo: &T, hi: &T) -> Result<Vec<(T, T)>> {
    if p.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    if lo >= hi {
        return Err(Error::Domain("empty interval: lo must be < hi".into()));
    }
    let chain = SturmChain::new(p);
    let mut out = Vec::new();
    isolate_rec(p, &chain, lo.clone(), hi.clone(), &mut out);
    Ok(out)
}

fn isolate_rec<T: OrderedScalar>(
    p: &Poly<T>,
    chain: &SturmChain<T>,
    lo: T,
    hi: T,
    out: &mut Vec<(T, T)>,
) {
    let n = chain.count_open(p, &lo, &hi);
    if n == 0 {
        return;
    }
    if n == 1 {
        out.push((lo, hi));
        return;
    }
    let mid = split_point(p, &lo, &hi);
    isolate_rec(p, chain, lo, mid.clone(), out);
    isolate_rec(p, chain, mid, hi, out);
}

/// A point strictly inside (lo, hi) that is not a root of `p`. The midpoint
/// works except when it happens to be a root, in which case we walk toward
/// `hi` through a shrinking sequence; only finitely many points are roots.
fn split_point<T: OrderedScalar>(p: &Poly<T>, lo: &T, hi: &T) -> T {
    let two = T::one() + T::one();
    let mut mid = (lo.clone() + hi.clone()) / two.clone();
    let mut gap = (hi.clone() - lo.clone()) / (two.clone() * two.clone());
    while p.eval(&mid).is_zero() {
        mid = mid + gap.clone();
        gap = gap / two.clone();
    }
    mid
}

/// Refines an isolating interval of `p` (exactly one root inside) by
/// bisection until `hi - lo <= width`.
pub fn refine_root<T: OrderedScalar>(p: &Poly<T>, lo: &T, hi: &T, width: &T) -> (T, T) {
    let sf = p.squarefree_part();
    let mut lo = lo.clone();
    let mut hi = hi.clone();
    let s_hi = sign(&sf.eval(&hi));
    debug_assert!(sign(&sf.eval(&lo)) != 0 && s_hi != 0 && sign(&sf.eval(&lo)) != s_hi);
    let mut s_lo = sign(&sf.eval(&lo));
    while hi.clone() - lo.clone() > *width {
        let mid = split_point(&sf, &lo, &hi);
        if sign(&sf.eval(&mid)) == s_lo {
            lo = mid;
        } else {
            hi = mid;
        }
        s_lo = sign(&sf.eval(&lo));
    }
    (lo, hi)
}

/// Descartes sign-variation count of the coefficient sequence.
pub fn sign_variations<T: OrderedScalar>(p: &Poly<T>) -> usize {
    let mut count = 0;
    let mut last = 0i8;
    for c in p.coeffs() {
        let s = sign(c);
        if s != 0 {
            if last != 0 && s != last {
                count += 1;
            }
            last = s;
        }
    }
    count
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::{rat, ratio, QPoly, Rational};
    use num_traits::Zero;

    fn qp(cs: &[i64]) -> QPoly {
        Poly::from_coeffs(cs.iter().map(|&c| rat(c)).collect())
    }

    #[test]
    fn divrem_roundtrip() {
        let a = qp(&[1, 0, -3, 2, 5]);
        let b = qp(&[2, 1]);
        let (q, r) = a.divrem(&b);
        assert_eq!(q * b + r, a);
    }

    #[test]
    fn sturm_isolate_linear() {
        // x - 1 on (-2, 2): one interval containing 1
        let p = qp(&[-1, 1]);
        let iv = sturm_isolate(&p, &rat(-2), &rat(2)).unwrap();
        assert_eq!(iv.len(), 1);
        assert!(iv[0].0 < rat(1) && rat(1) < iv[0].1);
    }

    #[test]
    fn sturm_isolate_sqrt2() {
        // x^2 - 2 on (-2, 2): two intervals around +-sqrt(2).
        // Hand Sturm chain: (x^2-2, 2x, 2); V(-2)=2, V(2)=0.
        let p = qp(&[-2, 0, 1]);
        let iv = sturm_isolate(&p, &rat(-2), &rat(2)).unwrap();
        assert_eq!(iv.len(), 2);
        assert!(iv[0].1 <= iv[1].0);
        // each interval brackets a sign change
        for (lo, hi) in &iv {
            assert!(p.eval(lo) * p.eval(hi) < rat(0));
        }
    }

    #[test]
    fn sturm_isolate_no_real_roots() {
        let p = qp(&[1, 0, 1]); // x^2 + 1
        let iv = sturm_isolate(&p, &rat(-2), &rat(2)).unwrap();
        assert!(iv.is_empty());
    }

    #[test]
    fn sturm_zero_poly_errors() {
        let p: QPoly = Poly::zero();
        assert_eq!(
            sturm_isolate(&p, &rat(-1), &rat(1)),
            Err(crate::Error::ZeroPolynomial)
        );
    }

    #[test]
    fn sturm_root_at_midpoint() {
        // Roots at 0 and +-3/2; naive bisection of (-2,2) would split at the
        // root 0.
        let p = qp(&[0, -9, 0, 4]) ; // 4x^3 - 9x = x(2x-3)(2x+3)
        let iv = sturm_isolate(&p, &rat(-2), &rat(2)).unwrap();
        assert_eq!(iv.len(), 3);
        for (lo, hi) in &iv {
            assert!(!p.eval(lo).is_zero() && !p.eval(hi).is_zero());
        }
    }

    #[test]
    fn sturm_counts_distinct_roots_of_nonsquarefree() {
        // (x-1)^2 (x+1)
        let p = qp(&[1, -1, -1, 1]);
        let iv = sturm_isolate(&p, &rat(-2), &rat(2)).unwrap();
        assert_eq!(iv.len(), 2);
    }

    #[test]
    fn refine_nests() {
        let p = qp(&[-2, 0, 1]);
        let iv = sturm_isolate(&p, &rat(0), &rat(2)).unwrap();
        let (lo, hi) = &iv[0];
        let (l2, h2) = refine_root(&p, lo, hi, &ratio(1, 1 << 20));
        assert!(*lo <= l2 && h2 <= *hi);
        assert!(h2.clone() - l2.clone() <= ratio(1, 1 << 20));
        // sqrt(2) in the refined interval
        let two = rat(2);
        assert!(l2.clone() * l2 < two && two < h2.clone() * h2);
    }

    #[test]
    fn sqrt_monic_recovers() {
        let q = qp(&[3, -2, 1, 1]);
        let p = q.clone() * q.clone();
        let r = p.monic().sqrt_monic().unwrap();
        assert_eq!(r, q.monic());
        assert_eq!(qp(&[1, 2, 3]).sqrt_monic(), None);
    }

    #[test]
    fn eval_horner() {
        let p = qp(&[1, -1, 2]);
        assert_eq!(p.eval(&ratio(1, 2)), ratio(1, 1));
        let _ = Rational::from_integer(1.into());
    }

    #[test]
    fn generic_over_float_scalars() {
        // the layer is scalar-generic; floats satisfy the same bounds
        let p: Poly<f64> = Poly::from_coeffs(vec![-2.0, 0.0, 1.0]);
        let (q, r) = p.divrem(&Poly::from_coeffs(vec![1.0, 1.0]));
        assert_eq!(q.degree(), 1);
        assert!(!r.is_zero());
        let roots = sturm_isolate(&p, &-2.0, &2.0).unwrap();
        assert_eq!(roots.len(), 2);
    }
}
