//! The Levine-Tristram signature step function on the unit circle and its
//! normalized integral rho_0.
//!
//! The circle is parametrized by x = 2cos(theta) on the upper semicircle;
//! jumps sit at the roots in (-2, 2) of the symmetrized Alexander
//! polynomial, and every plateau value is computed exactly at a rational
//! interior point.

use crate::algebra::algnum::AlgebraicNumber;
use crate::algebra::hermitian::{hermitian_char_poly, signature_from_charpoly};
use crate::algebra::interval::{acos_half_interval, pi, QInterval};
use crate::algebra::poly::{sturm_isolate, Poly};
use crate::error::{Error, Result};
use crate::seifert::SeifertMatrix;
use crate::{rat, ratio, QPoly, Rational};
use num_traits::{Signed, Zero};

/// Certified step function of the Levine-Tristram signature.
#[derive(Clone, Debug)]
pub struct SignatureFunction {
    /// Jump abscissae x in (-2, 2), increasing.
    jumps: Vec<AlgebraicNumber>,
    /// Plateau values, one per open arc, ordered from theta = 0 to theta = pi
    /// (x = 2 down to x = -2).
    plateaus: Vec<i64>,
    /// Value at omega = -1 (x = -2).
    at_minus_one: i64,
    /// Rational interior sample per plateau, in plateau (theta) order.
    samples: Vec<Rational>,
    /// Symmetrized Alexander polynomial P with Delta(t) = t^h P(t + 1/t).
    sym_poly: QPoly,
}

impl SignatureFunction {
    pub fn jumps(&self) -> &[AlgebraicNumber] {
        &self.jumps
    }

    pub fn plateaus(&self) -> &[i64] {
        &self.plateaus
    }

    pub fn at_minus_one(&self) -> i64 {
        self.at_minus_one
    }

    pub fn samples(&self) -> &[Rational] {
        &self.samples
    }

    pub fn sym_poly(&self) -> &QPoly {
        &self.sym_poly
    }

    pub fn is_identically_zero(&self) -> bool {
        self.plateaus.iter().all(|&p| p == 0)
    }

    /// Sample point and value of the first nonzero plateau, if any.
    pub fn first_nonzero_plateau(&self) -> Option<(Rational, i64)> {
        self.plateaus
            .iter()
            .zip(&self.samples)
            .find(|(&p, _)| p != 0)
            .map(|(&p, s)| (s.clone(), p))
    }

    /// Arc rows (theta_lo, theta_hi, sigma) with certified enclosures of the
    /// jump angles, theta running from 0 to pi.
    pub fn arc_rows(&self, bits: u32) -> Vec<(QInterval, QInterval, i64)> {
        let mut cuts = vec![QInterval::zero()];
        // jumps in decreasing x = increasing theta
        for j in self.jumps.iter().rev() {
            let enc = j.enclosure(bits + 8);
            cuts.push(acos_half_interval(&enc.lo, &enc.hi, bits));
        }
        cuts.push(pi(bits));
        self.plateaus
            .iter()
            .enumerate()
            .map(|(i, &sigma)| (cuts[i].clone(), cuts[i + 1].clone(), sigma))
            .collect()
    }

    /// Arc rows refined until every angle enclosure has radius below
    /// 10^-(digits+1), so midpoints print correctly to `digits` decimals.
    /// Working precision adapts: the arccos of an x-enclosure loses
    /// accuracy near x = +-2, where the derivative is unbounded.
    pub fn arc_rows_certified(&self, digits: usize) -> Vec<(QInterval, QInterval, i64)> {
        let target = Rational::new(
            1.into(),
            num_bigint::BigInt::from(10u32).pow(digits as u32 + 1),
        );
        let mut bits = (digits as f64 * 3.33) as u32 + 16;
        loop {
            let rows = self.arc_rows(bits);
            if rows
                .iter()
                .all(|(lo, hi, _)| lo.radius() <= target && hi.radius() <= target)
            {
                return rows;
            }
            bits *= 2;
            assert!(bits < 1 << 20, "arc refinement failed to converge");
        }
    }
}

/// Computes the certified signature step function of a Seifert matrix.
pub fn signature_function(v: &SeifertMatrix) -> SignatureFunction {
    let sym = symmetrized_alexander(v);
    let jumps_iv = if sym.is_constant() {
        Vec::new()
    } else {
        sturm_isolate(&sym, &rat(-2), &rat(2)).expect("symmetrized Alexander is nonzero")
    };

    let jumps: Vec<AlgebraicNumber> = jumps_iv
        .iter()
        .map(|(lo, hi)| {
            AlgebraicNumber::new(sym.clone(), lo.clone(), hi.clone())
                .expect("isolating interval certified by sturm_isolate")
        })
        .collect();

    // interior sample per x-arc, in increasing x order
    let mut x_samples = Vec::with_capacity(jumps_iv.len() + 1);
    if jumps_iv.is_empty() {
        x_samples.push(rat(0));
    } else {
        x_samples.push((rat(-2) + jumps_iv[0].0.clone()) / rat(2));
        for w in jumps_iv.windows(2) {
            x_samples.push((w[0].1.clone() + w[1].0.clone()) / rat(2));
        }
        x_samples.push((jumps_iv.last().unwrap().1.clone() + rat(2)) / rat(2));
    }

    let sigma_of = |c: &Rational| -> i64 {
        let p = hermitian_char_poly(v.entries(), c).expect("|c| <= 2 by construction");
        signature_from_charpoly(&p)
    };

    let plateaus_x_order: Vec<i64> = x_samples.iter().map(&sigma_of).collect();
    let at_minus_one = sigma_of(&rat(-2));

    // plateau order is theta order: x decreasing
    let plateaus: Vec<i64> = plateaus_x_order.iter().rev().copied().collect();
    let samples: Vec<Rational> = x_samples.iter().rev().cloned().collect();
    debug_assert_eq!(plateaus.len(), jumps.len() + 1);
    debug_assert_eq!(plateaus[0], 0, "plateau adjacent to omega = 1 must vanish");

    SignatureFunction {
        jumps,
        plateaus,
        at_minus_one,
        samples,
        sym_poly: sym,
    }
}

/// P(x) with Delta(t) * t^(-h) = P(t + 1/t), via the basis
/// q_k(x) = t^k + t^(-k): q_0 = 2, q_1 = x, q_(k+1) = x q_k - q_(k-1).
fn symmetrized_alexander(v: &SeifertMatrix) -> QPoly {
    let delta = v.alexander_polynomial();
    let deg = delta.max_exp().unwrap_or(0);
    debug_assert!(deg % 2 == 0, "normalized Alexander has even degree");
    let h = deg / 2;
    let centered = delta.mul_t_pow(-h);
    debug_assert_eq!(centered.involution(), centered, "palindromic identity");

    let x = Poly::from_coeffs(vec![rat(0), rat(1)]);
    let mut q_prev: QPoly = Poly::constant(rat(2));
    let mut q_cur = x.clone();
    let mut acc = Poly::constant(centered.coeff(0));
    for k in 1..=h {
        let c = centered.coeff(k);
        if !c.is_zero() {
            acc = acc + q_cur.scale(&c);
        }
        let next = x.clone() * q_cur.clone() - q_prev;
        q_prev = q_cur;
        q_cur = next;
    }
    acc
}

/// Exact signature at the circle point with 2cos(theta) = c.
pub fn sigma_at(v: &SeifertMatrix, c: &Rational) -> Result<i64> {
    if c.abs() > rat(2) {
        return Err(Error::Domain(format!("|c| must be <= 2, got {}", c)));
    }
    let sym = symmetrized_alexander(v);
    if sym.eval(c).is_zero() {
        return Err(Error::JumpDiscontinuity(c.to_string()));
    }
    let p = hermitian_char_poly(v.entries(), c)?;
    Ok(signature_from_charpoly(&p))
}

/// The integral of the signature function over the circle, normalized to
/// total measure 1.
#[derive(Clone, Debug, PartialEq)]
pub struct Rho0Value {
    /// Present when every jump angle is a rational multiple of pi detectable
    /// through rational jump cosines (Niven: cos(theta) in {0, +-1/2, +-1}).
    pub exact: Option<Rational>,
    /// Certified enclosure of the value.
    pub interval: QInterval,
}

impl Rho0Value {
    pub fn exactly_zero(&self) -> bool {
        self.exact.as_ref().map_or(false, |q| q.is_zero())
    }
}

pub const DEFAULT_RHO0_RADIUS_BITS: u32 = 100;

pub fn rho0(v: &SeifertMatrix) -> Rho0Value {
    rho0_with_bits(v, DEFAULT_RHO0_RADIUS_BITS)
}

/// rho_0 with the interval radius target 2^-bits.
pub fn rho0_with_bits(v: &SeifertMatrix, bits: u32) -> Rho0Value {
    let sf = signature_function(v);
    rho0_of_signature(&sf, bits)
}

pub fn rho0_of_signature(sf: &SignatureFunction, bits: u32) -> Rho0Value {
    if sf.is_identically_zero() {
        return Rho0Value {
            exact: Some(Rational::zero()),
            interval: QInterval::zero(),
        };
    }

    // Niven-exact jump angles: jump cosine x/2 rational forces x in
    // {-1, 0, 1} for theta a rational multiple of pi (x = +-2 cannot be a
    // jump since Delta(1) = 1 and |Delta(-1)| is odd).
    let nice: [(Rational, Rational); 3] = [
        (rat(1), ratio(1, 3)),
        (rat(0), ratio(1, 2)),
        (rat(-1), ratio(2, 3)),
    ];
    let mut exact_fracs: Option<Vec<Rational>> = Some(Vec::new());
    for j in sf.jumps().iter().rev() {
        // theta order: decreasing x
        let hit = nice
            .iter()
            .find(|(x, _)| j.is_rational_value(x))
            .map(|(_, f)| f.clone());
        match (hit, &mut exact_fracs) {
            (Some(f), Some(list)) => list.push(f),
            _ => {
                exact_fracs = None;
                break;
            }
        }
    }
    let exact = exact_fracs.map(|fracs| {
        let mut cuts = vec![Rational::zero()];
        cuts.extend(fracs);
        cuts.push(Rational::from_integer(1.into()));
        let mut acc = Rational::zero();
        for (i, &p) in sf.plateaus().iter().enumerate() {
            acc += rat(p) * (&cuts[i + 1] - &cuts[i]);
        }
        acc
    });

    // certified interval, refining until the radius target is met
    let target = Rational::new(1.into(), num_bigint::BigInt::from(1) << bits);
    let mut work_bits = bits + 16;
    let interval = loop {
        let rows = sf.arc_rows(work_bits);
        let mut total = QInterval::zero();
        for (lo, hi, sigma) in &rows {
            let width = hi.sub(lo);
            total = total.add(&width.scale(&rat(*sigma)));
        }
        let p = pi(work_bits);
        let iv = interval_div_pos(&total, &p);
        if iv.radius() <= target {
            break iv;
        }
        work_bits *= 2;
        assert!(work_bits < 1 << 20, "rho0 refinement failed to converge");
    };

    if let Some(q) = &exact {
        debug_assert!(interval.contains(q), "exact rho0 escapes its interval");
    }
    Rho0Value { exact, interval }
}

/// Interval quotient with a strictly positive divisor.
fn interval_div_pos(a: &QInterval, b: &QInterval) -> QInterval {
    assert!(b.lo.is_positive());
    let candidates = [
        &a.lo / &b.lo,
        &a.lo / &b.hi,
        &a.hi / &b.lo,
        &a.hi / &b.hi,
    ];
    let lo = candidates.iter().min().unwrap().clone();
    let hi = candidates.iter().max().unwrap().clone();
    QInterval::new(lo, hi)
}

/// Decimal string of a rational with `digits` fractional digits
/// (round-to-nearest on the last digit).
pub fn decimal_string(q: &Rational, digits: usize) -> String {
    let scale = num_bigint::BigInt::from(10u32).pow(digits as u32);
    let scaled = q * Rational::from_integer(scale.clone());
    let rounded = scaled.round().to_integer();
    let negative = rounded.is_negative();
    let mag = rounded.abs();
    let (int_part, frac_part) = (mag.clone() / &scale, mag % &scale);
    let frac_str = format!("{:0>width$}", frac_part.to_string(), width = digits);
    let sign = if negative { "-" } else { "" };
    if digits == 0 {
        format!("{}{}", sign, int_part)
    } else {
        format!("{}{}.{}", sign, int_part, frac_str)
    }
}
