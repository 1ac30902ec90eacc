//! Exact characteristic polynomials of the Hermitian forms
//! H(w) = (1-w)V + (1-conj(w))V^T on the unit circle, parametrized by
//! c = 2cos(theta), and exact signature counts from real-rooted
//! characteristic polynomials.

use super::poly::{sign_variations, Poly};
use crate::error::{Error, Result};
use crate::{rat, ratio, QPoly, Rational};
use num_traits::{One, Signed, Zero};

/// Element a + b*s of Q[s]/(s^2 - sigma).
#[derive(Clone, PartialEq)]
struct Quad {
    a: Rational,
    b: Rational,
}

impl Quad {
    fn zero() -> Self {
        Quad {
            a: Rational::zero(),
            b: Rational::zero(),
        }
    }

    fn from_rat(a: Rational) -> Self {
        Quad {
            a,
            b: Rational::zero(),
        }
    }

    fn s_times(b: Rational) -> Self {
        Quad {
            a: Rational::zero(),
            b,
        }
    }

    fn add(&self, rhs: &Quad) -> Quad {
        Quad {
            a: &self.a + &rhs.a,
            b: &self.b + &rhs.b,
        }
    }

    fn mul(&self, rhs: &Quad, sigma: &Rational) -> Quad {
        Quad {
            a: &self.a * &rhs.a + &self.b * &rhs.b * sigma,
            b: &self.a * &rhs.b + &self.b * &rhs.a,
        }
    }

    fn scale(&self, c: &Rational) -> Quad {
        Quad {
            a: &self.a * c,
            b: &self.b * c,
        }
    }
}

/// Characteristic polynomial det(lambda*I - H) of the Hermitian matrix
/// H = (1-w)V + (1-conj(w))V^T at w = e^{i*theta}, c = 2cos(theta).
///
/// Writing H = A + iB with A = (1 - c/2)(V + V^T) and B = sin(theta)(V^T - V),
/// the doubled real-symmetric matrix [[A, -B], [B, A]] has characteristic
/// polynomial equal to the square of the answer, and its coefficients only
/// involve sin^2(theta) = 1 - c^2/4; the computation runs in
/// Q\[s\]/(s^2 - (1 - c^2/4)) and takes the exact polynomial square root at
/// the end, so every coefficient is an exact rational.
pub fn hermitian_char_poly(v: &[Vec<i64>], c: &Rational) -> Result<QPoly> {
    let n = v.len();
    for row in v {
        if row.len() != n {
            return Err(Error::Domain("matrix is not square".into()));
        }
    }
    if c.abs() > rat(2) {
        return Err(Error::Domain(format!("|c| must be <= 2, got {}", c)));
    }
    if n == 0 {
        return Ok(Poly::one());
    }

    let sigma = rat(1) - c * c * ratio(1, 4);
    // A = (1 - c/2)(V + V^T), B = s (V^T - V)
    let amul = rat(1) - c * ratio(1, 2);
    let big = 2 * n;
    let mut d = vec![vec![Quad::zero(); big]; big];
    for i in 0..n {
        for j in 0..n {
            let vij = rat(v[i][j]);
            let vji = rat(v[j][i]);
            let a = (&vij + &vji) * &amul;
            let b = &vji - &vij;
            d[i][j] = Quad::from_rat(a.clone());
            d[n + i][n + j] = Quad::from_rat(a);
            // top-right block -B, bottom-left block B
            d[i][n + j] = Quad::s_times(-b.clone());
            d[n + i][j] = Quad::s_times(b);
        }
    }

    // Faddeev-LeVerrier over the commutative ring Q[s]/(s^2 - sigma)
    let mut coeffs: Vec<Quad> = Vec::with_capacity(big);
    let mut mk = d.clone();
    for k in 1..=big {
        let mut tr = Quad::zero();
        for i in 0..big {
            tr = tr.add(&mk[i][i]);
        }
        let ck = tr.scale(&(-Rational::one() / rat(k as i64)));
        coeffs.push(ck.clone());
        if k == big {
            break;
        }
        // mk <- d * (mk + ck I)
        for i in 0..big {
            mk[i][i] = mk[i][i].add(&ck);
        }
        let mut next = vec![vec![Quad::zero(); big]; big];
        for i in 0..big {
            for l in 0..big {
                let dil = &d[i][l];
                if dil.a.is_zero() && dil.b.is_zero() {
                    continue;
                }
                for j in 0..big {
                    let prod = dil.mul(&mk[l][j], &sigma);
                    next[i][j] = next[i][j].add(&prod);
                }
            }
        }
        mk = next;
    }

    // coefficients of det(lambda I - D), which only involve s^2
    let mut squared = vec![Rational::zero(); big + 1];
    squared[big] = Rational::one();
    for (k, ck) in coeffs.iter().enumerate() {
        assert!(
            ck.b.is_zero(),
            "doubled characteristic polynomial must be even in sin(theta)"
        );
        squared[big - 1 - k] = ck.a.clone();
    }
    let squared = Poly::from_coeffs(squared);
    let root = squared
        .sqrt_monic()
        .expect("square of the Hermitian characteristic polynomial admits an exact square root");
    Ok(root)
}

/// Signed root count (#positive - #negative, with multiplicity) of a
/// polynomial whose roots are all real, via Descartes sign variations.
/// The all-real-roots precondition is not checked.
pub fn signature_from_charpoly(p: &QPoly) -> i64 {
    if p.is_zero() {
        return 0;
    }
    // strip the roots at zero
    let mut coeffs = p.coeffs().to_vec();
    let first_nonzero = coeffs.iter().position(|c| !c.is_zero()).unwrap();
    coeffs.drain(..first_nonzero);
    let q = Poly::from_coeffs(coeffs);
    let pos = sign_variations(&q) as i64;
    let neg_poly = Poly::from_coeffs(
        q.coeffs()
            .iter()
            .enumerate()
            .map(|(i, c)| if i % 2 == 1 { -c.clone() } else { c.clone() })
            .collect(),
    );
    let neg = sign_variations(&neg_poly) as i64;
    pos - neg
}

#[cfg(test)]
mod tests {
    use super::*;

    fn qp(cs: &[i64]) -> QPoly {
        Poly::from_coeffs(cs.iter().map(|&c| rat(c)).collect())
    }

    #[test]
    fn trefoil_at_minus_one() {
        // H = 2(V + V^T) = [[-4, 2], [2, -4]] has char poly x^2 + 8x + 12
        let v = vec![vec![-1, 1], vec![0, -1]];
        let p = hermitian_char_poly(&v, &rat(-2)).unwrap();
        assert_eq!(p, qp(&[12, 8, 1]));
        assert_eq!(signature_from_charpoly(&p), -2);
    }

    #[test]
    fn vanishes_at_omega_one() {
        let v = vec![vec![3, -2], vec![5, 1]];
        let p = hermitian_char_poly(&v, &rat(2)).unwrap();
        assert_eq!(p, qp(&[0, 0, 1])); // lambda^2
        assert_eq!(signature_from_charpoly(&p), 0);
    }

    #[test]
    fn empty_matrix() {
        let p = hermitian_char_poly(&[], &ratio(1, 3)).unwrap();
        assert!(p.is_constant());
        assert_eq!(p, qp(&[1]));
    }

    #[test]
    fn out_of_domain() {
        assert!(hermitian_char_poly(&[vec![0]], &rat(3)).is_err());
    }

    #[test]
    fn interior_point_has_rational_coeffs_and_matches_square() {
        // figure-eight matrix at c = 0 (theta = pi/2):
        // H = [[2, 1 - i], [1 + i, -2]], det = -6, trace 0
        let v = vec![vec![1, 1], vec![0, -1]];
        let p = hermitian_char_poly(&v, &rat(0)).unwrap();
        assert_eq!(p, qp(&[-6, 0, 1]));
        assert_eq!(signature_from_charpoly(&p), 0);
    }

    #[test]
    fn descartes_counts() {
        assert_eq!(signature_from_charpoly(&qp(&[12, 8, 1])), -2); // roots -2, -6
        assert_eq!(signature_from_charpoly(&qp(&[0, 0, 1])), 0); // double zero root
        assert_eq!(signature_from_charpoly(&qp(&[-1, 0, 1])), 0); // roots +-1
        assert_eq!(signature_from_charpoly(&qp(&[2, -3, 1])), 2); // roots 1, 2
    }
}
