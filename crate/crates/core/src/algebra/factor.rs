//! Factorization over Q at desk scale: square-free (Yun) decomposition,
//! Berlekamp factorization modulo a small prime, linear multifactor Hensel
//! lifting, and subset recombination.

use super::poly::Poly;
use crate::error::{Error, Result};
use crate::{Integer, QPoly, Rational};
use num_integer::Integer as NumInteger;
use num_traits::{One, Signed, Zero};

/// Degree cap; inputs beyond it get a capability error.
pub const MAX_DEGREE: usize = 64;

#[derive(Clone, Debug, PartialEq)]
pub struct Factorization {
    /// Rational unit u with p = u * prod factor^multiplicity.
    pub unit: Rational,
    /// Irreducible primitive integer-coefficient factors, positive leading
    /// coefficient, sorted for determinism.
    pub factors: Vec<(QPoly, u32)>,
}

impl Factorization {
    pub fn expand(&self) -> QPoly {
        let mut acc = Poly::constant(self.unit.clone());
        for (f, m) in &self.factors {
            for _ in 0..*m {
                acc = acc * f.clone();
            }
        }
        acc
    }
}

/// Factors a nonzero rational polynomial into irreducibles over Q.
pub fn factor_over_q(p: &QPoly) -> Result<Factorization> {
    if p.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    if p.degree() > MAX_DEGREE {
        return Err(Error::Capability(format!(
            "factorization degree bound is {}, got {}",
            MAX_DEGREE,
            p.degree()
        )));
    }
    let (unit, prim) = primitive_integer_form(p);
    if prim.len() == 1 {
        return Ok(Factorization {
            unit,
            factors: Vec::new(),
        });
    }

    let mut factors: Vec<(QPoly, u32)> = Vec::new();
    for (g, mult) in squarefree_decomposition(&int_to_qpoly(&prim)) {
        for h in factor_squarefree(&g)? {
            factors.push((h, mult));
        }
    }
    factors.sort_by(|a, b| {
        a.0.degree()
            .cmp(&b.0.degree())
            .then_with(|| format!("{}", a.0).cmp(&format!("{}", b.0)))
    });

    // the factors are primitive with positive lc: the residual unit is
    // whatever rational scalar remains
    let mut expanded = Poly::constant(Rational::one());
    for (f, m) in &factors {
        for _ in 0..*m {
            expanded = expanded * f.clone();
        }
    }
    let final_unit = if expanded.is_zero() {
        unit
    } else {
        p.leading() / expanded.leading()
    };
    let out = Factorization {
        unit: final_unit,
        factors,
    };
    debug_assert_eq!(out.expand(), p.clone());
    Ok(out)
}

// --- integer / rational conversion helpers --------------------------------

fn primitive_integer_form(p: &QPoly) -> (Rational, Vec<Integer>) {
    let mut den_lcm = Integer::one();
    for c in p.coeffs() {
        den_lcm = den_lcm.lcm(c.denom());
    }
    let ints: Vec<Integer> = p
        .coeffs()
        .iter()
        .map(|c| c.numer() * (&den_lcm / c.denom()))
        .collect();
    let mut content = Integer::zero();
    for c in &ints {
        content = content.gcd(c);
    }
    if content.is_zero() {
        content = Integer::one();
    }
    if ints.last().map_or(false, |c| c.is_negative()) {
        content = -content;
    }
    let prim: Vec<Integer> = ints.iter().map(|c| c / &content).collect();
    (Rational::new(content, den_lcm), prim)
}

fn int_to_qpoly(c: &[Integer]) -> QPoly {
    Poly::from_coeffs(
        c.iter()
            .map(|x| Rational::from_integer(x.clone()))
            .collect(),
    )
}

fn qpoly_to_int(p: &QPoly) -> Vec<Integer> {
    let (unit, prim) = primitive_integer_form(p);
    debug_assert!(unit.is_one() || !prim.is_empty());
    prim
}

// --- Yun square-free decomposition -----------------------------------------

/// Returns square-free, pairwise-coprime g_i with p = unit * prod g_i^i;
/// each g_i is primitive integer with positive lc.
pub fn squarefree_decomposition(p: &QPoly) -> Vec<(QPoly, u32)> {
    let mut out = Vec::new();
    if p.degree() == 0 {
        return out;
    }
    let f = p.monic();
    let df = f.derivative();
    let a0 = f.gcd(&df);
    let mut b = f.divrem(&a0).0;
    let mut c = df.divrem(&a0).0;
    let mut d = c.clone() - b.derivative();
    let mut i = 1u32;
    while b.degree() > 0 {
        let g = b.gcd(&d);
        if g.degree() > 0 {
            out.push((int_to_qpoly(&qpoly_to_int(&g)), i));
        }
        b = b.divrem(&g).0;
        c = d.divrem(&g).0;
        d = c.clone() - b.derivative();
        i += 1;
    }
    out
}

// --- arithmetic in F_p[x] ---------------------------------------------------

const PRIMES: &[i64] = &[
    3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59, 61, 67, 71, 73, 79, 83, 89, 97,
    101, 103, 107, 109, 113, 127, 131, 137, 139, 149, 151, 157, 163, 167, 173, 179, 181, 191, 193,
    197, 199, 211, 223, 227, 229, 233, 239, 241, 251, 257, 263, 269, 271, 277, 281, 283, 293, 307,
    311, 313, 317, 331, 337, 347, 349, 353, 359, 367, 373, 379, 383, 389, 397, 401, 409, 419, 421,
    431, 433, 439, 443, 449, 457, 461, 463, 467, 479, 487, 491, 499, 503, 509, 521, 523, 541,
];

fn pmod(a: i64, p: i64) -> i64 {
    let r = a % p;
    if r < 0 {
        r + p
    } else {
        r
    }
}

fn inv_mod(a: i64, p: i64) -> i64 {
    // extended Euclid
    let (mut t, mut new_t) = (0i64, 1i64);
    let (mut r, mut new_r) = (p, pmod(a, p));
    while new_r != 0 {
        let q = r / new_r;
        (t, new_t) = (new_t, t - q * new_t);
        (r, new_r) = (new_r, r - q * new_r);
    }
    assert_eq!(r, 1, "element not invertible mod p");
    pmod(t, p)
}

type FpPoly = Vec<i64>; // low-to-high, trimmed, coefficients in [0, p)

fn fp_trim(mut a: FpPoly) -> FpPoly {
    while a.last() == Some(&0) {
        a.pop();
    }
    a
}

fn fp_deg(a: &FpPoly) -> isize {
    a.len() as isize - 1
}

#[allow(dead_code)]
fn fp_add(a: &FpPoly, b: &FpPoly, p: i64) -> FpPoly {
    let n = a.len().max(b.len());
    let mut out = vec![0i64; n];
    for i in 0..n {
        out[i] = pmod(a.get(i).copied().unwrap_or(0) + b.get(i).copied().unwrap_or(0), p);
    }
    fp_trim(out)
}

fn fp_sub(a: &FpPoly, b: &FpPoly, p: i64) -> FpPoly {
    let n = a.len().max(b.len());
    let mut out = vec![0i64; n];
    for i in 0..n {
        out[i] = pmod(a.get(i).copied().unwrap_or(0) - b.get(i).copied().unwrap_or(0), p);
    }
    fp_trim(out)
}

fn fp_mul(a: &FpPoly, b: &FpPoly, p: i64) -> FpPoly {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![0i64; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        if x == 0 {
            continue;
        }
        for (j, &y) in b.iter().enumerate() {
            out[i + j] = pmod(out[i + j] + ((x as i128 * y as i128) % p as i128) as i64, p);
        }
    }
    fp_trim(out)
}

fn fp_scale(a: &FpPoly, c: i64, p: i64) -> FpPoly {
    fp_trim(
        a.iter()
            .map(|&x| ((x as i128 * c as i128) % p as i128) as i64)
            .collect(),
    )
}

fn fp_divrem(a: &FpPoly, b: &FpPoly, p: i64) -> (FpPoly, FpPoly) {
    assert!(!b.is_empty());
    let mut rem = a.clone();
    let db = fp_deg(b);
    let inv_lead = inv_mod(*b.last().unwrap(), p);
    let mut quo = vec![0i64; a.len().saturating_sub(b.len()) + 1];
    while fp_deg(&rem) >= db {
        let k = (fp_deg(&rem) - db) as usize;
        let c = ((rem.last().copied().unwrap() as i128 * inv_lead as i128) % p as i128) as i64;
        quo[k] = c;
        let shifted: FpPoly = std::iter::repeat(0)
            .take(k)
            .chain(b.iter().copied())
            .collect();
        rem = fp_sub(&rem, &fp_scale(&shifted, c, p), p);
    }
    (fp_trim(quo), rem)
}

fn fp_gcd(a: &FpPoly, b: &FpPoly, p: i64) -> FpPoly {
    let mut a = a.clone();
    let mut b = b.clone();
    while !b.is_empty() {
        let r = fp_divrem(&a, &b, p).1;
        a = b;
        b = r;
    }
    fp_monic(&a, p)
}

fn fp_monic(a: &FpPoly, p: i64) -> FpPoly {
    if a.is_empty() {
        return a.clone();
    }
    fp_scale(a, inv_mod(*a.last().unwrap(), p), p)
}

/// Extended Euclid: returns (g, s, t) with s*a + t*b = g (g monic).
fn fp_xgcd(a: &FpPoly, b: &FpPoly, p: i64) -> (FpPoly, FpPoly, FpPoly) {
    let (mut r0, mut r1) = (a.clone(), b.clone());
    let (mut s0, mut s1) = (vec![1], Vec::new());
    let (mut t0, mut t1) = (Vec::new(), vec![1]);
    while !r1.is_empty() {
        let (q, r) = fp_divrem(&r0, &r1, p);
        let new_s = fp_sub(&s0, &fp_mul(&q, &s1, p), p);
        let new_t = fp_sub(&t0, &fp_mul(&q, &t1, p), p);
        r0 = std::mem::replace(&mut r1, r);
        s0 = std::mem::replace(&mut s1, new_s);
        t0 = std::mem::replace(&mut t1, new_t);
    }
    if r0.is_empty() {
        return (r0, s0, t0);
    }
    let c = inv_mod(*r0.last().unwrap(), p);
    (fp_scale(&r0, c, p), fp_scale(&s0, c, p), fp_scale(&t0, c, p))
}

fn fp_derivative(a: &FpPoly, p: i64) -> FpPoly {
    if a.len() <= 1 {
        return Vec::new();
    }
    fp_trim(
        a[1..]
            .iter()
            .enumerate()
            .map(|(i, &c)| pmod(c * ((i as i64 + 1) % p), p))
            .collect(),
    )
}

fn fp_pow_mod(base: &FpPoly, mut e: i64, modulus: &FpPoly, p: i64) -> FpPoly {
    let mut acc = vec![1i64];
    let mut b = fp_divrem(base, modulus, p).1;
    while e > 0 {
        if e & 1 == 1 {
            acc = fp_divrem(&fp_mul(&acc, &b, p), modulus, p).1;
        }
        b = fp_divrem(&fp_mul(&b, &b, p), modulus, p).1;
        e >>= 1;
    }
    acc
}

// --- Berlekamp --------------------------------------------------------------

/// Factors a monic square-free polynomial over F_p into monic irreducibles.
fn berlekamp(f: &FpPoly, p: i64) -> Vec<FpPoly> {
    let n = fp_deg(f) as usize;
    if n <= 1 {
        return vec![f.clone()];
    }
    // rows of M: coefficients of x^{ip} mod f
    let xp = fp_pow_mod(&vec![0, 1], p, f, p);
    let mut rows: Vec<FpPoly> = Vec::with_capacity(n);
    let mut cur = vec![1i64];
    for _ in 0..n {
        rows.push(cur.clone());
        cur = fp_divrem(&fp_mul(&cur, &xp, p), f, p).1;
    }
    // matrix (M - I)^T; kernel of v -> v(M - I)
    let mut a = vec![vec![0i64; n]; n];
    for i in 0..n {
        for j in 0..n {
            let mut v = rows[i].get(j).copied().unwrap_or(0);
            if i == j {
                v = pmod(v - 1, p);
            }
            a[j][i] = v; // transpose
        }
    }
    let basis = fp_nullspace(a, p, n);
    let r = basis.len();
    let mut factors: Vec<FpPoly> = vec![fp_monic(f, p)];
    if r == 1 {
        return factors;
    }
    'outer: for v in basis.iter() {
        if v.iter().skip(1).all(|&c| c == 0) {
            continue; // the constant vector does not split anything
        }
        let vp = fp_trim(v.clone());
        let mut next = Vec::new();
        for u in factors.drain(..) {
            if fp_deg(&u) <= 1 {
                next.push(u);
                continue;
            }
            let mut pieces = vec![u];
            for s in 0..p {
                let mut still = Vec::new();
                for w in pieces.drain(..) {
                    if fp_deg(&w) <= 1 {
                        still.push(w);
                        continue;
                    }
                    let mut shifted = vp.clone();
                    if shifted.is_empty() {
                        shifted = vec![0];
                    }
                    shifted[0] = pmod(shifted[0] - s, p);
                    let g = fp_gcd(&w, &fp_trim(shifted), p);
                    if fp_deg(&g) > 0 && fp_deg(&g) < fp_deg(&w) {
                        let q = fp_divrem(&w, &g, p).0;
                        still.push(fp_monic(&g, p));
                        still.push(fp_monic(&q, p));
                    } else {
                        still.push(w);
                    }
                }
                pieces = still;
                if pieces.len() == r {
                    break;
                }
            }
            next.extend(pieces);
        }
        factors = next;
        if factors.len() == r {
            break 'outer;
        }
    }
    factors
}

/// Kernel basis of the column-action matrix `a` (n x n) over F_p.
fn fp_nullspace(mut a: Vec<Vec<i64>>, p: i64, n: usize) -> Vec<Vec<i64>> {
    let mut pivot_col_of_row = vec![usize::MAX; n];
    let mut row = 0;
    for col in 0..n {
        let Some(pr) = (row..n).find(|&r| a[r][col] != 0) else {
            continue;
        };
        a.swap(row, pr);
        let inv = inv_mod(a[row][col], p);
        for j in 0..n {
            a[row][j] = ((a[row][j] as i128 * inv as i128) % p as i128) as i64;
        }
        for r in 0..n {
            if r != row && a[r][col] != 0 {
                let c = a[r][col];
                for j in 0..n {
                    a[r][j] = pmod(a[r][j] - ((c as i128 * a[row][j] as i128) % p as i128) as i64, p);
                }
            }
        }
        pivot_col_of_row[row] = col;
        row += 1;
        if row == n {
            break;
        }
    }
    let pivots: Vec<usize> = pivot_col_of_row[..row].to_vec();
    let mut basis = Vec::new();
    for free in 0..n {
        if pivots.contains(&free) {
            continue;
        }
        let mut v = vec![0i64; n];
        v[free] = 1;
        for (r, &pc) in pivots.iter().enumerate() {
            v[pc] = pmod(-a[r][free], p);
        }
        basis.push(v);
    }
    basis
}

// --- Hensel lifting and recombination ---------------------------------------

fn big_mod(a: &Integer, m: &Integer) -> Integer {
    let r = a % m;
    if r.is_negative() {
        r + m
    } else {
        r
    }
}

type ZPoly = Vec<Integer>;

fn z_trim(mut a: ZPoly) -> ZPoly {
    while a.last().map_or(false, |c| c.is_zero()) {
        a.pop();
    }
    a
}

fn z_mul_mod(a: &ZPoly, b: &ZPoly, m: &Integer) -> ZPoly {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![Integer::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            out[i + j] = big_mod(&(&out[i + j] + x * y), m);
        }
    }
    z_trim(out)
}

fn z_sub_mod(a: &ZPoly, b: &ZPoly, m: &Integer) -> ZPoly {
    let n = a.len().max(b.len());
    let mut out = vec![Integer::zero(); n];
    for i in 0..n {
        let x = a.get(i).cloned().unwrap_or_else(Integer::zero);
        let y = b.get(i).cloned().unwrap_or_else(Integer::zero);
        out[i] = big_mod(&(x - y), m);
    }
    z_trim(out)
}

/// Linear multifactor Hensel: lifts f = lc * prod(monic u_i) from mod p to
/// mod p^k (k chosen so p^k >= target), keeping the u_i monic.
fn hensel_lift(
    f: &ZPoly,
    lc: &Integer,
    factors_mod_p: &[FpPoly],
    p: i64,
    target: &Integer,
) -> (Vec<ZPoly>, Integer) {
    let r = factors_mod_p.len();
    // Bezout cofactors: b_i * prod_{j != i} u_j == 1 mod u_i
    let mut cof: Vec<FpPoly> = Vec::with_capacity(r);
    for i in 0..r {
        let mut prod_others = vec![1i64];
        for (j, u) in factors_mod_p.iter().enumerate() {
            if j != i {
                prod_others = fp_divrem(&fp_mul(&prod_others, u, p), &factors_mod_p[i], p).1;
            }
        }
        let (g, s, _t) = fp_xgcd(&prod_others, &factors_mod_p[i], p);
        assert_eq!(fp_deg(&g), 0, "modular factors must be pairwise coprime");
        cof.push(fp_divrem(&s, &factors_mod_p[i], p).1);
    }

    let mut lifted: Vec<ZPoly> = factors_mod_p
        .iter()
        .map(|u| u.iter().map(|&c| Integer::from(c)).collect())
        .collect();
    let pbig = Integer::from(p);
    let mut modulus = pbig.clone();
    let lc_inv_p = inv_mod((lc % &pbig).try_into().unwrap_or_else(|_| unreachable!()), p);
    while &modulus < target {
        let next = &modulus * &pbig;
        // error e = (f - lc * prod) / modulus  (an F_p polynomial)
        let mut prod: ZPoly = vec![lc.clone()];
        for u in &lifted {
            prod = z_mul_mod(&prod, u, &next);
        }
        let fmod: ZPoly = f.iter().map(|c| big_mod(c, &next)).collect();
        let diff = z_sub_mod(&z_trim(fmod), &prod, &next);
        let e: FpPoly = fp_trim(
            diff.iter()
                .map(|c| {
                    let q = c / &modulus;
                    let qm = big_mod(&q, &pbig);
                    i64::try_from(&qm).unwrap()
                })
                .collect(),
        );
        if !e.is_empty() {
            let c_poly = fp_scale(&e, lc_inv_p, p);
            for i in 0..r {
                let delta = fp_divrem(&fp_mul(&c_poly, &cof[i], p), &factors_mod_p[i], p).1;
                for (k, &d) in delta.iter().enumerate() {
                    if d != 0 {
                        let add = &modulus * Integer::from(d);
                        if k < lifted[i].len() {
                            lifted[i][k] = big_mod(&(&lifted[i][k] + add), &next);
                        } else {
                            while lifted[i].len() < k {
                                lifted[i].push(Integer::zero());
                            }
                            lifted[i].push(big_mod(&add, &next));
                        }
                    }
                }
                lifted[i] = z_trim(lifted[i].clone());
            }
        }
        modulus = next;
    }
    (lifted, modulus)
}

fn symmetric_rep(c: &Integer, m: &Integer) -> Integer {
    let r = big_mod(c, m);
    if &r * 2 > *m {
        r - m
    } else {
        r
    }
}

/// Factors a square-free primitive rational polynomial into primitive
/// integer irreducibles with positive leading coefficients.
fn factor_squarefree(g: &QPoly) -> Result<Vec<QPoly>> {
    let gi = qpoly_to_int(g);
    let n = gi.len() - 1;
    if n <= 1 {
        return Ok(vec![int_to_qpoly(&gi)]);
    }
    let lc = gi.last().unwrap().clone();

    // a prime where g stays square-free and the leading coefficient survives
    let mut chosen = None;
    'primes: for &p in PRIMES {
        if (&lc % Integer::from(p)).is_zero() {
            continue;
        }
        let fp: FpPoly = fp_trim(
            gi.iter()
                .map(|c| i64::try_from(&big_mod(c, &Integer::from(p))).unwrap())
                .collect(),
        );
        if fp_deg(&fp) != n as isize {
            continue;
        }
        let d = fp_derivative(&fp, p);
        if d.is_empty() {
            continue;
        }
        let gcd = fp_gcd(&fp, &d, p);
        if fp_deg(&gcd) == 0 {
            chosen = Some((p, fp_monic(&fp, p)));
            break 'primes;
        }
    }
    let Some((p, fmonic)) = chosen else {
        return Err(Error::Capability(
            "no usable small prime for modular factorization".into(),
        ));
    };

    let modular = berlekamp(&fmonic, p);
    if modular.len() == 1 {
        return Ok(vec![int_to_qpoly(&gi)]);
    }

    // Mignotte-style coefficient bound for divisors: 2^n * |f|_2 * |lc|
    let norm2_sq: Integer = gi.iter().map(|c| c * c).sum();
    let norm2 = norm2_sq.sqrt() + Integer::one();
    let bound: Integer = (Integer::one() << n) * norm2 * lc.abs();
    let target = &bound * Integer::from(2) + Integer::one();

    let (lifted, modulus) = hensel_lift(&gi, &lc, &modular, p, &target);

    // subset recombination
    let mut remaining: Vec<ZPoly> = lifted;
    let mut current = gi.clone();
    let mut out: Vec<QPoly> = Vec::new();
    let mut size = 1usize;
    while 2 * size <= remaining.len() {
        let idxs: Vec<usize> = (0..remaining.len()).collect();
        let mut found = None;
        for combo in combinations(&idxs, size) {
            let cur_lc = current.last().unwrap().clone();
            let mut cand: ZPoly = vec![cur_lc.clone()];
            for &i in &combo {
                cand = z_mul_mod(&cand, &remaining[i], &modulus);
            }
            let cand: ZPoly = z_trim(cand.iter().map(|c| symmetric_rep(c, &modulus)).collect());
            let candq = int_to_qpoly(&qpoly_to_int(&int_to_qpoly(&cand)));
            if candq.is_constant() {
                continue;
            }
            let (q, r) = int_to_qpoly(&current).divrem(&candq);
            if r.is_zero() {
                found = Some((combo, candq, q));
                break;
            }
        }
        match found {
            Some((combo, factor, quotient)) => {
                out.push(factor);
                let keep: Vec<ZPoly> = remaining
                    .iter()
                    .enumerate()
                    .filter(|(i, _)| !combo.contains(i))
                    .map(|(_, f)| f.clone())
                    .collect();
                remaining = keep;
                current = qpoly_to_int(&quotient);
            }
            None => size += 1,
        }
    }
    if current.len() > 1 {
        out.push(int_to_qpoly(&current));
    }
    Ok(out)
}

fn combinations(items: &[usize], k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let n = items.len();
    if k > n {
        return out;
    }
    let mut idx: Vec<usize> = (0..k).collect();
    loop {
        out.push(idx.iter().map(|&i| items[i]).collect());
        // advance
        let mut i = k;
        loop {
            if i == 0 {
                return out;
            }
            i -= 1;
            if idx[i] != i + n - k {
                break;
            }
            if i == 0 {
                return out;
            }
        }
        idx[i] += 1;
        for j in i + 1..k {
            idx[j] = idx[j - 1] + 1;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat;

    fn qp(cs: &[i64]) -> QPoly {
        Poly::from_coeffs(cs.iter().map(|&c| rat(c)).collect())
    }

    #[test]
    fn difference_of_squares() {
        let fs = factor_over_q(&qp(&[-1, 0, 1])).unwrap().factors;
        assert_eq!(fs.len(), 2);
        assert!(fs.contains(&(qp(&[1, 1]), 1)));
        assert!(fs.contains(&(qp(&[-1, 1]), 1)));
    }

    #[test]
    fn two_t2_minus_5t_plus_2() {
        // 2t^2 - 5t + 2 = (2t - 1)(t - 2)
        let f = factor_over_q(&qp(&[2, -5, 2])).unwrap();
        assert_eq!(f.factors.len(), 2);
        assert_eq!(f.expand(), qp(&[2, -5, 2]));
        let degs: Vec<usize> = f.factors.iter().map(|(p, _)| p.degree()).collect();
        assert_eq!(degs, vec![1, 1]);
    }

    #[test]
    fn irreducible_quadratic() {
        let f = factor_over_q(&qp(&[1, -1, 1])).unwrap();
        assert_eq!(f.factors.len(), 1);
        assert_eq!(f.factors[0].1, 1);
        assert_eq!(f.factors[0].0, qp(&[1, -1, 1]));
    }

    #[test]
    fn multiplicities_and_unit() {
        // 3 (x-1)^2 (x^2+1)
        let p = qp(&[1, -1]) * qp(&[1, -1]) * qp(&[1, 0, 1]).scale(&rat(3));
        let f = factor_over_q(&p).unwrap();
        assert_eq!(f.expand(), p);
        let mut mult_of_linear = 0;
        for (g, m) in &f.factors {
            if g.degree() == 1 {
                mult_of_linear = *m;
            }
        }
        assert_eq!(mult_of_linear, 2);
    }

    #[test]
    fn cyclotomic_like_product() {
        // (x^2 - x + 1)(x^2 + x + 1)(x - 2) = x^5 - 2x^4 + x^3 - x^2 ... just expand
        let p = qp(&[1, -1, 1]) * qp(&[1, 1, 1]) * qp(&[-2, 1]);
        let f = factor_over_q(&p).unwrap();
        assert_eq!(f.factors.len(), 3);
        assert_eq!(f.expand(), p);
    }

    #[test]
    fn degree_bound_enforced() {
        let mut coeffs = vec![rat(0); 66];
        coeffs[0] = rat(1);
        coeffs[65] = rat(1);
        let p = Poly::from_coeffs(coeffs);
        assert!(matches!(
            factor_over_q(&p),
            Err(Error::Capability(_))
        ));
    }

    #[test]
    fn constant_and_zero() {
        assert!(factor_over_q(&Poly::zero()).is_err());
        let f = factor_over_q(&qp(&[7])).unwrap();
        assert!(f.factors.is_empty());
        assert_eq!(f.unit, rat(7));
    }

    #[test]
    fn bigger_mixed_case() {
        // (3x^3 + x + 1)(x^4 - 2)(2x - 3)
        let p = qp(&[1, 1, 0, 3]) * qp(&[-2, 0, 0, 0, 1]) * qp(&[-3, 2]);
        let f = factor_over_q(&p).unwrap();
        assert_eq!(f.expand(), p);
        assert_eq!(f.factors.iter().map(|(g, m)| g.degree() * *m as usize).sum::<usize>(), 8);
        assert_eq!(f.factors.len(), 3);
    }
}
