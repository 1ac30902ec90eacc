//! Seifert matrices and the classical invariants derived from them:
//! Alexander polynomial, Arf invariant, connected sums and mirrors,
//! genus-one metabolizer enumeration, and the algebraic-sliceness decision.

use crate::algebra::laurent::LaurentPoly;
use crate::algebra::matrix::{det_domain, Mat};
use crate::error::{Error, Result};
use crate::signature;
use crate::{rat, QLaurent, Rational};
use num_traits::Zero;

/// Integer Seifert matrix of even size 2g with det(V - V^T) = 1.
/// Size 0 (the unknot) is legal.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SeifertMatrix {
    entries: Vec<Vec<i64>>,
    pub label: Option<String>,
}

impl SeifertMatrix {
    pub fn new(entries: Vec<Vec<i64>>) -> Result<Self> {
        let n = entries.len();
        if entries.iter().any(|r| r.len() != n) {
            return Err(Error::InvalidSeifert("matrix is not square".into()));
        }
        if n % 2 != 0 {
            return Err(Error::InvalidSeifert(format!("odd size {}", n)));
        }
        let m = SeifertMatrix {
            entries,
            label: None,
        };
        let skew_det = m.skew_form_det();
        if skew_det != rat(1) {
            return Err(Error::InvalidSeifert(format!(
                "det(V - V^T) = {}, expected 1",
                skew_det
            )));
        }
        Ok(m)
    }

    pub fn with_label(mut self, label: impl Into<String>) -> Self {
        self.label = Some(label.into());
        self
    }

    pub fn unknot() -> Self {
        SeifertMatrix {
            entries: Vec::new(),
            label: Some("unknot".into()),
        }
    }

    pub fn size(&self) -> usize {
        self.entries.len()
    }

    pub fn genus(&self) -> usize {
        self.size() / 2
    }

    pub fn entries(&self) -> &[Vec<i64>] {
        &self.entries
    }

    pub fn entry(&self, i: usize, j: usize) -> i64 {
        self.entries[i][j]
    }

    fn skew_form_det(&self) -> Rational {
        let n = self.size();
        let skew: Vec<Vec<i64>> = (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| self.entries[i][j] - self.entries[j][i])
                    .collect()
            })
            .collect();
        if let Some(d) = int_det_bareiss(&skew) {
            return Rational::from_integer(d.into());
        }
        let m = Mat::from_fn(n, n, |i, j| rat(skew[i][j]));
        crate::algebra::matrix::det_field(&m)
    }

    /// The presentation matrix tV - V^T of the rational Alexander module.
    pub fn presentation_matrix(&self) -> Mat<QLaurent> {
        let n = self.size();
        Mat::from_fn(n, n, |i, j| {
            LaurentPoly::from_terms([
                (1, rat(self.entries[i][j])),
                (0, -rat(self.entries[j][i])),
            ])
        })
    }

    /// det(V - tV^T), normalized so the minimal exponent is 0 and the value
    /// at t = 1 is +1; satisfies the palindromic identity.
    pub fn alexander_polynomial(&self) -> QLaurent {
        let n = self.size();
        if n == 0 {
            return LaurentPoly::one();
        }
        let m = Mat::from_fn(n, n, |i, j| {
            LaurentPoly::from_terms([
                (0, rat(self.entries[i][j])),
                (1, -rat(self.entries[j][i])),
            ])
        });
        let det = det_domain(&m);
        debug_assert!(!det.is_zero());
        let shifted = det.mul_t_pow(-det.min_exp().unwrap());
        // det(V - V^T) = 1 makes the value at t = 1 equal to +-1
        if shifted.eval_at_one() == rat(1) {
            shifted
        } else {
            -shifted
        }
    }

    /// Arf invariant of q(v) = v^T V v mod 2, by the counting definition:
    /// 0 iff q vanishes on a majority of (Z/2)^{2g}.
    pub fn arf(&self) -> u8 {
        let n = self.size();
        if n == 0 {
            return 0;
        }
        assert!(n <= 24, "Arf counting bounded to genus 12");
        let mut zeros: u64 = 0;
        for mask in 0u64..(1u64 << n) {
            let v: Vec<i64> = (0..n).map(|i| ((mask >> i) & 1) as i64).collect();
            let mut q = 0i64;
            for i in 0..n {
                for j in 0..n {
                    q += v[i] * self.entries[i][j] * v[j];
                }
            }
            if q % 2 == 0 {
                zeros += 1;
            }
        }
        if 2 * zeros > (1u64 << n) {
            0
        } else {
            1
        }
    }

    /// Block-diagonal sum.
    pub fn connected_sum(&self, other: &SeifertMatrix) -> SeifertMatrix {
        let n = self.size();
        let m = other.size();
        let mut entries = vec![vec![0i64; n + m]; n + m];
        for i in 0..n {
            entries[i][..n].copy_from_slice(&self.entries[i]);
        }
        for i in 0..m {
            entries[n + i][n..].copy_from_slice(&other.entries[i]);
        }
        let label = match (&self.label, &other.label) {
            (Some(a), Some(b)) => Some(format!("{} # {}", a, b)),
            _ => None,
        };
        SeifertMatrix { entries, label }
    }

    /// Mirror image: -V^T.
    pub fn mirror(&self) -> SeifertMatrix {
        let n = self.size();
        let entries = (0..n)
            .map(|i| (0..n).map(|j| -self.entries[j][i]).collect())
            .collect();
        SeifertMatrix {
            entries,
            label: self.label.as_ref().map(|l| format!("mirror({})", l)),
        }
    }

    /// Rational isotropic lines of the genus-one quadratic form
    /// q(v) = v^T V v, by the discriminant square test.
    pub fn genus1_metabolizers(&self) -> Result<MetabolizerReport> {
        if self.size() != 2 {
            return Err(Error::Capability(format!(
                "genus1_metabolizers requires a 2x2 matrix (got {}x{}); use is_algebraically_slice for higher genus",
                self.size(),
                self.size()
            )));
        }
        let a = self.entries[0][0] as i128;
        let b = (self.entries[0][1] + self.entries[1][0]) as i128;
        let c = self.entries[1][1] as i128;
        let kind = if a == 0 && b == 0 && c == 0 {
            MetabolizerKind::All
        } else if a == 0 {
            // q = v2 (b v1 + c v2); lines (1, 0) and (c, -b)
            let mut lines = vec![[1i64, 0i64]];
            if b != 0 {
                let l = primitive([c, -b]);
                if l != [1, 0] {
                    lines.push(l);
                }
            }
            MetabolizerKind::Lines(lines)
        } else {
            let disc = b * b - 4 * a * c;
            if disc < 0 {
                MetabolizerKind::None
            } else {
                let s = isqrt128(disc);
                if s * s != disc {
                    MetabolizerKind::None
                } else if s == 0 {
                    MetabolizerKind::Lines(vec![primitive([-b, 2 * a])])
                } else {
                    let l1 = primitive([-(b - s), 2 * a]);
                    let l2 = primitive([-(b + s), 2 * a]);
                    MetabolizerKind::Lines(vec![l1, l2])
                }
            }
        };
        if let MetabolizerKind::Lines(lines) = &kind {
            for v in lines {
                let q = v[0] * self.entries[0][0] * v[0]
                    + v[0] * self.entries[0][1] * v[1]
                    + v[1] * self.entries[1][0] * v[0]
                    + v[1] * self.entries[1][1] * v[1];
                assert_eq!(q, 0, "metabolizer line fails v^T V v = 0");
            }
        }
        Ok(MetabolizerReport {
            kind,
            context: self.clone(),
        })
    }

    /// Decides algebraic sliceness: exact at genus <= 1, semi-decision with
    /// a bounded lattice search at genus >= 2.
    pub fn is_algebraically_slice(&self) -> AlgebraicSliceness {
        self.is_algebraically_slice_with(&AlgSliceOptions::default())
    }

    pub fn is_algebraically_slice_with(&self, opts: &AlgSliceOptions) -> AlgebraicSliceness {
        let g = self.genus();
        if g == 0 {
            return AlgebraicSliceness::Yes(Vec::new());
        }
        if g == 1 {
            let report = self.genus1_metabolizers().expect("size 2 checked");
            return match report.kind {
                MetabolizerKind::All => AlgebraicSliceness::Yes(vec![vec![1, 0]]),
                MetabolizerKind::Lines(lines) => {
                    AlgebraicSliceness::Yes(vec![lines[0].to_vec()])
                }
                MetabolizerKind::None => {
                    let b = self.entries[0][1] + self.entries[1][0];
                    let disc =
                        (b as i128) * (b as i128) - 4 * self.entries[0][0] as i128 * self.entries[1][1] as i128;
                    AlgebraicSliceness::No(NonSliceCertificate::NoIsotropicLine {
                        discriminant: disc,
                    })
                }
            };
        }

        // genus >= 2: signature obstruction
        let sf = signature::signature_function(self);
        if let Some((at, value)) = sf.first_nonzero_plateau() {
            return AlgebraicSliceness::No(NonSliceCertificate::SignatureNonzero { at, value });
        }

        // Fox-Milnor: every self-reciprocal irreducible factor of the
        // Alexander polynomial must have even multiplicity
        let (delta_poly, _) = self.alexander_polynomial().to_poly();
        if let Ok(fact) = crate::algebra::factor::factor_over_q(&delta_poly) {
            for (f, mult) in &fact.factors {
                if mult % 2 == 1 && is_self_reciprocal(f) {
                    return AlgebraicSliceness::No(NonSliceCertificate::FoxMilnorFails {
                        factor: format!("{}", f),
                    });
                }
            }
        }

        match self.search_metabolizer(opts) {
            Some(witness) => AlgebraicSliceness::Yes(witness),
            None => AlgebraicSliceness::Unknown,
        }
    }

    /// Bounded search for g independent vectors spanning a subspace on which
    /// the full bilinear form vanishes.
    fn search_metabolizer(&self, opts: &AlgSliceOptions) -> Option<Vec<Vec<i64>>> {
        let n = self.size();
        let g = self.genus();
        let mut budget = opts.search_budget;
        let mut candidates: Vec<Vec<i64>> = Vec::new();
        for bound in 1..=opts.coord_bound {
            enumerate_vectors(n, bound, &mut |v| {
                if bound > 1 && v.iter().all(|&x| x.abs() < bound) {
                    return true; // inner shells were already scanned
                }
                if is_primitive(v) && self.bilinear(v, v) == 0 {
                    candidates.push(v.to_vec());
                }
                budget = budget.saturating_sub(1);
                budget > 0
            });
            let mut chosen: Vec<Vec<i64>> = Vec::new();
            if self.extend_metabolizer(&candidates, &mut chosen, g, &mut budget) {
                return Some(chosen);
            }
            if budget == 0 {
                return None;
            }
        }
        None
    }

    fn extend_metabolizer(
        &self,
        candidates: &[Vec<i64>],
        chosen: &mut Vec<Vec<i64>>,
        g: usize,
        budget: &mut u64,
    ) -> bool {
        if chosen.len() == g {
            return true;
        }
        for cand in candidates {
            if *budget == 0 {
                return false;
            }
            *budget -= 1;
            if !chosen
                .iter()
                .all(|u| self.bilinear(u, cand) == 0 && self.bilinear(cand, u) == 0)
            {
                continue;
            }
            if !independent_over_q(chosen, cand) {
                continue;
            }
            chosen.push(cand.clone());
            if self.extend_metabolizer(candidates, chosen, g, budget) {
                return true;
            }
            chosen.pop();
        }
        false
    }

    fn bilinear(&self, u: &[i64], v: &[i64]) -> i64 {
        let n = self.size();
        let mut acc = 0i64;
        for i in 0..n {
            for j in 0..n {
                acc += u[i] * self.entries[i][j] * v[j];
            }
        }
        acc
    }
}

/// Fraction-free integer determinant; None when i128 would overflow.
fn int_det_bareiss(m: &[Vec<i64>]) -> Option<i128> {
    let n = m.len();
    if n == 0 {
        return Some(1);
    }
    let mut a: Vec<Vec<i128>> = m
        .iter()
        .map(|r| r.iter().map(|&x| x as i128).collect())
        .collect();
    let mut sign = 1i128;
    let mut prev = 1i128;
    for k in 0..n - 1 {
        if a[k][k] == 0 {
            let Some(p) = (k + 1..n).find(|&i| a[i][k] != 0) else {
                return Some(0);
            };
            a.swap(k, p);
            sign = -sign;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = a[i][j].checked_mul(a[k][k])?.checked_sub(a[i][k].checked_mul(a[k][j])?)?;
                a[i][j] = num / prev;
            }
            a[i][k] = 0;
        }
        prev = a[k][k];
    }
    Some(sign * a[n - 1][n - 1])
}

fn is_self_reciprocal(f: &crate::QPoly) -> bool {
    let rev = f.reversed();
    if rev == *f {
        return true;
    }
    // allow a sign: f* = -f
    rev == f.scale(&-Rational::from_integer(1.into()))
}

fn isqrt128(n: i128) -> i128 {
    if n < 0 {
        return -1;
    }
    let mut x = (n as f64).sqrt() as i128;
    while x * x > n {
        x -= 1;
    }
    while (x + 1) * (x + 1) <= n {
        x += 1;
    }
    x
}

fn primitive(v: [i128; 2]) -> [i64; 2] {
    let g = gcd128(v[0].abs(), v[1].abs()).max(1);
    let mut out = [(v[0] / g) as i64, (v[1] / g) as i64];
    let lead = if out[0] != 0 { out[0] } else { out[1] };
    if lead < 0 {
        out = [-out[0], -out[1]];
    }
    out
}

fn gcd128(a: i128, b: i128) -> i128 {
    if b == 0 {
        a
    } else {
        gcd128(b, a % b)
    }
}

fn is_primitive(v: &[i64]) -> bool {
    let mut g = 0i64;
    for &x in v {
        g = gcd64(g, x.abs());
    }
    if g != 1 {
        return false;
    }
    // quotient the +-v symmetry: first nonzero coordinate positive
    v.iter().find(|&&x| x != 0).map_or(false, |&x| x > 0)
}

fn gcd64(a: i64, b: i64) -> i64 {
    if b == 0 {
        a
    } else {
        gcd64(b, a % b)
    }
}

fn enumerate_vectors(n: usize, bound: i64, f: &mut impl FnMut(&[i64]) -> bool) {
    let mut v = vec![-bound; n];
    loop {
        if !f(&v) {
            return;
        }
        let mut i = 0;
        loop {
            if i == n {
                return;
            }
            v[i] += 1;
            if v[i] <= bound {
                break;
            }
            v[i] = -bound;
            i += 1;
        }
    }
}

fn independent_over_q(basis: &[Vec<i64>], cand: &[i64]) -> bool {
    // rational Gaussian elimination on the stacked matrix
    let mut rows: Vec<Vec<Rational>> = basis
        .iter()
        .map(|r| r.iter().map(|&x| rat(x)).collect())
        .collect();
    rows.push(cand.iter().map(|&x| rat(x)).collect());
    let n = rows[0].len();
    let mut rank = 0;
    for col in 0..n {
        let Some(p) = (rank..rows.len()).find(|&r| !rows[r][col].is_zero()) else {
            continue;
        };
        rows.swap(rank, p);
        let pv = rows[rank][col].clone();
        for r in 0..rows.len() {
            if r != rank && !rows[r][col].is_zero() {
                let factor = &rows[r][col] / &pv;
                for j in col..n {
                    let sub = &rows[rank][j] * &factor;
                    rows[r][j] = &rows[r][j] - &sub;
                }
            }
        }
        rank += 1;
    }
    rank == rows.len()
}

/// Rational isotropic lines of a genus-one Seifert form.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MetabolizerReport {
    pub kind: MetabolizerKind,
    pub context: SeifertMatrix,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum MetabolizerKind {
    /// The quadratic form has no rational isotropic line.
    None,
    /// Primitive integer representatives of the isotropic lines, up to sign.
    Lines(Vec<[i64; 2]>),
    /// q vanishes identically.
    All,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum AlgebraicSliceness {
    /// Witness: basis vectors of a half-rank sublattice on which the
    /// bilinear form vanishes (empty for the unknot).
    Yes(Vec<Vec<i64>>),
    No(NonSliceCertificate),
    Unknown,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum NonSliceCertificate {
    /// A plateau of the signature function is nonzero at the sample point.
    SignatureNonzero { at: Rational, value: i64 },
    /// A self-reciprocal irreducible factor of Alexander has odd multiplicity.
    FoxMilnorFails { factor: String },
    /// Genus-one discriminant is not a square.
    NoIsotropicLine { discriminant: i128 },
}

#[derive(Clone, Debug)]
pub struct AlgSliceOptions {
    /// Coordinate bound of the lattice search.
    pub coord_bound: i64,
    /// Cap on candidate/extension steps before reporting Unknown.
    pub search_budget: u64,
}

impl Default for AlgSliceOptions {
    fn default() -> Self {
        AlgSliceOptions {
            coord_bound: 10,
            search_budget: 4_000_000,
        }
    }
}

/// Random valid Seifert matrices by rejection sampling: entries in [-3, 3],
/// accepted when det(V - V^T) = 1. Deterministic under a seeded RNG.
pub fn random_seifert(rng: &mut impl rand::Rng, genus: usize) -> SeifertMatrix {
    use rand::distributions::{Distribution, Uniform};
    let n = 2 * genus;
    let entry = Uniform::new_inclusive(-3i64, 3i64);
    loop {
        let entries: Vec<Vec<i64>> = (0..n)
            .map(|_| (0..n).map(|_| entry.sample(rng)).collect())
            .collect();
        if let Ok(m) = SeifertMatrix::new(entries) {
            return m;
        }
    }
}

/// Catalog matrices used throughout the paper-scale examples.
pub mod knots {
    use super::SeifertMatrix;

    pub fn unknot() -> SeifertMatrix {
        SeifertMatrix::unknot()
    }

    /// Right-handed trefoil in the convention that makes sigma(-1) = -2.
    pub fn trefoil() -> SeifertMatrix {
        SeifertMatrix::new(vec![vec![-1, 1], vec![0, -1]])
            .unwrap()
            .with_label("trefoil")
    }

    pub fn figure_eight() -> SeifertMatrix {
        SeifertMatrix::new(vec![vec![1, 1], vec![0, -1]])
            .unwrap()
            .with_label("figure-eight")
    }

    /// The 9_46 ribbon knot, the base pattern R1.
    pub fn nine_forty_six() -> SeifertMatrix {
        SeifertMatrix::new(vec![vec![0, 2], vec![1, 0]])
            .unwrap()
            .with_label("R1")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::QLaurent;

    fn lp(pairs: &[(i64, i64)]) -> QLaurent {
        LaurentPoly::from_terms(pairs.iter().map(|&(k, c)| (k, rat(c))))
    }

    #[test]
    fn validation() {
        assert!(SeifertMatrix::new(vec![vec![0, 1], vec![0, 0]]).is_ok());
        assert!(SeifertMatrix::new(vec![vec![0, 1], vec![1, 0]]).is_err()); // symmetric
        assert!(SeifertMatrix::new(vec![vec![1]]).is_err()); // odd size
        assert!(SeifertMatrix::new(vec![]).is_ok()); // unknot
    }

    #[test]
    fn alexander_examples() {
        assert!(knots::unknot().alexander_polynomial().is_one());
        // trefoil: t^2 - t + 1
        assert_eq!(
            knots::trefoil().alexander_polynomial(),
            lp(&[(0, 1), (1, -1), (2, 1)])
        );
        // 9_46: -(2t^2 - 5t + 2), the representative with value +1 at t = 1
        let d = knots::nine_forty_six().alexander_polynomial();
        assert_eq!(d, lp(&[(0, -2), (1, 5), (2, -2)]));
        assert_eq!(d.eval_at_one(), rat(1));
    }

    #[test]
    fn alexander_is_palindromic_and_one_at_one() {
        for v in [knots::trefoil(), knots::figure_eight(), knots::nine_forty_six()] {
            let d = v.alexander_polynomial();
            assert_eq!(d.eval_at_one(), rat(1));
            let rev = d.involution().unit_normalized();
            assert_eq!(rev, d.unit_normalized());
        }
    }

    #[test]
    fn arf_examples() {
        assert_eq!(knots::unknot().arf(), 0);
        assert_eq!(knots::trefoil().arf(), 1);
        assert_eq!(knots::figure_eight().arf(), 1);
        assert_eq!(knots::nine_forty_six().arf(), 0);
    }

    #[test]
    fn arf_additive_mod_2() {
        let pairs = [
            (knots::trefoil(), knots::figure_eight()),
            (knots::trefoil(), knots::nine_forty_six()),
        ];
        for (a, b) in pairs {
            assert_eq!(
                a.connected_sum(&b).arf(),
                (a.arf() + b.arf()) % 2
            );
        }
    }

    #[test]
    fn connected_sum_and_mirror() {
        let t = knots::trefoil();
        let u = knots::unknot();
        assert_eq!(u.connected_sum(&t).entries(), t.entries());
        assert_eq!(t.mirror().mirror().entries(), t.entries());
        let sum = t.connected_sum(&t);
        let d = sum.alexander_polynomial();
        let sq = lp(&[(0, 1), (1, -1), (2, 1)]) * lp(&[(0, 1), (1, -1), (2, 1)]);
        assert_eq!(d, sq);
    }

    #[test]
    fn alexander_multiplicative_under_sum() {
        let a = knots::figure_eight();
        let b = knots::nine_forty_six();
        let prod = (a.alexander_polynomial() * b.alexander_polynomial()).unit_normalized();
        let d = a.connected_sum(&b).alexander_polynomial().unit_normalized();
        assert_eq!(d, prod);
    }

    #[test]
    fn metabolizers_9_46() {
        let r = knots::nine_forty_six().genus1_metabolizers().unwrap();
        assert_eq!(
            r.kind,
            MetabolizerKind::Lines(vec![[1, 0], [0, 1]])
        );
    }

    #[test]
    fn metabolizers_trefoil_none() {
        let r = knots::trefoil().genus1_metabolizers().unwrap();
        assert_eq!(r.kind, MetabolizerKind::None);
    }

    #[test]
    fn metabolizers_zero_form_reports_all() {
        // q identically zero forces non-integral off-diagonal data, so no
        // validated matrix reaches this branch; exercise it directly
        let z = SeifertMatrix {
            entries: vec![vec![0, 0], vec![0, 0]],
            label: None,
        };
        assert_eq!(z.genus1_metabolizers().unwrap().kind, MetabolizerKind::All);
        // a valid matrix with zero diagonal still has isotropic lines only
        let v = SeifertMatrix::new(vec![vec![0, 1], vec![0, 0]]).unwrap();
        assert!(matches!(
            v.genus1_metabolizers().unwrap().kind,
            MetabolizerKind::Lines(_)
        ));
    }

    #[test]
    fn metabolizers_wrong_size_errors() {
        assert!(knots::unknot().genus1_metabolizers().is_err());
    }

    #[test]
    fn algebraically_slice_decisions() {
        assert_eq!(
            knots::unknot().is_algebraically_slice(),
            AlgebraicSliceness::Yes(vec![])
        );
        match knots::nine_forty_six().is_algebraically_slice() {
            AlgebraicSliceness::Yes(w) => assert_eq!(w, vec![vec![1, 0]]),
            other => panic!("expected Yes, got {:?}", other),
        }
        assert!(matches!(
            knots::trefoil().is_algebraically_slice(),
            AlgebraicSliceness::No(_)
        ));
    }

    #[test]
    fn genus_two_decisions() {
        // R1 # R1 is algebraically slice; trefoil # trefoil is not
        let slice = knots::nine_forty_six().connected_sum(&knots::nine_forty_six());
        match slice.is_algebraically_slice() {
            AlgebraicSliceness::Yes(witness) => {
                assert_eq!(witness.len(), 2);
                for u in &witness {
                    for v in &witness {
                        assert_eq!(slice.bilinear(u, v), 0);
                    }
                }
            }
            other => panic!("expected Yes, got {:?}", other),
        }
        let tt = knots::trefoil().connected_sum(&knots::trefoil());
        assert!(matches!(
            tt.is_algebraically_slice(),
            AlgebraicSliceness::No(NonSliceCertificate::SignatureNonzero { .. })
        ));
        // figure-eight has order 2 in the algebraic concordance group
        let ff = knots::figure_eight().connected_sum(&knots::figure_eight());
        assert!(matches!(ff.is_algebraically_slice(), AlgebraicSliceness::Yes(_)));
        // zero signature but a self-reciprocal Alexander factor of odd
        // multiplicity: trefoil # mirror trefoil # figure-eight
        let t = knots::trefoil();
        let fm = t
            .connected_sum(&t.mirror())
            .connected_sum(&knots::figure_eight());
        assert!(matches!(
            fm.is_algebraically_slice(),
            AlgebraicSliceness::No(NonSliceCertificate::FoxMilnorFails { .. })
        ));
    }

    #[test]
    fn random_generator_is_valid() {
        use rand::SeedableRng;
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
        for genus in 1..=3 {
            for _ in 0..20 {
                let m = random_seifert(&mut rng, genus);
                assert_eq!(m.genus(), genus);
                assert_eq!(m.alexander_polynomial().eval_at_one(), rat(1));
            }
        }
    }
}
