//! The rational Alexander module A_0(K) presented by tV - V^T over
//! Q[t, t^-1], the classical Blanchfield linking form with values in
//! Q(t)/Q[t, t^-1], isotropy tests, and isotropic-submodule enumeration.

use crate::algebra::laurent::LaurentPoly;
use crate::algebra::matrix::{smith_normal_form, Mat, SmithForm};
use crate::algebra::poly::Poly;
use crate::algebra::ratfn::RationalFunction;
use crate::algebra::scalar::DivExact;
use crate::error::{Error, Result};
use crate::seifert::SeifertMatrix;
use crate::{rat, QLaurent, QPoly, QRatFn, Rational};
use num_traits::{One, Zero};

/// Coordinate vector over Q[t, t^-1], understood modulo the image of the
/// presentation matrix.
pub type ModuleElement = Vec<QLaurent>;

pub fn basis_element(rank: usize, i: usize) -> ModuleElement {
    let mut v = vec![LaurentPoly::zero(); rank];
    v[i] = LaurentPoly::one();
    v
}

/// The rational Alexander module of a Seifert matrix, with its cached
/// Smith form and order.
#[derive(Clone, Debug)]
pub struct AlexanderModule {
    seifert: SeifertMatrix,
    presentation: Mat<QLaurent>,
    smith: SmithForm<Rational>,
    order: QLaurent,
}

impl AlexanderModule {
    pub fn new(v: &SeifertMatrix) -> Self {
        let presentation = v.presentation_matrix();
        let smith = smith_normal_form(&presentation);
        // the module is torsion: Delta(1) = 1 rules out zero diagonal entries
        debug_assert!(smith.diag.iter().all(|d| !d.is_zero()));
        let order = smith.torsion_order();
        AlexanderModule {
            seifert: v.clone(),
            presentation,
            smith,
            order,
        }
    }

    pub fn rank(&self) -> usize {
        self.seifert.size()
    }

    pub fn seifert(&self) -> &SeifertMatrix {
        &self.seifert
    }

    pub fn smith(&self) -> &SmithForm<Rational> {
        &self.smith
    }

    /// The product of nonunit diagonal entries; agrees with the Alexander
    /// polynomial up to a unit.
    pub fn order(&self) -> &QLaurent {
        &self.order
    }

    /// Q-dimension of the module: the degree span of its order.
    pub fn q_dimension(&self) -> usize {
        self.order.span().unwrap_or(0) as usize
    }

    /// Cyclic iff at most one diagonal entry is a nonunit.
    pub fn is_cyclic(&self) -> bool {
        self.smith.diag.iter().filter(|d| !d.is_unit()).count() <= 1
    }

    /// Whether x lies in the submodule spanned by `gens` together with the
    /// presentation image.
    pub fn in_submodule(&self, gens: &[ModuleElement], x: &ModuleElement) -> bool {
        assert_eq!(x.len(), self.rank());
        let aug = self.presentation.augment_cols(gens);
        let s = smith_normal_form(&aug);
        let y = s.left.mul_vec(x);
        for (i, yi) in y.iter().enumerate() {
            match s.diag.get(i) {
                Some(d) if !d.is_zero() => {
                    if yi.div_exact(d).is_none() {
                        return false;
                    }
                }
                _ => {
                    if !yi.is_zero() {
                        return false;
                    }
                }
            }
        }
        true
    }

    pub fn is_zero_element(&self, x: &ModuleElement) -> bool {
        self.in_submodule(&[], x)
    }

    pub fn elements_equal(&self, x: &ModuleElement, y: &ModuleElement) -> bool {
        let diff: ModuleElement = x
            .iter()
            .zip(y)
            .map(|(a, b)| a.clone() - b.clone())
            .collect();
        self.is_zero_element(&diff)
    }

    /// Q-dimension of the submodule generated by `gens`.
    pub fn submodule_q_dimension(&self, gens: &[ModuleElement]) -> usize {
        if self.rank() == 0 {
            return 0;
        }
        let aug = self.presentation.augment_cols(gens);
        let s = smith_normal_form(&aug);
        let quotient_dim: i64 = s
            .diag
            .iter()
            .filter(|d| !d.is_zero())
            .map(|d| d.span().unwrap())
            .sum();
        self.q_dimension() - quotient_dim as usize
    }
}

/// Canonical representative of a class in Q(t)/Q[t, t^-1]: a proper
/// fraction num/den with den monic, den(0) != 0 and deg num < deg den;
/// the denominator divides the Alexander polynomial.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BlanchfieldValue {
    pub num: QPoly,
    pub den: QPoly,
}

impl BlanchfieldValue {
    pub fn zero() -> Self {
        BlanchfieldValue {
            num: Poly::zero(),
            den: Poly::one(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    /// Reduction of a rational function modulo Q[t, t^-1].
    pub fn from_ratfn(r: &QRatFn) -> Self {
        if r.is_zero() {
            return Self::zero();
        }
        let (np, sn) = r.num().to_poly();
        let (dp, sd) = r.den().to_poly();
        debug_assert!(!dp.coeff(0).is_zero());
        let shift = sn - sd;
        // t is a unit modulo dp: t^-1 = (dp(0) - dp) / (t * dp(0))
        let reduced_num = if shift >= 0 {
            let shifted = Poly::monomial(Rational::one(), shift as usize) * np;
            shifted.rem(&dp)
        } else {
            let d0 = dp.coeff(0);
            let mut diff_coeffs: Vec<Rational> = dp.coeffs().to_vec();
            diff_coeffs[0] = Rational::zero();
            for c in diff_coeffs.iter_mut() {
                *c = -c.clone() / d0.clone();
            }
            diff_coeffs.remove(0); // divide by t
            let t_inv = Poly::from_coeffs(diff_coeffs);
            let mut acc = np.rem(&dp);
            for _ in 0..(-shift) {
                acc = (acc * t_inv.clone()).rem(&dp);
            }
            acc
        };
        if reduced_num.is_zero() {
            return Self::zero();
        }
        let g = reduced_num.gcd(&dp);
        let num = reduced_num.divrem(&g).0;
        let den = dp.divrem(&g).0;
        let lead = den.leading();
        BlanchfieldValue {
            num: num.scale(&(Rational::one() / lead.clone())),
            den: den.scale(&(Rational::one() / lead)),
        }
    }

    /// The conjugate class under t -> t^-1.
    pub fn conjugate(&self) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let num = LaurentPoly::from_poly(&self.num, 0).involution();
        let den = LaurentPoly::from_poly(&self.den, 0).involution();
        Self::from_ratfn(&RationalFunction::new(num, den))
    }
}

impl std::fmt::Display for BlanchfieldValue {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.is_zero() {
            write!(f, "0")
        } else {
            let num = LaurentPoly::from_poly(&self.num, 0);
            let den = LaurentPoly::from_poly(&self.den, 0);
            write!(f, "({}) / ({})", num, den)
        }
    }
}

/// Solves M z = y over Q(t) by Gaussian elimination in the fraction field.
fn solve_fraction_field(m: &Mat<QLaurent>, y: &[QLaurent]) -> Vec<QRatFn> {
    let n = m.rows();
    assert_eq!(m.cols(), n);
    assert_eq!(y.len(), n);
    let mut a: Vec<Vec<QRatFn>> = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| RationalFunction::from_laurent(m.at(i, j).clone()))
                .collect()
        })
        .collect();
    let mut b: Vec<QRatFn> = y
        .iter()
        .map(|p| RationalFunction::from_laurent(p.clone()))
        .collect();
    for col in 0..n {
        let pivot = (col..n)
            .find(|&r| !a[r][col].is_zero())
            .expect("presentation matrix is nonsingular over Q(t)");
        a.swap(col, pivot);
        b.swap(col, pivot);
        let inv = {
            let p = &a[col][col];
            RationalFunction::new(p.den().clone(), p.num().clone())
        };
        for j in col..n {
            a[col][j] = a[col][j].clone() * inv.clone();
        }
        b[col] = b[col].clone() * inv.clone();
        for r in 0..n {
            if r != col && !a[r][col].is_zero() {
                let f = a[r][col].clone();
                for j in col..n {
                    a[r][j] = a[r][j].clone() - f.clone() * a[col][j].clone();
                }
                b[r] = b[r].clone() - f * b[col].clone();
            }
        }
    }
    b
}

/// The classical Blanchfield pairing in the convention
/// Bl(x, y) = (1 - t) * conj(x)^T (tV - V^T)^-1 y, reduced mod Q[t, t^-1].
/// Sesquilinear in the first slot, Hermitian under the involution.
pub fn blanchfield_pair(
    v: &SeifertMatrix,
    x: &ModuleElement,
    y: &ModuleElement,
) -> Result<BlanchfieldValue> {
    let n = v.size();
    if x.len() != n {
        return Err(Error::RankMismatch {
            expected: n,
            got: x.len(),
        });
    }
    if y.len() != n {
        return Err(Error::RankMismatch {
            expected: n,
            got: y.len(),
        });
    }
    if n == 0 || x.iter().all(|c| c.is_zero()) || y.iter().all(|c| c.is_zero()) {
        return Ok(BlanchfieldValue::zero());
    }
    let pres = v.presentation_matrix();
    let z = solve_fraction_field(&pres, y);
    let one_minus_t = RationalFunction::from_laurent(LaurentPoly::from_terms([
        (0, rat(1)),
        (1, rat(-1)),
    ]));
    let mut acc = RationalFunction::zero();
    for (xi, zi) in x.iter().zip(&z) {
        let conj = RationalFunction::from_laurent(xi.involution());
        acc = acc + conj * zi.clone();
    }
    Ok(BlanchfieldValue::from_ratfn(&(one_minus_t * acc)))
}

/// Whether the submodule generated by `gens` is isotropic: Bl vanishes on
/// all pairs (sesquilinearity reduces this to generator pairs).
pub fn is_isotropic(v: &SeifertMatrix, gens: &[ModuleElement]) -> Result<bool> {
    for (i, x) in gens.iter().enumerate() {
        for y in &gens[i..] {
            if !blanchfield_pair(v, x, y)?.is_zero() {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Outcome of the doubling-hypothesis check: the generated submodule must
/// contain x, y with Bl(x, y) != 0.
#[derive(Clone, Debug)]
pub enum DoublingHypothesis {
    Satisfied {
        /// Indices of a witness generator pair and the nonzero pairing value.
        witness: (usize, usize, BlanchfieldValue),
        /// Whether the half-degree rank sufficient condition already applied.
        half_degree_shortcut: bool,
    },
    NotSatisfied,
}

impl DoublingHypothesis {
    pub fn is_satisfied(&self) -> bool {
        matches!(self, DoublingHypothesis::Satisfied { .. })
    }
}

/// Checks the nonvanishing hypothesis for doubling operators. The
/// half-degree sufficient condition (submodule Q-dimension exceeding half
/// the Alexander degree) is evaluated first and reported in the witness.
pub fn check_doubling_hypothesis(
    v: &SeifertMatrix,
    curves: &[ModuleElement],
) -> Result<DoublingHypothesis> {
    if curves.is_empty() {
        return Ok(DoublingHypothesis::NotSatisfied);
    }
    let module = AlexanderModule::new(v);
    let dim = module.submodule_q_dimension(curves);
    let shortcut = 2 * dim > module.q_dimension();

    let mut witness = None;
    'outer: for (i, x) in curves.iter().enumerate() {
        for (jo, y) in curves[i..].iter().enumerate() {
            let val = blanchfield_pair(v, x, y)?;
            if !val.is_zero() {
                witness = Some((i, i + jo, val));
                break 'outer;
            }
        }
    }
    match witness {
        Some(w) => Ok(DoublingHypothesis::Satisfied {
            witness: w,
            half_degree_shortcut: shortcut,
        }),
        None => {
            debug_assert!(
                !shortcut,
                "half-degree shortcut must agree with the direct pairing decision"
            );
            Ok(DoublingHypothesis::NotSatisfied)
        }
    }
}

/// An isotropic submodule described by its order (a monic divisor of the
/// Alexander polynomial) and a generator.
#[derive(Clone, Debug)]
pub struct IsotropicSubmodule {
    pub order: QLaurent,
    pub generator: ModuleElement,
}

#[derive(Clone, Debug)]
pub struct IsotropyEnumeration {
    pub submodules: Vec<IsotropicSubmodule>,
    /// False when the module is not cyclic and the enumeration may be
    /// incomplete.
    pub complete: bool,
}

/// Enumerates isotropic submodules. For cyclic modules (pairwise-coprime
/// Smith diagonal) submodules biject with monic divisors of the Alexander
/// polynomial and the enumeration is exact; otherwise the divisor-generated
/// candidates are reported with `complete = false`.
pub fn enumerate_isotropic_submodules(v: &SeifertMatrix) -> Result<IsotropyEnumeration> {
    let module = AlexanderModule::new(v);
    let rank = module.rank();
    if rank == 0 {
        return Ok(IsotropyEnumeration {
            submodules: vec![IsotropicSubmodule {
                order: LaurentPoly::one(),
                generator: Vec::new(),
            }],
            complete: true,
        });
    }

    let mut out: Vec<IsotropicSubmodule> = vec![IsotropicSubmodule {
        order: LaurentPoly::one(),
        generator: vec![LaurentPoly::zero(); rank],
    }];

    let cyclic = module.is_cyclic();
    let indices: Vec<usize> = module
        .smith
        .diag
        .iter()
        .enumerate()
        .filter(|(_, d)| !d.is_unit() && !d.is_zero())
        .map(|(i, _)| i)
        .collect();

    for &i in &indices {
        let d = module.smith.diag[i].clone();
        for f in monic_divisors(&d)? {
            if f.is_unit() {
                continue; // the unit divisor is the zero submodule, already listed
            }
            // generator in cokernel coordinates: (d/f) e_i, mapped back
            let cof = d.div_exact(&f).expect("divisor of the diagonal entry");
            let mut coker = vec![LaurentPoly::zero(); rank];
            coker[i] = cof;
            let gen = module.smith.left_inv.mul_vec(&coker);
            let self_pairing = blanchfield_pair(v, &gen, &gen)?;
            if self_pairing.is_zero() {
                out.push(IsotropicSubmodule {
                    order: f,
                    generator: gen,
                });
            }
        }
    }

    Ok(IsotropyEnumeration {
        submodules: out,
        complete: cyclic,
    })
}

/// All monic (unit-normalized) divisors of a Laurent polynomial, from the
/// factorization of its polynomial part.
fn monic_divisors(d: &QLaurent) -> Result<Vec<QLaurent>> {
    let (poly, _) = d.unit_normalized().to_poly();
    let fact = crate::algebra::factor::factor_over_q(&poly)?;
    let mut divisors = vec![LaurentPoly::one()];
    for (f, mult) in &fact.factors {
        let fl = LaurentPoly::from_poly(f, 0);
        let mut next = Vec::new();
        for dv in &divisors {
            let mut acc = dv.clone();
            next.push(acc.clone());
            for _ in 0..*mult {
                acc = acc * fl.clone();
                next.push(acc.clone());
            }
        }
        divisors = next;
    }
    Ok(divisors.into_iter().map(|p| p.unit_normalized()).collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::seifert::knots;

    fn e(rank: usize, i: usize) -> ModuleElement {
        basis_element(rank, i)
    }

    #[test]
    fn r1_pairing_values() {
        let v = knots::nine_forty_six();
        // e1 spans a metabolizer: self-pairing vanishes identically
        let p11 = blanchfield_pair(&v, &e(2, 0), &e(2, 0)).unwrap();
        assert!(p11.is_zero());
        let p22 = blanchfield_pair(&v, &e(2, 1), &e(2, 1)).unwrap();
        assert!(p22.is_zero());
        // cross pairing is a nonzero class
        let p12 = blanchfield_pair(&v, &e(2, 0), &e(2, 1)).unwrap();
        assert!(!p12.is_zero());
    }

    #[test]
    fn zero_argument_pairs_to_zero() {
        let v = knots::nine_forty_six();
        let zero = vec![LaurentPoly::zero(); 2];
        assert!(blanchfield_pair(&v, &zero, &e(2, 1)).unwrap().is_zero());
    }

    #[test]
    fn rank_mismatch_errors() {
        let v = knots::nine_forty_six();
        assert!(blanchfield_pair(&v, &e(4, 0), &e(2, 1)).is_err());
    }

    #[test]
    fn hermitian_symmetry() {
        for v in [knots::trefoil(), knots::figure_eight(), knots::nine_forty_six()] {
            let x = vec![
                LaurentPoly::from_terms([(0, rat(1)), (1, rat(2))]),
                LaurentPoly::from_terms([(-1, rat(3))]),
            ];
            let y = vec![
                LaurentPoly::from_terms([(2, rat(-1))]),
                LaurentPoly::from_terms([(0, rat(1)), (-2, rat(5))]),
            ];
            let pxy = blanchfield_pair(&v, &x, &y).unwrap();
            let pyx = blanchfield_pair(&v, &y, &x).unwrap();
            assert_eq!(pxy.conjugate(), pyx);
        }
    }

    #[test]
    fn sesquilinear_in_first_slot() {
        let v = knots::nine_forty_six();
        let p = LaurentPoly::from_terms([(1, rat(1)), (0, rat(-3))]);
        let x = e(2, 0);
        let px: ModuleElement = x.iter().map(|c| c.clone() * p.clone()).collect();
        let y = e(2, 1);
        let lhs = blanchfield_pair(&v, &px, &y).unwrap();
        // conj(p) * Bl(x, y), reduced
        let base = blanchfield_pair(&v, &x, &y).unwrap();
        let scaled = RationalFunction::new(
            p.involution() * LaurentPoly::from_poly(&base.num, 0),
            LaurentPoly::from_poly(&base.den, 0),
        );
        assert_eq!(lhs, BlanchfieldValue::from_ratfn(&scaled));
    }

    #[test]
    fn order_annihilates() {
        let v = knots::nine_forty_six();
        let module = AlexanderModule::new(&v);
        let delta = module.order().clone();
        let x: ModuleElement = e(2, 0).iter().map(|c| c.clone() * delta.clone()).collect();
        for j in 0..2 {
            assert!(blanchfield_pair(&v, &x, &e(2, j)).unwrap().is_zero());
        }
        // delta * e1 is the zero element
        assert!(module.is_zero_element(&x));
    }

    #[test]
    fn isotropy_examples() {
        let v = knots::nine_forty_six();
        assert!(is_isotropic(&v, &[]).unwrap());
        assert!(is_isotropic(&v, &[e(2, 0)]).unwrap());
        assert!(!is_isotropic(&v, &[e(2, 0), e(2, 1)]).unwrap());
    }

    #[test]
    fn doubling_hypothesis_examples() {
        let v = knots::nine_forty_six();
        let sat = check_doubling_hypothesis(&v, &[e(2, 0), e(2, 1)]).unwrap();
        match &sat {
            DoublingHypothesis::Satisfied {
                witness,
                half_degree_shortcut,
            } => {
                assert!(*half_degree_shortcut);
                assert!(!witness.2.is_zero());
            }
            _ => panic!("expected Satisfied"),
        }
        assert!(!check_doubling_hypothesis(&v, &[e(2, 0)]).unwrap().is_satisfied());
        assert!(!check_doubling_hypothesis(&v, &[]).unwrap().is_satisfied());
    }

    #[test]
    fn isotropic_enumeration_r1() {
        let v = knots::nine_forty_six();
        let en = enumerate_isotropic_submodules(&v).unwrap();
        assert!(en.complete);
        assert_eq!(en.submodules.len(), 3);
        let module = AlexanderModule::new(&v);
        // the two proper nonzero submodules have the linear factors as orders
        let mut orders: Vec<i64> = en
            .submodules
            .iter()
            .filter(|s| !s.order.is_unit())
            .map(|s| s.order.span().unwrap())
            .collect();
        orders.sort();
        assert_eq!(orders, vec![1, 1]);
        for s in &en.submodules {
            if !s.order.is_unit() {
                assert!(!module.is_zero_element(&s.generator));
            }
        }
    }

    #[test]
    fn isotropic_enumeration_trefoil_and_unknot() {
        let en = enumerate_isotropic_submodules(&knots::trefoil()).unwrap();
        assert!(en.complete);
        assert_eq!(en.submodules.len(), 1); // only the zero submodule
        let eu = enumerate_isotropic_submodules(&knots::unknot()).unwrap();
        assert!(eu.complete);
        assert_eq!(eu.submodules.len(), 1);
    }

    #[test]
    fn figure_eight_only_zero_isotropic() {
        let en = enumerate_isotropic_submodules(&knots::figure_eight()).unwrap();
        assert!(en.complete);
        assert_eq!(en.submodules.len(), 1);
    }

    #[test]
    fn nonsingularity_at_genus_one() {
        // for every nonzero divisor-generated element x there is a basis
        // vector pairing nontrivially with it
        for v in [knots::trefoil(), knots::figure_eight(), knots::nine_forty_six()] {
            let module = AlexanderModule::new(&v);
            let en = enumerate_isotropic_submodules(&v).unwrap();
            for s in &en.submodules {
                if s.order.is_unit() {
                    continue;
                }
                let hits = (0..2).any(|j| {
                    !blanchfield_pair(&v, &s.generator, &e(2, j))
                        .unwrap()
                        .is_zero()
                });
                assert!(hits, "nonsingularity fails for {:?}", module.order());
            }
        }
    }

    #[test]
    fn membership_and_dimension() {
        let v = knots::nine_forty_six();
        let module = AlexanderModule::new(&v);
        assert_eq!(module.q_dimension(), 2);
        assert_eq!(module.submodule_q_dimension(&[e(2, 0)]), 1);
        assert_eq!(module.submodule_q_dimension(&[e(2, 0), e(2, 1)]), 2);
        assert!(module.in_submodule(&[e(2, 0), e(2, 1)], &e(2, 0)));
        assert!(!module.in_submodule(&[e(2, 0)], &e(2, 1)));
    }
}
