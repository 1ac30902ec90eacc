//! Exact-arithmetic toolkit for knot concordance obstructions.
//!
//! The crate computes classical abelian invariants from Seifert matrices
//! (Alexander polynomial, Arf invariant, Levine-Tristram signatures and
//! their circle integral), Blanchfield linking-form isotropy data on the
//! rational Alexander module, free-group derived-series certification via
//! Fox calculus, and a symbolic calculus of iterated infections (doubling
//! operators, Bing doubles, clones/ghosts, solvable-filtration levels and
//! rho-invariant obstruction verdicts).
//!
//! The polynomial and matrix layers are generic over the coefficient
//! scalar; everything above them is instantiated at arbitrary-precision
//! rationals, with the concrete aliases exported from the crate root.
//!
//! ```
//! use concord_core::seifert::knots;
//! use concord_core::signature::rho0;
//! use concord_core::infection::{build_jn, LeafKnot};
//! use concord_core::rho::{slice_obstruction, Verdict};
//! use concord_core::ratio;
//!
//! // the signature integral of the trefoil is exactly -4/3
//! let trefoil = knots::trefoil();
//! assert_eq!(rho0(&trefoil).exact, Some(ratio(-4, 3)));
//!
//! // the twice-doubled trefoil is obstructed conditionally on the
//! // Cheeger-Gromov bound of the underlying ribbon knot
//! let term = build_jn(2, LeafKnot::from_seifert(trefoil));
//! assert!(matches!(
//!     slice_obstruction(&term).unwrap(),
//!     Verdict::Obstructed(_)
//! ));
//! ```

pub mod algebra;
pub mod blanchfield;
pub mod error;
pub mod freegroup;
pub mod infection;
pub mod rho;
pub mod seifert;
pub mod signature;

pub use error::Error;

/// Arbitrary-precision rational scalar used by all exact computations.
pub type Rational = num_rational::BigRational;
/// Arbitrary-precision integer.
pub type Integer = num_bigint::BigInt;

/// Dense polynomial over the rationals.
pub type QPoly = algebra::poly::Poly<Rational>;
/// Laurent polynomial over the rationals, the ring Q[t, t^-1].
pub type QLaurent = algebra::laurent::LaurentPoly<Rational>;
/// Rational function over Q (quotient of Laurent polynomials).
pub type QRatFn = algebra::ratfn::RationalFunction<Rational>;
/// Matrix over the rational Laurent ring.
pub type QLaurentMat = algebra::matrix::Mat<QLaurent>;

/// Shorthand for building a rational from an integer.
pub fn rat(n: i64) -> Rational {
    Rational::from_integer(Integer::from(n))
}

/// Shorthand for building a rational from a numerator/denominator pair.
pub fn ratio(n: i64, d: i64) -> Rational {
    Rational::new(Integer::from(n), Integer::from(d))
}
