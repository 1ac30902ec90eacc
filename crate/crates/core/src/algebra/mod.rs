//! Exact arithmetic foundation: polynomials, Laurent polynomials, rational
//! functions, real-root isolation, certified interval numerics, matrix
//! normal forms over Q[t, t^-1], and factorization over Q.

pub mod algnum;
pub mod factor;
pub mod hermitian;
pub mod interval;
pub mod laurent;
pub mod matrix;
pub mod poly;
pub mod ratfn;
pub mod scalar;

pub use algnum::AlgebraicNumber;
pub use hermitian::{hermitian_char_poly, signature_from_charpoly};
pub use matrix::{Mat, SmithForm};
pub use poly::sturm_isolate;
