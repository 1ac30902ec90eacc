//! Dense matrices over a commutative ring, exact determinants, and the
//! Smith normal form over the Laurent ring Q[t, t^-1].

use super::laurent::LaurentPoly;
use super::scalar::{DivExact, RingScalar, Scalar};
use std::fmt;
use std::ops::{Add, Mul};

/// Row-major dense matrix.
#[derive(Clone, PartialEq, Eq)]
pub struct Mat<T> {
    rows: usize,
    cols: usize,
    data: Vec<T>,
}

impl<T: RingScalar> Mat<T> {
    pub fn zero(rows: usize, cols: usize) -> Self {
        Mat {
            rows,
            cols,
            data: vec![T::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zero(n, n);
        for i in 0..n {
            *m.at_mut(i, i) = T::one();
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<T>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, |row| row.len());
        assert!(rows.iter().all(|row| row.len() == c), "ragged rows");
        Mat {
            rows: r,
            cols: c,
            data: rows.into_iter().flatten().collect(),
        }
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> T) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        Mat { rows, cols, data }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn at(&self, i: usize, j: usize) -> &T {
        &self.data[i * self.cols + j]
    }

    pub fn at_mut(&mut self, i: usize, j: usize) -> &mut T {
        &mut self.data[i * self.cols + j]
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |i, j| self.at(j, i).clone())
    }

    pub fn map<U: RingScalar>(&self, f: impl Fn(&T) -> U) -> Mat<U> {
        Mat {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(f).collect(),
        }
    }

    pub fn mul_vec(&self, v: &[T]) -> Vec<T> {
        assert_eq!(v.len(), self.cols);
        (0..self.rows)
            .map(|i| {
                let mut acc = T::zero();
                for j in 0..self.cols {
                    acc = acc + self.at(i, j).clone() * v[j].clone();
                }
                acc
            })
            .collect()
    }

    /// Appends extra columns on the right.
    pub fn augment_cols(&self, extra: &[Vec<T>]) -> Self {
        for col in extra {
            assert_eq!(col.len(), self.rows);
        }
        Self::from_fn(self.rows, self.cols + extra.len(), |i, j| {
            if j < self.cols {
                self.at(i, j).clone()
            } else {
                extra[j - self.cols][i].clone()
            }
        })
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    fn swap_cols(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for i in 0..self.rows {
            self.data.swap(i * self.cols + a, i * self.cols + b);
        }
    }

    /// row_i += c * row_j
    fn add_row_mul(&mut self, i: usize, j: usize, c: &T) {
        for k in 0..self.cols {
            let v = self.at(i, k).clone() + c.clone() * self.at(j, k).clone();
            *self.at_mut(i, k) = v;
        }
    }

    /// col_i += c * col_j
    fn add_col_mul(&mut self, i: usize, j: usize, c: &T) {
        for k in 0..self.rows {
            let v = self.at(k, i).clone() + c.clone() * self.at(k, j).clone();
            *self.at_mut(k, i) = v;
        }
    }

    fn scale_row(&mut self, i: usize, c: &T) {
        for k in 0..self.cols {
            let v = self.at(i, k).clone() * c.clone();
            *self.at_mut(i, k) = v;
        }
    }

    fn scale_col(&mut self, j: usize, c: &T) {
        for k in 0..self.rows {
            let v = self.at(k, j).clone() * c.clone();
            *self.at_mut(k, j) = v;
        }
    }
}

impl<T: RingScalar> Mul for &Mat<T> {
    type Output = Mat<T>;
    fn mul(self, rhs: &Mat<T>) -> Mat<T> {
        assert_eq!(self.cols, rhs.rows, "dimension mismatch");
        Mat::from_fn(self.rows, rhs.cols, |i, j| {
            let mut acc = T::zero();
            for k in 0..self.cols {
                acc = acc + self.at(i, k).clone() * rhs.at(k, j).clone();
            }
            acc
        })
    }
}

impl<T: RingScalar> Add for &Mat<T> {
    type Output = Mat<T>;
    fn add(self, rhs: &Mat<T>) -> Mat<T> {
        assert!(self.rows == rhs.rows && self.cols == rhs.cols);
        Mat::from_fn(self.rows, self.cols, |i, j| {
            self.at(i, j).clone() + rhs.at(i, j).clone()
        })
    }
}

impl<T: RingScalar + fmt::Debug> fmt::Debug for Mat<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Mat {}x{} [", self.rows, self.cols)?;
        for i in 0..self.rows {
            write!(f, "  ")?;
            for j in 0..self.cols {
                write!(f, "{:?} ", self.at(i, j))?;
            }
            writeln!(f)?;
        }
        write!(f, "]")
    }
}

/// Exact determinant over a field, by Gaussian elimination.
pub fn det_field<T: Scalar>(m: &Mat<T>) -> T {
    assert_eq!(m.rows, m.cols, "determinant of a non-square matrix");
    let n = m.rows;
    if n == 0 {
        return T::one();
    }
    let mut a = m.clone();
    let mut det = T::one();
    for k in 0..n {
        let pivot = (k..n).find(|&i| !a.at(i, k).is_zero());
        let Some(p) = pivot else {
            return T::zero();
        };
        if p != k {
            a.swap_rows(p, k);
            det = -det;
        }
        let pv = a.at(k, k).clone();
        det = det * pv.clone();
        for i in k + 1..n {
            let factor = a.at(i, k).clone() / pv.clone();
            let negf = -factor;
            a.add_row_mul(i, k, &negf);
        }
    }
    det
}

/// Exact determinant over an integral domain (fraction-free Bareiss).
pub fn det_domain<T: RingScalar + DivExact>(m: &Mat<T>) -> T {
    assert_eq!(m.rows, m.cols, "determinant of a non-square matrix");
    let n = m.rows;
    if n == 0 {
        return T::one();
    }
    let mut a = m.clone();
    let mut sign_flip = false;
    let mut prev = T::one();
    for k in 0..n - 1 {
        if a.at(k, k).is_zero() {
            let Some(p) = (k + 1..n).find(|&i| !a.at(i, k).is_zero()) else {
                return T::zero();
            };
            a.swap_rows(p, k);
            sign_flip = !sign_flip;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = a.at(i, j).clone() * a.at(k, k).clone()
                    - a.at(i, k).clone() * a.at(k, j).clone();
                *a.at_mut(i, j) = num.div_exact(&prev).expect("Bareiss division is exact");
            }
            *a.at_mut(i, k) = T::zero();
        }
        prev = a.at(k, k).clone();
    }
    let d = a.at(n - 1, n - 1).clone();
    if sign_flip {
        -d
    } else {
        d
    }
}

// ---------------------------------------------------------------------------
// Smith normal form over Q[t, t^-1].
// ---------------------------------------------------------------------------

/// Smith normal form data: `left * m * right` equals the diagonal matrix of
/// `diag` (padded with zeros), with d_i | d_{i+1} and each nonzero d_i
/// unit-normalized (minimal exponent 0, monic). `left_inv` is cached for
/// cokernel coordinate changes.
#[derive(Clone, Debug)]
pub struct SmithForm<T: Scalar> {
    pub diag: Vec<LaurentPoly<T>>,
    pub left: Mat<LaurentPoly<T>>,
    pub right: Mat<LaurentPoly<T>>,
    pub left_inv: Mat<LaurentPoly<T>>,
    pub rows: usize,
    pub cols: usize,
}

impl<T: Scalar> SmithForm<T> {
    pub fn diag_matrix(&self) -> Mat<LaurentPoly<T>> {
        let mut d = Mat::zero(self.rows, self.cols);
        for (i, p) in self.diag.iter().enumerate() {
            *d.at_mut(i, i) = p.clone();
        }
        d
    }

    /// Number of nonzero diagonal entries.
    pub fn rank(&self) -> usize {
        self.diag.iter().filter(|d| !d.is_zero()).count()
    }

    /// Product of the nonzero diagonal entries (unit-normalized); the order
    /// of the torsion part of the cokernel.
    pub fn torsion_order(&self) -> LaurentPoly<T> {
        let mut acc = LaurentPoly::one();
        for d in &self.diag {
            if !d.is_zero() && !d.is_unit() {
                acc = acc * d.clone();
            }
        }
        acc.unit_normalized()
    }
}

struct SmithState<T> {
    m: Mat<LaurentPoly<T>>,
    left: Mat<LaurentPoly<T>>,
    left_inv: Mat<LaurentPoly<T>>,
    right: Mat<LaurentPoly<T>>,
}

impl<T: Scalar> SmithState<T> {
    fn swap_rows(&mut self, a: usize, b: usize) {
        self.m.swap_rows(a, b);
        self.left.swap_rows(a, b);
        self.left_inv.swap_cols(a, b);
    }

    fn swap_cols(&mut self, a: usize, b: usize) {
        self.m.swap_cols(a, b);
        self.right.swap_cols(a, b);
    }

    /// row_i -= q * row_j on m (and on left; inverse op on left_inv cols).
    fn row_sub(&mut self, i: usize, j: usize, q: &LaurentPoly<T>) {
        let negq = -q.clone();
        self.m.add_row_mul(i, j, &negq);
        self.left.add_row_mul(i, j, &negq);
        self.left_inv.add_col_mul(j, i, q);
    }

    /// col_i -= q * col_j on m (and on right).
    fn col_sub(&mut self, i: usize, j: usize, q: &LaurentPoly<T>) {
        let negq = -q.clone();
        self.m.add_col_mul(i, j, &negq);
        self.right.add_col_mul(i, j, &negq);
    }

    /// row_i *= unit (unit = c * t^k); left_inv column scaled by 1/unit.
    fn scale_row_unit(&mut self, i: usize, unit: &LaurentPoly<T>) {
        debug_assert!(unit.is_unit());
        self.m.scale_row(i, unit);
        self.left.scale_row(i, unit);
        let inv = unit_inverse(unit);
        self.left_inv.scale_col(i, &inv);
    }
}

fn unit_inverse<T: Scalar>(u: &LaurentPoly<T>) -> LaurentPoly<T> {
    debug_assert!(u.is_unit());
    let k = u.min_exp().unwrap();
    let c = u.coeff(k);
    LaurentPoly::monomial(T::one() / c, -k)
}

/// Smith normal form of a rectangular matrix over Q[t, t^-1].
///
/// Pivoting picks the nonzero entry of minimal degree span, ties broken by
/// smallest row then column index; coefficient growth stays bounded and the
/// output is deterministic.
pub fn smith_normal_form<T: Scalar>(m: &Mat<LaurentPoly<T>>) -> SmithForm<T> {
    let rows = m.rows();
    let cols = m.cols();
    let mut st = SmithState {
        m: m.clone(),
        left: Mat::identity(rows),
        left_inv: Mat::identity(rows),
        right: Mat::identity(cols),
    };
    let mut n = 0;
    while n < rows && n < cols {
        // pivot: minimal span among the trailing submatrix
        let mut pivot: Option<(usize, usize, i64)> = None;
        for i in n..rows {
            for j in n..cols {
                if let Some(s) = st.m.at(i, j).span() {
                    if pivot.map_or(true, |(_, _, ps)| s < ps) {
                        pivot = Some((i, j, s));
                    }
                }
            }
        }
        let Some((pi, pj, _)) = pivot else {
            break; // trailing submatrix is zero
        };
        st.swap_rows(n, pi);
        st.swap_cols(n, pj);

        'reduce: loop {
            // clear column n below the pivot
            let mut progress = true;
            while progress {
                progress = false;
                for i in n + 1..rows {
                    if st.m.at(i, n).is_zero() {
                        continue;
                    }
                    let (q, r) = st.m.at(i, n).divrem(st.m.at(n, n));
                    st.row_sub(i, n, &q);
                    if !r.is_zero() {
                        // remainder has a smaller span: promote it to pivot
                        st.swap_rows(n, i);
                        progress = true;
                    }
                }
                for j in n + 1..cols {
                    if st.m.at(n, j).is_zero() {
                        continue;
                    }
                    let (q, r) = st.m.at(n, j).divrem(st.m.at(n, n));
                    st.col_sub(j, n, &q);
                    if !r.is_zero() {
                        st.swap_cols(n, j);
                        progress = true;
                    }
                }
            }
            // pivot must divide the rest of the submatrix for the chain
            for i in n + 1..rows {
                for j in n + 1..cols {
                    if st.m.at(i, j).div_exact(st.m.at(n, n)).is_none() {
                        let one = LaurentPoly::one();
                        let negone = -one;
                        // row_n += row_i  (expressed as row_n -= (-1) row_i)
                        st.row_sub(n, i, &negone);
                        continue 'reduce;
                    }
                }
            }
            break;
        }
        n += 1;
    }

    // unit-normalize the diagonal
    let k = rows.min(cols);
    let mut diag = Vec::with_capacity(k);
    for i in 0..k {
        let d = st.m.at(i, i).clone();
        if !d.is_zero() {
            let u = d.unit_part();
            let inv = unit_inverse(&u);
            st.scale_row_unit(i, &inv);
        }
        diag.push(st.m.at(i, i).clone());
    }

    SmithForm {
        diag,
        left: st.left,
        right: st.right,
        left_inv: st.left_inv,
        rows,
        cols,
    }
}
