//! Dense row-major matrices over an exact ring.
//!
//! Matrices act on column vectors: `m.mul_vec(x)` is `m·x`. The integer-only
//! routines (exact inverse, rank, saturated kernel) live in the second `impl`
//! block and go through the fraction field or unimodular column operations.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_rational::Ratio;
use num_traits::{One, Zero};
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::scalar::{Ring, Scalar};

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Matrix<T> {
    rows: usize,
    cols: usize,
    data: Vec<T>,
}

impl<T: Ring> Matrix<T> {
    pub fn new(rows: usize, cols: usize, data: Vec<T>) -> Self {
        assert_eq!(data.len(), rows * cols, "matrix data has wrong length");
        Matrix { rows, cols, data }
    }

    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix::new(rows, cols, vec![T::zero(); rows * cols])
    }

    pub fn identity(n: usize) -> Self {
        Matrix::from_fn(n, n, |i, j| if i == j { T::one() } else { T::zero() })
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> T) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        Matrix { rows, cols, data }
    }

    /// Builds a matrix from row vectors. Panics on ragged input.
    pub fn from_rows(rows: Vec<Vec<T>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        let mut data = Vec::with_capacity(r * c);
        for row in rows {
            assert_eq!(row.len(), c, "ragged rows");
            data.extend(row);
        }
        Matrix { rows: r, cols: c, data }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &T {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: T) {
        self.data[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[T] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn column(&self, j: usize) -> Vec<T> {
        (0..self.rows).map(|i| self.get(i, j).clone()).collect()
    }

    pub fn to_rows(&self) -> Vec<Vec<T>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn from_columns(cols: &[Vec<T>]) -> Self {
        let c = cols.len();
        let r = cols.first().map_or(0, Vec::len);
        Matrix::from_fn(r, c, |i, j| cols[j][i].clone())
    }

    pub fn transpose(&self) -> Self {
        Matrix::from_fn(self.cols, self.rows, |i, j| self.get(j, i).clone())
    }

    pub fn map<U: Ring>(&self, f: impl Fn(&T) -> U) -> Matrix<U> {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(f).collect(),
        }
    }

    pub fn scale(&self, c: &T) -> Self {
        self.map(|x| x.clone() * c.clone())
    }

    /// `self · x` for a column vector `x`.
    pub fn mul_vec(&self, x: &[T]) -> Vec<T> {
        assert_eq!(x.len(), self.cols, "dimension mismatch in mul_vec");
        (0..self.rows)
            .map(|i| dot(self.row(i), x))
            .collect()
    }

    /// `xᵀ · self` for a row vector `x`.
    pub fn vec_mul(&self, x: &[T]) -> Vec<T> {
        assert_eq!(x.len(), self.rows, "dimension mismatch in vec_mul");
        (0..self.cols)
            .map(|j| {
                let mut acc = T::zero();
                for (i, xi) in x.iter().enumerate() {
                    if !xi.is_zero() {
                        acc = acc + xi.clone() * self.get(i, j).clone();
                    }
                }
                acc
            })
            .collect()
    }

    /// Bilinear form `xᵀ · self · y`.
    pub fn bilinear(&self, x: &[T], y: &[T]) -> T {
        dot(x, &self.mul_vec(y))
    }

    pub fn pow(&self, mut e: u64) -> Self {
        assert!(self.is_square(), "pow of a non-square matrix");
        let mut base = self.clone();
        let mut acc = Matrix::identity(self.rows);
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    pub fn is_identity(&self) -> bool {
        self.is_square()
            && (0..self.rows).all(|i| {
                (0..self.cols).all(|j| {
                    let v = self.get(i, j);
                    if i == j {
                        v.is_one()
                    } else {
                        v.is_zero()
                    }
                })
            })
    }

    pub fn is_symmetric(&self) -> bool {
        self.is_square() && (0..self.rows).all(|i| (0..i).all(|j| self.get(i, j) == self.get(j, i)))
    }

    /// Upper triangular with ones on the diagonal.
    pub fn is_unit_upper_triangular(&self) -> bool {
        self.is_square()
            && (0..self.rows).all(|i| {
                self.get(i, i).is_one() && (0..i).all(|j| self.get(i, j).is_zero())
            })
    }

    /// Determinant by fraction-free (Bareiss) elimination; every division is exact.
    pub fn determinant(&self) -> T {
        assert!(self.is_square(), "determinant of a non-square matrix");
        let n = self.rows;
        if n == 0 {
            return T::one();
        }
        let mut a = self.clone();
        let mut sign = T::one();
        let mut prev = T::one();
        for k in 0..n - 1 {
            if a.get(k, k).is_zero() {
                match (k + 1..n).find(|&i| !a.get(i, k).is_zero()) {
                    Some(p) => {
                        a.swap_rows(k, p);
                        sign = -sign;
                    }
                    None => return T::zero(),
                }
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let v = (a.get(i, j).clone() * a.get(k, k).clone()
                        - a.get(i, k).clone() * a.get(k, j).clone())
                        / prev.clone();
                    a.set(i, j, v);
                }
            }
            prev = a.get(k, k).clone();
        }
        sign * a.get(n - 1, n - 1).clone()
    }

    pub fn swap_rows(&mut self, a: usize, b: usize) {
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

    /// `row[dst] += c · row[src]`
    fn add_row_multiple(&mut self, dst: usize, src: usize, c: &T) {
        for j in 0..self.cols {
            let v = self.get(dst, j).clone() + c.clone() * self.get(src, j).clone();
            self.set(dst, j, v);
        }
    }

    /// `col[dst] += c · col[src]`
    fn add_col_multiple(&mut self, dst: usize, src: usize, c: &T) {
        for i in 0..self.rows {
            let v = self.get(i, dst).clone() + c.clone() * self.get(i, src).clone();
            self.set(i, dst, v);
        }
    }
}

pub(crate) fn dot<T: Ring>(x: &[T], y: &[T]) -> T {
    let mut acc = T::zero();
    for (a, b) in x.iter().zip(y) {
        if !a.is_zero() && !b.is_zero() {
            acc = acc + a.clone() * b.clone();
        }
    }
    acc
}

impl<T: Scalar> Matrix<T> {
    /// Inverse over the integers, if the matrix is unimodular.
    pub fn inverse(&self) -> Option<Self> {
        let inv = self.to_fractions().rational_inverse()?;
        let mut data = Vec::with_capacity(inv.data.len());
        for q in inv.data {
            if !q.is_integer() {
                return None;
            }
            data.push(q.to_integer());
        }
        Some(Matrix::new(self.rows, self.cols, data))
    }

    pub fn to_fractions(&self) -> Matrix<Ratio<T>> {
        self.map(|x| Ratio::from_integer(x.clone()))
    }

    /// Rank over the rationals.
    pub fn rank(&self) -> usize {
        self.to_fractions().rref().1.len()
    }

    /// Primitive integer basis of `{x ∈ Zⁿ : self·x = 0}`.
    ///
    /// The rational kernel is computed by row reduction, cleared of
    /// denominators, and then saturated with unimodular column operations so
    /// the result spans the full integer kernel rather than a finite-index
    /// sublattice. Output rows are in Hermite normal form with positive
    /// pivots, which makes the basis canonical.
    pub fn saturated_kernel(&self) -> Vec<Vec<T>> {
        let n = self.cols;
        let (rref, pivots) = self.to_fractions().rref();
        let free: Vec<usize> = (0..n).filter(|c| !pivots.contains(c)).collect();
        if free.is_empty() {
            return Vec::new();
        }
        let mut rational_basis = Vec::with_capacity(free.len());
        for &f in &free {
            let mut v = vec![Ratio::<T>::zero(); n];
            v[f] = Ratio::one();
            for (r, &p) in pivots.iter().enumerate() {
                v[p] = -rref.get(r, f).clone();
            }
            rational_basis.push(clear_denominators(&v));
        }
        let k = rational_basis.len();
        let basis = Matrix::from_rows(rational_basis);
        let saturated = saturate_rows(&basis);
        let mut h = Matrix::from_rows(saturated);
        h.hermite_rows();
        (0..k).map(|i| h.row(i).to_vec()).collect()
    }

    /// In-place row Hermite normal form over the integers (full row rank assumed).
    fn hermite_rows(&mut self) {
        let mut lead = 0;
        for r in 0..self.rows {
            while lead < self.cols && (r..self.rows).all(|i| self.get(i, lead).is_zero()) {
                lead += 1;
            }
            if lead == self.cols {
                return;
            }
            // Euclid down the column until a single nonzero entry remains at r.
            loop {
                let pivot = (r..self.rows)
                    .filter(|&i| !self.get(i, lead).is_zero())
                    .min_by(|&a, &b| self.get(a, lead).abs().cmp(&self.get(b, lead).abs()))
                    .expect("column has a nonzero entry");
                self.swap_rows(r, pivot);
                let mut done = true;
                for i in r + 1..self.rows {
                    if !self.get(i, lead).is_zero() {
                        let q = self.get(i, lead).div_floor(self.get(r, lead));
                        self.add_row_multiple(i, r, &-q);
                        if !self.get(i, lead).is_zero() {
                            done = false;
                        }
                    }
                }
                if done {
                    break;
                }
            }
            if self.get(r, lead).is_negative() {
                for j in 0..self.cols {
                    let v = -self.get(r, j).clone();
                    self.set(r, j, v);
                }
            }
            let p = self.get(r, lead).clone();
            for i in 0..r {
                let q = self.get(i, lead).div_floor(&p);
                if !q.is_zero() {
                    self.add_row_multiple(i, r, &-q);
                }
            }
            lead += 1;
        }
    }
}

/// Rows of a full-row-rank integer matrix `K` are replaced by a basis of the
/// saturation `(Q·rows(K)) ∩ Zⁿ`.
///
/// Maintains `K = M·V` with `V` unimodular while column operations drive `M`
/// to lower-trapezoidal form `[H | 0]`; the first `k` rows of `V` then span
/// the same rational space and extend to a basis of `Zⁿ`.
fn saturate_rows<T: Scalar>(k: &Matrix<T>) -> Vec<Vec<T>> {
    let rows = k.rows;
    let n = k.cols;
    let mut m = k.clone();
    let mut v = Matrix::<T>::identity(n);
    for r in 0..rows {
        loop {
            let nonzero: Vec<usize> = (r..n).filter(|&c| !m.get(r, c).is_zero()).collect();
            let pivot = *nonzero
                .iter()
                .min_by(|&&a, &&b| m.get(r, a).abs().cmp(&m.get(r, b).abs()))
                .expect("rational kernel basis has full row rank");
            m.swap_cols(r, pivot);
            v.swap_rows(r, pivot);
            let mut done = true;
            for c in r + 1..n {
                if !m.get(r, c).is_zero() {
                    let q = m.get(r, c).div_floor(m.get(r, r));
                    // col_c -= q·col_r in M  <=>  row_r += q·row_c in V
                    m.add_col_multiple(c, r, &-q.clone());
                    v.add_row_multiple(r, c, &q);
                    if !m.get(r, c).is_zero() {
                        done = false;
                    }
                }
            }
            if done {
                break;
            }
        }
    }
    (0..rows).map(|i| v.row(i).to_vec()).collect()
}

fn clear_denominators<T: Scalar>(v: &[Ratio<T>]) -> Vec<T> {
    let l = v.iter().fold(T::one(), |acc, q| acc.lcm(q.denom()));
    let ints: Vec<T> = v
        .iter()
        .map(|q| (q.clone() * Ratio::from_integer(l.clone())).to_integer())
        .collect();
    let g = ints.iter().fold(T::zero(), |acc, x| acc.gcd(x));
    if g.is_zero() || g.is_one() {
        ints
    } else {
        ints.into_iter().map(|x| x / g.clone()).collect()
    }
}

impl<T: Scalar> Matrix<Ratio<T>> {
    /// Reduced row echelon form and its pivot columns.
    pub fn rref(&self) -> (Self, Vec<usize>) {
        let mut a = self.clone();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..a.cols {
            if r == a.rows {
                break;
            }
            let Some(p) = (r..a.rows).find(|&i| !a.get(i, c).is_zero()) else {
                continue;
            };
            a.swap_rows(r, p);
            let inv = a.get(r, c).recip();
            for j in 0..a.cols {
                let v = a.get(r, j).clone() * inv.clone();
                a.set(r, j, v);
            }
            for i in 0..a.rows {
                if i != r && !a.get(i, c).is_zero() {
                    let f = -a.get(i, c).clone();
                    a.add_row_multiple(i, r, &f);
                }
            }
            pivots.push(c);
            r += 1;
        }
        (a, pivots)
    }

    pub fn rational_inverse(&self) -> Option<Self> {
        if !self.is_square() {
            return None;
        }
        let n = self.rows;
        let aug = Matrix::from_fn(n, 2 * n, |i, j| {
            if j < n {
                self.get(i, j).clone()
            } else if j - n == i {
                Ratio::one()
            } else {
                Ratio::zero()
            }
        });
        let (red, pivots) = aug.rref();
        if pivots.len() < n || pivots[n - 1] != n - 1 {
            return None;
        }
        Some(Matrix::from_fn(n, n, |i, j| red.get(i, j + n).clone()))
    }
}

impl<'a, T: Ring> Mul<&'a Matrix<T>> for &'a Matrix<T> {
    type Output = Matrix<T>;

    fn mul(self, rhs: &'a Matrix<T>) -> Matrix<T> {
        assert_eq!(self.cols, rhs.rows, "dimension mismatch in matrix product");
        let mut out = Matrix::<T>::zeros(self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..rhs.cols {
                    let b = rhs.get(k, j);
                    if !b.is_zero() {
                        let v = out.get(i, j).clone() + a.clone() * b.clone();
                        out.set(i, j, v);
                    }
                }
            }
        }
        out
    }
}

impl<T: Ring> Mul for Matrix<T> {
    type Output = Matrix<T>;

    fn mul(self, rhs: Matrix<T>) -> Matrix<T> {
        &self * &rhs
    }
}

impl<'a, T: Ring> Add<&'a Matrix<T>> for &'a Matrix<T> {
    type Output = Matrix<T>;

    fn add(self, rhs: &'a Matrix<T>) -> Matrix<T> {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols));
        Matrix::from_fn(self.rows, self.cols, |i, j| {
            self.get(i, j).clone() + rhs.get(i, j).clone()
        })
    }
}

impl<'a, T: Ring> Sub<&'a Matrix<T>> for &'a Matrix<T> {
    type Output = Matrix<T>;

    fn sub(self, rhs: &'a Matrix<T>) -> Matrix<T> {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols));
        Matrix::from_fn(self.rows, self.cols, |i, j| {
            self.get(i, j).clone() - rhs.get(i, j).clone()
        })
    }
}

impl<T: Ring> Neg for &Matrix<T> {
    type Output = Matrix<T>;

    fn neg(self) -> Matrix<T> {
        self.map(|x| -x.clone())
    }
}

impl<T: Ring + fmt::Display> fmt::Display for Matrix<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.rows {
            let row: Vec<String> = self.row(i).iter().map(|x| x.to_string()).collect();
            writeln!(f, "[{}]", row.join(", "))?;
        }
        Ok(())
    }
}

impl<T: fmt::Debug> fmt::Debug for Matrix<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<&[T]> = self.data.chunks(self.cols.max(1)).collect();
        f.debug_list().entries(rows.iter().take(self.rows)).finish()
    }
}

/// Serde adapter writing integers as JSON numbers when they fit in `i64`
/// and as decimal strings otherwise.
pub mod int_serde {
    use super::*;

    pub struct Int<'a, T>(pub &'a T);

    impl<T: Scalar> Serialize for Int<'_, T> {
        fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
            match self.0.to_i64() {
                Some(v) => s.serialize_i64(v),
                None => s.serialize_str(&self.0.to_string()),
            }
        }
    }

    #[derive(Deserialize)]
    #[serde(untagged)]
    enum Raw {
        Num(i64),
        Text(String),
    }

    pub fn parse<'de, D: Deserializer<'de>, T: Scalar>(d: D) -> Result<T, D::Error> {
        match Raw::deserialize(d)? {
            Raw::Num(v) => Ok(crate::scalar::int(v)),
            Raw::Text(s) => s
                .parse::<T>()
                .map_err(|_| D::Error::custom(format!("not an integer: {s}"))),
        }
    }

    pub struct IntOwned<T>(pub T);

    impl<'de, T: Scalar> Deserialize<'de> for IntOwned<T> {
        fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
            parse(d).map(IntOwned)
        }
    }

    pub fn serialize<S: Serializer, T: Scalar>(v: &T, s: S) -> Result<S::Ok, S::Error> {
        Int(v).serialize(s)
    }

    pub fn deserialize<'de, D: Deserializer<'de>, T: Scalar>(d: D) -> Result<T, D::Error> {
        parse(d)
    }

    pub fn serialize_vec<S: Serializer, T: Scalar>(v: &[T], s: S) -> Result<S::Ok, S::Error> {
        s.collect_seq(v.iter().map(Int))
    }

    pub fn deserialize_vec<'de, D: Deserializer<'de>, T: Scalar>(d: D) -> Result<Vec<T>, D::Error> {
        let raw: Vec<IntOwned<T>> = Vec::deserialize(d)?;
        Ok(raw.into_iter().map(|x| x.0).collect())
    }
}

impl<T: Scalar> Serialize for Matrix<T> {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_seq(
            (0..self.rows).map(|i| self.row(i).iter().map(int_serde::Int).collect::<Vec<_>>()),
        )
    }
}

impl<'de, T: Scalar> Deserialize<'de> for Matrix<T> {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let raw: Vec<Vec<int_serde::IntOwned<T>>> = Vec::deserialize(d)?;
        let c = raw.first().map_or(0, Vec::len);
        if raw.iter().any(|r| r.len() != c) {
            return Err(D::Error::custom("ragged matrix rows"));
        }
        Ok(Matrix::from_rows(
            raw.into_iter()
                .map(|r| r.into_iter().map(|x| x.0).collect())
                .collect(),
        ))
    }
}
