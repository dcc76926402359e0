//! Dense matrices over exact rings.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use crate::error::{Error, Result};
use crate::scalar::{Field, Rational, Ring};

#[derive(Clone, PartialEq)]
pub struct Matrix<R> {
    rows: usize,
    cols: usize,
    data: Vec<R>,
}

impl<R: Ring> Matrix<R> {
    pub fn from_rows(rows: Vec<Vec<R>>) -> Result<Self> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|row| row.len() != c) {
            return Err(Error::SizeMismatch("ragged matrix rows".into()));
        }
        Ok(Matrix {
            rows: r,
            cols: c,
            data: rows.into_iter().flatten().collect(),
        })
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> R) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        Matrix { rows, cols, data }
    }

    /// All-zero matrix whose entries live in the same ring as `sample`.
    pub fn zeros_like(rows: usize, cols: usize, sample: &R) -> Self {
        let z = sample.zero_like();
        Matrix {
            rows,
            cols,
            data: vec![z; rows * cols],
        }
    }

    pub fn scalar_like(n: usize, value: R) -> Self {
        let z = value.zero_like();
        Self::from_fn(n, n, |i, j| if i == j { value.clone() } else { z.clone() })
    }

    pub fn identity_like(n: usize, sample: &R) -> Self {
        Self::scalar_like(n, sample.one_like())
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

    pub fn get(&self, i: usize, j: usize) -> &R {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: R) {
        self.data[i * self.cols + j] = v;
    }

    pub fn entries(&self) -> &[R] {
        &self.data
    }

    pub fn row(&self, i: usize) -> &[R] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn map<S>(&self, f: impl FnMut(&R) -> S) -> Matrix<S> {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(f).collect(),
        }
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |i, j| self.get(j, i).clone())
    }

    /// Entry zero used when the matrix has no entries to borrow a ring from.
    fn sample(&self) -> &R {
        self.data.first().expect("empty matrix has no ring context")
    }

    pub fn is_zero_matrix(&self) -> bool {
        self.data.iter().all(Ring::is_zero)
    }

    pub fn trace(&self) -> R {
        assert!(self.is_square(), "trace of a non-square matrix");
        let mut acc = self.sample().zero_like();
        for i in 0..self.rows {
            acc = acc + self.get(i, i).clone();
        }
        acc
    }

    pub fn scale(&self, c: &R) -> Self {
        self.map(|x| c.clone() * x.clone())
    }

    pub fn checked_mul(&self, rhs: &Self) -> Result<Self> {
        if self.cols != rhs.rows {
            return Err(Error::SizeMismatch(format!(
                "{}x{} times {}x{}",
                self.rows, self.cols, rhs.rows, rhs.cols
            )));
        }
        Ok(self.mul_unchecked(rhs))
    }

    fn mul_unchecked(&self, rhs: &Self) -> Self {
        let z = self.sample().zero_like();
        let mut out = Vec::with_capacity(self.rows * rhs.cols);
        for i in 0..self.rows {
            for j in 0..rhs.cols {
                let mut acc = z.clone();
                for k in 0..self.cols {
                    let a = self.get(i, k);
                    if a.is_zero() {
                        continue;
                    }
                    let b = rhs.get(k, j);
                    if b.is_zero() {
                        continue;
                    }
                    acc = acc + a.clone() * b.clone();
                }
                out.push(acc);
            }
        }
        Matrix {
            rows: self.rows,
            cols: rhs.cols,
            data: out,
        }
    }

    fn zip_with(&self, rhs: &Self, f: impl Fn(R, R) -> R) -> Self {
        assert!(
            self.rows == rhs.rows && self.cols == rhs.cols,
            "matrix shape mismatch"
        );
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self
                .data
                .iter()
                .zip(&rhs.data)
                .map(|(a, b)| f(a.clone(), b.clone()))
                .collect(),
        }
    }

    /// Commutator `AB - BA`.
    pub fn commutator(&self, rhs: &Self) -> Self {
        self.clone() * rhs.clone() - rhs.clone() * self.clone()
    }
}

impl<F: Field> Matrix<F> {
    /// Row-reduced echelon form together with the pivot columns.
    pub fn rref(&self) -> (Self, Vec<usize>) {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..m.cols {
            if r == m.rows {
                break;
            }
            let Some(p) = (r..m.rows).find(|&i| !m.get(i, c).is_zero()) else {
                continue;
            };
            m.swap_rows(r, p);
            let inv = m.get(r, c).inv().expect("pivot is nonzero");
            for j in c..m.cols {
                let v = m.get(r, j).clone() * inv.clone();
                m.set(r, j, v);
            }
            for i in 0..m.rows {
                if i == r || m.get(i, c).is_zero() {
                    continue;
                }
                let f = m.get(i, c).clone();
                for j in c..m.cols {
                    let v = m.get(i, j).clone() - f.clone() * m.get(r, j).clone();
                    m.set(i, j, v);
                }
            }
            pivots.push(c);
            r += 1;
        }
        (m, pivots)
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    /// Basis of the right null space `{x : A x = 0}`.
    pub fn kernel(&self) -> Vec<Vec<F>> {
        let (r, pivots) = self.rref();
        let sample = self.sample();
        let zero = sample.zero_like();
        let one = sample.one_like();
        let mut basis = Vec::new();
        for free in (0..self.cols).filter(|c| !pivots.contains(c)) {
            let mut v = vec![zero.clone(); self.cols];
            v[free] = one.clone();
            for (row, &pc) in pivots.iter().enumerate() {
                v[pc] = -r.get(row, free).clone();
            }
            basis.push(v);
        }
        basis
    }

    pub fn determinant(&self) -> F {
        assert!(self.is_square(), "determinant of a non-square matrix");
        let mut m = self.clone();
        let n = m.rows;
        let mut det = self.sample().one_like();
        for c in 0..n {
            let Some(p) = (c..n).find(|&i| !m.get(i, c).is_zero()) else {
                return self.sample().zero_like();
            };
            if p != c {
                m.swap_rows(p, c);
                det = -det;
            }
            let pivot = m.get(c, c).clone();
            det = det * pivot.clone();
            let inv = pivot.inv().expect("pivot is nonzero");
            for i in c + 1..n {
                if m.get(i, c).is_zero() {
                    continue;
                }
                let f = m.get(i, c).clone() * inv.clone();
                for j in c..n {
                    let v = m.get(i, j).clone() - f.clone() * m.get(c, j).clone();
                    m.set(i, j, v);
                }
            }
        }
        det
    }

    pub fn inverse(&self) -> Result<Self> {
        if !self.is_square() {
            return Err(Error::SizeMismatch("inverse of a non-square matrix".into()));
        }
        let n = self.rows;
        let sample = self.sample();
        let aug = Matrix::from_fn(n, 2 * n, |i, j| {
            if j < n {
                self.get(i, j).clone()
            } else if j - n == i {
                sample.one_like()
            } else {
                sample.zero_like()
            }
        });
        let (r, pivots) = aug.rref();
        if pivots.len() < n || pivots[n - 1] != n - 1 {
            return Err(Error::SingularMatrix);
        }
        Ok(Matrix::from_fn(n, n, |i, j| r.get(i, j + n).clone()))
    }
}

impl<R: Ring> Add for Matrix<R> {
    type Output = Matrix<R>;
    fn add(self, rhs: Self) -> Self {
        self.zip_with(&rhs, |a, b| a + b)
    }
}

impl<R: Ring> Sub for Matrix<R> {
    type Output = Matrix<R>;
    fn sub(self, rhs: Self) -> Self {
        self.zip_with(&rhs, |a, b| a - b)
    }
}

impl<R: Ring> Mul for Matrix<R> {
    type Output = Matrix<R>;
    fn mul(self, rhs: Self) -> Self {
        assert_eq!(self.cols, rhs.rows, "matrix shape mismatch");
        self.mul_unchecked(&rhs)
    }
}

impl<R: Ring> Mul for &Matrix<R> {
    type Output = Matrix<R>;
    fn mul(self, rhs: Self) -> Matrix<R> {
        assert_eq!(self.cols, rhs.rows, "matrix shape mismatch");
        self.mul_unchecked(rhs)
    }
}

impl<R: Ring> Neg for Matrix<R> {
    type Output = Matrix<R>;
    fn neg(self) -> Self {
        self.map(|x| -x.clone())
    }
}

/// Square matrices form a ring; entries must be nonempty to supply context.
impl<R: Ring> Ring for Matrix<R> {
    fn zero_like(&self) -> Self {
        Matrix::zeros_like(self.rows, self.cols, self.sample())
    }
    fn one_like(&self) -> Self {
        Matrix::identity_like(self.rows, self.sample())
    }
    fn is_zero(&self) -> bool {
        self.is_zero_matrix()
    }
    fn from_rational_like(&self, r: &Rational) -> Self {
        Matrix::scalar_like(self.rows, self.sample().from_rational_like(r))
    }
}

impl<R: fmt::Display> fmt::Display for Matrix<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for i in 0..self.rows {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "[")?;
            for j in 0..self.cols {
                if j > 0 {
                    write!(f, ", ")?;
                }
                write!(f, "{}", self.data[i * self.cols + j])?;
            }
            write!(f, "]")?;
        }
        write!(f, "]")
    }
}

impl<R: fmt::Debug> fmt::Debug for Matrix<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<&[R]> = self.data.chunks(self.cols.max(1)).collect();
        f.debug_list().entries(rows).finish()
    }
}

/// Rational matrix from integer rows; handy in tests and examples.
pub fn int_matrix(rows: &[&[i64]]) -> Matrix<Rational> {
    Matrix::from_rows(
        rows.iter()
            .map(|r| r.iter().map(|&x| crate::scalar::int(x)).collect())
            .collect(),
    )
    .expect("rectangular integer rows")
}

/// Matrix unit `E_{ij}` (0-based) of size `n`.
pub fn matrix_unit(n: usize, i: usize, j: usize) -> Matrix<Rational> {
    Matrix::from_fn(n, n, |a, b| crate::scalar::int((a == i && b == j) as i64))
}
