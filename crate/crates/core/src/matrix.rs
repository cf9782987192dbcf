//! Dense square matrices over an exact field.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use thiserror::Error;

use crate::field::{FieldDescriptor, FieldError, Scalar};
use crate::poly::Polynomial;
use crate::subspace::Subspace;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MatrixError {
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error(transparent)]
    Field(#[from] FieldError),
}

/// A `dim x dim` matrix, row-major.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Matrix {
    field: FieldDescriptor,
    dim: usize,
    entries: Vec<Scalar>,
}

impl Matrix {
    pub fn zero(field: FieldDescriptor, dim: usize) -> Self {
        Matrix {
            field,
            dim,
            entries: vec![field.zero(); dim * dim],
        }
    }

    pub fn identity(field: FieldDescriptor, dim: usize) -> Self {
        Self::from_fn(
            field,
            dim,
            |i, j| if i == j { field.one() } else { field.zero() },
        )
    }

    /// Matrix unit `E_ij`.
    pub fn unit(field: FieldDescriptor, dim: usize, i: usize, j: usize) -> Self {
        let mut m = Self::zero(field, dim);
        m.set(i, j, field.one());
        m
    }

    pub fn from_fn(
        field: FieldDescriptor,
        dim: usize,
        mut f: impl FnMut(usize, usize) -> Scalar,
    ) -> Self {
        let mut entries = Vec::with_capacity(dim * dim);
        for i in 0..dim {
            for j in 0..dim {
                entries.push(f(i, j));
            }
        }
        Matrix {
            field,
            dim,
            entries,
        }
    }

    /// Builds a square matrix from rows, checking shape and fields.
    pub fn from_rows(field: FieldDescriptor, rows: Vec<Vec<Scalar>>) -> Result<Self, MatrixError> {
        let dim = rows.len();
        let mut entries = Vec::with_capacity(dim * dim);
        for row in rows {
            if row.len() != dim {
                return Err(MatrixError::DimensionMismatch {
                    expected: dim,
                    found: row.len(),
                });
            }
            for x in row {
                if x.field() != field {
                    return Err(FieldError::MixedFields(field, x.field()).into());
                }
                entries.push(x);
            }
        }
        Ok(Matrix {
            field,
            dim,
            entries,
        })
    }

    /// Convenience constructor from integer rows; panics on ragged input.
    pub fn from_ints(field: FieldDescriptor, rows: &[&[i64]]) -> Self {
        let rows = rows
            .iter()
            .map(|r| r.iter().map(|&x| field.int(x)).collect())
            .collect();
        Self::from_rows(field, rows).expect("square integer matrix")
    }

    /// Diagonal matrix with the given entries.
    pub fn diagonal(field: FieldDescriptor, diag: &[Scalar]) -> Self {
        Self::from_fn(field, diag.len(), |i, j| {
            if i == j {
                diag[i].clone()
            } else {
                field.zero()
            }
        })
    }

    pub fn field(&self) -> FieldDescriptor {
        self.field
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn get(&self, i: usize, j: usize) -> &Scalar {
        &self.entries[i * self.dim + j]
    }

    pub fn set(&mut self, i: usize, j: usize, x: Scalar) {
        debug_assert_eq!(x.field(), self.field);
        self.entries[i * self.dim + j] = x;
    }

    pub fn row(&self, i: usize) -> &[Scalar] {
        &self.entries[i * self.dim..(i + 1) * self.dim]
    }

    pub fn rows(&self) -> impl Iterator<Item = &[Scalar]> {
        self.entries.chunks(self.dim.max(1)).take(self.dim)
    }

    pub fn column(&self, j: usize) -> Vec<Scalar> {
        (0..self.dim).map(|i| self.get(i, j).clone()).collect()
    }

    /// Entries in row-major order, the vectorization used for span computations.
    pub fn entries(&self) -> &[Scalar] {
        &self.entries
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(Scalar::is_zero)
    }

    pub fn is_identity(&self) -> bool {
        self.entries.iter().enumerate().all(|(k, x)| {
            if k / self.dim == k % self.dim {
                x.is_one()
            } else {
                x.is_zero()
            }
        })
    }

    pub fn trace(&self) -> Scalar {
        (0..self.dim).fold(self.field.zero(), |acc, i| &acc + self.get(i, i))
    }

    pub fn transpose(&self) -> Matrix {
        Self::from_fn(self.field, self.dim, |i, j| self.get(j, i).clone())
    }

    fn compatible(&self, other: &Matrix) -> Result<(), MatrixError> {
        if self.field != other.field {
            return Err(FieldError::MixedFields(self.field, other.field).into());
        }
        if self.dim != other.dim {
            return Err(MatrixError::DimensionMismatch {
                expected: self.dim,
                found: other.dim,
            });
        }
        Ok(())
    }

    pub fn checked_add(&self, other: &Matrix) -> Result<Matrix, MatrixError> {
        self.compatible(other)?;
        Ok(self.zip_with(other, |a, b| a + b))
    }

    pub fn checked_sub(&self, other: &Matrix) -> Result<Matrix, MatrixError> {
        self.compatible(other)?;
        Ok(self.zip_with(other, |a, b| a - b))
    }

    pub fn checked_mul(&self, other: &Matrix) -> Result<Matrix, MatrixError> {
        self.compatible(other)?;
        let n = self.dim;
        let entries = (0..n * n)
            .map(|ij| {
                let (i, j) = (ij / n, ij % n);
                Scalar::dot(
                    self.field,
                    (0..n).map(|k| (self.get(i, k), other.get(k, j))),
                )
            })
            .collect();
        Ok(Matrix {
            field: self.field,
            dim: n,
            entries,
        })
    }

    fn zip_with(&self, other: &Matrix, f: impl Fn(&Scalar, &Scalar) -> Scalar) -> Matrix {
        Matrix {
            field: self.field,
            dim: self.dim,
            entries: self
                .entries
                .iter()
                .zip(&other.entries)
                .map(|(a, b)| f(a, b))
                .collect(),
        }
    }

    pub fn scale(&self, c: &Scalar) -> Matrix {
        Matrix {
            field: self.field,
            dim: self.dim,
            entries: self.entries.iter().map(|x| x * c).collect(),
        }
    }

    pub fn pow(&self, mut exp: u64) -> Matrix {
        let mut acc = Matrix::identity(self.field, self.dim);
        let mut base = self.clone();
        while exp > 0 {
            if exp & 1 == 1 {
                acc = &acc * &base;
            }
            exp >>= 1;
            if exp > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    pub fn mul_vec(&self, v: &[Scalar]) -> Vec<Scalar> {
        assert_eq!(v.len(), self.dim, "vector length");
        self.rows()
            .map(|row| Scalar::dot(self.field, row.iter().zip(v)))
            .collect()
    }

    pub fn rank(&self) -> usize {
        let mut rows: Vec<Vec<Scalar>> = self.rows().map(<[Scalar]>::to_vec).collect();
        rref_rows(&mut rows, self.dim).len()
    }

    /// Null space `{v : Mv = 0}` in reduced echelon form.
    pub fn kernel(&self) -> Subspace {
        let n = self.dim;
        let mut rows: Vec<Vec<Scalar>> = self.rows().map(<[Scalar]>::to_vec).collect();
        let pivots = rref_rows(&mut rows, n);
        let free = (0..n).filter(|c| !pivots.contains(c));
        let basis = free
            .map(|fc| {
                let mut v = vec![self.field.zero(); n];
                v[fc] = self.field.one();
                for (r, &pc) in pivots.iter().enumerate() {
                    v[pc] = -&rows[r][fc];
                }
                v
            })
            .collect();
        Subspace::span(self.field, n, basis).expect("kernel vectors have ambient length")
    }

    pub fn inverse(&self) -> Option<Matrix> {
        let n = self.dim;
        let mut rows: Vec<Vec<Scalar>> = self
            .rows()
            .enumerate()
            .map(|(i, r)| {
                let mut row = r.to_vec();
                row.extend((0..n).map(|j| {
                    if i == j {
                        self.field.one()
                    } else {
                        self.field.zero()
                    }
                }));
                row
            })
            .collect();
        let pivots = rref_rows(&mut rows, n);
        if pivots.len() < n {
            return None;
        }
        Some(Self::from_fn(self.field, n, |i, j| rows[i][n + j].clone()))
    }

    /// `p * self * p_inv`.
    pub fn conjugate(&self, p: &Matrix, p_inv: &Matrix) -> Matrix {
        &(p * self) * p_inv
    }

    /// Characteristic polynomial `det(tI - M)`, computed division-free
    /// (Berkowitz), so it is valid in every characteristic.
    pub fn char_poly(&self) -> Polynomial {
        let f = self.field;
        let n = self.dim;
        // Coefficients highest degree first while iterating.
        let mut current = vec![f.one()];
        for r in 0..n {
            // Leading principal block of size r is `a`, new row/column are R, C.
            let a_rr = self.get(r, r);
            let mut column = Vec::with_capacity(r + 2);
            column.push(f.one());
            column.push(-a_rr);
            // v_k = A_r^k C, starting with C
            let mut v: Vec<Scalar> = (0..r).map(|i| self.get(i, r).clone()).collect();
            for k in 0..r {
                let rc = (0..r).fold(f.zero(), |acc, j| &acc + &(self.get(r, j) * &v[j]));
                column.push(-rc);
                if k + 1 < r {
                    v = (0..r)
                        .map(|i| (0..r).fold(f.zero(), |acc, j| &acc + &(self.get(i, j) * &v[j])))
                        .collect();
                }
            }
            // Toeplitz (r+2) x (r+1) lower triangular times current.
            let next: Vec<Scalar> = (0..r + 2)
                .map(|i| {
                    (0..=i.min(r)).fold(f.zero(), |acc, j| {
                        if i - j < column.len() && j < current.len() {
                            &acc + &(&column[i - j] * &current[j])
                        } else {
                            acc
                        }
                    })
                })
                .collect();
            current = next;
        }
        current.reverse();
        Polynomial::new(f, current)
    }

    /// Minimal polynomial: the first linear dependence among the
    /// vectorized powers `I, M, M^2, ...`.
    pub fn min_poly(&self) -> Polynomial {
        let f = self.field;
        let n = self.dim;
        // Each stored row: (reduced vector with pivot normalized to 1, pivot, combination of powers).
        let mut stored: Vec<(Vec<Scalar>, usize, Vec<Scalar>)> = Vec::new();
        let mut power = Matrix::identity(f, n);
        for k in 0..=n {
            let mut v = power.entries.clone();
            let mut combo = vec![f.zero(); k + 1];
            combo[k] = f.one();
            for (row, pivot, rcombo) in &stored {
                let c = v[*pivot].clone();
                if c.is_zero() {
                    continue;
                }
                for (x, y) in v.iter_mut().zip(row) {
                    if !y.is_zero() {
                        *x -= &(&c * y);
                    }
                }
                for (x, y) in combo.iter_mut().zip(rcombo) {
                    *x -= &(&c * y);
                }
            }
            match v.iter().position(|x| !x.is_zero()) {
                None => return Polynomial::new(f, combo),
                Some(p) => {
                    let inv = v[p].inverse().expect("nonzero pivot");
                    let row = v.iter().map(|x| x * &inv).collect();
                    let combo = combo.iter().map(|x| x * &inv).collect();
                    stored.push((row, p, combo));
                }
            }
            power = &power * self;
        }
        unreachable!("Cayley-Hamilton bounds the degree by dim")
    }
}

/// In-place reduced row echelon form over the first `ncols` columns.
/// Returns the pivot columns; zero rows are dropped.
pub(crate) fn rref_rows(rows: &mut Vec<Vec<Scalar>>, ncols: usize) -> Vec<usize> {
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..ncols {
        let Some(p) = (r..rows.len()).find(|&i| !rows[i][c].is_zero()) else {
            continue;
        };
        rows.swap(r, p);
        let inv = rows[r][c].inverse().expect("nonzero pivot");
        for x in rows[r].iter_mut() {
            *x = &*x * &inv;
        }
        let pivot_row = rows[r].clone();
        for (i, row) in rows.iter_mut().enumerate() {
            if i == r || row[c].is_zero() {
                continue;
            }
            let factor = row[c].clone();
            for (x, y) in row.iter_mut().zip(&pivot_row) {
                if !y.is_zero() {
                    *x -= &(&factor * y);
                }
            }
        }
        pivots.push(c);
        r += 1;
        if r == rows.len() {
            break;
        }
    }
    rows.truncate(r);
    pivots
}

macro_rules! forward_matrix_op {
    ($trait:ident, $method:ident, $checked:ident) => {
        impl $trait<&Matrix> for &Matrix {
            type Output = Matrix;
            fn $method(self, rhs: &Matrix) -> Matrix {
                self.$checked(rhs).unwrap_or_else(|e| panic!("{e}"))
            }
        }
        impl $trait<Matrix> for Matrix {
            type Output = Matrix;
            fn $method(self, rhs: Matrix) -> Matrix {
                (&self).$method(&rhs)
            }
        }
    };
}

forward_matrix_op!(Add, add, checked_add);
forward_matrix_op!(Sub, sub, checked_sub);
forward_matrix_op!(Mul, mul, checked_mul);

impl Neg for &Matrix {
    type Output = Matrix;
    fn neg(self) -> Matrix {
        Matrix {
            field: self.field,
            dim: self.dim,
            entries: self.entries.iter().map(|x| -x).collect(),
        }
    }
}

impl fmt::Display for Matrix {
    /// One row per line, entries in compact form separated by spaces.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, row) in self.rows().enumerate() {
            if i > 0 {
                writeln!(f)?;
            }
            let cells: Vec<String> = row.iter().map(Scalar::to_compact_string).collect();
            write!(f, "{}", cells.join(" "))?;
        }
        Ok(())
    }
}
