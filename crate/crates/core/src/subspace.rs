//! Subspaces of `k^n` in canonical (reduced echelon) form, and spin-up.

use crate::field::{FieldDescriptor, FieldError, Scalar};
use crate::matrix::{rref_rows, Matrix, MatrixError};

/// A subspace of `k^ambient`, represented by its reduced row echelon basis,
/// so two subspaces are equal iff their representations are equal.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Subspace {
    field: FieldDescriptor,
    ambient: usize,
    basis: Vec<Vec<Scalar>>,
}

impl Subspace {
    pub fn zero(field: FieldDescriptor, ambient: usize) -> Self {
        Subspace {
            field,
            ambient,
            basis: Vec::new(),
        }
    }

    pub fn full(field: FieldDescriptor, ambient: usize) -> Self {
        Matrix::zero(field, ambient).kernel()
    }

    /// Span of arbitrary vectors of length `ambient`.
    pub fn span(
        field: FieldDescriptor,
        ambient: usize,
        vectors: Vec<Vec<Scalar>>,
    ) -> Result<Self, MatrixError> {
        for v in &vectors {
            if v.len() != ambient {
                return Err(MatrixError::DimensionMismatch {
                    expected: ambient,
                    found: v.len(),
                });
            }
            if let Some(x) = v.iter().find(|x| x.field() != field) {
                return Err(FieldError::MixedFields(field, x.field()).into());
            }
        }
        let mut rows = vectors;
        rref_rows(&mut rows, ambient);
        Ok(Subspace {
            field,
            ambient,
            basis: rows,
        })
    }

    pub fn field(&self) -> FieldDescriptor {
        self.field
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[Vec<Scalar>] {
        &self.basis
    }

    pub fn is_zero(&self) -> bool {
        self.basis.is_empty()
    }

    pub fn is_full(&self) -> bool {
        self.basis.len() == self.ambient
    }

    /// Nonzero and not the whole space.
    pub fn is_proper_nonzero(&self) -> bool {
        !self.is_zero() && !self.is_full()
    }

    pub fn contains(&self, v: &[Scalar]) -> bool {
        let mut e = Echelon::from_subspace(self);
        e.reduce(v.to_vec()).is_none()
    }

    /// Whether `g v` lies in the subspace for every generator `g` and basis vector `v`.
    pub fn is_invariant_under(&self, generators: &[Matrix]) -> bool {
        generators
            .iter()
            .all(|g| self.basis.iter().all(|v| self.contains(&g.mul_vec(v))))
    }
}

/// Smallest subspace containing `seed` and closed under every generator.
pub fn spin_up(seed: &Subspace, generators: &[Matrix]) -> Result<Subspace, MatrixError> {
    for g in generators {
        if g.dim() != seed.ambient {
            return Err(MatrixError::DimensionMismatch {
                expected: seed.ambient,
                found: g.dim(),
            });
        }
        if g.field() != seed.field {
            return Err(FieldError::MixedFields(seed.field, g.field()).into());
        }
    }
    let mut echelon = Echelon::new();
    let mut queue: Vec<Vec<Scalar>> = seed.basis.clone();
    while let Some(v) = queue.pop() {
        if echelon.insert(v.clone()) {
            if echelon.len() == seed.ambient {
                break;
            }
            queue.extend(generators.iter().map(|g| g.mul_vec(&v)));
        }
    }
    Subspace::span(seed.field, seed.ambient, echelon.into_rows())
}

/// Incremental echelon basis with pivots normalized to one.
#[derive(Debug, Clone, Default)]
pub(crate) struct Echelon {
    rows: Vec<(usize, Vec<Scalar>)>,
}

impl Echelon {
    pub(crate) fn new() -> Self {
        Self::default()
    }

    fn from_subspace(s: &Subspace) -> Self {
        let rows = s
            .basis
            .iter()
            .map(|r| {
                (
                    r.iter().position(|x| !x.is_zero()).expect("nonzero row"),
                    r.clone(),
                )
            })
            .collect();
        Echelon { rows }
    }

    pub(crate) fn len(&self) -> usize {
        self.rows.len()
    }

    /// Reduces `v` against the stored rows; `None` when it lies in their span.
    pub(crate) fn reduce(&mut self, mut v: Vec<Scalar>) -> Option<(usize, Vec<Scalar>)> {
        for (pivot, row) in &self.rows {
            let c = v[*pivot].clone();
            if c.is_zero() {
                continue;
            }
            for (x, y) in v.iter_mut().zip(row) {
                if !y.is_zero() {
                    *x -= &(&c * y);
                }
            }
        }
        let p = v.iter().position(|x| !x.is_zero())?;
        let inv = v[p].inverse().expect("nonzero pivot");
        Some((p, v.iter().map(|x| x * &inv).collect()))
    }

    /// Adds `v` if independent; returns whether the span grew.
    pub(crate) fn insert(&mut self, v: Vec<Scalar>) -> bool {
        match self.reduce(v) {
            None => false,
            Some(row) => {
                self.rows.push(row);
                true
            }
        }
    }

    pub(crate) fn into_rows(self) -> Vec<Vec<Scalar>> {
        self.rows.into_iter().map(|(_, r)| r).collect()
    }
}
