//! The split commutative algebra `A = k^d` and linear maps `A -> End(k^dim)`.

use thiserror::Error;

use crate::field::{FieldDescriptor, Scalar};
use crate::matrix::Matrix;
use crate::poly::Polynomial;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AlgebraError {
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("field mismatch: expected {expected}, found {found}")]
    FieldMismatch {
        expected: FieldDescriptor,
        found: FieldDescriptor,
    },
    #[error("a linear map needs at least one idempotent and a positive module dimension")]
    Empty,
}

/// An element `sum a_i e_i` of `k^d`, stored in the idempotent basis.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct AlgebraElement {
    field: FieldDescriptor,
    coords: Vec<Scalar>,
}

impl AlgebraElement {
    pub fn new(field: FieldDescriptor, coords: Vec<Scalar>) -> Result<Self, AlgebraError> {
        if coords.is_empty() {
            return Err(AlgebraError::Empty);
        }
        if let Some(bad) = coords.iter().find(|c| c.field() != field) {
            return Err(AlgebraError::FieldMismatch {
                expected: field,
                found: bad.field(),
            });
        }
        Ok(AlgebraElement { field, coords })
    }

    pub fn unit(field: FieldDescriptor, d: usize) -> Self {
        AlgebraElement {
            field,
            coords: vec![field.one(); d],
        }
    }

    /// The idempotent `e_i` (0-based).
    pub fn idempotent(field: FieldDescriptor, d: usize, i: usize) -> Self {
        AlgebraElement {
            field,
            coords: (0..d)
                .map(|k| if k == i { field.one() } else { field.zero() })
                .collect(),
        }
    }

    pub fn field(&self) -> FieldDescriptor {
        self.field
    }

    pub fn coords(&self) -> &[Scalar] {
        &self.coords
    }

    pub fn d(&self) -> usize {
        self.coords.len()
    }

    pub fn mul(&self, other: &AlgebraElement) -> AlgebraElement {
        AlgebraElement {
            field: self.field,
            coords: self
                .coords
                .iter()
                .zip(&other.coords)
                .map(|(a, b)| a * b)
                .collect(),
        }
    }

    pub fn pow(&self, n: u64) -> AlgebraElement {
        AlgebraElement {
            field: self.field,
            coords: self.coords.iter().map(|a| a.pow(n)).collect(),
        }
    }

    /// Evaluates `p` at this element, coordinatewise.
    pub fn eval(&self, p: &Polynomial) -> AlgebraElement {
        AlgebraElement {
            field: self.field,
            coords: self.coords.iter().map(|a| p.eval(a)).collect(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(Scalar::is_zero)
    }

    /// Left multiplication by `a` on `A`, a diagonal matrix.
    pub fn regular_representation(&self) -> Matrix {
        Matrix::diagonal(self.field, &self.coords)
    }

    /// Characteristic polynomial of left multiplication: `prod (t - a_i)`.
    pub fn char_poly(&self) -> Polynomial {
        Polynomial::from_roots(self.field, &self.coords)
    }

    /// Minimal polynomial of left multiplication: `prod (t - v)` over distinct coordinate values.
    pub fn min_poly(&self) -> Polynomial {
        let mut distinct: Vec<&Scalar> = Vec::new();
        for c in &self.coords {
            if !distinct.contains(&c) {
                distinct.push(c);
            }
        }
        Polynomial::from_roots(self.field, distinct)
    }
}

/// A linear map `phi: k^d -> End(k^dim)`, determined by `alphas[i] = phi(e_i)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct LinearMap {
    field: FieldDescriptor,
    dim: usize,
    alphas: Vec<Matrix>,
}

impl LinearMap {
    pub fn new(field: FieldDescriptor, alphas: Vec<Matrix>) -> Result<Self, AlgebraError> {
        let dim = alphas.first().map(Matrix::dim).ok_or(AlgebraError::Empty)?;
        if dim == 0 {
            return Err(AlgebraError::Empty);
        }
        for a in &alphas {
            if a.field() != field {
                return Err(AlgebraError::FieldMismatch {
                    expected: field,
                    found: a.field(),
                });
            }
            if a.dim() != dim {
                return Err(AlgebraError::DimensionMismatch {
                    expected: dim,
                    found: a.dim(),
                });
            }
        }
        Ok(LinearMap { field, dim, alphas })
    }

    pub fn field(&self) -> FieldDescriptor {
        self.field
    }

    /// Number of idempotents, i.e. the dimension of the source algebra.
    pub fn d(&self) -> usize {
        self.alphas.len()
    }

    /// Dimension of the module.
    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn alphas(&self) -> &[Matrix] {
        &self.alphas
    }

    pub fn alpha(&self, i: usize) -> &Matrix {
        &self.alphas[i]
    }

    /// `phi(a) = sum a_i alpha_i`.
    pub fn apply(&self, a: &AlgebraElement) -> Result<Matrix, AlgebraError> {
        if a.d() != self.d() {
            return Err(AlgebraError::DimensionMismatch {
                expected: self.d(),
                found: a.d(),
            });
        }
        if a.field() != self.field {
            return Err(AlgebraError::FieldMismatch {
                expected: self.field,
                found: a.field(),
            });
        }
        Ok(self.combine(a.coords()))
    }

    /// `sum c_i alpha_i` for coefficients already known to match.
    pub(crate) fn combine(&self, coeffs: &[Scalar]) -> Matrix {
        self.alphas
            .iter()
            .zip(coeffs)
            .filter(|(_, c)| !c.is_zero())
            .fold(Matrix::zero(self.field, self.dim), |acc, (m, c)| {
                &acc + &m.scale(c)
            })
    }

    /// `phi(1_A)`.
    pub fn unit_image(&self) -> Matrix {
        self.alphas
            .iter()
            .fold(Matrix::zero(self.field, self.dim), |acc, m| &acc + m)
    }

    /// Simultaneous conjugation `alpha_i -> p alpha_i p^-1`.
    pub fn conjugate(&self, p: &Matrix, p_inv: &Matrix) -> LinearMap {
        LinearMap {
            field: self.field,
            dim: self.dim,
            alphas: self.alphas.iter().map(|a| a.conjugate(p, p_inv)).collect(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q() -> FieldDescriptor {
        FieldDescriptor::RATIONAL
    }

    fn example1() -> LinearMap {
        LinearMap::new(
            q(),
            vec![
                Matrix::from_ints(q(), &[&[1, 1], &[0, 0]]),
                Matrix::from_ints(q(), &[&[0, 1], &[0, 1]]),
            ],
        )
        .unwrap()
    }

    fn elem(xs: &[i64]) -> AlgebraElement {
        AlgebraElement::new(q(), xs.iter().map(|&x| q().int(x)).collect()).unwrap()
    }

    #[test]
    fn apply_examples() {
        let phi = example1();
        assert_eq!(
            phi.apply(&AlgebraElement::idempotent(q(), 2, 0)).unwrap(),
            *phi.alpha(0)
        );
        assert_eq!(
            phi.apply(&AlgebraElement::unit(q(), 2)).unwrap(),
            phi.unit_image()
        );
        assert_eq!(
            phi.apply(&elem(&[2, 3])).unwrap(),
            Matrix::from_ints(q(), &[&[2, 5], &[0, 3]])
        );
        assert!(matches!(
            phi.apply(&elem(&[1, 2, 3])),
            Err(AlgebraError::DimensionMismatch {
                expected: 2,
                found: 3
            })
        ));
    }

    #[test]
    fn element_polynomials() {
        assert_eq!(elem(&[0, 1]).char_poly().to_string(), "t^2 - t");
        assert_eq!(
            elem(&[1, 1, 1]).char_poly(),
            Polynomial::from_roots(q(), &[q().one(), q().one(), q().one()])
        );
        assert_eq!(
            elem(&[1, 2, 3]).char_poly().to_string(),
            "t^3 - 6*t^2 + 11*t - 6"
        );
        assert_eq!(elem(&[1, 1, 1]).min_poly().to_string(), "t - 1");
        assert_eq!(elem(&[1, 0, 0]).min_poly().to_string(), "t^2 - t");
        assert_eq!(elem(&[1, 2, 3]).min_poly(), elem(&[1, 2, 3]).char_poly());
    }

    #[test]
    fn rejects_bad_maps() {
        assert_eq!(LinearMap::new(q(), vec![]), Err(AlgebraError::Empty));
        assert_eq!(
            LinearMap::new(q(), vec![Matrix::zero(q(), 0)]),
            Err(AlgebraError::Empty)
        );
        assert!(matches!(
            LinearMap::new(q(), vec![Matrix::zero(q(), 2), Matrix::zero(q(), 3)]),
            Err(AlgebraError::DimensionMismatch { .. })
        ));
        let f5 = FieldDescriptor::prime(5).unwrap();
        assert!(matches!(
            LinearMap::new(q(), vec![Matrix::zero(f5, 2)]),
            Err(AlgebraError::FieldMismatch { .. })
        ));
    }
}
