use crate::algebra::LinearMap;
use crate::matrix::Matrix;
use crate::subspace::Echelon;

/// The unital subalgebra of `End_k(M)` generated by the `alpha_i`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GeneratedAlgebra {
    basis: Vec<Matrix>,
}

impl GeneratedAlgebra {
    /// Linearly independent words in the generators, shortest first.
    pub fn basis(&self) -> &[Matrix] {
        &self.basis
    }

    pub fn dimension(&self) -> usize {
        self.basis.len()
    }

    /// Whether `m` lies in the span of the basis.
    pub fn contains(&self, m: &Matrix) -> bool {
        let mut e = Echelon::new();
        for b in &self.basis {
            e.insert(b.entries().to_vec());
        }
        e.reduce(m.entries().to_vec()).is_none()
    }
}

/// Spans words of growing length until closed under left multiplication by
/// each generator; since every word is a generator times a shorter word, that
/// closure is the whole algebra.
pub fn generated_algebra(phi: &LinearMap) -> GeneratedAlgebra {
    let full = phi.dim() * phi.dim();
    let mut echelon = Echelon::new();
    let mut basis = Vec::new();
    let mut frontier = vec![Matrix::identity(phi.field(), phi.dim())];
    while !frontier.is_empty() && basis.len() < full {
        let mut next = Vec::new();
        for m in frontier {
            if echelon.insert(m.entries().to_vec()) {
                next.extend(phi.alphas().iter().map(|a| a * &m));
                basis.push(m);
                if basis.len() == full {
                    break;
                }
            }
        }
        frontier = next;
    }
    GeneratedAlgebra { basis }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::category::fixtures;
    use crate::field::FieldDescriptor;

    fn q() -> FieldDescriptor {
        FieldDescriptor::RATIONAL
    }

    #[test]
    fn diagonal_units_span_two() {
        let phi = fixtures::diag_hom(q(), &[1, 1]).unwrap();
        assert_eq!(generated_algebra(&phi).dimension(), 2);
    }

    #[test]
    fn jordan_block_gives_powers() {
        for n in 1..=5 {
            let j = Matrix::from_fn(
                q(),
                n,
                |r, c| if c == r + 1 { q().one() } else { q().zero() },
            );
            let phi = LinearMap::new(q(), vec![j]).unwrap();
            assert_eq!(generated_algebra(&phi).dimension(), n);
        }
    }

    #[test]
    fn example2_is_full_matrix_algebra() {
        let phi = fixtures::example2(q()).unwrap();
        assert_eq!(generated_algebra(&phi).dimension(), 9);
    }

    #[test]
    fn closed_under_products() {
        let phi = fixtures::example1(q(), &q().int(2), &q().int(3)).unwrap();
        let alg = generated_algebra(&phi);
        // upper triangular 2x2 matrices
        assert_eq!(alg.dimension(), 3);
        for a in alg.basis() {
            for b in alg.basis() {
                assert!(alg.contains(&(a * b)));
            }
        }
        assert!(!alg.contains(&Matrix::unit(q(), 2, 1, 0)));
    }
}
