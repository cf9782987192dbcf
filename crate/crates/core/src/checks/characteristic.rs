use std::collections::BTreeMap;
use std::time::Instant;

use super::{CheckName, CheckReport, ViolationKind};
use crate::algebra::LinearMap;
use crate::matrix::Matrix;

/// Expands `prod_{j} (sum_m y_m B_m - y_j)` in commuting variables
/// `y_1, ..., y_r` with matrix coefficients, where `r = generators.len()`.
///
/// Keys are exponent vectors of the degree-`r` monomials that occur.
pub fn characteristic_expansion(generators: &[Matrix]) -> BTreeMap<Vec<u32>, Matrix> {
    let r = generators.len();
    let first = generators.first().expect("at least one generator");
    let (field, dim) = (first.field(), first.dim());
    let id = Matrix::identity(field, dim);
    let mut poly: BTreeMap<Vec<u32>, Matrix> = BTreeMap::new();
    poly.insert(vec![0; r], id.clone());
    for j in 0..r {
        // factor = sum_m y_m (B_m - delta_{mj})
        let factor: Vec<(usize, Matrix)> = generators
            .iter()
            .enumerate()
            .map(|(m, b)| (m, if m == j { b - &id } else { b.clone() }))
            .filter(|(_, c)| !c.is_zero())
            .collect();
        let mut next: BTreeMap<Vec<u32>, Matrix> = BTreeMap::new();
        for (exps, coeff) in &poly {
            for (m, fm) in &factor {
                let mut e = exps.clone();
                e[*m] += 1;
                let term = coeff * fm;
                match next.get_mut(&e) {
                    Some(acc) => *acc = &*acc + &term,
                    None => {
                        next.insert(e, term);
                    }
                }
            }
        }
        poly = next;
    }
    poly
}

/// Whether `chi_a(phi(a)) = 0` holds identically in `a`, i.e. every
/// coefficient of `prod_i (T - x_i)` with `T = sum_j x_j alpha_j` vanishes.
pub fn characteristic_check(phi: &LinearMap) -> CheckReport {
    let start = Instant::now();
    let mut report = CheckReport::new(CheckName::Characteristic);
    for (exponents, coeff) in characteristic_expansion(phi.alphas()) {
        report.record_matrix(ViolationKind::Monomial { exponents }, coeff);
    }
    report.stats.elapsed = start.elapsed();
    report
}

/// All set partitions of `{0, ..., d-1}`, blocks ordered by least element.
pub fn set_partitions(d: usize) -> Vec<Vec<Vec<usize>>> {
    fn extend(prefix: &mut Vec<usize>, max: usize, d: usize, out: &mut Vec<Vec<Vec<usize>>>) {
        if prefix.len() == d {
            let mut blocks: Vec<Vec<usize>> = vec![Vec::new(); max + 1];
            for (i, &b) in prefix.iter().enumerate() {
                blocks[b].push(i);
            }
            out.push(blocks);
            return;
        }
        let limit = if prefix.is_empty() { 0 } else { max + 1 };
        for b in 0..=limit {
            prefix.push(b);
            extend(prefix, max.max(b), d, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    if d > 0 {
        extend(&mut Vec::with_capacity(d), 0, d, &mut out);
    }
    out
}

/// Whether `minpoly_a(phi(a)) = 0` for all `a`.
///
/// The minimal polynomial of `a` depends only on which coordinates of `a`
/// coincide, so the check runs once per set partition of the idempotents:
/// with block sums `beta_m`, it expands `prod_j (sum_m y_m beta_m - y_j)`.
pub fn minimal_characteristic_check(phi: &LinearMap) -> CheckReport {
    let start = Instant::now();
    let mut report = CheckReport::new(CheckName::MinimalCharacteristic);
    for partition in set_partitions(phi.d()) {
        let betas: Vec<Matrix> = partition
            .iter()
            .map(|block| {
                block
                    .iter()
                    .fold(Matrix::zero(phi.field(), phi.dim()), |acc, &i| {
                        &acc + phi.alpha(i)
                    })
            })
            .collect();
        for (exponents, coeff) in characteristic_expansion(&betas) {
            report.record_matrix(
                ViolationKind::PartitionMonomial {
                    partition: partition.clone(),
                    exponents,
                },
                coeff,
            );
        }
    }
    report.stats.elapsed = start.elapsed();
    report
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::checks::Witness;
    use crate::field::FieldDescriptor;

    fn q() -> FieldDescriptor {
        FieldDescriptor::RATIONAL
    }

    fn example1(a: i64, b: i64) -> LinearMap {
        LinearMap::new(
            q(),
            vec![
                Matrix::from_ints(q(), &[&[1, a], &[0, 0]]),
                Matrix::from_ints(q(), &[&[0, b], &[0, 1]]),
            ],
        )
        .unwrap()
    }

    #[test]
    fn bell_numbers() {
        let bell = [1, 1, 2, 5, 15, 52, 203];
        for (d, &b) in bell.iter().enumerate().skip(1) {
            assert_eq!(set_partitions(d).len(), b);
        }
    }

    #[test]
    fn example1_is_characteristic() {
        for (a, b) in [(1, 1), (2, -1), (0, 3), (5, 7)] {
            assert!(
                characteristic_check(&example1(a, b)).passed(),
                "a={a}, b={b}"
            );
        }
    }

    #[test]
    fn identity_pair_fails_at_mixed_monomial() {
        let phi = LinearMap::new(
            q(),
            vec![Matrix::identity(q(), 2), Matrix::identity(q(), 2)],
        )
        .unwrap();
        let r = characteristic_check(&phi);
        assert!(!r.passed());
        let v = r
            .find(&ViolationKind::Monomial {
                exponents: vec![1, 1],
            })
            .unwrap();
        assert_eq!(v.witness, Witness::Matrix(Matrix::identity(q(), 2)));
        assert_eq!(r.violations().len(), 1);
    }

    #[test]
    fn one_idempotent() {
        // chi reduces to x (alpha - 1)
        let phi = LinearMap::new(q(), vec![Matrix::from_ints(q(), &[&[1, 0], &[0, 2]])]).unwrap();
        let r = characteristic_check(&phi);
        assert_eq!(r.violations().len(), 1);
        assert_eq!(
            r.violations()[0].witness,
            Witness::Matrix(Matrix::from_ints(q(), &[&[0, 0], &[0, 1]]))
        );
    }

    #[test]
    fn minimal_characteristic_examples() {
        let diag =
            LinearMap::new(q(), (0..3).map(|i| Matrix::unit(q(), 3, i, i)).collect()).unwrap();
        assert!(minimal_characteristic_check(&diag).passed());

        let r = minimal_characteristic_check(&example1(1, 1));
        let coarse = ViolationKind::PartitionMonomial {
            partition: vec![vec![0, 1]],
            exponents: vec![1],
        };
        assert_eq!(
            r.find(&coarse).unwrap().witness,
            Witness::Matrix(Matrix::from_ints(q(), &[&[0, 2], &[0, 0]]))
        );
    }
}
