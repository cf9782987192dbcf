use rayon::prelude::*;
use std::collections::BTreeSet;
use std::time::Instant;

use super::{CheckError, CheckName, CheckReport, ViolationKind};
use crate::algebra::LinearMap;
use crate::matrix::Matrix;

/// `Auto` runs the full enumeration while `n^d` stays at or below this.
pub const FULL_MODE_LIMIT: u64 = 1_000_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum RootsMode {
    /// Every torsion element `(zeta^{c_1}, ..., zeta^{c_d})`.
    Full,
    /// Only `1 + (zeta^b - 1) e_i` and `1 + (zeta^a - 1)(e_i + e_j)`.
    ProofPath,
    /// `Full` when `n^d <= FULL_MODE_LIMIT`, otherwise `ProofPath` with a note.
    #[default]
    Auto,
}

/// Exponent vectors `c` of the torsion elements `a = (zeta^{c_1}, ..., zeta^{c_d})`
/// visited by `mode` (which must not be `Auto`), in lexicographic order.
pub fn torsion_elements(d: usize, n: u64, mode: RootsMode) -> Vec<Vec<u64>> {
    match mode {
        RootsMode::Full | RootsMode::Auto => {
            let total = n.pow(d as u32);
            (0..total)
                .map(|mut k| {
                    let mut c = vec![0; d];
                    for slot in c.iter_mut().rev() {
                        *slot = k % n;
                        k /= n;
                    }
                    c
                })
                .collect()
        }
        RootsMode::ProofPath => {
            let mut set = BTreeSet::new();
            for i in 0..d {
                for b in 0..n {
                    let mut c = vec![0; d];
                    c[i] = b;
                    set.insert(c);
                }
                for j in i + 1..d {
                    for a in 0..n {
                        let mut c = vec![0; d];
                        c[i] = a;
                        c[j] = a;
                        set.insert(c);
                    }
                }
            }
            set.into_iter().collect()
        }
    }
}

/// Checks `phi(1) = id` and `phi(a)^n = id` for torsion elements `a^n = 1`.
///
/// Requires `n > 2` and a primitive `n`-th root of unity in the field.
pub fn roots_of_unity_check(
    phi: &LinearMap,
    n: u64,
    mode: RootsMode,
) -> Result<CheckReport, CheckError> {
    if n <= 2 {
        return Err(CheckError::NTooSmall(n));
    }
    let start = Instant::now();
    let field = phi.field();
    let zeta = field.primitive_root_of_unity(n)?;
    let mut report = CheckReport::new(CheckName::RootsOfUnity);
    let id = Matrix::identity(field, phi.dim());

    report.record_matrix(ViolationKind::Unit, &phi.unit_image() - &id);
    if !report.passed() {
        report.stats.elapsed = start.elapsed();
        return Ok(report);
    }

    let d = phi.d();
    let effective = match mode {
        RootsMode::Auto => {
            let full_size = (n as u128).checked_pow(d as u32);
            if full_size.is_some_and(|s| s <= FULL_MODE_LIMIT as u128) {
                RootsMode::Full
            } else {
                report.stats.notes.push(format!(
                    "n^d exceeds {FULL_MODE_LIMIT}; checked the proof-path elements only"
                ));
                RootsMode::ProofPath
            }
        }
        m => m,
    };
    let powers: Vec<_> = (0..n).map(|k| zeta.pow(k)).collect();
    let residuals: Vec<(Vec<u64>, Matrix)> = torsion_elements(d, n, effective)
        .into_par_iter()
        .map(|c| {
            let coeffs: Vec<_> = c.iter().map(|&k| powers[k as usize].clone()).collect();
            let image = phi.combine(&coeffs);
            let residual = &image.pow(n) - &id;
            (c, residual)
        })
        .collect();
    for (exponents, residual) in residuals {
        report.record_matrix(ViolationKind::Torsion { exponents }, residual);
    }
    report.stats.elapsed = start.elapsed();
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::checks::Witness;
    use crate::field::{FieldDescriptor, FieldError};

    #[test]
    fn diagonal_homomorphism_passes() {
        let f = FieldDescriptor::cyclotomic(3).unwrap();
        let phi = LinearMap::new(f, (0..2).map(|i| Matrix::unit(f, 2, i, i)).collect()).unwrap();
        let r = roots_of_unity_check(&phi, 3, RootsMode::Full).unwrap();
        assert!(r.passed());
        assert_eq!(r.stats.equations, 1 + 9);
    }

    #[test]
    fn example1_fails_at_unit_gate() {
        let f = FieldDescriptor::cyclotomic(3).unwrap();
        let phi = LinearMap::new(
            f,
            vec![
                Matrix::from_ints(f, &[&[1, 1], &[0, 0]]),
                Matrix::from_ints(f, &[&[0, 1], &[0, 1]]),
            ],
        )
        .unwrap();
        let r = roots_of_unity_check(&phi, 3, RootsMode::Full).unwrap();
        assert_eq!(r.violations().len(), 1);
        assert_eq!(r.violations()[0].kind, ViolationKind::Unit);
        // phi(1) = [[1,2],[0,1]] and phi(1)^3 = [[1,6],[0,1]] != id
        let unit = phi.unit_image();
        assert_eq!(unit, Matrix::from_ints(f, &[&[1, 2], &[0, 1]]));
        assert_eq!(unit.pow(3), Matrix::from_ints(f, &[&[1, 6], &[0, 1]]));
        assert_eq!(
            r.violations()[0].witness,
            Witness::Matrix(Matrix::from_ints(f, &[&[0, 2], &[0, 0]]))
        );
    }

    #[test]
    fn unital_non_homomorphism_fails_on_torsion() {
        let f = FieldDescriptor::cyclotomic(4).unwrap();
        // unital, but alpha_1 is not idempotent
        let a1 = Matrix::from_ints(f, &[&[2, 0], &[0, 0]]);
        let a2 = &Matrix::identity(f, 2) - &a1;
        let phi = LinearMap::new(f, vec![a1, a2]).unwrap();
        let r = roots_of_unity_check(&phi, 4, RootsMode::Full).unwrap();
        assert!(!r.passed());
        assert!(r.find(&ViolationKind::Unit).is_none());
        let r = roots_of_unity_check(&phi, 4, RootsMode::ProofPath).unwrap();
        assert!(!r.passed());
    }

    #[test]
    fn precondition_errors() {
        let f = FieldDescriptor::cyclotomic(3).unwrap();
        let phi = LinearMap::new(f, vec![Matrix::identity(f, 1)]).unwrap();
        assert_eq!(
            roots_of_unity_check(&phi, 2, RootsMode::Full),
            Err(CheckError::NTooSmall(2))
        );
        assert!(matches!(
            roots_of_unity_check(&phi, 5, RootsMode::Full),
            Err(CheckError::Field(FieldError::NoSuchRoot { n: 5, .. }))
        ));
        let f7 = FieldDescriptor::prime(7).unwrap();
        let phi = LinearMap::new(f7, vec![Matrix::identity(f7, 1)]).unwrap();
        assert!(roots_of_unity_check(&phi, 3, RootsMode::Full)
            .unwrap()
            .passed());
    }

    #[test]
    fn proof_path_elements() {
        let c = torsion_elements(3, 4, RootsMode::ProofPath);
        // zero vector, 3*(n-1) single-coordinate, 3*(n-1) pairs
        assert_eq!(c.len(), 1 + 3 * 3 + 3 * 3);
        assert_eq!(torsion_elements(3, 4, RootsMode::Full).len(), 64);
    }
}
