use std::time::Instant;

use super::{CheckName, CheckReport, ViolationKind};
use crate::algebra::LinearMap;
use crate::matrix::Matrix;

/// Checks the defining relations of `k^d`: `sum alpha_i = id`,
/// `alpha_i^2 = alpha_i`, and `alpha_i alpha_j = 0` for `i != j`.
pub fn is_algebra_homomorphism(phi: &LinearMap) -> CheckReport {
    let start = Instant::now();
    let mut report = CheckReport::new(CheckName::Homomorphism);
    let id = Matrix::identity(phi.field(), phi.dim());
    report.record_matrix(ViolationKind::Unit, &phi.unit_image() - &id);
    for (i, a) in phi.alphas().iter().enumerate() {
        for (j, b) in phi.alphas().iter().enumerate() {
            let prod = a * b;
            if i == j {
                report.record_matrix(ViolationKind::Idempotent { i }, &prod - a);
            } else {
                report.record_matrix(ViolationKind::Orthogonal { i, j }, prod);
            }
        }
    }
    report.stats.elapsed = start.elapsed();
    report
}
