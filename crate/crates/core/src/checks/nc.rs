//! The symmetrized noncommutative characteristic identity.
//!
//! With noncommuting variables `x_1, ..., x_d` and `T = sum x_i alpha_i`,
//! the coefficient of the word `x_{i_1} ... x_{i_d}` in
//! `sum_{sigma in S_d} (T - x_{sigma(1)}) ... (T - x_{sigma(d)})` is
//!
//! ```text
//! R(i) = sum_{sigma in S_d} prod_{k=1..d} (alpha_{i_k} - delta(i_k, sigma(k)))
//! ```
//!
//! (ordered product). The identity holds iff all `d^d` residuals vanish.
//!
//! Expanding each factor and counting the permutations that agree with a
//! fixed partial assignment gives the subset form used by [`NcMode::Fast`]:
//!
//! ```text
//! R(i) = sum_{S : k -> i_k injective on S} (-1)^|S| (d - |S|)! prod_{k not in S} alpha_{i_k}
//! ```

use rayon::prelude::*;
use std::time::Instant;

use super::{CheckError, CheckName, CheckReport, ViolationKind};
use crate::algebra::LinearMap;
use crate::matrix::Matrix;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum NcMode {
    /// Inclusion-exclusion over position subsets, `O(2^d)` products per word.
    #[default]
    Fast,
    /// Direct sum over all `d!` permutations.
    Naive,
}

fn factorial(n: usize) -> i64 {
    (1..=n as i64).product()
}

/// Next permutation in lexicographic order; false after the last one.
fn next_permutation(p: &mut [usize]) -> bool {
    let Some(i) = (1..p.len()).rev().find(|&i| p[i - 1] < p[i]) else {
        return false;
    };
    let j = (i..p.len())
        .rev()
        .find(|&j| p[j] > p[i - 1])
        .expect("successor exists");
    p.swap(i - 1, j);
    p[i..].reverse();
    true
}

fn residual_naive(phi: &LinearMap, indices: &[usize]) -> Matrix {
    let (field, dim, d) = (phi.field(), phi.dim(), phi.d());
    let id = Matrix::identity(field, dim);
    let shifted: Vec<Matrix> = phi.alphas().iter().map(|a| a - &id).collect();
    let mut sigma: Vec<usize> = (0..d).collect();
    let mut total = Matrix::zero(field, dim);
    loop {
        let prod = indices
            .iter()
            .zip(&sigma)
            .fold(id.clone(), |acc, (&i, &s)| {
                let factor = if i == s { &shifted[i] } else { phi.alpha(i) };
                &acc * factor
            });
        total = &total + &prod;
        if !next_permutation(&mut sigma) {
            break;
        }
    }
    total
}

fn residual_fast(phi: &LinearMap, indices: &[usize]) -> Matrix {
    let (field, dim, d) = (phi.field(), phi.dim(), phi.d());
    let weights: Vec<_> = (0..=d)
        .map(|s| {
            let w = field.int(factorial(d - s));
            if s % 2 == 1 {
                -w
            } else {
                w
            }
        })
        .collect();
    let mut total = Matrix::zero(field, dim);
    // Depth-first over positions; sibling branches share the prefix product.
    #[allow(clippy::too_many_arguments)]
    fn walk(
        phi: &LinearMap,
        indices: &[usize],
        k: usize,
        used: u64,
        skipped: usize,
        prefix: Option<&Matrix>,
        weights: &[crate::field::Scalar],
        total: &mut Matrix,
    ) {
        if k == indices.len() {
            let term = match prefix {
                Some(m) => m.scale(&weights[skipped]),
                None => Matrix::identity(phi.field(), phi.dim()).scale(&weights[skipped]),
            };
            *total = &*total + &term;
            return;
        }
        let i = indices[k];
        let extended = match prefix {
            Some(m) => m * phi.alpha(i),
            None => phi.alpha(i).clone(),
        };
        walk(
            phi,
            indices,
            k + 1,
            used,
            skipped,
            Some(&extended),
            weights,
            total,
        );
        if used & (1 << i) == 0 {
            walk(
                phi,
                indices,
                k + 1,
                used | (1 << i),
                skipped + 1,
                prefix,
                weights,
                total,
            );
        }
    }
    walk(phi, indices, 0, 0, 0, None, &weights, &mut total);
    total
}

/// The residual `R(i)` of one word; indices are 0-based.
pub fn nc_residual(phi: &LinearMap, indices: &[usize], mode: NcMode) -> Matrix {
    assert_eq!(indices.len(), phi.d(), "multi-index length must equal d");
    assert!(
        indices.iter().all(|&i| i < phi.d()),
        "multi-index entry out of range"
    );
    match mode {
        NcMode::Fast => residual_fast(phi, indices),
        NcMode::Naive => residual_naive(phi, indices),
    }
}

fn multi_index(mut n: usize, d: usize) -> Vec<usize> {
    let mut out = vec![0; d];
    for slot in out.iter_mut().rev() {
        *slot = n % d;
        n /= d;
    }
    out
}

fn require_characteristic(phi: &LinearMap) -> Result<(), CheckError> {
    let p = phi.field().characteristic();
    if p != 0 && p as usize <= phi.d() {
        return Err(CheckError::CharacteristicTooSmall {
            characteristic: p,
            d: phi.d(),
        });
    }
    Ok(())
}

/// All `d^d` residuals in lexicographic order of the multi-index.
pub fn nc_residuals(
    phi: &LinearMap,
    mode: NcMode,
) -> Result<Vec<(Vec<usize>, Matrix)>, CheckError> {
    require_characteristic(phi)?;
    let d = phi.d();
    assert!(d < 64, "d must fit the subset bitmask");
    let count = d.pow(d as u32);
    Ok((0..count)
        .into_par_iter()
        .map(|n| {
            let idx = multi_index(n, d);
            let r = nc_residual(phi, &idx, mode);
            (idx, r)
        })
        .collect())
}

/// Whether the symmetrized characteristic polynomial annihilates `T`.
///
/// Refuses fields of characteristic `1..=d`, where the identity is not known
/// to characterize homomorphisms.
pub fn nc_characteristic_check(phi: &LinearMap, mode: NcMode) -> Result<CheckReport, CheckError> {
    let start = Instant::now();
    let mut report = CheckReport::new(CheckName::NoncommutativeCharacteristic);
    for (indices, residual) in nc_residuals(phi, mode)? {
        report.record_matrix(ViolationKind::MultiIndex { indices }, residual);
    }
    report.stats.elapsed = start.elapsed();
    Ok(report)
}
