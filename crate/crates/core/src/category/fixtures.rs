//! Named linear maps used throughout the tests and the CLI.

use thiserror::Error;

use crate::algebra::LinearMap;
use crate::field::{FieldDescriptor, Scalar};
use crate::matrix::Matrix;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FixtureError {
    #[error("bad fixture parameters: {0}")]
    BadParams(String),
    #[error("unknown fixture `{0}` (known: example1, example2, diag_hom)")]
    UnknownFixture(String),
}

pub const FIXTURE_NAMES: [&str; 3] = ["example1", "example2", "diag_hom"];

/// `alpha_1 = [[1, a], [0, 0]]`, `alpha_2 = [[0, b], [0, 1]]`: a characteristic
/// morphism `k^2 -> Mat_2(k)` that is not a homomorphism unless `a + b = 0`,
/// which is excluded.
pub fn example1(field: FieldDescriptor, a: &Scalar, b: &Scalar) -> Result<LinearMap, FixtureError> {
    if a.field() != field || b.field() != field {
        return Err(FixtureError::BadParams(
            "a and b must lie in the chosen field".into(),
        ));
    }
    if (a + b).is_zero() {
        return Err(FixtureError::BadParams(
            "example1 requires a + b != 0".into(),
        ));
    }
    let (zero, one) = (field.zero(), field.one());
    let alpha1 = Matrix::from_rows(
        field,
        vec![
            vec![one.clone(), a.clone()],
            vec![zero.clone(), zero.clone()],
        ],
    );
    let alpha2 = Matrix::from_rows(field, vec![vec![zero.clone(), b.clone()], vec![zero, one]]);
    Ok(
        LinearMap::new(field, vec![alpha1.expect("2x2"), alpha2.expect("2x2")])
            .expect("valid shapes"),
    )
}

/// The irreducible, non-homomorphic characteristic morphism `k^3 -> Mat_3(k)`
/// given by three half-integer matrices. Needs characteristic != 2.
pub fn example2(field: FieldDescriptor) -> Result<LinearMap, FixtureError> {
    if field.characteristic() == 2 {
        return Err(FixtureError::BadParams(
            "example2 needs characteristic != 2".into(),
        ));
    }
    let half = field.int(2).inverse().expect("2 is invertible");
    let raw: [[[i64; 3]; 3]; 3] = [
        [[0, 1, 1], [0, 1, -1], [0, -1, 1]],
        [[1, 0, -1], [1, 0, 1], [-1, 0, 1]],
        [[1, -1, 0], [-1, 1, 0], [1, 1, 0]],
    ];
    let alphas = raw
        .iter()
        .map(|m| {
            let rows: Vec<&[i64]> = m.iter().map(|r| r.as_slice()).collect();
            Matrix::from_ints(field, &rows).scale(&half)
        })
        .collect();
    Ok(LinearMap::new(field, alphas).expect("valid shapes"))
}

/// Block-diagonal homomorphism: `alpha_i` is the identity on the `i`-th block
/// of size `multiplicities[i]` (possibly empty) and zero elsewhere.
pub fn diag_hom(
    field: FieldDescriptor,
    multiplicities: &[usize],
) -> Result<LinearMap, FixtureError> {
    let dim: usize = multiplicities.iter().sum();
    if multiplicities.is_empty() || dim == 0 {
        return Err(FixtureError::BadParams(
            "diag_hom needs d >= 1 and a positive total dimension".into(),
        ));
    }
    let mut offset = 0;
    let alphas = multiplicities
        .iter()
        .map(|&m| {
            let block = offset..offset + m;
            offset += m;
            Matrix::from_fn(field, dim, |i, j| {
                if i == j && block.contains(&i) {
                    field.one()
                } else {
                    field.zero()
                }
            })
        })
        .collect();
    Ok(LinearMap::new(field, alphas).expect("valid shapes"))
}

/// Splits `dim` into `d` near-equal block sizes, larger blocks first.
pub fn balanced_multiplicities(d: usize, dim: usize) -> Vec<usize> {
    (0..d).map(|i| dim / d + usize::from(i < dim % d)).collect()
}

/// Parameters for [`fixture`]; unused fields are ignored.
#[derive(Debug, Clone, Default)]
pub struct FixtureParams {
    pub a: Option<String>,
    pub b: Option<String>,
    pub d: Option<usize>,
    pub dim: Option<usize>,
    pub multiplicities: Option<Vec<usize>>,
}

/// Builds a fixture by name: `example1` (defaults `a = b = 1`), `example2`,
/// or `diag_hom` (explicit multiplicities, or `d` and `dim` split evenly).
pub fn fixture(
    name: &str,
    field: FieldDescriptor,
    params: &FixtureParams,
) -> Result<LinearMap, FixtureError> {
    let scalar = |s: &Option<String>| -> Result<Scalar, FixtureError> {
        match s {
            None => Ok(field.one()),
            Some(t) => field
                .parse_scalar(t)
                .map_err(|e| FixtureError::BadParams(e.to_string())),
        }
    };
    match name {
        "example1" => example1(field, &scalar(&params.a)?, &scalar(&params.b)?),
        "example2" => example2(field),
        "diag_hom" => {
            let mults = match (&params.multiplicities, params.d, params.dim) {
                (Some(m), _, _) => m.clone(),
                (None, Some(d), Some(dim)) => balanced_multiplicities(d, dim),
                (None, Some(d), None) => vec![1; d],
                _ => {
                    return Err(FixtureError::BadParams(
                        "diag_hom needs --d (and --dim) or multiplicities".into(),
                    ))
                }
            };
            if let (Some(d), Some(dim)) = (params.d, params.dim) {
                if mults.len() != d || mults.iter().sum::<usize>() != dim {
                    return Err(FixtureError::BadParams(format!(
                        "multiplicities {mults:?} do not match d = {d}, dim = {dim}"
                    )));
                }
            }
            diag_hom(field, &mults)
        }
        other => Err(FixtureError::UnknownFixture(other.to_string())),
    }
}
