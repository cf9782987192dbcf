//! Certification procedures for a [`LinearMap`](crate::LinearMap).
//!
//! Every check returns a [`CheckReport`]; the verdict is `Pass` exactly when
//! no [`Violation`] was recorded.

mod characteristic;
mod homomorphism;
mod lemma;
mod nc;
mod report;
mod roots;

pub use characteristic::{
    characteristic_check, characteristic_expansion, minimal_characteristic_check, set_partitions,
};
pub use homomorphism::is_algebra_homomorphism;
pub use lemma::{verify_root_ratio_lemma, LemmaCounterexample};
pub use nc::{nc_characteristic_check, nc_residual, nc_residuals, NcMode};
pub use report::{CheckName, CheckReport, CheckStats, Verdict, Violation, ViolationKind, Witness};
pub use roots::{roots_of_unity_check, torsion_elements, RootsMode, FULL_MODE_LIMIT};

use thiserror::Error;

use crate::field::FieldError;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CheckError {
    #[error("field characteristic {characteristic} must be 0 or greater than d = {d}")]
    CharacteristicTooSmall { characteristic: u64, d: usize },
    #[error("n = {0} is too small for this check")]
    NTooSmall(u64),
    #[error(transparent)]
    Field(#[from] FieldError),
}
