//! Exact certification of linear maps `k^d -> End(k^dim)`.
//!
//! Given the images `alpha_i = phi(e_i)` of the orthogonal idempotents of
//! `k^d`, the [`checks`] module decides whether `phi` is an algebra
//! homomorphism, a characteristic or minimal-characteristic morphism,
//! whether it satisfies the symmetrized noncommutative characteristic
//! identity, and whether it maps torsion elements to torsion. The
//! [`category`] module classifies characteristic morphisms (generated
//! algebra, irreducibility, small exhaustive searches).
//!
//! All arithmetic is exact: `Q`, cyclotomic fields `Q(zeta_n)` and prime
//! fields `F_p`.

pub mod algebra;
pub mod category;
pub mod checks;
pub mod cyclotomic;
pub mod document;
pub mod field;
pub mod matrix;
pub mod poly;
pub mod subspace;

pub use algebra::{AlgebraElement, AlgebraError, LinearMap};
pub use cyclotomic::cyclotomic_polynomial;
pub use document::{parse_linear_map, render_linear_map, DocumentError};
pub use field::{FieldDescriptor, FieldError, FieldKind, Scalar};
pub use matrix::{Matrix, MatrixError};
pub use poly::Polynomial;
pub use subspace::{spin_up, Subspace};
