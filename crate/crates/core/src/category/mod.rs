//! Classification of linear maps `k^d -> End_k(M)`: the algebra they
//! generate, irreducibility of `M`, fixtures, and small searches.

pub mod fixtures;
mod generated;
mod irreducible;
mod search;

pub use fixtures::{fixture, FixtureError, FixtureParams, FIXTURE_NAMES};
pub use generated::{generated_algebra, GeneratedAlgebra};
pub use irreducible::{
    burnside_certificate, exhaustive_spin_up, extension_factors, find_invariant_subspace,
    irreducibility, Certificate, IrreducibilityVerdict, EXHAUSTIVE_SPIN_UP_LIMIT,
};
pub use search::{
    search, SearchError, SearchMode, SearchReport, SearchResult, SearchStats, Signature,
    EXHAUSTIVE_SEARCH_LIMIT,
};
