//! Desk-scale search for characteristic morphisms `k^d -> Mat_dim(k)`.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use std::collections::HashSet;
use std::fmt;
use std::str::FromStr;
use std::time::{Duration, Instant};
use thiserror::Error;

use super::irreducible::{irreducibility, IrreducibilityVerdict};
use crate::algebra::LinearMap;
use crate::checks::{characteristic_check, is_algebra_homomorphism};
use crate::field::{FieldDescriptor, FieldKind, Scalar};
use crate::matrix::Matrix;
use crate::poly::Polynomial;

/// Largest number of tuples exhaustive mode will enumerate.
pub const EXHAUSTIVE_SEARCH_LIMIT: u64 = 10_000_000;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SearchError {
    #[error("search space of {p}^{exponent} tuples exceeds {limit}", limit = EXHAUSTIVE_SEARCH_LIMIT)]
    SearchSpaceTooLarge { p: u64, exponent: u32 },
    #[error("no such search mode `{0}` (expected exhaustive or random)")]
    NoSuchMode(String),
    #[error("exhaustive search needs a prime field, got {0}")]
    ExhaustiveNeedsPrimeField(FieldDescriptor),
    #[error("d and dim must be positive (got d = {d}, dim = {dim})")]
    InvalidShape { d: usize, dim: usize },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SearchMode {
    /// Every tuple over a prime field, in lexicographic order of entries.
    Exhaustive,
    /// `budget` tuples drawn from a seeded generator. Entries are uniform
    /// residues over prime fields and integers in `-2..=2` otherwise.
    Random { budget: u64, seed: u64 },
}

impl SearchMode {
    /// Mode from its name; `budget` and `seed` only matter for `random`.
    pub fn from_name(name: &str, budget: u64, seed: u64) -> Result<Self, SearchError> {
        match name {
            "exhaustive" => Ok(SearchMode::Exhaustive),
            "random" => Ok(SearchMode::Random { budget, seed }),
            other => Err(SearchError::NoSuchMode(other.to_string())),
        }
    }
}

impl FromStr for SearchMode {
    type Err = SearchError;

    /// `exhaustive`, or `random` with budget 10000 and seed 0.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Self::from_name(s, 10_000, 0)
    }
}

/// Fingerprint that is unchanged when all `alpha_i` are conjugated by the
/// same invertible matrix: the sorted characteristic polynomials of the
/// `alpha_i`, and the traces and ranks of all words of length 1 to 3, in
/// index order. Traces alone only see the semisimplification, so a non-split
/// extension would collide with its split form; ranks tell them apart.
/// Distinct orbits may still share a signature.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Signature {
    pub char_polys: Vec<Polynomial>,
    pub word_traces: Vec<Scalar>,
    pub word_ranks: Vec<usize>,
}

impl Signature {
    pub fn of(phi: &LinearMap) -> Signature {
        let mut char_polys: Vec<Polynomial> = phi.alphas().iter().map(Matrix::char_poly).collect();
        char_polys.sort_by_cached_key(|p| p.to_string());
        let gens = phi.alphas();
        let pairs: Vec<Matrix> = gens
            .iter()
            .flat_map(|a| gens.iter().map(move |b| a * b))
            .collect();
        let triples: Vec<Matrix> = pairs
            .iter()
            .flat_map(|ab| gens.iter().map(move |c| ab * c))
            .collect();
        let words = || gens.iter().chain(&pairs).chain(&triples);
        Signature {
            char_polys,
            word_traces: words().map(Matrix::trace).collect(),
            word_ranks: words().map(Matrix::rank).collect(),
        }
    }
}

impl fmt::Display for Signature {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let polys: Vec<String> = self.char_polys.iter().map(|p| p.to_string()).collect();
        let traces: Vec<String> = self
            .word_traces
            .iter()
            .map(Scalar::to_compact_string)
            .collect();
        let ranks: Vec<String> = self.word_ranks.iter().map(usize::to_string).collect();
        write!(
            f,
            "[{}] traces [{}] ranks [{}]",
            polys.join("; "),
            traces.join(" "),
            ranks.join(" ")
        )
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SearchResult {
    pub linear_map: LinearMap,
    pub is_hom: bool,
    /// Always true: only characteristic morphisms are emitted.
    pub is_characteristic: bool,
    pub irreducibility: IrreducibilityVerdict,
    pub signature: Signature,
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct SearchStats {
    /// Tuples considered, including those rejected by the necessary
    /// condition `alpha_i^(d-1) (alpha_i - 1) = 0`.
    pub examined: u64,
    /// Tuples passing the characteristic check, before deduplication.
    pub characteristic: u64,
    pub elapsed: Duration,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SearchReport {
    pub results: Vec<SearchResult>,
    pub stats: SearchStats,
}

fn matrix_from_index(field: FieldDescriptor, p: u64, dim: usize, mut n: u64) -> Matrix {
    let mut entries = vec![0u64; dim * dim];
    for slot in entries.iter_mut().rev() {
        *slot = n % p;
        n /= p;
    }
    Matrix::from_fn(field, dim, |i, j| field.int(entries[i * dim + j] as i64))
}

/// Setting `a = e_i` in the characteristic identity gives
/// `alpha_i^(d-1) (alpha_i - 1) = 0`, so only such matrices can occur.
fn admissible(m: &Matrix, d: usize) -> bool {
    let id = Matrix::identity(m.field(), m.dim());
    (&m.pow(d as u64 - 1) * &(m - &id)).is_zero()
}

fn exhaustive_candidates(
    field: FieldDescriptor,
    d: usize,
    dim: usize,
) -> Result<(u64, Vec<LinearMap>), SearchError> {
    let FieldKind::Prime(p) = field.kind() else {
        return Err(SearchError::ExhaustiveNeedsPrimeField(field));
    };
    let exponent = (d * dim * dim) as u32;
    let too_large = SearchError::SearchSpaceTooLarge { p, exponent };
    let total = p.checked_pow(exponent).ok_or(too_large.clone())?;
    if total > EXHAUSTIVE_SEARCH_LIMIT {
        return Err(too_large);
    }
    let per_matrix = p.pow((dim * dim) as u32);
    let singles: Vec<Matrix> = (0..per_matrix)
        .into_par_iter()
        .map(|n| matrix_from_index(field, p, dim, n))
        .filter(|m| admissible(m, d))
        .collect();
    // Tuples of admissible matrices, lexicographic in the tuple of indices,
    // which is lexicographic in the concatenated entries.
    let count = singles.len().pow(d as u32);
    let candidates = (0..count)
        .into_par_iter()
        .filter_map(|mut n| {
            let mut picks = vec![0; d];
            for slot in picks.iter_mut().rev() {
                *slot = n % singles.len();
                n /= singles.len();
            }
            let phi = LinearMap::new(field, picks.iter().map(|&k| singles[k].clone()).collect())
                .expect("valid shapes");
            characteristic_check(&phi).passed().then_some(phi)
        })
        .collect();
    Ok((total, candidates))
}

fn random_candidates(
    field: FieldDescriptor,
    d: usize,
    dim: usize,
    budget: u64,
    seed: u64,
) -> Vec<LinearMap> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut entry = move || match field.kind() {
        FieldKind::Prime(p) => field.int(rng.gen_range(0..p) as i64),
        _ => field.int(rng.gen_range(-2..=2)),
    };
    let samples: Vec<LinearMap> = (0..budget)
        .map(|_| {
            let alphas = (0..d)
                .map(|_| Matrix::from_fn(field, dim, |_, _| entry()))
                .collect();
            LinearMap::new(field, alphas).expect("valid shapes")
        })
        .collect();
    samples
        .into_par_iter()
        .filter(|phi| {
            phi.alphas().iter().all(|m| admissible(m, d)) && characteristic_check(phi).passed()
        })
        .collect()
}

/// Enumerates or samples `d`-tuples of `dim x dim` matrices, keeps the
/// characteristic morphisms, drops any whose [`Signature`] was already seen,
/// and classifies the rest. Results are in enumeration (or sampling) order.
pub fn search(
    field: FieldDescriptor,
    d: usize,
    dim: usize,
    mode: SearchMode,
) -> Result<SearchReport, SearchError> {
    if d == 0 || dim == 0 {
        return Err(SearchError::InvalidShape { d, dim });
    }
    let start = Instant::now();
    let (examined, candidates) = match mode {
        SearchMode::Exhaustive => exhaustive_candidates(field, d, dim)?,
        SearchMode::Random { budget, seed } => {
            (budget, random_candidates(field, d, dim, budget, seed))
        }
    };
    let signatures: Vec<Signature> = candidates.par_iter().map(Signature::of).collect();
    let mut seen = HashSet::new();
    let representatives: Vec<(LinearMap, Signature)> = candidates
        .iter()
        .zip(signatures)
        .filter(|(_, s)| seen.insert(s.clone()))
        .map(|(phi, s)| (phi.clone(), s))
        .collect();
    let results = representatives
        .into_par_iter()
        .map(|(linear_map, signature)| SearchResult {
            is_hom: is_algebra_homomorphism(&linear_map).passed(),
            is_characteristic: true,
            irreducibility: irreducibility(&linear_map),
            linear_map,
            signature,
        })
        .collect();
    Ok(SearchReport {
        results,
        stats: SearchStats {
            examined,
            characteristic: candidates.len() as u64,
            elapsed: start.elapsed(),
        },
    })
}
