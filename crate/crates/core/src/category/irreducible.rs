//! Irreducibility of the module `M = k^dim` under the operators `alpha_i`.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use std::fmt;

use super::generated::generated_algebra;
use crate::algebra::LinearMap;
use crate::field::{FieldKind, Scalar};
use crate::matrix::Matrix;
use crate::poly::Polynomial;
use crate::subspace::{spin_up, Subspace};

/// Exhaustive spin-up runs only when `M` has at most this many lines.
pub const EXHAUSTIVE_SPIN_UP_LIMIT: u64 = 100_000;

const HEURISTIC_SEED: u64 = 0x5eed_c0de;
const RANDOM_WORDS: usize = 16;
// Above this, divisor enumeration for rational roots is skipped.
const MAX_ROOT_THEOREM_CONSTANT: u64 = 1_000_000_000_000;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Certificate {
    /// The generated algebra has dimension `dim^2`, so it is all of `End_k(M)`.
    GeneratedDimension(usize),
    /// Every nonzero vector spins up to the whole space.
    ExhaustiveSpinUp,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum IrreducibilityVerdict {
    Irreducible(Certificate),
    /// A nonzero proper subspace invariant under every `alpha_i`.
    Reducible(Subspace),
    Unknown,
}

impl IrreducibilityVerdict {
    pub fn is_irreducible(&self) -> bool {
        matches!(self, IrreducibilityVerdict::Irreducible(_))
    }

    pub fn is_reducible(&self) -> bool {
        matches!(self, IrreducibilityVerdict::Reducible(_))
    }

    pub fn witness(&self) -> Option<&Subspace> {
        match self {
            IrreducibilityVerdict::Reducible(w) => Some(w),
            _ => None,
        }
    }

    /// `irreducible`, `reducible` or `unknown`.
    pub fn label(&self) -> &'static str {
        match self {
            IrreducibilityVerdict::Irreducible(_) => "irreducible",
            IrreducibilityVerdict::Reducible(_) => "reducible",
            IrreducibilityVerdict::Unknown => "unknown",
        }
    }
}

impl fmt::Display for IrreducibilityVerdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            IrreducibilityVerdict::Irreducible(Certificate::GeneratedDimension(n)) => {
                write!(f, "irreducible (generated algebra has dimension {n})")
            }
            IrreducibilityVerdict::Irreducible(Certificate::ExhaustiveSpinUp) => {
                write!(f, "irreducible (every vector spins up to M)")
            }
            IrreducibilityVerdict::Reducible(w) => {
                let vs: Vec<String> = w
                    .basis()
                    .iter()
                    .map(|v| {
                        let xs: Vec<String> = v.iter().map(Scalar::to_compact_string).collect();
                        format!("({})", xs.join(", "))
                    })
                    .collect();
                write!(
                    f,
                    "reducible (invariant subspace spanned by {})",
                    vs.join(", ")
                )
            }
            IrreducibilityVerdict::Unknown => write!(f, "unknown"),
        }
    }
}

/// Sufficient condition valid over any field: the `alpha_i` generate all of
/// `End_k(M)`.
pub fn burnside_certificate(phi: &LinearMap) -> Option<Certificate> {
    let n = generated_algebra(phi).dimension();
    (n == phi.dim() * phi.dim()).then_some(Certificate::GeneratedDimension(n))
}

/// Every line of `k^dim` over a prime field, each as its representative with
/// first nonzero coordinate 1. `None` when there are more than `limit`.
fn projective_points(p: u64, dim: usize, limit: u64) -> Option<Vec<Vec<u64>>> {
    let mut count: u64 = 0;
    let mut power: u64 = 1;
    for _ in 0..dim {
        count = count.checked_add(power)?;
        power = power.checked_mul(p)?;
        if count > limit {
            return None;
        }
    }
    let mut out = Vec::with_capacity(count as usize);
    for lead in 0..dim {
        let tail = dim - lead - 1;
        let total = p.pow(tail as u32);
        for mut n in 0..total {
            let mut v = vec![0; dim];
            v[lead] = 1;
            for slot in v[lead + 1..].iter_mut().rev() {
                *slot = n % p;
                n /= p;
            }
            out.push(v);
        }
    }
    Some(out)
}

/// Spins up every line of `M`. Only for prime fields with at most
/// [`EXHAUSTIVE_SPIN_UP_LIMIT`] lines; `None` otherwise.
pub fn exhaustive_spin_up(phi: &LinearMap) -> Option<IrreducibilityVerdict> {
    let FieldKind::Prime(p) = phi.field().kind() else {
        return None;
    };
    let field = phi.field();
    let points = projective_points(p, phi.dim(), EXHAUSTIVE_SPIN_UP_LIMIT)?;
    for point in points {
        let v: Vec<Scalar> = point.iter().map(|&x| field.int(x as i64)).collect();
        let seed = Subspace::span(field, phi.dim(), vec![v]).expect("vector has ambient length");
        let s = spin_up(&seed, phi.alphas()).expect("shapes agree");
        if !s.is_full() {
            return Some(IrreducibilityVerdict::Reducible(s));
        }
    }
    Some(IrreducibilityVerdict::Irreducible(
        Certificate::ExhaustiveSpinUp,
    ))
}

fn divisors(n: u64) -> Vec<u64> {
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut k = 1;
    while k * k <= n {
        if n.is_multiple_of(k) {
            small.push(k);
            if k * k != n {
                large.push(n / k);
            }
        }
        k += 1;
    }
    small.extend(large.into_iter().rev());
    small
}

/// Rational roots of a polynomial with rational coefficients.
fn rational_roots(coeffs: &[BigRational]) -> Vec<BigRational> {
    let mut roots = Vec::new();
    let lowest = coeffs.iter().position(|c| !c.is_zero());
    let Some(lowest) = lowest else {
        return roots;
    };
    if lowest > 0 {
        roots.push(BigRational::zero());
    }
    let coeffs = &coeffs[lowest..];
    if coeffs.len() < 2 {
        return roots;
    }
    let denom = coeffs
        .iter()
        .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
    let ints: Vec<BigInt> = coeffs.iter().map(|c| (c * &denom).to_integer()).collect();
    let (Some(a0), Some(an)) = (ints[0].abs().to_u64(), ints[ints.len() - 1].abs().to_u64()) else {
        return roots;
    };
    if a0 > MAX_ROOT_THEOREM_CONSTANT || an > MAX_ROOT_THEOREM_CONSTANT {
        return roots;
    }
    let eval = |x: &BigRational| {
        ints.iter().rev().fold(BigRational::zero(), |acc, c| {
            acc * x + BigRational::from_integer(c.clone())
        })
    };
    for u in divisors(a0) {
        for v in divisors(an) {
            if u.gcd(&v) != 1 {
                continue;
            }
            for sign in [1i64, -1] {
                let x = BigRational::new(BigInt::from(sign) * BigInt::from(u), BigInt::from(v));
                if eval(&x).is_zero() {
                    roots.push(x);
                }
            }
        }
    }
    roots
}

/// Roots of `p` in its field that this crate knows how to find: all of them
/// over small prime fields and over the rationals, the rational roots and
/// roots of unity over cyclotomic fields, plus whatever linear factor is left
/// after dividing out the roots found.
pub(crate) fn known_roots(p: &Polynomial) -> Vec<Scalar> {
    let field = p.field();
    let Some(degree) = p.degree() else {
        return Vec::new();
    };
    if degree == 0 {
        return Vec::new();
    }
    let mut candidates: Vec<Scalar> = Vec::new();
    match field.kind() {
        FieldKind::Prime(q) if q <= 1 << 16 => {
            candidates.extend((0..q).map(|x| field.int(x as i64)));
        }
        FieldKind::Prime(_) => {
            candidates.extend([field.zero(), field.one(), -field.one()]);
        }
        FieldKind::Rational | FieldKind::Cyclotomic(_) => {
            let rational: Option<Vec<BigRational>> =
                p.coeffs().iter().map(Scalar::to_rational).collect();
            if let Some(coeffs) = rational {
                candidates.extend(
                    rational_roots(&coeffs)
                        .into_iter()
                        .map(|r| field.rational(r).expect("rationals embed")),
                );
            }
            if let (FieldKind::Cyclotomic(m), Some(z)) = (field.kind(), field.generator()) {
                let mut power = field.one();
                for _ in 0..m {
                    candidates.push(power.clone());
                    candidates.push(-&power);
                    power = &power * &z;
                }
            }
        }
    }
    let mut roots: Vec<Scalar> = Vec::new();
    for c in candidates {
        if !roots.contains(&c) && p.eval(&c).is_zero() {
            roots.push(c);
        }
    }
    let mut rest = p.clone();
    for r in &roots {
        let lin = Polynomial::linear(r);
        while lin.divides(&rest) {
            rest = rest.div_rem(&lin).0;
        }
    }
    if rest.degree() == Some(1) {
        let root = -&(&rest.coeff(0) / &rest.coeff(1));
        if !roots.contains(&root) {
            roots.push(root);
        }
    }
    roots
}

/// Eigenvectors of `w` for eigenvalues in the field, spun up under the
/// generators; the first proper invariant subspace found, if any.
fn eigen_spin_up(w: &Matrix, generators: &[Matrix]) -> Option<Subspace> {
    let field = w.field();
    let id = Matrix::identity(field, w.dim());
    for lambda in known_roots(&w.min_poly()) {
        let eigenspace = (w - &id.scale(&lambda)).kernel();
        for v in eigenspace.basis() {
            let seed =
                Subspace::span(field, w.dim(), vec![v.clone()]).expect("vector has ambient length");
            let s = spin_up(&seed, generators).expect("shapes agree");
            if s.is_proper_nonzero() {
                return Some(s);
            }
        }
    }
    None
}

/// Looks for a proper invariant subspace by spinning up eigenvectors of the
/// `alpha_i`, of their pairwise products and commutators, and of seeded
/// random combinations of those words. Finding nothing proves nothing.
pub fn find_invariant_subspace(phi: &LinearMap) -> Option<Subspace> {
    let field = phi.field();
    let gens = phi.alphas();
    let mut words: Vec<Matrix> = gens.to_vec();
    for a in gens {
        for b in gens {
            words.push(a * b);
        }
    }
    for (i, a) in gens.iter().enumerate() {
        for b in &gens[i + 1..] {
            words.push(&(a * b) - &(b * a));
        }
    }
    for w in &words {
        if let Some(s) = eigen_spin_up(w, gens) {
            return Some(s);
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(HEURISTIC_SEED);
    for _ in 0..RANDOM_WORDS {
        let w = words.iter().fold(Matrix::zero(field, phi.dim()), |acc, m| {
            let c = field.int(rng.gen_range(-3..=3));
            &acc + &m.scale(&c)
        });
        if let Some(s) = eigen_spin_up(&w, gens) {
            return Some(s);
        }
    }
    None
}

/// Decides irreducibility of `M` where the available tools allow: the
/// generated-algebra criterion, then heuristic invariant subspaces, then
/// exhaustive spin-up over small prime fields. Over infinite fields an
/// irreducible module whose generated algebra is smaller than `End_k(M)`
/// yields `Unknown`.
pub fn irreducibility(phi: &LinearMap) -> IrreducibilityVerdict {
    if let Some(cert) = burnside_certificate(phi) {
        return IrreducibilityVerdict::Irreducible(cert);
    }
    if let Some(w) = find_invariant_subspace(phi) {
        return IrreducibilityVerdict::Reducible(w);
    }
    exhaustive_spin_up(phi).unwrap_or(IrreducibilityVerdict::Unknown)
}

/// The maps induced on an invariant subspace `W` and on `M / W`.
///
/// In a basis of `W` extended by standard vectors, each `alpha_i` is block
/// upper triangular; the diagonal blocks are the two factors. `None` unless
/// `W` is nonzero, proper and invariant.
pub fn extension_factors(phi: &LinearMap, witness: &Subspace) -> Option<(LinearMap, LinearMap)> {
    let (field, dim) = (phi.field(), phi.dim());
    if witness.ambient_dim() != dim
        || !witness.is_proper_nonzero()
        || !witness.is_invariant_under(phi.alphas())
    {
        return None;
    }
    let mut columns: Vec<Vec<Scalar>> = witness.basis().to_vec();
    for j in 0..dim {
        let mut e = vec![field.zero(); dim];
        e[j] = field.one();
        let candidate = Subspace::span(
            field,
            dim,
            columns.iter().cloned().chain([e.clone()]).collect(),
        )
        .expect("vectors have ambient length");
        if candidate.dim() > columns.len() {
            columns.push(e);
        }
    }
    let p = Matrix::from_fn(field, dim, |i, j| columns[j][i].clone());
    let p_inv = p.inverse().expect("columns form a basis");
    let k = witness.dim();
    let blocks: Vec<Matrix> = phi
        .alphas()
        .iter()
        .map(|a| a.conjugate(&p_inv, &p))
        .collect();
    let sub = blocks
        .iter()
        .map(|b| Matrix::from_fn(field, k, |i, j| b.get(i, j).clone()))
        .collect();
    let quotient = blocks
        .iter()
        .map(|b| Matrix::from_fn(field, dim - k, |i, j| b.get(k + i, k + j).clone()))
        .collect();
    Some((
        LinearMap::new(field, sub).expect("valid shapes"),
        LinearMap::new(field, quotient).expect("valid shapes"),
    ))
}
