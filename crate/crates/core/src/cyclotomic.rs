//! Cyclotomic polynomials and dense polynomial helpers over `Q`.
//!
//! Elements of `Q(zeta_n)` are stored as rational coefficient vectors
//! (lowest degree first) reduced modulo `Phi_n`. The helpers here operate on
//! those raw vectors; `Scalar` wraps them with a field descriptor.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};
use std::collections::HashMap;
use std::sync::{Arc, OnceLock, RwLock};

use crate::field::FieldDescriptor;
use crate::poly::Polynomial;

pub(crate) type RatPoly = Vec<BigRational>;

static PHI_CACHE: OnceLock<RwLock<HashMap<u32, Arc<Vec<BigInt>>>>> = OnceLock::new();

/// Returns the `n`-th cyclotomic polynomial `Phi_n(z)` over `Q`.
///
/// Computed once per `n` by exact division of `z^n - 1` by `Phi_m` for
/// every proper divisor `m` of `n`, then cached for the process lifetime.
///
/// # Panics
///
/// Panics if `n == 0`.
pub fn cyclotomic_polynomial(n: u32) -> Polynomial {
    assert!(n >= 1, "cyclotomic order must be positive");
    let coeffs = phi_coeffs(n)
        .iter()
        .map(|c| FieldDescriptor::RATIONAL.integer(c.clone()))
        .collect();
    Polynomial::new(FieldDescriptor::RATIONAL, coeffs)
}

/// Integer coefficients of `Phi_n`, lowest degree first.
pub(crate) fn phi_coeffs(n: u32) -> Arc<Vec<BigInt>> {
    let cache = PHI_CACHE.get_or_init(Default::default);
    if let Some(found) = cache.read().expect("phi cache poisoned").get(&n) {
        return Arc::clone(found);
    }
    // Computed outside the lock: the recursion re-enters the cache for divisors.
    let computed = Arc::new(compute_phi(n));
    let mut guard = cache.write().expect("phi cache poisoned");
    Arc::clone(guard.entry(n).or_insert(computed))
}

fn compute_phi(n: u32) -> Vec<BigInt> {
    let mut acc = vec![BigInt::zero(); n as usize + 1];
    acc[0] = -BigInt::one();
    acc[n as usize] = BigInt::one();
    for m in (1..n).filter(|m| n.is_multiple_of(*m)) {
        acc = exact_div_monic(&acc, &phi_coeffs(m));
    }
    acc
}

fn exact_div_monic(num: &[BigInt], den: &[BigInt]) -> Vec<BigInt> {
    let dd = den.len() - 1;
    debug_assert!(den[dd].is_one());
    let mut rem = num.to_vec();
    let qlen = num.len() - dd;
    let mut quot = vec![BigInt::zero(); qlen];
    for k in (0..qlen).rev() {
        let c = rem[k + dd].clone();
        if c.is_zero() {
            continue;
        }
        for (j, dj) in den.iter().enumerate() {
            rem[k + j] -= &c * dj;
        }
        quot[k] = c;
    }
    debug_assert!(rem.iter().all(Zero::is_zero), "inexact cyclotomic division");
    quot
}

pub(crate) fn trim(p: &mut RatPoly) {
    while p.last().is_some_and(Zero::is_zero) {
        p.pop();
    }
}

pub(crate) fn add(a: &[BigRational], b: &[BigRational]) -> RatPoly {
    let (long, short) = if a.len() >= b.len() { (a, b) } else { (b, a) };
    let mut out = long.to_vec();
    for (o, s) in out.iter_mut().zip(short) {
        *o += s;
    }
    trim(&mut out);
    out
}

pub(crate) fn neg(a: &[BigRational]) -> RatPoly {
    a.iter().map(|c| -c).collect()
}

pub(crate) fn sub(a: &[BigRational], b: &[BigRational]) -> RatPoly {
    let mut out = a.to_vec();
    if out.len() < b.len() {
        out.resize(b.len(), BigRational::zero());
    }
    for (o, s) in out.iter_mut().zip(b) {
        *o -= s;
    }
    trim(&mut out);
    out
}

pub(crate) fn mul(a: &[BigRational], b: &[BigRational]) -> RatPoly {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![BigRational::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    trim(&mut out);
    out
}

/// `a * b` reduced modulo the monic integer polynomial `modulus`, computed
/// on integer numerators over a common denominator so that only the final
/// coefficients are normalized.
pub(crate) fn mul_mod(a: &[BigRational], b: &[BigRational], modulus: &[BigInt]) -> RatPoly {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let (na, da) = integral(a);
    let (nb, db) = integral(b);
    let mut out = vec![BigInt::zero(); na.len() + nb.len() - 1];
    add_int_product(&mut out, &na, &nb);
    from_integral(reduce_int(out, modulus), &(da * db))
}

/// Integer numerators and their common denominator.
pub(crate) fn integral(a: &[BigRational]) -> (Vec<BigInt>, BigInt) {
    let den = a.iter().fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
    let nums = a.iter().map(|c| c.numer() * (&den / c.denom())).collect();
    (nums, den)
}

/// `acc += a * b` for integer polynomials; `acc` must be long enough.
pub(crate) fn add_int_product(acc: &mut [BigInt], a: &[BigInt], b: &[BigInt]) {
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            if !y.is_zero() {
                acc[i + j] += x * y;
            }
        }
    }
}

/// Reduces an integer polynomial modulo the monic integer polynomial `modulus`.
pub(crate) fn reduce_int(mut a: Vec<BigInt>, modulus: &[BigInt]) -> Vec<BigInt> {
    let dm = modulus.len() - 1;
    while a.len() > dm {
        let c = a.pop().expect("nonempty");
        if !c.is_zero() {
            let shift = a.len() - dm;
            for (j, mj) in modulus.iter().enumerate().take(dm) {
                if !mj.is_zero() {
                    a[shift + j] -= &c * mj;
                }
            }
        }
    }
    a
}

pub(crate) fn from_integral(nums: Vec<BigInt>, den: &BigInt) -> RatPoly {
    let mut res: RatPoly = nums
        .into_iter()
        .map(|c| BigRational::new(c, den.clone()))
        .collect();
    trim(&mut res);
    res
}

/// Reduces `a` modulo the monic integer polynomial `modulus`.
pub(crate) fn reduce(mut a: RatPoly, modulus: &[BigInt]) -> RatPoly {
    let dm = modulus.len() - 1;
    while a.len() > dm {
        let top = a.len() - 1;
        let c = a.pop().expect("nonempty");
        if !c.is_zero() {
            let shift = top - dm;
            for (j, mj) in modulus.iter().enumerate().take(dm) {
                if !mj.is_zero() {
                    a[shift + j] -= &c * mj;
                }
            }
        }
    }
    trim(&mut a);
    a
}

/// Long division of `a` by nonzero `b`.
pub(crate) fn div_rem(a: &[BigRational], b: &[BigRational]) -> (RatPoly, RatPoly) {
    assert!(!b.is_empty(), "polynomial division by zero");
    let db = b.len() - 1;
    let mut rem = a.to_vec();
    trim(&mut rem);
    if rem.len() <= db {
        return (Vec::new(), rem);
    }
    let lead_inv = b[db].recip();
    let mut quot = vec![BigRational::zero(); rem.len() - db];
    for k in (0..quot.len()).rev() {
        let c = &rem[k + db] * &lead_inv;
        if c.is_zero() {
            continue;
        }
        for (j, bj) in b.iter().enumerate() {
            rem[k + j] -= &c * bj;
        }
        quot[k] = c;
    }
    trim(&mut quot);
    rem.truncate(db);
    trim(&mut rem);
    (quot, rem)
}

/// Inverse of a nonzero residue `a` modulo the irreducible `modulus`.
pub(crate) fn inverse_mod(a: &[BigRational], modulus: &[BigInt]) -> RatPoly {
    let m: RatPoly = modulus
        .iter()
        .map(|c| BigRational::from_integer(c.clone()))
        .collect();
    let (mut r0, mut r1) = (m, a.to_vec());
    let (mut s0, mut s1): (RatPoly, RatPoly) = (Vec::new(), vec![BigRational::one()]);
    while !r1.is_empty() {
        let (q, r) = div_rem(&r0, &r1);
        let s2 = sub(&s0, &mul(&q, &s1));
        r0 = std::mem::replace(&mut r1, r);
        s0 = std::mem::replace(&mut s1, s2);
    }
    // r0 is a nonzero constant because the modulus is irreducible.
    debug_assert_eq!(r0.len(), 1);
    let c_inv = r0[0].recip();
    let scaled: RatPoly = s0.iter().map(|c| c * &c_inv).collect();
    reduce(scaled, modulus)
}
