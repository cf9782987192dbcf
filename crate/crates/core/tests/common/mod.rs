//! Random samples shared by the integration tests.
#![allow(dead_code)]

use rand::Rng;

use charmorph::category::fixtures;
use charmorph::{FieldDescriptor, FieldKind, LinearMap, Matrix, Scalar};

pub fn q() -> FieldDescriptor {
    FieldDescriptor::RATIONAL
}

pub fn gf(p: u64) -> FieldDescriptor {
    FieldDescriptor::prime(p).unwrap()
}

pub fn cyc(n: u32) -> FieldDescriptor {
    FieldDescriptor::cyclotomic(n).unwrap()
}

/// Small entries: uniform residues mod p, `c / q` with `|c| <= 3` and
/// `q <= 2` over Q, and `c_0 + c_1 z` with `|c_i| <= 2` over cyclotomic fields.
pub fn scalar(field: FieldDescriptor, rng: &mut impl Rng) -> Scalar {
    match field.kind() {
        FieldKind::Prime(p) => field.int(rng.gen_range(0..p) as i64),
        FieldKind::Rational => {
            let den = field.int(rng.gen_range(1..=2));
            &field.int(rng.gen_range(-3..=3)) / &den
        }
        FieldKind::Cyclotomic(_) => {
            let z = field.generator().unwrap();
            &field.int(rng.gen_range(-2..=2)) + &(&z * &field.int(rng.gen_range(-2..=2)))
        }
    }
}

pub fn matrix(field: FieldDescriptor, dim: usize, rng: &mut impl Rng) -> Matrix {
    Matrix::from_fn(field, dim, |_, _| scalar(field, rng))
}

/// A random invertible matrix and its inverse.
pub fn invertible(field: FieldDescriptor, dim: usize, rng: &mut impl Rng) -> (Matrix, Matrix) {
    loop {
        let p = matrix(field, dim, rng);
        if let Some(inv) = p.inverse() {
            return (p, inv);
        }
    }
}

pub fn random_map(field: FieldDescriptor, d: usize, dim: usize, rng: &mut impl Rng) -> LinearMap {
    LinearMap::new(field, (0..d).map(|_| matrix(field, dim, rng)).collect()).unwrap()
}

/// `diag_hom` with random block sizes (possibly zero), conjugated by a random
/// invertible matrix.
pub fn conjugated_hom(
    field: FieldDescriptor,
    d: usize,
    dim: usize,
    rng: &mut impl Rng,
) -> LinearMap {
    let mut mult = vec![0; d];
    for _ in 0..dim {
        mult[rng.gen_range(0..d)] += 1;
    }
    let (p, p_inv) = invertible(field, dim, rng);
    fixtures::diag_hom(field, &mult)
        .unwrap()
        .conjugate(&p, &p_inv)
}

/// `sum alpha_i = id` but otherwise random.
pub fn unital_map(field: FieldDescriptor, d: usize, dim: usize, rng: &mut impl Rng) -> LinearMap {
    let mut alphas: Vec<Matrix> = (1..d).map(|_| matrix(field, dim, rng)).collect();
    let rest = alphas
        .iter()
        .fold(Matrix::identity(field, dim), |acc, a| &acc - a);
    alphas.push(rest);
    LinearMap::new(field, alphas).unwrap()
}

/// Example 1 with random `a, b` on the first two coordinates, direct sum a
/// diagonal homomorphism on the rest, conjugated: characteristic, never a
/// homomorphism. Needs `d >= 2` and `dim >= 2`.
pub fn conjugated_extension(
    field: FieldDescriptor,
    d: usize,
    dim: usize,
    rng: &mut impl Rng,
) -> LinearMap {
    let (a, b) = loop {
        let (a, b) = (scalar(field, rng), scalar(field, rng));
        if !(&a + &b).is_zero() {
            break (a, b);
        }
    };
    let ex = fixtures::example1(field, &a, &b).unwrap();
    let mut mult = vec![0; d];
    for _ in 2..dim {
        mult[rng.gen_range(0..d)] += 1;
    }
    let tail = (dim > 2).then(|| fixtures::diag_hom(field, &mult).unwrap());
    let alphas = (0..d)
        .map(|i| {
            Matrix::from_fn(field, dim, |r, c| match (r < 2, c < 2) {
                (true, true) if i < 2 => ex.alpha(i).get(r, c).clone(),
                (false, false) => tail.as_ref().unwrap().alpha(i).get(r - 2, c - 2).clone(),
                _ => field.zero(),
            })
        })
        .collect();
    let (p, p_inv) = invertible(field, dim, rng);
    LinearMap::new(field, alphas).unwrap().conjugate(&p, &p_inv)
}
