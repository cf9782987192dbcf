//! Independent reimplementations checked against the library.

mod common;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use std::collections::BTreeMap;

use charmorph::category::{
    burnside_certificate, exhaustive_spin_up, fixtures, generated_algebra, search, Certificate,
    IrreducibilityVerdict, SearchMode,
};
use charmorph::checks::{
    characteristic_check, minimal_characteristic_check, nc_residuals, roots_of_unity_check,
    set_partitions, NcMode, RootsMode,
};
use charmorph::{AlgebraElement, LinearMap, Matrix, Polynomial, Scalar};
use common::{conjugated_extension, conjugated_hom, cyc, gf, q, random_map, unital_map};

/// Determinant by Gaussian elimination with row swaps.
fn det(m: &Matrix) -> Scalar {
    let n = m.dim();
    let mut rows: Vec<Vec<Scalar>> = m.rows().map(<[Scalar]>::to_vec).collect();
    let mut acc = m.field().one();
    for c in 0..n {
        let Some(p) = (c..n).find(|&r| !rows[r][c].is_zero()) else {
            return m.field().zero();
        };
        if p != c {
            rows.swap(p, c);
            acc = -acc;
        }
        let pivot = rows[c][c].clone();
        acc = &acc * &pivot;
        let (top, below) = rows.split_at_mut(c + 1);
        for row in below {
            let f = &row[c] / &pivot;
            for (x, y) in row[c..].iter_mut().zip(&top[c][c..]) {
                *x = &*x - &(&f * y);
            }
        }
    }
    acc
}

#[test]
fn char_poly_matches_determinant_at_points() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for field in [q(), cyc(3), gf(11)] {
        for _ in 0..30 {
            let dim = rng.gen_range(1..=5);
            let m = common::matrix(field, dim, &mut rng);
            let chi = m.char_poly();
            assert_eq!(chi.degree(), Some(dim));
            for t in 0..4 {
                let t = field.int(t);
                let shifted = &Matrix::identity(field, dim).scale(&t) - &m;
                assert_eq!(chi.eval(&t), det(&shifted), "{field}");
            }
        }
    }
}

/// `chi_a(phi(a))` evaluated directly, with `chi_a = prod (t - a_i)`.
fn chi_at(phi: &LinearMap, a: &AlgebraElement) -> Matrix {
    a.char_poly().eval_matrix(&phi.apply(a).unwrap())
}

#[test]
fn characteristic_check_agrees_with_pointwise_evaluation() {
    let mut rng = ChaCha8Rng::seed_from_u64(12);
    for _ in 0..60 {
        let (d, dim) = (rng.gen_range(1..=3), rng.gen_range(1..=3));
        let phi = match rng.gen_range(0..3) {
            0 => conjugated_hom(q(), d, dim, &mut rng),
            1 if d >= 2 && dim >= 2 => conjugated_extension(q(), d, dim, &mut rng),
            _ => random_map(q(), d, dim, &mut rng),
        };
        let expanded = characteristic_check(&phi).passed();
        // A failing identity has degree d in a, so it cannot vanish at 40
        // random points except by a very unlikely accident.
        let pointwise = (0..40).all(|_| {
            let a = AlgebraElement::new(
                q(),
                (0..d).map(|_| q().int(rng.gen_range(-6..=6))).collect(),
            )
            .unwrap();
            chi_at(&phi, &a).is_zero()
        });
        assert_eq!(expanded, pointwise);
    }
}

#[test]
fn minimal_characteristic_agrees_with_strata_evaluation() {
    let mut rng = ChaCha8Rng::seed_from_u64(13);
    for _ in 0..40 {
        let (d, dim) = (rng.gen_range(1..=3), rng.gen_range(1..=3));
        let phi = match rng.gen_range(0..3) {
            0 => conjugated_hom(q(), d, dim, &mut rng),
            1 if d >= 2 && dim >= 2 => conjugated_extension(q(), d, dim, &mut rng),
            _ => unital_map(q(), d, dim, &mut rng),
        };
        let expanded = minimal_characteristic_check(&phi).passed();
        let mut pointwise = true;
        for partition in set_partitions(d) {
            for _ in 0..15 {
                let values: Vec<i64> = loop {
                    let v: Vec<i64> = partition.iter().map(|_| rng.gen_range(-8..=8)).collect();
                    let mut s = v.clone();
                    s.sort();
                    s.dedup();
                    if s.len() == v.len() {
                        break v;
                    }
                };
                let mut coords = vec![q().zero(); d];
                for (block, v) in partition.iter().zip(&values) {
                    for &i in block {
                        coords[i] = q().int(*v);
                    }
                }
                let a = AlgebraElement::new(q(), coords).unwrap();
                let mu = a.min_poly();
                pointwise &= mu.eval_matrix(&phi.apply(&a).unwrap()).is_zero();
            }
        }
        assert_eq!(expanded, pointwise);
    }
}

/// Expands `sum_sigma (T - x_sigma(1)) ... (T - x_sigma(d))` as a
/// noncommutative polynomial, word by word.
fn nc_expansion(phi: &LinearMap) -> BTreeMap<Vec<usize>, Matrix> {
    let (field, dim, d) = (phi.field(), phi.dim(), phi.d());
    let id = Matrix::identity(field, dim);
    let mut perms: Vec<Vec<usize>> = vec![vec![]];
    for _ in 0..d {
        perms = perms
            .into_iter()
            .flat_map(|p| {
                (0..d)
                    .filter(|i| !p.contains(i))
                    .map(|i| {
                        let mut q = p.clone();
                        q.push(i);
                        q
                    })
                    .collect::<Vec<_>>()
            })
            .collect();
    }
    let mut total: BTreeMap<Vec<usize>, Matrix> = BTreeMap::new();
    for sigma in perms {
        let mut poly: BTreeMap<Vec<usize>, Matrix> = BTreeMap::from([(vec![], id.clone())]);
        for &s in &sigma {
            let mut next: BTreeMap<Vec<usize>, Matrix> = BTreeMap::new();
            for (word, coeff) in &poly {
                for j in 0..d {
                    let factor = if j == s {
                        phi.alpha(j) - &id
                    } else {
                        phi.alpha(j).clone()
                    };
                    let mut w = word.clone();
                    w.push(j);
                    let term = coeff * &factor;
                    let entry = next.entry(w).or_insert_with(|| Matrix::zero(field, dim));
                    *entry = &*entry + &term;
                }
            }
            poly = next;
        }
        for (w, c) in poly {
            let entry = total.entry(w).or_insert_with(|| Matrix::zero(field, dim));
            *entry = &*entry + &c;
        }
    }
    total
}

#[test]
fn nc_residuals_match_word_expansion() {
    let mut rng = ChaCha8Rng::seed_from_u64(14);
    for field in [q(), gf(5), cyc(4)] {
        for _ in 0..10 {
            let (d, dim) = (rng.gen_range(1..=3), rng.gen_range(1..=3));
            let phi = random_map(field, d, dim, &mut rng);
            let expected: Vec<(Vec<usize>, Matrix)> = nc_expansion(&phi).into_iter().collect();
            assert_eq!(nc_residuals(&phi, NcMode::Fast).unwrap(), expected);
        }
    }
}

#[test]
fn roots_check_agrees_with_direct_torsion_images() {
    let mut rng = ChaCha8Rng::seed_from_u64(15);
    for n in [3u32, 4, 6] {
        let field = cyc(n);
        let zeta = field.primitive_root_of_unity(n as u64).unwrap();
        for _ in 0..12 {
            let (d, dim) = (rng.gen_range(2..=3), rng.gen_range(1..=2));
            let phi = match rng.gen_range(0..2) {
                0 => conjugated_hom(field, d, dim, &mut rng),
                _ => unital_map(field, d, dim, &mut rng),
            };
            let mut all_torsion = true;
            let total = (n as usize).pow(d as u32);
            for k in 0..total {
                let mut coords = Vec::new();
                let mut rest = k;
                for _ in 0..d {
                    coords.push(zeta.pow((rest % n as usize) as u64));
                    rest /= n as usize;
                }
                let image = phi
                    .apply(&AlgebraElement::new(field, coords).unwrap())
                    .unwrap();
                let mut power = Matrix::identity(field, dim);
                for _ in 0..n {
                    power = &power * &image;
                }
                all_torsion &= power.is_identity();
            }
            let report = roots_of_unity_check(&phi, n as u64, RootsMode::Full).unwrap();
            assert_eq!(report.passed(), all_torsion, "{field}");
        }
    }
}

#[test]
fn generated_algebra_matches_span_of_all_short_words() {
    let mut rng = ChaCha8Rng::seed_from_u64(16);
    for field in [q(), gf(3)] {
        for _ in 0..15 {
            let (d, dim) = (rng.gen_range(1..=2), rng.gen_range(1..=2));
            let phi = match rng.gen_range(0..3) {
                0 => conjugated_hom(field, d, dim, &mut rng),
                _ => random_map(field, d, dim, &mut rng),
            };
            // every word of length <= dim^2 spans the algebra
            let mut words = vec![Matrix::identity(field, dim)];
            let mut layer = words.clone();
            for _ in 0..dim * dim {
                layer = layer
                    .iter()
                    .flat_map(|w| phi.alphas().iter().map(move |a| w * a))
                    .collect();
                words.extend(layer.iter().cloned());
            }
            let rows: Vec<Vec<Scalar>> = words.iter().map(|w| w.entries().to_vec()).collect();
            let span = charmorph::Subspace::span(field, dim * dim, rows).unwrap();
            assert_eq!(generated_algebra(&phi).dimension(), span.dim());
        }
    }
}

#[test]
fn scalar_search_matches_brute_force() {
    let f = gf(3);
    let mut expected = Vec::new();
    for a1 in 0..3 {
        for a2 in 0..3 {
            let (x, y) = (f.int(a1), f.int(a2));
            let one = f.one();
            let c11 = &x * &(&x - &one);
            let c22 = &y * &(&y - &one);
            let c12 = &(&(&x - &one) * &(&y - &one)) + &(&x * &y);
            if c11.is_zero() && c22.is_zero() && c12.is_zero() {
                expected.push((a1 as u64, a2 as u64));
            }
        }
    }
    let got: Vec<(u64, u64)> = search(f, 2, 1, SearchMode::Exhaustive)
        .unwrap()
        .results
        .iter()
        .map(|r| {
            let a = r.linear_map.alphas();
            (
                a[0].get(0, 0).residue().unwrap(),
                a[1].get(0, 0).residue().unwrap(),
            )
        })
        .collect();
    assert_eq!(got, expected);
}

#[test]
fn search_outputs_reverify_and_spin_up_agrees_with_burnside() {
    for dim in 1..=2 {
        for r in search(gf(3), 2, dim, SearchMode::Exhaustive)
            .unwrap()
            .results
        {
            let phi = &r.linear_map;
            assert!(characteristic_check(phi).passed());
            assert!(r.is_characteristic);
            let exhaustive = exhaustive_spin_up(phi).unwrap();
            if burnside_certificate(phi).is_some() {
                assert_eq!(
                    exhaustive,
                    IrreducibilityVerdict::Irreducible(Certificate::ExhaustiveSpinUp)
                );
            }
            assert_eq!(
                exhaustive.is_irreducible(),
                r.irreducibility.is_irreducible()
            );
            if let Some(w) = r.irreducibility.witness() {
                assert!(w.is_proper_nonzero() && w.is_invariant_under(phi.alphas()));
            }
        }
    }
}

#[test]
fn example_matrices_verbatim() {
    let half = |x: i64| &q().int(x) / &q().int(2);
    let ex2 = fixtures::example2(q()).unwrap();
    let rows = [
        [[0, 1, 1], [0, 1, -1], [0, -1, 1]],
        [[1, 0, -1], [1, 0, 1], [-1, 0, 1]],
        [[1, -1, 0], [-1, 1, 0], [1, 1, 0]],
    ];
    for (i, m) in rows.iter().enumerate() {
        for (r, row) in m.iter().enumerate() {
            for (c, &x) in row.iter().enumerate() {
                assert_eq!(ex2.alpha(i).get(r, c), &half(x));
            }
        }
    }
    let p = Polynomial::from_roots(q(), &[q().zero(), q().one()]);
    // alpha_1 of Example 1 is idempotent: t(t - 1) annihilates it
    let ex1 = fixtures::example1(q(), &q().int(4), &q().int(-3)).unwrap();
    assert!(p.eval_matrix(ex1.alpha(0)).is_zero());
    assert_eq!(ex1.alpha(0).get(0, 1), &q().int(4));
    assert_eq!(ex1.alpha(1).get(0, 1), &q().int(-3));
}
