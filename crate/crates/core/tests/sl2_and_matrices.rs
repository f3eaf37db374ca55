use liegen_core::matrix_checks::{
    compression_check, embedding_regularity, expm, flow, q_form, short_root_block, symp_identities,
    ClassicalFamily, SympSetup,
};
use liegen_core::sl2::{
    build_irrep, default_sample_count, exterior_rep, exterior_weight, grassmann_degree,
    transition_samples, winding_number, ClutchSamples,
};
use nalgebra::{DMatrix, DVector};
use num_complex::Complex64;
use proptest::prelude::*;

#[test]
fn clutching_degree_equals_highest_weight() {
    for n in 1..=12 {
        let rep = build_irrep(n).unwrap();
        let m = default_sample_count(n);
        let s = transition_samples(&rep, m).unwrap();
        assert_eq!(winding_number(&s).unwrap(), n as i64);
        assert!(s.max_deviation < 1e-9);
        let doubled = transition_samples(&rep, 2 * m).unwrap();
        assert_eq!(winding_number(&doubled).unwrap(), n as i64);
    }
}

#[test]
fn exterior_powers_up_to_six() {
    for n in 1..=6 {
        for k in 1..=n {
            let rep = exterior_rep(n, k).unwrap();
            let weight = (k * (n - k + 1)) as i64;
            assert_eq!(exterior_weight(n, k).unwrap(), weight);
            assert_eq!(rep.cyclic_span().unwrap().dim as i64, weight + 1);
            assert_eq!(
                rep.induced_irrep().unwrap(),
                build_irrep(weight as usize).unwrap()
            );
            assert_eq!(grassmann_degree(n, k).unwrap(), weight);
        }
    }
}

#[test]
fn exterior_dimension_is_binomial() {
    let binom = |n: usize, k: usize| (0..k).fold(1usize, |acc, i| acc * (n - i) / (i + 1));
    for n in 1..=7 {
        for k in 1..=n {
            assert_eq!(exterior_rep(n, k).unwrap().dim(), binom(n + 1, k));
        }
    }
}

#[test]
fn closed_form_flow_matches_matrix_exponential() {
    for l in 1..=8 {
        let x = SympSetup::new(l).unwrap().x.map(|v| v as f64);
        let v = DVector::from_fn(2 * l, |i, _| (i as f64 + 1.0).sin());
        for t in [-2.0, -1.0, -0.3, 0.0, 0.5, 1.0, 2.0] {
            let exact = expm(&(&x * t)) * &v;
            let err = (exact - flow(t, &v)).amax();
            assert!(err < 1e-9, "l = {l}, t = {t}: {err}");
        }
    }
}

#[test]
fn closed_form_flow_matrix_matches_matrix_exponential() {
    for l in 1..=8 {
        let x = SympSetup::new(l).unwrap().x.map(|v| v as f64);
        let id = DMatrix::<f64>::identity(2 * l, 2 * l);
        for t in [-2.0f64, -1.0, 0.0, 1.0, 2.0] {
            let closed = &id * t.cosh() + &x * t.sinh();
            let err = (expm(&(&x * t)) - closed).amax();
            assert!(err < 1e-9, "l = {l}, t = {t}: {err}");
        }
    }
}

#[test]
fn integer_identities_up_to_sixteen() {
    for l in 1..=16 {
        symp_identities(l).unwrap();
        for i in 1..=l {
            for j in (1..=l).filter(|&j| j != i) {
                short_root_block(l, i, j).unwrap();
            }
        }
    }
}

#[test]
fn compression_examples() {
    let strict = compression_check(2, 500, &[1.0], 0).unwrap();
    assert!(strict.passes);
    let iso = compression_check(3, 100, &[0.5, 1.0, 2.0], 1).unwrap();
    assert!(iso.max_isometry_error < 1e-9);
    assert!(iso.passes);
}

#[test]
fn block_group_elements_preserve_q() {
    // g = diag(g0, g0^{-T}) satisfies g^T [Q] g = [Q].
    let g0 = DMatrix::from_row_slice(3, 3, &[2.0, 1.0, 0.0, 0.5, 1.0, -1.0, 0.0, 0.3, 1.5]);
    assert!(g0.determinant() > 0.0);
    let inv_t = g0.clone().try_inverse().unwrap().transpose();
    let mut g = DMatrix::zeros(6, 6);
    g.view_mut((0, 0), (3, 3)).copy_from(&g0);
    g.view_mut((3, 3), (3, 3)).copy_from(&inv_t);
    let q = SympSetup::new(3).unwrap().q.map(|v| v as f64);
    assert!((g.transpose() * &q * &g - &q).amax() < 1e-12);
}

#[test]
fn q_along_the_flow_has_closed_form() {
    // Q(exp(tX) v) = cosh(2t) Q(v) + sinh(2t) |v|^2.
    let v = DVector::from_vec(vec![0.3, -1.2, 0.7, 0.4]);
    for t in [-1.5f64, -0.2, 0.0, 0.9, 2.0] {
        let expected = (2.0 * t).cosh() * q_form(&v) + (2.0 * t).sinh() * v.norm_squared();
        assert!((q_form(&flow(t, &v)) - expected).abs() < 1e-12);
    }
}

#[test]
fn natural_cartan_elements_are_regular() {
    for family in [ClassicalFamily::B, ClassicalFamily::C, ClassicalFamily::D] {
        for l in 1..=10 {
            let lambdas: Vec<f64> = (1..=l).map(|i| i as f64).collect();
            let r = embedding_regularity(family, l, &lambdas).unwrap();
            assert!(r.regular);
            let extra = usize::from(family == ClassicalFamily::B);
            assert_eq!(r.size, 2 * l + extra);
        }
    }
}

#[test]
fn expm_of_block_element_is_block_exponential() {
    let a = DMatrix::from_row_slice(2, 2, &[0.1, 0.4, -0.3, 0.2]);
    let mut y = DMatrix::zeros(4, 4);
    y.view_mut((0, 0), (2, 2)).copy_from(&a);
    y.view_mut((2, 2), (2, 2)).copy_from(&(-a.transpose()));
    let e = expm(&y);
    let top = expm(&a);
    let bottom = expm(&(-a.transpose()));
    assert!((e.view((0, 0), (2, 2)) - top).amax() < 1e-12);
    assert!((e.view((2, 2), (2, 2)) - bottom).amax() < 1e-12);
    assert!(e.view((0, 2), (2, 2)).amax() < 1e-15);
}

proptest! {
    #[test]
    fn synthetic_loops_wind_by_their_degree(d in -20i64..=20, extra in 0usize..200, phase in 0.0f64..6.0) {
        let m = 8 * d.unsigned_abs() as usize + 8 + extra;
        let points = (0..m)
            .map(|k| {
                let theta = std::f64::consts::TAU * k as f64 / m as f64;
                Complex64::from_polar(2.0, d as f64 * theta + phase)
            })
            .collect();
        prop_assert_eq!(winding_number(&ClutchSamples::from_points(points)).unwrap(), d);
    }

    #[test]
    fn winding_is_additive_under_products(d1 in -6i64..=6, d2 in -6i64..=6) {
        let m = 256;
        let sample = |d: i64| -> Vec<Complex64> {
            (0..m)
                .map(|k| Complex64::from_polar(1.0, d as f64 * std::f64::consts::TAU * k as f64 / m as f64))
                .collect()
        };
        let product: Vec<Complex64> = sample(d1).iter().zip(sample(d2)).map(|(a, b)| a * b).collect();
        prop_assert_eq!(winding_number(&ClutchSamples::from_points(product)).unwrap(), d1 + d2);
    }

    #[test]
    fn exterior_degree_is_symmetric(n in 1usize..=20, k in 1usize..=20) {
        prop_assume!(k <= n);
        prop_assert_eq!(exterior_weight(n, k).unwrap(), exterior_weight(n, n + 1 - k).unwrap());
    }
}
