use nalgebra::{Matrix3, Rotation3, Vector3};
use neohookean::tensor3::{self, SpectralDecomp, SuperSymTensor4, SymTensor3, VoigtKind, DEFAULT_REL_TOL};
use proptest::prelude::*;

fn sym_strategy() -> impl Strategy<Value = SymTensor3> {
    prop::array::uniform6(-3.0f64..3.0).prop_map(SymTensor3::from_components)
}

fn rotation_strategy() -> impl Strategy<Value = Matrix3<f64>> {
    (prop::array::uniform3(-1.0f64..1.0), 0.0f64..std::f64::consts::PI).prop_filter_map("axis", |(a, ang)| {
        let v = Vector3::from(a);
        (v.norm() > 0.1).then(|| *Rotation3::from_axis_angle(&nalgebra::Unit::new_normalize(v), ang).matrix())
    })
}

fn separated(values: [f64; 3]) -> bool {
    let mut v = values;
    v.sort_by(f64::total_cmp);
    v[1] - v[0] > 0.1 && v[2] - v[1] > 0.1
}

fn with_separated_spectrum() -> impl Strategy<Value = (SymTensor3, [f64; 3])> {
    (prop::array::uniform3(-4.0f64..4.0), rotation_strategy())
        .prop_filter("separated eigenvalues", |(v, _)| separated(*v))
        .prop_map(|(v, q)| (SymTensor3::diag(v[0], v[1], v[2]).rotate(&q), v))
}

fn assert_close(a: &SymTensor3, b: &SymTensor3, tol: f64) {
    let err = (*a - *b).norm();
    assert!(err <= tol, "difference {err} exceeds {tol}: {a:?} vs {b:?}");
}

#[test]
fn identity_has_single_eigenvalue() {
    let d = tensor3::spectral(&SymTensor3::identity(), DEFAULT_REL_TOL);
    assert_eq!(d.m, 1);
    assert_eq!(d.values, vec![1.0]);
    assert_close(&d.projections[0], &SymTensor3::identity(), 0.0);
}

#[test]
fn axisymmetric_tensor_has_two_projections() {
    let d = tensor3::spectral(&SymTensor3::diag(1.7, 0.6, 0.6), DEFAULT_REL_TOL);
    assert_eq!(d.m, 2);
    let k = d.values.iter().position(|&v| (v - 1.7).abs() < 1e-12).unwrap();
    let e1 = SymTensor3::dyad(&Vector3::x());
    assert_close(&d.projections[k], &e1, 1e-14);
    assert_close(&d.projections[1 - k], &(SymTensor3::identity() - e1), 1e-14);
    assert_eq!(d.multiplicities.iter().sum::<usize>(), 3);
}

#[test]
fn distinct_diagonal_has_coordinate_projections() {
    let d = tensor3::spectral(&SymTensor3::diag(1.0, 2.0, 3.0), DEFAULT_REL_TOL);
    assert_eq!(d.m, 3);
    for (k, v) in d.values.iter().enumerate() {
        let axis = (*v as usize) - 1;
        let mut n = Vector3::zeros();
        n[axis] = 1.0;
        assert_close(&d.projections[k], &SymTensor3::dyad(&n), 1e-14);
    }
}

#[test]
fn clustering_respects_tolerance() {
    let s = SymTensor3::diag(1.0, 1.0 + 1e-10, 2.0);
    assert_eq!(tensor3::spectral(&s, 1e-8).m, 2);
    assert_eq!(tensor3::spectral(&s, 1e-12).m, 3);
}

#[test]
fn split_examples() {
    let h = SymTensor3::from_components([0.3, -1.2, 0.8, 0.5, -0.7, 0.4]);
    let (hat, tilde) = tensor3::coaxial_orthogonal_split(&SymTensor3::identity(), &h);
    assert_close(&hat, &h, 1e-15);
    assert_close(&tilde, &SymTensor3::zero(), 1e-15);

    let h = SymTensor3::from_components([0.0, 0.0, 0.0, 0.0, 0.9, -1.3]);
    let (hat, tilde) = tensor3::coaxial_orthogonal_split(&SymTensor3::diag(1.0, 2.0, 2.0), &h);
    assert_close(&hat, &SymTensor3::zero(), 1e-14);
    assert_close(&tilde, &h, 1e-14);

    let h = SymTensor3::from_components([0.4, -0.8, 0.0, 0.0, 0.0, 1.1]);
    let (hat, tilde) = tensor3::coaxial_orthogonal_split(&SymTensor3::diag(2.0, 5.0, 0.0), &h);
    assert_close(&hat, &SymTensor3::diag(0.4, -0.8, 0.0), 1e-14);
    assert_close(&tilde, &SymTensor3::from_components([0.0, 0.0, 0.0, 0.0, 0.0, 1.1]), 1e-14);
}

#[test]
fn symmetric_identity_acts_as_sym() {
    let x = SymTensor3::from_components([1.0, 2.0, 3.0, 4.0, 5.0, 6.0]);
    assert_close(&SuperSymTensor4::sym_identity().contract(&x), &x, 1e-15);
    let i = SymTensor3::identity();
    assert_close(&tensor3::sym_outer(&i, &i).contract(&x), &x, 1e-15);
}

#[test]
fn voigt_zero_tensor() {
    let h = SymTensor3::from_components([1.0, -2.0, 0.5, 0.1, 0.2, 0.3]);
    assert_eq!(tensor3::voigt_roundtrip(&SuperSymTensor4::zero(), &h), (0.0, 0.0));
}

#[test]
fn voigt_factor_convention() {
    let h = SymTensor3::from_components([1.0, 2.0, 3.0, 4.0, 5.0, 6.0]);
    let strain = tensor3::voigt_vector(&h, VoigtKind::Strain);
    let stress = tensor3::voigt_vector(&h, VoigtKind::Stress);
    assert_eq!(strain.as_slice(), &[1.0, 2.0, 3.0, 8.0, 10.0, 12.0]);
    assert_eq!(stress.as_slice(), &[1.0, 2.0, 3.0, 4.0, 5.0, 6.0]);
    assert_close(&tensor3::from_voigt_vector(&strain, VoigtKind::Strain), &h, 0.0);
    assert_close(&tensor3::from_voigt_vector(&stress, VoigtKind::Stress), &h, 0.0);
}

#[test]
fn orthonormal_basis_is_orthonormal() {
    let b = tensor3::orthonormal_sym_basis();
    for (r, x) in b.iter().enumerate() {
        for (c, y) in b.iter().enumerate() {
            let expected = if r == c { 1.0 } else { 0.0 };
            assert!((x.ddot(y) - expected).abs() < 1e-15);
        }
    }
}

fn projection_identities(d: &SpectralDecomp, tol: f64) {
    let mut sum = SymTensor3::zero();
    for (a, pa) in d.projections.iter().enumerate() {
        sum += *pa;
        for (b, pb) in d.projections.iter().enumerate() {
            let prod = tensor3::sym(&pa.dot(pb));
            let expected = if a == b { *pa } else { SymTensor3::zero() };
            assert_close(&prod, &expected, tol);
        }
        assert!((pa.trace() - d.multiplicities[a] as f64).abs() < tol);
    }
    assert_close(&sum, &SymTensor3::identity(), tol);
}

proptest! {
    #![proptest_config(ProptestConfig { max_global_rejects: 1 << 20, ..ProptestConfig::with_cases(256) })]

    #[test]
    fn eigenprojection_identities((s, _) in with_separated_spectrum()) {
        let d = tensor3::spectral(&s, DEFAULT_REL_TOL);
        prop_assert_eq!(d.m, 3);
        projection_identities(&d, 1e-10);
        assert_close(&d.reconstruct(), &s, 1e-10 * s.norm().max(1.0));
    }

    #[test]
    fn reconstruction_of_any_tensor(s in sym_strategy()) {
        let d = tensor3::spectral(&s, DEFAULT_REL_TOL);
        assert_close(&d.reconstruct(), &s, 10.0 * DEFAULT_REL_TOL * s.norm().max(1.0));
    }

    #[test]
    fn repeated_eigenvalues_use_complement(v in prop::array::uniform2(-3.0f64..3.0), q in rotation_strategy()) {
        prop_assume!((v[0] - v[1]).abs() > 0.1);
        let s = SymTensor3::diag(v[0], v[1], v[1]).rotate(&q);
        let d = tensor3::spectral(&s, DEFAULT_REL_TOL);
        prop_assert_eq!(d.m, 2);
        projection_identities(&d, 1e-10);
    }

    #[test]
    fn split_is_exact_and_orthogonal(s in sym_strategy(), h in sym_strategy()) {
        let (hat, tilde) = tensor3::coaxial_orthogonal_split(&s, &h);
        assert_close(&(hat + tilde), &h, 1e-13 * h.norm().max(1.0));
        prop_assert!(hat.ddot(&tilde).abs() <= 1e-12 * h.norm().powi(2).max(1e-300));
    }

    #[test]
    fn orthogonal_part_positivity((s, v) in with_separated_spectrum(), x in prop::array::uniform3(0.01f64..5.0), h in sym_strategy()) {
        let d = tensor3::spectral(&s, DEFAULT_REL_TOL);
        // Symmetric weights indexed by the unordered pair of eigenvalues.
        let weight = |a: f64, b: f64| {
            let idx = |t: f64| v.iter().position(|w| (w - t).abs() < 1e-8).unwrap();
            let (i, j) = (idx(a).min(idx(b)), idx(a).max(idx(b)));
            match (i, j) { (0, 1) => x[0], (0, 2) => x[1], _ => x[2] }
        };
        let big_x = tensor3::eigenprojection_tensor(&d, weight);
        let (_, tilde) = tensor3::split_with(&d, &h);
        let q = big_x.quad(&tilde);
        // Components of the orthogonal part in the eigenbasis.
        let basis: Vec<Vector3<f64>> = (0..3).map(|k| {
            let p = d.projections[d.values.iter().position(|w| (w - v[k]).abs() < 1e-8).unwrap()].to_matrix();
            let col = (0..3).map(|c| p.column(c).into_owned()).max_by(|a, b| a.norm().total_cmp(&b.norm())).unwrap();
            col.normalize()
        }).collect();
        let comp = |a: usize, b: usize| basis[a].dot(&(tilde.to_matrix() * basis[b]));
        let expansion = 2.0 * (x[0] * comp(0, 1).powi(2) + x[1] * comp(0, 2).powi(2) + x[2] * comp(1, 2).powi(2));
        prop_assert!((q - expansion).abs() <= 1e-10 * expansion.abs().max(1e-12));
        if tilde.norm() > 1e-6 {
            prop_assert!(q > 0.0);
        }
    }

    #[test]
    fn sym_outer_action(a in sym_strategy(), b in sym_strategy(), x in sym_strategy()) {
        let lhs = tensor3::sym_outer(&a, &b).contract(&x);
        let expected = tensor3::sym(&(a.to_matrix() * x.to_matrix() * b.to_matrix() + b.to_matrix() * x.to_matrix() * a.to_matrix())) * 0.5;
        assert_close(&lhs, &expected, 1e-12 * (1.0 + a.norm() * b.norm() * x.norm()));
    }

    #[test]
    fn dyad_action(a in sym_strategy(), b in sym_strategy(), x in sym_strategy()) {
        let lhs = tensor3::dyad(&a, &b).contract(&x);
        let expected = (a * b.ddot(&x) + b * a.ddot(&x)) * 0.5;
        assert_close(&lhs, &expected, 1e-12 * (1.0 + a.norm() * b.norm() * x.norm()));
    }

    #[test]
    fn fourth_order_symmetry(a in sym_strategy(), b in sym_strategy()) {
        prop_assert_eq!(tensor3::sym_outer(&a, &b).symmetry_defect(), 0.0);
        prop_assert_eq!(tensor3::dyad(&a, &b).symmetry_defect(), 0.0);
    }

    #[test]
    fn voigt_quadratic_forms_agree(a in sym_strategy(), b in sym_strategy(), c in sym_strategy(), h in sym_strategy()) {
        let x = tensor3::sym_outer(&a, &b) + tensor3::dyad(&c, &a);
        let (t, v) = tensor3::voigt_roundtrip(&x, &h);
        // The form is indefinite, so round-off scales with the operands rather than with the value.
        let scale = x.max_abs() * h.norm().powi(2);
        prop_assert!((t - v).abs() <= 1e-13 * scale.max(1e-300), "{} vs {}", t, v);
    }

    #[test]
    fn voigt_vector_roundtrip(h in sym_strategy()) {
        for kind in [VoigtKind::Strain, VoigtKind::Stress] {
            assert_close(&tensor3::from_voigt_vector(&tensor3::voigt_vector(&h, kind), kind), &h, 1e-15);
        }
        let dot = tensor3::voigt_vector(&h, VoigtKind::Strain).dot(&tensor3::voigt_vector(&h, VoigtKind::Stress));
        prop_assert!((dot - h.ddot(&h)).abs() <= 1e-13 * dot.max(1.0));
    }

    #[test]
    fn rotation_commutes_with_spectral_functions(s in sym_strategy(), q in rotation_strategy()) {
        let f = |t: f64| t.exp();
        let lhs = tensor3::spectral(&s.rotate(&q), DEFAULT_REL_TOL).map(f);
        let rhs = tensor3::spectral(&s, DEFAULT_REL_TOL).map(f).rotate(&q);
        assert_close(&lhs, &rhs, 1e-9 * lhs.norm().max(1.0));
    }
}
