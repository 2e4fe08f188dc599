use nalgebra::Vector3;
use neohookean::homsolve::{
    self, classify, Direction, Expected, LimitClass, LoadCase, Quantity, SolveResult, SolverConfig, SweepSpec, TableId,
};
use neohookean::materials::{self, ModelSpec};
use neohookean::tensor3::FullTensor3;
use neohookean::volfun::{self, VolFunId};
use neohookean::Error;
use proptest::prelude::*;

fn solve(case: LoadCase, model: &ModelSpec, lam: f64) -> SolveResult {
    let r = homsolve::solve(case, model, lam, &SolverConfig::default()).unwrap();
    assert!(r.converged, "{case} {} at {lam}: {:?}", model.kind(), r.warnings);
    r
}

fn deformation(case: LoadCase, lam: f64, lam_t: f64) -> FullTensor3 {
    let d = match case {
        LoadCase::Ul => [lam, lam_t, lam_t],
        LoadCase::Elp => [lam, lam, lam_t],
        LoadCase::Ulp => [lam, 1.0, lam_t],
    };
    FullTensor3::from_diagonal(&Vector3::from(d))
}

fn compressible(k: usize, nu: f64) -> ModelSpec {
    let id = VolFunId::CATALOG[k % 8];
    if k < 8 {
        ModelSpec::mixed(id, 1.0, nu).unwrap()
    } else {
        ModelSpec::vol_iso(id, 1.0, nu).unwrap()
    }
}

#[test]
fn load_case_labels_and_volume() {
    for case in LoadCase::ALL {
        assert_eq!(case.label().parse::<LoadCase>().unwrap(), case);
        assert_eq!(case.to_string().to_uppercase().parse::<LoadCase>().unwrap(), case);
    }
    assert!(matches!("shear".parse::<LoadCase>(), Err(Error::Parameter(_))));
    assert_eq!(LoadCase::Ul.volume_ratio(2.0, 0.5), 0.5);
    assert_eq!(LoadCase::Elp.volume_ratio(2.0, 0.5), 2.0);
    assert_eq!(LoadCase::Ulp.volume_ratio(2.0, 0.5), 1.0);
    assert_eq!(LoadCase::Ulp.quantities().len(), 5);
    assert_eq!(LoadCase::Ul.quantities(), &[Quantity::LambdaT, Quantity::Sigma11, Quantity::P11]);
}

#[test]
fn undeformed_state_for_every_model() {
    for k in 0..16 {
        let m = compressible(k, 0.3);
        for case in LoadCase::ALL {
            let r = solve(case, &m, 1.0);
            assert!((r.lambda_t - 1.0).abs() < 1e-12, "{case} {}", m.kind());
            assert!(r.sigma11.abs() < 1e-12 && r.p11.abs() < 1e-12);
        }
    }
}

#[test]
fn zero_poisson_mixed_models_are_laterally_free() {
    for id in VolFunId::CATALOG {
        let m = ModelSpec::mixed(id, 1.3, 0.0).unwrap();
        for lam in [0.2, 0.7, 1.5, 4.0] {
            let expect = 1.3 * (lam - 1.0 / lam);
            let ul = solve(LoadCase::Ul, &m, lam);
            assert!((ul.lambda_t - 1.0).abs() < 1e-12, "{id}");
            assert!((ul.sigma11 - expect).abs() <= 1e-12 * expect.abs().max(1.0));
            assert!((ul.p11 - expect).abs() <= 1e-12 * expect.abs().max(1.0));

            let elp = solve(LoadCase::Elp, &m, lam);
            let s = 1.3 * (1.0 - lam.powi(-2));
            assert!((elp.lambda_t - 1.0).abs() < 1e-12, "{id}");
            assert!((elp.sigma11 - s).abs() <= 1e-12 * s.abs().max(1.0));
            assert!((elp.p11 - expect).abs() <= 1e-12 * expect.abs().max(1.0));

            let ulp = solve(LoadCase::Ulp, &m, lam);
            assert!((ulp.lambda_t - 1.0).abs() < 1e-12, "{id}");
            assert!(ulp.sigma22.abs() < 1e-12 && ulp.p22.abs() < 1e-12);
        }
    }
}

#[test]
fn closed_form_quadratic_mixed_model() {
    let m = ModelSpec::mixed(VolFunId::Quadratic, 1.0, 0.3).unwrap();
    for case in LoadCase::ALL {
        assert!((homsolve::closed_form_mixed7(case, 1.0, &m).unwrap() - 1.0).abs() < 1e-15);
        for lam in [0.05, 0.5, 2.0, 30.0] {
            let exact = homsolve::closed_form_mixed7(case, lam, &m).unwrap();
            let r = solve(case, &m, lam);
            assert!((r.lambda_t - exact).abs() <= 1e-10 * exact, "{case} at {lam}");
        }
    }
    let free = ModelSpec::mixed(VolFunId::Quadratic, 1.0, 0.0).unwrap();
    assert!((homsolve::closed_form_mixed7(LoadCase::Elp, 3.0, &free).unwrap() - 1.0).abs() < 1e-15);
    for other in [ModelSpec::mixed(VolFunId::ExpLog, 1.0, 0.3).unwrap(), ModelSpec::vol_iso(VolFunId::Quadratic, 1.0, 0.3).unwrap()] {
        assert!(matches!(homsolve::closed_form_mixed7(LoadCase::Ul, 2.0, &other), Err(Error::Unsupported(_))));
    }
}

#[test]
fn residual_examples() {
    let m = ModelSpec::mixed(VolFunId::ExpLog, 1.0, 0.0).unwrap();
    assert!(homsolve::residual(LoadCase::Ul, &m, 2.5, 1.0).unwrap().abs() < 1e-14);
    let m = ModelSpec::vol_iso(VolFunId::HartmannNeff(0.0), 1.0, 0.3).unwrap();
    for case in LoadCase::ALL {
        assert!(homsolve::residual(case, &m, 1.0, 1.0).unwrap().abs() < 1e-15);
    }
    // Lateral compression of an unloaded bar leaves a compressive lateral stress.
    assert!(homsolve::residual(LoadCase::Ul, &m, 1.0, 0.9).unwrap() < 0.0);
    assert!(homsolve::residual(LoadCase::Ul, &m, 0.0, 1.0).is_err());
    let inc = ModelSpec::incompressible(1.0).unwrap();
    assert!(matches!(homsolve::residual(LoadCase::Ul, &inc, 2.0, 1.0), Err(Error::Unsupported(_))));
}

#[test]
fn incompressible_closed_forms() {
    let m = ModelSpec::incompressible(2.0).unwrap();
    let r = solve(LoadCase::Ul, &m, 4.0);
    assert_eq!((r.lambda_t, r.j), (0.5, 1.0));
    assert!((r.sigma11 - 2.0 * (16.0 - 0.25)).abs() < 1e-13);
    let r = solve(LoadCase::Elp, &m, 2.0);
    assert_eq!(r.lambda_t, 0.25);
    assert_eq!(r.sigma11, r.sigma22);
    let r = solve(LoadCase::Ulp, &m, 2.0);
    assert_eq!(r.lambda_t, 0.5);
    assert!((r.sigma22 - 2.0 * 0.75).abs() < 1e-15);
}

#[test]
fn volumetric_response_through_trace_shortcut() {
    for id in VolFunId::CATALOG {
        let m = ModelSpec::vol_iso(id, 1.0, 0.35).unwrap();
        let k = m.params().k;
        for lam in [0.3, 0.8, 1.7, 5.0] {
            let ul = solve(LoadCase::Ul, &m, lam);
            let want = 3.0 * k * volfun::eval(id, ul.j).unwrap().hp;
            assert!((ul.sigma11 - want).abs() <= 1e-8 * want.abs().max(1.0), "{id} UL at {lam}");
            let elp = solve(LoadCase::Elp, &m, lam);
            let want = 1.5 * k * volfun::eval(id, elp.j).unwrap().hp;
            assert!((elp.sigma11 - want).abs() <= 1e-8 * want.abs().max(1.0), "{id} ELP at {lam}");
        }
    }
}

#[test]
fn no_bracket_is_reported() {
    let m = ModelSpec::mixed(VolFunId::ExpLog, 1.0, 0.3).unwrap();
    let cfg = SolverConfig { ln_min: 1.0, ln_max: 2.0, ..SolverConfig::default() };
    assert!(matches!(homsolve::solve(LoadCase::Ul, &m, 1.0, &cfg), Err(Error::NoBracket { .. })));
    assert!(matches!(homsolve::solve(LoadCase::Ul, &m, -1.0, &SolverConfig::default()), Err(Error::Domain { .. })));
}

#[test]
fn sweep_grid_and_errors() {
    let spec = SweepSpec { lam_min: 0.1, lam_max: 10.0, points: 3, log: true };
    let v = spec.values().unwrap();
    assert!((v[1] - 1.0).abs() < 1e-15 && (v[2] - 10.0).abs() < 1e-13);
    let lin = SweepSpec { lam_min: 1.0, lam_max: 2.0, points: 5, log: false }.values().unwrap();
    assert_eq!(lin, vec![1.0, 1.25, 1.5, 1.75, 2.0]);
    assert_eq!(SweepSpec { lam_min: 2.0, lam_max: 2.0, points: 1, log: true }.values().unwrap(), vec![2.0]);
    for bad in [
        SweepSpec { lam_min: 0.0, lam_max: 1.0, points: 3, log: true },
        SweepSpec { lam_min: 2.0, lam_max: 1.0, points: 3, log: false },
        SweepSpec { lam_min: 1.0, lam_max: 2.0, points: 0, log: false },
    ] {
        assert!(matches!(bad.values(), Err(Error::Parameter(_))));
    }
}

#[test]
fn sweep_matches_pointwise_solves() {
    let m = ModelSpec::mixed(VolFunId::HartmannNeff(2.0), 1.0, 0.4).unwrap();
    let spec = SweepSpec { lam_min: 0.2, lam_max: 5.0, points: 25, log: true };
    let cfg = SolverConfig::default();
    let rows = homsolve::sweep(LoadCase::Ulp, &m, &spec, &cfg).unwrap();
    assert_eq!(rows.len(), 25);
    assert!(rows.windows(2).all(|w| w[0].lambda_tilde < w[1].lambda_tilde));
    for r in &rows {
        let single = solve(LoadCase::Ulp, &m, r.lambda_tilde);
        assert!((r.lambda_t - single.lambda_t).abs() <= 1e-10 * single.lambda_t);
    }
}

#[test]
fn monotonicity_of_axial_responses() {
    let spec = SweepSpec { lam_min: 0.1, lam_max: 10.0, points: 200, log: true };
    let cfg = SolverConfig::default();
    let series = |m: &ModelSpec, case: LoadCase, q: Quantity| -> Vec<f64> {
        homsolve::sweep(case, m, &spec, &cfg).unwrap().iter().map(|r| r.get(q)).collect()
    };
    for id in [VolFunId::HartmannNeff(5.0), VolFunId::ExpLog] {
        for nu in [0.25, 0.45, 0.499] {
            let m = ModelSpec::mixed(id, 1.0, nu).unwrap();
            assert!(homsolve::is_monotone(&series(&m, LoadCase::Ulp, Quantity::P22)), "mixed {id} nu {nu}");
            for case in LoadCase::ALL {
                assert!(homsolve::is_monotone(&series(&m, case, Quantity::P11)), "mixed {id} {case} nu {nu}");
            }
        }
    }
    // Observed behaviour outside the monotone family.
    let m7 = ModelSpec::mixed(VolFunId::Quadratic, 1.0, 0.25).unwrap();
    assert!(!homsolve::is_monotone(&series(&m7, LoadCase::Ulp, Quantity::P22)));
    let m7 = ModelSpec::mixed(VolFunId::Quadratic, 1.0, 0.499).unwrap();
    assert!(homsolve::is_monotone(&series(&m7, LoadCase::Ulp, Quantity::P22)));
    let v7 = ModelSpec::vol_iso(VolFunId::Quadratic, 1.0, 0.25).unwrap();
    assert!(!homsolve::is_monotone(&series(&v7, LoadCase::Ul, Quantity::P11)));
    for id in [VolFunId::HartmannNeff(5.0), VolFunId::ExpLog] {
        let v = ModelSpec::vol_iso(id, 1.0, 0.25).unwrap();
        assert!(!homsolve::is_monotone(&series(&v, LoadCase::Ulp, Quantity::P22)), "vol-iso {id}");
    }
    assert!(homsolve::is_monotone(&[1.0, 1.0, 2.0]) && homsolve::is_monotone(&[3.0, 2.0]));
    assert!(!homsolve::is_monotone(&[1.0, 2.0, 1.5]));
}

#[test]
fn quadratic_vol_iso_reports_multiple_roots() {
    let m = ModelSpec::vol_iso(VolFunId::Quadratic, 1.0, 0.45).unwrap();
    let flagged = [0.05, 0.1, 0.2, 5.0, 20.0]
        .iter()
        .map(|&lam| solve(LoadCase::Ul, &m, lam))
        .any(|r| r.warnings.iter().any(|w| w.contains("sign changes")));
    assert!(flagged);
}

#[test]
fn classifier_rules() {
    assert_eq!(classify([1e4, 1e5, 1e6]), LimitClass::PosInf);
    assert_eq!(classify([-1e2, -1e4, -1e6]), LimitClass::NegInf);
    assert_eq!(classify([1e-4, 1e-5, 1e-6]), LimitClass::Zero);
    assert_eq!(classify([f64::INFINITY, f64::INFINITY, f64::INFINITY]), LimitClass::PosInf);
    assert_eq!(classify([1.0, f64::NEG_INFINITY, f64::NEG_INFINITY]), LimitClass::NegInf);
    assert_eq!(classify([2.0, 2.001, 2.0005]), LimitClass::Finite(2.0005));
    match classify([1.9, 1.99, 1.999]) {
        LimitClass::Finite(c) => assert!((c - 2.0).abs() < 1e-3),
        other => panic!("{other:?}"),
    }
    assert_eq!(classify([1.0, f64::NAN, 1.0]), LimitClass::Unresolved);
    assert_eq!(classify([1.0, -3.0, 7.0]), LimitClass::Unresolved);
    assert_eq!(LimitClass::Finite(3.0).constant(), Some(3.0));
    assert_eq!(LimitClass::Zero.constant(), None);
}

#[test]
fn limit_probe_examples() {
    let m4 = ModelSpec::mixed(VolFunId::HartmannNeff(5.0), 1.0, 0.25).unwrap();
    let r = homsolve::limit_probe(LoadCase::Ul, &m4, Direction::ToZero).unwrap();
    assert!(r.all_converged);
    assert_eq!(r.class_of(Quantity::LambdaT), Some(LimitClass::PosInf));
    assert_eq!(r.class_of(Quantity::Sigma11), Some(LimitClass::NegInf));
    assert_eq!(r.class_of(Quantity::P11), Some(LimitClass::NegInf));

    let v1 = ModelSpec::vol_iso(VolFunId::HartmannNeff(0.0), 1.0, 0.25).unwrap();
    let r = homsolve::limit_probe(LoadCase::Ul, &v1, Direction::ToInfinity).unwrap();
    assert_eq!(r.class_of(Quantity::Sigma11), Some(LimitClass::Zero));
    assert_eq!(r.class_of(Quantity::P11), Some(LimitClass::Zero));

    let m7 = ModelSpec::mixed(VolFunId::Quadratic, 1.0, 0.25).unwrap();
    let r = homsolve::limit_probe(LoadCase::Ul, &m7, Direction::ToZero).unwrap();
    let c = r.class_of(Quantity::LambdaT).unwrap().constant().unwrap();
    assert!((c - 1.0).abs() < 1e-2);
    assert_eq!(r.class_of(Quantity::Sigma22), None);

    let inc = ModelSpec::incompressible(1.0).unwrap();
    assert!(homsolve::limit_probe(LoadCase::Ul, &inc, Direction::ToZero).is_err());
}

#[test]
fn expected_entries_match_observed_classes() {
    let p = materials::MaterialParams::from_mu_nu(1.0, 0.25).unwrap();
    assert!(Expected::PosInf.matches(LimitClass::PosInf, &p));
    assert!(!Expected::PosInf.matches(LimitClass::NegInf, &p));
    assert!(Expected::EitherInf.matches(LimitClass::NegInf, &p));
    assert!(Expected::AnyFinite.matches(LimitClass::Finite(-7.0), &p));
    assert!(Expected::MinusThreeK.matches(LimitClass::Finite(-3.0 * p.k), &p));
    assert!(!Expected::MinusThreeK.matches(LimitClass::Finite(-1.5 * p.k), &p));
    assert!(Expected::MinusThreeHalvesK.matches(LimitClass::Finite(-1.5 * p.k), &p));
    assert!(Expected::One.matches(LimitClass::Finite(1.0), &p));
    assert!(!Expected::Zero.matches(LimitClass::Unresolved, &p));
}

#[test]
fn table_metadata() {
    for n in [3u8, 4, 6] {
        let t = TableId::from_number(n).unwrap();
        assert_eq!(t.number(), n);
        for &id in t.volfuns() {
            assert!(homsolve::expected_row(t, id).is_some(), "table {n} #{id}");
        }
    }
    assert_eq!(TableId::T3.case(), LoadCase::Ul);
    assert_eq!(TableId::T4.case(), LoadCase::Elp);
    assert_eq!(TableId::T6.case(), LoadCase::Ulp);
    assert!(matches!(TableId::from_number(5), Err(Error::Parameter(_))));
}

#[test]
fn uniaxial_table_is_reproduced() {
    let cells = homsolve::table_repro(TableId::T3, homsolve::TABLE_NU).unwrap();
    let counted: Vec<_> = cells.iter().filter(|c| c.counted).collect();
    assert!(!counted.is_empty());
    let misses: Vec<_> = counted.iter().filter(|c| !c.matched).map(|c| (c.model, c.volfun, c.quantity, c.direction)).collect();
    assert_eq!(misses, vec![("voliso", 6, Quantity::Sigma11, Direction::ToInfinity)]);
}

#[test]
fn dilatation_examples() {
    let m7 = ModelSpec::mixed(VolFunId::Quadratic, 1.0, 0.3).unwrap();
    let la = m7.params().lambda;
    assert!((homsolve::dilatation_response(&m7, 2.0).unwrap() - (0.375 + 7.0 * la)).abs() < 1e-13);
    for k in 0..16 {
        let m = compressible(k, 0.3);
        assert!(homsolve::dilatation_response(&m, 1.0).unwrap().abs() < 1e-15);
    }
    let v = ModelSpec::vol_iso(VolFunId::ExpLog, 2.0, 0.3).unwrap();
    let want = v.params().k * volfun::eval(VolFunId::ExpLog, 0.125).unwrap().hp;
    assert!((homsolve::dilatation_response(&v, 0.5).unwrap() - want).abs() < 1e-13 * want.abs());
    let inc = ModelSpec::incompressible(1.0).unwrap();
    assert!(matches!(homsolve::dilatation_response(&inc, 2.0), Err(Error::Unsupported(_))));
    assert!(homsolve::dilatation_response(&m7, 0.0).is_err());
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(96))]

    #[test]
    fn solutions_satisfy_the_lateral_condition(k in 0usize..16, c in 0usize..3, nu in 0.0f64..0.49, ll in -2.0f64..2.0) {
        let (m, case, lam) = (compressible(k, nu), LoadCase::ALL[c], ll.exp());
        let r = solve(case, &m, lam);
        prop_assert!((r.j - case.volume_ratio(lam, r.lambda_t)).abs() <= 1e-12 * r.j);
        let f = deformation(case, lam, r.lambda_t);
        let s = materials::cauchy_stress(&m, &f, None).unwrap();
        let free = match case { LoadCase::Ul => 1, _ => 2 };
        let scale = r.sigma11.abs() + m.params().mu;
        prop_assert!(s.cauchy.get(free, free).abs() <= 1e-10 * scale, "residual {}", s.cauchy.get(free, free));
        prop_assert!((s.cauchy.get(0, 0) - r.sigma11).abs() <= 1e-10 * scale);
        prop_assert!((s.cauchy.get(1, 1) - r.sigma22).abs() <= 1e-10 * scale);
        prop_assert!((s.first_pk[(0, 0)] - r.p11).abs() <= 1e-10 * scale * (1.0 + r.j / lam));
        prop_assert!((s.first_pk[(1, 1)] - r.p22).abs() <= 1e-10 * scale * (1.0 + r.j / f[(1, 1)]));
    }

    #[test]
    fn dilatation_agrees_with_general_stress(k in 0usize..16, nu in 0.0f64..0.49, lk in -1.0f64..1.0) {
        let m = compressible(k, nu);
        let a = homsolve::dilatation_response(&m, lk.exp()).unwrap();
        let b = homsolve::dilatation_from_stress(&m, lk.exp()).unwrap();
        prop_assert!((a - b).abs() <= 1e-11 * (1.0 + a.abs()));
    }

    #[test]
    fn quadratic_mixed_closed_form(c in 0usize..3, nu in 0.0f64..0.499, ll in -3.0f64..3.0) {
        let m = ModelSpec::mixed(VolFunId::Quadratic, 1.0, nu).unwrap();
        let case = LoadCase::ALL[c];
        let lam_t = homsolve::closed_form_mixed7(case, ll.exp(), &m).unwrap();
        let res = homsolve::residual(case, &m, ll.exp(), lam_t).unwrap();
        let scale = 1.0 + m.params().lambda + ll.exp().powi(2);
        prop_assert!(res.abs() <= 1e-10 * scale, "{}", res);
    }
}
