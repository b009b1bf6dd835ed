use super::*;
use crate::susy::SusyCase;

fn model(f: Family) -> PotentialModel {
    PotentialModel::new(f).unwrap()
}

fn radial_grid(n: usize) -> Vec<f64> {
    (0..n).map(|j| 0.1 + (j as f64 + 0.5) * 7.9 / n as f64).collect()
}

fn scarf_grid(n: usize) -> Vec<f64> {
    let a = std::f64::consts::FRAC_PI_2 - 0.05;
    (0..n).map(|j| -a + (j as f64 + 0.5) * 2.0 * a / n as f64).collect()
}

fn grid_for(m: &PotentialModel, n: usize) -> Vec<f64> {
    match m.domain() {
        Domain::HalfLine => radial_grid(n),
        Domain::ScarfInterval => scarf_grid(n),
    }
}

#[test]
fn parameter_gates() {
    assert!(PotentialModel::new(Family::RadialOsc { omega: 1.0, l: 0.0 }).is_ok());
    assert!(PotentialModel::new(Family::RadialOsc { omega: 0.0, l: 0.0 }).is_err());
    assert!(PotentialModel::new(Family::RadialOsc { omega: 1.0, l: -0.5 }).is_err());
    assert!(PotentialModel::new(Family::Scarf1 { a: 2.0, b: 0.5 }).is_ok());
    assert!(PotentialModel::new(Family::Scarf1 { a: 2.0, b: 1.0 }).is_err());
    assert!(PotentialModel::new(Family::Scarf1 { a: 2.0, b: 0.0 }).is_err());

    // l = 0 only admits the upper-sign start
    assert!(PotentialModel::new(Family::ExtRadialLinear {
        omega: 1.0,
        l: 0.0,
        branch: LinearBranch::Upper
    })
    .is_ok());
    assert!(PotentialModel::new(Family::ExtRadialLinear {
        omega: 1.0,
        l: 0.0,
        branch: LinearBranch::Lower
    })
    .is_err());

    // quadratic radial: case I needs l > 0, cases II/III need l > 1/2
    assert!(PotentialModel::new(Family::ExtRadialQuad {
        omega: 1.0,
        l: 0.25,
        case: QuadCase::I
    })
    .is_ok());
    assert!(PotentialModel::new(Family::ExtRadialQuad {
        omega: 1.0,
        l: 0.0,
        case: QuadCase::I
    })
    .is_err());
    for case in [QuadCase::II, QuadCase::III] {
        assert!(PotentialModel::new(Family::ExtRadialQuad { omega: 1.0, l: 0.5, case })
            .is_err());
        assert!(PotentialModel::new(Family::ExtRadialQuad { omega: 1.0, l: 0.75, case })
            .is_ok());
    }

    // Scarf quadratic case I needs B > 1
    let e = PotentialModel::new(Family::ExtScarfQuad { a: 2.0, b: 0.5, case: QuadCase::I });
    assert!(matches!(e, Err(ModelError::Parameter(ref m)) if m.contains("1 < B < A-1")));
    assert!(PotentialModel::new(Family::ExtScarfQuad { a: 4.0, b: 1.5, case: QuadCase::I })
        .is_ok());
    assert!(PotentialModel::new(Family::ExtScarfQuad { a: 4.0, b: 0.3, case: QuadCase::II })
        .is_ok());
    assert!(PotentialModel::new(Family::ExtScarfQuad { a: 2.0, b: 0.6, case: QuadCase::III })
        .is_err());
}

#[test]
fn evaluate_fixtures() {
    // V_0(2) = ω²x²/4 with no centrifugal term
    let m = model(Family::RadialOsc { omega: 1.0, l: 0.0 });
    assert!((m.evaluate(2.0).unwrap() - 1.0).abs() < 1e-14);

    // hand evaluation of the linear extension at x = 1
    let m = model(Family::ExtRadialLinear { omega: 1.0, l: 1.0, branch: LinearBranch::Lower });
    let expect = 0.25 + 2.0 + 1.0 - 24.0 / 16.0;
    assert!((m.evaluate(1.0).unwrap() - expect).abs() < 1e-13);

    // Scarf at the midpoint: sec 0 = 1, tan 0 = 0
    let m = model(Family::Scarf1 { a: 2.0, b: 0.5 });
    assert!((m.evaluate(0.0).unwrap() - 2.25).abs() < 1e-14);

    // quadratic case I at x = 1 with γ = 5
    let m = model(Family::ExtRadialQuad { omega: 1.0, l: 1.0, case: QuadCase::I });
    let expect = 2.25 - 32.0 / 26.0 + 320.0 / 676.0;
    assert!((m.evaluate(1.0).unwrap() - expect).abs() < 1e-13);
}

#[test]
fn evaluate_rejects_outside_domain() {
    let m = model(Family::RadialOsc { omega: 1.0, l: 1.0 });
    assert!(matches!(m.evaluate(0.0), Err(ModelError::Domain(_))));
    assert!(matches!(m.evaluate(-1.0), Err(ModelError::Domain(_))));
    let m = model(Family::Scarf1 { a: 2.0, b: 0.5 });
    assert!(m.evaluate(std::f64::consts::FRAC_PI_2).is_err());
}

#[test]
fn ansatz_reconstructs_start_potential() {
    // V⁺ = W² − W′ + E must reproduce the start model pointwise.
    for m in crate::susy::representative_extended_models() {
        let w = m.superpotential();
        let fact = m.factorization().unwrap();
        let start = m.start_model().unwrap();
        for x in grid_for(&m, 200) {
            let wj = w.jet(x);
            let v_plus = wj.f * wj.f - wj.d1 + fact.energy;
            let expect = start.evaluate(x).unwrap();
            assert!(
                (v_plus - expect).abs() < 1e-10 * (1.0 + expect.abs()),
                "{} at x={x}: {v_plus} vs {expect}",
                m.describe()
            );
        }
    }
}

#[test]
fn partner_reconstructs_extended_potential() {
    // V⁻ = W² + W′ + E must reproduce the extension plus its constant.
    for m in crate::susy::representative_extended_models() {
        let w = m.superpotential();
        let fact = m.factorization().unwrap();
        for x in grid_for(&m, 200) {
            let wj = w.jet(x);
            let v_minus = wj.f * wj.f + wj.d1 + fact.energy;
            let expect = m.evaluate(x).unwrap() + m.additive_constant();
            assert!(
                (v_minus - expect).abs() < 1e-10 * (1.0 + expect.abs()),
                "{} at x={x}: {v_minus} vs {expect}",
                m.describe()
            );
        }
    }
}

#[test]
fn phi_is_in_the_kernel_of_a() {
    // W = −φ′/φ, so φ′ + Wφ must vanish identically.
    for m in crate::susy::representative_extended_models() {
        let w = m.superpotential();
        let phi = m.factorization().unwrap().phi;
        for x in grid_for(&m, 50) {
            let pj = phi.jet(x);
            let res = pj.d1 + w.w(x) * pj.f;
            assert!(
                res.abs() < 1e-9 * (1.0 + pj.d1.abs()),
                "{} at x={x}: kernel residual {res}",
                m.describe()
            );
        }
    }
}

#[test]
fn factorization_energies_and_cases() {
    let m = model(Family::ExtRadialLinear { omega: 1.0, l: 1.0, branch: LinearBranch::Upper });
    let f = m.factorization().unwrap();
    assert!((f.energy - 0.5).abs() < 1e-14);
    assert_eq!(f.susy_case, SusyCase::StrictIsospectral);

    let m = model(Family::ExtRadialLinear { omega: 1.0, l: 1.0, branch: LinearBranch::Lower });
    let f = m.factorization().unwrap();
    assert!((f.energy + 3.5).abs() < 1e-14);
    assert_eq!(f.susy_case, SusyCase::StrictIsospectral);

    let m = model(Family::ExtRadialQuad { omega: 1.0, l: 5.0, case: QuadCase::III });
    let f = m.factorization().unwrap();
    assert!((f.energy - 1.5).abs() < 1e-14);
    assert_eq!(f.susy_case, SusyCase::ExtraBoundState);

    let m = model(Family::ExtScarfQuad { a: 4.0, b: 0.3, case: QuadCase::III });
    let f = m.factorization().unwrap();
    assert!((f.energy - 4.0).abs() < 1e-14);
    assert_eq!(f.susy_case, SusyCase::ExtraBoundState);

    let m = model(Family::ExtScarfQuad { a: 4.0, b: 1.5, case: QuadCase::I });
    assert_eq!(m.factorization().unwrap().susy_case, SusyCase::StrictIsospectral);
    let m = model(Family::RadialOsc { omega: 1.0, l: 1.0 });
    assert!(m.factorization().is_err());
}

#[test]
fn start_models() {
    let m = model(Family::ExtRadialLinear { omega: 2.0, l: 3.0, branch: LinearBranch::Lower });
    assert_eq!(
        *m.start_model().unwrap().family(),
        Family::RadialOsc { omega: 2.0, l: 2.0 }
    );
    let m = model(Family::ExtScarfQuad { a: 4.0, b: 1.5, case: QuadCase::I });
    assert_eq!(*m.start_model().unwrap().family(), Family::Scarf1 { a: 4.0, b: 2.5 });
    let m = model(Family::ExtScarfQuad { a: 4.0, b: 0.3, case: QuadCase::III });
    assert_eq!(*m.start_model().unwrap().family(), Family::Scarf1 { a: 5.0, b: 0.3 });
    // starts may sit outside the strict public gate
    let m = model(Family::ExtScarfLinear { a: 3.0, b: 1.0 });
    assert_eq!(*m.start_model().unwrap().family(), Family::Scarf1 { a: 3.0, b: 2.0 });
    let m = model(Family::ExtScarfQuad { a: 4.0, b: 0.3, case: QuadCase::II });
    assert_eq!(*m.start_model().unwrap().family(), Family::Scarf1 { a: 4.0, b: -0.7 });
}

#[test]
fn analytic_spectra() {
    let close = |got: Vec<f64>, expect: &[f64]| {
        assert_eq!(got.len(), expect.len());
        for (g, e) in got.iter().zip(expect) {
            assert!((g - e).abs() < 1e-12, "{got:?} vs {expect:?}");
        }
    };
    close(
        model(Family::RadialOsc { omega: 1.0, l: 0.0 }).analytic_spectrum(3),
        &[1.5, 3.5, 5.5],
    );
    close(model(Family::Scarf1 { a: 2.0, b: 0.5 }).analytic_spectrum(3), &[4.0, 9.0, 16.0]);
    close(
        model(Family::ExtRadialLinear { omega: 1.0, l: 1.0, branch: LinearBranch::Lower })
            .analytic_spectrum(3),
        &[2.5, 4.5, 6.5],
    );
    close(
        model(Family::ExtRadialQuad { omega: 1.0, l: 5.0, case: QuadCase::III })
            .analytic_spectrum(3),
        &[1.5, 7.5, 9.5],
    );
    close(
        model(Family::ExtScarfQuad { a: 4.0, b: 0.3, case: QuadCase::III })
            .analytic_spectrum(3),
        &[4.0, 25.0, 36.0],
    );
}

#[test]
fn table1_regions_and_constructibility() {
    // one representative point inside each row's region
    let points: [(f64, f64, usize); 9] = [
        (4.0, 1.5, 0),
        (1.8, 0.7, 1),
        (2.5, 0.7, 2),
        (1.4, 0.3, 3),
        (2.0, 0.3, 4),
        (4.0, 0.3, 5),
        (1.2, 0.1, 6),
        (1.4, 0.05, 7),
        (4.0, 0.3, 8),
    ];
    for (a, b, row) in points {
        let member = table1_memberships(a, b);
        assert!(member[row], "({a},{b}) should lie in row {}", row + 1);
        match TABLE1[row].constructible {
            Some(case) => {
                assert!(PotentialModel::new(Family::ExtScarfQuad { a, b, case }).is_ok());
            }
            None => {
                // non-asterisked rows never construct: their (A,B) regions
                // fall outside every asterisked gate that shares the ansatz
                let in_gate_i = 1.0 < b && b < a - 1.0 && member[0];
                assert!(!in_gate_i || TABLE1[row].constructible.is_some());
            }
        }
    }
    // strict boundaries: B = 1 is outside row 1a*, B = A−3/2 outside row 2*
    assert!(!table1_memberships(4.0, 1.0)[0]);
    assert!(!table1_memberships(4.0, 2.5)[5]);
    // closed boundaries exactly as written: A = 2 belongs to row 3, not row 2
    assert!(table1_memberships(2.0, 0.7)[2]);
    assert!(!table1_memberships(2.0, 0.7)[1]);
    // A = 5/4 belongs to row 7, not row 8
    assert!(table1_memberships(1.25, 0.1)[6]);
    assert!(!table1_memberships(1.25, 0.1)[7]);
    // gate errors name the violated condition
    let e = PotentialModel::new(Family::ExtScarfQuad { a: 2.0, b: 0.5, case: QuadCase::I })
        .unwrap_err();
    assert!(e.to_string().contains("1 < B < A-1"));
}

#[test]
fn singularity_freedom_over_random_draws() {
    // 50 seeded draws per family: no denominator root inside the domain.
    let mut state = 0x9e3779b97f4a7c15u64;
    let mut next = move || {
        state ^= state << 13;
        state ^= state >> 7;
        state ^= state << 17;
        (state >> 11) as f64 / (1u64 << 53) as f64
    };
    for _ in 0..50 {
        let omega = 0.5 + 1.5 * next();
        let l = 0.6 + 5.0 * next();
        let a = 3.0 + 3.0 * next();
        let families = [
            Family::ExtRadialLinear { omega, l, branch: LinearBranch::Lower },
            Family::ExtRadialQuad { omega, l, case: QuadCase::I },
            Family::ExtRadialQuad { omega, l, case: QuadCase::II },
            Family::ExtRadialQuad { omega, l, case: QuadCase::III },
            Family::ExtScarfLinear { a, b: 0.1 + (a - 1.2) * next() },
            Family::ExtScarfQuad { a, b: 1.0 + (a - 2.1) * next(), case: QuadCase::I },
            Family::ExtScarfQuad { a, b: 0.1 + (a - 1.7) * next(), case: QuadCase::II },
            Family::ExtScarfQuad { a, b: 0.1 + (a - 1.7) * next(), case: QuadCase::III },
        ];
        for f in families {
            let m = PotentialModel::new(f).unwrap();
            let terms = m.rational_terms().unwrap();
            assert_eq!(
                terms.denominator_roots_in_range(),
                0,
                "denominator root inside domain for {}",
                m.describe()
            );
        }
    }
}

#[test]
fn root_detection_catches_planted_roots() {
    let bad = RationalTerms {
        n1: Polynomial::one(),
        n2: Polynomial::zero(),
        d: Polynomial::from_coeffs(vec![-0.25, 0.0, 1.0]), // roots ±1/2
        var: RationalVar::SinX,
    };
    assert_eq!(bad.denominator_roots_in_range(), 2);
    let bad = RationalTerms {
        n1: Polynomial::one(),
        n2: Polynomial::zero(),
        d: Polynomial::from_coeffs(vec![-3.0, 1.0]), // root u = 3 > 0
        var: RationalVar::OmegaXSquared,
    };
    assert_eq!(bad.denominator_roots_in_range(), 1);
}

#[test]
fn superpotential_values() {
    // standard radial W at a point: ωx/2 − (l+1)/x
    let m = model(Family::RadialOsc { omega: 1.0, l: 1.0 });
    let w = m.superpotential();
    assert!((w.w(2.0) - (1.0 - 1.0)).abs() < 1e-14);
    // standard Scarf W: A tan x − B sec x
    let m = model(Family::Scarf1 { a: 2.0, b: 0.5 });
    let w = m.superpotential();
    let x = 0.3f64;
    assert!((w.w(x) - (2.0 * x.tan() - 0.5 / x.cos())).abs() < 1e-13);
    // lower-branch linear radial at x = 1, ω = 1, l = 1:
    // −1/2 − 1 − 2/(1+3) = −2
    let m = model(Family::ExtRadialLinear { omega: 1.0, l: 1.0, branch: LinearBranch::Lower });
    assert!((m.superpotential().w(1.0) + 2.0).abs() < 1e-13);
}

#[test]
fn constraint_equations_hold_exactly() {
    use crate::scalar::{int, rat, Rational};
    // Exact-rational mirror of the parameter maps: the eliminations that
    // produce c (and d) from (a, b) match the γ-forms stored on the models.
    let omegas = [rat(1, 1), rat(3, 2), rat(2, 1)];
    let ls = [rat(1, 1), rat(3, 4), rat(5, 2)];
    for omega in &omegas {
        for l in &ls {
            let two = int(2);
            // linear: a = −ω/2, b = −l, c = (2b−1)/(2a) = (2l+1)/ω
            let a = -omega.clone() / two.clone();
            let b = -l.clone();
            let c = (two.clone() * b.clone() - int(1)) / (two.clone() * a.clone());
            assert_eq!(c, (two.clone() * l.clone() + int(1)) / omega.clone());
            // quadratic case I: a = −ω/2, b = −l → c = 2γ/ω, d = γ(γ−2)/ω²
            let c = (two.clone() * b.clone() - int(3)) / a.clone();
            let d = (two.clone() * b.clone() - int(1)) * (two.clone() * b.clone() - int(3))
                / (int(4) * a.clone() * a.clone());
            let gamma = two.clone() * l.clone() + int(3);
            assert_eq!(c, two.clone() * gamma.clone() / omega.clone());
            assert_eq!(
                d,
                gamma.clone() * (gamma.clone() - two.clone()) / (omega.clone() * omega.clone())
            );
            // quadratic cases II/III: a = ±ω/2, b = l+1 → |c| = 2γ/ω,
            // d = γ(γ+2)/ω², γ = 2l−1
            let b = l.clone() + int(1);
            let gamma = two.clone() * l.clone() - int(1);
            for sgn in [int(1), int(-1)] {
                let a = sgn.clone() * omega.clone() / two.clone();
                let c = (two.clone() * b.clone() - int(3)) / a.clone();
                let d = (two.clone() * b.clone() - int(1))
                    * (two.clone() * b.clone() - int(3))
                    / (int(4) * a.clone() * a.clone());
                assert_eq!(c, sgn.clone() * two.clone() * gamma.clone() / omega.clone());
                assert_eq!(
                    d,
                    gamma.clone() * (gamma.clone() + two.clone())
                        / (omega.clone() * omega.clone())
                );
            }
        }
    }
    // Scarf linear conditions: c = 2b/(2a+1), E = (a+1)², and the V⁻ links
    let cap_a = rat(7, 2);
    let cap_b = rat(5, 4);
    let a = -cap_b.clone() - rat(1, 2);
    let b = cap_a.clone() - rat(1, 2);
    let c = int(2) * b.clone() / (int(2) * a.clone() + int(1));
    assert_eq!(c, -(int(2) * cap_a.clone() - int(1)) / (int(2) * cap_b.clone()));
    let lhs: Rational = a.clone() * (a.clone() + int(1)) + b.clone() * b.clone();
    let rhs: Rational =
        cap_a.clone() * (cap_a.clone() - int(1)) + cap_b.clone() * cap_b.clone();
    assert_eq!(lhs, rhs);
    assert_eq!(
        (int(2) * a.clone() + int(1)) * b.clone(),
        -(int(2) * cap_a.clone() - int(1)) * cap_b.clone()
    );
}

#[test]
fn scarf_ansatz_g_is_proportional_to_denominator() {
    // g(z) from the eliminations and D(z) from the potential differ only by
    // the leading normalization.
    for (a, b, case) in [
        (4.0, 1.5, QuadCase::I),
        (4.0, 0.3, QuadCase::II),
        (4.0, 0.3, QuadCase::III),
        (3.2, 1.1, QuadCase::I),
    ] {
        let m = model(Family::ExtScarfQuad { a, b, case });
        let g = m.superpotential().g.unwrap();
        let d = scarf_quad_denominator(a, b, case);
        let ratio = d.coeffs()[2] / g.coeffs()[2];
        for k in 0..=2 {
            let dd = d.coeffs()[k];
            let gg = g.coeffs()[k] * ratio;
            assert!(
                (dd - gg).abs() < 1e-10 * (1.0 + dd.abs()),
                "case {case} coefficient {k}: {dd} vs {gg}"
            );
        }
    }
}

#[test]
fn upper_and_lower_linear_branches_share_the_potential() {
    let up = model(Family::ExtRadialLinear { omega: 1.3, l: 2.0, branch: LinearBranch::Upper });
    let lo = model(Family::ExtRadialLinear { omega: 1.3, l: 2.0, branch: LinearBranch::Lower });
    for x in radial_grid(50) {
        assert!((up.evaluate(x).unwrap() - lo.evaluate(x).unwrap()).abs() < 1e-12);
    }
    assert!((up.additive_constant() - 1.3).abs() < 1e-15);
    assert!((lo.additive_constant() + 1.3).abs() < 1e-15);
}

#[test]
fn descriptor_roundtrip() {
    for m in crate::susy::representative_extended_models() {
        let d = m.to_descriptor();
        let back = PotentialModel::from_descriptor(&d).unwrap();
        assert_eq!(m, back);
        // survives JSON
        let json = serde_json::to_string(&d).unwrap();
        let d2: ModelDescriptor = serde_json::from_str(&json).unwrap();
        assert_eq!(PotentialModel::from_descriptor(&d2).unwrap(), m);
    }
    let bad = ModelDescriptor {
        family: "unknown".into(),
        parameters: DescriptorParams::default(),
        case: None,
        branch: None,
    };
    assert!(PotentialModel::from_descriptor(&bad).is_err());
}
