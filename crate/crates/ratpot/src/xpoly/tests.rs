use super::*;
use crate::scalar::{int, rat, Rational};
use num_traits::Zero;
use crate::verify::fixtures as fx;

type Q = Rational;
type QPoly = Polynomial<Rational>;

fn x1lag(a: Q) -> ExceptionalFamily<Q> {
    ExceptionalFamily::X1Laguerre { alpha: a }
}
fn l1(a: Q) -> ExceptionalFamily<Q> {
    ExceptionalFamily::L1 { alpha: a }
}
fn l2(a: Q) -> ExceptionalFamily<Q> {
    ExceptionalFamily::L2 { alpha: a }
}
fn l3(a: Q) -> ExceptionalFamily<Q> {
    ExceptionalFamily::L3 { alpha: a }
}
fn x1jac(a: Q, b: Q) -> ExceptionalFamily<Q> {
    ExceptionalFamily::X1Jacobi { alpha: a, beta: b }
}
fn p1(a: Q, b: Q) -> ExceptionalFamily<Q> {
    ExceptionalFamily::P1 { alpha: a, beta: b }
}
fn p3(a: Q, b: Q) -> ExceptionalFamily<Q> {
    ExceptionalFamily::P3 { alpha: a, beta: b }
}

fn alphas() -> Vec<Q> {
    vec![rat(1, 2), int(1), rat(3, 2), rat(7, 3), int(4)]
}

fn jacobi_params() -> Vec<(Q, Q)> {
    vec![
        (int(1), int(3)),
        (rat(1, 2), rat(9, 2)),
        (rat(2, 3), rat(11, 3)),
        (int(2), rat(13, 2)),
        (rat(5, 4), rat(21, 4)),
    ]
}

// β−α ∈ {1, 2} makes the quadratic Jacobi constructions singular (their
// defining scales vanish), so the P1/P3 sweeps skip those points.
fn quad_jacobi_params() -> Vec<(Q, Q)> {
    jacobi_params()
        .into_iter()
        .filter(|(a, b)| {
            let dm = b.clone() - a.clone();
            dm != int(1) && dm != int(2)
        })
        .collect()
}

#[test]
fn laguerre_type_low_degree_tables() {
    for a in alphas() {
        assert_eq!(exceptional_polynomial(&x1lag(a.clone()), 0).unwrap(), fx::x1_laguerre_1(&a));
        assert_eq!(exceptional_polynomial(&x1lag(a.clone()), 1).unwrap(), fx::x1_laguerre_2(&a));
        assert_eq!(exceptional_polynomial(&x1lag(a.clone()), 2).unwrap(), fx::x1_laguerre_3(&a));
        assert_eq!(exceptional_polynomial(&l1(a.clone()), 0).unwrap(), fx::l1_2(&a));
        assert_eq!(exceptional_polynomial(&l1(a.clone()), 1).unwrap(), fx::l1_3(&a));
        assert_eq!(exceptional_polynomial(&l1(a.clone()), 2).unwrap(), fx::l1_4(&a));
        assert_eq!(exceptional_polynomial(&l2(a.clone()), 0).unwrap(), fx::l2_2(&a));
        assert_eq!(exceptional_polynomial(&l2(a.clone()), 1).unwrap(), fx::l2_3(&a));
        assert_eq!(exceptional_polynomial(&l2(a.clone()), 2).unwrap(), fx::l2_4(&a));
        assert_eq!(exceptional_polynomial(&l3(a.clone()), 0).unwrap(), fx::l3_3(&a));
        assert_eq!(exceptional_polynomial(&l3(a.clone()), 1).unwrap(), fx::l3_4(&a));
        assert_eq!(exceptional_polynomial(&l3(a.clone()), 2).unwrap(), fx::l3_5(&a));
    }
}

#[test]
fn jacobi_type_low_degree_tables() {
    for (a, b) in jacobi_params() {
        assert_eq!(
            exceptional_polynomial(&x1jac(a.clone(), b.clone()), 0).unwrap(),
            fx::x1_jacobi_1(&a, &b)
        );
        assert_eq!(
            exceptional_polynomial(&x1jac(a.clone(), b.clone()), 1).unwrap(),
            fx::x1_jacobi_2(&a, &b)
        );
    }
    for (a, b) in quad_jacobi_params() {
        assert_eq!(
            exceptional_polynomial(&p1(a.clone(), b.clone()), 0).unwrap(),
            fx::p1_2(&a, &b)
        );
        assert_eq!(
            exceptional_polynomial(&p1(a.clone(), b.clone()), 1).unwrap(),
            fx::p1_3(&a, &b)
        );
        assert_eq!(
            exceptional_polynomial(&p3(a.clone(), b.clone()), 0).unwrap(),
            fx::p3_3(&a, &b)
        );
        assert_eq!(
            exceptional_polynomial(&p3(a.clone(), b.clone()), 1).unwrap(),
            fx::p3_4(&a, &b)
        );
    }
}

#[test]
fn pinned_single_values() {
    // X1-Laguerre ν=0: −z − α − 1
    let p = exceptional_polynomial(&x1lag(int(1)), 0).unwrap();
    assert_eq!(p, QPoly::from_coeffs(vec![int(-2), int(-1)]));
    // L1 at α = 1/2, ν = 0: z² + 5z + 15/4
    let p = exceptional_polynomial(&l1(rat(1, 2)), 0).unwrap();
    assert_eq!(p, QPoly::from_coeffs(vec![rat(15, 4), int(5), int(1)]));
    // L2 at generic α, ν = 0: z² + 2αz + α(α+1)
    let p = exceptional_polynomial(&l2(int(3)), 0).unwrap();
    assert_eq!(p, QPoly::from_coeffs(vec![int(12), int(6), int(1)]));
    // L3 at α = 1, ν = 0: −z³/3 (lower coefficients carry the (α−1) factor)
    let p = exceptional_polynomial(&l3(int(1)), 0).unwrap();
    assert_eq!(p, QPoly::from_coeffs(vec![int(0), int(0), int(0), rat(-1, 3)]));
    // X1-Jacobi at (α,β) = (1,3), ν = 0: (3 − z)/2
    let p = exceptional_polynomial(&x1jac(int(1), int(3)), 0).unwrap();
    assert_eq!(p, QPoly::from_coeffs(vec![rat(3, 2), rat(-1, 2)]));
}

#[test]
fn definition_equals_expansion() {
    // Families with a closed-form expansion reconstruct to the defining form,
    // exactly, including the degenerate L2 scale point α = 1.
    for a in alphas() {
        for fam in [x1lag(a.clone()), l1(a.clone()), l2(a.clone()), l3(a.clone())] {
            for nu in 0..=8usize {
                let direct = exceptional_polynomial(&fam, nu).unwrap();
                let exp = expansion_coefficients(&fam, nu).unwrap();
                assert_eq!(direct, exp.reconstruct(&fam.classical_basis()).unwrap());
            }
        }
    }
    for (a, b) in jacobi_params() {
        let fam = x1jac(a, b);
        for nu in 0..=8usize {
            let direct = exceptional_polynomial(&fam, nu).unwrap();
            let exp = expansion_coefficients(&fam, nu).unwrap();
            assert_eq!(direct, exp.reconstruct(&fam.classical_basis()).unwrap());
        }
    }
}

#[test]
fn expansion_agrees_with_generic_projection() {
    // Independent route: leading-term elimination over the classical basis
    // must reproduce the closed-form coefficients.
    let a = rat(3, 2);
    for (fam, shift) in [
        (x1lag(a.clone()), 1usize),
        (l1(a.clone()), 2),
        (l2(a.clone()), 2),
        (l3(a.clone()), 3),
    ] {
        for nu in 0..=6usize {
            let poly = exceptional_polynomial(&fam, nu).unwrap();
            let proj = classical_expansion(&poly, &fam.classical_basis()).unwrap();
            let exp = expansion_coefficients(&fam, nu).unwrap();
            assert_eq!(proj.len(), nu + shift + 1);
            for (k, c) in proj.iter().enumerate() {
                assert_eq!(*c, exp.coeff(k), "family {fam:?} nu={nu} k={k}");
            }
        }
    }
}

#[test]
fn l3_expansion_support_is_five_terms() {
    // Seven terms would be expected from the definition; ν−2 and ν−3 vanish.
    let a = rat(5, 2);
    for nu in 3..=9usize {
        let poly = exceptional_polynomial(&l3(a.clone()), nu).unwrap();
        let proj = classical_expansion(&poly, &ClassicalFamily::Laguerre { alpha: a.clone() })
            .unwrap();
        assert_eq!(proj[nu - 2], int(0));
        assert_eq!(proj[nu - 3], int(0));
        assert!(!proj[nu - 1].is_zero());
        let support = proj.iter().filter(|c| !c.is_zero()).count();
        assert_eq!(support, 5);
    }
}

#[test]
fn operator_actions_match_scaled_polynomials() {
    // Product-form identities: action == scale · polynomial, so vanishing
    // scales stay testable.
    for a in alphas() {
        let lag_m = ClassicalFamily::Laguerre { alpha: a.clone() - int(1) };
        let lag_p = ClassicalFamily::Laguerre { alpha: a.clone() + int(1) };
        for nu in 0..=7usize {
            let n = int(nu as i64);
            let seed_m = lag_m.polynomial(nu).unwrap();
            let seed_p = lag_p.polynomial(nu).unwrap();

            let o1 = build_operator(OperatorKind::LaguerreLinear1, &a, None).unwrap();
            assert_eq!(
                o1.apply(&seed_m),
                exceptional_polynomial(&x1lag(a.clone()), nu).unwrap()
            );

            let o2 = build_operator(OperatorKind::LaguerreLinear2, &a, None).unwrap();
            assert_eq!(
                o2.apply(&seed_p),
                exceptional_polynomial(&x1lag(a.clone()), nu)
                    .unwrap()
                    .scale(&-(n.clone() + a.clone()))
            );

            let q1 = build_operator(OperatorKind::LaguerreQuad1, &a, None).unwrap();
            assert_eq!(
                q1.apply(&seed_m),
                exceptional_polynomial(&l1(a.clone()), nu).unwrap().neg()
            );

            let q2 = build_operator(OperatorKind::LaguerreQuad2, &a, None).unwrap();
            assert_eq!(
                q2.apply(&seed_p),
                exceptional_polynomial(&l2(a.clone()), nu)
                    .unwrap()
                    .scale(&(n.clone() + a.clone() - int(1)))
            );

            let q3 = build_operator(OperatorKind::LaguerreQuad3, &a, None).unwrap();
            assert_eq!(
                q3.apply(&seed_p),
                exceptional_polynomial(&l3(a.clone()), nu)
                    .unwrap()
                    .scale(&(n.clone() + int(3)))
            );
        }
    }

    for (a, b) in jacobi_params() {
        let jac_1 = ClassicalFamily::Jacobi { alpha: a.clone() - int(1), beta: b.clone() + int(1) };
        for nu in 0..=6usize {
            let n = int(nu as i64);
            let seed1 = jac_1.polynomial(nu).unwrap();

            let o1 = build_operator(OperatorKind::JacobiLinear1, &a, Some(&b)).unwrap();
            assert_eq!(
                o1.apply(&seed1),
                exceptional_polynomial(&x1jac(a.clone(), b.clone()), nu)
                    .unwrap()
                    .scale(&(int(2) * (b.clone() - a.clone()) * (b.clone() + n.clone())))
            );
        }
    }

    for (a, b) in quad_jacobi_params() {
        let jac_1 = ClassicalFamily::Jacobi { alpha: a.clone() - int(1), beta: b.clone() + int(1) };
        let jac_3 = ClassicalFamily::Jacobi { alpha: a.clone() + int(1), beta: b.clone() + int(1) };
        for nu in 0..=6usize {
            let n = int(nu as i64);
            let seed1 = jac_1.polynomial(nu).unwrap();
            let seed3 = jac_3.polynomial(nu).unwrap();

            let t1 = build_operator(OperatorKind::JacobiQuad1, &a, Some(&b)).unwrap();
            let dm = b.clone() - a.clone();
            let scale = int(4)
                * (dm.clone() - int(1))
                * (dm.clone() - int(2))
                * (dm.clone() - int(2))
                * (n.clone() + b.clone() - int(1));
            assert_eq!(
                t1.apply(&seed1),
                exceptional_polynomial(&p1(a.clone(), b.clone()), nu).unwrap().scale(&scale)
            );

            let t3 = build_operator(OperatorKind::JacobiQuad3, &a, Some(&b)).unwrap();
            let sp = b.clone() + a.clone();
            let scale = int(8)
                * (sp.clone() - int(1))
                * (sp.clone() - int(2))
                * (sp.clone() - int(2))
                * (sp.clone() + n.clone());
            assert_eq!(
                t3.apply(&seed3),
                exceptional_polynomial(&p3(a.clone(), b.clone()), nu).unwrap().scale(&scale)
            );
        }
    }
}

#[test]
fn linear_jacobi_mirror_symmetry() {
    // Ô₂^{(α,β)} is −M Ô₁^{(β,α)} M; both sides are built independently here.
    for (a, b) in jacobi_params() {
        let o2 = build_operator::<Q>(OperatorKind::JacobiLinear2, &a, Some(&b)).unwrap();
        let o1_swapped = build_operator::<Q>(OperatorKind::JacobiLinear1, &b, Some(&a)).unwrap();
        let mirrored = o1_swapped.mirror_conjugate();
        assert_eq!(o2.p, mirrored.p.neg());
        assert_eq!(o2.q, mirrored.q.neg());
    }
}

#[test]
fn quadratic_mirror_action_reaches_swapped_p1() {
    // Õ₂^{(α,β)} applied to P^{(α+1,β−1)}_ν lands on the mirrored swapped-
    // parameter P1 family, which is how the case II wavefunction polynomial
    // arises.
    for (a, b) in quad_jacobi_params() {
        // need β−1 > −1 for the seed
        if !(b.clone() - int(1) > int(-1)) {
            continue;
        }
        let seed_fam =
            ClassicalFamily::Jacobi { alpha: a.clone() + int(1), beta: b.clone() - int(1) };
        for nu in 0..=10usize {
            let n = int(nu as i64);
            let o2 = build_operator(OperatorKind::JacobiQuad2, &a, Some(&b)).unwrap();
            let got = o2.apply(&seed_fam.polynomial(nu).unwrap());
            // (−1)^{ν+1} 4(α−β−1)(α−β−2)²(ν+α−1) · M[P̃₁^{(β,α)}]
            let dm = a.clone() - b.clone();
            let scale = int(4)
                * (dm.clone() - int(1))
                * (dm.clone() - int(2))
                * (dm.clone() - int(2))
                * (n.clone() + a.clone() - int(1))
                * int(if nu % 2 == 0 { -1 } else { 1 });
            let swapped = exceptional_polynomial(&p1(b.clone(), a.clone()), nu).unwrap();
            assert_eq!(got, swapped.compose_neg().scale(&scale));
        }
    }
}

#[test]
fn x1jacobi_reflection() {
    // P̂^{(β,α)}_{ν+1}(−z) = (−1)^{ν+1} P̂^{(α,β)}_{ν+1}(z)
    for (a, b) in jacobi_params() {
        for nu in 0..=8usize {
            let lhs = exceptional_polynomial(&x1jac(b.clone(), a.clone()), nu)
                .unwrap()
                .compose_neg();
            let rhs = exceptional_polynomial(&x1jac(a.clone(), b.clone()), nu)
                .unwrap()
                .scale(&int(if nu % 2 == 0 { -1 } else { 1 }));
            assert_eq!(lhs, rhs);
        }
    }
}

#[test]
fn degrees_and_leading_coefficients() {
    for nu in 0..=15usize {
        let fams: Vec<ExceptionalFamily<Q>> = vec![
            x1lag(rat(1, 2)),
            l1(rat(7, 3)),
            l2(int(1)),
            l3(rat(3, 2)),
            x1jac(int(1), int(3)),
            p1(rat(1, 2), rat(9, 2)),
            p3(rat(2, 3), rat(11, 3)),
        ];
        for fam in fams {
            let p = exceptional_polynomial(&fam, nu).unwrap();
            assert_eq!(p.degree(), Some(fam.degree_of(nu)), "{fam:?} nu={nu}");
            assert_eq!(
                p.leading_coeff().cloned().unwrap(),
                fam.leading_coeff(nu),
                "{fam:?} nu={nu}"
            );
        }
    }
}

#[test]
fn operator_on_constants_and_zero() {
    let a = rat(3, 2);
    let o1 = build_operator::<Q>(OperatorKind::LaguerreLinear1, &a, None).unwrap();
    // Ô₁ 1 = −z − α − 1 = L̂₁
    assert_eq!(o1.apply(&QPoly::one()), fx::x1_laguerre_1(&a));
    assert_eq!(o1.apply(&QPoly::zero()), QPoly::zero());
    // Ô₁^{(α,β)} 1 = 2(β−α)β P̂₁ at ν = 0
    let (a, b) = (int(1), int(3));
    let oj = build_operator::<Q>(OperatorKind::JacobiLinear1, &a, Some(&b)).unwrap();
    assert_eq!(
        oj.apply(&QPoly::one()),
        fx::x1_jacobi_1(&a, &b).scale(&(int(2) * (b.clone() - a.clone()) * b.clone()))
    );
}

#[test]
fn beta_to_alpha_limit() {
    // Exact: the limit equals the stated Gegenbauer multiple.
    for nu in 0..=8usize {
        for a in [rat(1, 2), int(1), rat(7, 4), int(3)] {
            let lim = limit_beta_to_alpha(nu, &a).unwrap();
            let rhs = gegenbauer_limit_rhs(nu, &a).unwrap();
            assert_eq!(lim, rhs, "nu={nu} alpha={a:?}");
        }
    }
    // ν=0, α=1: the limit is the constant 2.
    assert_eq!(limit_beta_to_alpha(0, &int(1)).unwrap(), QPoly::constant(int(2)));
}

#[test]
fn beta_to_alpha_limit_matches_family_numerically() {
    // |(β−α) P̂^{(α,β)}_{ν+1} − limit| = O(β−α) at sampled z.
    let a = 1.25f64;
    let nu = 3usize;
    let lim = limit_beta_to_alpha(nu, &a).unwrap();
    let mut errs = Vec::new();
    for k in 2..=4u32 {
        let eps = 10f64.powi(-(k as i32));
        let fam = ExceptionalFamily::X1Jacobi { alpha: a, beta: a + eps };
        let p = exceptional_polynomial(&fam, nu).unwrap().scale(&eps);
        let err = (-9..=9)
            .map(|i| {
                let z = i as f64 / 10.0;
                (p.eval(&z) - lim.eval(&z)).abs()
            })
            .fold(0.0f64, f64::max);
        errs.push(err);
    }
    for w in errs.windows(2) {
        let rate = (w[0] / w[1]).log10();
        assert!((rate - 1.0).abs() < 0.2, "rate {rate}");
    }
}

#[test]
fn alpha_to_zero_limit() {
    // The α→0 member of the family itself (regular there) equals the stated
    // (1−z)² multiple of P^{(2,β)}_{ν−1}.
    for nu in 1..=8usize {
        for b in [int(2), rat(5, 2), rat(11, 3)] {
            let stated = limit_alpha_to_zero(nu, &b).unwrap();
            let at_zero = exceptional_polynomial(&x1jac(int(0), b.clone()), nu).unwrap();
            assert_eq!(stated, at_zero, "nu={nu} beta={b:?}");
        }
    }
    // ν=1, β=2 → −(1−z)²
    let p = limit_alpha_to_zero(1, &int(2)).unwrap();
    assert_eq!(p, QPoly::from_coeffs(vec![int(-1), int(2), int(-1)]));
    // double root at z = 1
    assert!(p.eval(&int(1)).is_zero());
    assert!(p.derivative().eval(&int(1)).is_zero());
    assert!(limit_alpha_to_zero(0, &int(2)).is_err());
}

#[test]
fn alpha_to_zero_numeric_convergence() {
    let b = 2.5f64;
    let nu = 2usize;
    let lim = limit_alpha_to_zero(nu, &b).unwrap();
    let mut errs = Vec::new();
    for k in 2..=4u32 {
        let eps = 10f64.powi(-(k as i32));
        let fam = ExceptionalFamily::X1Jacobi { alpha: eps, beta: b };
        let p = exceptional_polynomial(&fam, nu).unwrap();
        let err = (-9..=9)
            .map(|i| {
                let z = i as f64 / 10.0;
                (p.eval(&z) - lim.eval(&z)).abs()
            })
            .fold(0.0f64, f64::max);
        errs.push(err);
    }
    for w in errs.windows(2) {
        let rate = (w[0] / w[1]).log10();
        assert!((rate - 1.0).abs() < 0.2, "rate {rate}");
    }
}

#[test]
fn singular_and_unsupported_parameters() {
    assert!(matches!(
        exceptional_polynomial(&x1jac(int(2), int(2)), 1),
        Err(XPolyError::SingularParameter(_))
    ));
    // P1 needs β−α ∉ {1, 2} and ν+β ≠ 1
    assert!(matches!(
        exceptional_polynomial(&p1(int(1), int(2)), 0),
        Err(XPolyError::SingularParameter(_))
    ));
    assert!(matches!(
        expansion_coefficients(&p1(int(1), int(4)), 0),
        Err(XPolyError::Unsupported(_))
    ));
    assert!(matches!(
        expansion_coefficients(&p3(int(1), int(4)), 0),
        Err(XPolyError::Unsupported(_))
    ));
    assert!(exceptional_polynomial(&x1lag(int(-2)), 0).is_err());
}

#[test]
fn x1jacobi_regular_at_zero_parameter_sum() {
    // β = −α is transiently singular in the raw ν=0 formulas; the cancelled
    // forms must be regular.
    let (a, b) = (rat(-1, 2), rat(1, 2));
    let p = exceptional_polynomial(&x1jac(a.clone(), b.clone()), 0).unwrap();
    assert_eq!(p, fx::x1_jacobi_1(&a, &b));
    let e = expansion_coefficients(&x1jac(a.clone(), b.clone()), 0).unwrap();
    assert_eq!(
        e.reconstruct(&ClassicalFamily::Jacobi { alpha: a, beta: b }).unwrap(),
        p
    );
}
