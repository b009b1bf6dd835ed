use super::*;
use crate::potentials::{Family, LinearBranch, QuadCase};
use crate::wavefunctions::eigenfunction;

fn model(f: Family) -> PotentialModel {
    PotentialModel::new(f).unwrap()
}

#[test]
fn fd_matches_analytic_radial_spectrum() {
    let m = model(Family::RadialOsc { omega: 1.0, l: 1.0 });
    let rep = fd_eigensolve(&m, &GridSpec::radial(20.0, 4000), 3).unwrap();
    for (got, expect) in rep.eigenvalues.iter().zip([2.5, 4.5, 6.5]) {
        assert!((got - expect).abs() < 2e-3, "{got} vs {expect}");
    }
    assert!(rep.max_abs_error.unwrap() < 2e-3);
    assert!(rep.warning.is_none());
}

#[test]
fn fd_confirms_strict_isospectrality_of_linear_extension() {
    let m = model(Family::ExtRadialLinear { omega: 1.0, l: 1.0, branch: LinearBranch::Lower });
    let rep = fd_eigensolve(&m, &GridSpec::radial(20.0, 4000), 3).unwrap();
    for (got, expect) in rep.eigenvalues.iter().zip([2.5, 4.5, 6.5]) {
        assert!((got - expect).abs() < 2e-3, "{got} vs {expect}");
    }
}

#[test]
fn fd_finds_scarf_extra_level() {
    let m = model(Family::ExtScarfQuad { a: 4.0, b: 0.3, case: QuadCase::III });
    let rep = fd_eigensolve(&m, &GridSpec::scarf(4000), 3).unwrap();
    for (got, expect) in rep.eigenvalues.iter().zip([4.0, 25.0, 36.0]) {
        assert!((got - expect).abs() < 5e-3, "{got} vs {expect}");
    }
}

#[test]
fn fd_finds_radial_extra_level_below_start_tower() {
    let m = model(Family::ExtRadialQuad { omega: 1.0, l: 5.0, case: QuadCase::III });
    let grid = GridSpec::for_model(&m, 4000, 4);
    let rep = fd_eigensolve(&m, &grid, 4).unwrap();
    // extra level at ω(l−7/2) = 1.5, then the (l+1) tower 7.5, 9.5, 11.5
    assert!((rep.eigenvalues[0] - 1.5).abs() < 5e-3, "{:?}", rep.eigenvalues);
    let start = m.start_model().unwrap();
    let start_rep = fd_eigensolve(&start, &grid, 3).unwrap();
    let below: usize = rep
        .eigenvalues
        .iter()
        .filter(|e| **e < start_rep.eigenvalues[0] - 0.5)
        .count();
    assert_eq!(below, 1, "exactly one level below the start ground state");
    for (e_ext, e_start) in rep.eigenvalues[1..].iter().zip(&start_rep.eigenvalues) {
        assert!((e_ext - e_start).abs() < 5e-3);
    }
}

#[test]
fn orthogonality_matrices_from_spec_examples() {
    for f in [
        Family::RadialOsc { omega: 1.0, l: 0.0 },
        Family::ExtRadialQuad { omega: 1.0, l: 2.0, case: QuadCase::II },
        Family::ExtScarfLinear { a: 3.0, b: 1.0 },
    ] {
        let m = model(f);
        let g = orthogonality_matrix(&m, 4).unwrap();
        for (i, row) in g.iter().enumerate() {
            for (j, v) in row.iter().enumerate() {
                let expect = if i == j { 1.0 } else { 0.0 };
                assert!(
                    (v - expect).abs() < 1e-8,
                    "{} G[{i}][{j}] = {v}",
                    m.describe()
                );
                // symmetric by construction
                assert!((v - g[j][i]).abs() <= 1e-12);
            }
        }
    }
}

#[test]
fn schrodinger_residuals_via_the_oracle() {
    let conventional = model(Family::RadialOsc { omega: 1.0, l: 0.0 });
    for nu in 0..=5 {
        let wf = eigenfunction(&conventional, nu).unwrap();
        assert!(schrodinger_residual(&conventional, &wf).unwrap() < 1e-10);
    }
    for m in crate::susy::representative_extended_models() {
        for nu in 0..=5 {
            let wf = eigenfunction(&m, nu).unwrap();
            let r = schrodinger_residual(&m, &wf).unwrap();
            assert!(r < 1e-10, "{} nu={nu}: {r}", m.describe());
        }
    }
    // sensitivity control: a wrong energy must be loud
    let mut wf = eigenfunction(&conventional, 0).unwrap();
    wf.energy += 0.1;
    assert!(schrodinger_residual(&conventional, &wf).unwrap() > 1e-3);
}

#[test]
fn convergence_is_second_order() {
    let grids = [
        GridSpec::radial(14.0, 500),
        GridSpec::radial(14.0, 1000),
        GridSpec::radial(14.0, 2000),
    ];
    let rep = convergence_order(&model(Family::RadialOsc { omega: 1.0, l: 1.0 }), &grids)
        .unwrap();
    assert!(rep.reliable);
    assert!((rep.order - 2.0).abs() < 0.2, "order {}", rep.order);

    let grids = [GridSpec::scarf(500), GridSpec::scarf(1000), GridSpec::scarf(2000)];
    let rep = convergence_order(&model(Family::Scarf1 { a: 2.0, b: 0.5 }), &grids).unwrap();
    assert!(rep.reliable);
    assert!((rep.order - 2.0).abs() < 0.2, "order {}", rep.order);
}

#[test]
fn refinement_is_monotone() {
    let m = model(Family::RadialOsc { omega: 1.0, l: 1.0 });
    let exact = 2.5;
    let coarse = fd_eigensolve(&m, &GridSpec::radial(14.0, 1000), 1).unwrap();
    let fine = fd_eigensolve(&m, &GridSpec::radial(14.0, 4000), 1).unwrap();
    assert!((fine.eigenvalues[0] - exact).abs() < (coarse.eigenvalues[0] - exact).abs());
}

#[test]
fn eigenvector_tabulation_is_normalized() {
    let m = model(Family::RadialOsc { omega: 1.0, l: 1.0 });
    let grid = GridSpec::radial(16.0, 800);
    let tab = fd_eigenvector(&m, &grid, 0).unwrap();
    let h = grid.spacing();
    let norm: f64 = tab.iter().map(|(_, p)| p * p * h).sum();
    assert!((norm - 1.0).abs() < 1e-10);
    // compare against the analytic ground state up to sign
    let wf = eigenfunction(&m, 0).unwrap();
    let mut dot = 0.0;
    for (x, p) in &tab {
        dot += p * wf.eval(*x).unwrap();
    }
    let sign = dot.signum();
    let mut worst = 0.0f64;
    for (x, p) in &tab {
        worst = worst.max((sign * p - wf.eval(*x).unwrap()).abs());
    }
    assert!(worst < 5e-4, "worst {worst}");
}

#[test]
fn grid_and_input_validation() {
    let m = model(Family::RadialOsc { omega: 1.0, l: 1.0 });
    assert!(matches!(
        fd_eigensolve(&m, &GridSpec::radial(20.0, 50), 1),
        Err(SpectralError::Grid(_))
    ));
    assert!(fd_eigensolve(&m, &GridSpec::radial(20.0, 4000), 0).is_err());
    // grid outside the open domain
    let bad = GridSpec { x_min: -1.0, x_max: 10.0, n: 500 };
    assert!(fd_eigensolve(&m, &bad, 1).is_err());
    // warning when the level count strains the grid
    let rep = fd_eigensolve(&m, &GridSpec::radial(25.0, 200), 30).unwrap();
    assert!(rep.warning.is_some());
    // convergence preconditions
    assert!(convergence_order(&m, &[GridSpec::radial(14.0, 500)]).is_err());
    let bad_ratio = [
        GridSpec::radial(14.0, 500),
        GridSpec::radial(14.0, 800),
        GridSpec::radial(14.0, 1600),
    ];
    assert!(convergence_order(&m, &bad_ratio).is_err());
}

#[test]
fn report_serializes() {
    let m = model(Family::RadialOsc { omega: 1.0, l: 0.0 });
    let rep = fd_eigensolve(&m, &GridSpec::radial(14.0, 400), 2).unwrap();
    let json = serde_json::to_value(&rep).unwrap();
    assert!(json["eigenvalues"].is_array());
    assert!(json["grid"]["n"].as_u64() == Some(400));
}
