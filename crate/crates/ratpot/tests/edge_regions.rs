//! Valid-parameter edge regions: levels below zero, gate-adjacent Scarf
//! couplings. The representative-parameter suites live inside the crate;
//! these probe the awkward corners.

use ratpot::potentials::{Family, PotentialModel, QuadCase};
use ratpot::spectral::{fd_eigensolve, schrodinger_residual, GridSpec};
use ratpot::wavefunctions::{eigenfunction, gram_matrix, norm_integral, susy_map_check};

#[test]
fn small_l_case_iii_negative_extra_level() {
    // l = 0.75: the extra level sits at ω(l−7/2) = −2.75, below zero
    let m = PotentialModel::new(Family::ExtRadialQuad { omega: 1.0, l: 0.75, case: QuadCase::III })
        .unwrap();
    let spec = m.analytic_spectrum(3);
    assert!((spec[0] + 2.75).abs() < 1e-12);
    let rep = fd_eigensolve(&m, &GridSpec::for_model(&m, 4000, 3), 3).unwrap();
    assert!(rep.max_abs_error.unwrap() < 5e-3);
    for nu in 0..=4 {
        let wf = eigenfunction(&m, nu).unwrap();
        let r = schrodinger_residual(&m, &wf).unwrap();
        let n = norm_integral(&wf).unwrap();
        assert!(r < 1e-10 && (n - 1.0).abs() < 1e-8);
    }
    for nu in 0..=2 {
        let r = susy_map_check(&m, nu).unwrap();
        assert!(r < 1e-9);
    }
    let g = gram_matrix(&m, 4).unwrap();
    for (i, row) in g.iter().enumerate() {
        for (j, v) in row.iter().enumerate() {
            let e = if i == j { 1.0 } else { 0.0 };
            assert!((v - e).abs() < 1e-8, "G[{i}][{j}]={v}");
        }
    }
}

#[test]
fn near_boundary_scarf_families() {
    // A−B barely above the gate floor for each family
    for (f, label) in [
        (Family::ExtScarfLinear { a: 2.2, b: 1.15 }, "linear, B near A-1"),
        (Family::ExtScarfQuad { a: 3.3, b: 2.25, case: QuadCase::I }, "case I, B near A-1"),
        (Family::ExtScarfQuad { a: 2.0, b: 0.45, case: QuadCase::II }, "case II, B near A-3/2"),
        (Family::ExtScarfQuad { a: 2.0, b: 0.45, case: QuadCase::III }, "case III, B near A-3/2"),
    ] {
        let m = PotentialModel::new(f).unwrap();
        for nu in 0..=3 {
            let wf = eigenfunction(&m, nu).unwrap();
            let r = schrodinger_residual(&m, &wf).unwrap();
            let n = norm_integral(&wf).unwrap();
            assert!(r < 1e-10, "{label}");
            assert!((n - 1.0).abs() < 1e-8, "{label}");
        }
        for nu in 0..=2 {
            let r = susy_map_check(&m, nu).unwrap();
            assert!(r < 1e-9, "{label}");
        }
    }
}
