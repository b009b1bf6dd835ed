//! Verification suites: every claim the construction makes, run end to end
//! and reported as {check, params, value, tolerance, pass} records. The
//! acceptance test target and the CLI `verify` command both drive these.

pub mod fixtures;

use serde::Serialize;

use crate::orthopoly::{ClassicalFamily, Polynomial};
use crate::potentials::{
    table1_memberships, Family, LinearBranch, PotentialModel, QuadCase, TABLE1,
};
use crate::scalar::{rat, Rational};
use crate::spectral::{fd_eigensolve, GridSpec};
use crate::susy::{representative_extended_models, shape_invariance_report};
use crate::wavefunctions::{eigenfunction, linear_branch_agreement, susy_map_check};
use crate::xpoly::{
    classical_expansion, exceptional_polynomial, expansion_coefficients, gegenbauer_limit_rhs,
    limit_alpha_to_zero, limit_beta_to_alpha, ExceptionalFamily,
};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Suite {
    Polynomials,
    Identities,
    Residuals,
    Isospectrality,
    ExtraLevels,
    Orthonormality,
    ShapeInvariance,
    Limits,
    SusyMap,
    Gates,
}

impl Suite {
    pub const ALL: [Suite; 10] = [
        Suite::Polynomials,
        Suite::Identities,
        Suite::Residuals,
        Suite::Isospectrality,
        Suite::ExtraLevels,
        Suite::Orthonormality,
        Suite::ShapeInvariance,
        Suite::Limits,
        Suite::SusyMap,
        Suite::Gates,
    ];

    pub fn name(&self) -> &'static str {
        match self {
            Suite::Polynomials => "polynomials",
            Suite::Identities => "identities",
            Suite::Residuals => "residuals",
            Suite::Isospectrality => "isospectrality",
            Suite::ExtraLevels => "extra-levels",
            Suite::Orthonormality => "orthonormality",
            Suite::ShapeInvariance => "shape-invariance",
            Suite::Limits => "limits",
            Suite::SusyMap => "susy-map",
            Suite::Gates => "gates",
        }
    }

    pub fn from_name(s: &str) -> Option<Suite> {
        Suite::ALL.iter().copied().find(|v| v.name() == s)
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct VerifyRecord {
    pub check: String,
    pub params: String,
    pub value: f64,
    pub tolerance: f64,
    pub pass: bool,
}

fn rec(check: &str, params: impl Into<String>, value: f64, tolerance: f64) -> VerifyRecord {
    VerifyRecord {
        check: check.to_string(),
        params: params.into(),
        value,
        tolerance,
        pass: value.is_finite() && value <= tolerance,
    }
}

/// Deterministic xorshift draws so every run verifies the same instances.
struct Draws(u64);

impl Draws {
    fn new(seed: u64) -> Self {
        Draws(seed)
    }
    fn next(&mut self) -> f64 {
        self.0 ^= self.0 << 13;
        self.0 ^= self.0 >> 7;
        self.0 ^= self.0 << 17;
        (self.0 >> 11) as f64 / (1u64 << 53) as f64
    }
    fn in_range(&mut self, lo: f64, hi: f64) -> f64 {
        lo + (hi - lo) * self.next()
    }
}

pub fn run_suite(suite: Suite) -> Vec<VerifyRecord> {
    match suite {
        Suite::Polynomials => polynomials(),
        Suite::Identities => identities(),
        Suite::Residuals => residuals(),
        Suite::Isospectrality => isospectrality(),
        Suite::ExtraLevels => extra_levels(),
        Suite::Orthonormality => orthonormality(),
        Suite::ShapeInvariance => shape_invariance(),
        Suite::Limits => limits(),
        Suite::SusyMap => susy_map(),
        Suite::Gates => gates(),
    }
}

pub fn run_all() -> Vec<VerifyRecord> {
    Suite::ALL.iter().flat_map(|s| run_suite(*s)).collect()
}

fn rational_alphas() -> Vec<Rational> {
    vec![
        rat(1, 2),
        rat(2, 3),
        rat(1, 1),
        rat(5, 4),
        rat(3, 2),
        rat(7, 4),
        rat(2, 1),
        rat(7, 3),
        rat(3, 1),
        rat(9, 2),
    ]
}

fn rational_jacobi_pairs() -> Vec<(Rational, Rational)> {
    vec![
        (rat(1, 1), rat(3, 1)),
        (rat(1, 2), rat(9, 2)),
        (rat(2, 3), rat(11, 3)),
        (rat(2, 1), rat(13, 2)),
        (rat(5, 4), rat(21, 4)),
        (rat(1, 3), rat(10, 3)),
        (rat(3, 2), rat(6, 1)),
        (rat(1, 1), rat(17, 4)),
        (rat(3, 4), rat(4, 1)),
        (rat(5, 2), rat(8, 1)),
    ]
}

/// Criterion 1: every low-degree closed-form table entry is reproduced with
/// exact-rational coefficient equality.
fn polynomials() -> Vec<VerifyRecord> {
    let mut laguerre_mismatches = 0usize;
    let mut checked_l = 0usize;
    for a in rational_alphas() {
        type Fix = fn(&Rational) -> Polynomial<Rational>;
        let table: Vec<(ExceptionalFamily<Rational>, usize, Fix)> = vec![
            (ExceptionalFamily::X1Laguerre { alpha: a.clone() }, 0, fixtures::x1_laguerre_1),
            (ExceptionalFamily::X1Laguerre { alpha: a.clone() }, 1, fixtures::x1_laguerre_2),
            (ExceptionalFamily::X1Laguerre { alpha: a.clone() }, 2, fixtures::x1_laguerre_3),
            (ExceptionalFamily::L1 { alpha: a.clone() }, 0, fixtures::l1_2),
            (ExceptionalFamily::L1 { alpha: a.clone() }, 1, fixtures::l1_3),
            (ExceptionalFamily::L1 { alpha: a.clone() }, 2, fixtures::l1_4),
            (ExceptionalFamily::L2 { alpha: a.clone() }, 0, fixtures::l2_2),
            (ExceptionalFamily::L2 { alpha: a.clone() }, 1, fixtures::l2_3),
            (ExceptionalFamily::L2 { alpha: a.clone() }, 2, fixtures::l2_4),
            (ExceptionalFamily::L3 { alpha: a.clone() }, 0, fixtures::l3_3),
            (ExceptionalFamily::L3 { alpha: a.clone() }, 1, fixtures::l3_4),
            (ExceptionalFamily::L3 { alpha: a.clone() }, 2, fixtures::l3_5),
        ];
        for (fam, nu, fix) in table {
            checked_l += 1;
            if exceptional_polynomial(&fam, nu).ok().as_ref() != Some(&fix(&a)) {
                laguerre_mismatches += 1;
            }
        }
        // the classical table alongside
        checked_l += 1;
        let lag = ClassicalFamily::Laguerre { alpha: a.clone() };
        if lag.polynomial(2).ok().as_ref() != Some(&fixtures::laguerre_2(&a)) {
            laguerre_mismatches += 1;
        }
    }
    let mut jacobi_mismatches = 0usize;
    let mut checked_j = 0usize;
    for (a, b) in rational_jacobi_pairs() {
        type JFix = fn(&Rational, &Rational) -> Polynomial<Rational>;
        let mut table: Vec<(ExceptionalFamily<Rational>, usize, JFix)> = vec![
            (
                ExceptionalFamily::X1Jacobi { alpha: a.clone(), beta: b.clone() },
                0,
                fixtures::x1_jacobi_1,
            ),
            (
                ExceptionalFamily::X1Jacobi { alpha: a.clone(), beta: b.clone() },
                1,
                fixtures::x1_jacobi_2,
            ),
        ];
        let dm = b.clone() - a.clone();
        if dm != rat(1, 1) && dm != rat(2, 1) {
            table.extend([
                (
                    ExceptionalFamily::P1 { alpha: a.clone(), beta: b.clone() },
                    0,
                    fixtures::p1_2 as JFix,
                ),
                (ExceptionalFamily::P1 { alpha: a.clone(), beta: b.clone() }, 1, fixtures::p1_3),
                (ExceptionalFamily::P3 { alpha: a.clone(), beta: b.clone() }, 0, fixtures::p3_3),
                (ExceptionalFamily::P3 { alpha: a.clone(), beta: b.clone() }, 1, fixtures::p3_4),
            ]);
        }
        for (fam, nu, fix) in table {
            checked_j += 1;
            if exceptional_polynomial(&fam, nu).ok().as_ref() != Some(&fix(&a, &b)) {
                jacobi_mismatches += 1;
            }
        }
    }
    vec![
        rec(
            "fixtures/laguerre-type",
            format!("{checked_l} table entries, exact"),
            laguerre_mismatches as f64,
            0.0,
        ),
        rec(
            "fixtures/jacobi-type",
            format!("{checked_j} table entries, exact"),
            jacobi_mismatches as f64,
            0.0,
        ),
    ]
}

/// Criterion 2: defining relations agree with the classical-basis
/// expansions, exactly, for ν ≤ 15 over 10 rational parameter values.
fn identities() -> Vec<VerifyRecord> {
    let mut out = Vec::new();
    let mut mismatches = 0usize;
    let mut checked = 0usize;
    for a in rational_alphas() {
        let fams = [
            ExceptionalFamily::X1Laguerre { alpha: a.clone() },
            ExceptionalFamily::L1 { alpha: a.clone() },
            ExceptionalFamily::L2 { alpha: a.clone() },
            ExceptionalFamily::L3 { alpha: a.clone() },
        ];
        for fam in fams {
            for nu in 0..=15usize {
                checked += 1;
                let ok = match (
                    exceptional_polynomial(&fam, nu),
                    expansion_coefficients(&fam, nu),
                ) {
                    (Ok(direct), Ok(exp)) => {
                        exp.reconstruct(&fam.classical_basis()).ok() == Some(direct)
                    }
                    _ => false,
                };
                if !ok {
                    mismatches += 1;
                }
            }
        }
    }
    out.push(rec(
        "identities/laguerre-definition-vs-expansion",
        format!("{checked} cases, nu <= 15, exact"),
        mismatches as f64,
        0.0,
    ));

    let mut mismatches = 0usize;
    let mut checked = 0usize;
    for (a, b) in rational_jacobi_pairs() {
        let fam = ExceptionalFamily::X1Jacobi { alpha: a.clone(), beta: b.clone() };
        for nu in 0..=15usize {
            checked += 1;
            let ok = match (exceptional_polynomial(&fam, nu), expansion_coefficients(&fam, nu))
            {
                (Ok(direct), Ok(exp)) => {
                    exp.reconstruct(&fam.classical_basis()).ok() == Some(direct)
                }
                _ => false,
            };
            if !ok {
                mismatches += 1;
            }
        }
    }
    out.push(rec(
        "identities/x1-jacobi-definition-vs-expansion",
        format!("{checked} cases, nu <= 15, exact"),
        mismatches as f64,
        0.0,
    ));

    // L3's classical expansion drops the ν−2 and ν−3 coefficients
    let mut bad = 0usize;
    let mut checked = 0usize;
    for a in [rat(1, 2), rat(3, 2), rat(7, 3)] {
        for nu in 3..=15usize {
            checked += 1;
            let poly =
                exceptional_polynomial(&ExceptionalFamily::L3 { alpha: a.clone() }, nu).unwrap();
            let proj =
                classical_expansion(&poly, &ClassicalFamily::Laguerre { alpha: a.clone() })
                    .unwrap();
            let zero = Rational::from_integer(0.into());
            if proj[nu - 2] != zero || proj[nu - 3] != zero {
                bad += 1;
            }
        }
    }
    out.push(rec(
        "identities/l3-vanishing-coefficients",
        format!("{checked} cases, exact"),
        bad as f64,
        0.0,
    ));
    out
}

/// Criterion 3: Schrödinger residuals of every analytic eigenfunction.
fn residuals() -> Vec<VerifyRecord> {
    let mut models = vec![
        PotentialModel::new(Family::RadialOsc { omega: 1.0, l: 0.0 }).expect("valid"),
        PotentialModel::new(Family::Scarf1 { a: 2.0, b: 0.5 }).expect("valid"),
    ];
    models.extend(representative_extended_models());
    models
        .into_iter()
        .map(|m| {
            let mut worst = 0.0f64;
            for nu in 0..=5usize {
                match eigenfunction(&m, nu)
                    .map_err(|e| e.to_string())
                    .and_then(|wf| {
                        crate::spectral::schrodinger_residual(&m, &wf)
                            .map_err(|e| e.to_string())
                    }) {
                    Ok(r) => worst = worst.max(r),
                    Err(_) => worst = f64::INFINITY,
                }
            }
            rec("schrodinger-residual", m.describe(), worst, 1e-10)
        })
        .collect()
}

struct IsoFamily {
    name: &'static str,
    sample: Box<dyn FnMut(&mut Draws) -> Family>,
}

fn iso_families() -> Vec<IsoFamily> {
    // draws stay inside the gates with a margin so the FD truncation error
    // keeps to its calibrated scale; the boundaries themselves are the
    // gates suite's business
    vec![
        IsoFamily {
            name: "radial-ext-linear",
            sample: Box::new(|d: &mut Draws| Family::ExtRadialLinear {
                omega: d.in_range(0.6, 1.6),
                l: d.in_range(0.8, 4.0),
                branch: LinearBranch::Lower,
            }),
        },
        IsoFamily {
            name: "radial-ext-quad-I",
            sample: Box::new(|d: &mut Draws| Family::ExtRadialQuad {
                omega: d.in_range(0.6, 1.6),
                l: d.in_range(0.8, 4.0),
                case: QuadCase::I,
            }),
        },
        IsoFamily {
            name: "radial-ext-quad-II",
            sample: Box::new(|d: &mut Draws| Family::ExtRadialQuad {
                omega: d.in_range(0.6, 1.6),
                l: d.in_range(0.8, 4.0),
                case: QuadCase::II,
            }),
        },
        IsoFamily {
            name: "scarf-ext-linear",
            sample: Box::new(|d: &mut Draws| {
                let a = d.in_range(2.8, 5.5);
                Family::ExtScarfLinear { a, b: d.in_range(0.2, a - 1.3) }
            }),
        },
        IsoFamily {
            name: "scarf-ext-quad-I",
            sample: Box::new(|d: &mut Draws| {
                let a = d.in_range(3.2, 6.0);
                Family::ExtScarfQuad { a, b: d.in_range(1.1, a - 1.3), case: QuadCase::I }
            }),
        },
        IsoFamily {
            name: "scarf-ext-quad-II",
            sample: Box::new(|d: &mut Draws| {
                let a = d.in_range(3.2, 6.0);
                Family::ExtScarfQuad { a, b: d.in_range(0.2, a - 1.7), case: QuadCase::II }
            }),
        },
    ]
}

/// Criterion 4: FD isospectrality of the strictly isospectral extensions
/// against their start models, 20 draws per family, within 10× the
/// calibrated FD error.
fn isospectrality() -> Vec<VerifyRecord> {
    let mut out = Vec::new();
    let mut draws = Draws::new(0x5eed_cafe_f00d_0001);
    for mut fam in iso_families() {
        let mut worst_margin = 0.0f64;
        for _ in 0..20 {
            let f = (fam.sample)(&mut draws);
            let ext = PotentialModel::new(f).expect("draws stay inside the gates");
            let start = ext.start_model().expect("extended models have starts");
            let grid = GridSpec::for_model(&ext, 4000, 4);
            let (Ok(rep_ext), Ok(rep_start)) = (
                fd_eigensolve(&ext, &grid, 4),
                fd_eigensolve(&start, &grid, 4),
            ) else {
                worst_margin = f64::INFINITY;
                continue;
            };
            // calibration: the start model is conventional, its spectrum is
            // known exactly
            let analytic = start.analytic_spectrum(4);
            let err_cal = rep_start
                .eigenvalues
                .iter()
                .zip(&analytic)
                .map(|(f, a)| (f - a).abs())
                .fold(0.0f64, f64::max);
            let tol = 10.0 * err_cal.max(1e-5);
            // case ii: spectrum(V_ext) = spectrum(start) − additive constant
            let shift = -ext.additive_constant();
            for k in 0..4 {
                let diff =
                    (rep_ext.eigenvalues[k] - (rep_start.eigenvalues[k] + shift)).abs();
                worst_margin = worst_margin.max(diff / tol);
            }
        }
        out.push(rec(
            "fd-isospectrality",
            format!("{} x 20 draws, first 4 levels", fam.name),
            worst_margin,
            1.0,
        ));
    }
    out
}

/// Criterion 5: the extra-bound-state families show exactly one FD level
/// below the start tower, at ω(l−7/2) or (A−2)² within 5e-3.
fn extra_levels() -> Vec<VerifyRecord> {
    let mut out = Vec::new();
    let mut draws = Draws::new(0x5eed_cafe_f00d_0002);
    let mut run = |name: &str, instances: Vec<Family>, expected: Box<dyn Fn(&Family) -> f64>| {
        let mut worst = 0.0f64;
        let mut count_ok = true;
        for f in instances {
            let ext = PotentialModel::new(f).expect("valid instance");
            let start = ext.start_model().expect("has start");
            let grid = GridSpec::for_model(&ext, 4000, 4);
            let (Ok(rep_ext), Ok(rep_start)) = (
                fd_eigensolve(&ext, &grid, 4),
                fd_eigensolve(&start, &grid, 1),
            ) else {
                worst = f64::INFINITY;
                continue;
            };
            worst = worst.max((rep_ext.eigenvalues[0] - expected(&f)).abs());
            let below = rep_ext
                .eigenvalues
                .iter()
                .filter(|e| **e < rep_start.eigenvalues[0] - 0.05)
                .count();
            count_ok &= below == 1;
        }
        out.push(rec(
            "fd-extra-level",
            format!("{name}, one level below the tower"),
            if count_ok { worst } else { f64::INFINITY },
            5e-3,
        ));
    };
    let mut radial = vec![Family::ExtRadialQuad { omega: 1.0, l: 5.0, case: QuadCase::III }];
    for _ in 0..5 {
        radial.push(Family::ExtRadialQuad {
            omega: draws.in_range(0.8, 1.25),
            l: draws.in_range(4.5, 6.5),
            case: QuadCase::III,
        });
    }
    run(
        "radial-ext-quad-III",
        radial,
        Box::new(|f| match f {
            Family::ExtRadialQuad { omega, l, .. } => omega * (l - 3.5),
            _ => unreachable!(),
        }),
    );
    let mut scarf = vec![Family::ExtScarfQuad { a: 4.0, b: 0.3, case: QuadCase::III }];
    for _ in 0..5 {
        let a = draws.in_range(3.6, 4.6);
        scarf.push(Family::ExtScarfQuad {
            a,
            b: draws.in_range(0.15, 0.5 * (a - 1.8)),
            case: QuadCase::III,
        });
    }
    run(
        "scarf-ext-quad-III",
        scarf,
        Box::new(|f| match f {
            Family::ExtScarfQuad { a, .. } => (a - 2.0) * (a - 2.0),
            _ => unreachable!(),
        }),
    );
    out
}

/// Criterion 6: Gram matrices of levels 0..5 are the identity within 1e-8.
fn orthonormality() -> Vec<VerifyRecord> {
    let mut models = vec![
        PotentialModel::new(Family::RadialOsc { omega: 1.0, l: 0.0 }).expect("valid"),
        PotentialModel::new(Family::Scarf1 { a: 4.0, b: 1.3 }).expect("valid"),
    ];
    models.extend(representative_extended_models());
    models
        .into_iter()
        .map(|m| {
            let worst = match crate::wavefunctions::gram_matrix(&m, 5) {
                Err(_) => f64::INFINITY,
                Ok(g) => {
                    let mut w = 0.0f64;
                    for (i, row) in g.iter().enumerate() {
                        for (j, v) in row.iter().enumerate() {
                            let expect = if i == j { 1.0 } else { 0.0 };
                            w = w.max((v - expect).abs());
                        }
                    }
                    w
                }
            };
            rec("orthonormality", format!("{}, levels 0..5", m.describe()), worst, 1e-8)
        })
        .collect()
}

/// Criterion 7: shape invariance of the strictly isospectral families.
fn shape_invariance() -> Vec<VerifyRecord> {
    let mut draws = Draws::new(0x5eed_cafe_f00d_0003);
    let mut out = Vec::new();
    for mut fam in iso_families() {
        let mut worst = 0.0f64;
        let mut shown = String::new();
        for k in 0..3 {
            let f = (fam.sample)(&mut draws);
            let m = PotentialModel::new(f).expect("valid draw");
            if k == 0 {
                shown = m.describe();
            }
            match shape_invariance_report(&m) {
                Ok(r) => worst = worst.max(r),
                Err(_) => worst = f64::INFINITY,
            }
        }
        out.push(rec("shape-invariance", format!("{shown} and 2 draws"), worst, 1e-10));
    }
    out
}

/// Criterion 8: the limiting relations hold exactly for ν ≤ 8 and the
/// finite-ε convergence is first order.
fn limits() -> Vec<VerifyRecord> {
    let mut out = Vec::new();
    let mut mismatches = 0usize;
    let mut checked = 0usize;
    for a in rational_alphas() {
        for nu in 0..=8usize {
            checked += 1;
            if limit_beta_to_alpha(nu, &a).ok() != gegenbauer_limit_rhs(nu, &a).ok() {
                mismatches += 1;
            }
        }
    }
    out.push(rec(
        "limits/beta-to-alpha-exact",
        format!("{checked} cases, exact Gegenbauer multiple"),
        mismatches as f64,
        0.0,
    ));

    let mut mismatches = 0usize;
    let mut checked = 0usize;
    for b in rational_alphas() {
        for nu in 1..=8usize {
            checked += 1;
            let stated = limit_alpha_to_zero(nu, &b);
            let member = exceptional_polynomial(
                &ExceptionalFamily::X1Jacobi { alpha: rat(0, 1), beta: b.clone() },
                nu,
            );
            if stated.ok() != member.ok() {
                mismatches += 1;
            }
        }
    }
    out.push(rec(
        "limits/alpha-to-zero-exact",
        format!("{checked} cases, exact (1-z)^2 reduction"),
        mismatches as f64,
        0.0,
    ));

    // finite-ε sweeps: first-order rate within ±0.2
    let sweep = |errs: &[f64]| -> f64 {
        errs.windows(2)
            .map(|w| ((w[0] / w[1]).log10() - 1.0).abs())
            .fold(0.0f64, f64::max)
    };
    let zs: Vec<f64> = (-9..=9).map(|i| i as f64 / 10.0).collect();
    let mut worst = 0.0f64;
    for (alpha, nu) in [(0.75f64, 2usize), (1.5, 4)] {
        let lim = limit_beta_to_alpha(nu, &alpha).expect("valid alpha");
        let mut errs = Vec::new();
        for k in 2..=4 {
            let eps = 10f64.powi(-k);
            let p = exceptional_polynomial(
                &ExceptionalFamily::X1Jacobi { alpha, beta: alpha + eps },
                nu,
            )
            .expect("valid")
            .scale(&eps);
            errs.push(
                zs.iter()
                    .map(|z| (p.eval(z) - lim.eval(z)).abs())
                    .fold(0.0f64, f64::max),
            );
        }
        worst = worst.max(sweep(&errs));
    }
    out.push(rec("limits/beta-to-alpha-rate", "eps sweep 1e-2..1e-4", worst, 0.2));

    let mut worst = 0.0f64;
    for (beta, nu) in [(2.5f64, 2usize), (3.0, 3)] {
        let lim = limit_alpha_to_zero(nu, &beta).expect("valid beta");
        let mut errs = Vec::new();
        for k in 2..=4 {
            let eps = 10f64.powi(-k);
            let p = exceptional_polynomial(
                &ExceptionalFamily::X1Jacobi { alpha: eps, beta },
                nu,
            )
            .expect("valid");
            errs.push(
                zs.iter()
                    .map(|z| (p.eval(z) - lim.eval(z)).abs())
                    .fold(0.0f64, f64::max),
            );
        }
        worst = worst.max(sweep(&errs));
    }
    out.push(rec("limits/alpha-to-zero-rate", "eps sweep 1e-2..1e-4", worst, 0.2));
    out
}

/// Criterion 9: the intertwining map lands on the direct eigenfunctions,
/// and both linear-radial branches agree.
fn susy_map() -> Vec<VerifyRecord> {
    let mut out: Vec<VerifyRecord> = representative_extended_models()
        .into_iter()
        .map(|m| {
            let mut worst = 0.0f64;
            for nu in 0..=3usize {
                match susy_map_check(&m, nu) {
                    Ok(r) => worst = worst.max(r),
                    Err(_) => worst = f64::INFINITY,
                }
            }
            rec("susy-map", format!("{}, nu <= 3", m.describe()), worst, 1e-9)
        })
        .collect();
    let mut worst = 0.0f64;
    for nu in 0..=3usize {
        match linear_branch_agreement(1.0, 1.0, nu) {
            Ok(r) => worst = worst.max(r),
            Err(_) => worst = f64::INFINITY,
        }
    }
    out.push(rec(
        "susy-map/branch-agreement",
        "radial-ext-linear(omega=1, l=1), both starts",
        worst,
        1e-9,
    ));
    out
}

/// Criterion 10: the parameter gates accept and reject a designed boundary
/// test set exactly as stated.
fn gates() -> Vec<VerifyRecord> {
    let mut failures = 0usize;
    let mut checked = 0usize;
    let mut expect = |cond: bool| {
        checked += 1;
        if !cond {
            failures += 1;
        }
    };

    // table membership: a representative point inside each row
    let representative: [(f64, f64, usize); 9] = [
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
    for (a, b, row) in representative {
        expect(table1_memberships(a, b)[row]);
    }
    // asterisked rows construct; the quadratic gates mirror their regions
    expect(
        PotentialModel::new(Family::ExtScarfQuad { a: 4.0, b: 1.5, case: QuadCase::I }).is_ok(),
    );
    expect(
        PotentialModel::new(Family::ExtScarfQuad { a: 4.0, b: 0.3, case: QuadCase::II })
            .is_ok(),
    );
    expect(
        PotentialModel::new(Family::ExtScarfQuad { a: 4.0, b: 0.3, case: QuadCase::III })
            .is_ok(),
    );
    expect(TABLE1[0].constructible == Some(QuadCase::I));
    expect(TABLE1[5].constructible == Some(QuadCase::II));
    expect(TABLE1[8].constructible == Some(QuadCase::III));
    expect(TABLE1.iter().filter(|r| r.constructible.is_some()).count() == 3);
    // a point only inside non-asterisked regions never constructs
    for case in [QuadCase::I, QuadCase::II, QuadCase::III] {
        expect(PotentialModel::new(Family::ExtScarfQuad { a: 1.8, b: 0.7, case }).is_err());
    }
    // strict boundaries as written
    expect(!table1_memberships(4.0, 1.0)[0]); // B = 1 outside 1a*
    expect(!table1_memberships(4.0, 3.0)[0]); // B = A−1 outside 1a*
    expect(!table1_memberships(4.0, 2.5)[5]); // B = A−3/2 outside 2*
    expect(table1_memberships(2.0, 0.7)[2]); // A = 2 belongs to the closed row
    expect(!table1_memberships(2.0, 0.7)[1]);
    expect(table1_memberships(1.25, 0.1)[6]); // A = 5/4 closed on row 7
    expect(!table1_memberships(1.25, 0.1)[7]);
    expect(
        PotentialModel::new(Family::ExtScarfQuad { a: 2.0, b: 0.5, case: QuadCase::I }).is_err(),
    );
    expect(
        PotentialModel::new(Family::ExtScarfQuad { a: 4.0, b: 2.5, case: QuadCase::II })
            .is_err(),
    );

    // radial real/complex-root conditions
    expect(
        PotentialModel::new(Family::ExtRadialQuad { omega: 1.0, l: 0.25, case: QuadCase::I })
            .is_ok(),
    );
    expect(
        PotentialModel::new(Family::ExtRadialQuad { omega: 1.0, l: 0.0, case: QuadCase::I })
            .is_err(),
    );
    for case in [QuadCase::II, QuadCase::III] {
        expect(
            PotentialModel::new(Family::ExtRadialQuad { omega: 1.0, l: 0.5, case }).is_err(),
        );
        expect(
            PotentialModel::new(Family::ExtRadialQuad { omega: 1.0, l: 0.75, case }).is_ok(),
        );
    }
    // linear radial branch rule at l = 0
    expect(
        PotentialModel::new(Family::ExtRadialLinear {
            omega: 1.0,
            l: 0.0,
            branch: LinearBranch::Upper,
        })
        .is_ok(),
    );
    expect(
        PotentialModel::new(Family::ExtRadialLinear {
            omega: 1.0,
            l: 0.0,
            branch: LinearBranch::Lower,
        })
        .is_err(),
    );
    // conventional Scarf gate boundaries
    expect(PotentialModel::new(Family::Scarf1 { a: 2.0, b: 1.0 }).is_err());
    expect(PotentialModel::new(Family::Scarf1 { a: 2.0, b: 0.0 }).is_err());
    expect(PotentialModel::new(Family::Scarf1 { a: 2.0, b: 0.5 }).is_ok());

    vec![rec(
        "parameter-gates",
        format!("{checked} designed boundary checks"),
        failures as f64,
        0.0,
    )]
}
