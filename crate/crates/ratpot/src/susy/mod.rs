//! First-order SUSY machinery: partner construction from a superpotential,
//! operator application, intertwining checks, case classification, and
//! shape-invariance reports.

use serde::Serialize;

use crate::error::SusyError;
use crate::jet::Jet;
use crate::orthopoly::Polynomial;
use crate::potentials::{
    scarf_quad_denominator, Family, LinearBranch, PhiForm, PotentialModel, QuadCase,
    Superpotential, SuperpotentialKind,
};

/// Spectral relation between the partners, decided by the boundary behavior
/// of the factorization function.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum SusyCase {
    /// case i: φ is the start ground state; the partner loses that level.
    GroundStateDeletion,
    /// case ii: neither φ nor 1/φ is an acceptable eigenfunction; the
    /// partners are strictly isospectral.
    StrictIsospectral,
    /// case iii: 1/φ is an acceptable eigenfunction of the partner, adding
    /// one level below the start spectrum.
    ExtraBoundState,
}

impl std::fmt::Display for SusyCase {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            SusyCase::GroundStateDeletion => write!(f, "i"),
            SusyCase::StrictIsospectral => write!(f, "ii"),
            SusyCase::ExtraBoundState => write!(f, "iii"),
        }
    }
}

/// Everything with analytic value and three derivatives.
pub trait C3Fn {
    fn jet(&self, x: f64) -> Jet;
    fn value(&self, x: f64) -> f64 {
        self.jet(x).f
    }
}

impl C3Fn for Superpotential {
    fn jet(&self, x: f64) -> Jet {
        Superpotential::jet(self, x)
    }
}

impl C3Fn for PhiForm {
    fn jet(&self, x: f64) -> Jet {
        PhiForm::jet(self, x)
    }
}

/// Central-difference adaptor for plain callables; every derivative is
/// O(h²) accurate.
pub struct FiniteDiffC3<F: Fn(f64) -> f64> {
    pub f: F,
    pub h: f64,
}

impl<F: Fn(f64) -> f64> C3Fn for FiniteDiffC3<F> {
    fn jet(&self, x: f64) -> Jet {
        let (f, h) = (&self.f, self.h);
        Jet {
            f: f(x),
            d1: (f(x + h) - f(x - h)) / (2.0 * h),
            d2: (f(x + h) - 2.0 * f(x) + f(x - h)) / (h * h),
            d3: (f(x + 2.0 * h) - 2.0 * f(x + h) + 2.0 * f(x - h) - f(x - 2.0 * h))
                / (2.0 * h * h * h),
        }
    }
}

/// A factorized pair V^(±) = W² ∓ W′ + E.
#[derive(Clone, Debug)]
pub struct SusyPair<W: C3Fn> {
    pub w: W,
    pub energy: f64,
}

/// Builds the pair from a superpotential and factorization energy.
pub fn make_pair<W: C3Fn>(w: W, energy: f64) -> SusyPair<W> {
    SusyPair { w, energy }
}

impl<W: C3Fn> SusyPair<W> {
    pub fn v_plus(&self, x: f64) -> f64 {
        let wj = self.w.jet(x);
        wj.f * wj.f - wj.d1 + self.energy
    }

    pub fn v_minus(&self, x: f64) -> f64 {
        let wj = self.w.jet(x);
        wj.f * wj.f + wj.d1 + self.energy
    }

    /// Â f = f′ + W f at x.
    pub fn apply_a(&self, f: &impl C3Fn, x: f64) -> f64 {
        let fj = f.jet(x);
        fj.d1 + self.w.value(x) * fj.f
    }

    /// Â† f = −f′ + W f at x.
    pub fn apply_a_dagger(&self, f: &impl C3Fn, x: f64) -> f64 {
        let fj = f.jet(x);
        -fj.d1 + self.w.value(x) * fj.f
    }

    /// Â† Â f at x (equals −f″ + (V⁺ − E) f).
    pub fn apply_a_dagger_a(&self, f: &impl C3Fn, x: f64) -> f64 {
        let fj = f.jet(x);
        let wj = self.w.jet(x);
        // g = Âf; Â†Âf = −g′ + W g
        let g = fj.d1 + wj.f * fj.f;
        let g1 = fj.d2 + wj.d1 * fj.f + wj.f * fj.d1;
        -g1 + wj.f * g
    }

}

/// SUSY case from the boundary exponents of φ: an eigenfunction candidate
/// must be square-integrable and vanish at the finite endpoints (and decay
/// at infinity). Exponents exactly on an integrability boundary are refused.
pub fn classify(phi: &PhiForm) -> Result<SusyCase, SusyError> {
    match phi {
        PhiForm::Radial { pow, gauss_sign, .. } => {
            // |x^p|² ~ x^{2p} at the origin: borderline when 2p = −1
            for p in [*pow, -*pow] {
                if 2.0 * p == -1.0 {
                    return Err(SusyError::Borderline(format!(
                        "|phi|^2 ~ x^(-1) at the origin (power {p})"
                    )));
                }
            }
            let acceptable = |p: f64, sign: f64| p > 0.0 && sign < 0.0;
            if acceptable(*pow, *gauss_sign) {
                Ok(SusyCase::GroundStateDeletion)
            } else if acceptable(-*pow, -*gauss_sign) {
                Ok(SusyCase::ExtraBoundState)
            } else {
                Ok(SusyCase::StrictIsospectral)
            }
        }
        PhiForm::Scarf { e_minus, e_plus, .. } => {
            // near an endpoint φ ~ t^{2e}: |φ|² ~ t^{4e}, borderline at 4e = −1
            for e in [*e_minus, *e_plus, -*e_minus, -*e_plus] {
                if 4.0 * e == -1.0 {
                    return Err(SusyError::Borderline(format!(
                        "|phi|^2 ~ t^(-1) at an endpoint (exponent {e})"
                    )));
                }
            }
            let acceptable = |em: f64, ep: f64| em > 0.0 && ep > 0.0;
            if acceptable(*e_minus, *e_plus) {
                Ok(SusyCase::GroundStateDeletion)
            } else if acceptable(-*e_minus, -*e_plus) {
                Ok(SusyCase::ExtraBoundState)
            } else {
                Ok(SusyCase::StrictIsospectral)
            }
        }
    }
}

/// The SUSY data attached to an extended model: pair, factorization
/// function, case, start model, and the level map ε_ν.
#[derive(Clone, Debug)]
pub struct ModelSusyData {
    pub pair: SusyPair<Superpotential>,
    pub phi: PhiForm,
    pub case: SusyCase,
    pub start: PotentialModel,
    pub extended: PotentialModel,
}

pub fn model_pair(model: &PotentialModel) -> Result<ModelSusyData, SusyError> {
    let fact = model
        .factorization()
        .map_err(|e| SusyError::Unsupported(e.to_string()))?;
    let start = model
        .start_model()
        .map_err(|e| SusyError::Unsupported(e.to_string()))?;
    Ok(ModelSusyData {
        pair: make_pair(model.superpotential(), fact.energy),
        phi: fact.phi,
        case: fact.susy_case,
        start,
        extended: model.clone(),
    })
}

impl ModelSusyData {
    /// ε_ν = E^{(+)}_ν − E, the squared norm of Â acting on the ν-th start
    /// eigenfunction.
    pub fn epsilon(&self, nu: usize) -> f64 {
        self.start.analytic_spectrum(nu + 1)[nu] - self.pair.energy
    }

    /// sup over `grid` of |Â H⁺ f − H⁻ Â f|, with V⁺ = start potential and
    /// V⁻ = extension + constant taken from the model formulas (independent
    /// of the W-algebra, so the residual genuinely measures the partner
    /// relations) and every derivative analytic.
    pub fn intertwining_residual(
        &self,
        f: &impl C3Fn,
        grid: &[f64],
    ) -> Result<f64, SusyError> {
        let e = self.pair.energy;
        let mut worst = 0.0f64;
        for &x in grid {
            let fj = f.jet(x);
            let wj = self.pair.w.jet(x);
            let vp = self
                .start
                .v_jet(x)
                .map_err(|er| SusyError::Unsupported(er.to_string()))?;
            let vm = self
                .extended
                .evaluate(x)
                .map_err(|er| SusyError::Unsupported(er.to_string()))?
                + self.extended.additive_constant();
            // u = H⁺f; u′ via the analytic V⁺′
            let u = -fj.d2 + (vp.f - e) * fj.f;
            let u1 = -fj.d3 + vp.d1 * fj.f + (vp.f - e) * fj.d1;
            let lhs = u1 + wj.f * u;
            let g = fj.d1 + wj.f * fj.f;
            let g2 = fj.d3 + wj.d2 * fj.f + 2.0 * wj.d1 * fj.d1 + wj.f * fj.d2;
            let rhs = -g2 + (vm - e) * g;
            worst = worst.max((lhs - rhs).abs());
        }
        Ok(worst)
    }

    /// H⁻ Â f at x (the right side of the intertwining relation alone).
    pub fn h_minus_a(&self, f: &impl C3Fn, x: f64) -> Result<f64, SusyError> {
        let fj = f.jet(x);
        let wj = self.pair.w.jet(x);
        let vm = self
            .extended
            .evaluate(x)
            .map_err(|er| SusyError::Unsupported(er.to_string()))?
            + self.extended.additive_constant();
        let g = fj.d1 + wj.f * fj.f;
        let g2 = fj.d3 + wj.d2 * fj.f + 2.0 * wj.d1 * fj.d1 + wj.f * fj.d2;
        Ok(-g2 + (vm - self.pair.energy) * g)
    }
}

/// Fully finite-difference intertwining residual for a plain callable: both
/// operator applications are discretized with O(h²) central differences, so
/// the result converges to zero at second order for smooth test functions.
pub fn intertwining_residual_fd(
    model: &PotentialModel,
    f: &impl Fn(f64) -> f64,
    h: f64,
    grid: &[f64],
) -> Result<f64, SusyError> {
    let data = model_pair(model)?;
    let e = data.pair.energy;
    let vp = |x: f64| -> Result<f64, SusyError> {
        data.start
            .v_jet(x)
            .map(|j| j.f)
            .map_err(|er| SusyError::Unsupported(er.to_string()))
    };
    let vm = |x: f64| -> Result<f64, SusyError> {
        data.extended
            .evaluate(x)
            .map(|v| v + data.extended.additive_constant())
            .map_err(|er| SusyError::Unsupported(er.to_string()))
    };
    let w = |x: f64| data.pair.w.w(x);
    let d2 = |g: &dyn Fn(f64) -> Result<f64, SusyError>, x: f64| -> Result<f64, SusyError> {
        Ok((g(x + h)? - 2.0 * g(x)? + g(x - h)?) / (h * h))
    };
    let hplus = |x: f64| -> Result<f64, SusyError> {
        let fpp = (f(x + h) - 2.0 * f(x) + f(x - h)) / (h * h);
        Ok(-fpp + (vp(x)? - e) * f(x))
    };
    let afun = |x: f64| -> Result<f64, SusyError> {
        let fp = (f(x + h) - f(x - h)) / (2.0 * h);
        Ok(fp + w(x) * f(x))
    };
    let mut worst = 0.0f64;
    for &x in grid {
        let lhs = (hplus(x + h)? - hplus(x - h)?) / (2.0 * h) + w(x) * hplus(x)?;
        let rhs = -d2(&afun, x)? + (vm(x)? - e) * afun(x)?;
        worst = worst.max((lhs - rhs).abs());
    }
    Ok(worst)
}

/// JSON-serializable check record.
#[derive(Clone, Debug, Serialize)]
pub struct CheckReport {
    pub check: String,
    pub params: String,
    pub residual: f64,
    pub pass: bool,
}

/// Shape-invariance check for the strictly isospectral extended families:
/// the partner generated from the extension's own ground state is the same
/// family with l → l+1 (plus ω) or A → A+1. Returns the max pointwise
/// residual of V_ext + 2W̃′ − V_ext(shifted) − Δ over a 400-point grid.
pub fn shape_invariance_report(model: &PotentialModel) -> Result<f64, SusyError> {
    let (w_tilde, shifted, delta): (TildeW, PotentialModel, f64) = match *model.family() {
        Family::ExtRadialLinear { omega, l, branch } => {
            let shifted = PotentialModel::new(Family::ExtRadialLinear {
                omega,
                l: l + 1.0,
                branch,
            })
            .map_err(|e| SusyError::Unsupported(e.to_string()))?;
            // W̃₂ = 2ωx [1/(u+2l+1) − 1/(u+2l+3)], u = ωx²
            let term = |offset: f64, sign: f64| RationalTerm {
                coeff: sign * 2.0 * omega,
                num: Polynomial::one(),
                den: Polynomial::from_coeffs(vec![offset, 1.0]),
            };
            (
                TildeW {
                    base: PotentialModel::new(Family::RadialOsc { omega, l })
                        .expect("conventional parameters are valid here")
                        .superpotential(),
                    kind: SuperpotentialKind::Radial,
                    omega,
                    terms: vec![term(2.0 * l + 1.0, 1.0), term(2.0 * l + 3.0, -1.0)],
                },
                shifted,
                omega,
            )
        }
        Family::ExtRadialQuad { omega, l, case } => {
            if case == QuadCase::III {
                return Err(SusyError::Unsupported(
                    "case III has an extra bound state and is not shape-invariance \
                     eligible"
                        .into(),
                ));
            }
            let shifted =
                PotentialModel::new(Family::ExtRadialQuad { omega, l: l + 1.0, case })
                    .map_err(|e| SusyError::Unsupported(e.to_string()))?;
            // case I: W̃₂ = 4ωx [(u+γ)/((u+γ)²−2γ) − (u+γ')/((u+γ')²−2γ')]
            // case II: same with +2γ in the denominators, γ = 2l−1
            let (g0, g1, den_sign) = match case {
                QuadCase::I => (2.0 * l + 3.0, 2.0 * l + 5.0, -1.0),
                QuadCase::II => (2.0 * l - 1.0, 2.0 * l + 1.0, 1.0),
                QuadCase::III => unreachable!(),
            };
            let term = |g: f64, sign: f64| RationalTerm {
                coeff: sign * 4.0 * omega,
                num: Polynomial::from_coeffs(vec![g, 1.0]),
                den: Polynomial::from_coeffs(vec![g * g + den_sign * 2.0 * g, 2.0 * g, 1.0]),
            };
            (
                TildeW {
                    base: PotentialModel::new(Family::RadialOsc { omega, l })
                        .expect("conventional parameters are valid here")
                        .superpotential(),
                    kind: SuperpotentialKind::Radial,
                    omega,
                    terms: vec![term(g0, 1.0), term(g1, -1.0)],
                },
                shifted,
                omega,
            )
        }
        Family::ExtScarfLinear { a, b } => {
            let shifted = PotentialModel::new(Family::ExtScarfLinear { a: a + 1.0, b })
                .map_err(|e| SusyError::Unsupported(e.to_string()))?;
            // W̃₂ = 2B cos x [1/((2A+1)−2Bz) − 1/((2A−1)−2Bz)]
            let term = |ta: f64, sign: f64| RationalTerm {
                coeff: sign * 2.0 * b,
                num: Polynomial::one(),
                den: Polynomial::from_coeffs(vec![ta, -2.0 * b]),
            };
            (
                TildeW {
                    base: PotentialModel::new(Family::Scarf1 { a, b })
                        .expect("conventional parameters are valid here")
                        .superpotential(),
                    kind: SuperpotentialKind::Scarf,
                    omega: 0.0,
                    terms: vec![term(2.0 * a + 1.0, 1.0), term(2.0 * a - 1.0, -1.0)],
                },
                shifted,
                0.0,
            )
        }
        Family::ExtScarfQuad { a, b, case } => {
            if case == QuadCase::III {
                return Err(SusyError::Unsupported(
                    "case III has an extra bound state and is not shape-invariance \
                     eligible"
                        .into(),
                ));
            }
            let shifted = PotentialModel::new(Family::ExtScarfQuad { a: a + 1.0, b, case })
                .map_err(|e| SusyError::Unsupported(e.to_string()))?;
            // case I: W̃₂ = 2(2B−1)(2B−2) cos x [((2B−2)z−(2A−1))/D_{A,B}
            //              − ((2B−2)z−(2A+1))/D_{A+1,B}]
            // case II: same with (2B+1)(2B+2) and (2B+2)z
            let tb = match case {
                QuadCase::I => 2.0 * b - 2.0,
                QuadCase::II => 2.0 * b + 2.0,
                QuadCase::III => unreachable!(),
            };
            let coeff = match case {
                QuadCase::I => 2.0 * (2.0 * b - 1.0) * tb,
                QuadCase::II => 2.0 * (2.0 * b + 1.0) * tb,
                QuadCase::III => unreachable!(),
            };
            let term = |a_of_den: f64, ta_num: f64, sign: f64| RationalTerm {
                coeff: sign * coeff,
                num: Polynomial::from_coeffs(vec![-ta_num, tb]),
                den: scarf_quad_denominator(a_of_den, b, case),
            };
            (
                TildeW {
                    base: PotentialModel::conventional_start(Family::Scarf1 { a, b })
                        .map_err(|e| SusyError::Unsupported(e.to_string()))?
                        .superpotential(),
                    kind: SuperpotentialKind::Scarf,
                    omega: 0.0,
                    terms: vec![
                        term(a, 2.0 * a - 1.0, 1.0),
                        term(a + 1.0, 2.0 * a + 1.0, -1.0),
                    ],
                },
                shifted,
                0.0,
            )
        }
        _ => {
            return Err(SusyError::Unsupported(format!(
                "{} is not a shape-invariance-eligible extension",
                model.describe()
            )))
        }
    };

    let grid = shape_invariance_grid(model);
    let mut worst = 0.0f64;
    for x in grid {
        let v = model.evaluate(x).map_err(|e| SusyError::Unsupported(e.to_string()))?;
        let v_shift = shifted
            .evaluate(x)
            .map_err(|e| SusyError::Unsupported(e.to_string()))?;
        let two_wp = 2.0 * w_tilde.jet(x).d1;
        worst = worst.max((v + two_wp - v_shift - delta).abs());
    }
    Ok(worst)
}

fn shape_invariance_grid(model: &PotentialModel) -> Vec<f64> {
    match model.domain() {
        crate::potentials::Domain::HalfLine => {
            let omega = match *model.family() {
                Family::RadialOsc { omega, .. }
                | Family::ExtRadialLinear { omega, .. }
                | Family::ExtRadialQuad { omega, .. } => omega,
                _ => 1.0,
            };
            let (lo, hi) = (0.1 / omega.sqrt(), 8.0 / omega.sqrt());
            (0..400)
                .map(|j| lo + (j as f64 + 0.5) * (hi - lo) / 400.0)
                .collect()
        }
        crate::potentials::Domain::ScarfInterval => {
            let a = std::f64::consts::FRAC_PI_2 - 0.06;
            (0..400).map(|j| -a + (j as f64 + 0.5) * 2.0 * a / 400.0).collect()
        }
    }
}

/// Rational contribution c · x · p(u)/q(u) (radial, u = ωx²) or
/// c · cos x · p(z)/q(z) (Scarf, z = sin x) to the ground-state
/// superpotential W̃.
struct RationalTerm {
    coeff: f64,
    num: Polynomial<f64>,
    den: Polynomial<f64>,
}

struct TildeW {
    base: Superpotential,
    kind: SuperpotentialKind,
    omega: f64,
    terms: Vec<RationalTerm>,
}

impl TildeW {
    fn jet(&self, x: f64) -> Jet {
        let mut acc = self.base.jet(x);
        for t in &self.terms {
            let j = match self.kind {
                SuperpotentialKind::Radial => {
                    let v = Jet::var(x);
                    let u = (v * v).scale(self.omega);
                    v.scale(t.coeff) * Jet::compose_poly(&t.num, u)
                        / Jet::compose_poly(&t.den, u)
                }
                SuperpotentialKind::Scarf => {
                    let z = Jet::sin_var(x);
                    Jet::cos_var(x).scale(t.coeff) * Jet::compose_poly(&t.num, z)
                        / Jet::compose_poly(&t.den, z)
                }
            };
            acc = acc + j;
        }
        acc
    }
}

/// Constant to subtract from a case ii extension's FD levels before
/// comparing with the start model's levels (zero for case iii, where the
/// spectral Hamiltonian already includes the paper constant).
pub fn spectral_shift(extended: &PotentialModel) -> f64 {
    -extended.additive_constant() + extended.spectral_offset()
}

/// Convenience: has the model an extra bound state below the start tower.
pub fn is_extra_state_family(model: &PotentialModel) -> bool {
    matches!(
        model.family(),
        Family::ExtRadialQuad { case: QuadCase::III, .. }
            | Family::ExtScarfQuad { case: QuadCase::III, .. }
    )
}

/// All six extended families at representative parameters, used by the test
/// sweeps and the verification suites.
pub fn representative_extended_models() -> Vec<PotentialModel> {
    vec![
        PotentialModel::new(Family::ExtRadialLinear {
            omega: 1.0,
            l: 1.0,
            branch: LinearBranch::Lower,
        })
        .expect("valid"),
        PotentialModel::new(Family::ExtRadialQuad { omega: 1.0, l: 2.0, case: QuadCase::I })
            .expect("valid"),
        PotentialModel::new(Family::ExtRadialQuad { omega: 1.0, l: 2.0, case: QuadCase::II })
            .expect("valid"),
        PotentialModel::new(Family::ExtRadialQuad { omega: 1.0, l: 5.0, case: QuadCase::III })
            .expect("valid"),
        PotentialModel::new(Family::ExtScarfLinear { a: 3.0, b: 1.0 }).expect("valid"),
        PotentialModel::new(Family::ExtScarfQuad { a: 4.0, b: 1.5, case: QuadCase::I })
            .expect("valid"),
        PotentialModel::new(Family::ExtScarfQuad { a: 4.0, b: 0.3, case: QuadCase::II })
            .expect("valid"),
        PotentialModel::new(Family::ExtScarfQuad { a: 4.0, b: 0.3, case: QuadCase::III })
            .expect("valid"),
    ]
}
