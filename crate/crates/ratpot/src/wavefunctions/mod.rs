//! Analytic bound-state eigenfunctions with normalization constants.
//!
//! A wavefunction is boundary prefactor × polynomial / denominator ×
//! normalization constant, with the polynomial living in z = ωx²/2 (radial)
//! or z = sin x (Scarf). Normalization constants are assembled in log space
//! from gamma ratios; the implicit normalizations of the extra-bound-state
//! ground states (1/φ) are fixed by quadrature. All wavefunctions are
//! sign-fixed positive as x approaches the left endpoint from inside, which
//! absorbs the occasional explicit minus sign carried by the closed-form
//! constants.

use crate::error::ModelError;
use crate::jet::Jet;
use crate::orthopoly::{gauss_rule, log_gamma, ClassicalFamily, Polynomial, QuadWeight};
use crate::potentials::{
    scarf_quad_denominator, Domain, Family, LinearBranch, PotentialModel, QuadCase,
};
use crate::susy::{model_pair, C3Fn, SusyCase};
use crate::xpoly::{exceptional_polynomial, ExceptionalFamily};

#[derive(Clone, Debug, PartialEq)]
pub enum Prefactor {
    /// x^{power} e^{−ωx²/4}
    Radial { power: f64, omega: f64 },
    /// (1−sin x)^{e_minus} (1+sin x)^{e_plus}
    Scarf { e_minus: f64, e_plus: f64 },
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub enum VariableMap {
    /// z = ωx²/2
    RadialZ { omega: f64 },
    /// z = sin x
    ScarfZ,
}

impl VariableMap {
    pub fn z(&self, x: f64) -> f64 {
        match self {
            VariableMap::RadialZ { omega } => 0.5 * omega * x * x,
            VariableMap::ScarfZ => x.sin(),
        }
    }

    fn z_jet(&self, x: f64) -> Jet {
        match self {
            VariableMap::RadialZ { omega } => {
                let v = Jet::var(x);
                (v * v).scale(0.5 * omega)
            }
            VariableMap::ScarfZ => Jet::sin_var(x),
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct WavefunctionSpec {
    /// Level index in the model's spectrum.
    pub level: usize,
    pub energy: f64,
    pub prefactor: Prefactor,
    /// Polynomial part in z.
    pub poly: Polynomial<f64>,
    /// Optional rational denominator in z.
    pub denom: Option<Polynomial<f64>>,
    /// Normalization constant (sign included).
    pub norm: f64,
    pub map: VariableMap,
    domain: Domain,
}

impl WavefunctionSpec {
    pub fn eval(&self, x: f64) -> Result<f64, ModelError> {
        Ok(self.jet(x)?.f)
    }

    /// ψ and its first three derivatives, all analytic.
    pub fn jet(&self, x: f64) -> Result<Jet, ModelError> {
        if !self.domain.contains(x) {
            return Err(ModelError::Domain(format!(
                "x = {x} is outside the wavefunction's open domain"
            )));
        }
        Ok(self.jet_unchecked(x))
    }

    fn jet_unchecked(&self, x: f64) -> Jet {
        let z = self.map.z_jet(x);
        let mut j = Jet::compose_poly(&self.poly, z).scale(self.norm);
        if let Some(d) = &self.denom {
            j = j / Jet::compose_poly(d, z);
        }
        match &self.prefactor {
            Prefactor::Radial { power, omega } => {
                let v = Jet::var(x);
                j = j * v.powf(*power) * (v * v).scale(-0.25 * omega).exp();
            }
            Prefactor::Scarf { e_minus, e_plus } => {
                let s = Jet::sin_var(x);
                let one = Jet::constant(1.0);
                j = j * (one - s).powf(*e_minus) * (one + s).powf(*e_plus);
            }
        }
        j
    }

    /// Exact ψ″ via the analytic jet.
    pub fn second_derivative(&self, x: f64) -> Result<f64, ModelError> {
        Ok(self.jet(x)?.d2)
    }

    /// Interior sign changes on a fine grid.
    pub fn count_nodes(&self, grid: &[f64]) -> usize {
        let mut count = 0;
        let mut prev = 0.0f64;
        for &x in grid {
            let v = self.jet_unchecked(x).f;
            if prev != 0.0 && v != 0.0 && prev.signum() != v.signum() {
                count += 1;
            }
            if v != 0.0 {
                prev = v;
            }
        }
        count
    }
}

impl C3Fn for WavefunctionSpec {
    /// Interior-only evaluation for the SUSY machinery.
    fn jet(&self, x: f64) -> Jet {
        self.jet_unchecked(x)
    }
}

/// Analytic eigenfunction of `model` at spectrum index `level` (for the
/// extra-bound-state families, level 0 is the 1/φ ground state).
pub fn eigenfunction(model: &PotentialModel, level: usize) -> Result<WavefunctionSpec, ModelError> {
    let energy = model.analytic_spectrum(level + 1)[level];
    let nuf = level as f64;
    let lg = |x: f64| log_gamma(x).map_err(|e| ModelError::Parameter(e.to_string()));
    let ln2 = std::f64::consts::LN_2;
    let mut spec = match *model.family() {
        Family::RadialOsc { omega, l } => {
            let alpha = l + 0.5;
            let poly = ClassicalFamily::Laguerre { alpha }
                .polynomial(level)
                .map_err(|e| ModelError::Parameter(e.to_string()))?;
            let ln_n = 0.5 * (l + 1.5) * (0.5 * omega).ln()
                + 0.5 * (ln2 + lg(nuf + 1.0)? - lg(nuf + l + 1.5)?);
            WavefunctionSpec {
                level,
                energy,
                prefactor: Prefactor::Radial { power: l + 1.0, omega },
                poly,
                denom: None,
                norm: ln_n.exp(),
                map: VariableMap::RadialZ { omega },
                domain: model.domain(),
            }
        }
        Family::Scarf1 { a, b } => {
            let (alpha, beta) = (a - b - 0.5, a + b - 0.5);
            let poly = ClassicalFamily::Jacobi { alpha, beta }
                .polynomial(level)
                .map_err(|e| ModelError::Parameter(e.to_string()))?;
            let ln_n = 0.5
                * ((2.0 * a + 2.0 * nuf).ln() + lg(nuf + 1.0)? + lg(2.0 * a + nuf)?
                    - 2.0 * a * ln2
                    - lg(a - b + nuf + 0.5)?
                    - lg(a + b + nuf + 0.5)?);
            WavefunctionSpec {
                level,
                energy,
                prefactor: Prefactor::Scarf { e_minus: 0.5 * (a - b), e_plus: 0.5 * (a + b) },
                poly,
                denom: None,
                norm: ln_n.exp(),
                map: VariableMap::ScarfZ,
                domain: model.domain(),
            }
        }
        Family::ExtRadialLinear { omega, l, .. } => {
            let alpha = l + 0.5;
            let poly = exceptional_polynomial(&ExceptionalFamily::X1Laguerre { alpha }, level)
                .map_err(|e| ModelError::Parameter(e.to_string()))?;
            let ln_n = 0.5
                * ((l + 1.5) * omega.ln() + lg(nuf + 1.0)? - (l - 1.5) * ln2
                    - (nuf + l + 1.5).ln()
                    - lg(nuf + l + 0.5)?);
            WavefunctionSpec {
                level,
                energy,
                prefactor: Prefactor::Radial { power: l + 1.0, omega },
                poly,
                denom: Some(Polynomial::from_coeffs(vec![2.0 * l + 1.0, 2.0])),
                norm: ln_n.exp(),
                map: VariableMap::RadialZ { omega },
                domain: model.domain(),
            }
        }
        Family::ExtRadialQuad { omega, l, case } => {
            let alpha = l + 0.5;
            let g = model.gamma().expect("quad radial models carry gamma");
            let denom = match case {
                QuadCase::I => {
                    Polynomial::from_coeffs(vec![g * g - 2.0 * g, 4.0 * g, 4.0])
                }
                QuadCase::II => {
                    Polynomial::from_coeffs(vec![g * g + 2.0 * g, 4.0 * g, 4.0])
                }
                QuadCase::III => {
                    Polynomial::from_coeffs(vec![g * g + 2.0 * g, -4.0 * g, 4.0])
                }
            };
            let (poly, norm) = match case {
                QuadCase::I => {
                    let p =
                        exceptional_polynomial(&ExceptionalFamily::L1 { alpha }, level)
                            .map_err(|e| ModelError::Parameter(e.to_string()))?;
                    let ln_n = 0.5
                        * ((l + 1.5) * omega.ln() + lg(nuf + 1.0)? - (l - 3.5) * ln2
                            - (nuf + l + 2.5).ln()
                            - lg(nuf + l + 0.5)?);
                    (p, ln_n.exp())
                }
                QuadCase::II => {
                    let p =
                        exceptional_polynomial(&ExceptionalFamily::L2 { alpha }, level)
                            .map_err(|e| ModelError::Parameter(e.to_string()))?;
                    let ln_n = 0.5
                        * ((l + 1.5) * omega.ln() + lg(nuf + 1.0)? - (l - 3.5) * ln2
                            - (nuf + l + 1.5).ln()
                            - (nuf + l + 0.5).ln()
                            - lg(nuf + l - 0.5)?);
                    (p, ln_n.exp())
                }
                QuadCase::III => {
                    if level == 0 {
                        // 1/φ ground state: polynomial part is 1, the
                        // normalization comes from quadrature below
                        (Polynomial::one(), f64::NAN)
                    } else {
                        let nu = (level - 1) as f64;
                        let p = exceptional_polynomial(
                            &ExceptionalFamily::L3 { alpha },
                            level - 1,
                        )
                        .map_err(|e| ModelError::Parameter(e.to_string()))?;
                        let ln_n = 0.5
                            * ((l + 1.5) * omega.ln() + lg(nu + 1.0)? + (nu + 3.0).ln()
                                - (l - 3.5) * ln2
                                - lg(nu + l + 2.5)?);
                        (p, ln_n.exp())
                    }
                }
            };
            WavefunctionSpec {
                level,
                energy,
                prefactor: Prefactor::Radial { power: l + 1.0, omega },
                poly,
                denom: Some(denom),
                norm,
                map: VariableMap::RadialZ { omega },
                domain: model.domain(),
            }
        }
        Family::ExtScarfLinear { a, b } => {
            let (alpha, beta) = (a - b - 0.5, a + b - 0.5);
            let poly = exceptional_polynomial(
                &ExceptionalFamily::X1Jacobi { alpha, beta },
                level,
            )
            .map_err(|e| ModelError::Parameter(e.to_string()))?;
            let ln_n = b.ln() - (a - 2.0) * ln2
                + 0.5
                    * ((2.0 * a + 2.0 * nuf).ln() + lg(nuf + 1.0)? + lg(2.0 * a + nuf)?
                        - (a - b + nuf + 0.5).ln()
                        - (a + b + nuf + 0.5).ln()
                        - lg(a - b + nuf - 0.5)?
                        - lg(a + b + nuf - 0.5)?);
            WavefunctionSpec {
                level,
                energy,
                prefactor: Prefactor::Scarf { e_minus: 0.5 * (a - b), e_plus: 0.5 * (a + b) },
                poly,
                denom: Some(Polynomial::from_coeffs(vec![2.0 * a - 1.0, -2.0 * b])),
                norm: ln_n.exp(),
                map: VariableMap::ScarfZ,
                domain: model.domain(),
            }
        }
        Family::ExtScarfQuad { a, b, case } => {
            let (alpha, beta) = (a - b - 0.5, a + b - 0.5);
            let denom = scarf_quad_denominator(a, b, case);
            let (poly, norm) = match case {
                QuadCase::I => {
                    let p = exceptional_polynomial(
                        &ExceptionalFamily::P1 { alpha, beta },
                        level,
                    )
                    .map_err(|e| ModelError::Parameter(e.to_string()))?;
                    let ln_n = 2.0 * (b - 1.0).abs().ln() + (2.0 * b - 1.0).ln()
                        - (a - 4.0) * ln2
                        + 0.5
                            * ((2.0 * a + 2.0 * nuf).ln()
                                + lg(nuf + 1.0)?
                                + lg(2.0 * a + nuf)?
                                - (a - b + nuf + 1.5).ln()
                                - (a + b + nuf + 0.5).ln()
                                - (a + b + nuf - 0.5).ln()
                                - lg(a - b + nuf - 0.5)?
                                - lg(a + b + nuf - 1.5)?);
                    (p, ln_n.exp())
                }
                QuadCase::II => {
                    // the swapped-parameter P1 family mirrored in z
                    let p = exceptional_polynomial(
                        &ExceptionalFamily::P1 { alpha: beta, beta: alpha },
                        level,
                    )
                    .map_err(|e| ModelError::Parameter(e.to_string()))?
                    .compose_neg();
                    let ln_n = 2.0 * (b + 1.0).ln() + (2.0 * b + 1.0).ln()
                        - (a - 4.0) * ln2
                        + 0.5
                            * ((2.0 * a + 2.0 * nuf).ln()
                                + lg(nuf + 1.0)?
                                + lg(2.0 * a + nuf)?
                                - (a - b + nuf + 0.5).ln()
                                - (a - b + nuf - 0.5).ln()
                                - (a + b + nuf + 1.5).ln()
                                - lg(a - b + nuf - 1.5)?
                                - lg(a + b + nuf - 0.5)?);
                    (p, ln_n.exp())
                }
                QuadCase::III => {
                    if level == 0 {
                        (Polynomial::one(), f64::NAN)
                    } else {
                        let nu = (level - 1) as f64;
                        let p = exceptional_polynomial(
                            &ExceptionalFamily::P3 { alpha, beta },
                            level - 1,
                        )
                        .map_err(|e| ModelError::Parameter(e.to_string()))?;
                        let ln_n = (a - 1.0).ln() + 2.0 * (2.0 * a - 3.0).ln()
                            - (a - 3.0) * ln2
                            + 0.5
                                * ((2.0 * a + nu - 1.0).ln()
                                    + (2.0 * a + 2.0 * nu + 2.0).ln()
                                    + lg(nu + 1.0)?
                                    + lg(2.0 * a + nu + 2.0)?
                                    - (nu + 3.0).ln()
                                    - lg(a - b + nu + 1.5)?
                                    - lg(a + b + nu + 1.5)?);
                        (p, ln_n.exp())
                    }
                }
            };
            WavefunctionSpec {
                level,
                energy,
                prefactor: Prefactor::Scarf { e_minus: 0.5 * (a - b), e_plus: 0.5 * (a + b) },
                poly,
                denom: Some(denom),
                norm,
                map: VariableMap::ScarfZ,
                domain: model.domain(),
            }
        }
    };
    if !spec.norm.is_finite() {
        // quadrature normalization for the 1/φ ground states
        spec.norm = 1.0;
        let integral = norm_integral(&spec)?;
        spec.norm = 1.0 / integral.sqrt();
    }
    fix_sign(&mut spec);
    Ok(spec)
}

/// Makes ψ positive as x approaches the left endpoint from inside.
fn fix_sign(spec: &mut WavefunctionSpec) {
    let probes: Vec<f64> = match spec.map {
        VariableMap::RadialZ { omega } => [1e-3, 1e-2, 0.1, 0.5]
            .iter()
            .map(|t| t / omega.sqrt())
            .collect(),
        VariableMap::ScarfZ => [1e-3, 1e-2, 0.1, 0.3]
            .iter()
            .map(|t| t - std::f64::consts::FRAC_PI_2)
            .collect(),
    };
    for x in probes {
        let v = spec.jet_unchecked(x).f;
        if v.abs() > 1e-280 {
            if v < 0.0 {
                spec.norm = -spec.norm;
            }
            return;
        }
    }
}

/// ∫ ψ² dx by the Gauss rule of the underlying classical weight, with the
/// rational factor absorbed into the integrand.
pub fn norm_integral(spec: &WavefunctionSpec) -> Result<f64, ModelError> {
    gram_entry(spec, spec)
}

/// ∫ ψ_i ψ_j dx for two spectra of the same model (same prefactor,
/// denominator, and variable map). The Gauss rule starts at 2·deg + 16
/// points and doubles until two consecutive rules agree to 1e-12: the
/// rational factor 1/D² is smooth but not polynomial, so a fixed count
/// cannot be exact.
pub fn gram_entry(a: &WavefunctionSpec, b: &WavefunctionSpec) -> Result<f64, ModelError> {
    let deg = a.poly.degree().unwrap_or(0).max(b.poly.degree().unwrap_or(0));
    let oerr = |e: crate::error::OrthoError| ModelError::Parameter(e.to_string());
    let weight = match (&a.prefactor, a.map) {
        (Prefactor::Radial { power, .. }, VariableMap::RadialZ { .. }) => {
            // x^{2p} e^{−ωx²/2} dx → (2/ω)^p (2ω)^{−1/2} z^{p−1/2} e^{−z} dz
            QuadWeight::Classical(ClassicalFamily::Laguerre { alpha: power - 0.5 })
        }
        (Prefactor::Scarf { e_minus, e_plus }, VariableMap::ScarfZ) => {
            // (1−z)^{2e−−1/2} (1+z)^{2e+−1/2} dz
            QuadWeight::Classical(ClassicalFamily::Jacobi {
                alpha: 2.0 * e_minus - 0.5,
                beta: 2.0 * e_plus - 0.5,
            })
        }
        _ => {
            return Err(ModelError::Parameter(
                "prefactor and variable map are inconsistent".into(),
            ))
        }
    };
    let constant = match (&a.prefactor, a.map) {
        (Prefactor::Radial { power, omega }, _) => {
            (2.0 / omega).powf(*power) / (2.0 * omega).sqrt()
        }
        _ => 1.0,
    };
    let integrand = |z: f64| {
        let mut f = a.poly.eval(&z) * b.poly.eval(&z);
        if let Some(d) = &a.denom {
            let dv = d.eval(&z);
            f /= dv * dv;
        }
        f
    };
    let mut n = 2 * deg + 16;
    let mut value = gauss_rule(&weight, n).map_err(oerr)?.integrate(integrand);
    loop {
        n *= 2;
        let refined = gauss_rule(&weight, n).map_err(oerr)?.integrate(integrand);
        let stable = (refined - value).abs() <= 1e-12 * refined.abs().max(1.0);
        value = refined;
        if stable || n >= 512 {
            break;
        }
    }
    let out = constant * a.norm * b.norm * value;
    if !out.is_finite() {
        return Err(ModelError::Parameter(
            "normalization quadrature overflowed or underflowed".into(),
        ));
    }
    Ok(out)
}

/// Gram matrix of levels 0..=m under the model's measure. All entries share
/// one refinement ladder of Gauss rules, so the rule construction cost is
/// paid once per level count.
pub fn gram_matrix(model: &PotentialModel, m: usize) -> Result<Vec<Vec<f64>>, ModelError> {
    let specs: Result<Vec<_>, _> = (0..=m).map(|k| eigenfunction(model, k)).collect();
    let specs = specs?;
    let oerr = |e: crate::error::OrthoError| ModelError::Parameter(e.to_string());
    let max_deg = specs
        .iter()
        .map(|s| s.poly.degree().unwrap_or(0))
        .max()
        .unwrap_or(0);
    let (weight, constant) = match (&specs[0].prefactor, specs[0].map) {
        (Prefactor::Radial { power, omega }, VariableMap::RadialZ { .. }) => (
            QuadWeight::Classical(ClassicalFamily::Laguerre { alpha: power - 0.5 }),
            (2.0 / omega).powf(*power) / (2.0 * omega).sqrt(),
        ),
        (Prefactor::Scarf { e_minus, e_plus }, VariableMap::ScarfZ) => (
            QuadWeight::Classical(ClassicalFamily::Jacobi {
                alpha: 2.0 * e_minus - 0.5,
                beta: 2.0 * e_plus - 0.5,
            }),
            1.0,
        ),
        _ => {
            return Err(ModelError::Parameter(
                "prefactor and variable map are inconsistent".into(),
            ))
        }
    };
    let block = |n: usize| -> Result<Vec<Vec<f64>>, ModelError> {
        let rule = gauss_rule(&weight, n).map_err(oerr)?;
        let mut out = vec![vec![0.0; m + 1]; m + 1];
        // sample each level once per node, then accumulate the pair products
        let samples: Vec<Vec<f64>> = specs
            .iter()
            .map(|s| {
                rule.nodes
                    .iter()
                    .map(|&z| {
                        let mut f = s.poly.eval(&z);
                        if let Some(d) = &s.denom {
                            f /= d.eval(&z);
                        }
                        f
                    })
                    .collect()
            })
            .collect();
        for i in 0..=m {
            for j in i..=m {
                let mut acc = 0.0;
                for (k, w) in rule.weights.iter().enumerate() {
                    acc += w * samples[i][k] * samples[j][k];
                }
                let v = constant * specs[i].norm * specs[j].norm * acc;
                out[i][j] = v;
                out[j][i] = v;
            }
        }
        Ok(out)
    };
    let mut n = 2 * max_deg + 16;
    let mut vals = block(n)?;
    loop {
        n *= 2;
        let refined = block(n)?;
        let stable = refined.iter().flatten().zip(vals.iter().flatten()).all(
            |(r, v)| (r - v).abs() <= 1e-12 * r.abs().max(1.0),
        );
        vals = refined;
        if stable || n >= 512 {
            break;
        }
    }
    if vals.iter().flatten().any(|v| !v.is_finite()) {
        return Err(ModelError::Parameter(
            "Gram quadrature overflowed or underflowed".into(),
        ));
    }
    Ok(vals)
}

/// Interior sample grid for a model: radial grids extend to where the
/// oscillator wall exceeds the target energy by a comfortable margin.
pub fn sample_grid(model: &PotentialModel, n: usize, e_max: f64) -> Vec<f64> {
    match model.domain() {
        Domain::HalfLine => {
            let omega = match *model.family() {
                Family::RadialOsc { omega, .. }
                | Family::ExtRadialLinear { omega, .. }
                | Family::ExtRadialQuad { omega, .. } => omega,
                _ => 1.0,
            };
            let x_max = 2.0 * ((e_max.max(0.0) + 15.0) / omega).sqrt();
            (0..n)
                .map(|j| x_max * (0.02 + 0.98 * (j as f64 + 0.5) / n as f64))
                .collect()
        }
        Domain::ScarfInterval => {
            let half = std::f64::consts::FRAC_PI_2 - 0.01;
            (0..n).map(|j| -half + (j as f64 + 0.5) * 2.0 * half / n as f64).collect()
        }
    }
}

/// Sup-norm difference between the SUSY-mapped start eigenfunction
/// Â ψ⁺_ν / √ε_ν and the direct eigenfunction of the extended model
/// (index shifted by one for the extra-bound-state families), after sign
/// alignment on a 400-point grid.
pub fn susy_map_check(model: &PotentialModel, nu: usize) -> Result<f64, ModelError> {
    let data = model_pair(model).map_err(|e| ModelError::Parameter(e.to_string()))?;
    let psi_start = eigenfunction(&data.start, nu)?;
    let shift = usize::from(data.case == SusyCase::ExtraBoundState);
    let psi_direct = eigenfunction(model, nu + shift)?;
    let eps = data.epsilon(nu);
    let grid = sample_grid(model, 400, psi_direct.energy.abs() + psi_start.energy.abs());
    let mut dot = 0.0f64;
    let mut mapped = Vec::with_capacity(grid.len());
    let mut direct = Vec::with_capacity(grid.len());
    for &x in &grid {
        let mv = data.pair.apply_a(&psi_start, x) / eps.sqrt();
        let dv = psi_direct.eval(x)?;
        dot += mv * dv;
        mapped.push(mv);
        direct.push(dv);
    }
    let sign = if dot < 0.0 { -1.0 } else { 1.0 };
    let mut worst = 0.0f64;
    for (mv, dv) in mapped.iter().zip(&direct) {
        worst = worst.max((mv - sign * dv).abs());
    }
    Ok(worst)
}

/// Max pointwise difference, after sign alignment, between the extended
/// wavefunctions produced through the two linear-radial starts (l−1 and
/// l+1); the construction promises they agree up to an overall sign.
pub fn linear_branch_agreement(omega: f64, l: f64, nu: usize) -> Result<f64, ModelError> {
    let lower = PotentialModel::new(Family::ExtRadialLinear {
        omega,
        l,
        branch: LinearBranch::Lower,
    })?;
    let upper = PotentialModel::new(Family::ExtRadialLinear {
        omega,
        l,
        branch: LinearBranch::Upper,
    })?;
    let data_lo = model_pair(&lower).map_err(|e| ModelError::Parameter(e.to_string()))?;
    let data_up = model_pair(&upper).map_err(|e| ModelError::Parameter(e.to_string()))?;
    let psi_lo = eigenfunction(&data_lo.start, nu)?;
    let psi_up = eigenfunction(&data_up.start, nu)?;
    let grid = sample_grid(&lower, 300, psi_lo.energy.abs() + psi_up.energy.abs());
    let mut dot = 0.0;
    let mut pairs = Vec::with_capacity(grid.len());
    for &x in &grid {
        let a = data_lo.pair.apply_a(&psi_lo, x) / data_lo.epsilon(nu).sqrt();
        let b = data_up.pair.apply_a(&psi_up, x) / data_up.epsilon(nu).sqrt();
        dot += a * b;
        pairs.push((a, b));
    }
    let sign = if dot < 0.0 { -1.0 } else { 1.0 };
    Ok(pairs
        .into_iter()
        .map(|(a, b)| (a - sign * b).abs())
        .fold(0.0, f64::max))
}
