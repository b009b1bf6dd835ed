//! Finite-difference Schrödinger eigensolver and quadrature orthogonality
//! checks: the numerical oracle behind every analytic spectral claim.
//!
//! The Hamiltonian −d²/dx² + V is discretized with the 3-point Laplacian on
//! a uniform grid with Dirichlet ends; eigenvalues come from Sturm bisection
//! on the symmetric tridiagonal matrix. V includes the model's spectral
//! offset, so FD levels land on the same scale as `analytic_spectrum`.

use serde::Serialize;

use crate::error::SpectralError;
use crate::potentials::{Domain, Family, PotentialModel};
use crate::tridiag;
use crate::wavefunctions::{self, WavefunctionSpec};

#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct GridSpec {
    pub x_min: f64,
    pub x_max: f64,
    pub n: usize,
}

impl GridSpec {
    /// Radial grid: n points h, 2h, …, nh = x_max with Dirichlet walls at 0
    /// and x_max + h.
    pub fn radial(x_max: f64, n: usize) -> Self {
        let h = x_max / n as f64;
        GridSpec { x_min: h, x_max, n }
    }

    /// Scarf grid: n interior points of (−π/2, π/2) with spacing π/(n+1).
    pub fn scarf(n: usize) -> Self {
        let h = std::f64::consts::PI / (n as f64 + 1.0);
        GridSpec {
            x_min: -std::f64::consts::FRAC_PI_2 + h,
            x_max: std::f64::consts::FRAC_PI_2 - h,
            n,
        }
    }

    /// Default grid for a model: the radial wall is placed where the
    /// oscillator exceeds the k-th level by a wide margin (ωx²/4 ≥ E_k + 15).
    pub fn for_model(model: &PotentialModel, n: usize, k: usize) -> Self {
        match model.domain() {
            Domain::HalfLine => {
                let omega = match *model.family() {
                    Family::RadialOsc { omega, .. }
                    | Family::ExtRadialLinear { omega, .. }
                    | Family::ExtRadialQuad { omega, .. } => omega,
                    _ => 1.0,
                };
                let e_top = model.analytic_spectrum(k.max(1))[k.max(1) - 1].abs();
                let x_max = 2.0 * ((e_top + 15.0) / omega).sqrt();
                GridSpec::radial(x_max, n)
            }
            Domain::ScarfInterval => GridSpec::scarf(n),
        }
    }

    pub fn spacing(&self) -> f64 {
        (self.x_max - self.x_min) / (self.n as f64 - 1.0)
    }

    pub fn points(&self) -> Vec<f64> {
        let h = self.spacing();
        (0..self.n).map(|i| self.x_min + i as f64 * h).collect()
    }

    fn validate(&self, model: &PotentialModel) -> Result<(), SpectralError> {
        if self.n < 100 {
            return Err(SpectralError::Grid(format!(
                "grid needs at least 100 points, got {}",
                self.n
            )));
        }
        #[allow(clippy::neg_cmp_op_on_partial_ord)] // also rejects NaN bounds
        if !(self.x_min < self.x_max) {
            return Err(SpectralError::Grid("empty grid interval".into()));
        }
        let dom = model.domain();
        if !dom.contains(self.x_min) || !dom.contains(self.x_max) {
            return Err(SpectralError::Grid(format!(
                "grid [{}, {}] leaves the open domain of {}",
                self.x_min,
                self.x_max,
                model.describe()
            )));
        }
        Ok(())
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct SpectralReport {
    pub eigenvalues: Vec<f64>,
    /// ‖T v − λ v‖∞ per eigenpair.
    pub residuals: Vec<f64>,
    pub grid: GridSpec,
    pub analytic_reference: Option<Vec<f64>>,
    pub max_abs_error: Option<f64>,
    /// Set when the requested level count strains the grid resolution.
    pub warning: Option<String>,
}

/// Lowest k levels of the 3-point discretization of −d²/dx² + V + offset
/// with Dirichlet conditions at the grid ends.
pub fn fd_eigensolve(
    model: &PotentialModel,
    grid: &GridSpec,
    k: usize,
) -> Result<SpectralReport, SpectralError> {
    if k == 0 {
        return Err(SpectralError::Grid("level count must be at least 1".into()));
    }
    grid.validate(model)?;
    let (d, e) = discretize(model, grid)?;
    let eigenvalues = tridiag::lowest_eigenvalues(&d, &e, k)?;
    let mut residuals = Vec::with_capacity(k);
    for lam in &eigenvalues {
        let v = tridiag::eigenvector(&d, &e, *lam)?;
        let mut r = 0.0f64;
        for i in 0..d.len() {
            let mut t = (d[i] - lam) * v[i];
            if i > 0 {
                t += e[i - 1] * v[i - 1];
            }
            if i < d.len() - 1 {
                t += e[i] * v[i + 1];
            }
            r = r.max(t.abs());
        }
        residuals.push(r);
    }
    let analytic = model.analytic_spectrum(k);
    let max_abs_error = eigenvalues
        .iter()
        .zip(&analytic)
        .map(|(f, a)| (f - a).abs())
        .fold(0.0f64, f64::max);
    let h = grid.spacing();
    let band_edge = 2.0 / (h * h);
    let top = eigenvalues.last().copied().unwrap_or(0.0);
    let warning = if k * 8 > grid.n {
        Some(format!("requested {k} levels on a {}-point grid", grid.n))
    } else if top.abs() > 0.2 * band_edge {
        Some(format!(
            "level {k} at energy {top:.3} approaches the FD band edge {band_edge:.1}"
        ))
    } else {
        None
    };
    Ok(SpectralReport {
        eigenvalues,
        residuals,
        grid: *grid,
        analytic_reference: Some(analytic),
        max_abs_error: Some(max_abs_error),
        warning,
    })
}

/// FD eigenvector of the level-`index` state, tabulated as (x, ψ) pairs and
/// normalized to unit discrete L² norm.
pub fn fd_eigenvector(
    model: &PotentialModel,
    grid: &GridSpec,
    index: usize,
) -> Result<Vec<(f64, f64)>, SpectralError> {
    grid.validate(model)?;
    let (d, e) = discretize(model, grid)?;
    let eigenvalues = tridiag::lowest_eigenvalues(&d, &e, index + 1)?;
    let v = tridiag::eigenvector(&d, &e, eigenvalues[index])?;
    let h = grid.spacing();
    let scale = 1.0 / h.sqrt();
    Ok(grid
        .points()
        .into_iter()
        .zip(v)
        .map(|(x, psi)| (x, psi * scale))
        .collect())
}

fn discretize(
    model: &PotentialModel,
    grid: &GridSpec,
) -> Result<(Vec<f64>, Vec<f64>), SpectralError> {
    let h = grid.spacing();
    let offset = model.spectral_offset();
    let kin = 1.0 / (h * h);
    let d: Result<Vec<f64>, SpectralError> = grid
        .points()
        .into_iter()
        .map(|x| {
            model
                .evaluate(x)
                .map(|v| 2.0 * kin + v + offset)
                .map_err(|e| SpectralError::Grid(e.to_string()))
        })
        .collect();
    let d = d?;
    let e = vec![-kin; grid.n - 1];
    Ok((d, e))
}

/// Gram matrix of the analytic wavefunctions, levels 0..=m, via the
/// classical-weight Gauss rules.
pub fn orthogonality_matrix(
    model: &PotentialModel,
    m: usize,
) -> Result<Vec<Vec<f64>>, SpectralError> {
    wavefunctions::gram_matrix(model, m).map_err(|e| SpectralError::Numeric(e.to_string()))
}

/// max over interior samples of |−ψ″ + (V + offset − E)ψ| / max|ψ|, with ψ″
/// analytic.
pub fn schrodinger_residual(
    model: &PotentialModel,
    wf: &WavefunctionSpec,
) -> Result<f64, SpectralError> {
    let offset = model.spectral_offset();
    let grid = wavefunctions::sample_grid(model, 100, wf.energy.abs());
    let mut max_psi = 0.0f64;
    let mut max_res = 0.0f64;
    for &x in &grid {
        let j = wf.jet(x).map_err(|e| SpectralError::Numeric(e.to_string()))?;
        let v = model
            .evaluate(x)
            .map_err(|e| SpectralError::Numeric(e.to_string()))?;
        max_psi = max_psi.max(j.f.abs());
        max_res = max_res.max((-j.d2 + (v + offset - wf.energy) * j.f).abs());
    }
    if max_psi == 0.0 {
        return Err(SpectralError::Numeric("wavefunction vanished on the grid".into()));
    }
    Ok(max_res / max_psi)
}

#[derive(Clone, Debug, Serialize)]
pub struct ConvergenceReport {
    /// Richardson estimate of the eigenvalue error order.
    pub order: f64,
    /// True when the errors decreased monotonically under refinement.
    pub reliable: bool,
    pub errors: Vec<f64>,
}

/// Ground-state error order across a ratio-2 grid refinement sequence.
pub fn convergence_order(
    model: &PotentialModel,
    grids: &[GridSpec],
) -> Result<ConvergenceReport, SpectralError> {
    if grids.len() < 3 {
        return Err(SpectralError::Grid(
            "convergence estimate needs at least 3 grids".into(),
        ));
    }
    for w in grids.windows(2) {
        let ratio = w[1].n as f64 / w[0].n as f64;
        if (ratio - 2.0).abs() > 0.05 {
            return Err(SpectralError::Grid(format!(
                "grids must refine by ratio 2, got {ratio:.3}"
            )));
        }
    }
    let exact = model.analytic_spectrum(1)[0];
    let mut errors = Vec::with_capacity(grids.len());
    for g in grids {
        let rep = fd_eigensolve(model, g, 1)?;
        errors.push((rep.eigenvalues[0] - exact).abs());
    }
    let reliable = errors.windows(2).all(|w| w[1] < w[0]);
    let mut orders = Vec::new();
    for w in errors.windows(2) {
        orders.push((w[0] / w[1]).log2());
    }
    let order = orders.iter().sum::<f64>() / orders.len() as f64;
    Ok(ConvergenceReport { order, reliable, errors })
}

#[cfg(test)]
mod tests;
