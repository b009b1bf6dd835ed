//! Symmetric tridiagonal eigensolver: Sturm-sequence bisection for
//! eigenvalues, inverse iteration for eigenvectors.
//!
//! Serves both the Golub–Welsch quadrature construction (small matrices,
//! all eigenpairs) and the finite-difference Schrödinger oracle (large
//! matrices, lowest few eigenvalues).

use crate::error::SpectralError;

/// Number of eigenvalues of T = tridiag(e, d, e) strictly below `lambda`,
/// by the LDLᵀ inertia count.
pub fn count_below(d: &[f64], e: &[f64], lambda: f64) -> usize {
    debug_assert_eq!(e.len() + 1, d.len());
    let safe = f64::MIN_POSITIVE.sqrt();
    let mut count = 0usize;
    let mut t = d[0] - lambda;
    for i in 0..d.len() {
        // clamp near-zero pivots to a tiny negative so an exact hit counts
        // as "below or equal" and bisection stays consistent
        if t.abs() < safe {
            t = -safe;
        }
        if t < 0.0 {
            count += 1;
        }
        if i + 1 < d.len() {
            t = d[i + 1] - lambda - e[i] * e[i] / t;
        }
    }
    count
}

fn gershgorin(d: &[f64], e: &[f64]) -> (f64, f64) {
    let mut lo = f64::INFINITY;
    let mut hi = f64::NEG_INFINITY;
    for i in 0..d.len() {
        let left = if i > 0 { e[i - 1].abs() } else { 0.0 };
        let right = if i < e.len() { e[i].abs() } else { 0.0 };
        lo = lo.min(d[i] - left - right);
        hi = hi.max(d[i] + left + right);
    }
    (lo, hi)
}

/// Lowest `k` eigenvalues in ascending order, by bisection.
pub fn lowest_eigenvalues(d: &[f64], e: &[f64], k: usize) -> Result<Vec<f64>, SpectralError> {
    let n = d.len();
    if n == 0 || e.len() + 1 != n {
        return Err(SpectralError::Numeric(
            "tridiagonal dimensions inconsistent".into(),
        ));
    }
    if k > n {
        return Err(SpectralError::Numeric(format!(
            "requested {k} eigenvalues of an order-{n} matrix"
        )));
    }
    if d.iter().any(|v| !v.is_finite()) || e.iter().any(|v| !v.is_finite()) {
        return Err(SpectralError::Numeric(
            "non-finite matrix entry in eigensolve".into(),
        ));
    }
    let (glo, ghi) = gershgorin(d, e);
    let scale = ghi.abs().max(glo.abs()).max(1.0);
    let mut out = Vec::with_capacity(k);
    for j in 0..k {
        let mut lo = glo;
        let mut hi = ghi;
        // keep [lo, hi) bracketing the j-th smallest eigenvalue
        for _ in 0..120 {
            if hi - lo <= 1e-14 * scale {
                break;
            }
            let mid = 0.5 * (lo + hi);
            if count_below(d, e, mid) > j {
                hi = mid;
            } else {
                lo = mid;
            }
        }
        out.push(0.5 * (lo + hi));
    }
    Ok(out)
}

/// All eigenvalues in ascending order (small matrices only).
pub fn all_eigenvalues(d: &[f64], e: &[f64]) -> Result<Vec<f64>, SpectralError> {
    lowest_eigenvalues(d, e, d.len())
}

/// Normalized eigenvector for an eigenvalue estimate, by inverse iteration
/// with a perturbed shift.
pub fn eigenvector(d: &[f64], e: &[f64], lambda: f64) -> Result<Vec<f64>, SpectralError> {
    let n = d.len();
    let (glo, ghi) = gershgorin(d, e);
    let shift = lambda + (ghi - glo).max(1.0) * 1e-13;
    // deterministic start vector with sign structure unlikely to be
    // orthogonal to the target
    let mut v: Vec<f64> = (0..n)
        .map(|i| if i % 3 == 0 { 1.0 } else { 0.5 + (i % 7) as f64 * 0.1 })
        .collect();
    normalize(&mut v)?;
    for _ in 0..3 {
        let mut w = solve_shifted(d, e, shift, &v)?;
        normalize(&mut w)?;
        v = w;
    }
    Ok(v)
}

fn normalize(v: &mut [f64]) -> Result<(), SpectralError> {
    let norm = v.iter().map(|x| x * x).sum::<f64>().sqrt();
    if !(norm.is_finite() && norm > 0.0) {
        return Err(SpectralError::Numeric(
            "inverse iteration produced a degenerate vector".into(),
        ));
    }
    for x in v.iter_mut() {
        *x /= norm;
    }
    Ok(())
}

/// Solves (T − shift·I) x = b by Gaussian elimination with partial pivoting
/// (fill-in limited to the second superdiagonal).
fn solve_shifted(d: &[f64], e: &[f64], shift: f64, b: &[f64]) -> Result<Vec<f64>, SpectralError> {
    let n = d.len();
    let mut diag: Vec<f64> = d.iter().map(|x| x - shift).collect();
    let mut sup1: Vec<f64> = e.to_vec();
    sup1.push(0.0);
    let mut sup2 = vec![0.0; n];
    let mut x: Vec<f64> = b.to_vec();
    let tiny = f64::MIN_POSITIVE.sqrt();

    for i in 0..n.saturating_sub(1) {
        // at this point row i may carry fill-in while row i+1 is untouched:
        // row i   = (diag[i], sup1[i], sup2[i]=0 unless swapped below)
        // row i+1 = (e[i], diag[i+1], e[i+1])
        let sub = e[i];
        if diag[i].abs() >= sub.abs() {
            let piv = if diag[i].abs() < tiny {
                tiny.copysign(if diag[i] == 0.0 { 1.0 } else { diag[i] })
            } else {
                diag[i]
            };
            diag[i] = piv;
            let m = sub / piv;
            diag[i + 1] -= m * sup1[i];
            if i + 1 < n - 1 {
                sup1[i + 1] -= m * sup2[i];
            }
            x[i + 1] -= m * x[i];
        } else {
            // pivot on row i+1: swap, then eliminate
            let m = diag[i] / sub;
            let new_diag_next = sup1[i] - m * diag[i + 1];
            let new_sup_next = sup2[i] - m * if i + 1 < n - 1 { sup1[i + 1] } else { 0.0 };
            diag[i] = sub;
            let old_sup_next = if i + 1 < n - 1 { sup1[i + 1] } else { 0.0 };
            sup1[i] = diag[i + 1];
            sup2[i] = old_sup_next;
            diag[i + 1] = new_diag_next;
            if i + 1 < n - 1 {
                sup1[i + 1] = new_sup_next;
            }
            let xi = x[i];
            x[i] = x[i + 1];
            x[i + 1] = xi - m * x[i];
        }
    }
    if diag[n - 1].abs() < tiny {
        diag[n - 1] = tiny;
    }
    // back substitution
    x[n - 1] /= diag[n - 1];
    if n >= 2 {
        x[n - 2] = (x[n - 2] - sup1[n - 2] * x[n - 1]) / diag[n - 2];
    }
    for i in (0..n.saturating_sub(2)).rev() {
        x[i] = (x[i] - sup1[i] * x[i + 1] - sup2[i] * x[i + 2]) / diag[i];
    }
    if x.iter().any(|v| !v.is_finite()) {
        return Err(SpectralError::Numeric(
            "shifted tridiagonal solve overflowed".into(),
        ));
    }
    Ok(x)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn two_by_two_exact() {
        // [[2,1],[1,2]] has eigenvalues 1 and 3.
        let ev = all_eigenvalues(&[2.0, 2.0], &[1.0]).unwrap();
        assert!((ev[0] - 1.0).abs() < 1e-12);
        assert!((ev[1] - 3.0).abs() < 1e-12);
    }

    #[test]
    fn free_laplacian_eigenvalues() {
        // -d²/dx² on n interior points of (0, π): FD eigenvalues
        // (2 − 2 cos(kh)) / h².
        let n = 200;
        let h = std::f64::consts::PI / (n as f64 + 1.0);
        let d = vec![2.0 / (h * h); n];
        let e = vec![-1.0 / (h * h); n - 1];
        let ev = lowest_eigenvalues(&d, &e, 4).unwrap();
        for (k, lam) in ev.iter().enumerate() {
            let exact = (2.0 - 2.0 * ((k as f64 + 1.0) * h).cos()) / (h * h);
            assert!((lam - exact).abs() < 1e-9 * exact.max(1.0), "k={k}");
        }
    }

    #[test]
    fn eigenvector_residual_is_small() {
        let n = 120;
        let d: Vec<f64> = (0..n).map(|i| 2.0 + (i as f64 * 0.37).sin()).collect();
        let e: Vec<f64> = (0..n - 1).map(|i| -1.0 + 0.2 * (i as f64 * 0.11).cos()).collect();
        let ev = lowest_eigenvalues(&d, &e, 3).unwrap();
        for lam in ev {
            let v = eigenvector(&d, &e, lam).unwrap();
            let mut res = 0.0f64;
            for i in 0..n {
                let mut t = (d[i] - lam) * v[i];
                if i > 0 {
                    t += e[i - 1] * v[i - 1];
                }
                if i < n - 1 {
                    t += e[i] * v[i + 1];
                }
                res = res.max(t.abs());
            }
            assert!(res < 1e-8, "residual {res}");
        }
    }

    #[test]
    fn rejects_bad_input() {
        assert!(lowest_eigenvalues(&[1.0, 2.0], &[f64::NAN], 1).is_err());
        assert!(lowest_eigenvalues(&[1.0], &[], 2).is_err());
    }
}
