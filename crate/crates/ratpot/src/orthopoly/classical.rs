//! Classical orthogonal polynomial families: Laguerre, Jacobi, Gegenbauer.
//!
//! Three-term recurrences with the standard (Abramowitz–Stegun) leading-term
//! normalization; no monic rescaling. Coefficients are exact whenever the
//! family parameters are rational.

use crate::error::OrthoError;
use crate::orthopoly::poly::Polynomial;
use crate::orthopoly::special::{log_beta, log_gamma};
use crate::scalar::Scalar;

#[derive(Clone, Debug, PartialEq)]
pub enum ClassicalFamily<T: Scalar> {
    /// Weight z^α e^{−z} on (0, ∞), α > −1.
    Laguerre { alpha: T },
    /// Weight (1−z)^α (1+z)^β on (−1, 1), α, β > −1.
    Jacobi { alpha: T, beta: T },
    /// Weight (1−z²)^{λ−1/2} on (−1, 1), λ > −1/2.
    Gegenbauer { lambda: T },
}

/// Rising factorial x (x+1) ⋯ (x+n−1).
pub fn rising<T: Scalar>(x: &T, n: usize) -> T {
    let mut acc = T::one();
    for j in 0..n {
        acc = acc * (x.clone() + T::from_i64(j as i64));
    }
    acc
}

/// Generalized binomial C(x, n) = x (x−1) ⋯ (x−n+1) / n!.
pub fn generalized_binomial<T: Scalar>(x: &T, n: usize) -> T {
    let mut num = T::one();
    for j in 0..n {
        num = num * (x.clone() - T::from_i64(j as i64));
    }
    num / T::from_i64(factorial_i64(n))
}

fn factorial_i64(n: usize) -> i64 {
    (1..=n as i64).product::<i64>().max(1)
}

/// n! as a scalar, built by repeated multiplication so it stays exact for
/// rationals at any order.
pub fn factorial<T: Scalar>(n: usize) -> T {
    let mut acc = T::one();
    for j in 1..=n {
        acc = acc * T::from_i64(j as i64);
    }
    acc
}

impl<T: Scalar> ClassicalFamily<T> {
    pub fn validate(&self) -> Result<(), OrthoError> {
        let neg_one = T::from_i64(-1);
        let neg_half = T::from_ratio(-1, 2);
        let ok = match self {
            ClassicalFamily::Laguerre { alpha } => *alpha > neg_one,
            ClassicalFamily::Jacobi { alpha, beta } => *alpha > neg_one && *beta > neg_one,
            ClassicalFamily::Gegenbauer { lambda } => *lambda > neg_half,
        };
        if ok {
            Ok(())
        } else {
            Err(OrthoError::Domain(format!(
                "classical family parameter out of range: {:?}",
                self.describe()
            )))
        }
    }

    fn describe(&self) -> String {
        match self {
            ClassicalFamily::Laguerre { alpha } => format!("Laguerre(alpha={alpha:?})"),
            ClassicalFamily::Jacobi { alpha, beta } => {
                format!("Jacobi(alpha={alpha:?}, beta={beta:?})")
            }
            ClassicalFamily::Gegenbauer { lambda } => format!("Gegenbauer(lambda={lambda:?})"),
        }
    }

    /// The degree-ν member of the family.
    pub fn polynomial(&self, nu: usize) -> Result<Polynomial<T>, OrthoError> {
        self.validate()?;
        Ok(self.polynomial_unchecked(nu))
    }

    pub(crate) fn polynomial_unchecked(&self, nu: usize) -> Polynomial<T> {
        match self {
            ClassicalFamily::Laguerre { alpha } => laguerre(alpha, nu),
            ClassicalFamily::Jacobi { alpha, beta } => jacobi(alpha, beta, nu),
            ClassicalFamily::Gegenbauer { lambda } => gegenbauer(lambda, nu),
        }
    }

    /// Closed-form leading coefficient (exact for rational parameters).
    pub fn leading_coeff(&self, nu: usize) -> T {
        match self {
            // (−1)^ν / ν!
            ClassicalFamily::Laguerre { .. } => {
                let sign = if nu.is_multiple_of(2) { 1 } else { -1 };
                T::from_i64(sign) / factorial::<T>(nu)
            }
            // 2^{−ν} C(2ν+α+β, ν)
            ClassicalFamily::Jacobi { alpha, beta } => {
                let arg = T::from_i64(2 * nu as i64) + alpha.clone() + beta.clone();
                generalized_binomial(&arg, nu) / pow2::<T>(nu)
            }
            // 2^ν (λ)_ν / ν!
            ClassicalFamily::Gegenbauer { lambda } => {
                pow2::<T>(nu) * rising(lambda, nu) / factorial::<T>(nu)
            }
        }
    }
}

fn pow2<T: Scalar>(n: usize) -> T {
    let mut acc = T::one();
    for _ in 0..n {
        acc = acc * T::from_i64(2);
    }
    acc
}

fn laguerre<T: Scalar>(alpha: &T, nu: usize) -> Polynomial<T> {
    // L_0 = 1, L_1 = 1+α−z, (ν+1) L_{ν+1} = (2ν+α+1−z) L_ν − (ν+α) L_{ν−1}
    let one = Polynomial::one();
    if nu == 0 {
        return one;
    }
    let mut prev = one;
    let mut cur = Polynomial::from_coeffs(vec![alpha.clone() + T::one(), -T::one()]);
    for k in 1..nu {
        let kf = T::from_i64(k as i64);
        let lin = Polynomial::from_coeffs(vec![
            T::from_i64(2 * k as i64) + alpha.clone() + T::one(),
            -T::one(),
        ]);
        let next = lin
            .mul(&cur)
            .sub(&prev.scale(&(kf.clone() + alpha.clone())))
            .scale(&(T::one() / (kf + T::one())));
        prev = cur;
        cur = next;
    }
    cur
}

fn jacobi<T: Scalar>(alpha: &T, beta: &T, nu: usize) -> Polynomial<T> {
    let one = Polynomial::one();
    if nu == 0 {
        return one;
    }
    let two = T::from_i64(2);
    let ab = alpha.clone() + beta.clone();
    let mut prev = one;
    let mut cur = Polynomial::from_coeffs(vec![
        (alpha.clone() - beta.clone()) / two.clone(),
        (ab.clone() + two.clone()) / two.clone(),
    ]);
    for k in 1..nu {
        // 2(k+1)(k+α+β+1)(2k+α+β) P_{k+1}
        //   = (2k+α+β+1)[(2k+α+β+2)(2k+α+β) z + α²−β²] P_k
        //     − 2(k+α)(k+β)(2k+α+β+2) P_{k−1}
        let kf = T::from_i64(k as i64);
        let n2ab = T::from_i64(2 * k as i64) + ab.clone();
        let c1 = n2ab.clone() + T::one();
        let c2 = n2ab.clone() + two.clone();
        let a2b2 = alpha.clone() * alpha.clone() - beta.clone() * beta.clone();
        let lin = Polynomial::from_coeffs(vec![a2b2, c2.clone() * n2ab.clone()]).scale(&c1);
        let rhs = lin.mul(&cur).sub(&prev.scale(
            &(two.clone() * (kf.clone() + alpha.clone()) * (kf.clone() + beta.clone()) * c2),
        ));
        let denom = two.clone() * (kf.clone() + T::one()) * (kf + ab.clone() + T::one()) * n2ab;
        let next = rhs.scale(&(T::one() / denom));
        prev = cur;
        cur = next;
    }
    cur
}

fn gegenbauer<T: Scalar>(lambda: &T, nu: usize) -> Polynomial<T> {
    // C_0 = 1, C_1 = 2λz, (ν+1) C_{ν+1} = 2(ν+λ) z C_ν − (ν+2λ−1) C_{ν−1}
    let one = Polynomial::one();
    if nu == 0 {
        return one;
    }
    let two = T::from_i64(2);
    let mut prev = one;
    let mut cur = Polynomial::monomial(1, two.clone() * lambda.clone());
    for k in 1..nu {
        let kf = T::from_i64(k as i64);
        let zfac = Polynomial::monomial(1, two.clone() * (kf.clone() + lambda.clone()));
        let next = zfac
            .mul(&cur)
            .sub(&prev.scale(&(kf.clone() + two.clone() * lambda.clone() - T::one())))
            .scale(&(T::one() / (kf + T::one())));
        prev = cur;
        cur = next;
    }
    cur
}

impl ClassicalFamily<f64> {
    /// ∫ w(z) dz over the support (the zeroth moment μ₀).
    pub fn weight_integral(&self) -> Result<f64, OrthoError> {
        match self {
            ClassicalFamily::Laguerre { alpha } => Ok(log_gamma(alpha + 1.0)?.exp()),
            ClassicalFamily::Jacobi { alpha, beta } => {
                Ok(((alpha + beta + 1.0) * 2.0_f64.ln() + log_beta(alpha + 1.0, beta + 1.0)?).exp())
            }
            ClassicalFamily::Gegenbauer { lambda } => {
                ClassicalFamily::Jacobi { alpha: lambda - 0.5, beta: lambda - 0.5 }
                    .weight_integral()
            }
        }
    }

    /// Monic three-term recurrence coefficients (a_k, b_k), k = 0..n−1, with
    /// p_{k+1} = (z − a_k) p_k − b_k p_{k−1} and b_0 unused. Feeds the
    /// Golub–Welsch construction.
    pub fn monic_recurrence(&self, n: usize) -> (Vec<f64>, Vec<f64>) {
        match self {
            ClassicalFamily::Laguerre { alpha } => {
                let a = (0..n).map(|k| 2.0 * k as f64 + alpha + 1.0).collect();
                let b = (0..n).map(|k| k as f64 * (k as f64 + alpha)).collect();
                (a, b)
            }
            ClassicalFamily::Jacobi { alpha, beta } => {
                let (al, be) = (*alpha, *beta);
                let s = al + be;
                let a = (0..n)
                    .map(|k| {
                        let k = k as f64;
                        if k == 0.0 {
                            (be - al) / (s + 2.0)
                        } else {
                            (be * be - al * al) / ((2.0 * k + s) * (2.0 * k + s + 2.0))
                        }
                    })
                    .collect();
                let b = (0..n)
                    .map(|k| {
                        let kf = k as f64;
                        match k {
                            0 => 0.0,
                            // the (1+α+β) factor cancels; written cancelled so
                            // α+β = −1 stays finite
                            1 => 4.0 * (1.0 + al) * (1.0 + be) / ((2.0 + s).powi(2) * (3.0 + s)),
                            _ => {
                                4.0 * kf * (kf + al) * (kf + be) * (kf + s)
                                    / ((2.0 * kf + s).powi(2)
                                        * (2.0 * kf + s + 1.0)
                                        * (2.0 * kf + s - 1.0))
                            }
                        }
                    })
                    .collect();
                (a, b)
            }
            ClassicalFamily::Gegenbauer { lambda } => {
                ClassicalFamily::Jacobi { alpha: lambda - 0.5, beta: lambda - 0.5 }
                    .monic_recurrence(n)
            }
        }
    }

    /// Squared L²(w) norm h_ν = ∫ p_ν² w dz of the degree-ν member.
    pub fn norm_squared(&self, nu: usize) -> Result<f64, OrthoError> {
        let nf = nu as f64;
        match self {
            ClassicalFamily::Laguerre { alpha } => {
                Ok((log_gamma(nf + alpha + 1.0)? - log_gamma(nf + 1.0)?).exp())
            }
            ClassicalFamily::Jacobi { alpha, beta } => {
                let s = alpha + beta;
                let ln = (s + 1.0) * 2.0_f64.ln() - (2.0 * nf + s + 1.0).ln()
                    + log_gamma(nf + alpha + 1.0)?
                    + log_gamma(nf + beta + 1.0)?
                    - log_gamma(nf + s + 1.0)?
                    - log_gamma(nf + 1.0)?;
                Ok(ln.exp())
            }
            ClassicalFamily::Gegenbauer { lambda } => {
                let ln = std::f64::consts::PI.ln() + (1.0 - 2.0 * lambda) * 2.0_f64.ln()
                    + log_gamma(nf + 2.0 * lambda)?
                    - log_gamma(nf + 1.0)?
                    - (nf + lambda).ln()
                    - 2.0 * log_gamma(*lambda)?;
                Ok(ln.exp())
            }
        }
    }
}
