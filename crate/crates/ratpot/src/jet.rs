//! Order-3 jets: value plus first three derivatives, propagated exactly
//! through products, quotients, compositions, and the elementary factors
//! (powers, Gaussians, trig) that wavefunctions and superpotentials are
//! built from. This is what makes every Schrödinger residual and
//! intertwining check run on analytic derivatives instead of finite
//! differences.

use std::ops::{Add, Div, Mul, Neg, Sub};

use crate::orthopoly::Polynomial;

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Jet {
    pub f: f64,
    pub d1: f64,
    pub d2: f64,
    pub d3: f64,
}

impl Jet {
    pub fn constant(c: f64) -> Self {
        Jet { f: c, d1: 0.0, d2: 0.0, d3: 0.0 }
    }

    /// The identity function evaluated at x.
    pub fn var(x: f64) -> Self {
        Jet { f: x, d1: 1.0, d2: 0.0, d3: 0.0 }
    }

    pub fn scale(self, s: f64) -> Self {
        Jet { f: self.f * s, d1: self.d1 * s, d2: self.d2 * s, d3: self.d3 * s }
    }

    pub fn recip(self) -> Self {
        let r0 = 1.0 / self.f;
        let (b1, b2, b3) = (self.d1, self.d2, self.d3);
        let r1 = -b1 * r0 * r0;
        let r2 = (2.0 * b1 * b1 - self.f * b2) * r0 * r0 * r0;
        let r3 = (-6.0 * b1 * b1 * b1 + 6.0 * self.f * b1 * b2 - self.f * self.f * b3)
            * r0
            * r0
            * r0
            * r0;
        Jet { f: r0, d1: r1, d2: r2, d3: r3 }
    }

    /// e^{u} for a jet u.
    pub fn exp(self) -> Self {
        let f0 = self.f.exp();
        let f1 = self.d1 * f0;
        let f2 = self.d2 * f0 + self.d1 * f1;
        let f3 = self.d3 * f0 + 2.0 * self.d2 * f1 + self.d1 * f2;
        Jet { f: f0, d1: f1, d2: f2, d3: f3 }
    }

    /// u^p for a jet u with u > 0 (real exponent).
    pub fn powf(self, p: f64) -> Self {
        let (u0, u1, u2, u3) = (self.f, self.d1, self.d2, self.d3);
        let g1 = p * u0.powf(p - 1.0);
        let g2 = p * (p - 1.0) * u0.powf(p - 2.0);
        let g3 = p * (p - 1.0) * (p - 2.0) * u0.powf(p - 3.0);
        Jet {
            f: u0.powf(p),
            d1: g1 * u1,
            d2: g2 * u1 * u1 + g1 * u2,
            d3: g3 * u1 * u1 * u1 + 3.0 * g2 * u1 * u2 + g1 * u3,
        }
    }

    /// sin evaluated at the plain variable x.
    pub fn sin_var(x: f64) -> Self {
        let (s, c) = x.sin_cos();
        Jet { f: s, d1: c, d2: -s, d3: -c }
    }

    /// cos evaluated at the plain variable x.
    pub fn cos_var(x: f64) -> Self {
        let (s, c) = x.sin_cos();
        Jet { f: c, d1: -s, d2: -c, d3: s }
    }

    /// p(u) for a polynomial p and inner jet u (Faà di Bruno to order 3).
    pub fn compose_poly(p: &Polynomial<f64>, u: Jet) -> Self {
        let g: [f64; 4] = p.derivs(u.f);
        let (u1, u2, u3) = (u.d1, u.d2, u.d3);
        Jet {
            f: g[0],
            d1: g[1] * u1,
            d2: g[2] * u1 * u1 + g[1] * u2,
            d3: g[3] * u1 * u1 * u1 + 3.0 * g[2] * u1 * u2 + g[1] * u3,
        }
    }

    pub fn is_finite(&self) -> bool {
        self.f.is_finite() && self.d1.is_finite() && self.d2.is_finite() && self.d3.is_finite()
    }
}

impl Add for Jet {
    type Output = Jet;
    fn add(self, o: Jet) -> Jet {
        Jet { f: self.f + o.f, d1: self.d1 + o.d1, d2: self.d2 + o.d2, d3: self.d3 + o.d3 }
    }
}

impl Sub for Jet {
    type Output = Jet;
    fn sub(self, o: Jet) -> Jet {
        Jet { f: self.f - o.f, d1: self.d1 - o.d1, d2: self.d2 - o.d2, d3: self.d3 - o.d3 }
    }
}

impl Neg for Jet {
    type Output = Jet;
    fn neg(self) -> Jet {
        self.scale(-1.0)
    }
}

impl Mul for Jet {
    type Output = Jet;
    fn mul(self, o: Jet) -> Jet {
        Jet {
            f: self.f * o.f,
            d1: self.d1 * o.f + self.f * o.d1,
            d2: self.d2 * o.f + 2.0 * self.d1 * o.d1 + self.f * o.d2,
            d3: self.d3 * o.f + 3.0 * self.d2 * o.d1 + 3.0 * self.d1 * o.d2 + self.f * o.d3,
        }
    }
}

impl Div for Jet {
    type Output = Jet;
    #[allow(clippy::suspicious_arithmetic_impl)] // a/b as a * b^{-1} on jets
    fn div(self, o: Jet) -> Jet {
        self * o.recip()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::orthopoly::Polynomial;

    fn fd_jet(f: impl Fn(f64) -> f64, x: f64) -> Jet {
        // Richardson-boosted O(h²) central differences, good to ~1e-8 here.
        let h = 1e-2;
        let d = |h: f64| (f(x + h) - f(x - h)) / (2.0 * h);
        let d2 = |h: f64| (f(x + h) - 2.0 * f(x) + f(x - h)) / (h * h);
        let d3 = |h: f64| {
            (f(x + 2.0 * h) - 2.0 * f(x + h) + 2.0 * f(x - h) - f(x - 2.0 * h)) / (2.0 * h * h * h)
        };
        let rich = |g: &dyn Fn(f64) -> f64| (4.0 * g(h / 2.0) - g(h)) / 3.0;
        Jet { f: f(x), d1: rich(&d), d2: rich(&d2), d3: rich(&d3) }
    }

    fn close(a: Jet, b: Jet, tol: f64) {
        assert!((a.f - b.f).abs() < tol, "f: {} vs {}", a.f, b.f);
        assert!((a.d1 - b.d1).abs() < tol, "d1: {} vs {}", a.d1, b.d1);
        assert!((a.d2 - b.d2).abs() < tol, "d2: {} vs {}", a.d2, b.d2);
        assert!((a.d3 - b.d3).abs() < tol * 10.0, "d3: {} vs {}", a.d3, b.d3);
    }

    #[test]
    fn monomial_jets_are_exact() {
        let x = 1.5;
        let j = Jet::var(x) * Jet::var(x) * Jet::var(x);
        assert_eq!(j, Jet { f: x * x * x, d1: 3.0 * x * x, d2: 6.0 * x, d3: 6.0 });
    }

    #[test]
    fn gaussian_second_derivative_identity() {
        // ψ = e^{−x²/4} has ψ″ = (x²/4 − 1/2) e^{−x²/4}.
        let x = 0.9;
        let u = Jet::var(x) * Jet::var(x) * Jet::constant(-0.25).scale(1.0);
        let g = u.exp();
        let expect = (x * x / 4.0 - 0.5) * (-x * x / 4.0).exp();
        assert!((g.d2 - expect).abs() < 1e-14);
    }

    #[test]
    fn composite_matches_finite_differences() {
        let p = Polynomial::from_coeffs(vec![2.0, -1.0, 0.5, 1.0]);
        let f = |x: f64| {
            let z = x.sin();
            (2.0 - z + 0.5 * z * z + z * z * z) / (1.0 + x * x) * (0.3 * x).exp()
        };
        for &x in &[0.3, 1.1, -0.7] {
            let z = Jet::sin_var(x);
            let num = Jet::compose_poly(&p, z);
            let den = Jet::constant(1.0) + Jet::var(x) * Jet::var(x);
            let j = num / den * Jet::var(x).scale(0.3).exp();
            close(j, fd_jet(f, x), 1e-6);
        }
    }

    #[test]
    fn power_jets_match_finite_differences() {
        let f = |x: f64| (1.0 - x.sin()).powf(1.3);
        let x = 0.4;
        let j = (Jet::constant(1.0) - Jet::sin_var(x)).powf(1.3);
        close(j, fd_jet(f, x), 1e-6);
    }

    #[test]
    fn reciprocal_third_derivative() {
        // 1/x: derivatives −1/x², 2/x³, −6/x⁴.
        let x = 1.3;
        let j = Jet::var(x).recip();
        close(
            j,
            Jet {
                f: 1.0 / x,
                d1: -1.0 / (x * x),
                d2: 2.0 / (x * x * x),
                d3: -6.0 / (x * x * x * x),
            },
            1e-12,
        );
    }
}
