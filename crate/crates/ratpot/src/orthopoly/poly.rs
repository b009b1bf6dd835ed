//! Dense univariate polynomials in the working variable z.
//!
//! One carrier type serves every polynomial family in the crate: classical
//! and exceptional orthogonal polynomials, operator coefficients, potential
//! denominators. Coefficients are stored low-to-high with the trailing
//! coefficient nonzero; the zero polynomial is the empty sequence (degree
//! reported as `None`).

use crate::scalar::Scalar;

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Polynomial<T: Scalar> {
    coeffs: Vec<T>,
}

impl<T: Scalar> Polynomial<T> {
    pub fn zero() -> Self {
        Polynomial { coeffs: Vec::new() }
    }

    pub fn constant(c: T) -> Self {
        Self::from_coeffs(vec![c])
    }

    pub fn one() -> Self {
        Self::constant(T::one())
    }

    /// `c · z^k`.
    pub fn monomial(k: usize, c: T) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![T::zero(); k + 1];
        coeffs[k] = c;
        Polynomial { coeffs }
    }

    /// Builds from low-to-high coefficients, trimming trailing zeros.
    pub fn from_coeffs(coeffs: Vec<T>) -> Self {
        let mut p = Polynomial { coeffs };
        p.trim();
        p
    }

    fn trim(&mut self) {
        while matches!(self.coeffs.last(), Some(c) if c.is_zero()) {
            self.coeffs.pop();
        }
    }

    pub fn coeffs(&self) -> &[T] {
        &self.coeffs
    }

    /// Coefficient of z^k (zero beyond the stored length).
    pub fn coeff(&self, k: usize) -> T {
        self.coeffs.get(k).cloned().unwrap_or_else(T::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading_coeff(&self) -> Option<&T> {
        self.coeffs.last()
    }

    /// Horner evaluation.
    pub fn eval(&self, z: &T) -> T {
        let mut acc = T::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * z.clone() + c.clone();
        }
        acc
    }

    /// Term-by-term derivative.
    pub fn derivative(&self) -> Self {
        if self.coeffs.len() <= 1 {
            return Self::zero();
        }
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(k, c)| T::from_i64(k as i64) * c.clone())
            .collect();
        Self::from_coeffs(coeffs)
    }

    pub fn scale(&self, s: &T) -> Self {
        Self::from_coeffs(self.coeffs.iter().map(|c| c.clone() * s.clone()).collect())
    }

    /// p(z) ↦ p(−z).
    pub fn compose_neg(&self) -> Self {
        Self::from_coeffs(
            self.coeffs
                .iter()
                .enumerate()
                .map(|(k, c)| if k % 2 == 1 { -c.clone() } else { c.clone() })
                .collect(),
        )
    }

    pub fn add(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        let coeffs = (0..n).map(|k| self.coeff(k) + other.coeff(k)).collect();
        Self::from_coeffs(coeffs)
    }

    pub fn sub(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        let coeffs = (0..n).map(|k| self.coeff(k) - other.coeff(k)).collect();
        Self::from_coeffs(coeffs)
    }

    pub fn neg(&self) -> Self {
        Self::from_coeffs(self.coeffs.iter().map(|c| -c.clone()).collect())
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![T::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in other.coeffs.iter().enumerate() {
                coeffs[i + j] = coeffs[i + j].clone() + a.clone() * b.clone();
            }
        }
        Self::from_coeffs(coeffs)
    }

    /// Maps the coefficients into f64.
    pub fn to_f64(&self) -> Polynomial<f64> {
        Polynomial::from_coeffs(self.coeffs.iter().map(|c| c.to_f64()).collect())
    }
}

impl Polynomial<f64> {
    /// `[p(z), p′(z), …]` up to order `N−1`, for the analytic-derivative
    /// machinery.
    pub fn derivs<const N: usize>(&self, z: f64) -> [f64; N] {
        let mut out = [0.0; N];
        let mut p = self.clone();
        for (k, slot) in out.iter_mut().enumerate() {
            if k > 0 {
                p = p.derivative();
            }
            *slot = p.eval(&z);
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{int, rat, Rational};

    #[test]
    fn zero_polynomial_is_empty_with_no_degree() {
        let z = Polynomial::<Rational>::zero();
        assert!(z.is_zero());
        assert_eq!(z.degree(), None);
        assert_eq!(Polynomial::from_coeffs(vec![int(0), int(0)]), z);
    }

    #[test]
    fn degree_drops_by_one_under_derivative() {
        let p = Polynomial::from_coeffs(vec![int(0), int(0), int(1)]);
        let d = p.derivative();
        assert_eq!(d, Polynomial::from_coeffs(vec![int(0), int(2)]));
        assert_eq!(Polynomial::constant(int(5)).derivative(), Polynomial::zero());
    }

    #[test]
    fn horner_matches_direct_evaluation() {
        // p = [α+1, −1] with α = 1 at z = 0 → 2;  monomial z² at 3 → 9.
        let p = Polynomial::from_coeffs(vec![int(2), int(-1)]);
        assert_eq!(p.eval(&int(0)), int(2));
        assert_eq!(Polynomial::monomial(2, int(1)).eval(&int(3)), int(9));
        assert_eq!(Polynomial::constant(int(1)).eval(&rat(7, 3)), int(1));
    }

    #[test]
    fn compose_neg_flips_odd_coefficients() {
        let p = Polynomial::from_coeffs(vec![int(1), int(2), int(3), int(4)]);
        let q = p.compose_neg();
        assert_eq!(q, Polynomial::from_coeffs(vec![int(1), int(-2), int(3), int(-4)]));
        assert_eq!(q.compose_neg(), p);
    }
}
