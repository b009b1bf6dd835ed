//! Rationally-extended radial-oscillator and Scarf I potentials, the
//! exceptional orthogonal polynomials appearing in their bound states, and a
//! verification engine for the spectral claims attached to them.
//!
//! Layers, bottom to top:
//!
//! * [`scalar`] / [`orthopoly`]: exact-rational and f64 polynomial algebra,
//!   classical families (Laguerre, Jacobi, Gegenbauer), Gauss rules.
//! * [`xpoly`]: X₁-Laguerre / X₁-Jacobi polynomials and their quadratic
//!   generalizations: first-order operator definitions, classical-basis
//!   expansions, limiting relations.
//! * [`potentials`]: conventional and rationally-extended potential models
//!   with parameter gates, superpotentials, and factorization data.
//! * [`wavefunctions`]: analytic bound-state eigenfunctions with exact
//!   derivatives and normalization constants.
//! * [`susy`]: first-order SUSY partner machinery: intertwining checks,
//!   case classification, shape-invariance reports.
//! * [`spectral`]: finite-difference eigensolver and quadrature Gram
//!   matrices, the numerical oracle for every analytic claim.

pub mod error;
pub mod jet;
pub mod orthopoly;
pub mod potentials;
pub mod scalar;
pub mod spectral;
pub mod susy;
pub mod tridiag;
pub mod verify;
pub mod wavefunctions;
pub mod xpoly;

pub use scalar::{Rational, Scalar};

#[cfg(test)]
mod concurrency_contract {
    // values are immutable after construction and safe to share across tasks
    fn assert_send_sync<T: Send + Sync>() {}

    #[test]
    fn core_types_are_send_and_sync() {
        assert_send_sync::<crate::orthopoly::Polynomial<crate::Rational>>();
        assert_send_sync::<crate::orthopoly::QuadratureRule>();
        assert_send_sync::<crate::xpoly::ExceptionalFamily<f64>>();
        assert_send_sync::<crate::potentials::PotentialModel>();
        assert_send_sync::<crate::potentials::Superpotential>();
        assert_send_sync::<crate::wavefunctions::WavefunctionSpec>();
        assert_send_sync::<crate::spectral::SpectralReport>();
    }
}
