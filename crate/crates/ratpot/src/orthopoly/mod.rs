//! Classical orthogonal polynomials, exact polynomial arithmetic, Gauss
//! quadrature, and log-gamma.

pub mod classical;
pub mod poly;
pub mod quadrature;
pub mod special;

pub use classical::{factorial, generalized_binomial, rising, ClassicalFamily};
pub use poly::Polynomial;
pub use quadrature::{gauss_rule, QuadWeight, QuadratureRule};
pub use special::{log_beta, log_gamma};
