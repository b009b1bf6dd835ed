//! Gauss quadrature rules built from recurrence coefficients (Golub–Welsch).

use crate::error::OrthoError;
use crate::orthopoly::classical::ClassicalFamily;
use crate::tridiag;

/// Weight functions a rule can be built for.
#[derive(Clone, Debug, PartialEq)]
pub enum QuadWeight {
    Classical(ClassicalFamily<f64>),
    /// Unit weight on [a, b].
    Legendre { a: f64, b: f64 },
}

#[derive(Clone, Debug)]
pub struct QuadratureRule {
    pub nodes: Vec<f64>,
    pub weights: Vec<f64>,
    pub weight_id: QuadWeight,
    /// An n-point rule integrates polynomials up to degree 2n−1 exactly
    /// against its weight.
    pub exactness_degree: usize,
}

impl QuadratureRule {
    /// Σ w_i f(x_i): approximates ∫ f(x) w(x) dx.
    pub fn integrate(&self, f: impl Fn(f64) -> f64) -> f64 {
        self.nodes
            .iter()
            .zip(&self.weights)
            .map(|(x, w)| w * f(*x))
            .sum()
    }
}

/// n-point Gauss rule for the given weight. Nodes ascend; weights are
/// positive.
pub fn gauss_rule(weight: &QuadWeight, n: usize) -> Result<QuadratureRule, OrthoError> {
    if n == 0 {
        return Err(OrthoError::Domain("gauss_rule requires n >= 1".into()));
    }
    match weight {
        QuadWeight::Classical(family) => {
            family.validate()?;
            let (a, b) = family.monic_recurrence(n);
            let mu0 = family.weight_integral()?;
            let (nodes, weights) = golub_welsch(&a, &b, mu0)?;
            Ok(QuadratureRule {
                nodes,
                weights,
                weight_id: weight.clone(),
                exactness_degree: 2 * n - 1,
            })
        }
        QuadWeight::Legendre { a, b } => {
            #[allow(clippy::neg_cmp_op_on_partial_ord)] // !(a < b) also rejects NaN
            if !(a < b) {
                return Err(OrthoError::Domain(format!(
                    "Legendre interval [{a}, {b}] is empty"
                )));
            }
            let base = ClassicalFamily::Jacobi { alpha: 0.0, beta: 0.0 };
            let (ra, rb) = base.monic_recurrence(n);
            let (nodes, weights) = golub_welsch(&ra, &rb, 2.0)?;
            let half = 0.5 * (b - a);
            let mid = 0.5 * (a + b);
            Ok(QuadratureRule {
                nodes: nodes.iter().map(|t| mid + half * t).collect(),
                weights: weights.iter().map(|w| w * half).collect(),
                weight_id: weight.clone(),
                exactness_degree: 2 * n - 1,
            })
        }
    }
}

fn golub_welsch(a: &[f64], b: &[f64], mu0: f64) -> Result<(Vec<f64>, Vec<f64>), OrthoError> {
    let n = a.len();
    let off: Vec<f64> = b[1..]
        .iter()
        .map(|v| {
            if *v >= 0.0 {
                Ok(v.sqrt())
            } else {
                Err(OrthoError::Numeric(format!(
                    "negative recurrence coefficient b = {v}"
                )))
            }
        })
        .collect::<Result<_, _>>()?;
    let nodes = tridiag::all_eigenvalues(a, &off)
        .map_err(|e| OrthoError::Numeric(format!("Jacobi-matrix eigensolve failed: {e}")))?;
    let mut weights = Vec::with_capacity(n);
    if n == 1 {
        return Ok((nodes, vec![mu0]));
    }
    for lam in &nodes {
        let v = tridiag::eigenvector(a, &off, *lam)
            .map_err(|e| OrthoError::Numeric(format!("Jacobi-matrix eigenvector failed: {e}")))?;
        weights.push(mu0 * v[0] * v[0]);
    }
    Ok((nodes, weights))
}
