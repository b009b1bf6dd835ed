//! Exceptional orthogonal polynomials and their quadratic-case
//! generalizations.
//!
//! Families:
//! * `X1Laguerre`: degree ν+1, from the linear extension of the radial
//!   oscillator;
//! * `L1`, `L2`: degree ν+2 Laguerre-type families (quadratic cases I/II),
//!   candidates for X₂-Laguerre;
//! * `L3`: degree ν+3 Laguerre-type family (quadratic case III, not a
//!   complete orthogonal set);
//! * `X1Jacobi`: degree ν+1, from the linear Scarf I extension;
//! * `P1`, `P3`: degree ν+2 / ν+3 Jacobi-type families (quadratic cases).
//!
//! Each family is produced in its defining normalization. The classical-basis
//! expansions and the first-order operator actions are exposed separately so
//! the construction can be cross-checked route against route in exact
//! arithmetic.

use crate::error::XPolyError;
use crate::orthopoly::classical::{generalized_binomial, factorial, ClassicalFamily};
use crate::orthopoly::poly::Polynomial;
use crate::scalar::Scalar;

/// f ↦ p(z) f′(z) + q(z) f(z).
#[derive(Clone, Debug, PartialEq)]
pub struct FirstOrderZOperator<T: Scalar> {
    pub p: Polynomial<T>,
    pub q: Polynomial<T>,
}

impl<T: Scalar> FirstOrderZOperator<T> {
    pub fn apply(&self, f: &Polynomial<T>) -> Polynomial<T> {
        self.p.mul(&f.derivative()).add(&self.q.mul(f))
    }

    /// The conjugate M∘op∘M under the mirror M applied as f(z) ↦ f(−z):
    /// p ↦ −p(−z), q ↦ q(−z).
    pub fn mirror_conjugate(&self) -> Self {
        FirstOrderZOperator {
            p: self.p.compose_neg().neg(),
            q: self.q.compose_neg(),
        }
    }
}

/// Operator tags. `LaguerreLinear1/2` act on L^{(α∓1)}_ν seeds,
/// `LaguerreQuad1..3` on L^{(α∓1)}_ν, `JacobiLinear1/2` on P^{(α∓1,β±1)}_ν,
/// `JacobiQuad1/2` on P^{(α∓1,β±1)}_ν and `JacobiQuad3` on P^{(α+1,β+1)}_ν.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum OperatorKind {
    LaguerreLinear1,
    LaguerreLinear2,
    LaguerreQuad1,
    LaguerreQuad2,
    LaguerreQuad3,
    JacobiLinear1,
    JacobiLinear2,
    JacobiQuad1,
    JacobiQuad2,
    JacobiQuad3,
}

fn ti<T: Scalar>(v: i64) -> T {
    T::from_i64(v)
}

/// Builds the first-order operator for `kind`; Jacobi kinds require `beta`.
pub fn build_operator<T: Scalar>(
    kind: OperatorKind,
    alpha: &T,
    beta: Option<&T>,
) -> Result<FirstOrderZOperator<T>, XPolyError> {
    use OperatorKind::*;
    let a = alpha.clone();
    let need_beta = || {
        beta.cloned().ok_or_else(|| {
            XPolyError::Domain(format!("operator {kind:?} requires a beta parameter"))
        })
    };
    let z = Polynomial::monomial(1, T::one());
    let op = match kind {
        // (z+α)(d/dz − 1) − 1
        LaguerreLinear1 => {
            let za = Polynomial::from_coeffs(vec![a.clone(), T::one()]);
            FirstOrderZOperator {
                p: za.clone(),
                q: za.neg().sub(&Polynomial::one()),
            }
        }
        // (z+α)(z d/dz + α+1) − z
        LaguerreLinear2 => {
            let za = Polynomial::from_coeffs(vec![a.clone(), T::one()]);
            FirstOrderZOperator {
                p: z.mul(&za),
                q: za.scale(&(a.clone() + T::one())).sub(&z),
            }
        }
        // [z² + 2(α+1)z + α(α+1)](d/dz − 1) − 2(z+α+1)
        LaguerreQuad1 => {
            let quad = Polynomial::from_coeffs(vec![
                a.clone() * (a.clone() + T::one()),
                ti::<T>(2) * (a.clone() + T::one()),
                T::one(),
            ]);
            let lin = Polynomial::from_coeffs(vec![a.clone() + T::one(), T::one()]);
            FirstOrderZOperator {
                p: quad.clone(),
                q: quad.neg().sub(&lin.scale(&ti::<T>(2))),
            }
        }
        // [z² + 2(α−1)z + α(α−1)](z d/dz + α+1) − 2z(z+α−1)
        LaguerreQuad2 => {
            let quad = Polynomial::from_coeffs(vec![
                a.clone() * (a.clone() - T::one()),
                ti::<T>(2) * (a.clone() - T::one()),
                T::one(),
            ]);
            let lin = Polynomial::from_coeffs(vec![a.clone() - T::one(), T::one()]);
            FirstOrderZOperator {
                p: z.mul(&quad),
                q: quad
                    .scale(&(a.clone() + T::one()))
                    .sub(&z.mul(&lin).scale(&ti::<T>(2))),
            }
        }
        // [z² − 2(α−1)z + α(α−1)](z d/dz − z + α+1) − 2z(z−α+1)
        LaguerreQuad3 => {
            let quad = Polynomial::from_coeffs(vec![
                a.clone() * (a.clone() - T::one()),
                ti::<T>(-2) * (a.clone() - T::one()),
                T::one(),
            ]);
            let affine = Polynomial::from_coeffs(vec![a.clone() + T::one(), -T::one()]);
            let lin = Polynomial::from_coeffs(vec![T::one() - a.clone(), T::one()]);
            FirstOrderZOperator {
                p: z.mul(&quad),
                q: affine.mul(&quad).sub(&z.mul(&lin).scale(&ti::<T>(2))),
            }
        }
        // [β+α − (β−α)z]((1+z)d/dz + β+1) + (β−α)(1+z)
        JacobiLinear1 => {
            let b = need_beta()?;
            let lin = Polynomial::from_coeffs(vec![
                b.clone() + a.clone(),
                -(b.clone() - a.clone()),
            ]);
            let onez = Polynomial::from_coeffs(vec![T::one(), T::one()]);
            FirstOrderZOperator {
                p: onez.mul(&lin),
                q: lin
                    .scale(&(b.clone() + T::one()))
                    .add(&onez.scale(&(b.clone() - a.clone()))),
            }
        }
        // [β+α − (β−α)z]((1−z)d/dz − (α+1)) + (β−α)(1−z)
        JacobiLinear2 => {
            let b = need_beta()?;
            let lin = Polynomial::from_coeffs(vec![
                b.clone() + a.clone(),
                -(b.clone() - a.clone()),
            ]);
            let onemz = Polynomial::from_coeffs(vec![T::one(), -T::one()]);
            FirstOrderZOperator {
                p: onemz.mul(&lin),
                q: lin
                    .scale(&-(a.clone() + T::one()))
                    .add(&onemz.scale(&(b.clone() - a.clone()))),
            }
        }
        // 𝒟(z)((1+z)d/dz + β+1) − (1+z)𝒟̇(z)
        JacobiQuad1 => {
            let b = need_beta()?;
            let (d, ddot) = case1_denominator(&a, &b);
            let onez = Polynomial::from_coeffs(vec![T::one(), T::one()]);
            FirstOrderZOperator {
                p: onez.mul(&d),
                q: d.scale(&(b.clone() + T::one())).sub(&onez.mul(&ddot)),
            }
        }
        // mirror conjugate of JacobiQuad1 with α and β exchanged, times −1
        JacobiQuad2 => {
            let b = need_beta()?;
            let swapped = build_operator(JacobiQuad1, &b, Some(&a))?;
            let m = swapped.mirror_conjugate();
            FirstOrderZOperator { p: m.p.neg(), q: m.q.neg() }
        }
        // 𝒟(z)((1−z²)d/dz + β−α − (β+α+2)z) − (1−z²)𝒟̇(z)
        JacobiQuad3 => {
            let b = need_beta()?;
            let (d, ddot) = case3_denominator(&a, &b);
            let onemz2 = Polynomial::from_coeffs(vec![T::one(), T::zero(), -T::one()]);
            let affine = Polynomial::from_coeffs(vec![
                b.clone() - a.clone(),
                -(b.clone() + a.clone() + ti::<T>(2)),
            ]);
            FirstOrderZOperator {
                p: onemz2.mul(&d),
                q: affine.mul(&d).sub(&onemz2.mul(&ddot)),
            }
        }
    };
    Ok(op)
}

/// 𝒟(z) and 𝒟̇(z) of the Jacobi quadratic case I:
/// 𝒟 = (β−α−2)[(β−α−1)(β−α−2)z² − 2(β−α−1)(β+α)z + (β+α)² + β−α−2].
pub fn case1_denominator<T: Scalar>(alpha: &T, beta: &T) -> (Polynomial<T>, Polynomial<T>) {
    let dm = beta.clone() - alpha.clone();
    let sp = beta.clone() + alpha.clone();
    let m1 = dm.clone() - T::one();
    let m2 = dm.clone() - ti::<T>(2);
    let d = Polynomial::from_coeffs(vec![
        sp.clone() * sp.clone() + m2.clone(),
        ti::<T>(-2) * m1.clone() * sp.clone(),
        m1.clone() * m2.clone(),
    ])
    .scale(&m2);
    (d.clone(), d.derivative())
}

/// 𝒟(z) and 𝒟̇(z) of the Jacobi quadratic case III:
/// 𝒟 = (β+α−1)[(β+α−2)z − (β−α)]² + (2α−2)(2β−2).
pub fn case3_denominator<T: Scalar>(alpha: &T, beta: &T) -> (Polynomial<T>, Polynomial<T>) {
    let dm = beta.clone() - alpha.clone();
    let sp = beta.clone() + alpha.clone();
    let lin = Polynomial::from_coeffs(vec![-dm.clone(), sp.clone() - ti::<T>(2)]);
    let c = (ti::<T>(2) * alpha.clone() - ti::<T>(2)) * (ti::<T>(2) * beta.clone() - ti::<T>(2));
    let d = lin
        .mul(&lin)
        .scale(&(sp.clone() - T::one()))
        .add(&Polynomial::constant(c));
    (d.clone(), d.derivative())
}

/// Exceptional family identifiers with their parameters.
#[derive(Clone, Debug, PartialEq)]
pub enum ExceptionalFamily<T: Scalar> {
    X1Laguerre { alpha: T },
    L1 { alpha: T },
    L2 { alpha: T },
    L3 { alpha: T },
    X1Jacobi { alpha: T, beta: T },
    P1 { alpha: T, beta: T },
    P3 { alpha: T, beta: T },
}

/// Expansion of an exceptional polynomial over its classical basis:
/// Σ c_k · L^{(α)}_k or Σ c_k · P^{(α,β)}_k.
#[derive(Clone, Debug, PartialEq)]
pub struct ExpansionCoefficients<T: Scalar> {
    /// (classical index, coefficient), ascending in index.
    pub terms: Vec<(usize, T)>,
}

impl<T: Scalar> ExpansionCoefficients<T> {
    pub fn reconstruct(
        &self,
        basis: &ClassicalFamily<T>,
    ) -> Result<Polynomial<T>, XPolyError> {
        let mut acc = Polynomial::zero();
        for (k, c) in &self.terms {
            acc = acc.add(&basis.polynomial(*k)?.scale(c));
        }
        Ok(acc)
    }

    pub fn coeff(&self, k: usize) -> T {
        self.terms
            .iter()
            .find(|(i, _)| *i == k)
            .map(|(_, c)| c.clone())
            .unwrap_or_else(T::zero)
    }
}

fn checked_div<T: Scalar>(num: Polynomial<T>, den: T, what: &str) -> Result<Polynomial<T>, XPolyError> {
    if den.is_zero() {
        return Err(XPolyError::SingularParameter(format!(
            "{what} vanishes for these parameters"
        )));
    }
    Ok(num.scale(&(T::one() / den)))
}

impl<T: Scalar> ExceptionalFamily<T> {
    pub fn validate(&self) -> Result<(), XPolyError> {
        let neg1 = ti::<T>(-1);
        match self {
            ExceptionalFamily::X1Laguerre { alpha }
            | ExceptionalFamily::L1 { alpha }
            | ExceptionalFamily::L2 { alpha }
            | ExceptionalFamily::L3 { alpha } => {
                if *alpha > neg1 {
                    Ok(())
                } else {
                    Err(XPolyError::Domain(
                        "Laguerre-type families require alpha > -1".into(),
                    ))
                }
            }
            ExceptionalFamily::X1Jacobi { alpha, beta } => {
                if !(*alpha > neg1 && *beta > neg1) {
                    return Err(XPolyError::Domain(
                        "Jacobi-type families require alpha, beta > -1".into(),
                    ));
                }
                if alpha == beta {
                    return Err(XPolyError::SingularParameter(
                        "X1-Jacobi is singular at beta = alpha; use the beta -> alpha limit"
                            .into(),
                    ));
                }
                Ok(())
            }
            ExceptionalFamily::P1 { alpha, beta } | ExceptionalFamily::P3 { alpha, beta } => {
                if *alpha > neg1 && *beta > neg1 {
                    Ok(())
                } else {
                    Err(XPolyError::Domain(
                        "Jacobi-type families require alpha, beta > -1".into(),
                    ))
                }
            }
        }
    }

    /// The classical basis the family expands over.
    pub fn classical_basis(&self) -> ClassicalFamily<T> {
        match self {
            ExceptionalFamily::X1Laguerre { alpha }
            | ExceptionalFamily::L1 { alpha }
            | ExceptionalFamily::L2 { alpha }
            | ExceptionalFamily::L3 { alpha } => ClassicalFamily::Laguerre { alpha: alpha.clone() },
            ExceptionalFamily::X1Jacobi { alpha, beta }
            | ExceptionalFamily::P1 { alpha, beta }
            | ExceptionalFamily::P3 { alpha, beta } => ClassicalFamily::Jacobi {
                alpha: alpha.clone(),
                beta: beta.clone(),
            },
        }
    }

    /// Degree of the ν-th member.
    pub fn degree_of(&self, nu: usize) -> usize {
        match self {
            ExceptionalFamily::X1Laguerre { .. } | ExceptionalFamily::X1Jacobi { .. } => nu + 1,
            ExceptionalFamily::L1 { .. }
            | ExceptionalFamily::L2 { .. }
            | ExceptionalFamily::P1 { .. } => nu + 2,
            ExceptionalFamily::L3 { .. } | ExceptionalFamily::P3 { .. } => nu + 3,
        }
    }

    /// Closed-form leading coefficient in the defining normalization.
    pub fn leading_coeff(&self, nu: usize) -> T {
        let sign = |k: usize| ti::<T>(if k.is_multiple_of(2) { 1 } else { -1 });
        match self {
            // (−1)^{ν+1} / ν!
            ExceptionalFamily::X1Laguerre { .. } => sign(nu + 1) / factorial::<T>(nu),
            // (−1)^{ν+2} / ν!
            ExceptionalFamily::L1 { .. } | ExceptionalFamily::L2 { .. } => {
                sign(nu + 2) / factorial::<T>(nu)
            }
            // (−1)^{ν+3} / [(ν+3) ν!]
            ExceptionalFamily::L3 { .. } => {
                sign(nu + 3) / (ti::<T>(nu as i64 + 3) * factorial::<T>(nu))
            }
            // −2^{−ν−1} C(2ν+α+β, ν)
            ExceptionalFamily::X1Jacobi { alpha, beta } => {
                let arg = ti::<T>(2 * nu as i64) + alpha.clone() + beta.clone();
                -generalized_binomial(&arg, nu) / pow2::<T>(nu + 1)
            }
            // 2^{−ν−2} C(2ν+α+β, ν)
            ExceptionalFamily::P1 { alpha, beta } => {
                let arg = ti::<T>(2 * nu as i64) + alpha.clone() + beta.clone();
                generalized_binomial(&arg, nu) / pow2::<T>(nu + 2)
            }
            // −2^{−ν−3} C(2ν+α+β+2, ν)
            ExceptionalFamily::P3 { alpha, beta } => {
                let arg = ti::<T>(2 * nu as i64 + 2) + alpha.clone() + beta.clone();
                -generalized_binomial(&arg, nu) / pow2::<T>(nu + 3)
            }
        }
    }
}

fn pow2<T: Scalar>(n: usize) -> T {
    let mut acc = T::one();
    for _ in 0..n {
        acc = acc * ti::<T>(2);
    }
    acc
}

/// The ν-th member of an exceptional family in its defining normalization.
pub fn exceptional_polynomial<T: Scalar>(
    family: &ExceptionalFamily<T>,
    nu: usize,
) -> Result<Polynomial<T>, XPolyError> {
    family.validate()?;
    let nuf = ti::<T>(nu as i64);
    match family {
        // L̂_{ν+1} = −(z+α+1) L_ν + L_{ν−1}
        ExceptionalFamily::X1Laguerre { alpha } => {
            let lag = ClassicalFamily::Laguerre { alpha: alpha.clone() };
            let ln = lag.polynomial(nu)?;
            let lm = lag_prev(&lag, nu)?;
            let lin = Polynomial::from_coeffs(vec![alpha.clone() + T::one(), T::one()]);
            Ok(lin.mul(&ln).neg().add(&lm))
        }
        // L̃_{1,ν+2} = [z² + 2(α+2)z + (α+1)(α+2)] L_ν − 2(z+α+1) L_{ν−1}
        ExceptionalFamily::L1 { alpha } => {
            let lag = ClassicalFamily::Laguerre { alpha: alpha.clone() };
            let ln = lag.polynomial(nu)?;
            let lm = lag_prev(&lag, nu)?;
            let a = alpha.clone();
            let quad = Polynomial::from_coeffs(vec![
                (a.clone() + T::one()) * (a.clone() + ti::<T>(2)),
                ti::<T>(2) * (a.clone() + ti::<T>(2)),
                T::one(),
            ]);
            let lin = Polynomial::from_coeffs(vec![a + T::one(), T::one()]);
            Ok(quad.mul(&ln).sub(&lin.mul(&lm).scale(&ti::<T>(2))))
        }
        // L̃_{2,ν+2} via its five-term expansion, which is division-free and
        // stays valid where the defining relation's (ν+α−1) scale vanishes
        ExceptionalFamily::L2 { .. } => {
            let exp = expansion_coefficients(family, nu)?;
            exp.reconstruct(&family.classical_basis())
        }
        // (ν+3) L̃_{3,ν+3} = {…} L_ν − (ν+α)[z² − 2(α−2)z + (α−1)(α−2)] L_{ν−1}
        ExceptionalFamily::L3 { alpha } => {
            let lag = ClassicalFamily::Laguerre { alpha: alpha.clone() };
            let ln = lag.polynomial(nu)?;
            let lm = lag_prev(&lag, nu)?;
            let a = alpha.clone();
            let cubic = Polynomial::from_coeffs(vec![
                (a.clone() - T::one())
                    * (ti::<T>(2) * (a.clone() - T::one()) * nuf.clone()
                        + a.clone() * (a.clone() + T::one())),
                -(ti::<T>(2) * (ti::<T>(2) * a.clone() - ti::<T>(3)) * nuf.clone()
                    + ti::<T>(3) * a.clone() * (a.clone() - T::one())),
                ti::<T>(2) * nuf.clone() + ti::<T>(3) * a.clone() - ti::<T>(3),
                ti::<T>(-1),
            ]);
            let quad = Polynomial::from_coeffs(vec![
                (a.clone() - T::one()) * (a.clone() - ti::<T>(2)),
                ti::<T>(-2) * (a.clone() - ti::<T>(2)),
                T::one(),
            ]);
            let num = cubic
                .mul(&ln)
                .sub(&quad.mul(&lm).scale(&(nuf.clone() + a.clone())));
            checked_div(num, nuf + ti::<T>(3), "nu + 3")
        }
        // P̂_{ν+1} per the defining relation; ν = 0 in the cancelled closed
        // form so β+α = 0 stays regular
        ExceptionalFamily::X1Jacobi { alpha, beta } => {
            let dm = beta.clone() - alpha.clone();
            let sp = beta.clone() + alpha.clone();
            if nu == 0 {
                // [−(β−α) z + β+α+2] / (2(β−α))
                let num = Polynomial::from_coeffs(vec![sp + ti::<T>(2), -dm.clone()]);
                return checked_div(num, ti::<T>(2) * dm, "2(beta - alpha)");
            }
            let jac = ClassicalFamily::Jacobi { alpha: alpha.clone(), beta: beta.clone() };
            let pn = jac.polynomial(nu)?;
            let pm = jac.polynomial(nu - 1)?;
            let s2n = sp.clone() + ti::<T>(2 * nu as i64);
            // −½(z − (β+α)/(β−α)) P_ν + (β+α+2ν)^{−1}[(β+α)/(β−α) P_ν − P_{ν−1}]
            let half = T::from_ratio(1, 2);
            let lin = Polynomial::from_coeffs(vec![
                sp.clone() / dm.clone() * half.clone()
                    + sp.clone() / (dm.clone() * s2n.clone()),
                -half,
            ]);
            Ok(lin.mul(&pn).sub(&pm.scale(&(T::one() / s2n))))
        }
        // P̃_{1,ν+2}: defining brace divided by 4(β−α−1)(β−α−2)(ν+β−1)(2ν+β+α)
        ExceptionalFamily::P1 { alpha, beta } => {
            let jac = ClassicalFamily::Jacobi { alpha: alpha.clone(), beta: beta.clone() };
            let pn = jac.polynomial(nu)?;
            let pm = if nu == 0 { Polynomial::zero() } else { jac.polynomial(nu - 1)? };
            let dm = beta.clone() - alpha.clone();
            let sp = beta.clone() + alpha.clone();
            let m1 = dm.clone() - T::one();
            let m2 = dm.clone() - ti::<T>(2);
            let s2n = sp.clone() + ti::<T>(2 * nu as i64);
            let nb = nuf.clone() + beta.clone();
            let c2 = m1.clone() * m2.clone() * s2n.clone() * (nb.clone() - T::one());
            let c1 = ti::<T>(-2)
                * m1.clone()
                * sp.clone()
                * (nb.clone() * s2n.clone() + m2.clone());
            let c0 = (nb.clone() + T::one())
                * s2n.clone()
                * (sp.clone() * sp.clone() + m2.clone())
                + ti::<T>(2) * m1.clone() * sp.clone() * sp.clone();
            let bracket = Polynomial::from_coeffs(vec![c0, c1, c2]).mul(&pn).add(
                &Polynomial::from_coeffs(vec![-sp.clone(), m2.clone()])
                    .mul(&pm)
                    .scale(&(ti::<T>(4) * m1.clone() * nb.clone())),
            );
            let scale = ti::<T>(4) * m1 * m2 * (nuf.clone() + beta.clone() - T::one()) * s2n;
            checked_div(bracket, scale, "4(β−α−1)(β−α−2)(ν+β−1)(2ν+β+α)")
        }
        // P̃_{3,ν+3}: defining brace divided by
        // 8(β+α−1)(β+α−2)²(β+α+ν) (β+α+ν+1)(β+α+ν+2)(β+α+2ν)
        ExceptionalFamily::P3 { alpha, beta } => {
            let jac = ClassicalFamily::Jacobi { alpha: alpha.clone(), beta: beta.clone() };
            let pn = jac.polynomial(nu)?;
            let pm = if nu == 0 { Polynomial::zero() } else { jac.polynomial(nu - 1)? };
            let dm = beta.clone() - alpha.clone();
            let sp = beta.clone() + alpha.clone();
            let (d, ddot) = case3_denominator(alpha, beta);
            let sn = sp.clone() + nuf.clone();
            let s2n = sp.clone() + ti::<T>(2 * nu as i64);
            // T_D(z) = (β+α+ν+2)(β+α+2ν+1)[(β−α)(β+α) − (β+α+2ν)(β+α+2ν+2)z]
            let t_d = Polynomial::from_coeffs(vec![
                dm.clone() * sp.clone(),
                -(s2n.clone() * (s2n.clone() + ti::<T>(2))),
            ])
            .scale(&((sn.clone() + ti::<T>(2)) * (s2n.clone() + T::one())));
            // T_Ḋ(z) = −(β+α+ν+1)(β+α+2ν)(β+α+2ν+2) + (β−α)²ν
            //           + 2(β−α)ν(β+α+2ν+1) z + (β+α+2ν)(β+α+2ν+1)(β+α+2ν+2) z²
            let t_ddot = Polynomial::from_coeffs(vec![
                -((sn.clone() + T::one()) * s2n.clone() * (s2n.clone() + ti::<T>(2)))
                    + dm.clone() * dm.clone() * nuf.clone(),
                ti::<T>(2) * dm.clone() * nuf.clone() * (s2n.clone() + T::one()),
                s2n.clone() * (s2n.clone() + T::one()) * (s2n.clone() + ti::<T>(2)),
            ]);
            let first = t_d.mul(&d).add(&t_ddot.mul(&ddot)).mul(&pn);
            // 2(α+ν)(β+ν)[(β+α+ν+2)(β+α+2ν+2)𝒟 − ((β−α) + (β+α+2ν+2)z)𝒟̇]
            let second = d
                .scale(&((sn.clone() + ti::<T>(2)) * (s2n.clone() + ti::<T>(2))))
                .sub(
                    &Polynomial::from_coeffs(vec![dm.clone(), s2n.clone() + ti::<T>(2)])
                        .mul(&ddot),
                )
                .mul(&pm)
                .scale(
                    &(ti::<T>(2)
                        * (alpha.clone() + nuf.clone())
                        * (beta.clone() + nuf.clone())),
                );
            let brace = first.add(&second);
            let scale = ti::<T>(8)
                * (sp.clone() - T::one())
                * (sp.clone() - ti::<T>(2))
                * (sp.clone() - ti::<T>(2))
                * sn.clone()
                * (sn.clone() + T::one())
                * (sn + ti::<T>(2))
                * s2n;
            checked_div(brace, scale, "the P3 normalization product")
        }
    }
}

fn lag_prev<T: Scalar>(
    lag: &ClassicalFamily<T>,
    nu: usize,
) -> Result<Polynomial<T>, XPolyError> {
    Ok(if nu == 0 { Polynomial::zero() } else { lag.polynomial(nu - 1)? })
}

/// Published classical-basis expansions. Errors with `Unsupported` for P1 and
/// P3, which have no closed-form expansion.
pub fn expansion_coefficients<T: Scalar>(
    family: &ExceptionalFamily<T>,
    nu: usize,
) -> Result<ExpansionCoefficients<T>, XPolyError> {
    family.validate()?;
    let n = ti::<T>(nu as i64);
    let mut terms: Vec<(i64, T)> = Vec::new();
    match family {
        ExceptionalFamily::X1Laguerre { alpha } => {
            let na1 = n.clone() + alpha.clone() + T::one();
            terms.push((nu as i64 + 1, n.clone() + T::one()));
            terms.push((nu as i64, ti::<T>(-2) * na1.clone()));
            terms.push((nu as i64 - 1, na1));
        }
        ExceptionalFamily::L1 { alpha } => {
            let na = n.clone() + alpha.clone();
            let na2 = na.clone() + ti::<T>(2);
            terms.push((nu as i64 + 2, (n.clone() + ti::<T>(2)) * (n.clone() + T::one())));
            terms.push((nu as i64 + 1, ti::<T>(-4) * (n.clone() + T::one()) * na2.clone()));
            terms.push((
                nu as i64,
                ti::<T>(2)
                    * na2.clone()
                    * (ti::<T>(3) * n.clone() + ti::<T>(2) * alpha.clone() + ti::<T>(2)),
            ));
            terms.push((nu as i64 - 1, ti::<T>(-4) * na2.clone() * na.clone()));
            terms.push((nu as i64 - 2, na2 * (na - T::one())));
        }
        ExceptionalFamily::L2 { alpha } => {
            let na = n.clone() + alpha.clone();
            let na1 = na.clone() + T::one();
            terms.push((nu as i64 + 2, (n.clone() + ti::<T>(2)) * (n.clone() + T::one())));
            terms.push((nu as i64 + 1, ti::<T>(-4) * (n.clone() + T::one()) * na1.clone()));
            terms.push((
                nu as i64,
                ti::<T>(2)
                    * na1.clone()
                    * (ti::<T>(3) * n.clone() + ti::<T>(2) * alpha.clone() + T::one()),
            ));
            terms.push((nu as i64 - 1, ti::<T>(-4) * na1.clone() * na.clone()));
            terms.push((nu as i64 - 2, na1 * na));
        }
        ExceptionalFamily::L3 { alpha } => {
            let na = n.clone() + alpha.clone();
            let n1 = n.clone() + T::one();
            terms.push((nu as i64 + 3, (n.clone() + ti::<T>(2)) * n1.clone()));
            terms.push((nu as i64 + 2, ti::<T>(-4) * (n.clone() + ti::<T>(2)) * n1.clone()));
            terms.push((
                nu as i64 + 1,
                ti::<T>(2) * n1.clone() * (ti::<T>(3) * n.clone() + alpha.clone() + ti::<T>(5)),
            ));
            terms.push((nu as i64, ti::<T>(-4) * n1.clone() * (na.clone() + T::one())));
            terms.push((nu as i64 - 1, (na.clone() + T::one()) * na));
            // the ν−2 and ν−3 coefficients of the classical expansion vanish
            // identically
            terms.push((nu as i64 - 2, T::zero()));
            terms.push((nu as i64 - 3, T::zero()));
        }
        ExceptionalFamily::X1Jacobi { alpha, beta } => {
            let dm = beta.clone() - alpha.clone();
            let sp = beta.clone() + alpha.clone();
            let an1 = alpha.clone() + n.clone() + T::one();
            let bn1 = beta.clone() + n.clone() + T::one();
            if nu == 0 {
                // cancelled forms, regular at β+α = 0
                terms.push((1, -T::one() / (sp.clone() + ti::<T>(2))));
                terms.push((
                    0,
                    ti::<T>(2) * an1 * bn1 / (dm * (sp + ti::<T>(2))),
                ));
            } else {
                let s2n = sp.clone() + ti::<T>(2 * nu as i64);
                terms.push((
                    nu as i64 + 1,
                    -(n.clone() + T::one()) * (sp.clone() + n.clone() + T::one())
                        / ((s2n.clone() + T::one()) * (s2n.clone() + ti::<T>(2))),
                ));
                terms.push((
                    nu as i64,
                    ti::<T>(2) * sp.clone() * an1.clone() * bn1.clone()
                        / (dm * s2n.clone() * (s2n.clone() + ti::<T>(2))),
                ));
                terms.push((
                    nu as i64 - 1,
                    -an1 * bn1 / (s2n.clone() * (s2n + T::one())),
                ));
            }
        }
        ExceptionalFamily::P1 { .. } | ExceptionalFamily::P3 { .. } => {
            return Err(XPolyError::Unsupported(
                "no closed-form classical-basis expansion for this family".into(),
            ));
        }
    }
    let terms = terms
        .into_iter()
        .filter(|(k, _)| *k >= 0)
        .map(|(k, c)| (k as usize, c))
        .rev()
        .collect();
    Ok(ExpansionCoefficients { terms })
}

/// Exact limit lim_{β→α} (β−α) P̂^{(α,β)}_{ν+1}(z), a Gegenbauer multiple.
/// Only the middle term of the three-term expansion survives.
#[allow(clippy::neg_cmp_op_on_partial_ord)] // !(x > c) also rejects unordered values
pub fn limit_beta_to_alpha<T: Scalar>(nu: usize, alpha: &T) -> Result<Polynomial<T>, XPolyError> {
    if !(*alpha > ti::<T>(-1)) {
        return Err(XPolyError::Domain("limit requires alpha > -1".into()));
    }
    let jac = ClassicalFamily::Jacobi { alpha: alpha.clone(), beta: alpha.clone() };
    let p = jac.polynomial(nu)?;
    let coeff = if nu == 0 {
        alpha.clone() + T::one()
    } else {
        alpha.clone() * (alpha.clone() + ti::<T>(nu as i64) + T::one())
            / (alpha.clone() + ti::<T>(nu as i64))
    };
    Ok(p.scale(&coeff))
}

/// The stated right-hand side of the β→α limit: the gamma-ratio prefactor
/// times C^{(α+1/2)}_ν. Exact for rational α; used as the independent route.
pub fn gegenbauer_limit_rhs<T: Scalar>(nu: usize, alpha: &T) -> Result<Polynomial<T>, XPolyError> {
    let geg = ClassicalFamily::Gegenbauer { lambda: alpha.clone() + T::from_ratio(1, 2) };
    let c = geg.polynomial(nu)?;
    // (α+ν+1) Γ(2α+1) Γ(α+ν) / [Γ(α) Γ(2α+ν+1)]
    //   = (α+ν+1) · rising(α, ν) / rising(2α+1, ν)
    let mut num = alpha.clone() + ti::<T>(nu as i64) + T::one();
    for j in 0..nu {
        num = num * (alpha.clone() + ti::<T>(j as i64));
    }
    let mut den = T::one();
    for j in 1..=nu {
        den = den * (ti::<T>(2) * alpha.clone() + ti::<T>(j as i64));
    }
    if den.is_zero() {
        return Err(XPolyError::SingularParameter(
            "gamma-ratio denominator vanishes".into(),
        ));
    }
    Ok(c.scale(&(num / den)))
}

/// Exact limit lim_{α→0} P̂^{(α,β)}_{ν+1}(z) = −(β+ν+1)/(4ν) (1−z)² P^{(2,β)}_{ν−1}(z),
/// stated for ν ≥ 1.
#[allow(clippy::neg_cmp_op_on_partial_ord)] // !(x > c) also rejects unordered values
pub fn limit_alpha_to_zero<T: Scalar>(nu: usize, beta: &T) -> Result<Polynomial<T>, XPolyError> {
    if nu == 0 {
        return Err(XPolyError::Unsupported(
            "the alpha -> 0 limit relation is stated for nu >= 1".into(),
        ));
    }
    if !(*beta > ti::<T>(-1)) {
        return Err(XPolyError::Domain("limit requires beta > -1".into()));
    }
    let jac = ClassicalFamily::Jacobi { alpha: ti::<T>(2), beta: beta.clone() };
    let p = jac.polynomial(nu - 1)?;
    let onemz = Polynomial::from_coeffs(vec![T::one(), -T::one()]);
    let c = -(beta.clone() + ti::<T>(nu as i64) + T::one()) / ti::<T>(4 * nu as i64);
    Ok(onemz.mul(&onemz).mul(&p).scale(&c))
}

/// Expands an arbitrary polynomial over a classical basis by leading-term
/// elimination; exact, and independent of the closed-form expansion formulas.
pub fn classical_expansion<T: Scalar>(
    p: &Polynomial<T>,
    basis: &ClassicalFamily<T>,
) -> Result<Vec<T>, XPolyError> {
    basis.validate().map_err(XPolyError::from)?;
    let mut rest = p.clone();
    let deg = match rest.degree() {
        None => return Ok(Vec::new()),
        Some(d) => d,
    };
    let mut out = vec![T::zero(); deg + 1];
    while let Some(d) = rest.degree() {
        let lead = rest.leading_coeff().cloned().unwrap_or_else(T::zero);
        let c = lead / basis.leading_coeff(d);
        rest = rest.sub(&basis.polynomial(d)?.scale(&c));
        if rest.degree() == Some(d) {
            return Err(XPolyError::Domain(
                "leading-term elimination failed to reduce the degree".into(),
            ));
        }
        out[d] = c;
    }
    Ok(out)
}

#[cfg(test)]
mod tests;
