//! Closed-form low-degree members of every polynomial family, encoded
//! as functions of the parameters.
//! These are the fixed oracles the verification suites compare the
//! constructive definitions against.

use crate::orthopoly::Polynomial;
use crate::scalar::Scalar;

fn c<T: Scalar>(v: i64) -> T {
    T::from_i64(v)
}

/// X₁-Laguerre L̂₁ = −z − α − 1.
pub fn x1_laguerre_1<T: Scalar>(a: &T) -> Polynomial<T> {
    Polynomial::from_coeffs(vec![-a.clone() - T::one(), -T::one()])
}

/// X₁-Laguerre L̂₂ = z² − α(α+2).
pub fn x1_laguerre_2<T: Scalar>(a: &T) -> Polynomial<T> {
    Polynomial::from_coeffs(vec![-a.clone() * (a.clone() + c(2)), T::zero(), T::one()])
}

/// X₁-Laguerre L̂₃ = ½[−z³ + (α+3)z² + α(α+3)z − α(α+1)(α+3)].
pub fn x1_laguerre_3<T: Scalar>(a: &T) -> Polynomial<T> {
    let half = T::from_ratio(1, 2);
    Polynomial::from_coeffs(vec![
        -a.clone() * (a.clone() + T::one()) * (a.clone() + c(3)) * half.clone(),
        a.clone() * (a.clone() + c(3)) * half.clone(),
        (a.clone() + c(3)) * half.clone(),
        -half,
    ])
}

/// L̃₁,₂ = z² + 2(α+2)z + (α+2)(α+1).
pub fn l1_2<T: Scalar>(a: &T) -> Polynomial<T> {
    Polynomial::from_coeffs(vec![
        (a.clone() + c(2)) * (a.clone() + T::one()),
        c::<T>(2) * (a.clone() + c(2)),
        T::one(),
    ])
}

/// L̃₁,₃ = −z³ − (α+3)z² + α(α+3)z + α(α+1)(α+3).
pub fn l1_3<T: Scalar>(a: &T) -> Polynomial<T> {
    Polynomial::from_coeffs(vec![
        a.clone() * (a.clone() + T::one()) * (a.clone() + c(3)),
        a.clone() * (a.clone() + c(3)),
        -(a.clone() + c(3)),
        -T::one(),
    ])
}

/// L̃₁,₄ = ½[z⁴ − 2(α+1)(α+4)z² + α(α+1)²(α+4)].
pub fn l1_4<T: Scalar>(a: &T) -> Polynomial<T> {
    let half = T::from_ratio(1, 2);
    Polynomial::from_coeffs(vec![
        a.clone() * (a.clone() + T::one()) * (a.clone() + T::one()) * (a.clone() + c(4))
            * half.clone(),
        T::zero(),
        -(a.clone() + T::one()) * (a.clone() + c(4)),
        T::zero(),
        half,
    ])
}

/// L̃₂,₂ = z² + 2αz + α(α+1).
pub fn l2_2<T: Scalar>(a: &T) -> Polynomial<T> {
    Polynomial::from_coeffs(vec![
        a.clone() * (a.clone() + T::one()),
        c::<T>(2) * a.clone(),
        T::one(),
    ])
}

/// L̃₂,₃ = −z³ − (α−1)z² + (α+2)(α−1)z + (α+2)(α+1)(α−1).
pub fn l2_3<T: Scalar>(a: &T) -> Polynomial<T> {
    Polynomial::from_coeffs(vec![
        (a.clone() + c(2)) * (a.clone() + T::one()) * (a.clone() - T::one()),
        (a.clone() + c(2)) * (a.clone() - T::one()),
        -(a.clone() - T::one()),
        -T::one(),
    ])
}

/// L̃₂,₄ = ½[z⁴ − 4z³ − 2(α+3)(α−1)z² + (α+3)(α+2)α(α−1)].
pub fn l2_4<T: Scalar>(a: &T) -> Polynomial<T> {
    let half = T::from_ratio(1, 2);
    Polynomial::from_coeffs(vec![
        (a.clone() + c(3)) * (a.clone() + c(2)) * a.clone() * (a.clone() - T::one())
            * half.clone(),
        T::zero(),
        -(a.clone() + c(3)) * (a.clone() - T::one()),
        -c::<T>(2),
        half,
    ])
}

/// L̃₃,₃ = ⅓[−z³ + 3(α−1)z² − 3α(α−1)z + (α+1)α(α−1)].
pub fn l3_3<T: Scalar>(a: &T) -> Polynomial<T> {
    let third = T::from_ratio(1, 3);
    Polynomial::from_coeffs(vec![
        (a.clone() + T::one()) * a.clone() * (a.clone() - T::one()) * third.clone(),
        -a.clone() * (a.clone() - T::one()),
        a.clone() - T::one(),
        -third,
    ])
}

/// L̃₃,₄ = ¼[z⁴ − 4αz³ + 2(α−1)(3α+4)z² − 4(α+2)α(α−1)z + (α+2)(α+1)α(α−1)].
pub fn l3_4<T: Scalar>(a: &T) -> Polynomial<T> {
    let quarter = T::from_ratio(1, 4);
    Polynomial::from_coeffs(vec![
        (a.clone() + c(2)) * (a.clone() + T::one()) * a.clone() * (a.clone() - T::one())
            * quarter.clone(),
        -(a.clone() + c(2)) * a.clone() * (a.clone() - T::one()),
        (a.clone() - T::one()) * (c::<T>(3) * a.clone() + c(4)) * T::from_ratio(1, 2),
        -a.clone(),
        quarter,
    ])
}

/// L̃₃,₅ = (1/10)[−z⁵ + 5(α+1)z⁴ − 10(α²+2α−1)z³ + 10(α+3)(α+1)(α−1)z²
///         − 5(α+3)(α+2)α(α−1)z + (α+3)(α+2)(α+1)α(α−1)].
pub fn l3_5<T: Scalar>(a: &T) -> Polynomial<T> {
    let tenth = T::from_ratio(1, 10);
    Polynomial::from_coeffs(vec![
        (a.clone() + c(3)) * (a.clone() + c(2)) * (a.clone() + T::one()) * a.clone()
            * (a.clone() - T::one())
            * tenth.clone(),
        -(a.clone() + c(3)) * (a.clone() + c(2)) * a.clone() * (a.clone() - T::one())
            * T::from_ratio(1, 2),
        (a.clone() + c(3)) * (a.clone() + T::one()) * (a.clone() - T::one()),
        -(a.clone() * a.clone() + c::<T>(2) * a.clone() - T::one()),
        (a.clone() + T::one()) * T::from_ratio(1, 2),
        -tenth,
    ])
}

/// X₁-Jacobi P̂₁ = [−(β−α)z + β+α+2] / (2(β−α)).
pub fn x1_jacobi_1<T: Scalar>(a: &T, b: &T) -> Polynomial<T> {
    let dm = b.clone() - a.clone();
    let sp = b.clone() + a.clone();
    Polynomial::from_coeffs(vec![
        (sp + c(2)) / (c::<T>(2) * dm),
        -T::from_ratio(1, 2),
    ])
}

/// X₁-Jacobi P̂₂ = {−(β−α)(β+α+2)z² + [(β−α)² + (β+α)(β+α+4)]z
///                 − (β−α)(β+α+2)} / (4(β−α)).
pub fn x1_jacobi_2<T: Scalar>(a: &T, b: &T) -> Polynomial<T> {
    let dm = b.clone() - a.clone();
    let sp = b.clone() + a.clone();
    let den = c::<T>(4) * dm.clone();
    Polynomial::from_coeffs(vec![
        -dm.clone() * (sp.clone() + c(2)) / den.clone(),
        (dm.clone() * dm.clone() + sp.clone() * (sp.clone() + c(4))) / den.clone(),
        -dm.clone() * (sp + c(2)) / den,
    ])
}

/// P̃₁,₂ = [(β−α−1)(β−α−2)z² − 2(β−α−1)(β+α+2)z + (β+α+2)² + β−α−2]
///         / (4(β−α−1)(β−α−2)).
pub fn p1_2<T: Scalar>(a: &T, b: &T) -> Polynomial<T> {
    let dm = b.clone() - a.clone();
    let sp = b.clone() + a.clone();
    let m1 = dm.clone() - T::one();
    let m2 = dm.clone() - c(2);
    let den = c::<T>(4) * m1.clone() * m2.clone();
    Polynomial::from_coeffs(vec![
        ((sp.clone() + c(2)) * (sp.clone() + c(2)) + m2.clone()) / den.clone(),
        -c::<T>(2) * m1.clone() * (sp + c(2)) / den.clone(),
        m1 * m2 / den,
    ])
}

/// P̃₁,₃, the cubic member of the same family.
pub fn p1_3<T: Scalar>(a: &T, b: &T) -> Polynomial<T> {
    let dm = b.clone() - a.clone();
    let sp = b.clone() + a.clone();
    let m1 = dm.clone() - T::one();
    let m2 = dm.clone() - c(2);
    let den = c::<T>(8) * m1.clone() * m2.clone();
    Polynomial::from_coeffs(vec![
        (-dm.clone() * (sp.clone() + c(2)) * (sp.clone() + c(2))
            - (dm.clone() - c(4)) * (dm.clone() + c(2)))
            / den.clone(),
        (sp.clone() + c(2))
            * (m2.clone() * (c::<T>(2) * dm.clone() + c(3))
                + sp.clone() * (sp.clone() + c(4)))
            / den.clone(),
        -m1.clone() * (dm.clone() * m2.clone() + c::<T>(2) * sp.clone() * (sp.clone() + c(4)))
            / den.clone(),
        m1 * m2 * (sp + c(2)) / den,
    ])
}

/// P̃₃,₃ = {−(β+α)(β+α−1)(β+α−2)z³ + 3(β+α)(β+α−1)(β−α)z²
///          − 3(β+α)[(β−α)² + β+α−2]z + (β−α)[(β−α)² + 3β+3α−4]}
///         / (8(β+α)(β+α−1)(β+α−2)).
pub fn p3_3<T: Scalar>(a: &T, b: &T) -> Polynomial<T> {
    let dm = b.clone() - a.clone();
    let sp = b.clone() + a.clone();
    let den = c::<T>(8) * sp.clone() * (sp.clone() - T::one()) * (sp.clone() - c(2));
    Polynomial::from_coeffs(vec![
        dm.clone() * (dm.clone() * dm.clone() + c::<T>(3) * sp.clone() - c(4)) / den.clone(),
        -c::<T>(3) * sp.clone() * (dm.clone() * dm.clone() + sp.clone() - c(2)) / den.clone(),
        c::<T>(3) * sp.clone() * (sp.clone() - T::one()) * dm / den.clone(),
        -sp.clone() * (sp.clone() - T::one()) * (sp - c(2)) / den,
    ])
}

/// P̃₃,₄, the quartic member of the same family.
pub fn p3_4<T: Scalar>(a: &T, b: &T) -> Polynomial<T> {
    let dm = b.clone() - a.clone();
    let sp = b.clone() + a.clone();
    let den = c::<T>(16) * (sp.clone() - T::one()) * (sp.clone() - c(2)) * (sp.clone() + T::one());
    let dm2 = dm.clone() * dm.clone();
    Polynomial::from_coeffs(vec![
        (-dm2.clone() * dm2.clone()
            - c::<T>(2) * dm2.clone() * (sp.clone() - c(4))
            + (sp.clone() - c(2)) * (sp.clone() + c(4)))
            / den.clone(),
        c::<T>(4) * dm.clone() * (sp.clone() + T::one()) * (dm2.clone() + sp.clone() - c(2))
            / den.clone(),
        -c::<T>(2)
            * (sp.clone() + T::one())
            * (dm2.clone() * (c::<T>(3) * sp.clone() + c(2))
                + (sp.clone() - c(2)) * (sp.clone() + c(4)))
            / den.clone(),
        c::<T>(4) * dm * (sp.clone() - T::one()) * (sp.clone() + T::one()) * (sp.clone() + c(2))
            / den.clone(),
        -(sp.clone() - c(2)) * (sp.clone() - T::one()) * (sp.clone() + T::one())
            * (sp + c(4))
            / den,
    ])
}

/// Classical Laguerre table entries L₀..L₂ for completeness checks.
pub fn laguerre_2<T: Scalar>(a: &T) -> Polynomial<T> {
    let half = T::from_ratio(1, 2);
    Polynomial::from_coeffs(vec![
        (a.clone() + c(2)) * (a.clone() + T::one()) * half.clone(),
        -(a.clone() + c(2)),
        half,
    ])
}
