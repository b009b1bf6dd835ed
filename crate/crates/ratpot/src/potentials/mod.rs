//! Conventional and rationally-extended potential models.
//!
//! Six families: the radial oscillator and Scarf I conventional potentials,
//! their linear rational extensions, and their quadratic rational extensions
//! (cases I, II, III). A model validates its parameter gates at
//! construction, knows its superpotential and factorization data, and
//! reports its bound-state spectrum.
//!
//! Additive constants: `evaluate` returns the conventional-plus-rational
//! potential with the extension's constant excluded; the constant itself is
//! stored on the model. Spectral quantities (`analytic_spectrum`, the FD
//! oracle, eigenfunction energies) include the constant exactly for the
//! extra-bound-state (case iii) families, where the extra level sits on the
//! constant-included scale; strictly isospectral extensions keep the
//! conventional same-parameter spectrum. SUSY identities always use the full
//! constant via `additive_constant`.

use serde::{Deserialize, Serialize};

use crate::error::ModelError;
use crate::jet::Jet;
use crate::orthopoly::Polynomial;
use crate::susy::SusyCase;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum QuadCase {
    I,
    II,
    III,
}

impl std::fmt::Display for QuadCase {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            QuadCase::I => write!(f, "I"),
            QuadCase::II => write!(f, "II"),
            QuadCase::III => write!(f, "III"),
        }
    }
}

/// Which reparametrized start the linear radial extension is built from:
/// `Upper` starts from l+1, `Lower` from l−1. Both produce the same extended
/// potential up to the additive constant.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum LinearBranch {
    Upper,
    Lower,
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub enum Family {
    RadialOsc { omega: f64, l: f64 },
    Scarf1 { a: f64, b: f64 },
    ExtRadialLinear { omega: f64, l: f64, branch: LinearBranch },
    ExtRadialQuad { omega: f64, l: f64, case: QuadCase },
    ExtScarfLinear { a: f64, b: f64 },
    ExtScarfQuad { a: f64, b: f64, case: QuadCase },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Domain {
    /// (0, ∞)
    HalfLine,
    /// (−π/2, π/2)
    ScarfInterval,
}

impl Domain {
    pub fn contains(&self, x: f64) -> bool {
        match self {
            Domain::HalfLine => x > 0.0 && x.is_finite(),
            Domain::ScarfInterval => x.abs() < std::f64::consts::FRAC_PI_2,
        }
    }

    pub fn endpoints(&self) -> (f64, f64) {
        match self {
            Domain::HalfLine => (0.0, f64::INFINITY),
            Domain::ScarfInterval => {
                (-std::f64::consts::FRAC_PI_2, std::f64::consts::FRAC_PI_2)
            }
        }
    }
}

/// Rational part of an extended potential: N₁/D + N₂/D², with the
/// polynomials in u = ωx² (radial) or s = sin x (Scarf).
#[derive(Clone, Debug, PartialEq)]
pub struct RationalTerms {
    pub n1: Polynomial<f64>,
    pub n2: Polynomial<f64>,
    pub d: Polynomial<f64>,
    pub var: RationalVar,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RationalVar {
    /// u = ω x²
    OmegaXSquared,
    /// s = sin x
    SinX,
}

impl RationalTerms {
    pub fn eval(&self, v: f64) -> f64 {
        let d = self.d.eval(&v);
        self.n1.eval(&v) / d + self.n2.eval(&v) / (d * d)
    }

    /// Real roots of D strictly inside the physical range of the variable
    /// (u > 0, or −1 < s < 1). Zero for every valid model.
    pub fn denominator_roots_in_range(&self) -> usize {
        let inside = |r: f64| match self.var {
            RationalVar::OmegaXSquared => r > 0.0,
            RationalVar::SinX => r.abs() < 1.0,
        };
        let c = self.d.coeffs();
        match c.len() {
            0 | 1 => 0,
            2 => usize::from(inside(-c[0] / c[1])),
            3 => {
                let (a, b, c0) = (c[2], c[1], c[0]);
                let disc = b * b - 4.0 * a * c0;
                if disc < 0.0 {
                    0
                } else {
                    let s = disc.sqrt();
                    usize::from(inside((-b + s) / (2.0 * a)))
                        + usize::from(inside((-b - s) / (2.0 * a)))
                }
            }
            _ => unreachable!("denominators are at most quadratic in their variable"),
        }
    }
}

/// Superpotential in the ansatz form of the construction:
/// radial W = a·x + b/x − d/dx ln g(x²), Scarf W = a·tan x + b·sec x −
/// d/dx ln g(sin x); `g = None` for the conventional (case i) superpotential.
#[derive(Clone, Debug, PartialEq)]
pub struct Superpotential {
    pub kind: SuperpotentialKind,
    pub a: f64,
    pub b: f64,
    /// Polynomial in u = x² (radial) or z = sin x (Scarf).
    pub g: Option<Polynomial<f64>>,
    /// Which branch/sign choice this is.
    pub label: String,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SuperpotentialKind {
    Radial,
    Scarf,
}

impl Superpotential {
    /// W and its first three derivatives, all analytic.
    pub fn jet(&self, x: f64) -> Jet {
        match self.kind {
            SuperpotentialKind::Radial => {
                let v = Jet::var(x);
                let mut w = v.scale(self.a) + v.recip().scale(self.b);
                if let Some(g) = &self.g {
                    let u = v * v;
                    let gj = Jet::compose_poly(g, u);
                    // (g(x²))′ = 2x · ġ(x²)
                    let gpj = v.scale(2.0) * Jet::compose_poly(&g.derivative(), u);
                    w = w - gpj / gj;
                }
                w
            }
            SuperpotentialKind::Scarf => {
                let s = Jet::sin_var(x);
                let c = Jet::cos_var(x);
                let mut w = (s / c).scale(self.a) + c.recip().scale(self.b);
                if let Some(g) = &self.g {
                    let gj = Jet::compose_poly(g, s);
                    let gpj = c * Jet::compose_poly(&g.derivative(), s);
                    w = w - gpj / gj;
                }
                w
            }
        }
    }

    pub fn w(&self, x: f64) -> f64 {
        self.jet(x).f
    }

    pub fn w_prime(&self, x: f64) -> f64 {
        self.jet(x).d1
    }
}

/// Factorization function φ in closed form; its boundary exponents drive the
/// SUSY case classification.
#[derive(Clone, Debug, PartialEq)]
pub enum PhiForm {
    /// x^{pow} · P(z) · exp(sign · ωx²/4), z = ωx²/2
    Radial { pow: f64, gauss_sign: f64, poly_z: Polynomial<f64>, omega: f64 },
    /// (1−z)^{e_minus} (1+z)^{e_plus} · P(z), z = sin x
    Scarf { e_minus: f64, e_plus: f64, poly_z: Polynomial<f64> },
}

impl PhiForm {
    pub fn eval(&self, x: f64) -> f64 {
        self.jet(x).f
    }

    pub fn jet(&self, x: f64) -> Jet {
        match self {
            PhiForm::Radial { pow, gauss_sign, poly_z, omega } => {
                let v = Jet::var(x);
                let z = (v * v).scale(omega / 2.0);
                let mut j = Jet::compose_poly(poly_z, z);
                j = j * v.powf(*pow);
                j * z.scale(gauss_sign * 0.5).exp()
            }
            PhiForm::Scarf { e_minus, e_plus, poly_z } => {
                let s = Jet::sin_var(x);
                let one = Jet::constant(1.0);
                Jet::compose_poly(poly_z, s)
                    * (one - s).powf(*e_minus)
                    * (one + s).powf(*e_plus)
            }
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct FactorizationData {
    /// Factorization energy E of the SUSY construction (absolute scale).
    pub energy: f64,
    pub phi: PhiForm,
    pub susy_case: SusyCase,
}

#[derive(Clone, Debug, PartialEq)]
pub struct PotentialModel {
    family: Family,
    domain: Domain,
    additive_constant: f64,
    gamma: Option<f64>,
}

fn err(msg: impl Into<String>) -> ModelError {
    ModelError::Parameter(msg.into())
}

impl PotentialModel {
    /// Validates the family's parameter gates and builds the model.
    #[allow(clippy::neg_cmp_op_on_partial_ord)] // !(x > c) also rejects NaN
    pub fn new(family: Family) -> Result<Self, ModelError> {
        match family {
            Family::RadialOsc { omega, l } => {
                if !(omega > 0.0 && omega.is_finite()) {
                    return Err(err("radial oscillator requires omega > 0"));
                }
                if !(l >= 0.0 && l.is_finite()) {
                    return Err(err("radial oscillator requires l >= 0"));
                }
            }
            Family::Scarf1 { a, b } => {
                if !(a.is_finite() && b.is_finite() && 0.0 < b && b < a - 1.0) {
                    return Err(err("Scarf I requires 0 < B < A-1"));
                }
            }
            Family::ExtRadialLinear { omega, l, branch } => {
                if !(omega > 0.0 && omega.is_finite()) {
                    return Err(err("extended radial oscillator requires omega > 0"));
                }
                if !(l >= 0.0 && l.is_finite()) {
                    return Err(err("extended radial oscillator requires l >= 0"));
                }
                if l == 0.0 && branch == LinearBranch::Lower {
                    return Err(err(
                        "the lower-sign start V_{l-1} is only valid for positive l; \
                         l = 0 admits only the upper-sign start",
                    ));
                }
            }
            Family::ExtRadialQuad { omega, l, case } => {
                if !(omega > 0.0 && omega.is_finite()) {
                    return Err(err("extended radial oscillator requires omega > 0"));
                }
                if !l.is_finite() {
                    return Err(err("l must be finite"));
                }
                match case {
                    QuadCase::I => {
                        if !(l > 0.0) {
                            return Err(err(
                                "quadratic case I requires l > 0 (real-root condition \
                                 c > 0, 0 < d <= c^2/4)",
                            ));
                        }
                    }
                    QuadCase::II | QuadCase::III => {
                        if !(l > 0.5) {
                            return Err(err(
                                "quadratic cases II/III require l > 1/2 (complex-root \
                                 condition d > c^2/4, i.e. gamma = 2l-1 > 0)",
                            ));
                        }
                    }
                }
            }
            Family::ExtScarfLinear { a, b } => {
                if !(a.is_finite() && b.is_finite() && 0.0 < b && b < a - 1.0) {
                    return Err(err("extended Scarf I (linear) requires 0 < B < A-1"));
                }
            }
            Family::ExtScarfQuad { a, b, case } => {
                if !(a.is_finite() && b.is_finite()) {
                    return Err(err("A and B must be finite"));
                }
                match case {
                    QuadCase::I => {
                        if !(1.0 < b && b < a - 1.0) {
                            return Err(err(
                                "quadratic Scarf case I requires 1 < B < A-1 (table row 1a*)",
                            ));
                        }
                    }
                    QuadCase::II => {
                        if !(0.0 < b && b < a - 1.5) {
                            return Err(err(
                                "quadratic Scarf case II requires 0 < B < A-3/2 \
                                 (table row 2*, a = B-1/2)",
                            ));
                        }
                    }
                    QuadCase::III => {
                        if !(0.0 < b && b < a - 1.5) {
                            return Err(err(
                                "quadratic Scarf case III requires 0 < B < A-3/2 \
                                 (table row 2*, a = -A)",
                            ));
                        }
                    }
                }
            }
        }
        Ok(Self::assemble(family))
    }

    /// Builds a conventional model validating only the conditions needed for
    /// a complete bound spectrum. Start models of the SUSY construction can
    /// sit outside the strict public gates (B' on a boundary, B' < 0,
    /// l' in (−1, 0)).
    pub(crate) fn conventional_start(family: Family) -> Result<Self, ModelError> {
        match family {
            Family::RadialOsc { omega, l } => {
                if !(omega > 0.0 && l > -1.0) {
                    return Err(err("start model requires omega > 0 and l > -1"));
                }
            }
            Family::Scarf1 { a, b } => {
                if !(a - b > 0.0 && a + b > 0.0) {
                    return Err(err("start model requires A-B > 0 and A+B > 0"));
                }
            }
            _ => return Err(err("start models are conventional")),
        }
        Ok(Self::assemble(family))
    }

    fn assemble(family: Family) -> Self {
        let domain = match family {
            Family::RadialOsc { .. }
            | Family::ExtRadialLinear { .. }
            | Family::ExtRadialQuad { .. } => Domain::HalfLine,
            _ => Domain::ScarfInterval,
        };
        let additive_constant = match family {
            Family::ExtRadialLinear { omega, branch, .. } => match branch {
                LinearBranch::Upper => omega,
                LinearBranch::Lower => -omega,
            },
            Family::ExtRadialQuad { omega, case, .. } => match case {
                QuadCase::I | QuadCase::III => -omega,
                QuadCase::II => omega,
            },
            _ => 0.0,
        };
        let gamma = match family {
            Family::ExtRadialQuad { l, case, .. } => Some(match case {
                QuadCase::I => 2.0 * l + 3.0,
                QuadCase::II | QuadCase::III => 2.0 * l - 1.0,
            }),
            _ => None,
        };
        PotentialModel { family, domain, additive_constant, gamma }
    }

    pub fn family(&self) -> &Family {
        &self.family
    }

    pub fn domain(&self) -> Domain {
        self.domain
    }

    /// The extension's additive constant in the paper form of V^(−)
    /// (±ω for the radial extensions, 0 otherwise).
    pub fn additive_constant(&self) -> f64 {
        self.additive_constant
    }

    pub fn gamma(&self) -> Option<f64> {
        self.gamma
    }

    pub fn is_extended(&self) -> bool {
        !matches!(self.family, Family::RadialOsc { .. } | Family::Scarf1 { .. })
    }

    /// Constant added to `evaluate` to form the Hamiltonian whose spectrum
    /// this model reports: the extension constant for extra-bound-state
    /// families, zero otherwise.
    pub fn spectral_offset(&self) -> f64 {
        match self.family {
            Family::ExtRadialQuad { case: QuadCase::III, .. }
            | Family::ExtScarfQuad { case: QuadCase::III, .. } => self.additive_constant,
            _ => 0.0,
        }
    }

    pub fn describe(&self) -> String {
        match self.family {
            Family::RadialOsc { omega, l } => format!("radial(omega={omega}, l={l})"),
            Family::Scarf1 { a, b } => format!("scarf(A={a}, B={b})"),
            Family::ExtRadialLinear { omega, l, branch } => {
                format!("radial-ext-linear(omega={omega}, l={l}, branch={branch:?})")
            }
            Family::ExtRadialQuad { omega, l, case } => {
                format!("radial-ext-quad(omega={omega}, l={l}, case={case})")
            }
            Family::ExtScarfLinear { a, b } => {
                format!("scarf-ext-linear(A={a}, B={b})")
            }
            Family::ExtScarfQuad { a, b, case } => {
                format!("scarf-ext-quad(A={a}, B={b}, case={case})")
            }
        }
    }

    /// Rational part of the extension, `None` for conventional models.
    pub fn rational_terms(&self) -> Option<RationalTerms> {
        match self.family {
            Family::RadialOsc { .. } | Family::Scarf1 { .. } => None,
            Family::ExtRadialLinear { omega, l, .. } => Some(RationalTerms {
                n1: Polynomial::constant(4.0 * omega),
                n2: Polynomial::constant(-8.0 * omega * (2.0 * l + 1.0)),
                d: Polynomial::from_coeffs(vec![2.0 * l + 1.0, 1.0]),
                var: RationalVar::OmegaXSquared,
            }),
            Family::ExtRadialQuad { omega, case, .. } => {
                let g = self.gamma.expect("quad radial models carry gamma");
                let (n1, n2, d) = match case {
                    // 8ω(u−γ)/[(u+γ)²−2γ] + 64γω·u/[(u+γ)²−2γ]²
                    QuadCase::I => (
                        Polynomial::from_coeffs(vec![-8.0 * omega * g, 8.0 * omega]),
                        Polynomial::from_coeffs(vec![0.0, 64.0 * g * omega]),
                        Polynomial::from_coeffs(vec![g * g - 2.0 * g, 2.0 * g, 1.0]),
                    ),
                    // 8ω(u−γ)/[(u+γ)²+2γ] − 64γω·u/[(u+γ)²+2γ]²
                    QuadCase::II => (
                        Polynomial::from_coeffs(vec![-8.0 * omega * g, 8.0 * omega]),
                        Polynomial::from_coeffs(vec![0.0, -64.0 * g * omega]),
                        Polynomial::from_coeffs(vec![g * g + 2.0 * g, 2.0 * g, 1.0]),
                    ),
                    // 8ω(u+γ)/[(u−γ)²+2γ] − 64γω·u/[(u−γ)²+2γ]²
                    QuadCase::III => (
                        Polynomial::from_coeffs(vec![8.0 * omega * g, 8.0 * omega]),
                        Polynomial::from_coeffs(vec![0.0, -64.0 * g * omega]),
                        Polynomial::from_coeffs(vec![g * g + 2.0 * g, -2.0 * g, 1.0]),
                    ),
                };
                Some(RationalTerms { n1, n2, d, var: RationalVar::OmegaXSquared })
            }
            Family::ExtScarfLinear { a, b } => {
                let (ta, tb) = (2.0 * a - 1.0, 2.0 * b);
                Some(RationalTerms {
                    n1: Polynomial::constant(2.0 * ta),
                    n2: Polynomial::constant(-2.0 * (ta * ta - tb * tb)),
                    d: Polynomial::from_coeffs(vec![ta, -tb]),
                    var: RationalVar::SinX,
                })
            }
            Family::ExtScarfQuad { a, b, case } => {
                let (n1, n2) = scarf_quad_numerators(a, b, case);
                Some(RationalTerms {
                    n1,
                    n2,
                    d: scarf_quad_denominator(a, b, case),
                    var: RationalVar::SinX,
                })
            }
        }
    }

    /// Potential value and first three derivatives (additive constant
    /// excluded), for residual checks that need V′ analytically.
    pub fn v_jet(&self, x: f64) -> Result<Jet, ModelError> {
        if !self.domain.contains(x) {
            return Err(ModelError::Domain(format!(
                "x = {x} is outside the open domain of {}",
                self.describe()
            )));
        }
        let v = Jet::var(x);
        let base = match self.family {
            Family::RadialOsc { omega, l }
            | Family::ExtRadialLinear { omega, l, .. }
            | Family::ExtRadialQuad { omega, l, .. } => {
                (v * v).scale(0.25 * omega * omega)
                    + (v * v).recip().scale(l * (l + 1.0))
            }
            Family::Scarf1 { a, b }
            | Family::ExtScarfLinear { a, b }
            | Family::ExtScarfQuad { a, b, .. } => {
                let sec = Jet::cos_var(x).recip();
                let tan = Jet::sin_var(x) * sec;
                (sec * sec).scale(a * (a - 1.0) + b * b)
                    - (sec * tan).scale(b * (2.0 * a - 1.0))
            }
        };
        let rat = match self.rational_terms() {
            None => Jet::constant(0.0),
            Some(terms) => {
                let arg = match terms.var {
                    RationalVar::OmegaXSquared => {
                        let omega = match self.family {
                            Family::ExtRadialLinear { omega, .. }
                            | Family::ExtRadialQuad { omega, .. } => omega,
                            _ => unreachable!(),
                        };
                        (v * v).scale(omega)
                    }
                    RationalVar::SinX => Jet::sin_var(x),
                };
                let d = Jet::compose_poly(&terms.d, arg);
                Jet::compose_poly(&terms.n1, arg) / d
                    + Jet::compose_poly(&terms.n2, arg) / (d * d)
            }
        };
        Ok(base + rat)
    }

    /// Potential value excluding the additive constant.
    pub fn evaluate(&self, x: f64) -> Result<f64, ModelError> {
        if !self.domain.contains(x) {
            return Err(ModelError::Domain(format!(
                "x = {x} is outside the open domain of {}",
                self.describe()
            )));
        }
        let base = match self.family {
            Family::RadialOsc { omega, l }
            | Family::ExtRadialLinear { omega, l, .. }
            | Family::ExtRadialQuad { omega, l, .. } => {
                0.25 * omega * omega * x * x + l * (l + 1.0) / (x * x)
            }
            Family::Scarf1 { a, b }
            | Family::ExtScarfLinear { a, b }
            | Family::ExtScarfQuad { a, b, .. } => {
                let sec = 1.0 / x.cos();
                (a * (a - 1.0) + b * b) * sec * sec - b * (2.0 * a - 1.0) * sec * x.tan()
            }
        };
        let rat = match self.rational_terms() {
            None => 0.0,
            Some(terms) => {
                let v = match terms.var {
                    RationalVar::OmegaXSquared => match self.family {
                        Family::ExtRadialLinear { omega, .. }
                        | Family::ExtRadialQuad { omega, .. } => omega * x * x,
                        _ => unreachable!(),
                    },
                    RationalVar::SinX => x.sin(),
                };
                terms.eval(v)
            }
        };
        Ok(base + rat)
    }

    /// The reparametrized conventional potential V^(+) the construction
    /// starts from (canonical branch).
    pub fn start_model(&self) -> Result<PotentialModel, ModelError> {
        let fam = match self.family {
            Family::ExtRadialLinear { omega, l, branch } => Family::RadialOsc {
                omega,
                l: match branch {
                    LinearBranch::Upper => l + 1.0,
                    LinearBranch::Lower => l - 1.0,
                },
            },
            Family::ExtRadialQuad { omega, l, case } => Family::RadialOsc {
                omega,
                l: match case {
                    QuadCase::I => l - 1.0,
                    QuadCase::II | QuadCase::III => l + 1.0,
                },
            },
            Family::ExtScarfLinear { a, b } => Family::Scarf1 { a, b: b + 1.0 },
            Family::ExtScarfQuad { a, b, case } => match case {
                QuadCase::I => Family::Scarf1 { a, b: b + 1.0 },
                QuadCase::II => Family::Scarf1 { a, b: b - 1.0 },
                QuadCase::III => Family::Scarf1 { a: a + 1.0, b },
            },
            _ => {
                return Err(err(format!(
                    "{} is conventional and has no SUSY start model",
                    self.describe()
                )))
            }
        };
        PotentialModel::conventional_start(fam)
    }

    /// Ascending bound-state energies of the model's spectral Hamiltonian
    /// (see the module notes on the constant convention).
    pub fn analytic_spectrum(&self, count: usize) -> Vec<f64> {
        let radial = |omega: f64, l: f64, extra: Option<f64>| {
            let mut out: Vec<f64> = Vec::with_capacity(count);
            if let Some(e) = extra {
                out.push(e);
            }
            let mut nu = 0;
            while out.len() < count {
                out.push(omega * (2.0 * nu as f64 + l + 1.5));
                nu += 1;
            }
            out
        };
        let scarf = |a: f64, extra: Option<f64>| {
            let mut out: Vec<f64> = Vec::with_capacity(count);
            if let Some(e) = extra {
                out.push(e);
            }
            let mut nu = 0;
            while out.len() < count {
                out.push((a + nu as f64) * (a + nu as f64));
                nu += 1;
            }
            out
        };
        match self.family {
            Family::RadialOsc { omega, l } | Family::ExtRadialLinear { omega, l, .. } => {
                radial(omega, l, None)
            }
            Family::ExtRadialQuad { omega, l, case } => match case {
                QuadCase::I | QuadCase::II => radial(omega, l, None),
                // extra level ω(l−7/2), then the (l+1) tower, both on the
                // constant-included scale of the paper's V^(−)
                QuadCase::III => radial(omega, l + 1.0, Some(omega * (l - 3.5))),
            },
            Family::Scarf1 { a, .. } | Family::ExtScarfLinear { a, .. } => scarf(a, None),
            Family::ExtScarfQuad { a, case, .. } => match case {
                QuadCase::I | QuadCase::II => scarf(a, None),
                QuadCase::III => scarf(a + 1.0, Some((a - 2.0) * (a - 2.0))),
            },
        }
    }

    /// Superpotential of the SUSY construction (conventional models get the
    /// standard case-i superpotential).
    pub fn superpotential(&self) -> Superpotential {
        match self.family {
            Family::RadialOsc { omega, l } => Superpotential {
                kind: SuperpotentialKind::Radial,
                a: 0.5 * omega,
                b: -(l + 1.0),
                g: None,
                label: "radial conventional".into(),
            },
            Family::Scarf1 { a, b } => Superpotential {
                kind: SuperpotentialKind::Scarf,
                a,
                b: -b,
                g: None,
                label: "scarf conventional".into(),
            },
            Family::ExtRadialLinear { omega, l, branch } => {
                let c = (2.0 * l + 1.0) / omega;
                let g = Polynomial::from_coeffs(vec![c, 1.0]);
                let (sa, sb, label) = match branch {
                    LinearBranch::Upper => (0.5 * omega, l + 1.0, "radial linear, upper signs"),
                    LinearBranch::Lower => (-0.5 * omega, -l, "radial linear, lower signs"),
                };
                Superpotential {
                    kind: SuperpotentialKind::Radial,
                    a: sa,
                    b: sb,
                    g: Some(g),
                    label: label.into(),
                }
            }
            Family::ExtRadialQuad { omega, l, case } => {
                let g = self.gamma.expect("quad radial models carry gamma");
                let (sa, sb, c, d, label) = match case {
                    QuadCase::I => (
                        -0.5 * omega,
                        -l,
                        2.0 * g / omega,
                        g * (g - 2.0) / (omega * omega),
                        "radial quadratic case I",
                    ),
                    QuadCase::II => (
                        0.5 * omega,
                        l + 1.0,
                        2.0 * g / omega,
                        g * (g + 2.0) / (omega * omega),
                        "radial quadratic case II",
                    ),
                    QuadCase::III => (
                        -0.5 * omega,
                        l + 1.0,
                        -2.0 * g / omega,
                        g * (g + 2.0) / (omega * omega),
                        "radial quadratic case III",
                    ),
                };
                Superpotential {
                    kind: SuperpotentialKind::Radial,
                    a: sa,
                    b: sb,
                    g: Some(Polynomial::from_coeffs(vec![d, c, 1.0])),
                    label: label.into(),
                }
            }
            Family::ExtScarfLinear { a, b } => {
                let c = -(2.0 * a - 1.0) / (2.0 * b);
                Superpotential {
                    kind: SuperpotentialKind::Scarf,
                    a: -b - 0.5,
                    b: a - 0.5,
                    g: Some(Polynomial::from_coeffs(vec![c, 1.0])),
                    label: "scarf linear, upper signs".into(),
                }
            }
            Family::ExtScarfQuad { a, b, case } => {
                let (sa, sb, label) = match case {
                    QuadCase::I => (-b - 0.5, a - 0.5, "scarf quadratic case I (row 1a*)"),
                    QuadCase::II => (b - 0.5, -a + 0.5, "scarf quadratic case II (row 2*)"),
                    QuadCase::III => (-a, b, "scarf quadratic case III (row 2*)"),
                };
                let c = 4.0 * sb / (2.0 * sa + 3.0);
                let d = (4.0 * sb * sb - (2.0 * sa + 3.0))
                    / (2.0 * (sa + 1.0) * (2.0 * sa + 3.0));
                Superpotential {
                    kind: SuperpotentialKind::Scarf,
                    a: sa,
                    b: sb,
                    g: Some(Polynomial::from_coeffs(vec![d, c, 1.0])),
                    label: label.into(),
                }
            }
        }
    }

    /// Factorization energy, function, and SUSY case of an extended model.
    pub fn factorization(&self) -> Result<FactorizationData, ModelError> {
        let phi_radial = |pow: f64, sign: f64, poly_z: Polynomial<f64>, omega: f64| {
            PhiForm::Radial { pow, gauss_sign: sign, poly_z, omega }
        };
        let (energy, phi) = match self.family {
            Family::ExtRadialLinear { omega, l, branch } => {
                let den = Polynomial::from_coeffs(vec![2.0 * l + 1.0, 2.0]);
                match branch {
                    LinearBranch::Upper => (
                        -omega * (l - 1.5),
                        phi_radial(-(l + 1.0), -1.0, den, omega),
                    ),
                    LinearBranch::Lower => {
                        (-omega * (l + 2.5), phi_radial(l, 1.0, den, omega))
                    }
                }
            }
            Family::ExtRadialQuad { omega, l, case } => {
                let g = self.gamma.expect("quad radial models carry gamma");
                match case {
                    // φ = x^l [(2z+γ)²−2γ] e^{+ωx²/4}
                    QuadCase::I => (
                        -omega * (l + 4.5),
                        phi_radial(
                            l,
                            1.0,
                            Polynomial::from_coeffs(vec![g * g - 2.0 * g, 4.0 * g, 4.0]),
                            omega,
                        ),
                    ),
                    // φ = x^{−l−1} [(2z+γ)²+2γ] e^{−ωx²/4}
                    QuadCase::II => (
                        -omega * (l - 3.5),
                        phi_radial(
                            -(l + 1.0),
                            -1.0,
                            Polynomial::from_coeffs(vec![g * g + 2.0 * g, 4.0 * g, 4.0]),
                            omega,
                        ),
                    ),
                    // φ = x^{−l−1} [(2z−γ)²+2γ] e^{+ωx²/4}
                    QuadCase::III => (
                        omega * (l - 3.5),
                        phi_radial(
                            -(l + 1.0),
                            1.0,
                            Polynomial::from_coeffs(vec![g * g + 2.0 * g, -4.0 * g, 4.0]),
                            omega,
                        ),
                    ),
                }
            }
            Family::ExtScarfLinear { a, b } => (
                (b - 0.5) * (b - 0.5),
                PhiForm::Scarf {
                    e_minus: 0.5 * (a - b - 1.0),
                    e_plus: -0.5 * (a + b),
                    poly_z: Polynomial::from_coeffs(vec![2.0 * a - 1.0, -2.0 * b]),
                },
            ),
            Family::ExtScarfQuad { a, b, case } => {
                let d = scarf_quad_denominator(a, b, case);
                match case {
                    QuadCase::I => (
                        (b - 1.5) * (b - 1.5),
                        PhiForm::Scarf {
                            e_minus: 0.5 * (a - b - 1.0),
                            e_plus: -0.5 * (a + b),
                            poly_z: d,
                        },
                    ),
                    QuadCase::II => (
                        (b + 1.5) * (b + 1.5),
                        PhiForm::Scarf {
                            e_minus: -0.5 * (a - b),
                            e_plus: 0.5 * (a + b - 1.0),
                            poly_z: d,
                        },
                    ),
                    QuadCase::III => (
                        (a - 2.0) * (a - 2.0),
                        PhiForm::Scarf {
                            e_minus: -0.5 * (a - b),
                            e_plus: -0.5 * (a + b),
                            poly_z: d,
                        },
                    ),
                }
            }
            _ => {
                return Err(err(format!(
                    "{} is conventional; factorization data applies to extensions",
                    self.describe()
                )))
            }
        };
        let susy_case = crate::susy::classify(&phi).map_err(|e| err(e.to_string()))?;
        Ok(FactorizationData { energy, phi, susy_case })
    }
}

/// D(x) of the quadratic Scarf extensions, as a polynomial in z = sin x.
pub fn scarf_quad_denominator(a: f64, b: f64, case: QuadCase) -> Polynomial<f64> {
    let lin = |p: f64, q: f64| Polynomial::from_coeffs(vec![q, p]);
    match case {
        QuadCase::I => {
            // (2B−1)[(2B−2)z − (2A−1)]² − (2A−2B+1)(2A+2B−3)
            let l = lin(2.0 * b - 2.0, -(2.0 * a - 1.0));
            l.mul(&l).scale(&(2.0 * b - 1.0)).add(&Polynomial::constant(
                -(2.0 * a - 2.0 * b + 1.0) * (2.0 * a + 2.0 * b - 3.0),
            ))
        }
        QuadCase::II => {
            let l = lin(2.0 * b + 2.0, -(2.0 * a - 1.0));
            l.mul(&l).scale(&(2.0 * b + 1.0)).add(&Polynomial::constant(
                (2.0 * a - 2.0 * b - 3.0) * (2.0 * a + 2.0 * b + 1.0),
            ))
        }
        QuadCase::III => {
            let l = lin(2.0 * a - 3.0, -2.0 * b);
            l.mul(&l).scale(&(2.0 * a - 2.0)).add(&Polynomial::constant(
                (2.0 * a - 2.0 * b - 3.0) * (2.0 * a + 2.0 * b - 3.0),
            ))
        }
    }
}

fn scarf_quad_numerators(a: f64, b: f64, case: QuadCase) -> (Polynomial<f64>, Polynomial<f64>) {
    let ta = 2.0 * a - 1.0;
    match case {
        QuadCase::I => {
            let tb = 2.0 * b - 2.0;
            // N₁ = −4[(2A−1)(2B−1)(2B−2) s + 2(2A−1)² − (2B−2)²(2B+1)]
            let n1 = Polynomial::from_coeffs(vec![
                -4.0 * (2.0 * ta * ta - tb * tb * (2.0 * b + 1.0)),
                -4.0 * ta * (2.0 * b - 1.0) * tb,
            ]);
            // N₂ = −8(2B−2)(2A−2B+1)(2A+2B−3)[2(2A−1)(2B−1) s − (2A−1)² − 2B(2B−2)]
            let pref = -8.0 * tb * (2.0 * a - 2.0 * b + 1.0) * (2.0 * a + 2.0 * b - 3.0);
            let n2 = Polynomial::from_coeffs(vec![
                -(ta * ta) - 2.0 * b * tb,
                2.0 * ta * (2.0 * b - 1.0),
            ])
            .scale(&pref);
            (n1, n2)
        }
        QuadCase::II => {
            let tb = 2.0 * b + 2.0;
            // N₁ = −4[(2A−1)(2B+1)(2B+2) s − 2(2A−1)² − (2B+2)²(2B−1)]
            let n1 = Polynomial::from_coeffs(vec![
                4.0 * (2.0 * ta * ta + tb * tb * (2.0 * b - 1.0)),
                -4.0 * ta * (2.0 * b + 1.0) * tb,
            ]);
            // N₂ = 8(2B+2)(2A−2B−3)(2A+2B+1)[2(2A−1)(2B+1) s − (2A−1)² − 2B(2B+2)]
            let pref = 8.0 * tb * (2.0 * a - 2.0 * b - 3.0) * (2.0 * a + 2.0 * b + 1.0);
            let n2 = Polynomial::from_coeffs(vec![
                -(ta * ta) - 2.0 * b * tb,
                2.0 * ta * (2.0 * b + 1.0),
            ])
            .scale(&pref);
            (n1, n2)
        }
        QuadCase::III => {
            let t3 = 2.0 * a - 3.0;
            // N₁ = −8[B(2A−2)(2A−3) s − A(2A−3)² + 4B²]
            let n1 = Polynomial::from_coeffs(vec![
                -8.0 * (-a * t3 * t3 + 4.0 * b * b),
                -8.0 * b * (2.0 * a - 2.0) * t3,
            ]);
            // N₂ = 8(2A−3)(2A−2B−3)(2A+2B−3)[4B(2A−2) s − 4B² − (2A−1)(2A−3)]
            let pref = 8.0 * t3 * (2.0 * a - 2.0 * b - 3.0) * (2.0 * a + 2.0 * b - 3.0);
            let n2 = Polynomial::from_coeffs(vec![
                -4.0 * b * b - ta * t3,
                4.0 * b * (2.0 * a - 2.0),
            ])
            .scale(&pref);
            (n1, n2)
        }
    }
}

/// One row of the quadratic-Scarf parameter table. Only the three asterisked
/// rows map to constructible extensions; the others are regions the
/// construction leaves unused.
#[derive(Clone, Copy, Debug)]
pub struct Table1Row {
    pub index: usize,
    pub label: &'static str,
    pub constructible: Option<QuadCase>,
}

pub const TABLE1: [Table1Row; 9] = [
    Table1Row {
        index: 1,
        label: "1a*: a=-B-1/2, b=A-1/2, 1 < B < A-1",
        constructible: Some(QuadCase::I),
    },
    Table1Row {
        index: 2,
        label: "1b: a=-B-1/2, b=A-1/2, 3/2 < A < 2, 1/2 < B < A-1",
        constructible: None,
    },
    Table1Row {
        index: 3,
        label: "1b: a=-B-1/2, b=A-1/2, A >= 2, 1/2 < B < 1",
        constructible: None,
    },
    Table1Row {
        index: 4,
        label: "2: a=-B-1/2, b=A-1/2, 5/4 < A < 3/2, 3/2-A < B < A-1",
        constructible: None,
    },
    Table1Row {
        index: 5,
        label: "2: a=-B-1/2, b=A-1/2, A >= 3/2, 0 < B < 1/2",
        constructible: None,
    },
    Table1Row {
        index: 6,
        label: "2*: a=B-1/2, b=-A+1/2, 0 < B < A-3/2",
        constructible: Some(QuadCase::II),
    },
    Table1Row {
        index: 7,
        label: "2: a=-A, b=B, 1 < A <= 5/4, 0 < B < A-1",
        constructible: None,
    },
    Table1Row {
        index: 8,
        label: "2: a=-A, b=B, 5/4 < A < 3/2, 0 < B < 3/2-A",
        constructible: None,
    },
    Table1Row {
        index: 9,
        label: "2*: a=-A, b=B, 0 < B < A-3/2",
        constructible: Some(QuadCase::III),
    },
];

/// Region membership of (A, B) for each of the nine table rows, inequalities
/// exactly as stated.
pub fn table1_memberships(a: f64, b: f64) -> [bool; 9] {
    [
        1.0 < b && b < a - 1.0,
        1.5 < a && a < 2.0 && 0.5 < b && b < a - 1.0,
        a >= 2.0 && 0.5 < b && b < 1.0,
        1.25 < a && a < 1.5 && 1.5 - a < b && b < a - 1.0,
        a >= 1.5 && 0.0 < b && b < 0.5,
        0.0 < b && b < a - 1.5,
        1.0 < a && a <= 1.25 && 0.0 < b && b < a - 1.0,
        1.25 < a && a < 1.5 && 0.0 < b && b < 1.5 - a,
        0.0 < b && b < a - 1.5,
    ]
}

/// Serialized form {family, parameters, case, branch} used on the wire.
#[derive(Clone, Debug, Serialize, Deserialize, PartialEq)]
pub struct ModelDescriptor {
    pub family: String,
    pub parameters: DescriptorParams,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub case: Option<QuadCase>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub branch: Option<LinearBranch>,
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Default)]
pub struct DescriptorParams {
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub omega: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub l: Option<f64>,
    #[serde(rename = "A", skip_serializing_if = "Option::is_none", default)]
    pub a: Option<f64>,
    #[serde(rename = "B", skip_serializing_if = "Option::is_none", default)]
    pub b: Option<f64>,
}

impl PotentialModel {
    pub fn to_descriptor(&self) -> ModelDescriptor {
        let mut params = DescriptorParams::default();
        let (family, case, branch) = match self.family {
            Family::RadialOsc { omega, l } => {
                params.omega = Some(omega);
                params.l = Some(l);
                ("radial", None, None)
            }
            Family::Scarf1 { a, b } => {
                params.a = Some(a);
                params.b = Some(b);
                ("scarf", None, None)
            }
            Family::ExtRadialLinear { omega, l, branch } => {
                params.omega = Some(omega);
                params.l = Some(l);
                ("radial-ext-linear", None, Some(branch))
            }
            Family::ExtRadialQuad { omega, l, case } => {
                params.omega = Some(omega);
                params.l = Some(l);
                ("radial-ext-quad", Some(case), None)
            }
            Family::ExtScarfLinear { a, b } => {
                params.a = Some(a);
                params.b = Some(b);
                ("scarf-ext-linear", None, None)
            }
            Family::ExtScarfQuad { a, b, case } => {
                params.a = Some(a);
                params.b = Some(b);
                ("scarf-ext-quad", Some(case), None)
            }
        };
        ModelDescriptor { family: family.to_string(), parameters: params, case, branch }
    }

    pub fn from_descriptor(d: &ModelDescriptor) -> Result<Self, ModelError> {
        let need = |v: Option<f64>, name: &str| {
            v.ok_or_else(|| err(format!("missing parameter '{name}' for family {}", d.family)))
        };
        let family = match d.family.as_str() {
            "radial" => Family::RadialOsc {
                omega: need(d.parameters.omega, "omega")?,
                l: need(d.parameters.l, "l")?,
            },
            "scarf" => Family::Scarf1 {
                a: need(d.parameters.a, "A")?,
                b: need(d.parameters.b, "B")?,
            },
            "radial-ext-linear" => {
                let l = need(d.parameters.l, "l")?;
                Family::ExtRadialLinear {
                    omega: need(d.parameters.omega, "omega")?,
                    l,
                    branch: d.branch.unwrap_or(if l == 0.0 {
                        LinearBranch::Upper
                    } else {
                        LinearBranch::Lower
                    }),
                }
            }
            "radial-ext-quad" => Family::ExtRadialQuad {
                omega: need(d.parameters.omega, "omega")?,
                l: need(d.parameters.l, "l")?,
                case: d.case.ok_or_else(|| err("missing 'case' for radial-ext-quad"))?,
            },
            "scarf-ext-linear" => Family::ExtScarfLinear {
                a: need(d.parameters.a, "A")?,
                b: need(d.parameters.b, "B")?,
            },
            "scarf-ext-quad" => Family::ExtScarfQuad {
                a: need(d.parameters.a, "A")?,
                b: need(d.parameters.b, "B")?,
                case: d.case.ok_or_else(|| err("missing 'case' for scarf-ext-quad"))?,
            },
            other => return Err(err(format!("unknown family '{other}'"))),
        };
        PotentialModel::new(family)
    }
}

#[cfg(test)]
mod tests;
