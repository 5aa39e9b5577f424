use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use super::plane_cubic::TwistedCubic;
use super::quadrics::inner_quartic_poly;
use crate::elliptic::curve::Curve;
use crate::elliptic::quartic::Quartic;
use crate::error::{Error, Result};
use crate::exact::mpoly::{bind, Monomial, Var};
use crate::exact::rat::{int, rat, Rat};

/// Selector for the genus-one models attached to a curve.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum ModelKind {
    /// 2-covering `y^2 = l^4 + 2a l^2 m^2 + 4b l m^3 - a^2/3 m^4`.
    CX,
    /// `y^3 = v^3 + a u^2 v + b u^3`.
    CY,
    /// `y^2 = D (a l^4 + 6b l^3 m - 2a^2 l^2 m^2 - 2ab l m^3 + (-a^3/3 - 3b^2) m^4)`.
    CXminus,
    /// `y^3 = D (v^3 + a u^2 v + b u^3)`.
    CYminus,
    /// `y^2 = x^3 - 27 D`.
    Z,
    /// `y^2 = x^3 + D`.
    XE6,
    /// `y^2 = x^3 - 27/D`.
    Zminus,
    /// `y^2 = x^3 + 1/D`.
    Zminus1Jac,
    /// `-3 y^2 = D (a l^4 + ...)`, written as `y^2 = -D/3 (...)`.
    Xminus1,
}

impl ModelKind {
    pub const ALL: [ModelKind; 9] = [
        ModelKind::CX,
        ModelKind::CY,
        ModelKind::CXminus,
        ModelKind::CYminus,
        ModelKind::Z,
        ModelKind::XE6,
        ModelKind::Zminus,
        ModelKind::Zminus1Jac,
        ModelKind::Xminus1,
    ];

    pub fn name(self) -> &'static str {
        match self {
            ModelKind::CX => "CX",
            ModelKind::CY => "CY",
            ModelKind::CXminus => "CXminus",
            ModelKind::CYminus => "CYminus",
            ModelKind::Z => "Z",
            ModelKind::XE6 => "XE6",
            ModelKind::Zminus => "Zminus",
            ModelKind::Zminus1Jac => "Zminus1_jac",
            ModelKind::Xminus1 => "Xminus1",
        }
    }
}

impl fmt::Display for ModelKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for ModelKind {
    type Err = Error;
    fn from_str(s: &str) -> Result<ModelKind> {
        ModelKind::ALL.iter().copied().find(|k| k.name().eq_ignore_ascii_case(s)).ok_or_else(|| Error::UnknownName {
            kind: "model",
            name: s.to_string(),
            known: ModelKind::ALL.map(ModelKind::name).join(", "),
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Model {
    Quartic(Quartic),
    TwistedCubic(TwistedCubic),
    Weierstrass(Curve),
}

impl Model {
    pub fn to_text(&self) -> String {
        match self {
            Model::Quartic(q) => q.to_text(),
            Model::TwistedCubic(c) => c.to_text(),
            Model::Weierstrass(e) => e.to_text(),
        }
    }

    pub fn as_quartic(&self) -> Option<&Quartic> {
        match self {
            Model::Quartic(q) => Some(q),
            _ => None,
        }
    }

    pub fn as_curve(&self) -> Option<&Curve> {
        match self {
            Model::Weierstrass(e) => Some(e),
            _ => None,
        }
    }
}

impl fmt::Display for Model {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}

/// `y^2 = l^4 + 2a l^2 m^2 + 4b l m^3 - a^2/3 m^4`.
pub fn c_x_quartic(e: &Curve) -> Quartic {
    let (a, b) = (e.a(), e.b());
    Quartic::new([int(1), int(0), int(2) * a, int(4) * b, -(a * a) * rat(1, 3)]).unwrap()
}

/// The inner quartic of `C_{X^-}` without the factor `D`.
pub fn c_x_minus_inner(e: &Curve) -> Quartic {
    let p = inner_quartic_poly().specialize(&bind(&[(Var::A, e.a().clone()), (Var::B, e.b().clone())]));
    let c: [Rat; 5] = std::array::from_fn(|i| {
        let k = 4 - i as u16;
        p.coeff(&Monomial::from_powers(&[(Var::Lambda, k), (Var::Mu, 4 - k)]))
    });
    // a = b = 0 cannot happen for a nonsingular curve
    Quartic::new(c).unwrap()
}

pub fn canonical_model(e: &Curve, which: ModelKind) -> Model {
    let d = e.discriminant();
    let weierstrass = |b: Rat| Model::Weierstrass(Curve::new(int(0), b).expect("D != 0"));
    let cubic = |c: Rat| Model::TwistedCubic(TwistedCubic::new(c, e.a().clone(), e.b().clone()).expect("D != 0"));
    match which {
        ModelKind::CX => Model::Quartic(c_x_quartic(e)),
        ModelKind::CY => cubic(int(1)),
        ModelKind::CXminus => Model::Quartic(c_x_minus_inner(e).scale(&d)),
        ModelKind::CYminus => cubic(d),
        ModelKind::Z => weierstrass(int(-27) * d),
        ModelKind::XE6 => weierstrass(d),
        ModelKind::Zminus => weierstrass(int(-27) / d),
        ModelKind::Zminus1Jac => weierstrass(d.recip()),
        ModelKind::Xminus1 => Model::Quartic(c_x_minus_inner(e).scale(&(-d * rat(1, 3)))),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn weierstrass_models() {
        let e = Curve::from_ints(-6, 8).unwrap();
        assert_eq!(canonical_model(&e, ModelKind::XE6).to_text(), "y^2 = x^3 - 13824");
        assert_eq!(canonical_model(&e, ModelKind::Z).to_text(), "y^2 = x^3 + 373248");
        assert_eq!(canonical_model(&e, ModelKind::Zminus1Jac).to_text(), "y^2 = x^3 - 1/13824");
    }

    #[test]
    fn cubic_models() {
        let e = Curve::from_ints(-6, 8).unwrap();
        assert_eq!(canonical_model(&e, ModelKind::CYminus).to_text(), "y^3 = -13824*(v^3 - 6*u^2*v + 8*u^3)");
        assert_eq!(canonical_model(&e, ModelKind::CY).to_text(), "y^3 = v^3 - 6*u^2*v + 8*u^3");
    }

    #[test]
    fn example_quartic_over_i() {
        let e = Curve::from_ints(1, 0).unwrap();
        let q = canonical_model(&e, ModelKind::CXminus);
        let want = Quartic::from_ints([-3, 0, 6, 0, 1]).unwrap().scale(&rat(64, 3));
        assert_eq!(q.as_quartic(), Some(&want));
    }

    #[test]
    fn names_round_trip() {
        for k in ModelKind::ALL {
            assert_eq!(k.name().parse::<ModelKind>().unwrap(), k);
        }
        assert!("CW".parse::<ModelKind>().is_err());
    }

    #[test]
    fn c_x_has_vanishing_i() {
        let e = Curve::from_ints(2, -3).unwrap();
        let (i, j) = c_x_quartic(&e).invariants();
        assert_eq!(i, int(0));
        assert_eq!(j, e.discriminant());
    }
}
