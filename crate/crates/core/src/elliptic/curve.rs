use std::fmt;

use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exact::mpoly::{MPoly, Var};
use crate::exact::rat::{fmt_rat, int, rat_nth_root, serde_rat, Rat};

/// `y^2 = x^3 + a x + b` over Q with nonzero discriminant.
#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "RawCurve")]
pub struct Curve {
    #[serde(with = "serde_rat")]
    a: Rat,
    #[serde(with = "serde_rat")]
    b: Rat,
}

#[derive(Deserialize)]
struct RawCurve {
    #[serde(with = "serde_rat")]
    a: Rat,
    #[serde(with = "serde_rat")]
    b: Rat,
}

impl TryFrom<RawCurve> for Curve {
    type Error = Error;
    fn try_from(r: RawCurve) -> Result<Curve> {
        Curve::new(r.a, r.b)
    }
}

/// `-16 (4a^3 + 27b^2)`.
pub fn discriminant_of(a: &Rat, b: &Rat) -> Rat {
    int(-16) * (int(4) * a * a * a + int(27) * b * b)
}

impl Curve {
    pub fn new(a: Rat, b: Rat) -> Result<Curve> {
        if discriminant_of(&a, &b).is_zero() {
            return Err(Error::Singular { a: fmt_rat(&a), b: fmt_rat(&b) });
        }
        Ok(Curve { a, b })
    }

    pub fn from_ints(a: i64, b: i64) -> Result<Curve> {
        Curve::new(int(a), int(b))
    }

    pub fn a(&self) -> &Rat {
        &self.a
    }

    pub fn b(&self) -> &Rat {
        &self.b
    }

    pub fn discriminant(&self) -> Rat {
        discriminant_of(&self.a, &self.b)
    }

    /// `(-48a)^3 / D`, which is `1728 * 4a^3 / (4a^3 + 27b^2)`.
    pub fn j_invariant(&self) -> Rat {
        let t = int(-48) * &self.a;
        &t * &t * &t / self.discriminant()
    }

    /// The quadratic twist `y^2 = x^3 + d^2 a x + d^3 b`.
    pub fn twist(&self, d: &Rat) -> Result<Curve> {
        if d.is_zero() {
            return Err(Error::InvalidArgument("twist by zero".into()));
        }
        Curve::new(d * d * &self.a, d * d * d * &self.b)
    }

    /// `u` with `other = (u^4 a, u^6 b)`, if the curves are isomorphic over Q.
    /// The returned `u` is positive; `-u` works as well.
    pub fn q_isomorphism(&self, other: &Curve) -> Option<Rat> {
        if self.a.is_zero() != other.a.is_zero() || self.b.is_zero() != other.b.is_zero() {
            return None;
        }
        let u = if self.a.is_zero() {
            rat_nth_root(&(&other.b / &self.b), 6)?
        } else if self.b.is_zero() {
            rat_nth_root(&(&other.a / &self.a), 4)?
        } else {
            // u^2 = (b'/b) / (a'/a)
            let u2 = (&other.b / &self.b) / (&other.a / &self.a);
            rat_nth_root(&u2, 2)?
        };
        let u2 = &u * &u;
        let u4 = &u2 * &u2;
        (other.a == &u4 * &self.a && other.b == &u4 * &u2 * &self.b).then_some(u)
    }

    pub fn is_q_isomorphic(&self, other: &Curve) -> bool {
        self.q_isomorphism(other).is_some()
    }

    /// `d` with `other = (d^2 a, d^3 b)` when the curves are quadratic twists
    /// of each other (including `d` a square, i.e. isomorphic).
    pub fn twist_factor(&self, other: &Curve) -> Option<Rat> {
        if self.a.is_zero() != other.a.is_zero() || self.b.is_zero() != other.b.is_zero() {
            return None;
        }
        let candidates: Vec<Rat> = if self.a.is_zero() {
            rat_nth_root(&(&other.b / &self.b), 3).into_iter().collect()
        } else if self.b.is_zero() {
            rat_nth_root(&(&other.a / &self.a), 2).map(|d| vec![d.clone(), -d]).unwrap_or_default()
        } else {
            vec![(&other.b / &self.b) / (&other.a / &self.a)]
        };
        candidates.into_iter().find(|d| other.a == d * d * &self.a && other.b == d * d * d * &self.b)
    }

    /// Right-hand side `x^3 + a x + b` as a polynomial in `x`.
    pub fn rhs(&self) -> MPoly {
        &(&MPoly::var(Var::X).pow(3) + &MPoly::var(Var::X).scale(&self.a)) + &MPoly::constant(self.b.clone())
    }

    pub fn contains(&self, x: &Rat, y: &Rat) -> bool {
        y * y == x * x * x + &self.a * x + &self.b
    }

    /// Affine points with integral `x` in `range` and rational (hence integral) `y >= 0`.
    pub fn integral_points(&self, range: std::ops::RangeInclusive<i64>) -> Vec<(Rat, Rat)> {
        range
            .filter_map(|x| {
                let x = int(x);
                let r = &x * &x * &x + &self.a * &x + &self.b;
                if r.is_negative() {
                    return None;
                }
                rat_nth_root(&r, 2).map(|y| (x, y))
            })
            .collect()
    }

    /// Text form, e.g. `y^2 = x^3 - 6*x + 8`.
    pub fn to_text(&self) -> String {
        let mut s = String::from("y^2 = x^3");
        push_term(&mut s, &self.a, "x");
        push_term(&mut s, &self.b, "");
        s
    }
}

pub(crate) fn push_term(s: &mut String, c: &Rat, var: &str) {
    if c.is_zero() {
        return;
    }
    s.push_str(if c.is_negative() { " - " } else { " + " });
    let abs = c.abs();
    if var.is_empty() {
        s.push_str(&fmt_rat(&abs));
    } else if abs.is_one() {
        s.push_str(var);
    } else {
        s.push_str(&format!("{}*{var}", fmt_rat(&abs)));
    }
}

impl fmt::Display for Curve {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}

impl fmt::Debug for Curve {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Curve({}, {})", fmt_rat(&self.a), fmt_rat(&self.b))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rat::rat;

    #[test]
    fn discriminants() {
        assert_eq!(Curve::from_ints(-6, 8).unwrap().discriminant(), int(-13824));
        assert_eq!(Curve::from_ints(1, 0).unwrap().discriminant(), int(-64));
        assert!(matches!(Curve::from_ints(0, 0), Err(Error::Singular { .. })));
        assert!(Curve::from_ints(-3, 2).is_err());
    }

    #[test]
    fn j_invariants() {
        assert_eq!(Curve::from_ints(-6, 8).unwrap().j_invariant(), int(-1728));
        assert_eq!(Curve::from_ints(-216, 1728).unwrap().j_invariant(), int(-1728));
        assert_eq!(Curve::from_ints(0, 1).unwrap().j_invariant(), int(0));
        assert_eq!(Curve::from_ints(1, 0).unwrap().j_invariant(), int(1728));
    }

    #[test]
    fn isomorphism_classes() {
        let e = Curve::from_ints(1, 1).unwrap();
        assert_eq!(e.q_isomorphism(&e), Some(int(1)));
        assert_eq!(e.q_isomorphism(&Curve::from_ints(16, 64).unwrap()), Some(int(2)));

        let f = Curve::from_ints(-54, 216).unwrap();
        let g = Curve::from_ints(-216, 1728).unwrap();
        assert_eq!(f.q_isomorphism(&g), None);
        assert_eq!(f.twist_factor(&g), Some(int(2)));

        // j = 0 and j = 1728 go through the surviving coefficient
        let j0 = Curve::from_ints(0, 2).unwrap();
        assert_eq!(j0.q_isomorphism(&Curve::from_ints(0, 128).unwrap()), Some(int(2)));
        assert_eq!(j0.q_isomorphism(&Curve::from_ints(0, 16).unwrap()), None);
        let j1728 = Curve::from_ints(3, 0).unwrap();
        assert_eq!(j1728.q_isomorphism(&Curve::new(rat(3, 16), int(0)).unwrap()), Some(rat(1, 2)));
    }

    #[test]
    fn text_form() {
        assert_eq!(Curve::from_ints(0, -13824).unwrap().to_text(), "y^2 = x^3 - 13824");
        assert_eq!(Curve::from_ints(-6, 8).unwrap().to_text(), "y^2 = x^3 - 6*x + 8");
        assert_eq!(Curve::new(int(1), rat(1, 2)).unwrap().to_text(), "y^2 = x^3 + x + 1/2");
    }

    #[test]
    fn serde_rejects_singular() {
        let ok: Curve = serde_json::from_str(r#"{"a":"-8/27","b":"64/729"}"#).unwrap();
        assert_eq!(ok.a(), &rat(-8, 27));
        assert!(serde_json::from_str::<Curve>(r#"{"a":"0","b":"0"}"#).is_err());
        assert_eq!(serde_json::to_string(&ok).unwrap(), r#"{"a":"-8/27","b":"64/729"}"#);
    }

    #[test]
    fn finds_points() {
        let e = Curve::from_ints(0, -13824).unwrap();
        let pts = e.integral_points(0..=50);
        assert!(pts.contains(&(int(24), int(0))));
        assert!(pts.contains(&(int(40), int(224))));
        assert!(pts.iter().all(|(x, y)| e.contains(x, y)));
    }
}
