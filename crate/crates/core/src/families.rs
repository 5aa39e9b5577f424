//! Explicit families of curves 2-congruent and 3-congruent to a given curve.
//!
//! Formulas are kept as symbolic polynomials over `a, b` and the family
//! parameters so that the discriminant identities can be checked exactly;
//! individual members are obtained by evaluating them.

use std::fmt;
use std::sync::OnceLock;

use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::elliptic::curve::{discriminant_of, Curve};
use crate::error::{Error, Result};
use crate::exact::mpoly::{bind, poly, Bindings, MPoly, Var};
use crate::exact::rat::{fmt_rat, int, Rat};

/// Which of the two mod-3 families.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Variant {
    Direct,
    Reverse,
}

/// How the last monomial of the reverse quartic coefficient is read. The
/// homogeneous reading `-3 c4^2 mu^4` is the one in use; the literal
/// `-3 c4^2 mu^2` is kept so the trace oracle can be run against it.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum C4StarReading {
    Homogeneous,
    Literal,
}

/// A point `(s : t)` of P^1, i.e. not both zero.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FamilyPoint {
    pub s: Rat,
    pub t: Rat,
}

impl FamilyPoint {
    pub fn new(s: Rat, t: Rat) -> Result<FamilyPoint> {
        if s.is_zero() && t.is_zero() {
            return Err(Error::DegenerateParameter("(0 : 0) is not a point of P^1".into()));
        }
        Ok(FamilyPoint { s, t })
    }
}

impl fmt::Display for FamilyPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({} : {})", fmt_rat(&self.s), fmt_rat(&self.t))
    }
}

struct Formulas {
    f2_a: MPoly,
    f2_b: MPoly,
    c4: MPoly,
    c6: MPoly,
    c4_star_num: MPoly,
    c4_star_literal_num: MPoly,
    c4_cube_minus_c6_square: MPoly,
}

fn formulas() -> &'static Formulas {
    static F: OnceLock<Formulas> = OnceLock::new();
    F.get_or_init(|| {
        let f2_a = poly("3*(3*a*v^2 + 9*b*u*v - a^2*u^2)");
        let f2_b = poly("27*b*v^3 - 18*a^2*u*v^2 - 27*a*b*u^2*v - (2*a^3 + 27*b^2)*u^3");

        // Written over c4 (stand-in `u`) and c6 (stand-in `v`), then
        // specialised to c4 = -a/27, c6 = -b/54.
        let c4 = poly("u*lambda^4 + 4*v*lambda^3*mu + 6*u^2*lambda^2*mu^2 + 4*u*v*lambda*mu^3 - (3*u^3 - 4*v^2)*mu^4");
        let c6 = poly(
            "v*lambda^6 + 6*u^2*lambda^5*mu + 15*u*v*lambda^4*mu^2 + 20*v^2*lambda^3*mu^3 \
             + 15*u^2*v*lambda^2*mu^4 + 6*(3*u^4 - 2*u*v^2)*lambda*mu^5 + (9*u^3*v - 8*v^3)*mu^6",
        );
        let star = poly("-4*(lambda^4 - 6*u*lambda^2*mu^2 - 8*v*lambda*mu^3 - 3*u^2*mu^4)");
        let star_literal = poly("-4*(lambda^4 - 6*u*lambda^2*mu^2 - 8*v*lambda*mu^3 - 3*u^2*mu^2)");
        let d = poly("u^3 - v^2");
        let sub = |p: &MPoly| p.substitute_all(&[(Var::U, poly("-a/27")), (Var::V, poly("-b/54"))]);
        Formulas {
            f2_a,
            f2_b,
            c4: sub(&c4),
            c6: sub(&c6),
            c4_star_num: sub(&star),
            c4_star_literal_num: sub(&star_literal),
            c4_cube_minus_c6_square: sub(&d),
        }
    })
}

/// `(A, B)` of the 2-congruent family as polynomials in `a, b, u, v`.
pub fn family2_symbolic() -> (MPoly, MPoly) {
    let f = formulas();
    (f.f2_a.clone(), f.f2_b.clone())
}

/// Direct `(c4(l,m), c6(l,m))` as polynomials in `a, b, lambda, mu`.
pub fn frak_symbolic() -> (MPoly, MPoly) {
    let f = formulas();
    (f.c4.clone(), f.c6.clone())
}

/// `c4^3 - c6^2` with `c4 = -a/27`, `c6 = -b/54`, as a polynomial in `a, b`.
pub fn c4_cube_minus_c6_square() -> MPoly {
    formulas().c4_cube_minus_c6_square.clone()
}

/// `-16 (4A^3 + 27B^2)` for symbolic `A, B`.
pub fn discriminant_poly(a: &MPoly, b: &MPoly) -> MPoly {
    let four_a3 = a.pow(3).scale(&int(4));
    let b2 = b.pow(2).scale(&int(27));
    (&four_a3 + &b2).scale(&int(-16))
}

fn curve_bindings(e: &Curve) -> Bindings {
    bind(&[(Var::A, e.a().clone()), (Var::B, e.b().clone())])
}

fn member(e: &Curve, a: Rat, b: Rat, what: impl Fn() -> String) -> Result<Curve> {
    if discriminant_of(&a, &b).is_zero() {
        return Err(Error::DegenerateFiber(format!(
            "{} gives y^2 = x^3 + ({})x + ({}) with zero discriminant (base {})",
            what(),
            fmt_rat(&a),
            fmt_rat(&b),
            e.to_text()
        )));
    }
    Curve::new(a, b)
}

/// The member `F_{u,v}` of the 2-congruent family.
pub fn family2(e: &Curve, u: &Rat, v: &Rat) -> Result<Curve> {
    FamilyPoint::new(u.clone(), v.clone())?;
    let f = formulas();
    let mut bd = curve_bindings(e);
    bd.insert(Var::U, u.clone());
    bd.insert(Var::V, v.clone());
    let a = f.f2_a.eval(&bd)?;
    let b = f.f2_b.eval(&bd)?;
    member(e, a, b, || format!("(u : v) = ({} : {})", fmt_rat(u), fmt_rat(v)))
}

/// The pair `(c4(l,m), c6(l,m))` or its reverse counterpart.
pub fn frak_coeffs(e: &Curve, l: &Rat, m: &Rat, variant: Variant) -> Result<(Rat, Rat)> {
    frak_coeffs_read(e, l, m, variant, C4StarReading::Homogeneous)
}

pub fn frak_coeffs_read(e: &Curve, l: &Rat, m: &Rat, variant: Variant, reading: C4StarReading) -> Result<(Rat, Rat)> {
    let f = formulas();
    let mut bd = curve_bindings(e);
    bd.insert(Var::Lambda, l.clone());
    bd.insert(Var::Mu, m.clone());
    let c4 = f.c4.eval(&bd)?;
    let c6 = f.c6.eval(&bd)?;
    match variant {
        Variant::Direct => Ok((c4, c6)),
        Variant::Reverse => {
            let d = f.c4_cube_minus_c6_square.eval(&bd)?;
            let num = match reading {
                C4StarReading::Homogeneous => &f.c4_star_num,
                C4StarReading::Literal => &f.c4_star_literal_num,
            };
            let c4s = num.eval(&bd)? / &d;
            let c6s = int(-8) * c6 / (&d * &d);
            Ok((c4s, c6s))
        }
    }
}

/// `y^2 = x^3 - 27 c4 x - 54 c6` for the chosen variant.
pub fn family3(e: &Curve, l: &Rat, m: &Rat, variant: Variant) -> Result<Curve> {
    family3_read(e, l, m, variant, C4StarReading::Homogeneous)
}

pub fn family3_read(e: &Curve, l: &Rat, m: &Rat, variant: Variant, reading: C4StarReading) -> Result<Curve> {
    FamilyPoint::new(l.clone(), m.clone())?;
    let (c4, c6) = frak_coeffs_read(e, l, m, variant, reading)?;
    member(e, int(-27) * c4, int(-54) * c6, || {
        format!("{variant:?} (lambda : mu) = ({} : {})", fmt_rat(l), fmt_rat(m)).to_lowercase()
    })
}

/// Outcome of the symbolic discriminant checks.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DiscIdentityReport {
    /// `disc(F_{u,v}) - 3^6 (v^3 + a u^2 v + b u^3)^2 disc(E)` is zero.
    pub family2_identity: bool,
    /// `disc(E_{l,m}) - disc(E) (l^4 + ...)^3` is zero.
    pub cube_identity: bool,
    /// Perturbing a coefficient makes both checks fail.
    pub mutation_detected: bool,
}

impl DiscIdentityReport {
    pub fn passed(&self) -> bool {
        self.family2_identity && self.cube_identity && self.mutation_detected
    }
}

/// Left minus right of the family-2 discriminant identity, in `Q[a,b,u,v]`.
pub fn family2_disc_defect(a_poly: &MPoly, b_poly: &MPoly) -> MPoly {
    let lhs = discriminant_poly(a_poly, b_poly);
    let cubic = poly("v^3 + a*u^2*v + b*u^3");
    let disc_e = discriminant_poly(&poly("a"), &poly("b"));
    let rhs = &(&cubic * &cubic).scale(&int(729)) * &disc_e;
    &lhs - &rhs
}

/// Left minus right of the cube identity, in `Q[a,b,lambda,mu]`.
pub fn cube_disc_defect(c4: &MPoly, c6: &MPoly) -> MPoly {
    let lhs = discriminant_poly(&c4.scale(&int(-27)), &c6.scale(&int(-54)));
    let quartic = poly("lambda^4 + 2*a/9*lambda^2*mu^2 + 4*b/27*lambda*mu^3 - a^2/243*mu^4");
    let disc_e = discriminant_poly(&poly("a"), &poly("b"));
    let rhs = &quartic.pow(3) * &disc_e;
    &lhs - &rhs
}

pub fn disc_identity_suite() -> DiscIdentityReport {
    let (a2, b2) = family2_symbolic();
    let (c4, c6) = frak_symbolic();
    let family2_identity = family2_disc_defect(&a2, &b2).is_zero();
    let cube_identity = cube_disc_defect(&c4, &c6).is_zero();
    let bumped_b2 = &b2 + &poly("u^3");
    let bumped_c6 = &c6 + &poly("mu^6");
    let mutation_detected =
        !family2_disc_defect(&a2, &bumped_b2).is_zero() && !cube_disc_defect(&c4, &bumped_c6).is_zero();
    DiscIdentityReport { family2_identity, cube_identity, mutation_detected }
}

/// A one-parameter family of curves congruent to a base curve, selectable by name.
pub trait CurveFamily: Send + Sync {
    fn name(&self) -> &'static str;
    /// `n` such that members are (directly or reversely) n-congruent to the base.
    fn modulus(&self) -> u32;
    fn describe(&self) -> &'static str;
    fn member(&self, e: &Curve, point: &FamilyPoint) -> Result<Curve>;
}

struct TwoCongruent;
struct ThreeCongruent(Variant);

impl CurveFamily for TwoCongruent {
    fn name(&self) -> &'static str {
        "2"
    }
    fn modulus(&self) -> u32 {
        2
    }
    fn describe(&self) -> &'static str {
        "F_{u,v}, parameter (u : v)"
    }
    fn member(&self, e: &Curve, pt: &FamilyPoint) -> Result<Curve> {
        family2(e, &pt.s, &pt.t)
    }
}

impl CurveFamily for ThreeCongruent {
    fn name(&self) -> &'static str {
        match self.0 {
            Variant::Direct => "3d",
            Variant::Reverse => "3r",
        }
    }
    fn modulus(&self) -> u32 {
        3
    }
    fn describe(&self) -> &'static str {
        match self.0 {
            Variant::Direct => "directly 3-congruent E_{lambda,mu}, parameter (lambda : mu)",
            Variant::Reverse => "reverse 3-congruent E'_{lambda,mu}, parameter (lambda : mu)",
        }
    }
    fn member(&self, e: &Curve, pt: &FamilyPoint) -> Result<Curve> {
        family3(e, &pt.s, &pt.t, self.0)
    }
}

pub fn registry() -> Vec<Box<dyn CurveFamily>> {
    vec![Box::new(TwoCongruent), Box::new(ThreeCongruent(Variant::Direct)), Box::new(ThreeCongruent(Variant::Reverse))]
}

pub fn family_by_name(name: &str) -> Result<Box<dyn CurveFamily>> {
    let all = registry();
    let known = all.iter().map(|f| f.name()).collect::<Vec<_>>().join(", ");
    all.into_iter().find(|f| f.name() == name).ok_or(Error::UnknownName {
        kind: "family",
        name: name.to_string(),
        known,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rat::rat;

    fn e() -> Curve {
        Curve::from_ints(-6, 8).unwrap()
    }

    #[test]
    fn family2_at_zero_one() {
        let f = family2(&e(), &int(0), &int(1)).unwrap();
        assert_eq!(f, Curve::from_ints(-54, 216).unwrap());
        assert_eq!(f.twist_factor(&Curve::from_ints(-216, 1728).unwrap()), Some(int(2)));
        assert!(!f.is_q_isomorphic(&Curve::from_ints(-216, 1728).unwrap()));
    }

    #[test]
    fn family2_degenerate_fiber() {
        // v^3 - u^2 v vanishes at (1 : 1)
        let e = Curve::from_ints(-1, 0).unwrap();
        assert!(matches!(family2(&e, &int(1), &int(1)), Err(Error::DegenerateFiber(_))));
        assert!(matches!(family2(&e, &int(0), &int(0)), Err(Error::DegenerateParameter(_))));
    }

    #[test]
    fn leading_terms_at_infinity() {
        let (c4, c6) = frak_coeffs(&e(), &int(1), &int(0), Variant::Direct).unwrap();
        assert_eq!(c4, rat(6, 27));
        assert_eq!(c6, rat(-8, 54));
        assert_eq!(family3(&e(), &int(1), &int(0), Variant::Direct).unwrap(), e());
    }

    #[test]
    fn c4_c6_relation() {
        let want = poly("-16*(4*a^3 + 27*b^2)").scale(&rat(1, 1259712));
        assert_eq!(c4_cube_minus_c6_square(), want);
    }

    #[test]
    fn reverse_fiber_has_j_minus_1728() {
        let f = family3(&e(), &rat(1, 3), &int(1), Variant::Reverse).unwrap();
        assert_eq!(f, Curve::new(rat(-2187, 2), int(19683)).unwrap());
        assert_eq!(f.j_invariant(), int(-1728));
        assert_eq!(f.q_isomorphism(&Curve::from_ints(-216, 1728).unwrap()), Some(rat(2, 3)));
    }

    #[test]
    fn identities_hold() {
        let r = disc_identity_suite();
        assert!(r.family2_identity);
        assert!(r.cube_identity);
        assert!(r.mutation_detected);
    }

    #[test]
    fn registry_lookup() {
        assert_eq!(family_by_name("3r").unwrap().modulus(), 3);
        assert!(matches!(family_by_name("5"), Err(Error::UnknownName { .. })));
        let pt = FamilyPoint::new(int(0), int(1)).unwrap();
        assert_eq!(family_by_name("2").unwrap().member(&e(), &pt).unwrap(), Curve::from_ints(-54, 216).unwrap());
    }
}
