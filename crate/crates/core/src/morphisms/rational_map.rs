//! Maps between Weierstrass and quartic models, given by rational functions
//! and certified by exact reduction modulo the source equation.

use std::fmt;

use num_traits::Zero;

use crate::elliptic::curve::Curve;
use crate::error::{Error, Result};
use crate::exact::mpoly::{bind, poly, reduce_mod_weierstrass, Bindings, MPoly, Var};
use crate::exact::rat::{rat, Rat};
use crate::exact::ratfn::RatFn;

/// A map from a curve `y^2 = rhs(x)` given by rational functions in `x, y`.
#[derive(Clone)]
pub struct RationalMap {
    pub name: &'static str,
    /// Right-hand side of the source equation `y^2 = rhs(x)`.
    pub source_rhs: MPoly,
    /// Target equation in the output variables, `0 = relation`.
    pub target_relation: MPoly,
    /// Output variables, matched with `components`.
    pub outputs: Vec<Var>,
    pub components: Vec<RatFn>,
}

impl RationalMap {
    /// Fixes `a`, `b` and `D`.
    pub fn specialize(&self, e: &Curve) -> RationalMap {
        let bd = curve_bindings(e);
        RationalMap {
            name: self.name,
            source_rhs: self.source_rhs.specialize(&bd),
            target_relation: self.target_relation.specialize(&bd),
            outputs: self.outputs.clone(),
            components: self.components.iter().map(|c| c.specialize(&bd)).collect(),
        }
    }

    /// Target relation pulled back along the map, reduced modulo the source
    /// equation. Zero exactly when the map lands on the target.
    pub fn certificate(&self) -> MPoly {
        let subs: Vec<(Var, RatFn)> = self.outputs.iter().copied().zip(self.components.iter().cloned()).collect();
        let pulled = RatFn::compose_poly(&self.target_relation, &subs);
        reduce_mod_weierstrass(&pulled.num, &self.source_rhs)
    }

    pub fn is_certified(&self) -> bool {
        self.certificate().is_zero()
    }

    /// Image of the affine point `(x, y)`; requires the point to be on the source.
    pub fn apply(&self, x: &Rat, y: &Rat) -> Result<Vec<Rat>> {
        let bd = bind(&[(Var::X, x.clone()), (Var::Y, y.clone())]);
        if y * y != self.source_rhs.eval(&bd)? {
            return Err(Error::InvalidArgument(format!("({x}, {y}) is not on y^2 = {}", self.source_rhs)));
        }
        self.components
            .iter()
            .map(|c| {
                let den = c.den.eval(&bd)?;
                if den.is_zero() {
                    return Err(Error::Indeterminate { map: self.name.to_string(), denominator: c.den.to_string() });
                }
                Ok(c.num.eval(&bd)? / den)
            })
            .collect()
    }
}

impl fmt::Debug for RationalMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let comps: Vec<String> = self.components.iter().map(|c| c.to_string()).collect();
        write!(f, "{}: y^2 = {} -> ({})", self.name, self.source_rhs, comps.join(", "))
    }
}

fn curve_bindings(e: &Curve) -> Bindings {
    bind(&[(Var::A, e.a().clone()), (Var::B, e.b().clone()), (Var::D, e.discriminant())])
}

/// `D` written in `a, b`.
pub fn discriminant_in_ab() -> MPoly {
    poly("-16*(4*a^3 + 27*b^2)")
}

fn ratfn(num: &str, den: &str) -> RatFn {
    RatFn::new(poly(num), poly(den))
}

/// The 3-isogeny `y^2 = x^3 + D  ->  y^2 = x^3 - 27D` with `D` a free symbol.
pub fn isogeny_f_generic() -> RationalMap {
    RationalMap {
        name: "f",
        source_rhs: poly("x^3 + D"),
        target_relation: poly("y^2 - x^3 + 27*D"),
        outputs: vec![Var::X, Var::Y],
        components: vec![ratfn("x^3 + 4*D", "x^2"), ratfn("x^3*y - 8*D*y", "x^3")],
    }
}

/// The isomorphism `y^2 = x^3 - 27D  ->  C_X` (affine `mu = 1`) over `Q[a, b]`.
pub fn iso_g_generic() -> RationalMap {
    let d = discriminant_in_ab();
    let sub = |p: MPoly| p.substitute(Var::D, &d);
    RationalMap {
        name: "g",
        source_rhs: sub(poly("x^3 - 27*D")),
        target_relation: poly("y^2 - (lambda^4 + 2*a*lambda^2 + 4*b*lambda - a^2/3)"),
        outputs: vec![Var::Lambda, Var::Y],
        components: vec![
            ratfn("-y/6 - 18*b", "x + 12*a"),
            ratfn("x^3/18 + a*x^2 - y^2/36 - 6*b*y - 48*a^3 - 324*b^2", "(x + 12*a)^2"),
        ],
    }
}

pub fn isogeny_f(e: &Curve) -> RationalMap {
    isogeny_f_generic().specialize(e)
}

pub fn iso_g(e: &Curve) -> RationalMap {
    iso_g_generic().specialize(e)
}

/// `v` as printed, a function on `y^2 = x^3 + D`.
pub fn v_generic() -> RatFn {
    ratfn("-x^3*y/6 - 18*b*x^3 + 4*D*y/3", "x^4 + 12*a*x^3 + 4*D*x")
}

/// First coordinate of `g . f`, as a rational function of `(x, y)` on `y^2 = x^3 + D`.
pub fn g_after_f_first() -> RatFn {
    let f = isogeny_f_generic();
    let g = iso_g_generic();
    let d = discriminant_in_ab();
    let fx = f.components[0].clone();
    let fy = f.components[1].clone();
    with_d(&g.components[0].compose(&[(Var::X, fx), (Var::Y, fy)]), &d)
}

fn with_d(r: &RatFn, d: &MPoly) -> RatFn {
    RatFn::new(r.num.substitute(Var::D, d), r.den.substitute(Var::D, d))
}

/// Whether `v` agrees with the first coordinate of `g . f` modulo `y^2 = x^3 + D`.
pub fn v_matches_composite() -> bool {
    let d = discriminant_in_ab();
    let v = with_d(&v_generic(), &d);
    let rhs = poly("x^3 + D").substitute(Var::D, &d);
    v.equals_mod(&g_after_f_first(), &rhs)
}

/// `lambda = v / 3` at a point of `y^2 = x^3 + D`.
pub fn map6to3_direct(e: &Curve, x: &Rat, y: &Rat) -> Result<Rat> {
    let m = RationalMap {
        name: "v/3",
        source_rhs: poly("x^3 + D"),
        target_relation: MPoly::zero(),
        outputs: vec![Var::Lambda],
        components: vec![v_generic().scale(&rat(1, 3))],
    }
    .specialize(e);
    Ok(m.apply(x, y)?.remove(0))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rat::int;

    #[test]
    fn isogeny_identity() {
        // (x^3 + D)(x^3 - 8D)^2 = (x^3 + 4D)^3 - 27 D x^6
        let lhs = &poly("x^3 + D") * &poly("x^3 - 8*D").pow(2);
        let rhs = &poly("x^3 + 4*D").pow(3) - &poly("27*D*x^6");
        assert_eq!(lhs, rhs);
        assert!(isogeny_f_generic().is_certified());
    }

    #[test]
    fn g_lands_on_c_x() {
        assert!(iso_g_generic().is_certified());
        let mut broken = iso_g_generic();
        broken.components[0] = ratfn("-y/6 + 18*b", "x + 12*a");
        assert!(!broken.is_certified());
    }

    #[test]
    fn v_is_the_composite() {
        assert!(v_matches_composite());
    }

    #[test]
    fn specialized_maps() {
        let e = Curve::from_ints(-6, 8).unwrap();
        assert!(isogeny_f(&e).is_certified());
        assert!(iso_g(&e).is_certified());
        let img = isogeny_f(&e).apply(&int(40), &int(224)).unwrap();
        let z = Curve::from_ints(0, 27 * 13824).unwrap();
        assert!(z.contains(&img[0], &img[1]));
    }

    #[test]
    fn indeterminacy() {
        let e = Curve::from_ints(0, 1).unwrap();
        let err = map6to3_direct(&e, &int(12), &int(36)).unwrap_err();
        assert!(matches!(err, Error::Indeterminate { .. }));
        let e = Curve::from_ints(-6, 8).unwrap();
        assert!(map6to3_direct(&e, &int(24), &int(0)).unwrap() == rat(1, 3));
        assert!(matches!(map6to3_direct(&e, &int(1), &int(1)), Err(Error::InvalidArgument(_))));
    }
}
