//! Maps out of the nine-quadric model `X_E^-(6)` in P^5, evaluated on points.

use num_traits::Zero;

use crate::elliptic::curve::Curve;
use crate::error::{Error, Result};
use crate::exact::mpoly::{bind, poly, MPoly, Var};
use crate::exact::rat::{int, rat, Rat};
use crate::families::{family2, family3, Variant};
use crate::models::ProjPoint6;

/// `(u : v : y)` from the 2x2 minors of `(x1 x2 x3; x4 x5 x6)`. Lands on
/// `y^3 = D (v^3 + a u^2 v + b u^3)`.
pub fn minors_chi2(p: &ProjPoint6) -> Result<[Rat; 3]> {
    let x = |i| p.x(i);
    let u = x(2) * x(6) - x(3) * x(5);
    let v = x(3) * x(4) - x(1) * x(6);
    let y = x(1) * x(5) - x(2) * x(4);
    if u.is_zero() && v.is_zero() && y.is_zero() {
        return Err(Error::DegeneratePoint(format!("all minors vanish at {p}")));
    }
    Ok([u, v, y])
}

pub fn on_c_y_minus(e: &Curve, uvy: &[Rat; 3]) -> bool {
    let [u, v, y] = uvy;
    let f = v * v * v + e.a() * u * u * v + e.b() * u * u * u;
    y * y * y == e.discriminant() * f
}

/// `(x3/3 : x6)`, the parameter of the reverse family.
pub fn map6to3_reverse(p: &ProjPoint6) -> Result<(Rat, Rat)> {
    let (l, m) = (p.x(3) * rat(1, 3), p.x(6).clone());
    if l.is_zero() && m.is_zero() {
        return Err(Error::Indeterminate { map: "reverse 6 -> 3".into(), denominator: "x3 = x6 = 0".into() });
    }
    Ok((l, m))
}

fn chart(p: &ProjPoint6, map: &str) -> Result<ProjPoint6> {
    p.normalized()
        .filter(|q| q.x(6) == &int(1))
        .ok_or_else(|| Error::Indeterminate { map: map.into(), denominator: "x6".into() })
}

/// `(l, y) = (x3, (x2 x4 - x1 x5)/2)` in the chart `x6 = 1`, a point of `C_{X^-}`.
pub fn map_to_cxminus(p: &ProjPoint6) -> Result<(Rat, Rat)> {
    let q = chart(p, "to C_X^-")?;
    let x = |i| q.x(i);
    Ok((x(3).clone(), (x(2) * x(4) - x(1) * x(5)) * rat(1, 2)))
}

/// `(x, y, z) = (x3, (x2 x4 - x1 x5)/2, x5)` in the chart `x6 = 1`.
pub fn plane_triple(p: &ProjPoint6) -> Result<[Rat; 3]> {
    let (l, y) = map_to_cxminus(p)?;
    let q = chart(p, "plane model")?;
    Ok([l, y, q.x(5).clone()])
}

/// Affine model of `X_E^-(6)` as the intersection `f = g = 0` in `(x, y, z)`:
/// a cubic in `z` over the double cover `g = 0`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BirationalModel {
    pub f: MPoly,
    pub g: MPoly,
}

impl BirationalModel {
    pub fn new(e: &Curve) -> BirationalModel {
        let d = e.discriminant();
        let bd = bind(&[(Var::A, e.a().clone()), (Var::B, e.b().clone()), (Var::D, d.clone())]);
        let f0 = poly("z^3 - (36*a*x^2 + 12*a^2)*z + 216*b*x^3 - 144*a^2*x^2 - 216*a*b*x - (16*a^3 + 216*b^2)");
        let f1 = poly("y*(64*a*b*x + 96*b^2)");
        let f = &f0.specialize(&bd) + &f1.specialize(&bd).scale(&(int(27) / &d));
        let g = poly("y^2 - D*(a*x^4 + 6*b*x^3 - 2*a^2*x^2 - 2*a*b*x + (-a^3/3 - 3*b^2))").specialize(&bd);
        BirationalModel { f, g }
    }

    pub fn eval(&self, xyz: &[Rat; 3]) -> Result<(Rat, Rat)> {
        let bd = bind(&[(Var::X, xyz[0].clone()), (Var::Y, xyz[1].clone()), (Var::Z, xyz[2].clone())]);
        Ok((self.f.eval(&bd)?, self.g.eval(&bd)?))
    }

    pub fn contains(&self, xyz: &[Rat; 3]) -> bool {
        matches!(self.eval(xyz), Ok((f, g)) if f.is_zero() && g.is_zero())
    }
}

/// The fiber of the 2-family over `chi_2^-(P)` and the reverse 3-family over
/// `(x3/3 : x6)` have the same j-invariant.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct JCompatibility {
    pub j_mod2: Rat,
    pub j_mod3: Rat,
}

impl JCompatibility {
    pub fn agrees(&self) -> bool {
        self.j_mod2 == self.j_mod3
    }
}

pub fn j_compatibility(e: &Curve, p: &ProjPoint6) -> Result<JCompatibility> {
    let [u, v, _] = minors_chi2(p)?;
    let (l, m) = map6to3_reverse(p)?;
    let f2 = family2(e, &u, &v)?;
    let f3 = family3(e, &l, &m, Variant::Reverse)?;
    Ok(JCompatibility { j_mod2: f2.j_invariant(), j_mod3: f3.j_invariant() })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::models::quadrics_s;

    fn e() -> Curve {
        Curve::from_ints(-6, 8).unwrap()
    }

    fn p() -> ProjPoint6 {
        ProjPoint6::from_ints([-96, 24, 1, -24, 24, 1]).unwrap()
    }

    #[test]
    fn minors_land_on_c_y_minus() {
        assert!(quadrics_s(&e()).vanishes_at(&p()));
        let m = minors_chi2(&p()).unwrap();
        assert_eq!(m, [int(0), int(72), int(-1728)]);
        assert!(on_c_y_minus(&e(), &m));
    }

    #[test]
    fn rank_one_matrix_is_degenerate() {
        let q = ProjPoint6::from_ints([1, 2, 3, 2, 4, 6]).unwrap();
        assert!(matches!(minors_chi2(&q), Err(Error::DegeneratePoint(_))));
    }

    #[test]
    fn quartic_image() {
        assert_eq!(map_to_cxminus(&p()).unwrap(), (int(1), int(864)));
        let scaled = p().scaled(&int(-5));
        assert_eq!(map_to_cxminus(&scaled).unwrap(), (int(1), int(864)));
        let at_infinity = p().with(6, int(0)).unwrap();
        assert!(matches!(map_to_cxminus(&at_infinity), Err(Error::Indeterminate { .. })));
    }

    #[test]
    fn plane_model_contains_image() {
        let m = BirationalModel::new(&e());
        let t = plane_triple(&p()).unwrap();
        assert_eq!(t, [int(1), int(864), int(24)]);
        assert!(m.contains(&t));
        assert!(!m.contains(&[int(1), int(864), int(23)]));
    }

    #[test]
    fn reverse_parameter() {
        assert_eq!(map6to3_reverse(&p()).unwrap(), (rat(1, 3), int(1)));
    }

    #[test]
    fn both_families_agree_on_j() {
        let r = j_compatibility(&e(), &p()).unwrap();
        assert!(r.agrees(), "{r:?}");
    }
}
