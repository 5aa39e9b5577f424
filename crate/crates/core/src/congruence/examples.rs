//! Explicit rational points on `X_E^-(6)` for one-parameter families of `E`.

use num_traits::Zero;

use crate::elliptic::curve::Curve;
use crate::error::{Error, Result};
use crate::exact::mpoly::{bind, poly, Var};
use crate::exact::rat::{rat, Rat};
use crate::models::ProjPoint6;

/// `E = (-8t^2/27, 64t^3/729)` with the point
/// `(-2^9 t^4/2187, 2^6 t^3/243, 2t/9, -2^6 t^3/243, 2^5 t^2/27, 1)`.
pub fn example49_point(t: &Rat) -> Result<(Curve, ProjPoint6)> {
    if t.is_zero() {
        return Err(Error::DegenerateParameter("t = 0 gives a singular curve".into()));
    }
    let (t2, t3) = (t * t, t * t * t);
    let t4 = &t2 * &t2;
    let e = Curve::new(-(&t2 * rat(8, 27)), &t3 * rat(64, 729))?;
    let p = ProjPoint6::new([
        -(&t4 * rat(512, 2187)),
        &t3 * rat(64, 243),
        t * rat(2, 9),
        -(&t3 * rat(64, 243)),
        &t2 * rat(32, 27),
        Rat::from_integer(1.into()),
    ])?;
    Ok((e, p))
}

const T_NUM: &str = "-27/8*(u - v)^3*(u + v)^3";
const T_DEN: &str = "(u^2 - u*v + v^2)^2*(u^2 - u*v - v^2/2)";

// Coordinates as (power of t, polynomial in u, v). The fourth is the negated
// second one, printed with the label of the second.
const COORDS: [(u32, &str); 6] = [
    (3, "2/3*u^7 - 7/2*u^6*v + 15/2*u^5*v^2 - 26/3*u^4*v^3 + 11/2*u^3*v^4 - 3/2*u^2*v^5 - 1/3*u*v^6"),
    (2, "3/4*(-u^7 + u^6*v + 4*u^5*v^2 - 2*u^4*v^3 - 5*u^3*v^4 + u^2*v^5 + 2*u*v^6)"),
    (1, "3/16*(u^7 + u^6*v - 3*u^5*v^2 - 3*u^4*v^3 + 3*u^3*v^4 + 3*u^2*v^5 - u*v^6 - v^7)"),
    (2, "-3/4*(-u^7 + u^6*v + 4*u^5*v^2 - 2*u^4*v^3 - 5*u^3*v^4 + u^2*v^5 + 2*u*v^6)"),
    (2, "u^7 - 7/2*u^6*v + 7/2*u^5*v^2 - 7/2*u^3*v^4 + 7/2*u^2*v^5 - u*v^6"),
    (1, "1/8*(-2*u^7 + 3*u^6*v + u^5*v^2 - 5*u^4*v^3 + 4*u^3*v^4 + u^2*v^5 - 3*u*v^6 + v^7)"),
];

/// The parameter `t(u : v)` of `E_t: y^2 = x^3 + t x + t`.
pub fn example410_t(u: &Rat, v: &Rat) -> Result<Rat> {
    let bd = bind(&[(Var::U, u.clone()), (Var::V, v.clone())]);
    let den = poly(T_DEN).eval(&bd)?;
    if den.is_zero() {
        return Err(Error::DegenerateParameter(format!("t has a pole at ({u} : {v})")));
    }
    Ok(poly(T_NUM).eval(&bd)? / den)
}

/// `E_t` for `t = t(u : v)`, with a rational point on its `X_E^-(6)`.
pub fn example410_point(u: &Rat, v: &Rat) -> Result<(Curve, ProjPoint6)> {
    let t = example410_t(u, v)?;
    let e = Curve::new(t.clone(), t.clone())
        .map_err(|_| Error::DegenerateParameter(format!("({u} : {v}) gives t = {t}, a singular curve")))?;
    let bd = bind(&[(Var::U, u.clone()), (Var::V, v.clone())]);
    let mut x: [Rat; 6] = Default::default();
    for (xi, (k, f)) in x.iter_mut().zip(COORDS) {
        *xi = num_traits::pow(t.clone(), k as usize) * poly(f).eval(&bd)?;
    }
    let p = ProjPoint6::new(x).map_err(|_| Error::DegenerateParameter(format!("({u} : {v}) gives the zero vector")))?;
    Ok((e, p))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rat::int;
    use crate::models::quadrics_s;
    use crate::morphisms::map6to3_reverse;

    #[test]
    fn headline_point() {
        let (e, p) = example49_point(&rat(9, 2)).unwrap();
        assert_eq!(e, Curve::from_ints(-6, 8).unwrap());
        assert_eq!(p, ProjPoint6::from_ints([-96, 24, 1, -24, 24, 1]).unwrap());
        assert!(quadrics_s(&e).vanishes_at(&p));
    }

    #[test]
    fn image_on_x_minus_3() {
        for t in [rat(9, 2), rat(-1, 5), int(7)] {
            let (_, p) = example49_point(&t).unwrap();
            assert_eq!(map6to3_reverse(&p).unwrap(), (&t * rat(2, 27), int(1)));
        }
        assert!(example49_point(&int(0)).is_err());
    }

    #[test]
    fn t_of_two_one_is_singular() {
        assert_eq!(example410_t(&int(2), &int(1)).unwrap(), rat(-27, 4));
        assert!(matches!(example410_point(&int(2), &int(1)), Err(Error::DegenerateParameter(_))));
    }

    #[test]
    fn family_points_lie_on_quadrics() {
        for (u, v) in [(3, 1), (1, 3), (5, -2), (7, 4)] {
            let (e, p) = example410_point(&int(u), &int(v)).unwrap();
            assert!(quadrics_s(&e).vanishes_at(&p), "({u} : {v})");
        }
    }

    #[test]
    fn poles_and_zeros_of_t() {
        assert!(example410_point(&int(1), &int(1)).is_err());
        assert!(example410_point(&int(1), &int(-1)).is_err());
        assert!(example410_t(&int(0), &int(0)).is_err());
    }
}
