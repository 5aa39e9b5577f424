use crate::elliptic::curve::Curve;
use crate::error::{Error, Result};
use crate::exact::rat::Rat;
use crate::models::ProjPoint6;

use super::points::{map6to3_reverse, map_to_cxminus, minors_chi2, plane_triple};
use super::rational_map::{iso_g, isogeny_f, map6to3_direct};

/// A map evaluated on a point given by its coordinates.
pub trait PointMap: Send + Sync {
    fn name(&self) -> &'static str;
    fn describe(&self) -> &'static str;
    /// Number of input coordinates.
    fn arity(&self) -> usize;
    fn apply(&self, e: &Curve, point: &[Rat]) -> Result<Vec<Rat>>;
}

fn check_arity(m: &dyn PointMap, point: &[Rat]) -> Result<()> {
    if point.len() != m.arity() {
        return Err(Error::InvalidArgument(format!(
            "map `{}` takes {} coordinates, got {}",
            m.name(),
            m.arity(),
            point.len()
        )));
    }
    Ok(())
}

fn proj(point: &[Rat]) -> Result<ProjPoint6> {
    ProjPoint6::new(std::array::from_fn(|i| point[i].clone()))
}

struct Isogeny;
struct ToQuartic;
struct SixToThree;
struct Minors;
struct Reverse;
struct ToCXMinus;
struct PlaneModel;

impl PointMap for Isogeny {
    fn name(&self) -> &'static str {
        "f"
    }
    fn describe(&self) -> &'static str {
        "3-isogeny y^2 = x^3 + D -> y^2 = x^3 - 27D, input (x, y)"
    }
    fn arity(&self) -> usize {
        2
    }
    fn apply(&self, e: &Curve, p: &[Rat]) -> Result<Vec<Rat>> {
        check_arity(self, p)?;
        isogeny_f(e).apply(&p[0], &p[1])
    }
}

impl PointMap for ToQuartic {
    fn name(&self) -> &'static str {
        "g"
    }
    fn describe(&self) -> &'static str {
        "y^2 = x^3 - 27D -> C_X (chart mu = 1), input (x, y)"
    }
    fn arity(&self) -> usize {
        2
    }
    fn apply(&self, e: &Curve, p: &[Rat]) -> Result<Vec<Rat>> {
        check_arity(self, p)?;
        iso_g(e).apply(&p[0], &p[1])
    }
}

impl PointMap for SixToThree {
    fn name(&self) -> &'static str {
        "6to3"
    }
    fn describe(&self) -> &'static str {
        "X_E(6) -> X_E(3), lambda = v/3, input (x, y) on y^2 = x^3 + D"
    }
    fn arity(&self) -> usize {
        2
    }
    fn apply(&self, e: &Curve, p: &[Rat]) -> Result<Vec<Rat>> {
        check_arity(self, p)?;
        Ok(vec![map6to3_direct(e, &p[0], &p[1])?])
    }
}

impl PointMap for Minors {
    fn name(&self) -> &'static str {
        "minors"
    }
    fn describe(&self) -> &'static str {
        "X_E^-(6) -> C_Y^-, (u : v : y) from 2x2 minors, input x1..x6"
    }
    fn arity(&self) -> usize {
        6
    }
    fn apply(&self, _e: &Curve, p: &[Rat]) -> Result<Vec<Rat>> {
        check_arity(self, p)?;
        Ok(minors_chi2(&proj(p)?)?.to_vec())
    }
}

impl PointMap for Reverse {
    fn name(&self) -> &'static str {
        "6to3r"
    }
    fn describe(&self) -> &'static str {
        "X_E^-(6) -> X_E^-(3), (x3/3 : x6), input x1..x6"
    }
    fn arity(&self) -> usize {
        6
    }
    fn apply(&self, _e: &Curve, p: &[Rat]) -> Result<Vec<Rat>> {
        check_arity(self, p)?;
        let (l, m) = map6to3_reverse(&proj(p)?)?;
        Ok(vec![l, m])
    }
}

impl PointMap for ToCXMinus {
    fn name(&self) -> &'static str {
        "cxminus"
    }
    fn describe(&self) -> &'static str {
        "X_E^-(6) -> C_X^-, (x3, (x2x4 - x1x5)/2) with x6 = 1, input x1..x6"
    }
    fn arity(&self) -> usize {
        6
    }
    fn apply(&self, _e: &Curve, p: &[Rat]) -> Result<Vec<Rat>> {
        check_arity(self, p)?;
        let (l, y) = map_to_cxminus(&proj(p)?)?;
        Ok(vec![l, y])
    }
}

impl PointMap for PlaneModel {
    fn name(&self) -> &'static str {
        "plane"
    }
    fn describe(&self) -> &'static str {
        "X_E^-(6) -> {f = g = 0}, (x3, (x2x4 - x1x5)/2, x5) with x6 = 1, input x1..x6"
    }
    fn arity(&self) -> usize {
        6
    }
    fn apply(&self, _e: &Curve, p: &[Rat]) -> Result<Vec<Rat>> {
        check_arity(self, p)?;
        Ok(plane_triple(&proj(p)?)?.to_vec())
    }
}

pub fn point_maps() -> Vec<Box<dyn PointMap>> {
    vec![
        Box::new(Isogeny),
        Box::new(ToQuartic),
        Box::new(SixToThree),
        Box::new(Minors),
        Box::new(Reverse),
        Box::new(ToCXMinus),
        Box::new(PlaneModel),
    ]
}

pub fn point_map_by_name(name: &str) -> Result<Box<dyn PointMap>> {
    let all = point_maps();
    let known = all.iter().map(|m| m.name()).collect::<Vec<_>>().join(", ");
    all.into_iter().find(|m| m.name() == name).ok_or(Error::UnknownName { kind: "map", name: name.to_string(), known })
}
