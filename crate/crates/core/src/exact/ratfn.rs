use std::fmt;

use num_traits::Zero;

use super::mpoly::{reduce_mod_weierstrass, Bindings, MPoly, Var};
use super::rat::Rat;
use crate::error::{Error, Result};

/// A quotient `num / den` of polynomials. Not reduced; equality is decided by
/// cross-multiplication, optionally modulo a Weierstrass relation.
#[derive(Clone, PartialEq, Eq)]
pub struct RatFn {
    pub num: MPoly,
    pub den: MPoly,
}

impl RatFn {
    pub fn new(num: MPoly, den: MPoly) -> Self {
        assert!(!den.is_zero(), "zero denominator");
        RatFn { num, den }
    }

    pub fn poly(p: MPoly) -> Self {
        RatFn { num: p, den: MPoly::one() }
    }

    pub fn eval(&self, b: &Bindings) -> Result<Rat> {
        let d = self.den.eval(b)?;
        if d.is_zero() {
            return Err(Error::Indeterminate { map: "rational function".into(), denominator: self.den.to_string() });
        }
        Ok(self.num.eval(b)? / d)
    }

    pub fn specialize(&self, b: &Bindings) -> RatFn {
        RatFn::new(self.num.specialize(b), self.den.specialize(b))
    }

    /// Substitutes rational functions for variables of a polynomial and
    /// returns the result over a common denominator.
    pub fn compose_poly(p: &MPoly, subs: &[(Var, RatFn)]) -> RatFn {
        let maxdeg: Vec<u16> = subs.iter().map(|(v, _)| p.degree_in(*v)).collect();
        let mut num = MPoly::zero();
        for (m, c) in p.terms() {
            let mut rest = m.clone();
            let mut t = MPoly::one();
            for ((v, f), &top) in subs.iter().zip(&maxdeg) {
                let e = m.exp(*v);
                rest = rest.with_exp(*v, 0);
                t = &t * &(&f.num.pow(e as u32) * &f.den.pow((top - e) as u32));
            }
            num += &(&MPoly::monomial(c.clone(), rest) * &t);
        }
        let den = subs.iter().zip(&maxdeg).fold(MPoly::one(), |acc, ((_, f), &top)| &acc * &f.den.pow(top as u32));
        RatFn::new(num, den)
    }

    pub fn compose(&self, subs: &[(Var, RatFn)]) -> RatFn {
        let n = Self::compose_poly(&self.num, subs);
        let d = Self::compose_poly(&self.den, subs);
        RatFn::new(&n.num * &d.den, &n.den * &d.num)
    }

    /// `self == other` as rational functions modulo `y^2 = rhs`.
    pub fn equals_mod(&self, other: &RatFn, rhs: &MPoly) -> bool {
        let cross = &(&self.num * &other.den) - &(&other.num * &self.den);
        reduce_mod_weierstrass(&cross, rhs).is_zero()
    }

    pub fn scale(&self, c: &Rat) -> RatFn {
        RatFn::new(self.num.scale(c), self.den.clone())
    }
}

impl fmt::Display for RatFn {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den == MPoly::one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({}) / ({})", self.num, self.den)
        }
    }
}

impl fmt::Debug for RatFn {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}
