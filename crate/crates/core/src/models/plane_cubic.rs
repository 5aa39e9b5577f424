use std::fmt;

use num_traits::Zero;
use serde::Serialize;

use crate::elliptic::curve::{push_term, Curve};
use crate::elliptic::finite_field::{ap, good_primes, PowerTable};
use crate::error::{Error, Result};
use crate::exact::rat::{fmt_rat, int, mul_mod, rat_mod, Rat};

/// The plane cubic `y^3 = c (v^3 + a u^2 v + b u^3)` in P^2 with coordinates `(u : v : y)`.
#[derive(Clone, PartialEq, Eq)]
pub struct TwistedCubic {
    c: Rat,
    a: Rat,
    b: Rat,
}

impl TwistedCubic {
    pub fn new(c: Rat, a: Rat, b: Rat) -> Result<TwistedCubic> {
        if c.is_zero() {
            return Err(Error::InvalidArgument("cubic scaled by zero".into()));
        }
        Ok(TwistedCubic { c, a, b })
    }

    pub fn c(&self) -> &Rat {
        &self.c
    }

    /// Smooth iff the binary cubic has distinct roots.
    pub fn is_smooth(&self) -> bool {
        !crate::elliptic::curve::discriminant_of(&self.a, &self.b).is_zero()
    }

    /// Projective points over F_p. Every `(u : v)` contributes its cube roots
    /// of `c f(u, v)`; there are no points with `u = v = 0`.
    pub fn point_count(&self, p: u64) -> Option<u64> {
        let c = rat_mod(&self.c, p)?;
        let a = rat_mod(&self.a, p)?;
        let b = rat_mod(&self.b, p)?;
        let cubes = PowerTable::cubes(p);
        let f = |u: u64, v: u64| {
            let v3 = mul_mod(mul_mod(v, v, p), v, p);
            let u2v = mul_mod(mul_mod(u, u, p), v, p);
            let u3 = mul_mod(mul_mod(u, u, p), u, p);
            mul_mod(c, (v3 + mul_mod(a, u2v, p) + mul_mod(b, u3, p)) % p, p)
        };
        // (1 : v) for all v, then (0 : 1)
        let n = (0..p).map(|v| cubes.count(f(1, v))).sum::<u64>() + cubes.count(f(0, 1));
        Some(n)
    }

    pub fn to_text(&self) -> String {
        let mut inner = String::from("v^3");
        push_term(&mut inner, &self.a, "u^2*v");
        push_term(&mut inner, &self.b, "u^3");
        if self.c == int(1) {
            format!("y^3 = {inner}")
        } else {
            format!("y^3 = {}*({inner})", fmt_rat(&self.c))
        }
    }
}

impl fmt::Display for TwistedCubic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}

impl fmt::Debug for TwistedCubic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CountRow {
    pub p: u64,
    pub cubic: u64,
    pub jacobian: u64,
}

/// Point counts of a plane cubic against a claimed Jacobian at good primes.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CountComparison {
    pub cubic: String,
    pub jacobian: String,
    pub rows: Vec<CountRow>,
    pub skipped: Vec<u64>,
}

impl CountComparison {
    pub fn all_equal(&self) -> bool {
        !self.rows.is_empty() && self.rows.iter().all(|r| r.cubic == r.jacobian)
    }
}

pub fn compare_counts(cubic: &TwistedCubic, jac: &Curve, base: &Curve, bound: u64) -> CountComparison {
    let good = good_primes(&[base.clone(), jac.clone()], bound);
    let mut rows = Vec::new();
    let mut skipped = Vec::new();
    for p in crate::elliptic::finite_field::primes_up_to(bound) {
        if !good.contains(&p) {
            skipped.push(p);
            continue;
        }
        match (cubic.point_count(p), ap(jac, p)) {
            (Some(n), Ok(r)) => rows.push(CountRow { p, cubic: n, jacobian: r.count }),
            _ => skipped.push(p),
        }
    }
    CountComparison { cubic: cubic.to_text(), jacobian: jac.to_text(), rows, skipped }
}

/// Counts of `C_Y` against `y^2 = x^3 + D` and of `C_{Y^-}` against `y^2 = x^3 + 1/D`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct JacobianConsistency {
    pub c_y: CountComparison,
    pub c_y_minus: CountComparison,
}

impl JacobianConsistency {
    pub fn passed(&self) -> bool {
        self.c_y.all_equal() && self.c_y_minus.all_equal()
    }
}

pub fn jacobian_consistency(e: &Curve, bound: u64) -> JacobianConsistency {
    let d = e.discriminant();
    let cy = TwistedCubic::new(int(1), e.a().clone(), e.b().clone()).unwrap();
    let cym = TwistedCubic::new(d.clone(), e.a().clone(), e.b().clone()).unwrap();
    let xe6 = Curve::new(int(0), d.clone()).unwrap();
    let zm1 = Curve::new(int(0), d.recip()).unwrap();
    JacobianConsistency { c_y: compare_counts(&cy, &xe6, e, bound), c_y_minus: compare_counts(&cym, &zm1, e, bound) }
}
