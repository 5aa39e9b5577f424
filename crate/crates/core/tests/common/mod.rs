#![allow(dead_code)]

use congruent6::elliptic::Curve;
use congruent6::exact::{rat, MPoly, Monomial, Rat, Var};
use num_traits::Zero;
use proptest::prelude::*;

pub fn small_rat() -> impl Strategy<Value = Rat> {
    (-30i64..=30, 1i64..=12).prop_map(|(n, d)| rat(n, d))
}

pub fn nonzero_rat() -> impl Strategy<Value = Rat> {
    small_rat().prop_filter("nonzero", |r| !r.is_zero())
}

pub fn curve() -> impl Strategy<Value = Curve> {
    (-25i64..=25, -25i64..=25).prop_filter_map("singular", |(a, b)| Curve::from_ints(a, b).ok())
}

/// Projective parameter with small integer coordinates.
pub fn pair(h: i64) -> impl Strategy<Value = (Rat, Rat)> {
    (-h..=h, -h..=h).prop_filter("(0 : 0)", |(s, t)| *s != 0 || *t != 0).prop_map(|(s, t)| (rat(s, 1), rat(t, 1)))
}

/// Sparse polynomial in `vars` with small coefficients and degree <= `deg` per variable.
pub fn mpoly(vars: &'static [Var], deg: u16) -> impl Strategy<Value = MPoly> {
    proptest::collection::vec((small_rat(), proptest::collection::vec(0..=deg, vars.len())), 0..6).prop_map(
        move |terms| {
            terms.into_iter().fold(MPoly::zero(), |acc, (c, exps)| {
                let powers: Vec<(Var, u16)> = vars.iter().copied().zip(exps).collect();
                &acc + &MPoly::monomial(c, Monomial::from_powers(&powers))
            })
        },
    )
}
