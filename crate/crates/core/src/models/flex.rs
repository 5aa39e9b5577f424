//! Twisting quadrics by the inverse flex matrix over `Q[alpha]`.

use num_traits::Zero;

use super::quadrics::{QuadricSystem, MONOMIALS};
use crate::elliptic::curve::Curve;
use crate::exact::cubic_alg::CubicAlgElem;
use crate::exact::mpoly::Var;
use crate::exact::rat::{int, Rat};

/// The printed inverse flex matrix, entries in `Q[alpha]/(alpha^3 + a alpha + b)`.
#[derive(Debug, Clone)]
pub struct FlexMatrixInverse {
    pub m: [[CubicAlgElem; 3]; 3],
}

impl FlexMatrixInverse {
    pub fn new(e: &Curve) -> FlexMatrixInverse {
        let (a, b) = (e.a(), e.b());
        let d = e.discriminant();
        let d2 = &d * &d;
        let el = |c0: Rat, c1: Rat, c2: Rat| CubicAlgElem::new(c0, c1, c2, a, b);
        let zero = || CubicAlgElem::zero(a, b);
        let m = [
            [el(int(-972) * b * &d2, int(-648) * &d2 * a, int(0)), zero(), CubicAlgElem::one(a, b)],
            [el(int(-216) * a * a * &d2, int(972) * b * &d2, int(0)), zero(), CubicAlgElem::alpha(a, b)],
            [zero(), el(int(-6) * a * &d, int(0), int(-18) * &d), zero()],
        ];
        FlexMatrixInverse { m }
    }

    /// Entry in row `i`, column `j`, both from 1.
    pub fn entry(&self, i: usize, j: usize) -> &CubicAlgElem {
        &self.m[i - 1][j - 1]
    }

    /// Determinant by cofactor expansion along the first row.
    pub fn det(&self) -> CubicAlgElem {
        let m = &self.m;
        let minor =
            |r1: usize, r2: usize, c1: usize, c2: usize| &(&m[r1][c1] * &m[r2][c2]) - &(&m[r1][c2] * &m[r2][c1]);
        let t0 = &m[0][0] * &minor(1, 2, 1, 2);
        let t1 = &m[0][1] * &minor(1, 2, 0, 2);
        let t2 = &m[0][2] * &minor(1, 2, 0, 1);
        &(&t0 - &t1) + &t2
    }
}

/// Result of twisting nine quadrics: all 27 rational forms (in `X1..X6`)
/// and the dimension of their span.
#[derive(Debug, Clone)]
pub struct TwistedSpan {
    pub forms: QuadricSystem,
    pub rank: usize,
}

/// Substitutes `(x1 x2 x3; x4 x5 x6) = (X1 X2 X3; X4 X5 X6) g^{-1}` into each
/// form and splits the result along `1, alpha, alpha^2`.
pub fn twist_by_flex(e: &Curve, q: &QuadricSystem) -> TwistedSpan {
    let g = FlexMatrixInverse::new(e);
    let (a, b) = (e.a(), e.b());
    // lin[i][k]: coefficient of X_{k+1} in x_{i+1}
    let lin: Vec<Vec<CubicAlgElem>> = (0..6)
        .map(|i| {
            let (row, col) = (i / 3, i % 3);
            (0..6).map(|k| if k / 3 == row { g.m[k % 3][col].clone() } else { CubicAlgElem::zero(a, b) }).collect()
        })
        .collect();

    let mut out = Vec::with_capacity(3 * q.len());
    for form in q.rows() {
        let mut acc: Vec<CubicAlgElem> = vec![CubicAlgElem::zero(a, b); 21];
        for (c, &(i, j)) in form.iter().zip(MONOMIALS.iter()) {
            if c.is_zero() {
                continue;
            }
            for (t, &(k, l)) in MONOMIALS.iter().enumerate() {
                // coefficient of X_k X_l in x_i x_j
                let mut coeff = &lin[i][k] * &lin[j][l];
                if k != l {
                    coeff = &coeff + &(&lin[i][l] * &lin[j][k]);
                }
                if !coeff.is_zero() {
                    acc[t] = &acc[t] + &coeff.scale(c);
                }
            }
        }
        for power in 0..3 {
            out.push(acc.iter().map(|x| x.c[power].clone()).collect());
        }
    }
    let forms = QuadricSystem::from_rows(Var::P5_TWISTED, out);
    let rank = forms.rank();
    TwistedSpan { forms, rank }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::models::quadrics::{derive_quadrics, quadrics_s, ProjPoint6};

    fn e() -> Curve {
        Curve::from_ints(-6, 8).unwrap()
    }

    #[test]
    fn printed_entries() {
        let g = FlexMatrixInverse::new(&e());
        let (a, b) = (int(-6), int(8));
        assert_eq!(g.entry(1, 3), &CubicAlgElem::one(&a, &b));
        assert_eq!(g.entry(2, 3), &CubicAlgElem::alpha(&a, &b));
        assert!(g.entry(3, 1).is_zero() && g.entry(3, 3).is_zero());
        let d = int(-13824);
        assert_eq!(g.entry(3, 2), &CubicAlgElem::new(int(-6) * &a * &d, int(0), int(-18) * &d, &a, &b));
    }

    #[test]
    fn determinant_is_a_unit() {
        assert!(!FlexMatrixInverse::new(&e()).det().norm().is_zero());
    }

    #[test]
    fn twisted_span_is_the_printed_span() {
        let q = derive_quadrics(&e()).unwrap();
        let t = twist_by_flex(&e(), &q);
        assert_eq!(t.forms.len(), 27);
        assert_eq!(t.rank, 9);
        let s = quadrics_s(&e()).renamed(Var::P5_TWISTED);
        assert!(t.forms.same_span(&s));
        assert!(t.forms.vanishes_at(&ProjPoint6::from_ints([-96, 24, 1, -24, 24, 1]).unwrap()));
    }

    #[test]
    fn special_j_curves_still_give_nine() {
        for (a, b) in [(0, 1), (1, 0), (0, -2), (3, 0)] {
            let e = Curve::from_ints(a, b).unwrap();
            let t = twist_by_flex(&e, &derive_quadrics(&e).unwrap());
            assert_eq!(t.rank, 9, "({a}, {b})");
            assert!(t.forms.same_span(&quadrics_s(&e).renamed(Var::P5_TWISTED)));
        }
    }
}
