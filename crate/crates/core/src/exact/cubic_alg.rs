//! The quotient ring `Q[alpha] / (alpha^3 + a alpha + b)`.
//!
//! This is only a field when the cubic is irreducible, so no division is
//! provided. Norms are computed from the multiplication matrix.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use super::linalg::QMatrix;
use super::rat::{fmt_rat, Rat};
use crate::error::{Error, Result};

#[derive(Clone, PartialEq, Eq)]
pub struct CubicAlgElem {
    /// Coordinates on the basis `1, alpha, alpha^2`.
    pub c: [Rat; 3],
    a: Rat,
    b: Rat,
}

impl CubicAlgElem {
    pub fn new(c0: Rat, c1: Rat, c2: Rat, a: &Rat, b: &Rat) -> Self {
        CubicAlgElem { c: [c0, c1, c2], a: a.clone(), b: b.clone() }
    }

    pub fn from_rat(x: Rat, a: &Rat, b: &Rat) -> Self {
        Self::new(x, Rat::zero(), Rat::zero(), a, b)
    }

    pub fn zero(a: &Rat, b: &Rat) -> Self {
        Self::from_rat(Rat::zero(), a, b)
    }

    pub fn one(a: &Rat, b: &Rat) -> Self {
        Self::from_rat(Rat::one(), a, b)
    }

    pub fn alpha(a: &Rat, b: &Rat) -> Self {
        Self::new(Rat::zero(), Rat::one(), Rat::zero(), a, b)
    }

    pub fn context(&self) -> (&Rat, &Rat) {
        (&self.a, &self.b)
    }

    pub fn is_zero(&self) -> bool {
        self.c.iter().all(Zero::is_zero)
    }

    fn same_context(&self, other: &Self) -> Result<()> {
        if self.a == other.a && self.b == other.b {
            Ok(())
        } else {
            Err(Error::ContextMismatch(
                format!("{}, {}", fmt_rat(&self.a), fmt_rat(&self.b)),
                format!("{}, {}", fmt_rat(&other.a), fmt_rat(&other.b)),
            ))
        }
    }

    pub fn try_add(&self, other: &Self) -> Result<Self> {
        self.same_context(other)?;
        Ok(self.add_unchecked(other))
    }

    pub fn try_mul(&self, other: &Self) -> Result<Self> {
        self.same_context(other)?;
        Ok(self.mul_unchecked(other))
    }

    fn add_unchecked(&self, other: &Self) -> Self {
        let c = [&self.c[0] + &other.c[0], &self.c[1] + &other.c[1], &self.c[2] + &other.c[2]];
        CubicAlgElem { c, a: self.a.clone(), b: self.b.clone() }
    }

    fn mul_unchecked(&self, other: &Self) -> Self {
        let [x0, x1, x2] = &self.c;
        let [y0, y1, y2] = &other.c;
        // Schoolbook product, then alpha^3 = -a alpha - b and alpha^4 = -a alpha^2 - b alpha.
        let d0 = x0 * y0;
        let d1 = x0 * y1 + x1 * y0;
        let d2 = x0 * y2 + x1 * y1 + x2 * y0;
        let d3 = x1 * y2 + x2 * y1;
        let d4 = x2 * y2;
        let (a, b) = (&self.a, &self.b);
        let c0 = d0 - &d3 * b;
        let c1 = d1 - &d3 * a - &d4 * b;
        let c2 = d2 - &d4 * a;
        CubicAlgElem { c: [c0, c1, c2], a: a.clone(), b: b.clone() }
    }

    pub fn scale(&self, k: &Rat) -> Self {
        CubicAlgElem { c: [&self.c[0] * k, &self.c[1] * k, &self.c[2] * k], a: self.a.clone(), b: self.b.clone() }
    }

    /// Matrix of multiplication by `self` on the basis `1, alpha, alpha^2`
    /// (column j is `self * alpha^j`).
    pub fn mult_matrix(&self) -> QMatrix {
        let mut m = QMatrix::zeros(3, 3);
        let mut basis = Self::one(&self.a, &self.b);
        let alpha = Self::alpha(&self.a, &self.b);
        for j in 0..3 {
            let col = self.mul_unchecked(&basis);
            for i in 0..3 {
                m[(i, j)] = col.c[i].clone();
            }
            basis = basis.mul_unchecked(&alpha);
        }
        m
    }

    /// Norm to Q: the determinant of multiplication by `self`.
    pub fn norm(&self) -> Rat {
        self.mult_matrix().det()
    }
}

impl Add for &CubicAlgElem {
    type Output = CubicAlgElem;
    fn add(self, rhs: &CubicAlgElem) -> CubicAlgElem {
        self.try_add(rhs).expect("cubic algebra context mismatch")
    }
}

impl Sub for &CubicAlgElem {
    type Output = CubicAlgElem;
    fn sub(self, rhs: &CubicAlgElem) -> CubicAlgElem {
        self + &(-rhs)
    }
}

impl Mul for &CubicAlgElem {
    type Output = CubicAlgElem;
    fn mul(self, rhs: &CubicAlgElem) -> CubicAlgElem {
        self.try_mul(rhs).expect("cubic algebra context mismatch")
    }
}

impl Neg for &CubicAlgElem {
    type Output = CubicAlgElem;
    fn neg(self) -> CubicAlgElem {
        self.scale(&-Rat::one())
    }
}

impl fmt::Display for CubicAlgElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} + ({})*alpha + ({})*alpha^2", fmt_rat(&self.c[0]), fmt_rat(&self.c[1]), fmt_rat(&self.c[2]))
    }
}

impl fmt::Debug for CubicAlgElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::linalg::resultant;
    use crate::exact::rat::int;

    fn ctx() -> (Rat, Rat) {
        (int(-6), int(8))
    }

    #[test]
    fn defining_relation() {
        let (a, b) = ctx();
        let al = CubicAlgElem::alpha(&a, &b);
        let al2 = &al * &al;
        // alpha * alpha^2 = -a alpha - b
        assert_eq!(&al * &al2, CubicAlgElem::new(-b.clone(), -a.clone(), int(0), &a, &b));
    }

    #[test]
    fn difference_of_squares() {
        let (a, b) = ctx();
        let one = CubicAlgElem::one(&a, &b);
        let al = CubicAlgElem::alpha(&a, &b);
        let lhs = &(&one + &al) * &(&one - &al);
        assert_eq!(lhs, CubicAlgElem::new(int(1), int(0), int(-1), &a, &b));
    }

    #[test]
    fn alpha_fourth() {
        let (a, b) = ctx();
        let al = CubicAlgElem::alpha(&a, &b);
        let al2 = &al * &al;
        assert_eq!(&al2 * &al2, CubicAlgElem::new(int(0), int(-8), int(6), &a, &b));
    }

    #[test]
    fn context_mismatch() {
        let x = CubicAlgElem::one(&int(1), &int(1));
        let y = CubicAlgElem::one(&int(1), &int(2));
        assert!(matches!(x.try_mul(&y), Err(Error::ContextMismatch(..))));
    }

    #[test]
    fn norm_is_resultant() {
        // N(c0 + c1 alpha + c2 alpha^2) = Res(alpha^3 + a alpha + b, c2 x^2 + c1 x + c0)
        let (a, b) = ctx();
        let e = CubicAlgElem::new(int(3), int(-1), int(2), &a, &b);
        let res = resultant(&[int(1), int(0), a.clone(), b.clone()], &[int(2), int(-1), int(3)]);
        assert_eq!(e.norm(), res);
        assert_eq!(CubicAlgElem::alpha(&a, &b).norm(), -b);
    }
}
