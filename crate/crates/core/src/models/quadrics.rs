//! Quadratic forms in six variables, the printed nine-quadric model and its
//! recomputation from the binary quartic `U`.

use std::fmt;

use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::elliptic::curve::Curve;
use crate::error::{Error, Result};
use crate::exact::linalg::QMatrix;
use crate::exact::mpoly::{bind, poly, reduce_mod_weierstrass, MPoly, Monomial, Var};
use crate::exact::rat::{fmt_rat, int, rat, serde_rat_vec, Rat};

/// Index pairs `(i, j)`, `i <= j`, of the 21 degree-2 monomials in six variables.
pub const MONOMIALS: [(usize, usize); 21] = {
    let mut out = [(0, 0); 21];
    let mut k = 0;
    let mut i = 0;
    while i < 6 {
        let mut j = i;
        while j < 6 {
            out[k] = (i, j);
            k += 1;
            j += 1;
        }
        i += 1;
    }
    out
};

fn monomial(vars: &[Var; 6], (i, j): (usize, usize)) -> Monomial {
    if i == j {
        Monomial::from_powers(&[(vars[i], 2)])
    } else {
        Monomial::from_powers(&[(vars[i], 1), (vars[j], 1)])
    }
}

/// A point of P^5.
#[derive(Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ProjPoint6 {
    #[serde(with = "serde_rat_vec")]
    x: Vec<Rat>,
}

impl ProjPoint6 {
    pub fn new(x: [Rat; 6]) -> Result<ProjPoint6> {
        if x.iter().all(Zero::is_zero) {
            return Err(Error::DegeneratePoint("all six coordinates vanish".into()));
        }
        Ok(ProjPoint6 { x: x.to_vec() })
    }

    pub fn from_ints(x: [i64; 6]) -> Result<ProjPoint6> {
        ProjPoint6::new(x.map(int))
    }

    pub fn coords(&self) -> &[Rat] {
        &self.x
    }

    /// `x_i` with `i` counted from 1.
    pub fn x(&self, i: usize) -> &Rat {
        &self.x[i - 1]
    }

    pub fn scaled(&self, k: &Rat) -> ProjPoint6 {
        assert!(!k.is_zero());
        ProjPoint6 { x: self.x.iter().map(|c| c * k).collect() }
    }

    /// Copy with `x_i` (from 1) replaced.
    pub fn with(&self, i: usize, v: Rat) -> Result<ProjPoint6> {
        let mut x = self.x.clone();
        x[i - 1] = v;
        ProjPoint6::new(x.try_into().unwrap())
    }

    /// Scaled so that `x6 = 1`, when `x6 != 0`.
    pub fn normalized(&self) -> Option<ProjPoint6> {
        (!self.x[5].is_zero()).then(|| self.scaled(&self.x[5].recip()))
    }
}

impl fmt::Display for ProjPoint6 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cs: Vec<String> = self.x.iter().map(fmt_rat).collect();
        write!(f, "({})", cs.join(" : "))
    }
}

impl fmt::Debug for ProjPoint6 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Quadratic forms stored as coefficient rows over [`MONOMIALS`].
#[derive(Clone, PartialEq, Eq)]
pub struct QuadricSystem {
    vars: [Var; 6],
    forms: Vec<Vec<Rat>>,
}

impl QuadricSystem {
    pub fn from_rows(vars: [Var; 6], forms: Vec<Vec<Rat>>) -> QuadricSystem {
        assert!(forms.iter().all(|f| f.len() == 21));
        QuadricSystem { vars, forms }
    }

    /// Reads off coefficients; fails if a form is not a quadratic form in `vars`.
    pub fn from_mpolys(vars: [Var; 6], polys: &[MPoly]) -> Result<QuadricSystem> {
        let mut forms = Vec::new();
        for p in polys {
            let row: Vec<Rat> = MONOMIALS.iter().map(|&ij| p.coeff(&monomial(&vars, ij))).collect();
            let used = row.iter().filter(|c| !c.is_zero()).count();
            if used != p.nterms() {
                return Err(Error::InvalidArgument(format!("not a quadratic form in x1..x6: {p}")));
            }
            forms.push(row);
        }
        Ok(QuadricSystem { vars, forms })
    }

    pub fn vars(&self) -> &[Var; 6] {
        &self.vars
    }

    pub fn len(&self) -> usize {
        self.forms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.forms.is_empty()
    }

    pub fn rows(&self) -> &[Vec<Rat>] {
        &self.forms
    }

    pub fn form(&self, k: usize) -> MPoly {
        let mut p = MPoly::zero();
        for (c, &ij) in self.forms[k].iter().zip(MONOMIALS.iter()) {
            if !c.is_zero() {
                p += &MPoly::monomial(c.clone(), monomial(&self.vars, ij));
            }
        }
        p
    }

    pub fn forms(&self) -> Vec<MPoly> {
        (0..self.len()).map(|k| self.form(k)).collect()
    }

    pub fn matrix(&self) -> QMatrix {
        QMatrix::from_rows(self.forms.clone(), 21)
    }

    pub fn rank(&self) -> usize {
        self.matrix().rank()
    }

    /// The same forms read in other variables.
    pub fn renamed(&self, vars: [Var; 6]) -> QuadricSystem {
        QuadricSystem { vars, forms: self.forms.clone() }
    }

    /// Reduced echelon basis of the span.
    pub fn echelon(&self) -> QuadricSystem {
        let (_, basis) = self.matrix().rowspace();
        QuadricSystem { vars: self.vars, forms: basis.rows().map(<[Rat]>::to_vec).collect() }
    }

    /// Whether the two systems span the same space (variables matched by position).
    pub fn same_span(&self, other: &QuadricSystem) -> bool {
        self.matrix().same_rowspace(&other.matrix())
    }

    /// Rank of the union of both systems.
    pub fn joint_rank(&self, other: &QuadricSystem) -> usize {
        self.matrix().vstack(&other.matrix()).rank()
    }

    pub fn eval_form(&self, k: usize, p: &ProjPoint6) -> Rat {
        let x = p.coords();
        self.forms[k]
            .iter()
            .zip(MONOMIALS.iter())
            .filter(|(c, _)| !c.is_zero())
            .fold(Rat::zero(), |acc, (c, &(i, j))| acc + c * &x[i] * &x[j])
    }

    pub fn eval(&self, p: &ProjPoint6) -> Vec<Rat> {
        (0..self.len()).map(|k| self.eval_form(k, p)).collect()
    }

    pub fn vanishes_at(&self, p: &ProjPoint6) -> bool {
        (0..self.len()).all(|k| self.eval_form(k, p).is_zero())
    }

    /// Whether every form vanishes after substituting `x_i = scale_i * A_i`
    /// and reducing modulo `y^2 = U`.
    pub fn vanishes_on(&self, a23: &A23, scale: &[Rat; 6]) -> bool {
        let subs: Vec<(Var, MPoly)> = (0..6).map(|i| (self.vars[i], a23.entries[i].scale(&scale[i]))).collect();
        self.forms().iter().all(|f| reduce_mod_weierstrass(&f.substitute_all(&subs), &a23.u).is_zero())
    }

    pub fn to_text(&self) -> String {
        self.forms().iter().map(|f| f.to_string()).collect::<Vec<_>>().join("\n")
    }
}

impl fmt::Debug for QuadricSystem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}

const S_FORMS: [&str; 9] = [
    "-6*x1*x5 + 24*a*x1*x6 - 6*x2^2 + 24*a*x2*x3 - 6*x2*x4 + 24*a*x3*x4 + 72*b*x4*x6 + 2*a*x5^2 + 8*a^2*x5*x6 + D*x6^2",
    "-6*x1*x3 + x2*x5 + 2*a*x2*x6 - 36*b*x3^2 + 2*a*x3*x5 + 16*a^2*x3*x6 + x4*x5 + 2*a*x4*x6 + 12*a*b*x6^2",
    "12*a*x1*x3 + 18*b*x1*x6 + 18*b*x3*x4 - 2*a*x4*x5 - 4*a^2*x4*x6 + 3*b*x5^2",
    "-12*a*x2*x3 - 18*b*x2*x6 - 18*b*x3*x5 - 3*x4^2 - a*x5^2 + 4*a^2*x5*x6",
    "3*x2^2 - 48*a^2*x3^2 - 144*a*b*x3*x6 - 36*b*x4*x6 + a*x5^2 - 8*a^2*x5*x6 + 16*a^3*x6^2",
    "-3*x1*x4 + 18*b*x2*x3 - a*x2*x5 - 4*a^2*x2*x6 - 4*a^2*x3*x5 - 6*a*b*x5*x6",
    "-108*b*x1*x3 + 6*a*x2^2 - 24*a^2*x2*x3 + 18*b*x2*x5 - 36*a*b*x4*x6 - 2*a^2*x5^2 - 8*a^3*x5*x6 - a*D*x6^2",
    "3*x1*x2 - 72*a*b*x3^2 - 216*b^2*x3*x6 + a*x4*x5 + 8*a^2*x4*x6 - 12*a*b*x5*x6 + 24*a^2*b*x6^2",
    "36*x1^2 + 12*a*x2^2 + 12*a*x4^2 + 4*a^2*x5^2 + D*x5*x6",
];

// Subscripts dropped in print (`x_1x5` in q2, `x3^2` in q3) are restored.
const Q_FORMS: [&str; 9] = [
    "-x1*x4 + 8*a*D^3*x2*x5 - 3*D^5*x3*x6 + 12*b*D^3*x5^2",
    "x1*x5 + 72*b*D*x2^2 + x2*x4 - 32*a^2*D*x2*x5 + 24*a*D^3*x3*x6 - 24*a*b*D*x5^2 + 36*b*D^3*x6^2",
    "-72*b*D*x1*x5 - 72*b*D*x2*x4 - 576*a^2*D^4*x3^2 - 1728*a*b*D^4*x3*x6 - x4^2 + 32*a^2*D*x4*x5 - 8*a*D^3*x5^2 - 1296*b^2*D^4*x6^2",
    "-24*D*a*x2*x3 - 36*b*D*x2*x6 - 36*b*D*x3*x5 + x4*x6 + 8*a^2*D*x5*x6",
    "-3*x1^2 + 9*D^5*x3^2 - a*x4^2 - D^2*x4*x5 + 3*a*D^5*x6^2",
    "24*a*D*x2^2 + 72*b*D*x2*x5 + 18*D^3*x3^2 - x4*x5 - 8*a^2*D*x5^2 + 6*a*D^3*x6^2",
    "x1*x6 + 72*b*D*x2*x3 - 16*a^2*D*x2*x6 + x3*x4 - 16*a^2*D*x3*x5 - 24*a*b*D*x5*x6",
    "-3*x1*x2 + 36*D^3*a*x3^2 + 108*b*D^3*x3*x6 - a*x4*x5 + D^2*x5^2/2 - 12*a^2*D^3*x6^2",
    "-3*x1*x3 - a*x4*x6 + D^2*x5*x6/2",
];

fn specialize_forms(e: &Curve, src: &[&str]) -> QuadricSystem {
    let bd = bind(&[(Var::A, e.a().clone()), (Var::B, e.b().clone()), (Var::D, e.discriminant())]);
    let polys: Vec<MPoly> = src.iter().map(|s| poly(s).specialize(&bd)).collect();
    QuadricSystem::from_mpolys(Var::P5, &polys).expect("printed forms are quadratic")
}

/// The nine printed quadrics `s1..s9` defining the reverse 6-congruence curve.
pub fn quadrics_s(e: &Curve) -> QuadricSystem {
    specialize_forms(e, &S_FORMS)
}

/// The printed intermediate quadrics `q1..q9`. They vanish on the image of
/// `A` only after the coordinate scaling [`printed_q_scaling`].
pub fn printed_q(e: &Curve) -> QuadricSystem {
    specialize_forms(e, &Q_FORMS)
}

/// Diagonal coordinate scaling under which the printed `q` forms vanish on
/// the `A` image: `x_i = d_i A_i`.
pub fn printed_q_scaling() -> [Rat; 6] {
    [int(1), int(9), int(27), int(1), int(9), int(27)]
}

/// `C_{X^-}` inner quartic `a l^4 + 6b l^3 m - 2a^2 l^2 m^2 - 2ab l m^3 + (-a^3/3 - 3b^2) m^4`.
pub fn inner_quartic_poly() -> MPoly {
    poly("a*lambda^4 + 6*b*lambda^3*mu - 2*a^2*lambda^2*mu^2 - 2*a*b*lambda*mu^3 + (-a^3/3 - 3*b^2)*mu^4")
}

/// The matrix `A_{2,3}` with the quartic `U` and its Hessian `H` it is built from.
#[derive(Debug, Clone)]
pub struct A23 {
    pub u: MPoly,
    pub h: MPoly,
    /// Row-major: `-9 H_mu, -3 U_mu, lambda y, 9 H_lambda, 3 U_lambda, mu y`.
    pub entries: [MPoly; 6],
}

pub fn build_a23(e: &Curve) -> A23 {
    let bd = bind(&[(Var::A, e.a().clone()), (Var::B, e.b().clone())]);
    let u = inner_quartic_poly().specialize(&bd).scale(&(int(-3) * e.discriminant()));
    let (l, m) = (Var::Lambda, Var::Mu);
    let ull = u.derivative(l).derivative(l);
    let umm = u.derivative(m).derivative(m);
    let ulm = u.derivative(l).derivative(m);
    let h = (&(&ull * &umm) - &(&ulm * &ulm)).scale(&rat(1, 3));
    let y = MPoly::var(Var::Y);
    let entries = [
        h.derivative(m).scale(&int(-9)),
        u.derivative(m).scale(&int(-3)),
        &MPoly::var(l) * &y,
        h.derivative(l).scale(&int(9)),
        u.derivative(l).scale(&int(3)),
        &MPoly::var(m) * &y,
    ];
    A23 { u, h, entries }
}

/// Kernel of the map from quadratic forms in `x1..x6` to functions on the
/// image of `A`, i.e. all quadrics through that image. Exactly nine are expected.
pub fn derive_quadrics(e: &Curve) -> Result<QuadricSystem> {
    let a23 = build_a23(e);
    let products: Vec<MPoly> =
        MONOMIALS.iter().map(|&(i, j)| reduce_mod_weierstrass(&(&a23.entries[i] * &a23.entries[j]), &a23.u)).collect();
    let mut support: Vec<Monomial> = products.iter().flat_map(|p| p.terms().map(|(m, _)| m.clone())).collect();
    support.sort();
    support.dedup();
    let rows: Vec<Vec<Rat>> = products.iter().map(|p| support.iter().map(|m| p.coeff(m)).collect()).collect();
    let kernel = QMatrix::from_rows(rows, support.len()).left_kernel();
    if kernel.len() != 9 {
        return Err(Error::KernelDimension { expected: 9, found: kernel.len() });
    }
    let sys = QuadricSystem::from_rows(Var::P5, kernel);
    debug_assert!(sys.vanishes_on(&a23, &[int(1), int(1), int(1), int(1), int(1), int(1)]));
    Ok(sys)
}
