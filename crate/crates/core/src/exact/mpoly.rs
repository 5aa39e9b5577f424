//! Sparse multivariate polynomials with exact rational coefficients.
//!
//! Every polynomial in the crate lives over one fixed, global variable order
//! (see [`Var`]), so two polynomials are always mergeable and the canonical
//! form (a `BTreeMap` from exponent vectors to nonzero coefficients) is unique.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::rat::{fmt_rat, Rat};
use crate::error::{Error, Result};

/// The global variable order. Exponent vectors are indexed by `Var as usize`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Var {
    A,
    B,
    D,
    U,
    V,
    Lambda,
    Mu,
    X,
    Y,
    Z,
    X1,
    X2,
    X3,
    X4,
    X5,
    X6,
    BigX1,
    BigX2,
    BigX3,
    BigX4,
    BigX5,
    BigX6,
}

pub const NVARS: usize = 22;

impl Var {
    pub const ALL: [Var; NVARS] = [
        Var::A,
        Var::B,
        Var::D,
        Var::U,
        Var::V,
        Var::Lambda,
        Var::Mu,
        Var::X,
        Var::Y,
        Var::Z,
        Var::X1,
        Var::X2,
        Var::X3,
        Var::X4,
        Var::X5,
        Var::X6,
        Var::BigX1,
        Var::BigX2,
        Var::BigX3,
        Var::BigX4,
        Var::BigX5,
        Var::BigX6,
    ];

    /// The coordinates x1..x6 of P^5.
    pub const P5: [Var; 6] = [Var::X1, Var::X2, Var::X3, Var::X4, Var::X5, Var::X6];
    /// The twisted coordinates X1..X6.
    pub const P5_TWISTED: [Var; 6] = [Var::BigX1, Var::BigX2, Var::BigX3, Var::BigX4, Var::BigX5, Var::BigX6];

    pub fn name(self) -> &'static str {
        match self {
            Var::A => "a",
            Var::B => "b",
            Var::D => "D",
            Var::U => "u",
            Var::V => "v",
            Var::Lambda => "lambda",
            Var::Mu => "mu",
            Var::X => "x",
            Var::Y => "y",
            Var::Z => "z",
            Var::X1 => "x1",
            Var::X2 => "x2",
            Var::X3 => "x3",
            Var::X4 => "x4",
            Var::X5 => "x5",
            Var::X6 => "x6",
            Var::BigX1 => "X1",
            Var::BigX2 => "X2",
            Var::BigX3 => "X3",
            Var::BigX4 => "X4",
            Var::BigX5 => "X5",
            Var::BigX6 => "X6",
        }
    }

    pub fn from_name(s: &str) -> Option<Var> {
        match s {
            "l" => Some(Var::Lambda),
            "m" => Some(Var::Mu),
            _ => Var::ALL.iter().copied().find(|v| v.name() == s),
        }
    }

    fn idx(self) -> usize {
        self as usize
    }
}

impl fmt::Display for Var {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Exponent vector over the global variable order.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Monomial([u16; NVARS]);

impl Monomial {
    pub fn one() -> Self {
        Monomial([0; NVARS])
    }

    pub fn var(v: Var) -> Self {
        Self::from_powers(&[(v, 1)])
    }

    pub fn from_powers(powers: &[(Var, u16)]) -> Self {
        let mut e = [0; NVARS];
        for &(v, k) in powers {
            e[v.idx()] += k;
        }
        Monomial(e)
    }

    pub fn exp(&self, v: Var) -> u16 {
        self.0[v.idx()]
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().map(|&e| e as u32).sum()
    }

    pub fn degree_in(&self, vars: &[Var]) -> u32 {
        vars.iter().map(|&v| self.exp(v) as u32).sum()
    }

    pub fn is_one(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    fn mul(&self, other: &Monomial) -> Monomial {
        let mut e = self.0;
        for (x, y) in e.iter_mut().zip(other.0.iter()) {
            *x += *y;
        }
        Monomial(e)
    }

    pub(crate) fn with_exp(&self, v: Var, k: u16) -> Monomial {
        let mut e = self.0;
        e[v.idx()] = k;
        Monomial(e)
    }

    /// The variables with positive exponent, in global order.
    pub fn support(&self) -> impl Iterator<Item = (Var, u16)> + '_ {
        Var::ALL.iter().map(move |&v| (v, self.exp(v))).filter(|&(_, e)| e > 0)
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_one() {
            return f.write_str("1");
        }
        let parts: Vec<String> =
            self.support().map(|(v, e)| if e == 1 { v.to_string() } else { format!("{v}^{e}") }).collect();
        f.write_str(&parts.join("*"))
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

pub type Bindings = BTreeMap<Var, Rat>;

/// Convenience constructor for a binding map.
pub fn bind(pairs: &[(Var, Rat)]) -> Bindings {
    pairs.iter().cloned().collect()
}

#[derive(Clone, PartialEq, Eq, Default)]
pub struct MPoly {
    terms: BTreeMap<Monomial, Rat>,
}

impl MPoly {
    pub fn zero() -> Self {
        MPoly::default()
    }

    pub fn one() -> Self {
        Self::constant(Rat::one())
    }

    pub fn constant(c: Rat) -> Self {
        Self::monomial(c, Monomial::one())
    }

    pub fn int(n: i64) -> Self {
        Self::constant(Rat::from_integer(BigInt::from(n)))
    }

    pub fn var(v: Var) -> Self {
        Self::monomial(Rat::one(), Monomial::var(v))
    }

    pub fn monomial(c: Rat, m: Monomial) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        MPoly { terms }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn nterms(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Rat)> {
        self.terms.iter()
    }

    pub fn coeff(&self, m: &Monomial) -> Rat {
        self.terms.get(m).cloned().unwrap_or_else(Rat::zero)
    }

    /// The constant value, if the polynomial has no variables.
    pub fn as_constant(&self) -> Option<Rat> {
        match self.terms.len() {
            0 => Some(Rat::zero()),
            1 => self.terms.get(&Monomial::one()).cloned(),
            _ => None,
        }
    }

    /// Variables that actually occur, in global order.
    pub fn variables(&self) -> Vec<Var> {
        Var::ALL.iter().copied().filter(|&v| self.terms.keys().any(|m| m.exp(v) > 0)).collect()
    }

    pub fn total_degree(&self) -> u32 {
        self.terms.keys().map(Monomial::degree).max().unwrap_or(0)
    }

    pub fn degree_in(&self, v: Var) -> u16 {
        self.terms.keys().map(|m| m.exp(v)).max().unwrap_or(0)
    }

    /// Common degree in `vars` if every term has the same one.
    pub fn homogeneous_degree(&self, vars: &[Var]) -> Option<u32> {
        let mut degs = self.terms.keys().map(|m| m.degree_in(vars));
        let first = degs.next()?;
        degs.all(|d| d == first).then_some(first)
    }

    fn add_term(&mut self, m: Monomial, c: Rat) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(m) {
            Entry::Vacant(e) => {
                e.insert(c);
            }
            Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn scale(&self, c: &Rat) -> MPoly {
        if c.is_zero() {
            return MPoly::zero();
        }
        MPoly { terms: self.terms.iter().map(|(m, k)| (m.clone(), k * c)).collect() }
    }

    pub fn pow(&self, e: u32) -> MPoly {
        let mut acc = MPoly::one();
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    pub fn derivative(&self, v: Var) -> MPoly {
        let mut out = MPoly::zero();
        for (m, c) in &self.terms {
            let e = m.exp(v);
            if e > 0 {
                out.add_term(m.with_exp(v, e - 1), c * Rat::from_integer(BigInt::from(e)));
            }
        }
        out
    }

    /// Exact value with every variable bound.
    pub fn eval(&self, bindings: &Bindings) -> Result<Rat> {
        let mut acc = Rat::zero();
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for (v, e) in m.support() {
                let x = bindings.get(&v).ok_or_else(|| Error::UnboundVariable(v.name().to_string()))?;
                t *= num_traits::pow(x.clone(), e as usize);
            }
            acc += t;
        }
        Ok(acc)
    }

    /// Substitutes values for the bound variables and leaves the rest symbolic.
    pub fn specialize(&self, bindings: &Bindings) -> MPoly {
        let mut out = MPoly::zero();
        for (m, c) in &self.terms {
            let mut coeff = c.clone();
            let mut rest = m.clone();
            for (v, x) in bindings {
                let e = m.exp(*v);
                if e > 0 {
                    coeff *= num_traits::pow(x.clone(), e as usize);
                    rest = rest.with_exp(*v, 0);
                }
            }
            out.add_term(rest, coeff);
        }
        out
    }

    /// Replaces `v` by the polynomial `by` everywhere.
    pub fn substitute(&self, v: Var, by: &MPoly) -> MPoly {
        let mut powers: Vec<MPoly> = vec![MPoly::one()];
        let mut out = MPoly::zero();
        for (m, c) in &self.terms {
            let e = m.exp(v) as usize;
            while powers.len() <= e {
                let next = powers.last().unwrap() * by;
                powers.push(next);
            }
            let rest = MPoly::monomial(c.clone(), m.with_exp(v, 0));
            out += &(&rest * &powers[e]);
        }
        out
    }

    /// Simultaneous substitution of several variables.
    pub fn substitute_all(&self, subs: &[(Var, MPoly)]) -> MPoly {
        let mut cache: Vec<Vec<MPoly>> = subs.iter().map(|_| vec![MPoly::one()]).collect();
        let mut out = MPoly::zero();
        for (m, c) in &self.terms {
            let mut rest = m.clone();
            let mut t = MPoly::one();
            for (i, (v, by)) in subs.iter().enumerate() {
                let e = m.exp(*v) as usize;
                if e == 0 {
                    continue;
                }
                rest = rest.with_exp(*v, 0);
                while cache[i].len() <= e {
                    let next = cache[i].last().unwrap() * by;
                    cache[i].push(next);
                }
                t = &t * &cache[i][e];
            }
            out += &(&MPoly::monomial(c.clone(), rest) * &t);
        }
        out
    }

    /// Collects coefficients with respect to `vars`; the coefficients are
    /// polynomials in the remaining variables.
    pub fn coefficients_in(&self, vars: &[Var]) -> BTreeMap<Monomial, MPoly> {
        let mut out: BTreeMap<Monomial, MPoly> = BTreeMap::new();
        for (m, c) in &self.terms {
            let key = Monomial::from_powers(&vars.iter().map(|&v| (v, m.exp(v))).collect::<Vec<_>>());
            let mut rest = m.clone();
            for &v in vars {
                rest = rest.with_exp(v, 0);
            }
            out.entry(key).or_default().add_term(rest, c.clone());
        }
        out
    }
}

/// Reduces `p` modulo the ideal `(y^2 - rhs)`, where `rhs` does not involve `y`.
///
/// The result has y-degree at most 1 and is the unique such representative.
pub fn reduce_mod_weierstrass(p: &MPoly, rhs: &MPoly) -> MPoly {
    assert_eq!(rhs.degree_in(Var::Y), 0, "rhs must not involve y");
    let mut powers: Vec<MPoly> = vec![MPoly::one()];
    let mut out = MPoly::zero();
    for (m, c) in &p.terms {
        let e = m.exp(Var::Y);
        if e < 2 {
            out.add_term(m.clone(), c.clone());
            continue;
        }
        let k = (e / 2) as usize;
        while powers.len() <= k {
            let next = powers.last().unwrap() * rhs;
            powers.push(next);
        }
        let rest = MPoly::monomial(c.clone(), m.with_exp(Var::Y, e % 2));
        out += &(&rest * &powers[k]);
    }
    out
}

impl From<Rat> for MPoly {
    fn from(c: Rat) -> Self {
        MPoly::constant(c)
    }
}

impl From<Var> for MPoly {
    fn from(v: Var) -> Self {
        MPoly::var(v)
    }
}

impl<'a> Add<&'a MPoly> for &MPoly {
    type Output = MPoly;
    fn add(self, rhs: &'a MPoly) -> MPoly {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl<'a> Sub<&'a MPoly> for &MPoly {
    type Output = MPoly;
    fn sub(self, rhs: &'a MPoly) -> MPoly {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl<'a> Mul<&'a MPoly> for &MPoly {
    type Output = MPoly;
    fn mul(self, rhs: &'a MPoly) -> MPoly {
        let mut out = MPoly::zero();
        for (m1, c1) in &self.terms {
            for (m2, c2) in &rhs.terms {
                out.add_term(m1.mul(m2), c1 * c2);
            }
        }
        out
    }
}

impl Neg for &MPoly {
    type Output = MPoly;
    fn neg(self) -> MPoly {
        MPoly { terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect() }
    }
}

impl<'a> AddAssign<&'a MPoly> for MPoly {
    fn add_assign(&mut self, rhs: &'a MPoly) {
        for (m, c) in &rhs.terms {
            self.add_term(m.clone(), c.clone());
        }
    }
}

impl<'a> SubAssign<&'a MPoly> for MPoly {
    fn sub_assign(&mut self, rhs: &'a MPoly) {
        for (m, c) in &rhs.terms {
            self.add_term(m.clone(), -c);
        }
    }
}

macro_rules! owned_ops {
    ($($tr:ident $f:ident),*) => {$(
        impl $tr<MPoly> for MPoly {
            type Output = MPoly;
            fn $f(self, rhs: MPoly) -> MPoly { (&self).$f(&rhs) }
        }
        impl<'a> $tr<&'a MPoly> for MPoly {
            type Output = MPoly;
            fn $f(self, rhs: &'a MPoly) -> MPoly { (&self).$f(rhs) }
        }
        impl $tr<MPoly> for &MPoly {
            type Output = MPoly;
            fn $f(self, rhs: MPoly) -> MPoly { self.$f(&rhs) }
        }
    )*};
}
owned_ops!(Add add, Sub sub, Mul mul);

impl Neg for MPoly {
    type Output = MPoly;
    fn neg(self) -> MPoly {
        -&self
    }
}

impl fmt::Display for MPoly {
    /// Terms by descending total degree, then descending exponent vector.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut terms: Vec<(&Monomial, &Rat)> = self.terms.iter().collect();
        terms.sort_by(|(m1, _), (m2, _)| m2.degree().cmp(&m1.degree()).then(m1.cmp(m2)));
        for (i, (m, c)) in terms.iter().enumerate() {
            let neg = c.is_negative();
            let abs = c.abs();
            if i == 0 {
                if neg {
                    f.write_str("-")?;
                }
            } else {
                f.write_str(if neg { " - " } else { " + " })?;
            }
            if m.is_one() {
                f.write_str(&fmt_rat(&abs))?;
            } else if abs.is_one() {
                write!(f, "{m}")?;
            } else {
                write!(f, "{}*{m}", fmt_rat(&abs))?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for MPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for MPoly {
    type Err = Error;

    /// Parses `+ - * / ^ ( )`, integers and variable names. Division is only
    /// allowed by nonzero constants.
    fn from_str(s: &str) -> Result<MPoly> {
        let mut p = Parser { src: s, toks: tokenize(s)?, pos: 0 };
        let e = p.expr()?;
        if p.pos != p.toks.len() {
            return Err(p.err("trailing input"));
        }
        Ok(e)
    }
}

/// Parses a polynomial literal, panicking on malformed input. For formulas
/// fixed in source code.
pub fn poly(s: &str) -> MPoly {
    s.parse().unwrap_or_else(|e| panic!("bad polynomial literal {s:?}: {e}"))
}

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Num(BigInt),
    Ident(String),
    Op(char),
}

fn tokenize(s: &str) -> Result<Vec<Tok>> {
    let chars: Vec<char> = s.chars().collect();
    let mut out = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        if c.is_whitespace() {
            i += 1;
        } else if c.is_ascii_digit() {
            let start = i;
            while i < chars.len() && chars[i].is_ascii_digit() {
                i += 1;
            }
            let digits: String = chars[start..i].iter().collect();
            out.push(Tok::Num(digits.parse().unwrap()));
        } else if c.is_ascii_alphabetic() {
            let start = i;
            while i < chars.len() && chars[i].is_ascii_alphanumeric() {
                i += 1;
            }
            out.push(Tok::Ident(chars[start..i].iter().collect()));
        } else if "+-*/^()".contains(c) {
            out.push(Tok::Op(c));
            i += 1;
        } else {
            return Err(Error::Parse(format!("unexpected character {c:?} in {s:?}")));
        }
    }
    Ok(out)
}

struct Parser<'a> {
    src: &'a str,
    toks: Vec<Tok>,
    pos: usize,
}

impl Parser<'_> {
    fn err(&self, what: &str) -> Error {
        Error::Parse(format!("{what} at token {} in {:?}", self.pos, self.src))
    }

    fn peek_op(&self) -> Option<char> {
        match self.toks.get(self.pos) {
            Some(Tok::Op(c)) => Some(*c),
            _ => None,
        }
    }

    fn expr(&mut self) -> Result<MPoly> {
        let mut acc = self.term()?;
        while let Some(c @ ('+' | '-')) = self.peek_op() {
            self.pos += 1;
            let t = self.term()?;
            acc = if c == '+' { acc + t } else { acc - t };
        }
        Ok(acc)
    }

    fn term(&mut self) -> Result<MPoly> {
        let mut acc = self.unary()?;
        while let Some(c @ ('*' | '/')) = self.peek_op() {
            self.pos += 1;
            let f = self.unary()?;
            if c == '*' {
                acc = acc * f;
            } else {
                let d = f
                    .as_constant()
                    .filter(|d| !d.is_zero())
                    .ok_or_else(|| self.err("division by a non-constant or zero"))?;
                acc = acc.scale(&d.recip());
            }
        }
        Ok(acc)
    }

    fn unary(&mut self) -> Result<MPoly> {
        if self.peek_op() == Some('-') {
            self.pos += 1;
            return Ok(-self.unary()?);
        }
        if self.peek_op() == Some('+') {
            self.pos += 1;
            return self.unary();
        }
        self.power()
    }

    fn power(&mut self) -> Result<MPoly> {
        let base = self.atom()?;
        if self.peek_op() == Some('^') {
            self.pos += 1;
            match self.toks.get(self.pos) {
                Some(Tok::Num(n)) => {
                    let e: u32 = n.try_into().map_err(|_| self.err("exponent too large"))?;
                    self.pos += 1;
                    return Ok(base.pow(e));
                }
                _ => return Err(self.err("expected exponent")),
            }
        }
        Ok(base)
    }

    fn atom(&mut self) -> Result<MPoly> {
        match self.toks.get(self.pos).cloned() {
            Some(Tok::Num(n)) => {
                self.pos += 1;
                Ok(MPoly::constant(Rat::from_integer(n)))
            }
            Some(Tok::Ident(name)) => {
                self.pos += 1;
                Var::from_name(&name)
                    .map(MPoly::var)
                    .ok_or_else(|| Error::Parse(format!("unknown variable `{name}` in {:?}", self.src)))
            }
            Some(Tok::Op('(')) => {
                self.pos += 1;
                let e = self.expr()?;
                if self.peek_op() != Some(')') {
                    return Err(self.err("expected `)`"));
                }
                self.pos += 1;
                Ok(e)
            }
            _ => Err(self.err("expected operand")),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rat::{int, rat};

    #[test]
    fn difference_of_squares() {
        let p = poly("(x+1)*(x-1)");
        assert_eq!(p, poly("x^2 - 1"));
        assert_eq!(p.to_string(), "x^2 - 1");
    }

    #[test]
    fn additive_identity() {
        let p = poly("3*a*x^2 - b/2");
        assert_eq!(&p + &MPoly::zero(), p);
    }

    #[test]
    fn squared_cubic_has_six_terms() {
        // (v^3 + a u^2 v + b u^3)^2 = v^6 + 2a u^2 v^4 + 2b u^3 v^3 + a^2 u^4 v^2 + 2ab u^5 v + b^2 u^6
        let p = poly("v^3 + a*u^2*v + b*u^3").pow(2);
        assert_eq!(p.nterms(), 6);
        assert_eq!(p, poly("v^6 + 2*a*u^2*v^4 + 2*b*u^3*v^3 + a^2*u^4*v^2 + 2*a*b*u^5*v + b^2*u^6"));
    }

    #[test]
    fn evaluation() {
        let p = poly("x^2 - 1");
        assert_eq!(p.eval(&bind(&[(Var::X, int(3))])).unwrap(), int(8));

        let disc = poly("-16*(4*a^3 + 27*b^2)");
        let e = bind(&[(Var::A, int(-6)), (Var::B, int(8))]);
        assert_eq!(disc.eval(&e).unwrap(), int(-13824));

        let cubic = poly("v^3 + a*u^2*v + b*u^3");
        let mut b = e.clone();
        b.insert(Var::U, int(0));
        b.insert(Var::V, int(72));
        assert_eq!(cubic.eval(&b).unwrap(), int(373248));
    }

    #[test]
    fn unbound_variable_is_named() {
        let err = poly("x*y").eval(&bind(&[(Var::X, int(1))])).unwrap_err();
        assert_eq!(err, Error::UnboundVariable("y".into()));
    }

    #[test]
    fn weierstrass_reduction() {
        let rhs = poly("x^3 + D");
        assert!(reduce_mod_weierstrass(&poly("y^2 - x^3 - D"), &rhs).is_zero());
        assert_eq!(reduce_mod_weierstrass(&poly("y^4"), &rhs), rhs.pow(2));
        assert_eq!(reduce_mod_weierstrass(&poly("y^3 + y"), &rhs), poly("x^3*y + D*y + y"));
    }

    #[test]
    fn isogeny_landing_identity() {
        // (x^3+D)(x^3-8D)^2 - ((x^3+4D)^3 - 27 D x^6) vanishes in Q[x, D]
        let lhs = poly("(x^3 + D)*(x^3 - 8*D)^2");
        let rhs = poly("(x^3 + 4*D)^3 - 27*D*x^6");
        assert!((lhs - rhs).is_zero());
    }

    #[test]
    fn substitution_and_derivative() {
        let p = poly("x^2*y + 3*x");
        let q = p.substitute(Var::X, &poly("u + 1"));
        assert_eq!(q, poly("(u+1)^2*y + 3*u + 3"));
        assert_eq!(p.derivative(Var::X), poly("2*x*y + 3"));
        assert_eq!(p.derivative(Var::Z), MPoly::zero());
        let s = p.substitute_all(&[(Var::X, poly("y")), (Var::Y, poly("x"))]);
        assert_eq!(s, poly("y^2*x + 3*y"));
    }

    #[test]
    fn specialize_keeps_free_vars() {
        let p = poly("a*x^2 + b");
        let q = p.specialize(&bind(&[(Var::A, int(2)), (Var::B, rat(1, 2))]));
        assert_eq!(q, poly("2*x^2 + 1/2"));
    }

    #[test]
    fn homogeneity() {
        assert_eq!(poly("a*lambda^4 + 6*b*lambda^3*mu").homogeneous_degree(&[Var::Lambda, Var::Mu]), Some(4));
        assert_eq!(poly("lambda^4 + mu^2").homogeneous_degree(&[Var::Lambda, Var::Mu]), None);
    }

    #[test]
    fn parse_errors() {
        assert!("x +".parse::<MPoly>().is_err());
        assert!("x/y".parse::<MPoly>().is_err());
        assert!("x/0".parse::<MPoly>().is_err());
        assert!("w".parse::<MPoly>().is_err());
        assert!("x $ 1".parse::<MPoly>().is_err());
    }

    #[test]
    fn display_roundtrip() {
        let p = poly("-6*x1*x5 + 24*a*x1*x6 - 6*x2^2 + D*x6^2 - 1/3");
        assert_eq!(p.to_string().parse::<MPoly>().unwrap(), p);
    }
}
