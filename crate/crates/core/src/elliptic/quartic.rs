use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use super::curve::{push_term, Curve};
use super::finite_field::{legendre, PowerTable};
use crate::error::{Error, Result};
use crate::exact::linalg::resultant;
use crate::exact::mpoly::{MPoly, Monomial, Var};
use crate::exact::rat::{fmt_rat, int, rat_mod, serde_rat_vec, Rat};

/// Binary quartic `c4 l^4 + c3 l^3 m + c2 l^2 m^2 + c1 l m^3 + c0 m^4`,
/// stored highest power of `l` first.
#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Quartic {
    #[serde(with = "serde_rat_vec")]
    c: Vec<Rat>,
}

impl Quartic {
    /// Coefficients in the order `c4, c3, c2, c1, c0`.
    pub fn new(c: [Rat; 5]) -> Result<Quartic> {
        if c.iter().all(Zero::is_zero) {
            return Err(Error::InvalidArgument("the zero quartic".into()));
        }
        Ok(Quartic { c: c.to_vec() })
    }

    pub fn from_ints(c: [i64; 5]) -> Result<Quartic> {
        Quartic::new(c.map(int))
    }

    /// `c4, c3, c2, c1, c0`.
    pub fn coeffs(&self) -> &[Rat] {
        &self.c
    }

    pub fn c4(&self) -> &Rat {
        &self.c[0]
    }

    pub fn c0(&self) -> &Rat {
        &self.c[4]
    }

    /// The classical invariants `(I, J)`.
    pub fn invariants(&self) -> (Rat, Rat) {
        let [c4, c3, c2, c1, c0] = [&self.c[0], &self.c[1], &self.c[2], &self.c[3], &self.c[4]];
        let i = int(12) * c4 * c0 - int(3) * c3 * c1 + c2 * c2;
        let j = int(72) * c4 * c2 * c0 + int(9) * c3 * c2 * c1
            - int(27) * c4 * c1 * c1
            - int(27) * c0 * c3 * c3
            - int(2) * c2 * c2 * c2;
        (i, j)
    }

    pub fn scale(&self, k: &Rat) -> Quartic {
        assert!(!k.is_zero(), "scaling a quartic by zero");
        Quartic { c: self.c.iter().map(|x| x * k).collect() }
    }

    /// `q(l, 1)` as a coefficient list with the leading zeros stripped.
    fn affine_coeffs(&self) -> &[Rat] {
        let first = self.c.iter().position(|x| !x.is_zero()).unwrap();
        &self.c[first..]
    }

    /// Whether `q` has a repeated root on P^1. Roots at infinity have
    /// multiplicity `4 - deg q(l,1)`.
    pub fn has_repeated_root(&self) -> bool {
        let f = self.affine_coeffs();
        let deg = f.len() - 1;
        if 4 - deg >= 2 {
            return true;
        }
        if deg <= 1 {
            return false;
        }
        let df: Vec<Rat> = f[..deg].iter().enumerate().map(|(i, c)| c * int((deg - i) as i64)).collect();
        resultant(f, &df).is_zero()
    }

    /// `y^2 = x^3 - 27 I x - 27 J`.
    pub fn jacobian(&self) -> Result<Curve> {
        if self.has_repeated_root() {
            return Err(Error::RepeatedRoot);
        }
        let (i, j) = self.invariants();
        Curve::new(int(-27) * i, int(-27) * j)
    }

    pub fn eval(&self, l: &Rat, m: &Rat) -> Rat {
        // sum of c_k l^k m^(4-k)
        let mut lp = vec![Rat::one()];
        let mut mp = vec![Rat::one()];
        for k in 1..5 {
            lp.push(&lp[k - 1] * l);
            mp.push(&mp[k - 1] * m);
        }
        (0..5).fold(Rat::zero(), |acc, k| acc + &self.c[4 - k] * &lp[k] * &mp[4 - k])
    }

    /// As a polynomial in `lambda, mu`.
    pub fn to_mpoly(&self) -> MPoly {
        let mut p = MPoly::zero();
        for k in 0..5u16 {
            let m = Monomial::from_powers(&[(Var::Lambda, k), (Var::Mu, 4 - k)]);
            p += &MPoly::monomial(self.c[4 - k as usize].clone(), m);
        }
        p
    }

    /// Multiplies through by the square of the common denominator, so the
    /// curve `y^2 = q` is unchanged up to `y -> y * lcm`.
    pub fn clear_denominators(&self) -> (Quartic, BigInt) {
        let l = self.c.iter().fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
        let k = Rat::from_integer(&l * &l);
        (self.scale(&k), l)
    }

    pub fn is_integral(&self) -> bool {
        self.c.iter().all(|x| x.is_integer())
    }

    /// Number of points of `y^2 = q(l, m)` over F_p in weighted projective
    /// space P(1,1,2): affine chart `m = 1` plus the points with `m = 0`.
    /// `p` must be odd and prime to the denominators.
    pub fn point_count(&self, p: u64) -> Option<u64> {
        let c: Vec<u64> = self.c.iter().map(|x| rat_mod(x, p)).collect::<Option<_>>()?;
        let sq = PowerTable::squares(p);
        let mut n = 0;
        for l in 0..p {
            let mut v = 0u64;
            for ck in &c {
                v = (v * l + ck) % p;
            }
            n += sq.count(v);
        }
        n += (1 + legendre(c[0], p)) as u64;
        Some(n)
    }

    /// Text form `y^2 = ...` in `lambda, mu`.
    /// `y^2 = c4*l^4 + c3*l^3*m + ...` in descending powers of `l`.
    pub fn to_text(&self) -> String {
        const MONOS: [&str; 5] = ["l^4", "l^3*m", "l^2*m^2", "l*m^3", "m^4"];
        let mut s = String::new();
        for (c, mono) in self.c.iter().zip(MONOS) {
            push_term(&mut s, c, mono);
        }
        let body = match s.strip_prefix(" + ") {
            Some(rest) => rest.to_string(),
            None => format!("-{}", &s[3..]),
        };
        format!("y^2 = {body}")
    }
}

impl fmt::Display for Quartic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}

impl fmt::Debug for Quartic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cs: Vec<String> = self.c.iter().map(fmt_rat).collect();
        write!(f, "Quartic({})", cs.join(", "))
    }
}
