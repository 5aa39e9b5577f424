//! Naive O(p) point counting over prime fields, with precomputed tables of
//! square and cube roots. Oracle primes stay small (at most a few thousand).

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use serde::{Deserialize, Serialize};

use super::curve::Curve;
use crate::error::{Error, Result};
use crate::exact::rat::{mul_mod, pow_mod, rat_mod, Rat};

/// Primes `<= n`.
pub fn primes_up_to(n: u64) -> Vec<u64> {
    if n < 2 {
        return Vec::new();
    }
    let n = n as usize;
    let mut sieve = vec![true; n + 1];
    sieve[0] = false;
    sieve[1] = false;
    let mut i = 2;
    while i * i <= n {
        if sieve[i] {
            for j in (i * i..=n).step_by(i) {
                sieve[j] = false;
            }
        }
        i += 1;
    }
    sieve.iter().enumerate().filter_map(|(i, &s)| s.then_some(i as u64)).collect()
}

pub fn is_prime(n: u64) -> bool {
    n >= 2 && (2..).take_while(|d| d * d <= n).all(|d| !n.is_multiple_of(d))
}

/// Legendre symbol `(x / p)` for an odd prime `p`.
pub fn legendre(x: u64, p: u64) -> i64 {
    let x = x % p;
    if x == 0 {
        return 0;
    }
    if pow_mod(x, (p - 1) / 2, p) == 1 {
        1
    } else {
        -1
    }
}

/// Legendre symbol of a rational whose denominator is prime to `p`.
pub fn legendre_rat(x: &Rat, p: u64) -> Option<i64> {
    rat_mod(x, p).map(|r| legendre(r, p))
}

/// `roots[r]` = number of `y` in F_p with `y^k = r`.
#[derive(Debug, Clone)]
pub struct PowerTable {
    pub p: u64,
    roots: Vec<u32>,
}

impl PowerTable {
    pub fn new(p: u64, k: u32) -> Self {
        let mut roots = vec![0u32; p as usize];
        for y in 0..p {
            roots[pow_mod(y, k as u64, p) as usize] += 1;
        }
        PowerTable { p, roots }
    }

    pub fn squares(p: u64) -> Self {
        Self::new(p, 2)
    }

    pub fn cubes(p: u64) -> Self {
        Self::new(p, 3)
    }

    pub fn count(&self, r: u64) -> u64 {
        self.roots[(r % self.p) as usize] as u64
    }
}

/// Why `p` is excluded for a curve, or `Ok` when reduction is good and `p >= 5`.
pub fn check_good_prime(e: &Curve, p: u64) -> Result<()> {
    let bad = |reason: &str| Err(Error::BadPrime { p, reason: reason.to_string() });
    if p < 5 {
        return bad("p = 2 and p = 3 are excluded");
    }
    if !is_prime(p) {
        return bad("not prime");
    }
    let pb = BigInt::from(p);
    if e.a().denom().is_multiple_of(&pb) || e.b().denom().is_multiple_of(&pb) {
        return bad("divides a denominator of a or b");
    }
    if e.discriminant().numer().is_multiple_of(&pb) {
        return bad("divides the discriminant (bad reduction)");
    }
    Ok(())
}

/// Primes `5 <= p <= bound` of good reduction for every curve in the list.
pub fn good_primes(curves: &[Curve], bound: u64) -> Vec<u64> {
    primes_up_to(bound)
        .into_iter()
        .filter(|&p| p >= 5 && curves.iter().all(|e| check_good_prime(e, p).is_ok()))
        .collect()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct ApReport {
    pub p: u64,
    pub ap: i64,
    /// `#E(F_p) = p + 1 - ap`, including the point at infinity.
    pub count: u64,
}

/// Projective point count of `y^2 = x^3 + a x + b` over F_p for residues `a, b`.
pub fn count_points(a: u64, b: u64, p: u64, squares: &PowerTable) -> u64 {
    let mut n = 1;
    for x in 0..p {
        let x2 = mul_mod(x, x, p);
        let r = (mul_mod(x2, x, p) + mul_mod(a, x, p) + b) % p;
        n += squares.count(r);
    }
    n
}

/// Trace of Frobenius at a good prime `p >= 5`.
pub fn ap(e: &Curve, p: u64) -> Result<ApReport> {
    check_good_prime(e, p)?;
    Ok(ap_unchecked(e, p, &PowerTable::squares(p)))
}

pub(crate) fn ap_unchecked(e: &Curve, p: u64, squares: &PowerTable) -> ApReport {
    let a = rat_mod(e.a(), p).expect("good prime");
    let b = rat_mod(e.b(), p).expect("good prime");
    let count = count_points(a, b, p, squares);
    ApReport { p, ap: p as i64 + 1 - count as i64, count }
}

/// `ap` at every prime of `primes`, sharing square tables.
pub fn ap_table(e: &Curve, primes: &[u64]) -> Result<Vec<ApReport>> {
    primes
        .iter()
        .map(|&p| {
            check_good_prime(e, p)?;
            Ok(ap_unchecked(e, p, &PowerTable::squares(p)))
        })
        .collect()
}

/// Degrees of the irreducible factors of `x^3 + a x + b` mod `p`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum SplittingType {
    /// Three linear factors.
    Split,
    /// A linear times an irreducible quadratic.
    LinearQuadratic,
    /// Irreducible.
    Irreducible,
}

impl fmt::Display for SplittingType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            SplittingType::Split => "{1,1,1}",
            SplittingType::LinearQuadratic => "{1,2}",
            SplittingType::Irreducible => "{3}",
        })
    }
}

/// Factorization type of the 2-division cubic at a good prime. The cubic is
/// squarefree there, so the number of roots in F_p (3, 1 or 0) decides it.
pub fn cubic_splitting_type(e: &Curve, p: u64) -> Result<SplittingType> {
    check_good_prime(e, p)?;
    let a = rat_mod(e.a(), p).unwrap();
    let b = rat_mod(e.b(), p).unwrap();
    let roots = (0..p).filter(|&x| (mul_mod(mul_mod(x, x, p), x, p) + mul_mod(a, x, p) + b).is_multiple_of(p)).count();
    match roots {
        3 => Ok(SplittingType::Split),
        1 => Ok(SplittingType::LinearQuadratic),
        0 => Ok(SplittingType::Irreducible),
        n => unreachable!("squarefree cubic with {n} roots mod {p}"),
    }
}

/// Hasse bound `ap^2 <= 4p`.
pub fn hasse_ok(r: &ApReport) -> bool {
    (r.ap * r.ap) as u64 <= 4 * r.p
}
