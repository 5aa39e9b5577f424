//! Exact rationals.
//!
//! `Rat` is `num_rational::BigRational`, which already keeps the fraction
//! reduced with a positive denominator. This module adds the small amount of
//! number theory the rest of the crate needs on top of it: parsing and
//! formatting as fraction strings, p-adic valuations, reduction mod p and
//! exact k-th roots.

use std::str::FromStr;

use num_bigint::{BigInt, Sign};
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::Error;

pub type Rat = num_rational::BigRational;

/// `n/d` as a reduced rational. Panics if `d == 0`.
pub fn rat(n: i64, d: i64) -> Rat {
    Rat::new(BigInt::from(n), BigInt::from(d))
}

pub fn int(n: i64) -> Rat {
    Rat::from_integer(BigInt::from(n))
}

/// Parses `"n"` or `"p/q"` (optional surrounding whitespace, leading sign).
pub fn parse_rat(s: &str) -> Result<Rat, Error> {
    let t = s.trim();
    let bad = || Error::Parse(format!("malformed fraction {s:?}"));
    if t.is_empty() {
        return Err(bad());
    }
    match t.split_once('/') {
        None => BigInt::from_str(t).map(Rat::from_integer).map_err(|_| bad()),
        Some((n, d)) => {
            let n = BigInt::from_str(n.trim()).map_err(|_| bad())?;
            let d = BigInt::from_str(d.trim()).map_err(|_| bad())?;
            if d.is_zero() {
                return Err(Error::Parse(format!("zero denominator in {s:?}")));
            }
            Ok(Rat::new(n, d))
        }
    }
}

/// Canonical fraction string: `"n"` for integers, `"p/q"` otherwise.
pub fn fmt_rat(r: &Rat) -> String {
    r.to_string()
}

/// p-adic valuation of a nonzero integer.
pub fn int_valuation(n: &BigInt, p: u64) -> u32 {
    debug_assert!(!n.is_zero());
    let p = BigInt::from(p);
    let mut n = n.clone();
    let mut v = 0;
    loop {
        let (q, r) = n.div_rem(&p);
        if !r.is_zero() {
            return v;
        }
        n = q;
        v += 1;
    }
}

/// p-adic valuation of a nonzero rational (may be negative).
pub fn valuation(r: &Rat, p: u64) -> i64 {
    int_valuation(r.numer(), p) as i64 - int_valuation(r.denom(), p) as i64
}

/// Residue of `r` mod `p`, or `None` when `p` divides the denominator.
pub fn rat_mod(r: &Rat, p: u64) -> Option<u64> {
    let pb = BigInt::from(p);
    let d = r.denom().mod_floor(&pb).to_u64()?;
    if d == 0 {
        return None;
    }
    let n = r.numer().mod_floor(&pb).to_u64()?;
    Some(mul_mod(n, inv_mod(d, p), p))
}

pub fn mul_mod(x: u64, y: u64, p: u64) -> u64 {
    ((x as u128 * y as u128) % p as u128) as u64
}

pub fn pow_mod(mut base: u64, mut e: u64, p: u64) -> u64 {
    let mut acc = 1 % p;
    base %= p;
    while e > 0 {
        if e & 1 == 1 {
            acc = mul_mod(acc, base, p);
        }
        base = mul_mod(base, base, p);
        e >>= 1;
    }
    acc
}

/// Inverse of a unit mod prime `p`.
pub fn inv_mod(x: u64, p: u64) -> u64 {
    pow_mod(x, p - 2, p)
}

/// Exact integer k-th root, if one exists (odd k allows negative input).
pub fn int_nth_root(n: &BigInt, k: u32) -> Option<BigInt> {
    if n.is_negative() {
        if k.is_multiple_of(2) {
            return None;
        }
        return int_nth_root(&-n, k).map(|r| -r);
    }
    let r = n.nth_root(k);
    (r.pow(k) == *n).then_some(r)
}

/// Exact rational k-th root, if one exists. For even k the positive root.
pub fn rat_nth_root(r: &Rat, k: u32) -> Option<Rat> {
    let n = int_nth_root(r.numer(), k)?;
    let d = int_nth_root(r.denom(), k)?;
    Some(Rat::new(n, d))
}

pub fn is_rat_square(r: &Rat) -> bool {
    r.is_zero() || (r.is_positive() && rat_nth_root(r, 2).is_some())
}

/// Largest squarefree integer `s` with `r = s * (rational square)`, by trial division.
/// Only used for reporting twist classes of small examples.
pub fn squarefree_part(r: &Rat) -> BigInt {
    assert!(!r.is_zero());
    let mut n = r.numer() * r.denom();
    let sign = if n.sign() == Sign::Minus { -1 } else { 1 };
    n = n.abs();
    let mut out = BigInt::one();
    let mut p = BigInt::from(2u32);
    while &p * &p <= n {
        let mut e = 0u32;
        while (&n % &p).is_zero() {
            n /= &p;
            e += 1;
        }
        if e % 2 == 1 {
            out *= &p;
        }
        p += 1u32;
    }
    out * n * sign
}

/// `#[serde(with = "serde_rat")]`: rationals as `"p/q"` strings.
pub mod serde_rat {
    use super::{fmt_rat, parse_rat, Rat};
    use serde::{Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(r: &Rat, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&fmt_rat(r))
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Rat, D::Error> {
        let s = String::deserialize(d)?;
        parse_rat(&s).map_err(serde::de::Error::custom)
    }
}

/// Same as [`serde_rat`] for sequences.
pub mod serde_rat_vec {
    use super::{fmt_rat, parse_rat, Rat};
    use serde::{Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(v: &[Rat], s: S) -> Result<S::Ok, S::Error> {
        s.collect_seq(v.iter().map(fmt_rat))
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Vec<Rat>, D::Error> {
        let v = Vec::<String>::deserialize(d)?;
        v.iter().map(|s| parse_rat(s).map_err(serde::de::Error::custom)).collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_format() {
        assert_eq!(parse_rat("-6").unwrap(), int(-6));
        assert_eq!(parse_rat(" 64/729 ").unwrap(), rat(64, 729));
        assert_eq!(parse_rat("4/6").unwrap(), rat(2, 3));
        assert_eq!(fmt_rat(&rat(-8, 27)), "-8/27");
        assert_eq!(fmt_rat(&rat(6, 3)), "2");
        assert!(parse_rat("1/0").is_err());
        assert!(parse_rat("abc").is_err());
        assert!(parse_rat("1.5").is_err());
        assert!(parse_rat("").is_err());
    }

    #[test]
    fn valuations() {
        assert_eq!(valuation(&int(13824), 2), 9);
        assert_eq!(valuation(&int(13824), 3), 3);
        assert_eq!(valuation(&rat(5, 72), 2), -3);
        assert_eq!(valuation(&rat(5, 72), 5), 1);
    }

    #[test]
    fn residues() {
        assert_eq!(rat_mod(&rat(1, 2), 7), Some(4));
        assert_eq!(rat_mod(&rat(-1, 1), 7), Some(6));
        assert_eq!(rat_mod(&rat(1, 7), 7), None);
    }

    #[test]
    fn roots() {
        assert_eq!(rat_nth_root(&rat(81, 16), 4), Some(rat(3, 2)));
        assert_eq!(rat_nth_root(&rat(-27, 8), 3), Some(rat(-3, 2)));
        assert_eq!(rat_nth_root(&int(2), 2), None);
        assert_eq!(rat_nth_root(&int(-4), 2), None);
        assert!(is_rat_square(&rat(9, 4)));
        assert!(!is_rat_square(&int(-1)));
    }

    #[test]
    fn squarefree() {
        assert_eq!(squarefree_part(&int(72)), BigInt::from(2));
        assert_eq!(squarefree_part(&rat(-3, 4)), BigInt::from(-3));
        assert_eq!(squarefree_part(&rat(6, 1)), BigInt::from(6));
    }
}
