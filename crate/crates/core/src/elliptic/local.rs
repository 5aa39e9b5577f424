//! Local solubility of `y^2 = q(l, m)` over Q_p by lifting residue classes.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{ToPrimitive, Zero};

use super::quartic::Quartic;
use crate::exact::linalg::resultant;
use crate::exact::rat::{int_valuation, Rat};

/// Whether `y^2 = q(l, m)` has a point over Q_p.
///
/// P^1(Q_p) is covered by `l` in Z_p with `m = 1` and by `m` in pZ_p with
/// `l = 1`, so both charts are searched.
pub fn locally_soluble_at(q: &Quartic, p: u64) -> bool {
    let (q, _) = q.clear_denominators();
    let c: Vec<BigInt> = q.coeffs().iter().map(|x| x.numer().clone()).collect();
    let affine = trim(&c);
    let mut reversed = c.clone();
    reversed.reverse();
    let reversed = trim(&reversed);

    let pb = BigInt::from(p);
    let depth = depth_bound(affine, p).max(depth_bound(reversed, p));
    let ctx = Lift { p: &pb, depth };
    (0..p).any(|r| ctx.search(affine, &BigInt::from(r), 1)) || ctx.search(reversed, &BigInt::zero(), 1)
}

fn trim(c: &[BigInt]) -> &[BigInt] {
    let first = c.iter().position(|x| !x.is_zero()).unwrap_or(c.len() - 1);
    &c[first..]
}

/// `2 v_p(disc) + 3`, plus three more digits at `p = 2` where squares are
/// only detected mod 8.
fn depth_bound(f: &[BigInt], p: u64) -> u32 {
    let fr: Vec<Rat> = f.iter().map(|x| Rat::from_integer(x.clone())).collect();
    let deg = f.len() - 1;
    let v = if deg == 0 {
        0
    } else {
        let df: Vec<Rat> =
            fr[..deg].iter().enumerate().map(|(i, c)| c * Rat::from_integer(BigInt::from(deg - i))).collect();
        let disc = resultant(&fr, &df);
        if disc.is_zero() {
            16
        } else {
            int_valuation(&disc.to_integer(), p)
        }
    };
    2 * v + 3 + if p == 2 { 3 } else { 0 }
}

fn horner(f: &[BigInt], x: &BigInt) -> BigInt {
    f.iter().fold(BigInt::zero(), |acc, c| acc * x + c)
}

fn derivative(f: &[BigInt]) -> Vec<BigInt> {
    let deg = f.len() - 1;
    f[..deg].iter().enumerate().map(|(i, c)| c * BigInt::from(deg - i)).collect()
}

struct Lift<'a> {
    p: &'a BigInt,
    depth: u32,
}

impl Lift<'_> {
    fn val(&self, n: &BigInt) -> u32 {
        if n.is_zero() {
            u32::MAX
        } else {
            int_valuation(n, self.p.to_u64().unwrap())
        }
    }

    /// Is some `f(x)`, `x = x0 mod p^k`, a nonzero square or zero in Q_p?
    fn search(&self, f: &[BigInt], x0: &BigInt, k: u32) -> bool {
        let fx = horner(f, x0);
        if fx.is_zero() {
            return true;
        }
        let e = self.val(&fx);
        if f.len() > 1 {
            // Hensel: a root of f exists in Z_p, giving a point with y = 0.
            let d = horner(&derivative(f), x0);
            if !d.is_zero() && e > 2 * self.val(&d) {
                return true;
            }
        }
        if e < k {
            // Every x in the class has f(x) = p^e u with u = u0 mod p^(k-e).
            if e % 2 == 1 {
                return false;
            }
            let u0 = &fx / self.p.pow(e);
            if *self.p == BigInt::from(2) {
                if k - e >= 3 {
                    return u0.mod_floor(&BigInt::from(8)) == BigInt::from(1);
                }
            } else {
                return is_square_mod(&u0, self.p);
            }
        }
        if k >= self.depth {
            return false;
        }
        let step = self.p.pow(k);
        let p = self.p.to_u64().unwrap();
        (0..p).any(|r| self.search(f, &(x0 + &step * BigInt::from(r)), k + 1))
    }
}

fn is_square_mod(u: &BigInt, p: &BigInt) -> bool {
    let u = u.mod_floor(p);
    let e = (p - 1u32) / 2u32;
    u.modpow(&e, p) == BigInt::from(1)
}
