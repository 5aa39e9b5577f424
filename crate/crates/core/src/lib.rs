//! Exact constructions of elliptic curves directly and reverse 6-congruent to
//! a given curve `y^2 = x^3 + ax + b` over Q, together with the modular-curve
//! models and maps they are built from, and independent oracles (polynomial
//! identities, binary quartic invariants, point counts over F_p, trace
//! congruences, local solubility) that certify every formula.

pub mod congruence;
pub mod elliptic;
pub mod error;
pub mod exact;
pub mod families;
pub mod models;
pub mod morphisms;
pub mod verify;

pub use error::{Error, Result};
pub use exact::{parse_rat, Rat};
