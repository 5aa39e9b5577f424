//! Exact arithmetic substrate: rationals, sparse polynomials, rational
//! functions, linear algebra over Q and the cubic quotient algebra.

pub mod cubic_alg;
pub mod linalg;
pub mod mpoly;
pub mod rat;
pub mod ratfn;

pub use cubic_alg::CubicAlgElem;
pub use linalg::QMatrix;
pub use mpoly::{bind, poly, reduce_mod_weierstrass, Bindings, MPoly, Monomial, Var};
pub use rat::{fmt_rat, int, parse_rat, rat, Rat};
pub use ratfn::RatFn;
