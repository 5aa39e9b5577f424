//! Short Weierstrass curves over Q, their reductions mod p, binary quartic
//! 2-coverings and local solubility.

pub mod curve;
pub mod finite_field;
pub mod local;
pub mod quartic;

pub use curve::{discriminant_of, Curve};
pub use finite_field::{ap, ap_table, cubic_splitting_type, good_primes, ApReport, SplittingType};
pub use local::locally_soluble_at;
pub use quartic::Quartic;
