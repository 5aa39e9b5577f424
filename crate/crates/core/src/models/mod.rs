//! Genus-one models attached to a curve: quartic 2-coverings, plane cubic
//! 3-coverings, Weierstrass Jacobians and the nine-quadric model in P^5.

pub mod canonical;
pub mod flex;
pub mod plane_cubic;
pub mod quadrics;

pub use canonical::{c_x_minus_inner, c_x_quartic, canonical_model, Model, ModelKind};
pub use flex::{twist_by_flex, FlexMatrixInverse, TwistedSpan};
pub use plane_cubic::{jacobian_consistency, JacobianConsistency, TwistedCubic};
pub use quadrics::{build_a23, derive_quadrics, printed_q, quadrics_s, ProjPoint6, QuadricSystem, A23};
