//! Rational maps between the models, with exact certificates, and a named
//! registry of point maps.

pub mod points;
pub mod rational_map;
pub mod registry;

pub use points::{j_compatibility, map6to3_reverse, map_to_cxminus, minors_chi2, plane_triple, BirationalModel};
pub use rational_map::{iso_g, isogeny_f, map6to3_direct, v_matches_composite, RationalMap};
pub use registry::{point_map_by_name, point_maps, PointMap};
