//! Newton polytopes, lattice point counts and mixed volumes.

mod hull;
mod linalg;
mod polytope;
mod profile;

pub use polytope::{minkowski_sum, mixed_volume, Halfspace, LatticePolytope, VolumeData, MAX_EXACT_DIM};
pub use profile::{system_profile, SystemProfile};
