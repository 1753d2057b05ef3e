//! Aggregate root separation bounds for polynomial systems.
//!
//! The crate evaluates closed-form separation, magnitude and product bounds
//! with outward-rounded exact arithmetic, computes the combinatorial inputs
//! they need (Newton polytopes, mixed volumes), and checks them against an
//! independent real-root oracle and a Milne volume-function isolator for
//! bivariate systems.

pub mod bounds;
pub mod error;
pub mod harness;
pub mod milne;
pub mod newton;
pub mod numeric;
pub mod poly;
pub mod univar;

pub use error::{Error, Result};
pub use newton::{LatticePolytope, SystemProfile};
pub use numeric::Rational;
pub use poly::{Monomial, PolyMeasures, SparsePoly};
pub use univar::{RootInterval, UPoly};
