//! Real root isolation for bivariate systems with a volume-function
//! counting oracle and quadtree subdivision.

mod count;
mod isolate;
mod volume;

pub use count::{count_in_box, nudge_step, IsolationBox, NUDGE_PRIME, NUDGE_RETRIES};
pub use isolate::{default_initial_box, isolate, IsolateOptions, Isolation, IsolationStats};
pub use volume::VolumeFunctionData;

use crate::error::Result;
use crate::poly::SparsePoly;

pub fn build_volume_function(f: &SparsePoly, g: &SparsePoly) -> Result<VolumeFunctionData> {
    VolumeFunctionData::build(f, g)
}
