//! Closed-form separation, magnitude and product bounds, evaluated exactly
//! with outward rounding.

mod applications;
mod comparison;
mod dmm;
mod expr;
mod report;
mod separating;
mod subdivision;

pub use applications::{
    eigen_bounds, positive_min_bounds, positive_min_exponents, table1, Table1Row, TABLE1_COLUMNS,
    TABLE1_PARAMS, TABLE1_PUBLISHED,
};
pub use comparison::{by_projection_bound, by_projection_simplified, gap_theorem_bound};
pub use dmm::{
    dmm1_product_bounds, dmm_n_bounds, dmm_n_dense_bounds, dmm_n_excess_bounds,
    dmm_n_excess_dense_bounds, dmm_n_mixedvol_bounds, lg_a, mixed_volume_sum,
};
pub use expr::{c, cb, half, lg, lg_big, lg_e, lg_q, q, Direction, Expr, VALUE_BITS};
pub use report::{BoundName, BoundReport, BoundRow, Quantity};
pub use separating::{first_injective, form_norm_within, separating_form_family, SeparatingForms};
pub use subdivision::{subdivision_step_bound, subdivision_step_bound_profile, StepBound};
