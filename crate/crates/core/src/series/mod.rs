//! Truncated Laurent series and implicit expansions.

pub mod expand;
pub mod laurent;

pub use expand::{
    branch_parametrization_from_roots, expand_tate13, expand_y_at_infinity, expand_z_squared,
    ConicOverCubic,
};
pub use laurent::LaurentSeries;
