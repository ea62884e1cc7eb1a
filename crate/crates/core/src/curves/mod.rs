//! Plane projective curves over finite fields of characteristic two.

pub mod local;
pub mod plane;
pub mod point;
pub mod semigroup;

pub use local::{delta_blowup, Poly2};
pub use plane::{line_points, line_through, on_line, Exp3, Line, PlaneCurve, Profile, ProfileEntry};
pub use point::ProjPoint;
pub use semigroup::{delta_semigroup, value_semigroup, ValueSemigroup};
