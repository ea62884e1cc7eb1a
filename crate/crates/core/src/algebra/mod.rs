//! Exact characteristic-2 arithmetic.

pub mod expr;
pub mod field;
pub mod gf;
pub mod mpoly;
pub mod poly;
pub mod ratfunc;

pub use expr::Expr;
pub use field::{Field, Ring};
pub use gf::Gf;
pub use mpoly::{MPoly, Monomial, VarCtx};
pub use poly::GfPoly;
pub use ratfunc::RatFunc;
