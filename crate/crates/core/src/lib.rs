//! Exact computer algebra for geometrically elliptic quartic fibrations in
//! characteristic two.
//!
//! The crate is layered bottom-up:
//!
//! * [`algebra`]: GF(2^k), GF(2^k)[t], GF(2^k)(t), and polynomials over GF(2)
//!   in named indeterminates;
//! * [`series`]: truncated Laurent series and the expansions of local
//!   parameters at infinity;
//! * [`curves`]: plane projective curves, singularities, δ-invariants;
//! * [`elliptic`]: Weierstrass data, normal forms, the chord-tangent law;
//! * [`quartic`]: the quartic models, their morphisms to and from cubics,
//!   and the isomorphism decision;
//! * [`surface`]: fibre graphs and intersection numbers;
//! * [`suites`]: the verification suites and their reports.

pub mod algebra;
pub mod curves;
pub mod elliptic;
pub mod quartic;
pub mod series;
pub mod suites;
pub mod surface;

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("parse error: {0}")]
    Parse(String),
    #[error("variable context mismatch: {0}")]
    ContextMismatch(String),
    #[error("unsupported input: {0}")]
    Unsupported(String),
    #[error("point not on curve: {0}")]
    NotOnCurve(String),
    #[error("singular point: {0}")]
    SingularPoint(String),
    #[error("line is a component of the curve: {0}")]
    ComponentLine(String),
    #[error("non-isolated singularity: {0}")]
    NonIsolated(String),
    #[error("singular cubic (zero discriminant): {0}")]
    SingularCurve(String),
    #[error("insufficient precision: {0}")]
    InsufficientPrecision(String),
    #[error("reducible curve: {0}")]
    Reducible(String),
    #[error("degenerate parameters: {0}")]
    Degenerate(String),
    #[error("invalid fibre graph: {0}")]
    Graph(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
