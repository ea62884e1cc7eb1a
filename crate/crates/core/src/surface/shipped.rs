//! The fibre data of the pencil `s t x^4 + (s z^2 + t y^2)(s z^2 + t x y) = 0`
//! and of the cubic pencil it covers, compiled in from `data/`.

use super::{CoverCorrespondence, FibreGraph};

pub const PENCIL_S_RESOLVED: &str = include_str!("../../../../data/pencil_S_resolved.json");
pub const PENCIL_S_MINIMAL: &str = include_str!("../../../../data/pencil_S_minimal.json");
pub const PENCIL_S_PRIME: &str = include_str!("../../../../data/pencil_Sprime.json");
pub const COVER_CORRESPONDENCE: &str = include_str!("../../../../data/cover_correspondence.json");

/// The two special fibres after resolving both singular points, before any blowdown.
pub fn pencil_s_resolved() -> FibreGraph {
    FibreGraph::from_json(PENCIL_S_RESOLVED).expect("shipped data is valid")
}

/// The special fibres of the minimal regular model.
pub fn pencil_s_minimal() -> FibreGraph {
    FibreGraph::from_json(PENCIL_S_MINIMAL).expect("shipped data is valid")
}

/// The special fibres of the resolved cubic pencil.
pub fn pencil_s_prime() -> FibreGraph {
    FibreGraph::from_json(PENCIL_S_PRIME).expect("shipped data is valid")
}

pub fn cover_correspondence() -> CoverCorrespondence {
    CoverCorrespondence::from_json(COVER_CORRESPONDENCE).expect("shipped data is valid")
}
