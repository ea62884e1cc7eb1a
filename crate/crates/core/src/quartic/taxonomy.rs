//! Geometric genus and degeneration type of plane quartics.

use serde::Serialize;

use super::QuarticFibre;
use crate::curves::{delta_blowup, PlaneCurve, ProjPoint};
use crate::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum FibreLabel {
    Smooth,
    GenusTwo,
    GenusOne,
    NodalRational,
    Reducible,
    ReducibleWithDoubleLine,
}

impl FibreLabel {
    pub fn as_str(&self) -> &'static str {
        match self {
            FibreLabel::Smooth => "smooth",
            FibreLabel::GenusTwo => "genus-two",
            FibreLabel::GenusOne => "genus-one",
            FibreLabel::NodalRational => "nodal-rational",
            FibreLabel::Reducible => "reducible",
            FibreLabel::ReducibleWithDoubleLine => "reducible-with-double-line",
        }
    }
}

impl std::fmt::Display for FibreLabel {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SingularityRecord {
    pub point: ProjPoint,
    pub multiplicity: usize,
    pub delta: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FibreTaxonomy {
    pub label: FibreLabel,
    /// Geometric genus; absent for reducible curves.
    pub genus: Option<usize>,
    pub singularities: Vec<SingularityRecord>,
    /// Singular points were searched over GF(2^scan_field_degree).
    pub scan_field_degree: u8,
}

impl FibreTaxonomy {
    fn reducible(label: FibreLabel, scan: u8) -> Self {
        FibreTaxonomy { label, genus: None, singularities: Vec::new(), scan_field_degree: scan }
    }
}

/// Classifies a plane quartic (any degree works for the genus count).
///
/// A line component over GF(2^line_field) makes the curve reducible. Otherwise
/// every singular point over GF(2^scan_field) is resolved by blowing up, and
/// the genus is `(d-1)(d-2)/2 - Σδ`; a sum exceeding the arithmetic genus
/// also proves reducibility.
pub fn plane_quartic_genus(curve: &PlaneCurve, line_field: u8, scan_field: u8) -> Result<FibreTaxonomy> {
    if curve.is_zero() {
        return Err(Error::Unsupported("zero form".into()));
    }
    if curve.find_line_component(line_field).is_some() {
        let lines = curve.line_components(line_field);
        let label = if lines.iter().any(|l| curve.has_double_line(l)) {
            FibreLabel::ReducibleWithDoubleLine
        } else {
            FibreLabel::Reducible
        };
        return Ok(FibreTaxonomy::reducible(label, scan_field));
    }
    let d = curve.degree() as usize;
    let arithmetic = (d - 1) * (d - 2) / 2;
    let points = match curve.singular_points(scan_field) {
        Ok(p) => p,
        Err(Error::NonIsolated(_)) => return Ok(FibreTaxonomy::reducible(FibreLabel::Reducible, scan_field)),
        Err(e) => return Err(e),
    };
    let mut singularities = Vec::new();
    let mut total = 0;
    for p in points {
        let delta = match delta_blowup(curve, &p) {
            Ok(v) => v,
            Err(Error::NonIsolated(_)) => {
                return Ok(FibreTaxonomy::reducible(FibreLabel::Reducible, scan_field))
            }
            Err(e) => return Err(e),
        };
        total += delta;
        singularities.push(SingularityRecord { point: p, multiplicity: curve.multiplicity(&p), delta });
    }
    if total > arithmetic {
        return Ok(FibreTaxonomy::reducible(FibreLabel::Reducible, scan_field));
    }
    let genus = arithmetic - total;
    let label = match genus {
        0 => FibreLabel::NodalRational,
        1 => FibreLabel::GenusOne,
        2 => FibreLabel::GenusTwo,
        _ => FibreLabel::Smooth,
    };
    Ok(FibreTaxonomy { label, genus: Some(genus), singularities, scan_field_degree: scan_field })
}

/// Default extension degree for singular-point scans over GF(2^k).
pub(crate) fn scan_degree(k: u8) -> u8 {
    k * 1u8.max(4u8.min(16 / k))
}

impl QuarticFibre {
    pub fn taxonomy(&self) -> Result<FibreTaxonomy> {
        let k = self.field_degree();
        plane_quartic_genus(self.form(), k, scan_degree(k))
    }

    /// `3 - Σδ`; errors on reducible fibres.
    pub fn geometric_genus(&self) -> Result<usize> {
        let t = self.taxonomy()?;
        t.genus.ok_or_else(|| Error::Reducible(t.label.to_string()))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{Gf, MPoly, VarCtx};
    use crate::quartic::QuarticParams;

    fn fibre(a: u32, b: u32, c: u32, e: u32) -> QuarticFibre {
        let g = |v| Gf::new(2, v);
        QuarticFibre::new(QuarticParams::new(g(a), g(b), g(c), g(e))).unwrap()
    }

    #[test]
    fn the_three_degenerations() {
        assert_eq!(fibre(0, 2, 1, 1).taxonomy().unwrap().label, FibreLabel::GenusOne);
        let nodal = fibre(0, 2, 1, 0).taxonomy().unwrap();
        assert_eq!(nodal.label, FibreLabel::NodalRational);
        let deltas: Vec<usize> = nodal.singularities.iter().map(|s| s.delta).collect();
        assert_eq!(deltas.iter().sum::<usize>(), 3);
        assert_eq!(fibre(1, 2, 0, 1).taxonomy().unwrap().label, FibreLabel::ReducibleWithDoubleLine);
    }

    #[test]
    fn double_line_found_among_several_lines() {
        // S T with S a double line and T = y^2 + xy + x^2 split over GF(4)
        assert_eq!(fibre(1, 2, 0, 0).taxonomy().unwrap().label, FibreLabel::ReducibleWithDoubleLine);
    }

    #[test]
    fn smooth_control_quartic() {
        let ctx = VarCtx::new(&["x", "y", "z"]);
        let p = MPoly::parse(&ctx, "x^3*y + y^3*z + z^3*x").unwrap();
        let c = PlaneCurve::from_mpoly(&p, &[], 2).unwrap();
        let t = plane_quartic_genus(&c, 2, 8).unwrap();
        assert_eq!((t.label, t.genus), (FibreLabel::Smooth, Some(3)));
    }
}
