use std::fmt;

use serde::{Serialize, Serializer};

use crate::algebra::{Gf, Ring};

/// A point of the projective plane over GF(2^k).
///
/// Stored in canonical form: the last nonzero coordinate is 1, so derived
/// equality is equality up to scaling.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ProjPoint {
    c: [Gf; 3],
}

impl ProjPoint {
    /// Returns `None` for `(0, 0, 0)`.
    pub fn new(x: Gf, y: Gf, z: Gf) -> Option<Self> {
        let c = [x, y, z];
        let last = c.iter().rposition(|v| !v.is_zero())?;
        let inv = c[last].inverse().unwrap();
        Some(ProjPoint { c: [x * inv, y * inv, z * inv] })
    }

    pub fn from_array(c: [Gf; 3]) -> Option<Self> {
        ProjPoint::new(c[0], c[1], c[2])
    }

    /// Affine point `(x : y : 1)`.
    pub fn affine(x: Gf, y: Gf) -> Self {
        ProjPoint::new(x, y, Gf::one(x.degree())).unwrap()
    }

    pub fn coords(&self) -> [Gf; 3] {
        self.c
    }

    pub fn x(&self) -> Gf {
        self.c[0]
    }

    pub fn y(&self) -> Gf {
        self.c[1]
    }

    pub fn z(&self) -> Gf {
        self.c[2]
    }

    pub fn field_degree(&self) -> u8 {
        self.c[0].degree()
    }

    /// Index of the coordinate normalized to 1.
    pub fn chart(&self) -> usize {
        self.c.iter().rposition(|v| !v.is_zero()).unwrap()
    }

    pub fn embed(&self, m: u8) -> ProjPoint {
        ProjPoint { c: self.c.map(|v| v.embed(m)) }
    }

    /// Coordinate-wise Frobenius `(x : y : z) -> (x^2 : y^2 : z^2)`.
    pub fn frobenius(&self) -> ProjPoint {
        ProjPoint { c: self.c.map(|v| v * v) }
    }

    /// All points of the projective plane over GF(2^k).
    pub fn all(k: u8) -> Vec<ProjPoint> {
        let mut out = Vec::new();
        for x in Gf::elements(k) {
            for y in Gf::elements(k) {
                out.push(ProjPoint::affine(x, y));
            }
            out.push(ProjPoint::new(x, Gf::one(k), Gf::zero(k)).unwrap());
        }
        out.push(ProjPoint::new(Gf::one(k), Gf::zero(k), Gf::zero(k)).unwrap());
        out
    }
}

impl fmt::Debug for ProjPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

impl fmt::Display for ProjPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({} : {} : {})", self.c[0], self.c[1], self.c[2])
    }
}

impl Serialize for ProjPoint {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn equality_up_to_scaling() {
        let w = Gf::generator(2);
        let p = ProjPoint::new(w, Gf::one(2), w).unwrap();
        let q = ProjPoint::new(w * w, w, w * w).unwrap();
        assert_eq!(p, q);
        assert_eq!(p.z(), Gf::one(2));
        assert!(ProjPoint::new(Gf::zero(2), Gf::zero(2), Gf::zero(2)).is_none());
    }

    #[test]
    fn plane_has_q2_q_1_points() {
        assert_eq!(ProjPoint::all(2).len(), 21);
        assert_eq!(ProjPoint::all(3).len(), 73);
    }
}
