//! δ of a unibranch singularity from its value semigroup.

use std::collections::BTreeMap;

use crate::algebra::{Gf, Ring};
use crate::series::LaurentSeries;
use crate::{Error, Result};

/// The value semigroup `Γ` of `GF[[x(t), z(t)]] ⊂ GF[[t]]`, restricted to
/// orders below the common precision, together with the certified conductor.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ValueSemigroup {
    /// Elements of `Γ` below `bound`.
    pub elements: Vec<usize>,
    pub bound: usize,
    pub conductor: usize,
}

impl ValueSemigroup {
    pub fn gaps(&self) -> Vec<usize> {
        (0..self.conductor).filter(|n| !self.elements.contains(n)).collect()
    }

    pub fn delta(&self) -> usize {
        self.gaps().len()
    }
}

fn truncated_mul(a: &[Gf], b: &[Gf]) -> Vec<Gf> {
    let n = a.len();
    let k = a[0].degree();
    let mut out = vec![Gf::zero(k); n];
    for (i, &x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, &y) in b.iter().enumerate().take(n - i) {
            out[i + j] = out[i + j] + x * y;
        }
    }
    out
}

/// Reduces `v` against the echelon basis; returns its new leading order.
fn reduce(basis: &BTreeMap<usize, Vec<Gf>>, mut v: Vec<Gf>) -> Option<(usize, Vec<Gf>)> {
    loop {
        let o = v.iter().position(|c| !c.is_zero())?;
        match basis.get(&o) {
            None => return Some((o, v)),
            Some(b) => {
                let f = v[o] * b[o].inverse().unwrap();
                for (vi, bi) in v.iter_mut().zip(b) {
                    *vi = *vi + f * *bi;
                }
            }
        }
    }
}

/// Computes `Γ` below the precision of the inputs.
///
/// Modulo `t^N` the span of the echelon basis is closed under products and
/// contains `1, x, z`, so it is the image of the local algebra and its
/// leading orders are exactly `Γ ∩ [0, N)`. The conductor is certified once
/// `Γ` contains `ord_min` consecutive integers below `N`.
pub fn value_semigroup(x: &LaurentSeries<Gf>, z: &LaurentSeries<Gf>) -> Result<ValueSemigroup> {
    for s in [x, z] {
        if s.valuation().is_some_and(|v| v < 1) {
            return Err(Error::Unsupported("parametrization must have positive order".into()));
        }
    }
    let n = x.precision().min(z.precision());
    if n < 2 {
        return Err(Error::InsufficientPrecision(format!("precision {n}")));
    }
    let n = n as usize;
    let k = x.zero_elem().degree();
    let vec_of = |s: &LaurentSeries<Gf>| (0..n as i64).map(|i| s.coeff(i)).collect::<Vec<Gf>>();
    let mut one = vec![Gf::zero(k); n];
    one[0] = Gf::one(k);
    let mut basis: BTreeMap<usize, Vec<Gf>> = BTreeMap::new();
    let mut queue = vec![one, vec_of(x), vec_of(z)];
    while let Some(v) = queue.pop() {
        let Some((o, v)) = reduce(&basis, v) else { continue };
        basis.insert(o, v.clone());
        for b in basis.values() {
            queue.push(truncated_mul(&v, b));
        }
    }
    let elements: Vec<usize> = basis.keys().copied().collect();
    let m = elements.iter().copied().find(|&e| e > 0).ok_or_else(|| {
        Error::InsufficientPrecision("no positive value below the precision".into())
    })?;
    let conductor = (0..n)
        .find(|&c| c + m <= n && (c..c + m).all(|e| elements.contains(&e)))
        .ok_or_else(|| {
            Error::InsufficientPrecision(format!("conductor not certified below t^{n}"))
        })?;
    Ok(ValueSemigroup { elements, bound: n, conductor })
}

/// δ = number of gaps of the value semigroup.
pub fn delta_semigroup(x: &LaurentSeries<Gf>, z: &LaurentSeries<Gf>) -> Result<usize> {
    value_semigroup(x, z).map(|s| s.delta())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn mono(n: i64, prec: i64) -> LaurentSeries<Gf> {
        LaurentSeries::monomial(Gf::one(1), n, prec)
    }

    #[test]
    fn classical_examples() {
        assert_eq!(delta_semigroup(&mono(2, 20), &mono(3, 20)).unwrap(), 1);
        assert_eq!(delta_semigroup(&mono(1, 20), &mono(1, 20)).unwrap(), 0);
        let s = value_semigroup(&mono(2, 20), &mono(5, 20)).unwrap();
        assert_eq!(s.gaps(), vec![1, 3]);
        assert_eq!(delta_semigroup(&mono(3, 30), &mono(4, 30)).unwrap(), 3);
    }

    #[test]
    fn needs_enough_precision() {
        assert!(matches!(
            delta_semigroup(&mono(4, 8), &mono(7, 8)),
            Err(Error::InsufficientPrecision(_))
        ));
    }
}
