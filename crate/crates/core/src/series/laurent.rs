use std::fmt;
use std::ops::{Add, Mul};

use crate::algebra::Ring;

/// A truncated Laurent series `sum_{n >= val} c_n t^n + O(t^prec)`.
///
/// `coeffs[i]` is the coefficient of `t^(val + i)`. The first stored
/// coefficient is nonzero unless the series is zero to its precision, in
/// which case `coeffs` is empty and `val == prec`.
#[derive(Clone, PartialEq)]
pub struct LaurentSeries<R> {
    val: i64,
    coeffs: Vec<R>,
    prec: i64,
    zero: R,
}

impl<R: Ring> LaurentSeries<R> {
    /// Coefficients from order `val`, known up to `prec` (exclusive); terms
    /// at or beyond `prec` are discarded.
    pub fn new(val: i64, mut coeffs: Vec<R>, prec: i64, zero: R) -> Self {
        let keep = (prec - val).max(0) as usize;
        coeffs.truncate(keep);
        let lead = coeffs.iter().position(|c| !c.is_zero());
        match lead {
            None => LaurentSeries { val: prec, coeffs: Vec::new(), prec, zero },
            Some(i) => {
                coeffs.drain(..i);
                while coeffs.last().is_some_and(|c| c.is_zero()) {
                    coeffs.pop();
                }
                LaurentSeries { val: val + i as i64, coeffs, prec, zero }
            }
        }
    }

    pub fn zero(zero: R, prec: i64) -> Self {
        LaurentSeries::new(prec, Vec::new(), prec, zero)
    }

    pub fn constant(c: R, prec: i64) -> Self {
        let zero = c.zero_like();
        LaurentSeries::new(0, vec![c], prec, zero)
    }

    /// `c * t^n`
    pub fn monomial(c: R, n: i64, prec: i64) -> Self {
        let zero = c.zero_like();
        LaurentSeries::new(n, vec![c], prec, zero)
    }

    pub fn valuation(&self) -> Option<i64> {
        (!self.coeffs.is_empty()).then_some(self.val)
    }

    pub fn precision(&self) -> i64 {
        self.prec
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn zero_elem(&self) -> &R {
        &self.zero
    }

    /// Coefficient of `t^n`. Panics if `n` is beyond the precision.
    pub fn coeff(&self, n: i64) -> R {
        assert!(n < self.prec, "coefficient t^{n} beyond precision {}", self.prec);
        if n < self.val || n - self.val >= self.coeffs.len() as i64 {
            self.zero.clone()
        } else {
            self.coeffs[(n - self.val) as usize].clone()
        }
    }

    /// Nonzero terms `(order, coefficient)`.
    pub fn terms(&self) -> impl Iterator<Item = (i64, &R)> {
        self.coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(move |(i, c)| (self.val + i as i64, c))
    }

    pub fn with_precision(&self, prec: i64) -> Self {
        let prec = prec.min(self.prec);
        LaurentSeries::new(self.val, self.coeffs.clone(), prec, self.zero.clone())
    }

    /// Multiplication by `t^n`.
    pub fn shift(&self, n: i64) -> Self {
        LaurentSeries::new(self.val + n, self.coeffs.clone(), self.prec + n, self.zero.clone())
    }

    pub fn scale(&self, c: &R) -> Self {
        let coeffs = self.coeffs.iter().map(|x| x.clone() * c.clone()).collect();
        LaurentSeries::new(self.val, coeffs, self.prec, self.zero.clone())
    }

    /// Inverse of a series whose leading coefficient is a unit.
    pub fn inv(&self) -> Option<Self> {
        let lead = self.coeffs.first()?;
        let lead_inv = lead.unit_inverse()?;
        let n = self.coeffs.len().max(1);
        let rel = (self.prec - self.val) as usize;
        let mut out: Vec<R> = Vec::with_capacity(rel);
        for i in 0..rel {
            // sum_{j=0}^{i} a_j b_{i-j} = [i == 0]
            let mut s = if i == 0 { lead.one_like() } else { self.zero.clone() };
            for j in 1..=i.min(n - 1) {
                s = s + self.coeffs[j].clone() * out[i - j].clone();
            }
            out.push(s * lead_inv.clone());
        }
        Some(LaurentSeries::new(-self.val, out, -self.val + rel as i64, self.zero.clone()))
    }

    /// Square root of a series with only even orders and square coefficients.
    pub fn sqrt(&self) -> Option<Self> {
        if self.is_zero() {
            return Some(LaurentSeries::zero(self.zero.clone(), (self.prec + 1).div_euclid(2)));
        }
        if self.val % 2 != 0 {
            return None;
        }
        let mut coeffs = Vec::new();
        for (i, c) in self.coeffs.iter().enumerate() {
            if i % 2 == 1 {
                if !c.is_zero() {
                    return None;
                }
            } else {
                coeffs.push(c.sqrt()?);
            }
        }
        Some(LaurentSeries::new(
            self.val / 2,
            coeffs,
            (self.prec + 1).div_euclid(2),
            self.zero.clone(),
        ))
    }

    pub fn pow(&self, n: u32) -> Self {
        let mut acc = LaurentSeries::constant(self.zero.one_like(), i64::MAX / 4);
        for _ in 0..n {
            acc = acc * self.clone();
        }
        acc
    }

    pub fn map<S: Ring>(&self, f: impl Fn(&R) -> S, zero: S) -> LaurentSeries<S> {
        LaurentSeries::new(self.val, self.coeffs.iter().map(f).collect(), self.prec, zero)
    }
}

impl<R: Ring> Add for LaurentSeries<R> {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        let prec = self.prec.min(rhs.prec);
        if self.is_zero() {
            return rhs.with_precision(prec);
        }
        if rhs.is_zero() {
            return self.with_precision(prec);
        }
        let val = self.val.min(rhs.val);
        let len = (prec - val).max(0) as usize;
        let mut coeffs = vec![self.zero.clone(); len];
        for (s, src) in [(&self, &self.coeffs), (&rhs, &rhs.coeffs)] {
            for (i, c) in src.iter().enumerate() {
                let n = s.val + i as i64;
                if n < prec {
                    let idx = (n - val) as usize;
                    coeffs[idx] = coeffs[idx].clone() + c.clone();
                }
            }
        }
        LaurentSeries::new(val, coeffs, prec, self.zero)
    }
}

impl<R: Ring> Mul for LaurentSeries<R> {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        let prec = (self.val.saturating_add(rhs.prec)).min(rhs.val.saturating_add(self.prec));
        if self.is_zero() || rhs.is_zero() {
            return LaurentSeries::zero(self.zero, prec);
        }
        let val = self.val + rhs.val;
        let len = (prec - val).max(0) as usize;
        let mut coeffs = vec![self.zero.clone(); len];
        for (i, a) in self.coeffs.iter().enumerate() {
            if i >= len || a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                if i + j >= len {
                    break;
                }
                coeffs[i + j] = coeffs[i + j].clone() + a.clone() * b.clone();
            }
        }
        LaurentSeries::new(val, coeffs, prec, self.zero)
    }
}

impl<R: Ring> Ring for LaurentSeries<R> {
    fn zero_like(&self) -> Self {
        LaurentSeries::zero(self.zero.clone(), self.prec)
    }
    fn one_like(&self) -> Self {
        LaurentSeries::constant(self.zero.one_like(), self.prec)
    }
    fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }
    fn unit_inverse(&self) -> Option<Self> {
        self.inv()
    }
    fn sqrt(&self) -> Option<Self> {
        LaurentSeries::sqrt(self)
    }
}

impl<R: Ring> fmt::Debug for LaurentSeries<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.terms().map(|(n, c)| format!("({c:?})*t^{n}")).collect();
        if parts.is_empty() {
            write!(f, "O(t^{})", self.prec)
        } else {
            write!(f, "{} + O(t^{})", parts.join(" + "), self.prec)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::Gf;

    fn s(val: i64, vals: &[u32], prec: i64) -> LaurentSeries<Gf> {
        LaurentSeries::new(val, vals.iter().map(|&v| Gf::new(2, v)).collect(), prec, Gf::zero(2))
    }

    #[test]
    fn precision_bookkeeping() {
        let a = s(-2, &[1, 2, 3], 5);
        let b = s(1, &[3, 1], 4);
        let p = a.clone() * b.clone();
        assert_eq!(p.precision(), (-2 + 4).min(1 + 5));
        assert_eq!((a.clone() + b).precision(), 4);
        assert_eq!(a.valuation(), Some(-2));
    }

    #[test]
    fn inverse_and_sqrt() {
        let a = s(-1, &[1, 2, 3, 0, 1], 8);
        let prod = a.clone() * a.inv().unwrap();
        assert_eq!(prod.coeff(0), Gf::one(2));
        for n in 1..prod.precision() {
            assert!(prod.coeff(n).is_zero());
        }
        let sq = a.clone() * a.clone();
        let r = sq.sqrt().unwrap();
        for n in -1..r.precision() {
            assert_eq!(r.coeff(n), a.coeff(n));
        }
        assert!(s(1, &[1], 5).sqrt().is_none());
    }
}
