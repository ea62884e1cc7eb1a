//! The rational function field GF(2^k)(t).

use std::fmt;
use std::ops::{Add, Mul};

use super::field::{Field, Ring};
use super::gf::Gf;
use super::poly::GfPoly;
use crate::Error;

/// `num / den` with `den` monic and `gcd(num, den) = 1`; zero is `0 / 1`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct RatFunc {
    num: GfPoly,
    den: GfPoly,
}

impl RatFunc {
    /// Builds and canonicalizes `num / den`. Panics on a zero denominator.
    pub fn new(num: GfPoly, den: GfPoly) -> Self {
        assert!(!den.is_zero(), "zero denominator");
        let k = den.field_degree();
        if num.is_zero() {
            return RatFunc { num, den: GfPoly::one(k) };
        }
        let g = num.gcd(&den);
        let num = num.exact_div(&g);
        let den = den.exact_div(&g);
        let lc = den.leading().inverse().unwrap();
        RatFunc { num: num.scale(lc), den: den.scale(lc) }
    }

    pub fn from_poly(p: GfPoly) -> Self {
        let k = p.field_degree();
        RatFunc { num: p, den: GfPoly::one(k) }
    }

    pub fn constant(c: Gf) -> Self {
        RatFunc::from_poly(GfPoly::constant(c))
    }

    pub fn zero(k: u8) -> Self {
        RatFunc::from_poly(GfPoly::zero(k))
    }

    pub fn one(k: u8) -> Self {
        RatFunc::from_poly(GfPoly::one(k))
    }

    pub fn t(k: u8) -> Self {
        RatFunc::from_poly(GfPoly::t(k))
    }

    /// Reads an expression in `w` (the generator of GF(2^k)) and `t`, e.g.
    /// `(w*t + 1)/t^2`.
    pub fn parse(k: u8, src: &str) -> Result<RatFunc, Error> {
        let resolve = |s: &str| match s {
            "w" => Some(RatFunc::constant(Gf::generator(k))),
            "t" => Some(RatFunc::t(k)),
            _ => None,
        };
        super::Expr::parse(src)?.eval(&RatFunc::one(k), &resolve)
    }

    pub fn field_degree(&self) -> u8 {
        self.den.field_degree()
    }

    pub fn numerator(&self) -> &GfPoly {
        &self.num
    }

    pub fn denominator(&self) -> &GfPoly {
        &self.den
    }

    pub fn is_polynomial(&self) -> bool {
        self.den.is_constant()
    }

    pub fn as_polynomial(&self) -> Option<&GfPoly> {
        self.is_polynomial().then_some(&self.num)
    }

    /// Value at `t = x`, `None` at a pole.
    pub fn eval(&self, x: Gf) -> Option<Gf> {
        let d = self.den.eval(x);
        d.inverse().map(|inv| self.num.eval(x) * inv)
    }

    /// Square root, if `self` is a square.
    ///
    /// `p/q` is a square iff `p*q` is, and then `sqrt(p/q) = sqrt(p*q)/q`.
    pub fn is_square(&self) -> Option<RatFunc> {
        let pq = self.num.clone() * self.den.clone();
        let root = pq.sqrt_if_square()?;
        Some(RatFunc::new(root, self.den.clone()))
    }

    /// A polynomial `s` with `s^2 + s = self`, or `None` if there is none.
    ///
    /// Inputs with poles are outside the supported fragment.
    pub fn artin_schreier_solve(&self) -> Result<Option<RatFunc>, Error> {
        let Some(r) = self.as_polynomial() else {
            return Err(Error::Unsupported(format!(
                "Artin-Schreier equation with a pole: {self}"
            )));
        };
        let k = self.field_degree();
        let mut rest = r.clone();
        let mut sigma = GfPoly::zero(k);
        while let Some(n) = rest.degree() {
            if n == 0 {
                match Gf::solve_artin_schreier(rest.coeff(0)) {
                    Some(c) => {
                        sigma = sigma + GfPoly::constant(c);
                        break;
                    }
                    None => return Ok(None),
                }
            }
            if n % 2 == 1 {
                return Ok(None);
            }
            let term = GfPoly::monomial(rest.leading().field_sqrt(), n / 2);
            rest = rest + term.clone() * term.clone() + term.clone();
            sigma = sigma + term;
        }
        Ok(Some(RatFunc::from_poly(sigma)))
    }

    /// Random element with numerator and denominator of degree at most `deg`.
    pub fn random<R: rand::Rng + ?Sized>(k: u8, deg: usize, rng: &mut R) -> Self {
        let num = random_poly(k, deg, rng);
        let mut den = random_poly(k, deg, rng);
        while den.is_zero() {
            den = random_poly(k, deg, rng);
        }
        RatFunc::new(num, den)
    }

    /// Random polynomial of degree at most `deg`.
    pub fn random_polynomial<R: rand::Rng + ?Sized>(k: u8, deg: usize, rng: &mut R) -> Self {
        RatFunc::from_poly(random_poly(k, deg, rng))
    }
}

fn random_poly<R: rand::Rng + ?Sized>(k: u8, deg: usize, rng: &mut R) -> GfPoly {
    GfPoly::new(k, (0..=deg).map(|_| Gf::random(k, rng)).collect())
}

impl Add for RatFunc {
    type Output = RatFunc;
    fn add(self, rhs: RatFunc) -> RatFunc {
        if self.den == rhs.den {
            return RatFunc::new(self.num + rhs.num, self.den);
        }
        RatFunc::new(
            self.num * rhs.den.clone() + rhs.num * self.den.clone(),
            self.den * rhs.den,
        )
    }
}

impl Mul for RatFunc {
    type Output = RatFunc;
    fn mul(self, rhs: RatFunc) -> RatFunc {
        RatFunc::new(self.num * rhs.num, self.den * rhs.den)
    }
}

impl Ring for RatFunc {
    fn zero_like(&self) -> Self {
        RatFunc::zero(self.field_degree())
    }
    fn one_like(&self) -> Self {
        RatFunc::one(self.field_degree())
    }
    fn is_zero(&self) -> bool {
        self.num.is_zero()
    }
    fn unit_inverse(&self) -> Option<Self> {
        if self.num.is_zero() {
            None
        } else {
            Some(RatFunc::new(self.den.clone(), self.num.clone()))
        }
    }
    fn sqrt(&self) -> Option<Self> {
        self.is_square()
    }
}

impl Field for RatFunc {}

impl From<Gf> for RatFunc {
    fn from(c: Gf) -> Self {
        RatFunc::constant(c)
    }
}

impl fmt::Debug for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

impl fmt::Display for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_constant() {
            return write!(f, "{}", self.num);
        }
        let wrap = |p: &GfPoly| {
            let s = p.to_string();
            if s.contains(' ') { format!("({s})") } else { s }
        };
        write!(f, "{}/{}", wrap(&self.num), wrap(&self.den))
    }
}

impl serde::Serialize for RatFunc {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_literals() {
        let t = RatFunc::t(2);
        let w = RatFunc::constant(Gf::generator(2));
        let f = RatFunc::parse(2, "(w*t + 1)/t^2").unwrap();
        assert_eq!(f * t.clone() * t.clone(), w * t + RatFunc::one(2));
        assert!(RatFunc::parse(2, "1/0").is_err());
        assert!(RatFunc::parse(2, "u").is_err());
    }

    fn poly(k: u8, exps: &[usize]) -> RatFunc {
        let mut p = GfPoly::zero(k);
        for &e in exps {
            p = p + GfPoly::monomial(Gf::one(k), e);
        }
        RatFunc::from_poly(p)
    }

    #[test]
    fn canonical_form() {
        let t = RatFunc::t(2);
        let x = (t.clone() * t.clone() + t.clone()) * RatFunc::new(GfPoly::one(2), GfPoly::t(2));
        assert_eq!(x, t.clone() + RatFunc::one(2));
        assert!(x.is_polynomial());
    }

    #[test]
    fn squares() {
        assert_eq!(poly(2, &[1]).is_square(), None);
        assert_eq!(poly(2, &[2, 4]).is_square(), Some(poly(2, &[1, 2])));
        assert_eq!(poly(2, &[2, 3]).is_square(), None);
        let r = RatFunc::new(GfPoly::one(2), GfPoly::monomial(Gf::one(2), 2));
        assert_eq!(r.is_square(), Some(RatFunc::new(GfPoly::one(2), GfPoly::t(2))));
    }

    #[test]
    fn artin_schreier() {
        assert_eq!(poly(2, &[1, 2]).artin_schreier_solve().unwrap(), Some(poly(2, &[1])));
        assert_eq!(poly(2, &[1]).artin_schreier_solve().unwrap(), None);
        assert_eq!(poly(2, &[2, 4]).artin_schreier_solve().unwrap(), Some(poly(2, &[2])));
        let pole = RatFunc::new(GfPoly::one(2), GfPoly::t(2));
        assert!(pole.artin_schreier_solve().is_err());
    }
}
