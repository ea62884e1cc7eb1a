//! Dense univariate polynomials over GF(2^k).
//!
//! Used for the indeterminate `t` of the rational function field, for root
//! finding in extension fields, and for factoring tangent cones and line
//! restrictions.

use std::fmt;
use std::ops::{Add, Mul};

use super::field::Ring;
use super::gf::Gf;

/// A polynomial with coefficients in GF(2^k); `coeffs[i]` is the coefficient
/// of `t^i`, with no trailing zeros.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct GfPoly {
    k: u8,
    coeffs: Vec<Gf>,
}

impl GfPoly {
    pub fn new(k: u8, mut coeffs: Vec<Gf>) -> Self {
        debug_assert!(coeffs.iter().all(|c| c.degree() == k));
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        GfPoly { k, coeffs }
    }

    pub fn zero(k: u8) -> Self {
        GfPoly { k, coeffs: Vec::new() }
    }

    pub fn one(k: u8) -> Self {
        GfPoly::constant(Gf::one(k))
    }

    pub fn constant(c: Gf) -> Self {
        GfPoly::new(c.degree(), vec![c])
    }

    /// `c * t^n`
    pub fn monomial(c: Gf, n: usize) -> Self {
        let mut coeffs = vec![Gf::zero(c.degree()); n + 1];
        coeffs[n] = c;
        GfPoly::new(c.degree(), coeffs)
    }

    /// The indeterminate `t`.
    pub fn t(k: u8) -> Self {
        GfPoly::monomial(Gf::one(k), 1)
    }

    pub fn field_degree(&self) -> u8 {
        self.k
    }

    pub fn coeffs(&self) -> &[Gf] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> Gf {
        self.coeffs.get(i).copied().unwrap_or(Gf::zero(self.k))
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Gf {
        self.coeffs.last().copied().unwrap_or(Gf::zero(self.k))
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    pub fn scale(&self, c: Gf) -> GfPoly {
        GfPoly::new(self.k, self.coeffs.iter().map(|&x| x * c).collect())
    }

    pub fn monic(&self) -> GfPoly {
        match self.leading().inverse() {
            Some(inv) => self.scale(inv),
            None => self.clone(),
        }
    }

    pub fn eval(&self, x: Gf) -> Gf {
        self.coeffs
            .iter()
            .rev()
            .fold(Gf::zero(x.degree()), |acc, &c| acc * x + c.embed(x.degree()))
    }

    /// Formal derivative (characteristic two: odd exponents survive).
    pub fn derivative(&self) -> GfPoly {
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(i, &c)| if i % 2 == 1 { c } else { Gf::zero(self.k) })
            .collect();
        GfPoly::new(self.k, coeffs)
    }

    /// Maps every coefficient through the embedding GF(2^k) -> GF(2^m).
    pub fn embed(&self, m: u8) -> GfPoly {
        GfPoly::new(m, self.coeffs.iter().map(|c| c.embed(m)).collect())
    }

    pub fn div_rem(&self, divisor: &GfPoly) -> (GfPoly, GfPoly) {
        let dd = divisor.degree().expect("division by zero polynomial");
        let inv = divisor.leading().inverse().unwrap();
        let mut rem = self.coeffs.clone();
        if rem.len() <= dd {
            return (GfPoly::zero(self.k), self.clone());
        }
        let mut quot = vec![Gf::zero(self.k); rem.len() - dd];
        for i in (dd..rem.len()).rev() {
            let c = rem[i] * inv;
            if c.is_zero() {
                continue;
            }
            quot[i - dd] = c;
            for (j, &d) in divisor.coeffs.iter().enumerate() {
                rem[i - dd + j] = rem[i - dd + j] + c * d;
            }
        }
        (GfPoly::new(self.k, quot), GfPoly::new(self.k, rem))
    }

    pub fn rem(&self, divisor: &GfPoly) -> GfPoly {
        self.div_rem(divisor).1
    }

    /// Exact quotient; panics if the division leaves a remainder.
    pub fn exact_div(&self, divisor: &GfPoly) -> GfPoly {
        let (q, r) = self.div_rem(divisor);
        assert!(r.is_zero(), "inexact polynomial division");
        q
    }

    /// Monic gcd (zero only if both inputs are zero).
    pub fn gcd(&self, other: &GfPoly) -> GfPoly {
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let r = a.rem(&b);
            a = b;
            b = r;
        }
        a.monic()
    }

    fn mul_mod(&self, other: &GfPoly, m: &GfPoly) -> GfPoly {
        (self.clone() * other.clone()).rem(m)
    }

    /// `t^(2^e) mod m`
    fn t_pow_two_pow(e: u32, m: &GfPoly) -> GfPoly {
        let mut r = GfPoly::t(m.k).rem(m);
        for _ in 0..e {
            r = r.mul_mod(&r, m);
        }
        r
    }

    /// Square root of a polynomial whose formal derivative vanishes.
    pub fn sqrt_if_square(&self) -> Option<GfPoly> {
        if self.coeffs.iter().enumerate().any(|(i, c)| i % 2 == 1 && !c.is_zero()) {
            return None;
        }
        Some(GfPoly::new(
            self.k,
            self.coeffs.iter().step_by(2).map(|c| c.field_sqrt()).collect(),
        ))
    }

    /// Square-free decomposition: monic, pairwise coprime `(factor, multiplicity)`.
    pub fn squarefree_decomposition(&self) -> Vec<(GfPoly, usize)> {
        let mut out = Vec::new();
        if self.is_constant() {
            return out;
        }
        self.sqf_into(1, &mut out);
        out.sort_by_key(|(_, m)| *m);
        out
    }

    fn sqf_into(&self, scale: usize, out: &mut Vec<(GfPoly, usize)>) {
        let f = self.monic();
        let d = f.derivative();
        if d.is_zero() {
            if let Some(g) = f.sqrt_if_square() {
                g.sqf_into(scale * 2, out);
            }
            return;
        }
        let mut c = f.gcd(&d);
        let mut w = f.exact_div(&c);
        let mut i = 1;
        while !w.is_constant() {
            let y = w.gcd(&c);
            let z = w.exact_div(&y);
            if !z.is_constant() {
                out.push((z, i * scale));
            }
            i += 1;
            c = c.exact_div(&y);
            w = y;
        }
        if !c.is_constant() {
            let g = c.sqrt_if_square().expect("remaining cofactor is a square");
            g.sqf_into(scale * 2, out);
        }
    }

    /// Distinct-degree factorization of a square-free polynomial:
    /// `(degree, product of all irreducible factors of that degree)`.
    pub fn distinct_degree_factorization(&self) -> Vec<(usize, GfPoly)> {
        let mut out = Vec::new();
        let mut f = self.monic();
        let mut h = GfPoly::t(self.k).rem(&f);
        let mut d = 0;
        while f.degree().unwrap_or(0) > 0 {
            d += 1;
            if 2 * d > f.degree().unwrap() {
                out.push((f.degree().unwrap(), f.clone()));
                break;
            }
            for _ in 0..self.k {
                h = h.mul_mod(&h, &f);
            }
            let g = f.gcd(&(h.clone() + GfPoly::t(self.k)));
            if !g.is_constant() {
                out.push((d, g.clone()));
                f = f.exact_div(&g);
                h = h.rem(&f);
            }
        }
        out
    }

    /// Degrees and multiplicities of the irreducible factors.
    pub fn factor_degrees(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for (part, mult) in self.squarefree_decomposition() {
            for (deg, prod) in part.distinct_degree_factorization() {
                for _ in 0..prod.degree().unwrap() / deg {
                    out.push((deg, mult));
                }
            }
        }
        out.sort();
        out
    }

    /// Distinct roots in the coefficient field, ascending.
    pub fn roots(&self) -> Vec<Gf> {
        if self.is_zero() {
            panic!("roots of the zero polynomial");
        }
        if self.is_constant() {
            return Vec::new();
        }
        let k = self.k;
        let mut roots = if Gf::field_size(k) <= 256 {
            Gf::elements(k).filter(|&x| self.eval(x).is_zero()).collect()
        } else {
            let f = self.monic();
            let tq = GfPoly::t_pow_two_pow(k as u32, &f);
            let g = f.gcd(&(tq + GfPoly::t(k)));
            let mut acc = Vec::new();
            split_linear(&g, &mut acc);
            acc
        };
        roots.sort();
        roots
    }

    /// Roots with multiplicities.
    pub fn roots_with_multiplicity(&self) -> Vec<(Gf, usize)> {
        self.roots()
            .into_iter()
            .map(|r| {
                let lin = GfPoly::new(self.k, vec![r, Gf::one(self.k)]);
                let mut m = 0;
                let mut g = self.clone();
                loop {
                    let (q, rem) = g.div_rem(&lin);
                    if !rem.is_zero() {
                        break;
                    }
                    m += 1;
                    g = q;
                }
                (r, m)
            })
            .collect()
    }
}

/// Equal-degree splitting of a monic product of distinct linear factors via
/// trace maps `Tr(d t)` for `d` running over the power basis.
fn split_linear(g: &GfPoly, out: &mut Vec<Gf>) {
    match g.degree() {
        None | Some(0) => {}
        Some(1) => out.push(g.coeff(0) * g.leading().inverse().unwrap()),
        Some(_) => {
            let k = g.k;
            for i in 0..k {
                let d = Gf::new(k, 1 << i);
                let base = GfPoly::monomial(d, 1).rem(g);
                let mut tr = base.clone();
                let mut cur = base;
                for _ in 1..k {
                    cur = cur.mul_mod(&cur, g);
                    tr = tr + cur.clone();
                }
                let h = g.gcd(&tr);
                if !h.is_constant() && h.degree() < g.degree() {
                    let rest = g.exact_div(&h);
                    split_linear(&h, out);
                    split_linear(&rest, out);
                    return;
                }
            }
            unreachable!("trace maps separate distinct roots");
        }
    }
}

impl Add for GfPoly {
    type Output = GfPoly;
    fn add(self, rhs: GfPoly) -> GfPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let coeffs = (0..n).map(|i| self.coeff(i) + rhs.coeff(i)).collect();
        GfPoly::new(self.k, coeffs)
    }
}

impl Mul for GfPoly {
    type Output = GfPoly;
    fn mul(self, rhs: GfPoly) -> GfPoly {
        if self.is_zero() || rhs.is_zero() {
            return GfPoly::zero(self.k);
        }
        let mut out = vec![Gf::zero(self.k); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, &b) in rhs.coeffs.iter().enumerate() {
                out[i + j] = out[i + j] + a * b;
            }
        }
        GfPoly::new(self.k, out)
    }
}

impl fmt::Debug for GfPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

/// Formats with `t` for the indeterminate and `w` for the field generator.
impl fmt::Display for GfPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            let cs = c.to_string();
            let coeff = if cs.contains('+') { format!("({cs})") } else { cs };
            match (i, c.is_one()) {
                (0, _) => write!(f, "{coeff}")?,
                (1, true) => write!(f, "t")?,
                (1, false) => write!(f, "{coeff}*t")?,
                (_, true) => write!(f, "t^{i}")?,
                (_, false) => write!(f, "{coeff}*t^{i}")?,
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(k: u8, vals: &[u32]) -> GfPoly {
        GfPoly::new(k, vals.iter().map(|&v| Gf::new(k, v)).collect())
    }

    #[test]
    fn div_rem_reconstructs() {
        let a = p(3, &[1, 2, 3, 4, 5, 6]);
        let b = p(3, &[7, 0, 1]);
        let (q, r) = a.div_rem(&b);
        assert_eq!(q * b + r.clone(), a);
        assert!(r.degree().unwrap_or(0) < 2);
    }

    #[test]
    fn roots_small_and_large_fields() {
        // (t + 1)(t + w) over GF(4)
        let f = GfPoly::new(2, vec![Gf::new(2, 2), Gf::new(2, 3), Gf::one(2)]);
        assert_eq!(f.roots(), vec![Gf::one(2), Gf::new(2, 2)]);
        // product of linear factors over GF(2^16)
        let rs = [Gf::new(16, 5), Gf::new(16, 40000), Gf::new(16, 1234)];
        let g = rs.iter().fold(GfPoly::one(16), |acc, &r| {
            acc * GfPoly::new(16, vec![r, Gf::one(16)])
        });
        let mut want = rs.to_vec();
        want.sort();
        assert_eq!(g.roots(), want);
    }

    #[test]
    fn squarefree_and_degrees() {
        // t^2 (t^2 + t + 1)^3 over GF(2)
        let t = GfPoly::t(1);
        let q = p(1, &[1, 1, 1]);
        let f = t.clone() * t * q.clone() * q.clone() * q;
        assert_eq!(f.factor_degrees(), vec![(1, 2), (2, 3)]);
    }
}
