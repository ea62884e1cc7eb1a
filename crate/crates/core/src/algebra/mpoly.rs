//! Multivariate polynomials over GF(2) in named indeterminates.
//!
//! Monomials are exponent vectors over a variable list fixed per [`VarCtx`].
//! Terms are kept in a `BTreeSet`, whose order on equal-length vectors is the
//! lexicographic term order with the first declared variable largest.

use std::collections::{BTreeSet, HashSet};
use std::fmt;
use std::ops::{Add, Mul};
use std::sync::Arc;

use super::expr::Expr;
use super::field::Ring;
use super::gf::Gf;
use crate::Error;

pub type Monomial = Vec<u16>;

#[derive(Debug, PartialEq, Eq)]
pub struct VarCtx {
    names: Vec<String>,
}

impl VarCtx {
    pub fn new<S: AsRef<str>>(names: &[S]) -> Arc<VarCtx> {
        let names: Vec<String> = names.iter().map(|s| s.as_ref().to_string()).collect();
        let unique: HashSet<&String> = names.iter().collect();
        assert_eq!(unique.len(), names.len(), "duplicate variable name");
        Arc::new(VarCtx { names })
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn index(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }
}

#[derive(Clone)]
pub struct MPoly {
    ctx: Arc<VarCtx>,
    terms: BTreeSet<Monomial>,
}

impl PartialEq for MPoly {
    fn eq(&self, other: &Self) -> bool {
        same_ctx(&self.ctx, &other.ctx) && self.terms == other.terms
    }
}

impl Eq for MPoly {}

fn same_ctx(a: &Arc<VarCtx>, b: &Arc<VarCtx>) -> bool {
    Arc::ptr_eq(a, b) || a == b
}

fn divides(a: &Monomial, b: &Monomial) -> bool {
    a.iter().zip(b).all(|(x, y)| x <= y)
}

fn mono_mul(a: &Monomial, b: &Monomial) -> Monomial {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

fn mono_div(a: &Monomial, b: &Monomial) -> Monomial {
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

impl MPoly {
    pub fn zero(ctx: &Arc<VarCtx>) -> Self {
        MPoly { ctx: ctx.clone(), terms: BTreeSet::new() }
    }

    pub fn one(ctx: &Arc<VarCtx>) -> Self {
        MPoly::monomial(ctx, vec![0; ctx.len()])
    }

    pub fn monomial(ctx: &Arc<VarCtx>, exps: Monomial) -> Self {
        assert_eq!(exps.len(), ctx.len());
        MPoly { ctx: ctx.clone(), terms: BTreeSet::from([exps]) }
    }

    pub fn var(ctx: &Arc<VarCtx>, name: &str) -> Self {
        let i = ctx.index(name).unwrap_or_else(|| panic!("unknown variable {name}"));
        MPoly::var_index(ctx, i)
    }

    pub fn var_index(ctx: &Arc<VarCtx>, i: usize) -> Self {
        let mut e = vec![0; ctx.len()];
        e[i] = 1;
        MPoly::monomial(ctx, e)
    }

    /// Parses `+ * ^ ( )` expressions over the context's variable names;
    /// integer literals are read modulo 2.
    pub fn parse(ctx: &Arc<VarCtx>, src: &str) -> Result<Self, Error> {
        let expr = Expr::parse(src)?;
        expr.eval(&MPoly::one(ctx), &|name| {
            ctx.index(name).map(|i| MPoly::var_index(ctx, i))
        })
    }

    pub fn ctx(&self) -> &Arc<VarCtx> {
        &self.ctx
    }

    pub fn terms(&self) -> impl Iterator<Item = &Monomial> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Greatest monomial in lex order.
    pub fn leading_monomial(&self) -> Option<&Monomial> {
        self.terms.iter().next_back()
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.iter().map(|m| m.iter().map(|&e| e as u32).sum()).max()
    }

    pub fn degree_in(&self, var: usize) -> Option<u16> {
        self.terms.iter().map(|m| m[var]).max()
    }

    pub fn is_homogeneous(&self) -> bool {
        let mut degs = self.terms.iter().map(|m| m.iter().map(|&e| e as u32).sum::<u32>());
        match degs.next() {
            None => true,
            Some(d) => degs.all(|e| e == d),
        }
    }

    fn check(&self, other: &MPoly) -> Result<(), Error> {
        if same_ctx(&self.ctx, &other.ctx) {
            Ok(())
        } else {
            Err(Error::ContextMismatch(format!(
                "{:?} vs {:?}",
                self.ctx.names, other.ctx.names
            )))
        }
    }

    pub fn try_add(&self, other: &MPoly) -> Result<MPoly, Error> {
        self.check(other)?;
        let terms = self.terms.symmetric_difference(&other.terms).cloned().collect();
        Ok(MPoly { ctx: self.ctx.clone(), terms })
    }

    pub fn try_mul(&self, other: &MPoly) -> Result<MPoly, Error> {
        self.check(other)?;
        let mut acc: HashSet<Monomial> = HashSet::new();
        for a in &self.terms {
            for b in &other.terms {
                let m = mono_mul(a, b);
                if !acc.remove(&m) {
                    acc.insert(m);
                }
            }
        }
        Ok(MPoly { ctx: self.ctx.clone(), terms: acc.into_iter().collect() })
    }

    /// Squaring is additive in characteristic two: double every exponent.
    pub fn frobenius(&self) -> MPoly {
        MPoly {
            ctx: self.ctx.clone(),
            terms: self.terms.iter().map(|m| m.iter().map(|e| e * 2).collect()).collect(),
        }
    }

    /// Replaces variable `i` by `images[i]`; the images share a target context.
    pub fn substitute(&self, images: &[MPoly]) -> MPoly {
        assert_eq!(images.len(), self.ctx.len(), "one image per variable");
        let target = images[0].ctx.clone();
        let mut powers: Vec<Vec<MPoly>> = images.iter().map(|p| vec![MPoly::one(&target), p.clone()]).collect();
        let mut acc = MPoly::zero(&target);
        for m in &self.terms {
            let mut term = MPoly::one(&target);
            for (i, &e) in m.iter().enumerate() {
                if e == 0 {
                    continue;
                }
                while powers[i].len() <= e as usize {
                    let next = powers[i].last().unwrap().clone() * images[i].clone();
                    powers[i].push(next);
                }
                term = term * powers[i][e as usize].clone();
            }
            acc = acc + term;
        }
        acc
    }

    /// Substitutes a subset of variables by name, keeping the context.
    pub fn substitute_named(&self, subs: &[(&str, MPoly)]) -> MPoly {
        let mut images: Vec<MPoly> = (0..self.ctx.len()).map(|i| MPoly::var_index(&self.ctx, i)).collect();
        for (name, img) in subs {
            let i = self.ctx.index(name).unwrap_or_else(|| panic!("unknown variable {name}"));
            images[i] = img.clone();
        }
        self.substitute(&images)
    }

    /// Moves the polynomial into another context that contains all variables
    /// this one uses (by name).
    pub fn rename_into(&self, target: &Arc<VarCtx>) -> MPoly {
        let images: Vec<MPoly> = self
            .ctx
            .names
            .iter()
            .map(|n| match target.index(n) {
                Some(i) => MPoly::var_index(target, i),
                None => MPoly::zero(target),
            })
            .collect();
        self.substitute(&images)
    }

    pub fn derivative(&self, var: usize) -> MPoly {
        let terms = self
            .terms
            .iter()
            .filter(|m| m[var] % 2 == 1)
            .map(|m| {
                let mut m = m.clone();
                m[var] -= 1;
                m
            })
            .collect();
        MPoly { ctx: self.ctx.clone(), terms }
    }

    pub fn derivative_named(&self, name: &str) -> MPoly {
        self.derivative(self.ctx.index(name).expect("unknown variable"))
    }

    /// Evaluates at a point of GF(2^k)^n.
    pub fn eval(&self, point: &[Gf]) -> Gf {
        assert_eq!(point.len(), self.ctx.len());
        let k = point.first().map(|p| p.degree()).unwrap_or(1);
        self.terms.iter().fold(Gf::zero(k), |acc, m| {
            acc + m
                .iter()
                .zip(point)
                .fold(Gf::one(k), |t, (&e, &x)| t * x.pow(e as u64))
        })
    }

    /// Multivariate division: `self = sum q_i * divisors[i] + r` with no term
    /// of `r` divisible by any leading monomial.
    pub fn divide(&self, divisors: &[MPoly]) -> (Vec<MPoly>, MPoly) {
        let leads: Vec<Monomial> = divisors
            .iter()
            .map(|d| d.leading_monomial().expect("division by zero polynomial").clone())
            .collect();
        let mut quots: Vec<MPoly> = divisors.iter().map(|_| MPoly::zero(&self.ctx)).collect();
        let mut rem = MPoly::zero(&self.ctx);
        let mut p = self.clone();
        while let Some(lt) = p.leading_monomial().cloned() {
            match leads.iter().position(|l| divides(l, &lt)) {
                Some(i) => {
                    let m = mono_div(&lt, &leads[i]);
                    for t in &divisors[i].terms {
                        let mm = mono_mul(t, &m);
                        if !p.terms.remove(&mm) {
                            p.terms.insert(mm);
                        }
                    }
                    quots[i].terms.insert(m);
                }
                None => {
                    p.terms.remove(&lt);
                    rem.terms.insert(lt);
                }
            }
        }
        (quots, rem)
    }

    /// Exact quotient by `d`, or `None` if `d` does not divide `self`.
    pub fn exact_div(&self, d: &MPoly) -> Option<MPoly> {
        let (q, r) = self.divide(std::slice::from_ref(d));
        r.terms.is_empty().then(|| q.into_iter().next().unwrap())
    }
}

impl Add for MPoly {
    type Output = MPoly;
    fn add(self, rhs: MPoly) -> MPoly {
        self.try_add(&rhs).expect("variable context mismatch")
    }
}

impl Mul for MPoly {
    type Output = MPoly;
    fn mul(self, rhs: MPoly) -> MPoly {
        self.try_mul(&rhs).expect("variable context mismatch")
    }
}

impl Ring for MPoly {
    fn zero_like(&self) -> Self {
        MPoly::zero(&self.ctx)
    }
    fn one_like(&self) -> Self {
        MPoly::one(&self.ctx)
    }
    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
    fn unit_inverse(&self) -> Option<Self> {
        self.is_one().then(|| self.clone())
    }
    fn sqrt(&self) -> Option<Self> {
        let terms: Option<BTreeSet<Monomial>> = self
            .terms
            .iter()
            .map(|m| m.iter().all(|e| e % 2 == 0).then(|| m.iter().map(|e| e / 2).collect()))
            .collect();
        terms.map(|terms| MPoly { ctx: self.ctx.clone(), terms })
    }
    fn square(&self) -> Self {
        self.frobenius()
    }
}

impl fmt::Debug for MPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

impl fmt::Display for MPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .rev()
            .map(|m| {
                let factors: Vec<String> = m
                    .iter()
                    .zip(&self.ctx.names)
                    .filter(|(e, _)| **e > 0)
                    .map(|(&e, n)| if e == 1 { n.clone() } else { format!("{n}^{e}") })
                    .collect();
                if factors.is_empty() { "1".to_string() } else { factors.join("*") }
            })
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn frobenius_of_sum() {
        let ctx = VarCtx::new(&["x", "y", "z"]);
        let p = MPoly::parse(&ctx, "(x + y)^2").unwrap();
        assert_eq!(p, MPoly::parse(&ctx, "x^2 + y^2").unwrap());
        let q = MPoly::parse(&ctx, "(x+y+z)^4 + x^4 + y^4 + z^4").unwrap();
        assert!(q.is_zero());
    }

    #[test]
    fn substitution() {
        let ctx = VarCtx::new(&["a", "A"]);
        let p = MPoly::parse(&ctx, "a + A^2").unwrap();
        let a2 = MPoly::parse(&ctx, "A^2").unwrap();
        assert!(p.substitute_named(&[("a", a2)]).is_zero());
    }

    #[test]
    fn context_mismatch_is_an_error() {
        let c1 = VarCtx::new(&["x"]);
        let c2 = VarCtx::new(&["y"]);
        assert!(MPoly::var(&c1, "x").try_add(&MPoly::var(&c2, "y")).is_err());
    }

    #[test]
    fn division_reconstructs() {
        let ctx = VarCtx::new(&["x", "y"]);
        let f = MPoly::parse(&ctx, "x^3*y + x*y^2 + y + 1").unwrap();
        let g1 = MPoly::parse(&ctx, "x*y + 1").unwrap();
        let g2 = MPoly::parse(&ctx, "y^2 + x").unwrap();
        let (q, r) = f.divide(&[g1.clone(), g2.clone()]);
        assert_eq!(q[0].clone() * g1 + q[1].clone() * g2 + r, f);
    }

    #[test]
    fn derivative_keeps_odd_exponents() {
        let ctx = VarCtx::new(&["x", "z"]);
        let p = MPoly::parse(&ctx, "x^3*z^2 + x^2*z + z^2").unwrap();
        assert!(p.derivative_named("z").terms().all(|m| m[0] == 2));
        assert_eq!(p.derivative_named("x"), MPoly::parse(&ctx, "x^2*z^2").unwrap());
    }
}
