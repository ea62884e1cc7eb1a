use std::collections::BTreeMap;
use std::fmt;

use rayon::prelude::*;
use serde::Serialize;

use super::local::Poly2;
use super::point::ProjPoint;
use crate::algebra::{Gf, GfPoly, MPoly, Ring};
use crate::{Error, Result};

pub type Exp3 = [u16; 3];

/// A homogeneous ternary form; as a curve it must be nonzero.
#[derive(Clone, PartialEq)]
pub struct PlaneCurve<F = Gf> {
    degree: u32,
    terms: BTreeMap<Exp3, F>,
}

/// Coefficients `(a, b, c)` of the line `a x + b y + c z = 0`.
pub type Line = [Gf; 3];

fn deg3(e: &Exp3) -> u32 {
    e.iter().map(|&v| v as u32).sum()
}

impl<F: Ring> PlaneCurve<F> {
    /// Builds a form of the given degree; zero coefficients are dropped.
    pub fn from_terms(degree: u32, terms: impl IntoIterator<Item = (Exp3, F)>) -> Result<Self> {
        let mut map: BTreeMap<Exp3, F> = BTreeMap::new();
        for (e, c) in terms {
            if deg3(&e) != degree {
                return Err(Error::Unsupported(format!("monomial {e:?} is not of degree {degree}")));
            }
            match map.remove(&e) {
                Some(old) => {
                    let s = old + c;
                    if !s.is_zero() {
                        map.insert(e, s);
                    }
                }
                None if !c.is_zero() => {
                    map.insert(e, c);
                }
                None => {}
            }
        }
        Ok(PlaneCurve { degree, terms: map })
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn terms(&self) -> &BTreeMap<Exp3, F> {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, e: Exp3) -> Option<&F> {
        self.terms.get(&e)
    }

    /// Evaluates in any ring `S`, mapping coefficients with `emb`.
    pub fn eval_in<S: Ring>(&self, pt: &[S; 3], emb: impl Fn(&F) -> S) -> S {
        let zero = pt[0].zero_like();
        let mut pows: [Vec<S>; 3] = [
            vec![pt[0].one_like()],
            vec![pt[1].one_like()],
            vec![pt[2].one_like()],
        ];
        let mut acc = zero;
        for (e, c) in &self.terms {
            let mut term = emb(c);
            for i in 0..3 {
                while pows[i].len() <= e[i] as usize {
                    let next = pows[i].last().unwrap().clone() * pt[i].clone();
                    pows[i].push(next);
                }
                if e[i] > 0 {
                    term = term * pows[i][e[i] as usize].clone();
                }
            }
            acc = acc + term;
        }
        acc
    }

    /// Partial derivative in coordinate `i`.
    pub fn partial(&self, i: usize) -> PlaneCurve<F> {
        let terms = self
            .terms
            .iter()
            .filter(|(e, _)| e[i] % 2 == 1)
            .map(|(e, c)| {
                let mut e = *e;
                e[i] -= 1;
                (e, c.clone())
            });
        PlaneCurve::from_terms(self.degree.saturating_sub(1), terms).unwrap()
    }

    pub fn scale(&self, c: &F) -> PlaneCurve<F> {
        let terms = self.terms.iter().map(|(e, v)| (*e, v.clone() * c.clone()));
        PlaneCurve::from_terms(self.degree, terms).unwrap()
    }

    pub fn add(&self, other: &PlaneCurve<F>) -> PlaneCurve<F> {
        assert_eq!(self.degree, other.degree);
        let terms = self.terms.iter().chain(other.terms.iter()).map(|(e, v)| (*e, v.clone()));
        PlaneCurve::from_terms(self.degree, terms).unwrap()
    }

    pub fn mul(&self, other: &PlaneCurve<F>) -> PlaneCurve<F> {
        let mut terms = Vec::new();
        for (a, u) in &self.terms {
            for (b, v) in &other.terms {
                terms.push(([a[0] + b[0], a[1] + b[1], a[2] + b[2]], u.clone() * v.clone()));
            }
        }
        PlaneCurve::from_terms(self.degree + other.degree, terms).unwrap()
    }

    /// The form after `x_i -> sum_j m[i][j] x_j`.
    pub fn linear_substitute(&self, m: &[[F; 3]; 3]) -> PlaneCurve<F> {
        let one = self.terms.values().next().map(|c| c.one_like());
        let Some(one) = one else {
            return self.clone();
        };
        let lin: Vec<PlaneCurve<F>> = (0..3)
            .map(|i| {
                PlaneCurve::from_terms(
                    1,
                    (0..3).map(|j| {
                        let mut e = [0; 3];
                        e[j] = 1;
                        (e, m[i][j].clone())
                    }),
                )
                .unwrap()
            })
            .collect();
        let unit = PlaneCurve::from_terms(0, [([0, 0, 0], one)]).unwrap();
        let mut acc = PlaneCurve::from_terms(self.degree, []).unwrap();
        for (e, c) in &self.terms {
            let mut term = unit.scale(c);
            for i in 0..3 {
                for _ in 0..e[i] {
                    term = term.mul(&lin[i]);
                }
            }
            acc = acc.add(&term);
        }
        acc
    }

    pub fn map_coeffs<G: Ring>(&self, f: impl Fn(&F) -> G) -> PlaneCurve<G> {
        PlaneCurve::from_terms(self.degree, self.terms.iter().map(|(e, c)| (*e, f(c)))).unwrap()
    }
}

/// One point of a line section: a rational point, or a closed point of the
/// given degree reported without coordinates.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ProfileEntry {
    pub point: Option<ProjPoint>,
    pub degree: usize,
    pub multiplicity: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Profile {
    pub entries: Vec<ProfileEntry>,
}

impl Profile {
    /// Multiplicities of the geometric intersection points, descending.
    pub fn multiplicities(&self) -> Vec<usize> {
        let mut out: Vec<usize> = self
            .entries
            .iter()
            .flat_map(|e| std::iter::repeat(e.multiplicity).take(e.degree))
            .collect();
        out.sort_unstable_by(|a, b| b.cmp(a));
        out
    }

    pub fn contains_point(&self, p: &ProjPoint) -> bool {
        self.entries.iter().any(|e| e.point.as_ref() == Some(p))
    }

    pub fn multiplicity_at(&self, p: &ProjPoint) -> usize {
        self.entries
            .iter()
            .find(|e| e.point.as_ref() == Some(p))
            .map(|e| e.multiplicity)
            .unwrap_or(0)
    }
}

/// The lines of P^2 over GF(2^m), each once, normalized.
fn all_lines(m: u8) -> Vec<Line> {
    let (z, o) = (Gf::zero(m), Gf::one(m));
    let mut lines: Vec<Line> = Vec::new();
    for a in Gf::elements(m) {
        for b in Gf::elements(m) {
            lines.push([a, b, o]);
        }
        lines.push([a, o, z]);
    }
    lines.push([o, z, z]);
    lines
}

/// Two points spanning the line `l`.
pub fn line_points(l: &Line) -> (ProjPoint, ProjPoint) {
    let [a, b, c] = *l;
    let k = a.degree();
    let (z, o) = (Gf::zero(k), Gf::one(k));
    let (p, q) = if !a.is_zero() {
        ([b, a, z], [c, z, a])
    } else if !b.is_zero() {
        ([o, z, z], [z, c, b])
    } else {
        ([o, z, z], [z, o, z])
    };
    (ProjPoint::from_array(p).unwrap(), ProjPoint::from_array(q).unwrap())
}

/// The line through two distinct points.
pub fn line_through(p: &ProjPoint, q: &ProjPoint) -> Line {
    let [a, b, c] = p.coords();
    let [d, e, f] = q.coords();
    [b * f + c * e, a * f + c * d, a * e + b * d]
}

pub fn on_line(l: &Line, p: &ProjPoint) -> bool {
    let c = p.coords();
    (l[0] * c[0] + l[1] * c[1] + l[2] * c[2]).is_zero()
}

impl PlaneCurve<Gf> {
    /// A curve from a polynomial in `x, y, z` and parameters specialized to
    /// the given values in GF(2^k).
    pub fn from_mpoly(p: &MPoly, params: &[(&str, Gf)], k: u8) -> Result<Self> {
        let ctx = p.ctx();
        let idx: Vec<usize> = ["x", "y", "z"]
            .iter()
            .map(|v| ctx.index(v).ok_or_else(|| Error::Unsupported(format!("missing variable {v}"))))
            .collect::<Result<_>>()?;
        let mut values = vec![None; ctx.len()];
        for (name, v) in params {
            let i = ctx.index(name).ok_or_else(|| Error::Unsupported(format!("unknown parameter {name}")))?;
            values[i] = Some(*v);
        }
        let mut terms = Vec::new();
        let mut degree = None;
        for m in p.terms() {
            let mut c = Gf::one(k);
            for (i, &e) in m.iter().enumerate() {
                if idx.contains(&i) || e == 0 {
                    continue;
                }
                let v = values[i].ok_or_else(|| {
                    Error::Unsupported(format!("parameter {} not specialized", ctx.names()[i]))
                })?;
                c = c * v.pow(e as u64);
            }
            let exp = [m[idx[0]], m[idx[1]], m[idx[2]]];
            let d = deg3(&exp);
            if *degree.get_or_insert(d) != d {
                return Err(Error::Unsupported("form is not homogeneous".into()));
            }
            terms.push((exp, c));
        }
        PlaneCurve::from_terms(degree.unwrap_or(0), terms)
    }

    pub fn field_degree(&self) -> u8 {
        self.terms.values().next().map(|c| c.degree()).unwrap_or(1)
    }

    pub fn embed(&self, m: u8) -> PlaneCurve<Gf> {
        self.map_coeffs(|c| c.embed(m))
    }

    /// Brings the point and the curve to a common field.
    fn common(&self, p: &ProjPoint) -> (PlaneCurve<Gf>, ProjPoint) {
        let m = self.field_degree().max(p.field_degree());
        (self.embed(m), p.embed(m))
    }

    pub fn eval(&self, p: &ProjPoint) -> Gf {
        let (c, p) = self.common(p);
        c.eval_in(&p.coords(), |v| *v)
    }

    pub fn contains(&self, p: &ProjPoint) -> bool {
        self.eval(p).is_zero()
    }

    pub fn gradient(&self, p: &ProjPoint) -> [Gf; 3] {
        let (c, p) = self.common(p);
        [0, 1, 2].map(|i| c.partial(i).eval_in(&p.coords(), |v| *v))
    }

    /// Order of vanishing at `p`, in the affine chart of `p`'s normalized
    /// coordinate with `p` moved to the origin.
    pub fn multiplicity(&self, p: &ProjPoint) -> usize {
        self.local_at(p).order().unwrap_or(usize::MAX)
    }

    /// The dehomogenized equation at `p`, translated so that `p` is the origin.
    pub fn local_at(&self, p: &ProjPoint) -> Poly2 {
        let (c, p) = self.common(p);
        let ch = p.chart();
        let others: Vec<usize> = (0..3).filter(|&i| i != ch).collect();
        let k = p.field_degree();
        let mut f = Poly2::zero(k);
        for (e, coef) in &c.terms {
            f.add_term((e[others[0]] as u32, e[others[1]] as u32), *coef);
        }
        f.translate(p.coords()[others[0]], p.coords()[others[1]])
    }

    /// Jacobian criterion; also reports the multiplicity.
    pub fn is_singular_point(&self, p: &ProjPoint) -> Result<(bool, usize)> {
        if !self.contains(p) {
            return Err(Error::NotOnCurve(p.to_string()));
        }
        let singular = self.gradient(p).iter().all(|g| g.is_zero());
        Ok((singular, self.multiplicity(p)))
    }

    pub fn tangent_line(&self, p: &ProjPoint) -> Result<Line> {
        if !self.contains(p) {
            return Err(Error::NotOnCurve(p.to_string()));
        }
        let g = self.gradient(p);
        if g.iter().all(|v| v.is_zero()) {
            return Err(Error::SingularPoint(p.to_string()));
        }
        Ok(g)
    }

    /// `F(s*p + q)` as a polynomial in `s`.
    pub fn restrict(&self, p: &ProjPoint, q: &ProjPoint) -> GfPoly {
        let k = self.field_degree().max(p.field_degree()).max(q.field_degree());
        let c = self.embed(k);
        let (p, q) = (p.embed(k), q.embed(k));
        let lin: Vec<GfPoly> = (0..3)
            .map(|i| GfPoly::new(k, vec![q.coords()[i], p.coords()[i]]))
            .collect();
        let mut pows: Vec<Vec<GfPoly>> = lin.iter().map(|l| vec![GfPoly::one(k), l.clone()]).collect();
        let mut acc = GfPoly::zero(k);
        for (e, coef) in &c.terms {
            let mut term = GfPoly::constant(*coef);
            for i in 0..3 {
                while pows[i].len() <= e[i] as usize {
                    let next = pows[i].last().unwrap().clone() * lin[i].clone();
                    pows[i].push(next);
                }
                term = term * pows[i][e[i] as usize].clone();
            }
            acc = acc + term;
        }
        acc
    }

    /// Whether the line is a component of the curve.
    pub fn contains_line(&self, l: &Line) -> bool {
        let (p, q) = line_points(l);
        self.restrict(&p, &q).is_zero()
    }

    /// Intersection of the curve with a line, with multiplicities summing to
    /// the degree. Non-rational points are reported by degree only.
    pub fn line_intersection_profile(&self, l: &Line) -> Result<Profile> {
        let k = self.field_degree().max(l[0].degree());
        let curve = self.embed(k);
        let l = l.map(|v| v.embed(k));
        let (p, q) = line_points(&l);
        let f = curve.restrict(&p, &q);
        if f.is_zero() {
            return Err(Error::ComponentLine(format!("{l:?}")));
        }
        let mut entries = Vec::new();
        let at_inf = curve.degree as usize - f.degree().unwrap();
        if at_inf > 0 {
            entries.push(ProfileEntry { point: Some(p), degree: 1, multiplicity: at_inf });
        }
        for (part, mult) in f.squarefree_decomposition() {
            for (deg, prod) in part.distinct_degree_factorization() {
                if deg == 1 {
                    for s in prod.roots() {
                        let pt = ProjPoint::from_array([0, 1, 2].map(|i| s * p.coords()[i] + q.coords()[i]))
                            .unwrap();
                        entries.push(ProfileEntry { point: Some(pt), degree: 1, multiplicity: mult });
                    }
                } else {
                    for _ in 0..prod.degree().unwrap() / deg {
                        entries.push(ProfileEntry { point: None, degree: deg, multiplicity: mult });
                    }
                }
            }
        }
        Ok(Profile { entries })
    }

    /// The polynomial in `z` obtained by fixing `(x, y)`.
    fn z_slice(&self, x: Gf, y: Gf) -> GfPoly {
        let k = x.degree();
        let mut coeffs = vec![Gf::zero(k); self.degree as usize + 1];
        for (e, c) in &self.terms {
            coeffs[e[2] as usize] = coeffs[e[2] as usize] + *c * x.pow(e[0] as u64) * y.pow(e[1] as u64);
        }
        GfPoly::new(k, coeffs)
    }

    /// Slices of ℙ² by the lines through `(0 : 0 : 1)`: representatives
    /// `(x : 1)` and `(1 : 0)`.
    fn pencil_base(m: u8) -> Vec<(Gf, Gf)> {
        let mut base: Vec<(Gf, Gf)> = Gf::elements(m).map(|x| (x, Gf::one(m))).collect();
        base.push((Gf::one(m), Gf::zero(m)));
        base
    }

    /// All GF(2^m)-rational points, sorted.
    pub fn enumerate_points(&self, m: u8) -> Vec<ProjPoint> {
        let curve = self.embed(m);
        let mut pts: Vec<ProjPoint> = PlaneCurve::pencil_base(m)
            .into_par_iter()
            .flat_map_iter(|(x, y)| {
                let f = curve.z_slice(x, y);
                let zs: Vec<Gf> = if f.is_zero() { Gf::elements(m).collect() } else { f.roots() };
                zs.into_iter().map(move |z| ProjPoint::new(x, y, z).unwrap())
            })
            .collect();
        let origin = ProjPoint::new(Gf::zero(m), Gf::zero(m), Gf::one(m)).unwrap();
        if curve.contains(&origin) {
            pts.push(origin);
        }
        pts.sort();
        pts
    }

    /// Singular points over GF(2^m). Errors if a whole line through
    /// `(0 : 0 : 1)` is singular.
    pub fn singular_points(&self, m: u8) -> Result<Vec<ProjPoint>> {
        let curve = self.embed(m);
        let forms: Vec<PlaneCurve<Gf>> = std::iter::once(curve.clone())
            .chain((0..3).map(|i| curve.partial(i)))
            .filter(|f| !f.is_zero())
            .collect();
        let found: Vec<Result<Vec<ProjPoint>>> = PlaneCurve::pencil_base(m)
            .into_par_iter()
            .map(|(x, y)| {
                let g = forms
                    .iter()
                    .map(|f| f.z_slice(x, y))
                    .fold(GfPoly::zero(m), |acc, p| acc.gcd(&p));
                if g.is_zero() {
                    return Err(Error::NonIsolated(format!("singular along the line through ({x} : {y} : 0)")));
                }
                Ok(g.roots().into_iter().map(|z| ProjPoint::new(x, y, z).unwrap()).collect())
            })
            .collect();
        let mut pts = Vec::new();
        for r in found {
            pts.extend(r?);
        }
        let origin = ProjPoint::new(Gf::zero(m), Gf::zero(m), Gf::one(m)).unwrap();
        if forms.iter().all(|f| f.eval(&origin).is_zero()) {
            pts.push(origin);
        }
        pts.sort();
        Ok(pts)
    }

    /// A line over GF(2^m) contained in the curve, if there is one.
    pub fn find_line_component(&self, m: u8) -> Option<Line> {
        let curve = self.embed(m);
        all_lines(m).into_par_iter().find_first(|l| curve.contains_line(l))
    }

    /// Every line over GF(2^m) contained in the curve.
    pub fn line_components(&self, m: u8) -> Vec<Line> {
        let curve = self.embed(m);
        all_lines(m).into_par_iter().filter(|l| curve.contains_line(l)).collect()
    }

    /// Whether `l^2` divides the form: the form and all its partials vanish on `l`.
    pub fn has_double_line(&self, l: &Line) -> bool {
        let m = l[0].degree();
        let curve = self.embed(m);
        curve.contains_line(l)
            && (0..3).all(|i| {
                let d = curve.partial(i);
                d.is_zero() || d.contains_line(l)
            })
    }
}

impl<F: Ring + fmt::Display> fmt::Display for PlaneCurve<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let names = ["x", "y", "z"];
        let parts: Vec<String> = self
            .terms
            .iter()
            .rev()
            .map(|(e, c)| {
                let mono: Vec<String> = (0..3)
                    .filter(|&i| e[i] > 0)
                    .map(|i| if e[i] == 1 { names[i].to_string() } else { format!("{}^{}", names[i], e[i]) })
                    .collect();
                let cs = c.to_string();
                match (c.is_one(), mono.is_empty()) {
                    (true, false) => mono.join("*"),
                    (_, true) => cs,
                    (false, false) => {
                        let cs = if cs.contains(' ') { format!("({cs})") } else { cs };
                        format!("{cs}*{}", mono.join("*"))
                    }
                }
            })
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

impl<F: Ring + fmt::Display> fmt::Debug for PlaneCurve<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::VarCtx;

    fn curve(src: &str, k: u8) -> PlaneCurve {
        let ctx = VarCtx::new(&["x", "y", "z"]);
        PlaneCurve::from_mpoly(&MPoly::parse(&ctx, src).unwrap(), &[], k).unwrap()
    }

    #[test]
    fn line_has_q_plus_one_points() {
        let l = curve("x", 3);
        assert_eq!(l.enumerate_points(3).len(), 9);
    }

    #[test]
    fn cusp_profile_and_multiplicity() {
        let c = curve("y^2*z + x^3", 2);
        let o = ProjPoint::new(Gf::zero(2), Gf::zero(2), Gf::one(2)).unwrap();
        assert_eq!(c.is_singular_point(&o).unwrap(), (true, 2));
        // the cuspidal tangent y = 0 meets with multiplicity 3
        let prof = c.line_intersection_profile(&[Gf::zero(2), Gf::one(2), Gf::zero(2)]).unwrap();
        assert_eq!(prof.multiplicity_at(&o), 3);
        assert_eq!(c.singular_points(4).unwrap(), vec![o.embed(4)]);
    }

    #[test]
    fn component_line_is_rejected() {
        let c = curve("x*y*z", 1);
        assert!(c.line_intersection_profile(&[Gf::one(1), Gf::zero(1), Gf::zero(1)]).is_err());
        assert!(c.find_line_component(1).is_some());
    }

    #[test]
    fn profile_reports_non_rational_points() {
        // x^2 + xz + z^2 is irreducible over GF(2)
        let c = curve("x^2 + x*z + z^2", 1);
        let prof = c.line_intersection_profile(&[Gf::zero(1), Gf::one(1), Gf::zero(1)]).unwrap();
        assert_eq!(prof.entries, vec![ProfileEntry { point: None, degree: 2, multiplicity: 1 }]);
        assert_eq!(prof.multiplicities(), vec![1, 1]);
    }
}
