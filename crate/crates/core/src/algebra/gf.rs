//! The finite fields GF(2^k), 1 <= k <= 32.
//!
//! An element is a residue polynomial over GF(2) modulo the lexicographically
//! least irreducible polynomial of degree `k`, packed into a `u32`. The
//! generator (the class of the indeterminate) is printed as `w`.

use std::collections::HashMap;
use std::fmt;
use std::ops::{Add, Mul};
use std::sync::{Mutex, OnceLock};

use super::field::{Field, Ring};
use super::poly::GfPoly;

pub const MAX_DEGREE: u8 = 32;

/// Least irreducible polynomial of each degree 1..=32, bit `i` = coefficient
/// of `x^i`.
pub(crate) const MODULI: [u64; 32] = [
    0x2, 0x7, 0xb, 0x13, 0x25, 0x43, 0x83, 0x11b, 0x203, 0x409, 0x805, 0x1009, 0x201b,
    0x4021, 0x8003, 0x1002b, 0x20009, 0x40009, 0x80027, 0x100009, 0x200005, 0x400003,
    0x800021, 0x100001b, 0x2000009, 0x400001b, 0x8000027, 0x10000003, 0x20000005,
    0x40000003, 0x80000009, 0x10000008d,
];

/// The fixed modulus for GF(2^k).
pub fn modulus(k: u8) -> u64 {
    assert!((1..=MAX_DEGREE).contains(&k), "unsupported field degree {k}");
    MODULI[k as usize - 1]
}

#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Gf {
    k: u8,
    v: u32,
}

fn mask(k: u8) -> u64 {
    (1u64 << k) - 1
}

fn clmul_reduce(a: u32, b: u32, k: u8) -> u32 {
    let m = modulus(k);
    let mut a = a as u64;
    let mut b = b as u64;
    let mut r = 0u64;
    while b != 0 {
        if b & 1 == 1 {
            r ^= a;
        }
        b >>= 1;
        a <<= 1;
        if (a >> k) & 1 == 1 {
            a ^= m;
        }
    }
    r as u32
}

impl Gf {
    pub fn new(k: u8, v: u32) -> Self {
        assert!((1..=MAX_DEGREE).contains(&k), "unsupported field degree {k}");
        assert!((v as u64) <= mask(k), "value {v:#x} out of range for GF(2^{k})");
        if k == 1 {
            // modulus x: the only residues are 0 and 1
            return Gf { k, v: v & 1 };
        }
        Gf { k, v }
    }

    pub fn zero(k: u8) -> Self {
        Gf::new(k, 0)
    }

    pub fn one(k: u8) -> Self {
        Gf::new(k, 1)
    }

    /// The class `w` of the indeterminate; `1` in GF(2).
    pub fn generator(k: u8) -> Self {
        if k == 1 {
            Gf::one(1)
        } else {
            Gf::new(k, 2)
        }
    }

    pub fn degree(&self) -> u8 {
        self.k
    }

    pub fn value(&self) -> u32 {
        self.v
    }

    pub fn field_size(k: u8) -> u64 {
        1u64 << k
    }

    /// All field elements, in increasing packed order.
    pub fn elements(k: u8) -> impl Iterator<Item = Gf> {
        (0..Gf::field_size(k)).map(move |v| Gf::new(k, v as u32))
    }

    pub fn nonzero_elements(k: u8) -> impl Iterator<Item = Gf> {
        (1..Gf::field_size(k)).map(move |v| Gf::new(k, v as u32))
    }

    pub fn random<R: rand::Rng + ?Sized>(k: u8, rng: &mut R) -> Self {
        Gf::new(k, (rng.gen::<u64>() & mask(k)) as u32)
    }

    pub fn random_nonzero<R: rand::Rng + ?Sized>(k: u8, rng: &mut R) -> Self {
        loop {
            let x = Gf::random(k, rng);
            if x.v != 0 {
                return x;
            }
        }
    }

    fn check(&self, other: &Gf) {
        assert_eq!(self.k, other.k, "mixed field degrees GF(2^{}) and GF(2^{})", self.k, other.k);
    }

    pub fn frobenius(&self) -> Gf {
        *self * *self
    }

    /// The square root `x^(2^(k-1))`.
    pub fn field_sqrt(&self) -> Gf {
        let mut r = *self;
        for _ in 1..self.k {
            r = r.frobenius();
        }
        r
    }

    /// Absolute trace to GF(2).
    pub fn trace(&self) -> bool {
        let mut acc = *self;
        let mut cur = *self;
        for _ in 1..self.k {
            cur = cur.frobenius();
            acc = acc + cur;
        }
        acc.v == 1
    }

    pub fn inverse(&self) -> Option<Gf> {
        if self.v == 0 {
            return None;
        }
        // x^(2^k - 2)
        let mut r = Gf::one(self.k);
        let mut cur = *self;
        for _ in 1..self.k {
            cur = cur.frobenius();
            r = r * cur;
        }
        Some(r)
    }

    /// Least `y` (by packed value) with `y^2 + y = c`, if any.
    ///
    /// `y ↦ y^2 + y` is GF(2)-linear, so this is Gaussian elimination on the
    /// `k x k` bit matrix of that map.
    pub fn solve_artin_schreier(c: Gf) -> Option<Gf> {
        let k = c.k;
        if k == 1 {
            return if c.v == 0 { Some(Gf::zero(1)) } else { None };
        }
        let n = k as usize;
        // rows of augmented system: for bit position r, sum_j M[r][j] y_j = c_r
        let cols: Vec<u32> = (0..n)
            .map(|j| {
                let e = Gf::new(k, 1 << j);
                (e * e + e).v
            })
            .collect();
        let mut rows: Vec<(u64, bool)> = (0..n)
            .map(|r| {
                let mut bits = 0u64;
                for (j, col) in cols.iter().enumerate() {
                    if (col >> r) & 1 == 1 {
                        bits |= 1 << j;
                    }
                }
                (bits, (c.v >> r) & 1 == 1)
            })
            .collect();
        let mut pivots = Vec::new();
        let mut row = 0;
        for col in (0..n).rev() {
            if let Some(p) = (row..n).find(|&i| (rows[i].0 >> col) & 1 == 1) {
                rows.swap(row, p);
                for i in 0..n {
                    if i != row && (rows[i].0 >> col) & 1 == 1 {
                        rows[i].0 ^= rows[row].0;
                        rows[i].1 ^= rows[row].1;
                    }
                }
                pivots.push((row, col));
                row += 1;
            }
        }
        if rows[row..].iter().any(|r| r.1) {
            return None;
        }
        // free variables set to zero gives the least solution since the
        // kernel is {0, 1} and bit 0 is the free column
        let mut y = 0u32;
        for (r, col) in pivots {
            if rows[r].1 {
                y |= 1 << col;
            }
        }
        let y = Gf::new(k, y);
        let alt = y + Gf::one(k);
        Some(if alt.v < y.v { alt } else { y })
    }

    /// The image of `self` under the fixed embedding GF(2^k) -> GF(2^m).
    ///
    /// Reads a polynomial expression in the generator `w`, e.g. `w^2 + 1`.
    pub fn parse(k: u8, src: &str) -> Result<Gf, crate::Error> {
        let w = Gf::generator(k);
        super::Expr::parse(src)?.eval(&Gf::one(k), &|s| (s == "w").then_some(w))
    }

    /// The embedding sends `w` to the least root of the degree-`k` modulus
    /// in GF(2^m); requires `k | m`.
    pub fn embed(&self, m: u8) -> Gf {
        if m == self.k {
            return *self;
        }
        assert!(m % self.k == 0, "GF(2^{}) does not embed in GF(2^{m})", self.k);
        let image = generator_image(self.k, m);
        let mut acc = Gf::zero(m);
        let mut pw = Gf::one(m);
        for i in 0..self.k {
            if (self.v >> i) & 1 == 1 {
                acc = acc + pw;
            }
            pw = pw * image;
        }
        acc
    }
}

fn generator_image(k: u8, m: u8) -> Gf {
    static CACHE: OnceLock<Mutex<HashMap<(u8, u8), u32>>> = OnceLock::new();
    let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
    if let Some(&v) = cache.lock().unwrap().get(&(k, m)) {
        return Gf::new(m, v);
    }
    let root = if k == 1 {
        Gf::one(m)
    } else {
        let bits = modulus(k);
        let coeffs: Vec<Gf> = (0..=k).map(|i| Gf::new(m, ((bits >> i) & 1) as u32)).collect();
        let poly = GfPoly::new(m, coeffs);
        *poly
            .roots()
            .iter()
            .min()
            .expect("irreducible modulus splits in its extension")
    };
    cache.lock().unwrap().insert((k, m), root.v);
    root
}

impl Add for Gf {
    type Output = Gf;
    fn add(self, rhs: Gf) -> Gf {
        self.check(&rhs);
        Gf { k: self.k, v: self.v ^ rhs.v }
    }
}

impl Mul for Gf {
    type Output = Gf;
    fn mul(self, rhs: Gf) -> Gf {
        self.check(&rhs);
        Gf { k: self.k, v: clmul_reduce(self.v, rhs.v, self.k) }
    }
}

impl Ring for Gf {
    fn zero_like(&self) -> Self {
        Gf::zero(self.k)
    }
    fn one_like(&self) -> Self {
        Gf::one(self.k)
    }
    fn is_zero(&self) -> bool {
        self.v == 0
    }
    fn unit_inverse(&self) -> Option<Self> {
        self.inverse()
    }
    fn sqrt(&self) -> Option<Self> {
        Some(self.field_sqrt())
    }
}

impl Field for Gf {}

impl fmt::Debug for Gf {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

impl fmt::Display for Gf {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.v == 0 {
            return write!(f, "0");
        }
        let mut first = true;
        for i in (0..self.k).rev() {
            if (self.v >> i) & 1 == 1 {
                if !first {
                    write!(f, " + ")?;
                }
                first = false;
                match i {
                    0 => write!(f, "1")?,
                    1 => write!(f, "w")?,
                    _ => write!(f, "w^{i}")?,
                }
            }
        }
        Ok(())
    }
}

impl serde::Serialize for Gf {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_literals() {
        assert_eq!(Gf::parse(2, "w^2 + w").unwrap(), Gf::one(2));
        assert_eq!(Gf::parse(3, "w + 1").unwrap(), Gf::generator(3) + Gf::one(3));
        assert!(Gf::parse(2, "t").is_err());
    }

    fn omega() -> Gf {
        Gf::generator(2)
    }

    #[test]
    fn gf4_omega_cubes_to_one() {
        let w = omega();
        assert_eq!(w * w * w, Gf::one(2));
        assert_eq!(w * w, w + Gf::one(2));
    }

    #[test]
    fn sqrt_examples() {
        assert_eq!(Gf::one(1).field_sqrt(), Gf::one(1));
        let w = omega();
        assert_eq!(w.field_sqrt(), w * w);
        for x in Gf::elements(3) {
            assert_eq!(x.field_sqrt() * x.field_sqrt(), x);
        }
    }

    #[test]
    fn sqrt_is_inverse_of_squaring_small_fields() {
        for k in 1..=4 {
            for x in Gf::elements(k) {
                let r = x.field_sqrt();
                assert_eq!(r * r, x);
                assert_eq!((x * x).field_sqrt(), x);
            }
        }
    }

    #[test]
    fn inverses() {
        for k in 1..=6 {
            for x in Gf::nonzero_elements(k) {
                assert_eq!(x * x.inverse().unwrap(), Gf::one(k));
            }
        }
        assert!(Gf::zero(4).inverse().is_none());
    }

    #[test]
    fn artin_schreier_matches_trace() {
        for k in 1..=6 {
            for c in Gf::elements(k) {
                match Gf::solve_artin_schreier(c) {
                    Some(y) => {
                        assert_eq!(y * y + y, c);
                        assert!(!c.trace());
                    }
                    None => assert!(c.trace()),
                }
            }
        }
    }

    #[test]
    fn embedding_is_a_ring_map() {
        for (k, m) in [(1, 4), (2, 4), (2, 8), (3, 6), (4, 8), (4, 16)] {
            for x in Gf::elements(k) {
                for y in Gf::elements(k).step_by(3) {
                    assert_eq!((x * y).embed(m), x.embed(m) * y.embed(m));
                    assert_eq!((x + y).embed(m), x.embed(m) + y.embed(m));
                }
            }
        }
    }

    #[test]
    fn display_uses_w() {
        assert_eq!(Gf::new(3, 0b101).to_string(), "w^2 + 1");
        assert_eq!(Gf::zero(3).to_string(), "0");
    }
}
