//! Table-driven arithmetic in the finite field `F_q`, `q = p^s`.
//!
//! Elements are identified by their index in `0..q`. The base-`p` digits of
//! the index, least significant first, are the coordinates of the element in
//! the power basis `1, u, ..., u^(s-1)`, where `u` is a root of the defining
//! polynomial. Index 0 is zero and index 1 is one.

use std::fmt;

use crate::error::{domain, Result};

/// Largest field order for which the operation tables are built.
pub const MAX_FIELD_ORDER: u32 = 1 << 10;

/// An element of `F_q`, stored as its enumeration index.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct GfElement(pub u32);

impl GfElement {
    pub const ZERO: GfElement = GfElement(0);
    pub const ONE: GfElement = GfElement(1);

    pub fn index(self) -> u32 {
        self.0
    }

    pub fn is_zero(self) -> bool {
        self.0 == 0
    }
}

pub struct GaloisField {
    p: u32,
    s: u32,
    q: u32,
    /// Monic irreducible of degree `s` over `F_p`, constant term first.
    defining: Vec<u32>,
    add: Vec<u32>,
    mul: Vec<u32>,
    neg: Vec<u32>,
    inv: Vec<u32>,
}

impl fmt::Debug for GaloisField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("GaloisField")
            .field("p", &self.p)
            .field("s", &self.s)
            .field("defining", &self.defining)
            .finish()
    }
}

impl PartialEq for GaloisField {
    fn eq(&self, other: &Self) -> bool {
        self.p == other.p && self.s == other.s && self.defining == other.defining
    }
}

impl Eq for GaloisField {}

pub(crate) fn is_prime_u32(n: u32) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u32;
    while d.saturating_mul(d) <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

// Dense polynomial helpers over F_p, constant term first.

fn fp_trim(mut a: Vec<u32>) -> Vec<u32> {
    while a.last() == Some(&0) {
        a.pop();
    }
    a
}

fn fp_rem(a: &[u32], m: &[u32], p: u32) -> Vec<u32> {
    let mut r = fp_trim(a.to_vec());
    let dm = m.len() - 1;
    let lead_inv = fp_inv(m[dm], p);
    while r.len() > dm {
        let shift = r.len() - 1 - dm;
        let factor = (r[r.len() - 1] * lead_inv) % p;
        for (i, &c) in m.iter().enumerate() {
            let idx = shift + i;
            r[idx] = (r[idx] + p - (factor * c) % p) % p;
        }
        r = fp_trim(r);
    }
    r
}

fn fp_inv(a: u32, p: u32) -> u32 {
    // p is prime and small; Fermat
    let mut result = 1u64;
    let mut base = a as u64 % p as u64;
    let mut e = p - 2;
    while e > 0 {
        if e & 1 == 1 {
            result = result * base % p as u64;
        }
        base = base * base % p as u64;
        e >>= 1;
    }
    result as u32
}

fn fp_mul(a: &[u32], b: &[u32], p: u32) -> Vec<u32> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![0u32; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        for (j, &y) in b.iter().enumerate() {
            out[i + j] = (out[i + j] + x * y) % p;
        }
    }
    fp_trim(out)
}

/// Monic polynomial of degree `deg` whose lower coefficients are the base-`p`
/// digits of `code`, constant term as the most significant digit.
fn monic_from_lex_code(code: u64, deg: u32, p: u32) -> Vec<u32> {
    let mut coeffs = vec![0u32; deg as usize + 1];
    let mut c = code;
    for i in (0..deg as usize).rev() {
        coeffs[i] = (c % p as u64) as u32;
        c /= p as u64;
    }
    coeffs[deg as usize] = 1;
    coeffs
}

fn fp_is_irreducible(f: &[u32], p: u32) -> bool {
    let deg = (f.len() - 1) as u32;
    if deg <= 1 {
        return deg == 1;
    }
    for d in 1..=deg / 2 {
        let count = (p as u64).pow(d);
        for code in 0..count {
            let g = monic_from_lex_code(code, d, p);
            if fp_rem(f, &g, p).is_empty() {
                return false;
            }
        }
    }
    true
}

/// The lexicographically smallest monic irreducible of degree `s` over `F_p`,
/// coefficients compared from the constant term up.
pub fn smallest_irreducible(p: u32, s: u32) -> Vec<u32> {
    let count = (p as u64).pow(s);
    (0..count)
        .map(|code| monic_from_lex_code(code, s, p))
        .find(|f| fp_is_irreducible(f, p))
        .expect("an irreducible of every degree exists over F_p")
}

impl GaloisField {
    /// `F_{p^s}` with the canonical defining polynomial.
    pub fn new(p: u32, s: u32) -> Result<Self> {
        if !is_prime_u32(p) {
            return domain(format!("characteristic {p} is not prime"));
        }
        if s == 0 {
            return domain("extension degree must be at least 1");
        }
        Self::check_order(p, s)?;
        let defining = smallest_irreducible(p, s);
        Self::with_defining(p, s, defining)
    }

    fn check_order(p: u32, s: u32) -> Result<u32> {
        match p.checked_pow(s) {
            Some(q) if q <= MAX_FIELD_ORDER => Ok(q),
            _ => domain(format!(
                "field order {p}^{s} exceeds the supported maximum {MAX_FIELD_ORDER}"
            )),
        }
    }

    /// `F_{p^s}` with an explicit defining polynomial (constant term first,
    /// monic, degree `s`). Irreducibility is checked exhaustively.
    pub fn with_defining(p: u32, s: u32, defining: Vec<u32>) -> Result<Self> {
        if !is_prime_u32(p) {
            return domain(format!("characteristic {p} is not prime"));
        }
        let q = Self::check_order(p, s)?;
        if defining.len() != s as usize + 1
            || defining[s as usize] != 1
            || defining.iter().any(|&c| c >= p)
        {
            return domain("defining polynomial must be monic of degree s with coefficients in [0, p)");
        }
        if !fp_is_irreducible(&defining, p) {
            return domain("defining polynomial is not irreducible over F_p");
        }

        let coords = |idx: u32| -> Vec<u32> {
            let mut v = Vec::with_capacity(s as usize);
            let mut x = idx;
            for _ in 0..s {
                v.push(x % p);
                x /= p;
            }
            fp_trim(v)
        };
        let index_of = |c: &[u32]| -> u32 { c.iter().rev().fold(0, |acc, &d| acc * p + d) };

        let n = q as usize;
        let mut add = vec![0u32; n * n];
        let mut mul = vec![0u32; n * n];
        let mut neg = vec![0u32; n];
        let mut inv = vec![0u32; n];
        let all: Vec<Vec<u32>> = (0..q).map(coords).collect();
        for a in 0..n {
            let ca = &all[a];
            let mut na = vec![0u32; s as usize];
            for (i, &c) in ca.iter().enumerate() {
                na[i] = (p - c) % p;
            }
            neg[a] = index_of(&fp_trim(na));
            for b in 0..n {
                let cb = &all[b];
                let mut sum = vec![0u32; s as usize];
                for (i, slot) in sum.iter_mut().enumerate() {
                    let x = ca.get(i).copied().unwrap_or(0);
                    let y = cb.get(i).copied().unwrap_or(0);
                    *slot = (x + y) % p;
                }
                add[a * n + b] = index_of(&fp_trim(sum));
                let prod = fp_rem(&fp_mul(ca, cb, p), &defining, p);
                mul[a * n + b] = index_of(&prod);
            }
        }
        for a in 1..n {
            inv[a] = (1..n)
                .find(|&b| mul[a * n + b] == 1)
                .expect("nonzero elements of a field are invertible") as u32;
        }

        Ok(GaloisField {
            p,
            s,
            q,
            defining,
            add,
            mul,
            neg,
            inv,
        })
    }

    pub fn characteristic(&self) -> u32 {
        self.p
    }

    pub fn degree(&self) -> u32 {
        self.s
    }

    pub fn order(&self) -> u32 {
        self.q
    }

    pub fn defining_poly(&self) -> &[u32] {
        &self.defining
    }

    /// Element with the given enumeration index; `None` if out of range.
    pub fn element(&self, index: u32) -> Option<GfElement> {
        (index < self.q).then_some(GfElement(index))
    }

    /// Power-basis coordinates (exactly `s` residues mod `p`).
    pub fn coords(&self, a: GfElement) -> Vec<u32> {
        let mut v = Vec::with_capacity(self.s as usize);
        let mut x = a.0;
        for _ in 0..self.s {
            v.push(x % self.p);
            x /= self.p;
        }
        v
    }

    pub fn from_coords(&self, coords: &[u32]) -> Option<GfElement> {
        if coords.len() > self.s as usize || coords.iter().any(|&c| c >= self.p) {
            return None;
        }
        Some(GfElement(
            coords.iter().rev().fold(0, |acc, &d| acc * self.p + d),
        ))
    }

    /// The field generator `u`, a root of the defining polynomial. Only
    /// meaningful for proper extensions (`s > 1`).
    pub fn generator(&self) -> Option<GfElement> {
        (self.s > 1).then_some(GfElement(self.p))
    }

    #[inline]
    pub fn add(&self, a: GfElement, b: GfElement) -> GfElement {
        GfElement(self.add[(a.0 * self.q + b.0) as usize])
    }

    #[inline]
    pub fn mul(&self, a: GfElement, b: GfElement) -> GfElement {
        GfElement(self.mul[(a.0 * self.q + b.0) as usize])
    }

    #[inline]
    pub fn neg(&self, a: GfElement) -> GfElement {
        GfElement(self.neg[a.0 as usize])
    }

    #[inline]
    pub fn sub(&self, a: GfElement, b: GfElement) -> GfElement {
        self.add(a, self.neg(b))
    }

    /// Multiplicative inverse; `None` for zero.
    pub fn inv(&self, a: GfElement) -> Option<GfElement> {
        (!a.is_zero()).then(|| GfElement(self.inv[a.0 as usize]))
    }

    /// Image of an integer under `Z -> F_p -> F_q`.
    pub fn from_int(&self, n: i64) -> GfElement {
        GfElement(n.rem_euclid(self.p as i64) as u32)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn canonical_defining_polynomials() {
        assert_eq!(smallest_irreducible(2, 1), vec![0, 1]);
        // t^2 + t + 1 is the only irreducible quadratic over F_2
        assert_eq!(smallest_irreducible(2, 2), vec![1, 1, 1]);
        // reading from the constant term, t^3 + t^2 + 1 (1,0,1) precedes t^3 + t + 1 (1,1,0)
        assert_eq!(smallest_irreducible(2, 3), vec![1, 0, 1, 1]);
        // t^2 + 1 over F_3: constant 1 wins over constant 2 candidates
        assert_eq!(smallest_irreducible(3, 2), vec![1, 0, 1]);
    }

    #[test]
    fn field_axioms_exhaustive_f4_f9() {
        for (p, s) in [(2, 2), (3, 2), (2, 3), (5, 1)] {
            let f = GaloisField::new(p, s).unwrap();
            let q = f.order();
            for a in 0..q {
                let a = GfElement(a);
                assert_eq!(f.add(a, f.neg(a)), GfElement::ZERO);
                assert_eq!(f.mul(a, GfElement::ONE), a);
                if !a.is_zero() {
                    assert_eq!(f.mul(a, f.inv(a).unwrap()), GfElement::ONE);
                }
                for b in 0..q {
                    let b = GfElement(b);
                    assert_eq!(f.mul(a, b), f.mul(b, a));
                    for c in 0..q {
                        let c = GfElement(c);
                        assert_eq!(
                            f.mul(a, f.add(b, c)),
                            f.add(f.mul(a, b), f.mul(a, c))
                        );
                        assert_eq!(f.mul(a, f.mul(b, c)), f.mul(f.mul(a, b), c));
                    }
                }
            }
        }
    }

    #[test]
    fn f4_generator_satisfies_defining_polynomial() {
        let f = GaloisField::new(2, 2).unwrap();
        let u = f.generator().unwrap();
        // u^2 + u + 1 = 0
        let val = f.add(f.add(f.mul(u, u), u), GfElement::ONE);
        assert!(val.is_zero());
        assert_eq!(f.coords(u), vec![0, 1]);
    }

    #[test]
    fn rejects_bad_parameters() {
        assert!(GaloisField::new(4, 1).is_err());
        assert!(GaloisField::new(2, 0).is_err());
        assert!(GaloisField::with_defining(2, 2, vec![1, 0, 1]).is_err());
        assert!(GaloisField::new(2, 20).is_err());
    }
}
