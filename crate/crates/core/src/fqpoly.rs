//! Dense univariate polynomials over `F_q`, the elements of `A = F_q[t]`.

use std::cmp::Ordering;

use num_bigint::BigUint;
use num_traits::{ToPrimitive, Zero};

use crate::field::{GaloisField, GfElement};

/// A polynomial in `t`, lowest degree first, without trailing zeros.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct FqPoly(Vec<GfElement>);

/// Orders polynomials by their digit index: degree first, then coefficient
/// indices from the top down. This is the enumeration order of residues.
impl Ord for FqPoly {
    fn cmp(&self, other: &Self) -> Ordering {
        self.0
            .len()
            .cmp(&other.0.len())
            .then_with(|| self.0.iter().rev().cmp(other.0.iter().rev()))
    }
}

impl PartialOrd for FqPoly {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl FqPoly {
    pub fn new(mut coeffs: Vec<GfElement>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        FqPoly(coeffs)
    }

    pub fn zero() -> Self {
        FqPoly(Vec::new())
    }

    pub fn constant(c: GfElement) -> Self {
        FqPoly::new(vec![c])
    }

    /// `t^n`.
    pub fn monomial(n: usize) -> Self {
        let mut v = vec![GfElement::ZERO; n + 1];
        v[n] = GfElement::ONE;
        FqPoly(v)
    }

    pub fn coeffs(&self) -> &[GfElement] {
        &self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    /// Degree, with `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.0.len().checked_sub(1)
    }

    pub fn leading(&self) -> GfElement {
        self.0.last().copied().unwrap_or(GfElement::ZERO)
    }

    pub fn is_monic(&self) -> bool {
        self.leading() == GfElement::ONE
    }

    /// The polynomial whose coefficients are the base-`q` digits of `k`.
    pub fn from_digit_index(k: &BigUint, q: u32) -> Self {
        if k.is_zero() {
            return FqPoly::zero();
        }
        FqPoly::new(
            k.to_radix_le(q)
                .into_iter()
                .map(|d| GfElement(d as u32))
                .collect(),
        )
    }

    pub fn from_digit_index_usize(k: usize, q: u32) -> Self {
        let mut v = Vec::new();
        let mut x = k;
        let q = q as usize;
        while x > 0 {
            v.push(GfElement((x % q) as u32));
            x /= q;
        }
        FqPoly(v)
    }

    pub fn digit_index(&self, q: u32) -> BigUint {
        self.0
            .iter()
            .rev()
            .fold(BigUint::zero(), |acc, c| acc * q + c.index())
    }

    pub fn digit_index_usize(&self, q: u32) -> Option<usize> {
        self.digit_index(q).to_usize()
    }
}

pub(crate) fn add(f: &GaloisField, a: &FqPoly, b: &FqPoly) -> FqPoly {
    let n = a.0.len().max(b.0.len());
    let mut out = Vec::with_capacity(n);
    for i in 0..n {
        let x = a.0.get(i).copied().unwrap_or_default();
        let y = b.0.get(i).copied().unwrap_or_default();
        out.push(f.add(x, y));
    }
    FqPoly::new(out)
}

pub(crate) fn neg(f: &GaloisField, a: &FqPoly) -> FqPoly {
    FqPoly(a.0.iter().map(|&c| f.neg(c)).collect())
}

pub(crate) fn sub(f: &GaloisField, a: &FqPoly, b: &FqPoly) -> FqPoly {
    let n = a.0.len().max(b.0.len());
    let mut out = Vec::with_capacity(n);
    for i in 0..n {
        let x = a.0.get(i).copied().unwrap_or_default();
        let y = b.0.get(i).copied().unwrap_or_default();
        out.push(f.sub(x, y));
    }
    FqPoly::new(out)
}

pub(crate) fn scale(f: &GaloisField, c: GfElement, a: &FqPoly) -> FqPoly {
    if c.is_zero() {
        return FqPoly::zero();
    }
    FqPoly::new(a.0.iter().map(|&x| f.mul(c, x)).collect())
}

pub(crate) fn mul(f: &GaloisField, a: &FqPoly, b: &FqPoly) -> FqPoly {
    if a.is_zero() || b.is_zero() {
        return FqPoly::zero();
    }
    let mut out = vec![GfElement::ZERO; a.0.len() + b.0.len() - 1];
    for (i, &x) in a.0.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, &y) in b.0.iter().enumerate() {
            out[i + j] = f.add(out[i + j], f.mul(x, y));
        }
    }
    FqPoly::new(out)
}

/// Quotient and remainder; `b` must be nonzero.
pub(crate) fn divrem(f: &GaloisField, a: &FqPoly, b: &FqPoly) -> (FqPoly, FqPoly) {
    let db = b.degree().expect("division by the zero polynomial");
    let lead_inv = f.inv(b.leading()).expect("nonzero leading coefficient");
    let mut r = a.0.clone();
    if r.len() <= db {
        return (FqPoly::zero(), a.clone());
    }
    let mut q = vec![GfElement::ZERO; r.len() - db];
    for shift in (0..q.len()).rev() {
        let top = r[shift + db];
        if top.is_zero() {
            continue;
        }
        let factor = f.mul(top, lead_inv);
        q[shift] = factor;
        for (i, &c) in b.0.iter().enumerate() {
            r[shift + i] = f.sub(r[shift + i], f.mul(factor, c));
        }
    }
    r.truncate(db);
    (FqPoly::new(q), FqPoly::new(r))
}

/// Scales to a monic polynomial (zero stays zero).
pub(crate) fn monic(f: &GaloisField, a: &FqPoly) -> FqPoly {
    match f.inv(a.leading()) {
        Some(inv) => scale(f, inv, a),
        None => FqPoly::zero(),
    }
}
