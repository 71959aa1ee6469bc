//! Exact arithmetic in the two base domains (`Z` and `F_q[t]`), their
//! quotients, ideal arithmetic, factorization, CRT and linear congruences.

use std::fmt;
use std::sync::Arc;

use num_bigint::{BigInt, BigUint, Sign};
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{domain, Error, Result};
use crate::field::{GaloisField, GfElement};
use crate::fqpoly::{self, FqPoly};

/// Largest quotient ring whose residues are materialized as a list.
pub const MAX_RESIDUES: u64 = 1 << 24;

/// The base Dedekind domain: the integers or `F_q[t]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum RingInstance {
    Integers,
    PolyOverGf(Arc<GaloisField>),
}

/// An element of the base domain.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum BaseElement {
    Int(BigInt),
    Poly(FqPoly),
}

impl BaseElement {
    pub fn int(n: impl Into<BigInt>) -> Self {
        BaseElement::Int(n.into())
    }

    pub fn as_int(&self) -> Option<&BigInt> {
        match self {
            BaseElement::Int(n) => Some(n),
            BaseElement::Poly(_) => None,
        }
    }

    pub fn as_poly(&self) -> Option<&FqPoly> {
        match self {
            BaseElement::Poly(p) => Some(p),
            BaseElement::Int(_) => None,
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            BaseElement::Int(n) => n.is_zero(),
            BaseElement::Poly(p) => p.is_zero(),
        }
    }
}

/// An ideal of the base domain, held by its normalized generator:
/// a nonnegative integer or a monic polynomial (or zero).
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct IdealGen(BaseElement);

impl IdealGen {
    pub fn generator(&self) -> &BaseElement {
        &self.0
    }

    pub fn into_generator(self) -> BaseElement {
        self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn is_unit(&self) -> bool {
        match &self.0 {
            BaseElement::Int(n) => n.is_one(),
            BaseElement::Poly(p) => p.degree() == Some(0),
        }
    }
}

impl fmt::Display for BaseElement {
    /// Debug-grade rendering: integers in decimal, polynomials as digit
    /// vectors. The CLI owns the user-facing syntax.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BaseElement::Int(n) => write!(f, "{n}"),
            BaseElement::Poly(p) => {
                let digits: Vec<u32> = p.coeffs().iter().map(|c| c.index()).collect();
                write!(f, "poly{digits:?}")
            }
        }
    }
}

macro_rules! both_ints {
    ($a:expr, $b:expr) => {
        match ($a, $b) {
            (BaseElement::Int(x), BaseElement::Int(y)) => (x, y),
            _ => panic!("integer instance received a polynomial element"),
        }
    };
}

macro_rules! both_polys {
    ($a:expr, $b:expr) => {
        match ($a, $b) {
            (BaseElement::Poly(x), BaseElement::Poly(y)) => (x, y),
            _ => panic!("polynomial instance received an integer element"),
        }
    };
}

fn one_poly(a: &BaseElement) -> &FqPoly {
    match a {
        BaseElement::Poly(p) => p,
        BaseElement::Int(_) => panic!("polynomial instance received an integer element"),
    }
}

fn one_int(a: &BaseElement) -> &BigInt {
    match a {
        BaseElement::Int(n) => n,
        BaseElement::Poly(_) => panic!("integer instance received a polynomial element"),
    }
}

impl RingInstance {
    pub fn integers() -> Self {
        RingInstance::Integers
    }

    /// `F_q[t]` with `q = p^s` and the canonical defining polynomial.
    pub fn poly_over_gf(p: u32, s: u32) -> Result<Self> {
        Ok(RingInstance::PolyOverGf(Arc::new(GaloisField::new(p, s)?)))
    }

    pub fn field(&self) -> Option<&GaloisField> {
        match self {
            RingInstance::Integers => None,
            RingInstance::PolyOverGf(f) => Some(f),
        }
    }

    pub fn is_integers(&self) -> bool {
        matches!(self, RingInstance::Integers)
    }

    /// Checks that `a` belongs to this instance (tag and coefficient range).
    pub fn check(&self, a: &BaseElement) -> Result<()> {
        match (self, a) {
            (RingInstance::Integers, BaseElement::Int(_)) => Ok(()),
            (RingInstance::PolyOverGf(f), BaseElement::Poly(p)) => {
                if p.coeffs().iter().any(|c| c.index() >= f.order()) {
                    return Err(Error::InstanceMismatch(
                        "polynomial coefficient outside the field".into(),
                    ));
                }
                Ok(())
            }
            (RingInstance::Integers, _) => Err(Error::InstanceMismatch(
                "expected an integer, got a polynomial".into(),
            )),
            (RingInstance::PolyOverGf(_), _) => Err(Error::InstanceMismatch(
                "expected a polynomial, got an integer".into(),
            )),
        }
    }

    pub fn check_ideal(&self, i: &IdealGen) -> Result<()> {
        self.check(i.generator())
    }

    pub fn zero(&self) -> BaseElement {
        match self {
            RingInstance::Integers => BaseElement::Int(BigInt::zero()),
            RingInstance::PolyOverGf(_) => BaseElement::Poly(FqPoly::zero()),
        }
    }

    pub fn one(&self) -> BaseElement {
        self.from_int(1)
    }

    /// Image of an integer in the domain.
    pub fn from_int(&self, n: i64) -> BaseElement {
        match self {
            RingInstance::Integers => BaseElement::Int(BigInt::from(n)),
            RingInstance::PolyOverGf(f) => BaseElement::Poly(FqPoly::constant(f.from_int(n))),
        }
    }

    /// The polynomial variable `t`; `None` over the integers.
    pub fn t(&self) -> Option<BaseElement> {
        match self {
            RingInstance::Integers => None,
            RingInstance::PolyOverGf(_) => Some(BaseElement::Poly(FqPoly::monomial(1))),
        }
    }

    pub fn add(&self, a: &BaseElement, b: &BaseElement) -> BaseElement {
        match self {
            RingInstance::Integers => {
                let (x, y) = both_ints!(a, b);
                BaseElement::Int(x + y)
            }
            RingInstance::PolyOverGf(f) => {
                let (x, y) = both_polys!(a, b);
                BaseElement::Poly(fqpoly::add(f, x, y))
            }
        }
    }

    pub fn sub(&self, a: &BaseElement, b: &BaseElement) -> BaseElement {
        match self {
            RingInstance::Integers => {
                let (x, y) = both_ints!(a, b);
                BaseElement::Int(x - y)
            }
            RingInstance::PolyOverGf(f) => {
                let (x, y) = both_polys!(a, b);
                BaseElement::Poly(fqpoly::sub(f, x, y))
            }
        }
    }

    pub fn neg(&self, a: &BaseElement) -> BaseElement {
        match self {
            RingInstance::Integers => BaseElement::Int(-one_int(a)),
            RingInstance::PolyOverGf(f) => BaseElement::Poly(fqpoly::neg(f, one_poly(a))),
        }
    }

    pub fn mul(&self, a: &BaseElement, b: &BaseElement) -> BaseElement {
        match self {
            RingInstance::Integers => {
                let (x, y) = both_ints!(a, b);
                BaseElement::Int(x * y)
            }
            RingInstance::PolyOverGf(f) => {
                let (x, y) = both_polys!(a, b);
                BaseElement::Poly(fqpoly::mul(f, x, y))
            }
        }
    }

    pub fn pow(&self, a: &BaseElement, mut e: u32) -> BaseElement {
        let mut result = self.one();
        let mut base = a.clone();
        while e > 0 {
            if e & 1 == 1 {
                result = self.mul(&result, &base);
            }
            e >>= 1;
            if e > 0 {
                base = self.mul(&base, &base);
            }
        }
        result
    }

    /// Euclidean division by a nonzero `b`. For integers the remainder is
    /// nonnegative and smaller than `|b|`; for polynomials its degree is
    /// below `deg b`.
    pub fn div_rem(&self, a: &BaseElement, b: &BaseElement) -> (BaseElement, BaseElement) {
        assert!(!b.is_zero(), "division by zero");
        match self {
            RingInstance::Integers => {
                let (x, y) = both_ints!(a, b);
                let r = x.mod_floor(&y.abs());
                let q = (x - &r) / y;
                (BaseElement::Int(q), BaseElement::Int(r))
            }
            RingInstance::PolyOverGf(f) => {
                let (x, y) = both_polys!(a, b);
                let (q, r) = fqpoly::divrem(f, x, y);
                (BaseElement::Poly(q), BaseElement::Poly(r))
            }
        }
    }

    /// Canonical residue of `a` modulo the nonzero `m`.
    pub fn rem(&self, a: &BaseElement, m: &BaseElement) -> BaseElement {
        self.div_rem(a, m).1
    }

    /// Reduction modulo an ideal; the zero ideal leaves `a` unchanged.
    pub fn reduce(&self, a: &BaseElement, ideal: &IdealGen) -> BaseElement {
        if ideal.is_zero() {
            a.clone()
        } else {
            self.rem(a, ideal.generator())
        }
    }

    /// `a / b` when `b` divides `a`.
    pub fn exact_div(&self, a: &BaseElement, b: &BaseElement) -> Option<BaseElement> {
        if b.is_zero() {
            return a.is_zero().then(|| self.zero());
        }
        let (q, r) = self.div_rem(a, b);
        r.is_zero().then_some(q)
    }

    /// Whether `d` divides `a`.
    pub fn divides(&self, d: &BaseElement, a: &BaseElement) -> bool {
        if d.is_zero() {
            a.is_zero()
        } else {
            self.rem(a, d).is_zero()
        }
    }

    /// Normalized associate: `|a|` for integers, the monic multiple for
    /// polynomials.
    pub fn normalize(&self, a: &BaseElement) -> BaseElement {
        match self {
            RingInstance::Integers => BaseElement::Int(one_int(a).abs()),
            RingInstance::PolyOverGf(f) => BaseElement::Poly(fqpoly::monic(f, one_poly(a))),
        }
    }

    pub fn ideal(&self, a: &BaseElement) -> IdealGen {
        IdealGen(self.normalize(a))
    }

    pub fn unit_ideal(&self) -> IdealGen {
        IdealGen(self.one())
    }

    pub fn zero_ideal(&self) -> IdealGen {
        IdealGen(self.zero())
    }

    fn gcd_raw(&self, a: &BaseElement, b: &BaseElement) -> BaseElement {
        match self {
            RingInstance::Integers => {
                let (x, y) = both_ints!(a, b);
                BaseElement::Int(x.gcd(y))
            }
            RingInstance::PolyOverGf(f) => {
                let (x, y) = both_polys!(a, b);
                let mut a = x.clone();
                let mut b = y.clone();
                while !b.is_zero() {
                    let (_, r) = fqpoly::divrem(f, &a, &b);
                    a = b;
                    b = r;
                }
                BaseElement::Poly(fqpoly::monic(f, &a))
            }
        }
    }

    /// Normalized greatest common divisor; `gcd(0, 0) = 0`.
    pub fn gcd(&self, a: &BaseElement, b: &BaseElement) -> Result<BaseElement> {
        self.check(a)?;
        self.check(b)?;
        Ok(self.gcd_raw(a, b))
    }

    /// Extended gcd: `(g, x, y)` with `a x + b y = g`, `g` normalized.
    pub fn ext_gcd(
        &self,
        a: &BaseElement,
        b: &BaseElement,
    ) -> (BaseElement, BaseElement, BaseElement) {
        let (mut r0, mut r1) = (a.clone(), b.clone());
        let (mut s0, mut s1) = (self.one(), self.zero());
        let (mut t0, mut t1) = (self.zero(), self.one());
        while !r1.is_zero() {
            let (q, r) = self.div_rem(&r0, &r1);
            let s = self.sub(&s0, &self.mul(&q, &s1));
            let t = self.sub(&t0, &self.mul(&q, &t1));
            r0 = std::mem::replace(&mut r1, r);
            s0 = std::mem::replace(&mut s1, s);
            t0 = std::mem::replace(&mut t1, t);
        }
        // scale so that the gcd is normalized
        let unit = match self {
            RingInstance::Integers => {
                if one_int(&r0).is_negative() {
                    self.from_int(-1)
                } else {
                    self.one()
                }
            }
            RingInstance::PolyOverGf(f) => {
                let lead = one_poly(&r0).leading();
                BaseElement::Poly(FqPoly::constant(f.inv(lead).unwrap_or(GfElement::ONE)))
            }
        };
        (
            self.mul(&r0, &unit),
            self.mul(&s0, &unit),
            self.mul(&t0, &unit),
        )
    }

    pub fn lcm(&self, a: &BaseElement, b: &BaseElement) -> BaseElement {
        if a.is_zero() || b.is_zero() {
            return self.zero();
        }
        let g = self.gcd_raw(a, b);
        let prod = self.mul(a, b);
        self.normalize(&self.exact_div(&prod, &g).expect("gcd divides the product"))
    }

    pub fn lcm_ideals<'a>(&self, ideals: impl IntoIterator<Item = &'a IdealGen>) -> IdealGen {
        let mut acc = self.one();
        for i in ideals {
            acc = self.lcm(&acc, i.generator());
        }
        IdealGen(acc)
    }

    /// `|D/I|` for a nonzero ideal.
    pub fn norm(&self, ideal: &IdealGen) -> Result<BigUint> {
        if ideal.is_zero() {
            return domain("the zero ideal has an infinite quotient");
        }
        Ok(match (self, ideal.generator()) {
            (RingInstance::Integers, BaseElement::Int(n)) => n.magnitude().clone(),
            (RingInstance::PolyOverGf(f), BaseElement::Poly(p)) => {
                BigUint::from(f.order()).pow(p.degree().unwrap_or(0) as u32)
            }
            _ => return Err(Error::InstanceMismatch("ideal generator".into())),
        })
    }

    /// `|D/I|` as a `usize`, for quotients small enough to enumerate.
    pub fn norm_usize(&self, ideal: &IdealGen) -> Result<usize> {
        let n = self.norm(ideal)?;
        match n.to_u64() {
            Some(v) if v <= MAX_RESIDUES => Ok(v as usize),
            _ => domain(format!("quotient of size {n} is too large to enumerate")),
        }
    }

    /// Term `k` of the simultaneous ordering: `k` itself over the integers,
    /// `sum a_{c_i} t^i` from the base-`q` digits `c_i` of `k` over `F_q[t]`.
    pub fn simultaneous_term(&self, k: usize) -> BaseElement {
        match self {
            RingInstance::Integers => BaseElement::Int(BigInt::from(k)),
            RingInstance::PolyOverGf(f) => {
                BaseElement::Poly(FqPoly::from_digit_index_usize(k, f.order()))
            }
        }
    }

    /// Inverse of [`simultaneous_term`](Self::simultaneous_term) on
    /// canonical residues (nonnegative integers, all polynomials).
    pub fn residue_index(&self, a: &BaseElement) -> Option<BigUint> {
        match (self, a) {
            (RingInstance::Integers, BaseElement::Int(n)) => n.to_biguint(),
            (RingInstance::PolyOverGf(f), BaseElement::Poly(p)) => Some(p.digit_index(f.order())),
            _ => None,
        }
    }

    pub fn residue_index_usize(&self, a: &BaseElement) -> Option<usize> {
        self.residue_index(a).and_then(|n| n.to_usize())
    }

    fn check_proper(&self, ideal: &IdealGen, what: &str) -> Result<()> {
        self.check_ideal(ideal)?;
        if ideal.is_zero() {
            return domain(format!("{what}: zero ideal"));
        }
        if ideal.is_unit() {
            return domain(format!("{what}: unit ideal"));
        }
        Ok(())
    }

    /// The canonical complete residue system modulo `I`, in simultaneous
    /// ordering: `0, 1, ..., n-1`, or the polynomials of degree `< deg g`
    /// in digit order.
    pub fn residues_mod(&self, ideal: &IdealGen) -> Result<Vec<BaseElement>> {
        self.check_proper(ideal, "residues_mod")?;
        let n = self.norm_usize(ideal)?;
        Ok((0..n).map(|k| self.simultaneous_term(k)).collect())
    }

    /// Multiplicity of the prime `p` in the nonzero `a`; `None` for `a = 0`.
    pub fn valuation(&self, a: &BaseElement, prime: &BaseElement) -> Option<u32> {
        if a.is_zero() {
            return None;
        }
        let mut v = 0;
        let mut x = a.clone();
        loop {
            let (q, r) = self.div_rem(&x, prime);
            if !r.is_zero() {
                return Some(v);
            }
            v += 1;
            x = q;
        }
    }

    /// Prime factorization by trial division. Primes are normalized and
    /// sorted (by value, or by digit index for polynomials).
    pub fn factorize(&self, ideal: &IdealGen) -> Result<Vec<(IdealGen, u32)>> {
        self.check_proper(ideal, "factorize")?;
        let mut out = Vec::new();
        match self {
            RingInstance::Integers => {
                let mut n = one_int(ideal.generator()).magnitude().clone();
                let mut d = BigUint::from(2u32);
                while &d * &d <= n {
                    let mut e = 0;
                    while (&n % &d).is_zero() {
                        n /= &d;
                        e += 1;
                    }
                    if e > 0 {
                        out.push((IdealGen(BaseElement::Int(BigInt::from(d.clone()))), e));
                    }
                    d += 1u32;
                }
                if !n.is_one() {
                    out.push((IdealGen(BaseElement::Int(BigInt::from_biguint(Sign::Plus, n))), 1));
                }
            }
            RingInstance::PolyOverGf(f) => {
                let q = f.order() as usize;
                let mut g = one_poly(ideal.generator()).clone();
                let mut deg = 1usize;
                // trial division by every monic polynomial, degree by degree;
                // composite divisors never divide once their factors are gone
                while 2 * deg <= g.degree().unwrap_or(0) {
                    let count = q.pow(deg as u32);
                    for low in 0..count {
                        let mut coeffs = FqPoly::from_digit_index_usize(low, q as u32)
                            .coeffs()
                            .to_vec();
                        coeffs.resize(deg, GfElement::ZERO);
                        coeffs.push(GfElement::ONE);
                        let d = FqPoly::new(coeffs);
                        let mut e = 0;
                        loop {
                            let (quo, r) = fqpoly::divrem(f, &g, &d);
                            if !r.is_zero() {
                                break;
                            }
                            g = quo;
                            e += 1;
                        }
                        if e > 0 {
                            out.push((IdealGen(BaseElement::Poly(d)), e));
                        }
                    }
                    deg += 1;
                }
                if g.degree().unwrap_or(0) > 0 {
                    out.push((IdealGen(BaseElement::Poly(fqpoly::monic(f, &g))), 1));
                }
                out.sort();
            }
        }
        Ok(out)
    }

    /// The unique `x` modulo the product of the pairwise coprime `moduli`
    /// with `x = residues[l] (mod moduli[l])`, reduced.
    pub fn crt_combine(&self, residues: &[BaseElement], moduli: &[IdealGen]) -> Result<BaseElement> {
        if residues.len() != moduli.len() {
            return domain("crt_combine: residue and modulus lists differ in length");
        }
        let mut x = self.zero();
        let mut m = self.one();
        for (r, mi) in residues.iter().zip(moduli) {
            self.check(r)?;
            self.check_ideal(mi)?;
            if mi.is_zero() {
                return domain("crt_combine: zero modulus");
            }
            let mi = mi.generator();
            let (g, inv_m, _) = self.ext_gcd(&m, mi);
            if !self.ideal(&g).is_unit() {
                return domain("crt_combine: moduli are not pairwise coprime");
            }
            // x + m * ((r - x) * m^{-1} mod mi)
            let diff = self.sub(r, &x);
            let step = self.rem(&self.mul(&diff, &inv_m), mi);
            x = self.add(&x, &self.mul(&m, &step));
            m = self.mul(&m, mi);
            x = self.rem(&x, &m);
        }
        Ok(x)
    }

    /// The residue of the ideal `a` in `D/K`, i.e. `gcd(a, K)`.
    pub fn ideal_in_quotient(&self, a: &IdealGen, modulus: &IdealGen) -> Result<IdealGen> {
        self.check_ideal(a)?;
        self.check_ideal(modulus)?;
        if modulus.is_zero() {
            return domain("ideal_in_quotient: zero modulus");
        }
        Ok(IdealGen(self.gcd_raw(a.generator(), modulus.generator())))
    }

    /// Containment `<bigger> ⊇ <smaller>` of ideals of `D/K`.
    pub fn ideal_contains(
        &self,
        bigger: &IdealGen,
        smaller: &IdealGen,
        modulus: &IdealGen,
    ) -> Result<bool> {
        let b = self.ideal_in_quotient(bigger, modulus)?;
        let s = self.ideal_in_quotient(smaller, modulus)?;
        Ok(self.divides(b.generator(), s.generator()))
    }

    /// A solution of `c x = d (mod m)` in the canonical residue set, the one
    /// with the smallest residue index; `None` if unsolvable.
    pub fn solve_linear_congruence(
        &self,
        c: &BaseElement,
        d: &BaseElement,
        m: &IdealGen,
    ) -> Result<Option<BaseElement>> {
        self.check(c)?;
        self.check(d)?;
        self.check_ideal(m)?;
        if m.is_zero() {
            return domain("solve_linear_congruence: zero modulus");
        }
        let m = m.generator();
        let c = self.rem(c, m);
        let d = self.rem(d, m);
        let (g, x, _) = self.ext_gcd(&c, m);
        if g.is_zero() {
            // c = 0 and m = 0 cannot happen (m nonzero), so g is nonzero
            unreachable!("gcd with a nonzero modulus");
        }
        let Some(dg) = self.exact_div(&d, &g) else {
            return Ok(None);
        };
        let reduced = self.exact_div(m, &g).expect("gcd divides the modulus");
        // x is an inverse of c/g modulo m/g; the smallest solution lies below m/g
        Ok(Some(self.rem(&self.mul(&dg, &x), &reduced)))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn z(n: i64) -> BaseElement {
        BaseElement::int(n)
    }

    fn poly(r: &RingInstance, digits: &[u32]) -> BaseElement {
        let _ = r;
        BaseElement::Poly(FqPoly::new(digits.iter().map(|&d| GfElement(d)).collect()))
    }

    #[test]
    fn integer_gcd_examples() {
        let r = RingInstance::integers();
        assert_eq!(r.gcd(&z(12), &z(18)).unwrap(), z(6));
        assert_eq!(r.gcd(&z(0), &z(-7)).unwrap(), z(7));
        assert_eq!(r.gcd(&z(0), &z(0)).unwrap(), z(0));
    }

    #[test]
    fn polynomial_gcd_over_f2() {
        let r = RingInstance::poly_over_gf(2, 1).unwrap();
        // t^2 + t and t^2 share t
        let a = poly(&r, &[0, 1, 1]);
        let b = poly(&r, &[0, 0, 1]);
        assert_eq!(r.gcd(&a, &b).unwrap(), poly(&r, &[0, 1]));
    }

    #[test]
    fn mixed_instances_rejected() {
        let r = RingInstance::integers();
        let p = BaseElement::Poly(FqPoly::monomial(1));
        assert!(matches!(r.gcd(&z(2), &p), Err(Error::InstanceMismatch(_))));
    }

    #[test]
    fn factorize_examples() {
        let r = RingInstance::integers();
        assert_eq!(
            r.factorize(&r.ideal(&z(12))).unwrap(),
            vec![(r.ideal(&z(2)), 2), (r.ideal(&z(3)), 1)]
        );
        let f2 = RingInstance::poly_over_gf(2, 1).unwrap();
        let t = poly(&f2, &[0, 1]);
        let t1 = poly(&f2, &[1, 1]);
        assert_eq!(
            f2.factorize(&f2.ideal(&poly(&f2, &[0, 1, 1]))).unwrap(),
            vec![(f2.ideal(&t), 1), (f2.ideal(&t1), 1)]
        );
        assert_eq!(
            f2.factorize(&f2.ideal(&poly(&f2, &[1, 0, 1]))).unwrap(),
            vec![(f2.ideal(&t1), 2)]
        );
        assert!(r.factorize(&r.ideal(&z(1))).is_err());
        assert!(r.factorize(&r.ideal(&z(0))).is_err());
    }

    #[test]
    fn crt_examples() {
        let r = RingInstance::integers();
        let m = |n| r.ideal(&z(n));
        assert_eq!(r.crt_combine(&[z(1), z(2)], &[m(2), m(3)]).unwrap(), z(5));
        assert_eq!(r.crt_combine(&[z(0)], &[m(7)]).unwrap(), z(0));
        assert!(r.crt_combine(&[z(1), z(2)], &[m(4), m(6)]).is_err());

        let f2 = RingInstance::poly_over_gf(2, 1).unwrap();
        let t = f2.ideal(&poly(&f2, &[0, 1]));
        let t1 = f2.ideal(&poly(&f2, &[1, 1]));
        let x = f2
            .crt_combine(&[f2.one(), poly(&f2, &[0, 1])], &[t.clone(), t1.clone()])
            .unwrap();
        assert_eq!(f2.rem(&x, t.generator()), f2.one());
        assert_eq!(f2.rem(&x, t1.generator()), f2.one());
        assert_eq!(x, f2.one());
    }

    #[test]
    fn residues_examples() {
        let r = RingInstance::integers();
        assert_eq!(
            r.residues_mod(&r.ideal(&z(4))).unwrap(),
            vec![z(0), z(1), z(2), z(3)]
        );
        let f2 = RingInstance::poly_over_gf(2, 1).unwrap();
        let t2 = f2.ideal(&poly(&f2, &[0, 0, 1]));
        assert_eq!(
            f2.residues_mod(&t2).unwrap(),
            vec![
                f2.zero(),
                f2.one(),
                poly(&f2, &[0, 1]),
                poly(&f2, &[1, 1])
            ]
        );
        let f3 = RingInstance::poly_over_gf(3, 1).unwrap();
        let t = f3.ideal(&poly(&f3, &[0, 1]));
        assert_eq!(
            f3.residues_mod(&t).unwrap(),
            vec![f3.zero(), f3.one(), poly(&f3, &[2])]
        );
        assert!(r.residues_mod(&r.ideal(&z(1))).is_err());
    }

    #[test]
    fn ideal_in_quotient_examples() {
        let r = RingInstance::integers();
        let k = r.ideal(&z(4));
        assert_eq!(r.ideal_in_quotient(&r.ideal(&z(8)), &k).unwrap(), k);
        assert_eq!(
            r.ideal_in_quotient(&r.ideal(&z(6)), &k).unwrap(),
            r.ideal(&z(2))
        );
        // <2>^2 = <2>^3 in Z/4
        assert!(r.ideal_contains(&r.ideal(&z(8)), &r.ideal(&z(4)), &k).unwrap());
        assert!(r.ideal_contains(&r.ideal(&z(4)), &r.ideal(&z(8)), &k).unwrap());
        assert!(!r.ideal_contains(&r.ideal(&z(4)), &r.ideal(&z(2)), &k).unwrap());

        let f2 = RingInstance::poly_over_gf(2, 1).unwrap();
        let t2 = f2.ideal(&poly(&f2, &[0, 0, 1]));
        let t3 = f2.ideal(&poly(&f2, &[0, 0, 0, 1]));
        assert_eq!(f2.ideal_in_quotient(&t3, &t2).unwrap(), t2);
    }

    #[test]
    fn congruence_examples() {
        let r = RingInstance::integers();
        let four = r.ideal(&z(4));
        assert_eq!(r.solve_linear_congruence(&z(2), &z(1), &four).unwrap(), None);
        assert_eq!(
            r.solve_linear_congruence(&z(2), &z(2), &four).unwrap(),
            Some(z(1))
        );
        let f2 = RingInstance::poly_over_gf(2, 1).unwrap();
        let t = poly(&f2, &[0, 1]);
        let t2t = poly(&f2, &[0, 1, 1]);
        let t2 = f2.ideal(&poly(&f2, &[0, 0, 1]));
        // exhaustive oracle over the four residues mod t^2
        let sols: Vec<_> = f2
            .residues_mod(&t2)
            .unwrap()
            .into_iter()
            .filter(|x| f2.rem(&f2.sub(&f2.mul(&t, x), &t2t), t2.generator()).is_zero())
            .collect();
        assert_eq!(sols, vec![f2.one(), poly(&f2, &[1, 1])]);
        assert_eq!(
            f2.solve_linear_congruence(&t, &t2t, &t2).unwrap(),
            Some(sols[0].clone())
        );
    }
}
