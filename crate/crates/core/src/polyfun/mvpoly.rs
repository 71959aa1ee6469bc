use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

use crate::ring::{BaseElement, RingInstance};

/// An exponent or falling-factorial index tuple. The derived ordering is the
/// lexicographic one: `k < h` iff they first differ at a position where `k`
/// is smaller.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct MultiIndex(pub Vec<usize>);

impl MultiIndex {
    pub fn zero(arity: usize) -> Self {
        MultiIndex(vec![0; arity])
    }

    pub fn arity(&self) -> usize {
        self.0.len()
    }

    pub fn components(&self) -> &[usize] {
        &self.0
    }

    /// Componentwise `self <= other`.
    pub fn dominated_by(&self, other: &MultiIndex) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    /// Lexicographic comparison, spelled out.
    pub fn lex_cmp(&self, other: &MultiIndex) -> Ordering {
        for (a, b) in self.0.iter().zip(&other.0) {
            match a.cmp(b) {
                Ordering::Equal => continue,
                ord => return ord,
            }
        }
        Ordering::Equal
    }
}

impl From<Vec<usize>> for MultiIndex {
    fn from(v: Vec<usize>) -> Self {
        MultiIndex(v)
    }
}

impl fmt::Display for MultiIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, k) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{k}")?;
        }
        write!(f, ")")
    }
}

/// Decodes the `linear`-th multi-index of the box `prod [0, dims[i])` in lex
/// order (first component most significant).
pub fn box_index(mut linear: usize, dims: &[usize]) -> MultiIndex {
    let mut out = vec![0; dims.len()];
    for (slot, &d) in out.iter_mut().zip(dims).rev() {
        *slot = linear % d;
        linear /= d;
    }
    MultiIndex(out)
}

/// All multi-indices of the box `prod [0, dims[i])`, in lex order.
pub fn box_indices(dims: &[usize]) -> impl Iterator<Item = MultiIndex> + '_ {
    let size: usize = dims.iter().product();
    (0..size).map(move |l| box_index(l, dims))
}

/// A sparse polynomial in `x_1, ..., x_r` with coefficients in the base
/// domain. Zero coefficients are never stored.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MVPoly {
    instance: RingInstance,
    arity: usize,
    terms: BTreeMap<MultiIndex, BaseElement>,
}

impl MVPoly {
    pub fn zero(instance: &RingInstance, arity: usize) -> Self {
        MVPoly {
            instance: instance.clone(),
            arity,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(instance: &RingInstance, arity: usize, c: BaseElement) -> Self {
        Self::monomial(instance, MultiIndex::zero(arity), c)
    }

    pub fn monomial(instance: &RingInstance, index: MultiIndex, c: BaseElement) -> Self {
        let mut p = Self::zero(instance, index.arity());
        p.add_term(index, c);
        p
    }

    /// The variable `x_{i+1}` (zero-based `i`).
    pub fn variable(instance: &RingInstance, arity: usize, i: usize) -> Self {
        assert!(i < arity, "variable index out of range");
        let mut k = vec![0; arity];
        k[i] = 1;
        Self::monomial(instance, MultiIndex(k), instance.one())
    }

    /// Builds a polynomial from `(index, coefficient)` pairs, merging repeats.
    pub fn from_terms(
        instance: &RingInstance,
        arity: usize,
        terms: impl IntoIterator<Item = (MultiIndex, BaseElement)>,
    ) -> Self {
        let mut p = Self::zero(instance, arity);
        for (k, c) in terms {
            p.add_term(k, c);
        }
        p
    }

    pub fn instance(&self) -> &RingInstance {
        &self.instance
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    pub fn terms(&self) -> &BTreeMap<MultiIndex, BaseElement> {
        &self.terms
    }

    pub fn into_terms(self) -> BTreeMap<MultiIndex, BaseElement> {
        self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coefficient(&self, k: &MultiIndex) -> BaseElement {
        self.terms
            .get(k)
            .cloned()
            .unwrap_or_else(|| self.instance.zero())
    }

    /// Lex-largest exponent with a nonzero coefficient.
    pub fn leading_index(&self) -> Option<&MultiIndex> {
        self.terms.keys().next_back()
    }

    pub fn add_term(&mut self, k: MultiIndex, c: BaseElement) {
        assert_eq!(k.arity(), self.arity, "arity mismatch");
        if c.is_zero() {
            return;
        }
        match self.terms.remove(&k) {
            Some(old) => {
                let sum = self.instance.add(&old, &c);
                if !sum.is_zero() {
                    self.terms.insert(k, sum);
                }
            }
            None => {
                self.terms.insert(k, c);
            }
        }
    }

    pub fn add(&self, other: &MVPoly) -> MVPoly {
        let mut out = self.clone();
        for (k, c) in &other.terms {
            out.add_term(k.clone(), c.clone());
        }
        out
    }

    pub fn neg(&self) -> MVPoly {
        MVPoly {
            instance: self.instance.clone(),
            arity: self.arity,
            terms: self
                .terms
                .iter()
                .map(|(k, c)| (k.clone(), self.instance.neg(c)))
                .collect(),
        }
    }

    pub fn sub(&self, other: &MVPoly) -> MVPoly {
        self.add(&other.neg())
    }

    pub fn scale(&self, c: &BaseElement) -> MVPoly {
        let mut out = Self::zero(&self.instance, self.arity);
        for (k, v) in &self.terms {
            out.add_term(k.clone(), self.instance.mul(c, v));
        }
        out
    }

    pub fn mul(&self, other: &MVPoly) -> MVPoly {
        assert_eq!(self.arity, other.arity, "arity mismatch");
        let mut out = Self::zero(&self.instance, self.arity);
        for (ka, ca) in &self.terms {
            for (kb, cb) in &other.terms {
                let k = MultiIndex(ka.0.iter().zip(&kb.0).map(|(a, b)| a + b).collect());
                out.add_term(k, self.instance.mul(ca, cb));
            }
        }
        out
    }

    pub fn pow(&self, mut e: u32) -> MVPoly {
        let mut result = Self::constant(&self.instance, self.arity, self.instance.one());
        let mut base = self.clone();
        while e > 0 {
            if e & 1 == 1 {
                result = result.mul(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base);
            }
        }
        result
    }

    /// Evaluates at a point of `D^r`, exactly.
    pub fn eval(&self, point: &[BaseElement]) -> BaseElement {
        assert_eq!(point.len(), self.arity, "point has the wrong arity");
        let r = &self.instance;
        let mut acc = r.zero();
        for (k, c) in &self.terms {
            let mut term = c.clone();
            for (x, &e) in point.iter().zip(&k.0) {
                if e > 0 {
                    term = r.mul(&term, &r.pow(x, e as u32));
                }
            }
            acc = r.add(&acc, &term);
        }
        acc
    }

    /// Evaluates at a point and reduces modulo the nonzero `m` at every step.
    pub fn eval_mod(&self, point: &[BaseElement], m: &BaseElement) -> BaseElement {
        assert_eq!(point.len(), self.arity, "point has the wrong arity");
        let r = &self.instance;
        let reduced: Vec<BaseElement> = point.iter().map(|x| r.rem(x, m)).collect();
        let mut acc = r.zero();
        for (k, c) in &self.terms {
            let mut term = r.rem(c, m);
            for (x, &e) in reduced.iter().zip(&k.0) {
                for _ in 0..e {
                    term = r.rem(&r.mul(&term, x), m);
                }
            }
            acc = r.rem(&r.add(&acc, &term), m);
        }
        acc
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn lex_order_examples() {
        let a = MultiIndex(vec![0, 5]);
        let b = MultiIndex(vec![1, 0]);
        assert!(a < b);
        assert_eq!(a.lex_cmp(&b), Ordering::Less);
        assert!(MultiIndex(vec![2, 1]) > MultiIndex(vec![2, 0]));
    }

    proptest! {
        #[test]
        fn derived_order_is_lex(a in proptest::collection::vec(0usize..4, 3),
                                b in proptest::collection::vec(0usize..4, 3)) {
            let (a, b) = (MultiIndex(a), MultiIndex(b));
            prop_assert_eq!(a.cmp(&b), a.lex_cmp(&b));
        }
    }

    #[test]
    fn box_enumeration_is_lex_sorted() {
        let dims = [3, 2, 2];
        let all: Vec<_> = box_indices(&dims).collect();
        assert_eq!(all.len(), 12);
        assert!(all.windows(2).all(|w| w[0] < w[1]));
        assert_eq!(all[0], MultiIndex(vec![0, 0, 0]));
        assert_eq!(all[11], MultiIndex(vec![2, 1, 1]));
    }

    #[test]
    fn arithmetic_and_evaluation() {
        let r = RingInstance::integers();
        let x = MVPoly::variable(&r, 2, 0);
        let y = MVPoly::variable(&r, 2, 1);
        // (x + y)^2 - x^2 - y^2 = 2xy
        let lhs = x.add(&y).pow(2).sub(&x.pow(2)).sub(&y.pow(2));
        let expected = MVPoly::monomial(&r, MultiIndex(vec![1, 1]), BaseElement::int(2));
        assert_eq!(lhs, expected);
        let v = lhs.eval(&[BaseElement::int(3), BaseElement::int(5)]);
        assert_eq!(v, BaseElement::int(30));
        let v = lhs.eval_mod(&[BaseElement::int(3), BaseElement::int(5)], &BaseElement::int(7));
        assert_eq!(v, BaseElement::int(2));
        assert!(x.sub(&x).is_zero());
    }
}
