//! Conversion between the monomial basis and the falling-factorial basis
//! `(x)_k = prod_i prod_{j<k_i} (x_i - a_j)` built on the simultaneous
//! ordering `a_0 = 0, a_1, a_2, ...`.

use std::collections::BTreeMap;

use crate::ring::{BaseElement, RingInstance};

use super::mvpoly::{MultiIndex, MVPoly};

/// Newton coefficients of a univariate polynomial (constant term first) with
/// respect to the nodes `a_0, a_1, ...`, by repeated synthetic division by
/// `(x - a_j)`.
pub fn univariate_to_falling(instance: &RingInstance, coeffs: &[BaseElement]) -> Vec<BaseElement> {
    let mut current = coeffs.to_vec();
    let mut out = Vec::with_capacity(coeffs.len());
    let mut j = 0;
    while !current.is_empty() {
        let node = instance.simultaneous_term(j);
        // current = quotient * (x - node) + remainder
        let d = current.len() - 1;
        let mut quotient = vec![instance.zero(); d];
        let mut carry = current[d].clone();
        for i in (0..d).rev() {
            quotient[i] = carry.clone();
            carry = instance.add(&current[i], &instance.mul(&node, &carry));
        }
        out.push(carry);
        current = quotient;
        j += 1;
    }
    out
}

/// `F = sum_k b_k (x)_k`, returned as the map `k -> b_k` without zeros.
pub fn to_falling_basis(poly: &MVPoly) -> BTreeMap<MultiIndex, BaseElement> {
    let instance = poly.instance();
    let arity = poly.arity();
    let mut current: BTreeMap<MultiIndex, BaseElement> = poly.terms().clone();
    for var in 0..arity {
        // group by the exponents of the other variables
        let mut slices: BTreeMap<Vec<usize>, Vec<BaseElement>> = BTreeMap::new();
        for (k, c) in &current {
            let mut key = k.0.clone();
            let e = key[var];
            key[var] = 0;
            let slot = slices.entry(key).or_default();
            if slot.len() <= e {
                slot.resize(e + 1, instance.zero());
            }
            slot[e] = instance.add(&slot[e], c);
        }
        let mut next = BTreeMap::new();
        for (key, coeffs) in slices {
            for (e, b) in univariate_to_falling(instance, &coeffs).into_iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                let mut k = key.clone();
                k[var] = e;
                next.insert(MultiIndex(k), b);
            }
        }
        current = next;
    }
    current
}

/// `(x_i)_k` as a polynomial of the given arity.
pub fn falling_factorial(instance: &RingInstance, arity: usize, var: usize, k: usize) -> MVPoly {
    let x = MVPoly::variable(instance, arity, var);
    (0..k).fold(
        MVPoly::constant(instance, arity, instance.one()),
        |acc, j| {
            let shift = MVPoly::constant(instance, arity, instance.simultaneous_term(j));
            acc.mul(&x.sub(&shift))
        },
    )
}

/// Expands `sum_k b_k (x)_k` into the monomial basis.
pub fn from_falling_basis<'a>(
    instance: &RingInstance,
    arity: usize,
    terms: impl IntoIterator<Item = (&'a MultiIndex, &'a BaseElement)>,
) -> MVPoly {
    let mut cache: BTreeMap<(usize, usize), MVPoly> = BTreeMap::new();
    let mut out = MVPoly::zero(instance, arity);
    for (k, b) in terms {
        let mut term = MVPoly::constant(instance, arity, b.clone());
        for (var, &kv) in k.0.iter().enumerate() {
            if kv == 0 {
                continue;
            }
            let f = cache
                .entry((var, kv))
                .or_insert_with(|| falling_factorial(instance, arity, var, kv));
            term = term.mul(f);
        }
        out = out.add(&term);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::GfElement;
    use crate::fqpoly::FqPoly;
    use proptest::prelude::*;

    fn idx(v: &[usize]) -> MultiIndex {
        MultiIndex(v.to_vec())
    }

    #[test]
    fn x_squared_over_integers() {
        let r = RingInstance::integers();
        let x2 = MVPoly::variable(&r, 1, 0).pow(2);
        let fb = to_falling_basis(&x2);
        let expected: BTreeMap<_, _> = [
            (idx(&[1]), BaseElement::int(1)),
            (idx(&[2]), BaseElement::int(1)),
        ]
        .into_iter()
        .collect();
        assert_eq!(fb, expected);
    }

    #[test]
    fn constant_stays_constant() {
        let r = RingInstance::integers();
        let c = MVPoly::constant(&r, 2, BaseElement::int(-7));
        let fb = to_falling_basis(&c);
        assert_eq!(fb.len(), 1);
        assert_eq!(fb[&idx(&[0, 0])], BaseElement::int(-7));
    }

    #[test]
    fn x_squared_over_f2() {
        let r = RingInstance::poly_over_gf(2, 1).unwrap();
        let x2 = MVPoly::variable(&r, 1, 0).pow(2);
        let fb = to_falling_basis(&x2);
        let one = BaseElement::Poly(FqPoly::constant(GfElement::ONE));
        // x^2 = x(x+1) + x in characteristic 2
        assert_eq!(fb.get(&idx(&[1])), Some(&one));
        assert_eq!(fb.get(&idx(&[2])), Some(&one));
        assert_eq!(fb.len(), 2);
    }

    fn small_int_poly() -> impl Strategy<Value = Vec<(Vec<usize>, i64)>> {
        proptest::collection::vec((proptest::collection::vec(0usize..4, 2), -9i64..10), 0..6)
    }

    proptest! {
        #[test]
        fn falling_round_trip_integers(terms in small_int_poly()) {
            let r = RingInstance::integers();
            let p = MVPoly::from_terms(
                &r,
                2,
                terms.into_iter().map(|(k, c)| (MultiIndex(k), BaseElement::int(c))),
            );
            let fb = to_falling_basis(&p);
            prop_assert_eq!(from_falling_basis(&r, 2, fb.iter()), p);
        }

        #[test]
        fn falling_round_trip_f9(terms in proptest::collection::vec(
            (proptest::collection::vec(0usize..4, 2), proptest::collection::vec(0u32..9, 0..3)), 0..5)) {
            let r = RingInstance::poly_over_gf(3, 2).unwrap();
            let p = MVPoly::from_terms(
                &r,
                2,
                terms.into_iter().map(|(k, c)| {
                    (MultiIndex(k), BaseElement::Poly(FqPoly::new(c.into_iter().map(GfElement).collect())))
                }),
            );
            let fb = to_falling_basis(&p);
            prop_assert_eq!(from_falling_basis(&r, 2, fb.iter()), p);
        }
    }
}
