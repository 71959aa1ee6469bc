//! P-orderings, associated P-sequences and factorial ideals.
//!
//! Valuations are taken in the residue ring `R = D/K`. For a prime `P` with
//! `P^e || K`, the `P`-part of an element of `R` lives in `D/P^e`, so an
//! exponent is either a finite `v < e` or [`Exponent::Infinite`] when the
//! element vanishes modulo `P^e`.

use std::fmt;

use crate::error::{domain, Result};
use crate::ring::{BaseElement, IdealGen, RingInstance};

/// Exponent of a prime in an ideal of `R`; `Infinite` marks the vanishing
/// `P`-primary component (the zero ideal of `D/P^e`).
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Exponent {
    Finite(u32),
    Infinite,
}

impl fmt::Display for Exponent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Exponent::Finite(v) => write!(f, "{v}"),
            Exponent::Infinite => write!(f, "inf"),
        }
    }
}

/// A finite prefix of an ordering of elements of the base domain.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OrderingSequence {
    pub instance: RingInstance,
    pub terms: Vec<BaseElement>,
}

impl OrderingSequence {
    /// The first `len` terms of the simultaneous ordering (natural order on
    /// `Z`, digit order on `F_q[t]`).
    pub fn simultaneous(instance: &RingInstance, len: usize) -> Self {
        OrderingSequence {
            instance: instance.clone(),
            terms: (0..len).map(|k| instance.simultaneous_term(k)).collect(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PSequence {
    pub prime: IdealGen,
    pub exponents: Vec<Exponent>,
}

/// `v_k(X)` as ideals of `R = D/K`, held by `gcd(generator, K)`; the zero
/// ideal of `R` is the one generated by `K`. Entries past the stored prefix
/// (`k >= |X|`) are the zero ideal.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FactorialSequence {
    pub modulus: IdealGen,
    pub values: Vec<IdealGen>,
}

impl FactorialSequence {
    pub fn get(&self, k: usize) -> &IdealGen {
        self.values.get(k).unwrap_or(&self.modulus)
    }
}

/// Term `k` of the simultaneous ordering.
pub fn simultaneous_term(instance: &RingInstance, k: usize) -> BaseElement {
    instance.simultaneous_term(k)
}

/// `w_k = prod_{j<k} (a_k - a_j)` along the simultaneous ordering; `k!` over
/// the integers.
pub fn generalized_factorial(instance: &RingInstance, k: usize) -> BaseElement {
    let ak = instance.simultaneous_term(k);
    (0..k).fold(instance.one(), |acc, j| {
        instance.mul(&acc, &instance.sub(&ak, &instance.simultaneous_term(j)))
    })
}

/// Precomputed generalized factorials `w_0, ..., w_{len-1}`.
#[derive(Clone, Debug)]
pub struct Factorials {
    values: Vec<BaseElement>,
}

impl Factorials {
    pub fn new(instance: &RingInstance, len: usize) -> Self {
        let values = if instance.is_integers() {
            let mut v = Vec::with_capacity(len);
            let mut acc = instance.one();
            for k in 0..len {
                if k > 0 {
                    acc = instance.mul(&acc, &instance.from_int(k as i64));
                }
                v.push(acc.clone());
            }
            v
        } else {
            (0..len).map(|k| generalized_factorial(instance, k)).collect()
        };
        Factorials { values }
    }

    pub fn get(&self, k: usize) -> &BaseElement {
        &self.values[k]
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }
}

/// `v_k(D/I)`: `<w_k>` for `k < |D/I|`, the zero ideal otherwise.
pub fn factorial_ideal(instance: &RingInstance, ideal: &IdealGen, k: usize) -> Result<IdealGen> {
    if ideal.is_zero() || ideal.is_unit() {
        return domain("factorial_ideal: ideal must be nonzero and proper");
    }
    let size = instance.norm(ideal)?;
    if num_bigint::BigUint::from(k) >= size {
        return Ok(instance.zero_ideal());
    }
    Ok(instance.ideal(&generalized_factorial(instance, k)))
}

fn is_prime_ideal(instance: &RingInstance, p: &IdealGen) -> Result<bool> {
    if p.is_zero() || p.is_unit() {
        return Ok(false);
    }
    let f = instance.factorize(p)?;
    Ok(f.len() == 1 && f[0].1 == 1)
}

/// Exponent of `P` in `a` viewed in `D/P^e`.
pub fn local_exponent(
    instance: &RingInstance,
    a: &BaseElement,
    prime: &BaseElement,
    e: u32,
) -> Exponent {
    match instance.valuation(a, prime) {
        Some(v) if v < e => Exponent::Finite(v),
        _ => Exponent::Infinite,
    }
}

/// Exponent of `P` in `K`, validating that `P` is a prime dividing `K`.
fn prime_exponent(instance: &RingInstance, prime: &IdealGen, modulus: &IdealGen) -> Result<u32> {
    instance.check_ideal(prime)?;
    instance.check_ideal(modulus)?;
    if modulus.is_zero() {
        return domain("modulus must be nonzero");
    }
    if !is_prime_ideal(instance, prime)? {
        return domain("P is not a prime ideal");
    }
    match instance.valuation(modulus.generator(), prime.generator()) {
        Some(e) if e > 0 => Ok(e),
        _ => domain("P does not divide K"),
    }
}

/// Greedy `P`-ordering of `X ⊆ D/K` starting at the element `0` when it
/// belongs to `X`, otherwise at `X[0]`.
pub fn greedy_p_ordering(
    instance: &RingInstance,
    set: &[BaseElement],
    prime: &IdealGen,
    modulus: &IdealGen,
    length: usize,
) -> Result<(OrderingSequence, PSequence)> {
    let first = set.iter().position(|x| x.is_zero()).unwrap_or(0);
    greedy_p_ordering_from(instance, set, prime, modulus, length, first)
}

/// Greedy `P`-ordering of `X ⊆ D/K` starting at `X[first]`. At each step
/// the unused element minimizing the `P`-exponent of the product of
/// differences is chosen, ties going to the smallest position in `X`.
/// Exponents at positions `>= |X|` are infinite.
pub fn greedy_p_ordering_from(
    instance: &RingInstance,
    set: &[BaseElement],
    prime: &IdealGen,
    modulus: &IdealGen,
    length: usize,
    first: usize,
) -> Result<(OrderingSequence, PSequence)> {
    if set.is_empty() {
        return domain("greedy_p_ordering: empty set");
    }
    if first >= set.len() {
        return domain("greedy_p_ordering: first element out of range");
    }
    let e = prime_exponent(instance, prime, modulus)?;
    let p = prime.generator();
    let local = instance.pow(p, e);
    let reduced: Vec<BaseElement> = set
        .iter()
        .map(|x| {
            instance.check(x)?;
            Ok(instance.rem(x, modulus.generator()))
        })
        .collect::<Result<_>>()?;
    {
        let mut sorted = reduced.clone();
        sorted.sort();
        sorted.dedup();
        if sorted.len() != reduced.len() {
            return domain("greedy_p_ordering: elements of X must be distinct modulo K");
        }
    }

    let n = set.len();
    let steps = length.min(n);
    let mut used = vec![false; n];
    // running product prod_{j<k} (x - b_j) mod P^e, per candidate
    let mut products: Vec<BaseElement> = vec![instance.one(); n];
    let mut terms = Vec::with_capacity(steps);
    let mut exponents = Vec::with_capacity(length);

    let mut choose = |idx: usize,
                      exponent: Exponent,
                      used: &mut Vec<bool>,
                      products: &mut Vec<BaseElement>| {
        used[idx] = true;
        terms.push(set[idx].clone());
        exponents.push(exponent);
        let b = &reduced[idx];
        for (x, prod) in reduced.iter().zip(products.iter_mut()) {
            *prod = instance.rem(&instance.mul(prod, &instance.sub(x, b)), &local);
        }
    };

    if steps > 0 {
        choose(first, Exponent::Finite(0), &mut used, &mut products);
    }
    for _ in 1..steps {
        let (idx, exponent) = (0..n)
            .filter(|&i| !used[i])
            .map(|i| (i, local_exponent(instance, &products[i], p, e)))
            .min_by_key(|&(i, ex)| (ex, i))
            .expect("an unused element remains");
        choose(idx, exponent, &mut used, &mut products);
    }
    exponents.resize(length, Exponent::Infinite);

    Ok((
        OrderingSequence {
            instance: instance.clone(),
            terms,
        },
        PSequence {
            prime: prime.clone(),
            exponents,
        },
    ))
}

/// The `P`-sequence of `X = residues_mod(I)` inside `D/K` read off the
/// simultaneous ordering: exponent of `P` in `w_k` for `k < |D/I|`.
pub fn simultaneous_p_sequence(
    instance: &RingInstance,
    ideal: &IdealGen,
    prime: &IdealGen,
    modulus: &IdealGen,
    length: usize,
) -> Result<PSequence> {
    let e = prime_exponent(instance, prime, modulus)?;
    let size = instance.norm_usize(ideal)?;
    let facts = Factorials::new(instance, length.min(size));
    let exponents = (0..length)
        .map(|k| {
            if k >= size {
                Exponent::Infinite
            } else {
                local_exponent(instance, facts.get(k), prime.generator(), e)
            }
        })
        .collect();
    Ok(PSequence {
        prime: prime.clone(),
        exponents,
    })
}

/// `v_k(D/I)` reduced into `R = D/K` along the simultaneous ordering.
pub fn factorial_sequence(
    instance: &RingInstance,
    ideal: &IdealGen,
    modulus: &IdealGen,
) -> Result<FactorialSequence> {
    let size = instance.norm_usize(ideal)?;
    let facts = Factorials::new(instance, size);
    let values = (0..size)
        .map(|k| instance.ideal_in_quotient(&instance.ideal(facts.get(k)), modulus))
        .collect::<Result<_>>()?;
    Ok(FactorialSequence {
        modulus: modulus.clone(),
        values,
    })
}

/// `v_k(X) = prod_P v_k(X, P)` computed from greedy `P`-orderings of `X`
/// for every prime factor `P` of `K`.
pub fn factorial_ideal_via_greedy(
    instance: &RingInstance,
    set: &[BaseElement],
    modulus: &IdealGen,
) -> Result<FactorialSequence> {
    let primes = instance.factorize(modulus)?;
    let n = set.len();
    let mut values = vec![instance.one(); n];
    for (prime, e) in &primes {
        let (_, seq) = greedy_p_ordering(instance, set, prime, modulus, n)?;
        for (v, ex) in values.iter_mut().zip(&seq.exponents) {
            let power = match ex {
                Exponent::Finite(x) => *x,
                Exponent::Infinite => *e,
            };
            *v = instance.mul(v, &instance.pow(prime.generator(), power));
        }
    }
    let values = values
        .iter()
        .map(|v| instance.ideal_in_quotient(&instance.ideal(v), modulus))
        .collect::<Result<_>>()?;
    Ok(FactorialSequence {
        modulus: modulus.clone(),
        values,
    })
}

/// A sequence `a_j` in `R` with `a_0 = 0` and `a_j = a_{l,j} (mod P_l^{e_l})`
/// for fixed greedy `P_l`-orderings `a_{l,j}` of `X`, glued by CRT.
pub fn crt_mixed_ordering(
    instance: &RingInstance,
    set: &[BaseElement],
    modulus: &IdealGen,
) -> Result<OrderingSequence> {
    if !set.iter().any(|x| x.is_zero()) {
        return domain("crt_mixed_ordering: X must contain 0");
    }
    let primes = instance.factorize(modulus)?;
    let n = set.len();
    let mut per_prime = Vec::with_capacity(primes.len());
    let mut local_moduli = Vec::with_capacity(primes.len());
    for (prime, e) in &primes {
        let (ord, _) = greedy_p_ordering(instance, set, prime, modulus, n)?;
        per_prime.push(ord.terms);
        local_moduli.push(instance.ideal(&instance.pow(prime.generator(), *e)));
    }
    let terms = (0..n)
        .map(|j| {
            let residues: Vec<BaseElement> = per_prime.iter().map(|t| t[j].clone()).collect();
            instance.crt_combine(&residues, &local_moduli)
        })
        .collect::<Result<_>>()?;
    Ok(OrderingSequence {
        instance: instance.clone(),
        terms,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fqpoly::FqPoly;
    use crate::field::GfElement;

    fn z(n: i64) -> BaseElement {
        BaseElement::int(n)
    }

    fn poly(digits: &[u32]) -> BaseElement {
        BaseElement::Poly(FqPoly::new(digits.iter().map(|&d| GfElement(d)).collect()))
    }

    fn fin(v: &[u32]) -> Vec<Exponent> {
        v.iter().map(|&x| Exponent::Finite(x)).collect()
    }

    #[test]
    fn greedy_examples() {
        let r = RingInstance::integers();
        let four = r.ideal(&z(4));
        let two = r.ideal(&z(2));
        let x: Vec<_> = (0..4).map(z).collect();
        let (ord, seq) = greedy_p_ordering(&r, &x, &two, &four, 4).unwrap();
        assert_eq!(ord.terms[0], z(0));
        // Z/4: exponent 2 of P=2 vanishes, so 0,0,1,1 stay finite
        assert_eq!(seq.exponents, fin(&[0, 0, 1, 1]));

        let (_, seq) = greedy_p_ordering(&r, &[z(0)], &two, &four, 1).unwrap();
        assert_eq!(seq.exponents, fin(&[0]));

        let (_, seq) = greedy_p_ordering(&r, &[z(0), z(2)], &two, &four, 2).unwrap();
        assert_eq!(seq.exponents, fin(&[0, 1]));

        let (_, seq) = greedy_p_ordering(&r, &[z(0), z(2)], &two, &four, 4).unwrap();
        assert_eq!(seq.exponents[2..], [Exponent::Infinite, Exponent::Infinite]);
    }

    #[test]
    fn greedy_rejects_bad_primes() {
        let r = RingInstance::integers();
        let x: Vec<_> = (0..4).map(z).collect();
        let twelve = r.ideal(&z(12));
        assert!(greedy_p_ordering(&r, &x, &r.ideal(&z(4)), &twelve, 4).is_err());
        assert!(greedy_p_ordering(&r, &x, &r.ideal(&z(5)), &twelve, 4).is_err());
        assert!(greedy_p_ordering(&r, &[], &r.ideal(&z(2)), &twelve, 1).is_err());
    }

    #[test]
    fn simultaneous_terms() {
        let r = RingInstance::integers();
        assert_eq!(simultaneous_term(&r, 7), z(7));
        let f2 = RingInstance::poly_over_gf(2, 1).unwrap();
        assert_eq!(simultaneous_term(&f2, 6), poly(&[0, 1, 1]));
        let f3 = RingInstance::poly_over_gf(3, 1).unwrap();
        assert_eq!(simultaneous_term(&f3, 5), poly(&[2, 1]));
    }

    #[test]
    fn generalized_factorial_examples() {
        let r = RingInstance::integers();
        assert_eq!(generalized_factorial(&r, 4), z(24));
        assert_eq!(generalized_factorial(&r, 0), z(1));
        let f2 = RingInstance::poly_over_gf(2, 1).unwrap();
        assert_eq!(generalized_factorial(&f2, 2), poly(&[0, 1, 1]));
        // t^2 (t^2+1)(t^2+t)(t^2+t+1), multiplied out term by term
        let factors = [
            poly(&[0, 0, 1]),
            poly(&[1, 0, 1]),
            poly(&[0, 1, 1]),
            poly(&[1, 1, 1]),
        ];
        let expected = factors
            .iter()
            .fold(f2.one(), |acc, f| f2.mul(&acc, f));
        assert_eq!(generalized_factorial(&f2, 4), expected);
        // degree 8 with t^3 as the lowest term: t^2 * t * (t+1) * ...
        assert_eq!(expected.as_poly().unwrap().degree(), Some(8));
    }

    #[test]
    fn integer_factorials_are_factorials() {
        let r = RingInstance::integers();
        let mut f = 1i64;
        for k in 0..=12 {
            if k > 0 {
                f *= k;
            }
            assert_eq!(generalized_factorial(&r, k as usize), z(f));
            assert_eq!(Factorials::new(&r, 13).get(k as usize), &z(f));
        }
    }

    #[test]
    fn factorial_ideal_examples() {
        let r = RingInstance::integers();
        let four = r.ideal(&z(4));
        assert_eq!(factorial_ideal(&r, &four, 3).unwrap(), r.ideal(&z(6)));
        assert!(factorial_ideal(&r, &four, 4).unwrap().is_zero());
        let f2 = RingInstance::poly_over_gf(2, 1).unwrap();
        let t2 = f2.ideal(&poly(&[0, 0, 1]));
        assert_eq!(
            factorial_ideal(&f2, &t2, 2).unwrap(),
            f2.ideal(&poly(&[0, 1, 1]))
        );
    }

    #[test]
    fn factorial_via_greedy_examples() {
        let r = RingInstance::integers();
        let four = r.ideal(&z(4));
        let x = r.residues_mod(&four).unwrap();
        let seq = factorial_ideal_via_greedy(&r, &x, &four).unwrap();
        let gens: Vec<_> = seq.values.iter().map(|v| v.generator().clone()).collect();
        assert_eq!(gens, vec![z(1), z(1), z(2), z(2)]);

        let six = r.ideal(&z(6));
        let x = r.residues_mod(&six).unwrap();
        let seq = factorial_ideal_via_greedy(&r, &x, &six).unwrap();
        let gens: Vec<_> = seq.values[..4].iter().map(|v| v.generator().clone()).collect();
        // v_3 = <6> is the zero ideal of Z/6
        assert_eq!(gens, vec![z(1), z(1), z(2), z(6)]);

        let seq = factorial_ideal_via_greedy(&r, &[z(0)], &six).unwrap();
        assert_eq!(seq.values, vec![r.unit_ideal()]);
    }

    #[test]
    fn crt_mixed_ordering_reproduces_factorials() {
        let r = RingInstance::integers();
        for k in [6i64, 10, 12] {
            let modulus = r.ideal(&z(k));
            let x = r.residues_mod(&modulus).unwrap();
            let mixed = crt_mixed_ordering(&r, &x, &modulus).unwrap();
            let greedy = factorial_ideal_via_greedy(&r, &x, &modulus).unwrap();
            assert_eq!(mixed.terms[0], z(0));
            for j in 0..x.len() {
                let prod = (0..j).fold(r.one(), |acc, i| {
                    r.mul(&acc, &r.sub(&mixed.terms[j], &mixed.terms[i]))
                });
                let ideal = r.ideal_in_quotient(&r.ideal(&prod), &modulus).unwrap();
                assert_eq!(&ideal, greedy.get(j), "K={k}, j={j}");
            }
        }
    }
}
