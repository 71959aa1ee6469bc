//! Counting polynomial functions.

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};

use crate::error::{domain, Result};
use crate::exec::{map_range, Execution};
use crate::orderings::generalized_factorial;
use crate::ring::{BaseElement, IdealGen, RingInstance};

use super::canonical::ann_modulus;
use super::mvpoly::{box_index, MultiIndex};
use super::spec::{lambda_bound, ProblemSpec};

/// Largest μ-box the counting routines will enumerate.
pub const MAX_BOX: usize = 1 << 24;

fn checked_box(dims: &[usize]) -> Result<usize> {
    dims.iter()
        .try_fold(1usize, |acc, &d| acc.checked_mul(d))
        .filter(|&n| n <= MAX_BOX)
        .map_or_else(|| domain("index box is too large to enumerate"), Ok)
}

fn product(parts: Vec<BigUint>) -> BigUint {
    parts.into_iter().fold(BigUint::one(), |acc, x| acc * x)
}

/// Number of polynomial functions `D/I_1 × ... × D/I_r -> D/J`: the product
/// over the μ-box of the index of the annihilator at each multi-index.
pub fn count(spec: &ProblemSpec) -> Result<BigUint> {
    count_with(spec, Execution::default())
}

pub fn count_with(spec: &ProblemSpec, exec: Execution) -> Result<BigUint> {
    let mu = spec.mu();
    let size = checked_box(mu)?;
    let parts = map_range(exec, size, |l| {
        let k = box_index(l, mu);
        let ann = ann_modulus(&k, spec)?;
        spec.instance().norm(&ann)
    });
    Ok(product(parts.into_iter().collect::<Result<Vec<_>>>()?))
}

/// The prime-power count for `I_1 = ... = I_r = J`, under both readings of
/// its index set.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PrimePowerCount {
    /// Product over every multi-index with a positive exponent.
    pub value: BigUint,
    /// Product over the lex interval below the lex-minimal tuple.
    pub lex_value: BigUint,
}

impl PrimePowerCount {
    pub fn readings_differ(&self) -> bool {
        self.value != self.lex_value
    }
}

/// `sum_{j>=1} floor(k / N^j)`, the exponent of `P` in `v_k(D/P^e)`.
fn legendre(k: usize, n: &BigUint) -> u64 {
    let k = BigUint::from(k);
    let mut total = 0u64;
    let mut power = n.clone();
    while power <= k {
        total += (&k / &power).to_u64().expect("small quotient");
        power *= n;
    }
    total
}

/// `prod_i prod_k N_i^{max(0, e_i - sum_l legendre(k_l))}` with `k` ranging
/// over `[0, kmax_i)^r`, `kmax_i` the least `k` whose own exponent reaches `e_i`.
pub fn count_prime_power(instance: &RingInstance, target: &IdealGen, arity: usize) -> Result<PrimePowerCount> {
    if arity == 0 {
        return domain("arity must be at least 1");
    }
    let factors = instance.factorize(target)?;
    let mut value = BigUint::one();
    let mut lex_value = BigUint::one();
    for (prime, e) in factors {
        let n = instance.norm(&prime)?;
        let e = u64::from(e);
        let mut kmax = 0usize;
        while legendre(kmax, &n) < e {
            kmax += 1;
        }
        let exps: Vec<u64> = (0..kmax).map(|k| legendre(k, &n)).collect();
        let dims = vec![kmax; arity];
        let size = checked_box(&dims)?;
        let mut total = 0u64;
        for l in 0..size {
            let k = box_index(l, &dims);
            let s: u64 = k.0.iter().map(|&c| exps[c]).sum();
            total += e.saturating_sub(s);
        }
        let lex_total: u64 = exps.iter().map(|&s| e.saturating_sub(s)).sum();
        value *= n.pow(total as u32);
        lex_value *= n.pow(lex_total as u32);
    }
    Ok(PrimePowerCount { value, lex_value })
}

/// `N(n_1, ..., n_r; m) = prod_k m / gcd(m, prod k_i!)` over the box
/// `k_i < min(n_i, λ(m))`, with `λ(m)` the least `k` such that `m | k!`.
pub fn count_chen(moduli: &[BigUint], m: &BigUint) -> Result<BigUint> {
    if moduli.is_empty() {
        return domain("at least one source modulus is required");
    }
    if m <= &BigUint::one() || moduli.iter().any(|n| n <= &BigUint::one()) {
        return domain("moduli must exceed 1");
    }
    let mut facts = vec![BigUint::one()];
    while !(facts.last().unwrap() % m).is_zero() || facts.len() == 1 {
        let k = facts.len();
        let next = facts.last().unwrap() * BigUint::from(k);
        facts.push(next);
    }
    let lambda = facts.len() - 1;
    let mu: Vec<usize> = moduli
        .iter()
        .map(|n| n.to_usize().map_or(lambda, |n| n.min(lambda)))
        .collect();
    let size = checked_box(&mu)?;
    let mut out = BigUint::one();
    for l in 0..size {
        let k = box_index(l, &mu);
        let prod = k.0.iter().fold(BigUint::one(), |acc, &c| acc * &facts[c]);
        out *= m / m.gcd(&prod);
    }
    Ok(out)
}

/// `N(f_1, ..., f_r; g) = prod_k q^{deg(g / gcd(g, prod w_{k_i}))}` over the
/// box `k_i < min(q^{deg f_i}, λ(g))`.
pub fn count_poly_ring(instance: &RingInstance, sources: &[BaseElement], target: &BaseElement) -> Result<BigUint> {
    let Some(field) = instance.field() else {
        return domain("count_poly_ring needs a polynomial ring");
    };
    if sources.is_empty() {
        return domain("at least one source polynomial is required");
    }
    let q = BigUint::from(field.order());
    let degree = |a: &BaseElement| -> Result<usize> {
        instance.check(a)?;
        match a.as_poly().and_then(|p| p.degree()) {
            Some(d) if d > 0 => Ok(d),
            _ => domain("polynomials must have positive degree"),
        }
    };
    degree(target)?;
    let lambda = lambda_bound(instance, &instance.ideal(target))?;
    let mu = sources
        .iter()
        .map(|f| {
            let d = degree(f)?;
            Ok(q.pow(d as u32).to_usize().map_or(lambda, |n| n.min(lambda)))
        })
        .collect::<Result<Vec<_>>>()?;
    let size = checked_box(&mu)?;
    let w: Vec<BaseElement> = (0..mu.iter().copied().max().unwrap_or(0))
        .map(|k| generalized_factorial(instance, k))
        .collect();
    let mut out = BigUint::one();
    for l in 0..size {
        let k = box_index(l, &mu);
        let prod = k.0.iter().fold(instance.one(), |acc, &c| instance.mul(&acc, &w[c]));
        let g = instance.gcd(target, &prod)?;
        let quotient = instance.exact_div(target, &g).expect("gcd divides g");
        let d = quotient.as_poly().and_then(|p| p.degree()).unwrap_or(0);
        out *= q.pow(d as u32);
    }
    Ok(out)
}

/// Multi-indices of the μ-box whose annihilator is proper, i.e. the terms
/// that can carry a nonzero canonical coefficient.
pub fn active_indices(spec: &ProblemSpec) -> Result<Vec<MultiIndex>> {
    let mu = spec.mu();
    let size = checked_box(mu)?;
    let mut out = Vec::new();
    for l in 0..size {
        let k = box_index(l, mu);
        if !ann_modulus(&k, spec)?.is_unit() {
            out.push(k);
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fqpoly::FqPoly;
    use proptest::prelude::*;

    fn big(n: u64) -> BigUint {
        BigUint::from(n)
    }

    fn chen(ns: &[u64], m: u64) -> BigUint {
        count_chen(&ns.iter().map(|&n| big(n)).collect::<Vec<_>>(), &big(m)).unwrap()
    }

    fn tpow(d: usize) -> BaseElement {
        BaseElement::Poly(FqPoly::monomial(d))
    }

    #[test]
    fn count_examples() {
        assert_eq!(count(&ProblemSpec::integers(&[4], 4).unwrap()).unwrap(), big(64));
        assert_eq!(count(&ProblemSpec::integers(&[2], 4).unwrap()).unwrap(), big(16));
        assert_eq!(count(&ProblemSpec::integers(&[6], 6).unwrap()).unwrap(), big(108));
        let f2 = RingInstance::poly_over_gf(2, 1).unwrap();
        let t2 = f2.ideal(&tpow(2));
        let spec = ProblemSpec::new(f2, vec![t2.clone()], t2).unwrap();
        assert_eq!(count(&spec).unwrap(), big(64));
    }

    #[test]
    fn sequential_and_parallel_agree() {
        let spec = ProblemSpec::integers(&[8, 9], 12).unwrap();
        assert_eq!(
            count_with(&spec, Execution::Sequential).unwrap(),
            count_with(&spec, Execution::Parallel).unwrap()
        );
    }

    #[test]
    fn chen_examples() {
        assert_eq!(chen(&[2, 2], 2), big(16));
        assert_eq!(chen(&[6], 6), big(108));
        assert_eq!(chen(&[4], 4), big(64));
        assert!(count_chen(&[], &big(4)).is_err());
        assert!(count_chen(&[big(1)], &big(4)).is_err());
    }

    #[test]
    fn poly_ring_examples() {
        let f2 = RingInstance::poly_over_gf(2, 1).unwrap();
        assert_eq!(count_poly_ring(&f2, &[tpow(1)], &tpow(2)).unwrap(), big(16));
        assert_eq!(count_poly_ring(&f2, &[tpow(2)], &tpow(2)).unwrap(), big(64));
        assert!(count_poly_ring(&RingInstance::integers(), &[tpow(1)], &tpow(2)).is_err());
    }

    #[test]
    fn prime_power_examples() {
        let r = RingInstance::integers();
        let c = count_prime_power(&r, &r.ideal(&BaseElement::int(4)), 1).unwrap();
        assert_eq!(c.value, big(64));
        assert!(!c.readings_differ());
        for p in [2u64, 3, 5, 7] {
            let c = count_prime_power(&r, &r.ideal(&BaseElement::int(p as i64)), 1).unwrap();
            assert_eq!(c.value, big(p).pow(p as u32));
        }
        let f2 = RingInstance::poly_over_gf(2, 1).unwrap();
        let c = count_prime_power(&f2, &f2.ideal(&tpow(2)), 1).unwrap();
        assert_eq!(c.value, big(64));
        let c = count_prime_power(&r, &r.ideal(&BaseElement::int(4)), 2).unwrap();
        assert_eq!(c.value, count(&ProblemSpec::integers(&[4, 4], 4).unwrap()).unwrap());
        assert!(c.readings_differ());
    }

    #[test]
    fn active_indices_for_four() {
        let spec = ProblemSpec::integers(&[4], 4).unwrap();
        let act: Vec<_> = active_indices(&spec).unwrap().into_iter().map(|k| k.0[0]).collect();
        assert_eq!(act, vec![0, 1, 2, 3]);
    }

    proptest! {
        #[test]
        fn count_matches_chen(ns in proptest::collection::vec(2u64..16, 1..3), m in 2u64..40) {
            let spec = ProblemSpec::integers(&ns, m).unwrap();
            prop_assert_eq!(count(&spec).unwrap(), chen(&ns, m));
        }

        #[test]
        fn count_matches_prime_power(m in 2u64..60, r in 1usize..3) {
            let spec = ProblemSpec::integers(&vec![m; r], m).unwrap();
            let rr = RingInstance::integers();
            let c = count_prime_power(&rr, &rr.ideal(&BaseElement::int(m as i64)), r).unwrap();
            prop_assert_eq!(count(&spec).unwrap(), c.value);
        }
    }
}
