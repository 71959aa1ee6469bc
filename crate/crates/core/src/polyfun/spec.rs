use std::sync::Arc;

use num_bigint::BigUint;
use num_traits::ToPrimitive;

use crate::error::{domain, Result};
use crate::orderings::{factorial_ideal, Factorials};
use crate::ring::{BaseElement, IdealGen, RingInstance, MAX_RESIDUES};

/// Smallest `k >= 1` with `J | w_k`. Always finite and at most `|D/J|`.
pub fn lambda_bound(instance: &RingInstance, target: &IdealGen) -> Result<usize> {
    instance.check_ideal(target)?;
    if target.is_zero() || target.is_unit() {
        return domain("lambda_bound: ideal must be nonzero and proper");
    }
    let j = target.generator();
    if instance.is_integers() {
        let mut fact = instance.one();
        let mut k = 1usize;
        loop {
            fact = instance.mul(&fact, &instance.from_int(k as i64));
            if instance.divides(j, &fact) {
                return Ok(k);
            }
            k += 1;
        }
    }
    let mut k = 1usize;
    loop {
        let w = crate::orderings::generalized_factorial(instance, k);
        if instance.divides(j, &w) {
            return Ok(k);
        }
        k += 1;
    }
}

/// `μ(I, J) = min(|D/I|, λ(J))`.
pub fn mu_bound(instance: &RingInstance, source: &IdealGen, target: &IdealGen) -> Result<usize> {
    instance.check_ideal(source)?;
    if source.is_zero() || source.is_unit() {
        return domain("mu_bound: source ideal must be nonzero and proper");
    }
    let lambda = lambda_bound(instance, target)?;
    let size = instance.norm(source)?;
    Ok(match size.to_usize() {
        Some(n) => n.min(lambda),
        None => lambda,
    })
}

/// `μ(I, J)` straight from its definition: the smallest `k >= 1` with
/// `v_k(D/I) ⊆ J̄` in `R = D/lcm(I, J)`.
pub fn mu_bound_by_definition(
    instance: &RingInstance,
    source: &IdealGen,
    target: &IdealGen,
) -> Result<usize> {
    let modulus = instance.ideal(&instance.lcm(source.generator(), target.generator()));
    let mut k = 1usize;
    loop {
        let v = factorial_ideal(instance, source, k)?;
        if instance.ideal_contains(target, &v, &modulus)? {
            return Ok(k);
        }
        k += 1;
    }
}

/// `λ(J)` straight from its definition through factorial ideals of `D/J`:
/// the smallest `k >= 1` with `v_k(D/J) ⊆ J̄`, where for `k >= |D/J|` the
/// ideal is zero. Agrees with [`lambda_bound`] since `λ(J) <= |D/J|`.
pub fn lambda_bound_by_definition(instance: &RingInstance, target: &IdealGen) -> Result<usize> {
    mu_bound_by_definition(instance, target, target)
}

#[derive(Debug)]
struct SpecInner {
    instance: RingInstance,
    sources: Vec<IdealGen>,
    target: IdealGen,
    modulus: IdealGen,
    mu: Vec<usize>,
    factorials: Factorials,
}

/// Sources `I_1, ..., I_r`, target `J`, and the derived `K = lcm` with the
/// μ-bounds and factorials cached. Cheap to clone.
#[derive(Clone, Debug)]
pub struct ProblemSpec(Arc<SpecInner>);

impl PartialEq for ProblemSpec {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.0, &other.0)
            || (self.0.instance == other.0.instance
                && self.0.sources == other.0.sources
                && self.0.target == other.0.target)
    }
}

impl Eq for ProblemSpec {}

impl ProblemSpec {
    pub fn new(instance: RingInstance, sources: Vec<IdealGen>, target: IdealGen) -> Result<Self> {
        if sources.is_empty() {
            return domain("at least one source ideal is required");
        }
        for (i, s) in sources.iter().enumerate() {
            instance.check_ideal(s)?;
            if s.is_zero() || s.is_unit() {
                return domain(format!("source ideal {} must be nonzero and proper", i + 1));
            }
        }
        instance.check_ideal(&target)?;
        if target.is_zero() || target.is_unit() {
            return domain("target ideal must be nonzero and proper");
        }
        let modulus = instance.lcm_ideals(sources.iter().chain(std::iter::once(&target)));
        let mu = sources
            .iter()
            .map(|s| mu_bound(&instance, s, &target))
            .collect::<Result<Vec<_>>>()?;
        let max_mu = mu.iter().copied().max().unwrap_or(1);
        let factorials = Factorials::new(&instance, max_mu);
        Ok(ProblemSpec(Arc::new(SpecInner {
            instance,
            sources,
            target,
            modulus,
            mu,
            factorials,
        })))
    }

    /// Integer spec from plain moduli.
    pub fn integers(sources: &[u64], target: u64) -> Result<Self> {
        let r = RingInstance::integers();
        let src = sources
            .iter()
            .map(|&n| r.ideal(&BaseElement::int(n)))
            .collect();
        let tgt = r.ideal(&BaseElement::int(target));
        Self::new(r, src, tgt)
    }

    pub fn instance(&self) -> &RingInstance {
        &self.0.instance
    }

    pub fn sources(&self) -> &[IdealGen] {
        &self.0.sources
    }

    pub fn target(&self) -> &IdealGen {
        &self.0.target
    }

    /// `K = lcm[I_1, ..., I_r, J]`.
    pub fn modulus(&self) -> &IdealGen {
        &self.0.modulus
    }

    pub fn arity(&self) -> usize {
        self.0.sources.len()
    }

    /// `μ(I_i, J)` for every source.
    pub fn mu(&self) -> &[usize] {
        &self.0.mu
    }

    /// `w_k` for `k < max μ`.
    pub fn factorial(&self, k: usize) -> &BaseElement {
        self.0.factorials.get(k)
    }

    /// Number of multi-indices in the μ-box.
    pub fn box_size(&self) -> usize {
        self.0.mu.iter().product()
    }

    pub fn source_sizes(&self) -> Result<Vec<BigUint>> {
        self.0
            .sources
            .iter()
            .map(|s| self.0.instance.norm(s))
            .collect()
    }

    pub fn target_size(&self) -> Result<BigUint> {
        self.0.instance.norm(&self.0.target)
    }

    /// Per-variable residue counts, when the full grid is enumerable.
    pub fn grid_dims(&self) -> Result<Vec<usize>> {
        let dims = self
            .0
            .sources
            .iter()
            .map(|s| self.0.instance.norm_usize(s))
            .collect::<Result<Vec<_>>>()?;
        let total = dims
            .iter()
            .try_fold(1u64, |acc, &d| acc.checked_mul(d as u64));
        match total {
            Some(t) if t <= MAX_RESIDUES => Ok(dims),
            _ => domain("evaluation grid is too large to enumerate"),
        }
    }

    pub fn residues(&self, i: usize) -> Result<Vec<BaseElement>> {
        self.0.instance.residues_mod(&self.0.sources[i])
    }
}
