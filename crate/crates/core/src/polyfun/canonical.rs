//! Canonical representations of polynomial functions and their value tables.

use crate::error::{domain, Result};
use crate::exec::{map_range, Execution};
use crate::ring::{BaseElement, IdealGen};

use super::basis::{from_falling_basis, to_falling_basis};
use super::mvpoly::{box_index, MultiIndex, MVPoly};
use super::spec::ProblemSpec;

/// Exhaustive values of a function `D/I_1 × ... × D/I_r -> D/J` on the
/// canonical residues, in lex grid order (first variable most significant).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FunctionTable {
    pub spec: ProblemSpec,
    pub values: Vec<BaseElement>,
}

impl FunctionTable {
    /// Wraps raw values, reducing each modulo `J` and checking the length.
    pub fn new(spec: &ProblemSpec, values: Vec<BaseElement>) -> Result<Self> {
        let dims = spec.grid_dims()?;
        let expected: usize = dims.iter().product();
        if values.len() != expected {
            return domain(format!(
                "table has {} values, the grid has {expected} points",
                values.len()
            ));
        }
        let instance = spec.instance();
        let j = spec.target().generator();
        let values = values
            .iter()
            .map(|v| {
                instance.check(v)?;
                Ok(instance.rem(v, j))
            })
            .collect::<Result<_>>()?;
        Ok(FunctionTable {
            spec: spec.clone(),
            values,
        })
    }

    /// Residue indices of the values, the compact encoding used by the oracle.
    pub fn indices(&self) -> Vec<u32> {
        let instance = self.spec.instance();
        self.values
            .iter()
            .map(|v| instance.residue_index_usize(v).expect("reduced residue") as u32)
            .collect()
    }

    /// Grid point with the given linear index.
    pub fn point(&self, linear: usize) -> Result<Vec<BaseElement>> {
        grid_point(&self.spec, linear)
    }
}

pub(crate) fn grid_point(spec: &ProblemSpec, linear: usize) -> Result<Vec<BaseElement>> {
    let dims = spec.grid_dims()?;
    let k = box_index(linear, &dims);
    Ok(k.0
        .iter()
        .map(|&c| spec.instance().simultaneous_term(c))
        .collect())
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CanonicalTerm {
    pub index: MultiIndex,
    pub coefficient: BaseElement,
    /// Generator of `Ann_J(v_{k_1}(D/I_1) ... v_{k_r}(D/I_r))`.
    pub modulus: IdealGen,
}

/// The unique reduced falling-factorial representation of a polynomial
/// function: indices inside the μ-box, each coefficient the canonical residue
/// modulo its annihilator, zero terms omitted, lex-sorted.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CanonicalForm {
    pub spec: ProblemSpec,
    pub terms: Vec<CanonicalTerm>,
}

/// `J / gcd(J, prod_i w_{k_i})`, the generator of the annihilator of the
/// factorial ideal product at `k`.
pub fn ann_modulus(k: &MultiIndex, spec: &ProblemSpec) -> Result<IdealGen> {
    if k.arity() != spec.arity() {
        return domain("multi-index arity does not match the spec");
    }
    if k.0.iter().zip(spec.mu()).any(|(ki, mu)| ki >= mu) {
        return domain(format!("multi-index {k} lies outside the μ-box"));
    }
    let instance = spec.instance();
    let prod = k.0.iter().fold(instance.one(), |acc, &ki| {
        instance.mul(&acc, spec.factorial(ki))
    });
    let j = spec.target().generator();
    let g = instance.gcd(j, &prod)?;
    Ok(instance.ideal(&instance.exact_div(j, &g).expect("gcd divides J")))
}

fn check_arity(poly: &MVPoly, spec: &ProblemSpec) -> Result<()> {
    if poly.arity() != spec.arity() {
        return domain(format!(
            "polynomial has arity {}, spec has {} sources",
            poly.arity(),
            spec.arity()
        ));
    }
    if poly.instance() != spec.instance() {
        return Err(crate::Error::InstanceMismatch(
            "polynomial and spec use different rings".into(),
        ));
    }
    Ok(())
}

fn in_box(k: &MultiIndex, spec: &ProblemSpec) -> bool {
    k.0.iter().zip(spec.mu()).all(|(ki, mu)| ki < mu)
}

/// Reduces falling-basis coefficients to the canonical form.
pub fn canonicalize_falling(
    spec: &ProblemSpec,
    falling: impl IntoIterator<Item = (MultiIndex, BaseElement)>,
) -> Result<CanonicalForm> {
    let instance = spec.instance();
    let mut terms = Vec::new();
    for (k, b) in falling {
        if !in_box(&k, spec) {
            continue;
        }
        let modulus = ann_modulus(&k, spec)?;
        let coefficient = instance.rem(&b, modulus.generator());
        if coefficient.is_zero() {
            continue;
        }
        terms.push(CanonicalTerm {
            index: k,
            coefficient,
            modulus,
        });
    }
    terms.sort_by(|a, b| a.index.cmp(&b.index));
    Ok(CanonicalForm {
        spec: spec.clone(),
        terms,
    })
}

/// The canonical form of the function represented by `poly`.
pub fn canonicalize(poly: &MVPoly, spec: &ProblemSpec) -> Result<CanonicalForm> {
    check_arity(poly, spec)?;
    canonicalize_falling(spec, to_falling_basis(poly))
}

impl CanonicalForm {
    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// `sum b_k (x)_k` in the monomial basis.
    pub fn to_falling_poly(&self) -> MVPoly {
        from_falling_basis(
            self.spec.instance(),
            self.spec.arity(),
            self.terms.iter().map(|t| (&t.index, &t.coefficient)),
        )
    }

    /// Values on the full grid, computed from falling-factorial values at
    /// each residue.
    pub fn evaluate_table(&self, exec: Execution) -> Result<FunctionTable> {
        let spec = &self.spec;
        let instance = spec.instance();
        let j = spec.target().generator();
        let dims = spec.grid_dims()?;
        let falling = falling_values(spec)?;
        let size: usize = dims.iter().product();
        let values = map_range(exec, size, |linear| {
            let k = box_index(linear, &dims);
            let mut acc = instance.zero();
            for t in &self.terms {
                let mut term = t.coefficient.clone();
                for (var, (&c, &h)) in k.0.iter().zip(&t.index.0).enumerate() {
                    term = instance.rem(&instance.mul(&term, &falling[var][c][h]), j);
                }
                acc = instance.add(&acc, &term);
            }
            instance.rem(&acc, j)
        });
        Ok(FunctionTable {
            spec: spec.clone(),
            values,
        })
    }
}

/// `falling[i][c][h] = prod_{j<h} (c - a_j) mod J` for every residue `c` of
/// `D/I_i` and every `h < μ_i`.
pub(crate) fn falling_values(spec: &ProblemSpec) -> Result<Vec<Vec<Vec<BaseElement>>>> {
    let instance = spec.instance();
    let j = spec.target().generator();
    (0..spec.arity())
        .map(|i| {
            let mu = spec.mu()[i];
            let nodes: Vec<BaseElement> = (0..mu).map(|h| instance.simultaneous_term(h)).collect();
            Ok(spec
                .residues(i)?
                .iter()
                .map(|c| {
                    let mut row = Vec::with_capacity(mu);
                    let mut acc = instance.rem(&instance.one(), j);
                    for node in nodes.iter().take(mu) {
                        row.push(acc.clone());
                        acc = instance.rem(&instance.mul(&acc, &instance.sub(c, node)), j);
                    }
                    row
                })
                .collect())
        })
        .collect()
}

/// A monomial-basis representative `sum c_k x^k` with exponents inside the
/// μ-box and `c_k` reduced modulo the annihilator at `k`, obtained by peeling
/// off the leading term and re-canonicalizing the rest.
pub fn canonical_monomial(form: &CanonicalForm) -> Result<MVPoly> {
    let spec = &form.spec;
    let instance = spec.instance();
    let arity = spec.arity();
    let mut out = MVPoly::zero(instance, arity);
    let mut current = form.clone();
    while let Some(lead) = current.terms.last() {
        let lead_index = lead.index.clone();
        let monomial = MVPoly::monomial(instance, lead_index.clone(), lead.coefficient.clone());
        out.add_term(lead_index.clone(), lead.coefficient.clone());
        let rest = current.to_falling_poly().sub(&monomial);
        current = canonicalize(&rest, spec)?;
        if let Some(next) = current.terms.last() {
            assert!(next.index < lead_index, "leading index must decrease");
        }
    }
    Ok(out)
}

/// Values of `poly` on the full grid, reduced modulo `J`.
pub fn evaluate_table(poly: &MVPoly, spec: &ProblemSpec, exec: Execution) -> Result<FunctionTable> {
    check_arity(poly, spec)?;
    let dims = spec.grid_dims()?;
    let size: usize = dims.iter().product();
    let instance = spec.instance();
    let j = spec.target().generator();
    let values = map_range(exec, size, |linear| {
        let k = box_index(linear, &dims);
        let point: Vec<BaseElement> = k.0.iter().map(|&c| instance.simultaneous_term(c)).collect();
        poly.eval_mod(&point, j)
    });
    Ok(FunctionTable {
        spec: spec.clone(),
        values,
    })
}

/// Whether `f` and `g` represent the same polynomial function.
pub fn equivalent(f: &MVPoly, g: &MVPoly, spec: &ProblemSpec) -> Result<bool> {
    Ok(canonicalize(f, spec)? == canonicalize(g, spec)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::GfElement;
    use crate::fqpoly::FqPoly;
    use crate::ring::RingInstance;

    fn z(n: i64) -> BaseElement {
        BaseElement::int(n)
    }

    fn x(r: &RingInstance) -> MVPoly {
        MVPoly::variable(r, 1, 0)
    }

    fn ints(values: &[i64]) -> Vec<BaseElement> {
        values.iter().map(|&v| z(v)).collect()
    }

    #[test]
    fn ann_modulus_examples() {
        let spec = ProblemSpec::integers(&[4], 4).unwrap();
        assert_eq!(ann_modulus(&MultiIndex(vec![2]), &spec).unwrap().generator(), &z(2));
        assert!(ann_modulus(&MultiIndex(vec![4]), &spec).is_err());
        let spec = ProblemSpec::integers(&[2, 2], 2).unwrap();
        assert_eq!(ann_modulus(&MultiIndex(vec![1, 1]), &spec).unwrap().generator(), &z(2));

        let f2 = RingInstance::poly_over_gf(2, 1).unwrap();
        let t2 = f2.ideal(&BaseElement::Poly(FqPoly::monomial(2)));
        let spec = ProblemSpec::new(f2.clone(), vec![t2.clone()], t2).unwrap();
        assert_eq!(
            ann_modulus(&MultiIndex(vec![2]), &spec).unwrap().generator(),
            &BaseElement::Poly(FqPoly::monomial(1))
        );
    }

    #[test]
    fn canonicalize_x_squared_mod_4() {
        let r = RingInstance::integers();
        let spec = ProblemSpec::integers(&[4], 4).unwrap();
        let c = canonicalize(&x(&r).pow(2), &spec).unwrap();
        let summary: Vec<_> = c
            .terms
            .iter()
            .map(|t| (t.index.0.clone(), t.coefficient.clone(), t.modulus.generator().clone()))
            .collect();
        assert_eq!(
            summary,
            vec![(vec![1], z(1), z(4)), (vec![2], z(1), z(2))]
        );
        assert!(canonicalize(&MVPoly::zero(&r, 1), &spec).unwrap().is_zero());
    }

    #[test]
    fn canonical_form_preserves_table() {
        let r = RingInstance::integers();
        let spec = ProblemSpec::integers(&[4], 4).unwrap();
        let xx = x(&r);
        // x^4 + 2x^2 - x
        let f = xx
            .pow(4)
            .add(&xx.pow(2).scale(&z(2)))
            .sub(&xx);
        let c = canonicalize(&f, &spec).unwrap();
        let direct = evaluate_table(&f, &spec, Execution::Sequential).unwrap();
        assert_eq!(c.evaluate_table(Execution::Sequential).unwrap(), direct);
        let mono = canonical_monomial(&c).unwrap();
        assert_eq!(evaluate_table(&mono, &spec, Execution::Sequential).unwrap(), direct);
    }

    #[test]
    fn canonical_monomial_examples() {
        let r = RingInstance::integers();
        let spec = ProblemSpec::integers(&[4], 4).unwrap();
        let c = canonicalize(&x(&r).pow(2), &spec).unwrap();
        assert_eq!(canonical_monomial(&c).unwrap(), x(&r).pow(2));
        let empty = canonicalize(&MVPoly::zero(&r, 1), &spec).unwrap();
        assert!(canonical_monomial(&empty).unwrap().is_zero());
        let c = canonicalize(&MVPoly::constant(&r, 1, z(3)), &spec).unwrap();
        assert_eq!(canonical_monomial(&c).unwrap(), MVPoly::constant(&r, 1, z(3)));
    }

    #[test]
    fn evaluate_table_examples() {
        let r = RingInstance::integers();
        let spec = ProblemSpec::integers(&[4], 4).unwrap();
        let t = evaluate_table(&x(&r), &spec, Execution::Sequential).unwrap();
        assert_eq!(t.values, ints(&[0, 1, 2, 3]));
        let t = evaluate_table(&x(&r).pow(2), &spec, Execution::Parallel).unwrap();
        assert_eq!(t.values, ints(&[0, 1, 0, 1]));
        let spec = ProblemSpec::integers(&[4], 2).unwrap();
        let t = evaluate_table(&x(&r), &spec, Execution::Sequential).unwrap();
        assert_eq!(t.values, ints(&[0, 1, 0, 1]));
    }

    #[test]
    fn equivalence_examples() {
        let r = RingInstance::integers();
        let xx = x(&r);
        let spec4 = ProblemSpec::integers(&[4], 4).unwrap();
        let falling = xx.mul(&xx.sub(&MVPoly::constant(&r, 1, z(1)))).add(&xx);
        assert!(equivalent(&xx.pow(2), &falling, &spec4).unwrap());
        assert!(!equivalent(&xx.pow(2), &xx, &spec4).unwrap());
        let spec2 = ProblemSpec::integers(&[2], 2).unwrap();
        assert!(equivalent(&xx.pow(2), &xx, &spec2).unwrap());
    }

    #[test]
    fn arity_mismatch_rejected() {
        let r = RingInstance::integers();
        let spec = ProblemSpec::integers(&[4, 4], 4).unwrap();
        assert!(canonicalize(&x(&r), &spec).is_err());
        let f2 = RingInstance::poly_over_gf(2, 1).unwrap();
        let spec = ProblemSpec::integers(&[4], 4).unwrap();
        let p = MVPoly::constant(&f2, 1, BaseElement::Poly(FqPoly::constant(GfElement::ONE)));
        assert!(canonicalize(&p, &spec).is_err());
    }
}
