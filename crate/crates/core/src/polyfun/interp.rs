//! Recovering a canonical form from a value table.

use std::collections::BTreeSet;
use std::fmt;

use crate::error::Result;
use crate::exec::Execution;
use crate::ring::{BaseElement, IdealGen};

use super::canonical::{
    canonicalize_falling, falling_values, grid_point, CanonicalForm, FunctionTable,
};
use super::mvpoly::{box_indices, MultiIndex};
use super::spec::ProblemSpec;

/// Whether every function `D/I_1 × ... × D/I_r -> D/J` is polynomial: the
/// residues of each `I_i` must stay pairwise distinct modulo every prime of `J`.
pub fn all_functions_polynomial(spec: &ProblemSpec) -> Result<bool> {
    let instance = spec.instance();
    let primes = instance.factorize(spec.target())?;
    for (p, _) in &primes {
        let p_size = instance.norm(p)?;
        for (i, src) in spec.sources().iter().enumerate() {
            if instance.norm(src)? > p_size {
                return Ok(false);
            }
            let mut seen = BTreeSet::new();
            for c in spec.residues(i)? {
                if !seen.insert(instance.reduce(&c, p)) {
                    return Ok(false);
                }
            }
        }
    }
    Ok(true)
}

/// Why a table is not a polynomial function.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Witness {
    /// `coefficient * b ≡ residual (mod modulus)` has no solution at the
    /// node of `index`.
    Unsolvable {
        index: MultiIndex,
        coefficient: BaseElement,
        residual: BaseElement,
        modulus: IdealGen,
    },
    /// The form solved at the nodes disagrees with the table at `point`.
    Mismatch {
        point: Vec<BaseElement>,
        expected: BaseElement,
        actual: BaseElement,
    },
}

impl fmt::Display for Witness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Witness::Unsolvable {
                index,
                coefficient,
                residual,
                modulus,
            } => {
                let k = if index.arity() == 1 {
                    index.0[0].to_string()
                } else {
                    index.to_string()
                };
                write!(
                    f,
                    "{coefficient}*b ≡ {residual} (mod {}) at k={k}",
                    modulus.generator()
                )
            }
            Witness::Mismatch {
                point,
                expected,
                actual,
            } => {
                write!(f, "value at (")?;
                for (i, c) in point.iter().enumerate() {
                    if i > 0 {
                        write!(f, ",")?;
                    }
                    write!(f, "{c}")?;
                }
                write!(f, ") is {expected}, the solved form gives {actual}")
            }
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Interpolation {
    Polynomial(CanonicalForm),
    NotPolynomial(Witness),
}

impl Interpolation {
    pub fn is_polynomial(&self) -> bool {
        matches!(self, Interpolation::Polynomial(_))
    }

    pub fn form(&self) -> Option<&CanonicalForm> {
        match self {
            Interpolation::Polynomial(c) => Some(c),
            Interpolation::NotPolynomial(_) => None,
        }
    }
}

/// Triangular solve at the nodes `(a_{k_1}, ..., a_{k_r})` of the μ-box in
/// lex order, then a check against every grid point.
pub fn interpolate(table: &FunctionTable) -> Result<Interpolation> {
    interpolate_with(table, Execution::default())
}

pub fn interpolate_with(table: &FunctionTable, exec: Execution) -> Result<Interpolation> {
    let spec = &table.spec;
    let instance = spec.instance();
    let j = spec.target().generator();
    let dims = spec.grid_dims()?;
    let mu = spec.mu().to_vec();
    let falling = falling_values(spec)?;

    let node_value = |k: &MultiIndex| -> &BaseElement {
        // the node a_k is the residue with index k_i in each coordinate
        let linear = k.0.iter().zip(&dims).fold(0usize, |acc, (&c, &d)| acc * d + c);
        &table.values[linear]
    };

    let mut solved: Vec<(MultiIndex, BaseElement)> = Vec::new();
    for h in box_indices(&mu) {
        let mut residual = node_value(&h).clone();
        for (k, b) in &solved {
            if !k.dominated_by(&h) {
                continue;
            }
            let mut term = b.clone();
            for (var, (&hc, &kc)) in h.0.iter().zip(&k.0).enumerate() {
                term = instance.rem(&instance.mul(&term, &falling[var][hc][kc]), j);
            }
            residual = instance.sub(&residual, &term);
        }
        let residual = instance.rem(&residual, j);
        let coefficient = h.0.iter().fold(instance.rem(&instance.one(), j), |acc, &hc| {
            instance.rem(&instance.mul(&acc, spec.factorial(hc)), j)
        });
        match instance.solve_linear_congruence(&coefficient, &residual, spec.target())? {
            Some(b) => {
                if !b.is_zero() {
                    solved.push((h, b));
                }
            }
            None => {
                return Ok(Interpolation::NotPolynomial(Witness::Unsolvable {
                    index: h,
                    coefficient,
                    residual,
                    modulus: spec.target().clone(),
                }))
            }
        }
    }

    let form = canonicalize_falling(spec, solved)?;
    let values = form.evaluate_table(exec)?.values;
    if let Some(linear) = (0..values.len()).find(|&l| values[l] != table.values[l]) {
        return Ok(Interpolation::NotPolynomial(Witness::Mismatch {
            point: grid_point(spec, linear)?,
            expected: table.values[linear].clone(),
            actual: values[linear].clone(),
        }));
    }
    Ok(Interpolation::Polynomial(form))
}

/// Re-checks a witness against the table it was produced from.
pub fn verify_witness(table: &FunctionTable, witness: &Witness) -> Result<bool> {
    let spec = &table.spec;
    let instance = spec.instance();
    match witness {
        Witness::Unsolvable {
            coefficient,
            residual,
            modulus,
            ..
        } => {
            // every candidate b, evaluated directly
            let m = modulus.generator();
            let target = instance.rem(residual, m);
            Ok(instance
                .residues_mod(modulus)?
                .iter()
                .all(|b| instance.rem(&instance.mul(coefficient, b), m) != target))
        }
        Witness::Mismatch {
            point, expected, ..
        } => {
            let dims = spec.grid_dims()?;
            let mut linear = 0usize;
            for (c, &d) in point.iter().zip(&dims) {
                let Some(idx) = instance.residue_index_usize(c) else {
                    return Ok(false);
                };
                if idx >= d {
                    return Ok(false);
                }
                linear = linear * d + idx;
            }
            Ok(&table.values[linear] == expected)
        }
    }
}
