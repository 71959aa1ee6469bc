//! Brute-force ground truth. Everything here enumerates; nothing is clever.

use std::collections::BTreeSet;

use num_bigint::BigUint;
use num_traits::{One, ToPrimitive};

use crate::error::{domain, Error, Result};
use crate::exec::{fold_chunks, map_range, Execution};
use crate::orderings::{
    factorial_ideal_via_greedy, factorial_sequence, greedy_p_ordering_from,
    simultaneous_p_sequence, Exponent,
};
use crate::polyfun::{
    box_index, canonicalize, FunctionTable, MVPoly, MultiIndex, ProblemSpec,
};
use crate::ring::{BaseElement, IdealGen, RingInstance};

/// Default number of polynomial evaluations a sweep may perform.
pub const DEFAULT_BUDGET: u64 = 1 << 22;

/// Largest `|D/J|` the sweep builds arithmetic tables for.
const MAX_TARGET: usize = 1 << 12;

const CHUNK: u64 = 1 << 12;

/// Distinct value tables, each encoded by the residue indices of its values.
#[derive(Clone, Debug)]
pub struct TableSet {
    pub spec: ProblemSpec,
    pub tables: BTreeSet<Vec<u32>>,
}

impl TableSet {
    pub fn len(&self) -> usize {
        self.tables.len()
    }

    pub fn is_empty(&self) -> bool {
        self.tables.is_empty()
    }

    pub fn contains(&self, table: &FunctionTable) -> bool {
        table.spec == self.spec && self.tables.contains(&table.indices())
    }

    /// Decoded tables, in encoding order.
    pub fn iter(&self) -> impl Iterator<Item = FunctionTable> + '_ {
        let instance = self.spec.instance();
        self.tables.iter().map(move |t| FunctionTable {
            spec: self.spec.clone(),
            values: t
                .iter()
                .map(|&i| instance.simultaneous_term(i as usize))
                .collect(),
        })
    }
}

/// Addition and multiplication tables of `D/J` on residue indices.
struct Arith {
    n: usize,
    add: Vec<u32>,
    mul: Vec<u32>,
}

impl Arith {
    fn new(spec: &ProblemSpec) -> Result<Self> {
        let instance = spec.instance();
        let target = spec.target();
        let n = instance.norm_usize(target)?;
        if n > MAX_TARGET {
            return domain(format!("target quotient of size {n} is too large for the sweep"));
        }
        let j = target.generator();
        let res = instance.residues_mod(target)?;
        let index = |a: &BaseElement| instance.residue_index_usize(&instance.rem(a, j)).unwrap() as u32;
        let mut add = Vec::with_capacity(n * n);
        let mut mul = Vec::with_capacity(n * n);
        for a in &res {
            for b in &res {
                add.push(index(&instance.add(a, b)));
                mul.push(index(&instance.mul(a, b)));
            }
        }
        Ok(Arith { n, add, mul })
    }

    fn add(&self, a: u32, b: u32) -> u32 {
        self.add[a as usize * self.n + b as usize]
    }

    fn mul(&self, a: u32, b: u32) -> u32 {
        self.mul[a as usize * self.n + b as usize]
    }
}

/// Value tables of `x^k` for every `k` in the μ-box, in lex order of `k`.
fn monomial_tables(spec: &ProblemSpec, arith: &Arith) -> Result<Vec<Vec<u32>>> {
    let instance = spec.instance();
    let j = spec.target().generator();
    let dims = spec.grid_dims()?;
    let mu = spec.mu();
    // powers[i][c][h] = c^h mod J for the residue c of I_i
    let mut powers = Vec::with_capacity(spec.arity());
    for i in 0..spec.arity() {
        let rows: Vec<Vec<u32>> = spec
            .residues(i)?
            .iter()
            .map(|c| {
                let c = instance.residue_index_usize(&instance.rem(c, j)).unwrap() as u32;
                let one = instance.residue_index_usize(&instance.rem(&instance.one(), j)).unwrap() as u32;
                let mut row = vec![one];
                for h in 1..mu[i] {
                    row.push(arith.mul(row[h - 1], c));
                }
                row
            })
            .collect();
        powers.push(rows);
    }
    let grid: usize = dims.iter().product();
    let boxed: usize = mu.iter().product();
    Ok((0..boxed)
        .map(|b| {
            let k = box_index(b, mu);
            (0..grid)
                .map(|g| {
                    let point = box_index(g, &dims);
                    let mut v = powers[0][point.0[0]][k.0[0]];
                    for i in 1..spec.arity() {
                        v = arith.mul(v, powers[i][point.0[i]][k.0[i]]);
                    }
                    v
                })
                .collect()
        })
        .collect())
}

fn check_budget(tuples: &BigUint, grid: usize, budget: u64) -> Result<u64> {
    let required = tuples * BigUint::from(grid);
    if required > BigUint::from(budget) {
        return Err(Error::Budget {
            required: required.to_string(),
            budget,
        });
    }
    Ok(tuples.to_u64().expect("within budget"))
}

/// Every polynomial function, by sweeping all coefficient tuples of
/// `sum c_k x^k` with `k` in the μ-box and `c_k` over the residues of `J`.
pub fn brute_force_tables(spec: &ProblemSpec, budget: u64, exec: Execution) -> Result<TableSet> {
    let arith = Arith::new(spec)?;
    let dims = spec.grid_dims()?;
    let grid: usize = dims.iter().product();
    let terms = spec.box_size();
    let tuples = BigUint::from(arith.n).pow(terms as u32);
    let total = check_budget(&tuples, grid, budget)?;

    let monos = monomial_tables(spec, &arith)?;
    // scaled[b][c] = c * x^{k_b}
    let scaled: Vec<Vec<Vec<u32>>> = monos
        .iter()
        .map(|m| {
            (0..arith.n as u32)
                .map(|c| m.iter().map(|&v| arith.mul(c, v)).collect())
                .collect()
        })
        .collect();
    let n = arith.n as u64;

    let sets = fold_chunks(exec, total, CHUNK, |range| {
        let mut out = BTreeSet::new();
        // digit b belongs to term b; the last term varies fastest
        let mut digits = vec![0usize; terms];
        let mut rest = range.start;
        for d in digits.iter_mut().rev() {
            *d = (rest % n) as usize;
            rest /= n;
        }
        let mut partial = vec![vec![0u32; grid]; terms + 1];
        let refill = |partial: &mut Vec<Vec<u32>>, digits: &[usize], from: usize| {
            for b in from..terms {
                let (head, tail) = partial.split_at_mut(b + 1);
                for ((dst, &src), &add) in tail[0].iter_mut().zip(&head[b]).zip(&scaled[b][digits[b]]) {
                    *dst = arith.add(src, add);
                }
            }
        };
        refill(&mut partial, &digits, 0);
        for _ in range {
            out.insert(partial[terms].clone());
            let mut b = terms;
            while b > 0 {
                b -= 1;
                digits[b] += 1;
                if digits[b] < arith.n {
                    break;
                }
                digits[b] = 0;
            }
            refill(&mut partial, &digits, b);
        }
        out
    });
    let mut tables = BTreeSet::new();
    for s in sets {
        tables.extend(s);
    }
    Ok(TableSet {
        spec: spec.clone(),
        tables,
    })
}

pub fn brute_force_count(spec: &ProblemSpec, budget: u64, exec: Execution) -> Result<BigUint> {
    Ok(BigUint::from(brute_force_tables(spec, budget, exec)?.len()))
}

pub fn is_realizable(table: &FunctionTable, budget: u64, exec: Execution) -> Result<bool> {
    Ok(brute_force_tables(&table.spec, budget, exec)?.contains(table))
}

/// The same sweep as [`brute_force_tables`], deduplicated by canonical form
/// instead of by value table.
pub fn brute_force_canonical_count(spec: &ProblemSpec, budget: u64) -> Result<BigUint> {
    let instance = spec.instance();
    let n = instance.norm_usize(spec.target())?;
    let terms = spec.box_size();
    let grid: usize = spec.grid_dims()?.iter().product();
    let total = check_budget(&BigUint::from(n).pow(terms as u32), grid, budget)?;
    let mu = spec.mu();
    let mut forms = BTreeSet::new();
    for t in 0..total {
        let mut rest = t;
        let mut poly = MVPoly::zero(instance, spec.arity());
        for b in (0..terms).rev() {
            let c = (rest % n as u64) as usize;
            rest /= n as u64;
            poly.add_term(box_index(b, mu), instance.simultaneous_term(c));
        }
        let form = canonicalize(&poly, spec)?;
        let key: Vec<(MultiIndex, BaseElement)> = form
            .terms
            .into_iter()
            .map(|t| (t.index, t.coefficient))
            .collect();
        forms.insert(key);
    }
    Ok(BigUint::from(forms.len()))
}

fn ext_gcd(a: i64, b: i64) -> (i64, i64, i64) {
    if b == 0 {
        return (a, 1, 0);
    }
    let (g, x, y) = ext_gcd(b, a.rem_euclid(b));
    (g, y, x - a.div_euclid(b) * y)
}

/// Row echelon form of a subgroup of `(Z/e)^n`; `rows[c]` is the row with
/// leading column `c`, its entry there a divisor of `e`.
struct Echelon {
    e: i64,
    rows: Vec<Option<Vec<i64>>>,
}

impl Echelon {
    fn new(e: i64, n: usize) -> Self {
        Echelon {
            e,
            rows: vec![None; n],
        }
    }

    fn insert(&mut self, mut v: Vec<i64>, from: usize) {
        let e = self.e;
        let n = v.len();
        for c in from..n {
            let vc = v[c].rem_euclid(e);
            if vc == 0 {
                continue;
            }
            // an empty slot stands for the row e * unit_c
            let row = self.rows[c].take().unwrap_or_else(|| {
                let mut r = vec![0; n];
                r[c] = e;
                r
            });
            let p = row[c];
            let (g, x, y) = ext_gcd(p, vc);
            let mut new_row = vec![0; n];
            let mut rest = vec![0; n];
            for i in c..n {
                new_row[i] = (x * row[i] + y * v[i]).rem_euclid(e);
                rest[i] = ((p / g) * v[i] - (vc / g) * row[i]).rem_euclid(e);
            }
            new_row[c] = g;
            rest[c] = 0;
            self.rows[c] = Some(new_row);
            v = rest;
        }
    }

    /// Adds `(e / pivot) * row` for every row, top down, so that the echelon
    /// form accounts for the torsion of each row.
    fn close(&mut self) {
        let e = self.e;
        for c in 0..self.rows.len() {
            let Some(row) = self.rows[c].clone() else {
                continue;
            };
            let m = e / row[c];
            if m == 1 {
                continue;
            }
            let w: Vec<i64> = row.iter().map(|&x| (m * x).rem_euclid(e)).collect();
            self.insert(w, c + 1);
        }
    }

    fn size(&self) -> BigUint {
        self.rows
            .iter()
            .enumerate()
            .fold(BigUint::one(), |acc, (c, r)| match r {
                Some(row) => acc * BigUint::from((self.e / row[c]) as u64),
                None => acc,
            })
    }
}

/// Size of the additive group spanned by the value tables of `c x^k` for
/// every exponent `k` and every `c` in `D`, found by echelon reduction. It
/// makes no use of μ-bounds, factorials or canonical forms.
pub fn span_count(spec: &ProblemSpec) -> Result<BigUint> {
    let instance = spec.instance();
    let target = spec.target();
    let j = target.generator();
    let dims = spec.grid_dims()?;
    let grid: usize = dims.iter().product();
    let nj = instance.norm_usize(target)?;
    // coordinates of a residue: base-e digits of its index
    let (e, width, multipliers) = match instance.field() {
        None => (nj as i64, 1usize, vec![instance.one()]),
        Some(f) => {
            let p = f.characteristic() as i64;
            let d = j.as_poly().and_then(|g| g.degree()).unwrap_or(0);
            let s = f.degree() as usize;
            let u = instance.simultaneous_term(f.characteristic() as usize);
            let u = if s > 1 { u } else { instance.one() };
            let t = instance.t().expect("polynomial instance");
            let mut mults = Vec::new();
            for a in 0..s {
                for i in 0..d {
                    mults.push(instance.mul(&instance.pow(&u, a as u32), &instance.pow(&t, i as u32)));
                }
            }
            (p, d * s, mults)
        }
    };
    if e > (1 << 20) {
        return domain("modulus too large for the echelon oracle");
    }

    // distinct power tables of each variable over its residues
    let mut per_var: Vec<Vec<Vec<BaseElement>>> = Vec::new();
    for i in 0..spec.arity() {
        let res = spec.residues(i)?;
        let mut seen: Vec<Vec<BaseElement>> = Vec::new();
        let mut current: Vec<BaseElement> = res.iter().map(|_| instance.rem(&instance.one(), j)).collect();
        while !seen.contains(&current) {
            seen.push(current.clone());
            current = current
                .iter()
                .zip(&res)
                .map(|(v, c)| instance.rem(&instance.mul(v, c), j))
                .collect();
        }
        per_var.push(seen);
    }

    let counts: Vec<usize> = per_var.iter().map(Vec::len).collect();
    let combos: usize = counts.iter().product();
    let mut ech = Echelon::new(e, grid * width);
    for combo in 0..combos {
        let k = box_index(combo, &counts);
        let table: Vec<BaseElement> = (0..grid)
            .map(|g| {
                let point = box_index(g, &dims);
                (0..spec.arity()).fold(instance.one(), |acc, i| {
                    instance.rem(&instance.mul(&acc, &per_var[i][k.0[i]][point.0[i]]), j)
                })
            })
            .collect();
        for m in &multipliers {
            let mut v = Vec::with_capacity(grid * width);
            for value in &table {
                let mut idx = instance
                    .residue_index_usize(&instance.rem(&instance.mul(m, value), j))
                    .unwrap() as i64;
                for _ in 0..width {
                    v.push(idx % e);
                    idx /= e;
                }
            }
            ech.insert(v, 0);
        }
    }
    ech.close();
    Ok(ech.size())
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SequenceCheck {
    pub ideal: IdealGen,
    pub prime: IdealGen,
    /// Position in `X` of the first element of the greedy ordering.
    pub first: usize,
    pub greedy: Vec<Exponent>,
    pub simultaneous: Vec<Exponent>,
}

impl SequenceCheck {
    pub fn agrees(&self) -> bool {
        self.greedy == self.simultaneous
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FactorialCheck {
    pub ideal: IdealGen,
    pub greedy: Vec<IdealGen>,
    pub simultaneous: Vec<IdealGen>,
}

impl FactorialCheck {
    pub fn agrees(&self) -> bool {
        self.greedy == self.simultaneous
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OrderingReport {
    pub modulus: IdealGen,
    pub sequences: Vec<SequenceCheck>,
    pub factorials: Vec<FactorialCheck>,
}

impl OrderingReport {
    pub fn all_agree(&self) -> bool {
        self.sequences.iter().all(SequenceCheck::agrees)
            && self.factorials.iter().all(FactorialCheck::agrees)
    }

    pub fn disagreements(&self) -> usize {
        self.sequences.iter().filter(|c| !c.agrees()).count()
            + self.factorials.iter().filter(|c| !c.agrees()).count()
    }
}

/// Proper divisors `I ⊇ K` other than the unit ideal, `K` included.
fn divisors(instance: &RingInstance, modulus: &IdealGen) -> Result<Vec<IdealGen>> {
    let factors = instance.factorize(modulus)?;
    let mut out = vec![instance.one()];
    for (p, e) in &factors {
        let mut next = Vec::new();
        for d in &out {
            for a in 0..=*e {
                next.push(instance.mul(d, &instance.pow(p.generator(), a)));
            }
        }
        out = next;
    }
    let mut ideals: Vec<IdealGen> = out
        .iter()
        .map(|d| instance.ideal(d))
        .filter(|i| !i.is_unit())
        .collect();
    ideals.sort_by(|a, b| a.generator().cmp(b.generator()));
    Ok(ideals)
}

/// For every proper divisor `I` of `K` and every prime `P | K`, greedy
/// `P`-orderings of the residues of `I` from each possible first element
/// against the sequence read off the simultaneous ordering; and the
/// factorial ideals of `D/I` in `D/K` both ways.
pub fn ordering_cross_check(
    instance: &RingInstance,
    modulus: &IdealGen,
    budget: u64,
    exec: Execution,
) -> Result<OrderingReport> {
    let size = instance.norm_usize(modulus)? as u64;
    let primes = instance.factorize(modulus)?;
    let ideals = divisors(instance, modulus)?;
    let required = BigUint::from(size).pow(3) * BigUint::from(primes.len() * ideals.len());
    if required > BigUint::from(budget) {
        return Err(Error::Budget {
            required: required.to_string(),
            budget,
        });
    }
    let mut sequences = Vec::new();
    let mut factorials = Vec::new();
    for ideal in &ideals {
        let set = instance.residues_mod(ideal)?;
        let n = set.len();
        for (prime, _) in &primes {
            let simultaneous = simultaneous_p_sequence(instance, ideal, prime, modulus, n)?.exponents;
            let runs = map_range(exec, n, |first| {
                greedy_p_ordering_from(instance, &set, prime, modulus, n, first)
                    .map(|(_, seq)| seq.exponents)
            });
            for (first, greedy) in runs.into_iter().enumerate() {
                sequences.push(SequenceCheck {
                    ideal: ideal.clone(),
                    prime: prime.clone(),
                    first,
                    greedy: greedy?,
                    simultaneous: simultaneous.clone(),
                });
            }
        }
        factorials.push(FactorialCheck {
            ideal: ideal.clone(),
            greedy: factorial_ideal_via_greedy(instance, &set, modulus)?.values,
            simultaneous: factorial_sequence(instance, ideal, modulus)?.values,
        });
    }
    Ok(OrderingReport {
        modulus: modulus.clone(),
        sequences,
        factorials,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fqpoly::FqPoly;
    use crate::polyfun::{count, interpolate};

    fn big(n: u64) -> BigUint {
        BigUint::from(n)
    }

    fn seq() -> Execution {
        Execution::Sequential
    }

    #[test]
    fn brute_force_examples() {
        let c = |ns: &[u64], m| {
            brute_force_count(&ProblemSpec::integers(ns, m).unwrap(), DEFAULT_BUDGET, seq()).unwrap()
        };
        assert_eq!(c(&[2], 2), big(4));
        assert_eq!(c(&[4], 4), big(64));
        assert_eq!(c(&[6], 6), big(108));
        assert_eq!(c(&[2, 2], 2), big(16));
        let f2 = RingInstance::poly_over_gf(2, 1).unwrap();
        let t2 = f2.ideal(&BaseElement::Poly(FqPoly::monomial(2)));
        let spec = ProblemSpec::new(f2, vec![t2.clone()], t2).unwrap();
        assert_eq!(brute_force_count(&spec, DEFAULT_BUDGET, seq()).unwrap(), big(64));
    }

    #[test]
    fn budget_is_enforced() {
        let spec = ProblemSpec::integers(&[8, 8], 8).unwrap();
        assert!(matches!(
            brute_force_tables(&spec, 1000, seq()),
            Err(Error::Budget { .. })
        ));
    }

    #[test]
    fn realizability_examples() {
        let spec = ProblemSpec::integers(&[4], 4).unwrap();
        let t = |v: &[i64]| {
            FunctionTable::new(&spec, v.iter().map(|&x| BaseElement::int(x)).collect()).unwrap()
        };
        assert!(is_realizable(&t(&[0, 1, 0, 1]), DEFAULT_BUDGET, seq()).unwrap());
        assert!(!is_realizable(&t(&[0, 0, 1, 0]), DEFAULT_BUDGET, seq()).unwrap());
        for c in 0..4 {
            assert!(is_realizable(&t(&[c; 4]), DEFAULT_BUDGET, seq()).unwrap());
        }
    }

    #[test]
    fn sweep_is_partition_independent() {
        let spec = ProblemSpec::integers(&[4, 2], 4).unwrap();
        let a = brute_force_tables(&spec, DEFAULT_BUDGET, Execution::Sequential).unwrap();
        let b = brute_force_tables(&spec, DEFAULT_BUDGET, Execution::Parallel).unwrap();
        assert_eq!(a.tables, b.tables);
    }

    #[test]
    fn table_set_agrees_with_interpolation() {
        let spec = ProblemSpec::integers(&[4], 4).unwrap();
        let set = brute_force_tables(&spec, DEFAULT_BUDGET, seq()).unwrap();
        for code in 0..256u32 {
            let vals: Vec<BaseElement> = (0..4).map(|i| BaseElement::int((code >> (2 * i)) & 3)).collect();
            let t = FunctionTable::new(&spec, vals).unwrap();
            assert_eq!(interpolate(&t).unwrap().is_polynomial(), set.contains(&t));
        }
    }

    #[test]
    fn canonical_dedup_matches_table_dedup() {
        for (ns, m) in [(vec![4], 4), (vec![6], 6), (vec![2, 3], 4)] {
            let spec = ProblemSpec::integers(&ns, m).unwrap();
            assert_eq!(
                brute_force_canonical_count(&spec, DEFAULT_BUDGET).unwrap(),
                brute_force_count(&spec, DEFAULT_BUDGET, seq()).unwrap()
            );
        }
    }

    #[test]
    fn span_count_matches_sweep() {
        for m in 2..=9u64 {
            for n in 2..=9u64 {
                let spec = ProblemSpec::integers(&[n], m).unwrap();
                assert_eq!(span_count(&spec).unwrap(), count(&spec).unwrap(), "n={n} m={m}");
                if let Ok(b) = brute_force_count(&spec, DEFAULT_BUDGET, seq()) {
                    assert_eq!(span_count(&spec).unwrap(), b, "n={n} m={m}");
                }
            }
        }
        let spec = ProblemSpec::integers(&[4, 6], 8).unwrap();
        assert_eq!(span_count(&spec).unwrap(), count(&spec).unwrap());
        let f9 = RingInstance::poly_over_gf(3, 2).unwrap();
        let t2 = f9.ideal(&BaseElement::Poly(FqPoly::monomial(2)));
        let t = f9.ideal(&BaseElement::Poly(FqPoly::monomial(1)));
        let spec = ProblemSpec::new(f9, vec![t], t2).unwrap();
        assert_eq!(span_count(&spec).unwrap(), count(&spec).unwrap());
    }

    #[test]
    fn ordering_examples() {
        let r = RingInstance::integers();
        let report = ordering_cross_check(&r, &r.ideal(&BaseElement::int(12)), DEFAULT_BUDGET, seq()).unwrap();
        assert!(report.all_agree());
        assert!(report.sequences.iter().any(|c| c.prime.generator() == &BaseElement::int(3)));
        let f2 = RingInstance::poly_over_gf(2, 1).unwrap();
        let k = f2.ideal(&BaseElement::Poly(FqPoly::new(vec![
            crate::GfElement(0),
            crate::GfElement(1),
            crate::GfElement(1),
        ])));
        let report = ordering_cross_check(&f2, &k, DEFAULT_BUDGET, seq()).unwrap();
        assert!(report.all_agree());
        assert_eq!(report.factorials.len(), 3);
        let report = ordering_cross_check(&r, &r.ideal(&BaseElement::int(7)), DEFAULT_BUDGET, seq()).unwrap();
        assert!(report.all_agree());
    }
}
