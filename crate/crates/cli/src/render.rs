//! Text renderings that parse back to the same value.

use polyfunc::polyfun::{CanonicalForm, MVPoly, MultiIndex};
use polyfunc::{BaseElement, GaloisField, GfElement, IdealGen, RingInstance};

/// Whether `s` has a `+` or a binary `-` outside parentheses.
fn is_sum(s: &str) -> bool {
    let mut depth = 0i32;
    for (i, c) in s.char_indices() {
        match c {
            '(' => depth += 1,
            ')' => depth -= 1,
            '+' if depth == 0 => return true,
            '-' if depth == 0 && i > 0 => return true,
            _ => {}
        }
    }
    false
}

fn join_terms(terms: Vec<String>) -> String {
    let mut out = String::new();
    for (i, t) in terms.into_iter().enumerate() {
        match (i, t.strip_prefix('-')) {
            (0, _) => out.push_str(&t),
            (_, Some(rest)) => {
                out.push_str(" - ");
                out.push_str(rest);
            }
            (_, None) => {
                out.push_str(" + ");
                out.push_str(&t);
            }
        }
    }
    out
}

/// `coefficient * monomial`, dropping a unit coefficient.
fn scaled(coeff: &str, monomial: &str) -> String {
    if monomial.is_empty() {
        return coeff.to_string();
    }
    match coeff {
        "1" => monomial.to_string(),
        "-1" => format!("-{monomial}"),
        c if is_sum(c) => format!("({c})*{monomial}"),
        c => format!("{c}*{monomial}"),
    }
}

fn power(name: &str, e: usize) -> String {
    match e {
        0 => String::new(),
        1 => name.to_string(),
        e => format!("{name}^{e}"),
    }
}

/// A field element as a polynomial in `u` (or a digit when `s = 1`).
pub fn render_field(field: &GaloisField, a: GfElement) -> String {
    if field.degree() == 1 {
        return a.index().to_string();
    }
    let coords = field.coords(a);
    let terms: Vec<String> = coords
        .iter()
        .enumerate()
        .rev()
        .filter(|(_, &c)| c != 0)
        .map(|(i, &c)| scaled(&c.to_string(), &power("u", i)))
        .collect();
    if terms.is_empty() {
        "0".into()
    } else {
        join_terms(terms)
    }
}

pub fn render_element(instance: &RingInstance, a: &BaseElement) -> String {
    match (instance.field(), a) {
        (_, BaseElement::Int(n)) => n.to_string(),
        (Some(field), BaseElement::Poly(p)) => {
            let terms: Vec<String> = p
                .coeffs()
                .iter()
                .enumerate()
                .rev()
                .filter(|(_, c)| !c.is_zero())
                .map(|(i, &c)| scaled(&render_field(field, c), &power("t", i)))
                .collect();
            if terms.is_empty() {
                "0".into()
            } else {
                join_terms(terms)
            }
        }
        (None, BaseElement::Poly(_)) => format!("{a}"),
    }
}

pub fn variable_name(arity: usize, i: usize) -> String {
    if arity == 1 {
        "x".into()
    } else {
        format!("x{}", i + 1)
    }
}

fn monomial(k: &MultiIndex) -> String {
    let arity = k.arity();
    k.0.iter()
        .enumerate()
        .filter(|(_, &e)| e > 0)
        .map(|(i, &e)| power(&variable_name(arity, i), e))
        .collect::<Vec<_>>()
        .join("*")
}

/// Terms in descending lex order of exponents.
pub fn render_poly(poly: &MVPoly) -> String {
    let instance = poly.instance();
    let terms: Vec<String> = poly
        .terms()
        .iter()
        .rev()
        .map(|(k, c)| scaled(&render_element(instance, c), &monomial(k)))
        .collect();
    if terms.is_empty() {
        "0".into()
    } else {
        join_terms(terms)
    }
}

pub fn render_ideal(instance: &RingInstance, ideal: &IdealGen) -> String {
    render_element(instance, ideal.generator())
}

/// `(x)_k` written out, e.g. `(x1)_2*(x2)_1`.
pub fn falling_name(k: &MultiIndex) -> String {
    let arity = k.arity();
    let parts: Vec<String> = k
        .0
        .iter()
        .enumerate()
        .filter(|(_, &e)| e > 0)
        .map(|(i, &e)| format!("({})_{e}", variable_name(arity, i)))
        .collect();
    if parts.is_empty() {
        "1".into()
    } else {
        parts.join("*")
    }
}

/// `b_k*(x)_k` terms of a canonical form, ascending.
pub fn render_falling(form: &CanonicalForm) -> String {
    let instance = form.spec.instance();
    let terms: Vec<String> = form
        .terms
        .iter()
        .map(|t| {
            let name = falling_name(&t.index);
            let coeff = render_element(instance, &t.coefficient);
            if name == "1" {
                coeff
            } else {
                scaled(&coeff, &name)
            }
        })
        .collect();
    if terms.is_empty() {
        "0".into()
    } else {
        join_terms(terms)
    }
}
