//! Polynomial expressions: `x` or `x1..xr`, `t` (and `u` over `F_{p^s}`),
//! integer literals, `+ - * ^`, parentheses, implicit multiplication.

use std::fmt;

use num_bigint::BigInt;
use polyfunc::polyfun::MVPoly;
use polyfunc::{BaseElement, FqPoly, RingInstance};

/// Largest exponent accepted after `^`.
const MAX_EXPONENT: u32 = 4096;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParseError {
    /// Byte offset into the input.
    pub offset: usize,
    pub message: String,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} at offset {}", self.message, self.offset)
    }
}

impl std::error::Error for ParseError {}

type PResult<T> = Result<T, ParseError>;

fn fail<T>(offset: usize, message: impl Into<String>) -> PResult<T> {
    Err(ParseError {
        offset,
        message: message.into(),
    })
}

#[derive(Clone, Debug, PartialEq, Eq)]
enum Tok {
    Num(BigInt),
    Ident(String),
    Plus,
    Minus,
    Star,
    Caret,
    LParen,
    RParen,
    End,
}

fn describe(tok: &Tok) -> String {
    match tok {
        Tok::Num(n) => format!("number {n}"),
        Tok::Ident(s) => format!("'{s}'"),
        Tok::Plus => "'+'".into(),
        Tok::Minus => "'-'".into(),
        Tok::Star => "'*'".into(),
        Tok::Caret => "'^'".into(),
        Tok::LParen => "'('".into(),
        Tok::RParen => "')'".into(),
        Tok::End => "end of input".into(),
    }
}

fn lex(text: &str) -> PResult<Vec<(usize, Tok)>> {
    let bytes = text.as_bytes();
    let mut out = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i];
        let start = i;
        let tok = match c {
            b' ' | b'\t' | b'\n' | b'\r' => {
                i += 1;
                continue;
            }
            b'+' => Tok::Plus,
            b'-' => Tok::Minus,
            b'*' => Tok::Star,
            b'^' => Tok::Caret,
            b'(' => Tok::LParen,
            b')' => Tok::RParen,
            b'0'..=b'9' => {
                while i < bytes.len() && bytes[i].is_ascii_digit() {
                    i += 1;
                }
                out.push((start, Tok::Num(text[start..i].parse().unwrap())));
                continue;
            }
            b'a'..=b'z' | b'A'..=b'Z' => {
                // a letter followed by optional digits: x, x12, t
                i += 1;
                while i < bytes.len() && bytes[i].is_ascii_digit() {
                    i += 1;
                }
                out.push((start, Tok::Ident(text[start..i].to_string())));
                continue;
            }
            _ => {
                let ch = text[i..].chars().next().unwrap();
                return fail(i, format!("unexpected character '{ch}'"));
            }
        };
        out.push((start, tok));
        i += 1;
    }
    out.push((text.len(), Tok::End));
    Ok(out)
}

struct Parser<'a> {
    toks: Vec<(usize, Tok)>,
    pos: usize,
    instance: &'a RingInstance,
    arity: usize,
}

impl Parser<'_> {
    fn peek(&self) -> &Tok {
        &self.toks[self.pos].1
    }

    fn offset(&self) -> usize {
        self.toks[self.pos].0
    }

    fn bump(&mut self) -> (usize, Tok) {
        let t = self.toks[self.pos].clone();
        if self.pos + 1 < self.toks.len() {
            self.pos += 1;
        }
        t
    }

    fn constant(&self, c: BaseElement) -> MVPoly {
        MVPoly::constant(self.instance, self.arity, c)
    }

    fn expr(&mut self) -> PResult<MVPoly> {
        let mut acc = self.term()?;
        loop {
            match self.peek() {
                Tok::Plus => {
                    self.bump();
                    acc = acc.add(&self.term()?);
                }
                Tok::Minus => {
                    self.bump();
                    acc = acc.sub(&self.term()?);
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> PResult<MVPoly> {
        let mut acc = self.unary()?;
        loop {
            match self.peek() {
                Tok::Star => {
                    self.bump();
                    acc = acc.mul(&self.unary()?);
                }
                // implicit multiplication: 3x, (t+1)x, x y
                Tok::Num(_) | Tok::Ident(_) | Tok::LParen => {
                    acc = acc.mul(&self.power()?);
                }
                _ => return Ok(acc),
            }
        }
    }

    fn unary(&mut self) -> PResult<MVPoly> {
        if *self.peek() == Tok::Minus {
            self.bump();
            return Ok(self.unary()?.neg());
        }
        self.power()
    }

    fn power(&mut self) -> PResult<MVPoly> {
        let base = self.primary()?;
        if *self.peek() != Tok::Caret {
            return Ok(base);
        }
        self.bump();
        let at = self.offset();
        match self.bump().1 {
            Tok::Num(n) => match u32::try_from(&n) {
                Ok(e) if e <= MAX_EXPONENT => Ok(base.pow(e)),
                _ => fail(at, format!("exponent {n} is too large (at most {MAX_EXPONENT})")),
            },
            other => fail(at, format!("expected an exponent, found {}", describe(&other))),
        }
    }

    fn primary(&mut self) -> PResult<MVPoly> {
        let at = self.offset();
        match self.bump().1 {
            Tok::Num(n) => self.literal(n, at),
            Tok::Ident(name) => self.identifier(&name, at),
            Tok::LParen => {
                let inner = self.expr()?;
                let close = self.offset();
                match self.bump().1 {
                    Tok::RParen => Ok(inner),
                    other => fail(close, format!("expected ')', found {}", describe(&other))),
                }
            }
            other => fail(at, format!("expected a term, found {}", describe(&other))),
        }
    }

    fn literal(&self, n: BigInt, at: usize) -> PResult<MVPoly> {
        match self.instance.field() {
            None => Ok(self.constant(BaseElement::Int(n))),
            Some(f) => {
                let p = f.characteristic();
                match u32::try_from(&n) {
                    Ok(v) if v < p => Ok(self.constant(BaseElement::Poly(FqPoly::constant(f.from_int(v as i64))))),
                    _ => fail(at, format!("coefficient {n} is outside F_{p}; use digits below {p}")),
                }
            }
        }
    }

    fn identifier(&self, name: &str, at: usize) -> PResult<MVPoly> {
        let field = self.instance.field();
        match name {
            "t" if field.is_some() => Ok(self.constant(self.instance.t().unwrap())),
            "u" => match field.and_then(|f| f.generator()) {
                Some(g) => Ok(self.constant(BaseElement::Poly(FqPoly::constant(g)))),
                None => fail(at, "'u' names the generator of F_{p^s} and needs s > 1"),
            },
            "x" if self.arity == 1 => Ok(MVPoly::variable(self.instance, 1, 0)),
            _ => {
                if let Some(idx) = name.strip_prefix('x').and_then(|d| d.parse::<usize>().ok()) {
                    if (1..=self.arity).contains(&idx) {
                        return Ok(MVPoly::variable(self.instance, self.arity, idx - 1));
                    }
                }
                let allowed = match self.arity {
                    0 => "no variables".to_string(),
                    1 => "x".to_string(),
                    r => format!("x1..x{r}"),
                };
                fail(at, format!("unknown variable '{name}' (expected {allowed})"))
            }
        }
    }
}

/// Parses a polynomial in `arity` variables over the base domain.
pub fn parse_poly(text: &str, instance: &RingInstance, arity: usize) -> PResult<MVPoly> {
    let toks = lex(text)?;
    let mut parser = Parser {
        toks,
        pos: 0,
        instance,
        arity,
    };
    if *parser.peek() == Tok::End {
        return fail(0, "empty expression");
    }
    let poly = parser.expr()?;
    match parser.peek() {
        Tok::End => Ok(poly),
        other => fail(parser.offset(), format!("unexpected {}", describe(other))),
    }
}

/// Parses an element of the base domain (an integer, or a polynomial in `t`).
pub fn parse_element(text: &str, instance: &RingInstance) -> PResult<BaseElement> {
    let poly = parse_poly(text, instance, 0)?;
    Ok(poly.coefficient(&polyfunc::polyfun::MultiIndex::zero(0)))
}

/// Parses a comma-separated list of base-domain elements.
pub fn parse_element_list(text: &str, instance: &RingInstance) -> PResult<Vec<BaseElement>> {
    let mut out = Vec::new();
    let mut start = 0;
    for piece in text.split(',') {
        out.push(parse_element(piece, instance).map_err(|e| ParseError {
            offset: e.offset + start,
            message: e.message,
        })?);
        start += piece.len() + 1;
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use polyfunc::polyfun::MultiIndex;
    use polyfunc::GfElement;

    #[test]
    fn integer_examples() {
        let z = RingInstance::integers();
        let p = parse_poly("x1^2 + 3*x2", &z, 2).unwrap();
        let expected = MVPoly::from_terms(
            &z,
            2,
            [
                (MultiIndex(vec![2, 0]), BaseElement::int(1)),
                (MultiIndex(vec![0, 1]), BaseElement::int(3)),
            ],
        );
        assert_eq!(p, expected);
        assert_eq!(parse_poly("3x - -x", &z, 1).unwrap(), parse_poly("4*x", &z, 1).unwrap());
        assert_eq!(parse_poly("-x^2", &z, 1).unwrap(), MVPoly::variable(&z, 1, 0).pow(2).neg());
        assert_eq!(parse_poly("(x+1)(x-1)", &z, 1).unwrap(), parse_poly("x^2 - 1", &z, 1).unwrap());
    }

    #[test]
    fn polynomial_ring_example() {
        let f2 = RingInstance::poly_over_gf(2, 1).unwrap();
        let p = parse_poly("(t+1)*x^2 + t", &f2, 1).unwrap();
        let t1 = BaseElement::Poly(FqPoly::new(vec![GfElement(1), GfElement(1)]));
        assert_eq!(p.coefficient(&MultiIndex(vec![2])), t1);
        assert_eq!(p.coefficient(&MultiIndex(vec![0])), f2.t().unwrap());
        assert_eq!(parse_element("t^2 + 1", &f2).unwrap(), BaseElement::Poly(FqPoly::new(vec![GfElement(1), GfElement(0), GfElement(1)])));
    }

    #[test]
    fn errors_carry_offsets() {
        let z = RingInstance::integers();
        let e = parse_poly("x^^2", &z, 1).unwrap_err();
        assert_eq!(e.offset, 2);
        let e = parse_poly("x + y", &z, 1).unwrap_err();
        assert_eq!(e.offset, 4);
        assert!(e.message.contains("unknown variable"));
        let e = parse_poly("x3", &z, 2).unwrap_err();
        assert_eq!(e.offset, 0);
        let f2 = RingInstance::poly_over_gf(2, 1).unwrap();
        let e = parse_poly("x + 2", &f2, 1).unwrap_err();
        assert_eq!(e.offset, 4);
        assert!(parse_poly("u", &f2, 1).is_err());
        assert!(parse_poly("t", &z, 1).is_err());
        assert_eq!(parse_poly("(x", &z, 1).unwrap_err().offset, 2);
        assert_eq!(parse_poly("", &z, 1).unwrap_err().offset, 0);
        assert_eq!(parse_poly("x $", &z, 1).unwrap_err().offset, 2);
    }

    #[test]
    fn element_lists() {
        let z = RingInstance::integers();
        let v = parse_element_list("0,0,1,0", &z).unwrap();
        assert_eq!(v, [0, 0, 1, 0].map(BaseElement::int).to_vec());
        assert_eq!(parse_element_list("1,x", &z).unwrap_err().offset, 2);
    }

    #[test]
    fn field_generator() {
        let f9 = RingInstance::poly_over_gf(3, 2).unwrap();
        let u = parse_element("u", &f9).unwrap();
        let uu = parse_element("u*u", &f9).unwrap();
        let f = f9.field().unwrap();
        let g = f.generator().unwrap();
        assert_eq!(u, BaseElement::Poly(FqPoly::constant(g)));
        assert_eq!(uu, BaseElement::Poly(FqPoly::constant(f.mul(g, g))));
    }
}
