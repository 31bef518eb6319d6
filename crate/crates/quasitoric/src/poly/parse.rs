//! Text form of polynomials.
//!
//! Grammar (whitespace ignored, no implicit multiplication):
//!
//! ```text
//! expr    := ['-'] term (('+' | '-') term)*
//! term    := factor ('*' factor)*
//! factor  := primary ('^' INT)?
//! primary := INT ('/' INT)? | 'x0' | 'x1' | 'x2' | 'z' | '(' expr ')'
//! ```
//!
//! `z` denotes the generator ζ of the coefficient field; with order 1 it
//! reduces to 1.  [`parse_form`] accepts anything matching the grammar whose
//! collected terms share one total degree; [`Form`]'s `Display` prints the
//! canonical representative, and parsing that text reproduces the form.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;

use super::form::{Form, FormError, Mono};
use super::scalar::Scalar;

#[derive(Clone, Debug, PartialEq)]
enum Tok {
    Int(BigInt),
    Var(usize),
    Zeta,
    Plus,
    Minus,
    Star,
    Caret,
    Slash,
    LParen,
    RParen,
}

fn err(pos: usize, message: impl Into<String>) -> FormError {
    FormError::Syntax {
        pos,
        message: message.into(),
    }
}

fn lex(text: &str) -> Result<Vec<(usize, Tok)>, FormError> {
    let bytes = text.as_bytes();
    let mut out = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i] as char;
        match c {
            ' ' | '\t' | '\n' | '\r' => i += 1,
            '+' => {
                out.push((i, Tok::Plus));
                i += 1;
            }
            '-' => {
                out.push((i, Tok::Minus));
                i += 1;
            }
            '*' => {
                out.push((i, Tok::Star));
                i += 1;
            }
            '^' => {
                out.push((i, Tok::Caret));
                i += 1;
            }
            '/' => {
                out.push((i, Tok::Slash));
                i += 1;
            }
            '(' => {
                out.push((i, Tok::LParen));
                i += 1;
            }
            ')' => {
                out.push((i, Tok::RParen));
                i += 1;
            }
            '0'..='9' => {
                let start = i;
                while i < bytes.len() && bytes[i].is_ascii_digit() {
                    i += 1;
                }
                let digits = &text[start..i];
                let value: BigInt = digits.parse().expect("digit run parses");
                out.push((start, Tok::Int(value)));
            }
            'x' => {
                let idx = match bytes.get(i + 1).map(|b| *b as char) {
                    Some('0') => 0,
                    Some('1') => 1,
                    Some('2') => 2,
                    _ => return Err(err(i, "expected x0, x1 or x2")),
                };
                out.push((i, Tok::Var(idx)));
                i += 2;
            }
            'z' => {
                out.push((i, Tok::Zeta));
                i += 1;
            }
            _ => return Err(err(i, format!("unexpected character '{c}'"))),
        }
    }
    Ok(out)
}

/// Terms collected without the homogeneity requirement; the check happens
/// once at the end of parsing.
struct Raw {
    order: u32,
    terms: BTreeMap<Mono, Scalar>,
}

impl Raw {
    fn zero(order: u32) -> Raw {
        Raw {
            order,
            terms: BTreeMap::new(),
        }
    }

    fn scalar(order: u32, c: Scalar) -> Raw {
        let mut r = Raw::zero(order);
        r.push(Mono([0, 0, 0]), c);
        r
    }

    fn push(&mut self, m: Mono, c: Scalar) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                let sum = e.get() + &c;
                if sum.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = sum;
                }
            }
        }
    }

    fn add(mut self, rhs: Raw) -> Raw {
        for (m, c) in rhs.terms {
            self.push(m, c);
        }
        self
    }

    fn neg(self) -> Raw {
        Raw {
            order: self.order,
            terms: self.terms.into_iter().map(|(m, c)| (m, -&c)).collect(),
        }
    }

    fn mul(&self, rhs: &Raw) -> Raw {
        let mut out = Raw::zero(self.order);
        for (ma, ca) in &self.terms {
            for (mb, cb) in &rhs.terms {
                out.push(ma.mul(mb), ca * cb);
            }
        }
        out
    }

    fn pow(&self, e: u32) -> Raw {
        let mut acc = Raw::scalar(self.order, Scalar::one(self.order));
        let mut base = Raw {
            order: self.order,
            terms: self.terms.clone(),
        };
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }
}

struct Parser<'a> {
    toks: &'a [(usize, Tok)],
    pos: usize,
    end: usize,
    order: u32,
}

impl<'a> Parser<'a> {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|(_, t)| t)
    }

    fn here(&self) -> usize {
        self.toks.get(self.pos).map_or(self.end, |(p, _)| *p)
    }

    fn bump(&mut self) -> Option<&Tok> {
        let t = self.toks.get(self.pos).map(|(_, t)| t);
        self.pos += 1;
        t
    }

    fn expr(&mut self) -> Result<Raw, FormError> {
        let mut acc = if self.peek() == Some(&Tok::Minus) {
            self.bump();
            self.term()?.neg()
        } else {
            self.term()?
        };
        loop {
            match self.peek() {
                Some(Tok::Plus) => {
                    self.bump();
                    acc = acc.add(self.term()?);
                }
                Some(Tok::Minus) => {
                    self.bump();
                    acc = acc.add(self.term()?.neg());
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<Raw, FormError> {
        let mut acc = self.factor()?;
        while self.peek() == Some(&Tok::Star) {
            self.bump();
            let rhs = self.factor()?;
            acc = acc.mul(&rhs);
        }
        Ok(acc)
    }

    fn factor(&mut self) -> Result<Raw, FormError> {
        let base = self.primary()?;
        if self.peek() == Some(&Tok::Caret) {
            self.bump();
            let pos = self.here();
            match self.bump().cloned() {
                Some(Tok::Int(e)) => {
                    let e: u32 = u32::try_from(e)
                        .map_err(|_| err(pos, "exponent does not fit in 32 bits"))?;
                    Ok(base.pow(e))
                }
                _ => Err(err(pos, "expected a nonnegative integer exponent")),
            }
        } else {
            Ok(base)
        }
    }

    fn primary(&mut self) -> Result<Raw, FormError> {
        let pos = self.here();
        match self.bump().cloned() {
            Some(Tok::Int(n)) => {
                let value = if self.peek() == Some(&Tok::Slash) {
                    self.bump();
                    let dpos = self.here();
                    match self.bump().cloned() {
                        Some(Tok::Int(d)) => {
                            if d.is_zero() {
                                return Err(err(dpos, "zero denominator"));
                            }
                            BigRational::new(n, d)
                        }
                        _ => return Err(err(dpos, "expected an integer denominator")),
                    }
                } else {
                    BigRational::from_integer(n)
                };
                Ok(Raw::scalar(
                    self.order,
                    Scalar::from_rational(value, self.order),
                ))
            }
            Some(Tok::Var(i)) => {
                let mut r = Raw::zero(self.order);
                let mut e = [0u32; 3];
                e[i] = 1;
                r.push(Mono(e), Scalar::one(self.order));
                Ok(r)
            }
            Some(Tok::Zeta) => Ok(Raw::scalar(self.order, Scalar::zeta(self.order))),
            Some(Tok::LParen) => {
                let inner = self.expr()?;
                match self.bump() {
                    Some(Tok::RParen) => Ok(inner),
                    _ => Err(err(self.here(), "expected ')'")),
                }
            }
            _ => Err(err(pos, "expected a number, variable, z or '('")),
        }
    }
}

/// Parses text into a homogeneous form over Q(ζ_order).
pub fn parse_form(text: &str, order: u32) -> Result<Form, FormError> {
    assert!(order >= 1, "cyclotomic order must be at least 1");
    let toks = lex(text)?;
    if toks.is_empty() {
        return Err(err(0, "empty input"));
    }
    let mut parser = Parser {
        toks: &toks,
        pos: 0,
        end: text.len(),
        order,
    };
    let raw = parser.expr()?;
    if parser.pos != toks.len() {
        return Err(err(parser.here(), "unexpected trailing input"));
    }
    Form::from_terms(order, raw.terms)
}

/// Canonical text of a form (same as its `Display`).
pub fn format_form(f: &Form) -> String {
    f.to_string()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_and_canonicalizes() {
        let f = parse_form("x0^2 - (1/2)*x1*x2", 1).unwrap();
        assert_eq!(f.degree(), Some(2));
        assert_eq!(f.to_string(), "x0^2 - 1/2*x1*x2");
        // Format of a parse is already canonical: parse again, same form.
        assert_eq!(parse_form(&f.to_string(), 1).unwrap(), f);
    }

    #[test]
    fn zeta_coefficients() {
        let f = parse_form("z*x0^3", 4).unwrap();
        assert_eq!(f.to_string(), "(z)*x0^3");
        assert_eq!(parse_form(&f.to_string(), 4).unwrap(), f);
        // With order 1 the generator collapses to 1.
        assert_eq!(parse_form("z*x0^3", 1).unwrap(), parse_form("x0^3", 1).unwrap());
        // (1 - z) prints inside parentheses and round-trips.
        let g = parse_form("(1 - z)*x1*x2 + x0^2", 4).unwrap();
        assert_eq!(g.to_string(), "x0^2 + (1 - z)*x1*x2");
        assert_eq!(parse_form(&g.to_string(), 4).unwrap(), g);
    }

    #[test]
    fn rejects_bad_input() {
        assert!(matches!(
            parse_form("x0 + x1^2", 1),
            Err(FormError::NonHomogeneous)
        ));
        assert!(matches!(
            parse_form("2x0", 1),
            Err(FormError::Syntax { .. })
        ));
        assert!(matches!(
            parse_form("x0 ++ x1", 1),
            Err(FormError::Syntax { .. })
        ));
        assert!(matches!(
            parse_form("x3", 1),
            Err(FormError::Syntax { .. })
        ));
        assert!(matches!(
            parse_form("1/0", 1),
            Err(FormError::Syntax { .. })
        ));
        assert!(matches!(parse_form("", 1), Err(FormError::Syntax { .. })));
    }

    #[test]
    fn expansion_collapses_to_homogeneous() {
        let f = parse_form("(x0 + x1)^2 - x0^2 - 2*x0*x1", 1).unwrap();
        assert_eq!(f, parse_form("x1^2", 1).unwrap());
        // Full cancellation yields the zero form, printed as 0.
        let z = parse_form("x0 - x0", 1).unwrap();
        assert!(z.is_zero());
        assert_eq!(z.to_string(), "0");
    }

    #[test]
    fn negative_leading_coefficients_round_trip() {
        let f = parse_form("-x0 + x1", 1).unwrap();
        assert_eq!(f.to_string(), "-x0 + x1");
        let g = parse_form("-3/4*x0^2 - x1*x2", 1).unwrap();
        assert_eq!(g.to_string(), "-3/4*x0^2 - x1*x2");
        assert_eq!(parse_form(&g.to_string(), 1).unwrap(), g);
    }
}
