//! Parser for the scalar text form.
//!
//! ```text
//! expr  := term (('+' | '-') term)*
//! term  := unary (('*' | '/') unary)*
//! unary := '-' unary | power
//! power := atom ('^' '-'? integer)?
//! atom  := integer | identifier | '(' expr ')'
//! ```
//!
//! Identifiers include bracketed indices such as `p[1][2]`.

use num_bigint::BigInt;
use num_rational::BigRational;

use super::{FieldSpec, Scalar};
use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Int(BigInt),
    Ident(String),
    Op(char),
}

fn tokenize(s: &str) -> Result<Vec<Tok>> {
    let chars: Vec<char> = s.chars().collect();
    let mut out = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        if c.is_whitespace() {
            i += 1;
        } else if c.is_ascii_digit() {
            let start = i;
            while i < chars.len() && chars[i].is_ascii_digit() {
                i += 1;
            }
            let lit: String = chars[start..i].iter().collect();
            out.push(Tok::Int(lit.parse().map_err(|_| Error::Parse(format!("bad integer {lit}")))?));
        } else if c.is_alphabetic() || c == '_' {
            let start = i;
            while i < chars.len() && (chars[i].is_alphanumeric() || chars[i] == '_') {
                i += 1;
            }
            while i < chars.len() && chars[i] == '[' {
                match chars[i..].iter().position(|&c| c == ']') {
                    Some(off) => i += off + 1,
                    None => return Err(Error::Parse("unclosed '['".into())),
                }
            }
            out.push(Tok::Ident(chars[start..i].iter().filter(|c| !c.is_whitespace()).collect()));
        } else if "+-*/^()".contains(c) {
            out.push(Tok::Op(c));
            i += 1;
        } else {
            return Err(Error::Parse(format!("unexpected character '{c}'")));
        }
    }
    Ok(out)
}

struct Parser<'a> {
    toks: Vec<Tok>,
    pos: usize,
    field: &'a FieldSpec,
    resolve: &'a dyn Fn(&str) -> Option<Scalar>,
}

impl Parser<'_> {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos)
    }

    fn eat(&mut self, c: char) -> bool {
        if self.peek() == Some(&Tok::Op(c)) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expr(&mut self) -> Result<Scalar> {
        let mut acc = self.term()?;
        loop {
            if self.eat('+') {
                acc = acc.try_add(&self.term()?)?;
            } else if self.eat('-') {
                acc = acc.try_sub(&self.term()?)?;
            } else {
                return Ok(acc);
            }
        }
    }

    fn term(&mut self) -> Result<Scalar> {
        let mut acc = self.unary()?;
        loop {
            if self.eat('*') {
                acc = acc.try_mul(&self.unary()?)?;
            } else if self.eat('/') {
                acc = acc.try_div(&self.unary()?)?;
            } else {
                return Ok(acc);
            }
        }
    }

    fn unary(&mut self) -> Result<Scalar> {
        if self.eat('-') {
            return Ok(-self.unary()?);
        }
        self.power()
    }

    fn power(&mut self) -> Result<Scalar> {
        let base = self.atom()?;
        if !self.eat('^') {
            return Ok(base);
        }
        let neg = self.eat('-');
        let e = match self.toks.get(self.pos) {
            Some(Tok::Int(n)) => {
                self.pos += 1;
                i64::try_from(n.clone()).map_err(|_| Error::Parse("exponent too large".into()))?
            }
            _ => return Err(Error::Parse("expected integer exponent".into())),
        };
        base.pow(if neg { -e } else { e })
    }

    fn atom(&mut self) -> Result<Scalar> {
        match self.toks.get(self.pos).cloned() {
            Some(Tok::Int(n)) => {
                self.pos += 1;
                Ok(self.field.lift(self.field.base().from_rational(BigRational::from_integer(n))))
            }
            Some(Tok::Ident(name)) => {
                self.pos += 1;
                if let Some(s) = (self.resolve)(&name) {
                    return Ok(s);
                }
                if let Some(s) = self.field.symbol(&name) {
                    return Ok(s);
                }
                if name == "z" {
                    if let Some(g) = self.field.generator() {
                        return Ok(g);
                    }
                }
                Err(Error::Parse(format!("unknown symbol {name}")))
            }
            Some(Tok::Op('(')) => {
                self.pos += 1;
                let v = self.expr()?;
                if !self.eat(')') {
                    return Err(Error::Parse("expected ')'".into()));
                }
                Ok(v)
            }
            Some(t) => Err(Error::Parse(format!("unexpected token {t:?}"))),
            None => Err(Error::Parse("unexpected end of input".into())),
        }
    }
}

/// Parses a scalar. `resolve` is consulted first for every identifier.
pub fn parse_scalar(text: &str, field: &FieldSpec, resolve: &dyn Fn(&str) -> Option<Scalar>) -> Result<Scalar> {
    let toks = tokenize(text)?;
    if toks.is_empty() {
        return Err(Error::Parse("empty scalar".into()));
    }
    let mut p = Parser { toks, pos: 0, field, resolve };
    let v = p.expr()?;
    if p.pos != p.toks.len() {
        return Err(Error::Parse(format!("trailing input in '{text}'")));
    }
    Ok(v)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coeff::BaseField;

    fn none(_: &str) -> Option<Scalar> {
        None
    }

    #[test]
    fn round_trip_rational_functions() {
        let f = FieldSpec::functions(
            BaseField::Rationals,
            vec!["p[1][2]".into(), "p[2][1]".into(), "p[2][2]".into()],
        );
        for s in [
            "(p[1][2]^2*p[2][2]-3)/(p[2][1]+1/2)",
            "-p[1][2]^-1",
            "(p[1][2]-p[2][1])^3/(p[2][2]*p[1][2])",
            "7/3",
        ] {
            let v = parse_scalar(s, &f, &none).unwrap();
            let w = parse_scalar(&v.to_string(), &f, &none).unwrap();
            assert_eq!(v, w, "{s} -> {v}");
        }
    }

    #[test]
    fn cyclotomic_literals() {
        let f = FieldSpec::cyclotomic(12).unwrap();
        let v = parse_scalar("1+2*z-1/2*z^3", &f, &none).unwrap();
        assert_eq!(v.to_string(), "1+2*z-1/2*z^3");
        let w = parse_scalar("z^12", &f, &none).unwrap();
        assert!(w.is_one());
        assert!(parse_scalar("z^-1*z", &f, &none).unwrap().is_one());
    }

    #[test]
    fn errors() {
        let f = FieldSpec::rationals();
        assert!(matches!(parse_scalar("1+", &f, &none), Err(Error::Parse(_))));
        assert!(matches!(parse_scalar("q", &f, &none), Err(Error::Parse(_))));
        assert_eq!(parse_scalar("1/0", &f, &none), Err(Error::DivisionByZero));
    }
}
