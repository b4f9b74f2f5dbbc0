//! Text form of polynomials: `coef * g1^a g2^b * x1 x2`, terms joined by `+`.

use std::fmt::Write as _;

use super::{multiply, Monomial, Polynomial, TensorPolynomial};
use crate::coeff::Scalar;
use crate::error::{Error, Result};
use crate::pairing::PairingContext;

/// Renders a monomial without its coefficient; the empty monomial renders as `1`.
pub fn render_monomial(ctx: &PairingContext, m: &Monomial) -> String {
    let mut parts = Vec::new();
    let group: Vec<String> = m
        .prefix
        .iter()
        .enumerate()
        .filter(|(_, &e)| e != 0)
        .map(|(i, &e)| if e == 1 { format!("g{}", i + 1) } else { format!("g{}^{e}", i + 1) })
        .collect();
    if !group.is_empty() {
        parts.push(group.join(" "));
    }
    if !m.word.is_empty() {
        let w: Vec<&str> = m.word.iter().map(|&x| ctx.names()[x as usize].as_str()).collect();
        parts.push(w.join(" "));
    }
    if parts.is_empty() {
        "1".into()
    } else {
        parts.join(" * ")
    }
}

fn render_term(out: &mut String, first: bool, c: &Scalar, body: Option<String>) {
    let neg = c.has_negative_sign();
    let abs = if neg { -c } else { c.clone() };
    if first {
        if neg {
            out.push('-');
        }
    } else {
        out.push_str(if neg { " - " } else { " + " });
    }
    let coef = if abs.is_atomic() { abs.to_string() } else { format!("({abs})") };
    match body {
        None => out.push_str(&coef),
        Some(b) if abs.is_one() => out.push_str(&b),
        Some(b) => {
            let _ = write!(out, "{coef} * {b}");
        }
    }
}

impl Polynomial {
    /// Canonical text, re-parseable by [`parse_polynomial`].
    pub fn render(&self, ctx: &PairingContext) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let mut out = String::new();
        for (i, (m, c)) in self.terms().enumerate() {
            let body = if m.word.is_empty() && !m.has_prefix() { None } else { Some(render_monomial(ctx, m)) };
            render_term(&mut out, i == 0, c, body);
        }
        out
    }
}

impl TensorPolynomial {
    pub fn render(&self, ctx: &PairingContext) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let mut out = String::new();
        for (i, (l, r, c)) in self.terms().enumerate() {
            let body = format!("{} ⊗ {}", render_monomial(ctx, l), render_monomial(ctx, r));
            render_term(&mut out, i == 0, c, Some(body));
        }
        out
    }
}

/// Splits at top-level `+`/`-` that start a new term.
fn split_terms(s: &str) -> Result<Vec<(bool, String)>> {
    let mut out = Vec::new();
    let mut depth = 0i32;
    let mut cur = String::new();
    let mut neg = false;
    let mut prev_sig: Option<char> = None;
    for ch in s.chars() {
        match ch {
            '(' | '[' => depth += 1,
            ')' | ']' => depth -= 1,
            _ => {}
        }
        if depth < 0 {
            return Err(Error::Parse("unbalanced brackets".into()));
        }
        let starts_term = depth == 0
            && (ch == '+' || ch == '-')
            && !matches!(prev_sig, Some('^') | Some('*') | Some('/') | Some('(') | Some('+') | Some('-'));
        if starts_term {
            if !cur.trim().is_empty() {
                out.push((neg, cur.trim().to_string()));
            } else if prev_sig.is_some() {
                return Err(Error::Parse("empty term".into()));
            }
            cur.clear();
            neg = ch == '-';
        } else if ch == '-' && depth == 0 && matches!(prev_sig, Some('+') | Some('-')) && cur.trim().is_empty() {
            neg = !neg;
        } else {
            cur.push(ch);
        }
        if !ch.is_whitespace() {
            prev_sig = Some(ch);
        }
    }
    if depth != 0 {
        return Err(Error::Parse("unbalanced brackets".into()));
    }
    if cur.trim().is_empty() {
        return Err(Error::Parse("empty term".into()));
    }
    out.push((neg, cur.trim().to_string()));
    Ok(out)
}

/// Splits a term into factors at top-level whitespace and `*`.
fn split_factors(term: &str) -> Vec<String> {
    let mut out = Vec::new();
    let mut depth = 0i32;
    let mut cur = String::new();
    for ch in term.chars() {
        match ch {
            '(' | '[' => depth += 1,
            ')' | ']' => depth -= 1,
            _ => {}
        }
        if depth == 0 && (ch.is_whitespace() || ch == '*') {
            if !cur.is_empty() {
                out.push(std::mem::take(&mut cur));
            }
        } else {
            cur.push(ch);
        }
    }
    if !cur.is_empty() {
        out.push(cur);
    }
    // Re-join exponent and division operators split off by spacing, e.g. `a / b`.
    let mut merged: Vec<String> = Vec::new();
    for f in out {
        let glue = merged.last().is_some_and(|l| l.ends_with('^') || l.ends_with('/')) || f.starts_with('^') || f.starts_with('/');
        if glue {
            let last = merged.pop().unwrap_or_default();
            merged.push(last + &f);
        } else {
            merged.push(f);
        }
    }
    merged
}

fn parse_group_factor(ctx: &PairingContext, f: &str) -> Option<Result<Vec<i32>>> {
    let rest = f.strip_prefix('g')?;
    let (idx, exp) = match rest.split_once('^') {
        Some((a, b)) => (a, Some(b)),
        None => (rest, None),
    };
    let i: usize = idx.parse().ok()?;
    if i == 0 || i > ctx.n() {
        return Some(Err(Error::Parse(format!("group generator {f} out of range"))));
    }
    let e: i32 = match exp {
        None => 1,
        Some(t) => match t.trim_start_matches('(').trim_end_matches(')').parse() {
            Ok(e) => e,
            Err(_) => return Some(Err(Error::Parse(format!("bad exponent in {f}")))),
        },
    };
    let mut g = vec![0; ctx.n()];
    g[i - 1] = e;
    Some(Ok(g))
}

/// Parses the text form. Factors are variable names, `g<i>^<e>` and scalars.
pub fn parse_polynomial(ctx: &PairingContext, text: &str) -> Result<Polynomial> {
    let n = ctx.n();
    if text.trim() == "0" {
        return Ok(Polynomial::zero(n));
    }
    let mut out = Polynomial::zero(n);
    for (neg, term) in split_terms(text)? {
        let mut acc = Polynomial::constant(ctx, if neg { -ctx.one() } else { ctx.one() });
        for f in split_factors(&term) {
            let factor = if let Some(i) = ctx.names().iter().position(|name| *name == f) {
                Polynomial::var(ctx, i)
            } else if let Some(g) = parse_group_factor(ctx, &f) {
                Polynomial::group(ctx, g?)
            } else {
                Polynomial::constant(ctx, ctx.parse_scalar(&f)?)
            };
            acc = multiply(ctx, &acc, &factor)?;
        }
        out = out.add(&acc);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coeff::BaseField;

    #[test]
    fn round_trip() {
        let c = PairingContext::symbolic(3, BaseField::Rationals, Some((1, 0))).unwrap();
        for s in [
            "x1 x2 - p[1][2] x2 x1",
            "(p[1][2]^-1 - p[2][1]) * x2 x1 x3 + 3/2 * g1^-2 g3 * x3",
            "g2 * x1 + 1/(p[1][3]+1) * x1 g2",
            "-x1 - -x2",
            "7",
        ] {
            let p = parse_polynomial(&c, s).unwrap();
            let text = p.render(&c);
            assert_eq!(parse_polynomial(&c, &text).unwrap(), p, "{s} -> {text}");
        }
    }

    #[test]
    fn rendering() {
        let c = PairingContext::symbolic(2, BaseField::Rationals, None).unwrap();
        let p = parse_polynomial(&c, "x1 x2 - p[1][2] x2 x1").unwrap();
        assert_eq!(p.render(&c), "x1 x2 - p[1][2] * x2 x1");
        let q = parse_polynomial(&c, "x1 g2").unwrap();
        assert_eq!(q.render(&c), "p[1][2] * g2 * x1");
        assert!(parse_polynomial(&c, "x1 +").is_err());
        assert!(parse_polynomial(&c, "x1 * y7").is_err());
    }
}
