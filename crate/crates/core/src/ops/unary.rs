//! Powers `x^n` that are quantum operations.

use std::fmt;

use super::{argument_context, instantiate, verified};
use crate::coeff::{BaseField, Scalar};
use crate::error::{Error, Result};
use crate::freealg::{multiply, Polynomial};
use crate::pairing::PairingContext;

/// Which powers of a variable with self-pairing `p` are operations.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UnaryVerdict {
    /// Multiplicative order of `p` when it is a root of unity.
    pub m: Option<u64>,
    /// Least `n` with `p^{[n]} = 0`: the exponent of the main unary operation.
    pub main_exponent: Option<u64>,
    pub characteristic: u64,
}

impl UnaryVerdict {
    /// Whether `x^n` is an operation: `n = 1` or `n = m·l^r`.
    pub fn admits(&self, n: u64) -> bool {
        if n == 1 {
            return true;
        }
        let Some(m) = self.m else { return false };
        if !n.is_multiple_of(m) {
            return false;
        }
        let mut q = n / m;
        if self.characteristic == 0 {
            return q == 1;
        }
        while q.is_multiple_of(self.characteristic) {
            q /= self.characteristic;
        }
        q == 1
    }
}

impl fmt::Display for UnaryVerdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.m, self.characteristic) {
            (None, _) => write!(f, "not a root of unity; no power x^n with n > 1 is an operation"),
            (Some(m), 0) => write!(f, "m = {m}; admissible n = {m}"),
            (Some(m), l) => write!(f, "m = {m}; admissible n = {m}*{l}^r, r >= 0"),
        }
    }
}

fn search_bound(base: &BaseField) -> u64 {
    match base {
        BaseField::Rationals => 2,
        BaseField::Cyclotomic(f) => 2 * f.order() as u64,
        BaseField::Prime(l) => *l,
    }
}

/// Unary verdict for a nonzero self-pairing `p`.
///
/// A nonconstant rational function is never a root of unity, since the base
/// field is algebraically closed in the function field; the verdict is then
/// that no power is an operation.
pub fn unary_verdict(p: &Scalar) -> Result<UnaryVerdict> {
    if p.is_zero() {
        return Err(Error::DivisionByZero);
    }
    let field = p.field();
    let characteristic = field.characteristic();
    if p.as_number().is_none() {
        return Ok(UnaryVerdict { m: None, main_exponent: None, characteristic });
    }
    let bound = search_bound(field.base());
    let mut m = None;
    let mut power = p.clone();
    for k in 1..=bound {
        if power.is_one() {
            m = Some(k);
            break;
        }
        power = &power * p;
    }
    let mut main_exponent = None;
    let mut s = field.zero();
    for k in 1..=bound {
        s = &(&s * p) + &field.one();
        if s.is_zero() {
            main_exponent = Some(k);
            break;
        }
    }
    Ok(UnaryVerdict { m, main_exponent, characteristic })
}

/// `⟦a⟧ = a^m` with `m` least such that `χ^a(g_a)^{[m]} = 0`.
pub fn main_unary(ctx: &PairingContext, a: &Polynomial) -> Result<Polynomial> {
    let sub = argument_context(ctx, std::slice::from_ref(a))?;
    let verdict = unary_verdict(sub.p(0, 0))?;
    let m = verdict
        .main_exponent
        .ok_or_else(|| Error::Undefined(format!("p11 = {} has no vanishing q-integer", sub.p(0, 0))))?;
    let x = Polynomial::var(&sub, 0);
    let mut t = x.clone();
    for _ in 1..m {
        t = multiply(&sub, &t, &x)?;
    }
    let w = instantiate(ctx, &t, std::slice::from_ref(a))?;
    verified(ctx, w, "main unary operation")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coeff::FieldSpec;

    #[test]
    fn verdicts() {
        let q = FieldSpec::rationals();
        let v = unary_verdict(&q.from_i64(-1)).unwrap();
        assert_eq!(v.m, Some(2));
        assert!(v.admits(2) && !v.admits(4));
        let f3 = FieldSpec::prime(3).unwrap();
        let v = unary_verdict(&f3.one()).unwrap();
        assert_eq!((v.m, v.main_exponent), (Some(1), Some(3)));
        assert!(v.admits(3) && v.admits(9) && !v.admits(6));
        assert_eq!(unary_verdict(&q.one()).unwrap().main_exponent, None);
        let sym = FieldSpec::functions(BaseField::Rationals, vec!["p".into()]);
        assert_eq!(unary_verdict(&sym.symbol("p").unwrap()).unwrap().m, None);
    }

    #[test]
    fn main_unary_cube_root() {
        let f = FieldSpec::cyclotomic(3).unwrap();
        let ctx = PairingContext::new(f.clone(), vec![vec![f.generator().unwrap()]]).unwrap();
        let w = main_unary(&ctx, &Polynomial::var(&ctx, 0)).unwrap();
        assert_eq!(w, Polynomial::word(&ctx, &[0, 0, 0]));
        let sym = PairingContext::symbolic(1, BaseField::Rationals, None).unwrap();
        assert!(matches!(main_unary(&sym, &Polynomial::var(&sym, 0)), Err(Error::Undefined(_))));
    }
}
