//! The free enveloping algebra: group-prefixed noncommutative polynomials.
//!
//! A monomial `g·w` stores its group prefix leftmost; the normalization rule
//! `x g = χ^x(g) g x` is applied during multiplication.

mod coproduct;
mod text;

use std::collections::BTreeMap;

pub use coproduct::{
    antipode, antipode_convolution, braided_coefficients, braided_coproduct, coassociativity_sides, coproduct,
    coproduct_right_form, counit, left_form_coefficients, right_form_coefficients, Degree, TensorPolynomial,
    TriplePolynomial,
};
pub use text::{parse_polynomial, render_monomial};

use crate::coeff::Scalar;
use crate::error::{Error, Result};
use crate::pairing::{GroupElement, PairingContext};
use crate::perm::Perm;

/// Maximum word length accepted by the coproduct.
pub const MAX_WORD_LEN: usize = 16;

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Monomial {
    pub prefix: GroupElement,
    pub word: Vec<u8>,
}

impl Monomial {
    pub fn word(n: usize, word: Vec<u8>) -> Self {
        Monomial { prefix: vec![0; n], word }
    }

    pub fn one(n: usize) -> Self {
        Self::word(n, vec![])
    }

    pub fn has_prefix(&self) -> bool {
        self.prefix.iter().any(|&e| e != 0)
    }

    /// `g_{g·w} = g + Σ_{x in w} e_x`.
    pub fn group_degree(&self) -> GroupElement {
        let mut g = self.prefix.clone();
        for &x in &self.word {
            g[x as usize] += 1;
        }
        g
    }

    pub fn degree(&self) -> usize {
        self.word.len()
    }

    pub fn degree_in(&self, x: usize) -> usize {
        self.word.iter().filter(|&&y| y as usize == x).count()
    }

    fn letters(&self) -> Vec<usize> {
        self.word.iter().map(|&x| x as usize).collect()
    }
}

/// Finite linear combination of monomials with nonzero coefficients.
#[derive(Clone, Debug, PartialEq)]
pub struct Polynomial {
    n: usize,
    terms: BTreeMap<Monomial, Scalar>,
}

impl Polynomial {
    pub fn zero(n: usize) -> Self {
        Polynomial { n, terms: BTreeMap::new() }
    }

    pub fn constant(ctx: &PairingContext, c: Scalar) -> Self {
        Self::monomial(ctx.n(), Monomial::one(ctx.n()), c)
    }

    pub fn one(ctx: &PairingContext) -> Self {
        Self::constant(ctx, ctx.one())
    }

    pub fn monomial(n: usize, m: Monomial, c: Scalar) -> Self {
        let mut p = Self::zero(n);
        p.add_term(m, c);
        p
    }

    pub fn var(ctx: &PairingContext, i: usize) -> Self {
        Self::word(ctx, &[i])
    }

    pub fn word(ctx: &PairingContext, letters: &[usize]) -> Self {
        let w = letters.iter().map(|&x| x as u8).collect();
        Self::monomial(ctx.n(), Monomial::word(ctx.n(), w), ctx.one())
    }

    pub fn group(ctx: &PairingContext, g: GroupElement) -> Self {
        Self::monomial(ctx.n(), Monomial { prefix: g, word: vec![] }, ctx.one())
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn add_term(&mut self, m: Monomial, c: Scalar) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&m) {
            Some(v) => {
                let s = &*v + &c;
                if s.is_zero() {
                    self.terms.remove(&m);
                } else {
                    *v = s;
                }
            }
            None => {
                self.terms.insert(m, c);
            }
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Scalar)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, m: &Monomial) -> Option<&Scalar> {
        self.terms.get(m)
    }

    /// Coefficient of the prefix-free word, zero when absent.
    pub fn word_coeff(&self, ctx: &PairingContext, letters: &[usize]) -> Scalar {
        let m = Monomial::word(self.n, letters.iter().map(|&x| x as u8).collect());
        self.terms.get(&m).cloned().unwrap_or_else(|| ctx.zero())
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), -c);
        }
        out
    }

    pub fn neg(&self) -> Self {
        Polynomial { n: self.n, terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect() }
    }

    pub fn scale(&self, c: &Scalar) -> Self {
        if c.is_zero() {
            return Self::zero(self.n);
        }
        Polynomial { n: self.n, terms: self.terms.iter().map(|(m, x)| (m.clone(), x * c)).collect() }
    }

    pub fn has_prefix(&self) -> bool {
        self.terms.keys().any(|m| m.has_prefix())
    }

    /// Common group degree `g_W` of all monomials.
    pub fn group_degree(&self) -> Result<GroupElement> {
        let mut it = self.terms.keys().map(|m| m.group_degree());
        let first = it.next().unwrap_or_else(|| vec![0; self.n]);
        if it.any(|g| g != first) {
            return Err(Error::NotGroupHomogeneous);
        }
        Ok(first)
    }

    /// Character values `(χ^W(g_1), …, χ^W(g_n))` of a semi-invariant polynomial.
    pub fn character(&self, ctx: &PairingContext) -> Result<Vec<Scalar>> {
        let mut out: Option<Vec<Scalar>> = None;
        for m in self.terms.keys() {
            let letters = m.letters();
            let chi: Vec<Scalar> = (0..self.n)
                .map(|j| {
                    let mut e = vec![0; self.n];
                    e[j] = 1;
                    ctx.chi_word_on_group(&letters, &e)
                })
                .collect();
            match &out {
                None => out = Some(chi),
                Some(prev) if *prev != chi => return Err(Error::NotSemiInvariant),
                _ => {}
            }
        }
        Ok(out.unwrap_or_else(|| vec![ctx.one(); self.n]))
    }

    /// Whether every monomial is a prefix-free word using each variable exactly once.
    pub fn is_multilinear(&self) -> bool {
        self.terms.keys().all(|m| {
            !m.has_prefix() && m.word.len() == self.n && (0..self.n).all(|x| m.degree_in(x) == 1)
        })
    }

    /// Replaces `x_i` by `images[i]`; group prefixes are kept.
    pub fn substitute(&self, ctx: &PairingContext, images: &[Polynomial]) -> Result<Polynomial> {
        let target_n = ctx.n();
        let mut out = Polynomial::zero(target_n);
        for (m, c) in &self.terms {
            if m.has_prefix() {
                return Err(Error::GroupPrefixPresent);
            }
            let mut acc = Polynomial::constant(ctx, c.clone());
            for &x in &m.word {
                acc = multiply(ctx, &acc, &images[x as usize])?;
            }
            out = out.add(&acc);
        }
        Ok(out)
    }

    /// Applies `x_i -> x_{ν(i)}` to every word (prefixes are permuted alike).
    pub fn permute_vars(&self, nu: &Perm) -> Polynomial {
        let mut out = Polynomial::zero(self.n);
        for (m, c) in &self.terms {
            let mut prefix = vec![0; self.n];
            for (i, &e) in m.prefix.iter().enumerate() {
                prefix[nu.apply(i)] = e;
            }
            let word = m.word.iter().map(|&x| nu.apply(x as usize) as u8).collect();
            out.add_term(Monomial { prefix, word }, c.clone());
        }
        out
    }

    pub fn degree(&self) -> Degree {
        Degree::collect(self.terms.keys().map(|m| m.degree()))
    }

    pub fn degree_in(&self, x: usize) -> Degree {
        Degree::collect(self.terms.keys().map(|m| m.degree_in(x)))
    }

    fn check(&self, ctx: &PairingContext) -> Result<()> {
        if self.n != ctx.n() {
            return Err(Error::MixedContext);
        }
        Ok(())
    }
}

/// Product `(g·w)(h·v) = χ^w(h)·(g+h)·wv`, extended bilinearly.
pub fn multiply(ctx: &PairingContext, a: &Polynomial, b: &Polynomial) -> Result<Polynomial> {
    a.check(ctx)?;
    b.check(ctx)?;
    let mut out = Polynomial::zero(ctx.n());
    for (ma, ca) in &a.terms {
        let letters = ma.letters();
        for (mb, cb) in &b.terms {
            let mut c = ca * cb;
            if mb.has_prefix() && !letters.is_empty() {
                c = &c * &ctx.chi_word_on_group(&letters, &mb.prefix);
            }
            let prefix = ma.prefix.iter().zip(&mb.prefix).map(|(x, y)| x + y).collect();
            let mut word = ma.word.clone();
            word.extend_from_slice(&mb.word);
            out.add_term(Monomial { prefix, word }, c);
        }
    }
    Ok(out)
}

/// `[a, b]_p = ab − p·ba`.
pub fn skew_commutator(ctx: &PairingContext, a: &Polynomial, b: &Polynomial, p: &Scalar) -> Result<Polynomial> {
    let ab = multiply(ctx, a, b)?;
    let ba = multiply(ctx, b, a)?;
    Ok(ab.sub(&ba.scale(p)))
}

/// `χ^a(g_b)` for semi-invariant, group-homogeneous `a` and `b`.
pub fn pairing_value(ctx: &PairingContext, a: &Polynomial, b: &Polynomial) -> Result<Scalar> {
    let chi = a.character(ctx)?;
    let g = b.group_degree()?;
    let mut acc = ctx.one();
    for (c, &e) in chi.iter().zip(&g) {
        acc = &acc * &c.pow(e as i64)?;
    }
    Ok(acc)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coeff::BaseField;

    fn sym(n: usize) -> PairingContext {
        PairingContext::symbolic(n, BaseField::Rationals, None).unwrap()
    }

    #[test]
    fn normalization_rule() {
        let c = sym(2);
        let mut g2 = vec![0, 0];
        g2[1] = 1;
        let lhs = multiply(&c, &Polynomial::var(&c, 0), &Polynomial::group(&c, g2.clone())).unwrap();
        let expect = Polynomial::monomial(2, Monomial { prefix: g2, word: vec![0] }, c.p(0, 1).clone());
        assert_eq!(lhs, expect);
        let x = Polynomial::word(&c, &[0, 1]);
        assert_eq!(multiply(&c, &Polynomial::one(&c), &x).unwrap(), x);
    }

    #[test]
    fn iterated_commutator_terminal_coefficient() {
        let c = sym(3);
        let x: Vec<_> = (0..3).map(|i| Polynomial::var(&c, i)).collect();
        let id = Perm::identity(3);
        let inner = skew_commutator(&c, &x[0], &x[1], &c.q_k(&id, 1)).unwrap();
        let outer = skew_commutator(&c, &inner, &x[2], &c.q_k(&id, 2)).unwrap();
        assert_eq!(outer.len(), 4);
        assert_eq!(outer.word_coeff(&c, &[2, 1, 0]), c.p(0, 1) * c.p(0, 2) * c.p(1, 2));
    }

    #[test]
    fn group_degree_and_character() {
        let c = sym(2);
        let p = Polynomial::word(&c, &[0, 1]).add(&Polynomial::word(&c, &[1, 0]));
        assert_eq!(p.group_degree().unwrap(), vec![1, 1]);
        let q = Polynomial::word(&c, &[0]).add(&Polynomial::word(&c, &[1]));
        assert_eq!(q.group_degree(), Err(Error::NotGroupHomogeneous));
        assert_eq!(q.character(&c), Err(Error::NotSemiInvariant));
        let v = pairing_value(&c, &Polynomial::var(&c, 0), &p).unwrap();
        assert_eq!(v, c.p(0, 0) * c.p(0, 1));
    }

    #[test]
    fn associativity() {
        let c = sym(2);
        let a = Polynomial::word(&c, &[0]).add(&Polynomial::group(&c, vec![1, -1]));
        let b = Polynomial::word(&c, &[1, 0]);
        let d = Polynomial::group(&c, vec![0, 2]).add(&Polynomial::word(&c, &[1]));
        let l = multiply(&c, &multiply(&c, &a, &b).unwrap(), &d).unwrap();
        let r = multiply(&c, &a, &multiply(&c, &b, &d).unwrap()).unwrap();
        assert_eq!(l, r);
    }
}
