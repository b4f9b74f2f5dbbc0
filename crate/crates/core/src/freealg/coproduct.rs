//! Coproducts, counit and antipode of the free enveloping algebra.

use std::collections::BTreeMap;

use super::{multiply, Monomial, Polynomial, MAX_WORD_LEN};
use crate::coeff::Scalar;
use crate::error::{Error, Result};
use crate::pairing::PairingContext;

/// Largest value of a degree function over a set of terms, and whether all terms agree.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Degree {
    pub value: usize,
    pub homogeneous: bool,
}

impl Degree {
    pub(crate) fn collect(mut it: impl Iterator<Item = usize>) -> Degree {
        let Some(first) = it.next() else {
            return Degree { value: 0, homogeneous: true };
        };
        let mut d = Degree { value: first, homogeneous: true };
        for v in it {
            if v != first {
                d.homogeneous = false;
            }
            d.value = d.value.max(v);
        }
        d
    }
}

/// Linear combination of `left ⊗ right` monomial pairs.
#[derive(Clone, Debug, PartialEq)]
pub struct TensorPolynomial {
    n: usize,
    terms: BTreeMap<(Monomial, Monomial), Scalar>,
}

impl TensorPolynomial {
    pub fn zero(n: usize) -> Self {
        TensorPolynomial { n, terms: BTreeMap::new() }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn add_term(&mut self, l: Monomial, r: Monomial, c: Scalar) {
        if c.is_zero() {
            return;
        }
        let key = (l, r);
        match self.terms.get_mut(&key) {
            Some(v) => {
                let s = &*v + &c;
                if s.is_zero() {
                    self.terms.remove(&key);
                } else {
                    *v = s;
                }
            }
            None => {
                self.terms.insert(key, c);
            }
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Monomial, &Scalar)> {
        self.terms.iter().map(|((l, r), c)| (l, r, c))
    }

    pub fn coeff(&self, l: &Monomial, r: &Monomial) -> Option<&Scalar> {
        self.terms.get(&(l.clone(), r.clone()))
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

    pub fn sub(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for ((l, r), c) in &other.terms {
            out.add_term(l.clone(), r.clone(), -c);
        }
        out
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for ((l, r), c) in &other.terms {
            out.add_term(l.clone(), r.clone(), c.clone());
        }
        out
    }

    /// Keeps the terms accepted by `keep`.
    pub fn filter(&self, keep: impl Fn(&Monomial, &Monomial) -> bool) -> Self {
        TensorPolynomial {
            n: self.n,
            terms: self.terms.iter().filter(|((l, r), _)| keep(l, r)).map(|(k, c)| (k.clone(), c.clone())).collect(),
        }
    }

    /// `a ⊗ b` for single polynomials.
    pub fn outer(a: &Polynomial, b: &Polynomial) -> Self {
        let mut out = Self::zero(a.n());
        for (ml, cl) in a.terms() {
            for (mr, cr) in b.terms() {
                out.add_term(ml.clone(), mr.clone(), cl * cr);
            }
        }
        out
    }

    pub fn degree_l(&self) -> Degree {
        Degree::collect(self.terms.keys().map(|(l, _)| l.degree()))
    }

    pub fn degree_r(&self) -> Degree {
        Degree::collect(self.terms.keys().map(|(_, r)| r.degree()))
    }

    pub fn degree_l_in(&self, x: usize) -> Degree {
        Degree::collect(self.terms.keys().map(|(l, _)| l.degree_in(x)))
    }

    pub fn degree_r_in(&self, x: usize) -> Degree {
        Degree::collect(self.terms.keys().map(|(_, r)| r.degree_in(x)))
    }

    /// `d_+ = d_l + d_r`.
    pub fn degree_total(&self) -> Degree {
        Degree::collect(self.terms.keys().map(|(l, r)| l.degree() + r.degree()))
    }

    pub fn degree_total_in(&self, x: usize) -> Degree {
        Degree::collect(self.terms.keys().map(|(l, r)| l.degree_in(x) + r.degree_in(x)))
    }

    /// `(ε ⊗ id)` applied to the tensor.
    pub fn counit_left(&self) -> Polynomial {
        let mut out = Polynomial::zero(self.n);
        for ((l, r), c) in &self.terms {
            if l.word.is_empty() {
                out.add_term(r.clone(), c.clone());
            }
        }
        out
    }

    /// `(id ⊗ ε)` applied to the tensor.
    pub fn counit_right(&self) -> Polynomial {
        let mut out = Polynomial::zero(self.n);
        for ((l, r), c) in &self.terms {
            if r.word.is_empty() {
                out.add_term(l.clone(), c.clone());
            }
        }
        out
    }
}

/// Triple tensors, used to compare both sides of coassociativity.
pub type TriplePolynomial = BTreeMap<(Monomial, Monomial, Monomial), Scalar>;

fn check_len(m: &Monomial) -> Result<()> {
    if m.word.len() > MAX_WORD_LEN {
        return Err(Error::WordTooLong(m.word.len()));
    }
    Ok(())
}

fn pair_counts_product(ctx: &PairingContext, counts: &[u32], inverse: bool) -> Scalar {
    let n = ctx.n();
    let mut acc = ctx.one();
    for x in 0..n {
        for y in 0..n {
            let k = counts[x * n + y];
            if k > 0 {
                let base = if inverse { ctx.p_inv(x, y) } else { ctx.p(x, y) };
                acc = &acc * &base.pow(k as i64).expect("nonzero pairing");
            }
        }
    }
    acc
}

/// `α_v = ∏ p[x][y]` over letters `x ∉ v` standing left of letters `y ∈ v`,
/// indexed by the bitmask of `v`.
pub fn left_form_coefficients(ctx: &PairingContext, word: &[u8]) -> Vec<Scalar> {
    let n = ctx.n();
    let len = word.len();
    (0..1u32 << len)
        .map(|mask| {
            let mut counts = vec![0u32; n * n];
            for i in 0..len {
                if mask >> i & 1 == 1 {
                    continue;
                }
                for j in i + 1..len {
                    if mask >> j & 1 == 1 {
                        counts[word[i] as usize * n + word[j] as usize] += 1;
                    }
                }
            }
            pair_counts_product(ctx, &counts, false)
        })
        .collect()
}

/// `α'_v = ∏ p[x][y]^{-1}` over letters `y ∈ v` standing left of letters `x ∉ v`:
/// the coefficients when each `g_y` is written right of `[w−v]`.
pub fn right_form_coefficients(ctx: &PairingContext, word: &[u8]) -> Vec<Scalar> {
    let n = ctx.n();
    let len = word.len();
    (0..1u32 << len)
        .map(|mask| {
            let mut counts = vec![0u32; n * n];
            for j in 0..len {
                if mask >> j & 1 == 0 {
                    continue;
                }
                for i in j + 1..len {
                    if mask >> i & 1 == 0 {
                        counts[word[i] as usize * n + word[j] as usize] += 1;
                    }
                }
            }
            pair_counts_product(ctx, &counts, true)
        })
        .collect()
}

/// Coefficients of the braided coproduct of a word, by expanding the product
/// of the `(x ⊗ 1 + 1 ⊗ x)` under `(a ⊗ b)(y ⊗ 1) = χ^y(g_b)^{-1} (ay ⊗ b)`.
pub fn braided_coefficients(ctx: &PairingContext, word: &[u8]) -> Vec<Scalar> {
    let len = word.len();
    let mut state: Vec<(u32, Scalar)> = vec![(0, ctx.one())];
    for (k, &y) in word.iter().enumerate() {
        let mut next = Vec::with_capacity(state.len() * 2);
        for (mask, c) in state {
            let mut f = c.clone();
            for (j, &b) in word.iter().enumerate().take(k) {
                if mask >> j & 1 == 1 {
                    f = &f * ctx.p_inv(y as usize, b as usize);
                }
            }
            next.push((mask, f));
            next.push((mask | 1 << k, c));
        }
        state = next;
    }
    let mut out = vec![ctx.zero(); 1 << len];
    for (mask, c) in state {
        out[mask as usize] = c;
    }
    out
}

fn split(word: &[u8], mask: u32) -> (Vec<u8>, Vec<u8>) {
    let mut rest = Vec::new();
    let mut sub = Vec::new();
    for (i, &x) in word.iter().enumerate() {
        if mask >> i & 1 == 1 {
            sub.push(x);
        } else {
            rest.push(x);
        }
    }
    (rest, sub)
}

/// `Δ(g·w) = Σ_v α_v (g·g_v)[w−v] ⊗ g·v`.
pub fn coproduct(ctx: &PairingContext, a: &Polynomial) -> Result<TensorPolynomial> {
    let n = ctx.n();
    if a.n() != n {
        return Err(Error::MixedContext);
    }
    let mut out = TensorPolynomial::zero(n);
    for (m, c) in a.terms() {
        check_len(m)?;
        let alphas = left_form_coefficients(ctx, &m.word);
        for (mask, alpha) in alphas.iter().enumerate() {
            let (rest, sub) = split(&m.word, mask as u32);
            let mut prefix = m.prefix.clone();
            for &y in &sub {
                prefix[y as usize] += 1;
            }
            let l = Monomial { prefix, word: rest };
            let r = Monomial { prefix: m.prefix.clone(), word: sub };
            out.add_term(l, r, c * alpha);
        }
    }
    Ok(out)
}

/// The coproduct computed from the right-form coefficients `α'_v`, with each
/// `[w−v] g_v` normalized by the algebra product.
pub fn coproduct_right_form(ctx: &PairingContext, a: &Polynomial) -> Result<TensorPolynomial> {
    let n = ctx.n();
    if a.n() != n {
        return Err(Error::MixedContext);
    }
    let mut out = TensorPolynomial::zero(n);
    for (m, c) in a.terms() {
        check_len(m)?;
        let alphas = right_form_coefficients(ctx, &m.word);
        for (mask, alpha) in alphas.iter().enumerate() {
            let (rest, sub) = split(&m.word, mask as u32);
            let mut gv = vec![0; n];
            for &y in &sub {
                gv[y as usize] += 1;
            }
            let head = Polynomial::monomial(n, Monomial { prefix: m.prefix.clone(), word: rest }, c * alpha);
            let left = multiply(ctx, &head, &Polynomial::group(ctx, gv))?;
            let r = Monomial { prefix: m.prefix.clone(), word: sub };
            for (lm, lc) in left.terms() {
                out.add_term(lm.clone(), r.clone(), lc.clone());
            }
        }
    }
    Ok(out)
}

/// Braided coproduct of a prefix-free polynomial.
pub fn braided_coproduct(ctx: &PairingContext, a: &Polynomial) -> Result<TensorPolynomial> {
    let n = ctx.n();
    if a.has_prefix() {
        return Err(Error::GroupPrefixPresent);
    }
    let mut out = TensorPolynomial::zero(n);
    for (m, c) in a.terms() {
        check_len(m)?;
        let betas = braided_coefficients(ctx, &m.word);
        for (mask, beta) in betas.iter().enumerate() {
            let (rest, sub) = split(&m.word, mask as u32);
            out.add_term(Monomial::word(n, rest), Monomial::word(n, sub), c * beta);
        }
    }
    Ok(out)
}

/// `ε(g·w)` is 1 for the empty word and 0 otherwise.
pub fn counit(ctx: &PairingContext, a: &Polynomial) -> Scalar {
    a.terms().filter(|(m, _)| m.word.is_empty()).fold(ctx.zero(), |acc, (_, c)| &acc + c)
}

/// `S(g) = g^{-1}`, `S(x_i) = −g_i^{-1} x_i`, extended anti-multiplicatively.
pub fn antipode(ctx: &PairingContext, a: &Polynomial) -> Result<Polynomial> {
    let n = ctx.n();
    let mut out = Polynomial::zero(n);
    for (m, c) in a.terms() {
        let mut acc = Polynomial::constant(ctx, c.clone());
        for &x in m.word.iter().rev() {
            let mut g = vec![0; n];
            g[x as usize] = -1;
            let sx = Polynomial::monomial(n, Monomial { prefix: g, word: vec![x] }, -ctx.one());
            acc = multiply(ctx, &acc, &sx)?;
        }
        let ginv = m.prefix.iter().map(|e| -e).collect();
        acc = multiply(ctx, &acc, &Polynomial::group(ctx, ginv))?;
        out = out.add(&acc);
    }
    Ok(out)
}

/// `(S ⋆ id)(a) = Σ S(a_(1)) a_(2)`.
pub fn antipode_convolution(ctx: &PairingContext, a: &Polynomial) -> Result<Polynomial> {
    let n = ctx.n();
    let mut out = Polynomial::zero(n);
    for (l, r, c) in coproduct(ctx, a)?.terms() {
        let sl = antipode(ctx, &Polynomial::monomial(n, l.clone(), c.clone()))?;
        out = out.add(&multiply(ctx, &sl, &Polynomial::monomial(n, r.clone(), ctx.one()))?);
    }
    Ok(out)
}

fn add_triple(t: &mut TriplePolynomial, key: (Monomial, Monomial, Monomial), c: Scalar) {
    if c.is_zero() {
        return;
    }
    match t.get_mut(&key) {
        Some(v) => {
            let s = &*v + &c;
            if s.is_zero() {
                t.remove(&key);
            } else {
                *v = s;
            }
        }
        None => {
            t.insert(key, c);
        }
    }
}

/// `((Δ ⊗ id)Δ(a), (id ⊗ Δ)Δ(a))`.
pub fn coassociativity_sides(ctx: &PairingContext, a: &Polynomial) -> Result<(TriplePolynomial, TriplePolynomial)> {
    let n = ctx.n();
    let d = coproduct(ctx, a)?;
    let mut left = TriplePolynomial::new();
    let mut right = TriplePolynomial::new();
    for (l, r, c) in d.terms() {
        let dl = coproduct(ctx, &Polynomial::monomial(n, l.clone(), c.clone()))?;
        for (l1, l2, c2) in dl.terms() {
            add_triple(&mut left, (l1.clone(), l2.clone(), r.clone()), c2.clone());
        }
        let dr = coproduct(ctx, &Polynomial::monomial(n, r.clone(), c.clone()))?;
        for (r1, r2, c2) in dr.terms() {
            add_triple(&mut right, (l.clone(), r1.clone(), r2.clone()), c2.clone());
        }
    }
    Ok((left, right))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coeff::{gauss_binom, BaseField};

    fn sym(n: usize) -> PairingContext {
        PairingContext::symbolic(n, BaseField::Rationals, None).unwrap()
    }

    fn mono(prefix: Vec<i32>, word: Vec<u8>) -> Monomial {
        Monomial { prefix, word }
    }

    #[test]
    fn two_letter_coproduct() {
        let c = sym(2);
        let d = coproduct(&c, &Polynomial::word(&c, &[0, 1])).unwrap();
        assert_eq!(d.len(), 4);
        let one = c.one();
        assert_eq!(d.coeff(&mono(vec![0, 0], vec![0, 1]), &mono(vec![0, 0], vec![])), Some(&one));
        assert_eq!(d.coeff(&mono(vec![1, 0], vec![1]), &mono(vec![0, 0], vec![0])), Some(&one));
        assert_eq!(d.coeff(&mono(vec![0, 1], vec![0]), &mono(vec![0, 0], vec![1])), Some(c.p(0, 1)));
        assert_eq!(d.coeff(&mono(vec![1, 1], vec![]), &mono(vec![0, 0], vec![0, 1])), Some(&one));
        assert_eq!(coproduct_right_form(&c, &Polynomial::word(&c, &[0, 1])).unwrap(), d);
        assert_eq!(right_form_coefficients(&c, &[0, 1])[1], c.p(1, 0).inv().unwrap());
    }

    #[test]
    fn powers_give_gaussian_binomials() {
        let c = sym(1);
        let d = coproduct(&c, &Polynomial::word(&c, &[0; 5])).unwrap();
        for k in 0..=5u32 {
            let l = mono(vec![k as i32], vec![0; 5 - k as usize]);
            let r = mono(vec![0], vec![0; k as usize]);
            assert_eq!(d.coeff(&l, &r), Some(&gauss_binom(5, k, c.p(0, 0))));
        }
    }

    #[test]
    fn braided_two_letters() {
        let c = sym(2);
        let d = braided_coproduct(&c, &Polynomial::word(&c, &[0, 1])).unwrap();
        let z = vec![0, 0];
        assert_eq!(d.coeff(&mono(z.clone(), vec![1]), &mono(z.clone(), vec![0])), Some(&c.p(1, 0).inv().unwrap()));
        assert_eq!(d.coeff(&mono(z.clone(), vec![0]), &mono(z.clone(), vec![1])), Some(&c.one()));
        let g = Polynomial::group(&c, vec![1, 0]);
        assert_eq!(braided_coproduct(&c, &g), Err(Error::GroupPrefixPresent));
    }

    #[test]
    fn antipode_and_counit() {
        let c = sym(2);
        let x = Polynomial::var(&c, 0);
        let s = antipode(&c, &x).unwrap();
        let expect = Polynomial::monomial(2, mono(vec![-1, 0], vec![0]), -c.one());
        assert_eq!(s, expect);
        assert!(antipode_convolution(&c, &x).unwrap().is_zero());
        assert!(counit(&c, &Polynomial::monomial(2, mono(vec![1, 0], vec![0, 1]), c.one())).is_zero());
        let w = Polynomial::word(&c, &[0, 1, 0]);
        let d = coproduct(&c, &w).unwrap();
        assert_eq!(d.counit_left(), w);
        assert_eq!(d.counit_right(), w);
        assert_eq!(antipode_convolution(&c, &w).unwrap(), Polynomial::zero(2));
    }

    #[test]
    fn word_limit() {
        let c = sym(1);
        let long = Polynomial::word(&c, &[0; 17]);
        assert_eq!(coproduct(&c, &long), Err(Error::WordTooLong(17)));
    }
}
