//! Binary operations linear in the first variable, and the main bilinear operation.

use std::collections::BTreeMap;

use super::{argument_context, instantiate, unary_verdict, verified};
use crate::coeff::{q_int, Scalar};
use crate::error::{Error, Result};
use crate::freealg::{coproduct, multiply, skew_commutator, Monomial, Polynomial, TensorPolynomial};
use crate::linalg::{Echelon, Row};
use crate::pairing::PairingContext;

/// `[…[[base, step]_{f_0}, step]_{f_1} … step]_{f_last}`.
pub fn ladder(ctx: &PairingContext, base: &Polynomial, step: &Polynomial, factors: &[Scalar]) -> Result<Polynomial> {
    let mut v = base.clone();
    for f in factors {
        v = skew_commutator(ctx, &v, step, f)?;
    }
    Ok(v)
}

fn check_pair(ctx: &PairingContext, x: usize, y: usize, n: usize) -> Result<()> {
    if x == y || x >= ctx.n() || y >= ctx.n() {
        return Err(Error::PreconditionFailed("x and y must be distinct variables".into()));
    }
    if n == 0 {
        return Err(Error::PreconditionFailed("the degree in y must be positive".into()));
    }
    Ok(())
}

/// `p12·p21 = p22^{1−n}`.
pub fn ladder_condition_holds(ctx: &PairingContext, x: usize, y: usize, n: usize) -> bool {
    ctx.pair_product(x, y) == ctx.p_power(y, y, 1 - n as i32)
}

/// The `m` of the second condition: `p22` a primitive `m`-th root with
/// `m > 1`, `m | n` and `(p12·p21)^m = 1`.
pub fn power_condition_order(ctx: &PairingContext, x: usize, y: usize, n: usize) -> Option<usize> {
    let m = unary_verdict(ctx.p(y, y)).ok()?.m? as usize;
    if m > 1 && n.is_multiple_of(m) && ctx.pair_product(x, y).pow(m as i64).ok()?.is_one() {
        Some(m)
    } else {
        None
    }
}

/// Ladder with factors `p12·p22^s`, `s = 0..n−1`.
pub fn left_ladder(ctx: &PairingContext, x: usize, y: usize, n: usize) -> Result<Polynomial> {
    let factors: Vec<Scalar> = (0..n).map(|s| ctx.p(x, y) * &ctx.p_power(y, y, s as i32)).collect();
    ladder(ctx, &Polynomial::var(ctx, x), &Polynomial::var(ctx, y), &factors)
}

/// Ladder with factors `p21^{-1}·p22^{-s}`, `s = 0..n−1`.
pub fn right_ladder(ctx: &PairingContext, x: usize, y: usize, n: usize) -> Result<Polynomial> {
    let factors: Vec<Scalar> = (0..n).map(|s| ctx.p_inv(y, x) * &ctx.p_power(y, y, -(s as i32))).collect();
    ladder(ctx, &Polynomial::var(ctx, x), &Polynomial::var(ctx, y), &factors)
}

/// Ladder in `y^m` with `n/m` steps, each with factor `p12^m`.
pub fn power_ladder(ctx: &PairingContext, x: usize, y: usize, n: usize, m: usize) -> Result<Polynomial> {
    let yv = Polynomial::var(ctx, y);
    let mut z = yv.clone();
    for _ in 1..m {
        z = multiply(ctx, &z, &yv)?;
    }
    let f = ctx.p_power(x, y, m as i32);
    ladder(ctx, &Polynomial::var(ctx, x), &z, &vec![f; n / m])
}

/// Coefficients of `∏_{s<n}(t − p12·p22^s)`, indexed by the power of `t`.
pub fn root_product_coefficients(ctx: &PairingContext, x: usize, y: usize, n: usize) -> Vec<Scalar> {
    let mut c = vec![ctx.one()];
    for s in 0..n {
        let root = ctx.p(x, y) * &ctx.p_power(y, y, s as i32);
        let mut next = vec![ctx.zero(); c.len() + 1];
        for (k, v) in c.iter().enumerate() {
            next[k + 1] = &next[k + 1] + v;
            next[k] = &next[k] - &(v * &root);
        }
        c = next;
    }
    c
}

fn word_yxy(ctx: &PairingContext, x: usize, y: usize, left: usize, right: usize) -> Polynomial {
    let mut w = vec![y; left];
    w.push(x);
    w.extend(std::iter::repeat_n(y, right));
    Polynomial::word(ctx, &w)
}

/// `Σ_k α_k y^{n−k} x y^k` with `α_k` from [`root_product_coefficients`]; replacing
/// `t` by `R_y/L_y` sends `t^k` to that word.
pub fn root_product_polynomial(ctx: &PairingContext, x: usize, y: usize, n: usize) -> Polynomial {
    let mut w = Polynomial::zero(ctx.n());
    for (k, a) in root_product_coefficients(ctx, x, y, n).iter().enumerate() {
        w = w.add(&word_yxy(ctx, x, y, n - k, k).scale(a));
    }
    w
}

/// Rows of `α_k p22^{[k]} + α_{k−1} p22^{[n−k+1]} p12 p22^{k−1} = 0`, `k = 1..n`,
/// over the unknowns `α_0..α_n`, where `α_k` multiplies `y^k x y^{n−k}`.
pub fn tail_equations(ctx: &PairingContext, x: usize, y: usize, n: usize) -> Vec<Row> {
    let p22 = ctx.p(y, y);
    (1..=n)
        .map(|k| {
            let mut row = vec![ctx.zero(); n + 1];
            row[k] = q_int(p22, k as u32);
            row[k - 1] = &(&q_int(p22, (n - k + 1) as u32) * ctx.p(x, y)) * &ctx.p_power(y, y, k as i32 - 1);
            row
        })
        .collect()
}

/// All `W = Σ α_k y^k x y^{n−k}` with zero primitivity defect, solved from the
/// coproduct directly.
pub fn binary_brute_force(ctx: &PairingContext, x: usize, y: usize, n: usize) -> Result<Vec<Polynomial>> {
    check_pair(ctx, x, y, n)?;
    let words: Vec<Polynomial> = (0..=n).map(|k| word_yxy(ctx, x, y, k, n - k)).collect();
    let mut g = vec![0; ctx.n()];
    g[x] = 1;
    g[y] = n as i32;
    let one = Polynomial::one(ctx);
    let gw = Polynomial::group(ctx, g);
    let mut eqs: BTreeMap<(Monomial, Monomial), Row> = BTreeMap::new();
    for (k, w) in words.iter().enumerate() {
        let defect = coproduct(ctx, w)?
            .sub(&TensorPolynomial::outer(w, &one))
            .sub(&TensorPolynomial::outer(&gw, w));
        for (l, r, c) in defect.terms() {
            let row = eqs.entry((l.clone(), r.clone())).or_insert_with(|| vec![ctx.zero(); n + 1]);
            row[k] = c.clone();
        }
    }
    let mut ech = Echelon::new(n + 1);
    for row in eqs.into_values() {
        ech.insert(row);
    }
    Ok(ech
        .null_space(ctx.field())
        .into_iter()
        .map(|v| words.iter().zip(&v).fold(Polynomial::zero(ctx.n()), |acc, (w, c)| acc.add(&w.scale(c))))
        .collect())
}

/// The unique (up to scalar) operation linear in `x` of degree `n` in `y`, or
/// `None` when neither condition of the theorem holds.
pub fn binary_one_linear(ctx: &PairingContext, x: usize, y: usize, n: usize) -> Result<Option<Polynomial>> {
    check_pair(ctx, x, y, n)?;
    if ladder_condition_holds(ctx, x, y, n) {
        return verified(ctx, left_ladder(ctx, x, y, n)?, "binary operation").map(Some);
    }
    if let Some(m) = power_condition_order(ctx, x, y, n) {
        return verified(ctx, power_ladder(ctx, x, y, n, m)?, "binary operation").map(Some);
    }
    Ok(None)
}

/// `⟦a, b⟧ = ab − p12·ba` when `p12·p21 = 1`.
pub fn main_bilinear(ctx: &PairingContext, a: &Polynomial, b: &Polynomial) -> Result<Polynomial> {
    let args = [a.clone(), b.clone()];
    let sub = argument_context(ctx, &args)?;
    if !sub.pair_product(0, 1).is_one() {
        return Err(Error::Undefined(format!("p12*p21 = {} is not 1", sub.pair_product(0, 1))));
    }
    let t = skew_commutator(&sub, &Polynomial::var(&sub, 0), &Polynomial::var(&sub, 1), sub.p(0, 1))?;
    verified(ctx, instantiate(ctx, &t, &args)?, "main bilinear operation")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coeff::{BaseField, FieldSpec};
    use crate::freealg::parse_polynomial;

    /// Two variables with `p21` eliminated so that `p12·p21 = p22^{1−n}`.
    fn ladder_context(n: usize) -> PairingContext {
        let f = FieldSpec::functions(BaseField::Rationals, vec!["p[1][1]".into(), "p[1][2]".into(), "p[2][2]".into()]);
        let s = |k: &str| f.symbol(k).unwrap();
        let p21 = &s("p[1][2]").inv().unwrap() * &s("p[2][2]").pow(1 - n as i64).unwrap();
        PairingContext::new(f.clone(), vec![vec![s("p[1][1]"), s("p[1][2]")], vec![p21, s("p[2][2]")]]).unwrap()
    }

    #[test]
    fn degree_two_ladder() {
        let ctx = ladder_context(2);
        let w = binary_one_linear(&ctx, 0, 1, 2).unwrap().unwrap();
        let expected =
            parse_polynomial(&ctx, "x1 x2 x2 - p[1][2]*(1 + p[2][2]) x2 x1 x2 + p[1][2]^2 p[2][2] x2 x2 x1").unwrap();
        assert_eq!(w, expected);
        assert_eq!(w, right_ladder(&ctx, 0, 1, 2).unwrap());
        assert_eq!(w, root_product_polynomial(&ctx, 0, 1, 2));
    }

    #[test]
    fn brute_force_is_one_dimensional() {
        for n in 1..=3 {
            let ctx = ladder_context(n);
            let sols = binary_brute_force(&ctx, 0, 1, n).unwrap();
            assert_eq!(sols.len(), 1);
            let w = left_ladder(&ctx, 0, 1, n).unwrap();
            let c = w.word_coeff(&ctx, &[0].iter().chain([1].iter().cycle().take(n)).copied().collect::<Vec<_>>());
            assert_eq!(sols[0].scale(&c), w);
        }
        let generic = PairingContext::symbolic(2, BaseField::Rationals, None).unwrap();
        assert!(binary_one_linear(&generic, 0, 1, 2).unwrap().is_none());
        assert!(binary_brute_force(&generic, 0, 1, 2).unwrap().is_empty());
    }

    #[test]
    fn bilinear_definedness() {
        let generic = PairingContext::symbolic(2, BaseField::Rationals, None).unwrap();
        let (a, b) = (Polynomial::var(&generic, 0), Polynomial::var(&generic, 1));
        assert!(matches!(main_bilinear(&generic, &a, &b), Err(Error::Undefined(_))));
        let ctx = PairingContext::symbolic(2, BaseField::Rationals, Some((1, 0))).unwrap();
        let w = main_bilinear(&ctx, &Polynomial::var(&ctx, 0), &Polynomial::var(&ctx, 1)).unwrap();
        assert_eq!(w, parse_polynomial(&ctx, "x1 x2 - p[1][2] x2 x1").unwrap());
    }
}
