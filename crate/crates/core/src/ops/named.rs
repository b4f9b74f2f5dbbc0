//! The Pareigis and Serre operations.

use super::verified;
use crate::coeff::{sym_binom, BaseField, Scalar};
use crate::error::{Error, Result};
use crate::freealg::{Monomial, Polynomial};
use crate::pairing::PairingContext;
use crate::perm::Perm;

fn is_primitive_root(z: &Scalar, n: usize) -> bool {
    let mut power = z.clone();
    for _ in 1..n {
        if power.is_one() {
            return false;
        }
        power = &power * z;
    }
    power.is_one()
}

/// A primitive `n`-th root `ζ` in the coefficient field with `ζ² = p12·p21`, if any.
pub fn pareigis_root(ctx: &PairingContext) -> Option<Scalar> {
    let n = ctx.n();
    let f = ctx.field();
    let candidates: Vec<Scalar> = match f.base() {
        BaseField::Rationals => vec![f.one(), -&f.one()],
        BaseField::Cyclotomic(c) => {
            let z = f.generator()?;
            let mut out = Vec::new();
            let mut power = f.one();
            for _ in 0..c.order() {
                out.push(power.clone());
                out.push(-&power);
                power = &power * &z;
            }
            out
        }
        BaseField::Prime(l) => (1..*l as i64).map(|v| f.from_i64(v)).collect(),
    };
    let target = if n >= 2 { ctx.pair_product(0, 1) } else { f.one() };
    candidates.into_iter().find(|z| is_primitive_root(z, n) && (z * z) == target)
}

/// `P_n = Σ_π ∏_{i<j, π(i)>π(j)} ζ^{-1} p_{π(j)π(i)} · x_{π(1)}…x_{π(n)}`.
pub fn pareigis(ctx: &PairingContext, zeta: &Scalar) -> Result<Polynomial> {
    let n = ctx.n();
    let zeta = ctx.field().coerce(zeta)?;
    if !is_primitive_root(&zeta, n) {
        return Err(Error::PreconditionFailed(format!("{zeta} is not a primitive {n}-th root of unity")));
    }
    let sq = &zeta * &zeta;
    for i in 0..n {
        for j in i + 1..n {
            if ctx.pair_product(i, j) != sq {
                return Err(Error::PreconditionFailed(format!("p{}{}*p{}{} differs from zeta^2", i + 1, j + 1, j + 1, i + 1)));
            }
        }
    }
    let zi = zeta.inv()?;
    let mut w = Polynomial::zero(n);
    for pi in Perm::all(n) {
        let mut c = ctx.one();
        for i in 0..n {
            for j in i + 1..n {
                if pi.apply(i) > pi.apply(j) {
                    c = &(&c * &zi) * ctx.p(pi.apply(j), pi.apply(i));
                }
            }
        }
        w.add_term(Monomial::word(n, pi.images().iter().map(|&k| k as u8).collect()), c);
    }
    verified(ctx, w, "Pareigis operation")
}

/// `S(x, y) = Σ_ξ (−1)^ξ (n choose ξ)_{q^{2d}} y^{n−ξ} x y^ξ` with `n = 1 − a`,
/// where the binomial is the balanced one.
pub fn serre(ctx: &PairingContext, x: usize, y: usize, a: i64, d: u32, q: &Scalar) -> Result<Polynomial> {
    if x == y || x >= ctx.n() || y >= ctx.n() {
        return Err(Error::PreconditionFailed("x and y must be distinct variables".into()));
    }
    if a > 0 {
        return Err(Error::PreconditionFailed("the Cartan entry must be nonpositive".into()));
    }
    let q = ctx.field().coerce(q)?;
    let cross = q.pow(2 * d as i64 * a)?;
    if *ctx.p(x, y) != cross || *ctx.p(y, x) != cross {
        return Err(Error::PreconditionFailed(format!("p_xy and p_yx must both equal {cross}")));
    }
    if *ctx.p(y, y) != q.pow(4 * d as i64)? {
        return Err(Error::PreconditionFailed("p_yy must equal q^(4d)".into()));
    }
    let n = (1 - a) as usize;
    let t = q.pow(2 * d as i64)?;
    let mut w = Polynomial::zero(ctx.n());
    for xi in 0..=n {
        let mut c = sym_binom(n as u32, xi as u32, &t);
        if xi % 2 == 1 {
            c = -&c;
        }
        let mut letters = vec![y; n - xi];
        letters.push(x);
        letters.extend(std::iter::repeat_n(y, xi));
        w = w.add(&Polynomial::word(ctx, &letters).scale(&c));
    }
    verified(ctx, w, "Serre operation")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coeff::FieldSpec;
    use crate::freealg::parse_polynomial;

    fn pareigis_context(n: usize, m: u32) -> PairingContext {
        let f = FieldSpec::cyclotomic(m).unwrap();
        let zeta = f.generator().unwrap().pow((m as usize / n) as i64).unwrap();
        let p = (0..n).map(|i| (0..n).map(|j| if i == j { f.one() } else { zeta.clone() }).collect()).collect();
        PairingContext::new(f, p).unwrap()
    }

    #[test]
    fn two_variable_case_is_skew_commutator() {
        let ctx = pareigis_context(2, 2);
        let zeta = pareigis_root(&ctx).unwrap();
        assert_eq!(zeta, -&ctx.one());
        let w = pareigis(&ctx, &zeta).unwrap();
        assert_eq!(w, parse_polynomial(&ctx, "x1 x2 - p[1][2] x2 x1").unwrap());
    }

    #[test]
    fn pareigis_three_and_four() {
        for (n, m) in [(3, 3), (4, 4)] {
            let ctx = pareigis_context(n, m);
            let zeta = pareigis_root(&ctx).unwrap();
            assert_eq!(pareigis(&ctx, &zeta).unwrap().len(), (1..=n).product::<usize>());
        }
    }

    #[test]
    fn serre_rejects_wrong_pairings() {
        let ctx = pareigis_context(2, 4);
        let q = ctx.field().generator().unwrap();
        assert!(matches!(serre(&ctx, 0, 1, -2, 1, &q), Err(Error::PreconditionFailed(_))));
    }
}
