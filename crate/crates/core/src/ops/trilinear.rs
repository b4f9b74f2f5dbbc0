//! The main trilinear operation and its twisted symmetry.

use super::{argument_context, instantiate, verified};
use crate::coeff::Scalar;
use crate::error::{Error, Result};
use crate::freealg::{skew_commutator, Polynomial};
use crate::pairing::PairingContext;
use crate::perm::Perm;

/// Whether the triple is conforming while no pair in it is.
fn trilinear_defined(sub: &PairingContext) -> Result<()> {
    if !sub.is_conforming(&[0, 1, 2]) {
        return Err(Error::Undefined("the product of all p_ij over the triple is not 1".into()));
    }
    for (i, j) in [(0, 1), (0, 2), (1, 2)] {
        if sub.pair_product(i, j).is_one() {
            return Err(Error::Undefined(format!("p{}{}*p{}{} = 1", i + 1, j + 1, j + 1, i + 1)));
        }
    }
    Ok(())
}

/// `[[x1 x2]_{p12} x3]_{p13 p23} − c·[[x1 x3]_{p13} x2]_{p12 p32}` with
/// `c = (p31^{-1} p32^{-1} − p13 p23)/(p31^{-1} − p13)`.
fn template(sub: &PairingContext) -> Result<Polynomial> {
    let x: Vec<Polynomial> = (0..3).map(|i| Polynomial::var(sub, i)).collect();
    let p = |i: usize, j: usize| sub.p(i, j).clone();
    let pi = |i: usize, j: usize| sub.p_inv(i, j).clone();
    let first = skew_commutator(sub, &skew_commutator(sub, &x[0], &x[1], &p(0, 1))?, &x[2], &(&p(0, 2) * &p(1, 2)))?;
    let second = skew_commutator(sub, &skew_commutator(sub, &x[0], &x[2], &p(0, 2))?, &x[1], &(&p(0, 1) * &p(2, 1)))?;
    let num = &(&pi(2, 0) * &pi(2, 1)) - &(&p(0, 2) * &p(1, 2));
    let den = &pi(2, 0) - &p(0, 2);
    let c = num.try_div(&den)?;
    Ok(first.sub(&second.scale(&c)))
}

/// `⟦a, b, c⟧`, defined when the triple is conforming and no pair is.
pub fn main_trilinear(ctx: &PairingContext, a: &Polynomial, b: &Polynomial, c: &Polynomial) -> Result<Polynomial> {
    let args = [a.clone(), b.clone(), c.clone()];
    let sub = argument_context(ctx, &args)?;
    trilinear_defined(&sub)?;
    let t = template(&sub)?;
    verified(ctx, instantiate(ctx, &t, &args)?, "main trilinear operation")
}

fn check_arity(ctx: &PairingContext, n: usize) -> Result<()> {
    if ctx.n() != n {
        return Err(Error::ArityMismatch { expected: n, found: ctx.n() });
    }
    Ok(())
}

/// `α_π` with `⟦x_{π(1)}, x_{π(2)}, x_{π(3)}⟧ = α_π ⟦x_1, x_2, x_3⟧`, read off at
/// `x_1 x_2 x_3` and checked on every other word.
pub fn trilinear_symmetry_coeff(ctx: &PairingContext, pi: &Perm) -> Result<Scalar> {
    check_arity(ctx, 3)?;
    let x: Vec<Polynomial> = (0..3).map(|i| Polynomial::var(ctx, i)).collect();
    let main = main_trilinear(ctx, &x[0], &x[1], &x[2])?;
    let permuted = main_trilinear(ctx, &x[pi.apply(0)], &x[pi.apply(1)], &x[pi.apply(2)])?;
    let alpha = permuted.word_coeff(ctx, &[0, 1, 2]);
    if permuted != main.scale(&alpha) {
        return Err(Error::VerificationFailed(format!("permutation {pi} is not a scalar multiple")));
    }
    Ok(alpha)
}

/// The closed forms of `α_π` as printed alongside the symmetry law.
pub fn closed_form_alpha(ctx: &PairingContext, pi: &Perm) -> Result<Scalar> {
    check_arity(ctx, 3)?;
    let p = |i: usize, j: usize| ctx.p(i - 1, j - 1).clone();
    let pi_ = |i: usize, j: usize| ctx.p_inv(i - 1, j - 1).clone();
    let top = &p(3, 1) - &pi_(1, 3);
    let d12 = &p(1, 2) - &pi_(2, 1);
    let d23 = &p(2, 3) - &pi_(3, 2);
    let name = pi.to_string();
    Ok(match name.as_str() {
        "id" => ctx.one(),
        "(123)" => top.try_div(&d12)?,
        "(132)" => top.try_div(&d23)?,
        "(13)" => &(&p(2, 1) * &p(3, 2)) * &p(3, 1),
        "(12)" => &(&(&p(2, 1) * &p(2, 3)) * &p(1, 3)) * &top.try_div(&d23)?,
        "(23)" => &(&(&p(1, 2) * &p(3, 2)) * &p(1, 3)) * &top.try_div(&d12)?,
        _ => return Err(Error::PreconditionFailed(format!("{name} is not a permutation of three letters"))),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coeff::BaseField;
    use crate::ops::multilinear_space;

    #[test]
    fn matches_generic_space() {
        let ctx = PairingContext::symbolic(3, BaseField::Rationals, Some((1, 0))).unwrap();
        let x: Vec<Polynomial> = (0..3).map(|i| Polynomial::var(&ctx, i)).collect();
        let t = main_trilinear(&ctx, &x[0], &x[1], &x[2]).unwrap();
        let space = multilinear_space(&ctx).unwrap();
        assert_eq!(space.dim(), 1);
        assert_eq!(space.elements[0], t);
    }

    #[test]
    fn undefined_when_a_pair_conforms() {
        let f = crate::coeff::FieldSpec::rationals();
        let o = f.one();
        let two = f.from_i64(2);
        let half = &o / &two;
        let m = vec![vec![o.clone(), two.clone(), o.clone()], vec![half, o.clone(), o.clone()], vec![o.clone(), o.clone(), o]];
        let ctx = PairingContext::new(f, m).unwrap();
        let x: Vec<Polynomial> = (0..3).map(|i| Polynomial::var(&ctx, i)).collect();
        assert!(matches!(main_trilinear(&ctx, &x[0], &x[1], &x[2]), Err(Error::Undefined(_))));
    }
}
