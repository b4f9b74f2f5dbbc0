//! The main quadrilinear operation, its linear system and its symmetry law.

use super::{argument_context, d_nu, instantiate, verified, DNu};
use crate::coeff::Scalar;
use crate::error::{Error, Result};
use crate::freealg::Polynomial;
use crate::linalg::Row;
use crate::pairing::PairingContext;
use crate::perm::Perm;

/// The homogeneous system for the `β_ν`, columns in the order
/// id, (23), (234), (34), (24), (243).
#[derive(Clone, Debug)]
pub struct QuadSystem {
    /// Row `μ`: minus the coefficients at `μ(x2 x1 x3 x4)`.
    pub first: Vec<Row>,
    /// Row `μ`: the coefficients at `μ(x4 x3 x1 x2)`.
    pub second: Vec<Row>,
}

impl QuadSystem {
    /// All twelve rows.
    pub fn extended(&self) -> Vec<Row> {
        self.first.iter().chain(&self.second).cloned().collect()
    }
}

fn check_arity(ctx: &PairingContext) -> Result<()> {
    if ctx.n() != 4 {
        return Err(Error::ArityMismatch { expected: 4, found: ctx.n() });
    }
    Ok(())
}

fn all_d(ctx: &PairingContext) -> Result<Vec<DNu>> {
    Perm::fixing_first(4).iter().map(|nu| d_nu(ctx, nu)).collect()
}

fn image(mu: &Perm, word: [usize; 4]) -> Vec<usize> {
    word.iter().map(|&i| mu.apply(i)).collect()
}

/// Coefficient rows of `Σ β_ν D_ν` at the words `μ(x2 x1 x3 x4)` and `μ(x4 x3 x1 x2)`.
pub fn quad_system(ctx: &PairingContext) -> Result<QuadSystem> {
    check_arity(ctx)?;
    let ds = all_d(ctx)?;
    let mus = Perm::fixing_first(4);
    let rows = |word: [usize; 4], sign: bool| -> Vec<Row> {
        mus.iter()
            .map(|mu| {
                let w = image(mu, word);
                ds.iter()
                    .map(|d| {
                        let c = d.diff.word_coeff(ctx, &w);
                        if sign {
                            -&c
                        } else {
                            c
                        }
                    })
                    .collect()
            })
            .collect()
    };
    Ok(QuadSystem { first: rows([1, 0, 2, 3], true), second: rows([3, 2, 0, 1], false) })
}

/// Every coefficient row of `Σ β_ν D_ν`, one per word.
pub fn quad_equations(ctx: &PairingContext) -> Result<Vec<Row>> {
    check_arity(ctx)?;
    let ds = all_d(ctx)?;
    let mut words: Vec<Vec<u8>> = ds.iter().flat_map(|d| d.diff.terms().map(|(m, _)| m.word.clone())).collect();
    words.sort();
    words.dedup();
    Ok(words
        .iter()
        .map(|w| {
            let letters: Vec<usize> = w.iter().map(|&x| x as usize).collect();
            ds.iter().map(|d| d.diff.word_coeff(ctx, &letters)).collect()
        })
        .collect())
}

/// The `β_ν` of the main operation, in the order of [`Perm::fixing_first`].
pub fn closed_form_betas(ctx: &PairingContext) -> Result<Vec<(Perm, Scalar)>> {
    check_arity(ctx)?;
    let b = |w: &[(usize, usize)]| ctx.brace(&w.iter().map(|&(i, j)| (i - 1, j - 1)).collect::<Vec<_>>());
    let div = |num: Scalar, den: Scalar| -> Result<Scalar> {
        num.try_div(&den).map_err(|_| Error::Undefined("a brace in a denominator vanishes".into()))
    };
    let p12 = b(&[(1, 2)]);
    let p14 = b(&[(1, 4)]);
    let p43 = b(&[(4, 3)]);
    let p12_32_42 = b(&[(1, 2), (3, 2), (4, 2)]);
    let p13_23 = b(&[(1, 3), (2, 3)]);
    let p13_23_43 = b(&[(1, 3), (2, 3), (4, 3)]);
    let p14_34 = b(&[(1, 4), (3, 4)]);
    let p14_24_34_13_23 = b(&[(1, 4), (2, 4), (3, 4), (1, 3), (2, 3)]);
    let values = [
        ctx.one(),
        ctx.zero(),
        -&div(p12.clone(), p12_32_42.clone())?,
        -&div(p13_23, p13_23_43.clone())?,
        div(&p12 * &p14_34, &p14 * &p12_32_42)?,
        -&div(&p43 * &p14_24_34_13_23, &p14 * &p13_23_43)?,
    ];
    Ok(Perm::fixing_first(4).into_iter().zip(values).collect())
}

fn has_proper_conforming_subset(sub: &PairingContext) -> bool {
    let pairs = (0..4).flat_map(|i| (i + 1..4).map(move |j| vec![i, j]));
    let triples = (0..4).map(|s| (0..4).filter(|&t| t != s).collect::<Vec<_>>());
    pairs.chain(triples).any(|set| sub.is_conforming(&set))
}

/// `⟦a1, a2, a3, a4⟧ = Σ β_ν D⁺_ν`, defined when all four arguments form a
/// conforming set and Γ_4^{(14)} holds.
pub fn main_quadrilinear(ctx: &PairingContext, args: &[Polynomial]) -> Result<Polynomial> {
    if args.len() != 4 {
        return Err(Error::ArityMismatch { expected: 4, found: args.len() });
    }
    let sub = argument_context(ctx, args)?;
    if !sub.is_conforming(&[0, 1, 2, 3]) {
        return Err(Error::Undefined("the product of all p_ij is not 1".into()));
    }
    if !sub.gamma4(0, 3)? {
        return Err(Error::Undefined("condition Γ_4^(14) fails".into()));
    }
    let betas = closed_form_betas(&sub)?;
    let ds = all_d(&sub)?;
    let mut plus = Polynomial::zero(4);
    let mut diff = Polynomial::zero(4);
    for ((_, b), d) in betas.iter().zip(&ds) {
        plus = plus.add(&d.plus.scale(b));
        diff = diff.add(&d.diff.scale(b));
    }
    if !diff.is_zero() {
        return Err(Error::VerificationFailed("the β_ν do not solve the linear system".into()));
    }
    verified(ctx, instantiate(ctx, &plus, args)?, "main quadrilinear operation")
}

/// `(c1, c2)` with `⟦x_{μ(1)}, …, x_{μ(4)}⟧ = c1 ⟦x1, x2, x3, x4⟧ + c2 ⟦x1, x3, x2, x4⟧`.
pub fn quad_symmetry(ctx: &PairingContext, mu: &Perm) -> Result<(Scalar, Scalar)> {
    check_arity(ctx)?;
    if has_proper_conforming_subset(ctx) {
        return Err(Error::Undefined("some proper subset of the variables is conforming".into()));
    }
    let x: Vec<Polynomial> = (0..4).map(|i| Polynomial::var(ctx, i)).collect();
    let pick = |order: [usize; 4]| order.iter().map(|&i| x[i].clone()).collect::<Vec<_>>();
    let main = main_quadrilinear(ctx, &pick([0, 1, 2, 3]))?;
    let swapped = main_quadrilinear(ctx, &pick([0, 2, 1, 3]))?;
    let permuted = main_quadrilinear(ctx, &pick([mu.apply(0), mu.apply(1), mu.apply(2), mu.apply(3)]))?;
    let c1 = permuted.word_coeff(ctx, &[0, 1, 2, 3]);
    let c2 = permuted.word_coeff(ctx, &[0, 2, 1, 3]);
    if permuted != main.scale(&c1).add(&swapped.scale(&c2)) {
        return Err(Error::VerificationFailed(format!("permutation {mu} is outside the span of the two main values")));
    }
    Ok((c1, c2))
}
