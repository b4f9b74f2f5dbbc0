//! Constructions of quantum operations.
//!
//! Every constructor re-checks the skew primitivity of its result before
//! returning it. Operations on polynomial arguments are built as templates in
//! the generators of an auxiliary context whose pairings are
//! `χ^{a_i}(g_{a_j})` and then substituted.

mod binary;
pub mod identities;
mod multilinear;
mod named;
mod quadrilinear;
mod trilinear;
mod unary;

pub use binary::{
    binary_brute_force, binary_one_linear, ladder_condition_holds, power_condition_order, root_product_coefficients, root_product_polynomial, tail_equations,
    ladder, left_ladder, right_ladder, power_ladder, main_bilinear,
};
pub use multilinear::{d_nu, multilinear_space, DNu};
pub use named::{pareigis, pareigis_root, serre};
pub use quadrilinear::{closed_form_betas, main_quadrilinear, quad_equations, quad_symmetry, quad_system, QuadSystem};
pub use trilinear::{main_trilinear, closed_form_alpha, trilinear_symmetry_coeff};
pub use unary::{main_unary, unary_verdict, UnaryVerdict};

pub use crate::primcheck::OperationBasis;

use crate::error::{Error, Result};
use crate::freealg::Polynomial;
use crate::pairing::PairingContext;
use crate::primcheck::is_skew_primitive;

/// Returns `w` after confirming that it is a nonzero skew primitive element.
pub(crate) fn verified(ctx: &PairingContext, w: Polynomial, what: &str) -> Result<Polynomial> {
    if w.is_zero() {
        return Err(Error::VerificationFailed(format!("{what} is zero")));
    }
    let r = is_skew_primitive(ctx, &w)?;
    if !r.verdict {
        return Err(Error::VerificationFailed(format!("{what}: defect {}", r.defect.render(ctx))));
    }
    Ok(w)
}

/// The generators `x_1, …, x_n` as polynomials.
pub fn generators(ctx: &PairingContext) -> Vec<Polynomial> {
    (0..ctx.n()).map(|i| Polynomial::var(ctx, i)).collect()
}

fn as_generator(ctx: &PairingContext, a: &Polynomial) -> Option<usize> {
    (0..ctx.n()).find(|&i| *a == Polynomial::var(ctx, i))
}

/// Context whose pairings are `χ^{a_i}(g_{a_j})`; the arguments must be skew primitive.
pub fn argument_context(ctx: &PairingContext, args: &[Polynomial]) -> Result<PairingContext> {
    let gens: Option<Vec<usize>> = args.iter().map(|a| as_generator(ctx, a)).collect();
    if let Some(idx) = gens {
        return Ok(ctx.restrict(&idx));
    }
    for (k, a) in args.iter().enumerate() {
        if a.is_zero() || !is_skew_primitive(ctx, a)?.verdict {
            return Err(Error::PreconditionFailed(format!("argument {} is not skew primitive", k + 1)));
        }
        a.character(ctx)?;
    }
    let mut p = Vec::with_capacity(args.len());
    for a in args {
        let mut row = Vec::with_capacity(args.len());
        for b in args {
            row.push(crate::freealg::pairing_value(ctx, a, b)?);
        }
        p.push(row);
    }
    PairingContext::new(ctx.field().clone(), p)
}

/// Substitutes `args` into a template built over [`argument_context`].
pub(crate) fn instantiate(ctx: &PairingContext, template: &Polynomial, args: &[Polynomial]) -> Result<Polynomial> {
    template.substitute(ctx, args)
}
