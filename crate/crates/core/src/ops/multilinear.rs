//! Multilinear operations as linear dependences of the `D_ν`.

use std::collections::BTreeMap;

use super::verified;
use crate::error::{Error, Result};
use crate::freealg::{skew_commutator, Monomial, Polynomial};
use crate::linalg::Echelon;
use crate::pairing::PairingContext;
use crate::perm::Perm;
use crate::primcheck::OperationBasis;

/// The left ladder `D⁺_ν`, the right ladder `D⁻_ν` and `D_ν = D⁺_ν − D⁻_ν`.
#[derive(Clone, Debug, PartialEq)]
pub struct DNu {
    pub nu: Perm,
    pub plus: Polynomial,
    pub minus: Polynomial,
    pub diff: Polynomial,
}

/// Builds `ν([…[[x_1 x_2]_{q_2} x_3]_{q_3} … x_n]_{q_n})` and its starred twin.
pub fn d_nu(ctx: &PairingContext, nu: &Perm) -> Result<DNu> {
    let n = ctx.n();
    if nu.len() != n || (n > 0 && nu.apply(0) != 0) {
        return Err(Error::PreconditionFailed(format!("{nu} must be a permutation of 1..{n} fixing 1")));
    }
    let first = Polynomial::var(ctx, 0);
    let mut plus = first.clone();
    let mut minus = first;
    for k in 1..n {
        let x = Polynomial::var(ctx, nu.apply(k));
        plus = skew_commutator(ctx, &plus, &x, &ctx.q_k(nu, k))?;
        minus = skew_commutator(ctx, &minus, &x, &ctx.q_k_star(nu, k))?;
    }
    let diff = plus.sub(&minus);
    Ok(DNu { nu: nu.clone(), plus, minus, diff })
}

/// All multilinear operations: empty unless `∏_{i≠j} p_ij = 1`; otherwise
/// `W = Σ β_ν D⁺_ν` for each dependence `Σ β_ν D_ν = 0`. The basis is in
/// reduced echelon form in the `β` coordinates.
pub fn multilinear_space(ctx: &PairingContext) -> Result<OperationBasis> {
    let n = ctx.n();
    let all: Vec<usize> = (0..n).collect();
    if !ctx.is_conforming(&all) {
        return Ok(OperationBasis::new(ctx, Vec::new()));
    }
    let nus = Perm::fixing_first(n);
    let ds: Vec<DNu> = nus.iter().map(|nu| d_nu(ctx, nu)).collect::<Result<_>>()?;
    let mut rows: BTreeMap<&Monomial, Vec<_>> = BTreeMap::new();
    for (col, d) in ds.iter().enumerate() {
        for (m, c) in d.diff.terms() {
            rows.entry(m).or_insert_with(|| vec![ctx.zero(); ds.len()])[col] = c.clone();
        }
    }
    let mut ech = Echelon::new(ds.len());
    for row in rows.into_values() {
        ech.insert(row);
    }
    let mut elements = Vec::new();
    for beta in ech.null_space(ctx.field()) {
        let mut w = Polynomial::zero(n);
        for (b, d) in beta.iter().zip(&ds) {
            if !b.is_zero() {
                w = w.add(&d.plus.scale(b));
            }
        }
        elements.push(verified(ctx, w, "multilinear operation")?);
    }
    Ok(OperationBasis::new(ctx, elements))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coeff::BaseField;
    use crate::freealg::parse_polynomial;
    use crate::primcheck::{is_left_primitive_wrt, is_right_primitive_wrt};

    #[test]
    fn d_id_for_three_variables() {
        let ctx = PairingContext::symbolic(3, BaseField::Rationals, Some((1, 0))).unwrap();
        let d = d_nu(&ctx, &Perm::identity(3)).unwrap();
        let expected = parse_polynomial(
            &ctx,
            "(p[2][1]^-1 - p[1][2]) x2 x1 x3 + (p[3][1]^-1*p[3][2]^-1 - p[1][3]*p[2][3]) x3 x1 x2",
        )
        .unwrap();
        assert_eq!(d.diff, expected);
        let d23 = d_nu(&ctx, &Perm::parse(3, "(23)").unwrap()).unwrap();
        let expected23 = parse_polynomial(
            &ctx,
            "(p[2][1]^-1*p[2][3]^-1 - p[1][2]*p[3][2]) x2 x1 x3 + (p[3][1]^-1 - p[1][3]) x3 x1 x2",
        )
        .unwrap();
        assert_eq!(d23.diff, expected23);
    }

    #[test]
    fn ladders_are_one_sided_primitive() {
        let ctx = PairingContext::symbolic(3, BaseField::Rationals, None).unwrap();
        for nu in Perm::fixing_first(3) {
            let d = d_nu(&ctx, &nu).unwrap();
            assert!(is_left_primitive_wrt(&ctx, &d.plus, 0).unwrap());
            assert!(is_right_primitive_wrt(&ctx, &d.minus, 0).unwrap());
            let lead: Vec<usize> = nu.images().to_vec();
            assert!(d.plus.word_coeff(&ctx, &lead).is_one());
        }
    }

    #[test]
    fn generic_space_is_empty() {
        let ctx = PairingContext::symbolic(3, BaseField::Rationals, None).unwrap();
        assert_eq!(multilinear_space(&ctx).unwrap().dim(), 0);
    }
}
