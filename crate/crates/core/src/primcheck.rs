//! Primitivity predicates and the brute-force oracle for multilinear operations.

use std::collections::BTreeMap;

use crate::coeff::Scalar;
use crate::error::{Error, Result};
use crate::freealg::{coproduct, left_form_coefficients, Monomial, Polynomial, TensorPolynomial};
use crate::linalg::{self, Echelon, Row};
use crate::pairing::{GroupElement, PairingContext};
use crate::perm::Perm;

/// Outcome of a skew-primitivity test.
#[derive(Clone, Debug)]
pub struct PrimitivityReport {
    pub verdict: bool,
    /// `Δ(W) − W⊗1 − g_W⊗W`.
    pub defect: TensorPolynomial,
    pub group_degree: GroupElement,
}

/// Tests `Δ(W) = W⊗1 + g_W⊗W`.
pub fn is_skew_primitive(ctx: &PairingContext, w: &Polynomial) -> Result<PrimitivityReport> {
    if w.is_zero() {
        return Err(Error::PreconditionFailed("the zero polynomial has no group degree".into()));
    }
    let g = w.group_degree()?;
    let delta = coproduct(ctx, w)?;
    let defect = delta
        .sub(&TensorPolynomial::outer(w, &Polynomial::one(ctx)))
        .sub(&TensorPolynomial::outer(&Polynomial::group(ctx, g.clone()), w));
    Ok(PrimitivityReport { verdict: defect.is_zero(), defect, group_degree: g })
}

fn require_variable(w: &Polynomial, x: usize) -> Result<()> {
    if w.terms().any(|(m, _)| m.degree_in(x) > 0) {
        Ok(())
    } else {
        Err(Error::VariableAbsent(x + 1))
    }
}

/// Terms of `Δ(W) − W⊗1` whose left factor contains `x`.
pub fn left_obstruction(ctx: &PairingContext, w: &Polynomial, x: usize) -> Result<TensorPolynomial> {
    require_variable(w, x)?;
    let rest = coproduct(ctx, w)?.sub(&TensorPolynomial::outer(w, &Polynomial::one(ctx)));
    Ok(rest.filter(|l, _| l.degree_in(x) > 0))
}

/// Terms of `Δ(W) − g_W⊗W` whose right factor contains `x`.
pub fn right_obstruction(ctx: &PairingContext, w: &Polynomial, x: usize) -> Result<TensorPolynomial> {
    require_variable(w, x)?;
    let g = w.group_degree()?;
    let rest = coproduct(ctx, w)?.sub(&TensorPolynomial::outer(&Polynomial::group(ctx, g), w));
    Ok(rest.filter(|_, r| r.degree_in(x) > 0))
}

/// `d_l^{(x)}(Δ(W) − W⊗1) = 0`.
pub fn is_left_primitive_wrt(ctx: &PairingContext, w: &Polynomial, x: usize) -> Result<bool> {
    Ok(left_obstruction(ctx, w, x)?.is_zero())
}

/// `d_r^{(x)}(Δ(W) − g_W⊗W) = 0`.
pub fn is_right_primitive_wrt(ctx: &PairingContext, w: &Polynomial, x: usize) -> Result<bool> {
    Ok(right_obstruction(ctx, w, x)?.is_zero())
}

/// A basis of multilinear operations with the `β_ν` coordinates of each
/// element in the `D⁺_ν` basis.
#[derive(Clone, Debug)]
pub struct OperationBasis {
    pub ctx: PairingContext,
    pub elements: Vec<Polynomial>,
    pub betas: Vec<Vec<(Perm, Scalar)>>,
}

impl OperationBasis {
    pub fn new(ctx: &PairingContext, elements: Vec<Polynomial>) -> Self {
        let betas = elements.iter().map(|w| beta_coordinates(ctx, w)).collect();
        OperationBasis { ctx: ctx.clone(), elements, betas }
    }

    pub fn dim(&self) -> usize {
        self.elements.len()
    }

    /// Coefficient vectors over the words `x_{π(1)}…x_{π(n)}`, `π` in lexicographic order.
    pub fn coordinates(&self) -> Vec<Row> {
        self.elements.iter().map(|w| multilinear_coordinates(&self.ctx, w)).collect()
    }

    pub fn same_span(&self, other: &OperationBasis) -> bool {
        let n = self.ctx.n();
        let ncols = Perm::all(n).len();
        linalg::same_span(&self.coordinates(), &other.coordinates(), ncols)
    }

    /// `β_ν` of element `k`.
    pub fn beta(&self, k: usize, nu: &Perm) -> Option<&Scalar> {
        self.betas[k].iter().find(|(p, _)| p == nu).map(|(_, b)| b)
    }
}

fn perm_word(p: &Perm) -> Vec<u8> {
    p.images().iter().map(|&i| i as u8).collect()
}

/// Coefficients at `x_{π(1)}…x_{π(n)}` for all `π`, lexicographically.
pub fn multilinear_coordinates(ctx: &PairingContext, w: &Polynomial) -> Row {
    let n = ctx.n();
    Perm::all(n)
        .iter()
        .map(|p| w.coeff(&Monomial::word(n, perm_word(p))).cloned().unwrap_or_else(|| ctx.zero()))
        .collect()
}

/// Coefficients at `x_1 x_{ν(2)}…x_{ν(n)}` for `ν` fixing the first index.
pub fn beta_coordinates(ctx: &PairingContext, w: &Polynomial) -> Vec<(Perm, Scalar)> {
    let n = ctx.n();
    Perm::fixing_first(n)
        .into_iter()
        .map(|nu| {
            let c = w.coeff(&Monomial::word(n, perm_word(&nu))).cloned().unwrap_or_else(|| ctx.zero());
            (nu, c)
        })
        .collect()
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

/// Largest arity accepted by [`brute_force_multilinear_space`].
pub const ORACLE_MAX_ARITY: usize = 5;

/// Solves `Δ(W) = W⊗1 + g_W⊗W` for `W = Σ_π α_π x_{π(1)}…x_{π(n)}` directly
/// from the coproduct, without using any commutator structure.
pub fn brute_force_multilinear_space(ctx: &PairingContext) -> Result<OperationBasis> {
    let n = ctx.n();
    if n > ORACLE_MAX_ARITY {
        return Err(Error::ArityTooLarge(n));
    }
    let perms = Perm::all(n);
    let ncols = perms.len();
    let mut equations: BTreeMap<(Vec<u8>, Vec<u8>), Vec<(usize, Scalar)>> = BTreeMap::new();
    for (col, p) in perms.iter().enumerate() {
        let word = perm_word(p);
        let alphas = left_form_coefficients(ctx, &word);
        for mask in 1..(1u32 << n).saturating_sub(1) {
            equations.entry(split(&word, mask)).or_default().push((col, alphas[mask as usize].clone()));
        }
    }
    let mut ech = Echelon::new(ncols);
    let mut seen: Vec<Vec<(usize, Scalar)>> = Vec::new();
    for entries in equations.into_values() {
        if seen.contains(&entries) {
            continue;
        }
        let mut row = vec![ctx.zero(); ncols];
        for (c, v) in &entries {
            row[*c] = &row[*c] + v;
        }
        ech.insert(row);
        seen.push(entries);
        if ech.rank() == ncols {
            break;
        }
    }
    let elements = ech
        .null_space(ctx.field())
        .into_iter()
        .map(|v| {
            let mut w = Polynomial::zero(n);
            for (p, c) in perms.iter().zip(v) {
                w.add_term(Monomial::word(n, perm_word(p)), c);
            }
            w
        })
        .collect();
    Ok(OperationBasis::new(ctx, elements))
}

/// The `β_ν` with `W = Σ β_ν D⁺_ν`, provided `W` is left primitive w.r.t. `x_1`.
pub fn decompose_left_primitive(ctx: &PairingContext, w: &Polynomial) -> Result<Vec<(Perm, Scalar)>> {
    if !w.is_multilinear() || w.is_zero() {
        return Err(Error::PreconditionFailed("decomposition needs a nonzero multilinear polynomial".into()));
    }
    let obstruction = left_obstruction(ctx, w, 0)?;
    if !obstruction.is_zero() {
        return Err(Error::NotLeftPrimitive(obstruction.render(ctx)));
    }
    let betas = beta_coordinates(ctx, w);
    let mut rebuilt = Polynomial::zero(ctx.n());
    for (nu, b) in &betas {
        if !b.is_zero() {
            rebuilt = rebuilt.add(&crate::ops::d_nu(ctx, nu)?.plus.scale(b));
        }
    }
    if rebuilt != *w {
        return Err(Error::VerificationFailed("W differs from Σ β_ν D⁺_ν".into()));
    }
    Ok(betas)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coeff::{BaseField, FieldSpec};
    use crate::freealg::parse_polynomial;

    fn numeric(p: &[&[i64]]) -> PairingContext {
        let f = FieldSpec::rationals();
        let m = p.iter().map(|r| r.iter().map(|&v| f.from_i64(v)).collect()).collect();
        PairingContext::new(f, m).unwrap()
    }

    fn rational(f: &FieldSpec, a: i64, b: i64) -> Scalar {
        &f.from_i64(a) / &f.from_i64(b)
    }

    #[test]
    fn skew_commutator_is_primitive() {
        let f = FieldSpec::rationals();
        let m = vec![vec![f.one(), f.from_i64(2)], vec![rational(&f, 1, 2), f.from_i64(3)]];
        let ctx = PairingContext::new(f, m).unwrap();
        let w = parse_polynomial(&ctx, "x1 x2 - 2 x2 x1").unwrap();
        assert!(is_skew_primitive(&ctx, &w).unwrap().verdict);
        let x1 = Polynomial::var(&ctx, 0);
        assert!(is_skew_primitive(&ctx, &x1).unwrap().verdict);
    }

    #[test]
    fn plain_product_has_defect() {
        let ctx = PairingContext::symbolic(2, BaseField::Rationals, None).unwrap();
        let w = Polynomial::word(&ctx, &[0, 1]);
        let r = is_skew_primitive(&ctx, &w).unwrap();
        assert!(!r.verdict);
        let mut g1 = Monomial::word(2, vec![1]);
        g1.prefix[0] = 1;
        assert!(r.defect.coeff(&g1, &Monomial::word(2, vec![0])).is_some());
    }

    #[test]
    fn errors_are_signalled() {
        let ctx = numeric(&[&[1, 1], &[1, 1]]);
        let w = parse_polynomial(&ctx, "x1 + g1 * x2").unwrap();
        assert_eq!(is_skew_primitive(&ctx, &w).unwrap_err(), Error::NotGroupHomogeneous);
        let x1 = Polynomial::var(&ctx, 0);
        assert_eq!(is_left_primitive_wrt(&ctx, &x1, 1).unwrap_err(), Error::VariableAbsent(2));
        assert!(is_left_primitive_wrt(&ctx, &x1, 0).unwrap());
        assert!(is_right_primitive_wrt(&ctx, &x1, 0).unwrap());
    }

    #[test]
    fn oracle_small_cases() {
        let f = FieldSpec::rationals();
        let m = vec![vec![f.one(), f.from_i64(2)], vec![rational(&f, 1, 2), f.one()]];
        let ctx = PairingContext::new(f, m).unwrap();
        let b = brute_force_multilinear_space(&ctx).unwrap();
        assert_eq!(b.dim(), 1);
        assert_eq!(b.elements[0], parse_polynomial(&ctx, "x1 x2 - 2 x2 x1").unwrap());

        let generic = PairingContext::symbolic(2, BaseField::Rationals, None).unwrap();
        assert_eq!(brute_force_multilinear_space(&generic).unwrap().dim(), 0);

        let big = numeric(&[&[1; 6], &[1; 6], &[1; 6], &[1; 6], &[1; 6], &[1; 6]]);
        assert_eq!(brute_force_multilinear_space(&big).unwrap_err(), Error::ArityTooLarge(6));
    }

    #[test]
    fn decomposition_rejects_non_left_primitive() {
        let ctx = PairingContext::symbolic(2, BaseField::Rationals, None).unwrap();
        let w = Polynomial::word(&ctx, &[1, 0]);
        assert!(matches!(decompose_left_primitive(&ctx, &w), Err(Error::NotLeftPrimitive(_))));
    }
}
