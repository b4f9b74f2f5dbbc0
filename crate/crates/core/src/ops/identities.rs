//! Exact verification of the named identities between operations.
//!
//! Each verifier collects the instances that apply to the given context and
//! records every instance whose two sides differ.

use std::collections::BTreeSet;
use std::fmt;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::{
    d_nu, left_ladder, main_bilinear, main_quadrilinear, main_trilinear, pareigis, pareigis_root, power_ladder, quad_symmetry,
    unary_verdict, generators,
};
use crate::coeff::Scalar;
use crate::error::{Error, Result};
use crate::freealg::{braided_coefficients, right_form_coefficients, Monomial, Polynomial};
use crate::linalg::{null_space, solve_combination, Row};
use crate::pairing::PairingContext;
use crate::perm::Perm;

/// Names accepted by [`verify`].
pub const IDENTITY_NAMES: [&str; 8] = ["eq29", "eq30", "eq31", "eq58", "eq61", "eq62", "lemma83", "prop42"];

/// Outcome of checking one identity on a context.
#[derive(Clone, Debug, PartialEq)]
pub struct IdentityReport {
    pub name: String,
    pub instances: usize,
    pub failures: Vec<String>,
}

impl IdentityReport {
    fn new(name: &str) -> Self {
        IdentityReport { name: name.to_string(), instances: 0, failures: Vec::new() }
    }

    fn record(&mut self, ok: bool, what: impl FnOnce() -> String) {
        self.instances += 1;
        if !ok {
            self.failures.push(what());
        }
    }

    pub fn passed(&self) -> bool {
        self.instances > 0 && self.failures.is_empty()
    }

    fn nonempty(self) -> Result<Self> {
        if self.instances == 0 {
            return Err(Error::Undefined(format!("{} has no applicable instance in this context", self.name)));
        }
        Ok(self)
    }
}

impl fmt::Display for IdentityReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let verdict = if self.passed() { "pass" } else { "FAIL" };
        write!(f, "{}: {} ({} instances, {} failures)", self.name, verdict, self.instances, self.failures.len())?;
        for fail in &self.failures {
            write!(f, "\n  {fail}")?;
        }
        Ok(())
    }
}

fn monomial_support(polys: &[Polynomial]) -> Vec<Monomial> {
    let set: BTreeSet<&Monomial> = polys.iter().flat_map(|p| p.terms().map(|(m, _)| m)).collect();
    set.into_iter().cloned().collect()
}

fn coordinates(ctx: &PairingContext, w: &Polynomial, support: &[Monomial]) -> Row {
    support.iter().map(|m| w.coeff(m).cloned().unwrap_or_else(|| ctx.zero())).collect()
}

/// Coefficients `c` with `W = Σ c_i basis_i`, or `None` if `W` is outside the span.
pub fn express_in_basis(ctx: &PairingContext, w: &Polynomial, basis: &[Polynomial]) -> Option<Vec<Scalar>> {
    let mut all = basis.to_vec();
    all.push(w.clone());
    let support = monomial_support(&all);
    let vectors: Vec<Row> = basis.iter().map(|b| coordinates(ctx, b, &support)).collect();
    solve_combination(&vectors, &coordinates(ctx, w, &support), ctx.field())
}

/// A basis of the relations `Σ ξ_i polys_i = 0`.
pub fn linear_relations(ctx: &PairingContext, polys: &[Polynomial]) -> Vec<Row> {
    let support = monomial_support(polys);
    let rows: Vec<Row> = support
        .iter()
        .map(|m| polys.iter().map(|p| p.coeff(m).cloned().unwrap_or_else(|| ctx.zero())).collect())
        .collect();
    null_space(&rows, polys.len(), ctx.field())
}

fn defined<T>(r: Result<T>) -> Result<Option<T>> {
    match r {
        Ok(v) => Ok(Some(v)),
        Err(Error::Undefined(_)) => Ok(None),
        Err(e) => Err(e),
    }
}

fn name(ctx: &PairingContext, i: usize) -> &str {
    &ctx.names()[i]
}

/// `[x y^m]_{p12^m}` equals the ladder with factors `p12 p22^s`, `s < m`, whenever
/// `p12 p21 = p22` and `p22` is a primitive `m`-th root of unity.
pub fn verify_power_ladder(ctx: &PairingContext) -> Result<IdentityReport> {
    let mut report = IdentityReport::new("eq29");
    for y in 0..ctx.n() {
        let Some(m) = unary_verdict(ctx.p(y, y))?.m.map(|m| m as usize) else { continue };
        if m < 2 {
            continue;
        }
        for x in (0..ctx.n()).filter(|&x| x != y) {
            if ctx.pair_product(x, y) != *ctx.p(y, y) {
                continue;
            }
            let lhs = power_ladder(ctx, x, y, m, m)?;
            let rhs = left_ladder(ctx, x, y, m)?;
            report.record(lhs == rhs, || {
                format!("x = {}, y = {}, m = {m}: residual {}", name(ctx, x), name(ctx, y), lhs.sub(&rhs).render(ctx))
            });
        }
    }
    report.nonempty()
}

/// Generators together with every defined `⟦x_i, x_j⟧`.
fn bilinear_pool(ctx: &PairingContext) -> Result<Vec<(String, Polynomial)>> {
    let x = generators(ctx);
    let mut pool: Vec<(String, Polynomial)> = (0..ctx.n()).map(|i| (name(ctx, i).to_string(), x[i].clone())).collect();
    for i in 0..ctx.n() {
        for j in i + 1..ctx.n() {
            if let Some(w) = defined(main_bilinear(ctx, &x[i], &x[j]))? {
                pool.push((format!("[[{}, {}]]", name(ctx, i), name(ctx, j)), w));
            }
        }
    }
    Ok(pool)
}

/// `⟦a, b⟧ = −χ^a(g_b) ⟦b, a⟧` over generators and defined brackets of generators.
pub fn verify_antisymmetry(ctx: &PairingContext) -> Result<IdentityReport> {
    let mut report = IdentityReport::new("eq30");
    let pool = bilinear_pool(ctx)?;
    for (i, (na, a)) in pool.iter().enumerate() {
        for (nb, b) in pool.iter().skip(i + 1) {
            let Some(ab) = defined(main_bilinear(ctx, a, b))? else { continue };
            let Some(ba) = defined(main_bilinear(ctx, b, a))? else { continue };
            let chi = crate::freealg::pairing_value(ctx, a, b)?;
            let rhs = ba.scale(&chi).neg();
            report.record(ab == rhs, || format!("a = {na}, b = {nb}: residual {}", ab.sub(&rhs).render(ctx)));
        }
    }
    report.nonempty()
}

/// `⟦a,⟦b,c⟧⟧`, `⟦c,⟦a,b⟧⟧` and `⟦b,⟦c,a⟧⟧` for generators, when all are defined.
pub fn jacobi_terms(ctx: &PairingContext, a: usize, b: usize, c: usize) -> Result<Option<[Polynomial; 3]>> {
    let x = generators(ctx);
    let nested = |a: usize, b: usize, c: usize| -> Result<Option<Polynomial>> {
        let Some(inner) = defined(main_bilinear(ctx, &x[b], &x[c]))? else { return Ok(None) };
        defined(main_bilinear(ctx, &x[a], &inner))
    };
    Ok(match (nested(a, b, c)?, nested(c, a, b)?, nested(b, c, a)?) {
        (Some(t1), Some(t2), Some(t3)) => Some([t1, t2, t3]),
        _ => None,
    })
}

/// `χ^c(g_a)⟦a,⟦b,c⟧⟧ + χ^b(g_c)⟦c,⟦a,b⟧⟧ + χ^a(g_b)⟦b,⟦c,a⟧⟧ = 0` over
/// triples of distinct generators for which every bracket is defined.
///
/// The coefficients are the transposes of the commonly printed `χ^a(g_c)`,
/// `χ^c(g_b)`, `χ^b(g_a)`; with `⟦a, b⟧ = ab − χ^a(g_b) ba` only this form holds.
pub fn verify_color_jacobi(ctx: &PairingContext) -> Result<IdentityReport> {
    let mut report = IdentityReport::new("eq31");
    let n = ctx.n();
    for a in 0..n {
        for b in a + 1..n {
            for c in b + 1..n {
                let Some([t1, t2, t3]) = jacobi_terms(ctx, a, b, c)? else { continue };
                let sum = t1.scale(ctx.p(c, a)).add(&t2.scale(ctx.p(b, c))).add(&t3.scale(ctx.p(a, b)));
                report.record(sum.is_zero(), || {
                    format!("({}, {}, {}): residual {}", name(ctx, a), name(ctx, b), name(ctx, c), sum.render(ctx))
                });
            }
        }
    }
    report.nonempty()
}

/// The four `σ^k(⟦⟦x1, x2, x3⟧, x4⟧)`, `σ = (1234)`.
pub fn jacobi_analog_terms(ctx: &PairingContext) -> Result<Vec<Polynomial>> {
    if ctx.n() != 4 {
        return Err(Error::ArityMismatch { expected: 4, found: ctx.n() });
    }
    let x = generators(ctx);
    (0..4)
        .map(|k| {
            let v: Vec<&Polynomial> = (0..4).map(|i| &x[(i + k) % 4]).collect();
            let t = main_trilinear(ctx, v[0], v[1], v[2])?;
            main_bilinear(ctx, &t, v[3])
        })
        .collect()
}

/// `Σ_k ξ_k σ^k(⟦⟦x1, x2, x3⟧, x4⟧) = 0` has exactly one solution up to scalar.
pub fn verify_jacobi_analog(ctx: &PairingContext) -> Result<IdentityReport> {
    let mut report = IdentityReport::new("eq58");
    let terms = jacobi_analog_terms(ctx)?;
    let rel = linear_relations(ctx, &terms);
    report.record(rel.len() == 1, || format!("relation space has dimension {}", rel.len()));
    Ok(report)
}

/// Every permuted main quadrilinear operation lies in the span of
/// `⟦x1, x2, x3, x4⟧` and `⟦x1, x3, x2, x4⟧`.
pub fn verify_permuted_quadrilinear(ctx: &PairingContext) -> Result<IdentityReport> {
    let mut report = IdentityReport::new("eq61");
    if ctx.n() != 4 {
        return Err(Error::ArityMismatch { expected: 4, found: ctx.n() });
    }
    for mu in Perm::all(4) {
        match quad_symmetry(ctx, &mu) {
            Ok((c1, c2)) => {
                let expected = match mu.to_string().as_str() {
                    "id" => Some((ctx.one(), ctx.zero())),
                    "(23)" => Some((ctx.zero(), ctx.one())),
                    _ => None,
                };
                let ok = expected.is_none_or(|e| e == (c1.clone(), c2.clone()));
                report.record(ok, || format!("mu = {mu}: got ({c1}, {c2})"));
            }
            Err(Error::VerificationFailed(msg)) => report.record(false, || msg),
            Err(e) => return Err(e),
        }
    }
    report.nonempty()
}

/// `P_4 = ⟦x1, x2, x3, x4⟧ + ζ^{-1} p23 ⟦x1, x3, x2, x4⟧` and the main operation
/// equals `D⁺_id − p23 p24 D⁺_(234) − p24 p34 D⁺_(243)`.
pub fn verify_pareigis_decomposition(ctx: &PairingContext) -> Result<IdentityReport> {
    let mut report = IdentityReport::new("eq62");
    if ctx.n() != 4 {
        return Err(Error::ArityMismatch { expected: 4, found: ctx.n() });
    }
    let zeta = pareigis_root(ctx).ok_or_else(|| Error::Undefined("no Pareigis root of unity in this context".into()))?;
    let p4 = pareigis(ctx, &zeta)?;
    let x = generators(ctx);
    let main = main_quadrilinear(ctx, &x)?;
    let swapped = main_quadrilinear(ctx, &[x[0].clone(), x[2].clone(), x[1].clone(), x[3].clone()])?;
    let rhs = main.add(&swapped.scale(&(&zeta.inv()? * ctx.p(1, 2))));
    report.record(p4 == rhs, || format!("P4 residual {}", p4.sub(&rhs).render(ctx)));
    let d = |s: &str| -> Result<Polynomial> { Ok(d_nu(ctx, &Perm::parse(4, s)?)?.plus) };
    let repr = d("id")?
        .sub(&d("(234)")?.scale(&(ctx.p(1, 2) * ctx.p(1, 3))))
        .sub(&d("(243)")?.scale(&(ctx.p(1, 3) * ctx.p(2, 3))));
    report.record(main == repr, || format!("main operation residual {}", main.sub(&repr).render(ctx)));
    Ok(report)
}

fn random_brace_word(rng: &mut ChaCha8Rng, n: usize, max_len: usize) -> Vec<(usize, usize)> {
    let len = rng.gen_range(1..=max_len);
    (0..len)
        .map(|_| {
            let i = rng.gen_range(0..n);
            let j = (i + rng.gen_range(1..n)) % n;
            (i, j)
        })
        .collect()
}

fn bar(w: &[(usize, usize)]) -> Vec<(usize, usize)> {
    w.iter().map(|&(i, j)| (j, i)).collect()
}

fn show_word(w: &[(usize, usize)]) -> String {
    w.iter().map(|(i, j)| format!("p{}{}", i + 1, j + 1)).collect()
}

/// `{CE}{DĒ} − {C}{D} = {CDĒ}{E}` for 50 seeded random brace words of length at most 3.
pub fn verify_brace_identity(ctx: &PairingContext) -> Result<IdentityReport> {
    let mut report = IdentityReport::new("lemma83");
    if ctx.n() < 2 {
        return report.nonempty();
    }
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    for _ in 0..50 {
        let c = random_brace_word(&mut rng, ctx.n(), 3);
        let d = random_brace_word(&mut rng, ctx.n(), 3);
        let e = random_brace_word(&mut rng, ctx.n(), 3);
        let cat = |parts: &[&[(usize, usize)]]| parts.concat();
        let ebar = bar(&e);
        let lhs = &(&ctx.brace(&cat(&[&c, &e])) * &ctx.brace(&cat(&[&d, &ebar]))) - &(&ctx.brace(&c) * &ctx.brace(&d));
        let rhs = &ctx.brace(&cat(&[&c, &d, &ebar])) * &ctx.brace(&e);
        report.record(lhs == rhs, || format!("C = {}, D = {}, E = {}", show_word(&c), show_word(&d), show_word(&e)));
    }
    Ok(report)
}

/// Braided coefficients equal the right-form coproduct coefficients on 100
/// seeded random words of length at most 6.
pub fn verify_braided_coproduct(ctx: &PairingContext) -> Result<IdentityReport> {
    let mut report = IdentityReport::new("prop42");
    if ctx.n() == 0 {
        return report.nonempty();
    }
    let mut rng = ChaCha8Rng::seed_from_u64(2);
    for _ in 0..100 {
        let len = rng.gen_range(1..=6);
        let word: Vec<u8> = (0..len).map(|_| rng.gen_range(0..ctx.n()) as u8).collect();
        let ok = braided_coefficients(ctx, &word) == right_form_coefficients(ctx, &word);
        report.record(ok, || format!("word {:?}", word.iter().map(|&x| x as usize + 1).collect::<Vec<_>>()));
    }
    Ok(report)
}

/// Runs the identity called `name`.
pub fn verify(ctx: &PairingContext, name: &str) -> Result<IdentityReport> {
    match name {
        "eq29" => verify_power_ladder(ctx),
        "eq30" => verify_antisymmetry(ctx),
        "eq31" => verify_color_jacobi(ctx),
        "eq58" => verify_jacobi_analog(ctx),
        "eq61" => verify_permuted_quadrilinear(ctx),
        "eq62" => verify_pareigis_decomposition(ctx),
        "lemma83" => verify_brace_identity(ctx),
        "prop42" => verify_braided_coproduct(ctx),
        _ => Err(Error::PreconditionFailed(format!("unknown identity {name}; expected one of {}", IDENTITY_NAMES.join(", ")))),
    }
}
