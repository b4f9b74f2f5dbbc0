use skewprim::coeff::{BaseField, FieldSpec, Scalar};
use skewprim::freealg::{parse_polynomial, Polynomial};
use skewprim::ops::{self, identities};
use skewprim::pairing::PairingContext;
use skewprim::perm::Perm;
use skewprim::primcheck::brute_force_multilinear_space;
use skewprim::Error;

fn gens(ctx: &PairingContext) -> Vec<Polynomial> {
    ops::generators(ctx)
}

fn brace(ctx: &PairingContext, w: &[(usize, usize)]) -> Scalar {
    ctx.brace(&w.iter().map(|&(i, j)| (i - 1, j - 1)).collect::<Vec<_>>())
}

fn symbolic(n: usize) -> PairingContext {
    PairingContext::symbolic(n, BaseField::Rationals, Some((1, 0))).unwrap()
}

#[test]
fn quad_system_matches_displayed_matrix() {
    let ctx = symbolic(4);
    let sys = ops::quad_system(&ctx).unwrap();
    let z = ctx.zero();
    let b = |w: &[(usize, usize)]| brace(&ctx, w);
    let expected = vec![
        vec![b(&[(1, 2)]), b(&[(1, 2), (3, 2)]), b(&[(1, 2), (3, 2), (4, 2)]), z.clone(), z.clone(), z.clone()],
        vec![b(&[(1, 3), (2, 3)]), b(&[(1, 3)]), z.clone(), b(&[(1, 3), (2, 3), (4, 3)]), z.clone(), z.clone()],
        vec![z.clone(), z.clone(), b(&[(1, 3)]), z.clone(), b(&[(1, 3), (4, 3)]), b(&[(1, 3), (4, 3), (2, 3)])],
        vec![z.clone(), z.clone(), z.clone(), b(&[(1, 2)]), b(&[(1, 2), (4, 2), (3, 2)]), b(&[(1, 2), (4, 2)])],
        vec![z.clone(), b(&[(1, 4), (3, 4), (2, 4)]), b(&[(1, 4), (3, 4)]), z.clone(), b(&[(1, 4)]), z.clone()],
        vec![b(&[(1, 4), (2, 4), (3, 4)]), z.clone(), z.clone(), b(&[(1, 4), (2, 4)]), z.clone(), b(&[(1, 4)])],
    ];
    assert_eq!(sys.first, expected);
    let second_first_row = &sys.second[0];
    assert_eq!(second_first_row[0], b(&[(1, 3), (2, 3), (1, 4), (2, 4), (3, 4)]));
    assert_eq!(second_first_row[1], b(&[(1, 3), (1, 4), (3, 4), (2, 4)]));
    assert_eq!(second_first_row[2], b(&[(1, 3), (1, 4), (3, 4)]));
}

#[test]
fn closed_form_betas_solve_every_equation() {
    let ctx = symbolic(4);
    let betas = ops::closed_form_betas(&ctx).unwrap();
    for row in ops::quad_equations(&ctx).unwrap() {
        let dot = row.iter().zip(&betas).fold(ctx.zero(), |acc, (r, (_, b))| &acc + &(r * b));
        assert!(dot.is_zero());
    }
    let main = ops::main_quadrilinear(&ctx, &gens(&ctx)).unwrap();
    assert!(main.word_coeff(&ctx, &[0, 1, 2, 3]).is_one());
    assert!(main.word_coeff(&ctx, &[0, 2, 1, 3]).is_zero());
}

#[test]
fn closed_form_alphas_against_direct_comparison() {
    let ctx = symbolic(3);
    let mut mismatched = Vec::new();
    for pi in Perm::all(3) {
        let direct = ops::trilinear_symmetry_coeff(&ctx, &pi).unwrap();
        let printed = ops::closed_form_alpha(&ctx, &pi).unwrap();
        let printed_inv = ops::closed_form_alpha(&ctx, &pi.inverse()).unwrap();
        if direct != printed {
            mismatched.push((pi.to_string(), direct == printed_inv));
        }
    }
    println!("alpha mismatches (name, matches under inverse): {mismatched:?}");
    assert!(mismatched.is_empty(), "{mismatched:?}");
}

#[test]
fn serre_matches_ladder_up_to_sign() {
    let f = FieldSpec::functions(BaseField::Rationals, vec!["q".into()]);
    let q = f.symbol("q").unwrap();
    for a in [0i64, -1, -2, -3] {
        let cross = q.pow(2 * a).unwrap();
        let m = vec![vec![f.one(), cross.clone()], vec![cross, q.pow(4).unwrap()]];
        let ctx = PairingContext::new(f.clone(), m).unwrap();
        let s = ops::serre(&ctx, 0, 1, a, 1, &q).unwrap();
        let n = (1 - a) as usize;
        let w = ops::binary_one_linear(&ctx, 0, 1, n).unwrap().unwrap();
        let sign = if n.is_multiple_of(2) { ctx.one() } else { -&ctx.one() };
        assert_eq!(s, w.scale(&sign), "a = {a}");
    }
}

#[test]
fn serre_quantum_binomial_for_cartan_minus_one() {
    let f = FieldSpec::functions(BaseField::Rationals, vec!["q".into()]);
    let q = f.symbol("q").unwrap();
    let cross = q.pow(-2).unwrap();
    let ctx = PairingContext::new(f.clone(), vec![vec![f.one(), cross.clone()], vec![cross, q.pow(4).unwrap()]]).unwrap();
    let s = ops::serre(&ctx, 0, 1, -1, 1, &q).unwrap();
    let expected = parse_polynomial(&ctx, "x2 x2 x1 - (q^2 + q^-2) x2 x1 x2 + x1 x2 x2").unwrap();
    assert_eq!(s, expected);
}

#[test]
fn char_two_fixture() {
    let f = FieldSpec::functions(BaseField::Prime(2), vec!["p[1][2]".into()]);
    let p12 = f.symbol("p[1][2]").unwrap();
    let p22 = p12.pow(-2).unwrap();
    let m = vec![vec![f.one(), p12.clone()], vec![p12.clone(), p22]];
    let ctx = PairingContext::new(f, m).unwrap();
    let w = ops::binary_one_linear(&ctx, 0, 1, 2).unwrap().unwrap();
    let expected = parse_polynomial(&ctx, "x1 x2 x2 + (p[1][2] + p[1][2]^-1) x2 x1 x2 + x2 x2 x1").unwrap();
    assert_eq!(w, expected);
}

#[test]
fn trilinear_dichotomy() {
    let ctx = symbolic(3);
    assert_eq!(ops::multilinear_space(&ctx).unwrap().dim(), 1);
    let f = FieldSpec::rationals();
    let v = |n: i64, d: i64| f.from_i64(n).try_div(&f.from_i64(d)).unwrap();
    let m = vec![
        vec![v(1, 1), v(2, 1), v(3, 1)],
        vec![v(1, 2), v(5, 1), v(-7, 1)],
        vec![v(1, 3), v(-1, 7), v(1, 1)],
    ];
    let ctx = PairingContext::new(f, m).unwrap();
    let space = ops::multilinear_space(&ctx).unwrap();
    assert_eq!(space.dim(), 2);
    assert!(space.same_span(&brute_force_multilinear_space(&ctx).unwrap()));
    let x = gens(&ctx);
    let a = ops::main_bilinear(&ctx, &x[0], &ops::main_bilinear(&ctx, &x[1], &x[2]).unwrap()).unwrap();
    let b = ops::main_bilinear(&ctx, &x[1], &ops::main_bilinear(&ctx, &x[2], &x[0]).unwrap()).unwrap();
    assert!(space.same_span(&ops::OperationBasis::new(&ctx, vec![a, b])));
}

#[test]
fn pareigis_decomposition() {
    let f = FieldSpec::cyclotomic(4).unwrap();
    let i = f.generator().unwrap();
    let m = (0..4).map(|a| (0..4).map(|b| if a == b { f.one() } else { i.clone() }).collect()).collect();
    let ctx = PairingContext::new(f, m).unwrap();
    let report = identities::verify(&ctx, "eq62").unwrap();
    assert!(report.passed(), "{report}");
}

#[test]
fn lemma_and_braided_identities_on_symbolic_context() {
    let ctx = PairingContext::symbolic(4, BaseField::Rationals, None).unwrap();
    for name in ["lemma83", "prop42"] {
        let report = identities::verify(&ctx, name).unwrap();
        assert!(report.passed(), "{report}");
    }
}

#[test]
fn bilinear_identities_when_all_pairs_conform() {
    let f = FieldSpec::functions(BaseField::Rationals, ["a", "b", "c", "u", "v", "w"].iter().map(|s| s.to_string()).collect());
    let s = |k: &str| f.symbol(k).unwrap();
    let m = vec![
        vec![s("u"), s("a"), s("b")],
        vec![s("a").inv().unwrap(), s("v"), s("c")],
        vec![s("b").inv().unwrap(), s("c").inv().unwrap(), s("w")],
    ];
    let ctx = PairingContext::new(f, m).unwrap();
    for name in ["eq30", "eq31"] {
        let report = identities::verify(&ctx, name).unwrap();
        assert!(report.passed(), "{report}");
    }
    let [t1, t2, t3] = identities::jacobi_terms(&ctx, 0, 1, 2).unwrap().unwrap();
    let printed = t1.scale(ctx.p(0, 2)).add(&t2.scale(ctx.p(2, 1))).add(&t3.scale(ctx.p(1, 0)));
    assert!(!printed.is_zero());
    assert_eq!(identities::linear_relations(&ctx, &[t1, t2, t3]).len(), 1);
}

#[test]
fn identity_without_instances_is_undefined() {
    let ctx = PairingContext::symbolic(3, BaseField::Rationals, None).unwrap();
    assert!(matches!(identities::verify(&ctx, "eq31"), Err(Error::Undefined(_))));
    assert!(matches!(identities::verify(&ctx, "eq29"), Err(Error::Undefined(_))));
}

#[test]
fn power_ladder_identity() {
    for m in 2..=5u32 {
        let f = FieldSpec::cyclotomic(m).unwrap();
        let z = f.generator().unwrap();
        let p12 = f.from_i64(3);
        let p21 = &z.try_div(&p12).unwrap() * &f.one();
        let ctx = PairingContext::new(f.clone(), vec![vec![f.one(), p12], vec![p21, z]]).unwrap();
        let report = identities::verify(&ctx, "eq29").unwrap();
        assert!(report.passed(), "{report}");
    }
}

#[test]
fn jacobi_analog_on_case_two() {
    let ctx = census_context(CASE_TWO);
    assert!(identities::verify(&ctx, "eq58").unwrap().passed());
}

#[test]
fn permuted_quadrilinear_in_span() {
    let ctx = census_context([(2, 1), (3, 1), (5, 1), (7, 1), (11, 1), (1, 2310)]);
    let report = identities::verify(&ctx, "eq61").unwrap();
    assert!(report.passed(), "{report}");
    assert_eq!(report.instances, 24);
}

const CASE_TWO: [(i64, i64); 6] = [(2, 1), (3, 1), (1, 6), (1, 6), (3, 1), (2, 1)];

#[test]
fn degenerate_census_dimensions() {
    let cases: [([(i64, i64); 6], usize); 5] = [
        ([(1, 1); 6], 6),
        (CASE_TWO, 3),
        ([(2, 1), (3, 1), (1, 1), (1, 1), (1, 2), (1, 3)], 2),
        ([(2, 1), (1, 1), (1, 1), (1, 1), (1, 2), (1, 1)], 3),
        ([(1, 1), (1, 1), (1, 1), (2, 1), (3, 1), (1, 6)], 3),
    ];
    for (prods, dim) in cases {
        let ctx = census_context(prods);
        let space = ops::multilinear_space(&ctx).unwrap();
        assert_eq!(space.dim(), dim, "{prods:?}");
        assert!(space.same_span(&brute_force_multilinear_space(&ctx).unwrap()), "{prods:?}");
    }
}

#[test]
fn case_two_subcase_with_vanishing_braces_is_not_conforming() {
    let ctx = census_context([(-1, 1), (1, 1), (1, 1), (-1, 1), (-1, 1), (1, 1)]);
    for triple in [[0, 1, 2], [0, 1, 3], [0, 2, 3], [1, 2, 3]] {
        assert!(ctx.is_conforming(&triple));
    }
    assert!(!ctx.is_conforming(&[0, 1, 2, 3]));
    assert_eq!(ops::multilinear_space(&ctx).unwrap().dim(), 0);
}

/// Four-variable rational context with `p_ij p_ji` given as fractions in the
/// order 12, 13, 14, 23, 24, 34.
fn census_context(prods: [(i64, i64); 6]) -> PairingContext {
    let f = FieldSpec::rationals();
    let frac = |(a, b): (i64, i64)| f.from_i64(a).try_div(&f.from_i64(b)).unwrap();
    let pairs = [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)];
    let mut m = vec![vec![f.one(); 4]; 4];
    for (k, &(i, j)) in pairs.iter().enumerate() {
        let pij = f.from_i64(k as i64 + 2);
        m[j][i] = frac(prods[k]).try_div(&pij).unwrap();
        m[i][j] = pij;
    }
    PairingContext::new(f, m).unwrap()
}
