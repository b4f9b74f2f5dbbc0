use proptest::prelude::*;

use skewprim::coeff::{q_int, sym_binom, FieldSpec, Scalar};
use skewprim::freealg::{
    braided_coefficients, coassociativity_sides, coproduct, parse_polynomial, right_form_coefficients, Monomial, Polynomial,
};
use skewprim::ops;
use skewprim::pairing::PairingContext;
use skewprim::primcheck::brute_force_multilinear_space;

fn rational(n: i64, d: i64) -> Scalar {
    let f = FieldSpec::rationals();
    f.from_i64(n).try_div(&f.from_i64(d)).unwrap()
}

fn nonzero_rational() -> impl Strategy<Value = (i64, i64)> {
    ((-6i64..=6).prop_filter("nonzero", |v| *v != 0), 1i64..=4)
}

/// Context over cyclotomic(m) with every pairing a signed power of the generator.
fn root_context(n: usize) -> impl Strategy<Value = PairingContext> {
    (2u32..=6).prop_flat_map(move |m| {
        proptest::collection::vec((0..m as i64, any::<bool>()), n * n).prop_map(move |entries| {
            let f = FieldSpec::cyclotomic(m).unwrap();
            let z = f.generator().unwrap();
            let p = (0..n)
                .map(|i| {
                    (0..n)
                        .map(|j| {
                            let (k, neg) = entries[i * n + j];
                            let v = z.pow(k).unwrap();
                            if neg { -&v } else { v }
                        })
                        .collect()
                })
                .collect();
            PairingContext::new(f, p).unwrap()
        })
    })
}

fn word(n: usize, max_len: usize) -> impl Strategy<Value = Vec<u8>> {
    proptest::collection::vec(0..n as u8, 1..=max_len)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn q_int_splits_along_multiples((a, b) in nonzero_rational(), m in 1u32..=5, s in 0u32..=4, d in 0u32..5) {
        prop_assume!(d < m);
        let t = rational(a, b);
        let lhs = q_int(&t, m * s + d);
        let tm = t.pow(m as i64).unwrap();
        let rhs = &(&q_int(&tm, s) * &q_int(&t, m)) + &(&t.pow((m * s) as i64).unwrap() * &q_int(&t, d));
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn balanced_binomial_is_symmetric((a, b) in nonzero_rational(), n in 0u32..=7, k in 0u32..=7) {
        prop_assume!(k <= n);
        let t = rational(a, b);
        prop_assert_eq!(sym_binom(n, k, &t), sym_binom(n, n - k, &t));
        prop_assert_eq!(sym_binom(n, k, &t), sym_binom(n, k, &t.inv().unwrap()));
    }

    #[test]
    fn coproduct_is_coassociative_and_counital(ctx in root_context(3), letters in word(3, 5)) {
        let w = Polynomial::monomial(3, Monomial::word(3, letters), ctx.one());
        let (l, r) = coassociativity_sides(&ctx, &w).unwrap();
        prop_assert!(l == r);
        let d = coproduct(&ctx, &w).unwrap();
        prop_assert_eq!(d.counit_left(), w.clone());
        prop_assert_eq!(d.counit_right(), w);
    }

    #[test]
    fn braided_coefficients_match_right_form(ctx in root_context(3), letters in word(3, 6)) {
        prop_assert_eq!(braided_coefficients(&ctx, &letters), right_form_coefficients(&ctx, &letters));
    }

    #[test]
    fn operation_space_matches_oracle(ctx in root_context(3)) {
        let space = ops::multilinear_space(&ctx).unwrap();
        prop_assert!(space.same_span(&brute_force_multilinear_space(&ctx).unwrap()));
    }

    #[test]
    fn polynomial_text_round_trips(ctx in root_context(2), words in proptest::collection::vec((word(2, 4), -5i64..=5), 1..5)) {
        let mut w = Polynomial::zero(2);
        for (letters, c) in words {
            w.add_term(Monomial::word(2, letters), ctx.field().from_i64(c));
        }
        prop_assume!(!w.is_zero());
        prop_assert_eq!(parse_polynomial(&ctx, &w.render(&ctx)).unwrap(), w);
    }

    #[test]
    fn context_text_round_trips(ctx in root_context(3)) {
        prop_assert_eq!(PairingContext::parse(&ctx.to_text()).unwrap(), ctx);
    }
}
