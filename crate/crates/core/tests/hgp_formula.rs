//! Hypergraph products of cyclic codes: measured parameters against the
//! product formula, with the distance computed exactly.

use proptest::prelude::*;
use qcode::construct::{hgp, hgp_params_formula, FactorParams};
use qcode::css::{css_distance, Distance};
use qcode::poly::{circulant, UniPoly};

fn factor() -> impl Strategy<Value = (UniPoly, usize)> {
    (2usize..=8).prop_flat_map(|n| {
        prop::collection::vec(any::<bool>(), n).prop_map(move |bits| {
            let mut exps: Vec<usize> = bits.iter().enumerate().filter(|(_, b)| **b).map(|(i, _)| i).collect();
            if exps.is_empty() {
                exps.push(0);
            }
            (UniPoly::from_exponents(&exps), n)
        })
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn trivial_products_have_no_logicals(f1 in factor(), f2 in factor()) {
        let (m1, m2) = (circulant(&f1.0, f1.1), circulant(&f2.0, f2.1));
        let want = hgp_params_formula(FactorParams::of(&m1), FactorParams::of(&m2));
        prop_assume!(want.k == 0);
        prop_assert_eq!(css_distance(&hgp(&m1, &m2).code, 8).d, Distance::Infinite);
    }

    #[test]
    fn cyclic_products_match_formula(f1 in factor(), f2 in factor()) {
        let (h1, n1) = f1;
        let (h2, n2) = f2;
        let m1 = circulant(&h1, n1);
        let m2 = circulant(&h2, n2);
        let p1 = FactorParams::of(&m1);
        let p2 = FactorParams::of(&m2);
        // Square circulants: the transpose code has the same parameters.
        prop_assert_eq!(p1.code, p1.transpose);
        prop_assert_eq!(p2.code, p2.transpose);
        let want = hgp_params_formula(p1, p2);
        prop_assume!(want.k > 0);
        let code = hgp(&m1, &m2);
        prop_assert_eq!(code.n(), want.n);
        prop_assert_eq!(code.k(), want.k);
        let measured = css_distance(&code.code, 8).d;
        let d = want.d.unwrap();
        prop_assert_eq!(measured, Distance::Exact(d));
        prop_assert_eq!(Some(d), p1.code.d.min(p2.code.d));
    }
}
