//! Properties of cyclic codes `ker h(S_n)` for `n ≤ 16`, each over at least
//! 200 random cases.

mod common;

use common::{naive_rank, syndrome_zero, to_dense, vec_bits};
use proptest::prelude::*;
use qcode::classical::{cyclic_code, cyclic_dimension, reduce_first_rows, transpose_code};
use qcode::poly::{circulant, poly_gcd, UniPoly};

fn nonzero_poly(max_deg: usize) -> impl Strategy<Value = UniPoly> {
    prop::collection::vec(any::<bool>(), 1..=max_deg + 1)
        .prop_map(|bits| {
            let exps: Vec<usize> = bits.iter().enumerate().filter(|(_, b)| **b).map(|(i, _)| i).collect();
            UniPoly::from_exponents(&exps)
        })
        .prop_filter("nonzero", |p| !p.is_zero())
}

/// A random divisor of `xⁿ − 1`, obtained as a gcd with a random polynomial.
fn divisor_case() -> impl Strategy<Value = (UniPoly, usize)> {
    (1usize..=16, nonzero_poly(20)).prop_map(|(n, h)| {
        let g = poly_gcd(&h, &UniPoly::cyclic_modulus(n)).unwrap();
        (g, n)
    })
}

fn same_span(a: &[Vec<u8>], b: &[Vec<u8>]) -> bool {
    if a.is_empty() || b.is_empty() {
        return a.is_empty() && b.is_empty();
    }
    let mut both = a.to_vec();
    both.extend_from_slice(b);
    let r = naive_rank(&both);
    r == naive_rank(&a.to_vec()) && r == naive_rank(&b.to_vec())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    /// Any `n − r` cyclically consecutive rows of `h(S_n)` are independent
    /// and span the whole row space when `h | xⁿ − 1` has degree `r`.
    #[test]
    fn consecutive_rows_span(case in divisor_case(), start in 0usize..16) {
        let (h, n) = case;
        let r = h.degree().unwrap();
        prop_assume!(r < n);
        let full = to_dense(&circulant(&h, n));
        let s = start % n;
        let window: Vec<Vec<u8>> = (0..n - r).map(|i| full[(s + i) % n].clone()).collect();
        prop_assert_eq!(naive_rank(&window), n - r);
        prop_assert_eq!(naive_rank(&full), n - r);
        let reduced = to_dense(&reduce_first_rows(&h, n).unwrap());
        prop_assert!(same_span(&reduced, &full));
    }

    /// `ker h(S_n) = ker gcd(h, xⁿ − 1)(S_n)`, of dimension `deg gcd`.
    #[test]
    fn kernel_determined_by_gcd(h in nonzero_poly(20), n in 1usize..=16) {
        let g = poly_gcd(&h, &UniPoly::cyclic_modulus(n)).unwrap();
        let ker_h: Vec<Vec<u8>> = circulant(&h, n).kernel_basis().iter().map(vec_bits).collect();
        let ker_g: Vec<Vec<u8>> = circulant(&g, n).kernel_basis().iter().map(vec_bits).collect();
        prop_assert!(same_span(&ker_h, &ker_g));
        let k = cyclic_code(&h, n).unwrap().k();
        prop_assert_eq!(k, g.degree().unwrap());
        prop_assert_eq!(cyclic_dimension(&h, n).unwrap(), k);
    }

    /// The kernel of `h(S_n)ᵀ` is the reversal `J_n·v` of the kernel of
    /// `h(S_n)`, so both codes share `[n, k, d]`.
    #[test]
    fn transpose_kernel_is_reversal(h in nonzero_poly(20), n in 1usize..=16) {
        let code = cyclic_code(&h, n).unwrap();
        let t = transpose_code(&code);
        let ht = to_dense(t.check_matrix());
        let ker: Vec<Vec<u8>> = code.kernel_basis().iter().map(vec_bits).collect();
        let reversed: Vec<Vec<u8>> = ker.iter().map(|v| v.iter().rev().copied().collect()).collect();
        for v in &reversed {
            prop_assert!(syndrome_zero(&ht, v));
        }
        let ker_t: Vec<Vec<u8>> = t.kernel_basis().iter().map(vec_bits).collect();
        prop_assert!(same_span(&reversed, &ker_t));
        prop_assert_eq!(code.params(), t.params());
    }
}
