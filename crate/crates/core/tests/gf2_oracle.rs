mod common;

use common::{in_row_space, naive_circulant, naive_rank, syndrome_zero, to_dense, vec_bits};
use proptest::prelude::*;
use qcode::gf2::Echelon;
use qcode::poly::{circulant, poly_gcd, UniPoly};
use qcode::BitMatrix;

fn matrix(max_rows: usize, max_cols: usize) -> impl Strategy<Value = Vec<Vec<u8>>> {
    (1..=max_rows, 1..=max_cols).prop_flat_map(|(r, c)| prop::collection::vec(prop::collection::vec(0u8..2, c), r))
}

fn uni(max_deg: usize) -> impl Strategy<Value = UniPoly> {
    prop::collection::vec(any::<bool>(), 1..=max_deg + 1).prop_map(|bits| {
        let exps: Vec<usize> = bits.iter().enumerate().filter(|(_, b)| **b).map(|(i, _)| i).collect();
        UniPoly::from_exponents(&exps)
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn rank_matches_naive(rows in matrix(12, 70)) {
        let m = BitMatrix::from_dense(&rows);
        prop_assert_eq!(m.rank(), naive_rank(&rows));
        prop_assert_eq!(m.transpose().rank(), naive_rank(&rows));
    }

    #[test]
    fn kernel_is_complete(rows in matrix(10, 20)) {
        let m = BitMatrix::from_dense(&rows);
        let ker = m.kernel_basis();
        prop_assert_eq!(ker.len(), m.cols() - naive_rank(&rows));
        let dense: Vec<Vec<u8>> = ker.iter().map(vec_bits).collect();
        for v in &dense {
            prop_assert!(syndrome_zero(&rows, v));
        }
        if !dense.is_empty() {
            prop_assert_eq!(naive_rank(&dense), dense.len());
        }
    }

    #[test]
    fn product_matches_naive(a in matrix(6, 9), b_cols in 1usize..9, seed in any::<u64>()) {
        let inner = a[0].len();
        let b: Vec<Vec<u8>> = (0..inner)
            .map(|i| (0..b_cols).map(|j| ((seed >> ((i * 7 + j) % 64)) & 1) as u8).collect())
            .collect();
        let prod = BitMatrix::from_dense(&a).mul(&BitMatrix::from_dense(&b)).unwrap();
        for (i, row) in a.iter().enumerate() {
            for j in 0..b_cols {
                let want = row.iter().zip(&b).fold(0u8, |acc, (x, brow)| acc ^ (x & brow[j]));
                prop_assert_eq!(prod.get(i, j) as u8, want);
            }
        }
    }

    #[test]
    fn echelon_membership(rows in matrix(8, 16), probe in prop::collection::vec(0u8..2, 16)) {
        let m = BitMatrix::from_dense(&rows);
        let v: Vec<u8> = probe[..m.cols()].to_vec();
        let ech = Echelon::new(&m);
        let bv = qcode::BitVector::from_bools(v.iter().map(|&b| b == 1));
        prop_assert_eq!(ech.contains(&bv), in_row_space(&rows, &v));
    }

    #[test]
    fn circulant_matches_shift_sum(h in uni(20), n in 1usize..=16) {
        let exps = h.exponents();
        prop_assert_eq!(to_dense(&circulant(&h, n)), naive_circulant(&exps, n));
    }

    #[test]
    fn circulant_is_ring_homomorphism(a in uni(10), b in uni(10), n in 1usize..=12) {
        let prod = circulant(&a, n).mul(&circulant(&b, n)).unwrap();
        prop_assert_eq!(prod, circulant(&a.mul(&b), n));
        let sum = to_dense(&circulant(&a.add(&b), n));
        let ca = to_dense(&circulant(&a, n));
        let cb = to_dense(&circulant(&b, n));
        for i in 0..n {
            for j in 0..n {
                prop_assert_eq!(sum[i][j], ca[i][j] ^ cb[i][j]);
            }
        }
    }

    #[test]
    fn gcd_divides_both(a in uni(14), b in uni(14)) {
        prop_assume!(!a.is_zero() && !b.is_zero());
        let g = poly_gcd(&a, &b).unwrap();
        prop_assert!(g.divides(&a) && g.divides(&b));
        let (qa, ra) = a.div_rem(&g).unwrap();
        prop_assert!(ra.is_zero());
        prop_assert_eq!(qa.mul(&g), a);
    }
}
