//! Naive reference implementations on `Vec<Vec<u8>>`, sharing no code with
//! the library.

#![allow(dead_code)]

use qcode::css::CssCode;
use qcode::{BitMatrix, BitVector};
use rand::rngs::StdRng;
use rand::Rng;

pub type Dense = Vec<Vec<u8>>;

pub fn to_dense(m: &BitMatrix) -> Dense {
    (0..m.rows())
        .map(|i| (0..m.cols()).map(|j| m.get(i, j) as u8).collect())
        .collect()
}

pub fn vec_bits(v: &BitVector) -> Vec<u8> {
    (0..v.len()).map(|i| v.get(i) as u8).collect()
}

pub fn naive_rank(rows: &Dense) -> usize {
    let mut m = rows.clone();
    let cols = m.first().map_or(0, |r| r.len());
    let mut rank = 0;
    for c in 0..cols {
        let Some(p) = (rank..m.len()).find(|&i| m[i][c] == 1) else {
            continue;
        };
        m.swap(rank, p);
        for i in 0..m.len() {
            if i != rank && m[i][c] == 1 {
                let pivot = m[rank].clone();
                for (a, b) in m[i].iter_mut().zip(pivot) {
                    *a ^= b;
                }
            }
        }
        rank += 1;
    }
    rank
}

pub fn in_row_space(rows: &Dense, v: &[u8]) -> bool {
    let mut stacked = rows.clone();
    stacked.push(v.to_vec());
    naive_rank(&stacked) == naive_rank(rows)
}

pub fn syndrome_zero(h: &Dense, v: &[u8]) -> bool {
    h.iter()
        .all(|row| row.iter().zip(v).filter(|(a, b)| **a == 1 && **b == 1).count() % 2 == 0)
}

fn bits_of(x: u64, n: usize) -> Vec<u8> {
    (0..n).map(|i| ((x >> i) & 1) as u8).collect()
}

/// Minimum weight of a nonzero vector in `ker h`, by scanning all `2ⁿ` words.
pub fn brute_classical_distance(h: &Dense, n: usize) -> Option<usize> {
    (1u64..1 << n)
        .map(|x| bits_of(x, n))
        .filter(|v| syndrome_zero(h, v))
        .map(|v| v.iter().filter(|&&b| b == 1).count())
        .min()
}

/// Minimum weight of `v` with `checks·v = 0` and `v` outside the row space
/// of `stabilizers`, by scanning all `2ⁿ` words.
pub fn brute_logical_weight(checks: &Dense, stabilizers: &Dense, n: usize) -> Option<usize> {
    let mut best: Option<usize> = None;
    for x in 1u64..1 << n {
        let w = x.count_ones() as usize;
        if best.is_some_and(|b| w >= b) {
            continue;
        }
        let v = bits_of(x, n);
        if syndrome_zero(checks, &v) && !in_row_space(stabilizers, &v) {
            best = Some(w);
        }
    }
    best
}

/// `Σ S^e` with `S e_c = e_{c+1}`: row `r` has ones at columns `r − e`.
pub fn naive_circulant(exps: &[usize], n: usize) -> Dense {
    let mut m = vec![vec![0u8; n]; n];
    for (i, row) in m.iter_mut().enumerate() {
        for &e in exps {
            row[(i + n - e % n) % n] ^= 1;
        }
    }
    m
}

/// A random CSS code on `n` qubits with `k > 0`, or `None` when the draw
/// encodes nothing.
pub fn random_css(rng: &mut StdRng, n: usize) -> Option<CssCode> {
    let rx = rng.gen_range(1..=n / 3);
    let hx = BitMatrix::from_dense(
        &(0..rx)
            .map(|_| (0..n).map(|_| rng.gen_range(0..2u8)).collect::<Vec<_>>())
            .collect::<Vec<_>>(),
    );
    let ker = hx.kernel_basis();
    let rz = rng.gen_range(1..=n / 3);
    let rows: Vec<BitVector> = (0..rz)
        .map(|_| {
            let mut v = BitVector::zeros(n);
            for b in &ker {
                if rng.gen_bool(0.5) {
                    v.xor_assign(b);
                }
            }
            v
        })
        .collect();
    let hz = BitMatrix::from_rows(n, rows).ok()?;
    let code = CssCode::new(hx, hz).ok()?;
    (code.k() > 0).then_some(code)
}
