//! Exact distances against exhaustive enumeration.

mod common;

use common::{brute_classical_distance, brute_logical_weight, random_css, to_dense};
use qcode::classical::cyclic_code;
use qcode::construct::{bb_code, hgp};
use qcode::css::{css_distance, CssCode, Distance};
use qcode::poly::{circulant, BiPoly, RingParams, UniPoly};
use qcode::BitMatrix;
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

fn check_against_brute(code: &CssCode) {
    let n = code.n();
    let hx = to_dense(code.hx());
    let hz = to_dense(code.hz());
    let want_x = brute_logical_weight(&hz, &hx, n).expect("k > 0");
    let want_z = brute_logical_weight(&hx, &hz, n).expect("k > 0");
    let got = css_distance(code, n);
    assert_eq!(got.d_x, Distance::Exact(want_x), "d_x, n={n}");
    assert_eq!(got.d_z, Distance::Exact(want_z), "d_z, n={n}");
    assert_eq!(got.d, Distance::Exact(want_x.min(want_z)));
    let wx = got.witness_x.unwrap();
    assert_eq!(wx.weight(), want_x);
    assert!(code.hz().mul_vec(&wx).unwrap().is_zero());
    // A search capped below the distance only reports a bound.
    if want_x.min(want_z) > 1 {
        let capped = css_distance(code, want_x.min(want_z) - 1);
        assert_eq!(capped.d, Distance::Exceeds(want_x.min(want_z) - 1));
    }
}

#[test]
fn css_distance_matches_enumeration() {
    let mut rng = StdRng::seed_from_u64(7);
    let mut checked = 0;
    let mut attempts = 0;
    while checked < 24 {
        attempts += 1;
        assert!(attempts < 10_000, "could not generate enough codes");
        let n = rng.gen_range(6..=14);
        if let Some(code) = random_css(&mut rng, n) {
            check_against_brute(&code);
            checked += 1;
        }
    }

    // Structured codes with n ≤ 14.
    let rep = |n: usize| {
        BitMatrix::from_dense(
            &(0..n - 1)
                .map(|i| (0..n).map(|j| (j == i || j == i + 1) as u8).collect::<Vec<_>>())
                .collect::<Vec<_>>(),
        )
    };
    let surface = hgp(&rep(3), &rep(3));
    assert_eq!((surface.n(), surface.k()), (13, 1));
    check_against_brute(&surface.code);
    let toric = hgp(
        &circulant(&"1 + x".parse::<UniPoly>().unwrap(), 2),
        &circulant(&"1 + x".parse::<UniPoly>().unwrap(), 3),
    );
    check_against_brute(&toric.code);
    for (l, m, a, b) in [
        (3, 2, "1 + x", "1 + y"),
        (2, 3, "1 + x*y", "1 + y"),
        (7, 1, "1 + x + x^3", "1 + x^2 + x^3"),
    ] {
        let a: BiPoly = a.parse().unwrap();
        let b: BiPoly = b.parse().unwrap();
        let bb = bb_code(&a, &b, RingParams::new(l, m).unwrap());
        if bb.k() > 0 {
            check_against_brute(&bb.code);
        }
    }
}

#[test]
fn classical_distance_matches_enumeration() {
    let mut rng = StdRng::seed_from_u64(11);
    let mut checked = 0;
    let mut trivial = 0;
    while checked < 60 {
        let n = rng.gen_range(2..=16);
        let deg = rng.gen_range(1..=n);
        let mut exps: Vec<usize> = (0..deg).filter(|_| rng.gen_bool(0.5)).collect();
        exps.push(deg);
        let h = UniPoly::from_exponents(&exps);
        let code = cyclic_code(&h, n).unwrap();
        let want = brute_classical_distance(&to_dense(code.check_matrix()), n);
        assert_eq!(code.distance(), want, "h = {h}, n = {n}");
        if want.is_some() {
            checked += 1;
        } else {
            trivial += 1;
        }
    }
    assert!(trivial > 0);
}
