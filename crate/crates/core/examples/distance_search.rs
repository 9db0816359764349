//! Exact distance with a weight cap, including witnesses.

use std::time::Instant;

use qcode::construct::{bb_code, hgp};
use qcode::css::css_distance;
use qcode::poly::{BiPoly, RingParams};
use qcode::BitMatrix;

fn repetition(n: usize) -> BitMatrix {
    let mut h = BitMatrix::zeros(n - 1, n);
    for i in 0..n - 1 {
        h.set(i, i, true);
        h.set(i, i + 1, true);
    }
    h
}

fn main() -> qcode::Result<()> {
    for d in [3, 5, 7] {
        let sc = hgp(&repetition(d), &repetition(d));
        let r = css_distance(&sc.code, d);
        println!("surface d={d}: n={} k={} measured {}", sc.n(), sc.k(), r.d);
    }

    let a: BiPoly = "1 + x + x*y".parse()?;
    let b: BiPoly = "1 + y + x*y".parse()?;
    let cc = bb_code(&a, &b, RingParams::new(6, 6)?);
    for w_max in [4, 6, 8] {
        let t = Instant::now();
        let r = css_distance(&cc.code, w_max);
        println!(
            "honeycomb 6x6, w_max={w_max}: d_x {} d_z {} d {} ({} nodes, {:.2?})",
            r.d_x,
            r.d_z,
            r.d,
            r.candidates,
            t.elapsed()
        );
        if let Some(w) = r.witness() {
            println!("  witness {w}");
        }
    }
    Ok(())
}
