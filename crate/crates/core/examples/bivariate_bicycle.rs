//! Building bivariate bicycle codes on the torus and measuring how local
//! their checks are.

use qcode::construct::{bb_code, locality_report};
use qcode::poly::{BiPoly, RingParams};

fn main() -> qcode::Result<()> {
    let codes = [
        ("1 + x + x^2", "1 + y + y^2", 6, 6),
        ("1 + x + x*y", "1 + y + x*y", 6, 6),
        ("1 + x + y^-1 + x*y", "1 + y + x*y + x^-1*y^-1", 12, 12),
        ("x^3 + y + y^2", "y^3 + x + x^2", 12, 6),
    ];
    for (a, b, l, m) in codes {
        let (pa, pb): (BiPoly, BiPoly) = (a.parse()?, b.parse()?);
        let lc = bb_code(&pa, &pb, RingParams::new(l, m)?);
        let loc = locality_report(&lc);
        println!("A = {a}, B = {b} on {l}x{m}");
        println!(
            "  n={} k={} check weight {}  radius max {} mean {:.3}  wrap-around edges {}/{}",
            lc.n(),
            lc.k(),
            lc.code.hx().row(0).weight(),
            loc.max_radius,
            loc.mean_radius,
            loc.boundary_crossings,
            loc.edges
        );
        if lc.hgp.is_some() {
            println!("  (also a hypergraph product of two cyclic codes)");
        }
    }
    Ok(())
}
