//! Hypergraph products of cyclic codes and the parameter formula.

use qcode::construct::{hgp, hgp_params_formula, FactorParams};
use qcode::css::css_distance;
use qcode::poly::{circulant, UniPoly};

fn main() -> qcode::Result<()> {
    for (h1, n1, h2, n2) in [
        ("1 + x", 3, "1 + x", 3),
        ("1 + x", 4, "1 + x + x^2", 6),
        ("1 + x + x^2", 6, "1 + x + x^2", 6),
    ] {
        let m1 = circulant(&h1.parse::<UniPoly>()?, n1);
        let m2 = circulant(&h2.parse::<UniPoly>()?, n2);
        let formula = hgp_params_formula(FactorParams::of(&m1), FactorParams::of(&m2));
        let code = hgp(&m1, &m2);
        let d = css_distance(&code.code, 8).d;
        println!(
            "({h1}; {n1}) x ({h2}; {n2}): formula {formula}, measured n={} k={} d={d}",
            code.n(),
            code.k()
        );
    }
    Ok(())
}
