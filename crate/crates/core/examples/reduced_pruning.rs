//! Pruning a univariate bivariate bicycle code to an open-boundary
//! hypergraph product by cutting rows and columns of the circulants.

use qcode::css::css_distance;
use qcode::poly::{RingParams, UniPoly};
use qcode::prune::{prune_reduced, reduced_pruning_params_for};

fn main() -> qcode::Result<()> {
    for (a, b, l, m) in [
        ("1 + x", "1 + x", 3, 3),
        ("1 + x + x^2", "1 + x + x^2", 6, 6),
        ("1 + x + x^2", "1 + x + x^2", 5, 5),
        ("1 + x^2 + x^3", "1 + x + x^3", 7, 7),
    ] {
        let (pa, pb): (UniPoly, UniPoly) = (a.parse()?, b.parse()?);
        let p = RingParams::new(l, m)?;
        let pruning = prune_reduced(&pa, &pb, p)?;
        let d = css_distance(&pruning.code.code, 8).d;
        let predicted = reduced_pruning_params_for(&pa, &pb, p)
            .map(|q| q.to_string())
            .unwrap_or_else(|e| format!("n/a ({e})"));
        println!(
            "A={a} B={b} on {l}x{m}: parent [[{},{}]] -> pruned n={} k={} d={d}; predicted {predicted}",
            pruning.parent.n(),
            pruning.parent.k(),
            pruning.code.n(),
            pruning.code.k()
        );
    }
    Ok(())
}
