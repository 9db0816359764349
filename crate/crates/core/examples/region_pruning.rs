//! Cutting a patch out of a bivariate bicycle code with a region of the
//! plane.

use qcode::construct::locality_report;
use qcode::css::css_distance;
use qcode::prune::{bb_parent, region_prune, DeletionPolicy, Region, RegionMode};

fn main() -> qcode::Result<()> {
    let parent = bb_parent("1 + x + y^-1 + x*y", "1 + y + x*y + x^-1*y^-1", 12, 12)?;
    println!("parent [[{},{}]]", parent.n(), parent.k());

    let region = Region::from_slabs(&[(0, 1, -17, -4), (2, -5, 52, 95), (11, -7, 163, 215)])?;
    let cut = region_prune(&parent, &region, RegionMode::KeepInside, DeletionPolicy::NodeInside)?;
    let loc = locality_report(&cut.code);
    println!(
        "slab patch: n={} k={} d={} radius {} crossings {}",
        cut.code.n(),
        cut.code.k(),
        css_distance(&cut.code.code, 6).d,
        loc.max_radius,
        loc.boundary_crossings
    );

    // The honeycomb code, cut along a polygon; faces left with fewer than
    // four qubits are dropped.
    let honeycomb = bb_parent("1 + x + x*y", "1 + y + x*y", 6, 6)?;
    let polygon = Region::polygon(vec![
        (6, -7),
        (11, -12),
        (12, -9),
        (14, -7),
        (17, -6),
        (12, -1),
        (11, -4),
        (9, -6),
    ])?;
    for policy in [
        DeletionPolicy::MinWeight(4),
        DeletionPolicy::Repair,
        DeletionPolicy::SupportContained,
    ] {
        match region_prune(&honeycomb, &polygon, RegionMode::KeepInside, policy) {
            Ok(p) => println!(
                "polygon, {policy:?}: n={} k={} d={}",
                p.code.n(),
                p.code.k(),
                css_distance(&p.code.code, 6).d
            ),
            Err(e) => println!("polygon, {policy:?}: {e}"),
        }
    }
    Ok(())
}
