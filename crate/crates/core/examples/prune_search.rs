//! Searching a family of slab regions for good open-boundary patches.

use std::time::Instant;

use qcode::prune::{bb_parent, prune_search, DeletionPolicy, Objective, RegionFamily, RegionMode, SlabRange};

fn main() -> qcode::Result<()> {
    let parent = bb_parent("1 + x + y^-1 + x*y", "1 + y + x*y + x^-1*y^-1", 12, 12)?;
    let slab = |a, b, lo: (i64, i64), width: (i64, i64)| SlabRange { a, b, lo, width };
    let family = RegionFamily {
        slabs: vec![
            slab(0, 1, (-19, -15), (11, 15)),
            slab(2, -5, (50, 54), (41, 45)),
            slab(11, -7, (161, 165), (50, 54)),
        ],
        mode: RegionMode::KeepInside,
        policies: vec![DeletionPolicy::NodeInside],
    };
    let objective = Objective {
        max_weight: 4,
        min_k: 2,
        limit: Some(8),
        ..Objective::default()
    };
    let t = Instant::now();
    let entries = prune_search(&parent, &family, &objective);
    println!("{} regions searched in {:.2?}", family.regions().len(), t.elapsed());
    for e in entries {
        println!("[[{},{},{}]] radius {}  {}", e.n, e.k, e.d, e.max_radius, e.region);
    }
    Ok(())
}
