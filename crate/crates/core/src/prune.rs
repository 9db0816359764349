//! Pruned codes: deleting qubits and checks from a parent code while the
//! surviving, restricted checks still commute.

use std::cmp::Reverse;
use std::collections::HashSet;
use std::fmt;

use rayon::prelude::*;

use crate::classical::{reduce_first_rows, reduce_last_cols};
use crate::construct::{bb_code, hgp, locality_report, LatticeCode, QuantumParams};
use crate::css::{css_distance, CssCode, Distance};
use crate::error::{Error, Result};
use crate::gf2::BitMatrix;
use crate::poly::{poly_gcd, BiPoly, RingParams, UniPoly};

/// Which qubits and checks of a parent code survive. All lists are sorted
/// and refer to the parent's indices.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct PruneSpec {
    pub parent_n: usize,
    pub parent_x: usize,
    pub parent_z: usize,
    pub keep_qubits: Vec<usize>,
    pub keep_x: Vec<usize>,
    pub keep_z: Vec<usize>,
}

fn normalize(mut v: Vec<usize>, bound: usize, what: &str) -> Result<Vec<usize>> {
    v.sort_unstable();
    v.dedup();
    if let Some(&bad) = v.iter().find(|&&i| i >= bound) {
        return Err(Error::Precondition(format!(
            "{what} index {bad} out of range 0..{bound}"
        )));
    }
    Ok(v)
}

impl PruneSpec {
    pub fn new(parent: &CssCode, keep_qubits: Vec<usize>, keep_x: Vec<usize>, keep_z: Vec<usize>) -> Result<Self> {
        Ok(Self {
            parent_n: parent.n(),
            parent_x: parent.hx().rows(),
            parent_z: parent.hz().rows(),
            keep_qubits: normalize(keep_qubits, parent.n(), "qubit")?,
            keep_x: normalize(keep_x, parent.hx().rows(), "X-check")?,
            keep_z: normalize(keep_z, parent.hz().rows(), "Z-check")?,
        })
    }

    /// Keeps everything.
    pub fn full(parent: &CssCode) -> Self {
        Self {
            parent_n: parent.n(),
            parent_x: parent.hx().rows(),
            parent_z: parent.hz().rows(),
            keep_qubits: (0..parent.n()).collect(),
            keep_x: (0..parent.hx().rows()).collect(),
            keep_z: (0..parent.hz().rows()).collect(),
        }
    }

    fn check_parent(&self, parent: &CssCode) -> Result<()> {
        if (self.parent_n, self.parent_x, self.parent_z) != (parent.n(), parent.hx().rows(), parent.hz().rows()) {
            return Err(Error::Precondition(format!(
                "prune spec recorded against a parent with {} qubits and {}/{} checks",
                self.parent_n, self.parent_x, self.parent_z
            )));
        }
        Ok(())
    }

    /// Text form: three lines of space-separated indices.
    pub fn to_text(&self) -> String {
        let join = |v: &[usize]| v.iter().map(|i| i.to_string()).collect::<Vec<_>>().join(" ");
        format!(
            "qubits = {}\nx_checks = {}\nz_checks = {}\n",
            join(&self.keep_qubits),
            join(&self.keep_x),
            join(&self.keep_z)
        )
    }
}

/// Restricts the kept checks to the kept qubits.
pub fn prune(parent: &CssCode, spec: &PruneSpec) -> Result<CssCode> {
    spec.check_parent(parent)?;
    let hx = parent.hx().select_rows(&spec.keep_x).select_cols(&spec.keep_qubits);
    let hz = parent.hz().select_rows(&spec.keep_z).select_cols(&spec.keep_qubits);
    CssCode::new(hx, hz).map_err(|e| match e {
        Error::Commutation { x_check, z_check } => Error::Commutation {
            x_check: spec.keep_x[x_check],
            z_check: spec.keep_z[z_check],
        },
        other => other,
    })
}

/// [`prune`] carrying the layout along.
pub fn prune_lattice(parent: &LatticeCode, spec: &PruneSpec) -> Result<LatticeCode> {
    let code = prune(&parent.code, spec)?;
    Ok(LatticeCode {
        code,
        layout: parent.layout.restrict(&spec.keep_qubits, &spec.keep_x, &spec.keep_z),
        ring: parent.ring,
        polys: None,
        hgp: None,
    })
}

/// A pruned code together with its parent and the cut that produced it.
#[derive(Clone, Debug)]
pub struct Pruning {
    pub parent: LatticeCode,
    pub spec: PruneSpec,
    pub code: LatticeCode,
}

/// The hypergraph product of `A_red` (first `deg A` rows of `A(S_ℓ)`
/// deleted) and `B_redᵀ` (`B_red`: last `deg B` columns of `B(S_m)`
/// deleted), as a pruning of the bivariate bicycle code of `A(x)`, `B(y)`.
pub fn prune_reduced(a: &UniPoly, b: &UniPoly, p: RingParams) -> Result<Pruning> {
    let a_red = reduce_first_rows(a, p.l)?;
    let b_red = reduce_last_cols(b, p.m)?;
    let ra = p.l - a_red.rows();
    let rb = p.m - b_red.cols();
    let parent = bb_code(
        &a.reduce_cyclic(p.l).to_bipoly_x(),
        &b.reduce_cyclic(p.m).to_bipoly_y(),
        p,
    );
    let (l, m) = (p.l, p.m);
    let lm = l * m;
    let mut keep_qubits: Vec<usize> = (0..lm).collect();
    for i in ra..l {
        for j in 0..m - rb {
            keep_qubits.push(lm + i * m + j);
        }
    }
    let keep_x: Vec<usize> = (ra * m..lm).collect();
    let keep_z: Vec<usize> = (0..l).flat_map(|i| (0..m - rb).map(move |j| i * m + j)).collect();
    let spec = PruneSpec::new(&parent.code, keep_qubits, keep_x, keep_z)?;
    let product = hgp(&a_red, &b_red.transpose());
    let restricted = prune_lattice(&parent, &spec)?;
    debug_assert_eq!(restricted.code, product.code);
    let code = LatticeCode {
        code: product.code,
        layout: restricted.layout,
        ring: Some(p),
        polys: None,
        hgp: product.hgp,
    };
    Ok(Pruning { parent, spec, code })
}

/// `[[ℓm + (ℓ−r_A)(m−r_B), r_A·r_B, min(d_A, d_B)]]`; the distance is
/// infinite when `r_A·r_B = 0`.
pub fn reduced_pruning_params(l: usize, m: usize, ra: usize, rb: usize, da: usize, db: usize) -> QuantumParams {
    let k = ra * rb;
    QuantumParams {
        n: l * m + (l - ra) * (m - rb),
        k,
        d: (k > 0).then(|| da.min(db)),
    }
}

/// [`reduced_pruning_params`] for explicit polynomials; both must divide the
/// respective `xⁿ − 1`.
pub fn reduced_pruning_params_for(a: &UniPoly, b: &UniPoly, p: RingParams) -> Result<QuantumParams> {
    for (poly, n) in [(a, p.l), (b, p.m)] {
        if !poly.divides(&UniPoly::cyclic_modulus(n)) {
            return Err(Error::Precondition(format!("{poly} does not divide x^{n} - 1")));
        }
    }
    let ca = crate::classical::cyclic_code(a, p.l)?;
    let cb = crate::classical::cyclic_code(b, p.m)?;
    let ra = a.degree().unwrap_or(0);
    let rb = b.degree().unwrap_or(0);
    Ok(reduced_pruning_params(
        p.l,
        p.m,
        ra,
        rb,
        ca.distance().unwrap_or(usize::MAX),
        cb.distance().unwrap_or(usize::MAX),
    ))
}

/// `gcd(A, xⁿ − 1)`, which defines the same cyclic code as `A`.
pub fn gcd_normalize(a: &UniPoly, n: usize) -> Result<UniPoly> {
    if a.is_zero() {
        return Err(Error::Precondition("cannot normalize the zero polynomial".into()));
    }
    poly_gcd(a, &UniPoly::cyclic_modulus(n))
}

/// `a·u + b·v ≤ c` in doubled coordinates.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct HalfPlane {
    pub a: i64,
    pub b: i64,
    pub c: i64,
}

impl HalfPlane {
    pub fn contains(&self, (u, v): (i64, i64)) -> bool {
        self.a * u + self.b * v <= self.c
    }
}

/// A closed region of the plane in doubled coordinates.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Region {
    /// Intersection of half-planes.
    HalfPlanes(Vec<HalfPlane>),
    /// Simple polygon given by its vertices in order; the boundary is inside.
    Polygon(Vec<(i64, i64)>),
}

impl Region {
    pub fn new(constraints: Vec<HalfPlane>) -> Result<Self> {
        if constraints.is_empty() {
            return Err(Error::Precondition("a region needs at least one constraint".into()));
        }
        Ok(Self::HalfPlanes(constraints))
    }

    /// `lo ≤ a·u + b·v ≤ hi` for each `(a, b, lo, hi)`.
    pub fn from_slabs(slabs: &[(i64, i64, i64, i64)]) -> Result<Self> {
        let mut cs = Vec::new();
        for &(a, b, lo, hi) in slabs {
            cs.push(HalfPlane { a, b, c: hi });
            cs.push(HalfPlane { a: -a, b: -b, c: -lo });
        }
        Self::new(cs)
    }

    pub fn polygon(vertices: Vec<(i64, i64)>) -> Result<Self> {
        if vertices.len() < 3 {
            return Err(Error::Precondition("a polygon needs at least three vertices".into()));
        }
        Ok(Self::Polygon(vertices))
    }

    pub fn contains(&self, p: (i64, i64)) -> bool {
        match self {
            Self::HalfPlanes(cs) => cs.iter().all(|h| h.contains(p)),
            Self::Polygon(vs) => polygon_contains(vs, p),
        }
    }
}

fn polygon_contains(vs: &[(i64, i64)], (x, y): (i64, i64)) -> bool {
    let mut inside = false;
    for i in 0..vs.len() {
        let (x1, y1) = vs[i];
        let (x2, y2) = vs[(i + 1) % vs.len()];
        let cross = (x2 - x1) * (y - y1) - (y2 - y1) * (x - x1);
        if cross == 0 && x1.min(x2) <= x && x <= x1.max(x2) && y1.min(y2) <= y && y <= y1.max(y2) {
            return true;
        }
        if (y1 > y) != (y2 > y) {
            // Crossing abscissa compared without division.
            let lhs = (x - x1) * (y2 - y1);
            let rhs = (y - y1) * (x2 - x1);
            if (y2 > y1 && lhs < rhs) || (y2 < y1 && lhs > rhs) {
                inside = !inside;
            }
        }
    }
    inside
}

impl fmt::Display for Region {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = match self {
            Self::HalfPlanes(cs) => cs.iter().map(|h| format!("{}u{:+}v<={}", h.a, h.b, h.c)).collect(),
            Self::Polygon(vs) => vs.iter().map(|(u, v)| format!("({u},{v})")).collect(),
        };
        let sep = if matches!(self, Self::HalfPlanes(_)) {
            " & "
        } else {
            " "
        };
        if let Self::Polygon(_) = self {
            f.write_str("polygon ")?;
        }
        f.write_str(&parts.join(sep))
    }
}

/// Whether the region marks what is deleted or what is kept.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum RegionMode {
    /// Delete what lies inside; positions stay in the fundamental domain.
    DeleteInside,
    /// Keep what has a lift inside the region; kept elements move to that
    /// lift. A region containing two lifts of one element is rejected.
    KeepInside,
}

/// How checks are selected once the qubits are fixed.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum DeletionPolicy {
    /// A check is deleted iff its own node is deleted.
    NodeInside,
    /// A check is deleted iff every qubit of its support is deleted.
    SupportContained,
    /// Start from `SupportContained`, then repeatedly delete the check with
    /// the most anticommuting partners (ties: lower restricted weight, X
    /// before Z, lower index) until all survivors commute.
    Repair,
    /// A check survives iff at least this many of its qubits do.
    MinWeight(usize),
}

/// How far lifts are looked for, in periods, on either side.
const LIFT_RANGE: i64 = 2;

fn lift_inside(region: &Region, p: (i64, i64), periods: Option<(i64, i64)>) -> Result<Option<(i64, i64)>> {
    let Some((pu, pv)) = periods else {
        return Ok(region.contains(p).then_some(p));
    };
    let mut found = None;
    for a in -LIFT_RANGE..=LIFT_RANGE {
        for b in -LIFT_RANGE..=LIFT_RANGE {
            let q = (p.0 + a * pu, p.1 + b * pv);
            if region.contains(q) {
                if found.is_some() {
                    return Err(Error::Precondition(
                        "region wraps around the torus: an element has two lifts inside".into(),
                    ));
                }
                found = Some(q);
            }
        }
    }
    Ok(found)
}

/// Conflicts, then lighter, then X before Z, then lower index.
type RepairKey = (usize, Reverse<usize>, Reverse<u8>, Reverse<usize>);

fn wrap(d: i64, period: i64) -> i64 {
    let r = d.rem_euclid(period);
    if 2 * r > period {
        r - period
    } else {
        r
    }
}

/// Result of [`region_prune`].
#[derive(Clone, Debug)]
pub struct RegionPruning {
    pub spec: PruneSpec,
    pub code: LatticeCode,
}

/// Deletes qubits by region and checks by `policy`, restricts the
/// survivors and validates commutation.
pub fn region_prune(
    parent: &LatticeCode,
    region: &Region,
    mode: RegionMode,
    policy: DeletionPolicy,
) -> Result<RegionPruning> {
    let layout = &parent.layout;
    let periods = layout.periods;
    // Position of each element if kept.
    let place = |p: (i64, i64)| -> Result<Option<(i64, i64)>> {
        match mode {
            RegionMode::DeleteInside => Ok((!region.contains(p)).then_some(p)),
            RegionMode::KeepInside => lift_inside(region, p, periods),
        }
    };
    let mut qubit_pos = vec![None; parent.n()];
    for (q, &p) in layout.qubits.iter().enumerate() {
        qubit_pos[q] = place(p)?;
    }
    let keep_qubits: Vec<usize> = (0..parent.n()).filter(|&q| qubit_pos[q].is_some()).collect();

    let select = |h: &BitMatrix, nodes: &[(i64, i64)]| -> Result<Vec<(usize, (i64, i64))>> {
        let mut out = Vec::new();
        for (c, &node) in nodes.iter().enumerate() {
            match policy {
                DeletionPolicy::NodeInside => {
                    if let Some(p) = place(node)? {
                        out.push((c, p));
                    }
                }
                DeletionPolicy::SupportContained | DeletionPolicy::Repair | DeletionPolicy::MinWeight(_) => {
                    let Some(q) = h.row(c).iter_ones().find(|&q| qubit_pos[q].is_some()) else {
                        continue;
                    };
                    if let DeletionPolicy::MinWeight(t) = policy {
                        if h.row(c).iter_ones().filter(|&q| qubit_pos[q].is_some()).count() < t {
                            continue;
                        }
                    }
                    let qp = qubit_pos[q].expect("kept qubit");
                    let pos = match periods {
                        // Lift the node next to its first surviving qubit.
                        Some((pu, pv)) => {
                            let d = (node.0 - layout.qubits[q].0, node.1 - layout.qubits[q].1);
                            (qp.0 + wrap(d.0, pu), qp.1 + wrap(d.1, pv))
                        }
                        None => node,
                    };
                    let pos = if mode == RegionMode::DeleteInside { node } else { pos };
                    out.push((c, pos));
                }
            }
        }
        Ok(out)
    };
    let mut xs = select(parent.code.hx(), &layout.x_checks)?;
    let mut zs = select(parent.code.hz(), &layout.z_checks)?;
    if policy == DeletionPolicy::Repair {
        repair(parent, &keep_qubits, &mut xs, &mut zs);
    }

    let spec = PruneSpec::new(
        &parent.code,
        keep_qubits.clone(),
        xs.iter().map(|e| e.0).collect(),
        zs.iter().map(|e| e.0).collect(),
    )?;
    let mut code = prune_lattice(parent, &spec)?;
    code.layout.qubits = keep_qubits.iter().map(|&q| qubit_pos[q].expect("kept")).collect();
    code.layout.x_checks = xs.iter().map(|e| e.1).collect();
    code.layout.z_checks = zs.iter().map(|e| e.1).collect();
    Ok(RegionPruning { spec, code })
}

fn repair(
    parent: &LatticeCode,
    keep_qubits: &[usize],
    xs: &mut Vec<(usize, (i64, i64))>,
    zs: &mut Vec<(usize, (i64, i64))>,
) {
    let hx = parent.code.hx().select_cols(keep_qubits);
    let hz = parent.code.hz().select_cols(keep_qubits);
    let mut alive_x = vec![true; xs.len()];
    let mut alive_z = vec![true; zs.len()];
    // Anticommutation lists between surviving candidates.
    let mut bad_x = vec![Vec::new(); xs.len()];
    let mut bad_z = vec![Vec::new(); zs.len()];
    for (i, &(cx, _)) in xs.iter().enumerate() {
        for (j, &(cz, _)) in zs.iter().enumerate() {
            if hx.row(cx).dot(hz.row(cz)) {
                bad_x[i].push(j);
                bad_z[j].push(i);
            }
        }
    }
    let mut deg_x: Vec<usize> = bad_x.iter().map(Vec::len).collect();
    let mut deg_z: Vec<usize> = bad_z.iter().map(Vec::len).collect();
    loop {
        let mut best: Option<RepairKey> = None;
        for (i, &d) in deg_x.iter().enumerate() {
            if alive_x[i] && d > 0 {
                let key = (d, Reverse(hx.row(xs[i].0).weight()), Reverse(0), Reverse(i));
                if best.is_none_or(|b| key > b) {
                    best = Some(key);
                }
            }
        }
        for (j, &d) in deg_z.iter().enumerate() {
            if alive_z[j] && d > 0 {
                let key = (d, Reverse(hz.row(zs[j].0).weight()), Reverse(1), Reverse(j));
                if best.is_none_or(|b| key > b) {
                    best = Some(key);
                }
            }
        }
        let Some((_, _, Reverse(kind), Reverse(idx))) = best else {
            break;
        };
        if kind == 0 {
            alive_x[idx] = false;
            for &j in &bad_x[idx] {
                if alive_z[j] {
                    deg_z[j] -= 1;
                }
            }
            deg_x[idx] = 0;
        } else {
            alive_z[idx] = false;
            for &i in &bad_z[idx] {
                if alive_x[i] {
                    deg_x[i] -= 1;
                }
            }
            deg_z[idx] = 0;
        }
    }
    let mut i = 0;
    xs.retain(|_| {
        i += 1;
        alive_x[i - 1]
    });
    let mut j = 0;
    zs.retain(|_| {
        j += 1;
        alive_z[j - 1]
    });
}

/// One slab `lo ≤ a·u + b·v ≤ lo + width`, with `lo` and `width` ranging
/// over inclusive intervals.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SlabRange {
    pub a: i64,
    pub b: i64,
    pub lo: (i64, i64),
    pub width: (i64, i64),
}

/// A finite family of regions: every combination of one `(lo, width)` per
/// slab, tried under each listed policy.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RegionFamily {
    pub slabs: Vec<SlabRange>,
    pub mode: RegionMode,
    pub policies: Vec<DeletionPolicy>,
}

impl RegionFamily {
    pub fn regions(&self) -> Vec<Region> {
        let mut combos: Vec<Vec<(i64, i64, i64, i64)>> = vec![Vec::new()];
        for s in &self.slabs {
            let mut next = Vec::new();
            for c in &combos {
                for lo in s.lo.0..=s.lo.1 {
                    for w in s.width.0..=s.width.1 {
                        let mut c2 = c.clone();
                        c2.push((s.a, s.b, lo, lo + w));
                        next.push(c2);
                    }
                }
            }
            combos = next;
        }
        combos.into_iter().filter_map(|c| Region::from_slabs(&c).ok()).collect()
    }
}

/// Search limits and filters.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Objective {
    pub max_weight: usize,
    pub min_k: usize,
    /// Drop entries whose distance is known to be below this.
    pub min_d: usize,
    pub max_n: Option<usize>,
    /// Keep only this many ranked entries.
    pub limit: Option<usize>,
}

impl Default for Objective {
    fn default() -> Self {
        Self {
            max_weight: 8,
            min_k: 0,
            min_d: 0,
            max_n: None,
            limit: None,
        }
    }
}

#[derive(Clone, Debug)]
pub struct SearchEntry {
    pub region: Region,
    pub policy: DeletionPolicy,
    pub spec: PruneSpec,
    pub n: usize,
    pub k: usize,
    pub d: Distance,
    pub max_radius: usize,
    pub crossings: usize,
}

fn distance_rank(d: &Distance) -> (u8, usize) {
    match *d {
        Distance::Infinite => (0, 0),
        Distance::Exact(d) => (1, d),
        Distance::Exceeds(w) => (2, w),
    }
}

/// Enumerates the family, keeps valid codes without wrap-around edges, and
/// ranks them by `k` (descending), `d` (descending), `n` (ascending), then
/// enumeration order. Regions giving an identical pruning are listed once.
pub fn prune_search(parent: &LatticeCode, family: &RegionFamily, objective: &Objective) -> Vec<SearchEntry> {
    let regions = family.regions();
    let jobs: Vec<(usize, &Region, DeletionPolicy)> = regions
        .iter()
        .flat_map(|r| family.policies.iter().map(move |&p| (r, p)))
        .enumerate()
        .map(|(i, (r, p))| (i, r, p))
        .collect();
    let pruned: Vec<(usize, SearchEntry, LatticeCode)> = jobs
        .par_iter()
        .filter_map(|&(i, region, policy)| {
            let res = region_prune(parent, region, family.mode, policy).ok()?;
            let n = res.code.n();
            let k = res.code.k();
            if n == 0 || k < objective.min_k || objective.max_n.is_some_and(|m| n > m) {
                return None;
            }
            let loc = locality_report(&res.code);
            if loc.boundary_crossings != 0 {
                return None;
            }
            let entry = SearchEntry {
                region: region.clone(),
                policy,
                spec: res.spec,
                n,
                k,
                d: Distance::Infinite,
                max_radius: loc.max_radius,
                crossings: 0,
            };
            Some((i, entry, res.code))
        })
        .collect();
    let mut seen = HashSet::new();
    let unique: Vec<(usize, SearchEntry, LatticeCode)> = pruned
        .into_iter()
        .filter(|(_, e, _)| seen.insert(e.spec.clone()))
        .collect();
    let mut entries: Vec<(usize, SearchEntry)> = unique
        .into_par_iter()
        .map(|(i, mut e, code)| {
            e.d = css_distance(&code.code, objective.max_weight).d;
            (i, e)
        })
        .filter(|(_, e)| !e.d.exact().is_some_and(|d| d < objective.min_d))
        .collect();
    entries.sort_by(|(ia, a), (ib, b)| {
        b.k.cmp(&a.k)
            .then_with(|| distance_rank(&b.d).cmp(&distance_rank(&a.d)))
            .then_with(|| a.n.cmp(&b.n))
            .then_with(|| ia.cmp(ib))
    });
    let mut out: Vec<SearchEntry> = entries.into_iter().map(|(_, e)| e).collect();
    if let Some(l) = objective.limit {
        out.truncate(l);
    }
    out
}

/// Convenience: the bivariate bicycle parent for a pair of polynomials.
pub fn bb_parent(a: &str, b: &str, l: usize, m: usize) -> Result<LatticeCode> {
    let a: BiPoly = a.parse()?;
    let b: BiPoly = b.parse()?;
    Ok(bb_code(&a, &b, RingParams::new(l, m)?))
}
