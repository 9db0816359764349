//! Hypergraph product and bivariate bicycle codes with their lattice layout.
//!
//! Coordinates are doubled integers. On the `ℓ×m` torus the X-check `(i,j)`
//! sits at `(2i, 2j)`, the Z-check `(i,j)` at `(2i+1, 2j+1)`, the horizontal
//! qubit `(i,j)` at `(2i+1, 2j)` and the vertical qubit `(i,j)` at
//! `(2i, 2j+1)`. Qubit `(i,j)` of the horizontal block has index `i·m + j`,
//! the vertical one `ℓm + i·m + j`.

use std::fmt;

use crate::classical::{ClassicalCode, ClassicalParams};
use crate::css::{CssCode, LogicalBasis, PauliOp};
use crate::error::{Error, Result};
use crate::gf2::{BitMatrix, BitVector, Echelon};
use crate::poly::{circulant, eval_bipoly, transpose_as_inverse, BiPoly, RingParams};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum QubitKind {
    Horizontal,
    Vertical,
}

/// Positions of qubits and checks in doubled coordinates.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Layout {
    pub qubits: Vec<(i64, i64)>,
    pub kinds: Vec<QubitKind>,
    pub x_checks: Vec<(i64, i64)>,
    pub z_checks: Vec<(i64, i64)>,
    /// Periods of the ambient torus, if any. Positions of a pruned code may
    /// be lifted outside the fundamental domain.
    pub periods: Option<(i64, i64)>,
}

impl Layout {
    /// Positions of the listed elements only.
    pub fn restrict(&self, qubits: &[usize], x_checks: &[usize], z_checks: &[usize]) -> Layout {
        Layout {
            qubits: qubits.iter().map(|&q| self.qubits[q]).collect(),
            kinds: qubits.iter().map(|&q| self.kinds[q]).collect(),
            x_checks: x_checks.iter().map(|&c| self.x_checks[c]).collect(),
            z_checks: z_checks.iter().map(|&c| self.z_checks[c]).collect(),
            periods: self.periods,
        }
    }
}

/// The classical factors of a hypergraph product. Qubit `(i,j)` of
/// `V₁×V₂` has index `i·n₂ + j`; qubit `(c₁,c₂)` of `C₁×C₂` has index
/// `n₁n₂ + c₁·ℓ₂ + c₂`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HgpTag {
    pub h1: BitMatrix,
    pub h2: BitMatrix,
}

impl HgpTag {
    pub fn n1(&self) -> usize {
        self.h1.cols()
    }
    pub fn l1(&self) -> usize {
        self.h1.rows()
    }
    pub fn n2(&self) -> usize {
        self.h2.cols()
    }
    pub fn l2(&self) -> usize {
        self.h2.rows()
    }

    pub fn left_index(&self, i: usize, j: usize) -> usize {
        i * self.n2() + j
    }

    pub fn right_index(&self, c1: usize, c2: usize) -> usize {
        self.n1() * self.n2() + c1 * self.l2() + c2
    }
}

/// A CSS code together with its geometry and construction data.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LatticeCode {
    pub code: CssCode,
    pub layout: Layout,
    pub ring: Option<RingParams>,
    /// `(A, B)` for bivariate bicycle codes.
    pub polys: Option<(BiPoly, BiPoly)>,
    pub hgp: Option<HgpTag>,
}

impl LatticeCode {
    pub fn n(&self) -> usize {
        self.code.n()
    }

    pub fn k(&self) -> usize {
        self.code.k()
    }
}

/// `H_X = (H₁⊗1 | 1⊗H₂ᵀ)`, `H_Z = (1⊗H₂ | H₁ᵀ⊗1)`, laid out in the plane.
pub fn hgp(h1: &BitMatrix, h2: &BitMatrix) -> LatticeCode {
    let (l1, n1) = (h1.rows(), h1.cols());
    let (l2, n2) = (h2.rows(), h2.cols());
    let hx = h1
        .kron(&BitMatrix::identity(n2))
        .hstack(&BitMatrix::identity(l1).kron(&h2.transpose()))
        .expect("blocks have l1*n2 rows");
    let hz = BitMatrix::identity(n1)
        .kron(h2)
        .hstack(&h1.transpose().kron(&BitMatrix::identity(l2)))
        .expect("blocks have n1*l2 rows");
    let code = CssCode::new(hx, hz).expect("hypergraph products always commute");
    let mut qubits = Vec::with_capacity(n1 * n2 + l1 * l2);
    let mut kinds = Vec::with_capacity(qubits.capacity());
    for i in 0..n1 {
        for j in 0..n2 {
            qubits.push((2 * i as i64 + 1, 2 * j as i64));
            kinds.push(QubitKind::Horizontal);
        }
    }
    for c1 in 0..l1 {
        for c2 in 0..l2 {
            qubits.push((2 * c1 as i64, 2 * c2 as i64 + 1));
            kinds.push(QubitKind::Vertical);
        }
    }
    let x_checks = (0..l1)
        .flat_map(|c| (0..n2).map(move |j| (2 * c as i64, 2 * j as i64)))
        .collect();
    let z_checks = (0..n1)
        .flat_map(|i| (0..l2).map(move |c| (2 * i as i64 + 1, 2 * c as i64 + 1)))
        .collect();
    LatticeCode {
        code,
        layout: Layout {
            qubits,
            kinds,
            x_checks,
            z_checks,
            periods: None,
        },
        ring: None,
        polys: None,
        hgp: Some(HgpTag {
            h1: h1.clone(),
            h2: h2.clone(),
        }),
    }
}

/// Parameters `[[n, k, d]]`; `d = None` means infinite.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct QuantumParams {
    pub n: usize,
    pub k: usize,
    pub d: Option<usize>,
}

impl fmt::Display for QuantumParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.d {
            Some(d) => write!(f, "[[{},{},{}]]", self.n, self.k, d),
            None => write!(f, "[[{},{},inf]]", self.n, self.k),
        }
    }
}

/// Parameters of a factor code and of its transpose code.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct FactorParams {
    pub code: ClassicalParams,
    pub transpose: ClassicalParams,
}

impl FactorParams {
    pub fn of(h: &BitMatrix) -> Self {
        Self {
            code: ClassicalCode::new(h.clone()).params(),
            transpose: ClassicalCode::new(h.transpose()).params(),
        }
    }
}

/// `[[n₁n₂ + ℓ₁ℓ₂, k₁k₂ + k₁ᵀk₂ᵀ, min(d₁, d₂, d₁ᵀ, d₂ᵀ)]]`, with trivial
/// codes contributing infinite distance.
pub fn hgp_params_formula(p1: FactorParams, p2: FactorParams) -> QuantumParams {
    let n = p1.code.n * p2.code.n + p1.transpose.n * p2.transpose.n;
    let k = p1.code.k * p2.code.k + p1.transpose.k * p2.transpose.k;
    let d = if k == 0 {
        None
    } else {
        [p1.code.d, p2.code.d, p1.transpose.d, p2.transpose.d]
            .into_iter()
            .flatten()
            .min()
    };
    QuantumParams { n, k, d }
}

/// `H_X = (A | B)`, `H_Z = (Bᵀ | Aᵀ)` on the `ℓ×m` torus.
///
/// When `A` only involves `x` and `B` only `y`, the code is also tagged as
/// the hypergraph product of `A(S_ℓ)` and `B(S_m)ᵀ`; with the index
/// conventions used here the two constructions give identical matrices.
pub fn bb_code(a: &BiPoly, b: &BiPoly, p: RingParams) -> LatticeCode {
    let am = eval_bipoly(a, p);
    let bm = eval_bipoly(b, p);
    let hx = am.hstack(&bm).expect("square blocks");
    let hz = eval_bipoly(&transpose_as_inverse(b), p)
        .hstack(&eval_bipoly(&transpose_as_inverse(a), p))
        .expect("square blocks");
    let code = CssCode::new(hx, hz).expect("bivariate bicycle matrices commute");
    let (l, m) = (p.l as i64, p.m as i64);
    let mut qubits = Vec::with_capacity(2 * p.size());
    let mut kinds = Vec::with_capacity(2 * p.size());
    for (kind, du, dv) in [(QubitKind::Horizontal, 1, 0), (QubitKind::Vertical, 0, 1)] {
        for i in 0..l {
            for j in 0..m {
                qubits.push((2 * i + du, 2 * j + dv));
                kinds.push(kind);
            }
        }
    }
    let cells = |off: i64| -> Vec<(i64, i64)> {
        (0..l)
            .flat_map(|i| (0..m).map(move |j| (2 * i + off, 2 * j + off)))
            .collect()
    };
    let ra = a.reduced(p);
    let rb = b.reduced(p);
    let hgp_tag = match (ra.as_univariate_x(), rb.as_univariate_y()) {
        (Some(ax), Some(by)) => Some(HgpTag {
            h1: circulant(&ax, p.l),
            h2: circulant(&by, p.m).transpose(),
        }),
        _ => None,
    };
    LatticeCode {
        code,
        layout: Layout {
            qubits,
            kinds,
            x_checks: cells(0),
            z_checks: cells(1),
            periods: Some((2 * l, 2 * m)),
        },
        ring: Some(p),
        polys: Some((a.clone(), b.clone())),
        hgp: hgp_tag,
    }
}

/// Per-check reach and the number of Tanner edges that wrap around the
/// ambient torus.
#[derive(Clone, Debug, PartialEq)]
pub struct LocalityReport {
    /// Radius in lattice cells of each X-check, then each Z-check.
    pub x_radius: Vec<usize>,
    pub z_radius: Vec<usize>,
    pub max_radius: usize,
    pub mean_radius: f64,
    pub edges: usize,
    pub boundary_crossings: usize,
}

fn wrap(d: i64, period: i64) -> i64 {
    let r = d.rem_euclid(period);
    if 2 * r > period {
        r - period
    } else {
        r
    }
}

/// Displacement from `from` to `to`: the planar difference, and the shortest
/// toroidal representative when the layout has periods.
fn displacement(layout: &Layout, from: (i64, i64), to: (i64, i64)) -> ((i64, i64), (i64, i64)) {
    let planar = (to.0 - from.0, to.1 - from.1);
    let wrapped = match layout.periods {
        Some((pu, pv)) => (wrap(planar.0, pu), wrap(planar.1, pv)),
        None => planar,
    };
    (planar, wrapped)
}

pub fn locality_report(lc: &LatticeCode) -> LocalityReport {
    let layout = &lc.layout;
    let mut edges = 0;
    let mut crossings = 0;
    let mut radius_of = |h: &BitMatrix, pos: &[(i64, i64)]| -> Vec<usize> {
        (0..h.rows())
            .map(|c| {
                let mut r = 0;
                for q in h.row(c).iter_ones() {
                    let (planar, wrapped) = displacement(layout, pos[c], layout.qubits[q]);
                    edges += 1;
                    if planar != wrapped {
                        crossings += 1;
                    }
                    let reach = wrapped.0.abs().max(wrapped.1.abs());
                    r = r.max(((reach + 1) / 2) as usize);
                }
                r
            })
            .collect()
    };
    let x_radius = radius_of(lc.code.hx(), &layout.x_checks);
    let z_radius = radius_of(lc.code.hz(), &layout.z_checks);
    let all: Vec<usize> = x_radius.iter().chain(&z_radius).copied().collect();
    let max_radius = all.iter().copied().max().unwrap_or(0);
    let mean_radius = if all.is_empty() {
        0.0
    } else {
        all.iter().sum::<usize>() as f64 / all.len() as f64
    };
    LocalityReport {
        x_radius,
        z_radius,
        max_radius,
        mean_radius,
        edges,
        boundary_crossings: crossings,
    }
}

/// Basis vectors of `ker h` indexed by the free columns of its reduced
/// echelon form: the vector for free column `f` has a one at `f` and zeros
/// at every other free column.
fn free_kernel(h: &BitMatrix) -> Vec<(usize, BitVector)> {
    let ech = Echelon::new(h);
    ech.free_columns()
        .into_iter()
        .map(|f| {
            let mut v = BitVector::zeros(h.cols());
            v.set(f, true);
            for (row, &p) in ech.reduced_rows().iter().zip(ech.pivots()) {
                if row.get(f) {
                    v.set(p, true);
                }
            }
            (f, v)
        })
        .collect()
}

fn kron_vec(a: &BitVector, b: &BitVector) -> Vec<usize> {
    let mut out = Vec::new();
    for i in a.iter_ones() {
        for j in b.iter_ones() {
            out.push(i * b.len() + j);
        }
    }
    out
}

/// Logical basis of a hypergraph product in which `X_i` and `Z_j` overlap
/// on exactly one qubit when `i = j` and on none otherwise.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntersectingBasis {
    pub basis: LogicalBasis,
    /// The overlap qubit of each pair.
    pub labels: Vec<usize>,
}

/// Left-block pairs `Z = u⊗e_j`, `X = e_i⊗w` (`u ∈ ker H₁`, `w ∈ ker H₂`)
/// followed by right-block pairs `Z = e_p⊗β`, `X = α⊗e_q`
/// (`α ∈ ker H₁ᵀ`, `β ∈ ker H₂ᵀ`).
pub fn hgp_intersecting_basis(lc: &LatticeCode) -> Result<IntersectingBasis> {
    let tag = lc
        .hgp
        .as_ref()
        .ok_or_else(|| Error::Precondition("code carries no hypergraph product factors".into()))?;
    let n = lc.n();
    if n != tag.n1() * tag.n2() + tag.l1() * tag.l2() {
        return Err(Error::Precondition("factor shapes do not match the code".into()));
    }
    let offset = tag.n1() * tag.n2();
    let k1 = free_kernel(&tag.h1);
    let k2 = free_kernel(&tag.h2);
    let k1t = free_kernel(&tag.h1.transpose());
    let k2t = free_kernel(&tag.h2.transpose());
    let mut xs = Vec::new();
    let mut zs = Vec::new();
    let mut labels = Vec::new();
    for (ia, u) in &k1 {
        for (jc, w) in &k2 {
            let z = kron_vec(u, &BitVector::from_indices(tag.n2(), &[*jc]));
            let x = kron_vec(&BitVector::from_indices(tag.n1(), &[*ia]), w);
            zs.push(PauliOp::z_type(BitVector::from_indices(n, &z)));
            xs.push(PauliOp::x_type(BitVector::from_indices(n, &x)));
            labels.push(tag.left_index(*ia, *jc));
        }
    }
    for (pa, alpha) in &k1t {
        for (qc, beta) in &k2t {
            let z: Vec<usize> = kron_vec(&BitVector::from_indices(tag.l1(), &[*pa]), beta)
                .into_iter()
                .map(|i| i + offset)
                .collect();
            let x: Vec<usize> = kron_vec(alpha, &BitVector::from_indices(tag.l2(), &[*qc]))
                .into_iter()
                .map(|i| i + offset)
                .collect();
            zs.push(PauliOp::z_type(BitVector::from_indices(n, &z)));
            xs.push(PauliOp::x_type(BitVector::from_indices(n, &x)));
            labels.push(tag.right_index(*pa, *qc));
        }
    }
    let basis = LogicalBasis { x: xs, z: zs };
    basis.validate(&lc.code)?;
    Ok(IntersectingBasis { basis, labels })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::css::{css_distance, Distance};
    use crate::poly::UniPoly;

    fn up(s: &str) -> UniPoly {
        s.parse().unwrap()
    }

    fn bp(s: &str) -> BiPoly {
        s.parse().unwrap()
    }

    fn surface() -> LatticeCode {
        let h = BitMatrix::from_dense(&[[1u8, 1, 0], [0, 1, 1]]);
        hgp(&h, &h)
    }

    #[test]
    fn surface_code_from_repetition_codes() {
        let s = surface();
        assert_eq!((s.n(), s.k()), (13, 1));
        assert_eq!(css_distance(&s.code, 5).d, Distance::Exact(3));
        assert_eq!(locality_report(&s).boundary_crossings, 0);
    }

    #[test]
    fn toric_type_product() {
        let h = circulant(&up("1 + x"), 3);
        let t = hgp(&h, &h);
        assert_eq!((t.n(), t.k()), (18, 2));
    }

    #[test]
    fn degenerate_factor_shapes() {
        let t = hgp(&BitMatrix::zeros(0, 2), &BitMatrix::from_dense(&[[1u8, 1]]));
        assert_eq!(t.code.hx().rows(), 0);
        assert_eq!(t.n(), 4);
    }

    #[test]
    fn formula_examples() {
        let red = BitMatrix::from_dense(&[[1u8, 1, 0], [0, 1, 1]]);
        let p = FactorParams::of(&red);
        assert_eq!(
            hgp_params_formula(p, p),
            QuantumParams {
                n: 13,
                k: 1,
                d: Some(3)
            }
        );
        let c = FactorParams::of(&circulant(&up("1 + x + x^2"), 6));
        assert_eq!(
            hgp_params_formula(c, c),
            QuantumParams {
                n: 72,
                k: 8,
                d: Some(4)
            }
        );
        let triv = FactorParams::of(&BitMatrix::identity(3));
        assert_eq!(hgp_params_formula(triv, c).k, 0);
    }

    #[test]
    fn color_code() {
        let p = RingParams::new(6, 6).unwrap();
        let cc = bb_code(&bp("1 + x + x*y"), &bp("1 + y + x*y"), p);
        assert_eq!((cc.n(), cc.k()), (72, 4));
        assert!(cc.hgp.is_none());
        let loc = locality_report(&cc);
        assert_eq!(loc.max_radius, 1);
        assert!(loc.boundary_crossings > 0);
    }

    #[test]
    fn univariate_bb_equals_hgp() {
        let p = RingParams::new(6, 6).unwrap();
        let bb = bb_code(&bp("1 + x + x^2"), &bp("1 + y + y^2"), p);
        let tag = bb.hgp.clone().unwrap();
        let h = hgp(&tag.h1, &tag.h2);
        assert_eq!(h.code, bb.code);
        assert_eq!(h.layout.qubits, bb.layout.qubits);
        assert_eq!(h.layout.x_checks, bb.layout.x_checks);
        assert_eq!(h.layout.z_checks, bb.layout.z_checks);
        assert_eq!(bb.k(), 8);
    }

    #[test]
    fn trivial_parent_of_nontrivial_pruning() {
        let p = RingParams::new(5, 5).unwrap();
        let bb = bb_code(&bp("1 + x + x^2"), &bp("1 + y + y^2"), p);
        assert_eq!(bb.k(), 0);
    }

    #[test]
    fn intersecting_basis() {
        let s = surface();
        let ib = hgp_intersecting_basis(&s).unwrap();
        assert_eq!(ib.labels.len(), 1);
        assert_eq!(ib.basis.x[0].x.overlap(&ib.basis.z[0].z), 1);

        let p = RingParams::new(6, 6).unwrap();
        let bb = bb_code(&bp("1 + x + x^2"), &bp("1 + y + y^2"), p);
        let ib = hgp_intersecting_basis(&bb).unwrap();
        let k = ib.labels.len();
        assert_eq!(k, 8);
        for i in 0..k {
            for j in 0..k {
                let o = ib.basis.x[i].x.overlap(&ib.basis.z[j].z);
                assert_eq!(o, usize::from(i == j));
            }
            let both = ib.basis.x[i].x.and(&ib.basis.z[i].z);
            assert_eq!(both.support(), vec![ib.labels[i]]);
        }
        let cc = bb_code(&bp("1 + x + x*y"), &bp("1 + y + x*y"), p);
        assert!(hgp_intersecting_basis(&cc).is_err());
    }
}
