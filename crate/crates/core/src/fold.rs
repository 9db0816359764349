//! Qubit permutations that map a code to itself or swap its X and Z sides,
//! and the fold-transversal Clifford circuits they induce.

use std::collections::HashMap;

use rayon::prelude::*;

use crate::construct::{LatticeCode, QubitKind};
use crate::css::{conjugate, logical_basis, Circuit, CssCode, Gate, LogicalBasis, PauliOp, StabilizerGroup};
use crate::error::{Error, Result};
use crate::gf2::{BitMatrix, BitVector};
use crate::prune::{prune, PruneSpec};

/// Fixed points and swapped pairs of an involution.
pub type Orbits = (Vec<usize>, Vec<(usize, usize)>);

/// A bijection on qubit indices: qubit `j` is sent to `image[j]`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct QubitPermutation {
    image: Vec<usize>,
}

impl QubitPermutation {
    pub fn new(image: Vec<usize>) -> Result<Self> {
        let mut seen = vec![false; image.len()];
        for &i in &image {
            if i >= image.len() || seen[i] {
                return Err(Error::Precondition(format!("{image:?} is not a permutation")));
            }
            seen[i] = true;
        }
        Ok(Self { image })
    }

    pub fn identity(n: usize) -> Self {
        Self {
            image: (0..n).collect(),
        }
    }

    pub fn len(&self) -> usize {
        self.image.len()
    }

    pub fn is_empty(&self) -> bool {
        self.image.is_empty()
    }

    pub fn image(&self) -> &[usize] {
        &self.image
    }

    pub fn apply(&self, q: usize) -> usize {
        self.image[q]
    }

    pub fn inverse(&self) -> Self {
        let mut inv = vec![0; self.len()];
        for (j, &i) in self.image.iter().enumerate() {
            inv[i] = j;
        }
        Self { image: inv }
    }

    pub fn is_involution(&self) -> bool {
        self.image.iter().enumerate().all(|(j, &i)| self.image[i] == j)
    }

    /// Fixed points and 2-orbits `(i, σ(i))` with `i < σ(i)`.
    pub fn orbits(&self) -> Result<Orbits> {
        if !self.is_involution() {
            return Err(Error::NotInvolution);
        }
        let fixed = (0..self.len()).filter(|&j| self.image[j] == j).collect();
        let pairs = (0..self.len())
            .filter(|&j| self.image[j] > j)
            .map(|j| (j, self.image[j]))
            .collect();
        Ok((fixed, pairs))
    }

    /// Whether `set` is mapped onto itself.
    pub fn preserves(&self, set: &[usize]) -> bool {
        let mut inside = vec![false; self.len()];
        for &q in set {
            inside[q] = true;
        }
        set.iter().all(|&q| inside[self.image[q]])
    }

    /// The `n×n` matrix `P` with `P[j][σ(j)] = 1`, so that `H·P` moves
    /// column `j` of `H` to column `σ(j)`.
    pub fn matrix(&self) -> BitMatrix {
        let mut p = BitMatrix::zeros(self.len(), self.len());
        for (j, &i) in self.image.iter().enumerate() {
            p.set(j, i, true);
        }
        p
    }

    fn permute(&self, v: &BitVector) -> BitVector {
        let mut out = BitVector::zeros(v.len());
        for j in v.iter_ones() {
            out.set(self.image[j], true);
        }
        out
    }
}

/// For each row of `source`, the index of an equal row of `target`,
/// matching duplicates in order. `None` if the row multisets differ.
fn match_rows(source: &[BitVector], target: &BitMatrix) -> Option<Vec<usize>> {
    if source.len() != target.rows() {
        return None;
    }
    let mut slots: HashMap<&BitVector, Vec<usize>> = HashMap::new();
    for (i, r) in target.row_vectors().iter().enumerate().rev() {
        slots.entry(r).or_default().push(i);
    }
    source.iter().map(|r| slots.get_mut(r)?.pop()).collect()
}

fn permuted_rows(h: &BitMatrix, sigma: &QubitPermutation) -> Vec<BitVector> {
    h.row_vectors().iter().map(|r| sigma.permute(r)).collect()
}

/// The row permutation `τ` with `T·H·P_σ = H'` for the matrix `T` having
/// `T[τ(r)][r] = 1`.
fn row_matrix(tau: &[usize]) -> BitMatrix {
    let mut t = BitMatrix::zeros(tau.len(), tau.len());
    for (r, &i) in tau.iter().enumerate() {
        t.set(i, r, true);
    }
    t
}

/// Row permutations `(τ_X, τ_Z)` under which `σ` maps each check matrix to
/// itself: row `r` of `H_X·P_σ` equals row `τ_X[r]` of `H_X`, and likewise
/// for `Z`.
pub fn verify_automorphism(code: &CssCode, sigma: &QubitPermutation) -> Option<(Vec<usize>, Vec<usize>)> {
    if sigma.len() != code.n() {
        return None;
    }
    let tx = match_rows(&permuted_rows(code.hx(), sigma), code.hx())?;
    let tz = match_rows(&permuted_rows(code.hz(), sigma), code.hz())?;
    Some((tx, tz))
}

/// A qubit permutation exchanging the X and Z check matrices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DualityWitness {
    pub sigma: QubitPermutation,
    /// Row `r` of `H_X·P_σ` is row `tau_x[r]` of `H_Z`.
    pub tau_x: Vec<usize>,
    /// Row `r` of `H_Z·P_σ` is row `tau_z[r]` of `H_X`.
    pub tau_z: Vec<usize>,
}

impl DualityWitness {
    /// Re-checks both identities by explicit matrix products.
    pub fn verify(&self, code: &CssCode) -> bool {
        let p = self.sigma.matrix();
        let side = |h: &BitMatrix, tau: &[usize], target: &BitMatrix| {
            h.mul(&p)
                .and_then(|m| row_matrix(tau).mul(&m))
                .is_ok_and(|m| &m == target)
        };
        side(code.hx(), &self.tau_x, code.hz()) && side(code.hz(), &self.tau_z, code.hx())
    }
}

/// Checks whether `σ` is a ZX-duality of `code`.
pub fn verify_zx_duality(code: &CssCode, sigma: &QubitPermutation) -> Result<Option<DualityWitness>> {
    if code.hx().rows() != code.hz().rows() {
        return Err(Error::Precondition(format!(
            "{} X-checks against {} Z-checks",
            code.hx().rows(),
            code.hz().rows()
        )));
    }
    if sigma.len() != code.n() {
        return Ok(None);
    }
    let Some(tau_x) = match_rows(&permuted_rows(code.hx(), sigma), code.hz()) else {
        return Ok(None);
    };
    let Some(tau_z) = match_rows(&permuted_rows(code.hz(), sigma), code.hx()) else {
        return Ok(None);
    };
    Ok(Some(DualityWitness {
        sigma: sigma.clone(),
        tau_x,
        tau_z,
    }))
}

/// The two qubit blocks of a product-style code in index space.
struct Blocks {
    dims: [(usize, usize); 2],
    periodic: bool,
}

impl Blocks {
    fn of(lc: &LatticeCode) -> Result<Self> {
        let b = if let Some(p) = lc.ring {
            Blocks {
                dims: [(p.l, p.m), (p.l, p.m)],
                periodic: true,
            }
        } else if let Some(t) = &lc.hgp {
            Blocks {
                dims: [(t.n1(), t.n2()), (t.l1(), t.l2())],
                periodic: false,
            }
        } else {
            return Err(Error::Precondition("code has no two-block structure".into()));
        };
        let total = b.dims[0].0 * b.dims[0].1 + b.dims[1].0 * b.dims[1].1;
        if total != lc.n() {
            return Err(Error::Precondition(format!(
                "blocks hold {total} qubits but the code has {}",
                lc.n()
            )));
        }
        Ok(b)
    }

    fn index(&self, block: usize, i: usize, j: usize) -> usize {
        let base = if block == 0 { 0 } else { self.dims[0].0 * self.dims[0].1 };
        base + i * self.dims[block].1 + j
    }

    fn translations(&self, block: usize) -> Vec<(usize, usize)> {
        if !self.periodic {
            return vec![(0, 0)];
        }
        let (r, c) = self.dims[block];
        (0..r).flat_map(|s| (0..c).map(move |t| (s, t))).collect()
    }

    /// Sends block `from` into block `to` by dihedral element `d` (bit 2:
    /// transpose, bit 0: flip rows, bit 1: flip columns) then a shift.
    fn map(&self, from: usize, to: usize, d: u8, shift: (usize, usize)) -> Option<Vec<usize>> {
        let (r, c) = self.dims[from];
        let (tr, tc) = if d & 4 != 0 { (c, r) } else { (r, c) };
        if (tr, tc) != self.dims[to] {
            return None;
        }
        let flip = |x: usize, len: usize| {
            if self.periodic {
                (len - x) % len
            } else {
                len - 1 - x
            }
        };
        let mut out = Vec::with_capacity(r * c);
        for i in 0..r {
            for j in 0..c {
                let (mut a, mut b) = if d & 4 != 0 { (j, i) } else { (i, j) };
                if d & 1 != 0 {
                    a = flip(a, tr);
                }
                if d & 2 != 0 {
                    b = flip(b, tc);
                }
                out.push(self.index(to, (a + shift.0) % tr, (b + shift.1) % tc));
            }
        }
        Some(out)
    }
}

fn check_symmetric(lc: &LatticeCode) -> Result<()> {
    if let (Some(p), Some((a, b))) = (lc.ring, &lc.polys) {
        if p.l != p.m {
            return Err(Error::Precondition(format!("torus is {}×{}, not square", p.l, p.m)));
        }
        if !a.equivalent(&b.swap_variables(), p) {
            return Err(Error::Precondition("A(x,y) differs from B(y,x)".into()));
        }
    }
    Ok(())
}

/// Every involutive ZX-duality in the search family, in enumeration order:
/// no block swap before swap, then dihedral element and shift of the first
/// block, then of the second.
pub fn reflection_dualities(lc: &LatticeCode) -> Result<Vec<QubitPermutation>> {
    search_dualities(lc, usize::MAX)
}

/// The first involutive ZX-duality in the order of [`reflection_dualities`].
pub fn find_reflection_duality(lc: &LatticeCode) -> Result<Option<QubitPermutation>> {
    Ok(search_dualities(lc, 1)?.pop())
}

fn search_dualities(lc: &LatticeCode, limit: usize) -> Result<Vec<QubitPermutation>> {
    check_symmetric(lc)?;
    let blocks = Blocks::of(lc)?;
    if lc.code.hx().rows() != lc.code.hz().rows() {
        return Err(Error::Precondition("X and Z check counts differ".into()));
    }
    let n0 = blocks.dims[0].0 * blocks.dims[0].1;
    let mut found = Vec::new();
    for swap in [false, true] {
        let (to0, to1) = if swap { (1, 0) } else { (0, 1) };
        for d0 in 0..8u8 {
            for s0 in blocks.translations(to0) {
                let Some(m0) = blocks.map(0, to0, d0, s0) else { continue };
                // Without a swap the first block must already be an involution.
                if !swap && m0.iter().enumerate().any(|(j, &i)| m0[i] != j) {
                    continue;
                }
                for d1 in 0..8u8 {
                    for s1 in blocks.translations(to1) {
                        let Some(m1) = blocks.map(1, to1, d1, s1) else { continue };
                        let image: Vec<usize> = m0.iter().chain(m1.iter()).copied().collect();
                        let sigma = QubitPermutation { image };
                        if !sigma.is_involution() {
                            continue;
                        }
                        debug_assert_eq!(sigma.len(), n0 + m1.len());
                        if verify_zx_duality(&lc.code, &sigma)?.is_some() {
                            found.push(sigma);
                            if found.len() >= limit {
                                return Ok(found);
                            }
                        }
                    }
                }
            }
        }
    }
    Ok(found)
}

/// Multiplication by `x^a y^b` on both blocks of a bivariate bicycle code.
pub fn monomial_shift(lc: &LatticeCode, a: i64, b: i64) -> Result<QubitPermutation> {
    let p = lc
        .ring
        .ok_or_else(|| Error::Precondition("monomial shifts need a ring".into()))?;
    if lc.n() != 2 * p.size() {
        return Err(Error::Precondition("code is not a full bivariate bicycle code".into()));
    }
    let mut image = Vec::with_capacity(lc.n());
    for block in 0..2 {
        for q in 0..p.size() {
            let (i, j) = p.coords(q);
            image.push(block * p.size() + p.index(i as i64 + a, j as i64 + b));
        }
    }
    QubitPermutation::new(image)
}

/// `H` on every qubit, then `SWAP` on each 2-orbit.
pub fn hadamard_type_circuit(sigma: &QubitPermutation) -> Result<Circuit> {
    let (_, pairs) = sigma.orbits()?;
    let mut gates: Vec<Gate> = (0..sigma.len()).map(Gate::H).collect();
    gates.extend(pairs.into_iter().map(|(a, b)| Gate::Swap(a, b)));
    Circuit::new(sigma.len(), gates)
}

/// `S` on fixed horizontal qubits, `S†` on fixed vertical qubits and `CZ`
/// on each 2-orbit.
pub fn phase_type_circuit(lc: &LatticeCode, sigma: &QubitPermutation) -> Result<Circuit> {
    phase_type_circuit_for_kinds(&lc.layout.kinds, sigma)
}

pub fn phase_type_circuit_for_kinds(kinds: &[QubitKind], sigma: &QubitPermutation) -> Result<Circuit> {
    if kinds.len() != sigma.len() {
        return Err(Error::Precondition(format!(
            "{} qubit kinds for a permutation on {} qubits",
            kinds.len(),
            sigma.len()
        )));
    }
    let (fixed, pairs) = sigma.orbits()?;
    let mut gates: Vec<Gate> = fixed
        .into_iter()
        .map(|q| match kinds[q] {
            QubitKind::Horizontal => Gate::S(q),
            QubitKind::Vertical => Gate::Sdg(q),
        })
        .collect();
    gates.extend(pairs.into_iter().map(|(a, b)| Gate::CZ(a, b)));
    Circuit::new(sigma.len(), gates)
}

/// Action of a valid gate on a logical basis.
///
/// Row `i` of `symplectic` holds the `(x | z)` coordinates of the image of
/// the `i`-th basis operator, ordered `X₁…X_k, Z₁…Z_k`. The image equals
/// `i^phases[i]` times the product of the indicated logical X operators,
/// then the indicated logical Z operators, times a stabilizer.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LogicalAction {
    pub symplectic: BitMatrix,
    pub phases: Vec<u8>,
}

impl LogicalAction {
    pub fn k(&self) -> usize {
        self.phases.len() / 2
    }

    /// `M·Ω·Mᵀ = Ω` for the standard symplectic form `Ω`.
    pub fn is_symplectic(&self) -> bool {
        let k = self.k();
        let m = &self.symplectic;
        let form = |a: &BitVector, b: &BitVector| {
            (0..k).fold(false, |acc, i| {
                acc ^ (a.get(i) & b.get(k + i)) ^ (a.get(k + i) & b.get(i))
            })
        };
        (0..2 * k).all(|r| (0..2 * k).all(|s| form(m.row(r), m.row(s)) == ((r + k == s) || (s + k == r))))
    }

    pub fn is_identity(&self) -> bool {
        self.symplectic == BitMatrix::identity(2 * self.k()) && self.phases.iter().all(|&p| p == 0)
    }
}

/// Outcome of [`verify_logical_gate`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GateReport {
    pub valid: bool,
    /// Generators (X-checks first, then Z-checks) whose image leaves the
    /// stabilizer group, sign included.
    pub failures: Vec<usize>,
    /// Two-qubit gates removed because only one endpoint survived pruning.
    pub dropped_gates: usize,
    pub action: Option<LogicalAction>,
}

/// Conjugates every stabilizer generator through the circuit and, when all
/// images are stabilizers with the right sign, computes the logical action
/// on [`logical_basis`].
pub fn verify_logical_gate(code: &CssCode, circuit: &Circuit) -> Result<GateReport> {
    verify_logical_gate_with_basis(code, circuit, &logical_basis(code))
}

pub fn verify_logical_gate_with_basis(code: &CssCode, circuit: &Circuit, basis: &LogicalBasis) -> Result<GateReport> {
    if circuit.n() != code.n() {
        return Err(Error::Shape(format!(
            "{}-qubit circuit on a {}-qubit code",
            circuit.n(),
            code.n()
        )));
    }
    let group = StabilizerGroup::new(code);
    let gens = code.generators();
    let failures: Vec<usize> = gens
        .par_iter()
        .enumerate()
        .filter_map(|(i, g)| {
            let img = conjugate(circuit, g).expect("lengths checked");
            (!group.contains(&img)).then_some(i)
        })
        .collect();
    if !failures.is_empty() {
        return Ok(GateReport {
            valid: false,
            failures,
            dropped_gates: 0,
            action: None,
        });
    }
    let action = logical_action(&group, circuit, basis)?;
    Ok(GateReport {
        valid: true,
        failures,
        dropped_gates: 0,
        action: Some(action),
    })
}

fn logical_action(group: &StabilizerGroup, circuit: &Circuit, basis: &LogicalBasis) -> Result<LogicalAction> {
    let k = basis.k();
    let n = circuit.n();
    let ops: Vec<&PauliOp> = basis.x.iter().chain(basis.z.iter()).collect();
    let mut rows = Vec::with_capacity(2 * k);
    let mut phases = Vec::with_capacity(2 * k);
    for op in ops {
        let img = conjugate(circuit, op)?;
        let mut coords = BitVector::zeros(2 * k);
        let mut lx = PauliOp::identity(n);
        let mut lz = PauliOp::identity(n);
        for j in 0..k {
            // X_j appears iff the image anticommutes with Z_j, and vice versa.
            if !img.commutes_with(&basis.z[j]) {
                coords.set(j, true);
                lx = lx.mul(&basis.x[j]);
            }
            if !img.commutes_with(&basis.x[j]) {
                coords.set(k + j, true);
                lz = lz.mul(&basis.z[j]);
            }
        }
        // img = i^e · lx · lz · s, so img · lz · lx = i^e · s.
        let rest = img.mul(&lz).mul(&lx);
        let stab = group
            .decompose(&rest)
            .ok_or_else(|| Error::Precondition("image of a logical operator is not a logical operator".into()))?;
        phases.push((rest.phase() + 4 - stab.phase()) % 4);
        rows.push(coords);
    }
    Ok(LogicalAction {
        symplectic: BitMatrix::from_rows(2 * k, rows)?,
        phases,
    })
}

/// Prunes `parent` by `spec`, keeps the gates acting only on surviving
/// qubits and verifies the result on the pruned code.
pub fn restrict_and_verify(parent: &LatticeCode, circuit: &Circuit, spec: &PruneSpec) -> Result<GateReport> {
    let pruned = prune(&parent.code, spec)?;
    let (restricted, dropped) = circuit.restrict(&spec.keep_qubits);
    let mut report = verify_logical_gate(&pruned, &restricted)?;
    report.dropped_gates = dropped;
    Ok(report)
}
