//! CSS stabilizer codes, exact distances, logical bases and Clifford
//! conjugation of Pauli operators.

use std::fmt;
use std::sync::atomic::{AtomicU64, Ordering};

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::gf2::{BitMatrix, BitVector, Echelon};

/// A CSS code with X-check matrix `hx` and Z-check matrix `hz`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CssCode {
    hx: BitMatrix,
    hz: BitMatrix,
    rank_x: usize,
    rank_z: usize,
}

impl CssCode {
    /// Validates `hx · hzᵀ = 0`; on failure reports the first offending pair
    /// in row-major order.
    pub fn new(hx: BitMatrix, hz: BitMatrix) -> Result<Self> {
        if hx.cols() != hz.cols() {
            return Err(Error::Shape(format!(
                "H_X has {} columns but H_Z has {}",
                hx.cols(),
                hz.cols()
            )));
        }
        for i in 0..hx.rows() {
            for j in 0..hz.rows() {
                if hx.row(i).dot(hz.row(j)) {
                    return Err(Error::Commutation { x_check: i, z_check: j });
                }
            }
        }
        let rank_x = hx.rank();
        let rank_z = hz.rank();
        Ok(Self { hx, hz, rank_x, rank_z })
    }

    pub fn n(&self) -> usize {
        self.hx.cols()
    }

    pub fn k(&self) -> usize {
        self.n() - self.rank_x - self.rank_z
    }

    pub fn hx(&self) -> &BitMatrix {
        &self.hx
    }

    pub fn hz(&self) -> &BitMatrix {
        &self.hz
    }

    pub fn rank_x(&self) -> usize {
        self.rank_x
    }

    pub fn rank_z(&self) -> usize {
        self.rank_z
    }

    /// Same code with qubit `q` moved to position `perm[q]`.
    pub fn relabel_qubits(&self, perm: &[usize]) -> Result<CssCode> {
        let n = self.n();
        let mut inverse = vec![usize::MAX; n];
        for (q, &p) in perm.iter().enumerate() {
            if p >= n || inverse[p] != usize::MAX {
                return Err(Error::Precondition("relabeling is not a permutation".into()));
            }
            inverse[p] = q;
        }
        if perm.len() != n {
            return Err(Error::Precondition("relabeling has the wrong length".into()));
        }
        CssCode::new(self.hx.select_cols(&inverse), self.hz.select_cols(&inverse))
    }

    /// X-type stabilizer generators followed by Z-type ones, all with sign +1.
    pub fn generators(&self) -> Vec<PauliOp> {
        let xs = self.hx.row_vectors().iter().map(|r| PauliOp::x_type(r.clone()));
        let zs = self.hz.row_vectors().iter().map(|r| PauliOp::z_type(r.clone()));
        xs.chain(zs).collect()
    }
}

pub fn css_new(hx: BitMatrix, hz: BitMatrix) -> Result<CssCode> {
    CssCode::new(hx, hz)
}

pub fn logical_count(code: &CssCode) -> usize {
    code.k()
}

/// Outcome of a bounded distance search.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Distance {
    Exact(usize),
    /// No logical of weight at most this value exists.
    Exceeds(usize),
    /// No logical operators at all (`k = 0`).
    Infinite,
}

impl Distance {
    pub fn exact(&self) -> Option<usize> {
        match self {
            Distance::Exact(d) => Some(*d),
            _ => None,
        }
    }

    fn min(self, other: Distance) -> Distance {
        use Distance::*;
        match (self, other) {
            (Exact(a), Exact(b)) => Exact(a.min(b)),
            (Exact(a), Exceeds(b)) | (Exceeds(b), Exact(a)) => {
                if a <= b {
                    Exact(a)
                } else {
                    Exceeds(b)
                }
            }
            (Exceeds(a), Exceeds(b)) => Exceeds(a.min(b)),
            (Infinite, x) | (x, Infinite) => x,
        }
    }
}

impl fmt::Display for Distance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Distance::Exact(d) => write!(f, "{d}"),
            Distance::Exceeds(w) => write!(f, "> {w}"),
            Distance::Infinite => f.write_str("inf"),
        }
    }
}

/// Result of [`css_distance`]. Witnesses are minimum-weight logicals of the
/// respective type when the corresponding distance is exact.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DistanceResult {
    pub d: Distance,
    /// Minimum weight of an X-type logical.
    pub d_x: Distance,
    /// Minimum weight of a Z-type logical.
    pub d_z: Distance,
    pub w_max: usize,
    pub witness_x: Option<BitVector>,
    pub witness_z: Option<BitVector>,
    /// Search nodes visited; independent of the thread count.
    pub candidates: u64,
}

impl DistanceResult {
    /// The witness attaining `d`, preferring the X type on ties.
    pub fn witness(&self) -> Option<PauliOp> {
        let dx = self.d_x.exact();
        let dz = self.d_z.exact();
        match (dx, dz) {
            (Some(a), Some(b)) if b < a => self.witness_z.clone().map(PauliOp::z_type),
            (Some(_), _) => self.witness_x.clone().map(PauliOp::x_type),
            (None, Some(_)) => self.witness_z.clone().map(PauliOp::z_type),
            _ => None,
        }
    }
}

pub const DEFAULT_MAX_WEIGHT: usize = 10;

/// Exact minimum weight of a nontrivial logical operator, searched up to
/// weight `w_max`.
pub fn css_distance(code: &CssCode, w_max: usize) -> DistanceResult {
    if code.k() == 0 {
        return DistanceResult {
            d: Distance::Infinite,
            d_x: Distance::Infinite,
            d_z: Distance::Infinite,
            w_max,
            witness_x: None,
            witness_z: None,
            candidates: 0,
        };
    }
    // An X-type logical commutes with the Z checks and is not generated by the X checks.
    let (d_x, witness_x, cx) = min_logical(code.hz(), code.hx(), w_max);
    let (d_z, witness_z, cz) = min_logical(code.hx(), code.hz(), w_max);
    DistanceResult {
        d: d_x.min(d_z),
        d_x,
        d_z,
        w_max,
        witness_x,
        witness_z,
        candidates: cx + cz,
    }
}

/// Minimum weight of `v` with `checks · v = 0` and `v` outside the row space
/// of `stabilizers`.
///
/// A minimum-weight solution has no proper nonempty subset with zero
/// syndrome, otherwise one of the two parts would be a lighter logical. The
/// search therefore grows a support from its smallest element by always
/// adding a qubit of some unsatisfied check, and stops as soon as the
/// syndrome vanishes.
pub fn min_logical(checks: &BitMatrix, stabilizers: &BitMatrix, w_max: usize) -> (Distance, Option<BitVector>, u64) {
    let n = checks.cols();
    let searcher = Searcher::new(checks, stabilizers);
    let mut total = 0u64;
    for w in 1..=w_max.min(n) {
        let counter = AtomicU64::new(0);
        let hits: Vec<Option<Vec<usize>>> = (0..n)
            .into_par_iter()
            .map(|q0| {
                let (hit, visited) = searcher.search_from(q0, w);
                counter.fetch_add(visited, Ordering::Relaxed);
                hit
            })
            .collect();
        total += counter.load(Ordering::Relaxed);
        if let Some(support) = hits.into_iter().flatten().next() {
            return (Distance::Exact(w), Some(BitVector::from_indices(n, &support)), total);
        }
    }
    (Distance::Exceeds(w_max.min(n)), None, total)
}

struct Searcher {
    n: usize,
    rows: Vec<Vec<usize>>,
    cols: Vec<BitVector>,
    max_col_weight: usize,
    stab: Echelon,
}

struct Frame<'a> {
    s: &'a Searcher,
    q0: usize,
    chosen: Vec<usize>,
    syndrome: BitVector,
    visited: u64,
}

impl Searcher {
    fn new(checks: &BitMatrix, stabilizers: &BitMatrix) -> Self {
        let t = checks.transpose();
        let cols: Vec<BitVector> = t.row_vectors().to_vec();
        let max_col_weight = cols.iter().map(BitVector::weight).max().unwrap_or(0);
        Self {
            n: checks.cols(),
            rows: checks.row_vectors().iter().map(BitVector::support).collect(),
            cols,
            max_col_weight,
            stab: Echelon::new(stabilizers),
        }
    }

    fn search_from(&self, q0: usize, w: usize) -> (Option<Vec<usize>>, u64) {
        let mut f = Frame {
            s: self,
            q0,
            chosen: vec![q0],
            syndrome: self.cols[q0].clone(),
            visited: 1,
        };
        if f.syndrome.is_zero() {
            let hit = f.is_logical().then(|| vec![q0]);
            return (hit, 1);
        }
        let hit = f.grow(w);
        let mut support = hit.then(|| f.chosen.clone());
        if let Some(s) = support.as_mut() {
            s.sort_unstable();
        }
        (support, f.visited)
    }
}

impl Frame<'_> {
    fn is_logical(&self) -> bool {
        let v = BitVector::from_indices(self.s.n, &self.chosen);
        !self.s.stab.contains(&v)
    }

    /// Tries to complete `chosen` to a logical of weight at most `w`.
    fn grow(&mut self, w: usize) -> bool {
        let left = w - self.chosen.len();
        let unsat = self.syndrome.weight();
        if left == 0 || unsat > left * self.s.max_col_weight {
            return false;
        }
        // Branch on the unsatisfied check with the fewest candidates.
        let mut best: Option<Vec<usize>> = None;
        for c in self.syndrome.iter_ones() {
            let cands: Vec<usize> = self.s.rows[c]
                .iter()
                .copied()
                .filter(|&q| q > self.q0 && !self.chosen.contains(&q))
                .collect();
            if cands.is_empty() {
                return false;
            }
            if best.as_ref().is_none_or(|b| cands.len() < b.len()) {
                best = Some(cands);
            }
        }
        for q in best.expect("syndrome is nonzero") {
            self.visited += 1;
            self.chosen.push(q);
            self.syndrome.xor_assign(&self.s.cols[q]);
            if self.syndrome.is_zero() {
                if self.is_logical() {
                    return true;
                }
            } else if self.grow(w) {
                return true;
            }
            self.syndrome.xor_assign(&self.s.cols[q]);
            self.chosen.pop();
        }
        false
    }
}

/// A Pauli operator `i^phase · X^x · Z^z`, the X part written to the left.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct PauliOp {
    pub x: BitVector,
    pub z: BitVector,
    phase: u8,
}

impl PauliOp {
    pub fn new(x: BitVector, z: BitVector, phase: u8) -> Result<Self> {
        if x.len() != z.len() {
            return Err(Error::Shape("X and Z parts differ in length".into()));
        }
        Ok(Self { x, z, phase: phase % 4 })
    }

    pub fn identity(n: usize) -> Self {
        Self {
            x: BitVector::zeros(n),
            z: BitVector::zeros(n),
            phase: 0,
        }
    }

    pub fn x_type(x: BitVector) -> Self {
        let n = x.len();
        Self {
            x,
            z: BitVector::zeros(n),
            phase: 0,
        }
    }

    pub fn z_type(z: BitVector) -> Self {
        let n = z.len();
        Self {
            x: BitVector::zeros(n),
            z,
            phase: 0,
        }
    }

    /// Single-qubit Pauli `X`, `Y`, `Z` or `I` on qubit `q`; `Y = i·XZ`.
    pub fn single(n: usize, q: usize, p: char) -> Result<Self> {
        if q >= n {
            return Err(Error::QubitIndex { index: q, len: n });
        }
        let mut op = Self::identity(n);
        match p {
            'I' => {}
            'X' => op.x.set(q, true),
            'Z' => op.z.set(q, true),
            'Y' => {
                op.x.set(q, true);
                op.z.set(q, true);
                op.phase = 1;
            }
            other => return Err(Error::Parse(format!("unknown Pauli {other:?}"))),
        }
        Ok(op)
    }

    pub fn n(&self) -> usize {
        self.x.len()
    }

    pub fn phase(&self) -> u8 {
        self.phase
    }

    pub fn with_phase(mut self, phase: u8) -> Self {
        self.phase = phase % 4;
        self
    }

    pub fn weight(&self) -> usize {
        self.x.weight() + self.z.weight() - self.x.overlap(&self.z)
    }

    /// `self · other` with the phase tracked exactly.
    pub fn mul(&self, other: &PauliOp) -> PauliOp {
        let swap = if self.z.dot(&other.x) { 2 } else { 0 };
        PauliOp {
            x: self.x.xor(&other.x),
            z: self.z.xor(&other.z),
            phase: (self.phase + other.phase + swap) % 4,
        }
    }

    pub fn commutes_with(&self, other: &PauliOp) -> bool {
        self.x.dot(&other.z) == self.z.dot(&other.x)
    }

    /// `(x | z)` as one vector of length `2n`.
    pub fn symplectic(&self) -> BitVector {
        self.x.concat(&self.z)
    }

    pub fn same_up_to_phase(&self, other: &PauliOp) -> bool {
        self.x == other.x && self.z == other.z
    }

    /// Keeps the listed qubits, in the given order.
    pub fn restrict(&self, keep: &[usize]) -> PauliOp {
        PauliOp {
            x: self.x.select(keep),
            z: self.z.select(keep),
            phase: self.phase,
        }
    }
}

impl fmt::Display for PauliOp {
    /// Sign prefix then one letter per qubit; `Y` absorbs a factor `i`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let ys = self.x.overlap(&self.z) as u8;
        let phase = (self.phase + 4 - ys % 4) % 4;
        f.write_str(["+", "+i", "-", "-i"][phase as usize])?;
        for q in 0..self.n() {
            let c = match (self.x.get(q), self.z.get(q)) {
                (false, false) => 'I',
                (true, false) => 'X',
                (false, true) => 'Z',
                (true, true) => 'Y',
            };
            write!(f, "{c}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for PauliOp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "PauliOp({self})")
    }
}

/// Clifford gates; two-qubit gates need distinct qubits.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Gate {
    H(usize),
    S(usize),
    Sdg(usize),
    CZ(usize, usize),
    Swap(usize, usize),
}

impl Gate {
    pub fn qubits(&self) -> Vec<usize> {
        match *self {
            Gate::H(q) | Gate::S(q) | Gate::Sdg(q) => vec![q],
            Gate::CZ(a, b) | Gate::Swap(a, b) => vec![a, b],
        }
    }

    fn remap(&self, f: impl Fn(usize) -> Option<usize>) -> Option<Gate> {
        Some(match *self {
            Gate::H(q) => Gate::H(f(q)?),
            Gate::S(q) => Gate::S(f(q)?),
            Gate::Sdg(q) => Gate::Sdg(f(q)?),
            Gate::CZ(a, b) => Gate::CZ(f(a)?, f(b)?),
            Gate::Swap(a, b) => Gate::Swap(f(a)?, f(b)?),
        })
    }

    fn apply(&self, p: &mut PauliOp) {
        match *self {
            Gate::H(q) => {
                let (x, z) = (p.x.get(q), p.z.get(q));
                if x && z {
                    p.phase = (p.phase + 2) % 4;
                }
                p.x.set(q, z);
                p.z.set(q, x);
            }
            Gate::S(q) | Gate::Sdg(q) => {
                if p.x.get(q) {
                    let inc = if matches!(self, Gate::S(_)) { 1 } else { 3 };
                    p.phase = (p.phase + inc) % 4;
                    p.z.flip(q);
                }
            }
            Gate::CZ(a, b) => {
                let (xa, xb) = (p.x.get(a), p.x.get(b));
                if xa && xb {
                    p.phase = (p.phase + 2) % 4;
                }
                if xb {
                    p.z.flip(a);
                }
                if xa {
                    p.z.flip(b);
                }
            }
            Gate::Swap(a, b) => {
                let (xa, za) = (p.x.get(a), p.z.get(a));
                p.x.set(a, p.x.get(b));
                p.z.set(a, p.z.get(b));
                p.x.set(b, xa);
                p.z.set(b, za);
            }
        }
    }
}

impl fmt::Display for Gate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Gate::H(q) => write!(f, "H {q}"),
            Gate::S(q) => write!(f, "S {q}"),
            Gate::Sdg(q) => write!(f, "SDG {q}"),
            Gate::CZ(a, b) => write!(f, "CZ {a} {b}"),
            Gate::Swap(a, b) => write!(f, "SWAP {a} {b}"),
        }
    }
}

/// Gates applied in list order on `n` qubits.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Circuit {
    n: usize,
    gates: Vec<Gate>,
}

impl Circuit {
    pub fn new(n: usize, gates: Vec<Gate>) -> Result<Self> {
        for g in &gates {
            let qs = g.qubits();
            if let Some(&bad) = qs.iter().find(|&&q| q >= n) {
                return Err(Error::QubitIndex { index: bad, len: n });
            }
            if qs.len() == 2 && qs[0] == qs[1] {
                return Err(Error::Precondition(format!("two-qubit gate `{g}` on a single qubit")));
            }
        }
        Ok(Self { n, gates })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn gates(&self) -> &[Gate] {
        &self.gates
    }

    /// Keeps gates whose qubits all survive, renumbered by position in
    /// `keep`. Returns the restricted circuit and the number of dropped
    /// multi-qubit gates that had a surviving endpoint.
    pub fn restrict(&self, keep: &[usize]) -> (Circuit, usize) {
        let mut new_index = vec![None; self.n];
        for (i, &q) in keep.iter().enumerate() {
            new_index[q] = Some(i);
        }
        let mut gates = Vec::new();
        let mut cut = 0;
        for g in &self.gates {
            match g.remap(|q| new_index[q]) {
                Some(ng) => gates.push(ng),
                None => {
                    let qs = g.qubits();
                    if qs.len() == 2 && qs.iter().any(|&q| new_index[q].is_some()) {
                        cut += 1;
                    }
                }
            }
        }
        (Circuit { n: keep.len(), gates }, cut)
    }

    /// One gate per line, as accepted by [`Circuit::parse`].
    pub fn to_text(&self) -> String {
        let mut s = format!("QUBITS {}\n", self.n);
        for g in &self.gates {
            s.push_str(&g.to_string());
            s.push('\n');
        }
        s
    }

    /// Parses `QUBITS n` followed by lines `H q`, `S q`, `SDG q`, `CZ a b`,
    /// `SWAP a b`. Blank lines and `#` comments are ignored.
    pub fn parse(text: &str) -> Result<Circuit> {
        let mut n = None;
        let mut gates = Vec::new();
        for (i, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let at = |message: String| Error::ParseAt { line: i + 1, message };
            let toks: Vec<&str> = line.split_whitespace().collect();
            let nums: Vec<usize> = toks[1..]
                .iter()
                .map(|t| t.parse().map_err(|_| at(format!("bad qubit index {t:?}"))))
                .collect::<Result<_>>()?;
            let op = toks[0].to_ascii_uppercase();
            let gate = match (op.as_str(), nums.as_slice()) {
                ("QUBITS", &[k]) => {
                    n = Some(k);
                    continue;
                }
                ("H", &[q]) => Gate::H(q),
                ("S", &[q]) => Gate::S(q),
                ("SDG", &[q]) => Gate::Sdg(q),
                ("CZ", &[a, b]) => Gate::CZ(a, b),
                ("SWAP", &[a, b]) => Gate::Swap(a, b),
                _ => return Err(at(format!("unrecognized gate line {line:?}"))),
            };
            gates.push(gate);
        }
        let n = n.ok_or_else(|| Error::Parse("circuit is missing a QUBITS line".into()))?;
        Circuit::new(n, gates)
    }
}

/// `U p U†` for the unitary `U` of the circuit.
pub fn conjugate(circuit: &Circuit, p: &PauliOp) -> Result<PauliOp> {
    if p.n() != circuit.n {
        return Err(Error::Shape(format!(
            "{}-qubit Pauli against a {}-qubit circuit",
            p.n(),
            circuit.n
        )));
    }
    let mut out = p.clone();
    for g in &circuit.gates {
        g.apply(&mut out);
    }
    Ok(out)
}

/// Precomputed elimination of the stabilizer generators, for repeated
/// membership tests.
pub struct StabilizerGroup {
    n: usize,
    generators: Vec<PauliOp>,
    echelon: Echelon,
}

impl StabilizerGroup {
    pub fn new(code: &CssCode) -> Self {
        let generators = code.generators();
        let rows: Vec<BitVector> = generators.iter().map(PauliOp::symplectic).collect();
        let m = BitMatrix::from_rows(2 * code.n(), rows).expect("generator lengths agree");
        Self {
            n: code.n(),
            generators,
            echelon: Echelon::with_combinations(&m),
        }
    }

    /// The product of generators equal to `p` up to phase, if any.
    pub fn decompose(&self, p: &PauliOp) -> Option<PauliOp> {
        if p.n() != self.n {
            return None;
        }
        let combo = self.echelon.solve(&p.symplectic())?;
        let mut prod = PauliOp::identity(self.n);
        for i in combo.iter_ones() {
            prod = prod.mul(&self.generators[i]);
        }
        Some(prod)
    }

    /// Membership including the sign.
    pub fn contains(&self, p: &PauliOp) -> bool {
        self.decompose(p).is_some_and(|prod| prod.phase == p.phase)
    }

    /// Membership ignoring the phase.
    pub fn contains_up_to_phase(&self, p: &PauliOp) -> bool {
        p.n() == self.n && self.echelon.reduce(&p.symplectic()).is_zero()
    }
}

pub fn in_stabilizer_group(code: &CssCode, p: &PauliOp) -> bool {
    StabilizerGroup::new(code).contains(p)
}

/// Paired logical operators with `⟨X_i, Z_j⟩ = δ_ij`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LogicalBasis {
    pub x: Vec<PauliOp>,
    pub z: Vec<PauliOp>,
}

impl LogicalBasis {
    pub fn k(&self) -> usize {
        self.x.len()
    }

    /// `P[i][j] = |supp X_i ∩ supp Z_j| mod 2`.
    pub fn pairing(&self) -> BitMatrix {
        let k = self.k();
        let mut p = BitMatrix::zeros(k, k);
        for (i, xi) in self.x.iter().enumerate() {
            for (j, zj) in self.z.iter().enumerate() {
                p.set(i, j, xi.x.dot(&zj.z));
            }
        }
        p
    }

    /// Checks every defining property against `code`.
    pub fn validate(&self, code: &CssCode) -> Result<()> {
        let k = code.k();
        if self.x.len() != k || self.z.len() != k {
            return Err(Error::Precondition(format!(
                "basis has {}/{} operators but k = {k}",
                self.x.len(),
                self.z.len()
            )));
        }
        if self.x.iter().any(|p| !p.z.is_zero()) || self.z.iter().any(|p| !p.x.is_zero()) {
            return Err(Error::Precondition("logical operators of mixed type".into()));
        }
        for p in &self.x {
            if !code.hz().mul_vec(&p.x)?.is_zero() {
                return Err(Error::Precondition("X logical anticommutes with a Z check".into()));
            }
        }
        for p in &self.z {
            if !code.hx().mul_vec(&p.z)?.is_zero() {
                return Err(Error::Precondition("Z logical anticommutes with an X check".into()));
            }
        }
        if self.pairing() != BitMatrix::identity(k) {
            return Err(Error::Precondition("pairing matrix is not the identity".into()));
        }
        // With an identity pairing no nonzero combination can be a stabilizer;
        // the explicit test guards single operators anyway.
        let sx = Echelon::new(code.hx());
        let sz = Echelon::new(code.hz());
        if self.x.iter().any(|p| sx.contains(&p.x)) || self.z.iter().any(|p| sz.contains(&p.z)) {
            return Err(Error::Precondition(
                "logical operator lies in the stabilizer group".into(),
            ));
        }
        Ok(())
    }
}

/// Vectors of `kernel` independent modulo the row space of `stabilizers`.
fn quotient_representatives(kernel: Vec<BitVector>, stabilizers: &BitMatrix) -> Vec<BitVector> {
    let mut span: Vec<BitVector> = stabilizers.row_vectors().to_vec();
    let mut rank = Echelon::new(stabilizers).rank();
    let mut out = Vec::new();
    for v in kernel {
        span.push(v.clone());
        let m = BitMatrix::from_rows(v.len(), span.clone()).expect("equal lengths");
        let r = m.rank();
        if r > rank {
            rank = r;
            out.push(v);
        } else {
            span.pop();
        }
    }
    out
}

/// A deterministic logical basis: kernel vectors outside the stabilizer span,
/// with the X side re-paired against the Z side.
pub fn logical_basis(code: &CssCode) -> LogicalBasis {
    let zs = quotient_representatives(code.hx().kernel_basis(), code.hz());
    let xs = quotient_representatives(code.hz().kernel_basis(), code.hx());
    debug_assert_eq!(zs.len(), code.k());
    let k = zs.len();
    let n = code.n();
    let mut pairing = BitMatrix::zeros(k, k);
    for (i, x) in xs.iter().enumerate() {
        for (j, z) in zs.iter().enumerate() {
            pairing.set(i, j, x.dot(z));
        }
    }
    let inv = pairing.inverse().expect("logical pairing is nondegenerate");
    let xs_paired: Vec<BitVector> = (0..k)
        .map(|i| {
            let mut v = BitVector::zeros(n);
            for j in inv.row(i).iter_ones() {
                v.xor_assign(&xs[j]);
            }
            v
        })
        .collect();
    LogicalBasis {
        x: xs_paired.into_iter().map(PauliOp::x_type).collect(),
        z: zs.into_iter().map(PauliOp::z_type).collect(),
    }
}
