//! Classical linear codes given by parity-check matrices, cyclic codes, and
//! their exports (Tanner graphs, alist, dense text).

use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::gf2::{BitMatrix, BitVector};
use crate::poly::{circulant, poly_gcd, UniPoly};

/// Largest dimension for which the distance is found by enumerating every
/// nonzero codeword.
const ENUMERATION_MAX_K: usize = 20;

/// A classical code `ker H`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClassicalCode {
    h: BitMatrix,
    k: usize,
}

/// `[n, k, d]`; `d` is `None` (infinite) when `k = 0`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct ClassicalParams {
    pub n: usize,
    pub k: usize,
    pub d: Option<usize>,
}

impl std::fmt::Display for ClassicalParams {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self.d {
            Some(d) => write!(f, "[{},{},{}]", self.n, self.k, d),
            None => write!(f, "[{},{},inf]", self.n, self.k),
        }
    }
}

impl ClassicalCode {
    pub fn new(h: BitMatrix) -> Self {
        let k = h.cols() - h.rank();
        Self { h, k }
    }

    pub fn check_matrix(&self) -> &BitMatrix {
        &self.h
    }

    pub fn n(&self) -> usize {
        self.h.cols()
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn kernel_basis(&self) -> Vec<BitVector> {
        self.h.kernel_basis()
    }

    /// Minimum weight of a nonzero codeword, `None` when `k = 0`.
    pub fn distance(&self) -> Option<usize> {
        if self.k == 0 {
            return None;
        }
        if self.k <= ENUMERATION_MAX_K {
            Some(min_weight_by_enumeration(&self.kernel_basis()))
        } else {
            Some(min_weight_by_supports(&self.h))
        }
    }

    pub fn params(&self) -> ClassicalParams {
        ClassicalParams {
            n: self.n(),
            k: self.k,
            d: self.distance(),
        }
    }

    pub fn tanner_graph(&self) -> TannerGraph {
        TannerGraph::from_matrix(&self.h)
    }
}

/// Gray-code walk over all `2^k − 1` nonzero combinations of the basis.
fn min_weight_by_enumeration(basis: &[BitVector]) -> usize {
    let k = basis.len();
    let mut cur = BitVector::zeros(basis[0].len());
    let mut best = usize::MAX;
    for step in 1u64..(1u64 << k) {
        let flip = step.trailing_zeros() as usize;
        cur.xor_assign(&basis[flip]);
        best = best.min(cur.weight());
    }
    best
}

/// Smallest set of columns summing to zero, by increasing size.
fn min_weight_by_supports(h: &BitMatrix) -> usize {
    let cols: Vec<BitVector> = (0..h.cols()).map(|j| h.column(j)).collect();
    for w in 1..=h.cols() {
        let mut acc = BitVector::zeros(h.rows());
        if zero_sum_subset(&cols, 0, w, &mut acc) {
            return w;
        }
    }
    unreachable!("a code with k > 0 has a nonzero codeword")
}

fn zero_sum_subset(cols: &[BitVector], start: usize, left: usize, acc: &mut BitVector) -> bool {
    if left == 0 {
        return acc.is_zero();
    }
    for j in start..=cols.len().saturating_sub(left) {
        acc.xor_assign(&cols[j]);
        let hit = zero_sum_subset(cols, j + 1, left - 1, acc);
        acc.xor_assign(&cols[j]);
        if hit {
            return true;
        }
    }
    false
}

/// The cyclic code `ker h(S_n)`.
pub fn cyclic_code(h: &UniPoly, n: usize) -> Result<ClassicalCode> {
    if n == 0 {
        return Err(Error::Precondition("cyclic code length must be positive".into()));
    }
    if h.is_zero() {
        return Err(Error::Precondition("check polynomial must be nonzero".into()));
    }
    Ok(ClassicalCode::new(circulant(h, n)))
}

/// Dimension predicted for `ker h(S_n)`: `deg gcd(h, xⁿ − 1)`.
pub fn cyclic_dimension(h: &UniPoly, n: usize) -> Result<usize> {
    let g = poly_gcd(h, &UniPoly::cyclic_modulus(n))?;
    Ok(g.degree().unwrap_or(0))
}

pub fn classical_params(code: &ClassicalCode) -> ClassicalParams {
    code.params()
}

/// The code whose check matrix is `Hᵀ`.
pub fn transpose_code(code: &ClassicalCode) -> ClassicalCode {
    ClassicalCode::new(code.h.transpose())
}

fn reduced_degree(h: &UniPoly, n: usize) -> Result<(UniPoly, usize)> {
    if n == 0 {
        return Err(Error::Precondition("length must be positive".into()));
    }
    let rep = h.reduce_cyclic(n);
    let r = rep
        .degree()
        .ok_or_else(|| Error::Precondition(format!("{h} vanishes modulo x^{n} - 1")))?;
    if r >= n {
        return Err(Error::Precondition(format!("degree {r} is not below {n}")));
    }
    Ok((rep, r))
}

/// `h(S_n)` with its first `deg h` rows removed.
pub fn reduce_first_rows(h: &UniPoly, n: usize) -> Result<BitMatrix> {
    let (rep, r) = reduced_degree(h, n)?;
    let full = circulant(&rep, n);
    Ok(full.select_rows(&(r..n).collect::<Vec<_>>()))
}

/// `h(S_n)` with its last `deg h` columns removed.
pub fn reduce_last_cols(h: &UniPoly, n: usize) -> Result<BitMatrix> {
    let (rep, r) = reduced_degree(h, n)?;
    let full = circulant(&rep, n);
    Ok(full.select_cols(&(0..n - r).collect::<Vec<_>>()))
}

/// Bipartite Tanner graph: variable nodes are columns, check nodes rows.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TannerGraph {
    pub variables: usize,
    pub checks: usize,
    /// `(check, variable)` pairs, sorted.
    pub edges: Vec<(usize, usize)>,
}

impl TannerGraph {
    pub fn from_matrix(h: &BitMatrix) -> Self {
        let mut edges = Vec::new();
        for c in 0..h.rows() {
            for v in h.row(c).iter_ones() {
                edges.push((c, v));
            }
        }
        Self {
            variables: h.cols(),
            checks: h.rows(),
            edges,
        }
    }

    pub fn check_degree(&self, c: usize) -> usize {
        self.edges.iter().filter(|e| e.0 == c).count()
    }

    pub fn variable_degree(&self, v: usize) -> usize {
        self.edges.iter().filter(|e| e.1 == v).count()
    }

    pub fn to_dot(&self) -> String {
        let mut s = String::from("graph tanner {\n");
        for v in 0..self.variables {
            let _ = writeln!(s, "  v{v} [shape=circle];");
        }
        for c in 0..self.checks {
            let _ = writeln!(s, "  c{c} [shape=square];");
        }
        for &(c, v) in &self.edges {
            let _ = writeln!(s, "  c{c} -- v{v};");
        }
        s.push_str("}\n");
        s
    }
}

/// MacKay's alist format. Column lists come first, then row lists, both
/// 1-based and zero-padded to the maximum degree.
pub fn to_alist(h: &BitMatrix) -> String {
    let t = h.transpose();
    let col_w: Vec<usize> = (0..h.cols()).map(|j| t.row(j).weight()).collect();
    let row_w: Vec<usize> = (0..h.rows()).map(|i| h.row(i).weight()).collect();
    let max_c = col_w.iter().copied().max().unwrap_or(0);
    let max_r = row_w.iter().copied().max().unwrap_or(0);
    let join = |v: &[usize]| v.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(" ");
    let mut s = String::new();
    let _ = writeln!(s, "{} {}", h.cols(), h.rows());
    let _ = writeln!(s, "{max_c} {max_r}");
    let _ = writeln!(s, "{}", join(&col_w));
    let _ = writeln!(s, "{}", join(&row_w));
    let lists = |m: &BitMatrix, width: usize, s: &mut String| {
        for i in 0..m.rows() {
            let mut entries: Vec<usize> = m.row(i).iter_ones().map(|x| x + 1).collect();
            // An all-zero list keeps empty rows visible to the parser.
            entries.resize(width.max(1), 0);
            let _ = writeln!(s, "{}", join(&entries));
        }
    };
    lists(&t, max_c, &mut s);
    lists(h, max_r, &mut s);
    s
}

pub fn from_alist(text: &str) -> Result<BitMatrix> {
    let mut lines = text.lines().filter(|l| !l.trim().is_empty());
    let mut next_nums = |what: &str| -> Result<Vec<usize>> {
        let line = lines
            .next()
            .ok_or_else(|| Error::Parse(format!("alist: missing {what}")))?;
        line.split_whitespace()
            .map(|t| {
                t.parse::<usize>()
                    .map_err(|_| Error::Parse(format!("alist: bad number {t:?} in {what}")))
            })
            .collect()
    };
    let dims = next_nums("dimensions")?;
    let [n, m] = dims[..] else {
        return Err(Error::Parse("alist: expected two dimensions".into()));
    };
    next_nums("maximum degrees")?;
    // Degree lines are empty for zero-sized dimensions.
    let col_w = if n > 0 {
        next_nums("column weights")?
    } else {
        Vec::new()
    };
    let row_w = if m > 0 { next_nums("row weights")? } else { Vec::new() };
    if col_w.len() != n || row_w.len() != m {
        return Err(Error::Parse("alist: weight list length mismatch".into()));
    }
    let mut h = BitMatrix::zeros(m, n);
    for (j, &w) in col_w.iter().enumerate() {
        let entries = next_nums("column list")?;
        let ones: Vec<usize> = entries.into_iter().filter(|&e| e > 0).collect();
        if ones.len() != w {
            return Err(Error::Parse(format!("alist: column {j} weight mismatch")));
        }
        for r in ones {
            if r > m {
                return Err(Error::Parse(format!("alist: row index {r} out of range")));
            }
            h.set(r - 1, j, true);
        }
    }
    for (i, &w) in row_w.iter().enumerate() {
        let entries = next_nums("row list")?;
        let ones: Vec<usize> = entries.into_iter().filter(|&e| e > 0).collect();
        if ones.len() != w || ones.iter().any(|&c| c > n || !h.get(i, c - 1)) {
            return Err(Error::Parse(format!("alist: row {i} disagrees with column lists")));
        }
    }
    Ok(h)
}

/// Dense text: a `rows cols` header followed by one `0`/`1` line per row.
pub fn to_dense(h: &BitMatrix) -> String {
    format!("{} {}\n{}", h.rows(), h.cols(), h.to_dense_string())
}

pub fn from_dense(text: &str) -> Result<BitMatrix> {
    let mut lines = text.lines();
    let header = lines.next().ok_or_else(|| Error::Parse("dense: empty input".into()))?;
    let dims: Vec<usize> = header
        .split_whitespace()
        .map(|t| {
            t.parse()
                .map_err(|_| Error::Parse(format!("dense: bad header {header:?}")))
        })
        .collect::<Result<_>>()?;
    let [rows, cols] = dims[..] else {
        return Err(Error::Parse("dense: header needs rows and cols".into()));
    };
    let data: Vec<BitVector> = lines
        .filter(|l| !l.trim().is_empty())
        .map(|l| l.trim().parse())
        .collect::<Result<_>>()?;
    if data.len() != rows {
        return Err(Error::Parse(format!(
            "dense: expected {rows} rows, found {}",
            data.len()
        )));
    }
    BitMatrix::from_rows(cols, data)
}
