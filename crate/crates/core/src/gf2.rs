//! Dense linear algebra over GF(2).
//!
//! Vectors and matrices are bit-packed into 64-bit words, rows are stored
//! row-major. Elimination always picks the leftmost available pivot and the
//! topmost row carrying it, so reduced forms are reproducible.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

const WORD: usize = 64;

fn words_for(len: usize) -> usize {
    len.div_ceil(WORD)
}

/// A packed vector in F₂ⁿ.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BitVector {
    len: usize,
    words: Vec<u64>,
}

impl BitVector {
    pub fn zeros(len: usize) -> Self {
        Self {
            len,
            words: vec![0; words_for(len)],
        }
    }

    /// Vector of length `len` with ones exactly at `indices`.
    ///
    /// Repeated indices cancel, as they would in a GF(2) sum of unit vectors.
    pub fn from_indices(len: usize, indices: &[usize]) -> Self {
        let mut v = Self::zeros(len);
        for &i in indices {
            v.flip(i);
        }
        v
    }

    pub fn from_bools<I: IntoIterator<Item = bool>>(bits: I) -> Self {
        let bits: Vec<bool> = bits.into_iter().collect();
        let mut v = Self::zeros(bits.len());
        for (i, b) in bits.into_iter().enumerate() {
            if b {
                v.set(i, true);
            }
        }
        v
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    pub fn words(&self) -> &[u64] {
        &self.words
    }

    #[inline]
    pub fn get(&self, i: usize) -> bool {
        assert!(i < self.len, "bit index {i} out of range for length {}", self.len);
        (self.words[i / WORD] >> (i % WORD)) & 1 == 1
    }

    #[inline]
    pub fn set(&mut self, i: usize, value: bool) {
        assert!(i < self.len, "bit index {i} out of range for length {}", self.len);
        let mask = 1u64 << (i % WORD);
        if value {
            self.words[i / WORD] |= mask;
        } else {
            self.words[i / WORD] &= !mask;
        }
    }

    #[inline]
    pub fn flip(&mut self, i: usize) {
        assert!(i < self.len, "bit index {i} out of range for length {}", self.len);
        self.words[i / WORD] ^= 1u64 << (i % WORD);
    }

    pub fn weight(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_zero(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    /// In-place `self ^= other`. Panics on length mismatch.
    pub fn xor_assign(&mut self, other: &BitVector) {
        assert_eq!(self.len, other.len, "length mismatch in xor");
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a ^= b;
        }
    }

    pub fn xor(&self, other: &BitVector) -> BitVector {
        let mut out = self.clone();
        out.xor_assign(other);
        out
    }

    pub fn and(&self, other: &BitVector) -> BitVector {
        assert_eq!(self.len, other.len, "length mismatch in and");
        BitVector {
            len: self.len,
            words: self.words.iter().zip(&other.words).map(|(a, b)| a & b).collect(),
        }
    }

    /// Number of positions where both vectors are one.
    pub fn overlap(&self, other: &BitVector) -> usize {
        assert_eq!(self.len, other.len, "length mismatch in overlap");
        self.words
            .iter()
            .zip(&other.words)
            .map(|(a, b)| (a & b).count_ones() as usize)
            .sum()
    }

    /// Standard inner product over GF(2).
    pub fn dot(&self, other: &BitVector) -> bool {
        self.overlap(other) % 2 == 1
    }

    /// Indices of the set bits, ascending.
    pub fn support(&self) -> Vec<usize> {
        self.iter_ones().collect()
    }

    pub fn iter_ones(&self) -> impl Iterator<Item = usize> + '_ {
        self.words.iter().enumerate().flat_map(|(wi, &w)| {
            let mut w = w;
            std::iter::from_fn(move || {
                if w == 0 {
                    None
                } else {
                    let t = w.trailing_zeros() as usize;
                    w &= w - 1;
                    Some(wi * WORD + t)
                }
            })
        })
    }

    /// Index of the lowest set bit.
    pub fn first_one(&self) -> Option<usize> {
        self.words
            .iter()
            .enumerate()
            .find(|(_, &w)| w != 0)
            .map(|(wi, w)| wi * WORD + w.trailing_zeros() as usize)
    }

    /// Keeps the listed positions, in the listed order.
    pub fn select(&self, positions: &[usize]) -> BitVector {
        BitVector::from_bools(positions.iter().map(|&p| self.get(p)))
    }

    pub fn concat(&self, other: &BitVector) -> BitVector {
        let mut out = BitVector::zeros(self.len + other.len);
        for i in self.iter_ones() {
            out.set(i, true);
        }
        for i in other.iter_ones() {
            out.set(self.len + i, true);
        }
        out
    }

    pub fn to_bools(&self) -> Vec<bool> {
        (0..self.len).map(|i| self.get(i)).collect()
    }
}

impl fmt::Display for BitVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.len {
            f.write_str(if self.get(i) { "1" } else { "0" })?;
        }
        Ok(())
    }
}

impl fmt::Debug for BitVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "BitVector({self})")
    }
}

impl FromStr for BitVector {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let mut bits = Vec::with_capacity(s.len());
        for c in s.chars() {
            match c {
                '0' => bits.push(false),
                '1' => bits.push(true),
                c if c.is_whitespace() => {}
                c => return Err(Error::Parse(format!("invalid bit character {c:?}"))),
            }
        }
        Ok(BitVector::from_bools(bits))
    }
}

/// A dense matrix over GF(2), one packed [`BitVector`] per row.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct BitMatrix {
    cols: usize,
    data: Vec<BitVector>,
}

impl BitMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self {
            cols,
            data: vec![BitVector::zeros(cols); rows],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, true);
        }
        m
    }

    /// Builds a matrix from rows; every row must have length `cols`.
    pub fn from_rows(cols: usize, rows: Vec<BitVector>) -> Result<Self> {
        if let Some(bad) = rows.iter().find(|r| r.len() != cols) {
            return Err(Error::Shape(format!(
                "row of length {} in a matrix with {cols} columns",
                bad.len()
            )));
        }
        Ok(Self { cols, data: rows })
    }

    /// Convenience constructor from 0/1 rows; panics on ragged input.
    pub fn from_dense<R: AsRef<[u8]>>(rows: &[R]) -> Self {
        let cols = rows.first().map_or(0, |r| r.as_ref().len());
        let data = rows
            .iter()
            .map(|r| {
                let r = r.as_ref();
                assert_eq!(r.len(), cols, "ragged dense matrix");
                BitVector::from_bools(r.iter().map(|&b| b & 1 == 1))
            })
            .collect();
        Self { cols, data }
    }

    pub fn rows(&self) -> usize {
        self.data.len()
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn row(&self, i: usize) -> &BitVector {
        &self.data[i]
    }

    pub fn row_vectors(&self) -> &[BitVector] {
        &self.data
    }

    pub fn into_rows(self) -> Vec<BitVector> {
        self.data
    }

    pub fn get(&self, i: usize, j: usize) -> bool {
        self.data[i].get(j)
    }

    pub fn set(&mut self, i: usize, j: usize, value: bool) {
        self.data[i].set(j, value)
    }

    pub fn flip(&mut self, i: usize, j: usize) {
        self.data[i].flip(j)
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(BitVector::is_zero)
    }

    /// Number of ones in the matrix.
    pub fn weight(&self) -> usize {
        self.data.iter().map(BitVector::weight).sum()
    }

    pub fn column(&self, j: usize) -> BitVector {
        BitVector::from_bools(self.data.iter().map(|r| r.get(j)))
    }

    pub fn transpose(&self) -> BitMatrix {
        let mut t = BitMatrix::zeros(self.cols, self.rows());
        for (i, row) in self.data.iter().enumerate() {
            for j in row.iter_ones() {
                t.set(j, i, true);
            }
        }
        t
    }

    /// Matrix product `self · other`.
    pub fn mul(&self, other: &BitMatrix) -> Result<BitMatrix> {
        if self.cols != other.rows() {
            return Err(Error::Shape(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows(),
                self.cols,
                other.rows(),
                other.cols
            )));
        }
        let data = self
            .data
            .iter()
            .map(|row| {
                let mut acc = BitVector::zeros(other.cols);
                for k in row.iter_ones() {
                    acc.xor_assign(&other.data[k]);
                }
                acc
            })
            .collect();
        Ok(BitMatrix { cols: other.cols, data })
    }

    /// Column action `self · v`.
    pub fn mul_vec(&self, v: &BitVector) -> Result<BitVector> {
        if v.len() != self.cols {
            return Err(Error::Shape(format!(
                "vector of length {} against {} columns",
                v.len(),
                self.cols
            )));
        }
        Ok(BitVector::from_bools(self.data.iter().map(|r| r.dot(v))))
    }

    /// Row action `x · self`.
    pub fn vec_mul(&self, x: &BitVector) -> Result<BitVector> {
        if x.len() != self.rows() {
            return Err(Error::Shape(format!(
                "vector of length {} against {} rows",
                x.len(),
                self.rows()
            )));
        }
        let mut acc = BitVector::zeros(self.cols);
        for i in x.iter_ones() {
            acc.xor_assign(&self.data[i]);
        }
        Ok(acc)
    }

    /// Kronecker product `self ⊗ other`.
    pub fn kron(&self, other: &BitMatrix) -> BitMatrix {
        let rows = self.rows() * other.rows();
        let cols = self.cols * other.cols;
        let mut out = BitMatrix::zeros(rows, cols);
        for (i, a_row) in self.data.iter().enumerate() {
            for j in a_row.iter_ones() {
                for (p, b_row) in other.data.iter().enumerate() {
                    for q in b_row.iter_ones() {
                        out.set(i * other.rows() + p, j * other.cols + q, true);
                    }
                }
            }
        }
        out
    }

    /// Horizontal concatenation `(self | other)`.
    pub fn hstack(&self, other: &BitMatrix) -> Result<BitMatrix> {
        if self.rows() != other.rows() {
            return Err(Error::Shape(format!(
                "hstack of {} rows with {} rows",
                self.rows(),
                other.rows()
            )));
        }
        let data = self.data.iter().zip(&other.data).map(|(a, b)| a.concat(b)).collect();
        Ok(BitMatrix {
            cols: self.cols + other.cols,
            data,
        })
    }

    /// Vertical concatenation.
    pub fn vstack(&self, other: &BitMatrix) -> Result<BitMatrix> {
        if self.cols != other.cols {
            return Err(Error::Shape(format!(
                "vstack of {} columns with {} columns",
                self.cols, other.cols
            )));
        }
        let mut data = self.data.clone();
        data.extend(other.data.iter().cloned());
        Ok(BitMatrix { cols: self.cols, data })
    }

    pub fn select_rows(&self, rows: &[usize]) -> BitMatrix {
        BitMatrix {
            cols: self.cols,
            data: rows.iter().map(|&r| self.data[r].clone()).collect(),
        }
    }

    pub fn select_cols(&self, cols: &[usize]) -> BitMatrix {
        BitMatrix {
            cols: cols.len(),
            data: self.data.iter().map(|r| r.select(cols)).collect(),
        }
    }

    /// Applies a column permutation: column `j` of the result is column
    /// `perm[j]` of `self`.
    pub fn permute_cols(&self, perm: &[usize]) -> BitMatrix {
        self.select_cols(perm)
    }

    pub fn rank(&self) -> usize {
        Echelon::new(self).rank()
    }

    /// Basis of `{v : self · v = 0}`, one vector per free column of the
    /// reduced row echelon form, in increasing free-column order.
    pub fn kernel_basis(&self) -> Vec<BitVector> {
        let ech = Echelon::new(self);
        let mut pivot_of_col = vec![None; self.cols];
        for (r, &c) in ech.pivots.iter().enumerate() {
            pivot_of_col[c] = Some(r);
        }
        (0..self.cols)
            .filter(|&c| pivot_of_col[c].is_none())
            .map(|free| {
                let mut v = BitVector::zeros(self.cols);
                v.set(free, true);
                for (r, &pc) in ech.pivots.iter().enumerate() {
                    if ech.rows[r].get(free) {
                        v.set(pc, true);
                    }
                }
                v
            })
            .collect()
    }

    /// True iff `v` is a GF(2) combination of the rows.
    pub fn row_space_contains(&self, v: &BitVector) -> Result<bool> {
        if v.len() != self.cols {
            return Err(Error::Shape(format!(
                "vector of length {} against {} columns",
                v.len(),
                self.cols
            )));
        }
        Ok(Echelon::new(self).contains(v))
    }

    /// Finds `x` with `x · self = b`, or `None` if `b` is not in the row space.
    pub fn solve_left(&self, b: &BitVector) -> Result<Option<BitVector>> {
        if b.len() != self.cols {
            return Err(Error::Shape(format!(
                "vector of length {} against {} columns",
                b.len(),
                self.cols
            )));
        }
        Ok(Echelon::with_combinations(self).solve(b))
    }

    /// Inverse of a square matrix, or `None` if it is singular.
    pub fn inverse(&self) -> Option<BitMatrix> {
        let n = self.rows();
        if n != self.cols {
            return None;
        }
        let ech = Echelon::with_combinations(self);
        if ech.rank() != n {
            return None;
        }
        // Full rank: reduced rows are the identity, so the combinations are the inverse.
        let combos = ech.combos.expect("built with combinations");
        Some(BitMatrix { cols: n, data: combos })
    }

    /// Dense `0`/`1` rows separated by newlines.
    pub fn to_dense_string(&self) -> String {
        let mut s = String::new();
        for r in &self.data {
            s.push_str(&r.to_string());
            s.push('\n');
        }
        s
    }
}

impl fmt::Debug for BitMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "BitMatrix {}x{} [", self.rows(), self.cols)?;
        for r in &self.data {
            writeln!(f, "  {r}")?;
        }
        write!(f, "]")
    }
}

/// Reduced row echelon form of a matrix, optionally remembering which
/// original rows combine into each reduced row.
#[derive(Clone, Debug)]
pub struct Echelon {
    cols: usize,
    rows: Vec<BitVector>,
    pivots: Vec<usize>,
    combos: Option<Vec<BitVector>>,
    source_rows: usize,
}

impl Echelon {
    pub fn new(m: &BitMatrix) -> Self {
        Self::build(m, false)
    }

    pub fn with_combinations(m: &BitMatrix) -> Self {
        Self::build(m, true)
    }

    fn build(m: &BitMatrix, track: bool) -> Self {
        let n_rows = m.rows();
        let mut rows = m.data.clone();
        let mut combos: Option<Vec<BitVector>> =
            track.then(|| (0..n_rows).map(|i| BitVector::from_indices(n_rows, &[i])).collect());
        let mut pivots = Vec::new();
        let mut next = 0;
        for col in 0..m.cols {
            if next == n_rows {
                break;
            }
            let Some(p) = (next..n_rows).find(|&r| rows[r].get(col)) else {
                continue;
            };
            rows.swap(next, p);
            if let Some(c) = combos.as_mut() {
                c.swap(next, p);
            }
            for r in 0..n_rows {
                if r != next && rows[r].get(col) {
                    let (src, dst) = split_pair(&mut rows, next, r);
                    dst.xor_assign(src);
                    if let Some(c) = combos.as_mut() {
                        let (src, dst) = split_pair(c, next, r);
                        dst.xor_assign(src);
                    }
                }
            }
            pivots.push(col);
            next += 1;
        }
        rows.truncate(pivots.len());
        if let Some(c) = combos.as_mut() {
            c.truncate(pivots.len());
        }
        Self {
            cols: m.cols,
            rows,
            pivots,
            combos,
            source_rows: n_rows,
        }
    }

    pub fn rank(&self) -> usize {
        self.pivots.len()
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// Nonzero reduced rows, one per pivot.
    pub fn reduced_rows(&self) -> &[BitVector] {
        &self.rows
    }

    /// Reduces `v` against the pivot rows; the result is zero iff `v` lies in
    /// the row space.
    pub fn reduce(&self, v: &BitVector) -> BitVector {
        assert_eq!(v.len(), self.cols, "length mismatch in reduce");
        let mut r = v.clone();
        for (row, &p) in self.rows.iter().zip(&self.pivots) {
            if r.get(p) {
                r.xor_assign(row);
            }
        }
        r
    }

    pub fn contains(&self, v: &BitVector) -> bool {
        self.reduce(v).is_zero()
    }

    /// Columns without a pivot, ascending.
    pub fn free_columns(&self) -> Vec<usize> {
        let mut is_pivot = vec![false; self.cols];
        for &p in &self.pivots {
            is_pivot[p] = true;
        }
        (0..self.cols).filter(|&c| !is_pivot[c]).collect()
    }

    /// Combination `x` of the original rows with `x · M = b`, if any.
    /// Panics unless built by [`Echelon::with_combinations`].
    pub fn solve(&self, b: &BitVector) -> Option<BitVector> {
        let combos = self
            .combos
            .as_ref()
            .expect("solve requires an echelon built with combinations");
        let n_orig = self.source_rows;
        let mut r = b.clone();
        let mut x = BitVector::zeros(n_orig);
        for ((row, &p), combo) in self.rows.iter().zip(&self.pivots).zip(combos) {
            if r.get(p) {
                r.xor_assign(row);
                x.xor_assign(combo);
            }
        }
        if !r.is_zero() {
            return None;
        }
        Some(x)
    }
}

fn split_pair<T>(v: &mut [T], src: usize, dst: usize) -> (&T, &mut T) {
    assert_ne!(src, dst);
    if src < dst {
        let (a, b) = v.split_at_mut(dst);
        (&a[src], &mut b[0])
    } else {
        let (a, b) = v.split_at_mut(src);
        (&b[0], &mut a[dst])
    }
}
