//! Polynomials over GF(2) and their matrix realizations.
//!
//! [`UniPoly`] is an ordinary polynomial in `F₂[x]`; [`BiPoly`] is a Laurent
//! polynomial in two variables whose exponents are only reduced modulo the
//! ring periods when it is evaluated. The ring element `x^a y^b` of
//! `F₂[x,y]/(x^ℓ−1, y^m−1)` corresponds to row/column index `a·m + b`.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::gf2::BitMatrix;

/// A polynomial in `F₂[x]`, stored as a packed coefficient vector.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct UniPoly {
    // Invariant: no trailing zero words.
    words: Vec<u64>,
}

impl UniPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::monomial(0)
    }

    pub fn monomial(e: usize) -> Self {
        let mut p = Self::zero();
        p.toggle(e);
        p
    }

    /// `Σ x^e` over the given exponents; repeated exponents cancel.
    pub fn from_exponents(exps: &[usize]) -> Self {
        let mut p = Self::zero();
        for &e in exps {
            p.toggle(e);
        }
        p
    }

    /// `xⁿ − 1`, which over GF(2) is `xⁿ + 1`.
    pub fn cyclic_modulus(n: usize) -> Self {
        Self::from_exponents(&[0, n])
    }

    fn toggle(&mut self, e: usize) {
        let w = e / 64;
        if self.words.len() <= w {
            self.words.resize(w + 1, 0);
        }
        self.words[w] ^= 1u64 << (e % 64);
        self.trim();
    }

    fn trim(&mut self) {
        while self.words.last() == Some(&0) {
            self.words.pop();
        }
    }

    pub fn is_zero(&self) -> bool {
        self.words.is_empty()
    }

    pub fn coeff(&self, e: usize) -> bool {
        self.words.get(e / 64).is_some_and(|w| (w >> (e % 64)) & 1 == 1)
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        let last = *self.words.last()?;
        Some((self.words.len() - 1) * 64 + 63 - last.leading_zeros() as usize)
    }

    /// Exponents with nonzero coefficient, ascending.
    pub fn exponents(&self) -> Vec<usize> {
        let mut out = Vec::new();
        for (wi, &w) in self.words.iter().enumerate() {
            let mut w = w;
            while w != 0 {
                out.push(wi * 64 + w.trailing_zeros() as usize);
                w &= w - 1;
            }
        }
        out
    }

    pub fn add(&self, other: &UniPoly) -> UniPoly {
        let len = self.words.len().max(other.words.len());
        let mut words = vec![0u64; len];
        for (i, w) in words.iter_mut().enumerate() {
            *w = self.words.get(i).copied().unwrap_or(0) ^ other.words.get(i).copied().unwrap_or(0);
        }
        let mut p = UniPoly { words };
        p.trim();
        p
    }

    pub fn mul(&self, other: &UniPoly) -> UniPoly {
        let mut out = UniPoly::zero();
        for a in self.exponents() {
            for b in other.exponents() {
                out.toggle(a + b);
            }
        }
        out
    }

    fn shifted(&self, s: usize) -> UniPoly {
        UniPoly::from_exponents(&self.exponents().iter().map(|e| e + s).collect::<Vec<_>>())
    }

    /// Euclidean division: returns `(q, r)` with `self = q·d + r`, `deg r < deg d`.
    pub fn div_rem(&self, d: &UniPoly) -> Result<(UniPoly, UniPoly)> {
        let dd = d
            .degree()
            .ok_or_else(|| Error::Precondition("division by the zero polynomial".into()))?;
        let mut q = UniPoly::zero();
        let mut r = self.clone();
        while let Some(rd) = r.degree() {
            if rd < dd {
                break;
            }
            q.toggle(rd - dd);
            r = r.add(&d.shifted(rd - dd));
        }
        Ok((q, r))
    }

    pub fn rem(&self, d: &UniPoly) -> Result<UniPoly> {
        Ok(self.div_rem(d)?.1)
    }

    pub fn divides(&self, other: &UniPoly) -> bool {
        !self.is_zero() && other.rem(self).is_ok_and(|r| r.is_zero())
    }

    /// Representative of `self` modulo `xⁿ − 1`, exponents in `[0, n)`.
    pub fn reduce_cyclic(&self, n: usize) -> UniPoly {
        assert!(n >= 1, "cyclic length must be positive");
        UniPoly::from_exponents(&self.exponents().iter().map(|e| e % n).collect::<Vec<_>>())
    }

    /// Evaluates at a univariate variable placed in the `x` slot.
    pub fn to_bipoly_x(&self) -> BiPoly {
        BiPoly::from_terms(self.exponents().iter().map(|&e| (e as i64, 0)))
    }

    /// Evaluates at a univariate variable placed in the `y` slot.
    pub fn to_bipoly_y(&self) -> BiPoly {
        BiPoly::from_terms(self.exponents().iter().map(|&e| (0, e as i64)))
    }
}

/// Monic greatest common divisor by the Euclidean algorithm.
pub fn poly_gcd(a: &UniPoly, b: &UniPoly) -> Result<UniPoly> {
    if a.is_zero() && b.is_zero() {
        return Err(Error::Precondition("gcd of two zero polynomials".into()));
    }
    let (mut a, mut b) = (a.clone(), b.clone());
    while !b.is_zero() {
        let r = a.rem(&b)?;
        a = b;
        b = r;
    }
    Ok(a)
}

/// The `n×n` matrix `h(S_n)`, where `S_n` sends basis vector `e_c` to
/// `e_{c+1 mod n}`. Row `r` holds ones at columns `r − e mod n`.
pub fn circulant(h: &UniPoly, n: usize) -> BitMatrix {
    assert!(n >= 1, "circulant size must be positive");
    let mut m = BitMatrix::zeros(n, n);
    for e in h.exponents() {
        for r in 0..n {
            let c = (r + n - e % n) % n;
            m.flip(r, c);
        }
    }
    m
}

impl fmt::Display for UniPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let exps = self.exponents();
        if exps.is_empty() {
            return f.write_str("0");
        }
        let terms: Vec<String> = exps
            .iter()
            .map(|&e| match e {
                0 => "1".to_string(),
                1 => "x".to_string(),
                e => format!("x^{e}"),
            })
            .collect();
        f.write_str(&terms.join(" + "))
    }
}

impl fmt::Debug for UniPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "UniPoly({self})")
    }
}

impl FromStr for UniPoly {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bi: BiPoly = s.parse()?;
        let mut exps = Vec::new();
        for &(a, b) in bi.terms() {
            if b != 0 {
                return Err(Error::Parse(format!("univariate polynomial contains y in {s:?}")));
            }
            if a < 0 {
                return Err(Error::Parse(format!(
                    "negative exponent in univariate polynomial {s:?}"
                )));
            }
            exps.push(a as usize);
        }
        Ok(UniPoly::from_exponents(&exps))
    }
}

/// Periods `(ℓ, m)` of the torus `F₂[x,y]/(x^ℓ−1, y^m−1)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct RingParams {
    pub l: usize,
    pub m: usize,
}

impl RingParams {
    pub fn new(l: usize, m: usize) -> Result<Self> {
        if l == 0 || m == 0 {
            return Err(Error::Precondition(format!(
                "ring periods must be positive, got ({l}, {m})"
            )));
        }
        Ok(Self { l, m })
    }

    /// Number of monomials, `ℓ·m`.
    pub fn size(&self) -> usize {
        self.l * self.m
    }

    /// Index of `x^a y^b` after reduction.
    pub fn index(&self, a: i64, b: i64) -> usize {
        let a = a.rem_euclid(self.l as i64) as usize;
        let b = b.rem_euclid(self.m as i64) as usize;
        a * self.m + b
    }

    pub fn coords(&self, index: usize) -> (usize, usize) {
        (index / self.m, index % self.m)
    }
}

/// A Laurent polynomial in `x, y` over GF(2), as a set of exponent pairs.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct BiPoly {
    terms: BTreeSet<(i64, i64)>,
}

impl BiPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    /// Builds `Σ x^a y^b`; repeated pairs cancel.
    pub fn from_terms<I: IntoIterator<Item = (i64, i64)>>(terms: I) -> Self {
        let mut p = Self::zero();
        for t in terms {
            p.toggle(t);
        }
        p
    }

    fn toggle(&mut self, t: (i64, i64)) {
        if !self.terms.remove(&t) {
            self.terms.insert(t);
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = &(i64, i64)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Sum over GF(2): symmetric difference of term sets.
    pub fn add(&self, other: &BiPoly) -> BiPoly {
        let mut out = self.clone();
        for &t in &other.terms {
            out.toggle(t);
        }
        out
    }

    pub fn mul(&self, other: &BiPoly) -> BiPoly {
        let mut out = BiPoly::zero();
        for &(a, b) in &self.terms {
            for &(c, d) in &other.terms {
                out.toggle((a + c, b + d));
            }
        }
        out
    }

    /// `P(x,y) ↦ P(y,x)`.
    pub fn swap_variables(&self) -> BiPoly {
        BiPoly::from_terms(self.terms.iter().map(|&(a, b)| (b, a)))
    }

    /// Terms reduced into `[0,ℓ)×[0,m)`, with cancellation.
    pub fn reduced(&self, p: RingParams) -> BiPoly {
        BiPoly::from_terms(
            self.terms
                .iter()
                .map(|&(a, b)| (a.rem_euclid(p.l as i64), b.rem_euclid(p.m as i64))),
        )
    }

    /// Equality as ring elements for the given periods.
    pub fn equivalent(&self, other: &BiPoly, p: RingParams) -> bool {
        self.reduced(p) == other.reduced(p)
    }

    /// If every term has `b = 0`, the polynomial in `x` alone.
    pub fn as_univariate_x(&self) -> Option<UniPoly> {
        if self.terms.iter().any(|&(a, b)| b != 0 || a < 0) {
            return None;
        }
        Some(UniPoly::from_exponents(
            &self.terms.iter().map(|&(a, _)| a as usize).collect::<Vec<_>>(),
        ))
    }

    /// If every term has `a = 0`, the polynomial in `y` alone.
    pub fn as_univariate_y(&self) -> Option<UniPoly> {
        if self.terms.iter().any(|&(a, b)| a != 0 || b < 0) {
            return None;
        }
        Some(UniPoly::from_exponents(
            &self.terms.iter().map(|&(_, b)| b as usize).collect::<Vec<_>>(),
        ))
    }

    /// Toroidal degree: the largest `max(|a|,|b|)` over terms after centering
    /// each exponent into `(−ℓ/2, ℓ/2] × (−m/2, m/2]`.
    pub fn centered_degree(&self, p: RingParams) -> usize {
        self.reduced(p)
            .terms
            .iter()
            .map(|&(a, b)| {
                let ca = center(a, p.l as i64);
                let cb = center(b, p.m as i64);
                ca.unsigned_abs().max(cb.unsigned_abs()) as usize
            })
            .max()
            .unwrap_or(0)
    }
}

fn center(e: i64, period: i64) -> i64 {
    let r = e.rem_euclid(period);
    if 2 * r > period {
        r - period
    } else {
        r
    }
}

/// `{(−a, −b)}`: the polynomial whose evaluation is the transpose.
pub fn transpose_as_inverse(p: &BiPoly) -> BiPoly {
    BiPoly::from_terms(p.terms.iter().map(|&(a, b)| (-a, -b)))
}

/// The commuting permutation matrices `x = S_ℓ ⊗ 1_m` and `y = 1_ℓ ⊗ S_m`.
pub fn monomial_matrices(p: RingParams) -> (BitMatrix, BitMatrix) {
    let x = eval_bipoly(&BiPoly::from_terms([(1, 0)]), p);
    let y = eval_bipoly(&BiPoly::from_terms([(0, 1)]), p);
    (x, y)
}

/// `Σ x^a y^b` as an `ℓm×ℓm` matrix. Row `(r₁,r₂)` has a one in column
/// `(r₁−a, r₂−b)` for each term.
pub fn eval_bipoly(poly: &BiPoly, p: RingParams) -> BitMatrix {
    let n = p.size();
    let mut out = BitMatrix::zeros(n, n);
    for &(a, b) in &poly.terms {
        for r1 in 0..p.l {
            for r2 in 0..p.m {
                let row = r1 * p.m + r2;
                let col = p.index(r1 as i64 - a, r2 as i64 - b);
                out.flip(row, col);
            }
        }
    }
    out
}

impl fmt::Display for BiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        let mut sorted: Vec<(i64, i64)> = self.terms.iter().copied().collect();
        sorted.sort_by_key(|&(a, b)| (a.abs() + b.abs(), a, b));
        let fmt_var = |v: char, e: i64| match e {
            0 => None,
            1 => Some(v.to_string()),
            e => Some(format!("{v}^{e}")),
        };
        let terms: Vec<String> = sorted
            .iter()
            .map(|&(a, b)| {
                let parts: Vec<String> = [fmt_var('x', a), fmt_var('y', b)].into_iter().flatten().collect();
                if parts.is_empty() {
                    "1".to_string()
                } else {
                    parts.join("*")
                }
            })
            .collect();
        f.write_str(&terms.join(" + "))
    }
}

impl fmt::Debug for BiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "BiPoly({self})")
    }
}

impl FromStr for BiPoly {
    type Err = Error;

    /// Parses `term (+ term)*` where a term is `1` or a product of `x`, `y`,
    /// `x^e`, `y^e` (signed integer `e`, optionally parenthesized), joined by
    /// `*` or juxtaposed. A lone `0` is the zero polynomial.
    fn from_str(s: &str) -> Result<Self> {
        let trimmed = s.trim();
        if trimmed == "0" {
            return Ok(BiPoly::zero());
        }
        if trimmed.is_empty() {
            return Err(Error::Parse("empty polynomial".into()));
        }
        let mut terms = Vec::new();
        for raw in trimmed.split('+') {
            terms.push(parse_term(raw.trim(), s)?);
        }
        Ok(BiPoly::from_terms(terms))
    }
}

fn parse_term(t: &str, whole: &str) -> Result<(i64, i64)> {
    let err = |msg: &str| Error::Parse(format!("{msg} in polynomial {whole:?}"));
    if t.is_empty() {
        return Err(err("empty term"));
    }
    if t == "1" {
        return Ok((0, 0));
    }
    let chars: Vec<char> = t.chars().filter(|c| !c.is_whitespace()).collect();
    let (mut a, mut b) = (0i64, 0i64);
    let mut i = 0;
    let mut expect_factor = true;
    while i < chars.len() {
        match chars[i] {
            '*' if !expect_factor => {
                expect_factor = true;
                i += 1;
            }
            '1' if expect_factor && chars.len() > 1 => {
                // `1*x` style
                i += 1;
                expect_factor = false;
            }
            v @ ('x' | 'y') => {
                i += 1;
                let mut e = 1i64;
                if i < chars.len() && chars[i] == '^' {
                    i += 1;
                    let paren = i < chars.len() && (chars[i] == '(' || chars[i] == '{');
                    if paren {
                        i += 1;
                    }
                    let start = i;
                    if i < chars.len() && (chars[i] == '-' || chars[i] == '+') {
                        i += 1;
                    }
                    while i < chars.len() && chars[i].is_ascii_digit() {
                        i += 1;
                    }
                    let digits: String = chars[start..i].iter().collect();
                    e = digits.parse().map_err(|_| err(&format!("bad exponent {digits:?}")))?;
                    if paren {
                        if i < chars.len() && (chars[i] == ')' || chars[i] == '}') {
                            i += 1;
                        } else {
                            return Err(err("unclosed exponent"));
                        }
                    }
                }
                if v == 'x' {
                    a += e;
                } else {
                    b += e;
                }
                expect_factor = false;
            }
            c => return Err(err(&format!("unexpected character {c:?}"))),
        }
    }
    if expect_factor {
        return Err(err("dangling '*'"));
    }
    Ok((a, b))
}
