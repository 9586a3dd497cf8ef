//! Packed GF(2) vectors and matrices.
//!
//! Bits are stored little-endian in `u64` words: bit `k` lives in word
//! `k / 64` at position `k % 64`. Unused high bits of the last word are
//! always zero, so word-level equality, XOR and popcount are exact.

use std::fmt;

use crate::error::{Error, Result};

const WORD: usize = 64;

#[inline]
fn words_for(len: usize) -> usize {
    len.div_ceil(WORD)
}

/// A fixed-length vector over GF(2).
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BitVec {
    words: Vec<u64>,
    len: usize,
}

impl BitVec {
    pub fn zeros(len: usize) -> Self {
        Self {
            words: vec![0; words_for(len)],
            len,
        }
    }

    pub fn ones(len: usize) -> Self {
        let mut v = Self {
            words: vec![u64::MAX; words_for(len)],
            len,
        };
        v.clear_tail();
        v
    }

    /// The standard basis vector with a single one at `index`.
    pub fn unit(len: usize, index: usize) -> Self {
        let mut v = Self::zeros(len);
        v.set(index, true);
        v
    }

    /// Builds a vector from a slice of `0`/`1` values (any nonzero byte is a one).
    pub fn from_bits(bits: &[u8]) -> Self {
        let mut v = Self::zeros(bits.len());
        for (i, &b) in bits.iter().enumerate() {
            if b != 0 {
                v.set(i, true);
            }
        }
        v
    }

    pub fn from_bools<I: IntoIterator<Item = bool>>(bits: I) -> Self {
        let bits: Vec<u8> = bits.into_iter().map(u8::from).collect();
        Self::from_bits(&bits)
    }

    /// Rebuilds a vector from raw words; bits beyond `len` are discarded.
    pub fn from_words(words: Vec<u64>, len: usize) -> Self {
        assert_eq!(words.len(), words_for(len), "word count does not match length");
        let mut v = Self { words, len };
        v.clear_tail();
        v
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.len
    }

    #[inline]
    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    #[inline]
    pub fn words(&self) -> &[u64] {
        &self.words
    }

    #[inline]
    pub fn get(&self, i: usize) -> bool {
        debug_assert!(i < self.len);
        (self.words[i / WORD] >> (i % WORD)) & 1 == 1
    }

    #[inline]
    pub fn bit(&self, i: usize) -> u8 {
        u8::from(self.get(i))
    }

    #[inline]
    pub fn set(&mut self, i: usize, value: bool) {
        debug_assert!(i < self.len);
        let mask = 1u64 << (i % WORD);
        if value {
            self.words[i / WORD] |= mask;
        } else {
            self.words[i / WORD] &= !mask;
        }
    }

    #[inline]
    pub fn flip(&mut self, i: usize) {
        debug_assert!(i < self.len);
        self.words[i / WORD] ^= 1u64 << (i % WORD);
    }

    /// Hamming weight.
    pub fn weight(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_zero(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    #[inline]
    pub fn xor_assign(&mut self, other: &BitVec) {
        debug_assert_eq!(self.len, other.len);
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a ^= *b;
        }
    }

    pub fn xor(&self, other: &BitVec) -> BitVec {
        let mut out = self.clone();
        out.xor_assign(other);
        out
    }

    /// Inner product over GF(2).
    pub fn dot(&self, other: &BitVec) -> bool {
        debug_assert_eq!(self.len, other.len);
        let ones: u32 = self
            .words
            .iter()
            .zip(&other.words)
            .map(|(a, b)| (a & b).count_ones())
            .sum();
        ones & 1 == 1
    }

    /// Index of the lowest set bit, if any.
    pub fn first_one(&self) -> Option<usize> {
        self.words
            .iter()
            .enumerate()
            .find(|(_, &w)| w != 0)
            .map(|(i, w)| i * WORD + w.trailing_zeros() as usize)
    }

    /// Index of the lowest set bit at or after `from`.
    pub fn next_one(&self, from: usize) -> Option<usize> {
        if from >= self.len {
            return None;
        }
        let mut wi = from / WORD;
        let mut w = self.words[wi] & (u64::MAX << (from % WORD));
        loop {
            if w != 0 {
                return Some(wi * WORD + w.trailing_zeros() as usize);
            }
            wi += 1;
            if wi == self.words.len() {
                return None;
            }
            w = self.words[wi];
        }
    }

    pub fn iter(&self) -> impl Iterator<Item = bool> + '_ {
        (0..self.len).map(move |i| self.get(i))
    }

    /// Positions of the set bits in increasing order.
    pub fn ones_positions(&self) -> impl Iterator<Item = usize> + '_ {
        self.words.iter().enumerate().flat_map(|(wi, &w)| {
            let mut rest = w;
            std::iter::from_fn(move || {
                if rest == 0 {
                    return None;
                }
                let tz = rest.trailing_zeros() as usize;
                rest &= rest - 1;
                Some(wi * WORD + tz)
            })
        })
    }

    pub fn to_bits(&self) -> Vec<u8> {
        self.iter().map(u8::from).collect()
    }

    /// `0`/`1` characters, index 0 first.
    pub fn to_bit_string(&self) -> String {
        self.iter().map(|b| if b { '1' } else { '0' }).collect()
    }

    /// Bytes with bit `k` at byte `k / 8`, position `k % 8`, hex encoded.
    pub fn to_hex(&self) -> String {
        let nbytes = self.len.div_ceil(8);
        let bytes: Vec<u8> = (0..nbytes)
            .map(|b| (self.words[b / 8] >> (8 * (b % 8))) as u8)
            .collect();
        hex::encode(bytes)
    }

    pub fn from_hex(s: &str, len: usize) -> Result<Self> {
        let bytes = hex::decode(s).map_err(|e| Error::Parse(format!("bad hex row: {e}")))?;
        if bytes.len() != len.div_ceil(8) {
            return Err(Error::Parse(format!(
                "hex row has {} bytes, expected {}",
                bytes.len(),
                len.div_ceil(8)
            )));
        }
        let mut words = vec![0u64; words_for(len)];
        for (b, &byte) in bytes.iter().enumerate() {
            words[b / 8] |= u64::from(byte) << (8 * (b % 8));
        }
        let v = Self { words, len };
        let mut trimmed = v.clone();
        trimmed.clear_tail();
        if trimmed != v {
            return Err(Error::Parse("hex row has bits beyond its length".into()));
        }
        Ok(v)
    }

    /// Concatenation `self || other`.
    pub fn concat(&self, other: &BitVec) -> BitVec {
        let mut out = BitVec::zeros(self.len + other.len);
        for i in self.ones_positions() {
            out.set(i, true);
        }
        for i in other.ones_positions() {
            out.set(self.len + i, true);
        }
        out
    }

    /// Copy of `self[start..start + len]`.
    pub fn slice(&self, start: usize, len: usize) -> BitVec {
        let mut out = BitVec::zeros(len);
        for i in 0..len {
            if self.get(start + i) {
                out.set(i, true);
            }
        }
        out
    }

    /// Kronecker product of two row vectors.
    pub fn kron(&self, other: &BitVec) -> BitVec {
        let mut out = BitVec::zeros(self.len * other.len);
        for i in self.ones_positions() {
            for j in other.ones_positions() {
                out.set(i * other.len + j, true);
            }
        }
        out
    }

    /// Applies `out[k] = self[perm[k]]`.
    pub fn permuted(&self, perm: &[usize]) -> BitVec {
        debug_assert_eq!(perm.len(), self.len);
        let mut out = BitVec::zeros(self.len);
        for (k, &p) in perm.iter().enumerate() {
            if self.get(p) {
                out.set(k, true);
            }
        }
        out
    }

    fn clear_tail(&mut self) {
        let rem = self.len % WORD;
        if rem != 0 {
            if let Some(last) = self.words.last_mut() {
                *last &= (1u64 << rem) - 1;
            }
        }
    }
}

impl fmt::Debug for BitVec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "BitVec[{}]", self.to_bit_string())
    }
}

/// A dense binary matrix stored as packed rows.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct BitMatrix {
    rows: Vec<BitVec>,
    cols: usize,
}

impl BitMatrix {
    pub fn new(cols: usize) -> Self {
        Self { rows: Vec::new(), cols }
    }

    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self {
            rows: vec![BitVec::zeros(cols); rows],
            cols,
        }
    }

    pub fn identity(n: usize) -> Self {
        Self {
            rows: (0..n).map(|i| BitVec::unit(n, i)).collect(),
            cols: n,
        }
    }

    pub fn from_rows(rows: Vec<BitVec>, cols: usize) -> Self {
        assert!(rows.iter().all(|r| r.len() == cols), "row length mismatch");
        Self { rows, cols }
    }

    /// Parses rows given as slices of 0/1 values.
    pub fn from_bit_rows(rows: &[&[u8]]) -> Self {
        let cols = rows.first().map_or(0, |r| r.len());
        Self::from_rows(rows.iter().map(|r| BitVec::from_bits(r)).collect(), cols)
    }

    #[inline]
    pub fn nrows(&self) -> usize {
        self.rows.len()
    }

    #[inline]
    pub fn ncols(&self) -> usize {
        self.cols
    }

    #[inline]
    pub fn row(&self, i: usize) -> &BitVec {
        &self.rows[i]
    }

    pub fn rows(&self) -> &[BitVec] {
        &self.rows
    }

    pub fn into_rows(self) -> Vec<BitVec> {
        self.rows
    }

    pub fn push_row(&mut self, row: BitVec) {
        assert_eq!(row.len(), self.cols, "row length mismatch");
        self.rows.push(row);
    }

    pub fn get(&self, r: usize, c: usize) -> bool {
        self.rows[r].get(c)
    }

    pub fn set(&mut self, r: usize, c: usize, v: bool) {
        self.rows[r].set(c, v);
    }

    pub fn transpose(&self) -> BitMatrix {
        let mut t = BitMatrix::zeros(self.cols, self.nrows());
        for (r, row) in self.rows.iter().enumerate() {
            for c in row.ones_positions() {
                t.rows[c].set(r, true);
            }
        }
        t
    }

    /// Row vector times matrix: `v · self`.
    pub fn left_mul(&self, v: &BitVec) -> BitVec {
        assert_eq!(v.len(), self.nrows(), "vector length must equal row count");
        let mut out = BitVec::zeros(self.cols);
        for i in v.ones_positions() {
            out.xor_assign(&self.rows[i]);
        }
        out
    }

    /// Matrix product `self · other` over GF(2).
    pub fn mul(&self, other: &BitMatrix) -> BitMatrix {
        assert_eq!(self.cols, other.nrows(), "inner dimensions differ");
        BitMatrix {
            rows: self.rows.iter().map(|r| other.left_mul(r)).collect(),
            cols: other.cols,
        }
    }

    pub fn kron(&self, other: &BitMatrix) -> BitMatrix {
        let mut rows = Vec::with_capacity(self.nrows() * other.nrows());
        for a in &self.rows {
            for b in &other.rows {
                rows.push(a.kron(b));
            }
        }
        BitMatrix {
            rows,
            cols: self.cols * other.cols,
        }
    }

    /// Vertical concatenation.
    pub fn stack(&self, other: &BitMatrix) -> BitMatrix {
        assert_eq!(self.cols, other.cols, "column count mismatch");
        let mut rows = self.rows.clone();
        rows.extend(other.rows.iter().cloned());
        BitMatrix { rows, cols: self.cols }
    }

    /// Keeps only the listed columns, in the given order.
    pub fn select_columns(&self, cols: &[usize]) -> BitMatrix {
        BitMatrix {
            rows: self
                .rows
                .iter()
                .map(|r| BitVec::from_bools(cols.iter().map(|&c| r.get(c))))
                .collect(),
            cols: cols.len(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.rows.iter().all(BitVec::is_zero)
    }

    pub fn rank(&self) -> usize {
        let mut basis = EchelonBasis::new(self.cols);
        for r in &self.rows {
            basis.insert(r.clone());
        }
        basis.rank()
    }

    /// True when every row of `other` lies in the row space of `self`.
    pub fn row_space_contains(&self, other: &BitMatrix) -> bool {
        let mut basis = EchelonBasis::new(self.cols);
        for r in &self.rows {
            basis.insert(r.clone());
        }
        other.rows.iter().all(|r| basis.reduce(r).is_zero())
    }

    /// Row-space equality.
    pub fn same_row_space(&self, other: &BitMatrix) -> bool {
        self.cols == other.cols && self.rank() == other.rank() && self.row_space_contains(other)
    }

    /// Inverse of a square matrix, if it is nonsingular.
    pub fn inverse(&self) -> Option<BitMatrix> {
        let n = self.nrows();
        assert_eq!(n, self.cols, "inverse of a non-square matrix");
        let solver = RowSolver::new(self);
        if solver.rank() != n {
            return None;
        }
        let rows = (0..n)
            .map(|i| solver.solve(&BitVec::unit(n, i)).expect("full rank"))
            .collect();
        Some(BitMatrix { rows, cols: n })
    }
}

/// Incrementally built row-echelon basis, keyed by pivot column.
#[derive(Clone, Debug)]
pub struct EchelonBasis {
    /// `pivots[c]` holds the basis vector whose lowest set bit is `c`.
    pivots: Vec<Option<BitVec>>,
    rank: usize,
}

impl EchelonBasis {
    pub fn new(cols: usize) -> Self {
        Self {
            pivots: vec![None; cols],
            rank: 0,
        }
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    /// Reduces `v` against the basis; the result is zero iff `v` is in the span,
    /// and otherwise has no set bit in any pivot column.
    pub fn reduce(&self, v: &BitVec) -> BitVec {
        let mut r = v.clone();
        let mut from = 0;
        while let Some(p) = r.next_one(from) {
            if let Some(b) = &self.pivots[p] {
                r.xor_assign(b);
            }
            from = p + 1;
        }
        r
    }

    /// Inserts `v`; returns `true` if the rank grew.
    pub fn insert(&mut self, v: BitVec) -> bool {
        let r = self.reduce(&v);
        match r.first_one() {
            Some(p) => {
                self.pivots[p] = Some(r);
                self.rank += 1;
                true
            }
            None => false,
        }
    }
}

/// Gaussian elimination on the rows of a generator, tracking which original
/// rows combine into each reduced row. Answers "which combination of the
/// rows equals this vector?".
#[derive(Clone, Debug)]
pub struct RowSolver {
    nrows: usize,
    /// Pivot column to (reduced row, combination of original rows).
    pivots: Vec<Option<(BitVec, BitVec)>>,
    rank: usize,
}

impl RowSolver {
    pub fn new(m: &BitMatrix) -> Self {
        let nrows = m.nrows();
        let mut pivots: Vec<Option<(BitVec, BitVec)>> = vec![None; m.ncols()];
        let mut rank = 0;
        for (i, row) in m.rows().iter().enumerate() {
            let mut r = row.clone();
            let mut comb = BitVec::unit(nrows, i);
            while let Some(p) = r.first_one() {
                match &pivots[p] {
                    Some((pr, pc)) => {
                        r.xor_assign(pr);
                        comb.xor_assign(pc);
                    }
                    None => break,
                }
            }
            if let Some(p) = r.first_one() {
                pivots[p] = Some((r, comb));
                rank += 1;
            }
        }
        Self { nrows, pivots, rank }
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    /// Returns coefficients `c` with `c · M = v`, or `None` if `v` is not in
    /// the row space. Unique when `M` has independent rows.
    pub fn solve(&self, v: &BitVec) -> Option<BitVec> {
        let mut r = v.clone();
        let mut comb = BitVec::zeros(self.nrows);
        while let Some(p) = r.first_one() {
            match &self.pivots[p] {
                Some((pr, pc)) => {
                    r.xor_assign(pr);
                    comb.xor_assign(pc);
                }
                None => return None,
            }
        }
        Some(comb)
    }
}
