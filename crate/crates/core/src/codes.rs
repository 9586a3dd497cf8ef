//! Abelian and BiD code construction.
//!
//! A code `A(m, W)` is the set of binary vectors of length `3^m` whose DFT
//! vanishes at every index `j` with trit weight outside `W`. It has three
//! equivalent descriptions here:
//!
//! * spectral membership ([`spectral_membership`]),
//! * rows of the Kronecker power of a 3×3 kernel chosen by Hamming weight
//!   ([`abelian_generator`], [`bid_generator`]),
//! * inverse-DFT rows `ρ_{m,j}` with support `{i : i·j ≠ 1}` ([`idft_generator`]).

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;
use std::sync::OnceLock;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::field::{dft_fast, pow3, trit_weight, TritTuple};
use crate::gf2::{BitMatrix, BitVec, RowSolver};

/// The two 3×3 kernels whose Kronecker powers generate BiD codes.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Kernel {
    /// `[1 1 1; 1 1 0; 1 0 1]`
    #[serde(rename = "A3")]
    A3,
    /// `[1 1 0; 1 0 1; 1 1 1]`, the kernel the SC decoder is written for.
    #[serde(rename = "A3p")]
    A3Prime,
}

impl Kernel {
    pub const fn rows(self) -> [[u8; 3]; 3] {
        match self {
            Kernel::A3 => [[1, 1, 1], [1, 1, 0], [1, 0, 1]],
            Kernel::A3Prime => [[1, 1, 0], [1, 0, 1], [1, 1, 1]],
        }
    }

    pub fn matrix(self) -> BitMatrix {
        let rows = self.rows();
        BitMatrix::from_bit_rows(&[&rows[0], &rows[1], &rows[2]])
    }

    /// Index of the all-ones (weight 3) row.
    pub const fn heavy_row(self) -> usize {
        match self {
            Kernel::A3 => 0,
            Kernel::A3Prime => 2,
        }
    }

    pub const fn name(self) -> &'static str {
        match self {
            Kernel::A3 => "A3",
            Kernel::A3Prime => "A3p",
        }
    }

    /// Weight class of row `row` of the `m`-fold power: the number of
    /// Kronecker factors that are a weight-2 kernel row.
    pub fn row_class(self, row: usize, m: usize) -> usize {
        let mut r = row;
        let mut w = 0;
        for _ in 0..m {
            if r % 3 != self.heavy_row() {
                w += 1;
            }
            r /= 3;
        }
        w
    }
}

impl fmt::Display for Kernel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Kernel {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "A3" | "a3" => Ok(Kernel::A3),
            "A3p" | "a3p" | "A3'" | "A3prime" => Ok(Kernel::A3Prime),
            other => Err(Error::Parse(format!("unknown kernel '{other}' (expected A3 or A3p)"))),
        }
    }
}

/// A frequency weight set `W ⊆ {0, ..., m}`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct WeightSet {
    m: usize,
    mask: u64,
}

impl WeightSet {
    pub fn new<I: IntoIterator<Item = usize>>(m: usize, members: I) -> Result<Self> {
        if m > 62 {
            return Err(Error::InvalidParams(format!("m = {m} is too large")));
        }
        let mut mask = 0;
        for w in members {
            if w > m {
                return Err(Error::InvalidParams(format!("weight {w} exceeds m = {m}")));
            }
            mask |= 1 << w;
        }
        Ok(Self { m, mask })
    }

    /// `{r1, ..., r2}`.
    pub fn range(m: usize, r1: usize, r2: usize) -> Result<Self> {
        if r1 > r2 || r2 > m {
            return Err(Error::InvalidParams(format!(
                "need 0 <= r1 <= r2 <= m, got m={m}, r1={r1}, r2={r2}"
            )));
        }
        Self::new(m, r1..=r2)
    }

    pub fn empty(m: usize) -> Self {
        Self { m, mask: 0 }
    }

    pub fn full(m: usize) -> Self {
        Self::new(m, 0..=m).expect("valid")
    }

    /// Even weights in `{0..m}`.
    pub fn even(m: usize) -> Self {
        Self::new(m, (0..=m).filter(|w| w % 2 == 0)).expect("valid")
    }

    /// Odd weights in `{0..m}`.
    pub fn odd(m: usize) -> Self {
        Self::new(m, (0..=m).filter(|w| w % 2 == 1)).expect("valid")
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn contains(&self, w: usize) -> bool {
        w <= self.m && self.mask >> w & 1 == 1
    }

    pub fn len(&self) -> usize {
        self.mask.count_ones() as usize
    }

    pub fn is_empty(&self) -> bool {
        self.mask == 0
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        (0..=self.m).filter(move |&w| self.contains(w))
    }

    /// Complement in `{0..m}`; the weight set of the dual code.
    pub fn complement(&self) -> Self {
        let full = (1u64 << (self.m + 1)) - 1;
        Self {
            m: self.m,
            mask: !self.mask & full,
        }
    }

    pub fn intersection(&self, other: &WeightSet) -> Self {
        assert_eq!(self.m, other.m);
        Self {
            m: self.m,
            mask: self.mask & other.mask,
        }
    }

    pub fn union(&self, other: &WeightSet) -> Self {
        assert_eq!(self.m, other.m);
        Self {
            m: self.m,
            mask: self.mask | other.mask,
        }
    }

    pub fn is_subset(&self, other: &WeightSet) -> bool {
        self.mask & !other.mask == 0
    }

    /// `(r1, r2)` when the set is a nonempty run of consecutive integers.
    pub fn as_range(&self) -> Option<(usize, usize)> {
        if self.mask == 0 {
            return None;
        }
        let lo = self.mask.trailing_zeros() as usize;
        let hi = 63 - self.mask.leading_zeros() as usize;
        let run = ((1u64 << (hi - lo + 1)) - 1) << lo;
        (run == self.mask).then_some((lo, hi))
    }
}

impl fmt::Display for WeightSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let items: Vec<String> = self.iter().map(|w| w.to_string()).collect();
        write!(f, "{{{}}}", items.join(","))
    }
}

/// `sum_{w in W} C(m, w) 2^w`.
pub fn dimension(m: usize, w: &WeightSet) -> usize {
    w.iter().map(|k| binomial(m, k) << k).sum()
}

pub fn dual_weight_set(w: &WeightSet) -> WeightSet {
    w.complement()
}

pub fn binomial(n: usize, k: usize) -> usize {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

/// Identity of a code: length exponent, weight set and the kernel used for
/// generator matrices and encoding.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct CodeSpec {
    pub m: usize,
    pub weight_set: WeightSet,
    pub kernel: Kernel,
}

impl CodeSpec {
    pub fn bid(m: usize, r1: usize, r2: usize, kernel: Kernel) -> Result<Self> {
        Ok(Self {
            m,
            weight_set: WeightSet::range(m, r1, r2)?,
            kernel,
        })
    }

    pub fn abelian(weight_set: WeightSet, kernel: Kernel) -> Self {
        Self {
            m: weight_set.m(),
            weight_set,
            kernel,
        }
    }

    pub fn length(&self) -> usize {
        pow3(self.m)
    }

    pub fn dimension(&self) -> usize {
        dimension(self.m, &self.weight_set)
    }

    pub fn rate(&self) -> f64 {
        self.dimension() as f64 / self.length() as f64
    }

    pub fn bid_params(&self) -> Option<(usize, usize)> {
        self.weight_set.as_range()
    }

    pub fn label(&self) -> String {
        match self.bid_params() {
            Some((r1, r2)) => format!("BiD({},{},{})", self.m, r1, r2),
            None => format!("A({},{})", self.m, self.weight_set),
        }
    }
}

/// Where a generator row came from.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum RowLabel {
    /// Row index in the kernel's Kronecker power.
    KernelRow(usize),
    /// Spectral index `j` of an inverse-DFT row.
    Spectral(usize),
    /// Codeword of the `k`-th unit message of an encoder.
    Message(usize),
}

/// Generator matrix with per-row provenance and weight class.
#[derive(Clone, Debug)]
pub struct GeneratorMatrix {
    m: usize,
    matrix: BitMatrix,
    labels: Vec<RowLabel>,
    classes: Option<Vec<usize>>,
    solver: OnceLock<RowSolver>,
}

impl GeneratorMatrix {
    fn new(m: usize, matrix: BitMatrix, labels: Vec<RowLabel>, classes: Vec<usize>) -> Self {
        Self {
            m,
            matrix,
            labels,
            classes: Some(classes),
            solver: OnceLock::new(),
        }
    }

    /// Wraps arbitrary rows (labelled as message rows, no weight classes).
    pub fn from_rows(m: usize, matrix: BitMatrix) -> Self {
        let labels = (0..matrix.nrows()).map(RowLabel::Message).collect();
        Self {
            m,
            matrix,
            labels,
            classes: None,
            solver: OnceLock::new(),
        }
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn matrix(&self) -> &BitMatrix {
        &self.matrix
    }

    pub fn rows(&self) -> &[BitVec] {
        self.matrix.rows()
    }

    pub fn labels(&self) -> &[RowLabel] {
        &self.labels
    }

    /// Weight class `w` of each row (the `W` element it belongs to), when
    /// the rows come from a kernel power or inverse DFT.
    pub fn classes(&self) -> Option<&[usize]> {
        self.classes.as_deref()
    }

    pub fn dimension(&self) -> usize {
        self.matrix.nrows()
    }

    pub fn length(&self) -> usize {
        self.matrix.ncols()
    }

    fn solver(&self) -> &RowSolver {
        self.solver.get_or_init(|| RowSolver::new(&self.matrix))
    }

    /// Coefficients `c` with `c · G = a`.
    pub fn solve(&self, a: &BitVec) -> Result<BitVec> {
        if a.len() != self.length() {
            return Err(Error::LengthMismatch {
                expected: self.length(),
                got: a.len(),
            });
        }
        self.solver().solve(a).ok_or(Error::NotInRowSpace)
    }

    pub fn encode(&self, coeffs: &BitVec) -> BitVec {
        self.matrix.left_mul(coeffs)
    }

    /// One `0`/`1` string per row.
    pub fn to_text(&self) -> String {
        let mut s = String::with_capacity(self.dimension() * (self.length() + 1));
        for r in self.rows() {
            s.push_str(&r.to_bit_string());
            s.push('\n');
        }
        s
    }
}

/// JSON document for exported generator matrices; rows are hex strings of
/// bytes holding bit `k` at byte `k/8`, bit position `k%8`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GeneratorExport {
    pub m: usize,
    pub r1: usize,
    pub r2: usize,
    pub kernel: Kernel,
    pub rows: Vec<String>,
}

impl GeneratorExport {
    pub fn from_generator(spec: &CodeSpec, g: &GeneratorMatrix) -> Result<Self> {
        let (r1, r2) = spec
            .bid_params()
            .ok_or_else(|| Error::InvalidParams("JSON export needs a contiguous weight set".into()))?;
        Ok(Self {
            m: spec.m,
            r1,
            r2,
            kernel: spec.kernel,
            rows: g.rows().iter().map(BitVec::to_hex).collect(),
        })
    }

    pub fn to_matrix(&self) -> Result<BitMatrix> {
        let n = pow3(self.m);
        let rows = self
            .rows
            .iter()
            .map(|r| BitVec::from_hex(r, n))
            .collect::<Result<Vec<_>>>()?;
        Ok(BitMatrix::from_rows(rows, n))
    }
}

/// Kronecker product of binary matrices.
pub fn kron(a: &BitMatrix, b: &BitMatrix) -> BitMatrix {
    a.kron(b)
}

/// The `m`-fold Kronecker power of the kernel, `3^m × 3^m`.
pub fn kernel_power(kernel: Kernel, m: usize) -> BitMatrix {
    let k = kernel.matrix();
    let mut acc = BitMatrix::identity(1);
    for _ in 0..m {
        acc = k.kron(&acc);
    }
    acc
}

fn check_m(m: usize) -> Result<()> {
    if m == 0 || m > 9 {
        return Err(Error::InvalidParams(format!("m must be in 1..=9, got {m}")));
    }
    Ok(())
}

/// `G_{m,w}`: rows of the kernel power with Hamming weight `2^w 3^(m-w)`,
/// in increasing kernel-power row order.
pub fn submatrix_by_weight(m: usize, w: usize, kernel: Kernel) -> Result<GeneratorMatrix> {
    abelian_generator(m, &WeightSet::new(m, [w])?, kernel)
}

/// Generator of `A(m, W)`: the classes `G_{m,w}` for `w` in `W`, stacked in
/// increasing `w`.
pub fn abelian_generator(m: usize, w: &WeightSet, kernel: Kernel) -> Result<GeneratorMatrix> {
    check_m(m)?;
    if w.m() != m {
        return Err(Error::InvalidParams(format!(
            "weight set built for m={}, code has m={m}",
            w.m()
        )));
    }
    let power = kernel_power(kernel, m);
    let mut by_class: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
    for r in 0..power.nrows() {
        let c = kernel.row_class(r, m);
        if w.contains(c) {
            by_class.entry(c).or_default().push(r);
        }
    }
    let mut rows = Vec::new();
    let mut labels = Vec::new();
    let mut classes = Vec::new();
    for (c, idxs) in by_class {
        for r in idxs {
            debug_assert_eq!(power.row(r).weight(), (1 << c) * pow3(m - c));
            rows.push(power.row(r).clone());
            labels.push(RowLabel::KernelRow(r));
            classes.push(c);
        }
    }
    Ok(GeneratorMatrix::new(
        m,
        BitMatrix::from_rows(rows, pow3(m)),
        labels,
        classes,
    ))
}

/// Generator of a BiD code (contiguous weight set only).
pub fn bid_generator(spec: &CodeSpec) -> Result<GeneratorMatrix> {
    if spec.bid_params().is_none() {
        return Err(Error::InvalidParams(format!(
            "weight set {} is not contiguous; use abelian_generator",
            spec.weight_set
        )));
    }
    abelian_generator(spec.m, &spec.weight_set, spec.kernel)
}

/// `ρ_{m,j}`: bit `i` is set iff `i·j ≠ 1` over `Z_3`.
pub fn idft_generator_row(m: usize, j: &TritTuple) -> Result<BitVec> {
    if j.m() != m {
        return Err(Error::LengthMismatch {
            expected: m,
            got: j.m(),
        });
    }
    let n = pow3(m);
    let jj = j.to_index();
    Ok(BitVec::from_bools(
        (0..n).map(|i| crate::field::trit_dot_index(i, jj) != 1),
    ))
}

/// Inverse-DFT generator of `A(m, W)`: rows `ρ_{m,j}` for all `j` with
/// `wt(j) ∈ W`, grouped by weight then ordered by index.
pub fn idft_generator(m: usize, w: &WeightSet) -> Result<GeneratorMatrix> {
    check_m(m)?;
    let n = pow3(m);
    let mut rows = Vec::new();
    let mut labels = Vec::new();
    let mut classes = Vec::new();
    for c in w.iter() {
        for j in (0..n).filter(|&j| trit_weight(j) == c) {
            rows.push(idft_generator_row(m, &TritTuple::from_index(j, m)?)?);
            labels.push(RowLabel::Spectral(j));
            classes.push(c);
        }
    }
    Ok(GeneratorMatrix::new(m, BitMatrix::from_rows(rows, n), labels, classes))
}

/// True iff the DFT of `a` vanishes at every `j` with `wt(j) ∉ W`.
pub fn spectral_membership(a: &BitVec, w: &WeightSet) -> Result<bool> {
    let n = pow3(w.m());
    if a.len() != n {
        return Err(Error::LengthMismatch {
            expected: n,
            got: a.len(),
        });
    }
    let s = dft_fast(a)?;
    Ok(s.coeffs()
        .iter()
        .enumerate()
        .all(|(j, c)| c.is_zero() || w.contains(trit_weight(j))))
}

/// Splits a codeword into its components `a_w ∈ A(m, {w})`, one per weight
/// class of the generator. Components sum to `a`.
pub fn codeword_split(g: &GeneratorMatrix, a: &BitVec) -> Result<BTreeMap<usize, BitVec>> {
    let classes = g
        .classes()
        .ok_or_else(|| Error::InvalidParams("generator rows carry no weight classes".into()))?;
    let coeffs = g.solve(a)?;
    let mut parts: BTreeMap<usize, BitVec> = classes.iter().map(|&c| (c, BitVec::zeros(g.length()))).collect();
    for i in coeffs.ones_positions() {
        parts
            .get_mut(&classes[i])
            .expect("class present")
            .xor_assign(g.matrix().row(i));
    }
    Ok(parts)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn bid(m: usize, r1: usize, r2: usize) -> CodeSpec {
        CodeSpec::bid(m, r1, r2, Kernel::A3).unwrap()
    }

    #[test]
    fn kernels_are_invertible() {
        for k in [Kernel::A3, Kernel::A3Prime] {
            assert_eq!(k.matrix().rank(), 3);
            assert_eq!(k.matrix().row(k.heavy_row()).weight(), 3);
        }
    }

    #[test]
    fn kron_examples() {
        let one = BitMatrix::from_bit_rows(&[&[1]]);
        let b = Kernel::A3.matrix();
        assert_eq!(kron(&one, &b), b);
        let x = BitMatrix::from_bit_rows(&[&[1, 1, 0]]);
        let y = BitMatrix::from_bit_rows(&[&[1, 0, 1]]);
        assert_eq!(kron(&x, &y).row(0).to_bits(), vec![1, 0, 1, 1, 0, 1, 0, 0, 0]);
    }

    #[test]
    fn kernel_power_weight_profile() {
        assert_eq!(kernel_power(Kernel::A3, 1), Kernel::A3.matrix());
        let p = kernel_power(Kernel::A3, 2);
        let mut weights: Vec<usize> = p.rows().iter().map(BitVec::weight).collect();
        weights.sort_unstable();
        assert_eq!(weights, vec![4, 4, 4, 4, 6, 6, 6, 6, 9]);
        assert_eq!(p.rank(), 9);
    }

    #[test]
    fn kernel_power_rows_sum_to_first_unit_vector() {
        for m in 1..=6 {
            let p = kernel_power(Kernel::A3, m);
            let sum = p.left_mul(&BitVec::ones(p.nrows()));
            assert_eq!(sum, BitVec::unit(pow3(m), 0), "m = {m}");
        }
    }

    #[test]
    fn row_classes_agree_with_weights() {
        for k in [Kernel::A3, Kernel::A3Prime] {
            for m in 1..=4 {
                let p = kernel_power(k, m);
                for r in 0..p.nrows() {
                    let c = k.row_class(r, m);
                    assert_eq!(p.row(r).weight(), (1 << c) * pow3(m - c));
                }
            }
        }
        assert_eq!(Kernel::A3.row_class(0, 3), 0);
        assert_eq!(Kernel::A3Prime.row_class(0, 3), 3);
    }

    #[test]
    fn submatrix_counts() {
        let g10 = submatrix_by_weight(1, 0, Kernel::A3).unwrap();
        assert_eq!(g10.rows()[0].to_bits(), vec![1, 1, 1]);
        let g21 = submatrix_by_weight(2, 1, Kernel::A3).unwrap();
        assert_eq!(g21.dimension(), 4);
        assert!(g21.rows().iter().all(|r| r.weight() == 6));
    }

    #[test]
    fn bid_generator_dimensions() {
        assert_eq!(bid_generator(&bid(2, 1, 1)).unwrap().dimension(), 4);
        assert_eq!(bid_generator(&bid(5, 3, 4)).unwrap().dimension(), 160);
        let full = bid_generator(&bid(3, 0, 3)).unwrap();
        assert_eq!(full.dimension(), 27);
        assert_eq!(full.matrix().rank(), 27);
    }

    #[test]
    fn bid_generator_rejects_gaps() {
        let spec = CodeSpec::abelian(WeightSet::new(3, [0, 2]).unwrap(), Kernel::A3);
        assert!(bid_generator(&spec).is_err());
        assert_eq!(
            abelian_generator(3, &spec.weight_set, Kernel::A3).unwrap().dimension(),
            13
        );
    }

    #[test]
    fn trivial_and_full_weight_sets() {
        let empty = abelian_generator(3, &WeightSet::empty(3), Kernel::A3).unwrap();
        assert_eq!(empty.dimension(), 0);
        let full = abelian_generator(3, &WeightSet::full(3), Kernel::A3Prime).unwrap();
        assert_eq!(full.dimension(), 27);
        assert_eq!(
            abelian_generator(4, &WeightSet::even(4), Kernel::A3)
                .unwrap()
                .dimension(),
            41
        );
    }

    #[test]
    fn idft_rows() {
        assert_eq!(idft_generator_row(3, &TritTuple::zero(3)).unwrap(), BitVec::ones(27));
        let j = TritTuple::new(vec![1]).unwrap();
        assert_eq!(idft_generator_row(1, &j).unwrap().to_bits(), vec![1, 0, 1]);
        for m in 1..=4 {
            for jj in 1..pow3(m) {
                let r = idft_generator_row(m, &TritTuple::from_index(jj, m).unwrap()).unwrap();
                assert_eq!(r.weight(), 2 * pow3(m - 1));
            }
        }
    }

    #[test]
    fn spectral_membership_examples() {
        let w0 = WeightSet::new(1, [0]).unwrap();
        let w1 = WeightSet::new(1, [1]).unwrap();
        let ones = BitVec::ones(3);
        assert!(spectral_membership(&ones, &w0).unwrap());
        assert!(!spectral_membership(&ones, &w1).unwrap());
        assert!(spectral_membership(&BitVec::zeros(9), &WeightSet::empty(2)).unwrap());
        assert!(spectral_membership(&BitVec::zeros(4), &w0).is_err());
    }

    #[test]
    fn dimension_formula() {
        assert_eq!(dimension(5, &WeightSet::new(5, [2]).unwrap()), 40);
        assert_eq!(dimension(4, &WeightSet::range(4, 2, 3).unwrap()), 56);
        for m in 1..=8 {
            assert_eq!(dimension(m, &WeightSet::full(m)), pow3(m));
        }
    }

    #[test]
    fn weight_set_ops() {
        let w = WeightSet::range(5, 1, 3).unwrap();
        assert_eq!(w.as_range(), Some((1, 3)));
        assert_eq!(dual_weight_set(&w).iter().collect::<Vec<_>>(), vec![0, 4, 5]);
        assert_eq!(dual_weight_set(&w).as_range(), None);
        assert!(WeightSet::range(3, 2, 1).is_err());
        assert!(WeightSet::new(3, [4]).is_err());
        assert_eq!(w.to_string(), "{1,2,3}");
    }

    #[test]
    fn codeword_split_single_row() {
        let spec = bid(3, 1, 2);
        let g = bid_generator(&spec).unwrap();
        let row = g.rows()[0].clone();
        let parts = codeword_split(&g, &row).unwrap();
        assert_eq!(parts[&1], row);
        assert!(parts[&2].is_zero());
    }

    #[test]
    fn codeword_split_rejects_non_codewords() {
        let g = bid_generator(&bid(2, 1, 1)).unwrap();
        assert_eq!(codeword_split(&g, &BitVec::unit(9, 0)), Err(Error::NotInRowSpace));
    }

    #[test]
    fn json_export_round_trip() {
        let spec = bid(2, 1, 2);
        let g = bid_generator(&spec).unwrap();
        let doc = GeneratorExport::from_generator(&spec, &g).unwrap();
        let text = serde_json::to_string(&doc).unwrap();
        assert!(text.contains("\"kernel\":\"A3\""));
        let back: GeneratorExport = serde_json::from_str(&text).unwrap();
        assert_eq!(back.to_matrix().unwrap(), *g.matrix());
    }

    #[test]
    fn text_export_layout() {
        let g = submatrix_by_weight(1, 1, Kernel::A3).unwrap();
        assert_eq!(g.to_text(), "110\n101\n");
    }
}
