//! GF(4) arithmetic, base-3 coordinate indexing and the `m`-dimensional DFT
//! that maps binary vectors of length `3^m` to GF(4) spectra.
//!
//! Coordinates of a length-`3^m` vector are indexed by trit tuples
//! `(i_1, ..., i_m)`; the linear index is `sum i_l * 3^(l-1)`, so digit 1 is
//! the least significant.

use std::fmt;
use std::ops::{Add, Mul};

use crate::error::{Error, Result};
use crate::gf2::BitVec;

/// `3^m`.
#[inline]
pub const fn pow3(m: usize) -> usize {
    let mut n = 1;
    let mut i = 0;
    while i < m {
        n *= 3;
        i += 1;
    }
    n
}

/// Returns `m` when `len == 3^m`.
pub fn length_exponent(len: usize) -> Option<usize> {
    let mut m = 0;
    let mut n = 1;
    while n < len {
        n *= 3;
        m += 1;
    }
    (n == len).then_some(m)
}

/// An element of GF(4) in the polynomial basis `{1, α}` with `α² = α + 1`.
/// Bit 0 is the coefficient of 1, bit 1 the coefficient of α.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct F4(u8);

const MUL: [[u8; 4]; 4] = [[0, 0, 0, 0], [0, 1, 2, 3], [0, 2, 3, 1], [0, 3, 1, 2]];

impl F4 {
    pub const ZERO: F4 = F4(0);
    pub const ONE: F4 = F4(1);
    pub const ALPHA: F4 = F4(2);
    pub const ALPHA2: F4 = F4(3);

    pub fn new(bits: u8) -> Self {
        assert!(bits < 4, "GF(4) element out of range");
        F4(bits)
    }

    pub fn bits(self) -> u8 {
        self.0
    }

    pub fn is_zero(self) -> bool {
        self.0 == 0
    }

    /// `α^k` for any integer exponent (the multiplicative group has order 3).
    pub fn alpha_pow(k: usize) -> F4 {
        [F4::ONE, F4::ALPHA, F4::ALPHA2][k % 3]
    }

    pub fn all() -> [F4; 4] {
        [F4::ZERO, F4::ONE, F4::ALPHA, F4::ALPHA2]
    }
}

// Characteristic 2: addition is XOR of the coordinate bits.
#[allow(clippy::suspicious_arithmetic_impl)]
impl Add for F4 {
    type Output = F4;
    #[inline]
    fn add(self, rhs: F4) -> F4 {
        F4(self.0 ^ rhs.0)
    }
}

impl Mul for F4 {
    type Output = F4;
    #[inline]
    fn mul(self, rhs: F4) -> F4 {
        F4(MUL[self.0 as usize][rhs.0 as usize])
    }
}

pub fn f4_add(x: F4, y: F4) -> F4 {
    x + y
}

pub fn f4_mul(x: F4, y: F4) -> F4 {
    x * y
}

impl fmt::Debug for F4 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = ["0", "1", "a", "a^2"][self.0 as usize];
        f.write_str(s)
    }
}

/// An element of `Z_3^m`, least significant digit first.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct TritTuple {
    digits: Vec<u8>,
}

impl TritTuple {
    pub fn new(digits: Vec<u8>) -> Result<Self> {
        if let Some(&d) = digits.iter().find(|&&d| d > 2) {
            return Err(Error::InvalidParams(format!("trit digit {d} is not in Z3")));
        }
        Ok(Self { digits })
    }

    pub fn zero(m: usize) -> Self {
        Self { digits: vec![0; m] }
    }

    pub fn from_index(idx: usize, m: usize) -> Result<Self> {
        let n = pow3(m);
        if idx >= n {
            return Err(Error::IndexOutOfRange { index: idx, len: n });
        }
        let mut digits = Vec::with_capacity(m);
        let mut rest = idx;
        for _ in 0..m {
            digits.push((rest % 3) as u8);
            rest /= 3;
        }
        Ok(Self { digits })
    }

    pub fn to_index(&self) -> usize {
        self.digits.iter().rev().fold(0, |acc, &d| acc * 3 + d as usize)
    }

    pub fn m(&self) -> usize {
        self.digits.len()
    }

    pub fn digits(&self) -> &[u8] {
        &self.digits
    }

    /// Number of nonzero digits.
    pub fn weight(&self) -> usize {
        self.digits.iter().filter(|&&d| d != 0).count()
    }

    /// `sum i_l j_l mod 3`.
    pub fn dot(&self, other: &TritTuple) -> Result<u8> {
        if self.m() != other.m() {
            return Err(Error::LengthMismatch {
                expected: self.m(),
                got: other.m(),
            });
        }
        let s: usize = self
            .digits
            .iter()
            .zip(&other.digits)
            .map(|(&a, &b)| a as usize * b as usize)
            .sum();
        Ok((s % 3) as u8)
    }

    /// Digit-wise scaling by an element of `Z_3`.
    pub fn scale(&self, c: u8) -> TritTuple {
        TritTuple {
            digits: self.digits.iter().map(|&d| (d * c) % 3).collect(),
        }
    }

    /// The tuple with its digit order reversed.
    pub fn reversed(&self) -> TritTuple {
        TritTuple {
            digits: self.digits.iter().rev().copied().collect(),
        }
    }
}

pub fn trit_dot(i: &TritTuple, j: &TritTuple) -> Result<u8> {
    i.dot(j)
}

pub fn index_to_trits(idx: usize, m: usize) -> Result<TritTuple> {
    TritTuple::from_index(idx, m)
}

pub fn trits_to_index(t: &TritTuple) -> usize {
    t.to_index()
}

/// Trit weight of the linear index `idx`.
pub fn trit_weight(mut idx: usize) -> usize {
    let mut w = 0;
    while idx > 0 {
        if !idx.is_multiple_of(3) {
            w += 1;
        }
        idx /= 3;
    }
    w
}

/// `(sum i_l j_l) mod 3` on linear indices of the same length `3^m`.
pub fn trit_dot_index(mut i: usize, mut j: usize) -> u8 {
    let mut s = 0;
    while i > 0 && j > 0 {
        s += (i % 3) * (j % 3);
        i /= 3;
        j /= 3;
    }
    (s % 3) as u8
}

/// A length-`3^m` vector over GF(4), indexed like the binary vectors.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SpectrumVector {
    coeffs: Vec<F4>,
}

impl SpectrumVector {
    pub fn new(coeffs: Vec<F4>) -> Result<Self> {
        length_exponent(coeffs.len())
            .ok_or_else(|| Error::InvalidParams(format!("spectrum length {} is not a power of 3", coeffs.len())))?;
        Ok(Self { coeffs })
    }

    pub fn coeffs(&self) -> &[F4] {
        &self.coeffs
    }

    pub fn get(&self, j: usize) -> F4 {
        self.coeffs[j]
    }

    pub fn len(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coeffs.is_empty()
    }
}

fn check_length(a: &BitVec) -> Result<usize> {
    length_exponent(a.len())
        .ok_or_else(|| Error::InvalidParams(format!("vector length {} is not a power of 3", a.len())))
}

/// Direct evaluation `â_j = sum_{i in supp(a)} α^(i·j)`.
pub fn dft(a: &BitVec) -> Result<SpectrumVector> {
    check_length(a)?;
    let n = a.len();
    let support: Vec<usize> = a.ones_positions().collect();
    let coeffs = (0..n)
        .map(|j| {
            support
                .iter()
                .fold(F4::ZERO, |acc, &i| acc + F4::alpha_pow(trit_dot_index(i, j) as usize))
        })
        .collect();
    Ok(SpectrumVector { coeffs })
}

/// Radix-3 evaluation of the same transform: one length-3 DFT per digit.
pub fn dft_fast(a: &BitVec) -> Result<SpectrumVector> {
    let m = check_length(a)?;
    let n = a.len();
    let mut x: Vec<F4> = a.iter().map(|b| if b { F4::ONE } else { F4::ZERO }).collect();
    let mut stride = 1;
    for _ in 0..m {
        for block in (0..n).step_by(3 * stride) {
            for off in 0..stride {
                let i0 = block + off;
                let (x0, x1, x2) = (x[i0], x[i0 + stride], x[i0 + 2 * stride]);
                for j in 0..3 {
                    x[i0 + j * stride] = x0 + x1 * F4::alpha_pow(j) + x2 * F4::alpha_pow(2 * j);
                }
            }
        }
        stride *= 3;
    }
    Ok(SpectrumVector { coeffs: x })
}

/// Binary Hamming weight.
pub fn hamming_weight(a: &BitVec) -> usize {
    a.weight()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn spectrum(v: &[F4]) -> SpectrumVector {
        SpectrumVector::new(v.to_vec()).unwrap()
    }

    #[test]
    fn field_axioms_exhaustive() {
        for x in F4::all() {
            assert_eq!(x + x, F4::ZERO);
            assert_eq!(x * F4::ONE, x);
            for y in F4::all() {
                assert_eq!(x + y, y + x);
                assert_eq!(x * y, y * x);
                for z in F4::all() {
                    assert_eq!(x * (y + z), x * y + x * z);
                    assert_eq!((x * y) * z, x * (y * z));
                }
            }
            if !x.is_zero() {
                assert!(F4::all().iter().any(|&y| x * y == F4::ONE));
            }
        }
    }

    #[test]
    fn alpha_relations() {
        assert_eq!(f4_add(F4::ALPHA, F4::ALPHA), F4::ZERO);
        assert_eq!(f4_mul(F4::ALPHA, F4::ALPHA), F4::ALPHA2);
        assert_eq!(F4::ALPHA2, F4::ALPHA + F4::ONE);
        assert_eq!(f4_mul(F4::ALPHA2, F4::ALPHA), F4::ONE);
    }

    #[test]
    fn trit_dot_examples() {
        let z = TritTuple::zero(3);
        let j = TritTuple::new(vec![2, 1, 2]).unwrap();
        assert_eq!(trit_dot(&z, &j).unwrap(), 0);
        let a = TritTuple::new(vec![1, 2]).unwrap();
        let b = TritTuple::new(vec![2, 2]).unwrap();
        assert_eq!(trit_dot(&a, &b).unwrap(), 0);
        let c = TritTuple::new(vec![2]).unwrap();
        assert_eq!(trit_dot(&c, &c).unwrap(), 1);
        assert!(trit_dot(&a, &c).is_err());
        assert!(TritTuple::new(vec![3]).is_err());
    }

    #[test]
    fn index_conversion() {
        assert_eq!(index_to_trits(0, 4).unwrap().digits(), &[0, 0, 0, 0]);
        assert_eq!(index_to_trits(5, 2).unwrap().digits(), &[2, 1]);
        assert!(index_to_trits(9, 2).is_err());
        for m in 1..=6 {
            for k in 0..pow3(m) {
                let t = index_to_trits(k, m).unwrap();
                assert_eq!(trits_to_index(&t), k);
                assert_eq!(t.weight(), trit_weight(k));
            }
        }
    }

    #[test]
    fn index_dot_matches_tuple_dot() {
        let m = 3;
        for i in 0..pow3(m) {
            for j in 0..pow3(m) {
                let ti = TritTuple::from_index(i, m).unwrap();
                let tj = TritTuple::from_index(j, m).unwrap();
                assert_eq!(trit_dot_index(i, j), ti.dot(&tj).unwrap());
            }
        }
    }

    #[test]
    fn dft_hand_examples() {
        let ones = BitVec::from_bits(&[1, 1, 1]);
        assert_eq!(dft(&ones).unwrap(), spectrum(&[F4::ONE, F4::ZERO, F4::ZERO]));
        let impulse = BitVec::from_bits(&[1, 0, 0]);
        assert_eq!(dft(&impulse).unwrap(), spectrum(&[F4::ONE; 3]));
        let pair = BitVec::from_bits(&[1, 1, 0]);
        assert_eq!(dft(&pair).unwrap(), spectrum(&[F4::ZERO, F4::ALPHA2, F4::ALPHA]));
    }

    #[test]
    fn dft_rejects_bad_length() {
        assert!(dft(&BitVec::zeros(4)).is_err());
        assert!(dft_fast(&BitVec::zeros(10)).is_err());
    }

    #[test]
    fn impulse_has_flat_spectrum() {
        for m in 1..=4 {
            let e1 = BitVec::unit(pow3(m), 0);
            let s = dft_fast(&e1).unwrap();
            assert!(s.coeffs().iter().all(|&c| c == F4::ONE));
        }
    }

    #[test]
    fn length_exponent_detects_powers() {
        assert_eq!(length_exponent(1), Some(0));
        assert_eq!(length_exponent(243), Some(5));
        assert_eq!(length_exponent(244), None);
    }
}
