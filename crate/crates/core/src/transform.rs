//! Polar-style encoding with the ternary kernels.
//!
//! The transform is `G'_N = B_N K^{⊗m}` where `B_N` reverses the base-3
//! expansion of indices. Input bit `i` is frozen when row `i` of `G'_N` has a
//! Hamming weight outside `[2^r2 3^(m-r2), 2^r1 3^(m-r1)]`. With dynamic
//! freezing the input is `u = v T` for a seeded unit upper-triangular `T`,
//! so each frozen `u_i` is a parity of earlier bits.

use rand::{RngCore, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::codes::{CodeSpec, GeneratorMatrix, Kernel};
use crate::error::{Error, Result};
use crate::field::pow3;
use crate::gf2::{BitMatrix, BitVec};

/// Identifier of the pre-transform bit generator, stored in configs.
pub const RNG_NAME: &str = "chacha8-stream-v1";

/// Index permutation reversing the trit expansion; an involution.
pub fn trit_reversal_perm(m: usize) -> Vec<usize> {
    (0..pow3(m))
        .map(|mut i| {
            let mut r = 0;
            for _ in 0..m {
                r = 3 * r + i % 3;
                i /= 3;
            }
            r
        })
        .collect()
}

fn kernel_inverse(kernel: Kernel) -> [[u8; 3]; 3] {
    let inv = kernel.matrix().inverse().expect("kernels are invertible");
    let mut out = [[0u8; 3]; 3];
    for (r, row) in out.iter_mut().enumerate() {
        for (c, v) in row.iter_mut().enumerate() {
            *v = inv.get(r, c) as u8;
        }
    }
    out
}

/// In place `v <- v K^{⊗m}` using one 3-point butterfly per digit.
pub(crate) fn kron_butterfly(v: &mut [u8], k: &[[u8; 3]; 3]) {
    let n = v.len();
    let mut stride = 1;
    while stride < n {
        for block in (0..n).step_by(3 * stride) {
            for i in block..block + stride {
                let a = [v[i], v[i + stride], v[i + 2 * stride]];
                for c in 0..3 {
                    v[i + c * stride] = (a[0] & k[0][c]) ^ (a[1] & k[1][c]) ^ (a[2] & k[2][c]);
                }
            }
        }
        stride *= 3;
    }
}

fn check_len(v: &BitVec, m: usize) -> Result<()> {
    if v.len() != pow3(m) {
        return Err(Error::LengthMismatch {
            expected: pow3(m),
            got: v.len(),
        });
    }
    Ok(())
}

/// `x = u G'_N` by butterflies followed by the trit reversal.
pub fn polar_transform(u: &BitVec, kernel: Kernel, m: usize) -> Result<BitVec> {
    check_len(u, m)?;
    let mut w = u.to_bits();
    kron_butterfly(&mut w, &kernel.rows());
    Ok(BitVec::from_bits(&w).permuted(&trit_reversal_perm(m)))
}

/// `G'_N` as an explicit matrix.
pub fn polar_matrix(kernel: Kernel, m: usize) -> BitMatrix {
    let power = crate::codes::kernel_power(kernel, m);
    let perm = trit_reversal_perm(m);
    let rows = perm.iter().map(|&r| power.row(r).clone()).collect();
    BitMatrix::from_rows(rows, pow3(m))
}

/// `x = u G'_N` by an explicit matrix product.
pub fn polar_transform_matrix(u: &BitVec, kernel: Kernel, m: usize) -> Result<BitVec> {
    check_len(u, m)?;
    Ok(polar_matrix(kernel, m).left_mul(u))
}

/// Inverse of [`polar_transform`].
pub fn polar_inverse(x: &BitVec, kernel: Kernel, m: usize) -> Result<BitVec> {
    check_len(x, m)?;
    let mut w = x.permuted(&trit_reversal_perm(m)).to_bits();
    kron_butterfly(&mut w, &kernel_inverse(kernel));
    Ok(BitVec::from_bits(&w))
}

/// Frozen positions of a BiD code in SC input order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FrozenSpec {
    pub m: usize,
    pub r1: usize,
    pub r2: usize,
    pub kernel: Kernel,
    frozen: Vec<bool>,
}

impl FrozenSpec {
    pub fn frozen(&self) -> &[bool] {
        &self.frozen
    }

    pub fn is_frozen(&self, i: usize) -> bool {
        self.frozen[i]
    }

    pub fn len(&self) -> usize {
        self.frozen.len()
    }

    pub fn is_empty(&self) -> bool {
        self.frozen.is_empty()
    }

    /// Unfrozen positions in increasing order.
    pub fn info_positions(&self) -> Vec<usize> {
        (0..self.frozen.len()).filter(|&i| !self.frozen[i]).collect()
    }

    pub fn dimension(&self) -> usize {
        self.frozen.iter().filter(|&&f| !f).count()
    }
}

/// Row `i` of `G'_N` has the weight of row `i` of `K^{⊗m}`: the digit
/// reversal preserves how many factors are light rows.
pub fn frozen_spec(m: usize, r1: usize, r2: usize, kernel: Kernel) -> Result<FrozenSpec> {
    let spec = CodeSpec::bid(m, r1, r2, kernel)?;
    let frozen = (0..pow3(m))
        .map(|i| !spec.weight_set.contains(kernel.row_class(i, m)))
        .collect();
    Ok(FrozenSpec {
        m,
        r1,
        r2,
        kernel,
        frozen,
    })
}

/// Row `i` of the pre-transform: zero left of the diagonal, one on it, and
/// uniform bits to the right drawn from a ChaCha8 stream selected by `i`.
pub fn pretransform_row(seed: u64, i: usize, n: usize) -> BitVec {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(i as u64);
    let nwords = n.div_ceil(64);
    let mut words: Vec<u64> = (0..nwords).map(|_| rng.next_u64()).collect();
    let (w, b) = (i / 64, i % 64);
    for x in &mut words[..w] {
        *x = 0;
    }
    words[w] &= !((1u64 << b) - 1);
    words[w] |= 1 << b;
    BitVec::from_words(words, n)
}

/// The upper-triangular pre-transform `T`, materialized row by row.
#[derive(Clone, Debug)]
pub struct PreTransform {
    seed: u64,
    rows: Vec<BitVec>,
}

impl PreTransform {
    pub fn new(seed: u64, n: usize) -> Self {
        Self {
            seed,
            rows: (0..n).map(|i| pretransform_row(seed, i, n)).collect(),
        }
    }

    pub fn seed(&self) -> u64 {
        self.seed
    }

    pub fn row(&self, i: usize) -> &BitVec {
        &self.rows[i]
    }

    pub fn len(&self) -> usize {
        self.rows.len()
    }

    pub fn is_empty(&self) -> bool {
        self.rows.is_empty()
    }

    /// `u = v T`.
    pub fn apply(&self, v: &BitVec) -> BitVec {
        let mut u = BitVec::zeros(self.rows.len());
        for j in v.ones_positions() {
            u.xor_assign(&self.rows[j]);
        }
        u
    }

    /// `v = u T^{-1}` by forward substitution.
    pub fn invert(&self, u: &BitVec) -> BitVec {
        let n = self.rows.len();
        let mut acc = BitVec::zeros(n);
        let mut v = BitVec::zeros(n);
        for i in 0..n {
            if u.get(i) != acc.get(i) {
                v.set(i, true);
                acc.xor_assign(&self.rows[i]);
            }
        }
        v
    }
}

/// Kernel used by the dynamic-freezing recipe for erasure channels.
pub fn default_dynamic_kernel(r1: usize) -> Kernel {
    if r1 <= 2 {
        Kernel::A3
    } else {
        Kernel::A3Prime
    }
}

fn default_rng() -> String {
    RNG_NAME.to_string()
}

/// Serialized code configuration.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct EncoderConfig {
    pub m: usize,
    pub r1: usize,
    pub r2: usize,
    pub kernel: Kernel,
    #[serde(default)]
    pub dynamic: bool,
    #[serde(default)]
    pub seed: u64,
    #[serde(default = "default_rng")]
    pub rng: String,
}

impl EncoderConfig {
    pub fn new(m: usize, r1: usize, r2: usize, kernel: Kernel) -> Self {
        Self {
            m,
            r1,
            r2,
            kernel,
            dynamic: false,
            seed: 0,
            rng: default_rng(),
        }
    }

    pub fn dynamic(mut self, seed: u64) -> Self {
        self.dynamic = true;
        self.seed = seed;
        self
    }

    pub fn from_json(s: &str) -> Result<Self> {
        serde_json::from_str(s).map_err(|e| Error::Parse(e.to_string()))
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("serializable")
    }
}

/// A ready-to-use encoder: frozen set plus optional pre-transform.
#[derive(Clone, Debug)]
pub struct Encoder {
    config: EncoderConfig,
    spec: CodeSpec,
    frozen: FrozenSpec,
    info: Vec<usize>,
    pre: Option<PreTransform>,
}

impl Encoder {
    pub fn new(config: EncoderConfig) -> Result<Self> {
        if config.rng != RNG_NAME {
            return Err(Error::InvalidParams(format!(
                "unsupported rng '{}' (this build provides '{RNG_NAME}')",
                config.rng
            )));
        }
        let spec = CodeSpec::bid(config.m, config.r1, config.r2, config.kernel)?;
        let frozen = frozen_spec(config.m, config.r1, config.r2, config.kernel)?;
        let pre = config.dynamic.then(|| PreTransform::new(config.seed, spec.length()));
        Ok(Self {
            info: frozen.info_positions(),
            config,
            spec,
            frozen,
            pre,
        })
    }

    pub fn config(&self) -> &EncoderConfig {
        &self.config
    }

    pub fn spec(&self) -> &CodeSpec {
        &self.spec
    }

    pub fn frozen(&self) -> &FrozenSpec {
        &self.frozen
    }

    pub fn pretransform(&self) -> Option<&PreTransform> {
        self.pre.as_ref()
    }

    pub fn length(&self) -> usize {
        self.spec.length()
    }

    pub fn dimension(&self) -> usize {
        self.info.len()
    }

    pub fn label(&self) -> String {
        let base = self.spec.label();
        if self.config.dynamic {
            format!("d{base}")
        } else {
            base
        }
    }

    /// Places message bits on the unfrozen positions.
    pub fn embed(&self, message: &BitVec) -> Result<BitVec> {
        if message.len() != self.dimension() {
            return Err(Error::LengthMismatch {
                expected: self.dimension(),
                got: message.len(),
            });
        }
        let mut v = BitVec::zeros(self.length());
        for (k, &i) in self.info.iter().enumerate() {
            v.set(i, message.get(k));
        }
        Ok(v)
    }

    /// Returns `(u, x)`.
    pub fn encode(&self, message: &BitVec) -> Result<(BitVec, BitVec)> {
        let v = self.embed(message)?;
        let u = match &self.pre {
            Some(t) => t.apply(&v),
            None => v,
        };
        let x = polar_transform(&u, self.config.kernel, self.config.m)?;
        Ok((u, x))
    }

    /// Message carried by transform input `u`; fails if `u` violates the
    /// frozen constraints.
    pub fn message_from_u(&self, u: &BitVec) -> Result<BitVec> {
        let v = match &self.pre {
            Some(t) => t.invert(u),
            None => u.clone(),
        };
        if v.ones_positions().any(|i| self.frozen.is_frozen(i)) {
            return Err(Error::NotInRowSpace);
        }
        Ok(BitVec::from_bools(self.info.iter().map(|&i| v.get(i))))
    }

    pub fn message_from_codeword(&self, x: &BitVec) -> Result<BitVec> {
        let u = polar_inverse(x, self.config.kernel, self.config.m)?;
        self.message_from_u(&u)
    }

    /// Generator whose row `k` is the codeword of the `k`-th unit message.
    pub fn generator_matrix(&self) -> GeneratorMatrix {
        let n = self.length();
        let rows: Vec<BitVec> = self
            .info
            .iter()
            .map(|&i| {
                let u = match &self.pre {
                    Some(t) => t.row(i).clone(),
                    None => BitVec::unit(n, i),
                };
                polar_transform(&u, self.config.kernel, self.config.m).expect("length checked")
            })
            .collect();
        GeneratorMatrix::from_rows(self.config.m, BitMatrix::from_rows(rows, n))
    }
}
