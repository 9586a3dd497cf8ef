//! Successive cancellation decoding for the `A3'` kernel, an ordered search
//! on top of it, and exact ML decoding on the erasure channel.
//!
//! LLRs are positive when bit 0 is more likely. The SC recursion works on
//! `w = u K^{⊗m}`, the codeword before the trit reversal, so the channel
//! LLR of `w_j` is that of `x_{rev(j)}`. A node of size `3^k` splits its
//! input into thirds `(z0, z1, z2)` with
//! `w = (z0 + z1 + z2, z0 + z2, z1 + z2)`.

use std::cmp::Ordering;
use std::collections::BinaryHeap;

use serde::{Deserialize, Serialize};

use crate::codes::{GeneratorMatrix, Kernel};
use crate::error::{Error, Result};
use crate::gf2::{BitVec, EchelonBasis, RowSolver};
use crate::transform::{kron_butterfly, polar_transform, trit_reversal_perm, Encoder, FrozenSpec, PreTransform};

/// Saturation used in place of an infinite LLR on soft channels.
pub const LLR_MAX: f64 = 40.0;

/// `sign(a) sign(b) min(|a|, |b|)`.
#[inline]
pub fn f_minus_minsum(a: f64, b: f64) -> f64 {
    let m = a.abs().min(b.abs());
    if (a < 0.0) != (b < 0.0) {
        -m
    } else {
        m
    }
}

/// `2 atanh(tanh(a/2) tanh(b/2))`, evaluated without overflow.
#[inline]
pub fn f_minus_exact(a: f64, b: f64) -> f64 {
    let (x, y) = (a.abs(), b.abs());
    let mag = if x.is_infinite() && y.is_infinite() {
        f64::INFINITY
    } else {
        x.min(y) + (-(x + y)).exp().ln_1p() - (-(x - y).abs()).exp().ln_1p()
    };
    let mag = mag.max(0.0);
    if (a < 0.0) != (b < 0.0) {
        -mag
    } else {
        mag
    }
}

#[inline]
pub fn f_minus(a: f64, b: f64, exact: bool) -> f64 {
    if exact {
        f_minus_exact(a, b)
    } else {
        f_minus_minsum(a, b)
    }
}

/// `(-1)^u a + b`.
#[inline]
pub fn f_plus(a: f64, b: f64, u: u8) -> f64 {
    if u & 1 == 0 {
        a + b
    } else {
        b - a
    }
}

#[inline]
fn signed(l: f64, bit: u8) -> f64 {
    if bit & 1 == 0 {
        l
    } else {
        -l
    }
}

/// Hard decision; NaN and zero decide 0.
#[inline]
pub fn hard(l: f64) -> u8 {
    (l < 0.0) as u8
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum DecoderKind {
    Sc,
    Scos,
}

impl std::str::FromStr for DecoderKind {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "sc" => Ok(DecoderKind::Sc),
            "scos" => Ok(DecoderKind::Scos),
            other => Err(Error::Parse(format!("unknown decoder '{other}' (expected sc or scos)"))),
        }
    }
}

/// Decoder selection and search budget.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(default)]
pub struct DecoderConfig {
    pub decoder: DecoderKind,
    /// Exact `f⁻` for plain SC; the ordered search always uses min-sum.
    pub exact_f: bool,
    /// Candidate paths whose metric exceeds this are dropped.
    pub lambda_max: f64,
    /// Maximum number of re-decoded paths after the first SC pass.
    pub eta: u32,
    pub llr_max: f64,
}

impl Default for DecoderConfig {
    fn default() -> Self {
        Self {
            decoder: DecoderKind::Sc,
            exact_f: false,
            lambda_max: f64::MAX,
            eta: 1000,
            llr_max: LLR_MAX,
        }
    }
}

impl DecoderConfig {
    pub fn sc() -> Self {
        Self::default()
    }

    pub fn scos(lambda_max: f64, eta: u32) -> Self {
        Self {
            decoder: DecoderKind::Scos,
            lambda_max,
            eta,
            ..Self::default()
        }
    }
}

/// Result of a soft-decision decode.
#[derive(Clone, Debug, PartialEq)]
pub struct DecodeOutput {
    pub u: BitVec,
    pub x: BitVec,
    /// Leaf decisions made, including the first SC pass.
    pub leaf_visits: u64,
    /// `leaf_visits / N`; plain SC gives 1.
    pub anv: f64,
    /// The search proved the output is a maximum-likelihood codeword.
    pub ml: bool,
    /// `sum |L_k|` over positions where `x` disagrees with the channel hard
    /// decision (min-sum path metric).
    pub metric: f64,
}

fn check_frozen(frozen: &FrozenSpec) -> Result<()> {
    if frozen.kernel != Kernel::A3Prime {
        return Err(Error::KernelMismatch {
            expected: Kernel::A3Prime.name().into(),
            got: frozen.kernel.name().into(),
        });
    }
    Ok(())
}

/// SC workspace for one code. Reusable across decodes.
#[derive(Clone, Debug)]
pub struct ScWorkspace<'a> {
    m: usize,
    frozen: &'a [bool],
    pre: Option<&'a PreTransform>,
    exact: bool,
    /// `llr[k]` holds the input LLRs of the active node at depth `m - k`;
    /// `llr[m]` is the channel in `w` order.
    llr: Vec<Vec<f64>>,
    /// `part[k]` holds partial sums of the active node at level `k`.
    part: Vec<Vec<u8>>,
    u: Vec<u8>,
    acc: BitVec,
    pm: f64,
    forced: usize,
    abandon: f64,
    record: bool,
    candidates: Vec<(f64, usize)>,
    visits: u64,
    leaf_llrs: Vec<f64>,
}

const A3P: [[u8; 3]; 3] = Kernel::A3Prime.rows();

impl<'a> ScWorkspace<'a> {
    pub fn new(frozen: &'a FrozenSpec, pre: Option<&'a PreTransform>, exact: bool) -> Result<Self> {
        check_frozen(frozen)?;
        let n = frozen.len();
        let m = frozen.m;
        Ok(Self {
            m,
            frozen: frozen.frozen(),
            pre,
            exact,
            llr: (0..=m).map(|k| vec![0.0; crate::field::pow3(k)]).collect(),
            part: (0..=m).map(|k| vec![0; crate::field::pow3(k)]).collect(),
            u: vec![0; n],
            acc: BitVec::zeros(n),
            pm: 0.0,
            forced: 0,
            abandon: f64::INFINITY,
            record: false,
            candidates: Vec::new(),
            visits: 0,
            leaf_llrs: vec![0.0; n],
        })
    }

    fn load_channel(&mut self, llrs: &[f64]) -> Result<()> {
        let n = self.u.len();
        if llrs.len() != n {
            return Err(Error::LengthMismatch {
                expected: n,
                got: llrs.len(),
            });
        }
        let perm = trit_reversal_perm(self.m);
        for (j, &p) in perm.iter().enumerate() {
            self.llr[self.m][j] = llrs[p];
        }
        Ok(())
    }

    /// Decodes with `u[..forced]` fixed. Returns false if the path metric
    /// reached `abandon`.
    fn run(&mut self, forced: usize, pm: f64, abandon: f64) -> bool {
        self.forced = forced;
        self.pm = pm;
        self.abandon = abandon;
        self.candidates.clear();
        if let Some(t) = self.pre {
            self.acc = BitVec::zeros(self.u.len());
            for j in 0..forced {
                if self.u[j] != self.acc.bit(j) {
                    self.acc.xor_assign(t.row(j));
                }
            }
        }
        self.node(self.m, 0)
    }

    fn node(&mut self, k: usize, offset: usize) -> bool {
        if k == 0 {
            return self.leaf(offset);
        }
        let s = self.llr[k - 1].len();
        for c in 0..3 {
            let child = offset + c * s;
            if child + s <= self.forced {
                let (lo, hi) = self.part.split_at_mut(k);
                let dst = &mut lo[k - 1];
                dst.copy_from_slice(&self.u[child..child + s]);
                kron_butterfly(dst, &A3P);
                hi[0][c * s..(c + 1) * s].copy_from_slice(dst);
                continue;
            }
            self.child_llrs(k, c, s);
            if !self.node(k - 1, child) {
                return false;
            }
            let (lo, hi) = self.part.split_at_mut(k);
            hi[0][c * s..(c + 1) * s].copy_from_slice(&lo[k - 1]);
        }
        let p = &mut self.part[k];
        for e in 0..s {
            let (z0, z1, z2) = (p[e], p[s + e], p[2 * s + e]);
            p[e] = z0 ^ z1 ^ z2;
            p[s + e] = z0 ^ z2;
            p[2 * s + e] = z1 ^ z2;
        }
        true
    }

    fn child_llrs(&mut self, k: usize, c: usize, s: usize) {
        let (lo, hi) = self.llr.split_at_mut(k);
        let out = &mut lo[k - 1];
        let l = &hi[0];
        let z = &self.part[k];
        let exact = self.exact;
        match c {
            0 => {
                for e in 0..s {
                    out[e] = f_minus(l[e], l[2 * s + e], exact);
                }
            }
            1 => {
                for e in 0..s {
                    let z0 = z[e];
                    out[e] = f_minus(f_plus(l[e], l[2 * s + e], z0), signed(l[s + e], z0), exact);
                }
            }
            _ => {
                for e in 0..s {
                    let (z0, z1) = (z[e], z[s + e]);
                    out[e] = signed(l[e], z0 ^ z1) + signed(l[s + e], z0) + signed(l[2 * s + e], z1);
                }
            }
        }
    }

    fn leaf(&mut self, i: usize) -> bool {
        if i < self.forced {
            self.part[0][0] = self.u[i];
            return true;
        }
        self.visits += 1;
        let l = self.llr[0][0];
        self.leaf_llrs[i] = l;
        let h = hard(l);
        let parity = if self.pre.is_some() { self.acc.bit(i) } else { 0 };
        let bit = if self.frozen[i] { parity } else { h };
        let mag = if l.is_nan() { 0.0 } else { l.abs() };
        if self.record && !self.frozen[i] {
            self.candidates.push((self.pm + mag, i));
        }
        if bit != h {
            self.pm += mag;
        }
        if self.pm >= self.abandon {
            return false;
        }
        self.u[i] = bit;
        if let Some(t) = self.pre {
            if bit != parity {
                self.acc.xor_assign(t.row(i));
            }
        }
        self.part[0][0] = bit;
        true
    }

    fn u_vec(&self) -> BitVec {
        BitVec::from_bits(&self.u)
    }
}

fn frozen_kernel_transform(u: &BitVec, m: usize) -> BitVec {
    polar_transform(u, Kernel::A3Prime, m).expect("length checked")
}

/// Successive cancellation decoding. Returns `(u_hat, x_hat)`.
pub fn sc_decode(
    llrs: &[f64],
    frozen: &FrozenSpec,
    dynamic: Option<&PreTransform>,
    exact: bool,
) -> Result<(BitVec, BitVec)> {
    let mut ws = ScWorkspace::new(frozen, dynamic, exact)?;
    ws.load_channel(llrs)?;
    ws.run(0, 0.0, f64::INFINITY);
    let u = ws.u_vec();
    let x = frozen_kernel_transform(&u, frozen.m);
    Ok((u, x))
}

/// As [`sc_decode`], also returning the LLR seen at each leaf.
pub fn sc_decode_traced(
    llrs: &[f64],
    frozen: &FrozenSpec,
    dynamic: Option<&PreTransform>,
    exact: bool,
) -> Result<(BitVec, Vec<f64>)> {
    let mut ws = ScWorkspace::new(frozen, dynamic, exact)?;
    ws.load_channel(llrs)?;
    ws.run(0, 0.0, f64::INFINITY);
    Ok((ws.u_vec(), ws.leaf_llrs))
}

#[derive(Clone, Copy, PartialEq)]
struct Candidate {
    metric: f64,
    path: usize,
    pos: usize,
}

impl Eq for Candidate {}

impl Ord for Candidate {
    fn cmp(&self, other: &Self) -> Ordering {
        // Min-heap on metric; earlier paths and positions first on ties.
        other
            .metric
            .total_cmp(&self.metric)
            .then_with(|| other.path.cmp(&self.path))
            .then_with(|| other.pos.cmp(&self.pos))
    }
}

impl PartialOrd for Candidate {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Best-first search over decision flips at unfrozen positions.
///
/// The first pass is min-sum SC. Flipping the decision at position `i` of a
/// path costs `PM_(i-1) + |L_i|`, where `PM` accumulates `|L|` over
/// decisions taken against the leaf LLR sign. Candidates are expanded in
/// increasing cost; each expansion re-runs SC from the flipped position and
/// stops once its metric reaches the best complete path. With min-sum
/// updates the metric of a complete path equals
/// `sum |L_k| [x_k != hard(L_k)]`, so an exhausted search returns an ML
/// codeword.
///
/// `eta` bounds the number of expansions and `lambda_max` drops candidates
/// with larger cost.
pub fn ordered_search_decode(
    llrs: &[f64],
    frozen: &FrozenSpec,
    dynamic: Option<&PreTransform>,
    lambda_max: f64,
    eta: u32,
) -> Result<DecodeOutput> {
    let n = frozen.len();
    let m = frozen.m;
    let mut ws = ScWorkspace::new(frozen, dynamic, false)?;
    ws.load_channel(llrs)?;
    ws.record = true;
    ws.run(0, 0.0, f64::INFINITY);

    let mut best = ws.pm;
    let mut best_u = ws.u.clone();
    // Paths are stored packed; a deep search keeps one per expansion.
    let mut paths: Vec<BitVec> = vec![ws.u_vec()];
    let mut heap = BinaryHeap::new();
    let mut pruned_min = f64::INFINITY;
    let mut push = |heap: &mut BinaryHeap<Candidate>, cands: &[(f64, usize)], path: usize, best: f64| {
        for &(metric, pos) in cands {
            if metric >= best {
                continue;
            }
            if metric > lambda_max {
                pruned_min = pruned_min.min(metric);
                continue;
            }
            heap.push(Candidate { metric, path, pos });
        }
    };
    push(&mut heap, &ws.candidates, 0, best);

    let mut expansions = 0u32;
    let exhausted = loop {
        let Some(c) = heap.pop() else { break true };
        if c.metric >= best {
            break true;
        }
        if expansions == eta {
            break false;
        }
        expansions += 1;
        let parent = &paths[c.path];
        for (j, b) in ws.u[..=c.pos].iter_mut().enumerate() {
            *b = parent.bit(j);
        }
        ws.u[c.pos] ^= 1;
        let done = ws.run(c.pos + 1, c.metric, best);
        if done && ws.pm < best {
            best = ws.pm;
            best_u.copy_from_slice(&ws.u);
        }
        let id = paths.len();
        paths.push(ws.u_vec());
        push(&mut heap, &ws.candidates, id, best);
    };

    let u = BitVec::from_bits(&best_u);
    let x = frozen_kernel_transform(&u, m);
    Ok(DecodeOutput {
        u,
        x,
        leaf_visits: ws.visits,
        anv: ws.visits as f64 / n as f64,
        ml: exhausted && pruned_min >= best,
        metric: best,
    })
}

/// Soft decoder bound to an encoder, dispatching on the configured kind.
#[derive(Clone, Debug)]
pub struct Decoder<'a> {
    encoder: &'a Encoder,
    frozen: FrozenSpec,
    config: DecoderConfig,
}

impl<'a> Decoder<'a> {
    /// Static codes built with `A3` are decoded through the `A3'` frozen
    /// set, which spans the same code; dynamic codes must use `A3'`.
    pub fn new(encoder: &'a Encoder, config: DecoderConfig) -> Result<Self> {
        let c = encoder.config();
        if c.dynamic && c.kernel != Kernel::A3Prime {
            return Err(Error::KernelMismatch {
                expected: Kernel::A3Prime.name().into(),
                got: c.kernel.name().into(),
            });
        }
        let frozen = crate::transform::frozen_spec(c.m, c.r1, c.r2, Kernel::A3Prime)?;
        Ok(Self {
            encoder,
            frozen,
            config,
        })
    }

    pub fn config(&self) -> &DecoderConfig {
        &self.config
    }

    /// Decodes channel LLRs after clamping them to `±llr_max`.
    pub fn decode(&self, llrs: &[f64]) -> Result<DecodeOutput> {
        let lm = self.config.llr_max;
        let clamped: Vec<f64> = llrs.iter().map(|l| l.clamp(-lm, lm)).collect();
        let pre = self.encoder.pretransform();
        match self.config.decoder {
            DecoderKind::Sc => {
                let mut ws = ScWorkspace::new(&self.frozen, pre, self.config.exact_f)?;
                ws.load_channel(&clamped)?;
                ws.run(0, 0.0, f64::INFINITY);
                let u = ws.u_vec();
                let x = frozen_kernel_transform(&u, self.frozen.m);
                let metric = codeword_metric(&x, &clamped);
                Ok(DecodeOutput {
                    u,
                    x,
                    leaf_visits: ws.visits,
                    anv: 1.0,
                    ml: false,
                    metric,
                })
            }
            DecoderKind::Scos => {
                ordered_search_decode(&clamped, &self.frozen, pre, self.config.lambda_max, self.config.eta)
            }
        }
    }
}

/// `sum |L_k|` over positions where `x_k` disagrees with the sign of `L_k`.
pub fn codeword_metric(x: &BitVec, llrs: &[f64]) -> f64 {
    llrs.iter()
        .enumerate()
        .filter(|&(k, &l)| x.bit(k) != hard(l))
        .map(|(_, l)| l.abs())
        .sum()
}

/// True when the decoder erred and its output is at least as likely as the
/// transmitted codeword, so an exact ML decoder would also have erred
/// (ties included).
pub fn ml_lower_bound_event(x_hat: &BitVec, x_sent: &BitVec, llrs: &[f64]) -> bool {
    if x_hat == x_sent {
        return false;
    }
    let diff = x_hat.xor(x_sent);
    let gain: f64 = diff.ones_positions().map(|k| signed(llrs[k], x_hat.bit(k))).sum();
    gain >= 0.0
}

/// Outcome of erasure decoding.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum BecOutcome {
    Codeword(BitVec),
    Ambiguous,
}

/// Exact ML decoding on the erasure channel: solves `c G = r` on the
/// unerased positions. `None` marks an erasure.
pub fn bec_ml_decode(received: &[Option<bool>], g: &GeneratorMatrix) -> Result<BecOutcome> {
    let n = g.length();
    if received.len() != n {
        return Err(Error::LengthMismatch {
            expected: n,
            got: received.len(),
        });
    }
    let known: Vec<usize> = (0..n).filter(|&k| received[k].is_some()).collect();
    let sub = g.matrix().select_columns(&known);
    let solver = RowSolver::new(&sub);
    if solver.rank() < g.dimension() {
        return Ok(BecOutcome::Ambiguous);
    }
    let target = BitVec::from_bools(known.iter().map(|&k| received[k] == Some(true)));
    let coeffs = solver.solve(&target).ok_or(Error::InconsistentReceived)?;
    Ok(BecOutcome::Codeword(g.encode(&coeffs)))
}

/// Columns of a generator, for repeated rank tests on erasure patterns.
#[derive(Clone, Debug)]
pub struct ErasureRankTester {
    columns: Vec<BitVec>,
    k: usize,
}

impl ErasureRankTester {
    pub fn new(g: &GeneratorMatrix) -> Self {
        Self {
            columns: g.matrix().transpose().into_rows(),
            k: g.dimension(),
        }
    }

    /// True iff some nonzero codeword is supported inside the erasures,
    /// i.e. ML decoding of the all-zero codeword is ambiguous.
    pub fn is_ambiguous(&self, erased: &[bool]) -> bool {
        let mut basis = EchelonBasis::new(self.k);
        for (col, _) in self.columns.iter().zip(erased).filter(|(_, &e)| !e) {
            basis.insert(col.clone());
            if basis.rank() == self.k {
                return false;
            }
        }
        basis.rank() < self.k
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::transform::{frozen_spec, EncoderConfig};

    #[test]
    fn f_function_examples() {
        for x in [-3.5, -0.2, 0.0, 1.0, 7.0] {
            assert_eq!(f_minus_minsum(x, f64::INFINITY), x);
            assert!((f_minus_exact(x, f64::INFINITY) - x).abs() < 1e-12);
            assert_eq!(f_minus_minsum(0.0, x), 0.0);
            assert_eq!(f_minus_exact(0.0, x).abs(), 0.0);
        }
        assert_eq!(f_plus(2.0, 5.0, 0), 7.0);
        assert_eq!(f_plus(2.0, 5.0, 1), 3.0);
        assert_eq!(f_plus(0.0, 5.0, 1), 5.0);
        assert_eq!(f_minus_exact(f64::INFINITY, f64::NEG_INFINITY), f64::NEG_INFINITY);
    }

    #[test]
    fn exact_and_minsum_agree_in_sign() {
        let vals = [-30.0, -4.0, -1.0, -0.3, 0.3, 1.0, 2.5, 9.0, 40.0];
        for &a in &vals {
            for &b in &vals {
                let e = f_minus_exact(a, b);
                let s = f_minus_minsum(a, b);
                let direct = 2.0 * ((a / 2.0).tanh() * (b / 2.0).tanh()).atanh();
                assert_eq!(e.signum(), s.signum());
                assert!((e - s).abs() <= 0.7);
                assert!(e.abs() <= a.abs().min(b.abs()) + 1e-12);
                if a.abs() <= 10.0 && b.abs() <= 10.0 {
                    assert!((e - direct).abs() < 1e-9, "{a} {b}");
                }
            }
        }
    }

    #[test]
    fn hand_trace_single_parity_check() {
        // Child 0: f(2, 1) = 1 -> z0 = 0. Child 1: f(2 + 1, -1) = -1 -> z1 = 1.
        // u2 is frozen to 0. Output w = (1, 0, 1), which is x for m = 1.
        let frozen = frozen_spec(1, 1, 1, Kernel::A3Prime).unwrap();
        let (u, x) = sc_decode(&[2.0, -1.0, 1.0], &frozen, None, false).unwrap();
        assert_eq!(u.to_bits(), vec![0, 1, 0]);
        assert_eq!(x.to_bits(), vec![1, 0, 1]);
        let out = ordered_search_decode(&[2.0, -1.0, 1.0], &frozen, None, f64::MAX, 0).unwrap();
        assert_eq!(out.x, x);
        assert_eq!(out.metric, 4.0);
        assert_eq!(codeword_metric(&x, &[2.0, -1.0, 1.0]), 4.0);
    }

    #[test]
    fn rejects_a3_frozen_sets() {
        let frozen = frozen_spec(2, 1, 1, Kernel::A3).unwrap();
        assert!(matches!(
            sc_decode(&[0.0; 9], &frozen, None, false),
            Err(Error::KernelMismatch { .. })
        ));
        let ok = frozen_spec(2, 1, 1, Kernel::A3Prime).unwrap();
        assert!(matches!(
            sc_decode(&[0.0; 8], &ok, None, false),
            Err(Error::LengthMismatch { .. })
        ));
    }

    #[test]
    fn ml_event_examples() {
        let a = BitVec::from_bits(&[0, 0, 0]);
        let b = BitVec::from_bits(&[1, 1, 0]);
        assert!(!ml_lower_bound_event(&a, &a, &[1.0, 1.0, 1.0]));
        assert!(ml_lower_bound_event(&b, &a, &[-1.0, -1.0, 1.0]));
        assert!(!ml_lower_bound_event(&b, &a, &[1.0, -0.5, 1.0]));
        assert!(ml_lower_bound_event(&b, &a, &[1.0, -1.0, 1.0]));
    }

    #[test]
    fn bec_examples() {
        let e = Encoder::new(EncoderConfig::new(2, 0, 0, Kernel::A3)).unwrap();
        let g = e.generator_matrix();
        let all: Vec<Option<bool>> = vec![None; 9];
        assert_eq!(bec_ml_decode(&all, &g).unwrap(), BecOutcome::Ambiguous);
        let mut one = all.clone();
        one[4] = Some(true);
        assert_eq!(bec_ml_decode(&one, &g).unwrap(), BecOutcome::Codeword(BitVec::ones(9)));
        let t = ErasureRankTester::new(&g);
        assert!(t.is_ambiguous(&[true; 9]));
        assert!(!t.is_ambiguous(&[true, true, true, true, false, true, true, true, true]));
    }

    #[test]
    fn decoder_config_json() {
        let c: DecoderConfig = serde_json::from_str(r#"{"decoder":"scos","eta":5}"#).unwrap();
        assert_eq!(c.decoder, DecoderKind::Scos);
        assert_eq!(c.eta, 5);
        assert_eq!(c.llr_max, LLR_MAX);
    }
}
