//! Independent oracles and the self-check suites behind `bid verify`.

use rand::Rng;

use crate::codes::{
    abelian_generator, bid_generator, dual_weight_set, idft_generator, spectral_membership, submatrix_by_weight,
    CodeSpec, Kernel, WeightSet,
};
use crate::decode::{
    bec_ml_decode, codeword_metric, ordered_search_decode, sc_decode_traced, BecOutcome, Decoder, DecoderConfig,
    LLR_MAX,
};
use crate::distance::{
    brute_force_min_distance, closed_form_lower, exact_w_m_minus_one, exact_w_one, recursive_bounds, DistanceBounds,
    DEFAULT_DIM_BUDGET, REFERENCE_TABLE,
};
use crate::error::Result;
use crate::field::pow3;
use crate::gf2::{BitMatrix, BitVec, EchelonBasis};
use crate::sim::{awgn_sigma2, bpsk_llr, trial_rng};
use crate::transform::{frozen_spec, polar_matrix, Encoder, EncoderConfig};

/// Outcome of one suite.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SuiteResult {
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
}

impl SuiteResult {
    fn new(name: &'static str, failures: Vec<String>, checked: usize) -> Self {
        let passed = failures.is_empty();
        let detail = if passed {
            format!("{checked} checks")
        } else {
            format!("{} of {checked} failed; first: {}", failures.len(), failures[0])
        };
        Self { name, passed, detail }
    }
}

impl std::fmt::Display for SuiteResult {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let tag = if self.passed { "PASS" } else { "FAIL" };
        write!(f, "{tag} {}: {}", self.name, self.detail)
    }
}

/// Exhaustive ML: the codeword minimizing `sum |L_k| [x_k != hard(L_k)]`
/// over all `2^K` messages. Returns the codeword and its metric.
pub fn ml_oracle(encoder: &Encoder, llrs: &[f64]) -> (BitVec, f64) {
    let g = encoder.generator_matrix();
    let k = g.dimension();
    assert!(k <= 24, "oracle dimension {k} too large");
    let mut cur = BitVec::zeros(g.length());
    let mut best = (cur.clone(), codeword_metric(&cur, llrs));
    for step in 1u64..1 << k {
        cur.xor_assign(&g.rows()[step.trailing_zeros() as usize]);
        let s = codeword_metric(&cur, llrs);
        if s < best.1 {
            best = (cur.clone(), s);
        }
    }
    best
}

/// For each input position `i` of `x = u G`, whether `u_i` is fixed by the
/// unerased symbols once `u_0..u_(i-1)` are known and later inputs are free:
/// true iff row `i` restricted to the unerased columns is outside the span
/// of the restricted rows `i+1..`.
pub fn erasure_determined_inputs(g: &BitMatrix, erased: &[bool]) -> Vec<bool> {
    let known: Vec<usize> = (0..g.ncols()).filter(|&k| !erased[k]).collect();
    let sub = g.select_columns(&known);
    let mut basis = EchelonBasis::new(known.len());
    let mut out = vec![false; g.nrows()];
    for i in (0..g.nrows()).rev() {
        out[i] = !basis.reduce(sub.row(i)).is_zero();
        basis.insert(sub.row(i).clone());
    }
    out
}

fn all_bid_params(max_m: usize) -> impl Iterator<Item = (usize, usize, usize)> {
    (1..=max_m).flat_map(|m| (0..=m).flat_map(move |r1| (r1..=m).map(move |r2| (m, r1, r2))))
}

fn noiseless_llrs(x: &BitVec) -> Vec<f64> {
    (0..x.len())
        .map(|k| if x.get(k) { -LLR_MAX } else { LLR_MAX })
        .collect()
}

/// Recursive bounds and dimensions against the published table.
pub fn check_table() -> SuiteResult {
    let mut fails = Vec::new();
    for &(m, r1, r2, lo, hi, k) in REFERENCE_TABLE {
        let iv = recursive_bounds(m, r1, r2).expect("valid");
        let dim = CodeSpec::bid(m, r1, r2, Kernel::A3).expect("valid").dimension();
        if (iv.lower, iv.upper, dim) != (lo, hi, k) {
            fails.push(format!("({m},{r1},{r2}): got {iv} K={dim}, want {lo}-{hi} K={k}"));
        }
    }
    SuiteResult::new("table", fails, REFERENCE_TABLE.len())
}

/// Closed form equals the recursive lower bound except at (8,5,5) and
/// (9,5,6), where it is strictly smaller.
pub fn check_closed_form(max_m: usize) -> SuiteResult {
    let mut bounds = DistanceBounds::new();
    let mut fails = Vec::new();
    let mut n = 0;
    for (m, r1, r2) in all_bid_params(max_m) {
        n += 1;
        let cf = closed_form_lower(m, r1, r2).expect("valid");
        let lo = bounds.bounds(m, r1, r2).expect("valid").lower;
        let ok = if matches!((m, r1, r2), (8, 5, 5) | (9, 5, 6)) {
            cf < lo
        } else {
            cf == lo
        };
        if !ok {
            fails.push(format!("({m},{r1},{r2}): closed form {cf}, recursion {lo}"));
        }
    }
    SuiteResult::new("closed-form", fails, n)
}

/// Exhaustive minimum distance against the recursion for every length-9
/// code and every length-27 code with `K <= budget`, plus the two exact
/// families.
pub fn check_oracle(budget: usize) -> SuiteResult {
    let mut fails = Vec::new();
    let mut n = 0;
    for (m, r1, r2) in all_bid_params(3).filter(|&(m, ..)| m >= 2) {
        let spec = CodeSpec::bid(m, r1, r2, Kernel::A3).expect("valid");
        if spec.dimension() > budget {
            continue;
        }
        n += 1;
        let (d, _) = brute_force_min_distance(&bid_generator(&spec).expect("valid"), budget).expect("budget");
        let iv = recursive_bounds(m, r1, r2).expect("valid");
        if !iv.contains(d as u64) || (iv.is_exact() && iv.lower != d as u64) {
            fails.push(format!("{}: oracle {d}, recursion {iv}", spec.label()));
        }
    }
    let g = bid_generator(&CodeSpec::bid(2, 1, 1, Kernel::A3).expect("valid")).expect("valid");
    let weights: Vec<usize> = (1u64..16)
        .map(|c| g.encode(&BitVec::from_bools((0..4).map(|i| c >> i & 1 == 1))).weight())
        .collect();
    let range = (
        *weights.iter().min().unwrap() as u64,
        *weights.iter().max().unwrap() as u64,
    );
    n += 1;
    if range != exact_w_one(2).expect("m >= 2") {
        fails.push(format!("BiD(2,1,1) weight range {range:?}"));
    }
    let g = bid_generator(&CodeSpec::bid(3, 2, 2, Kernel::A3).expect("valid")).expect("valid");
    let (d, _) = brute_force_min_distance(&g, DEFAULT_DIM_BUDGET).expect("budget");
    n += 1;
    if d as u64 != exact_w_m_minus_one(3).expect("m >= 3") {
        fails.push(format!("BiD(3,2,2) distance {d}"));
    }
    SuiteResult::new("oracle", fails, n)
}

/// Spectral, dual, kernel-power and inverse-DFT constructions agree for
/// `m <= max_m`; the parity-set row sums hold for `m <= sums_max_m`.
pub fn check_construction(max_m: usize, sums_max_m: usize) -> SuiteResult {
    let mut fails = Vec::new();
    let mut n = 0;
    for m in 1..=max_m {
        for w in 0..=m {
            n += 1;
            let g = submatrix_by_weight(m, w, Kernel::A3).expect("valid");
            let ws = WeightSet::new(m, [w]).expect("valid");
            let h = idft_generator(m, &ws).expect("valid");
            if h.matrix().rank() != g.dimension() || !g.matrix().row_space_contains(h.matrix()) {
                fails.push(format!("inverse-DFT rows of ({m},{w})"));
            }
            if !g.rows().iter().all(|r| spectral_membership(r, &ws).unwrap_or(false)) {
                fails.push(format!("spectral membership of G_({m},{w})"));
            }
            if m >= 2 {
                let heavy = BitMatrix::from_bit_rows(&[&[1, 1, 1]]);
                let mut stack = BitMatrix::new(pow3(m));
                if w < m {
                    stack =
                        stack.stack(&heavy.kron(submatrix_by_weight(m - 1, w, Kernel::A3).expect("valid").matrix()));
                }
                if w >= 1 {
                    let sub = submatrix_by_weight(m - 1, w - 1, Kernel::A3).expect("valid");
                    for light in [[1u8, 1, 0], [1, 0, 1]] {
                        stack = stack.stack(&BitMatrix::from_bit_rows(&[&light]).kron(sub.matrix()));
                    }
                }
                let mut a = g.rows().to_vec();
                let mut b = stack.into_rows();
                a.sort();
                b.sort();
                if a != b {
                    fails.push(format!("block recursion of G_({m},{w})"));
                }
            }
        }
        for mask in 0u64..1 << (m + 1) {
            n += 1;
            let ws = WeightSet::new(m, (0..=m).filter(|w| mask >> w & 1 == 1)).expect("valid");
            let a = abelian_generator(m, &ws, Kernel::A3).expect("valid");
            let d = abelian_generator(m, &dual_weight_set(&ws), Kernel::A3).expect("valid");
            if a.rows().iter().any(|x| d.rows().iter().any(|y| x.dot(y))) {
                fails.push(format!("duality of A({m},{ws})"));
            }
            let b = abelian_generator(m, &ws, Kernel::A3Prime).expect("valid");
            if !a.matrix().same_row_space(b.matrix()) {
                fails.push(format!("kernel invariance of A({m},{ws})"));
            }
        }
    }
    for m in 1..=sums_max_m {
        n += 1;
        let even = abelian_generator(m, &WeightSet::even(m), Kernel::A3).expect("valid");
        let odd = abelian_generator(m, &WeightSet::odd(m), Kernel::A3).expect("valid");
        let we = even.encode(&BitVec::ones(even.dimension())).weight();
        let wo = odd.encode(&BitVec::ones(odd.dimension())).weight();
        if (we, wo) != (2 * m + 1, 2 * m) {
            fails.push(format!("parity row sums at m={m}: {we}, {wo}"));
        }
    }
    SuiteResult::new("construction", fails, n)
}

/// Noiseless encode/decode round trips for every BiD code with
/// `m <= max_m`: static codes from both kernels and dynamic `A3'` codes.
pub fn check_roundtrips(max_m: usize, per_spec: u64, seed: u64) -> SuiteResult {
    let mut fails = Vec::new();
    let mut n = 0;
    for (m, r1, r2) in all_bid_params(max_m) {
        for (kernel, dynamic) in [(Kernel::A3, false), (Kernel::A3Prime, false), (Kernel::A3Prime, true)] {
            let mut cfg = EncoderConfig::new(m, r1, r2, kernel);
            if dynamic {
                cfg = cfg.dynamic(seed ^ 0x5eed);
            }
            let enc = Encoder::new(cfg).expect("valid");
            let dec = Decoder::new(&enc, DecoderConfig::sc()).expect("A3' decoder");
            for t in 0..per_spec {
                n += 1;
                let mut rng = trial_rng(seed, t);
                let msg = BitVec::from_bools((0..enc.dimension()).map(|_| rng.random::<bool>()));
                let (u, x) = enc.encode(&msg).expect("length");
                let out = dec.decode(&noiseless_llrs(&x)).expect("decode");
                let back = enc.message_from_codeword(&out.x);
                let u_ok = kernel != Kernel::A3Prime || out.u == u;
                if out.x != x || back.as_ref() != Ok(&msg) || !u_ok {
                    fails.push(format!("{} kernel {kernel} trial {t}", enc.label()));
                    break;
                }
            }
        }
    }
    SuiteResult::new("roundtrip", fails, n)
}

/// SC on erasure LLRs against [`erasure_determined_inputs`]: each leaf LLR
/// is infinite exactly when the input is algebraically determined, with the
/// sign of the transmitted bit. Random codewords are compared up to the
/// first erased guess at an unfrozen position; the all-zero codeword is
/// compared in full.
pub fn check_bec_consistency(max_m: usize, patterns: u64, seed: u64) -> SuiteResult {
    let mut fails = Vec::new();
    let mut n = 0;
    for (m, r1, r2) in all_bid_params(max_m) {
        let enc = Encoder::new(EncoderConfig::new(m, r1, r2, Kernel::A3Prime)).expect("valid");
        let frozen = frozen_spec(m, r1, r2, Kernel::A3Prime).expect("valid");
        let gp = polar_matrix(Kernel::A3Prime, m);
        let nn = pow3(m);
        for t in 0..patterns {
            n += 1;
            let mut rng = trial_rng(seed, t);
            let eps = rng.random::<f64>();
            let zero = t % 2 == 0;
            let msg = BitVec::from_bools((0..enc.dimension()).map(|_| !zero && rng.random::<bool>()));
            let (u, x) = enc.encode(&msg).expect("length");
            let erased: Vec<bool> = (0..nn).map(|_| rng.random::<f64>() < eps).collect();
            let llrs: Vec<f64> = (0..nn)
                .map(|k| match (erased[k], x.get(k)) {
                    (true, _) => 0.0,
                    (false, false) => f64::INFINITY,
                    (false, true) => f64::NEG_INFINITY,
                })
                .collect();
            let (u_hat, leaf) = sc_decode_traced(&llrs, &frozen, None, false).expect("decode");
            let det = erasure_determined_inputs(&gp, &erased);
            for i in 0..nn {
                let known = leaf[i].is_infinite();
                if known != det[i] || (known && (leaf[i] < 0.0) != u.get(i)) {
                    fails.push(format!("{} pattern {t} position {i}", enc.label()));
                    break;
                }
                if !zero && !known && !frozen.is_frozen(i) {
                    break;
                }
            }
            if zero && u_hat != u {
                fails.push(format!("{} pattern {t}: all-zero decode", enc.label()));
            }
        }
    }
    SuiteResult::new("bec-consistency", fails, n)
}

/// Unbounded ordered search against exhaustive ML on BI-AWGN trials for
/// every length-9 code (static and dynamic).
pub fn check_ml_search(trials: u64, ebn0_db: f64, seed: u64) -> SuiteResult {
    let mut fails = Vec::new();
    let mut n = 0;
    for (m, r1, r2) in all_bid_params(2).filter(|&(m, ..)| m == 2) {
        for dynamic in [false, true] {
            let mut cfg = EncoderConfig::new(m, r1, r2, Kernel::A3Prime);
            if dynamic {
                cfg = cfg.dynamic(seed);
            }
            let enc = Encoder::new(cfg).expect("valid");
            let rate = enc.dimension() as f64 / enc.length() as f64;
            let sigma2 = awgn_sigma2(ebn0_db, rate);
            for t in 0..trials {
                n += 1;
                let mut rng = trial_rng(seed, t);
                let msg = BitVec::from_bools((0..enc.dimension()).map(|_| rng.random::<bool>()));
                let (_, x) = enc.encode(&msg).expect("length");
                let llrs: Vec<f64> = bpsk_llr(&x, sigma2, &mut rng)
                    .into_iter()
                    .map(|l| l.clamp(-LLR_MAX, LLR_MAX))
                    .collect();
                let out = ordered_search_decode(
                    &llrs,
                    &frozen_spec(m, r1, r2, Kernel::A3Prime).expect("valid"),
                    enc.pretransform(),
                    f64::MAX,
                    u32::MAX,
                )
                .expect("decode");
                let (ml_x, ml_metric) = ml_oracle(&enc, &llrs);
                let same = out.x == ml_x || (out.metric - ml_metric).abs() <= 1e-9 * (1.0 + ml_metric);
                if !same || !out.ml || (codeword_metric(&out.x, &llrs) - out.metric).abs() > 1e-9 * (1.0 + out.metric) {
                    fails.push(format!(
                        "{} trial {t}: search {} vs ML {ml_metric}",
                        enc.label(),
                        out.metric
                    ));
                }
            }
        }
    }
    SuiteResult::new("ml-search", fails, n)
}

/// Erasure decoding reports ambiguity exactly when some nonzero codeword
/// lies inside the erasure set (codeword enumeration, `K <= max_k`).
pub fn check_bec_rank(max_m: usize, max_k: usize, patterns: u64, seed: u64) -> SuiteResult {
    let mut fails = Vec::new();
    let mut n = 0;
    for (m, r1, r2) in all_bid_params(max_m) {
        let enc = Encoder::new(EncoderConfig::new(m, r1, r2, Kernel::A3)).expect("valid");
        let k = enc.dimension();
        if k > max_k || k == 0 {
            continue;
        }
        let g = enc.generator_matrix();
        let words: Vec<BitVec> = (1u64..1 << k)
            .map(|c| g.encode(&BitVec::from_bools((0..k).map(|i| c >> i & 1 == 1))))
            .collect();
        let nn = enc.length();
        for t in 0..patterns {
            n += 1;
            let mut rng = trial_rng(seed, t);
            let eps = rng.random::<f64>();
            let erased: Vec<bool> = (0..nn).map(|_| rng.random::<f64>() < eps).collect();
            let covered = words.iter().any(|w| w.ones_positions().all(|p| erased[p]));
            let received: Vec<Option<bool>> = (0..nn).map(|p| (!erased[p]).then_some(false)).collect();
            let amb = bec_ml_decode(&received, &g).map(|o| o == BecOutcome::Ambiguous);
            if amb != Ok(covered) {
                fails.push(format!("{} pattern {t}", enc.label()));
            }
        }
    }
    SuiteResult::new("bec-rank", fails, n)
}

/// The quick suites run by `bid verify`.
pub fn run_default_suites(seed: u64) -> Result<Vec<SuiteResult>> {
    Ok(vec![
        check_table(),
        check_closed_form(9),
        check_oracle(DEFAULT_DIM_BUDGET),
        check_construction(3, 6),
        check_roundtrips(4, 20, seed),
        check_bec_consistency(3, 100, seed),
        check_ml_search(200, 2.0, seed),
        check_bec_rank(3, 16, 50, seed),
    ])
}
