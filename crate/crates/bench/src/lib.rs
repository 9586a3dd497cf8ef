//! Fixtures shared by the benchmarks.

use bid_core::{BitVec, Encoder, EncoderConfig, Kernel};

/// Deterministic pseudo-random bits from a 64-bit LCG.
pub fn lcg_bits(n: usize, mut state: u64) -> BitVec {
    BitVec::from_bools((0..n).map(|_| {
        state = state
            .wrapping_mul(6364136223846793005)
            .wrapping_add(1442695040888963407);
        state >> 63 == 1
    }))
}

/// Noisy channel LLRs for a random codeword of `encoder`.
pub fn noisy_llrs(encoder: &Encoder, flips: u64) -> Vec<f64> {
    let msg = lcg_bits(encoder.dimension(), 7);
    let (_, x) = encoder.encode(&msg).expect("length");
    let noise = lcg_bits(x.len(), flips);
    (0..x.len())
        .map(|k| {
            let s = if x.get(k) { -1.0 } else { 1.0 };
            let mag = 0.5 + (k % 7) as f64 * 0.3;
            if noise.get(k) && k % 5 == 0 {
                -s * mag
            } else {
                s * mag
            }
        })
        .collect()
}

pub fn dbid_5_2_2() -> Encoder {
    Encoder::new(EncoderConfig::new(5, 2, 2, Kernel::A3Prime).dynamic(1)).expect("valid")
}
