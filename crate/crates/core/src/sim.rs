//! Monte Carlo block error rate estimation on the erasure and BI-AWGN
//! channels.
//!
//! Trial `t` draws all of its randomness from a ChaCha8 generator seeded
//! with the run seed and switched to stream `t`, so ledgers do not depend on
//! how trials are split across threads.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::{Distribution, StandardNormal};
use rayon::prelude::*;
use serde::Serialize;

use crate::decode::{bec_ml_decode, ml_lower_bound_event, BecOutcome, Decoder, DecoderConfig, ErasureRankTester};
use crate::error::{Error, Result};
use crate::gf2::BitVec;
use crate::transform::Encoder;

/// Two-sided 95% normal quantile.
pub const Z95: f64 = 1.959964;

#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub enum Channel {
    Bec { epsilon: f64 },
    BiAwgn { ebn0_db: f64, rate: f64 },
}

impl Channel {
    pub fn bec(epsilon: f64) -> Result<Self> {
        if !(0.0..=1.0).contains(&epsilon) {
            return Err(Error::InvalidParams(format!(
                "erasure probability {epsilon} outside [0, 1]"
            )));
        }
        Ok(Channel::Bec { epsilon })
    }

    pub fn biawgn(ebn0_db: f64, rate: f64) -> Result<Self> {
        if !(rate > 0.0 && rate <= 1.0) || !ebn0_db.is_finite() {
            return Err(Error::InvalidParams(format!(
                "bad AWGN channel: Eb/N0 {ebn0_db} dB, rate {rate}"
            )));
        }
        Ok(Channel::BiAwgn { ebn0_db, rate })
    }

    /// Noise variance `1 / (2 R 10^(Eb/N0 / 10))`; `None` for the BEC.
    pub fn sigma2(&self) -> Option<f64> {
        match *self {
            Channel::Bec { .. } => None,
            Channel::BiAwgn { ebn0_db, rate } => Some(awgn_sigma2(ebn0_db, rate)),
        }
    }

    pub fn name(&self) -> &'static str {
        match self {
            Channel::Bec { .. } => "bec",
            Channel::BiAwgn { .. } => "awgn",
        }
    }

    pub fn param(&self) -> f64 {
        match *self {
            Channel::Bec { epsilon } => epsilon,
            Channel::BiAwgn { ebn0_db, .. } => ebn0_db,
        }
    }
}

pub fn awgn_sigma2(ebn0_db: f64, rate: f64) -> f64 {
    1.0 / (2.0 * rate * 10f64.powf(ebn0_db / 10.0))
}

/// Erasure probability at which capacity exceeds the rate by `gap`.
pub fn epsilon_for_gap(rate: f64, gap: f64) -> f64 {
    1.0 - rate - gap
}

/// Wilson score interval for `k` successes in `n` trials.
pub fn wilson_interval(k: u64, n: u64, z: f64) -> (f64, f64) {
    if n == 0 {
        return (0.0, 1.0);
    }
    let n = n as f64;
    let p = k as f64 / n;
    let z2 = z * z;
    let denom = 1.0 + z2 / n;
    let center = (p + z2 / (2.0 * n)) / denom;
    let half = z * (p * (1.0 - p) / n + z2 / (4.0 * n * n)).sqrt() / denom;
    ((center - half).max(0.0), (center + half).min(1.0))
}

/// Counts accumulated over a batch of trials.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
pub struct TrialLedger {
    pub trials: u64,
    pub block_errors: u64,
    pub ml_lb_errors: u64,
    /// SC leaf decisions summed over trials; zero for ML erasure decoding.
    pub leaf_visits: u64,
    pub block_length: u64,
    pub seed: u64,
}

impl TrialLedger {
    fn empty(block_length: usize, seed: u64) -> Self {
        Self {
            block_length: block_length as u64,
            seed,
            ..Self::default()
        }
    }

    fn merge(mut self, o: TrialLedger) -> Self {
        self.trials += o.trials;
        self.block_errors += o.block_errors;
        self.ml_lb_errors += o.ml_lb_errors;
        self.leaf_visits += o.leaf_visits;
        self
    }

    pub fn bler(&self) -> f64 {
        ratio(self.block_errors, self.trials)
    }

    pub fn ml_lb_rate(&self) -> f64 {
        ratio(self.ml_lb_errors, self.trials)
    }

    pub fn bler_ci(&self) -> (f64, f64) {
        wilson_interval(self.block_errors, self.trials, Z95)
    }

    /// Average leaf decisions per trial divided by `N`.
    pub fn anv(&self) -> f64 {
        ratio(self.leaf_visits, self.trials * self.block_length)
    }
}

fn ratio(a: u64, b: u64) -> f64 {
    if b == 0 {
        0.0
    } else {
        a as f64 / b as f64
    }
}

/// Generator for trial `trial` of a run.
pub fn trial_rng(seed: u64, trial: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(trial);
    rng
}

/// BPSK over AWGN: `y = (1 - 2x) + n`, `LLR = 2y / σ²`.
pub fn bpsk_llr<R: Rng + ?Sized>(x: &BitVec, sigma2: f64, rng: &mut R) -> Vec<f64> {
    let sigma = sigma2.sqrt();
    (0..x.len())
        .map(|k| {
            let s = if x.get(k) { -1.0 } else { 1.0 };
            let n: f64 = StandardNormal.sample(rng);
            2.0 * (s + sigma * n) / sigma2
        })
        .collect()
}

fn random_message<R: Rng + ?Sized>(k: usize, rng: &mut R) -> BitVec {
    BitVec::from_bools((0..k).map(|_| rng.random::<bool>()))
}

fn erasures<R: Rng + ?Sized>(n: usize, epsilon: f64, rng: &mut R) -> Vec<bool> {
    (0..n).map(|_| rng.random::<f64>() < epsilon).collect()
}

/// ML decoding on the BEC with the all-zero codeword: a block error is an
/// erasure pattern covering the support of some nonzero codeword. Trials at
/// different `epsilon` with the same seed see nested erasure sets.
pub fn simulate_bec(encoder: &Encoder, epsilon: f64, trials: u64, seed: u64) -> Result<TrialLedger> {
    Channel::bec(epsilon)?;
    let n = encoder.length();
    let tester = ErasureRankTester::new(&encoder.generator_matrix());
    Ok((0..trials)
        .into_par_iter()
        .map(|t| {
            let mut rng = trial_rng(seed, t);
            let err = tester.is_ambiguous(&erasures(n, epsilon, &mut rng)) as u64;
            TrialLedger {
                trials: 1,
                block_errors: err,
                ml_lb_errors: err,
                ..TrialLedger::empty(n, seed)
            }
        })
        .reduce(|| TrialLedger::empty(n, seed), TrialLedger::merge))
}

/// As [`simulate_bec`] but transmitting random codewords and running the
/// full erasure decoder.
pub fn simulate_bec_random_codewords(encoder: &Encoder, epsilon: f64, trials: u64, seed: u64) -> Result<TrialLedger> {
    Channel::bec(epsilon)?;
    let n = encoder.length();
    let g = encoder.generator_matrix();
    (0..trials)
        .into_par_iter()
        .map(|t| {
            let mut rng = trial_rng(seed, t);
            let (_, x) = encoder.encode(&random_message(encoder.dimension(), &mut rng))?;
            let erased = erasures(n, epsilon, &mut rng);
            let received: Vec<Option<bool>> = (0..n).map(|k| (!erased[k]).then(|| x.get(k))).collect();
            let err = match bec_ml_decode(&received, &g)? {
                BecOutcome::Codeword(c) => (c != x) as u64,
                BecOutcome::Ambiguous => 1,
            };
            Ok(TrialLedger {
                trials: 1,
                block_errors: err,
                ml_lb_errors: err,
                ..TrialLedger::empty(n, seed)
            })
        })
        .try_reduce(|| TrialLedger::empty(n, seed), |a, b| Ok(a.merge(b)))
}

/// Random messages over BI-AWGN, decoded with the configured soft decoder.
pub fn simulate_awgn(
    encoder: &Encoder,
    ebn0_db: f64,
    trials: u64,
    decoder_cfg: &DecoderConfig,
    seed: u64,
) -> Result<TrialLedger> {
    let n = encoder.length();
    let rate = encoder.dimension() as f64 / n as f64;
    let sigma2 = Channel::biawgn(ebn0_db, rate)?.sigma2().expect("awgn");
    let decoder = Decoder::new(encoder, decoder_cfg.clone())?;
    (0..trials)
        .into_par_iter()
        .map(|t| {
            let mut rng = trial_rng(seed, t);
            let (_, x) = encoder.encode(&random_message(encoder.dimension(), &mut rng))?;
            let llrs = bpsk_llr(&x, sigma2, &mut rng);
            let out = decoder.decode(&llrs)?;
            let err = out.x != x;
            let lb = err && ml_lower_bound_event(&out.x, &x, &llrs);
            Ok(TrialLedger {
                trials: 1,
                block_errors: err as u64,
                ml_lb_errors: lb as u64,
                leaf_visits: out.leaf_visits,
                ..TrialLedger::empty(n, seed)
            })
        })
        .try_reduce(|| TrialLedger::empty(n, seed), |a, b| Ok(a.merge(b)))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SweepChannel {
    /// Grid values are erasure probabilities.
    Bec,
    /// Grid values are Eb/N0 in dB.
    Awgn,
}

pub const SWEEP_HEADER: &str =
    "code,m,r1,r2,kernel,dynamic,channel,param,trials,block_errors,bler,bler_ci_lo,bler_ci_hi,ml_lb_errors,ml_lb_rate,anv";

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct SweepRow {
    pub code: String,
    pub m: usize,
    pub r1: usize,
    pub r2: usize,
    pub kernel: String,
    pub dynamic: bool,
    pub channel: &'static str,
    pub param: f64,
    pub ledger: TrialLedger,
}

impl SweepRow {
    pub fn to_csv(&self) -> String {
        let l = &self.ledger;
        let (lo, hi) = l.bler_ci();
        format!(
            "{},{},{},{},{},{},{},{},{},{},{:.6e},{:.6e},{:.6e},{},{:.6e},{:.6}",
            self.code,
            self.m,
            self.r1,
            self.r2,
            self.kernel,
            self.dynamic,
            self.channel,
            self.param,
            l.trials,
            l.block_errors,
            l.bler(),
            lo,
            hi,
            l.ml_lb_errors,
            l.ml_lb_rate(),
            l.anv()
        )
    }
}

/// One ledger per grid point, every point run with the same seed.
pub fn sweep(
    encoder: &Encoder,
    channel: SweepChannel,
    grid: &[f64],
    trials: u64,
    seed: u64,
    decoder_cfg: &DecoderConfig,
) -> Result<Vec<SweepRow>> {
    let c = encoder.config();
    grid.iter()
        .map(|&p| {
            let (name, ledger) = match channel {
                SweepChannel::Bec => ("bec", simulate_bec(encoder, p, trials, seed)?),
                SweepChannel::Awgn => ("awgn", simulate_awgn(encoder, p, trials, decoder_cfg, seed)?),
            };
            Ok(SweepRow {
                code: encoder.label(),
                m: c.m,
                r1: c.r1,
                r2: c.r2,
                kernel: c.kernel.name().to_string(),
                dynamic: c.dynamic,
                channel: name,
                param: p,
                ledger,
            })
        })
        .collect()
}

pub fn sweep_csv(rows: &[SweepRow]) -> String {
    let mut s = String::from(SWEEP_HEADER);
    s.push('\n');
    for r in rows {
        s.push_str(&r.to_csv());
        s.push('\n');
    }
    s
}

/// Parses `a:b:step` (inclusive), a comma-separated list, or one value.
/// Grid points are rounded to 12 decimals so that `0.1:0.3:0.1` yields
/// exactly `0.1, 0.2, 0.3`.
pub fn parse_grid(s: &str) -> Result<Vec<f64>> {
    let num = |t: &str| {
        t.trim()
            .parse::<f64>()
            .map_err(|_| Error::Parse(format!("bad number '{t}' in grid '{s}'")))
    };
    let parts: Vec<&str> = s.split(':').collect();
    match parts.as_slice() {
        [a, b, step] => {
            let (a, b, step) = (num(a)?, num(b)?, num(step)?);
            if step.is_nan() || step <= 0.0 || b < a {
                return Err(Error::Parse(format!("grid '{s}' needs a <= b and step > 0")));
            }
            let count = ((b - a) / step + 1e-9).floor() as usize;
            Ok((0..=count)
                .map(|i| ((a + i as f64 * step) * 1e12).round() / 1e12)
                .collect())
        }
        [_] if s.trim().is_empty() => Ok(Vec::new()),
        [list] => list.split(',').map(num).collect(),
        _ => Err(Error::Parse(format!("grid '{s}' must be a:b:step, a list, or a value"))),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::codes::Kernel;
    use crate::transform::EncoderConfig;

    #[test]
    fn wilson_examples() {
        let (lo, hi) = wilson_interval(0, 100, Z95);
        assert_eq!(lo, 0.0);
        assert!((hi - 0.0370).abs() < 1e-3);
        let (lo, hi) = wilson_interval(50, 100, Z95);
        assert!((lo - 0.4038).abs() < 1e-3 && (hi - 0.5962).abs() < 1e-3);
    }

    #[test]
    fn sigma_formula() {
        assert!((awgn_sigma2(0.0, 0.5) - 1.0).abs() < 1e-12);
        assert!((awgn_sigma2(10.0, 0.5) - 0.1).abs() < 1e-12);
        assert!(Channel::biawgn(1.0, 0.0).is_err());
        assert!(Channel::bec(1.5).is_err());
    }

    #[test]
    fn grids() {
        assert_eq!(parse_grid("0.1:0.3:0.1").unwrap(), vec![0.1, 0.2, 0.3]);
        assert_eq!(parse_grid("2").unwrap(), vec![2.0]);
        assert_eq!(parse_grid("1,2.5").unwrap(), vec![1.0, 2.5]);
        assert!(parse_grid("").unwrap().is_empty());
        assert!(parse_grid("1:0:1").is_err());
        assert!(parse_grid("a:b").is_err());
    }

    #[test]
    fn llr_stream_is_deterministic() {
        let x = BitVec::from_bits(&[0, 1, 0, 1]);
        let a = bpsk_llr(&x, 0.5, &mut trial_rng(3, 9));
        let b = bpsk_llr(&x, 0.5, &mut trial_rng(3, 9));
        assert_eq!(a, b);
        let tiny = bpsk_llr(&x, 1e-6, &mut trial_rng(3, 9));
        assert!(tiny[0] > 0.0 && tiny[1] < 0.0 && tiny[2] > 0.0 && tiny[3] < 0.0);
    }

    #[test]
    fn bec_edges() {
        let e = Encoder::new(EncoderConfig::new(2, 1, 1, Kernel::A3)).unwrap();
        assert_eq!(simulate_bec(&e, 0.0, 200, 1).unwrap().block_errors, 0);
        assert_eq!(simulate_bec(&e, 1.0, 50, 1).unwrap().block_errors, 50);
    }

    #[test]
    fn empty_sweep() {
        let e = Encoder::new(EncoderConfig::new(2, 1, 1, Kernel::A3)).unwrap();
        let rows = sweep(&e, SweepChannel::Bec, &[], 10, 0, &DecoderConfig::sc()).unwrap();
        assert!(rows.is_empty());
        assert_eq!(sweep_csv(&rows), format!("{SWEEP_HEADER}\n"));
    }
}
