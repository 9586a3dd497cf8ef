use bid_core::codes::bid_generator;
use bid_core::decode::DecoderConfig;
use bid_core::sim::{
    awgn_sigma2, bpsk_llr, parse_grid, simulate_awgn, simulate_bec, simulate_bec_random_codewords, sweep, sweep_csv,
    trial_rng, SweepChannel,
};
use bid_core::{BitVec, CodeSpec, Encoder, EncoderConfig, Kernel};

fn encoder(m: usize, r1: usize, r2: usize) -> Encoder {
    Encoder::new(EncoderConfig::new(m, r1, r2, Kernel::A3Prime)).unwrap()
}

#[test]
fn llr_mean_is_two_over_sigma_squared() {
    let sigma2 = awgn_sigma2(1.0, 0.5);
    let n = 100_000;
    let x = BitVec::zeros(n);
    let llrs = bpsk_llr(&x, sigma2, &mut trial_rng(11, 0));
    let mean = llrs.iter().sum::<f64>() / n as f64;
    // Var(2y/σ²) = 4/σ².
    let se = (4.0 / sigma2 / n as f64).sqrt();
    assert!(
        (mean - 2.0 / sigma2).abs() < 3.0 * se,
        "mean {mean}, want {}",
        2.0 / sigma2
    );
}

#[test]
fn repetition_code_bec_matches_eps_to_the_ninth() {
    let e = encoder(2, 0, 0);
    let l = simulate_bec(&e, 0.5, 200_000, 3).unwrap();
    let (lo, hi) = l.bler_ci();
    let p = 0.5f64.powi(9);
    assert!(lo <= p && p <= hi, "{lo} {hi}");
}

#[test]
fn all_zero_and_random_codewords_agree_on_the_bec() {
    let e = encoder(3, 1, 2);
    let a = simulate_bec(&e, 0.35, 20_000, 1).unwrap();
    let b = simulate_bec_random_codewords(&e, 0.35, 20_000, 2).unwrap();
    let (alo, ahi) = a.bler_ci();
    let (blo, bhi) = b.bler_ci();
    assert!(alo <= bhi && blo <= ahi, "[{alo},{ahi}] vs [{blo},{bhi}]");
    assert!(a.block_errors > 100);
}

fn min_weight_count(spec: &CodeSpec) -> (usize, u64) {
    let g = bid_generator(spec).unwrap();
    let k = g.dimension();
    let mut cur = BitVec::zeros(g.length());
    let (mut d, mut count) = (usize::MAX, 0);
    for step in 1u64..1 << k {
        cur.xor_assign(&g.rows()[step.trailing_zeros() as usize]);
        let w = cur.weight();
        if w < d {
            (d, count) = (w, 0);
        }
        count += (w == d) as u64;
    }
    (d, count)
}

#[test]
fn dual_berman_bler_follows_the_dominant_term() {
    for (m, r2) in [(2, 1), (3, 2), (2, 0)] {
        let spec = CodeSpec::bid(m, 0, r2, Kernel::A3).unwrap();
        let (d, a) = min_weight_count(&spec);
        assert_eq!(d, 3usize.pow((m - r2) as u32));
        let eps = (3e-3 / a as f64).powf(1.0 / d as f64);
        let l = simulate_bec(&encoder(m, 0, r2), eps, 200_000, 5).unwrap();
        let est = a as f64 * eps.powi(d as i32);
        let ratio = l.bler() / est;
        assert!(l.bler() < 1e-2);
        assert!(
            (1.0 / 3.0..=3.0).contains(&ratio),
            "({m},0,{r2}): bler {} vs {est}",
            l.bler()
        );
    }
}

#[test]
fn high_snr_has_no_errors() {
    let l = simulate_awgn(&encoder(2, 1, 1), 12.0, 10_000, &DecoderConfig::sc(), 1).unwrap();
    assert_eq!(l.block_errors, 0);
    assert_eq!(l.anv(), 1.0);
}

#[test]
fn ledgers_are_consistent() {
    let e = Encoder::new(EncoderConfig::new(3, 1, 2, Kernel::A3Prime).dynamic(2)).unwrap();
    for cfg in [DecoderConfig::sc(), DecoderConfig::scos(f64::MAX, 20)] {
        let l = simulate_awgn(&e, 0.0, 2000, &cfg, 4).unwrap();
        assert!(l.ml_lb_errors <= l.block_errors && l.block_errors <= l.trials);
        assert!(l.block_errors > 0);
    }
}

#[test]
fn results_do_not_depend_on_thread_count() {
    let e = Encoder::new(EncoderConfig::new(3, 1, 2, Kernel::A3Prime).dynamic(2)).unwrap();
    let run = |threads| {
        let pool = rayon::ThreadPoolBuilder::new().num_threads(threads).build().unwrap();
        pool.install(|| {
            (
                simulate_awgn(&e, 1.0, 500, &DecoderConfig::scos(f64::MAX, 10), 9).unwrap(),
                simulate_bec(&e, 0.4, 500, 9).unwrap(),
            )
        })
    };
    assert_eq!(run(1), run(4));
}

#[test]
fn sweeps_are_reproducible_and_nested() {
    let e = encoder(3, 1, 2);
    let grid = parse_grid("0.2:0.6:0.1").unwrap();
    let a = sweep(&e, SweepChannel::Bec, &grid, 2000, 7, &DecoderConfig::sc()).unwrap();
    let b = sweep(&e, SweepChannel::Bec, &grid, 2000, 7, &DecoderConfig::sc()).unwrap();
    assert_eq!(sweep_csv(&a), sweep_csv(&b));
    // Same seed at every point: erasure sets grow with epsilon.
    assert!(a
        .windows(2)
        .all(|w| w[0].ledger.block_errors <= w[1].ledger.block_errors));
    let line = sweep_csv(&a).lines().nth(1).unwrap().to_string();
    assert!(line.starts_with("BiD(3,1,2),3,1,2,A3p,false,bec,0.2,2000,"), "{line}");
}
