use bid_bench::{dbid_5_2_2, lcg_bits, noisy_llrs};
use bid_core::codes::{kernel_power, Kernel};
use bid_core::decode::{ordered_search_decode, sc_decode, ErasureRankTester};
use bid_core::distance::DistanceBounds;
use bid_core::field::{dft, dft_fast};
use bid_core::transform::polar_transform;
use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use std::hint::black_box;

fn bench_dft(c: &mut Criterion) {
    let mut g = c.benchmark_group("dft");
    for m in [3, 5] {
        let a = lcg_bits(3usize.pow(m as u32), 1);
        g.bench_with_input(BenchmarkId::new("direct", m), &a, |b, a| b.iter(|| dft(black_box(a))));
        g.bench_with_input(BenchmarkId::new("radix3", m), &a, |b, a| {
            b.iter(|| dft_fast(black_box(a)))
        });
    }
    g.finish();
}

fn bench_transform(c: &mut Criterion) {
    c.bench_function("kernel_power m=5", |b| {
        b.iter(|| kernel_power(Kernel::A3, black_box(5)))
    });
    let u = lcg_bits(729, 2);
    c.bench_function("polar_transform m=6", |b| {
        b.iter(|| polar_transform(black_box(&u), Kernel::A3Prime, 6))
    });
}

fn bench_bounds(c: &mut Criterion) {
    c.bench_function("recursive_bounds m<=9", |b| {
        b.iter(|| {
            let mut d = DistanceBounds::new();
            for m in 1..=9 {
                for r1 in 0..=m {
                    for r2 in r1..=m {
                        black_box(d.bounds(m, r1, r2).unwrap());
                    }
                }
            }
        })
    });
}

fn bench_decoders(c: &mut Criterion) {
    let e = dbid_5_2_2();
    let llrs = noisy_llrs(&e, 3);
    c.bench_function("sc dBiD(5,2,2)", |b| {
        b.iter(|| sc_decode(black_box(&llrs), e.frozen(), e.pretransform(), false).unwrap())
    });
    c.bench_function("ordered search eta=100 dBiD(5,2,2)", |b| {
        b.iter(|| ordered_search_decode(black_box(&llrs), e.frozen(), e.pretransform(), f64::MAX, 100).unwrap())
    });
    let tester = ErasureRankTester::new(&e.generator_matrix());
    let erased: Vec<bool> = lcg_bits(243, 5).iter().collect();
    c.bench_function("bec rank test dBiD(5,2,2)", |b| {
        b.iter(|| tester.is_ambiguous(black_box(&erased)))
    });
}

criterion_group!(benches, bench_dft, bench_transform, bench_bounds, bench_decoders);
criterion_main!(benches);
