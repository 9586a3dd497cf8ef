use bid_core::codes::{abelian_generator, bid_generator, dimension};
use bid_core::distance::{
    brute_force_min_distance, closed_form_lower, distance_table, exact_w_m_minus_one, exact_w_one,
    random_low_weight_search, recursive_bounds, DistanceBounds, DEFAULT_DIM_BUDGET, REFERENCE_TABLE,
};
use bid_core::{BitVec, CodeSpec, Kernel, WeightSet};

#[test]
fn reproduces_reference_table() {
    for &(m, r1, r2, lo, hi, k) in REFERENCE_TABLE {
        let iv = recursive_bounds(m, r1, r2).unwrap();
        assert_eq!((iv.lower, iv.upper), (lo, hi), "BiD({m},{r1},{r2})");
        assert_eq!(dimension(m, &WeightSet::range(m, r1, r2).unwrap()), k);
    }
    let rows = distance_table(2, 6).unwrap();
    assert_eq!(rows.len(), REFERENCE_TABLE.len());
}

#[test]
fn closed_form_matches_recursion_except_two_codes() {
    let mut bounds = DistanceBounds::new();
    for m in 1..=9 {
        for r1 in 0..=m {
            for r2 in r1..=m {
                let cf = closed_form_lower(m, r1, r2).unwrap();
                let lo = bounds.bounds(m, r1, r2).unwrap().lower;
                if matches!((m, r1, r2), (8, 5, 5) | (9, 5, 6)) {
                    assert!(cf < lo, "({m},{r1},{r2}): {cf} vs {lo}");
                } else {
                    assert_eq!(cf, lo, "({m},{r1},{r2})");
                }
            }
        }
    }
}

#[test]
fn oracle_lies_inside_interval() {
    for m in 1..=3 {
        for r1 in 0..=m {
            for r2 in r1..=m {
                let spec = CodeSpec::bid(m, r1, r2, Kernel::A3).unwrap();
                if spec.dimension() > DEFAULT_DIM_BUDGET {
                    continue;
                }
                let g = bid_generator(&spec).unwrap();
                let (d, _) = brute_force_min_distance(&g, DEFAULT_DIM_BUDGET).unwrap();
                let iv = recursive_bounds(m, r1, r2).unwrap();
                assert!(iv.contains(d as u64), "{} d={d} iv={iv}", spec.label());
                if iv.is_exact() {
                    assert_eq!(iv.lower, d as u64);
                }
            }
        }
    }
}

#[test]
fn berman_families_match_oracle() {
    for m in 1..=3 {
        for r in 0..=m {
            for (r1, r2) in [(0, r), (r, m)] {
                let spec = CodeSpec::bid(m, r1, r2, Kernel::A3).unwrap();
                if spec.dimension() > DEFAULT_DIM_BUDGET || spec.dimension() == 0 {
                    continue;
                }
                let g = bid_generator(&spec).unwrap();
                let (d, _) = brute_force_min_distance(&g, DEFAULT_DIM_BUDGET).unwrap();
                let want = if r1 == 0 { 3usize.pow((m - r2) as u32) } else { 1 << r1 };
                assert_eq!(d, want, "{}", spec.label());
            }
        }
    }
}

#[test]
fn weight_one_extremes_match_oracle() {
    for m in 2..=3 {
        let g = bid_generator(&CodeSpec::bid(m, 1, 1, Kernel::A3).unwrap()).unwrap();
        let k = g.dimension();
        let mut min = usize::MAX;
        let mut max = 0;
        for c in 1u64..1 << k {
            let w = g.encode(&BitVec::from_bools((0..k).map(|i| c >> i & 1 == 1))).weight();
            min = min.min(w);
            max = max.max(w);
        }
        assert_eq!(exact_w_one(m).unwrap(), (min as u64, max as u64));
    }
}

#[test]
fn weight_m_minus_one_matches_oracle() {
    let g = bid_generator(&CodeSpec::bid(3, 2, 2, Kernel::A3).unwrap()).unwrap();
    let (d, _) = brute_force_min_distance(&g, DEFAULT_DIM_BUDGET).unwrap();
    assert_eq!(d as u64, exact_w_m_minus_one(3).unwrap());

    // K = 32 at m = 4: a search witness caps the distance from above and the
    // recursion bounds it from below.
    let spec = CodeSpec::bid(4, 3, 3, Kernel::A3).unwrap();
    let want = exact_w_m_minus_one(4).unwrap();
    let w = random_low_weight_search(&spec, want as usize, 200, 7).unwrap().unwrap();
    assert_eq!(w.weight() as u64, want);
    assert_eq!(recursive_bounds(4, 3, 3).unwrap().lower, want);
}

#[test]
fn low_weight_search_finds_weight_48() {
    let spec = CodeSpec::bid(5, 2, 2, Kernel::A3).unwrap();
    let w = random_low_weight_search(&spec, 48, 2000, 1).unwrap().expect("witness");
    assert_eq!(w.weight(), 48);
    assert!(bid_core::codes::spectral_membership(&w, &spec.weight_set).unwrap());
    assert!(random_low_weight_search(&spec, 47, 50, 2).unwrap().is_none());
}

#[test]
fn low_weight_search_trivial_target() {
    let spec = CodeSpec::bid(3, 1, 2, Kernel::A3).unwrap();
    let w = random_low_weight_search(&spec, 27, 1, 0).unwrap().unwrap();
    assert!(!w.is_zero());
}

#[test]
fn enlarging_the_weight_set_never_raises_the_lower_bound() {
    for &(m, r1, r2, ..) in REFERENCE_TABLE {
        let lo = recursive_bounds(m, r1, r2).unwrap().lower;
        if r1 > 0 {
            assert!(recursive_bounds(m, r1 - 1, r2).unwrap().lower <= lo);
        }
        if r2 < m {
            assert!(recursive_bounds(m, r1, r2 + 1).unwrap().lower <= lo);
        }
    }
}

#[test]
fn odd_even_codes_have_the_stated_row_sums() {
    for m in 1..=6 {
        let g = abelian_generator(m, &WeightSet::even(m), Kernel::A3).unwrap();
        assert_eq!(g.encode(&BitVec::ones(g.dimension())).weight(), 2 * m + 1);
    }
}
