use bid_core::verify::*;

#[test]
fn default_suites_pass() {
    for r in run_default_suites(7).unwrap() {
        println!("{r}");
        assert!(r.passed, "{r}");
    }
}

#[test]
fn suites_are_seed_independent() {
    for seed in [1, 2] {
        for r in [
            check_bec_consistency(2, 200, seed),
            check_ml_search(50, 0.0, seed),
            check_roundtrips(3, 5, seed),
        ] {
            assert!(r.passed, "seed {seed}: {r}");
        }
    }
}
