//! Runtime-scaling acceptance: the cycle finder is measured as linear in k
//! and the path finder at most quadratic, via log-log slope fits over median
//! timings. Kept in its own binary, and as a single test, so nothing else
//! competes for the machine while timing.

use gridpath::scaling::{bench_cycles, bench_paths, fit_loglog_slope};

#[test]
fn criteria_5_and_6_runtime_scaling() {
    let cycles = bench_cycles(&[10_000, 100_000, 1_000_000], 5);
    let cycle_slope = fit_loglog_slope(&cycles);
    let biggest = cycles.last().unwrap();
    eprintln!(
        "cycles: {:?} slope {cycle_slope:.3}",
        cycles.iter().map(|s| (s.k, s.median_ns)).collect::<Vec<_>>()
    );
    assert!(
        (0.8..=1.3).contains(&cycle_slope),
        "cycle slope {cycle_slope:.3} outside [0.8, 1.3]"
    );
    assert!(
        biggest.median_ns < 1_000_000_000,
        "k=10^6 took {} ns, expected under 1s",
        biggest.median_ns
    );
    println!(
        "ACCEPTANCE 5 (cycle finder linear in k: slope {cycle_slope:.3} in [0.8, 1.3], k=10^6 in {} ms): PASS",
        biggest.median_ns / 1_000_000
    );

    let paths = bench_paths(&[1_000, 3_000, 10_000], 3);
    let path_slope = fit_loglog_slope(&paths);
    eprintln!(
        "paths: {:?} slope {path_slope:.3}",
        paths.iter().map(|s| (s.k, s.median_ns)).collect::<Vec<_>>()
    );
    assert!(
        path_slope <= 2.3,
        "path slope {path_slope:.3} above 2.3"
    );
    println!("ACCEPTANCE 6 (path finder at most quadratic: slope {path_slope:.3} <= 2.3): PASS");
}
