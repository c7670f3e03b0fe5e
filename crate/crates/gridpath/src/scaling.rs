//! Runtime-scaling measurements: median timings over the finder entry
//! points and a log-log slope fit, shared by the CLI bench command and the
//! scaling acceptance tests.

use crate::cycles::find_cycle;
use crate::grid::{RectGrid, Vertex};
use crate::paths::find_path;
use std::time::Instant;

#[derive(Debug, Clone, Copy)]
pub struct Sample {
    pub k: usize,
    pub median_ns: u128,
    pub min_ns: u128,
    pub max_ns: u128,
}

pub fn measure<F: FnMut()>(reps: usize, mut f: F) -> (u128, u128, u128) {
    let mut times: Vec<u128> = (0..reps)
        .map(|_| {
            let start = Instant::now();
            f();
            start.elapsed().as_nanos()
        })
        .collect();
    times.sort_unstable();
    (times[times.len() / 2], times[0], times[times.len() - 1])
}

/// Least-squares slope of ln(time) against ln(k).
pub fn fit_loglog_slope(samples: &[Sample]) -> f64 {
    let n = samples.len() as f64;
    let xs: Vec<f64> = samples.iter().map(|s| (s.k as f64).ln()).collect();
    let ys: Vec<f64> = samples.iter().map(|s| (s.median_ns as f64).ln()).collect();
    let mx = xs.iter().sum::<f64>() / n;
    let my = ys.iter().sum::<f64>() / n;
    let num: f64 = xs.iter().zip(&ys).map(|(x, y)| (x - mx) * (y - my)).sum();
    let den: f64 = xs.iter().map(|x| (x - mx) * (x - mx)).sum();
    num / den
}

/// Time `find_cycle` for each k inside a huge ambient grid.
pub fn bench_cycles(ks: &[usize], reps: usize) -> Vec<Sample> {
    let grid = RectGrid::new(4_000_000, 4_000_000);
    ks.iter()
        .map(|&k| {
            let (median_ns, min_ns, max_ns) = measure(reps, || {
                let c = find_cycle(&grid, k).expect("cycle exists");
                assert_eq!(c.len(), k);
            });
            Sample {
                k,
                median_ns,
                min_ns,
                max_ns,
            }
        })
        .collect()
}

/// Time `find_path` for each k with endpoints placed diagonally about 0.45k
/// apart in each axis, the placement that forces the block-plus-tail
/// construction and a shrink budget proportional to k.
pub fn bench_paths(ks: &[usize], reps: usize) -> Vec<Sample> {
    let grid = RectGrid::new(1_000_000, 1_000_000);
    ks.iter()
        .map(|&k| {
            let d = (k as i64 * 45) / 100;
            let s = Vertex::new(1000, 1000);
            let t = Vertex::new(1000 + d, 1000 + d);
            let l = crate::grid::shortest_len(s, t);
            let k_adj = if (k - l).is_multiple_of(2) { k } else { k + 1 };
            let (median_ns, min_ns, max_ns) = measure(reps, || {
                let p = find_path(&grid, s, t, k_adj).expect("path exists");
                assert_eq!(p.len(), k_adj);
            });
            Sample {
                k: k_adj,
                median_ns,
                min_ns,
                max_ns,
            }
        })
        .collect()
}

pub fn csv(samples: &[Sample]) -> String {
    let mut out = String::from("k,median_ns,min_ns,max_ns\n");
    for s in samples {
        out.push_str(&format!(
            "{},{},{},{}\n",
            s.k, s.median_ns, s.min_ns, s.max_ns
        ));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn slope_of_linear_data() {
        let samples: Vec<Sample> = [(10usize, 1000u128), (100, 10_000), (1000, 100_000)]
            .iter()
            .map(|&(k, t)| Sample {
                k,
                median_ns: t,
                min_ns: t,
                max_ns: t,
            })
            .collect();
        assert!((fit_loglog_slope(&samples) - 1.0).abs() < 1e-9);
    }
}
