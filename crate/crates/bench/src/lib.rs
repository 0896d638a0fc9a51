//! Benchmark fixtures for `quadrank-core`; see `benches/`.

use quadrank_core::quad::{verify_b1_recurrence_on, verify_tilde_recurrence};
use quadrank_core::{gn_pair, quad_class};

/// Largest family parameter exercised by the sweep benchmarks.
pub const SWEEP_T_MAX: u32 = 8;

/// Runs both recurrence sweeps up to `t_max` and returns the number of
/// passing checks.
pub fn recurrence_sweep(t_max: u32) -> usize {
    let mut passed = 0;
    for t in 0..=t_max {
        let (_, n) = gn_pair(t);
        for s in 1..=n {
            passed += (0..s).filter(|&i| verify_tilde_recurrence(i, s, t).pass).count();
        }
        let class = quad_class(t).expect("t in range");
        passed += (1..=n).filter(|&s| verify_b1_recurrence_on(&class, s, t).pass).count();
    }
    passed
}
