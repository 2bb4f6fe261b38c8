//! Shared-memory worker pool.
//!
//! Subdomain solves, cavity retriangulation, and row-wise kernels run on a
//! process-wide rayon pool. The pool size is taken from the `SCHWARZ_WORKERS`
//! environment variable when set, otherwise from the available parallelism.
//! Every parallel section is written so the result is identical to serial
//! execution (disjoint writes or deterministic merges).

use std::sync::OnceLock;

static POOL: OnceLock<rayon::ThreadPool> = OnceLock::new();

/// Number of workers requested via `SCHWARZ_WORKERS`, if any.
fn configured_workers() -> Option<usize> {
    std::env::var("SCHWARZ_WORKERS")
        .ok()
        .and_then(|v| v.parse::<usize>().ok())
        .filter(|&n| n > 0)
}

/// The process-wide worker pool, created on first use.
pub fn pool() -> &'static rayon::ThreadPool {
    POOL.get_or_init(|| {
        let threads = configured_workers().unwrap_or_else(|| {
            std::thread::available_parallelism()
                .map(|n| n.get())
                .unwrap_or(1)
        });
        rayon::ThreadPoolBuilder::new()
            .num_threads(threads)
            .build()
            .expect("failed to build worker pool")
    })
}

/// Runs `f` inside the worker pool so nested rayon iterators use it.
pub fn install<R: Send>(f: impl FnOnce() -> R + Send) -> R {
    pool().install(f)
}

#[cfg(test)]
mod tests {
    use super::*;
    use rayon::prelude::*;

    #[test]
    fn pool_runs_parallel_iterators() {
        let sum: u64 = install(|| (0..1000u64).into_par_iter().sum());
        assert_eq!(sum, 499_500);
    }
}
