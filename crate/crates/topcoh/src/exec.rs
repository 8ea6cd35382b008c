//! Data-parallel execution helpers.
//!
//! Independent instance evaluations and the per-level Ext computations of the
//! oracle are embarrassingly parallel. With the `parallel` feature enabled
//! (the default) they run on the rayon pool; a process-wide switch falls back
//! to sequential execution so both code paths can be compared in benchmarks
//! and forced from the CLI with `--jobs 1`. Without the feature everything is
//! sequential.

use std::sync::atomic::{AtomicBool, Ordering};

static PARALLEL: AtomicBool = AtomicBool::new(cfg!(feature = "parallel"));

/// Globally enable or disable rayon dispatch. No-op without the feature.
pub fn set_parallel(enabled: bool) {
    PARALLEL.store(enabled && cfg!(feature = "parallel"), Ordering::Relaxed);
}

pub fn parallel_enabled() -> bool {
    PARALLEL.load(Ordering::Relaxed)
}

/// Map `f` over `items`, in parallel when enabled. Output order matches
/// input order either way.
pub fn par_map<T, U, F>(items: Vec<T>, f: F) -> Vec<U>
where
    T: Send,
    U: Send,
    F: Fn(T) -> U + Sync + Send,
{
    #[cfg(feature = "parallel")]
    {
        if parallel_enabled() {
            use rayon::prelude::*;
            return items.into_par_iter().map(f).collect();
        }
    }
    items.into_iter().map(f).collect()
}

/// Indexed variant of [`par_map`].
pub fn par_map_indexed<T, U, F>(items: Vec<T>, f: F) -> Vec<U>
where
    T: Send,
    U: Send,
    F: Fn(usize, T) -> U + Sync + Send,
{
    #[cfg(feature = "parallel")]
    {
        if parallel_enabled() {
            use rayon::prelude::*;
            return items.into_par_iter().enumerate().map(|(i, t)| f(i, t)).collect();
        }
    }
    items.into_iter().enumerate().map(|(i, t)| f(i, t)).collect()
}
