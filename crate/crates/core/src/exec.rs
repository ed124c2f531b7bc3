//! Sequential or data-parallel evaluation of sweeps.
//!
//! With the `parallel` feature (on by default) [`Execution::Parallel`] fans
//! work out over rayon; without it every sweep runs on the calling thread.
//! Results are always returned in input order, so reports do not depend on
//! the execution mode.

use std::env;

/// Environment variable capping the number of worker threads.
pub const THREADS_ENV: &str = "BISPACE_LAB_THREADS";

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Execution {
    Sequential,
    #[default]
    Parallel,
}

impl Execution {
    /// Whether this build can actually run work in parallel.
    pub fn parallel_available() -> bool {
        cfg!(feature = "parallel")
    }

    /// Applies `f` to every item, preserving order.
    pub fn map<T, R, F>(self, items: &[T], f: F) -> Vec<R>
    where
        T: Sync,
        R: Send,
        F: Fn(&T) -> R + Sync + Send,
    {
        match self {
            Execution::Sequential => items.iter().map(f).collect(),
            Execution::Parallel => parallel_map(items, f),
        }
    }

    /// Runs `op` on a pool sized by [`THREADS_ENV`] when that is set.
    pub fn install<R: Send>(self, op: impl FnOnce() -> R + Send) -> R {
        match (self, thread_cap()) {
            (Execution::Parallel, Some(n)) => install_capped(n, op),
            _ => op(),
        }
    }
}

/// The worker cap from [`THREADS_ENV`], if set to a positive integer.
pub fn thread_cap() -> Option<usize> {
    env::var(THREADS_ENV)
        .ok()
        .and_then(|v| v.trim().parse::<usize>().ok())
        .filter(|&n| n > 0)
}

#[cfg(feature = "parallel")]
fn parallel_map<T, R, F>(items: &[T], f: F) -> Vec<R>
where
    T: Sync,
    R: Send,
    F: Fn(&T) -> R + Sync + Send,
{
    use rayon::prelude::*;
    items.par_iter().map(f).collect()
}

#[cfg(not(feature = "parallel"))]
fn parallel_map<T, R, F>(items: &[T], f: F) -> Vec<R>
where
    T: Sync,
    R: Send,
    F: Fn(&T) -> R + Sync + Send,
{
    items.iter().map(f).collect()
}

#[cfg(feature = "parallel")]
fn install_capped<R: Send>(threads: usize, op: impl FnOnce() -> R + Send) -> R {
    match rayon::ThreadPoolBuilder::new().num_threads(threads).build() {
        Ok(pool) => pool.install(op),
        Err(_) => op(),
    }
}

#[cfg(not(feature = "parallel"))]
fn install_capped<R: Send>(_threads: usize, op: impl FnOnce() -> R + Send) -> R {
    op()
}
