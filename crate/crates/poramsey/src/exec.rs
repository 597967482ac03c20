//! Scheduling of sharded verification sweeps.
//!
//! Sweeps split their search space into deterministic, disjoint shards and
//! combine per-shard results in shard order, so the outcome is identical
//! under any scheduling. With the `parallel` feature (default) shards run
//! on the rayon pool; without it everything degrades to sequential
//! iteration.

#[cfg(feature = "parallel")]
use rayon::prelude::*;

/// Shard scheduling policy. `Parallel` falls back to sequential execution
/// when the crate is built without the `parallel` feature.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Exec {
    Sequential,
    Parallel,
}

impl Default for Exec {
    fn default() -> Self {
        if cfg!(feature = "parallel") {
            Exec::Parallel
        } else {
            Exec::Sequential
        }
    }
}

/// Applies `f` to every shard, returning results in shard order.
pub fn map_shards<S, R, F>(exec: Exec, shards: &[S], f: F) -> Vec<R>
where
    S: Sync,
    R: Send,
    F: Fn(&S) -> R + Sync + Send,
{
    match exec {
        Exec::Sequential => shards.iter().map(f).collect(),
        #[cfg(feature = "parallel")]
        Exec::Parallel => shards.par_iter().map(f).collect(),
        #[cfg(not(feature = "parallel"))]
        Exec::Parallel => shards.iter().map(f).collect(),
    }
}

/// Sizes the global worker pool; later calls and zero are ignored.
/// Without the `parallel` feature this is a no-op.
pub fn set_worker_count(workers: usize) {
    #[cfg(feature = "parallel")]
    if workers > 0 {
        let _ = rayon::ThreadPoolBuilder::new()
            .num_threads(workers)
            .build_global();
    }
    #[cfg(not(feature = "parallel"))]
    let _ = workers;
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn results_keep_shard_order() {
        let shards: Vec<u64> = (0..100).collect();
        let seq = map_shards(Exec::Sequential, &shards, |&s| s * s);
        let par = map_shards(Exec::Parallel, &shards, |&s| s * s);
        assert_eq!(seq, par);
        assert_eq!(seq[7], 49);
    }
}
