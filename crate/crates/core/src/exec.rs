//! Data-parallel execution helpers.
//!
//! Every helper produces results in index order and reduces them sequentially,
//! so `Sequential` and `Parallel` give bit-identical floating-point output.
//! Without the `parallel` feature, `Parallel` runs on the calling thread.

/// How the data-parallel inner loops are executed.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Execution {
    Sequential,
    #[default]
    Parallel,
}

impl Execution {
    /// True if this build can actually run work on a thread pool.
    pub fn is_parallel_available() -> bool {
        cfg!(feature = "parallel")
    }
}

/// Map `f` over `0..len`, collecting the results in index order.
pub fn map_indexed<R, F>(exec: Execution, len: usize, f: F) -> Vec<R>
where
    R: Send,
    F: Fn(usize) -> R + Sync + Send,
{
    match exec {
        Execution::Sequential => (0..len).map(f).collect(),
        Execution::Parallel => par_map(len, f),
    }
}

/// The first (lowest-index) `Some` produced by `f` over `0..len`.
pub fn find_map_first<R, F>(exec: Execution, len: usize, f: F) -> Option<R>
where
    R: Send,
    F: Fn(usize) -> Option<R> + Sync + Send,
{
    match exec {
        Execution::Sequential => (0..len).find_map(f),
        Execution::Parallel => par_find_map_first(len, f),
    }
}

#[cfg(feature = "parallel")]
fn par_map<R, F>(len: usize, f: F) -> Vec<R>
where
    R: Send,
    F: Fn(usize) -> R + Sync + Send,
{
    use rayon::prelude::*;
    (0..len).into_par_iter().map(f).collect()
}

#[cfg(not(feature = "parallel"))]
fn par_map<R, F>(len: usize, f: F) -> Vec<R>
where
    R: Send,
    F: Fn(usize) -> R + Sync + Send,
{
    (0..len).map(f).collect()
}

#[cfg(feature = "parallel")]
fn par_find_map_first<R, F>(len: usize, f: F) -> Option<R>
where
    R: Send,
    F: Fn(usize) -> Option<R> + Sync + Send,
{
    use rayon::prelude::*;
    (0..len).into_par_iter().find_map_first(f)
}

#[cfg(not(feature = "parallel"))]
fn par_find_map_first<R, F>(len: usize, f: F) -> Option<R>
where
    R: Send,
    F: Fn(usize) -> Option<R> + Sync + Send,
{
    (0..len).find_map(f)
}
