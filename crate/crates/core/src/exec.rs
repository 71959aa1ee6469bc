//! Execution strategy for the data-parallel loops (grid evaluation, box
//! products, oracle sweeps). Without the `parallel` feature every strategy
//! runs sequentially; results are identical either way.

#[cfg(feature = "parallel")]
use rayon::prelude::*;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum Execution {
    Sequential,
    #[default]
    Parallel,
}

impl Execution {
    pub fn is_parallel(self) -> bool {
        cfg!(feature = "parallel") && self == Execution::Parallel
    }
}

/// `(0..n).map(f).collect()`, order preserved.
pub fn map_range<T, F>(exec: Execution, n: usize, f: F) -> Vec<T>
where
    T: Send,
    F: Fn(usize) -> T + Sync + Send,
{
    #[cfg(feature = "parallel")]
    if exec.is_parallel() {
        return (0..n).into_par_iter().map(f).collect();
    }
    let _ = exec;
    (0..n).map(f).collect()
}

/// Folds chunks of `0..n` independently and returns the per-chunk results in
/// chunk order, so callers can combine them deterministically.
pub fn fold_chunks<T, F>(exec: Execution, n: u64, chunk: u64, f: F) -> Vec<T>
where
    T: Send,
    F: Fn(std::ops::Range<u64>) -> T + Sync + Send,
{
    let chunk = chunk.max(1);
    let chunks = n.div_ceil(chunk) as usize;
    map_range(exec, chunks, |c| {
        let start = c as u64 * chunk;
        f(start..(start + chunk).min(n))
    })
}
