//! Execution helpers for the data-parallel hot loops.
//!
//! With the `parallel` feature (the default) the loops fan out over rayon;
//! without it they run on the calling thread. Each output element is
//! produced by exactly one closure call with a fixed internal operation
//! order, so the two modes return bit-identical results and the parallel
//! mode is deterministic regardless of thread count.

/// Problems smaller than this stay sequential even in parallel mode; the
/// per-task overhead would dominate the arithmetic.
#[cfg(feature = "parallel")]
const PAR_MIN_LEN: usize = 4096;

/// Maps `f` over `0..n`, collecting the results in index order.
#[cfg(feature = "parallel")]
pub(crate) fn map_indices<T, F>(n: usize, f: F) -> Vec<T>
where
    T: Send,
    F: Fn(usize) -> T + Sync + Send,
{
    use rayon::prelude::*;
    if n >= PAR_MIN_LEN {
        (0..n).into_par_iter().map(f).collect()
    } else {
        (0..n).map(f).collect()
    }
}

/// Maps `f` over `0..n`, collecting the results in index order.
#[cfg(not(feature = "parallel"))]
pub(crate) fn map_indices<T, F>(n: usize, f: F) -> Vec<T>
where
    T: Send,
    F: Fn(usize) -> T + Sync + Send,
{
    (0..n).map(f).collect()
}

/// Applies `f` to consecutive chunks of `block_len` elements. Blocks are
/// disjoint, so the apply order cannot affect the result.
#[cfg(feature = "parallel")]
pub(crate) fn for_each_block<T, F>(data: &mut [T], block_len: usize, f: F)
where
    T: Send,
    F: Fn(&mut [T]) + Sync + Send,
{
    use rayon::prelude::*;
    if data.len() >= PAR_MIN_LEN && data.len() / block_len >= 2 {
        data.par_chunks_mut(block_len).for_each(f);
    } else {
        data.chunks_mut(block_len).for_each(f);
    }
}

/// Applies `f` to consecutive chunks of `block_len` elements.
#[cfg(not(feature = "parallel"))]
pub(crate) fn for_each_block<T, F>(data: &mut [T], block_len: usize, f: F)
where
    T: Send,
    F: Fn(&mut [T]) + Sync + Send,
{
    data.chunks_mut(block_len).for_each(f);
}
