//! Thin switch between rayon-backed and sequential iteration. With the
//! `parallel` feature (the default) the heavy verification loops fan out
//! over a thread pool; without it they run in plain iterators.

#[cfg(feature = "parallel")]
use rayon::prelude::*;

/// Applies `f` to every index and returns the first violation, if any.
/// Under rayon the first here means the smallest index that fails.
#[cfg(feature = "parallel")]
pub(crate) fn find_violation<V, F>(n: usize, f: F) -> Option<V>
where
    V: Send,
    F: Fn(usize) -> Option<V> + Sync + Send,
{
    (0..n).into_par_iter().find_map_first(f)
}

#[cfg(not(feature = "parallel"))]
pub(crate) fn find_violation<V, F>(n: usize, f: F) -> Option<V>
where
    F: Fn(usize) -> Option<V>,
{
    (0..n).find_map(f)
}

/// Maps a workload over all items, preserving order.
#[cfg(feature = "parallel")]
pub(crate) fn map_items<T, U, F>(items: Vec<T>, f: F) -> Vec<U>
where
    T: Send,
    U: Send,
    F: Fn(T) -> U + Sync + Send,
{
    items.into_par_iter().map(f).collect()
}

#[cfg(not(feature = "parallel"))]
pub(crate) fn map_items<T, U, F>(items: Vec<T>, f: F) -> Vec<U>
where
    F: Fn(T) -> U,
{
    items.into_iter().map(f).collect()
}
