//! Parallel helpers with a sequential fallback.
//!
//! Every helper returns results in input order, so callers see identical
//! output with or without the `parallel` feature. Floating sums use a
//! fixed-shape tree so that the rounding pattern does not depend on thread
//! scheduling.

use num_complex::Complex64;

/// Leaf size of the reduction tree. Changing it changes rounding, so it is fixed.
pub const TREE_LEAF: usize = 256;

/// Maps `f` over `items`, preserving order.
pub fn map<T, R, F>(items: &[T], f: F) -> Vec<R>
where
    T: Sync,
    R: Send,
    F: Fn(&T) -> R + Sync + Send,
{
    #[cfg(feature = "parallel")]
    {
        use rayon::prelude::*;
        items.par_iter().map(f).collect()
    }
    #[cfg(not(feature = "parallel"))]
    {
        items.iter().map(f).collect()
    }
}

/// Maps `f` over `0..n`, preserving order.
pub fn map_range<R, F>(n: usize, f: F) -> Vec<R>
where
    R: Send,
    F: Fn(usize) -> R + Sync + Send,
{
    #[cfg(feature = "parallel")]
    {
        use rayon::prelude::*;
        (0..n).into_par_iter().map(f).collect()
    }
    #[cfg(not(feature = "parallel"))]
    {
        (0..n).map(f).collect()
    }
}

/// Sums `f(i)` for `i in 0..n` with a fixed-shape tree reduction.
///
/// Leaves of [`TREE_LEAF`] consecutive indices are summed left to right, then
/// leaf sums are combined pairwise. The shape depends only on `n`.
pub fn tree_sum<F>(n: usize, f: F) -> Complex64
where
    F: Fn(usize) -> Complex64 + Sync + Send,
{
    let leaves = n.div_ceil(TREE_LEAF);
    let leaf_sum = |b: usize| {
        let lo = b * TREE_LEAF;
        let hi = (lo + TREE_LEAF).min(n);
        let mut acc = Complex64::new(0.0, 0.0);
        for i in lo..hi {
            acc += f(i);
        }
        acc
    };
    let sums = map_range(leaves, leaf_sum);
    pairwise(&sums)
}

fn pairwise(xs: &[Complex64]) -> Complex64 {
    match xs.len() {
        0 => Complex64::new(0.0, 0.0),
        1 => xs[0],
        len => {
            let mid = len / 2;
            pairwise(&xs[..mid]) + pairwise(&xs[mid..])
        }
    }
}

/// Reports whether the parallel backend is compiled in.
pub fn is_parallel() -> bool {
    cfg!(feature = "parallel")
}
