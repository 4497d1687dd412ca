//! Thin indirection over rayon so every hot loop has a sequential fallback.
//!
//! With the `parallel` feature (default) the `*_auto` helpers dispatch to
//! rayon; without it they run the serial kernels. Both variants are exported
//! unconditionally when the feature is on so benches can compare them.

/// Map `f` over `0..n` and collect results in index order.
pub fn map_indexed_serial<T: Send, F: Fn(usize) -> T + Sync>(n: usize, f: F) -> Vec<T> {
    (0..n).map(f).collect()
}

#[cfg(feature = "parallel")]
pub fn map_indexed_parallel<T: Send, F: Fn(usize) -> T + Sync>(n: usize, f: F) -> Vec<T> {
    use rayon::prelude::*;
    (0..n).into_par_iter().map(f).collect()
}

/// Dispatching map: parallel when the feature is enabled.
#[cfg(feature = "parallel")]
pub fn map_indexed<T: Send, F: Fn(usize) -> T + Sync>(n: usize, f: F) -> Vec<T> {
    map_indexed_parallel(n, f)
}

#[cfg(not(feature = "parallel"))]
pub fn map_indexed<T: Send, F: Fn(usize) -> T + Sync>(n: usize, f: F) -> Vec<T> {
    map_indexed_serial(n, f)
}

/// Sum integer histograms produced per chunk of an index range.
/// Deterministic: integer addition commutes exactly.
pub fn histogram_serial<F>(n: usize, bins: usize, fill: F) -> Vec<u64>
where
    F: Fn(usize, &mut [u64]) + Sync,
{
    let mut h = vec![0u64; bins];
    for i in 0..n {
        fill(i, &mut h);
    }
    h
}

#[cfg(feature = "parallel")]
pub fn histogram_parallel<F>(n: usize, bins: usize, fill: F) -> Vec<u64>
where
    F: Fn(usize, &mut [u64]) + Sync,
{
    use rayon::prelude::*;
    (0..n)
        .into_par_iter()
        .fold(
            || vec![0u64; bins],
            |mut h, i| {
                fill(i, &mut h);
                h
            },
        )
        .reduce(
            || vec![0u64; bins],
            |mut a, b| {
                for (x, y) in a.iter_mut().zip(b) {
                    *x += y;
                }
                a
            },
        )
}

#[cfg(feature = "parallel")]
pub fn histogram<F>(n: usize, bins: usize, fill: F) -> Vec<u64>
where
    F: Fn(usize, &mut [u64]) + Sync,
{
    histogram_parallel(n, bins, fill)
}

#[cfg(not(feature = "parallel"))]
pub fn histogram<F>(n: usize, bins: usize, fill: F) -> Vec<u64>
where
    F: Fn(usize, &mut [u64]) + Sync,
{
    histogram_serial(n, bins, fill)
}
