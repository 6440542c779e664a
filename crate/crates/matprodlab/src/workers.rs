//! Tiny chunked worker helper for the embarrassingly parallel sweeps.
//!
//! The worker count is capped by the `MATPRODLAB_THREADS` environment
//! variable; sweeps stay deterministic because every chunk result is
//! merged in index order.

use std::num::NonZeroUsize;

pub fn worker_count() -> usize {
    let avail = std::thread::available_parallelism()
        .map(NonZeroUsize::get)
        .unwrap_or(1);
    match std::env::var("MATPRODLAB_THREADS")
        .ok()
        .and_then(|s| s.parse::<usize>().ok())
    {
        Some(n) if n >= 1 => n.min(avail),
        _ => avail,
    }
}

/// Maps `f` over `0..n` on up to [`worker_count`] threads and returns the
/// results in index order.
pub fn par_map<T, F>(n: usize, f: F) -> Vec<T>
where
    T: Send,
    F: Fn(usize) -> T + Sync,
{
    let threads = worker_count().min(n.max(1));
    if threads <= 1 || n <= 1 {
        return (0..n).map(f).collect();
    }
    let mut out: Vec<Option<T>> = (0..n).map(|_| None).collect();
    let chunk = n.div_ceil(threads);
    std::thread::scope(|scope| {
        let fref = &f;
        let mut handles = Vec::new();
        for (t, slot) in out.chunks_mut(chunk).enumerate() {
            let start = t * chunk;
            handles.push(scope.spawn(move || {
                for (i, s) in slot.iter_mut().enumerate() {
                    *s = Some(fref(start + i));
                }
            }));
        }
        for h in handles {
            h.join().expect("worker panicked");
        }
    });
    out.into_iter().map(|x| x.unwrap()).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn par_map_preserves_order() {
        let v = par_map(100, |i| i * i);
        assert_eq!(v, (0..100).map(|i| i * i).collect::<Vec<_>>());
    }
}
