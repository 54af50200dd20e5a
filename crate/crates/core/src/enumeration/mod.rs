//! Bounded exhaustive search: solution sets, fundamental-domain members,
//! orbit graphs and the brute-force verification that ties them together.
//!
//! Searches split their prefix space into independent chunks and run them on
//! the current rayon pool; results are merged into sorted order, so output
//! never depends on the worker count.

pub mod compat;
pub mod fd;
pub mod graph;
pub mod solutions;
pub mod verify;

/// Runs `f` on a dedicated pool of `workers` threads (`0` = rayon's global pool).
pub fn with_workers<R, F>(workers: usize, f: F) -> R
where
    R: Send,
    F: FnOnce() -> R + Send,
{
    if workers == 0 {
        return f();
    }
    match rayon::ThreadPoolBuilder::new().num_threads(workers).build() {
        Ok(pool) => pool.install(f),
        Err(err) => {
            log::warn!("could not build a {workers}-thread pool ({err}); using the global pool");
            f()
        }
    }
}
