//! Work pool sizing. Rows are always collected in config order, so the pool
//! size never affects report contents.

use anyhow::Context;

pub const THREADS_ENV: &str = "ADHC_LAB_THREADS";

/// Pool size from `ADHC_LAB_THREADS`, or `None` for rayon's default.
pub fn threads_from_env() -> anyhow::Result<Option<usize>> {
    match std::env::var(THREADS_ENV) {
        Ok(v) => {
            let n: usize = v.trim().parse().with_context(|| format!("{THREADS_ENV}={v:?} is not a thread count"))?;
            anyhow::ensure!(n > 0, "{THREADS_ENV} must be positive");
            Ok(Some(n))
        }
        Err(_) => Ok(None),
    }
}

/// Runs `f` inside a dedicated pool of `threads` workers (rayon's default
/// when `None`).
pub fn run_in_pool<T: Send>(threads: Option<usize>, f: impl FnOnce() -> T + Send) -> anyhow::Result<T> {
    let mut builder = rayon::ThreadPoolBuilder::new();
    if let Some(n) = threads {
        builder = builder.num_threads(n);
    }
    let pool = builder.build()?;
    Ok(pool.install(f))
}

/// Number of workers in the current pool.
pub fn current_threads() -> usize {
    rayon::current_num_threads()
}
