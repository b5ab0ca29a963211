//! Dynamic programs over the Barnes–Savage partition function.
//!
//! - [`ragged`]: the memory-optimized rolling-slab fill and the
//!   all-`L(i)` streaming counter;
//! - [`baseline`]: the rectangular-table computation of a single `L(n)`;
//! - [`fourvar`]: memoized four-variate `P(N,k,l,s)` for point queries,
//!   `G(N)` and the direct degree-sequence count;
//! - [`trivariate`]: the three-variate `P(N,k,l)` recurrence.

pub mod baseline;
pub mod fourvar;
pub mod ragged;
pub mod trivariate;

pub use baseline::count_l_baseline;
pub use fourvar::{d_direct, g_count, PnklsMemo};
pub use ragged::{count_all_improved, fill_improved, RaggedSlabTable};
pub use trivariate::p_nkl_dp;

use crate::error::{Error, Result};

/// Largest usable N index in the symmetric-half table for target n:
/// floor((n^2+3)/2) - 2n, the tightened (n-1)(n-3)/2 bound.
pub(crate) fn n_cap(n: u64) -> u64 {
    (n * n + 3) / 2 - 2 * n
}

/// Best-effort available-memory probe (Linux). `None` when unknown.
fn available_memory_bytes() -> Option<u64> {
    let text = std::fs::read_to_string("/proc/meminfo").ok()?;
    for line in text.lines() {
        if let Some(rest) = line.strip_prefix("MemAvailable:") {
            let kb: u64 = rest.trim().trim_end_matches(" kB").trim().parse().ok()?;
            return Some(kb * 1024);
        }
    }
    None
}

/// Refuse a table whose estimated footprint cannot fit. Propagating a
/// resource failure is always preferred over an allocation abort.
pub(crate) fn check_table_fits(cells: u128, what: &str) -> Result<()> {
    // Rough per-cell estimate: 24-byte big-int header plus amortized
    // heap for populated limbs.
    const BYTES_PER_CELL: u128 = 40;
    const HEADROOM: u64 = 256 << 20;
    let need = cells.saturating_mul(BYTES_PER_CELL);
    if let Some(avail) = available_memory_bytes() {
        if need + HEADROOM as u128 > avail as u128 {
            return Err(Error::ResourceLimit(format!(
                "{what} needs {cells} exact-integer cells (~{} MiB); only ~{} MiB available",
                need >> 20,
                avail >> 20
            )));
        }
    }
    Ok(())
}

/// Run `f` on a dedicated thread pool of the given size (0 = default
/// parallelism). Exact integer arithmetic keeps results bit-identical
/// for every pool size.
pub(crate) fn with_pool<T: Send>(threads: usize, f: impl FnOnce() -> T + Send) -> Result<T> {
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(threads)
        .build()
        .map_err(|e| Error::ResourceLimit(format!("thread pool: {e}")))?;
    Ok(pool.install(f))
}
