//! C ABI over the counting engine.
//!
//! Conventions: every function returns a status code (`DEGCOUNT_OK` on
//! success); results come back through out-pointers. Counts are decimal
//! strings because they overflow every fixed-width integer type early.
//! Strings are released with [`degcount_string_free`], reports with
//! [`degcount_report_free`]. The header `include/degcount.h` mirrors
//! this interface and is maintained by hand.

use std::ffi::{c_char, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};

use degcount::dp;
use degcount::error::Error;
use degcount::estimator;
use degcount::report::CountReport;

pub const DEGCOUNT_OK: i32 = 0;
pub const DEGCOUNT_EINVAL: i32 = 1;
pub const DEGCOUNT_ERESOURCE: i32 = 2;
pub const DEGCOUNT_EEMPTY: i32 = 3;
pub const DEGCOUNT_EINTERNAL: i32 = 4;
pub const DEGCOUNT_ENULL: i32 = 5;
pub const DEGCOUNT_ERANGE: i32 = 6;

fn status_of(e: &Error) -> i32 {
    match e {
        Error::InvalidArgument(_) => DEGCOUNT_EINVAL,
        Error::ResourceLimit(_) => DEGCOUNT_ERESOURCE,
        Error::EmptySet(_) => DEGCOUNT_EEMPTY,
        Error::Inconsistent(_) => DEGCOUNT_EINTERNAL,
    }
}

/// Opaque result of a counting run.
pub struct DegcountReport {
    inner: CountReport,
}

fn write_string(out: *mut *mut c_char, text: String) -> i32 {
    // Counts are pure decimal, never interior NUL.
    let Ok(c) = CString::new(text) else {
        return DEGCOUNT_EINTERNAL;
    };
    unsafe { *out = c.into_raw() };
    DEGCOUNT_OK
}

fn guarded(f: impl FnOnce() -> i32) -> i32 {
    catch_unwind(AssertUnwindSafe(f)).unwrap_or(DEGCOUNT_EINTERNAL)
}

/// Count L, H, D, D0 for every length 2..=n. `threads` 0 means all
/// cores. On success `*out` owns a report.
///
/// # Safety
/// `out` must be a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn degcount_count(n: u32, threads: usize, out: *mut *mut DegcountReport) -> i32 {
    if out.is_null() {
        return DEGCOUNT_ENULL;
    }
    guarded(|| match dp::count_all_improved(n, threads) {
        Ok(inner) => {
            let boxed = Box::new(DegcountReport { inner });
            unsafe { *out = Box::into_raw(boxed) };
            DEGCOUNT_OK
        }
        Err(e) => status_of(&e),
    })
}

/// Number of rows in the report.
///
/// # Safety
/// `report` must come from `degcount_count` and not be freed.
#[no_mangle]
pub unsafe extern "C" fn degcount_report_len(report: *const DegcountReport) -> usize {
    if report.is_null() {
        return 0;
    }
    unsafe { &*report }.inner.rows.len()
}

/// Sequence length of row `idx`.
///
/// # Safety
/// `report` as in `degcount_report_len`; `out` must be valid.
#[no_mangle]
pub unsafe extern "C" fn degcount_report_n(
    report: *const DegcountReport,
    idx: usize,
    out: *mut u32,
) -> i32 {
    if report.is_null() || out.is_null() {
        return DEGCOUNT_ENULL;
    }
    let rows = &unsafe { &*report }.inner.rows;
    match rows.get(idx) {
        Some(row) => {
            unsafe { *out = row.n };
            DEGCOUNT_OK
        }
        None => DEGCOUNT_ERANGE,
    }
}

/// Column selectors for `degcount_report_value`.
pub const DEGCOUNT_COL_L: i32 = 0;
pub const DEGCOUNT_COL_H: i32 = 1;
pub const DEGCOUNT_COL_D: i32 = 2;
pub const DEGCOUNT_COL_D0: i32 = 3;

/// Decimal string of one count in row `idx`. Caller frees with
/// `degcount_string_free`.
///
/// # Safety
/// `report` as in `degcount_report_len`; `out` must be valid.
#[no_mangle]
pub unsafe extern "C" fn degcount_report_value(
    report: *const DegcountReport,
    idx: usize,
    column: i32,
    out: *mut *mut c_char,
) -> i32 {
    if report.is_null() || out.is_null() {
        return DEGCOUNT_ENULL;
    }
    let rows = &unsafe { &*report }.inner.rows;
    let Some(row) = rows.get(idx) else {
        return DEGCOUNT_ERANGE;
    };
    let value = match column {
        DEGCOUNT_COL_L => &row.l,
        DEGCOUNT_COL_H => &row.h,
        DEGCOUNT_COL_D => &row.d,
        DEGCOUNT_COL_D0 => &row.d0,
        _ => return DEGCOUNT_EINVAL,
    };
    write_string(out, value.to_string())
}

/// Whole report as CSV (`n,L,H,D,D0` header). Caller frees the string.
///
/// # Safety
/// `report` as in `degcount_report_len`; `out` must be valid.
#[no_mangle]
pub unsafe extern "C" fn degcount_report_csv(
    report: *const DegcountReport,
    out: *mut *mut c_char,
) -> i32 {
    if report.is_null() || out.is_null() {
        return DEGCOUNT_ENULL;
    }
    write_string(out, unsafe { &*report }.inner.to_csv())
}

/// Bounded partition function P(N,k,l,s) as a decimal string.
///
/// # Safety
/// `out` must be a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn degcount_pnkls(
    big_n: i64,
    k: i64,
    l: i64,
    s: i64,
    out: *mut *mut c_char,
) -> i32 {
    if out.is_null() {
        return DEGCOUNT_ENULL;
    }
    guarded(|| write_string(out, dp::fourvar::p_nkls(big_n, k, l, s).to_string()))
}

/// Graphical partitions G(N) of an even N, as a decimal string.
///
/// # Safety
/// `out` must be a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn degcount_gcount(big_n: u64, out: *mut *mut c_char) -> i32 {
    if out.is_null() {
        return DEGCOUNT_ENULL;
    }
    guarded(|| match dp::g_count(big_n) {
        Ok(g) => write_string(out, g.to_string()),
        Err(e) => status_of(&e),
    })
}

/// Monte-Carlo estimate of D(n)/E(n). Reproducible from (n, samples,
/// seed) for any thread count.
///
/// # Safety
/// `hits`, `ratio` and `stderr` must be valid pointers.
#[no_mangle]
pub unsafe extern "C" fn degcount_estimate(
    n: u32,
    samples: u64,
    seed: u64,
    threads: usize,
    hits: *mut u64,
    ratio: *mut f64,
    stderr: *mut f64,
) -> i32 {
    if hits.is_null() || ratio.is_null() || stderr.is_null() {
        return DEGCOUNT_ENULL;
    }
    guarded(|| match estimator::estimate_ratio(n, samples, seed, threads, &[]) {
        Ok(rep) => {
            unsafe {
                *hits = rep.hits;
                *ratio = rep.ratio;
                *stderr = rep.stderr;
            }
            DEGCOUNT_OK
        }
        Err(e) => status_of(&e),
    })
}

/// Release a string returned by this library. NULL is a no-op.
///
/// # Safety
/// `s` must come from this library and not be freed twice.
#[no_mangle]
pub unsafe extern "C" fn degcount_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(unsafe { CString::from_raw(s) });
    }
}

/// Release a report. NULL is a no-op.
///
/// # Safety
/// `report` must come from `degcount_count` and not be freed twice.
#[no_mangle]
pub unsafe extern "C" fn degcount_report_free(report: *mut DegcountReport) {
    if !report.is_null() {
        drop(unsafe { Box::from_raw(report) });
    }
}
