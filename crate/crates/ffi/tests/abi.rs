//! Exercises the C entry points exactly as a C caller would: raw
//! pointers in, status codes out, explicit frees.

use std::ffi::{c_char, CStr};
use std::ptr;

use degcount_ffi::*;

fn take_string(p: *mut c_char) -> String {
    assert!(!p.is_null());
    let s = unsafe { CStr::from_ptr(p) }.to_str().unwrap().to_owned();
    unsafe { degcount_string_free(p) };
    s
}

#[test]
fn count_report_round_trip() {
    let mut report: *mut DegcountReport = ptr::null_mut();
    assert_eq!(unsafe { degcount_count(10, 1, &mut report) }, DEGCOUNT_OK);
    assert_eq!(unsafe { degcount_report_len(report) }, 9); // rows 2..=10

    let mut n = 0u32;
    assert_eq!(unsafe { degcount_report_n(report, 2, &mut n) }, DEGCOUNT_OK);
    assert_eq!(n, 4);

    let mut s: *mut c_char = ptr::null_mut();
    assert_eq!(
        unsafe { degcount_report_value(report, 2, DEGCOUNT_COL_D, &mut s) },
        DEGCOUNT_OK
    );
    assert_eq!(take_string(s), "7"); // D(4)

    let mut csv: *mut c_char = ptr::null_mut();
    assert_eq!(unsafe { degcount_report_csv(report, &mut csv) }, DEGCOUNT_OK);
    let text = take_string(csv);
    assert!(text.starts_with("n,L,H,D,D0\n"));
    assert!(text.contains("\n10,"));

    assert_eq!(
        unsafe { degcount_report_n(report, 99, &mut n) },
        DEGCOUNT_ERANGE
    );
    let mut s2: *mut c_char = ptr::null_mut();
    assert_eq!(
        unsafe { degcount_report_value(report, 0, 42, &mut s2) },
        DEGCOUNT_EINVAL
    );
    unsafe { degcount_report_free(report) };
}

#[test]
fn error_paths() {
    let mut report: *mut DegcountReport = ptr::null_mut();
    assert_eq!(unsafe { degcount_count(1, 1, &mut report) }, DEGCOUNT_EINVAL);
    assert_eq!(
        unsafe { degcount_count(4, 1, ptr::null_mut()) },
        DEGCOUNT_ENULL
    );
    let mut s: *mut c_char = ptr::null_mut();
    assert_eq!(unsafe { degcount_gcount(7, &mut s) }, DEGCOUNT_EINVAL);
    unsafe {
        degcount_string_free(ptr::null_mut());
        degcount_report_free(ptr::null_mut());
    }
}

#[test]
fn point_queries() {
    let mut s: *mut c_char = ptr::null_mut();
    assert_eq!(unsafe { degcount_pnkls(4, 2, 2, 2, &mut s) }, DEGCOUNT_OK);
    assert_eq!(take_string(s), "1");
    assert_eq!(unsafe { degcount_pnkls(4, 2, 2, -1, &mut s) }, DEGCOUNT_OK);
    assert_eq!(take_string(s), "0");
    assert_eq!(unsafe { degcount_gcount(6, &mut s) }, DEGCOUNT_OK);
    assert_eq!(take_string(s), "5");
}

#[test]
fn estimate_is_deterministic() {
    let run = |threads: usize| {
        let (mut hits, mut ratio, mut se) = (0u64, 0f64, 0f64);
        let rc = unsafe {
            degcount_estimate(8, 5000, 7, threads, &mut hits, &mut ratio, &mut se)
        };
        assert_eq!(rc, DEGCOUNT_OK);
        (hits, ratio, se)
    };
    assert_eq!(run(1), run(2));
    let (hits, ratio, _) = run(1);
    assert_eq!(ratio, hits as f64 / 5000.0);
}
