//! Saturation and vanishing thresholds of `P(N,k,l,s)` in `s`.
//!
//! `m_upper(N,k)` is the smallest `s` from which `P(N,k,l,s)` has
//! saturated at `P(N,k,l)`; `m_lower(N,l)` is a threshold below which
//! `P(N,k,l,s) = 0`. The lower bound is safe but not always tight (at
//! N=9, l=2 it yields 5 while the true vanishing threshold is 7); only
//! the safety direction is relied upon.

/// The saturation bound M'(N,k). Zero when N = 0 or k = 0.
pub fn m_upper(n: u64, k: u64) -> u64 {
    if n == 0 || k == 0 {
        return 0;
    }
    let q = n / k;
    let r = n % k;
    if r == 0 {
        if k >= q {
            q * (k - q + 1)
        } else {
            0
        }
    } else if k >= q {
        if r <= q {
            q * (k - q + 1) - r
        } else {
            // k >= q and r > q force k > q here, so k - q - 1 >= 0.
            q * (k - q - 1) + r
        }
    } else {
        0
    }
}

/// The vanishing bound m'(N,l). Zero when N = 0 or l = 0.
pub fn m_lower(n: u64, l: u64) -> u64 {
    if n == 0 || l == 0 {
        return 0;
    }
    let q = n / l;
    let r = n % l;
    if r == 0 {
        if l <= q {
            l * (q - l + 1)
        } else {
            0
        }
    } else if l <= q {
        l * (q - l) + r
    } else {
        0
    }
}
