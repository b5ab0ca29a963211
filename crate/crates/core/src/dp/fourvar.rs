//! Memoized four-variate `P(N,k,l,s)` for point queries.
//!
//! The recurrence adds the counts from relaxing the largest part and
//! the part count, subtracts the double-counted intersection, and adds
//! the boxed remainder after removing the first row and column:
//!
//! ```text
//! P(N,k,l,s) = P(N,k-1,l,s) + P(N,k,l-1,s) - P(N,k-1,l-1,s)
//!            + P(N-k-l+1, k-1, l-1, s+l-k-1)
//! ```
//!
//! with `P(0,·,·,s) = 1` for `s >= 0`, and 0 whenever `N < 0`, `s < 0`,
//! or `N > k*l`. Arguments are normalized (`s`, `k`, `l` clamped at `N`)
//! so the memo stays small; `P(N,k,l,s) = P(N,k,l,N)` for `s >= N`.
//!
//! This path serves point queries (`pnkls`), `G(N) = P(N,N,N,0)` and
//! the direct evaluation of D(n); bulk counting goes through the table
//! fills in [`super::ragged`] and [`super::baseline`].

use std::collections::HashMap;

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::BigCount;

/// Memo table for four-variate point queries.
#[derive(Default)]
pub struct PnklsMemo {
    memo: HashMap<(u64, u64, u64, u64), BigCount>,
}

impl PnklsMemo {
    pub fn new() -> Self {
        Self::default()
    }

    /// P(N,k,l,s) for arbitrary integer arguments.
    pub fn get(&mut self, n: i64, k: i64, l: i64, s: i64) -> BigCount {
        if n < 0 || s < 0 {
            return BigCount::zero();
        }
        self.eval(n as u64, k.max(0) as u64, l.max(0) as u64, s as u64)
    }

    fn eval(&mut self, n: u64, mut k: u64, mut l: u64, mut s: u64) -> BigCount {
        if n == 0 {
            return BigCount::one();
        }
        if k == 0 || l == 0 || n > k * l {
            return BigCount::zero();
        }
        k = k.min(n);
        l = l.min(n);
        s = s.min(n);
        if let Some(v) = self.memo.get(&(n, k, l, s)) {
            return v.clone();
        }
        let r1 = self.eval_signed(n as i64, k as i64 - 1, l as i64, s as i64);
        let r2 = self.eval_signed(n as i64, k as i64, l as i64 - 1, s as i64);
        let r3 = self.eval_signed(n as i64, k as i64 - 1, l as i64 - 1, s as i64);
        let r4 = self.eval_signed(
            n as i64 - k as i64 - l as i64 + 1,
            k as i64 - 1,
            l as i64 - 1,
            s as i64 + l as i64 - k as i64 - 1,
        );
        // r3 counts a subset of r1 (monotone in l), so this order never
        // underflows.
        let mut v = r1;
        v += r2;
        v += r4;
        v -= r3;
        self.memo.insert((n, k, l, s), v.clone());
        v
    }

    fn eval_signed(&mut self, n: i64, k: i64, l: i64, s: i64) -> BigCount {
        if n < 0 || s < 0 {
            return BigCount::zero();
        }
        self.eval(n as u64, k.max(0) as u64, l.max(0) as u64, s as u64)
    }
}

/// P(N,k,l,s) as a one-shot point query.
pub fn p_nkls(n: i64, k: i64, l: i64, s: i64) -> BigCount {
    PnklsMemo::new().get(n, k, l, s)
}

/// G(N) = P(N,N,N,0): graphical partitions of an even integer N.
pub fn g_count(n: u64) -> Result<BigCount> {
    if n % 2 != 0 {
        return Err(Error::InvalidArgument(format!(
            "G(N) is defined for even N, got {n}"
        )));
    }
    Ok(p_nkls(n as i64, n as i64, n as i64, 0))
}

/// Cross-check cap: the direct sum needs k up to n-1, outside the
/// production table extents, and exists only as an audit path.
pub const D_DIRECT_MAX_N: u32 = 16;

/// D(n) evaluated directly as the sum of G'(N,n) over even N in
/// [n, n(n-1)], each G' expanded through P(N-k-n+1, k-1, n-1, n-k-1).
pub fn d_direct(n: u32) -> Result<BigCount> {
    if n < 2 {
        return Err(Error::InvalidArgument(format!("d_direct needs n >= 2, got {n}")));
    }
    if n > D_DIRECT_MAX_N {
        return Err(Error::InvalidArgument(format!(
            "d_direct is capped at n = {D_DIRECT_MAX_N} (audit path), got {n}"
        )));
    }
    let n = n as i64;
    let mut memo = PnklsMemo::new();
    let mut total = BigCount::zero();
    let mut big_n = n;
    if big_n % 2 == 1 {
        big_n += 1;
    }
    while big_n <= n * (n - 1) {
        for k in 1..=n - 1 {
            total += memo.get(big_n - k - n + 1, k - 1, n - 1, n - k - 1);
        }
        big_n += 2;
    }
    Ok(total)
}
