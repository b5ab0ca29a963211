//! Three-variate bounded partition counts.
//!
//! `P(N,k,l) = P(N-k-l+1,k-1,l-1) + P(N,k-1,l) + P(N,k,l-1) - P(N,k-1,l-1)`
//! with `P(0,·,·) = 1` and 0 when `N < 0` or `N > k*l`. Unlike the
//! four-variate recurrence no index can increase, so a plain memo
//! suffices.

use std::collections::HashMap;

use num_traits::{One, Zero};

use crate::BigCount;

#[derive(Default)]
pub struct PnklMemo {
    memo: HashMap<(u64, u64, u64), BigCount>,
}

impl PnklMemo {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn get(&mut self, n: i64, k: i64, l: i64) -> BigCount {
        if n < 0 {
            return BigCount::zero();
        }
        self.eval(n as u64, k.max(0) as u64, l.max(0) as u64)
    }

    fn eval(&mut self, n: u64, mut k: u64, mut l: u64) -> BigCount {
        if n == 0 {
            return BigCount::one();
        }
        if k == 0 || l == 0 || n > k * l {
            return BigCount::zero();
        }
        k = k.min(n);
        l = l.min(n);
        if let Some(v) = self.memo.get(&(n, k, l)) {
            return v.clone();
        }
        let r1 = self.get(n as i64, k as i64 - 1, l as i64);
        let r2 = self.get(n as i64, k as i64, l as i64 - 1);
        let r3 = self.get(n as i64, k as i64 - 1, l as i64 - 1);
        let r4 = self.get(
            n as i64 - k as i64 - l as i64 + 1,
            k as i64 - 1,
            l as i64 - 1,
        );
        let mut v = r1;
        v += r2;
        v += r4;
        v -= r3;
        self.memo.insert((n, k, l), v.clone());
        v
    }
}

/// |P(N,k,l)| via the three-variate recurrence.
pub fn p_nkl_dp(n: u64, k: u32, l: u32) -> BigCount {
    PnklMemo::new().get(n as i64, k as i64, l as i64)
}
