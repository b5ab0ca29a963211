//! Rectangular-table computation of a single L(n).
//!
//! Allocates the full `2 * (n-2) * (n(n-3)/2+1)^2` cell rectangle (the
//! third dimension rolls on the parity of `l`) and fills it with the
//! four-variate recurrence. Cells with `s > N` are left untouched:
//! `P(N,k,l,s) = P(N,k,l,N)` for `s >= N`, so reads clamp `s` to `N`
//! and never land there. The allocation itself is deliberately the
//! rectangular one; this is the reference point the ragged layout is
//! measured against.

use num_traits::Zero;
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::BigCount;

use super::{check_table_fits, with_pool};

type Pane = Vec<Vec<BigCount>>; // [N][s]
type Slab = Vec<Pane>; // [k]

enum CellVal<'a> {
    Zero,
    One,
    Stored(&'a BigCount),
}

impl CellVal<'_> {
    fn write_into(&self, dst: &mut BigCount) {
        match self {
            CellVal::Zero => dst.set_zero(),
            CellVal::One => {
                dst.set_zero();
                *dst += 1u32;
            }
            CellVal::Stored(x) => dst.clone_from(x),
        }
    }

    fn add_into(&self, dst: &mut BigCount) {
        match self {
            CellVal::Zero => {}
            CellVal::One => *dst += 1u32,
            CellVal::Stored(x) => *dst += *x,
        }
    }

    fn sub_from(&self, dst: &mut BigCount) {
        match self {
            CellVal::Zero => {}
            CellVal::One => *dst -= 1u32,
            CellVal::Stored(x) => *dst -= *x,
        }
    }
}

/// Clamped rectangular read: `s` saturates at `N`.
fn read_rect<'a>(slab: &'a [Pane], l_slab: u64, k: i64, nn: i64, s: i64) -> CellVal<'a> {
    if nn < 0 || s < 0 {
        return CellVal::Zero;
    }
    if nn == 0 {
        return CellVal::One;
    }
    if k <= 0 || l_slab == 0 || nn as u64 > k as u64 * l_slab {
        return CellVal::Zero;
    }
    let idx = (s as u64).min(nn as u64) as usize;
    CellVal::Stored(&slab[k as usize][nn as usize][idx])
}

/// L(n) via the rectangular four-dimensional table.
pub fn count_l_baseline(n: u32, threads: usize) -> Result<BigCount> {
    if n < 3 {
        return Err(Error::InvalidArgument(format!(
            "count_l_baseline needs n >= 3, got {n}"
        )));
    }
    let big_n = n as u64;
    let d1 = big_n * (big_n - 3) / 2 + 1; // N and s extents
    let kdim = big_n - 2;
    let cells = 2u128 * kdim as u128 * d1 as u128 * d1 as u128;
    check_table_fits(cells, &format!("rectangular table for n = {n}"))?;

    with_pool(threads, move || {
        let make_slab = || -> Slab {
            (0..kdim)
                .map(|_| (0..d1).map(|_| vec![BigCount::zero(); d1 as usize]).collect())
                .collect()
        };
        let mut slabs = [make_slab(), make_slab()];
        for slab in &mut slabs {
            for pane in slab.iter_mut() {
                pane[0][0] += 1u32;
            }
        }

        for l in 1..big_n {
            let cp = (l % 2) as usize;
            let (first, rest) = slabs.split_at_mut(1);
            let (cur, prev): (&mut Slab, &Slab) = if cp == 0 {
                (&mut first[0], &rest[0])
            } else {
                (&mut rest[0], &first[0])
            };
            for k in 1..=big_n - 3 {
                let (head, tail) = cur.split_at_mut(k as usize);
                let pane = &mut tail[0];
                let nmax = (l * k).min(d1 - 1) as usize;
                pane[1..=nmax]
                    .par_iter_mut()
                    .enumerate()
                    .for_each(|(off, row)| {
                        let nn = (off + 1) as i64;
                        let (k, l) = (k as i64, l as i64);
                        for s in 0..=nn.min(d1 as i64 - 1) {
                            let dst = &mut row[s as usize];
                            read_rect(head, l as u64, k - 1, nn, s).write_into(dst);
                            read_rect(prev, l as u64 - 1, k, nn, s).add_into(dst);
                            read_rect(prev, l as u64 - 1, k - 1, nn - k - l + 1, s + l - k - 1)
                                .add_into(dst);
                            read_rect(prev, l as u64 - 1, k - 1, nn, s).sub_from(dst);
                        }
                    });
            }
        }

        // Sum per Algorithm 1: even i in [n, n(n-1)/2) doubled, plus
        // the middle term when n(n-1)/2 is even.
        let slab = if (big_n - 1) % 2 == 0 { &slabs[0] } else { &slabs[1] };
        let top = big_n * (big_n - 1) / 2;
        let lprime = |nn: i64| -> BigCount {
            let mut t = BigCount::zero();
            let n_i = big_n as i64;
            for j in 1..=(n_i - 2).min(nn - n_i + 1) {
                read_rect(slab, big_n - 1, j - 1, nn - j - n_i + 1, n_i - j - 1).add_into(&mut t);
            }
            t
        };
        let mut total = BigCount::zero();
        let mut nn = if big_n % 2 == 0 { big_n } else { big_n + 1 };
        while nn < top {
            total += lprime(nn as i64);
            nn += 2;
        }
        total *= 2u32;
        if top % 2 == 0 {
            total += lprime(top as i64);
        }
        total
    })
}
