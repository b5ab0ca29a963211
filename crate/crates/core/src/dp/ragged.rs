//! Memory-optimized ragged dynamic program.
//!
//! Two rolling slabs, indexed by the parity of `l`, hold `P(N,k,l,s)`
//! and `P(N,k,l-1,s)`. Within a slab the `N` extent depends on `k` and
//! the `s` extent on `(N,k)`: exactly `M'(N,k)+1` cells, the top one
//! storing the saturated value `P(N,k,l)`. The inner `s` loop starts at
//! the vanishing bound `m'(N,l)`; skipped cells are zero and stay zero.
//!
//! After slab `l` completes, `L(l+1)` is harvested from it before the
//! slab is overwritten, so a single run streams every `L(i)` for
//! `i <= n`.

use num_traits::Zero;
use rayon::prelude::*;

use crate::bounds::{m_lower, m_upper};
use crate::error::{Error, Result};
use crate::report::{CountReport, CountRow};
use crate::BigCount;

use super::{check_table_fits, n_cap, with_pool};

type Row = Vec<BigCount>;
type Pane = Vec<Row>;
type Slab = Vec<Pane>;

/// Value of a cell lookup, borrowing stored cells where possible.
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

    fn to_big(&self) -> BigCount {
        let mut v = BigCount::zero();
        self.write_into(&mut v);
        v
    }
}

/// `P(N',k',l_slab,s')` looked up in one slab, with all boundary rules:
/// negative indices and over-box reads are zero, reads below the
/// vanishing bound are zero, reads at or above the saturation bound
/// land on the stored saturated cell.
fn read_slab<'a>(slab: &'a [Pane], l_slab: u64, k: i64, nn: i64, s: i64) -> CellVal<'a> {
    if nn < 0 || s < 0 {
        return CellVal::Zero;
    }
    if nn == 0 {
        return CellVal::One;
    }
    let nn = nn as u64;
    if k <= 0 || l_slab == 0 || nn > k as u64 * l_slab {
        return CellVal::Zero;
    }
    let lo = m_lower(nn, l_slab);
    if (s as u64) < lo {
        return CellVal::Zero;
    }
    let row = &slab[k as usize][nn as usize];
    let idx = (s as u64).min((row.len() - 1) as u64);
    if idx < lo {
        // Saturation below the vanishing bound forces P(N,k,l) = 0.
        return CellVal::Zero;
    }
    CellVal::Stored(&row[idx as usize])
}

/// The two rolling ragged slabs for a target length `n`.
pub struct RaggedSlabTable {
    n: u32,
    slabs: [Slab; 2],
    cells: u128,
    filled_through: u32,
}

impl RaggedSlabTable {
    fn new(n: u32, ncap: u64) -> Result<Self> {
        if n < 3 {
            return Err(Error::InvalidArgument(format!(
                "ragged table needs n >= 3, got {n}"
            )));
        }
        let big_n = n as u64;
        let mut cells: u128 = 0;
        for k in 0..=big_n - 3 {
            let nmax = (k * (big_n - 1)).min(ncap);
            for nn in 0..=nmax {
                cells += m_upper(nn, k) as u128 + 1;
            }
        }
        cells *= 2;
        check_table_fits(cells, &format!("ragged table for n = {n}"))?;

        let make_slab = || -> Slab {
            (0..=big_n - 3)
                .map(|k| {
                    let nmax = (k * (big_n - 1)).min(ncap);
                    (0..=nmax)
                        .map(|nn| vec![BigCount::zero(); m_upper(nn, k) as usize + 1])
                        .collect()
                })
                .collect()
        };
        let mut slabs = [make_slab(), make_slab()];
        for slab in &mut slabs {
            for pane in slab.iter_mut() {
                pane[0][0] += 1u32; // N = 0 base case
            }
        }
        Ok(Self {
            n,
            slabs,
            cells,
            filled_through: 0,
        })
    }

    /// Total number of allocated cells across both slabs.
    pub fn cell_count(&self) -> u128 {
        self.cells
    }

    /// Highest `l` whose slab has been filled.
    pub fn filled_through(&self) -> u32 {
        self.filled_through
    }

    /// Materialized `P(N,k,l_slab,s)` from the slab of the given parity.
    /// Test and CLI access; the fill uses borrowed reads internally.
    pub fn value(&self, parity: usize, l_slab: u64, k: i64, nn: i64, s: i64) -> BigCount {
        read_slab(&self.slabs[parity], l_slab, k, nn, s).to_big()
    }

    /// Raw stored cell, without boundary interpretation.
    pub fn raw_cell(&self, parity: usize, k: usize, nn: usize, s: usize) -> Option<&BigCount> {
        self.slabs[parity].get(k)?.get(nn)?.get(s)
    }

    fn fill_slab(&mut self, l: u64) {
        let big_n = self.n as u64;
        let cp = (l % 2) as usize;
        let (first, rest) = self.slabs.split_at_mut(1);
        let (cur, prev): (&mut Slab, &Slab) = if cp == 0 {
            (&mut first[0], &rest[0])
        } else {
            (&mut rest[0], &first[0])
        };
        for k in 1..=big_n.saturating_sub(3) {
            let (head, tail) = cur.split_at_mut(k as usize);
            let pane = &mut tail[0];
            let nmax = (l * k).min((pane.len() - 1) as u64) as usize;
            pane[1..=nmax]
                .par_iter_mut()
                .enumerate()
                .for_each(|(off, row)| {
                    let nn = (off + 1) as u64;
                    let lo = m_lower(nn, l);
                    let hi = (row.len() - 1) as u64; // M'(nn, k)
                    for s in lo..=hi {
                        let (nn, k, l, s) = (nn as i64, k as i64, l as i64, s as i64);
                        let dst = &mut row[s as usize];
                        read_slab(head, l as u64, k - 1, nn, s).write_into(dst);
                        read_slab(prev, l as u64 - 1, k, nn, s).add_into(dst);
                        read_slab(prev, l as u64 - 1, k - 1, nn - k - l + 1, s + l - k - 1)
                            .add_into(dst);
                        // Subtracted last: the first term dominates it.
                        read_slab(prev, l as u64 - 1, k - 1, nn, s).sub_from(dst);
                    }
                });
        }
        self.filled_through = l as u32;
    }

    /// L'(N,i) harvested from the slab holding `P(*,*,i-1,*)`: the sum
    /// over k of `P(N-k-i+1, k-1, i-1, i-k-1)`, skipping terms with
    /// `k < N/i` (their first index overflows the box).
    pub fn lprime(&self, i: u32, nn: u64) -> BigCount {
        assert!(
            self.filled_through + 1 >= i,
            "slab for l = {} not filled yet",
            i - 1
        );
        let parity = ((i - 1) % 2) as usize;
        let slab = &self.slabs[parity];
        let i = i as i64;
        let nn = nn as i64;
        let mut total = BigCount::zero();
        for k in 1..=(i - 2).min(nn - i + 1) {
            let first = nn - k - i + 1;
            if first > (k - 1) * (i - 1) {
                continue; // k < N/i: zero term
            }
            read_slab(slab, i as u64 - 1, k - 1, first, i - k - 1).add_into(&mut total);
        }
        total
    }

    /// L(i) via the symmetric half: even N in [i, i(i-1)/2) doubled,
    /// plus the middle term when i(i-1)/2 is even.
    pub fn l_value(&self, i: u32) -> BigCount {
        let top = (i as u64) * (i as u64 - 1) / 2;
        let mut total = BigCount::zero();
        let mut nn = if i % 2 == 0 { i as u64 } else { i as u64 + 1 };
        while nn < top {
            total += self.lprime(i, nn);
            nn += 2;
        }
        total *= 2u32;
        if top % 2 == 0 {
            total += self.lprime(i, top);
        }
        total
    }
}

/// Run the improved fill for target `n`, invoking the observer with
/// each completed slab index `l` (1 to n-1) before it is overwritten.
pub fn fill_improved<F>(n: u32, threads: usize, observer: F) -> Result<RaggedSlabTable>
where
    F: FnMut(u32, &RaggedSlabTable) + Send,
{
    fill_improved_with_cap(n, n_cap(n as u64), threads, observer)
}

/// Fill variant with an explicit N-extent cap. The default cap stores
/// only the symmetric half needed for L(n); tests use `n(n-2)` to make
/// both halves of L'(N,n) addressable.
pub fn fill_improved_with_cap<F>(
    n: u32,
    ncap: u64,
    threads: usize,
    mut observer: F,
) -> Result<RaggedSlabTable>
where
    F: FnMut(u32, &RaggedSlabTable) + Send,
{
    let mut table = RaggedSlabTable::new(n, ncap)?;
    with_pool(threads, move || {
        for l in 1..n as u64 {
            table.fill_slab(l);
            observer(l as u32, &table);
        }
        table
    })
}

/// All rows (L, H, D, D0) for i = 2..=n in a single streaming run.
pub fn count_all_improved(n: u32, threads: usize) -> Result<CountReport> {
    if n < 2 {
        return Err(Error::InvalidArgument(format!(
            "count_all_improved needs n >= 2, got {n}"
        )));
    }
    let mut l_values: Vec<(u32, BigCount)> = vec![(2, BigCount::zero())];
    if n >= 3 {
        let mut harvested: Vec<(u32, BigCount)> = Vec::new();
        fill_improved(n, threads, |l, table| {
            let i = l + 1;
            if i >= 3 && i <= n {
                harvested.push((i, table.l_value(i)));
            }
        })?;
        l_values.extend(harvested);
    }

    // Bootstrap: D(1) = 0, D0(1) = 1 (the sequence (0) is graphical but
    // not zero-free).
    let mut d0_prev = BigCount::from(1u32);
    let mut rows = Vec::with_capacity(l_values.len());
    for (i, l) in l_values {
        let d = l.clone() + &d0_prev;
        let h = d.clone() - &l;
        let d0 = d0_prev.clone() + &d;
        debug_assert_eq!(d, l.clone() + &d0_prev, "D(n) = L(n) + D0(n-1)");
        rows.push(CountRow { n: i, l, h, d, d0: d0.clone() });
        d0_prev = d0;
    }
    Ok(CountReport { rows })
}
