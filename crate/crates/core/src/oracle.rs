//! Definition-level brute-force counters.
//!
//! Every counter here enumerates partitions and applies the defining
//! predicate directly. No memoization, no recurrences: these are the
//! ground truth the dynamic programs are checked against. Feasible for
//! small arguments only; callers cap the ranges.

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::partition::{enumerate_partitions, DegreeSequence, Partition};
use crate::BigCount;

/// P(N,k,l,s) by exhaustive enumeration. 0 when s < 0 or N < 0.
pub fn p_nkls_bruteforce(n: i64, k: u32, l: u32, s: i64) -> BigCount {
    if s < 0 || n < 0 {
        return BigCount::zero();
    }
    let hits = enumerate_partitions(n as u64, k, l)
        .filter(|p| p.satisfies_s_condition(s))
        .count();
    BigCount::from(hits)
}

/// |P(N,k,l)| by exhaustive enumeration.
pub fn p_nkl_bruteforce(n: u64, k: u32, l: u32) -> BigCount {
    BigCount::from(enumerate_partitions(n, k, l).count())
}

/// Partitions of `n` with exactly `l` parts, as a stream.
fn exact_parts(n: u64, l: u32) -> impl Iterator<Item = Partition> {
    // Exactly l parts >= 1 of sum n == at most l parts of sum n - l
    // (each part <= n - l + 1 is implied), shifted back up by one.
    let shifted_total = n.checked_sub(l as u64);
    shifted_total
        .map(|total| {
            let cap = total.min(u32::MAX as u64) as u32;
            enumerate_partitions(total, cap, l).map(move |p| {
                let mut parts = p.parts().to_vec();
                parts.resize(l as usize, 0);
                for x in &mut parts {
                    *x += 1;
                }
                Partition::from_sorted_unchecked(parts)
            })
        })
        .into_iter()
        .flatten()
}

/// G'(N,l): graphical partitions of N with exactly l parts.
pub fn gprime_bruteforce(n: u64, l: u32) -> BigCount {
    let hits = exact_parts(n, l)
        .filter(|p| DegreeSequence::from(p).is_graphical())
        .count();
    BigCount::from(hits)
}

/// H'(N,l): graphical partitions of N with exactly l parts and largest
/// part exactly l - 1.
pub fn hprime_bruteforce(n: u64, l: u32) -> BigCount {
    let hits = exact_parts(n, l)
        .filter(|p| p.parts().first().copied() == Some(l - 1))
        .filter(|p| DegreeSequence::from(p).is_graphical())
        .count();
    BigCount::from(hits)
}

/// L'(N,l): graphical partitions of N with exactly l parts and largest
/// part less than l - 1.
pub fn lprime_bruteforce(n: u64, l: u32) -> BigCount {
    let hits = exact_parts(n, l)
        .filter(|p| p.parts().first().map_or(false, |&top| top + 1 < l))
        .filter(|p| DegreeSequence::from(p).is_graphical())
        .count();
    BigCount::from(hits)
}

/// D(n): zero-free graphical degree sequences of length n.
pub fn d_bruteforce(n: u32) -> BigCount {
    let hits = members_of_e(n)
        .filter(|p| DegreeSequence::from(p).is_graphical())
        .count();
    BigCount::from(hits)
}

/// E(n): partitions with exactly n parts, each in [1, n-1], even sum.
pub fn e_bruteforce(n: u32) -> BigCount {
    BigCount::from(members_of_e(n).count())
}

/// Stream of the E(n) ensemble members.
pub fn members_of_e(n: u32) -> impl Iterator<Item = Partition> {
    let lo = n as u64;
    let hi = (n as u64) * (n as u64 - 1);
    (lo..=hi)
        .filter(|total| total % 2 == 0)
        .flat_map(move |total| {
            exact_parts(total, n).filter(move |p| p.parts()[0] < n)
        })
}

/// Min and max of j - sum of the first j coranks, over all partitions
/// in P(N,k,l) and all j up to the Durfee side.
pub fn corank_extremes_bruteforce(n: u64, k: u32, l: u32) -> Result<(i64, i64)> {
    let mut min = i64::MAX;
    let mut max = i64::MIN;
    for p in enumerate_partitions(n, k, l) {
        let mut acc = 0i64;
        for (j, r) in p.coranks().into_iter().enumerate() {
            acc += r;
            let v = (j + 1) as i64 - acc;
            min = min.min(v);
            max = max.max(v);
        }
    }
    if min > max {
        return Err(Error::EmptySet(format!(
            "no partition of {n} with at most {l} parts each at most {k} has a nonempty Durfee square"
        )));
    }
    Ok((min, max))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn big(v: u64) -> BigCount {
        BigCount::from(v)
    }

    #[test]
    fn p_nkls_examples() {
        assert_eq!(p_nkls_bruteforce(4, 2, 2, -1), big(0));
        assert_eq!(p_nkls_bruteforce(4, 2, 2, 0), big(0));
        assert_eq!(p_nkls_bruteforce(4, 2, 2, 2), big(1));
        assert_eq!(p_nkls_bruteforce(0, 3, 3, 0), big(1));
    }

    #[test]
    fn p_nkl_examples() {
        assert_eq!(p_nkl_bruteforce(5, 3, 3), big(3));
        assert_eq!(p_nkl_bruteforce(0, 0, 0), big(1));
        assert_eq!(p_nkl_bruteforce(4, 2, 2), big(1));
    }

    #[test]
    fn gprime_hprime_lprime_examples() {
        assert_eq!(gprime_bruteforce(4, 3), big(1));
        assert_eq!(gprime_bruteforce(6, 3), big(1));
        assert_eq!(lprime_bruteforce(6, 3), big(0));
    }

    #[test]
    fn gprime_splits_into_hprime_and_lprime() {
        for n in 0..=24u64 {
            for l in 1..=7u32 {
                let g = gprime_bruteforce(n, l);
                let h = hprime_bruteforce(n, l);
                let lp = lprime_bruteforce(n, l);
                assert_eq!(g, h + lp, "G' != H' + L' at N={n}, l={l}");
            }
        }
    }

    #[test]
    fn d_and_e_examples() {
        assert_eq!(d_bruteforce(3), big(2));
        assert_eq!(d_bruteforce(4), big(7));
        assert_eq!(e_bruteforce(4), big(9));
        assert_eq!(e_bruteforce(2), big(1));
    }

    #[test]
    fn d_decomposes_over_gprime() {
        for n in 3..=8u32 {
            let mut total = BigCount::zero();
            let mut big_n = n as u64;
            if big_n % 2 == 1 {
                big_n += 1;
            }
            while big_n <= (n as u64) * (n as u64 - 1) {
                total += gprime_bruteforce(big_n, n);
                big_n += 2;
            }
            assert_eq!(total, d_bruteforce(n), "sum of G' != D at n={n}");
        }
    }

    #[test]
    fn corank_extremes_examples() {
        assert_eq!(corank_extremes_bruteforce(4, 2, 2).unwrap(), (1, 2));
        assert_eq!(corank_extremes_bruteforce(6, 3, 2).unwrap(), (2, 4));
        assert_eq!(corank_extremes_bruteforce(1, 1, 1).unwrap(), (1, 1));
        assert!(corank_extremes_bruteforce(7, 2, 3).is_err());
    }

    #[test]
    fn saturation_matches_p_nkl() {
        // P(N,k,l,s) = P(N,k,l) once s >= N.
        for n in 0..=10i64 {
            for k in 0..=5 {
                for l in 0..=5 {
                    assert_eq!(
                        p_nkls_bruteforce(n, k, l, n),
                        p_nkl_bruteforce(n as u64, k, l)
                    );
                }
            }
        }
    }
}
