//! Integer partitions and degree sequences.
//!
//! A [`Partition`] stores its parts explicitly in non-increasing order.
//! Conjugation, Durfee side and coranks are the ingredients of the
//! Barnes–Savage membership condition; [`DegreeSequence`] adds the
//! Erdős–Gallai graphicality test.

use crate::error::{Error, Result};

/// Integer partition with parts in non-increasing order.
///
/// The empty partition (no parts, sum 0) is a valid value.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Partition {
    parts: Vec<u32>,
}

impl Partition {
    /// Build from a part list, validating order and positivity.
    pub fn new(parts: Vec<u32>) -> Result<Self> {
        for w in parts.windows(2) {
            if w[0] < w[1] {
                return Err(Error::InvalidArgument(format!(
                    "parts not non-increasing: {} < {}",
                    w[0], w[1]
                )));
            }
        }
        if parts.iter().any(|&p| p == 0) {
            return Err(Error::InvalidArgument("zero part in partition".into()));
        }
        Ok(Self { parts })
    }

    pub fn empty() -> Self {
        Self { parts: Vec::new() }
    }

    /// Internal constructor for callers that guarantee validity.
    pub(crate) fn from_sorted_unchecked(parts: Vec<u32>) -> Self {
        debug_assert!(parts.windows(2).all(|w| w[0] >= w[1]));
        debug_assert!(parts.iter().all(|&p| p > 0));
        Self { parts }
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Sum of all parts.
    pub fn sum(&self) -> u64 {
        self.parts.iter().map(|&p| p as u64).sum()
    }

    /// The conjugate partition (transposed Ferrers diagram).
    pub fn conjugate(&self) -> Partition {
        let Some(&largest) = self.parts.first() else {
            return Partition::empty();
        };
        let mut conj = Vec::with_capacity(largest as usize);
        for i in 1..=largest {
            conj.push(self.parts.iter().take_while(|&&p| p >= i).count() as u32);
        }
        Partition { parts: conj }
    }

    /// Side length of the Durfee square: max j with part_j >= j.
    pub fn durfee_side(&self) -> usize {
        let mut d = 0;
        for (i, &p) in self.parts.iter().enumerate() {
            if p as usize >= i + 1 {
                d = i + 1;
            } else {
                break;
            }
        }
        d
    }

    /// Coranks r_i = conj_i - part_i for i up to the Durfee side.
    pub fn coranks(&self) -> Vec<i64> {
        let conj = self.conjugate();
        (0..self.durfee_side())
            .map(|i| conj.parts[i] as i64 - self.parts[i] as i64)
            .collect()
    }

    /// Barnes–Savage membership condition: false for s < 0, otherwise
    /// s + sum of the first j coranks must be >= j for every j up to
    /// the Durfee side. Vacuously true for the empty partition.
    pub fn satisfies_s_condition(&self, s: i64) -> bool {
        if s < 0 {
            return false;
        }
        let mut acc = 0i64;
        for (j, r) in self.coranks().into_iter().enumerate() {
            acc += r;
            if s + acc < (j + 1) as i64 {
                return false;
            }
        }
        true
    }
}

/// Multiset of nonnegative integers, stored non-increasing.
///
/// Zeros are allowed; a zero-free sequence of length n with all terms
/// below n corresponds to a member of the E(n) ensemble.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DegreeSequence {
    terms: Vec<u32>,
}

impl DegreeSequence {
    pub fn new(mut terms: Vec<u32>) -> Self {
        terms.sort_unstable_by(|a, b| b.cmp(a));
        Self { terms }
    }

    pub fn terms(&self) -> &[u32] {
        &self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Erdős–Gallai test. The empty sequence is graphical (empty graph).
    ///
    /// Any term >= length is immediately non-graphical; odd sums are
    /// rejected before the inequality loop.
    pub fn is_graphical(&self) -> bool {
        let n = self.terms.len();
        if n == 0 {
            return true;
        }
        if self.terms.iter().any(|&t| t as usize >= n) {
            return false;
        }
        if self.terms.iter().map(|&t| t as u64).sum::<u64>() % 2 != 0 {
            return false;
        }
        // Prefix sums make each inequality O(1); the min-tail is
        // accumulated by walking the sorted tail once per k.
        let d = &self.terms;
        let mut prefix = 0u64;
        for k in 1..=n {
            prefix += d[k - 1] as u64;
            let tail: u64 = d[k..].iter().map(|&x| (x as u64).min(k as u64)).sum();
            if prefix > (k as u64) * (k as u64 - 1) + tail {
                return false;
            }
        }
        true
    }
}

impl From<&Partition> for DegreeSequence {
    fn from(p: &Partition) -> Self {
        DegreeSequence {
            terms: p.parts().to_vec(),
        }
    }
}

/// Stream of all partitions of `n` with at most `l` parts, each part at
/// most `k`, in lexicographically descending order.
///
/// Empty stream when `n > k*l`; the single empty partition when `n == 0`.
pub fn enumerate_partitions(n: u64, k: u32, l: u32) -> BoxedPartitions {
    BoxedPartitions {
        n,
        k,
        l,
        current: None,
        started: false,
    }
}

pub struct BoxedPartitions {
    n: u64,
    k: u32,
    l: u32,
    current: Option<Vec<u32>>,
    started: bool,
}

impl BoxedPartitions {
    /// Greedily fill `dst[from..]` with `rem` using parts <= cap and at
    /// most `slots` further parts. Returns false if infeasible.
    fn greedy_fill(dst: &mut Vec<u32>, from: usize, mut rem: u64, mut cap: u32, l: u32) -> bool {
        dst.truncate(from);
        while rem > 0 {
            if dst.len() >= l as usize {
                return false;
            }
            let p = (cap as u64).min(rem) as u32;
            if p == 0 {
                return false;
            }
            let slots_left = l as usize - dst.len();
            if (p as u64) * (slots_left as u64) < rem {
                return false;
            }
            dst.push(p);
            rem -= p as u64;
            cap = p;
        }
        true
    }
}

impl Iterator for BoxedPartitions {
    type Item = Partition;

    fn next(&mut self) -> Option<Partition> {
        if !self.started {
            self.started = true;
            if self.n > (self.k as u64) * (self.l as u64) {
                return None;
            }
            let mut first = Vec::new();
            if !Self::greedy_fill(&mut first, 0, self.n, self.k, self.l) {
                return None;
            }
            self.current = Some(first);
            return self
                .current
                .as_ref()
                .map(|p| Partition::from_sorted_unchecked(p.clone()));
        }
        let cur = self.current.as_mut()?;
        // Find the rightmost position whose part can be decreased with
        // the tail still able to absorb the remainder.
        let mut suffix_sum = 0u64;
        for i in (0..cur.len()).rev() {
            suffix_sum += cur[i] as u64;
            if cur[i] == 1 {
                continue;
            }
            let v = cur[i] - 1;
            let rem_after = suffix_sum - v as u64;
            let slots_after = self.l as usize - i - 1;
            if (v as u64) * (slots_after as u64) >= rem_after {
                cur[i] = v;
                let filled = Self::greedy_fill(cur, i + 1, rem_after, v, self.l);
                debug_assert!(filled);
                return Some(Partition::from_sorted_unchecked(cur.clone()));
            }
        }
        self.current = None;
        None
    }
}
