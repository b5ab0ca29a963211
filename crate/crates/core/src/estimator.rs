//! Exact counting and exact-uniform sampling of the E(n) ensemble, and
//! Monte-Carlo estimation of the graphical fraction D(n)/E(n).
//!
//! Sampling is by unranking against an exact count table: every branch
//! probability is decided by comparing an exactly-uniform big integer
//! against an exact threshold. No floating point enters the decision,
//! so the distribution over E(n) is exactly uniform.

use num_bigint::{BigInt, BigUint, Sign};
use num_traits::{One, Zero};
use rand::{RngCore, SeedableRng};
use rand_chacha::ChaCha12Rng;
use rayon::prelude::*;

use crate::dp::with_pool;
use crate::error::{Error, Result};
use crate::partition::{DegreeSequence, Partition};
use crate::report::EstimateReport;
use crate::BigCount;

/// Exact counts q(j, m, b): partitions into at most j parts, each part
/// at most m, with sum parity b.
///
/// Members of E(n) (exactly n parts in [1, n-1], even sum) correspond
/// to at-most-n parts in [0, n-2] after shifting every part down by
/// one; the shift moves the parity target to n mod 2.
pub struct EnsembleTable {
    n: u32,
    /// q[j][m][b], j in 0..=n, m in 0..=n-2.
    q: Vec<Vec<[BigCount; 2]>>,
}

impl EnsembleTable {
    pub fn new(n: u32) -> Result<Self> {
        if n < 2 {
            return Err(Error::InvalidArgument(format!(
                "ensemble table needs n >= 2, got {n}"
            )));
        }
        let jdim = n as usize + 1;
        let mdim = n as usize - 1; // m in 0..=n-2
        let mut q = vec![vec![[BigCount::zero(), BigCount::zero()]; mdim]; jdim];
        for m in 0..mdim {
            q[0][m][0].set_one();
        }
        for j in 1..jdim {
            q[j][0][0].set_one();
            for m in 1..mdim {
                let parity_flip = (m % 2) as usize;
                let keep = q[j][m - 1].clone();
                let take = q[j - 1][m].clone();
                q[j][m][0] = keep[0].clone() + &take[parity_flip];
                q[j][m][1] = keep[1].clone() + &take[1 - parity_flip];
            }
        }
        Ok(Self { n, q })
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    /// |E(n)| exactly.
    pub fn e_count(&self) -> BigCount {
        self.q[self.n as usize][self.n as usize - 2][(self.n % 2) as usize].clone()
    }

    /// One exactly-uniform member of E(n).
    pub fn sample_uniform<R: RngCore>(&self, rng: &mut R) -> Result<Partition> {
        let mut j = self.n as usize;
        let mut m = self.n as usize - 2;
        let mut b = (self.n % 2) as usize;
        if self.q[j][m][b].is_zero() {
            return Err(Error::EmptySet(format!("E({}) is empty", self.n)));
        }
        let mut shifted: Vec<u32> = Vec::new();
        while j > 0 && m > 0 {
            let total = &self.q[j][m][b];
            let u = uniform_below(rng, total);
            if u < self.q[j][m - 1][b] {
                m -= 1; // no further part of size m
            } else {
                shifted.push(m as u32);
                j -= 1;
                b ^= m % 2;
            }
        }
        debug_assert_eq!(b, 0);
        // Undo the shift: pad to exactly n parts and add one to each.
        shifted.resize(self.n as usize, 0);
        for x in &mut shifted {
            *x += 1;
        }
        Ok(Partition::from_sorted_unchecked(shifted))
    }
}

/// Exactly-uniform integer in [0, bound), by rejection on random bit
/// strings of bit-length bound.bits().
fn uniform_below<R: RngCore>(rng: &mut R, bound: &BigCount) -> BigCount {
    debug_assert!(!bound.is_zero());
    if bound.is_one() {
        return BigCount::zero();
    }
    let bits = bound.bits();
    let words = bits.div_ceil(32) as usize;
    let top_mask: u32 = if bits % 32 == 0 {
        u32::MAX
    } else {
        (1u32 << (bits % 32)) - 1
    };
    loop {
        let mut digits = vec![0u32; words];
        for d in digits.iter_mut() {
            *d = rng.next_u32();
        }
        digits[words - 1] &= top_mask;
        let candidate = BigUint::new(digits);
        if candidate < *bound {
            return candidate;
        }
    }
}

/// Samples per independent RNG stream. Fixed so the stream layout (and
/// hence the output) is independent of thread count.
const STREAM_CHUNK: u64 = 4096;

fn stream_rng(seed: u64, stream: u64) -> ChaCha12Rng {
    let mut key = [0u8; 32];
    key[..8].copy_from_slice(&seed.to_le_bytes());
    key[8..16].copy_from_slice(&stream.to_le_bytes());
    ChaCha12Rng::from_seed(key)
}

/// Monte-Carlo estimate of D(n)/E(n) from `samples` exact-uniform
/// draws, with the requested conjectured-formula evaluations attached.
/// Fully reproducible from (n, samples, seed); thread count only
/// changes the schedule, never the output.
pub fn estimate_ratio(
    n: u32,
    samples: u64,
    seed: u64,
    threads: usize,
    conjectures: &[ConjectureForm],
) -> Result<EstimateReport> {
    if samples == 0 {
        return Err(Error::InvalidArgument("samples must be >= 1".into()));
    }
    let table = EnsembleTable::new(n)?;
    let streams = samples.div_ceil(STREAM_CHUNK);
    let hits: u64 = with_pool(threads, || {
        (0..streams)
            .into_par_iter()
            .map(|stream| {
                let mut rng = stream_rng(seed, stream);
                let count = STREAM_CHUNK.min(samples - stream * STREAM_CHUNK);
                let mut hits = 0u64;
                for _ in 0..count {
                    let p = table.sample_uniform(&mut rng).expect("E(n) nonempty");
                    if DegreeSequence::from(&p).is_graphical() {
                        hits += 1;
                    }
                }
                hits
            })
            .sum()
    })?;
    let ratio = hits as f64 / samples as f64;
    let stderr = (ratio * (1.0 - ratio) / samples as f64).sqrt();
    let mut evals = Vec::with_capacity(conjectures.len());
    for form in conjectures {
        evals.push((form.name(), conjecture_eval(n as u64, *form)?));
    }
    Ok(EstimateReport {
        n,
        samples,
        seed,
        hits,
        ratio,
        stderr,
        conjectures: evals,
    })
}

/// Conjectured asymptotic forms for D(n) (and the G(N)/P(N) ratio),
/// evaluated on the log2 scale. Free constants are caller-supplied.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum ConjectureForm {
    /// 4^n / n
    BurnsLower,
    /// 4^n / ((ln n)^c sqrt(n))
    BurnsUpper { c: f64 },
    /// c * 4^n / ((ln n)^1.5 sqrt(n))
    WangForm { c: f64 },
    /// 4^n exp(-0.7 ln n / ln ln n) / (8 sqrt(pi n))
    PittelForm,
    /// exp(-0.3 ln N / ln ln N)
    GRatio,
}

impl ConjectureForm {
    pub fn name(&self) -> String {
        match self {
            ConjectureForm::BurnsLower => "burns-lower".into(),
            ConjectureForm::BurnsUpper { .. } => "burns-upper".into(),
            ConjectureForm::WangForm { .. } => "wang-form".into(),
            ConjectureForm::PittelForm => "pittel-form".into(),
            ConjectureForm::GRatio => "g-ratio".into(),
        }
    }
}

/// log2 of the selected expression. Raw values overflow f64 near
/// n = 512, hence the log scale.
pub fn conjecture_eval(n: u64, form: ConjectureForm) -> Result<f64> {
    if n < 2 {
        return Err(Error::InvalidArgument(format!(
            "conjecture formulas need n >= 2, got {n}"
        )));
    }
    let x = n as f64;
    let needs_loglog = matches!(form, ConjectureForm::PittelForm | ConjectureForm::GRatio);
    if needs_loglog && n < 3 {
        return Err(Error::InvalidArgument(format!(
            "log log n must be positive; need n >= 3, got {n}"
        )));
    }
    let ln2 = std::f64::consts::LN_2;
    Ok(match form {
        ConjectureForm::BurnsLower => 2.0 * x - x.log2(),
        ConjectureForm::BurnsUpper { c } => 2.0 * x - c * x.ln().log2() - 0.5 * x.log2(),
        ConjectureForm::WangForm { c } => {
            c.log2() + 2.0 * x - 1.5 * x.ln().log2() - 0.5 * x.log2()
        }
        ConjectureForm::PittelForm => {
            2.0 * x - 0.7 * (x.ln() / x.ln().ln()) / ln2
                - (8.0 * (std::f64::consts::PI * x).sqrt()).log2()
        }
        ConjectureForm::GRatio => -0.3 * (x.ln() / x.ln().ln()) / ln2,
    })
}

/// The unrestricted partition number p(N), via Euler's pentagonal
/// number recurrence.
pub fn unrestricted_p(n: u64) -> BigCount {
    let n = n as usize;
    let mut table: Vec<BigInt> = vec![BigInt::zero(); n + 1];
    table[0] = BigInt::one();
    for i in 1..=n {
        let mut acc = BigInt::zero();
        let mut k: i64 = 1;
        loop {
            let g1 = (k * (3 * k - 1) / 2) as usize;
            if g1 > i {
                break;
            }
            let plus = k % 2 == 1;
            if plus {
                acc += &table[i - g1];
            } else {
                acc -= &table[i - g1];
            }
            let g2 = (k * (3 * k + 1) / 2) as usize;
            if g2 <= i {
                if plus {
                    acc += &table[i - g2];
                } else {
                    acc -= &table[i - g2];
                }
            }
            k += 1;
        }
        table[i] = acc;
    }
    let (sign, mag) = table[n].clone().into_parts();
    debug_assert!(sign != Sign::Minus);
    mag
}
