//! High-throughput distribution of the gap-modular inversion statistic over
//! the symmetric group, without materializing root-system elements.
//!
//! Permutations are built position by position. For each residue class of
//! positions mod k the values already placed are kept in a bitmask; placing
//! value v at position j contributes the number of larger values previously
//! placed at positions congruent to j - h, which is one shifted popcount.
//! Prefixes of a fixed depth are distributed to a worker pool; per-worker
//! histograms merge by pointwise addition, so the result is identical for
//! every thread count.

use std::sync::atomic::{AtomicUsize, Ordering};

use crate::distribution::Distribution;
use crate::error::Error;
use crate::root_system::{Family, GroupSpec};
use crate::stats::{for_each_permutation, inv_kh, StatSpec};

/// Largest supported rank: 20! fits in u64, 21! does not.
pub const MAX_RANK: usize = 19;

/// Number of position pairs (i, j), i < j <= n+1, with gap j - i congruent to
/// h mod k. This is the top degree of the distribution, equal to the
/// height-class count of the type A_n root system.
pub fn pair_class_count(n: usize, stat: StatSpec) -> usize {
    let (k, h) = (stat.k() as usize, stat.h() as usize);
    (1..=n).filter(|g| g % k == h).map(|g| n + 1 - g).sum()
}

/// Exact coefficient vector of the statistic's generating function over all
/// (n+1)! permutations.
pub fn distribution_type_a(n: usize, stat: StatSpec, threads: usize) -> Result<Distribution, Error> {
    if n == 0 || n > MAX_RANK {
        return Err(Error::TooLarge {
            what: "type A rank",
            detail: format!("rank {n} outside 1..={MAX_RANK} (counts are 64-bit)"),
        });
    }
    let group = GroupSpec::new(Family::A, n)?;
    let m = n + 1;
    let degree = pair_class_count(n, stat);

    // Gaps never exceed n, so any k > n leaves at most the single gap h in
    // play; fold such statistics onto modulus n+1 to bound the class tables.
    // An out-of-range residue means the statistic is identically zero.
    let (k_eff, h_eff) = if (stat.k() as usize) > n {
        let h = stat.h() as usize;
        if (1..=n).contains(&h) {
            (m, h)
        } else {
            let mut counts = vec![0u64; degree + 1];
            counts[0] = factorial(m);
            return Ok(Distribution::new(group, stat, counts));
        }
    } else {
        (stat.k() as usize, stat.h() as usize)
    };

    let threads = threads.max(1);
    let split_depth = split_depth(m, threads);
    let prefixes = prefixes(m, split_depth);

    let job = Job {
        m,
        k_eff,
        h_eff,
        degree,
    };
    let next = AtomicUsize::new(0);
    let worker_count = threads.min(prefixes.len());
    let partials: Vec<Vec<u64>> = std::thread::scope(|scope| {
        let handles: Vec<_> = (0..worker_count)
            .map(|_| {
                let job = &job;
                let prefixes = &prefixes;
                let next = &next;
                scope.spawn(move || {
                    let mut state = DfsState::new(job);
                    loop {
                        let i = next.fetch_add(1, Ordering::Relaxed);
                        let Some(prefix) = prefixes.get(i) else {
                            return state.hist;
                        };
                        state.run_prefix(prefix);
                    }
                })
            })
            .collect();
        handles.into_iter().map(|h| h.join().unwrap()).collect()
    });

    let mut counts = vec![0u64; degree + 1];
    for partial in partials {
        for (slot, add) in counts.iter_mut().zip(partial) {
            *slot = slot
                .checked_add(add)
                .expect("histogram overflow while merging worker results");
        }
    }
    Ok(Distribution::new(group, stat, counts))
}

/// Brute-force oracle over all one-line permutations; rank 7 at most.
pub fn distribution_type_a_reference(n: usize, stat: StatSpec) -> Distribution {
    assert!(n >= 1 && n <= 7, "reference engine is capped at rank 7");
    let group = GroupSpec::new(Family::A, n).unwrap();
    let mut counts = vec![0u64; pair_class_count(n, stat) + 1];
    for_each_permutation(n + 1, |p| {
        counts[inv_kh(p, stat) as usize] += 1;
    });
    Distribution::new(group, stat, counts)
}

fn factorial(m: usize) -> u64 {
    (2..=m as u64).product()
}

/// Smallest prefix depth whose subtree count reaches 16 jobs per worker,
/// capped at m - 1 so every prefix leaves at least one free position.
fn split_depth(m: usize, threads: usize) -> usize {
    let target = 16u64.saturating_mul(threads as u64);
    let mut count = 1u64;
    for d in 1..m {
        count *= (m - d + 1) as u64;
        if count >= target {
            return d;
        }
    }
    m.saturating_sub(1)
}

/// All ordered choices of `depth` distinct values out of 1..=m.
fn prefixes(m: usize, depth: usize) -> Vec<Vec<u8>> {
    let mut out = Vec::new();
    let mut current = Vec::with_capacity(depth);
    fn rec(m: usize, depth: usize, used: u32, current: &mut Vec<u8>, out: &mut Vec<Vec<u8>>) {
        if current.len() == depth {
            out.push(current.clone());
            return;
        }
        for v in 1..=m as u8 {
            if used >> (v - 1) & 1 == 0 {
                current.push(v);
                rec(m, depth, used | 1 << (v - 1), current, out);
                current.pop();
            }
        }
    }
    rec(m, depth, 0, &mut current, &mut out);
    out
}

struct Job {
    m: usize,
    k_eff: usize,
    h_eff: usize,
    degree: usize,
}

struct DfsState<'a> {
    job: &'a Job,
    /// Bitmask of placed values per position-residue class; bit v-1 = value v.
    class_masks: Vec<u32>,
    hist: Vec<u64>,
}

impl<'a> DfsState<'a> {
    fn new(job: &'a Job) -> Self {
        DfsState {
            job,
            class_masks: vec![0u32; job.k_eff],
            hist: vec![0u64; job.degree + 1],
        }
    }

    /// Class whose previously placed values pair with position j.
    #[inline]
    fn source_class(&self, j: usize) -> usize {
        (j + self.job.k_eff - self.job.h_eff) % self.job.k_eff
    }

    fn run_prefix(&mut self, prefix: &[u8]) {
        self.class_masks.fill(0);
        let mut used = 0u32;
        let mut value = 0u32;
        for (i, &v) in prefix.iter().enumerate() {
            let j = i + 1;
            value += (self.class_masks[self.source_class(j)] >> v).count_ones();
            self.class_masks[j % self.job.k_eff] |= 1 << (v - 1);
            used |= 1 << (v - 1);
        }
        self.place(prefix.len() + 1, used, value);
    }

    fn place(&mut self, j: usize, used: u32, value: u32) {
        let m = self.job.m;
        let src = self.source_class(j);
        let own = j % self.job.k_eff;
        let mut avail = !used & ((1u32 << m) - 1);

        if j == m {
            // single value left; no deeper recursion
            let v = avail.trailing_zeros() + 1;
            let add = (self.class_masks[src] >> v).count_ones();
            self.hist[(value + add) as usize] += 1;
            return;
        }

        while avail != 0 {
            let bit = avail & avail.wrapping_neg();
            avail ^= bit;
            let v = bit.trailing_zeros() + 1;
            let add = (self.class_masks[src] >> v).count_ones();
            self.class_masks[own] |= bit;
            self.place(j + 1, used | bit, value + add);
            self.class_masks[own] &= !bit;
        }
    }
}
