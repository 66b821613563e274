//! Brute-force oracle: every partition of `[n]`, its flattening, the
//! descent/minimum statistics, and exact avoider counts.
//!
//! Partitions are generated as restricted growth functions (RGFs). The
//! standard increasing form is the block listing induced by the RGF, so no
//! sorting or deduplication is ever needed.

use std::collections::BTreeSet;

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::partition::{Permutation, SetPartition};
use crate::pattern::Pattern;

/// Odometer over restricted growth functions of length `n` with a fixed
/// prefix. Each state is one partition.
#[derive(Debug, Clone)]
pub struct RgfCursor {
    rgf: Vec<usize>,
    /// `max_upto[i]` = max of `rgf[0..=i]`
    max_upto: Vec<usize>,
    frozen: usize,
    started: bool,
    done: bool,
}

impl RgfCursor {
    pub fn new(n: usize) -> Result<Self> {
        Self::with_prefix(n, &[0])
    }

    /// Cursor over the RGFs of length `n` that start with `prefix`.
    /// `prefix` must itself be a valid RGF prefix starting with 0.
    pub fn with_prefix(n: usize, prefix: &[usize]) -> Result<Self> {
        if n == 0 {
            return Err(Error::EmptyGroundSet);
        }
        if prefix.is_empty() || prefix.len() > n || prefix[0] != 0 {
            return Err(Error::InvalidPartition(format!(
                "bad restricted growth prefix {prefix:?} for n = {n}"
            )));
        }
        let mut rgf = vec![0; n];
        let mut max_upto = vec![0; n];
        let mut m = 0;
        for (i, &x) in prefix.iter().enumerate() {
            if i > 0 && x > m + 1 {
                return Err(Error::InvalidPartition(format!(
                    "restricted growth violated at position {}",
                    i + 1
                )));
            }
            m = m.max(x);
            rgf[i] = x;
            max_upto[i] = m;
        }
        for slot in max_upto.iter_mut().skip(prefix.len()) {
            *slot = m;
        }
        Ok(RgfCursor {
            rgf,
            max_upto,
            frozen: prefix.len(),
            started: false,
            done: false,
        })
    }

    /// Moves to the next RGF; false once exhausted.
    pub fn advance(&mut self) -> bool {
        if self.done {
            return false;
        }
        if !self.started {
            self.started = true;
            return true;
        }
        let n = self.rgf.len();
        let mut i = n;
        while i > self.frozen {
            i -= 1;
            let bound = self.max_upto[i - 1] + 1;
            if self.rgf[i] < bound {
                self.rgf[i] += 1;
                self.max_upto[i] = self.max_upto[i - 1].max(self.rgf[i]);
                let m = self.max_upto[i];
                for j in i + 1..n {
                    self.rgf[j] = 0;
                    self.max_upto[j] = m;
                }
                return true;
            }
        }
        self.done = true;
        false
    }

    pub fn rgf(&self) -> &[usize] {
        &self.rgf
    }

    pub fn num_blocks(&self) -> usize {
        self.max_upto[self.rgf.len() - 1] + 1
    }

    /// Writes the flattening of the current partition into `out`.
    pub fn flatten_into(&self, out: &mut Vec<usize>) {
        let k = self.num_blocks();
        let mut start = vec![0usize; k + 1];
        for &label in &self.rgf {
            start[label + 1] += 1;
        }
        for b in 0..k {
            start[b + 1] += start[b];
        }
        out.clear();
        out.resize(self.rgf.len(), 0);
        for (i, &label) in self.rgf.iter().enumerate() {
            out[start[label]] = i + 1;
            start[label] += 1;
        }
    }

    pub fn first_block_len(&self) -> usize {
        self.rgf.iter().filter(|&&x| x == 0).count()
    }

    pub fn partition(&self) -> SetPartition {
        SetPartition::from_rgf(&self.rgf).expect("cursor holds a valid RGF")
    }
}

/// Stream of all partitions of `[n]`, each exactly once, in RGF
/// lexicographic order.
#[derive(Debug, Clone)]
pub struct Partitions {
    cursor: RgfCursor,
}

impl Iterator for Partitions {
    type Item = SetPartition;

    fn next(&mut self) -> Option<SetPartition> {
        self.cursor.advance().then(|| self.cursor.partition())
    }
}

pub fn enumerate_partitions(n: usize) -> Result<Partitions> {
    Ok(Partitions {
        cursor: RgfCursor::new(n)?,
    })
}

pub fn flatten(p: &SetPartition) -> Permutation {
    p.flatten()
}

/// The first entry, plus every entry smaller than its predecessor.
pub fn descent_terminators(w: &[usize]) -> BTreeSet<usize> {
    let mut out = BTreeSet::new();
    if let Some(&first) = w.first() {
        out.insert(first);
    }
    out.extend(w.windows(2).filter(|p| p[1] < p[0]).map(|p| p[1]));
    out
}

/// Entries smaller than everything after them.
pub fn rl_minima(w: &[usize]) -> BTreeSet<usize> {
    let mut out = BTreeSet::new();
    let mut min = usize::MAX;
    for &x in w.iter().rev() {
        if x < min {
            out.insert(x);
            min = x;
        }
    }
    out
}

pub fn block_initiators(p: &SetPartition) -> BTreeSet<usize> {
    p.block_initiators()
}

/// Right-to-left minima of the flattening that are not descent terminators.
pub fn statistic_m(p: &SetPartition) -> BTreeSet<usize> {
    m_of_word(p.flatten().word())
}

pub(crate) fn m_of_word(w: &[usize]) -> BTreeSet<usize> {
    let dt = descent_terminators(w);
    rl_minima(w).difference(&dt).copied().collect()
}

/// `|M|` without allocating: a right-to-left minimum is outside the descent
/// terminators iff it is not first and its predecessor is smaller.
pub fn m_size(w: &[usize]) -> usize {
    let mut count = 0;
    let mut min = usize::MAX;
    for i in (0..w.len()).rev() {
        let x = w[i];
        if x < min {
            min = x;
            if i > 0 && w[i - 1] < x {
                count += 1;
            }
        }
    }
    count
}

/// Which statistic a refined count is keyed on.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Refinement {
    /// `|M(p)|`.
    MSize,
    /// Length of the first block.
    FirstBlockLength,
}

fn statistic(cursor: &RgfCursor, word: &[usize], stat: Refinement) -> usize {
    match stat {
        Refinement::MSize => m_size(word),
        Refinement::FirstBlockLength => cursor.first_block_len(),
    }
}

/// Visits every RGF under `prefix`, handing the cursor and its flattening to
/// `visit`.
fn scan(n: usize, prefix: &[usize], mut visit: impl FnMut(&RgfCursor, &[usize])) -> Result<()> {
    let mut cursor = RgfCursor::with_prefix(n, prefix)?;
    let mut word = Vec::with_capacity(n);
    while cursor.advance() {
        cursor.flatten_into(&mut word);
        visit(&cursor, &word);
    }
    Ok(())
}

/// All valid RGF prefixes of the given length.
fn rgf_prefixes(len: usize) -> Vec<Vec<usize>> {
    let mut out = vec![vec![0usize]];
    for _ in 1..len {
        out = out
            .into_iter()
            .flat_map(|p| {
                let m = *p.iter().max().expect("nonempty");
                (0..=m + 1).map(move |x| {
                    let mut q = p.clone();
                    q.push(x);
                    q
                })
            })
            .collect();
    }
    out
}

/// Number of partitions of `[n]` whose flattening avoids `pat`.
pub fn count_avoiders(n: usize, pat: &Permutation) -> Result<u64> {
    let fast = Pattern::from_permutation(pat).ok();
    let mut count = 0u64;
    scan(n, &[0], |_, w| {
        let contained = match fast {
            Some(p) => p.is_contained_in(w),
            None => crate::pattern::contains_generic(w, pat.word()),
        };
        if !contained {
            count += 1;
        }
    })?;
    Ok(count)
}

/// Per-pattern avoider counts over one pass of the enumeration.
pub fn count_avoiders_all(n: usize) -> Result<[u64; 6]> {
    let mut counts = [0u64; 6];
    scan(n, &[0], |_, w| tally(&mut counts, w))?;
    Ok(counts)
}

fn tally(counts: &mut [u64; 6], w: &[usize]) {
    for (slot, pat) in counts.iter_mut().zip(Pattern::ALL) {
        if !pat.is_contained_in(w) {
            *slot += 1;
        }
    }
}

/// Same as [`count_avoiders_all`], with the space split on the first
/// `split_depth` RGF letters and the pieces counted on the rayon pool.
pub fn count_avoiders_all_parallel(n: usize, split_depth: usize) -> Result<[u64; 6]> {
    if n == 0 {
        return Err(Error::EmptyGroundSet);
    }
    let depth = split_depth.clamp(1, n);
    rgf_prefixes(depth)
        .par_iter()
        .map(|prefix| {
            let mut counts = [0u64; 6];
            scan(n, prefix, |_, w| tally(&mut counts, w))?;
            Ok(counts)
        })
        .try_reduce(
            || [0u64; 6],
            |mut a, b| {
                a.iter_mut().zip(b).for_each(|(x, y)| *x += y);
                Ok(a)
            },
        )
}

/// Avoiders of `pat` with statistic value exactly `k`.
pub fn count_refined(n: usize, k: usize, pat: Pattern, stat: Refinement) -> Result<u64> {
    let mut count = 0u64;
    scan(n, &[0], |cursor, w| {
        if statistic(cursor, w, stat) == k && !pat.is_contained_in(w) {
            count += 1;
        }
    })?;
    Ok(count)
}

/// The whole refined distribution: entry `k` counts avoiders with statistic
/// value `k`, for `k` in `0..=n`.
pub fn refined_distribution(n: usize, pat: Pattern, stat: Refinement) -> Result<Vec<u64>> {
    let mut dist = vec![0u64; n + 1];
    scan(n, &[0], |cursor, w| {
        if !pat.is_contained_in(w) {
            dist[statistic(cursor, w, stat)] += 1;
        }
    })?;
    Ok(dist)
}

/// Bell numbers via the Bell triangle.
pub fn bell(n: usize) -> u64 {
    let mut row = vec![1u64];
    for _ in 0..n {
        let mut next = Vec::with_capacity(row.len() + 1);
        next.push(*row.last().expect("nonempty"));
        for &x in &row {
            let v = *next.last().expect("nonempty") + x;
            next.push(v);
        }
        row = next;
    }
    row[0]
}
