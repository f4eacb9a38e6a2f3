use std::cmp::Ordering;

use crate::census::Mode;
use crate::index_codec::{GraphIndex, Order};

/// Buffered emissions per worker before a sort-and-fold pass.
const FLUSH_LEN: usize = 1 << 23;

/// Exponent → coefficient map produced by a census sweep.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CensusAccumulator {
    pub(crate) mode: Mode,
    pub(crate) order: Order,
    pub(crate) backing: Backing,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub(crate) enum Backing {
    /// `counts[L]` for every `L` in `0..2^lambda`; zero means absent.
    Dense(Vec<u64>),
    /// Sorted by key, no duplicates, no zero counts.
    Sparse(Vec<(u64, u64)>),
}

impl CensusAccumulator {
    pub fn mode(&self) -> Mode {
        self.mode
    }

    pub fn order(&self) -> Order {
        self.order
    }

    pub fn is_dense(&self) -> bool {
        matches!(self.backing, Backing::Dense(_))
    }

    /// Coefficient of `x^L`; zero when `L` never occurred.
    pub fn get(&self, index: GraphIndex) -> u64 {
        match &self.backing {
            Backing::Dense(v) => usize::try_from(index.0)
                .ok()
                .and_then(|k| v.get(k))
                .copied()
                .unwrap_or(0),
            Backing::Sparse(v) => u64::try_from(index.0)
                .ok()
                .and_then(|key| v.binary_search_by_key(&key, |&(k, _)| k).ok())
                .map_or(0, |pos| v[pos].1),
        }
    }

    /// Number of exponents with a nonzero coefficient.
    pub fn key_count(&self) -> u128 {
        match &self.backing {
            Backing::Dense(v) => v.iter().filter(|&&c| c > 0).count() as u128,
            Backing::Sparse(v) => v.len() as u128,
        }
    }

    /// `(L, coefficient)` in ascending `L`, nonzero coefficients only.
    pub fn iter(&self) -> Box<dyn Iterator<Item = (GraphIndex, u64)> + '_> {
        match &self.backing {
            Backing::Dense(v) => Box::new(
                v.iter()
                    .enumerate()
                    .filter(|&(_, &c)| c > 0)
                    .map(|(k, &c)| (GraphIndex(k as u128), c)),
            ),
            Backing::Sparse(v) => Box::new(v.iter().map(|&(k, c)| (GraphIndex(k as u128), c))),
        }
    }

    /// Sum of all coefficients.
    pub fn burnside_total(&self) -> u128 {
        self.iter().map(|(_, c)| c as u128).sum()
    }
}

/// Per-worker tally. Dense tallies use 32-bit counters.
pub(crate) enum Tally {
    Dense(Vec<u32>),
    Sparse(SparseTally),
}

impl Tally {
    pub(crate) fn dense(len: usize) -> Self {
        Tally::Dense(vec![0; len])
    }

    pub(crate) fn sparse() -> Self {
        Tally::Sparse(SparseTally::default())
    }

    #[inline]
    pub(crate) fn add(&mut self, index: GraphIndex) {
        match self {
            Tally::Dense(v) => v[index.0 as usize] += 1,
            Tally::Sparse(s) => s.add(index.0 as u64),
        }
    }
}

/// Emissions are buffered, then sorted and folded into a sorted run.
#[derive(Default)]
pub(crate) struct SparseTally {
    buffer: Vec<u64>,
    folded: Vec<(u64, u64)>,
}

impl SparseTally {
    #[inline]
    fn add(&mut self, key: u64) {
        self.buffer.push(key);
        if self.buffer.len() >= FLUSH_LEN {
            self.flush();
        }
    }

    fn flush(&mut self) {
        if self.buffer.is_empty() {
            return;
        }
        self.buffer.sort_unstable();
        let mut run: Vec<(u64, u64)> = Vec::new();
        for &k in &self.buffer {
            match run.last_mut() {
                Some((last, c)) if *last == k => *c += 1,
                _ => run.push((k, 1)),
            }
        }
        self.buffer.clear();
        let folded = std::mem::take(&mut self.folded);
        self.folded = merge_runs(folded, run);
    }

    pub(crate) fn finish(mut self) -> Vec<(u64, u64)> {
        self.flush();
        self.folded
    }
}

/// Pointwise sum of two sorted runs.
pub(crate) fn merge_runs(a: Vec<(u64, u64)>, b: Vec<(u64, u64)>) -> Vec<(u64, u64)> {
    if a.is_empty() {
        return b;
    }
    if b.is_empty() {
        return a;
    }
    let mut out = Vec::with_capacity(a.len().max(b.len()));
    let (mut i, mut j) = (0, 0);
    while i < a.len() && j < b.len() {
        match a[i].0.cmp(&b[j].0) {
            Ordering::Less => {
                out.push(a[i]);
                i += 1;
            }
            Ordering::Greater => {
                out.push(b[j]);
                j += 1;
            }
            Ordering::Equal => {
                out.push((a[i].0, a[i].1 + b[j].1));
                i += 1;
                j += 1;
            }
        }
    }
    out.extend_from_slice(&a[i..]);
    out.extend_from_slice(&b[j..]);
    out
}

/// Merges worker tallies in worker order. Both merges are pointwise sums, so
/// the result does not depend on how the permutation stream was split.
pub(crate) fn merge_tallies(mode: Mode, order: Order, tallies: Vec<Tally>) -> CensusAccumulator {
    let mut dense: Option<Vec<u64>> = None;
    let mut sparse: Option<Vec<(u64, u64)>> = None;
    for t in tallies {
        match t {
            Tally::Dense(v) => {
                let acc = dense.get_or_insert_with(|| vec![0; v.len()]);
                for (slot, c) in acc.iter_mut().zip(v) {
                    *slot += c as u64;
                }
            }
            Tally::Sparse(s) => {
                let run = s.finish();
                sparse = Some(match sparse.take() {
                    Some(prev) => merge_runs(prev, run),
                    None => run,
                });
            }
        }
    }
    let backing = match (dense, sparse) {
        (Some(v), None) => Backing::Dense(v),
        (None, Some(v)) => Backing::Sparse(v),
        (None, None) => Backing::Sparse(Vec::new()),
        (Some(_), Some(_)) => unreachable!("workers share one storage kind"),
    };
    CensusAccumulator { mode, order, backing }
}
