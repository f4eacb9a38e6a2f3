//! Generating-function census.
//!
//! For every permutation `alpha`, the product over the cycles of `alpha'` is
//! expanded term by term and each exponent is counted. In graphs mode each
//! cycle contributes `1 + x^W(z)`; the coefficient of `x^L` in the sum over
//! all permutations is the order of the automorphism group of the graph with
//! index `L`. In self-complementary mode only admissible permutations
//! contribute, each cycle contributes `x^W1(z) + x^W2(z)`, and the exponents
//! that occur are exactly the indices of self-complementary graphs.

mod accumulator;
mod summary;
mod terms;

use std::collections::HashSet;
use std::fmt;
use std::str::FromStr;
use std::thread;

use log::{debug, info, warn};
use serde::Serialize;

pub use accumulator::CensusAccumulator;
pub use summary::{histogram, report, CensusReport, GroupOrderHistogram, ReportRow};
pub use terms::TermIter;

use crate::error::{Error, Result};
use crate::index_codec::{pair_weight, Order};
use crate::perm::{
    check_sc_order, cycle_weights, pair_decomposition, split_ranks, CycleType, PairCycle,
    PairDecomposition, Permutation, Permutations,
};
use accumulator::{merge_tallies, Tally};

/// Largest graphs-mode order run without `allow_large` (dense storage, 2^21 counters).
pub const GRAPHS_CAP: usize = 7;
/// Largest self-complementary order run without `allow_large`.
pub const SC_CAP: usize = 9;

/// Which generating function to expand.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Mode {
    Graphs,
    Sc,
}

impl fmt::Display for Mode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Mode::Graphs => "graphs",
            Mode::Sc => "sc",
        })
    }
}

impl FromStr for Mode {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "graphs" => Ok(Mode::Graphs),
            "sc" => Ok(Mode::Sc),
            other => Err(Error::Domain(format!("unknown mode {other:?} (expected graphs or sc)"))),
        }
    }
}

/// Deliberate engine defects for mutation testing.
#[doc(hidden)]
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Fault {
    /// Start every pair cycle one element after its maximum-weight pair.
    RotateParity,
    /// Let 2-cycles through the admissibility filter.
    AdmitTwoCycles,
    /// Add one to every `W2`.
    ShiftEvenWeight,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CensusOptions {
    /// Number of threads; `1` is the reference sequential sweep.
    pub workers: usize,
    /// Check per-permutation invariants (term distinctness, canonical rotation,
    /// weight identities) during the sweep.
    pub verify: bool,
    /// Permit orders above [`GRAPHS_CAP`] / [`SC_CAP`].
    pub allow_large: bool,
    #[doc(hidden)]
    pub fault: Option<Fault>,
}

impl Default for CensusOptions {
    fn default() -> Self {
        CensusOptions {
            workers: thread::available_parallelism().map_or(1, |n| n.get()),
            verify: false,
            allow_large: false,
            fault: None,
        }
    }
}

impl CensusOptions {
    pub fn sequential() -> Self {
        CensusOptions { workers: 1, ..Default::default() }
    }

    pub fn with_workers(mut self, workers: usize) -> Self {
        self.workers = workers;
        self
    }

    pub fn with_verify(mut self, verify: bool) -> Self {
        self.verify = verify;
        self
    }

    pub fn with_allow_large(mut self, allow: bool) -> Self {
        self.allow_large = allow;
        self
    }

    #[doc(hidden)]
    pub fn with_fault(mut self, fault: Option<Fault>) -> Self {
        self.fault = fault;
        self
    }
}

/// Exponents of `F_alpha(x) = prod_z (1 + x^W(z))`, each exactly once.
pub fn expand_graph_terms(order: Order, alpha: &Permutation) -> Result<TermIter> {
    check_degree(order, alpha)?;
    let d = pair_decomposition(alpha);
    Ok(TermIter::new(graph_factors(order, &d.cycles)))
}

/// Exponents of `U_alpha(x) = prod_z (x^W1(z) + x^W2(z))`, each exactly once.
pub fn expand_sc_terms(order: Order, alpha: &Permutation) -> Result<TermIter> {
    check_sc_order(order)?;
    check_degree(order, alpha)?;
    if !alpha.cycle_type().is_sc_admissible() {
        return Err(Error::Domain(format!(
            "{alpha} (cycle type {}) cannot map a graph onto its complement",
            alpha.cycle_type()
        )));
    }
    let d = pair_decomposition(alpha);
    Ok(TermIter::new(sc_factors(order, &d.cycles, None)))
}

fn check_degree(order: Order, alpha: &Permutation) -> Result<()> {
    if alpha.n() != order.n() {
        return Err(Error::Domain(format!(
            "permutation of degree {} used with order {order}",
            alpha.n()
        )));
    }
    Ok(())
}

fn graph_factors(order: Order, cycles: &[PairCycle]) -> Vec<(u128, u128)> {
    cycles.iter().map(|z| (cycle_weights(order, z).w_full, 0)).collect()
}

fn sc_factors(order: Order, cycles: &[PairCycle], fault: Option<Fault>) -> Vec<(u128, u128)> {
    cycles
        .iter()
        .map(|z| {
            let w = cycle_weights(order, z);
            let even = if fault == Some(Fault::ShiftEvenWeight) { w.w_even + 1 } else { w.w_even };
            (w.w_odd, even)
        })
        .collect()
}

fn admissible(cycle_type: &CycleType, fault: Option<Fault>) -> bool {
    if fault == Some(Fault::AdmitTwoCycles) {
        return cycle_type.m(1) <= 1 && cycle_type.parts().all(|(k, _)| k == 1 || k % 2 == 0);
    }
    cycle_type.is_sc_admissible()
}

/// Expands the generating function of `mode` at order `n`.
pub fn run_census(order: Order, mode: Mode, opts: &CensusOptions) -> Result<CensusAccumulator> {
    if opts.workers == 0 {
        return Err(Error::Domain("worker count must be positive".into()));
    }
    let n = order.n();
    let lambda = order.lambda();
    let dense = match mode {
        Mode::Graphs => {
            if n > GRAPHS_CAP {
                if !opts.allow_large {
                    return Err(Error::Resource(format!(
                        "graphs census at n = {n} needs 2^{lambda} counters; \
                         the default cap is n = {GRAPHS_CAP} (2^21 counters, 16 MiB). \
                         Pass allow-large to override"
                    )));
                }
                warn!(
                    "graphs census at n = {n} sweeps {} permutations into up to 2^{lambda} keys; \
                     using sparse storage, expect a long run",
                    order.factorial()
                );
                false
            } else {
                true
            }
        }
        Mode::Sc => {
            check_sc_order(order)?;
            if n > SC_CAP {
                if !opts.allow_large {
                    return Err(Error::Resource(format!(
                        "self-complementary census at n = {n} sweeps {n}! = {} permutations; \
                         the default cap is n = {SC_CAP}. Pass allow-large to override",
                        order.factorial()
                    )));
                }
                warn!("self-complementary census at n = {n}: expect a long run");
            }
            false
        }
    };
    if !dense && lambda > 64 {
        return Err(Error::Resource(format!(
            "sparse storage packs indices into 64 bits; n = {n} needs {lambda}"
        )));
    }

    let ranges = split_ranks(order.factorial(), opts.workers);
    info!(
        "{mode} census at n = {n}: {} permutations over {} worker(s), {} storage",
        order.factorial(),
        ranges.len(),
        if dense { "dense" } else { "sparse" }
    );
    for r in &ranges {
        debug!("worker ranks {}..{}", r.start, r.end);
    }
    let tallies: Vec<Result<Tally>> = if ranges.len() == 1 {
        vec![sweep(order, mode, dense, ranges[0].clone(), opts)]
    } else {
        thread::scope(|s| {
            let handles: Vec<_> = ranges
                .iter()
                .cloned()
                .map(|r| s.spawn(move || sweep(order, mode, dense, r, opts)))
                .collect();
            handles
                .into_iter()
                .map(|h| h.join().expect("census worker panicked"))
                .collect()
        })
    };
    let tallies = tallies.into_iter().collect::<Result<Vec<_>>>()?;
    let acc = merge_tallies(mode, order, tallies);
    info!("merged {} nonzero coefficients", acc.key_count());
    Ok(acc)
}

/// `lsc(n)`: the number of distinct exponents of `U(x)`.
pub fn labelled_sc_total(order: Order, opts: &CensusOptions) -> Result<u128> {
    Ok(run_census(order, Mode::Sc, opts)?.key_count())
}

fn sweep(
    order: Order,
    mode: Mode,
    dense: bool,
    ranks: std::ops::Range<u64>,
    opts: &CensusOptions,
) -> Result<Tally> {
    let mut tally = if dense { Tally::dense(1usize << order.lambda()) } else { Tally::sparse() };
    let mut seen: HashSet<u128> = HashSet::new();
    for alpha in Permutations::with_ranks(order, ranks) {
        if mode == Mode::Sc && !admissible(&alpha.cycle_type(), opts.fault) {
            continue;
        }
        let mut d = pair_decomposition(&alpha);
        if opts.fault == Some(Fault::RotateParity) {
            for z in d.cycles.iter_mut() {
                *z = z.rotated(1);
            }
        }
        if opts.verify {
            check_decomposition(order, mode, &d)?;
        }
        let factors = match mode {
            Mode::Graphs => graph_factors(order, &d.cycles),
            Mode::Sc => sc_factors(order, &d.cycles, opts.fault),
        };
        let terms = TermIter::new(factors);
        if opts.verify {
            seen.clear();
            for t in terms {
                if !seen.insert(t.0) {
                    return Err(Error::Consistency(format!(
                        "exponent {t} occurs twice in the expansion for {alpha}"
                    )));
                }
                tally.add(t);
            }
        } else {
            for t in terms {
                tally.add(t);
            }
        }
    }
    Ok(tally)
}

/// Canonical rotation, weight identities and, in sc mode, even cycle lengths.
fn check_decomposition(order: Order, mode: Mode, d: &PairDecomposition) -> Result<()> {
    let alpha = &d.alpha;
    let mut total = 0u128;
    for z in &d.cycles {
        let w = cycle_weights(order, z);
        let weights: Vec<u128> = z
            .elements()
            .iter()
            .map(|&e| pair_weight(order, e).expect("pair of this order"))
            .collect();
        if weights[1..].iter().any(|&x| x >= weights[0]) {
            return Err(Error::Consistency(format!(
                "cycle {z} of {alpha} is not led by its maximum-weight pair"
            )));
        }
        if w.w_odd + w.w_even != w.w_full || w.w_odd <= w.w_even {
            return Err(Error::Consistency(format!(
                "cycle {z} of {alpha}: W1 = {}, W2 = {}, W = {}",
                w.w_odd, w.w_even, w.w_full
            )));
        }
        if mode == Mode::Sc && z.len() % 2 == 1 {
            return Err(Error::Consistency(format!(
                "odd-length cycle {z} in the pair decomposition of {alpha}"
            )));
        }
        total += w.w_full;
    }
    if total != order.max_index() {
        return Err(Error::Consistency(format!(
            "cycle weights of {alpha} sum to {total}, expected {}",
            order.max_index()
        )));
    }
    Ok(())
}

/// Whole-accumulator invariants: every graph present in graphs mode; half the
/// pairs as edges in sc mode.
pub fn check_accumulator(acc: &CensusAccumulator) -> Result<()> {
    let order = acc.order();
    match acc.mode() {
        Mode::Graphs => {
            let expected = order.max_index() + 1;
            if acc.key_count() != expected {
                return Err(Error::Consistency(format!(
                    "graphs census has {} keys, expected 2^{} = {expected}",
                    acc.key_count(),
                    order.lambda()
                )));
            }
        }
        Mode::Sc => {
            let half = (order.lambda() / 2) as u32;
            let mut trivial = 0u64;
            for (l, c) in acc.iter() {
                if l.edge_count() != half {
                    return Err(Error::Consistency(format!(
                        "sc key {l} ({}) has {} edges, expected {half}",
                        l.to_binary(order),
                        l.edge_count()
                    )));
                }
                if c < 2 {
                    trivial += 1;
                }
            }
            if trivial > 0 {
                warn!("{trivial} self-complementary indices have coefficient < 2");
            }
        }
    }
    Ok(())
}

/// Convenience for `debug` output: the decomposition and the expansion of one permutation.
pub fn describe_permutation(order: Order, mode: Mode, alpha: &Permutation) -> Result<String> {
    use std::fmt::Write;
    check_degree(order, alpha)?;
    let d = pair_decomposition(alpha);
    let mut out = String::new();
    let _ = writeln!(out, "alpha = {alpha}  (cycle type {})", d.cycle_type);
    for z in &d.cycles {
        let w = cycle_weights(order, z);
        let _ = writeln!(out, "  {z}  W = {}  W1 = {}  W2 = {}", w.w_full, w.w_odd, w.w_even);
    }
    let terms = match mode {
        Mode::Graphs => expand_graph_terms(order, alpha)?,
        Mode::Sc => expand_sc_terms(order, alpha)?,
    };
    const SHOWN: usize = 64;
    let total = terms.term_count();
    let _ = writeln!(out, "{total} terms:");
    for t in terms.take(SHOWN) {
        let _ = writeln!(out, "  {t}  {}", t.to_binary(order));
    }
    if total > SHOWN as u128 {
        let _ = writeln!(out, "  ... ({} more)", total - SHOWN as u128);
    }
    Ok(out)
}
