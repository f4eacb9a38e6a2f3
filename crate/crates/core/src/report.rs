//! Rendering of census reports and the run/verify drivers behind the
//! `graph-census` binary.

use std::fmt::{self, Write as _};
use std::fs;
use std::path::PathBuf;
use std::str::FromStr;

use rand::rngs::StdRng;
use rand::seq::SliceRandom;
use rand::SeedableRng;

use crate::census::{
    check_accumulator, describe_permutation, report, run_census, CensusAccumulator, CensusOptions, CensusReport,
    Fault, Mode,
};
use crate::error::{Error, Result};
use crate::index_codec::{decode, GraphIndex, Order};
use crate::oracle;
use crate::perm::{admits_sc, Permutation};

/// Output format of a report.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Format {
    #[default]
    Table,
    Csv,
    Json,
}

impl FromStr for Format {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "table" => Ok(Format::Table),
            "csv" => Ok(Format::Csv),
            "json" => Ok(Format::Json),
            other => Err(Error::Domain(format!("unknown format {other:?} (expected table, csv or json)"))),
        }
    }
}

impl fmt::Display for Format {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Format::Table => "table",
            Format::Csv => "csv",
            Format::Json => "json",
        })
    }
}

fn pair_list(pairs: impl IntoIterator<Item = (u64, u128)>) -> String {
    pairs
        .into_iter()
        .map(|(a, b)| format!("({a},{b})"))
        .collect::<Vec<_>>()
        .join(",")
}

/// Renders a report. Every format ends with a newline; rows are in ascending group order.
pub fn render(report: &CensusReport, format: Format) -> String {
    match format {
        Format::Table => {
            let mut s = String::new();
            let _ = writeln!(s, "n = {}  mode = {}  lambda = {}", report.n, report.mode, report.lambda);
            let _ = writeln!(
                s,
                "labelled    {}  total {}",
                pair_list(report.labelled_pairs()),
                report.labelled_total
            );
            let _ = writeln!(
                s,
                "unlabelled  {}  total {}",
                pair_list(report.unlabelled_pairs()),
                report.unlabelled_total
            );
            let _ = writeln!(s, "burnside total {}", report.burnside_total);
            s
        }
        Format::Csv => {
            let mut s = String::from("group_order,labelled,unlabelled\n");
            for r in &report.rows {
                let _ = writeln!(s, "{},{},{}", r.group_order, r.labelled, r.unlabelled);
            }
            s
        }
        Format::Json => {
            let mut s = serde_json::to_string_pretty(report).expect("report serializes");
            s.push('\n');
            s
        }
    }
}

/// `"L,coefficient"` lines in ascending `L`.
pub fn coefficients_csv(acc: &CensusAccumulator) -> String {
    let mut s = String::from("L,coefficient\n");
    for (l, c) in acc.iter() {
        let _ = writeln!(s, "{l},{c}");
    }
    s
}

/// Everything one invocation needs.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RunConfig {
    pub n: usize,
    pub mode: Mode,
    pub format: Format,
    pub verify: bool,
    pub workers: usize,
    pub output_path: Option<PathBuf>,
    pub allow_large: bool,
    pub dump_coefficients: Option<PathBuf>,
    pub debug_permutation: Option<String>,
    #[doc(hidden)]
    pub fault: Option<Fault>,
}

impl RunConfig {
    pub fn new(n: usize, mode: Mode) -> Self {
        RunConfig {
            n,
            mode,
            format: Format::Table,
            verify: false,
            workers: CensusOptions::default().workers,
            output_path: None,
            allow_large: false,
            dump_coefficients: None,
            debug_permutation: None,
            fault: None,
        }
    }

    fn order(&self) -> Result<Order> {
        let order = Order::new(self.n)?;
        if self.mode == Mode::Sc && !admits_sc(order) {
            return Err(Error::Domain(format!(
                "sc mode needs n ≡ 0 or 1 (mod 4) and n ≥ 4, got n = {}",
                self.n
            )));
        }
        if self.workers == 0 {
            return Err(Error::Domain("--workers must be positive".into()));
        }
        Ok(order)
    }

    fn census_options(&self, verify: bool) -> CensusOptions {
        CensusOptions {
            workers: self.workers,
            verify,
            allow_large: self.allow_large,
            fault: self.fault,
        }
    }
}

/// Result of a successful [`run`].
#[derive(Debug, Clone)]
pub struct RunOutcome {
    /// The rendered report, or the permutation description in debug mode.
    pub text: String,
    pub report: Option<CensusReport>,
    pub verification: Option<VerifySummary>,
}

/// Runs a census (optionally verified), renders it and writes any requested files.
pub fn run(config: &RunConfig) -> Result<RunOutcome> {
    let order = config.order()?;

    if let Some(cycles) = &config.debug_permutation {
        let alpha = Permutation::parse_cycles(order, cycles)?;
        let text = describe_permutation(order, config.mode, &alpha)?;
        return Ok(RunOutcome { text, report: None, verification: None });
    }

    let (acc, verification) = if config.verify {
        let (acc, summary) = verify_with_accumulator(config)?;
        (acc, Some(summary))
    } else {
        (run_census(order, config.mode, &config.census_options(false))?, None)
    };
    let rep = report(&acc)?;
    let text = render(&rep, config.format);
    if let Some(path) = &config.output_path {
        fs::write(path, &text)?;
    }
    if let Some(path) = &config.dump_coefficients {
        fs::write(path, coefficients_csv(&acc))?;
    }
    Ok(RunOutcome { text, report: Some(rep), verification })
}

/// What a verification run compared.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerifySummary {
    pub n: usize,
    pub mode: Mode,
    /// Indices whose coefficient was checked against the oracle.
    pub compared: usize,
    /// Whether every index was compared (as opposed to a sample).
    pub exhaustive: bool,
}

impl fmt::Display for VerifySummary {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "verified n = {} mode = {}: {} indices compared against the oracle ({})",
            self.n,
            self.mode,
            self.compared,
            if self.exhaustive { "exhaustive" } else { "sampled" }
        )
    }
}

/// Runs the engine in verify mode and checks it against the brute-force oracle.
pub fn verify(config: &RunConfig) -> Result<VerifySummary> {
    verify_with_accumulator(config).map(|(_, s)| s)
}

/// Indices compared in the n = 8 spot check.
const SPOT_KEYS: usize = 24;
const SPOT_NON_KEYS: usize = 8;
const SPOT_SEED: u64 = 0x5c_2024;

fn mismatch(order: Order, l: GraphIndex, engine: u64, oracle: u64) -> Error {
    Error::Verification(format!(
        "index {l} ({}): engine coefficient {engine}, oracle {oracle}",
        l.to_binary(order)
    ))
}

fn verify_with_accumulator(config: &RunConfig) -> Result<(CensusAccumulator, VerifySummary)> {
    let order = config.order()?;
    let n = order.n();
    let exhaustive = n <= oracle::MAX_CENSUS_ORDER;
    let spot = config.mode == Mode::Sc && n == 8;
    if !exhaustive && !spot {
        return Err(Error::Domain(format!(
            "verification covers graphs n ≤ {0}, sc n ≤ {0}, and sc n = 8 (sampled); got {1} n = {n}",
            oracle::MAX_CENSUS_ORDER,
            config.mode
        )));
    }
    let acc = run_census(order, config.mode, &config.census_options(true))?;

    let compared = if exhaustive {
        let truth = oracle::full_oracle_census(order)?;
        let mut oracle_counts = Vec::new();
        for rec in truth.values() {
            let expected = match config.mode {
                Mode::Graphs => rec.aut_order,
                Mode::Sc if rec.is_self_complementary() => {
                    if rec.sc_witnesses.len() as u64 != rec.aut_order {
                        return Err(Error::Verification(format!(
                            "oracle: index {} has {} complementing permutations but {} automorphisms",
                            rec.index,
                            rec.sc_witnesses.len(),
                            rec.aut_order
                        )));
                    }
                    rec.aut_order
                }
                Mode::Sc => 0,
            };
            let got = acc.get(rec.index);
            if got != expected {
                return Err(mismatch(order, rec.index, got, expected));
            }
            if expected > 0 {
                oracle_counts.push(expected);
            }
        }
        if acc.key_count() != oracle_counts.len() as u128 {
            return Err(Error::Verification(format!(
                "engine has {} indices, oracle {}",
                acc.key_count(),
                oracle_counts.len()
            )));
        }
        let engine_report = report(&acc)?;
        let oracle_rows = histogram_of(&oracle_counts);
        if engine_report.labelled_pairs() != oracle_rows {
            return Err(Error::Verification(format!(
                "labelled table differs: engine {}, oracle {}",
                pair_list(engine_report.labelled_pairs()),
                pair_list(oracle_rows)
            )));
        }
        truth.len()
    } else {
        spot_check(order, &acc)?
    };
    check_accumulator(&acc)?;

    let summary = VerifySummary { n, mode: config.mode, compared, exhaustive };
    Ok((acc, summary))
}

fn histogram_of(counts: &[u64]) -> Vec<(u64, u128)> {
    let mut map = std::collections::BTreeMap::new();
    for &c in counts {
        *map.entry(c).or_insert(0u128) += 1;
    }
    map.into_iter().collect()
}

/// Sampled check for orders too large for an exhaustive oracle census:
/// a handful of engine keys get their group order recomputed, and random
/// half-edge graphs outside the key set are confirmed not self-complementary.
fn spot_check(order: Order, acc: &CensusAccumulator) -> Result<usize> {
    let mut rng = StdRng::seed_from_u64(SPOT_SEED);
    let keys: Vec<(GraphIndex, u64)> = acc.iter().collect();
    let sample: Vec<&(GraphIndex, u64)> = keys.choose_multiple(&mut rng, SPOT_KEYS).collect();
    for &&(l, c) in &sample {
        let g = decode(order, l)?;
        if !oracle::is_self_complementary(&g)? {
            return Err(mismatch(order, l, c, 0));
        }
        let truth = oracle::aut_order_bruteforce(&g)?;
        if truth != c {
            return Err(mismatch(order, l, c, truth));
        }
    }

    let lambda = order.lambda();
    let mut checked = 0;
    while checked < SPOT_NON_KEYS {
        // uniform over graphs with lambda/2 edges
        let mut positions: Vec<usize> = (0..lambda).collect();
        positions.shuffle(&mut rng);
        let l = GraphIndex(positions[..lambda / 2].iter().map(|&p| 1u128 << p).sum());
        if acc.get(l) != 0 {
            continue;
        }
        if oracle::is_self_complementary(&decode(order, l)?)? {
            let truth = oracle::aut_order_bruteforce(&decode(order, l)?)?;
            return Err(mismatch(order, l, 0, truth));
        }
        checked += 1;
    }
    Ok(sample.len() + checked)
}
