use std::collections::BTreeMap;

use serde::Serialize;

use super::{CensusAccumulator, Mode};
use crate::error::{Error, Result};

/// Number of indices carrying each coefficient value (group order).
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct GroupOrderHistogram {
    pub rows: BTreeMap<u64, u128>,
}

impl GroupOrderHistogram {
    /// Number of indices counted.
    pub fn total(&self) -> u128 {
        self.rows.values().sum()
    }

    /// `sum xi * count`, which equals the sum of all coefficients.
    pub fn weighted_total(&self) -> u128 {
        self.rows.iter().map(|(&xi, &c)| xi as u128 * c).sum()
    }

    /// Rows as `(xi, count)` pairs in ascending `xi`.
    pub fn pairs(&self) -> Vec<(u64, u128)> {
        self.rows.iter().map(|(&k, &v)| (k, v)).collect()
    }
}

pub fn histogram(acc: &CensusAccumulator) -> GroupOrderHistogram {
    let mut rows = BTreeMap::new();
    for (_, c) in acc.iter() {
        *rows.entry(c).or_insert(0) += 1;
    }
    GroupOrderHistogram { rows }
}

/// One group order with its labelled and unlabelled counts.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct ReportRow {
    pub group_order: u64,
    pub labelled: u128,
    pub unlabelled: u128,
}

/// Census summary.
///
/// Fields are declared in alphabetical order so the JSON form is key-sorted.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CensusReport {
    pub burnside_total: u128,
    pub labelled_total: u128,
    pub lambda: usize,
    pub mode: Mode,
    pub n: usize,
    pub rows: Vec<ReportRow>,
    pub unlabelled_total: u128,
}

/// Derives labelled and unlabelled counts per group order.
///
/// Unlabelled counts are `xi * |L_xi| / n!`; a nonzero remainder means the
/// engine produced a wrong coefficient and is reported as a consistency error.
pub fn report(acc: &CensusAccumulator) -> Result<CensusReport> {
    let order = acc.order();
    let fact = order.factorial() as u128;
    let hist = histogram(acc);
    let mut rows = Vec::with_capacity(hist.rows.len());
    for (&xi, &labelled) in &hist.rows {
        if xi == 0 || fact % xi as u128 != 0 {
            return Err(Error::Consistency(format!(
                "group order {xi} does not divide {}! = {fact}",
                order.n()
            )));
        }
        let product = xi as u128 * labelled;
        if product % fact != 0 {
            return Err(Error::Consistency(format!(
                "{xi} * {labelled} is not divisible by {}! = {fact}",
                order.n()
            )));
        }
        rows.push(ReportRow { group_order: xi, labelled, unlabelled: product / fact });
    }
    let burnside_total = acc.burnside_total();
    if hist.weighted_total() != burnside_total {
        return Err(Error::Consistency(format!(
            "histogram weight {} differs from coefficient sum {burnside_total}",
            hist.weighted_total()
        )));
    }
    Ok(CensusReport {
        burnside_total,
        labelled_total: rows.iter().map(|r| r.labelled).sum(),
        lambda: order.lambda(),
        mode: acc.mode(),
        n: order.n(),
        unlabelled_total: rows.iter().map(|r| r.unlabelled).sum(),
        rows,
    })
}

impl CensusReport {
    /// `(xi, labelled)` pairs.
    pub fn labelled_pairs(&self) -> Vec<(u64, u128)> {
        self.rows.iter().map(|r| (r.group_order, r.labelled)).collect()
    }

    /// `(xi, unlabelled)` pairs.
    pub fn unlabelled_pairs(&self) -> Vec<(u64, u128)> {
        self.rows.iter().map(|r| (r.group_order, r.unlabelled)).collect()
    }
}

#[cfg(test)]
mod tests {
    use super::super::accumulator::Backing;
    use super::*;
    use crate::index_codec::Order;

    fn acc(n: usize, mode: Mode, entries: Vec<(u64, u64)>) -> CensusAccumulator {
        CensusAccumulator {
            mode,
            order: Order::new(n).unwrap(),
            backing: Backing::Sparse(entries),
        }
    }

    #[test]
    fn n3_report_by_hand() {
        // n = 3: empty and complete graphs are fixed by all 6 permutations,
        // the other 6 graphs by a transposition.
        let a = acc(3, Mode::Graphs, (0..8).map(|l| (l, if l == 0 || l == 7 { 6 } else { 2 })).collect());
        let r = report(&a).unwrap();
        assert_eq!(r.labelled_pairs(), vec![(2, 6), (6, 2)]);
        assert_eq!(r.unlabelled_pairs(), vec![(2, 2), (6, 2)]);
        assert_eq!(r.labelled_total, 8);
        assert_eq!(r.unlabelled_total, 4);
        assert_eq!(r.burnside_total, 24);
    }

    #[test]
    fn non_exact_division_is_a_consistency_error() {
        let a = acc(3, Mode::Graphs, vec![(0, 2)]);
        assert!(matches!(report(&a), Err(Error::Consistency(_))));
        let a = acc(4, Mode::Graphs, vec![(0, 5)]);
        assert!(matches!(report(&a), Err(Error::Consistency(_))));
    }

    #[test]
    fn histogram_closure() {
        let a = acc(4, Mode::Sc, vec![(14, 2), (28, 2), (35, 2)]);
        let h = histogram(&a);
        assert_eq!(h.pairs(), vec![(2, 3)]);
        assert_eq!(h.weighted_total(), a.burnside_total());
        assert_eq!(h.total(), a.key_count());
    }
}
