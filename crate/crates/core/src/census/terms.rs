//! Term expansion for one permutation.
//!
//! Every factor of `F_alpha` and `U_alpha` is a two-term polynomial
//! (`1 + x^W` or `x^W1 + x^W2`), so the exponents of the product are the sums
//! over all ways of picking one exponent per factor. Walking the choices in
//! reflected Gray-code order changes one pick per step, so each exponent costs
//! a single subtract and add.

use crate::index_codec::GraphIndex;

/// Iterator over `sum_h pick_h` for every choice vector, in Gray-code order.
///
/// Each factor is a pair `(first, second)`; the walk starts with every factor
/// on `second`.
#[derive(Debug, Clone)]
pub struct TermIter {
    factors: Vec<(u128, u128)>,
    on_first: u128,
    sum: u128,
    step: u128,
    total: u128,
}

impl TermIter {
    pub fn new(factors: Vec<(u128, u128)>) -> Self {
        assert!(factors.len() < 128, "too many factors for a 128-bit step counter");
        let sum = factors.iter().fold(0u128, |acc, &(_, b)| acc.wrapping_add(b));
        let total = 1u128 << factors.len();
        TermIter { factors, on_first: 0, sum, step: 0, total }
    }

    /// Number of factors.
    pub fn factor_count(&self) -> usize {
        self.factors.len()
    }

    /// `2^factor_count`.
    pub fn term_count(&self) -> u128 {
        self.total
    }
}

impl Iterator for TermIter {
    type Item = GraphIndex;

    #[inline]
    fn next(&mut self) -> Option<GraphIndex> {
        if self.step >= self.total {
            return None;
        }
        if self.step > 0 {
            let h = self.step.trailing_zeros() as usize;
            let (a, b) = self.factors[h];
            let bit = 1u128 << h;
            self.sum = if self.on_first & bit == 0 {
                self.sum.wrapping_sub(b).wrapping_add(a)
            } else {
                self.sum.wrapping_sub(a).wrapping_add(b)
            };
            self.on_first ^= bit;
        }
        self.step += 1;
        Some(GraphIndex(self.sum))
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let left = usize::try_from(self.total - self.step).ok();
        (left.unwrap_or(usize::MAX), left)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::BTreeSet;

    // Direct subset enumeration, independent of the Gray walk.
    fn all_sums(factors: &[(u128, u128)]) -> BTreeSet<u128> {
        (0..1u32 << factors.len())
            .map(|mask| {
                factors
                    .iter()
                    .enumerate()
                    .map(|(h, &(a, b))| if mask >> h & 1 == 1 { a } else { b })
                    .sum()
            })
            .collect()
    }

    #[test]
    fn matches_direct_enumeration() {
        let factors = vec![(45, 0), (18, 0)];
        let got: BTreeSet<u128> = TermIter::new(factors.clone()).map(|g| g.0).collect();
        assert_eq!(got, all_sums(&factors));
        assert_eq!(got, BTreeSet::from([0, 18, 45, 63]));

        let factors = vec![(33, 12), (16, 2)];
        let got: Vec<u128> = TermIter::new(factors.clone()).map(|g| g.0).collect();
        assert_eq!(got.len(), 4);
        assert_eq!(got.iter().copied().collect::<BTreeSet<_>>(), all_sums(&factors));
        assert_eq!(all_sums(&factors), BTreeSet::from([14, 28, 35, 49]));
    }

    #[test]
    fn no_factors_yields_the_empty_sum() {
        assert_eq!(TermIter::new(vec![]).map(|g| g.0).collect::<Vec<_>>(), vec![0]);
    }

    #[test]
    fn gray_order_changes_one_factor_per_step() {
        let factors: Vec<(u128, u128)> = (0..5).map(|k| (1u128 << (2 * k + 1), 1u128 << (2 * k))).collect();
        let terms: Vec<u128> = TermIter::new(factors.clone()).map(|g| g.0).collect();
        assert_eq!(terms.len(), 32);
        for w in terms.windows(2) {
            // one factor switches, so exactly two bits differ
            assert_eq!((w[0] ^ w[1]).count_ones(), 2);
        }
        assert_eq!(terms.iter().copied().collect::<BTreeSet<_>>(), all_sums(&factors));
    }
}
