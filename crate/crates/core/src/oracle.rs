//! Brute-force ground truth.
//!
//! Everything here works straight from the definitions: automorphisms are
//! found by applying every permutation to the edge set and comparing. The
//! only code shared with the census engine is the index codec. Permutations
//! are generated by this module's own backtracking, not by [`crate::perm`].

use std::collections::{BTreeMap, BTreeSet};

use crate::error::{Error, Result};
use crate::index_codec::{decode, encode, EdgePair, GraphIndex, LabelledGraph, Order};
use crate::perm::Permutation;

/// Largest order accepted by the per-graph scans (8! = 40320 permutations).
pub const MAX_SCAN_ORDER: usize = 8;
/// Largest order accepted by [`full_oracle_census`].
pub const MAX_CENSUS_ORDER: usize = 5;

/// Ground truth for one labelled graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OracleRecord {
    pub index: GraphIndex,
    /// `|Gamma(G)|`.
    pub aut_order: u64,
    /// Every permutation mapping `G` onto its complement.
    pub sc_witnesses: Vec<Permutation>,
}

impl OracleRecord {
    pub fn is_self_complementary(&self) -> bool {
        !self.sc_witnesses.is_empty()
    }
}

/// All permutations of `1..=n` as 1-based image vectors, lexicographic.
fn all_images(n: usize) -> Vec<Vec<usize>> {
    fn extend(n: usize, prefix: &mut Vec<usize>, used: &mut [bool], out: &mut Vec<Vec<usize>>) {
        if prefix.len() == n {
            out.push(prefix.clone());
            return;
        }
        for v in 1..=n {
            if !used[v] {
                used[v] = true;
                prefix.push(v);
                extend(n, prefix, used, out);
                prefix.pop();
                used[v] = false;
            }
        }
    }
    let mut out = Vec::new();
    extend(n, &mut Vec::with_capacity(n), &mut vec![false; n + 1], &mut out);
    out
}

fn map_edges(images: &[usize], g: &LabelledGraph) -> BTreeSet<EdgePair> {
    g.edges()
        .iter()
        .map(|e| EdgePair::new(images[e.i() - 1], images[e.j() - 1]).expect("bijection keeps pairs distinct"))
        .collect()
}

fn guard(order: Order, limit: usize, what: &str) -> Result<()> {
    if order.n() > limit {
        return Err(Error::Resource(format!(
            "{what} scans {}! permutations per graph; limit is n = {limit}",
            order.n()
        )));
    }
    Ok(())
}

/// `alpha G`: the graph with edge set `{ {alpha i, alpha j} : ij in E }`.
pub fn apply_permutation(alpha: &Permutation, g: &LabelledGraph) -> Result<LabelledGraph> {
    if alpha.n() != g.order().n() {
        return Err(Error::Domain(format!(
            "permutation of degree {} applied to a graph of order {}",
            alpha.n(),
            g.order()
        )));
    }
    LabelledGraph::from_pairs(g.order(), map_edges(&alpha.images(), g))
}

/// `|{alpha : alpha G = G}|` by scanning all `n!` permutations.
pub fn aut_order_bruteforce(g: &LabelledGraph) -> Result<u64> {
    guard(g.order(), MAX_SCAN_ORDER, "automorphism scan")?;
    Ok(all_images(g.order().n())
        .iter()
        .filter(|img| &map_edges(img, g) == g.edges())
        .count() as u64)
}

/// All `alpha` with `alpha G = complement(G)`; empty iff `G` is not self-complementary.
pub fn sc_witnesses_bruteforce(g: &LabelledGraph) -> Result<Vec<Permutation>> {
    guard(g.order(), MAX_SCAN_ORDER, "complementing-permutation scan")?;
    let target = g.complement();
    all_images(g.order().n())
        .into_iter()
        .filter(|img| &map_edges(img, g) == target.edges())
        .map(|img| Permutation::from_images(&img))
        .collect()
}

/// Whether some permutation maps `G` onto its complement. Stops at the first witness.
pub fn is_self_complementary(g: &LabelledGraph) -> Result<bool> {
    guard(g.order(), MAX_SCAN_ORDER, "complementing-permutation scan")?;
    let order = g.order();
    if 2 * g.edges().len() != order.lambda() {
        return Ok(false);
    }
    let target = g.complement();
    Ok(all_images(order.n()).iter().any(|img| &map_edges(img, g) == target.edges()))
}

/// Indices of all graphs `alpha G`, i.e. the labellings of `G`.
pub fn orbit(g: &LabelledGraph) -> Result<BTreeSet<GraphIndex>> {
    guard(g.order(), MAX_SCAN_ORDER, "orbit scan")?;
    let order = g.order();
    all_images(order.n())
        .iter()
        .map(|img| Ok(encode(&LabelledGraph::from_pairs(order, map_edges(img, g))?)))
        .collect()
}

/// One record per index in `0..2^lambda`.
pub fn full_oracle_census(order: Order) -> Result<BTreeMap<GraphIndex, OracleRecord>> {
    if order.n() > MAX_CENSUS_ORDER {
        return Err(Error::Resource(format!(
            "exhaustive oracle census covers 2^lambda * n! work units; limit is n = {MAX_CENSUS_ORDER}"
        )));
    }
    let perms = all_images(order.n());
    let mut out = BTreeMap::new();
    for l in 0..=order.max_index() {
        let index = GraphIndex(l);
        let g = decode(order, index)?;
        let complement = g.complement();
        let mut aut_order = 0;
        let mut sc_witnesses = Vec::new();
        for img in &perms {
            let image = map_edges(img, &g);
            if &image == g.edges() {
                aut_order += 1;
            }
            if &image == complement.edges() {
                sc_witnesses.push(Permutation::from_images(img)?);
            }
        }
        out.insert(index, OracleRecord { index, aut_order, sc_witnesses });
    }
    Ok(out)
}

/// Checks `alpha^{-1} A_S(G) = Gamma(G)` for every `alpha` in `A_S(G)`.
pub fn verify_coset_theorem(g: &LabelledGraph) -> Result<bool> {
    let witnesses = sc_witnesses_bruteforce(g)?;
    if witnesses.is_empty() {
        return Err(Error::Domain(format!("graph {g} is not self-complementary")));
    }
    let automorphisms: BTreeSet<Vec<usize>> = all_images(g.order().n())
        .into_iter()
        .filter(|img| &map_edges(img, g) == g.edges())
        .collect();
    let witness_images: Vec<Vec<usize>> = witnesses.iter().map(|w| w.images()).collect();
    Ok(witness_images.iter().all(|alpha| {
        let mut inv = vec![0; alpha.len()];
        for (k, &v) in alpha.iter().enumerate() {
            inv[v - 1] = k + 1;
        }
        // (alpha^{-1} beta)(v) = alpha^{-1}(beta(v))
        let coset: BTreeSet<Vec<usize>> = witness_images
            .iter()
            .map(|beta| beta.iter().map(|&v| inv[v - 1]).collect())
            .collect();
        coset == automorphisms
    }))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ord(n: usize) -> Order {
        Order::new(n).unwrap()
    }

    fn p(n: usize, s: &str) -> Permutation {
        Permutation::parse_cycles(ord(n), s).unwrap()
    }

    #[test]
    fn generator_is_complete() {
        let all = all_images(4);
        assert_eq!(all.len(), 24);
        assert_eq!(all.iter().collect::<BTreeSet<_>>().len(), 24);
        assert_eq!(all[0], vec![1, 2, 3, 4]);
    }

    #[test]
    fn apply_examples() {
        let o = ord(4);
        let g = decode(o, GraphIndex(14)).unwrap();
        assert_eq!(apply_permutation(&Permutation::identity(o), &g).unwrap(), g);
        let img = apply_permutation(&p(4, "(1 2 3 4)"), &g).unwrap();
        assert_eq!(img, LabelledGraph::from_edges(o, &[(1, 2), (3, 4), (1, 3)]).unwrap());
        assert_eq!(encode(&img), GraphIndex(49));
        let e = LabelledGraph::empty(o);
        assert_eq!(apply_permutation(&p(4, "(1 3)"), &e).unwrap(), e);
    }

    #[test]
    fn aut_order_examples() {
        let o = ord(4);
        assert_eq!(aut_order_bruteforce(&decode(o, GraphIndex(63)).unwrap()).unwrap(), 24);
        // triangle 1-3-4 with pendant 2 at 3: only the swap of 1 and 4
        assert_eq!(aut_order_bruteforce(&decode(o, GraphIndex(29)).unwrap()).unwrap(), 2);
        let g = LabelledGraph::from_edges(ord(3), &[(1, 2)]).unwrap();
        assert_eq!(aut_order_bruteforce(&g).unwrap(), 2);
        assert!(matches!(
            aut_order_bruteforce(&LabelledGraph::empty(ord(9))),
            Err(Error::Resource(_))
        ));
    }

    #[test]
    fn witness_examples() {
        let o = ord(4);
        let w = sc_witnesses_bruteforce(&decode(o, GraphIndex(14)).unwrap()).unwrap();
        assert!(w.contains(&p(4, "(1 2 3 4)")));
        assert!(sc_witnesses_bruteforce(&decode(o, GraphIndex(63)).unwrap()).unwrap().is_empty());
        let c5 = LabelledGraph::from_edges(ord(5), &[(1, 2), (2, 3), (3, 4), (4, 5), (1, 5)]).unwrap();
        assert!(!sc_witnesses_bruteforce(&c5).unwrap().is_empty());
        assert!(is_self_complementary(&c5).unwrap());
    }

    #[test]
    fn coset_examples() {
        let o = ord(4);
        assert!(verify_coset_theorem(&decode(o, GraphIndex(14)).unwrap()).unwrap());
        let c5 = LabelledGraph::from_edges(ord(5), &[(1, 2), (2, 3), (3, 4), (4, 5), (1, 5)]).unwrap();
        assert!(verify_coset_theorem(&c5).unwrap());
        assert!(matches!(
            verify_coset_theorem(&decode(o, GraphIndex(0)).unwrap()),
            Err(Error::Domain(_))
        ));
    }

    #[test]
    fn census_guard() {
        assert!(matches!(full_oracle_census(ord(6)), Err(Error::Resource(_))));
    }

    #[test]
    fn n4_census_matches_known_counts() {
        let census = full_oracle_census(ord(4)).unwrap();
        assert_eq!(census.len(), 64);
        assert_eq!(census.values().filter(|r| r.is_self_complementary()).count(), 12);
        let mut hist = BTreeMap::new();
        for r in census.values() {
            *hist.entry(r.aut_order).or_insert(0) += 1;
        }
        assert_eq!(hist.into_iter().collect::<Vec<_>>(), vec![(2, 36), (4, 12), (6, 8), (8, 6), (24, 2)]);
    }
}
