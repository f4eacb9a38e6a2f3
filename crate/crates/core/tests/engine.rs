use std::collections::BTreeSet;

use graph_census::census::{
    check_accumulator, expand_graph_terms, expand_sc_terms, histogram, labelled_sc_total, report,
    run_census, CensusOptions, Mode,
};
use graph_census::error::Error;
use graph_census::index_codec::{decode, GraphIndex, LabelledGraph, Order};
use graph_census::oracle;
use graph_census::perm::{enumerate_permutations, enumerate_sc_permutations, Permutation};

fn ord(n: usize) -> Order {
    Order::new(n).unwrap()
}

fn p(n: usize, s: &str) -> Permutation {
    Permutation::parse_cycles(ord(n), s).unwrap()
}

fn terms(it: impl Iterator<Item = GraphIndex>) -> BTreeSet<u128> {
    it.map(|g| g.0).collect()
}

#[test]
fn graph_terms_examples() {
    let o = ord(4);
    let id: Vec<u128> = expand_graph_terms(o, &Permutation::identity(o)).unwrap().map(|g| g.0).collect();
    assert_eq!(id.len(), 64);
    assert_eq!(id.iter().copied().collect::<BTreeSet<_>>(), (0..64).collect());
    assert_eq!(
        terms(expand_graph_terms(o, &p(4, "(1 2 3 4)")).unwrap()),
        BTreeSet::from([0, 18, 45, 63])
    );
    for alpha in enumerate_permutations(ord(5)) {
        assert!(expand_graph_terms(ord(5), &alpha).unwrap().any(|g| g.0 == 0));
    }
}

#[test]
fn sc_terms_examples() {
    let o = ord(4);
    let four = p(4, "(1 2 3 4)");
    assert_eq!(terms(expand_sc_terms(o, &four).unwrap()), BTreeSet::from([14, 28, 35, 49]));
    for alpha in enumerate_sc_permutations(o).unwrap() {
        assert_eq!(expand_sc_terms(o, &alpha).unwrap().count(), 4);
    }
    // 14 is the path 1-4-2-3, mapped onto its complement by (1 2 3 4)
    let g = decode(o, GraphIndex(14)).unwrap();
    assert_eq!(g, LabelledGraph::from_edges(o, &[(1, 4), (4, 2), (2, 3)]).unwrap());
    assert!(oracle::sc_witnesses_bruteforce(&g).unwrap().contains(&four));
    assert!(matches!(expand_sc_terms(o, &p(4, "(1 2)(3 4)")), Err(Error::Domain(_))));
    assert!(matches!(expand_sc_terms(ord(6), &p(6, "(1 2 3 4)")), Err(Error::Domain(_))));
}

#[test]
fn run_census_examples() {
    let seq = CensusOptions::sequential();
    let g4 = run_census(ord(4), Mode::Graphs, &seq).unwrap();
    assert!(g4.is_dense());
    // triangle 1-3-4 with a pendant vertex: two automorphisms
    assert_eq!(g4.get(GraphIndex(29)), 2);
    assert_eq!(g4.get(GraphIndex(63)), 24);
    let sc4 = run_census(ord(4), Mode::Sc, &seq).unwrap();
    assert!(!sc4.is_dense());
    assert_eq!(sc4.key_count(), 12);
    let g5 = run_census(ord(5), Mode::Graphs, &seq).unwrap();
    assert_eq!(g5.get(GraphIndex(0)), 120);
}

#[test]
fn census_matches_oracle_per_index() {
    for n in 3..=5 {
        let o = ord(n);
        let acc = run_census(o, Mode::Graphs, &CensusOptions::sequential()).unwrap();
        for (l, rec) in oracle::full_oracle_census(o).unwrap() {
            assert_eq!(acc.get(l), rec.aut_order, "n = {n}, L = {l}");
        }
    }
}

#[test]
fn histogram_examples() {
    let opts = CensusOptions::default();
    let h = histogram(&run_census(ord(4), Mode::Graphs, &opts).unwrap());
    assert_eq!(h.pairs(), vec![(2, 36), (4, 12), (6, 8), (8, 6), (24, 2)]);
    assert_eq!(histogram(&run_census(ord(4), Mode::Sc, &opts).unwrap()).pairs(), vec![(2, 12)]);
    assert_eq!(
        histogram(&run_census(ord(8), Mode::Sc, &opts).unwrap()).pairs(),
        vec![(2, 60480), (4, 20160), (8, 15120), (32, 2520)]
    );
}

#[test]
fn report_examples() {
    let opts = CensusOptions::default();
    let r5 = report(&run_census(ord(5), Mode::Graphs, &opts).unwrap()).unwrap();
    assert_eq!(
        r5.unlabelled_pairs(),
        vec![(2, 11), (4, 6), (6, 2), (8, 4), (10, 1), (12, 6), (24, 2), (120, 2)]
    );
    assert_eq!(r5.unlabelled_total, 34);
    for row in &r5.rows {
        assert_eq!(row.group_order as u128 * row.labelled, 120 * row.unlabelled);
    }

    // sum over permutations of 2^(number of pair cycles), computed directly
    let direct: u128 = enumerate_permutations(ord(4))
        .map(|a| 1u128 << graph_census::pair_decomposition(&a).cycles.len())
        .sum();
    let r4 = report(&run_census(ord(4), Mode::Graphs, &opts).unwrap()).unwrap();
    assert_eq!(direct, 264);
    assert_eq!(r4.burnside_total, 264);

    let r9 = report(&run_census(ord(9), Mode::Sc, &opts).unwrap()).unwrap();
    assert_eq!((r9.labelled_total, r9.unlabelled_total), (4123728, 36));
    assert_eq!(r9.burnside_total, 13063680);
}

#[test]
fn labelled_sc_totals() {
    let opts = CensusOptions::default();
    assert_eq!(labelled_sc_total(ord(4), &opts).unwrap(), 12);
    assert_eq!(labelled_sc_total(ord(5), &opts).unwrap(), 72);
    assert_eq!(labelled_sc_total(ord(8), &opts).unwrap(), 98280);
    assert!(matches!(labelled_sc_total(ord(7), &opts), Err(Error::Domain(_))));
}

#[test]
fn sc_column_sum_totals() {
    let opts = CensusOptions::default();
    let acc = run_census(ord(8), Mode::Sc, &opts).unwrap();
    assert_eq!(acc.burnside_total(), 403200);
    assert_eq!(histogram(&acc).weighted_total(), 403200);
}

#[test]
fn histogram_closure_graphs() {
    for n in 3..=7 {
        let acc = run_census(ord(n), Mode::Graphs, &CensusOptions::default()).unwrap();
        let h = histogram(&acc);
        assert_eq!(h.total(), 1u128 << ord(n).lambda());
        assert_eq!(h.weighted_total(), acc.burnside_total());
        check_accumulator(&acc).unwrap();
    }
}

#[test]
fn worker_count_does_not_change_the_result() {
    for (n, mode) in [(6, Mode::Graphs), (8, Mode::Sc)] {
        let base = run_census(ord(n), mode, &CensusOptions::sequential()).unwrap();
        for workers in [2, 3, 8, 64] {
            let other = run_census(ord(n), mode, &CensusOptions::default().with_workers(workers)).unwrap();
            assert_eq!(other, base, "n = {n}, {mode}, {workers} workers");
        }
    }
}

#[test]
fn verify_mode_sweeps_cleanly() {
    let opts = CensusOptions::default().with_verify(true);
    for n in 3..=6 {
        run_census(ord(n), Mode::Graphs, &opts).unwrap();
    }
    for n in [4, 5, 8] {
        run_census(ord(n), Mode::Sc, &opts).unwrap();
    }
}

#[test]
fn caps_and_bad_options() {
    let opts = CensusOptions::default();
    assert!(matches!(run_census(ord(8), Mode::Graphs, &opts), Err(Error::Resource(_))));
    assert!(matches!(run_census(ord(12), Mode::Sc, &opts), Err(Error::Resource(_))));
    assert!(matches!(run_census(ord(6), Mode::Sc, &opts), Err(Error::Domain(_))));
    assert!(matches!(
        run_census(ord(4), Mode::Graphs, &opts.clone().with_workers(0)),
        Err(Error::Domain(_))
    ));
    // packed 64-bit keys cannot hold lambda = 66
    assert!(matches!(
        run_census(ord(12), Mode::Sc, &opts.with_allow_large(true)),
        Err(Error::Resource(_))
    ));
}
