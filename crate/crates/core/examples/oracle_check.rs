// Cross-check engine coefficients against brute-force automorphism counts.

use graph_census::census::CensusOptions;
use graph_census::oracle::{aut_order_bruteforce, sc_witnesses_bruteforce, verify_coset_theorem};
use graph_census::report::{verify, RunConfig};
use graph_census::{decode, run_census, GraphIndex, Mode, Order};

pub fn run_example() -> graph_census::Result<()> {
    let order = Order::new(4)?;
    let acc = run_census(order, Mode::Graphs, &CensusOptions::sequential())?;
    for l in [0u128, 14, 29, 63] {
        let g = decode(order, GraphIndex(l))?;
        let brute = aut_order_bruteforce(&g)?;
        println!("L = {l:>2} {g:<22} engine {:>2}  brute force {brute:>2}", acc.get(GraphIndex(l)));
        assert_eq!(acc.get(GraphIndex(l)), brute);
    }

    let p4 = decode(order, GraphIndex(14))?;
    let witnesses = sc_witnesses_bruteforce(&p4)?;
    println!("{p4} is mapped onto its complement by {} permutations", witnesses.len());
    assert!(verify_coset_theorem(&p4)?);

    for (n, mode) in [(4, Mode::Graphs), (5, Mode::Graphs), (5, Mode::Sc)] {
        println!("{}", verify(&RunConfig::new(n, mode))?);
    }
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().unwrap();
}
