// Show how a vertex permutation acts on vertex pairs, and the weights of
// the resulting pair cycles.

use graph_census::census::{describe_permutation, Mode};
use graph_census::perm::{cycle_weights, is_sc_admissible};
use graph_census::{pair_decomposition, Order, Permutation};

pub fn run_example() -> graph_census::Result<()> {
    let order = Order::new(5)?;
    let alpha = Permutation::parse_cycles(order, "(1 2 3 4)(5)")?;
    let d = pair_decomposition(&alpha);
    println!("alpha = {alpha}, cycle type {}", d.cycle_type);
    for z in &d.cycles {
        let w = cycle_weights(order, z);
        println!("  {:<16} W = {:>4}  W1 = {:>4}  W2 = {:>4}", z.to_string(), w.w_full, w.w_odd, w.w_even);
    }
    println!("complementing: {}", is_sc_admissible(order, &alpha)?);

    // a transposition cannot map any graph onto its complement
    let beta = Permutation::parse_cycles(order, "(1 2)")?;
    assert!(!is_sc_admissible(order, &beta)?);

    print!("{}", describe_permutation(order, Mode::Sc, &alpha)?);
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().unwrap();
}
