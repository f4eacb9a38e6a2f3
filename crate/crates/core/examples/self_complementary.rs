// Count self-complementary graphs by automorphism-group order.

use graph_census::census::report;
use graph_census::{run_census, CensusOptions, Mode, Order};

pub fn run_example() -> graph_census::Result<()> {
    for n in [4, 5, 8, 9] {
        let order = Order::new(n)?;
        let acc = run_census(order, Mode::Sc, &CensusOptions::default())?;
        let r = report(&acc)?;
        println!(
            "n = {n}: {} labelled, {} unlabelled self-complementary graphs",
            r.labelled_total, r.unlabelled_total
        );
        let pairs: Vec<String> =
            r.labelled_pairs().iter().map(|(xi, c)| format!("({xi},{c})")).collect();
        println!("  {}", pairs.join(" "));
    }

    // orders 2 and 3 mod 4 have none, so the engine refuses them
    let err = run_census(Order::new(6)?, Mode::Sc, &CensusOptions::default()).unwrap_err();
    println!("n = 6: {err}");
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().unwrap();
}
