// Count labelled and unlabelled graphs by automorphism-group order.

use graph_census::census::{histogram, report};
use graph_census::{run_census, CensusOptions, Mode, Order};

pub fn run_example() -> graph_census::Result<()> {
    for n in 3..=6 {
        let order = Order::new(n)?;
        let acc = run_census(order, Mode::Graphs, &CensusOptions::default())?;
        let r = report(&acc)?;
        println!(
            "n = {n}: {} labelled, {} unlabelled graphs",
            r.labelled_total, r.unlabelled_total
        );
        for row in &r.rows {
            println!("  |Gamma| = {:>3}: {:>6} labelled  {:>3} unlabelled", row.group_order, row.labelled, row.unlabelled);
        }
        assert_eq!(histogram(&acc).total(), 1u128 << order.lambda());
    }
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().unwrap();
}
