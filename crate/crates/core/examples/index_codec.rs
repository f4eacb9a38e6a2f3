// Encode a labelled graph as an index, decode it back, and complement it.

use graph_census::index_codec::{complement_index, edge_position, lambda};
use graph_census::{decode, encode, EdgePair, LabelledGraph, Order};

pub fn run_example() -> graph_census::Result<()> {
    let order = Order::new(4)?;
    println!("n = {order}, lambda = {}", lambda(order));
    for (i, j) in [(1, 2), (1, 3), (2, 4), (3, 4)] {
        let pos = edge_position(order, EdgePair::new(i, j)?)?;
        println!("  pair {i}{j} sits at position {}", pos.get());
    }

    // path 2-3-4-1
    let g = LabelledGraph::from_edges(order, &[(2, 3), (3, 4), (1, 4)])?;
    let l = encode(&g);
    println!("{g} -> L = {l} ({})", l.to_binary(order));
    assert_eq!(decode(order, l)?, g);

    let c = complement_index(order, l)?;
    println!("complement -> L = {c} ({}) = {}", c.to_binary(order), decode(order, c)?);
    assert_eq!(encode(&g.complement()), c);
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().unwrap();
}
