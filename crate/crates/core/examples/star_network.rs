//! Build the five-station cross layout and derive its interference
//! hypergraph: a star with four leaves.
//!
//! Run with: cargo run --example star_network

use sinr_hypergraph::{star, WirelessNetwork, Point2};

fn main() {
    let stations = [(0.0, 0.0), (1.0, 0.0), (0.0, 1.0), (-1.0, 0.0), (0.0, -1.0)]
        .into_iter()
        .map(|(x, y)| Point2::new(x, y).unwrap())
        .collect();
    let network = WirelessNetwork::with_default_alpha(stations, 1.0).unwrap();

    // Each leaf alone forbids transmitting together with the center: the
    // center receives energy 1 from a station at distance 1. All four
    // leaves together deposit only 9/16 on any single leaf.
    let energy_on_leaf = network.energy(&[1, 2, 3, 4], 1).unwrap();
    println!("energy received by leaf 1 from the other leaves: {energy_on_leaf} (= 9/16)");

    let hypergraph = network.hypergraph().unwrap();
    println!("minimal forbidden sets: {:?}", hypergraph.edges());
    println!(
        "isomorphic to star(4): {}",
        hypergraph.is_isomorphic_to(&star(4).unwrap()).unwrap()
    );
}
