//! Size-2 hyperedges of a beta = 1 network coincide with the unit disk
//! graph of its stations, and the hypergraph is invariant under scaling.
//!
//! Run with: cargo run --example unit_disk

use rand::{Rng as _, SeedableRng as _};
use rand_chacha::ChaCha8Rng;
use sinr_hypergraph::{unit_disk_graph, Point2, WirelessNetwork};

fn main() {
    let mut rng = ChaCha8Rng::seed_from_u64(42);
    let stations: Vec<Point2> = (0..7)
        .map(|_| Point2::new(rng.gen_range(0.0..2.0), rng.gen_range(0.0..2.0)).unwrap())
        .collect();
    let network = WirelessNetwork::with_default_alpha(stations, 1.0).unwrap();

    let hypergraph = network.hypergraph().unwrap();
    let pairs: Vec<_> = hypergraph.edges().iter().filter(|e| e.len() == 2).collect();
    let udg = unit_disk_graph(network.stations()).unwrap();
    println!("size-2 hyperedges: {pairs:?}");
    println!("unit disk edges:   {:?}", udg.hypergraph().edges());

    // Scaling all coordinates by rho and beta by rho^-alpha changes
    // nothing; normalize_beta exploits this to pin beta at 1.
    let scaled = network.scale(3.0).unwrap();
    println!(
        "hypergraph unchanged after scaling by 3: {}",
        scaled.hypergraph().unwrap() == hypergraph
    );
    let normalized = network.scale(3.0).unwrap().normalize_beta();
    println!(
        "beta after normalization: {} (hypergraph unchanged: {})",
        normalized.beta(),
        normalized.hypergraph().unwrap() == hypergraph
    );
}
