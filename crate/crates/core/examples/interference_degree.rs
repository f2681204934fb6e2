//! Exact interference degrees of the standard families, plus the apex
//! construction that ties the quantity to the independence number.
//!
//! Run with: cargo run --example interference_degree

use sinr_hypergraph::{complete_uniform, star, Graph};

fn main() {
    // Complete r-uniform hypergraphs: sigma = 2 - 1/(r-1), approaching 2.
    for r in 2..=6 {
        let h = complete_uniform(7, r).unwrap();
        println!("sigma(K_7^({r})) = {}", h.interference_degree().unwrap());
    }

    // Stars: sigma(star(r)) = r, the only family with unbounded sigma here.
    for r in 1..=6 {
        let h = star(r).unwrap();
        println!("sigma(star({r})) = {}", h.interference_degree().unwrap());
    }

    // Adding an apex vertex joined to everything turns sigma into the
    // independence number of the original graph -- the reduction behind
    // NP-hardness of computing sigma in general.
    let c5 = Graph::new(5, (0..5).map(|i| (i, (i + 1) % 5))).unwrap();
    println!(
        "alpha(C5) = {}, sigma(apex(C5)) = {}",
        c5.hypergraph().independence_number().unwrap(),
        c5.augment_with_apex().interference_degree().unwrap()
    );
}
