//! The geometric ingredients behind the five-leaf impossibility:
//! a 60-degree unit sector has diameter 1, radial projection onto the
//! unit circle never shrinks distances, and the gap-energy function g
//! stays above 1 on its whole domain.
//!
//! Run with: cargo run --example projection_geometry

use std::f64::consts::PI;

use sinr_hypergraph::dist;
use sinr_hypergraph::geometry::{
    g_delta, g_minimum, max_pairwise_distance_in_sector, minimize_g, radial_project,
    PolarPoint, G_DELTA_MAX,
};
use sinr_hypergraph::Point2;

fn main() {
    // Sector diameter: the two extreme corners of the sector realize it.
    let corners = [
        PolarPoint::new(1.0, 0.0).unwrap(),
        PolarPoint::new(1.0, PI / 3.0).unwrap(),
    ];
    println!(
        "distance between extreme sector corners: {}",
        max_pairwise_distance_in_sector(&corners).unwrap()
    );

    // Radial projection pushes points outward along their rays; distances
    // between pairwise-separated points can only grow.
    let inside = vec![
        Point2::new(0.9, 0.0).unwrap(),
        Point2::new(-0.3, 0.85).unwrap(),
        Point2::new(-0.5, -0.7).unwrap(),
    ];
    let projected = radial_project(&inside).unwrap();
    for i in 0..inside.len() {
        for j in (i + 1)..inside.len() {
            println!(
                "pair ({i},{j}): before {:.4}, after {:.4}",
                dist(inside[i], inside[j]),
                dist(projected[i], projected[j])
            );
        }
    }

    // g(delta) bounds the energy a balanced adjacent triple deposits on
    // its middle point; its minimum (3 + sqrt 5)/5 already exceeds 1.
    let (delta_star, g_star) = minimize_g(1001);
    println!("g minimum on grid: g({delta_star:.6}) = {g_star:.9}");
    println!("closed form (3 + sqrt 5)/5 = {:.9}", g_minimum());
    println!(
        "endpoints: g(-pi/15) = {:.6}, g(pi/15) = {:.6}",
        g_delta(-G_DELTA_MAX).unwrap(),
        g_delta(G_DELTA_MAX).unwrap()
    );
}
