//! Random sweep over five-leaf placements: every candidate for a star(5)
//! realization is refuted, either by a pair already forming a forbidden
//! set or by a projected triple whose energy certificate exceeds beta.
//!
//! Run with: cargo run --release --example k15_sweep

use rand::SeedableRng as _;
use rand_chacha::ChaCha8Rng;
use sinr_hypergraph::realizability::{classify_k15_candidate, sample_separated_five_points};
use sinr_hypergraph::verify_k15_nonrealizable;

fn main() {
    let report = verify_k15_nonrealizable(20_000, 0);
    println!("trials:            {}", report.trials);
    println!("pair-forbidden:    {}", report.pair_forbidden);
    println!("triple-forbidden:  {}", report.triple_forbidden);
    println!("all contradicted:  {}", report.all_contradicted);
    if let (Some(min), Some(mean)) = (report.min_triple_energy, report.mean_triple_energy) {
        println!("triple energy:     min {min:.6}, mean {mean:.6} (both > 1)");
    }
    println!("note: {}", report.note);

    // One certificate in full: a separated placement, its projection onto
    // the unit circle, and the adjacent triple whose energy is too high.
    let mut rng = ChaCha8Rng::seed_from_u64(1);
    let points = sample_separated_five_points(&mut rng);
    match classify_k15_candidate(&points).unwrap() {
        sinr_hypergraph::realizability::K15Contradiction::TripleForbidden(cert) => {
            println!("sample certificate:");
            println!("  projected points: {:?}", cert.projected_points);
            println!("  chosen triple:    {:?}", cert.chosen_triple);
            println!("  triple energy:    {:.6}", cert.triple_energy);
        }
        other => println!("sample refuted by: {other:?}"),
    }
}
