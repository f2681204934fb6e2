//! Search for planar networks realizing star hypergraphs. The search
//! succeeds quickly up to four leaves and comes up empty for five --
//! matching the fact that star(5) has no planar realization.
//!
//! Run with: cargo run --release --example realize_star

use sinr_hypergraph::{search_realization, star, RealizationSearchConfig};

fn main() {
    for r in 1..=4 {
        let cfg = RealizationSearchConfig::default();
        let result = search_realization(&star(r).unwrap(), &cfg).unwrap();
        let stations = result
            .network
            .as_ref()
            .map(|net| net.stations().to_vec())
            .unwrap_or_default();
        println!(
            "star({r}): found={} after {} restarts; stations: {:?}",
            result.found,
            result.trials_run,
            stations
                .iter()
                .map(|p| (format!("{:.3}", p.x), format!("{:.3}", p.y)))
                .collect::<Vec<_>>()
        );
    }

    let cfg = RealizationSearchConfig {
        restarts: 2000,
        ..Default::default()
    };
    let result = search_realization(&star(5).unwrap(), &cfg).unwrap();
    println!(
        "star(5): found={} after {} restarts (best mismatch: {} edge constraints)",
        result.found, result.trials_run, result.best_mismatch
    );
}
