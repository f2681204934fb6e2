//! Run the full numeric lemma-check suite and print one line per check.
//!
//! Run with: cargo run --release --example lemma_checks

use sinr_hypergraph::verification::{run_all, VerifyConfig};

fn main() {
    let checks = run_all(VerifyConfig::default());
    let mut failed = false;
    for check in &checks {
        let status = if check.passed { "PASS" } else { "FAIL" };
        println!("{status} {}: {}", check.name, check.detail);
        failed |= !check.passed;
    }
    std::process::exit(if failed { 1 } else { 0 });
}
