//! Randomized/numeric checks of the analytic facts the library relies on:
//! the unit-disk correspondence of size-2 hyperedges, scaling and threshold
//! normalization invariance, the 60-degree sector diameter, radial
//! projection monotonicity, the two-chord energy minimum, and the
//! five-leaf-star contradiction sweep.

use std::f64::consts::PI;

use rand::prelude::*;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::geometry::{
    dist, g_delta, g_minimum, max_pairwise_distance_in_sector, radial_project, Point2,
    PolarPoint, G_DELTA_MAX,
};
use crate::realizability::{sample_separated_five_points, verify_k15_nonrealizable};
use crate::wireless::{unit_disk_graph, WirelessNetwork};

#[derive(Debug, Clone, Serialize)]
pub struct LemmaCheck {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

impl LemmaCheck {
    fn new(name: &str, passed: bool, detail: String) -> Self {
        LemmaCheck {
            name: name.to_string(),
            passed,
            detail,
        }
    }
}

#[derive(Debug, Clone, Copy, Serialize)]
pub struct VerifyConfig {
    pub trials: u64,
    pub grid: usize,
    pub seed: u64,
}

impl Default for VerifyConfig {
    fn default() -> Self {
        VerifyConfig {
            trials: 2000,
            grid: 1001,
            seed: 0,
        }
    }
}

fn random_network(rng: &mut impl Rng, n: usize, beta: f64) -> WirelessNetwork {
    loop {
        let pts: Vec<Point2> = (0..n)
            .map(|_| {
                Point2::new(rng.gen_range(0.0..2.0), rng.gen_range(0.0..2.0)).unwrap()
            })
            .collect();
        if let Ok(net) = WirelessNetwork::with_default_alpha(pts.clone(), beta) {
            return net;
        }
    }
}

/// Size-2 hyperedges coincide with unit-disk edges at threshold 1.
pub fn check_udg_correspondence(cfg: VerifyConfig) -> LemmaCheck {
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed.wrapping_add(1));
    let networks = (cfg.trials / 10).clamp(20, 200);
    let mut checked = 0u64;
    while checked < networks {
        let n = rng.gen_range(2..=8usize);
        let net = random_network(&mut rng, n, 1.0);
        // Exclude boundary-ambiguous placements.
        let ambiguous = (0..n).any(|i| {
            ((i + 1)..n)
                .any(|j| (dist(net.stations()[i], net.stations()[j]) - 1.0).abs() < 1e-9)
        });
        if ambiguous {
            continue;
        }
        checked += 1;
        let full = match net.hypergraph() {
            Ok(h) => h,
            Err(e) => return LemmaCheck::new("udg_correspondence", false, e.to_string()),
        };
        let size2: Vec<Vec<usize>> = full
            .edges()
            .iter()
            .filter(|e| e.len() == 2)
            .cloned()
            .collect();
        let udg = unit_disk_graph(net.stations()).unwrap();
        let udg_edges: Vec<Vec<usize>> = udg.hypergraph().edges().to_vec();
        if size2 != udg_edges {
            return LemmaCheck::new(
                "udg_correspondence",
                false,
                format!("mismatch on network {:?}", net.stations()),
            );
        }
    }
    LemmaCheck::new(
        "udg_correspondence",
        true,
        format!("{checked} random networks: size-2 hyperedges = unit disk edges"),
    )
}

/// The generated hypergraph is invariant under coordinate scaling with the
/// matching threshold rescale, and under threshold normalization.
pub fn check_scaling_invariance(cfg: VerifyConfig) -> LemmaCheck {
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed.wrapping_add(2));
    let networks = (cfg.trials / 20).clamp(10, 100);
    for _ in 0..networks {
        let n = rng.gen_range(2..=8usize);
        let beta = rng.gen_range(0.25..4.0);
        let net = random_network(&mut rng, n, beta);
        let rho = rng.gen_range(0.25..4.0);
        let h0 = net.hypergraph().unwrap();
        let h1 = net.scale(rho).unwrap().hypergraph().unwrap();
        let h2 = net.normalize_beta().hypergraph().unwrap();
        if h0 != h1 || h0 != h2 {
            return LemmaCheck::new(
                "scaling_invariance",
                false,
                format!("edge set changed under rho={rho}, beta={beta}"),
            );
        }
        if (net.normalize_beta().beta() - 1.0).abs() > 1e-12 {
            return LemmaCheck::new(
                "scaling_invariance",
                false,
                "normalized threshold differs from 1".to_string(),
            );
        }
    }
    LemmaCheck::new(
        "scaling_invariance",
        true,
        format!("{networks} random networks invariant under scaling and normalization"),
    )
}

/// Any two points of a 60-degree unit sector are within distance 1.
pub fn check_sector_diameter(cfg: VerifyConfig) -> LemmaCheck {
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed.wrapping_add(3));
    let mut worst = 0.0f64;
    for _ in 0..cfg.trials {
        let sample = |rng: &mut ChaCha8Rng| {
            let r = rng.gen::<f64>().sqrt();
            let theta = rng.gen_range(0.0..PI / 3.0);
            PolarPoint::new(r, theta).unwrap()
        };
        let pair = [sample(&mut rng), sample(&mut rng)];
        let d = max_pairwise_distance_in_sector(&pair).unwrap();
        worst = worst.max(d);
    }
    let passed = worst <= 1.0 + 1e-12;
    LemmaCheck::new(
        "sector_diameter",
        passed,
        format!("max distance over {} pairs: {worst:.12}", cfg.trials),
    )
}

/// Radial projection onto the unit circle does not shrink any pairwise
/// distance when all input distances exceed 1.
pub fn check_radial_projection(cfg: VerifyConfig) -> LemmaCheck {
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed.wrapping_add(4));
    let sets = cfg.trials.max(1);
    for _ in 0..sets {
        let points = sample_separated_five_points(&mut rng);
        let projected = radial_project(&points).unwrap();
        for i in 0..5 {
            for j in (i + 1)..5 {
                if dist(projected[i], projected[j]) < dist(points[i], points[j]) - 1e-12 {
                    return LemmaCheck::new(
                        "radial_projection",
                        false,
                        format!("distance decreased for pair ({i},{j})"),
                    );
                }
            }
        }
    }
    LemmaCheck::new(
        "radial_projection",
        true,
        format!("{sets} qualifying 5-point sets: no pairwise distance decreased"),
    )
}

/// The two-chord energy g attains its minimum (3+sqrt 5)/5 at 0 and stays
/// above 1 across its domain; evenness and discrete convexity hold on the
/// grid.
pub fn check_g_minimum(cfg: VerifyConfig) -> LemmaCheck {
    let grid = cfg.grid.max(3);
    let values: Vec<(f64, f64)> = (0..grid)
        .map(|k| {
            let delta = -G_DELTA_MAX + 2.0 * G_DELTA_MAX * k as f64 / (grid - 1) as f64;
            (delta, g_delta(delta).unwrap())
        })
        .collect();
    let (dmin, gmin) = values
        .iter()
        .cloned()
        .min_by(|a, b| a.1.partial_cmp(&b.1).unwrap())
        .unwrap();
    let mut ok = (gmin - g_minimum()).abs() <= 1e-9 && dmin.abs() <= 1e-9;
    ok &= values.iter().all(|&(_, v)| v > 1.0);
    // Evenness over the symmetric grid.
    ok &= values
        .iter()
        .zip(values.iter().rev())
        .all(|(a, b)| (a.1 - b.1).abs() <= 1e-12);
    // Discrete convexity.
    ok &= values
        .windows(3)
        .all(|w| w[0].1 - 2.0 * w[1].1 + w[2].1 >= -1e-9);
    LemmaCheck::new(
        "g_minimum",
        ok,
        format!("grid {grid}: min g = {gmin:.12} at delta = {dmin:.3e}"),
    )
}

/// Statistical sweep of the five-leaf contradiction.
pub fn check_k15_sweep(cfg: VerifyConfig) -> LemmaCheck {
    let report = verify_k15_nonrealizable(cfg.trials.max(1), cfg.seed.wrapping_add(5));
    let energies_ok = report.min_triple_energy.map_or(true, |m| m > 1.0);
    LemmaCheck::new(
        "k15_contradiction_sweep",
        report.all_contradicted && energies_ok,
        format!(
            "{}/{} trials contradicted ({} pair, {} triple); {}",
            report.contradicted,
            report.trials,
            report.pair_forbidden,
            report.triple_forbidden,
            report.note
        ),
    )
}

/// Runs every check.
pub fn run_all(cfg: VerifyConfig) -> Vec<LemmaCheck> {
    vec![
        check_udg_correspondence(cfg),
        check_scaling_invariance(cfg),
        check_sector_diameter(cfg),
        check_radial_projection(cfg),
        check_g_minimum(cfg),
        check_k15_sweep(cfg),
    ]
}
