//! Realizability of target hypergraphs: random-restart placement search,
//! and the mechanized contradiction pipeline showing that a five-leaf
//! 2-uniform star cannot be generated by any wireless network.

use std::f64::consts::PI;

use rand::prelude::*;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::geometry::{cart_to_polar, dist, radial_project, GeometryError, Point2, PolarPoint};
use crate::hypergraph::{Hypergraph, HypergraphError};
use crate::wireless::{WirelessError, WirelessNetwork, DEFAULT_ALPHA};

/// Largest target ground set the placement search accepts.
pub const MAX_SEARCH_VERTICES: usize = 8;

#[derive(Error, Debug, Clone, PartialEq)]
pub enum RealizabilityError {
    #[error("network has {actual} stations but the target has {expected} vertices")]
    SizeMismatch { expected: usize, actual: usize },
    #[error("target has {n} vertices, exceeding the search limit {limit}")]
    TargetTooLarge { n: usize, limit: usize },
    #[error("expected exactly 5 points, got {0}")]
    NotFivePoints(usize),
    #[error("points {i} and {j} are at distance {d} <= 1")]
    PairTooClose { i: usize, j: usize, d: f64 },
    #[error(transparent)]
    Geometry(#[from] GeometryError),
    #[error(transparent)]
    Hypergraph(#[from] HypergraphError),
    #[error(transparent)]
    Wireless(#[from] WirelessError),
}

/// Knobs for the random-restart placement search.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct RealizationSearchConfig {
    /// Independent restarts from fresh random placements.
    pub restarts: usize,
    /// Accept-if-improved perturbation steps per restart.
    pub local_steps: usize,
    /// Initial perturbation radius; decays geometrically over the steps.
    pub step_scale: f64,
    pub rng_seed: u64,
    /// Required slack from the threshold on both sides; energies inside
    /// the dead zone count as mismatches.
    pub margin: f64,
}

impl Default for RealizationSearchConfig {
    fn default() -> Self {
        RealizationSearchConfig {
            restarts: 100,
            local_steps: 400,
            step_scale: 0.5,
            rng_seed: 0,
            margin: 1e-6,
        }
    }
}

/// Outcome of a placement search.
#[derive(Debug, Clone, Serialize)]
pub struct RealizationSearchResult {
    pub found: bool,
    pub network: Option<WirelessNetwork>,
    /// Smallest number of station subsets whose forbidden/feasible status
    /// disagreed with the target, over all placements tried.
    pub best_mismatch: usize,
    pub trials_run: usize,
}

/// True iff the network generates the target hypergraph (up to relabeling),
/// after normalizing the threshold to 1.
pub fn check_realization(
    net: &WirelessNetwork,
    target: &Hypergraph,
) -> Result<bool, RealizabilityError> {
    if net.n() != target.n() {
        return Err(RealizabilityError::SizeMismatch {
            expected: target.n(),
            actual: net.n(),
        });
    }
    if target.n() > MAX_SEARCH_VERTICES {
        return Err(RealizabilityError::TargetTooLarge {
            n: target.n(),
            limit: MAX_SEARCH_VERTICES,
        });
    }
    let generated = net.normalize_beta().hypergraph()?;
    Ok(generated.is_isomorphic_to(target)?)
}

/// Number of subsets (size >= 2) whose status under the placement, with a
/// `margin` dead zone around the unit threshold, disagrees with the target,
/// plus the total magnitude of those threshold violations. The count is the
/// objective; the magnitude breaks ties on its plateaus.
fn mismatch_score(
    points: &[Point2],
    should_forbid: &[bool],
    alpha: f64,
    margin: f64,
) -> (usize, f64) {
    let n = points.len();
    let mut inv = vec![vec![0.0f64; n]; n];
    for i in 0..n {
        for j in (i + 1)..n {
            let d = dist(points[i], points[j]);
            if d < 1e-9 {
                return (usize::MAX, f64::INFINITY); // degenerate placement
            }
            let e = d.powf(-alpha);
            inv[i][j] = e;
            inv[j][i] = e;
        }
    }
    let mut mismatches = 0usize;
    let mut violation = 0.0f64;
    for mask in 1u32..(1 << n) {
        if mask.count_ones() < 2 {
            continue;
        }
        let members: Vec<usize> = (0..n).filter(|&v| mask & (1 << v) != 0).collect();
        let max_energy = members
            .iter()
            .map(|&w| {
                members
                    .iter()
                    .filter(|&&s| s != w)
                    .map(|&s| inv[s][w])
                    .sum::<f64>()
            })
            .fold(0.0f64, f64::max);
        let shortfall = if should_forbid[mask as usize] {
            (1.0 + margin) - max_energy
        } else {
            max_energy - (1.0 - margin)
        };
        if shortfall > 0.0 {
            mismatches += 1;
            violation += shortfall;
        }
    }
    (mismatches, violation)
}

fn score_improved(next: (usize, f64), current: (usize, f64)) -> bool {
    next.0 < current.0 || (next.0 == current.0 && next.1 <= current.1)
}

/// Random-restart, derivative-free search for a placement whose generated
/// hypergraph equals the target (threshold fixed at 1). Deterministic for
/// a given seed. Failure is reported through `found = false`.
pub fn search_realization(
    target: &Hypergraph,
    cfg: &RealizationSearchConfig,
) -> Result<RealizationSearchResult, RealizabilityError> {
    let n = target.n();
    if n > MAX_SEARCH_VERTICES {
        return Err(RealizabilityError::TargetTooLarge {
            n,
            limit: MAX_SEARCH_VERTICES,
        });
    }
    // Target status per subset mask: forbidden iff it contains an edge.
    let mut should_forbid = vec![false; 1usize << n];
    let edge_masks: Vec<u32> = target
        .edges()
        .iter()
        .map(|e| e.iter().fold(0u32, |m, &v| m | (1 << v)))
        .collect();
    for (mask, flag) in should_forbid.iter_mut().enumerate() {
        *flag = edge_masks.iter().any(|&e| e & (mask as u32) == e);
    }

    if n == 1 {
        // A single station generates no edges; any placement realizes an
        // edgeless 1-vertex target.
        let net = WirelessNetwork::with_default_alpha(
            vec![Point2::new(0.0, 0.0).unwrap()],
            1.0,
        )?;
        return Ok(RealizationSearchResult {
            found: true,
            network: Some(net),
            best_mismatch: 0,
            trials_run: 0,
        });
    }

    let mut best_mismatch = usize::MAX;
    let mut best_points: Option<Vec<Point2>> = None;
    let mut trials_run = 0usize;

    'restarts: for restart in 0..cfg.restarts {
        let mut rng = ChaCha8Rng::seed_from_u64(cfg.rng_seed.wrapping_add(restart as u64));
        trials_run += 1;
        let mut points: Vec<Point2> = (0..n)
            .map(|_| {
                let r = 2.0 * rng.gen::<f64>().sqrt();
                let theta = rng.gen_range(0.0..2.0 * PI);
                Point2::new(r * theta.cos(), r * theta.sin()).unwrap()
            })
            .collect();
        let mut current = mismatch_score(&points, &should_forbid, DEFAULT_ALPHA, cfg.margin);
        for step in 0..cfg.local_steps {
            if current.0 == 0 {
                break;
            }
            let scale = cfg.step_scale
                * (0.01f64).powf(step as f64 / cfg.local_steps.max(1) as f64);
            let idx = rng.gen_range(0..n);
            let saved = points[idx];
            let candidate = Point2::new(
                saved.x + rng.gen_range(-scale..scale),
                saved.y + rng.gen_range(-scale..scale),
            )
            .unwrap();
            points[idx] = candidate;
            let next = mismatch_score(&points, &should_forbid, DEFAULT_ALPHA, cfg.margin);
            if score_improved(next, current) {
                current = next;
            } else {
                points[idx] = saved;
            }
        }
        if current.0 < best_mismatch {
            best_mismatch = current.0;
            best_points = Some(points.clone());
            if current.0 == 0 {
                break 'restarts;
            }
        }
    }

    if best_mismatch == 0 {
        let net = WirelessNetwork::with_default_alpha(best_points.unwrap(), 1.0)?;
        debug_assert!(check_realization(&net, target)?);
        return Ok(RealizationSearchResult {
            found: true,
            network: Some(net),
            best_mismatch: 0,
            trials_run,
        });
    }
    Ok(RealizationSearchResult {
        found: false,
        network: None,
        best_mismatch,
        trials_run,
    })
}

/// Constructive witness for one step of the five-leaf contradiction: for
/// five points of the punctured unit ball at pairwise distances above 1,
/// the radial projection leaves five circle gaps in (pi/3, 2pi/3) summing
/// to 2pi, some point's two adjacent gaps exceed 2pi/3 by at most 2pi/15,
/// and that triple's center already receives interference >= 1.
#[derive(Debug, Clone, Serialize)]
pub struct K15Certificate {
    /// Projected points on the unit circle, as (r, theta) pairs in input order.
    pub projected_points: Vec<(f64, f64)>,
    /// Consecutive gaps between the projected points, in circle order.
    pub gap_angles: Vec<f64>,
    /// Input indices (left neighbor, center, right neighbor) of the
    /// certified forbidden triple.
    pub chosen_triple: [usize; 3],
    /// Interference at the triple's center from its two neighbors.
    pub triple_energy: f64,
}

pub fn k15_witness(points: &[Point2]) -> Result<K15Certificate, RealizabilityError> {
    if points.len() != 5 {
        return Err(RealizabilityError::NotFivePoints(points.len()));
    }
    for i in 0..5 {
        for j in (i + 1)..5 {
            let d = dist(points[i], points[j]);
            if d <= 1.0 {
                return Err(RealizabilityError::PairTooClose { i, j, d });
            }
        }
    }
    let projected = radial_project(points)?;
    let polar: Vec<PolarPoint> = projected
        .iter()
        .map(|&p| cart_to_polar(p))
        .collect::<Result<_, _>>()?;

    // Circle order of the projected points.
    let mut order: Vec<usize> = (0..5).collect();
    order.sort_by(|&a, &b| polar[a].theta().partial_cmp(&polar[b].theta()).unwrap());

    let gaps: Vec<f64> = (0..5)
        .map(|k| {
            let a = polar[order[k]].theta();
            let b = polar[order[(k + 1) % 5]].theta();
            let mut gap = b - a;
            if gap <= 0.0 {
                gap += 2.0 * PI;
            }
            gap
        })
        .collect();
    debug_assert!((gaps.iter().sum::<f64>() - 2.0 * PI).abs() < 1e-9);

    // Distances above 1 force every gap above pi/3, hence below 2pi/3.
    for &gap in &gaps {
        debug_assert!(gap > PI / 3.0 - 1e-9 && gap < 2.0 * PI / 3.0 + 1e-9);
    }

    // Pigeonhole: the center whose two adjacent gaps have the smallest sum.
    // gaps[k-1] and gaps[k] are adjacent to the point at circle position k.
    let center_pos = (0..5)
        .min_by(|&a, &b| {
            let sa = gaps[(a + 4) % 5] + gaps[a];
            let sb = gaps[(b + 4) % 5] + gaps[b];
            sa.partial_cmp(&sb).unwrap()
        })
        .unwrap();
    let left_gap = gaps[(center_pos + 4) % 5];
    let right_gap = gaps[center_pos];
    debug_assert!(left_gap + right_gap <= 2.0 * PI / 3.0 + 2.0 * PI / 15.0 + 1e-9);

    let left = order[(center_pos + 4) % 5];
    let center = order[center_pos];
    let right = order[(center_pos + 1) % 5];

    // Chord energy at the center from its two neighbors on the circle.
    let chord = |gap: f64| 2.0 * (gap / 2.0).sin();
    let triple_energy = chord(left_gap).powi(-4) + chord(right_gap).powi(-4);
    debug_assert!(triple_energy >= 1.0);

    Ok(K15Certificate {
        projected_points: polar.iter().map(|p| (p.r(), p.theta())).collect(),
        gap_angles: gaps,
        chosen_triple: [left, center, right],
        triple_energy,
    })
}

/// How a candidate set of five leaf locations contradicts the five-leaf
/// star's requirements at threshold 1.
#[derive(Debug, Clone, Serialize)]
pub enum K15Contradiction {
    /// Two leaves within unit distance: that pair is already forbidden,
    /// so the leaves are not independent.
    PairForbidden { i: usize, j: usize, distance: f64 },
    /// All pairs are separated, but three consecutive projected leaves
    /// form a forbidden triple.
    TripleForbidden(K15Certificate),
}

/// Classifies one candidate placement of the five leaves.
pub fn classify_k15_candidate(
    points: &[Point2],
) -> Result<K15Contradiction, RealizabilityError> {
    if points.len() != 5 {
        return Err(RealizabilityError::NotFivePoints(points.len()));
    }
    for i in 0..5 {
        for j in (i + 1)..5 {
            let d = dist(points[i], points[j]);
            if d <= 1.0 {
                return Ok(K15Contradiction::PairForbidden { i, j, distance: d });
            }
        }
    }
    Ok(K15Contradiction::TripleForbidden(k15_witness(points)?))
}

/// Randomized sweep over candidate five-leaf placements in the punctured
/// unit ball; every trial must land in one of the two contradiction classes.
#[derive(Debug, Clone, Serialize)]
pub struct K15SweepReport {
    pub trials: u64,
    pub rng_seed: u64,
    pub pair_forbidden: u64,
    pub triple_forbidden: u64,
    pub contradicted: u64,
    pub min_triple_energy: Option<f64>,
    pub mean_triple_energy: Option<f64>,
    pub all_contradicted: bool,
    /// Scope statement carried into every report.
    pub note: String,
}

/// Samples a point of the punctured unit ball, area-uniformly.
fn sample_ball_point(rng: &mut impl Rng) -> Point2 {
    loop {
        let r = rng.gen::<f64>().sqrt();
        if r == 0.0 {
            continue;
        }
        let theta = rng.gen_range(0.0..2.0 * PI);
        return Point2::new(r * theta.cos(), r * theta.sin()).unwrap();
    }
}

/// Statistical sweep: every sampled placement of five leaves is refuted
/// either by a close pair or by a forbidden projected triple.
///
/// Half the trials draw leaves area-uniformly (these almost always land
/// on the pair contradiction); the other half draw pairwise-separated
/// placements so the triple certificate path is exercised too.
pub fn verify_k15_nonrealizable(trials: u64, rng_seed: u64) -> K15SweepReport {
    let mut pair = 0u64;
    let mut triple = 0u64;
    let mut min_energy = f64::INFINITY;
    let mut sum_energy = 0.0f64;
    for t in 0..trials {
        // Per-trial RNG so results are order-independent.
        let mut rng = ChaCha8Rng::seed_from_u64(rng_seed.wrapping_add(t));
        let points: Vec<Point2> = if t % 2 == 0 {
            (0..5).map(|_| sample_ball_point(&mut rng)).collect()
        } else {
            sample_separated_five_points(&mut rng)
        };
        match classify_k15_candidate(&points).expect("sampled points satisfy preconditions") {
            K15Contradiction::PairForbidden { .. } => pair += 1,
            K15Contradiction::TripleForbidden(cert) => {
                triple += 1;
                min_energy = min_energy.min(cert.triple_energy);
                sum_energy += cert.triple_energy;
            }
        }
    }
    let contradicted = pair + triple;
    K15SweepReport {
        trials,
        rng_seed,
        pair_forbidden: pair,
        triple_forbidden: triple,
        contradicted,
        min_triple_energy: (triple > 0).then_some(min_energy),
        mean_triple_energy: (triple > 0).then_some(sum_energy / triple as f64),
        all_contradicted: contradicted == trials,
        note: "statistical evidence plus per-trial analytic certificates; \
               not a machine-checked proof of non-realizability"
            .to_string(),
    }
}

/// Samples five points of the punctured unit ball with all pairwise
/// distances above 1, by drawing circle gaps above pi/3 and radii large
/// enough that the smallest gap's chord still exceeds 1.
pub fn sample_separated_five_points(rng: &mut impl Rng) -> Vec<Point2> {
    loop {
        let raw: Vec<f64> = (0..5).map(|_| rng.gen_range(0.01..1.0f64)).collect();
        let total: f64 = raw.iter().sum();
        let gaps: Vec<f64> = raw.iter().map(|u| PI / 3.0 + (PI / 3.0) * u / total).collect();
        let min_gap = gaps.iter().cloned().fold(f64::INFINITY, f64::min);
        let r_lo = 1.0 / (2.0 * (min_gap / 2.0).sin());
        let start = rng.gen_range(0.0..2.0 * PI);
        let mut angle = start;
        let mut points = Vec::with_capacity(5);
        for &gap in &gaps {
            let r = rng.gen_range(r_lo..1.0f64.max(r_lo + 1e-9));
            points.push(Point2::new(r * angle.cos(), r * angle.sin()).unwrap());
            angle += gap;
        }
        let ok = (0..5).all(|i| {
            ((i + 1)..5).all(|j| dist(points[i], points[j]) > 1.0)
        }) && points.iter().all(|p| p.norm() <= 1.0 && p.norm() > 0.0);
        if ok {
            return points;
        }
    }
}
