//! SINR wireless-network model: additive `1/d^alpha` interference,
//! forbidden-set tests, minimal-forbidden-set enumeration, and the
//! generated interference hypergraph. Unit disk graphs fall out as the
//! size-2 special case at `beta = 1`.

use itertools::Itertools;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::geometry::{apply_scaling, dist, GeometryError, Point2};
use crate::hypergraph::{Graph, Hypergraph, HypergraphError};

/// Path-loss exponent used throughout unless overridden.
pub const DEFAULT_ALPHA: f64 = 4.0;

/// Enumeration ceiling for minimal forbidden sets.
pub const MAX_STATIONS: usize = 20;

#[derive(Error, Debug, Clone, PartialEq)]
pub enum WirelessError {
    #[error("a network needs at least one station")]
    NoStations,
    #[error("stations {i} and {j} coincide")]
    CoincidentStations { i: usize, j: usize },
    #[error("path-loss exponent must be positive, got {0}")]
    NonPositiveAlpha(f64),
    #[error("reception threshold must be positive, got {0}")]
    NonPositiveBeta(f64),
    #[error("station index {index} out of range for {n} stations")]
    StationOutOfRange { index: usize, n: usize },
    #[error("receiver {0} is not a member of the transmitting set")]
    ReceiverNotInSet(usize),
    #[error("the station subset must be nonempty")]
    EmptySubset,
    #[error("{n} stations exceed the enumeration limit {limit}")]
    TooManyStations { n: usize, limit: usize },
    #[error("max hyperedge size must be at least 2, got {0}")]
    MaxSizeTooSmall(usize),
    #[error("scale factor must be positive, got {0}")]
    NonPositiveScale(f64),
    #[error(transparent)]
    Geometry(#[from] GeometryError),
    #[error(transparent)]
    Hypergraph(#[from] HypergraphError),
}

/// A wireless network: planar station locations, a path-loss exponent,
/// and a reception threshold.
#[derive(Debug, Clone, PartialEq)]
pub struct WirelessNetwork {
    stations: Vec<Point2>,
    alpha: f64,
    beta: f64,
}

impl WirelessNetwork {
    pub fn new(stations: Vec<Point2>, alpha: f64, beta: f64) -> Result<Self, WirelessError> {
        if stations.is_empty() {
            return Err(WirelessError::NoStations);
        }
        if !(alpha > 0.0) {
            return Err(WirelessError::NonPositiveAlpha(alpha));
        }
        if !(beta > 0.0) {
            return Err(WirelessError::NonPositiveBeta(beta));
        }
        for i in 0..stations.len() {
            for j in (i + 1)..stations.len() {
                if dist(stations[i], stations[j]) == 0.0 {
                    return Err(WirelessError::CoincidentStations { i, j });
                }
            }
        }
        Ok(WirelessNetwork { stations, alpha, beta })
    }

    /// Network with the standard path-loss exponent 4.
    pub fn with_default_alpha(stations: Vec<Point2>, beta: f64) -> Result<Self, WirelessError> {
        WirelessNetwork::new(stations, DEFAULT_ALPHA, beta)
    }

    pub fn stations(&self) -> &[Point2] {
        &self.stations
    }

    pub fn n(&self) -> usize {
        self.stations.len()
    }

    pub fn alpha(&self) -> f64 {
        self.alpha
    }

    pub fn beta(&self) -> f64 {
        self.beta
    }

    fn check_index(&self, index: usize) -> Result<(), WirelessError> {
        if index >= self.n() {
            return Err(WirelessError::StationOutOfRange { index, n: self.n() });
        }
        Ok(())
    }

    /// Interference at station `w` from the other members of `subset`
    /// transmitting: the sum of `1/d^alpha` over `subset - {w}`.
    pub fn energy(&self, subset: &[usize], w: usize) -> Result<f64, WirelessError> {
        for &s in subset {
            self.check_index(s)?;
        }
        self.check_index(w)?;
        if !subset.contains(&w) {
            return Err(WirelessError::ReceiverNotInSet(w));
        }
        Ok(subset
            .iter()
            .filter(|&&s| s != w)
            .map(|&s| dist(self.stations[s], self.stations[w]).powf(-self.alpha))
            .sum())
    }

    /// Returns a witness station at which the interference reaches the
    /// threshold, or `None` if the subset is feasible.
    pub fn is_forbidden(&self, subset: &[usize]) -> Result<Option<usize>, WirelessError> {
        if subset.is_empty() {
            return Err(WirelessError::EmptySubset);
        }
        for &w in subset {
            if self.energy(subset, w)? >= self.beta {
                return Ok(Some(w));
            }
        }
        Ok(None)
    }

    /// All minimal forbidden sets of size at most `max_size`, enumerated
    /// by increasing size; supersets of already-found forbidden sets are
    /// pruned, so minimality is structural.
    pub fn minimal_forbidden_sets(
        &self,
        max_size: usize,
    ) -> Result<Vec<Vec<usize>>, WirelessError> {
        let n = self.n();
        if n > MAX_STATIONS {
            return Err(WirelessError::TooManyStations { n, limit: MAX_STATIONS });
        }
        if max_size < 2 {
            return Err(WirelessError::MaxSizeTooSmall(max_size));
        }
        let cap = max_size.min(n);
        let mut found_masks: Vec<u32> = Vec::new();
        let mut found: Vec<Vec<usize>> = Vec::new();
        for size in 2..=cap {
            for subset in (0..n).combinations(size) {
                let mask = subset.iter().fold(0u32, |m, &v| m | (1 << v));
                if found_masks.iter().any(|&f| f & mask == f) {
                    continue; // superset of a smaller forbidden set
                }
                if self.is_forbidden(&subset)?.is_some() {
                    found_masks.push(mask);
                    found.push(subset);
                }
            }
        }
        found.sort();
        Ok(found)
    }

    /// The interference hypergraph: ground set = station indices, edges =
    /// minimal forbidden sets of size at most `max_size`.
    pub fn generate_hypergraph(&self, max_size: usize) -> Result<Hypergraph, WirelessError> {
        let edges = self.minimal_forbidden_sets(max_size)?;
        Ok(Hypergraph::new(self.n(), edges)?)
    }

    /// Full-size hypergraph (no cap on hyperedge size).
    pub fn hypergraph(&self) -> Result<Hypergraph, WirelessError> {
        self.generate_hypergraph(self.n().max(2))
    }

    /// Scales all station coordinates by `rho` and the threshold by
    /// `1/rho^alpha`; the generated hypergraph is unchanged as an index set.
    pub fn scale(&self, rho: f64) -> Result<WirelessNetwork, WirelessError> {
        if !(rho > 0.0) {
            return Err(WirelessError::NonPositiveScale(rho));
        }
        let stations = apply_scaling(&self.stations, rho)?;
        WirelessNetwork::new(stations, self.alpha, self.beta / rho.powf(self.alpha))
    }

    /// Rescales so the threshold becomes 1, using `rho = beta^(1/alpha)`.
    pub fn normalize_beta(&self) -> WirelessNetwork {
        let rho = (self.beta.ln() / self.alpha).exp();
        self.scale(rho).expect("beta^(1/alpha) is positive")
    }
}

/// Unit disk graph: vertices are the points, edges join pairs at
/// Euclidean distance at most 1 (boundary inclusive).
pub fn unit_disk_graph(points: &[Point2]) -> Result<Graph, WirelessError> {
    for i in 0..points.len() {
        for j in (i + 1)..points.len() {
            if dist(points[i], points[j]) == 0.0 {
                return Err(WirelessError::CoincidentStations { i, j });
            }
        }
    }
    let edges = (0..points.len())
        .tuple_combinations()
        .filter(|&(i, j)| dist(points[i], points[j]) <= 1.0);
    Ok(Graph::new(points.len(), edges)?)
}

// JSON form: {"stations": [[x,y],...], "alpha": 4.0, "beta": 1.0}
#[derive(Serialize, Deserialize)]
struct NetworkRepr {
    stations: Vec<(f64, f64)>,
    alpha: f64,
    beta: f64,
}

impl Serialize for WirelessNetwork {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        NetworkRepr {
            stations: self.stations.iter().map(|p| (p.x, p.y)).collect(),
            alpha: self.alpha,
            beta: self.beta,
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for WirelessNetwork {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let repr = NetworkRepr::deserialize(deserializer)?;
        let stations = repr
            .stations
            .into_iter()
            .map(|(x, y)| Point2::new(x, y))
            .collect::<Result<Vec<_>, _>>()
            .map_err(serde::de::Error::custom)?;
        WirelessNetwork::new(stations, repr.alpha, repr.beta).map_err(serde::de::Error::custom)
    }
}

/// The five-station cross layout realizing the 2-uniform star with four
/// leaves: center at the origin, leaves on the axes at distance 1.
pub fn example_star4_network() -> WirelessNetwork {
    let pts = [(0.0, 0.0), (1.0, 0.0), (0.0, 1.0), (-1.0, 0.0), (0.0, -1.0)]
        .iter()
        .map(|&(x, y)| Point2::new(x, y).unwrap())
        .collect();
    WirelessNetwork::with_default_alpha(pts, 1.0).unwrap()
}
