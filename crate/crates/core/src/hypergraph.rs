//! Hypergraphs as Sperner families of hyperedges, graphs as the 2-uniform
//! special case, and the interference degree invariant computed in exact
//! rational arithmetic by exhaustive search.

use std::collections::BTreeSet;

use itertools::Itertools;
use num_rational::Ratio;
use serde::{Deserialize, Serialize};
use thiserror::Error;

/// Exact rational value; interference degrees are sums of unit fractions.
pub type Rational = Ratio<i64>;

/// Exhaustive-search ceiling for independence numbers and graph degrees.
pub const MAX_EXHAUSTIVE_VERTICES: usize = 24;
/// Ceiling for the hypergraph interference degree (per-vertex subset search).
pub const MAX_SIGMA_VERTICES: usize = 20;
/// Ceiling for isomorphism by permutation search.
pub const MAX_ISO_VERTICES: usize = 10;

#[derive(Error, Debug, Clone, PartialEq)]
pub enum HypergraphError {
    #[error("hyperedge {0:?} has fewer than 2 vertices")]
    UndersizedEdge(Vec<usize>),
    #[error("vertex {vertex} out of range for ground set of size {n}")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("ground set of size {n} exceeds the limit {limit} for this operation")]
    TooLarge { n: usize, limit: usize },
    #[error("vertices {i} and {j} are not neighbors")]
    NotNeighbors { i: usize, j: usize },
    #[error("graph edges must have size exactly 2, found edge of size {0}")]
    NotTwoUniform(usize),
    #[error("invalid parameters: need 2 <= r <= n, got n={n}, r={r}")]
    BadUniformParameters { n: usize, r: usize },
    #[error("star needs at least one leaf")]
    EmptyStar,
}

/// A hypergraph on ground set `0..n` whose edges form a Sperner family.
///
/// Construction normalizes the edge set: edges are sorted, deduplicated,
/// and any edge containing another edge is dropped (a superset of a
/// forbidden set is forbidden, so only minimal sets carry information).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Hypergraph {
    n: usize,
    edges: Vec<Vec<usize>>,
}

impl Hypergraph {
    /// Builds a hypergraph, validating and normalizing the edge family.
    pub fn new<I, E>(n: usize, edges: I) -> Result<Self, HypergraphError>
    where
        I: IntoIterator<Item = E>,
        E: IntoIterator<Item = usize>,
    {
        let mut canon: BTreeSet<Vec<usize>> = BTreeSet::new();
        for edge in edges {
            let set: BTreeSet<usize> = edge.into_iter().collect();
            if set.len() < 2 {
                return Err(HypergraphError::UndersizedEdge(set.into_iter().collect()));
            }
            if let Some(&v) = set.iter().find(|&&v| v >= n) {
                return Err(HypergraphError::VertexOutOfRange { vertex: v, n });
            }
            canon.insert(set.into_iter().collect());
        }
        // Sperner normalization: drop supersets of other edges.
        let minimal: Vec<Vec<usize>> = canon
            .iter()
            .filter(|e| {
                !canon
                    .iter()
                    .any(|f| f.len() < e.len() && f.iter().all(|v| e.binary_search(v).is_ok()))
            })
            .cloned()
            .collect();
        Ok(Hypergraph { n, edges: minimal })
    }

    /// Hypergraph with no edges on `n` vertices.
    pub fn edgeless(n: usize) -> Self {
        Hypergraph { n, edges: Vec::new() }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Edges in canonical order: each sorted ascending, list sorted lex.
    pub fn edges(&self) -> &[Vec<usize>] {
        &self.edges
    }

    fn check_vertex(&self, v: usize) -> Result<(), HypergraphError> {
        if v >= self.n {
            return Err(HypergraphError::VertexOutOfRange { vertex: v, n: self.n });
        }
        Ok(())
    }

    fn check_size(&self, limit: usize) -> Result<(), HypergraphError> {
        if self.n > limit {
            return Err(HypergraphError::TooLarge { n: self.n, limit });
        }
        Ok(())
    }

    fn edge_masks(&self) -> Vec<u32> {
        self.edges
            .iter()
            .map(|e| e.iter().fold(0u32, |m, &v| m | (1 << v)))
            .collect()
    }

    /// True iff `w` contains no hyperedge.
    pub fn is_independent(&self, w: &[usize]) -> Result<bool, HypergraphError> {
        for &v in w {
            self.check_vertex(v)?;
        }
        let wset: BTreeSet<usize> = w.iter().copied().collect();
        Ok(!self
            .edges
            .iter()
            .any(|e| e.iter().all(|v| wset.contains(v))))
    }

    /// Maximum size of an independent set, by exhaustive subset search.
    pub fn independence_number(&self) -> Result<usize, HypergraphError> {
        self.check_size(MAX_EXHAUSTIVE_VERTICES)?;
        let masks = self.edge_masks();
        let mut best = 0usize;
        let full: u32 = (1 << self.n) - 1;
        best_independent(&masks, full, 0, 0, &mut best);
        Ok(best)
    }

    /// Neighbors of `i`: vertices sharing some hyperedge with `i`.
    pub fn neighbors(&self, i: usize) -> Result<BTreeSet<usize>, HypergraphError> {
        self.check_vertex(i)?;
        let mut out = BTreeSet::new();
        for e in &self.edges {
            if e.binary_search(&i).is_ok() {
                out.extend(e.iter().copied().filter(|&j| j != i));
            }
        }
        Ok(out)
    }

    /// Pair weight: max over edges containing `{i, j}` of `1/(|E| - 1)`.
    pub fn delta_weight(&self, i: usize, j: usize) -> Result<Rational, HypergraphError> {
        self.check_vertex(i)?;
        self.check_vertex(j)?;
        let min_size = self
            .edges
            .iter()
            .filter(|e| e.binary_search(&i).is_ok() && e.binary_search(&j).is_ok())
            .map(|e| e.len())
            .min()
            .ok_or(HypergraphError::NotNeighbors { i, j })?;
        Ok(Rational::new(1, (min_size - 1) as i64))
    }

    /// Interference degree: the larger of the two neighborhood maximizations
    ///
    /// * over independent `J` within `N(i)`, the sum of pair weights;
    /// * over `J` with `J + {i}` independent, one plus the sum;
    ///
    /// maximized over all vertices, computed exactly.
    pub fn interference_degree(&self) -> Result<Rational, HypergraphError> {
        self.check_size(MAX_SIGMA_VERTICES)?;
        let masks = self.edge_masks();
        let independent = |set: u32| !masks.iter().any(|&e| e & set == e);
        let mut sigma = Rational::new(0, 1);
        for i in 0..self.n {
            let nb: Vec<usize> = self.neighbors(i)?.into_iter().collect();
            let weights: Vec<Rational> = nb
                .iter()
                .map(|&j| self.delta_weight(i, j))
                .collect::<Result<_, _>>()?;
            let k = nb.len();
            for sub in 0u32..(1 << k) {
                let mut set = 0u32;
                let mut sum = Rational::new(0, 1);
                for (b, &j) in nb.iter().enumerate() {
                    if sub & (1 << b) != 0 {
                        set |= 1 << j;
                        sum += weights[b];
                    }
                }
                if independent(set) && sum > sigma {
                    sigma = sum; // Delta'_i candidate
                }
                if independent(set | (1 << i)) {
                    let with_self = Rational::new(1, 1) + sum; // Delta''_i candidate
                    if with_self > sigma {
                        sigma = with_self;
                    }
                }
            }
        }
        Ok(sigma)
    }

    /// Isomorphism by permutation search over vertex bijections.
    pub fn is_isomorphic_to(&self, other: &Hypergraph) -> Result<bool, HypergraphError> {
        self.check_size(MAX_ISO_VERTICES)?;
        other.check_size(MAX_ISO_VERTICES)?;
        if self.n != other.n || self.edges.len() != other.edges.len() {
            return Ok(false);
        }
        let size_profile = |h: &Hypergraph| {
            let mut sizes: Vec<usize> = h.edges.iter().map(Vec::len).collect();
            sizes.sort_unstable();
            sizes
        };
        let degree_profile = |h: &Hypergraph| {
            let mut deg = vec![0usize; h.n];
            for e in &h.edges {
                for &v in e {
                    deg[v] += 1;
                }
            }
            deg.sort_unstable();
            deg
        };
        if size_profile(self) != size_profile(other)
            || degree_profile(self) != degree_profile(other)
        {
            return Ok(false);
        }
        let target: BTreeSet<&Vec<usize>> = other.edges.iter().collect();
        for perm in (0..self.n).permutations(self.n) {
            let mapped: BTreeSet<Vec<usize>> = self
                .edges
                .iter()
                .map(|e| e.iter().map(|&v| perm[v]).sorted().collect())
                .collect();
            if mapped.iter().collect::<BTreeSet<_>>() == target {
                return Ok(true);
            }
        }
        Ok(false)
    }
}

fn best_independent(
    masks: &[u32],
    remaining_pool: u32,
    chosen: u32,
    chosen_count: usize,
    best: &mut usize,
) {
    if chosen_count + (remaining_pool.count_ones() as usize) <= *best {
        return;
    }
    if remaining_pool == 0 {
        *best = (*best).max(chosen_count);
        return;
    }
    let v = remaining_pool.trailing_zeros();
    let rest = remaining_pool & !(1 << v);
    // Include v if the result stays independent.
    let with_v = chosen | (1 << v);
    if !masks.iter().any(|&e| e & with_v == e) {
        best_independent(masks, rest, with_v, chosen_count + 1, best);
    }
    best_independent(masks, rest, chosen, chosen_count, best);
}

/// A 2-uniform hypergraph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph(Hypergraph);

impl Graph {
    pub fn new<I>(n: usize, edges: I) -> Result<Self, HypergraphError>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let h = Hypergraph::new(n, edges.into_iter().map(|(a, b)| vec![a, b]))?;
        Graph::from_hypergraph(h)
    }

    pub fn from_hypergraph(h: Hypergraph) -> Result<Self, HypergraphError> {
        if let Some(e) = h.edges.iter().find(|e| e.len() != 2) {
            return Err(HypergraphError::NotTwoUniform(e.len()));
        }
        Ok(Graph(h))
    }

    pub fn hypergraph(&self) -> &Hypergraph {
        &self.0
    }

    pub fn n(&self) -> usize {
        self.0.n
    }

    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.0.edges.iter().map(|e| (e[0], e[1]))
    }

    /// Graph interference degree: max over vertices of the independence
    /// number of the subgraph induced on that vertex's neighborhood.
    pub fn interference_degree(&self) -> Result<usize, HypergraphError> {
        self.0.check_size(MAX_EXHAUSTIVE_VERTICES)?;
        let mut adj = vec![0u32; self.n()];
        for (a, b) in self.edges() {
            adj[a] |= 1 << b;
            adj[b] |= 1 << a;
        }
        let mut sigma = 0usize;
        for v in 0..self.n() {
            let nb = adj[v];
            // Max independent set inside nb, via the edge masks restricted
            // to the neighborhood.
            let masks: Vec<u32> = self
                .edges()
                .filter(|&(a, b)| nb & (1 << a) != 0 && nb & (1 << b) != 0)
                .map(|(a, b)| (1u32 << a) | (1 << b))
                .collect();
            let mut best = 0usize;
            best_independent(&masks, nb, 0, 0, &mut best);
            sigma = sigma.max(best);
        }
        Ok(sigma)
    }

    /// Joins a new apex vertex to every existing vertex. The interference
    /// degree of the result equals the independence number of the input.
    pub fn augment_with_apex(&self) -> Graph {
        let n = self.n();
        let mut edges: Vec<(usize, usize)> = self.edges().collect();
        edges.extend((0..n).map(|v| (v, n)));
        Graph::new(n + 1, edges).expect("augmented graph is 2-uniform")
    }
}

/// Complete `r`-uniform hypergraph on `n` vertices: all `r`-subsets.
pub fn complete_uniform(n: usize, r: usize) -> Result<Hypergraph, HypergraphError> {
    if r < 2 || r > n {
        return Err(HypergraphError::BadUniformParameters { n, r });
    }
    Hypergraph::new(n, (0..n).combinations(r))
}

/// The 2-uniform star: center 0 joined to leaves `1..=r`.
pub fn star(r: usize) -> Result<Hypergraph, HypergraphError> {
    if r == 0 {
        return Err(HypergraphError::EmptyStar);
    }
    Hypergraph::new(r + 1, (1..=r).map(|leaf| vec![0, leaf]))
}

// JSON form: {"n": <int>, "edges": [[v,...],...]} with 0-based vertices,
// edges sorted ascending and the edge list sorted lexicographically.
#[derive(Serialize, Deserialize)]
struct HypergraphRepr {
    n: usize,
    edges: Vec<Vec<usize>>,
}

impl Serialize for Hypergraph {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        HypergraphRepr {
            n: self.n,
            edges: self.edges.clone(),
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for Hypergraph {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let repr = HypergraphRepr::deserialize(deserializer)?;
        Hypergraph::new(repr.n, repr.edges).map_err(serde::de::Error::custom)
    }
}
