//! Simple undirected graphs and the fan-graph families.
//!
//! Vertex ordering is part of the contract, since the block structure of
//! every matrix built from these graphs depends on it:
//!
//! * `generalized_fan(m, n)`: path vertices `0..n` (in path order), then the
//!   `m` hub vertices `n..n+m`.
//! * `nc_graph(m, n)`: `[0, n)` first path, `[n, n+m)` first hubs,
//!   `[n+m, n+2m)` second hubs, `[n+2m, 2n+2m)` second path. Hub `n+i` is
//!   matched to hub `n+m+i`.
//!
//! In the drawings usually used for `F_{3,4}` the path is labelled `a b c d`
//! and the hubs `0 1 2`; here `a..d` are `0..3` and hubs `0..2` are `4..6`.

use std::collections::{BTreeSet, VecDeque};
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A finite simple undirected graph on vertices `0..order`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    order: usize,
    // normalized (u < v), ascending
    edges: Vec<(usize, usize)>,
    neighbors: Vec<Vec<usize>>,
}

impl Graph {
    /// Builds a graph from an edge list, rejecting self-loops, duplicates
    /// (in either orientation) and out-of-range endpoints.
    pub fn from_edges(
        order: usize,
        edges: impl IntoIterator<Item = (usize, usize)>,
    ) -> Result<Self> {
        let mut set = BTreeSet::new();
        for (u, v) in edges {
            if u >= order || v >= order {
                return Err(Error::InvalidEdge {
                    u,
                    v,
                    order,
                    reason: "endpoint out of range",
                });
            }
            if u == v {
                return Err(Error::InvalidEdge {
                    u,
                    v,
                    order,
                    reason: "self-loop",
                });
            }
            if !set.insert((u.min(v), u.max(v))) {
                return Err(Error::InvalidEdge {
                    u,
                    v,
                    order,
                    reason: "duplicate edge",
                });
            }
        }
        Ok(Self::from_normalized(order, set))
    }

    fn from_normalized(order: usize, set: BTreeSet<(usize, usize)>) -> Self {
        let mut neighbors = vec![Vec::new(); order];
        for &(u, v) in &set {
            neighbors[u].push(v);
            neighbors[v].push(u);
        }
        for list in &mut neighbors {
            list.sort_unstable();
        }
        Self {
            order,
            edges: set.into_iter().collect(),
            neighbors,
        }
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Edges as `(u, v)` with `u < v`, in ascending order.
    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.neighbors[v]
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.order && self.neighbors[u].binary_search(&v).is_ok()
    }

    pub fn degree_sequence(&self) -> Vec<usize> {
        self.neighbors.iter().map(Vec::len).collect()
    }

    /// Hop distances from `source`; `None` marks unreachable vertices.
    ///
    /// # Panics
    ///
    /// Panics if `source >= order`.
    pub fn bfs_distances(&self, source: usize) -> Vec<Option<usize>> {
        assert!(
            source < self.order,
            "source {source} out of range for order {}",
            self.order
        );
        let mut dist = vec![None; self.order];
        let mut queue = VecDeque::new();
        dist[source] = Some(0);
        queue.push_back(source);
        while let Some(u) = queue.pop_front() {
            let du = dist[u].expect("queued vertices have a distance");
            for &w in &self.neighbors[u] {
                if dist[w].is_none() {
                    dist[w] = Some(du + 1);
                    queue.push_back(w);
                }
            }
        }
        dist
    }

    /// The empty graph (order 0) counts as connected.
    pub fn is_connected(&self) -> bool {
        self.order == 0 || self.bfs_distances(0).iter().all(Option::is_some)
    }

    /// Number of connected components.
    pub fn component_count(&self) -> usize {
        let mut seen = vec![false; self.order];
        let mut count = 0;
        for start in 0..self.order {
            if seen[start] {
                continue;
            }
            count += 1;
            for (v, d) in self.bfs_distances(start).into_iter().enumerate() {
                if d.is_some() {
                    seen[v] = true;
                }
            }
        }
        count
    }

    /// Disjoint union: `self`'s vertices first, `other`'s shifted by `self.order()`.
    pub fn disjoint_union(&self, other: &Graph) -> Graph {
        let shift = self.order;
        let set = self
            .edges
            .iter()
            .copied()
            .chain(other.edges.iter().map(|&(u, v)| (u + shift, v + shift)))
            .collect();
        Self::from_normalized(self.order + other.order, set)
    }
}

/// The null graph (no edges) on `m` vertices.
pub fn null_graph(m: usize) -> Result<Graph> {
    if m == 0 {
        return Err(Error::InvalidParameter("null graph needs m >= 1".into()));
    }
    Ok(Graph::from_normalized(m, BTreeSet::new()))
}

/// The path `0 - 1 - ... - (n-1)`.
pub fn path_graph(n: usize) -> Result<Graph> {
    if n == 0 {
        return Err(Error::InvalidParameter("path graph needs n >= 1".into()));
    }
    Ok(Graph::from_normalized(
        n,
        (1..n).map(|i| (i - 1, i)).collect(),
    ))
}

/// Join of two nonempty graphs: disjoint union plus every cross edge.
pub fn join(g1: &Graph, g2: &Graph) -> Result<Graph> {
    if g1.order() == 0 || g2.order() == 0 {
        return Err(Error::InvalidParameter(
            "join needs two nonempty graphs".into(),
        ));
    }
    let shift = g1.order();
    let mut set: BTreeSet<_> = g1.disjoint_union(g2).edges.into_iter().collect();
    for u in 0..g1.order() {
        for v in 0..g2.order() {
            set.insert((u, v + shift));
        }
    }
    Ok(Graph::from_normalized(g1.order() + g2.order(), set))
}

/// Generalized fan `F_{m,n}`: `m` independent hubs joined to `P_n`.
pub fn generalized_fan(m: usize, n: usize) -> Result<Graph> {
    if m == 0 || n == 0 {
        return Err(Error::InvalidParameter(format!(
            "generalized fan needs m, n >= 1 (got m={m}, n={n})"
        )));
    }
    join(&path_graph(n)?, &null_graph(m)?)
}

/// Two copies of `F_{m,n}` with corresponding hubs matched by `m` edges.
pub fn nc_graph(m: usize, n: usize) -> Result<Graph> {
    if m < 2 || n < 2 {
        return Err(Error::InvalidParameter(format!(
            "NC graph needs m, n >= 2 (got m={m}, n={n})"
        )));
    }
    let fan = generalized_fan(m, n)?;
    // second copy: path vertex j -> n+2m+j, hub i -> n+m+i
    let relabel = |v: usize| if v < n { n + 2 * m + v } else { m + v };
    let mut set: BTreeSet<_> = fan.edges.iter().copied().collect();
    for &(u, v) in fan.edges() {
        let (a, b) = (relabel(u), relabel(v));
        set.insert((a.min(b), a.max(b)));
    }
    for i in 0..m {
        set.insert((n + i, n + m + i));
    }
    Ok(Graph::from_normalized(2 * (m + n), set))
}

/// Parameterized graph families with a canonical construction.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub enum FamilyDescriptor {
    NullGraph(usize),
    Path(usize),
    Join(Box<FamilyDescriptor>, Box<FamilyDescriptor>),
    GeneralizedFan { m: usize, n: usize },
    Nc { m: usize, n: usize },
}

impl FamilyDescriptor {
    pub fn build(&self) -> Result<Graph> {
        match self {
            Self::NullGraph(m) => null_graph(*m),
            Self::Path(n) => path_graph(*n),
            Self::Join(a, b) => join(&a.build()?, &b.build()?),
            Self::GeneralizedFan { m, n } => generalized_fan(*m, *n),
            Self::Nc { m, n } => nc_graph(*m, *n),
        }
    }
}

/// The two families with closed-form spectra.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Family {
    Fan,
    Nc,
}

impl Family {
    pub fn descriptor(self, m: usize, n: usize) -> FamilyDescriptor {
        match self {
            Self::Fan => FamilyDescriptor::GeneralizedFan { m, n },
            Self::Nc => FamilyDescriptor::Nc { m, n },
        }
    }

    pub fn build(self, m: usize, n: usize) -> Result<Graph> {
        self.descriptor(m, n).build()
    }

    pub fn validate(self, m: usize, n: usize) -> Result<()> {
        let min = match self {
            Self::Fan => 1,
            Self::Nc => 2,
        };
        if m < min || n < min {
            return Err(Error::InvalidParameter(format!(
                "{self} needs m, n >= {min} (got m={m}, n={n})"
            )));
        }
        Ok(())
    }

    pub fn order(self, m: usize, n: usize) -> usize {
        match self {
            Self::Fan => m + n,
            Self::Nc => 2 * (m + n),
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Self::Fan => "fan",
            Self::Nc => "nc",
        })
    }
}

impl std::str::FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "fan" | "generalized-fan" => Ok(Self::Fan),
            "nc" => Ok(Self::Nc),
            other => Err(Error::Parse(format!(
                "unknown family '{other}' (expected fan or nc)"
            ))),
        }
    }
}
