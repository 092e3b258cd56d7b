//! Multigraphs (loops and parallel edges allowed) and their cycle matroids.
//! Edges are indexed by position; the cycle matroid's ground set is the edge
//! list, so edge order is significant and preserved.

use crate::canonical::{compute_canonical_key, CanonicalKey};
use crate::error::{Error, Result};
use crate::family::CircuitFamily;
use crate::matroid::Matroid;
use crate::subset::{Subset, MAX_GROUND};

/// Hard cap on edge count for cycle-matroid extraction: the circuit scan
/// walks all edge subsets.
pub const CYCLE_MATROID_MAX_EDGES: usize = 24;

/// An undirected multigraph. Endpoint pairs are stored normalized
/// (`u <= v`); a loop is an edge with `u == v`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Multigraph {
    vertices: usize,
    edges: Vec<(usize, usize)>,
}

impl Multigraph {
    /// Build a multigraph, validating endpoint ranges and size caps.
    pub fn new(vertices: usize, edges: Vec<(usize, usize)>) -> Result<Multigraph> {
        if vertices > MAX_GROUND {
            return Err(Error::GroundTooLarge(vertices));
        }
        if edges.len() > MAX_GROUND {
            return Err(Error::GroundTooLarge(edges.len()));
        }
        let mut normalized = Vec::with_capacity(edges.len());
        for (u, v) in edges {
            for endpoint in [u, v] {
                if endpoint >= vertices {
                    return Err(Error::OutOfRange {
                        element: endpoint,
                        ground: vertices,
                    });
                }
            }
            normalized.push((u.min(v), u.max(v)));
        }
        Ok(Multigraph {
            vertices,
            edges: normalized,
        })
    }

    /// Number of vertices.
    pub fn vertex_count(&self) -> usize {
        self.vertices
    }

    /// The edge list in matroid element order.
    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    /// Number of edges (= ground size of the cycle matroid).
    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Connected components as sorted vertex lists, sorted by first vertex.
    /// Isolated vertices form their own components.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let mut parent: Vec<usize> = (0..self.vertices).collect();
        fn find(parent: &mut Vec<usize>, x: usize) -> usize {
            if parent[x] != x {
                let root = find(parent, parent[x]);
                parent[x] = root;
            }
            parent[x]
        }
        for &(u, v) in &self.edges {
            let (ru, rv) = (find(&mut parent, u), find(&mut parent, v));
            if ru != rv {
                parent[ru] = rv;
            }
        }
        let mut groups: std::collections::BTreeMap<usize, Vec<usize>> =
            std::collections::BTreeMap::new();
        for v in 0..self.vertices {
            let root = find(&mut parent, v);
            groups.entry(root).or_default().push(v);
        }
        let mut components: Vec<Vec<usize>> = groups.into_values().collect();
        components.sort_by_key(|c| c[0]);
        components
    }

    /// Whether the graph has at most one connected component (all vertices
    /// in one piece; the empty and single-vertex graphs are connected).
    pub fn is_connected_graph(&self) -> bool {
        self.components().len() <= 1
    }

    /// A copy with one more edge `(u, v)`.
    pub fn with_edge(&self, u: usize, v: usize) -> Result<Multigraph> {
        let mut edges = self.edges.clone();
        edges.push((u, v));
        Multigraph::new(self.vertices, edges)
    }

    /// A copy with a fresh vertex joined to `u` by one new edge.
    pub fn with_pendant(&self, u: usize) -> Result<Multigraph> {
        if u >= self.vertices {
            return Err(Error::OutOfRange {
                element: u,
                ground: self.vertices,
            });
        }
        let mut edges = self.edges.clone();
        edges.push((u, self.vertices));
        Multigraph::new(self.vertices + 1, edges)
    }

    /// The cycle matroid: ground set = edge indices, circuits = edge sets of
    /// cycles (a loop is a 1-circuit, a parallel pair a 2-circuit).
    pub fn cycle_matroid(&self) -> Result<Matroid> {
        if self.edges.len() > CYCLE_MATROID_MAX_EDGES {
            return Err(Error::SearchCap {
                size: self.edges.len(),
                cap: CYCLE_MATROID_MAX_EDGES,
            });
        }
        let m = self.edges.len();
        let mut circuits = Vec::new();
        for mask in 1u64..(1u64 << m) {
            if self.is_cycle(Subset(mask)) {
                circuits.push(Subset(mask));
            }
        }
        Ok(Matroid::new_unchecked(CircuitFamily::new(m, circuits)?))
    }

    /// Whether an edge subset is the edge set of a single cycle: every
    /// touched vertex has degree exactly 2 and the edges form one connected
    /// piece. (A loop contributes 2 to its vertex's degree.)
    fn is_cycle(&self, edge_set: Subset) -> bool {
        let mut degree = vec![0usize; self.vertices];
        for i in edge_set.iter() {
            let (u, v) = self.edges[i];
            degree[u] += 1;
            degree[v] += 1;
        }
        if degree.iter().any(|&d| d != 0 && d != 2) {
            return false;
        }
        // Walk edge-to-edge connectivity from the first edge.
        let mut seen_vertices = vec![false; self.vertices];
        let first = edge_set.min_element().expect("nonempty edge set");
        let mut stack = vec![self.edges[first].0];
        seen_vertices[self.edges[first].0] = true;
        while let Some(v) = stack.pop() {
            for i in edge_set.iter() {
                let (a, b) = self.edges[i];
                for (x, y) in [(a, b), (b, a)] {
                    if x == v && !seen_vertices[y] {
                        seen_vertices[y] = true;
                        stack.push(y);
                    }
                }
            }
        }
        edge_set
            .iter()
            .all(|i| seen_vertices[self.edges[i].0] && seen_vertices[self.edges[i].1])
    }

    /// Canonical key of the multigraph itself (vertex-relabeling invariant,
    /// edge order irrelevant). Distinguishes loop/parallel multiplicities.
    pub fn canonical_key(&self) -> CanonicalKey {
        let masks: Vec<u64> = self
            .edges
            .iter()
            .map(|&(u, v)| (1u64 << u) | (1u64 << v))
            .collect();
        compute_canonical_key(self.vertices, &masks)
    }
}

/// The complete graph `K_k`, edges in lexicographic order `(0,1),(0,2),…`.
pub fn complete_graph(k: usize) -> Result<Multigraph> {
    let mut edges = Vec::new();
    for i in 0..k {
        for j in (i + 1)..k {
            edges.push((i, j));
        }
    }
    Multigraph::new(k, edges)
}

/// The complete bipartite graph `K_{a,b}`: left vertices `0..a`, right
/// vertices `a..a+b`, edges column-major (all of right vertex `a` first).
pub fn complete_bipartite(a: usize, b: usize) -> Result<Multigraph> {
    let mut edges = Vec::new();
    for j in 0..b {
        for i in 0..a {
            edges.push((i, a + j));
        }
    }
    Multigraph::new(a + b, edges)
}
