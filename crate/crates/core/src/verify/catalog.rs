//! Instance catalogs: exhaustive, deduplicated families of small matroids
//! (graphic, binary, uniform, named) with replayable text encodings.

use std::collections::HashSet;

use crate::canonical::CanonicalKey;
use crate::construct::gf2::Gf2Matrix;
use crate::family::CircuitFamily;
use crate::construct::graph::Multigraph;
use crate::construct::named::{registry, NamedId};
use crate::construct::uniform;
use crate::error::{Error, Result};
use crate::matroid::Matroid;

/// Default upper bound on graphic catalog edges / binary catalog columns /
/// uniform catalog ground size; raised to [`LARGE_SIZE_BOUND`] by
/// `allow_large`.
pub const DEFAULT_SIZE_BOUND: usize = 12;

/// Upper bound available behind `allow_large`.
pub const LARGE_SIZE_BOUND: usize = 16;

/// Hard cap on binary catalog rank (15 candidate columns already at rank 4).
pub const BINARY_MAX_RANK: usize = 4;

/// Which family of instances to generate.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CatalogFamily {
    /// Cycle matroids of all connected multigraphs (loops and parallel
    /// edges allowed) with at most `max_edges` edges.
    Graphic { max_edges: usize },
    /// Matroids of GF(2) matrices with at most `max_rank` rows and at most
    /// `max_cols` distinct nonzero columns.
    Binary { max_rank: usize, max_cols: usize },
    /// All uniform matroids U(r, n) with 0 <= r <= n <= max_n.
    Uniform { max_n: usize },
    /// The full named registry.
    Named,
}

/// A catalog request: family plus filtering/dedup switches.
#[derive(Clone, Copy, Debug)]
pub struct CatalogSpec {
    pub family: CatalogFamily,
    /// Keep only connected matroids.
    pub connected_only: bool,
    /// Drop isomorphic duplicates (by canonical key).
    pub dedup: bool,
    /// Permit bounds above the desk-scale default, up to
    /// [`LARGE_SIZE_BOUND`].
    pub allow_large: bool,
}

impl CatalogSpec {
    /// A spec with dedup on and no connectivity filter.
    pub fn new(family: CatalogFamily) -> CatalogSpec {
        CatalogSpec {
            family,
            connected_only: false,
            dedup: true,
            allow_large: false,
        }
    }

    /// Same family, keeping only connected matroids.
    pub fn connected(family: CatalogFamily) -> CatalogSpec {
        CatalogSpec {
            connected_only: true,
            ..CatalogSpec::new(family)
        }
    }

    /// Check the bounds against the desk-scale limits.
    pub fn validate(&self) -> Result<()> {
        let cap = if self.allow_large {
            LARGE_SIZE_BOUND
        } else {
            DEFAULT_SIZE_BOUND
        };
        let reject = |what: String| Err(Error::InvalidParams(what));
        match self.family {
            CatalogFamily::Graphic { max_edges } => {
                if max_edges == 0 || max_edges > cap {
                    return reject(format!(
                        "graphic catalog needs 1 <= max_edges <= {cap}, got {max_edges}"
                    ));
                }
            }
            CatalogFamily::Binary { max_rank, max_cols } => {
                if max_rank == 0 || max_rank > BINARY_MAX_RANK {
                    return reject(format!(
                        "binary catalog needs 1 <= max_rank <= {BINARY_MAX_RANK}, got {max_rank}"
                    ));
                }
                if max_cols == 0 || max_cols > cap {
                    return reject(format!(
                        "binary catalog needs 1 <= max_cols <= {cap}, got {max_cols}"
                    ));
                }
            }
            CatalogFamily::Uniform { max_n } => {
                if max_n == 0 || max_n > cap {
                    return reject(format!(
                        "uniform catalog needs 1 <= max_n <= {cap}, got {max_n}"
                    ));
                }
            }
            CatalogFamily::Named => {}
        }
        Ok(())
    }
}

/// How a catalog instance was built, carrying enough data to replay it.
#[derive(Clone, Debug)]
pub enum InstanceSource {
    Graph(Multigraph),
    Gf2(Gf2Matrix),
    Uniform { r: usize, n: usize },
    Named(NamedId),
}

/// One generated matroid together with its provenance.
#[derive(Clone, Debug)]
pub struct CatalogInstance {
    pub matroid: Matroid,
    pub source: InstanceSource,
}

impl CatalogInstance {
    /// Short deterministic display name.
    pub fn label(&self) -> String {
        match &self.source {
            InstanceSource::Graph(g) => {
                let edges: Vec<String> = g
                    .edges()
                    .iter()
                    .map(|&(u, v)| format!("{u}-{v}"))
                    .collect();
                format!("graph(v={}; {})", g.vertex_count(), edges.join(","))
            }
            InstanceSource::Gf2(m) => {
                let cols: Vec<String> = m.cols().iter().map(|c| c.to_string()).collect();
                format!("gf2(r={}; {})", m.rows(), cols.join(","))
            }
            InstanceSource::Uniform { r, n } => format!("U({r},{n})"),
            InstanceSource::Named(id) => id.to_string(),
        }
    }

    /// Replayable text in the standard input grammar.
    pub fn encode(&self) -> String {
        match &self.source {
            InstanceSource::Graph(g) => encode_graph(g),
            InstanceSource::Gf2(m) => encode_gf2(m),
            InstanceSource::Uniform { .. } => encode_matroid(&self.matroid, &[]),
            InstanceSource::Named(id) => {
                let nm = crate::construct::named::named(*id).expect("registry id");
                encode_matroid(&nm.matroid, &nm.tags)
            }
        }
    }

    /// Hex digest of the canonical key (for report correlation).
    pub fn key_digest(&self) -> String {
        format!("{:016x}", self.matroid.canonical_key().digest())
    }
}

/// Serialize a matroid as circuit lines, with optional element tags.
pub fn encode_matroid(m: &Matroid, tags: &[(String, usize)]) -> String {
    let mut out = encode_circuit_family(m.circuits());
    for (name, idx) in tags {
        out.push_str(&format!("tag {name} {idx}\n"));
    }
    out
}

/// Serialize a raw circuit family (not necessarily a matroid) in the same
/// ground-size-plus-circuit-lines grammar used for matroids.
pub fn encode_circuit_family(family: &CircuitFamily) -> String {
    let mut out = String::from("matroid\n");
    out.push_str(&format!("n {}\n", family.ground_size()));
    for c in family.members() {
        let elems: Vec<String> = c.iter().map(|e| e.to_string()).collect();
        out.push_str(&format!("c {}\n", elems.join(" ")));
    }
    out
}

/// Serialize a multigraph as vertex-count plus edge lines.
pub fn encode_graph(g: &Multigraph) -> String {
    let mut out = String::from("graph\n");
    out.push_str(&format!("vertices {}\n", g.vertex_count()));
    for &(u, v) in g.edges() {
        out.push_str(&format!("edge {u} {v}\n"));
    }
    out
}

/// Serialize a GF(2) matrix as row-count plus one line per column listing
/// the rows holding a 1.
pub fn encode_gf2(m: &Gf2Matrix) -> String {
    let mut out = String::from("gf2\n");
    out.push_str(&format!("rows {}\n", m.rows()));
    for &col in m.cols() {
        let rows: Vec<String> = (0..m.rows())
            .filter(|&r| col >> r & 1 == 1)
            .map(|r| r.to_string())
            .collect();
        out.push_str("col");
        if !rows.is_empty() {
            out.push(' ');
            out.push_str(&rows.join(" "));
        }
        out.push('\n');
    }
    out
}

/// Generate the requested catalog in a deterministic order.
pub fn catalog(spec: &CatalogSpec) -> Result<Vec<CatalogInstance>> {
    spec.validate()?;
    let raw: Vec<CatalogInstance> = match spec.family {
        CatalogFamily::Graphic { max_edges } => graphic_instances(max_edges)?,
        CatalogFamily::Binary { max_rank, max_cols } => binary_instances(max_rank, max_cols)?,
        CatalogFamily::Uniform { max_n } => uniform_instances(max_n)?,
        CatalogFamily::Named => registry()
            .into_iter()
            .map(|nm| CatalogInstance {
                matroid: nm.matroid,
                source: InstanceSource::Named(nm.id),
            })
            .collect(),
    };
    let mut seen: HashSet<CanonicalKey> = HashSet::new();
    let mut out = Vec::new();
    for inst in raw {
        if spec.connected_only && !inst.matroid.is_connected() {
            continue;
        }
        if spec.dedup && !seen.insert(inst.matroid.canonical_key().clone()) {
            continue;
        }
        out.push(inst);
    }
    Ok(out)
}

/// The default desk-scale sweep set: graphic matroids from multigraphs with
/// at most 8 edges, binary matroids of rank at most 3 with at most 7
/// columns, uniform matroids with at most 8 elements, and the named
/// registry.
pub fn standard_catalogs(connected_only: bool) -> Vec<CatalogSpec> {
    [
        CatalogFamily::Graphic { max_edges: 8 },
        CatalogFamily::Binary {
            max_rank: 3,
            max_cols: 7,
        },
        CatalogFamily::Uniform { max_n: 8 },
        CatalogFamily::Named,
    ]
    .into_iter()
    .map(|family| CatalogSpec {
        family,
        connected_only,
        dedup: true,
        allow_large: false,
    })
    .collect()
}

/// All instances of the default sweep set, deduplicated across families.
pub fn standard_instances(connected_only: bool) -> Result<Vec<CatalogInstance>> {
    let mut seen: HashSet<CanonicalKey> = HashSet::new();
    let mut out = Vec::new();
    for spec in standard_catalogs(connected_only) {
        for inst in catalog(&spec)? {
            if seen.insert(inst.matroid.canonical_key().clone()) {
                out.push(inst);
            }
        }
    }
    Ok(out)
}

/// All connected multigraphs with at most `max_edges` edges, one per
/// isomorphism class, in breadth-first order from the single vertex.
///
/// Growth step: add an edge (or loop) between existing vertices, or attach
/// a pendant vertex. Every connected multigraph with m >= 1 edges arises
/// from a connected multigraph with m - 1 edges this way: a graph with a
/// degree-1 vertex loses a pendant edge; otherwise minimum degree >= 2, and
/// if every edge were a bridge the graph would be a tree with leaves, so
/// some edge (or loop) can be removed keeping connectivity.
pub fn connected_multigraphs(max_edges: usize) -> Result<Vec<Multigraph>> {
    let single = Multigraph::new(1, Vec::new())?;
    let mut seen: HashSet<CanonicalKey> = HashSet::new();
    seen.insert(single.canonical_key());
    let mut order = vec![single];
    let mut head = 0;
    while head < order.len() {
        let g = order[head].clone();
        head += 1;
        if g.edge_count() == max_edges {
            continue;
        }
        let v = g.vertex_count();
        let mut children = Vec::new();
        for u in 0..v {
            for w in u..v {
                children.push(g.with_edge(u, w)?);
            }
            children.push(g.with_pendant(u)?);
        }
        for child in children {
            if seen.insert(child.canonical_key()) {
                order.push(child);
            }
        }
    }
    Ok(order)
}

fn graphic_instances(max_edges: usize) -> Result<Vec<CatalogInstance>> {
    let mut out = Vec::new();
    for g in connected_multigraphs(max_edges)? {
        let matroid = g.cycle_matroid()?;
        out.push(CatalogInstance {
            matroid,
            source: InstanceSource::Graph(g),
        });
    }
    Ok(out)
}

fn binary_instances(max_rank: usize, max_cols: usize) -> Result<Vec<CatalogInstance>> {
    let vectors = (1u64 << max_rank) - 1;
    let take = max_cols.min(vectors as usize);
    let mut out = Vec::new();
    for size in 0..=take {
        for pick in crate::subset::subsets_of_size(vectors as usize, size) {
            let cols: Vec<u64> = pick.iter().map(|i| (i + 1) as u64).collect();
            let matrix = Gf2Matrix::new(max_rank, cols)?;
            let matroid = matrix.matroid()?;
            out.push(CatalogInstance {
                matroid,
                source: InstanceSource::Gf2(matrix),
            });
        }
    }
    Ok(out)
}

fn uniform_instances(max_n: usize) -> Result<Vec<CatalogInstance>> {
    let mut out = Vec::new();
    for n in 0..=max_n {
        for r in 0..=n {
            out.push(CatalogInstance {
                matroid: uniform(r, n)?,
                source: InstanceSource::Uniform { r, n },
            });
        }
    }
    Ok(out)
}
