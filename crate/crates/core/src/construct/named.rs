//! A registry of named matroids used throughout the test suites and the
//! command-line tool: the rank-2 whirl-like series connection `N5`, the
//! cycle matroids of `K4` and `K_{2,3}`, uniform matroids, the glued-uniform
//! family `SU(k,l)`, and the two pointed families `G:1..G:5` and `L:1..L:5`
//! built from series connections.

use std::fmt;
use std::str::FromStr;

use crate::construct::graph::{complete_bipartite, complete_graph};
use crate::construct::{series_connection, uniform, PointedMatroid};
use crate::error::{Error, Result};
use crate::matroid::Matroid;

/// Identifier for a named matroid.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum NamedId {
    /// Series connection of two three-point lines across a point; the
    /// smallest connected matroid with a pair of disjoint circuits that
    /// together span more than their ranks suggest.
    N5,
    /// Cycle matroid of the complete graph on four vertices.
    MK4,
    /// Cycle matroid of the complete bipartite graph `K_{2,3}`.
    K23,
    /// Uniform matroid `U_{r,n}`.
    U { r: usize, n: usize },
    /// `S((U_{k-2,k};p),(U_{l-2,l};p))` for `k, l >= 3`, glued at `p = 0`.
    Su { k: usize, l: usize },
    /// The five pointed obstructions `G:1 .. G:5`, each with a designated
    /// element tagged `e`.
    G(u8),
    /// `L:i = S((G:i;e),(U_{1,3};p))`: each `G:i` glued to a triple point at
    /// its designated element.
    L(u8),
}

impl fmt::Display for NamedId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            NamedId::N5 => write!(f, "N5"),
            NamedId::MK4 => write!(f, "MK4"),
            NamedId::K23 => write!(f, "K23"),
            NamedId::U { r, n } => write!(f, "U:{r},{n}"),
            NamedId::Su { k, l } => write!(f, "SU:{k},{l}"),
            NamedId::G(i) => write!(f, "G:{i}"),
            NamedId::L(i) => write!(f, "L:{i}"),
        }
    }
}

fn parse_pair(body: &str, what: &str) -> Result<(usize, usize)> {
    let mut parts = body.split(',');
    let err = || Error::InvalidParams(format!("expected {what}:<a>,<b>, got {what}:{body}"));
    let a = parts.next().ok_or_else(err)?.trim();
    let b = parts.next().ok_or_else(err)?.trim();
    if parts.next().is_some() {
        return Err(err());
    }
    let a = a.parse::<usize>().map_err(|_| err())?;
    let b = b.parse::<usize>().map_err(|_| err())?;
    Ok((a, b))
}

impl FromStr for NamedId {
    type Err = Error;

    /// Case-insensitive: `n5`, `mk4`, `k23`, `u:<r>,<n>`, `su:<k>,<l>`,
    /// `g:<i>`, `l:<i>`.
    fn from_str(s: &str) -> Result<NamedId> {
        let lower = s.trim().to_ascii_lowercase();
        match lower.as_str() {
            "n5" => return Ok(NamedId::N5),
            "mk4" => return Ok(NamedId::MK4),
            "k23" => return Ok(NamedId::K23),
            _ => {}
        }
        if let Some(body) = lower.strip_prefix("su:") {
            let (k, l) = parse_pair(body, "su")?;
            return Ok(NamedId::Su { k, l });
        }
        if let Some(body) = lower.strip_prefix("u:") {
            let (r, n) = parse_pair(body, "u")?;
            return Ok(NamedId::U { r, n });
        }
        if let Some(body) = lower.strip_prefix("g:") {
            let i = body
                .trim()
                .parse::<u8>()
                .map_err(|_| Error::InvalidParams(format!("expected g:<1..5>, got {s}")))?;
            return Ok(NamedId::G(i));
        }
        if let Some(body) = lower.strip_prefix("l:") {
            let i = body
                .trim()
                .parse::<u8>()
                .map_err(|_| Error::InvalidParams(format!("expected l:<1..5>, got {s}")))?;
            return Ok(NamedId::L(i));
        }
        Err(Error::InvalidParams(format!("unknown matroid name: {s}")))
    }
}

/// A registry entry: the matroid, an optional distinguished element, and
/// named element tags.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NamedMatroid {
    pub id: NamedId,
    pub matroid: Matroid,
    /// The distinguished element, where the construction has one: the glue
    /// point of `N5`/`SU`/`L:i`, or the designated element of `G:i`.
    pub basepoint: Option<usize>,
    /// Human-readable element tags, e.g. `("e1", 0)`.
    pub tags: Vec<(String, usize)>,
}

impl NamedMatroid {
    fn new(
        id: NamedId,
        matroid: Matroid,
        basepoint: Option<usize>,
        tags: &[(&str, usize)],
    ) -> NamedMatroid {
        NamedMatroid {
            id,
            matroid,
            basepoint,
            tags: tags.iter().map(|&(t, e)| (t.to_string(), e)).collect(),
        }
    }

    /// Look up a tag by name.
    pub fn tag(&self, name: &str) -> Option<usize> {
        self.tags.iter().find(|(t, _)| t == name).map(|(_, e)| *e)
    }
}

fn pointed_uniform(r: usize, n: usize, basepoint: usize) -> PointedMatroid {
    PointedMatroid::new(uniform(r, n).expect("valid uniform parameters"), basepoint)
        .expect("uniform basepoint is neither loop nor coloop")
}

fn n5_matroid() -> Matroid {
    series_connection(&pointed_uniform(1, 3, 0), &pointed_uniform(1, 3, 0))
        .expect("valid series connection")
        .into_matroid()
}

/// `S((U_{k-2,k};0),(U_{l-2,l};0))`: requires `k, l >= 3`.
fn su_matroid(k: usize, l: usize) -> Result<Matroid> {
    if k < 3 || l < 3 {
        return Err(Error::InvalidParams(format!(
            "su requires k, l >= 3, got k={k}, l={l}"
        )));
    }
    if k + l - 1 > crate::subset::MAX_GROUND {
        return Err(Error::GroundTooLarge(k + l - 1));
    }
    Ok(
        series_connection(&pointed_uniform(k - 2, k, 0), &pointed_uniform(l - 2, l, 0))?
            .into_matroid(),
    )
}

/// The matroid of `G:i` together with its designated element.
fn g_recipe(i: u8) -> Result<(Matroid, usize)> {
    let n5 = n5_matroid();
    let u13 = pointed_uniform(1, 3, 0);
    let glue =
        |left: PointedMatroid| -> Result<Matroid> { Ok(series_connection(&left, &u13)?.into_matroid()) };
    match i {
        1 => Ok((n5, 0)),
        2 => Ok((glue(pointed_uniform(1, 4, 0))?, 1)),
        3 => Ok((glue(PointedMatroid::new(n5, 2)?)?, 4)),
        4 => {
            let mk4 = complete_graph(4)?.cycle_matroid()?;
            Ok((glue(PointedMatroid::new(mk4, 1)?)?, 4))
        }
        5 => Ok((glue(PointedMatroid::new(n5, 1)?)?, 2)),
        _ => Err(Error::InvalidParams(format!(
            "g index must be 1..=5, got {i}"
        ))),
    }
}

/// The matroid of `L:i` together with its glue point.
fn l_recipe(i: u8) -> Result<(Matroid, usize)> {
    let (g, e) = g_recipe(i)?;
    let left = PointedMatroid::new(g, e)?;
    let m = series_connection(&left, &pointed_uniform(1, 3, 0))?.into_matroid();
    Ok((m, e))
}

/// Construct a named matroid by identifier.
pub fn named(id: NamedId) -> Result<NamedMatroid> {
    match id {
        NamedId::N5 => Ok(NamedMatroid::new(
            id,
            n5_matroid(),
            Some(0),
            &[("e", 0), ("e1", 1), ("f1", 2), ("e2", 3), ("f2", 4)],
        )),
        NamedId::MK4 => Ok(NamedMatroid::new(
            id,
            complete_graph(4)?.cycle_matroid()?,
            None,
            &[],
        )),
        NamedId::K23 => Ok(NamedMatroid::new(
            id,
            complete_bipartite(2, 3)?.cycle_matroid()?,
            None,
            &[("e1", 0), ("a", 1), ("e", 2), ("e2", 3), ("b", 4), ("c", 5)],
        )),
        NamedId::U { r, n } => Ok(NamedMatroid::new(id, uniform(r, n)?, None, &[])),
        NamedId::Su { k, l } => Ok(NamedMatroid::new(
            id,
            su_matroid(k, l)?,
            Some(0),
            &[("p", 0)],
        )),
        NamedId::G(i) => {
            let (m, e) = g_recipe(i)?;
            Ok(NamedMatroid::new(id, m, Some(e), &[("e", e)]))
        }
        NamedId::L(i) => {
            let (m, p) = l_recipe(i)?;
            Ok(NamedMatroid::new(id, m, Some(p), &[("p", p)]))
        }
    }
}

/// The fixed registry: `N5`, `MK4`, `K23`, `G:1..5`, `L:1..5`, and
/// `SU(k,l)` for `3 <= k <= l <= 5` — nineteen entries.
pub fn registry() -> Vec<NamedMatroid> {
    let mut out = Vec::new();
    for id in [NamedId::N5, NamedId::MK4, NamedId::K23] {
        out.push(named(id).expect("fixed registry entry"));
    }
    for i in 1..=5 {
        out.push(named(NamedId::G(i)).expect("fixed registry entry"));
    }
    for i in 1..=5 {
        out.push(named(NamedId::L(i)).expect("fixed registry entry"));
    }
    for k in 3..=5 {
        for l in k..=5 {
            out.push(named(NamedId::Su { k, l }).expect("fixed registry entry"));
        }
    }
    out
}
