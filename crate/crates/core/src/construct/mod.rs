//! Constructions: uniform matroids, direct sums, series and parallel
//! connections across a basepoint, and free extension. Graph, GF(2), and
//! named-registry constructions live in the submodules.

pub mod gf2;
pub mod graph;
pub mod named;

use crate::error::{Error, Result};
use crate::family::CircuitFamily;
use crate::matroid::Matroid;
use crate::subset::{subsets_of_size, Subset, MAX_GROUND};

/// A matroid with a distinguished basepoint that is neither a loop nor a
/// coloop — the operand shape for series and parallel connections.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PointedMatroid {
    matroid: Matroid,
    basepoint: usize,
}

impl PointedMatroid {
    /// Validate the basepoint: in range, not a loop, not a coloop.
    pub fn new(matroid: Matroid, basepoint: usize) -> Result<PointedMatroid> {
        if basepoint >= matroid.ground_size() {
            return Err(Error::OutOfRange {
                element: basepoint,
                ground: matroid.ground_size(),
            });
        }
        if matroid.loops().contains(basepoint) {
            return Err(Error::BasepointLoop(basepoint));
        }
        if matroid.coloops().contains(basepoint) {
            return Err(Error::BasepointColoop(basepoint));
        }
        Ok(PointedMatroid { matroid, basepoint })
    }

    /// The underlying matroid.
    pub fn matroid(&self) -> &Matroid {
        &self.matroid
    }

    /// Unwrap the matroid.
    pub fn into_matroid(self) -> Matroid {
        self.matroid
    }

    /// The distinguished element.
    pub fn basepoint(&self) -> usize {
        self.basepoint
    }
}

/// The uniform matroid `U_{r,n}`: circuits are all `(r+1)`-subsets
/// (none when `r = n`).
pub fn uniform(r: usize, n: usize) -> Result<Matroid> {
    if n > MAX_GROUND {
        return Err(Error::GroundTooLarge(n));
    }
    if r > n {
        return Err(Error::InvalidParams(format!(
            "uniform matroid requires r <= n, got r={r}, n={n}"
        )));
    }
    let circuits: Vec<Subset> = if r == n {
        Vec::new()
    } else {
        subsets_of_size(n, r + 1).collect()
    };
    Ok(Matroid::new_unchecked(CircuitFamily::new(n, circuits)?))
}

/// Direct sum: disjoint union of ground sets (second block shifted), circuits
/// side by side. Rank and connectivity behave accordingly.
pub fn direct_sum(m1: &Matroid, m2: &Matroid) -> Result<Matroid> {
    let n1 = m1.ground_size();
    let n = n1 + m2.ground_size();
    let mut circuits: Vec<Subset> = m1.circuits().members().to_vec();
    circuits.extend(m2.circuits().members().iter().map(|c| Subset(c.0 << n1)));
    Ok(Matroid::new_unchecked(CircuitFamily::new(n, circuits)?))
}

/// Ground-set index of element `e` of the right operand in a connection:
/// the right basepoint is glued onto the left one, every other right element
/// is shifted past the left block, preserving order.
pub fn right_label(left_ground: usize, left_basepoint: usize, right_basepoint: usize, e: usize) -> usize {
    if e == right_basepoint {
        left_basepoint
    } else if e < right_basepoint {
        left_ground + e
    } else {
        left_ground + e - 1
    }
}

fn connection_parts(
    p1: &PointedMatroid,
    p2: &PointedMatroid,
) -> (usize, Vec<Subset>, Vec<Subset>, Vec<Subset>, Vec<Subset>) {
    let (m1, m2) = (p1.matroid(), p2.matroid());
    let (n1, b1, b2) = (m1.ground_size(), p1.basepoint(), p2.basepoint());
    let n = n1 + m2.ground_size() - 1;
    let map = |c: Subset| -> Subset {
        let mut out = Subset::EMPTY;
        for e in c.iter() {
            out = out.insert(right_label(n1, b1, b2, e));
        }
        out
    };
    let mut left_avoiding = Vec::new();
    let mut left_through = Vec::new();
    for &c in m1.circuits().members() {
        if c.contains(b1) {
            left_through.push(c);
        } else {
            left_avoiding.push(c);
        }
    }
    let mut right_avoiding = Vec::new();
    let mut right_through = Vec::new();
    for &c in m2.circuits().members() {
        if c.contains(b2) {
            right_through.push(map(c));
        } else {
            right_avoiding.push(map(c));
        }
    }
    (n, left_avoiding, left_through, right_avoiding, right_through)
}

/// Series connection across the basepoints. The left operand keeps its
/// element indices (the glued point is the left basepoint); right-side
/// elements are shifted per [`right_label`]. Circuits: circuits of either
/// side avoiding the basepoint, plus `C1 ∪ C2` for every pair of circuits
/// through the basepoints. Rank adds.
pub fn series_connection(p1: &PointedMatroid, p2: &PointedMatroid) -> Result<PointedMatroid> {
    let (n, left_avoiding, left_through, right_avoiding, right_through) =
        connection_parts(p1, p2);
    let mut circuits = left_avoiding;
    circuits.extend(right_avoiding);
    for &c1 in &left_through {
        for &c2 in &right_through {
            circuits.push(c1.union(c2));
        }
    }
    let matroid = Matroid::new(CircuitFamily::new(n, circuits)?)
        .expect("series connection circuits satisfy elimination");
    // The glued point inherits a circuit through it from each side, so it is
    // never a loop or coloop when the operand basepoints are not.
    PointedMatroid::new(matroid, p1.basepoint())
}

/// Parallel connection across the basepoints; same labeling convention as
/// [`series_connection`]. Circuits: all circuits of both sides, plus
/// `(C1 ∪ C2) − p` for every pair of circuits through the basepoints.
pub fn parallel_connection(p1: &PointedMatroid, p2: &PointedMatroid) -> Result<PointedMatroid> {
    let (n, left_avoiding, left_through, right_avoiding, right_through) =
        connection_parts(p1, p2);
    let p = p1.basepoint();
    let mut circuits = left_avoiding;
    circuits.extend(right_avoiding);
    circuits.extend(left_through.iter().copied());
    circuits.extend(right_through.iter().copied());
    for &c1 in &left_through {
        for &c2 in &right_through {
            circuits.push(c1.union(c2).remove(p));
        }
    }
    let matroid = Matroid::new(CircuitFamily::new(n, circuits)?)
        .expect("parallel connection circuits satisfy elimination");
    PointedMatroid::new(matroid, p)
}

/// Free extension: append a new element `e = n` whose circuits are exactly
/// `B ∪ {e}` for every basis `B`. Requires positive rank (otherwise the new
/// element would degenerate to a loop).
pub fn free_extension(m: &Matroid) -> Result<PointedMatroid> {
    if m.rank_full() == 0 {
        return Err(Error::RankZero);
    }
    let n = m.ground_size();
    let e = n;
    let mut circuits: Vec<Subset> = m.circuits().members().to_vec();
    circuits.extend(m.bases().into_iter().map(|b| b.insert(e)));
    let matroid = Matroid::new(CircuitFamily::new(n + 1, circuits)?)
        .expect("free extension circuits satisfy elimination");
    PointedMatroid::new(matroid, e)
}
