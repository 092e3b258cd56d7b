//! Exhaustive enumeration of clutters (antichains of nonempty sets) on a
//! small ground set, in a fixed deterministic order.

use crate::error::{Error, Result};
use crate::family::CircuitFamily;
use crate::subset::Subset;

/// Largest ground size accepted by [`enumerate_clutters`]. At `n = 6` the
/// stream already holds 7 828 353 families.
pub const CLUTTER_MAX_N: usize = 6;

/// Enumerate every clutter on ground size `n` (including the empty family),
/// in a fixed deterministic order. Accepts `1 <= n <= CLUTTER_MAX_N`.
///
/// The stream is lazy: families are produced one at a time, so even the
/// `n = 6` sweep runs in constant memory.
pub fn enumerate_clutters(n: usize) -> Result<ClutterIter> {
    if n == 0 || n > CLUTTER_MAX_N {
        return Err(Error::InvalidParams(format!(
            "clutter enumeration needs 1 <= n <= {CLUTTER_MAX_N}, got {n}"
        )));
    }
    // Candidate member sets: all nonempty subsets, ordered by size then mask.
    let mut candidates: Vec<Subset> = (1u64..(1u64 << n)).map(Subset).collect();
    candidates.sort_by(|a, b| a.canonical_cmp(*b));
    // blocked[i]: bitmask over candidate indices comparable with candidate i
    // (including i itself); picking i forbids all of them downstream.
    let blocked: Vec<u64> = candidates
        .iter()
        .map(|&ci| {
            let mut mask = 0u64;
            for (j, &cj) in candidates.iter().enumerate() {
                if ci.is_subset_of(cj) || cj.is_subset_of(ci) {
                    mask |= 1u64 << j;
                }
            }
            mask
        })
        .collect();
    let all = (1u128 << candidates.len()).wrapping_sub(1) as u64;
    Ok(ClutterIter {
        n,
        candidates,
        blocked,
        stack: vec![(all, 0)],
        path: Vec::new(),
        emitted_empty: false,
    })
}

/// Lazy stream over all clutters on a fixed ground set.
///
/// Produced by [`enumerate_clutters`].
#[derive(Debug)]
pub struct ClutterIter {
    n: usize,
    candidates: Vec<Subset>,
    blocked: Vec<u64>,
    /// Depth-first branch stack: (candidates still allowed, members chosen).
    stack: Vec<(u64, usize)>,
    /// Members chosen along the current branch.
    path: Vec<Subset>,
    emitted_empty: bool,
}

impl ClutterIter {
    /// Ground size the stream enumerates over.
    pub fn ground_size(&self) -> usize {
        self.n
    }
}

impl Iterator for ClutterIter {
    type Item = CircuitFamily;

    fn next(&mut self) -> Option<CircuitFamily> {
        if !self.emitted_empty {
            self.emitted_empty = true;
            return Some(
                CircuitFamily::new(self.n, Vec::new()).expect("empty family is a clutter"),
            );
        }
        while let Some((allowed, depth)) = self.stack.pop() {
            if allowed == 0 {
                continue;
            }
            let i = allowed.trailing_zeros() as usize;
            // Branch A (resumed later): skip candidate i at this depth.
            self.stack.push((allowed & !(1u64 << i), depth));
            // Branch B (taken now): add candidate i.
            self.path.truncate(depth);
            self.path.push(self.candidates[i]);
            self.stack.push((allowed & !self.blocked[i], depth + 1));
            let family = CircuitFamily::new(self.n, self.path.clone())
                .expect("incomparable nonempty sets form a clutter");
            return Some(family);
        }
        None
    }
}

/// Number of clutters on ground size `n` (counts the empty family).
pub fn clutter_count(n: usize) -> Result<u64> {
    Ok(enumerate_clutters(n)?.count() as u64)
}
