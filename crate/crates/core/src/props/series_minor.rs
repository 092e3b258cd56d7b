//! Series-minor search. A series-minor move either deletes any element or
//! contracts an element lying in a nontrivial series class of the *current*
//! matroid. Deletions can create new series pairs, so the two move kinds
//! interleave; the search is breadth-first with canonical-key memoization.

use std::collections::HashMap;
use std::fmt;

use crate::canonical::CanonicalKey;
use crate::construct::named::{named, NamedId};
use crate::matroid::{Matroid, Minor};
use crate::subset::Subset;
use crate::{Error, Result};

/// Default cap on the host ground size for series-minor searches; the state
/// space grows exponentially with the element gap.
pub const DEFAULT_MAX_HOST: usize = 12;

/// One series-minor move, in the labels of the matroid it is applied to
/// (host labels when reported by the search).
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SeriesMove {
    /// Delete this element.
    Delete(usize),
    /// Contract this element; legal only while it lies in a series class of
    /// size at least two.
    Contract(usize),
}

impl fmt::Display for SeriesMove {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SeriesMove::Delete(e) => write!(f, "delete {e}"),
            SeriesMove::Contract(e) => write!(f, "contract {e}"),
        }
    }
}

/// Limits for the series-minor search.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SearchOptions {
    /// Maximum allowed host ground size; larger hosts are rejected with a
    /// cap error rather than searched.
    pub max_host: usize,
}

impl Default for SearchOptions {
    fn default() -> SearchOptions {
        SearchOptions {
            max_host: DEFAULT_MAX_HOST,
        }
    }
}

fn check_cap(host: &Matroid, opts: &SearchOptions) -> Result<()> {
    if host.ground_size() > opts.max_host {
        return Err(Error::SearchCap {
            size: host.ground_size(),
            cap: opts.max_host,
        });
    }
    Ok(())
}

/// All legal single moves from `m`, as (move in `m`'s labels, result).
pub fn one_move_minors(m: &Matroid) -> Vec<(SeriesMove, Minor)> {
    let mut out = Vec::new();
    let classes = m.series_classes();
    for e in 0..m.ground_size() {
        let single = Subset::singleton(e);
        out.push((SeriesMove::Delete(e), m.delete(single)));
        if classes.is_in_nontrivial_block(e) {
            out.push((SeriesMove::Contract(e), m.contract(single)));
        }
    }
    out
}

struct PathState {
    matroid: Matroid,
    /// Current element index → host element index.
    to_host: Vec<usize>,
    /// Arena index of the parent plus the host-labeled move that got here.
    parent: Option<(usize, SeriesMove)>,
}

/// Search for a sequence of series-minor moves taking `host` to a matroid
/// isomorphic to `target`. Returns the move list in host labels (empty when
/// the host itself matches), or `None` when `target` is not a series minor.
pub fn find_series_minor_path(
    host: &Matroid,
    target: &Matroid,
    opts: &SearchOptions,
) -> Result<Option<Vec<SeriesMove>>> {
    check_cap(host, opts)?;
    let want = target.ground_size();
    if want > host.ground_size() {
        return Ok(None);
    }
    let target_rank = target.rank_full();
    let mut arena = vec![PathState {
        matroid: host.clone(),
        to_host: (0..host.ground_size()).collect(),
        parent: None,
    }];
    let mut seen: HashMap<CanonicalKey, ()> = HashMap::new();
    seen.insert(host.canonical_key().clone(), ());
    let mut i = 0;
    while i < arena.len() {
        let size = arena[i].matroid.ground_size();
        if size == want {
            if arena[i].matroid.is_isomorphic_to(target) {
                return Ok(Some(reconstruct(&arena, i)));
            }
            i += 1;
            continue;
        }
        let children = one_move_minors(&arena[i].matroid);
        for (mv, minor) in children {
            if minor.matroid.ground_size() < want || minor.matroid.rank_full() < target_rank {
                continue;
            }
            let key = minor.matroid.canonical_key().clone();
            if seen.contains_key(&key) {
                continue;
            }
            seen.insert(key, ());
            let local = match mv {
                SeriesMove::Delete(e) | SeriesMove::Contract(e) => e,
            };
            let host_move = match mv {
                SeriesMove::Delete(_) => SeriesMove::Delete(arena[i].to_host[local]),
                SeriesMove::Contract(_) => SeriesMove::Contract(arena[i].to_host[local]),
            };
            let mut to_host = Vec::with_capacity(minor.matroid.ground_size());
            for old in minor.new_to_old() {
                to_host.push(arena[i].to_host[old]);
            }
            arena.push(PathState {
                matroid: minor.matroid,
                to_host,
                parent: Some((i, host_move)),
            });
        }
        i += 1;
    }
    Ok(None)
}

fn reconstruct(arena: &[PathState], mut idx: usize) -> Vec<SeriesMove> {
    let mut moves = Vec::new();
    while let Some((parent, mv)) = arena[idx].parent {
        moves.push(mv);
        idx = parent;
    }
    moves.reverse();
    moves
}

/// Whether `target` is a series minor of `host` (up to isomorphism).
pub fn has_series_minor(host: &Matroid, target: &Matroid, opts: &SearchOptions) -> Result<bool> {
    Ok(find_series_minor_path(host, target, opts)?.is_some())
}

/// One representative per isomorphism class of series minor of `m` with at
/// least `min_size` elements, in breadth-first discovery order (so `m`
/// itself comes first when large enough).
pub fn series_minor_closure(
    m: &Matroid,
    min_size: usize,
    opts: &SearchOptions,
) -> Result<Vec<Matroid>> {
    check_cap(m, opts)?;
    let mut arena = vec![m.clone()];
    let mut seen: HashMap<CanonicalKey, ()> = HashMap::new();
    seen.insert(m.canonical_key().clone(), ());
    let mut i = 0;
    while i < arena.len() {
        if arena[i].ground_size() > min_size {
            for (_, minor) in one_move_minors(&arena[i]) {
                if minor.matroid.ground_size() < min_size {
                    continue;
                }
                let key = minor.matroid.canonical_key().clone();
                if seen.contains_key(&key) {
                    continue;
                }
                seen.insert(key, ());
                arena.push(minor.matroid);
            }
        }
        i += 1;
    }
    Ok(arena.into_iter().filter(|x| x.ground_size() >= min_size).collect())
}

/// Search for a series minor isomorphic to some `SU(k,l)` (the series
/// connection of `U_{k-2,k}` and `U_{l-2,l}`), trying `3 ≤ k ≤ l` with
/// `k+l-1 ≤ |E|` in lexicographic `(k,l)` order and returning the first hit.
pub fn find_su_series_minor(
    m: &Matroid,
    opts: &SearchOptions,
) -> Result<Option<(usize, usize)>> {
    let n = m.ground_size();
    if n < 5 {
        return Ok(None);
    }
    let closure = series_minor_closure(m, 5, opts)?;
    let mut keys: HashMap<CanonicalKey, ()> = HashMap::new();
    for minor in &closure {
        keys.insert(minor.canonical_key().clone(), ());
    }
    for k in 3..=n {
        if k + k - 1 > n {
            break;
        }
        for l in k..=(n + 1 - k) {
            let su = named(NamedId::Su { k, l })
                .expect("k, l >= 3 and k+l-1 <= |E| <= 64")
                .matroid;
            if keys.contains_key(su.canonical_key()) {
                return Ok(Some((k, l)));
            }
        }
    }
    Ok(None)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::construct::named::{named, NamedId};
    use crate::construct::uniform;

    fn get(id: NamedId) -> Matroid {
        named(id).unwrap().matroid
    }

    fn opts() -> SearchOptions {
        SearchOptions::default()
    }

    /// Replay `moves` (host labels) against `host`, asserting each contract
    /// move is legal, and return the final matroid.
    fn apply_moves(host: &Matroid, moves: &[SeriesMove]) -> Matroid {
        let mut current = host.clone();
        let mut to_current: Vec<Option<usize>> = (0..host.ground_size()).map(Some).collect();
        for mv in moves {
            let (host_label, contracting) = match mv {
                SeriesMove::Delete(e) => (*e, false),
                SeriesMove::Contract(e) => (*e, true),
            };
            let local = to_current[host_label].expect("move touches a surviving element");
            let minor = if contracting {
                assert!(
                    current.series_classes().is_in_nontrivial_block(local),
                    "contract move must act on a nontrivial series class"
                );
                current.contract(Subset::singleton(local))
            } else {
                current.delete(Subset::singleton(local))
            };
            for slot in to_current.iter_mut() {
                *slot = slot.and_then(|i| minor.old_to_new[i]);
            }
            current = minor.matroid;
        }
        current
    }

    #[test]
    fn reflexive_with_empty_path() {
        for id in [NamedId::N5, NamedId::MK4] {
            let m = get(id);
            let path = find_series_minor_path(&m, &m, &opts()).unwrap().unwrap();
            assert!(path.is_empty());
        }
    }

    #[test]
    fn mk4_does_not_reach_n5() {
        assert!(!has_series_minor(&get(NamedId::MK4), &get(NamedId::N5), &opts()).unwrap());
    }

    #[test]
    fn l1_reaches_n5_with_replayable_path() {
        let l1 = get(NamedId::L(1));
        let n5 = get(NamedId::N5);
        let path = find_series_minor_path(&l1, &n5, &opts()).unwrap().unwrap();
        assert_eq!(path.len(), 2);
        let result = apply_moves(&l1, &path);
        assert!(result.is_isomorphic_to(&n5));
    }

    #[test]
    fn every_l_reaches_n5() {
        let n5 = get(NamedId::N5);
        for i in 1..=5u8 {
            let li = get(NamedId::L(i));
            let path = find_series_minor_path(&li, &n5, &opts())
                .unwrap()
                .unwrap_or_else(|| panic!("L:{i} must reach N5"));
            assert!(apply_moves(&li, &path).is_isomorphic_to(&n5));
        }
    }

    #[test]
    fn n5_reaches_triple_point_via_interleaved_moves() {
        // N5 has no series pairs, but deleting one element of a 2-circuit
        // puts its partner in series with the glue point.
        let n5 = get(NamedId::N5);
        let u13 = uniform(1, 3).unwrap();
        let path = find_series_minor_path(&n5, &u13, &opts()).unwrap().unwrap();
        assert!(apply_moves(&n5, &path).is_isomorphic_to(&u13));
        assert!(path.iter().any(|m| matches!(m, SeriesMove::Contract(_))));
        // Transitivity: L1 → N5 → U13 implies L1 → U13.
        assert!(has_series_minor(&get(NamedId::L(1)), &u13, &opts()).unwrap());
    }

    #[test]
    fn target_larger_than_host() {
        assert!(!has_series_minor(&u13(), &get(NamedId::N5), &opts()).unwrap());
    }

    fn u13() -> Matroid {
        uniform(1, 3).unwrap()
    }

    #[test]
    fn host_cap_enforced() {
        let big = uniform(1, 13).unwrap();
        assert!(matches!(
            has_series_minor(&big, &u13(), &opts()),
            Err(Error::SearchCap { size: 13, cap: 12 })
        ));
        let loose = SearchOptions { max_host: 13 };
        assert!(has_series_minor(&big, &u13(), &loose).unwrap());
    }

    #[test]
    fn su_search_examples() {
        assert_eq!(
            find_su_series_minor(&get(NamedId::N5), &opts()).unwrap(),
            Some((3, 3))
        );
        assert_eq!(find_su_series_minor(&get(NamedId::MK4), &opts()).unwrap(), None);
        assert_eq!(
            find_su_series_minor(&get(NamedId::L(1)), &opts()).unwrap(),
            Some((3, 3))
        );
        // SU(3,4) does not reach SU(3,3), so the first lexicographic hit is
        // itself.
        let su34 = get(NamedId::Su { k: 3, l: 4 });
        assert_eq!(find_su_series_minor(&su34, &opts()).unwrap(), Some((3, 4)));
        // Too small to contain any SU.
        assert_eq!(find_su_series_minor(&u13(), &opts()).unwrap(), None);
    }

    #[test]
    fn closure_contents() {
        let l1 = get(NamedId::L(1));
        let closure = series_minor_closure(&l1, 5, &opts()).unwrap();
        assert!(closure[0] == l1);
        let n5 = get(NamedId::N5);
        assert!(closure.iter().any(|m| m.is_isomorphic_to(&n5)));
        // Every closure member is reachable, hence itself has L1 as... no:
        // every member must be a series minor of L1.
        for m in closure.iter().take(6) {
            assert!(has_series_minor(&l1, m, &opts()).unwrap());
        }
        // min_size filters.
        for m in &closure {
            assert!(m.ground_size() >= 5);
        }
    }

    #[test]
    fn move_display() {
        assert_eq!(SeriesMove::Delete(3).to_string(), "delete 3");
        assert_eq!(SeriesMove::Contract(5).to_string(), "contract 5");
    }
}
