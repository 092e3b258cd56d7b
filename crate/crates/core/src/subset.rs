//! Subsets of a ground set `{0, .., n-1}` packed into a single machine word.
//!
//! All ground sets in this crate have at most [`MAX_GROUND`] elements, so a
//! subset is a `u64` bitmask. The canonical order on subsets is by
//! cardinality first, then by mask value; every sorted listing in the crate
//! uses this order so that output is deterministic.

use std::fmt;

/// Maximum supported ground-set size.
pub const MAX_GROUND: usize = 64;

/// A subset of `{0, .., 63}` as a bitmask.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct Subset(pub u64);

impl Subset {
    /// The empty subset.
    pub const EMPTY: Subset = Subset(0);

    /// Singleton `{e}`.
    #[inline]
    pub fn singleton(e: usize) -> Subset {
        debug_assert!(e < MAX_GROUND);
        Subset(1 << e)
    }

    /// The full ground set `{0, .., n-1}`.
    #[inline]
    pub fn full(n: usize) -> Subset {
        debug_assert!(n <= MAX_GROUND);
        if n == MAX_GROUND {
            Subset(u64::MAX)
        } else {
            Subset((1u64 << n) - 1)
        }
    }

    /// Build a subset from element indices.
    pub fn from_elements<I: IntoIterator<Item = usize>>(elements: I) -> Subset {
        let mut mask = 0u64;
        for e in elements {
            debug_assert!(e < MAX_GROUND);
            mask |= 1 << e;
        }
        Subset(mask)
    }

    /// Number of elements.
    #[inline]
    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    /// True if the subset is empty.
    #[inline]
    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    /// True if `e` is a member.
    #[inline]
    pub fn contains(self, e: usize) -> bool {
        debug_assert!(e < MAX_GROUND);
        self.0 >> e & 1 == 1
    }

    /// True if `self ⊆ other`.
    #[inline]
    pub fn is_subset_of(self, other: Subset) -> bool {
        self.0 & !other.0 == 0
    }

    /// True if the two subsets share no element.
    #[inline]
    pub fn is_disjoint(self, other: Subset) -> bool {
        self.0 & other.0 == 0
    }

    /// Union.
    #[inline]
    pub fn union(self, other: Subset) -> Subset {
        Subset(self.0 | other.0)
    }

    /// Intersection.
    #[inline]
    pub fn intersection(self, other: Subset) -> Subset {
        Subset(self.0 & other.0)
    }

    /// Set difference `self − other`.
    #[inline]
    pub fn difference(self, other: Subset) -> Subset {
        Subset(self.0 & !other.0)
    }

    /// Symmetric difference.
    #[inline]
    pub fn symmetric_difference(self, other: Subset) -> Subset {
        Subset(self.0 ^ other.0)
    }

    /// `self ∪ {e}`.
    #[inline]
    pub fn insert(self, e: usize) -> Subset {
        debug_assert!(e < MAX_GROUND);
        Subset(self.0 | 1 << e)
    }

    /// `self − {e}`.
    #[inline]
    pub fn remove(self, e: usize) -> Subset {
        debug_assert!(e < MAX_GROUND);
        Subset(self.0 & !(1 << e))
    }

    /// Smallest member, if any.
    #[inline]
    pub fn min_element(self) -> Option<usize> {
        if self.0 == 0 {
            None
        } else {
            Some(self.0.trailing_zeros() as usize)
        }
    }

    /// Iterate member indices in ascending order.
    #[inline]
    pub fn iter(self) -> SubsetIter {
        SubsetIter(self.0)
    }

    /// Member indices in ascending order.
    pub fn elements(self) -> Vec<usize> {
        self.iter().collect()
    }

    /// Canonical order: by cardinality, then by mask value.
    #[inline]
    pub fn canonical_cmp(self, other: Subset) -> std::cmp::Ordering {
        self.len()
            .cmp(&other.len())
            .then_with(|| self.0.cmp(&other.0))
    }

    /// Relabel members through `map`, where `map[old] = new`.
    ///
    /// Panics in debug builds if a member maps out of `MAX_GROUND`.
    pub fn relabel(self, map: &[usize]) -> Subset {
        let mut out = 0u64;
        for e in self.iter() {
            let t = map[e];
            debug_assert!(t < MAX_GROUND);
            out |= 1 << t;
        }
        Subset(out)
    }
}

/// Iterator over member indices of a subset, ascending.
pub struct SubsetIter(u64);

impl Iterator for SubsetIter {
    type Item = usize;

    #[inline]
    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            None
        } else {
            let e = self.0.trailing_zeros() as usize;
            self.0 &= self.0 - 1;
            Some(e)
        }
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let c = self.0.count_ones() as usize;
        (c, Some(c))
    }
}

impl ExactSizeIterator for SubsetIter {}

impl IntoIterator for Subset {
    type Item = usize;
    type IntoIter = SubsetIter;

    fn into_iter(self) -> SubsetIter {
        self.iter()
    }
}

impl fmt::Debug for Subset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        let mut first = true;
        for e in self.iter() {
            if !first {
                write!(f, ",")?;
            }
            write!(f, "{e}")?;
            first = false;
        }
        write!(f, "}}")
    }
}

impl fmt::Display for Subset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

/// All `2^n` subsets of `{0, .., n-1}` in mask order. Requires `n < 64`.
pub fn all_subsets(n: usize) -> impl Iterator<Item = Subset> {
    debug_assert!(n < 64, "iterating all subsets requires n < 64");
    (0u64..1 << n).map(Subset)
}

/// All subsets of `{0, .., n-1}` with exactly `k` elements, ascending by mask.
///
/// Uses Gosper's hack to step between same-popcount masks.
pub fn subsets_of_size(n: usize, k: usize) -> SizedSubsets {
    debug_assert!(n < 64);
    if k > n {
        return SizedSubsets { next: None, limit: 0 };
    }
    if k == 0 {
        return SizedSubsets {
            next: Some(0),
            limit: 1,
        };
    }
    SizedSubsets {
        next: Some((1u64 << k) - 1),
        limit: 1u64 << n,
    }
}

/// Iterator state for [`subsets_of_size`].
pub struct SizedSubsets {
    next: Option<u64>,
    limit: u64,
}

impl Iterator for SizedSubsets {
    type Item = Subset;

    fn next(&mut self) -> Option<Subset> {
        let v = self.next?;
        if v >= self.limit {
            self.next = None;
            return None;
        }
        // Gosper's hack: next mask with the same popcount.
        self.next = if v == 0 {
            None
        } else {
            let c = v & v.wrapping_neg();
            let r = v + c;
            if r == 0 {
                None
            } else {
                Some(r | ((v ^ r) >> (c.trailing_zeros() + 2)))
            }
        };
        Some(Subset(v))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn construction_and_membership() {
        let s = Subset::from_elements([0, 3, 5]);
        assert_eq!(s.len(), 3);
        assert!(s.contains(0) && s.contains(3) && s.contains(5));
        assert!(!s.contains(1));
        assert_eq!(s.elements(), vec![0, 3, 5]);
        assert_eq!(s.min_element(), Some(0));
        assert_eq!(Subset::EMPTY.min_element(), None);
    }

    #[test]
    fn full_handles_edge_sizes() {
        assert_eq!(Subset::full(0), Subset::EMPTY);
        assert_eq!(Subset::full(1).0, 1);
        assert_eq!(Subset::full(64).0, u64::MAX);
        assert_eq!(Subset::full(64).len(), 64);
    }

    #[test]
    fn set_algebra() {
        let a = Subset::from_elements([0, 1, 2]);
        let b = Subset::from_elements([2, 3]);
        assert_eq!(a.union(b), Subset::from_elements([0, 1, 2, 3]));
        assert_eq!(a.intersection(b), Subset::singleton(2));
        assert_eq!(a.difference(b), Subset::from_elements([0, 1]));
        assert_eq!(a.symmetric_difference(b), Subset::from_elements([0, 1, 3]));
        assert!(Subset::from_elements([1, 2]).is_subset_of(a));
        assert!(!a.is_subset_of(b));
        assert!(a.is_disjoint(Subset::from_elements([4, 5])));
        assert!(!a.is_disjoint(b));
    }

    #[test]
    fn canonical_order_sorts_by_size_then_value() {
        let mut v = vec![
            Subset::from_elements([0, 1]),
            Subset::singleton(3),
            Subset::from_elements([0, 2]),
            Subset::singleton(0),
        ];
        v.sort_by(|a, b| a.canonical_cmp(*b));
        assert_eq!(
            v,
            vec![
                Subset::singleton(0),
                Subset::singleton(3),
                Subset::from_elements([0, 1]),
                Subset::from_elements([0, 2]),
            ]
        );
    }

    #[test]
    fn subsets_of_size_counts() {
        // Binomial coefficients of n = 6.
        let counts: Vec<usize> = (0..=6).map(|k| subsets_of_size(6, k).count()).collect();
        assert_eq!(counts, vec![1, 6, 15, 20, 15, 6, 1]);
        // All have the right popcount and are ascending.
        let sizes: Vec<Subset> = subsets_of_size(5, 3).collect();
        assert!(sizes.windows(2).all(|w| w[0].0 < w[1].0));
        assert!(sizes.iter().all(|s| s.len() == 3));
        assert_eq!(subsets_of_size(4, 5).count(), 0);
        assert_eq!(subsets_of_size(4, 0).count(), 1);
        assert_eq!(subsets_of_size(0, 0).count(), 1);
    }

    #[test]
    fn all_subsets_count() {
        assert_eq!(all_subsets(0).count(), 1);
        assert_eq!(all_subsets(5).count(), 32);
    }

    #[test]
    fn relabel_moves_members() {
        let s = Subset::from_elements([0, 2]);
        let map = vec![5, 9, 1];
        assert_eq!(s.relabel(&map), Subset::from_elements([5, 1]));
    }

    #[test]
    fn display_lists_elements() {
        assert_eq!(format!("{}", Subset::from_elements([1, 4])), "{1,4}");
        assert_eq!(format!("{}", Subset::EMPTY), "{}");
    }
}
