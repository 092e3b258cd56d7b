//! Validated antichains of nonempty subsets ("set families" in clutter form).
//!
//! A [`CircuitFamily`] stores a sorted, duplicate-free antichain over a ground
//! set of size `n`. It performs the structural validation shared by matroids
//! and raw clutters: members are nonempty, in range, and incomparable. Circuit
//! *elimination* is a separate, stronger condition checked by
//! [`crate::Matroid::new`].

use crate::error::{Error, Result};
use crate::subset::{Subset, MAX_GROUND};

/// A sorted antichain of nonempty subsets of `{0, .., n-1}`.
///
/// Members are kept in canonical order (cardinality, then mask value) and
/// exact duplicates are silently merged. Proper containment between members is
/// an error.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct CircuitFamily {
    n: usize,
    members: Vec<Subset>,
}

impl CircuitFamily {
    /// Validate and canonicalize a family of subsets over `{0, .., n-1}`.
    pub fn new<I: IntoIterator<Item = Subset>>(n: usize, members: I) -> Result<CircuitFamily> {
        if n > MAX_GROUND {
            return Err(Error::GroundTooLarge(n));
        }
        let ground = Subset::full(n);
        let mut sorted: Vec<Subset> = members.into_iter().collect();
        for &m in &sorted {
            if m.is_empty() {
                return Err(Error::EmptyCircuit);
            }
            if !m.is_subset_of(ground) {
                let bad = m.difference(ground).min_element().unwrap();
                return Err(Error::OutOfRange {
                    element: bad,
                    ground: n,
                });
            }
        }
        sorted.sort_by(|a, b| a.canonical_cmp(*b));
        sorted.dedup();
        // Sorted by cardinality, so any containment has the smaller set first.
        for (i, &inner) in sorted.iter().enumerate() {
            for &outer in &sorted[i + 1..] {
                if inner.is_subset_of(outer) {
                    return Err(Error::NotAntichain {
                        inner: inner.elements(),
                        outer: outer.elements(),
                    });
                }
            }
        }
        Ok(CircuitFamily { n, members: sorted })
    }

    /// Convenience constructor from element lists.
    pub fn from_lists<I, J>(n: usize, lists: I) -> Result<CircuitFamily>
    where
        I: IntoIterator<Item = J>,
        J: IntoIterator<Item = usize>,
    {
        let mut members = Vec::new();
        for list in lists {
            let mut mask = Subset::EMPTY;
            for e in list {
                if e >= MAX_GROUND {
                    return Err(Error::OutOfRange {
                        element: e,
                        ground: n,
                    });
                }
                mask = mask.insert(e);
            }
            members.push(mask);
        }
        CircuitFamily::new(n, members)
    }

    /// Ground-set size.
    #[inline]
    pub fn ground_size(&self) -> usize {
        self.n
    }

    /// Members in canonical order.
    #[inline]
    pub fn members(&self) -> &[Subset] {
        &self.members
    }

    /// Number of members.
    #[inline]
    pub fn len(&self) -> usize {
        self.members.len()
    }

    /// True if the family has no members (the free matroid's circuit set).
    #[inline]
    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    /// True if some member is contained in `s`.
    #[inline]
    pub fn has_member_inside(&self, s: Subset) -> bool {
        self.members.iter().any(|&c| c.is_subset_of(s))
    }

    /// Members contained in `s`.
    pub fn members_inside(&self, s: Subset) -> impl Iterator<Item = Subset> + '_ {
        self.members.iter().copied().filter(move |c| c.is_subset_of(s))
    }

    /// True if `s` itself is a member (binary search over the canonical
    /// order).
    pub fn contains(&self, s: Subset) -> bool {
        self.members
            .binary_search_by(|m| m.canonical_cmp(s))
            .is_ok()
    }
}

impl std::fmt::Debug for CircuitFamily {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "CircuitFamily(n={}, {:?})", self.n, self.members)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s(elems: &[usize]) -> Subset {
        Subset::from_elements(elems.iter().copied())
    }

    #[test]
    fn canonical_sorting_and_dedup() {
        let fam = CircuitFamily::new(
            4,
            vec![s(&[1, 2]), s(&[0, 1]), s(&[1, 2]), s(&[3])],
        )
        .unwrap();
        assert_eq!(fam.members(), &[s(&[3]), s(&[0, 1]), s(&[1, 2])][..]);
        assert_eq!(fam.len(), 3);
    }

    #[test]
    fn rejects_empty_member() {
        let err = CircuitFamily::new(3, vec![Subset::EMPTY]).unwrap_err();
        assert_eq!(err, Error::EmptyCircuit);
    }

    #[test]
    fn rejects_out_of_range() {
        let err = CircuitFamily::new(3, vec![s(&[0, 5])]).unwrap_err();
        assert_eq!(
            err,
            Error::OutOfRange {
                element: 5,
                ground: 3
            }
        );
    }

    #[test]
    fn rejects_ground_too_large() {
        let err = CircuitFamily::new(65, Vec::new()).unwrap_err();
        assert_eq!(err, Error::GroundTooLarge(65));
    }

    #[test]
    fn rejects_proper_containment() {
        let err = CircuitFamily::new(4, vec![s(&[0, 1, 2]), s(&[1, 2])]).unwrap_err();
        assert_eq!(
            err,
            Error::NotAntichain {
                inner: vec![1, 2],
                outer: vec![0, 1, 2]
            }
        );
    }

    #[test]
    fn empty_family_is_fine() {
        let fam = CircuitFamily::new(5, Vec::new()).unwrap();
        assert!(fam.is_empty());
        assert!(!fam.has_member_inside(Subset::full(5)));
    }

    #[test]
    fn member_containment_queries() {
        let fam = CircuitFamily::new(5, vec![s(&[0, 1]), s(&[2, 3, 4])]).unwrap();
        assert!(fam.has_member_inside(s(&[0, 1, 2])));
        assert!(!fam.has_member_inside(s(&[0, 2, 3])));
        let inside: Vec<Subset> = fam.members_inside(Subset::full(5)).collect();
        assert_eq!(inside.len(), 2);
    }

    #[test]
    fn exact_membership() {
        let fam =
            CircuitFamily::new(6, vec![s(&[0, 1]), s(&[2, 3, 4]), s(&[1, 5])]).unwrap();
        assert!(fam.contains(s(&[0, 1])));
        assert!(fam.contains(s(&[2, 3, 4])));
        assert!(!fam.contains(s(&[0, 1, 2])));
        assert!(!fam.contains(s(&[2, 3])));
        assert!(!fam.contains(Subset::EMPTY));
    }
}
