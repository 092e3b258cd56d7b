//! Predicates on matroids: symmetric strong circuit elimination, skew
//! circuit families, unbreakability, and the circuit-difference property.
//! Series-minor search lives in [`series_minor`]; clutter axiom systems in
//! [`axioms`].

pub mod axioms;
pub mod series_minor;

use crate::matroid::Matroid;
use crate::subset::Subset;
use crate::{Error, Result};

/// Default cap on the number of violation witnesses retained per check; the
/// total count is always reported.
pub const DEFAULT_WITNESS_CAP: usize = 100;

/// One elimination instance: circuits `c1`, `c2` with `e1 ∈ c1−c2`,
/// `e2 ∈ c2−c1`, `e ∈ c1∩c2`. When a resolving circuit exists it satisfies
/// `{e1,e2} ⊆ resolved ⊆ (c1∪c2)−e`; a violation carries `resolved: None`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SsceWitness {
    pub c1: Subset,
    pub c2: Subset,
    pub e1: usize,
    pub e2: usize,
    pub e: usize,
    pub resolved: Option<Subset>,
}

/// Result of [`ssce_check`]: verdict plus capped violation witnesses.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SsceReport {
    pub holds: bool,
    pub violations: Vec<SsceWitness>,
    /// Total violations found (the witness list may be truncated).
    pub violations_total: usize,
    /// Number of (pair, e1, e2, e) instances examined.
    pub instances_checked: usize,
}

/// The first circuit (in canonical order) with `{e1,e2} ⊆ C ⊆ (c1∪c2)−e`,
/// if any.
pub fn find_elimination_circuit(
    m: &Matroid,
    c1: Subset,
    c2: Subset,
    e1: usize,
    e2: usize,
    e: usize,
) -> Option<Subset> {
    let window = c1.union(c2).remove(e);
    let pair = Subset::from_elements([e1, e2]);
    m.circuits()
        .members_inside(window)
        .find(|c3| pair.is_subset_of(*c3))
}

/// Symmetric strong circuit elimination: for every pair of distinct
/// intersecting circuits and every choice of `e1 ∈ C1−C2`, `e2 ∈ C2−C1`,
/// `e ∈ C1∩C2`, some circuit `C3` satisfies `{e1,e2} ⊆ C3 ⊆ (C1∪C2)−e`.
/// Retains up to [`DEFAULT_WITNESS_CAP`] violation witnesses.
pub fn ssce_check(m: &Matroid) -> SsceReport {
    ssce_check_capped(m, DEFAULT_WITNESS_CAP)
}

/// [`ssce_check`] with an explicit cap on retained witnesses.
pub fn ssce_check_capped(m: &Matroid, cap: usize) -> SsceReport {
    let members = m.circuits().members();
    let mut violations = Vec::new();
    let mut violations_total = 0usize;
    let mut instances_checked = 0usize;
    for (i, &c1) in members.iter().enumerate() {
        for &c2 in &members[i + 1..] {
            let meet = c1.intersection(c2);
            if meet.is_empty() {
                continue;
            }
            let union = c1.union(c2);
            // Candidate resolvents for every instance of this pair live in
            // the union; prefilter once.
            let inside: Vec<Subset> = m.circuits().members_inside(union).collect();
            for e1 in c1.difference(c2).iter() {
                for e2 in c2.difference(c1).iter() {
                    let pair = Subset::from_elements([e1, e2]);
                    for e in meet.iter() {
                        instances_checked += 1;
                        let window = union.remove(e);
                        let ok = inside
                            .iter()
                            .any(|c3| pair.is_subset_of(*c3) && c3.is_subset_of(window));
                        if !ok {
                            violations_total += 1;
                            if violations.len() < cap {
                                violations.push(SsceWitness {
                                    c1,
                                    c2,
                                    e1,
                                    e2,
                                    e,
                                    resolved: None,
                                });
                            }
                        }
                    }
                }
            }
        }
    }
    SsceReport {
        holds: violations_total == 0,
        violations,
        violations_total,
        instances_checked,
    }
}

/// A family of `k ≥ 1` circuits, pairwise disjoint, whose union restricts to
/// the direct sum of the individual restrictions (equivalently, rank is
/// additive over the family; equivalently, every circuit inside the union
/// lies within a single member).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SkewFamily {
    circuits: Vec<Subset>,
}

impl SkewFamily {
    /// The member circuits, in canonical order.
    pub fn circuits(&self) -> &[Subset] {
        &self.circuits
    }

    /// Number of members.
    pub fn len(&self) -> usize {
        self.circuits.len()
    }

    /// Always false: families are non-empty by construction.
    pub fn is_empty(&self) -> bool {
        self.circuits.is_empty()
    }

    /// Union of the members.
    pub fn union(&self) -> Subset {
        self.circuits
            .iter()
            .fold(Subset::EMPTY, |acc, c| acc.union(*c))
    }
}

fn rank_of_circuit(c: Subset) -> usize {
    c.len() - 1
}

/// All unordered pairs of distinct circuits whose union has rank equal to
/// the sum of their ranks. Such a pair is automatically disjoint.
pub fn skew_circuit_pairs(m: &Matroid) -> Vec<SkewFamily> {
    let members = m.circuits().members();
    let mut out = Vec::new();
    for (i, &c1) in members.iter().enumerate() {
        for &c2 in &members[i + 1..] {
            if !c1.is_disjoint(c2) {
                continue;
            }
            if m.rank(c1.union(c2)) == rank_of_circuit(c1) + rank_of_circuit(c2) {
                out.push(SkewFamily {
                    circuits: vec![c1, c2],
                });
            }
        }
    }
    out
}

/// Search for `k` circuits that are pairwise disjoint and whose union
/// restricts to the direct sum of the restrictions to the members. Returns
/// the first family found (depth-first over ascending circuit indices).
pub fn has_k_skew(m: &Matroid, k: usize) -> Result<Option<SkewFamily>> {
    if k < 1 {
        return Err(Error::InvalidParams(format!(
            "skew family size must be at least 1, got {k}"
        )));
    }
    let members = m.circuits().members();
    if members.len() < k {
        return Ok(None);
    }
    let mut chosen: Vec<Subset> = Vec::with_capacity(k);
    let found = extend_skew(m, members, 0, Subset::EMPTY, &mut chosen, k);
    if found {
        debug_assert_eq!(
            m.rank(chosen.iter().fold(Subset::EMPTY, |a, c| a.union(*c))),
            chosen.iter().map(|c| rank_of_circuit(*c)).sum::<usize>(),
            "direct-sum containment and rank additivity must agree"
        );
        Ok(Some(SkewFamily { circuits: chosen }))
    } else {
        Ok(None)
    }
}

fn extend_skew(
    m: &Matroid,
    members: &[Subset],
    start: usize,
    union: Subset,
    chosen: &mut Vec<Subset>,
    k: usize,
) -> bool {
    if chosen.len() == k {
        return true;
    }
    // Not enough circuits left to fill the family.
    let needed = k - chosen.len();
    if members.len() - start < needed {
        return false;
    }
    for (offset, &c) in members[start..].iter().enumerate() {
        if !c.is_disjoint(union) {
            continue;
        }
        // Every circuit inside the enlarged union must stay within one
        // member; new offenders necessarily meet `c`.
        let enlarged = union.union(c);
        let splits_cleanly = m
            .circuits()
            .members_inside(enlarged)
            .all(|d| d.is_subset_of(c) || d.is_subset_of(union));
        if !splits_cleanly {
            continue;
        }
        chosen.push(c);
        if extend_skew(m, members, start + offset + 1, enlarged, chosen, k) {
            return true;
        }
        chosen.pop();
    }
    false
}

/// Unbreakable: connected, and contracting any flat other than the full
/// ground set leaves a connected matroid.
pub fn is_unbreakable(m: &Matroid) -> bool {
    if !m.is_connected() {
        return false;
    }
    let full = m.full_set();
    m.flats()
        .to_vec()
        .into_iter()
        .filter(|&f| f != full)
        .all(|f| m.contract(f).matroid.is_connected())
}

/// Circuit-difference: the symmetric difference of any two distinct
/// intersecting circuits is itself a circuit.
pub fn is_circuit_difference(m: &Matroid) -> bool {
    let members = m.circuits().members();
    for (i, &c1) in members.iter().enumerate() {
        for &c2 in &members[i + 1..] {
            if c1.intersection(c2).is_empty() {
                continue;
            }
            if !m.circuits().contains(c1.symmetric_difference(c2)) {
                return false;
            }
        }
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::construct::named::{named, NamedId};
    use crate::construct::uniform;

    fn s(elems: &[usize]) -> Subset {
        Subset::from_elements(elems.iter().copied())
    }

    fn get(id: NamedId) -> Matroid {
        named(id).unwrap().matroid
    }

    #[test]
    fn ssce_fails_on_n5_with_expected_witness() {
        let report = ssce_check(&get(NamedId::N5));
        assert!(!report.holds);
        assert!(report.violations_total > 0);
        // The instance C1={0,1,4}, C2={0,2,3}, e1=1, e2=3, e=0 fails: the
        // only circuits inside {1,2,3,4} are {1,2} and {3,4}.
        let hit = report.violations.iter().any(|w| {
            let (a, b) = (w.c1.min_element(), w.c2.min_element());
            a == Some(0) && b == Some(0) && w.e == 0 && w.resolved.is_none()
        });
        assert!(hit, "all N5 violations pass through the glue point 0");
        assert!(
            find_elimination_circuit(&get(NamedId::N5), s(&[0, 1, 4]), s(&[0, 2, 3]), 1, 3, 0)
                .is_none()
        );
    }

    #[test]
    fn ssce_holds_on_mk4_and_u24() {
        let mk4 = ssce_check(&get(NamedId::MK4));
        assert!(mk4.holds);
        assert!(mk4.violations.is_empty());
        assert!(mk4.instances_checked > 0);
        assert!(ssce_check(&uniform(2, 4).unwrap()).holds);
    }

    #[test]
    fn ssce_witness_cap_truncates_but_counts() {
        let m = get(NamedId::N5);
        let full = ssce_check(&m);
        let capped = ssce_check_capped(&m, 1);
        assert_eq!(capped.violations.len(), 1);
        assert_eq!(capped.violations_total, full.violations_total);
        assert_eq!(capped.instances_checked, full.instances_checked);
    }

    #[test]
    fn ssce_invariant_under_relabeling() {
        let m = get(NamedId::N5);
        let perm = [3, 0, 4, 2, 1];
        let relabeled = m.relabeled(&perm).unwrap();
        let a = ssce_check(&m);
        let b = ssce_check(&relabeled);
        assert_eq!(a.holds, b.holds);
        assert_eq!(a.violations_total, b.violations_total);
        assert_eq!(a.instances_checked, b.instances_checked);
    }

    #[test]
    fn find_elimination_circuit_respects_window() {
        // In U_{2,4}, circuits {0,1,2} and {0,1,3}: e1=2, e2=3, e=0 →
        // {1,2,3} resolves; e=1 → {0,2,3} resolves.
        let m = uniform(2, 4).unwrap();
        assert_eq!(
            find_elimination_circuit(&m, s(&[0, 1, 2]), s(&[0, 1, 3]), 2, 3, 0),
            Some(s(&[1, 2, 3]))
        );
        assert_eq!(
            find_elimination_circuit(&m, s(&[0, 1, 2]), s(&[0, 1, 3]), 2, 3, 1),
            Some(s(&[0, 2, 3]))
        );
    }

    #[test]
    fn n5_has_exactly_one_skew_pair() {
        let pairs = skew_circuit_pairs(&get(NamedId::N5));
        assert_eq!(pairs.len(), 1);
        assert_eq!(pairs[0].circuits(), &[s(&[1, 2]), s(&[3, 4])]);
        assert_eq!(pairs[0].union(), s(&[1, 2, 3, 4]));
    }

    #[test]
    fn mk4_has_no_skew_pairs() {
        assert!(skew_circuit_pairs(&get(NamedId::MK4)).is_empty());
    }

    #[test]
    fn l1_skew_structure() {
        // The three 2-circuits of L:1 are pairwise skew and jointly skew.
        let l1 = get(NamedId::L(1));
        let pairs = skew_circuit_pairs(&l1);
        assert_eq!(pairs.len(), 3);
        for p in &pairs {
            assert_eq!(p.circuits()[0].len(), 2);
            assert_eq!(p.circuits()[1].len(), 2);
        }
        let triple = has_k_skew(&l1, 3).unwrap().expect("three skew circuits");
        assert_eq!(
            triple.circuits(),
            &[s(&[1, 2]), s(&[3, 4]), s(&[5, 6])]
        );
        assert!(has_k_skew(&l1, 4).unwrap().is_none());
    }

    #[test]
    fn n5_has_no_three_skew() {
        assert!(has_k_skew(&get(NamedId::N5), 3).unwrap().is_none());
        assert!(has_k_skew(&get(NamedId::N5), 2).unwrap().is_some());
    }

    #[test]
    fn k_skew_edge_cases() {
        assert!(has_k_skew(&get(NamedId::N5), 0).is_err());
        // Any matroid with at least one circuit admits a 1-family.
        let one = has_k_skew(&uniform(1, 2).unwrap(), 1).unwrap().unwrap();
        assert_eq!(one.circuits(), &[s(&[0, 1])]);
        assert!(!one.is_empty());
        // A free matroid has none.
        assert!(has_k_skew(&Matroid::free(3).unwrap(), 1).unwrap().is_none());
    }

    #[test]
    fn pair_tests_agree() {
        // Rank additivity (pair scan) and direct-sum containment (family
        // search) agree on every pair, over a spread of named matroids.
        for id in [
            NamedId::N5,
            NamedId::MK4,
            NamedId::K23,
            NamedId::L(1),
            NamedId::G(3),
            NamedId::U { r: 2, n: 5 },
        ] {
            let m = get(id);
            let members = m.circuits().members();
            let by_rank: Vec<(Subset, Subset)> = skew_circuit_pairs(&m)
                .into_iter()
                .map(|f| (f.circuits()[0], f.circuits()[1]))
                .collect();
            let mut by_containment = Vec::new();
            for (i, &c1) in members.iter().enumerate() {
                for &c2 in &members[i + 1..] {
                    if !c1.is_disjoint(c2) {
                        continue;
                    }
                    let u = c1.union(c2);
                    if m.circuits()
                        .members_inside(u)
                        .all(|d| d.is_subset_of(c1) || d.is_subset_of(c2))
                    {
                        by_containment.push((c1, c2));
                    }
                }
            }
            assert_eq!(by_rank, by_containment, "{id}");
        }
    }

    #[test]
    fn unbreakable_examples() {
        assert!(is_unbreakable(&get(NamedId::MK4)));
        assert!(is_unbreakable(&uniform(2, 4).unwrap()));
        assert!(!is_unbreakable(&get(NamedId::N5).dual()));
        // Disconnected input fails immediately.
        assert!(!is_unbreakable(
            &crate::construct::direct_sum(&uniform(1, 2).unwrap(), &uniform(1, 2).unwrap())
                .unwrap()
        ));
        // Small conventions: the empty matroid and a single coloop are
        // connected with no proper-flat obstruction.
        assert!(is_unbreakable(&Matroid::free(0).unwrap()));
        assert!(is_unbreakable(&Matroid::free(1).unwrap()));
    }

    #[test]
    fn circuit_difference_examples() {
        assert!(is_circuit_difference(&get(NamedId::MK4)));
        // N5: {0,1,4} Δ {0,2,3} = {1,2,3,4} is not a circuit.
        assert!(!is_circuit_difference(&get(NamedId::N5)));
        // U_{2,4}: {0,1,2} Δ {0,1,3} = {2,3} is not a circuit.
        assert!(!is_circuit_difference(&uniform(2, 4).unwrap()));
        // Disjoint-only circuit families pass vacuously.
        assert!(is_circuit_difference(
            &crate::construct::direct_sum(&uniform(1, 2).unwrap(), &uniform(1, 2).unwrap())
                .unwrap()
        ));
    }
}
