//! Elimination axiom systems for clutters (antichains of nonempty sets).
//! Five systems are exposed: plain elimination, strong elimination, the
//! double-elimination existence form, its with-uniqueness strengthening, and
//! a weakened variant whose chosen elements need not avoid the other circuit.

use std::fmt;
use std::str::FromStr;

use crate::family::CircuitFamily;
use crate::props::DEFAULT_WITNESS_CAP;
use crate::subset::Subset;
use crate::{Error, Result};

/// Which elimination axiom to check.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum AxiomSystem {
    /// For every distinct intersecting pair and `e` in the intersection,
    /// some member lies inside `(C1 ∪ C2) − e`.
    C3,
    /// Additionally pins an element `f ∈ C1 − C2` that the eliminating
    /// member must contain.
    C3Strong,
    /// Double elimination: for `e1 ∈ C1−C2`, `e2 ∈ C2−C1`, `e ∈ C1∩C2`,
    /// if `(C1−e1) ∪ (C2−e2)` contains no member, then some member `C3`
    /// satisfies `{e1,e2} ⊆ C3 ⊆ (C1∪C2)−e`.
    C3pp,
    /// [`AxiomSystem::C3pp`] plus: that member is the *only* member inside
    /// `(C1∪C2)−e`.
    C3ppUnique,
    /// The weakened variant: only `e1 ∈ C1` and `e2 ∈ C2` are required
    /// (with `e, e1, e2` pairwise distinct); the premise is evaluated as
    /// `(C1∪C2)−{e1,e2}` containing no member.
    C3ppWeak,
}

impl fmt::Display for AxiomSystem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let token = match self {
            AxiomSystem::C3 => "C3",
            AxiomSystem::C3Strong => "C3-strong",
            AxiomSystem::C3pp => "C3pp",
            AxiomSystem::C3ppUnique => "C3pp-unique",
            AxiomSystem::C3ppWeak => "C3pp-weak",
        };
        write!(f, "{token}")
    }
}

impl FromStr for AxiomSystem {
    type Err = Error;

    fn from_str(s: &str) -> Result<AxiomSystem> {
        match s.trim().to_ascii_lowercase().as_str() {
            "c3" => Ok(AxiomSystem::C3),
            "c3-strong" | "c3s" => Ok(AxiomSystem::C3Strong),
            "c3pp" => Ok(AxiomSystem::C3pp),
            "c3pp-unique" => Ok(AxiomSystem::C3ppUnique),
            "c3pp-weak" => Ok(AxiomSystem::C3ppWeak),
            _ => Err(Error::InvalidParams(format!(
                "unknown axiom system '{s}' (expected c3, c3s/c3-strong, c3pp, c3pp-unique, or c3pp-weak)"
            ))),
        }
    }
}

/// One failing instance of an axiom; optional fields follow the quantifier
/// shape of the system (`e1` doubles as the pinned `f` of strong
/// elimination).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AxiomViolation {
    pub system: AxiomSystem,
    pub c1: Subset,
    pub c2: Subset,
    pub e1: Option<usize>,
    pub e2: Option<usize>,
    pub e: Option<usize>,
    pub note: String,
}

/// Result of [`axiom_check`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AxiomReport {
    pub system: AxiomSystem,
    pub holds: bool,
    pub violations: Vec<AxiomViolation>,
    /// Total violations found (the witness list may be truncated).
    pub violations_total: usize,
    pub instances_checked: usize,
}

/// Constant-time "does `s` contain a member?" oracle for ground sets of at
/// most 6 elements: bit `s` of the table marks dependence of the subset with
/// mask `s`, filled by a superset (zeta) transform over the members.
#[derive(Clone, Copy, Debug)]
pub(crate) struct DependencyTable(u64);

/// Bit positions (subset masks) whose index contains dimension `d`.
const DIM_MASKS: [u64; 6] = [
    0xAAAA_AAAA_AAAA_AAAA,
    0xCCCC_CCCC_CCCC_CCCC,
    0xF0F0_F0F0_F0F0_F0F0,
    0xFF00_FF00_FF00_FF00,
    0xFFFF_0000_FFFF_0000,
    0xFFFF_FFFF_0000_0000,
];

impl DependencyTable {
    /// Build the table, or `None` when the ground set is too large.
    pub(crate) fn new(family: &CircuitFamily) -> Option<DependencyTable> {
        let n = family.ground_size();
        if n > 6 {
            return None;
        }
        let mut table = 0u64;
        for c in family.members() {
            table |= 1u64 << c.0;
        }
        for (d, dim_mask) in DIM_MASKS.iter().enumerate().take(n) {
            table |= (table & !dim_mask) << (1u64 << d);
        }
        Some(DependencyTable(table))
    }

    /// True if some member is contained in `s`.
    pub(crate) fn has_member_inside(self, s: Subset) -> bool {
        debug_assert!(s.0 < 64);
        (self.0 >> s.0) & 1 == 1
    }
}

enum InsideOracle<'a> {
    Table(DependencyTable),
    Generic(&'a CircuitFamily),
}

impl InsideOracle<'_> {
    fn has_member_inside(&self, s: Subset) -> bool {
        match self {
            InsideOracle::Table(t) => t.has_member_inside(s),
            InsideOracle::Generic(f) => f.has_member_inside(s),
        }
    }
}

/// Check one axiom system over a clutter, retaining up to
/// [`DEFAULT_WITNESS_CAP`] violation witnesses.
pub fn axiom_check(family: &CircuitFamily, system: AxiomSystem) -> AxiomReport {
    axiom_check_capped(family, system, DEFAULT_WITNESS_CAP)
}

/// [`axiom_check`] with an explicit witness cap.
pub fn axiom_check_capped(
    family: &CircuitFamily,
    system: AxiomSystem,
    cap: usize,
) -> AxiomReport {
    let oracle = match DependencyTable::new(family) {
        Some(t) => InsideOracle::Table(t),
        None => InsideOracle::Generic(family),
    };
    run_check(family, system, cap, &oracle)
}

/// The generic-oracle path, regardless of ground size (exposed for
/// cross-checking the table fast path).
#[cfg_attr(not(test), allow(dead_code))]
pub(crate) fn axiom_check_generic(
    family: &CircuitFamily,
    system: AxiomSystem,
    cap: usize,
) -> AxiomReport {
    run_check(family, system, cap, &InsideOracle::Generic(family))
}

struct Recorder {
    violations: Vec<AxiomViolation>,
    total: usize,
    cap: usize,
    instances: usize,
}

impl Recorder {
    fn record(&mut self, v: AxiomViolation) {
        self.total += 1;
        if self.violations.len() < self.cap {
            self.violations.push(v);
        }
    }
}

fn run_check(
    family: &CircuitFamily,
    system: AxiomSystem,
    cap: usize,
    oracle: &InsideOracle<'_>,
) -> AxiomReport {
    let mut rec = Recorder {
        violations: Vec::new(),
        total: 0,
        cap,
        instances: 0,
    };
    match system {
        AxiomSystem::C3 => check_c3(family, oracle, &mut rec),
        AxiomSystem::C3Strong => check_c3_strong(family, &mut rec),
        AxiomSystem::C3pp | AxiomSystem::C3ppUnique => {
            check_c3pp(family, oracle, system, &mut rec)
        }
        AxiomSystem::C3ppWeak => check_c3pp_weak(family, oracle, &mut rec),
    }
    AxiomReport {
        system,
        holds: rec.total == 0,
        violations: rec.violations,
        violations_total: rec.total,
        instances_checked: rec.instances,
    }
}

fn check_c3(family: &CircuitFamily, oracle: &InsideOracle<'_>, rec: &mut Recorder) {
    let members = family.members();
    for (i, &c1) in members.iter().enumerate() {
        for &c2 in &members[i + 1..] {
            let meet = c1.intersection(c2);
            let union = c1.union(c2);
            for e in meet.iter() {
                rec.instances += 1;
                if !oracle.has_member_inside(union.remove(e)) {
                    rec.record(AxiomViolation {
                        system: AxiomSystem::C3,
                        c1,
                        c2,
                        e1: None,
                        e2: None,
                        e: Some(e),
                        note: "no member inside the union minus e".to_string(),
                    });
                }
            }
        }
    }
}

fn check_c3_strong(family: &CircuitFamily, rec: &mut Recorder) {
    let members = family.members();
    for &c1 in members {
        for &c2 in members {
            if c1 == c2 {
                continue;
            }
            let meet = c1.intersection(c2);
            if meet.is_empty() {
                continue;
            }
            let union = c1.union(c2);
            let inside: Vec<Subset> = family.members_inside(union).collect();
            for e in meet.iter() {
                let window = union.remove(e);
                for f in c1.difference(c2).iter() {
                    rec.instances += 1;
                    let ok = inside
                        .iter()
                        .any(|c3| c3.contains(f) && c3.is_subset_of(window));
                    if !ok {
                        rec.record(AxiomViolation {
                            system: AxiomSystem::C3Strong,
                            c1,
                            c2,
                            e1: Some(f),
                            e2: None,
                            e: Some(e),
                            note: "no member through f inside the union minus e".to_string(),
                        });
                    }
                }
            }
        }
    }
}

fn check_c3pp(
    family: &CircuitFamily,
    oracle: &InsideOracle<'_>,
    system: AxiomSystem,
    rec: &mut Recorder,
) {
    let members = family.members();
    for (i, &c1) in members.iter().enumerate() {
        for &c2 in &members[i + 1..] {
            let meet = c1.intersection(c2);
            if meet.is_empty() {
                continue;
            }
            let union = c1.union(c2);
            let inside: Vec<Subset> = family.members_inside(union).collect();
            for e1 in c1.difference(c2).iter() {
                for e2 in c2.difference(c1).iter() {
                    let premise_set = c1.remove(e1).union(c2.remove(e2));
                    let premise = !oracle.has_member_inside(premise_set);
                    let pair = Subset::from_elements([e1, e2]);
                    for e in meet.iter() {
                        rec.instances += 1;
                        if !premise {
                            continue;
                        }
                        let window = union.remove(e);
                        match system {
                            AxiomSystem::C3pp => {
                                let ok = inside
                                    .iter()
                                    .any(|c3| pair.is_subset_of(*c3) && c3.is_subset_of(window));
                                if !ok {
                                    rec.record(AxiomViolation {
                                        system,
                                        c1,
                                        c2,
                                        e1: Some(e1),
                                        e2: Some(e2),
                                        e: Some(e),
                                        note: "premise holds but no member contains {e1,e2} \
                                               inside the union minus e"
                                            .to_string(),
                                    });
                                }
                            }
                            AxiomSystem::C3ppUnique => {
                                let found: Vec<&Subset> = inside
                                    .iter()
                                    .filter(|c3| c3.is_subset_of(window))
                                    .collect();
                                let ok = found.len() == 1 && pair.is_subset_of(*found[0]);
                                if !ok {
                                    let note = if found.is_empty() {
                                        "premise holds but no member lies inside the union \
                                         minus e"
                                            .to_string()
                                    } else if found.len() > 1 {
                                        format!(
                                            "premise holds but {} members lie inside the union \
                                             minus e, expected exactly one",
                                            found.len()
                                        )
                                    } else {
                                        "premise holds but the unique member inside omits e1 \
                                         or e2"
                                            .to_string()
                                    };
                                    rec.record(AxiomViolation {
                                        system,
                                        c1,
                                        c2,
                                        e1: Some(e1),
                                        e2: Some(e2),
                                        e: Some(e),
                                        note,
                                    });
                                }
                            }
                            _ => unreachable!("only the double-elimination systems reach here"),
                        }
                    }
                }
            }
        }
    }
}

fn check_c3pp_weak(family: &CircuitFamily, oracle: &InsideOracle<'_>, rec: &mut Recorder) {
    let members = family.members();
    for (i, &c1) in members.iter().enumerate() {
        for &c2 in &members[i + 1..] {
            let meet = c1.intersection(c2);
            if meet.is_empty() {
                continue;
            }
            let union = c1.union(c2);
            let inside: Vec<Subset> = family.members_inside(union).collect();
            for e1 in c1.iter() {
                for e2 in c2.iter() {
                    if e1 == e2 {
                        continue;
                    }
                    // When both elements lie in both circuits the swapped
                    // assignment describes the same instance; keep one.
                    if e1 > e2 && c2.contains(e1) && c1.contains(e2) {
                        continue;
                    }
                    let pair = Subset::from_elements([e1, e2]);
                    let premise = !oracle.has_member_inside(union.difference(pair));
                    for e in meet.iter() {
                        if e == e1 || e == e2 {
                            continue;
                        }
                        rec.instances += 1;
                        if !premise {
                            continue;
                        }
                        let window = union.remove(e);
                        let ok = inside
                            .iter()
                            .any(|c3| pair.is_subset_of(*c3) && c3.is_subset_of(window));
                        if !ok {
                            let literal = c1.remove(e1).union(c2.remove(e2));
                            let literal_dependent = oracle.has_member_inside(literal);
                            rec.record(AxiomViolation {
                                system: AxiomSystem::C3ppWeak,
                                c1,
                                c2,
                                e1: Some(e1),
                                e2: Some(e2),
                                e: Some(e),
                                note: format!(
                                    "premise holds but no member contains {{e1,e2}} inside the \
                                     union minus e; literal set (C1-e1)∪(C2-e2) {} a member",
                                    if literal_dependent {
                                        "contains"
                                    } else {
                                        "does not contain"
                                    }
                                ),
                            });
                        }
                    }
                }
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::construct::named::{named, NamedId};
    use crate::construct::uniform;
    use crate::matroid::Matroid;

    fn s(elems: &[usize]) -> Subset {
        Subset::from_elements(elems.iter().copied())
    }

    fn circuits(m: &Matroid) -> CircuitFamily {
        m.circuits().clone()
    }

    #[test]
    fn axiom_tokens_round_trip() {
        for sys in [
            AxiomSystem::C3,
            AxiomSystem::C3Strong,
            AxiomSystem::C3pp,
            AxiomSystem::C3ppUnique,
            AxiomSystem::C3ppWeak,
        ] {
            assert_eq!(sys.to_string().parse::<AxiomSystem>().unwrap(), sys);
        }
        assert_eq!("C3PP-UNIQUE".parse::<AxiomSystem>().unwrap(), AxiomSystem::C3ppUnique);
        assert!("c4".parse::<AxiomSystem>().is_err());
    }

    #[test]
    fn matroid_circuits_pass_the_matroid_systems() {
        for id in [NamedId::N5, NamedId::MK4, NamedId::K23, NamedId::L(2)] {
            let fam = circuits(&named(id).unwrap().matroid);
            for sys in [AxiomSystem::C3, AxiomSystem::C3Strong, AxiomSystem::C3ppUnique] {
                let report = axiom_check(&fam, sys);
                assert!(report.holds, "{id} should satisfy {sys}");
                assert!(report.violations.is_empty());
            }
        }
    }

    #[test]
    fn u23_passes_unique_form() {
        let fam = circuits(&uniform(2, 3).unwrap());
        assert!(axiom_check(&fam, AxiomSystem::C3ppUnique).holds);
    }

    #[test]
    fn two_overlapping_pairs_fail_double_elimination() {
        // {{1,2},{1,3}} on 3 elements: e1=2, e2=3, e=1; the premise holds
        // ((C1-2)∪(C2-3) = {1}) but no member lies inside {2,3}.
        let fam = CircuitFamily::new(4, vec![s(&[1, 2]), s(&[1, 3])]).unwrap();
        let report = axiom_check(&fam, AxiomSystem::C3pp);
        assert!(!report.holds);
        assert_eq!(report.violations_total, 1);
        let v = &report.violations[0];
        assert_eq!((v.e1, v.e2, v.e), (Some(2), Some(3), Some(1)));
        // It fails plain elimination too (not a matroid circuit set).
        assert!(!axiom_check(&fam, AxiomSystem::C3).holds);
    }

    #[test]
    fn k23_fails_weak_variant_with_expected_witness() {
        let k23 = named(NamedId::K23).unwrap();
        let fam = circuits(&k23.matroid);
        let report = axiom_check(&fam, AxiomSystem::C3ppWeak);
        assert!(!report.holds);
        // The documented witness: C1 = {e1,a,e,e2} = {0,1,2,3},
        // C2 = {e,e2,b,c} = {2,3,4,5}, with chosen elements e1=0, e2=3, e=2.
        let c1 = s(&[0, 1, 2, 3]);
        let c2 = s(&[2, 3, 4, 5]);
        let hit = report.violations.iter().find(|v| {
            v.c1 == c1 && v.c2 == c2 && v.e1 == Some(0) && v.e2 == Some(3) && v.e == Some(2)
        });
        let hit = hit.expect("the documented weak-variant witness is reported");
        // The literal premise formula contains C2 itself, which the note
        // records.
        assert!(hit.note.contains("contains a member"), "note: {}", hit.note);
        // The strict variant holds on K23 (it is a matroid).
        assert!(axiom_check(&fam, AxiomSystem::C3pp).holds);
    }

    #[test]
    fn empty_and_singleton_families_hold_vacuously() {
        let empty = CircuitFamily::new(3, Vec::new()).unwrap();
        let single = CircuitFamily::new(3, vec![s(&[0, 1])]).unwrap();
        for sys in [
            AxiomSystem::C3,
            AxiomSystem::C3Strong,
            AxiomSystem::C3pp,
            AxiomSystem::C3ppUnique,
            AxiomSystem::C3ppWeak,
        ] {
            for fam in [&empty, &single] {
                let report = axiom_check(fam, sys);
                assert!(report.holds);
                assert_eq!(report.instances_checked, 0);
            }
        }
    }

    #[test]
    fn violation_caps_truncate_but_count() {
        // A clutter with many double-elimination failures: disjoint support
        // pairs overlapping in one point.
        let fam = CircuitFamily::new(
            6,
            vec![s(&[0, 1]), s(&[0, 2]), s(&[0, 3]), s(&[0, 4]), s(&[0, 5])],
        )
        .unwrap();
        let full = axiom_check(&fam, AxiomSystem::C3);
        assert!(!full.holds);
        assert!(full.violations_total > 2);
        let capped = axiom_check_capped(&fam, AxiomSystem::C3, 2);
        assert_eq!(capped.violations.len(), 2);
        assert_eq!(capped.violations_total, full.violations_total);
    }

    #[test]
    fn dependency_table_matches_generic_membership() {
        let fam = CircuitFamily::new(5, vec![s(&[0, 1]), s(&[2, 3, 4]), s(&[1, 4])]).unwrap();
        let table = DependencyTable::new(&fam).unwrap();
        for mask in 0u64..32 {
            let sub = Subset(mask);
            assert_eq!(
                table.has_member_inside(sub),
                fam.has_member_inside(sub),
                "mask {mask}"
            );
        }
    }

    #[test]
    fn table_and_generic_paths_agree_on_all_small_clutters() {
        // Enumerate every antichain of nonempty subsets of a 3-element
        // ground set and compare the fast and generic paths on each system.
        let n = 3usize;
        let subsets: Vec<Subset> = crate::subset::all_subsets(n)
            .filter(|s| !s.is_empty())
            .collect();
        let mut families = Vec::new();
        for mask in 0u32..(1 << subsets.len()) {
            let chosen: Vec<Subset> = subsets
                .iter()
                .enumerate()
                .filter(|(i, _)| mask >> i & 1 == 1)
                .map(|(_, s)| *s)
                .collect();
            let antichain = chosen.iter().all(|a| {
                chosen
                    .iter()
                    .all(|b| a == b || (!a.is_subset_of(*b) && !b.is_subset_of(*a)))
            });
            if antichain {
                families.push(CircuitFamily::new(n, chosen).unwrap());
            }
        }
        assert_eq!(families.len(), 19, "antichain count on 3 elements");
        for fam in &families {
            for sys in [
                AxiomSystem::C3,
                AxiomSystem::C3Strong,
                AxiomSystem::C3pp,
                AxiomSystem::C3ppUnique,
                AxiomSystem::C3ppWeak,
            ] {
                let fast = axiom_check(fam, sys);
                let slow = axiom_check_generic(fam, sys, DEFAULT_WITNESS_CAP);
                assert_eq!(fast, slow, "family {fam:?} system {sys}");
            }
        }
    }
}
