//! Circuit-based matroids with exact oracles: rank, closure, flats,
//! connectivity, duality, minors, series classes, isomorphism, binarity.

use std::cmp::Ordering;
use std::collections::HashSet;
use std::fmt;
use std::sync::OnceLock;

use crate::canonical::{compute_canonical_key, CanonicalKey};
use crate::error::{Error, Result};
use crate::family::CircuitFamily;
use crate::subset::{subsets_of_size, Subset};

/// Largest ground size for which the full `2^n`-entry rank table is built.
/// Above this, rank queries fall back to the greedy independence oracle.
pub const RANK_TABLE_MAX_N: usize = 16;

/// A matroid given by its circuit family. Construction validates the weak
/// circuit elimination axiom, so every value of this type is a real matroid.
///
/// Values are immutable; all caches are filled lazily behind [`OnceLock`]s
/// and never change observable behavior.
pub struct Matroid {
    n: usize,
    circuits: CircuitFamily,
    /// Circuit masks through each element (for greedy rank and connectivity).
    by_element: Vec<Vec<u64>>,
    rank_full: usize,
    rank_table: OnceLock<Vec<u8>>,
    flats_cache: OnceLock<Vec<Subset>>,
    connected_cache: OnceLock<bool>,
    cocircuits_cache: OnceLock<Vec<Subset>>,
    canonical_cache: OnceLock<CanonicalKey>,
}

impl Clone for Matroid {
    fn clone(&self) -> Self {
        Matroid {
            n: self.n,
            circuits: self.circuits.clone(),
            by_element: self.by_element.clone(),
            rank_full: self.rank_full,
            rank_table: self.rank_table.clone(),
            flats_cache: self.flats_cache.clone(),
            connected_cache: self.connected_cache.clone(),
            cocircuits_cache: self.cocircuits_cache.clone(),
            canonical_cache: self.canonical_cache.clone(),
        }
    }
}

impl PartialEq for Matroid {
    fn eq(&self, other: &Self) -> bool {
        self.n == other.n && self.circuits == other.circuits
    }
}

impl Eq for Matroid {}

impl std::hash::Hash for Matroid {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.n.hash(state);
        for c in self.circuits.members() {
            c.0.hash(state);
        }
    }
}

impl fmt::Debug for Matroid {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Matroid(n={}, circuits={:?})", self.n, self.circuits.members())
    }
}

impl Matroid {
    /// Build a matroid from a validated antichain, checking weak circuit
    /// elimination: for distinct members `C1`, `C2` and `e ∈ C1∩C2`, some
    /// member lies inside `(C1∪C2)−e`.
    pub fn new(circuits: CircuitFamily) -> Result<Matroid> {
        if let Some((c1, c2, e)) = weak_elimination_violation(&circuits) {
            return Err(Error::Elimination {
                c1: c1.elements(),
                c2: c2.elements(),
                e,
            });
        }
        Ok(Matroid::new_unchecked(circuits))
    }

    /// Build without re-checking elimination. For internal construction of
    /// families already known to be matroidal (minors, duals, connections).
    pub(crate) fn new_unchecked(circuits: CircuitFamily) -> Matroid {
        let n = circuits.ground_size();
        let mut by_element: Vec<Vec<u64>> = vec![Vec::new(); n];
        for &c in circuits.members() {
            for e in c.iter() {
                by_element[e].push(c.0);
            }
        }
        let mut m = Matroid {
            n,
            circuits,
            by_element,
            rank_full: 0,
            rank_table: OnceLock::new(),
            flats_cache: OnceLock::new(),
            connected_cache: OnceLock::new(),
            cocircuits_cache: OnceLock::new(),
            canonical_cache: OnceLock::new(),
        };
        m.rank_full = m.rank_greedy(m.full_set());
        m
    }

    /// Convenience constructor from circuit element lists.
    pub fn from_circuit_lists<I, J>(n: usize, lists: I) -> Result<Matroid>
    where
        I: IntoIterator<Item = J>,
        J: IntoIterator<Item = usize>,
    {
        Matroid::new(CircuitFamily::from_lists(n, lists)?)
    }

    /// The free matroid on `n` elements (no circuits).
    pub fn free(n: usize) -> Result<Matroid> {
        Ok(Matroid::new_unchecked(CircuitFamily::new(n, Vec::new())?))
    }

    /// Ground-set size.
    #[inline]
    pub fn ground_size(&self) -> usize {
        self.n
    }

    /// The full ground set.
    #[inline]
    pub fn full_set(&self) -> Subset {
        Subset::full(self.n)
    }

    /// The circuit family.
    #[inline]
    pub fn circuits(&self) -> &CircuitFamily {
        &self.circuits
    }

    /// Rank of the whole ground set.
    #[inline]
    pub fn rank_full(&self) -> usize {
        self.rank_full
    }

    /// Rank of a subset: size of its largest circuit-free subset.
    ///
    /// Panics if `x` has bits outside the ground set.
    pub fn rank(&self, x: Subset) -> usize {
        assert!(
            x.is_subset_of(self.full_set()),
            "subset {x:?} out of range for ground size {}",
            self.n
        );
        if self.n <= RANK_TABLE_MAX_N {
            self.table()[x.0 as usize] as usize
        } else {
            self.rank_greedy(x)
        }
    }

    /// True if `x` contains no circuit.
    pub fn is_independent(&self, x: Subset) -> bool {
        !self.circuits.has_member_inside(x)
    }

    /// Greedy rank against the circuit oracle; valid because the circuit
    /// axioms hold for every constructed matroid.
    fn rank_greedy(&self, x: Subset) -> usize {
        let mut indep = 0u64;
        for e in x.iter() {
            let cand = indep | 1 << e;
            // Any circuit inside `cand` must pass through `e`, since the
            // previous set was independent.
            let dependent = self.by_element[e].iter().any(|&c| c & !cand == 0);
            if !dependent {
                indep = cand;
            }
        }
        indep.count_ones() as usize
    }

    /// Full rank table, built on first use for small ground sets.
    fn table(&self) -> &[u8] {
        self.rank_table.get_or_init(|| {
            let size = 1usize << self.n;
            let mut dep = vec![false; size];
            for &c in self.circuits.members() {
                dep[c.0 as usize] = true;
            }
            let mut r = vec![0u8; size];
            for s in 1..size {
                let mut dependent = dep[s];
                let mut best = 0u8;
                let mut rest = s;
                while rest != 0 {
                    let e = rest.trailing_zeros();
                    rest &= rest - 1;
                    let sub = s & !(1usize << e);
                    if dep[sub] {
                        dependent = true;
                    }
                    if r[sub] > best {
                        best = r[sub];
                    }
                }
                if dependent {
                    dep[s] = true;
                    r[s] = best;
                } else {
                    r[s] = (s as u64).count_ones() as u8;
                }
            }
            r
        })
    }

    /// Closure: `x` plus every element whose addition keeps the rank.
    pub fn closure(&self, x: Subset) -> Subset {
        let r = self.rank(x);
        let mut out = x;
        for e in self.full_set().difference(x).iter() {
            if self.rank(x.insert(e)) == r {
                out = out.insert(e);
            }
        }
        out
    }

    /// All flats (closure-closed sets), in canonical order. Always contains
    /// `closure(∅)` and the ground set.
    pub fn flats(&self) -> &[Subset] {
        self.flats_cache.get_or_init(|| {
            let mut seen: HashSet<u64> = HashSet::new();
            let mut queue: Vec<Subset> = Vec::new();
            let bottom = self.closure(Subset::EMPTY);
            seen.insert(bottom.0);
            queue.push(bottom);
            while let Some(f) = queue.pop() {
                for e in self.full_set().difference(f).iter() {
                    let g = self.closure(f.insert(e));
                    if seen.insert(g.0) {
                        queue.push(g);
                    }
                }
            }
            let mut flats: Vec<Subset> = seen.into_iter().map(Subset).collect();
            flats.sort_by(|a, b| a.canonical_cmp(*b));
            flats
        })
    }

    /// Connectivity: true for ground size ≤ 1; otherwise true iff every pair
    /// of distinct elements lies in a common circuit.
    pub fn is_connected(&self) -> bool {
        *self.connected_cache.get_or_init(|| {
            if self.n <= 1 {
                return true;
            }
            let full = self.full_set().0;
            (0..self.n).all(|x| {
                let mut cover = 0u64;
                for &c in &self.by_element[x] {
                    cover |= c;
                }
                cover | 1 << x == full
            })
        })
    }

    /// Cocircuits: minimal nonempty `D` with `rank(E−D) < rank(E)`. They are
    /// exactly the circuits of the dual, in canonical order.
    pub fn cocircuits(&self) -> &[Subset] {
        self.cocircuits_cache.get_or_init(|| {
            let r = self.rank_full;
            let mut found: Vec<Subset> = Vec::new();
            if r == 0 {
                return found;
            }
            let full = self.full_set();
            // A cocircuit is the complement of a hyperplane, so its size is
            // at most n − r + 1.
            for k in 1..=self.n - r + 1 {
                for d in subsets_of_size(self.n, k) {
                    if found.iter().any(|f| f.is_subset_of(d)) {
                        continue;
                    }
                    if self.rank(full.difference(d)) < r {
                        found.push(d);
                    }
                }
            }
            found
        })
    }

    /// The dual matroid: circuits are this matroid's cocircuits. Involution:
    /// `dual(dual(M))` equals `M` member-for-member.
    pub fn dual(&self) -> Matroid {
        let family = CircuitFamily::new(self.n, self.cocircuits().to_vec())
            .expect("cocircuits form a valid antichain");
        Matroid::new_unchecked(family)
    }

    /// Minor: contract `contract`, delete `delete` (disjoint), relabeling the
    /// remaining elements to a fresh `0..m` range.
    pub fn minor(&self, contract: Subset, delete: Subset) -> Result<Minor> {
        if !contract.is_disjoint(delete) {
            return Err(Error::OverlappingMinor);
        }
        let touched = contract.union(delete);
        if !touched.is_subset_of(self.full_set()) {
            return Err(Error::OutOfRange {
                element: touched.difference(self.full_set()).min_element().unwrap(),
                ground: self.n,
            });
        }
        let keep = self.full_set().difference(touched);
        let mut old_to_new: Vec<Option<usize>> = vec![None; self.n];
        let mut map: Vec<usize> = vec![usize::MAX; self.n];
        for (i, e) in keep.iter().enumerate() {
            old_to_new[e] = Some(i);
            map[e] = i;
        }
        // Circuits of (M \ delete) / contract: minimal nonempty sets among
        // {C − contract : C a circuit avoiding delete}.
        let mut cands: Vec<Subset> = self
            .circuits
            .members()
            .iter()
            .filter(|c| c.is_disjoint(delete))
            .map(|c| c.difference(contract))
            .filter(|c| !c.is_empty())
            .collect();
        cands.sort_by(|a, b| a.canonical_cmp(*b));
        cands.dedup();
        let mut minimal: Vec<Subset> = Vec::with_capacity(cands.len());
        'outer: for &c in &cands {
            for &m in &minimal {
                if m.is_subset_of(c) {
                    continue 'outer;
                }
            }
            minimal.push(c);
        }
        let relabeled: Vec<Subset> = minimal.iter().map(|c| c.relabel(&map)).collect();
        let family = CircuitFamily::new(keep.len(), relabeled)
            .expect("minor circuits form a valid antichain");
        Ok(Minor {
            matroid: Matroid::new_unchecked(family),
            old_to_new,
        })
    }

    /// Delete a set of elements.
    pub fn delete(&self, d: Subset) -> Minor {
        self.minor(Subset::EMPTY, d).expect("deletion cannot overlap")
    }

    /// Contract a set of elements.
    pub fn contract(&self, c: Subset) -> Minor {
        self.minor(c, Subset::EMPTY).expect("contraction cannot overlap")
    }

    /// Restriction to `keep` (deletion of the complement).
    pub fn restrict(&self, keep: Subset) -> Minor {
        self.delete(self.full_set().difference(keep))
    }

    /// True if `{x, y}` is a cocircuit (a series pair): neither singleton
    /// drops the rank, but removing both does.
    pub fn is_series_pair(&self, x: usize, y: usize) -> bool {
        assert!(x < self.n && y < self.n);
        if x == y {
            return false;
        }
        let full = self.full_set();
        let r = self.rank_full;
        self.rank(full.remove(x)) == r
            && self.rank(full.remove(y)) == r
            && self.rank(full.remove(x).remove(y)) < r
    }

    /// Series classes: blocks of the equivalence generated by
    /// "`{x,y}` is a cocircuit", with singletons for unrelated elements.
    pub fn series_classes(&self) -> ElementPartition {
        let mut parent: Vec<usize> = (0..self.n).collect();
        fn find(parent: &mut Vec<usize>, mut x: usize) -> usize {
            while parent[x] != x {
                parent[x] = parent[parent[x]];
                x = parent[x];
            }
            x
        }
        for x in 0..self.n {
            for y in x + 1..self.n {
                if self.is_series_pair(x, y) {
                    let (a, b) = (find(&mut parent, x), find(&mut parent, y));
                    if a != b {
                        parent[a] = b;
                    }
                }
            }
        }
        let mut blocks_by_root: std::collections::BTreeMap<usize, Subset> = Default::default();
        for e in 0..self.n {
            let r = find(&mut parent, e);
            let entry = blocks_by_root.entry(r).or_insert(Subset::EMPTY);
            *entry = entry.insert(e);
        }
        let mut blocks: Vec<Subset> = blocks_by_root.into_values().collect();
        blocks.sort_by_key(|b| b.min_element().unwrap());
        ElementPartition { n: self.n, blocks }
    }

    /// Elements that are loops (size-1 circuits).
    pub fn loops(&self) -> Subset {
        let mut out = Subset::EMPTY;
        for &c in self.circuits.members() {
            if c.len() == 1 {
                out = out.union(c);
            } else {
                break; // canonical order: larger circuits follow
            }
        }
        out
    }

    /// Elements in no circuit (coloops / free elements).
    pub fn coloops(&self) -> Subset {
        let mut covered = 0u64;
        for &c in self.circuits.members() {
            covered |= c.0;
        }
        self.full_set().difference(Subset(covered))
    }

    /// All bases (maximal independent sets; all have size `rank_full`).
    pub fn bases(&self) -> Vec<Subset> {
        subsets_of_size(self.n, self.rank_full)
            .filter(|&b| self.is_independent(b))
            .collect()
    }

    /// Canonical isomorphism key (computed once, cached).
    pub fn canonical_key(&self) -> &CanonicalKey {
        self.canonical_cache.get_or_init(|| {
            let masks: Vec<u64> = self.circuits.members().iter().map(|c| c.0).collect();
            compute_canonical_key(self.n, &masks)
        })
    }

    /// True if some ground-set bijection maps circuits onto circuits.
    pub fn is_isomorphic_to(&self, other: &Matroid) -> bool {
        self.n == other.n && self.canonical_key() == other.canonical_key()
    }

    /// Relabel the ground set by a permutation (`perm[old] = new`).
    pub fn relabeled(&self, perm: &[usize]) -> Result<Matroid> {
        if perm.len() != self.n {
            return Err(Error::InvalidParams(format!(
                "permutation length {} does not match ground size {}",
                perm.len(),
                self.n
            )));
        }
        let mut seen = vec![false; self.n];
        for &p in perm {
            if p >= self.n {
                return Err(Error::OutOfRange {
                    element: p,
                    ground: self.n,
                });
            }
            if seen[p] {
                return Err(Error::InvalidParams(format!(
                    "permutation repeats target index {p}"
                )));
            }
            seen[p] = true;
        }
        let members: Vec<Subset> = self
            .circuits
            .members()
            .iter()
            .map(|c| c.relabel(perm))
            .collect();
        Ok(Matroid::new_unchecked(CircuitFamily::new(self.n, members)?))
    }

    /// Search for a `U_{2,4}` minor. On success returns `(contract, delete)`
    /// such that contracting then deleting leaves a 4-point line.
    pub fn find_u24_minor(&self) -> Option<(Subset, Subset)> {
        let full = self.full_set();
        for s in subsets_of_size(self.n, 4) {
            let rest = full.difference(s);
            // Enumerate all contract sets inside the complement.
            let mut sub = rest.0;
            loop {
                let c = Subset(sub);
                let rc = self.rank(c);
                if self.rank(c.union(s)) == rc + 2
                    && s.iter().all(|e| self.rank(c.insert(e)) == rc + 1)
                    && pair_iter(s).all(|(e, f)| self.rank(c.insert(e).insert(f)) == rc + 2)
                {
                    return Some((c, rest.difference(c)));
                }
                if sub == 0 {
                    break;
                }
                sub = (sub - 1) & rest.0;
            }
        }
        None
    }

    /// Binarity by excluded-minor search: no minor isomorphic to `U_{2,4}`.
    pub fn is_binary(&self) -> bool {
        self.find_u24_minor().is_none()
    }

    /// Cross-check for binarity: the symmetric difference of any two distinct
    /// circuits is a disjoint union of circuits. Exact (backtracking peel).
    pub fn binary_by_symmetric_differences(&self) -> bool {
        let members = self.circuits.members();
        for i in 0..members.len() {
            for j in i + 1..members.len() {
                let sym = members[i].symmetric_difference(members[j]);
                if !self.is_disjoint_union_of_circuits(sym) {
                    return false;
                }
            }
        }
        true
    }

    /// Can `s` be partitioned into pairwise disjoint circuits? Empty counts.
    pub fn is_disjoint_union_of_circuits(&self, s: Subset) -> bool {
        if s.is_empty() {
            return true;
        }
        let e = s.min_element().unwrap();
        for &c in &self.by_element[e] {
            if c & !s.0 == 0 && self.is_disjoint_union_of_circuits(s.difference(Subset(c))) {
                return true;
            }
        }
        false
    }
}

/// Ordered pairs `(e, f)` with `e < f` from a subset.
fn pair_iter(s: Subset) -> impl Iterator<Item = (usize, usize)> {
    let elems = s.elements();
    let mut pairs = Vec::new();
    for i in 0..elems.len() {
        for j in i + 1..elems.len() {
            pairs.push((elems[i], elems[j]));
        }
    }
    pairs.into_iter()
}

/// First weak-elimination violation in a family, if any.
fn weak_elimination_violation(family: &CircuitFamily) -> Option<(Subset, Subset, usize)> {
    let members = family.members();
    for i in 0..members.len() {
        for j in i + 1..members.len() {
            let inter = members[i].intersection(members[j]);
            if inter.is_empty() {
                continue;
            }
            let union = members[i].union(members[j]);
            let inside: Vec<u64> = members
                .iter()
                .map(|m| m.0)
                .filter(|&m| m & !union.0 == 0)
                .collect();
            for e in inter.iter() {
                if !inside.iter().any(|&m| m >> e & 1 == 0) {
                    return Some((members[i], members[j], e));
                }
            }
        }
    }
    None
}

/// Result of a minor operation: the relabeled matroid plus the element map.
#[derive(Clone, Debug)]
pub struct Minor {
    /// The minor, on ground set `0..m`.
    pub matroid: Matroid,
    /// `old_to_new[e]` is the minor's index for surviving element `e`.
    pub old_to_new: Vec<Option<usize>>,
}

impl Minor {
    /// Inverse map: for each new index, the original element.
    pub fn new_to_old(&self) -> Vec<usize> {
        let mut out = vec![0; self.matroid.ground_size()];
        for (old, slot) in self.old_to_new.iter().enumerate() {
            if let Some(new) = slot {
                out[*new] = old;
            }
        }
        out
    }
}

/// A partition of the ground set into disjoint blocks covering `0..n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ElementPartition {
    n: usize,
    blocks: Vec<Subset>,
}

impl ElementPartition {
    /// All blocks, sorted by least element; singletons included.
    pub fn blocks(&self) -> &[Subset] {
        &self.blocks
    }

    /// The block containing `e`.
    pub fn class_containing(&self, e: usize) -> Subset {
        assert!(e < self.n);
        *self
            .blocks
            .iter()
            .find(|b| b.contains(e))
            .expect("partition covers the ground set")
    }

    /// Blocks with at least two elements.
    pub fn nontrivial_blocks(&self) -> impl Iterator<Item = Subset> + '_ {
        self.blocks.iter().copied().filter(|b| b.len() >= 2)
    }

    /// True if `e` lies in a block of size ≥ 2.
    pub fn is_in_nontrivial_block(&self, e: usize) -> bool {
        self.class_containing(e).len() >= 2
    }
}

/// Compare matroids by (ground size, circuit list) — a deterministic total
/// order used for stable output, unrelated to isomorphism.
pub fn label_order(a: &Matroid, b: &Matroid) -> Ordering {
    a.ground_size().cmp(&b.ground_size()).then_with(|| {
        let (ca, cb) = (a.circuits().members(), b.circuits().members());
        ca.len().cmp(&cb.len()).then_with(|| {
            for (x, y) in ca.iter().zip(cb) {
                match x.canonical_cmp(*y) {
                    Ordering::Equal => continue,
                    ord => return ord,
                }
            }
            Ordering::Equal
        })
    })
}

/// Exhaustive rank-oracle checks used by tests: every subset's rank is the
/// size of its largest independent subset, computed by brute force.
#[cfg(test)]
fn brute_force_rank(m: &Matroid, x: Subset) -> usize {
    let mut best = 0;
    let mut sub = x.0;
    loop {
        let s = Subset(sub);
        if m.is_independent(s) && s.len() > best {
            best = s.len();
        }
        if sub == 0 {
            break;
        }
        sub = (sub - 1) & x.0;
    }
    best
}
