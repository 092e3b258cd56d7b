//! Canonical forms for element-labeled set systems.
//!
//! One engine serves two clients: matroids (masks are circuits over ground
//! elements) and multigraphs (masks are edge endpoint sets over vertices,
//! with duplicate masks for parallel edges). Two inputs receive equal keys
//! exactly when some bijection of their element sets maps one mask multiset
//! onto the other.
//!
//! The algorithm is classic individualize-and-refine: iterative color
//! refinement by invariant profiles, depth-first individualization of the
//! first non-singleton color class, and the key is the minimum relabeled mask
//! multiset over all leaves. Branches that differ from an explored sibling by
//! a transposition automorphism are pruned, which collapses the factorial
//! blowup on highly symmetric inputs (uniform matroids, parallel classes).

use std::cmp::Ordering;
use std::fmt;

/// Canonical key of a set system: ground size plus the least relabeled mask
/// multiset, sorted by (cardinality, numeric value).
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct CanonicalKey {
    ground: u32,
    masks: Vec<u64>,
}

impl CanonicalKey {
    /// Ground-set size.
    pub fn ground(&self) -> usize {
        self.ground as usize
    }

    /// Canonical mask multiset, sorted by (cardinality, value).
    pub fn masks(&self) -> &[u64] {
        &self.masks
    }

    /// Short stable fingerprint (FNV-1a over the key contents), for display
    /// and log correlation. Equality of keys, not digests, is the real test.
    pub fn digest(&self) -> u64 {
        const OFFSET: u64 = 0xcbf29ce484222325;
        const PRIME: u64 = 0x100000001b3;
        let mut h = OFFSET;
        let mut eat = |v: u64| {
            for b in v.to_le_bytes() {
                h ^= b as u64;
                h = h.wrapping_mul(PRIME);
            }
        };
        eat(self.ground as u64);
        eat(self.masks.len() as u64);
        for &m in &self.masks {
            eat(m);
        }
        h
    }
}

impl PartialOrd for CanonicalKey {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for CanonicalKey {
    fn cmp(&self, other: &Self) -> Ordering {
        self.ground
            .cmp(&other.ground)
            .then_with(|| cmp_mask_lists(&self.masks, &other.masks))
    }
}

impl fmt::Debug for CanonicalKey {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CanonicalKey(n={}, {:016x})", self.ground, self.digest())
    }
}

impl fmt::Display for CanonicalKey {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:016x}", self.digest())
    }
}

/// Order masks by (cardinality, numeric value).
#[inline]
fn cmp_masks(a: u64, b: u64) -> Ordering {
    a.count_ones()
        .cmp(&b.count_ones())
        .then_with(|| a.cmp(&b))
}

/// Lexicographic order on mask lists (shorter list first, then elementwise).
fn cmp_mask_lists(a: &[u64], b: &[u64]) -> Ordering {
    a.len().cmp(&b.len()).then_with(|| {
        for (&x, &y) in a.iter().zip(b) {
            match cmp_masks(x, y) {
                Ordering::Equal => continue,
                ord => return ord,
            }
        }
        Ordering::Equal
    })
}

/// Compute the canonical key of a mask multiset over `n` elements.
///
/// Masks must be nonempty and use only bits below `n`; duplicates are
/// significant (multiset semantics).
pub fn compute_canonical_key(n: usize, masks: &[u64]) -> CanonicalKey {
    debug_assert!(n <= 64);
    debug_assert!(masks.iter().all(|&m| m != 0), "masks must be nonempty");
    if n < 64 {
        debug_assert!(
            masks.iter().all(|&m| m >> n == 0 || n == 64),
            "masks must fit the ground set"
        );
    }

    // Split into connected components (elements in no mask are singletons).
    let comps = split_components(n, masks);

    // Canonicalize each component locally.
    let mut canon: Vec<(usize, Vec<u64>)> = comps
        .into_iter()
        .map(|c| {
            let k = c.elems.len();
            let local = canonical_component(k, &c.masks);
            (k, local)
        })
        .collect();

    // Deterministic component order: by size, then by local key.
    canon.sort_by(|a, b| a.0.cmp(&b.0).then_with(|| cmp_mask_lists(&a.1, &b.1)));

    // Assemble: assign each component a contiguous label block in order.
    let mut out: Vec<u64> = Vec::with_capacity(masks.len());
    let mut offset = 0usize;
    for (k, local) in canon {
        out.extend(local.into_iter().map(|m| m << offset));
        offset += k;
    }
    out.sort_by(|&a, &b| cmp_masks(a, b));
    CanonicalKey {
        ground: n as u32,
        masks: out,
    }
}

struct Component {
    /// Global element indices, ascending.
    elems: Vec<usize>,
    /// Masks re-indexed to local positions `0..elems.len()`.
    masks: Vec<u64>,
}

fn split_components(n: usize, masks: &[u64]) -> Vec<Component> {
    let mut parent: Vec<usize> = (0..n).collect();
    fn find(parent: &mut Vec<usize>, mut x: usize) -> usize {
        while parent[x] != x {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        x
    }
    for &m in masks {
        let first = m.trailing_zeros() as usize;
        let mut rest = m & (m - 1);
        while rest != 0 {
            let e = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            let (a, b) = (find(&mut parent, first), find(&mut parent, e));
            if a != b {
                parent[a] = b;
            }
        }
    }
    // Group elements by root, ascending within each group.
    let mut groups: std::collections::BTreeMap<usize, Vec<usize>> = Default::default();
    for e in 0..n {
        let r = find(&mut parent, e);
        groups.entry(r).or_default().push(e);
    }
    let mut comps: Vec<Component> = Vec::with_capacity(groups.len());
    let mut index_of_root: std::collections::HashMap<usize, usize> = Default::default();
    let mut local_of: Vec<usize> = vec![0; n];
    for (root, elems) in groups {
        for (i, &e) in elems.iter().enumerate() {
            local_of[e] = i;
        }
        index_of_root.insert(root, comps.len());
        comps.push(Component {
            elems,
            masks: Vec::new(),
        });
    }
    for &m in masks {
        let first = m.trailing_zeros() as usize;
        let root = find(&mut parent, first);
        let ci = index_of_root[&root];
        let mut local = 0u64;
        let mut rest = m;
        while rest != 0 {
            let e = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            local |= 1 << local_of[e];
        }
        comps[ci].masks.push(local);
    }
    comps
}

/// Canonical mask list for one connected component on `k` local elements.
fn canonical_component(k: usize, masks: &[u64]) -> Vec<u64> {
    debug_assert!(k >= 1);
    if k == 1 {
        // Only possible masks are copies of {0}; already canonical.
        let mut out = masks.to_vec();
        out.sort_by(|&a, &b| cmp_masks(a, b));
        return out;
    }
    let mut colors = vec![0usize; k];
    refine(k, masks, &mut colors);
    let mut best: Option<Vec<u64>> = None;
    search(k, masks, &colors, &mut best);
    best.expect("individualize-refine always reaches a leaf")
}

/// Iterated invariant refinement. Each element's profile is its current color
/// plus, for every mask through it, the mask size and the sorted colors of
/// the mask's other members. New colors are ranks of sorted unique profiles,
/// so the result depends only on the isomorphism class of the colored input.
fn refine(k: usize, masks: &[u64], colors: &mut Vec<usize>) {
    type Profile = (usize, Vec<(u32, Vec<usize>)>);
    loop {
        let mut profiles: Vec<Profile> = Vec::with_capacity(k);
        for e in 0..k {
            let mut local: Vec<(u32, Vec<usize>)> = Vec::new();
            for &m in masks {
                if m >> e & 1 == 1 {
                    let mut others: Vec<usize> = Vec::with_capacity(m.count_ones() as usize - 1);
                    let mut rest = m & !(1u64 << e);
                    while rest != 0 {
                        let f = rest.trailing_zeros() as usize;
                        rest &= rest - 1;
                        others.push(colors[f]);
                    }
                    others.sort_unstable();
                    local.push((m.count_ones(), others));
                }
            }
            local.sort();
            profiles.push((colors[e], local));
        }
        let mut uniq: Vec<&Profile> = profiles.iter().collect();
        uniq.sort();
        uniq.dedup();
        let old_count = {
            let mut cs: Vec<usize> = colors.clone();
            cs.sort_unstable();
            cs.dedup();
            cs.len()
        };
        let new_colors: Vec<usize> = profiles
            .iter()
            .map(|p| uniq.binary_search(&p).unwrap())
            .collect();
        // The new partition always refines the old one (profiles embed the
        // old color), so equal class counts mean the partition is stable.
        let stable = uniq.len() == old_count;
        *colors = new_colors;
        if stable {
            return;
        }
    }
}

/// Depth-first individualization over the first non-singleton color class.
fn search(k: usize, masks: &[u64], colors: &[usize], best: &mut Option<Vec<u64>>) {
    // Find the smallest color value with a class of size >= 2.
    let mut class_count = vec![0usize; k + 1];
    for &c in colors {
        class_count[c] += 1;
    }
    let target = (0..=k).find(|&c| class_count[c] >= 2);
    let Some(target) = target else {
        // Discrete coloring: colors form a bijection to 0..k.
        let mut relabeled: Vec<u64> = masks
            .iter()
            .map(|&m| {
                let mut out = 0u64;
                let mut rest = m;
                while rest != 0 {
                    let e = rest.trailing_zeros() as usize;
                    rest &= rest - 1;
                    out |= 1 << colors[e];
                }
                out
            })
            .collect();
        relabeled.sort_by(|&a, &b| cmp_masks(a, b));
        if best.is_none() || cmp_mask_lists(&relabeled, best.as_ref().unwrap()) == Ordering::Less {
            *best = Some(relabeled);
        }
        return;
    };
    let cell: Vec<usize> = (0..k).filter(|&e| colors[e] == target).collect();
    let mut tried: Vec<usize> = Vec::new();
    for &e in &cell {
        // Skip if a transposition with an already-tried sibling is an
        // automorphism of the mask multiset: the subtree is then a mirror
        // image of the explored one and contributes no new leaf keys.
        if tried
            .iter()
            .any(|&t| transposition_is_automorphism(masks, t, e))
        {
            continue;
        }
        let mut child = colors.to_vec();
        child[e] = k; // fresh color, larger than any refinement rank
        refine(k, masks, &mut child);
        search(k, masks, &child, best);
        tried.push(e);
    }
}

/// Does swapping elements `a` and `b` map the mask multiset to itself?
fn transposition_is_automorphism(masks: &[u64], a: usize, b: usize) -> bool {
    let swap = |m: u64| -> u64 {
        let ba = m >> a & 1;
        let bb = m >> b & 1;
        if ba == bb {
            m
        } else {
            m ^ (1 << a) ^ (1 << b)
        }
    };
    let mut orig: Vec<u64> = masks.to_vec();
    let mut swapped: Vec<u64> = masks.iter().map(|&m| swap(m)).collect();
    orig.sort_unstable();
    swapped.sort_unstable();
    orig == swapped
}

#[cfg(test)]
mod tests {
    use super::*;

    fn key(n: usize, masks: &[u64]) -> CanonicalKey {
        compute_canonical_key(n, masks)
    }

    #[test]
    fn empty_systems() {
        assert_eq!(key(0, &[]), key(0, &[]));
        assert_eq!(key(3, &[]).ground(), 3);
        assert_ne!(key(3, &[]), key(4, &[]));
    }

    #[test]
    fn relabeling_invariance_small() {
        // Path on 3 vertices labeled two ways.
        let a = key(3, &[0b011, 0b110]);
        let b = key(3, &[0b011, 0b101]);
        assert_eq!(a, b);
        // Triangle differs from path.
        let tri = key(3, &[0b011, 0b101, 0b110]);
        assert_ne!(a, tri);
    }

    #[test]
    fn multiset_semantics_for_parallel_edges() {
        let double = key(2, &[0b11, 0b11]);
        let single = key(2, &[0b11]);
        assert_ne!(double, single);
        assert_eq!(double, key(2, &[0b11, 0b11]));
    }

    #[test]
    fn loops_as_singleton_masks() {
        let one_loop = key(1, &[0b1]);
        let two_loops = key(1, &[0b1, 0b1]);
        assert_ne!(one_loop, two_loops);
    }

    #[test]
    fn component_order_is_invariant() {
        // Triangle + disjoint edge, with the components occupying opposite
        // label blocks in the two inputs.
        let a = key(6, &[0b000011, 0b011000, 0b101000, 0b110000]);
        let b = key(6, &[0b110000, 0b000011, 0b000101, 0b000110]);
        assert_eq!(a, b);
    }

    #[test]
    fn uniform_symmetry_collapses() {
        // All 3-subsets of a 5-set, under two labelings.
        let masks: Vec<u64> = (0u64..32).filter(|m| m.count_ones() == 3).collect();
        let k1 = key(5, &masks);
        // Relabel by the cycle (0 1 2 3 4).
        let perm = [1usize, 2, 3, 4, 0];
        let relabeled: Vec<u64> = masks
            .iter()
            .map(|&m| {
                let mut out = 0u64;
                for e in 0..5 {
                    if m >> e & 1 == 1 {
                        out |= 1 << perm[e];
                    }
                }
                out
            })
            .collect();
        assert_eq!(k1, key(5, &relabeled));
    }

    #[test]
    fn distinguishes_close_graphs() {
        // Star K_{1,3} vs path P_4 (both trees on 4 vertices, 3 edges).
        let star = key(4, &[0b0011, 0b0101, 0b1001]);
        let path = key(4, &[0b0011, 0b0110, 0b1100]);
        assert_ne!(star, path);
    }

    #[test]
    fn digest_is_stable_across_runs() {
        let k = key(3, &[0b011, 0b101, 0b110]);
        assert_eq!(k.digest(), key(3, &[0b110, 0b011, 0b101]).digest());
    }
}
