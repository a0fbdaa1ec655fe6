//! Exhaustive, deterministic generators for every object family. These are
//! the brute-force side of all the cardinality identities.
//!
//! Every generator returns each object exactly once, sorted by its canonical
//! JSON serialization; identical calls produce identical output.

use itertools::Itertools;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::types::{
    InternallyOrderedPartition, NestedSet, ParenthesizedList, Params, Partition2, Triple,
};

fn sort_canonical<T: Serialize>(items: &mut [T]) {
    items.sort_by_cached_key(|x| serde_json::to_string(x).expect("core types serialize"));
}

/// All members of `S_2(n, k)`.
pub fn nested_sets(n: usize, k: usize) -> Result<Vec<NestedSet>> {
    Params::new(n, k).validate()?;
    let ground: Vec<usize> = (1..=n).collect();
    let mut out: Vec<NestedSet> = nested_families(&ground, k)
        .into_iter()
        .map(|blocks| NestedSet::new(n, blocks))
        .collect();
    sort_canonical(&mut out);
    Ok(out)
}

/// All members of `T_2(m, k)`.
pub fn partitions2(m: usize, k: usize) -> Result<Vec<Partition2>> {
    if k < 1 {
        return Err(Error::KTooSmall);
    }
    if m < 2 * k {
        return Err(Error::GroundTooSmall);
    }
    let elems: Vec<usize> = (1..=m).collect();
    let mut out: Vec<Partition2> = partition_families(&elems, k)
        .into_iter()
        .map(|blocks| Partition2::new(m, blocks))
        .collect();
    sort_canonical(&mut out);
    Ok(out)
}

/// All parenthesizations with `k` pairs over the fixed leaf list `perm`.
/// For the identity list this enumerates the dissections of the
/// `(n+1)`-gon by `k-1` diagonals.
pub fn parenthesizations(n: usize, k: usize, perm: &[usize]) -> Result<Vec<ParenthesizedList>> {
    Params::new(n, k).validate()?;
    let probe = ParenthesizedList::new(n, perm.to_vec(), vec![(1, n)]);
    probe.validate()?;
    let mut out: Vec<ParenthesizedList> = interval_families(1, n, k)
        .into_iter()
        .map(|intervals| ParenthesizedList::new(n, perm.to_vec(), intervals))
        .collect();
    sort_canonical(&mut out);
    Ok(out)
}

/// All admissible internally ordered `k`-partitions of `[1, m]`, with no
/// distinguished block.
pub fn ordered_partitions(m: usize, k: usize) -> Result<Vec<InternallyOrderedPartition>> {
    if k < 1 {
        return Err(Error::KTooSmall);
    }
    if m < 2 * k {
        return Err(Error::GroundTooSmall);
    }
    let elems: Vec<usize> = (1..=m).collect();
    let mut out = Vec::new();
    for blocks in partition_families(&elems, k) {
        let orderings: Vec<Vec<Vec<usize>>> = blocks
            .iter()
            .map(|b| b.iter().copied().permutations(b.len()).collect())
            .collect();
        for choice in orderings.into_iter().multi_cartesian_product() {
            out.push(InternallyOrderedPartition::new(m, choice, None));
        }
    }
    sort_canonical(&mut out);
    Ok(out)
}

/// All coding triples `(I, sigma, D)` for the given parameters; there are
/// `n! C(n-2, k-1) C(n+k-1, k-1)` of them.
pub fn triples(n: usize, k: usize) -> Result<Vec<Triple>> {
    Params::new(n, k).validate()?;
    let m = n + k - 1;
    let mut out = Vec::new();
    for i_list in (1..=m).combinations(n) {
        for sigma in (1..=n).permutations(n) {
            for cuts in (2..=n - 1).combinations(k - 1) {
                out.push(Triple::new(n, k, i_list.clone(), sigma.clone(), cuts));
            }
        }
    }
    sort_canonical(&mut out);
    Ok(out)
}

/// Nested families over `ground` with exactly `budget` blocks, including
/// `ground` itself. Recursion: pick the antichain of maximal proper blocks,
/// split the remaining budget among them.
fn nested_families(ground: &[usize], budget: usize) -> Vec<Vec<Vec<usize>>> {
    if budget == 0 || budget > ground.len() - 1 {
        return Vec::new();
    }
    if budget == 1 {
        return vec![vec![ground.to_vec()]];
    }
    let mut out = Vec::new();
    for antichain in disjoint_subfamilies(ground) {
        if antichain.is_empty() || antichain.len() > budget - 1 {
            continue;
        }
        if antichain.len() == 1 && antichain[0].len() == ground.len() {
            // Not a proper sub-block.
            continue;
        }
        for split in compositions(budget - 1, antichain.len()) {
            let per_block: Vec<Vec<Vec<Vec<usize>>>> = antichain
                .iter()
                .zip(&split)
                .map(|(block, &b)| nested_families(block, b))
                .collect();
            if per_block.iter().any(|fams| fams.is_empty()) {
                continue;
            }
            for combo in per_block.into_iter().multi_cartesian_product() {
                let mut family = vec![ground.to_vec()];
                for sub in combo {
                    family.extend(sub);
                }
                out.push(family);
            }
        }
    }
    out
}

/// Families of pairwise disjoint subsets of `elems`, each of size >= 2
/// (the empty family included). Blocks are discovered in order of their
/// minima, so each family appears once.
fn disjoint_subfamilies(elems: &[usize]) -> Vec<Vec<Vec<usize>>> {
    if elems.len() < 2 {
        return vec![Vec::new()];
    }
    let first = elems[0];
    let rest = &elems[1..];
    // First element left uncovered.
    let mut out = disjoint_subfamilies(rest);
    // First element opens a block together with a nonempty subset of the rest.
    for others in rest.iter().copied().powerset() {
        if others.is_empty() {
            continue;
        }
        let mut block = vec![first];
        block.extend(others.iter().copied());
        let remaining: Vec<usize> = rest
            .iter()
            .copied()
            .filter(|e| !others.contains(e))
            .collect();
        for mut family in disjoint_subfamilies(&remaining) {
            family.insert(0, block.clone());
            out.push(family);
        }
    }
    out
}

/// Partitions of `elems` into exactly `k` blocks of size >= 2. The block
/// containing the smallest element is chosen first.
fn partition_families(elems: &[usize], k: usize) -> Vec<Vec<Vec<usize>>> {
    if k == 0 {
        return if elems.is_empty() {
            vec![Vec::new()]
        } else {
            Vec::new()
        };
    }
    if elems.len() < 2 * k {
        return Vec::new();
    }
    let first = elems[0];
    let rest = &elems[1..];
    let mut out = Vec::new();
    for others in rest.iter().copied().powerset() {
        if others.is_empty() || rest.len() - others.len() < 2 * (k - 1) {
            continue;
        }
        let mut block = vec![first];
        block.extend(others.iter().copied());
        let remaining: Vec<usize> = rest
            .iter()
            .copied()
            .filter(|e| !others.contains(e))
            .collect();
        for mut family in partition_families(&remaining, k - 1) {
            family.insert(0, block.clone());
            out.push(family);
        }
    }
    out
}

/// Interval families over positions `[lo, hi]` with exactly `budget`
/// members including `[lo, hi]` itself, pairwise nested or disjoint, each
/// spanning >= 2 positions.
fn interval_families(lo: usize, hi: usize, budget: usize) -> Vec<Vec<(usize, usize)>> {
    let span = hi - lo + 1;
    if budget == 0 || budget > span - 1 {
        return Vec::new();
    }
    if budget == 1 {
        return vec![vec![(lo, hi)]];
    }
    let mut out = Vec::new();
    for antichain in disjoint_subintervals(lo, hi) {
        if antichain.is_empty() || antichain.len() > budget - 1 {
            continue;
        }
        if antichain.len() == 1 && antichain[0] == (lo, hi) {
            continue;
        }
        for split in compositions(budget - 1, antichain.len()) {
            let per_interval: Vec<Vec<Vec<(usize, usize)>>> = antichain
                .iter()
                .zip(&split)
                .map(|(&(l, r), &b)| interval_families(l, r, b))
                .collect();
            if per_interval.iter().any(|fams| fams.is_empty()) {
                continue;
            }
            for combo in per_interval.into_iter().multi_cartesian_product() {
                let mut family = vec![(lo, hi)];
                for sub in combo {
                    family.extend(sub);
                }
                out.push(family);
            }
        }
    }
    out
}

/// Families of pairwise disjoint subintervals of `[lo, hi]`, each spanning
/// >= 2 positions (the empty family included), scanned left to right.
fn disjoint_subintervals(lo: usize, hi: usize) -> Vec<Vec<(usize, usize)>> {
    if lo + 1 > hi {
        return vec![Vec::new()];
    }
    // Skip position lo entirely.
    let mut out = disjoint_subintervals(lo + 1, hi);
    // Or open an interval at lo.
    for end in lo + 1..=hi {
        for mut family in disjoint_subintervals(end + 1, hi) {
            family.insert(0, (lo, end));
            out.push(family);
        }
    }
    out
}

/// Compositions of `total` into exactly `parts` summands, each >= 1.
fn compositions(total: usize, parts: usize) -> Vec<Vec<usize>> {
    if parts == 0 {
        return if total == 0 { vec![Vec::new()] } else { Vec::new() };
    }
    if total < parts {
        return Vec::new();
    }
    let mut out = Vec::new();
    for head in 1..=total - (parts - 1) {
        for mut tail in compositions(total - head, parts - 1) {
            tail.insert(0, head);
            out.push(tail);
        }
    }
    out
}
