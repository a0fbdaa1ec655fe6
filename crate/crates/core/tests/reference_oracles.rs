//! Filter-based reference generators, deliberately dumber than the
//! recursive ones in the library: enumerate a superset of candidates and
//! keep what validates. Two independent implementations guard against a
//! shared bug, and comparing against `validate` makes "validate accepts
//! exactly the enumerated objects" a tested fact rather than a claim.

use std::collections::BTreeSet;

use itertools::Itertools;

use dissections::enumeration;
use dissections::{InternallyOrderedPartition, NestedSet, ParenthesizedList, Partition2};

fn keys<T: serde::Serialize>(items: &[T]) -> BTreeSet<String> {
    items
        .iter()
        .map(|x| serde_json::to_string(x).unwrap())
        .collect()
}

/// All subsets of [1, n] of size >= 2, as sorted element lists.
fn all_blocks(n: usize) -> Vec<Vec<usize>> {
    (1..=n)
        .powerset()
        .filter(|s| s.len() >= 2)
        .collect()
}

#[test]
fn nested_sets_match_powerset_filter() {
    for n in 2..=5 {
        for k in 1..n {
            let slow: Vec<NestedSet> = all_blocks(n)
                .into_iter()
                .combinations(k)
                .map(|blocks| NestedSet::new(n, blocks))
                .filter(|s| s.validate_member(n, k).is_ok())
                .collect();
            let fast = enumeration::nested_sets(n, k).unwrap();
            assert_eq!(keys(&slow), keys(&fast), "nested sets n={n} k={k}");
        }
    }
}

/// All set partitions of [1, m] by restricted growth strings.
fn all_set_partitions(m: usize) -> Vec<Vec<Vec<usize>>> {
    fn go(m: usize, next: usize, assign: &mut Vec<usize>, out: &mut Vec<Vec<Vec<usize>>>) {
        if assign.len() == m {
            let blocks = assign.iter().max().map_or(0, |&b| b + 1);
            let mut family = vec![Vec::new(); blocks];
            for (e, &b) in assign.iter().enumerate() {
                family[b].push(e + 1);
            }
            out.push(family);
            return;
        }
        for b in 0..=next {
            assign.push(b);
            go(m, next.max(b + 1), assign, out);
            assign.pop();
        }
    }
    let mut out = Vec::new();
    go(m, 0, &mut Vec::new(), &mut out);
    out
}

#[test]
fn partitions_match_growth_string_filter() {
    for m in 2..=8 {
        for k in 1..=m / 2 {
            let slow: Vec<Partition2> = all_set_partitions(m)
                .into_iter()
                .map(|blocks| Partition2::new(m, blocks))
                .filter(|p| p.validate_member(m, k).is_ok())
                .collect();
            let fast = enumeration::partitions2(m, k).unwrap();
            assert_eq!(keys(&slow), keys(&fast), "partitions m={m} k={k}");
        }
    }
}

#[test]
fn parenthesizations_match_interval_subset_filter() {
    let perms: Vec<Vec<usize>> = vec![vec![1, 2, 3, 4, 5], vec![4, 2, 5, 1, 3]];
    for perm in perms {
        for n in 2..=5 {
            let perm: Vec<usize> = perm.iter().copied().filter(|&v| v <= n).collect();
            let intervals: Vec<(usize, usize)> = (1..=n)
                .flat_map(|l| (l + 1..=n).map(move |r| (l, r)))
                .collect();
            for k in 1..n {
                let slow: Vec<ParenthesizedList> = intervals
                    .iter()
                    .copied()
                    .combinations(k)
                    .map(|family| ParenthesizedList::new(n, perm.clone(), family))
                    .filter(|p| p.validate_member(n, k).is_ok())
                    .collect();
                let fast = enumeration::parenthesizations(n, k, &perm).unwrap();
                assert_eq!(keys(&slow), keys(&fast), "parens n={n} k={k}");
            }
        }
    }
}

/// Every internally ordered partition of [1, m] arises k! times from a
/// permutation of [1, m] split along an ordered composition into parts of
/// size >= 2.
#[test]
fn ordered_partitions_match_split_permutation_filter() {
    fn compositions(total: usize, parts: usize) -> Vec<Vec<usize>> {
        if parts == 0 {
            return if total == 0 { vec![vec![]] } else { vec![] };
        }
        (2..=total)
            .flat_map(|head| {
                compositions(total - head, parts - 1)
                    .into_iter()
                    .map(move |mut tail| {
                        tail.insert(0, head);
                        tail
                    })
            })
            .collect()
    }
    for m in 2..=7 {
        for k in 1..=m / 2 {
            let mut slow = BTreeSet::new();
            for word in (1..=m).permutations(m) {
                for sizes in compositions(m, k) {
                    let mut blocks = Vec::with_capacity(k);
                    let mut start = 0;
                    for &len in &sizes {
                        blocks.push(word[start..start + len].to_vec());
                        start += len;
                    }
                    let q = InternallyOrderedPartition::new(m, blocks, None);
                    q.validate_member(m, k).unwrap();
                    slow.insert(serde_json::to_string(&q).unwrap());
                }
            }
            let fast = enumeration::ordered_partitions(m, k).unwrap();
            assert_eq!(slow, keys(&fast), "ordered partitions m={m} k={k}");
        }
    }
}

#[test]
fn triple_counts_match_their_formula() {
    use dissections::counting::distinguished_count;
    use num_bigint::BigUint;
    for n in 2..=5 {
        for k in 1..n {
            let generated = enumeration::triples(n, k).unwrap();
            assert_eq!(
                BigUint::from(generated.len()),
                distinguished_count(n, k).unwrap(),
                "triples n={n} k={k}"
            );
            assert_eq!(keys(&generated).len(), generated.len());
        }
    }
}
