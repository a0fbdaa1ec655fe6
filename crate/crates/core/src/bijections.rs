//! The three explicit bijections and their inverses, plus the symmetric
//! group action the first one induces on nested sets.
//!
//! * nested sets of `[1, n]` <-> partitions of `[1, n+k-1]` into blocks of
//!   size >= 2 (via the level tree),
//! * parenthesized lists <-> admissible internally ordered partitions
//!   (the ordered variant of the same construction),
//! * distinguished internally ordered partitions <-> coding triples.

use crate::error::{Error, Result};
use crate::tree::LevelTree;
use crate::types::{
    InternallyOrderedPartition, NestedSet, ParenthesizedList, Params, Partition2, Triple,
};

/// The forward map on `S_2(n, k)`: every internal vertex of the level tree
/// contributes the set of its children's labels, giving a partition of
/// `[1, n+k-1]` into `k` blocks of size >= 2.
pub fn nested_to_partition(s: &NestedSet) -> Result<Partition2> {
    let t = LevelTree::from_nested_set(s)?;
    let (n, k) = (t.n(), t.k());
    let blocks: Vec<Vec<usize>> = (n + 1..=n + k).map(|v| t.children(v)).collect();
    Ok(Partition2::new(n + k - 1, blocks))
}

/// The inverse map, reconstructing the nested set level by level.
///
/// Blocks contained in `[1, n]` are the level-1 vertices; afterwards, any
/// block whose labels are all already assigned resolves to the union of its
/// leaf elements and the leaf sets of the vertices it references. Labels are
/// handed out round by round in block order of the resolved sets. A blocked
/// state before `k-1` resolutions means the input was not a genuine member
/// of `T_2(n+k-1, k)`.
pub fn partition_to_nested(p: &Partition2, n: usize, k: usize) -> Result<NestedSet> {
    Params::new(n, k).validate()?;
    p.validate_member(n + k - 1, k)?;

    // resolved[j] = ascending leaf set of the vertex labelled n+1+j.
    let mut resolved: Vec<Vec<usize>> = Vec::new();
    let mut pending: Vec<&Vec<usize>> = p.blocks().iter().collect();
    while resolved.len() < k - 1 {
        let limit = n + resolved.len();
        let (ready, rest): (Vec<&Vec<usize>>, Vec<&Vec<usize>>) = pending
            .into_iter()
            .partition(|b| *b.last().expect("blocks are nonempty") <= limit);
        if ready.is_empty() {
            return Err(Error::Unresolvable);
        }
        pending = rest;
        let mut round: Vec<Vec<usize>> = ready
            .into_iter()
            .map(|block| {
                let mut leaves = Vec::new();
                for &e in block {
                    if e <= n {
                        leaves.push(e);
                    } else {
                        leaves.extend_from_slice(&resolved[e - n - 1]);
                    }
                }
                leaves.sort_unstable();
                leaves
            })
            .collect();
        round.sort_unstable();
        resolved.extend(round);
    }
    if resolved.len() != k - 1 || pending.len() != 1 {
        return Err(Error::Unresolvable);
    }

    let mut blocks = resolved;
    blocks.push((1..=n).collect());
    let s = NestedSet::new(n, blocks);
    s.validate_member(n, k)?;
    Ok(s)
}

/// The ordered forward map: each internal vertex of the ordered tree reads
/// its children left to right, giving an admissible internally ordered
/// partition of `[1, n+k-1]` (no block distinguished).
pub fn parens_to_ordered_partition(
    p: &ParenthesizedList,
) -> Result<InternallyOrderedPartition> {
    let t = LevelTree::from_parenthesization(p)?;
    let (n, k) = (t.n(), t.k());
    let blocks: Vec<Vec<usize>> = (n + 1..=n + k).map(|v| t.children(v)).collect();
    Ok(InternallyOrderedPartition::new(n + k - 1, blocks, None))
}

/// The ordered inverse map: reconstructs the ordered tree level by level
/// (as in [`partition_to_nested`], but keeping each block's internal order
/// as the left-to-right order of the children), checks that the label each
/// block received is consistent with the levels of the finished tree, and
/// reads the leaves back off left to right.
pub fn ordered_partition_to_parens(
    q: &InternallyOrderedPartition,
    n: usize,
    k: usize,
) -> Result<ParenthesizedList> {
    Params::new(n, k).validate()?;
    q.validate_member(n + k - 1, k)?;
    if q.distinguished().is_some() {
        return Err(Error::UnexpectedDistinguishedBlock);
    }

    // assigned[j] = the block sequence of the vertex labelled n+1+j;
    // leaf_sets[j] = its ascending leaf set.
    let mut assigned: Vec<&Vec<usize>> = Vec::new();
    let mut leaf_sets: Vec<Vec<usize>> = Vec::new();
    let mut pending: Vec<&Vec<usize>> = q.blocks().iter().collect();
    while assigned.len() < k - 1 {
        let limit = n + assigned.len();
        let (ready, rest): (Vec<&Vec<usize>>, Vec<&Vec<usize>>) = pending
            .into_iter()
            .partition(|b| b.iter().all(|&e| e <= limit));
        if ready.is_empty() {
            return Err(Error::Unresolvable);
        }
        pending = rest;
        let mut round: Vec<(Vec<usize>, &Vec<usize>)> = ready
            .into_iter()
            .map(|block| {
                let mut leaves = Vec::new();
                for &e in block {
                    if e <= n {
                        leaves.push(e);
                    } else {
                        leaves.extend_from_slice(&leaf_sets[e - n - 1]);
                    }
                }
                leaves.sort_unstable();
                (leaves, block)
            })
            .collect();
        round.sort_unstable();
        for (leaves, block) in round {
            leaf_sets.push(leaves);
            assigned.push(block);
        }
    }
    if assigned.len() != k - 1 || pending.len() != 1 {
        return Err(Error::Unresolvable);
    }
    assigned.push(pending[0]);

    let mut parent = vec![None; n + k];
    let mut child_order = vec![Vec::new(); k];
    for (j, block) in assigned.iter().enumerate() {
        let label = n + 1 + j;
        for &e in block.iter() {
            parent[e - 1] = Some(label);
        }
        child_order[j] = (*block).clone();
    }
    let tree = LevelTree::from_parts(n, k, parent, Some(child_order));
    // Converts the uniqueness assertion of the construction into a check:
    // a tree whose labels disagree with its levels signals corrupted input.
    tree.validate()?;

    // Leaves left to right give the permutation; each internal vertex spans
    // an interval of positions.
    let mut perm = Vec::with_capacity(n);
    let mut intervals = Vec::with_capacity(k);
    fn walk(
        tree: &LevelTree,
        v: usize,
        perm: &mut Vec<usize>,
        intervals: &mut Vec<(usize, usize)>,
    ) -> (usize, usize) {
        if tree.is_leaf(v) {
            perm.push(v);
            let pos = perm.len();
            return (pos, pos);
        }
        let mut lo = usize::MAX;
        let mut hi = 0;
        for c in tree.children(v) {
            let (l, r) = walk(tree, c, perm, intervals);
            lo = lo.min(l);
            hi = hi.max(r);
        }
        intervals.push((lo, hi));
        (lo, hi)
    }
    walk(&tree, tree.root(), &mut perm, &mut intervals);

    let result = ParenthesizedList::new(n, perm, intervals);
    result.validate_member(n, k)?;
    Ok(result)
}

/// Expands a coding triple into the distinguished internally ordered
/// partition it encodes.
pub fn decode_triple(t: &Triple) -> Result<InternallyOrderedPartition> {
    t.validate()?;
    let (n, k) = (t.n, t.k);
    let m = n + k - 1;
    let sigma_i = t.sigma_i();

    let in_i: Vec<bool> = {
        let mut mask = vec![false; m + 1];
        for &e in &t.i_list {
            mask[e] = true;
        }
        mask
    };
    let complement: Vec<usize> = (1..=m).filter(|&e| !in_i[e]).collect();

    // Cut positions, extended by n so that every block reads one slice.
    let mut bounds = t.cuts.clone();
    bounds.push(n);

    let mut distinguished = vec![sigma_i[n - 1]];
    distinguished.extend_from_slice(&sigma_i[..bounds[0] - 1]);

    let mut blocks = vec![distinguished];
    for t_idx in 0..k - 1 {
        let (from, to) = (bounds[t_idx], bounds[t_idx + 1]);
        let mut block = vec![complement[t_idx]];
        block.extend_from_slice(&sigma_i[from - 1..to - 1]);
        blocks.push(block);
    }
    Ok(InternallyOrderedPartition::new(m, blocks, Some(0)))
}

/// Reads the coding triple back off a distinguished internally ordered
/// partition. The non-distinguished blocks' heads (their first elements in
/// the internal order) form the complement of `I`; the permuted list walks
/// the distinguished block's tail, then every other block's tail, and ends
/// on the distinguished block's head.
pub fn encode_triple(
    q: &InternallyOrderedPartition,
    n: usize,
    k: usize,
) -> Result<Triple> {
    Params::new(n, k).validate()?;
    let m = n + k - 1;
    q.validate_member(m, k)?;
    let d = q.distinguished().ok_or(Error::NoDistinguishedBlock)?;

    let marked = &q.blocks()[d];
    let others: Vec<&Vec<usize>> = q
        .blocks()
        .iter()
        .enumerate()
        .filter(|&(i, _)| i != d)
        .map(|(_, b)| b)
        .collect();

    let heads: Vec<usize> = others.iter().map(|b| b[0]).collect();
    let in_heads = {
        let mut mask = vec![false; m + 1];
        for &h in &heads {
            mask[h] = true;
        }
        mask
    };
    let i_list: Vec<usize> = (1..=m).filter(|&e| !in_heads[e]).collect();

    let mut sigma_i: Vec<usize> = marked[1..].to_vec();
    for b in &others {
        sigma_i.extend_from_slice(&b[1..]);
    }
    sigma_i.push(marked[0]);

    let sigma: Vec<usize> = sigma_i
        .iter()
        .map(|v| i_list.binary_search(v).expect("sigma I lists I") + 1)
        .collect();

    let mut cuts = Vec::with_capacity(k - 1);
    if k > 1 {
        let mut d_t = marked.len();
        cuts.push(d_t);
        for b in &others[..k - 2] {
            d_t += b.len() - 1;
            cuts.push(d_t);
        }
    }

    let triple = Triple::new(n, k, i_list, sigma, cuts);
    triple.validate()?;
    Ok(triple)
}

/// The action of a permutation `g` of `[1, n+k-1]` on `S_2(n, k)` induced
/// by the partition bijection: map the nested set forward, let `g` act on
/// the partition elementwise, and map back.
pub fn induced_action(g: &[usize], s: &NestedSet) -> Result<NestedSet> {
    let (n, k) = (s.n(), s.k());
    let m = n + k - 1;
    if g.len() != m {
        return Err(Error::NotAPermutation);
    }
    let mut seen = vec![false; m + 1];
    for &v in g {
        if v < 1 || v > m || seen[v] {
            return Err(Error::NotAPermutation);
        }
        seen[v] = true;
    }
    let p = nested_to_partition(s)?;
    let moved: Vec<Vec<usize>> = p
        .blocks()
        .iter()
        .map(|b| b.iter().map(|&e| g[e - 1]).collect())
        .collect();
    partition_to_nested(&Partition2::new(m, moved), n, k)
}
