//! Oriented rooted trees with labelled leaves `1..=n` and internal labels
//! `n+1..=n+k` assigned by level, then by minimal leaf value.
//!
//! The level of a vertex is the maximal length of an oriented path from the
//! vertex to a leaf (leaves are level 0). Internal labels ascend with level;
//! within one level they ascend with the minimal element of the vertex's
//! leaf set. The root therefore always carries the label `n+k`.

use crate::error::{Error, Result};
use crate::types::{NestedSet, ParenthesizedList};

/// A labelled rooted tree. `parent[v-1]` is the parent label of vertex `v`
/// (`None` for the root `n+k`). `child_order`, when present, lists each
/// internal vertex's children left to right and is what distinguishes the
/// ordered trees of the parenthesization pipeline from the unordered ones.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LevelTree {
    n: usize,
    k: usize,
    parent: Vec<Option<usize>>,
    child_order: Option<Vec<Vec<usize>>>,
}

impl LevelTree {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn root(&self) -> usize {
        self.n + self.k
    }

    pub fn is_leaf(&self, label: usize) -> bool {
        label <= self.n
    }

    pub fn parent(&self, label: usize) -> Option<usize> {
        self.parent[label - 1]
    }

    /// Children of `label`, in `child_order` if set, otherwise ascending.
    pub fn children(&self, label: usize) -> Vec<usize> {
        if let Some(orders) = &self.child_order {
            if label > self.n {
                return orders[label - self.n - 1].clone();
            }
        }
        (1..=self.n + self.k)
            .filter(|&v| self.parent[v - 1] == Some(label))
            .collect()
    }

    pub fn has_child_order(&self) -> bool {
        self.child_order.is_some()
    }

    /// Level of every vertex, indexed by `label - 1`.
    pub fn levels(&self) -> Vec<usize> {
        let total = self.n + self.k;
        let mut levels = vec![0usize; total];
        // Relax parents to a fixpoint; the trees are tiny.
        let mut changed = true;
        while changed {
            changed = false;
            for v in 1..=total {
                if let Some(p) = self.parent[v - 1] {
                    if levels[p - 1] < levels[v - 1] + 1 {
                        levels[p - 1] = levels[v - 1] + 1;
                        changed = true;
                    }
                }
            }
        }
        levels
    }

    /// Ascending leaf labels in the subtree of `label`.
    pub fn leaf_set(&self, label: usize) -> Vec<usize> {
        let mut leaves = Vec::new();
        let mut stack = vec![label];
        while let Some(v) = stack.pop() {
            if self.is_leaf(v) {
                leaves.push(v);
            } else {
                stack.extend(self.children(v));
            }
        }
        leaves.sort_unstable();
        leaves
    }

    pub fn validate(&self) -> Result<()> {
        let (n, k) = (self.n, self.k);
        if n < 2 {
            return Err(Error::NTooSmall);
        }
        if k < 1 {
            return Err(Error::KTooSmall);
        }
        let total = n + k;
        if self.parent.len() != total {
            return Err(Error::MalformedTree("parent map has wrong size".into()));
        }
        if self.parent[total - 1].is_some() {
            return Err(Error::MalformedTree("root must have no parent".into()));
        }
        for v in 1..total {
            match self.parent[v - 1] {
                None => {
                    return Err(Error::MalformedTree(format!(
                        "vertex {v} has no parent"
                    )))
                }
                Some(p) if p <= n || p > total => {
                    return Err(Error::MalformedTree(format!(
                        "vertex {v} has non-internal parent {p}"
                    )))
                }
                _ => {}
            }
        }
        // Acyclic: every vertex reaches the root within n+k steps.
        for v in 1..=total {
            let mut cur = v;
            let mut steps = 0;
            while let Some(p) = self.parent[cur - 1] {
                cur = p;
                steps += 1;
                if steps > total {
                    return Err(Error::MalformedTree("cycle in parent map".into()));
                }
            }
            if cur != total {
                return Err(Error::MalformedTree(format!(
                    "vertex {v} does not reach the root"
                )));
            }
        }
        let mut children = vec![Vec::new(); total];
        for v in 1..total {
            children[self.parent[v - 1].unwrap() - 1].push(v);
        }
        for v in n + 1..=total {
            if children[v - 1].len() < 2 {
                return Err(Error::MalformedTree(format!(
                    "internal vertex {v} has fewer than two children"
                )));
            }
        }
        if let Some(orders) = &self.child_order {
            if orders.len() != k {
                return Err(Error::MalformedTree("child_order has wrong size".into()));
            }
            for v in n + 1..=total {
                let mut listed = orders[v - n - 1].clone();
                listed.sort_unstable();
                if listed != children[v - 1] {
                    return Err(Error::MalformedTree(format!(
                        "child_order of vertex {v} does not list its children"
                    )));
                }
            }
        }
        // Labels must ascend with (level, min leaf).
        let levels = self.levels();
        let keys: Vec<(usize, usize)> = (n + 1..=total)
            .map(|v| (levels[v - 1], self.leaf_set(v)[0]))
            .collect();
        for pair in keys.windows(2) {
            if pair[0] >= pair[1] {
                return Err(Error::LabelMismatch);
            }
        }
        Ok(())
    }

    /// The Hasse diagram of the nested set together with the singletons,
    /// with internal labels assigned by level then minimal element.
    pub fn from_nested_set(s: &NestedSet) -> Result<LevelTree> {
        s.validate()?;
        let n = s.n();
        let k = s.k();
        if k > n - 1 {
            return Err(Error::KTooLarge);
        }
        let blocks = s.blocks();

        // Minimal strict container of each block, by laminarity unique.
        let container_of = |inner: &[usize], skip: usize| -> Option<usize> {
            blocks
                .iter()
                .enumerate()
                .filter(|&(j, outer)| {
                    j != skip
                        && outer.len() > inner.len()
                        && inner.iter().all(|e| outer.binary_search(e).is_ok())
                })
                .min_by_key(|(_, outer)| outer.len())
                .map(|(j, _)| j)
        };
        let block_parent: Vec<Option<usize>> = blocks
            .iter()
            .enumerate()
            .map(|(i, b)| container_of(b, i))
            .collect();
        let leaf_parent: Vec<usize> = (1..=n)
            .map(|e| {
                blocks
                    .iter()
                    .enumerate()
                    .filter(|(_, b)| b.binary_search(&e).is_ok())
                    .min_by_key(|(_, b)| b.len())
                    .map(|(j, _)| j)
                    .expect("full set contains every element")
            })
            .collect();

        // Levels over block indices: leaf children contribute 0.
        let mut block_children: Vec<Vec<usize>> = vec![Vec::new(); k];
        for (i, p) in block_parent.iter().enumerate() {
            if let Some(p) = p {
                block_children[*p].push(i);
            }
        }
        let mut level = vec![0usize; k];
        let mut order: Vec<usize> = (0..k).collect();
        order.sort_by_key(|&i| blocks[i].len());
        for i in order {
            level[i] = block_children[i]
                .iter()
                .map(|&c| level[c] + 1)
                .max()
                .unwrap_or(1);
        }

        // Labels: by (level, min element).
        let mut by_label: Vec<usize> = (0..k).collect();
        by_label.sort_by_key(|&i| (level[i], blocks[i][0]));
        let mut label_of = vec![0usize; k];
        for (offset, &i) in by_label.iter().enumerate() {
            label_of[i] = n + 1 + offset;
        }

        let mut parent = vec![None; n + k];
        for e in 1..=n {
            parent[e - 1] = Some(label_of[leaf_parent[e - 1]]);
        }
        for (i, p) in block_parent.iter().enumerate() {
            parent[label_of[i] - 1] = p.map(|p| label_of[p]);
        }
        Ok(LevelTree {
            n,
            k,
            parent,
            child_order: None,
        })
    }

    /// Inverse reading of the Hasse diagram: the leaf sets of the internal
    /// vertices.
    pub fn to_nested_set(&self) -> Result<NestedSet> {
        self.validate()?;
        let blocks: Vec<Vec<usize>> = (self.n + 1..=self.n + self.k)
            .map(|v| self.leaf_set(v))
            .collect();
        Ok(NestedSet::new(self.n, blocks))
    }

    /// The ordered tree of a parenthesized list: leaves are drawn left to
    /// right following the list, and each internal vertex remembers its
    /// children in that drawing order. Labels are assigned exactly as in
    /// [`LevelTree::from_nested_set`], over leaf-value sets.
    pub fn from_parenthesization(p: &ParenthesizedList) -> Result<LevelTree> {
        p.validate()?;
        let n = p.n();
        let k = p.k();
        if k > n - 1 {
            return Err(Error::KTooLarge);
        }
        let intervals = p.intervals();
        let perm = p.perm();

        let contains =
            |outer: (usize, usize), inner: (usize, usize)| outer.0 <= inner.0 && inner.1 <= outer.1;
        let interval_parent: Vec<Option<usize>> = intervals
            .iter()
            .enumerate()
            .map(|(i, &iv)| {
                intervals
                    .iter()
                    .enumerate()
                    .filter(|&(j, &outer)| j != i && outer != iv && contains(outer, iv))
                    .min_by_key(|(_, outer)| outer.1 - outer.0)
                    .map(|(j, _)| j)
            })
            .collect();
        let position_parent: Vec<usize> = (1..=n)
            .map(|pos| {
                intervals
                    .iter()
                    .enumerate()
                    .filter(|(_, &(l, r))| l <= pos && pos <= r)
                    .min_by_key(|(_, &(l, r))| r - l)
                    .map(|(j, _)| j)
                    .expect("maximal interval contains every position")
            })
            .collect();

        let mut interval_children: Vec<Vec<usize>> = vec![Vec::new(); k];
        for (i, p) in interval_parent.iter().enumerate() {
            if let Some(p) = p {
                interval_children[*p].push(i);
            }
        }
        let mut level = vec![0usize; k];
        let mut order: Vec<usize> = (0..k).collect();
        order.sort_by_key(|&i| intervals[i].1 - intervals[i].0);
        for i in order {
            level[i] = interval_children[i]
                .iter()
                .map(|&c| level[c] + 1)
                .max()
                .unwrap_or(1);
        }

        // Min leaf value inside each interval.
        let min_value = |&(l, r): &(usize, usize)| -> usize {
            perm[l - 1..r].iter().copied().min().unwrap()
        };
        let mut by_label: Vec<usize> = (0..k).collect();
        by_label.sort_by_key(|&i| (level[i], min_value(&intervals[i])));
        let mut label_of = vec![0usize; k];
        for (offset, &i) in by_label.iter().enumerate() {
            label_of[i] = n + 1 + offset;
        }

        let mut parent = vec![None; n + k];
        for pos in 1..=n {
            let value = perm[pos - 1];
            parent[value - 1] = Some(label_of[position_parent[pos - 1]]);
        }
        for (i, p) in interval_parent.iter().enumerate() {
            parent[label_of[i] - 1] = p.map(|p| label_of[p]);
        }

        // Children left to right: direct positions and child intervals,
        // merged by starting position.
        let mut child_order = vec![Vec::new(); k];
        for (i, &(l, r)) in intervals.iter().enumerate() {
            let mut entries: Vec<(usize, usize)> = Vec::new();
            for pos in l..=r {
                if position_parent[pos - 1] == i {
                    entries.push((pos, perm[pos - 1]));
                }
            }
            for &c in &interval_children[i] {
                entries.push((intervals[c].0, label_of[c]));
            }
            entries.sort_unstable();
            child_order[label_of[i] - n - 1] = entries.into_iter().map(|(_, lab)| lab).collect();
        }

        Ok(LevelTree {
            n,
            k,
            parent,
            child_order: Some(child_order),
        })
    }

    /// Rebuild a tree from explicit parts. Used by the inverse bijections;
    /// the caller is expected to `validate` afterwards.
    pub(crate) fn from_parts(
        n: usize,
        k: usize,
        parent: Vec<Option<usize>>,
        child_order: Option<Vec<Vec<usize>>>,
    ) -> LevelTree {
        LevelTree {
            n,
            k,
            parent,
            child_order,
        }
    }

    /// DOT export for debugging: one node per vertex with its level, edges
    /// from parent to child, children kept in order when known.
    pub fn to_dot(&self) -> String {
        let levels = self.levels();
        let mut out = String::from("digraph tree {\n");
        for v in 1..=self.n + self.k {
            let shape = if self.is_leaf(v) { "plaintext" } else { "ellipse" };
            out.push_str(&format!(
                "  v{v} [label=\"{v} (level {})\", shape={shape}];\n",
                levels[v - 1]
            ));
        }
        for v in self.n + 1..=self.n + self.k {
            for c in self.children(v) {
                out.push_str(&format!("  v{v} -> v{c};\n"));
            }
        }
        out.push_str("}\n");
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn hand_labelled_example() {
        let s = NestedSet::new(4, vec![vec![1, 2, 3, 4], vec![1, 2], vec![3, 4]]);
        let t = LevelTree::from_nested_set(&s).unwrap();
        assert!(t.validate().is_ok());
        assert_eq!(t.leaf_set(5), vec![1, 2]);
        assert_eq!(t.leaf_set(6), vec![3, 4]);
        assert_eq!(t.leaf_set(7), vec![1, 2, 3, 4]);
        assert_eq!(t.parent(1), Some(5));
        assert_eq!(t.parent(2), Some(5));
        assert_eq!(t.parent(3), Some(6));
        assert_eq!(t.parent(4), Some(6));
        assert_eq!(t.parent(5), Some(7));
        assert_eq!(t.parent(6), Some(7));
        assert_eq!(t.parent(7), None);
    }

    #[test]
    fn levels_use_longest_path() {
        // {2,3,4} covers both the leaf 4 and the vertex {2,3}; its level is
        // the longest way down, which is 2.
        let s = NestedSet::new(5, vec![vec![1, 2, 3, 4, 5], vec![2, 3], vec![2, 3, 4]]);
        let t = LevelTree::from_nested_set(&s).unwrap();
        let levels = t.levels();
        assert_eq!(t.leaf_set(6), vec![2, 3]);
        assert_eq!(t.leaf_set(7), vec![2, 3, 4]);
        assert_eq!(t.leaf_set(8), vec![1, 2, 3, 4, 5]);
        assert_eq!(levels[5], 1);
        assert_eq!(levels[6], 2);
        assert_eq!(levels[7], 3);
    }

    #[test]
    fn single_block_tree() {
        let s = NestedSet::new(2, vec![vec![1, 2]]);
        let t = LevelTree::from_nested_set(&s).unwrap();
        assert_eq!(t.root(), 3);
        assert_eq!(t.children(3), vec![1, 2]);
    }

    #[test]
    fn nested_set_round_trip() {
        let s = NestedSet::new(5, vec![vec![1, 2, 3, 4, 5], vec![2, 3], vec![2, 3, 4]]);
        let t = LevelTree::from_nested_set(&s).unwrap();
        assert_eq!(t.to_nested_set().unwrap(), s);
        let single = NestedSet::new(6, vec![(1..=6).collect()]);
        let t = LevelTree::from_nested_set(&single).unwrap();
        assert_eq!(t.to_nested_set().unwrap(), single);
    }

    #[test]
    fn ordered_tree_from_parenthesization() {
        let p = ParenthesizedList::new(3, vec![2, 3, 1], vec![(1, 3), (1, 2)]);
        let t = LevelTree::from_parenthesization(&p).unwrap();
        assert!(t.validate().is_ok());
        assert_eq!(t.children(4), vec![2, 3]);
        assert_eq!(t.children(5), vec![4, 1]);
    }

    #[test]
    fn ordered_tree_interleaves_leaves_and_intervals() {
        let p = ParenthesizedList::new(4, vec![3, 1, 2, 4], vec![(1, 4), (2, 3)]);
        let t = LevelTree::from_parenthesization(&p).unwrap();
        assert_eq!(t.children(5), vec![1, 2]);
        assert_eq!(t.children(6), vec![3, 5, 4]);
    }

    #[test]
    fn trivial_ordered_tree() {
        let p = ParenthesizedList::new(2, vec![1, 2], vec![(1, 2)]);
        let t = LevelTree::from_parenthesization(&p).unwrap();
        assert_eq!(t.children(3), vec![1, 2]);
    }

    #[test]
    fn dot_export_mentions_every_vertex() {
        let s = NestedSet::new(4, vec![vec![1, 2, 3, 4], vec![1, 2]]);
        let dot = LevelTree::from_nested_set(&s).unwrap().to_dot();
        for v in 1..=6 {
            assert!(dot.contains(&format!("v{v} ")));
        }
        assert!(dot.contains("v6 -> v5;"));
    }
}
