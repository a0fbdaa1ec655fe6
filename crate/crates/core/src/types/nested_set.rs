use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

use super::{block_sort_key, check_block, nested_or_disjoint};

/// A family of subsets of `[1, n]`, each of cardinality >= 2, pairwise
/// nested or disjoint, containing `[1, n]` itself.
///
/// Blocks are stored as ascending element lists, sorted by
/// (min element, size); this is also the canonical JSON form.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(from = "RawNestedSet")]
pub struct NestedSet {
    n: usize,
    blocks: Vec<Vec<usize>>,
}

#[derive(Deserialize)]
struct RawNestedSet {
    n: usize,
    blocks: Vec<Vec<usize>>,
}

impl From<RawNestedSet> for NestedSet {
    fn from(raw: RawNestedSet) -> Self {
        NestedSet::new(raw.n, raw.blocks)
    }
}

impl NestedSet {
    /// Canonicalizes block and element order; does not validate.
    pub fn new<I>(n: usize, blocks: I) -> NestedSet
    where
        I: IntoIterator<Item = Vec<usize>>,
    {
        let mut blocks: Vec<Vec<usize>> = blocks.into_iter().collect();
        for b in &mut blocks {
            b.sort_unstable();
        }
        blocks.sort_by_key(|b| block_sort_key(b));
        NestedSet { n, blocks }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn k(&self) -> usize {
        self.blocks.len()
    }

    pub fn blocks(&self) -> &[Vec<usize>] {
        &self.blocks
    }

    pub fn validate(&self) -> Result<()> {
        if self.n < 2 {
            return Err(Error::NTooSmall);
        }
        for b in &self.blocks {
            check_block(b, self.n)?;
        }
        for w in self.blocks.windows(2) {
            if w[0] == w[1] {
                return Err(Error::DuplicateBlock);
            }
        }
        let full: Vec<usize> = (1..=self.n).collect();
        if !self.blocks.contains(&full) {
            return Err(Error::MissingFullSet);
        }
        for (i, a) in self.blocks.iter().enumerate() {
            for b in &self.blocks[i + 1..] {
                if !nested_or_disjoint(a, b) {
                    return Err(Error::NotNested);
                }
            }
        }
        Ok(())
    }

    /// Validation plus the size-k membership check for `S_2(n, k)`.
    pub fn validate_member(&self, n: usize, k: usize) -> Result<()> {
        self.validate()?;
        if self.n != n {
            return Err(Error::GroundSizeMismatch {
                expected: n,
                found: self.n,
            });
        }
        if self.blocks.len() != k {
            return Err(Error::BlockCountMismatch {
                expected: k,
                found: self.blocks.len(),
            });
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn validate_accepts_nested_family() {
        let s = NestedSet::new(4, vec![vec![1, 2, 3, 4], vec![1, 2], vec![3, 4]]);
        assert!(s.validate().is_ok());
    }

    #[test]
    fn validate_rejects_missing_full_set() {
        let s = NestedSet::new(4, vec![vec![1, 2], vec![3, 4]]);
        assert_eq!(s.validate(), Err(Error::MissingFullSet));
    }

    #[test]
    fn validate_rejects_partial_overlap() {
        let s = NestedSet::new(4, vec![vec![1, 2, 3, 4], vec![1, 2], vec![2, 3]]);
        assert_eq!(s.validate(), Err(Error::NotNested));
    }

    #[test]
    fn validate_rejects_small_block() {
        let s = NestedSet::new(4, vec![vec![1, 2, 3, 4], vec![3]]);
        assert_eq!(s.validate(), Err(Error::BlockTooSmall));
    }

    #[test]
    fn canonical_block_order_is_min_then_size() {
        let s = NestedSet::new(
            9,
            vec![
                (1..=9).collect(),
                vec![5, 3, 1, 9, 2],
                vec![5, 1, 3],
            ],
        );
        assert_eq!(
            s.blocks(),
            &[
                vec![1, 3, 5],
                vec![1, 2, 3, 5, 9],
                vec![1, 2, 3, 4, 5, 6, 7, 8, 9]
            ]
        );
    }

    #[test]
    fn json_is_canonical() {
        let s = NestedSet::new(4, vec![vec![3, 4], vec![4, 3, 2, 1], vec![2, 1]]);
        let json = serde_json::to_string(&s).unwrap();
        assert_eq!(json, r#"{"n":4,"blocks":[[1,2],[1,2,3,4],[3,4]]}"#);
        let back: NestedSet = serde_json::from_str(&json).unwrap();
        assert_eq!(back, s);
    }
}
