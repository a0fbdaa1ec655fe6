use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

use super::{block_sort_key, check_block};

/// A partition of `[1, m]` into blocks of cardinality >= 2 (the family
/// `T_2(m, k)` when there are exactly `k` blocks).
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(from = "RawPartition2")]
pub struct Partition2 {
    m: usize,
    blocks: Vec<Vec<usize>>,
}

#[derive(Deserialize)]
struct RawPartition2 {
    m: usize,
    blocks: Vec<Vec<usize>>,
}

impl From<RawPartition2> for Partition2 {
    fn from(raw: RawPartition2) -> Self {
        Partition2::new(raw.m, raw.blocks)
    }
}

impl Partition2 {
    /// Canonicalizes block and element order; does not validate.
    pub fn new<I>(m: usize, blocks: I) -> Partition2
    where
        I: IntoIterator<Item = Vec<usize>>,
    {
        let mut blocks: Vec<Vec<usize>> = blocks.into_iter().collect();
        for b in &mut blocks {
            b.sort_unstable();
        }
        blocks.sort_by_key(|b| block_sort_key(b));
        Partition2 { m, blocks }
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn k(&self) -> usize {
        self.blocks.len()
    }

    pub fn blocks(&self) -> &[Vec<usize>] {
        &self.blocks
    }

    pub fn validate(&self) -> Result<()> {
        if self.m < 2 {
            return Err(Error::NTooSmall);
        }
        let mut seen = vec![false; self.m + 1];
        for b in &self.blocks {
            check_block(b, self.m)?;
            for &e in b {
                if seen[e] {
                    return Err(Error::NotAPartition);
                }
                seen[e] = true;
            }
        }
        if seen[1..].iter().any(|covered| !covered) {
            return Err(Error::NotAPartition);
        }
        Ok(())
    }

    /// Validation plus the membership check for `T_2(m, k)`.
    pub fn validate_member(&self, m: usize, k: usize) -> Result<()> {
        self.validate()?;
        if self.m != m {
            return Err(Error::GroundSizeMismatch {
                expected: m,
                found: self.m,
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
    fn validate_accepts_pairing() {
        let p = Partition2::new(4, vec![vec![1, 3], vec![2, 4]]);
        assert!(p.validate().is_ok());
    }

    #[test]
    fn validate_rejects_uncovered_element() {
        let p = Partition2::new(5, vec![vec![1, 3], vec![2, 4]]);
        assert_eq!(p.validate(), Err(Error::NotAPartition));
    }

    #[test]
    fn validate_rejects_overlap() {
        let p = Partition2::new(4, vec![vec![1, 2, 3], vec![3, 4]]);
        assert_eq!(p.validate(), Err(Error::NotAPartition));
    }

    #[test]
    fn validate_rejects_singleton_block() {
        let p = Partition2::new(3, vec![vec![1, 2], vec![3]]);
        assert_eq!(p.validate(), Err(Error::BlockTooSmall));
    }

    #[test]
    fn json_round_trip() {
        let p = Partition2::new(6, vec![vec![5, 6], vec![2, 1], vec![4, 3]]);
        let json = serde_json::to_string(&p).unwrap();
        assert_eq!(json, r#"{"m":6,"blocks":[[1,2],[3,4],[5,6]]}"#);
        assert_eq!(serde_json::from_str::<Partition2>(&json).unwrap(), p);
    }
}
