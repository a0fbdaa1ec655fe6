use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A partition of `[1, m]` whose blocks carry a total order, written as
/// element sequences. Admissible when every block has >= 2 elements.
/// Optionally one block is distinguished.
///
/// Blocks are indexed by ascending first element (the head with respect to
/// the internal order, not the numeric minimum); `distinguished` is an index
/// into that ordering.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(from = "RawIop")]
pub struct InternallyOrderedPartition {
    m: usize,
    blocks: Vec<Vec<usize>>,
    distinguished: Option<usize>,
}

#[derive(Deserialize)]
struct RawIop {
    m: usize,
    blocks: Vec<Vec<usize>>,
    #[serde(default)]
    distinguished: Option<usize>,
}

impl From<RawIop> for InternallyOrderedPartition {
    fn from(raw: RawIop) -> Self {
        InternallyOrderedPartition::new(raw.m, raw.blocks, raw.distinguished)
    }
}

impl InternallyOrderedPartition {
    /// Sorts blocks by head element, remapping `distinguished` to follow the
    /// block it names. Element order inside each block is preserved.
    pub fn new(
        m: usize,
        blocks: Vec<Vec<usize>>,
        distinguished: Option<usize>,
    ) -> InternallyOrderedPartition {
        let mut indexed: Vec<(usize, Vec<usize>)> = blocks.into_iter().enumerate().collect();
        indexed.sort_by_key(|(_, b)| (b.first().copied().unwrap_or(0), b.clone()));
        let distinguished = distinguished.and_then(|d| indexed.iter().position(|&(i, _)| i == d));
        InternallyOrderedPartition {
            m,
            blocks: indexed.into_iter().map(|(_, b)| b).collect(),
            distinguished,
        }
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn k(&self) -> usize {
        self.blocks.len()
    }

    /// Blocks in head order; each block is its element sequence.
    pub fn blocks(&self) -> &[Vec<usize>] {
        &self.blocks
    }

    pub fn distinguished(&self) -> Option<usize> {
        self.distinguished
    }

    pub fn distinguished_block(&self) -> Option<&[usize]> {
        self.distinguished.map(|d| self.blocks[d].as_slice())
    }

    /// Drops the distinguished mark, keeping the blocks.
    pub fn forget_distinguished(&self) -> InternallyOrderedPartition {
        InternallyOrderedPartition {
            m: self.m,
            blocks: self.blocks.clone(),
            distinguished: None,
        }
    }

    /// Marks the block at `index` (in head order) as distinguished.
    pub fn with_distinguished(&self, index: usize) -> Result<InternallyOrderedPartition> {
        if index >= self.blocks.len() {
            return Err(Error::BadDistinguishedIndex);
        }
        Ok(InternallyOrderedPartition {
            m: self.m,
            blocks: self.blocks.clone(),
            distinguished: Some(index),
        })
    }

    pub fn validate(&self) -> Result<()> {
        if self.m < 2 {
            return Err(Error::NTooSmall);
        }
        let mut seen = vec![false; self.m + 1];
        for b in &self.blocks {
            if b.len() < 2 {
                return Err(Error::BlockTooSmall);
            }
            for &e in b {
                if e < 1 || e > self.m {
                    return Err(Error::ElementOutOfRange {
                        element: e,
                        ground: self.m,
                    });
                }
                if seen[e] {
                    return Err(Error::NotAPartition);
                }
                seen[e] = true;
            }
        }
        if seen[1..].iter().any(|covered| !covered) {
            return Err(Error::NotAPartition);
        }
        if let Some(d) = self.distinguished {
            if d >= self.blocks.len() {
                return Err(Error::BadDistinguishedIndex);
            }
        }
        Ok(())
    }

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
