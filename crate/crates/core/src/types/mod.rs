//! Domain types, canonical orderings and validation.
//!
//! Every ground set is `[1, n]` (or `[1, m]`); elements are 1-based
//! throughout. Construction only canonicalizes the representation (element
//! and block ordering); [`validate`](NestedSet::validate) is a separate,
//! explicit step so that malformed objects can be built, inspected and
//! rejected with a precise error.

mod iop;
mod nested_set;
mod parens;
mod partition2;
mod triple;

pub use iop::InternallyOrderedPartition;
pub use nested_set::NestedSet;
pub use parens::ParenthesizedList;
pub use partition2::Partition2;
pub use triple::Triple;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Size parameters shared by all the bijections: a ground list of size `n`
/// and a nested-set size / block count `k`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Params {
    pub n: usize,
    pub k: usize,
}

impl Params {
    pub fn new(n: usize, k: usize) -> Params {
        Params { n, k }
    }

    /// `n >= 2`, `1 <= k <= n-1`.
    pub fn validate(&self) -> Result<()> {
        if self.n < 2 {
            return Err(Error::NTooSmall);
        }
        if self.k < 1 {
            return Err(Error::KTooSmall);
        }
        if self.k > self.n - 1 {
            return Err(Error::KTooLarge);
        }
        Ok(())
    }

    /// Ground size of the partition side of the bijections.
    pub fn ground(&self) -> usize {
        self.n + self.k - 1
    }
}

/// Outcome of comparing two sets by their minimal elements.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BlockOrder {
    Less,
    Greater,
    /// Equal minima. Cannot occur within a family of pairwise disjoint sets.
    Incomparable,
}

/// Compare two nonempty sets by minimal element. Restricted to any family
/// of pairwise disjoint sets this is a strict total order.
pub fn block_order(a: &[usize], b: &[usize]) -> Result<BlockOrder> {
    let min_a = a.iter().min().ok_or(Error::EmptySet)?;
    let min_b = b.iter().min().ok_or(Error::EmptySet)?;
    Ok(match min_a.cmp(min_b) {
        std::cmp::Ordering::Less => BlockOrder::Less,
        std::cmp::Ordering::Greater => BlockOrder::Greater,
        std::cmp::Ordering::Equal => BlockOrder::Incomparable,
    })
}

/// Sort key used for serializing families of blocks: (min element, size),
/// with the full element list as a deterministic tiebreak.
pub(crate) fn block_sort_key(block: &[usize]) -> (usize, usize, Vec<usize>) {
    let min = block.first().copied().unwrap_or(0);
    (min, block.len(), block.to_vec())
}

/// Check that `block` (already sorted ascending) is a set of >= 2 elements
/// inside `[1, ground]`.
pub(crate) fn check_block(block: &[usize], ground: usize) -> Result<()> {
    if block.len() < 2 {
        return Err(Error::BlockTooSmall);
    }
    for window in block.windows(2) {
        if window[0] == window[1] {
            return Err(Error::DuplicateElement);
        }
    }
    for &e in block {
        if e < 1 || e > ground {
            return Err(Error::ElementOutOfRange {
                element: e,
                ground,
            });
        }
    }
    Ok(())
}

/// True iff the two sorted sets are comparable by inclusion or disjoint.
pub(crate) fn nested_or_disjoint(a: &[usize], b: &[usize]) -> bool {
    let sa: std::collections::BTreeSet<usize> = a.iter().copied().collect();
    let sb: std::collections::BTreeSet<usize> = b.iter().copied().collect();
    sa.is_subset(&sb) || sb.is_subset(&sa) || sa.is_disjoint(&sb)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn params_bounds() {
        assert!(Params::new(2, 1).validate().is_ok());
        assert!(Params::new(7, 6).validate().is_ok());
        assert_eq!(Params::new(1, 1).validate(), Err(Error::NTooSmall));
        assert_eq!(Params::new(5, 0).validate(), Err(Error::KTooSmall));
        assert_eq!(Params::new(5, 5).validate(), Err(Error::KTooLarge));
    }

    #[test]
    fn block_order_examples() {
        assert_eq!(block_order(&[3, 4], &[1, 2]).unwrap(), BlockOrder::Greater);
        assert_eq!(block_order(&[1, 5], &[2, 3]).unwrap(), BlockOrder::Less);
        assert_eq!(
            block_order(&[2, 7], &[2, 4]).unwrap(),
            BlockOrder::Incomparable
        );
        assert_eq!(block_order(&[], &[1]), Err(Error::EmptySet));
    }

    #[test]
    fn block_order_total_on_disjoint_families() {
        // Pairwise disjoint blocks have pairwise distinct minima.
        let family = [vec![4, 9], vec![1, 3], vec![2, 6], vec![5, 7, 8]];
        for (i, a) in family.iter().enumerate() {
            for (j, b) in family.iter().enumerate() {
                if i == j {
                    continue;
                }
                assert_ne!(block_order(a, b).unwrap(), BlockOrder::Incomparable);
            }
        }
    }
}
