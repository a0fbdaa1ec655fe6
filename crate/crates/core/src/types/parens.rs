use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A parenthesization of a list: a permutation of `1..=n` (the leaf values
/// left to right) together with a family of position intervals `[l, r]`,
/// pairwise nested or disjoint, each spanning >= 2 positions and including
/// the maximal interval `[1, n]`.
///
/// Intervals are positions over the permuted list, not values; the string
/// grammar lives in the CLI.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(from = "RawParenthesizedList")]
pub struct ParenthesizedList {
    n: usize,
    perm: Vec<usize>,
    intervals: Vec<(usize, usize)>,
}

#[derive(Deserialize)]
struct RawParenthesizedList {
    n: usize,
    perm: Vec<usize>,
    intervals: Vec<(usize, usize)>,
}

impl From<RawParenthesizedList> for ParenthesizedList {
    fn from(raw: RawParenthesizedList) -> Self {
        ParenthesizedList::new(raw.n, raw.perm, raw.intervals)
    }
}

impl ParenthesizedList {
    /// Canonicalizes interval order; does not validate.
    pub fn new<I>(n: usize, perm: Vec<usize>, intervals: I) -> ParenthesizedList
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut intervals: Vec<(usize, usize)> = intervals.into_iter().collect();
        intervals.sort_unstable();
        ParenthesizedList { n, perm, intervals }
    }

    /// The identity list `1, 2, ..., n` with the given intervals.
    pub fn identity<I>(n: usize, intervals: I) -> ParenthesizedList
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        ParenthesizedList::new(n, (1..=n).collect(), intervals)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn k(&self) -> usize {
        self.intervals.len()
    }

    /// Leaf values left to right.
    pub fn perm(&self) -> &[usize] {
        &self.perm
    }

    /// Position intervals, sorted by (left end, right end).
    pub fn intervals(&self) -> &[(usize, usize)] {
        &self.intervals
    }

    pub fn is_identity_perm(&self) -> bool {
        self.perm.iter().enumerate().all(|(i, &v)| v == i + 1)
    }

    /// The set of leaf values at positions `l..=r`.
    pub fn values_in(&self, interval: (usize, usize)) -> Vec<usize> {
        let mut vals: Vec<usize> = self.perm[interval.0 - 1..interval.1].to_vec();
        vals.sort_unstable();
        vals
    }

    pub fn validate(&self) -> Result<()> {
        if self.n < 2 {
            return Err(Error::NTooSmall);
        }
        if self.perm.len() != self.n {
            return Err(Error::NotAPermutation);
        }
        let mut seen = vec![false; self.n + 1];
        for &v in &self.perm {
            if v < 1 || v > self.n || seen[v] {
                return Err(Error::NotAPermutation);
            }
            seen[v] = true;
        }
        for &(l, r) in &self.intervals {
            if l < 1 || r > self.n {
                return Err(Error::BadInterval);
            }
            if r < l + 1 {
                return Err(Error::BlockTooSmall);
            }
        }
        for w in self.intervals.windows(2) {
            if w[0] == w[1] {
                return Err(Error::DuplicateBlock);
            }
        }
        if !self.intervals.contains(&(1, self.n)) {
            return Err(Error::MissingFullInterval);
        }
        for (i, &(al, ar)) in self.intervals.iter().enumerate() {
            for &(bl, br) in &self.intervals[i + 1..] {
                let nested = (al <= bl && br <= ar) || (bl <= al && ar <= br);
                let disjoint = ar < bl || br < al;
                if !nested && !disjoint {
                    return Err(Error::NotNested);
                }
            }
        }
        Ok(())
    }

    pub fn validate_member(&self, n: usize, k: usize) -> Result<()> {
        self.validate()?;
        if self.n != n {
            return Err(Error::GroundSizeMismatch {
                expected: n,
                found: self.n,
            });
        }
        if self.intervals.len() != k {
            return Err(Error::BlockCountMismatch {
                expected: k,
                found: self.intervals.len(),
            });
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn validate_accepts_nested_intervals() {
        let p = ParenthesizedList::new(3, vec![2, 3, 1], vec![(1, 3), (1, 2)]);
        assert!(p.validate().is_ok());
    }

    #[test]
    fn validate_rejects_missing_maximal_interval() {
        let p = ParenthesizedList::new(3, vec![1, 2, 3], vec![(1, 2)]);
        assert_eq!(p.validate(), Err(Error::MissingFullInterval));
    }

    #[test]
    fn validate_rejects_overlapping_intervals() {
        let p = ParenthesizedList::identity(4, vec![(1, 4), (1, 2), (2, 3)]);
        assert_eq!(p.validate(), Err(Error::NotNested));
    }

    #[test]
    fn validate_rejects_bad_perm() {
        let p = ParenthesizedList::new(3, vec![1, 1, 3], vec![(1, 3)]);
        assert_eq!(p.validate(), Err(Error::NotAPermutation));
    }

    #[test]
    fn json_round_trip() {
        let p = ParenthesizedList::new(3, vec![2, 3, 1], vec![(1, 3), (1, 2)]);
        let json = serde_json::to_string(&p).unwrap();
        assert_eq!(json, r#"{"n":3,"perm":[2,3,1],"intervals":[[1,2],[1,3]]}"#);
        assert_eq!(serde_json::from_str::<ParenthesizedList>(&json).unwrap(), p);
    }
}
