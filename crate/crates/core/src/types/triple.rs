use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

use super::Params;

/// The coding triple `(I, sigma, D)`: an ascending `n`-sublist `I` of
/// `[1, n+k-1]`, a permutation `sigma` of positions `1..=n` (stored as its
/// image list), and `k-1` ascending cut positions inside `[2, n-1]`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Triple {
    pub n: usize,
    pub k: usize,
    #[serde(rename = "I")]
    pub i_list: Vec<usize>,
    pub sigma: Vec<usize>,
    pub cuts: Vec<usize>,
}

impl Triple {
    pub fn new(n: usize, k: usize, i_list: Vec<usize>, sigma: Vec<usize>, cuts: Vec<usize>) -> Triple {
        Triple {
            n,
            k,
            i_list,
            sigma,
            cuts,
        }
    }

    /// The permuted list `sigma I = i_{sigma(1)}, ..., i_{sigma(n)}`.
    pub fn sigma_i(&self) -> Vec<usize> {
        self.sigma.iter().map(|&p| self.i_list[p - 1]).collect()
    }

    pub fn validate(&self) -> Result<()> {
        Params::new(self.n, self.k).validate()?;
        if self.i_list.len() != self.n {
            return Err(Error::WrongILength);
        }
        let ground = self.n + self.k - 1;
        for &e in &self.i_list {
            if e < 1 || e > ground {
                return Err(Error::ElementOutOfRange { element: e, ground });
            }
        }
        for w in self.i_list.windows(2) {
            if w[0] >= w[1] {
                return Err(Error::INotAscending);
            }
        }
        if self.sigma.len() != self.n {
            return Err(Error::NotAPermutation);
        }
        let mut seen = vec![false; self.n + 1];
        for &p in &self.sigma {
            if p < 1 || p > self.n || seen[p] {
                return Err(Error::NotAPermutation);
            }
            seen[p] = true;
        }
        if self.cuts.len() != self.k - 1 {
            return Err(Error::WrongCutsLength);
        }
        for w in self.cuts.windows(2) {
            if w[0] >= w[1] {
                return Err(Error::CutsNotAscending);
            }
        }
        for &d in &self.cuts {
            if d < 2 || d > self.n - 1 {
                return Err(Error::CutOutOfRange);
            }
        }
        Ok(())
    }
}
