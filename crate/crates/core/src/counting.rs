//! Closed-form and recurrence counters, all in exact big-integer
//! arithmetic. These are the formula side of every cardinality identity.

use std::fmt;

use num_bigint::BigUint;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::types::Params;

pub fn factorial(n: usize) -> BigUint {
    let mut acc = BigUint::one();
    for i in 2..=n {
        acc *= BigUint::from(i);
    }
    acc
}

pub fn binomial(n: usize, k: usize) -> BigUint {
    if k > n {
        return BigUint::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigUint::one();
    for i in 0..k {
        acc *= BigUint::from(n - i);
        acc /= BigUint::from(i + 1);
    }
    acc
}

fn exact_div(numerator: BigUint, divisor: BigUint) -> BigUint {
    let remainder = &numerator % &divisor;
    assert!(
        remainder.is_zero(),
        "expected exact division: {numerator} / {divisor}"
    );
    numerator / divisor
}

/// The number of dissections of a convex polygon with `n+1` labelled edges
/// by `k-1` non-crossing diagonals:
/// `D = (1/k) C(n-2, k-1) C(n+k-1, k-1)`. The division by `k` is exact and
/// checked at runtime.
pub fn kirkman_cayley(n: usize, k: usize) -> Result<BigUint> {
    Params::new(n, k).validate()?;
    let product = binomial(n - 2, k - 1) * binomial(n + k - 1, k - 1);
    Ok(exact_div(product, BigUint::from(k)))
}

/// The number of distinguished internally ordered `k`-partitions of
/// `[1, n+k-1]`: `n! C(n-2, k-1) C(n+k-1, k-1)`.
pub fn distinguished_count(n: usize, k: usize) -> Result<BigUint> {
    Params::new(n, k).validate()?;
    Ok(factorial(n) * binomial(n - 2, k - 1) * binomial(n + k - 1, k - 1))
}

/// `|T_2(m, k)|`, the 2-associated Stirling numbers of the second kind,
/// via the recurrence `T(m,k) = k T(m-1,k) + (m-1) T(m-2,k-1)`.
pub fn assoc_stirling2(m: usize, k: usize) -> BigUint {
    if m < 2 * k {
        return BigUint::zero();
    }
    if k == 0 {
        // T(0,0) = 1, T(m,0) = 0 for m > 0.
        return if m == 0 { BigUint::one() } else { BigUint::zero() };
    }
    // Bottom-up table over (m', k'), kept per call so concurrent use needs
    // no shared state.
    let mut table = vec![vec![BigUint::zero(); k + 1]; m + 1];
    table[0][0] = BigUint::one();
    for mi in 1..=m {
        for ki in 1..=k {
            if mi < 2 * ki {
                continue;
            }
            let stay = BigUint::from(ki) * &table[mi - 1][ki];
            let join = BigUint::from(mi - 1) * &table[mi - 2][ki - 1];
            table[mi][ki] = stay + join;
        }
    }
    table[m][k].clone()
}

/// A dissection type `(i_1^{m_1}, ..., i_s^{m_s})`: `m_j` internal polygons
/// with `i_j` edges each, `3 <= i_1 < ... < i_s`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct DissectionType {
    pairs: Vec<(usize, usize)>,
}

impl DissectionType {
    /// Aggregates `(edge count, multiplicity)` pairs; does not validate.
    pub fn new<I>(pairs: I) -> DissectionType
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut pairs: Vec<(usize, usize)> = pairs.into_iter().collect();
        pairs.sort_unstable();
        DissectionType { pairs }
    }

    /// The type of a dissection whose internal polygons arise from blocks
    /// of the given sizes (a block of cardinality `a` bounds a polygon with
    /// `a+1` edges).
    pub fn from_block_sizes(sizes: &[usize]) -> DissectionType {
        let mut counts = std::collections::BTreeMap::new();
        for &a in sizes {
            *counts.entry(a + 1).or_insert(0usize) += 1;
        }
        DissectionType {
            pairs: counts.into_iter().collect(),
        }
    }

    pub fn pairs(&self) -> &[(usize, usize)] {
        &self.pairs
    }

    /// Checks the defining relations for the given parameters:
    /// sizes strictly ascending within `[3, n+1]`, multiplicities >= 1,
    /// `sum m_j = k` and `sum i_j m_j = n + 2k - 1`.
    pub fn validate_for(&self, n: usize, k: usize) -> Result<()> {
        Params::new(n, k).validate()?;
        for w in self.pairs.windows(2) {
            if w[0].0 >= w[1].0 {
                return Err(Error::TypeSizesBad);
            }
        }
        for &(i, m) in &self.pairs {
            if i < 3 || i > n + 1 {
                return Err(Error::TypeSizesBad);
            }
            if m < 1 {
                return Err(Error::TypeMultiplicityZero);
            }
        }
        let blocks: usize = self.pairs.iter().map(|&(_, m)| m).sum();
        if blocks != k {
            return Err(Error::TypeBlockSum);
        }
        let edges: usize = self.pairs.iter().map(|&(i, m)| i * m).sum();
        if edges != n + 2 * k - 1 {
            return Err(Error::TypeEdgeSum);
        }
        Ok(())
    }
}

impl fmt::Display for DissectionType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .pairs
            .iter()
            .map(|&(i, m)| format!("{i}^{m}"))
            .collect();
        write!(f, "{}", parts.join(","))
    }
}

/// The number of dissections of the `(n+1)`-gon of the given type:
/// `(n+k-1)! / (n! m_1! ... m_s!)`.
pub fn type_count(n: usize, k: usize, t: &DissectionType) -> Result<BigUint> {
    t.validate_for(n, k)?;
    let mut divisor = factorial(n);
    for &(_, m) in t.pairs() {
        divisor *= factorial(m);
    }
    Ok(exact_div(factorial(n + k - 1), divisor))
}

/// Every dissection type satisfying the relations for `(n, k)`, in
/// ascending order.
pub fn dissection_types(n: usize, k: usize) -> Result<Vec<DissectionType>> {
    Params::new(n, k).validate()?;
    let mut out = Vec::new();
    let mut acc = Vec::new();
    solve_types(3, n + 1, k, n + 2 * k - 1, &mut acc, &mut out);
    out.sort_unstable();
    Ok(out)
}

fn solve_types(
    size: usize,
    max_size: usize,
    blocks_left: usize,
    edges_left: usize,
    acc: &mut Vec<(usize, usize)>,
    out: &mut Vec<DissectionType>,
) {
    if blocks_left == 0 {
        if edges_left == 0 {
            out.push(DissectionType::new(acc.clone()));
        }
        return;
    }
    if size > max_size || edges_left < 3 * blocks_left {
        return;
    }
    let max_mult = (edges_left / size).min(blocks_left);
    for mult in 0..=max_mult {
        if mult > 0 {
            acc.push((size, mult));
        }
        solve_types(
            size + 1,
            max_size,
            blocks_left - mult,
            edges_left - size * mult,
            acc,
            out,
        );
        if mult > 0 {
            acc.pop();
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn big(v: u64) -> BigUint {
        BigUint::from(v)
    }

    #[test]
    fn kirkman_cayley_spot_values() {
        assert_eq!(kirkman_cayley(5, 1).unwrap(), big(1));
        assert_eq!(kirkman_cayley(5, 2).unwrap(), big(9));
        assert_eq!(kirkman_cayley(5, 3).unwrap(), big(21));
        assert_eq!(kirkman_cayley(5, 4).unwrap(), big(14));
        assert_eq!(kirkman_cayley(5, 5), Err(Error::KTooLarge));
    }

    #[test]
    fn kirkman_cayley_full_triangulations_are_catalan() {
        let catalan = [1u64, 1, 2, 5, 14, 42, 132, 429, 1430, 4862, 16796, 58786];
        for n in 2..=12 {
            assert_eq!(kirkman_cayley(n, n - 1).unwrap(), big(catalan[n - 1]));
        }
    }

    #[test]
    fn distinguished_count_spot_values() {
        assert_eq!(distinguished_count(2, 1).unwrap(), big(2));
        assert_eq!(distinguished_count(5, 4).unwrap(), big(6720));
        assert_eq!(distinguished_count(7, 4).unwrap(), big(6_048_000));
    }

    #[test]
    fn counting_dissections_two_ways() {
        // k n! D = n! C(n-2,k-1) C(n+k-1,k-1), the division-free form of
        // the double count behind the dissection formula.
        for n in 2..=30 {
            for k in 1..=n - 1 {
                assert_eq!(
                    kirkman_cayley(n, k).unwrap() * factorial(n) * BigUint::from(k),
                    distinguished_count(n, k).unwrap()
                );
            }
        }
    }

    #[test]
    fn ward_numbers_spot_values() {
        assert_eq!(assoc_stirling2(4, 2), big(3));
        assert_eq!(assoc_stirling2(5, 2), big(10));
        assert_eq!(assoc_stirling2(6, 3), big(15));
        for m in 2..=9 {
            assert_eq!(assoc_stirling2(m, 1), big(1));
        }
        assert_eq!(assoc_stirling2(0, 0), big(1));
        assert_eq!(assoc_stirling2(3, 2), big(0));
        assert_eq!(assoc_stirling2(5, 0), big(0));
    }

    #[test]
    fn type_count_spot_values() {
        let t = DissectionType::new(vec![(3, 4)]);
        assert_eq!(type_count(5, 4, &t).unwrap(), big(14));
        let t = DissectionType::new(vec![(3, 1), (5, 1)]);
        assert_eq!(type_count(5, 2, &t).unwrap(), big(6));
        let t = DissectionType::new(vec![(4, 2)]);
        assert_eq!(type_count(5, 2, &t).unwrap(), big(3));
        let t = DissectionType::new(vec![(3, 2), (4, 1)]);
        assert_eq!(type_count(5, 3, &t).unwrap(), big(21));
    }

    #[test]
    fn type_count_rejects_violated_relations() {
        let t = DissectionType::new(vec![(3, 3)]);
        assert_eq!(type_count(5, 2, &t), Err(Error::TypeBlockSum));
        let t = DissectionType::new(vec![(3, 1), (4, 1)]);
        assert_eq!(type_count(5, 2, &t), Err(Error::TypeEdgeSum));
        let t = DissectionType::new(vec![(2, 1), (6, 1)]);
        assert_eq!(type_count(5, 2, &t), Err(Error::TypeSizesBad));
    }

    #[test]
    fn types_enumerate_all_solutions() {
        // n=5, k=3: only (3^2, 4^1) satisfies the relations.
        let all = dissection_types(5, 3).unwrap();
        assert_eq!(all, vec![DissectionType::new(vec![(3, 2), (4, 1)])]);
        // n=5, k=2: 3^1 5^1 and 4^2.
        let all = dissection_types(5, 2).unwrap();
        assert_eq!(
            all,
            vec![
                DissectionType::new(vec![(3, 1), (5, 1)]),
                DissectionType::new(vec![(4, 2)]),
            ]
        );
    }

    #[test]
    fn type_display_matches_cli_grammar() {
        let t = DissectionType::new(vec![(4, 1), (3, 2)]);
        assert_eq!(t.to_string(), "3^2,4^1");
    }

    #[test]
    fn big_arguments_stay_exact() {
        // Values around n + k = 200 overflow u128 by far.
        let v = kirkman_cayley(100, 99).unwrap();
        assert_eq!(v, kirkman_cayley(100, 99).unwrap());
        assert!(v > BigUint::from(u128::MAX));
        let w = distinguished_count(101, 99).unwrap();
        assert!(w > v);
    }
}
