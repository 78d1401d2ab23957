//! Lexicographic ranking of `n`-subsets of `{1..N}`.
//!
//! At `n = 2` the ranks are exactly the entries of the pair-indexing matrix
//! `I_N`: `{1,2} → 1, {1,3} → 2, …, {N-1,N} → C(N,2)`, and unranking `r`
//! returns the (row, column) of `r` in that matrix.

use crate::error::{Error, Result};

/// `C(n, k)`, or `None` on overflow.
pub fn binomial(n: usize, k: usize) -> Option<u128> {
    if k > n {
        return Some(0);
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        // acc * (n - i) / (i + 1) stays integral at every step
        acc = acc.checked_mul((n - i) as u128)? / (i as u128 + 1);
    }
    Some(acc)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SubsetIndexer {
    n_vertices: usize,
    level: usize,
    size: usize,
    /// `choose[m][k] = C(m, k)` for `m ≤ N`, `k ≤ level`.
    choose: Vec<Vec<usize>>,
}

impl SubsetIndexer {
    pub fn new(n_vertices: usize, level: usize) -> Result<Self> {
        if level > n_vertices {
            return Err(Error::LevelOutOfRange {
                level,
                min: 0,
                max: n_vertices,
            });
        }
        let size = binomial(n_vertices, level)
            .and_then(|c| usize::try_from(c).ok())
            .ok_or_else(|| Error::guard("subset count C(N, n)", u128::MAX, usize::MAX as u128))?;
        let mut choose = vec![vec![0usize; level + 1]; n_vertices + 1];
        for m in 0..=n_vertices {
            choose[m][0] = 1;
            for k in 1..=level.min(m) {
                choose[m][k] = choose[m - 1][k - 1] + if k < m { choose[m - 1][k] } else { 0 };
            }
        }
        Ok(Self {
            n_vertices,
            level,
            size,
            choose,
        })
    }

    pub fn n_vertices(&self) -> usize {
        self.n_vertices
    }

    pub fn level(&self) -> usize {
        self.level
    }

    /// Number of subsets, `C(N, n)`.
    pub fn size(&self) -> usize {
        self.size
    }

    #[inline]
    fn c(&self, m: usize, k: usize) -> usize {
        if k > m {
            0
        } else {
            self.choose[m][k]
        }
    }

    /// 1-based lexicographic rank of a strictly increasing subset.
    pub fn rank(&self, subset: &[usize]) -> Result<usize> {
        if subset.len() != self.level {
            return Err(Error::InvalidSubset(
                subset.to_vec(),
                format!("expected {} elements", self.level),
            ));
        }
        if subset.iter().any(|&v| v == 0 || v > self.n_vertices) {
            return Err(Error::InvalidSubset(
                subset.to_vec(),
                format!("elements must lie in 1..={}", self.n_vertices),
            ));
        }
        if subset.windows(2).any(|w| w[0] >= w[1]) {
            return Err(Error::InvalidSubset(
                subset.to_vec(),
                "not strictly increasing".into(),
            ));
        }
        Ok(self.rank_unchecked(subset))
    }

    /// Rank without validation; `subset` must be a sorted `n`-subset.
    #[inline]
    pub(crate) fn rank_unchecked(&self, subset: &[usize]) -> usize {
        // Subsets ranked after S: for each position i, those agreeing with
        // S before i and larger at i, counted as C(N - s_i, n - i).
        let after: usize = subset
            .iter()
            .enumerate()
            .map(|(i, &s)| self.c(self.n_vertices - s, self.level - i))
            .sum();
        self.size - after
    }

    /// Inverse of [`rank`](Self::rank).
    pub fn unrank(&self, rank: usize) -> Result<Vec<usize>> {
        if rank == 0 || rank > self.size {
            return Err(Error::RankOutOfRange {
                rank,
                size: self.size,
            });
        }
        let mut remaining = rank - 1;
        let mut out = Vec::with_capacity(self.level);
        let mut next = 1;
        for i in 0..self.level {
            let slots = self.level - i;
            loop {
                // subsets whose element at this position is `next`
                let block = self.c(self.n_vertices - next, slots - 1);
                if remaining < block {
                    break;
                }
                remaining -= block;
                next += 1;
            }
            out.push(next);
            next += 1;
        }
        Ok(out)
    }

    /// All subsets in rank order.
    pub fn subsets(&self) -> impl Iterator<Item = Vec<usize>> + '_ {
        (1..=self.size).map(|r| self.unrank(r).expect("rank in range"))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn binomials() {
        assert_eq!(binomial(0, 0), Some(1));
        assert_eq!(binomial(5, 2), Some(10));
        assert_eq!(binomial(24, 3), Some(2024));
        assert_eq!(binomial(24, 12), Some(2_704_156));
        assert_eq!(binomial(3, 4), Some(0));
        assert_eq!(binomial(200, 100), None);
    }

    #[test]
    fn pair_ranks_follow_indexing_matrix() {
        let ix = SubsetIndexer::new(6, 2).unwrap();
        assert_eq!(ix.size(), 15);
        assert_eq!(ix.rank(&[1, 2]).unwrap(), 1);
        assert_eq!(ix.rank(&[3, 4]).unwrap(), 10);
        assert_eq!(ix.rank(&[5, 6]).unwrap(), 15);
        assert_eq!(ix.rank(&[2, 6]).unwrap(), 9);
        assert_eq!(ix.unrank(10).unwrap(), vec![3, 4]);
        assert_eq!(ix.unrank(15).unwrap(), vec![5, 6]);
        assert_eq!(
            SubsetIndexer::new(5, 2).unwrap().unrank(1).unwrap(),
            vec![1, 2]
        );
    }

    #[test]
    fn singletons_rank_in_order() {
        let ix = SubsetIndexer::new(9, 1).unwrap();
        for k in 1..=9 {
            assert_eq!(ix.rank(&[k]).unwrap(), k);
        }
    }

    #[test]
    fn level_zero_has_one_empty_subset() {
        let ix = SubsetIndexer::new(4, 0).unwrap();
        assert_eq!(ix.size(), 1);
        assert_eq!(ix.rank(&[]).unwrap(), 1);
        assert_eq!(ix.unrank(1).unwrap(), Vec::<usize>::new());
    }

    #[test]
    fn full_level_has_one_subset() {
        let ix = SubsetIndexer::new(4, 4).unwrap();
        assert_eq!(ix.size(), 1);
        assert_eq!(ix.rank(&[1, 2, 3, 4]).unwrap(), 1);
    }

    #[test]
    fn errors() {
        let ix = SubsetIndexer::new(6, 2).unwrap();
        assert!(ix.rank(&[1]).is_err());
        assert!(ix.rank(&[1, 7]).is_err());
        assert!(ix.rank(&[0, 3]).is_err());
        assert!(ix.rank(&[3, 3]).is_err());
        assert!(ix.rank(&[4, 3]).is_err());
        assert_eq!(
            ix.unrank(0),
            Err(Error::RankOutOfRange { rank: 0, size: 15 })
        );
        assert!(ix.unrank(16).is_err());
        assert!(SubsetIndexer::new(3, 4).is_err());
    }

    #[test]
    fn order_matches_itertools_combinations() {
        use itertools::Itertools;
        let ix = SubsetIndexer::new(8, 3).unwrap();
        let expected: Vec<Vec<usize>> = (1..=8).combinations(3).collect();
        assert_eq!(ix.subsets().collect::<Vec<_>>(), expected);
    }

    proptest! {
        #[test]
        fn rank_unrank_bijection(n in 1usize..16, k_frac in 0.0f64..=1.0, r_frac in 0.0f64..1.0) {
            let k = ((n as f64) * k_frac) as usize;
            let ix = SubsetIndexer::new(n, k).unwrap();
            let r = 1 + ((ix.size() as f64) * r_frac) as usize;
            let r = r.min(ix.size());
            let s = ix.unrank(r).unwrap();
            prop_assert_eq!(s.len(), k);
            prop_assert!(s.windows(2).all(|w| w[0] < w[1]));
            prop_assert_eq!(ix.rank(&s).unwrap(), r);
        }
    }
}
