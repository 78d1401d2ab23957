//! Dense symmetric integer matrices.
//!
//! Adjacency, Laplacian and level matrices all live here. Indices are
//! 0-based; graph vertices are 1-based, so vertex `v` is row `v - 1`.

use std::fmt;

use crate::error::{Error, Result};

#[derive(Clone, PartialEq, Eq)]
pub struct SymmetricIntMatrix {
    dim: usize,
    entries: Vec<i64>,
}

impl SymmetricIntMatrix {
    pub fn zeros(dim: usize) -> Self {
        Self {
            dim,
            entries: vec![0; dim * dim],
        }
    }

    /// Builds a matrix from `f(i, j)`, rejecting it if the result is not
    /// symmetric.
    pub fn from_fn(dim: usize, mut f: impl FnMut(usize, usize) -> i64) -> Result<Self> {
        let mut entries = Vec::with_capacity(dim * dim);
        for i in 0..dim {
            for j in 0..dim {
                entries.push(f(i, j));
            }
        }
        Self::from_row_major(dim, entries)
    }

    pub fn from_rows(rows: &[Vec<i64>]) -> Result<Self> {
        let dim = rows.len();
        let mut entries = Vec::with_capacity(dim * dim);
        for row in rows {
            if row.len() != dim {
                return Err(Error::SizeMismatch {
                    expected: dim,
                    actual: row.len(),
                });
            }
            entries.extend_from_slice(row);
        }
        Self::from_row_major(dim, entries)
    }

    pub fn from_row_major(dim: usize, entries: Vec<i64>) -> Result<Self> {
        if entries.len() != dim * dim {
            return Err(Error::SizeMismatch {
                expected: dim * dim,
                actual: entries.len(),
            });
        }
        let m = Self { dim, entries };
        if let Some((i, j)) = m.first_asymmetry() {
            return Err(Error::NotSymmetric(i, j));
        }
        Ok(m)
    }

    fn first_asymmetry(&self) -> Option<(usize, usize)> {
        (0..self.dim)
            .flat_map(|i| (i + 1..self.dim).map(move |j| (i, j)))
            .find(|&(i, j)| self.get(i, j) != self.get(j, i))
    }

    /// Sets `(i, j)` and `(j, i)` together.
    pub(crate) fn set_symmetric(&mut self, i: usize, j: usize, value: i64) {
        self.entries[i * self.dim + j] = value;
        self.entries[j * self.dim + i] = value;
    }

    pub(crate) fn add_diagonal(&mut self, i: usize, value: i64) {
        self.entries[i * self.dim + i] += value;
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> i64 {
        self.entries[i * self.dim + j]
    }

    pub fn row(&self, i: usize) -> &[i64] {
        &self.entries[i * self.dim..(i + 1) * self.dim]
    }

    pub fn rows(&self) -> impl Iterator<Item = &[i64]> {
        self.entries.chunks(self.dim.max(1)).take(self.dim)
    }

    pub fn as_row_major(&self) -> &[i64] {
        &self.entries
    }

    pub fn to_rows(&self) -> Vec<Vec<i64>> {
        self.rows().map(<[i64]>::to_vec).collect()
    }

    pub fn trace(&self) -> i64 {
        (0..self.dim).map(|i| self.get(i, i)).sum()
    }

    /// Sum of squared entries; equals the sum of squared eigenvalues.
    pub fn frobenius_norm_sq(&self) -> i128 {
        self.entries
            .iter()
            .map(|&x| i128::from(x) * i128::from(x))
            .sum()
    }

    /// Largest absolute row sum, an upper bound on the spectral radius.
    pub fn max_abs_row_sum(&self) -> i64 {
        self.rows()
            .map(|r| r.iter().map(|x| x.abs()).sum::<i64>())
            .max()
            .unwrap_or(0)
    }

    pub fn row_sums(&self) -> Vec<i64> {
        self.rows().map(|r| r.iter().sum()).collect()
    }

    /// True for a {0,1} matrix with zero diagonal, i.e. the adjacency matrix
    /// of some simple graph.
    pub fn is_adjacency(&self) -> bool {
        self.entries.iter().all(|&x| x == 0 || x == 1) && (0..self.dim).all(|i| self.get(i, i) == 0)
    }

    /// Returns `Q M Qᵀ` where `Q` sends basis index `k` to `image[k]`, so
    /// the result satisfies `out[image[i]][image[j]] = self[i][j]`.
    pub fn conjugate(&self, image: &[usize]) -> Result<Self> {
        if image.len() != self.dim {
            return Err(Error::SizeMismatch {
                expected: self.dim,
                actual: image.len(),
            });
        }
        let mut seen = vec![false; self.dim];
        for &t in image {
            if t >= self.dim || std::mem::replace(&mut seen[t], true) {
                return Err(Error::InvalidPermutation(format!(
                    "index image {image:?} is not a bijection"
                )));
            }
        }
        let mut out = Self::zeros(self.dim);
        for i in 0..self.dim {
            for j in 0..self.dim {
                out.entries[image[i] * self.dim + image[j]] = self.get(i, j);
            }
        }
        Ok(out)
    }
}

impl fmt::Debug for SymmetricIntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "SymmetricIntMatrix({}x{})", self.dim, self.dim)?;
        for row in self.rows() {
            writeln!(f, "  {row:?}")?;
        }
        Ok(())
    }
}
