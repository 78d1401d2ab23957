//! Simple undirected graphs, vertex relabelings and the level-1 matrices.

use std::collections::BTreeSet;

use crate::error::{Error, Result};
use crate::matrix::SymmetricIntMatrix;

/// A simple undirected graph on vertices `1..=n_vertices`.
///
/// Edges are stored as ordered pairs `(i, j)` with `i < j`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n_vertices: usize,
    edges: BTreeSet<(usize, usize)>,
}

impl Graph {
    /// Builds a graph, rejecting self-loops, repeated edges and endpoints
    /// outside `1..=n_vertices`. Pairs may be given in either order.
    pub fn new(n_vertices: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        let mut g = Self::empty(n_vertices)?;
        for (a, b) in edges {
            g.insert_edge(a, b)?;
        }
        Ok(g)
    }

    pub fn empty(n_vertices: usize) -> Result<Self> {
        if n_vertices == 0 {
            return Err(Error::NoVertices);
        }
        Ok(Self {
            n_vertices,
            edges: BTreeSet::new(),
        })
    }

    pub fn complete(n_vertices: usize) -> Result<Self> {
        let mut g = Self::empty(n_vertices)?;
        for i in 1..=n_vertices {
            for j in i + 1..=n_vertices {
                g.edges.insert((i, j));
            }
        }
        Ok(g)
    }

    pub(crate) fn insert_edge(&mut self, a: usize, b: usize) -> Result<()> {
        for v in [a, b] {
            if v == 0 || v > self.n_vertices {
                return Err(Error::VertexOutOfRange {
                    vertex: v,
                    n_vertices: self.n_vertices,
                });
            }
        }
        if a == b {
            return Err(Error::SelfLoop(a));
        }
        let e = (a.min(b), a.max(b));
        if !self.edges.insert(e) {
            return Err(Error::DuplicateEdge(e.0, e.1));
        }
        Ok(())
    }

    pub fn n_vertices(&self) -> usize {
        self.n_vertices
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Edges as `(i, j)` with `i < j`, in lexicographic order.
    pub fn edges(&self) -> impl ExactSizeIterator<Item = (usize, usize)> + '_ {
        self.edges.iter().copied()
    }

    pub fn has_edge(&self, a: usize, b: usize) -> bool {
        self.edges.contains(&(a.min(b), a.max(b)))
    }

    /// Degrees indexed by vertex, so `degrees()[v - 1]` is the degree of `v`.
    pub fn degrees(&self) -> Vec<usize> {
        let mut deg = vec![0; self.n_vertices];
        for &(a, b) in &self.edges {
            deg[a - 1] += 1;
            deg[b - 1] += 1;
        }
        deg
    }

    /// Vertex degrees sorted in descending order.
    pub fn degree_sequence(&self) -> Vec<usize> {
        let mut deg = self.degrees();
        deg.sort_unstable_by(|a, b| b.cmp(a));
        deg
    }

    /// Neighbour lists, 1-based, each sorted ascending.
    pub fn neighbours(&self) -> Vec<Vec<usize>> {
        let mut adj = vec![Vec::new(); self.n_vertices];
        for &(a, b) in &self.edges {
            adj[a - 1].push(b);
            adj[b - 1].push(a);
        }
        for list in &mut adj {
            list.sort_unstable();
        }
        adj
    }

    /// Number of connected components, by depth-first traversal.
    pub fn component_count(&self) -> usize {
        let adj = self.neighbours();
        let mut seen = vec![false; self.n_vertices];
        let mut components = 0;
        for start in 0..self.n_vertices {
            if seen[start] {
                continue;
            }
            components += 1;
            seen[start] = true;
            let mut stack = vec![start];
            while let Some(v) = stack.pop() {
                for &w in &adj[v] {
                    if !seen[w - 1] {
                        seen[w - 1] = true;
                        stack.push(w - 1);
                    }
                }
            }
        }
        components
    }

    pub fn adjacency_matrix(&self) -> SymmetricIntMatrix {
        let mut m = SymmetricIntMatrix::zeros(self.n_vertices);
        for &(a, b) in &self.edges {
            m.set_symmetric(a - 1, b - 1, 1);
        }
        m
    }

    /// The combinatorial Laplacian `D - A`.
    pub fn laplacian_matrix(&self) -> SymmetricIntMatrix {
        let mut m = SymmetricIntMatrix::zeros(self.n_vertices);
        for &(a, b) in &self.edges {
            m.set_symmetric(a - 1, b - 1, -1);
            m.add_diagonal(a - 1, 1);
            m.add_diagonal(b - 1, 1);
        }
        m
    }

    /// Relabels vertex `v` as `p(v)`: `{p(a), p(b)}` is an edge of the
    /// result exactly when `{a, b}` is an edge of `self`.
    pub fn apply_permutation(&self, p: &Permutation) -> Result<Self> {
        if p.size() != self.n_vertices {
            return Err(Error::SizeMismatch {
                expected: self.n_vertices,
                actual: p.size(),
            });
        }
        let edges = self
            .edges
            .iter()
            .map(|&(a, b)| {
                let (x, y) = (p.image(a), p.image(b));
                (x.min(y), x.max(y))
            })
            .collect();
        Ok(Self {
            n_vertices: self.n_vertices,
            edges,
        })
    }

    /// The graph whose adjacency matrix is `m`. Used to treat level
    /// matrices as graphs in their own right.
    pub fn from_adjacency(m: &SymmetricIntMatrix) -> Result<Self> {
        if !m.is_adjacency() {
            return Err(Error::NotAdjacency);
        }
        let mut g = Self::empty(m.dim())?;
        for i in 0..m.dim() {
            for j in i + 1..m.dim() {
                if m.get(i, j) == 1 {
                    g.edges.insert((i + 1, j + 1));
                }
            }
        }
        Ok(g)
    }
}

/// A bijection on `1..=size`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Permutation {
    images: Vec<usize>,
}

impl Permutation {
    /// `images[k]` is the image of `k + 1`.
    pub fn new(images: Vec<usize>) -> Result<Self> {
        if images.is_empty() {
            return Err(Error::InvalidPermutation("empty".into()));
        }
        let n = images.len();
        let mut hit = vec![false; n];
        for &t in &images {
            if t == 0 || t > n {
                return Err(Error::InvalidPermutation(format!(
                    "image {t} not in 1..={n}"
                )));
            }
            if std::mem::replace(&mut hit[t - 1], true) {
                return Err(Error::InvalidPermutation(format!("{t} hit twice")));
            }
        }
        Ok(Self { images })
    }

    pub fn identity(size: usize) -> Self {
        Self {
            images: (1..=size).collect(),
        }
    }

    pub fn size(&self) -> usize {
        self.images.len()
    }

    #[inline]
    pub fn image(&self, v: usize) -> usize {
        self.images[v - 1]
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    pub fn inverse(&self) -> Self {
        let mut inv = vec![0; self.images.len()];
        for (k, &t) in self.images.iter().enumerate() {
            inv[t - 1] = k + 1;
        }
        Self { images: inv }
    }

    /// `self` after `first`: `v ↦ self(first(v))`.
    pub fn after(&self, first: &Permutation) -> Result<Self> {
        if first.size() != self.size() {
            return Err(Error::SizeMismatch {
                expected: self.size(),
                actual: first.size(),
            });
        }
        Ok(Self {
            images: first.images.iter().map(|&v| self.image(v)).collect(),
        })
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(k, &t)| t == k + 1)
    }
}
