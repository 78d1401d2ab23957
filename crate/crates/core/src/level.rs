//! Level-`n` matrices: the `n`-excitation blocks of the exchange
//! Hamiltonian, indexed by `n`-subsets of vertices in lexicographic order.
//!
//! Entry `(S, T)` of the adjacency flavour is `G[a][b]` when the symmetric
//! difference `S △ T` is exactly `{a, b}`, and zero otherwise. The
//! Laplacian flavour negates those entries and puts the edge boundary
//! `|∂S|` (edges with one end in `S`) on the diagonal.

use itertools::Itertools;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{Graph, Permutation};
use crate::matrix::SymmetricIntMatrix;
use crate::subset::{binomial, SubsetIndexer};

/// Largest level-matrix dimension that will be assembled.
pub const MAX_LEVEL_DIM: usize = 50_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Flavor {
    Adjacency,
    Laplacian,
}

impl Flavor {
    pub fn name(self) -> &'static str {
        match self {
            Flavor::Adjacency => "adjacency",
            Flavor::Laplacian => "laplacian",
        }
    }
}

impl std::fmt::Display for Flavor {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.name())
    }
}

impl std::str::FromStr for Flavor {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        match s.to_ascii_lowercase().as_str() {
            "adjacency" | "a" => Ok(Flavor::Adjacency),
            "laplacian" | "l" => Ok(Flavor::Laplacian),
            other => Err(format!(
                "unknown flavor {other:?} (expected adjacency or laplacian)"
            )),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LevelMatrix {
    matrix: SymmetricIntMatrix,
    n_vertices: usize,
    level: usize,
    flavor: Flavor,
}

impl LevelMatrix {
    pub fn matrix(&self) -> &SymmetricIntMatrix {
        &self.matrix
    }

    pub fn into_matrix(self) -> SymmetricIntMatrix {
        self.matrix
    }

    pub fn n_vertices(&self) -> usize {
        self.n_vertices
    }

    pub fn level(&self) -> usize {
        self.level
    }

    pub fn flavor(&self) -> Flavor {
        self.flavor
    }

    pub fn dim(&self) -> usize {
        self.matrix.dim()
    }

    /// An adjacency-flavour level matrix is itself the adjacency matrix of a
    /// graph on `C(N, n)` vertices; this returns that graph.
    pub fn to_graph(&self) -> Result<Graph> {
        Graph::from_adjacency(&self.matrix)
    }
}

/// Checks the level range and the dimension guard, returning `C(N, n)`.
pub fn check_level(n_vertices: usize, level: usize, min_level: usize) -> Result<usize> {
    if level < min_level || level > n_vertices {
        return Err(Error::LevelOutOfRange {
            level,
            min: min_level,
            max: n_vertices,
        });
    }
    let dim = binomial(n_vertices, level).unwrap_or(u128::MAX);
    if dim > MAX_LEVEL_DIM as u128 {
        let cells = dim.saturating_mul(dim);
        return Err(Error::Guard {
            what: "level matrix dimension C(N, n)",
            actual: dim,
            limit: MAX_LEVEL_DIM as u128,
            hint: format!(
                " (a dense {dim}x{dim} matrix has {cells} entries and a dense eigensolve costs ~{dim}^3 operations)"
            ),
        });
    }
    Ok(dim as usize)
}

pub fn level_matrix(g: &Graph, level: usize) -> Result<LevelMatrix> {
    assemble(g, level, Flavor::Adjacency)
}

pub fn level_laplacian(g: &Graph, level: usize) -> Result<LevelMatrix> {
    assemble(g, level, Flavor::Laplacian)
}

pub fn level_matrix_of(g: &Graph, level: usize, flavor: Flavor) -> Result<LevelMatrix> {
    assemble(g, level, flavor)
}

/// Edge-driven assembly: for each edge `{a, b}` and each `(n-1)`-subset `T`
/// avoiding both ends, `T ∪ {a}` and `T ∪ {b}` are coupled.
fn assemble(g: &Graph, level: usize, flavor: Flavor) -> Result<LevelMatrix> {
    let n = g.n_vertices();
    let min_level = match flavor {
        Flavor::Adjacency => 0,
        Flavor::Laplacian => 1,
    };
    let dim = check_level(n, level, min_level)?;
    let mut matrix = SymmetricIntMatrix::zeros(dim);
    if level == 0 {
        return Ok(LevelMatrix {
            matrix,
            n_vertices: n,
            level,
            flavor,
        });
    }

    let indexer = SubsetIndexer::new(n, level)?;
    let (off_diagonal, boundary) = match flavor {
        Flavor::Adjacency => (1, 0),
        Flavor::Laplacian => (-1, 1),
    };
    let mut with_a = Vec::with_capacity(level);
    let mut with_b = Vec::with_capacity(level);
    for (a, b) in g.edges() {
        let others = (1..=n).filter(|&v| v != a && v != b);
        for rest in others.combinations(level - 1) {
            insert_sorted(&rest, a, &mut with_a);
            insert_sorted(&rest, b, &mut with_b);
            let s = indexer.rank_unchecked(&with_a) - 1;
            let t = indexer.rank_unchecked(&with_b) - 1;
            matrix.set_symmetric(s, t, off_diagonal);
            if boundary != 0 {
                matrix.add_diagonal(s, boundary);
                matrix.add_diagonal(t, boundary);
            }
        }
    }
    Ok(LevelMatrix {
        matrix,
        n_vertices: n,
        level,
        flavor,
    })
}

fn insert_sorted(sorted: &[usize], v: usize, out: &mut Vec<usize>) {
    out.clear();
    let at = sorted.partition_point(|&x| x < v);
    out.extend_from_slice(&sorted[..at]);
    out.push(v);
    out.extend_from_slice(&sorted[at..]);
}

/// The level-2 matrix written out term by term from the pair-indexing
/// functions `α(i)` (row of `i` in `I_N`, the smaller element) and `β(i)`
/// (column, the larger):
///
/// ```text
/// G2[i][j] = δ(α_i, α_j)·G[β_i][β_j] + δ(α_i, β_j)·G[β_i][α_j]
///          + δ(β_i, α_j)·G[α_i][β_j] + δ(β_i, β_j)·G[α_i][α_j]
/// ```
///
/// Kept as an independent construction to cross-check [`level_matrix`].
pub fn level_matrix_via_eq4(g: &Graph) -> Result<LevelMatrix> {
    let n = g.n_vertices();
    let dim = check_level(n, 2, 2)?;
    let indexer = SubsetIndexer::new(n, 2)?;
    let adj = g.adjacency_matrix();
    let entry = |x: usize, y: usize| adj.get(x - 1, y - 1);
    let delta = |x: usize, y: usize| i64::from(x == y);

    let pairs: Vec<(usize, usize)> = indexer.subsets().map(|s| (s[0], s[1])).collect();
    let matrix = SymmetricIntMatrix::from_fn(dim, |i, j| {
        let (ai, bi) = pairs[i];
        let (aj, bj) = pairs[j];
        delta(ai, aj) * entry(bi, bj)
            + delta(ai, bj) * entry(bi, aj)
            + delta(bi, aj) * entry(ai, bj)
            + delta(bi, bj) * entry(ai, aj)
    })?;
    Ok(LevelMatrix {
        matrix,
        n_vertices: n,
        level: 2,
        flavor: Flavor::Adjacency,
    })
}

/// The action of a vertex relabeling on level-`n` indices: position `k`
/// holds the 0-based index of `p(S_k)`.
pub fn induced_index_map(p: &Permutation, level: usize) -> Result<Vec<usize>> {
    let indexer = SubsetIndexer::new(p.size(), level)?;
    indexer
        .subsets()
        .map(|s| {
            let mut image: Vec<usize> = s.iter().map(|&v| p.image(v)).collect();
            image.sort_unstable();
            Ok(indexer.rank_unchecked(&image) - 1)
        })
        .collect()
}

/// Index map of the complement bijection `S ↦ {1..N} \ S` from level `n`
/// to level `N - n`.
pub fn complement_index_map(n_vertices: usize, level: usize) -> Result<Vec<usize>> {
    let from = SubsetIndexer::new(n_vertices, level)?;
    let to = SubsetIndexer::new(n_vertices, n_vertices - level)?;
    Ok(from
        .subsets()
        .map(|s| {
            let complement: Vec<usize> = (1..=n_vertices).filter(|v| !s.contains(v)).collect();
            to.rank_unchecked(&complement) - 1
        })
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::tests::{graph_b, star_a};

    /// The symbolic level-2 pattern for five vertices, row by row. `(i, j)`
    /// stands for `G_ij`; `None` is a structural zero.
    pub(crate) fn level2_pattern_n5() -> [[Option<(usize, usize)>; 10]; 10] {
        let z = None;
        let g = |i, j| Some((i, j));
        [
            [
                z,
                g(2, 3),
                g(2, 4),
                g(2, 5),
                g(1, 3),
                g(1, 4),
                g(1, 5),
                z,
                z,
                z,
            ],
            [
                g(2, 3),
                z,
                g(3, 4),
                g(3, 5),
                g(1, 2),
                z,
                z,
                g(1, 4),
                g(1, 5),
                z,
            ],
            [
                g(2, 4),
                g(3, 4),
                z,
                g(4, 5),
                z,
                g(1, 2),
                z,
                g(1, 3),
                z,
                g(1, 5),
            ],
            [
                g(2, 5),
                g(3, 5),
                g(4, 5),
                z,
                z,
                z,
                g(1, 2),
                z,
                g(1, 3),
                g(1, 4),
            ],
            [
                g(1, 3),
                g(1, 2),
                z,
                z,
                z,
                g(3, 4),
                g(3, 5),
                g(2, 4),
                g(2, 5),
                z,
            ],
            [
                g(1, 4),
                z,
                g(1, 2),
                z,
                g(3, 4),
                z,
                g(4, 5),
                g(2, 3),
                z,
                g(2, 5),
            ],
            [
                g(1, 5),
                z,
                z,
                g(1, 2),
                g(3, 5),
                g(4, 5),
                z,
                z,
                g(2, 3),
                g(2, 4),
            ],
            [
                z,
                g(1, 4),
                g(1, 3),
                z,
                g(2, 4),
                g(2, 3),
                z,
                z,
                g(4, 5),
                g(3, 5),
            ],
            [
                z,
                g(1, 5),
                z,
                g(1, 3),
                g(2, 5),
                z,
                g(2, 3),
                g(4, 5),
                z,
                g(3, 4),
            ],
            [
                z,
                z,
                g(1, 5),
                g(1, 4),
                z,
                g(2, 5),
                g(2, 4),
                g(3, 5),
                g(3, 4),
                z,
            ],
        ]
    }

    fn substitute(g: &Graph) -> Vec<Vec<i64>> {
        level2_pattern_n5()
            .iter()
            .map(|row| {
                row.iter()
                    .map(|e| e.map_or(0, |(i, j)| i64::from(g.has_edge(i, j))))
                    .collect()
            })
            .collect()
    }

    #[test]
    fn star_level2_matches_symbolic_pattern() {
        let m = level_matrix(&star_a(), 2).unwrap();
        assert_eq!(m.dim(), 10);
        assert_eq!(m.matrix().to_rows(), substitute(&star_a()));
        assert_eq!(
            level_matrix(&graph_b(), 2).unwrap().matrix().to_rows(),
            substitute(&graph_b())
        );
    }

    #[test]
    fn level1_is_adjacency() {
        for g in [star_a(), graph_b(), Graph::complete(6).unwrap()] {
            assert_eq!(
                level_matrix(&g, 1).unwrap().into_matrix(),
                g.adjacency_matrix()
            );
            assert_eq!(
                level_laplacian(&g, 1).unwrap().into_matrix(),
                g.laplacian_matrix()
            );
        }
    }

    #[test]
    fn empty_graph_gives_zero_blocks() {
        let g = Graph::empty(6).unwrap();
        for n in 0..=6 {
            let m = level_matrix(&g, n).unwrap();
            assert_eq!(m.dim() as u128, binomial(6, n).unwrap());
            assert!(m.matrix().as_row_major().iter().all(|&x| x == 0));
        }
        for n in 1..=6 {
            assert!(level_laplacian(&g, n)
                .unwrap()
                .matrix()
                .as_row_major()
                .iter()
                .all(|&x| x == 0));
        }
    }

    #[test]
    fn vacuum_block() {
        let m = level_matrix(&star_a(), 0).unwrap();
        assert_eq!(m.matrix(), &SymmetricIntMatrix::zeros(1));
        assert!(level_laplacian(&star_a(), 0).is_err());
    }

    #[test]
    fn level_range_errors() {
        assert_eq!(
            level_matrix(&star_a(), 6).unwrap_err(),
            Error::LevelOutOfRange {
                level: 6,
                min: 0,
                max: 5
            }
        );
        assert!(level_laplacian(&star_a(), 6).is_err());
        assert!(level_matrix_via_eq4(&Graph::empty(1).unwrap()).is_err());
    }

    #[test]
    fn dimension_guard() {
        let g = Graph::empty(30).unwrap();
        // C(30, 5) = 142506
        let err = level_matrix(&g, 5).unwrap_err();
        assert!(err.is_guard(), "{err}");
        assert!(err.to_string().contains("142506"));
    }

    #[test]
    fn k3_laplacian() {
        let k3 = Graph::complete(3).unwrap();
        assert_eq!(
            level_laplacian(&k3, 1).unwrap().matrix().to_rows(),
            vec![vec![2, -1, -1], vec![-1, 2, -1], vec![-1, -1, 2]]
        );
    }

    #[test]
    fn laplacian_diagonal_is_edge_boundary() {
        let g = graph_b();
        let ix = SubsetIndexer::new(5, 2).unwrap();
        let m = level_laplacian(&g, 2).unwrap();
        for (k, s) in ix.subsets().enumerate() {
            let boundary = g
                .edges()
                .filter(|&(a, b)| s.contains(&a) != s.contains(&b))
                .count();
            assert_eq!(m.matrix().get(k, k), boundary as i64, "subset {s:?}");
        }
        assert!(m.matrix().row_sums().iter().all(|&x| x == 0));
    }

    #[test]
    fn delta_construction_agrees_on_examples() {
        for g in [star_a(), graph_b()] {
            let direct = level_matrix(&g, 2).unwrap();
            let via = level_matrix_via_eq4(&g).unwrap();
            assert_eq!(direct, via);
            assert!((0..via.dim()).all(|i| via.matrix().get(i, i) == 0));
        }
    }

    #[test]
    fn level_matrix_is_an_adjacency_matrix() {
        let g = Graph::new(7, [(1, 2), (2, 3), (3, 7), (4, 5), (1, 6), (6, 7)]).unwrap();
        for n in 0..=7 {
            let m = level_matrix(&g, n).unwrap();
            assert!(m.matrix().is_adjacency());
            if n > 0 {
                assert_eq!(m.to_graph().unwrap().n_vertices(), m.dim());
            }
        }
    }

    #[test]
    fn relabeling_conjugates_level_matrix() {
        let g = Graph::new(6, [(1, 2), (2, 3), (3, 4), (4, 1), (4, 5), (5, 6)]).unwrap();
        let p = Permutation::new(vec![4, 6, 1, 5, 3, 2]).unwrap();
        let h = g.apply_permutation(&p).unwrap();
        for n in 1..=3 {
            let q = induced_index_map(&p, n).unwrap();
            let lhs = level_matrix(&h, n).unwrap().into_matrix();
            let rhs = level_matrix(&g, n)
                .unwrap()
                .into_matrix()
                .conjugate(&q)
                .unwrap();
            assert_eq!(lhs, rhs);
        }
    }

    #[test]
    fn complement_conjugates_level_n_into_level_n_minus_complement() {
        let g = Graph::new(6, [(1, 2), (2, 3), (3, 4), (4, 5), (1, 5), (5, 6)]).unwrap();
        for n in 0..=6 {
            let q = complement_index_map(6, n).unwrap();
            let low = level_matrix(&g, n).unwrap().into_matrix();
            let high = level_matrix(&g, 6 - n).unwrap().into_matrix();
            assert_eq!(low.conjugate(&q).unwrap(), high);
        }
    }
}
