use crate::error::{Error, Result};
use crate::graph::{Graph, Permutation};

pub const MAX_BRUTE_FORCE_VERTICES: usize = 10;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum IsomorphismResult {
    /// `g2.apply_permutation(witness) == g1`.
    Isomorphic(Permutation),
    NonIsomorphic,
}

impl IsomorphismResult {
    pub fn is_isomorphic(&self) -> bool {
        matches!(self, IsomorphismResult::Isomorphic(_))
    }
}

/// Exhaustive relabeling search. Vertices of `g2` are assigned images in
/// `g1` in order, candidates restricted to equal degree and checked for
/// adjacency consistency with every earlier assignment. The first witness
/// found is the lexicographically least one.
pub fn brute_force_isomorphic(g1: &Graph, g2: &Graph) -> Result<IsomorphismResult> {
    let n = g1.n_vertices();
    if g2.n_vertices() != n {
        return Err(Error::SizeMismatch {
            expected: n,
            actual: g2.n_vertices(),
        });
    }
    if n > MAX_BRUTE_FORCE_VERTICES {
        return Err(Error::guard(
            "brute-force isomorphism vertex count",
            n as u128,
            MAX_BRUTE_FORCE_VERTICES as u128,
        ));
    }
    if g1.edge_count() != g2.edge_count() || g1.degree_sequence() != g2.degree_sequence() {
        return Ok(IsomorphismResult::NonIsomorphic);
    }

    let search = Search {
        n,
        adj1: g1.adjacency_matrix().to_rows(),
        adj2: g2.adjacency_matrix().to_rows(),
        deg1: g1.degrees(),
        deg2: g2.degrees(),
    };
    let mut images = Vec::with_capacity(n);
    let mut used = vec![false; n];
    if search.extend(&mut images, &mut used) {
        let witness = Permutation::new(images.iter().map(|v| v + 1).collect())?;
        debug_assert_eq!(&g2.apply_permutation(&witness)?, g1);
        Ok(IsomorphismResult::Isomorphic(witness))
    } else {
        Ok(IsomorphismResult::NonIsomorphic)
    }
}

struct Search {
    n: usize,
    adj1: Vec<Vec<i64>>,
    adj2: Vec<Vec<i64>>,
    deg1: Vec<usize>,
    deg2: Vec<usize>,
}

impl Search {
    /// `images[v]` is the `g1` vertex (0-based) assigned to `g2` vertex `v`.
    fn extend(&self, images: &mut Vec<usize>, used: &mut [bool]) -> bool {
        let v = images.len();
        if v == self.n {
            return true;
        }
        for t in 0..self.n {
            if used[t] || self.deg1[t] != self.deg2[v] {
                continue;
            }
            let consistent = images
                .iter()
                .enumerate()
                .all(|(u, &s)| self.adj2[v][u] == self.adj1[t][s]);
            if !consistent {
                continue;
            }
            used[t] = true;
            images.push(t);
            if self.extend(images, used) {
                return true;
            }
            images.pop();
            used[t] = false;
        }
        false
    }
}
