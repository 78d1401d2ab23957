//! The exchange Hamiltonian `H = Σ_{i~j} (S⁺_i S⁻_j + S⁻_i S⁺_j)` on `N`
//! qubits, built by applying raising and lowering operators to basis
//! states.
//!
//! A basis state is a bitmask: bit `v - 1` set means qubit `v` is excited.
//! `S⁺_i S⁻_j` maps `|S⟩` to `|S - j + i⟩` when `j ∈ S` and `i ∉ S`, and
//! annihilates it otherwise.

use std::collections::{BTreeMap, HashMap};

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::level::level_matrix;
use crate::matrix::SymmetricIntMatrix;

pub const MAX_BLOCK_VERTICES: usize = 14;
pub const MAX_FULL_VERTICES: usize = 8;

/// The `n`-excitation block in the lexicographic subset basis.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HamiltonianBlock {
    pub level: usize,
    pub basis: Vec<Vec<usize>>,
    pub matrix: SymmetricIntMatrix,
}

/// All of `H` in the computational basis (state index = bitmask), as
/// `(row, col, value)` triples with nonzero values, sorted.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SparseHamiltonian {
    pub n_qubits: usize,
    pub entries: Vec<(u32, u32, i64)>,
}

fn elements(mask: u32) -> Vec<usize> {
    (0..32)
        .filter(|b| mask >> b & 1 == 1)
        .map(|b| b as usize + 1)
        .collect()
}

/// Images of `state` under each nonzero edge term.
fn hop(g: &Graph, state: u32, mut emit: impl FnMut(u32)) {
    for (a, b) in g.edges() {
        let (bit_a, bit_b) = (1u32 << (a - 1), 1u32 << (b - 1));
        let (has_a, has_b) = (state & bit_a != 0, state & bit_b != 0);
        // S⁺_a S⁻_b: lower b, raise a
        if has_b && !has_a {
            emit(state ^ bit_b ^ bit_a);
        }
        // S⁻_a S⁺_b: lower a, raise b
        if has_a && !has_b {
            emit(state ^ bit_a ^ bit_b);
        }
    }
}

pub fn exciton_block(g: &Graph, level: usize) -> Result<HamiltonianBlock> {
    let n = g.n_vertices();
    if n > MAX_BLOCK_VERTICES {
        return Err(Error::guard(
            "exciton block vertex count",
            n as u128,
            MAX_BLOCK_VERTICES as u128,
        ));
    }
    if level > n {
        return Err(Error::LevelOutOfRange {
            level,
            min: 0,
            max: n,
        });
    }
    let mut states: Vec<(Vec<usize>, u32)> = (0u32..1 << n)
        .filter(|s| s.count_ones() as usize == level)
        .map(|s| (elements(s), s))
        .collect();
    states.sort();
    let index: HashMap<u32, usize> = states
        .iter()
        .enumerate()
        .map(|(k, &(_, s))| (s, k))
        .collect();

    let dim = states.len();
    let mut grid = vec![0i64; dim * dim];
    for (col, &(_, state)) in states.iter().enumerate() {
        hop(g, state, |target| {
            let row = index[&target];
            grid[row * dim + col] += 1;
        });
    }
    Ok(HamiltonianBlock {
        level,
        basis: states.into_iter().map(|(e, _)| e).collect(),
        matrix: SymmetricIntMatrix::from_row_major(dim, grid)?,
    })
}

/// Compares the operator-built block with the combinatorial level matrix.
pub fn verify_block_equivalence(g: &Graph, level: usize) -> Result<bool> {
    let block = exciton_block(g, level)?;
    Ok(&block.matrix == level_matrix(g, level)?.matrix())
}

pub fn full_hamiltonian(g: &Graph) -> Result<SparseHamiltonian> {
    let n = g.n_vertices();
    if n > MAX_FULL_VERTICES {
        return Err(Error::guard(
            "full Hamiltonian qubit count",
            n as u128,
            MAX_FULL_VERTICES as u128,
        ));
    }
    let mut acc: BTreeMap<(u32, u32), i64> = BTreeMap::new();
    for state in 0u32..1 << n {
        hop(g, state, |target| {
            *acc.entry((target, state)).or_insert(0) += 1
        });
    }
    Ok(SparseHamiltonian {
        n_qubits: n,
        entries: acc
            .into_iter()
            .filter(|&(_, v)| v != 0)
            .map(|((r, c), v)| (r, c, v))
            .collect(),
    })
}

/// Checks that `H` never couples different excitation numbers and that,
/// regrouped by excitation number, its diagonal blocks are exactly the
/// exciton blocks.
pub fn block_diagonal_check(g: &Graph) -> Result<bool> {
    let h = full_hamiltonian(g)?;
    if h.entries
        .iter()
        .any(|&(r, c, _)| r.count_ones() != c.count_ones())
    {
        return Ok(false);
    }
    let n = h.n_qubits;
    for level in 0..=n {
        let block = exciton_block(g, level)?;
        let position: HashMap<u32, usize> = block
            .basis
            .iter()
            .enumerate()
            .map(|(k, s)| (s.iter().map(|v| 1u32 << (v - 1)).sum(), k))
            .collect();
        let dim = block.basis.len();
        let mut grid = vec![0i64; dim * dim];
        for &(r, c, v) in h
            .entries
            .iter()
            .filter(|&&(r, _, _)| r.count_ones() as usize == level)
        {
            grid[position[&r] * dim + position[&c]] = v;
        }
        if grid != block.matrix.as_row_major() {
            return Ok(false);
        }
    }
    Ok(true)
}
