//! Verification machinery built independently of the invariant code paths.

mod hamiltonian;
mod isomorphism;

pub use hamiltonian::{
    block_diagonal_check, exciton_block, full_hamiltonian, verify_block_equivalence,
    HamiltonianBlock, SparseHamiltonian, MAX_BLOCK_VERTICES, MAX_FULL_VERTICES,
};
pub use isomorphism::{brute_force_isomorphic, IsomorphismResult, MAX_BRUTE_FORCE_VERTICES};
