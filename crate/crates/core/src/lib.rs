//! Graph invariants from the excitation blocks of an exchange Hamiltonian.
//!
//! Put a qubit on every vertex of a graph `G` and let neighbouring qubits
//! swap an excitation. The Hamiltonian conserves the number of excitations,
//! so it splits into blocks: the single-excitation block is the adjacency
//! matrix of `G`, the two-excitation block is a `C(N,2)`-dimensional matrix
//! indexed by vertex pairs, and so on. Relabeling vertices only permutes
//! basis states, so the spectrum of every block is a graph invariant, and
//! higher blocks separate graphs that lower ones cannot.
//!
//! ```
//! use exciton::{level_matrix, spectrum, compare_spectra, Graph};
//!
//! let star = Graph::new(5, [(1, 5), (2, 5), (3, 5), (4, 5)]).unwrap();
//! let square = Graph::new(5, [(1, 2), (2, 3), (3, 4), (1, 4)]).unwrap();
//!
//! // cospectral as adjacency matrices ...
//! let one = compare_spectra(&spectrum(&star.adjacency_matrix()), &spectrum(&square.adjacency_matrix()), 1e-9);
//! assert!(!one.is_different());
//!
//! // ... but the two-excitation blocks tell them apart
//! let a2 = spectrum(level_matrix(&star, 2).unwrap().matrix());
//! let b2 = spectrum(level_matrix(&square, 2).unwrap().matrix());
//! assert!(compare_spectra(&a2, &b2, 1e-9).is_different());
//! ```

pub mod catalog;
pub mod distinguish;
pub mod error;
pub mod formats;
pub mod graph;
pub mod level;
pub mod matrix;
pub mod oracle;
pub mod spectral;
pub mod subset;

pub use error::{Error, Result};
pub use formats::Format;
pub use graph::{Graph, Permutation};
pub use level::{
    level_laplacian, level_matrix, level_matrix_of, level_matrix_via_eq4, Flavor, LevelMatrix,
};
pub use matrix::SymmetricIntMatrix;
pub use spectral::{
    char_poly_exact, compare_spectra, spectra_equal_exact, spectrum, CharPoly, Spectrum,
    SpectrumVerdict,
};
pub use subset::SubsetIndexer;
