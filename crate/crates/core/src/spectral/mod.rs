//! Eigenvalue spectra of symmetric integer matrices.
//!
//! Floating-point spectra come from a dense symmetric eigensolver
//! (Householder tridiagonalization followed by implicit QR), which only
//! ever produces real eigenvalues. The exact characteristic polynomial in
//! [`charpoly`] gives a tolerance-free certificate for small matrices.

pub mod charpoly;
pub mod poly;

use std::fmt::Write as _;

use nalgebra::DMatrix;
use serde::{Deserialize, Serialize};

use crate::matrix::SymmetricIntMatrix;

pub use charpoly::{char_poly_exact, spectra_equal_exact, CharPoly, MAX_EXACT_DIM};

/// Eigenvalues with multiplicity, sorted ascending.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Spectrum {
    values: Vec<f64>,
}

impl Spectrum {
    /// Wraps precomputed eigenvalues, sorting them.
    pub fn from_values(mut values: Vec<f64>) -> Self {
        values.sort_by(f64::total_cmp);
        Self { values }
    }

    pub fn values(&self) -> &[f64] {
        &self.values
    }

    pub fn dim(&self) -> usize {
        self.values.len()
    }

    pub fn sum(&self) -> f64 {
        self.values.iter().sum()
    }

    pub fn sum_of_squares(&self) -> f64 {
        self.values.iter().map(|v| v * v).sum()
    }

    /// Groups values closer than `tol` to their neighbour into
    /// `(mean, multiplicity)` pairs, in descending order.
    pub fn grouped(&self, tol: f64) -> Vec<(f64, usize)> {
        let mut groups: Vec<(f64, usize)> = Vec::new();
        let mut start = 0;
        for k in 1..=self.values.len() {
            if k == self.values.len() || self.values[k] - self.values[k - 1] > tol {
                let run = &self.values[start..k];
                groups.push((run.iter().sum::<f64>() / run.len() as f64, run.len()));
                start = k;
            }
        }
        groups.reverse();
        groups
    }

    /// Multiplicity notation such as `{8^1, 2^11, -2^9, -4^3}`.
    pub fn render_grouped(&self, tol: f64) -> String {
        let mut out = String::from("{");
        for (k, (value, mult)) in self.grouped(tol).into_iter().enumerate() {
            if k > 0 {
                out.push_str(", ");
            }
            let _ = write!(out, "{}^{}", format_eigenvalue(value, tol), mult);
        }
        out.push('}');
        out
    }
}

/// Integers print without a fractional part; everything else with up to
/// six decimals.
pub fn format_eigenvalue(value: f64, tol: f64) -> String {
    let rounded = value.round();
    if (value - rounded).abs() <= tol.max(1e-9) {
        return format!("{}", rounded as i64);
    }
    let s = format!("{value:.6}");
    s.trim_end_matches('0').trim_end_matches('.').to_string()
}

pub fn spectrum(m: &SymmetricIntMatrix) -> Spectrum {
    let dim = m.dim();
    if dim == 0 {
        return Spectrum { values: Vec::new() };
    }
    let dense = DMatrix::from_row_iterator(dim, dim, m.as_row_major().iter().map(|&x| x as f64));
    Spectrum::from_values(dense.symmetric_eigenvalues().iter().copied().collect())
}

/// `10⁻⁸ · max(1, largest absolute row sum)` over the given matrices.
pub fn default_tolerance<'a>(matrices: impl IntoIterator<Item = &'a SymmetricIntMatrix>) -> f64 {
    let scale = matrices
        .into_iter()
        .map(SymmetricIntMatrix::max_abs_row_sum)
        .max()
        .unwrap_or(0);
    1e-8 * (scale.max(1) as f64)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Outcome {
    Equal,
    Different,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct SpectrumVerdict {
    pub outcome: Outcome,
    /// Largest positionwise gap between the sorted spectra; infinite when
    /// the dimensions differ.
    pub max_gap: f64,
    pub tolerance_used: f64,
    pub dimension_mismatch: bool,
}

impl SpectrumVerdict {
    pub fn is_different(&self) -> bool {
        self.outcome == Outcome::Different
    }
}

pub fn compare_spectra(s1: &Spectrum, s2: &Spectrum, tol: f64) -> SpectrumVerdict {
    if s1.dim() != s2.dim() {
        return SpectrumVerdict {
            outcome: Outcome::Different,
            max_gap: f64::INFINITY,
            tolerance_used: tol,
            dimension_mismatch: true,
        };
    }
    let max_gap = s1
        .values
        .iter()
        .zip(&s2.values)
        .map(|(a, b)| (a - b).abs())
        .fold(0.0, f64::max);
    SpectrumVerdict {
        outcome: if max_gap > tol {
            Outcome::Different
        } else {
            Outcome::Equal
        },
        max_gap,
        tolerance_used: tol,
        dimension_mismatch: false,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::tests::{graph_b, star_a};
    use crate::graph::Graph;
    use crate::level::level_matrix;

    fn assert_close(actual: &Spectrum, expected: &[f64], tol: f64) {
        assert_eq!(actual.dim(), expected.len());
        for (a, e) in actual.values().iter().zip(expected) {
            assert!((a - e).abs() < tol, "{actual:?} vs {expected:?}");
        }
    }

    #[test]
    fn level_one_spectra_of_the_cospectral_pair() {
        let expected = [-2.0, 0.0, 0.0, 0.0, 2.0];
        assert_close(&spectrum(&star_a().adjacency_matrix()), &expected, 1e-10);
        assert_close(&spectrum(&graph_b().adjacency_matrix()), &expected, 1e-10);
    }

    #[test]
    fn level_two_spectra_of_the_cospectral_pair() {
        let (r2, r6) = (2f64.sqrt(), 6f64.sqrt());
        let a2 = spectrum(level_matrix(&star_a(), 2).unwrap().matrix());
        assert_close(&a2, &[-r6, -r2, -r2, -r2, 0.0, 0.0, r2, r2, r2, r6], 1e-10);
        let b2 = spectrum(level_matrix(&graph_b(), 2).unwrap().matrix());
        let r8 = 2.0 * r2;
        assert_close(
            &b2,
            &[-r8, -2.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 2.0, r8],
            1e-10,
        );
        let v = compare_spectra(&a2, &b2, 1e-8);
        assert!(v.is_different());
        assert!(v.max_gap >= 2.0 * r2 - r6 - 1e-12);
    }

    #[test]
    fn zero_and_complete() {
        assert_close(&spectrum(&SymmetricIntMatrix::zeros(4)), &[0.0; 4], 1e-12);
        assert_eq!(spectrum(&SymmetricIntMatrix::zeros(0)).dim(), 0);
        for n in 2..8 {
            let s = spectrum(&Graph::complete(n).unwrap().adjacency_matrix());
            let mut expected = vec![-1.0; n - 1];
            expected.push((n - 1) as f64);
            assert_close(&s, &expected, 1e-10);
        }
    }

    #[test]
    fn comparison_semantics() {
        let s = Spectrum::from_values(vec![1.0, -1.0]);
        let v = compare_spectra(&s, &s, 1e-9);
        assert_eq!(v.outcome, Outcome::Equal);
        assert_eq!(v.max_gap, 0.0);

        let t = Spectrum::from_values(vec![1.0, -1.0, 0.0]);
        let v = compare_spectra(&s, &t, 1e-9);
        assert!(v.dimension_mismatch && v.is_different() && v.max_gap.is_infinite());

        let u = Spectrum::from_values(vec![-1.0, 1.0 + 5e-9]);
        assert_eq!(compare_spectra(&s, &u, 1e-8).outcome, Outcome::Equal);
        assert_eq!(compare_spectra(&s, &u, 1e-9).outcome, Outcome::Different);
    }

    #[test]
    fn grouped_rendering() {
        let s = Spectrum::from_values(vec![-2.0, 1e-15, -1e-15, 0.0, 2.0]);
        assert_eq!(s.render_grouped(1e-8), "{2^1, 0^3, -2^1}");
        let r = Spectrum::from_values(vec![-(6f64.sqrt()), 6f64.sqrt()]);
        assert_eq!(r.render_grouped(1e-8), "{2.44949^1, -2.44949^1}");
    }

    #[test]
    fn tolerance_scales_with_row_sums() {
        let k5 = Graph::complete(5).unwrap().adjacency_matrix();
        assert_eq!(default_tolerance([&k5]), 4e-8);
        assert_eq!(default_tolerance([&SymmetricIntMatrix::zeros(3)]), 1e-8);
    }
}
