//! Density matrices, bipartitions, and the partial trace.

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linalg::eig::hermitian_eig;
use crate::linalg::matrix::ComplexMatrix;
use crate::tol;

/// A bipartition of a d-dimensional system into subsystems A and B with
/// d = d_A · d_B; composite basis index is a·d_B + b.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Bipartition {
    pub dim_a: usize,
    pub dim_b: usize,
}

impl Bipartition {
    pub fn new(dim_a: usize, dim_b: usize) -> Result<Self> {
        if dim_a == 0 || dim_b == 0 {
            return Err(Error::InvalidArgument(
                "bipartition factors must be at least 1".into(),
            ));
        }
        Ok(Self { dim_a, dim_b })
    }

    pub fn total(&self) -> usize {
        self.dim_a * self.dim_b
    }
}

/// Which subsystem the partial trace keeps.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Keep {
    A,
    B,
}

/// Partial trace of a square matrix over one factor of the bipartition.
/// Linear, trace-preserving, Hermiticity-preserving.
pub fn partial_trace(m: &ComplexMatrix, part: Bipartition, keep: Keep) -> Result<ComplexMatrix> {
    let d = m.require_square()?;
    if d != part.total() {
        return Err(Error::DimensionMismatch {
            expected: format!("{}x{} ({}·{})", part.total(), part.total(), part.dim_a, part.dim_b),
            actual: format!("{}x{}", d, d),
        });
    }
    let (da, db) = (part.dim_a, part.dim_b);
    Ok(match keep {
        Keep::A => ComplexMatrix::from_fn(da, da, |a, a2| {
            (0..db).map(|b| m[(a * db + b, a2 * db + b)]).sum()
        }),
        Keep::B => ComplexMatrix::from_fn(db, db, |b, b2| {
            (0..da).map(|a| m[(a * db + b, a * db + b2)]).sum()
        }),
    })
}

/// A validated quantum state: Hermitian, PSD, unit trace.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct DensityMatrix {
    dim: usize,
    mat: ComplexMatrix,
}

impl DensityMatrix {
    /// Validate and wrap a candidate state. Checks Hermiticity, the PSD
    /// eigenvalue floor, and the trace, each at the crate tolerances.
    pub fn new(mat: ComplexMatrix) -> Result<Self> {
        let dim = mat.require_square()?;
        let dev = mat.hermiticity_deviation();
        if dev > tol::TAU_HERM {
            return Err(Error::NotHermitian {
                deviation: dev,
                tolerance: tol::TAU_HERM,
            });
        }
        let trace = mat.trace();
        if (trace.re - 1.0).abs() > tol::TAU_TR || trace.im.abs() > tol::TAU_TR {
            return Err(Error::TraceNotOne {
                trace: trace.re,
                tolerance: tol::TAU_TR,
            });
        }
        let eig = hermitian_eig(&mat, tol::TAU_HERM)?;
        let min_eig = eig.min_eigenvalue();
        if min_eig < -tol::TAU_PSD {
            return Err(Error::NotPsd {
                min_eigenvalue: min_eig,
            });
        }
        Ok(Self { dim, mat })
    }

    /// The maximally mixed state 1/d.
    pub fn maximally_mixed(dim: usize) -> Self {
        let mat = ComplexMatrix::identity(dim).scale_re(1.0 / dim as f64);
        Self { dim, mat }
    }

    /// The computational basis state |k⟩⟨k|.
    pub fn pure_basis(dim: usize, k: usize) -> Result<Self> {
        if k >= dim {
            return Err(Error::InvalidArgument(format!(
                "basis index {} out of range for dimension {}",
                k, dim
            )));
        }
        let mut mat = ComplexMatrix::zeros(dim, dim);
        mat[(k, k)] = Complex64::new(1.0, 0.0);
        Ok(Self { dim, mat })
    }

    /// Pure state |ψ⟩⟨ψ| from an amplitude vector (normalized here).
    pub fn from_state_vector(psi: &[Complex64]) -> Result<Self> {
        let norm: f64 = psi.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt();
        if norm < 1e-300 {
            return Err(Error::InvalidArgument("zero state vector".into()));
        }
        let dim = psi.len();
        let mat = ComplexMatrix::from_fn(dim, dim, |i, j| psi[i] * psi[j].conj() / (norm * norm));
        Ok(Self { dim, mat })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn mat(&self) -> &ComplexMatrix {
        &self.mat
    }

    pub fn into_mat(self) -> ComplexMatrix {
        self.mat
    }

    /// tr(ρ²).
    pub fn purity(&self) -> f64 {
        self.mat.hs_inner(&self.mat).re
    }

    /// ρ ⊗ σ.
    pub fn tensor(&self, other: &Self) -> Self {
        Self {
            dim: self.dim * other.dim,
            mat: self.mat.kron(&other.mat),
        }
    }

    /// Embed into a larger space by zero-padding the last directions.
    pub fn embed(&self, new_dim: usize) -> Result<Self> {
        if new_dim < self.dim {
            return Err(Error::DimensionMismatch {
                expected: format!("dimension >= {}", self.dim),
                actual: format!("{}", new_dim),
            });
        }
        let mat = ComplexMatrix::from_fn(new_dim, new_dim, |i, j| {
            if i < self.dim && j < self.dim {
                self.mat[(i, j)]
            } else {
                Complex64::new(0.0, 0.0)
            }
        });
        Ok(Self { dim: new_dim, mat })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::eig::{schatten_norm, SchattenP};

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    #[test]
    fn partial_trace_of_normalized_identity() {
        let part = Bipartition::new(2, 2).unwrap();
        let m = ComplexMatrix::identity(4).scale_re(0.25);
        let reduced = partial_trace(&m, part, Keep::A).unwrap();
        assert!(reduced.max_abs_diff(&ComplexMatrix::identity(2).scale_re(0.5)) < 1e-14);
    }

    #[test]
    fn partial_trace_of_product_basis_state() {
        let part = Bipartition::new(2, 2).unwrap();
        let rho = DensityMatrix::pure_basis(4, 0).unwrap(); // |00⟩⟨00|
        let reduced = partial_trace(rho.mat(), part, Keep::A).unwrap();
        let expected = DensityMatrix::pure_basis(2, 0).unwrap();
        assert!(reduced.max_abs_diff(expected.mat()) < 1e-14);
    }

    #[test]
    fn partial_trace_of_maximally_entangled_pair() {
        // |Φ+⟩ = (|00⟩ + |11⟩)/√2; contracting the B index by hand gives 1/2
        // on the kept qubit.
        let psi = [c(1.0, 0.0), c(0.0, 0.0), c(0.0, 0.0), c(1.0, 0.0)];
        let rho = DensityMatrix::from_state_vector(&psi).unwrap();
        let part = Bipartition::new(2, 2).unwrap();
        let reduced = partial_trace(rho.mat(), part, Keep::B).unwrap();
        assert!(reduced.max_abs_diff(&ComplexMatrix::identity(2).scale_re(0.5)) < 1e-14);
    }

    #[test]
    fn partial_trace_rejects_dimension_mismatch() {
        let part = Bipartition::new(2, 3).unwrap();
        let m = ComplexMatrix::identity(4);
        let err = partial_trace(&m, part, Keep::A).unwrap_err();
        match err {
            Error::DimensionMismatch { expected, actual } => {
                assert!(expected.contains("6"));
                assert!(actual.contains("4"));
            }
            other => panic!("unexpected error {other:?}"),
        }
    }

    #[test]
    fn density_matrix_rejects_bad_inputs() {
        // Non-unit trace.
        let m = ComplexMatrix::identity(2);
        assert!(matches!(DensityMatrix::new(m), Err(Error::TraceNotOne { .. })));
        // Negative eigenvalue.
        let m = ComplexMatrix::diag_real(&[1.5, -0.5]);
        assert!(matches!(DensityMatrix::new(m), Err(Error::NotPsd { .. })));
        // Non-Hermitian.
        let mut m = ComplexMatrix::identity(2).scale_re(0.5);
        m[(0, 1)] = c(0.3, 0.0);
        assert!(matches!(DensityMatrix::new(m), Err(Error::NotHermitian { .. })));
    }

    #[test]
    fn hs_distance_of_pure_vs_mixed_qudit() {
        // ‖diag(1,0,0,0) − 1/4‖₂ = √((3/4)² + 3·(1/4)²) = √3/2.
        let rho = DensityMatrix::pure_basis(4, 0).unwrap();
        let sigma = DensityMatrix::maximally_mixed(4);
        let delta = rho.mat().sub(sigma.mat());
        let d2 = schatten_norm(&delta, SchattenP::Two).unwrap();
        assert!((d2 - 3f64.sqrt() / 2.0).abs() < 1e-12);
    }
}
