//! Hermitian eigendecomposition via the cyclic Jacobi method, and the
//! singular-value machinery built on top of it.
//!
//! Everything the lab diagonalizes is Hermitian (states, Choi matrices,
//! Gram forms of Liouville matrices), so a complex Jacobi solver covers
//! the whole crate. Jacobi is slower than tridiagonalization but its
//! eigenvectors are accurate to machine precision, which the 1e-10-level
//! identity checks downstream rely on.

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::linalg::matrix::ComplexMatrix;

/// Eigenvalues (ascending) and eigenvectors (columns) of a Hermitian matrix.
#[derive(Debug, Clone)]
pub struct HermitianEig {
    pub eigenvalues: Vec<f64>,
    /// Unitary matrix whose k-th column is the eigenvector of `eigenvalues[k]`.
    pub eigenvectors: ComplexMatrix,
}

impl HermitianEig {
    /// Reconstruct V Λ V†.
    pub fn reconstruct(&self) -> ComplexMatrix {
        let lambda = ComplexMatrix::diag_real(&self.eigenvalues);
        self.eigenvectors
            .matmul(&lambda)
            .matmul(&self.eigenvectors.adjoint())
    }

    pub fn min_eigenvalue(&self) -> f64 {
        self.eigenvalues.iter().copied().fold(f64::INFINITY, f64::min)
    }

    pub fn max_eigenvalue(&self) -> f64 {
        self.eigenvalues.iter().copied().fold(f64::NEG_INFINITY, f64::max)
    }
}

const MAX_SWEEPS: usize = 100;

/// Diagonalize a Hermitian matrix. The input must be Hermitian within
/// `herm_tol`; the strictly-upper triangle and the real parts of the
/// diagonal are the data actually used.
pub fn hermitian_eig(m: &ComplexMatrix, herm_tol: f64) -> Result<HermitianEig> {
    let n = m.require_square()?;
    let dev = m.hermiticity_deviation();
    if dev > herm_tol {
        return Err(Error::NotHermitian {
            deviation: dev,
            tolerance: herm_tol,
        });
    }
    if n == 0 {
        return Ok(HermitianEig {
            eigenvalues: vec![],
            eigenvectors: ComplexMatrix::identity(0),
        });
    }

    // Work on the Hermitian average to kill the tolerated asymmetry.
    let mut a = m.add(&m.adjoint()).scale_re(0.5);
    let mut v = ComplexMatrix::identity(n);
    let fro = a.frobenius_norm().max(f64::MIN_POSITIVE);
    let stop = (fro * 1e-14).powi(2);

    for _ in 0..MAX_SWEEPS {
        let mut off = 0.0;
        for p in 0..n {
            for q in (p + 1)..n {
                off += a[(p, q)].norm_sqr();
            }
        }
        if 2.0 * off <= stop {
            break;
        }
        for p in 0..n {
            for q in (p + 1)..n {
                let apq = a[(p, q)];
                let beta = apq.norm();
                if beta <= fro * 1e-300 {
                    continue;
                }
                let phase = apq / beta; // e^{i φ}
                let alpha = a[(p, p)].re;
                let gamma = a[(q, q)].re;
                let tau = (gamma - alpha) / (2.0 * beta);
                let t = if tau >= 0.0 {
                    1.0 / (tau + (1.0 + tau * tau).sqrt())
                } else {
                    -1.0 / (-tau + (1.0 + tau * tau).sqrt())
                };
                let c = 1.0 / (1.0 + t * t).sqrt();
                let s = t * c;

                // 2x2 unitary J = diag(1, e^{-iφ}) · [[c, s], [-s, c]]
                let jpp = Complex64::new(c, 0.0);
                let jpq = Complex64::new(s, 0.0);
                let jqp = -phase.conj() * s;
                let jqq = phase.conj() * c;

                // Columns: A ← A·J
                for i in 0..n {
                    let aip = a[(i, p)];
                    let aiq = a[(i, q)];
                    a[(i, p)] = aip * jpp + aiq * jqp;
                    a[(i, q)] = aip * jpq + aiq * jqq;
                }
                // Rows: A ← J†·A
                for i in 0..n {
                    let api = a[(p, i)];
                    let aqi = a[(q, i)];
                    a[(p, i)] = jpp.conj() * api + jqp.conj() * aqi;
                    a[(q, i)] = jpq.conj() * api + jqq.conj() * aqi;
                }
                a[(p, q)] = Complex64::new(0.0, 0.0);
                a[(q, p)] = Complex64::new(0.0, 0.0);
                a[(p, p)] = Complex64::new(a[(p, p)].re, 0.0);
                a[(q, q)] = Complex64::new(a[(q, q)].re, 0.0);

                for i in 0..n {
                    let vip = v[(i, p)];
                    let viq = v[(i, q)];
                    v[(i, p)] = vip * jpp + viq * jqp;
                    v[(i, q)] = vip * jpq + viq * jqq;
                }
            }
        }
    }

    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&i, &j| a[(i, i)].re.partial_cmp(&a[(j, j)].re).unwrap());

    let eigenvalues: Vec<f64> = order.iter().map(|&i| a[(i, i)].re).collect();
    let mut eigenvectors = ComplexMatrix::zeros(n, n);
    for (new_col, &old_col) in order.iter().enumerate() {
        // Phase-fix: make the largest-magnitude entry real positive.
        let mut best = 0usize;
        let mut best_mag = -1.0;
        for i in 0..n {
            let mag = v[(i, old_col)].norm();
            if mag > best_mag + 1e-15 {
                best_mag = mag;
                best = i;
            }
        }
        let pivot = v[(best, old_col)];
        let fix = if pivot.norm() > 0.0 {
            pivot.conj() / pivot.norm()
        } else {
            Complex64::new(1.0, 0.0)
        };
        for i in 0..n {
            eigenvectors[(i, new_col)] = v[(i, old_col)] * fix;
        }
    }

    Ok(HermitianEig {
        eigenvalues,
        eigenvectors,
    })
}

/// Singular values in descending order, for any shape, as the square
/// roots of the eigenvalues of the smaller Gram matrix.
pub fn singular_values(m: &ComplexMatrix) -> Vec<f64> {
    let gram = if m.rows() <= m.cols() {
        m.matmul(&m.adjoint())
    } else {
        m.adjoint().matmul(m)
    };
    let eig = hermitian_eig(&gram, 1e-7 * (1.0 + gram.frobenius_norm()))
        .expect("Gram matrix is Hermitian by construction");
    let mut svs: Vec<f64> = eig
        .eigenvalues
        .iter()
        .map(|&l| l.max(0.0).sqrt())
        .collect();
    svs.sort_by(|a, b| b.partial_cmp(a).unwrap());
    svs
}

/// Largest singular value; any shape.
pub fn operator_norm(m: &ComplexMatrix) -> f64 {
    singular_values(m).first().copied().unwrap_or(0.0)
}

/// Sum of singular values; any shape.
pub fn trace_norm(m: &ComplexMatrix) -> f64 {
    singular_values(m).iter().sum()
}

/// The Schatten p-norms used in the lab.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SchattenP {
    One,
    Two,
    Infinity,
}

/// Schatten norm of a square matrix: p=1 sum of singular values,
/// p=2 Frobenius, p=∞ largest singular value.
pub fn schatten_norm(m: &ComplexMatrix, p: SchattenP) -> Result<f64> {
    m.require_square()?;
    Ok(match p {
        SchattenP::One => trace_norm(m),
        SchattenP::Two => m.frobenius_norm(),
        SchattenP::Infinity => operator_norm(m),
    })
}

/// Moore-Penrose pseudo-inverse of a Hermitian matrix: eigenvalues with
/// |λ| above `cutoff` are inverted, the rest are zeroed.
pub fn pseudo_inverse_hermitian(m: &ComplexMatrix, cutoff: f64) -> Result<ComplexMatrix> {
    let eig = hermitian_eig(m, crate::tol::TAU_HERM)?;
    let inv: Vec<f64> = eig
        .eigenvalues
        .iter()
        .map(|&l| if l.abs() > cutoff { 1.0 / l } else { 0.0 })
        .collect();
    let lambda = ComplexMatrix::diag_real(&inv);
    Ok(eig
        .eigenvectors
        .matmul(&lambda)
        .matmul(&eig.eigenvectors.adjoint()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::matrix::ComplexMatrix;
    use num_complex::Complex64;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    #[test]
    fn eig_of_pauli_y() {
        let y = ComplexMatrix::from_vec(2, 2, vec![c(0.0, 0.0), c(0.0, -1.0), c(0.0, 1.0), c(0.0, 0.0)]).unwrap();
        let eig = hermitian_eig(&y, 1e-12).unwrap();
        assert!((eig.eigenvalues[0] + 1.0).abs() < 1e-12);
        assert!((eig.eigenvalues[1] - 1.0).abs() < 1e-12);
        assert!(eig.reconstruct().max_abs_diff(&y) < 1e-12);
    }

    #[test]
    fn schatten_norms_of_diag_1_m1() {
        let m = ComplexMatrix::diag_real(&[1.0, -1.0]);
        assert!((schatten_norm(&m, SchattenP::One).unwrap() - 2.0).abs() < 1e-12);
        assert!((schatten_norm(&m, SchattenP::Two).unwrap() - 2f64.sqrt()).abs() < 1e-12);
        assert!((schatten_norm(&m, SchattenP::Infinity).unwrap() - 1.0).abs() < 1e-12);
    }

    #[test]
    fn schatten_norm_of_identity() {
        for d in [2usize, 5, 9] {
            let m = ComplexMatrix::identity(d);
            assert!((schatten_norm(&m, SchattenP::Two).unwrap() - (d as f64).sqrt()).abs() < 1e-12);
        }
    }

    #[test]
    fn schatten_rejects_non_square() {
        let m = ComplexMatrix::zeros(2, 3);
        assert!(schatten_norm(&m, SchattenP::One).is_err());
    }
}
