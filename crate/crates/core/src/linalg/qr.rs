//! Householder QR for complex matrices.

use num_complex::Complex64;

use crate::linalg::matrix::ComplexMatrix;

/// Thin QR of an m×n matrix with m ≥ n: returns (Q m×n with orthonormal
/// columns, R n×n upper triangular) such that Q·R reproduces the input.
pub fn qr(m: &ComplexMatrix) -> (ComplexMatrix, ComplexMatrix) {
    let rows = m.rows();
    let cols = m.cols();
    assert!(rows >= cols, "thin QR needs rows >= cols");

    let mut r = m.clone();
    // Q accumulated as a full rows×rows product of reflectors.
    let mut q = ComplexMatrix::identity(rows);

    for k in 0..cols {
        // Householder vector for column k below the diagonal.
        let mut norm_x = 0.0;
        for i in k..rows {
            norm_x += r[(i, k)].norm_sqr();
        }
        let norm_x = norm_x.sqrt();
        if norm_x == 0.0 {
            continue;
        }
        let x0 = r[(k, k)];
        let phase = if x0.norm() > 0.0 {
            x0 / x0.norm()
        } else {
            Complex64::new(1.0, 0.0)
        };
        let alpha = -phase * norm_x;

        let mut v: Vec<Complex64> = (k..rows).map(|i| r[(i, k)]).collect();
        v[0] -= alpha;
        let vnorm = v.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt();
        if vnorm < f64::MIN_POSITIVE {
            continue;
        }
        for z in &mut v {
            *z /= vnorm;
        }

        // R ← (1 − 2vv†) R on the trailing block.
        for j in k..cols {
            let mut dot = Complex64::new(0.0, 0.0);
            for i in k..rows {
                dot += v[i - k].conj() * r[(i, j)];
            }
            let dot = dot * 2.0;
            for i in k..rows {
                let delta = v[i - k] * dot;
                r[(i, j)] -= delta;
            }
        }
        // Q ← Q (1 − 2vv†)
        for i in 0..rows {
            let mut dot = Complex64::new(0.0, 0.0);
            for j in k..rows {
                dot += q[(i, j)] * v[j - k];
            }
            let dot = dot * 2.0;
            for j in k..rows {
                let delta = dot * v[j - k].conj();
                q[(i, j)] -= delta;
            }
        }
    }

    let q_thin = ComplexMatrix::from_fn(rows, cols, |i, j| q[(i, j)]);
    let r_sq = ComplexMatrix::from_fn(cols, cols, |i, j| if i <= j { r[(i, j)] } else { Complex64::new(0.0, 0.0) });
    (q_thin, r_sq)
}
