//! Dense complex linear algebra: matrices, Hermitian eigendecomposition,
//! Schatten norms, tensor products, partial trace, and vectorization.

pub mod density;
pub mod eig;
pub mod matrix;
pub mod qr;

pub use density::{partial_trace, Bipartition, DensityMatrix, Keep};
pub use eig::{
    hermitian_eig, operator_norm, pseudo_inverse_hermitian, schatten_norm, singular_values,
    trace_norm, HermitianEig, SchattenP,
};
pub use matrix::{devectorize, inner, vectorize, ComplexMatrix};
pub use qr::qr;
