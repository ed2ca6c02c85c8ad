//! Seeded random sources: per-node streams, complex Ginibre matrices,
//! Haar-random unitaries, Rademacher sign vectors, and random states.
//!
//! Every stream is derived from a `(master_seed, stream_id)` pair, so the
//! public-coin setting maps onto all nodes deriving the same stream and
//! the private-coin setting onto per-node stream ids. No global RNG state
//! anywhere.

use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha12Rng;
use rand_distr::{Distribution, Normal, StandardNormal};

use crate::error::{Error, Result};
use crate::linalg::matrix::ComplexMatrix;
use crate::linalg::qr::qr;
use crate::linalg::DensityMatrix;

/// splitmix64 finalizer; a full-avalanche 64-bit mix.
fn mix64(mut x: u64) -> u64 {
    x = x.wrapping_add(0x9e37_79b9_7f4a_7c15);
    x = (x ^ (x >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
    x = (x ^ (x >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
    x ^ (x >> 31)
}

/// A reproducible random stream identified by a master seed and a stream
/// id (node index, trial index, ...). Identical pairs reproduce identical
/// draw sequences; distinct ids give independent streams.
#[derive(Debug, Clone)]
pub struct SeededStream {
    master_seed: u64,
    stream_id: u64,
    rng: ChaCha12Rng,
}

impl SeededStream {
    pub fn new(master_seed: u64, stream_id: u64) -> Self {
        let child = mix64(master_seed ^ mix64(stream_id));
        Self {
            master_seed,
            stream_id,
            rng: ChaCha12Rng::seed_from_u64(child),
        }
    }

    pub fn master_seed(&self) -> u64 {
        self.master_seed
    }

    pub fn stream_id(&self) -> u64 {
        self.stream_id
    }

    /// Derive a fresh stream for a sub-task, keyed off this stream's
    /// identity rather than its state.
    pub fn derive(&self, sub_id: u64) -> SeededStream {
        SeededStream::new(mix64(self.master_seed ^ mix64(self.stream_id)), sub_id)
    }

    pub fn standard_normal(&mut self) -> f64 {
        self.rng.sample(StandardNormal)
    }

    pub fn normal(&mut self, mean: f64, std_dev: f64) -> f64 {
        Normal::new(mean, std_dev).unwrap().sample(&mut self.rng)
    }

    pub fn uniform(&mut self) -> f64 {
        self.rng.gen::<f64>()
    }

    pub fn bernoulli(&mut self, p: f64) -> bool {
        self.rng.gen::<f64>() < p
    }

    pub fn gen_range(&mut self, upper: usize) -> usize {
        self.rng.gen_range(0..upper)
    }

    pub fn bits(&mut self, n: usize) -> Vec<bool> {
        (0..n).map(|_| self.rng.gen::<bool>()).collect()
    }
}

/// Complex Ginibre matrix: i.i.d. entries (N(0,1) + i N(0,1))/√2.
pub fn ginibre(dim: usize, src: &mut SeededStream) -> ComplexMatrix {
    let s = std::f64::consts::FRAC_1_SQRT_2;
    ComplexMatrix::from_fn(dim, dim, |_, _| {
        Complex64::new(src.standard_normal() * s, src.standard_normal() * s)
    })
}

/// Ensemble the protocol draws its shared unitaries from.
#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize, serde::Deserialize)]
pub enum UnitaryEnsemble {
    /// Exact Haar measure (default).
    Haar,
    /// Approximate 4-design from a brickwork circuit of Haar-random
    /// two-qubit gates; only defined for power-of-two dimensions. The
    /// protocol analysis touches at most fourth moments, so a 4-design
    /// is an admissible drop-in for the certification path.
    BrickworkDesign { layers: usize },
}

impl Default for UnitaryEnsemble {
    fn default() -> Self {
        UnitaryEnsemble::Haar
    }
}

/// Haar-random unitary via QR of a Ginibre matrix with the phase gauge
/// fixed: U = Q·diag(r_kk/|r_kk|). Without the phase correction the QR
/// factor is not Haar-distributed.
pub fn haar_unitary(dim: usize, src: &mut SeededStream) -> Result<ComplexMatrix> {
    if dim == 0 {
        return Err(Error::InvalidArgument("unitary dimension must be >= 1".into()));
    }
    let g = ginibre(dim, src);
    let (q, r) = qr(&g);
    let mut u = q;
    for k in 0..dim {
        let rkk = r[(k, k)];
        let phase = if rkk.norm() > 0.0 {
            rkk / rkk.norm()
        } else {
            Complex64::new(1.0, 0.0)
        };
        for i in 0..dim {
            u[(i, k)] *= phase;
        }
    }
    Ok(u)
}

/// Draw from the configured ensemble.
pub fn sample_unitary(
    dim: usize,
    ensemble: UnitaryEnsemble,
    src: &mut SeededStream,
) -> Result<ComplexMatrix> {
    match ensemble {
        UnitaryEnsemble::Haar => haar_unitary(dim, src),
        UnitaryEnsemble::BrickworkDesign { layers } => brickwork_unitary(dim, layers, src),
    }
}

/// Brickwork circuit of Haar-random two-qubit gates on n = log2(dim)
/// qubits, alternating even/odd nearest-neighbour pairings.
fn brickwork_unitary(dim: usize, layers: usize, src: &mut SeededStream) -> Result<ComplexMatrix> {
    if dim == 0 || !dim.is_power_of_two() {
        return Err(Error::InvalidArgument(format!(
            "brickwork ensemble needs a power-of-two dimension, got {}",
            dim
        )));
    }
    let n = dim.trailing_zeros() as usize;
    if n <= 1 {
        return haar_unitary(dim, src);
    }
    let mut u = ComplexMatrix::identity(dim);
    for layer in 0..layers.max(1) {
        let start = layer % 2;
        let mut q = start;
        while q + 1 < n {
            let gate = haar_unitary(4, src)?;
            let left = ComplexMatrix::identity(1 << q);
            let right = ComplexMatrix::identity(1 << (n - q - 2));
            let full = left.kron(&gate).kron(&right);
            u = full.matmul(&u);
            q += 2;
        }
    }
    Ok(u)
}

/// Uniform vector in {−1, +1}^len.
pub fn rademacher_vector(len: usize, src: &mut SeededStream) -> Vec<f64> {
    (0..len)
        .map(|_| if src.bernoulli(0.5) { 1.0 } else { -1.0 })
        .collect()
}

/// Random full-rank state GG†/tr(GG†) from a Ginibre G.
pub fn random_density(dim: usize, src: &mut SeededStream) -> DensityMatrix {
    let g = ginibre(dim, src);
    let gram = g.matmul(&g.adjoint());
    let trace = gram.trace().re;
    DensityMatrix::new(gram.scale_re(1.0 / trace)).expect("GG†/tr is a valid state")
}

/// Random pure state from a Ginibre column.
pub fn random_pure_state(dim: usize, src: &mut SeededStream) -> DensityMatrix {
    let s = std::f64::consts::FRAC_1_SQRT_2;
    let psi: Vec<Complex64> = (0..dim)
        .map(|_| Complex64::new(src.standard_normal() * s, src.standard_normal() * s))
        .collect();
    DensityMatrix::from_state_vector(&psi).expect("Ginibre vector is nonzero a.s.")
}

/// Random isometry: the first `cols` columns of a Haar unitary on `rows`
/// dimensions, obtained from a thin QR of a rows×cols Ginibre block.
pub fn random_isometry(rows: usize, cols: usize, src: &mut SeededStream) -> Result<ComplexMatrix> {
    if cols > rows {
        return Err(Error::InvalidArgument(format!(
            "isometry needs rows >= cols, got {}x{}",
            rows, cols
        )));
    }
    let s = std::f64::consts::FRAC_1_SQRT_2;
    let g = ComplexMatrix::from_fn(rows, cols, |_, _| {
        Complex64::new(src.standard_normal() * s, src.standard_normal() * s)
    });
    let (q, _) = qr(&g);
    Ok(q)
}
