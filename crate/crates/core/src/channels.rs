//! Quantum channels in Kraus, Liouville, and Choi form, the compression
//! channel tr_B(UρU†), mixedness-preservation checks, and the norm
//! bounds its analysis uses.
//!
//! All rearrangements are pinned to the crate's row-major vectorization:
//! vec(AXB) = (A ⊗ Bᵀ)·vec(X), so a Kraus set {A_k} has Liouville matrix
//! M = Σ_k A_k ⊗ conj(A_k) and Choi matrix J[(i,m),(j,n)] = M[(m,n),(i,j)].

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linalg::{
    hermitian_eig, operator_norm, partial_trace, trace_norm, Bipartition, ComplexMatrix,
    DensityMatrix, Keep,
};
use crate::random::SeededStream;
use crate::tol;

/// A channel given by Kraus operators {A_k} ⊆ C^{d_out×d_in} with
/// Σ A_k†A_k = 1 (trace preserving).
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct KrausChannel {
    dim_in: usize,
    dim_out: usize,
    kraus: Vec<ComplexMatrix>,
}

impl KrausChannel {
    pub fn new(dim_in: usize, dim_out: usize, kraus: Vec<ComplexMatrix>) -> Result<Self> {
        if kraus.is_empty() {
            return Err(Error::InvalidArgument("empty Kraus operator list".into()));
        }
        for a in &kraus {
            if a.rows() != dim_out || a.cols() != dim_in {
                return Err(Error::DimensionMismatch {
                    expected: format!("{}x{} Kraus operator", dim_out, dim_in),
                    actual: format!("{}x{}", a.rows(), a.cols()),
                });
            }
        }
        let mut sum = ComplexMatrix::zeros(dim_in, dim_in);
        for a in &kraus {
            sum = sum.add(&a.adjoint().matmul(a));
        }
        let dev = sum.max_abs_diff(&ComplexMatrix::identity(dim_in));
        if dev > tol::TAU_HERM {
            return Err(Error::InvalidArgument(format!(
                "Kraus completeness violated: max deviation {dev:.3e}"
            )));
        }
        Ok(Self { dim_in, dim_out, kraus })
    }

    pub fn dim_in(&self) -> usize {
        self.dim_in
    }

    pub fn dim_out(&self) -> usize {
        self.dim_out
    }

    pub fn kraus_operators(&self) -> &[ComplexMatrix] {
        &self.kraus
    }

    /// Φ(X) = Σ_k A_k X A_k†.
    pub fn apply(&self, x: &ComplexMatrix) -> ComplexMatrix {
        let mut out = ComplexMatrix::zeros(self.dim_out, self.dim_out);
        for a in &self.kraus {
            out = out.add(&a.matmul(x).matmul(&a.adjoint()));
        }
        out
    }

    pub fn apply_state(&self, rho: &DensityMatrix) -> Result<DensityMatrix> {
        DensityMatrix::new(self.apply(rho.mat()))
    }

    /// The adjoint map Φ*(Y) = Σ_k A_k† Y A_k (unital when Φ is
    /// trace preserving).
    pub fn adjoint_apply(&self, y: &ComplexMatrix) -> ComplexMatrix {
        let mut out = ComplexMatrix::zeros(self.dim_in, self.dim_in);
        for a in &self.kraus {
            out = out.add(&a.adjoint().matmul(y).matmul(a));
        }
        out
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("Kraus channel serializes")
    }

    pub fn from_json(s: &str) -> Result<Self> {
        let raw: KrausChannel = serde_json::from_str(s)
            .map_err(|e| Error::InvalidArgument(format!("bad channel JSON: {e}")))?;
        Self::new(raw.dim_in, raw.dim_out, raw.kraus)
    }
}

/// Liouville (transfer-matrix) representation: vec(Φ(X)) = M·vec(X).
#[derive(Debug, Clone, PartialEq)]
pub struct LiouvilleMatrix {
    pub mat: ComplexMatrix,
}

/// Choi representation J(Φ) = Σ_{ij} |i⟩⟨j| ⊗ Φ(|i⟩⟨j|).
#[derive(Debug, Clone, PartialEq)]
pub struct ChoiMatrix {
    pub mat: ComplexMatrix,
}

/// M = Σ_k A_k ⊗ conj(A_k) under row-major vectorization.
pub fn kraus_to_liouville(ch: &KrausChannel) -> LiouvilleMatrix {
    let mut m = ComplexMatrix::zeros(ch.dim_out * ch.dim_out, ch.dim_in * ch.dim_in);
    for a in &ch.kraus {
        m = m.add(&a.kron(&a.conjugate()));
    }
    LiouvilleMatrix { mat: m }
}

/// Entry shuffle J[(i·d_out + m), (j·d_out + n)] = M[(m·d_out + n), (i·d_in + j)].
pub fn liouville_to_choi(m: &LiouvilleMatrix, dim_in: usize, dim_out: usize) -> Result<ChoiMatrix> {
    if m.mat.rows() != dim_out * dim_out || m.mat.cols() != dim_in * dim_in {
        return Err(Error::DimensionMismatch {
            expected: format!("{}x{} Liouville matrix", dim_out * dim_out, dim_in * dim_in),
            actual: format!("{}x{}", m.mat.rows(), m.mat.cols()),
        });
    }
    let j = ComplexMatrix::from_fn(dim_in * dim_out, dim_in * dim_out, |row, col| {
        let (i, mm) = (row / dim_out, row % dim_out);
        let (jj, nn) = (col / dim_out, col % dim_out);
        m.mat[(mm * dim_out + nn, i * dim_in + jj)]
    });
    Ok(ChoiMatrix { mat: j })
}

/// Kraus operators from the Choi eigendecomposition; eigenvalues below
/// the support cutoff are discarded.
pub fn choi_to_kraus(j: &ChoiMatrix, dim_in: usize, dim_out: usize) -> Result<KrausChannel> {
    if j.mat.rows() != dim_in * dim_out {
        return Err(Error::DimensionMismatch {
            expected: format!("{} rows", dim_in * dim_out),
            actual: format!("{}", j.mat.rows()),
        });
    }
    let eig = hermitian_eig(&j.mat, 1e-8)?;
    let mut kraus = Vec::new();
    for (k, &lambda) in eig.eigenvalues.iter().enumerate() {
        if lambda <= tol::SUPPORT_CUTOFF {
            continue;
        }
        let scale = lambda.sqrt();
        let a = ComplexMatrix::from_fn(dim_out, dim_in, |m, i| {
            eig.eigenvectors[(i * dim_out + m, k)] * scale
        });
        kraus.push(a);
    }
    KrausChannel::new(dim_in, dim_out, kraus)
}

/// A channel held simultaneously in all three representations, with its
/// Liouville norms cached.
#[derive(Debug, Clone)]
pub struct ChannelBundle {
    pub kraus: KrausChannel,
    pub liouville: LiouvilleMatrix,
    pub choi: ChoiMatrix,
    pub norm2: f64,
    pub norm_inf: f64,
}

impl ChannelBundle {
    /// Build all representations and verify they agree on fixed
    /// pseudo-random probe inputs.
    pub fn from_kraus(kraus: KrausChannel) -> Result<Self> {
        let liouville = kraus_to_liouville(&kraus);
        let choi = liouville_to_choi(&liouville, kraus.dim_in(), kraus.dim_out())?;
        let norm2 = liouville.mat.frobenius_norm();
        let norm_inf = operator_norm(&liouville.mat);
        let bundle = Self {
            kraus,
            liouville,
            choi,
            norm2,
            norm_inf,
        };
        let dev = bundle.representation_deviation();
        if dev > 1e-9 {
            return Err(Error::InvalidArgument(format!(
                "channel representations disagree on probe inputs: {dev:.3e}"
            )));
        }
        Ok(bundle)
    }

    pub fn dim_in(&self) -> usize {
        self.kraus.dim_in()
    }

    pub fn dim_out(&self) -> usize {
        self.kraus.dim_out()
    }

    pub fn apply(&self, x: &ComplexMatrix) -> ComplexMatrix {
        self.kraus.apply(x)
    }

    pub fn apply_state(&self, rho: &DensityMatrix) -> Result<DensityMatrix> {
        self.kraus.apply_state(rho)
    }

    /// Largest deviation between the three representations on unit-norm
    /// probe inputs (Kraus action vs Liouville action vs Choi-rebuilt
    /// Kraus action).
    pub fn representation_deviation(&self) -> f64 {
        let mut probe_src = SeededStream::new(0xC0FF_EE00, 17);
        let mut worst: f64 = 0.0;
        let rebuilt = match choi_to_kraus(&self.choi, self.dim_in(), self.dim_out()) {
            Ok(ch) => ch,
            Err(_) => return f64::INFINITY,
        };
        for _ in 0..3 {
            let x = crate::random::ginibre(self.dim_in(), &mut probe_src);
            let x = x.scale_re(1.0 / x.frobenius_norm());
            let via_kraus = self.kraus.apply(&x);
            let via_liouville =
                crate::linalg::devectorize(&self.liouville.mat.matvec(x.entries()))
                    .expect("square output");
            let via_choi = rebuilt.apply(&x);
            worst = worst
                .max(via_kraus.max_abs_diff(&via_liouville))
                .max(via_kraus.max_abs_diff(&via_choi));
        }
        worst
    }
}

/// The compression channel Φ_U(ρ) = tr_B(UρU†) with Kraus operators
/// A_k = (1_A ⊗ ⟨k|_B)·U for k ∈ [d_B].
pub fn compression_channel(u: &ComplexMatrix, part: Bipartition) -> Result<ChannelBundle> {
    let d = u.require_square()?;
    if d != part.total() {
        return Err(Error::DimensionMismatch {
            expected: format!("{}x{} unitary", part.total(), part.total()),
            actual: format!("{}x{}", d, d),
        });
    }
    let residual = u.unitarity_residual();
    if residual > tol::TAU_UNITARY {
        return Err(Error::NotUnitary { residual });
    }
    let (da, db) = (part.dim_a, part.dim_b);
    let kraus: Vec<ComplexMatrix> = (0..db)
        .map(|k| ComplexMatrix::from_fn(da, d, |a, j| u[(a * db + k, j)]))
        .collect();
    ChannelBundle::from_kraus(KrausChannel::new(d, da, kraus)?)
}

/// The completely depolarizing channel ρ ↦ tr(ρ)·1/d_out.
pub fn depolarizing_channel(dim_in: usize, dim_out: usize) -> Result<ChannelBundle> {
    // Kraus set {|m⟩⟨i|/√d_out}: Σ A†A = 1_{d_in}.
    let scale = 1.0 / (dim_out as f64).sqrt();
    let mut kraus = Vec::with_capacity(dim_in * dim_out);
    for m in 0..dim_out {
        for i in 0..dim_in {
            let mut a = ComplexMatrix::zeros(dim_out, dim_in);
            a[(m, i)] = Complex64::new(scale, 0.0);
            kraus.push(a);
        }
    }
    ChannelBundle::from_kraus(KrausChannel::new(dim_in, dim_out, kraus)?)
}

/// The replacement channel ρ ↦ tr(ρ)·|0⟩⟨0| (not mixedness preserving
/// for d_out ≥ 2).
pub fn replacement_channel(dim_in: usize, dim_out: usize) -> Result<ChannelBundle> {
    let mut kraus = Vec::with_capacity(dim_in);
    for i in 0..dim_in {
        let mut a = ComplexMatrix::zeros(dim_out, dim_in);
        a[(0, i)] = Complex64::new(1.0, 0.0);
        kraus.push(a);
    }
    ChannelBundle::from_kraus(KrausChannel::new(dim_in, dim_out, kraus)?)
}

/// The identity channel.
pub fn identity_channel(dim: usize) -> Result<ChannelBundle> {
    ChannelBundle::from_kraus(KrausChannel::new(dim, dim, vec![ComplexMatrix::identity(dim)])?)
}

/// ‖Φ(1/d) − 1/d_out‖₂ ≤ tol?
pub fn is_mixedness_preserving(ch: &ChannelBundle, tolerance: f64) -> bool {
    mixedness_deviation(ch) <= tolerance
}

pub fn mixedness_deviation(ch: &ChannelBundle) -> f64 {
    let din = ch.dim_in();
    let dout = ch.dim_out();
    let image = ch.apply(&ComplexMatrix::identity(din).scale_re(1.0 / din as f64));
    image
        .sub(&ComplexMatrix::identity(dout).scale_re(1.0 / dout as f64))
        .frobenius_norm()
}

/// Norms of the Liouville matrix against the mixedness-preserving-channel
/// bounds ‖M‖₂ ≤ √(d·d_q) and ‖M‖_∞ ≤ √(d/d_q).
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct NormBoundReport {
    pub dim_in: usize,
    pub dim_out: usize,
    pub mixedness_preserving: bool,
    pub norm2: f64,
    pub norm2_bound: f64,
    pub norm2_ok: bool,
    pub norm_inf: f64,
    pub norm_inf_bound: f64,
    pub norm_inf_ok: bool,
}

const NORM_BOUND_SLACK: f64 = 1e-9;

pub fn norm_bound_check(ch: &ChannelBundle) -> NormBoundReport {
    let d = ch.dim_in() as f64;
    let dq = ch.dim_out() as f64;
    let norm2_bound = (d * dq).sqrt();
    let norm_inf_bound = (d / dq).sqrt();
    NormBoundReport {
        dim_in: ch.dim_in(),
        dim_out: ch.dim_out(),
        mixedness_preserving: is_mixedness_preserving(ch, 1e-9),
        norm2: ch.norm2,
        norm2_bound,
        norm2_ok: ch.norm2 <= norm2_bound + NORM_BOUND_SLACK,
        norm_inf: ch.norm_inf,
        norm_inf_bound,
        norm_inf_ok: ch.norm_inf <= norm_inf_bound + NORM_BOUND_SLACK,
    }
}

/// Min eigenvalue of Φ*(Y†Y) − Φ*(Y)†Φ*(Y); nonnegative (within
/// tolerance) because the adjoint of a channel is unital and completely
/// positive.
pub fn kadison_schwarz_probe(ch: &ChannelBundle, y: &ComplexMatrix) -> Result<f64> {
    if y.rows() != ch.dim_out() || y.cols() != ch.dim_out() {
        return Err(Error::DimensionMismatch {
            expected: format!("{0}x{0} probe", ch.dim_out()),
            actual: format!("{}x{}", y.rows(), y.cols()),
        });
    }
    let lhs = ch.kraus.adjoint_apply(&y.adjoint().matmul(y));
    let phi_y = ch.kraus.adjoint_apply(y);
    let gap = lhs.sub(&phi_y.adjoint().matmul(&phi_y));
    let eig = hermitian_eig(&gap, 1e-8)?;
    Ok(eig.min_eigenvalue())
}

/// Random mixedness-preserving channel: a convex mixture of compression
/// channels Φ_{U_i} with random weights. Compression channels are
/// mixedness preserving, and the class is convex, so the mixture is too.
pub fn random_mixedness_preserving(
    dim_in: usize,
    dim_out: usize,
    components: usize,
    src: &mut SeededStream,
) -> Result<ChannelBundle> {
    if dim_out > dim_in || dim_in % dim_out != 0 {
        return Err(Error::InvalidArgument(format!(
            "compression mixture needs d_out | d_in, got {dim_in} -> {dim_out}"
        )));
    }
    let part = Bipartition::new(dim_out, dim_in / dim_out)?;
    let k = components.max(1);
    let mut weights: Vec<f64> = (0..k).map(|_| src.uniform() + 1e-3).collect();
    let total: f64 = weights.iter().sum();
    for w in &mut weights {
        *w /= total;
    }
    let mut kraus = Vec::new();
    for &w in &weights {
        let u = crate::random::haar_unitary(dim_in, src)?;
        let comp = compression_channel(&u, part)?;
        for a in comp.kraus.kraus_operators() {
            kraus.push(a.scale_re(w.sqrt()));
        }
    }
    ChannelBundle::from_kraus(KrausChannel::new(dim_in, dim_out, kraus)?)
}

/// Protocol-side embedding dimension for d_q ∤ d: the smallest multiple
/// of d_q that is ≥ d. Padding occupies the last directions.
pub fn embedding_dimension(d: usize, d_q: usize) -> usize {
    d_q * d.div_ceil(d_q)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::SchattenP;

    #[test]
    fn identity_channel_liouville_is_identity() {
        let ch = identity_channel(3).unwrap();
        assert!(ch.liouville.mat.max_abs_diff(&ComplexMatrix::identity(9)) < 1e-12);
    }

    #[test]
    fn depolarizing_liouville_norm_matches_rank_one_value() {
        // M = vec(1_2/2)·vec(1_4)ᵀ, so ‖M‖₂ = ‖vec(1_2/2)‖·‖vec(1_4)‖ = √2.
        let ch = depolarizing_channel(4, 2).unwrap();
        assert!((ch.norm2 - 2f64.sqrt()).abs() < 1e-10, "norm2 = {}", ch.norm2);
        assert!((ch.norm_inf - 2f64.sqrt()).abs() < 1e-10);
        let report = norm_bound_check(&ch);
        assert!(report.mixedness_preserving);
        assert!(report.norm2_ok && report.norm_inf_ok);
        assert!((report.norm2_bound - 8f64.sqrt()).abs() < 1e-12);
        assert!((report.norm_inf_bound - 2f64.sqrt()).abs() < 1e-12);
    }

    #[test]
    fn identity_channel_norms_meet_bounds_with_equality() {
        let d = 3;
        let ch = identity_channel(d).unwrap();
        let report = norm_bound_check(&ch);
        assert!((report.norm2 - d as f64).abs() < 1e-10);
        assert!((report.norm_inf - 1.0).abs() < 1e-10);
        assert!(report.norm2_ok && report.norm_inf_ok);
    }

    #[test]
    fn liouville_action_matches_kraus_on_random_probes() {
        let mut src = SeededStream::new(5, 1);
        let u = crate::random::haar_unitary(8, &mut src).unwrap();
        let ch = compression_channel(&u, Bipartition::new(2, 4).unwrap()).unwrap();
        for _ in 0..20 {
            let x = crate::random::ginibre(8, &mut src);
            let lhs = ch.kraus.apply(&x);
            let rhs = crate::linalg::devectorize(&ch.liouville.mat.matvec(x.entries())).unwrap();
            assert!(lhs.max_abs_diff(&rhs) < 1e-10);
        }
    }

    #[test]
    fn kraus_choi_round_trip_preserves_action() {
        let mut src = SeededStream::new(6, 2);
        let u = crate::random::haar_unitary(6, &mut src).unwrap();
        let ch = compression_channel(&u, Bipartition::new(3, 2).unwrap()).unwrap();
        let rebuilt = choi_to_kraus(&ch.choi, 6, 3).unwrap();
        for _ in 0..5 {
            let x = crate::random::ginibre(6, &mut src);
            assert!(ch.kraus.apply(&x).max_abs_diff(&rebuilt.apply(&x)) < 1e-9);
        }
    }

    #[test]
    fn choi_marginal_facts() {
        let mut src = SeededStream::new(7, 3);
        let u = crate::random::haar_unitary(8, &mut src).unwrap();
        let ch = compression_channel(&u, Bipartition::new(2, 4).unwrap()).unwrap();
        // tr_B(J) = 1_{d_in} and tr(J) = d_in; J ⪰ 0.
        let marg = partial_trace(&ch.choi.mat, Bipartition::new(8, 2).unwrap(), Keep::A).unwrap();
        assert!(marg.max_abs_diff(&ComplexMatrix::identity(8)) < 1e-9);
        assert!((ch.choi.mat.trace().re - 8.0).abs() < 1e-9);
        let eig = hermitian_eig(&ch.choi.mat, 1e-8).unwrap();
        assert!(eig.min_eigenvalue() > -tol::TAU_PSD);
    }

    #[test]
    fn compression_channel_fixes_maximally_mixed_state() {
        let mut src = SeededStream::new(8, 4);
        for _ in 0..10 {
            let u = crate::random::haar_unitary(8, &mut src).unwrap();
            let ch = compression_channel(&u, Bipartition::new(2, 4).unwrap()).unwrap();
            let out = ch.apply(&ComplexMatrix::identity(8).scale_re(1.0 / 8.0));
            assert!(out.max_abs_diff(&ComplexMatrix::identity(2).scale_re(0.5)) < 1e-10);
            assert!(is_mixedness_preserving(&ch, 1e-10));
        }
    }

    #[test]
    fn compression_with_identity_unitary_is_partial_trace() {
        let part = Bipartition::new(2, 3).unwrap();
        let ch = compression_channel(&ComplexMatrix::identity(6), part).unwrap();
        let mut src = SeededStream::new(9, 5);
        let rho = crate::random::random_density(6, &mut src);
        let direct = partial_trace(rho.mat(), part, Keep::A).unwrap();
        assert!(ch.apply(rho.mat()).max_abs_diff(&direct) < 1e-12);
    }

    #[test]
    fn compression_preserves_trace_on_random_states() {
        let mut src = SeededStream::new(10, 6);
        for _ in 0..50 {
            let u = crate::random::haar_unitary(8, &mut src).unwrap();
            let ch = compression_channel(&u, Bipartition::new(2, 4).unwrap()).unwrap();
            let rho = crate::random::random_density(8, &mut src);
            let out = ch.apply(rho.mat());
            assert!((out.trace().re - 1.0).abs() < 1e-10);
        }
    }

    #[test]
    fn compression_rejects_non_unitary() {
        let m = ComplexMatrix::identity(4).scale_re(1.1);
        assert!(matches!(
            compression_channel(&m, Bipartition::new(2, 2).unwrap()),
            Err(Error::NotUnitary { .. })
        ));
    }

    #[test]
    fn replacement_channel_is_not_mixedness_preserving() {
        let ch = replacement_channel(4, 2).unwrap();
        assert!(!is_mixedness_preserving(&ch, 1e-9));
        let dep = depolarizing_channel(4, 2).unwrap();
        assert!(is_mixedness_preserving(&dep, 1e-12));
    }

    #[test]
    fn data_processing_contracts_trace_distance() {
        let mut src = SeededStream::new(11, 7);
        for _ in 0..10 {
            let u = crate::random::haar_unitary(8, &mut src).unwrap();
            let ch = compression_channel(&u, Bipartition::new(2, 4).unwrap()).unwrap();
            let rho = crate::random::random_density(8, &mut src);
            let sigma = crate::random::random_density(8, &mut src);
            let before = trace_norm(&rho.mat().sub(sigma.mat()));
            let after = trace_norm(&ch.apply(rho.mat()).sub(&ch.apply(sigma.mat())));
            assert!(after <= before + 1e-9, "{after} > {before}");
        }
    }

    #[test]
    fn kadison_schwarz_gap_nonnegative() {
        let mut src = SeededStream::new(12, 8);
        for _ in 0..20 {
            let ch = random_mixedness_preserving(8, 2, 3, &mut src).unwrap();
            let y = crate::random::ginibre(2, &mut src);
            let min_eig = kadison_schwarz_probe(&ch, &y).unwrap();
            assert!(min_eig > -1e-9, "KS gap eigenvalue {min_eig}");
        }
    }

    #[test]
    fn random_mixtures_satisfy_norm_bounds() {
        let mut src = SeededStream::new(13, 9);
        for _ in 0..20 {
            let ch = random_mixedness_preserving(8, 2, 4, &mut src).unwrap();
            let report = norm_bound_check(&ch);
            assert!(report.mixedness_preserving);
            assert!(report.norm2_ok, "{report:?}");
            assert!(report.norm_inf_ok, "{report:?}");
        }
    }

    #[test]
    fn channel_json_round_trip() {
        let mut src = SeededStream::new(14, 10);
        let u = crate::random::haar_unitary(4, &mut src).unwrap();
        let ch = compression_channel(&u, Bipartition::new(2, 2).unwrap()).unwrap();
        let json = ch.kraus.to_json();
        let back = KrausChannel::from_json(&json).unwrap();
        assert_eq!(back, ch.kraus);
    }

    #[test]
    fn schatten_norm_agrees_with_cached_liouville_norms() {
        // Square Liouville matrix (d_q = d): cached values are the
        // Schatten norms.
        let ch = identity_channel(3).unwrap();
        let m = &ch.liouville.mat;
        assert!((crate::linalg::schatten_norm(m, SchattenP::Two).unwrap() - ch.norm2).abs() < 1e-12);
        assert!(
            (crate::linalg::schatten_norm(m, SchattenP::Infinity).unwrap() - ch.norm_inf).abs()
                < 1e-12
        );
    }

    #[test]
    fn embedding_dimension_rounds_up() {
        assert_eq!(embedding_dimension(6, 4), 8);
        assert_eq!(embedding_dimension(8, 2), 8);
        assert_eq!(embedding_dimension(5, 2), 6);
    }
}
