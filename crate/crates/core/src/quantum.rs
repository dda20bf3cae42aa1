//! Quantum logical entropies.
//!
//! A qudit of an observable is a pair of eigenbasis vectors with distinct
//! eigenvalues. Every qudit subspace used here is spanned by product-basis
//! vectors, so its projector is diagonal in that basis and `tr[P (ρ⊗ρ)]`
//! reduces to a sum of probability products over an index condition. The
//! functions below evaluate those sums directly instead of materializing
//! projectors on `(V⊗V)²`.

use rand::distr::weighted::WeightedIndex;
use rand::distr::Distribution;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::classical::{self, region_measure, ClassPoint, EntropyProfile, ProbDist};
use crate::density::{self, DensityMatrix, ProjectorSet, StateVector, DENSITY_TOLERANCE};
use crate::error::{Error, Result};
use crate::exec::{self, Execution};
use crate::linalg::{self, CMatrix};
use crate::partition::Partition;

/// Eigenvalues closer than this are grouped when read from a numeric matrix.
pub const EIGENVALUE_GROUPING_TOLERANCE: f64 = 1e-9;
/// Agreement required between independent evaluation routes.
pub const ROUTE_TOLERANCE: f64 = 1e-10;
/// Agreement required between the entropy and Hilbert-Schmidt forms.
pub const HAMMING_TOLERANCE: f64 = 1e-12;
/// Largest commutator entry for which two observables count as commuting.
pub const COMMUTATOR_TOLERANCE: f64 = 1e-8;
/// Products of eigenvalues closer than this count as an accidental degeneracy.
pub const DEGENERACY_TOLERANCE: f64 = 1e-9;

/// A Hermitian operator given by an orthonormal eigenbasis (columns) and one
/// real eigenvalue per basis vector.
#[derive(Debug, Clone, PartialEq)]
pub struct Observable {
    basis: CMatrix,
    eigenvalues: Vec<f64>,
    grouping_tol: f64,
}

impl Observable {
    /// Eigenvalues supplied explicitly are grouped by exact equality.
    pub fn new(basis: CMatrix, eigenvalues: Vec<f64>) -> Result<Self> {
        if basis.nrows() != basis.ncols() {
            return Err(Error::NotSquare(basis.nrows(), basis.ncols()));
        }
        if basis.ncols() != eigenvalues.len() {
            return Err(Error::DimensionMismatch(basis.ncols(), eigenvalues.len()));
        }
        if eigenvalues.is_empty() {
            return Err(Error::EmptyUniverse);
        }
        let dev = linalg::orthonormality_deviation(&basis);
        if dev > DENSITY_TOLERANCE {
            return Err(Error::NotOrthonormal(dev));
        }
        Ok(Observable { basis, eigenvalues, grouping_tol: 0.0 })
    }

    /// Diagonal in the computational basis.
    pub fn diagonal(eigenvalues: Vec<f64>) -> Result<Self> {
        let n = eigenvalues.len();
        Self::new(CMatrix::identity(n, n), eigenvalues)
    }

    /// Diagonalize a Hermitian matrix; eigenvalues are grouped with
    /// [`EIGENVALUE_GROUPING_TOLERANCE`].
    pub fn from_matrix(m: &CMatrix) -> Result<Self> {
        if m.nrows() != m.ncols() {
            return Err(Error::NotSquare(m.nrows(), m.ncols()));
        }
        let dev = linalg::hermitian_deviation(m);
        if dev > DENSITY_TOLERANCE {
            return Err(Error::NotHermitian(dev));
        }
        let (values, basis) = linalg::eigh(m);
        Ok(Observable { basis, eigenvalues: values, grouping_tol: EIGENVALUE_GROUPING_TOLERANCE })
    }

    pub fn with_grouping_tolerance(mut self, tol: f64) -> Self {
        self.grouping_tol = tol;
        self
    }

    pub fn dim(&self) -> usize {
        self.eigenvalues.len()
    }

    pub fn basis(&self) -> &CMatrix {
        &self.basis
    }

    pub fn eigenvalues(&self) -> &[f64] {
        &self.eigenvalues
    }

    /// `F = Σ_j φ_j |u_j⟩⟨u_j|`.
    pub fn matrix(&self) -> CMatrix {
        linalg::from_spectrum(&self.eigenvalues, &self.basis)
    }

    /// Basis indices grouped into eigenvalue level sets.
    pub fn eigenvalue_partition(&self) -> Partition {
        group_values(&self.eigenvalues, self.grouping_tol)
    }

    /// One eigenvalue per class of [`Self::eigenvalue_partition`].
    pub fn distinct_eigenvalues(&self) -> Vec<f64> {
        self.eigenvalue_partition().blocks().iter().map(|b| self.eigenvalues[b[0]]).collect()
    }

    /// Projectors onto the eigenspaces.
    pub fn projectors(&self) -> ProjectorSet {
        ProjectorSet::from_basis_classes(&self.basis, &self.eigenvalue_partition())
    }

    /// `p_j = |⟨u_j|ψ⟩|²`.
    pub fn probabilities(&self, psi: &StateVector) -> Result<Vec<f64>> {
        self.check_dim(psi.dim())?;
        Ok((self.basis.adjoint() * psi.v()).iter().map(|a| a.norm_sqr()).collect())
    }

    fn check_dim(&self, n: usize) -> Result<()> {
        if self.dim() != n {
            return Err(Error::DimensionMismatch(self.dim(), n));
        }
        Ok(())
    }
}

/// Partition indices by value; values chained within `tol` share a class.
fn group_values(values: &[f64], tol: f64) -> Partition {
    let mut order: Vec<usize> = (0..values.len()).collect();
    order.sort_by(|&a, &b| values[a].total_cmp(&values[b]));
    let mut labels = vec![0usize; values.len()];
    let mut class = 0;
    for w in 0..order.len() {
        if w > 0 && values[order[w]] - values[order[w - 1]] > tol {
            class += 1;
        }
        labels[order[w]] = class;
    }
    Partition::from_labels(&labels).expect("non-empty observable")
}

pub fn eigenvalue_partition(f: &Observable) -> Partition {
    f.eigenvalue_partition()
}

/// `h(F:ψ)` with the three routes it was computed by.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ObservableEntropy {
    pub value: f64,
    /// `Σ { p_j p_k : φ_j ≠ φ_k }`, the diagonal qudit-projector trace.
    pub via_qudits: f64,
    /// Classical logical entropy of the eigenvalue partition under `p`.
    pub via_partition: f64,
    /// `1 - tr[ρ'(ψ)²]` after Lüders measurement.
    pub via_luders: f64,
}

/// `h(F:ψ)`, the probability that two independent `F`-measurements of `ψ`
/// give different eigenvalues. Fails with `InternalInconsistency` if the three
/// routes disagree by more than [`ROUTE_TOLERANCE`].
pub fn h_observable_state(f: &Observable, psi: &StateVector) -> Result<ObservableEntropy> {
    let p = f.probabilities(psi)?;
    let classes = f.eigenvalue_partition();

    let mut via_qudits = 0.0;
    for (j, pj) in p.iter().enumerate() {
        let row: f64 = p.iter().enumerate().filter(|&(k, _)| classes.distinguishes(j, k)).map(|(_, pk)| pk).sum();
        via_qudits += pj * row;
    }
    let via_partition = classical::logical_entropy(&classes, &ProbDist::from_weights_unchecked(p))?;
    let via_luders = measure(f, psi)?.logical_entropy();

    let residual = (via_qudits - via_partition).abs().max((via_qudits - via_luders).abs());
    if residual > ROUTE_TOLERANCE {
        return Err(Error::InternalInconsistency { what: "h(F:psi) routes", residual });
    }
    Ok(ObservableEntropy { value: via_qudits, via_qudits, via_partition, via_luders })
}

/// `ρ'(ψ) = Σ_i P_i ρ(ψ) P_i` over the eigenspaces of `F`.
pub fn measure(f: &Observable, psi: &StateVector) -> Result<DensityMatrix> {
    f.check_dim(psi.dim())?;
    density::luders(&psi.density(), &f.projectors())
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FundamentalCheck {
    /// `h(ρ'(ψ)) - h(ρ(ψ))`.
    pub entropy_increase: f64,
    /// Squared moduli of the coherences zeroed by the measurement.
    pub decohered_sumsq: f64,
}

impl FundamentalCheck {
    pub fn residual(&self) -> f64 {
        (self.entropy_increase - self.decohered_sumsq).abs()
    }
}

pub fn quantum_fundamental_check(f: &Observable, psi: &StateVector) -> Result<FundamentalCheck> {
    let before = psi.density();
    let after = measure(f, psi)?;
    let h_before = if before.is_pure(DENSITY_TOLERANCE) { 0.0 } else { before.logical_entropy() };
    Ok(FundamentalCheck {
        entropy_increase: after.logical_entropy() - h_before,
        decohered_sumsq: density::decohered_sumsq(&before, &after)?,
    })
}

/// Compound quantum logical entropies of two observables in a state.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct QuantumProfile {
    pub h_f: f64,
    pub h_g: f64,
    pub h_joint: f64,
    pub h_f_given_g: f64,
    pub h_g_given_f: f64,
    pub mutual: f64,
}

impl QuantumProfile {
    pub fn venn_residual(&self) -> f64 {
        (self.h_joint - (self.h_f_given_g + self.mutual + self.h_g_given_f)).abs()
    }

    pub fn max_difference(&self, other: &QuantumProfile) -> f64 {
        self.entries().iter().zip(other.entries()).map(|(a, b)| (a.1 - b.1).abs()).fold(0.0, f64::max)
    }

    pub fn entries(&self) -> [(&'static str, f64); 6] {
        [
            ("h_f", self.h_f),
            ("h_g", self.h_g),
            ("h_joint", self.h_joint),
            ("h_f_given_g", self.h_f_given_g),
            ("h_g_given_f", self.h_g_given_f),
            ("mutual", self.mutual),
        ]
    }
}

impl From<EntropyProfile<f64>> for QuantumProfile {
    fn from(p: EntropyProfile<f64>) -> Self {
        QuantumProfile {
            h_f: p.h_pi,
            h_g: p.h_sigma,
            h_joint: p.h_joint,
            h_f_given_g: p.h_pi_given_sigma,
            h_g_given_f: p.h_sigma_given_pi,
            mutual: p.mutual,
        }
    }
}

/// A simultaneous eigenbasis of two commuting observables, with each basis
/// vector's F-class and G-class.
#[derive(Debug, Clone)]
pub struct SharedBasis {
    pub basis: CMatrix,
    pub f_classes: Partition,
    pub g_classes: Partition,
}

/// Find a simultaneous eigenbasis: the supplied one if both observables use
/// it, otherwise by diagonalizing `G` inside each eigenspace of `F`.
pub fn shared_basis(f: &Observable, g: &Observable) -> Result<SharedBasis> {
    f.check_dim(g.dim())?;
    if linalg::max_abs(&(f.basis() - g.basis())) <= DENSITY_TOLERANCE {
        return Ok(SharedBasis { basis: f.basis.clone(), f_classes: f.eigenvalue_partition(), g_classes: g.eigenvalue_partition() });
    }
    let (fm, gm) = (f.matrix(), g.matrix());
    let comm = linalg::max_abs(&(&fm * &gm - &gm * &fm));
    if comm > COMMUTATOR_TOLERANCE {
        return Err(Error::NotCommuting(comm));
    }
    let n = f.dim();
    let mut basis = CMatrix::zeros(n, n);
    let mut f_vals = vec![0.0; n];
    let mut g_vals = vec![0.0; n];
    let mut col = 0;
    for block in f.eigenvalue_partition().blocks() {
        let sub = CMatrix::from_fn(n, block.len(), |r, k| f.basis[(r, block[k])]);
        let restricted = sub.adjoint() * &gm * &sub;
        let (vals, vecs) = linalg::eigh(&restricted);
        let rotated = &sub * vecs;
        for (k, &val) in vals.iter().enumerate() {
            let u = rotated.column(k).into_owned();
            let residual = (&gm * &u - u.scale(val)).iter().map(|z| z.norm()).fold(0.0, f64::max);
            if residual > COMMUTATOR_TOLERANCE {
                return Err(Error::NotCommuting(residual));
            }
            basis.set_column(col, &u);
            f_vals[col] = f.eigenvalues[block[0]];
            g_vals[col] = val;
            col += 1;
        }
    }
    Ok(SharedBasis {
        basis,
        f_classes: group_values(&f_vals, f.grouping_tol.max(EIGENVALUE_GROUPING_TOLERANCE)),
        g_classes: group_values(&g_vals, EIGENVALUE_GROUPING_TOLERANCE),
    })
}

/// Compound entropies of commuting observables: sums of `p_j p_k` over the
/// f/g distinctness conditions in a simultaneous eigenbasis.
pub fn commuting_profile(f: &Observable, g: &Observable, psi: &StateVector) -> Result<QuantumProfile> {
    f.check_dim(psi.dim())?;
    let shared = shared_basis(f, g)?;
    let amps = shared.basis.adjoint() * psi.v();
    let points: Vec<ClassPoint<f64>> = (0..f.dim())
        .map(|j| ClassPoint {
            weight: amps[j].norm_sqr(),
            f_class: shared.f_classes.block_of(j),
            g_class: shared.g_classes.block_of(j),
        })
        .collect();
    Ok(region_measure(&points, Execution::default()).into())
}

/// `p(x, y) = |⟨x⊗y|ψ⟩|²` over the product of the two eigenbases.
pub fn product_basis_probabilities(f: &Observable, g: &Observable, psi2: &StateVector) -> Result<Vec<f64>> {
    f.check_dim(g.dim())?;
    let n = f.dim();
    if psi2.dim() != n * n {
        return Err(Error::DimensionMismatch(psi2.dim(), n * n));
    }
    let w = f.basis().kronecker(g.basis());
    Ok((w.adjoint() * psi2.v()).iter().map(|a| a.norm_sqr()).collect())
}

/// Compound entropies of possibly non-commuting observables for a state on
/// `V⊗V`, as double sums of `p(x,y) p(x',y')` over `f(x) ≠ f(x')` / `g(y) ≠ g(y')`.
pub fn noncommuting_profile(f: &Observable, g: &Observable, psi2: &StateVector) -> Result<QuantumProfile> {
    noncommuting_profile_with(f, g, psi2, Execution::default())
}

pub fn noncommuting_profile_with(
    f: &Observable,
    g: &Observable,
    psi2: &StateVector,
    exec: Execution,
) -> Result<QuantumProfile> {
    let p = product_basis_probabilities(f, g, psi2)?;
    let (fc, gc) = (f.eigenvalue_partition(), g.eigenvalue_partition());
    let n = f.dim();
    let points: Vec<ClassPoint<f64>> = (0..n * n)
        .map(|k| ClassPoint { weight: p[k], f_class: fc.block_of(k / n), g_class: gc.block_of(k % n) })
        .collect();
    Ok(region_measure(&points, exec).into())
}

/// Two pairs of eigenvalue indices whose products coincide.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ProductCollision {
    pub i: usize,
    pub j: usize,
    pub i2: usize,
    pub j2: usize,
    pub product: f64,
}

/// Accidental degeneracies `φ_i γ_j = φ_i' γ_j'` with `i ≠ i'` and `j ≠ j'`,
/// indexed over distinct eigenvalues. Each unordered collision is listed once.
pub fn degeneracy_check(f: &Observable, g: &Observable) -> Vec<ProductCollision> {
    let (phi, gamma) = (f.distinct_eigenvalues(), g.distinct_eigenvalues());
    let mut out = Vec::new();
    for i in 0..phi.len() {
        for i2 in i + 1..phi.len() {
            for j in 0..gamma.len() {
                for j2 in 0..gamma.len() {
                    if j == j2 {
                        continue;
                    }
                    let (a, b) = (phi[i] * gamma[j], phi[i2] * gamma[j2]);
                    if (a - b).abs() <= DEGENERACY_TOLERANCE {
                        out.push(ProductCollision { i, j, i2, j2, product: a });
                    }
                }
            }
        }
    }
    out
}

/// Which Venn region of two qudit sets.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum QuditRegion {
    F,
    G,
    Joint,
    FGivenG,
    GGivenF,
    Mutual,
}

impl QuditRegion {
    pub const ALL: [QuditRegion; 6] =
        [QuditRegion::F, QuditRegion::G, QuditRegion::Joint, QuditRegion::FGivenG, QuditRegion::GGivenF, QuditRegion::Mutual];

    /// Membership from the two distinctness flags.
    pub fn contains(self, f_distinct: bool, g_distinct: bool) -> bool {
        match self {
            QuditRegion::F => f_distinct,
            QuditRegion::G => g_distinct,
            QuditRegion::Joint => f_distinct || g_distinct,
            QuditRegion::FGivenG => f_distinct && !g_distinct,
            QuditRegion::GGivenF => g_distinct && !f_distinct,
            QuditRegion::Mutual => f_distinct && g_distinct,
        }
    }

    pub fn of(self, p: &QuantumProfile) -> f64 {
        match self {
            QuditRegion::F => p.h_f,
            QuditRegion::G => p.h_g,
            QuditRegion::Joint => p.h_joint,
            QuditRegion::FGivenG => p.h_f_given_g,
            QuditRegion::GGivenF => p.h_g_given_f,
            QuditRegion::Mutual => p.mutual,
        }
    }
}

/// Generators `(x⊗y)⊗(x'⊗y')` of a qudit subspace for two observables on `V`,
/// decided from eigenvalue classes only.
#[derive(Debug, Clone)]
pub struct QuditIndexSet {
    f_classes: Partition,
    g_classes: Partition,
    region: QuditRegion,
}

impl QuditIndexSet {
    pub fn new(f: &Observable, g: &Observable, region: QuditRegion) -> Result<Self> {
        f.check_dim(g.dim())?;
        Ok(QuditIndexSet { f_classes: f.eigenvalue_partition(), g_classes: g.eigenvalue_partition(), region })
    }

    pub fn contains(&self, x: usize, y: usize, x2: usize, y2: usize) -> bool {
        self.region.contains(self.f_classes.distinguishes(x, x2), self.g_classes.distinguishes(y, y2))
    }

    pub fn iter(&self) -> impl Iterator<Item = (usize, usize, usize, usize)> + '_ {
        let n = self.f_classes.len();
        (0..n * n * n * n)
            .map(move |k| (k / (n * n * n), k / (n * n) % n, k / n % n, k % n))
            .filter(move |&(x, y, x2, y2)| self.contains(x, y, x2, y2))
    }

    pub fn is_empty(&self) -> bool {
        self.iter().next().is_none()
    }

    pub fn len(&self) -> usize {
        self.iter().count()
    }
}

/// Entropies of a density-operator pair `(ρ, τ)` from the qudit sets of the
/// discrete partitions on their eigenbases, by brute-force spectral double
/// sums. Fails with `InternalInconsistency` if the closed forms disagree by
/// more than [`HAMMING_TOLERANCE`].
pub fn density_pair_profile(rho: &DensityMatrix, tau: &DensityMatrix) -> Result<QuantumProfile> {
    if rho.dim() != tau.dim() {
        return Err(Error::DimensionMismatch(rho.dim(), tau.dim()));
    }
    let (lambda, _) = rho.spectrum();
    let (mu, _) = tau.spectrum();
    let n = rho.dim();
    let points: Vec<ClassPoint<f64>> = (0..n * n)
        .map(|k| ClassPoint { weight: lambda[k / n] * mu[k % n], f_class: k / n, g_class: k % n })
        .collect();
    let brute: QuantumProfile = region_measure(&points, Execution::default()).into();
    let closed = density_pair_closed_forms(rho, tau)?;
    let residual = brute.max_difference(&closed);
    if residual > HAMMING_TOLERANCE {
        return Err(Error::InternalInconsistency { what: "density pair closed forms", residual });
    }
    Ok(brute)
}

/// `h(ρ,τ) = 1 - tr[ρ²]tr[τ²]`, `h(ρ|τ) = (1 - tr[ρ²])tr[τ²]`,
/// `m(ρ,τ) = (1 - tr[ρ²])(1 - tr[τ²])`, and the simple entropies.
pub fn density_pair_closed_forms(rho: &DensityMatrix, tau: &DensityMatrix) -> Result<QuantumProfile> {
    if rho.dim() != tau.dim() {
        return Err(Error::DimensionMismatch(rho.dim(), tau.dim()));
    }
    let (a, b) = (rho.purity(), tau.purity());
    Ok(QuantumProfile {
        h_f: 1.0 - a,
        h_g: 1.0 - b,
        h_joint: 1.0 - a * b,
        h_f_given_g: (1.0 - a) * b,
        h_g_given_f: (1.0 - b) * a,
        mutual: (1.0 - a) * (1.0 - b),
    })
}

/// `Σ_ij λ_i μ_j |⟨u_i|v_j⟩|²` from the two spectral decompositions.
pub fn spectral_overlap(rho: &DensityMatrix, tau: &DensityMatrix) -> Result<f64> {
    if rho.dim() != tau.dim() {
        return Err(Error::DimensionMismatch(rho.dim(), tau.dim()));
    }
    let (lambda, u) = rho.spectrum();
    let (mu, v) = tau.spectrum();
    let overlaps = u.adjoint() * v;
    let mut s = 0.0;
    for (i, l) in lambda.iter().enumerate() {
        for (j, m) in mu.iter().enumerate() {
            s += l * m * overlaps[(i, j)].norm_sqr();
        }
    }
    Ok(s)
}

/// `h(ρ||τ) = 1 - tr[ρτ]`, checked against the spectral overlap expansion.
pub fn quantum_cross_entropy(rho: &DensityMatrix, tau: &DensityMatrix) -> Result<f64> {
    let direct = density::trace_product(rho, tau)?;
    let spectral = spectral_overlap(rho, tau)?;
    let residual = (direct - spectral).abs();
    if residual > ROUTE_TOLERANCE {
        return Err(Error::InternalInconsistency { what: "cross-entropy overlap expansion", residual });
    }
    Ok(1.0 - direct)
}

/// `tr[(ρ - τ)²] = Σ_jk |ρ_jk - τ_jk|²`.
pub fn hilbert_schmidt(rho: &DensityMatrix, tau: &DensityMatrix) -> Result<f64> {
    if rho.dim() != tau.dim() {
        return Err(Error::DimensionMismatch(rho.dim(), tau.dim()));
    }
    Ok(linalg::frobenius_sq(&(rho.matrix() - tau.matrix())))
}

/// `d(ρ,τ) = 2h(ρ||τ) - h(ρ) - h(τ)`, checked against the Hilbert-Schmidt form.
pub fn quantum_hamming(rho: &DensityMatrix, tau: &DensityMatrix) -> Result<f64> {
    let cross = 1.0 - density::trace_product(rho, tau)?;
    let d = 2.0 * cross - rho.logical_entropy() - tau.logical_entropy();
    let residual = (d - hilbert_schmidt(rho, tau)?).abs();
    if residual > HAMMING_TOLERANCE {
        return Err(Error::InternalInconsistency { what: "Hamming vs Hilbert-Schmidt", residual });
    }
    Ok(d)
}

/// Monte-Carlo estimate of the probability that two independent measurements
/// give distinct eigenvalues.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SampleEstimate {
    pub trials: u64,
    pub distinct: u64,
}

impl SampleEstimate {
    pub fn rate(&self) -> f64 {
        self.distinct as f64 / self.trials as f64
    }

    /// Standard error of a Bernoulli mean with success probability `h`.
    pub fn standard_error(&self, h: f64) -> f64 {
        (h * (1.0 - h) / self.trials as f64).sqrt()
    }
}

const SAMPLE_CHUNK: u64 = 8192;

/// Simulate `trials` pairs of Born-rule measurements of `ψ` by `F`. Each
/// chunk of trials has its own ChaCha stream, so the estimate depends only on
/// `seed`, not on the execution mode.
pub fn two_measurement_estimate(
    f: &Observable,
    psi: &StateVector,
    trials: u64,
    seed: u64,
    exec: Execution,
) -> Result<SampleEstimate> {
    let p = f.probabilities(psi)?;
    let classes = f.eigenvalue_partition();
    let class_probs: Vec<f64> = classes.blocks().iter().map(|b| b.iter().map(|&j| p[j]).sum()).collect();
    let dist = WeightedIndex::new(&class_probs).map_err(|e| Error::InvalidDistribution(e.to_string()))?;
    let chunks = trials.div_ceil(SAMPLE_CHUNK) as usize;
    let counts = exec::map_indexed(exec, chunks, |k| {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        rng.set_stream(k as u64);
        let len = SAMPLE_CHUNK.min(trials - k as u64 * SAMPLE_CHUNK);
        (0..len).filter(|_| dist.sample(&mut rng) != dist.sample(&mut rng)).count() as u64
    });
    Ok(SampleEstimate { trials, distinct: counts.iter().sum() })
}
