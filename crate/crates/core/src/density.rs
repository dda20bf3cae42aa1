//! Density matrices, projective (Lüders) measurement, and the bookkeeping of
//! coherences zeroed by a measurement.
//!
//! [`DensityMatrix`] is the complex double-precision path used for quantum
//! states. [`ClassicalDensity`] is an exact path for matrices built from a
//! partition or event over a rational distribution: entries are stored as
//! `c_jk √(p_j p_k)` with rational `c_jk`, so purity and trace products stay
//! rational.

use crate::classical::ProbDist;
use crate::error::{Error, Result};
use crate::linalg::{self, c, CMatrix, CVector};
use crate::partition::Partition;
use crate::weight::Weight;

/// Default tolerance for Hermiticity, trace, PSD, normalization and projector checks.
pub const DENSITY_TOLERANCE: f64 = 1e-10;

/// Validation thresholds for [`DensityMatrix::validate_with`].
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Tolerances {
    pub hermitian: f64,
    pub trace: f64,
    pub psd: f64,
}

impl Default for Tolerances {
    fn default() -> Self {
        Tolerances { hermitian: DENSITY_TOLERANCE, trace: DENSITY_TOLERANCE, psd: DENSITY_TOLERANCE }
    }
}

/// A Hermitian, positive-semidefinite, trace-one complex matrix.
#[derive(Debug, Clone, PartialEq)]
pub struct DensityMatrix {
    m: CMatrix,
}

impl DensityMatrix {
    pub fn validate(m: CMatrix) -> Result<Self> {
        Self::validate_with(m, &Tolerances::default())
    }

    pub fn validate_with(m: CMatrix, tol: &Tolerances) -> Result<Self> {
        if m.nrows() != m.ncols() {
            return Err(Error::NotSquare(m.nrows(), m.ncols()));
        }
        if m.nrows() == 0 {
            return Err(Error::EmptyUniverse);
        }
        let dev = linalg::hermitian_deviation(&m);
        if dev > tol.hermitian {
            return Err(Error::NotHermitian(dev));
        }
        let tr = m.trace();
        if (tr.re - 1.0).abs() > tol.trace || tr.im.abs() > tol.trace {
            return Err(Error::TraceNotOne(tr.re));
        }
        let (vals, _) = linalg::eigh(&m);
        if vals[0] < -tol.psd {
            return Err(Error::NotPsd(vals[0]));
        }
        Ok(DensityMatrix { m })
    }

    pub(crate) fn from_matrix_unchecked(m: CMatrix) -> Self {
        DensityMatrix { m }
    }

    /// `|ψ⟩⟨ψ|`.
    pub fn pure(psi: &StateVector) -> Self {
        DensityMatrix { m: psi.v() * psi.v().adjoint() }
    }

    /// `I / n`.
    pub fn maximally_mixed(n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::EmptyUniverse);
        }
        Ok(DensityMatrix { m: CMatrix::identity(n, n).scale(1.0 / n as f64) })
    }

    /// Diagonal matrix with the given probabilities.
    pub fn diagonal<T: Weight>(p: &ProbDist<T>) -> Self {
        let d = CVector::from_iterator(p.len(), p.weights().iter().map(|w| c(w.as_f64(), 0.0)));
        DensityMatrix { m: CMatrix::from_diagonal(&d) }
    }

    pub fn dim(&self) -> usize {
        self.m.nrows()
    }

    pub fn matrix(&self) -> &CMatrix {
        &self.m
    }

    pub fn into_matrix(self) -> CMatrix {
        self.m
    }

    /// `tr[ρ†ρ] = Σ_jk |ρ_jk|²`.
    pub fn purity(&self) -> f64 {
        linalg::frobenius_sq(&self.m)
    }

    /// `1 - tr[ρ†ρ]`.
    pub fn logical_entropy(&self) -> f64 {
        1.0 - self.purity()
    }

    /// Whether `ρ² = ρ` within `tol` (max entry).
    pub fn is_pure(&self, tol: f64) -> bool {
        linalg::max_abs(&(&self.m * &self.m - &self.m)) <= tol
    }

    /// Eigenvalues ascending, clamped to `[0, 1]`.
    pub fn spectrum(&self) -> (Vec<f64>, CMatrix) {
        let (vals, vecs) = linalg::eigh(&self.m);
        (vals.into_iter().map(|v| v.clamp(0.0, 1.0)).collect(), vecs)
    }

    fn check_dim(&self, other: usize) -> Result<()> {
        if self.dim() != other {
            return Err(Error::DimensionMismatch(self.dim(), other));
        }
        Ok(())
    }
}

pub fn validate_density(m: CMatrix) -> Result<DensityMatrix> {
    DensityMatrix::validate(m)
}

/// A unit vector of complex amplitudes.
#[derive(Debug, Clone, PartialEq)]
pub struct StateVector {
    v: CVector,
}

impl StateVector {
    pub fn new(v: CVector) -> Result<Self> {
        if v.is_empty() {
            return Err(Error::EmptyUniverse);
        }
        let norm = v.norm_squared();
        if (norm - 1.0).abs() > DENSITY_TOLERANCE {
            return Err(Error::NotNormalized(norm));
        }
        Ok(StateVector { v })
    }

    /// Scale `v` to unit norm.
    pub fn normalized(v: CVector) -> Result<Self> {
        let norm = v.norm();
        if v.is_empty() || norm == 0.0 {
            return Err(Error::NotNormalized(0.0));
        }
        Ok(StateVector { v: v.unscale(norm) })
    }

    /// Computational basis vector `|j⟩`.
    pub fn basis(n: usize, j: usize) -> Result<Self> {
        if j >= n {
            return Err(Error::IndexOutOfRange { element: j, size: n });
        }
        let mut v = CVector::zeros(n);
        v[j] = c(1.0, 0.0);
        Ok(StateVector { v })
    }

    /// Equal-amplitude superposition of all basis vectors.
    pub fn uniform(n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::EmptyUniverse);
        }
        Ok(StateVector { v: CVector::from_element(n, c(1.0 / (n as f64).sqrt(), 0.0)) })
    }

    pub fn dim(&self) -> usize {
        self.v.len()
    }

    pub fn v(&self) -> &CVector {
        &self.v
    }

    pub fn density(&self) -> DensityMatrix {
        DensityMatrix::pure(self)
    }
}

/// A complete family of mutually orthogonal projectors.
#[derive(Debug, Clone, PartialEq)]
pub struct ProjectorSet {
    dim: usize,
    projectors: Vec<CMatrix>,
}

impl ProjectorSet {
    pub fn new(dim: usize, projectors: Vec<CMatrix>) -> Result<Self> {
        let bad = |msg: String| Err(Error::InvalidProjectorSet(msg));
        if projectors.is_empty() {
            return bad("no projectors".into());
        }
        let mut sum = CMatrix::zeros(dim, dim);
        for (i, p) in projectors.iter().enumerate() {
            if p.nrows() != dim || p.ncols() != dim {
                return Err(Error::DimensionMismatch(p.nrows(), dim));
            }
            if linalg::hermitian_deviation(p) > DENSITY_TOLERANCE {
                return bad(format!("projector {i} is not Hermitian"));
            }
            if linalg::max_abs(&(p * p - p)) > DENSITY_TOLERANCE {
                return bad(format!("projector {i} is not idempotent"));
            }
            for (j, q) in projectors.iter().enumerate().skip(i + 1) {
                if linalg::max_abs(&(p * q)) > DENSITY_TOLERANCE {
                    return bad(format!("projectors {i} and {j} are not orthogonal"));
                }
            }
            sum += p;
        }
        if linalg::max_abs(&(sum - CMatrix::identity(dim, dim))) > DENSITY_TOLERANCE {
            return bad("projectors do not sum to the identity".into());
        }
        Ok(ProjectorSet { dim, projectors })
    }

    pub fn identity(dim: usize) -> Self {
        ProjectorSet { dim, projectors: vec![CMatrix::identity(dim, dim)] }
    }

    /// Coordinate projectors onto the blocks of a partition of basis indices.
    pub fn from_partition(pi: &Partition) -> Self {
        Self::from_basis_classes(&CMatrix::identity(pi.len(), pi.len()), pi)
    }

    /// `P_i = Σ_{j ∈ B_i} |u_j⟩⟨u_j|` for orthonormal columns `u_j` of `basis`.
    pub fn from_basis_classes(basis: &CMatrix, classes: &Partition) -> Self {
        let projectors = classes.blocks().iter().map(|b| linalg::column_projector(basis, b)).collect();
        ProjectorSet { dim: basis.nrows(), projectors }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn projectors(&self) -> &[CMatrix] {
        &self.projectors
    }
}

/// Density matrix of the event `S`: `|S⟩⟨S|` with `|S⟩_j = χ_S(j) √p_j / √Pr(S)`.
pub fn rho_event<T: Weight>(s: &[usize], p: &ProbDist<T>) -> Result<DensityMatrix> {
    Ok(ClassicalDensity::from_event(s, p)?.to_density_matrix())
}

/// `ρ(π) = Σ_B Pr(B) ρ(B)`; entries `√(p_j p_k)` on the inditset.
pub fn rho_partition<T: Weight>(pi: &Partition, p: &ProbDist<T>) -> Result<DensityMatrix> {
    Ok(ClassicalDensity::from_partition(pi, p)?.to_density_matrix())
}

pub fn dm_logical_entropy(rho: &DensityMatrix) -> f64 {
    rho.logical_entropy()
}

/// `Σ_i P_i ρ P_i`, re-symmetrized.
pub fn luders(rho: &DensityMatrix, projs: &ProjectorSet) -> Result<DensityMatrix> {
    rho.check_dim(projs.dim())?;
    let mut out = CMatrix::zeros(rho.dim(), rho.dim());
    for p in projs.projectors() {
        out += p * rho.matrix() * p;
    }
    Ok(DensityMatrix::from_matrix_unchecked(linalg::hermitian_part(&out)))
}

/// `Σ_jk (|before_jk|² - |after_jk|²)`: the squared coherences removed.
pub fn decohered_sumsq(before: &DensityMatrix, after: &DensityMatrix) -> Result<f64> {
    before.check_dim(after.dim())?;
    Ok(before.matrix().iter().zip(after.matrix().iter()).map(|(b, a)| b.norm_sqr() - a.norm_sqr()).sum())
}

/// `-Σ λ log₂ λ` over the spectrum.
pub fn von_neumann(rho: &DensityMatrix) -> f64 {
    rho.spectrum().0.iter().filter(|&&l| l > 0.0).map(|&l| -l * l.log2()).sum()
}

/// `Re tr[ρτ]`.
pub fn trace_product(rho: &DensityMatrix, tau: &DensityMatrix) -> Result<f64> {
    rho.check_dim(tau.dim())?;
    // tr[ρτ] = Σ_jk ρ_jk τ_kj
    let n = rho.dim();
    let mut s = c(0.0, 0.0);
    for j in 0..n {
        for k in 0..n {
            s += rho.matrix()[(j, k)] * tau.matrix()[(k, j)];
        }
    }
    Ok(s.re)
}

/// Exact classical density matrix: entry `(j,k)` is `coeff_jk · √(p_j p_k)`.
#[derive(Debug, Clone, PartialEq)]
pub struct ClassicalDensity<T> {
    p: Vec<T>,
    coeff: Vec<T>,
}

impl<T: Weight> ClassicalDensity<T> {
    fn n(&self) -> usize {
        self.p.len()
    }

    pub fn from_event(s: &[usize], p: &ProbDist<T>) -> Result<Self> {
        let n = p.len();
        if let Some(&e) = s.iter().find(|&&e| e >= n) {
            return Err(Error::IndexOutOfRange { element: e, size: n });
        }
        let pr = p.prob_of(s);
        if pr.is_zero() {
            return Err(Error::ZeroProbabilityEvent);
        }
        let mut member = vec![false; n];
        s.iter().for_each(|&e| member[e] = true);
        let inv = T::one() / pr;
        let coeff = (0..n * n)
            .map(|k| if member[k / n] && member[k % n] { inv.clone() } else { T::zero() })
            .collect();
        Ok(ClassicalDensity { p: p.weights().to_vec(), coeff })
    }

    pub fn from_partition(pi: &Partition, p: &ProbDist<T>) -> Result<Self> {
        let n = p.len();
        if pi.len() != n {
            return Err(Error::UniverseMismatch(pi.len(), n));
        }
        let coeff = (0..n * n)
            .map(|k| if pi.distinguishes(k / n, k % n) { T::zero() } else { T::one() })
            .collect();
        Ok(ClassicalDensity { p: p.weights().to_vec(), coeff })
    }

    /// `|entry_jk|²`, exact.
    pub fn entry_sq(&self, j: usize, k: usize) -> T {
        let cjk = &self.coeff[j * self.n() + k];
        cjk.clone() * cjk.clone() * self.p[j].clone() * self.p[k].clone()
    }

    /// Whether entry `(j,k)` is structurally nonzero.
    pub fn is_nonzero(&self, j: usize, k: usize) -> bool {
        !self.entry_sq(j, k).is_zero()
    }

    pub fn purity(&self) -> T {
        let n = self.n();
        (0..n * n).fold(T::zero(), |acc, k| acc + self.entry_sq(k / n, k % n))
    }

    pub fn logical_entropy(&self) -> T {
        T::one() - self.purity()
    }

    /// `tr[ρτ]` for two matrices over the same distribution.
    pub fn trace_product(&self, other: &ClassicalDensity<T>) -> Result<T> {
        if self.p != other.p {
            return Err(Error::InvalidDistribution("trace product needs a shared distribution".into()));
        }
        let n = self.n();
        Ok((0..n * n).fold(T::zero(), |acc, k| {
            let (j, l) = (k / n, k % n);
            acc + self.coeff[j * n + l].clone() * other.coeff[l * n + j].clone() * self.p[j].clone() * self.p[l].clone()
        }))
    }

    /// Lüders measurement by the coordinate projectors of `blocks`: zero every
    /// entry between different blocks.
    pub fn luders_blocks(&self, blocks: &Partition) -> Result<Self> {
        let n = self.n();
        if blocks.len() != n {
            return Err(Error::UniverseMismatch(blocks.len(), n));
        }
        let coeff = (0..n * n)
            .map(|k| if blocks.distinguishes(k / n, k % n) { T::zero() } else { self.coeff[k].clone() })
            .collect();
        Ok(ClassicalDensity { p: self.p.clone(), coeff })
    }

    /// Exact `Σ (|before|² - |after|²)`.
    pub fn decohered_sumsq(&self, after: &ClassicalDensity<T>) -> Result<T> {
        if self.p != after.p {
            return Err(Error::InvalidDistribution("decoherence accounting needs a shared distribution".into()));
        }
        Ok(self.purity() - after.purity())
    }

    pub fn to_density_matrix(&self) -> DensityMatrix {
        let n = self.n();
        let m = CMatrix::from_fn(n, n, |j, k| {
            let v = self.coeff[j * n + k].as_f64() * (self.p[j].as_f64() * self.p[k].as_f64()).sqrt();
            c(v, 0.0)
        });
        DensityMatrix::from_matrix_unchecked(m)
    }
}
