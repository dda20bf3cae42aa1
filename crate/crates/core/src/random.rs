//! Random instance generators for property suites, benches, and sampling.

use nalgebra::DMatrix;
use num_rational::BigRational;
use rand::Rng;
use rand_distr::StandardNormal;

use crate::classical::ProbDist;
use crate::density::{DensityMatrix, ProjectorSet, StateVector};
use crate::linalg::{self, c, CMatrix, CVector, C64};
use crate::partition::Partition;
use crate::quantum::Observable;
use crate::weight::Weight;

fn gaussian_c64<R: Rng + ?Sized>(rng: &mut R) -> C64 {
    c(rng.sample(StandardNormal), rng.sample(StandardNormal))
}

/// Complex Ginibre matrix: i.i.d. standard complex Gaussian entries.
pub fn ginibre<R: Rng + ?Sized>(rows: usize, cols: usize, rng: &mut R) -> CMatrix {
    DMatrix::from_fn(rows, cols, |_, _| gaussian_c64(rng))
}

/// Haar-distributed unitary via QR of a Ginibre matrix with phase correction.
pub fn unitary<R: Rng + ?Sized>(n: usize, rng: &mut R) -> CMatrix {
    let qr = ginibre(n, n, rng).qr();
    let mut q = qr.q();
    let r = qr.r();
    for j in 0..n {
        let d = r[(j, j)];
        let phase = if d.norm() > 0.0 { d / d.norm() } else { c(1.0, 0.0) };
        let mut col = q.column_mut(j);
        col *= phase;
    }
    q
}

pub fn hermitian<R: Rng + ?Sized>(n: usize, rng: &mut R) -> CMatrix {
    linalg::hermitian_part(&ginibre(n, n, rng))
}

pub fn state<R: Rng + ?Sized>(n: usize, rng: &mut R) -> StateVector {
    let v = CVector::from_fn(n, |_, _| gaussian_c64(rng));
    StateVector::normalized(v).expect("gaussian vector is nonzero")
}

/// `W W† / tr[W W†]` for a Ginibre `W` of random rank `1..=n`.
pub fn density<R: Rng + ?Sized>(n: usize, rng: &mut R) -> DensityMatrix {
    let rank = rng.random_range(1..=n);
    density_of_rank(n, rank, rng)
}

pub fn density_of_rank<R: Rng + ?Sized>(n: usize, rank: usize, rng: &mut R) -> DensityMatrix {
    let w = ginibre(n, rank, rng);
    let m = &w * w.adjoint();
    let tr = m.trace().re;
    DensityMatrix::from_matrix_unchecked(linalg::hermitian_part(&m.unscale(tr)))
}

/// A random partition: each element gets a label in `0..k` for a random `k`.
pub fn partition<R: Rng + ?Sized>(n: usize, rng: &mut R) -> Partition {
    let k = rng.random_range(1..=n);
    let labels: Vec<usize> = (0..n).map(|_| rng.random_range(0..k)).collect();
    Partition::from_labels(&labels).expect("n >= 1")
}

/// A strictly positive rational distribution with small denominators.
pub fn rational_dist<R: Rng + ?Sized>(n: usize, rng: &mut R) -> ProbDist<BigRational> {
    let raw: Vec<i64> = (0..n).map(|_| rng.random_range(1..=12)).collect();
    let total: i64 = raw.iter().sum();
    ProbDist::new(raw.into_iter().map(|w| BigRational::new(w.into(), total.into())).collect()).expect("normalized")
}

pub fn float_dist<R: Rng + ?Sized>(n: usize, rng: &mut R) -> ProbDist<f64> {
    let raw: Vec<f64> = (0..n).map(|_| rng.random_range(0.01..1.0)).collect();
    let total: f64 = raw.iter().sum();
    ProbDist::new(raw.into_iter().map(|w| w / total).collect()).expect("normalized")
}

/// Eigenspace projectors of a random orthonormal basis grouped by a random partition.
pub fn projector_set<R: Rng + ?Sized>(n: usize, rng: &mut R) -> ProjectorSet {
    let basis = unitary(n, rng);
    ProjectorSet::from_basis_classes(&basis, &partition(n, rng))
}

/// A random observable in a Haar-random eigenbasis. Degenerate observables
/// draw eigenvalues from a random partition's block labels.
pub fn observable<R: Rng + ?Sized>(n: usize, degenerate: bool, rng: &mut R) -> Observable {
    let basis = unitary(n, rng);
    Observable::new(basis, eigenvalues(n, degenerate, rng)).expect("unitary basis")
}

pub fn eigenvalues<R: Rng + ?Sized>(n: usize, degenerate: bool, rng: &mut R) -> Vec<f64> {
    let offset: f64 = rng.random_range(-2.0..2.0);
    if degenerate {
        let p = partition(n, rng);
        (0..n).map(|j| offset + p.block_of(j) as f64).collect()
    } else {
        (0..n).map(|j| offset + j as f64 + rng.random_range(0.0..0.5)).collect()
    }
}

/// Distribution of a random classical weight type, for generic suites.
pub trait RandomWeight: Weight {
    fn random_dist<R: Rng + ?Sized>(n: usize, rng: &mut R) -> ProbDist<Self>;
}

impl RandomWeight for f64 {
    fn random_dist<R: Rng + ?Sized>(n: usize, rng: &mut R) -> ProbDist<Self> {
        float_dist(n, rng)
    }
}

impl RandomWeight for BigRational {
    fn random_dist<R: Rng + ?Sized>(n: usize, rng: &mut R) -> ProbDist<Self> {
        rational_dist(n, rng)
    }
}
