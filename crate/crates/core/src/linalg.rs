//! Small dense complex linear-algebra helpers on top of `nalgebra`.

use nalgebra::{DMatrix, DVector};
use num_complex::Complex64;

pub type C64 = Complex64;
pub type CMatrix = DMatrix<C64>;
pub type CVector = DVector<C64>;

#[inline]
pub fn c(re: f64, im: f64) -> C64 {
    C64::new(re, im)
}

/// Largest `|m_jk - conj(m_kj)|`.
pub fn hermitian_deviation(m: &CMatrix) -> f64 {
    let n = m.nrows();
    let mut worst = 0.0f64;
    for j in 0..n {
        for k in j..n {
            worst = worst.max((m[(j, k)] - m[(k, j)].conj()).norm());
        }
    }
    worst
}

/// `(m + m†) / 2`.
pub fn hermitian_part(m: &CMatrix) -> CMatrix {
    (m + m.adjoint()).scale(0.5)
}

pub fn max_abs(m: &CMatrix) -> f64 {
    m.iter().map(|z| z.norm()).fold(0.0, f64::max)
}

/// Sum of squared moduli of all entries: `tr[m† m]`.
pub fn frobenius_sq(m: &CMatrix) -> f64 {
    m.iter().map(|z| z.norm_sqr()).sum()
}

/// Eigen-decomposition of a Hermitian matrix, eigenvalues ascending with
/// matching eigenvector columns.
pub fn eigh(m: &CMatrix) -> (Vec<f64>, CMatrix) {
    let eig = hermitian_part(m).symmetric_eigen();
    let mut order: Vec<usize> = (0..m.nrows()).collect();
    order.sort_by(|&a, &b| eig.eigenvalues[a].total_cmp(&eig.eigenvalues[b]));
    let values = order.iter().map(|&i| eig.eigenvalues[i]).collect();
    let vectors = CMatrix::from_fn(m.nrows(), m.ncols(), |r, col| eig.eigenvectors[(r, order[col])]);
    (values, vectors)
}

/// Largest deviation of `u† u` from the identity.
pub fn orthonormality_deviation(u: &CMatrix) -> f64 {
    let g = u.adjoint() * u;
    max_abs(&(g - CMatrix::identity(u.ncols(), u.ncols())))
}

/// `Σ_j λ_j |u_j⟩⟨u_j|`.
pub fn from_spectrum(values: &[f64], basis: &CMatrix) -> CMatrix {
    let d = CMatrix::from_diagonal(&CVector::from_iterator(values.len(), values.iter().map(|&v| c(v, 0.0))));
    basis * d * basis.adjoint()
}

/// Projector onto the span of the given orthonormal columns.
pub fn column_projector(basis: &CMatrix, columns: &[usize]) -> CMatrix {
    let n = basis.nrows();
    let mut p = CMatrix::zeros(n, n);
    for &j in columns {
        let col = basis.column(j);
        p += col * col.adjoint();
    }
    p
}
