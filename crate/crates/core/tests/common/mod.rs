//! Dense reference implementations shared by the integration suites.

#![allow(dead_code)]

use ditlab::density::StateVector;
use ditlab::linalg::CMatrix;
use ditlab::quantum::{Observable, QuantumProfile, QuditRegion};

/// `tr[P (ρ⊗ρ)]` with `P` materialized as `Σ g g†` over the given generators
/// (columns of `cols`), and `ρ = ψψ†`.
fn dense_trace(cols: &[nalgebra::DVector<ditlab::linalg::C64>], psi: &StateVector) -> f64 {
    let rho = psi.v() * psi.v().adjoint();
    let rho2 = rho.kronecker(&rho);
    let big = rho2.nrows();
    let mut proj = CMatrix::zeros(big, big);
    for g in cols {
        proj += g * g.adjoint();
    }
    (proj * rho2).trace().re
}

/// Qudit-subspace traces for one observable on `V`, projectors built densely on `V⊗V`.
pub fn dense_single(f: &Observable, psi: &StateVector) -> f64 {
    let n = f.dim();
    let u = f.basis();
    let classes = f.eigenvalue_partition();
    let mut gens = Vec::new();
    for j in 0..n {
        for k in 0..n {
            if classes.block_of(j) != classes.block_of(k) {
                gens.push(u.column(j).kronecker(&u.column(k)));
            }
        }
    }
    dense_trace(&gens, psi)
}

/// All six compound entropies for `F`, `G` on `V` and `ψ` on `V⊗V`, each as
/// the trace of a projector materialized on `(V⊗V)²`.
pub fn dense_pair(f: &Observable, g: &Observable, psi2: &StateVector) -> QuantumProfile {
    let n = f.dim();
    let w = f.basis().kronecker(g.basis());
    let (fc, gc) = (f.eigenvalue_partition(), g.eigenvalue_partition());
    let region = |r: QuditRegion| {
        let mut gens = Vec::new();
        for a in 0..n * n {
            for b in 0..n * n {
                let (x, y, x2, y2) = (a / n, a % n, b / n, b % n);
                let fd = fc.block_of(x) != fc.block_of(x2);
                let gd = gc.block_of(y) != gc.block_of(y2);
                let member = match r {
                    QuditRegion::F => fd,
                    QuditRegion::G => gd,
                    QuditRegion::Joint => fd || gd,
                    QuditRegion::FGivenG => fd && !gd,
                    QuditRegion::GGivenF => gd && !fd,
                    QuditRegion::Mutual => fd && gd,
                };
                if member {
                    gens.push(w.column(a).kronecker(&w.column(b)));
                }
            }
        }
        dense_trace(&gens, psi2)
    };
    QuantumProfile {
        h_f: region(QuditRegion::F),
        h_g: region(QuditRegion::G),
        h_joint: region(QuditRegion::Joint),
        h_f_given_g: region(QuditRegion::FGivenG),
        h_g_given_f: region(QuditRegion::GGivenF),
        mutual: region(QuditRegion::Mutual),
    }
}

/// Shannon conditional entropy as the `σ`-block average of `H(π)` restricted
/// to each block, and mutual information from the joint cell probabilities.
pub fn shannon_conditional_and_mutual(
    pi: &ditlab::Partition,
    sigma: &ditlab::Partition,
    w: &[f64],
) -> (f64, f64, f64) {
    let prob = |set: &dyn Fn(usize) -> bool| -> f64 { (0..w.len()).filter(|&i| set(i)).map(|i| w[i]).sum() };
    let mut conditional = 0.0;
    for c in sigma.blocks() {
        let pc: f64 = c.iter().map(|&i| w[i]).sum();
        if pc <= 0.0 {
            continue;
        }
        for b in pi.blocks() {
            let pbc = prob(&|i| c.contains(&i) && b.contains(&i));
            if pbc > 0.0 {
                let q = pbc / pc;
                conditional -= pc * q * q.log2();
            }
        }
    }
    let mut mutual = 0.0;
    let mut joint = 0.0;
    for b in pi.blocks() {
        let pb: f64 = b.iter().map(|&i| w[i]).sum();
        for c in sigma.blocks() {
            let pc: f64 = c.iter().map(|&i| w[i]).sum();
            let pbc = prob(&|i| c.contains(&i) && b.contains(&i));
            if pbc > 0.0 {
                mutual += pbc * (pbc / (pb * pc)).log2();
                joint -= pbc * pbc.log2();
            }
        }
    }
    (conditional, mutual, joint)
}
