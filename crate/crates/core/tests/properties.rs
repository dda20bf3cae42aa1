use ditlab::classical::{self, entropy_profile, entropy_profile_by_dits, hamming_distance, logical_entropy, ProbDist};
use ditlab::density::{self, DensityMatrix};
use ditlab::linalg::{self, CMatrix};
use ditlab::partition::{self, ditset, implication, join, meet, refines};
use ditlab::quantum::{self, Observable};
use ditlab::random;
use ditlab::weight::ratio;
use ditlab::{Partition, Universe};
use num_rational::BigRational;
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn arb_partition(n: usize) -> impl Strategy<Value = Partition> {
    prop::collection::vec(0..n, n).prop_map(|labels| Partition::from_labels(&labels).unwrap())
}

fn arb_dist(n: usize) -> impl Strategy<Value = ProbDist<BigRational>> {
    prop::collection::vec(0i64..=9, n)
        .prop_filter("positive mass", |w| w.iter().sum::<i64>() > 0)
        .prop_map(|w| {
            let total: i64 = w.iter().sum();
            ProbDist::new(w.iter().map(|&x| ratio(x, total)).collect()).unwrap()
        })
}

/// Three partitions and a rational distribution on a common universe.
fn arb_triple() -> impl Strategy<Value = (Partition, Partition, Partition, ProbDist<BigRational>)> {
    (1usize..=6).prop_flat_map(|n| (arb_partition(n), arb_partition(n), arb_partition(n), arb_dist(n)))
}

fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

fn conjugate(w: &CMatrix, d: &DensityMatrix) -> DensityMatrix {
    DensityMatrix::validate(w * d.matrix() * w.adjoint()).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(96))]

    #[test]
    fn refinement_is_ditset_inclusion((a, b, _, _) in arb_triple()) {
        prop_assert_eq!(refines(&a, &b).unwrap(), ditset(&a).is_subset(&ditset(&b)));
        prop_assert_eq!(implication(&a, &b).unwrap().is_top(), refines(&a, &b).unwrap());
    }

    #[test]
    fn join_and_meet_are_bounds((a, b, _, _) in arb_triple()) {
        let j = join(&a, &b).unwrap();
        let m = meet(&a, &b).unwrap();
        prop_assert!(refines(&a, &j).unwrap() && refines(&b, &j).unwrap());
        prop_assert!(refines(&m, &a).unwrap() && refines(&m, &b).unwrap());
        prop_assert_eq!(ditset(&j), ditset(&a).union(&ditset(&b)));
    }

    #[test]
    fn common_dits_exist_off_the_blob((a, b, _, _) in arb_triple()) {
        let shared = partition::common_dits(&a, &b).unwrap();
        prop_assert_eq!(shared.is_empty(), a.is_bottom() || b.is_bottom());
    }

    #[test]
    fn venn_identities_hold_exactly((a, b, _, p) in arb_triple()) {
        let prof = entropy_profile_by_dits(&a, &b, &p).unwrap();
        prop_assert_eq!(prof, entropy_profile(&a, &b, &p).unwrap());
    }

    #[test]
    fn entropy_bounds_and_monotonicity((a, b, _, p) in arb_triple()) {
        let zero = ratio(0, 1);
        let h = logical_entropy(&a, &p).unwrap();
        prop_assert!(h >= zero && h < ratio(1, 1));
        let j = join(&a, &b).unwrap();
        prop_assert!(logical_entropy(&j, &p).unwrap() >= h);
    }

    #[test]
    fn hamming_is_a_pseudometric((a, b, c, p) in arb_triple()) {
        let d = |x: &Partition, y: &Partition| hamming_distance(x, y, &p).unwrap();
        prop_assert_eq!(d(&a, &a), ratio(0, 1));
        prop_assert_eq!(d(&a, &b), d(&b, &a));
        prop_assert!(d(&a, &c) <= d(&a, &b) + d(&b, &c));
        let forms = classical::hamming_forms(&a, &b, &p).unwrap();
        prop_assert_eq!(&forms.conditional_sum, &forms.joint_form);
        prop_assert_eq!(&forms.conditional_sum, &forms.density_form);
    }

    #[test]
    fn rational_density_matches_partition_entropy((a, _, _, p) in arb_triple()) {
        let rho = density::rho_partition(&a, &p).unwrap();
        let h = logical_entropy(&a, &p).unwrap();
        prop_assert!((density::dm_logical_entropy(&rho) - ditlab::Weight::as_f64(&h)).abs() < 1e-12);
    }

    #[test]
    fn luders_is_a_valid_idempotent_measurement(seed: u64, n in 2usize..=7) {
        let mut r = rng(seed);
        let rho = random::density(n, &mut r);
        let projs = random::projector_set(n, &mut r);
        let once = density::luders(&rho, &projs).unwrap();
        let twice = density::luders(&once, &projs).unwrap();
        prop_assert!(linalg::max_abs(&(once.matrix() - twice.matrix())) < 1e-12);
        prop_assert!(DensityMatrix::validate(once.matrix().clone()).is_ok());
        let increase = density::dm_logical_entropy(&once) - density::dm_logical_entropy(&rho);
        prop_assert!((increase - density::decohered_sumsq(&rho, &once).unwrap()).abs() < 1e-10);
        prop_assert!(density::von_neumann(&once) >= density::von_neumann(&rho) - 1e-9);
    }

    #[test]
    fn purity_is_sum_of_squared_moduli(seed: u64, n in 1usize..=8) {
        let rho = random::density(n, &mut rng(seed));
        let via_square = (rho.matrix() * rho.matrix()).trace().re;
        prop_assert!((via_square - rho.purity()).abs() <= 1e-12 * via_square.max(1.0));
        prop_assert_eq!(rho.is_pure(1e-10), rho.logical_entropy() <= 1e-10);
    }

    #[test]
    fn observable_entropy_routes_agree(seed: u64, n in 2usize..=8, degenerate: bool) {
        let mut r = rng(seed);
        let f = random::observable(n, degenerate, &mut r);
        let psi = random::state(n, &mut r);
        let h = quantum::h_observable_state(&f, &psi).unwrap();
        prop_assert!((h.via_qudits - h.via_luders).abs() <= 1e-10);
        prop_assert!(quantum::quantum_fundamental_check(&f, &psi).unwrap().residual() <= 1e-10);
    }

    #[test]
    fn commuting_profile_is_classical(seed: u64, n in 2usize..=6) {
        let mut r = rng(seed);
        let basis = random::unitary(n, &mut r);
        let f = Observable::new(basis.clone(), random::eigenvalues(n, true, &mut r)).unwrap();
        let g = Observable::new(basis, random::eigenvalues(n, true, &mut r)).unwrap();
        let psi = random::state(n, &mut r);
        let prof = quantum::commuting_profile(&f, &g, &psi).unwrap();
        let probs = f.probabilities(&psi).unwrap();
        let total: f64 = probs.iter().sum();
        let p = ProbDist::new(probs.iter().map(|x| x / total).collect()).unwrap();
        let want: quantum::QuantumProfile =
            entropy_profile(&f.eigenvalue_partition(), &g.eigenvalue_partition(), &p).unwrap().into();
        prop_assert!(prof.max_difference(&want) <= 1e-12);
        prop_assert!(prof.venn_residual() <= 1e-10);
    }

    #[test]
    fn noncommuting_venn_identity(seed: u64, n in 2usize..=4) {
        let mut r = rng(seed);
        let f = random::observable(n, true, &mut r);
        let g = random::observable(n, true, &mut r);
        let prof = quantum::noncommuting_profile(&f, &g, &random::state(n * n, &mut r)).unwrap();
        prop_assert!(prof.venn_residual() <= 1e-10);
        prop_assert!((prof.mutual - (prof.h_f + prof.h_g - prof.h_joint)).abs() <= 1e-10);
    }

    #[test]
    fn distances_are_basis_independent(seed: u64, n in 2usize..=6) {
        let mut r = rng(seed);
        let (rho, tau) = (random::density(n, &mut r), random::density(n, &mut r));
        let w = random::unitary(n, &mut r);
        let (rho2, tau2) = (conjugate(&w, &rho), conjugate(&w, &tau));
        let cross = quantum::quantum_cross_entropy(&rho, &tau).unwrap();
        prop_assert!((cross - quantum::quantum_cross_entropy(&tau, &rho).unwrap()).abs() <= 1e-12);
        prop_assert!((cross - quantum::quantum_cross_entropy(&rho2, &tau2).unwrap()).abs() <= 1e-10);
        let d = quantum::quantum_hamming(&rho, &tau).unwrap();
        prop_assert!(d >= -1e-12);
        prop_assert!((d - quantum::quantum_hamming(&rho2, &tau2).unwrap()).abs() <= 1e-10);
        let max_entry = linalg::max_abs(&(rho.matrix() - tau.matrix()));
        // Hilbert-Schmidt bounds the largest entry from both sides.
        prop_assert!(max_entry * max_entry <= d + 1e-12);
        prop_assert!(d <= (n * n) as f64 * max_entry * max_entry + 1e-12);
    }

    #[test]
    fn density_pair_closed_forms(seed: u64, n in 2usize..=6) {
        let mut r = rng(seed);
        let (rho, tau) = (random::density(n, &mut r), random::density(n, &mut r));
        let brute = quantum::density_pair_profile(&rho, &tau).unwrap();
        prop_assert!(brute.max_difference(&quantum::density_pair_closed_forms(&rho, &tau).unwrap()) <= 1e-12);
    }
}

#[test]
fn enumeration_counts_are_bell_numbers() {
    for n in 1..=8 {
        let count = partition::enumerate_partitions(Universe::new(n).unwrap()).unwrap().count() as u128;
        assert_eq!(count, partition::bell_number(n));
    }
}
