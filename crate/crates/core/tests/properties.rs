mod common;

use common::*;
use proptest::prelude::*;
use qcorr::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

const TOL: f64 = 1e-9;

fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn mixtures_are_valid_states(seed in any::<u64>()) {
        let s = random_classical_mixture(&mut rng(seed), 4);
        let m = s.matrix();
        prop_assert!((m.trace().re - 1.0).abs() <= TOL);
        prop_assert!(m.hermiticity_deviation() <= TOL);
        let e = hermitian_eigen(m).unwrap();
        prop_assert!(e.eigenvalues.iter().all(|&l| l >= -TOL));
    }

    #[test]
    fn partial_trace_of_product_recovers_factors(seed in any::<u64>(), da in 2usize..=4, db in 2usize..=4) {
        let mut r = rng(seed);
        let ra = DensityMatrix::new(random_density(&mut r, da)).unwrap();
        let rb = DensityMatrix::new(random_density(&mut r, db)).unwrap();
        let s = BipartiteState::product(&ra, &rb).unwrap();
        let ta = s.partial_trace(Subsystem::A);
        let tb = s.partial_trace(Subsystem::B);
        prop_assert!(ta.matrix().max_abs_diff(ra.matrix()) <= TOL);
        prop_assert!(tb.matrix().max_abs_diff(rb.matrix()) <= TOL);
        prop_assert!((ta.matrix().trace().re - 1.0).abs() <= TOL);
        prop_assert!((tb.matrix().trace().re - 1.0).abs() <= TOL);
    }

    #[test]
    fn partial_trace_matches_direct_summation(seed in any::<u64>(), da in 1usize..=4, db in 1usize..=4) {
        let mut r = rng(seed);
        let s = BipartiteState::new(da, db, random_density(&mut r, da * db)).unwrap();
        let m = s.matrix();
        // ρ^A[i][k] = Σ_j ⟨ij|ρ|kj⟩ via explicit product kets.
        let ket = |i: usize, j: usize| {
            let mut v = vec![Complex64::new(0.0, 0.0); da * db];
            v[i * db + j] = Complex64::new(1.0, 0.0);
            v
        };
        let ra = s.partial_trace(Subsystem::A);
        for i in 0..da {
            for k in 0..da {
                let mut acc = Complex64::new(0.0, 0.0);
                for j in 0..db {
                    let bra = ket(i, j);
                    let right = ket(k, j);
                    for x in 0..da * db {
                        for y in 0..da * db {
                            acc += bra[x].conj() * m[(x, y)] * right[y];
                        }
                    }
                }
                prop_assert!((ra.matrix()[(i, k)] - acc).norm() <= TOL);
            }
        }
    }

    #[test]
    fn tensor_trace_multiplies(seed in any::<u64>(), da in 1usize..=4, db in 1usize..=4) {
        let mut r = rng(seed);
        let a = random_hermitian(&mut r, da);
        let b = random_hermitian(&mut r, db);
        let t = tensor_product(&a, &b);
        prop_assert_eq!(t.dim(), da * db);
        prop_assert!((t.trace() - a.trace() * b.trace()).norm() <= TOL);
    }

    #[test]
    fn eigen_reconstructs(seed in any::<u64>(), n in 1usize..=12) {
        let m = random_hermitian(&mut rng(seed), n);
        let e = hermitian_eigen(&m).unwrap();
        prop_assert!(e.reconstruct().max_abs_diff(&m) <= TOL);
        let vhv = &e.eigenvectors.adjoint() * &e.eigenvectors;
        prop_assert!(vhv.max_abs_diff(&ComplexMatrix::identity(n)) <= TOL);
        let sum: f64 = e.eigenvalues.iter().sum();
        prop_assert!((sum - m.trace().re).abs() <= TOL);
    }

    #[test]
    fn joint_is_order_invariant(seed in any::<u64>()) {
        let mut r = rng(seed);
        let s = random_classical_mixture(&mut r, 4);
        let ba = random_basis(&mut r, s.dim_a());
        let bb = random_basis(&mut r, s.dim_b());
        let a_first = joint_distribution(&s, &ba, &bb, MeasurementOrder::AFirst).unwrap();
        let b_first = joint_distribution(&s, &ba, &bb, MeasurementOrder::BFirst).unwrap();
        let one_shot = joint_one_shot(&s, &ba, &bb).unwrap();
        for i in 0..s.dim_a() {
            for j in 0..s.dim_b() {
                prop_assert!((a_first.p(i, j) - b_first.p(i, j)).abs() <= TOL);
                prop_assert!((a_first.p(i, j) - one_shot.p(i, j)).abs() <= TOL);
            }
        }
    }

    #[test]
    fn chain_and_marginal_consistency(seed in any::<u64>()) {
        let mut r = rng(seed);
        let s = random_classical_mixture(&mut r, 4);
        let ba = random_basis(&mut r, s.dim_a());
        let bb = random_basis(&mut r, s.dim_b());
        let j = joint_distribution(&s, &ba, &bb, MeasurementOrder::AFirst).unwrap();
        let (pa, pb) = outcome_marginals(&s, &ba, &bb).unwrap();
        for i in 0..j.n_a() {
            prop_assert!((j.p_a()[i] - pa[i]).abs() <= TOL);
            let row_sum: f64 = j.table()[i].iter().sum();
            prop_assert!((row_sum - j.p_a()[i]).abs() <= TOL);
        }
        for k in 0..j.n_b() {
            prop_assert!((j.p_b()[k] - pb[k]).abs() <= TOL);
        }
        let cond = conditional_table(&j, ConditionalDirection::BGivenA);
        for (i, row) in cond.rows.iter().enumerate() {
            match row {
                Some(row) => {
                    prop_assert!((row.iter().sum::<f64>() - 1.0).abs() <= TOL);
                    for (k, q) in row.iter().enumerate() {
                        prop_assert!((j.p(i, k) - j.p_a()[i] * q).abs() <= TOL);
                    }
                }
                None => prop_assert!(j.p_a()[i] <= 1e-12),
            }
        }
    }

    #[test]
    fn sequential_protocol_matches_one_shot(seed in any::<u64>()) {
        let mut r = rng(seed);
        let s = random_classical_mixture(&mut r, 3);
        let ba = random_basis(&mut r, s.dim_a());
        let bb = random_basis(&mut r, s.dim_b());
        let joint = joint_one_shot(&s, &ba, &bb).unwrap();
        for i in 0..s.dim_a() {
            if joint.p_a()[i] <= 1e-12 {
                continue;
            }
            let post = post_measurement_state(&s, Subsystem::A, &ba, i).unwrap();
            for k in 0..s.dim_b() {
                let q = tensor_product(&ComplexMatrix::identity(s.dim_a()), &bb.projector(k));
                let p = (&q * post.matrix()).trace().re;
                prop_assert!((joint.p(i, k) - joint.p_a()[i] * p).abs() <= TOL);
            }
        }
    }

    #[test]
    fn information_identities_and_bounds(seed in any::<u64>()) {
        let s = random_classical_mixture(&mut rng(seed), 4);
        let (ba, bb) = computational_bases(&s);
        let j = joint_one_shot(&s, &ba, &bb).unwrap();
        let mi = classical_mutual_information(&j);
        let h_a = shannon_entropy(j.p_a()).unwrap();
        let h_b = shannon_entropy(j.p_b()).unwrap();
        prop_assert!(mi >= -TOL);
        prop_assert!(mi <= h_a.min(h_b) + TOL);
        prop_assert!((mi - (h_b - conditional_entropy(&j, ConditionalDirection::BGivenA))).abs() <= TOL);
        prop_assert!((mi - (h_a - conditional_entropy(&j, ConditionalDirection::AGivenB))).abs() <= TOL);
        prop_assert!((mi - mutual_information_oracle(j.table())).abs() <= TOL);
        prop_assert!((quantum_mutual_information(&s) - mi).abs() <= TOL);
        if let Some(t) = total_correlation(&s) {
            prop_assert!((-TOL..=1.0 + TOL).contains(&t));
            prop_assert!((t - correlation_measure(&j).unwrap()).abs() <= TOL);
        }
        prop_assert_eq!(correlation_measure(&j).is_some(), total_correlation(&s).is_some());
    }

    #[test]
    fn correlation_measure_symmetric(seed in any::<u64>()) {
        let s = random_classical_mixture(&mut rng(seed), 4);
        let (ba, bb) = computational_bases(&s);
        let j = joint_one_shot(&s, &ba, &bb).unwrap();
        match (correlation_measure(&j), correlation_measure(&j.transpose())) {
            (Some(x), Some(y)) => prop_assert!((x - y).abs() <= TOL),
            (x, y) => prop_assert_eq!(x, y),
        }
        if let (Some(a), Some(b), Some(c)) = (
            directional_ratio(&j, RatioDirection::OverHA),
            directional_ratio(&j, RatioDirection::OverHB),
            correlation_measure(&j),
        ) {
            prop_assert!((c - a.max(b)).abs() <= TOL);
        }
    }

    #[test]
    fn functional_implies_unit_ratio(seed in any::<u64>()) {
        let s = random_classical_mixture(&mut rng(seed), 4);
        let (ba, bb) = computational_bases(&s);
        let j = joint_one_shot(&s, &ba, &bb).unwrap();
        if is_functional(&j, FunctionalDirection::BOfA) {
            if let Some(r) = directional_ratio(&j, RatioDirection::OverHB) {
                prop_assert!((r - 1.0).abs() <= TOL);
            }
        }
        if is_functional(&j, FunctionalDirection::AOfB) {
            if let Some(r) = directional_ratio(&j, RatioDirection::OverHA) {
                prop_assert!((r - 1.0).abs() <= TOL);
            }
        }
    }

    #[test]
    fn pure_states_double_the_reduced_entropy(seed in any::<u64>(), da in 2usize..=4, db in 2usize..=4) {
        let mut r = rng(seed);
        let amps: Vec<Complex64> = (0..da * db).map(|_| random_complex(&mut r)).collect();
        let s = BipartiteState::pure(da, db, &amps).unwrap();
        let s_a = von_neumann_entropy(&s.partial_trace(Subsystem::A));
        let s_b = von_neumann_entropy(&s.partial_trace(Subsystem::B));
        prop_assert!(von_neumann_entropy(s.rho()) <= TOL);
        prop_assert!((s_a - s_b).abs() <= TOL);
        prop_assert!((quantum_mutual_information(&s) - 2.0 * s_a).abs() <= TOL);
    }
}

#[test]
fn bell_type_states_double_the_reduced_entropy() {
    // cos θ|00⟩ + sin θ|11⟩
    for theta in [0.1f64, 0.4, std::f64::consts::FRAC_PI_4] {
        let (c, s) = (theta.cos(), theta.sin());
        let zero = Complex64::new(0.0, 0.0);
        let state = BipartiteState::pure(
            2,
            2,
            &[Complex64::new(c, 0.0), zero, zero, Complex64::new(s, 0.0)],
        )
        .unwrap();
        let s_a = von_neumann_entropy(&state.partial_trace(Subsystem::A));
        let oracle = entropy_oracle(&[c * c, s * s]);
        assert!((s_a - oracle).abs() <= TOL);
        assert!((quantum_mutual_information(&state) - 2.0 * oracle).abs() <= TOL);
    }
}
