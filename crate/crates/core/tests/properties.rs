use cdp_core::enumerate::enumerate_all;
use cdp_core::linalg::{self, c, CMatrix};
use cdp_core::majorization::majorises;
use cdp_core::random::{random_hermitian_family, random_psd_family};
use cdp_core::separability;
use cdp_core::{CdpOperator, CdpSet, Permutation};
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn perm_strategy(max_n: usize) -> impl Strategy<Value = Permutation> {
    (1..=max_n)
        .prop_flat_map(|n| Just((0..n).collect::<Vec<usize>>()).prop_shuffle())
        .prop_map(|w| Permutation::from_images(w).unwrap())
}

fn perm_pair(max_n: usize) -> impl Strategy<Value = (Permutation, Permutation)> {
    (1..=max_n).prop_flat_map(|n| {
        let word = Just((0..n).collect::<Vec<usize>>());
        (word.clone().prop_shuffle(), word.prop_shuffle())
            .prop_map(|(a, b)| (Permutation::from_images(a).unwrap(), Permutation::from_images(b).unwrap()))
    })
}

fn sets_upto_4() -> Vec<CdpSet> {
    (2..=4).flat_map(|n| enumerate_all(n, true).unwrap()).collect()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1000))]

    #[test]
    fn matrix_is_a_homomorphism((p, q) in perm_pair(8)) {
        let pq = p.compose(&q).unwrap();
        prop_assert_eq!(pq.matrix(), p.matrix().mul(&q.matrix()));
        prop_assert_eq!(p.compose(&p.inverse()).unwrap(), Permutation::identity(p.degree()).unwrap());
    }
}

proptest! {
    #[test]
    fn fixed_points_are_the_trace(p in perm_strategy(8)) {
        prop_assert_eq!(p.fixed_points() as i32, p.matrix().trace());
    }

    #[test]
    fn cycle_round_trip(p in perm_strategy(12), base in 0usize..2) {
        let text = p.to_cycles(base);
        prop_assert_eq!(Permutation::parse_cycles(&text, p.degree(), base).unwrap(), p);
    }

    #[test]
    fn words_are_accepted_iff_bijective(word in prop::collection::vec(0usize..6, 1..7)) {
        let mut sorted = word.clone();
        sorted.sort();
        let bijective = sorted == (0..word.len()).collect::<Vec<_>>();
        prop_assert_eq!(Permutation::from_images(word).is_ok(), bijective);
    }

    #[test]
    fn completely_different_iff_orthogonal((p, q) in perm_pair(7)) {
        let orth = p.inverse().matrix().mul(&q.matrix()).trace() == 0;
        prop_assert_eq!(p.completely_different(&q), orth);
    }

    #[test]
    fn transformed_sets_stay_cdp(idx in 0usize..27, seed in any::<u64>()) {
        let sets = sets_upto_4();
        let s = &sets[idx % sets.len()];
        let n = s.degree();
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let mut word: Vec<usize> = (0..n).collect();
        let mut other = word.clone();
        use rand::seq::SliceRandom;
        word.shuffle(&mut rng);
        other.shuffle(&mut rng);
        let l = Permutation::from_images(word).unwrap();
        let r = Permutation::from_images(other).unwrap();
        prop_assert!(s.transform(&l, &r).is_ok());
        prop_assert!(s.transform(&l, &r).unwrap().inverse_set().degree() == n);
    }

    #[test]
    fn abelian_sets_are_symmetric(idx in 0usize..27) {
        let sets = sets_upto_4();
        let s = &sets[idx % sets.len()];
        if s.is_abelian() {
            let n = s.degree();
            for i in 0..n {
                for j in 0..n {
                    prop_assert_eq!(s.perm(i).apply(j), s.perm(j).apply(i));
                }
            }
            prop_assert_eq!(s.conjugated_set().unwrap(), s.inverse_set());
        }
    }

    #[test]
    fn conjugated_matrices_compose_like_the_group(idx in 0usize..27) {
        let sets = sets_upto_4();
        let s = &sets[idx % sets.len()];
        if s.is_group() {
            let e = s.conjugated_matrices().unwrap();
            let n = s.degree();
            for i in 0..n {
                for j in 0..n {
                    prop_assert_eq!(e[i].mul(&e[j]), e[s.perm(i).apply(j)].clone());
                }
            }
        }
    }

    #[test]
    fn family_and_dense_psd_agree(idx in 0usize..27, seed in any::<u64>(), shift in 0.0f64..2.0) {
        let sets = sets_upto_4();
        let s = &sets[idx % sets.len()];
        let n = s.degree();
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let fam = random_psd_family(n, &mut rng);
        // push one block towards indefiniteness
        let mut mats = fam.into_mats();
        mats[n - 1] -= CMatrix::identity(n, n).scale(shift);
        let op = CdpOperator::build(cdp_core::CoefficientFamily::new(mats).unwrap(), s.clone()).unwrap();
        let dense_min = linalg::eigvalsh(op.dense())[0];
        // skip the knife edge where rounding decides
        prop_assume!(dense_min.abs() > 1e-7);
        prop_assert_eq!(op.is_psd(1e-9), dense_min >= -1e-9);
        prop_assert!(op.is_hermitian(1e-12));
    }

    #[test]
    fn ppt_routes_agree(n in 2usize..6, seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let op = CdpOperator::build(random_psd_family(n, &mut rng), CdpSet::cyclic(n).unwrap()).unwrap();
        let fast = separability::ppt(&op, 1e-9).unwrap();
        let dense_min = linalg::eigvalsh(&linalg::partial_transpose(op.dense()).unwrap())[0];
        prop_assert!((fast.min_eigenvalue - dense_min).abs() < 1e-10);
    }

    #[test]
    fn pt_spectrum_ignores_phases(n in 2usize..6, seed in any::<u64>(), theta in 0.0f64..6.3) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let fam = random_hermitian_family(n, &mut rng);
        let phase = c(theta.cos(), theta.sin());
        let rotated: Vec<CMatrix> = fam
            .mats()
            .iter()
            .map(|a| CMatrix::from_fn(n, n, |i, j| match i.cmp(&j) {
                std::cmp::Ordering::Less => a[(i, j)] * phase,
                std::cmp::Ordering::Greater => a[(i, j)] * phase.conj(),
                std::cmp::Ordering::Equal => a[(i, j)],
            }))
            .collect();
        let sigma = CdpSet::cyclic(n).unwrap();
        let x = CdpOperator::build(fam, sigma.clone()).unwrap();
        let y = CdpOperator::build(cdp_core::CoefficientFamily::new(rotated).unwrap(), sigma).unwrap();
        // per summand; across summands the transposed blocks mix coefficients
        for k in 0..n {
            let ex = linalg::eigvalsh(&linalg::partial_transpose(&x.summand(k).unwrap()).unwrap());
            let ey = linalg::eigvalsh(&linalg::partial_transpose(&y.summand(k).unwrap()).unwrap());
            prop_assert!(linalg::multiset_distance(&ex, &ey) < 1e-10);
        }
    }

    #[test]
    fn reduced_states_match_partial_traces(idx in 0usize..27, seed in any::<u64>()) {
        let sets = sets_upto_4();
        let s = &sets[idx % sets.len()];
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let op = CdpOperator::build(random_hermitian_family(s.degree(), &mut rng), s.clone()).unwrap();
        let (r1, r2) = separability::reduced_states(&op);
        prop_assert!(linalg::max_abs_diff(&r1, &linalg::partial_trace_second(op.dense()).unwrap()) < 1e-12);
        prop_assert!(linalg::max_abs_diff(&r2, &linalg::partial_trace_first(op.dense()).unwrap()) < 1e-12);
    }

    #[test]
    fn majorisation_is_reflexive_and_uniform_is_least(v in prop::collection::vec(0.0f64..1.0, 1..10)) {
        let total: f64 = v.iter().sum();
        prop_assume!(total > 1e-6);
        let uniform = vec![total / v.len() as f64; v.len()];
        prop_assert!(majorises(&v, &v, 1e-12).unwrap());
        prop_assert!(majorises(&uniform, &v, 1e-12).unwrap());
    }

    #[test]
    fn separable_diagonal_states_pass_every_criterion(n in 2usize..6, seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let fam = cdp_core::random::random_diagonal_state(n, &mut rng);
        let op = CdpOperator::build(fam, CdpSet::cyclic(n).unwrap()).unwrap();
        let report = separability::analyze(&op, 1e-9).unwrap();
        prop_assert!(report.ppt);
        prop_assert!(report.realignment_pass);
        prop_assert!(report.majorisation.vs_rho1 && report.majorisation.vs_rho2);
        prop_assert!(!report.entangled);
    }
}

#[test]
fn group_table_identity_pins_composition_order() {
    // σ_i σ_j = σ_{σ_i(j)} for group sets in canonical order
    let rs3 = cdp_core::golden::regular_s3();
    for a in rs3.perms() {
        for b in rs3.perms() {
            assert_eq!(a.compose(b).unwrap(), *rs3.perm(a.apply(b.apply(0))));
        }
    }
    for (i, a) in rs3.perms().iter().enumerate() {
        for (j, b) in rs3.perms().iter().enumerate() {
            assert_eq!(a.compose(b).unwrap(), *rs3.perm(rs3.perm(i).apply(j)));
        }
    }
}

#[test]
fn centraliser_example_keeps_conjugated_matrices() {
    // Σ₃ and Σ₃σ₀⁻¹ generate the same set of conjugated matrices
    let s3 = CdpSet::from_cycles(&["(23)", "(12)", "(13)"], 1).unwrap();
    let (shifted, _) = s3.abelianize().unwrap();
    let a: std::collections::BTreeSet<Vec<i32>> = s3
        .conjugated_matrices()
        .unwrap()
        .iter()
        .map(|m| m.0.iter().copied().collect())
        .collect();
    let b: std::collections::BTreeSet<Vec<i32>> = shifted
        .conjugated_matrices()
        .unwrap()
        .iter()
        .map(|m| m.0.iter().copied().collect())
        .collect();
    assert_eq!(a, b);
}
