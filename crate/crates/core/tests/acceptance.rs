//! One line per acceptance criterion. Exits non-zero if any fails.

use std::process::ExitCode;
use std::time::Instant;

use cdp_core::cdp_set::tables;
use cdp_core::enumerate::{enumerate_all, group_sets};
use cdp_core::golden;
use cdp_core::linalg::{self, CMatrix};
use cdp_core::majorization::majorises;
use cdp_core::random::{random_diagonal_state, random_family, random_hermitian, random_hermitian_family};
use cdp_core::separability::{self, maximally_entangled, maximally_mixed};
use cdp_core::{CdpOperator, CdpSet};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

struct Outcome {
    pass: bool,
    detail: String,
}

fn outcome(pass: bool, detail: impl Into<String>) -> Outcome {
    Outcome {
        pass,
        detail: detail.into(),
    }
}

fn abelian_sets_upto(n_max: usize) -> Vec<CdpSet> {
    (1..=n_max)
        .flat_map(|n| enumerate_all(n, true).unwrap().filter(CdpSet::is_abelian))
        .collect()
}

/// All canonical sets for n ≤ 4 plus C(5) and C(6).
fn sweep_sets() -> Vec<CdpSet> {
    let mut sets: Vec<CdpSet> = (2..=4).flat_map(|n| enumerate_all(n, true).unwrap()).collect();
    sets.push(CdpSet::cyclic(5).unwrap());
    sets.push(CdpSet::cyclic(6).unwrap());
    sets
}

fn golden_structures() -> Outcome {
    let c4 = golden::label_grid(&CdpSet::cyclic(4).unwrap()) == golden::parse_label_grid(golden::PATTERN_C4);
    let v4 = golden::label_grid(&golden::v4()) == golden::parse_label_grid(golden::PATTERN_V4);
    outcome(c4 && v4, format!("C(4) pattern {c4}, V(4) pattern {v4}"))
}

fn conjugated_goldens() -> Outcome {
    let c4 = CdpSet::from_cycles(&["id", "(12)(34)", "(1324)", "(1423)"], 1).unwrap();
    let v4 = CdpSet::from_cycles(&["id", "(13)(24)", "(14)(23)", "(12)(34)"], 1).unwrap();
    let a = golden::sigma4().conjugated_set().unwrap().same_elements(&c4);
    let b = golden::sigma4_prime().conjugated_set().unwrap().same_elements(&v4);
    let s5 = golden::sigma5();
    let c = s5.conjugated_set().unwrap().same_elements(&s5);
    outcome(a && b && c, format!("Sigma4 -> C(4) {a}, Sigma4' -> V(4) {b}, Sigma5 -> Sigma5 {c}"))
}

fn enumeration_counts() -> Outcome {
    let n3 = enumerate_all(3, true).unwrap().count();
    let n4 = enumerate_all(4, true).unwrap().count();
    // every Latin square of order 4 is one canonical set with its rows permuted
    let squares = n4 * 24;
    outcome(n3 == 2 && n4 == 24 && squares == 576, format!("n=3: {n3}, n=4: {n4} ({squares} Latin squares)"))
}

fn pt_theorem(rng: &mut ChaCha8Rng) -> Outcome {
    let mut sets = abelian_sets_upto(4);
    sets.push(CdpSet::cyclic(5).unwrap());
    sets.push(CdpSet::cyclic(6).unwrap());
    sets.push(CdpSet::regular_representation(&tables::elementary_abelian_2(3)).unwrap());
    let mut worst: f64 = 0.0;
    let mut runs = 0;
    for sigma in &sets {
        for _ in 0..50 {
            let op = CdpOperator::build(random_hermitian_family(sigma.degree(), rng), sigma.clone()).unwrap();
            let pt = separability::pt_as_cdp(&op).unwrap();
            let dense = linalg::partial_transpose(op.dense()).unwrap();
            worst = worst.max(linalg::max_abs_diff(pt.dense(), &dense));
            runs += 1;
        }
    }
    outcome(worst == 0.0, format!("{} abelian sets, {runs} families, max |diff| = {worst:e}", sets.len()))
}

fn pt_spectra(rng: &mut ChaCha8Rng, sets: &[CdpSet]) -> Outcome {
    let mut worst: f64 = 0.0;
    for t in 0..200 {
        let sigma = &sets[t % sets.len()];
        let n = sigma.degree();
        let op = CdpOperator::build(random_hermitian_family(n, rng), sigma.clone()).unwrap();
        let spec = separability::pt_spectrum(&op).unwrap();
        for (k, block) in spec.blocks.iter().enumerate() {
            let dense = linalg::partial_transpose(&op.summand(k).unwrap()).unwrap();
            let mut closed = block.eigenvalues();
            closed.resize(n * n, 0.0);
            worst = worst.max(linalg::multiset_distance(&closed, &linalg::eigvalsh(&dense)));
        }
    }
    outcome(worst <= 1e-10, format!("200 families, n in 2..=6, max deviation {worst:.2e}"))
}

fn spectral_union_and_norms(rng: &mut ChaCha8Rng, sets: &[CdpSet]) -> Outcome {
    let (mut eig, mut tr, mut hs, mut linear_single): (f64, f64, f64, f64) = (0.0, 0.0, 0.0, 0.0);
    for t in 0..200 {
        let sigma = &sets[t % sets.len()];
        let n = sigma.degree();
        let op = CdpOperator::build(random_hermitian_family(n, rng), sigma.clone()).unwrap();
        let blocks = op.spectrum().unwrap().eigenvalues();
        eig = eig.max(linalg::multiset_distance(&blocks, &linalg::eigvalsh(op.dense())));
        let fam = op.norms();
        let dense = op.dense_norms();
        tr = tr.max((fam.tr - dense.tr).abs());
        let quad: f64 = op.family().mats().iter().map(|m| linalg::hs_norm(m).powi(2)).sum();
        hs = hs.max((dense.hs.powi(2) - quad).abs());

        // the linear HS form only holds with a single nonzero block
        let k = rng.gen_range(0..n);
        let single = cdp_core::CoefficientFamily::single(n, k, op.family().mat(k).clone()).unwrap();
        let one = CdpOperator::build(single, sigma.clone()).unwrap();
        linear_single = linear_single.max((one.dense_norms().hs - linalg::hs_norm(op.family().mat(k))).abs());
    }
    let pass = eig <= 1e-10 && tr <= 1e-10 && hs <= 1e-10 && linear_single <= 1e-10;
    outcome(
        pass,
        format!("eigen {eig:.2e}, trace norm {tr:.2e}, HS^2 {hs:.2e}, single-block HS {linear_single:.2e}"),
    )
}

fn realignment(rng: &mut ChaCha8Rng) -> Outcome {
    let sets = abelian_sets_upto(5);
    let mut worst: f64 = 0.0;
    for sigma in &sets {
        for _ in 0..10 {
            let op = CdpOperator::build(random_family(sigma.degree(), rng), sigma.clone()).unwrap();
            let fam = separability::realigned_family(&op).unwrap();
            let rebuilt = CdpOperator::build(fam, sigma.clone()).unwrap();
            worst = worst.max(linalg::max_abs_diff(rebuilt.dense(), &linalg::realign(op.dense()).unwrap()));
        }
    }
    let mut separable_ok = 0;
    let mut max_sep: f64 = 0.0;
    for t in 0..100 {
        let n = 2 + t % 4;
        let sigma = CdpSet::cyclic(n).unwrap();
        let op = CdpOperator::build(random_diagonal_state(n, rng), sigma).unwrap();
        let r = separability::realignment(&op, 1e-9).unwrap();
        max_sep = max_sep.max(r.sum);
        if r.sum <= 1.0 + 1e-9 {
            separable_ok += 1;
        }
    }
    let entangled_fail = (2..=5).all(|n| {
        let op = maximally_entangled(&CdpSet::cyclic(n).unwrap()).unwrap();
        !separability::realignment(&op, 1e-9).unwrap().pass
    });
    outcome(
        worst == 0.0 && separable_ok == 100 && entangled_fail,
        format!(
            "{} abelian sets exact (max |diff| = {worst:e}); separable {separable_ok}/100 (max sum {max_sep:.6}); entangled rejected n=2..5: {entangled_fail}",
            sets.len()
        ),
    )
}

fn majorisation(rng: &mut ChaCha8Rng) -> Outcome {
    let mut schur = 0;
    for _ in 0..500 {
        let n = rng.gen_range(2..=6);
        let a: CMatrix = random_hermitian(n, rng);
        let diag: Vec<f64> = a.diagonal().iter().map(|z| z.re).collect();
        if majorises(&diag, &linalg::eigvalsh(&a), 1e-10).unwrap() {
            schur += 1;
        }
    }
    let extremes = (2..=5).all(|n| {
        let c = CdpSet::cyclic(n).unwrap();
        let mixed = separability::majorisation_criterion(&maximally_mixed(&c).unwrap(), 1e-10).unwrap();
        let ent = separability::majorisation_criterion(&maximally_entangled(&c).unwrap(), 1e-10).unwrap();
        mixed.vs_rho1 && mixed.vs_rho2 && !ent.vs_rho1 && !ent.vs_rho2
    });
    outcome(schur == 500 && extremes, format!("Schur {schur}/500; mixed pass and entangled fail for n=2..5: {extremes}"))
}

fn maps_goldens() -> Outcome {
    let wanted = [
        "S(3) channel Choi matrix",
        "quaternion channel Choi matrix",
        "quaternion character orthogonality",
        "Breuer-Hall n = 4 Choi equals printed matrix",
        "reduction Choi identical over C(4) and V(4)",
        "reduction Choi at n = 2 equals id - SWAP",
    ];
    let checks = golden::reproduce().unwrap();
    let mut pass = true;
    let mut parts = Vec::new();
    for name in wanted {
        let c = checks.iter().find(|c| c.name == name).expect("check exists");
        pass &= c.passed;
        parts.push(format!("{}: {}", c.name, if c.passed { "ok" } else { "FAILED" }));
    }
    outcome(pass, parts.join("; "))
}

fn structure_theorems() -> Outcome {
    let mut checked = 0;
    let mut abelian_group = true;
    for n in 1..=5 {
        for s in enumerate_all(n, true).unwrap() {
            checked += 1;
            abelian_group &= !s.is_abelian() || s.is_group();
        }
    }

    let rs3 = golden::regular_s3();
    let es = rs3.conjugated_matrices().unwrap();
    let mixed = rs3
        .perms()
        .iter()
        .all(|s| es.iter().all(|e| s.matrix().mul(e) == e.mul(&s.matrix())));

    let mut groups: Vec<CdpSet> = (1..=5)
        .flat_map(|n| enumerate_all(n, true).unwrap().filter(CdpSet::is_group))
        .collect();
    let z6 = CdpSet::cyclic(6).unwrap();
    groups.extend(group_sets(&[z6, rs3.clone()]).unwrap());
    let xi_ok = groups.iter().all(|g| {
        let xi = g.xi().unwrap();
        let e = g.conjugated_set().unwrap();
        xi.is_involution()
            && xi.apply(0) == 0
            && (0..g.degree()).all(|i| e.perm(i).inverse() == *e.perm(xi.apply(i)))
    });
    outcome(
        abelian_group && mixed && xi_ok,
        format!(
            "abelian => group on {checked} sets: {abelian_group}; mixed commutation on R(S3): {mixed}; xi on {} group sets: {xi_ok}",
            groups.len()
        ),
    )
}

fn main() -> ExitCode {
    let start = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    let sets = sweep_sets();
    let results: Vec<(u32, &str, Outcome)> = vec![
        (1, "golden sparsity patterns", golden_structures()),
        (2, "conjugated-set goldens", conjugated_goldens()),
        (3, "enumeration counts", enumeration_counts()),
        (4, "partial transpose theorem, exact", pt_theorem(&mut rng)),
        (5, "closed-form PT spectra", pt_spectra(&mut rng, &sets)),
        (6, "spectral union and norms", spectral_union_and_norms(&mut rng, &sets)),
        (7, "realignment", realignment(&mut rng)),
        (8, "majorisation", majorisation(&mut rng)),
        (9, "linear-map goldens", maps_goldens()),
        (10, "structure theorems", structure_theorems()),
    ];
    let mut failed = 0;
    for (id, name, o) in &results {
        if !o.pass {
            failed += 1;
        }
        println!(
            "criterion {id:>2} [PRIMARY] {}: {name}: {}",
            if o.pass { "PASS" } else { "FAIL" },
            o.detail
        );
    }
    println!(
        "acceptance: {}/{} passed in {:.1}s",
        results.len() - failed,
        results.len(),
        start.elapsed().as_secs_f64()
    );
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
