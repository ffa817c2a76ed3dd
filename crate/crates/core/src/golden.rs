//! Reference values from the literature, and checks against them.

use serde::Serialize;

use crate::cdp_set::{tables, CdpSet};
use crate::enumerate::enumerate_all;
use crate::error::Result;
use crate::linalg::{self, c, CMatrix};
use crate::maps::{breuer_hall_family, choi, AntisymUnitary, BreuerHallMap, IcqcChannel, LegOrder, ReductionMap};
use crate::operator::{decompose, subspace_basis, support_pattern, CdpOperator};
use crate::perm::Permutation;

/// Sparsity pattern over `C(4)`. Letters `a..d` name `k = 0..3`, the digits
/// are `i j`, so `b12` is `a^1_{12}`.
pub const PATTERN_C4: &str = "\
a00 . . . . a01 . . . . a02 . . . . a03
. b00 . . . . b01 . . . . b02 b03 . . .
. . c00 . . . . c01 c02 . . . . c03 . .
. . . d00 d01 . . . . d02 . . . . d03 .
. . . d10 d11 . . . . d12 . . . . d13 .
a10 . . . . a11 . . . . a12 . . . . a13
. b10 . . . . b11 . . . . b12 b13 . . .
. . c10 . . . . c11 c12 . . . . c13 . .
. . c20 . . . . c21 c22 . . . . c23 . .
. . . d20 d21 . . . . d22 . . . . d23 .
a20 . . . . a21 . . . . a22 . . . . a23
. b20 . . . . b21 . . . . b22 b23 . . .
. b30 . . . . b31 . . . . b32 b33 . . .
. . c30 . . . . c31 c32 . . . . c33 . .
. . . d30 d31 . . . . d32 . . . . d33 .
a30 . . . . a31 . . . . a32 . . . . a33
";

/// Sparsity pattern over `V(4)`, same notation.
pub const PATTERN_V4: &str = "\
a00 . . . . a01 . . . . a02 . . . . a03
. b00 . . b01 . . . . . . b02 . . b03 .
. . c00 . . . . c01 c02 . . . . c03 . .
. . . d00 . . d01 . . d02 . . d03 . . .
. b10 . . b11 . . . . . . b12 . . b13 .
a10 . . . . a11 . . . . a12 . . . . a13
. . . d10 . . d11 . . d12 . . d13 . . .
. . c10 . . . . c11 c12 . . . . c13 . .
. . c20 . . . . c21 c22 . . . . c23 . .
. . . d20 . . d21 . . d22 . . d23 . . .
a20 . . . . a21 . . . . a22 . . . . a23
. b20 . . b21 . . . . . . b22 . . b23 .
. . . d30 . . d31 . . d32 . . d33 . . .
. . c30 . . . . c31 c32 . . . . c33 . .
. b30 . . b31 . . . . . . b32 . . b33 .
a30 . . . . a31 . . . . a32 . . . . a33
";

/// The printed `Σ e_ij ⊗ B(e_ij)` for `n = 4`.
pub const BREUER_HALL_N4: &str = "\
. . . . . . . . . . 1 . . . . 1
. . . . . . . . . . . . . . . .
. . 1 . . . . . . . . . . -1 . .
. . . 1 . . . . . 1 . . . . . .
. . . . . . . . . . . . . . . .
. . . . . . . . . . 1 . . . . 1
. . . . . . 1 . . . . . 1 . . .
. . . . . . . 1 -1 . . . . . . .
. . . . . . . -1 1 . . . . . . .
. . . 1 . . . . . 1 . . . . . .
1 . . . . 1 . . . . . . . . . .
. . . . . . . . . . . . . . . .
. . . . . . 1 . . . . . 1 . . .
. . -1 . . . . . . . . . . 1 . .
. . . . . . . . . . . . . . . .
1 . . . . 1 . . . . . . . . . .
";

pub fn parse_label_grid(text: &str) -> Vec<Vec<Option<String>>> {
    text.lines()
        .filter(|l| !l.trim().is_empty())
        .map(|l| {
            l.split_whitespace()
                .map(|t| if t == "." { None } else { Some(t.to_string()) })
                .collect()
        })
        .collect()
}

/// The same layout generated from a CDP set.
pub fn label_grid(sigma: &CdpSet) -> Vec<Vec<Option<String>>> {
    support_pattern(sigma)
        .into_iter()
        .map(|row| {
            row.into_iter()
                .map(|slot| slot.map(|(k, i, j)| format!("{}{i}{j}", (b'a' + k as u8) as char)))
                .collect()
        })
        .collect()
}

pub fn parse_integer_grid(text: &str) -> CMatrix {
    let rows: Vec<Vec<f64>> = text
        .lines()
        .filter(|l| !l.trim().is_empty())
        .map(|l| {
            l.split_whitespace()
                .map(|t| if t == "." { 0.0 } else { t.parse().expect("integer entry") })
                .collect()
        })
        .collect();
    let n = rows.len();
    CMatrix::from_fn(n, n, |r, col| c(rows[r][col], 0.0))
}

/// Paper's `J(Φ)` for the `S(3)` channel.
pub fn s3_choi(l_sgn: f64, l_lambda: f64) -> CMatrix {
    let d = 0.5 * (1.0 + l_sgn);
    let o = 0.5 * (1.0 - l_sgn);
    CMatrix::from_row_slice(
        4,
        4,
        &[d, 0.0, 0.0, l_lambda, 0.0, o, 0.0, 0.0, 0.0, 0.0, o, 0.0, l_lambda, 0.0, 0.0, d].map(|x| c(x, 0.0)),
    )
}

/// Paper's `J(Φ^{t4})` for the quaternion channel.
pub fn quaternion_choi(l1: f64, l2: f64, l3: f64) -> CMatrix {
    let (p, m, s, t) = (1.0 + l2, 1.0 - l2, l1 + l3, l3 - l1);
    CMatrix::from_row_slice(
        4,
        4,
        &[p, 0.0, 0.0, s, 0.0, m, t, 0.0, 0.0, t, m, 0.0, s, 0.0, 0.0, p].map(|x| c(0.5 * x, 0.0)),
    )
}

/// Named reference sets (1-based cycle notation).
pub fn sigma5() -> CdpSet {
    CdpSet::from_cycles(&["id", "(12)(345)", "(13)(542)", "(14)(352)", "(15)(243)"], 1).expect("valid")
}

pub fn sigma4() -> CdpSet {
    CdpSet::from_cycles(&["(34)", "(12)", "(13)(24)", "(14)(23)"], 1).expect("valid")
}

pub fn sigma4_prime() -> CdpSet {
    CdpSet::from_cycles(&["(234)", "(124)", "(132)", "(143)"], 1).expect("valid")
}

pub fn v4() -> CdpSet {
    CdpSet::from_cycles(&["id", "(12)(34)", "(13)(24)", "(14)(23)"], 1).expect("valid")
}

pub fn regular_s3() -> CdpSet {
    let table = tables::from_permutations(&tables::s3_elements()).expect("closed");
    CdpSet::regular_representation(&table).expect("group table")
}

/// One line of the reproduction table.
#[derive(Debug, Clone, Serialize)]
pub struct GoldenCheck {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

impl GoldenCheck {
    fn new(name: &str, passed: bool, detail: impl Into<String>) -> GoldenCheck {
        GoldenCheck {
            name: name.to_string(),
            passed,
            detail: detail.into(),
        }
    }
}

fn set_eq(name: &str, got: &CdpSet, want: &CdpSet) -> GoldenCheck {
    GoldenCheck::new(
        name,
        got == want,
        format!("{:?}", got.perms().iter().map(|p| p.to_cycles(1)).collect::<Vec<_>>()),
    )
}

fn close(name: &str, got: &CMatrix, want: &CMatrix, tol: f64) -> GoldenCheck {
    let err = linalg::max_abs_diff(got, want);
    GoldenCheck::new(name, err <= tol, format!("max |diff| = {err:.3e}"))
}

/// `D ⊗ id`, `D = diag(1, 1, −1, −1)`: relates the printed Breuer–Hall matrix
/// to the computed one.
pub fn breuer_hall_sign_frame() -> CMatrix {
    let d = CMatrix::from_diagonal(&nalgebra::DVector::from_vec(
        [1.0, 1.0, -1.0, -1.0].iter().map(|&x| c(x, 0.0)).collect(),
    ));
    linalg::kron(&d, &linalg::eye(4))
}

pub fn breuer_hall_n4_choi() -> CMatrix {
    let u = AntisymUnitary::new(Permutation::parse_cycles("(01)(23)", 4, 0).expect("valid")).expect("pairing");
    choi(&BreuerHallMap::new(u), LegOrder::InputFirst).dense
}

/// Every printed value the library can recompute.
pub fn reproduce() -> Result<Vec<GoldenCheck>> {
    let mut out = Vec::new();
    let c4 = CdpSet::cyclic(4)?;

    out.push(GoldenCheck::new(
        "pattern over C(4)",
        label_grid(&c4) == parse_label_grid(PATTERN_C4),
        "16x16 label grid",
    ));
    out.push(GoldenCheck::new(
        "pattern over V(4)",
        label_grid(&v4()) == parse_label_grid(PATTERN_V4),
        "16x16 label grid",
    ));
    out.push(GoldenCheck::new(
        "subspace H_1 over C(4) and V(4)",
        subspace_basis(&c4, 1)? == vec![(0, 1), (1, 2), (2, 3), (3, 0)]
            && subspace_basis(&v4(), 1)? == vec![(0, 1), (1, 0), (2, 3), (3, 2)],
        "",
    ));

    let sigma5 = sigma5();
    out.push(GoldenCheck::new(
        "Sigma5 is CDP, not abelian, not a group",
        !sigma5.is_abelian() && !sigma5.is_group(),
        "",
    ));
    let c4_from = CdpSet::from_cycles(&["id", "(12)(34)", "(1324)", "(1423)"], 1)?;
    out.push(set_eq("conjugated set of Sigma4 is C(4)", &sigma4().conjugated_set()?, &c4_from));
    let v4_order = CdpSet::from_cycles(&["id", "(13)(24)", "(14)(23)", "(12)(34)"], 1)?;
    out.push(set_eq("conjugated set of Sigma4' is V(4)", &sigma4_prime().conjugated_set()?, &v4_order));
    out.push(set_eq("conjugated set of Sigma5 is Sigma5", &sigma5.conjugated_set()?, &sigma5));

    out.push(GoldenCheck::new(
        "two canonical CDP sets for n = 3",
        enumerate_all(3, true)?.count() == 2,
        "",
    ));
    let rs3 = regular_s3();
    let rs3_listed = CdpSet::from_cycles(
        &["id", "(123)(456)", "(132)(465)", "(14)(26)(35)", "(15)(24)(36)", "(16)(25)(34)"],
        1,
    )?;
    out.push(set_eq("regular representation of S(3)", &rs3, &rs3_listed));
    out.push(GoldenCheck::new(
        "xi for R(S(3)) is (23)",
        rs3.xi()?.0 == Permutation::parse_cycles("(23)", 6, 1)?,
        rs3.xi()?.0.to_cycles(1),
    ));
    let xi_c = (2..8).all(|n| {
        CdpSet::cyclic(n)
            .and_then(|s| s.xi())
            .map(|xi| (0..n).all(|k| xi.apply(k) == (n - k) % n))
            .unwrap_or(false)
    });
    out.push(GoldenCheck::new("xi(k) = n - k for C(n)", xi_c, "n = 2..7"));

    let s3 = CdpSet::from_cycles(&["(23)", "(12)", "(13)"], 1)?;
    let (ab, s0) = s3.abelianize()?;
    out.push(GoldenCheck::new(
        "Sigma3 (23) = {id, (123), (132)}",
        ab == CdpSet::from_cycles(&["id", "(123)", "(132)"], 1)? && s0 == Permutation::parse_cycles("(23)", 3, 1)?,
        "",
    ));

    // S(3) channel
    let (ls, ll) = (0.5, 0.25);
    let ch = IcqcChannel::s3(ls, ll);
    let j = choi(&ch, LegOrder::InputFirst).dense;
    out.push(close("S(3) channel Choi matrix", &j, &s3_choi(ls, ll), 1e-12));
    let fam = decompose(&j, &CdpSet::cyclic(2)?, 1e-12)?;
    let a1 = CMatrix::from_row_slice(2, 2, &[0.5 * (1.0 + ls), ll, ll, 0.5 * (1.0 + ls)].map(|x| c(x, 0.0)));
    let a2 = linalg::eye(2).scale(0.5 * (1.0 - ls));
    out.push(GoldenCheck::new(
        "S(3) channel family over S(2)",
        linalg::max_abs_diff(fam.mat(0), &a1) <= 1e-12 && linalg::max_abs_diff(fam.mat(1), &a2) <= 1e-12,
        "",
    ));

    // quaternion channel
    let (l1, l2, l3) = (0.3, 0.2, 0.1);
    let ch = IcqcChannel::quaternion(l1, l2, l3);
    let j = choi(&ch, LegOrder::InputFirst).dense;
    out.push(close("quaternion channel Choi matrix", &j, &quaternion_choi(l1, l2, l3), 1e-12));
    let fam = decompose(&j, &CdpSet::cyclic(2)?, 1e-12)?;
    let a1 = CMatrix::from_row_slice(2, 2, &[1.0 + l2, l1 + l3, l1 + l3, 1.0 + l2].map(|x| c(0.5 * x, 0.0)));
    let a2 = CMatrix::from_row_slice(2, 2, &[1.0 - l2, l3 - l1, l3 - l1, 1.0 - l2].map(|x| c(0.5 * x, 0.0)));
    out.push(GoldenCheck::new(
        "quaternion channel family over S(2)",
        linalg::max_abs_diff(fam.mat(0), &a1) <= 1e-12 && linalg::max_abs_diff(fam.mat(1), &a2) <= 1e-12,
        "",
    ));
    let q = crate::maps::IcqcGroup::Quaternion;
    let m = q.irreps().len();
    let orth = (0..m).all(|a| {
        (0..m).all(|b| {
            let want = if a == b { 8.0 } else { 0.0 };
            (q.character_inner(a, b) - c(want, 0.0)).norm() < 1e-12
        })
    });
    out.push(GoldenCheck::new("quaternion character orthogonality", orth, ""));

    // reduction map
    let r2 = choi(&ReductionMap::new(2)?, LegOrder::OutputFirst).dense;
    let target = linalg::eye(4) - linalg::swap(2);
    out.push(close("reduction Choi at n = 2 equals id - SWAP", &r2, &target, 0.0));
    let r4 = choi(&ReductionMap::new(4)?, LegOrder::OutputFirst).dense;
    let over = |s: &CdpSet| -> Result<CMatrix> {
        let fam = crate::maps::reduction_family(s)?;
        Ok(CdpOperator::build(fam, s.clone())?.dense().clone())
    };
    let (x, y) = (over(&c4)?, over(&v4())?);
    out.push(GoldenCheck::new(
        "reduction Choi identical over C(4) and V(4)",
        x == y && x == r4,
        "",
    ));

    // Breuer–Hall
    let bh = breuer_hall_n4_choi();
    let printed = parse_integer_grid(BREUER_HALL_N4);
    out.push(close("Breuer-Hall n = 4 Choi equals printed matrix", &bh, &printed, 0.0));
    let frame = breuer_hall_sign_frame();
    out.push(close(
        "Breuer-Hall printed matrix equals (D x id) J (D x id)",
        &(&frame * &bh * &frame),
        &printed,
        0.0,
    ));
    let z2 = CdpSet::regular_representation(&tables::elementary_abelian_2(2))?;
    let fam = breuer_hall_family(&z2, 1)?;
    out.push(GoldenCheck::new(
        "Breuer-Hall family over (Z2)^2 builds the Choi matrix",
        CdpOperator::build(fam, z2)?.dense() == &bh,
        "",
    ));
    out.push(GoldenCheck::new(
        "Breuer-Hall n = 4 Choi is CDP over C(4) too",
        decompose(&bh, &c4, 0.0).is_ok(),
        "",
    ));
    Ok(out)
}
