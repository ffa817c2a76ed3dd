//! Irreducibly covariant channels for `S(3)` and the quaternion group.
//!
//! Both groups act on `ℂ²` through a two-dimensional irrep `U`. The map
//! `X ↦ U X U†` decomposes into projectors `Π^α`, one per irrep `α` in
//! `U ⊗ Ū`, and a covariant channel is `Φ = Σ_α l_α Π^α` with `l_id = 1`.
//! Superoperators act on row-major `vec(X)`, where `Ad_U = U ⊗ Ū`.

use num_complex::Complex64;

use crate::error::{CdpError, Result};
use crate::linalg::{self, c, CMatrix};

use super::LinearMap;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum IcqcGroup {
    S3,
    Quaternion,
}

impl std::str::FromStr for IcqcGroup {
    type Err = CdpError;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "s3" => Ok(IcqcGroup::S3),
            "quaternion" | "q" | "q8" => Ok(IcqcGroup::Quaternion),
            other => Err(CdpError::Parse(format!("unknown group {other}"))),
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct Irrep {
    pub name: &'static str,
    pub dim: usize,
    /// `χ(g)` in the group's element order.
    pub characters: Vec<Complex64>,
    /// Whether the irrep occurs in `U ⊗ Ū`.
    pub in_adjoint: bool,
}

impl IcqcGroup {
    /// Element labels, in the order used everywhere else.
    pub fn labels(&self) -> Vec<&'static str> {
        match self {
            IcqcGroup::S3 => vec!["e", "r", "r2", "s", "rs", "r2s"],
            IcqcGroup::Quaternion => vec!["Qe", "-Qe", "Q1", "Q2", "Q3", "-Q1", "-Q2", "-Q3"],
        }
    }

    /// The two-dimensional unitary representation.
    pub fn elements(&self) -> Vec<CMatrix> {
        let m = |a: [Complex64; 4]| CMatrix::from_row_slice(2, 2, &a);
        let (o, l) = (c(0.0, 0.0), c(1.0, 0.0));
        match self {
            IcqcGroup::S3 => {
                // rotations diagonal, reflections off-diagonal
                let w = Complex64::from_polar(1.0, 2.0 * std::f64::consts::PI / 3.0);
                let r = m([w, o, o, w.conj()]);
                let s = m([o, l, l, o]);
                let e = linalg::eye(2);
                let r2 = &r * &r;
                vec![e, r.clone(), r2.clone(), s.clone(), &r * &s, &r2 * &s]
            }
            IcqcGroup::Quaternion => {
                let i = c(0.0, 1.0);
                let qe = linalg::eye(2);
                let q1 = m([i, o, o, -i]);
                let q2 = m([o, l, -l, o]);
                let q3 = m([o, i, i, o]);
                vec![qe.clone(), -qe, q1.clone(), q2.clone(), q3.clone(), -q1, -q2, -q3]
            }
        }
    }

    pub fn irreps(&self) -> Vec<Irrep> {
        let row = |v: &[f64]| v.iter().map(|&x| c(x, 0.0)).collect::<Vec<_>>();
        match self {
            IcqcGroup::S3 => vec![
                Irrep { name: "id", dim: 1, characters: row(&[1., 1., 1., 1., 1., 1.]), in_adjoint: true },
                Irrep { name: "sgn", dim: 1, characters: row(&[1., 1., 1., -1., -1., -1.]), in_adjoint: true },
                Irrep { name: "lambda", dim: 2, characters: row(&[2., -1., -1., 0., 0., 0.]), in_adjoint: true },
            ],
            IcqcGroup::Quaternion => vec![
                Irrep { name: "id", dim: 1, characters: row(&[1., 1., 1., 1., 1., 1., 1., 1.]), in_adjoint: true },
                Irrep { name: "t1", dim: 1, characters: row(&[1., 1., -1., 1., -1., -1., 1., -1.]), in_adjoint: true },
                Irrep { name: "t2", dim: 1, characters: row(&[1., 1., 1., -1., -1., 1., -1., -1.]), in_adjoint: true },
                Irrep { name: "t3", dim: 1, characters: row(&[1., 1., -1., -1., 1., -1., -1., 1.]), in_adjoint: true },
                Irrep { name: "t4", dim: 2, characters: row(&[2., -2., 0., 0., 0., 0., 0., 0.]), in_adjoint: false },
            ],
        }
    }

    pub fn order(&self) -> usize {
        self.labels().len()
    }

    /// Names of the weights a channel takes, in order.
    pub fn weight_names(&self) -> Vec<&'static str> {
        self.irreps()
            .into_iter()
            .filter(|r| r.in_adjoint && r.name != "id")
            .map(|r| r.name)
            .collect()
    }

    /// `Ad_{U(g)}` as a 4×4 superoperator.
    pub fn adjoint_action(&self) -> Vec<CMatrix> {
        self.elements()
            .iter()
            .map(|u| linalg::kron(u, &u.map(|z| z.conj())))
            .collect()
    }

    /// `Π^α = (d_α/|G|) Σ_g χ^α(g⁻¹) Ad_{U(g)}`.
    pub fn projector(&self, name: &str) -> Result<CMatrix> {
        let irrep = self
            .irreps()
            .into_iter()
            .find(|r| r.name == name)
            .ok_or_else(|| CdpError::Parse(format!("no irrep named {name}")))?;
        let scale = irrep.dim as f64 / self.order() as f64;
        let mut out = linalg::zeros(4);
        for (chi, ad) in irrep.characters.iter().zip(self.adjoint_action()) {
            // unitary characters: χ(g⁻¹) = conj χ(g)
            out += ad.map(|z| z * chi.conj() * scale);
        }
        Ok(out)
    }

    /// `Σ_g χ^α(g) conj χ^β(g)`.
    pub fn character_inner(&self, a: usize, b: usize) -> Complex64 {
        let irreps = self.irreps();
        irreps[a]
            .characters
            .iter()
            .zip(&irreps[b].characters)
            .map(|(x, y)| x * y.conj())
            .sum()
    }
}

/// `Φ = Π^id + Σ_α l_α Π^α`.
#[derive(Debug, Clone, PartialEq)]
pub struct IcqcChannel {
    group: IcqcGroup,
    weights: Vec<f64>,
}

impl IcqcChannel {
    /// Weights follow [`IcqcGroup::weight_names`].
    pub fn new(group: IcqcGroup, weights: Vec<f64>) -> Result<IcqcChannel> {
        let expected = group.weight_names().len();
        if weights.len() != expected {
            return Err(CdpError::DimensionMismatch {
                expected,
                found: weights.len(),
            });
        }
        Ok(IcqcChannel { group, weights })
    }

    pub fn s3(l_sgn: f64, l_lambda: f64) -> IcqcChannel {
        IcqcChannel {
            group: IcqcGroup::S3,
            weights: vec![l_sgn, l_lambda],
        }
    }

    pub fn quaternion(l_t1: f64, l_t2: f64, l_t3: f64) -> IcqcChannel {
        IcqcChannel {
            group: IcqcGroup::Quaternion,
            weights: vec![l_t1, l_t2, l_t3],
        }
    }

    pub fn group(&self) -> IcqcGroup {
        self.group
    }

    pub fn weights(&self) -> &[f64] {
        &self.weights
    }

    pub fn superoperator(&self) -> CMatrix {
        let mut out = self.group.projector("id").expect("id exists");
        for (name, l) in self.group.weight_names().iter().zip(&self.weights) {
            out += self.group.projector(name).expect("listed irrep").scale(*l);
        }
        out
    }

    /// Worst violation of `Ad_U Φ = Φ Ad_U` over the group.
    pub fn covariance_defect(&self, x: &CMatrix) -> f64 {
        self.group
            .elements()
            .iter()
            .map(|u| {
                let lhs = u * self.apply(x) * u.adjoint();
                let rhs = self.apply(&(u * x * u.adjoint()));
                linalg::max_abs_diff(&lhs, &rhs)
            })
            .fold(0.0, f64::max)
    }
}

impl LinearMap for IcqcChannel {
    fn dim(&self) -> usize {
        2
    }

    fn name(&self) -> String {
        match self.group {
            IcqcGroup::S3 => "icqc-s3".into(),
            IcqcGroup::Quaternion => "icqc-quaternion".into(),
        }
    }

    fn apply(&self, x: &CMatrix) -> CMatrix {
        let v = nalgebra::DVector::from_iterator(4, (0..4).map(|t| x[(t / 2, t % 2)]));
        let out = self.superoperator() * v;
        CMatrix::from_fn(2, 2, |i, j| out[i * 2 + j])
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::random::random_matrix;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn quaternion_relations() {
        let q = IcqcGroup::Quaternion.elements();
        let minus_e = -linalg::eye(2);
        for k in [2, 3, 4] {
            assert!(linalg::max_abs_diff(&(&q[k] * &q[k]), &minus_e) < 1e-15);
        }
        assert!(linalg::max_abs_diff(&(&q[2] * &q[3] * &q[4]), &minus_e) < 1e-15);
    }

    #[test]
    fn character_orthogonality() {
        for g in [IcqcGroup::S3, IcqcGroup::Quaternion] {
            let m = g.irreps().len();
            for a in 0..m {
                for b in 0..m {
                    let expected = if a == b { g.order() as f64 } else { 0.0 };
                    assert!((g.character_inner(a, b) - c(expected, 0.0)).norm() < 1e-12);
                }
            }
        }
    }

    #[test]
    fn characters_match_representation() {
        // the 2-dim irrep's character is the trace of U(g)
        for (g, name) in [(IcqcGroup::S3, "lambda"), (IcqcGroup::Quaternion, "t4")] {
            let irrep = g.irreps().into_iter().find(|r| r.name == name).unwrap();
            for (u, chi) in g.elements().iter().zip(&irrep.characters) {
                assert!((u.trace() - chi).norm() < 1e-12);
            }
        }
    }

    #[test]
    fn projector_algebra() {
        for g in [IcqcGroup::S3, IcqcGroup::Quaternion] {
            let names: Vec<&str> = g.irreps().iter().filter(|r| r.in_adjoint).map(|r| r.name).collect();
            let mut total = linalg::zeros(4);
            for a in &names {
                let pa = g.projector(a).unwrap();
                total += &pa;
                for b in &names {
                    let pb = g.projector(b).unwrap();
                    let expected = if a == b { pa.clone() } else { linalg::zeros(4) };
                    assert!(linalg::max_abs_diff(&(&pa * &pb), &expected) < 1e-12);
                }
            }
            assert!(linalg::max_abs_diff(&total, &linalg::eye(4)) < 1e-12);
        }
        assert!(linalg::max_abs_diff(&IcqcGroup::Quaternion.projector("t4").unwrap(), &linalg::zeros(4)) < 1e-12);
    }

    #[test]
    fn unit_weights_give_identity() {
        let ch = IcqcChannel::quaternion(1.0, 1.0, 1.0);
        assert!(linalg::max_abs_diff(&ch.superoperator(), &linalg::eye(4)) < 1e-12);
        let ch = IcqcChannel::s3(1.0, 1.0);
        assert!(linalg::max_abs_diff(&ch.superoperator(), &linalg::eye(4)) < 1e-12);
    }

    #[test]
    fn covariance() {
        let mut rng = ChaCha8Rng::seed_from_u64(8);
        for ch in [IcqcChannel::s3(0.5, 0.25), IcqcChannel::quaternion(0.3, 0.2, 0.1)] {
            for _ in 0..20 {
                assert!(ch.covariance_defect(&random_matrix(2, &mut rng)) < 1e-12);
            }
        }
    }

    #[test]
    fn weight_count_checked() {
        assert!(IcqcChannel::new(IcqcGroup::S3, vec![0.1]).is_err());
        assert!("s3".parse::<IcqcGroup>().is_ok());
        assert!("a5".parse::<IcqcGroup>().is_err());
    }
}
