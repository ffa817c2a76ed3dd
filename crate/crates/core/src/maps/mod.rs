//! Linear maps on `M(n, ℂ)` whose Choi matrices are CDP operators.

mod breuer_hall;
mod icqc;
mod reduction;

pub use breuer_hall::{breuer_hall_family, AntisymUnitary, BreuerHallMap};
pub use icqc::{IcqcChannel, IcqcGroup, Irrep};
pub use reduction::{reduction_family, ReductionMap};

use rand::Rng;
use serde::Serialize;

use crate::linalg::{self, CMatrix};
use crate::random::random_matrix;

/// A linear map on square matrices of a fixed size.
pub trait LinearMap {
    fn dim(&self) -> usize;
    fn name(&self) -> String;
    fn apply(&self, x: &CMatrix) -> CMatrix;
}

/// Which tensor leg carries the matrix unit `e_ij`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum LegOrder {
    /// `Σ e_ij ⊗ Φ(e_ij)`
    InputFirst,
    /// `Σ Φ(e_ij) ⊗ e_ij`
    OutputFirst,
}

#[derive(Debug, Clone, PartialEq)]
pub struct ChoiOperator {
    pub dense: CMatrix,
    pub legs: LegOrder,
}

pub fn choi<M: LinearMap + ?Sized>(map: &M, legs: LegOrder) -> ChoiOperator {
    let n = map.dim();
    let mut dense = linalg::zeros(n * n);
    for i in 0..n {
        for j in 0..n {
            let e = linalg::unit(n, i, j);
            let term = match legs {
                LegOrder::InputFirst => linalg::kron(&e, &map.apply(&e)),
                LegOrder::OutputFirst => linalg::kron(&map.apply(&e), &e),
            };
            dense += term;
        }
    }
    ChoiOperator { dense, legs }
}

/// Largest deviation from linearity over `trials` random pairs and scalars.
pub fn linearity_defect<M: LinearMap + ?Sized, R: Rng + ?Sized>(map: &M, trials: usize, rng: &mut R) -> f64 {
    let n = map.dim();
    let mut worst: f64 = 0.0;
    for _ in 0..trials {
        let x = random_matrix(n, rng);
        let y = random_matrix(n, rng);
        let a = linalg::c(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0));
        let b = linalg::c(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0));
        let lhs = map.apply(&(x.map(|z| z * a) + y.map(|z| z * b)));
        let rhs = map.apply(&x).map(|z| z * a) + map.apply(&y).map(|z| z * b);
        worst = worst.max(linalg::max_abs_diff(&lhs, &rhs));
    }
    worst
}
