//! Seeded random test data.

use rand::Rng;

use crate::linalg::{c, CMatrix};
use crate::operator::CoefficientFamily;

/// Entries uniform in the unit square of ℂ.
pub fn random_matrix<R: Rng + ?Sized>(n: usize, rng: &mut R) -> CMatrix {
    CMatrix::from_fn(n, n, |_, _| c(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0)))
}

pub fn random_hermitian<R: Rng + ?Sized>(n: usize, rng: &mut R) -> CMatrix {
    let m = random_matrix(n, rng);
    (&m + m.adjoint()).scale(0.5)
}

/// `G G†` for a random square `G`.
pub fn random_psd<R: Rng + ?Sized>(n: usize, rng: &mut R) -> CMatrix {
    let g = random_matrix(n, rng);
    &g * g.adjoint()
}

pub fn random_family<R: Rng + ?Sized>(n: usize, rng: &mut R) -> CoefficientFamily {
    CoefficientFamily::new((0..n).map(|_| random_matrix(n, rng)).collect()).expect("square")
}

pub fn random_hermitian_family<R: Rng + ?Sized>(n: usize, rng: &mut R) -> CoefficientFamily {
    CoefficientFamily::new((0..n).map(|_| random_hermitian(n, rng)).collect()).expect("square")
}

pub fn random_psd_family<R: Rng + ?Sized>(n: usize, rng: &mut R) -> CoefficientFamily {
    CoefficientFamily::new((0..n).map(|_| random_psd(n, rng)).collect()).expect("square")
}

/// Diagonal families with nonnegative entries, scaled to unit trace.
/// These are product-diagonal states and hence separable.
pub fn random_diagonal_state<R: Rng + ?Sized>(n: usize, rng: &mut R) -> CoefficientFamily {
    let mut mats: Vec<CMatrix> = (0..n)
        .map(|_| CMatrix::from_fn(n, n, |i, j| if i == j { c(rng.gen_range(0.0..1.0), 0.0) } else { c(0.0, 0.0) }))
        .collect();
    let total: f64 = mats.iter().map(|m| m.trace().re).sum();
    for m in &mut mats {
        *m = m.unscale(total);
    }
    CoefficientFamily::new(mats).expect("square")
}

/// A random unit vector in ℂⁿ.
pub fn random_unit_vector<R: Rng + ?Sized>(n: usize, rng: &mut R) -> nalgebra::DVector<num_complex::Complex64> {
    let v = nalgebra::DVector::from_fn(n, |_, _| c(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0)));
    let norm = v.norm();
    v.unscale(norm)
}
