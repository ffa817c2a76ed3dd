//! Small dense complex helpers on top of nalgebra.

use nalgebra::DMatrix;
use num_complex::Complex64;

use crate::error::{CdpError, Result};

pub type CMatrix = DMatrix<Complex64>;

pub fn c(re: f64, im: f64) -> Complex64 {
    Complex64::new(re, im)
}

pub fn zeros(n: usize) -> CMatrix {
    CMatrix::zeros(n, n)
}

pub fn eye(n: usize) -> CMatrix {
    CMatrix::identity(n, n)
}

/// `e_{ij}` of size `n`.
pub fn unit(n: usize, i: usize, j: usize) -> CMatrix {
    let mut m = zeros(n);
    m[(i, j)] = c(1.0, 0.0);
    m
}

pub fn kron(a: &CMatrix, b: &CMatrix) -> CMatrix {
    a.kronecker(b)
}

pub fn max_abs_diff(a: &CMatrix, b: &CMatrix) -> f64 {
    assert_eq!(a.shape(), b.shape(), "shape mismatch");
    a.iter()
        .zip(b.iter())
        .map(|(x, y)| (x - y).norm())
        .fold(0.0, f64::max)
}

pub fn hermitian_defect(a: &CMatrix) -> f64 {
    max_abs_diff(a, &a.adjoint())
}

pub fn is_hermitian(a: &CMatrix, tol: f64) -> bool {
    a.is_square() && hermitian_defect(a) <= tol
}

/// Eigenvalues of a Hermitian matrix, ascending. Only the Hermitian part is used.
pub fn eigvalsh(a: &CMatrix) -> Vec<f64> {
    if a.nrows() == 0 {
        return Vec::new();
    }
    let h = (a + a.adjoint()).scale(0.5);
    let mut vals: Vec<f64> = h.symmetric_eigenvalues().iter().copied().collect();
    vals.sort_by(f64::total_cmp);
    vals
}

/// Eigenpairs of a Hermitian matrix, ascending by eigenvalue.
pub fn eigh(a: &CMatrix) -> (Vec<f64>, CMatrix) {
    let h = (a + a.adjoint()).scale(0.5);
    let eig = h.symmetric_eigen();
    let mut order: Vec<usize> = (0..eig.eigenvalues.len()).collect();
    order.sort_by(|&x, &y| eig.eigenvalues[x].total_cmp(&eig.eigenvalues[y]));
    let vals = order.iter().map(|&q| eig.eigenvalues[q]).collect();
    let vecs = CMatrix::from_fn(a.nrows(), order.len(), |r, q| eig.eigenvectors[(r, order[q])]);
    (vals, vecs)
}

pub fn trace_norm(a: &CMatrix) -> f64 {
    if a.nrows() == 0 {
        return 0.0;
    }
    a.singular_values().iter().sum()
}

pub fn hs_norm(a: &CMatrix) -> f64 {
    a.norm()
}

/// `√dim` for square bipartite operators.
pub fn local_dim(a: &CMatrix) -> Result<usize> {
    let d = a.nrows();
    let n = (d as f64).sqrt().round() as usize;
    if !a.is_square() || n * n != d {
        return Err(CdpError::NonSquareStructure(d));
    }
    Ok(n)
}

/// Transpose on the second tensor factor: `((i,p),(j,q)) ↦ ((i,q),(j,p))`.
pub fn partial_transpose(a: &CMatrix) -> Result<CMatrix> {
    let n = local_dim(a)?;
    Ok(CMatrix::from_fn(n * n, n * n, |r, col| {
        let (i, p) = (r / n, r % n);
        let (j, q) = (col / n, col % n);
        a[(i * n + q, j * n + p)]
    }))
}

/// Realignment `R(ρ)_{(i,j),(p,q)} = ρ_{(j,q),(i,p)}`.
///
/// This is the usual rearrangement applied to `ρᵀ`; the trace norm is the
/// same as for `ρ_{(i,p),(j,q)}`, but this is the layout under which a
/// realigned CDP operator keeps its CDP set.
pub fn realign(a: &CMatrix) -> Result<CMatrix> {
    let n = local_dim(a)?;
    Ok(CMatrix::from_fn(n * n, n * n, |r, col| {
        let (i, j) = (r / n, r % n);
        let (p, q) = (col / n, col % n);
        a[(j * n + q, i * n + p)]
    }))
}

/// The textbook rearrangement `R(ρ)_{(i,j),(p,q)} = ρ_{(i,p),(j,q)}`.
pub fn realign_standard(a: &CMatrix) -> Result<CMatrix> {
    let n = local_dim(a)?;
    Ok(CMatrix::from_fn(n * n, n * n, |r, col| {
        let (i, j) = (r / n, r % n);
        let (p, q) = (col / n, col % n);
        a[(i * n + p, j * n + q)]
    }))
}

/// Trace over the second factor.
pub fn partial_trace_second(a: &CMatrix) -> Result<CMatrix> {
    let n = local_dim(a)?;
    Ok(CMatrix::from_fn(n, n, |i, j| {
        (0..n).map(|p| a[(i * n + p, j * n + p)]).sum()
    }))
}

/// Trace over the first factor.
pub fn partial_trace_first(a: &CMatrix) -> Result<CMatrix> {
    let n = local_dim(a)?;
    Ok(CMatrix::from_fn(n, n, |p, q| {
        (0..n).map(|i| a[(i * n + p, i * n + q)]).sum()
    }))
}

/// The swap operator `F(x⊗y) = y⊗x` on `ℂⁿ⊗ℂⁿ`.
pub fn swap(n: usize) -> CMatrix {
    let mut f = zeros(n * n);
    for i in 0..n {
        for j in 0..n {
            f[(i * n + j, j * n + i)] = c(1.0, 0.0);
        }
    }
    f
}

/// Compares two real multisets after sorting.
pub fn multiset_distance(a: &[f64], b: &[f64]) -> f64 {
    if a.len() != b.len() {
        return f64::INFINITY;
    }
    let mut x = a.to_vec();
    let mut y = b.to_vec();
    x.sort_by(f64::total_cmp);
    y.sort_by(f64::total_cmp);
    x.iter()
        .zip(&y)
        .map(|(p, q)| (p - q).abs())
        .fold(0.0, f64::max)
}
