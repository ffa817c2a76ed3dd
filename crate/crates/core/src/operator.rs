//! CDP matrices `ρ[A,Σ] = Σ_k Σ_ij a^k_ij e_ij ⊗ e_{σ_k(i)σ_k(j)}`.

use std::sync::OnceLock;

use num_complex::Complex64;
use serde::Serialize;

use crate::cdp_set::CdpSet;
use crate::error::{CdpError, Result};
use crate::linalg::{self, CMatrix};
use crate::perm::Permutation;

pub const DEFAULT_TOL: f64 = 1e-9;

/// The coefficient matrices `A^0, …, A^{n-1}`.
#[derive(Debug, Clone, PartialEq)]
pub struct CoefficientFamily {
    mats: Vec<CMatrix>,
}

impl CoefficientFamily {
    pub fn new(mats: Vec<CMatrix>) -> Result<CoefficientFamily> {
        let n = mats.len();
        if n == 0 {
            return Err(CdpError::InvalidDegree(0));
        }
        for m in &mats {
            if m.nrows() != n || m.ncols() != n {
                return Err(CdpError::DimensionMismatch {
                    expected: n,
                    found: if m.nrows() != n { m.nrows() } else { m.ncols() },
                });
            }
        }
        Ok(CoefficientFamily { mats })
    }

    pub fn zeros(n: usize) -> CoefficientFamily {
        CoefficientFamily {
            mats: vec![linalg::zeros(n); n],
        }
    }

    /// Every `A^k` equal to the identity, i.e. `ρ = id ⊗ id`.
    pub fn identities(n: usize) -> CoefficientFamily {
        CoefficientFamily {
            mats: vec![linalg::eye(n); n],
        }
    }

    /// Only `A^k = a` is nonzero.
    pub fn single(n: usize, k: usize, a: CMatrix) -> Result<CoefficientFamily> {
        if k >= n {
            return Err(CdpError::IndexOutOfRange { index: k, n });
        }
        let mut mats = vec![linalg::zeros(n); n];
        mats[k] = a;
        CoefficientFamily::new(mats)
    }

    pub fn n(&self) -> usize {
        self.mats.len()
    }

    pub fn mats(&self) -> &[CMatrix] {
        &self.mats
    }

    pub fn mat(&self, k: usize) -> &CMatrix {
        &self.mats[k]
    }

    pub fn into_mats(self) -> Vec<CMatrix> {
        self.mats
    }

    pub fn scale(&self, s: f64) -> CoefficientFamily {
        CoefficientFamily {
            mats: self.mats.iter().map(|m| m.scale(s)).collect(),
        }
    }

    /// `Σ_k tr A^k`, the trace of the operator.
    pub fn trace(&self) -> Complex64 {
        self.mats.iter().map(|m| m.trace()).sum()
    }

    /// First non-Hermitian coefficient, if any.
    pub fn first_non_hermitian(&self, tol: f64) -> Option<usize> {
        self.mats.iter().position(|m| !linalg::is_hermitian(m, tol))
    }

    pub fn is_hermitian(&self, tol: f64) -> bool {
        self.first_non_hermitian(tol).is_none()
    }

    pub fn max_abs_diff(&self, other: &CoefficientFamily) -> f64 {
        if self.n() != other.n() {
            return f64::INFINITY;
        }
        self.mats
            .iter()
            .zip(&other.mats)
            .map(|(a, b)| linalg::max_abs_diff(a, b))
            .fold(0.0, f64::max)
    }
}

/// `H_k = span{e_l ⊗ e_{σ_k(l)}}` as index pairs `(l, σ_k(l))`.
pub fn subspace_basis(sigma: &CdpSet, k: usize) -> Result<Vec<(usize, usize)>> {
    let n = sigma.degree();
    if k >= n {
        return Err(CdpError::IndexOutOfRange { index: k, n });
    }
    let s = sigma.perm(k);
    Ok((0..n).map(|l| (l, s.apply(l))).collect())
}

/// For each dense coordinate, the `(k, i, j)` it carries, or `None` for a
/// structural zero.
pub fn support_pattern(sigma: &CdpSet) -> Vec<Vec<Option<(usize, usize, usize)>>> {
    let n = sigma.degree();
    let mut grid = vec![vec![None; n * n]; n * n];
    for (k, s) in sigma.perms().iter().enumerate() {
        for i in 0..n {
            for j in 0..n {
                grid[i * n + s.apply(i)][j * n + s.apply(j)] = Some((k, i, j));
            }
        }
    }
    grid
}

/// Dense `ρ[A^k, σ_k]` for one summand.
pub fn single_block_dense(a: &CMatrix, sigma_k: &Permutation) -> CMatrix {
    let n = sigma_k.degree();
    let mut out = linalg::zeros(n * n);
    for i in 0..n {
        for j in 0..n {
            out[(i * n + sigma_k.apply(i), j * n + sigma_k.apply(j))] = a[(i, j)];
        }
    }
    out
}

/// Hilbert–Schmidt and trace norms.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct Norms {
    pub hs: f64,
    pub tr: f64,
}

/// Eigenpairs of one coefficient matrix, lifted to `ℂⁿ⊗ℂⁿ`.
#[derive(Debug, Clone)]
pub struct BlockEigen {
    pub k: usize,
    pub eigenvalues: Vec<f64>,
    /// Column `q` is `w^k(q) = Σ_j x_j e_j ⊗ e_{σ_k(j)}`.
    pub eigenvectors: CMatrix,
}

#[derive(Debug, Clone)]
pub struct BlockSpectrum {
    pub blocks: Vec<BlockEigen>,
}

impl BlockSpectrum {
    /// All `n²` eigenvalues, ascending.
    pub fn eigenvalues(&self) -> Vec<f64> {
        let mut all: Vec<f64> = self
            .blocks
            .iter()
            .flat_map(|b| b.eigenvalues.iter().copied())
            .collect();
        all.sort_by(f64::total_cmp);
        all
    }

    pub fn min_eigenvalue(&self) -> f64 {
        self.eigenvalues().first().copied().unwrap_or(0.0)
    }
}

/// `ρ[A,Σ]` held in family form; the dense matrix is built on first use.
#[derive(Debug, Clone)]
pub struct CdpOperator {
    family: CoefficientFamily,
    sigma: CdpSet,
    dense: OnceLock<CMatrix>,
}

impl PartialEq for CdpOperator {
    fn eq(&self, other: &Self) -> bool {
        self.family == other.family && self.sigma == other.sigma
    }
}

impl CdpOperator {
    pub fn build(family: CoefficientFamily, sigma: CdpSet) -> Result<CdpOperator> {
        if family.n() != sigma.degree() {
            return Err(CdpError::DimensionMismatch {
                expected: sigma.degree(),
                found: family.n(),
            });
        }
        if !sigma.is_canonical() {
            return Err(CdpError::NotCanonical);
        }
        Ok(CdpOperator {
            family,
            sigma,
            dense: OnceLock::new(),
        })
    }

    pub fn n(&self) -> usize {
        self.sigma.degree()
    }

    pub fn family(&self) -> &CoefficientFamily {
        &self.family
    }

    pub fn sigma(&self) -> &CdpSet {
        &self.sigma
    }

    pub fn into_parts(self) -> (CoefficientFamily, CdpSet) {
        (self.family, self.sigma)
    }

    /// The `n² × n²` matrix, computed once.
    pub fn dense(&self) -> &CMatrix {
        self.dense.get_or_init(|| {
            let n = self.n();
            let mut out = linalg::zeros(n * n);
            let mut touched = vec![false; n * n * n * n];
            for (k, s) in self.sigma.perms().iter().enumerate() {
                let a = self.family.mat(k);
                for i in 0..n {
                    for j in 0..n {
                        let r = i * n + s.apply(i);
                        let c = j * n + s.apply(j);
                        let slot = r * n * n + c;
                        assert!(!touched[slot], "CDP supports overlap at ({r}, {c})");
                        touched[slot] = true;
                        out[(r, c)] = a[(i, j)];
                    }
                }
            }
            out
        })
    }

    /// `ρ[A^k, σ_k]` alone.
    pub fn summand(&self, k: usize) -> Result<CMatrix> {
        let n = self.n();
        if k >= n {
            return Err(CdpError::IndexOutOfRange { index: k, n });
        }
        Ok(single_block_dense(self.family.mat(k), self.sigma.perm(k)))
    }

    /// Block `B_ij = Σ_k a^k_ij e_{σ_k(i)σ_k(j)}` of the dense matrix.
    pub fn block(&self, i: usize, j: usize) -> Result<CMatrix> {
        let n = self.n();
        for idx in [i, j] {
            if idx >= n {
                return Err(CdpError::IndexOutOfRange { index: idx, n });
            }
        }
        let mut b = linalg::zeros(n);
        for (k, s) in self.sigma.perms().iter().enumerate() {
            b[(s.apply(i), s.apply(j))] += self.family.mat(k)[(i, j)];
        }
        Ok(b)
    }

    /// The same block as `m(E_i)ᵀ · diag_k(a^k_ij) · m(E_j)`.
    pub fn block_via_conjugated(&self, i: usize, j: usize) -> Result<CMatrix> {
        let n = self.n();
        for idx in [i, j] {
            if idx >= n {
                return Err(CdpError::IndexOutOfRange { index: idx, n });
            }
        }
        let e = self.sigma.conjugated_matrices()?;
        let diag = CMatrix::from_fn(n, n, |r, c| {
            if r == c {
                self.family.mat(r)[(i, j)]
            } else {
                Complex64::new(0.0, 0.0)
            }
        });
        Ok(e[i].to_complex().transpose() * diag * e[j].to_complex())
    }

    /// Eigenpairs block by block. Needs a Hermitian family.
    pub fn spectrum(&self) -> Result<BlockSpectrum> {
        if let Some(k) = self.family.first_non_hermitian(DEFAULT_TOL) {
            return Err(CdpError::NotHermitian(k));
        }
        let n = self.n();
        let blocks = self
            .sigma
            .perms()
            .iter()
            .enumerate()
            .map(|(k, s)| {
                let (vals, vecs) = linalg::eigh(self.family.mat(k));
                let mut lifted = CMatrix::zeros(n * n, n);
                for q in 0..n {
                    for j in 0..n {
                        lifted[(j * n + s.apply(j), q)] = vecs[(j, q)];
                    }
                }
                BlockEigen {
                    k,
                    eigenvalues: vals,
                    eigenvectors: lifted,
                }
            })
            .collect();
        Ok(BlockSpectrum { blocks })
    }

    /// Norms from the family: the trace norm adds over blocks, the
    /// Hilbert–Schmidt norm adds in quadrature.
    pub fn norms(&self) -> Norms {
        let tr = self.family.mats().iter().map(linalg::trace_norm).sum();
        let hs2: f64 = self
            .family
            .mats()
            .iter()
            .map(|m| linalg::hs_norm(m).powi(2))
            .sum();
        Norms { hs: hs2.sqrt(), tr }
    }

    /// Norms of the dense matrix, for cross-checks.
    pub fn dense_norms(&self) -> Norms {
        let d = self.dense();
        Norms {
            hs: linalg::hs_norm(d),
            tr: linalg::trace_norm(d),
        }
    }

    pub fn is_hermitian(&self, tol: f64) -> bool {
        self.family.is_hermitian(tol)
    }

    /// PSD test on the family: Hermitian and every block eigenvalue ≥ −tol.
    pub fn is_psd(&self, tol: f64) -> bool {
        self.is_hermitian(tol)
            && self
                .family
                .mats()
                .iter()
                .all(|m| linalg::eigvalsh(m).first().is_none_or(|&v| v >= -tol))
    }

    /// `ρ[A′, δΣη]` with `A′^k = m(η⁻¹) A^k m(η)`, listed canonically.
    ///
    /// The result equals `L ρ Lᵀ` for `L = m(η⁻¹) ⊗ m(δ)`, a local unitary.
    pub fn conjugate_transform(&self, delta: &Permutation, eta: &Permutation) -> Result<CdpOperator> {
        let n = self.n();
        for p in [delta, eta] {
            if p.degree() != n {
                return Err(CdpError::DimensionMismatch {
                    expected: n,
                    found: p.degree(),
                });
            }
        }
        let mut pairs = Vec::with_capacity(n);
        for (k, s) in self.sigma.perms().iter().enumerate() {
            let t = delta.compose(s)?.compose(eta)?;
            let a = self.family.mat(k);
            let moved = CMatrix::from_fn(n, n, |i, j| a[(eta.apply(i), eta.apply(j))]);
            pairs.push((t, moved));
        }
        pairs.sort_by_key(|(t, _)| t.apply(0));
        let (perms, mats): (Vec<_>, Vec<_>) = pairs.into_iter().unzip();
        CdpOperator::build(CoefficientFamily::new(mats)?, CdpSet::verify(perms)?)
    }

    /// Multiplies every coefficient by `1 / tr ρ`.
    pub fn normalized(&self) -> Result<CdpOperator> {
        let t = self.family.trace();
        if t.norm() < 1e-300 {
            return Err(CdpError::ZeroTrace);
        }
        let mats = self.family.mats().iter().map(|m| m.map(|x| x / t)).collect();
        CdpOperator::build(CoefficientFamily::new(mats)?, self.sigma.clone())
    }

    /// Text rendering in the block layout, `.` for structural zeros.
    pub fn render_grid(&self, precision: usize) -> String {
        let pattern = support_pattern(&self.sigma);
        let cells: Vec<Vec<String>> = pattern
            .iter()
            .map(|row| {
                row.iter()
                    .map(|slot| match slot {
                        None => ".".to_string(),
                        Some((k, i, j)) => format_complex(self.family.mat(*k)[(*i, *j)], precision),
                    })
                    .collect()
            })
            .collect();
        let width = cells.iter().flatten().map(String::len).max().unwrap_or(1);
        let n = self.n();
        let mut out = String::new();
        for (r, row) in cells.iter().enumerate() {
            if r > 0 && r % n == 0 {
                out.push('\n');
            }
            let mut line = String::new();
            for (c, cell) in row.iter().enumerate() {
                if c > 0 {
                    line.push(' ');
                    if c % n == 0 {
                        line.push_str("| ");
                    }
                }
                line.push_str(&format!("{cell:>width$}"));
            }
            out.push_str(line.trim_end());
            out.push('\n');
        }
        out
    }
}

/// Reads `A` back from a dense matrix with the CDP pattern of `sigma`.
pub fn decompose(dense: &CMatrix, sigma: &CdpSet, tol: f64) -> Result<CoefficientFamily> {
    let n = sigma.degree();
    if !sigma.is_canonical() {
        return Err(CdpError::NotCanonical);
    }
    if dense.nrows() != n * n || dense.ncols() != n * n {
        return Err(CdpError::DimensionMismatch {
            expected: n * n,
            found: dense.nrows(),
        });
    }
    let pattern = support_pattern(sigma);
    let mut mats = vec![linalg::zeros(n); n];
    for (r, row) in pattern.iter().enumerate() {
        for (c, slot) in row.iter().enumerate() {
            let v = dense[(r, c)];
            match slot {
                Some((k, i, j)) => mats[*k][(*i, *j)] = v,
                None if v.norm() > tol => return Err(CdpError::NotCdpStructured { row: r, col: c }),
                None => {}
            }
        }
    }
    CoefficientFamily::new(mats)
}

pub fn format_complex(z: Complex64, precision: usize) -> String {
    let clean = |x: f64| if x.abs() < 0.5 * 10f64.powi(-(precision as i32)) { 0.0 } else { x };
    let (re, im) = (clean(z.re), clean(z.im));
    if im == 0.0 {
        format!("{re:.precision$}")
    } else if re == 0.0 {
        format!("{im:.precision$}i")
    } else {
        format!("{re:.precision$}{im:+.precision$}i")
    }
}
