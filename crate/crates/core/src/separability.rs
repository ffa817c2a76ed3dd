//! Partial transpose, realignment and majorisation tests for CDP operators.
//!
//! All three are necessary conditions for separability. A failing test
//! certifies entanglement; a passing one certifies nothing.

use num_complex::Complex64;
use serde::Serialize;

use crate::cdp_set::CdpSet;
use crate::error::{CdpError, Result};
use crate::io::FamilyJson;
use crate::linalg::{self, CMatrix};
use crate::majorization::majorises;
use crate::operator::{CdpOperator, CoefficientFamily};

/// A `±|a|` pair from an off-diagonal coefficient `a = a^k_ij`, `i < j`.
#[derive(Debug, Clone, Copy)]
pub struct PtPair {
    pub i: usize,
    pub j: usize,
    pub a: Complex64,
}

/// Closed-form spectrum of `(id⊗T) ρ[A^k, σ_k]`.
#[derive(Debug, Clone)]
pub struct PtBlock {
    pub k: usize,
    pub diagonal: Vec<f64>,
    pub pairs: Vec<PtPair>,
}

#[derive(Debug, Clone)]
pub struct PtSpectrum {
    pub blocks: Vec<PtBlock>,
    sigma: CdpSet,
}

impl PtBlock {
    pub fn eigenvalues(&self) -> Vec<f64> {
        let mut out = self.diagonal.clone();
        for p in &self.pairs {
            out.push(p.a.norm());
            out.push(-p.a.norm());
        }
        out.sort_by(f64::total_cmp);
        out
    }

    pub fn min_eigenvalue(&self) -> f64 {
        self.eigenvalues().first().copied().unwrap_or(0.0)
    }
}

impl PtSpectrum {
    pub fn eigenvalues(&self) -> Vec<f64> {
        let mut all: Vec<f64> = self.blocks.iter().flat_map(PtBlock::eigenvalues).collect();
        all.sort_by(f64::total_cmp);
        all
    }

    /// Eigenvectors of block `k`, one column per eigenvalue, in the order
    /// diagonal entries first, then `+|a|`, `−|a|` for each pair.
    pub fn eigenvectors(&self, k: usize) -> (Vec<f64>, CMatrix) {
        let block = &self.blocks[k];
        let s = self.sigma.perm(k);
        let n = s.degree();
        let mut vals = Vec::with_capacity(n * n);
        let mut vecs = CMatrix::zeros(n * n, n);
        for (i, &d) in block.diagonal.iter().enumerate() {
            vals.push(d);
            vecs[(i * n + s.apply(i), i)] = Complex64::new(1.0, 0.0);
        }
        let mut cols: Vec<nalgebra::DVector<Complex64>> = Vec::new();
        for p in &block.pairs {
            let m = p.a.norm();
            // a at (i, σ(j)), ±|a| at (j, σ(i)); a zero coefficient leaves
            // the 2-dim eigenspace free, pick the symmetric basis
            let (x, y) = if m == 0.0 {
                (Complex64::new(1.0, 0.0), 1.0)
            } else {
                (p.a, m)
            };
            for sign in [1.0, -1.0] {
                let mut v = nalgebra::DVector::zeros(n * n);
                v[p.i * n + s.apply(p.j)] = x;
                v[p.j * n + s.apply(p.i)] = Complex64::new(sign * y, 0.0);
                let norm = v.norm();
                cols.push(v.unscale(norm));
                vals.push(sign * m);
            }
        }
        let mut all = CMatrix::zeros(n * n, vals.len());
        all.view_mut((0, 0), (n * n, n)).copy_from(&vecs);
        for (c, v) in cols.iter().enumerate() {
            all.set_column(n + c, v);
        }
        (vals, all)
    }
}

/// Closed-form partial-transpose spectrum, block by block.
pub fn pt_spectrum(op: &CdpOperator) -> Result<PtSpectrum> {
    if op.family().first_non_hermitian(crate::DEFAULT_TOL).is_some() {
        return Err(CdpError::Unsupported(
            "closed-form partial transpose spectrum needs Hermitian coefficients".into(),
        ));
    }
    let n = op.n();
    let blocks = (0..n)
        .map(|k| {
            let a = op.family().mat(k);
            let diagonal = (0..n).map(|i| a[(i, i)].re).collect();
            let pairs = (0..n)
                .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
                .map(|(i, j)| PtPair { i, j, a: a[(i, j)] })
                .collect();
            PtBlock { k, diagonal, pairs }
        })
        .collect();
    Ok(PtSpectrum {
        blocks,
        sigma: op.sigma().clone(),
    })
}

/// `ρ^{T₂} = ρ[Ã, Σξ]` for abelian `Σ`, with `ã^k_ij = a^{σ_i⁻¹σ_j⁻¹(k)}_ij`.
pub fn pt_as_cdp(op: &CdpOperator) -> Result<CdpOperator> {
    let sigma = op.sigma();
    if !sigma.is_abelian() {
        return Err(CdpError::TheoremInapplicable);
    }
    let n = op.n();
    let xi = sigma.xi()?;
    let perms = sigma
        .perms()
        .iter()
        .map(|s| s.compose(&xi.0))
        .collect::<Result<Vec<_>>>()?;
    let shifted = CdpSet::verify(perms)?;
    let inv: Vec<_> = sigma.perms().iter().map(|s| s.inverse()).collect();
    let mats = (0..n)
        .map(|k| {
            CMatrix::from_fn(n, n, |i, j| {
                let src = inv[i].apply(inv[j].apply(k));
                op.family().mat(src)[(i, j)]
            })
        })
        .collect();
    CdpOperator::build(CoefficientFamily::new(mats)?, shifted)
}

/// Which route a verdict was computed by.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Method {
    ClosedForm,
    Dense,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct PptVerdict {
    pub ppt: bool,
    pub min_eigenvalue: f64,
    pub method: Method,
}

/// PPT test: through the transposed family when `Σ` is abelian, densely
/// otherwise.
pub fn ppt(op: &CdpOperator, tol: f64) -> Result<PptVerdict> {
    if let Some(k) = op.family().first_non_hermitian(tol) {
        return Err(CdpError::NotHermitian(k));
    }
    let (min, method) = if op.sigma().is_abelian() {
        let pt = pt_as_cdp(op)?;
        (pt.spectrum()?.min_eigenvalue(), Method::ClosedForm)
    } else {
        let dense = linalg::partial_transpose(op.dense())?;
        (linalg::eigvalsh(&dense)[0], Method::Dense)
    };
    Ok(PptVerdict {
        ppt: min >= -tol,
        min_eigenvalue: min,
        method,
    })
}

pub fn is_ppt(op: &CdpOperator, tol: f64) -> Result<bool> {
    Ok(ppt(op, tol)?.ppt)
}

/// Dense PPT test regardless of structure.
pub fn is_ppt_dense(op: &CdpOperator, tol: f64) -> Result<bool> {
    let dense = linalg::partial_transpose(op.dense())?;
    Ok(linalg::eigvalsh(&dense)[0] >= -tol)
}

#[derive(Debug, Clone)]
pub struct Realignment {
    pub family: Option<CoefficientFamily>,
    pub sum: f64,
    pub pass: bool,
    pub normalized: bool,
    pub method: Method,
}

/// Realigned family over the same `Σ`, `ã^k_ij = a^{σ_i⁻¹(j)}_{σ_k(i) i}`.
/// Needs an abelian `Σ`.
pub fn realigned_family(op: &CdpOperator) -> Result<CoefficientFamily> {
    let sigma = op.sigma();
    if !sigma.is_abelian() {
        return Err(CdpError::TheoremInapplicable);
    }
    let n = op.n();
    let mats = (0..n)
        .map(|k| {
            CMatrix::from_fn(n, n, |i, j| {
                let src = sigma.perm(i).inverse().apply(j);
                op.family().mat(src)[(sigma.perm(k).apply(i), i)]
            })
        })
        .collect();
    CoefficientFamily::new(mats)
}

/// Realignment criterion `Σ_k ‖Ã^k‖_tr ≤ 1` on the unit-trace version of
/// `op`. Non-abelian sets fall back to the dense realigned matrix.
pub fn realignment(op: &CdpOperator, tol: f64) -> Result<Realignment> {
    let (state, normalized) = unit_trace(op)?;
    let (family, sum, method) = if state.sigma().is_abelian() {
        let fam = realigned_family(&state)?;
        let sum = fam.mats().iter().map(linalg::trace_norm).sum();
        (Some(fam), sum, Method::ClosedForm)
    } else {
        let r = linalg::realign(state.dense())?;
        (None, linalg::trace_norm(&r), Method::Dense)
    };
    Ok(Realignment {
        family,
        sum,
        pass: sum <= 1.0 + tol,
        normalized,
        method,
    })
}

/// `(ρ₁, ρ₂)`: both diagonal. `ρ₁ = Σ_i e_ii Σ_k a^k_ii`, and `ρ₂` collects
/// `a^k_ii` at position `σ_k(i)`.
pub fn reduced_states(op: &CdpOperator) -> (CMatrix, CMatrix) {
    let n = op.n();
    let mut r1 = linalg::zeros(n);
    let mut r2 = linalg::zeros(n);
    for (k, s) in op.sigma().perms().iter().enumerate() {
        let a = op.family().mat(k);
        for i in 0..n {
            r1[(i, i)] += a[(i, i)];
            r2[(s.apply(i), s.apply(i))] += a[(i, i)];
        }
    }
    (r1, r2)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct MajorisationVerdict {
    pub vs_rho1: bool,
    pub vs_rho2: bool,
}

/// Checks `λ(ρ) ≺ λ(ρ₁)` and `λ(ρ) ≺ λ(ρ₂)` for the unit-trace state.
pub fn majorisation_criterion(op: &CdpOperator, tol: f64) -> Result<MajorisationVerdict> {
    let (state, _) = unit_trace(op)?;
    let lambda = state.spectrum()?.eigenvalues();
    let (r1, r2) = reduced_states(&state);
    let d1: Vec<f64> = r1.diagonal().iter().map(|z| z.re).collect();
    let d2: Vec<f64> = r2.diagonal().iter().map(|z| z.re).collect();
    Ok(MajorisationVerdict {
        vs_rho1: majorises(&lambda, &d1, tol)?,
        vs_rho2: majorises(&lambda, &d2, tol)?,
    })
}

/// Rescales to unit trace; the flag says whether anything changed.
fn unit_trace(op: &CdpOperator) -> Result<(CdpOperator, bool)> {
    let t = op.family().trace();
    if (t - Complex64::new(1.0, 0.0)).norm() <= 1e-12 {
        Ok((op.clone(), false))
    } else {
        Ok((op.normalized()?, true))
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct BlockDiagnostic {
    pub k: usize,
    pub min_eigenvalue: f64,
    pub psd: bool,
}

/// Summary of all three criteria. Never claims separability.
#[derive(Debug, Clone, Serialize)]
pub struct SeparabilityReport {
    pub n: usize,
    pub hermitian: bool,
    pub psd: bool,
    pub normalized: bool,
    pub ppt: bool,
    pub ppt_method: Method,
    pub pt_min_eigenvalue: f64,
    pub pt_family: Option<FamilyJson>,
    pub pt_sigma: Option<Vec<Vec<usize>>>,
    pub realignment_sum: f64,
    pub realignment_pass: bool,
    pub realignment_method: Method,
    pub majorisation: MajorisationVerdict,
    pub entangled: bool,
    pub blocks: Vec<BlockDiagnostic>,
}

pub fn analyze(op: &CdpOperator, tol: f64) -> Result<SeparabilityReport> {
    if let Some(k) = op.family().first_non_hermitian(tol) {
        return Err(CdpError::NotHermitian(k));
    }
    let spectrum = op.spectrum()?;
    let blocks: Vec<BlockDiagnostic> = spectrum
        .blocks
        .iter()
        .map(|b| {
            let min = b.eigenvalues.first().copied().unwrap_or(0.0);
            BlockDiagnostic {
                k: b.k,
                min_eigenvalue: min,
                psd: min >= -tol,
            }
        })
        .collect();
    let psd = blocks.iter().all(|b| b.psd);
    let verdict = ppt(op, tol)?;
    let (pt_family, pt_sigma) = if op.sigma().is_abelian() {
        let pt = pt_as_cdp(op)?;
        let sigma = pt.sigma().perms().iter().map(|p| p.images().to_vec()).collect();
        (Some(FamilyJson::from(pt.family())), Some(sigma))
    } else {
        (None, None)
    };
    let realign = realignment(op, tol)?;
    let majorisation = majorisation_criterion(op, tol)?;
    let entangled =
        !verdict.ppt || !realign.pass || !majorisation.vs_rho1 || !majorisation.vs_rho2;
    Ok(SeparabilityReport {
        n: op.n(),
        hermitian: true,
        psd,
        normalized: realign.normalized,
        ppt: verdict.ppt,
        ppt_method: verdict.method,
        pt_min_eigenvalue: verdict.min_eigenvalue,
        pt_family,
        pt_sigma,
        realignment_sum: realign.sum,
        realignment_pass: realign.pass,
        realignment_method: realign.method,
        majorisation,
        entangled,
        blocks,
    })
}

/// `|Φ⁺⟩⟨Φ⁺|`: it lives on the identity's subspace, with coefficient `J / n`.
pub fn maximally_entangled(sigma: &CdpSet) -> Result<CdpOperator> {
    let n = sigma.degree();
    let j = CMatrix::from_element(n, n, Complex64::new(1.0 / n as f64, 0.0));
    let k0 = sigma
        .perms()
        .iter()
        .position(|p| p.is_identity())
        .ok_or(CdpError::MissingIdentity)?;
    CdpOperator::build(CoefficientFamily::single(n, k0, j)?, sigma.clone())
}

/// `id / n²`.
pub fn maximally_mixed(sigma: &CdpSet) -> Result<CdpOperator> {
    let n = sigma.degree();
    CdpOperator::build(
        CoefficientFamily::identities(n).scale(1.0 / (n * n) as f64),
        sigma.clone(),
    )
}
