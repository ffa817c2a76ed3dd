use crate::cdp_set::CdpSet;
use crate::error::{CdpError, Result};
use crate::linalg::{self, c, CMatrix};
use crate::operator::CoefficientFamily;
use crate::perm::Permutation;

use super::LinearMap;

/// `U^σ = ((−1)^j δ_{σ(i) j})` for a pairing `σ` of even with odd indices.
#[derive(Debug, Clone, PartialEq)]
pub struct AntisymUnitary {
    pairing: Permutation,
    matrix: CMatrix,
}

impl AntisymUnitary {
    pub fn new(pairing: Permutation) -> Result<AntisymUnitary> {
        let n = pairing.degree();
        if n % 2 != 0 {
            return Err(CdpError::InvalidPairing(format!("degree {n} is odd")));
        }
        for i in 0..n {
            let j = pairing.apply(i);
            if j == i {
                return Err(CdpError::InvalidPairing(format!("{i} is a fixed point")));
            }
            if pairing.apply(j) != i {
                return Err(CdpError::InvalidPairing("not an involution".into()));
            }
            if (i + j) % 2 == 0 {
                return Err(CdpError::InvalidPairing(format!(
                    "{i} and {j} have the same parity"
                )));
            }
        }
        let matrix = Self::matrix_for(&pairing);
        Ok(AntisymUnitary { pairing, matrix })
    }

    /// The matrix formula without any checks on `σ`.
    pub fn matrix_for(pairing: &Permutation) -> CMatrix {
        let n = pairing.degree();
        let mut u = linalg::zeros(n);
        for i in 0..n {
            let j = pairing.apply(i);
            u[(i, j)] = c(if j % 2 == 0 { 1.0 } else { -1.0 }, 0.0);
        }
        u
    }

    pub fn pairing(&self) -> &Permutation {
        &self.pairing
    }

    pub fn matrix(&self) -> &CMatrix {
        &self.matrix
    }
}

/// `B(X) = tr(X) id − X − U Xᵀ U†`.
#[derive(Debug, Clone, PartialEq)]
pub struct BreuerHallMap {
    u: AntisymUnitary,
}

impl BreuerHallMap {
    pub fn new(u: AntisymUnitary) -> BreuerHallMap {
        BreuerHallMap { u }
    }

    pub fn unitary(&self) -> &AntisymUnitary {
        &self.u
    }
}

impl LinearMap for BreuerHallMap {
    fn dim(&self) -> usize {
        self.u.pairing.degree()
    }

    fn name(&self) -> String {
        format!("breuer-hall{}", self.u.pairing.to_cycles(0))
    }

    fn apply(&self, x: &CMatrix) -> CMatrix {
        let n = self.dim();
        let u = &self.u.matrix;
        linalg::eye(n).map(|z| z * x.trace()) - x - u * x.transpose() * u.adjoint()
    }
}

/// Coefficients with `ρ[A, Σ] = Σ e_ij ⊗ B(e_ij)`, `B` built from `σ_p`.
///
/// `Σ` must be the regular representation of `(ℤ₂)^m` in canonical order.
/// With `s_i = (−1)^i`:
///
/// * `A^0`: zero on the diagonal and at `(i, σ_p(i))`, `−1` elsewhere;
/// * `A^p = 0`;
/// * other `A^k`: `1` on the diagonal, `(−1)^{σ_p(i)+j}` at `(i, j)` when
///   `σ_i σ_p (j) = k`, zero otherwise.
pub fn breuer_hall_family(sigma: &CdpSet, p: usize) -> Result<CoefficientFamily> {
    let n = sigma.degree();
    let elementary = n >= 2
        && n.is_power_of_two()
        && sigma.is_canonical()
        && sigma.is_abelian()
        && sigma.perms().iter().all(Permutation::is_involution);
    if !elementary {
        return Err(CdpError::Unsupported(
            "Breuer-Hall family needs the regular representation of (Z2)^m".into(),
        ));
    }
    if p >= n {
        return Err(CdpError::IndexOutOfRange { index: p, n });
    }
    let pairing = sigma.perm(p);
    AntisymUnitary::new(pairing.clone())?;

    let sign = |e: usize| if e % 2 == 0 { 1.0 } else { -1.0 };
    let mut mats = vec![linalg::zeros(n); n];
    for i in 0..n {
        for j in 0..n {
            if i != j && j != pairing.apply(i) {
                mats[0][(i, j)] = c(-1.0, 0.0);
            }
        }
    }
    for (k, m) in mats.iter_mut().enumerate() {
        if k == 0 || k == p {
            continue;
        }
        for i in 0..n {
            m[(i, i)] = c(1.0, 0.0);
            for j in 0..n {
                if i != j && sigma.perm(i).apply(pairing.apply(j)) == k {
                    m[(i, j)] = c(sign(pairing.apply(i) + j), 0.0);
                }
            }
        }
    }
    CoefficientFamily::new(mats)
}
