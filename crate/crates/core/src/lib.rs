//! Completely different permutations and the bipartite operators they generate.
//!
//! Permutations are stored 0-based as image words. `p.compose(&q)` is
//! `p ∘ q`, and `m(σ)` has its ones at `(σ(j), j)`, so `m(p∘q) = m(p)m(q)`.

pub mod cdp_set;
pub mod enumerate;
pub mod error;
pub mod golden;
pub mod io;
pub mod linalg;
pub mod maps;
pub mod majorization;
pub mod operator;
pub mod perm;
pub mod random;
pub mod separability;

pub use cdp_set::{tables, CdpSet, Structure, Xi};
pub use enumerate::{enumerate_all, enumerate_bounded};
pub use error::{CdpError, Result};
pub use linalg::CMatrix;
pub use operator::{decompose, subspace_basis, BlockSpectrum, CdpOperator, CoefficientFamily, Norms, DEFAULT_TOL};
pub use perm::{PermMatrix, Permutation};
