//! Permutations of `{0, …, n-1}` stored as image words.
//!
//! Composition is right-to-left: `p.compose(&q)` maps `i` to `p(q(i))`.
//! With this order a group CDP set in canonical enumeration satisfies
//! `σ_i ∘ σ_j = σ_{σ_i(j)}`, the group-table identity everything else
//! relies on.

use std::fmt;

use nalgebra::DMatrix;
use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{CdpError, Result};

/// A bijection on `{0, …, n-1}`; `images[i]` is the image of `i`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct Permutation {
    images: Vec<usize>,
}

impl Permutation {
    pub fn identity(n: usize) -> Result<Self> {
        if n == 0 {
            return Err(CdpError::InvalidDegree(0));
        }
        Ok(Permutation {
            images: (0..n).collect(),
        })
    }

    /// Builds a permutation from its image word, rejecting anything that is
    /// not a rearrangement of `0..n`.
    pub fn from_images(images: Vec<usize>) -> Result<Self> {
        let n = images.len();
        if n == 0 {
            return Err(CdpError::InvalidDegree(0));
        }
        let mut seen = vec![false; n];
        for &x in &images {
            if x >= n {
                return Err(CdpError::NotBijective(format!(
                    "image {x} out of range for degree {n}"
                )));
            }
            if seen[x] {
                return Err(CdpError::NotBijective(format!("image {x} repeated")));
            }
            seen[x] = true;
        }
        Ok(Permutation { images })
    }

    /// The cyclic shift `t ↦ t + k mod n`.
    pub fn shift(n: usize, k: usize) -> Result<Self> {
        if n == 0 {
            return Err(CdpError::InvalidDegree(0));
        }
        Ok(Permutation {
            images: (0..n).map(|t| (t + k) % n).collect(),
        })
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    #[inline]
    pub fn apply(&self, i: usize) -> usize {
        self.images[i]
    }

    /// `self ∘ other`, i.e. `other` acts first.
    pub fn compose(&self, other: &Permutation) -> Result<Permutation> {
        if self.degree() != other.degree() {
            return Err(CdpError::DimensionMismatch {
                expected: self.degree(),
                found: other.degree(),
            });
        }
        Ok(Permutation {
            images: other.images.iter().map(|&j| self.images[j]).collect(),
        })
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0; self.degree()];
        for (i, &x) in self.images.iter().enumerate() {
            inv[x] = i;
        }
        Permutation { images: inv }
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &x)| i == x)
    }

    pub fn is_involution(&self) -> bool {
        self.images
            .iter()
            .enumerate()
            .all(|(i, &x)| self.images[x] == i)
    }

    pub fn fixed_points(&self) -> usize {
        self.images
            .iter()
            .enumerate()
            .filter(|(i, &x)| *i == x)
            .count()
    }

    /// Completely different: no point has the same image under both.
    pub fn completely_different(&self, other: &Permutation) -> bool {
        self.degree() == other.degree()
            && self
                .images
                .iter()
                .zip(&other.images)
                .all(|(a, b)| a != b)
    }

    /// Parses a product of disjoint cycles such as `(12)(345)`.
    ///
    /// Symbols are single characters unless a cycle contains spaces or
    /// commas, in which case those separate multi-digit symbols:
    /// `(10, 11)`. `base` is the smallest symbol of the ground set (0 or 1).
    /// The empty string, `()` and `id` denote the identity.
    pub fn parse_cycles(text: &str, n: usize, base: usize) -> Result<Permutation> {
        let mut images: Vec<usize> = Permutation::identity(n)?.images;
        let mut seen = vec![false; n];
        let text = text.trim();
        if text.is_empty() || text == "id" || text == "()" {
            return Ok(Permutation { images });
        }

        let mut rest = text;
        while !rest.is_empty() {
            let rest_trim = rest.trim_start();
            if rest_trim.is_empty() {
                break;
            }
            if !rest_trim.starts_with('(') {
                return Err(CdpError::MalformedCycles(format!(
                    "expected '(' in {text:?}"
                )));
            }
            let close = rest_trim.find(')').ok_or_else(|| {
                CdpError::MalformedCycles(format!("unclosed cycle in {text:?}"))
            })?;
            let body = &rest_trim[1..close];
            rest = &rest_trim[close + 1..];

            let tokens: Vec<&str> = if body.contains([' ', ',']) {
                body.split([' ', ','])
                    .filter(|t| !t.is_empty())
                    .collect()
            } else {
                body.char_indices()
                    .map(|(i, c)| &body[i..i + c.len_utf8()])
                    .collect()
            };

            let mut cycle = Vec::with_capacity(tokens.len());
            for tok in tokens {
                let raw: usize = tok.parse().map_err(|_| {
                    CdpError::MalformedCycles(format!("bad symbol {tok:?} in {text:?}"))
                })?;
                if raw < base {
                    return Err(CdpError::OutOfRange { symbol: raw, n });
                }
                let s = raw - base;
                if s >= n {
                    return Err(CdpError::OutOfRange { symbol: raw, n });
                }
                if seen[s] {
                    return Err(CdpError::MalformedCycles(format!(
                        "symbol {raw} repeated in {text:?}"
                    )));
                }
                seen[s] = true;
                cycle.push(s);
            }
            for (idx, &s) in cycle.iter().enumerate() {
                images[s] = cycle[(idx + 1) % cycle.len()];
            }
        }
        Ok(Permutation { images })
    }

    /// Disjoint-cycle form with fixed points omitted; `id` for the identity.
    pub fn to_cycles(&self, base: usize) -> String {
        if self.is_identity() {
            return "id".to_string();
        }
        let wide = self.degree() - 1 + base >= 10;
        let mut done = vec![false; self.degree()];
        let mut out = String::new();
        for start in 0..self.degree() {
            if done[start] || self.images[start] == start {
                continue;
            }
            let mut cycle = Vec::new();
            let mut x = start;
            while !done[x] {
                done[x] = true;
                cycle.push((x + base).to_string());
                x = self.images[x];
            }
            out.push('(');
            out.push_str(&cycle.join(if wide { "," } else { "" }));
            out.push(')');
        }
        out
    }

    /// The 0/1 matrix `m(σ)` with `m(σ) e_j = e_{σ(j)}`.
    pub fn matrix(&self) -> PermMatrix {
        let n = self.degree();
        PermMatrix(DMatrix::from_fn(n, n, |r, c| i32::from(self.images[c] == r)))
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_cycles(0))
    }
}

impl TryFrom<Vec<usize>> for Permutation {
    type Error = CdpError;

    fn try_from(images: Vec<usize>) -> Result<Self> {
        Permutation::from_images(images)
    }
}

impl From<Permutation> for Vec<usize> {
    fn from(p: Permutation) -> Self {
        p.images
    }
}

/// Natural matrix representation `m(σ) = (δ_{σ⁻¹(i) j})`: the entry in row
/// `σ(j)`, column `j` is one. `m(p ∘ q) = m(p) m(q)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PermMatrix(pub DMatrix<i32>);

impl PermMatrix {
    pub fn trace(&self) -> i32 {
        self.0.trace()
    }

    pub fn transpose(&self) -> PermMatrix {
        PermMatrix(self.0.transpose())
    }

    pub fn mul(&self, other: &PermMatrix) -> PermMatrix {
        PermMatrix(&self.0 * &other.0)
    }

    pub fn to_complex(&self) -> DMatrix<Complex64> {
        self.0.map(|x| Complex64::new(f64::from(x), 0.0))
    }

    /// Frobenius inner product `tr(m(p)ᵀ m(q))`; zero exactly when the two
    /// permutations are completely different.
    pub fn frobenius(&self, other: &PermMatrix) -> i32 {
        self.transpose().mul(other).trace()
    }
}
