//! Maximal sets of completely different permutations.
//!
//! A maximal CDP set of degree `n` is `n` permutations that pairwise
//! disagree at every point, i.e. the rows of a Latin square. In canonical
//! enumeration the `i`-th permutation sends `0` to `i`.

use std::collections::BTreeSet;

use serde::Serialize;

use crate::error::{CdpError, Result};
use crate::perm::{PermMatrix, Permutation};

/// Structural flags computed once at verification time.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Structure {
    pub is_abelian: bool,
    pub is_group: bool,
    pub contains_identity: bool,
    pub is_canonical: bool,
}

/// A verified maximal CDP set.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CdpSet {
    perms: Vec<Permutation>,
    structure: Structure,
}

/// The involution `ξ` sending `i` to the index of `σ_i⁻¹` (group sets).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Xi(pub Permutation);

impl CdpSet {
    /// Checks pairwise complete difference and maximality.
    pub fn verify(perms: Vec<Permutation>) -> Result<CdpSet> {
        let n = perms
            .first()
            .map(Permutation::degree)
            .ok_or(CdpError::NotMaximal { n: 0, found: 0 })?;
        for p in &perms {
            if p.degree() != n {
                return Err(CdpError::DimensionMismatch {
                    expected: n,
                    found: p.degree(),
                });
            }
        }
        // For each point, remember which permutation already claimed each image.
        for point in 0..n {
            let mut owner = vec![usize::MAX; n];
            for (b, p) in perms.iter().enumerate() {
                let img = p.apply(point);
                if owner[img] != usize::MAX {
                    return Err(CdpError::NotCdp {
                        a: owner[img],
                        b,
                        point,
                    });
                }
                owner[img] = b;
            }
        }
        if perms.len() != n {
            return Err(CdpError::NotMaximal {
                n,
                found: perms.len(),
            });
        }
        let structure = compute_structure(&perms);
        debug_assert!(!structure.is_abelian || structure.is_group);
        Ok(CdpSet { perms, structure })
    }

    /// Parses one permutation per entry in cycle notation.
    pub fn from_cycles(cycles: &[&str], base: usize) -> Result<CdpSet> {
        let n = cycles.len();
        let perms = cycles
            .iter()
            .map(|c| Permutation::parse_cycles(c, n, base))
            .collect::<Result<Vec<_>>>()?;
        CdpSet::verify(perms)
    }

    /// The cyclic group `C(n) = {c^k}` with `c^k(t) = t + k mod n`.
    pub fn cyclic(n: usize) -> Result<CdpSet> {
        let perms = (0..n)
            .map(|k| Permutation::shift(n, k))
            .collect::<Result<Vec<_>>>()?;
        CdpSet::verify(perms)
    }

    pub fn degree(&self) -> usize {
        self.perms.len()
    }

    pub fn perms(&self) -> &[Permutation] {
        &self.perms
    }

    pub fn perm(&self, k: usize) -> &Permutation {
        &self.perms[k]
    }

    pub fn structure(&self) -> Structure {
        self.structure
    }

    pub fn is_canonical(&self) -> bool {
        self.structure.is_canonical
    }

    pub fn is_abelian(&self) -> bool {
        self.structure.is_abelian
    }

    pub fn is_group(&self) -> bool {
        self.structure.is_group
    }

    pub fn contains_identity(&self) -> bool {
        self.structure.contains_identity
    }

    /// Reorders so that `perms[i](0) = i`.
    pub fn canonicalize(&self) -> CdpSet {
        let mut perms = self.perms.clone();
        perms.sort_by_key(|p| p.apply(0));
        let mut structure = self.structure;
        structure.is_canonical = true;
        CdpSet { perms, structure }
    }

    /// Index `k` with `σ_k(i) = image`; unique because columns of a Latin
    /// square are permutations too.
    pub fn index_mapping(&self, i: usize, image: usize) -> usize {
        self.perms
            .iter()
            .position(|p| p.apply(i) == image)
            .expect("every image occurs once per column")
    }

    /// The conjugated set `E`, defined by `E_j(σ_k(j)) = k`.
    pub fn conjugated_set(&self) -> Result<CdpSet> {
        self.require_canonical()?;
        let n = self.degree();
        let perms = (0..n)
            .map(|j| {
                let mut images = vec![0; n];
                for (k, sigma) in self.perms.iter().enumerate() {
                    images[sigma.apply(j)] = k;
                }
                Permutation::from_images(images)
            })
            .collect::<Result<Vec<_>>>()?;
        CdpSet::verify(perms)
    }

    /// `m(E_j) = Σ_k e_{k, σ_k(j)}` for each `j`.
    pub fn conjugated_matrices(&self) -> Result<Vec<PermMatrix>> {
        Ok(self
            .conjugated_set()?
            .perms
            .iter()
            .map(Permutation::matrix)
            .collect())
    }

    /// `ξ(i) = j` where `σ_i(j) = 0`. For group sets `σ_{ξ(i)} = σ_i⁻¹`.
    pub fn xi(&self) -> Result<Xi> {
        self.require_canonical()?;
        if !self.structure.contains_identity {
            return Err(CdpError::MissingIdentity);
        }
        let images = self.perms.iter().map(|s| s.inverse().apply(0)).collect();
        Ok(Xi(Permutation::from_images(images)?))
    }

    /// `{left ∘ σ_i ∘ right}`, in the original order.
    pub fn transform(&self, left: &Permutation, right: &Permutation) -> Result<CdpSet> {
        let perms = self
            .perms
            .iter()
            .map(|s| left.compose(s)?.compose(right))
            .collect::<Result<Vec<_>>>()?;
        CdpSet::verify(perms)
    }

    pub fn inverse_set(&self) -> CdpSet {
        CdpSet::verify(self.perms.iter().map(Permutation::inverse).collect())
            .expect("inverses of a CDP set form a CDP set")
    }

    /// Replaces the set by `Σ σ₀⁻¹`, where `σ₀` fixes `0`, so that the
    /// result contains the identity while generating the same conjugated
    /// matrix set. Returns the new set together with `σ₀`.
    pub fn abelianize(&self) -> Result<(CdpSet, Permutation)> {
        self.require_canonical()?;
        if !self.conjugated_set()?.is_abelian() {
            return Err(CdpError::NotAbelianizable);
        }
        let sigma0 = self.perms[0].clone();
        let shifted = self.transform(
            &Permutation::identity(self.degree())?,
            &sigma0.inverse(),
        )?;
        if !shifted.is_abelian() {
            return Err(CdpError::NotAbelianizable);
        }
        Ok((shifted, sigma0))
    }

    /// Set equality, ignoring order.
    pub fn same_elements(&self, other: &CdpSet) -> bool {
        let a: BTreeSet<&Permutation> = self.perms.iter().collect();
        let b: BTreeSet<&Permutation> = other.perms.iter().collect();
        a == b
    }

    /// Cayley (left regular) representation of a finite group given by its
    /// multiplication table, `table[i][k] = index of g_i g_k`.
    pub fn regular_representation(table: &[Vec<usize>]) -> Result<CdpSet> {
        validate_group_table(table)?;
        let perms = table
            .iter()
            .map(|row| Permutation::from_images(row.clone()))
            .collect::<Result<Vec<_>>>()?;
        Ok(CdpSet::verify(perms)?.canonicalize())
    }

    fn require_canonical(&self) -> Result<()> {
        if self.structure.is_canonical {
            Ok(())
        } else {
            Err(CdpError::NotCanonical)
        }
    }
}

impl Xi {
    pub fn apply(&self, i: usize) -> usize {
        self.0.apply(i)
    }

    pub fn is_involution(&self) -> bool {
        self.0.is_involution()
    }
}

fn compute_structure(perms: &[Permutation]) -> Structure {
    let n = perms.len();
    let is_canonical = perms.iter().enumerate().all(|(i, p)| p.apply(0) == i);
    let contains_identity = perms.iter().any(Permutation::is_identity);

    // by_image0[v] = position of the permutation sending 0 to v
    let mut by_image0 = vec![0; n];
    for (pos, p) in perms.iter().enumerate() {
        by_image0[p.apply(0)] = pos;
    }
    let mut is_group = true;
    let mut is_abelian = true;
    for a in perms {
        for b in perms {
            let ab = a.compose(b).expect("equal degrees");
            if is_group && ab != perms[by_image0[ab.apply(0)]] {
                is_group = false;
            }
            if is_abelian && ab != b.compose(a).expect("equal degrees") {
                is_abelian = false;
            }
        }
    }
    Structure {
        is_abelian,
        is_group,
        contains_identity,
        is_canonical,
    }
}

fn validate_group_table(table: &[Vec<usize>]) -> Result<()> {
    let n = table.len();
    if n == 0 {
        return Err(CdpError::NotAGroup("empty table".into()));
    }
    for (i, row) in table.iter().enumerate() {
        if row.len() != n {
            return Err(CdpError::NotAGroup(format!("row {i} has length {}", row.len())));
        }
        if let Some(&x) = row.iter().find(|&&x| x >= n) {
            return Err(CdpError::NotAGroup(format!("entry {x} out of range")));
        }
    }
    let e = (0..n)
        .find(|&e| (0..n).all(|x| table[e][x] == x && table[x][e] == x))
        .ok_or_else(|| CdpError::NotAGroup("no identity element".into()))?;
    for a in 0..n {
        if !(0..n).any(|b| table[a][b] == e) {
            return Err(CdpError::NotAGroup(format!("element {a} has no inverse")));
        }
    }
    for a in 0..n {
        for b in 0..n {
            for c in 0..n {
                if table[table[a][b]][c] != table[a][table[b][c]] {
                    return Err(CdpError::NotAGroup(format!(
                        "associativity fails at ({a}, {b}, {c})"
                    )));
                }
            }
        }
    }
    Ok(())
}

/// Multiplication tables of a few small groups.
pub mod tables {
    use crate::error::{CdpError, Result};
    use crate::perm::Permutation;

    /// `ℤ_n` under addition.
    pub fn cyclic(n: usize) -> Vec<Vec<usize>> {
        (0..n).map(|i| (0..n).map(|k| (i + k) % n).collect()).collect()
    }

    /// `(ℤ₂)^m`, elements labelled by bit vectors, product is XOR.
    pub fn elementary_abelian_2(m: u32) -> Vec<Vec<usize>> {
        let n = 1usize << m;
        (0..n).map(|i| (0..n).map(|k| i ^ k).collect()).collect()
    }

    /// Table of a group given by concrete permutations, in the given order.
    pub fn from_permutations(elems: &[Permutation]) -> Result<Vec<Vec<usize>>> {
        elems
            .iter()
            .map(|g| {
                elems
                    .iter()
                    .map(|h| {
                        let gh = g.compose(h)?;
                        elems.iter().position(|x| *x == gh).ok_or_else(|| {
                            CdpError::NotAGroup("set is not closed under composition".into())
                        })
                    })
                    .collect()
            })
            .collect()
    }

    /// `S(3)` as permutations of three points, listed as
    /// `e, r, r², s, rs, r²s` with `r = (012)` and `s = (12)`.
    pub fn s3_elements() -> Vec<Permutation> {
        let r = Permutation::parse_cycles("(012)", 3, 0).expect("valid");
        let s = Permutation::parse_cycles("(12)", 3, 0).expect("valid");
        let e = Permutation::identity(3).expect("valid");
        let r2 = r.compose(&r).expect("valid");
        let rs = r.compose(&s).expect("valid");
        let r2s = r2.compose(&s).expect("valid");
        vec![e, r, r2, s, rs, r2s]
    }
}
