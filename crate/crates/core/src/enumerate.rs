//! Exhaustive search for maximal CDP sets (Latin squares, row by row).

use crate::cdp_set::CdpSet;
use crate::error::{CdpError, Result};
use crate::perm::Permutation;

/// Largest degree enumerated unless the caller raises the bound.
pub const DEFAULT_BOUND: usize = 6;

/// Streams every maximal CDP set of degree `n`.
///
/// Rows are generated in canonical order (row `i` starts with `i`), so each
/// set appears exactly once without a dedup table. With `canonical_only`
/// unset the same sets are yielded with their rows in lexicographic order
/// instead; the underlying collection is identical.
pub fn enumerate_all(n: usize, canonical_only: bool) -> Result<LatinSets> {
    enumerate_bounded(n, canonical_only, DEFAULT_BOUND)
}

pub fn enumerate_bounded(n: usize, canonical_only: bool, bound: usize) -> Result<LatinSets> {
    if n == 0 {
        return Err(CdpError::InvalidDegree(0));
    }
    if n > bound {
        return Err(CdpError::EnumerationBound { n, bound });
    }
    Ok(LatinSets::new(n, canonical_only))
}

/// Number of sets without materialising them.
pub fn count(n: usize, bound: usize) -> Result<u64> {
    let it = enumerate_bounded(n, true, bound)?;
    let mut it = it;
    let mut total = 0u64;
    while it.advance() {
        total += 1;
    }
    Ok(total)
}

/// All `n!` permutations of degree `n`, lexicographic.
pub fn permutations(n: usize) -> Result<Vec<Permutation>> {
    if n == 0 {
        return Err(CdpError::InvalidDegree(0));
    }
    let mut word: Vec<usize> = (0..n).collect();
    let mut out = vec![Permutation::from_images(word.clone())?];
    loop {
        // next lexicographic permutation
        let Some(i) = (0..n.saturating_sub(1)).rev().find(|&i| word[i] < word[i + 1]) else {
            return Ok(out);
        };
        let j = (i + 1..n).rev().find(|&j| word[j] > word[i]).expect("exists");
        word.swap(i, j);
        word[i + 1..].reverse();
        out.push(Permutation::from_images(word.clone())?);
    }
}

/// Every canonical CDP set of degree `n` that is a group.
///
/// Such a set is a regular permutation group, hence a relabelling
/// `π R π⁻¹` of the regular representation `R` of some group of order `n`.
/// `regulars` must contain one representation per isomorphism class.
pub fn group_sets(regulars: &[CdpSet]) -> Result<Vec<CdpSet>> {
    let Some(first) = regulars.first() else {
        return Ok(Vec::new());
    };
    let n = first.degree();
    let mut seen = std::collections::BTreeSet::new();
    let mut out = Vec::new();
    for pi in permutations(n)? {
        for r in regulars {
            let set = r.transform(&pi, &pi.inverse())?.canonicalize();
            let key: Vec<Vec<usize>> = set.perms().iter().map(|p| p.images().to_vec()).collect();
            if seen.insert(key) {
                out.push(set);
            }
        }
    }
    Ok(out)
}

/// Depth-first iterator over Latin squares with first column `0..n`.
pub struct LatinSets {
    n: usize,
    canonical: bool,
    grid: Vec<Vec<usize>>,
    // col_used[c] has bit v set if symbol v already sits in column c
    col_used: Vec<u64>,
    // row_used[r] tracks symbols placed in row r
    row_used: Vec<u64>,
    // next candidate symbol to try for each cell, in row-major cell order
    next: Vec<usize>,
    pos: usize,
    started: bool,
    done: bool,
}

impl LatinSets {
    fn new(n: usize, canonical: bool) -> LatinSets {
        let mut grid = vec![vec![usize::MAX; n]; n];
        let mut col_used = vec![0u64; n];
        let mut row_used = vec![0u64; n];
        for (i, row) in grid.iter_mut().enumerate() {
            row[0] = i;
            col_used[0] |= 1 << i;
            row_used[i] |= 1 << i;
        }
        LatinSets {
            n,
            canonical,
            grid,
            col_used,
            row_used,
            next: vec![0; n * n],
            pos: 0,
            started: false,
            done: false,
        }
    }

    fn free_cells(&self) -> usize {
        self.n * (self.n - 1)
    }

    fn cell(&self, idx: usize) -> (usize, usize) {
        (idx / (self.n - 1), 1 + idx % (self.n - 1))
    }

    fn unplace(&mut self, idx: usize) {
        let (r, c) = self.cell(idx);
        let v = self.grid[r][c];
        if v != usize::MAX {
            self.col_used[c] &= !(1 << v);
            self.row_used[r] &= !(1 << v);
            self.grid[r][c] = usize::MAX;
        }
    }

    /// Moves to the next complete square; false when exhausted.
    fn advance(&mut self) -> bool {
        if self.done {
            return false;
        }
        let cells = self.free_cells();
        if cells == 0 {
            // n = 1: a single trivial square
            self.done = self.started;
            self.started = true;
            return !self.done;
        }
        if self.started {
            // backtrack out of the last full square
            self.pos = cells - 1;
            self.unplace(self.pos);
        }
        self.started = true;
        loop {
            let (r, c) = self.cell(self.pos);
            let mut placed = false;
            while self.next[self.pos] < self.n {
                let v = self.next[self.pos];
                self.next[self.pos] += 1;
                let bit = 1u64 << v;
                if self.col_used[c] & bit == 0 && self.row_used[r] & bit == 0 {
                    self.grid[r][c] = v;
                    self.col_used[c] |= bit;
                    self.row_used[r] |= bit;
                    placed = true;
                    break;
                }
            }
            if placed {
                if self.pos + 1 == cells {
                    return true;
                }
                self.pos += 1;
                self.next[self.pos] = 0;
            } else {
                if self.pos == 0 {
                    self.done = true;
                    return false;
                }
                self.pos -= 1;
                self.unplace(self.pos);
            }
        }
    }

    fn current(&self) -> CdpSet {
        let mut rows: Vec<Vec<usize>> = self.grid.clone();
        if !self.canonical {
            rows.sort();
        }
        let perms = rows
            .into_iter()
            .map(|r| Permutation::from_images(r).expect("Latin rows are permutations"))
            .collect();
        CdpSet::verify(perms).expect("Latin squares are maximal CDP sets")
    }
}

impl Iterator for LatinSets {
    type Item = CdpSet;

    fn next(&mut self) -> Option<CdpSet> {
        if self.advance() {
            Some(self.current())
        } else {
            None
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::HashSet;

    #[test]
    fn known_counts() {
        assert_eq!(enumerate_all(1, true).unwrap().count(), 1);
        assert_eq!(enumerate_all(2, true).unwrap().count(), 1);
        assert_eq!(enumerate_all(3, true).unwrap().count(), 2);
        assert_eq!(enumerate_all(4, true).unwrap().count(), 24);
        assert_eq!(count(5, DEFAULT_BOUND).unwrap(), 1344);
    }

    #[test]
    fn n3_sets_are_the_two_from_the_text() {
        let sets: Vec<CdpSet> = enumerate_all(3, true).unwrap().collect();
        let c3 = CdpSet::cyclic(3).unwrap();
        let s3 = CdpSet::from_cycles(&["(23)", "(12)", "(13)"], 1).unwrap();
        assert!(sets.contains(&c3));
        assert!(sets.contains(&s3));
    }

    #[test]
    fn canonical_output_and_uniqueness() {
        let mut seen = HashSet::new();
        for s in enumerate_all(4, true).unwrap() {
            assert!(s.is_canonical());
            let key: Vec<Vec<usize>> = s.perms().iter().map(|p| p.images().to_vec()).collect();
            assert!(seen.insert(key));
        }
        let raw: Vec<CdpSet> = enumerate_all(4, false).unwrap().collect();
        assert_eq!(raw.len(), 24);
    }

    #[test]
    fn permutation_lists() {
        assert_eq!(permutations(1).unwrap().len(), 1);
        assert_eq!(permutations(4).unwrap().len(), 24);
        let p = permutations(3).unwrap();
        assert_eq!(p[1].images(), &[0, 2, 1]);
    }

    #[test]
    fn group_sets_agree_with_exhaustive_search() {
        use crate::cdp_set::tables;
        let regulars = |n: usize| -> Vec<CdpSet> {
            match n {
                4 => vec![
                    CdpSet::cyclic(4).unwrap(),
                    CdpSet::regular_representation(&tables::elementary_abelian_2(2)).unwrap(),
                ],
                _ => vec![CdpSet::cyclic(n).unwrap()],
            }
        };
        for n in 1..6 {
            let mut by_search: Vec<CdpSet> = enumerate_all(n, true).unwrap().filter(CdpSet::is_group).collect();
            let mut by_orbit = group_sets(&regulars(n)).unwrap();
            let key = |s: &CdpSet| s.perms().iter().map(|p| p.images().to_vec()).collect::<Vec<_>>();
            by_search.sort_by_key(key);
            by_orbit.sort_by_key(key);
            assert_eq!(by_search, by_orbit, "n = {n}");
        }
    }

    #[test]
    fn bound_is_enforced() {
        assert_eq!(
            enumerate_all(7, true).err(),
            Some(CdpError::EnumerationBound { n: 7, bound: 6 })
        );
        assert!(enumerate_bounded(7, true, 7).is_ok());
        assert!(enumerate_all(0, true).is_err());
    }
}
