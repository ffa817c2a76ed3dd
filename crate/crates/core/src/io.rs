//! File formats.
//!
//! * CDP sets: JSON `{"n": 3, "perms": [[0,1,2], …], "base": 0}` or a text
//!   file with one permutation per line in cycle notation. `#` starts a
//!   comment; a `# base: 1` line declares 1-based symbols.
//! * Families: JSON `{"n": 2, "mats": [[[[re, im], …], …], …]}`.
//! * Group tables: JSON array of rows, or whitespace-separated rows.

use serde::{Deserialize, Serialize};

use crate::cdp_set::CdpSet;
use crate::error::{CdpError, Result};
use crate::linalg::{c, CMatrix};
use crate::operator::CoefficientFamily;
use crate::perm::Permutation;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SigmaJson {
    pub n: usize,
    pub perms: Vec<Vec<usize>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub base: Option<usize>,
}

impl SigmaJson {
    pub fn to_set(&self) -> Result<CdpSet> {
        let base = self.base.unwrap_or(0);
        let perms = self
            .perms
            .iter()
            .map(|w| {
                if w.len() != self.n {
                    return Err(CdpError::DimensionMismatch {
                        expected: self.n,
                        found: w.len(),
                    });
                }
                let shifted = w
                    .iter()
                    .map(|&x| {
                        x.checked_sub(base)
                            .ok_or(CdpError::OutOfRange { symbol: x, n: self.n })
                    })
                    .collect::<Result<Vec<_>>>()?;
                Permutation::from_images(shifted)
            })
            .collect::<Result<Vec<_>>>()?;
        CdpSet::verify(perms)
    }
}

impl From<&CdpSet> for SigmaJson {
    fn from(s: &CdpSet) -> Self {
        SigmaJson {
            n: s.degree(),
            perms: s.perms().iter().map(|p| p.images().to_vec()).collect(),
            base: None,
        }
    }
}

/// `mats[k][row][col] = [re, im]`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct FamilyJson {
    pub n: usize,
    pub mats: Vec<Vec<Vec<[f64; 2]>>>,
}

pub fn matrix_to_json(m: &CMatrix) -> Vec<Vec<[f64; 2]>> {
    (0..m.nrows())
        .map(|r| (0..m.ncols()).map(|col| [m[(r, col)].re, m[(r, col)].im]).collect())
        .collect()
}

pub fn matrix_from_json(rows: &[Vec<[f64; 2]>]) -> Result<CMatrix> {
    let n = rows.len();
    for row in rows {
        if row.len() != n {
            return Err(CdpError::DimensionMismatch {
                expected: n,
                found: row.len(),
            });
        }
    }
    Ok(CMatrix::from_fn(n, n, |r, col| c(rows[r][col][0], rows[r][col][1])))
}

impl From<&CoefficientFamily> for FamilyJson {
    fn from(f: &CoefficientFamily) -> Self {
        FamilyJson {
            n: f.n(),
            mats: f.mats().iter().map(matrix_to_json).collect(),
        }
    }
}

impl FamilyJson {
    pub fn to_family(&self) -> Result<CoefficientFamily> {
        if self.mats.len() != self.n {
            return Err(CdpError::DimensionMismatch {
                expected: self.n,
                found: self.mats.len(),
            });
        }
        let mats = self
            .mats
            .iter()
            .map(|m| matrix_from_json(m))
            .collect::<Result<Vec<_>>>()?;
        CoefficientFamily::new(mats)
    }
}

/// Dense matrix export, row-major.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct DenseJson {
    pub dim: usize,
    pub entries: Vec<Vec<[f64; 2]>>,
}

impl From<&CMatrix> for DenseJson {
    fn from(m: &CMatrix) -> Self {
        DenseJson {
            dim: m.nrows(),
            entries: matrix_to_json(m),
        }
    }
}

/// Reads a CDP set from JSON or cycle text. `base` applies to cycle text
/// unless the file declares its own.
pub fn parse_sigma(text: &str, base: usize) -> Result<CdpSet> {
    if text.trim_start().starts_with('{') {
        let mut json: SigmaJson =
            serde_json::from_str(text).map_err(|e| CdpError::Parse(e.to_string()))?;
        if json.base.is_none() {
            json.base = Some(base);
        }
        json.to_set()
    } else {
        parse_cycle_file(text, base)
    }
}

/// One permutation per line; the degree is the number of lines.
pub fn parse_cycle_file(text: &str, base: usize) -> Result<CdpSet> {
    let mut base = base;
    let mut lines = Vec::new();
    for raw in text.lines() {
        let (body, comment) = match raw.find('#') {
            Some(pos) => (&raw[..pos], Some(&raw[pos + 1..])),
            None => (raw, None),
        };
        if let Some(b) = comment.and_then(|c| c.trim().strip_prefix("base:")) {
            base = b
                .trim()
                .parse()
                .map_err(|_| CdpError::Parse(format!("bad base declaration: {}", b.trim())))?;
        }
        let body = body.trim();
        if !body.is_empty() {
            lines.push(body.to_string());
        }
    }
    let n = lines.len();
    if n == 0 {
        return Err(CdpError::Parse("no permutations found".into()));
    }
    let perms = lines
        .iter()
        .map(|l| Permutation::parse_cycles(l, n, base))
        .collect::<Result<Vec<_>>>()?;
    CdpSet::verify(perms)
}

/// Writes one permutation per line in cycle notation.
pub fn write_cycle_file(s: &CdpSet, base: usize) -> String {
    let mut out = String::new();
    if base != 0 {
        out.push_str(&format!("# base: {base}\n"));
    }
    for p in s.perms() {
        out.push_str(&p.to_cycles(base));
        out.push('\n');
    }
    out
}

pub fn parse_family(text: &str) -> Result<CoefficientFamily> {
    let json: FamilyJson = serde_json::from_str(text).map_err(|e| CdpError::Parse(e.to_string()))?;
    json.to_family()
}

/// A multiplication table as JSON rows or whitespace-separated text.
pub fn parse_table(text: &str) -> Result<Vec<Vec<usize>>> {
    if text.trim_start().starts_with('[') {
        return serde_json::from_str(text).map_err(|e| CdpError::Parse(e.to_string()));
    }
    text.lines()
        .map(|l| l.split('#').next().unwrap_or("").trim())
        .filter(|l| !l.is_empty())
        .map(|l| {
            l.split_whitespace()
                .map(|t| t.parse().map_err(|_| CdpError::Parse(format!("bad table entry {t}"))))
                .collect()
        })
        .collect()
}
