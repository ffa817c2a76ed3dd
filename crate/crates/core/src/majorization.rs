//! Majorisation of real vectors.

use crate::error::{CdpError, Result};

/// Sorted copy, largest first.
pub fn sorted_desc(v: &[f64]) -> Vec<f64> {
    let mut out = v.to_vec();
    out.sort_by(|a, b| b.total_cmp(a));
    out
}

/// True when `a ≺ b`: every partial sum of `a` (sorted decreasingly) is at
/// most the matching partial sum of `b`, and the totals agree. The shorter
/// vector is padded with zeros.
pub fn majorises(a: &[f64], b: &[f64], tol: f64) -> Result<bool> {
    let len = a.len().max(b.len());
    let mut x = sorted_desc(a);
    let mut y = sorted_desc(b);
    x.resize(len, 0.0);
    y.resize(len, 0.0);
    // zero padding must not land above negative entries
    x = sorted_desc(&x);
    y = sorted_desc(&y);

    let (lhs, rhs): (f64, f64) = (x.iter().sum(), y.iter().sum());
    if (lhs - rhs).abs() > tol * (1.0 + lhs.abs().max(rhs.abs())) {
        return Err(CdpError::NotComparableTotals { lhs, rhs });
    }
    let (mut sx, mut sy) = (0.0, 0.0);
    for (p, q) in x.iter().zip(&y) {
        sx += p;
        sy += q;
        if sx > sy + tol {
            return Ok(false);
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn classic_pair() {
        assert!(majorises(&[0.5, 0.5], &[1.0, 0.0], 1e-12).unwrap());
        assert!(!majorises(&[1.0, 0.0], &[0.5, 0.5], 1e-12).unwrap());
        assert!(majorises(&[0.3, 0.7], &[0.7, 0.3], 1e-12).unwrap());
    }

    #[test]
    fn padding_and_totals() {
        assert!(majorises(&[0.25; 4], &[0.5, 0.5], 1e-12).unwrap());
        assert!(!majorises(&[0.5, 0.5], &[0.25; 4], 1e-12).unwrap());
        assert!(matches!(
            majorises(&[1.0], &[2.0], 1e-12),
            Err(CdpError::NotComparableTotals { .. })
        ));
    }
}
