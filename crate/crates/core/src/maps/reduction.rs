use crate::cdp_set::CdpSet;
use crate::error::{CdpError, Result};
use crate::linalg::{self, c, CMatrix};
use crate::operator::CoefficientFamily;

use super::LinearMap;

/// `R(X) = tr(X) id − X`.
#[derive(Debug, Clone, Copy)]
pub struct ReductionMap {
    n: usize,
}

impl ReductionMap {
    pub fn new(n: usize) -> Result<ReductionMap> {
        if n < 2 {
            return Err(CdpError::InvalidDegree(n));
        }
        Ok(ReductionMap { n })
    }
}

impl LinearMap for ReductionMap {
    fn dim(&self) -> usize {
        self.n
    }

    fn name(&self) -> String {
        format!("reduction({})", self.n)
    }

    fn apply(&self, x: &CMatrix) -> CMatrix {
        linalg::eye(self.n).map(|z| z * x.trace()) - x
    }
}

/// `id − J` on the identity's slot and `id` elsewhere. Works for any CDP set
/// containing the identity.
pub fn reduction_family(sigma: &CdpSet) -> Result<CoefficientFamily> {
    let n = sigma.degree();
    let k0 = sigma
        .perms()
        .iter()
        .position(|p| p.is_identity())
        .ok_or(CdpError::MissingIdentity)?;
    let mut mats = vec![linalg::eye(n); n];
    mats[k0] = linalg::eye(n) - CMatrix::from_element(n, n, c(1.0, 0.0));
    CoefficientFamily::new(mats)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::maps::{choi, LegOrder};
    use crate::operator::{decompose, CdpOperator};

    #[test]
    fn identity_goes_to_scaled_identity() {
        let r = ReductionMap::new(4).unwrap();
        let out = r.apply(&linalg::eye(4));
        assert!(linalg::max_abs_diff(&out, &linalg::eye(4).scale(3.0)) < 1e-15);
        assert!(ReductionMap::new(1).is_err());
    }

    #[test]
    fn choi_is_cdp_over_every_n4_set() {
        let r = ReductionMap::new(4).unwrap();
        for legs in [LegOrder::InputFirst, LegOrder::OutputFirst] {
            let j = choi(&r, legs).dense;
            let with_id = crate::enumerate_all(4, true)
                .unwrap()
                .filter(|s| s.contains_identity());
            for sigma in with_id {
                let fam = decompose(&j, &sigma, 0.0).unwrap();
                assert_eq!(fam, reduction_family(&sigma).unwrap());
                let op = CdpOperator::build(fam, sigma).unwrap();
                assert_eq!(op.dense(), &j);
            }
        }
    }

    #[test]
    fn needs_identity_in_set() {
        let s4 = CdpSet::from_cycles(&["(34)", "(12)", "(13)(24)", "(14)(23)"], 1).unwrap();
        assert_eq!(reduction_family(&s4).unwrap_err(), CdpError::MissingIdentity);
        let j = choi(&ReductionMap::new(4).unwrap(), LegOrder::InputFirst).dense;
        assert!(decompose(&j, &s4, 0.0).is_err());
    }

    #[test]
    fn n2_spectrum() {
        let j = choi(&ReductionMap::new(2).unwrap(), LegOrder::OutputFirst).dense;
        let vals = linalg::eigvalsh(&j);
        assert!(linalg::multiset_distance(&vals, &[-1.0, 1.0, 1.0, 1.0]) < 1e-12);
    }
}
