//! Certified lower bounds from quasimorphism values.

use num::{BigRational, Signed, Zero};

use crate::error::{Error, Result};
use crate::quasimorphisms::{DefectBound, HomogenisationEstimate};

/// `scl_Aut(w) >= max(|value| - error, 0) / (2 d)`.
pub fn scl_lower_bound(hom: &HomogenisationEstimate, d: &DefectBound) -> Result<BigRational> {
    if d.value().is_zero() {
        return Err(Error::ZeroDefect);
    }
    let numerator = hom.value.abs() - &hom.error_bound;
    if numerator.is_negative() {
        return Ok(BigRational::zero());
    }
    Ok(numerator / (d.value() * BigRational::from_integer(2.into())))
}

/// `||g|| >= |psi(g)| / (K + D)` for a word norm whose generators have
/// `|psi| <= K`.
pub fn norm_lower_bound(psi_value: &BigRational, k: &BigRational, d: &DefectBound) -> Result<BigRational> {
    if k.is_negative() {
        return Err(Error::InvalidArgument("K must be non-negative".into()));
    }
    let denom = k + d.value();
    if denom.is_zero() {
        return Err(Error::ZeroDefect);
    }
    Ok(psi_value.abs() / denom)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    fn hom(value: BigRational, error_bound: BigRational) -> HomogenisationEstimate {
        HomogenisationEstimate { value, error_bound, power: 1 }
    }

    #[test]
    fn scl_examples() {
        let d = DefectBound::new(r(30, 1)).unwrap();
        assert_eq!(scl_lower_bound(&hom(r(1, 1), r(30, 3000)), &d).unwrap(), r(33, 2000));
        assert!(scl_lower_bound(&hom(r(0, 1), r(1, 100)), &d).unwrap().is_zero());
        assert!(scl_lower_bound(&hom(r(-1, 100), r(1, 10)), &d).unwrap().is_zero());
        assert!(matches!(
            scl_lower_bound(&hom(r(1, 1), r(0, 1)), &DefectBound::new(r(0, 1)).unwrap()),
            Err(Error::ZeroDefect)
        ));
    }

    #[test]
    fn norm_examples() {
        let two = DefectBound::new(r(2, 1)).unwrap();
        assert_eq!(norm_lower_bound(&r(6, 1), &r(1, 1), &two).unwrap(), r(2, 1));
        assert!(norm_lower_bound(&r(0, 1), &r(1, 1), &two).unwrap().is_zero());
        let zero = DefectBound::new(r(0, 1)).unwrap();
        assert!(norm_lower_bound(&r(1, 1), &r(0, 1), &zero).is_err());
        assert!(norm_lower_bound(&r(1, 1), &r(-1, 1), &two).is_err());
    }
}
