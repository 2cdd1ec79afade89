use crate::error::{Error, Result};
use crate::scalar::Real;

/// Identifies one member of the two enrichment families by the exponent of
/// its segment weight `t^p (1-t)^p`.
///
/// `CAlpha` integrates from each vertex to the midpoint of the opposite
/// edge; every exponent `alpha > -1` except `alpha = -6/7` yields a valid
/// element. `EBeta` integrates from each vertex to the centroid and is valid
/// for every exponent `beta > -1`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum FamilyParameter<T> {
    CAlpha(T),
    EBeta(T),
}

/// Exponents closer than this to the excluded value `-6/7` are rejected: the
/// element degenerates there and the basis coefficients blow up.
const SINGULAR_GUARD: f64 = 1e-9;

impl<T: Real> FamilyParameter<T> {
    /// Validated vertex-to-opposite-midpoint family member.
    pub fn c_alpha(alpha: T) -> Result<Self> {
        validate_exponent(alpha)?;
        let excluded = T::of(-6.0) / T::of(7.0);
        if (alpha - excluded).abs() <= T::of(SINGULAR_GUARD) {
            return Err(Error::SingularParameter(format!(
                "alpha = {alpha} lies within {SINGULAR_GUARD:e} of the excluded value -6/7"
            )));
        }
        Ok(FamilyParameter::CAlpha(alpha))
    }

    /// Validated vertex-to-centroid family member.
    pub fn e_beta(beta: T) -> Result<Self> {
        validate_exponent(beta)?;
        Ok(FamilyParameter::EBeta(beta))
    }

    /// The weight exponent.
    pub fn exponent(&self) -> T {
        match *self {
            FamilyParameter::CAlpha(a) => a,
            FamilyParameter::EBeta(b) => b,
        }
    }
}

fn validate_exponent<T: Real>(p: T) -> Result<()> {
    if !p.is_finite() || p <= T::of(-1.0) {
        return Err(Error::domain(format!(
            "family exponent must be finite and exceed -1, got {p}"
        )));
    }
    Ok(())
}
