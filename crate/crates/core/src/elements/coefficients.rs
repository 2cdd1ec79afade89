//! Closed-form coefficient ledgers for the two enrichment families.
//!
//! For a family exponent `p`, the weighted segment functionals applied to
//! the quadratic shape basis produce a symmetric 3x3 moment matrix with one
//! value on the diagonal and another off it. Everything needed to build
//! nodal bases comes from that matrix: its entries, its determinant, the
//! normalising factor of its inverse, and the vertex coefficients that make
//! the edge-dual basis functions annihilate the weighted functionals. All
//! of these reduce to rational expressions in the exponent times powers of a
//! Beta-function scale, which this module evaluates directly.

use crate::error::Result;
use crate::quadrature::beta;
use crate::scalar::Real;

use super::family::FamilyParameter;

/// Coefficient ledger of the vertex-to-opposite-midpoint family.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CAlphaCoefficients<T> {
    /// Scale of all segment moments: the first moment
    /// `B(alpha + 2, alpha + 1)` of the weight `t^alpha (1-t)^alpha`.
    pub gamma: T,
    /// Diagonal moment ratio: the functional of segment `j` applied to the
    /// vertex function of the same index is `k * gamma`, with
    /// `k = -alpha / (2 alpha + 3)`.
    pub k: T,
    /// Off-diagonal moment ratio: the functional of segment `j` applied to a
    /// vertex function of a different index is `h * gamma`, with
    /// `h = -(5 alpha + 6) / (4 (2 alpha + 3))`.
    pub h: T,
    /// Own-vertex coefficient of the edge-dual basis functions:
    /// `c = 3 (11 alpha^2 + 20 alpha + 12) / ((alpha + 6)(7 alpha + 6))`.
    pub c: T,
    /// Other-vertex coefficient of the edge-dual basis functions:
    /// `d = 3 (-3 alpha^2 + 8 alpha + 12) / ((alpha + 6)(7 alpha + 6))`.
    pub d: T,
    /// Normaliser `(k - h)(k + 2h)` of the inverse moment matrix, in closed
    /// form `-(alpha + 6)(7 alpha + 6) / (8 (2 alpha + 3)^2)`; the
    /// weighted-dual basis divides by `gamma * l`.
    pub l: T,
    /// Determinant of the full 3x3 moment matrix,
    /// `-gamma^3 (alpha + 6)^2 (7 alpha + 6) / (32 (2 alpha + 3)^3)`;
    /// vanishes exactly at the excluded exponent `-6/7`.
    pub det: T,
}

impl<T: Real> CAlphaCoefficients<T> {
    /// Evaluates the ledger for `alpha > -1`, `alpha != -6/7`.
    pub fn for_exponent(alpha: T) -> Result<Self> {
        FamilyParameter::c_alpha(alpha)?;
        let one = T::one();
        let two = T::of(2.0);
        let three = T::of(3.0);
        let four = T::of(4.0);
        let q = two * alpha + three; // 2a + 3
        let a6 = alpha + T::of(6.0); // a + 6
        let a76 = T::of(7.0) * alpha + T::of(6.0); // 7a + 6

        let gamma = beta(alpha + two, alpha + one)?;
        let k = -alpha / q;
        let h = -(T::of(5.0) * alpha + T::of(6.0)) / (four * q);
        let scale = three / (a6 * a76);
        let c = scale * ((T::of(11.0) * alpha + T::of(20.0)) * alpha + T::of(12.0));
        let d = scale * ((T::of(-3.0) * alpha + T::of(8.0)) * alpha + T::of(12.0));
        let l = -(a6 * a76) / (T::of(8.0) * q * q);
        let det = -gamma * gamma * gamma * a6 * a6 * a76 / (T::of(32.0) * q * q * q);
        Ok(CAlphaCoefficients {
            gamma,
            k,
            h,
            c,
            d,
            l,
            det,
        })
    }
}

/// Coefficient ledger of the vertex-to-centroid family.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EBetaCoefficients<T> {
    /// Scale of all segment moments:
    /// `nu = B(beta + 2, beta + 1) / (3 (2 beta + 3))`. The functional of
    /// segment `j` applied to the vertex function of the same index is
    /// `2 * nu`.
    pub nu: T,
    /// Off-diagonal ratio: the functional of segment `j` applied to a vertex
    /// function of a different index is `-sigma * nu`, with
    /// `sigma = 3 beta + 4`.
    pub sigma: T,
    /// Own-vertex coefficient of the edge-dual basis functions:
    /// `r = 6 (7 beta^2 + 18 beta + 12) / l`.
    pub r: T,
    /// Other-vertex coefficient of the edge-dual basis functions:
    /// `m = 6 (beta^2 + 6 beta + 6) / l`.
    pub m: T,
    /// Normaliser `2 (sigma + 2)(sigma - 1) = 18 (beta + 1)(beta + 2)` of
    /// the inverse moment matrix; the weighted-dual basis divides by
    /// `nu * l`.
    pub l: T,
    /// Determinant of the full 3x3 moment matrix,
    /// `-54 nu^3 (beta + 1)(beta + 2)^2`; strictly negative for every
    /// `beta > -1`, so this family never degenerates.
    pub det: T,
}

impl<T: Real> EBetaCoefficients<T> {
    /// Evaluates the ledger for `beta > -1`.
    pub fn for_exponent(beta_exp: T) -> Result<Self> {
        FamilyParameter::e_beta(beta_exp)?;
        let one = T::one();
        let two = T::of(2.0);
        let three = T::of(3.0);
        let six = T::of(6.0);
        let b1 = beta_exp + one;
        let b2 = beta_exp + two;

        let nu = beta(b2, b1)? / (three * (two * beta_exp + three));
        let sigma = three * beta_exp + T::of(4.0);
        let l = T::of(18.0) * b1 * b2;
        let r = six * ((T::of(7.0) * beta_exp + T::of(18.0)) * beta_exp + T::of(12.0)) / l;
        let m = six * ((beta_exp + six) * beta_exp + six) / l;
        let det = -T::of(54.0) * nu * nu * nu * b1 * b2 * b2;
        Ok(EBetaCoefficients {
            nu,
            sigma,
            r,
            m,
            l,
            det,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::error::Error;

    fn close(got: f64, want: f64, tol: f64) -> bool {
        (got - want).abs() <= tol * want.abs().max(1.0)
    }

    #[test]
    fn c_alpha_ledger_at_one() {
        let c = CAlphaCoefficients::for_exponent(1.0f64).unwrap();
        assert!(close(c.gamma, 1.0 / 12.0, 1e-14));
        assert!(close(c.k, -0.2, 1e-15));
        assert!(close(c.h, -0.55, 1e-15));
        assert!(close(c.c, 129.0 / 91.0, 1e-14));
        assert!(close(c.d, 51.0 / 91.0, 1e-14));
        assert!(close(c.l, -91.0 / 200.0, 1e-14));
        assert!(close(c.det, -637.0 / 6_912_000.0, 1e-13));
    }

    #[test]
    fn c_alpha_ledger_at_zero() {
        let c = CAlphaCoefficients::for_exponent(0.0f64).unwrap();
        assert!(close(c.gamma, 0.5, 1e-14));
        assert!(close(c.k, 0.0, 1e-15));
        assert!(close(c.h, -0.5, 1e-15));
        assert!(close(c.c, 1.0, 1e-14));
        assert!(close(c.d, 1.0, 1e-14));
        assert!(close(c.l, -0.5, 1e-14));
        assert!(close(c.det, -1.0 / 32.0, 1e-13));
    }

    #[test]
    fn c_alpha_internal_identities() {
        // l = (k - h)(k + 2h) and det = gamma^3 (k - h)^2 (k + 2h), for a
        // spread of exponents.
        for &a in &[-0.9, -0.5, -0.1, 0.0, 0.7, 1.0, 3.0, 10.0] {
            let c = CAlphaCoefficients::for_exponent(a).unwrap();
            let l_alt = (c.k - c.h) * (c.k + 2.0 * c.h);
            assert!(close(c.l, l_alt, 1e-13), "alpha={a}");
            let det_alt = c.gamma.powi(3) * (c.k - c.h).powi(2) * (c.k + 2.0 * c.h);
            assert!(close(c.det, det_alt, 1e-12), "alpha={a}");
        }
    }

    #[test]
    fn e_beta_ledger_at_zero() {
        let e = EBetaCoefficients::for_exponent(0.0f64).unwrap();
        assert!(close(e.nu, 1.0 / 18.0, 1e-14));
        assert!(close(e.sigma, 4.0, 1e-15));
        assert!(close(e.r, 2.0, 1e-14));
        assert!(close(e.m, 1.0, 1e-14));
        assert!(close(e.l, 36.0, 1e-14));
        assert!(close(e.det, -1.0 / 27.0, 1e-13));
    }

    #[test]
    fn e_beta_ledger_at_one() {
        let e = EBetaCoefficients::for_exponent(1.0f64).unwrap();
        assert!(close(e.nu, 1.0 / 180.0, 1e-14));
        assert!(close(e.sigma, 7.0, 1e-15));
        assert!(close(e.r, 37.0 / 18.0, 1e-14));
        assert!(close(e.m, 13.0 / 18.0, 1e-14));
        assert!(close(e.l, 108.0, 1e-14));
        assert!(close(e.det, -1.0 / 6000.0, 1e-13));
    }

    #[test]
    fn e_beta_internal_identities() {
        // l = 2 (sigma + 2)(sigma - 1) and det = nu^3 (2 + sigma)^2 (2 - 2 sigma).
        for &b in &[-0.9, -0.5, 0.0, 0.25, 1.0, 2.0, 3.0, 8.0] {
            let e = EBetaCoefficients::for_exponent(b).unwrap();
            assert!(close(e.l, 2.0 * (e.sigma + 2.0) * (e.sigma - 1.0), 1e-13));
            let det_alt = e.nu.powi(3) * (2.0 + e.sigma).powi(2) * (2.0 - 2.0 * e.sigma);
            assert!(close(e.det, det_alt, 1e-12), "beta={b}");
            assert!(e.det < 0.0, "determinant stays negative, beta={b}");
        }
    }

    #[test]
    fn invalid_exponents_are_rejected() {
        assert!(matches!(
            CAlphaCoefficients::for_exponent(-1.0f64),
            Err(Error::Domain(_))
        ));
        assert!(matches!(
            CAlphaCoefficients::for_exponent(-6.0f64 / 7.0),
            Err(Error::SingularParameter(_))
        ));
        assert!(matches!(
            EBetaCoefficients::for_exponent(-1.2f64),
            Err(Error::Domain(_))
        ));
        // -6/7 is only excluded for the midpoint family.
        assert!(EBetaCoefficients::for_exponent(-6.0f64 / 7.0).is_ok());
    }
}
