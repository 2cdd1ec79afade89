//! The degree-of-freedom functionals: edge means, weighted segment
//! integrals toward the opposite-edge midpoint or the centroid, and plain
//! vertex evaluation.
//!
//! Each functional integrates along a straight segment parametrised as
//! `t * start + (1 - t) * end` for `t` in `[0, 1]`, so the quadrature rules
//! of [`crate::quadrature`] apply directly. The weighted functionals carry
//! the weight inside the rule, which therefore must be a Gauss-Jacobi rule
//! with the matching exponent; mixing rule and functional is reported as a
//! [`Error::RuleMismatch`].

use crate::error::{Error, Result};
use crate::meshkit::{Point2, Triangle2};
use crate::quadrature::{QuadratureRule, WeightKind};
use crate::scalar::Real;

use super::af3::check_local_index;

/// Mean of `f` along edge `j` (the edge opposite vertex `j`):
/// `int_0^1 f(t v_{j+1} + (1-t) v_{j+2}) dt`.
///
/// `rule` must integrate with unit weight (Gauss-Legendre).
pub fn dof_cr<T, F>(tri: &Triangle2<T>, j: usize, f: F, rule: &QuadratureRule<T>) -> Result<T>
where
    T: Real,
    F: Fn(Point2<T>) -> T,
{
    check_local_index(j)?;
    if rule.weight_kind() != WeightKind::Unit {
        return Err(Error::RuleMismatch(
            "edge-mean functional needs a unit-weight rule".into(),
        ));
    }
    let start = tri.vertex(j + 1);
    let end = tri.vertex(j + 2);
    Ok(rule.integrate(|t| f(Point2::blend(start, end, t))))
}

/// Weighted integral of `f` from vertex `j` to the midpoint of the opposite
/// edge: `int_0^1 t^alpha (1-t)^alpha f(t v_j + (1-t) m_j) dt`.
///
/// `rule` must be a Gauss-Jacobi rule with exponent exactly `alpha`.
pub fn dof_f_enr<T, F>(
    tri: &Triangle2<T>,
    j: usize,
    alpha: T,
    f: F,
    rule: &QuadratureRule<T>,
) -> Result<T>
where
    T: Real,
    F: Fn(Point2<T>) -> T,
{
    check_local_index(j)?;
    check_jacobi_rule(rule, alpha)?;
    let start = tri.vertex(j);
    let end = tri.edge_midpoint(j);
    Ok(rule.integrate(|t| f(Point2::blend(start, end, t))))
}

/// Weighted integral of `f` from vertex `j` to the centroid:
/// `int_0^1 t^beta (1-t)^beta f(t v_j + (1-t) g) dt` with `g` the centroid.
///
/// `rule` must be a Gauss-Jacobi rule with exponent exactly `beta`.
pub fn dof_g_enr<T, F>(
    tri: &Triangle2<T>,
    j: usize,
    beta: T,
    f: F,
    rule: &QuadratureRule<T>,
) -> Result<T>
where
    T: Real,
    F: Fn(Point2<T>) -> T,
{
    check_local_index(j)?;
    check_jacobi_rule(rule, beta)?;
    let start = tri.vertex(j);
    let end = tri.centroid();
    Ok(rule.integrate(|t| f(Point2::blend(start, end, t))))
}

/// Value of `f` at vertex `j`.
pub fn dof_vertex<T, F>(tri: &Triangle2<T>, j: usize, f: F) -> Result<T>
where
    T: Real,
    F: Fn(Point2<T>) -> T,
{
    check_local_index(j)?;
    Ok(f(tri.vertex(j)))
}

fn check_jacobi_rule<T: Real>(rule: &QuadratureRule<T>, exponent: T) -> Result<()> {
    match rule.weight_kind() {
        WeightKind::Jacobi { alpha } if alpha == exponent => Ok(()),
        WeightKind::Jacobi { alpha } => Err(Error::RuleMismatch(format!(
            "weighted functional with exponent {exponent} got a rule with exponent {alpha}"
        ))),
        WeightKind::Unit => Err(Error::RuleMismatch(
            "weighted functional needs a Gauss-Jacobi rule, got a unit-weight rule".into(),
        )),
    }
}
