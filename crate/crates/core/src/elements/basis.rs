//! Nodal bases dual to the degrees of freedom of each element.
//!
//! For both enrichment families the six local degrees of freedom are three
//! edge means plus three weighted segment integrals, and the corresponding
//! nodal basis splits into two triples: `edge_dual[i]` has edge means
//! `delta_ij` and vanishing weighted functionals, while `weighted_dual[i]`
//! has vanishing edge means and weighted functionals `delta_ij`. Expressed
//! in the quadratic shape basis both triples have closed-form coefficients,
//! so constructing a basis costs a handful of arithmetic operations and is
//! independent of the triangle geometry.

use crate::error::Result;
use crate::scalar::Real;

use super::af3::{LinOnTri, QuadOnTri};
use super::coefficients::{CAlphaCoefficients, EBetaCoefficients};

/// Nodal basis of an enriched element, in shape-basis coefficients.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EnrichedBasis<T> {
    /// `edge_dual[i]` responds 1 to the mean over edge `i+1` and 0 to every
    /// other degree of freedom.
    pub edge_dual: [QuadOnTri<T>; 3],
    /// `weighted_dual[i]` responds 1 to the weighted segment functional of
    /// vertex `i+1` and 0 to every other degree of freedom.
    pub weighted_dual: [QuadOnTri<T>; 3],
}

fn symmetric_triple<T: Real>(own: T, other: T, bubble: T, i: usize) -> QuadOnTri<T> {
    let mut vertex_values = [other; 3];
    vertex_values[i] = own;
    let mut edge_means = [T::zero(); 3];
    edge_means[i] = bubble;
    QuadOnTri::new(vertex_values, edge_means)
}

/// Nodal basis of the vertex-to-opposite-midpoint element with exponent
/// `alpha` (`alpha > -1`, `alpha != -6/7`).
pub fn basis_c_alpha<T: Real>(alpha: T) -> Result<EnrichedBasis<T>> {
    let co = CAlphaCoefficients::for_exponent(alpha)?;
    let scale = (co.gamma * co.l).recip();
    Ok(EnrichedBasis {
        edge_dual: std::array::from_fn(|i| symmetric_triple(co.c, co.d, T::one(), i)),
        weighted_dual: std::array::from_fn(|i| {
            symmetric_triple((co.k + co.h) * scale, -co.h * scale, T::zero(), i)
        }),
    })
}

/// Nodal basis of the vertex-to-centroid element with exponent `beta`
/// (`beta > -1`).
pub fn basis_e_beta<T: Real>(beta: T) -> Result<EnrichedBasis<T>> {
    let co = EBetaCoefficients::for_exponent(beta)?;
    let two = T::of(2.0);
    let scale = (co.nu * co.l).recip();
    Ok(EnrichedBasis {
        edge_dual: std::array::from_fn(|i| symmetric_triple(co.r, co.m, T::one(), i)),
        weighted_dual: std::array::from_fn(|i| {
            symmetric_triple((co.sigma - two) * scale, -co.sigma * scale, T::zero(), i)
        }),
    })
}

/// Nonconforming linear basis dual to the three edge means:
/// `theta_j = 1 - 2 l_j` satisfies `I_k(theta_j) = delta_jk`.
pub fn basis_cr<T: Real>() -> [LinOnTri<T>; 3] {
    let one = T::one();
    std::array::from_fn(|j| {
        let mut coeffs = [one; 3];
        coeffs[j] = -one;
        LinOnTri::new(coeffs)
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::elements::dofs::{dof_cr, dof_f_enr, dof_g_enr};
    use crate::elements::family::FamilyParameter;
    use crate::error::Error;
    use crate::meshkit::{Point2, Triangle2};
    use crate::quadrature::{gauss_jacobi, gauss_legendre, QuadratureRule};

    fn triangles() -> Vec<Triangle2<f64>> {
        vec![
            Triangle2::new(
                Point2::new(0.0, 0.0),
                Point2::new(1.0, 0.0),
                Point2::new(0.0, 1.0),
            )
            .unwrap(),
            Triangle2::new(
                Point2::new(0.2, -0.1),
                Point2::new(1.7, 0.3),
                Point2::new(0.4, 1.9),
            )
            .unwrap(),
            Triangle2::new(
                Point2::new(-3.0, 1.0),
                Point2::new(-1.0, 1.2),
                Point2::new(-2.5, 4.0),
            )
            .unwrap(),
        ]
    }

    fn apply_dofs(
        tri: &Triangle2<f64>,
        family: &FamilyParameter<f64>,
        q: &QuadOnTri<f64>,
        unit: &QuadratureRule<f64>,
        jacobi: &QuadratureRule<f64>,
    ) -> ([f64; 3], [f64; 3]) {
        let mut edge = [0.0; 3];
        let mut weighted = [0.0; 3];
        for j in 1..=3 {
            edge[j - 1] = dof_cr(tri, j, |p| q.eval(tri, p), unit).unwrap();
            weighted[j - 1] = match family {
                FamilyParameter::CAlpha(a) => {
                    dof_f_enr(tri, j, *a, |p| q.eval(tri, p), jacobi).unwrap()
                }
                FamilyParameter::EBeta(b) => {
                    dof_g_enr(tri, j, *b, |p| q.eval(tri, p), jacobi).unwrap()
                }
            };
        }
        (edge, weighted)
    }

    fn check_duality(family: FamilyParameter<f64>, basis: &EnrichedBasis<f64>) {
        let unit = gauss_legendre(16).unwrap();
        let jacobi = gauss_jacobi(16, family.exponent()).unwrap();
        for tri in triangles() {
            for i in 0..3 {
                let (edge, weighted) =
                    apply_dofs(&tri, &family, &basis.edge_dual[i], &unit, &jacobi);
                for j in 0..3 {
                    let want = if i == j { 1.0 } else { 0.0 };
                    assert!(
                        (edge[j] - want).abs() < 1e-12,
                        "edge-dual {i}, edge dof {j}: {edge:?}"
                    );
                    assert!(
                        weighted[j].abs() < 1e-12,
                        "edge-dual {i}, weighted dof {j}: {weighted:?}"
                    );
                }
                let (edge, weighted) =
                    apply_dofs(&tri, &family, &basis.weighted_dual[i], &unit, &jacobi);
                for j in 0..3 {
                    let want = if i == j { 1.0 } else { 0.0 };
                    assert!(
                        edge[j].abs() < 1e-12,
                        "weighted-dual {i}, edge dof {j}: {edge:?}"
                    );
                    assert!(
                        (weighted[j] - want).abs() < 1e-12,
                        "weighted-dual {i}, weighted dof {j}: {weighted:?}"
                    );
                }
            }
        }
    }

    #[test]
    fn c_alpha_basis_is_dual_to_its_dofs() {
        for &alpha in &[-0.9, -0.5, 0.0, 1.0, 3.0] {
            check_duality(
                FamilyParameter::c_alpha(alpha).unwrap(),
                &basis_c_alpha(alpha).unwrap(),
            );
        }
    }

    #[test]
    fn e_beta_basis_is_dual_to_its_dofs() {
        for &beta in &[-0.9, 0.0, 1.0, 3.0] {
            check_duality(
                FamilyParameter::e_beta(beta).unwrap(),
                &basis_e_beta(beta).unwrap(),
            );
        }
    }

    #[test]
    fn cr_basis_is_dual_to_edge_means() {
        let unit = gauss_legendre(8).unwrap();
        let theta = basis_cr::<f64>();
        for tri in triangles() {
            for (j, t) in theta.iter().enumerate() {
                for k in 1..=3 {
                    let got = dof_cr(&tri, k, |p| t.eval(&tri, p), &unit).unwrap();
                    let want = if k - 1 == j { 1.0 } else { 0.0 };
                    assert!((got - want).abs() < 1e-13, "theta_{j} on edge {k}: {got}");
                }
            }
        }
    }

    #[test]
    fn quadratics_are_reproduced_from_their_dofs() {
        // Expanding an arbitrary quadratic in the nodal basis using its own
        // degree-of-freedom values must give back the same polynomial.
        let q = QuadOnTri::new([0.7, -1.3, 2.1], [0.4, 0.9, -0.2]);
        let cases: Vec<(FamilyParameter<f64>, EnrichedBasis<f64>)> = vec![
            (
                FamilyParameter::c_alpha(1.0).unwrap(),
                basis_c_alpha(1.0).unwrap(),
            ),
            (
                FamilyParameter::e_beta(0.5).unwrap(),
                basis_e_beta(0.5).unwrap(),
            ),
        ];
        for (family, basis) in cases {
            let unit = gauss_legendre(16).unwrap();
            let jacobi = gauss_jacobi(16, family.exponent()).unwrap();
            for tri in triangles() {
                let (edge, weighted) = apply_dofs(&tri, &family, &q, &unit, &jacobi);
                let mut rebuilt = QuadOnTri::zero();
                for i in 0..3 {
                    rebuilt.add_scaled(edge[i], &basis.edge_dual[i]);
                    rebuilt.add_scaled(weighted[i], &basis.weighted_dual[i]);
                }
                for i in 0..3 {
                    assert!(
                        (rebuilt.vertex_values[i] - q.vertex_values[i]).abs() < 1e-11,
                        "vertex coefficient {i}: {rebuilt:?}"
                    );
                    assert!(
                        (rebuilt.edge_means[i] - q.edge_means[i]).abs() < 1e-11,
                        "edge coefficient {i}: {rebuilt:?}"
                    );
                }
            }
        }
    }

    #[test]
    fn singular_exponent_has_no_basis() {
        assert!(matches!(
            basis_c_alpha(-6.0f64 / 7.0),
            Err(Error::SingularParameter(_))
        ));
        assert!(basis_e_beta(-6.0f64 / 7.0).is_ok());
    }
}
