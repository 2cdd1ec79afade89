//! Unisolvence diagnostics: the 6x6 matrix of all degrees of freedom applied
//! to a monomial basis of the quadratics, and its determinant. A nonzero
//! determinant certifies that the six functionals determine a quadratic
//! uniquely on the given triangle.

use crate::error::Result;
use crate::meshkit::{Point2, Triangle2};
use crate::quadrature::{gauss_jacobi, gauss_legendre};
use crate::scalar::Real;

use super::dofs::{dof_cr, dof_f_enr, dof_g_enr};
use super::family::FamilyParameter;

/// Matrix with rows `I_1, I_2, I_3` (edge means) followed by the three
/// weighted segment functionals of `family`, and columns the monomials
/// `l_1, l_2, l_3, l_1^2, l_2^2, l_3^2` in barycentric coordinates of
/// `tri`. All entries are computed with `quadrature_order`-point rules,
/// which are exact here from order 2 upward.
pub fn unisolvence_matrix<T: Real>(
    tri: &Triangle2<T>,
    family: &FamilyParameter<T>,
    quadrature_order: usize,
) -> Result<[[T; 6]; 6]> {
    let unit = gauss_legendre(quadrature_order)?;
    let jacobi = gauss_jacobi(quadrature_order, family.exponent())?;
    let monomial = |col: usize, p: Point2<T>| -> T {
        let b = tri.barycentric_at(p);
        if col < 3 {
            b.get(col + 1)
        } else {
            let v = b.get(col - 2);
            v * v
        }
    };
    let mut m = [[T::zero(); 6]; 6];
    let (edge_rows, weighted_rows) = m.split_at_mut(3);
    for j in 1..=3 {
        for (col, entry) in edge_rows[j - 1].iter_mut().enumerate() {
            *entry = dof_cr(tri, j, |p| monomial(col, p), &unit)?;
        }
        for (col, entry) in weighted_rows[j - 1].iter_mut().enumerate() {
            *entry = match family {
                FamilyParameter::CAlpha(a) => dof_f_enr(tri, j, *a, |p| monomial(col, p), &jacobi)?,
                FamilyParameter::EBeta(b) => dof_g_enr(tri, j, *b, |p| monomial(col, p), &jacobi)?,
            };
        }
    }
    Ok(m)
}

/// Determinant of [`unisolvence_matrix`] via Gaussian elimination with
/// partial pivoting. Because the monomial columns are geometry-independent
/// in barycentric coordinates, the value depends only on the family
/// parameter; it equals the moment-matrix determinant divided by 108.
pub fn unisolvence_determinant<T: Real>(
    tri: &Triangle2<T>,
    family: &FamilyParameter<T>,
    quadrature_order: usize,
) -> Result<T> {
    Ok(det6(unisolvence_matrix(tri, family, quadrature_order)?))
}

fn det6<T: Real>(mut m: [[T; 6]; 6]) -> T {
    let mut det = T::one();
    for col in 0..6 {
        let pivot_row = (col..6)
            .max_by(|&a, &b| {
                m[a][col]
                    .abs()
                    .partial_cmp(&m[b][col].abs())
                    .expect("finite entries")
            })
            .expect("non-empty range");
        if m[pivot_row][col] == T::zero() {
            return T::zero();
        }
        if pivot_row != col {
            m.swap(pivot_row, col);
            det = -det;
        }
        let pivot = m[col][col];
        det = det * pivot;
        let (done, active) = m.split_at_mut(col + 1);
        let pivot_row = &done[col];
        for row in active.iter_mut() {
            let factor = row[col] / pivot;
            for (c, entry) in row.iter_mut().enumerate().skip(col) {
                *entry = *entry - factor * pivot_row[c];
            }
        }
    }
    det
}
