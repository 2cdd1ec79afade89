//! The quadratic shape basis used as the internal representation of every
//! enriched local polynomial, together with small value types for linear and
//! quadratic polynomials on a triangle.
//!
//! The basis splits the six degrees of freedom of a quadratic into vertex
//! values and edge means: `phi_i` takes value 1 at vertex `i`, vanishes at
//! the other vertices, and has zero mean on all three edges, while the bump
//! `bubble_i` has zero vertex values and edge mean 1 on edge `i` (the edge
//! opposite vertex `i`) and 0 on the others. Any quadratic `p` therefore
//! expands as `p = sum_k p(v_k) phi_k + sum_k I_k(p) bubble_k` with `I_k`
//! the edge-mean functionals.

use crate::error::{Error, Result};
use crate::meshkit::{Barycentric, Point2, Triangle2};
use crate::scalar::Real;

pub(crate) fn check_local_index(i: usize) -> Result<()> {
    if (1..=3).contains(&i) {
        Ok(())
    } else {
        Err(Error::argument(format!(
            "local index must be 1, 2, or 3, got {i}"
        )))
    }
}

/// Vertex shape function `phi_i = l_i (1 - 3 l_{i+1} - 3 l_{i+2})` in
/// barycentric coordinates, `i` in `1..=3`.
pub fn af3_phi_bary<T: Real>(i: usize, b: &Barycentric<T>) -> Result<T> {
    check_local_index(i)?;
    let three = T::of(3.0);
    Ok(b.get(i) * (T::one() - three * b.get(i + 1) - three * b.get(i + 2)))
}

/// Vertex shape function `phi_i` evaluated at a point of `tri`.
pub fn af3_phi<T: Real>(tri: &Triangle2<T>, i: usize, p: Point2<T>) -> Result<T> {
    af3_phi_bary(i, &tri.barycentric_at(p))
}

/// Edge bump `bubble_i = 6 l_{i+1} l_{i+2}` in barycentric coordinates,
/// `i` in `1..=3`.
pub fn af3_bubble_bary<T: Real>(i: usize, b: &Barycentric<T>) -> Result<T> {
    check_local_index(i)?;
    Ok(T::of(6.0) * b.get(i + 1) * b.get(i + 2))
}

/// Edge bump `bubble_i` evaluated at a point of `tri`.
pub fn af3_bubble<T: Real>(tri: &Triangle2<T>, i: usize, p: Point2<T>) -> Result<T> {
    af3_bubble_bary(i, &tri.barycentric_at(p))
}

/// Quadratic polynomial on a triangle, stored by its coefficients in the
/// shape basis; because the basis is dual to those functionals, the
/// coefficients are literally the polynomial's vertex values and edge means.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct QuadOnTri<T> {
    pub vertex_values: [T; 3],
    pub edge_means: [T; 3],
}

impl<T: Real> QuadOnTri<T> {
    pub fn new(vertex_values: [T; 3], edge_means: [T; 3]) -> Self {
        QuadOnTri {
            vertex_values,
            edge_means,
        }
    }

    pub fn zero() -> Self {
        QuadOnTri {
            vertex_values: [T::zero(); 3],
            edge_means: [T::zero(); 3],
        }
    }

    /// Evaluates the polynomial at barycentric coordinates `b`.
    pub fn eval_bary(&self, b: &Barycentric<T>) -> T {
        let one = T::one();
        let three = T::of(3.0);
        let six = T::of(6.0);
        let mut acc = T::zero();
        for i in 1..=3 {
            let (li, lj, lk) = (b.get(i), b.get(i + 1), b.get(i + 2));
            let phi = li * (one - three * lj - three * lk);
            let bubble = six * lj * lk;
            acc = acc + self.vertex_values[i - 1] * phi + self.edge_means[i - 1] * bubble;
        }
        acc
    }

    /// Evaluates the polynomial at a point of `tri`.
    pub fn eval(&self, tri: &Triangle2<T>, p: Point2<T>) -> T {
        self.eval_bary(&tri.barycentric_at(p))
    }

    /// Adds `coeff * other` in place.
    pub fn add_scaled(&mut self, coeff: T, other: &QuadOnTri<T>) {
        for i in 0..3 {
            self.vertex_values[i] = self.vertex_values[i] + coeff * other.vertex_values[i];
            self.edge_means[i] = self.edge_means[i] + coeff * other.edge_means[i];
        }
    }
}

/// Linear polynomial on a triangle, stored by its coefficients with respect
/// to the barycentric coordinate functions: `p = sum_i c_i l_i`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LinOnTri<T> {
    pub lambda_coeffs: [T; 3],
}

impl<T: Real> LinOnTri<T> {
    pub fn new(lambda_coeffs: [T; 3]) -> Self {
        LinOnTri { lambda_coeffs }
    }

    pub fn eval_bary(&self, b: &Barycentric<T>) -> T {
        let c = &self.lambda_coeffs;
        c[0] * b.l1 + c[1] * b.l2 + c[2] * b.l3
    }

    pub fn eval(&self, tri: &Triangle2<T>, p: Point2<T>) -> T {
        self.eval_bary(&tri.barycentric_at(p))
    }
}
