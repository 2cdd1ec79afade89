use std::ops::{Add, Mul, Sub};

use crate::error::{Error, Result};
use crate::scalar::Real;

/// Point (or vector) in the plane.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Point2<T> {
    pub x: T,
    pub y: T,
}

impl<T: Real> Point2<T> {
    pub fn new(x: T, y: T) -> Self {
        Point2 { x, y }
    }

    /// True when both coordinates are finite.
    pub fn is_finite(&self) -> bool {
        self.x.is_finite() && self.y.is_finite()
    }

    /// Euclidean distance to `other`.
    pub fn distance(&self, other: Point2<T>) -> T {
        let d = *self - other;
        (d.x * d.x + d.y * d.y).sqrt()
    }

    /// Convex combination `t*a + (1-t)*b`; the parametrisation used by every
    /// segment-based degree of freedom in this crate (`t = 1` is `a`).
    pub fn blend(a: Point2<T>, b: Point2<T>, t: T) -> Point2<T> {
        a * t + b * (T::one() - t)
    }
}

impl<T: Real> Add for Point2<T> {
    type Output = Point2<T>;

    fn add(self, rhs: Point2<T>) -> Point2<T> {
        Point2::new(self.x + rhs.x, self.y + rhs.y)
    }
}

impl<T: Real> Sub for Point2<T> {
    type Output = Point2<T>;

    fn sub(self, rhs: Point2<T>) -> Point2<T> {
        Point2::new(self.x - rhs.x, self.y - rhs.y)
    }
}

impl<T: Real> Mul<T> for Point2<T> {
    type Output = Point2<T>;

    fn mul(self, rhs: T) -> Point2<T> {
        Point2::new(self.x * rhs, self.y * rhs)
    }
}

/// Barycentric coordinates `(l1, l2, l3)` with respect to a triangle's
/// vertices; for points of the closed triangle all three lie in `[0, 1]` and
/// they always sum to 1.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Barycentric<T> {
    pub l1: T,
    pub l2: T,
    pub l3: T,
}

impl<T: Real> Barycentric<T> {
    pub fn new(l1: T, l2: T, l3: T) -> Self {
        Barycentric { l1, l2, l3 }
    }

    /// The `i`-th coordinate, 1-based and cyclic: index 4 wraps to 1 and
    /// index 5 wraps to 2, matching the vertex numbering convention.
    ///
    /// # Panics
    ///
    /// Panics if `i == 0`.
    pub fn get(&self, i: usize) -> T {
        assert!(i >= 1, "barycentric index is 1-based");
        match (i - 1) % 3 {
            0 => self.l1,
            1 => self.l2,
            _ => self.l3,
        }
    }

    /// Smallest of the three coordinates; negative outside the triangle.
    pub fn min(&self) -> T {
        self.l1.min(self.l2).min(self.l3)
    }
}

/// Signed area of the triangle `(a, b, c)`; positive for counter-clockwise
/// orientation.
fn signed_area_of<T: Real>(a: Point2<T>, b: Point2<T>, c: Point2<T>) -> T {
    let half = T::of(0.5);
    half * ((b.x - a.x) * (c.y - a.y) - (c.x - a.x) * (b.y - a.y))
}

/// Non-degenerate triangle with vertices `v1, v2, v3`.
///
/// Vertex indices are 1-based and cyclic throughout the crate: `vertex(4)`
/// is `v1` and `vertex(5)` is `v2`. Edge `j` is the edge opposite vertex
/// `j`, running between `vertex(j + 1)` and `vertex(j + 2)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Triangle2<T> {
    v: [Point2<T>; 3],
    signed_area: T,
}

impl<T: Real> Triangle2<T> {
    /// Builds a triangle, rejecting non-finite coordinates and (near-)
    /// degenerate vertex triples. A triangle counts as degenerate when its
    /// absolute area does not exceed `1e-14` times the squared longest edge,
    /// a scale-invariant thinness measure.
    pub fn new(v1: Point2<T>, v2: Point2<T>, v3: Point2<T>) -> Result<Self> {
        for v in [v1, v2, v3] {
            if !v.is_finite() {
                return Err(Error::geometry("triangle vertex has non-finite coordinate"));
            }
        }
        let signed_area = signed_area_of(v1, v2, v3);
        let longest_sq = [(v1, v2), (v2, v3), (v3, v1)]
            .iter()
            .map(|&(a, b)| {
                let d = a - b;
                d.x * d.x + d.y * d.y
            })
            .fold(T::zero(), T::max);
        if signed_area.abs() <= T::of(1e-14) * longest_sq {
            return Err(Error::geometry(format!(
                "degenerate triangle: area {signed_area:e} with squared longest edge {longest_sq:e}"
            )));
        }
        Ok(Triangle2 {
            v: [v1, v2, v3],
            signed_area,
        })
    }

    /// The `i`-th vertex, 1-based and cyclic (`vertex(4) == vertex(1)`).
    ///
    /// # Panics
    ///
    /// Panics if `i == 0`.
    pub fn vertex(&self, i: usize) -> Point2<T> {
        assert!(i >= 1, "vertex index is 1-based");
        self.v[(i - 1) % 3]
    }

    pub fn vertices(&self) -> [Point2<T>; 3] {
        self.v
    }

    /// Signed area; positive for counter-clockwise vertex order.
    pub fn signed_area(&self) -> T {
        self.signed_area
    }

    /// Absolute area.
    pub fn area(&self) -> T {
        self.signed_area.abs()
    }

    /// Length of the longest edge.
    pub fn diameter(&self) -> T {
        [
            self.v[0].distance(self.v[1]),
            self.v[1].distance(self.v[2]),
            self.v[2].distance(self.v[0]),
        ]
        .into_iter()
        .fold(T::zero(), T::max)
    }

    /// Midpoint of edge `j` (the edge opposite vertex `j`).
    pub fn edge_midpoint(&self, j: usize) -> Point2<T> {
        Point2::blend(self.vertex(j + 1), self.vertex(j + 2), T::of(0.5))
    }

    /// Centroid (intersection of the medians).
    pub fn centroid(&self) -> Point2<T> {
        let third = T::of(3.0).recip();
        (self.v[0] + self.v[1] + self.v[2]) * third
    }

    /// The three edge midpoints together with the centroid; the target
    /// endpoints of the two families of weighted line-integral degrees of
    /// freedom.
    pub fn special_points(&self) -> ([Point2<T>; 3], Point2<T>) {
        (
            [
                self.edge_midpoint(1),
                self.edge_midpoint(2),
                self.edge_midpoint(3),
            ],
            self.centroid(),
        )
    }

    /// Barycentric coordinates of `p`, computed as ratios of signed areas.
    /// The three coordinates sum to 1 exactly; points outside the triangle
    /// get negative entries.
    pub fn barycentric_at(&self, p: Point2<T>) -> Barycentric<T> {
        let l1 = signed_area_of(p, self.v[1], self.v[2]) / self.signed_area;
        let l2 = signed_area_of(self.v[0], p, self.v[2]) / self.signed_area;
        Barycentric::new(l1, l2, T::one() - l1 - l2)
    }

    /// Cartesian point with the given barycentric coordinates.
    pub fn point_at(&self, b: &Barycentric<T>) -> Point2<T> {
        self.v[0] * b.l1 + self.v[1] * b.l2 + self.v[2] * b.l3
    }

    /// True when `p` lies in the closed triangle, allowing barycentric
    /// coordinates down to `-tol`.
    pub fn contains(&self, p: Point2<T>, tol: T) -> bool {
        self.barycentric_at(p).min() >= -tol
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_abs_diff_eq;
    use proptest::prelude::*;

    fn unit_triangle() -> Triangle2<f64> {
        Triangle2::new(
            Point2::new(0.0, 0.0),
            Point2::new(1.0, 0.0),
            Point2::new(0.0, 1.0),
        )
        .unwrap()
    }

    #[test]
    fn signed_area_orientation() {
        let t = unit_triangle();
        assert_abs_diff_eq!(t.signed_area(), 0.5);
        let cw = Triangle2::new(
            Point2::new(0.0, 0.0),
            Point2::new(0.0, 1.0),
            Point2::new(1.0, 0.0),
        )
        .unwrap();
        assert_abs_diff_eq!(cw.signed_area(), -0.5);
    }

    #[test]
    fn degenerate_triangles_are_rejected() {
        // Collinear points.
        let r = Triangle2::new(
            Point2::new(0.0, 0.0),
            Point2::new(1.0, 1.0),
            Point2::new(2.0, 2.0),
        );
        assert!(matches!(r, Err(Error::Geometry(_))));
        // Thin sliver under the relative threshold: area scales with the
        // offset 1e-16 while the squared longest edge stays ~4.
        let r = Triangle2::new(
            Point2::new(0.0, 0.0),
            Point2::new(2.0, 0.0),
            Point2::new(1.0, 1e-16),
        );
        assert!(matches!(r, Err(Error::Geometry(_))));
        // The same shape scaled is equally degenerate: the test is
        // scale-invariant.
        let r = Triangle2::new(
            Point2::new(0.0, 0.0),
            Point2::new(2e-6, 0.0),
            Point2::new(1e-6, 1e-22),
        );
        assert!(matches!(r, Err(Error::Geometry(_))));
        // A small but well-shaped triangle is fine.
        assert!(Triangle2::new(
            Point2::new(0.0, 0.0),
            Point2::new(1e-6, 0.0),
            Point2::new(0.0, 1e-6),
        )
        .is_ok());
    }

    #[test]
    fn non_finite_vertex_is_rejected() {
        let r = Triangle2::new(
            Point2::new(0.0, 0.0),
            Point2::new(f64::NAN, 0.0),
            Point2::new(0.0, 1.0),
        );
        assert!(matches!(r, Err(Error::Geometry(_))));
    }

    #[test]
    fn vertex_indexing_wraps() {
        let t = unit_triangle();
        assert_eq!(t.vertex(4), t.vertex(1));
        assert_eq!(t.vertex(5), t.vertex(2));
    }

    #[test]
    fn centroid_has_equal_barycentric_coordinates() {
        let t = Triangle2::new(
            Point2::new(0.2, -0.1),
            Point2::new(1.7, 0.3),
            Point2::new(0.4, 1.9),
        )
        .unwrap();
        let b = t.barycentric_at(t.centroid());
        let third = 1.0 / 3.0;
        assert_abs_diff_eq!(b.l1, third, epsilon = 1e-15);
        assert_abs_diff_eq!(b.l2, third, epsilon = 1e-15);
        assert_abs_diff_eq!(b.l3, third, epsilon = 1e-15);
    }

    #[test]
    fn vertices_map_to_unit_coordinates() {
        let t = unit_triangle();
        let b = t.barycentric_at(t.vertex(2));
        assert_abs_diff_eq!(b.l1, 0.0);
        assert_abs_diff_eq!(b.l2, 1.0);
        assert_abs_diff_eq!(b.l3, 0.0);
    }

    #[test]
    fn edge_midpoints_and_centroid() {
        let t = unit_triangle();
        // Edge 1 is opposite v1, i.e. the hypotenuse from (1,0) to (0,1).
        let m1 = t.edge_midpoint(1);
        assert_abs_diff_eq!(m1.x, 0.5);
        assert_abs_diff_eq!(m1.y, 0.5);
        let (mids, centroid) = t.special_points();
        assert_eq!(mids[0], m1);
        assert_abs_diff_eq!(centroid.x, 1.0 / 3.0);
        assert_abs_diff_eq!(centroid.y, 1.0 / 3.0);
    }

    #[test]
    fn blend_parametrisation_endpoints() {
        let a = Point2::new(2.0, -1.0);
        let b = Point2::new(0.5, 4.0);
        assert_eq!(Point2::blend(a, b, 1.0), a);
        assert_eq!(Point2::blend(a, b, 0.0), b);
    }

    proptest! {
        // Round trip: barycentric coordinates reproduce the point and sum to
        // one exactly, for arbitrary well-shaped triangles.
        #[test]
        fn barycentric_round_trip(
            ax in -5.0f64..5.0, ay in -5.0f64..5.0,
            bx in -5.0f64..5.0, by in -5.0f64..5.0,
            cx in -5.0f64..5.0, cy in -5.0f64..5.0,
            s in 0.0f64..1.0, t in 0.0f64..1.0,
        ) {
            let (a, b, c) = (Point2::new(ax, ay), Point2::new(bx, by), Point2::new(cx, cy));
            if let Ok(tri) = Triangle2::new(a, b, c) {
                // Skip slivers close to the degeneracy threshold where the
                // area ratios lose digits.
                prop_assume!(tri.area() > 1e-3);
                let (l1, l2) = (s, t * (1.0 - s));
                let bary = Barycentric::new(l1, l2, 1.0 - l1 - l2);
                let p = tri.point_at(&bary);
                let back = tri.barycentric_at(p);
                prop_assert!((back.l1 + back.l2 + back.l3 - 1.0).abs() < 1e-14);
                prop_assert!((back.l1 - bary.l1).abs() < 1e-9);
                prop_assert!((back.l2 - bary.l2).abs() < 1e-9);
                let q = tri.point_at(&back);
                prop_assert!(p.distance(q) < 1e-9 * (1.0 + tri.diameter()));
            }
        }
    }
}
