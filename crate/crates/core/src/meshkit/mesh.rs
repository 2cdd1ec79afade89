use std::collections::BTreeSet;

use crate::error::{Error, Result};
use crate::scalar::Real;

use super::geometry::{Point2, Triangle2};

/// Conforming triangulation: a vertex table plus counter-validated cells
/// storing 0-based vertex indices.
#[derive(Debug, Clone, PartialEq)]
pub struct TriMesh<T> {
    vertices: Vec<Point2<T>>,
    cells: Vec<[usize; 3]>,
}

impl<T: Real> TriMesh<T> {
    /// Builds a mesh from a vertex table and cells of 0-based indices.
    ///
    /// Rejects non-finite coordinates, out-of-range vertex references,
    /// degenerate cells, duplicate cells (in any vertex order), and empty
    /// input.
    pub fn new(vertices: Vec<Point2<T>>, cells: Vec<[usize; 3]>) -> Result<Self> {
        if vertices.len() < 3 {
            return Err(Error::geometry("mesh needs at least 3 vertices"));
        }
        if cells.is_empty() {
            return Err(Error::geometry("mesh has no cells"));
        }
        for (i, v) in vertices.iter().enumerate() {
            if !v.is_finite() {
                return Err(Error::geometry(format!(
                    "vertex {i} has non-finite coordinates"
                )));
            }
        }
        let mut seen = BTreeSet::new();
        for (c, cell) in cells.iter().enumerate() {
            for &k in cell {
                if k >= vertices.len() {
                    return Err(Error::geometry(format!(
                        "cell {c} references vertex {k}, but the mesh has {} vertices",
                        vertices.len()
                    )));
                }
            }
            let mut key = *cell;
            key.sort_unstable();
            if key[0] == key[1] || key[1] == key[2] {
                return Err(Error::geometry(format!("cell {c} repeats a vertex")));
            }
            if !seen.insert(key) {
                return Err(Error::geometry(format!("cell {c} duplicates another cell")));
            }
            Triangle2::new(vertices[cell[0]], vertices[cell[1]], vertices[cell[2]])
                .map_err(|e| Error::geometry(format!("cell {c}: {e}")))?;
        }
        Ok(TriMesh { vertices, cells })
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    /// Number of triangles, written `N` in tables and reports.
    pub fn triangle_count(&self) -> usize {
        self.cells.len()
    }

    pub fn vertices(&self) -> &[Point2<T>] {
        &self.vertices
    }

    /// 0-based vertex indices of cell `i`.
    ///
    /// # Panics
    ///
    /// Panics if `i` is out of range.
    pub fn cell(&self, i: usize) -> [usize; 3] {
        self.cells[i]
    }

    /// Geometric triangle of cell `i`.
    ///
    /// # Panics
    ///
    /// Panics if `i` is out of range.
    pub fn triangle(&self, i: usize) -> Triangle2<T> {
        let [a, b, c] = self.cells[i];
        // Cells were validated at construction, so this cannot fail.
        Triangle2::new(self.vertices[a], self.vertices[b], self.vertices[c])
            .expect("cells validated at construction")
    }

    /// Iterates over all cell triangles in index order.
    pub fn triangles(&self) -> impl Iterator<Item = Triangle2<T>> + '_ {
        (0..self.cells.len()).map(move |i| self.triangle(i))
    }

    /// Index of the first (lowest-index) cell containing `p`, with
    /// barycentric coordinates allowed down to `-1e-12` so that points on
    /// shared edges are found reliably. Returns `None` when `p` lies outside
    /// the triangulated domain.
    pub fn locate(&self, p: Point2<T>) -> Option<usize> {
        let tol = T::of(1e-12);
        (0..self.cells.len()).find(|&i| self.triangle(i).contains(p, tol))
    }

    /// Longest edge length over all cells.
    pub fn max_diameter(&self) -> T {
        self.triangles()
            .map(|t| t.diameter())
            .fold(T::zero(), T::max)
    }

    /// Sum of cell areas.
    pub fn total_area(&self) -> T {
        self.triangles()
            .map(|t| t.area())
            .fold(T::zero(), |a, b| a + b)
    }
}

/// Structured triangulation of the unit square `[0, 1]^2`: an `n x n` grid of
/// squares, each split into two triangles by the diagonal from its
/// bottom-right to its top-left corner, giving `N = 2 n^2` triangles.
pub fn uniform_grid_mesh<T: Real>(n: usize) -> Result<TriMesh<T>> {
    if n == 0 {
        return Err(Error::argument("grid subdivision count must be at least 1"));
    }
    let step = T::of(n).recip();
    let mut vertices = Vec::with_capacity((n + 1) * (n + 1));
    for j in 0..=n {
        for i in 0..=n {
            vertices.push(Point2::new(T::of(i) * step, T::of(j) * step));
        }
    }
    let at = |i: usize, j: usize| j * (n + 1) + i;
    let mut cells = Vec::with_capacity(2 * n * n);
    for j in 0..n {
        for i in 0..n {
            // Diagonal from the bottom-right to the top-left corner of the
            // cell; both triangles are counter-clockwise.
            cells.push([at(i, j), at(i + 1, j), at(i, j + 1)]);
            cells.push([at(i + 1, j), at(i + 1, j + 1), at(i, j + 1)]);
        }
    }
    TriMesh::new(vertices, cells)
}
