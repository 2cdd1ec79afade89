//! Planar geometry: points, triangles, barycentric coordinates, conforming
//! triangulations, structured grid generation, and mesh file ingestion.

mod geometry;
mod io;
mod mesh;

pub use geometry::{Barycentric, Point2, Triangle2};
pub use io::load_triangle_mesh;
pub use mesh::{uniform_grid_mesh, TriMesh};
