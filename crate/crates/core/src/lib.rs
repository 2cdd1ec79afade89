//! Nonconforming Crouzeix-Raviart triangular elements enriched to quadratic
//! accuracy by one extra weighted line-integral degree of freedom per edge.
//!
//! Two enrichment families are provided, both parametrised by the exponent of
//! a symmetric Jacobi-type weight `t^p (1-t)^p` on the unit interval:
//!
//! * `CAlpha`: the weighted integrals run from each vertex to the midpoint of
//!   the opposite edge, valid for `alpha > -1` except `alpha = -6/7`;
//! * `EBeta`: the weighted integrals run from each vertex to the centroid,
//!   valid for every `beta > -1`.
//!
//! The crate is organised bottom-up: [`meshkit`] (points, triangles, meshes,
//! mesh file ingestion), [`quadrature`] (Gauss-Legendre and Gauss-Jacobi rules
//! on the unit interval, composite symmetric rules on triangles),
//! [`elements`] (degrees of freedom, coefficient ledgers, local bases),
//! [`operators`] (local and global interpolation), and [`experiments`]
//! (reference functions, L1 error measurement, convergence studies, table
//! output).
//!
//! All numerical code is generic over the scalar type through [`Real`], which
//! is implemented for `f32` and `f64`; the crate root exports `f64` aliases
//! for the common types.

pub mod elements;
pub mod error;
pub mod experiments;
pub mod meshkit;
pub mod operators;
pub mod quadrature;
mod scalar;

pub use error::{Error, Result};
pub use scalar::Real;

/// Double-precision point in the plane.
pub type Point2D = meshkit::Point2<f64>;
/// Double-precision triangle.
pub type Triangle2D = meshkit::Triangle2<f64>;
/// Double-precision barycentric coordinate triple.
pub type Barycentric = meshkit::Barycentric<f64>;
/// Double-precision triangulation.
pub type TriMesh = meshkit::TriMesh<f64>;
/// Double-precision quadrature rule on the unit interval.
pub type QuadratureRule = quadrature::QuadratureRule<f64>;
/// Double-precision quadratic polynomial on a triangle.
pub type QuadOnTri = elements::QuadOnTri<f64>;
/// Double-precision interpolation scheme description.
pub type Scheme = operators::Scheme<f64>;
