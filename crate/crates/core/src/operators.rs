//! Interpolation operators: a [`Scheme`] selects the element (plain
//! nonconforming linear, or one of the two quadratic enrichment families)
//! and how accurately its degrees of freedom are evaluated; local and global
//! interpolants apply the scheme to a function on one triangle or on a whole
//! mesh.

use crate::elements::{
    basis_c_alpha, basis_e_beta, dof_cr, dof_f_enr, dof_g_enr, EnrichedBasis, FamilyParameter,
    QuadOnTri,
};
use crate::error::{Error, Result};
use crate::meshkit::{Barycentric, Point2, TriMesh, Triangle2};
use crate::quadrature::{gauss_jacobi, gauss_legendre, QuadratureRule, MAX_NODES};
use crate::scalar::Real;

/// Default number of quadrature nodes per degree-of-freedom segment; enough
/// to make the DoF evaluation error negligible against the interpolation
/// error for smooth functions.
pub const DEFAULT_DOF_QUADRATURE_ORDER: usize = 16;

/// The element a scheme interpolates with.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum SchemeKind<T> {
    /// Nonconforming linear element with edge-mean degrees of freedom.
    CrouzeixRaviart,
    /// Quadratic enrichment with weighted integrals toward the opposite-edge
    /// midpoints, exponent `alpha`.
    CAlpha(T),
    /// Quadratic enrichment with weighted integrals toward the centroid,
    /// exponent `beta`.
    EBeta(T),
}

/// A validated interpolation scheme: element kind plus the node count of the
/// Gaussian rules used to evaluate its segment degrees of freedom.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Scheme<T> {
    kind: SchemeKind<T>,
    dof_quadrature_order: usize,
}

impl<T: Real> Scheme<T> {
    /// Plain nonconforming linear scheme.
    pub fn cr() -> Self {
        Scheme {
            kind: SchemeKind::CrouzeixRaviart,
            dof_quadrature_order: DEFAULT_DOF_QUADRATURE_ORDER,
        }
    }

    /// Midpoint-family scheme with exponent `alpha` (`> -1`, not `-6/7`).
    pub fn c_alpha(alpha: T) -> Result<Self> {
        FamilyParameter::c_alpha(alpha)?;
        Ok(Scheme {
            kind: SchemeKind::CAlpha(alpha),
            dof_quadrature_order: DEFAULT_DOF_QUADRATURE_ORDER,
        })
    }

    /// Centroid-family scheme with exponent `beta` (`> -1`).
    pub fn e_beta(beta: T) -> Result<Self> {
        FamilyParameter::e_beta(beta)?;
        Ok(Scheme {
            kind: SchemeKind::EBeta(beta),
            dof_quadrature_order: DEFAULT_DOF_QUADRATURE_ORDER,
        })
    }

    /// Same scheme with a different degree-of-freedom quadrature order
    /// (`1..=64`).
    pub fn with_dof_quadrature_order(mut self, order: usize) -> Result<Self> {
        if order == 0 || order > MAX_NODES {
            return Err(Error::argument(format!(
                "quadrature order must lie in 1..={MAX_NODES}, got {order}"
            )));
        }
        self.dof_quadrature_order = order;
        Ok(self)
    }

    pub fn kind(&self) -> &SchemeKind<T> {
        &self.kind
    }

    pub fn dof_quadrature_order(&self) -> usize {
        self.dof_quadrature_order
    }

    /// The enrichment family, `None` for the plain linear scheme.
    pub fn family(&self) -> Option<FamilyParameter<T>> {
        match self.kind {
            SchemeKind::CrouzeixRaviart => None,
            // Parameters were validated at construction.
            SchemeKind::CAlpha(a) => Some(FamilyParameter::CAlpha(a)),
            SchemeKind::EBeta(b) => Some(FamilyParameter::EBeta(b)),
        }
    }

    /// Number of local degrees of freedom (3 linear, 6 enriched).
    pub fn dof_count(&self) -> usize {
        match self.kind {
            SchemeKind::CrouzeixRaviart => 3,
            _ => 6,
        }
    }

    /// Short name of the element kind: `cr`, `c-alpha`, or `e-beta`.
    pub fn kind_name(&self) -> &'static str {
        match self.kind {
            SchemeKind::CrouzeixRaviart => "cr",
            SchemeKind::CAlpha(_) => "c-alpha",
            SchemeKind::EBeta(_) => "e-beta",
        }
    }

    /// Display label, e.g. `cr`, `c-alpha:1`, `e-beta:0.5`.
    pub fn label(&self) -> String {
        match self.kind {
            SchemeKind::CrouzeixRaviart => "cr".to_string(),
            SchemeKind::CAlpha(a) => format!("c-alpha:{a}"),
            SchemeKind::EBeta(b) => format!("e-beta:{b}"),
        }
    }
}

/// Coefficients of a local interpolant.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum LocalCoeffs<T> {
    /// Edge-mean values; the polynomial is their combination with the
    /// nonconforming linear basis `theta_j = 1 - 2 l_j`.
    EdgeMeans([T; 3]),
    /// Enriched quadratic in shape-basis coefficients.
    Quadratic(QuadOnTri<T>),
}

/// Interpolating polynomial on one triangle.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LocalInterpolant<T> {
    /// Cell index within the originating mesh; 0 for standalone use.
    pub tri_index: usize,
    /// Scheme the interpolant was built with.
    pub scheme: Scheme<T>,
    /// Polynomial coefficients.
    pub coeffs: LocalCoeffs<T>,
}

impl<T: Real> LocalInterpolant<T> {
    /// Evaluates the polynomial at barycentric coordinates of its triangle.
    pub fn eval_bary(&self, b: &Barycentric<T>) -> T {
        match &self.coeffs {
            LocalCoeffs::EdgeMeans(c) => {
                let one = T::one();
                let two = T::of(2.0);
                (1..=3)
                    .map(|j| c[j - 1] * (one - two * b.get(j)))
                    .fold(T::zero(), |a, v| a + v)
            }
            LocalCoeffs::Quadratic(q) => q.eval_bary(b),
        }
    }
}

/// Pre-built quadrature rules and nodal basis shared by all triangles of a
/// scheme; building them once per mesh dominates no profile at all.
struct SchemeApparatus<T> {
    unit_rule: QuadratureRule<T>,
    enriched: Option<(QuadratureRule<T>, EnrichedBasis<T>)>,
}

impl<T: Real> SchemeApparatus<T> {
    fn build(scheme: &Scheme<T>) -> Result<Self> {
        let order = scheme.dof_quadrature_order();
        let unit_rule = gauss_legendre(order)?;
        let enriched = match *scheme.kind() {
            SchemeKind::CrouzeixRaviart => None,
            SchemeKind::CAlpha(alpha) => Some((gauss_jacobi(order, alpha)?, basis_c_alpha(alpha)?)),
            SchemeKind::EBeta(beta) => Some((gauss_jacobi(order, beta)?, basis_e_beta(beta)?)),
        };
        Ok(SchemeApparatus {
            unit_rule,
            enriched,
        })
    }

    fn interpolate<F>(
        &self,
        tri: &Triangle2<T>,
        scheme: &Scheme<T>,
        f: &F,
        tri_index: usize,
    ) -> Result<LocalInterpolant<T>>
    where
        F: Fn(Point2<T>) -> T,
    {
        let coeffs = match (&scheme.kind, &self.enriched) {
            (SchemeKind::CrouzeixRaviart, _) => {
                let mut c = [T::zero(); 3];
                for j in 1..=3 {
                    c[j - 1] = dof_cr(tri, j, f, &self.unit_rule)?;
                }
                LocalCoeffs::EdgeMeans(c)
            }
            (kind, Some((jacobi_rule, basis))) => {
                let mut q = QuadOnTri::zero();
                for j in 1..=3 {
                    let edge = dof_cr(tri, j, f, &self.unit_rule)?;
                    q.add_scaled(edge, &basis.edge_dual[j - 1]);
                    let weighted = match kind {
                        SchemeKind::CAlpha(a) => dof_f_enr(tri, j, *a, f, jacobi_rule)?,
                        SchemeKind::EBeta(b) => dof_g_enr(tri, j, *b, f, jacobi_rule)?,
                        SchemeKind::CrouzeixRaviart => unreachable!(),
                    };
                    q.add_scaled(weighted, &basis.weighted_dual[j - 1]);
                }
                LocalCoeffs::Quadratic(q)
            }
            _ => unreachable!("apparatus built for this scheme"),
        };
        Ok(LocalInterpolant {
            tri_index,
            scheme: *scheme,
            coeffs,
        })
    }
}

/// Interpolates `f` on a single triangle.
pub fn interpolate_local<T, F>(
    tri: &Triangle2<T>,
    scheme: &Scheme<T>,
    f: F,
) -> Result<LocalInterpolant<T>>
where
    T: Real,
    F: Fn(Point2<T>) -> T,
{
    SchemeApparatus::build(scheme)?.interpolate(tri, scheme, &f, 0)
}

/// Evaluates a local interpolant at a point of its triangle; points with a
/// barycentric coordinate below `-1e-10` are outside and rejected.
pub fn evaluate_local<T: Real>(
    interp: &LocalInterpolant<T>,
    tri: &Triangle2<T>,
    p: Point2<T>,
) -> Result<T> {
    let b = tri.barycentric_at(p);
    if b.min() < -T::of(1e-10) {
        return Err(Error::domain(format!(
            "point ({}, {}) lies outside the triangle",
            p.x, p.y
        )));
    }
    Ok(interp.eval_bary(&b))
}

/// Piecewise interpolant over a whole mesh.
#[derive(Debug, Clone)]
pub struct GlobalApproximant<'m, T> {
    mesh: &'m TriMesh<T>,
    scheme: Scheme<T>,
    locals: Vec<LocalInterpolant<T>>,
}

impl<'m, T: Real> GlobalApproximant<'m, T> {
    pub fn mesh(&self) -> &'m TriMesh<T> {
        self.mesh
    }

    pub fn scheme(&self) -> &Scheme<T> {
        &self.scheme
    }

    /// Local interpolant of cell `i`.
    ///
    /// # Panics
    ///
    /// Panics if `i` is out of range.
    pub fn local(&self, i: usize) -> &LocalInterpolant<T> {
        &self.locals[i]
    }

    pub fn locals(&self) -> &[LocalInterpolant<T>] {
        &self.locals
    }

    /// Evaluates the approximant at `p`, or `None` outside the mesh. On
    /// edges shared by two cells the lowest-index cell wins; the two
    /// polynomials agree there only in their edge means, not pointwise.
    pub fn evaluate(&self, p: Point2<T>) -> Option<T> {
        let i = self.mesh.locate(p)?;
        let b = self.mesh.triangle(i).barycentric_at(p);
        Some(self.locals[i].eval_bary(&b))
    }
}

/// Interpolates `f` cell by cell over `mesh`. Cells are processed in index
/// order, so the result is deterministic.
pub fn interpolate_global<'m, T, F>(
    mesh: &'m TriMesh<T>,
    scheme: &Scheme<T>,
    f: F,
) -> Result<GlobalApproximant<'m, T>>
where
    T: Real,
    F: Fn(Point2<T>) -> T,
{
    let apparatus = SchemeApparatus::build(scheme)?;
    let mut locals = Vec::with_capacity(mesh.triangle_count());
    for i in 0..mesh.triangle_count() {
        let tri = mesh.triangle(i);
        locals.push(apparatus.interpolate(&tri, scheme, &f, i)?);
    }
    Ok(GlobalApproximant {
        mesh,
        scheme: *scheme,
        locals,
    })
}

/// Largest absolute difference between the degrees of freedom of `f` and
/// those of its interpolant on `tri`: a direct projection-property check,
/// zero up to quadrature and rounding error.
pub fn dof_consistency<T, F>(interp: &LocalInterpolant<T>, tri: &Triangle2<T>, f: F) -> Result<T>
where
    T: Real,
    F: Fn(Point2<T>) -> T,
{
    let scheme = interp.scheme;
    let apparatus = SchemeApparatus::build(&scheme)?;
    let p_eval = |p: Point2<T>| interp.eval_bary(&tri.barycentric_at(p));
    let mut worst = T::zero();
    for j in 1..=3 {
        let a = dof_cr(tri, j, &f, &apparatus.unit_rule)?;
        let b = dof_cr(tri, j, p_eval, &apparatus.unit_rule)?;
        worst = worst.max((a - b).abs());
        if let Some((jacobi_rule, _)) = &apparatus.enriched {
            let (a, b) = match scheme.kind {
                SchemeKind::CAlpha(al) => (
                    dof_f_enr(tri, j, al, &f, jacobi_rule)?,
                    dof_f_enr(tri, j, al, p_eval, jacobi_rule)?,
                ),
                SchemeKind::EBeta(be) => (
                    dof_g_enr(tri, j, be, &f, jacobi_rule)?,
                    dof_g_enr(tri, j, be, p_eval, jacobi_rule)?,
                ),
                SchemeKind::CrouzeixRaviart => unreachable!(),
            };
            worst = worst.max((a - b).abs());
        }
    }
    Ok(worst)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::meshkit::uniform_grid_mesh;
    use approx::assert_abs_diff_eq;

    fn unit_triangle() -> Triangle2<f64> {
        Triangle2::new(
            Point2::new(0.0, 0.0),
            Point2::new(1.0, 0.0),
            Point2::new(0.0, 1.0),
        )
        .unwrap()
    }

    fn skewed_triangle() -> Triangle2<f64> {
        Triangle2::new(
            Point2::new(0.2, -0.1),
            Point2::new(1.7, 0.3),
            Point2::new(0.4, 1.9),
        )
        .unwrap()
    }

    #[test]
    fn scheme_validation_and_labels() {
        assert_eq!(Scheme::<f64>::cr().label(), "cr");
        assert_eq!(Scheme::c_alpha(1.0f64).unwrap().label(), "c-alpha:1");
        assert_eq!(Scheme::e_beta(0.5f64).unwrap().label(), "e-beta:0.5");
        assert_eq!(Scheme::<f64>::cr().dof_count(), 3);
        assert_eq!(Scheme::c_alpha(1.0f64).unwrap().dof_count(), 6);
        assert!(matches!(
            Scheme::c_alpha(-6.0f64 / 7.0),
            Err(Error::SingularParameter(_))
        ));
        assert!(matches!(Scheme::e_beta(-1.0f64), Err(Error::Domain(_))));
        assert!(matches!(
            Scheme::<f64>::cr().with_dof_quadrature_order(0),
            Err(Error::Argument(_))
        ));
        assert!(matches!(
            Scheme::<f64>::cr().with_dof_quadrature_order(65),
            Err(Error::Argument(_))
        ));
        assert_eq!(
            Scheme::<f64>::cr()
                .with_dof_quadrature_order(24)
                .unwrap()
                .dof_quadrature_order(),
            24
        );
    }

    #[test]
    fn cr_reproduces_affine_functions() {
        let f = |p: Point2<f64>| 3.0 * p.x - 2.0 * p.y + 0.25;
        for tri in [unit_triangle(), skewed_triangle()] {
            let interp = interpolate_local(&tri, &Scheme::cr(), f).unwrap();
            for &(s, t) in &[(0.2, 0.3), (0.0, 0.0), (1.0, 0.0), (0.3, 0.7)] {
                let b = Barycentric::new(s, t, 1.0 - s - t);
                let p = tri.point_at(&b);
                assert_abs_diff_eq!(interp.eval_bary(&b), f(p), epsilon = 1e-13);
            }
        }
    }

    #[test]
    fn enriched_schemes_reproduce_quadratics() {
        let f = |p: Point2<f64>| 1.5 * p.x * p.x - p.x * p.y + 0.5 * p.y * p.y + p.x - 2.0;
        let schemes = [
            Scheme::c_alpha(1.0).unwrap(),
            Scheme::c_alpha(-0.5).unwrap(),
            Scheme::e_beta(0.0).unwrap(),
            Scheme::e_beta(2.0).unwrap(),
        ];
        for tri in [unit_triangle(), skewed_triangle()] {
            for scheme in &schemes {
                let interp = interpolate_local(&tri, scheme, f).unwrap();
                for &(s, t) in &[(0.1, 0.2), (0.5, 0.5), (0.0, 1.0), (0.25, 0.7)] {
                    let b = Barycentric::new(s, t, 1.0 - s - t);
                    let p = tri.point_at(&b);
                    assert_abs_diff_eq!(interp.eval_bary(&b), f(p), epsilon = 1e-11);
                }
            }
        }
    }

    #[test]
    fn dof_consistency_is_tiny_for_smooth_functions() {
        let f = |p: Point2<f64>| (p.x * 1.3).sin() * (0.7 * p.y).cos();
        let schemes = [
            Scheme::cr(),
            Scheme::c_alpha(1.0).unwrap(),
            Scheme::e_beta(1.0).unwrap(),
        ];
        for scheme in &schemes {
            let tri = skewed_triangle();
            let interp = interpolate_local(&tri, scheme, f).unwrap();
            let worst = dof_consistency(&interp, &tri, f).unwrap();
            assert!(worst < 1e-12, "{}: residual {worst:e}", scheme.label());
        }
    }

    #[test]
    fn evaluate_local_rejects_outside_points() {
        let tri = unit_triangle();
        let interp = interpolate_local(&tri, &Scheme::cr(), |p| p.x).unwrap();
        assert!(evaluate_local(&interp, &tri, Point2::new(0.25, 0.25)).is_ok());
        // Boundary is fine.
        assert!(evaluate_local(&interp, &tri, Point2::new(0.5, 0.5)).is_ok());
        assert!(matches!(
            evaluate_local(&interp, &tri, Point2::new(0.8, 0.8)),
            Err(Error::Domain(_))
        ));
    }

    #[test]
    fn global_interpolant_evaluates_everywhere_inside() {
        let mesh = uniform_grid_mesh::<f64>(4).unwrap();
        let f = |p: Point2<f64>| (p.x + p.y).exp();
        let scheme = Scheme::e_beta(1.0).unwrap();
        let approx = interpolate_global(&mesh, &scheme, f).unwrap();
        assert_eq!(approx.locals().len(), mesh.triangle_count());
        for &(x, y) in &[(0.1, 0.1), (0.49, 0.51), (0.999, 0.001), (0.75, 0.25)] {
            let p = Point2::new(x, y);
            let got = approx.evaluate(p).unwrap();
            assert!((got - f(p)).abs() < 5e-3, "at ({x}, {y}): {got}");
        }
        assert_eq!(approx.evaluate(Point2::new(1.5, 0.5)), None);
    }

    #[test]
    fn global_interpolant_indexes_cells() {
        let mesh = uniform_grid_mesh::<f64>(2).unwrap();
        let approx = interpolate_global(&mesh, &Scheme::cr(), |p| p.x).unwrap();
        for (i, local) in approx.locals().iter().enumerate() {
            assert_eq!(local.tri_index, i);
        }
    }
}
