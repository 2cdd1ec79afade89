//! The numeric verification battery behind `crenrich verify`.
//!
//! Every check compares quantities computed through two independent routes —
//! closed-form coefficients against direct quadrature, nodal bases against
//! the degrees of freedom they are dual to, interpolants against the
//! quadratics they must reproduce — over a fixed set of triangles and a
//! sweep of family exponents. Checks run in a fixed order with deterministic
//! inputs, so the report is byte-identical across runs.

use std::fmt;

use crenrich::elements::{
    af3_bubble, af3_phi, basis_c_alpha, basis_cr, basis_e_beta, dof_cr, dof_f_enr, dof_g_enr,
    dof_vertex, unisolvence_determinant, CAlphaCoefficients, EBetaCoefficients, FamilyParameter,
};
use crenrich::meshkit::{Barycentric, Point2, Triangle2};
use crenrich::operators::{interpolate_local, Scheme};
use crenrich::quadrature::{beta, gauss_jacobi, gauss_legendre, QuadratureRule};

use crate::CliError;

/// Exponents of the vertex-to-opposite-midpoint family always included in
/// the sweep.
const BUILT_IN_ALPHAS: [f64; 5] = [-0.9, -0.5, 0.0, 1.0, 3.0];
/// Exponents of the vertex-to-centroid family always included in the sweep.
const BUILT_IN_BETAS: [f64; 4] = [-0.9, 0.0, 1.0, 3.0];

pub struct VerifyConfig {
    pub extra_alphas: Vec<f64>,
    pub extra_betas: Vec<f64>,
    pub quad_order: usize,
    pub inject_sigma_error: bool,
}

/// Result of one named check: the largest residual seen and the bound it
/// must stay under.
pub struct CheckOutcome {
    name: &'static str,
    worst: f64,
    tolerance: f64,
}

impl CheckOutcome {
    pub fn passed(&self) -> bool {
        self.worst <= self.tolerance
    }
}

impl fmt::Display for CheckOutcome {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let status = if self.passed() { "PASS" } else { "FAIL" };
        write!(
            f,
            "{status} {} (worst residual {:.1e}, tolerance {:.0e})",
            self.name, self.worst, self.tolerance
        )
    }
}

/// Triangles every check runs on: the reference triangle, a skewed one, and
/// a clockwise-oriented one, so no check can pass by geometric accident.
fn fixed_triangles() -> [Triangle2<f64>; 3] {
    let tri = |a: (f64, f64), b: (f64, f64), c: (f64, f64)| {
        Triangle2::new(
            Point2::new(a.0, a.1),
            Point2::new(b.0, b.1),
            Point2::new(c.0, c.1),
        )
        .expect("fixed verification triangle is nondegenerate")
    };
    [
        tri((0.0, 0.0), (1.0, 0.0), (0.0, 1.0)),
        tri((-0.3, 0.4), (1.7, 0.2), (0.6, 1.9)),
        tri((0.0, 0.0), (0.2, 1.3), (1.1, 0.6)),
    ]
}

fn delta(i: usize, j: usize) -> f64 {
    if i == j {
        1.0
    } else {
        0.0
    }
}

struct Battery {
    tris: [Triangle2<f64>; 3],
    alphas: Vec<f64>,
    betas: Vec<f64>,
    quad_order: usize,
    unit_rule: QuadratureRule<f64>,
    inject_sigma_error: bool,
}

/// Runs the whole battery and returns one outcome per check, in a fixed
/// order. Invalid user-supplied exponents are rejected up front.
pub fn run_battery(config: &VerifyConfig) -> Result<Vec<CheckOutcome>, CliError> {
    let mut alphas = BUILT_IN_ALPHAS.to_vec();
    for &a in &config.extra_alphas {
        FamilyParameter::c_alpha(a)?;
        if !alphas.contains(&a) {
            alphas.push(a);
        }
    }
    let mut betas = BUILT_IN_BETAS.to_vec();
    for &b in &config.extra_betas {
        FamilyParameter::e_beta(b)?;
        if !betas.contains(&b) {
            betas.push(b);
        }
    }
    let battery = Battery {
        tris: fixed_triangles(),
        alphas,
        betas,
        quad_order: config.quad_order,
        unit_rule: gauss_legendre(config.quad_order)?,
        inject_sigma_error: config.inject_sigma_error,
    };
    let mut outcomes = Vec::new();
    let mut add = |name, worst: Result<f64, CliError>, tolerance| -> Result<(), CliError> {
        outcomes.push(CheckOutcome {
            name,
            worst: worst?,
            tolerance,
        });
        Ok(())
    };
    add("af3-duality", battery.check_af3_duality(), 1e-12)?;
    add("beta-identities", battery.check_beta_identities(), 1e-12)?;
    add("f-moments", battery.check_f_moments(), 1e-12)?;
    add("g-moments", battery.check_g_moments(), 1e-12)?;
    add(
        "matrix-determinants",
        battery.check_matrix_determinants(),
        1e-12,
    )?;
    add(
        "excluded-exponent",
        battery.check_excluded_exponent(),
        1e-12,
    )?;
    add("cr-duality", battery.check_cr_duality(), 1e-13)?;
    add("duality-c-alpha", battery.check_duality_c_alpha(), 1e-10)?;
    add("duality-e-beta", battery.check_duality_e_beta(), 1e-10)?;
    add("p2-reproduction", battery.check_p2_reproduction(), 1e-10)?;
    add("unisolvence", battery.check_unisolvence(), 1e-10)?;
    Ok(outcomes)
}

impl Battery {
    /// The quadratic shape basis must be dual to vertex values and edge
    /// means: vertex functions carry the identity on vertex values and
    /// vanish in the mean on every edge, bubbles do the opposite.
    fn check_af3_duality(&self) -> Result<f64, CliError> {
        let mut worst = 0.0f64;
        for tri in &self.tris {
            for i in 1..=3 {
                for k in 1..=3 {
                    let phi = |p: Point2<f64>| af3_phi(tri, i, p).expect("index in 1..=3");
                    let bubble = |p: Point2<f64>| af3_bubble(tri, i, p).expect("index in 1..=3");
                    let residuals = [
                        dof_vertex(tri, k, phi)? - delta(i, k),
                        dof_cr(tri, k, phi, &self.unit_rule)?,
                        dof_vertex(tri, k, bubble)?,
                        dof_cr(tri, k, bubble, &self.unit_rule)? - delta(i, k),
                    ];
                    for r in residuals {
                        worst = worst.max(r.abs());
                    }
                }
            }
        }
        Ok(worst)
    }

    /// Beta-function symmetry and recurrence at fixed argument pairs, and
    /// the closed-form moment scales against weighted Gauss quadrature of
    /// the identity.
    fn check_beta_identities(&self) -> Result<f64, CliError> {
        let mut worst = 0.0f64;
        for (a, b) in [(1.3, 2.7), (0.4, 5.0), (0.1, 0.1), (3.5, 1.25)] {
            let bab: f64 = beta(a, b)?;
            let symmetry = (bab - beta(b, a)?) / bab;
            let recurrence = (beta(a + 1.0, b)? - bab * a / (a + b)) / bab;
            worst = worst.max(symmetry.abs()).max(recurrence.abs());
        }
        for &alpha in &self.alphas {
            let gamma = CAlphaCoefficients::for_exponent(alpha)?.gamma;
            let numeric = gauss_jacobi(self.quad_order, alpha)?.integrate(|t| t);
            worst = worst.max(((gamma - numeric) / gamma).abs());
        }
        for &beta_exp in &self.betas {
            let nu = EBetaCoefficients::for_exponent(beta_exp)?.nu;
            let numeric = gauss_jacobi(self.quad_order, beta_exp)?.integrate(|t| t)
                / (3.0 * (2.0 * beta_exp + 3.0));
            worst = worst.max(((nu - numeric) / nu).abs());
        }
        Ok(worst)
    }

    /// Vertex-to-opposite-midpoint moments of the vertex functions against
    /// their closed forms: the diagonal is `k * gamma`, off-diagonal
    /// entries are `h * gamma`.
    fn check_f_moments(&self) -> Result<f64, CliError> {
        let mut worst = 0.0f64;
        for &alpha in &self.alphas {
            let co = CAlphaCoefficients::for_exponent(alpha)?;
            let rule = gauss_jacobi(self.quad_order, alpha)?;
            for tri in &self.tris {
                for j in 1..=3 {
                    for k in 1..=3 {
                        let phi = |p: Point2<f64>| af3_phi(tri, k, p).expect("index in 1..=3");
                        let moment = dof_f_enr(tri, j, alpha, phi, &rule)?;
                        let expected = if j == k {
                            co.k * co.gamma
                        } else {
                            co.h * co.gamma
                        };
                        worst = worst.max((moment - expected).abs());
                    }
                }
            }
        }
        Ok(worst)
    }

    /// Vertex-to-centroid moments of the vertex functions against their
    /// closed forms: `2 nu` on the diagonal, `-sigma nu` off it. The
    /// injected error corrupts `sigma`, which must surface here as a
    /// failure.
    fn check_g_moments(&self) -> Result<f64, CliError> {
        let mut worst = 0.0f64;
        for &beta_exp in &self.betas {
            let co = EBetaCoefficients::for_exponent(beta_exp)?;
            let sigma = if self.inject_sigma_error {
                co.sigma + 0.05
            } else {
                co.sigma
            };
            let rule = gauss_jacobi(self.quad_order, beta_exp)?;
            for tri in &self.tris {
                for j in 1..=3 {
                    for k in 1..=3 {
                        let phi = |p: Point2<f64>| af3_phi(tri, k, p).expect("index in 1..=3");
                        let moment = dof_g_enr(tri, j, beta_exp, phi, &rule)?;
                        let expected = if j == k { 2.0 * co.nu } else { -sigma * co.nu };
                        worst = worst.max((moment - expected).abs());
                    }
                }
            }
        }
        Ok(worst)
    }

    /// Determinants of the numeric 3x3 moment matrices against the closed
    /// forms carried by the coefficient ledgers (relative).
    fn check_matrix_determinants(&self) -> Result<f64, CliError> {
        let mut worst = 0.0f64;
        for &alpha in &self.alphas {
            let expected = CAlphaCoefficients::for_exponent(alpha)?.det;
            for tri in &self.tris {
                let numeric = det3(self.f_moment_matrix(tri, alpha)?);
                worst = worst.max(((numeric - expected) / expected).abs());
            }
        }
        for &beta_exp in &self.betas {
            let expected = EBetaCoefficients::for_exponent(beta_exp)?.det;
            for tri in &self.tris {
                let numeric = det3(self.g_moment_matrix(tri, beta_exp)?);
                worst = worst.max(((numeric - expected) / expected).abs());
            }
        }
        Ok(worst)
    }

    /// At the excluded exponent -6/7 the moment matrix must be singular:
    /// its determinant, scaled by the cube of the moment scale, vanishes.
    fn check_excluded_exponent(&self) -> Result<f64, CliError> {
        let alpha = -6.0 / 7.0;
        let gamma = beta(alpha + 2.0, alpha + 1.0)?;
        let mut worst = 0.0f64;
        for tri in &self.tris {
            let numeric = det3(self.f_moment_matrix(tri, alpha)?);
            worst = worst.max(numeric.abs() / gamma.powi(3));
        }
        Ok(worst)
    }

    /// The linear edge-mean basis must satisfy `I_j(theta_i) = delta_ij`.
    fn check_cr_duality(&self) -> Result<f64, CliError> {
        let theta = basis_cr::<f64>();
        let mut worst = 0.0f64;
        for tri in &self.tris {
            for (i, t) in theta.iter().enumerate() {
                for j in 1..=3 {
                    let mean = dof_cr(tri, j, |p| t.eval(tri, p), &self.unit_rule)?;
                    worst = worst.max((mean - delta(i + 1, j)).abs());
                }
            }
        }
        Ok(worst)
    }

    /// Full 6x6 duality of the vertex-to-opposite-midpoint nodal basis:
    /// edge-dual functions answer only to edge means, weighted-dual
    /// functions only to the weighted functionals.
    fn check_duality_c_alpha(&self) -> Result<f64, CliError> {
        let mut worst = 0.0f64;
        for &alpha in &self.alphas {
            let basis = basis_c_alpha(alpha)?;
            let rule = gauss_jacobi(self.quad_order, alpha)?;
            for tri in &self.tris {
                for i in 0..3 {
                    let psi = |p: Point2<f64>| basis.edge_dual[i].eval(tri, p);
                    let zeta = |p: Point2<f64>| basis.weighted_dual[i].eval(tri, p);
                    for j in 1..=3 {
                        let residuals = [
                            dof_cr(tri, j, psi, &self.unit_rule)? - delta(i + 1, j),
                            dof_f_enr(tri, j, alpha, psi, &rule)?,
                            dof_cr(tri, j, zeta, &self.unit_rule)?,
                            dof_f_enr(tri, j, alpha, zeta, &rule)? - delta(i + 1, j),
                        ];
                        for r in residuals {
                            worst = worst.max(r.abs());
                        }
                    }
                }
            }
        }
        Ok(worst)
    }

    /// Full 6x6 duality of the vertex-to-centroid nodal basis.
    fn check_duality_e_beta(&self) -> Result<f64, CliError> {
        let mut worst = 0.0f64;
        for &beta_exp in &self.betas {
            let basis = basis_e_beta(beta_exp)?;
            let rule = gauss_jacobi(self.quad_order, beta_exp)?;
            for tri in &self.tris {
                for i in 0..3 {
                    let tau = |p: Point2<f64>| basis.edge_dual[i].eval(tri, p);
                    let rho = |p: Point2<f64>| basis.weighted_dual[i].eval(tri, p);
                    for j in 1..=3 {
                        let residuals = [
                            dof_cr(tri, j, tau, &self.unit_rule)? - delta(i + 1, j),
                            dof_g_enr(tri, j, beta_exp, tau, &rule)?,
                            dof_cr(tri, j, rho, &self.unit_rule)?,
                            dof_g_enr(tri, j, beta_exp, rho, &rule)? - delta(i + 1, j),
                        ];
                        for r in residuals {
                            worst = worst.max(r.abs());
                        }
                    }
                }
            }
        }
        Ok(worst)
    }

    /// Both enriched interpolation operators must reproduce quadratics
    /// exactly, checked on a fixed barycentric sample lattice.
    fn check_p2_reproduction(&self) -> Result<f64, CliError> {
        let quadratics: [[f64; 6]; 3] = [
            [0.7, -1.2, 0.5, 2.0, -0.8, 1.5],
            [-0.25, 0.0, 1.0, -1.0, 0.6, 0.9],
            [1.0, 2.0, -3.0, 0.4, 1.1, -2.2],
        ];
        let mut schemes = Vec::new();
        for &alpha in &self.alphas {
            schemes.push(Scheme::c_alpha(alpha)?.with_dof_quadrature_order(self.quad_order)?);
        }
        for &beta_exp in &self.betas {
            schemes.push(Scheme::e_beta(beta_exp)?.with_dof_quadrature_order(self.quad_order)?);
        }
        let mut samples = Vec::new();
        for a in 0..=4u32 {
            for b in 0..=(4 - a) {
                let (l1, l2) = (f64::from(a) / 4.0, f64::from(b) / 4.0);
                samples.push(Barycentric::new(l1, l2, 1.0 - l1 - l2));
            }
        }
        let mut worst = 0.0f64;
        for scheme in &schemes {
            for tri in &self.tris {
                for coeffs in &quadratics {
                    let f = |p: Point2<f64>| {
                        coeffs[0]
                            + coeffs[1] * p.x
                            + coeffs[2] * p.y
                            + coeffs[3] * p.x * p.x
                            + coeffs[4] * p.x * p.y
                            + coeffs[5] * p.y * p.y
                    };
                    let interp = interpolate_local(tri, scheme, f)?;
                    for bary in &samples {
                        let residual = interp.eval_bary(bary) - f(tri.point_at(bary));
                        worst = worst.max(residual.abs());
                    }
                }
            }
        }
        Ok(worst)
    }

    /// The 6x6 unisolvence determinant must match the moment-matrix
    /// determinant divided by 108, independently of the triangle (relative).
    fn check_unisolvence(&self) -> Result<f64, CliError> {
        let mut worst = 0.0f64;
        let mut families = Vec::new();
        for &alpha in &self.alphas {
            let expected = CAlphaCoefficients::for_exponent(alpha)?.det / 108.0;
            families.push((FamilyParameter::c_alpha(alpha)?, expected));
        }
        for &beta_exp in &self.betas {
            let expected = EBetaCoefficients::for_exponent(beta_exp)?.det / 108.0;
            families.push((FamilyParameter::e_beta(beta_exp)?, expected));
        }
        for (family, expected) in &families {
            for tri in &self.tris {
                let numeric = unisolvence_determinant(tri, family, self.quad_order)?;
                worst = worst.max(((numeric - expected) / expected).abs());
            }
        }
        Ok(worst)
    }

    fn f_moment_matrix(&self, tri: &Triangle2<f64>, alpha: f64) -> Result<[[f64; 3]; 3], CliError> {
        let rule = gauss_jacobi(self.quad_order, alpha)?;
        let mut m = [[0.0; 3]; 3];
        for j in 1..=3 {
            for k in 1..=3 {
                let phi = |p: Point2<f64>| af3_phi(tri, k, p).expect("index in 1..=3");
                m[j - 1][k - 1] = dof_f_enr(tri, j, alpha, phi, &rule)?;
            }
        }
        Ok(m)
    }

    fn g_moment_matrix(
        &self,
        tri: &Triangle2<f64>,
        beta_exp: f64,
    ) -> Result<[[f64; 3]; 3], CliError> {
        let rule = gauss_jacobi(self.quad_order, beta_exp)?;
        let mut m = [[0.0; 3]; 3];
        for j in 1..=3 {
            for k in 1..=3 {
                let phi = |p: Point2<f64>| af3_phi(tri, k, p).expect("index in 1..=3");
                m[j - 1][k - 1] = dof_g_enr(tri, j, beta_exp, phi, &rule)?;
            }
        }
        Ok(m)
    }
}

fn det3(m: [[f64; 3]; 3]) -> f64 {
    m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1])
        - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0])
        + m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0])
}
