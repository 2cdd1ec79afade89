//! Shared fixtures for the integration tests: an independent
//! double-exponential integrator used as an oracle against closed-form
//! constants, tiny determinant helpers, seeded random geometry, and a
//! jittered Triangle-format mesh pair for ingestion tests.

use crenrich::meshkit::{Barycentric, Point2, Triangle2};
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

/// Integrates `f` over `(0, 1)` with tanh-sinh (double-exponential)
/// quadrature. The integrand receives `(t, 1 - t)` with both values computed
/// stably, so endpoint-singular integrands such as `t^-0.9` are handled to
/// full precision. This is deliberately independent of the library's
/// Gauss-type rules: different nodes, different theory.
pub fn tanh_sinh_01(f: impl Fn(f64, f64) -> f64) -> f64 {
    const MAX_U: f64 = 6.0;
    let sum_at = |h: f64| -> f64 {
        let steps = (MAX_U / h).round() as i64;
        let mut sum = 0.0;
        for i in 0..=steps {
            let u = i as f64 * h;
            // t(u) = 1 / (1 + e) with e = exp(-pi sinh u) <= 1 for u >= 0,
            // so both t and 1 - t = e / (1 + e) stay fully accurate.
            let e = (-std::f64::consts::PI * u.sinh()).exp();
            if e < 1e-280 {
                break; // weight underflows; nothing left to add
            }
            let t = 1.0 / (1.0 + e);
            let one_minus_t = e / (1.0 + e);
            let weight = std::f64::consts::PI * u.cosh() * t * one_minus_t;
            let pair = if i == 0 {
                f(t, one_minus_t)
            } else {
                // u and -u map to mirrored abscissae.
                f(t, one_minus_t) + f(one_minus_t, t)
            };
            sum += weight * pair;
        }
        h * sum
    };
    let mut h = 0.5;
    let mut value = sum_at(h);
    for _ in 0..8 {
        h *= 0.5;
        let refined = sum_at(h);
        let done = (refined - value).abs() <= 5e-15 * refined.abs().max(1e-300);
        value = refined;
        if done {
            break;
        }
    }
    value
}

/// 3x3 determinant (rule of Sarrus).
pub fn det3(m: [[f64; 3]; 3]) -> f64 {
    m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1])
        - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0])
        + m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0])
}

/// One random triangle with vertices in `[-1.5, 1.5]^2`, rejected until it is
/// reasonably shape-regular so conditioning never muddies a tolerance.
pub fn random_triangle(rng: &mut StdRng) -> Triangle2<f64> {
    loop {
        let mut point = || Point2::new(rng.gen_range(-1.5..1.5), rng.gen_range(-1.5..1.5));
        let (a, b, c) = (point(), point(), point());
        if let Ok(tri) = Triangle2::new(a, b, c) {
            if tri.area() > 0.05 * tri.diameter() * tri.diameter() {
                return tri;
            }
        }
    }
}

/// Deterministic batch of [`random_triangle`]s.
pub fn random_triangles(seed: u64, count: usize) -> Vec<Triangle2<f64>> {
    let mut rng = StdRng::seed_from_u64(seed);
    (0..count).map(|_| random_triangle(&mut rng)).collect()
}

/// Uniformly distributed random point inside `tri`.
pub fn random_point_in(tri: &Triangle2<f64>, rng: &mut StdRng) -> Point2<f64> {
    let mut u: f64 = rng.gen_range(0.0..1.0);
    let mut v: f64 = rng.gen_range(0.0..1.0);
    if u + v > 1.0 {
        u = 1.0 - u;
        v = 1.0 - v;
    }
    tri.point_at(&Barycentric::new(1.0 - u - v, u, v))
}

/// Random quadratic polynomial with coefficients in `[-1, 1]` over
/// `{1, x, y, x^2, xy, y^2}`.
pub fn random_quadratic(rng: &mut StdRng) -> impl Fn(Point2<f64>) -> f64 {
    let c: [f64; 6] = core::array::from_fn(|_| rng.gen_range(-1.0..1.0));
    move |p: Point2<f64>| {
        c[0] + c[1] * p.x + c[2] * p.y + c[3] * p.x * p.x + c[4] * p.x * p.y + c[5] * p.y * p.y
    }
}

/// Triangle-format `.node`/`.ele` text for an `n x n` grid of the unit
/// square whose interior vertices are jittered deterministically: a small
/// unstructured-looking mesh for the ingestion path.
pub fn jittered_grid_files(n: usize, seed: u64) -> (String, String) {
    let mut rng = StdRng::seed_from_u64(seed);
    let h = 1.0 / n as f64;
    let mut node = format!("{} 2 0 0\n", (n + 1) * (n + 1));
    for j in 0..=n {
        for i in 0..=n {
            let interior = i > 0 && i < n && j > 0 && j < n;
            let amp = if interior { 0.18 * h } else { 0.0 };
            let x = i as f64 * h + amp * rng.gen_range(-1.0..1.0);
            let y = j as f64 * h + amp * rng.gen_range(-1.0..1.0);
            let idx = j * (n + 1) + i + 1;
            node.push_str(&format!("{idx} {x:.17e} {y:.17e}\n"));
        }
    }
    let mut ele = format!("{} 3 0\n", 2 * n * n);
    let at = |i: usize, j: usize| j * (n + 1) + i + 1;
    let mut cell = 1;
    for j in 0..n {
        for i in 0..n {
            ele.push_str(&format!(
                "{cell} {} {} {}\n",
                at(i, j),
                at(i + 1, j),
                at(i + 1, j + 1)
            ));
            cell += 1;
            ele.push_str(&format!(
                "{cell} {} {} {}\n",
                at(i, j),
                at(i + 1, j + 1),
                at(i, j + 1)
            ));
            cell += 1;
        }
    }
    (node, ele)
}
