//! Composite integration over triangles: a symmetric base rule applied on a
//! uniform `4^k` subdivision of the target triangle.

use crate::error::{Error, Result};
use crate::meshkit::{Point2, Triangle2};
use crate::scalar::Real;

/// Configuration for [`integrate_on_triangle`]: polynomial degree of the
/// symmetric base rule (5 or 6) and the number `k` of uniform refinement
/// levels, giving `4^k` congruent subtriangles.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct TriangleRuleConfig {
    base_degree: usize,
    subdivision: usize,
}

/// Deepest supported refinement level; `4^8 = 65536` subtriangles is already
/// far beyond what the error studies need.
const MAX_SUBDIVISION: usize = 8;

impl TriangleRuleConfig {
    /// Validates a configuration. Supported base degrees are 5 (7-point
    /// rule) and 6 (12-point rule); the subdivision level must not exceed 8.
    pub fn new(base_degree: usize, subdivision: usize) -> Result<Self> {
        if !(5..=6).contains(&base_degree) {
            return Err(Error::argument(format!(
                "supported base rule degrees are 5 and 6, got {base_degree}"
            )));
        }
        if subdivision > MAX_SUBDIVISION {
            return Err(Error::argument(format!(
                "subdivision level must not exceed {MAX_SUBDIVISION}, got {subdivision}"
            )));
        }
        Ok(TriangleRuleConfig {
            base_degree,
            subdivision,
        })
    }

    pub fn base_degree(&self) -> usize {
        self.base_degree
    }

    pub fn subdivision(&self) -> usize {
        self.subdivision
    }
}

impl Default for TriangleRuleConfig {
    /// Degree-5 base rule on a 16-fold subdivision: accurate to roughly
    /// single-ulp level for the smooth integrands of the error studies.
    fn default() -> Self {
        TriangleRuleConfig {
            base_degree: 5,
            subdivision: 2,
        }
    }
}

/// Barycentric points and weights of the base rule, weights normalised to
/// sum to 1 (i.e. for the unit-area triangle).
fn base_rule<T: Real>(degree: usize) -> Vec<([T; 3], T)> {
    match degree {
        5 => degree5_rule(),
        6 => degree6_rule(),
        _ => unreachable!("validated by TriangleRuleConfig::new"),
    }
}

/// Symmetric 7-point rule, exact through degree 5: the centroid plus two
/// three-point orbits whose coordinates involve sqrt(15).
fn degree5_rule<T: Real>() -> Vec<([T; 3], T)> {
    let s15 = T::of(15.0).sqrt();
    let third = T::of(3.0).recip();
    let w0 = T::of(9.0) / T::of(40.0);
    let b1 = (T::of(6.0) + s15) / T::of(21.0);
    let w1 = (T::of(155.0) + s15) / T::of(1200.0);
    let b2 = (T::of(6.0) - s15) / T::of(21.0);
    let w2 = (T::of(155.0) - s15) / T::of(1200.0);
    let mut pts = vec![([third, third, third], w0)];
    pts.extend(orbit3(b1, w1));
    pts.extend(orbit3(b2, w2));
    pts
}

/// Symmetric 12-point rule, exact through degree 6: two three-point orbits
/// and one six-point orbit, all weights positive.
fn degree6_rule<T: Real>() -> Vec<([T; 3], T)> {
    let mut pts = Vec::with_capacity(12);
    pts.extend(orbit3(
        T::of(0.249_286_745_170_910),
        T::of(0.116_786_275_726_379),
    ));
    pts.extend(orbit3(
        T::of(0.063_089_014_491_502),
        T::of(0.050_844_906_370_207),
    ));
    pts.extend(orbit6(
        T::of(0.053_145_049_844_816),
        T::of(0.310_352_451_033_785),
        T::of(0.082_851_075_618_374),
    ));
    pts
}

/// Orbit of the point `(1 - 2b, b, b)` under coordinate permutations.
fn orbit3<T: Real>(b: T, w: T) -> [([T; 3], T); 3] {
    let a = T::one() - b - b;
    [([a, b, b], w), ([b, a, b], w), ([b, b, a], w)]
}

/// Orbit of a point with three distinct coordinates: all six permutations of
/// `(a, b, 1 - a - b)`.
fn orbit6<T: Real>(a: T, b: T, w: T) -> [([T; 3], T); 6] {
    let c = T::one() - a - b;
    [
        ([a, b, c], w),
        ([a, c, b], w),
        ([b, a, c], w),
        ([b, c, a], w),
        ([c, a, b], w),
        ([c, b, a], w),
    ]
}

/// Approximates `int_T f dA` by applying the configured symmetric base rule
/// on each cell of a uniform `4^k` subdivision of `tri`.
///
/// The summation order is fixed, so identical inputs give bit-identical
/// results; non-finite values of `f` propagate into the result.
pub fn integrate_on_triangle<T, F>(tri: &Triangle2<T>, f: F, config: &TriangleRuleConfig) -> T
where
    T: Real,
    F: Fn(Point2<T>) -> T,
{
    let rule = base_rule::<T>(config.base_degree);
    let m = 1usize << config.subdivision;
    let mf = T::of(m).recip();
    let [v1, v2, v3] = tri.vertices();
    let du = (v2 - v1) * mf;
    let dv = (v3 - v1) * mf;
    let lattice = |i: usize, j: usize| v1 + du * T::of(i) + dv * T::of(j);

    let mut acc = T::zero();
    for j in 0..m {
        for i in 0..(m - j) {
            let p = lattice(i, j);
            let q = lattice(i + 1, j);
            let r = lattice(i, j + 1);
            acc = acc + apply_base(&rule, p, q, r, &f);
            // Each upward cell except those on the diagonal strip pairs with
            // a downward neighbour.
            if i + j < m - 1 {
                let s = lattice(i + 1, j + 1);
                acc = acc + apply_base(&rule, q, s, r, &f);
            }
        }
    }
    let cell_area = tri.area() * mf * mf;
    acc * cell_area
}

fn apply_base<T, F>(rule: &[([T; 3], T)], p: Point2<T>, q: Point2<T>, r: Point2<T>, f: &F) -> T
where
    T: Real,
    F: Fn(Point2<T>) -> T,
{
    rule.iter()
        .map(|&(l, w)| w * f(p * l[0] + q * l[1] + r * l[2]))
        .sum()
}
