//! Gaussian quadrature on the unit interval and composite symmetric rules on
//! triangles.
//!
//! Interval rules come in two kinds: Gauss-Legendre for plain integrals
//! `int_0^1 f` and Gauss-Jacobi for weighted integrals
//! `int_0^1 t^alpha (1-t)^alpha f(t) dt`. Both are built with the
//! Golub-Welsch algorithm: nodes are the eigenvalues of the symmetric
//! tridiagonal recurrence matrix of the orthogonal polynomial family, and
//! weights come from the first components of the eigenvectors, which a QL
//! sweep with implicit shifts tracks directly.

mod special;
mod triangle;

pub use special::{beta, ln_gamma};
pub use triangle::{integrate_on_triangle, TriangleRuleConfig};

use crate::error::{Error, Result};
use crate::scalar::Real;

/// Largest supported node count for interval rules.
pub const MAX_NODES: usize = 64;

/// Weight function a rule integrates against on `[0, 1]`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum WeightKind<T> {
    /// Plain integration, weight 1.
    Unit,
    /// Symmetric Jacobi weight `t^alpha (1-t)^alpha`.
    Jacobi { alpha: T },
}

/// Quadrature rule on `[0, 1]`: `sum_i w_i f(t_i)` approximates the integral
/// of `f` against the rule's weight function.
#[derive(Debug, Clone, PartialEq)]
pub struct QuadratureRule<T> {
    nodes: Vec<T>,
    weights: Vec<T>,
    kind: WeightKind<T>,
}

impl<T: Real> QuadratureRule<T> {
    /// Nodes in strictly increasing order, all inside `(0, 1)`.
    pub fn nodes(&self) -> &[T] {
        &self.nodes
    }

    /// Positive weights; they sum to the total mass of the weight function
    /// (1 for `Unit`, `B(alpha+1, alpha+1)` for `Jacobi`).
    pub fn weights(&self) -> &[T] {
        &self.weights
    }

    pub fn weight_kind(&self) -> WeightKind<T> {
        self.kind
    }

    pub fn node_count(&self) -> usize {
        self.nodes.len()
    }

    /// Applies the rule: approximates the integral of `f` times the weight
    /// function over `[0, 1]`.
    pub fn integrate<F: Fn(T) -> T>(&self, f: F) -> T {
        self.nodes
            .iter()
            .zip(&self.weights)
            .map(|(&t, &w)| w * f(t))
            .sum()
    }
}

/// Gauss-Legendre rule with `n` nodes on `[0, 1]`; exact for polynomials of
/// degree `2n - 1`.
pub fn gauss_legendre<T: Real>(n: usize) -> Result<QuadratureRule<T>> {
    let (nodes, weights) = symmetric_jacobi_nodes(n, T::zero())?;
    Ok(QuadratureRule {
        nodes,
        weights,
        kind: WeightKind::Unit,
    })
}

/// Gauss-Jacobi rule with `n` nodes for the weight `t^alpha (1-t)^alpha` on
/// `[0, 1]`, `alpha > -1`; `sum w_i p(t_i)` is exact for polynomials `p` of
/// degree `2n - 1`.
pub fn gauss_jacobi<T: Real>(n: usize, alpha: T) -> Result<QuadratureRule<T>> {
    if alpha <= T::of(-1.0) || alpha.is_nan() {
        return Err(Error::domain(format!(
            "Jacobi exponent must exceed -1, got {alpha}"
        )));
    }
    let (nodes, weights) = symmetric_jacobi_nodes(n, alpha)?;
    Ok(QuadratureRule {
        nodes,
        weights,
        kind: WeightKind::Jacobi { alpha },
    })
}

/// Golub-Welsch nodes and weights on `[0, 1]` for the symmetric Jacobi
/// weight with exponent `alpha` (Legendre for `alpha = 0`).
fn symmetric_jacobi_nodes<T: Real>(n: usize, alpha: T) -> Result<(Vec<T>, Vec<T>)> {
    if n == 0 || n > MAX_NODES {
        return Err(Error::argument(format!(
            "node count must lie in 1..={MAX_NODES}, got {n}"
        )));
    }
    let one = T::one();
    let two = T::of(2.0);
    let four = T::of(4.0);

    // Recurrence matrix for the weight (1-x)^alpha (1+x)^alpha on [-1, 1]:
    // the diagonal vanishes by symmetry and the squared off-diagonals are
    //   e_1^2 = 1 / (3 + 2 alpha),
    //   e_k^2 = 4 k (k+alpha)^2 (k+2 alpha)
    //           / ((2k+2 alpha)^2 (2k+2 alpha+1) (2k+2 alpha-1)),  k >= 2.
    // The k = 1 case is kept in its reduced form because the general
    // expression is 0/0 at alpha = -1/2.
    let mut d = vec![T::zero(); n];
    let mut e = vec![T::zero(); n];
    for k in 1..n {
        let kf = T::of(k);
        let e2 = if k == 1 {
            (T::of(3.0) + two * alpha).recip()
        } else {
            let ka = kf + alpha;
            let s = two * ka;
            four * kf * ka * ka * (kf + two * alpha) / (s * s * (s + one) * (s - one))
        };
        e[k - 1] = e2.sqrt();
    }

    // First components of the normalised eigenvectors.
    let mut z = vec![T::zero(); n];
    z[0] = one;
    ql_implicit_shifts(&mut d, &mut e, &mut z)?;

    // Map eigenvalues x in (-1, 1) to t = (x+1)/2 and scale the squared
    // first components by the weight's mass on [0, 1].
    let mass = special::beta(alpha + one, alpha + one)?;
    let half = T::of(0.5);
    let mut pairs: Vec<(T, T)> = d
        .iter()
        .zip(&z)
        .map(|(&x, &zi)| (half * (x + one), mass * zi * zi))
        .collect();
    pairs.sort_by(|a, b| a.0.partial_cmp(&b.0).expect("nodes are finite"));

    // The weight is symmetric about 1/2, so enforce the node symmetry
    // t_i + t_{n-1-i} = 1 exactly by averaging mirrored pairs.
    let mut nodes: Vec<T> = pairs.iter().map(|p| p.0).collect();
    let mut weights: Vec<T> = pairs.iter().map(|p| p.1).collect();
    for i in 0..n / 2 {
        let j = n - 1 - i;
        let t = half * (nodes[i] + (one - nodes[j]));
        nodes[i] = t;
        nodes[j] = one - t;
        let w = half * (weights[i] + weights[j]);
        weights[i] = w;
        weights[j] = w;
    }
    if n % 2 == 1 {
        nodes[n / 2] = half;
    }
    Ok((nodes, weights))
}

/// QL algorithm with implicit shifts for a symmetric tridiagonal matrix,
/// simultaneously rotating a row vector `z` so that, starting from the first
/// unit vector, `z` ends up holding the first component of each normalised
/// eigenvector.
///
/// `d` holds the diagonal and is overwritten with the eigenvalues; `e[i]` is
/// the subdiagonal entry coupling rows `i` and `i + 1` (its last slot is
/// workspace).
fn ql_implicit_shifts<T: Real>(d: &mut [T], e: &mut [T], z: &mut [T]) -> Result<()> {
    let n = d.len();
    let one = T::one();
    let two = T::of(2.0);
    for l in 0..n {
        let mut iterations = 0;
        loop {
            // Look for a negligible subdiagonal element to split the matrix.
            let mut m = l;
            while m + 1 < n {
                let dd = d[m].abs() + d[m + 1].abs();
                if e[m].abs() <= T::epsilon() * dd {
                    break;
                }
                m += 1;
            }
            if m == l {
                break;
            }
            iterations += 1;
            if iterations > 50 {
                return Err(Error::Numeric(
                    "tridiagonal eigenvalue iteration did not converge".into(),
                ));
            }
            // Implicit shift from the leading 2x2 block.
            let mut g = (d[l + 1] - d[l]) / (two * e[l]);
            let mut r = g.hypot(one);
            let sign_r = if g >= T::zero() { r } else { -r };
            g = d[m] - d[l] + e[l] / (g + sign_r);
            let mut s = one;
            let mut c = one;
            let mut p = T::zero();
            let mut early_split = false;
            for i in (l..m).rev() {
                let mut f = s * e[i];
                let b = c * e[i];
                r = f.hypot(g);
                e[i + 1] = r;
                if r == T::zero() {
                    // Rotation annihilated the element; split and retry.
                    d[i + 1] = d[i + 1] - p;
                    e[m] = T::zero();
                    early_split = true;
                    break;
                }
                s = f / r;
                c = g / r;
                g = d[i + 1] - p;
                r = (d[i] - g) * s + two * c * b;
                p = s * r;
                d[i + 1] = g + p;
                g = c * r - b;
                f = z[i + 1];
                z[i + 1] = s * z[i] + c * f;
                z[i] = c * z[i] - s * f;
            }
            if early_split {
                continue;
            }
            d[l] = d[l] - p;
            e[l] = g;
            e[m] = T::zero();
        }
    }
    Ok(())
}
