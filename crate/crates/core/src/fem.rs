//! Reference elements and quadrature.
//!
//! Velocity components use the 9-node biquadratic Lagrange element on the
//! reference square `[-1,1]²` with nodes at `{-1,0,1}²`; pressure uses the
//! modal basis `{1, ξ, η}` per cell without inter-cell continuity. Cells are
//! axis-aligned rectangles, so the reference-to-physical map is affine with a
//! diagonal Jacobian.

use std::f64::consts::PI;
use std::fmt;

#[derive(Debug, Clone, PartialEq)]
pub enum FemError {
    /// Requested Gauss order outside the supported range 1..=10.
    QuadratureOrder(usize),
}

impl fmt::Display for FemError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FemError::QuadratureOrder(n) => {
                write!(f, "quadrature order {n} outside supported range 1..=10")
            }
        }
    }
}

impl std::error::Error for FemError {}

/// 1D quadratic Lagrange values on nodes `{-1, 0, 1}`.
#[inline]
fn lagrange3(t: f64) -> [f64; 3] {
    [0.5 * t * (t - 1.0), (1.0 - t) * (1.0 + t), 0.5 * t * (t + 1.0)]
}

#[inline]
fn lagrange3_deriv(t: f64) -> [f64; 3] {
    [t - 0.5, -2.0 * t, t + 0.5]
}

/// Values and reference gradients of the 9 biquadratic shape functions.
///
/// Local node `k = 3*b + a` sits at `(ξ, η) = (a-1, b-1)` for `a, b` in
/// `{0,1,2}`, i.e. the η index varies slowest, matching the mesh's x-fastest
/// node ordering within a cell.
pub fn q2_eval(xi: f64, eta: f64) -> ([f64; 9], [[f64; 2]; 9]) {
    let lx = lagrange3(xi);
    let ly = lagrange3(eta);
    let dx = lagrange3_deriv(xi);
    let dy = lagrange3_deriv(eta);
    let mut values = [0.0; 9];
    let mut grads = [[0.0; 2]; 9];
    for b in 0..3 {
        for a in 0..3 {
            let k = 3 * b + a;
            values[k] = lx[a] * ly[b];
            grads[k] = [dx[a] * ly[b], lx[a] * dy[b]];
        }
    }
    (values, grads)
}

/// Values and reference gradients of the discontinuous P1 pressure modes
/// `{1, ξ, η}`.
pub fn p1disc_eval(xi: f64, eta: f64) -> ([f64; 3], [[f64; 2]; 3]) {
    ([1.0, xi, eta], [[0.0, 0.0], [1.0, 0.0], [0.0, 1.0]])
}

/// Tensor-product Gauss rule on `[-1,1]²`.
#[derive(Debug, Clone)]
pub struct QuadRule {
    pub points: Vec<[f64; 2]>,
    pub weights: Vec<f64>,
}

/// Gauss rule on the reference edge `[-1,1]`.
#[derive(Debug, Clone)]
pub struct QuadRule1d {
    pub points: Vec<f64>,
    pub weights: Vec<f64>,
}

/// Gauss-Legendre nodes and weights on `[-1,1]`, exact for degree `2n-1`.
///
/// Roots of the Legendre polynomial by Newton iteration from the Chebyshev
/// initial guess; the node set is symmetrized so paired abscissae are exact
/// negatives.
fn gauss_legendre(n: usize) -> (Vec<f64>, Vec<f64>) {
    let mut points = vec![0.0; n];
    let mut weights = vec![0.0; n];
    for i in 0..(n + 1) / 2 {
        let mut x = (PI * (i as f64 + 0.75) / (n as f64 + 0.5)).cos();
        // Newton on P_n(x) with the three-term recurrence.
        for _ in 0..100 {
            let mut p0 = 1.0;
            let mut p1 = x;
            for k in 2..=n {
                let kf = k as f64;
                let p2 = ((2.0 * kf - 1.0) * x * p1 - (kf - 1.0) * p0) / kf;
                p0 = p1;
                p1 = p2;
            }
            let dp = if n == 1 {
                1.0
            } else {
                n as f64 * (x * p1 - p0) / (x * x - 1.0)
            };
            let step = p1 / dp;
            x -= step;
            if step.abs() < 1e-15 {
                break;
            }
        }
        let mut p0 = 1.0;
        let mut p1 = x;
        for k in 2..=n {
            let kf = k as f64;
            let p2 = ((2.0 * kf - 1.0) * x * p1 - (kf - 1.0) * p0) / kf;
            p0 = p1;
            p1 = p2;
        }
        let dp = if n == 1 {
            1.0
        } else {
            n as f64 * (x * p1 - p0) / (x * x - 1.0)
        };
        let w = 2.0 / ((1.0 - x * x) * dp * dp);
        // The Chebyshev guess enumerates roots from +1 downwards.
        points[n - 1 - i] = x;
        points[i] = -x;
        weights[i] = w;
        weights[n - 1 - i] = w;
    }
    if n % 2 == 1 {
        points[n / 2] = 0.0;
    }
    (points, weights)
}

/// Tensor Gauss rule with `n` points per direction, `1 <= n <= 10`.
pub fn gauss_rule(n: usize) -> Result<QuadRule, FemError> {
    if n == 0 || n > 10 {
        return Err(FemError::QuadratureOrder(n));
    }
    let (p, w) = gauss_legendre(n);
    let mut points = Vec::with_capacity(n * n);
    let mut weights = Vec::with_capacity(n * n);
    for j in 0..n {
        for i in 0..n {
            points.push([p[i], p[j]]);
            weights.push(w[i] * w[j]);
        }
    }
    Ok(QuadRule { points, weights })
}

/// 1D Gauss rule with `n` points, `1 <= n <= 10`.
pub fn gauss_rule_1d(n: usize) -> Result<QuadRule1d, FemError> {
    if n == 0 || n > 10 {
        return Err(FemError::QuadratureOrder(n));
    }
    let (points, weights) = gauss_legendre(n);
    Ok(QuadRule1d { points, weights })
}

/// Affine map from the reference square onto an axis-aligned rectangle with
/// lower-left corner `(x0, y0)` and extents `hx × hy`.
#[derive(Debug, Clone, Copy)]
pub struct AffineMap {
    pub x0: f64,
    pub y0: f64,
    pub hx: f64,
    pub hy: f64,
}

impl AffineMap {
    #[inline]
    pub fn to_physical(&self, xi: f64, eta: f64) -> (f64, f64) {
        (
            self.x0 + (xi + 1.0) * 0.5 * self.hx,
            self.y0 + (eta + 1.0) * 0.5 * self.hy,
        )
    }

    #[inline]
    pub fn to_reference(&self, x: f64, y: f64) -> (f64, f64) {
        (
            2.0 * (x - self.x0) / self.hx - 1.0,
            2.0 * (y - self.y0) / self.hy - 1.0,
        )
    }

    /// Diagonal of the Jacobian, `(hx/2, hy/2)`.
    #[inline]
    pub fn jacobian(&self) -> [f64; 2] {
        [0.5 * self.hx, 0.5 * self.hy]
    }

    #[inline]
    pub fn jacobian_det(&self) -> f64 {
        0.25 * self.hx * self.hy
    }

    /// Factors converting reference gradients to physical gradients.
    #[inline]
    pub fn grad_scale(&self) -> [f64; 2] {
        [2.0 / self.hx, 2.0 / self.hy]
    }
}
