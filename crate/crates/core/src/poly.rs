//! Bivariate polynomials with exact differentiation.
//!
//! Manufactured solutions and the structural identity checks need fields
//! whose derivatives carry no approximation error; polynomials in dense
//! coefficient form provide that.

use crate::field::ScalarField;

/// Polynomial `Σ c[i][j] x^i y^j` stored as a dense coefficient grid.
#[derive(Debug, Clone, PartialEq)]
pub struct Poly2 {
    /// Degree bound + 1 in x.
    nx: usize,
    /// Degree bound + 1 in y.
    ny: usize,
    /// Row-major, `c[i * ny + j]` multiplies `x^i y^j`.
    c: Vec<f64>,
}

impl Poly2 {
    pub fn zero() -> Self {
        Self { nx: 1, ny: 1, c: vec![0.0] }
    }

    pub fn constant(v: f64) -> Self {
        Self { nx: 1, ny: 1, c: vec![v] }
    }

    /// Build from `(i, j, coefficient)` terms for `x^i y^j`.
    pub fn from_terms(terms: &[(usize, usize, f64)]) -> Self {
        let nx = terms.iter().map(|t| t.0 + 1).max().unwrap_or(1);
        let ny = terms.iter().map(|t| t.1 + 1).max().unwrap_or(1);
        let mut c = vec![0.0; nx * ny];
        for &(i, j, v) in terms {
            c[i * ny + j] += v;
        }
        Self { nx, ny, c }
    }

    /// `x` as a polynomial.
    pub fn x() -> Self {
        Self::from_terms(&[(1, 0, 1.0)])
    }

    /// `y` as a polynomial.
    pub fn y() -> Self {
        Self::from_terms(&[(0, 1, 1.0)])
    }

    pub fn eval(&self, x: f64, y: f64) -> f64 {
        // Horner in x of Horner-in-y rows.
        let mut acc = 0.0;
        for i in (0..self.nx).rev() {
            let row = &self.c[i * self.ny..(i + 1) * self.ny];
            let mut r = 0.0;
            for j in (0..self.ny).rev() {
                r = r * y + row[j];
            }
            acc = acc * x + r;
        }
        acc
    }

    pub fn dx(&self) -> Self {
        if self.nx == 1 {
            return Self::zero();
        }
        let nx = self.nx - 1;
        let ny = self.ny;
        let mut c = vec![0.0; nx * ny];
        for i in 1..self.nx {
            for j in 0..ny {
                c[(i - 1) * ny + j] = self.c[i * ny + j] * i as f64;
            }
        }
        Self { nx, ny, c }
    }

    pub fn dy(&self) -> Self {
        if self.ny == 1 {
            return Self::zero();
        }
        let nx = self.nx;
        let ny = self.ny - 1;
        let mut c = vec![0.0; nx * ny];
        for i in 0..nx {
            for j in 1..self.ny {
                c[i * ny + (j - 1)] = self.c[i * self.ny + j] * j as f64;
            }
        }
        Self { nx, ny, c }
    }

    pub fn add(&self, other: &Self) -> Self {
        let nx = self.nx.max(other.nx);
        let ny = self.ny.max(other.ny);
        let mut c = vec![0.0; nx * ny];
        for i in 0..self.nx {
            for j in 0..self.ny {
                c[i * ny + j] += self.c[i * self.ny + j];
            }
        }
        for i in 0..other.nx {
            for j in 0..other.ny {
                c[i * ny + j] += other.c[i * other.ny + j];
            }
        }
        Self { nx, ny, c }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.scale(-1.0))
    }

    pub fn scale(&self, s: f64) -> Self {
        Self {
            nx: self.nx,
            ny: self.ny,
            c: self.c.iter().map(|v| v * s).collect(),
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        let nx = self.nx + other.nx - 1;
        let ny = self.ny + other.ny - 1;
        let mut c = vec![0.0; nx * ny];
        for i1 in 0..self.nx {
            for j1 in 0..self.ny {
                let a = self.c[i1 * self.ny + j1];
                if a == 0.0 {
                    continue;
                }
                for i2 in 0..other.nx {
                    for j2 in 0..other.ny {
                        c[(i1 + i2) * ny + (j1 + j2)] += a * other.c[i2 * other.ny + j2];
                    }
                }
            }
        }
        Self { nx, ny, c }
    }

    /// Exact integral over the rectangle `[x0,x1] × [y0,y1]`.
    pub fn integral(&self, x0: f64, x1: f64, y0: f64, y1: f64) -> f64 {
        let mut acc = 0.0;
        for i in 0..self.nx {
            let fx = (x1.powi(i as i32 + 1) - x0.powi(i as i32 + 1)) / (i as f64 + 1.0);
            for j in 0..self.ny {
                let fy = (y1.powi(j as i32 + 1) - y0.powi(j as i32 + 1)) / (j as f64 + 1.0);
                acc += self.c[i * self.ny + j] * fx * fy;
            }
        }
        acc
    }

    /// Per-direction degree bounds `(deg_x, deg_y)`.
    pub fn degrees(&self) -> (usize, usize) {
        (self.nx - 1, self.ny - 1)
    }

    /// Field view carrying precomputed first derivatives.
    pub fn as_field(&self) -> PolyField {
        PolyField {
            p: self.clone(),
            px: self.dx(),
            py: self.dy(),
        }
    }
}

/// Scalar field backed by a polynomial, with cached derivatives.
#[derive(Debug, Clone)]
pub struct PolyField {
    p: Poly2,
    px: Poly2,
    py: Poly2,
}

impl ScalarField for PolyField {
    fn value(&self, x: f64, y: f64) -> f64 {
        self.p.eval(x, y)
    }
    fn gradient(&self, x: f64, y: f64) -> [f64; 2] {
        [self.px.eval(x, y), self.py.eval(x, y)]
    }
}
