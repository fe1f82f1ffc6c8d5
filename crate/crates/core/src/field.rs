//! Scalar and vector fields evaluable at arbitrary points.
//!
//! Variational forms and manufactured-solution machinery accept either
//! analytic callables or finite element coefficient vectors through these
//! traits, so oracle-style evaluations and the assembled operators share one
//! interface.

/// Scalar field with an analytic gradient.
pub trait ScalarField {
    fn value(&self, x: f64, y: f64) -> f64;
    fn gradient(&self, x: f64, y: f64) -> [f64; 2];
}

/// Planar vector field with an analytic Jacobian.
pub trait VectorField {
    fn value(&self, x: f64, y: f64) -> [f64; 2];
    /// `gradient(x,y)[i][j] = ∂u_i/∂x_j`.
    fn gradient(&self, x: f64, y: f64) -> [[f64; 2]; 2];
}

/// Constant scalar field.
#[derive(Debug, Clone, Copy)]
pub struct Constant(pub f64);

impl ScalarField for Constant {
    fn value(&self, _x: f64, _y: f64) -> f64 {
        self.0
    }
    fn gradient(&self, _x: f64, _y: f64) -> [f64; 2] {
        [0.0, 0.0]
    }
}

/// Constant vector field.
#[derive(Debug, Clone, Copy)]
pub struct ConstantVector(pub [f64; 2]);

impl VectorField for ConstantVector {
    fn value(&self, _x: f64, _y: f64) -> [f64; 2] {
        self.0
    }
    fn gradient(&self, _x: f64, _y: f64) -> [[f64; 2]; 2] {
        [[0.0; 2]; 2]
    }
}

/// Scalar field from value/gradient closures.
pub struct AnalyticScalar<F, G>
where
    F: Fn(f64, f64) -> f64,
    G: Fn(f64, f64) -> [f64; 2],
{
    value: F,
    grad: G,
}

impl<F, G> AnalyticScalar<F, G>
where
    F: Fn(f64, f64) -> f64,
    G: Fn(f64, f64) -> [f64; 2],
{
    pub fn new(value: F, grad: G) -> Self {
        Self { value, grad }
    }
}

impl<F, G> ScalarField for AnalyticScalar<F, G>
where
    F: Fn(f64, f64) -> f64,
    G: Fn(f64, f64) -> [f64; 2],
{
    fn value(&self, x: f64, y: f64) -> f64 {
        (self.value)(x, y)
    }
    fn gradient(&self, x: f64, y: f64) -> [f64; 2] {
        (self.grad)(x, y)
    }
}

/// Vector field from value/Jacobian closures.
pub struct AnalyticVector<F, G>
where
    F: Fn(f64, f64) -> [f64; 2],
    G: Fn(f64, f64) -> [[f64; 2]; 2],
{
    value: F,
    grad: G,
}

impl<F, G> AnalyticVector<F, G>
where
    F: Fn(f64, f64) -> [f64; 2],
    G: Fn(f64, f64) -> [[f64; 2]; 2],
{
    pub fn new(value: F, grad: G) -> Self {
        Self { value, grad }
    }
}

impl<F, G> VectorField for AnalyticVector<F, G>
where
    F: Fn(f64, f64) -> [f64; 2],
    G: Fn(f64, f64) -> [[f64; 2]; 2],
{
    fn value(&self, x: f64, y: f64) -> [f64; 2] {
        (self.value)(x, y)
    }
    fn gradient(&self, x: f64, y: f64) -> [[f64; 2]; 2] {
        (self.grad)(x, y)
    }
}
