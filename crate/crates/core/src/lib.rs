//! Mixed finite element solver for steady porous-medium channel flow.
//!
//! The model is the incompressible momentum balance with Brinkman viscous
//! diffusion, Darcy and Forchheimer drag derived from the Ergun correlation,
//! and an `ε`-weighted mass constraint `div(εu) = 0`, where the porosity `ε`
//! varies across the channel. Velocity and pressure are discretized with
//! biquadratic (Q2) and discontinuous piecewise linear (P1) elements on a
//! structured Cartesian mesh and the nonlinear terms are resolved by Picard
//! iteration with a sparse direct solve per step.
//!
//! Module map:
//! - [`model`]: porosity profiles, coefficient laws, case configuration.
//! - [`mesh`]: structured quadrilateral mesh and degree-of-freedom maps.
//! - [`fem`]: reference bases, Gauss quadrature, affine cell maps.
//! - [`assembly`]: variational forms and the saddle-point system.
//! - [`solver`]: sparse linear solves and the Picard loop.
//! - [`verify`]: manufactured solutions, convergence studies, structural
//!   identity checks.

pub mod assembly;
pub mod fem;
pub mod field;
pub mod mesh;
pub mod model;
pub mod poly;
pub mod solver;
pub mod sparse;
pub mod verify;

pub use assembly::{DirichletData, SaddleSystem, SolutionFields};
pub use mesh::{DofMaps, StructuredQuadMesh};
pub use model::{CaseConfig, FlowMode, PorosityModel};
pub use solver::{NonlinearReport, PicardConfig};
