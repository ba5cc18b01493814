//! Constructive solution of the Laplace equation in `d` dimensions.
//!
//! The crate is organised bottom-up:
//!
//! - [`geometry`]: the recursive polar chart `(r, θ_d, …, θ_3, φ)`, Cartesian
//!   conversion, the solid angle `Ω_d` and the angle between two directions.
//! - [`gegenbauer`]: ultraspherical polynomials `P_{l,d}` defined by the
//!   generating function `(1 + r² − 2rx)^{−(d−2)/2} = Σ r^l P_{l,d}(x)`, their
//!   derivatives, the associated functions `P^m_{l,d}` and normalization factors.
//! - [`quadrature`]: Gauss rules for `sin^α θ dθ` and tensor-product grids
//!   realizing the surface measure `dΩ_d`.
//! - [`harmonics`]: multi-index enumeration, orthonormal hyperspherical
//!   harmonics, addition theorems and a finite-difference harmonicity check.
//! - [`solver`]: radial branches `r^l`, `r^{−(l+d−2)}`, Dirichlet fits on balls,
//!   ball complements and shells, and the multipole expansion of `|x − y|^{2−d}`.
//! - [`verify`] and [`cli`]: the identity verifier and the command-line front end.
//!
//! All arithmetic is `f64`.

pub mod cli;
pub mod error;
pub mod gegenbauer;
pub mod geometry;
pub mod harmonics;
pub mod quadrature;
pub mod solver;
pub mod verify;

mod special;

pub use error::{Error, Result};
pub use geometry::{Angles, CartesianPoint, UltrasphericalPoint};
pub use harmonics::MultiIndex;
pub use num_complex::Complex64;
pub use quadrature::{SphereGrid, ThetaRule};
pub use solver::{BoundaryProblem, BoundarySamples, Domain, HarmonicExpansion, RadialCoeffs, SphereData};

