//! Finite-strain neo-Hookean hyperelasticity.
//!
//! The crate covers incompressible, mixed and vol-iso compressible neo-Hookean
//! models over a catalogue of volumetric functions `h(J)`:
//!
//! * [`tensor3`]: symmetric and general tensors, eigenprojections, fourth-order
//!   tensors and Voigt mapping;
//! * [`kinematics`]: deformation and rate-of-deformation quantities;
//! * [`volfun`]: volumetric functions, derivatives and admissibility audit;
//! * [`materials`]: elastic constants, energies and stresses;
//! * [`stability`]: objective rates, Hill and corotational stability
//!   contractions, tangent tensors;
//! * [`homsolve`]: uniaxial, equibiaxial and plane-strain homogeneous
//!   problems, limiting states and dilatation curves;
//! * [`cli`]: the command-line front end used by the `neohookean` binary.
//!
//! ```
//! use neohookean::homsolve::{self, LoadCase, SolverConfig};
//! use neohookean::materials::ModelSpec;
//! use neohookean::volfun::VolFunId;
//!
//! let model = ModelSpec::mixed(VolFunId::catalog(4)?, 1.0, 0.3)?;
//! let r = homsolve::solve(LoadCase::Ul, &model, 1.5, &SolverConfig::default())?;
//! assert!(r.converged && r.lambda_t < 1.0 && r.sigma11 > 0.0);
//! # Ok::<(), neohookean::Error>(())
//! ```

// Guards are written as `!(x > 0.0)` so that NaN is rejected with them.
#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod cli;
pub mod error;
pub mod homsolve;
pub mod kinematics;
pub mod materials;
pub mod stability;
pub mod tensor3;
pub mod volfun;

pub use error::{Error, Result};
