//! Material parameters, strain energies and stresses of the neo-Hookean models.
//!
//! Three model kinds are supported:
//!
//! * incompressible: `W = μ(‖F‖² − 3 − 2 ln J)/2 − p ln J`, `σ = μ(c − I) − pI`;
//! * mixed: `W = μ(‖F‖² − 3 − 2 ln J)/2 + λ h(J)`, `σ = (μ/J)(c − I) + λ h′(J) I`;
//! * vol-iso: `W = μ(‖J^{-1/3}F‖² − 3)/2 + K h(J)`, `σ = (μ/J) dev c̄ + K h′(J) I`.
//!
//! In the vol-iso energy the term `ln J̄` of the modified gradient vanishes
//! identically and is omitted. The incompressible model takes the hydrostatic
//! pressure `p` as an explicit argument and expects `det F = 1`.

use std::fmt;

use crate::error::{Error, Result};
use crate::kinematics::{self, DeformationState};
use crate::tensor3::{FullTensor3, SymTensor3};
use crate::volfun::{self, VolFunEval, VolFunId};

/// Isotropic elastic constants.
///
/// The constants are related by `μ = E/(2(1+ν))`, `λ = 2μν/(1−2ν)` and
/// `K = λ + 2μ/3`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct MaterialParams {
    /// Shear modulus `μ`.
    pub mu: f64,
    /// Poisson's ratio `ν`.
    pub nu: f64,
    /// Lamé constant `λ`.
    pub lambda: f64,
    /// Bulk modulus `K`.
    pub k: f64,
    /// Young's modulus `E`.
    pub e: f64,
}

impl MaterialParams {
    /// Constants from the shear modulus and Poisson's ratio.
    ///
    /// # Errors
    /// [`Error::Parameter`] unless `μ > 0` and `−1 < ν < 0.5`.
    pub fn from_mu_nu(mu: f64, nu: f64) -> Result<Self> {
        if !(mu > 0.0) || !mu.is_finite() {
            return Err(Error::Parameter(format!("shear modulus mu = {mu} must be positive")));
        }
        if !(nu > -1.0 && nu < 0.5) {
            return Err(Error::Parameter(format!(
                "Poisson's ratio nu = {nu} must satisfy -1 < nu < 0.5 (use the incompressible model for nu = 0.5)"
            )));
        }
        let lambda = 2.0 * mu * nu / (1.0 - 2.0 * nu);
        Ok(Self { mu, nu, lambda, k: lambda + 2.0 * mu / 3.0, e: 2.0 * mu * (1.0 + nu) })
    }

    /// Constants from Young's modulus and Poisson's ratio.
    ///
    /// # Errors
    /// As for [`MaterialParams::from_mu_nu`].
    pub fn from_e_nu(e: f64, nu: f64) -> Result<Self> {
        let mut p = Self::from_mu_nu(e / (2.0 * (1.0 + nu)), nu)?;
        p.e = e;
        Ok(p)
    }

    /// Constants from the Lamé pair `(μ, λ)`.
    ///
    /// # Errors
    /// As for [`MaterialParams::from_mu_nu`].
    pub fn from_mu_lambda(mu: f64, lambda: f64) -> Result<Self> {
        let nu = lambda / (2.0 * (lambda + mu));
        let mut p = Self::from_mu_nu(mu, nu)?;
        p.lambda = lambda;
        p.k = lambda + 2.0 * mu / 3.0;
        Ok(p)
    }

    /// Constants of an incompressible material: `ν = 0.5`, `λ = K = ∞`, `E = 3μ`.
    ///
    /// # Errors
    /// [`Error::Parameter`] unless `μ > 0`.
    pub fn incompressible(mu: f64) -> Result<Self> {
        if !(mu > 0.0) || !mu.is_finite() {
            return Err(Error::Parameter(format!("shear modulus mu = {mu} must be positive")));
        }
        Ok(Self { mu, nu: 0.5, lambda: f64::INFINITY, k: f64::INFINITY, e: 3.0 * mu })
    }
}

/// Kind of neo-Hookean model.
#[derive(Clone, Copy, Debug, PartialEq)]
pub enum ModelKind {
    /// Classical incompressible model with a pressure multiplier.
    Incompressible,
    /// Compressible model with coupled isochoric and volumetric response.
    Mixed(VolFunId),
    /// Compressible model with decoupled isochoric and volumetric energies.
    VolIso(VolFunId),
}

impl ModelKind {
    /// Short label used in CSV output: `inc`, `mixed` or `voliso`.
    pub fn label(&self) -> &'static str {
        match self {
            Self::Incompressible => "inc",
            Self::Mixed(_) => "mixed",
            Self::VolIso(_) => "voliso",
        }
    }

    /// Volumetric function, if the kind has one.
    pub fn volfun(&self) -> Option<VolFunId> {
        match *self {
            Self::Incompressible => None,
            Self::Mixed(id) | Self::VolIso(id) => Some(id),
        }
    }
}

impl fmt::Display for ModelKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.volfun() {
            Some(id) => write!(f, "{} #{id}", self.label()),
            None => f.write_str(self.label()),
        }
    }
}

/// A model kind together with admissible material constants.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct ModelSpec {
    kind: ModelKind,
    params: MaterialParams,
}

impl ModelSpec {
    /// Validates and builds a model.
    ///
    /// Mixed models need `0 ≤ ν < 0.5`, vol-iso models need `−1 < ν < 0.5`,
    /// and `μ > 0` always.
    ///
    /// # Errors
    /// [`Error::Parameter`] for inadmissible constants or an invalid
    /// volumetric-function parameter.
    pub fn new(kind: ModelKind, params: MaterialParams) -> Result<Self> {
        if !(params.mu > 0.0) {
            return Err(Error::Parameter(format!("shear modulus mu = {} must be positive", params.mu)));
        }
        match kind {
            ModelKind::Incompressible => {}
            ModelKind::Mixed(id) => {
                id.validate()?;
                if !(params.nu >= 0.0 && params.nu < 0.5) {
                    return Err(Error::Parameter(format!(
                        "mixed models require 0 <= nu < 0.5, got nu = {} (use the incompressible model for nu = 0.5)",
                        params.nu
                    )));
                }
            }
            ModelKind::VolIso(id) => {
                id.validate()?;
                if !(params.nu > -1.0 && params.nu < 0.5) {
                    return Err(Error::Parameter(format!(
                        "vol-iso models require -1 < nu < 0.5, got nu = {} (use the incompressible model for nu = 0.5)",
                        params.nu
                    )));
                }
            }
        }
        Ok(Self { kind, params })
    }

    /// Incompressible model with shear modulus `μ`.
    ///
    /// # Errors
    /// [`Error::Parameter`] unless `μ > 0`.
    pub fn incompressible(mu: f64) -> Result<Self> {
        Self::new(ModelKind::Incompressible, MaterialParams::incompressible(mu)?)
    }

    /// Mixed model from `(μ, ν)`.
    ///
    /// # Errors
    /// [`Error::Parameter`] for inadmissible constants.
    pub fn mixed(id: VolFunId, mu: f64, nu: f64) -> Result<Self> {
        Self::new(ModelKind::Mixed(id), MaterialParams::from_mu_nu(mu, nu)?)
    }

    /// Vol-iso model from `(μ, ν)`.
    ///
    /// # Errors
    /// [`Error::Parameter`] for inadmissible constants.
    pub fn vol_iso(id: VolFunId, mu: f64, nu: f64) -> Result<Self> {
        Self::new(ModelKind::VolIso(id), MaterialParams::from_mu_nu(mu, nu)?)
    }

    /// Model kind.
    pub fn kind(&self) -> ModelKind {
        self.kind
    }

    /// Material constants.
    pub fn params(&self) -> &MaterialParams {
        &self.params
    }

    /// Volumetric function, if any.
    pub fn volfun(&self) -> Option<VolFunId> {
        self.kind.volfun()
    }

    /// Whether the model is compressible.
    pub fn is_compressible(&self) -> bool {
        !matches!(self.kind, ModelKind::Incompressible)
    }

    /// Volumetric function values at `J`.
    ///
    /// # Errors
    /// [`Error::Unsupported`] for the incompressible kind, [`Error::Domain`]
    /// for `J ≤ 0`.
    pub fn volfun_eval(&self, j: f64) -> Result<VolFunEval> {
        let id = self.volfun().ok_or_else(|| Error::Unsupported("the incompressible model has no volumetric function".into()))?;
        volfun::eval(id, j)
    }
}

/// Stress measures at one state.
#[derive(Clone, Debug, PartialEq)]
pub struct StressResult {
    /// Cauchy stress `σ`.
    pub cauchy: SymTensor3,
    /// Kirchhoff stress `τ = J σ`.
    pub kirchhoff: SymTensor3,
    /// First Piola–Kirchhoff stress `P = τ·F⁻ᵀ`.
    pub first_pk: FullTensor3,
    /// Mean stress `σ_m = tr σ / 3`.
    pub mean_stress: f64,
}

fn require_pressure(model: &ModelSpec, p: Option<f64>) -> Result<f64> {
    match model.kind {
        ModelKind::Incompressible => p.ok_or(Error::MissingPressure("p")),
        _ => Ok(0.0),
    }
}

/// Strain energy per unit reference volume.
///
/// # Errors
/// [`Error::InvalidDeformation`] if `det F ≤ 0`; [`Error::MissingPressure`]
/// if the model is incompressible and `p` is `None`.
pub fn energy(model: &ModelSpec, f: &FullTensor3, p: Option<f64>) -> Result<f64> {
    let j = f.determinant();
    if !(j > 0.0) {
        return Err(Error::InvalidDeformation { det: j });
    }
    let pr = require_pressure(model, p)?;
    let mp = &model.params;
    let frob2 = f.norm_squared();
    let ln_j = j.ln();
    Ok(match model.kind {
        ModelKind::Incompressible => 0.5 * mp.mu * (frob2 - 3.0 - 2.0 * ln_j) - pr * ln_j,
        ModelKind::Mixed(id) => 0.5 * mp.mu * (frob2 - 3.0 - 2.0 * ln_j) + mp.lambda * volfun::eval(id, j)?.h,
        ModelKind::VolIso(id) => 0.5 * mp.mu * (frob2 * j.powf(-2.0 / 3.0) - 3.0) + mp.k * volfun::eval(id, j)?.h,
    })
}

/// Cauchy stress of a model at a deformation state.
///
/// # Errors
/// [`Error::MissingPressure`] if the model is incompressible and `p` is `None`.
pub fn cauchy_from_state(model: &ModelSpec, state: &DeformationState, p: Option<f64>) -> Result<SymTensor3> {
    let pr = require_pressure(model, p)?;
    let mp = &model.params;
    let i = SymTensor3::identity();
    let j = state.j;
    Ok(match model.kind {
        ModelKind::Incompressible => (state.c - i) * mp.mu - i * pr,
        ModelKind::Mixed(id) => (state.c - i) * (mp.mu / j) + i * (mp.lambda * volfun::eval(id, j)?.hp),
        ModelKind::VolIso(id) => kinematics::deviatoric_modified(state) * (mp.mu / j) + i * (mp.k * volfun::eval(id, j)?.hp),
    })
}

/// Cauchy, Kirchhoff and first Piola–Kirchhoff stresses.
///
/// # Errors
/// [`Error::InvalidDeformation`] if `det F ≤ 0`; [`Error::MissingPressure`]
/// if the model is incompressible and `p` is `None`.
pub fn cauchy_stress(model: &ModelSpec, f: &FullTensor3, p: Option<f64>) -> Result<StressResult> {
    let state = kinematics::kinematics_from_f(f)?;
    let cauchy = cauchy_from_state(model, &state, p)?;
    let kirchhoff = cauchy * state.j;
    let f_inv_t = f.try_inverse().ok_or(Error::InvalidDeformation { det: state.j })?.transpose();
    let first_pk = kirchhoff.to_matrix() * f_inv_t;
    Ok(StressResult { mean_stress: cauchy.trace() / 3.0, cauchy, kirchhoff, first_pk })
}

/// Stress of the linear isotropic elastic model.
///
/// The coupled form is `σ = 2με + λ tr ε I` and the decoupled form is
/// `σ = 2μ dev ε + K tr ε I`; the two coincide.
pub fn linear_stress(params: &MaterialParams, eps: &SymTensor3, decoupled: bool) -> SymTensor3 {
    let i = SymTensor3::identity();
    let tr = eps.trace();
    if decoupled {
        eps.dev() * (2.0 * params.mu) + i * (params.k * tr)
    } else {
        *eps * (2.0 * params.mu) + i * (params.lambda * tr)
    }
}
