//! Kinematics of finite deformation in spatial (Eulerian) form.
//!
//! [`DeformationState`] collects the quantities derived from a deformation
//! gradient `F`: the volume ratio `J`, the left Cauchy–Green tensor
//! `c = F·Fᵀ`, principal stretches and the eigenprojections of the left stretch
//! tensor `V`. [`RateState`] holds the velocity gradient `ℓ = Ḟ·F⁻¹`, its
//! symmetric and skew parts `d`, `w`, and the split of `d` into parts coaxial
//! with and orthogonal to `V`.

use crate::error::{Error, Result};
use crate::tensor3::{self, FullTensor3, SpectralDecomp, SymTensor3, DEFAULT_REL_TOL};

/// State of deformation derived from a deformation gradient.
#[derive(Clone, Debug, PartialEq)]
pub struct DeformationState {
    /// Deformation gradient.
    pub f: FullTensor3,
    /// Volume ratio `J = det F`.
    pub j: f64,
    /// Left Cauchy–Green tensor `c = F·Fᵀ`.
    pub c: SymTensor3,
    /// Principal stretches in ascending order, repeated by multiplicity.
    pub stretches: [f64; 3],
    /// Spectral decomposition of `c`. Its eigenprojections are those of `V`
    /// and its distinct eigenvalues are the squared distinct stretches.
    pub decomp: SpectralDecomp,
}

impl DeformationState {
    /// Distinct principal stretches `λ_i`, matching `decomp.projections`.
    pub fn distinct_stretches(&self) -> Vec<f64> {
        self.decomp.values.iter().map(|c| c.sqrt()).collect()
    }

    /// Modified (isochoric) stretches `λ̄_k = λ_k / J^{1/3}`.
    pub fn modified_stretches(&self) -> [f64; 3] {
        let s = self.j.cbrt();
        self.stretches.map(|l| l / s)
    }

    /// Modified left Cauchy–Green tensor `c̄ = J^{-2/3} c`.
    pub fn c_bar(&self) -> SymTensor3 {
        self.c * self.j.powf(-2.0 / 3.0)
    }

    /// Left stretch tensor `V = c^{1/2}`.
    pub fn v(&self) -> SymTensor3 {
        self.decomp.map(f64::sqrt)
    }

    /// Hencky strain `ln V`, provided for diagnostics.
    pub fn hencky(&self) -> SymTensor3 {
        self.decomp.map(|c| 0.5 * c.ln())
    }
}

/// Builds the deformation state of `F`.
///
/// Principal stretches are the square roots of the eigenvalues of `c`; no polar
/// decomposition is performed.
///
/// # Errors
/// [`Error::InvalidDeformation`] if `det F` is not positive.
pub fn kinematics_from_f(f: &FullTensor3) -> Result<DeformationState> {
    let j = f.determinant();
    if !(j > 0.0) || !j.is_finite() {
        return Err(Error::InvalidDeformation { det: j });
    }
    let c = tensor3::sym(&(f * f.transpose()));
    let decomp = tensor3::spectral(&c, DEFAULT_REL_TOL);
    let mut stretches = [0.0; 3];
    let mut k = 0;
    for (value, &mult) in decomp.values.iter().zip(&decomp.multiplicities) {
        for _ in 0..mult {
            stretches[k] = value.max(0.0).sqrt();
            k += 1;
        }
    }
    Ok(DeformationState { f: *f, j, c, stretches, decomp })
}

/// Finger strain `e⁽²⁾ = ½(c − I)`.
pub fn finger_strain(state: &DeformationState) -> SymTensor3 {
    (state.c - SymTensor3::identity()) * 0.5
}

/// Deviator of the modified left Cauchy–Green tensor, `dev c̄`.
pub fn deviatoric_modified(state: &DeformationState) -> SymTensor3 {
    state.c_bar().dev()
}

/// Rate of deformation quantities at a state.
#[derive(Clone, Debug, PartialEq)]
pub struct RateState {
    /// Velocity gradient `ℓ = Ḟ·F⁻¹`.
    pub l: FullTensor3,
    /// Rate of deformation `d = sym ℓ`.
    pub d: SymTensor3,
    /// Vorticity `w = skew ℓ`.
    pub w: FullTensor3,
    /// Part of `d` coaxial with `V`.
    pub d_hat: SymTensor3,
    /// Part of `d` orthogonal to `V`.
    pub d_tilde: SymTensor3,
    /// Rates `λ̇_i` of the distinct principal stretches.
    pub stretch_rates: Vec<f64>,
    /// Rate of the volume ratio, `J̇ = J tr d`.
    pub j_dot: f64,
}

/// Builds the rate state for a motion with gradient `F` and rate `Ḟ`.
///
/// # Errors
/// [`Error::InvalidDeformation`] if `det F` is not positive.
pub fn rate_from_motion(f: &FullTensor3, f_dot: &FullTensor3) -> Result<RateState> {
    let state = kinematics_from_f(f)?;
    let f_inv = f.try_inverse().ok_or(Error::InvalidDeformation { det: state.j })?;
    Ok(rate_from_velocity_gradient(&state, &(f_dot * f_inv)))
}

/// Builds the rate state for a given state and velocity gradient `ℓ`.
///
/// The stretch rates follow from the coaxial part,
/// `d̂ = Σ (λ̇_i/λ_i) V_i`, so `λ̇_i = λ_i (V_i : d) / m_i`.
pub fn rate_from_velocity_gradient(state: &DeformationState, l: &FullTensor3) -> RateState {
    let d = tensor3::sym(l);
    let w = tensor3::skew(l);
    let (d_hat, d_tilde) = tensor3::split_with(&state.decomp, &d);
    let stretch_rates = state
        .distinct_stretches()
        .iter()
        .zip(state.decomp.projections.iter().zip(&state.decomp.multiplicities))
        .map(|(lam, (p, &m))| lam * p.ddot(&d) / m as f64)
        .collect();
    let j_dot = state.j * d.trace();
    RateState { l: *l, d, w, d_hat, d_tilde, stretch_rates, j_dot }
}

/// Rate state for a symmetric rate of deformation with no spin.
pub fn rate_from_d(state: &DeformationState, d: &SymTensor3) -> RateState {
    rate_from_velocity_gradient(state, &d.to_matrix())
}
