//! Objective stress rates, stability contractions and tangent tensors.
//!
//! The rates used here are the Zaremba–Jaumann rate `ZJ[τ] = τ̇ + τ·w − w·τ`,
//! the Oldroyd rate `Old[τ] = τ̇ − ℓ·τ − τ·ℓᵀ` and the Biezeno–Hencky rate
//! `BH[σ] = ZJ[τ]/J`. Closed-form rate relations for each model are evaluated
//! by [`zj_rate`].
//!
//! Two contractions test material stability:
//!
//! * Hill: `ZJ[τ] : d > 0` for all `d ≠ 0` ([`hill_contraction`]);
//! * corotational stability (CSP): `ZJ[σ] : d > 0`, with
//!   `ZJ[σ] : d = (1/J) ZJ[τ] : d − (σ : d) tr d` ([`csp_contraction`]).
//!
//! Each contraction is evaluated twice: directly from the rate relation and
//! by recomposition from quadratic forms in eigenprojection coordinates of `V`:
//!
//! * `A = 2‖Fᵀ·d‖² = P + R`, `P = 2 Σ m_i λ̇_i²`, `R = d̃ : ℝ(V) : d̃`,
//!   `ℝ = Σ_{i≠j} (λ_i² + λ_j²) V_i ⊗_sym V_j`;
//! * `B = (c : d) tr d`, `C = tr c (tr d)²`, `F = (tr d)²`;
//! * `E = P − (4/3)B + (2/9)C`, `D = E + R`, `G = P + F − B`.
//!
//! [`tangents`] returns the tangent tensors `ℂ^Tr` (with `ℂ^Tr : d = Old[τ]/J`)
//! and `ℂ^BH = ℂ^Tr + I ⊗_sym σ + σ ⊗_sym I` (with `ℂ^BH : d = BH[σ]`).

use nalgebra::{DMatrix, Matrix3, SymmetricEigen, Vector3};

use crate::error::{Error, Result};
use crate::kinematics::{self, DeformationState, RateState};
use crate::materials::{self, ModelKind, ModelSpec};
use crate::tensor3::{self, FullTensor3, SuperSymTensor4, SymTensor3};

/// Sign of a contraction value.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Verdict {
    /// Strictly positive.
    Positive,
    /// Exactly zero.
    Zero,
    /// Strictly negative.
    Negative,
}

impl Verdict {
    /// Classifies a value by its sign.
    pub fn of(value: f64) -> Self {
        if value > 0.0 {
            Self::Positive
        } else if value < 0.0 {
            Self::Negative
        } else {
            Self::Zero
        }
    }

    /// Lower-case label used in CSV output.
    pub fn label(&self) -> &'static str {
        match self {
            Self::Positive => "positive",
            Self::Zero => "zero",
            Self::Negative => "negative",
        }
    }
}

/// Quadratic forms entering a contraction. Forms that do not enter are `None`.
#[derive(Clone, Copy, Debug, Default, PartialEq)]
pub struct Breakdown {
    /// `A = 2‖Fᵀ·d‖²`.
    pub a: Option<f64>,
    /// Coaxial part `P` of `A`.
    pub p: Option<f64>,
    /// Orthogonal part `R` of `A`.
    pub r: Option<f64>,
    /// `B = (c : d) tr d`.
    pub b: Option<f64>,
    /// `C = tr c (tr d)²`.
    pub c: Option<f64>,
    /// `D = E + R`.
    pub d: Option<f64>,
    /// `E = P − (4/3)B + (2/9)C`.
    pub e: Option<f64>,
    /// `F = (tr d)²`.
    pub f: Option<f64>,
    /// `G = P + F − B`.
    pub g: Option<f64>,
}

/// Value of a stability contraction with its quadratic-form breakdown.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct ContractionReport {
    /// Contraction evaluated from the closed-form rate relation.
    pub value: f64,
    /// The same contraction recomposed from the breakdown.
    pub recomposed: f64,
    /// Quadratic forms in eigenprojection coordinates.
    pub breakdown: Breakdown,
    /// Sign of `value`.
    pub verdict: Verdict,
}

impl ContractionReport {
    fn new(value: f64, recomposed: f64, breakdown: Breakdown) -> Self {
        Self { value, recomposed, breakdown, verdict: Verdict::of(value) }
    }
}

/// Tangent stiffness tensors of a compressible model.
#[derive(Clone, Debug, PartialEq)]
pub struct TangentPair {
    /// `ℂ^Tr`, mapping `d` to the Oldroyd rate of `τ` divided by `J`.
    pub c_tr: SuperSymTensor4,
    /// `ℂ^BH`, mapping `d` to the Biezeno–Hencky rate of `σ`.
    pub c_bh: SuperSymTensor4,
}

/// Zaremba–Jaumann rate from the model's closed-form rate relation.
///
/// * incompressible: `ZJ[σ] = μ(d·c + c·d) − ṗ I`;
/// * mixed: `ZJ[τ] = μ(d·c + c·d) + λ χ(J) J tr d I`;
/// * vol-iso: `ZJ[τ] = K χ(J) J tr d I + μ J^{-2/3} [−(2/3)(c − tr c I/3) tr d
///   + d·c + c·d − (2/3)(c : d) I]`.
///
/// The spin does not enter; only `rate.d` is used.
///
/// # Errors
/// [`Error::MissingPressure`] if the model is incompressible and `p_dot` is `None`.
pub fn zj_rate(model: &ModelSpec, state: &DeformationState, rate: &RateState, p_dot: Option<f64>) -> Result<SymTensor3> {
    zj_rate_d(model, state, &rate.d, p_dot)
}

fn zj_rate_d(model: &ModelSpec, state: &DeformationState, d: &SymTensor3, p_dot: Option<f64>) -> Result<SymTensor3> {
    let mp = model.params();
    let i = SymTensor3::identity();
    let c = &state.c;
    let j = state.j;
    let tr_d = d.trace();
    let dc_cd = d.anticommutator(c);
    Ok(match model.kind() {
        ModelKind::Incompressible => {
            let pd = p_dot.ok_or(Error::MissingPressure("p_dot"))?;
            dc_cd * mp.mu - i * pd
        }
        ModelKind::Mixed(_) => {
            let v = model.volfun_eval(j)?;
            dc_cd * mp.mu + i * (mp.lambda * v.chi * j * tr_d)
        }
        ModelKind::VolIso(_) => {
            let v = model.volfun_eval(j)?;
            let bracket = c.dev() * (-2.0 / 3.0 * tr_d) + dc_cd - i * (2.0 / 3.0 * c.ddot(d));
            i * (mp.k * v.chi * j * tr_d) + bracket * (mp.mu * j.powf(-2.0 / 3.0))
        }
    })
}

/// Oldroyd rate of `τ` from the Zaremba–Jaumann rate, `Old[τ] = ZJ[τ] − d·τ − τ·d`.
pub fn oldroyd_from_zj(zj: &SymTensor3, d: &SymTensor3, tau: &SymTensor3) -> SymTensor3 {
    *zj - d.anticommutator(tau)
}

struct Forms {
    a_direct: f64,
    p: f64,
    r: f64,
    b: f64,
    c: f64,
    f: f64,
}

fn quadratic_forms(state: &DeformationState, rate: &RateState) -> Forms {
    let dec = &state.decomp;
    let lams = state.distinct_stretches();
    let p = 2.0 * rate.stretch_rates.iter().zip(&dec.multiplicities).map(|(ld, &m)| m as f64 * ld * ld).sum::<f64>();
    let r_tensor = tensor3::eigenprojection_tensor(dec, |ci, cj| ci + cj);
    let r = r_tensor.quad(&rate.d_tilde);
    let tr_d: f64 = rate.stretch_rates.iter().zip(&lams).zip(&dec.multiplicities).map(|((ld, l), &m)| ld / l * m as f64).sum();
    let c_d: f64 = rate.stretch_rates.iter().zip(&lams).zip(&dec.multiplicities).map(|((ld, l), &m)| ld * l * m as f64).sum();
    let tr_c: f64 = lams.iter().zip(&dec.multiplicities).map(|(l, &m)| l * l * m as f64).sum();
    let ftd = state.f.transpose() * rate.d.to_matrix();
    Forms { a_direct: 2.0 * ftd.norm_squared(), p, r, b: c_d * tr_d, c: tr_c * tr_d * tr_d, f: tr_d * tr_d }
}

/// Hill contraction `ZJ[τ] : d`.
///
/// For the incompressible model the rate is first projected onto traceless
/// tensors and the contraction is `μ A(dev d)`.
///
/// # Errors
/// Propagates volumetric-function domain errors.
pub fn hill_contraction(model: &ModelSpec, state: &DeformationState, rate: &RateState) -> Result<ContractionReport> {
    let mp = model.params();
    let j = state.j;
    if let ModelKind::Incompressible = model.kind() {
        let dev_rate = kinematics::rate_from_d(state, &rate.d.dev());
        let q = quadratic_forms(state, &dev_rate);
        let value = zj_rate_d(model, state, &dev_rate.d, Some(0.0))?.ddot(&dev_rate.d);
        let bd = Breakdown { a: Some(q.a_direct), p: Some(q.p), r: Some(q.r), ..Default::default() };
        return Ok(ContractionReport::new(value, mp.mu * (q.p + q.r), bd));
    }
    let q = quadratic_forms(state, rate);
    let value = zj_rate(model, state, rate, None)?.ddot(&rate.d);
    let v = model.volfun_eval(j)?;
    Ok(match model.kind() {
        ModelKind::Mixed(_) => {
            let bd = Breakdown { a: Some(q.a_direct), p: Some(q.p), r: Some(q.r), f: Some(q.f), ..Default::default() };
            ContractionReport::new(value, mp.mu * (q.p + q.r) + mp.lambda * v.chi * j * q.f, bd)
        }
        _ => {
            let e = q.p - 4.0 / 3.0 * q.b + 2.0 / 9.0 * q.c;
            let bd = Breakdown {
                a: Some(q.a_direct),
                p: Some(q.p),
                r: Some(q.r),
                b: Some(q.b),
                c: Some(q.c),
                d: Some(e + q.r),
                e: Some(e),
                f: Some(q.f),
                g: None,
            };
            ContractionReport::new(value, mp.k * v.chi * j * q.f + mp.mu * j.powf(-2.0 / 3.0) * (e + q.r), bd)
        }
    })
}

/// Corotational stability contraction `ZJ[σ] : d = (1/J) ZJ[τ] : d − (σ : d) tr d`.
///
/// Recompositions:
/// * mixed: `λ J h″ F + (μ/J)(G + R)`;
/// * vol-iso: `K J h″ F + μ J^{-5/3} (E + R − B + C/3)`.
///
/// # Errors
/// [`Error::Unsupported`] for the incompressible model.
pub fn csp_contraction(model: &ModelSpec, state: &DeformationState, rate: &RateState) -> Result<ContractionReport> {
    if !model.is_compressible() {
        return Err(Error::Unsupported("the corotational stability contraction needs a compressible model".into()));
    }
    let mp = model.params();
    let j = state.j;
    let v = model.volfun_eval(j)?;
    let sigma = materials::cauchy_from_state(model, state, None)?;
    let d = &rate.d;
    let value = zj_rate(model, state, rate, None)?.ddot(d) / j - sigma.ddot(d) * d.trace();
    let q = quadratic_forms(state, rate);
    Ok(match model.kind() {
        ModelKind::Mixed(_) => {
            let g = q.p + q.f - q.b;
            let bd =
                Breakdown { a: Some(q.a_direct), p: Some(q.p), r: Some(q.r), b: Some(q.b), f: Some(q.f), g: Some(g), ..Default::default() };
            ContractionReport::new(value, mp.lambda * j * v.hpp * q.f + mp.mu / j * (g + q.r), bd)
        }
        _ => {
            let e = q.p - 4.0 / 3.0 * q.b + 2.0 / 9.0 * q.c;
            let bd = Breakdown {
                a: Some(q.a_direct),
                p: Some(q.p),
                r: Some(q.r),
                b: Some(q.b),
                c: Some(q.c),
                d: Some(e + q.r),
                e: Some(e),
                f: Some(q.f),
                g: None,
            };
            let rec = mp.k * j * v.hpp * q.f + mp.mu * j.powf(-5.0 / 3.0) * (e + q.r - q.b + q.c / 3.0);
            ContractionReport::new(value, rec, bd)
        }
    })
}

/// The quadratic form `E` in principal stretches and stretch rates,
/// `(2x₁ − a x₂ − b x₃)² + (2x₂ − x₁/a − c x₃)² + (2x₃ − x₁/b − x₂/c)²`,
/// with `x_i = λ̇_i`, `a = λ₁/λ₂`, `b = λ₁/λ₃`, `c = λ₂/λ₃`.
///
/// This equals `(9/2)(P − (4/3)B + (2/9)C)` for `d̂ = Σ (λ̇_i/λ_i) V_i`.
pub fn quad_form_e(lams: [f64; 3], lamdots: [f64; 3]) -> f64 {
    let [x1, x2, x3] = lamdots;
    let (a, b, c) = (lams[0] / lams[1], lams[0] / lams[2], lams[1] / lams[2]);
    let t1 = 2.0 * x1 - x2 * a - x3 * b;
    let t2 = 2.0 * x2 - x1 / a - x3 * c;
    let t3 = 2.0 * x3 - x1 / b - x2 / c;
    t1 * t1 + t2 * t2 + t3 * t3
}

/// Expanded polynomial form of [`quad_form_e`].
pub fn quad_form_e_expanded(lams: [f64; 3], lamdots: [f64; 3]) -> f64 {
    let [x1, x2, x3] = lamdots;
    let (a, b, c) = (lams[0] / lams[1], lams[0] / lams[2], lams[1] / lams[2]);
    x1 * x1 * (4.0 + 1.0 / (a * a) + 1.0 / (b * b))
        + x2 * x2 * (4.0 + a * a + 1.0 / (c * c))
        + x3 * x3 * (4.0 + b * b + c * c)
        + x1 * x2 * (-4.0 * a - 4.0 / a + 2.0 / (b * c))
        + x1 * x3 * (-4.0 * b - 4.0 / b + 2.0 * c / a)
        + x2 * x3 * (-4.0 * c - 4.0 / c + 2.0 * a * b)
}

/// Matrix of the homogeneous system whose null space makes `E` vanish.
pub fn system_matrix_a(a: f64, b: f64, c: f64) -> Matrix3<f64> {
    Matrix3::new(2.0, -a, -b, -1.0 / a, 2.0, -c, -1.0 / b, -1.0 / c, 2.0)
}

/// Returns `(det A, (b − ac)²)` for the system matrix of [`system_matrix_a`].
///
/// Expanding the determinant gives `det A = −(b − ac)²/(abc)`, so the two
/// entries agree only when `b = ac`, which always holds for stretch ratios.
pub fn det_a_identity(a: f64, b: f64, c: f64) -> (f64, f64) {
    (system_matrix_a(a, b, c).determinant(), (b - a * c).powi(2))
}

/// Tangent tensors of a compressible model.
///
/// * mixed: `ℂ^Tr = (2/J)(μ − λ J h′) I ⊗_sym I + λ χ I ⊗ I`;
/// * vol-iso: `ℂ^Tr = [K χ + (2/9) μ tr c J^{-5/3}] I ⊗ I
///   + [(2/3) μ tr c J^{-5/3} − 2 K h′] I ⊗_sym I − (2/3) μ J^{-5/3} (c ⊗ I + I ⊗ c)`.
///
/// # Errors
/// [`Error::Unsupported`] for the incompressible model.
pub fn tangents(model: &ModelSpec, state: &DeformationState) -> Result<TangentPair> {
    let mp = model.params();
    let j = state.j;
    let i = SymTensor3::identity();
    let isym = SuperSymTensor4::sym_identity();
    let ii = tensor3::dyad(&i, &i);
    let c_tr = match model.kind() {
        ModelKind::Incompressible => {
            return Err(Error::Unsupported("no tangent stiffness tensor is defined for the incompressible model".into()))
        }
        ModelKind::Mixed(_) => {
            let v = model.volfun_eval(j)?;
            isym.scaled(2.0 / j * (mp.mu - mp.lambda * v.jhp)) + ii.scaled(mp.lambda * v.chi)
        }
        ModelKind::VolIso(_) => {
            let v = model.volfun_eval(j)?;
            let tr_c = state.c.trace();
            let j53 = j.powf(-5.0 / 3.0);
            ii.scaled(mp.k * v.chi + 2.0 / 9.0 * mp.mu * tr_c * j53) + isym.scaled(2.0 / 3.0 * mp.mu * tr_c * j53 - 2.0 * mp.k * v.hp)
                - tensor3::dyad(&state.c, &i).scaled(4.0 / 3.0 * mp.mu * j53)
        }
    };
    let sigma = materials::cauchy_from_state(model, state, None)?;
    let c_bh = c_tr.clone() + tensor3::sym_outer(&i, &sigma).scaled(2.0);
    Ok(TangentPair { c_tr, c_bh })
}

/// Minimum of a quadratic form on unit symmetric tensors.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct QuadMin {
    /// Minimum of the form over `‖d‖ = 1`, evaluated as `d : L(d)` at the
    /// minimiser so that large eigenvalues in other directions do not swamp it.
    pub value: f64,
    /// A unit minimiser.
    pub direction: SymTensor3,
}

/// Minimises `d : L(d)` over unit symmetric `d` for a linear map `L`.
///
/// The 6×6 matrix of the form in an orthonormal basis of symmetric tensors is
/// symmetrised and diagonalised.
pub fn minimize_form(map: impl Fn(&SymTensor3) -> Result<SymTensor3>) -> Result<QuadMin> {
    minimize_form_on(&tensor3::orthonormal_sym_basis(), map)
}

/// Minimises `d : L(d)` over unit `d` in the span of an orthonormal basis.
pub fn minimize_form_on(basis: &[SymTensor3], map: impl Fn(&SymTensor3) -> Result<SymTensor3>) -> Result<QuadMin> {
    let n = basis.len();
    let images: Vec<SymTensor3> = basis.iter().map(&map).collect::<Result<_>>()?;
    let m = DMatrix::from_fn(n, n, |r, c| 0.5 * (basis[r].ddot(&images[c]) + basis[c].ddot(&images[r])));
    let eig = SymmetricEigen::new(m);
    let k = eig.eigenvalues.imin();
    let v = eig.eigenvectors.column(k);
    let direction = basis.iter().enumerate().fold(SymTensor3::zero(), |acc, (i, e)| acc + *e * v[i]);
    let direction = direction * (1.0 / direction.norm());
    Ok(QuadMin { value: direction.ddot(&map(&direction)?), direction })
}

/// Orthonormal basis of traceless symmetric tensors.
pub fn traceless_basis() -> [SymTensor3; 5] {
    let full = tensor3::orthonormal_sym_basis();
    let r2 = std::f64::consts::FRAC_1_SQRT_2;
    let r6 = 1.0 / 6f64.sqrt();
    [SymTensor3::diag(r2, -r2, 0.0), SymTensor3::diag(r6, r6, -2.0 * r6), full[3], full[4], full[5]]
}

/// Minimum of the Hill contraction over unit `d` at a state.
///
/// # Errors
/// Propagates evaluation errors.
pub fn hill_minimum(model: &ModelSpec, state: &DeformationState) -> Result<QuadMin> {
    match model.kind() {
        ModelKind::Incompressible => minimize_form_on(&traceless_basis(), |d| zj_rate_d(model, state, d, Some(0.0))),
        _ => minimize_form(|d| zj_rate_d(model, state, d, None)),
    }
}

/// Minimum of the corotational stability contraction over unit `d` at a state.
///
/// # Errors
/// [`Error::Unsupported`] for the incompressible model.
pub fn csp_minimum(model: &ModelSpec, state: &DeformationState) -> Result<QuadMin> {
    if !model.is_compressible() {
        return Err(Error::Unsupported("the corotational stability contraction needs a compressible model".into()));
    }
    let sigma = materials::cauchy_from_state(model, state, None)?;
    let j = state.j;
    minimize_form(|d| Ok(zj_rate_d(model, state, d, None)? * (1.0 / j) - sigma * d.trace()))
}

/// A state and rate at which a stability contraction is negative.
#[derive(Clone, Debug, PartialEq)]
pub struct Witness {
    /// The model, with the Poisson's ratio at which the violation was found.
    pub model: ModelSpec,
    /// Principal stretches of the diagonal deformation gradient.
    pub stretches: [f64; 3],
    /// Rate of deformation (unit norm).
    pub d: SymTensor3,
    /// Contraction value at this state and rate.
    pub value: f64,
}

fn diag_state(stretches: [f64; 3]) -> Result<DeformationState> {
    kinematics::kinematics_from_f(&FullTensor3::from_diagonal(&Vector3::from(stretches)))
}

/// Log-spaced values `lo..=hi`.
pub fn log_grid(lo: f64, hi: f64, n: usize) -> Vec<f64> {
    if n == 1 {
        return vec![lo];
    }
    let (a, b) = (lo.ln(), hi.ln());
    (0..n).map(|k| (a + (b - a) * k as f64 / (n - 1) as f64).exp()).collect()
}

/// Searches for a Hill violation at volume ratios `J < 1/2` with spherical
/// rates, letting `ν` approach `0.5`.
///
/// Returns the first negative contraction found, in grid order.
///
/// # Errors
/// Propagates parameter and evaluation errors.
pub fn hill_violation_search(kind: ModelKind, mu: f64) -> Result<Option<Witness>> {
    let rate_d = SymTensor3::identity() * (1.0 / 3f64.sqrt());
    for nu in [0.3, 0.45, 0.49, 0.499, 0.4999] {
        let model = ModelSpec::new(kind, materials::MaterialParams::from_mu_nu(mu, nu)?)?;
        for j in log_grid(0.49, 1e-3, 40) {
            let k = j.cbrt();
            let state = diag_state([k; 3])?;
            let rate = kinematics::rate_from_d(&state, &rate_d);
            let value = hill_contraction(&model, &state, &rate)?.value;
            if value < 0.0 {
                return Ok(Some(Witness { model, stretches: [k; 3], d: rate_d, value }));
            }
        }
    }
    Ok(None)
}

/// Poisson's ratios scanned by the grid searches.
pub const SEARCH_NUS: [f64; 4] = [0.0, 0.25, 0.45, 0.4999];

/// Searches a deterministic grid of diagonal states for a CSP violation.
///
/// Stretches run over a log grid on `[0.25, 4]` and `ν` over [`SEARCH_NUS`]
/// (restricted to the admissible range of the kind). The most negative minimum
/// over all states is returned.
///
/// # Errors
/// Propagates parameter and evaluation errors.
pub fn csp_violation_search(kind: ModelKind, mu: f64) -> Result<Option<Witness>> {
    let grid = log_grid(0.25, 4.0, 9);
    let mut best: Option<Witness> = None;
    for nu in SEARCH_NUS {
        let model = ModelSpec::new(kind, materials::MaterialParams::from_mu_nu(mu, nu)?)?;
        for &l1 in &grid {
            for &l2 in &grid {
                for &l3 in &grid {
                    let st = [l1, l2, l3];
                    let qm = csp_minimum(&model, &diag_state(st)?)?;
                    if qm.value < 0.0 && best.as_ref().is_none_or(|w| qm.value < w.value) {
                        best = Some(Witness { model, stretches: st, d: qm.direction, value: qm.value });
                    }
                }
            }
        }
    }
    Ok(best)
}

/// Result of checking Hill positivity on a grid.
#[derive(Clone, Debug, PartialEq)]
pub struct GridCheck {
    /// Number of states checked.
    pub states: usize,
    /// Smallest minimum contraction, normalised by `μ`, and where it occurred.
    pub worst: Option<Witness>,
    /// Number of states with a non-positive minimum.
    pub failures: usize,
}

/// Checks the Hill contraction for positivity over unit rates on a grid of
/// diagonal states: `n` log-spaced stretches per axis on `[lo, hi]` for each `ν`.
///
/// # Errors
/// Propagates parameter and evaluation errors.
pub fn hill_grid_check(kind: ModelKind, mu: f64, nus: &[f64], lo: f64, hi: f64, n: usize) -> Result<GridCheck> {
    let grid = log_grid(lo, hi, n);
    let mut out = GridCheck { states: 0, worst: None, failures: 0 };
    for &nu in nus {
        let model = ModelSpec::new(kind, materials::MaterialParams::from_mu_nu(mu, nu)?)?;
        for &l1 in &grid {
            for &l2 in &grid {
                for &l3 in &grid {
                    let st = [l1, l2, l3];
                    let qm = hill_minimum(&model, &diag_state(st)?)?;
                    out.states += 1;
                    if !(qm.value > 0.0) {
                        out.failures += 1;
                    }
                    let v = qm.value / mu;
                    if out.worst.as_ref().is_none_or(|w| v < w.value) {
                        out.worst = Some(Witness { model, stretches: st, d: qm.direction, value: v });
                    }
                }
            }
        }
    }
    Ok(out)
}

/// Relative errors of the closed-form rates against finite differences.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct RateCheck {
    /// Zaremba–Jaumann rate of `τ` against differences of `τ` along the motion.
    pub zj: f64,
    /// `ℂ^Tr : d` against the differenced Oldroyd rate divided by `J`.
    pub oldroyd: f64,
    /// `ℂ^BH : d` against `ZJ[τ]/J` from the closed form.
    pub bh: f64,
    /// Componentwise defect of `ℂ^BH − ℂ^Tr − I ⊗_sym σ − σ ⊗_sym I`.
    pub bh_identity: f64,
}

fn rel_err(a: &SymTensor3, b: &SymTensor3) -> f64 {
    (*a - *b).norm() / a.norm().max(b.norm()).max(1e-300)
}

/// Compares the rate relations with central differences along the motion
/// `F(t) = (I + t L) · F₀` at `t = 0`, where the velocity gradient is `L`.
///
/// # Errors
/// [`Error::Unsupported`] for the incompressible model; propagates evaluation errors.
pub fn fd_rate_check(model: &ModelSpec, f0: &FullTensor3, l: &FullTensor3, h: f64) -> Result<RateCheck> {
    let tau_at = |t: f64| -> Result<SymTensor3> {
        let f = (FullTensor3::identity() + l * t) * f0;
        Ok(materials::cauchy_stress(model, &f, None)?.kirchhoff)
    };
    let state = kinematics::kinematics_from_f(f0)?;
    let rate = kinematics::rate_from_velocity_gradient(&state, l);
    let tau = tau_at(0.0)?;
    let tau_dot = (tau_at(h)? - tau_at(-h)?) * (0.5 / h);
    let tm = tau.to_matrix();
    let zj_fd = tensor3::sym(&(tau_dot.to_matrix() + tm * rate.w - rate.w * tm));
    let old_fd = tensor3::sym(&(tau_dot.to_matrix() - l * tm - tm * l.transpose()));
    let zj = zj_rate(model, &state, &rate, None)?;
    let tan = tangents(model, &state)?;
    let sigma = tau * (1.0 / state.j);
    let i = SymTensor3::identity();
    let expected_bh = tan.c_tr.clone() + tensor3::sym_outer(&i, &sigma) + tensor3::sym_outer(&sigma, &i);
    Ok(RateCheck {
        zj: rel_err(&zj, &zj_fd),
        oldroyd: rel_err(&tan.c_tr.contract(&rate.d), &(old_fd * (1.0 / state.j))),
        bh: rel_err(&tan.c_bh.contract(&rate.d), &(zj * (1.0 / state.j))),
        bh_identity: tan.c_bh.max_abs_diff(&expected_bh),
    })
}

/// Deterministic family of smooth motions `(F₀, L)` used by the CLI checks.
pub fn reference_motions(count: usize) -> Vec<(FullTensor3, FullTensor3)> {
    (0..count)
        .map(|n| {
            let s = |k: usize, amp: f64| amp * ((n * 9 + k) as f64 * 1.618_033_988_75 + 0.37).sin();
            let f0 = FullTensor3::from_fn(|r, c| if r == c { 1.0 + s(r * 3 + c, 0.35) } else { s(r * 3 + c, 0.2) });
            let l = FullTensor3::from_fn(|r, c| s(9 + r * 3 + c, 0.8));
            (f0, l)
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn e_example_value() {
        assert_eq!(quad_form_e([1.0; 3], [1.0, -1.0, 0.0]), 18.0);
        assert_eq!(quad_form_e_expanded([1.0; 3], [1.0, -1.0, 0.0]), 18.0);
    }

    #[test]
    fn det_a_closed_form() {
        let (det, sq) = det_a_identity(1.0, 2.0, 1.0);
        assert!((det + 0.5).abs() < 1e-15);
        assert_eq!(sq, 1.0);
        let (det, sq) = det_a_identity(2.0, 6.0, 3.0);
        assert!(det.abs() < 1e-14 && sq == 0.0);
    }

    #[test]
    fn reference_motions_are_valid() {
        for (f0, _) in reference_motions(10) {
            assert!(f0.determinant() > 0.0);
        }
    }
}
