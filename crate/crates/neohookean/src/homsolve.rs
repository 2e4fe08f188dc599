//! Homogeneous deformation problems and their limiting states.
//!
//! Three load cases with principal stretches `(λ̃, λ₂, λ₃)` are solved:
//!
//! | case | stretches | `J` | free transverse stress |
//! |------|-----------|-----|------------------------|
//! | [`LoadCase::Ul`] uniaxial loading | `(λ̃, λ_T, λ_T)` | `λ̃ λ_T²` | `σ₂₂ = σ₃₃ = 0` |
//! | [`LoadCase::Elp`] equibiaxial plane stress | `(λ̃, λ̃, λ_T)` | `λ̃² λ_T` | `σ₃₃ = 0` |
//! | [`LoadCase::Ulp`] uniaxial plane strain | `(λ̃, 1, λ_T)` | `λ̃ λ_T` | `σ₃₃ = 0` |
//!
//! For compressible models the lateral stretch `λ_T` is the root of the free
//! transverse Cauchy stress. Stresses are evaluated from logarithmic stretches
//! `l_i = ln λ_i`, with differences of squared stretches formed as
//! `λ_j² expm1(2(l_i − l_j))` and `l_i − l_j` carried without cancellation, so
//! that probes at `λ̃ = 10^{±6}` keep full relative accuracy.
//!
//! The root is bracketed by a scan of `ln λ_T` and refined by a safeguarded
//! Newton iteration that falls back to bisection.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::materials::{self, ModelKind, ModelSpec};
use crate::volfun::{self, safe_exp, VolFunId};

/// Homogeneous load case.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum LoadCase {
    /// Uniaxial loading.
    Ul,
    /// Equibiaxial loading in plane stress.
    Elp,
    /// Uniaxial loading in plane strain.
    Ulp,
}

impl LoadCase {
    /// All cases.
    pub const ALL: [LoadCase; 3] = [LoadCase::Ul, LoadCase::Elp, LoadCase::Ulp];

    /// Lower-case label.
    pub fn label(&self) -> &'static str {
        match self {
            Self::Ul => "ul",
            Self::Elp => "elp",
            Self::Ulp => "ulp",
        }
    }

    /// Volume ratio for given `λ̃` and `λ_T`.
    pub fn volume_ratio(&self, lam: f64, lam_t: f64) -> f64 {
        match self {
            Self::Ul => lam * lam_t * lam_t,
            Self::Elp => lam * lam * lam_t,
            Self::Ulp => lam * lam_t,
        }
    }

    /// Quantities reported by limit probes for this case.
    pub fn quantities(&self) -> &'static [Quantity] {
        match self {
            Self::Ulp => &[Quantity::LambdaT, Quantity::Sigma11, Quantity::Sigma22, Quantity::P11, Quantity::P22],
            _ => &[Quantity::LambdaT, Quantity::Sigma11, Quantity::P11],
        }
    }
}

impl fmt::Display for LoadCase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

impl FromStr for LoadCase {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s.trim().to_ascii_lowercase().as_str() {
            "ul" => Ok(Self::Ul),
            "elp" => Ok(Self::Elp),
            "ulp" => Ok(Self::Ulp),
            other => Err(Error::Parameter(format!("unknown load case `{other}`; expected ul, elp or ulp"))),
        }
    }
}

/// Solution of a homogeneous problem at one `λ̃`.
#[derive(Clone, Debug, PartialEq)]
pub struct SolveResult {
    /// Prescribed stretch `λ̃`.
    pub lambda_tilde: f64,
    /// Lateral stretch `λ_T`.
    pub lambda_t: f64,
    /// Volume ratio `J`.
    pub j: f64,
    /// Axial Cauchy stress.
    pub sigma11: f64,
    /// Second principal Cauchy stress.
    pub sigma22: f64,
    /// Axial first Piola–Kirchhoff stress.
    pub p11: f64,
    /// Second principal first Piola–Kirchhoff stress.
    pub p22: f64,
    /// Whether the root met the tolerance.
    pub converged: bool,
    /// Final value of the transverse-stress residual.
    pub residual: f64,
    /// Diagnostics such as multiple roots or a failed trace cross-check.
    pub warnings: Vec<String>,
}

impl SolveResult {
    /// Placeholder for a point at which no solution was found.
    pub fn failed(lam: f64, err: &Error) -> Self {
        Self {
            lambda_tilde: lam,
            lambda_t: f64::NAN,
            j: f64::NAN,
            sigma11: f64::NAN,
            sigma22: f64::NAN,
            p11: f64::NAN,
            p22: f64::NAN,
            converged: false,
            residual: f64::NAN,
            warnings: vec![err.to_string()],
        }
    }

    /// Value of a reported quantity.
    pub fn get(&self, q: Quantity) -> f64 {
        match q {
            Quantity::LambdaT => self.lambda_t,
            Quantity::Sigma11 => self.sigma11,
            Quantity::Sigma22 => self.sigma22,
            Quantity::P11 => self.p11,
            Quantity::P22 => self.p22,
        }
    }
}

/// Root-finding settings.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct SolverConfig {
    /// Lower end of the scanned `ln λ_T`.
    pub ln_min: f64,
    /// Upper end of the scanned `ln λ_T`.
    pub ln_max: f64,
    /// Scan step in `ln λ_T`.
    pub step: f64,
    /// Continuation seed for `ln λ_T`; the bracket nearest to it is chosen.
    pub seed_ln: f64,
    /// Iteration cap of the refinement.
    pub max_iter: usize,
    /// Residual tolerance relative to `μ + λ + K`.
    pub rel_tol: f64,
}

impl Default for SolverConfig {
    fn default() -> Self {
        Self { ln_min: -80.0, ln_max: 80.0, step: 0.05, seed_ln: 0.0, max_iter: 400, rel_tol: 1e-12 }
    }
}

/// Closed-form solution for the incompressible model.
///
/// `λ_T` is `λ̃^{-1/2}` (UL), `λ̃^{-2}` (ELP) or `λ̃^{-1}` (ULP), and `J = 1`.
pub fn solve_incompressible(case: LoadCase, mu: f64, lam: f64) -> SolveResult {
    let (lam_t, s11, p11, s22, p22) = match case {
        LoadCase::Ul => (lam.powf(-0.5), mu * (lam * lam - 1.0 / lam), mu * (lam - lam.powi(-2)), 0.0, 0.0),
        LoadCase::Elp => (
            lam.powi(-2),
            mu * (lam * lam - lam.powi(-4)),
            mu * (lam - lam.powi(-5)),
            mu * (lam * lam - lam.powi(-4)),
            mu * (lam - lam.powi(-5)),
        ),
        LoadCase::Ulp => {
            let s22 = -mu * (lam.powi(-2) - 1.0);
            (1.0 / lam, mu * (lam * lam - lam.powi(-2)), mu * (lam - lam.powi(-3)), s22, s22)
        }
    };
    SolveResult {
        lambda_tilde: lam,
        lambda_t: lam_t,
        j: 1.0,
        sigma11: s11,
        sigma22: s22,
        p11,
        p22,
        converged: true,
        residual: 0.0,
        warnings: Vec::new(),
    }
}

/// Principal log-stretches `l_i = ln λ_i`, with pairwise differences kept exact.
#[derive(Clone, Copy, Debug)]
struct LogStretches {
    /// `l_i = coef_i · L + off_i` with `L = ln λ̃`.
    coef: [f64; 3],
    off: [f64; 3],
    big_l: f64,
}

impl LogStretches {
    /// `t` is `ln(λ_T/λ̃)` for UL and ELP and `ln λ_T` for ULP.
    fn new(case: LoadCase, big_l: f64, t: f64) -> Self {
        let (coef, off) = match case {
            LoadCase::Ul => ([1.0, 1.0, 1.0], [0.0, t, t]),
            LoadCase::Elp => ([1.0, 1.0, 1.0], [0.0, 0.0, t]),
            LoadCase::Ulp => ([1.0, 0.0, 0.0], [0.0, 0.0, t]),
        };
        Self { coef, off, big_l }
    }

    fn l(&self, i: usize) -> f64 {
        self.coef[i] * self.big_l + self.off[i]
    }

    fn diff(&self, i: usize, j: usize) -> f64 {
        (self.coef[i] - self.coef[j]) * self.big_l + (self.off[i] - self.off[j])
    }

    fn ln_j(&self) -> f64 {
        (self.coef[0] + self.coef[1] + self.coef[2]) * self.big_l + (self.off[0] + self.off[1] + self.off[2])
    }

    fn ln_lambda_t(&self, case: LoadCase) -> f64 {
        match case {
            LoadCase::Ul => self.l(1),
            LoadCase::Elp | LoadCase::Ulp => self.l(2),
        }
    }
}

fn transverse_index(case: LoadCase) -> usize {
    match case {
        LoadCase::Ul => 1,
        LoadCase::Elp | LoadCase::Ulp => 2,
    }
}

fn t_from_ln_lambda_t(case: LoadCase, big_l: f64, ln_lt: f64) -> f64 {
    match case {
        LoadCase::Ul | LoadCase::Elp => ln_lt - big_l,
        LoadCase::Ulp => ln_lt,
    }
}

fn require_volfun(model: &ModelSpec) -> Result<VolFunId> {
    model.volfun().ok_or_else(|| Error::Unsupported("the incompressible model is solved in closed form".into()))
}

/// Principal Cauchy stresses of a compressible model at log-stretches.
fn principal_stresses(model: &ModelSpec, ls: &LogStretches) -> [f64; 3] {
    let mp = model.params();
    let ln_j = ls.ln_j();
    let id = model.volfun().unwrap_or(VolFunId::Quadratic);
    let hp = volfun::hp_from_log(id, ln_j);
    match model.kind() {
        ModelKind::VolIso(_) => {
            let scale = mp.mu * safe_exp(-5.0 / 3.0 * ln_j) / 3.0;
            let vol = mp.k * hp;
            std::array::from_fn(|i| {
                let dev: f64 = (0..3).filter(|&j| j != i).map(|j| safe_exp(2.0 * ls.l(j)) * (2.0 * ls.diff(i, j)).exp_m1()).sum();
                scale * dev + vol
            })
        }
        _ => {
            let scale = mp.mu * safe_exp(-ln_j);
            let vol = mp.lambda * hp;
            std::array::from_fn(|i| scale * (2.0 * ls.l(i)).exp_m1() + vol)
        }
    }
}

/// Transverse-stress residual whose root defines `λ_T(λ̃)`.
///
/// This is `σ₂₂` for UL and `σ₃₃` for ELP and ULP at stretches built from
/// `λ̃` and the trial `λ_T`.
///
/// # Errors
/// [`Error::Unsupported`] for the incompressible model; [`Error::Domain`]
/// for non-positive stretches.
pub fn residual(case: LoadCase, model: &ModelSpec, lam: f64, lam_t: f64) -> Result<f64> {
    require_volfun(model)?;
    if !(lam > 0.0 && lam_t > 0.0) {
        return Err(Error::Domain { j: case.volume_ratio(lam, lam_t) });
    }
    let big_l = lam.ln();
    let ls = LogStretches::new(case, big_l, t_from_ln_lambda_t(case, big_l, lam_t.ln()));
    Ok(principal_stresses(model, &ls)[transverse_index(case)])
}

/// Lateral stretch of the mixed model with the quadratic function `(J − 1)²/2`
/// in closed form.
///
/// * UL: `x = λ_T²` is the positive root of `λλ̃ x² + (μ/λ̃ − λ) x − μ/λ̃ = 0`;
/// * ELP: positive root of `(λλ̃⁴ + μ) λ_T² − λλ̃² λ_T − μ = 0`;
/// * ULP: positive root of `(λλ̃² + μ) λ_T² − λλ̃ λ_T − μ = 0`.
///
/// # Errors
/// [`Error::Unsupported`] unless the model is mixed with volumetric function 7.
pub fn closed_form_mixed7(case: LoadCase, lam: f64, model: &ModelSpec) -> Result<f64> {
    if model.kind() != ModelKind::Mixed(VolFunId::Quadratic) {
        return Err(Error::Unsupported(format!("closed-form lateral stretch needs mixed #7, got {}", model.kind())));
    }
    let mp = model.params();
    let (mu, la) = (mp.mu, mp.lambda);
    Ok(match case {
        LoadCase::Ul => positive_root(la * lam, mu / lam - la, -mu / lam).sqrt(),
        LoadCase::Elp => positive_root(la * lam.powi(4) + mu, -la * lam * lam, -mu),
        LoadCase::Ulp => positive_root(la * lam * lam + mu, -la * lam, -mu),
    })
}

/// Positive root of `a x² + b x + c` with `a ≥ 0 > c`, in cancellation-free form.
fn positive_root(a: f64, b: f64, c: f64) -> f64 {
    if a == 0.0 {
        return -c / b;
    }
    let disc = (b * b - 4.0 * a * c).sqrt();
    if b >= 0.0 {
        2.0 * c / (-b - disc)
    } else {
        (-b + disc) / (2.0 * a)
    }
}

/// Solves a load case at `λ̃`. Incompressible models use the closed form.
///
/// The residual is scanned over `ln λ_T ∈ [cfg.ln_min, cfg.ln_max]`; among the
/// sign changes found, the one nearest to `cfg.seed_ln` is refined, and a
/// warning is attached when there are several. For vol-iso models the axial
/// stress is cross-checked against the trace identities
/// `σ₁₁ = 3K h′(J)` (UL) and `σ₁₁ = (3/2)K h′(J)` (ELP).
///
/// # Errors
/// [`Error::NoBracket`] if the scan finds no sign change; [`Error::Domain`]
/// for `λ̃ ≤ 0`.
pub fn solve(case: LoadCase, model: &ModelSpec, lam: f64, cfg: &SolverConfig) -> Result<SolveResult> {
    if !(lam > 0.0) || !lam.is_finite() {
        return Err(Error::Domain { j: lam });
    }
    if !model.is_compressible() {
        return Ok(solve_incompressible(case, model.params().mu, lam));
    }
    let big_l = lam.ln();
    let idx = transverse_index(case);
    let f = |t: f64| principal_stresses(model, &LogStretches::new(case, big_l, t))[idx];

    let t_lo = t_from_ln_lambda_t(case, big_l, cfg.ln_min);
    let n = ((cfg.ln_max - cfg.ln_min) / cfg.step).ceil().max(1.0) as usize;
    let h = (cfg.ln_max - cfg.ln_min) / n as f64;
    let ts: Vec<f64> = (0..=n).map(|k| t_lo + h * k as f64).collect();
    let vals: Vec<f64> = ts.iter().map(|&t| f(t)).collect();

    let mut brackets: Vec<(f64, f64)> = Vec::new();
    for k in 0..=n {
        if vals[k] == 0.0 {
            brackets.push((ts[k], ts[k]));
        } else if k < n && !vals[k].is_nan() && !vals[k + 1].is_nan() && vals[k + 1] != 0.0 && vals[k].signum() != vals[k + 1].signum() {
            brackets.push((ts[k], ts[k + 1]));
        }
    }
    if brackets.is_empty() {
        return Err(Error::NoBracket { lo: cfg.ln_min, hi: cfg.ln_max, samples: n + 1 });
    }
    let seed_t = t_from_ln_lambda_t(case, big_l, cfg.seed_ln);
    let (a, b) = *brackets
        .iter()
        .min_by(|x, y| (0.5 * (x.0 + x.1) - seed_t).abs().total_cmp(&(0.5 * (y.0 + y.1) - seed_t).abs()))
        .expect("non-empty");
    let mut warnings = Vec::new();
    if brackets.len() > 1 {
        warnings.push(format!("{} sign changes of the residual; the root nearest the seed was taken", brackets.len()));
    }

    let (t, res, collapsed) = if a == b { (a, 0.0, true) } else { refine(&f, a, b, cfg.max_iter) };
    let mp = model.params();
    let scale = mp.mu + mp.lambda.abs() + mp.k.abs();
    let converged = res.abs() <= cfg.rel_tol * scale || collapsed;

    let ls = LogStretches::new(case, big_l, t);
    let s = principal_stresses(model, &ls);
    let ln_j = ls.ln_j();
    let p: [f64; 3] = std::array::from_fn(|i| safe_exp(ln_j - ls.l(i)) * s[i]);
    let j = safe_exp(ln_j);

    if let ModelKind::VolIso(id) = model.kind() {
        let factor = match case {
            LoadCase::Ul => Some(3.0),
            LoadCase::Elp => Some(1.5),
            LoadCase::Ulp => None,
        };
        if let Some(fac) = factor {
            let shortcut = fac * mp.k * volfun::hp_from_log(id, ln_j);
            let tol = 1e-8 * shortcut.abs().max(s[0].abs()) + cfg.rel_tol * scale;
            if (shortcut - s[0]).abs() > tol && shortcut.is_finite() {
                warnings.push(format!("axial stress {} differs from the trace identity value {shortcut}", s[0]));
            }
        }
    }

    Ok(SolveResult {
        lambda_tilde: lam,
        lambda_t: safe_exp(ls.ln_lambda_t(case)),
        j,
        sigma11: s[0],
        sigma22: s[1],
        p11: p[0],
        p22: p[1],
        converged,
        residual: res,
        warnings,
    })
}

/// Safeguarded Newton iteration on a sign-changing bracket `[a, b]`.
///
/// Returns the root estimate, the residual there, and whether the bracket
/// collapsed to adjacent floating-point numbers (or the residual hit zero).
fn refine(f: &impl Fn(f64) -> f64, mut a: f64, mut b: f64, max_iter: usize) -> (f64, f64, bool) {
    let mut fa = f(a);
    let fb = f(b);
    if fb == 0.0 {
        return (b, 0.0, true);
    }
    if fa == 0.0 {
        return (a, 0.0, true);
    }
    let mut x = 0.5 * (a + b);
    let mut fx = f(x);
    let mut best = (x, fx);
    for _ in 0..max_iter {
        if fx == 0.0 {
            return (x, 0.0, true);
        }
        if fx.is_nan() || (fx > 0.0) == (fa > 0.0) {
            a = x;
            fa = fx;
        } else {
            b = x;
        }
        let width = b - a;
        let mid = 0.5 * (a + b);
        if mid <= a || mid >= b {
            return (best.0, best.1, true);
        }
        let hstep = 1e-3 * width;
        let fxh = f(x + hstep);
        let slope = (fxh - fx) / hstep;
        let newton = x - fx / slope;
        let prev_width = width;
        x = if newton.is_finite() && newton > a && newton < b && (newton - x).abs() < 0.5 * prev_width { newton } else { mid };
        fx = f(x);
        if fx.is_finite() && (fx.abs() < best.1.abs() || !best.1.is_finite()) {
            best = (x, fx);
        }
    }
    (best.0, best.1, false)
}

/// Points of a `λ̃` sweep.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct SweepSpec {
    /// Smallest `λ̃`.
    pub lam_min: f64,
    /// Largest `λ̃`.
    pub lam_max: f64,
    /// Number of points, including both ends.
    pub points: usize,
    /// Log spacing instead of linear spacing.
    pub log: bool,
}

impl SweepSpec {
    /// The `λ̃` values in ascending order.
    ///
    /// # Errors
    /// [`Error::Parameter`] unless `0 < lam_min ≤ lam_max` and `points ≥ 1`.
    pub fn values(&self) -> Result<Vec<f64>> {
        if !(self.lam_min > 0.0 && self.lam_min <= self.lam_max && self.lam_max.is_finite()) || self.points == 0 {
            return Err(Error::Parameter(format!(
                "sweep range must satisfy 0 < lam-min <= lam-max with at least one point (got {}..{}, {} points)",
                self.lam_min, self.lam_max, self.points
            )));
        }
        if self.points == 1 {
            return Ok(vec![self.lam_min]);
        }
        let n = (self.points - 1) as f64;
        Ok((0..self.points)
            .map(|k| {
                let s = k as f64 / n;
                if self.log {
                    (self.lam_min.ln() + s * (self.lam_max / self.lam_min).ln()).exp()
                } else {
                    self.lam_min + s * (self.lam_max - self.lam_min)
                }
            })
            .collect())
    }
}

/// Solves a sweep with continuation.
///
/// The sweep starts at the point nearest to `λ̃ = 1` with seed `λ_T = 1` and
/// proceeds outward in both directions, seeding each point with the previous
/// root. Points that fail are reported through [`SolveResult::failed`].
/// Results are returned in ascending `λ̃`.
///
/// # Errors
/// [`Error::Parameter`] for an invalid sweep range.
pub fn sweep(case: LoadCase, model: &ModelSpec, spec: &SweepSpec, cfg: &SolverConfig) -> Result<Vec<SolveResult>> {
    let lams = spec.values()?;
    let start = lams.iter().enumerate().min_by(|x, y| x.1.ln().abs().total_cmp(&y.1.ln().abs())).map(|(k, _)| k).unwrap_or(0);
    let mut out: Vec<Option<SolveResult>> = vec![None; lams.len()];
    let run = |order: &mut dyn Iterator<Item = usize>, seed0: f64, out: &mut Vec<Option<SolveResult>>| {
        let mut seed = seed0;
        for k in order {
            let c = SolverConfig { seed_ln: seed, ..*cfg };
            let r = solve(case, model, lams[k], &c).unwrap_or_else(|e| SolveResult::failed(lams[k], &e));
            if r.lambda_t.is_finite() && r.lambda_t > 0.0 {
                seed = r.lambda_t.ln();
            }
            out[k] = Some(r);
        }
        seed
    };
    run(&mut (start..lams.len()), cfg.seed_ln, &mut out);
    let seed_start = out[start].as_ref().map(|r| r.lambda_t.ln()).filter(|x| x.is_finite()).unwrap_or(cfg.seed_ln);
    run(&mut (0..start).rev(), seed_start, &mut out);
    Ok(out.into_iter().map(|r| r.expect("every point solved")).collect())
}

/// Whether a sequence is monotone (non-decreasing or non-increasing).
pub fn is_monotone(values: &[f64]) -> bool {
    let up = values.windows(2).all(|w| w[1] >= w[0]);
    let down = values.windows(2).all(|w| w[1] <= w[0]);
    up || down
}

/// Mean stress under pure dilatation `F = k I`.
///
/// * mixed: `σ_m = (μ/k³)(k² − 1) + λ h′(k³)`;
/// * vol-iso: `σ_m = K h′(k³)`.
///
/// # Errors
/// [`Error::Unsupported`] for the incompressible model; [`Error::Domain`] for `k ≤ 0`.
pub fn dilatation_response(model: &ModelSpec, k: f64) -> Result<f64> {
    let mp = model.params();
    let j = k * k * k;
    match model.kind() {
        ModelKind::Incompressible => Err(Error::Unsupported("an incompressible material admits no dilatation".into())),
        ModelKind::Mixed(id) => Ok(mp.mu / j * (k * k - 1.0) + mp.lambda * volfun::eval(id, j)?.hp),
        ModelKind::VolIso(id) => Ok(mp.k * volfun::eval(id, j)?.hp),
    }
}

/// Mean stress at `F = k I` from the general stress evaluator.
///
/// # Errors
/// As for [`materials::cauchy_stress`].
pub fn dilatation_from_stress(model: &ModelSpec, k: f64) -> Result<f64> {
    let f = crate::tensor3::FullTensor3::identity() * k;
    Ok(materials::cauchy_stress(model, &f, Some(0.0))?.mean_stress)
}

/// A reported solution quantity.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Quantity {
    /// Lateral stretch `λ_T`.
    LambdaT,
    /// Axial Cauchy stress.
    Sigma11,
    /// Second principal Cauchy stress.
    Sigma22,
    /// Axial first Piola–Kirchhoff stress.
    P11,
    /// Second principal first Piola–Kirchhoff stress.
    P22,
}

impl Quantity {
    /// Label used in CSV output.
    pub fn label(&self) -> &'static str {
        match self {
            Self::LambdaT => "lambda_T",
            Self::Sigma11 => "sigma11",
            Self::Sigma22 => "sigma22",
            Self::P11 => "P11",
            Self::P22 => "P22",
        }
    }
}

/// Direction of a limit probe.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Direction {
    /// `λ̃ → 0`.
    ToZero,
    /// `λ̃ → ∞`.
    ToInfinity,
}

impl Direction {
    /// Both directions.
    pub const BOTH: [Direction; 2] = [Direction::ToZero, Direction::ToInfinity];

    /// Probe stretches, one per decade.
    pub fn probes(&self) -> [f64; 3] {
        match self {
            Self::ToZero => [1e-4, 1e-5, 1e-6],
            Self::ToInfinity => [1e4, 1e5, 1e6],
        }
    }

    /// Label used in CSV output.
    pub fn label(&self) -> &'static str {
        match self {
            Self::ToZero => "to_zero",
            Self::ToInfinity => "to_infinity",
        }
    }
}

/// Qualitative limit of a quantity.
#[derive(Clone, Copy, Debug, PartialEq)]
pub enum LimitClass {
    /// Diverges to `+∞`.
    PosInf,
    /// Diverges to `−∞`.
    NegInf,
    /// Tends to zero.
    Zero,
    /// Tends to a finite non-zero constant (estimate attached).
    Finite(f64),
    /// The probes show no consistent trend or a solve failed.
    Unresolved,
}

impl LimitClass {
    /// Label used in CSV output.
    pub fn label(&self) -> &'static str {
        match self {
            Self::PosInf => "+inf",
            Self::NegInf => "-inf",
            Self::Zero => "0",
            Self::Finite(_) => "finite",
            Self::Unresolved => "unresolved",
        }
    }

    /// Estimated constant of a finite limit.
    pub fn constant(&self) -> Option<f64> {
        match self {
            Self::Finite(c) => Some(*c),
            _ => None,
        }
    }
}

/// Classifies the limit of a quantity from its values at three successive
/// probe decades.
///
/// Rules, applied in order:
/// 1. any `NaN` gives unresolved; infinite last two values give `±∞`;
/// 2. `|v₃ − v₂| ≤ 0.01|v₃|` gives a finite limit `v₃`;
/// 3. with a fixed sign, log-slopes `g₁ = ln|v₂/v₁|`, `g₂ = ln|v₃/v₂|` that are
///    both positive with `g₂ ≥ g₁/2` give `±∞`, and both negative with
///    `g₂ ≤ g₁/2` give `0`;
/// 4. increments shrinking geometrically with ratio in `(0, 1/2]` give a
///    finite limit, estimated by Aitken extrapolation;
/// 5. otherwise unresolved.
pub fn classify(v: [f64; 3]) -> LimitClass {
    if v.iter().any(|x| x.is_nan()) {
        return LimitClass::Unresolved;
    }
    if v[1].is_infinite() && v[2].is_infinite() {
        return if v[2] > 0.0 { LimitClass::PosInf } else { LimitClass::NegInf };
    }
    if v[2] != 0.0 && v[2].is_finite() && (v[2] - v[1]).abs() <= 0.01 * v[2].abs() {
        return LimitClass::Finite(v[2]);
    }
    let same_sign = v.iter().all(|x| *x != 0.0 && x.signum() == v[0].signum());
    if same_sign {
        let g1 = (v[1] / v[0]).abs().ln();
        let g2 = (v[2] / v[1]).abs().ln();
        if g1 > 0.0 && g2 > 0.0 && g2 >= 0.5 * g1 {
            return if v[0] > 0.0 { LimitClass::PosInf } else { LimitClass::NegInf };
        }
        if g1 < 0.0 && g2 < 0.0 && g2 <= 0.5 * g1 {
            return LimitClass::Zero;
        }
    }
    let d1 = v[1] - v[0];
    let d2 = v[2] - v[1];
    if d1 != 0.0 && d1.is_finite() && d2.is_finite() {
        let r = d2 / d1;
        if r > 0.0 && r <= 0.5 {
            return LimitClass::Finite(v[2] + d2 * r / (1.0 - r));
        }
    }
    LimitClass::Unresolved
}

/// Limits of every reported quantity in one direction.
#[derive(Clone, Debug, PartialEq)]
pub struct LimitReport {
    /// Probe direction.
    pub direction: Direction,
    /// Classification per quantity, in [`LoadCase::quantities`] order.
    pub classes: Vec<(Quantity, LimitClass)>,
    /// Solutions at the probe stretches (failed probes are placeholders).
    pub probes: Vec<SolveResult>,
    /// Whether every probe solve converged.
    pub all_converged: bool,
}

impl LimitReport {
    /// Classification of one quantity.
    pub fn class_of(&self, q: Quantity) -> Option<LimitClass> {
        self.classes.iter().find(|(x, _)| *x == q).map(|(_, c)| *c)
    }
}

/// Probes a load case at `λ̃ = 10^{∓4}, 10^{∓5}, 10^{∓6}` and classifies
/// each quantity with [`classify`].
///
/// # Errors
/// [`Error::Unsupported`] for the incompressible model.
pub fn limit_probe(case: LoadCase, model: &ModelSpec, direction: Direction) -> Result<LimitReport> {
    require_volfun(model)?;
    let cfg = SolverConfig::default();
    let probes: Vec<SolveResult> =
        direction.probes().iter().map(|&lam| solve(case, model, lam, &cfg).unwrap_or_else(|e| SolveResult::failed(lam, &e))).collect();
    let all_converged = probes.iter().all(|r| r.converged);
    let classes = case
        .quantities()
        .iter()
        .map(|&q| {
            let v = [probes[0].get(q), probes[1].get(q), probes[2].get(q)];
            (q, if all_converged { classify(v) } else { LimitClass::Unresolved })
        })
        .collect();
    Ok(LimitReport { direction, classes, probes, all_converged })
}

/// Expected limit in a reference table cell.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Expected {
    /// `+∞`.
    PosInf,
    /// `−∞`.
    NegInf,
    /// `0`.
    Zero,
    /// Infinite of either sign.
    EitherInf,
    /// Some finite value, not stated.
    AnyFinite,
    /// The constant `1`.
    One,
    /// `−3K`.
    MinusThreeK,
    /// `−3K/2`.
    MinusThreeHalvesK,
    /// `1/√2`.
    InvSqrt2,
    /// `−λ`.
    MinusLambda,
    /// `+μ`.
    PlusMu,
}

impl Expected {
    /// Label used in CSV output.
    pub fn label(&self) -> &'static str {
        match self {
            Self::PosInf => "+inf",
            Self::NegInf => "-inf",
            Self::Zero => "0",
            Self::EitherInf => "inf",
            Self::AnyFinite => "*",
            Self::One => "1",
            Self::MinusThreeK => "-3K",
            Self::MinusThreeHalvesK => "-3K/2",
            Self::InvSqrt2 => "1/sqrt2",
            Self::MinusLambda => "-lambda",
            Self::PlusMu => "+mu",
        }
    }

    /// Whether the cell counts toward reproduction (unstated finite values do not).
    pub fn counted(&self) -> bool {
        *self != Self::AnyFinite
    }

    /// Whether an observed classification matches. Constants must agree to 1%.
    pub fn matches(&self, observed: LimitClass, params: &materials::MaterialParams) -> bool {
        let constant = match self {
            Self::PosInf => return observed == LimitClass::PosInf,
            Self::NegInf => return observed == LimitClass::NegInf,
            Self::Zero => return observed == LimitClass::Zero,
            Self::EitherInf => return matches!(observed, LimitClass::PosInf | LimitClass::NegInf),
            Self::AnyFinite => return matches!(observed, LimitClass::Finite(_)),
            Self::One => 1.0,
            Self::MinusThreeK => -3.0 * params.k,
            Self::MinusThreeHalvesK => -1.5 * params.k,
            Self::InvSqrt2 => std::f64::consts::FRAC_1_SQRT_2,
            Self::MinusLambda => -params.lambda,
            Self::PlusMu => params.mu,
        };
        matches!(observed, LimitClass::Finite(c) if (c - constant).abs() <= 0.01 * constant.abs())
    }
}

/// Reference tables of limiting values.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TableId {
    /// Uniaxial loading, all eight catalogued functions.
    T3,
    /// Equibiaxial plane stress, functions 1, 4, 7, 8.
    T4,
    /// Uniaxial plane strain, functions 1, 4, 7, 8.
    T6,
}

impl TableId {
    /// Table number.
    pub fn number(&self) -> u8 {
        match self {
            Self::T3 => 3,
            Self::T4 => 4,
            Self::T6 => 6,
        }
    }

    /// Table with the given number.
    ///
    /// # Errors
    /// [`Error::Parameter`] for numbers other than 3, 4 and 6.
    pub fn from_number(n: u8) -> Result<Self> {
        match n {
            3 => Ok(Self::T3),
            4 => Ok(Self::T4),
            6 => Ok(Self::T6),
            _ => Err(Error::Parameter(format!("unknown table {n}; expected 3, 4 or 6"))),
        }
    }

    /// Load case of the table.
    pub fn case(&self) -> LoadCase {
        match self {
            Self::T3 => LoadCase::Ul,
            Self::T4 => LoadCase::Elp,
            Self::T6 => LoadCase::Ulp,
        }
    }

    /// Catalogue ids covered by the table.
    pub fn volfuns(&self) -> &'static [u8] {
        match self {
            Self::T3 => &[1, 2, 3, 4, 5, 6, 7, 8],
            _ => &[1, 4, 7, 8],
        }
    }
}

/// Expected limits `(λ̃ → 0, λ̃ → ∞)` for each quantity of one table row,
/// mixed quantities first, then vol-iso, in [`LoadCase::quantities`] order.
pub fn expected_row(table: TableId, id: u8) -> Option<Vec<(Expected, Expected)>> {
    use Expected::{
        AnyFinite as S, EitherInf as Inf, InvSqrt2, MinusLambda, MinusThreeHalvesK, MinusThreeK, NegInf as N, One, PlusMu, PosInf as P,
        Zero as Z,
    };
    let mixed_ul = [(P, Z), (N, P), (N, P)];
    let mixed_ul_star = [(S, Z), (N, P), (N, P)];
    let mixed_ul_7 = [(One, Z), (N, P), (N, P)];
    let ul = |m: [(Expected, Expected); 3], v: [(Expected, Expected); 3]| Some(m.iter().chain(v.iter()).copied().collect());
    match (table, id) {
        (TableId::T3 | TableId::T4, 1) => ul(mixed_ul, [(Z, P), (N, Z), (N, Z)]),
        (TableId::T3, 2) => ul(mixed_ul, [(P, P), (N, S), (N, P)]),
        (TableId::T3, 3) | (TableId::T3 | TableId::T4, 4 | 8) => ul(mixed_ul, [(P, Z), (N, P), (N, P)]),
        (TableId::T3, 5) => ul(mixed_ul_star, [(Z, Z), (N, P), (N, P)]),
        (TableId::T3, 6) => ul(mixed_ul_star, [(Z, P), (N, P), (N, P)]),
        (TableId::T3, 7) => ul(mixed_ul_7, [(Z, Z), (MinusThreeK, P), (Z, P)]),
        (TableId::T4, 7) => ul(mixed_ul_7, [(Z, Z), (MinusThreeHalvesK, P), (Z, P)]),
        (TableId::T6, 1 | 4 | 8) => {
            let mixed = [(P, Z), (N, P), (N, S), (N, P), (N, PlusMu)];
            let voliso = if id == 1 { [(InvSqrt2, P), (N, Z), (N, Z), (N, Z), (Inf, N)] } else { [(P, Z), (N, P), (N, P), (N, P), (N, P)] };
            Some(mixed.iter().chain(voliso.iter()).copied().collect())
        }
        (TableId::T6, 7) => {
            let mixed = [(One, Z), (N, P), (MinusLambda, S), (N, P), (Z, PlusMu)];
            let voliso = [(InvSqrt2, Z), (N, P), (P, P), (N, P), (Inf, P)];
            Some(mixed.iter().chain(voliso.iter()).copied().collect())
        }
        _ => None,
    }
}

/// One compared cell of a reference table.
#[derive(Clone, Debug, PartialEq)]
pub struct TableCell {
    /// Table.
    pub table: TableId,
    /// Catalogue id of the volumetric function.
    pub volfun: u8,
    /// Model kind label (`mixed` or `voliso`).
    pub model: &'static str,
    /// Quantity.
    pub quantity: Quantity,
    /// Direction.
    pub direction: Direction,
    /// Reference value.
    pub expected: Expected,
    /// Observed classification.
    pub observed: LimitClass,
    /// Whether they match.
    pub matched: bool,
    /// Whether the cell counts toward reproduction.
    pub counted: bool,
}

/// Poisson's ratio used by default for table reproduction.
pub const TABLE_NU: f64 = 0.25;

/// Probes every cell of a reference table for `μ = 1` and the given `ν`.
///
/// # Errors
/// [`Error::Parameter`] if `ν` is inadmissible for the mixed kind.
pub fn table_repro(table: TableId, nu: f64) -> Result<Vec<TableCell>> {
    let case = table.case();
    let qs = case.quantities();
    let mut cells = Vec::new();
    for &id in table.volfuns() {
        let vf = VolFunId::catalog(id)?;
        let row = expected_row(table, id).expect("row exists for every listed id");
        for (ki, kind) in [ModelKind::Mixed(vf), ModelKind::VolIso(vf)].into_iter().enumerate() {
            let model = ModelSpec::new(kind, materials::MaterialParams::from_mu_nu(1.0, nu)?)?;
            for direction in Direction::BOTH {
                let report = limit_probe(case, &model, direction)?;
                for (qi, &q) in qs.iter().enumerate() {
                    let pair = row[ki * qs.len() + qi];
                    let expected = if direction == Direction::ToZero { pair.0 } else { pair.1 };
                    let observed = report.class_of(q).unwrap_or(LimitClass::Unresolved);
                    cells.push(TableCell {
                        table,
                        volfun: id,
                        model: kind.label(),
                        quantity: q,
                        direction,
                        expected,
                        observed,
                        matched: expected.matches(observed, model.params()),
                        counted: expected.counted(),
                    });
                }
            }
        }
    }
    Ok(cells)
}
