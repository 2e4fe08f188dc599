//! Volumetric energy functions `h(J)`.
//!
//! Eight catalogued functions are provided together with the two parametric
//! families they come from:
//!
//! | id | function | `h(J)` |
//! |----|----------|--------|
//! | 1  | Hartmann–Neff, q = 0 | `(ln J)²/2` |
//! | 2  | Hartmann–Neff, q = 1 | `(J + J⁻¹ − 2)/2` |
//! | 3  | Hartmann–Neff, q = 2 | `(J² + J⁻² − 2)/8` |
//! | 4  | Hartmann–Neff, q = 5 | `(J⁵ + J⁻⁵ − 2)/50` |
//! | 5  | Ogden, β = −2 | `(J² − 2 ln J − 1)/4` |
//! | 6  | Ogden, β = −1 | `J − ln J − 1` |
//! | 7  | quadratic | `(J − 1)²/2` |
//! | 8  | exponential-logarithmic | `(exp(ln² J) − 1)/2` |
//!
//! Every function satisfies `h(1) = 0`, `h′(1) = 0`, `h″(1) = 1`. The Hill
//! factor is `χ(J) = h′(J) + J h″(J)`.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// Below this value of `q` the Hartmann–Neff family uses its logarithmic limit.
pub const HN_LOG_BRANCH_Q: f64 = 1e-8;

/// Identifier of a volumetric function.
#[derive(Clone, Copy, Debug, PartialEq)]
pub enum VolFunId {
    /// Hartmann–Neff family `(J^q + J^{-q} − 2)/(2q²)` with `q ≥ 0`.
    HartmannNeff(f64),
    /// Ogden family `β⁻²(β ln J + J^{-β} − 1)` with `β ≠ 0`.
    OgdenVol(f64),
    /// Quadratic function `(J − 1)²/2`.
    Quadratic,
    /// Exponential-logarithmic function `(exp(ln² J) − 1)/2`.
    ExpLog,
}

impl VolFunId {
    /// All eight catalogued functions in id order.
    pub const CATALOG: [VolFunId; 8] = [
        VolFunId::HartmannNeff(0.0),
        VolFunId::HartmannNeff(1.0),
        VolFunId::HartmannNeff(2.0),
        VolFunId::HartmannNeff(5.0),
        VolFunId::OgdenVol(-2.0),
        VolFunId::OgdenVol(-1.0),
        VolFunId::Quadratic,
        VolFunId::ExpLog,
    ];

    /// Catalogued function with id `1..=8`.
    ///
    /// # Errors
    /// [`Error::Parameter`] for ids outside `1..=8`.
    pub fn catalog(id: u8) -> Result<Self> {
        match id {
            1..=8 => Ok(Self::CATALOG[usize::from(id - 1)]),
            _ => Err(Error::Parameter(format!("unknown volumetric function id {id}; expected 1..8"))),
        }
    }

    /// Catalogue id of this function, if it is one of the eight.
    pub fn catalog_number(&self) -> Option<u8> {
        Self::CATALOG.iter().position(|c| c == self).map(|k| k as u8 + 1)
    }

    /// Checks the family parameter.
    ///
    /// # Errors
    /// [`Error::Parameter`] if `q < 0`, `β = 0` or a parameter is not finite.
    pub fn validate(&self) -> Result<()> {
        match *self {
            Self::HartmannNeff(q) if !(q >= 0.0 && q.is_finite()) => {
                Err(Error::Parameter(format!("Hartmann-Neff parameter q = {q} must be finite and non-negative")))
            }
            Self::OgdenVol(b) if b == 0.0 || !b.is_finite() => {
                Err(Error::Parameter(format!("Ogden parameter beta = {b} must be finite and non-zero")))
            }
            _ => Ok(()),
        }
    }
}

impl fmt::Display for VolFunId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if let Some(n) = self.catalog_number() {
            return write!(f, "{n}");
        }
        match self {
            Self::HartmannNeff(q) => write!(f, "hn:{q}"),
            Self::OgdenVol(b) => write!(f, "ogden:{b}"),
            Self::Quadratic => write!(f, "7"),
            Self::ExpLog => write!(f, "8"),
        }
    }
}

impl FromStr for VolFunId {
    type Err = Error;

    /// Parses `1..8`, `hn:<q>` or `ogden:<beta>`.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let parse = |v: &str| v.parse::<f64>().map_err(|_| Error::Parameter(format!("cannot parse volumetric function parameter `{v}`")));
        let id = if let Some(q) = s.strip_prefix("hn:") {
            Self::HartmannNeff(parse(q)?)
        } else if let Some(b) = s.strip_prefix("ogden:") {
            Self::OgdenVol(parse(b)?)
        } else {
            let n: u8 =
                s.parse().map_err(|_| Error::Parameter(format!("unknown volumetric function `{s}`; expected 1..8, hn:q or ogden:beta")))?;
            Self::catalog(n)?
        };
        id.validate()?;
        Ok(id)
    }
}

/// Values of a volumetric function and its derivatives at one `J`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct VolFunEval {
    /// `h(J)`.
    pub h: f64,
    /// `h′(J)`.
    pub hp: f64,
    /// `h″(J)`.
    pub hpp: f64,
    /// `J h′(J)`.
    pub jhp: f64,
    /// Hill factor `χ(J) = h′(J) + J h″(J)`.
    pub chi: f64,
}

/// `exp` that returns `+∞` instead of overflowing intermediate results.
pub(crate) fn safe_exp(x: f64) -> f64 {
    if x > 709.0 {
        f64::INFINITY
    } else {
        x.exp()
    }
}

/// Evaluates `h`, `h′`, `h″`, `J h′` and `χ` at `J`.
///
/// # Errors
/// [`Error::Domain`] if `J ≤ 0` or `J` is not finite; [`Error::Parameter`]
/// for an invalid family parameter.
pub fn eval(id: VolFunId, j: f64) -> Result<VolFunEval> {
    if !(j > 0.0) || !j.is_finite() {
        return Err(Error::Domain { j });
    }
    id.validate()?;
    let l = j.ln();
    let (h, hp, hpp, jhp) = match id {
        VolFunId::HartmannNeff(q) if q < HN_LOG_BRANCH_Q => (0.5 * l * l, l / j, (1.0 - l) / (j * j), l),
        VolFunId::HartmannNeff(q) => {
            let a = j.powf(q);
            let b = j.powf(-q);
            // Hyperbolic forms avoid the cancellation in `a + b − 2` and `a − b` near J = 1.
            let half = (0.5 * q * l).sinh();
            let jhp = (q * l).sinh() / q;
            (2.0 * half * half / (q * q), jhp / j, ((q - 1.0) * a + (q + 1.0) * b) / (2.0 * q * j * j), jhp)
        }
        VolFunId::OgdenVol(beta) => {
            let jb = j.powf(-beta);
            ((beta * l + jb - 1.0) / (beta * beta), (1.0 - jb) / (beta * j), ((beta + 1.0) * jb - 1.0) / (beta * j * j), (1.0 - jb) / beta)
        }
        VolFunId::Quadratic => (0.5 * (j - 1.0) * (j - 1.0), j - 1.0, 1.0, j * (j - 1.0)),
        VolFunId::ExpLog => {
            let e = safe_exp(l * l);
            (0.5 * (e - 1.0), e * l / j, e * (1.0 - l + 2.0 * l * l) / (j * j), e * l)
        }
    };
    Ok(VolFunEval { h, hp, hpp, jhp, chi: hp + j * hpp })
}

/// `h′(J)` evaluated from `ln J`, robust for `|ln J|` in the hundreds.
///
/// Overflowing powers of `J` saturate at `±∞` instead of producing `NaN`.
pub fn hp_from_log(id: VolFunId, ln_j: f64) -> f64 {
    let l = ln_j;
    match id {
        VolFunId::HartmannNeff(q) if q < HN_LOG_BRANCH_Q => l * safe_exp(-l),
        VolFunId::HartmannNeff(q) => (safe_exp((q - 1.0) * l) - safe_exp((-q - 1.0) * l)) / (2.0 * q),
        VolFunId::OgdenVol(beta) => (safe_exp(-l) - safe_exp((-beta - 1.0) * l)) / beta,
        VolFunId::Quadratic => l.exp_m1(),
        VolFunId::ExpLog => safe_exp(l * l - l) * l,
    }
}

/// Returns `(h^{(q)}(J), h^{(q)}(1/J))` for the Hartmann–Neff family.
///
/// # Errors
/// As for [`eval`].
pub fn symmetry_check(q: f64, j: f64) -> Result<(f64, f64)> {
    let id = VolFunId::HartmannNeff(q);
    Ok((eval(id, j)?.h, eval(id, 1.0 / j)?.h))
}

/// Log-spaced sampling of `J` used by [`audit`].
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct JGrid {
    /// Smallest sampled `J`.
    pub j_min: f64,
    /// Largest sampled `J`.
    pub j_max: f64,
    /// Number of samples, including both ends.
    pub points: usize,
}

impl Default for JGrid {
    fn default() -> Self {
        Self { j_min: 1e-4, j_max: 1e4, points: 4001 }
    }
}

impl JGrid {
    /// The sampled values in ascending order.
    pub fn values(&self) -> Vec<f64> {
        let (a, b) = (self.j_min.ln(), self.j_max.ln());
        let n = self.points.max(2);
        (0..n).map(|k| (a + (b - a) * k as f64 / (n - 1) as f64).exp()).collect()
    }
}

/// Outcome of checking one constraint.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct ConstraintCheck {
    /// Whether the constraint holds on the sampled range.
    pub holds: bool,
    /// A value of `J` at which it fails, if any.
    pub witness_j: Option<f64>,
}

impl ConstraintCheck {
    fn from_witness(witness_j: Option<f64>) -> Self {
        Self { holds: witness_j.is_none(), witness_j }
    }
}

/// Result of auditing the five admissibility constraints on `h`.
///
/// 1. `h(1) = 0`, `h′(1) = 0`, `h″(1) = 1`.
/// 2. `h′ < 0` for `J < 1` and `h′ > 0` for `J > 1`.
/// 3. Convexity, `h″ > 0`.
/// 4. Positive Hill factor, `χ > 0`.
/// 5. `h → ∞` as `J → 0` and as `J → ∞`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct PropertyReport {
    /// Audited function.
    pub id: VolFunId,
    /// Constraints 1 to 5 in order.
    pub constraints: [ConstraintCheck; 5],
}

impl PropertyReport {
    /// `+`/`−` pattern of the five constraints.
    pub fn pattern(&self) -> [bool; 5] {
        self.constraints.map(|c| c.holds)
    }

    /// First failing witness `J`, if any constraint fails.
    pub fn first_witness(&self) -> Option<f64> {
        self.constraints.iter().find_map(|c| c.witness_j)
    }
}

/// Threshold above which `h` at a grid end counts as large.
pub const GROWTH_THRESHOLD: f64 = 1e3;

/// Audits the five constraints on a log-spaced grid.
///
/// Constraint 1 is checked at `J = 1`. Constraints 2 to 4 are checked by sign
/// on every grid point. Constraint 5 holds at an end if `h` there exceeds
/// [`GROWTH_THRESHOLD`], or if `h` sampled at `J = 10^{±6}, 10^{±7}, 10^{±8}`
/// keeps growing without a slowdown (the [`crate::homsolve::classify`] trend
/// rule reports `+∞`). The second route certifies logarithmic divergence.
///
/// # Errors
/// [`Error::Parameter`] for an invalid family parameter.
pub fn audit(id: VolFunId, grid: &JGrid) -> Result<PropertyReport> {
    id.validate()?;
    let at_one = eval(id, 1.0)?;
    let c1 = if at_one.h.abs() <= 1e-14 && at_one.hp.abs() <= 1e-14 && (at_one.hpp - 1.0).abs() <= 1e-12 {
        ConstraintCheck::from_witness(None)
    } else {
        ConstraintCheck::from_witness(Some(1.0))
    };

    let js = grid.values();
    let evals: Vec<(f64, VolFunEval)> = js.iter().map(|&j| eval(id, j).map(|e| (j, e))).collect::<Result<_>>()?;
    let find = |bad: &dyn Fn(f64, &VolFunEval) -> bool| evals.iter().find(|(j, e)| bad(*j, e)).map(|(j, _)| *j);
    let c2 = find(&|j, e| (j < 1.0 && !(e.hp < 0.0)) || (j > 1.0 && !(e.hp > 0.0)));
    let c3 = find(&|_, e| !(e.hpp > 0.0));
    let c4 = find(&|_, e| !(e.chi > 0.0));

    let end_diverges = |j_end: f64, far: [f64; 3]| -> Result<bool> {
        if eval(id, j_end)?.h > GROWTH_THRESHOLD {
            return Ok(true);
        }
        let v = [eval(id, far[0])?.h, eval(id, far[1])?.h, eval(id, far[2])?.h];
        Ok(crate::homsolve::classify(v) == crate::homsolve::LimitClass::PosInf)
    };
    let c5 = if !end_diverges(grid.j_min, [1e-6, 1e-7, 1e-8])? {
        Some(grid.j_min)
    } else if !end_diverges(grid.j_max, [1e6, 1e7, 1e8])? {
        Some(grid.j_max)
    } else {
        None
    };

    Ok(PropertyReport {
        id,
        constraints: [
            c1,
            ConstraintCheck::from_witness(c2),
            ConstraintCheck::from_witness(c3),
            ConstraintCheck::from_witness(c4),
            ConstraintCheck::from_witness(c5),
        ],
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn unit_point_values() {
        for id in VolFunId::CATALOG {
            let e = eval(id, 1.0).unwrap();
            assert_eq!((e.h, e.hp), (0.0, 0.0), "{id}");
            assert!((e.hpp - 1.0).abs() < 1e-15, "{id}");
        }
    }

    #[test]
    fn parse_forms() {
        assert_eq!("4".parse::<VolFunId>().unwrap(), VolFunId::HartmannNeff(5.0));
        assert_eq!("hn:3".parse::<VolFunId>().unwrap(), VolFunId::HartmannNeff(3.0));
        assert_eq!("ogden:-1".parse::<VolFunId>().unwrap(), VolFunId::catalog(6).unwrap());
        assert!("9".parse::<VolFunId>().is_err());
        assert!("ogden:0".parse::<VolFunId>().is_err());
        assert!("hn:-1".parse::<VolFunId>().is_err());
    }

    #[test]
    fn domain_error() {
        assert_eq!(eval(VolFunId::Quadratic, 0.0), Err(Error::Domain { j: 0.0 }));
    }

    #[test]
    fn log_form_matches_direct() {
        for id in VolFunId::CATALOG {
            for j in [0.3, 0.9, 1.7, 4.0] {
                let a = eval(id, j).unwrap().hp;
                let b = hp_from_log(id, f64::ln(j));
                assert!((a - b).abs() <= 1e-13 * (1.0 + a.abs()), "{id} {j}");
            }
        }
    }
}
