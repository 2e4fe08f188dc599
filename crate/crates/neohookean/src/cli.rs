//! Command-line front end.
//!
//! Every subcommand writes CSV (header row, `.` decimal separator, 17
//! significant digits, LF line endings) to standard output or to `--out`.
//! Exit status is 0 on success, 1 on parameter errors and 2 when a solver did
//! not converge (the CSV is still written, with `converged=false` rows).

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::error::{Error, Result};
use crate::homsolve::{self, Direction, LoadCase, SolverConfig, SweepSpec, TableId};
use crate::kinematics;
use crate::materials::{MaterialParams, ModelKind, ModelSpec};
use crate::stability;
use crate::tensor3::FullTensor3;
use crate::volfun::{self, JGrid, VolFunId};

/// Poisson's ratios of the `paper` preset.
pub const PAPER_NU_SET: [f64; 6] = [0.0, 0.25, 0.4, 0.45, 0.499, 0.4999];

/// Neo-Hookean hyperelasticity verification tool.
#[derive(Debug, Parser)]
#[command(name = "neohookean", version, about)]
pub struct Cli {
    /// Write CSV to this file instead of standard output.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,

    #[command(subcommand)]
    pub command: Command,
}

/// Subcommands.
#[derive(Debug, Subcommand)]
pub enum Command {
    /// Audit the five admissibility constraints of the catalogued volumetric functions.
    AuditVolfun {
        /// Smallest sampled volume ratio.
        #[arg(long, default_value_t = 1e-4)]
        j_min: f64,
        /// Largest sampled volume ratio.
        #[arg(long, default_value_t = 1e4)]
        j_max: f64,
        /// Number of log-spaced samples.
        #[arg(long, default_value_t = 4001)]
        points: usize,
    },
    /// Solve a homogeneous load case over a range of stretches.
    Sweep {
        /// Load case.
        #[arg(long, value_enum)]
        case: CaseArg,
        #[command(flatten)]
        material: MaterialArgs,
        /// Smallest prescribed stretch.
        #[arg(long, default_value_t = 0.5)]
        lam_min: f64,
        /// Largest prescribed stretch.
        #[arg(long, default_value_t = 2.0)]
        lam_max: f64,
        /// Number of points.
        #[arg(long, default_value_t = 16)]
        points: usize,
        /// Space the stretches logarithmically.
        #[arg(long)]
        log: bool,
    },
    /// Classify limiting values as the stretch tends to zero and to infinity.
    Limits {
        /// Load case.
        #[arg(long, value_enum)]
        case: CaseArg,
        #[command(flatten)]
        material: MaterialArgs,
    },
    /// Mean stress under pure dilatation F = kI.
    Dilatation {
        #[command(flatten)]
        material: MaterialArgs,
        /// Smallest k.
        #[arg(long, default_value_t = 0.5)]
        k_min: f64,
        /// Largest k.
        #[arg(long, default_value_t = 1.5)]
        k_max: f64,
        /// Number of points.
        #[arg(long, default_value_t = 11)]
        points: usize,
    },
    /// Minimum Hill and corotational stability contractions over unit rates at spherical states.
    Stability {
        #[command(flatten)]
        material: MaterialArgs,
        /// Smallest volume ratio.
        #[arg(long, default_value_t = 0.05)]
        j_min: f64,
        /// Largest volume ratio.
        #[arg(long, default_value_t = 20.0)]
        j_max: f64,
        /// Number of log-spaced volume ratios.
        #[arg(long, default_value_t = 9)]
        points: usize,
    },
    /// Compare closed-form rates and tangents with finite differences along smooth motions.
    TangentCheck {
        /// Model kind; both compressible kinds when omitted.
        #[arg(long, value_enum)]
        model: Option<ModelArg>,
        /// Volumetric function; all catalogued functions when omitted.
        #[arg(long)]
        volfun: Option<String>,
        /// Shear modulus.
        #[arg(long, default_value_t = 1.0)]
        mu: f64,
        /// Poisson's ratio.
        #[arg(long, default_value_t = 0.25)]
        nu: f64,
        /// Number of motions.
        #[arg(long, default_value_t = 10)]
        motions: usize,
    },
    /// Reproduce a table of limiting values (3, 4 or 6) and compare cell by cell.
    TableRepro {
        /// Table number.
        #[arg(long)]
        table: u8,
        /// Poisson's ratio of the probed models.
        #[arg(long, default_value_t = homsolve::TABLE_NU)]
        nu: f64,
    },
}

/// Load case argument.
#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum CaseArg {
    /// Uniaxial loading.
    Ul,
    /// Equibiaxial loading in plane stress.
    Elp,
    /// Uniaxial loading in plane strain.
    Ulp,
}

impl From<CaseArg> for LoadCase {
    fn from(c: CaseArg) -> Self {
        match c {
            CaseArg::Ul => LoadCase::Ul,
            CaseArg::Elp => LoadCase::Elp,
            CaseArg::Ulp => LoadCase::Ulp,
        }
    }
}

/// Model kind argument.
#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum ModelArg {
    /// Incompressible.
    Inc,
    /// Mixed compressible.
    Mixed,
    /// Vol-iso compressible.
    Voliso,
}

/// Poisson's ratio presets.
#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum NuSet {
    /// 0, 0.25, 0.4, 0.45, 0.499, 0.4999.
    Paper,
}

/// Material flags shared by several subcommands.
#[derive(Debug, Args)]
pub struct MaterialArgs {
    /// Model kind.
    #[arg(long, value_enum)]
    pub model: ModelArg,
    /// Volumetric function: 1..8, hn:<q> or ogden:<beta>.
    #[arg(long)]
    pub volfun: Option<String>,
    /// Shear modulus.
    #[arg(long, default_value_t = 1.0, conflicts_with = "young")]
    pub mu: f64,
    /// Young's modulus (alternative to --mu).
    #[arg(long = "E", id = "young")]
    pub young: Option<f64>,
    /// Poisson's ratio.
    #[arg(long, conflicts_with = "nu_set")]
    pub nu: Option<f64>,
    /// Poisson's ratio preset; adds a leading `nu` column to the output.
    #[arg(long, value_enum)]
    pub nu_set: Option<NuSet>,
}

impl MaterialArgs {
    fn nus(&self) -> Vec<f64> {
        match (self.nu_set, self.nu) {
            (Some(NuSet::Paper), _) => PAPER_NU_SET.to_vec(),
            (None, Some(nu)) => vec![nu],
            (None, None) => vec![0.25],
        }
    }

    fn models(&self) -> Result<Vec<(f64, ModelSpec)>> {
        if self.model == ModelArg::Inc {
            let mu = self.young.map_or(self.mu, |e| e / 3.0);
            return Ok(vec![(0.5, ModelSpec::incompressible(mu)?)]);
        }
        let vf: VolFunId =
            self.volfun.as_deref().ok_or_else(|| Error::Parameter("--volfun is required for compressible models".into()))?.parse()?;
        self.nus()
            .into_iter()
            .map(|nu| {
                let params = match self.young {
                    Some(e) => MaterialParams::from_e_nu(e, nu)?,
                    None => MaterialParams::from_mu_nu(self.mu, nu)?,
                };
                let kind = if self.model == ModelArg::Mixed { ModelKind::Mixed(vf) } else { ModelKind::VolIso(vf) };
                Ok((nu, ModelSpec::new(kind, params)?))
            })
            .collect()
    }
}

/// Formats a float with 17 significant digits.
pub fn fmt_f64(x: f64) -> String {
    if x.is_finite() {
        format!("{x:.16e}")
    } else if x.is_nan() {
        "NaN".into()
    } else if x > 0.0 {
        "inf".into()
    } else {
        "-inf".into()
    }
}

struct Output {
    writer: csv::Writer<Vec<u8>>,
    nonconverged: bool,
}

impl Output {
    fn new() -> Self {
        let writer = csv::WriterBuilder::new().terminator(csv::Terminator::Any(b'\n')).from_writer(Vec::new());
        Self { writer, nonconverged: false }
    }

    fn row<I, S>(&mut self, fields: I) -> Result<()>
    where
        I: IntoIterator<Item = S>,
        S: AsRef<[u8]>,
    {
        self.writer.write_record(fields).map_err(|e| Error::Parameter(format!("CSV write failed: {e}")))
    }

    fn finish(self) -> Result<(Vec<u8>, bool)> {
        let bytes = self.writer.into_inner().map_err(|e| Error::Parameter(format!("CSV write failed: {e}")))?;
        Ok((bytes, self.nonconverged))
    }
}

fn execute(cli: &Cli) -> Result<(Vec<u8>, bool)> {
    let mut out = Output::new();
    match &cli.command {
        Command::AuditVolfun { j_min, j_max, points } => {
            if !(*j_min > 0.0 && j_min < j_max) || *points < 2 {
                return Err(Error::Parameter("audit grid needs 0 < j-min < j-max and at least 2 points".into()));
            }
            let grid = JGrid { j_min: *j_min, j_max: *j_max, points: *points };
            out.row(["id", "constraint1", "constraint2", "constraint3", "constraint4", "constraint5", "witness_J"])?;
            for id in VolFunId::CATALOG {
                let rep = volfun::audit(id, &grid)?;
                let mut fields = vec![id.to_string()];
                fields.extend(rep.pattern().iter().map(|&b| u8::from(b).to_string()));
                fields.push(rep.first_witness().map(fmt_f64).unwrap_or_default());
                out.row(fields)?;
            }
        }
        Command::Sweep { case, material, lam_min, lam_max, points, log } => {
            let spec = SweepSpec { lam_min: *lam_min, lam_max: *lam_max, points: *points, log: *log };
            spec.values()?;
            let models = material.models()?;
            let with_nu = material.nu_set.is_some();
            let mut header = vec!["lambda_tilde", "lambda_T", "J", "sigma11", "sigma22", "P11", "P22", "converged"];
            if with_nu {
                header.insert(0, "nu");
            }
            out.row(header)?;
            for (nu, model) in models {
                for r in homsolve::sweep((*case).into(), &model, &spec, &SolverConfig::default())? {
                    out.nonconverged |= !r.converged;
                    let mut fields: Vec<String> =
                        [r.lambda_tilde, r.lambda_t, r.j, r.sigma11, r.sigma22, r.p11, r.p22].iter().map(|&x| fmt_f64(x)).collect();
                    fields.push(r.converged.to_string());
                    if with_nu {
                        fields.insert(0, fmt_f64(nu));
                    }
                    out.row(fields)?;
                }
            }
        }
        Command::Limits { case, material } => {
            let models = material.models()?;
            let with_nu = material.nu_set.is_some();
            let mut header = vec!["quantity", "direction", "class", "constant"];
            if with_nu {
                header.insert(0, "nu");
            }
            out.row(header)?;
            for (nu, model) in models {
                for direction in Direction::BOTH {
                    let rep = homsolve::limit_probe((*case).into(), &model, direction)?;
                    out.nonconverged |= !rep.all_converged;
                    for (q, class) in &rep.classes {
                        let mut fields = vec![
                            q.label().to_string(),
                            direction.label().to_string(),
                            class.label().to_string(),
                            class.constant().map(fmt_f64).unwrap_or_default(),
                        ];
                        if with_nu {
                            fields.insert(0, fmt_f64(nu));
                        }
                        out.row(fields)?;
                    }
                }
            }
        }
        Command::Dilatation { material, k_min, k_max, points } => {
            if !(*k_min > 0.0 && k_min <= k_max) || *points == 0 {
                return Err(Error::Parameter("dilatation range needs 0 < k-min <= k-max and at least one point".into()));
            }
            let models = material.models()?;
            let with_nu = material.nu_set.is_some();
            let mut header = vec!["k", "sigma_m", "p"];
            if with_nu {
                header.insert(0, "nu");
            }
            out.row(header)?;
            for (nu, model) in models {
                for n in 0..*points {
                    let k = if *points == 1 { *k_min } else { k_min + (k_max - k_min) * n as f64 / (*points - 1) as f64 };
                    let sm = homsolve::dilatation_response(&model, k)?;
                    let mut fields = vec![fmt_f64(k), fmt_f64(sm), fmt_f64(-sm)];
                    if with_nu {
                        fields.insert(0, fmt_f64(nu));
                    }
                    out.row(fields)?;
                }
            }
        }
        Command::Stability { material, j_min, j_max, points } => {
            if !(*j_min > 0.0 && j_min <= j_max) || *points == 0 {
                return Err(Error::Parameter("stability range needs 0 < j-min <= j-max and at least one point".into()));
            }
            out.row(["model", "volfun", "nu", "J", "contraction_kind", "value", "verdict"])?;
            for (nu, model) in material.models()? {
                let vf = model.volfun().map(|v| v.to_string()).unwrap_or_default();
                for j in stability::log_grid(*j_min, *j_max, *points) {
                    let state = kinematics::kinematics_from_f(&(FullTensor3::identity() * j.cbrt()))?;
                    let mut emit = |kind: &str, value: f64| {
                        out.row([
                            model.kind().label().to_string(),
                            vf.clone(),
                            fmt_f64(nu),
                            fmt_f64(j),
                            kind.to_string(),
                            fmt_f64(value),
                            stability::Verdict::of(value).label().to_string(),
                        ])
                    };
                    emit("hill", stability::hill_minimum(&model, &state)?.value)?;
                    if model.is_compressible() {
                        emit("csp", stability::csp_minimum(&model, &state)?.value)?;
                    }
                }
            }
        }
        Command::TangentCheck { model, volfun, mu, nu, motions } => {
            let kinds: Vec<ModelArg> = match model {
                Some(ModelArg::Inc) => {
                    return Err(Error::Unsupported("no tangent stiffness tensor is defined for the incompressible model".into()))
                }
                Some(m) => vec![*m],
                None => vec![ModelArg::Mixed, ModelArg::Voliso],
            };
            let vfs: Vec<VolFunId> = match volfun {
                Some(s) => vec![s.parse()?],
                None => VolFunId::CATALOG.to_vec(),
            };
            out.row(["model", "volfun", "nu", "zj_rate_err", "oldroyd_tangent_err", "bh_tangent_err", "bh_identity_err"])?;
            let params = MaterialParams::from_mu_nu(*mu, *nu)?;
            for kind in kinds {
                for &vf in &vfs {
                    let mk = if kind == ModelArg::Mixed { ModelKind::Mixed(vf) } else { ModelKind::VolIso(vf) };
                    let m = ModelSpec::new(mk, params)?;
                    let mut worst = [0.0_f64; 4];
                    for (f0, l) in stability::reference_motions(*motions) {
                        let c = stability::fd_rate_check(&m, &f0, &l, 1e-5)?;
                        for (w, v) in worst.iter_mut().zip([c.zj, c.oldroyd, c.bh, c.bh_identity]) {
                            *w = w.max(v);
                        }
                    }
                    let mut fields = vec![mk.label().to_string(), vf.to_string(), fmt_f64(*nu)];
                    fields.extend(worst.iter().map(|&x| fmt_f64(x)));
                    out.row(fields)?;
                }
            }
        }
        Command::TableRepro { table, nu } => {
            let t = TableId::from_number(*table)?;
            let cells = homsolve::table_repro(t, *nu)?;
            out.row(["table", "volfun", "model", "quantity", "direction", "expected", "observed", "constant", "match", "counted"])?;
            for c in &cells {
                out.row([
                    t.number().to_string(),
                    c.volfun.to_string(),
                    c.model.to_string(),
                    c.quantity.label().to_string(),
                    c.direction.label().to_string(),
                    c.expected.label().to_string(),
                    c.observed.label().to_string(),
                    c.observed.constant().map(fmt_f64).unwrap_or_default(),
                    c.matched.to_string(),
                    c.counted.to_string(),
                ])?;
            }
            let counted = cells.iter().filter(|c| c.counted).count();
            let matched = cells.iter().filter(|c| c.counted && c.matched).count();
            eprintln!("table {}: {matched} of {counted} counted cells match", t.number());
        }
    }
    out.finish()
}

/// Parses arguments, runs the subcommand and returns the process exit status.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return code;
        }
    };
    let (bytes, nonconverged) = match execute(&cli) {
        Ok(x) => x,
        Err(e) => {
            eprintln!("error: {e}");
            return 1;
        }
    };
    let written = match &cli.out {
        Some(path) => std::fs::write(path, &bytes),
        None => std::io::stdout().lock().write_all(&bytes),
    };
    if let Err(e) = written {
        eprintln!("error: cannot write output: {e}");
        return 1;
    }
    if nonconverged {
        eprintln!("warning: at least one solve did not converge");
        2
    } else {
        0
    }
}
