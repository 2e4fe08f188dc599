//! Uniaxial loading of a mixed model over a range of Poisson's ratios,
//! compared with the incompressible closed form.
//!
//! ```text
//! cargo run --example uniaxial_sweep
//! ```

use neohookean::homsolve::{self, LoadCase, SolverConfig, SweepSpec};
use neohookean::materials::ModelSpec;
use neohookean::volfun::VolFunId;
use neohookean::Result;

fn main() -> Result<()> {
    let spec = SweepSpec { lam_min: 0.5, lam_max: 3.0, points: 6, log: true };
    let cfg = SolverConfig::default();
    for nu in [0.0, 0.25, 0.45, 0.4999] {
        let model = ModelSpec::mixed(VolFunId::catalog(4)?, 1.0, nu)?;
        println!("nu = {nu}");
        println!("{:>10} {:>10} {:>10} {:>12} {:>12}", "stretch", "lateral", "J", "sigma11", "P11");
        for r in homsolve::sweep(LoadCase::Ul, &model, &spec, &cfg)? {
            println!("{:>10.4} {:>10.6} {:>10.6} {:>12.6} {:>12.6}", r.lambda_tilde, r.lambda_t, r.j, r.sigma11, r.p11);
        }
    }
    let inc = ModelSpec::incompressible(1.0)?;
    println!("incompressible");
    for lam in spec.values()? {
        let r = homsolve::solve(LoadCase::Ul, &inc, lam, &cfg)?;
        println!("{:>10.4} {:>10.6} {:>10.6} {:>12.6} {:>12.6}", lam, r.lambda_t, r.j, r.sigma11, r.p11);
    }

    // The quadratic mixed model has a closed-form lateral stretch.
    let m7 = ModelSpec::mixed(VolFunId::Quadratic, 1.0, 0.3)?;
    for case in LoadCase::ALL {
        let solved = homsolve::solve(case, &m7, 2.0, &cfg)?.lambda_t;
        let exact = homsolve::closed_form_mixed7(case, 2.0, &m7)?;
        println!("{case}: solved {solved:.12}, closed form {exact:.12}");
    }
    Ok(())
}
