//! Elastic constants, energies and stresses of the three model kinds at one
//! deformation.
//!
//! ```text
//! cargo run --example stresses
//! ```

use nalgebra::Matrix3;
use neohookean::materials::{self, MaterialParams, ModelSpec};
use neohookean::volfun::VolFunId;
use neohookean::Result;

fn main() -> Result<()> {
    // Polycarbonate-like constants.
    let p = MaterialParams::from_e_nu(2.35e3, 0.37)?;
    println!("mu = {:.3}, lambda = {:.3}, K = {:.3}, lambda/mu = {:.4}", p.mu, p.lambda, p.k, p.lambda / p.mu);

    let f = Matrix3::new(1.2, 0.1, 0.0, 0.0, 0.95, 0.0, 0.0, 0.0, 0.9);
    let models = [
        ModelSpec::mixed(VolFunId::catalog(4)?, p.mu, p.nu)?,
        ModelSpec::vol_iso(VolFunId::catalog(4)?, p.mu, p.nu)?,
        ModelSpec::mixed(VolFunId::Quadratic, p.mu, p.nu)?,
    ];
    for model in &models {
        let w = materials::energy(model, &f, None)?;
        let s = materials::cauchy_stress(model, &f, None)?;
        println!("\n{}: W = {w:.6}, mean stress = {:.6}", model.kind(), s.mean_stress);
        println!("Cauchy stress:{}", s.cauchy.to_matrix());
        println!("first Piola-Kirchhoff stress:{}", s.first_pk);
    }

    // The incompressible model needs the pressure multiplier.
    let inc = ModelSpec::incompressible(p.mu)?;
    let iso = Matrix3::new(1.25, 0.0, 0.0, 0.0, 0.8, 0.0, 0.0, 0.0, 1.0);
    let s = materials::cauchy_stress(&inc, &iso, Some(100.0))?;
    println!("incompressible with p = 100: sigma_33 = {:.6}", s.cauchy.get(2, 2));
    Ok(())
}
