//! Deformation and rate quantities for a sheared and stretched block.
//!
//! ```text
//! cargo run --example kinematics
//! ```

use nalgebra::Matrix3;
use neohookean::kinematics;
use neohookean::Result;

fn main() -> Result<()> {
    let f = Matrix3::new(1.4, 0.3, 0.0, 0.0, 0.9, 0.0, 0.0, 0.0, 0.85);
    let state = kinematics::kinematics_from_f(&f)?;
    println!("J = {:.6}", state.j);
    println!("principal stretches {:?}", state.stretches);
    let bar = state.modified_stretches();
    println!("modified stretches {bar:?} (product {:.15})", bar.iter().product::<f64>());
    println!("deviator of the modified left Cauchy-Green tensor:\n{}", kinematics::deviatoric_modified(&state).to_matrix());
    println!("Hencky strain:\n{}", state.hencky().to_matrix());

    // Velocity gradient with stretching and spin.
    let l = Matrix3::new(0.1, 0.5, 0.0, -0.2, -0.05, 0.3, 0.0, 0.1, 0.02);
    let rate = kinematics::rate_from_velocity_gradient(&state, &l);
    println!("J rate {:.6} (J tr d = {:.6})", rate.j_dot, state.j * rate.d.trace());
    println!("stretch rates {:?}", rate.stretch_rates);
    println!("|coaxial part| = {:.6}, |orthogonal part| = {:.6}", rate.d_hat.norm(), rate.d_tilde.norm());
    Ok(())
}
