//! Hill and corotational stability contractions: single rates, minima over
//! unit rates, and searches for violating states.
//!
//! ```text
//! cargo run --example stability
//! ```

use nalgebra::Matrix3;
use neohookean::kinematics;
use neohookean::materials::{ModelKind, ModelSpec};
use neohookean::stability;
use neohookean::tensor3::SymTensor3;
use neohookean::volfun::VolFunId;
use neohookean::Result;

fn main() -> Result<()> {
    let model = ModelSpec::vol_iso(VolFunId::Quadratic, 1.0, 0.3)?;
    let state = kinematics::kinematics_from_f(&Matrix3::from_diagonal_element(0.4))?;
    let rate = kinematics::rate_from_d(&state, &SymTensor3::identity());

    let hill = stability::hill_contraction(&model, &state, &rate)?;
    println!("Hill contraction at J = {:.3}: {:.6} ({})", state.j, hill.value, hill.verdict.label());
    println!("  recomposed from the quadratic forms: {:.6}", hill.recomposed);
    let csp = stability::csp_contraction(&model, &state, &rate)?;
    println!("corotational contraction: {:.6} ({})", csp.value, csp.verdict.label());

    let m = stability::hill_minimum(&model, &state)?;
    println!("minimum Hill contraction over unit rates: {:.6}", m.value);
    println!("  attained at d =\n{}", m.direction.to_matrix());

    for kind in [ModelKind::Mixed(VolFunId::Quadratic), ModelKind::VolIso(VolFunId::Quadratic), ModelKind::Mixed(VolFunId::ExpLog)] {
        match stability::hill_violation_search(kind, 1.0)? {
            Some(w) => println!("{kind}: Hill violated at stretches {:?}, nu = {}, value {:.4}", w.stretches, w.model.params().nu, w.value),
            None => println!("{kind}: no Hill violation found"),
        }
    }
    let w = stability::csp_violation_search(ModelKind::Mixed(VolFunId::ExpLog), 1.0)?;
    println!("corotational search for mixed #8: {:?}", w.map(|w| w.stretches));
    Ok(())
}
