//! Tangent stiffness tensors and their finite-difference verification along
//! smooth motions.
//!
//! ```text
//! cargo run --example tangents
//! ```

use nalgebra::Matrix3;
use neohookean::kinematics;
use neohookean::materials::ModelSpec;
use neohookean::stability;
use neohookean::tensor3;
use neohookean::volfun::VolFunId;
use neohookean::Result;

fn main() -> Result<()> {
    let model = ModelSpec::mixed(VolFunId::catalog(2)?, 1.0, 0.4)?;
    let f = Matrix3::new(1.3, 0.2, 0.0, 0.1, 0.9, 0.0, 0.0, 0.0, 1.1);
    let state = kinematics::kinematics_from_f(&f)?;
    let t = stability::tangents(&model, &state)?;
    println!("Oldroyd tangent in Voigt form:\n{:.5}", tensor3::voigt_matrix(&t.c_tr));
    println!("Biezeno-Hencky tangent in Voigt form:\n{:.5}", tensor3::voigt_matrix(&t.c_bh));
    println!("symmetry defects {:.1e} {:.1e}", t.c_tr.symmetry_defect(), t.c_bh.symmetry_defect());

    println!("\nfinite-difference checks along reference motions");
    println!("{:>10} {:>10} {:>10} {:>10}", "ZJ", "Oldroyd", "BH", "identity");
    for (f0, l) in stability::reference_motions(4) {
        let c = stability::fd_rate_check(&model, &f0, &l, 1e-5)?;
        println!("{:>10.2e} {:>10.2e} {:>10.2e} {:>10.2e}", c.zj, c.oldroyd, c.bh, c.bh_identity);
    }
    Ok(())
}
