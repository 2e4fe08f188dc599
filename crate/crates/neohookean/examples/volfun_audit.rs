//! Evaluates the catalogued volumetric functions and audits their
//! admissibility constraints.
//!
//! ```text
//! cargo run --example volfun_audit
//! ```

use neohookean::volfun::{self, JGrid, VolFunId};
use neohookean::Result;

fn main() -> Result<()> {
    println!("{:>12} {:>12} {:>12} {:>12}", "function", "h(0.5)", "h'(0.5)", "h(2)");
    for id in VolFunId::CATALOG {
        let (a, b) = (volfun::eval(id, 0.5)?, volfun::eval(id, 2.0)?);
        println!("{:>12} {:>12.6} {:>12.6} {:>12.6}", id.to_string(), a.h, a.hp, b.h);
    }

    let grid = JGrid::default();
    println!("\nconstraint pattern and first witness J");
    for id in VolFunId::CATALOG.into_iter().chain([VolFunId::HartmannNeff(0.5), VolFunId::OgdenVol(2.0)]) {
        let report = volfun::audit(id, &grid)?;
        let pattern: String = report.pattern().iter().map(|ok| if *ok { '1' } else { '0' }).collect();
        match report.first_witness() {
            Some(j) => println!("{:>12} {pattern} J = {j:.4}", id.to_string()),
            None => println!("{:>12} {pattern}", id.to_string()),
        }
    }
    Ok(())
}
