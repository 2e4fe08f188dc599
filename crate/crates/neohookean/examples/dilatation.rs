//! Mean stress under pure dilatation `F = kI` for every compressible model.
//!
//! ```text
//! cargo run --example dilatation
//! ```

use neohookean::homsolve;
use neohookean::materials::ModelSpec;
use neohookean::volfun::VolFunId;
use neohookean::Result;

fn main() -> Result<()> {
    let ks = [0.5, 0.8, 1.0, 1.25, 2.0];
    print!("{:>14}", "model");
    for k in ks {
        print!(" {:>11}", format!("k = {k}"));
    }
    println!();
    for id in VolFunId::CATALOG {
        for model in [ModelSpec::mixed(id, 1.0, 0.3)?, ModelSpec::vol_iso(id, 1.0, 0.3)?] {
            print!("{:>14}", format!("{} {}", model.kind().label(), id.catalog_number().unwrap()));
            for k in ks {
                print!(" {:>11.5}", homsolve::dilatation_response(&model, k)?);
            }
            println!();
        }
    }
    let m7 = ModelSpec::mixed(VolFunId::Quadratic, 1.0, 0.3)?;
    let general = homsolve::dilatation_from_stress(&m7, 2.0)?;
    println!("mixed #7 at k = 2: {general:.6} from the general stress evaluator");
    Ok(())
}
