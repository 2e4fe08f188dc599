//! Limiting states of the homogeneous problems and the cell-by-cell comparison
//! with the tabulated limits.
//!
//! ```text
//! cargo run --example limits
//! ```

use neohookean::homsolve::{self, Direction, LoadCase, TableId};
use neohookean::materials::ModelSpec;
use neohookean::volfun::VolFunId;
use neohookean::Result;

fn main() -> Result<()> {
    let model = ModelSpec::vol_iso(VolFunId::Quadratic, 1.0, 0.25)?;
    println!("vol-iso #7 in uniaxial loading, K = {:.4}", model.params().k);
    for direction in Direction::BOTH {
        let report = homsolve::limit_probe(LoadCase::Ul, &model, direction)?;
        for (q, class) in &report.classes {
            match class.constant() {
                Some(c) => println!("  {:>8} {:>12} {} ({c:.6})", q.label(), direction.label(), class.label()),
                None => println!("  {:>8} {:>12} {}", q.label(), direction.label(), class.label()),
            }
        }
    }

    for table in [TableId::T3, TableId::T4, TableId::T6] {
        let cells = homsolve::table_repro(table, homsolve::TABLE_NU)?;
        let counted: Vec<_> = cells.iter().filter(|c| c.counted).collect();
        let matched = counted.iter().filter(|c| c.matched).count();
        println!("\ntable {}: {matched} of {} counted cells match", table.number(), counted.len());
        for c in counted.iter().filter(|c| !c.matched) {
            println!(
                "  {} #{} {} {}: expected {}, observed {}",
                c.model,
                c.volfun,
                c.quantity.label(),
                c.direction.label(),
                c.expected.label(),
                c.observed.label()
            );
        }
    }
    Ok(())
}
