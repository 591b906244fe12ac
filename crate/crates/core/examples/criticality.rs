// Deletes each arc in turn and compares with the structural
// characterization of critical digraphs.
//
// cargo run --example criticality

use indomatic::critical::{characterization_holds, deletion_profile};
use indomatic::families::{complete_digraph, directed_cycle};

pub fn run() -> Result<(), Box<dyn std::error::Error>> {
    for (name, d) in [("K3", complete_digraph(3)?), ("C4", directed_cycle(4)?)] {
        let profile = deletion_profile(&d)?;
        println!("{name}: d_s⁻ = {}, critical = {}", profile.value, profile.is_critical());
        for r in &profile.records {
            println!("  delete {:?}: strong {}, value {:?}", r.arc, r.still_strong, r.value_after);
        }
        println!("  characterization: {:?}", characterization_holds(&d)?);
    }
    Ok(())
}

fn main() -> Result<(), Box<dyn std::error::Error>> {
    run()
}
