// Generates the extremal families and checks their claimed values.
//
// cargo run --example extremal_families

use indomatic::critical::is_strong_in_domatic_critical;
use indomatic::families::{critical_composition_family, order_value_family, pair_critical_family};
use indomatic::solver::strong_in_domatic_number;

pub fn run() -> Result<(), Box<dyn std::error::Error>> {
    let instances = [
        ("pair-critical n=3", pair_critical_family(3)?),
        ("order-value p=7 m=3", order_value_family(7, 3)?),
        ("critical-composition p=6 n=2", critical_composition_family(6, 2)?),
    ];
    for (name, f) in instances {
        let value = strong_in_domatic_number(&f.digraph)?.value;
        let critical = is_strong_in_domatic_critical(&f.digraph)?;
        println!(
            "{name}: claims {:?}; solver value {value}, critical {critical}",
            f.claims()
        );
    }
    Ok(())
}

fn main() -> Result<(), Box<dyn std::error::Error>> {
    run()
}
