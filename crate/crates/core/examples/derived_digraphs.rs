// Builds the line, subdivision, root, middle and total digraphs of a small
// digraph and compares their values with Λ.
//
// cargo run --example derived_digraphs

use indomatic::families::complete_digraph;
use indomatic::solver::{lambda_number, strong_in_domatic_number};
use indomatic::transforms::{line_digraph, middle, root, subdivision, total};
use indomatic::Digraph;

pub fn run() -> Result<(), Box<dyn std::error::Error>> {
    for d in [complete_digraph(3)?, Digraph::new(3, [(0, 1), (1, 0), (1, 2), (2, 1)])?] {
        let value = |g: &Digraph| strong_in_domatic_number(g).map(|r| r.value);
        println!("D with {} arcs: d_s⁻ = {}, Λ = {}", d.arc_count(), value(&d)?, lambda_number(&d)?.value);
        let line = line_digraph(&d)?;
        println!("  L: order {}, d_s⁻ = {}", line.digraph.order(), value(&line.digraph)?);
        for (name, derived) in [("S", subdivision(&d)?), ("R", root(&d)?), ("Q", middle(&d)?), ("T", total(&d)?)] {
            println!("  {name}: order {}, d_s⁻ = {}", derived.digraph.order(), value(&derived.digraph)?);
        }
    }
    Ok(())
}

fn main() -> Result<(), Box<dyn std::error::Error>> {
    run()
}
