// Computes d_s⁻ and d_s⁺ of a few small digraphs and prints a witness.
//
// cargo run --example strong_in_domatic_number

use indomatic::families::{complete_digraph, directed_cycle};
use indomatic::solver::{strong_in_domatic_number, strong_out_domatic_number};
use indomatic::Digraph;

pub fn run() -> Result<(), Box<dyn std::error::Error>> {
    // A 3-cycle with one chord back: 0→1→2→0 plus 1→0.
    let d = Digraph::new(3, [(0, 1), (1, 2), (2, 0), (1, 0)])?;
    for (name, g) in [("K4", complete_digraph(4)?), ("C5", directed_cycle(5)?), ("chorded C3", d)] {
        let minus = strong_in_domatic_number(&g)?;
        let plus = strong_out_domatic_number(&g)?;
        println!("{name}: d_s⁻ = {}, d_s⁺ = {}", minus.value, plus.value);
        for (i, block) in minus.witness.blocks().iter().enumerate() {
            println!("  block {i}: {block:?}");
        }
        println!("  search nodes: {}", minus.stats.nodes);
    }
    Ok(())
}

fn main() -> Result<(), Box<dyn std::error::Error>> {
    run()
}
