// The undirected side: connectivity, connected domatic number, clique
// domination and planarity of underlying graphs.
//
// cargo run --example undirected_invariants

use indomatic::families::{complete_digraph, directed_cycle};
use indomatic::undirected::{
    clique_domination_number, connected_domatic_number, is_planar, underlying_graph,
    vertex_connectivity,
};

pub fn run() -> Result<(), Box<dyn std::error::Error>> {
    for (name, d) in [("K5", complete_digraph(5)?), ("C6", directed_cycle(6)?)] {
        let g = underlying_graph(&d);
        println!(
            "{name}: κ = {}, d_c = {}, γ_cl = {:?}, planar = {}",
            vertex_connectivity(&g)?,
            connected_domatic_number(&g)?.value,
            clique_domination_number(&g)?,
            is_planar(&g)
        );
    }
    Ok(())
}

fn main() -> Result<(), Box<dyn std::error::Error>> {
    run()
}
