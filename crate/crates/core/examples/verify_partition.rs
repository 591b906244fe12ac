// Checks candidate partitions block by block and reports why one fails.
//
// cargo run --example verify_partition

use indomatic::domination::{is_strong_in_domatic_partition, is_strong_in_dominating};
use indomatic::families::directed_cycle;
use indomatic::{VertexPartition, VertexSet};

pub fn run() -> Result<(), Box<dyn std::error::Error>> {
    let c4 = directed_cycle(4)?;
    let alternating = VertexPartition::from_blocks(4, &[[0, 2], [1, 3]])?;
    // Each block dominates, but neither induces a strong subdigraph.
    println!("C4 {{0,2}},{{1,3}}: {}", is_strong_in_domatic_partition(&c4, &alternating)?);
    println!("C4 whole set: {}", is_strong_in_domatic_partition(&c4, &VertexPartition::whole(4))?);
    let s = VertexSet::from_bits(0b0101);
    println!("{{0,2}} strong in-dominating in C4: {}", is_strong_in_dominating(&c4, s)?);
    Ok(())
}

fn main() -> Result<(), Box<dyn std::error::Error>> {
    run()
}
