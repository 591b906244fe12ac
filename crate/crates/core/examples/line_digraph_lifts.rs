// Turns a partition of L(D) into partitions of the middle and total
// digraphs.
//
// cargo run --example line_digraph_lifts

use indomatic::domination::is_strong_in_domatic_partition;
use indomatic::families::complete_digraph;
use indomatic::solver::strong_in_domatic_number;
use indomatic::transforms::{line_digraph, lift_middle_partition, lift_total_partition, middle, total};

pub fn run() -> Result<(), Box<dyn std::error::Error>> {
    let d = complete_digraph(3)?;
    let best = strong_in_domatic_number(&line_digraph(&d)?.digraph)?.witness;
    println!("L(K3) partition: {} blocks", best.block_count());
    let q = lift_middle_partition(&best, &d)?;
    println!("Q(K3): {} blocks, {}", q.block_count(), is_strong_in_domatic_partition(&middle(&d)?.digraph, &q)?);
    let t = lift_total_partition(&best, &d)?;
    println!("T(K3): {} blocks, {}", t.block_count(), is_strong_in_domatic_partition(&total(&d)?.digraph, &t)?);
    // Order 2 is refused: the naive lift is not valid on Q(K2).
    println!("K2: {}", lift_middle_partition(&best, &complete_digraph(2)?).unwrap_err());
    Ok(())
}

fn main() -> Result<(), Box<dyn std::error::Error>> {
    run()
}
