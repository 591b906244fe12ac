// Lifts a partition through a Cartesian product, and reads the canonical
// partition of a composition.
//
// cargo run --example product_and_composition

use indomatic::domination::is_strong_in_domatic_partition;
use indomatic::families::{complete_digraph, directed_cycle, empty_digraph};
use indomatic::solver::strong_in_domatic_number;
use indomatic::transforms::{
    cartesian_product, composition, composition_partition, lift_product_partition, CompositionSpec,
};

pub fn run() -> Result<(), Box<dyn std::error::Error>> {
    let (d, h) = (complete_digraph(3)?, directed_cycle(3)?);
    let best = strong_in_domatic_number(&d)?.witness;
    let product = cartesian_product(&d, &h)?;
    let lifted = lift_product_partition(&best, &d, &h)?;
    println!(
        "K3 □ C3: order {}, lifted partition has {} blocks, {}",
        product.digraph.order(),
        lifted.block_count(),
        is_strong_in_domatic_partition(&product.digraph, &lifted)?
    );

    // C3 with parts of orders 2, 3, 2: the value is the smallest part order.
    let spec = CompositionSpec::new(directed_cycle(3)?, vec![empty_digraph(2)?, complete_digraph(3)?, empty_digraph(2)?])?;
    let composed = composition(&spec)?;
    let p = composition_partition(&spec)?;
    println!(
        "C3[E2, K3, E2]: order {}, canonical partition {}, d_s⁻ = {}",
        composed.digraph.order(),
        p.block_count(),
        strong_in_domatic_number(&composed.digraph)?.value
    );
    Ok(())
}

fn main() -> Result<(), Box<dyn std::error::Error>> {
    run()
}
