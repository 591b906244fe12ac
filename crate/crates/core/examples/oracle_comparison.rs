// Cross-checks the search against exhaustive enumeration on every strong
// digraph of order 3.
//
// cargo run --example oracle_comparison

use indomatic::cli::compare_with_oracle;
use indomatic::families::labeled_digraphs;

pub fn run() -> Result<(), Box<dyn std::error::Error>> {
    let (mut strong, mut mismatches) = (0, 0);
    for d in labeled_digraphs(3)? {
        let c = compare_with_oracle(&d, 12)?;
        strong += usize::from(c.strong);
        mismatches += usize::from(!c.agrees());
    }
    println!("order 3: {strong} strong, {mismatches} mismatches");
    Ok(())
}

fn main() -> Result<(), Box<dyn std::error::Error>> {
    run()
}
