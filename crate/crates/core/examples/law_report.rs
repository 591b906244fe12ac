// Runs every law on one digraph and prints the table and JSON.
//
// cargo run --example law_report

use indomatic::families::complete_digraph;
use indomatic::laws::{check_all_with, LawConfig};

pub fn run() -> Result<(), Box<dyn std::error::Error>> {
    let d = complete_digraph(3)?;
    let report = check_all_with(&d, &LawConfig { spanning_samples: 5, ..LawConfig::default() })?;
    println!("{report}");
    println!("{}", report.to_json().lines().take(12).collect::<Vec<_>>().join("\n"));
    Ok(())
}

fn main() -> Result<(), Box<dyn std::error::Error>> {
    run()
}
