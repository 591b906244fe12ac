// Reads the plain-text digraph format, writes it back canonically, and
// exports DOT.
//
// cargo run --example file_formats

use indomatic::cli::formats::{parse_digraph, parse_partition, to_dot, write_digraph, write_partition};

pub fn run() -> Result<(), Box<dyn std::error::Error>> {
    let d = parse_digraph("# a triangle\nn 3\n2 0\n0 1\n1 2\n")?;
    print!("{}", write_digraph(&d));
    let p = parse_partition("2 1 0\n", 3)?;
    print!("{}", write_partition(&p));
    print!("{}", to_dot(&d, None));
    match parse_digraph("n 3\n0 1\n1 1\n") {
        Err(e) => println!("rejected: {e}"),
        Ok(_) => unreachable!(),
    }
    Ok(())
}

fn main() -> Result<(), Box<dyn std::error::Error>> {
    run()
}
