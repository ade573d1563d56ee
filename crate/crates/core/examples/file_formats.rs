//! Reading and writing the two plain-text input formats.

use syzygraph::io::{parse_str, to_graph_format, to_ideal_format, InputError};

pub fn run() -> bool {
    let text = "# the loop at 1 is the square x1^2\r\ngraph 5\r\ne 1 1\r\ne 1 3\r\ne 3 5\r\ne 5 2\r\ne 2 4\r\ne 4 1\r\n";
    let ideal = parse_str(text).unwrap();
    let as_ideal = to_ideal_format(&ideal);
    print!("{as_ideal}");
    let round_trip = parse_str(&as_ideal).unwrap() == ideal
        && parse_str(&to_graph_format(&ideal)).unwrap() == ideal;

    let bad = parse_str("graph 3\ne 1 4\n");
    println!("out of range: {}", bad.as_ref().unwrap_err());
    let dup = parse_str("ideal 3\ng 1 2\ng 2 1\n");
    println!("duplicate: {}", dup.as_ref().unwrap_err());
    round_trip
        && matches!(bad, Err(InputError::OutOfRange { line: 2, .. }))
        && matches!(dup, Err(InputError::Duplicate { line: 3, .. }))
}

#[allow(dead_code)]
fn main() {
    if !run() {
        std::process::exit(1);
    }
}
