//! Serialize a graph to the .plg text format and parse it back.

use bondagelab::{generate, plg};

fn main() {
    let g = generate::prism(4).unwrap();
    let text = plg::write(&g);
    print!("{text}");

    let back = plg::parse(&text).unwrap();
    assert_eq!(back.edges(), g.edges());
    assert_eq!(back.faces().len(), g.faces().len());
    println!("# round trip ok: n={} m={}", back.n(), back.m());

    // parse errors carry line numbers
    let err = plg::parse("planegraph 2\nv 0: 1\nv 1: 0 0\n").unwrap_err();
    println!("# expected failure: {err}");
}
