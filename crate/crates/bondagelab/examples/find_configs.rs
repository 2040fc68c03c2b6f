//! Detect the unavoidable configurations (a)-(h) in small plane graphs.

use bondagelab::configurations::{detect_edge_configs, detect_vertex_configs, find_configuration};
use bondagelab::generate;

fn main() {
    let graphs = [
        ("K4", generate::k4()),
        ("cube", generate::prism(4).unwrap()),
        ("W10", generate::wheel(10).unwrap()),
        ("icosahedron", generate::icosahedron()),
    ];
    for (name, g) in &graphs {
        println!("-- {name}");
        match find_configuration(g) {
            Some(w) => println!("first: {}", w.to_line()),
            None => println!("first: none"),
        }
        let edges = detect_edge_configs(g);
        println!("{} edge witnesses", edges.len());
        for w in detect_vertex_configs(g) {
            println!("{}", w.to_line());
        }
    }
}
