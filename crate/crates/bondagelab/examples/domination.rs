//! Exact domination and independent domination numbers with witnesses.

use bondagelab::domination::{gamma, gamma_i};
use bondagelab::generate;

fn main() {
    let graphs = [
        ("C7", generate::cycle(7).unwrap()),
        ("W6", generate::wheel(6).unwrap()),
        ("icosahedron", generate::icosahedron()),
        ("prism(5)", generate::prism(5).unwrap()),
    ];
    for (name, g) in &graphs {
        let (k, w) = gamma(g);
        let (ki, wi) = gamma_i(g);
        println!("{name}: gamma = {k} (witness {:?})", w.vertices);
        println!("{name}: gamma_i = {ki} (witness {:?})", wi.vertices);
        assert!(wi.independent && wi.dominating);
    }
}
