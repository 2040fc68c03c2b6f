//! Produce verified small-edge-set certificates that deleting the set
//! raises the independent domination number.

use bondagelab::certifier::certify;
use bondagelab::generate;

fn main() {
    let graphs = [
        ("K4", generate::k4()),
        ("icosahedron", generate::icosahedron()),
        ("stacked(12, seed 3)", generate::stacked_triangulation(12, 3).unwrap()),
        ("stacked(16, seed 9)", generate::stacked_triangulation(16, 9).unwrap()),
    ];
    for (name, g) in &graphs {
        match certify(g) {
            Ok(cert) => {
                println!("{name}: {}", cert.to_line());
                assert!(cert.verified);
                assert!(cert.edges.len() <= 8);
            }
            Err(e) => println!("{name}: {e}"),
        }
    }
}
