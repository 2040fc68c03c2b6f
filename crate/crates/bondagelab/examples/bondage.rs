//! Independent bondage numbers by bounded exact search, next to the
//! Priddy-Wei degree bound that caps them.

use bondagelab::bondage::{bondage_i, priddy_wei_bound, BondageValue};
use bondagelab::generate;

fn main() {
    let graphs = [
        ("K4", generate::k4()),
        ("W5", generate::wheel(5).unwrap()),
        ("octahedron", generate::octahedron()),
        ("stacked(9, seed 5)", generate::stacked_triangulation(9, 5).unwrap()),
    ];
    for (name, g) in &graphs {
        let (bound, edge) = priddy_wei_bound(g).unwrap();
        println!("{name}: degree bound {bound} at edge {edge:?}");
        let r = bondage_i(g, bound);
        match r.value {
            BondageValue::Finite(k) => println!(
                "{name}: bondage_i = {k}, gamma_i {} -> {} deleting {:?}",
                r.gamma_i_before, r.gamma_i_after, r.witness_edges
            ),
            BondageValue::ExceedsLimit => println!("{name}: bondage_i > {bound}"),
        }
    }
}
