//! Build a plane graph from a rotation system and walk its faces.

use bondagelab::PlaneGraph;

fn main() {
    // a triangular prism: outer triangle 0,1,2 and inner triangle 3,4,5
    let g = PlaneGraph::build(vec![
        vec![1, 3, 2],
        vec![2, 4, 0],
        vec![0, 5, 1],
        vec![0, 4, 5],
        vec![1, 5, 3],
        vec![2, 3, 4],
    ])
    .expect("valid embedding");

    println!("n = {}, m = {}, faces = {}", g.n(), g.m(), g.faces().len());
    for f in g.faces() {
        let walk: Vec<String> = f.walk_vertices().map(|v| v.to_string()).collect();
        println!("face {}: degree {} walk {}", f.id, f.degree(), walk.join(" "));
    }

    for v in 0..g.n() {
        println!(
            "corner faces at {v}: {:?} (degrees {:?})",
            g.corner_faces(v),
            g.corner_face_degrees(v)
        );
    }

    // fans: maximal runs of consecutive triangles around a hub
    for fan in g.find_fan(0).unwrap() {
        println!("fan at {}: rim {:?} wheel={}", fan.hub, fan.rim, fan.is_wheel);
    }
}
