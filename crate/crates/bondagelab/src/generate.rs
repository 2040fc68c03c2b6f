//! Deterministic generators for the test corpus. Every generator returns a
//! validated plane graph; rotations are supplied directly, never computed
//! from an abstract graph.

use crate::error::GraphError;
use crate::graph::PlaneGraph;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Cycle C_n, n >= 3. Two faces of degree n.
pub fn cycle(n: usize) -> Result<PlaneGraph, GraphError> {
    if n < 3 {
        return Err(GraphError::BadParams(format!("cycle needs n >= 3, got {n}")));
    }
    let rot = (0..n).map(|i| vec![(i + 1) % n, (i + n - 1) % n]).collect();
    PlaneGraph::build(rot)
}

/// Wheel W_n: hub 0 joined to an n-cycle 1..=n, n >= 3.
pub fn wheel(n: usize) -> Result<PlaneGraph, GraphError> {
    if n < 3 {
        return Err(GraphError::BadParams(format!("wheel needs n >= 3, got {n}")));
    }
    let mut rot = vec![(1..=n).collect::<Vec<_>>()];
    for i in 1..=n {
        let next = if i == n { 1 } else { i + 1 };
        let prev = if i == 1 { n } else { i - 1 };
        rot.push(vec![next, 0, prev]);
    }
    PlaneGraph::build(rot)
}

/// Fan graph: hub 0 joined to a path 1..=n, n >= 2.
pub fn fan(n: usize) -> Result<PlaneGraph, GraphError> {
    if n < 2 {
        return Err(GraphError::BadParams(format!("fan needs n >= 2, got {n}")));
    }
    let mut rot = vec![(1..=n).collect::<Vec<_>>()];
    for i in 1..=n {
        if i == 1 {
            rot.push(vec![2, 0]);
        } else if i == n {
            rot.push(vec![0, n - 1]);
        } else {
            rot.push(vec![i + 1, 0, i - 1]);
        }
    }
    PlaneGraph::build(rot)
}

/// The complete graph K4 embedded as a tetrahedron.
pub fn k4() -> PlaneGraph {
    // outer triangle 1,2,3 with 0 in the center
    PlaneGraph::build(vec![
        vec![1, 2, 3],
        vec![2, 0, 3],
        vec![3, 0, 1],
        vec![1, 0, 2],
    ])
    .expect("K4 embedding is valid")
}

/// The octahedron: 6 vertices, 12 edges, 8 triangular faces.
pub fn octahedron() -> PlaneGraph {
    // top 0, equator square 1..4, bottom 5
    let sq = |i: usize| 1 + (i % 4);
    let mut rot = vec![vec![1, 2, 3, 4]];
    for i in 0..4 {
        rot.push(vec![sq(i + 1), 0, sq(i + 3), 5]);
    }
    rot.push(vec![4, 3, 2, 1]);
    PlaneGraph::build(rot).expect("octahedron embedding is valid")
}

/// The icosahedron: 12 vertices, 30 edges, 20 triangular faces.
pub fn icosahedron() -> PlaneGraph {
    // top 0, upper pentagon 1..5, lower pentagon 6..10, bottom 11
    let up = |i: usize| 1 + (i % 5);
    let lo = |i: usize| 6 + (i % 5);
    let mut rot = vec![(1..=5).collect::<Vec<_>>()];
    for i in 0..5 {
        // upper vertex up(i): neighbors top, upper ring, lower pair lo(i), lo(i+1)
        rot.push(vec![up(i + 1), 0, up(i + 4), lo(i), lo(i + 1)]);
    }
    for i in 0..5 {
        // lower vertex lo(i): neighbors bottom, lower ring, upper pair up(i+4), up(i)
        rot.push(vec![lo(i + 1), up(i), up(i + 4), lo(i + 4), 11]);
    }
    rot.push(vec![lo(4), lo(3), lo(2), lo(1), lo(0)]);
    PlaneGraph::build(rot).expect("icosahedron embedding is valid")
}

/// Prism over C_n: outer cycle 0..n, inner cycle n..2n, n >= 3.
/// prism(4) is the cube graph Q3.
pub fn prism(n: usize) -> Result<PlaneGraph, GraphError> {
    if n < 3 {
        return Err(GraphError::BadParams(format!("prism needs n >= 3, got {n}")));
    }
    let mut rot = Vec::with_capacity(2 * n);
    for i in 0..n {
        rot.push(vec![(i + 1) % n, n + i, (i + n - 1) % n]);
    }
    for i in 0..n {
        rot.push(vec![i, n + (i + 1) % n, n + (i + n - 1) % n]);
    }
    PlaneGraph::build(rot)
}

/// Stacked (Apollonian) triangulation on n vertices: start from K4 and
/// repeatedly subdivide a random triangular face into three triangles.
/// Maximal planar with minimum degree 3; deterministic for a fixed seed.
pub fn stacked_triangulation(n: usize, seed: u64) -> Result<PlaneGraph, GraphError> {
    if n < 4 {
        return Err(GraphError::BadParams(format!(
            "stacked triangulation needs n >= 4, got {n}"
        )));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    // rotations of K4, plus its four faces as oriented dart walks (a, b, c)
    let mut rot: Vec<Vec<usize>> = vec![
        vec![1, 2, 3],
        vec![2, 0, 3],
        vec![3, 0, 1],
        vec![1, 0, 2],
    ];
    let mut tris: Vec<[usize; 3]> = vec![[0, 1, 3], [0, 2, 1], [0, 3, 2], [1, 2, 3]];

    let insert_after = |rot: &mut Vec<Vec<usize>>, at: usize, after: usize, w: usize| {
        let pos = rot[at].iter().position(|&x| x == after).unwrap();
        rot[at].insert(pos + 1, w);
    };

    for w in 4..n {
        let idx = rng.gen_range(0..tris.len());
        let [a, b, c] = tris.swap_remove(idx);
        // face walk (a,b),(b,c),(c,a): put w after a at b, after b at c, after c at a
        insert_after(&mut rot, b, a, w);
        insert_after(&mut rot, c, b, w);
        insert_after(&mut rot, a, c, w);
        rot.push(vec![b, a, c]);
        tris.push([a, b, w]);
        tris.push([b, c, w]);
        tris.push([c, a, w]);
    }
    PlaneGraph::build(rot)
}

/// Deterministic mixed corpus: wheels, prisms, cycles, fans, the two
/// triangular platonic solids, and stacked triangulations, all with
/// n <= max(max_n, 13). Names record the generator and parameters.
pub fn corpus(seed: u64, count: usize, max_n: usize) -> Vec<(String, PlaneGraph)> {
    let max_n = max_n.max(13);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::with_capacity(count);
    for i in 0..count {
        let (name, g) = match i % 6 {
            0 => {
                let n = rng.gen_range(4..=max_n);
                let s = rng.gen::<u64>();
                (format!("stacked_triangulation({n},{s})"), stacked_triangulation(n, s))
            }
            1 => {
                let n = rng.gen_range(3..=max_n - 1);
                (format!("wheel({n})"), wheel(n))
            }
            2 => {
                let n = rng.gen_range(3..=max_n / 2);
                (format!("prism({n})"), prism(n))
            }
            3 => {
                let n = rng.gen_range(4..=max_n);
                let s = rng.gen::<u64>();
                (format!("stacked_triangulation({n},{s})"), stacked_triangulation(n, s))
            }
            4 => {
                let n = rng.gen_range(3..=max_n);
                (format!("cycle({n})"), cycle(n))
            }
            _ => match i % 18 {
                5 => ("octahedron".to_string(), Ok(octahedron())),
                11 => ("icosahedron".to_string(), Ok(icosahedron())),
                _ => {
                    let n = rng.gen_range(2..=max_n - 1);
                    (format!("fan({n})"), fan(n))
                }
            },
        };
        out.push((format!("{i}:{name}"), g.expect("corpus parameters are in range")));
    }
    out
}

/// Generator names accepted by the CLI `gen` subcommand.
pub fn by_name(kind: &str, params: &[usize], seed: u64) -> Result<PlaneGraph, GraphError> {
    let one = |what: &str| -> Result<usize, GraphError> {
        params
            .first()
            .copied()
            .ok_or_else(|| GraphError::BadParams(format!("{what} takes one size parameter")))
    };
    match kind {
        "cycle" => cycle(one("cycle")?),
        "wheel" => wheel(one("wheel")?),
        "fan" => fan(one("fan")?),
        "k4" => Ok(k4()),
        "octahedron" => Ok(octahedron()),
        "icosahedron" => Ok(icosahedron()),
        "prism" => prism(one("prism")?),
        "stacked_triangulation" => stacked_triangulation(one("stacked_triangulation")?, seed),
        other => Err(GraphError::BadParams(format!("unknown generator '{other}'"))),
    }
}
