//! Plane-graph representation with rotation systems and derived faces.
//!
//! A graph is given by its rotation system: for each vertex the cyclic
//! clockwise sequence of its neighbors. Faces are derived by dart tracing
//! with the fixed rule: from dart (u, v), the next dart on the same face is
//! (v, w) where w immediately follows u in the clockwise rotation at v.
//! The Euler identity n - m + f = 2 is the embedding validity check.

use crate::error::GraphError;

/// A face of the embedding: a closed dart walk. The degree counts vertex
/// incidences with multiplicity, so a bridge contributes 2 to its single face.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Face {
    pub id: usize,
    /// Closed walk of darts (u, v); `boundary.len()` is the face degree.
    pub boundary: Vec<(usize, usize)>,
}

impl Face {
    pub fn degree(&self) -> usize {
        self.boundary.len()
    }

    /// Vertices along the boundary walk, with multiplicity.
    pub fn walk_vertices(&self) -> impl Iterator<Item = usize> + '_ {
        self.boundary.iter().map(|&(u, _)| u)
    }
}

/// A maximal fan (or wheel) around a hub, induced by consecutive triangular
/// faces in the rotation at the hub.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FanWitness {
    pub hub: usize,
    pub rim: Vec<usize>,
    pub is_wheel: bool,
}

/// An immutable simple connected plane graph.
#[derive(Debug, Clone)]
pub struct PlaneGraph {
    rotation: Vec<Vec<usize>>,
    edges: Vec<(usize, usize)>,
    faces: Vec<Face>,
    /// dart_face[v][k] = id of the face containing dart (v, rotation[v][k]).
    dart_face: Vec<Vec<usize>>,
}

impl PlaneGraph {
    /// Validate a rotation system and trace its faces.
    pub fn build(rotations: Vec<Vec<usize>>) -> Result<PlaneGraph, GraphError> {
        let n = rotations.len();
        for (v, rot) in rotations.iter().enumerate() {
            for (i, &u) in rot.iter().enumerate() {
                if u >= n {
                    return Err(GraphError::InvalidId(u));
                }
                if u == v {
                    return Err(GraphError::SelfLoop(v));
                }
                if rot[..i].contains(&u) {
                    return Err(GraphError::DuplicateNeighbor { v, u });
                }
            }
        }
        for (v, rot) in rotations.iter().enumerate() {
            for &u in rot {
                if !rotations[u].contains(&v) {
                    return Err(GraphError::AsymmetricAdjacency { u: v, v: u });
                }
            }
        }
        let mut edges: Vec<(usize, usize)> = Vec::new();
        for (v, rot) in rotations.iter().enumerate() {
            for &u in rot {
                if v < u {
                    edges.push((v, u));
                }
            }
        }
        edges.sort_unstable();
        if edges.is_empty() {
            return Err(GraphError::EmptyGraph);
        }

        // connectivity
        let mut seen = vec![false; n];
        let mut stack = vec![0usize];
        seen[0] = true;
        while let Some(v) = stack.pop() {
            for &u in &rotations[v] {
                if !seen[u] {
                    seen[u] = true;
                    stack.push(u);
                }
            }
        }
        if seen.iter().any(|&s| !s) {
            return Err(GraphError::NotConnected);
        }

        // face tracing: the dart successor map is a bijection, so the orbits
        // partition all 2m darts
        let mut dart_face: Vec<Vec<usize>> = rotations
            .iter()
            .map(|rot| vec![usize::MAX; rot.len()])
            .collect();
        let mut faces: Vec<Face> = Vec::new();
        for v0 in 0..n {
            for k0 in 0..rotations[v0].len() {
                if dart_face[v0][k0] != usize::MAX {
                    continue;
                }
                let fid = faces.len();
                let mut boundary = Vec::new();
                let (mut v, mut k) = (v0, k0);
                loop {
                    dart_face[v][k] = fid;
                    let u = rotations[v][k];
                    boundary.push((v, u));
                    // next dart: (u, successor of v in rotation at u)
                    let idx = rotations[u].iter().position(|&w| w == v).unwrap();
                    let nk = (idx + 1) % rotations[u].len();
                    v = u;
                    k = nk;
                    if (v, k) == (v0, k0) {
                        break;
                    }
                }
                faces.push(Face { id: fid, boundary });
            }
        }

        let m = edges.len();
        let f = faces.len();
        if n + f != m + 2 {
            return Err(GraphError::NotPlanarEmbedding { n, m, f });
        }
        debug_assert_eq!(faces.iter().map(Face::degree).sum::<usize>(), 2 * m);

        Ok(PlaneGraph {
            rotation: rotations,
            edges,
            faces,
            dart_face,
        })
    }

    pub fn n(&self) -> usize {
        self.rotation.len()
    }

    pub fn m(&self) -> usize {
        self.edges.len()
    }

    /// Edge list as ordered pairs (u, v) with u < v, sorted.
    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn faces(&self) -> &[Face] {
        &self.faces
    }

    pub fn rotation(&self, v: usize) -> &[usize] {
        &self.rotation[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.rotation[v].len()
    }

    pub fn min_degree(&self) -> usize {
        (0..self.n()).map(|v| self.degree(v)).min().unwrap_or(0)
    }

    pub fn max_degree(&self) -> usize {
        (0..self.n()).map(|v| self.degree(v)).max().unwrap_or(0)
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.rotation[v]
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.rotation[u].contains(&v)
    }

    pub fn face_degree(&self, f: usize) -> Result<usize, GraphError> {
        self.faces
            .get(f)
            .map(Face::degree)
            .ok_or(GraphError::InvalidId(f))
    }

    fn check_vertex(&self, v: usize) -> Result<(), GraphError> {
        if v < self.n() {
            Ok(())
        } else {
            Err(GraphError::InvalidId(v))
        }
    }

    /// N(v) filtered by degree in [lo, hi].
    pub fn neighbors_with_degree(
        &self,
        v: usize,
        lo: usize,
        hi: usize,
    ) -> Result<Vec<usize>, GraphError> {
        self.check_vertex(v)?;
        Ok(self.rotation[v]
            .iter()
            .copied()
            .filter(|&u| (lo..=hi).contains(&self.degree(u)))
            .collect())
    }

    /// Incident faces of v (as a set, multiplicity collapsed) filtered by
    /// face degree in [lo, hi].
    pub fn faces_at(&self, v: usize, lo: usize, hi: usize) -> Result<Vec<usize>, GraphError> {
        self.check_vertex(v)?;
        let mut out: Vec<usize> = self.dart_face[v]
            .iter()
            .copied()
            .filter(|&f| (lo..=hi).contains(&self.faces[f].degree()))
            .collect();
        out.sort_unstable();
        out.dedup();
        Ok(out)
    }

    /// Face ids at the d(v) corners of v, with multiplicity. Corner i lies
    /// between rotation[v][i] and rotation[v][i+1]; its face is the one on
    /// dart (v, rotation[v][i+1]).
    pub fn corner_faces(&self, v: usize) -> Vec<usize> {
        let d = self.degree(v);
        (0..d).map(|i| self.dart_face[v][(i + 1) % d]).collect()
    }

    /// Face degrees at the corners of v, with multiplicity, aligned so that
    /// entry i is the corner between rotation[v][i] and rotation[v][i+1].
    pub fn corner_face_degrees(&self, v: usize) -> Vec<usize> {
        self.corner_faces(v)
            .into_iter()
            .map(|f| self.faces[f].degree())
            .collect()
    }

    /// The two faces incident with edge (u, v): on dart (u, v) and dart (v, u).
    pub fn edge_faces(&self, u: usize, v: usize) -> Result<(usize, usize), GraphError> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        let ku = self.rotation[u]
            .iter()
            .position(|&w| w == v)
            .ok_or(GraphError::InvalidId(v))?;
        let kv = self.rotation[v].iter().position(|&w| w == u).unwrap();
        Ok((self.dart_face[u][ku], self.dart_face[v][kv]))
    }

    /// Degrees of the two faces incident with edge (u, v).
    pub fn edge_face_degrees(&self, u: usize, v: usize) -> Result<(usize, usize), GraphError> {
        let (f1, f2) = self.edge_faces(u, v)?;
        Ok((self.faces[f1].degree(), self.faces[f2].degree()))
    }

    /// Maximal fans around a hub. A run of j consecutive triangular corners
    /// yields a fan with rim length j + 1; if every corner at the hub is a
    /// 3-face the single fan closes into a wheel.
    pub fn find_fan(&self, hub: usize) -> Result<Vec<FanWitness>, GraphError> {
        self.check_vertex(hub)?;
        let d = self.degree(hub);
        let rot = &self.rotation[hub];
        // corner i joins rim neighbors i and i+1 when its face is a triangle
        let tri: Vec<bool> = self
            .corner_faces(hub)
            .into_iter()
            .map(|f| self.faces[f].degree() == 3)
            .collect();
        if tri.iter().all(|&t| t) && d >= 3 {
            return Ok(vec![FanWitness {
                hub,
                rim: rot.clone(),
                is_wheel: true,
            }]);
        }
        let mut fans = Vec::new();
        // scan cyclically; start each run just after a non-triangular corner
        for start in 0..d {
            if tri[(start + d - 1) % d] {
                continue;
            }
            let mut rim = vec![rot[start]];
            let mut i = start;
            while tri[i] {
                i = (i + 1) % d;
                rim.push(rot[i]);
            }
            let is_wheel = rim.len() >= 2 && self.has_edge(rim[0], *rim.last().unwrap());
            fans.push(FanWitness { hub, rim, is_wheel });
        }
        fans.sort_by_key(|f| {
            rot.iter()
                .position(|&u| u == f.rim[0])
                .unwrap_or(usize::MAX)
        });
        Ok(fans)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generate;

    fn triangle() -> PlaneGraph {
        PlaneGraph::build(vec![vec![1, 2], vec![2, 0], vec![0, 1]]).unwrap()
    }

    #[test]
    fn triangle_has_two_triangular_faces() {
        let g = triangle();
        assert_eq!(g.m(), 3);
        assert_eq!(g.faces().len(), 2);
        assert!(g.faces().iter().all(|f| f.degree() == 3));
    }

    #[test]
    fn k4_is_a_tetrahedron() {
        let g = generate::k4();
        assert_eq!(g.n(), 4);
        assert_eq!(g.m(), 6);
        assert_eq!(g.faces().len(), 4);
        assert!(g.faces().iter().all(|f| f.degree() == 3));
    }

    #[test]
    fn asymmetric_adjacency_is_rejected() {
        let err = PlaneGraph::build(vec![vec![1], vec![], vec![]]).unwrap_err();
        assert_eq!(err, GraphError::AsymmetricAdjacency { u: 0, v: 1 });
    }

    #[test]
    fn self_loop_and_duplicate_are_rejected() {
        assert_eq!(
            PlaneGraph::build(vec![vec![0]]).unwrap_err(),
            GraphError::SelfLoop(0)
        );
        assert_eq!(
            PlaneGraph::build(vec![vec![1, 1], vec![0, 0]]).unwrap_err(),
            GraphError::DuplicateNeighbor { v: 0, u: 1 }
        );
    }

    #[test]
    fn disconnected_is_rejected() {
        let err = PlaneGraph::build(vec![vec![1], vec![0], vec![3], vec![2]]).unwrap_err();
        assert_eq!(err, GraphError::NotConnected);
    }

    #[test]
    fn degree_and_face_queries() {
        let ico = generate::icosahedron();
        for v in 0..ico.n() {
            assert_eq!(ico.degree(v), 5);
            assert_eq!(ico.faces_at(v, 3, 3).unwrap().len(), 5);
        }
        let k4 = generate::k4();
        for v in 0..4 {
            assert_eq!(k4.neighbors_with_degree(v, 3, 3).unwrap().len(), 3);
        }
        let q3 = generate::prism(4).unwrap();
        for v in 0..q3.n() {
            assert_eq!(q3.faces_at(v, 4, 4).unwrap().len(), 3);
        }
    }

    #[test]
    fn fans_and_wheels() {
        let w5 = generate::wheel(5).unwrap();
        let fans = w5.find_fan(0).unwrap();
        assert_eq!(fans.len(), 1);
        assert!(fans[0].is_wheel);
        assert_eq!(fans[0].rim.len(), 5);

        // all faces of the cube are quadrilaterals: rims of length 1 only
        let q3 = generate::prism(4).unwrap();
        let fans = q3.find_fan(0).unwrap();
        assert!(fans.iter().all(|f| f.rim.len() == 1));
        assert_eq!(fans.len(), 3);

        let ico = generate::icosahedron();
        for v in 0..ico.n() {
            let fans = ico.find_fan(v).unwrap();
            assert_eq!(fans.len(), 1);
            assert!(fans[0].is_wheel);
            assert_eq!(fans[0].rim.len(), 5);
        }
    }

    #[test]
    fn fan_witnesses_satisfy_edge_conditions() {
        let g = generate::stacked_triangulation(12, 7).unwrap();
        for hub in 0..g.n() {
            for fan in g.find_fan(hub).unwrap() {
                for &u in &fan.rim {
                    assert!(g.has_edge(hub, u));
                }
                for w in fan.rim.windows(2) {
                    assert!(g.has_edge(w[0], w[1]));
                }
                if fan.is_wheel {
                    assert!(g.has_edge(fan.rim[0], *fan.rim.last().unwrap()));
                }
            }
        }
    }
}
