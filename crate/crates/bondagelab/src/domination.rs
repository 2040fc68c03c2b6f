//! Exact domination and independent domination with witness sets.
//!
//! Both solvers are exact branch-and-bound searches over bitmask vertex
//! sets (n <= 64). Ties among optimal witnesses are broken toward the
//! lexicographically smallest vertex set so golden tests are deterministic.

use crate::error::GraphError;
use crate::graph::PlaneGraph;

/// A vertex set with recomputed flags; callers' claims are never trusted.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DominatingSetWitness {
    pub vertices: Vec<usize>,
    pub independent: bool,
    pub dominating: bool,
}

impl DominatingSetWitness {
    pub fn cardinality(&self) -> usize {
        self.vertices.len()
    }
}

/// Abstract graph as closed/open neighborhood bitmasks. Bondage search
/// operates on this after edge deletion; faces are irrelevant there.
#[derive(Debug, Clone)]
pub struct BitGraph {
    pub n: usize,
    /// open neighborhood masks
    pub nbr: Vec<u64>,
}

impl BitGraph {
    pub fn from_plane(g: &PlaneGraph) -> BitGraph {
        assert!(g.n() <= 64, "bitmask solvers support n <= 64");
        let nbr = (0..g.n())
            .map(|v| g.neighbors(v).iter().fold(0u64, |m, &u| m | (1 << u)))
            .collect();
        BitGraph { n: g.n(), nbr }
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> BitGraph {
        assert!(n <= 64, "bitmask solvers support n <= 64");
        let mut nbr = vec![0u64; n];
        for &(u, v) in edges {
            nbr[u] |= 1 << v;
            nbr[v] |= 1 << u;
        }
        BitGraph { n, nbr }
    }

    pub fn without_edges(&self, deleted: &[(usize, usize)]) -> BitGraph {
        let mut g = self.clone();
        for &(u, v) in deleted {
            g.nbr[u] &= !(1 << v);
            g.nbr[v] &= !(1 << u);
        }
        g
    }

    pub fn full_mask(&self) -> u64 {
        if self.n == 64 {
            u64::MAX
        } else {
            (1u64 << self.n) - 1
        }
    }

    pub fn closed(&self, v: usize) -> u64 {
        self.nbr[v] | (1 << v)
    }

    pub fn is_dominating_mask(&self, s: u64) -> bool {
        let mut covered = s;
        let mut rest = s;
        while rest != 0 {
            let v = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            covered |= self.nbr[v];
        }
        covered == self.full_mask()
    }

    pub fn is_independent_mask(&self, s: u64) -> bool {
        let mut rest = s;
        while rest != 0 {
            let v = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            if self.nbr[v] & s != 0 {
                return false;
            }
        }
        true
    }
}

fn mask_of(s: &[usize]) -> u64 {
    s.iter().fold(0u64, |m, &v| m | (1 << v))
}

fn vec_of(mask: u64) -> Vec<usize> {
    (0..64).filter(|&v| mask & (1 << v) != 0).collect()
}

/// True iff the lowest element where the equal-cardinality sets differ
/// belongs to `a` (lexicographic order on sorted vertex lists).
fn lex_less(a: u64, b: u64) -> bool {
    let diff = a ^ b;
    if diff == 0 {
        return false;
    }
    a & (diff & diff.wrapping_neg()) != 0
}

fn validate_subset(g: &PlaneGraph, s: &[usize]) -> Result<(), GraphError> {
    for &v in s {
        if v >= g.n() {
            return Err(GraphError::InvalidId(v));
        }
    }
    Ok(())
}

/// True iff every vertex is in `s` or adjacent to a member of `s`.
pub fn is_dominating(g: &PlaneGraph, s: &[usize]) -> Result<bool, GraphError> {
    validate_subset(g, s)?;
    Ok(BitGraph::from_plane(g).is_dominating_mask(mask_of(s)))
}

/// True iff no edge joins two members of `s`.
pub fn is_independent(g: &PlaneGraph, s: &[usize]) -> Result<bool, GraphError> {
    validate_subset(g, s)?;
    Ok(BitGraph::from_plane(g).is_independent_mask(mask_of(s)))
}

struct Search<'a> {
    g: &'a BitGraph,
    closed: Vec<u64>,
    best_size: u32,
    best_mask: u64,
    independent: bool,
}

impl Search<'_> {
    /// Pick an uncovered vertex of minimum degree (ties: lowest index);
    /// any dominating set must contain a member of its closed neighborhood.
    fn branch_vertex(&self, covered: u64) -> usize {
        let mut best = usize::MAX;
        let mut best_deg = usize::MAX;
        let mut rest = self.g.full_mask() & !covered;
        while rest != 0 {
            let v = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            let d = self.g.nbr[v].count_ones() as usize;
            if d < best_deg {
                best_deg = d;
                best = v;
            }
        }
        best
    }

    fn recurse(&mut self, set: u64, covered: u64) {
        if covered == self.g.full_mask() {
            let size = set.count_ones();
            if size < self.best_size || (size == self.best_size && lex_less(set, self.best_mask)) {
                self.best_size = size;
                self.best_mask = set;
            }
            return;
        }
        let size = set.count_ones();
        if size + 1 > self.best_size {
            return;
        }
        let v = self.branch_vertex(covered);
        let mut cands = self.closed[v];
        while cands != 0 {
            let w = cands.trailing_zeros() as usize;
            cands &= cands - 1;
            if set & (1 << w) != 0 {
                continue;
            }
            if self.independent && self.g.nbr[w] & set != 0 {
                continue;
            }
            self.recurse(set | (1 << w), covered | self.closed[w]);
        }
    }
}

fn solve(g: &BitGraph, independent: bool) -> u64 {
    let closed: Vec<u64> = (0..g.n).map(|v| g.closed(v)).collect();
    let mut s = Search {
        g,
        closed,
        best_size: g.n as u32 + 1,
        best_mask: g.full_mask(),
        independent,
    };
    s.recurse(0, 0);
    debug_assert!(s.best_size <= g.n as u32, "every graph has a maximal independent set");
    s.best_mask
}

/// Minimum size of an independent dominating set of `g`, as a mask.
pub fn gamma_i_mask(g: &BitGraph) -> u64 {
    solve(g, true)
}

/// Is there an independent dominating set of size <= `cap`? Used by the
/// bondage search, which only needs the decision.
pub fn has_ids_of_size_at_most(g: &BitGraph, cap: u32) -> bool {
    fn rec(g: &BitGraph, closed: &[u64], set: u64, covered: u64, cap: u32) -> bool {
        if covered == g.full_mask() {
            return true;
        }
        if set.count_ones() + 1 > cap {
            return false;
        }
        let v = (g.full_mask() & !covered).trailing_zeros() as usize;
        let mut cands = closed[v];
        while cands != 0 {
            let w = cands.trailing_zeros() as usize;
            cands &= cands - 1;
            if set & (1 << w) != 0 || g.nbr[w] & set != 0 {
                continue;
            }
            if rec(g, closed, set | (1 << w), covered | closed[w], cap) {
                return true;
            }
        }
        false
    }
    let closed: Vec<u64> = (0..g.n).map(|v| g.closed(v)).collect();
    rec(g, &closed, 0, 0, cap)
}

fn witness_from_mask(g: &BitGraph, mask: u64) -> DominatingSetWitness {
    DominatingSetWitness {
        vertices: vec_of(mask),
        independent: g.is_independent_mask(mask),
        dominating: g.is_dominating_mask(mask),
    }
}

/// Exact domination number with a witness.
pub fn gamma(g: &PlaneGraph) -> (usize, DominatingSetWitness) {
    let bg = BitGraph::from_plane(g);
    let mask = solve(&bg, false);
    (mask.count_ones() as usize, witness_from_mask(&bg, mask))
}

/// Exact independent domination number with a witness. Maximal independent
/// sets are exactly the independent dominating sets, so the search branches
/// on the closed neighborhood of an uncovered vertex, skipping candidates
/// adjacent to the partial set.
pub fn gamma_i(g: &PlaneGraph) -> (usize, DominatingSetWitness) {
    let bg = BitGraph::from_plane(g);
    let mask = solve(&bg, true);
    (mask.count_ones() as usize, witness_from_mask(&bg, mask))
}

/// Independent domination number of an abstract (possibly edge-deleted)
/// graph. Isolated vertices join every independent dominating set.
pub fn gamma_i_bitgraph(g: &BitGraph) -> (usize, Vec<usize>) {
    let mask = solve(g, true);
    (mask.count_ones() as usize, vec_of(mask))
}
