//! Exact-rational discharging: initial charge assignment under three
//! schemes, redistribution rules R1-R7 for the vertex scheme, a transfer
//! ledger, and an audit of the final state.
//!
//! All arithmetic is over `Rational64`; no floats anywhere. Rules are
//! evaluated simultaneously against the original graph structure and the
//! resulting transfers are purely additive, so replaying the ledger from
//! the initial state reproduces the final state bit-exactly.

use crate::error::DischargeError;
use crate::graph::PlaneGraph;
use num_rational::Rational64;
use num_traits::Zero;
use std::collections::BTreeSet;
use std::fmt;

pub type Charge = Rational64;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Scheme {
    /// d(v) - 6 per vertex, 2 l(f) - 6 per face; total -12
    Vertex,
    /// 2 d(v) - 6 per vertex, l(f) - 6 per face; total -12
    Face,
    /// d(v) - 4 per vertex, l(f) - 4 per face; total -8
    Balanced,
}

impl Scheme {
    pub fn as_str(self) -> &'static str {
        match self {
            Scheme::Vertex => "vertex",
            Scheme::Face => "face",
            Scheme::Balanced => "balanced",
        }
    }

    /// Euler's formula pins the scheme total independently of the graph.
    pub fn expected_total(self) -> Charge {
        match self {
            Scheme::Vertex | Scheme::Face => Charge::from_integer(-12),
            Scheme::Balanced => Charge::from_integer(-8),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum Rule {
    R1,
    R2,
    R3,
    R4,
    R5,
    R6,
    R7,
}

impl fmt::Display for Rule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "R{}", *self as usize + 1)
    }
}

pub const ALL_RULES: [Rule; 7] = [
    Rule::R1,
    Rule::R2,
    Rule::R3,
    Rule::R4,
    Rule::R5,
    Rule::R6,
    Rule::R7,
];

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum Element {
    Vertex(usize),
    Face(usize),
}

impl fmt::Display for Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Element::Vertex(v) => write!(f, "v{v}"),
            Element::Face(x) => write!(f, "f{x}"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Transfer {
    pub rule: Rule,
    pub from: Element,
    pub to: Element,
    pub amount: Charge,
}

/// Exact charges per vertex and face, plus the transfers that produced them
/// (empty for an initial state).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ChargeState {
    pub scheme: Scheme,
    pub vertex_charge: Vec<Charge>,
    pub face_charge: Vec<Charge>,
    pub ledger: Vec<Transfer>,
}

impl ChargeState {
    pub fn total(&self) -> Charge {
        self.vertex_charge.iter().sum::<Charge>() + self.face_charge.iter().sum::<Charge>()
    }

    pub fn charge_of(&self, e: Element) -> Charge {
        match e {
            Element::Vertex(v) => self.vertex_charge[v],
            Element::Face(f) => self.face_charge[f],
        }
    }
}

/// Assign initial charges under the chosen scheme. The totals -12 / -12 / -8
/// are forced by Euler's formula.
pub fn initial_charges(g: &PlaneGraph, scheme: Scheme) -> ChargeState {
    let (vc, fc): (Vec<Charge>, Vec<Charge>) = match scheme {
        Scheme::Vertex => (
            (0..g.n()).map(|v| Charge::from_integer(g.degree(v) as i64 - 6)).collect(),
            g.faces().iter().map(|f| Charge::from_integer(2 * f.degree() as i64 - 6)).collect(),
        ),
        Scheme::Face => (
            (0..g.n()).map(|v| Charge::from_integer(2 * g.degree(v) as i64 - 6)).collect(),
            g.faces().iter().map(|f| Charge::from_integer(f.degree() as i64 - 6)).collect(),
        ),
        Scheme::Balanced => (
            (0..g.n()).map(|v| Charge::from_integer(g.degree(v) as i64 - 4)).collect(),
            g.faces().iter().map(|f| Charge::from_integer(f.degree() as i64 - 4)).collect(),
        ),
    };
    ChargeState {
        scheme,
        vertex_charge: vc,
        face_charge: fc,
        ledger: Vec::new(),
    }
}

fn edge_on_two_triangles(g: &PlaneGraph, u: usize, v: usize) -> bool {
    matches!(g.edge_face_degrees(u, v), Ok((3, 3)))
}

/// If edge (u, v) lies on exactly one 3-face and one 4+-face, the id of the
/// 4+-face.
fn four_plus_face_on_edge(g: &PlaneGraph, u: usize, v: usize) -> Option<usize> {
    let (f1, f2) = g.edge_faces(u, v).ok()?;
    let (d1, d2) = (g.face_degree(f1).unwrap(), g.face_degree(f2).unwrap());
    match (d1 == 3, d2 == 3) {
        (true, false) => Some(f2),
        (false, true) => Some(f1),
        _ => None,
    }
}

/// Shared sub-clause of R3's cases (a) and (b): at least three edges from u
/// to degree-3 neighbors lie on two 3-faces.
fn r3_beta(g: &PlaneGraph, u: usize) -> bool {
    g.neighbors(u)
        .iter()
        .filter(|&&w| g.degree(w) == 3 && edge_on_two_triangles(g, u, w))
        .count()
        >= 3
}

/// R3 case (a) at a 9-vertex u relative to the petitioning 3-vertex v: one
/// 4+-corner, eight 3-corners, the other endpoint of the 4+-corner has
/// degree >= 8, and u has at least three 3-3-edges to 3-vertices.
fn r3_case_a(g: &PlaneGraph, u: usize, v: usize) -> bool {
    let cd = g.corner_face_degrees(u);
    if cd.iter().filter(|&&d| d >= 4).count() != 1 || cd.iter().filter(|&&d| d == 3).count() != 8 {
        return false;
    }
    let rot = g.rotation(u);
    let d = rot.len();
    let j = rot.iter().position(|&w| w == v).unwrap();
    // the 4+-face on edge (u, v) occupies corner j-1 or corner j; the
    // partner w is the corner's other endpoint
    let w = if cd[(j + d - 1) % d] >= 4 {
        rot[(j + d - 1) % d]
    } else if cd[j] >= 4 {
        rot[(j + 1) % d]
    } else {
        return false;
    };
    g.degree(w) >= 8 && r3_beta(g, u)
}

/// R3 case (b) at a 9-vertex u: two 4+-corners, seven 3-corners, some
/// neighbor w shares both 4+-faces (so edge (u, w) is a 4+/4+ edge) with
/// degree >= 7, and the same three-3-3-edges condition.
fn r3_case_b(g: &PlaneGraph, u: usize) -> bool {
    let cd = g.corner_face_degrees(u);
    if cd.iter().filter(|&&d| d >= 4).count() != 2 || cd.iter().filter(|&&d| d == 3).count() != 7 {
        return false;
    }
    g.neighbors(u).iter().any(|&w| {
        let Ok((d1, d2)) = g.edge_face_degrees(u, w) else {
            return false;
        };
        d1 >= 4 && d2 >= 4 && g.degree(w) >= 7
    }) && r3_beta(g, u)
}

fn collect_transfers(g: &PlaneGraph) -> Vec<Transfer> {
    let mut ledger = Vec::new();
    let one = Charge::from_integer(1);
    let half = Charge::new(1, 2);

    // R1: a 3-vertex takes 1 from each 9+-neighbor across a 3-3 edge
    for v in 0..g.n() {
        if g.degree(v) != 3 {
            continue;
        }
        for &u in g.neighbors(v) {
            if g.degree(u) >= 9 && edge_on_two_triangles(g, v, u) {
                ledger.push(Transfer {
                    rule: Rule::R1,
                    from: Element::Vertex(u),
                    to: Element::Vertex(v),
                    amount: one,
                });
            }
        }
    }

    // R2: a 3-vertex with a single incident face takes 3 from it; otherwise
    // 1 per 4-face corner and 2 per 5+-face corner
    for v in 0..g.n() {
        if g.degree(v) != 3 {
            continue;
        }
        let cf = g.corner_faces(v);
        let distinct: BTreeSet<usize> = cf.iter().copied().collect();
        if distinct.len() == 1 {
            ledger.push(Transfer {
                rule: Rule::R2,
                from: Element::Face(cf[0]),
                to: Element::Vertex(v),
                amount: Charge::from_integer(3),
            });
            continue;
        }
        for &f in &cf {
            let l = g.face_degree(f).unwrap();
            if l >= 4 {
                ledger.push(Transfer {
                    rule: Rule::R2,
                    from: Element::Face(f),
                    to: Element::Vertex(v),
                    amount: if l == 4 { one } else { Charge::from_integer(2) },
                });
            }
        }
    }

    // R3: a 3-vertex takes 1/2 across each 3/4+ edge to an 8+-neighbor u;
    // the payer is u except when d(u) = 9 and u falls into case (a) or (b),
    // in which case the 4+-face on the edge pays instead (never both)
    for v in 0..g.n() {
        if g.degree(v) != 3 {
            continue;
        }
        for &u in g.neighbors(v) {
            if g.degree(u) < 8 {
                continue;
            }
            let Some(f4) = four_plus_face_on_edge(g, u, v) else {
                continue;
            };
            let from_face = g.degree(u) == 9 && (r3_case_a(g, u, v) || r3_case_b(g, u));
            ledger.push(Transfer {
                rule: Rule::R3,
                from: if from_face { Element::Face(f4) } else { Element::Vertex(u) },
                to: Element::Vertex(v),
                amount: half,
            });
        }
    }

    // R4: a 4-vertex with at most one 4+-corner takes 1 from a 4-face or 2
    // from a 5+-face there, plus 1/2 from each 8+-neighbor across a 3-3 edge
    // R5: a 4-vertex with k >= 2 four-plus corners takes 2/k from each
    for v in 0..g.n() {
        if g.degree(v) != 4 {
            continue;
        }
        let cf = g.corner_faces(v);
        let cd = g.corner_face_degrees(v);
        let four_plus: Vec<usize> = (0..cd.len()).filter(|&i| cd[i] >= 4).collect();
        if four_plus.len() <= 1 {
            if let Some(&i) = four_plus.first() {
                ledger.push(Transfer {
                    rule: Rule::R4,
                    from: Element::Face(cf[i]),
                    to: Element::Vertex(v),
                    amount: if cd[i] == 4 { one } else { Charge::from_integer(2) },
                });
            }
            for &u in g.neighbors(v) {
                if g.degree(u) >= 8 && edge_on_two_triangles(g, v, u) {
                    ledger.push(Transfer {
                        rule: Rule::R4,
                        from: Element::Vertex(u),
                        to: Element::Vertex(v),
                        amount: half,
                    });
                }
            }
        } else {
            let share = Charge::new(2, four_plus.len() as i64);
            for &i in &four_plus {
                ledger.push(Transfer {
                    rule: Rule::R5,
                    from: Element::Face(cf[i]),
                    to: Element::Vertex(v),
                    amount: share,
                });
            }
        }
    }

    // R6: a 5-vertex with all five corners triangular takes 1/5 from each
    // 7+-neighbor
    // R7: a 5-vertex with k >= 1 four-plus corners takes 1/k from each
    for v in 0..g.n() {
        if g.degree(v) != 5 {
            continue;
        }
        let cd = g.corner_face_degrees(v);
        let four_plus: Vec<usize> = (0..cd.len()).filter(|&i| cd[i] >= 4).collect();
        if four_plus.is_empty() {
            for &u in g.neighbors(v) {
                if g.degree(u) >= 7 {
                    ledger.push(Transfer {
                        rule: Rule::R6,
                        from: Element::Vertex(u),
                        to: Element::Vertex(v),
                        amount: Charge::new(1, 5),
                    });
                }
            }
        } else {
            let cf = g.corner_faces(v);
            let share = Charge::new(1, four_plus.len() as i64);
            for &i in &four_plus {
                ledger.push(Transfer {
                    rule: Rule::R7,
                    from: Element::Face(cf[i]),
                    to: Element::Vertex(v),
                    amount: share,
                });
            }
        }
    }

    ledger
}

/// Replay a transfer list against a charge state, returning the new state
/// with the transfers appended to its ledger.
pub fn apply_ledger(st: &ChargeState, ledger: &[Transfer]) -> ChargeState {
    let mut out = st.clone();
    for t in ledger {
        match t.from {
            Element::Vertex(v) => out.vertex_charge[v] -= t.amount,
            Element::Face(f) => out.face_charge[f] -= t.amount,
        }
        match t.to {
            Element::Vertex(v) => out.vertex_charge[v] += t.amount,
            Element::Face(f) => out.face_charge[f] += t.amount,
        }
        out.ledger.push(t.clone());
    }
    out
}

/// Redistribute charges by rules R1-R7. The rules are written for the
/// vertex scheme; any other scheme is rejected. All rule predicates are
/// evaluated against the original graph, so evaluation order is irrelevant
/// and the result is a pure function of the graph.
pub fn apply_rules(g: &PlaneGraph, st: &ChargeState) -> Result<ChargeState, DischargeError> {
    if st.scheme != Scheme::Vertex {
        return Err(DischargeError::SchemeMismatch(
            "rules R1-R7 are defined for the vertex charging scheme only",
        ));
    }
    let ledger = collect_transfers(g);
    Ok(apply_ledger(st, &ledger))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AuditReport {
    /// Elements with negative charge, vertices first, each by index.
    pub negatives: Vec<(Element, Charge)>,
    pub total: Charge,
    /// Sum of transfer amounts per rule, for rules that fired.
    pub per_rule: Vec<(Rule, Charge)>,
    /// Total matches the scheme's Euler constant exactly.
    pub conserved: bool,
    pub transfer_count: usize,
}

impl AuditReport {
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for (e, c) in &self.negatives {
            out.push_str(&format!("neg {e} {}/{}\n", c.numer(), c.denom()));
        }
        out.push_str(&format!("total {}/{}\n", self.total.numer(), self.total.denom()));
        out.push_str(&format!("ledger {} transfers\n", self.transfer_count));
        out
    }
}

/// Summarize a charge state: negative elements, the exact total, per-rule
/// sums from the ledger, and whether the total matches the scheme constant.
pub fn audit(st: &ChargeState) -> AuditReport {
    let mut negatives = Vec::new();
    for (v, &c) in st.vertex_charge.iter().enumerate() {
        if c < Charge::zero() {
            negatives.push((Element::Vertex(v), c));
        }
    }
    for (f, &c) in st.face_charge.iter().enumerate() {
        if c < Charge::zero() {
            negatives.push((Element::Face(f), c));
        }
    }
    let total = st.total();
    let per_rule = ALL_RULES
        .iter()
        .filter_map(|&r| {
            let sum: Charge = st
                .ledger
                .iter()
                .filter(|t| t.rule == r)
                .map(|t| t.amount)
                .sum();
            (!sum.is_zero()).then_some((r, sum))
        })
        .collect();
    AuditReport {
        negatives,
        total,
        per_rule,
        conserved: total == st.scheme.expected_total(),
        transfer_count: st.ledger.len(),
    }
}

/// One-call convenience: initial vertex-scheme charges, rules, audit.
pub fn discharge(g: &PlaneGraph) -> (ChargeState, AuditReport) {
    let st = initial_charges(g, Scheme::Vertex);
    let after = apply_rules(g, &st).expect("vertex scheme always accepted");
    let report = audit(&after);
    (after, report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generate;

    #[test]
    fn initial_totals_match_euler_constants() {
        for g in [
            generate::k4(),
            generate::wheel(10).unwrap(),
            generate::prism(6).unwrap(),
            generate::stacked_triangulation(14, 3).unwrap(),
        ] {
            for scheme in [Scheme::Vertex, Scheme::Face, Scheme::Balanced] {
                let st = initial_charges(&g, scheme);
                assert_eq!(st.total(), scheme.expected_total(), "{}", scheme.as_str());
            }
        }
    }

    #[test]
    fn rules_reject_non_vertex_schemes() {
        let g = generate::k4();
        let st = initial_charges(&g, Scheme::Face);
        assert!(apply_rules(&g, &st).is_err());
        let st = initial_charges(&g, Scheme::Balanced);
        assert!(apply_rules(&g, &st).is_err());
    }

    #[test]
    fn icosahedron_keeps_twelve_negative_vertices() {
        // all degrees 5, all faces triangular, no 7+-neighbors: no rule fires
        let g = generate::icosahedron();
        let (after, report) = discharge(&g);
        assert!(after.ledger.is_empty());
        assert_eq!(report.negatives.len(), 12);
        assert!(report
            .negatives
            .iter()
            .all(|&(e, c)| matches!(e, Element::Vertex(_)) && c == Charge::from_integer(-1)));
        assert!(report.conserved);
        assert!(report.to_text().contains("total -12/1"));
    }

    #[test]
    fn wheel_w10_discharges_hub_and_outer_face() {
        // hub pays 1 to each rim vertex by R1; the outer 10-face pays 2 to
        // each rim vertex by R2; rim vertices end at 0
        let g = generate::wheel(10).unwrap();
        let (after, report) = discharge(&g);
        assert_eq!(after.vertex_charge[0], Charge::from_integer(-6));
        for v in 1..=10 {
            assert_eq!(after.vertex_charge[v], Charge::zero(), "rim vertex {v}");
        }
        let outer = g.faces_at(1, 10, 10).unwrap()[0];
        assert_eq!(after.face_charge[outer], Charge::from_integer(-6));
        assert!(report.conserved);
        assert_eq!(
            report.per_rule,
            vec![
                (Rule::R1, Charge::from_integer(10)),
                (Rule::R2, Charge::from_integer(20)),
            ]
        );
    }

    #[test]
    fn cube_vertices_collect_from_quad_faces() {
        let g = generate::prism(4).unwrap();
        let (after, report) = discharge(&g);
        for v in 0..8 {
            assert_eq!(after.vertex_charge[v], Charge::zero());
        }
        for f in 0..6 {
            assert_eq!(after.face_charge[f], Charge::from_integer(-2));
        }
        assert!(report.conserved);
        assert_eq!(report.transfer_count, 24);
    }

    #[test]
    fn hexagonal_prism_charges() {
        // each vertex: two 4-face corners (+1 each) and one 6-face corner (+2)
        let g = generate::prism(6).unwrap();
        let (after, report) = discharge(&g);
        for v in 0..12 {
            assert_eq!(after.vertex_charge[v], Charge::from_integer(1));
        }
        assert!(report.conserved);
        assert_eq!(report.total, Charge::from_integer(-12));
    }

    #[test]
    fn ledger_replay_is_bit_exact() {
        for g in [
            generate::wheel(10).unwrap(),
            generate::prism(5).unwrap(),
            generate::stacked_triangulation(18, 9).unwrap(),
        ] {
            let initial = initial_charges(&g, Scheme::Vertex);
            let after = apply_rules(&g, &initial).unwrap();
            let replayed = apply_ledger(&initial, &after.ledger);
            assert_eq!(replayed, after);
        }
    }

    #[test]
    fn r3_charges_exactly_one_payer_per_pair() {
        for g in [
            generate::wheel(9).unwrap(),
            generate::stacked_triangulation(25, 4).unwrap(),
        ] {
            let (after, _) = discharge(&g);
            let mut seen: Vec<(Element, Element)> = Vec::new();
            for t in after.ledger.iter().filter(|t| t.rule == Rule::R3) {
                assert!(!seen.contains(&(t.from, t.to)), "duplicate R3 transfer");
                seen.push((t.from, t.to));
            }
        }
    }
}
