//! Run the discharging rules on a wheel and audit the result: charges move
//! but the total stays pinned by Euler's formula.

use bondagelab::discharging::{apply_ledger, apply_rules, audit, initial_charges, Scheme};
use bondagelab::generate;

fn main() {
    let g = generate::wheel(10).unwrap();

    for scheme in [Scheme::Vertex, Scheme::Face, Scheme::Balanced] {
        let st = initial_charges(&g, scheme);
        println!("{}: initial total {}", scheme.as_str(), st.total());
        assert_eq!(st.total(), scheme.expected_total());
    }

    let st = initial_charges(&g, Scheme::Vertex);
    let done = apply_rules(&g, &st).unwrap();
    for t in &done.ledger {
        println!("{} {} -> {} {}", t.rule, t.from, t.to, t.amount);
    }
    let report = audit(&done);
    print!("{}", report.to_text());

    // the ledger alone reproduces the final state
    let replayed = apply_ledger(&st, &done.ledger);
    assert_eq!(replayed, done);
    println!("ledger replay matches");
}
