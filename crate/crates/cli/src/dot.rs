//! DOT text for Hasse diagrams.
//!
//! Nodes appear in declared element order and edges are exactly the cover
//! pairs, oriented lower to upper; `rankdir=BT` draws them bottom-up. Output
//! is byte-stable for a given input.

use orderlab::Poset;

fn quote(name: &str) -> String {
    format!("\"{}\"", name.replace('\\', "\\\\").replace('"', "\\\""))
}

pub fn emit_dot(poset: &Poset) -> String {
    let mut out = String::from("digraph hasse {\n  rankdir=BT;\n");
    for e in poset.elements() {
        out.push_str(&format!("  {};\n", quote(e)));
    }
    for (lo, hi) in poset.covers() {
        out.push_str(&format!("  {} -> {};\n", quote(&lo), quote(&hi)));
    }
    out.push_str("}\n");
    out
}
