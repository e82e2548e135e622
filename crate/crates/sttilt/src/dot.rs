//! Graphviz export of an exchange quiver.

use std::fmt::Write;

use sttilt_core::group::StableFilter;
use sttilt_core::mutation::ExchangeQuiver;

use crate::report::vertex_label;

const PALETTE: [&str; 8] = [
    "forestgreen",
    "orange",
    "brown",
    "purple",
    "red",
    "blue",
    "magenta",
    "cyan4",
];

fn escape(s: &str) -> String {
    s.replace('\\', "\\\\").replace('"', "\\\"")
}

/// Stable vertices get a color, cycling through a fixed palette in vertex
/// order.
pub fn to_dot(q: &ExchangeQuiver, stable: &StableFilter) -> String {
    let mut out = String::from(
        "digraph exchange {\n  rankdir=TB;\n  node [shape=box, fontname=\"Helvetica\"];\n",
    );
    let mut k = 0;
    for v in 0..q.len() {
        let label = escape(&vertex_label(q, v));
        if stable.stable[v] {
            let color = PALETTE[k % PALETTE.len()];
            k += 1;
            writeln!(
                out,
                "  v{v} [label=\"{label}\", color=\"{color}\", penwidth=2];"
            )
            .unwrap();
        } else {
            writeln!(out, "  v{v} [label=\"{label}\"];").unwrap();
        }
    }
    for a in &q.arrows {
        writeln!(out, "  v{} -> v{};", a.from, a.to).unwrap();
    }
    out.push_str("}\n");
    out
}
