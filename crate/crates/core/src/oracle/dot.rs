use std::fmt::Write;

use super::graph::MultiGraph;

/// Graphviz text for one graph. Double edges become two parallel `--` lines.
pub fn to_dot(g: &MultiGraph, name: &str) -> String {
    let mut out = String::new();
    writeln!(out, "graph {name} {{").unwrap();
    for v in 0..g.node_count() {
        writeln!(out, "  {v};").unwrap();
    }
    for (u, v, m) in g.pairs() {
        for _ in 0..m {
            writeln!(out, "  {u} -- {v};").unwrap();
        }
    }
    out.push_str("}\n");
    out
}
