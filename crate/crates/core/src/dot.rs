//! Graphviz export.

use std::fmt::Write as _;

use crate::graph::{ColoredGraph, Parity};
use crate::heights::HeightAssignment;

const PALETTE: [&str; 4] = ["black", "blue", "red", "green"];

/// Colors past the palette are drawn gray and labeled with their number.
pub fn color_name(t: usize) -> Option<&'static str> {
    PALETTE.get(t.wrapping_sub(1)).copied()
}

/// An undirected DOT graph. Bosons are open circles, fermions filled; each
/// height level becomes a `rank=same` group, drawn bottom-up.
pub fn export_dot(g: &ColoredGraph) -> String {
    let mut s = String::from("graph adinkra {\n");
    let levels = g
        .heights()
        .and_then(|h| HeightAssignment::new(g, h.to_vec()).ok())
        .map(|h| h.levels());
    if levels.is_some() {
        s.push_str("  rankdir=BT;\n");
    }
    s.push_str("  node [shape=circle];\n");
    for v in g.vertices() {
        let style = match g.parity_of(v) {
            Some(Parity::Fermion) => ", style=filled, fillcolor=black, fontcolor=white",
            Some(Parity::Boson) => ", style=solid",
            None => "",
        };
        let _ = writeln!(s, "  {v} [label=\"{}\"{style}];", g.label(v));
    }
    for level in levels.iter().flatten() {
        let ids: Vec<String> = level.iter().map(|v| v.to_string()).collect();
        let _ = writeln!(s, "  {{ rank=same; {}; }}", ids.join("; "));
    }
    for e in g.edges() {
        let mut attrs = match color_name(e.color) {
            Some(c) => format!("color={c}"),
            None => format!("color=gray, label=\"{}\"", e.color),
        };
        if e.sign.is_dashed() {
            attrs.push_str(", style=dashed");
        }
        let _ = writeln!(s, "  {} -- {} [{attrs}];", e.u, e.v);
    }
    s.push_str("}\n");
    s
}
