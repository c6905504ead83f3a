//! Hasse diagrams in Graphviz DOT. Highlighted elements are filled gray and
//! the unit is drawn as a square.

use std::fmt::Write;

use twistlab_core::{Algebra, Subset};

fn quote(s: &str) -> String {
    format!("\"{}\"", s.replace('\\', "\\\\").replace('"', "\\\""))
}

/// The covering relation of `a`, bottom to top, with `highlight` in gray.
pub fn hasse(a: &Algebra, title: &str, highlight: Option<&Subset>) -> String {
    let mut out = String::new();
    writeln!(out, "digraph {} {{", quote(title)).unwrap();
    writeln!(out, "  rankdir=BT;").unwrap();
    writeln!(out, "  node [shape=circle, fontsize=10];").unwrap();
    for x in a.elements() {
        let mut attrs = vec![format!("label={}", quote(a.name(x)))];
        if a.unit() == Some(x) {
            attrs.push("shape=square".into());
        }
        if highlight.is_some_and(|h| h.contains(x)) {
            attrs.push("style=filled".into());
            attrs.push("fillcolor=gray".into());
        }
        writeln!(out, "  n{x} [{}];", attrs.join(", ")).unwrap();
    }
    for y in a.elements() {
        for x in a.lower_covers(y) {
            writeln!(out, "  n{x} -> n{y} [arrowhead=none];").unwrap();
        }
    }
    out.push_str("}\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use twistlab_core::fixtures;

    #[test]
    fn chain_has_two_edges_and_one_square() {
        let g3 = fixtures::goedel3();
        let d = hasse(&g3, "G3", Some(&Subset::from_members(3, [1])));
        assert_eq!(d.matches("->").count(), 2);
        assert_eq!(d.matches("shape=square").count(), 1);
        assert!(d.contains("n1 [label=\"a\", style=filled, fillcolor=gray];"));
    }
}
