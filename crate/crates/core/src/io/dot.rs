//! Graphviz export of the ideal lattice and the specialization order.

use std::fmt::Write;

use crate::analysis::Analysis;

fn quote(s: &str) -> String {
    format!("\"{}\"", s.replace('\\', "\\\\").replace('"', "\\\""))
}

/// Two digraphs, `ideal_lattice` and `terminal_space`, both drawn bottom-up.
///
/// Strongly irreducible ideals are filled, prime ideals get a double border.
pub fn export_dot(a: &Analysis) -> String {
    let mut out = String::new();
    out.push_str("digraph ideal_lattice {\n  rankdir=BT;\n  node [shape=box];\n");
    for (k, c) in a.classes.iter().enumerate() {
        let mut attrs = vec![format!("label={}", quote(&a.show_ideal(&c.ideal)))];
        if c.strongly_irreducible {
            attrs.push("style=filled".into());
            attrs.push("fillcolor=lightgray".into());
        }
        if c.prime {
            attrs.push("peripheries=2".into());
        }
        let _ = writeln!(out, "  i{k} [{}];", attrs.join(", "));
    }
    for (x, y) in a.lattice.hasse_edges() {
        let _ = writeln!(out, "  i{x} -> i{y};");
    }
    out.push_str("}\n");

    out.push_str("digraph terminal_space {\n  rankdir=BT;\n  node [shape=ellipse];\n");
    for (k, p) in a.space.points().iter().enumerate() {
        let _ = writeln!(out, "  p{k} [label={}];", quote(&a.show_ideal(p)));
    }
    for (x, y) in a.space.specialization_edges() {
        let _ = writeln!(out, "  p{x} -> p{y};");
    }
    out.push_str("}\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::monoid::tests::z_mod;
    use crate::topology::MAX_POINTS;

    fn dot(n: usize) -> String {
        export_dot(&Analysis::new(z_mod(n), MAX_POINTS).unwrap())
    }

    fn count(s: &str, needle: &str) -> usize {
        s.matches(needle).count()
    }

    #[test]
    fn z4_lattice() {
        let d = dot(4);
        let lattice = d.split("digraph terminal_space").next().unwrap();
        assert_eq!(count(lattice, "[label="), 3);
        assert_eq!(count(lattice, " -> "), 2);
        assert!(lattice.contains("i0 [label=\"{0}\", style=filled, fillcolor=lightgray];"));
        assert!(lattice
            .contains("i1 [label=\"{0,2}\", style=filled, fillcolor=lightgray, peripheries=2];"));
    }

    #[test]
    fn trivial_monoid() {
        let d = dot(1);
        let (lattice, space) = d.split_once("digraph terminal_space").unwrap();
        assert_eq!(count(lattice, "[label="), 1);
        assert_eq!(count(space, "[label="), 0);
        assert_eq!(count(space, " -> "), 0);
    }

    #[test]
    fn z6_edges() {
        let d = dot(6);
        let lattice = d.split("digraph terminal_space").next().unwrap();
        assert_eq!(count(lattice, "[label="), 5);
        for e in [
            "i0 -> i1;",
            "i0 -> i2;",
            "i1 -> i3;",
            "i2 -> i3;",
            "i3 -> i4;",
        ] {
            assert!(lattice.contains(e), "{e}");
        }
        assert_eq!(count(lattice, " -> "), 5);
    }
}
