//! Graphviz rendering of Hasse diagrams.

use std::fmt::Write;

use roughdm::order::FiniteLattice;
use roughdm::roughsets::ApproxPair;
use roughdm::set::Universe;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct DotOptions {
    /// Fill the nodes of join-irreducible elements.
    pub mark_join_irreducibles: bool,
}

impl Default for DotOptions {
    fn default() -> Self {
        DotOptions {
            mark_join_irreducibles: true,
        }
    }
}

fn escape(s: &str) -> String {
    s.replace('\\', "\\\\").replace('"', "\\\"")
}

/// Nodes in element order, cover edges from lower to upper, bottom at the
/// bottom of the drawing.
pub fn export_dot<T>(
    lattice: &FiniteLattice<T>,
    label: impl Fn(&T) -> String,
    options: DotOptions,
) -> String {
    let filled = if options.mark_join_irreducibles {
        lattice.join_irreducibles()
    } else {
        Vec::new()
    };
    let mut out = String::from("digraph lattice {\n  rankdir=BT;\n  node [shape=box];\n");
    for (i, e) in lattice.elements().iter().enumerate() {
        let style = if filled.contains(&i) {
            ", style=filled, fillcolor=gray80"
        } else {
            ""
        };
        writeln!(out, "  n{i} [label=\"{}\"{style}];", escape(&label(e))).unwrap();
    }
    for (a, b) in lattice.cover_edges() {
        writeln!(out, "  n{a} -> n{b};").unwrap();
    }
    out.push_str("}\n");
    out
}

/// `({a,b},{a,b,c})`, with `{}` for the empty set.
pub fn pair_label(u: &Universe, p: &ApproxPair) -> String {
    format!("({},{})", u.render(p.lower), u.render(p.upper))
}

pub fn export_dmrs_dot(
    u: &Universe,
    lattice: &FiniteLattice<ApproxPair>,
    options: DotOptions,
) -> String {
    export_dot(lattice, |p| pair_label(u, p), options)
}
