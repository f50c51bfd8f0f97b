//! DOT rendering of hypergraphs, following the usual drawing convention:
//! binary hyperedges are labeled arrows from their first attachment vertex to
//! their second; every other hyperedge is a box node with numbered tentacle
//! lines. Output order follows identifier order, so renders are
//! deterministic. Presentation only; there is no DOT import.

use bonding::Hypergraph;
use std::fmt::Write as _;

fn escape(s: &str) -> String {
    s.replace('\\', "\\\\").replace('"', "\\\"")
}

pub fn to_dot(h: &Hypergraph) -> String {
    let mut out = String::from("digraph hypergraph {\n");
    for v in h.vertices() {
        let _ = writeln!(out, "  \"v:{}\" [shape=point, xlabel=\"{}\"];", escape(v.as_str()), escape(v.as_str()));
    }
    for (id, e) in h.edges() {
        if e.label.arity == 2 {
            let _ = writeln!(
                out,
                "  \"v:{}\" -> \"v:{}\" [label=\"{}\"];",
                escape(e.att[0].as_str()),
                escape(e.att[1].as_str()),
                escape(&e.label.name)
            );
        } else {
            let _ = writeln!(
                out,
                "  \"e:{}\" [shape=box, label=\"{}\"];",
                escape(id.as_str()),
                escape(&e.label.name)
            );
            for (i, v) in e.att.iter().enumerate() {
                let _ = writeln!(
                    out,
                    "  \"e:{}\" -> \"v:{}\" [dir=none, label=\"{}\"];",
                    escape(id.as_str()),
                    escape(v.as_str()),
                    i + 1
                );
            }
        }
    }
    out.push_str("}\n");
    out
}
