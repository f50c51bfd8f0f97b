//! Fixtures shared by unit tests.

use crate::grammar::{BondFunction, BondingGrammar, DerivationTrace, TraceStep};
use crate::hypergraph::{Hypergraph, Multiplicity};
use crate::id::VertexId;
use crate::label::{Alphabet, Label};

/// A directed path of binary edges with the given labels, on `v0..v{n}`.
pub(crate) fn strand(labels: &[&str]) -> Hypergraph {
    let mut h = Hypergraph::new();
    for i in 0..=labels.len() {
        h.add_vertex(format!("v{i}")).unwrap();
    }
    for (i, l) in labels.iter().enumerate() {
        h.add_edge(
            format!("e{i}"),
            Label::new(*l, 2),
            [VertexId::new(format!("v{i}")), VertexId::new(format!("v{}", i + 1))],
        )
        .unwrap();
    }
    h
}

/// Nucleobase grammar: binary nonterminals A, T, C, G over two start strands
/// `GAC` and `CTG`, with `A ⊗ T` and `C ⊗ G` defined.
pub(crate) fn dna_grammar() -> BondingGrammar {
    let n: Alphabet = ["A", "T", "C", "G"].into_iter().map(|s| Label::new(s, 2)).collect();
    let t: Alphabet = [Label::new("A⊗T", 4), Label::new("C⊗G", 4)].into_iter().collect();
    let mut bf = BondFunction::new();
    bf.insert("A", "T", "A⊗T").unwrap();
    bf.insert("C", "G", "C⊗G").unwrap();
    BondingGrammar::new(vec![strand(&["G", "A", "C"]), strand(&["C", "T", "G"])], n, t, bf).unwrap()
}

/// The four-step derivation joining two four-point stars into two vertices
/// with an a-cycle and a b-loop on each vertex.
pub(crate) fn two_cell_trace() -> DerivationTrace {
    DerivationTrace {
        multiplicity: Multiplicity::new(vec![2]),
        steps: vec![
            TraceStep { first: "e0".into(), second: "e6".into(), result: "e8".into() },
            TraceStep { first: "e1".into(), second: "e3".into(), result: "e9".into() },
            TraceStep { first: "e5".into(), second: "e7".into(), result: "e10".into() },
            TraceStep { first: "e4".into(), second: "e2".into(), result: "e11".into() },
        ],
    }
}

/// The n-by-n wraparound grid: `a`-edges eastwards, `b`-edges northwards,
/// both wrapping. All labels terminal for the pseudotorus grammar.
pub(crate) fn torus(n: usize) -> Hypergraph {
    let mut h = Hypergraph::new();
    let vid = |i: usize, j: usize| VertexId::new(format!("v{}", i * n + j));
    for i in 0..n {
        for j in 0..n {
            h.add_vertex(vid(i, j)).unwrap();
        }
    }
    let mut e = 0usize;
    for i in 0..n {
        for j in 0..n {
            h.add_edge(format!("e{e}"), Label::new("a", 2), [vid(i, j), vid(i, (j + 1) % n)])
                .unwrap();
            e += 1;
            h.add_edge(format!("e{e}"), Label::new("b", 2), [vid(i, j), vid((i + 1) % n, j)])
                .unwrap();
            e += 1;
        }
    }
    h
}

/// A star of `k` terminal b-edges pointing out of a central vertex.
pub(crate) fn b_star(k: usize) -> Hypergraph {
    let mut h = Hypergraph::new();
    h.add_vertex("c").unwrap();
    for i in 0..k {
        h.add_vertex(format!("v{i}")).unwrap();
        h.add_edge(
            format!("e{i}"),
            Label::new("b", 2),
            [VertexId::from("c"), VertexId::new(format!("v{i}"))],
        )
        .unwrap();
    }
    h
}

/// A directed cycle of `n` b-edges.
pub(crate) fn b_cycle(n: usize) -> Hypergraph {
    let mut h = Hypergraph::new();
    for i in 0..n {
        h.add_vertex(format!("v{i}")).unwrap();
    }
    for i in 0..n {
        h.add_edge(
            format!("e{i}"),
            Label::new("b", 2),
            [VertexId::new(format!("v{i}")), VertexId::new(format!("v{}", (i + 1) % n))],
        )
        .unwrap();
    }
    h
}
