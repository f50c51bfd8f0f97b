//! JSON formats for hypergraphs, grammars, sticker systems, derivation
//! traces, and membership certificates.
//!
//! Writers emit deterministic bytes: labels sorted by name, vertices and
//! edges in identifier order, two-space indentation. Loaders route through
//! the validating constructors, so the first invariant violation surfaces
//! with its machine-readable code.
//!
//! Hypergraph:
//! ```json
//! {
//!   "labels": [{"name": "A", "arity": 1}],
//!   "vertices": ["v0"],
//!   "edges": [{"id": "e0", "label": "A", "att": ["v0"]}]
//! }
//! ```
//!
//! Bonding grammar: `{"nonterminals": [...], "terminals": [...],
//! "bond": [{"left", "right", "result"}], "starts": [hypergraph...]}`.
//! Fusion grammar: the same with `"fusion_labels":
//! [{"name", "complement", "arity"}]` replacing `"bond"`.
//! Sticker system: `{"alphabet": ["a"], "axioms": [domino],
//! "rules": [[domino|null, domino|null]]}` with domino
//! `{"upper": "ab", "lower": "a", "offset": 0}`.

use crate::error::{Error, Result};
use crate::fusion::{FusionGrammar, FusionStep, FusionTrace};
use crate::grammar::{BondFunction, BondingGrammar, DerivationTrace, TraceStep};
use crate::hypergraph::{Hypergraph, Multiplicity};
use crate::id::{EdgeId, VertexId};
use crate::label::{Alphabet, Label};
use crate::sticker::{Domino, Rule, StickerSystem};
use serde::{Deserialize, Serialize};

#[derive(Serialize, Deserialize)]
struct LabelWire {
    name: String,
    arity: usize,
}

#[derive(Serialize, Deserialize)]
struct EdgeWire {
    id: String,
    label: String,
    att: Vec<String>,
}

#[derive(Serialize, Deserialize)]
struct HypergraphWire {
    labels: Vec<LabelWire>,
    vertices: Vec<String>,
    edges: Vec<EdgeWire>,
}

fn hypergraph_wire(h: &Hypergraph) -> HypergraphWire {
    HypergraphWire {
        labels: h
            .used_labels()
            .iter()
            .map(|l| LabelWire {
                name: l.name,
                arity: l.arity,
            })
            .collect(),
        vertices: h.vertices().map(|v| v.to_string()).collect(),
        edges: h
            .edges()
            .map(|(id, e)| EdgeWire {
                id: id.to_string(),
                label: e.label.name.clone(),
                att: e.att.iter().map(|v| v.to_string()).collect(),
            })
            .collect(),
    }
}

fn hypergraph_from_wire(w: &HypergraphWire) -> Result<Hypergraph> {
    let mut alphabet = Alphabet::new();
    for l in &w.labels {
        alphabet.insert(Label::new(l.name.clone(), l.arity))?;
    }
    let mut h = Hypergraph::new();
    for v in &w.vertices {
        h.add_vertex(v.clone())?;
    }
    for e in &w.edges {
        let label = alphabet
            .get(&e.label)
            .ok_or_else(|| Error::UnknownLabel(e.label.clone()))?;
        h.add_edge(e.id.clone(), label, e.att.iter().map(|v| VertexId::from(v.as_str())))?;
    }
    Ok(h)
}

pub fn hypergraph_to_string(h: &Hypergraph) -> String {
    serde_json::to_string_pretty(&hypergraph_wire(h)).expect("serializable") + "\n"
}

pub fn hypergraph_from_str(s: &str) -> Result<Hypergraph> {
    hypergraph_from_wire(&serde_json::from_str(s)?)
}

#[derive(Serialize, Deserialize)]
struct BondWire {
    left: String,
    right: String,
    result: String,
}

#[derive(Serialize, Deserialize)]
struct GrammarWire {
    nonterminals: Vec<LabelWire>,
    terminals: Vec<LabelWire>,
    bond: Vec<BondWire>,
    starts: Vec<HypergraphWire>,
}

fn alphabet_wire(a: &Alphabet) -> Vec<LabelWire> {
    a.iter()
        .map(|l| LabelWire {
            name: l.name,
            arity: l.arity,
        })
        .collect()
}

fn alphabet_from_wire(labels: &[LabelWire]) -> Result<Alphabet> {
    let mut a = Alphabet::new();
    for l in labels {
        if a.contains(&l.name) {
            return Err(Error::LabelArityClash {
                name: l.name.clone(),
                old: a.arity(&l.name).expect("present"),
                new: l.arity,
            });
        }
        a.insert(Label::new(l.name.clone(), l.arity))?;
    }
    Ok(a)
}

pub fn grammar_to_string(g: &BondingGrammar) -> String {
    let wire = GrammarWire {
        nonterminals: alphabet_wire(g.nonterminals()),
        terminals: alphabet_wire(g.terminals()),
        bond: g
            .bond_function()
            .pairs()
            .map(|(l, r, t)| BondWire {
                left: l.to_owned(),
                right: r.to_owned(),
                result: t.to_owned(),
            })
            .collect(),
        starts: g.starts().iter().map(hypergraph_wire).collect(),
    };
    serde_json::to_string_pretty(&wire).expect("serializable") + "\n"
}

pub fn grammar_from_str(s: &str) -> Result<BondingGrammar> {
    let wire: GrammarWire = serde_json::from_str(s)?;
    let nonterminals = alphabet_from_wire(&wire.nonterminals)?;
    let terminals = alphabet_from_wire(&wire.terminals)?;
    let mut bond = BondFunction::new();
    for b in &wire.bond {
        bond.insert(&b.left, &b.right, &b.result)?;
    }
    let starts = wire
        .starts
        .iter()
        .map(hypergraph_from_wire)
        .collect::<Result<Vec<_>>>()?;
    BondingGrammar::new(starts, nonterminals, terminals, bond)
}

#[derive(Serialize, Deserialize)]
struct FusionLabelWire {
    name: String,
    complement: String,
    arity: usize,
}

#[derive(Serialize, Deserialize)]
struct FusionGrammarWire {
    terminals: Vec<LabelWire>,
    fusion_labels: Vec<FusionLabelWire>,
    starts: Vec<HypergraphWire>,
}

pub fn fusion_grammar_to_string(g: &FusionGrammar) -> String {
    let wire = FusionGrammarWire {
        terminals: alphabet_wire(g.terminals()),
        fusion_labels: g
            .pairs()
            .map(|(name, complement)| FusionLabelWire {
                name: name.to_owned(),
                complement: complement.to_owned(),
                arity: g.fusion_labels().arity(name).expect("declared"),
            })
            .collect(),
        starts: g.starts().iter().map(hypergraph_wire).collect(),
    };
    serde_json::to_string_pretty(&wire).expect("serializable") + "\n"
}

pub fn fusion_grammar_from_str(s: &str) -> Result<FusionGrammar> {
    let wire: FusionGrammarWire = serde_json::from_str(s)?;
    let terminals = alphabet_from_wire(&wire.terminals)?;
    let pairs = wire
        .fusion_labels
        .iter()
        .map(|f| {
            (
                Label::new(f.name.clone(), f.arity),
                Label::new(f.complement.clone(), f.arity),
            )
        })
        .collect();
    let starts = wire
        .starts
        .iter()
        .map(hypergraph_from_wire)
        .collect::<Result<Vec<_>>>()?;
    FusionGrammar::new(starts, terminals, pairs)
}

#[derive(Serialize, Deserialize)]
struct DominoWire {
    upper: String,
    lower: String,
    offset: i64,
}

#[derive(Serialize, Deserialize)]
struct StickerWire {
    alphabet: Vec<char>,
    axioms: Vec<DominoWire>,
    rules: Vec<(Option<DominoWire>, Option<DominoWire>)>,
}

fn domino_wire(d: &Domino) -> DominoWire {
    DominoWire {
        upper: d.upper_string(),
        lower: d.lower_string(),
        offset: d.offset(),
    }
}

fn domino_from_wire(w: &DominoWire) -> Result<Domino> {
    Domino::new(&w.upper, &w.lower, w.offset)
}

pub fn sticker_to_string(s: &StickerSystem) -> String {
    let wire = StickerWire {
        alphabet: s.alphabet().collect(),
        axioms: s.axioms().iter().map(domino_wire).collect(),
        rules: s
            .rules()
            .iter()
            .map(|r| {
                (
                    r.left.as_ref().map(domino_wire),
                    r.right.as_ref().map(domino_wire),
                )
            })
            .collect(),
    };
    serde_json::to_string_pretty(&wire).expect("serializable") + "\n"
}

pub fn sticker_from_str(text: &str) -> Result<StickerSystem> {
    let wire: StickerWire = serde_json::from_str(text)?;
    let axioms = wire
        .axioms
        .iter()
        .map(domino_from_wire)
        .collect::<Result<Vec<_>>>()?;
    let rules = wire
        .rules
        .iter()
        .map(|(l, r)| {
            Ok(Rule {
                left: l.as_ref().map(domino_from_wire).transpose()?,
                right: r.as_ref().map(domino_from_wire).transpose()?,
            })
        })
        .collect::<Result<Vec<_>>>()?;
    StickerSystem::new(wire.alphabet, axioms, rules)
}

#[derive(Serialize, Deserialize)]
struct TraceStepWire {
    first: String,
    second: String,
    result: String,
}

#[derive(Serialize, Deserialize)]
struct TraceWire {
    m: Vec<usize>,
    steps: Vec<TraceStepWire>,
}

pub fn trace_to_string(t: &DerivationTrace) -> String {
    let wire = TraceWire {
        m: t.multiplicity.0.clone(),
        steps: t
            .steps
            .iter()
            .map(|s| TraceStepWire {
                first: s.first.to_string(),
                second: s.second.to_string(),
                result: s.result.to_string(),
            })
            .collect(),
    };
    serde_json::to_string_pretty(&wire).expect("serializable") + "\n"
}

pub fn trace_from_str(s: &str) -> Result<DerivationTrace> {
    let wire: TraceWire = serde_json::from_str(s)?;
    Ok(DerivationTrace {
        multiplicity: Multiplicity::new(wire.m),
        steps: wire
            .steps
            .iter()
            .map(|s| TraceStep {
                first: EdgeId::from(s.first.as_str()),
                second: EdgeId::from(s.second.as_str()),
                result: EdgeId::from(s.result.as_str()),
            })
            .collect(),
    })
}

#[derive(Serialize, Deserialize)]
struct FusionStepWire {
    edge: String,
    complement: String,
}

#[derive(Serialize, Deserialize)]
struct FusionTraceWire {
    m: Vec<usize>,
    steps: Vec<FusionStepWire>,
}

pub fn fusion_trace_to_string(t: &FusionTrace) -> String {
    let wire = FusionTraceWire {
        m: t.multiplicity.0.clone(),
        steps: t
            .steps
            .iter()
            .map(|s| FusionStepWire {
                edge: s.edge.to_string(),
                complement: s.complement.to_string(),
            })
            .collect(),
    };
    serde_json::to_string_pretty(&wire).expect("serializable") + "\n"
}

pub fn fusion_trace_from_str(s: &str) -> Result<FusionTrace> {
    let wire: FusionTraceWire = serde_json::from_str(s)?;
    Ok(FusionTrace {
        multiplicity: Multiplicity::new(wire.m),
        steps: wire
            .steps
            .iter()
            .map(|s| FusionStep {
                edge: EdgeId::from(s.edge.as_str()),
                complement: EdgeId::from(s.complement.as_str()),
            })
            .collect(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::builtins::pseudotori;
    use crate::testutil::{strand, two_cell_trace};

    #[test]
    fn hypergraph_roundtrip_preserves_identifiers() {
        let h = strand(&["G", "A", "C"]);
        let text = hypergraph_to_string(&h);
        let back = hypergraph_from_str(&text).unwrap();
        assert_eq!(h, back);
        assert_eq!(text, hypergraph_to_string(&back));
    }

    #[test]
    fn hypergraph_loader_reports_violations() {
        let bad = r#"{"labels":[{"name":"a","arity":2}],"vertices":["v0"],"edges":[{"id":"e0","label":"a","att":["v0"]}]}"#;
        assert_eq!(hypergraph_from_str(bad).unwrap_err().code(), "attachment_length");
        let bad = r#"{"labels":[],"vertices":["v0","v0"],"edges":[]}"#;
        assert_eq!(hypergraph_from_str(bad).unwrap_err().code(), "duplicate_vertex");
        let bad = r#"{"labels":[],"vertices":["v0"],"edges":[{"id":"e0","label":"a","att":[]}]}"#;
        assert_eq!(hypergraph_from_str(bad).unwrap_err().code(), "unknown_label");
    }

    #[test]
    fn grammar_roundtrip() {
        let g = pseudotori();
        let text = grammar_to_string(&g);
        let back = grammar_from_str(&text).unwrap();
        assert_eq!(g, back);
    }

    #[test]
    fn grammar_loader_rejects_non_injective_bond() {
        let text = r#"{
            "nonterminals": [{"name":"A","arity":1},{"name":"C","arity":1}],
            "terminals": [{"name":"a","arity":2}],
            "bond": [
                {"left":"A","right":"C","result":"a"},
                {"left":"C","right":"A","result":"a"}
            ],
            "starts": []
        }"#;
        assert_eq!(grammar_from_str(text).unwrap_err().code(), "bond_not_injective");
    }

    #[test]
    fn sticker_roundtrip() {
        let text = r#"{
            "alphabet": ["a", "b", "c", "d"],
            "axioms": [{"upper": "a", "lower": "ab", "offset": 0}],
            "rules": [
                [null, {"upper": "bc", "lower": "cb", "offset": 1}],
                [null, {"upper": "bd", "lower": "", "offset": 0}]
            ]
        }"#;
        let s = sticker_from_str(text).unwrap();
        assert_eq!(s.axioms().len(), 1);
        assert_eq!(s.rules().len(), 2);
        assert!(s.is_regular());
        let back = sticker_from_str(&sticker_to_string(&s)).unwrap();
        assert_eq!(s, back);
    }

    #[test]
    fn trace_roundtrip() {
        let t = two_cell_trace();
        let back = trace_from_str(&trace_to_string(&t)).unwrap();
        assert_eq!(t, back);
    }
}
