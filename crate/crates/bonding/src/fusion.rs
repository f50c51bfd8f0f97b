//! Minimal fusion grammars, kept for comparison with bonding.
//!
//! Fusion removes two complementary-labeled hyperedges and identifies their
//! attachment vertices positionwise, so the participating hyperedges vanish
//! and the vertex count can shrink. Only derivation replay is provided; there
//! is no fusion membership decider.

use crate::error::{Error, Result};
use crate::hypergraph::{combine, Hypergraph, Multiplicity};
use crate::id::EdgeId;
use crate::label::{Alphabet, Label};

/// A fusion grammar: connected starts over terminals, fusion labels, and
/// their complements (same arity, one per fusion label).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FusionGrammar {
    starts: Vec<Hypergraph>,
    terminals: Alphabet,
    fusion: Alphabet,
    complements: Alphabet,
    /// fusion label name -> complement label name
    pairing: Vec<(String, String)>,
}

impl FusionGrammar {
    pub fn new(
        starts: Vec<Hypergraph>,
        terminals: Alphabet,
        pairs: Vec<(Label, Label)>,
    ) -> Result<Self> {
        let mut fusion = Alphabet::new();
        let mut complements = Alphabet::new();
        let mut pairing = Vec::new();
        for (l, c) in &pairs {
            if l.arity != c.arity {
                return Err(Error::FusionMismatch(l.name.clone(), c.name.clone()));
            }
            fusion.insert(l.clone())?;
            complements.insert(c.clone())?;
            pairing.push((l.name.clone(), c.name.clone()));
        }
        for a in fusion.iter() {
            if terminals.contains(&a.name) || complements.contains(&a.name) {
                return Err(Error::AlphabetOverlap(a.name));
            }
        }
        for a in complements.iter() {
            if terminals.contains(&a.name) {
                return Err(Error::AlphabetOverlap(a.name));
            }
        }
        for (i, z) in starts.iter().enumerate() {
            if z.vertex_count() == 0 {
                return Err(Error::StartEmpty(i));
            }
            if !z.is_connected() {
                return Err(Error::StartNotConnected(i));
            }
            for (_, e) in z.edges() {
                let declared = terminals
                    .arity(&e.label.name)
                    .or_else(|| fusion.arity(&e.label.name))
                    .or_else(|| complements.arity(&e.label.name));
                match declared {
                    Some(a) if a == e.label.arity => {}
                    _ => {
                        return Err(Error::StartLabel {
                            index: i,
                            label: e.label.name.clone(),
                        })
                    }
                }
            }
        }
        Ok(Self {
            starts,
            terminals,
            fusion,
            complements,
            pairing,
        })
    }

    pub fn starts(&self) -> &[Hypergraph] {
        &self.starts
    }

    pub fn terminals(&self) -> &Alphabet {
        &self.terminals
    }

    pub fn fusion_labels(&self) -> &Alphabet {
        &self.fusion
    }

    pub fn complement_labels(&self) -> &Alphabet {
        &self.complements
    }

    pub fn pairs(&self) -> impl Iterator<Item = (&str, &str)> {
        self.pairing.iter().map(|(a, b)| (a.as_str(), b.as_str()))
    }

    /// The complement of a fusion label, if `name` is one.
    pub fn complement_of(&self, name: &str) -> Option<&str> {
        self.pairing
            .iter()
            .find(|(l, _)| l == name)
            .map(|(_, c)| c.as_str())
    }
}

/// Removes the two complementary hyperedges and identifies their attachment
/// vertices positionwise.
pub fn fuse(h: &Hypergraph, e: &EdgeId, comp: &EdgeId, fg: &FusionGrammar) -> Result<Hypergraph> {
    let first = h.edge(e).ok_or_else(|| Error::UnknownEdge(e.to_string()))?;
    let second = h.edge(comp).ok_or_else(|| Error::UnknownEdge(comp.to_string()))?;
    match fg.complement_of(&first.label.name) {
        Some(c) if c == second.label.name && first.att.len() == second.att.len() => {}
        _ => {
            return Err(Error::FusionMismatch(
                first.label.name.clone(),
                second.label.name.clone(),
            ))
        }
    }
    let pairs: Vec<_> = first.att.iter().zip(second.att.iter()).collect();
    let cut = h.remove_edges([e, comp])?;
    cut.quotient(pairs)
}

/// One fusion step: the fusion-labeled edge and its complementary partner.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FusionStep {
    pub edge: EdgeId,
    pub complement: EdgeId,
}

/// A replayable fusion derivation from `combine(m, starts)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FusionTrace {
    pub multiplicity: Multiplicity,
    pub steps: Vec<FusionStep>,
}

/// Replays the fusions. Any connected component of the result counts as
/// generated; use [`Hypergraph::connected_components`] on the output to pick
/// one (this is where fusion generation differs from bonding).
pub fn fusion_derive(fg: &FusionGrammar, trace: &FusionTrace) -> Result<Hypergraph> {
    let mut h = combine(&trace.multiplicity, fg.starts())?;
    for (i, step) in trace.steps.iter().enumerate() {
        h = fuse(&h, &step.edge, &step.complement, fg).map_err(|e| Error::TraceStep {
            step: i,
            source: Box::new(e),
        })?;
    }
    Ok(h)
}
