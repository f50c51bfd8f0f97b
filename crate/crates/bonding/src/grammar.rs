//! Bonding grammars: the bond function, the bonding and bond-breaking
//! transformations, and derivation replay.
//!
//! Bonding merges two distinct nonterminal hyperedges into one hyperedge
//! labeled by the bond function's value, concatenating their attachments;
//! vertices never change. Breaking a bond is the exact inverse: because the
//! bond function is injective, a produced label determines its nonterminal
//! pair uniquely.

use crate::error::{Error, Result};
use crate::hypergraph::{combine, Hypergraph, Multiplicity};
use crate::id::{EdgeId, VertexId};
use crate::label::{Alphabet, Label};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use std::collections::BTreeMap;

/// A partial injective map from ordered nonterminal pairs to terminals, with
/// `arity(left ⊗ right) = arity(left) + arity(right)`.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct BondFunction {
    forward: BTreeMap<(String, String), String>,
    backward: BTreeMap<String, (String, String)>,
}

impl BondFunction {
    pub fn new() -> Self {
        Self::default()
    }

    /// Declares `left ⊗ right = result`. Injectivity is global: no two pairs
    /// may share a result, and a pair may be declared once.
    pub fn insert(&mut self, left: &str, right: &str, result: &str) -> Result<()> {
        let pair = (left.to_owned(), right.to_owned());
        if self.forward.contains_key(&pair) {
            return Err(Error::BondPairDuplicate {
                left: left.to_owned(),
                right: right.to_owned(),
            });
        }
        if self.backward.contains_key(result) {
            return Err(Error::BondNotInjective(result.to_owned()));
        }
        self.forward.insert(pair.clone(), result.to_owned());
        self.backward.insert(result.to_owned(), pair);
        Ok(())
    }

    pub fn compose(&self, left: &str, right: &str) -> Option<&str> {
        self.forward.get(&(left.to_owned(), right.to_owned())).map(|s| s.as_str())
    }

    /// The unique pair producing `result`, if any.
    pub fn split(&self, result: &str) -> Option<(&str, &str)> {
        self.backward.get(result).map(|(a, b)| (a.as_str(), b.as_str()))
    }

    pub fn produces(&self, label: &str) -> bool {
        self.backward.contains_key(label)
    }

    pub fn pairs(&self) -> impl Iterator<Item = (&str, &str, &str)> {
        self.forward
            .iter()
            .map(|((l, r), t)| (l.as_str(), r.as_str(), t.as_str()))
    }
}

/// A bonding grammar: a tuple of connected start hypergraphs over
/// nonterminals and terminals, plus a bond function.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BondingGrammar {
    starts: Vec<Hypergraph>,
    nonterminals: Alphabet,
    terminals: Alphabet,
    bond: BondFunction,
}

impl BondingGrammar {
    /// Validates all invariants; the first violation is reported.
    pub fn new(
        starts: Vec<Hypergraph>,
        nonterminals: Alphabet,
        terminals: Alphabet,
        bond: BondFunction,
    ) -> Result<Self> {
        for l in nonterminals.iter() {
            if terminals.contains(&l.name) {
                return Err(Error::AlphabetOverlap(l.name));
            }
        }
        for (left, right, result) in bond.pairs() {
            let la = nonterminals
                .arity(left)
                .ok_or_else(|| Error::UnknownLabel(left.to_owned()))?;
            let ra = nonterminals
                .arity(right)
                .ok_or_else(|| Error::UnknownLabel(right.to_owned()))?;
            let ta = terminals
                .arity(result)
                .ok_or_else(|| Error::UnknownLabel(result.to_owned()))?;
            if ta != la + ra {
                return Err(Error::BondArity {
                    left: left.to_owned(),
                    right: right.to_owned(),
                    result: result.to_owned(),
                    got: ta,
                    expected: la + ra,
                });
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
                let declared = nonterminals
                    .arity(&e.label.name)
                    .or_else(|| terminals.arity(&e.label.name));
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
            nonterminals,
            terminals,
            bond,
        })
    }

    pub fn starts(&self) -> &[Hypergraph] {
        &self.starts
    }

    pub fn nonterminals(&self) -> &Alphabet {
        &self.nonterminals
    }

    pub fn terminals(&self) -> &Alphabet {
        &self.terminals
    }

    pub fn bond_function(&self) -> &BondFunction {
        &self.bond
    }

    /// Checks that every label of `h` is declared, with the declared arity.
    pub fn check_labels(&self, h: &Hypergraph) -> Result<()> {
        for (_, e) in h.edges() {
            let declared = self
                .nonterminals
                .arity(&e.label.name)
                .or_else(|| self.terminals.arity(&e.label.name));
            match declared {
                Some(a) if a == e.label.arity => {}
                _ => return Err(Error::LabelOutsideGrammar(e.label.name.clone())),
            }
        }
        Ok(())
    }

    /// True if every hyperedge of `h` carries a terminal label.
    pub fn is_terminal(&self, h: &Hypergraph) -> bool {
        h.edges().all(|(_, e)| self.terminals.contains(&e.label.name))
    }
}

/// Merges the two distinct hyperedges into a fresh hyperedge labeled by the
/// bond function's value with the attachments concatenated. Returns the new
/// hypergraph and the identifier of the created hyperedge.
pub fn bond(
    h: &Hypergraph,
    e1: &EdgeId,
    e2: &EdgeId,
    bf: &BondFunction,
) -> Result<(Hypergraph, EdgeId)> {
    let id = crate::hypergraph::fresh_edge_id(h);
    bond_as(h, e1, e2, bf, id.clone()).map(|g| (g, id))
}

/// [`bond`] with a caller-chosen identifier for the created hyperedge.
pub fn bond_as(
    h: &Hypergraph,
    e1: &EdgeId,
    e2: &EdgeId,
    bf: &BondFunction,
    result_id: EdgeId,
) -> Result<Hypergraph> {
    if e1 == e2 {
        return Err(Error::BondSelf(e1.to_string()));
    }
    let first = h.edge(e1).ok_or_else(|| Error::UnknownEdge(e1.to_string()))?;
    let second = h.edge(e2).ok_or_else(|| Error::UnknownEdge(e2.to_string()))?;
    let result = bf
        .compose(&first.label.name, &second.label.name)
        .ok_or_else(|| Error::BondUndefined(first.label.name.clone(), second.label.name.clone()))?
        .to_owned();
    let mut att: Vec<VertexId> = first.att.clone();
    att.extend(second.att.iter().cloned());
    let label = Label::new(result, att.len());
    let mut out = h.remove_edges([e1, e2])?;
    out.add_edge(result_id, label, att)?;
    Ok(out)
}

/// Splits a produced hyperedge back into its unique nonterminal pair; inverse
/// of [`bond`] up to isomorphism. Returns the hypergraph and the two created
/// hyperedge identifiers.
pub fn break_bond(
    h: &Hypergraph,
    e: &EdgeId,
    bf: &BondFunction,
    nonterminals: &Alphabet,
) -> Result<(Hypergraph, EdgeId, EdgeId)> {
    let edge = h.edge(e).ok_or_else(|| Error::UnknownEdge(e.to_string()))?;
    let (left, right) = bf
        .split(&edge.label.name)
        .ok_or_else(|| Error::NotBreakable(edge.label.name.clone()))?;
    let la = nonterminals
        .arity(left)
        .ok_or_else(|| Error::UnknownLabel(left.to_owned()))?;
    let ra = nonterminals
        .arity(right)
        .ok_or_else(|| Error::UnknownLabel(right.to_owned()))?;
    debug_assert_eq!(la + ra, edge.att.len());
    let (latt, ratt) = (edge.att[..la].to_vec(), edge.att[la..].to_vec());
    let (lname, rname) = (left.to_owned(), right.to_owned());
    let mut out = h.remove_edges([e])?;
    let id1 = crate::hypergraph::fresh_edge_id(&out);
    out.add_edge(id1.clone(), Label::new(lname, la), latt)?;
    let id2 = crate::hypergraph::fresh_edge_id(&out);
    out.add_edge(id2.clone(), Label::new(rname, ra), ratt)?;
    Ok((out, id1, id2))
}

/// One bonding step of a derivation: merge `first` and `second` into an edge
/// named `result`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TraceStep {
    pub first: EdgeId,
    pub second: EdgeId,
    pub result: EdgeId,
}

/// A replayable derivation: the initial multiplicity vector and the bonding
/// steps applied to `combine(m, starts)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DerivationTrace {
    pub multiplicity: Multiplicity,
    pub steps: Vec<TraceStep>,
}

/// Replays a trace from `combine(m, Z)`; fails if any step violates the
/// bonding preconditions or reuses an identifier.
pub fn derive(g: &BondingGrammar, trace: &DerivationTrace) -> Result<Hypergraph> {
    let mut h = combine(&trace.multiplicity, g.starts())?;
    for (i, step) in trace.steps.iter().enumerate() {
        if h.contains_edge(&step.result) {
            return Err(Error::TraceResultTaken {
                step: i,
                id: step.result.to_string(),
            });
        }
        h = bond_as(&h, &step.first, &step.second, g.bond_function(), step.result.clone())
            .map_err(|e| Error::TraceStep {
                step: i,
                source: Box::new(e),
            })?;
    }
    Ok(h)
}

/// Samples a connected derivation: starting from one random start copy, each
/// step either bonds two compatible hyperedges of the current hypergraph or
/// attaches a fresh start copy by bonding into it, so every step performs
/// exactly one bonding. Reproducible for a fixed seed.
pub fn sample_connected_derivation(
    g: &BondingGrammar,
    seed: u64,
    steps: usize,
) -> Result<(DerivationTrace, Hypergraph)> {
    if g.starts().is_empty() {
        return Err(Error::NoApplicableBond);
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    'attempt: for _ in 0..64 {
        let mut counts = vec![0usize; g.starts().len()];
        let mut pieces: Vec<usize> = Vec::new();
        let first = rng.gen_range(0..g.starts().len());
        counts[first] += 1;
        pieces.push(first);
        let mut planned: Vec<(usize, usize)> = Vec::new(); // (piece count so far, start index)
        // Plan the pieces first so the multiplicity vector is known before
        // edge identifiers are fixed by combine().
        let mut plan_rng = rng.clone();
        for _ in 0..steps {
            if plan_rng.gen_bool(0.5) && pieces.len() > 1 {
                planned.push((pieces.len(), usize::MAX)); // internal bonding
            } else {
                let idx = plan_rng.gen_range(0..g.starts().len());
                counts[idx] += 1;
                pieces.push(idx);
                planned.push((pieces.len(), idx));
            }
        }
        rng = plan_rng;
        let m = Multiplicity::new(counts);
        let mut h = combine(&m, g.starts())?;
        // Piece p (in plan order) occupies a slice of combine's output; map
        // plan order to combine order (grouped by start index, stable).
        let mut order: Vec<usize> = (0..pieces.len()).collect();
        order.sort_by_key(|&p| (pieces[p], p));
        let mut offset = vec![0usize; pieces.len()];
        let mut eseen = 0usize;
        for &p in &order {
            offset[p] = eseen;
            eseen += g.starts()[pieces[p]].edge_count();
        }
        let piece_edges = |p: usize| -> Vec<EdgeId> {
            (0..g.starts()[pieces[p]].edge_count())
                .map(|i| EdgeId::new(format!("e{}", offset[p] + i)))
                .collect()
        };
        let mut in_graph: Vec<EdgeId> = piece_edges(0);
        let mut steps_out: Vec<TraceStep> = Vec::new();
        for &(pcount, start_idx) in &planned {
            let candidates: Vec<(EdgeId, EdgeId)> = if start_idx == usize::MAX {
                ordered_bondable_pairs(&h, g, &in_graph, &in_graph)
            } else {
                let fresh = piece_edges(pcount - 1);
                let mut c = ordered_bondable_pairs(&h, g, &in_graph, &fresh);
                c.extend(ordered_bondable_pairs(&h, g, &fresh, &in_graph));
                in_graph.extend(fresh);
                c
            };
            let Some((e1, e2)) = candidates.choose(&mut rng).cloned() else {
                continue 'attempt;
            };
            let (next, result) = bond(&h, &e1, &e2, g.bond_function())?;
            h = next;
            in_graph.retain(|e| e != &e1 && e != &e2);
            in_graph.push(result.clone());
            steps_out.push(TraceStep {
                first: e1,
                second: e2,
                result,
            });
        }
        return Ok((
            DerivationTrace {
                multiplicity: m,
                steps: steps_out,
            },
            h,
        ));
    }
    Err(Error::NoApplicableBond)
}

fn ordered_bondable_pairs(
    h: &Hypergraph,
    g: &BondingGrammar,
    lefts: &[EdgeId],
    rights: &[EdgeId],
) -> Vec<(EdgeId, EdgeId)> {
    let mut out = Vec::new();
    for a in lefts {
        for b in rights {
            if a == b {
                continue;
            }
            let (Some(la), Some(lb)) = (h.label(a), h.label(b)) else {
                continue;
            };
            if g.bond_function().compose(&la.name, &lb.name).is_some() {
                out.push((a.clone(), b.clone()));
            }
        }
    }
    out
}
