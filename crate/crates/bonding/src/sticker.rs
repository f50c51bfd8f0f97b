//! Regular sticker systems and their compilation into bonding grammars.
//!
//! A domino is a double-strand fragment: two strings over one alphabet plus
//! an offset aligning the lower strand against the upper one. Wherever both
//! strands carry a symbol the symbols must be equal (identity
//! complementarity), and the paired region is a nonempty interval unless one
//! strand is absent entirely.
//!
//! Sticking appends a domino on the right: each strand concatenates
//! contiguously, which forces the alignment; the operation is defined iff the
//! forced alignment yields a valid domino (and, for a two-strand suffix, iff
//! its internal offset agrees with the forced placement). This operational
//! reading reproduces chain assembly exactly: blunt juxtaposition, sticky-end
//! pairing on opposite strands, and prefix overlap for single-strand
//! suffixes.
//!
//! `tau_d` translates a domino into a hypergraph: every symbol is a binary
//! edge (upper strand left-to-right, lower strand right-to-left), paired
//! columns become one arity-4 hyperedge, consecutive symbols of a strand are
//! joined by `phi` edges, and strand extremities carry unary `alpha`/`beta`
//! markers (`beta` where the upper strand starts and where the lower strand
//! ends). `tau_r` drops the two left markers of a blunt-left domino; a
//! regular system compiles to the bonding grammar whose starts are `tau_r` of
//! the axioms and `tau_d` of the rule dominoes, with bonds
//! `a ⊗ ~a = =a` and `alpha ⊗ beta = phi`.

use crate::error::{Error, Result};
use crate::grammar::{break_bond, BondFunction, BondingGrammar};
use crate::hypergraph::Hypergraph;
use crate::id::VertexId;
use crate::label::{Alphabet, Label};
use crate::membership::{is_generated, MembershipCertificate};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};
use std::collections::BTreeSet;

/// A double-strand fragment. `offset` is the column of the lower strand's
/// start relative to the upper strand's start; it is normalized to 0 when
/// either strand is empty.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Domino {
    upper: Vec<char>,
    lower: Vec<char>,
    offset: i64,
}

impl Domino {
    pub fn new(upper: &str, lower: &str, offset: i64) -> Result<Self> {
        let upper: Vec<char> = upper.chars().collect();
        let lower: Vec<char> = lower.chars().collect();
        if upper.is_empty() && lower.is_empty() {
            return Err(Error::EmptyDomino);
        }
        let offset = if upper.is_empty() || lower.is_empty() { 0 } else { offset };
        let d = Self { upper, lower, offset };
        if !d.upper.is_empty() && !d.lower.is_empty() {
            let (lo, hi) = (d.paired_start(), d.paired_end());
            if lo >= hi {
                return Err(Error::NoPairedColumn);
            }
            for c in lo..hi {
                if d.upper[c as usize] != d.lower[(c - d.offset) as usize] {
                    return Err(Error::StrandMismatch(c));
                }
            }
        }
        Ok(d)
    }

    pub fn upper(&self) -> &[char] {
        &self.upper
    }

    pub fn lower(&self) -> &[char] {
        &self.lower
    }

    pub fn offset(&self) -> i64 {
        self.offset
    }

    pub fn upper_string(&self) -> String {
        self.upper.iter().collect()
    }

    pub fn lower_string(&self) -> String {
        self.lower.iter().collect()
    }

    pub fn total_symbols(&self) -> usize {
        self.upper.len() + self.lower.len()
    }

    /// First paired column (upper coordinates; valid when both strands are
    /// nonempty).
    fn paired_start(&self) -> i64 {
        self.offset.max(0)
    }

    /// One past the last paired column.
    fn paired_end(&self) -> i64 {
        (self.upper.len() as i64).min(self.offset + self.lower.len() as i64)
    }

    /// One strand is absent.
    pub fn is_single_strand(&self) -> bool {
        self.upper.is_empty() || self.lower.is_empty()
    }

    /// Both strands present and every column paired.
    pub fn is_complete(&self) -> bool {
        !self.is_single_strand() && self.offset == 0 && self.upper.len() == self.lower.len()
    }

    /// Both strands present (so the paired region is nonempty).
    pub fn in_lr(&self) -> bool {
        !self.is_single_strand()
    }

    /// Blunt left end: both strands present and starting in the same column.
    pub fn in_r(&self) -> bool {
        self.in_lr() && self.offset == 0
    }

    /// Two-row rendering, one column per symbol position, `.` for absence.
    pub fn render(&self) -> String {
        let lo = 0.min(self.offset);
        let hi = (self.upper.len() as i64).max(self.offset + self.lower.len() as i64);
        let mut top = String::new();
        let mut bottom = String::new();
        for c in lo..hi {
            if c > lo {
                top.push(' ');
                bottom.push(' ');
            }
            top.push(if (0..self.upper.len() as i64).contains(&c) {
                self.upper[c as usize]
            } else {
                '.'
            });
            let j = c - self.offset;
            bottom.push(if (0..self.lower.len() as i64).contains(&j) {
                self.lower[j as usize]
            } else {
                '.'
            });
        }
        format!("{top}\n{bottom}")
    }
}

/// Right-sticking: `y` appended to `x`, each strand contiguously. `None` when
/// the forced alignment is contradictory (two-strand `y` whose offset
/// disagrees), mismatched where the strands overlap, or the result is not a
/// valid two-strand domino.
pub fn stick(x: &Domino, y: &Domino) -> Option<Domino> {
    if !x.in_lr() {
        return None;
    }
    let upper_end = x.upper.len() as i64;
    let lower_end = x.offset + x.lower.len() as i64;
    if y.in_lr() && lower_end - upper_end != y.offset {
        return None;
    }
    let upper: String = x.upper.iter().chain(&y.upper).collect();
    let lower: String = x.lower.iter().chain(&y.lower).collect();
    Domino::new(&upper, &lower, x.offset).ok().filter(Domino::in_lr)
}

/// A sticking rule `(left, right)`; `None` stands for the empty domino.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Rule {
    pub left: Option<Domino>,
    pub right: Option<Domino>,
}

/// A sticker system: an alphabet, axioms, and sticking rules.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StickerSystem {
    alphabet: BTreeSet<char>,
    axioms: Vec<Domino>,
    rules: Vec<Rule>,
}

impl StickerSystem {
    pub fn new(alphabet: impl IntoIterator<Item = char>, axioms: Vec<Domino>, rules: Vec<Rule>) -> Result<Self> {
        let alphabet: BTreeSet<char> = alphabet.into_iter().collect();
        let check = |d: &Domino| -> Result<()> {
            for &c in d.upper().iter().chain(d.lower()) {
                if !alphabet.contains(&c) {
                    return Err(Error::UnknownLabel(c.to_string()));
                }
            }
            Ok(())
        };
        for a in &axioms {
            check(a)?;
        }
        for r in &rules {
            if r.left.is_none() && r.right.is_none() {
                return Err(Error::EmptyDomino);
            }
            for d in r.left.iter().chain(r.right.iter()) {
                check(d)?;
            }
        }
        Ok(Self { alphabet, axioms, rules })
    }

    pub fn alphabet(&self) -> impl Iterator<Item = char> + '_ {
        self.alphabet.iter().copied()
    }

    pub fn axioms(&self) -> &[Domino] {
        &self.axioms
    }

    pub fn rules(&self) -> &[Rule] {
        &self.rules
    }

    /// Every rule extends only to the right and every axiom is blunt-left.
    pub fn is_regular(&self) -> bool {
        self.regularity().is_ok()
    }

    fn regularity(&self) -> Result<()> {
        for (i, r) in self.rules.iter().enumerate() {
            if r.left.is_some() || r.right.is_none() {
                return Err(Error::NotRegular(format!("rule {i} is not right-only")));
            }
        }
        for (i, a) in self.axioms.iter().enumerate() {
            if !a.in_r() {
                return Err(Error::NotRegular(format!("axiom {i} is not blunt-left")));
            }
        }
        Ok(())
    }

    /// All dominoes reachable from the axioms by at most `depth` rule
    /// applications. Non-regular systems are rejected.
    pub fn generate(&self, depth: usize) -> Result<BTreeSet<Domino>> {
        self.regularity()?;
        let mut seen: BTreeSet<Domino> = self.axioms.iter().cloned().collect();
        let mut frontier: Vec<Domino> = seen.iter().cloned().collect();
        for _ in 0..depth {
            let mut next = Vec::new();
            for u in &frontier {
                for r in &self.rules {
                    let d = r.right.as_ref().expect("regular rules are right-only");
                    if let Some(out) = stick(u, d) {
                        if seen.insert(out.clone()) {
                            next.push(out);
                        }
                    }
                }
            }
            if next.is_empty() {
                break;
            }
            frontier = next;
        }
        Ok(seen)
    }

    /// All dominoes of at most `max_symbols` total symbols reachable at any
    /// depth. Sticking a nonempty domino strictly grows the symbol count, so
    /// this decides membership exactly for any domino within the bound.
    pub fn generate_up_to_size(&self, max_symbols: usize) -> Result<BTreeSet<Domino>> {
        self.regularity()?;
        let mut seen: BTreeSet<Domino> = self
            .axioms
            .iter()
            .filter(|a| a.total_symbols() <= max_symbols)
            .cloned()
            .collect();
        let mut frontier: Vec<Domino> = seen.iter().cloned().collect();
        while !frontier.is_empty() {
            let mut next = Vec::new();
            for u in &frontier {
                for r in &self.rules {
                    let d = r.right.as_ref().expect("regular rules are right-only");
                    if let Some(out) = stick(u, d) {
                        if out.total_symbols() <= max_symbols && seen.insert(out.clone()) {
                            next.push(out);
                        }
                    }
                }
            }
            frontier = next;
        }
        Ok(seen)
    }
}

/// The label sets of the compiled grammar: the alphabet symbols as binary
/// nonterminals, their `~`-complements (binary, lower strand), `=`-pairs
/// (arity 4, terminal), strand-end markers `alpha`/`beta` (unary), and the
/// backbone terminal `phi` (binary), with `a ⊗ ~a = =a` and
/// `alpha ⊗ beta = phi`.
#[derive(Debug, Clone)]
pub struct EmbeddingAlphabets {
    sigma: Vec<char>,
}

impl EmbeddingAlphabets {
    pub fn new(sigma: impl IntoIterator<Item = char>) -> Self {
        let set: BTreeSet<char> = sigma.into_iter().collect();
        Self {
            sigma: set.into_iter().collect(),
        }
    }

    pub fn upper_label(c: char) -> Label {
        Label::new(c.to_string(), 2)
    }

    pub fn bar_label(c: char) -> Label {
        Label::new(format!("~{c}"), 2)
    }

    pub fn pair_label(c: char) -> Label {
        Label::new(format!("={c}"), 4)
    }

    pub fn alpha() -> Label {
        Label::new("alpha", 1)
    }

    pub fn beta() -> Label {
        Label::new("beta", 1)
    }

    pub fn phi() -> Label {
        Label::new("phi", 2)
    }

    pub fn nonterminals(&self) -> Alphabet {
        let mut a = Alphabet::new();
        for &c in &self.sigma {
            a.insert(Self::upper_label(c)).expect("distinct names");
            a.insert(Self::bar_label(c)).expect("distinct names");
        }
        a.insert(Self::alpha()).expect("distinct names");
        a.insert(Self::beta()).expect("distinct names");
        a
    }

    pub fn terminals(&self) -> Alphabet {
        let mut a = Alphabet::new();
        for &c in &self.sigma {
            a.insert(Self::pair_label(c)).expect("distinct names");
        }
        a.insert(Self::phi()).expect("distinct names");
        a
    }

    pub fn bond_function(&self) -> BondFunction {
        let mut bf = BondFunction::new();
        for &c in &self.sigma {
            bf.insert(&c.to_string(), &format!("~{c}"), &format!("={c}"))
                .expect("distinct names");
        }
        bf.insert("alpha", "beta", "phi").expect("distinct names");
        bf
    }
}

/// Translates a nonempty domino into its hypergraph form, with all four
/// strand-end markers.
pub fn tau_d(d: &Domino) -> Hypergraph {
    tau(d, true)
}

/// Translation of a blunt-left domino without the two left strand-end
/// markers (the upper `beta` and the lower `alpha`).
pub fn tau_r(d: &Domino) -> Result<Hypergraph> {
    if !d.in_r() {
        return Err(Error::NotRightDomino);
    }
    Ok(tau(d, false))
}

/// Shared construction. Vertices are `u{2k}, u{2k+1}` per upper symbol `k`
/// and `l{2j}, l{2j+1}` per lower symbol `j`; edge identifiers are assigned
/// left to right, corners last.
fn tau(d: &Domino, left_corners: bool) -> Hypergraph {
    let mut h = Hypergraph::new();
    let uv = |k: usize| VertexId::new(format!("u{k}"));
    let lv = |k: usize| VertexId::new(format!("l{k}"));
    for k in 0..2 * d.upper.len() {
        h.add_vertex(uv(k)).expect("fresh");
    }
    for k in 0..2 * d.lower.len() {
        h.add_vertex(lv(k)).expect("fresh");
    }
    // Offsets are normalized to 0 for single-strand dominoes, so the strands
    // jointly cover every column of [lo, hi).
    let lo = 0.min(d.offset);
    let hi = (d.upper.len() as i64).max(d.offset + d.lower.len() as i64);
    let mut e = 0usize;
    let mut push = |h: &mut Hypergraph, label: Label, att: Vec<VertexId>| {
        h.add_edge(format!("e{e}"), label, att).expect("well formed");
        e += 1;
    };
    for c in lo..hi {
        let uk = (0..d.upper.len() as i64).contains(&c).then_some(c as usize);
        let jj = c - d.offset;
        let lj = (0..d.lower.len() as i64).contains(&jj).then_some(jj as usize);
        match (uk, lj) {
            (Some(k), Some(j)) => {
                // Paired column: arity-4 hyperedge over both strands.
                push(
                    &mut h,
                    EmbeddingAlphabets::pair_label(d.upper[k]),
                    vec![uv(2 * k), uv(2 * k + 1), lv(2 * j + 1), lv(2 * j)],
                );
            }
            (Some(k), None) => {
                push(
                    &mut h,
                    EmbeddingAlphabets::upper_label(d.upper[k]),
                    vec![uv(2 * k), uv(2 * k + 1)],
                );
            }
            (None, Some(j)) => {
                // Lower strand runs right to left.
                push(
                    &mut h,
                    EmbeddingAlphabets::bar_label(d.lower[j]),
                    vec![lv(2 * j + 1), lv(2 * j)],
                );
            }
            (None, None) => unreachable!("columns span the strands"),
        }
        if let Some(k) = uk {
            if k + 1 < d.upper.len() {
                push(
                    &mut h,
                    EmbeddingAlphabets::phi(),
                    vec![uv(2 * k + 1), uv(2 * k + 2)],
                );
            }
        }
        if let Some(j) = lj {
            if j + 1 < d.lower.len() {
                push(
                    &mut h,
                    EmbeddingAlphabets::phi(),
                    vec![lv(2 * j + 2), lv(2 * j + 1)],
                );
            }
        }
    }
    if !d.upper.is_empty() {
        if left_corners {
            push(&mut h, EmbeddingAlphabets::beta(), vec![uv(0)]);
        }
        push(&mut h, EmbeddingAlphabets::alpha(), vec![uv(2 * d.upper.len() - 1)]);
    }
    if !d.lower.is_empty() {
        if left_corners {
            push(&mut h, EmbeddingAlphabets::alpha(), vec![lv(0)]);
        }
        push(&mut h, EmbeddingAlphabets::beta(), vec![lv(2 * d.lower.len() - 1)]);
    }
    h
}

/// Where a compiled start came from.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum StartOrigin {
    Axiom(Domino),
    RuleDomino(Domino),
}

impl StartOrigin {
    pub fn domino(&self) -> &Domino {
        match self {
            StartOrigin::Axiom(d) | StartOrigin::RuleDomino(d) => d,
        }
    }
}

/// Compiles a regular sticker system into its bonding grammar: starts are
/// `tau_r` of the axioms followed by `tau_d` of the rule dominoes (duplicate
/// dominoes collapse, set semantics).
pub fn compile(s: &StickerSystem) -> Result<BondingGrammar> {
    compile_with_origins(s).map(|(g, _)| g)
}

/// [`compile`] plus the originating domino of every start, in start order.
pub fn compile_with_origins(s: &StickerSystem) -> Result<(BondingGrammar, Vec<StartOrigin>)> {
    s.regularity()?;
    let alphabets = EmbeddingAlphabets::new(s.alphabet());
    let mut starts = Vec::new();
    let mut origins = Vec::new();
    let mut seen_axioms: BTreeSet<Domino> = BTreeSet::new();
    for a in s.axioms() {
        if seen_axioms.insert(a.clone()) {
            starts.push(tau_r(a)?);
            origins.push(StartOrigin::Axiom(a.clone()));
        }
    }
    let mut seen_rules: BTreeSet<Domino> = BTreeSet::new();
    for r in s.rules() {
        let d = r.right.as_ref().expect("regular rules are right-only");
        if seen_rules.insert(d.clone()) {
            starts.push(tau_d(d));
            origins.push(StartOrigin::RuleDomino(d.clone()));
        }
    }
    let g = BondingGrammar::new(
        starts,
        alphabets.nonterminals(),
        alphabets.terminals(),
        alphabets.bond_function(),
    )?;
    Ok((g, origins))
}

/// One direction of the [`embedding_check`] report.
#[derive(Debug, Clone, Default, Serialize, Deserialize)]
pub struct EmbeddingReport {
    /// Dominoes generated within the depth bound; all must be accepted.
    pub generated_checked: usize,
    pub generated_accepted: usize,
    /// Stringified counterexamples: generated but rejected.
    pub false_rejections: Vec<String>,
    /// Sampled dominoes outside the generated set; all must be rejected.
    pub sampled_checked: usize,
    pub sampled_rejected: usize,
    /// Stringified counterexamples: not generated but accepted.
    pub false_acceptances: Vec<String>,
}

impl EmbeddingReport {
    pub fn passed(&self) -> bool {
        self.false_rejections.is_empty()
            && self.false_acceptances.is_empty()
            && self.generated_accepted == self.generated_checked
            && self.sampled_rejected == self.sampled_checked
    }
}

/// Cross-validates the embedding on one system: every domino generated
/// within `depth` must map under `tau_r` to a hypergraph the compiled
/// grammar generates, and `samples` random blunt-left dominoes outside the
/// generated set must be rejected. Sampled non-membership is decided exactly
/// via [`StickerSystem::generate_up_to_size`].
pub fn embedding_check(s: &StickerSystem, depth: usize, samples: usize, seed: u64) -> Result<EmbeddingReport> {
    let g = compile(s)?;
    let mut report = EmbeddingReport::default();
    let generated = s.generate(depth)?;
    for r in &generated {
        report.generated_checked += 1;
        if is_generated(&g, &tau_r(r)?)?.is_some() {
            report.generated_accepted += 1;
        } else {
            report.false_rejections.push(r.render());
        }
    }
    let sigma: Vec<char> = s.alphabet().collect();
    if sigma.is_empty() {
        return Ok(report);
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let max_symbols = 9;
    let decidable = s.generate_up_to_size(max_symbols)?;
    let mut found = 0usize;
    for _ in 0..(samples * 200) {
        if found == samples {
            break;
        }
        let Some(candidate) = random_right_domino(&sigma, &mut rng, max_symbols) else {
            continue;
        };
        if decidable.contains(&candidate) {
            continue;
        }
        found += 1;
        report.sampled_checked += 1;
        if is_generated(&g, &tau_r(&candidate)?)?.is_none() {
            report.sampled_rejected += 1;
        } else {
            report.false_acceptances.push(candidate.render());
        }
    }
    Ok(report)
}

/// A random blunt-left domino: a complete part plus an optional right
/// overhang, within the symbol budget.
fn random_right_domino(sigma: &[char], rng: &mut ChaCha8Rng, max_symbols: usize) -> Option<Domino> {
    let paired = rng.gen_range(1..=3usize);
    let overhang = rng.gen_range(0..=2usize);
    if 2 * paired + overhang > max_symbols {
        return None;
    }
    let word: String = (0..paired).map(|_| *sigma.choose(rng).expect("nonempty")).collect();
    let tail: String = (0..overhang).map(|_| *sigma.choose(rng).expect("nonempty")).collect();
    let (upper, lower) = if rng.gen_bool(0.5) {
        (format!("{word}{tail}"), word.clone())
    } else {
        (word.clone(), format!("{word}{tail}"))
    };
    Domino::new(&upper, &lower, 0).ok()
}

/// Reconstructs the sticking decomposition encoded by a membership
/// certificate for `tau_r(r)`: breaks the bond set, maps every component to
/// its origin domino, orders the pieces left to right (least column, then
/// least vertex identifier), and re-sticks them. Returns the ordered pieces
/// iff the head piece is an axiom, every other piece is a rule domino, and
/// the result equals `r`.
pub fn sticking_from_certificate(
    r: &Domino,
    g: &BondingGrammar,
    origins: &[StartOrigin],
    cert: &MembershipCertificate,
) -> Option<Vec<Domino>> {
    let h = tau_r(r).ok()?;
    let mut f = h;
    for e in &cert.bondset {
        let (next, _, _) = break_bond(&f, e, g.bond_function(), g.nonterminals()).ok()?;
        f = next;
    }
    let comps = f.connected_components();
    if comps.len() != cert.assignment.len() {
        return None;
    }
    // Column of a vertex `u{i}` or `l{i}` of tau_r(r) is i / 2 (blunt left).
    let column = |v: &VertexId| -> Option<usize> {
        let s = v.as_str();
        s[1..].parse::<usize>().ok().map(|i| i / 2)
    };
    let mut pieces: Vec<(usize, &VertexId, &StartOrigin)> = Vec::new();
    for (comp, &idx) in comps.iter().zip(&cert.assignment) {
        let origin = origins.get(idx)?;
        let min_col = comp.vertices().filter_map(column).min()?;
        let min_vertex = comp.vertices().next()?;
        pieces.push((min_col, min_vertex, origin));
    }
    pieces.sort_by(|a, b| a.0.cmp(&b.0).then_with(|| a.1.cmp(b.1)));
    let mut iter = pieces.iter();
    let (_, _, head) = iter.next()?;
    let StartOrigin::Axiom(axiom) = head else {
        return None;
    };
    let mut assembled = axiom.clone();
    let mut out = vec![axiom.clone()];
    for (_, _, origin) in iter {
        let StartOrigin::RuleDomino(d) = origin else {
            return None;
        };
        assembled = stick(&assembled, d)?;
        out.push((*d).clone());
    }
    (assembled == *r).then_some(out)
}
