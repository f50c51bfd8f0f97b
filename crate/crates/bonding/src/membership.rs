//! Certificate-based membership for bonding grammars.
//!
//! A hypergraph is generated iff it has a *bond set*: a set of hyperedges
//! whose breaking decomposes it into a disjoint union of start copies. The
//! certificate records the bond set, the start index of each post-breaking
//! connected component (components in deterministic order, least vertex
//! identifier first), and the multiplicity vector tallied from the
//! assignment.
//!
//! [`is_generated`] decides membership by depth-first branching over the
//! breakable hyperedges in identifier order, each either broken or kept,
//! breaking-first. Two prunes keep the search tractable at desk scale:
//! a label-count/vertex-count feasibility check before the search
//! ([`prune_feasibility`]), and during the search every *finalized* component
//! (one no undecided breakable hyperedge can still reach) must already be
//! isomorphic to a start. [`membership_oracle`] is the exhaustive reference:
//! it enumerates every subset of breakable hyperedges and must agree with
//! [`is_generated`] on the decision.

use crate::error::{Error, Result};
use crate::grammar::{break_bond, BondingGrammar};
use crate::hypergraph::{Hypergraph, UnionFind};
use crate::id::{EdgeId, VertexId};
use crate::isomorphism::isomorphic;
use crate::label::Label;
use serde::{Deserialize, Serialize};
use std::collections::{BTreeSet, HashMap};

/// Default cap on breakable hyperedges for [`membership_oracle`].
pub const DEFAULT_ORACLE_BOUND: usize = 20;

/// A verifiable witness that a hypergraph is generated.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MembershipCertificate {
    /// Hyperedges to break.
    pub bondset: BTreeSet<EdgeId>,
    /// Start index per post-breaking component, components ordered by least
    /// vertex identifier.
    pub assignment: Vec<usize>,
    /// `multiplicity[i]` components are assigned to start `i`.
    pub multiplicity: Vec<usize>,
}

impl MembershipCertificate {
    fn from_parts(k: usize, mut parts: Vec<(VertexId, usize)>, bondset: BTreeSet<EdgeId>) -> Self {
        parts.sort_by(|a, b| a.0.cmp(&b.0));
        let mut multiplicity = vec![0usize; k];
        for (_, idx) in &parts {
            multiplicity[*idx] += 1;
        }
        Self {
            bondset,
            assignment: parts.into_iter().map(|(_, idx)| idx).collect(),
            multiplicity,
        }
    }
}

/// True iff breaking every edge of the bond set succeeds and each resulting
/// component is isomorphic to its assigned start, with the multiplicity
/// tallying the assignment. Malformed certificates yield `false`, never an
/// error.
pub fn verify_certificate(g: &BondingGrammar, h: &Hypergraph, c: &MembershipCertificate) -> bool {
    if g.check_labels(h).is_err() {
        return false;
    }
    let mut f = h.clone();
    for e in &c.bondset {
        match break_bond(&f, e, g.bond_function(), g.nonterminals()) {
            Ok((next, _, _)) => f = next,
            Err(_) => return false,
        }
    }
    let comps = f.connected_components();
    if comps.len() != c.assignment.len() {
        return false;
    }
    if c.multiplicity.len() != g.starts().len() {
        return false;
    }
    let mut tally = vec![0usize; g.starts().len()];
    for (comp, &idx) in comps.iter().zip(&c.assignment) {
        match g.starts().get(idx) {
            Some(z) if isomorphic(comp, z).is_some() => tally[idx] += 1,
            _ => return false,
        }
    }
    tally == c.multiplicity
}

/// True iff every hyperedge of `h` carries a terminal label (with the
/// declared arity) and `h` is generated.
pub fn in_language(g: &BondingGrammar, h: &Hypergraph) -> bool {
    let terminal = h
        .edges()
        .all(|(_, e)| g.terminals().arity(&e.label.name) == Some(e.label.arity));
    terminal && matches!(is_generated(g, h), Ok(Some(_)))
}

/// Necessary-condition filter: `false` only if no bond set can exist.
///
/// Checks (a) that the degree set of `h` is contained in the union of the
/// start degree sets (degrees are invariant under bonding), and (b) that some
/// multiplicity vector matches `h` on vertex count and on label counts after
/// breaking some number of edges per produced terminal.
pub fn prune_feasibility(g: &BondingGrammar, h: &Hypergraph) -> bool {
    let mut start_degrees: BTreeSet<usize> = BTreeSet::new();
    for z in g.starts() {
        start_degrees.extend(z.degree_set());
    }
    if !h.degree_set().is_subset(&start_degrees) {
        return false;
    }
    counting_feasible(g, h)
}

/// Bounded search for `m` with: potentials equal on every nonterminal,
/// vertex counts equal, and kept-terminal counts within the counts of `h`.
///
/// The potential of a nonterminal `A` counts its edges plus every edge whose
/// label breaks into a pair containing `A` (twice for `A ⊗ A`); potentials
/// are invariant under bonding and breaking, which eliminates the per-label
/// break counts from the search.
fn counting_feasible(g: &BondingGrammar, h: &Hypergraph) -> bool {
    let nonterminals: Vec<String> = g.nonterminals().iter().map(|l| l.name).collect();
    let terminals: Vec<String> = g.terminals().iter().map(|l| l.name).collect();
    let counts = |x: &Hypergraph| -> HashMap<String, usize> {
        let mut m: HashMap<String, usize> = HashMap::new();
        for (_, e) in x.edges() {
            *m.entry(e.label.name.clone()).or_insert(0) += 1;
        }
        m
    };
    let potential = |cnt: &HashMap<String, usize>, a: &str| -> usize {
        let mut p = cnt.get(a).copied().unwrap_or(0);
        for t in &terminals {
            if let Some((l, r)) = g.bond_function().split(t) {
                let mult = usize::from(l == a) + usize::from(r == a);
                p += mult * cnt.get(t).copied().unwrap_or(0);
            }
        }
        p
    };

    let hc = counts(h);
    // Target vector: one potential per nonterminal, then the vertex count.
    let mut target: Vec<i64> = nonterminals.iter().map(|a| potential(&hc, a) as i64).collect();
    target.push(h.vertex_count() as i64);
    let terminal_limits: Vec<i64> = terminals.iter().map(|t| hc.get(t).copied().unwrap_or(0) as i64).collect();

    let start_vecs: Vec<Vec<i64>> = g
        .starts()
        .iter()
        .map(|z| {
            let zc = counts(z);
            let mut v: Vec<i64> = nonterminals.iter().map(|a| potential(&zc, a) as i64).collect();
            v.push(z.vertex_count() as i64);
            v
        })
        .collect();
    let start_terminals: Vec<Vec<i64>> = g
        .starts()
        .iter()
        .map(|z| {
            let zc = counts(z);
            terminals.iter().map(|t| zc.get(t).copied().unwrap_or(0) as i64).collect()
        })
        .collect();

    fn search(
        i: usize,
        target: &mut [i64],
        kept: &mut [i64],
        limits: &[i64],
        vecs: &[Vec<i64>],
        terms: &[Vec<i64>],
    ) -> bool {
        let dims = target.len();
        if target.iter().any(|&x| x < 0) || kept.iter().zip(limits).any(|(&k, &l)| k > l) {
            return false;
        }
        if i == vecs.len() {
            return target.iter().all(|&x| x == 0);
        }
        // Remaining starts must still be able to hit every coordinate:
        // a positive coordinate no remaining start contributes to is dead.
        for d in 0..dims {
            if target[d] > 0 && (i..vecs.len()).all(|j| vecs[j][d] == 0) {
                return false;
            }
        }
        // Upper bound for m_i: the vertex coordinate is at least 1.
        let mut ub = i64::MAX;
        for d in 0..dims {
            if vecs[i][d] > 0 {
                ub = ub.min(target[d] / vecs[i][d]);
            }
        }
        debug_assert!(ub < i64::MAX, "starts always have vertices");
        for m in 0..=ub {
            if m > 0 {
                for d in 0..dims {
                    target[d] -= vecs[i][d];
                }
                for (k, t) in kept.iter_mut().zip(&terms[i]) {
                    *k += t;
                }
            }
            if search(i + 1, target, kept, limits, vecs, terms) {
                for d in 0..dims {
                    target[d] += vecs[i][d] * m;
                }
                for (k, t) in kept.iter_mut().zip(&terms[i]) {
                    *k -= t * m;
                }
                return true;
            }
        }
        for d in 0..dims {
            target[d] += vecs[i][d] * ub;
        }
        for (k, t) in kept.iter_mut().zip(&terms[i]) {
            *k -= t * ub;
        }
        false
    }

    let mut kept = vec![0i64; terminals.len()];
    search(0, &mut target, &mut kept, &terminal_limits, &start_vecs, &start_terminals)
}

/// Decides membership and returns a verifying certificate on success.
///
/// The certificate found depends on the (fixed, deterministic) search order:
/// breakable hyperedges are considered in identifier order and breaking is
/// tried before keeping, independently per connected component.
pub fn is_generated(g: &BondingGrammar, h: &Hypergraph) -> Result<Option<MembershipCertificate>> {
    g.check_labels(h)?;
    let mut parts: Vec<(VertexId, usize)> = Vec::new();
    let mut bondset: BTreeSet<EdgeId> = BTreeSet::new();
    for comp in h.connected_components() {
        if comp.vertex_count() == 0 {
            // A lone arity-0 hyperedge can never match a start.
            return Ok(None);
        }
        match solve_component(g, &comp) {
            Some((comp_parts, broken)) => {
                parts.extend(comp_parts);
                bondset.extend(broken);
            }
            None => return Ok(None),
        }
    }
    Ok(Some(MembershipCertificate::from_parts(g.starts().len(), parts, bondset)))
}

/// Exhaustive reference decider: enumerates every subset of breakable
/// hyperedges (subsets in ascending bitmask order over the identifier-sorted
/// edge list). Errors if more than `bound` hyperedges are breakable.
pub fn membership_oracle_with_bound(
    g: &BondingGrammar,
    h: &Hypergraph,
    bound: usize,
) -> Result<Option<MembershipCertificate>> {
    g.check_labels(h)?;
    let scene = Scene::index(g, h);
    if scene.breakable.len() > bound {
        return Err(Error::OracleBound {
            got: scene.breakable.len(),
            bound,
        });
    }
    if h.edges().any(|(_, e)| e.label.arity == 0) {
        return Ok(None);
    }
    let mut matcher = Matcher::new(g);
    let n = scene.breakable.len();
    'subset: for mask in 0u64..(1u64 << n) {
        let mut broken = vec![false; scene.edges.len()];
        for (bit, &eidx) in scene.breakable.iter().enumerate() {
            if mask >> bit & 1 == 1 {
                let (la, ra) = scene.half_arities(eidx);
                if la == 0 || ra == 0 {
                    continue 'subset;
                }
                broken[eidx] = true;
            }
        }
        let classes = scene.vertex_classes(&broken);
        let mut parts: Vec<(VertexId, usize)> = Vec::new();
        for class in &classes {
            match matcher.match_class(&scene, &broken, class) {
                Some(idx) => parts.push((scene.vertex_id(class[0]).clone(), idx)),
                None => continue 'subset,
            }
        }
        let bondset: BTreeSet<EdgeId> = scene
            .breakable
            .iter()
            .enumerate()
            .filter(|(bit, _)| mask >> bit & 1 == 1)
            .map(|(_, &eidx)| scene.edges[eidx].id.clone())
            .collect();
        return Ok(Some(MembershipCertificate::from_parts(g.starts().len(), parts, bondset)));
    }
    Ok(None)
}

/// [`membership_oracle_with_bound`] at the default bound.
pub fn membership_oracle(g: &BondingGrammar, h: &Hypergraph) -> Result<Option<MembershipCertificate>> {
    membership_oracle_with_bound(g, h, DEFAULT_ORACLE_BOUND)
}

/// Indexed view of one hypergraph against one grammar.
struct Scene<'a> {
    verts: Vec<&'a VertexId>,
    edges: Vec<SceneEdge<'a>>,
    /// Indices of breakable edges (label produced by the bond function), in
    /// identifier order.
    breakable: Vec<usize>,
    splits: Vec<Option<Split<'a>>>,
}

struct SceneEdge<'a> {
    id: &'a EdgeId,
    label: &'a Label,
    att: Vec<usize>,
}

#[derive(Clone, Copy)]
struct Split<'a> {
    left: &'a str,
    right: &'a str,
    left_arity: usize,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
enum Piece {
    Whole,
    Left,
    Right,
}

impl<'a> Scene<'a> {
    fn index(g: &'a BondingGrammar, h: &'a Hypergraph) -> Self {
        let verts: Vec<&VertexId> = h.vertices().collect();
        let vindex: HashMap<&VertexId, usize> = verts.iter().enumerate().map(|(i, v)| (*v, i)).collect();
        let mut edges = Vec::new();
        let mut splits = Vec::new();
        let mut breakable = Vec::new();
        for (id, e) in h.edges() {
            let split = g.bond_function().split(&e.label.name).map(|(l, r)| Split {
                left: l,
                right: r,
                left_arity: g.nonterminals().arity(l).expect("bond domain is declared"),
            });
            if split.is_some() {
                breakable.push(edges.len());
            }
            splits.push(split);
            edges.push(SceneEdge {
                id,
                label: &e.label,
                att: e.att.iter().map(|v| vindex[v]).collect(),
            });
        }
        Self {
            verts,
            edges,
            breakable,
            splits,
        }
    }

    fn vertex_id(&self, v: usize) -> &'a VertexId {
        self.verts[v]
    }

    fn half_arities(&self, eidx: usize) -> (usize, usize) {
        let split = self.splits[eidx].expect("only breakable edges split");
        let total = self.edges[eidx].att.len();
        (split.left_arity, total - split.left_arity)
    }

    /// Connected classes of vertices under the given break decisions, each a
    /// sorted vertex list, classes ordered by least vertex.
    fn vertex_classes(&self, broken: &[bool]) -> Vec<Vec<usize>> {
        let mut uf = UnionFind::new(self.verts.len());
        for (eidx, e) in self.edges.iter().enumerate() {
            if broken[eidx] {
                let la = self.splits[eidx].expect("broken edges are breakable").left_arity;
                for w in e.att[..la].windows(2) {
                    uf.union(w[0], w[1]);
                }
                for w in e.att[la..].windows(2) {
                    uf.union(w[0], w[1]);
                }
            } else {
                for w in e.att.windows(2) {
                    uf.union(w[0], w[1]);
                }
            }
        }
        let mut class_lists: Vec<Vec<usize>> = Vec::new();
        let mut of_root: HashMap<usize, usize> = HashMap::new();
        for v in 0..self.verts.len() {
            let root = uf.find(v);
            let ci = *of_root.entry(root).or_insert_with(|| {
                class_lists.push(Vec::new());
                class_lists.len() - 1
            });
            class_lists[ci].push(v);
        }
        class_lists
    }

    /// The edge pieces landing in the class that contains `anchor`.
    fn class_pieces(&self, broken: &[bool], member: &impl Fn(usize) -> bool) -> Vec<(usize, Piece)> {
        let mut pieces = Vec::new();
        for (eidx, e) in self.edges.iter().enumerate() {
            if broken[eidx] {
                let la = self.splits[eidx].expect("broken edges are breakable").left_arity;
                if member(e.att[0]) {
                    pieces.push((eidx, Piece::Left));
                }
                if member(e.att[la]) {
                    pieces.push((eidx, Piece::Right));
                }
            } else if !e.att.is_empty() && member(e.att[0]) {
                pieces.push((eidx, Piece::Whole));
            }
        }
        pieces
    }

    /// Builds the component as a standalone hypergraph (synthetic edge
    /// identifiers; real vertex identifiers).
    fn piece_hypergraph(&self, broken: &[bool], class: &[usize], pieces: &[(usize, Piece)]) -> Hypergraph {
        let mut h = Hypergraph::new();
        for &v in class {
            h.add_vertex(self.verts[v].clone()).expect("class vertices are unique");
        }
        for (i, &(eidx, piece)) in pieces.iter().enumerate() {
            let e = &self.edges[eidx];
            let (label, att): (Label, &[usize]) = match piece {
                Piece::Whole => (e.label.clone(), &e.att),
                Piece::Left => {
                    let s = self.splits[eidx].expect("broken edges are breakable");
                    (Label::new(s.left, s.left_arity), &e.att[..s.left_arity])
                }
                Piece::Right => {
                    let s = self.splits[eidx].expect("broken edges are breakable");
                    (
                        Label::new(s.right, e.att.len() - s.left_arity),
                        &e.att[s.left_arity..],
                    )
                }
            };
            let att: Vec<VertexId> = att.iter().map(|&v| self.verts[v].clone()).collect();
            h.add_edge(format!("p{i}"), label, att).expect("piece is well formed");
            let _ = broken;
        }
        h
    }
}

/// Signature used to skip isomorphism checks that cannot succeed.
type Sig = (usize, usize, Vec<(String, usize)>, Vec<usize>);

fn sig_of(h: &Hypergraph) -> Sig {
    let mut labels: Vec<(String, usize)> = h
        .edges()
        .map(|(_, e)| (e.label.name.clone(), e.label.arity))
        .collect();
    labels.sort();
    (h.vertex_count(), h.edge_count(), labels, h.degree_multiset())
}

/// Matches components against starts, memoizing verdicts per component key.
struct Matcher<'g> {
    g: &'g BondingGrammar,
    start_sigs: Vec<Sig>,
    memo: HashMap<(Vec<usize>, Vec<(usize, Piece)>), Option<usize>>,
}

impl<'g> Matcher<'g> {
    fn new(g: &'g BondingGrammar) -> Self {
        Self {
            g,
            start_sigs: g.starts().iter().map(sig_of).collect(),
            memo: HashMap::new(),
        }
    }

    fn match_class(&mut self, scene: &Scene<'_>, broken: &[bool], class: &[usize]) -> Option<usize> {
        let members: BTreeSet<usize> = class.iter().copied().collect();
        let pieces = scene.class_pieces(broken, &|v| members.contains(&v));
        let key = (class.to_vec(), pieces.clone());
        if let Some(hit) = self.memo.get(&key) {
            return *hit;
        }
        let comp = scene.piece_hypergraph(broken, class, &pieces);
        let sig = sig_of(&comp);
        let verdict = (0..self.g.starts().len()).find(|&i| {
            self.start_sigs[i] == sig && isomorphic(&comp, &self.g.starts()[i]).is_some()
        });
        self.memo.insert(key, verdict);
        verdict
    }
}

/// Depth-first search over break/keep decisions for one connected component.
/// Returns the per-start assignment of the resulting components (keyed by
/// least vertex identifier) and the broken edge identifiers.
fn solve_component(g: &BondingGrammar, comp: &Hypergraph) -> Option<(Vec<(VertexId, usize)>, Vec<EdgeId>)> {
    if !prune_feasibility(g, comp) {
        return None;
    }
    let scene = Scene::index(g, comp);
    let mut matcher = Matcher::new(g);
    // No breakable edge: the component itself must be a start.
    if scene.breakable.is_empty() {
        let broken = vec![false; scene.edges.len()];
        let classes = scene.vertex_classes(&broken);
        debug_assert_eq!(classes.len(), 1, "input is connected");
        let idx = matcher.match_class(&scene, &broken, &classes[0])?;
        return Some((vec![(scene.vertex_id(classes[0][0]).clone(), idx)], Vec::new()));
    }
    let mut broken = vec![false; scene.edges.len()];
    let mut decided = vec![false; scene.edges.len()];
    for (eidx, _) in scene.edges.iter().enumerate() {
        if scene.splits[eidx].is_none() {
            decided[eidx] = true; // unbreakable edges are permanently kept
        }
    }
    dfs(&scene, &mut matcher, g, 0, &mut broken, &mut decided).map(|parts| {
        let bondset: Vec<EdgeId> = scene
            .breakable
            .iter()
            .filter(|&&e| broken[e])
            .map(|&e| scene.edges[e].id.clone())
            .collect();
        (parts, bondset)
    })
}

fn dfs(
    scene: &Scene<'_>,
    matcher: &mut Matcher<'_>,
    g: &BondingGrammar,
    depth: usize,
    broken: &mut Vec<bool>,
    decided: &mut Vec<bool>,
) -> Option<Vec<(VertexId, usize)>> {
    if depth == scene.breakable.len() {
        // Every class was vetted when it became finalized; collect verdicts.
        let classes = scene.vertex_classes(broken);
        let mut parts = Vec::with_capacity(classes.len());
        for class in &classes {
            let idx = matcher.match_class(scene, broken, class)?;
            parts.push((scene.vertex_id(class[0]).clone(), idx));
        }
        return Some(parts);
    }
    let eidx = scene.breakable[depth];
    let (la, ra) = scene.half_arities(eidx);
    let choices: &[bool] = if la == 0 || ra == 0 {
        // Breaking would detach a vertexless piece, which matches no start.
        &[false]
    } else {
        &[true, false]
    };
    for &brk in choices {
        broken[eidx] = brk;
        decided[eidx] = true;
        if finalized_classes_match(scene, matcher, broken, decided, eidx) {
            if let Some(parts) = dfs(scene, matcher, g, depth + 1, broken, decided) {
                return Some(parts);
            }
        }
        broken[eidx] = false;
        decided[eidx] = false;
    }
    None
}

/// Checks every finalized class touching the just-decided edge. A class is
/// finalized when no undecided breakable edge is attached to it; later
/// decisions can neither reconnect nor alter it, so it must already be a
/// start copy.
fn finalized_classes_match(
    scene: &Scene<'_>,
    matcher: &mut Matcher<'_>,
    broken: &[bool],
    decided: &[bool],
    eidx: usize,
) -> bool {
    let classes = scene.vertex_classes(broken);
    let mut class_of = vec![usize::MAX; scene.verts.len()];
    for (ci, class) in classes.iter().enumerate() {
        for &v in class {
            class_of[v] = ci;
        }
    }
    let mut open = vec![false; classes.len()];
    for (other, e) in scene.edges.iter().enumerate() {
        if !decided[other] {
            for &v in &e.att {
                open[class_of[v]] = true;
            }
        }
    }
    let touched: BTreeSet<usize> = scene.edges[eidx].att.iter().map(|&v| class_of[v]).collect();
    for ci in touched {
        if !open[ci] && matcher.match_class(scene, broken, &classes[ci]).is_none() {
            return false;
        }
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::builtins::{bounded_degree, k_regular, pseudotori};
    use crate::grammar::derive;
    use crate::hypergraph::star;
    use crate::testutil::{b_cycle, b_star, dna_grammar, strand, torus, two_cell_trace};

    #[test]
    fn two_cell_is_generated_with_all_edges_broken() {
        let g = pseudotori();
        let h = derive(&g, &two_cell_trace()).unwrap();
        let cert = is_generated(&g, &h).unwrap().expect("generated");
        assert_eq!(cert.bondset.len(), 4);
        assert_eq!(cert.multiplicity, vec![2]);
        assert!(verify_certificate(&g, &h, &cert));
        let oracle = membership_oracle(&g, &h).unwrap().expect("generated");
        assert!(verify_certificate(&g, &h, &oracle));
    }

    #[test]
    fn empty_hypergraph_is_generated_with_zero_multiplicity() {
        let g = pseudotori();
        let h = Hypergraph::empty();
        let cert = is_generated(&g, &h).unwrap().expect("generated");
        assert!(cert.bondset.is_empty());
        assert_eq!(cert.multiplicity, vec![0]);
        assert!(cert.assignment.is_empty());
        assert!(verify_certificate(&g, &h, &cert));
        assert!(membership_oracle(&g, &h).unwrap().is_some());
    }

    #[test]
    fn b_cycle_under_two_regular() {
        let g = k_regular(2);
        let h = b_cycle(3);
        let cert = is_generated(&g, &h).unwrap().expect("generated");
        assert_eq!(cert.bondset.len(), 3);
        assert_eq!(cert.multiplicity, vec![0, 3, 0]);
        assert!(verify_certificate(&g, &h, &cert));
        assert!(membership_oracle(&g, &h).unwrap().is_some());
    }

    #[test]
    fn four_leaf_star_is_rejected_by_degree() {
        let g = bounded_degree(2);
        let h = b_star(4);
        assert!(!prune_feasibility(&g, &h));
        assert!(is_generated(&g, &h).unwrap().is_none());
        assert!(membership_oracle(&g, &h).unwrap().is_none());
    }

    #[test]
    fn certificate_with_unbreakable_label_fails() {
        let g = dna_grammar();
        let h = g.starts()[0].clone();
        let cert = MembershipCertificate {
            bondset: BTreeSet::from([EdgeId::from("e0")]), // a G-labeled edge
            assignment: vec![0],
            multiplicity: vec![1, 0],
        };
        assert!(!verify_certificate(&g, &h, &cert));
    }

    #[test]
    fn dropping_a_bondset_edge_breaks_the_certificate() {
        let g = pseudotori();
        let h = derive(&g, &two_cell_trace()).unwrap();
        let cert = is_generated(&g, &h).unwrap().unwrap();
        let mut weak = cert.clone();
        let first = weak.bondset.iter().next().cloned().unwrap();
        weak.bondset.remove(&first);
        assert!(!verify_certificate(&g, &h, &weak));
    }

    #[test]
    fn start_itself_needs_no_breaking() {
        let g = pseudotori();
        let h = g.starts()[0].clone();
        let cert = membership_oracle(&g, &h).unwrap().expect("generated");
        assert!(cert.bondset.is_empty());
        assert_eq!(cert.multiplicity, vec![1]);
        let search = is_generated(&g, &h).unwrap().expect("generated");
        assert!(verify_certificate(&g, &h, &search));
    }

    #[test]
    fn lone_a_loop_is_not_generated() {
        let g = pseudotori();
        let mut h = Hypergraph::new();
        h.add_vertex("v0").unwrap();
        h.add_edge("e0", Label::new("a", 2), ["v0", "v0"].map(VertexId::from)).unwrap();
        assert!(membership_oracle(&g, &h).unwrap().is_none());
        assert!(is_generated(&g, &h).unwrap().is_none());
    }

    #[test]
    fn in_language_requires_terminal_labels() {
        let g = pseudotori();
        let h = derive(&g, &two_cell_trace()).unwrap();
        assert!(in_language(&g, &h));
        // The start is generated but carries nonterminals.
        assert!(!in_language(&g, &g.starts()[0]));
        assert!(is_generated(&g, &g.starts()[0]).unwrap().is_some());
    }

    #[test]
    fn torus_is_in_the_pseudotorus_language() {
        let g = pseudotori();
        let h = torus(3);
        assert!(prune_feasibility(&g, &h));
        assert!(in_language(&g, &h));
    }

    #[test]
    fn labels_outside_the_grammar_are_rejected() {
        let g = pseudotori();
        let h = strand(&["Q"]);
        assert_eq!(is_generated(&g, &h).unwrap_err().code(), "label_outside_grammar");
        assert_eq!(membership_oracle(&g, &h).unwrap_err().code(), "label_outside_grammar");
    }

    #[test]
    fn oracle_bound_is_enforced() {
        let g = pseudotori();
        let h = torus(3); // 18 breakable edges
        let err = membership_oracle_with_bound(&g, &h, 14).unwrap_err();
        assert_eq!(err.code(), "oracle_bound");
    }

    #[test]
    fn feasibility_accepts_the_two_cell() {
        let g = pseudotori();
        let h = derive(&g, &two_cell_trace()).unwrap();
        assert!(prune_feasibility(&g, &h));
    }

    #[test]
    fn mixed_terminal_nonterminal_membership() {
        // A start with one bonding applied internally stays generated.
        let g = pseudotori();
        let h = star(&[
            Label::new("A", 1),
            Label::new("B", 1),
            Label::new("C", 1),
            Label::new("D", 1),
        ])
        .unwrap();
        let (bonded, _) = crate::grammar::bond(
            &h,
            &EdgeId::from("e1"),
            &EdgeId::from("e3"),
            g.bond_function(),
        )
        .unwrap();
        let cert = is_generated(&g, &bonded).unwrap().expect("generated");
        assert_eq!(cert.bondset.len(), 1);
        assert!(verify_certificate(&g, &bonded, &cert));
    }
}
