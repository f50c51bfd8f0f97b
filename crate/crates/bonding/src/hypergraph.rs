//! The hypergraph data model and the operations the rest of the crate builds
//! on: disjoint union, replication, multiplicity combination, edge removal,
//! vertex quotients, connected components, degrees, and single-vertex stars.
//!
//! A hypergraph is a finite set of vertices plus a finite set of labeled
//! hyperedges; each hyperedge is attached to an ordered sequence of vertices
//! whose length equals the arity of its label. Attachment sequences may
//! repeat vertices (loops); degrees count every incidence, so a binary loop
//! contributes 2.
//!
//! Values are immutable after construction: every operation is a pure
//! function returning a new hypergraph, safe to call from concurrent code.

use crate::error::{Error, Result};
use crate::id::{fresh_id, EdgeId, VertexId};
use crate::label::{Alphabet, Label};
use std::collections::{BTreeMap, BTreeSet, HashMap, VecDeque};
use std::fmt;

/// A labeled hyperedge: the label fixes the arity, `att` lists the attachment
/// vertices in order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Hyperedge {
    pub label: Label,
    pub att: Vec<VertexId>,
}

/// A finite hypergraph with string-identified vertices and hyperedges.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Hypergraph {
    vertices: BTreeSet<VertexId>,
    edges: BTreeMap<EdgeId, Hyperedge>,
}

impl Hypergraph {
    pub fn new() -> Self {
        Self::default()
    }

    /// The hypergraph with no vertices and no hyperedges.
    pub fn empty() -> Self {
        Self::default()
    }

    pub fn add_vertex(&mut self, id: impl Into<VertexId>) -> Result<()> {
        let id = id.into();
        if !self.vertices.insert(id.clone()) {
            return Err(Error::DuplicateVertex(id.to_string()));
        }
        Ok(())
    }

    pub fn add_edge(
        &mut self,
        id: impl Into<EdgeId>,
        label: Label,
        att: impl IntoIterator<Item = VertexId>,
    ) -> Result<()> {
        let id = id.into();
        let att: Vec<VertexId> = att.into_iter().collect();
        if self.edges.contains_key(&id) {
            return Err(Error::DuplicateEdge(id.to_string()));
        }
        if att.len() != label.arity {
            return Err(Error::AttachmentLength {
                edge: id.to_string(),
                label: label.name,
                arity: label.arity,
                len: att.len(),
            });
        }
        for v in &att {
            if !self.vertices.contains(v) {
                return Err(Error::UnknownVertex(v.to_string()));
            }
        }
        self.edges.insert(id, Hyperedge { label, att });
        Ok(())
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty() && self.edges.is_empty()
    }

    pub fn contains_vertex(&self, v: &VertexId) -> bool {
        self.vertices.contains(v)
    }

    pub fn contains_edge(&self, e: &EdgeId) -> bool {
        self.edges.contains_key(e)
    }

    /// Vertices in identifier order.
    pub fn vertices(&self) -> impl Iterator<Item = &VertexId> {
        self.vertices.iter()
    }

    /// Hyperedges in identifier order.
    pub fn edges(&self) -> impl Iterator<Item = (&EdgeId, &Hyperedge)> {
        self.edges.iter()
    }

    pub fn edge(&self, id: &EdgeId) -> Option<&Hyperedge> {
        self.edges.get(id)
    }

    pub fn label(&self, id: &EdgeId) -> Option<&Label> {
        self.edges.get(id).map(|e| &e.label)
    }

    pub fn attachment(&self, id: &EdgeId) -> Option<&[VertexId]> {
        self.edges.get(id).map(|e| e.att.as_slice())
    }

    /// The alphabet of labels actually used by the hyperedges.
    pub fn used_labels(&self) -> Alphabet {
        self.edges
            .values()
            .map(|e| e.label.clone())
            .collect::<BTreeSet<_>>()
            .into_iter()
            .collect()
    }

    /// Number of incidences `(e, i)` with `att(e)(i) = v`; loops count once
    /// per position.
    pub fn degree(&self, v: &VertexId) -> Result<usize> {
        if !self.vertices.contains(v) {
            return Err(Error::UnknownVertex(v.to_string()));
        }
        Ok(self
            .edges
            .values()
            .map(|e| e.att.iter().filter(|&u| u == v).count())
            .sum())
    }

    /// The set of vertex degrees.
    pub fn degree_set(&self) -> BTreeSet<usize> {
        let mut counts: BTreeMap<&VertexId, usize> =
            self.vertices.iter().map(|v| (v, 0)).collect();
        for e in self.edges.values() {
            for v in &e.att {
                *counts.get_mut(v).expect("attachment vertex exists") += 1;
            }
        }
        counts.into_values().collect()
    }

    /// Multiset of vertex degrees, sorted ascending.
    pub fn degree_multiset(&self) -> Vec<usize> {
        let mut counts: BTreeMap<&VertexId, usize> =
            self.vertices.iter().map(|v| (v, 0)).collect();
        for e in self.edges.values() {
            for v in &e.att {
                *counts.get_mut(v).expect("attachment vertex exists") += 1;
            }
        }
        let mut ds: Vec<usize> = counts.into_values().collect();
        ds.sort_unstable();
        ds
    }

    /// Disjoint union. Both operands are renumbered onto fresh identifiers
    /// `v0, v1, ...` / `e0, e1, ...` (left operand first, each in identifier
    /// order), so the output is reproducible and never collides.
    pub fn disjoint_union(&self, other: &Hypergraph) -> Hypergraph {
        let mut out = Hypergraph::new();
        let mut vmap: HashMap<(usize, &VertexId), VertexId> = HashMap::new();
        let mut vnext = 0usize;
        let mut enext = 0usize;
        for (side, h) in [(0, self), (1, other)] {
            for v in h.vertices() {
                let nv = VertexId::new(format!("v{vnext}"));
                vnext += 1;
                out.vertices.insert(nv.clone());
                vmap.insert((side, v), nv);
            }
        }
        for (side, h) in [(0, self), (1, other)] {
            for (_, e) in h.edges() {
                let ne = EdgeId::new(format!("e{enext}"));
                enext += 1;
                let att = e.att.iter().map(|v| vmap[&(side, v)].clone()).collect();
                out.edges.insert(
                    ne,
                    Hyperedge {
                        label: e.label.clone(),
                        att,
                    },
                );
            }
        }
        out
    }

    /// Disjoint union of `k` copies; `k = 0` yields the empty hypergraph.
    pub fn replicate(&self, k: usize) -> Hypergraph {
        let mut out = Hypergraph::empty();
        for _ in 0..k {
            out = out.disjoint_union(self);
        }
        out
    }

    /// Removes the given hyperedges; vertices are unchanged.
    pub fn remove_edges<'a>(&self, ids: impl IntoIterator<Item = &'a EdgeId>) -> Result<Hypergraph> {
        let mut out = self.clone();
        for id in ids {
            if out.edges.remove(id).is_none() {
                return Err(Error::UnknownEdge(id.to_string()));
            }
        }
        Ok(out)
    }

    /// Quotient by the smallest equivalence relation containing `pairs`.
    /// Every class is represented by its least vertex identifier; attachments
    /// are rewritten to representatives. Labels and edge identifiers are
    /// unchanged.
    pub fn quotient<'a>(
        &self,
        pairs: impl IntoIterator<Item = (&'a VertexId, &'a VertexId)>,
    ) -> Result<Hypergraph> {
        let verts: Vec<&VertexId> = self.vertices.iter().collect();
        let index: HashMap<&VertexId, usize> = verts.iter().enumerate().map(|(i, v)| (*v, i)).collect();
        let mut uf = UnionFind::new(verts.len());
        for (a, b) in pairs {
            let ia = *index.get(a).ok_or_else(|| Error::UnknownVertex(a.to_string()))?;
            let ib = *index.get(b).ok_or_else(|| Error::UnknownVertex(b.to_string()))?;
            uf.union(ia, ib);
        }
        // verts is in identifier order, so the first member of each class is
        // its least identifier.
        let mut representative: Vec<Option<&VertexId>> = vec![None; verts.len()];
        let mut out = Hypergraph::new();
        for (i, v) in verts.iter().enumerate() {
            let root = uf.find(i);
            if representative[root].is_none() {
                representative[root] = Some(v);
                out.vertices.insert((*v).clone());
            }
        }
        for (id, e) in &self.edges {
            let att = e
                .att
                .iter()
                .map(|v| representative[uf.find(index[v])].expect("class has a representative").clone())
                .collect();
            out.edges.insert(
                id.clone(),
                Hyperedge {
                    label: e.label.clone(),
                    att,
                },
            );
        }
        Ok(out)
    }

    /// Maximal connected subhypergraphs, ordered by least contained vertex
    /// identifier. Hyperedges of arity 0 form singleton components ordered by
    /// edge identifier after all vertex-bearing components.
    pub fn connected_components(&self) -> Vec<Hypergraph> {
        let verts: Vec<&VertexId> = self.vertices.iter().collect();
        let index: HashMap<&VertexId, usize> = verts.iter().enumerate().map(|(i, v)| (*v, i)).collect();
        let mut uf = UnionFind::new(verts.len());
        for e in self.edges.values() {
            for w in e.att.windows(2) {
                uf.union(index[&w[0]], index[&w[1]]);
            }
        }
        // Group vertices and edges per class; classes keyed by their least
        // vertex, which is the first one seen in identifier order.
        let mut order: Vec<usize> = Vec::new();
        let mut comp_of_root: HashMap<usize, usize> = HashMap::new();
        let mut comps: Vec<Hypergraph> = Vec::new();
        for (i, v) in verts.iter().enumerate() {
            let root = uf.find(i);
            let ci = *comp_of_root.entry(root).or_insert_with(|| {
                order.push(root);
                comps.push(Hypergraph::new());
                comps.len() - 1
            });
            comps[ci].vertices.insert((*v).clone());
        }
        for (id, e) in &self.edges {
            if let Some(v) = e.att.first() {
                let ci = comp_of_root[&uf.find(index[v])];
                comps[ci].edges.insert(id.clone(), e.clone());
            }
        }
        for (id, e) in &self.edges {
            if e.att.is_empty() {
                let mut lone = Hypergraph::new();
                lone.edges.insert(id.clone(), e.clone());
                comps.push(lone);
            }
        }
        comps
    }

    /// True if there is a path between any two vertices (single-vertex and
    /// empty hypergraphs are connected; so is a lone arity-0 hyperedge).
    pub fn is_connected(&self) -> bool {
        self.connected_components().len() <= 1
    }

    /// Breadth-first search for a path between two vertices. Returns the
    /// empty path for `from == to`.
    pub fn find_path(&self, from: &VertexId, to: &VertexId) -> Result<Option<Path>> {
        for v in [from, to] {
            if !self.vertices.contains(v) {
                return Err(Error::UnknownVertex(v.to_string()));
            }
        }
        if from == to {
            return Ok(Some(Path { steps: Vec::new() }));
        }
        // Predecessor map: vertex -> (previous vertex, step taken).
        let mut pred: HashMap<&VertexId, (&VertexId, PathStep)> = HashMap::new();
        let mut queue: VecDeque<&VertexId> = VecDeque::new();
        let mut seen: BTreeSet<&VertexId> = BTreeSet::new();
        seen.insert(from);
        queue.push_back(from);
        'bfs: while let Some(u) = queue.pop_front() {
            for (id, e) in &self.edges {
                for (i, a) in e.att.iter().enumerate() {
                    if a != u {
                        continue;
                    }
                    for (o, b) in e.att.iter().enumerate() {
                        if seen.contains(b) {
                            continue;
                        }
                        seen.insert(b);
                        pred.insert(
                            b,
                            (
                                u,
                                PathStep {
                                    in_position: i + 1,
                                    edge: id.clone(),
                                    out_position: o + 1,
                                },
                            ),
                        );
                        if b == to {
                            break 'bfs;
                        }
                        queue.push_back(b);
                    }
                }
            }
        }
        if !pred.contains_key(to) {
            return Ok(None);
        }
        let mut steps = Vec::new();
        let mut cur = to;
        while cur != from {
            let (prev, step) = pred[cur].clone();
            steps.push(step);
            cur = prev;
        }
        steps.reverse();
        Ok(Some(Path { steps }))
    }
}

impl fmt::Display for Hypergraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "hypergraph({} vertices, {} hyperedges)",
            self.vertex_count(),
            self.edge_count()
        )
    }
}

/// A walk through hyperedge incidences: each step enters an edge at
/// `in_position` and leaves at `out_position` (1-based), and consecutive
/// steps chain through shared attachment vertices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Path {
    pub steps: Vec<PathStep>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PathStep {
    pub in_position: usize,
    pub edge: EdgeId,
    pub out_position: usize,
}

impl Path {
    pub fn len(&self) -> usize {
        self.steps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }

    /// Checks the chaining conditions in `h` from `from` to `to`.
    pub fn verify(&self, h: &Hypergraph, from: &VertexId, to: &VertexId) -> bool {
        if self.steps.is_empty() {
            return from == to && h.contains_vertex(from);
        }
        let at = |step: &PathStep, pos: usize| -> Option<&VertexId> {
            h.attachment(&step.edge).and_then(|a| a.get(pos.checked_sub(1)?))
        };
        let mut cur = from;
        for step in &self.steps {
            match (at(step, step.in_position), at(step, step.out_position)) {
                (Some(enter), Some(exit)) if enter == cur => cur = exit,
                _ => return false,
            }
        }
        cur == to
    }
}

/// Nonnegative counts, one per start hypergraph of a grammar.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Multiplicity(pub Vec<usize>);

impl Multiplicity {
    pub fn new(counts: impl Into<Vec<usize>>) -> Self {
        Self(counts.into())
    }

    pub fn zeros(k: usize) -> Self {
        Self(vec![0; k])
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn total(&self) -> usize {
        self.0.iter().sum()
    }
}

impl From<Vec<usize>> for Multiplicity {
    fn from(v: Vec<usize>) -> Self {
        Self(v)
    }
}

/// Disjoint union of `m(i)` copies of `zs(i)`.
pub fn combine(m: &Multiplicity, zs: &[Hypergraph]) -> Result<Hypergraph> {
    if m.len() != zs.len() {
        return Err(Error::MultiplicityLength {
            got: m.len(),
            expected: zs.len(),
        });
    }
    let mut out = Hypergraph::empty();
    for (count, z) in m.0.iter().zip(zs) {
        for _ in 0..*count {
            out = out.disjoint_union(z);
        }
    }
    Ok(out)
}

/// One vertex `v0` carrying one unary hyperedge per entry (`e0`, `e1`, ... in
/// list order). Every label must have arity 1.
pub fn star(labels: &[Label]) -> Result<Hypergraph> {
    let mut h = Hypergraph::new();
    h.add_vertex("v0")?;
    for (i, l) in labels.iter().enumerate() {
        if l.arity != 1 {
            return Err(Error::NotUnary(l.name.clone()));
        }
        h.add_edge(format!("e{i}"), l.clone(), [VertexId::from("v0")])?;
    }
    Ok(h)
}

pub(crate) fn fresh_edge_id(h: &Hypergraph) -> EdgeId {
    EdgeId::new(fresh_id("e", h.edges.keys().map(|e| e.as_str())))
}

pub(crate) struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    pub(crate) fn new(n: usize) -> Self {
        Self {
            parent: (0..n).collect(),
        }
    }

    pub(crate) fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    pub(crate) fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            // Smaller index wins so the least vertex stays the class anchor.
            let (lo, hi) = if ra < rb { (ra, rb) } else { (rb, ra) };
            self.parent[hi] = lo;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::isomorphism::isomorphic;

    fn unary(name: &str) -> Label {
        Label::new(name, 1)
    }

    fn binary(name: &str) -> Label {
        Label::new(name, 2)
    }

    /// The four-point star with unary A, B, C, D edges on a single vertex.
    fn four_star() -> Hypergraph {
        star(&[unary("A"), unary("B"), unary("C"), unary("D")]).unwrap()
    }

    /// A directed path of binary edges with the given labels.
    pub(crate) fn strand(labels: &[&str]) -> Hypergraph {
        let mut h = Hypergraph::new();
        for i in 0..=labels.len() {
            h.add_vertex(format!("v{i}")).unwrap();
        }
        for (i, l) in labels.iter().enumerate() {
            h.add_edge(
                format!("e{i}"),
                binary(l),
                [VertexId::new(format!("v{i}")), VertexId::new(format!("v{}", i + 1))],
            )
            .unwrap();
        }
        h
    }

    #[test]
    fn arity_is_enforced() {
        let mut h = Hypergraph::new();
        h.add_vertex("v0").unwrap();
        let err = h
            .add_edge("e0", binary("a"), [VertexId::from("v0")])
            .unwrap_err();
        assert_eq!(err.code(), "attachment_length");
    }

    #[test]
    fn union_with_empty_is_identity_up_to_iso() {
        let h = strand(&["G", "A", "C"]);
        let u = h.disjoint_union(&Hypergraph::empty());
        assert!(isomorphic(&h, &u).is_some());
        let u = Hypergraph::empty().disjoint_union(&h);
        assert!(isomorphic(&h, &u).is_some());
    }

    #[test]
    fn union_of_two_four_stars() {
        let z = four_star();
        let u = z.disjoint_union(&z);
        assert_eq!(u.vertex_count(), 2);
        assert_eq!(u.edge_count(), 8);
        assert!(u.edges().all(|(_, e)| e.label.arity == 1));
    }

    #[test]
    fn union_of_two_strands() {
        let u = strand(&["G", "A", "C"]).disjoint_union(&strand(&["C", "T", "G"]));
        assert_eq!(u.vertex_count(), 8);
        assert_eq!(u.edge_count(), 6);
    }

    #[test]
    fn replicate_zero_and_one() {
        let h = strand(&["G", "A", "C"]);
        assert!(h.replicate(0).is_empty());
        assert!(isomorphic(&h, &h.replicate(1)).is_some());
        let z = four_star();
        assert_eq!(z.replicate(2), z.disjoint_union(&z));
    }

    #[test]
    fn combine_counts() {
        let z = four_star();
        assert!(combine(&Multiplicity::new(vec![0, 0]), &[z.clone(), z.clone()])
            .unwrap()
            .is_empty());
        let two = combine(&Multiplicity::new(vec![2]), &[z.clone()]).unwrap();
        assert_eq!(two.vertex_count(), 2);
        assert_eq!(two.edge_count(), 8);
        let pair = combine(
            &Multiplicity::new(vec![1, 1]),
            &[strand(&["C~", "A", "C"]), strand(&["C", "A~", "C~"])],
        )
        .unwrap();
        assert_eq!(pair.vertex_count(), 8);
        assert_eq!(pair.edge_count(), 6);
        let err = combine(&Multiplicity::new(vec![1]), &[z.clone(), z]).unwrap_err();
        assert_eq!(err.code(), "multiplicity_length");
    }

    #[test]
    fn remove_edges_cases() {
        let u = strand(&["G", "A", "C"]).disjoint_union(&strand(&["C", "T", "G"]));
        assert_eq!(u.remove_edges([]).unwrap(), u);
        // Dropping the middle edge of each strand leaves the four outer edges.
        let ids = [EdgeId::from("e1"), EdgeId::from("e4")];
        let cut = u.remove_edges(ids.iter()).unwrap();
        assert_eq!(cut.vertex_count(), 8);
        assert_eq!(cut.edge_count(), 4);

        let z = four_star();
        let ids: Vec<EdgeId> = z.edges().map(|(id, _)| id.clone()).collect();
        let bare = z.remove_edges(ids.iter()).unwrap();
        assert_eq!(bare.vertex_count(), 1);
        assert_eq!(bare.edge_count(), 0);

        let missing = EdgeId::from("nope");
        assert_eq!(z.remove_edges([&missing]).unwrap_err().code(), "unknown_edge");
    }

    #[test]
    fn quotient_cases() {
        let h = strand(&["a"]);
        assert!(isomorphic(&h, &h.quotient([]).unwrap()).is_some());

        let (v0, v1) = (VertexId::from("v0"), VertexId::from("v1"));
        let looped = h.quotient([(&v0, &v1)]).unwrap();
        assert_eq!(looped.vertex_count(), 1);
        let (_, e) = looped.edges().next().unwrap();
        assert_eq!(e.att[0], e.att[1]);

        let unknown = VertexId::from("zz");
        assert_eq!(h.quotient([(&v0, &unknown)]).unwrap_err().code(), "unknown_vertex");
    }

    #[test]
    fn quotient_merges_strand_pair() {
        // Two three-edge strands with the middle edges removed, then the
        // middle gaps glued positionwise: 8 - 2 = 6 vertices.
        let u = strand(&["G", "A", "C"]).disjoint_union(&strand(&["C", "A~", "G"]));
        let cut = u.remove_edges([&EdgeId::from("e1"), &EdgeId::from("e4")]).unwrap();
        let pairs = [
            (VertexId::from("v1"), VertexId::from("v5")),
            (VertexId::from("v2"), VertexId::from("v6")),
        ];
        let glued = cut.quotient(pairs.iter().map(|(a, b)| (a, b))).unwrap();
        assert_eq!(glued.vertex_count(), 6);
        assert_eq!(glued.edge_count(), 4);
    }

    #[test]
    fn components_cases() {
        let h = strand(&["G", "A", "C"]);
        assert_eq!(h.connected_components(), vec![h.clone()]);

        let u = h.disjoint_union(&strand(&["C", "T", "G"]));
        let comps = u.connected_components();
        assert_eq!(comps.len(), 2);
        assert!(comps.iter().all(|c| c.vertex_count() == 4));

        assert_eq!(four_star().replicate(3).connected_components().len(), 3);
    }

    #[test]
    fn degrees() {
        let mut h = Hypergraph::new();
        h.add_vertex("v0").unwrap();
        h.add_edge("e0", binary("a"), [VertexId::from("v0"), VertexId::from("v0")])
            .unwrap();
        assert_eq!(h.degree(&VertexId::from("v0")).unwrap(), 2);

        // One unary X, one ternary Y on (v1, v2, v3), one binary Z loop on v2.
        let mut h = Hypergraph::new();
        for v in ["v1", "v2", "v3"] {
            h.add_vertex(v).unwrap();
        }
        h.add_edge("e1", unary("X"), [VertexId::from("v1")]).unwrap();
        h.add_edge(
            "e2",
            Label::new("Y", 3),
            ["v1", "v2", "v3"].map(VertexId::from),
        )
        .unwrap();
        h.add_edge("e3", binary("Z"), [VertexId::from("v2"), VertexId::from("v2")])
            .unwrap();
        assert_eq!(h.degree(&VertexId::from("v2")).unwrap(), 3);
        assert_eq!(h.degree(&VertexId::from("v1")).unwrap(), 2);
        assert!(h.degree(&VertexId::from("v9")).is_err());

        assert_eq!(four_star().degree_set(), BTreeSet::from([4]));
    }

    #[test]
    fn star_cases() {
        let z = four_star();
        assert_eq!(z.vertex_count(), 1);
        assert_eq!(z.edge_count(), 4);

        let lone = star(&[]).unwrap();
        assert_eq!(lone.vertex_count(), 1);
        assert_eq!(lone.edge_count(), 0);

        let io = star(&[unary("I"), unary("O")]).unwrap();
        assert_eq!(io.edge_count(), 2);

        assert_eq!(star(&[binary("a")]).unwrap_err().code(), "not_unary");
    }

    #[test]
    fn paths_chain_through_incidences() {
        let h = strand(&["G", "A", "C"]);
        let (v0, v3) = (VertexId::from("v0"), VertexId::from("v3"));
        let p = h.find_path(&v0, &v3).unwrap().unwrap();
        assert_eq!(p.len(), 3);
        assert!(p.verify(&h, &v0, &v3));
        assert!(!p.verify(&h, &v3, &v0));
        assert!(h.find_path(&v0, &v0).unwrap().unwrap().is_empty());

        let u = h.disjoint_union(&h);
        let (a, b) = (VertexId::from("v0"), VertexId::from("v5"));
        assert!(u.find_path(&a, &b).unwrap().is_none());
    }
}
