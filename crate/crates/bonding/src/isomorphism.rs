//! Hypergraph isomorphism: a label-, arity-, and attachment-order-preserving
//! bijection on vertices and hyperedges.
//!
//! The search is plain backtracking over vertex assignments, preceded by an
//! iterated vertex-invariant refinement (degree and multiset of
//! `(label, position)` incidences, then neighborhood classes) that is run
//! jointly on both hypergraphs so classes are comparable. Instances here are
//! desk-scale; no canonical forms are computed.

use crate::hypergraph::Hypergraph;
use crate::id::{EdgeId, VertexId};
use std::collections::{BTreeMap, HashMap};

/// A witness bijection. Parallel hyperedges with equal label and attachment
/// are paired in identifier order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IsoWitness {
    pub vertex_map: BTreeMap<VertexId, VertexId>,
    pub edge_map: BTreeMap<EdgeId, EdgeId>,
}

impl IsoWitness {
    /// Checks that the maps are bijections preserving labels and attachment
    /// order.
    pub fn verify(&self, h1: &Hypergraph, h2: &Hypergraph) -> bool {
        if self.vertex_map.len() != h1.vertex_count() || self.edge_map.len() != h1.edge_count() {
            return false;
        }
        let mut seen_v: BTreeMap<&VertexId, ()> = BTreeMap::new();
        for (a, b) in &self.vertex_map {
            if !h1.contains_vertex(a) || !h2.contains_vertex(b) || seen_v.insert(b, ()).is_some() {
                return false;
            }
        }
        if h2.vertex_count() != self.vertex_map.len() {
            return false;
        }
        let mut seen_e: BTreeMap<&EdgeId, ()> = BTreeMap::new();
        for (a, b) in &self.edge_map {
            let (ea, eb) = match (h1.edge(a), h2.edge(b)) {
                (Some(ea), Some(eb)) => (ea, eb),
                _ => return false,
            };
            if seen_e.insert(b, ()).is_some() || ea.label != eb.label {
                return false;
            }
            let mapped: Vec<&VertexId> = ea.att.iter().map(|v| &self.vertex_map[v]).collect();
            if !mapped.iter().zip(&eb.att).all(|(x, y)| *x == y) {
                return false;
            }
        }
        h2.edge_count() == self.edge_map.len()
    }
}

/// Returns a witness iff the two hypergraphs are isomorphic.
pub fn isomorphic(h1: &Hypergraph, h2: &Hypergraph) -> Option<IsoWitness> {
    if h1.vertex_count() != h2.vertex_count() || h1.edge_count() != h2.edge_count() {
        return None;
    }
    if label_multiset(h1) != label_multiset(h2) {
        return None;
    }
    Search::new(h1, h2).run()
}

pub fn are_isomorphic(h1: &Hypergraph, h2: &Hypergraph) -> bool {
    isomorphic(h1, h2).is_some()
}

fn label_multiset(h: &Hypergraph) -> BTreeMap<(&str, usize), usize> {
    let mut m = BTreeMap::new();
    for (_, e) in h.edges() {
        *m.entry((e.label.name.as_str(), e.label.arity)).or_insert(0) += 1;
    }
    m
}

/// Indexed view of one hypergraph.
struct Side<'a> {
    verts: Vec<&'a VertexId>,
    /// Per edge: (label name, attachment as vertex indices, id).
    edges: Vec<(&'a str, Vec<usize>, &'a EdgeId)>,
    /// Incidences per vertex: (edge index, position).
    incident: Vec<Vec<(usize, usize)>>,
}

impl<'a> Side<'a> {
    fn new(h: &'a Hypergraph) -> Self {
        let verts: Vec<&VertexId> = h.vertices().collect();
        let vindex: HashMap<&VertexId, usize> =
            verts.iter().enumerate().map(|(i, v)| (*v, i)).collect();
        let mut edges = Vec::new();
        let mut incident = vec![Vec::new(); verts.len()];
        for (id, e) in h.edges() {
            let att: Vec<usize> = e.att.iter().map(|v| vindex[v]).collect();
            for (pos, &v) in att.iter().enumerate() {
                incident[v].push((edges.len(), pos));
            }
            edges.push((e.label.name.as_str(), att, id));
        }
        Self {
            verts,
            edges,
            incident,
        }
    }
}

type EdgeKey<'a> = (&'a str, Vec<usize>);

struct Search<'a> {
    a: Side<'a>,
    b: Side<'a>,
    class_a: Vec<usize>,
    class_b: Vec<usize>,
    /// Order in which vertices of `a` are assigned.
    order: Vec<usize>,
    /// Candidate vertices of `b` per class.
    by_class_b: HashMap<usize, Vec<usize>>,
    mapping: Vec<Option<usize>>,
    used_b: Vec<bool>,
    /// Remaining capacity of each (label, mapped attachment) key in `b`.
    capacity: HashMap<EdgeKey<'a>, isize>,
    /// How many attachment vertices of each `a`-edge are still unmapped.
    pending: Vec<usize>,
}

impl<'a> Search<'a> {
    fn new(h1: &'a Hypergraph, h2: &'a Hypergraph) -> Self {
        let a = Side::new(h1);
        let b = Side::new(h2);
        let (class_a, class_b) = refine(&a, &b);
        let pending = a.edges.iter().map(|(_, att, _)| att.len()).collect();
        Self {
            a,
            b,
            class_a,
            class_b,
            order: Vec::new(),
            by_class_b: HashMap::new(),
            mapping: Vec::new(),
            used_b: Vec::new(),
            capacity: HashMap::new(),
            pending,
        }
    }

    fn run(mut self) -> Option<IsoWitness> {
        // Class histograms must agree.
        let mut hist_a: BTreeMap<usize, usize> = BTreeMap::new();
        let mut hist_b: BTreeMap<usize, usize> = BTreeMap::new();
        for &c in &self.class_a {
            *hist_a.entry(c).or_insert(0) += 1;
        }
        for &c in &self.class_b {
            *hist_b.entry(c).or_insert(0) += 1;
        }
        if hist_a != hist_b {
            return None;
        }
        for (i, &c) in self.class_b.iter().enumerate() {
            self.by_class_b.entry(c).or_default().push(i);
        }
        // Most constrained first: ascending class size, ties by identifier.
        let mut order: Vec<usize> = (0..self.a.verts.len()).collect();
        order.sort_by_key(|&i| (hist_a[&self.class_a[i]], self.class_a[i], i));
        self.order = order;
        self.mapping = vec![None; self.a.verts.len()];
        self.used_b = vec![false; self.b.verts.len()];
        for (label, att, _) in &self.b.edges {
            *self.capacity.entry((label, att.clone())).or_insert(0) += 1;
        }
        // Arity-0 edges are fully determined up front.
        let zero: Vec<usize> = (0..self.a.edges.len()).filter(|&e| self.pending[e] == 0).collect();
        for e in zero {
            if !self.consume(e) {
                return None;
            }
        }
        if self.assign(0) {
            Some(self.witness())
        } else {
            None
        }
    }

    /// Decrements the capacity of edge `e`'s image key; false if exhausted.
    fn consume(&mut self, e: usize) -> bool {
        let (label, att, _) = &self.a.edges[e];
        let key: Vec<usize> = att.iter().map(|&v| self.mapping[v].unwrap()).collect();
        match self.capacity.get_mut(&(*label, key)) {
            Some(c) if *c > 0 => {
                *c -= 1;
                true
            }
            _ => false,
        }
    }

    fn release(&mut self, e: usize) {
        let (label, att, _) = &self.a.edges[e];
        let key: Vec<usize> = att.iter().map(|&v| self.mapping[v].unwrap()).collect();
        *self.capacity.get_mut(&(*label, key)).unwrap() += 1;
    }

    fn assign(&mut self, depth: usize) -> bool {
        if depth == self.order.len() {
            return true;
        }
        let va = self.order[depth];
        let candidates = self.by_class_b[&self.class_a[va]].clone();
        for vb in candidates {
            if self.used_b[vb] {
                continue;
            }
            self.mapping[va] = Some(vb);
            self.used_b[vb] = true;
            // Every a-edge whose attachments just became fully mapped must
            // find spare capacity on its image key. pending counts every
            // position, so an edge incident k times completes only after all
            // k decrements.
            let incident = self.a.incident[va].clone();
            let mut consumed: Vec<usize> = Vec::new();
            let mut processed = 0usize;
            let mut ok = true;
            for &(e, _) in &incident {
                self.pending[e] -= 1;
                processed += 1;
                if self.pending[e] == 0 {
                    if self.consume(e) {
                        consumed.push(e);
                    } else {
                        ok = false;
                        break;
                    }
                }
            }
            if ok && self.assign(depth + 1) {
                return true;
            }
            for &e in &consumed {
                self.release(e);
            }
            for &(e, _) in &incident[..processed] {
                self.pending[e] += 1;
            }
            self.used_b[vb] = false;
            self.mapping[va] = None;
        }
        false
    }

    fn witness(&self) -> IsoWitness {
        let vertex_map: BTreeMap<VertexId, VertexId> = self
            .mapping
            .iter()
            .enumerate()
            .map(|(i, m)| (self.a.verts[i].clone(), self.b.verts[m.unwrap()].clone()))
            .collect();
        // Pair edges with equal (label, image attachment) in identifier order.
        let mut pools: HashMap<EdgeKey<'_>, Vec<&EdgeId>> = HashMap::new();
        for (label, att, id) in &self.b.edges {
            pools.entry((label, att.clone())).or_default().push(id);
        }
        for pool in pools.values_mut() {
            pool.sort();
            pool.reverse(); // pop() takes the least identifier
        }
        let mut edge_map = BTreeMap::new();
        for (label, att, id) in &self.a.edges {
            let key: Vec<usize> = att.iter().map(|&v| self.mapping[v].unwrap()).collect();
            let target = pools
                .get_mut(&(*label, key))
                .and_then(|pool| pool.pop())
                .expect("capacity was checked during search");
            edge_map.insert((*id).clone(), target.clone());
        }
        IsoWitness { vertex_map, edge_map }
    }
}

/// Joint iterated refinement; returns one class id per vertex, comparable
/// across the two sides.
fn refine(a: &Side<'_>, b: &Side<'_>) -> (Vec<usize>, Vec<usize>) {
    // Initial signature: sorted multiset of (label, position) incidences.
    let initial = |side: &Side<'_>| -> Vec<Vec<(String, usize)>> {
        (0..side.verts.len())
            .map(|v| {
                let mut sig: Vec<(String, usize)> = side.incident[v]
                    .iter()
                    .map(|&(e, pos)| (side.edges[e].0.to_owned(), pos))
                    .collect();
                sig.sort();
                sig
            })
            .collect()
    };
    let sigs_a = initial(a);
    let sigs_b = initial(b);
    let mut table: BTreeMap<&Vec<(String, usize)>, usize> = BTreeMap::new();
    for sig in sigs_a.iter().chain(&sigs_b) {
        let next = table.len();
        table.entry(sig).or_insert(next);
    }
    let mut class_a: Vec<usize> = sigs_a.iter().map(|s| table[s]).collect();
    let mut class_b: Vec<usize> = sigs_b.iter().map(|s| table[s]).collect();
    let mut count = table.len();

    loop {
        type Sig = (usize, Vec<(String, usize, Vec<usize>)>);
        let step = |side: &Side<'_>, classes: &[usize]| -> Vec<Sig> {
            (0..side.verts.len())
                .map(|v| {
                    let mut nbhd: Vec<(String, usize, Vec<usize>)> = side.incident[v]
                        .iter()
                        .map(|&(e, pos)| {
                            let (label, att, _) = &side.edges[e];
                            let ctx: Vec<usize> = att.iter().map(|&u| classes[u]).collect();
                            ((*label).to_owned(), pos, ctx)
                        })
                        .collect();
                    nbhd.sort();
                    (classes[v], nbhd)
                })
                .collect()
        };
        let next_a = step(a, &class_a);
        let next_b = step(b, &class_b);
        let mut table: BTreeMap<&Sig, usize> = BTreeMap::new();
        for sig in next_a.iter().chain(&next_b) {
            let next = table.len();
            table.entry(sig).or_insert(next);
        }
        if table.len() == count {
            return (class_a, class_b);
        }
        count = table.len();
        class_a = next_a.iter().map(|s| table[s]).collect();
        class_b = next_b.iter().map(|s| table[s]).collect();
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::label::Label;

    fn binary(name: &str) -> Label {
        Label::new(name, 2)
    }

    fn cycle(n: usize, label: &str) -> Hypergraph {
        let mut h = Hypergraph::new();
        for i in 0..n {
            h.add_vertex(format!("v{i}")).unwrap();
        }
        for i in 0..n {
            h.add_edge(
                format!("e{i}"),
                binary(label),
                [
                    VertexId::new(format!("v{i}")),
                    VertexId::new(format!("v{}", (i + 1) % n)),
                ],
            )
            .unwrap();
        }
        h
    }

    fn path(n: usize, label: &str) -> Hypergraph {
        let mut h = Hypergraph::new();
        for i in 0..=n {
            h.add_vertex(format!("v{i}")).unwrap();
        }
        for i in 0..n {
            h.add_edge(
                format!("e{i}"),
                binary(label),
                [
                    VertexId::new(format!("v{i}")),
                    VertexId::new(format!("v{}", i + 1)),
                ],
            )
            .unwrap();
        }
        h
    }

    /// Exhaustive bijection search, used as the oracle for the main path.
    pub(crate) fn brute_force_isomorphic(h1: &Hypergraph, h2: &Hypergraph) -> bool {
        if h1.vertex_count() != h2.vertex_count() || h1.edge_count() != h2.edge_count() {
            return false;
        }
        let va: Vec<&VertexId> = h1.vertices().collect();
        let vb: Vec<&VertexId> = h2.vertices().collect();
        let n = va.len();
        let mut perm: Vec<usize> = (0..n).collect();
        let check = |perm: &[usize]| -> bool {
            let map: HashMap<&VertexId, &VertexId> =
                va.iter().enumerate().map(|(i, v)| (*v, vb[perm[i]])).collect();
            let mut pool: HashMap<(String, Vec<&VertexId>), isize> = HashMap::new();
            for (_, e) in h2.edges() {
                *pool
                    .entry((e.label.name.clone(), e.att.iter().collect()))
                    .or_insert(0) += 1;
            }
            for (_, e) in h1.edges() {
                let key = (
                    e.label.name.clone(),
                    e.att.iter().map(|v| map[v]).collect::<Vec<_>>(),
                );
                match pool.get_mut(&key) {
                    Some(c) if *c > 0 => *c -= 1,
                    _ => return false,
                }
            }
            true
        };
        // Heap's algorithm.
        fn permute(perm: &mut Vec<usize>, k: usize, check: &impl Fn(&[usize]) -> bool) -> bool {
            if k <= 1 {
                return check(perm);
            }
            for i in 0..k {
                if permute(perm, k - 1, check) {
                    return true;
                }
                if k % 2 == 0 {
                    perm.swap(i, k - 1);
                } else {
                    perm.swap(0, k - 1);
                }
            }
            false
        }
        if n == 0 {
            return check(&perm);
        }
        permute(&mut perm, n, &check)
    }

    #[test]
    fn reflexive() {
        let h = cycle(3, "b");
        let w = isomorphic(&h, &h).unwrap();
        assert!(w.verify(&h, &h));
    }

    #[test]
    fn cycle_vs_path_disagree() {
        let c = cycle(3, "b");
        let p = path(3, "b");
        assert!(isomorphic(&c, &p).is_none());
        assert!(!brute_force_isomorphic(&c, &p));
    }

    #[test]
    fn relabeled_cycle_agrees_with_brute_force() {
        let c = cycle(4, "b");
        let mut r = Hypergraph::new();
        for v in ["x3", "x1", "x0", "x2"] {
            r.add_vertex(v).unwrap();
        }
        for (i, (s, t)) in [("x1", "x2"), ("x2", "x3"), ("x3", "x0"), ("x0", "x1")]
            .iter()
            .enumerate()
        {
            r.add_edge(format!("f{i}"), binary("b"), [VertexId::from(*s), VertexId::from(*t)])
                .unwrap();
        }
        let w = isomorphic(&c, &r).expect("relabeled cycle is isomorphic");
        assert!(w.verify(&c, &r));
        assert!(brute_force_isomorphic(&c, &r));
    }

    #[test]
    fn direction_matters() {
        // A 2-cycle against two parallel edges in the same direction.
        let two = cycle(2, "b");
        let mut par = Hypergraph::new();
        par.add_vertex("v0").unwrap();
        par.add_vertex("v1").unwrap();
        for i in 0..2 {
            par.add_edge(format!("e{i}"), binary("b"), [VertexId::from("v0"), VertexId::from("v1")])
                .unwrap();
        }
        assert!(isomorphic(&two, &par).is_none());
        assert!(!brute_force_isomorphic(&two, &par));
    }

    #[test]
    fn parallel_edges_pair_up() {
        let mut a = Hypergraph::new();
        a.add_vertex("v0").unwrap();
        a.add_vertex("v1").unwrap();
        for i in 0..3 {
            a.add_edge(format!("e{i}"), binary("b"), [VertexId::from("v0"), VertexId::from("v1")])
                .unwrap();
        }
        let mut b = Hypergraph::new();
        b.add_vertex("w0").unwrap();
        b.add_vertex("w1").unwrap();
        for i in 0..3 {
            b.add_edge(format!("f{i}"), binary("b"), [VertexId::from("w1"), VertexId::from("w0")])
                .unwrap();
        }
        let w = isomorphic(&a, &b).unwrap();
        assert!(w.verify(&a, &b));
    }

    #[test]
    fn empty_graphs() {
        let e = Hypergraph::empty();
        assert!(isomorphic(&e, &e).is_some());
        let mut one = Hypergraph::new();
        one.add_vertex("v0").unwrap();
        assert!(isomorphic(&e, &one).is_none());
    }
}
