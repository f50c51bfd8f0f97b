//! Shared helpers for the integration suites: random instance generators and
//! an exhaustive isomorphism oracle kept independent of the library's search.

use bonding::grammar::{bond, BondingGrammar, DerivationTrace, TraceStep};
use bonding::hypergraph::{combine, Multiplicity};
use bonding::{EdgeId, Hypergraph, Label, VertexId};
use rand::prelude::*;
use rand_chacha::ChaCha8Rng;
use std::collections::HashMap;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// A random hypergraph over the given labels: up to `max_vertices` vertices
/// and up to `max_edges` edges with uniformly chosen attachments.
pub fn random_hypergraph(
    rng: &mut ChaCha8Rng,
    labels: &[Label],
    max_vertices: usize,
    max_edges: usize,
) -> Hypergraph {
    let n = rng.gen_range(1..=max_vertices.max(1));
    let mut h = Hypergraph::new();
    for i in 0..n {
        h.add_vertex(format!("v{i}")).unwrap();
    }
    let e = rng.gen_range(0..=max_edges);
    for i in 0..e {
        let label = labels.choose(rng).unwrap().clone();
        let att: Vec<VertexId> = (0..label.arity)
            .map(|_| VertexId::new(format!("v{}", rng.gen_range(0..n))))
            .collect();
        h.add_edge(format!("e{i}"), label, att).unwrap();
    }
    h
}

/// Renames vertices and edges with a random bijection and shuffles insertion
/// order; the result is isomorphic to the input by construction.
pub fn scramble(rng: &mut ChaCha8Rng, h: &Hypergraph) -> Hypergraph {
    let mut verts: Vec<&VertexId> = h.vertices().collect();
    verts.shuffle(rng);
    let map: HashMap<&VertexId, String> = verts
        .iter()
        .enumerate()
        .map(|(i, v)| (*v, format!("w{i}")))
        .collect();
    let mut out = Hypergraph::new();
    for v in map.values() {
        out.add_vertex(v.clone()).unwrap();
    }
    let mut edges: Vec<(&EdgeId, _)> = h.edges().collect();
    edges.shuffle(rng);
    for (i, (_, e)) in edges.into_iter().enumerate() {
        out.add_edge(
            format!("f{i}"),
            e.label.clone(),
            e.att.iter().map(|v| VertexId::new(map[v].clone())),
        )
        .unwrap();
    }
    out
}

/// Exhaustive bijection search; the independent oracle for the isomorphism
/// implementation. Only usable for small instances.
pub fn brute_force_isomorphic(h1: &Hypergraph, h2: &Hypergraph) -> bool {
    if h1.vertex_count() != h2.vertex_count() || h1.edge_count() != h2.edge_count() {
        return false;
    }
    let va: Vec<&VertexId> = h1.vertices().collect();
    let vb: Vec<&VertexId> = h2.vertices().collect();
    let n = va.len();
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
    let mut perm: Vec<usize> = (0..n).collect();
    if n == 0 {
        return check(&perm);
    }
    permute(&mut perm, n, &check)
}

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

/// All ordered pairs of distinct edges the bond function composes on.
pub fn bondable_pairs(g: &BondingGrammar, h: &Hypergraph) -> Vec<(EdgeId, EdgeId)> {
    let edges: Vec<(&EdgeId, &Label)> = h.edges().map(|(id, e)| (id, &e.label)).collect();
    let mut out = Vec::new();
    for (a, la) in &edges {
        for (b, lb) in &edges {
            if a != b && g.bond_function().compose(&la.name, &lb.name).is_some() {
                out.push(((*a).clone(), (*b).clone()));
            }
        }
    }
    out
}

/// A random derivation from a random multiplicity vector, allowing
/// disconnected results: every step bonds a uniformly chosen compatible
/// pair anywhere in the hypergraph.
pub fn random_derivation(
    rng: &mut ChaCha8Rng,
    g: &BondingGrammar,
    max_pieces: usize,
    max_steps: usize,
) -> (DerivationTrace, Hypergraph) {
    let k = g.starts().len();
    let mut m = vec![0usize; k];
    let pieces = rng.gen_range(1..=max_pieces);
    for _ in 0..pieces {
        m[rng.gen_range(0..k)] += 1;
    }
    let multiplicity = Multiplicity::new(m);
    let mut h = combine(&multiplicity, g.starts()).unwrap();
    let mut steps = Vec::new();
    for _ in 0..rng.gen_range(0..=max_steps) {
        let pairs = bondable_pairs(g, &h);
        let Some((e1, e2)) = pairs.choose(rng).cloned() else {
            break;
        };
        let (next, result) = bond(&h, &e1, &e2, g.bond_function()).unwrap();
        h = next;
        steps.push(TraceStep {
            first: e1,
            second: e2,
            result,
        });
    }
    (
        DerivationTrace {
            multiplicity,
            steps,
        },
        h,
    )
}
