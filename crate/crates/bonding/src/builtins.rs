//! Built-in bonding grammars: the pseudotorus grammar and the degree-based
//! grammar families.

use crate::grammar::{BondFunction, BondingGrammar};
use crate::hypergraph::{star, Hypergraph};
use crate::label::{Alphabet, Label};

/// The pseudotorus grammar: one start `&(A, B, C, D)` (four unary
/// nonterminals on a single vertex) with `A ⊗ C = a` and `B ⊗ D = b`. Its
/// terminal language contains all toroidal grid graphs along with
/// Klein-bottle-like twists.
pub fn pseudotori() -> BondingGrammar {
    let n: Alphabet = ["A", "B", "C", "D"].into_iter().map(|s| Label::new(s, 1)).collect();
    let t: Alphabet = ["a", "b"].into_iter().map(|s| Label::new(s, 2)).collect();
    let mut bf = BondFunction::new();
    bf.insert("A", "C", "a").expect("fresh pair");
    bf.insert("B", "D", "b").expect("fresh pair");
    let z1 = star(&[
        Label::new("A", 1),
        Label::new("B", 1),
        Label::new("C", 1),
        Label::new("D", 1),
    ])
    .expect("unary labels");
    BondingGrammar::new(vec![z1], n, t, bf).expect("valid grammar")
}

/// The single-vertex start with `j` incoming markers `I` and `i - j` outgoing
/// markers `O`.
pub fn io_star(i: usize, j: usize) -> Hypergraph {
    assert!(j <= i, "need j <= i");
    let labels: Vec<Label> = std::iter::repeat(Label::new("I", 1))
        .take(j)
        .chain(std::iter::repeat(Label::new("O", 1)).take(i - j))
        .collect();
    star(&labels).expect("unary labels")
}

fn io_alphabets() -> (Alphabet, Alphabet, BondFunction) {
    let n: Alphabet = ["I", "O"].into_iter().map(|s| Label::new(s, 1)).collect();
    let t: Alphabet = [Label::new("b", 2)].into_iter().collect();
    let mut bf = BondFunction::new();
    bf.insert("O", "I", "b").expect("fresh pair");
    (n, t, bf)
}

/// Grammar whose terminal language is the set of connected k-regular directed
/// graphs: starts are the stars with exactly `k` markers each.
pub fn k_regular(k: usize) -> BondingGrammar {
    let (n, t, bf) = io_alphabets();
    let starts: Vec<Hypergraph> = (0..=k).map(|j| io_star(k, j)).collect();
    BondingGrammar::new(starts, n, t, bf).expect("valid grammar")
}

/// Grammar whose terminal language is the set of connected directed graphs of
/// maximum degree at most `k`: the start tuples of all `k_regular(0..=k)`
/// concatenated.
pub fn bounded_degree(k: usize) -> BondingGrammar {
    let (n, t, bf) = io_alphabets();
    let mut starts = Vec::new();
    for i in 0..=k {
        for j in 0..=i {
            starts.push(io_star(i, j));
        }
    }
    BondingGrammar::new(starts, n, t, bf).expect("valid grammar")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::isomorphism::isomorphic;
    use std::collections::BTreeSet;

    #[test]
    fn pseudotori_shape() {
        let g = pseudotori();
        assert_eq!(g.starts().len(), 1);
        let z1 = star(&[
            Label::new("A", 1),
            Label::new("B", 1),
            Label::new("C", 1),
            Label::new("D", 1),
        ])
        .unwrap();
        assert!(isomorphic(&g.starts()[0], &z1).is_some());
        assert_eq!(g.bond_function().compose("A", "C"), Some("a"));
        assert_eq!(g.bond_function().compose("B", "D"), Some("b"));
        assert_eq!(g.bond_function().compose("C", "A"), None);
        assert_eq!(g.starts()[0].degree_set(), BTreeSet::from([4]));
    }

    #[test]
    fn k_regular_two_starts() {
        let g = k_regular(2);
        assert_eq!(g.starts().len(), 3);
        assert!(isomorphic(&g.starts()[0], &io_star(2, 0)).is_some());
        assert!(isomorphic(&g.starts()[1], &io_star(2, 1)).is_some());
        assert!(isomorphic(&g.starts()[2], &io_star(2, 2)).is_some());
        assert_eq!(g.bond_function().compose("O", "I"), Some("b"));
        assert_eq!(g.bond_function().compose("I", "O"), None);
    }

    #[test]
    fn bounded_degree_two_has_six_starts() {
        let g = bounded_degree(2);
        assert_eq!(g.starts().len(), 6);
        // One isolated vertex, then all marker stars of size 1 and 2.
        assert_eq!(g.starts()[0].edge_count(), 0);
        assert_eq!(g.starts()[5].edge_count(), 2);
    }
}
