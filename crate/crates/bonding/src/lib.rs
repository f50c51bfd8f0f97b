//! Engine for bonding grammars: a hypergraph-grammar formalism in which two
//! nonterminal hyperedges merge into a single larger hyperedge, modeling how
//! complementary DNA bases pair up without anything vanishing.
//!
//! The crate provides:
//!
//! - the hypergraph algebra ([`hypergraph`]): disjoint union, replication,
//!   quotients, components, degrees, and isomorphism with witnesses;
//! - bonding grammars ([`grammar`], [`builtins`]): the bond function, the
//!   bonding/bond-breaking transformations, and derivation replay;
//! - a certificate-based membership decider with an exhaustive oracle
//!   ([`membership`]);
//! - minimal fusion grammars for comparison ([`fusion`]);
//! - regular sticker systems and their compilation into bonding grammars
//!   ([`sticker`]);
//! - the triangle-partition reduction showing a bonding grammar generates an
//!   NP-complete language ([`triangles`]);
//! - JSON and edge-list serialization ([`json`]).

pub mod builtins;
pub mod error;
pub mod fusion;
pub mod grammar;
pub mod hypergraph;
pub mod id;
pub mod isomorphism;
pub mod json;
pub mod label;
pub mod membership;
pub mod sticker;
pub mod triangles;

#[cfg(test)]
pub(crate) mod testutil;

pub use error::{Error, Result};
pub use grammar::{bond, break_bond, derive, BondFunction, BondingGrammar, DerivationTrace};
pub use hypergraph::{combine, star, Hypergraph, Multiplicity};
pub use id::{EdgeId, VertexId};
pub use isomorphism::{are_isomorphic, isomorphic, IsoWitness};
pub use label::{Alphabet, Label};
pub use membership::{
    in_language, is_generated, membership_oracle, prune_feasibility, verify_certificate,
    MembershipCertificate,
};
