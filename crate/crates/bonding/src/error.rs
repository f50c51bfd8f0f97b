//! Error type shared across the crate.
//!
//! Every variant carries a stable machine-readable code (see [`Error::code`])
//! so front ends can report the first violation without parsing messages.

use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("unknown vertex `{0}`")]
    UnknownVertex(String),
    #[error("unknown hyperedge `{0}`")]
    UnknownEdge(String),
    #[error("duplicate vertex `{0}`")]
    DuplicateVertex(String),
    #[error("duplicate hyperedge `{0}`")]
    DuplicateEdge(String),
    #[error("unknown label `{0}`")]
    UnknownLabel(String),
    #[error("label `{name}` declared with arity {old} and reused with arity {new}")]
    LabelArityClash { name: String, old: usize, new: usize },
    #[error("hyperedge `{edge}` labeled `{label}` of arity {arity} has {len} attachment vertices")]
    AttachmentLength {
        edge: String,
        label: String,
        arity: usize,
        len: usize,
    },
    #[error("label `{0}` does not have arity 1")]
    NotUnary(String),
    #[error("multiplicity vector has length {got}, expected {expected}")]
    MultiplicityLength { got: usize, expected: usize },

    #[error("alphabets overlap on label `{0}`")]
    AlphabetOverlap(String),
    #[error("bond table maps two pairs to the terminal `{0}`")]
    BondNotInjective(String),
    #[error("bond pair ({left}, {right}) is declared twice")]
    BondPairDuplicate { left: String, right: String },
    #[error("bond ({left}, {right}) -> {result}: arity {got} does not equal {expected}")]
    BondArity {
        left: String,
        right: String,
        result: String,
        got: usize,
        expected: usize,
    },
    #[error("start hypergraph {0} is not connected")]
    StartNotConnected(usize),
    #[error("start hypergraph {0} has no vertices")]
    StartEmpty(usize),
    #[error("start hypergraph {index} uses label `{label}` outside the grammar alphabets")]
    StartLabel { index: usize, label: String },
    #[error("hypergraph uses label `{0}` outside the grammar alphabets")]
    LabelOutsideGrammar(String),

    #[error("cannot bond a hyperedge with itself (`{0}`)")]
    BondSelf(String),
    #[error("bond undefined on labels ({0}, {1})")]
    BondUndefined(String, String),
    #[error("label `{0}` is not produced by the bond function; cannot break")]
    NotBreakable(String),
    #[error("trace step {step}: result identifier `{id}` is already in use")]
    TraceResultTaken { step: usize, id: String },
    #[error("trace step {step}: {source}")]
    TraceStep {
        step: usize,
        #[source]
        source: Box<Error>,
    },
    #[error("{got} breakable hyperedges exceed the oracle bound {bound}")]
    OracleBound { got: usize, bound: usize },
    #[error("no bonding step is applicable")]
    NoApplicableBond,

    #[error("fusion labels ({0}, {1}) are not complementary")]
    FusionMismatch(String, String),

    #[error("domino has two empty strands")]
    EmptyDomino,
    #[error("domino strands disagree in column {0}")]
    StrandMismatch(i64),
    #[error("domino has no paired column")]
    NoPairedColumn,
    #[error("domino is not in the right-extendable class (blunt left end required)")]
    NotRightDomino,
    #[error("sticker system is not regular: {0}")]
    NotRegular(String),

    #[error("graph edge ({0}, {1}) is a loop")]
    GraphLoop(usize, usize),
    #[error("graph edge ({0}, {1}) is declared twice")]
    GraphDuplicateEdge(usize, usize),
    #[error("graph vertex {got} out of range (vertex count {count})")]
    GraphVertexRange { got: usize, count: usize },
    #[error("vertex {vertex} has degree {degree}, above the allowed maximum {max}")]
    DegreeTooHigh {
        vertex: usize,
        degree: usize,
        max: usize,
    },
    #[error("connected component {0} has fewer than three vertices")]
    ComponentTooSmall(usize),
    #[error("graph is not connected")]
    NotConnected,
    #[error("hypergraph is not the encoding of a simple graph: {0}")]
    NotAGraphEncoding(String),

    #[error("malformed input: {0}")]
    Parse(String),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

impl Error {
    /// Stable machine-readable code for this error.
    pub fn code(&self) -> &'static str {
        use Error::*;
        match self {
            UnknownVertex(_) => "unknown_vertex",
            UnknownEdge(_) => "unknown_edge",
            DuplicateVertex(_) => "duplicate_vertex",
            DuplicateEdge(_) => "duplicate_edge",
            UnknownLabel(_) => "unknown_label",
            LabelArityClash { .. } => "label_arity_clash",
            AttachmentLength { .. } => "attachment_length",
            NotUnary(_) => "not_unary",
            MultiplicityLength { .. } => "multiplicity_length",
            AlphabetOverlap(_) => "alphabet_overlap",
            BondNotInjective(_) => "bond_not_injective",
            BondPairDuplicate { .. } => "bond_pair_duplicate",
            BondArity { .. } => "bond_arity",
            StartNotConnected(_) => "start_not_connected",
            StartEmpty(_) => "start_empty",
            StartLabel { .. } => "start_label",
            LabelOutsideGrammar(_) => "label_outside_grammar",
            BondSelf(_) => "bond_self",
            BondUndefined(_, _) => "bond_undefined",
            NotBreakable(_) => "not_breakable",
            TraceResultTaken { .. } => "trace_result_taken",
            TraceStep { .. } => "trace_step",
            OracleBound { .. } => "oracle_bound",
            NoApplicableBond => "no_applicable_bond",
            FusionMismatch(_, _) => "fusion_mismatch",
            EmptyDomino => "empty_domino",
            StrandMismatch(_) => "strand_mismatch",
            NoPairedColumn => "no_paired_column",
            NotRightDomino => "not_right_domino",
            NotRegular(_) => "not_regular",
            GraphLoop(_, _) => "graph_loop",
            GraphDuplicateEdge(_, _) => "graph_duplicate_edge",
            GraphVertexRange { .. } => "graph_vertex_range",
            DegreeTooHigh { .. } => "degree_too_high",
            ComponentTooSmall(_) => "component_too_small",
            NotConnected => "not_connected",
            NotAGraphEncoding(_) => "not_a_graph_encoding",
            Parse(_) => "parse",
            Json(_) => "json",
            Io(_) => "io",
        }
    }
}
