//! Role colorings of graphs.
//!
//! * [`graph`]: simple graphs, the text format, bipartite and chain-graph
//!   recognition.
//! * [`coloring`]: k-role and R-role verification, role graphs.
//! * [`solver`]: exact search, the ground truth for everything else.
//! * [`chain3`]: polynomial 3-role decision on bipartite chain graphs.
//! * [`hypergraph`] and [`reductions`]: hypergraph coloring and the gadget
//!   constructions with their coloring lifts and extractions.
//! * [`generate`]: exhaustive and seeded random instance generators.

pub mod chain3;
pub mod coloring;
pub mod generate;
pub mod graph;
pub mod hypergraph;
pub mod reductions;
pub mod solver;

pub use chain3::{decide_chain3, Chain3Error, ChainCase, ChainDecision};
pub use coloring::{
    check_degree_bound, check_role_connectivity, extract_role_graph, verify_k_role, verify_r_role,
    Color, ColoringError, RoleColoring, RoleGraph, Verdict, Violation,
};
pub use graph::{
    bipartition, chain_structure, is_chain, BipartiteCheck, Bipartition, ChainStructure, Graph,
    GraphError,
};
pub use hypergraph::Hypergraph;
pub use reductions::{GadgetGraph, GadgetKind, VertexRole};
pub use solver::{solve_k_role, solve_r_role, SolveError, SolveMode, SolveResult, SolverConfig};
